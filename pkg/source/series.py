#   pyQuiver Series Module

"""Formal-variable containers for vertex algebra computations.

Two forms are provided:
    laurentSeries -- truncated Laurent data in one or two formal variables with gradedPoly coefficients. Every
                     coefficient with all exponents at or below the recorded upper bounds is exact.
    kernelExpression -- an exact finite sum of gradedPoly coefficients times monomials in the symbolic factors
                     z_i, (z_i - z_j) and (z_i + z_j), with integer exponents. This is the truncation-free form of
                     the multi-ary kernels; expanding it into a laurentSeries performs the iota-expansions.
"""

#---- IMPORTS ----
import math
import itertools
from fractions import Fraction
from pyquiver import errors
from pyquiver import utilities
from pyquiver.polynomials import gradedPoly, accumulate, monomialFromDict


#---- TRUNCATED SERIES ----
class laurentSeries(object):
    """Truncated Laurent series in the formal variables.

    variables -- tuple of variable names, e.g. ('z',) or ('y', 'z')
    coefficients -- dict mapping exponent tuples to gradedPoly
    upper -- tuple of the largest exact exponent in each variable
    label -- the class of every coefficient
    """
    def __init__(self, variables, coefficients, upper, label = None):
        self.variables = tuple(variables)
        self.upper = tuple(upper)
        self.label = label
        self.coefficients = {}
        for exponents, poly in coefficients.items():
            if poly.isZero():
                continue
            if any(exponent > bound for exponent, bound in zip(exponents, self.upper)):
                continue
            self.coefficients[tuple(exponents)] = poly.withLabel(label)

    def coefficient(self, *exponents):
        """Returns the coefficient of the given monomial in the formal variables.

        Raises TruncationTooSmall if the monomial lies above the truncation.
        """
        if len(exponents) == 1 and isinstance(exponents[0], tuple):
            exponents = exponents[0]
        for exponent, bound, name in zip(exponents, self.upper, self.variables):
            if exponent > bound:
                raise errors.TruncationTooSmall("Coefficient " + name + "^" + str(exponent) + " requested, series exact only to " + name + "^" + str(bound) + ".")
        return self.coefficients.get(tuple(exponents), gradedPoly.zero(self.label))

    def items(self):
        return sorted(self.coefficients.items())

    def isZero(self):
        return not self.coefficients

    def lowestExponent(self, axis = 0):
        """Returns the smallest exponent of the given variable with a nonzero coefficient, or None."""
        if not self.coefficients:
            return None
        return min(exponents[axis] for exponents in self.coefficients)

    def derivative(self, axis = 0):
        """Returns d/dz of the series in the given variable. The truncation drops by one."""
        coefficients = {}
        for exponents, poly in self.coefficients.items():
            if exponents[axis] == 0:
                continue
            lowered = list(exponents)
            lowered[axis] -= 1
            coefficients[tuple(lowered)] = poly.scale(exponents[axis])
        upper = list(self.upper)
        upper[axis] -= 1
        return laurentSeries(self.variables, coefficients, upper, self.label)

    def reflect(self, axis = 0):
        """Returns the series with z replaced by -z in the given variable."""
        coefficients = dict((exponents, poly.scale(-1 if exponents[axis] % 2 else 1)) for exponents, poly in self.coefficients.items())
        return laurentSeries(self.variables, coefficients, self.upper, self.label)

    def mapCoefficients(self, function, label = None):
        """Applies a linear map to every coefficient."""
        coefficients = dict((exponents, function(poly)) for exponents, poly in self.coefficients.items())
        return laurentSeries(self.variables, coefficients, self.upper, self.label if label is None else label)

    def restricted(self, upper):
        return laurentSeries(self.variables, self.coefficients, [min(a, b) for a, b in zip(upper, self.upper)], self.label)

    def _combine(self, other, sign):
        if self.variables != other.variables:
            raise ValueError("Series in different variables cannot be combined.")
        upper = [min(a, b) for a, b in zip(self.upper, other.upper)]
        coefficients = dict(self.coefficients)
        for exponents, poly in other.coefficients.items():
            if exponents in coefficients:
                coefficients[exponents] = coefficients[exponents] + poly.scale(sign)
            else:
                coefficients[exponents] = poly.scale(sign)
        return laurentSeries(self.variables, coefficients, upper, self.label if self.label is not None else other.label)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.mapCoefficients(lambda poly: -poly)

    def scale(self, scalar):
        return self.mapCoefficients(lambda poly: poly.scale(scalar))

    def mismatches(self, other):
        """Returns the exponent tuples, within the common truncation, at which the two series differ."""
        difference = self - other
        return sorted(difference.coefficients.keys())

    def __eq__(self, other):
        return isinstance(other, laurentSeries) and self.variables == other.variables and not self.mismatches(other)

    __hash__ = None

    def toText(self, vertexNames = None):
        """Returns one line per nonzero coefficient, lowest exponents first, then the truncation line."""
        lines = []
        for exponents, poly in self.items():
            monomial = "*".join(name + "^" + str(exponent) for name, exponent in zip(self.variables, exponents)) or "1"
            lines.append(monomial + ": " + poly.toText(vertexNames))
        lines.append("O(" + ", ".join(name + "^" + str(bound + 1) for name, bound in zip(self.variables, self.upper)) + ")")
        return "\n".join(lines)

    def __repr__(self):
        return self.toText()


#---- KERNELS ----
class kernelExpression(object):
    """An exact sum of gradedPoly coefficients times monomials in symbolic factors.

    factors -- tuple of factor keys: ('-', i, j) for (z_i - z_j), ('+', i, j) for (z_i + z_j), ('z', i) for z_i
    terms -- dict mapping exponent tuples (one exponent per factor) to gradedPoly
    """
    def __init__(self, factors, terms):
        self.factors = tuple(factors)
        self.terms = {}
        for exponents, poly in terms.items():
            if not poly.isZero():
                self.terms[tuple(exponents)] = poly

    def isZero(self):
        return not self.terms

    def factorIndex(self, factor):
        return self.factors.index(factor)

    def applyExp(self, operatorTerms):
        """Returns exp(T) applied to the kernel, T = sum of operator terms.

        operatorTerms -- list of (coefficient, factorExponents, variables): each stands for coefficient times the
                         factor monomial times the product of d/d(variable). Every term must contain a derivative.
        """
        for coefficient, factorExponents, variables in operatorTerms:
            if not variables:
                raise errors.NonNilpotentTerm("Kernel operator term " + repr(factorExponents) + " lowers no degree.")
        result = dict((exponents, dict(poly.terms)) for exponents, poly in self.terms.items())
        current = self.terms
        order = 1
        while current:
            step = {}
            for exponents, poly in current.items():
                present = poly.variables()
                for coefficient, factorExponents, variables in operatorTerms:
                    if any(variable not in present for variable in variables):
                        continue
                    derived = poly.applyDerivatives(variables)
                    if derived.isZero():
                        continue
                    key = tuple(a + b for a, b in zip(exponents, factorExponents))
                    accumulate(step.setdefault(key, {}), derived, Fraction(coefficient, order))
            current = dict((key, gradedPoly(terms)) for key, terms in step.items() if terms)
            for key, poly in current.items():
                accumulate(result.setdefault(key, {}), poly)
            order += 1
        return kernelExpression(self.factors, dict((key, gradedPoly(terms)) for key, terms in result.items()))

    def relabel(self, factors, factorMap, slotMap):
        """Returns the kernel rewritten in new factors and slots.

        factors -- the factor keys of the result
        factorMap -- dict old factor -> (new factor, s) where old = s * new with s = +1 or -1
        slotMap -- dict old slot -> new slot
        """
        terms = {}
        for exponents, poly in self.terms.items():
            newExponents = [0]*len(factors)
            sign = 1
            for factor, exponent in zip(self.factors, exponents):
                target, flip = factorMap[factor]
                newExponents[factors.index(target)] += exponent
                if flip == -1 and exponent % 2:
                    sign = -sign
            renamed = renameSlots(poly, slotMap)
            key = tuple(newExponents)
            accumulate(terms.setdefault(key, {}), renamed, sign)
        return kernelExpression(factors, dict((key, gradedPoly(value)) for key, value in terms.items()))

    def __eq__(self, other):
        if not isinstance(other, kernelExpression) or self.factors != other.factors:
            return False
        return self.terms == other.terms

    __hash__ = None

    def expand(self, variables, forms, translations, upper, substitution, label = None):
        """Expands the kernel into a truncated laurentSeries.

        variables -- names of the formal variables; the first one dominates (the iota-expansion region)
        forms -- dict factor -> tuple of coefficients over the variables, the linear form the factor equals
        translations -- list of (operator, form): the operator (a callable on gradedPoly) is exponentiated against
                        the linear form, exp(form * operator), after the kernel and before substitution
        upper -- largest exponent required in each variable
        substitution -- callable mapping the accumulated kernel polynomial to the output polynomial
        label -- class label of the output
        """
        count = len(variables)
        accumulated = {}
        for exponents, poly in self.terms.items():
            coefficient = Fraction(1)
            base = [0]*count
            mixed = []
            for factor, exponent in zip(self.factors, exponents):
                if exponent == 0:
                    continue
                form = forms[factor]
                support = [axis for axis, value in enumerate(form) if value]
                if not support:
                    raise ValueError("Factor " + repr(factor) + " vanishes at the requested point.")
                if len(support) == 1:
                    axis = support[0]
                    coefficient *= Fraction(form[axis])**exponent
                    base[axis] += exponent
                elif count == 2:
                    mixed.append((form, exponent))
                else:
                    raise ValueError("Mixed factors need exactly two formal variables.")
            if any(base[axis] > upper[axis] for axis in range(count) if axis > 0):
                continue
            budget = upper[1] - base[1] if count == 2 else 0
            translated = {}
            for split in boundedTuples(len(mixed), budget):
                term = coefficient
                shift = list(base)
                for (form, exponent), secondary in zip(mixed, split):
                    term *= utilities.binomial(exponent, secondary)*Fraction(form[0])**(exponent - secondary)*Fraction(form[1])**secondary
                    shift[0] += exponent - secondary
                    shift[1] += secondary
                if not term or any(shift[axis] > upper[axis] for axis in range(count)):
                    continue
                room = tuple(upper[axis] - shift[axis] for axis in range(count))
                if room not in translated:
                    translated[room] = translateWithin(poly, translations, room)
                for offsets, translatedPoly in translated[room].items():
                    key = tuple(shift[axis] + offsets[axis] for axis in range(count))
                    accumulate(accumulated.setdefault(key, {}), translatedPoly, term)
        coefficients = {}
        for key, terms in accumulated.items():
            if terms:
                coefficients[key] = substitution(gradedPoly(terms))
        return laurentSeries(variables, coefficients, upper, label)


def renameSlots(poly, slotMap):
    """Renames the slot of every variable. Variables that meet under the renaming multiply."""
    terms = {}
    for monomial, coefficient in poly.terms.items():
        exponents = {}
        for variable, exponent in monomial:
            key = (slotMap.get(variable[0], variable[0]), variable[1], variable[2])
            exponents[key] = exponents.get(key, 0) + exponent
        renamed = monomialFromDict(exponents)
        terms[renamed] = terms.get(renamed, 0) + coefficient
    return gradedPoly(terms, poly.label)

def boundedTuples(length, budget):
    """Yields every tuple of nonnegative integers of the given length with sum at most budget."""
    if length == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in boundedTuples(length - 1, budget - first):
            yield (first,) + rest

def boundedSplits(total, caps):
    """Yields tuples (r_1, ..., r_s) with sum total and r_i <= caps[i]."""
    if not caps:
        if total == 0:
            yield ()
        return
    for first in range(min(total, caps[0]) + 1):
        for rest in boundedSplits(total - first, caps[1:]):
            yield (first,) + rest

def translateWithin(poly, translations, room):
    """Returns exp(sum of form*operator) applied to poly, as a dict offsets -> gradedPoly with offsets <= room."""
    count = len(room)
    entries = {(0,)*count: poly}
    for operator, form in translations:
        support = [axis for axis, value in enumerate(form) if value]
        if not support:
            continue
        updated = {}
        for offsets, current in entries.items():
            available = [room[axis] - offsets[axis] for axis in support]
            limit = sum(max(value, 0) for value in available)
            order = 0
            while True:
                for split in boundedSplits(order, available):
                    scalar = Fraction(1)
                    shifted = list(offsets)
                    for axis, power in zip(support, split):
                        scalar *= Fraction(form[axis])**power/math.factorial(power)
                        shifted[axis] += power
                    accumulate(updated.setdefault(tuple(shifted), {}), current, scalar)
                order += 1
                if order > limit:
                    break
                current = operator(current)
                if current.isZero():
                    break
        entries = dict((key, gradedPoly(terms)) for key, terms in updated.items() if terms)
    return entries
