#   pyQuiver Polynomials Module

"""Exact sparse graded polynomials over the rationals.

Homology of the quiver moduli stacks is modelled by polynomial rings in generators s[sector, i, k]. A generator of
level k has homological degree 2k. Cohomology classes act on these polynomials by differentiation (the cap product),
and the Chern-character utilities at the bottom of this module produce such cohomology classes.

A variable is a tuple (slot, vertex, k). The slot is a string naming the sector of an element ('ORD' for the ordinary
vertex algebra, 'SD' for the twisted module) or, inside kernel computations, the input it belongs to.
"""

#---- IMPORTS ----
import re
import math
from fractions import Fraction
from pyquiver import errors
from pyquiver import utilities

ORD = 'ORD'
SD = 'SD'


#---- MONOMIALS ----
def monomialDegree(monomial):
    """Returns the homological degree sum(2k * exponent) of a monomial."""
    return sum(2*variable[2]*exponent for variable, exponent in monomial)

def monomialFromDict(exponents):
    return tuple(sorted((variable, exponent) for variable, exponent in exponents.items() if exponent))

def multiplyMonomials(first, second):
    exponents = dict(first)
    for variable, exponent in second:
        exponents[variable] = exponents.get(variable, 0) + exponent
    return monomialFromDict(exponents)

def monomialSortKey(monomial):
    """Graded-lexicographic key: degree first, then the sorted (variable, exponent) tuple."""
    return (monomialDegree(monomial), monomial)

def accumulate(target, poly, scalar = 1):
    """Adds scalar*poly into the term dictionary target, in place."""
    for monomial, coefficient in poly.terms.items():
        value = target.get(monomial, 0) + coefficient*scalar
        if value:
            target[monomial] = value
        else:
            target.pop(monomial, None)


#---- POLYNOMIALS ----
class gradedPoly(object):
    """A sparse polynomial with Fraction coefficients in the generators s[slot, vertex, k].

    terms -- dict mapping monomials (sorted tuples of (variable, exponent)) to coefficients
    label -- the class (a dimension vector) this polynomial lives over, or None

    Zero coefficients are never stored. Instances are treated as immutable.
    """
    __slots__ = ('terms', 'label')

    def __init__(self, terms = None, label = None):
        self.terms = {}
        if terms:
            for monomial, coefficient in terms.items():
                if coefficient:
                    self.terms[monomial] = Fraction(coefficient)
        self.label = label

    @classmethod
    def constant(cls, value, label = None):
        return cls({(): value}, label)

    @classmethod
    def variable(cls, variable, label = None):
        return cls({((variable, 1),): 1}, label)

    @classmethod
    def zero(cls, label = None):
        return cls({}, label)

    def withLabel(self, label):
        result = gradedPoly(label = label)
        result.terms = dict(self.terms)
        return result

    #-- arithmetic --
    def _coerce(self, other):
        if isinstance(other, gradedPoly):
            return other
        return gradedPoly.constant(other, self.label)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            value = terms.get(monomial, 0) + coefficient
            if value:
                terms[monomial] = value
            else:
                terms.pop(monomial, None)
        result = gradedPoly(label = self.label if self.label is not None else other.label)
        result.terms = terms
        return result

    __radd__ = __add__

    def __neg__(self):
        result = gradedPoly(label = self.label)
        result.terms = dict((monomial, -coefficient) for monomial, coefficient in self.terms.items())
        return result

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, scalar):
        scalar = Fraction(scalar)
        result = gradedPoly(label = self.label)
        if scalar:
            result.terms = dict((monomial, coefficient*scalar) for monomial, coefficient in self.terms.items())
        return result

    def __mul__(self, other):
        if not isinstance(other, gradedPoly):
            return self.scale(other)
        terms = {}
        for firstMonomial, firstCoefficient in self.terms.items():
            for secondMonomial, secondCoefficient in other.terms.items():
                monomial = multiplyMonomials(firstMonomial, secondMonomial)
                terms[monomial] = terms.get(monomial, 0) + firstCoefficient*secondCoefficient
        return gradedPoly(terms, self.label if self.label is not None else other.label)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, scalar):
        return self.scale(Fraction(1)/Fraction(scalar))

    def __pow__(self, exponent):
        result = gradedPoly.constant(1, self.label)
        for step in range(exponent):
            result = result*self
        return result

    def __eq__(self, other):
        if not isinstance(other, gradedPoly):
            if self.isConstant():
                return self.constantTerm() == other
            return False
        return self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    #-- queries --
    def isZero(self):
        return not self.terms

    def isConstant(self):
        return all(monomial == () for monomial in self.terms)

    def constantTerm(self):
        return self.terms.get((), Fraction(0))

    def coefficient(self, monomial):
        return self.terms.get(monomial, Fraction(0))

    def variables(self):
        found = set()
        for monomial in self.terms:
            for variable, exponent in monomial:
                found.add(variable)
        return found

    def homogeneousComponents(self):
        """Returns a dict mapping homological degree to the homogeneous component of that degree."""
        components = {}
        for monomial, coefficient in self.terms.items():
            components.setdefault(monomialDegree(monomial), {})[monomial] = coefficient
        return dict((degree, gradedPoly(terms, self.label)) for degree, terms in components.items())

    def isHomogeneous(self):
        return len(set(monomialDegree(monomial) for monomial in self.terms)) <= 1

    def homogeneousDegree(self):
        """Returns the homological degree of a homogeneous polynomial, or None for zero."""
        degrees = set(monomialDegree(monomial) for monomial in self.terms)
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError("Polynomial is not homogeneous.")
        return degrees.pop()

    def maxDegree(self):
        return max([monomialDegree(monomial) for monomial in self.terms] or [0])

    def sortedTerms(self):
        """Returns the (monomial, coefficient) pairs in canonical order, highest monomial first."""
        return sorted(self.terms.items(), key = lambda item: monomialSortKey(item[0]), reverse = True)

    #-- differentiation --
    def derivative(self, variable):
        terms = {}
        for monomial, coefficient in self.terms.items():
            exponents = dict(monomial)
            exponent = exponents.get(variable, 0)
            if not exponent:
                continue
            exponents[variable] = exponent - 1
            reduced = monomialFromDict(exponents)
            terms[reduced] = terms.get(reduced, 0) + coefficient*exponent
        return gradedPoly(terms, self.label)

    def applyDerivatives(self, variables):
        """Applies d/d(variable) for each variable in sequence (repeats allowed)."""
        result = self
        for variable in variables:
            if result.isZero():
                break
            result = result.derivative(variable)
        return result

    #-- substitution --
    def substitute(self, rules, label = None):
        """Returns the image of this polynomial under the ring homomorphism given by rules.

        rules -- dict, or callable, mapping each variable to a gradedPoly (or a scalar)
        label -- label of the result

        Raises MissingRule if a variable has no image.
        """
        images = {}
        powers = {}
        def image(variable):
            if variable not in images:
                if callable(rules):
                    value = rules(variable)
                else:
                    value = rules.get(variable)
                if value is None:
                    raise errors.MissingRule("No substitution rule for variable " + repr(variable) + ".")
                if not isinstance(value, gradedPoly):
                    value = gradedPoly.constant(value)
                images[variable] = value
            return images[variable]
        def power(variable, exponent):
            key = (variable, exponent)
            if key not in powers:
                powers[key] = image(variable)**exponent
            return powers[key]
        terms = {}
        for monomial, coefficient in self.terms.items():
            term = gradedPoly.constant(coefficient)
            for variable, exponent in monomial:
                term = term*power(variable, exponent)
                if term.isZero():
                    break
            accumulate(terms, term)
        return gradedPoly(terms, label)

    def renameSlot(self, slot, label = None):
        """Returns a copy with every variable moved to the given slot."""
        terms = {}
        for monomial, coefficient in self.terms.items():
            renamed = monomialFromDict(dict(((slot, variable[1], variable[2]), exponent) for variable, exponent in monomial))
            terms[renamed] = terms.get(renamed, 0) + coefficient
        return gradedPoly(terms, self.label if label is None else label)

    #-- text --
    def toText(self, vertexNames = None):
        """Returns the canonical text form, e.g. '1/2*s[SD,1,1]^2 - 3*s[ORD,2,1] + 1'."""
        if self.isZero():
            return "0"
        pieces = []
        for monomial, coefficient in self.sortedTerms():
            factors = [variableText(variable, exponent, vertexNames) for variable, exponent in monomial]
            magnitude = abs(coefficient)
            if not factors:
                body = utilities.formatRational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = utilities.formatRational(magnitude) + "*" + "*".join(factors)
            if not pieces:
                pieces.append(("-" if coefficient < 0 else "") + body)
            else:
                pieces.append((" - " if coefficient < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return self.toText()


def variableText(variable, exponent = 1, vertexNames = None):
    slot, vertex, level = variable
    name = vertexNames[vertex] if vertexNames is not None else str(vertex)
    text = "s[" + str(slot) + "," + name + "," + str(level) + "]"
    if exponent != 1:
        text += "^" + str(exponent)
    return text

_variablePattern = re.compile(r'^s\[([A-Za-z0-9_]+),([^,\[\]]+),(\d+)\](?:\^(\d+))?$')
_rationalPattern = re.compile(r'^\d+(/\d+)?$')

def parsePoly(text, vertexNames = None, label = None):
    """Parses the canonical text form produced by gradedPoly.toText.

    vertexNames -- the names used when printing; if None vertices are integer indices.
    """
    text = text.strip()
    if text == "0":
        return gradedPoly.zero(label)
    vertexIndex = dict((name, index) for index, name in enumerate(vertexNames)) if vertexNames is not None else None
    chunks = text.replace(" - ", " + -").split(" + ")
    terms = {}
    for chunk in chunks:
        chunk = chunk.strip()
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:]
        coefficient = Fraction(sign)
        exponents = {}
        for factor in chunk.split("*"):
            if _rationalPattern.match(factor):
                coefficient *= Fraction(factor)
                continue
            match = _variablePattern.match(factor)
            if not match:
                raise errors.ParseError("malformed polynomial factor '" + factor + "'")
            slot, name, level, exponent = match.groups()
            if vertexIndex is not None:
                if name not in vertexIndex:
                    raise errors.ParseError("unknown vertex '" + name + "' in polynomial")
                vertex = vertexIndex[name]
            else:
                vertex = int(name)
            variable = (slot, vertex, int(level))
            exponents[variable] = exponents.get(variable, 0) + int(exponent or 1)
        monomial = monomialFromDict(exponents)
        terms[monomial] = terms.get(monomial, 0) + coefficient
    return gradedPoly(terms, label)


#---- CAP PRODUCT AND PAIRING ----
def cap(cohomologyClass, poly, classEntries = None):
    """Returns poly capped with a cohomology class, P(d/ds)(poly).

    cohomologyClass -- a gradedPoly whose variable (slot, i, k) stands for S[i, k]. Level-0 variables stand for
                       the rank S[i, 0], which acts as multiplication by classEntries[i].
    poly -- the homology polynomial
    classEntries -- the dimension vector of the class, needed only when level-0 variables occur

    Raises ClassMismatch if both operands carry different labels.
    """
    if cohomologyClass.label is not None and poly.label is not None and cohomologyClass.label != poly.label:
        raise errors.ClassMismatch("Cannot cap classes " + repr(cohomologyClass.label) + " and " + repr(poly.label) + ".")
    terms = {}
    for monomial, coefficient in cohomologyClass.terms.items():
        scalar = Fraction(coefficient)
        derivatives = []
        for variable, exponent in monomial:
            if variable[2] == 0:
                scalar *= Fraction(classEntries[variable[1]])**exponent
            else:
                derivatives.extend([variable]*exponent)
        if scalar:
            accumulate(terms, poly.applyDerivatives(derivatives), scalar)
    return gradedPoly(terms, poly.label)

def pairing(cohomologyClass, poly, classEntries = None):
    """Returns the pairing of a cohomology class with a homology polynomial, the constant term of the cap product."""
    return cap(cohomologyClass, poly, classEntries).constantTerm()


#---- EXPONENTIAL OPERATORS ----
def applyExpOperator(terms, poly):
    """Applies exp(sum of terms) to poly.

    terms -- list of (coefficient, variables) pairs, each standing for coefficient * product of d/d(variable).
             Scalar factors (the level-0 derivatives) must already be folded into the coefficient.

    Raises NonNilpotentTerm if a term contains no derivative.
    """
    for coefficient, variables in terms:
        if not variables:
            raise errors.NonNilpotentTerm("Operator term with coefficient " + str(coefficient) + " lowers no degree.")
    result = dict(poly.terms)
    current = poly
    order = 1
    while not current.isZero():
        step = {}
        for coefficient, variables in terms:
            accumulate(step, current.applyDerivatives(variables), coefficient)
        current = gradedPoly(step, poly.label).scale(Fraction(1, order))
        accumulate(result, current)
        order += 1
    return gradedPoly(result, poly.label)


#---- TRANSLATION ----
def translationDerivative(poly, slot, classVector):
    """Applies the translation operator D = sum_i alpha_i s_i,1 + sum_(i,k) s_i,k+1 d/ds_i,k to the variables of a slot.

    classVector -- the class alpha of the slot
    """
    terms = {}
    linear = [vertex for vertex, entry in enumerate(classVector) if entry]
    for monomial, coefficient in poly.terms.items():
        exponents = dict(monomial)
        for vertex in linear:
            variable = (slot, vertex, 1)
            raised = dict(exponents)
            raised[variable] = raised.get(variable, 0) + 1
            key = monomialFromDict(raised)
            terms[key] = terms.get(key, 0) + coefficient*classVector[vertex]
        for variable, exponent in monomial:
            if variable[0] != slot:
                continue
            shifted = dict(exponents)
            shifted[variable] = exponent - 1
            nextVariable = (slot, variable[1], variable[2] + 1)
            shifted[nextVariable] = shifted.get(nextVariable, 0) + 1
            key = monomialFromDict(shifted)
            terms[key] = terms.get(key, 0) + coefficient*exponent
    return gradedPoly(terms, poly.label)


#---- CHERN CHARACTERS ----
def asPoly(value):
    return value if isinstance(value, gradedPoly) else gradedPoly.constant(value)

def chernSeriesFromCharacter(character, order):
    """Returns the coefficients [c_0, ..., c_order] of c_z(E) = exp(sum_n (-1)^(n-1) (n-1)! z^n ch_n(E)).

    character -- list [ch_0, ch_1, ...] of gradedPoly or rationals; missing entries are zero.
    """
    arguments = [gradedPoly.zero()]
    for level in range(1, order + 1):
        value = asPoly(character[level]) if level < len(character) else gradedPoly.zero()
        sign = 1 if level % 2 else -1
        arguments.append(value.scale(sign*math.factorial(level - 1)))
    #E_m = (1/m) sum_n n a_n E_(m-n)
    series = [gradedPoly.constant(1)]
    for degree in range(1, order + 1):
        total = gradedPoly.zero()
        for level in range(1, degree + 1):
            if not arguments[level].isZero():
                total = total + (arguments[level]*series[degree - level]).scale(level)
        series.append(total.scale(Fraction(1, degree)))
    return series

def characterProduct(first, second, order):
    """Returns ch(E (x) F) truncated at the given order."""
    result = []
    for degree in range(order + 1):
        total = gradedPoly.zero()
        for level in range(degree + 1):
            if level < len(first) and degree - level < len(second):
                total = total + asPoly(first[level])*asPoly(second[degree - level])
        result.append(total)
    return result

def characterSum(first, second, order):
    return [(asPoly(first[level]) if level < len(first) else gradedPoly.zero())
            + (asPoly(second[level]) if level < len(second) else gradedPoly.zero()) for level in range(order + 1)]

def dualCharacter(character):
    """Returns ch(E^dual), with ch_k(E^dual) = (-1)^k ch_k(E)."""
    return [asPoly(value).scale(-1 if level % 2 else 1) for level, value in enumerate(character)]

def adamsSquare(character):
    """Returns the character twisted by the second Adams operation, ch_k -> 2^k ch_k."""
    return [asPoly(value).scale(2**level) for level, value in enumerate(character)]

def sym2Wedge2Character(character, order):
    """Returns (ch Sym^2 E, ch Wedge^2 E) = (1/2 (ch(E)^2 + psi^2 ch(E)), 1/2 (ch(E)^2 - psi^2 ch(E)))."""
    square = characterProduct(character, character, order)
    twisted = adamsSquare(list(character[:order + 1]) + [0]*max(0, order + 1 - len(character)))
    symmetric = [(square[level] + twisted[level]).scale(Fraction(1, 2)) for level in range(order + 1)]
    alternating = [(square[level] - twisted[level]).scale(Fraction(1, 2)) for level in range(order + 1)]
    return symmetric, alternating


#---- RANDOM ELEMENTS ----
def randomMonomial(levels, degree, rng):
    """Returns a random monomial of the given homological degree, or None if none exists.

    levels -- list of allowed variables (slot, vertex, k)
    """
    remaining = degree//2
    exponents = {}
    while remaining > 0:
        candidates = [variable for variable in levels if variable[2] <= remaining]
        if not candidates:
            return None
        variable = rng.choice(candidates)
        exponents[variable] = exponents.get(variable, 0) + 1
        remaining -= variable[2]
    return monomialFromDict(exponents)

def randomPoly(levels, degree, rng, termCount = 3, label = None):
    """Returns a random homogeneous polynomial with small integer coefficients.

    levels -- list of allowed variables
    degree -- the homological degree (even)
    rng -- a random.Random instance
    """
    terms = {}
    for attempt in range(4*termCount):
        if len(terms) >= termCount:
            break
        monomial = randomMonomial(levels, degree, rng)
        if monomial is None:
            continue
        terms[monomial] = terms.get(monomial, 0) + rng.choice([-3, -2, -1, 1, 2, 3])
    return gradedPoly(terms, label)
