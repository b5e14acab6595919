#   pyQuiver Vertex Module

"""The graded vertex algebra on the homology of the moduli stack of quiver representations.

Elements of class alpha are polynomials in the generators s[ORD, i, k]. The state-field map is computed from the
closed formula for quivers: a sign and a power of z from the Euler form, an exponential of bidifferential operators
with coefficients from the matrix C, the translation exponential on the first input, and the direct sum pushforward.
The multi-ary kernels X_n are built symbolically and expanded on demand, which gives truncation-free symmetry tests
and the iota-expansions used by the associativity checks.
"""

#---- IMPORTS ----
import math
import random
import itertools
from fractions import Fraction
from pyquiver import config
from pyquiver import errors
from pyquiver import quivers
from pyquiver import utilities
from pyquiver.polynomials import gradedPoly, ORD, translationDerivative, randomPoly
from pyquiver.series import kernelExpression, laurentSeries, renameSlots


def slotName(index):
    return 'a' + str(index)

def alternatingSign(power):
    """Returns (-1)^power for any integer power."""
    return -1 if power % 2 else 1


#---- ELEMENTS ----
class vaElement(object):
    """An element of the vertex algebra: a class alpha and a polynomial in the ORD generators."""
    def __init__(self, alpha, poly = None):
        self.alpha = quivers.dimensionVector(alpha)
        if poly is None:
            poly = gradedPoly.constant(1)
        self.poly = poly.withLabel(self.alpha)

    def homologicalDegree(self):
        return self.poly.homogeneousDegree()

    def shiftedDegree(self, target):
        """Returns the degree in the shifted grading, homological degree + chi-hat(alpha)."""
        return self.homologicalDegree() + target.chiHat(self.alpha)

    def isZero(self):
        return self.poly.isZero()

    def _check(self, other):
        if self.alpha != other.alpha:
            raise errors.ClassMismatch("Elements of classes " + repr(self.alpha) + " and " + repr(other.alpha) + " cannot be added.")

    def __add__(self, other):
        self._check(other)
        return vaElement(self.alpha, self.poly + other.poly)

    def __sub__(self, other):
        self._check(other)
        return vaElement(self.alpha, self.poly - other.poly)

    def scale(self, scalar):
        return vaElement(self.alpha, self.poly.scale(scalar))

    def __eq__(self, other):
        return isinstance(other, vaElement) and self.alpha == other.alpha and self.poly == other.poly

    __hash__ = None

    def toText(self, vertexNames = None):
        return repr(self.alpha) + ": " + self.poly.toText(vertexNames)

    def __repr__(self):
        return self.toText()


#---- OPERATOR TERMS ----
def ordinaryLevels(poly, slot, classVector):
    """Returns the derivative slots of an input: (vertex, k, variable, scalar) for every variable of the slot present in
    poly, plus (vertex, 0, None, alpha_vertex) for the level-0 derivatives, which act as the class entries.
    """
    levels = sorted((variable[1], variable[2], variable, 1) for variable in poly.variables() if variable[0] == slot)
    levels.extend((vertex, 0, None, entry) for vertex, entry in enumerate(classVector) if entry)
    return levels

def pairedTerms(matrix, firstLevels, secondLevels, factorCount, position, scale = 1):
    """Yields the operator terms (-1)^(k-1) (k+k'-1)! M[v][v'] d_(v,k) d'_(v',k') (factor)^(-(k+k')).

    matrix -- the coefficient matrix M, indexed by the level vertices
    firstLevels, secondLevels -- lists of (vertex, k, variable, scalar) as returned by ordinaryLevels
    factorCount, position -- the number of kernel factors and the position of the factor carrying the pole
    """
    for vertex, level, variable, scalar in firstLevels:
        for otherVertex, otherLevel, otherVariable, otherScalar in secondLevels:
            order = level + otherLevel
            if order == 0:
                continue
            entry = matrix[vertex][otherVertex]
            if not entry:
                continue
            coefficient = Fraction(scale)*alternatingSign(level - 1)*math.factorial(order - 1)*entry*scalar*otherScalar
            exponents = [0]*factorCount
            exponents[position] = -order
            yield (coefficient, tuple(exponents), tuple(item for item in (variable, otherVariable) if item is not None))


#---- VERTEX ALGEBRA ----
class vertexAlgebra(object):
    """The vertex algebra of a quiver.

    target -- a quiver (a selfDualQuiver is needed for the involution)
    """
    def __init__(self, target, name = None):
        self._name_ = name
        self.quiver = target
        self.cartan = target.cartanMatrix()

    def element(self, alpha, poly = None):
        return vaElement(self.quiver.vector(alpha), poly)

    def vacuum(self, alpha = None):
        """Returns 1^alpha, the unit class (the vacuum for alpha = 0)."""
        if alpha is None:
            alpha = self.quiver.zero()
        return vaElement(alpha)

    def translationOperator(self, slot, alpha):
        return lambda poly: translationDerivative(poly, slot, alpha)

    def translate(self, element):
        """Returns D(A)."""
        return vaElement(element.alpha, translationDerivative(element.poly, ORD, element.alpha))

    def oplus(self, first, second):
        """Returns the direct sum pushforward of A (x) B, in class alpha + beta."""
        return vaElement(first.alpha + second.alpha, first.poly*second.poly)

    def involution(self, element):
        """Returns A^dual, substituting s[i, k] -> (-1)^k s[i^dual, k]."""
        target = self.quiver
        dualClass = target.dual(element.alpha)
        def rule(variable):
            return gradedPoly.variable((ORD, target.dualVertex[variable[1]], variable[2])).scale(alternatingSign(variable[2]))
        return vaElement(dualClass, element.poly.substitute(rule, dualClass))

    #-- kernels --
    def xKernel(self, elements):
        """Returns the exact kernel of X_n(A_1, ..., A_n) before translation and pushforward.

        The kernel has factors (z_i - z_j) for i < j. The input A_i lives in slot 'a<i>'.
        """
        count = len(elements)
        if count > config.kernelArityBound():
            raise errors.Unbounded("Kernel arity " + str(count) + " exceeds the configured bound " + str(config.kernelArityBound()) + ".")
        pairs = list(itertools.combinations(range(count), 2))
        factors = [('-', first, second) for first, second in pairs]
        classes = [element.alpha for element in elements]
        exponents = tuple(self.quiver.chiSym(classes[first], classes[second]) for first, second in pairs)
        poly = gradedPoly.constant(self.quiver.epsilonMulti(classes))
        for index, element in enumerate(elements):
            poly = poly*element.poly.renameSlot(slotName(index))
        levels = [ordinaryLevels(poly, slotName(index), classes[index]) for index in range(count)]
        operators = []
        for position, (first, second) in enumerate(pairs):
            operators.extend(pairedTerms(self.cartan, levels[first], levels[second], len(factors), position))
        return kernelExpression(factors, {exponents: poly}).applyExp(operators)

    def pushforward(self, slots, label):
        """Returns the substitution sending every slot variable to the ORD generator of the total class."""
        slotMap = dict((slot, ORD) for slot in slots)
        return lambda poly: renameSlots(poly, slotMap).withLabel(label)

    def xSeries(self, elements, variables, points, upper):
        """Expands X_n(A_1, ..., A_n; z_1, ..., z_n) with z_i given as linear forms in the formal variables.

        variables -- names of the formal variables, dominant first
        points -- points[i] is the tuple of coefficients of z_i over the variables
        upper -- largest exponent required in each variable
        """
        kernel = self.xKernel(elements)
        forms = {}
        for factor in kernel.factors:
            kind, first, second = factor
            forms[factor] = tuple(a - b for a, b in zip(points[first], points[second]))
        translations = [(self.translationOperator(slotName(index), element.alpha), tuple(points[index]))
                        for index, element in enumerate(elements) if any(points[index])]
        total = self.quiver.zero()
        for element in elements:
            total = total + element.alpha
        substitution = self.pushforward([slotName(index) for index in range(len(elements))], total)
        return kernel.expand(variables, forms, translations, upper, substitution, total)

    def Y(self, first, second, zmax = None):
        """Returns Y(A, z)B as a laurentSeries in z, exact through z^zmax."""
        if zmax is None:
            zmax = config.defaultZmax()
        return self.xSeries([first, second], ('z',), [(1,), (0,)], (zmax,))

    def coefficientElement(self, series, exponents):
        return vaElement(series.label, series.coefficient(exponents))

    def residue(self, first, second):
        """Returns the coefficient of z^-1 in Y(A, z)B, which represents the Lie bracket."""
        return self.coefficientElement(self.Y(first, second, zmax = -1), (-1,))

    #-- random elements --
    def generatorLevels(self, cap, alpha = None):
        """Returns the generators s[i, k] of degree at most cap, restricted to the support of alpha when given."""
        vertices = [vertex for vertex in range(self.quiver.vertexCount()) if alpha is None or alpha[vertex]]
        return [(ORD, vertex, level) for vertex in vertices for level in range(1, cap//2 + 1)]

    def randomElement(self, alpha, cap, rng):
        """Returns a seeded random homogeneous element of class alpha and homological degree at most cap."""
        degree = 2*rng.randint(0, cap//2)
        levels = self.generatorLevels(cap, alpha)
        if degree == 0 or not levels:
            return vaElement(alpha, gradedPoly.constant(rng.choice([-2, -1, 1, 2, 3])))
        poly = randomPoly(levels, degree, rng)
        if poly.isZero():
            poly = gradedPoly.constant(1)
        return vaElement(alpha, poly)

    def randomClass(self, rng, maxTotal = 2, allowZero = True):
        candidates = list(quivers.vectorsOfTotalAtMost(self.quiver.vertexCount(), maxTotal))
        if allowZero:
            candidates.append(self.quiver.zero())
        return rng.choice(candidates)


#---- AXIOM CHECKS ----
class axiomReport(object):
    """Collects the outcome of every identity tried by an axiom checker."""
    def __init__(self, name, seed, trials):
        self._name_ = name
        self.seed = seed
        self.trials = trials
        self.results = {}
        self.failures = []

    def record(self, identity, passed, transcript = None):
        counts = self.results.setdefault(identity, [0, 0])
        counts[0] += 1
        if not passed:
            counts[1] += 1
            self.failures.append((identity, transcript))
            utilities.debugNotice(self, 'axioms', identity + " FAILED")

    def passed(self):
        return not self.failures

    def raiseOnFailure(self):
        if self.failures:
            identity, transcript = self.failures[0]
            raise errors.AxiomViolation("Identity '" + identity + "' failed.", transcript)

    def toText(self):
        lines = [utilities.objectIdentifier(self) + " (seed " + str(self.seed) + ", " + str(self.trials) + " trials)"]
        for identity in sorted(self.results):
            count, failed = self.results[identity]
            lines.append("  " + identity + ": " + ("PASS" if not failed else "FAIL") + " (" + str(count) + " checks, " + str(failed) + " failures)")
        return "\n".join(lines)


def transcript(vertexNames, **items):
    lines = []
    for key in sorted(items):
        value = items[key]
        text = value.toText(vertexNames) if hasattr(value, 'toText') else repr(value)
        lines.append(key + " = " + text.replace("\n", "\n    "))
    return "\n".join(lines)


def isGraded(series, shift):
    """True if the z^n coefficient of a single-variable series is zero or homogeneous of degree shift + 2n."""
    return all(poly.isZero() or (poly.isHomogeneous() and poly.homogeneousDegree() == shift + 2*exponents[0])
               for exponents, poly in series.items())

def permutedKernelMatches(build, elements, permutation):
    """Checks that the kernel of the permuted inputs equals the kernel of the inputs with variables permuted.

    build -- callable taking the list of inputs and returning a kernelExpression
    permutation -- position i of the permuted inputs holds input permutation[i]
    """
    base = build(elements)
    permuted = build([elements[index] for index in permutation])
    factorMap = {}
    for factor in permuted.factors:
        if factor[0] == 'z':
            factorMap[factor] = (('z', permutation[factor[1]]), 1)
            continue
        kind, first, second = factor
        first, second = permutation[first], permutation[second]
        flip = -1 if (kind == '-' and first > second) else 1
        factorMap[factor] = ((kind, min(first, second), max(first, second)), flip)
    slotMap = dict((slotName(index), slotName(permutation[index])) for index in range(len(elements)))
    return permuted.relabel(base.factors, factorMap, slotMap) == base


def checkAxioms(target, cap = None, trials = 25, seed = None, zmax = None, window = 1):
    """Verifies the vertex algebra axioms on seeded random homogeneous elements.

    target -- the quiver
    cap -- homological degree cap of the random elements
    trials -- number of random trials
    seed -- random seed
    zmax -- truncation of the single-variable series
    window -- largest exponent compared in the two-variable associativity checks

    Returns an axiomReport; the caller decides whether to raise on failure (report.raiseOnFailure()).
    """
    cap = config.degreeCap() if cap is None else cap
    seed = config.defaultSeed() if seed is None else seed
    zmax = config.axiomZmax() if zmax is None else zmax
    rng = random.Random(seed)
    algebra = vertexAlgebra(target)
    names = target.vertexNames
    report = axiomReport("vertex algebra axioms", seed, trials)
    isSelfDual = isinstance(target, quivers.selfDualQuiver)
    for trial in range(trials):
        classes = [algebra.randomClass(rng) for index in range(3)]
        first, second, third = [algebra.randomElement(alpha, cap, rng) for alpha in classes]
        vacuum = algebra.vacuum()
        utilities.debugNotice(report, 'axioms', "trial " + str(trial) + ": classes " + repr(classes))

        #identity
        series = algebra.Y(vacuum, second, zmax)
        expected = laurentSeries(('z',), {(0,): second.poly}, (zmax,))
        report.record("identity Y(1,z)B = B", series == expected, transcript(names, B = second, series = series))
        series = algebra.Y(first, vacuum, zmax)
        creation = (series.lowestExponent() is None or series.lowestExponent() >= 0) and series.coefficient(0) == first.poly
        report.record("creation Y(A,z)1 = A + O(z)", creation, transcript(names, A = first, series = series))
        report.record("D(A) = A_(-2)1", series.coefficient(1) == algebra.translate(first).poly, transcript(names, A = first, series = series))

        #translation
        series = algebra.Y(first, second, zmax)
        left = series.mapCoefficients(lambda poly: translationDerivative(poly, ORD, series.label)) - algebra.Y(first, algebra.translate(second), zmax)
        right = series.derivative()
        report.record("translation [D,Y(A,z)]B = dY/dz", left.restricted(right.upper) == right, transcript(names, A = first, B = second))

        #degrees
        shift = first.homologicalDegree() + second.homologicalDegree() - 2*target.chiSym(first.alpha, second.alpha)
        graded = isGraded(series, shift)
        report.record("grading of Y(A,z)B", graded, transcript(names, A = first, B = second, series = series))

        #locality, as exact symmetry of the kernels
        build = algebra.xKernel
        for permutation in [(1, 0)]:
            report.record("S_2 symmetry of X_2", permutedKernelMatches(build, [first, second], permutation),
                          transcript(names, A = first, B = second))
        for permutation in itertools.permutations(range(3)):
            if permutation == (0, 1, 2):
                continue
            report.record("S_3 symmetry of X_3", permutedKernelMatches(build, [first, second, third], permutation),
                          transcript(names, A = first, B = second, C = third, permutation = permutation))

        #associativity through the iota-expansions
        left, right = productIdentity(algebra, first, second, third, window)
        report.record("Y(A,y)Y(B,z)C = X_3(y,z,0)", left == right, transcript(names, A = first, B = second, C = third, left = left, right = right))
        left, right = iterateIdentity(algebra, first, second, third, window)
        report.record("Y(Y(A,w)B,z)C = X_3(w+z,z,0)", left == right, transcript(names, A = first, B = second, C = third, left = left, right = right))

        #involution
        if isSelfDual:
            left = algebra.Y(algebra.involution(first), algebra.involution(second), zmax)
            dualSeries = algebra.Y(first, second, zmax).reflect()
            right = dualSeries.mapCoefficients(lambda poly: algebra.involution(vaElement(dualSeries.label, poly)).poly, target.dual(dualSeries.label))
            report.record("involution Y(A^,z)B^ = (Y(A,-z)B)^", left == right, transcript(names, A = first, B = second))
    return report


def productIdentity(algebra, first, second, third, window):
    """Returns both sides of Y(A, y) Y(B, z) C = iota_(y,z) X_3(A, B, C; y, z, 0) as series in (y, z)."""
    inner = algebra.Y(second, third, window)
    coefficients = {}
    for (power,), poly in inner.items():
        outer = algebra.Y(first, vaElement(inner.label, poly), window)
        for (outerPower,), outerPoly in outer.items():
            coefficients[(outerPower, power)] = outerPoly
    left = laurentSeries(('y', 'z'), coefficients, (window, window), first.alpha + inner.label)
    right = algebra.xSeries([first, second, third], ('y', 'z'), [(1, 0), (0, 1), (0, 0)], (window, window))
    return left, right

def iterateIdentity(algebra, first, second, third, window):
    """Returns both sides of Y(Y(A, w) B, z) C = iota_(z,w) X_3(A, B, C; w + z, z, 0) as series in (z, w)."""
    inner = algebra.Y(first, second, window)
    coefficients = {}
    for (power,), poly in inner.items():
        outer = algebra.Y(vaElement(inner.label, poly), third, window)
        for (outerPower,), outerPoly in outer.items():
            coefficients[(outerPower, power)] = outerPoly
    left = laurentSeries(('z', 'w'), coefficients, (window, window), inner.label + third.alpha)
    right = algebra.xSeries([first, second, third], ('z', 'w'), [(1, 1), (1, 0), (0, 0)], (window, window))
    return left, right
