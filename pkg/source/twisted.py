#   pyQuiver Twisted Module

"""The twisted module on the homology of self-dual quiver moduli.

Elements of a self-dual class theta are polynomials in the generators s[SD, i, k], which exist for i in Q_0^D (any k)
and for self-dual vertices i (even k only). The twisted state-field map Y^sd(A, z)M pairs a vertex algebra element
with a module element; the multi-ary kernels X^sd_n carry poles at z_i = 0 and z_i = +-z_j.
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
from pyquiver import vertex
from pyquiver.polynomials import gradedPoly, SD, randomPoly
from pyquiver.series import kernelExpression, laurentSeries
from pyquiver.vertex import vaElement, slotName, alternatingSign, ordinaryLevels, pairedTerms, axiomReport, transcript

MODULE_SLOT = 'm'


#---- ELEMENTS ----
class tmElement(object):
    """An element of the twisted module: a self-dual class theta and a polynomial in the SD generators."""
    def __init__(self, theta, poly = None):
        self.theta = quivers.dimensionVector(theta)
        if poly is None:
            poly = gradedPoly.constant(1)
        self.poly = poly.withLabel(self.theta)

    def homologicalDegree(self):
        return self.poly.homogeneousDegree()

    def shiftedDegree(self, target):
        """Returns homological degree + chi-ring(theta)."""
        return self.homologicalDegree() + target.chiRing(self.theta)

    def isZero(self):
        return self.poly.isZero()

    def _check(self, other):
        if self.theta != other.theta:
            raise errors.ClassMismatch("Module elements of classes " + repr(self.theta) + " and " + repr(other.theta) + " cannot be added.")

    def __add__(self, other):
        self._check(other)
        return tmElement(self.theta, self.poly + other.poly)

    def __sub__(self, other):
        self._check(other)
        return tmElement(self.theta, self.poly - other.poly)

    def scale(self, scalar):
        return tmElement(self.theta, self.poly.scale(scalar))

    def __eq__(self, other):
        return isinstance(other, tmElement) and self.theta == other.theta and self.poly == other.poly

    __hash__ = None

    def toText(self, vertexNames = None):
        return repr(self.theta) + ": " + self.poly.toText(vertexNames)

    def __repr__(self):
        return self.toText()


#---- TWISTED MODULE ----
class twistedModule(object):
    """The twisted module of a self-dual quiver over its vertex algebra."""
    def __init__(self, target, name = None):
        if not isinstance(target, quivers.selfDualQuiver):
            raise errors.QuiverError("The twisted module needs a self-dual quiver.")
        self._name_ = name
        self.quiver = target
        self.algebra = vertex.vertexAlgebra(target)
        self.cartan = target.cartanMatrix()
        self.cartanDiagonal = target.cartanDiagonal()
        size = target.vertexCount()
        self.dualCartan = [[self.cartan[row][target.dualVertex[column]] for column in range(size)] for row in range(size)]

    #-- variables --
    def sdImage(self, vertexIndex, level, scale = 1):
        """Returns the SD generator standing for s[SD, vertex, level], rewritten to canonical form.

        Vertices in Q_0^Dv are replaced by (-1)^k times their Q_0^D partner; self-dual vertices at odd level give 0.
        """
        target = self.quiver
        kind = target.vertexKind[vertexIndex]
        if kind == 'D':
            return gradedPoly.variable((SD, vertexIndex, level)).scale(scale)
        if kind == 'Dv':
            return gradedPoly.variable((SD, target.dualVertex[vertexIndex], level)).scale(scale*alternatingSign(level))
        if level % 2:
            return gradedPoly.zero()
        return gradedPoly.variable((SD, vertexIndex, level)).scale(scale)

    def canonical(self, poly, theta = None):
        """Rewrites any SD polynomial into canonical generators."""
        return poly.substitute(lambda variable: self.sdImage(variable[1], variable[2]), theta)

    def isCanonicalVariable(self, variable):
        kind = self.quiver.vertexKind[variable[1]]
        return variable[0] == SD and (kind == 'D' or (kind in ('+', '-') and variable[2] % 2 == 0))

    def generatorLevels(self, cap, theta = None):
        levels = []
        for vertexIndex in range(self.quiver.vertexCount()):
            if theta is not None and not theta[vertexIndex]:
                continue
            for level in range(1, cap//2 + 1):
                variable = (SD, vertexIndex, level)
                if self.isCanonicalVariable(variable):
                    levels.append(variable)
        return levels

    def element(self, theta, poly = None):
        theta = self.quiver.sdClass(theta)
        if poly is None:
            return tmElement(theta)
        return tmElement(theta, self.canonical(poly, theta))

    def unit(self, theta = None):
        """Returns 1^sd_theta."""
        if theta is None:
            theta = self.quiver.zero()
        return tmElement(self.quiver.sdClass(theta))

    #-- pushforward --
    def sdPushRule(self, variable):
        """Image of an ordinary generator s^alpha[i, k] under the self-dual direct sum pushforward."""
        vertexIndex, level = variable[1], variable[2]
        kind = self.quiver.vertexKind[vertexIndex]
        if kind in ('+', '-'):
            return self.sdImage(vertexIndex, level, 2)
        return self.sdImage(vertexIndex, level)

    def pushforward(self, label):
        """Returns the substitution sending slot variables through sdPushRule and module variables to SD generators."""
        def rule(variable):
            if variable[0] == MODULE_SLOT:
                return gradedPoly.variable((SD, variable[1], variable[2]))
            return self.sdPushRule(variable)
        return lambda poly: poly.substitute(rule, label)

    def oplusSd(self, element, module):
        """Returns the self-dual direct sum pushforward of A (x) M, in class alpha + alpha^dual + theta."""
        theta = self.quiver.bar(element.alpha) + module.theta
        image = element.poly.substitute(self.sdPushRule)
        return tmElement(theta, image*module.poly)

    #-- kernels --
    def dualLevels(self, poly, slot, classVector):
        """Derivative slots for the (z_i + z_j) operators: d_(v^dual, k) with the sign (-1)^k, indexed by v."""
        target = self.quiver
        levels = sorted((target.dualVertex[variable[1]], variable[2], variable, alternatingSign(variable[2]))
                        for variable in poly.variables() if variable[0] == slot)
        levels.extend((vertexIndex, 0, None, classVector[target.dualVertex[vertexIndex]])
                      for vertexIndex in range(target.vertexCount()) if classVector[target.dualVertex[vertexIndex]])
        return levels

    def moduleLevels(self, poly, theta):
        """Derivative slots of the module input. A Q_0^Dv vertex i differentiates s[i^dual, k] with the sign (-1)^k."""
        target = self.quiver
        levels = []
        for variable in sorted(poly.variables()):
            if variable[0] != MODULE_SLOT:
                continue
            vertexIndex, level = variable[1], variable[2]
            levels.append((vertexIndex, level, variable, 1))
            if target.vertexKind[vertexIndex] == 'D':
                levels.append((target.dualVertex[vertexIndex], level, variable, alternatingSign(level)))
        levels.extend((vertexIndex, 0, None, entry) for vertexIndex, entry in enumerate(theta) if entry)
        return levels

    def selfTerms(self, levels, factorCount, position):
        """Yields the quadratic and linear self-interaction terms of one input against the module."""
        for vertexIndex, level, variable, scalar in levels:
            for otherVertex, otherLevel, otherVariable, otherScalar in levels:
                order = level + otherLevel
                if order == 0:
                    continue
                entry = self.dualCartan[vertexIndex][otherVertex]
                if not entry:
                    continue
                coefficient = Fraction(alternatingSign(order - 1)*math.factorial(order - 1)*entry*scalar*otherScalar, 2*2**order)
                exponents = [0]*factorCount
                exponents[position] = -order
                yield (coefficient, tuple(exponents), tuple(item for item in (variable, otherVariable) if item is not None))
        for vertexIndex, level, variable, scalar in levels:
            if level == 0 or not self.cartanDiagonal[vertexIndex]:
                continue
            coefficient = Fraction(alternatingSign(level - 1)*math.factorial(level - 1)*self.cartanDiagonal[vertexIndex]*scalar, 2)
            exponents = [0]*factorCount
            exponents[position] = -level
            yield (coefficient, tuple(exponents), (variable,))

    def xKernel(self, elements, module):
        """Returns the exact kernel of X^sd_n(A_1, ..., A_n, M) before translation and pushforward.

        Factors are (z_i - z_j) and (z_i + z_j) for i < j, then z_i for each input; the (2 z_i) powers are folded into
        the coefficients.
        """
        target = self.quiver
        count = len(elements)
        if count + 1 > config.kernelArityBound():
            raise errors.Unbounded("Kernel arity " + str(count + 1) + " exceeds the configured bound " + str(config.kernelArityBound()) + ".")
        pairs = list(itertools.combinations(range(count), 2))
        factors = [('-', first, second) for first, second in pairs] + [('+', first, second) for first, second in pairs] + [('z', index) for index in range(count)]
        classes = [element.alpha for element in elements]
        theta = module.theta
        exponents = [target.chiSym(classes[first], classes[second]) for first, second in pairs]
        exponents += [target.chiSym(classes[first], target.dual(classes[second])) for first, second in pairs]
        scalar = Fraction(target.epsilonSdMulti(classes, theta))
        for alpha in classes:
            ddot = target.chiDdot(alpha)[1]
            exponents.append(target.chiDot(alpha, theta)[1] + ddot)
            scalar *= Fraction(2)**ddot
        poly = gradedPoly.constant(scalar)
        for index, element in enumerate(elements):
            poly = poly*element.poly.renameSlot(slotName(index))
        poly = poly*module.poly.renameSlot(MODULE_SLOT)
        levels = [ordinaryLevels(poly, slotName(index), classes[index]) for index in range(count)]
        duals = [self.dualLevels(poly, slotName(index), classes[index]) for index in range(count)]
        moduleLevels = self.moduleLevels(poly, theta)
        operators = []
        factorCount = len(factors)
        for position, (first, second) in enumerate(pairs):
            operators.extend(pairedTerms(self.cartan, levels[first], levels[second], factorCount, position))
            operators.extend(pairedTerms(self.cartan, levels[first], duals[second], factorCount, len(pairs) + position))
        for index in range(count):
            position = 2*len(pairs) + index
            operators.extend(pairedTerms(self.cartan, levels[index], moduleLevels, factorCount, position))
            operators.extend(self.selfTerms(levels[index], factorCount, position))
        return kernelExpression(factors, {tuple(exponents): poly}).applyExp(operators)

    def xSeries(self, elements, module, variables, points, upper):
        """Expands X^sd_n(A_1, ..., A_n, M; z_1, ..., z_n) with each z_i a linear form in the formal variables."""
        kernel = self.xKernel(elements, module)
        forms = {}
        for factor in kernel.factors:
            if factor[0] == 'z':
                forms[factor] = tuple(points[factor[1]])
            elif factor[0] == '-':
                forms[factor] = tuple(a - b for a, b in zip(points[factor[1]], points[factor[2]]))
            else:
                forms[factor] = tuple(a + b for a, b in zip(points[factor[1]], points[factor[2]]))
        translations = [(self.algebra.translationOperator(slotName(index), element.alpha), tuple(points[index]))
                        for index, element in enumerate(elements) if any(points[index])]
        total = module.theta
        for element in elements:
            total = total + self.quiver.bar(element.alpha)
        return kernel.expand(variables, forms, translations, upper, self.pushforward(total), total)

    def Ysd(self, element, module, zmax = None):
        """Returns Y^sd(A, z)M as a laurentSeries in z, exact through z^zmax."""
        if zmax is None:
            zmax = config.defaultZmax()
        return self.xSeries([element], module, ('z',), [(1,)], (zmax,))

    def residue(self, element, module):
        """Returns the coefficient of z^-1 in Y^sd(A, z)M, which represents A heart M."""
        series = self.Ysd(element, module, zmax = -1)
        return tmElement(series.label, series.coefficient(-1))

    def randomElement(self, theta, cap, rng):
        degree = 2*rng.randint(0, cap//2)
        levels = self.generatorLevels(cap, theta)
        poly = randomPoly(levels, degree, rng) if degree and levels else gradedPoly.zero()
        if poly.isZero():
            poly = gradedPoly.constant(rng.choice([-2, -1, 1, 2]))
        return tmElement(theta, poly)

    def randomSdClass(self, rng, maxTotal = 2):
        candidates = [theta for theta in quivers.vectorsOfTotalAtMost(self.quiver.vertexCount(), maxTotal) if self.quiver.isSdClass(theta)]
        candidates.append(self.quiver.zero())
        return rng.choice(candidates)


#---- AXIOM CHECKS ----
def checkTwistedAxioms(target, cap = None, trials = 25, seed = None, zmax = None, window = 1):
    """Verifies the twisted module axioms on seeded random homogeneous elements. Returns an axiomReport."""
    cap = config.degreeCap() if cap is None else cap
    seed = config.defaultSeed() if seed is None else seed
    zmax = config.axiomZmax() if zmax is None else zmax
    rng = random.Random(seed)
    module = twistedModule(target)
    algebra = module.algebra
    names = target.vertexNames
    report = axiomReport("twisted module axioms", seed, trials)
    for trial in range(trials):
        first = algebra.randomElement(algebra.randomClass(rng), cap, rng)
        second = algebra.randomElement(algebra.randomClass(rng), cap, rng)
        state = module.randomElement(module.randomSdClass(rng), cap, rng)
        utilities.debugNotice(report, 'axioms', "trial " + str(trial) + ": " + repr(first.alpha) + ", " + repr(second.alpha) + ", " + repr(state.theta))

        series = module.Ysd(algebra.vacuum(), state, zmax)
        expected = laurentSeries(('z',), {(0,): state.poly}, (zmax,))
        report.record("identity Y^sd(1,z)M = M", series == expected, transcript(names, M = state, series = series))

        series = module.Ysd(first, state, zmax)
        translated = module.Ysd(algebra.translate(first), state, zmax)
        report.record("twisted translation Y^sd(DA,z)M = dY^sd/dz", translated == series.derivative(), transcript(names, A = first, M = state))

        shift = first.homologicalDegree() + state.homologicalDegree() - 2*(target.chiDot(first.alpha, state.theta)[1] + target.chiDdot(first.alpha)[1])
        graded = vertex.isGraded(series, shift)
        report.record("grading of Y^sd(A,z)M", graded, transcript(names, A = first, M = state, series = series))

        dualSeries = module.Ysd(algebra.involution(first), state, zmax)
        report.record("involutivity Y^sd(A^,z)M = Y^sd(A,-z)M", dualSeries == series.reflect(), transcript(names, A = first, M = state))

        build = lambda inputs: module.xKernel(inputs, state)
        report.record("S_2 symmetry of X^sd_2", vertex.permutedKernelMatches(build, [first, second], (1, 0)),
                      transcript(names, A = first, B = second, M = state))

        left, right = twistedProductIdentity(module, first, second, state, window)
        report.record("Y^sd(A,y)Y^sd(B,z)M = X^sd_2(y,z)", left == right, transcript(names, A = first, B = second, M = state, left = left, right = right))
        left, right = twistedIterateIdentity(module, first, second, state, window)
        report.record("Y^sd(Y(A,w)B,z)M = X^sd_2(w+z,z)", left == right, transcript(names, A = first, B = second, M = state, left = left, right = right))
    return report


def twistedProductIdentity(module, first, second, state, window):
    """Returns both sides of Y^sd(A, y) Y^sd(B, z) M = iota_(y,z) X^sd_2(A, B, M; y, z)."""
    inner = module.Ysd(second, state, window)
    coefficients = {}
    for (power,), poly in inner.items():
        outer = module.Ysd(first, tmElement(inner.label, poly), window)
        for (outerPower,), outerPoly in outer.items():
            coefficients[(outerPower, power)] = outerPoly
    label = module.quiver.bar(first.alpha) + inner.label
    left = laurentSeries(('y', 'z'), coefficients, (window, window), label)
    right = module.xSeries([first, second], state, ('y', 'z'), [(1, 0), (0, 1)], (window, window))
    return left, right

def twistedIterateIdentity(module, first, second, state, window):
    """Returns both sides of Y^sd(Y(A, w) B, z) M = iota_(z,w) X^sd_2(A, B, M; w + z, z)."""
    inner = module.algebra.Y(first, second, window)
    coefficients = {}
    for (power,), poly in inner.items():
        outer = module.Ysd(vaElement(inner.label, poly), state, window)
        for (outerPower,), outerPoly in outer.items():
            coefficients[(outerPower, power)] = outerPoly
    label = module.quiver.bar(inner.label) + state.theta
    left = laurentSeries(('z', 'w'), coefficients, (window, window), label)
    right = module.xSeries([first, second], state, ('z', 'w'), [(1, 1), (1, 0)], (window, window))
    return left, right
