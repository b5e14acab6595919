#   pyQuiver Wall-Crossing Module

"""Enumerative invariants of self-dual quivers and their wall-crossing identities.

The invariants inv_alpha(tau) in L and inv^sd_theta(tau) in the twisted module are fixed by their values for an
increasing stability function and by the identity

    sum over tau(alpha_1) > ... > tau(alpha_n) > 0 of delta_alpha_1(tau) <> ... <> delta_alpha_n(tau) <> delta^sd_rho(tau)

being independent of tau. The solver recovers them class by class, in order of total dimension.

Quiver morphisms act on all three structures through the maps Omega, Omega^pl and Omega^sd, built from a top Chern
class cap product followed by the pushforward substitution.
"""

#---- IMPORTS ----
import math
from fractions import Fraction
from pyquiver import errors
from pyquiver import quivers
from pyquiver import utilities
from pyquiver import polynomials
from pyquiver.polynomials import gradedPoly, ORD, SD
from pyquiver.lie import lieAlgebra, lieClass
from pyquiver.envelope import envelope, envElement, utwElement
from pyquiver.twisted import tmElement, twistedModule
from pyquiver.vertex import vaElement


#---- CLASS ENUMERATION ----
def sdClassesUpTo(target, bound):
    """Returns the self-dual classes of total at most bound, zero included, in the class order."""
    classes = [target.zero()] + [theta for theta in quivers.vectorsOfTotalAtMost(target.vertexCount(), bound) if target.isSdClass(theta)]
    return sorted(classes, key = lambda theta: theta.orderKey())

def ordinaryClassesUpTo(target, bound):
    return sorted(quivers.vectorsOfTotalAtMost(target.vertexCount(), bound), key = lambda alpha: alpha.orderKey())

def classesUnder(target, theta):
    """Returns every nonzero alpha with alpha + alpha^dual <= theta."""
    return [alpha for alpha in quivers.vectorsBelow(theta) if target.bar(alpha).leq(theta)]

def equalSlopeDecompositions(alpha, tau):
    """Yields ordered decompositions of alpha into parts of the same slope as alpha."""
    slope = tau.slope(alpha)
    return quivers.orderedDecompositions(alpha, lambda part: tau.slope(part) == slope)

def decreasingDecompositions(alpha, tau):
    """Yields ordered decompositions alpha_1 + ... + alpha_n = alpha with strictly decreasing slopes."""
    for parts in quivers.orderedDecompositions(alpha):
        slopes = [tau.slope(part) for part in parts]
        if all(first > second for first, second in zip(slopes, slopes[1:])):
            yield parts

def zeroSlopeSequences(target, tau, theta):
    """Yields (alpha_1, ..., alpha_n) with tau(alpha_i) = 0 and sum of alpha_i + alpha_i^dual <= theta, n >= 0."""
    yield ()
    for alpha in classesUnder(target, theta):
        if tau.weight(alpha) != 0:
            continue
        for rest in zeroSlopeSequences(target, tau, theta - target.bar(alpha)):
            yield (alpha,) + rest

def positiveDecreasingSequences(target, tau, theta, upper = None):
    """Yields (alpha_1, ..., alpha_n) with tau(alpha_1) > ... > tau(alpha_n) > 0 and the alpha_i + alpha_i^dual
    summing to at most theta, n >= 0."""
    yield ()
    for alpha in classesUnder(target, theta):
        slope = tau.slope(alpha)
        if slope <= 0 or (upper is not None and slope >= upper):
            continue
        for rest in positiveDecreasingSequences(target, tau, theta - target.bar(alpha), slope):
            yield (alpha,) + rest


#---- TABLES ----
class invariantTable(object):
    """Invariants for one stability function.

    ordinary -- dict alpha -> lieClass, the classes inv_alpha(tau) in L
    sd -- dict theta -> tmElement, the classes inv^sd_theta(tau)
    bound -- the largest total of the self-dual classes in the table
    """
    def __init__(self, target, tau, bound, ordinary = None, sd = None, name = None):
        self._name_ = name
        self.quiver = target
        self.tau = tau
        self.bound = bound
        self.ordinary = dict(ordinary or {})
        self.sd = dict(sd or {})

    def ordinaryInvariant(self, alpha):
        alpha = quivers.dimensionVector(alpha)
        if alpha not in self.ordinary:
            raise errors.IncompleteTable("No ordinary invariant for class " + repr(alpha) + ".")
        return self.ordinary[alpha]

    def sdInvariant(self, theta):
        theta = quivers.dimensionVector(theta)
        if theta not in self.sd:
            raise errors.IncompleteTable("No self-dual invariant for class " + repr(theta) + ".")
        return self.sd[theta]

    def sameAs(self, other):
        """Returns the classes at which two tables disagree, as (ordinary list, sd list)."""
        ordinary = [alpha for alpha in self.ordinary if alpha in other.ordinary and self.ordinary[alpha] != other.ordinary[alpha]]
        sd = [theta for theta in self.sd if theta in other.sd and self.sd[theta] != other.sd[theta]]
        return ordinary, sd

    def toText(self):
        names = self.quiver.vertexNames
        lines = ["stability " + repr(self.tau)]
        for alpha in sorted(self.ordinary, key = lambda vector: vector.orderKey()):
            lines.append("inv " + repr(alpha) + " = " + self.ordinary[alpha].poly.toText(names))
        for theta in sorted(self.sd, key = lambda vector: vector.orderKey()):
            lines.append("inv_sd " + repr(theta) + " = " + self.sd[theta].poly.toText(names) + "  [degree " + str(-self.quiver.chiRing(theta)) + "]")
        return "\n".join(lines)

    def __repr__(self):
        return self.toText()


class deltaTable(object):
    """The elements delta_alpha(tau) in U(L) and delta^sd_theta(tau) in U^tw."""
    def __init__(self, target, tau, bound, ordinary = None, sd = None):
        self.quiver = target
        self.tau = tau
        self.bound = bound
        self.ordinary = dict(ordinary or {})
        self.sd = dict(sd or {})

    def ordinaryDelta(self, alpha):
        if alpha not in self.ordinary:
            raise errors.IncompleteTable("No delta element for class " + repr(alpha) + ".")
        return self.ordinary[alpha]

    def sdDelta(self, theta):
        if theta not in self.sd:
            raise errors.IncompleteTable("No self-dual delta element for class " + repr(theta) + ".")
        return self.sd[theta]


#---- WALL-CROSSING ----
class wallCrossing(object):
    """The invariant machinery over one self-dual quiver.

    target -- an acyclic self-dual quiver
    """
    def __init__(self, target, name = None):
        self._name_ = name
        if not target.isAcyclic():
            raise errors.CyclicQuiver("Wall-crossing needs a quiver without oriented cycles.")
        self.quiver = target
        self.lie = lieAlgebra(target)
        self.envelope = envelope(self.lie)
        self.module = self.lie.module

    #-- base case --
    def baseInvariants(self, mu, bound):
        """Returns the invariants of an increasing self-dual stability function.

        inv_alpha = 1^pl_alpha for alpha = delta_i and 0 otherwise; inv^sd_theta = 2^-|theta| 1^sd_theta for primitive
        theta and 0 otherwise.
        """
        target = self.quiver
        if not mu.isIncreasing(target):
            raise errors.NotIncreasing("Stability " + repr(mu) + " is not increasing.")
        mu.requireSelfDual(target)
        ordinary = {}
        for alpha in ordinaryClassesUpTo(target, bound//2):
            ordinary[alpha] = self.lie.unit(alpha) if target.isPrimitive(alpha) else lieClass(alpha, gradedPoly.zero())
        sd = {}
        for theta in sdClassesUpTo(target, bound):
            if target.isPrimitiveSd(theta):
                sd[theta] = tmElement(theta, gradedPoly.constant(Fraction(1, 2**target.primitiveSize(theta))))
            else:
                sd[theta] = tmElement(theta, gradedPoly.zero())
        return invariantTable(target, mu, bound, ordinary, sd, "base invariants")

    #-- delta elements --
    def ordinaryDelta(self, table, alpha):
        """Returns delta_alpha = sum over equal-slope decompositions of 1/n! inv_alpha_1 * ... * inv_alpha_n."""
        total = envElement()
        for parts in equalSlopeDecompositions(alpha, table.tau):
            factors = [self.envelope.fromLie(table.ordinaryInvariant(part)) for part in parts]
            if any(factor.isZero() for factor in factors):
                continue
            total = total + self.envelope.starAll(factors).scale(Fraction(1, math.factorial(len(parts))))
        return total

    def chain(self, items, last):
        """Returns x_1 <> (x_2 <> ... (x_n <> last)) for lieClasses or envElements x_i."""
        current = last
        for item in reversed(items):
            if current.isZero():
                break
            if isinstance(item, envElement):
                current = self.envelope.act(item, current)
            else:
                current = self.envelope.diamond(item, current)
        return current

    def sdDelta(self, table, theta):
        """Returns delta^sd_theta = sum over zero-slope alpha_i of 1/(2^n n!) inv_alpha_1 <> ... <> (1 (x) inv^sd_rho)."""
        total = utwElement()
        for parts in zeroSlopeSequences(self.quiver, table.tau, theta):
            rho = theta
            for alpha in parts:
                rho = rho - self.quiver.bar(alpha)
            state = table.sdInvariant(rho)
            if state.isZero():
                continue
            items = [table.ordinaryInvariant(alpha) for alpha in parts]
            if any(item.isZero() for item in items):
                continue
            term = self.chain(items, self.envelope.unit(state))
            total = total + term.scale(Fraction(1, 2**len(parts)*math.factorial(len(parts))))
        return total

    def deltaFromInvariants(self, table):
        """Returns the deltaTable of an invariantTable."""
        ordinary = dict((alpha, self.ordinaryDelta(table, alpha)) for alpha in table.ordinary)
        sd = dict((theta, self.sdDelta(table, theta)) for theta in table.sd)
        return deltaTable(self.quiver, table.tau, table.bound, ordinary, sd)

    def invariantsFromDelta(self, deltas):
        """Inverts deltaFromInvariants, recovering the invariants class by class."""
        target = self.quiver
        table = invariantTable(target, deltas.tau, deltas.bound, name = "invariants from delta")
        for alpha in sorted(deltas.ordinary, key = lambda vector: vector.orderKey()):
            table.ordinary[alpha] = lieClass(alpha, gradedPoly.zero())
            remainder = deltas.ordinaryDelta(alpha) - self.ordinaryDelta(table, alpha)
            table.ordinary[alpha] = self.lieFromEnv(alpha, remainder)
        for theta in sorted(deltas.sd, key = lambda vector: vector.orderKey()):
            table.sd[theta] = tmElement(theta, gradedPoly.zero())
            remainder = deltas.sdDelta(theta) - self.sdDelta(table, theta)
            table.sd[theta] = self.moduleFromUtw(theta, remainder)
        return table

    def lieFromEnv(self, alpha, element):
        """Returns the lieClass of an element of U(L) made of single letters of class alpha."""
        total = lieClass(alpha, gradedPoly.zero())
        for word, value in element.terms.items():
            if len(word) != 1 or word[0][0] != alpha:
                raise errors.ResidualNonzero("Element of U(L) in class " + repr(alpha) + " is not a Lie class: word " + repr(word) + ".")
            total = total + self.envelope.letterVector(word[0]).scale(value)
        return total

    def moduleFromUtw(self, theta, element):
        """Returns the module element of a utwElement that must lie in 1 (x) M_theta."""
        for (word, rho), poly in element.terms.items():
            if word or rho != theta:
                raise errors.ResidualNonzero("Residual in class " + repr(theta) + " has a component " + repr(word) + " (x) " + repr(rho) + ".")
        return tmElement(theta, element.terms.get(((), quivers.dimensionVector(theta)), gradedPoly.zero()))

    #-- the identities --
    def ordinaryTotal(self, deltas, alpha, minimum = 1):
        """Returns the sum over strictly decreasing decompositions with at least `minimum` parts of the delta products."""
        total = envElement()
        for parts in decreasingDecompositions(alpha, deltas.tau):
            if len(parts) < minimum:
                continue
            factors = [deltas.ordinaryDelta(part) for part in parts]
            if any(factor.isZero() for factor in factors):
                continue
            total = total + self.envelope.starAll(factors)
        return total

    def ksSum(self, deltas, theta):
        """Returns the sum over tau(alpha_1) > ... > tau(alpha_n) > 0 of delta_alpha_1 <> ... <> delta^sd_rho."""
        total = utwElement()
        for parts in positiveDecreasingSequences(self.quiver, deltas.tau, theta):
            rho = theta
            for alpha in parts:
                rho = rho - self.quiver.bar(alpha)
            last = deltas.sdDelta(rho)
            if last.isZero():
                continue
            total = total + self.chain([deltas.ordinaryDelta(alpha) for alpha in parts], last)
        return total

    #-- solver --
    def solveInvariants(self, tau, bound, mu = None):
        """Returns the invariantTable of a self-dual stability function, solved through the base stability mu.

        The ordinary layer comes from equating the decreasing-slope products of delta elements for tau and for mu;
        the self-dual layer from the same identity for the ksSum, where inv^sd_theta(tau) is the only unknown.
        """
        target = self.quiver
        tau.requireSelfDual(target)
        if mu is None:
            mu = target.makeIncreasingSd()
        base = self.baseInvariants(mu, bound)
        baseDeltas = self.deltaFromInvariants(base)
        if tau == mu:
            return invariantTable(target, tau, bound, base.ordinary, base.sd, "invariants")
        table = invariantTable(target, tau, bound, name = "invariants")
        deltas = deltaTable(target, tau, bound)
        for alpha in ordinaryClassesUpTo(target, bound//2):
            utilities.debugNotice(self, 'wallcross', "ordinary class " + repr(alpha))
            delta = self.ordinaryTotal(baseDeltas, alpha) - self.ordinaryTotal(deltas, alpha, minimum = 2)
            deltas.ordinary[alpha] = delta
            table.ordinary[alpha] = lieClass(alpha, gradedPoly.zero())
            remainder = delta - self.ordinaryDelta(table, alpha)
            table.ordinary[alpha] = self.lieFromEnv(alpha, remainder)
            self.checkDegree(alpha, table.ordinary[alpha].poly, 2 - target.chiHat(alpha))
        for theta in sdClassesUpTo(target, bound):
            utilities.debugNotice(self, 'wallcross', "self-dual class " + repr(theta))
            table.sd[theta] = tmElement(theta, gradedPoly.zero())
            deltas.sd[theta] = self.sdDelta(table, theta)
            difference = self.ksSum(baseDeltas, theta) - self.ksSum(deltas, theta)
            value = self.moduleFromUtw(theta, difference)
            self.checkDegree(theta, value.poly, -target.chiRing(theta))
            table.sd[theta] = value
            deltas.sd[theta] = self.sdDelta(table, theta)
        return table

    def checkDegree(self, vector, poly, degree):
        if poly.isZero():
            return
        if not poly.isHomogeneous() or poly.homogeneousDegree() != degree:
            raise errors.ResidualNonzero("Invariant of class " + repr(vector) + " is not homogeneous of degree " + str(degree) + ".")

    #-- residual reports --
    def ordinaryIdentityResidual(self, table, mu = None):
        """Returns {alpha: residual} for the decreasing-slope identity between table and the base invariants."""
        if mu is None:
            mu = self.quiver.makeIncreasingSd()
        deltas = self.deltaFromInvariants(table)
        baseDeltas = self.deltaFromInvariants(self.baseInvariants(mu, table.bound))
        return dict((alpha, self.ordinaryTotal(deltas, alpha) - self.ordinaryTotal(baseDeltas, alpha)) for alpha in table.ordinary)

    def ksResidualReport(self, table, mu = None):
        """Returns {theta: residual}, the full ksSum difference between table and the base invariants in U^tw_theta."""
        if mu is None:
            mu = self.quiver.makeIncreasingSd()
        deltas = self.deltaFromInvariants(table)
        baseDeltas = self.deltaFromInvariants(self.baseInvariants(mu, table.bound))
        return dict((theta, self.ksSum(deltas, theta) - self.ksSum(baseDeltas, theta)) for theta in table.sd)


def residualText(ordinaryResiduals, sdResiduals):
    """Returns one 'zero' or 'nonzero' line per identity, in the class order."""
    lines = []
    for alpha in sorted(ordinaryResiduals, key = lambda vector: vector.orderKey()):
        lines.append("ordinary " + repr(alpha) + ": " + ("zero" if ordinaryResiduals[alpha].isZero() else "nonzero"))
    for theta in sorted(sdResiduals, key = lambda vector: vector.orderKey()):
        lines.append("ks " + repr(theta) + ": " + ("zero" if sdResiduals[theta].isZero() else "nonzero"))
    return "\n".join(lines)


#---- CHARACTERS ----
def ordinaryCharacter(target, alpha, vertexIndex, order):
    """Returns ch(U_i) = [alpha_i, S_i,1, S_i,2, ...] on the ordinary moduli stack."""
    return [gradedPoly.constant(alpha[vertexIndex])] + [gradedPoly.variable((ORD, vertexIndex, level)) for level in range(1, order + 1)]

def sdCharacter(module, theta, vertexIndex, order):
    """Returns ch(V_i) on the self-dual moduli stack, in the canonical SD generators."""
    return [gradedPoly.constant(theta[vertexIndex])] + [module.sdImage(vertexIndex, level) for level in range(1, order + 1)]

def topChernClass(characters, rank):
    """Returns c_rank of the dual of the K-class with the given character, a cohomology class in the S variables."""
    total = [gradedPoly.zero() for level in range(rank + 1)]
    for character in characters:
        total = polynomials.characterSum(total, character, rank)
    return polynomials.chernSeriesFromCharacter(polynomials.dualCharacter(total), rank)[rank]

def capPoly(cohomologyClass, poly):
    return polynomials.cap(cohomologyClass.withLabel(None), poly.withLabel(None))


#---- MORPHISMS ----
class omegaMaps(object):
    """The maps Omega, Omega^pl and Omega^sd of a morphism of quivers lambda: Q -> Q'."""
    def __init__(self, morphism, name = None):
        self._name_ = name
        self.morphism = morphism
        self.source = morphism.source
        self.target = morphism.target
        self.sourceLie = lieAlgebra(self.source)
        self.targetLie = lieAlgebra(self.target)
        self.selfDual = morphism.isSelfDual()
        if self.selfDual:
            self.sourceModule = twistedModule(self.source)
            self.targetModule = twistedModule(self.target)

    #-- extra data --
    def xiHatCharacters(self, alpha, order):
        """Returns (characters, rank) of Xi-hat_alpha: U_i (x) U_j^dual over i != j in one fiber, and U_s(a) (x) U_t(a)^dual
        over the edges outside Q_1^o."""
        source = self.source
        vertexMap = self.morphism.vertexMap
        characters = []
        rank = 0
        pairs = [(first, second) for first in range(source.vertexCount()) for second in range(source.vertexCount())
                 if first != second and vertexMap[first] == vertexMap[second]]
        pairs += [(source.source[edge], source.target[edge]) for edge in range(source.edgeCount()) if edge not in self.morphism.edgeMap]
        for first, second in pairs:
            rank += alpha[first]*alpha[second]
            characters.append(polynomials.characterProduct(ordinaryCharacter(source, alpha, first, order),
                                                           polynomials.dualCharacter(ordinaryCharacter(source, alpha, second, order)), order))
        return characters, rank

    def xiRingCharacters(self, theta, order):
        """Returns (characters, rank) of Xi-ring_theta."""
        source, target = self.source, self.target
        vertexMap = self.morphism.vertexMap
        module = self.sourceModule
        characters = []
        rank = 0
        def character(vertexIndex):
            return sdCharacter(module, theta, vertexIndex, order)
        for first in range(source.vertexCount()):
            for second in range(first + 1, source.vertexCount()):
                if first != source.dualVertex[second] and vertexMap[first] == target.dualVertex[vertexMap[second]]:
                    rank += theta[first]*theta[second]
                    characters.append(polynomials.characterProduct(character(first), character(second), order))
        for vertexIndex in range(source.vertexCount()):
            if vertexIndex == source.dualVertex[vertexIndex]:
                continue
            kind = target.vertexKind[vertexMap[vertexIndex]]
            if kind not in ('+', '-'):
                continue
            symmetric, alternating = polynomials.sym2Wedge2Character(character(vertexIndex), order)
            size = theta[vertexIndex]
            if kind == '+':
                rank += size*(size - 1)//2
                characters.append(alternating)
            else:
                rank += size*(size + 1)//2
                characters.append(symmetric)
        for edge in range(source.edgeCount()):
            if edge in self.morphism.edgeMap:
                continue
            kind = source.edgeKind[edge]
            start = source.source[edge]
            size = theta[start]
            if kind == 'D':
                end = source.dualVertex[source.target[edge]]
                rank += size*theta[end]
                characters.append(polynomials.characterProduct(character(start), character(end), order))
            elif kind in ('+', '-'):
                symmetric, alternating = polynomials.sym2Wedge2Character(character(start), order)
                if kind == '+':
                    rank += size*(size + 1)//2
                    characters.append(symmetric)
                else:
                    rank += size*(size - 1)//2
                    characters.append(alternating)
        return characters, rank

    #-- pushforwards --
    def ordinaryPushRule(self, variable):
        return gradedPoly.variable((ORD, self.morphism.vertexMap[variable[1]], variable[2]))

    def sdPushRule(self, variable):
        """Image of a canonical SD generator of Q: through the self-dual sum rule of Q' for Q_0^D vertices, unchanged
        for self-dual vertices."""
        vertexIndex, level = variable[1], variable[2]
        image = self.morphism.vertexMap[vertexIndex]
        if self.source.vertexKind[vertexIndex] in ('+', '-'):
            return gradedPoly.variable((SD, image, level))
        return self.targetModule.sdPushRule((SD, image, level))

    #-- maps --
    def omega(self, element):
        """Returns Omega(A) = F_*(A cap c_top(Xi-hat_alpha^dual))."""
        alpha = element.alpha
        rank = self.xiHatCharacters(alpha, 0)[1]
        characters, rank = self.xiHatCharacters(alpha, rank)
        capped = capPoly(topChernClass(characters, rank), element.poly)
        image = self.morphism.pushforwardClass(alpha)
        return vaElement(image, capped.substitute(self.ordinaryPushRule, image))

    def omegaPl(self, item):
        """Returns Omega^pl on a Lie class."""
        image = self.omega(item.representative())
        return self.targetLie.project(image.alpha, image.poly)

    def omegaSd(self, state):
        """Returns Omega^sd(M) = F^sd_*(M cap c_top(Xi-ring_theta^dual))."""
        if not self.selfDual:
            raise errors.InvalidMorphism("Omega^sd needs a morphism of self-dual quivers.")
        theta = state.theta
        rank = self.xiRingCharacters(theta, 0)[1]
        characters, rank = self.xiRingCharacters(theta, rank)
        capped = capPoly(topChernClass(characters, rank), state.poly)
        image = self.morphism.pushforwardClass(theta)
        return tmElement(image, capped.substitute(self.sdPushRule, image))


def sdFactor(target, theta):
    """Returns prod over Q_0^D of theta_i! times prod over self-dual vertices of 2^m m!, m = floor(theta_i / 2)."""
    value = 1
    for vertexIndex in range(target.vertexCount()):
        kind = target.vertexKind[vertexIndex]
        if kind == 'D':
            value *= math.factorial(theta[vertexIndex])
        elif kind in ('+', '-'):
            half = theta[vertexIndex]//2
            value *= 2**half*math.factorial(half)
    return value

def sdFactorImage(morphism, theta):
    """Returns the same product on Q' for theta' = lambda_*(theta), where the self-dual entries drop the odd fibers."""
    source, target = morphism.source, morphism.target
    image = morphism.pushforwardClass(theta)
    value = 1
    for vertexIndex in range(target.vertexCount()):
        kind = target.vertexKind[vertexIndex]
        if kind == 'D':
            value *= math.factorial(image[vertexIndex])
        elif kind in ('+', '-'):
            odd = sum(1 for other in range(source.vertexCount())
                      if morphism.vertexMap[other] == vertexIndex and source.vertexKind[other] in ('+', '-') and theta[other] % 2)
            half = (image[vertexIndex] - odd)//2
            value *= 2**half*math.factorial(half)
    return value

def ordinaryFactor(alpha):
    value = 1
    for entry in alpha:
        value *= math.factorial(entry)
    return value

def compareInvariantsAlongMorphism(morphism, tauImage, theta, mu = None, muImage = None):
    """Returns (left, right, residual) for the comparison of self-dual invariants along a morphism.

    left = sdFactor(theta) Omega^sd(inv^sd_theta(lambda^* tau')), right = sdFactorImage inv'^sd_theta'(tau').
    """
    source, target = morphism.source, morphism.target
    theta = source.sdClass(theta)
    tau = morphism.pullbackStability(tauImage)
    bound = theta.total()
    sourceTable = wallCrossing(source).solveInvariants(tau, bound, mu)
    targetTable = wallCrossing(target).solveInvariants(tauImage, bound, muImage)
    maps = omegaMaps(morphism)
    left = maps.omegaSd(sourceTable.sdInvariant(theta)).scale(sdFactor(source, theta))
    right = targetTable.sdInvariant(morphism.pushforwardClass(theta)).scale(sdFactorImage(morphism, theta))
    return left, right, left - right

def compareOrdinaryAlongMorphism(morphism, tauImage, alpha, mu = None, muImage = None):
    """Returns (left, right, residual) for prod alpha_i! Omega^pl(inv_alpha) = prod alpha'_i! inv'_alpha'."""
    source, target = morphism.source, morphism.target
    alpha = source.vector(alpha)
    tau = morphism.pullbackStability(tauImage)
    bound = 2*alpha.total()
    sourceTable = wallCrossing(source).solveInvariants(tau, bound, mu)
    targetTable = wallCrossing(target).solveInvariants(tauImage, bound, muImage)
    maps = omegaMaps(morphism)
    left = maps.omegaPl(sourceTable.ordinaryInvariant(alpha)).scale(ordinaryFactor(alpha))
    image = morphism.pushforwardClass(alpha)
    right = targetTable.ordinaryInvariant(image).scale(ordinaryFactor(image))
    return left, right, left - right


#---- CLASSICAL GENERATORS ----
def classicalGenerator(vertexIndex, level, sector = ORD, selfDualVertex = False):
    """Returns b_k = [t^k] exp(sum_j s_j t^j / j!), the image of the generator dual to c_1^k of a line bundle.

    For a self-dual vertex the exponent is sum over even j of 2 s_j t^j / j!.
    """
    series = [gradedPoly.zero() for index in range(level + 1)]
    for step in range(1, level + 1):
        if selfDualVertex and step % 2:
            continue
        scalar = Fraction(2 if selfDualVertex else 1, math.factorial(step))
        series[step] = gradedPoly.variable((sector, vertexIndex, step)).scale(scalar)
    #exp of a series without constant term, E_m = (1/m) sum_n n a_n E_(m-n)
    result = [gradedPoly.constant(1)]
    for degree in range(1, level + 1):
        total = gradedPoly.zero()
        for step in range(1, degree + 1):
            if not series[step].isZero():
                total = total + (series[step]*result[degree - step]).scale(step)
        result.append(total.scale(Fraction(1, degree)))
    return result[level]

def classicalElement(target, alpha, levels, sector = ORD):
    """Returns the product of classical generators: levels maps each vertex to a list of levels k, one per factor.

    The number of factors at a vertex may not exceed alpha_i (floor(theta_i / 2) at self-dual vertices).
    """
    poly = gradedPoly.constant(1)
    for vertexIndex, vertexLevels in levels.items():
        selfDualVertex = sector == SD and target.vertexKind[vertexIndex] in ('+', '-')
        limit = alpha[vertexIndex]//2 if selfDualVertex else alpha[vertexIndex]
        if len(vertexLevels) > limit:
            raise errors.ClassMismatch("Vertex " + target.vertexNames[vertexIndex] + " carries at most " + str(limit) + " classical factors.")
        for level in vertexLevels:
            poly = poly*classicalGenerator(vertexIndex, level, sector, selfDualVertex)
    return poly
