#   pyQuiver Representations Module

"""Brute-force representation checks for binary classes.

A binary representation has dimension 0 or 1 at every vertex, so up to the torus action it is determined by which
edges carry a nonzero map. Its subrepresentations are the vertex sets closed under the supported edges, and for
self-dual representations a subobject F is isotropic exactly when F and its dual F^dual share no vertex. These facts
give an exact oracle for stability questions on small self-dual quivers, and through Q-tilde_theta for the tame
class conditions.
"""

#---- IMPORTS ----
import itertools
from fractions import Fraction
from pyquiver import errors
from pyquiver import quivers
from pyquiver import utilities
from pyquiver.polynomials import gradedPoly
from pyquiver.twisted import tmElement

UNSTABLE = 'unstable'
STRICTLY_SEMISTABLE = 'strictly semistable'
STABLE = 'stable'

TAME_CERTIFIED = 'TAME_CERTIFIED'
NOT_TAME = 'NOT_TAME'
UNKNOWN = 'UNKNOWN'


#---- PATTERNS ----
class binaryRepPattern(object):
    """The support pattern of a generic binary representation.

    target -- the quiver
    vertices -- the supported vertices
    edges -- the edges carrying a nonzero map; both endpoints must be supported
    """
    def __init__(self, target, vertices, edges):
        self.quiver = target
        self.vertices = frozenset(vertices)
        self.edges = frozenset(edges)
        for edge in self.edges:
            if target.source[edge] not in self.vertices or target.target[edge] not in self.vertices:
                raise errors.QuiverError("Edge " + target.edgeNames[edge] + " is supported but one of its ends is not.")

    def dimensionVector(self, vertexSet = None):
        vertexSet = self.vertices if vertexSet is None else vertexSet
        return quivers.dimensionVector(1 if vertex in vertexSet else 0 for vertex in range(self.quiver.vertexCount()))

    def isClosed(self, vertexSet):
        target = self.quiver
        return all(target.target[edge] in vertexSet for edge in self.edges if target.source[edge] in vertexSet)

    def subrepSets(self):
        """Returns every vertex set of a subrepresentation, the empty set and the full support included."""
        ordered = sorted(self.vertices)
        found = []
        for size in range(len(ordered) + 1):
            for chosen in itertools.combinations(ordered, size):
                vertexSet = frozenset(chosen)
                if self.isClosed(vertexSet):
                    found.append(vertexSet)
        return found

    def isSelfDual(self):
        target = self.quiver
        return (all(target.dualVertex[vertex] in self.vertices for vertex in self.vertices)
                and all(target.dualEdge[edge] in self.edges for edge in self.edges))

    def toText(self):
        target = self.quiver
        vertexText = ",".join(target.vertexNames[vertex] for vertex in sorted(self.vertices))
        edgeText = ",".join(target.edgeNames[edge] for edge in sorted(self.edges))
        return "vertices {" + vertexText + "} edges {" + edgeText + "}"

    def __repr__(self):
        return self.toText()


def subrepClasses(pattern):
    """Returns the set of classes of subrepresentations of a generic representation with the given support."""
    return set(pattern.dimensionVector(vertexSet) for vertexSet in pattern.subrepSets())

def requireBinary(target, theta):
    if any(entry not in (0, 1) for entry in theta):
        raise errors.NonBinaryClass("Class " + repr(quivers.dimensionVector(theta)) + " is not binary.")

def allowedEdges(target, vertices):
    """Returns the edges that a self-dual binary representation on the given vertices can support.

    A self-dual edge of Q_1^- carries an antisymmetric 1x1 map, which vanishes.
    """
    return [edge for edge in range(target.edgeCount())
            if target.source[edge] in vertices and target.target[edge] in vertices and target.edgeKind[edge] != '-']

def sdPatterns(target, theta):
    """Yields every involution-invariant edge support of a binary self-dual class."""
    requireBinary(target, theta)
    vertices = frozenset(vertex for vertex, entry in enumerate(theta) if entry)
    orbits = []
    for edge in allowedEdges(target, vertices):
        orbit = frozenset([edge, target.dualEdge[edge]])
        if orbit not in orbits:
            orbits.append(orbit)
    for size in range(len(orbits) + 1):
        for chosen in itertools.combinations(orbits, size):
            yield binaryRepPattern(target, vertices, frozenset().union(*chosen))

def fullPattern(target, theta):
    requireBinary(target, theta)
    vertices = frozenset(vertex for vertex, entry in enumerate(theta) if entry)
    return binaryRepPattern(target, vertices, allowedEdges(target, vertices))

def isIsotropic(target, vertexSet):
    """Returns True if the binary subobject on vertexSet is isotropic: it shares no vertex with its dual."""
    return not any(target.dualVertex[vertex] in vertexSet for vertex in vertexSet)


#---- STABILITY ----
def classifyPattern(pattern, tau):
    """Returns (verdict, witness) for a self-dual binary pattern under a self-dual stability function.

    The verdict is UNSTABLE if some isotropic subobject F has tau(F) > 0, STRICTLY_SEMISTABLE if none does but some
    nonzero isotropic F has tau(F) = 0, and STABLE otherwise. The witness is the deciding subobject class, or None.
    """
    target = pattern.quiver
    witness = None
    for vertexSet in pattern.subrepSets():
        if not vertexSet or not isIsotropic(target, vertexSet):
            continue
        weight = tau.weight(pattern.dimensionVector(vertexSet))
        if weight > 0:
            return UNSTABLE, pattern.dimensionVector(vertexSet)
        if weight == 0 and witness is None:
            witness = pattern.dimensionVector(vertexSet)
    if witness is not None:
        return STRICTLY_SEMISTABLE, witness
    return STABLE, None

def sdStrictlySemistableExists(target, tau, theta = None):
    """Returns (True, (pattern, F)) if some self-dual binary representation of class theta is semistable but not
    stable, and (False, None) otherwise.

    theta -- a binary self-dual class; defaults to the class with every entry 1
    """
    tau.requireSelfDual(target)
    if theta is None:
        theta = quivers.dimensionVector([1]*target.vertexCount())
    for pattern in sdPatterns(target, theta):
        verdict, witness = classifyPattern(pattern, tau)
        utilities.debugNotice('oracle', 'oracle', pattern.toText() + ": " + verdict)
        if verdict == STRICTLY_SEMISTABLE:
            return True, (pattern, witness)
    return False, None

def stableSdPointData(target, tau, theta):
    """Returns (nonempty, r) for the stable self-dual locus of a binary class with forest support.

    nonempty -- True if a tau-stable self-dual representation of class theta exists
    r -- the number of connected components of the support; the stabilizer of a stable point is Z_2^r
    """
    requireBinary(target, theta)
    theta = quivers.dimensionVector(theta)
    if theta.isZero():
        return True, 0
    pattern = fullPattern(target, theta)
    supportVertices = sorted(pattern.vertices)
    parent = dict((vertex, vertex) for vertex in supportVertices)
    def find(vertex):
        while parent[vertex] != vertex:
            parent[vertex] = parent[parent[vertex]]
            vertex = parent[vertex]
        return vertex
    for edge in pattern.edges:
        first, second = find(target.source[edge]), find(target.target[edge])
        if first == second:
            raise errors.UnsupportedShape("Support of " + repr(theta) + " contains a cycle.")
        parent[first] = second
    components = {}
    for vertex in supportVertices:
        components.setdefault(find(vertex), []).append(vertex)
    components = list(components.values())
    if not all(target.isSelfDualComponent(component) for component in components):
        return False, len(components)
    verdict, witness = classifyPattern(pattern, tau)
    return verdict == STABLE, len(components)

def geometricInvariant(target, tau, theta):
    """Returns 2^-r 1^sd_theta if the stable locus of theta is nonempty, and 0 otherwise.

    Raises UnsupportedShape if theta has strictly semistable self-dual representations.
    """
    theta = target.sdClass(theta)
    if not theta.isZero():
        exists, witness = sdStrictlySemistableExists(target, tau, theta)
        if exists:
            raise errors.UnsupportedShape("Class " + repr(theta) + " has strictly semistable representations (" + witness[0].toText() + ").")
    nonempty, components = stableSdPointData(target, tau, theta)
    if not nonempty:
        return tmElement(theta, gradedPoly.zero())
    return tmElement(theta, gradedPoly.constant(Fraction(1, 2**components)))


#---- TAME CLASSES ----
class tameVerdict(object):
    """The result of tameCheck.

    status -- TAME_CERTIFIED, NOT_TAME or UNKNOWN
    witness -- for NOT_TAME, the (pattern, subobject class) found by the oracle
    reasons -- lines explaining how each condition was decided
    """
    def __init__(self, status, witness = None, reasons = None):
        self.status = status
        self.witness = witness
        self.reasons = list(reasons or [])

    def toText(self):
        lines = [self.status]
        if self.witness is not None:
            pattern, subobject = self.witness
            lines.append("witness: " + pattern.toText() + " with isotropic subobject " + repr(subobject))
        lines.extend(self.reasons)
        return "\n".join(lines)

    def __repr__(self):
        return self.toText()


def pathCounts(target, start):
    """Returns {vertex: number of paths from start} over the vertices reachable from start (start included)."""
    counts = dict((vertex, 0) for vertex in range(target.vertexCount()))
    counts[start] = 1
    for vertex in target.topologicalOrder():
        if not counts[vertex]:
            continue
        for edge in range(target.edgeCount()):
            if target.source[edge] == vertex:
                counts[target.target[edge]] += counts[vertex]
    return dict((vertex, count) for vertex, count in counts.items() if count)

def unstableByGeneratedSubobject(target, tau, theta):
    """Returns a vertex i such that every representation of class theta is unstable, or None.

    A nonzero vector at i generates a subobject supported on the vertices reachable from i, with dimension at most
    min(theta_j, paths from i to j) at j. When the reachable set is disjoint from its dual the subobject is isotropic,
    and a positive lower bound for its weight shows the representation is unstable.
    """
    for vertex in range(target.vertexCount()):
        if not theta[vertex]:
            continue
        counts = pathCounts(target, vertex)
        reachable = set(counts)
        if any(target.dualVertex[other] in reachable for other in reachable):
            continue
        bound = tau.values[vertex]
        for other, count in counts.items():
            if other != vertex and tau.values[other] < 0:
                bound += tau.values[other]*min(theta[other], count)
        if bound > 0:
            return vertex
    return None

def wallClasses(target, tau, theta):
    """Returns the classes an isotropic subobject with tau = 0 could have: nonzero alpha, alpha + alpha^dual <= theta."""
    return [alpha for alpha in quivers.vectorsBelow(theta) if target.bar(alpha).leq(theta) and tau.weight(alpha) == 0]

def hasWall(target, tau, theta):
    return bool(wallClasses(target, tau, theta))

def isotropicDestabilizer(target, tau, alpha):
    """Returns a vertex set S such that every subobject F of class alpha restricts to an isotropic subobject F|_S
    with tau(F|_S) > 0, or None.

    S must lie in the support of alpha, be closed under the edges that stay inside the support, and be disjoint from
    its dual.
    """
    support = [vertex for vertex in range(target.vertexCount()) if alpha[vertex]]
    for size in range(1, len(support) + 1):
        for chosen in itertools.combinations(support, size):
            vertexSet = frozenset(chosen)
            if not isIsotropic(target, vertexSet):
                continue
            closed = all(target.target[edge] in vertexSet for edge in range(target.edgeCount())
                         if target.source[edge] in vertexSet and alpha[target.target[edge]])
            if closed and sum(tau.values[vertex]*alpha[vertex] for vertex in vertexSet) > 0:
                return vertexSet
    return None

def tameCheck(target, tau, theta):
    """Decides whether theta is tame for tau, as far as the implemented criteria allow.

    Condition (2), on Q-tilde_theta at the all-ones class, is decided exactly by the binary oracle. Condition (1) is
    decided by the oracle for binary theta. Otherwise it is certified by wall-freeness, by a generated unstable
    subobject, or by showing every possible tau = 0 isotropic subobject class forces an unstable piece. When none
    applies the verdict is UNKNOWN.
    """
    tau.requireSelfDual(target)
    theta = target.sdClass(theta)
    reasons = []
    split, morphism = target.qTilde(theta)
    splitTau = morphism.pullbackStability(tau)
    exists, witness = sdStrictlySemistableExists(split, splitTau)
    if exists:
        reasons.append("condition (2) fails on " + utilities.objectIdentifier(split))
        return tameVerdict(NOT_TAME, witness, reasons)
    reasons.append("condition (2) holds on " + utilities.objectIdentifier(split))
    if all(entry in (0, 1) for entry in theta):
        exists, witness = sdStrictlySemistableExists(target, tau, theta)
        if exists:
            reasons.append("condition (1) fails for " + repr(theta))
            return tameVerdict(NOT_TAME, witness, reasons)
        reasons.append("condition (1) holds: binary class decided by the oracle")
        return tameVerdict(TAME_CERTIFIED, None, reasons)
    if not hasWall(target, tau, theta):
        reasons.append("condition (1) holds: no class alpha with alpha + alpha^dual <= theta has tau(alpha) = 0")
        return tameVerdict(TAME_CERTIFIED, None, reasons)
    vertex = unstableByGeneratedSubobject(target, tau, theta)
    if vertex is not None:
        reasons.append("condition (1) holds: every representation is destabilized by the subobject generated at " + target.vertexNames[vertex])
        return tameVerdict(TAME_CERTIFIED, None, reasons)
    walls = wallClasses(target, tau, theta)
    if all(isotropicDestabilizer(target, tau, alpha) is not None for alpha in walls):
        reasons.append("condition (1) holds: a subobject of every class with tau = 0 has an isotropic piece with tau > 0")
        return tameVerdict(TAME_CERTIFIED, None, reasons)
    reasons.append("condition (1) undecided")
    return tameVerdict(UNKNOWN, None, reasons)
