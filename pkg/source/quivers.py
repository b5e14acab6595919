#   pyQuiver Quivers Module

"""Self-dual quiver combinatorics.

This module provides the combinatorial layer on which every other pyQuiver module is built:
dimension vectors, ordinary and self-dual quivers with their Euler forms and sign data,
stability functions, the vertex-splitting construction of Q-tilde, and the quiver text format.

All objects are immutable after construction. Vertices and edges are addressed by their
integer position in declaration order; names are kept for printing and parsing.
"""

#---- IMPORTS ----
import math
import random
import itertools
from fractions import Fraction
from pyquiver import errors
from pyquiver import utilities


#---- DIMENSION VECTORS ----
class dimensionVector(tuple):
    """A tuple of nonnegative integers indexed by the vertices of a quiver.

    Addition and subtraction are componentwise, unlike the tuple concatenation they replace.
    The same type is used for ordinary classes and for self-dual classes.
    """
    def __new__(cls, entries):
        return super(dimensionVector, cls).__new__(cls, tuple(int(entry) for entry in entries))

    def __add__(self, other):
        return dimensionVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return dimensionVector(a - b for a, b in zip(self, other))

    def __mul__(self, scalar):
        return dimensionVector(scalar*a for a in self)

    __rmul__ = __mul__

    def total(self):
        return sum(self)

    def isZero(self):
        return all(entry == 0 for entry in self)

    def isNonnegative(self):
        return all(entry >= 0 for entry in self)

    def leq(self, other):
        """Returns True if self <= other componentwise."""
        return all(a <= b for a, b in zip(self, other))

    def orderKey(self):
        """Key for the fixed total order on dimension vectors: by total size, then lexicographically."""
        return (self.total(), tuple(self))

    def __repr__(self):
        return "(" + ",".join(str(entry) for entry in self) + ")"


def zeroVector(size):
    return dimensionVector([0]*size)

def unitVector(size, index):
    entries = [0]*size
    entries[index] = 1
    return dimensionVector(entries)

def vectorsBelow(bound):
    """Yields every nonzero dimension vector that is componentwise <= bound."""
    for entries in itertools.product(*[range(entry + 1) for entry in bound]):
        vector = dimensionVector(entries)
        if not vector.isZero():
            yield vector

def vectorsOfTotalAtMost(size, total):
    """Yields every nonzero dimension vector of the given length whose entries sum to at most total."""
    def extend(prefix, remaining, slots):
        if slots == 0:
            yield prefix
            return
        for entry in range(remaining + 1):
            for result in extend(prefix + [entry], remaining - entry, slots - 1):
                yield result
    for entries in extend([], total, size):
        vector = dimensionVector(entries)
        if not vector.isZero():
            yield vector

def orderedDecompositions(vector, allowed = None):
    """Yields every ordered tuple (v_1, ..., v_n), n >= 1, of nonzero vectors summing to vector.

    allowed -- optional predicate; parts failing it are skipped.
    """
    if vector.isZero():
        return
    for first in vectorsBelow(vector):
        if allowed is not None and not allowed(first):
            continue
        rest = vector - first
        if rest.isZero():
            yield (first,)
        else:
            for tail in orderedDecompositions(rest, allowed):
                yield (first,) + tail


#---- QUIVERS ----
class quiver(object):
    """A finite quiver: vertices, edges, source and target maps.

    vertices -- ordered list of vertex names
    edges -- ordered list of (name, sourceName, targetName) tuples
    name -- optional name used in notices
    """
    def __init__(self, vertices, edges, name = None):
        self._name_ = name
        self.vertexNames = list(vertices)
        if len(set(self.vertexNames)) != len(self.vertexNames):
            raise errors.QuiverError("Duplicate vertex names in quiver.")
        self.vertexIndex = dict((vertexName, index) for index, vertexName in enumerate(self.vertexNames))
        self.edgeNames = []
        self.source = []
        self.target = []
        for edgeName, sourceName, targetName in edges:
            if sourceName not in self.vertexIndex or targetName not in self.vertexIndex:
                raise errors.QuiverError("Edge " + str(edgeName) + " refers to an unknown vertex.")
            self.edgeNames.append(edgeName)
            self.source.append(self.vertexIndex[sourceName])
            self.target.append(self.vertexIndex[targetName])
        if len(set(self.edgeNames)) != len(self.edgeNames):
            raise errors.QuiverError("Duplicate edge names in quiver.")
        self.edgeIndex = dict((edgeName, index) for index, edgeName in enumerate(self.edgeNames))

    def vertexCount(self):
        return len(self.vertexNames)

    def edgeCount(self):
        return len(self.edgeNames)

    def zero(self):
        return zeroVector(self.vertexCount())

    def unit(self, vertex):
        return unitVector(self.vertexCount(), vertex)

    def vector(self, entries):
        vector = dimensionVector(entries)
        if len(vector) != self.vertexCount():
            raise errors.ClassMismatch("Class " + repr(vector) + " does not match a quiver with " + str(self.vertexCount()) + " vertices.")
        return vector

    #-- acyclicity --
    def topologicalOrder(self, rng = None):
        """Returns the vertices in an order in which every edge points forward.

        rng -- optional random.Random used to break ties, giving a random topological order.

        Raises CyclicQuiver if no such order exists.
        """
        inDegree = [0]*self.vertexCount()
        for target in self.target:
            inDegree[target] += 1
        ready = [vertex for vertex in range(self.vertexCount()) if inDegree[vertex] == 0]
        order = []
        while ready:
            if rng is not None:
                pick = rng.randrange(len(ready))
            else:
                pick = 0
            vertex = ready.pop(pick)
            order.append(vertex)
            for edge in range(self.edgeCount()):
                if self.source[edge] == vertex:
                    inDegree[self.target[edge]] -= 1
                    if inDegree[self.target[edge]] == 0:
                        ready.append(self.target[edge])
            ready.sort()
        if len(order) != self.vertexCount():
            raise errors.CyclicQuiver("Quiver " + utilities.objectIdentifier(self) + " has an oriented cycle.")
        return order

    def isAcyclic(self):
        try:
            self.topologicalOrder()
            return True
        except errors.CyclicQuiver:
            return False

    def edgesBetween(self, sourceVertex, targetVertex):
        return sum(1 for edge in range(self.edgeCount()) if self.source[edge] == sourceVertex and self.target[edge] == targetVertex)

    #-- Euler forms --
    def eulerForm(self, alpha, beta):
        """Returns chi_Q(alpha, beta) = sum_i alpha_i beta_i - sum_a alpha_s(a) beta_t(a)."""
        value = sum(a*b for a, b in zip(alpha, beta))
        for edge in range(self.edgeCount()):
            value -= alpha[self.source[edge]]*beta[self.target[edge]]
        return value

    def chiSym(self, alpha, beta):
        """Returns the symmetrized Euler form chi(alpha, beta) = chi_Q(alpha, beta) + chi_Q(beta, alpha)."""
        return self.eulerForm(alpha, beta) + self.eulerForm(beta, alpha)

    def chiHat(self, alpha):
        return self.chiSym(alpha, alpha)

    def epsilon(self, alpha, beta):
        """Returns the sign (-1)^chi_Q(alpha, beta)."""
        return -1 if self.eulerForm(alpha, beta) % 2 else 1

    def epsilonMulti(self, alphas):
        """Returns the product of epsilon(alpha_i, alpha_j) over i < j."""
        sign = 1
        for first, second in itertools.combinations(range(len(alphas)), 2):
            sign *= self.epsilon(alphas[first], alphas[second])
        return sign

    def cartanMatrix(self):
        """Returns the symmetric matrix C with C_ii' = 2 delta_ii' - #(i -> i') - #(i' -> i)."""
        size = self.vertexCount()
        matrix = [[2 if row == column else 0 for column in range(size)] for row in range(size)]
        for edge in range(self.edgeCount()):
            matrix[self.source[edge]][self.target[edge]] -= 1
            matrix[self.target[edge]][self.source[edge]] -= 1
        return matrix

    #-- dimensions of the quotient presentation --
    def representationSpaceDimension(self, alpha):
        return sum(alpha[self.source[edge]]*alpha[self.target[edge]] for edge in range(self.edgeCount()))

    def gaugeGroupDimension(self, alpha):
        return sum(entry*entry for entry in alpha)

    def stackDimension(self, alpha):
        """Returns dim V_alpha - dim G_alpha."""
        return self.representationSpaceDimension(alpha) - self.gaugeGroupDimension(alpha)

    #-- supports --
    def supportVertices(self, alpha):
        return [vertex for vertex in range(self.vertexCount()) if alpha[vertex] != 0]

    def supportEdges(self, alpha):
        return [edge for edge in range(self.edgeCount()) if alpha[self.source[edge]] != 0 and alpha[self.target[edge]] != 0]

    def supportComponents(self, alpha):
        """Returns the connected components of supp(alpha) as a list of sorted vertex lists."""
        vertices = self.supportVertices(alpha)
        edges = self.supportEdges(alpha)
        parent = dict((vertex, vertex) for vertex in vertices)
        def find(vertex):
            while parent[vertex] != vertex:
                parent[vertex] = parent[parent[vertex]]
                vertex = parent[vertex]
            return vertex
        for edge in edges:
            rootSource, rootTarget = find(self.source[edge]), find(self.target[edge])
            if rootSource != rootTarget:
                parent[rootSource] = rootTarget
        components = {}
        for vertex in vertices:
            components.setdefault(find(vertex), []).append(vertex)
        return sorted(sorted(component) for component in components.values())

    def supportIsForest(self, alpha):
        """Returns True if every connected component of supp(alpha) is a tree."""
        return len(self.supportEdges(alpha)) == len(self.supportVertices(alpha)) - len(self.supportComponents(alpha))

    def isBinary(self, alpha):
        return all(entry in (0, 1) for entry in alpha)

    def isPrimitive(self, alpha):
        """Returns True if alpha = delta_i for some vertex i."""
        return sum(alpha) == 1 and all(entry >= 0 for entry in alpha)

    def vertexLabel(self, vertex):
        return self.vertexNames[vertex]


class selfDualQuiver(quiver):
    """A quiver together with a contravariant involution and vertex/edge signs.

    vertices -- ordered list of (name, dualName, u) with u in {+1, -1}
    edges -- ordered list of (name, sourceName, targetName, dualName, v) with v in {+1, -1}
    name -- optional name used in notices

    The declaration order fixes the partitions Q_0^+, Q_0^-, Q_0^D, Q_0^Dv and Q_1^+, Q_1^-, Q_1^D, Q_1^Dv:
    a non-self-dual vertex (edge) belongs to the D part when it is declared before its dual.
    """
    def __init__(self, vertices, edges, name = None):
        super(selfDualQuiver, self).__init__([vertex[0] for vertex in vertices],
                                             [(edge[0], edge[1], edge[2]) for edge in edges], name)
        self.dualVertex = []
        self.u = []
        for vertexName, dualName, sign in vertices:
            if dualName not in self.vertexIndex:
                raise errors.QuiverError("Vertex " + str(vertexName) + " has unknown dual " + str(dualName) + ".")
            if sign not in (1, -1):
                raise errors.QuiverError("Vertex " + str(vertexName) + " has sign u=" + str(sign) + "; must be +1 or -1.")
            self.dualVertex.append(self.vertexIndex[dualName])
            self.u.append(sign)
        self.dualEdge = []
        self.v = []
        for edgeName, sourceName, targetName, dualName, sign in edges:
            if dualName not in self.edgeIndex:
                raise errors.QuiverError("Edge " + str(edgeName) + " has unknown dual " + str(dualName) + ".")
            if sign not in (1, -1):
                raise errors.QuiverError("Edge " + str(edgeName) + " has sign v=" + str(sign) + "; must be +1 or -1.")
            self.dualEdge.append(self.edgeIndex[dualName])
            self.v.append(sign)
        self.validate()
        self.vertexKind = [self._classifyVertex(vertex) for vertex in range(self.vertexCount())]
        self.edgeKind = [self._classifyEdge(edge) for edge in range(self.edgeCount())]

    def validate(self):
        """Checks every self-dual quiver invariant, raising QuiverError naming the offending vertex or edge."""
        for vertex in range(self.vertexCount()):
            dual = self.dualVertex[vertex]
            if self.dualVertex[dual] != vertex:
                raise errors.QuiverError("Vertex involution is not an involution at " + self.vertexNames[vertex] + ".")
            if self.u[dual] != self.u[vertex]:
                raise errors.QuiverError("Vertex " + self.vertexNames[vertex] + " and its dual have different signs u.")
        for edge in range(self.edgeCount()):
            dual = self.dualEdge[edge]
            name = self.edgeNames[edge]
            if self.dualEdge[dual] != edge:
                raise errors.QuiverError("Edge involution is not an involution at " + name + ".")
            if self.dualVertex[self.source[edge]] != self.target[dual] or self.dualVertex[self.target[edge]] != self.source[dual]:
                raise errors.QuiverError("Edge " + name + " and its dual are not compatible with the vertex involution.")
            if self.v[edge]*self.v[dual] != self.u[self.source[edge]]*self.u[self.target[edge]]:
                raise errors.QuiverError("Edge " + name + " violates v_a v_a^dual = u_s(a) u_t(a).")

    def _classifyVertex(self, vertex):
        dual = self.dualVertex[vertex]
        if dual == vertex:
            return '+' if self.u[vertex] == 1 else '-'
        return 'D' if vertex < dual else 'Dv'

    def _classifyEdge(self, edge):
        dual = self.dualEdge[edge]
        if dual == edge:
            return '+' if self.u[self.source[edge]]*self.v[edge] == 1 else '-'
        return 'D' if edge < dual else 'Dv'

    def verticesOfKind(self, kind):
        return [vertex for vertex in range(self.vertexCount()) if self.vertexKind[vertex] == kind]

    def edgesOfKind(self, kind):
        return [edge for edge in range(self.edgeCount()) if self.edgeKind[edge] == kind]

    #-- class operations --
    def dual(self, alpha):
        """Returns alpha^dual, with (alpha^dual)_i = alpha_(i^dual)."""
        return dimensionVector(alpha[self.dualVertex[vertex]] for vertex in range(self.vertexCount()))

    def bar(self, alpha):
        """Returns alpha + alpha^dual, a self-dual class."""
        return dimensionVector(alpha) + self.dual(alpha)

    def underlying(self, theta):
        """Returns j(theta), the self-dual class viewed as an ordinary dimension vector."""
        return dimensionVector(theta)

    def isSdClass(self, theta):
        if len(theta) != self.vertexCount() or any(entry < 0 for entry in theta):
            return False
        for vertex in range(self.vertexCount()):
            if theta[vertex] != theta[self.dualVertex[vertex]]:
                return False
            if self.vertexKind[vertex] == '-' and theta[vertex] % 2:
                return False
        return True

    def sdClass(self, entries):
        theta = self.vector(entries)
        if not self.isSdClass(theta):
            raise errors.ClassMismatch("Class " + repr(theta) + " is not a self-dual class.")
        return theta

    def isPrimitiveSd(self, theta):
        """Returns True if theta is a sum of distinct vertices of Q_0^+ (the zero class included)."""
        return all(entry == 0 or (entry == 1 and self.vertexKind[vertex] == '+') for vertex, entry in enumerate(theta))

    def primitiveSize(self, theta):
        """Returns |theta| for a primitive self-dual class."""
        if not self.isPrimitiveSd(theta):
            raise errors.ClassMismatch("Class " + repr(theta) + " is not primitive.")
        return sum(theta)

    #-- self-dual Euler forms --
    def cartanDiagonal(self):
        """Returns the vector of coefficients C-double-dot_i = -u_i (2 delta_(i,i^dual) + sum of v_a over self-dual edges between i and i^dual)."""
        values = []
        for vertex in range(self.vertexCount()):
            dual = self.dualVertex[vertex]
            total = 2 if dual == vertex else 0
            for edge in range(self.edgeCount()):
                if self.edgeKind[edge] not in ('+', '-'):
                    continue
                if self.source[edge] == vertex and self.target[edge] == dual:
                    total += self.v[edge]
                if self.source[edge] == dual and self.target[edge] == vertex:
                    total += self.v[edge]
            values.append(-self.u[vertex]*total)
        return values

    def chiDot(self, alpha, theta):
        """Returns the pair (chi-dot_Q(alpha, theta), chi-dot(alpha, theta))."""
        chiDotQ = self.eulerForm(alpha, self.underlying(theta))
        return chiDotQ, chiDotQ + self.eulerForm(self.dual(alpha), self.underlying(theta))

    def chiDdotQ(self, alpha):
        """Returns chi-double-dot_Q(alpha), the alternating rank of the Z_2-fixed part of Ext(alpha, alpha^dual)."""
        value = 0
        for vertex in range(self.vertexCount()):
            kind = self.vertexKind[vertex]
            entry = alpha[vertex]
            if kind == 'D':
                value += entry*alpha[self.dualVertex[vertex]]
            elif kind == '+':
                value += math.comb(entry, 2)
            elif kind == '-':
                value += math.comb(entry + 1, 2)
        for edge in range(self.edgeCount()):
            kind = self.edgeKind[edge]
            entry = alpha[self.source[edge]]
            if kind == 'D':
                value -= entry*alpha[self.dualVertex[self.target[edge]]]
            elif kind == '+':
                value -= math.comb(entry + 1, 2)
            elif kind == '-':
                value -= math.comb(entry, 2)
        return value

    def chiDdot(self, alpha):
        """Returns the pair (chi-double-dot_Q(alpha), chi-double-dot(alpha))."""
        chiDdotQ = self.chiDdotQ(alpha)
        return chiDdotQ, chiDdotQ + self.chiDdotQ(self.dual(alpha))

    def chiSdQ(self, alpha, theta):
        """Returns chi^sd_Q(alpha, theta) = chi-dot_Q(alpha, theta) + chi-double-dot_Q(alpha)."""
        return self.chiDot(alpha, theta)[0] + self.chiDdotQ(alpha)

    def chiRing(self, theta):
        """Returns the grading shift of the self-dual moduli stack, chi-ring(theta) = chi-double-dot(j(theta))."""
        return self.chiDdot(self.underlying(theta))[1]

    def epsilonSd(self, alpha, theta):
        """Returns the sign (-1)^(chi-dot_Q(alpha, theta) + chi-double-dot_Q(alpha))."""
        return -1 if self.chiSdQ(alpha, theta) % 2 else 1

    def epsilonSdMulti(self, alphas, theta):
        """Returns epsilon^sd(alpha_1, ..., alpha_n, theta)."""
        sign = 1
        for first, second in itertools.combinations(range(len(alphas)), 2):
            sign *= self.epsilon(alphas[first], alphas[second])*self.epsilon(alphas[first], self.dual(alphas[second]))
        for alpha in alphas:
            sign *= self.epsilonSd(alpha, theta)
        return sign

    #-- dimensions of the self-dual quotient presentation --
    def sdRepresentationSpaceDimension(self, theta):
        dimension = 0
        for edge in range(self.edgeCount()):
            kind = self.edgeKind[edge]
            entry = theta[self.source[edge]]
            if kind == 'D':
                dimension += entry*theta[self.target[edge]]
            elif kind == '+':
                dimension += math.comb(entry + 1, 2)
            elif kind == '-':
                dimension += math.comb(entry, 2)
        return dimension

    def sdGaugeGroupDimension(self, theta):
        dimension = 0
        for vertex in range(self.vertexCount()):
            kind = self.vertexKind[vertex]
            entry = theta[vertex]
            if kind == 'D':
                dimension += entry*entry
            elif kind == '+':    #orthogonal group
                dimension += math.comb(entry, 2)
            elif kind == '-':    #symplectic group
                dimension += math.comb(entry + 1, 2)
        return dimension

    def sdStackDimension(self, theta):
        """Returns dim V^sd_theta - dim G^sd_theta."""
        return self.sdRepresentationSpaceDimension(theta) - self.sdGaugeGroupDimension(theta)

    def isSelfDualComponent(self, component):
        return sorted(self.dualVertex[vertex] for vertex in component) == sorted(component)

    #-- derived quivers --
    def qTilde(self, theta):
        """Returns (Q-tilde_theta, lambda), splitting each vertex i into theta_i vertices.

        theta -- a self-dual class

        Vertex (i, j) has dual (i^dual, theta_i + 1 - j). Edges (a, j, k) join (s(a), j) to (t(a), k), except that
        (a, j, j^dual) is omitted for a in Q_1^-. The returned morphism sends (i, j) to i and (a, j, k) to a.
        """
        theta = self.sdClass(theta)
        def vertexName(vertex, copy):
            return self.vertexNames[vertex] + "_" + str(copy)
        vertices = []
        vertexMap = []
        for vertex in range(self.vertexCount()):
            for copy in range(1, theta[vertex] + 1):
                dualCopy = theta[vertex] + 1 - copy
                vertices.append((vertexName(vertex, copy), vertexName(self.dualVertex[vertex], dualCopy), self.u[vertex]))
                vertexMap.append(vertex)
        edges = []
        edgeMap = []
        for edge in range(self.edgeCount()):
            source, target = self.source[edge], self.target[edge]
            dual = self.dualEdge[edge]
            for copy in range(1, theta[source] + 1):
                for targetCopy in range(1, theta[target] + 1):
                    if self.edgeKind[edge] == '-' and targetCopy == theta[source] + 1 - copy:
                        continue
                    name = self.edgeNames[edge] + "_" + str(copy) + "_" + str(targetCopy)
                    dualName = self.edgeNames[dual] + "_" + str(theta[target] + 1 - targetCopy) + "_" + str(theta[source] + 1 - copy)
                    edges.append((name, vertexName(source, copy), vertexName(target, targetCopy), dualName, self.v[edge]))
                    edgeMap.append(edge)
        name = (self._name_ or "Q") + "~" + repr(theta)
        split = selfDualQuiver(vertices, edges, name)
        return split, quiverMorphism(split, self, vertexMap, dict(enumerate(edgeMap)))

    def makeIncreasingSd(self, seed = None):
        """Returns an increasing self-dual stability function.

        seed -- optional seed. Different seeds give different (random) topological orders and spacings.

        Picks a strictly increasing rho along a topological order and returns tau(i) = (rho(i) - rho(i^dual))/2.
        """
        rng = random.Random(seed) if seed is not None else None
        order = self.topologicalOrder(rng)
        rho = [0]*self.vertexCount()
        position = 0
        for vertex in order:
            position += 1 if rng is None else rng.randint(1, 3)
            rho[vertex] = position
        values = [Fraction(rho[vertex] - rho[self.dualVertex[vertex]], 2) for vertex in range(self.vertexCount())]
        tau = stabilityFunction(values, "increasing" + ("" if seed is None else "-" + str(seed)))
        assert tau.isIncreasing(self) and tau.isSelfDual(self)
        return tau


#---- MORPHISMS ----
class quiverMorphism(object):
    """A morphism of quivers lambda: Q -> Q'.

    source -- the quiver Q
    target -- the quiver Q'
    vertexMap -- list sending each vertex of Q to a vertex of Q'
    edgeMap -- dict sending each edge in Q_1^o (a subset of Q_1) to an edge of Q'

    Every edge a' of Q' and every pair i, j of vertices over s(a'), t(a') must have exactly one lift in Q_1^o.
    For an edge a' in Q'_1^- the lift between i and i^dual may be missing.
    When both quivers are self-dual the map must also commute with the involutions and preserve the signs.
    """
    def __init__(self, source, target, vertexMap, edgeMap, name = None):
        self._name_ = name
        self.source = source
        self.target = target
        self.vertexMap = list(vertexMap)
        self.edgeMap = dict(edgeMap)
        self.validate()

    def isSelfDual(self):
        return isinstance(self.source, selfDualQuiver) and isinstance(self.target, selfDualQuiver)

    def validate(self):
        source, target = self.source, self.target
        if len(self.vertexMap) != source.vertexCount():
            raise errors.InvalidMorphism("Vertex map does not cover every vertex.")
        for edge, image in self.edgeMap.items():
            if target.source[image] != self.vertexMap[source.source[edge]] or target.target[image] != self.vertexMap[source.target[edge]]:
                raise errors.InvalidMorphism("Edge " + source.edgeNames[edge] + " is not compatible with source and target.")
        selfDual = self.isSelfDual()
        for imageEdge in range(target.edgeCount()):
            antisymmetric = selfDual and target.edgeKind[imageEdge] == '-'
            for first in range(source.vertexCount()):
                if self.vertexMap[first] != target.source[imageEdge]:
                    continue
                for second in range(source.vertexCount()):
                    if self.vertexMap[second] != target.target[imageEdge]:
                        continue
                    lifts = [edge for edge, image in self.edgeMap.items() if image == imageEdge and source.source[edge] == first and source.target[edge] == second]
                    #an antisymmetric self-dual edge need not lift between a vertex and its dual
                    allowed = (0, 1) if antisymmetric and second == source.dualVertex[first] else (1,)
                    if len(lifts) not in allowed:
                        raise errors.InvalidMorphism("Edge " + target.edgeNames[imageEdge] + " has " + str(len(lifts)) + " lifts between "
                                                     + source.vertexNames[first] + " and " + source.vertexNames[second] + ".")
        if selfDual:
            for vertex in range(source.vertexCount()):
                if self.vertexMap[source.dualVertex[vertex]] != target.dualVertex[self.vertexMap[vertex]]:
                    raise errors.InvalidMorphism("Vertex map does not commute with the involution at " + source.vertexNames[vertex] + ".")
                if source.u[vertex] != target.u[self.vertexMap[vertex]]:
                    raise errors.InvalidMorphism("Vertex map does not preserve u at " + source.vertexNames[vertex] + ".")
            for edge, image in self.edgeMap.items():
                dual = source.dualEdge[edge]
                if dual not in self.edgeMap or self.edgeMap[dual] != target.dualEdge[image]:
                    raise errors.InvalidMorphism("Edge map does not commute with the involution at " + source.edgeNames[edge] + ".")
                if source.v[edge] != target.v[image]:
                    raise errors.InvalidMorphism("Edge map does not preserve v at " + source.edgeNames[edge] + ".")

    def pushforwardClass(self, alpha):
        """Returns lambda_*(alpha), summing entries over the fibers of the vertex map."""
        entries = [0]*self.target.vertexCount()
        for vertex, entry in enumerate(alpha):
            entries[self.vertexMap[vertex]] += entry
        return dimensionVector(entries)

    def pullbackStability(self, tau):
        """Returns lambda^*(tau), the stability function with value tau(lambda(i)) at each vertex i."""
        return stabilityFunction([tau.values[self.vertexMap[vertex]] for vertex in range(self.source.vertexCount())],
                                 (tau._name_ or "tau") + "*")

    def compose(self, other):
        """Returns other o self."""
        if other.source is not self.target:
            raise errors.InvalidMorphism("Morphisms are not composable.")
        vertexMap = [other.vertexMap[image] for image in self.vertexMap]
        edgeMap = dict((edge, other.edgeMap[image]) for edge, image in self.edgeMap.items() if image in other.edgeMap)
        return quiverMorphism(self.source, other.target, vertexMap, edgeMap)


def identityMorphism(target):
    return quiverMorphism(target, target, range(target.vertexCount()), dict((edge, edge) for edge in range(target.edgeCount())))


#---- STABILITY ----
class stabilityFunction(object):
    """A stability function: an exact rational value per vertex.

    values -- iterable of rationals (anything Fraction accepts), in vertex order
    name -- optional label
    """
    def __init__(self, values, name = None):
        self._name_ = name
        self.values = tuple(Fraction(value) for value in values)

    def weight(self, alpha):
        """Returns sum_i tau_i alpha_i, which has the sign of the slope."""
        return sum(value*entry for value, entry in zip(self.values, alpha))

    def slope(self, alpha):
        """Returns tau(alpha) = sum_i tau_i alpha_i / sum_i alpha_i."""
        total = sum(alpha)
        if total == 0:
            raise ValueError("The zero class has no slope.")
        return self.weight(alpha)/total

    def isSelfDual(self, target):
        return all(self.values[target.dualVertex[vertex]] == -self.values[vertex] for vertex in range(target.vertexCount()))

    def isIncreasing(self, target):
        return all(self.values[target.source[edge]] < self.values[target.target[edge]] for edge in range(target.edgeCount()))

    def requireSelfDual(self, target):
        if not self.isSelfDual(target):
            raise errors.NotSelfDualStability("Stability " + utilities.objectIdentifier(self) + " does not satisfy tau(i^dual) = -tau(i).")

    def __eq__(self, other):
        return isinstance(other, stabilityFunction) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "stabilityFunction(" + ", ".join(utilities.formatRational(value) for value in self.values) + ")"


#---- TEXT FORMAT ----
def parseQuiverText(text, name = None):
    """Parses the line-oriented quiver format.

    text -- the file contents
    name -- optional quiver name

    Recognized lines (# starts a comment):
        vertex <name> dual=<name> u=<+1|-1>
        edge <name> <source> <target> dual=<name> v=<+1|-1>
        stability [<label>] <vertex>=<p/q> ...

    Returns (selfDualQuiver, stabilities) where stabilities is a dict from label to stabilityFunction,
    in declaration order. An unlabeled stability line gets the label 'default'.
    Raises ParseError carrying the line number of the first violation.
    """
    vertexLines = []
    edgeLines = []
    stabilityLines = []
    for lineNumber, rawLine in enumerate(text.splitlines(), start = 1):
        line = rawLine.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]
        if keyword == 'vertex':
            if len(tokens) != 4:
                raise errors.ParseError("expected 'vertex <name> dual=<name> u=<+1|-1>'", lineNumber)
            options = _parseOptions(tokens[2:], ('dual', 'u'), lineNumber)
            vertexLines.append((lineNumber, tokens[1], options['dual'], _parseSign(options['u'], lineNumber)))
        elif keyword == 'edge':
            if len(tokens) != 6:
                raise errors.ParseError("expected 'edge <name> <source> <target> dual=<name> v=<+1|-1>'", lineNumber)
            options = _parseOptions(tokens[4:], ('dual', 'v'), lineNumber)
            edgeLines.append((lineNumber, tokens[1], tokens[2], tokens[3], options['dual'], _parseSign(options['v'], lineNumber)))
        elif keyword == 'stability':
            stabilityLines.append((lineNumber, tokens[1:]))
        elif keyword == 'quiver':
            if len(tokens) == 2:
                name = tokens[1]
        else:
            raise errors.ParseError("unknown keyword '" + keyword + "'", lineNumber)
        utilities.debugNotice('parser', 'parse', "line " + str(lineNumber) + ": " + keyword)

    #structural checks, reported at the line of the offending declaration
    vertexNames = [entry[1] for entry in vertexLines]
    vertexByName = dict((entry[1], entry) for entry in vertexLines)
    edgeByName = dict((entry[1], entry) for entry in edgeLines)
    seen = set()
    for lineNumber, vertexName, dualName, sign in vertexLines:
        if vertexName in seen:
            raise errors.ParseError("duplicate vertex '" + vertexName + "'", lineNumber)
        seen.add(vertexName)
        if dualName not in vertexByName:
            raise errors.ParseError("vertex '" + vertexName + "' has undeclared dual '" + dualName + "'", lineNumber)
        dualEntry = vertexByName[dualName]
        if dualEntry[2] != vertexName:
            raise errors.ParseError("vertex '" + vertexName + "': dual of '" + dualName + "' is not '" + vertexName + "'", lineNumber)
        if dualEntry[3] != sign:
            raise errors.ParseError("vertex '" + vertexName + "' and its dual have different u", lineNumber)
    seen = set()
    for lineNumber, edgeName, sourceName, targetName, dualName, sign in edgeLines:
        if edgeName in seen:
            raise errors.ParseError("duplicate edge '" + edgeName + "'", lineNumber)
        seen.add(edgeName)
        for endpoint in (sourceName, targetName):
            if endpoint not in vertexByName:
                raise errors.ParseError("edge '" + edgeName + "' refers to undeclared vertex '" + endpoint + "'", lineNumber)
        if dualName not in edgeByName:
            raise errors.ParseError("edge '" + edgeName + "' has undeclared dual '" + dualName + "'", lineNumber)
        dualEntry = edgeByName[dualName]
        if dualEntry[4] != edgeName:
            raise errors.ParseError("edge '" + edgeName + "': dual of '" + dualName + "' is not '" + edgeName + "'", lineNumber)
        if vertexByName[sourceName][2] != dualEntry[3] or vertexByName[targetName][2] != dualEntry[2]:
            raise errors.ParseError("edge '" + edgeName + "' and its dual '" + dualName + "' are not compatible with the vertex involution", lineNumber)
        if sign*dualEntry[5] != vertexByName[sourceName][3]*vertexByName[targetName][3]:
            raise errors.ParseError("edge '" + edgeName + "' violates v_a v_a^dual = u_s(a) u_t(a)", lineNumber)

    try:
        result = selfDualQuiver([(entry[1], entry[2], entry[3]) for entry in vertexLines],
                                [(entry[1], entry[2], entry[3], entry[4], entry[5]) for entry in edgeLines], name)
    except errors.QuiverError as error:
        raise errors.ParseError(str(error), vertexLines[0][0] if vertexLines else None)

    stabilities = {}
    for lineNumber, tokens in stabilityLines:
        label = 'default'
        if tokens and '=' not in tokens[0]:
            label = tokens[0]
            tokens = tokens[1:]
        values = [Fraction(0)]*result.vertexCount()
        for token in tokens:
            if '=' not in token:
                raise errors.ParseError("malformed stability entry '" + token + "'", lineNumber)
            vertexName, value = token.split('=', 1)
            if vertexName not in result.vertexIndex:
                raise errors.ParseError("stability refers to undeclared vertex '" + vertexName + "'", lineNumber)
            try:
                values[result.vertexIndex[vertexName]] = utilities.parseRational(value)
            except ValueError:
                raise errors.ParseError("stability value '" + value + "' is not an exact rational", lineNumber)
        stabilities[label] = stabilityFunction(values, label)
    return result, stabilities

def parseQuiverFile(path):
    """Reads and parses a quiver file. See parseQuiverText."""
    with open(path, encoding = 'utf-8') as fileObject:
        return parseQuiverText(fileObject.read(), name = path)

def _parseOptions(tokens, keys, lineNumber):
    options = {}
    for token in tokens:
        if '=' not in token:
            raise errors.ParseError("expected key=value, found '" + token + "'", lineNumber)
        key, value = token.split('=', 1)
        if key not in keys:
            raise errors.ParseError("unexpected option '" + key + "'", lineNumber)
        options[key] = value
    for key in keys:
        if key not in options:
            raise errors.ParseError("missing option '" + key + "'", lineNumber)
    return options

def _parseSign(text, lineNumber):
    if text in ('+1', '1'):
        return 1
    if text == '-1':
        return -1
    raise errors.ParseError("sign must be +1 or -1, found '" + text + "'", lineNumber)
