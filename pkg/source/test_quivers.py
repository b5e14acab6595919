#   pyQuiver Quiver Tests

"""Tests for dimension vectors, Euler forms, the quiver text format, Q-tilde and quiver morphisms."""

#---- IMPORTS ----
import unittest
from fractions import Fraction
from hypothesis import given, settings
from hypothesis import strategies as st
from pyquiver import errors
from pyquiver import quivers

A2_TEXT = """
quiver A2
vertex 1 dual=2 u=+1
vertex 2 dual=1 u=+1
edge a 1 2 dual=a v=+1
stability tau 1=1/2 2=-1/2
stability mu 1=-1/2 2=1/2
"""

def selfDualA2(u = 1):
    return quivers.selfDualQuiver([('1', '2', u), ('2', '1', u)], [('a', '1', '2', 'a', 1)], "A2")

def pointQuiver(u = 1):
    return quivers.selfDualQuiver([('0', '0', u)], [], "point")

def dTypeQuiver():
    """The D-type quiver 1 -> 2, 1 -> 2', 2 -> 1^dual, 2' -> 1^dual with 2 and 2' self-dual."""
    vertices = [('1', '4', 1), ('2', '2', 1), ('3', '3', 1), ('4', '1', 1)]
    edges = [('a', '1', '2', 'c', 1), ('b', '1', '3', 'd', 1), ('c', '2', '4', 'a', 1), ('d', '3', '4', 'b', 1)]
    return quivers.selfDualQuiver(vertices, edges, "D4")

def antisymmetricA2():
    return quivers.selfDualQuiver([('1', '2', 1), ('2', '1', 1)], [('a', '1', '2', 'a', -1)], "A2-")

def a4Quiver(v = 1):
    """The A4 quiver 1 <- 2 -> 3 <- 4 with 1, 4 and 2, 3 dual and the middle edge self-dual with sign v."""
    vertices = [('1', '4', 1), ('2', '3', 1), ('3', '2', 1), ('4', '1', 1)]
    edges = [('a', '2', '1', 'c', 1), ('b', '2', '3', 'b', v), ('c', '4', '3', 'a', 1)]
    return quivers.selfDualQuiver(vertices, edges, "A4")

classEntries = st.lists(st.integers(min_value = 0, max_value = 3), min_size = 2, max_size = 2)


class dimensionVectorTests(unittest.TestCase):
    def test_componentwiseArithmetic(self):
        first = quivers.dimensionVector([1, 2])
        second = quivers.dimensionVector([3, 0])
        self.assertEqual(first + second, (4, 2))
        self.assertEqual(second - first, (2, -2))
        self.assertEqual(first.total(), 3)
        self.assertTrue(first.leq(quivers.dimensionVector([1, 3])))

    def test_orderedDecompositions(self):
        vector = quivers.dimensionVector([1, 1])
        decompositions = set(quivers.orderedDecompositions(vector))
        self.assertEqual(decompositions, {((1, 1),), ((1, 0), (0, 1)), ((0, 1), (1, 0))})

    def test_vectorsOfTotalAtMost(self):
        self.assertEqual(len(list(quivers.vectorsOfTotalAtMost(2, 2))), 5)


class eulerFormTests(unittest.TestCase):
    def setUp(self):
        self.quiver = selfDualA2()

    def test_a2Values(self):
        first, second = self.quiver.unit(0), self.quiver.unit(1)
        self.assertEqual(self.quiver.eulerForm(first, second), -1)
        self.assertEqual(self.quiver.chiSym(first, second), -1)
        self.assertEqual(self.quiver.epsilon(first, second), -1)
        self.assertEqual(self.quiver.cartanMatrix(), [[2, -1], [-1, 2]])

    def test_pointQuiver(self):
        point = pointQuiver()
        self.assertEqual(point.eulerForm((2,), (3,)), 6)
        self.assertEqual(point.chiHat((2,)), 8)
        self.assertEqual(point.stackDimension((2,)), -4)

    def test_selfDualForms(self):
        target = self.quiver
        self.assertEqual(target.cartanDiagonal(), [-1, -1])
        self.assertEqual(target.chiDot((0, 1), (1, 1))[0], 1)
        self.assertEqual(target.chiDdot((1, 0))[1], -1)
        self.assertEqual(target.chiDdot((0, 1))[1], -1)
        self.assertEqual(target.chiDdot((1, 1))[1], 0)
        self.assertEqual(target.chiRing((1, 1)), 0)
        self.assertEqual(target.epsilonSd((0, 1), (0, 0)), 1)

    @given(classEntries, classEntries)
    @settings(max_examples = 60)
    def test_cartanMatrixGivesSymmetrizedForm(self, alpha, beta):
        target = self.quiver
        matrix = target.cartanMatrix()
        expected = sum(matrix[row][column]*alpha[row]*beta[column] for row in range(2) for column in range(2))
        self.assertEqual(target.chiSym(alpha, beta), expected)

    @given(classEntries)
    @settings(max_examples = 60)
    def test_chiDdotFromCartanData(self, alpha):
        target = self.quiver
        matrix, diagonal = target.cartanMatrix(), target.cartanDiagonal()
        quadratic = sum(matrix[row][target.dualVertex[column]]*alpha[row]*alpha[column] for row in range(2) for column in range(2))
        linear = sum(diagonal[row]*alpha[row] for row in range(2))
        self.assertEqual(2*target.chiDdot(alpha)[1], quadratic + linear)

    @given(st.integers(min_value = 0, max_value = 4), st.sampled_from([1, -1]))
    @settings(max_examples = 30)
    def test_sdDimensionMatchesChiRing(self, size, u):
        for target in (selfDualA2(u), dTypeQuiver()):
            theta = quivers.dimensionVector([size]*target.vertexCount())
            if not target.isSdClass(theta):
                continue
            self.assertEqual(2*target.sdStackDimension(theta), -target.chiRing(theta))


class selfDualQuiverTests(unittest.TestCase):
    def test_kinds(self):
        target = selfDualA2()
        self.assertEqual(target.vertexKind, ['D', 'Dv'])
        self.assertEqual(target.edgeKind, ['+'])
        self.assertEqual(selfDualA2(-1).edgeKind, ['-'])

    def test_invalidSigns(self):
        with self.assertRaises(errors.QuiverError):
            quivers.selfDualQuiver([('1', '2', 1), ('2', '1', -1)], [], "bad")

    def test_primitiveClasses(self):
        target = selfDualA2()
        self.assertTrue(target.isPrimitiveSd(target.zero()))
        self.assertEqual(target.primitiveSize(target.zero()), 0)
        self.assertFalse(target.isPrimitiveSd((1, 1)))
        self.assertTrue(target.isPrimitive((0, 1)))
        self.assertTrue(pointQuiver().isPrimitiveSd((1,)))

    def test_symplecticClassesAreEven(self):
        point = pointQuiver(-1)
        self.assertFalse(point.isSdClass((1,)))
        self.assertTrue(point.isSdClass((2,)))

    def test_makeIncreasingSd(self):
        target = selfDualA2()
        tau = target.makeIncreasingSd()
        self.assertEqual(tau.values, (Fraction(-1, 2), Fraction(1, 2)))
        for seed in range(5):
            tau = dTypeQuiver().makeIncreasingSd(seed)
            self.assertTrue(tau.isIncreasing(dTypeQuiver()))
            self.assertTrue(tau.isSelfDual(dTypeQuiver()))
        self.assertEqual(pointQuiver().makeIncreasingSd().values, (0,))

    def test_cyclicQuiver(self):
        target = quivers.selfDualQuiver([('1', '2', 1), ('2', '1', 1)],
                                        [('a', '1', '2', 'a', 1), ('b', '2', '1', 'b', 1)], "cycle")
        self.assertFalse(target.isAcyclic())
        with self.assertRaises(errors.CyclicQuiver):
            target.makeIncreasingSd()


class qTildeTests(unittest.TestCase):
    def test_onesGiveSameQuiver(self):
        split, morphism = selfDualA2().qTilde((1, 1))
        self.assertEqual(split.vertexCount(), 2)
        self.assertEqual(split.edgeCount(), 1)
        self.assertEqual(morphism.vertexMap, [0, 1])

    def test_doubledA2(self):
        split, morphism = selfDualA2().qTilde((2, 2))
        self.assertEqual(split.vertexCount(), 4)
        self.assertEqual(split.edgeCount(), 4)
        self.assertEqual(morphism.pushforwardClass([1, 1, 1, 1]), (2, 2))

    def test_symplecticPoint(self):
        split, morphism = pointQuiver(-1).qTilde((2,))
        self.assertEqual(split.vertexKind, ['D', 'Dv'])
        self.assertEqual(split.edgeCount(), 0)

    def test_antisymmetricEdgeOmitted(self):
        split, morphism = antisymmetricA2().qTilde((1, 1))
        self.assertEqual(split.edgeCount(), 0)
        self.assertEqual(morphism.edgeMap, {})
        self.assertTrue(morphism.isSelfDual())

    def test_a4Split(self):
        for v, edgeCount in [(1, 15), (-1, 12)]:
            split, morphism = a4Quiver(v).qTilde((1, 3, 3, 1))
            self.assertEqual(split.vertexCount(), 8)
            self.assertEqual(split.edgeCount(), edgeCount)
            self.assertEqual(morphism.pushforwardClass([1]*8), (1, 3, 3, 1))

    def test_pulledBackStability(self):
        target = selfDualA2()
        split, morphism = target.qTilde((2, 2))
        tau = quivers.stabilityFunction([Fraction(1, 2), Fraction(-1, 2)])
        pulled = morphism.pullbackStability(tau)
        self.assertEqual(pulled.values, (Fraction(1, 2),)*2 + (Fraction(-1, 2),)*2)
        self.assertTrue(pulled.isSelfDual(split))


class morphismTests(unittest.TestCase):
    def test_missingLift(self):
        source = quivers.selfDualQuiver([('1', '2', 1), ('2', '1', 1)], [], "bare")
        with self.assertRaises(errors.InvalidMorphism):
            quivers.quiverMorphism(source, selfDualA2(), [0, 1], {})
        quivers.quiverMorphism(source, antisymmetricA2(), [0, 1], {})

    def test_compose(self):
        target = selfDualA2()
        identity = quivers.identityMorphism(target)
        composed = identity.compose(identity)
        self.assertEqual(composed.vertexMap, [0, 1])
        self.assertEqual(composed.edgeMap, {0: 0})


class parserTests(unittest.TestCase):
    def test_parseA2(self):
        target, stabilities = quivers.parseQuiverText(A2_TEXT)
        self.assertEqual(target.vertexNames, ['1', '2'])
        self.assertEqual(target.edgeKind, ['+'])
        self.assertEqual(stabilities['tau'].values, (Fraction(1, 2), Fraction(-1, 2)))
        self.assertEqual(list(stabilities), ['tau', 'mu'])

    def test_signViolationNamesEdge(self):
        text = A2_TEXT.replace("edge a 1 2 dual=a v=+1", "edge a 1 2 dual=b v=+1\nedge b 1 2 dual=a v=-1")
        with self.assertRaises(errors.ParseError) as context:
            quivers.parseQuiverText(text)
        self.assertIn("'a'", str(context.exception))
        self.assertEqual(context.exception.lineNumber, 5)

    def test_missingDual(self):
        with self.assertRaises(errors.ParseError) as context:
            quivers.parseQuiverText("vertex 1 dual=9 u=+1\n")
        self.assertEqual(context.exception.lineNumber, 1)

    def test_decimalStabilityRejected(self):
        with self.assertRaises(errors.ParseError):
            quivers.parseQuiverText(A2_TEXT + "stability bad 1=0.5 2=-0.5\n")


if __name__ == '__main__':
    unittest.main()
