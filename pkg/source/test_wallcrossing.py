#   pyQuiver Wall-Crossing Tests

"""Tests for the invariant solver, the wall-crossing residuals, and the maps induced by quiver morphisms."""

#---- IMPORTS ----
import unittest
from fractions import Fraction
from pyquiver import errors
from pyquiver import quivers
from pyquiver import wallcrossing
from pyquiver.polynomials import gradedPoly, ORD, SD
from pyquiver.twisted import tmElement
from pyquiver.vertex import vaElement
from pyquiver.test_quivers import selfDualA2, pointQuiver

TAU = quivers.stabilityFunction([Fraction(1, 2), Fraction(-1, 2)], "tau")
MU = quivers.stabilityFunction([Fraction(-1, 2), Fraction(1, 2)], "mu")

def s(vertexIndex, level, slot = ORD):
    return gradedPoly.variable((slot, vertexIndex, level))

def twoEdgeQuiver():
    """Two self-dual edges 1 -> 2 between a dual pair of vertices."""
    return quivers.selfDualQuiver([('1', '2', 1), ('2', '1', 1)], [('a', '1', '2', 'a', 1), ('b', '1', '2', 'b', 1)], "two edges")

def bareQuiver():
    return quivers.selfDualQuiver([('1', '2', 1), ('2', '1', 1)], [], "bare")

def dropEdge():
    """The morphism from the two-edge quiver onto A2 that forgets the edge b."""
    return quivers.quiverMorphism(twoEdgeQuiver(), selfDualA2(), [0, 1], {0: 0})


class enumerationTests(unittest.TestCase):
    def test_sdClasses(self):
        self.assertEqual(wallcrossing.sdClassesUpTo(selfDualA2(), 4), [(0, 0), (1, 1), (2, 2)])
        self.assertEqual(wallcrossing.sdClassesUpTo(pointQuiver(-1), 3), [(0,), (2,)])

    def test_classesUnder(self):
        self.assertEqual(sorted(wallcrossing.classesUnder(selfDualA2(), (1, 1))), [(0, 1), (1, 0)])

    def test_positiveSequences(self):
        sequences = list(wallcrossing.positiveDecreasingSequences(selfDualA2(), TAU, quivers.dimensionVector((2, 2))))
        self.assertIn((), sequences)
        self.assertIn(((1, 0),), sequences)
        self.assertNotIn(((1, 0), (1, 0)), sequences)
        self.assertTrue(all(TAU.weight(alpha) > 0 for parts in sequences for alpha in parts))

    def test_zeroSlopeSequences(self):
        self.assertEqual(list(wallcrossing.zeroSlopeSequences(selfDualA2(), TAU, quivers.dimensionVector((1, 1)))), [()])


class baseInvariantTests(unittest.TestCase):
    def test_a2(self):
        table = wallcrossing.wallCrossing(selfDualA2()).baseInvariants(MU, 2)
        self.assertEqual(table.sdInvariant((0, 0)).poly, 1)
        self.assertTrue(table.sdInvariant((1, 1)).isZero())
        self.assertEqual(table.ordinaryInvariant((1, 0)).poly, 1)

    def test_primitiveSelfDualVertex(self):
        engine = wallcrossing.wallCrossing(pointQuiver())
        table = engine.baseInvariants(pointQuiver().makeIncreasingSd(), 2)
        self.assertEqual(table.sdInvariant((1,)).poly, Fraction(1, 2))
        self.assertTrue(table.sdInvariant((2,)).isZero())

    def test_notIncreasing(self):
        with self.assertRaises(errors.NotIncreasing):
            wallcrossing.wallCrossing(selfDualA2()).baseInvariants(TAU, 2)

    def test_cyclicQuiver(self):
        target = quivers.selfDualQuiver([('1', '2', 1), ('2', '1', 1)], [('a', '1', '2', 'a', 1), ('b', '2', '1', 'b', 1)], "cycle")
        with self.assertRaises(errors.CyclicQuiver):
            wallcrossing.wallCrossing(target)


class solverTests(unittest.TestCase):
    def test_a2Values(self):
        engine = wallcrossing.wallCrossing(selfDualA2())
        self.assertEqual(engine.solveInvariants(TAU, 2).sdInvariant((1, 1)).poly, Fraction(1, 2))
        self.assertTrue(engine.solveInvariants(MU, 2).sdInvariant((1, 1)).isZero())

    def test_twoEdgeValue(self):
        table = wallcrossing.wallCrossing(twoEdgeQuiver()).solveInvariants(TAU, 2)
        value = table.sdInvariant((1, 1))
        self.assertEqual(value.poly, s(0, 1, SD).scale(Fraction(-1, 4)))
        self.assertEqual(value.homologicalDegree(), -twoEdgeQuiver().chiRing((1, 1)))

    def test_incompleteTable(self):
        table = wallcrossing.wallCrossing(selfDualA2()).solveInvariants(TAU, 2)
        with self.assertRaises(errors.IncompleteTable):
            table.sdInvariant((2, 2))

    def test_nonSelfDualStability(self):
        with self.assertRaises(errors.NotSelfDualStability):
            wallcrossing.wallCrossing(selfDualA2()).solveInvariants(quivers.stabilityFunction([1, 1]), 2)

    def test_text(self):
        text = wallcrossing.wallCrossing(selfDualA2()).solveInvariants(TAU, 2).toText()
        self.assertIn("inv_sd (1,1) = 1/2  [degree 0]", text)


class identityTests(unittest.TestCase):
    def test_deltaRoundTrip(self):
        engine = wallcrossing.wallCrossing(twoEdgeQuiver())
        table = engine.solveInvariants(TAU, 2)
        recovered = engine.invariantsFromDelta(engine.deltaFromInvariants(table))
        self.assertEqual(table.sameAs(recovered), ([], []))
        self.assertEqual(set(recovered.sd), set(table.sd))

    def test_residualsVanish(self):
        for target in (selfDualA2(), twoEdgeQuiver()):
            engine = wallcrossing.wallCrossing(target)
            table = engine.solveInvariants(TAU, 2)
            ordinary = engine.ordinaryIdentityResidual(table)
            sd = engine.ksResidualReport(table)
            self.assertTrue(all(value.isZero() for value in ordinary.values()))
            self.assertTrue(all(value.isZero() for value in sd.values()))
            self.assertNotIn("nonzero", wallcrossing.residualText(ordinary, sd))

    def test_stabilityInvariance(self):
        target = twoEdgeQuiver()
        engine = wallcrossing.wallCrossing(target)
        table = engine.solveInvariants(TAU, 2)
        for seed in (1, 2):
            other = engine.solveInvariants(TAU, 2, target.makeIncreasingSd(seed))
            self.assertEqual(table.sameAs(other), ([], []))

    def test_residualsVanishAtLargerBound(self):
        engine = wallcrossing.wallCrossing(selfDualA2())
        table = engine.solveInvariants(TAU, 4)
        self.assertTrue(all(value.isZero() for value in engine.ordinaryIdentityResidual(table).values()))
        self.assertTrue(all(value.isZero() for value in engine.ksResidualReport(table).values()))
        other = engine.solveInvariants(TAU, 4, selfDualA2().makeIncreasingSd(3))
        self.assertEqual(table.sameAs(other), ([], []))

    def test_residualText(self):
        text = wallcrossing.residualText({quivers.dimensionVector((1, 0)): wallcrossing.envElement()},
                                         {quivers.dimensionVector((1, 1)): wallcrossing.utwElement({((), (1, 1)): gradedPoly.constant(1)})})
        self.assertEqual(text, "ordinary (1,0): zero\nks (1,1): nonzero")


class morphismTests(unittest.TestCase):
    def test_identityComparison(self):
        morphism = quivers.identityMorphism(selfDualA2())
        left, right, residual = wallcrossing.compareInvariantsAlongMorphism(morphism, TAU, (1, 1))
        self.assertTrue(residual.isZero())
        self.assertEqual(left.poly, Fraction(1, 2))
        left, right, residual = wallcrossing.compareOrdinaryAlongMorphism(morphism, TAU, (1, 0))
        self.assertTrue(residual.isZero())

    def test_droppedEdgeComparison(self):
        left, right, residual = wallcrossing.compareInvariantsAlongMorphism(dropEdge(), TAU, (1, 1))
        self.assertEqual(left.theta, (1, 1))
        self.assertEqual(left.poly, Fraction(1, 2))
        self.assertTrue(residual.isZero())

    def test_omegaOnUnits(self):
        maps = wallcrossing.omegaMaps(dropEdge())
        for alpha in [(1, 0), (0, 1)]:
            self.assertEqual(maps.omegaPl(maps.sourceLie.unit(alpha)), maps.targetLie.unit(alpha))
        self.assertEqual(maps.omegaSd(maps.sourceModule.unit()), maps.targetModule.unit())

    def test_omegaCapsExtraEdge(self):
        maps = wallcrossing.omegaMaps(dropEdge())
        image = maps.omegaSd(tmElement((1, 1), s(0, 1, SD)**2))
        self.assertEqual(image.poly, s(0, 1, SD).scale(-4))

    def test_nonSelfDualMorphism(self):
        plain = quivers.quiver(['1', '2'], [('e', '1', '2')], "plain")
        maps = wallcrossing.omegaMaps(quivers.identityMorphism(plain))
        with self.assertRaises(errors.InvalidMorphism):
            maps.omegaSd(tmElement((1, 1)))

    def test_heartIntertwined(self):
        maps = wallcrossing.omegaMaps(dropEdge())
        source = maps.source
        classical = maps.sourceLie.project((1, 0), wallcrossing.classicalElement(source, (1, 0), {0: [2]}))
        cases = [(maps.sourceLie.unit((1, 0)), (0, 0)), (maps.sourceLie.unit((0, 1)), (0, 0)),
                 (maps.sourceLie.unit((1, 0)), (1, 1)), (classical, (0, 0))]
        for item, theta in cases:
            state = maps.sourceModule.unit(theta)
            left = maps.omegaSd(maps.sourceLie.heart(item, state))
            right = maps.targetLie.heart(maps.omegaPl(item), maps.omegaSd(state))
            self.assertEqual(left, right)

    def test_splitQuiverComparison(self):
        split, morphism = selfDualA2().qTilde((2, 2))
        left, right, residual = wallcrossing.compareInvariantsAlongMorphism(morphism, TAU, (1, 1, 1, 1))
        self.assertEqual(left.theta, (2, 2))
        self.assertTrue(residual.isZero())

    def test_compositionLaw(self):
        first = dropEdge()
        second = quivers.quiverMorphism(first.target, bareQuiver(), [0, 1], {})
        composite = first.compose(second)
        firstMaps, secondMaps = wallcrossing.omegaMaps(first), wallcrossing.omegaMaps(second)
        compositeMaps = wallcrossing.omegaMaps(composite)
        source = first.source

        element = vaElement((1, 1), wallcrossing.classicalElement(source, (1, 1), {0: [2], 1: [1]}))
        direct = compositeMaps.omega(element)
        self.assertEqual(direct.poly, s(1, 1) - s(0, 1).scale(2))
        self.assertEqual(secondMaps.omega(firstMaps.omega(element)), direct)

        state = tmElement((1, 1), wallcrossing.classicalElement(source, (1, 1), {0: [2]}, SD))
        direct = compositeMaps.omegaSd(state)
        self.assertEqual(direct.poly, 4)
        self.assertEqual(secondMaps.omegaSd(firstMaps.omegaSd(state)), direct)


class classicalGeneratorTests(unittest.TestCase):
    def test_values(self):
        self.assertEqual(wallcrossing.classicalGenerator(0, 1), s(0, 1))
        self.assertEqual(wallcrossing.classicalGenerator(0, 2), s(0, 2).scale(Fraction(1, 2)) + (s(0, 1)**2).scale(Fraction(1, 2)))
        self.assertEqual(wallcrossing.classicalGenerator(0, 2, SD, True), s(0, 2, SD))
        self.assertTrue(wallcrossing.classicalGenerator(0, 1, SD, True).isZero())

    def test_tooManyFactors(self):
        with self.assertRaises(errors.ClassMismatch):
            wallcrossing.classicalElement(selfDualA2(), (1, 1), {0: [1, 1]})

    def test_factors(self):
        self.assertEqual(wallcrossing.sdFactor(pointQuiver(), (5,)), 8)
        self.assertEqual(wallcrossing.sdFactor(selfDualA2(), (2, 2)), 2)
        self.assertEqual(wallcrossing.ordinaryFactor((2, 3)), 12)


if __name__ == '__main__':
    unittest.main()
