#   pyQuiver Representation Oracle Tests

#---- IMPORTS ----
import unittest
from fractions import Fraction
from pyquiver import errors
from pyquiver import quivers
from pyquiver import representations
from pyquiver.test_quivers import selfDualA2, dTypeQuiver, antisymmetricA2, a4Quiver

TAU = quivers.stabilityFunction([Fraction(1, 2), Fraction(-1, 2)], "tau")
MU = quivers.stabilityFunction([Fraction(-1, 2), Fraction(1, 2)], "mu")
ZERO = quivers.stabilityFunction([0, 0], "zero")


class patternTests(unittest.TestCase):
    def test_a2Subrepresentations(self):
        pattern = representations.fullPattern(selfDualA2(), (1, 1))
        self.assertEqual(representations.subrepClasses(pattern), {(0, 0), (0, 1), (1, 1)})
        self.assertTrue(pattern.isSelfDual())

    def test_antisymmetricEdgeVanishes(self):
        pattern = representations.fullPattern(selfDualA2(-1), (1, 1))
        self.assertEqual(pattern.edges, frozenset())
        self.assertEqual(len(representations.subrepClasses(pattern)), 4)

    def test_patternsAreInvariant(self):
        patterns = list(representations.sdPatterns(dTypeQuiver(), (1, 1, 1, 1)))
        self.assertEqual(len(patterns), 4)
        self.assertTrue(all(pattern.isSelfDual() for pattern in patterns))

    def test_nonBinaryRejected(self):
        with self.assertRaises(errors.NonBinaryClass):
            list(representations.sdPatterns(selfDualA2(), (2, 2)))


class stabilityOracleTests(unittest.TestCase):
    def test_classify(self):
        pattern = representations.fullPattern(selfDualA2(), (1, 1))
        self.assertEqual(representations.classifyPattern(pattern, TAU), (representations.STABLE, None))
        self.assertEqual(representations.classifyPattern(pattern, MU), (representations.UNSTABLE, (0, 1)))
        self.assertEqual(representations.classifyPattern(pattern, ZERO), (representations.STRICTLY_SEMISTABLE, (0, 1)))

    def test_strictlySemistable(self):
        self.assertEqual(representations.sdStrictlySemistableExists(selfDualA2(), TAU), (False, None))
        self.assertEqual(representations.sdStrictlySemistableExists(selfDualA2(), MU), (False, None))
        exists, witness = representations.sdStrictlySemistableExists(selfDualA2(), ZERO)
        self.assertTrue(exists)

    def test_requiresSelfDualStability(self):
        with self.assertRaises(errors.NotSelfDualStability):
            representations.sdStrictlySemistableExists(selfDualA2(), quivers.stabilityFunction([1, 1]))


class geometricInvariantTests(unittest.TestCase):
    def test_a2(self):
        self.assertEqual(representations.geometricInvariant(selfDualA2(), TAU, (1, 1)).poly, Fraction(1, 2))
        self.assertTrue(representations.geometricInvariant(selfDualA2(), MU, (1, 1)).isZero())
        self.assertEqual(representations.geometricInvariant(selfDualA2(), TAU, (0, 0)).poly, 1)

    def test_strictlySemistableUnsupported(self):
        with self.assertRaises(errors.UnsupportedShape):
            representations.geometricInvariant(selfDualA2(), ZERO, (1, 1))

    def test_componentCount(self):
        target = dTypeQuiver()
        self.assertEqual(representations.stableSdPointData(target, target.makeIncreasingSd(), (0, 1, 1, 0)), (True, 2))


class tameTests(unittest.TestCase):
    def test_binaryClassCertified(self):
        verdict = representations.tameCheck(selfDualA2(), TAU, (1, 1))
        self.assertEqual(verdict.status, representations.TAME_CERTIFIED)
        self.assertIsNone(verdict.witness)
        self.assertTrue(verdict.toText().startswith(representations.TAME_CERTIFIED))

    def test_doubledClassNotTame(self):
        verdict = representations.tameCheck(selfDualA2(), TAU, (2, 2))
        self.assertEqual(verdict.status, representations.NOT_TAME)
        self.assertIsNotNone(verdict.witness)
        self.assertIn("witness:", verdict.toText())

    def test_wallAtZeroStability(self):
        verdict = representations.tameCheck(selfDualA2(), ZERO, (1, 1))
        self.assertEqual(verdict.status, representations.NOT_TAME)

    def test_dTypeSinkDestabilizes(self):
        target = dTypeQuiver()
        verdict = representations.tameCheck(target, quivers.stabilityFunction([-1, 0, 0, 1]), (1, 1, 1, 1))
        self.assertEqual(verdict.status, representations.TAME_CERTIFIED)
        verdict = representations.tameCheck(target, quivers.stabilityFunction([0, 0, 0, 0]), (1, 1, 1, 1))
        self.assertEqual(verdict.status, representations.NOT_TAME)

    def test_dTypeWallExcluded(self):
        verdict = representations.tameCheck(dTypeQuiver(), quivers.stabilityFunction([1, 0, 0, -1]), (2, 1, 1, 2))
        self.assertEqual(verdict.status, representations.TAME_CERTIFIED)
        self.assertIn("isotropic piece", verdict.toText())

    def test_antisymmetricEdge(self):
        verdict = representations.tameCheck(antisymmetricA2(), TAU, (1, 1))
        self.assertEqual(verdict.status, representations.TAME_CERTIFIED)

    def test_a4(self):
        tau = quivers.stabilityFunction([-3, 2, -2, 3])
        for v in (1, -1):
            target = a4Quiver(v)
            split, morphism = target.qTilde((1, 3, 3, 1))
            self.assertEqual(representations.sdStrictlySemistableExists(split, morphism.pullbackStability(tau)), (False, None))
            verdict = representations.tameCheck(target, tau, (1, 3, 3, 1))
            self.assertEqual(verdict.status, representations.TAME_CERTIFIED)


class wallTests(unittest.TestCase):
    def test_wallClasses(self):
        tau = quivers.stabilityFunction([1, 0, 0, -1])
        self.assertEqual(representations.wallClasses(dTypeQuiver(), tau, (2, 1, 1, 2)), [(1, 0, 0, 1)])
        self.assertEqual(representations.wallClasses(selfDualA2(), TAU, (1, 1)), [])
        self.assertFalse(representations.hasWall(selfDualA2(), TAU, (1, 1)))

    def test_isotropicDestabilizer(self):
        target = dTypeQuiver()
        tau = quivers.stabilityFunction([1, 0, 0, -1])
        self.assertEqual(representations.isotropicDestabilizer(target, tau, (1, 0, 0, 1)), frozenset([0]))
        self.assertEqual(representations.isotropicDestabilizer(target, quivers.stabilityFunction([-1, 0, 0, 1]), (1, 0, 0, 1)), frozenset([3]))
        self.assertIsNone(representations.isotropicDestabilizer(target, quivers.stabilityFunction([0, 0, 0, 0]), (1, 0, 0, 1)))


if __name__ == '__main__':
    unittest.main()
