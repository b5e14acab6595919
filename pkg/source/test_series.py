#   pyQuiver Series Tests

#---- IMPORTS ----
import unittest
from pyquiver import errors
from pyquiver.polynomials import gradedPoly, ORD
from pyquiver.series import laurentSeries, kernelExpression, boundedTuples, renameSlots

def s(vertex, level):
    return gradedPoly.variable((ORD, vertex, level))

def sample():
    return laurentSeries(('z',), {(-1,): s(0, 1), (0,): gradedPoly.constant(2), (2,): s(0, 2), (5,): s(1, 1)}, (3,))


class laurentSeriesTests(unittest.TestCase):
    def test_dropsAboveTruncation(self):
        series = sample()
        self.assertEqual(sorted(series.coefficients), [(-1,), (0,), (2,)])
        self.assertEqual(series.lowestExponent(), -1)

    def test_truncationTooSmall(self):
        series = sample()
        self.assertTrue(series.coefficient(3).isZero())
        with self.assertRaises(errors.TruncationTooSmall):
            series.coefficient(4)

    def test_derivative(self):
        derived = sample().derivative()
        self.assertEqual(derived.upper, (2,))
        self.assertEqual(derived.coefficient(-2), -s(0, 1))
        self.assertEqual(derived.coefficient(1), s(0, 2).scale(2))
        self.assertTrue(derived.coefficient(-1).isZero())

    def test_reflect(self):
        reflected = sample().reflect()
        self.assertEqual(reflected.coefficient(-1), -s(0, 1))
        self.assertEqual(reflected.coefficient(2), s(0, 2))
        self.assertEqual(reflected.reflect(), sample())

    def test_equalityWithinCommonTruncation(self):
        shorter = laurentSeries(('z',), {(-1,): s(0, 1), (0,): gradedPoly.constant(2)}, (1,))
        self.assertEqual(shorter, sample())
        self.assertEqual((sample() - sample()).coefficients, {})

    def test_text(self):
        text = laurentSeries(('z',), {(0,): gradedPoly.constant(1)}, (1,)).toText()
        self.assertEqual(text, "z^0: 1\nO(z^2)")


class kernelTests(unittest.TestCase):
    def test_iotaExpansion(self):
        kernel = kernelExpression([('-', 0, 1)], {(-1,): gradedPoly.constant(1)})
        series = kernel.expand(('y', 'z'), {('-', 0, 1): (1, -1)}, [], (0, 3), lambda poly: poly)
        for power in range(4):
            self.assertEqual(series.coefficient(-1 - power, power), 1)
        self.assertTrue(series.coefficient(0, 0).isZero())

    def test_applyExpRejectsConstantTerm(self):
        kernel = kernelExpression([('z', 0)], {(0,): s(0, 1)})
        with self.assertRaises(errors.NonNilpotentTerm):
            kernel.applyExp([(1, (1,), [])])

    def test_applyExp(self):
        kernel = kernelExpression([('z', 0)], {(0,): s(0, 1)})
        result = kernel.applyExp([(3, (-1,), [(ORD, 0, 1)])])
        self.assertEqual(result.terms[(0,)], s(0, 1))
        self.assertEqual(result.terms[(-1,)], gradedPoly.constant(3))

    def test_boundedTuples(self):
        self.assertEqual(len(list(boundedTuples(2, 2))), 6)
        self.assertEqual(list(boundedTuples(0, 5)), [()])


class renameSlotsTests(unittest.TestCase):
    def test_mergedVariablesMultiply(self):
        first = gradedPoly.variable(('a0', 0, 1))
        second = gradedPoly.variable(('a1', 0, 1))
        renamed = renameSlots(first*second, {'a0': ORD, 'a1': ORD})
        self.assertEqual(renamed, s(0, 1)**2)

    def test_exponentsAdd(self):
        poly = gradedPoly.variable(('a0', 1, 2))**2*gradedPoly.variable(('a1', 1, 2)) - gradedPoly.variable(('a1', 0, 1))
        renamed = renameSlots(poly, {'a0': ORD, 'a1': ORD})
        self.assertEqual(renamed, s(1, 2)**3 - s(0, 1))
        self.assertFalse(renamed.isHomogeneous())

    def test_unmappedSlotKept(self):
        poly = gradedPoly.variable(('a0', 0, 1))*gradedPoly.variable(('a1', 0, 1))
        renamed = renameSlots(poly, {'a0': ORD})
        self.assertEqual(renamed, s(0, 1)*gradedPoly.variable(('a1', 0, 1)))


if __name__ == '__main__':
    unittest.main()
