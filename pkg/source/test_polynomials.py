#   pyQuiver Polynomial Tests

"""Tests for graded polynomials, the cap product, exponential operators and Chern characters."""

#---- IMPORTS ----
import random
import unittest
from fractions import Fraction
from hypothesis import given, settings
from hypothesis import strategies as st
from pyquiver import errors
from pyquiver import polynomials
from pyquiver.polynomials import gradedPoly, ORD, SD

def s(vertex, level, slot = ORD):
    return gradedPoly.variable((slot, vertex, level))


class gradedPolyTests(unittest.TestCase):
    def test_degrees(self):
        poly = s(0, 1)*s(0, 1) + s(1, 2).scale(3)
        self.assertEqual(poly.homogeneousDegree(), 4)
        self.assertIsNone(gradedPoly.zero().homogeneousDegree())
        mixed = s(0, 1) + 1
        self.assertFalse(mixed.isHomogeneous())
        self.assertEqual(sorted(mixed.homogeneousComponents()), [0, 2])

    def test_zeroCoefficientsDropped(self):
        poly = s(0, 1) - s(0, 1)
        self.assertTrue(poly.isZero())
        self.assertEqual(poly.terms, {})

    def test_textRoundTrip(self):
        poly = (s(0, 1)**2).scale(Fraction(1, 2)) - s(1, 1).scale(3) + 1
        text = poly.toText(['1', '2'])
        self.assertEqual(text, "1/2*s[ORD,1,1]^2 - 3*s[ORD,2,1] + 1")
        self.assertEqual(polynomials.parsePoly(text, ['1', '2']), poly)

    def test_substituteIsRingMap(self):
        poly = s(0, 1)*s(0, 2) + 4
        image = poly.substitute(lambda variable: s(variable[1], variable[2], SD).scale(2))
        self.assertEqual(image, (s(0, 1, SD)*s(0, 2, SD)).scale(4) + 4)

    def test_missingRule(self):
        with self.assertRaises(errors.MissingRule):
            s(0, 1).substitute({})

    def test_oddLevelKill(self):
        image = (s(0, 1) + s(0, 2)).substitute(lambda variable: gradedPoly.zero() if variable[2] % 2 else s(0, variable[2], SD))
        self.assertEqual(image, s(0, 2, SD))


class capTests(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(polynomials.cap(gradedPoly.constant(1), s(0, 1)), s(0, 1))
        self.assertEqual(polynomials.cap(s(0, 1), s(0, 1)**3), (s(0, 1)**2).scale(3))
        self.assertTrue(polynomials.cap(s(0, 2), s(0, 1)).isZero())

    def test_pairing(self):
        self.assertEqual(polynomials.pairing(s(0, 1), s(0, 1)), 1)
        self.assertEqual(polynomials.pairing(s(0, 1)**2, s(0, 1)**2), 2)
        self.assertEqual(polynomials.pairing(s(0, 1), s(1, 1)), 0)

    def test_rankVariable(self):
        self.assertEqual(polynomials.cap(s(0, 0)*s(0, 1), s(0, 1), classEntries = (3,)), 3)

    def test_labelMismatch(self):
        with self.assertRaises(errors.ClassMismatch):
            polynomials.cap(gradedPoly.constant(1, (1, 0)), gradedPoly.constant(1, (0, 1)))

    @given(st.lists(st.integers(min_value = 0, max_value = 3), min_size = 3, max_size = 3))
    @settings(max_examples = 40)
    def test_pairingFactorials(self, exponents):
        monomial = gradedPoly.constant(1)
        expected = 1
        for level, exponent in enumerate(exponents, start = 1):
            monomial = monomial*s(0, level)**exponent
            for step in range(2, exponent + 1):
                expected *= step
        self.assertEqual(polynomials.pairing(monomial, monomial), expected)


class expOperatorTests(unittest.TestCase):
    def test_singleStep(self):
        result = polynomials.applyExpOperator([(Fraction(5), [(ORD, 0, 1)])], s(0, 1))
        self.assertEqual(result, s(0, 1) + 5)

    def test_empty(self):
        self.assertEqual(polynomials.applyExpOperator([], s(0, 2)), s(0, 2))

    def test_mixedSlots(self):
        poly = s(0, 1, 'a0')*s(1, 1, 'a1')
        result = polynomials.applyExpOperator([(Fraction(1), [('a0', 0, 1), ('a1', 1, 1)])], poly)
        self.assertEqual(result, poly + 1)

    def test_nonNilpotent(self):
        with self.assertRaises(errors.NonNilpotentTerm):
            polynomials.applyExpOperator([(Fraction(1), [])], s(0, 1))

    def test_translation(self):
        self.assertEqual(polynomials.translationDerivative(gradedPoly.constant(1), ORD, (1, 2)), s(0, 1) + s(1, 1).scale(2))
        self.assertEqual(polynomials.translationDerivative(s(0, 1), ORD, (1, 0)), s(0, 1)**2 + s(0, 2))


class characterTests(unittest.TestCase):
    def test_rankOnly(self):
        series = polynomials.chernSeriesFromCharacter([3], 4)
        self.assertEqual(series[0], 1)
        self.assertTrue(all(term.isZero() for term in series[1:]))

    def test_lineBundle(self):
        character = [gradedPoly.constant(1)] + [(s(0, 1)**level).scale(Fraction(1, _factorial(level))) for level in range(1, 6)]
        series = polynomials.chernSeriesFromCharacter(character, 5)
        self.assertEqual(series[1], s(0, 1))
        self.assertTrue(all(term.isZero() for term in series[2:]))

    def test_additivity(self):
        rng = random.Random(7)
        levels = [(ORD, 0, level) for level in range(1, 4)]
        first = [gradedPoly.constant(2)] + [polynomials.randomPoly(levels, 2*level, rng) for level in range(1, 4)]
        second = [gradedPoly.constant(1)] + [polynomials.randomPoly(levels, 2*level, rng) for level in range(1, 4)]
        total = polynomials.chernSeriesFromCharacter(polynomials.characterSum(first, second, 3), 3)
        left = polynomials.chernSeriesFromCharacter(first, 3)
        right = polynomials.chernSeriesFromCharacter(second, 3)
        for degree in range(4):
            product = gradedPoly.zero()
            for level in range(degree + 1):
                product = product + left[level]*right[degree - level]
            self.assertEqual(total[degree], product)

    def test_sym2Wedge2(self):
        symmetric, alternating = polynomials.sym2Wedge2Character([3], 0)
        self.assertEqual(symmetric[0], 6)
        self.assertEqual(alternating[0], 3)
        symmetric, alternating = polynomials.sym2Wedge2Character([gradedPoly.constant(1), s(0, 1)], 1)
        self.assertTrue(alternating[0].isZero())
        self.assertEqual(symmetric[1], s(0, 1).scale(2))
        square = polynomials.characterProduct([gradedPoly.constant(1), s(0, 1)], [gradedPoly.constant(1), s(0, 1)], 1)
        self.assertEqual(symmetric[1] + alternating[1], square[1])

    def test_adamsSquare(self):
        self.assertEqual(polynomials.adamsSquare([1, s(0, 1), s(0, 2)])[2], s(0, 2).scale(4))

    def test_dualCharacter(self):
        self.assertEqual(polynomials.dualCharacter([1, s(0, 1), s(0, 2)])[1], -s(0, 1))


def _factorial(n):
    value = 1
    for step in range(2, n + 1):
        value *= step
    return value


if __name__ == '__main__':
    unittest.main()
