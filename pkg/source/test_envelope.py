#   pyQuiver Envelope Tests

#---- IMPORTS ----
import unittest
from fractions import Fraction
from pyquiver import quivers
from pyquiver.envelope import envelope
from pyquiver.lie import lieAlgebra
from pyquiver.test_quivers import selfDualA2

D1 = (quivers.dimensionVector((1, 0)), 0, 0)
D2 = (quivers.dimensionVector((0, 1)), 0, 0)
D12 = (quivers.dimensionVector((1, 1)), 0, 0)


class pbwTests(unittest.TestCase):
    def setUp(self):
        self.envelope = envelope(lieAlgebra(selfDualA2()))

    def test_singleSwap(self):
        self.assertEqual(self.envelope.normalizeWord((D1, D2)), {(D2, D1): 1, (D12,): -1})

    def test_strategiesAgree(self):
        for word in [(D1, D1, D2), (D12, D1, D2), (D1, D12, D2, D1)]:
            self.assertEqual(self.envelope.normalizeWord(word, 'left'), self.envelope.normalizeWord(word, 'right'))

    def test_commutatorIsBracket(self):
        lie = self.envelope.lie
        first, second = lie.unit((1, 0)), lie.unit((0, 1))
        u, v = self.envelope.fromLie(first), self.envelope.fromLie(second)
        commutator = self.envelope.star(u, v) - self.envelope.star(v, u)
        self.assertEqual(commutator, self.envelope.fromLie(lie.bracket(first, second)))

    def test_starAllUnit(self):
        u = self.envelope.fromLie(self.envelope.lie.unit((0, 1)))
        self.assertEqual(self.envelope.starAll([]), self.envelope.one())
        self.assertEqual(self.envelope.starAll([u, self.envelope.one()]), u)

    def test_letterVector(self):
        self.assertEqual(self.envelope.letterVector(D12), self.envelope.lie.unit((1, 1)))


class twistedEnvelopeTests(unittest.TestCase):
    def setUp(self):
        self.lie = lieAlgebra(selfDualA2())
        self.envelope = envelope(self.lie)
        self.state = self.envelope.unit(self.lie.module.unit())

    def test_diamondOnUnit(self):
        result = self.envelope.diamond(self.lie.unit((0, 1)), self.state)
        self.assertEqual(result.terms[((D2,), (0, 0))], Fraction(1, 2))
        self.assertEqual(result.terms[((), (1, 1))], Fraction(1, 4))
        self.assertEqual(len(result.terms), 2)

    def test_moduleIdentity(self):
        first, second = self.lie.unit((1, 0)), self.lie.unit((0, 1))
        diamond = self.envelope.diamond
        left = diamond(first, diamond(second, self.state))
        self.assertEqual(left.terms[((D2, D2), (0, 0))], Fraction(1, 4))
        self.assertEqual(left.terms[((D12,), (0, 0))], Fraction(-1, 2))
        commutator = left - diamond(second, diamond(first, self.state))
        self.assertEqual(commutator, diamond(self.lie.bracket(first, second), self.state))

    def test_actMatchesDiamond(self):
        item = self.lie.unit((0, 1))
        self.assertEqual(self.envelope.act(self.envelope.fromLie(item), self.state), self.envelope.diamond(item, self.state))
        self.assertEqual(self.envelope.act(self.envelope.one(), self.state), self.state)

    def test_classes(self):
        result = self.envelope.diamond(self.lie.unit((0, 1)), self.state)
        self.assertEqual(self.envelope.classesOf(result), [(1, 1)])
        self.assertEqual(self.envelope.thetaComponent(result, (1, 1)), result)


if __name__ == '__main__':
    unittest.main()
