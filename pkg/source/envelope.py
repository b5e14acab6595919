#   pyQuiver Envelope Module

"""The universal enveloping algebra U(L) and the twisted envelope U^tw(L; M).

U(L) elements are kept in PBW normal form over the reduced monomial bases of the graded pieces of L. A letter is a
triple (alpha, degree, j) naming the j-th basis element of L_alpha^degree; a normal word is non-decreasing in the order
(alpha.orderKey(), degree, j). All Lie degrees are even, so reordering never introduces signs.

U^tw elements are kept as sums of (word of fixed letters) (x) m. Fixed and anti-fixed letters (anchor, degree, j) index
the involutionSplit bases; an anti-fixed letter reaching the module is absorbed by a (x) m = 1 (x) (1/2 a heart m).
"""

#---- IMPORTS ----
from fractions import Fraction
from pyquiver import quivers
from pyquiver import utilities
from pyquiver.lie import lieClass, lieElement
from pyquiver.polynomials import gradedPoly
from pyquiver.twisted import tmElement

FIXED = 'f'
ANTI = 'a'


def letterKey(letter):
    return (letter[0].orderKey(), letter[1], letter[2])

def wordKey(word):
    return tuple(letterKey(letter) for letter in word)

def letterText(letter, prefix = "x"):
    return prefix + "[" + repr(letter[0]) + "," + str(letter[1]) + "," + str(letter[2]) + "]"

def addScalars(target, source, scalar = 1):
    for key, value in source.items():
        total = target.get(key, 0) + value*scalar
        if total:
            target[key] = total
        else:
            target.pop(key, None)

def addPolys(target, source, scalar = 1):
    for key, poly in source.items():
        scaled = poly.scale(scalar)
        target[key] = target[key] + scaled if key in target else scaled


#---- ELEMENTS ----
class envElement(object):
    """An element of U(L) in PBW normal form, a dict word -> Fraction."""
    def __init__(self, terms = None):
        self.terms = {}
        for word, coefficient in (terms or {}).items():
            if coefficient:
                self.terms[tuple(word)] = Fraction(coefficient)

    def isZero(self):
        return not self.terms

    def __add__(self, other):
        terms = dict(self.terms)
        addScalars(terms, other.terms)
        return envElement(terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, scalar):
        return envElement(dict((word, coefficient*Fraction(scalar)) for word, coefficient in self.terms.items()))

    def __eq__(self, other):
        return isinstance(other, envElement) and self.terms == other.terms

    __hash__ = None

    def toText(self):
        if not self.terms:
            return "0"
        lines = []
        for word in sorted(self.terms, key = lambda word: (len(word), wordKey(word))):
            lines.append(utilities.formatRational(self.terms[word]) + " " + ("*".join(letterText(letter) for letter in word) or "1"))
        return "\n".join(lines)

    def __repr__(self):
        return self.toText()


class utwElement(object):
    """An element of U^tw in normal form, a dict (word of fixed letters, theta) -> gradedPoly in the SD generators."""
    def __init__(self, terms = None):
        self.terms = {}
        for (word, theta), poly in (terms or {}).items():
            if not poly.isZero():
                theta = quivers.dimensionVector(theta)
                self.terms[(tuple(word), theta)] = poly.withLabel(theta)

    def isZero(self):
        return not self.terms

    def moduleComponent(self):
        """Returns the 1 (x) M part as a dict theta -> tmElement."""
        return dict((theta, tmElement(theta, poly)) for (word, theta), poly in self.terms.items() if not word)

    def __add__(self, other):
        terms = dict(self.terms)
        addPolys(terms, other.terms)
        return utwElement(terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, scalar):
        return utwElement(dict((key, poly.scale(scalar)) for key, poly in self.terms.items()))

    def __eq__(self, other):
        return isinstance(other, utwElement) and self.terms == other.terms

    __hash__ = None

    def toText(self, vertexNames = None):
        if not self.terms:
            return "0"
        lines = []
        for word, theta in sorted(self.terms, key = lambda key: (len(key[0]), wordKey(key[0]), key[1].orderKey())):
            prefix = "*".join(letterText(letter, "f") for letter in word) or "1"
            lines.append(prefix + " (x) " + repr(theta) + ": " + self.terms[(word, theta)].toText(vertexNames))
        return "\n".join(lines)

    def __repr__(self):
        return self.toText()


#---- ENVELOPES ----
class envelope(object):
    """U(L) and U^tw(L; M) over a lieAlgebra."""
    def __init__(self, lie, name = None):
        self._name_ = name
        self.lie = lie
        self.quiver = lie.quiver
        self._letterBrackets = {}
        self._twistedBrackets = {}
        self._normalWords = {}

    #-- U(L) --
    def one(self):
        return envElement({(): 1})

    def letterVector(self, letter):
        """Returns the basis Lie class a U(L) letter stands for."""
        alpha, degree, index = letter
        return self.lie.lieBasis(alpha, degree)[index]

    def lettersOf(self, item):
        """Returns {letter: coefficient} for a lieClass."""
        letters = {}
        for degree, coordinates in self.lie.coordinates(item).items():
            for index, value in enumerate(coordinates):
                if value:
                    letters[(item.alpha, degree, index)] = value
        return letters

    def fromLie(self, item):
        """Returns the image of a lieClass (or lieElement) in U(L)."""
        if isinstance(item, lieElement):
            total = envElement()
            for alpha in item.classes():
                total = total + self.fromLie(item.component(alpha))
            return total
        return envElement(dict(((letter,), value) for letter, value in self.lettersOf(item).items()))

    def letterBracket(self, first, second):
        key = (first, second)
        if key not in self._letterBrackets:
            value = self.lie.bracket(self.letterVector(first), self.letterVector(second))
            self._letterBrackets[key] = self.lettersOf(value)
        return self._letterBrackets[key]

    def normalizeWord(self, word, strategy = 'left'):
        """Rewrites a word into PBW normal form, as a dict word -> Fraction.

        strategy -- 'left' or 'right': which descent is rewritten first. Both give the same normal form.
        """
        key = (word, strategy)
        if key in self._normalWords:
            return self._normalWords[key]
        descents = [index for index in range(len(word) - 1) if letterKey(word[index]) > letterKey(word[index + 1])]
        if not descents:
            result = {word: Fraction(1)}
        else:
            index = descents[0] if strategy == 'left' else descents[-1]
            first, second = word[index], word[index + 1]
            result = {}
            addScalars(result, self.normalizeWord(word[:index] + (second, first) + word[index + 2:], strategy))
            for letter, value in self.letterBracket(first, second).items():
                addScalars(result, self.normalizeWord(word[:index] + (letter,) + word[index + 2:], strategy), value)
        self._normalWords[key] = result
        return result

    def star(self, first, second, strategy = 'left'):
        """Returns the product u * v in U(L)."""
        terms = {}
        for word, value in first.terms.items():
            for otherWord, otherValue in second.terms.items():
                addScalars(terms, self.normalizeWord(word + otherWord, strategy), value*otherValue)
        return envElement(terms)

    def starAll(self, factors):
        result = self.one()
        for factor in factors:
            result = self.star(result, factor)
        return result

    #-- U^tw --
    def unit(self, state):
        """Returns 1 (x) M."""
        return utwElement({((), state.theta): state.poly})

    def fixedVector(self, letter):
        anchor, degree, index = letter
        return self.lie.split(anchor, degree).fixed[index]

    def antiVector(self, letter):
        anchor, degree, index = letter
        return self.lie.split(anchor, degree).anti[index]

    def splitLie(self, item):
        """Returns ({fixed letter: coefficient}, {anti letter: coefficient}) of a lieClass or lieElement."""
        if isinstance(item, lieClass):
            item = lieElement.fromClasses(item)
        groups = {}
        for alpha in item.classes():
            for degree, poly in item.components[alpha].homogeneousComponents().items():
                groups.setdefault((self.lie.anchor(alpha), degree), {})[alpha] = poly
        fixed, anti = {}, {}
        for (anchor, degree), components in groups.items():
            fixedValues, antiValues = self.lie.split(anchor, degree).decompose(lieElement(components))
            for index, value in enumerate(fixedValues):
                if value:
                    fixed[(anchor, degree, index)] = value
            for index, value in enumerate(antiValues):
                if value:
                    anti[(anchor, degree, index)] = value
        return fixed, anti

    def twistedBracket(self, kind, letter, head):
        """Returns the split of [letter, head] for a letter of the given kind and a fixed letter head."""
        key = (kind, letter, head)
        if key not in self._twistedBrackets:
            vector = self.fixedVector(letter) if kind == FIXED else self.antiVector(letter)
            self._twistedBrackets[key] = self.splitLie(self.lie.bracketElements(vector, self.fixedVector(head)))
        return self._twistedBrackets[key]

    def actFixed(self, letter, word, theta, poly):
        """Returns f (word (x) m) in normal form, as a dict (word, theta) -> gradedPoly."""
        if not word or letterKey(letter) <= letterKey(word[0]):
            return {((letter,) + word, theta): poly}
        head, rest = word[0], word[1:]
        result = {}
        for (innerWord, innerTheta), innerPoly in self.actFixed(letter, rest, theta, poly).items():
            addPolys(result, self.actFixed(head, innerWord, innerTheta, innerPoly))
        self._actBracket(result, FIXED, letter, head, rest, theta, poly)
        return result

    def actAnti(self, letter, word, theta, poly):
        """Returns a (word (x) m) in normal form, moving a past the fixed letters and absorbing it at the module."""
        if not word:
            value = self.lie.heartElement(self.antiVector(letter), tmElement(theta, poly))
            if value is None:
                return {}
            return {((), value.theta): value.poly.scale(Fraction(1, 2))}
        head, rest = word[0], word[1:]
        result = {}
        for (innerWord, innerTheta), innerPoly in self.actAnti(letter, rest, theta, poly).items():
            addPolys(result, self.actFixed(head, innerWord, innerTheta, innerPoly))
        self._actBracket(result, ANTI, letter, head, rest, theta, poly)
        return result

    def _actBracket(self, result, kind, letter, head, rest, theta, poly):
        fixed, anti = self.twistedBracket(kind, letter, head)
        for bracketLetter, value in fixed.items():
            addPolys(result, self.actFixed(bracketLetter, rest, theta, poly), value)
        for bracketLetter, value in anti.items():
            addPolys(result, self.actAnti(bracketLetter, rest, theta, poly), value)

    def diamond(self, item, element):
        """Returns x diamond w for a lieClass or lieElement x and a utwElement w."""
        fixed, anti = self.splitLie(item)
        result = {}
        for (word, theta), poly in element.terms.items():
            for letter, value in fixed.items():
                addPolys(result, self.actFixed(letter, word, theta, poly), value)
            for letter, value in anti.items():
                addPolys(result, self.actAnti(letter, word, theta, poly), value)
        return utwElement(result)

    def act(self, envItem, element):
        """Returns u diamond w for u in U(L), applying the letters of every word from the right."""
        total = utwElement()
        for word, value in envItem.terms.items():
            current = element
            for letter in reversed(word):
                current = self.diamond(self.letterVector(letter), current)
                if current.isZero():
                    break
            total = total + current.scale(value)
        return total

    def totalClass(self, word, theta):
        total = quivers.dimensionVector(theta)
        for letter in word:
            total = total + self.quiver.bar(letter[0])
        return total

    def thetaComponent(self, element, theta):
        """Returns the part of w in U^tw_theta."""
        theta = quivers.dimensionVector(theta)
        return utwElement(dict((key, poly) for key, poly in element.terms.items() if self.totalClass(*key) == theta))

    def classesOf(self, element):
        return sorted(set(self.totalClass(*key) for key in element.terms), key = lambda vector: vector.orderKey())
