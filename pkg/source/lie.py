#   pyQuiver Lie Module

"""The Lie algebra L = V/D(V) of the quiver vertex algebra.

Each graded piece V_alpha^d is the space of degree-d polynomials in the generators s[ORD, i, k] over the support of
alpha. Cosets modulo D(V_alpha^(d-2)) are stored as reduced representatives: the image of D is row reduced over the
monomials ordered from largest to smallest, and a representative keeps only the non-pivot monomials. The bracket is
the residue of Y, and the action on the twisted module is the residue of Y^sd.

The involution of L splits every pair of graded pieces L_gamma + L_gamma^dual into a fixed and an anti-fixed part.
"""

#---- IMPORTS ----
import sympy
from fractions import Fraction
from pyquiver import errors
from pyquiver import quivers
from pyquiver import utilities
from pyquiver import vertex
from pyquiver import twisted
from pyquiver.polynomials import gradedPoly, ORD, monomialFromDict, monomialSortKey, translationDerivative


def toRational(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)

def toFraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))

def monomialsOfDegree(vertices, degree):
    """Returns every monomial in the ORD generators of the given vertices with the given homological degree."""
    variables = [(ORD, vertexIndex, level) for vertexIndex in vertices for level in range(1, degree//2 + 1)]
    results = []
    exponents = {}
    def extend(start, remaining):
        if remaining == 0:
            results.append(monomialFromDict(exponents))
            return
        for index in range(start, len(variables)):
            variable = variables[index]
            if variable[2] > remaining:
                continue
            exponents[variable] = exponents.get(variable, 0) + 1
            extend(index, remaining - variable[2])
            exponents[variable] -= 1
    extend(0, degree//2)
    return results


#---- LIE CLASSES ----
class lieClass(object):
    """A coset A + D(V) in class alpha, held as its reduced representative."""
    def __init__(self, alpha, poly):
        self.alpha = quivers.dimensionVector(alpha)
        self.poly = poly.withLabel(self.alpha)

    def homologicalDegree(self):
        return self.poly.homogeneousDegree()

    def isZero(self):
        return self.poly.isZero()

    def representative(self):
        return vertex.vaElement(self.alpha, self.poly)

    def _check(self, other):
        if self.alpha != other.alpha:
            raise errors.ClassMismatch("Lie classes " + repr(self.alpha) + " and " + repr(other.alpha) + " cannot be added.")

    def __add__(self, other):
        self._check(other)
        return lieClass(self.alpha, self.poly + other.poly)

    def __sub__(self, other):
        self._check(other)
        return lieClass(self.alpha, self.poly - other.poly)

    def scale(self, scalar):
        return lieClass(self.alpha, self.poly.scale(scalar))

    def __eq__(self, other):
        return isinstance(other, lieClass) and self.alpha == other.alpha and self.poly == other.poly

    __hash__ = None

    def toText(self, vertexNames = None):
        return repr(self.alpha) + ": " + self.poly.toText(vertexNames)

    def __repr__(self):
        return self.toText()


class lieElement(object):
    """A finite sum of Lie classes of different classes, stored as a dict alpha -> reduced gradedPoly."""
    def __init__(self, components = None):
        self.components = {}
        for alpha, poly in (components or {}).items():
            if not poly.isZero():
                self.components[quivers.dimensionVector(alpha)] = poly.withLabel(alpha)

    @classmethod
    def fromClasses(cls, *classes):
        total = cls()
        for item in classes:
            total = total + cls({item.alpha: item.poly})
        return total

    def classes(self):
        return sorted(self.components, key = lambda alpha: alpha.orderKey())

    def component(self, alpha):
        return lieClass(alpha, self.components.get(alpha, gradedPoly.zero()))

    def isZero(self):
        return not self.components

    def __add__(self, other):
        components = dict(self.components)
        for alpha, poly in other.components.items():
            components[alpha] = components[alpha] + poly if alpha in components else poly
        return lieElement(components)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, scalar):
        return lieElement(dict((alpha, poly.scale(scalar)) for alpha, poly in self.components.items()))

    def __eq__(self, other):
        return isinstance(other, lieElement) and self.components == other.components

    __hash__ = None

    def toText(self, vertexNames = None):
        if not self.components:
            return "0"
        return "\n".join(self.component(alpha).toText(vertexNames) for alpha in self.classes())

    def __repr__(self):
        return self.toText()


#---- GRADED PIECES ----
class gradedPiece(object):
    """Row-reduced data of one graded piece V_alpha^d.

    columns -- the degree-d monomials over supp(alpha), largest first
    pivotRows -- the reduced rows of the image of D, as lists of Fractions
    pivots -- the pivot column of each reduced row
    free -- the non-pivot columns, which index the basis of L_alpha^d
    """
    def __init__(self, alpha, degree, columns, pivotRows, pivots):
        self.alpha = alpha
        self.degree = degree
        self.columns = columns
        self.columnIndex = dict((monomial, index) for index, monomial in enumerate(columns))
        self.pivotRows = pivotRows
        self.pivots = tuple(pivots)
        self.free = [index for index in range(len(columns)) if index not in self.pivots]

    def dimension(self):
        return len(self.free)

    def vector(self, poly):
        entries = [Fraction(0)]*len(self.columns)
        for monomial, coefficient in poly.terms.items():
            if monomial not in self.columnIndex:
                raise errors.ClassMismatch("Monomial " + repr(monomial) + " does not live over class " + repr(self.alpha) + ".")
            entries[self.columnIndex[monomial]] = coefficient
        return entries

    def reduce(self, poly):
        """Returns the reduced entries of a homogeneous polynomial of this degree."""
        entries = self.vector(poly)
        for row, pivot in zip(self.pivotRows, self.pivots):
            value = entries[pivot]
            if value:
                entries = [entry - value*rowEntry for entry, rowEntry in zip(entries, row)]
        return entries

    def coordinates(self, poly):
        entries = self.reduce(poly)
        return [entries[index] for index in self.free]

    def polyFromCoordinates(self, coordinates):
        return gradedPoly(dict((self.columns[index], value) for index, value in zip(self.free, coordinates)), self.alpha)

    def basis(self):
        return [gradedPoly({self.columns[index]: 1}, self.alpha) for index in self.free]


class involutionSplit(object):
    """The fixed and anti-fixed parts of L_gamma^d + L_gamma^dual^d.

    anchor -- gamma0, the smaller of gamma and gamma^dual in the class order
    fixed, anti -- lists of lieElements spanning the +1 and -1 eigenspaces of the involution
    """
    def __init__(self, anchor, degree, fixed, anti, solve):
        self.anchor = anchor
        self.degree = degree
        self.fixed = fixed
        self.anti = anti
        self._solve = solve

    def decompose(self, element):
        """Returns (fixed coefficients, anti coefficients) of an element of this pair of pieces."""
        return self._solve(element)


#---- LIE ALGEBRA ----
class lieAlgebra(object):
    """The Lie algebra of a quiver, with the residue action on the twisted module when the quiver is self-dual."""
    def __init__(self, target, name = None):
        self._name_ = name
        self.quiver = target
        self.algebra = vertex.vertexAlgebra(target)
        self.module = twisted.twistedModule(target) if isinstance(target, quivers.selfDualQuiver) else None
        self._pieces = {}
        self._splits = {}

    #-- graded pieces --
    def piece(self, alpha, degree):
        """Returns the row-reduced data of V_alpha^degree, built once per (alpha, degree)."""
        alpha = quivers.dimensionVector(alpha)
        key = (alpha, degree)
        if key not in self._pieces:
            vertices = self.quiver.supportVertices(alpha)
            columns = sorted(monomialsOfDegree(vertices, degree), key = monomialSortKey, reverse = True)
            columnIndex = dict((monomial, index) for index, monomial in enumerate(columns))
            rows = []
            if degree >= 2 and not alpha.isZero():
                for monomial in monomialsOfDegree(vertices, degree - 2):
                    image = translationDerivative(gradedPoly({monomial: 1}), ORD, alpha)
                    row = [sympy.Integer(0)]*len(columns)
                    for imageMonomial, coefficient in image.terms.items():
                        row[columnIndex[imageMonomial]] = toRational(coefficient)
                    rows.append(row)
            pivotRows, pivots = [], ()
            if rows and columns:
                reduced, pivots = sympy.Matrix(rows).rref()
                pivotRows = [[toFraction(reduced[row, column]) for column in range(len(columns))] for row in range(len(pivots))]
            self._pieces[key] = gradedPiece(alpha, degree, columns, pivotRows, pivots)
            utilities.debugNotice(self, 'lie', "piece " + repr(alpha) + " degree " + str(degree) + ": dimension " + str(self._pieces[key].dimension()))
        return self._pieces[key]

    def lieBasis(self, alpha, degree):
        """Returns a basis of L_alpha^degree as lieClasses (reduced monomials)."""
        return [lieClass(alpha, poly) for poly in self.piece(alpha, degree).basis()]

    def project(self, alpha, poly):
        """Returns the Lie class of a polynomial in class alpha."""
        alpha = quivers.dimensionVector(alpha)
        terms = {}
        for degree, component in poly.homogeneousComponents().items():
            piece = self.piece(alpha, degree)
            for monomial, coefficient in piece.polyFromCoordinates(piece.coordinates(component)).terms.items():
                terms[monomial] = coefficient
        return lieClass(alpha, gradedPoly(terms, alpha))

    def projectElement(self, element):
        return self.project(element.alpha, element.poly)

    def unit(self, alpha):
        """Returns 1^pl_alpha."""
        return self.project(alpha, gradedPoly.constant(1))

    def coordinates(self, item):
        """Returns {degree: coordinate list} of a lieClass over the reduced monomial bases."""
        return dict((degree, self.piece(item.alpha, degree).coordinates(component))
                    for degree, component in item.poly.homogeneousComponents().items())

    def fromCoordinates(self, alpha, degree, coordinates):
        return lieClass(alpha, self.piece(alpha, degree).polyFromCoordinates(coordinates))

    def shiftedDegree(self, item):
        """Returns the Lie degree, homological degree - 2 + chi-hat(alpha)."""
        return item.homologicalDegree() - 2 + self.quiver.chiHat(item.alpha)

    #-- operations --
    def bracket(self, first, second):
        """Returns [A, B], the residue of Y(A, z)B modulo D."""
        if first.isZero() or second.isZero():
            return lieClass(first.alpha + second.alpha, gradedPoly.zero())
        residue = self.algebra.residue(first.representative(), second.representative())
        return self.project(residue.alpha, residue.poly)

    def bracketElements(self, first, second):
        total = lieElement()
        for alpha in first.classes():
            for beta in second.classes():
                item = self.bracket(first.component(alpha), second.component(beta))
                total = total + lieElement({item.alpha: item.poly})
        return total

    def heart(self, item, state):
        """Returns A heart M, the residue of Y^sd(A, z)M."""
        if self.module is None:
            raise errors.QuiverError("The heart action needs a self-dual quiver.")
        theta = self.quiver.bar(item.alpha) + state.theta
        if item.isZero() or state.isZero():
            return twisted.tmElement(theta, gradedPoly.zero())
        return self.module.residue(item.representative(), state)

    def heartElement(self, element, state):
        """Returns the heart action of a lieElement whose classes all have the same alpha + alpha^dual."""
        total = None
        for alpha in element.classes():
            value = self.heart(element.component(alpha), state)
            total = value if total is None else total + value
        return total

    def involution(self, item):
        """Returns A^dual on L."""
        image = self.algebra.involution(item.representative())
        return self.project(image.alpha, image.poly)

    def involutionElement(self, element):
        total = lieElement()
        for alpha in element.classes():
            item = self.involution(element.component(alpha))
            total = total + lieElement({item.alpha: item.poly})
        return total

    #-- fixed and anti-fixed parts --
    def anchor(self, gamma):
        """Returns gamma0, the smaller of gamma and gamma^dual in the class order."""
        dual = self.quiver.dual(gamma)
        return min(quivers.dimensionVector(gamma), dual, key = lambda vector: vector.orderKey())

    def split(self, gamma, degree):
        """Returns the involutionSplit of the pair (gamma, gamma^dual) in the given degree."""
        anchor = self.anchor(gamma)
        key = (anchor, degree)
        if key in self._splits:
            return self._splits[key]
        dual = self.quiver.dual(anchor)
        basis = self.lieBasis(anchor, degree)
        if dual != anchor:
            images = [self.involution(item) for item in basis]
            fixed = [lieElement.fromClasses(item, image) for item, image in zip(basis, images)]
            anti = [lieElement.fromClasses(item, image.scale(-1)) for item, image in zip(basis, images)]
            def solve(element):
                own = self.coordinates(element.component(anchor)).get(degree, [0]*len(basis))
                mirrored = self.coordinates(self.involution(element.component(dual))).get(degree, [0]*len(basis))
                return ([Fraction(a + b, 2) for a, b in zip(own, mirrored)], [Fraction(a - b, 2) for a, b in zip(own, mirrored)])
        else:
            size = len(basis)
            columns = [self.coordinates(self.involution(item)).get(degree, [0]*size) for item in basis]
            matrix = sympy.Matrix(size, size, lambda row, column: toRational(columns[column][row])) if size else sympy.zeros(0, 0)
            identity = sympy.eye(size)
            fixedVectors = (matrix - identity).nullspace() if size else []
            antiVectors = (matrix + identity).nullspace() if size else []
            def asElement(vector):
                item = self.fromCoordinates(anchor, degree, [toFraction(entry) for entry in vector])
                return lieElement.fromClasses(item)
            fixed = [asElement(vector) for vector in fixedVectors]
            anti = [asElement(vector) for vector in antiVectors]
            change = sympy.Matrix.hstack(*(fixedVectors + antiVectors)).inv() if size else None
            def solve(element):
                own = self.coordinates(element.component(anchor)).get(degree, [0]*size)
                if not size:
                    return ([], [])
                solution = change*sympy.Matrix([toRational(value) for value in own])
                values = [toFraction(entry) for entry in solution]
                return (values[:len(fixedVectors)], values[len(fixedVectors):])
        result = involutionSplit(anchor, degree, fixed, anti, solve)
        utilities.debugNotice(self, 'lie', "split " + repr(anchor) + " degree " + str(degree) + ": " + str(len(fixed)) + " fixed, " + str(len(anti)) + " anti")
        self._splits[key] = result
        return result
