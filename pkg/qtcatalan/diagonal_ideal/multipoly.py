"""
MultiPoly
Sparse polynomials in x_1..x_n, y_1..y_n with rational coefficients

A monomial is keyed by the tuple of its per-variable points
((a_1, b_1), ..., (a_n, b_n)), meaning prod x_i^{a_i} y_i^{b_i}. Reading a
key as a list of points is what lets the isotypic rank model address
alternants and symmetric functions by sorted point tuples.
"""
import itertools
import logging
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

from qtcatalan.exceptions import PreconditionError
from qtcatalan.utils.determinants import cofactor_determinant

logger = logging.getLogger(__name__)

Point = Tuple[int, int]
Key = Tuple[Point, ...]

LEIBNIZ_MAX_N = 5


def glex_key(point: Point) -> Tuple[int, int]:
    """Graded lexicographic order: total degree first, then the x-exponent"""
    return point[0] + point[1], point[0]


def sort_with_sign(points: Sequence[Point]) -> Tuple[Key, int]:
    """
    Sort points in graded-lex order and return the permutation sign.

    The sign is 0 when two points coincide.
    """
    items = list(points)
    sign = 1
    # insertion sort keeps the transposition count exact
    for i in range(1, len(items)):
        j = i
        while j > 0 and glex_key(items[j - 1]) > glex_key(items[j]):
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for left, right in zip(items, items[1:]):
        if left == right:
            return tuple(items), 0
    return tuple(items), sign


def sort_weakly(points: Sequence[Point]) -> Key:
    return tuple(sorted(points, key=glex_key))


class MultiPoly:
    """Immutable polynomial in 2n variables"""

    __slots__ = ('n', '_terms')

    def __init__(self, n: int, terms: Optional[Mapping[Key, object]] = None):
        self.n = n
        cleaned: Dict[Key, Fraction] = {}
        for key, value in (terms or {}).items():
            if len(key) != n:
                raise PreconditionError(f"monomial {key} does not have {n} variable pairs")
            value = Fraction(value)
            if value:
                cleaned[key] = value
        self._terms = cleaned

    # ----- constructors -----

    @classmethod
    def zero(cls, n: int) -> 'MultiPoly':
        return cls(n)

    @classmethod
    def constant(cls, n: int, value=1) -> 'MultiPoly':
        return cls(n, {((0, 0),) * n: value})

    @classmethod
    def monomial(cls, points: Sequence[Point], coeff=1) -> 'MultiPoly':
        key = tuple((int(a), int(b)) for a, b in points)
        return cls(len(key), {key: coeff})

    @classmethod
    def x(cls, i: int, n: int) -> 'MultiPoly':
        """x_i with 1-based i"""
        return cls.monomial(tuple((1, 0) if v == i - 1 else (0, 0) for v in range(n)))

    @classmethod
    def y(cls, i: int, n: int) -> 'MultiPoly':
        return cls.monomial(tuple((0, 1) if v == i - 1 else (0, 0) for v in range(n)))

    @classmethod
    def power_sum(cls, a: int, b: int, n: int) -> 'MultiPoly':
        """p_{a,b} = sum_i x_i^a y_i^b"""
        acc: Dict[Key, Fraction] = {}
        for i in range(n):
            key = tuple((a, b) if v == i else (0, 0) for v in range(n))
            acc[key] = acc.get(key, Fraction(0)) + 1
        return cls(n, acc)

    # ----- accessors -----

    @property
    def terms(self) -> Dict[Key, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Key, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, key: Key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    @staticmethod
    def key_bidegree(key: Key) -> Tuple[int, int]:
        return sum(a for a, _ in key), sum(b for _, b in key)

    @property
    def bidegree(self) -> Optional[Tuple[int, int]]:
        """Common bidegree of all monomials, or None if not bihomogeneous (or zero)"""
        degrees = {self.key_bidegree(key) for key in self._terms}
        return degrees.pop() if len(degrees) == 1 else None

    # ----- arithmetic -----

    def _coerce(self, other) -> 'MultiPoly':
        if isinstance(other, MultiPoly):
            if other.n != self.n:
                raise PreconditionError(f"cannot combine polynomials in {self.n} and {other.n} variable pairs")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.n, other)
        return NotImplemented

    def __add__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for key, value in other._terms.items():
            acc[key] = acc.get(key, Fraction(0)) + value
        return MultiPoly(self.n, acc)

    __radd__ = __add__

    def __neg__(self) -> 'MultiPoly':
        return MultiPoly(self.n, {key: -value for key, value in self._terms.items()})

    def __sub__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'MultiPoly':
        return (-self) + other

    def __mul__(self, other) -> 'MultiPoly':
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.n, {key: value * other for key, value in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: Dict[Key, Fraction] = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                key = tuple((p[0] + r[0], p[1] + r[1]) for p, r in zip(k1, k2))
                acc[key] = acc.get(key, Fraction(0)) + v1 * v2
        return MultiPoly(self.n, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'MultiPoly':
        if exponent < 0:
            raise PreconditionError("negative powers are not polynomials")
        result = MultiPoly.constant(self.n)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    # ----- symmetry -----

    def permute(self, perm: Sequence[int]) -> 'MultiPoly':
        """Substitute (x_i, y_i) -> (x_perm[i], y_perm[i]) for 0-based perm"""
        acc: Dict[Key, Fraction] = {}
        for key, value in self._terms.items():
            moved = [None] * self.n
            for i, point in enumerate(key):
                moved[perm[i]] = point
            acc[tuple(moved)] = value
        return MultiPoly(self.n, acc)

    def swap_pairs(self, i: int, j: int) -> 'MultiPoly':
        """Exchange (x_i, y_i) with (x_j, y_j), 0-based"""
        perm = list(range(self.n))
        perm[i], perm[j] = j, i
        return self.permute(perm)

    def swap_xy(self) -> 'MultiPoly':
        return MultiPoly(self.n, {tuple((b, a) for a, b in key): value for key, value in self._terms.items()})

    def isotypic_parity(self) -> Optional[int]:
        """
        1 if the polynomial is alternating, 0 if symmetric, None otherwise.

        Zero counts as alternating.
        """
        if self.is_zero():
            return 1
        alternating = symmetric = True
        for key, value in self._terms.items():
            canonical, sign = sort_with_sign(key)
            weak = sort_weakly(key)
            if alternating and (sign == 0 or self.coefficient(canonical) * sign != value):
                alternating = False
            if symmetric and self.coefficient(weak) != value:
                symmetric = False
            if not (alternating or symmetric):
                return None
        return 1 if alternating else 0

    def isotypic_coordinates(self, parity: int) -> Dict[Key, Fraction]:
        """
        Coordinates in the sign^parity isotypic basis: the coefficients at
        strictly (odd parity) or weakly (even parity) graded-lex sorted keys.
        """
        coords = {}
        for key, value in self._terms.items():
            if parity % 2:
                canonical, sign = sort_with_sign(key)
                if sign == 1 and canonical == key:
                    coords[key] = value
            elif sort_weakly(key) == key:
                coords[key] = value
        return coords

    # ----- output -----

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for key in sorted(self._terms, key=lambda k: [glex_key(p) for p in k]):
            value = self._terms[key]
            factors = []
            for i, (a, b) in enumerate(key, start=1):
                if a:
                    factors.append(f"x{i}" + (f"^{a}" if a > 1 else ""))
                if b:
                    factors.append(f"y{i}" + (f"^{b}" if b > 1 else ""))
            body = "*".join(factors)
            if not body:
                pieces.append(str(value))
            elif value == 1:
                pieces.append(body)
            elif value == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{value}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly(n={self.n}, {self})"


def _permutation_parity(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def delta(points: Sequence[Point]) -> MultiPoly:
    """
    det[x_i^{a_j} y_i^{b_j}] with columns in the given point order.

    Raises:
        PreconditionError: if two points coincide
    """
    points = tuple((int(a), int(b)) for a, b in points)
    n = len(points)
    if len(set(points)) != n:
        raise PreconditionError(f"alternant of repeated points {points}")
    if n <= LEIBNIZ_MAX_N:
        terms = {}
        for perm in itertools.permutations(range(n)):
            # variable i receives the point of column perm[i]
            terms[tuple(points[perm[i]] for i in range(n))] = _permutation_parity(perm)
        return MultiPoly(n, terms)
    matrix = [[MultiPoly.monomial(tuple(points[j] if v == i else (0, 0) for v in range(n)))
               for j in range(n)] for i in range(n)]
    return cofactor_determinant(matrix, MultiPoly.zero(n), MultiPoly.constant(n), MultiPoly.is_zero)


def power_sum_action(a: int, b: int, coords: Mapping[Key, Fraction], parity: int) -> Dict[Key, Fraction]:
    """
    Multiply an isotypic coordinate vector by p_{a,b}.

    Odd parity: the coordinate T stands for the alternant of T, and
    p_{a,b} * alt(T) = sum_k alt(T with point k shifted by (a, b)).
    Even parity: the coordinate T stands for the orbit sum of x^T; the
    coefficient of a target U is the number of positions k for which
    U minus (a, b) at k sorts to T.
    """
    out: Dict[Key, Fraction] = {}
    if parity % 2:
        for key, value in coords.items():
            for k in range(len(key)):
                shifted = list(key)
                shifted[k] = (key[k][0] + a, key[k][1] + b)
                target, sign = sort_with_sign(shifted)
                if sign:
                    out[target] = out.get(target, Fraction(0)) + sign * value
    else:
        for key, value in coords.items():
            targets = set()
            for k in range(len(key)):
                shifted = list(key)
                shifted[k] = (key[k][0] + a, key[k][1] + b)
                targets.add(sort_weakly(shifted))
            for target in targets:
                count = 0
                for k, point in enumerate(target):
                    if point[0] < a or point[1] < b:
                        continue
                    pulled = list(target)
                    pulled[k] = (point[0] - a, point[1] - b)
                    if sort_weakly(pulled) == key:
                        count += 1
                out[target] = out.get(target, Fraction(0)) + count * value
    return {key: value for key, value in out.items() if value}
