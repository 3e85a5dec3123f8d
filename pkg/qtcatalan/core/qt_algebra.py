"""
q,t Algebra
Exact sparse bivariate Laurent polynomials and truncated power series in q, t

Every generating function in the package lives here:
- QtPoly: finite Laurent polynomial with big-integer coefficients
- QtSeries: power series in q, t truncated above a fixed q-degree
- q-analogs ([k]_q, Gaussian binomials) used by the t = 1/q specialization

Values are immutable; arithmetic always returns new objects.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from qtcatalan.exceptions import InexactDivisionError, PreconditionError

logger = logging.getLogger(__name__)

Exponent = Tuple[int, int]
Number = Union[int, Fraction]


def _clean(terms: Mapping[Exponent, int]) -> Dict[Exponent, int]:
    """Drop zero coefficients and order keys by (e_q, e_t)"""
    return {key: int(terms[key]) for key in sorted(terms) if terms[key] != 0}


class QtPoly:
    """
    Sparse Laurent polynomial in q and t with integer coefficients.

    Terms are kept in a dict {(e_q, e_t): coefficient} whose keys are
    sorted, so iteration (and therefore serialization) is deterministic.
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Mapping[Exponent, int] = None):
        self._terms = _clean(terms or {})
        self._hash = None

    # ------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------

    @classmethod
    def zero(cls) -> 'QtPoly':
        return cls()

    @classmethod
    def one(cls) -> 'QtPoly':
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, e_q: int, e_t: int, coeff: int = 1) -> 'QtPoly':
        return cls({(e_q, e_t): coeff})

    @classmethod
    def q(cls) -> 'QtPoly':
        return cls.monomial(1, 0)

    @classmethod
    def t(cls) -> 'QtPoly':
        return cls.monomial(0, 1)

    @classmethod
    def from_terms(cls, items: Iterable[Tuple[int, int, int]]) -> 'QtPoly':
        """Build from (e_q, e_t, coeff) triples, summing repeated exponents"""
        acc: Dict[Exponent, int] = {}
        for e_q, e_t, coeff in items:
            acc[(e_q, e_t)] = acc.get((e_q, e_t), 0) + coeff
        return cls(acc)

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> 'QtPoly':
        """Inverse of to_records (canonical JSON form)"""
        return cls.from_terms((int(r['q']), int(r['t']), int(r['c'])) for r in records)

    # ------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(self._terms.items())

    def coefficient(self, e_q: int, e_t: int) -> int:
        return self._terms.get((e_q, e_t), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def degree_q(self) -> int:
        if not self._terms:
            raise PreconditionError("degree of the zero polynomial is undefined")
        return max(e_q for e_q, _ in self._terms)

    def degree_t(self) -> int:
        if not self._terms:
            raise PreconditionError("degree of the zero polynomial is undefined")
        return max(e_t for _, e_t in self._terms)

    def min_degree_q(self) -> int:
        if not self._terms:
            raise PreconditionError("degree of the zero polynomial is undefined")
        return min(e_q for e_q, _ in self._terms)

    def total(self) -> int:
        """Sum of coefficients, i.e. the value at q = t = 1"""
        return sum(self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def is_laurent(self) -> bool:
        return any(e_q < 0 or e_t < 0 for e_q, e_t in self._terms)

    # ------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------

    def _coerce(self, other) -> 'QtPoly':
        if isinstance(other, QtPoly):
            return other
        if isinstance(other, int):
            return QtPoly({(0, 0): other})
        return NotImplemented

    def __add__(self, other) -> 'QtPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, 0) + coeff
        return QtPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> 'QtPoly':
        return QtPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other) -> 'QtPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'QtPoly':
        return (-self) + other

    def __mul__(self, other) -> 'QtPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: Dict[Exponent, int] = {}
        for (q1, t1), c1 in self._terms.items():
            for (q2, t2), c2 in other._terms.items():
                key = (q1 + q2, t1 + t2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return QtPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'QtPoly':
        if exponent < 0:
            raise PreconditionError(f"negative power {exponent} of a polynomial")
        result = QtPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def divide_exact(self, divisor: 'QtPoly') -> 'QtPoly':
        """
        Exact division, lex order with q before t.

        Any exact quotient has q- and t-exponents bounded below by the
        differences of the minimal exponents, so the loop terminates.

        Raises:
            InexactDivisionError: if the remainder is nonzero or a leading
                coefficient does not divide
        """
        if divisor.is_zero():
            raise PreconditionError("division by the zero polynomial")
        if self.is_zero():
            return QtPoly.zero()
        low_q = min(k[0] for k in self._terms) - min(k[0] for k in divisor._terms)
        low_t = min(k[1] for k in self._terms) - min(k[1] for k in divisor._terms)
        lead_key = max(divisor._terms)
        lead_coeff = divisor._terms[lead_key]
        remainder = dict(self._terms)
        quotient: Dict[Exponent, int] = {}
        while remainder:
            key = max(remainder)
            coeff = remainder[key]
            shift = (key[0] - lead_key[0], key[1] - lead_key[1])
            if coeff % lead_coeff != 0 or shift[0] < low_q or shift[1] < low_t:
                raise InexactDivisionError(f"nonzero remainder in division of {self} by {divisor}")
            factor = coeff // lead_coeff
            quotient[shift] = quotient.get(shift, 0) + factor
            for (dq, dt), dc in divisor._terms.items():
                target = (dq + shift[0], dt + shift[1])
                value = remainder.get(target, 0) - factor * dc
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return QtPoly(quotient)

    # ------------------------------------------------------------
    # Substitutions
    # ------------------------------------------------------------

    def modify(self, shift: int) -> 'QtPoly':
        """q^shift * p(q^-1, t)"""
        return modify(self, shift)

    def swap(self) -> 'QtPoly':
        """p(t, q)"""
        return QtPoly({(e_t, e_q): c for (e_q, e_t), c in self._terms.items()})

    def at_t_one(self) -> 'QtPoly':
        """p(q, 1) as a polynomial in q alone"""
        return QtPoly.from_terms((e_q, 0, c) for (e_q, _), c in self._terms.items())

    def at_q_one(self) -> 'QtPoly':
        """p(1, t) rewritten in the variable q (so it compares with at_t_one)"""
        return QtPoly.from_terms((e_t, 0, c) for (_, e_t), c in self._terms.items())

    def at_t_inverse_q(self) -> 'QtPoly':
        """p(q, 1/q) as a Laurent polynomial in q"""
        return QtPoly.from_terms((e_q - e_t, 0, c) for (e_q, e_t), c in self._terms.items())

    def shift_q(self, k: int) -> 'QtPoly':
        return QtPoly({(e_q + k, e_t): c for (e_q, e_t), c in self._terms.items()})

    def evaluate(self, q: Number, t: Number) -> Fraction:
        """Exact value at rational (q, t); negative exponents need nonzero values"""
        total = Fraction(0)
        q = Fraction(q)
        t = Fraction(t)
        for (e_q, e_t), coeff in self._terms.items():
            total += coeff * q ** e_q * t ** e_t
        return total

    def truncate(self, max_q: int) -> 'QtPoly':
        """Drop terms with q-exponent above max_q"""
        return QtPoly({key: c for key, c in self._terms.items() if key[0] <= max_q})

    # ------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------

    def to_records(self) -> List[Dict]:
        """Canonical JSON form: [{"q": int, "t": int, "c": "decimal"}] sorted by (q, t)"""
        return [{'q': e_q, 't': e_t, 'c': str(c)} for (e_q, e_t), c in self._terms.items()]

    def to_rows(self) -> List[Tuple[int, int, int]]:
        """(d1, d2, coeff) rows for the CSV emitter"""
        return [(e_q, e_t, c) for (e_q, e_t), c in self._terms.items()]

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for (e_q, e_t), coeff in sorted(self._terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            factors = []
            for name, exp in (('q', e_q), ('t', e_t)):
                if exp == 1:
                    factors.append(name)
                elif exp != 0:
                    factors.append(f"{name}^{exp}")
            body = '*'.join(factors)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self) -> str:
        return f"QtPoly({self})"


class QtSeries:
    """
    Power series in q, t with nonnegative exponents, truncated at q-degree N_q.

    Arithmetic discards every term with e_q > N_q.  Used for the limit object
    prod_{i>=1} (1 - t q^i)^{-1}.
    """

    __slots__ = ('order', '_terms')

    def __init__(self, order: int, terms: Mapping[Exponent, int] = None):
        if order < 0:
            raise PreconditionError(f"truncation order must be nonnegative, got {order}")
        self.order = order
        cleaned = {}
        for (e_q, e_t), coeff in (terms or {}).items():
            if e_q < 0 or e_t < 0:
                raise PreconditionError(f"series exponents must be nonnegative, got {(e_q, e_t)}")
            if e_q <= order and coeff != 0:
                cleaned[(e_q, e_t)] = int(coeff)
        self._terms = _clean(cleaned)

    @classmethod
    def from_poly(cls, poly: QtPoly, order: int) -> 'QtSeries':
        return cls(order, {key: c for key, c in poly.items() if key[0] <= order})

    @classmethod
    def one(cls, order: int) -> 'QtSeries':
        return cls(order, {(0, 0): 1})

    def coefficient(self, e_q: int, e_t: int) -> int:
        if e_q > self.order:
            raise PreconditionError(f"q^{e_q} lies beyond the truncation order {self.order}")
        return self._terms.get((e_q, e_t), 0)

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms.items())

    def __add__(self, other: 'QtSeries') -> 'QtSeries':
        order = min(self.order, other.order)
        acc = {key: c for key, c in self._terms.items() if key[0] <= order}
        for key, coeff in other._terms.items():
            if key[0] <= order:
                acc[key] = acc.get(key, 0) + coeff
        return QtSeries(order, acc)

    def __mul__(self, other: 'QtSeries') -> 'QtSeries':
        order = min(self.order, other.order)
        acc: Dict[Exponent, int] = {}
        for (q1, t1), c1 in self._terms.items():
            for (q2, t2), c2 in other._terms.items():
                if q1 + q2 > order:
                    continue
                key = (q1 + q2, t1 + t2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return QtSeries(order, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QtSeries):
            return False
        return self.order == other.order and self._terms == other._terms

    def to_poly(self) -> QtPoly:
        return QtPoly(self._terms)

    def __repr__(self) -> str:
        return f"QtSeries({self.to_poly()} + O(q^{self.order + 1}))"


# ============================================================
# Operations
# ============================================================

def add(a: QtPoly, b: QtPoly) -> QtPoly:
    return a + b


def mul(a: QtPoly, b: QtPoly) -> QtPoly:
    return a * b


def modify(p: QtPoly, shift: int) -> QtPoly:
    """
    Compute q^shift * p(q^{-1}, t).

    Every term (e_q, e_t, c) maps to (shift - e_q, e_t, c).  This is the only
    producer of negative exponents; callers re-shift immediately.
    """
    return QtPoly({(shift - e_q, e_t): c for (e_q, e_t), c in p.items()})


def q_int(k: int) -> QtPoly:
    """[k]_q = 1 + q + ... + q^{k-1}"""
    if k < 1:
        raise PreconditionError(f"q_int needs k >= 1, got {k}")
    return QtPoly({(i, 0): 1 for i in range(k)})


def q_factorial(k: int) -> QtPoly:
    result = QtPoly.one()
    for i in range(1, k + 1):
        result = result * q_int(i)
    return result


def q_binomial(a: int, b: int) -> QtPoly:
    """
    Gaussian binomial [a choose b]_q by exact division of q-factorials.

    Raises:
        PreconditionError: unless 0 <= b <= a
        InexactDivisionError: never for valid input (kept as a hard check)
    """
    if a < 0 or b < 0 or b > a:
        raise PreconditionError(f"q_binomial needs 0 <= b <= a, got a={a}, b={b}")
    numerator = q_factorial(a)
    denominator = q_factorial(b) * q_factorial(a - b)
    return numerator.divide_exact(denominator)


def geometric_series(i: int, order: int) -> QtSeries:
    """(1 - t q^i)^{-1} truncated at q-degree `order` (i >= 1)"""
    if i < 1:
        raise PreconditionError(f"factor index must be positive, got {i}")
    return QtSeries(order, {(i * k, k): 1 for k in range(order // i + 1)})


def partition_product_series(order: int) -> QtSeries:
    """
    prod_{i>=1} (1 - t q^i)^{-1} truncated at q-degree `order`.

    Coefficient of q^a t^b is the number of partitions of a into exactly b
    parts; factors with i > order contribute nothing below the truncation.
    """
    result = QtSeries.one(order)
    for i in range(1, order + 1):
        result = result * geometric_series(i, order)
    logger.debug(f"partition product series to order {order}: {len(result.terms)} terms")
    return result
