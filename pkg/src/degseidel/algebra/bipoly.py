"""
Sparse exact polynomials in the two formal variables x and λ.

A BiPoly maps exponent pairs (deg_x, deg_λ) to nonzero Fractions. Values are
immutable and hashable; every operation returns a new canonical polynomial,
so instances can be shared between threads freely.
"""

from fractions import Fraction
from types import MappingProxyType
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import ZeroDenominatorError
from .rational import RationalLike, as_rational

Monomial = Tuple[int, int]
Scalar = Union[int, Fraction]


def _check_exponent(value: Any, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
    return value


class BiPoly:
    """
    Exact polynomial in x and λ over the rationals.

    The zero polynomial is the empty mapping; no stored coefficient is ever
    zero, so equality is plain mapping equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, RationalLike]] = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for monomial, coefficient in terms.items():
                dx, dl = monomial
                key = (_check_exponent(dx, "deg_x"), _check_exponent(dl, "deg_lambda"))
                value = as_rational(coefficient)
                if value:
                    clean[key] = value
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, clean: Dict[Monomial, Fraction]) -> "BiPoly":
        """Adopt a dict that is already canonical (no zero coefficients)."""
        poly = cls.__new__(cls)
        poly._terms = clean
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "BiPoly":
        return cls._wrap({(0, 0): Fraction(1)})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls._wrap({(1, 0): Fraction(1)})

    @classmethod
    def lam(cls) -> "BiPoly":
        return cls._wrap({(0, 1): Fraction(1)})

    @classmethod
    def constant(cls, value: RationalLike) -> "BiPoly":
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, coefficient: RationalLike, deg_x: int = 0, deg_lambda: int = 0) -> "BiPoly":
        return cls({(deg_x, deg_lambda): coefficient})

    @classmethod
    def from_univariate_x(cls, coefficients: Sequence[RationalLike]) -> "BiPoly":
        """Build Σ coefficients[i]·x^i (no λ)."""
        return cls({(i, 0): c for i, c in enumerate(coefficients)})

    # Inspection

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        """Read-only view of the canonical term mapping"""
        return MappingProxyType(self._terms)

    def coefficient(self, deg_x: int, deg_lambda: int = 0) -> Fraction:
        return self._terms.get((deg_x, deg_lambda), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient(0, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(key == (0, 0) for key in self._terms)

    def has_x(self) -> bool:
        return any(dx > 0 for dx, _ in self._terms)

    def has_lambda(self) -> bool:
        return any(dl > 0 for _, dl in self._terms)

    def degree_x(self) -> int:
        """Highest power of x, -1 for the zero polynomial"""
        return max((dx for dx, _ in self._terms), default=-1)

    def degree_lambda(self) -> int:
        """Highest power of λ, -1 for the zero polynomial"""
        return max((dl for _, dl in self._terms), default=-1)

    def sorted_terms(self) -> List[Tuple[int, int, Fraction]]:
        """Terms in canonical order: deg_x descending, then deg_λ descending."""
        return [
            (dx, dl, self._terms[(dx, dl)])
            for dx, dl in sorted(self._terms, key=lambda key: (-key[0], -key[1]))
        ]

    def x_coefficients(self) -> Dict[int, "BiPoly"]:
        """Split into {deg_x: coefficient polynomial in λ alone}."""
        grouped: Dict[int, Dict[Monomial, Fraction]] = {}
        for (dx, dl), c in self._terms.items():
            grouped.setdefault(dx, {})[(0, dl)] = c
        return {dx: BiPoly._wrap(terms) for dx, terms in grouped.items()}

    # Serialization

    def to_records(self) -> List[Dict[str, Any]]:
        """
        Canonical textual form: term records sorted by (deg_x desc, deg_λ desc).

        Returns:
            List of {"x_deg", "lambda_deg", "num", "den"} with decimal-string integers
        """
        return [
            {
                "x_deg": dx,
                "lambda_deg": dl,
                "num": str(c.numerator),
                "den": str(c.denominator),
            }
            for dx, dl, c in self.sorted_terms()
        ]

    @classmethod
    def from_records(cls, records: Iterable[Mapping[str, Any]]) -> "BiPoly":
        """
        Rebuild a polynomial from term records.

        Repeated monomials are summed. Unreduced fractions are accepted and
        reduced.

        Raises:
            ZeroDenominatorError: If a record has den == 0
        """
        acc: Dict[Monomial, Fraction] = {}
        for record in records:
            key = (
                _check_exponent(int(record["x_deg"]), "x_deg"),
                _check_exponent(int(record["lambda_deg"]), "lambda_deg"),
            )
            num = int(record["num"])
            den = int(record["den"])
            if den == 0:
                raise ZeroDenominatorError(f"zero denominator in term {key}")
            acc[key] = acc.get(key, Fraction(0)) + Fraction(num, den)
        return cls(acc)

    # Python protocol

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        from .formatting import format_plain
        return format_plain(self)

    def __neg__(self) -> "BiPoly":
        return poly_neg(self)

    def __add__(self, other: object) -> "BiPoly":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return poly_add(self, rhs)

    __radd__ = __add__

    def __sub__(self, other: object) -> "BiPoly":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return poly_add(self, poly_neg(rhs))

    def __rsub__(self, other: object) -> "BiPoly":
        lhs = _coerce(other)
        if lhs is None:
            return NotImplemented
        return poly_add(lhs, poly_neg(self))

    def __mul__(self, other: object) -> "BiPoly":
        if isinstance(other, BiPoly):
            return poly_mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return poly_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "BiPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDenominatorError("division of a polynomial by zero")
            return poly_scale(self, 1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "BiPoly":
        if isinstance(exponent, bool) or not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = BiPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = poly_mul(result, base)
            exponent >>= 1
            if exponent:
                base = poly_mul(base, base)
        return result


def _coerce(value: object) -> Optional[BiPoly]:
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return BiPoly.constant(value)
    return None


# Ring operations

def poly_add(p: BiPoly, q: BiPoly) -> BiPoly:
    """Exact sum p + q."""
    if not q._terms:
        return p
    if not p._terms:
        return q
    acc = dict(p._terms)
    for key, c in q._terms.items():
        value = acc.get(key, 0) + c
        if value:
            acc[key] = value
        else:
            acc.pop(key, None)
    return BiPoly._wrap(acc)


def poly_neg(p: BiPoly) -> BiPoly:
    """Exact negation -p."""
    return BiPoly._wrap({key: -c for key, c in p._terms.items()})


def poly_scale(p: BiPoly, c: Scalar) -> BiPoly:
    """Multiply every coefficient by the rational c."""
    factor = as_rational(c)
    if not factor:
        return BiPoly.zero()
    return BiPoly._wrap({key: value * factor for key, value in p._terms.items()})


def poly_mul(p: BiPoly, q: BiPoly) -> BiPoly:
    """Exact product p·q."""
    if not p._terms or not q._terms:
        return BiPoly.zero()
    acc: Dict[Monomial, Fraction] = {}
    for (ax, al), a in p._terms.items():
        for (bx, bl), b in q._terms.items():
            key = (ax + bx, al + bl)
            acc[key] = acc.get(key, 0) + a * b
    return BiPoly._wrap({key: c for key, c in acc.items() if c})


# Substitutions

def poly_substitute_x(p: BiPoly, s: BiPoly) -> BiPoly:
    """
    Replace every occurrence of x in p by the polynomial s.

    Used for argument shifts such as x+1-λ, x-λ or a constant.
    """
    by_degree = p.x_coefficients()
    if not by_degree:
        return BiPoly.zero()
    top = max(by_degree)
    result = BiPoly.zero()
    power = BiPoly.one()
    for degree in range(top + 1):
        if degree in by_degree:
            result = poly_add(result, poly_mul(by_degree[degree], power))
        if degree < top:
            power = poly_mul(power, s)
    return result


def poly_eval_lambda(p: BiPoly, value: RationalLike) -> BiPoly:
    """Substitute λ := value; the result contains x only."""
    v = as_rational(value)
    acc: Dict[Monomial, Fraction] = {}
    for (dx, dl), c in p._terms.items():
        term = c * v ** dl
        if term:
            acc[(dx, 0)] = acc.get((dx, 0), 0) + term
    return BiPoly(acc)


def poly_scale_lambda(p: BiPoly, factor: RationalLike) -> BiPoly:
    """Substitute λ := factor·λ (e.g. factor 1/2 gives the λ/2 family)."""
    f = as_rational(factor)
    return BiPoly({(dx, dl): c * f ** dl for (dx, dl), c in p._terms.items()})


def poly_eval_x(p: BiPoly, value: RationalLike) -> BiPoly:
    """Substitute x := value; the result contains λ only."""
    v = as_rational(value)
    acc: Dict[Monomial, Fraction] = {}
    for (dx, dl), c in p._terms.items():
        term = c * v ** dx
        if term:
            acc[(0, dl)] = acc.get((0, dl), 0) + term
    return BiPoly(acc)
