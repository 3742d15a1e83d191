"""Truncated formal Laurent series over the rationals.

A :class:`LaurentSeries` is ``t**lo * (c0 + c1 t + c2 t**2 + ...)`` known
modulo ``t**trunc``.  ``trunc=None`` marks an *exact* value (a Laurent
polynomial with no error term); every operation on exact inputs that can
stay exact does so, and only division by a non-monomial produces a
truncated result.

Relative precision for new truncated results is taken from a context
variable (default 64), in the spirit of :mod:`decimal`::

    with precision(256):
        q = a / b
"""
from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Callable, Iterable, Mapping, TypeVar

from .errors import DivisionByZero, PrecisionExhausted, ZeroValuation

DEFAULT_PRECISION = 64
MAX_PRECISION = 1024

_precision: contextvars.ContextVar[int] = contextvars.ContextVar(
    "laurent_precision", default=DEFAULT_PRECISION
)

T = TypeVar("T")


def get_precision() -> int:
    return _precision.get()


@contextlib.contextmanager
def precision(n: int):
    """Temporarily set the relative precision used by series division."""
    if n < 1:
        raise ValueError("precision must be positive")
    token = _precision.set(n)
    try:
        yield n
    finally:
        _precision.reset(token)


def retry_with_precision(fn: Callable[[], T], start: int | None = None,
                         limit: int = MAX_PRECISION) -> T:
    """Call ``fn`` and retry with doubled precision on :class:`PrecisionExhausted`.

    The last failure is re-raised once ``limit`` has been tried.
    """
    n = start or get_precision()
    while True:
        try:
            with precision(n):
                return fn()
        except PrecisionExhausted:
            if n >= limit:
                raise
            n = min(2 * n, limit)


def _min_opt(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _add_opt(a: int | None, b: int | None) -> int | None:
    if a is None or b is None:
        return None
    return a + b


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


def _to_ints(cs) -> tuple[list[int], int]:
    """Integer numerators over a common denominator."""
    den = 1
    for c in cs:
        den = lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in cs], den


class LaurentSeries:
    """Immutable truncated Laurent series with :class:`~fractions.Fraction` coefficients."""

    __slots__ = ("_lo", "_coeffs", "_trunc", "_hash")

    def __init__(self, coeffs: Iterable = (), lo: int = 0, trunc: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if trunc is not None:
            keep = max(0, trunc - lo)
            cs = cs[:keep]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        cs = cs[start:]
        lo += start
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            lo = 0 if trunc is None else trunc
        self._lo = lo
        self._coeffs = tuple(cs)
        self._trunc = trunc
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, trunc: int | None = None) -> "LaurentSeries":
        return cls((), 0, trunc)

    @classmethod
    def one(cls) -> "LaurentSeries":
        return cls((1,))

    @classmethod
    def constant(cls, c) -> "LaurentSeries":
        return cls((c,))

    @classmethod
    def monomial(cls, c, e: int) -> "LaurentSeries":
        return cls((c,), e)

    @classmethod
    def from_terms(cls, terms: Mapping[int, object], trunc: int | None = None) -> "LaurentSeries":
        if not terms:
            return cls.zero(trunc)
        lo = min(terms)
        hi = max(terms)
        cs = [Fraction(0)] * (hi - lo + 1)
        for e, c in terms.items():
            cs[e - lo] += _frac(c)
        return cls(cs, lo, trunc)

    @classmethod
    def coerce(cls, x) -> "LaurentSeries":
        if isinstance(x, LaurentSeries):
            return x
        return cls.constant(_frac(x))

    # -- accessors ------------------------------------------------------
    @property
    def lo(self) -> int:
        return self._lo

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def trunc(self) -> int | None:
        return self._trunc

    @property
    def is_exact(self) -> bool:
        return self._trunc is None

    @property
    def is_zero(self) -> bool:
        """True only for the exact zero series."""
        return not self._coeffs and self._trunc is None

    @property
    def has_leading_term(self) -> bool:
        return bool(self._coeffs)

    @property
    def hi(self) -> int | None:
        """Exponent one past the last stored coefficient."""
        return self._lo + len(self._coeffs) if self._coeffs else None

    def lower_bound(self) -> int | None:
        """Certified lower bound for the valuation (``None`` for exact zero)."""
        if self._coeffs:
            return self._lo
        return self._trunc

    def relative_precision(self) -> int | None:
        if self._trunc is None:
            return None
        return self._trunc - self.lower_bound()

    def coefficient(self, e: int) -> Fraction:
        if self._trunc is not None and e >= self._trunc:
            raise PrecisionExhausted(f"coefficient of t^{e} lies beyond O(t^{self._trunc})")
        k = e - self._lo
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def terms(self) -> dict[int, Fraction]:
        return {self._lo + k: c for k, c in enumerate(self._coeffs) if c}

    def valuation(self) -> int:
        if self._coeffs:
            return self._lo
        if self._trunc is None:
            raise ZeroValuation("valuation of the exact zero series")
        raise PrecisionExhausted(f"no nonzero coefficient below O(t^{self._trunc})")

    def leading_coefficient(self) -> Fraction:
        self.valuation()
        return self._coeffs[0]

    def is_positive(self) -> bool:
        return self.leading_coefficient() > 0

    def is_monomial(self) -> bool:
        return self.is_exact and len(self._coeffs) == 1

    def with_trunc(self, trunc: int | None) -> "LaurentSeries":
        return LaurentSeries(self._coeffs, self._lo, _min_opt(self._trunc, trunc))

    def shift(self, e: int) -> "LaurentSeries":
        """Multiply by ``t**e``."""
        if not self._coeffs:
            return LaurentSeries.zero(_add_opt(self._trunc, e))
        return LaurentSeries(self._coeffs, self._lo + e, _add_opt(self._trunc, e))

    def agrees(self, other, upto: int | None = None) -> bool:
        """Coefficient equality modulo the coarser of the two truncations."""
        other = LaurentSeries.coerce(other)
        bound = _min_opt(_min_opt(self._trunc, other._trunc), upto)
        exps = set(self.terms()) | set(other.terms())
        for e in exps:
            if bound is not None and e >= bound:
                continue
            k1, k2 = e - self._lo, e - other._lo
            c1 = self._coeffs[k1] if 0 <= k1 < len(self._coeffs) else 0
            c2 = other._coeffs[k2] if 0 <= k2 < len(other._coeffs) else 0
            if c1 != c2:
                return False
        return True

    # -- arithmetic -----------------------------------------------------
    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries([-c for c in self._coeffs], self._lo, self._trunc)

    def __pos__(self) -> "LaurentSeries":
        return self

    def __add__(self, other) -> "LaurentSeries":
        try:
            other = LaurentSeries.coerce(other)
        except TypeError:
            return NotImplemented
        trunc = _min_opt(self._trunc, other._trunc)
        if not other._coeffs:
            return self.with_trunc(trunc)
        if not self._coeffs:
            return other.with_trunc(trunc)
        lo = min(self._lo, other._lo)
        hi = max(self.hi, other.hi)
        if trunc is not None:
            hi = min(hi, trunc)
        cs = [Fraction(0)] * max(0, hi - lo)
        for src in (self, other):
            off = src._lo - lo
            for k, c in enumerate(src._coeffs):
                if off + k < len(cs):
                    cs[off + k] += c
        return LaurentSeries(cs, lo, trunc)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentSeries":
        try:
            other = LaurentSeries.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentSeries":
        return LaurentSeries.coerce(other) - self

    def __mul__(self, other) -> "LaurentSeries":
        try:
            other = LaurentSeries.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LaurentSeries.zero()
        la, lb = self.lower_bound(), other.lower_bound()
        trunc = _min_opt(_add_opt(la, other._trunc), _add_opt(lb, self._trunc))
        if not self._coeffs or not other._coeffs:
            return LaurentSeries.zero(trunc)
        lo = self._lo + other._lo
        n = len(self._coeffs) + len(other._coeffs) - 1
        if trunc is not None:
            n = min(n, trunc - lo)
        if n <= 0:
            return LaurentSeries.zero(trunc)
        a, da = _to_ints(self._coeffs[:n])
        b, db = _to_ints(other._coeffs[:n])
        acc = [0] * n
        for i, x in enumerate(a):
            if x:
                for j in range(min(len(b), n - i)):
                    acc[i + j] += x * b[j]
        den = da * db
        return LaurentSeries([Fraction(x, den) for x in acc], lo, trunc)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LaurentSeries":
        try:
            other = LaurentSeries.coerce(other)
        except TypeError:
            return NotImplemented
        return _divide(self, other, get_precision())

    def __rtruediv__(self, other) -> "LaurentSeries":
        return LaurentSeries.coerce(other) / self

    def __pow__(self, n: int) -> "LaurentSeries":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return LaurentSeries.one() / (self ** (-n))
        result = LaurentSeries.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.constant(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self._lo, self._coeffs, self._trunc) == (other._lo, other._coeffs, other._trunc)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._lo, self._coeffs, self._trunc))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"LaurentSeries({self})"

    def __str__(self) -> str:
        parts = []
        for e, c in sorted(self.terms().items()):
            if e == 0:
                parts.append(str(c))
            else:
                mon = "t" if e == 1 else f"t^{e}"
                parts.append(mon if c == 1 else f"-{mon}" if c == -1 else f"{c}*{mon}")
        if self._trunc is not None:
            parts.append(f"O(t^{self._trunc})")
        return " + ".join(parts) if parts else "0"

    # -- numerics -------------------------------------------------------
    def evaluate(self, x):
        """Sum the stored terms at ``t = x`` (``x`` may be an mpmath number)."""
        total = 0
        for e, c in self.terms().items():
            total += (x ** e) * _to_num(c, x)
        return total


def _to_num(c: Fraction, like):
    try:
        import mpmath
    except ImportError:  # pragma: no cover
        return float(c)
    if isinstance(like, (mpmath.mpf, mpmath.mpc)):
        return mpmath.mpf(c.numerator) / c.denominator
    return float(c)


def _exact_poly_div(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries | None:
    """Quotient of exact Laurent polynomials when ``b`` divides ``a``, else ``None``."""
    num = list(a.coeffs)
    den = list(b.coeffs)
    if len(den) > len(num):
        return None
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1] / lead
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num[: len(den) - 1]):
        return None
    return LaurentSeries(q, a.lo - b.lo)


def _divide(a: LaurentSeries, b: LaurentSeries, prec: int) -> LaurentSeries:
    if b.is_zero:
        raise DivisionByZero("division by the exact zero series")
    if not b.has_leading_term:
        raise PrecisionExhausted(f"divisor is O(t^{b.trunc}); leading term not certified")
    if a.is_zero:
        return a
    vb = b.lo
    b0 = b.coeffs[0]
    if len(b.coeffs) == 1 and b.is_exact:
        return LaurentSeries([c / b0 for c in a.coeffs], a.lo - vb, _add_opt(a.trunc, -vb))
    if not a.has_leading_term:
        return LaurentSeries.zero(a.trunc - vb)
    if a.is_exact and b.is_exact:
        q = _exact_poly_div(a, b)
        if q is not None:
            return q
    rel = prec
    for r in (a.relative_precision(), b.relative_precision()):
        if r is not None:
            rel = min(rel, r)
    lo = a.lo - vb
    # integer recurrence: q_k = (db/da) * N_k / B0**(k+1)
    ac, da = _to_ints(a.coeffs[:rel])
    bc, db = _to_ints(b.coeffs[:rel])
    b0i = bc[0]
    pw = [1]
    for _ in range(rel):
        pw.append(pw[-1] * b0i)
    nums: list[int] = []
    for k in range(rel):
        x = (ac[k] if k < len(ac) else 0) * pw[k]
        for j in range(1, min(k, len(bc) - 1) + 1):
            if bc[j]:
                x -= bc[j] * nums[k - j] * pw[j - 1]
        nums.append(x)
    q = [Fraction(x * db, pw[k + 1] * da) for k, x in enumerate(nums)]
    return LaurentSeries(q, lo, lo + rel)


@dataclass(frozen=True)
class PositiveWitness:
    """A series certified to lie in the positive semifield (positive leading coefficient)."""

    series: LaurentSeries
    leading_sign_checked: bool = True

    def __post_init__(self):
        if not self.series.is_positive():
            raise ValueError(f"{self.series} is not positive")


def positive(x) -> PositiveWitness:
    return PositiveWitness(LaurentSeries.coerce(x))


t = LaurentSeries.monomial(1, 1)


# Functional spellings of the series operations.
def ls_add(a, b) -> LaurentSeries:
    return LaurentSeries.coerce(a) + b


def ls_mul(a, b) -> LaurentSeries:
    return LaurentSeries.coerce(a) * b


def ls_div(a, b) -> LaurentSeries:
    return LaurentSeries.coerce(a) / b


def ls_val(a) -> int:
    return LaurentSeries.coerce(a).valuation()


def ls_is_positive(a) -> bool:
    return LaurentSeries.coerce(a).is_positive()


def neg_val(a) -> int:
    """The tropicalization primitive ``-val``."""
    return -LaurentSeries.coerce(a).valuation()
