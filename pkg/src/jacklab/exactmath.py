"""Exact arithmetic: rationals, polynomials in alpha, rational functions.

Rationals are :class:`fractions.Fraction`.  :class:`AlphaPoly` is a dense
univariate polynomial in the Jack parameter with rational coefficients,
constant term first.  :class:`RatFun` is a reduced quotient of two of them.

The two binomial bases used throughout the library are

* ``C(alpha + k, n)`` for ``k = 0..n``  (:func:`binomial_shift_expand`)
* ``C(alpha, k) * k!`` for ``k = 1..n``  (:func:`falling_factorial_expand`)
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd
from typing import Iterable, Sequence, Union

from .errors import (
    DegreeOverflowError,
    DomainError,
    InternalInconsistencyError,
    NotInSpanError,
)

Rat = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rat",
    "AlphaPoly",
    "RatFun",
    "poly_eval",
    "reciprocal_transform",
    "binomial_shift_expand",
    "falling_factorial_expand",
    "falling_factorial_full",
    "real_roots_only",
    "binom_poly",
    "falling_poly",
    "interpolate",
    "rat_to_str",
    "rat_from_str",
]


def _strip(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class AlphaPoly:
    """Immutable polynomial in alpha over Q.

    ``coeffs[i]`` is the coefficient of ``alpha**i``; the zero polynomial
    has no coefficients.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("AlphaPoly is immutable")

    @classmethod
    def const(cls, c: Scalar) -> AlphaPoly:
        return cls((c,))

    @classmethod
    def alpha(cls) -> AlphaPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, deg: int, c: Scalar = 1) -> AlphaPoly:
        return cls([0] * deg + [c])

    @classmethod
    def _coerce(cls, other) -> AlphaPoly:
        if isinstance(other, AlphaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls((other,))
        return NotImplemented

    # --- basic protocol -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        other = AlphaPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.coeffs))
        return self._hash

    # --- ring operations ------------------------------------------------
    def __add__(self, other) -> AlphaPoly:
        other = AlphaPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return AlphaPoly(out)

    __radd__ = __add__

    def __neg__(self) -> AlphaPoly:
        return AlphaPoly(-x for x in self.coeffs)

    def __sub__(self, other) -> AlphaPoly:
        other = AlphaPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> AlphaPoly:
        return (-self) + other

    def __mul__(self, other) -> AlphaPoly:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return AlphaPoly()
            return AlphaPoly(x * other for x in self.coeffs)
        other = AlphaPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return AlphaPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return AlphaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> AlphaPoly:
        if e < 0:
            raise DomainError("negative power of a polynomial")
        out = AlphaPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __truediv__(self, c: Scalar) -> AlphaPoly:
        if isinstance(c, AlphaPoly):
            q, r = self.divmod(c)
            if r:
                raise DomainError("polynomial division is not exact")
            return q
        c = Fraction(c)
        return AlphaPoly(x / c for x in self.coeffs)

    def divmod(self, other: AlphaPoly) -> tuple[AlphaPoly, AlphaPoly]:
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        d = other.coeffs
        lc = d[-1]
        if len(r) < len(d):
            return AlphaPoly(), self
        q = [Fraction(0)] * (len(r) - len(d) + 1)
        for i in range(len(r) - len(d), -1, -1):
            c = r[i + len(d) - 1] / lc
            q[i] = c
            if c:
                for j, y in enumerate(d):
                    r[i + j] -= c * y
        return AlphaPoly(q), AlphaPoly(r[: len(d) - 1])

    def derivative(self) -> AlphaPoly:
        return AlphaPoly(i * x for i, x in enumerate(self.coeffs) if i)

    def monic(self) -> AlphaPoly:
        if not self:
            return self
        return self / self.leading()

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    # --- display / serialization ---------------------------------------
    def __repr__(self) -> str:
        return f"AlphaPoly([{', '.join(rat_to_str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = rat_to_str(mag)
            else:
                var = "α" if i == 1 else f"α^{i}"
                body = var if mag == 1 else f"{rat_to_str(mag)}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        return [rat_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> AlphaPoly:
        return cls(rat_from_str(s) for s in data)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def integral_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.coeffs)


def rat_to_str(x: Scalar) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


def poly_gcd(a: AlphaPoly, b: AlphaPoly) -> AlphaPoly:
    """Monic gcd over Q (zero if both inputs are zero)."""
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RatFun:
    """Reduced quotient ``num/den`` of polynomials in alpha; ``den`` is monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        num = AlphaPoly._coerce(num)
        den = AlphaPoly.const(1) if den is None else AlphaPoly._coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if not num:
                den = AlphaPoly.const(1)
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.divmod(g)[0]
                    den = den.divmod(g)[0]
            lc = den.leading()
            if lc != 1:
                num, den = num / lc, den / lc
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @classmethod
    def _coerce(cls, other) -> RatFun:
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction, AlphaPoly)):
            return cls(other, _reduced=True)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        other = RatFun._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other) -> RatFun:
        other = RatFun._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFun:
        return RatFun(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> RatFun:
        other = RatFun._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFun:
        return (-self) + other

    def __mul__(self, other) -> RatFun:
        other = RatFun._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFun:
        other = RatFun._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def as_poly(self) -> AlphaPoly:
        if self.den.degree != 0:
            raise DomainError(f"{self} is not a polynomial")
        return self.num / self.den.leading()

    def __call__(self, x: Scalar) -> Fraction:
        return self.num(x) / self.den(x)

    def __repr__(self) -> str:
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"


def poly_eval(p: AlphaPoly, x: Scalar) -> Fraction:
    """Horner evaluation of ``p`` at a rational point."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def reciprocal_transform(p: AlphaPoly, n: int) -> AlphaPoly:
    """Return ``alpha**n * p(1/alpha)`` (coefficient reversal in length n+1)."""
    if p.degree > n:
        raise DegreeOverflowError(f"degree {p.degree} exceeds {n}")
    c = list(p.coeffs) + [Fraction(0)] * (n + 1 - len(p.coeffs))
    return AlphaPoly(reversed(c))


def _gen_binom(x: int, n: int) -> Fraction:
    """C(x, n) for any integer x (falling-factorial definition)."""
    num = 1
    for i in range(n):
        num *= x - i
    return Fraction(num, factorial(n))


@lru_cache(maxsize=None)
def binom_poly(shift: int, n: int) -> AlphaPoly:
    """The polynomial C(alpha + shift, n)."""
    p = AlphaPoly.const(Fraction(1, factorial(n)))
    for i in range(n):
        p = p * AlphaPoly((shift - i, 1))
    return p


@lru_cache(maxsize=None)
def falling_poly(k: int) -> AlphaPoly:
    """The falling factorial C(alpha, k) * k! = alpha (alpha-1) ... (alpha-k+1)."""
    p = AlphaPoly.const(1)
    for i in range(k):
        p = p * AlphaPoly((-i, 1))
    return p


def binomial_shift_expand(p: AlphaPoly, n: int) -> list[Fraction]:
    """Coefficients ``a_0..a_n`` with ``p = sum_k a_k C(alpha+k, n)``.

    The system is triangular at the nodes alpha = 0, -1, ..., -n: at
    alpha = -j every basis element with ``0 <= k - j < n`` vanishes.
    """
    if n < 1:
        raise DomainError("n must be positive")
    if p.degree > n:
        raise DegreeOverflowError(f"degree {p.degree} exceeds {n}")
    a = [Fraction(0)] * (n + 1)
    a[n] = p(0)
    pivot = _gen_binom(-1, n)
    for j in range(1, n + 1):
        rest = p(-j) - sum(a[k] * _gen_binom(k - j, n) for k in range(j - 1))
        a[j - 1] = rest / pivot
    for check in (1, n + 1):
        if sum(a[k] * _gen_binom(check + k, n) for k in range(n + 1)) != p(check):
            raise InternalInconsistencyError(
                f"binomial_shift_expand failed re-evaluation at alpha={check}"
            )
    return a


def falling_factorial_full(p: AlphaPoly, n: int) -> list[Fraction]:
    """Coefficients ``c_0..c_n`` with ``p = sum_{k=0..n} c_k C(alpha, k) k!``.

    ``c_k = Delta^k p(0) / k!`` (Newton forward differences).
    """
    if p.degree > n:
        raise DegreeOverflowError(f"degree {p.degree} exceeds {n}")
    vals = [p(x) for x in range(n + 1)]
    return [
        sum((-1) ** (k - i) * comb(k, i) * vals[i] for i in range(k + 1)) / factorial(k)
        for k in range(n + 1)
    ]


def falling_factorial_expand(p: AlphaPoly, n: int) -> list[Fraction]:
    """Coefficients ``b`` with ``p = sum_{k=1..n} b[n-k] C(alpha, k) k!``.

    The returned list has length ``n`` and ``b[j]`` multiplies
    ``C(alpha, n-j) (n-j)!``.
    """
    if n < 1:
        raise DomainError("n must be positive")
    if p.degree > n:
        raise DegreeOverflowError(f"degree {p.degree} exceeds {n}")
    if p(0) != 0:
        raise NotInSpanError("polynomial does not vanish at alpha = 0")
    c = falling_factorial_full(p, n)
    return [c[n - j] for j in range(n)]


def interpolate(xs: Sequence[Scalar], ys: Sequence[Scalar]) -> AlphaPoly:
    """Exact Newton interpolation through the points (xs[i], ys[i])."""
    if len(xs) != len(ys):
        raise DomainError("mismatched interpolation data")
    xs = [Fraction(x) for x in xs]
    coef = [Fraction(y) for y in ys]
    m = len(xs)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = AlphaPoly.const(coef[-1]) if coef else AlphaPoly()
    for i in range(m - 2, -1, -1):
        p = p * AlphaPoly((-xs[i], 1)) + coef[i]
    return p


# --- Sturm sequences ----------------------------------------------------

def _primitive(coeffs: Sequence[Scalar]) -> list[int]:
    """Scale by a positive rational to a primitive integer vector."""
    fr = [Fraction(c) for c in coeffs]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(da-db+1) * a mod b, sign-corrected to be a
    positive multiple of the true remainder."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    steps = len(a) - len(b) + 1
    for i in range(len(r) - 1, db - 1, -1):
        q = r[i]
        r = [x * lc for x in r]
        if q:
            for j, y in enumerate(b):
                r[i - db + j] -= q * y
        r.pop()
    if lc < 0 and steps % 2 == 1:
        r = [-x for x in r]
    return _trim(r)


def _sign_changes(values: Iterable[int]) -> int:
    count, last = 0, 0
    for v in values:
        if v == 0:
            continue
        if last and (v > 0) != (last > 0):
            count += 1
        last = v
    return count


def sturm_sequence(p: AlphaPoly) -> list[list[int]]:
    """Sturm chain of ``p`` as primitive integer coefficient lists."""
    s0 = _primitive(p.coeffs)
    s1 = _primitive(p.derivative().coeffs)
    chain = [s0]
    while s1:
        chain.append(s1)
        r = _prem(chain[-2], chain[-1])
        if not r:
            break
        s1 = _primitive([-x for x in r])
    return chain


def count_real_roots(p: AlphaPoly) -> int:
    """Number of distinct real roots of ``p`` (Sturm's theorem)."""
    if not p:
        raise DomainError("zero polynomial has infinitely many roots")
    chain = sturm_sequence(p)
    at_pos = [c[-1] for c in chain]
    at_neg = [c[-1] * (-1) ** (len(c) - 1) for c in chain]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def squarefree_part(p: AlphaPoly) -> AlphaPoly:
    g = poly_gcd(p, p.derivative())
    return p.divmod(g)[0] if g.degree > 0 else p


def real_roots_only(p: AlphaPoly) -> bool:
    """True iff every complex root of ``p`` is real."""
    if not p:
        raise DomainError("real-rootedness of the zero polynomial is undefined")
    q = squarefree_part(p)
    return count_real_roots(q) == q.degree
