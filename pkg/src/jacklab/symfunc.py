"""Symmetric functions of fixed degree over AlphaPoly coefficients.

Bases: ``m`` (monomial), ``e`` (elementary), ``h`` (complete homogeneous),
``p`` (power sum), ``s`` (Schur).  Every conversion goes through ``m``:
the direct transition matrices are the Kostka matrix (s -> m), the power
sum matrix (p -> m), and products of ``e_r = m_(1^r)`` and
``h_r = sum m_kappa`` for e and h.  Inverses are exact.

Quasisymmetric functions are stored in the fundamental basis, keyed by
descent sets ``sigma`` of {1..n-1}.  The composition of ``n`` for
``sigma = {s_1 < ... < s_k}`` is ``(s_1, s_2 - s_1, ..., n - s_k)``.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Callable, Iterable, Mapping, Union

from .errors import DomainError
from .exactmath import AlphaPoly, RatFun
from .partitions import Partition, dominates, make_partition, partitions_of, z_lambda
from .tableaux import descent_set, enumerate_syt, kostka

BASES = ("m", "e", "h", "p", "s")
Coeff = Union[int, Fraction, AlphaPoly]

__all__ = [
    "BASES",
    "SymFun",
    "QSymFun",
    "convert",
    "multiply_m",
    "hall_inner",
    "deformed_inner",
    "deformed_gram_m",
    "schur_to_fundamental",
    "symfun_to_qsym",
    "transition_to_m",
    "transition_from_m",
    "kostka_matrix",
    "power_to_monomial",
    "descents_to_composition",
]


def _poly(c: Coeff) -> AlphaPoly:
    return c if isinstance(c, AlphaPoly) else AlphaPoly.const(c)


@dataclass(frozen=True, eq=False)
class SymFun:
    degree: int
    basis: str
    terms: Mapping[Partition, AlphaPoly] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise DomainError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.terms.items():
            lam = make_partition(lam)
            if sum(lam) != self.degree:
                raise DomainError(f"{lam} has size != {self.degree}")
            c = _poly(c)
            if c:
                clean[lam] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basis_element(cls, basis: str, lam: Iterable[int]) -> SymFun:
        lam = make_partition(lam)
        return cls(sum(lam), basis, {lam: AlphaPoly.const(1)})

    @classmethod
    def zero(cls, degree: int, basis: str = "m") -> SymFun:
        return cls(degree, basis, {})

    def __getitem__(self, lam: Iterable[int]) -> AlphaPoly:
        return self.terms.get(tuple(lam), AlphaPoly())

    def is_zero(self) -> bool:
        return not self.terms

    def _same_frame(self, other: SymFun) -> SymFun:
        if self.degree != other.degree:
            raise DomainError("degree mismatch")
        return other if other.basis == self.basis else convert(other, self.basis)

    def __add__(self, other: SymFun) -> SymFun:
        other = self._same_frame(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, AlphaPoly()) + c
        return SymFun(self.degree, self.basis, out)

    def __neg__(self) -> SymFun:
        return SymFun(self.degree, self.basis, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: SymFun) -> SymFun:
        return self + (-other)

    def __mul__(self, c: Coeff) -> SymFun:
        if isinstance(c, SymFun):
            return multiply(self, c)
        return SymFun(self.degree, self.basis, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFun):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return self.terms == self._same_frame(other).terms

    def map_coeffs(self, fn: Callable[[AlphaPoly], AlphaPoly]) -> SymFun:
        return SymFun(self.degree, self.basis, {k: fn(v) for k, v in self.terms.items()})

    def to_json(self) -> dict:
        order = {lam: i for i, lam in enumerate(partitions_of(self.degree))}
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [
                {"part": list(lam), "coeff": self.terms[lam].to_json()}
                for lam in sorted(self.terms, key=order.__getitem__)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SymFun:
        return cls(
            data["degree"],
            data["basis"],
            {tuple(t["part"]): AlphaPoly.from_json(t["coeff"]) for t in data["terms"]},
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        order = {lam: i for i, lam in enumerate(partitions_of(self.degree))}
        parts = []
        for lam in sorted(self.terms, key=order.__getitem__):
            c = self.terms[lam]
            name = f"{self.basis}_({','.join(map(str, lam))})"
            if c == 1:
                parts.append(name)
            elif c.degree <= 0 or len([x for x in c.coeffs if x]) == 1:
                parts.append(f"{c}*{name}")
            else:
                parts.append(f"({c})*{name}")
        return " + ".join(parts)

    __repr__ = __str__


@dataclass(frozen=True, eq=False)
class QSymFun:
    """Quasisymmetric function in the fundamental basis."""

    degree: int
    terms: Mapping[frozenset, AlphaPoly] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for sigma, c in self.terms.items():
            sigma = frozenset(sigma)
            if any(not 1 <= i < max(self.degree, 1) for i in sigma):
                raise DomainError(f"{sorted(sigma)} is not a subset of [1, {self.degree - 1}]")
            c = _poly(c)
            if c:
                clean[sigma] = c
        object.__setattr__(self, "terms", clean)

    def __getitem__(self, sigma: Iterable[int]) -> AlphaPoly:
        return self.terms.get(frozenset(sigma), AlphaPoly())

    def __add__(self, other: QSymFun) -> QSymFun:
        if self.degree != other.degree:
            raise DomainError("degree mismatch")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, AlphaPoly()) + v
        return QSymFun(self.degree, out)

    def __mul__(self, c: Coeff) -> QSymFun:
        return QSymFun(self.degree, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSymFun):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def sorted_keys(self) -> list[frozenset]:
        return sorted(self.terms, key=lambda s: (len(s), sorted(s)))

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [
                {"des": sorted(k), "coeff": self.terms[k].to_json()} for k in self.sorted_keys()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> QSymFun:
        return cls(
            data["degree"],
            {frozenset(t["des"]): AlphaPoly.from_json(t["coeff"]) for t in data["terms"]},
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({self.terms[k]})*Q_{{{','.join(map(str, sorted(k)))}}}" for k in self.sorted_keys()
        )

    __repr__ = __str__


def descents_to_composition(sigma: Iterable[int], n: int) -> tuple[int, ...]:
    cuts = [0] + sorted(sigma) + [n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


# --- transition matrices -------------------------------------------------

_matrix_lock = threading.Lock()


def _multiset_perms(items: tuple[int, ...]) -> list[tuple[int, ...]]:
    cnt = Counter(items)
    keys = sorted(cnt)
    out: list[tuple[int, ...]] = []
    cur: list[int] = []

    def rec() -> None:
        if len(cur) == len(items):
            out.append(tuple(cur))
            return
        for k in keys:
            if cnt[k]:
                cnt[k] -= 1
                cur.append(k)
                rec()
                cur.pop()
                cnt[k] += 1

    rec()
    return out


@lru_cache(maxsize=None)
def _m_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Structure constants of m_lam * m_mu in the monomial basis.

    The coefficient of m_nu is the number of ways to write the exponent
    vector nu as a + b with a, b rearrangements of lam, mu (zero padded).
    """
    n = sum(lam) + sum(mu)
    out: dict[Partition, int] = {}
    for nu in partitions_of(n):
        L = len(nu)
        if len(lam) > L or len(mu) > L:
            continue
        mu_count = Counter(mu + (0,) * (L - len(mu)))
        total = 0
        for a in _multiset_perms(lam + (0,) * (L - len(lam))):
            b = [x - y for x, y in zip(nu, a)]
            if min(b) >= 0 and Counter(b) == mu_count:
                total += 1
        if total:
            out[nu] = total
    return out


def multiply_m(f: SymFun, g: SymFun) -> SymFun:
    if f.basis != "m" or g.basis != "m":
        raise DomainError("multiply_m needs both factors in the monomial basis")
    out: dict[Partition, AlphaPoly] = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            ab = a * b
            for nu, c in _m_product(lam, mu).items():
                out[nu] = out.get(nu, AlphaPoly()) + ab * c
    return SymFun(f.degree + g.degree, "m", out)


def multiply(f: SymFun, g: SymFun) -> SymFun:
    return multiply_m(convert(f, "m"), convert(g, "m"))


@lru_cache(maxsize=None)
def _power_row(rho: Partition, lam: Partition) -> int:
    """Coefficient of x^lam in p_rho: assignments of the parts of rho to
    the rows of lam filling each row exactly."""

    @lru_cache(maxsize=None)
    def count(i: int, room: tuple[int, ...]) -> int:
        if i == len(rho):
            return 1 if not any(room) else 0
        total = 0
        for j, r in enumerate(room):
            if r >= rho[i]:
                total += count(i + 1, room[:j] + (r - rho[i],) + room[j + 1:])
        return total

    return count(0, lam)


@lru_cache(maxsize=None)
def power_to_monomial(n: int) -> dict[Partition, dict[Partition, int]]:
    parts = partitions_of(n)
    return {rho: {lam: c for lam in parts if (c := _power_row(rho, lam))} for rho in parts}


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> dict[Partition, dict[Partition, int]]:
    parts = partitions_of(n)
    return {nu: {lam: k for lam in parts if (k := kostka(nu, lam))} for nu in parts}


def _product_of_rows(lam: Partition, row: Callable[[int], SymFun]) -> dict[Partition, int]:
    f = SymFun.basis_element("m", ()) if not lam else row(lam[0])
    for r in lam[1:]:
        f = multiply_m(f, row(r))
    return {k: int(v[0]) for k, v in f.terms.items()}


def _e_row(r: int) -> SymFun:
    return SymFun.basis_element("m", (1,) * r)


def _h_row(r: int) -> SymFun:
    return SymFun(r, "m", {kappa: 1 for kappa in partitions_of(r)})


@lru_cache(maxsize=None)
def _to_m(basis: str, n: int) -> dict[Partition, dict[Partition, Fraction]]:
    parts = partitions_of(n)
    if basis == "m":
        return {lam: {lam: Fraction(1)} for lam in parts}
    if basis == "s":
        raw = kostka_matrix(n)
    elif basis == "p":
        raw = power_to_monomial(n)
    elif basis == "e":
        raw = {lam: _product_of_rows(lam, _e_row) for lam in parts}
    elif basis == "h":
        raw = {lam: _product_of_rows(lam, _h_row) for lam in parts}
    else:
        raise DomainError(f"unknown basis {basis!r}")
    return {lam: {mu: Fraction(c) for mu, c in row.items()} for lam, row in raw.items()}


def _invert(n: int, mat: dict[Partition, dict[Partition, Fraction]]) -> dict[Partition, dict[Partition, Fraction]]:
    """Exact Gauss-Jordan inverse of a square matrix indexed by partitions."""
    parts = partitions_of(n)
    idx = {lam: i for i, lam in enumerate(parts)}
    N = len(parts)
    A = [[Fraction(0)] * N + [Fraction(int(i == j)) for j in range(N)] for i in range(N)]
    for lam, row in mat.items():
        for mu, c in row.items():
            A[idx[lam]][idx[mu]] = Fraction(c)
    for col in range(N):
        piv = next(r for r in range(col, N) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        if pv != 1:
            A[col] = [x / pv for x in A[col]]
        for r in range(N):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return {
        parts[i]: {parts[j]: A[i][N + j] for j in range(N) if A[i][N + j] != 0} for i in range(N)
    }


def _unitriangular_inverse(n: int, mat: dict[Partition, dict[Partition, Fraction]]) -> dict[Partition, dict[Partition, Fraction]]:
    """Inverse of a matrix that is unitriangular in reverse-lex order, by
    back substitution: m_mu = s_mu - sum_{nu < mu} K_{mu nu} m_nu."""
    parts = partitions_of(n)
    inv: dict[Partition, dict[Partition, Fraction]] = {}
    # row mu of the inverse expresses m_mu in the s basis
    for i in range(len(parts) - 1, -1, -1):
        mu = parts[i]
        row: dict[Partition, Fraction] = {mu: Fraction(1)}
        for nu in parts[i + 1:]:
            k = mat[mu].get(nu, 0)
            if k:
                for lam, c in inv[nu].items():
                    row[lam] = row.get(lam, Fraction(0)) - k * c
        inv[mu] = {lam: c for lam, c in row.items() if c}
    return inv


@lru_cache(maxsize=None)
def transition_to_m(basis: str, n: int) -> dict[Partition, dict[Partition, Fraction]]:
    """``b_lam = sum_mu T[lam][mu] m_mu``."""
    with _matrix_lock:
        return _to_m(basis, n)


@lru_cache(maxsize=None)
def transition_from_m(basis: str, n: int) -> dict[Partition, dict[Partition, Fraction]]:
    """``m_mu = sum_lam T[mu][lam] b_lam``."""
    fwd = transition_to_m(basis, n)
    with _matrix_lock:
        if basis == "m":
            return fwd
        if basis == "s":
            return _unitriangular_inverse(n, fwd)
        return _invert(n, fwd)


def _apply(f_terms: Mapping[Partition, AlphaPoly], mat) -> dict[Partition, AlphaPoly]:
    out: dict[Partition, AlphaPoly] = {}
    for lam, c in f_terms.items():
        for mu, t in mat[lam].items():
            out[mu] = out.get(mu, AlphaPoly()) + c * t
    return out


def convert(f: SymFun, to: str) -> SymFun:
    """Re-express ``f`` in the basis ``to``."""
    if to not in BASES:
        raise DomainError(f"unknown basis {to!r}")
    if f.basis == to:
        return f
    n = f.degree
    in_m = f.terms if f.basis == "m" else _apply(f.terms, transition_to_m(f.basis, n))
    if to == "m":
        return SymFun(n, "m", in_m)
    return SymFun(n, to, _apply(in_m, transition_from_m(to, n)))


# --- inner products -----------------------------------------------------

def hall_inner(f: SymFun, g: SymFun) -> AlphaPoly:
    if f.degree != g.degree:
        raise DomainError("degree mismatch")
    fs, gs = convert(f, "s"), convert(g, "s")
    out = AlphaPoly()
    for lam, c in fs.terms.items():
        if lam in gs.terms:
            out = out + c * gs.terms[lam]
    return out


def _p_weight(lam: Partition) -> AlphaPoly:
    return AlphaPoly.monomial(len(lam), z_lambda(lam))


def deformed_inner(f: SymFun, g: SymFun) -> RatFun:
    """Alpha-deformed scalar product <p_lam, p_mu> = delta z_lam alpha^len(lam)."""
    if f.degree != g.degree:
        raise DomainError("degree mismatch")
    fp, gp = convert(f, "p"), convert(g, "p")
    out = AlphaPoly()
    for lam, c in fp.terms.items():
        if lam in gp.terms:
            out = out + c * gp.terms[lam] * _p_weight(lam)
    return RatFun(out)


@lru_cache(maxsize=None)
def deformed_gram_m(n: int) -> dict[tuple[Partition, Partition], AlphaPoly]:
    """Gram matrix <m_lam, m_mu> of the deformed product, keyed by pairs."""
    inv = transition_from_m("p", n)
    parts = partitions_of(n)
    weights = {rho: _p_weight(rho) for rho in parts}
    out = {}
    for i, lam in enumerate(parts):
        for mu in parts[i:]:
            acc = AlphaPoly()
            row_mu = inv[mu]
            for rho, c in inv[lam].items():
                d = row_mu.get(rho)
                if d:
                    acc = acc + weights[rho] * (c * d)
            out[lam, mu] = out[mu, lam] = acc
    return out


# --- fundamental quasisymmetric expansion --------------------------------

@lru_cache(maxsize=None)
def _schur_descents(lam: Partition) -> tuple[tuple[frozenset, int], ...]:
    cnt = Counter(descent_set(t) for t in enumerate_syt(lam))
    return tuple(sorted(cnt.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))))


def schur_to_fundamental(lam: Iterable[int]) -> QSymFun:
    lam = make_partition(lam)
    return QSymFun(sum(lam), {sigma: c for sigma, c in _schur_descents(lam)})


def symfun_to_qsym(f: SymFun) -> QSymFun:
    fs = convert(f, "s")
    out: dict[frozenset, AlphaPoly] = {}
    for lam, c in fs.terms.items():
        for sigma, k in _schur_descents(lam):
            out[sigma] = out.get(sigma, AlphaPoly()) + c * k
    return QSymFun(f.degree, out)


def is_dominance_unitriangular(mat: Mapping[Partition, Mapping[Partition, int]]) -> bool:
    for nu, row in mat.items():
        if row.get(nu) != 1:
            return False
        if any(c and not dominates(nu, lam) for lam, c in row.items()):
            return False
    return True
