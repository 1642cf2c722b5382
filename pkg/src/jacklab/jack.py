"""Integral-form Jack polynomials and their tilde transform.

``J_mu`` is obtained by Gram-Schmidt orthogonalization of the monomial
basis, taken in increasing reverse-lexicographic order (a linear extension
of dominance), under the alpha-deformed scalar product, then scaled so the
coefficient of ``m_(1^n)`` is ``n!``.

Two routes are provided:

``"interpolate"`` (default)
    Orthogonalize over Q at alpha = 1, 2, ..., n+1, interpolate every
    coefficient, and confirm the interpolant at two further nodes.  The
    deformed product is positive definite at every positive alpha, so no
    pivot vanishes.
``"ratfun"``
    Orthogonalize directly over Q(alpha) with reduced rational functions.
    Much slower; kept as an independent route for cross-checking.

``J~_mu = alpha^n J_mu(1/alpha)`` is the central object; its Schur
coefficients are expanded in the bases ``C(alpha+k, n)`` and
``C(alpha, k) k!``.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from pathlib import Path
from typing import Iterable, Mapping

from .errors import DomainError, InternalInconsistencyError, ResourceError
from .exactmath import (
    AlphaPoly,
    RatFun,
    binomial_shift_expand,
    falling_factorial_expand,
    interpolate,
    reciprocal_transform,
)
from .partitions import (
    Partition,
    arm,
    cells,
    lambda_factorial,
    leg,
    make_partition,
    partitions_of,
)
from .symfunc import SymFun, convert, deformed_gram_m

log = logging.getLogger(__name__)

MAX_DEGREE = 9
CACHE_ENV = "JACKLAB_CACHE"

__all__ = [
    "JackExpansion",
    "jack_J",
    "jack_tilde",
    "jack_family",
    "schur_coeff",
    "schur_expansion",
    "a_coeffs",
    "b_coeffs",
    "row_monomial_coeff",
    "diagonal_product",
    "set_cache_dir",
    "MAX_DEGREE",
]


@dataclass(frozen=True)
class JackExpansion:
    mu: Partition
    monomial_terms: Mapping[Partition, AlphaPoly]
    tilde: bool = False

    @property
    def degree(self) -> int:
        return sum(self.mu)

    def __getitem__(self, lam: Iterable[int]) -> AlphaPoly:
        return self.monomial_terms.get(tuple(lam), AlphaPoly())

    def as_symfun(self) -> SymFun:
        return SymFun(self.degree, "m", dict(self.monomial_terms))

    def to_json(self) -> dict:
        order = partitions_of(self.degree)
        return {
            "mu": list(self.mu),
            "n": self.degree,
            "tilde": self.tilde,
            "monomial_terms": [
                {"part": list(lam), "coeff": self.monomial_terms[lam].to_json()}
                for lam in order
                if lam in self.monomial_terms
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> JackExpansion:
        return cls(
            tuple(data["mu"]),
            {tuple(t["part"]): AlphaPoly.from_json(t["coeff"]) for t in data["monomial_terms"]},
            bool(data.get("tilde", False)),
        )


# --- disk cache ---------------------------------------------------------

_cache_dir: Path | None = None
_cache_lock = threading.Lock()


def set_cache_dir(path: str | os.PathLike | None) -> None:
    """Set (or with ``None`` clear) the on-disk expansion cache directory.

    When unset, the ``JACKLAB_CACHE`` environment variable is consulted.
    """
    global _cache_dir
    _cache_dir = Path(path) if path else None


def _resolve_cache_dir() -> Path | None:
    if _cache_dir is not None:
        return _cache_dir
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def _cache_path(root: Path, mu: Partition) -> Path:
    return root / f"J_n{sum(mu)}_{'-'.join(map(str, mu))}.json"


def _cache_load(mu: Partition) -> JackExpansion | None:
    root = _resolve_cache_dir()
    if root is None:
        return None
    path = _cache_path(root, mu)
    if not path.exists():
        return None
    with open(path) as fh:
        return JackExpansion.from_json(json.load(fh))


def _cache_store(exp: JackExpansion) -> None:
    root = _resolve_cache_dir()
    if root is None:
        return
    root.mkdir(parents=True, exist_ok=True)
    path = _cache_path(root, exp.mu)
    fd, tmp = tempfile.mkstemp(dir=root, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(exp.to_json(), fh)
    os.replace(tmp, path)


# --- construction -------------------------------------------------------

def _gram_schmidt(parts_up, gram, zero, one):
    """Orthogonalize the monomial basis in the order ``parts_up``.

    ``gram[(lam, mu)]`` gives the scalar product of m_lam and m_mu in the
    coefficient field.  Returns lam -> {nu: coefficient of m_nu}.
    """
    N = len(parts_up)
    P: list[dict[int, object]] = []
    GP: list[list[object]] = []
    norms: list[object] = []
    G = [[gram[parts_up[i], parts_up[j]] for j in range(N)] for i in range(N)]
    for k in range(N):
        vec = {k: one}
        gvec = list(G[k])
        for j in range(k):
            c = GP[j][k] / norms[j]
            if not c:
                continue
            for idx, val in P[j].items():
                vec[idx] = vec.get(idx, zero) - c * val
            gvec = [x - c * y for x, y in zip(gvec, GP[j])]
        P.append(vec)
        GP.append(gvec)
        norms.append(sum((gvec[i] * v for i, v in vec.items()), zero))
    return {parts_up[k]: {parts_up[i]: v for i, v in P[k].items() if v} for k in range(N)}


def _family_at(n: int, a: Fraction) -> dict[Partition, dict[Partition, Fraction]]:
    parts_up = partitions_of(n)[::-1]
    gram = {key: p(a) for key, p in deformed_gram_m(n).items()}
    P = _gram_schmidt(parts_up, gram, Fraction(0), Fraction(1))
    bottom = (1,) * n
    out = {}
    for mu, vec in P.items():
        scale = Fraction(factorial(n)) / vec[bottom]
        out[mu] = {lam: c * scale for lam, c in vec.items()}
    return out


def _family_interpolate(n: int) -> dict[Partition, dict[Partition, AlphaPoly]]:
    nodes = list(range(1, n + 2))
    checks = [n + 2, n + 3]
    values = {a: _family_at(n, Fraction(a)) for a in nodes + checks}
    out: dict[Partition, dict[Partition, AlphaPoly]] = {}
    for mu in partitions_of(n):
        terms = {}
        for lam in partitions_of(n):
            ys = [values[a][mu].get(lam, Fraction(0)) for a in nodes]
            p = interpolate(nodes, ys)
            for a in checks:
                if p(a) != values[a][mu].get(lam, Fraction(0)):
                    raise InternalInconsistencyError(
                        f"coefficient of m_{lam} in J_{mu} is not a polynomial of degree <= {n}"
                    )
            if p:
                terms[lam] = p
        out[mu] = terms
    return out


def _family_ratfun(n: int) -> dict[Partition, dict[Partition, AlphaPoly]]:
    parts_up = partitions_of(n)[::-1]
    gram = {key: RatFun(p) for key, p in deformed_gram_m(n).items()}
    P = _gram_schmidt(parts_up, gram, RatFun(0), RatFun(1))
    bottom = (1,) * n
    out = {}
    for mu, vec in P.items():
        scale = RatFun(factorial(n)) / vec[bottom]
        terms = {}
        for lam, c in vec.items():
            r = c * scale
            if r.den.degree != 0:
                raise InternalInconsistencyError(
                    f"coefficient of m_{lam} in J_{mu} has a residual denominator {r.den}"
                )
            terms[lam] = r.as_poly()
        out[mu] = terms
    return out


_family_lock = threading.Lock()


@lru_cache(maxsize=None)
def _family(n: int, method: str) -> dict[Partition, dict[Partition, AlphaPoly]]:
    log.debug("constructing Jack family n=%d via %s", n, method)
    if method == "interpolate":
        fam = _family_interpolate(n)
    elif method == "ratfun":
        fam = _family_ratfun(n)
    else:
        raise DomainError(f"unknown construction method {method!r}")
    for mu, terms in fam.items():
        for lam, c in terms.items():
            if not c.integral_coefficients():
                raise InternalInconsistencyError(f"[m_{lam}] J_{mu} = {c} is not in Z[alpha]")
    return fam


def jack_family(n: int, method: str = "interpolate") -> dict[Partition, JackExpansion]:
    """J_mu for every partition mu of n."""
    if n > MAX_DEGREE:
        raise ResourceError(f"degree {n} exceeds the configured bound {MAX_DEGREE}")
    with _family_lock:
        fam = _family(n, method)
    return {mu: JackExpansion(mu, dict(terms)) for mu, terms in fam.items()}


def jack_J(mu: Iterable[int], method: str = "interpolate") -> JackExpansion:
    """Monomial expansion of the integral-form Jack polynomial J_mu."""
    mu = make_partition(mu)
    n = sum(mu)
    if n < 1:
        raise DomainError("mu must be a nonempty partition")
    if n > MAX_DEGREE:
        raise ResourceError(f"degree {n} exceeds the configured bound {MAX_DEGREE}")
    if method == "interpolate":
        with _cache_lock:
            hit = _cache_load(mu)
        if hit is not None:
            return hit
    exp = jack_family(n, method)[mu]
    if method == "interpolate":
        with _cache_lock:
            _cache_store(exp)
    return exp


@lru_cache(maxsize=None)
def _tilde(mu: Partition) -> JackExpansion:
    j = jack_J(mu)
    n = sum(mu)
    return JackExpansion(
        mu, {lam: reciprocal_transform(c, n) for lam, c in j.monomial_terms.items()}, tilde=True
    )


def jack_tilde(mu: Iterable[int]) -> JackExpansion:
    """Monomial expansion of alpha^n J_mu(1/alpha)."""
    return _tilde(make_partition(mu))


@lru_cache(maxsize=None)
def _schur_exp(mu: Partition) -> SymFun:
    return convert(_tilde(mu).as_symfun(), "s")


def schur_expansion(mu: Iterable[int]) -> SymFun:
    return _schur_exp(make_partition(mu))


def schur_coeff(mu: Iterable[int], lam: Iterable[int]) -> AlphaPoly:
    """Coefficient of s_lam in J~_mu."""
    mu, lam = make_partition(mu), make_partition(lam)
    if sum(mu) != sum(lam):
        raise DomainError(f"sizes differ: |{mu}| != |{lam}|")
    return _schur_exp(mu)[lam]


def a_coeffs(mu: Iterable[int], lam: Iterable[int]) -> list[Fraction]:
    """a_0..a_n with <J~_mu, s_lam> = sum_k a_k C(alpha+k, n)."""
    mu = make_partition(mu)
    return binomial_shift_expand(schur_coeff(mu, lam), sum(mu))


def b_coeffs(mu: Iterable[int], lam: Iterable[int]) -> list[Fraction]:
    """b_0..b_{n-1} with <J~_mu, s_lam> = sum_{k=1..n} b_{n-k} C(alpha, k) k!."""
    mu = make_partition(mu)
    return falling_factorial_expand(schur_coeff(mu, lam), sum(mu))


# --- closed forms used as oracles ---------------------------------------

def row_monomial_coeff(lam: Iterable[int], tilde: bool = False) -> AlphaPoly:
    """[m_lam] J_(n) = (n!/lam!) prod_s (arm(s) alpha + 1); with ``tilde``
    the transformed (n!/lam!) prod_s (alpha + arm(s))."""
    lam = make_partition(lam)
    n = sum(lam)
    c = AlphaPoly.const(Fraction(factorial(n), lambda_factorial(lam)))
    for s in cells(lam):
        a = arm(lam, s)
        c = c * (AlphaPoly((a, 1)) if tilde else AlphaPoly((1, a)))
    return c


def diagonal_product(mu: Iterable[int]) -> AlphaPoly:
    """prod_{s in mu} (arm(s) + alpha (leg(s) + 1))."""
    mu = make_partition(mu)
    return prod((AlphaPoly((arm(mu, s), leg(mu, s) + 1)) for s in cells(mu)), start=AlphaPoly.const(1))
