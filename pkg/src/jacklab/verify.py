"""Check registry: each entry verifies one identity exhaustively at degree n.

Every check returns a :class:`CheckReport` listing one case per element of
its iteration domain.  A case verdict is ``"pass"``, ``"fail"``, or
``"info"``; informational cases never fail a report.  The first failing
case's witness is surfaced on the report.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Any, Callable

from .errors import DomainError, InternalInconsistencyError, ResourceError
from .exactmath import (
    AlphaPoly,
    binom_poly,
    binomial_shift_expand,
    falling_factorial_expand,
    falling_factorial_full,
    falling_poly,
    rat_to_str,
    real_roots_only,
)
from .jack import (
    a_coeffs,
    b_coeffs,
    diagonal_product,
    jack_tilde,
    row_monomial_coeff,
    schur_coeff,
    schur_expansion,
)
from .partitions import conjugate, partitions_of
from .permcomb import all_perms, des, eulerian, f_beta, restricted_eulerian, set_partitions, stirling2
from .rook import (
    FerrersBoard,
    all_boards,
    content_board,
    gjw_product,
    hit_numbers,
    hook_boards,
    random_board,
    rook_numbers,
)
from .symfunc import QSymFun, SymFun, convert, hall_inner, schur_to_fundamental, symfun_to_qsym
from .tableaux import insertion_descents, kostka, qyt_count, syt_count

__all__ = ["Case", "CheckReport", "Check", "REGISTRY", "run_check", "check_ids"]


@dataclass
class Case:
    inputs: dict
    verdict: str
    witness: dict | None = None
    data: dict | None = None

    def to_json(self) -> dict:
        out = {"inputs": self.inputs, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.data is not None:
            out["data"] = self.data
        return out


@dataclass
class CheckReport:
    check_id: str
    n: int
    cases: list[Case] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.verdict != "fail" for c in self.cases)

    @property
    def witness(self) -> dict | None:
        for c in self.cases:
            if c.verdict == "fail":
                return {"inputs": c.inputs, **(c.witness or {})}
        return None

    def counts(self) -> Counter:
        return Counter(c.verdict for c in self.cases)

    def to_json(self, with_elapsed: bool = True) -> dict:
        out = {
            "check": self.check_id,
            "n": self.n,
            "passed": self.passed,
            "cases": [c.to_json() for c in self.cases],
            "witness": self.witness,
        }
        if with_elapsed:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["check", "n", "inputs", "verdict", "witness", "data"])
        for c in self.cases:
            w.writerow([
                self.check_id,
                self.n,
                json.dumps(c.inputs, sort_keys=True),
                c.verdict,
                json.dumps(c.witness, sort_keys=True) if c.witness else "",
                json.dumps(c.data, sort_keys=True) if c.data else "",
            ])
        return buf.getvalue()

    def summary(self) -> str:
        cnt = self.counts()
        status = "PASS" if self.passed else "FAIL"
        extra = f", {cnt['info']} info" if cnt["info"] else ""
        line = (
            f"{status} {self.check_id} n={self.n}: {cnt['pass']} pass, "
            f"{cnt['fail']} fail{extra} ({self.elapsed:.2f}s)"
        )
        if not self.passed:
            line += f"\n  witness: {json.dumps(self.witness, sort_keys=True)}"
        return line


@dataclass(frozen=True)
class Check:
    check_id: str
    fn: Callable[[int], list[Case]]
    description: str
    default_n: int
    max_n: int
    large_max_n: int
    min_n: int = 1


REGISTRY: dict[str, Check] = {}


def _register(check_id, description, default_n, max_n, large_max_n=None, min_n=1):
    def deco(fn):
        REGISTRY[check_id] = Check(
            check_id, fn, description, default_n, max_n, large_max_n or max_n, min_n
        )
        return fn

    return deco


def check_ids() -> list[str]:
    return list(REGISTRY)


def run_check(check_id: str, n: int, allow_large: bool = False) -> CheckReport:
    """Run a registered check at degree ``n``."""
    if check_id not in REGISTRY:
        raise DomainError(f"unknown check {check_id!r}; known: {', '.join(REGISTRY)}")
    chk = REGISTRY[check_id]
    limit = chk.large_max_n if allow_large else chk.max_n
    if n < chk.min_n:
        raise DomainError(f"{check_id} needs n >= {chk.min_n}")
    if n > limit:
        hint = "" if allow_large or chk.large_max_n == chk.max_n else " (pass --large)"
        raise ResourceError(f"{check_id} is bounded by n <= {limit}{hint}")
    t0 = time.perf_counter()
    cases = chk.fn(n)
    return CheckReport(check_id, n, cases, time.perf_counter() - t0)


# --- helpers --------------------------------------------------------------

def _p(lam) -> list[int]:
    return list(lam)


def _strs(xs) -> list[str]:
    return [rat_to_str(x) for x in xs]


def _nat(x: Fraction) -> bool:
    return x >= 0 and x.denominator == 1


def _case(inputs: dict, ok: bool, witness: dict | None = None, data: dict | None = None) -> Case:
    return Case(inputs, "pass" if ok else "fail", None if ok else witness, data)


def _poly_eq_case(inputs: dict, lhs: AlphaPoly, rhs: AlphaPoly) -> Case:
    ok = lhs == rhs
    return _case(inputs, ok, {"lhs": str(lhs), "rhs": str(rhs)})


def _qsym_cases(lhs: QSymFun, rhs: QSymFun) -> list[Case]:
    keys = sorted(set(lhs.terms) | set(rhs.terms), key=lambda s: (len(s), sorted(s)))
    return [
        _case({"des": sorted(k)}, lhs[k] == rhs[k], {"lhs": str(lhs[k]), "rhs": str(rhs[k])},
              {"coeff": str(lhs[k])})
        for k in keys
    ]


def _t_poly(counts: dict[int, int]) -> AlphaPoly:
    """Polynomial in a formal variable t with the given coefficients."""
    top = max(counts, default=-1)
    return AlphaPoly([counts.get(i, 0) for i in range(top + 1)])


def _real_rooted_or_zero(p: AlphaPoly) -> bool:
    return (not p) or real_roots_only(p)


# --- positivity and real-rootedness of the coefficients ------------------

@_register("conj1", "a_k(mu,lam) in N, a_n = 0, sum a_k z^k real-rooted", 6, 7, 9)
def _conj1(n: int) -> list[Case]:
    cases = []
    for mu in partitions_of(n):
        for lam in partitions_of(n):
            a = a_coeffs(mu, lam)
            inputs = {"mu": _p(mu), "lam": _p(lam)}
            bad = next((k for k, x in enumerate(a) if not _nat(x)), None)
            if bad is not None:
                cases.append(_case(inputs, False, {"k": bad, "value": rat_to_str(a[bad])}))
                continue
            if a[n] != 0:
                cases.append(_case(inputs, False, {"k": n, "value": rat_to_str(a[n])}))
                continue
            ok = _real_rooted_or_zero(AlphaPoly(a))
            cases.append(_case(inputs, ok, {"reason": "not real-rooted", "a": _strs(a)}, {"a": _strs(a)}))
    return cases


@_register("conj2", "b_{n-k}(mu,lam) in N, sum b_{n-k} z^k real-rooted", 6, 7, 9)
def _conj2(n: int) -> list[Case]:
    cases = []
    for mu in partitions_of(n):
        for lam in partitions_of(n):
            b = b_coeffs(mu, lam)
            inputs = {"mu": _p(mu), "lam": _p(lam)}
            bad = next((j for j, x in enumerate(b) if not _nat(x)), None)
            if bad is not None:
                cases.append(_case(inputs, False, {"index": bad, "value": rat_to_str(b[bad])}))
                continue
            # coefficient of z^k is b_{n-k}; the k = 0 term b_n is 0
            poly = AlphaPoly([0] + [b[n - k] for k in range(1, n + 1)])
            ok = _real_rooted_or_zero(poly)
            cases.append(_case(inputs, ok, {"reason": "not real-rooted", "b": _strs(b)}, {"b": _strs(b)}))
    return cases


@_register("ab_link", "i! b_{n-i} = sum_k a_k C(k, n-i)", 6, 8, 9)
def _ab_link(n: int) -> list[Case]:
    cases = []
    for mu in partitions_of(n):
        for lam in partitions_of(n):
            a = a_coeffs(mu, lam)
            b = b_coeffs(mu, lam)
            inputs = {"mu": _p(mu), "lam": _p(lam)}
            bad = None
            for i in range(1, n + 1):
                recombined = sum(a[k] * comb(k, n - i) for k in range(n + 1))
                if recombined != factorial(i) * b[n - i]:
                    bad = {"i": i, "from_a": rat_to_str(recombined), "from_b": rat_to_str(factorial(i) * b[n - i])}
                    break
            if bad is None and sum(a[k] * comb(k, n) for k in range(n + 1)) != 0:
                bad = {"i": 0, "from_a": rat_to_str(a[n]), "from_b": "0"}
            cases.append(_case(inputs, bad is None, bad))
    return cases


# --- Eulerian and Stirling -----------------------------------------------

@_register("prop4", "[m_(1^n)] J~_mu = n! alpha^n and its A(n,k), S(n,k) expansions", 6, 8, 9)
def _prop4(n: int) -> list[Case]:
    target = AlphaPoly.monomial(n, factorial(n))
    cases = []
    ones = (1,) * n
    h_ones = SymFun.basis_element("h", ones)
    for mu in partitions_of(n):
        jt = jack_tilde(mu)
        coeff = jt[ones]
        paired = hall_inner(jt.as_symfun(), h_ones)
        ok = coeff == target and paired == target
        cases.append(_case({"mu": _p(mu)}, ok, {"coeff": str(coeff), "hall": str(paired)}))
    a = binomial_shift_expand(target, n)
    want_a = [Fraction(factorial(n) * eulerian(n, k)) for k in range(n)] + [Fraction(0)]
    cases.append(_case({"expansion": "C(alpha+k,n)"}, a == want_a, {"got": _strs(a), "want": _strs(want_a)}))
    b = falling_factorial_full(target, n)
    want_b = [Fraction(factorial(n) * stirling2(n, k)) for k in range(n + 1)]
    cases.append(_case({"expansion": "C(alpha,k)k!"}, b == want_b, {"got": _strs(b), "want": _strs(want_b)}))
    return cases


@_register("cor_eul", "sum_lam a_k(mu,lam) K_{lam,1^n} = n! A(n,k)", 6, 8, 9)
def _cor_eul(n: int) -> list[Case]:
    cases = []
    ones = (1,) * n
    for mu in partitions_of(n):
        a_rows = {lam: a_coeffs(mu, lam) for lam in partitions_of(n)}
        for k in range(n + 1):
            total = sum(a_rows[lam][k] * kostka(lam, ones) for lam in a_rows)
            want = factorial(n) * eulerian(n, k)
            cases.append(_case({"mu": _p(mu), "k": k}, total == want,
                               {"got": rat_to_str(total), "want": want}))
    return cases


@_register("cor_stir", "sum_lam b_{n-k}(mu,lam) K_{lam,1^n} = n! S(n,k), k = 1..n", 6, 8, 9)
def _cor_stir(n: int) -> list[Case]:
    cases = []
    ones = (1,) * n
    for mu in partitions_of(n):
        b_rows = {lam: b_coeffs(mu, lam) for lam in partitions_of(n)}
        for k in range(1, n + 1):
            total = sum(b_rows[lam][n - k] * kostka(lam, ones) for lam in b_rows)
            want = factorial(n) * stirling2(n, k)
            inputs = {"mu": _p(mu), "k": k}
            if k == n:
                inputs["top_term"] = True
            cases.append(_case(inputs, total == want, {"got": rat_to_str(total), "want": want}))
    return cases


# --- the row case mu = (n) --------------------------------------------------

@_register("thm5", "a_k((n),lam) = n! QYT_{=k+1}(lam')", 6, 7, 8)
def _thm5(n: int) -> list[Case]:
    cases = []
    for lam in partitions_of(n):
        a = a_coeffs((n,), lam)
        conj = conjugate(lam)
        for k in range(n):
            want = factorial(n) * qyt_count(conj, k + 1)
            cases.append(_case({"lam": _p(lam), "k": k}, a[k] == want,
                               {"got": rat_to_str(a[k]), "want": want}))
        cases.append(_case({"lam": _p(lam), "k": n}, a[n] == 0, {"got": rat_to_str(a[n]), "want": 0}))
    return cases


@_register("lem6", "(n!/lam!) prod(alpha + arm) = n! sum_k A(lam,k) C(alpha+n-1-k, n)", 6, 8, 9)
def _lem6(n: int) -> list[Case]:
    cases = []
    row = jack_tilde((n,))
    for lam in partitions_of(n):
        lhs = row_monomial_coeff(lam, tilde=True)
        rhs = factorial(n) * sum(
            (restricted_eulerian(lam, k) * binom_poly(n - 1 - k, n) for k in range(n)), AlphaPoly()
        )
        built = row[lam]
        ok = lhs == rhs == built
        cases.append(_case({"lam": _p(lam)}, ok,
                           {"closed_form": str(lhs), "eulerian_side": str(rhs), "constructed": str(built)}))
    return cases


@_register("lem7", "A(lam,k) = sum_nu K_{nu,lam} QYT_{=k+1}(nu)", 6, 7, 8)
def _lem7(n: int) -> list[Case]:
    cases = []
    parts = partitions_of(n)
    for lam in parts:
        for k in range(n):
            rhs = sum(kostka(nu, lam) * qyt_count(nu, k + 1) for nu in parts)
            lhs = restricted_eulerian(lam, k)
            cases.append(_case({"lam": _p(lam), "k": k}, lhs == rhs, {"lhs": lhs, "rhs": rhs}))
    return cases


@_register("cor8", "sum A(lam,k) C(.) m_lam = sum QYT_{=k+1}(nu) C(.) s_nu", 6, 7, 8)
def _cor8(n: int) -> list[Case]:
    parts = partitions_of(n)
    lhs_m = SymFun(n, "m", {
        lam: sum((restricted_eulerian(lam, k) * binom_poly(n - 1 - k, n) for k in range(n)), AlphaPoly())
        for lam in parts
    })
    rhs_s = SymFun(n, "s", {
        nu: sum((qyt_count(nu, k + 1) * binom_poly(n - 1 - k, n) for k in range(n)), AlphaPoly())
        for nu in parts
    })
    lhs_s = convert(lhs_m, "s")
    return [_poly_eq_case({"nu": _p(nu)}, lhs_s[nu], rhs_s[nu]) for nu in parts]


@_register("lem3", "QYT_{=k}(lam) = QYT_{=n+1-k}(lam')", 6, 8, 9)
def _lem3(n: int) -> list[Case]:
    cases = []
    for lam in partitions_of(n):
        conj = conjugate(lam)
        for k in range(1, n + 1):
            lhs, rhs = qyt_count(lam, k), qyt_count(conj, n + 1 - k)
            cases.append(_case({"lam": _p(lam), "k": k}, lhs == rhs, {"lhs": lhs, "rhs": rhs}))
    return cases


# --- fundamental quasisymmetric expansions ----------------------------------

def _des_p_counts(n: int) -> dict[frozenset, Counter]:
    """sigma -> Counter of des(pi) over pi with Des(P(pi)) = sigma."""
    out: dict[frozenset, Counter] = defaultdict(Counter)
    for pi in all_perms(n):
        out[insertion_descents(pi)][des(pi)] += 1
    return out


@_register("thm9", "sum_pi t^des(pi) Q_Des(P(pi)) = sum QYT_{=k+1}(mu) t^k s_mu", 6, 7, 8)
def _thm9(n: int) -> list[Case]:
    lhs = QSymFun(n, {sigma: _t_poly(cnt) for sigma, cnt in _des_p_counts(n).items()})
    rhs = QSymFun(n, {})
    for mu in partitions_of(n):
        gen = _t_poly({k: qyt_count(mu, k + 1) for k in range(n)})
        rhs = rhs + schur_to_fundamental(mu) * gen
    return _qsym_cases(lhs, rhs)


def _cor10_rhs(n: int) -> QSymFun:
    terms = {}
    for sigma, cnt in _des_p_counts(n).items():
        terms[sigma] = factorial(n) * sum(
            (c * binom_poly(n - 1 - d, n) for d, c in cnt.items()), AlphaPoly()
        )
    return QSymFun(n, terms)


@_register("cor10", "J~_(n) = n! sum_pi C(alpha+n-1-des(pi), n) Q_Des(P(pi))", 6, 7, 8)
def _cor10(n: int) -> list[Case]:
    return _qsym_cases(symfun_to_qsym(schur_expansion((n,))), _cor10_rhs(n))


def _conj13_rhs(n: int) -> QSymFun:
    perms = all_perms(n)
    counts: dict[frozenset, Counter] = defaultdict(Counter)
    memo: dict[tuple, frozenset] = {}
    for beta in set_partitions(n):
        k = len(beta)
        for pi in perms:
            w = f_beta(pi, beta)
            sigma = memo.get(w)
            if sigma is None:
                sigma = memo[w] = insertion_descents(w)
            counts[sigma][k] += 1
    return QSymFun(n, {
        sigma: sum((c * falling_poly(k) for k, c in cnt.items()), AlphaPoly())
        for sigma, cnt in counts.items()
    })


@_register("conj13", "J~_(n) = sum_{pi,beta} C(alpha,|beta|)|beta|! Q_Des(P(f_beta(pi)))", 5, 6, 7)
def _conj13(n: int) -> list[Case]:
    return _qsym_cases(symfun_to_qsym(schur_expansion((n,))), _conj13_rhs(n))


def _existence_cases(n: int, basis: str, pinned: dict) -> list[Case]:
    """Fundamental coefficients of J~_mu expanded in a binomial basis must be
    natural numbers whose column sums count the index pairs."""
    cases = []
    for mu in partitions_of(n):
        q = symfun_to_qsym(schur_expansion(mu))
        columns: Counter = Counter()
        natural = True
        stray = False
        for sigma, c in q.terms.items():
            if basis == "a":
                coeffs = binomial_shift_expand(c, n)
                stray |= coeffs[n] != 0
                # weight C(alpha+n-1-k, n) belongs to des(pi) = k
                vec = {n - 1 - j: coeffs[j] for j in range(n)}
            else:
                coeffs = falling_factorial_full(c, n)
                stray |= coeffs[0] != 0
                vec = {k: coeffs[k] for k in range(1, n + 1)}
            natural &= all(_nat(x) for x in vec.values())
            columns.update({k: x for k, x in vec.items()})
        if basis == "a":
            want = {k: factorial(n) * eulerian(n, k) for k in range(n)}
        else:
            want = {k: factorial(n) * stirling2(n, k) for k in range(1, n + 1)}
        consistent = natural and not stray and all(columns.get(k, 0) == w for k, w in want.items())
        inputs = {"mu": _p(mu)}
        data = {"column_sums": {str(k): rat_to_str(columns.get(k, 0)) for k in sorted(want)}}
        if mu in pinned:
            ok = consistent and q == pinned[mu]()
            cases.append(_case({**inputs, "pinned": True}, ok, {"reason": "pinned construction differs"}, data))
        else:
            data["consistent"] = consistent
            cases.append(Case(inputs, "info", None, data))
    return cases


@_register("conj11_exist", "some sigma(pi,tau,mu) realizes J~_mu in the C(alpha+k,n) weights", 5, 7, 8)
def _conj11(n: int) -> list[Case]:
    def column() -> QSymFun:
        top = frozenset(range(1, n))
        # n! choices of tau for each pi
        return QSymFun(n, {top: factorial(n) * sum(
            (eulerian(n, k) * binom_poly(n - 1 - k, n) for k in range(n)), AlphaPoly())})

    return _existence_cases(n, "a", {(n,): lambda: _cor10_rhs(n), (1,) * n: column})


@_register("conj12_exist", "some rho(pi,beta,mu) realizes J~_mu in the C(alpha,k)k! weights", 5, 6, 7)
def _conj12(n: int) -> list[Case]:
    def column() -> QSymFun:
        top = frozenset(range(1, n))
        return QSymFun(n, {top: factorial(n) * sum(
            (stirling2(n, k) * falling_poly(k) for k in range(1, n + 1)), AlphaPoly())})

    return _existence_cases(n, "b", {(n,): lambda: _conj13_rhs(n), (1,) * n: column})


# --- rook boards -------------------------------------------------------------

@_register("prop14", "hook diagonal coefficients from the boards C and D", 6, 8, 9)
def _prop14(n: int) -> list[Case]:
    cases = []
    for ell in range(n):
        mu = (n - ell,) + (1,) * ell
        target = schur_coeff(mu, mu)
        C, D = hook_boards(n, ell)
        hc, hd = hit_numbers(C), hit_numbers(D)
        rc, rd = rook_numbers(C), rook_numbers(D)
        w1, w2 = ell * factorial(ell), factorial(ell)
        via_hits = sum(((w1 * hc[k] + w2 * hd[k]) * binom_poly(k, n) for k in range(n + 1)), AlphaPoly())
        via_rooks = sum(
            ((w1 * rc[n - k] + w2 * rd[n - k]) * falling_poly(k) for k in range(n + 1)), AlphaPoly()
        )
        inputs = {"mu": _p(mu), "ell": ell, "C": list(C.heights), "D": list(D.heights)}
        if ell in (0, n - 1):
            inputs["edge"] = True
        ok = via_hits == target and via_rooks == target
        cases.append(_case(inputs, ok,
                           {"target": str(target), "hits": str(via_hits), "rooks": str(via_rooks)}))
    return cases


@_register("thm16", "a/b coefficients of <J~_(n), s_lam> from the content board", 6, 7, 8)
def _thm16(n: int) -> list[Case]:
    cases = []
    for lam in partitions_of(n):
        board = content_board(lam)
        K = syt_count(lam)
        h = hit_numbers(board)
        r = rook_numbers(board)
        a = a_coeffs((n,), lam)
        b = b_coeffs((n,), lam)
        conj = conjugate(lam)
        problems = []
        problems += [("a", k) for k in range(n + 1) if a[k] != K * h[k]]
        problems += [("b", k) for k in range(1, n + 1) if b[n - k] != K * r[n - k]]
        # the QYT formula for the same a_k
        problems += [("thm5", k) for k in range(n) if factorial(n) * qyt_count(conj, k + 1) != K * h[k]]
        inputs = {"lam": _p(lam), "heights": list(board.heights)}
        cases.append(_case(inputs, not problems,
                           {"mismatch": problems[:1], "a": _strs(a), "hits": h, "K": K},
                           {"hits": h, "rooks": r}))
    return cases


GJW_EXHAUSTIVE_MAX = 6
GJW_RANDOM_COUNT = 500
GJW_SEED = 20170101


def _gjw_case(board: FerrersBoard, tag: str) -> Case:
    n = board.n
    inputs = {"board": board.to_json(), "domain": tag}
    try:
        h = hit_numbers(board)
    except InternalInconsistencyError as exc:
        return _case(inputs, False, {"reason": str(exc)})
    prod_ = gjw_product(board)
    r = rook_numbers(board)
    a = binomial_shift_expand(prod_, n)
    c = falling_factorial_full(prod_, n)
    ok = a == [Fraction(x) for x in h] and c == [Fraction(r[n - k]) for k in range(n + 1)]
    return _case(inputs, ok, {"hits": h, "rooks": r, "a": _strs(a), "falling": _strs(c)})


@_register("gjw", "Goldman-Joichi-White factorization on Ferrers boards", 8, 8, 9)
def _gjw(n: int) -> list[Case]:
    cases = []
    for m in range(1, min(n, GJW_EXHAUSTIVE_MAX) + 1):
        cases += [_gjw_case(board, "exhaustive") for board in all_boards(m)]
    rng = random.Random(GJW_SEED)
    for m in range(GJW_EXHAUSTIVE_MAX + 1, n + 1):
        cases += [_gjw_case(random_board(m, rng), "random") for _ in range(GJW_RANDOM_COUNT)]
    return cases


@_register("diag", "<J~_mu, s_mu> = prod(arm + alpha (leg + 1))", 6, 8, 9)
def _diag(n: int) -> list[Case]:
    cases = []
    for mu in partitions_of(n):
        lhs = schur_coeff(mu, mu)
        rhs = diagonal_product(mu)
        mono = jack_tilde(mu)[mu]
        cases.append(_case({"mu": _p(mu)}, lhs == rhs == mono,
                           {"schur": str(lhs), "product": str(rhs), "monomial": str(mono)}))
    return cases
