import json
from fractions import Fraction
from math import factorial, prod

import pytest

from jacklab import jack
from jacklab.errors import DomainError, ResourceError
from jacklab.exactmath import AlphaPoly, RatFun, binom_poly, falling_poly
from jacklab.partitions import arm, cells, conjugate, dominates, hook_length, leg, partitions_of
from jacklab.symfunc import SymFun, convert, deformed_inner

A = AlphaPoly.alpha()


def test_small_goldens():
    assert jack.jack_J((2,)).monomial_terms == {(2,): 1 + A, (1, 1): AlphaPoly.const(2)}
    assert jack.jack_J((1, 1)).monomial_terms == {(1, 1): AlphaPoly.const(2)}
    assert jack.jack_J((2, 1)).monomial_terms == {(2, 1): 2 + A, (1, 1, 1): AlphaPoly.const(6)}
    assert jack.jack_J((3,)).monomial_terms == {
        (3,): (1 + A) * (1 + 2 * A),
        (2, 1): 3 * (1 + A),
        (1, 1, 1): AlphaPoly.const(6),
    }
    assert jack.jack_tilde((1, 1)).monomial_terms == {(1, 1): 2 * A ** 2}
    assert jack.schur_expansion((2,)) == SymFun(2, "s", {(2,): A ** 2 + A, (1, 1): A ** 2 - A})


def test_coefficient_goldens():
    assert jack.a_coeffs((2,), (2,)) == [0, 2, 0]
    assert jack.a_coeffs((2,), (1, 1)) == [2, 0, 0]
    assert jack.a_coeffs((1, 1), (1, 1)) == [2, 2, 0]
    assert jack.b_coeffs((2,), (2,)) == [1, 2]


@pytest.mark.parametrize("n", range(1, 8))
def test_alpha_one_is_hook_times_schur(n):
    for mu in partitions_of(n):
        hooks = prod(hook_length(mu, s) for s in cells(mu))
        at_one = jack.jack_J(mu).as_symfun().map_coeffs(lambda c: AlphaPoly.const(c(1)))
        assert convert(at_one, "s") == SymFun.basis_element("s", mu) * hooks


@pytest.mark.parametrize("n", range(1, 8))
def test_alpha_zero_is_elementary(n):
    for mu in partitions_of(n):
        mc = conjugate(mu)
        at_zero = jack.jack_J(mu).as_symfun().map_coeffs(lambda c: AlphaPoly.const(c(0)))
        want = SymFun.basis_element("e", mc) * prod(factorial(r) for r in mc)
        assert convert(at_zero, "e") == want


@pytest.mark.parametrize("n", range(1, 7))
def test_orthogonality_and_norms(n):
    fam = {mu: jack.jack_J(mu).as_symfun() for mu in partitions_of(n)}
    for mu, f in fam.items():
        norm = prod(
            (AlphaPoly((leg(mu, s) + 1, arm(mu, s))) * AlphaPoly((leg(mu, s), arm(mu, s) + 1)) for s in cells(mu)),
            start=AlphaPoly.const(1),
        )
        assert deformed_inner(f, f) == RatFun(norm)
        for nu, g in fam.items():
            if nu < mu:
                assert deformed_inner(f, g) == RatFun(AlphaPoly())


@pytest.mark.parametrize("n", range(1, 8))
def test_positivity_triangularity_normalization(n):
    for mu in partitions_of(n):
        terms = jack.jack_J(mu).monomial_terms
        assert terms[(1,) * n] == factorial(n)
        for lam, c in terms.items():
            assert dominates(mu, lam)
            assert c.integral_coefficients() and c.nonnegative_coefficients()


@pytest.mark.parametrize("n", range(1, 8))
def test_row_closed_form(n):
    j = jack.jack_J((n,))
    jt = jack.jack_tilde((n,))
    for lam in partitions_of(n):
        assert j.monomial_terms[lam] == jack.row_monomial_coeff(lam)
        assert jt.monomial_terms[lam] == jack.row_monomial_coeff(lam, tilde=True)


@pytest.mark.parametrize("n", range(1, 6))
def test_ratfun_route_agrees(n):
    a = jack.jack_family(n, "interpolate")
    b = jack.jack_family(n, "ratfun")
    assert a == b


@pytest.mark.parametrize("n", range(1, 8))
def test_diagonal_and_expansions(n):
    for mu in partitions_of(n):
        assert jack.schur_coeff(mu, mu) == jack.diagonal_product(mu)
        for lam in partitions_of(n):
            c = jack.schur_coeff(mu, lam)
            a = jack.a_coeffs(mu, lam)
            b = jack.b_coeffs(mu, lam)
            assert sum((x * binom_poly(k, n) for k, x in enumerate(a)), AlphaPoly()) == c
            assert sum((b[n - k] * falling_poly(k) for k in range(1, n + 1)), AlphaPoly()) == c


def test_errors():
    with pytest.raises(DomainError):
        jack.jack_J(())
    with pytest.raises(DomainError):
        jack.schur_coeff((2,), (1, 1, 1))
    with pytest.raises(ResourceError):
        jack.jack_J((10,))
    with pytest.raises(DomainError):
        jack.jack_family(3, "bogus")


def test_expansion_json_round_trip():
    e = jack.jack_tilde((2, 1))
    again = jack.JackExpansion.from_json(json.loads(json.dumps(e.to_json())))
    assert again == e


def test_disk_cache(tmp_path):
    jack.set_cache_dir(tmp_path)
    try:
        first = jack.jack_J((3, 1))
        path = tmp_path / "J_n4_3-1.json"
        assert path.exists()
        raw = path.read_bytes()
        assert not list(tmp_path.glob("*.tmp"))
        assert jack.jack_J((3, 1)) == first
        assert path.read_bytes() == raw
    finally:
        jack.set_cache_dir(None)


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("JACKLAB_CACHE", str(tmp_path))
    jack.jack_J((2, 2))
    assert (tmp_path / "J_n4_2-2.json").exists()
