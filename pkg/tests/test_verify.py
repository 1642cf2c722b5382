import json

import pytest

from jacklab import jack
from jacklab.errors import DomainError, ResourceError
from jacklab.verify import REGISTRY, check_ids, run_check

# The registry is the coverage ledger; it may grow but never lose an entry.
KNOWN_CHECKS = {
    "conj1", "conj2", "ab_link", "prop4", "cor_eul", "cor_stir", "thm5", "lem6", "lem7",
    "cor8", "lem3", "thm9", "cor10", "conj13", "conj11_exist", "conj12_exist", "prop14",
    "thm16", "gjw", "diag",
}
VERDICTS = {"pass", "fail", "info"}


def test_registry_not_shrinking():
    assert KNOWN_CHECKS <= set(check_ids())


@pytest.mark.parametrize("check_id", sorted(KNOWN_CHECKS))
def test_each_check_passes_small(check_id):
    chk = REGISTRY[check_id]
    for n in range(chk.min_n, 5):
        rep = run_check(check_id, n)
        assert rep.passed, rep.summary()
        assert rep.witness is None
        assert any(c.verdict == "pass" for c in rep.cases)


@pytest.mark.parametrize("check_id", ["thm5", "gjw", "conj11_exist"])
def test_report_schema(check_id):
    rep = run_check(check_id, 4)
    data = json.loads(json.dumps(rep.to_json()))
    assert set(data) == {"check", "n", "passed", "cases", "witness", "elapsed"}
    assert data["check"] == check_id and data["n"] == 4 and data["passed"] is True
    assert data["witness"] is None
    for case in data["cases"]:
        assert case["verdict"] in VERDICTS
        assert isinstance(case["inputs"], dict)
    csv_text = rep.to_csv()
    assert csv_text.splitlines()[0] == "check,n,inputs,verdict,witness,data"
    assert len(csv_text.splitlines()) == len(rep.cases) + 1


def test_deterministic_reports(tmp_path):
    def dump(cid):
        return json.dumps(run_check(cid, 5).to_json(with_elapsed=False), sort_keys=True)

    jack.set_cache_dir(tmp_path)
    try:
        for cid in ("conj1", "gjw", "thm16"):
            cold = dump(cid)
            assert dump(cid) == cold
    finally:
        jack.set_cache_dir(None)


def test_bounds_and_unknown():
    with pytest.raises(DomainError):
        run_check("nope", 3)
    chk = REGISTRY["conj13"]
    with pytest.raises(ResourceError):
        run_check("conj13", chk.max_n + 1)
    with pytest.raises(ResourceError):
        run_check("conj13", chk.large_max_n + 1, allow_large=True)
    with pytest.raises(DomainError):
        run_check("thm5", 0)


def test_failure_witness_is_first_failure():
    from jacklab.verify import Case, CheckReport

    rep = CheckReport("x", 3, [Case({"k": 0}, "pass"), Case({"k": 1}, "fail", {"got": 2}), Case({"k": 2}, "fail")])
    assert not rep.passed
    assert rep.witness == {"inputs": {"k": 1}, "got": 2}
    assert "FAIL" in rep.summary()
