import json

import pytest

from reciprocity import verify as vf

# ids whose whole default grid must pass; thm47 is handled separately
ALL_PASS = sorted(set(vf.REGISTRY) - {"thm47"})
SLOW = {"thm23", "thm26", "eq3.3"}


def test_registry_covers_every_identity_in_scope():
    assert set(vf.IN_SCOPE) == set(vf.REGISTRY)
    assert len(vf.IN_SCOPE) == len(set(vf.IN_SCOPE))


@pytest.mark.parametrize("cid", ALL_PASS)
def test_default_grid_passes(cid):
    if cid in SLOW:
        pytest.skip("covered by the acceptance tests")
    certs = vf.run_suite([cid])
    checked = [c for c in certs if c.verdict is not None]
    assert checked, f"{cid} has no in-domain grid point"
    bad = [c.to_dict() for c in checked if not c.verdict]
    assert not bad, bad[:3]


def test_certificate_schema():
    c = vf.run_check("thm15", {"n": 1, "k": 1, "m": 1})
    d = json.loads(c.to_json())
    assert list(d) == ["id", "params", "lhs", "rhs", "verdict", "millis"]
    assert d["lhs"] == d["rhs"] == "2" and d["verdict"] is True


def test_spec_examples():
    assert vf.run_check("eq12.1", {"n": 2, "k": 2}).lhs == "3"
    c = vf.run_check("thm51.12.4", {"n": 1, "k": 1})
    assert (c.lhs, c.rhs, c.verdict) == ("3", "3", True)
    c = vf.run_check("conj50", {"n": 1, "k": 1, "m": 1})
    assert (c.lhs, c.rhs, c.verdict) == ("2", "2", True)


def test_certificates_are_reproducible():
    a = vf.run_check("thm34", {"n": 1, "k": 1, "m": 1})
    b = vf.run_check("thm34", {"n": 1, "k": 1, "m": 1})
    assert (a.lhs, a.rhs, a.verdict) == (b.lhs, b.rhs, b.verdict)


def test_domain_violation_names_condition():
    with pytest.raises(vf.DomainViolation, match="mod 3"):
        vf.run_check("thm54", {"n": 1, "k": 2})
    with pytest.raises(vf.DomainViolation, match="unknown parameters"):
        vf.run_check("eq12.1", {"n": 1, "k": 1, "q": 2})
    with pytest.raises(vf.DomainViolation, match="missing"):
        vf.run_check("eq12.1", {"n": 1})
    with pytest.raises(vf.UnknownCheck):
        vf.run_check("thm999", {})


def test_vanishing_cases_are_asserted_not_skipped():
    c = vf.run_check("thm56", {"n": 1, "k": 4, "r": 2, "s": 0})   # gcd(3, 9) = 3
    assert c.verdict and c.rhs == "0" and c.lhs == "0"


def test_conjecture_scan_reports_every_point():
    certs = vf.scan_conjecture("53", 3, 2, 2)
    assert len(certs) == 3 * 2 * 2
    skipped = [c for c in certs if c.verdict is None]
    assert {(c.params["k"], c.params["m"]) for c in skipped} == {(1, 1)}
    assert all("mod 3" in c.skipped for c in skipped)
    assert all(c.verdict for c in certs if c.verdict is not None)


def test_parallel_matches_serial():
    tasks = vf.default_tasks(["thm15"])[:12]
    a = [(c.id, c.params, c.lhs, c.rhs) for c in vf.run_many(tasks, 1)]
    b = [(c.id, c.params, c.lhs, c.rhs) for c in vf.run_many(tasks, 2)]
    assert a == b


def test_flagged_tableau_check_fails_off_rectangles():
    rect = vf.run_check("thm47", {"lam": (3, 3), "mu": (0, 0), "k": 3, "r": (2, 1), "s": (2, 1)})
    assert rect.verdict
    skew = vf.run_check("thm47", {"lam": (1, 3), "mu": (0, 0), "k": 2, "r": (2, 1), "s": (2, 1)})
    assert skew.verdict is False
