import pytest

from mbword.deciders import (
    MB,
    NOT_MB,
    NOT_VSMB,
    NOT_VWMB,
    VSMB,
    VWMB,
    DeciderOpts,
    UnsupportedScopeError,
    decide_power,
    decide_vsmb,
    decide_vwmb,
    divisibility_certificates,
    exp_psl2_even,
    exp_psl2_odd,
    exp_sz,
    lcm_pgl2_odd_coset,
    power_group_list,
    sweep,
    torus_probe_fails,
    verify_divisibility,
    vsmb_group_list,
)
from mbword.ff import UnsupportedSizeError
from mbword.words import WordError, enumerate_canonical, parse


def test_exponent_formulas():
    assert exp_psl2_even(1) == 6
    assert exp_psl2_even(2) == 30
    assert exp_psl2_odd(5, 1) == 30
    assert exp_psl2_odd(3, 2) == 60  # Alt6
    assert lcm_pgl2_odd_coset(5, 1) == 12
    assert exp_sz(2) == 4 * 7 * 5 * 13  # Sz(8)
    assert exp_sz(3) == 4 * 31 * 25 * 41


def test_divisibility_short_circuit():
    certs = divisibility_certificates(12)
    assert certs[0]["group"] == "PSL2(5^1)" and certs[0]["value"] == 12
    assert all(verify_divisibility(c) for c in certs)
    assert {c["formula"] for c in divisibility_certificates(30)} >= {"p*(p^(2L)-1)/4"}
    assert divisibility_certificates(22) == []
    assert divisibility_certificates(8) == []


def test_power_group_list_22():
    certs, tasks = power_group_list(22)
    assert certs == []
    names = {t.name for t in tasks}
    assert "PSL2(19^256)" in names
    assert "PSL2(2^11)" in names and "PSL2(2^2)" in names
    assert all(t.p <= 22 for t in tasks)
    assert power_group_list(-22)[1] == tasks
    with pytest.raises(WordError):
        power_group_list(0)


def test_torus_guard_matches_brute_force():
    # the digit-position shortcut against the plain modular sum
    for p, fam in ((2, "PSL2"), (5, "PSL2"), (7, "PSL2"), (2, "Sz")):
        for degree in (3, 4, 5, 8):
            q1 = p**degree - 1
            for K in range(1, degree):
                for e in range(2, 12):
                    n = sum(p ** (i * K) for i in range(e)) % q1
                    brute = n == 0 if p == 2 else 4 * n % q1 == 0
                    assert torus_probe_fails(p, degree, K, e, fam) == brute, (p, degree, K, e)


@pytest.mark.parametrize("e", [8, 12, 16, 18, 24, 30])
def test_power_not_mb(e):
    v = decide_power(e, full=False)
    assert v.kind == NOT_MB
    assert v.certificates
    assert all(c.get("reverified", True) for c in v.certificates)


def test_power_8_certificate():
    v = decide_power(8)
    c = v.certificates[0]
    assert c["group"] == "PSL2(3^2)"
    assert c["assignment"] == [{"eps": 1, "K": 1}]
    assert c["reverified"] is True


@pytest.mark.parametrize("e", [1, 2, 3, 4, 5, 6, 7, 9, 10, -3, -6])
def test_power_mb_small(e):
    assert decide_power(e, full=False).kind == MB


def test_power_sign_symmetry():
    a, b = decide_power(14, full=False), decide_power(-14, full=False)
    assert a.kind == b.kind == MB
    assert [t["group"] for t in a.tasks] == [t["group"] for t in b.tasks]


def test_power_zero():
    with pytest.raises(WordError):
        decide_power(0)


def test_vsmb_group_list():
    plans = {p.family: p for p in vsmb_group_list(parse("abAB"))}
    assert plans["PSL2(2^L)"].alternatives == [] and plans["Sz"].alternatives == []
    plans = {p.family: p for p in vsmb_group_list(parse("a^3b^3"))}
    a, b = plans["PSL2(3^L)"].alternatives
    assert [t.L for t in a] == [1, 2, 4, 8, 16]
    assert [t.L for t in b] == [2, 3, 4, 5, 7, 8, 11, 13, 16, 17]
    # x^6 is constant on Sym3, so prime L tasks appear for p = 2
    plans = {p.family: p for p in vsmb_group_list(parse("a^6"))}
    assert [t.L for t in plans["PSL2(2^L)"].alternatives[0]][:3] == [2, 3, 5]


def test_decide_vsmb_examples():
    v = decide_vsmb(parse("a"))
    assert v.kind == VSMB and v.derivation["rule"] == "R1"
    v = decide_vsmb(parse("baBA"))
    assert v.kind == VSMB
    v = decide_vsmb(parse("a^8"))
    assert v.kind == NOT_VSMB and v.certificates[0]["group"] == "PSL2(3^2)"
    with pytest.raises(WordError):
        decide_vsmb(parse("aA"))


def test_decide_vwmb_examples():
    assert decide_vwmb(parse("a^8")).kind == NOT_VWMB
    assert decide_vwmb(parse("a^2ba^3")).kind == VWMB
    assert decide_vwmb(parse("abA^2b^2")).kind == VWMB


def test_vwmb_canonical_length6_sample():
    for w in enumerate_canonical(6)[::8]:
        assert decide_vwmb(w).kind == VWMB, w


def test_vwmb_work_cap():
    with pytest.raises(UnsupportedSizeError):
        decide_vwmb(parse("a^3b^3c^3"), DeciderOpts(work_cap=10))


def test_sweep5():
    lines = []
    summary = sweep(5, emit=lines.append)
    assert summary["ok"]
    results = [x for x in lines if x["type"] == "length"]
    assert [x["l"] for x in results] == [1, 2, 3, 4, 5]
    assert all(x["group_checks"] == 0 for x in results)
    assert results[4]["syntactic"] == {"R1": 32, "R2": 76, "R3": 52, "R7": 2}
    with pytest.raises(UnsupportedScopeError):
        sweep(9)
