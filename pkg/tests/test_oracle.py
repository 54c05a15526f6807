import pytest

from mbword.algebra import AlgebraError
from mbword.oracle import (
    SUITES,
    ThresholdError,
    WreathElem,
    chi_prefixes,
    coset_gamma,
    group_exponent,
    perm_eval,
    perm_inv,
    perm_mul,
    perm_pow,
    pgl2_group,
    psl2_group,
    psl2_subgroup_of,
    quotient_fibers,
    representative_independence,
    run_suite,
    sz_group,
    verify_cosetwise_bound,
    wreath_eval,
    wreath_inv,
    wreath_mul,
    word_fibers,
)
from mbword.words import parse


@pytest.fixture(scope="module")
def sym3():
    return psl2_group(2, 1)


def test_small_group_basics(sym3):
    assert len(sym3) == 6
    assert sorted(sym3.order_of(i) for i in range(6)) == [1, 2, 2, 2, 3, 3]
    alt3 = sym3.subgroup("Alt3", [i for i in range(6) if sym3.order_of(i) == 3])
    assert len(alt3) == 3 and sym3.is_normal(alt3)
    reps, cid = sym3.cosets(alt3)
    assert len(reps) == 2 and len(set(cid)) == 2
    two = [i for i in range(6) if sym3.order_of(i) == 2][:1]
    assert not sym3.is_normal(sym3.subgroup("C2", two))
    g = 1
    assert sym3.mul(g, sym3.inv(g)) == sym3.one
    assert sym3.power(g, -1) == sym3.inv(g)


def test_fibers_square_sym3(sym3):
    st = word_fibers(parse("aa"), sym3)
    assert st.Pi == 4 and st.domain == 6
    assert st.pi == pytest.approx(4 / 6)


def test_fibers_pgl5():
    st = word_fibers(parse("a^12"), pgl2_group(5, 1))
    assert st.Pi == 96 and st.domain == 120


def test_coset_bound_square(sym3):
    alt3 = sym3.subgroup("Alt3", [i for i in range(6) if sym3.order_of(i) == 3])
    data = verify_cosetwise_bound(parse("aa"), sym3, alt3)
    assert (data["Pi_G"], data["Pi_G_mod_N"], data["Gamma"]) == (4, 2, 3)
    assert data["holds"]
    assert quotient_fibers(parse("aa"), sym3, alt3).Pi == 2
    assert coset_gamma(parse("aa"), sym3, alt3)[1] == 1
    assert representative_independence(parse("aa"), sym3, alt3)
    with pytest.raises(AlgebraError):
        verify_cosetwise_bound(parse("aa"), sym3, sym3.subgroup("C2", [1 if sym3.order_of(1) == 2 else 2]))


def test_coset_bound_commutator_sym4():
    sym4 = pgl2_group(3, 1)
    alt4 = psl2_subgroup_of(sym4)
    assert len(sym4) == 24 and len(alt4) == 12
    assert verify_cosetwise_bound(parse("abAB"), sym4, alt4)["holds"]


def test_exponents():
    assert group_exponent(psl2_group(5, 1)) == 30
    assert group_exponent(psl2_group(2, 2)) == 30
    assert group_exponent(sz_group(1)) == 20


def test_threshold_guard():
    with pytest.raises(ThresholdError):
        word_fibers(parse("abc"), psl2_group(5, 1), threshold=1000)


def test_perm_helpers():
    s, t = (1, 2, 0), (1, 0, 2)
    assert perm_mul(s, perm_inv(s)) == (0, 1, 2)
    assert perm_pow(s, 3) == (0, 1, 2)
    assert perm_pow(s, -1) == perm_inv(s)
    assert perm_mul(s, t) == tuple(s[t[i]] for i in range(3))
    assert perm_eval(parse("abAB"), [s, t]) == perm_mul(perm_mul(s, t), perm_mul(perm_inv(s), perm_inv(t)))
    assert chi_prefixes(parse("a"), [s]) == [(0, 1, 2)]
    assert chi_prefixes(parse("A"), [s]) == [perm_inv(s)]


def test_wreath_group_laws(sym3):
    x = WreathElem((1, 2), (1, 0))
    y = WreathElem((3, 0), (0, 1))
    one = WreathElem((sym3.one, sym3.one), (0, 1))
    assert wreath_mul(sym3, x, wreath_inv(sym3, x)) == one
    z = WreathElem((4, 5), (1, 0))
    assert wreath_mul(sym3, wreath_mul(sym3, x, y), z) == wreath_mul(sym3, x, wreath_mul(sym3, y, z))
    assert wreath_eval(sym3, parse("aA"), [x]) == one


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass(name):
    results, _ = run_suite(name)
    assert results
    bad = [r.to_json() for r in results if not r.passed]
    assert not bad


def test_equation_suite_shape():
    results, _ = run_suite("equations")
    n2 = [r for r in results if r.inputs["n"] == 2]
    assert any(r.computed["psi_matches"] for r in n2)
    assert any(not r.computed["psi_matches"] for r in n2)
    # a mismatched psi leaves the fiber empty
    assert all(r.computed["fiber"] == 0 for r in n2 if not r.computed["psi_matches"])


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
