import random

import pytest

from mbword.algebra import (
    AutElem,
    aut_eq,
    aut_identity,
    aut_mul,
    aut_pow,
    coset_label,
    diag2,
    in_psl2,
    psl2_ctx,
    random_element,
    sz_ctx,
)
from mbword.engine import (
    CONSTANT,
    NONCONSTANT,
    UNDECIDED,
    ConstancyCertificate,
    EngineOpts,
    ThresholdError,
    WitnessPair,
    check_word_on_group,
    eval_coset_map,
    exhaustive_constancy,
    find_witness,
    residual_in_s,
    task_rng,
    verify_certificate,
    verify_witness,
)
from mbword.words import parse


def rep(ctx, eps, K):
    for r in ctx.reps:
        lab = coset_label(r)
        if lab["eps"] == eps and lab["K"] == K:
            return r
    raise LookupError((eps, K))


def test_eval_examples():
    ctx = psl2_ctx(5, 1)
    F = ctx.field
    one = ctx.identity()
    r = rep(ctx, 1, 0)
    assert aut_eq(eval_coset_map(parse("aa"), [r], [one]), AutElem(diag2(F, F(4)), 0))
    triv = aut_identity(one)
    s, t = random_element(ctx, random.Random(1)), random_element(ctx, random.Random(2))
    from mbword.algebra import pinv, pmul
    got = eval_coset_map(parse("abAB"), [triv, triv], [s, t])
    assert got.part == pmul(pmul(s, t), pmul(pinv(s), pinv(t)))
    assert aut_is_one(eval_coset_map(parse("1"), [triv], [one]))
    with pytest.raises(ValueError):
        eval_coset_map(parse("ab"), [triv], [one])


def aut_is_one(a):
    return a.frob == 0 and a.part.is_identity()


@pytest.mark.parametrize("p,L", [(5, 1), (3, 2), (2, 3), (7, 1)])
def test_residual_in_s_random(p, L):
    ctx = psl2_ctx(p, L)
    rng = random.Random(p * 10 + L)
    w = parse("a^2bA^-1b^3")
    for _ in range(100):
        asg = [rng.choice(ctx.reps) for _ in range(2)]
        pt = [random_element(ctx, rng) for _ in range(2)]
        assert residual_in_s(w, asg, pt, ctx)
    # w = x: the residual is s
    r = rng.choice(ctx.reps)
    s = random_element(ctx, rng)
    assert residual_in_s(parse("a"), [r], [s], ctx)


def test_residual_in_s_suzuki():
    ctx = sz_ctx(2)
    rng = random.Random(0)
    for _ in range(30):
        asg = [rng.choice(ctx.reps)]
        assert residual_in_s(parse("a^3"), asg, [random_element(ctx, rng)], ctx)


def test_find_witness_examples():
    ctx = psl2_ctx(5, 1)
    r = rep(ctx, 1, 0)
    rng = random.Random(0)
    assert find_witness(parse("a"), [r], 8, rng, ctx) is not None
    assert find_witness(parse("a^12"), [r], 64, rng, ctx) is None
    pair = find_witness(parse("aa"), [r], 64, rng, ctx)
    assert isinstance(pair, WitnessPair)
    assert verify_witness(parse("aa"), [r], pair)


def test_exhaustive_examples():
    ctx = psl2_ctx(5, 1)
    r = rep(ctx, 1, 0)
    cert = exhaustive_constancy(parse("a^12"), [r], ctx)
    assert isinstance(cert, ConstancyCertificate) and cert.domain_size == 60
    assert aut_eq(cert.value, aut_pow(r, 12))
    assert verify_certificate(parse("a^12"), cert, ctx)

    ctx8 = psl2_ctx(2, 3)
    sigma = rep(ctx8, 0, 1)
    assert isinstance(exhaustive_constancy(parse("a^18"), [sigma], ctx8), ConstancyCertificate)

    ctx2 = psl2_ctx(2, 1)
    cert = exhaustive_constancy(parse("a^6"), [ctx2.reps[0]], ctx2)
    assert isinstance(cert, ConstancyCertificate) and aut_is_one(cert.value)
    assert isinstance(exhaustive_constancy(parse("a^3"), [ctx2.reps[0]], ctx2), WitnessPair)


def test_threshold():
    ctx = psl2_ctx(5, 1)
    with pytest.raises(ThresholdError):
        exhaustive_constancy(parse("abab"), [ctx.reps[0]] * 2, ctx, threshold=100)
    with pytest.raises(ValueError):
        EngineOpts(budget=0)


def test_check_word_examples():
    assert check_word_on_group(parse("abAB"), psl2_ctx(7, 1)).status == NONCONSTANT
    v = check_word_on_group(parse("a^8"), psl2_ctx(3, 2))
    assert v.status == CONSTANT
    lab = coset_label(v.certificate.assignment[0])
    assert (lab["eps"], lab["K"]) == (1, 1)
    for ctx in (psl2_ctx(2, 2), psl2_ctx(3, 2), sz_ctx(2)):
        assert check_word_on_group(parse("a^3ba^2"), ctx).status == NONCONSTANT


def test_undecided_when_exhaustion_blocked():
    ctx = psl2_ctx(5, 1)
    v = check_word_on_group(parse("a^12"), ctx, EngineOpts(budget=4, threshold=10))
    assert v.status == UNDECIDED
    assert any(r.kind == "exhausted" for r in v.results)


def test_seeded_determinism():
    ctx = psl2_ctx(3, 5)
    w = parse("a^3b^3")
    runs = [check_word_on_group(w, ctx, EngineOpts(seed=7), keep_witnesses=True).to_json(full=True)
            for _ in range(2)]
    assert runs[0] == runs[1]
    assert task_rng(1, "x").random() == task_rng(1, "x").random() != task_rng(2, "x").random()


def test_witnesses_reverify():
    ctx = psl2_ctx(3, 3)
    w = parse("a^4bAb")
    v = check_word_on_group(w, ctx, keep_witnesses=True)
    assert v.status == NONCONSTANT and v.results
    for r in v.results:
        assert verify_witness(w, r.assignment, r.witness)
        for pt in r.witness.points:
            assert all(in_psl2(s) for s in pt)
