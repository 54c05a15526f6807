import random

import pytest

from mbword.algebra import (
    AlgebraError,
    AutElem,
    ContextMismatchError,
    SingularMatrixError,
    aut_eq,
    aut_identity,
    aut_inv,
    aut_is_identity,
    aut_mul,
    aut_pow,
    bfs_closure,
    canon2,
    coset_label,
    diag2,
    element_order,
    group_elements,
    identity2,
    identity4,
    in_psl2,
    m4inv,
    m4mul,
    mat2,
    pinv,
    pmul,
    psl2_ctx,
    random_element,
    sz_contains,
    sz_ctx,
    sz_generators,
    sz_torus,
    sz_unipotent,
    sz_weyl,
)
from mbword.ff import FieldElem, make_field


def test_canon2_projective():
    F = make_field(5)
    assert canon2([[F(2), F(0)], [F(0), F(2)]]) == identity2(F)
    m = mat2(F, 1, 2, 3, 4)
    assert mat2(F, 3, 1, 4, 2) == m  # times 3
    assert hash(mat2(F, 3, 1, 4, 2)) == hash(m)
    with pytest.raises(SingularMatrixError):
        mat2(F, 1, 2, 2, 4)


def test_pinv_and_pmul():
    F = make_field(3, 2)
    rng = random.Random(0)
    ctx = psl2_ctx(3, 2)
    for _ in range(20):
        a = random_element(ctx, rng)
        assert pmul(a, pinv(a)).is_identity()
    with pytest.raises(ContextMismatchError):
        pmul(identity2(F), identity2(make_field(5)))


def test_in_psl2():
    F = make_field(5)
    assert in_psl2(identity2(F))
    assert not in_psl2(diag2(F, F(2)))
    assert in_psl2(pmul(diag2(F, F(2)), mat2(F, 0, 1, 2, 0)))  # two non-members


@pytest.mark.parametrize("p,L,n", [(5, 1, 2), (2, 2, 2), (3, 2, 4), (2, 3, 3), (7, 1, 2)])
def test_psl2_coset_counts(p, L, n):
    ctx = psl2_ctx(p, L)
    assert len(ctx.reps) == n
    labels = {(coset_label(r)["eps"], coset_label(r)["K"]) for r in ctx.reps}
    assert len(labels) == n


@pytest.mark.parametrize("L,n", [(1, 1), (2, 3), (7, 13)])
def test_sz_coset_counts(L, n):
    assert len(sz_ctx(L).reps) == n


def test_frobenius_conjugation():
    ctx = psl2_ctx(3, 2)
    F = ctx.field
    phi = AutElem(identity2(F), 1)
    m = AutElem(mat2(F, 1, F([0, 1]), 0, 1), 0)
    got = aut_mul(aut_mul(phi, m), aut_inv(phi))
    assert aut_eq(got, AutElem(m.part.frob(1), 0))


def test_aut_pow():
    F = make_field(5)
    g = AutElem(diag2(F, F(2)), 0)
    assert aut_is_identity(aut_pow(g, 4))
    assert not aut_is_identity(aut_pow(g, 2))
    assert aut_eq(aut_pow(g, -1), aut_inv(g))
    assert aut_is_identity(aut_pow(g, 10**30))  # 4 | 10^30
    assert element_order(g) == 4
    assert element_order(aut_identity(F)) == 1


def test_psl2_orders_divide_exponent():
    ctx = psl2_ctx(2, 2)
    for g in group_elements(ctx):
        assert 30 % element_order(g) == 0


@pytest.mark.parametrize("p,L", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (7, 1), (2, 3)])
def test_psl2_elements_count(p, L):
    ctx = psl2_ctx(p, L)
    els = group_elements(ctx)
    assert len(els) == ctx.order == len(set(els))


def test_random_element_deterministic_and_member():
    ctx = psl2_ctx(3, 11)
    a = [random_element(ctx, random.Random(4)) for _ in range(3)]
    b = [random_element(ctx, random.Random(4)) for _ in range(3)]
    assert a == b
    assert all(in_psl2(x) for x in a)


def test_sz_torus():
    ctx = sz_ctx(2)
    F = ctx.field
    x = F([0, 1])
    assert sz_torus(ctx, F(1)) == identity4(F)
    assert m4mul(sz_torus(ctx, x), sz_torus(ctx, x * x)) == sz_torus(ctx, x**3)
    t = sz_torus(ctx, x).raw
    assert [t[0], t[5], t[10], t[15]] == [x.raw, (x**3).raw, (x**-3).raw, (x**-1).raw]
    with pytest.raises(AlgebraError):
        sz_torus(ctx, F(0))


def test_sz_unipotent_and_weyl():
    ctx = sz_ctx(2)
    F = ctx.field
    assert sz_unipotent(ctx, F(0), F(0)) == identity4(F)
    for a in range(8):
        for b in range(8):
            u = sz_unipotent(ctx, F([a & 1, a >> 1 & 1, a >> 2]), F([b & 1, b >> 1 & 1, b >> 2]))
            assert 4 % element_order(u) == 0
            assert m4mul(u, m4inv(u)) == identity4(F)
    w = sz_weyl(ctx)
    assert m4mul(w, w) == identity4(F)


def test_sz_orders():
    assert len(bfs_closure(sz_generators(sz_ctx(1)))) == 20
    ctx = sz_ctx(2)
    rng = random.Random(2)
    for _ in range(40):
        g = random_element(ctx, rng)
        assert element_order(g) in {1, 2, 4, 5, 7, 13}
        assert sz_contains(ctx, g)


def test_sz_contains_rejects():
    ctx = sz_ctx(2)
    F = ctx.field
    # a diagonal matrix that is not a torus element
    bad = identity4(F).raw[:5] + (F([0, 1]).raw,) + identity4(F).raw[6:]
    from mbword.algebra import Mat4
    assert not sz_contains(ctx, Mat4(F, bad))


def test_mixed_families():
    F = make_field(2, 3)
    with pytest.raises(ContextMismatchError):
        aut_mul(AutElem(identity2(F), 0), AutElem(identity4(F), 0))
