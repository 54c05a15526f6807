"""Brute-force checks over small groups.

Everything here enumerates: fibers of word maps, coset fibers, the
quotient/coset bound, the coordinate equations on S^n, exponents and the
fibers coming from constant cosets.  Groups are realised with the same
AutElem arithmetic as the engine, so the checks exercise that core too.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import (
    PSL2,
    AlgebraError,
    AutElem,
    GroupCtx,
    aut_identity,
    aut_inv,
    aut_mul,
    bfs_closure,
    diag2,
    element_order,
    identity2,
    in_psl2,
    psl2_ctx,
    psl2_elements,
    psl2_generators,
    sz_ctx,
    sz_generators,
)
from .ff import FieldElem
from .words import Word, format_word, parse

GROUP_LIMIT = 10**5
EVAL_THRESHOLD = 10**7


class ThresholdError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# small groups


class SmallGroup:
    """An enumerated group of AutElem; elements are addressed by index."""

    def __init__(self, name: str, elements: list, expected: int | None = None):
        self.name = name
        self.elements = elements
        self.index = {g: i for i, g in enumerate(elements)}
        if len(self.index) != len(elements):
            raise AlgebraError(f"{name}: duplicate elements")
        if expected is not None and len(elements) != expected:
            raise AlgebraError(f"{name}: {len(elements)} elements, expected {expected}")
        self.one = self.index[aut_identity(elements[0].part)]
        self._mul: dict = {}
        self._inv: dict = {}

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"SmallGroup({self.name}, order={len(self)})"

    def mul(self, i: int, j: int) -> int:
        key = (i, j)
        r = self._mul.get(key)
        if r is None:
            r = self.index[aut_mul(self.elements[i], self.elements[j])]
            self._mul[key] = r
        return r

    def inv(self, i: int) -> int:
        r = self._inv.get(i)
        if r is None:
            r = self.index[aut_inv(self.elements[i])]
            self._inv[i] = r
        return r

    def power(self, i: int, e: int) -> int:
        if e < 0:
            i, e = self.inv(i), -e
        r, b = self.one, i
        while e:
            if e & 1:
                r = self.mul(r, b)
            e >>= 1
            if e:
                b = self.mul(b, b)
        return r

    def order_of(self, i: int) -> int:
        return element_order(self.elements[i], cap=len(self))

    def subgroup(self, name: str, gens: Sequence[int]) -> list[int]:
        """Indices of the subgroup generated by ``gens`` (closure inside self)."""
        seen = {self.one}
        frontier = [self.one]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def is_normal(self, sub: Sequence[int]) -> bool:
        s = set(sub)
        gens = range(len(self)) if len(self) <= 200 else self._generators
        for g in gens:
            gi = self.inv(g)
            for n in sub:
                if self.mul(self.mul(g, n), gi) not in s:
                    return False
        return True

    _generators: list = []

    def cosets(self, sub: Sequence[int]) -> tuple[list[int], list[int]]:
        """Left cosets gN: (representatives, coset id of every element)."""
        cid = [-1] * len(self)
        reps = []
        for g in range(len(self)):
            if cid[g] >= 0:
                continue
            c = len(reps)
            reps.append(g)
            for n in sub:
                cid[self.mul(g, n)] = c
        return reps, cid


def enumerate_group(generators: Sequence[AutElem], name: str = "G",
                    expected: int | None = None, limit: int = GROUP_LIMIT) -> SmallGroup:
    try:
        els = bfs_closure(list(generators), limit=limit)
    except AlgebraError as exc:
        raise ThresholdError(str(exc)) from exc
    G = SmallGroup(name, els, expected)
    G._generators = [G.index[g] for g in generators]
    return G


def _wrap(parts, frob=0):
    return [AutElem(x, frob) for x in parts]


def psl2_group(p: int, L: int = 1) -> SmallGroup:
    ctx = psl2_ctx(p, L)
    return enumerate_group(_wrap(psl2_generators(ctx)), f"PSL2({p}^{L})", ctx.order)


def pgl2_group(p: int, L: int = 1) -> SmallGroup:
    ctx = psl2_ctx(p, L)
    F = ctx.field
    gens = _wrap(psl2_generators(ctx))
    if p != 2:
        gens.append(AutElem(diag2(F, FieldElem(F, F.nonsquare)), 0))
    order = ctx.order * (1 if p == 2 else 2)
    return enumerate_group(gens, f"PGL2({p}^{L})", order)


def pgammal2_group(p: int, L: int) -> SmallGroup:
    G = pgl2_group(p, L)
    ctx = psl2_ctx(p, L)
    gens = [G.elements[i] for i in G._generators] + [AutElem(identity2(ctx.field), 1 % L)]
    return enumerate_group(gens, f"PGammaL2({p}^{L})", len(G) * L)


def sz_group(L: int) -> SmallGroup:
    ctx = sz_ctx(L)
    return enumerate_group(_wrap(sz_generators(ctx)), ctx.name, ctx.order)


def psl2_subgroup_of(G: SmallGroup) -> list[int]:
    return [i for i, g in enumerate(G.elements) if g.frob == 0 and in_psl2(g.part)]


# ---------------------------------------------------------------------------
# fibers


@dataclass
class FiberStats:
    counts: dict
    domain: int

    @property
    def Pi(self) -> int:
        return max(self.counts.values())

    @property
    def pi(self) -> Fraction:
        return Fraction(self.Pi, self.domain)

    def to_json(self) -> dict:
        return {"domain": self.domain, "Pi": self.Pi, "pi": str(self.pi),
                "values": len(self.counts)}


def eval_word(G: SmallGroup, w: Word, point: Sequence[int]) -> int:
    pos = {v: i for i, v in enumerate(w.variables)}
    r = G.one
    for v, e in w.runs:
        r = G.mul(r, G.power(point[pos[v]], e))
    return r


def _check_domain(n: int, threshold: int):
    if n > threshold:
        raise ThresholdError(f"{n} evaluations exceed threshold {threshold}")


def word_fibers(w: Word, G: SmallGroup, threshold: int = EVAL_THRESHOLD) -> FiberStats:
    d = w.d
    _check_domain(len(G) ** d, threshold)
    counts: dict = {}
    for pt in itertools.product(range(len(G)), repeat=d):
        v = eval_word(G, w, pt)
        counts[v] = counts.get(v, 0) + 1
    return FiberStats(counts, len(G) ** d)


def coset_fibers(w: Word, G: SmallGroup, N: Sequence[int], reps: Sequence[int]) -> FiberStats:
    """Fibers of (n_1, ..., n_d) -> w(n_1 g_1, ..., n_d g_d) over N^d."""
    counts: dict = {}
    for ns in itertools.product(N, repeat=len(reps)):
        pt = [G.mul(n, g) for n, g in zip(ns, reps)]
        v = eval_word(G, w, pt)
        counts[v] = counts.get(v, 0) + 1
    return FiberStats(counts, len(N) ** len(reps))


def coset_gamma(w: Word, G: SmallGroup, N: Sequence[int],
                threshold: int = EVAL_THRESHOLD) -> tuple[int, Fraction]:
    """(Gamma, gamma): the largest coset fiber over all representative tuples."""
    d = w.d
    _check_domain(len(G) ** d, threshold)
    reps, _ = G.cosets(N)
    best = 0
    for gs in itertools.product(reps, repeat=d):
        best = max(best, coset_fibers(w, G, N, gs).Pi)
    return best, Fraction(best, len(N) ** d)


def quotient_fibers(w: Word, G: SmallGroup, N: Sequence[int]) -> FiberStats:
    """Fibers of w on G/N, computed on coset representatives."""
    reps, cid = G.cosets(N)
    counts: dict = {}
    for gs in itertools.product(reps, repeat=w.d):
        c = cid[eval_word(G, w, gs)]
        counts[c] = counts.get(c, 0) + 1
    return FiberStats(counts, len(reps) ** w.d)


def verify_cosetwise_bound(w: Word, G: SmallGroup, N: Sequence[int],
                           threshold: int = EVAL_THRESHOLD) -> dict:
    if not G.is_normal(N):
        raise AlgebraError("N is not normal in G")
    pg = word_fibers(w, G, threshold).Pi
    pq = quotient_fibers(w, G, N).Pi
    gam, _ = coset_gamma(w, G, N, threshold)
    return {"word": format_word(w), "G": G.name, "N_order": len(N), "Pi_G": pg,
            "Pi_G_mod_N": pq, "Gamma": gam, "holds": pg <= pq * gam}


def representative_independence(w: Word, G: SmallGroup, N: Sequence[int]) -> bool:
    """Coset fiber sizes do not depend on the chosen representatives
    (checked on all representative tuples g and g*o with o in N)."""
    reps, _ = G.cosets(N)
    for gs in itertools.product(reps, repeat=w.d):
        base = sorted(coset_fibers(w, G, N, gs).counts.values())
        for os_ in itertools.product(N, repeat=w.d):
            moved = [G.mul(g, o) for g, o in zip(gs, os_)]
            if sorted(coset_fibers(w, G, N, moved).counts.values()) != base:
                return False
    return True


# ---------------------------------------------------------------------------
# the coordinate equation system on S^n


def perm_mul(s: tuple, t: tuple) -> tuple:
    """(s t)(i) = s(t(i))."""
    return tuple(s[t[i]] for i in range(len(t)))


def perm_inv(s: tuple) -> tuple:
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def perm_pow(s: tuple, e: int) -> tuple:
    if e < 0:
        s, e = perm_inv(s), -e
    r = tuple(range(len(s)))
    for _ in range(e):
        r = perm_mul(r, s)
    return r


@dataclass
class WreathElem:
    """(a_1, ..., a_n) o sigma in Aut(S) wr Sym_n, with indices into A = Aut(S).

    Product: (a, s)(b, t) = (c, s t) with c_i = a_i b_{s^-1(i)}."""
    comps: tuple
    perm: tuple


def wreath_mul(A: SmallGroup, x: WreathElem, y: WreathElem) -> WreathElem:
    si = perm_inv(x.perm)
    c = tuple(A.mul(x.comps[i], y.comps[si[i]]) for i in range(len(x.comps)))
    return WreathElem(c, perm_mul(x.perm, y.perm))


def wreath_inv(A: SmallGroup, x: WreathElem) -> WreathElem:
    # (a, s)^-1 = (b, s^-1) with b_i = a_{s(i)}^-1
    b = tuple(A.inv(x.comps[x.perm[i]]) for i in range(len(x.comps)))
    return WreathElem(b, perm_inv(x.perm))


def wreath_eval(A: SmallGroup, w: Word, gens: Sequence[WreathElem]) -> WreathElem:
    pos = {v: i for i, v in enumerate(w.variables)}
    n = len(gens[0].comps)
    r = WreathElem((A.one,) * n, tuple(range(n)))
    for v, e in w.runs:
        g = gens[pos[v]]
        if e < 0:
            g, e = wreath_inv(A, g), -e
        for _ in range(e):
            r = wreath_mul(A, r, g)
    return r


@dataclass
class EquationSystem:
    n: int
    sigmas: tuple  # sigma_k per variable
    alphas: tuple  # alpha_{k, j}: alphas[k][j], indices into A
    psi: tuple
    betas: tuple
    chis: list = field(default_factory=list)


def chi_prefixes(w: Word, sigmas: Sequence[tuple]) -> list[tuple]:
    """chi_j: product of sigma^eps over letters before j, and including j when eps_j = -1."""
    pos = {v: i for i, v in enumerate(w.variables)}
    n = len(sigmas[0])
    pref = tuple(range(n))
    out = []
    for v, s in w.letters:
        step = perm_pow(sigmas[pos[v]], s)
        if s == 1:
            out.append(pref)
            pref = perm_mul(pref, step)
        else:
            pref = perm_mul(pref, step)
            out.append(pref)
    return out


def equation_system_check(w: Word, A: SmallGroup, S: Sequence[int], n: int,
                          sigmas: Sequence[tuple], alphas: Sequence[Sequence[int]],
                          psi: tuple, betas: Sequence[int],
                          threshold: int = EVAL_THRESHOLD) -> dict:
    """Compare the fiber of (beta, psi) under the coset word map on S^n with
    the solution set of the coordinate equations.

    S is a list of indices of A (the simple group inside Aut(S))."""
    d = w.d
    _check_domain(len(S) ** (n * d), threshold)
    pos = {v: i for i, v in enumerate(w.variables)}
    letters = w.letters
    chis = chi_prefixes(w, sigmas)
    chi_inv = [perm_inv(c) for c in chis]
    target = WreathElem(tuple(betas), tuple(psi))
    alpha_w = [WreathElem(tuple(alphas[k]), tuple(sigmas[k])) for k in range(d)]
    necessary = perm_eval(w, sigmas) == tuple(psi)
    direct, system = set(), set()
    for flat in itertools.product(S, repeat=n * d):
        s = [flat[k * n:(k + 1) * n] for k in range(d)]
        gens = [wreath_mul(A, WreathElem(tuple(s[k]), tuple(range(n))), alpha_w[k])
                for k in range(d)]
        val = wreath_eval(A, w, gens)
        if val.comps == target.comps and val.perm == target.perm:
            direct.add(flat)
        if not necessary:
            continue
        ok = True
        for i in range(n):
            r = A.one
            for j, (v, eps) in enumerate(letters):
                k = pos[v]
                c = chi_inv[j][i]
                t = A.mul(s[k][c], alphas[k][c])
                r = A.mul(r, t if eps == 1 else A.inv(t))
            if r != betas[i]:
                ok = False
                break
        if ok:
            system.add(flat)
    return {"word": format_word(w), "n": n, "sigmas": [list(x) for x in sigmas],
            "psi": list(psi), "psi_matches": necessary, "chis": [list(c) for c in chis],
            "points": len(S) ** (n * d), "fiber": len(direct), "solutions": len(system),
            "holds": direct == system and (necessary or not direct)}


def perm_eval(w: Word, sigmas: Sequence[tuple]) -> tuple:
    pos = {v: i for i, v in enumerate(w.variables)}
    n = len(sigmas[0])
    r = tuple(range(n))
    for v, e in w.runs:
        r = perm_mul(r, perm_pow(sigmas[pos[v]], e))
    return r


# ---------------------------------------------------------------------------
# exponents


def group_exponent(G: SmallGroup, idx: Sequence[int] | None = None) -> int:
    idx = range(len(G)) if idx is None else idx
    out = 1
    for i in idx:
        out = math.lcm(out, G.order_of(i))
    return out


def coset_order_lcm(G: SmallGroup, coset: Sequence[int]) -> int:
    return group_exponent(G, coset)


def exponent_formula(family: str, p: int, L: int, coset: str = "S") -> int:
    from .deciders import exp_psl2_even, exp_psl2_odd, exp_sz, lcm_pgl2_odd_coset
    if family != PSL2:
        return exp_sz(L)
    if p == 2:
        return exp_psl2_even(L)
    return exp_psl2_odd(p, L) if coset == "S" else lcm_pgl2_odd_coset(p, L)


# ---------------------------------------------------------------------------
# fibers from constant cosets


def fiber_lower_bound_witness(w: Word, ctx: GroupCtx, assignment: Sequence[AutElem]) -> dict:
    """Word map of w on <S, representatives>; the fiber of the constant value
    has at least |S|^d points."""
    gens = _wrap(psl2_generators(ctx)) if ctx.family == PSL2 else _wrap(sz_generators(ctx))
    G = enumerate_group(gens + list(assignment), f"<{ctx.name}, reps>")
    S = [G.index[AutElem(x, 0)] for x in psl2_elements(ctx)] if ctx.family == PSL2 \
        else G.subgroup("S", [G.index[g] for g in gens])
    reps = [G.index[a] for a in assignment]
    cf = coset_fibers(w, G, S, reps)
    if len(cf.counts) != 1:
        raise AlgebraError("coset word map is not constant")
    (value, size), = cf.counts.items()
    full = word_fibers(w, G).counts.get(value, 0)
    return {"word": format_word(w), "S": ctx.name, "G_order": len(G), "S_order": len(S),
            "coset_fiber": size, "fiber": full, "holds": full >= len(S) ** w.d}


# ---------------------------------------------------------------------------
# named suites


@dataclass
class CheckResult:
    name: str
    inputs: dict
    computed: dict
    expected: dict
    passed: bool

    def to_json(self) -> dict:
        return {"check": self.name, "inputs": self.inputs, "computed": self.computed,
                "expected": self.expected, "pass": self.passed}


def _rep(ctx: GroupCtx, eps: int, K: int) -> AutElem:
    from .algebra import coset_label
    for r in ctx.reps:
        if coset_label(r) == {"eps": eps, "K": K}:
            return r
    raise KeyError((eps, K))


def check_exponents() -> list[CheckResult]:
    out = []
    for q, (p, L) in [(4, (2, 2)), (5, (5, 1)), (7, (7, 1)), (8, (2, 3)), (9, (3, 2))]:
        G = psl2_group(p, L)
        got = group_exponent(G)
        want = exponent_formula(PSL2, p, L)
        out.append(CheckResult("exp-psl2", {"q": q}, {"exponent": got, "order": len(G)},
                               {"exponent": want}, got == want))
    for q, (p, L) in [(5, (5, 1)), (7, (7, 1)), (9, (3, 2))]:
        G = pgl2_group(p, L)
        odd = [i for i in range(len(G)) if i not in set(psl2_subgroup_of(G))]
        got = coset_order_lcm(G, odd)
        want = exponent_formula(PSL2, p, L, "odd")
        out.append(CheckResult("lcm-pgl2-minus-psl2", {"q": q}, {"lcm": got, "coset_size": len(odd)},
                               {"lcm": want}, got == want))
    sz2 = sz_group(1)
    out.append(CheckResult("order-sz2", {"q": 2}, {"order": len(sz2)}, {"order": 20}, len(sz2) == 20))
    sz8 = sz_group(2)
    out.append(CheckResult("order-sz8", {"q": 8}, {"order": len(sz8)}, {"order": 29120},
                           len(sz8) == 29120))
    got = group_exponent(sz8)
    want = exponent_formula("Sz", 2, 2)
    out.append(CheckResult("exp-sz8", {"q": 8}, {"exponent": got}, {"exponent": want},
                           got == want == 1820))
    return out


def check_coset_bound() -> list[CheckResult]:
    out = []
    sym3 = psl2_group(2, 1)
    alt3 = sym3.subgroup("Alt3", [i for i in range(len(sym3)) if sym3.order_of(i) == 3])
    pgl5 = pgl2_group(5, 1)
    psl5 = psl2_subgroup_of(pgl5)
    sym4 = pgl2_group(3, 1)
    alt4 = psl2_subgroup_of(sym4)
    cases = [
        (parse("aa"), sym3, alt3, {"Pi_G": 4, "Pi_G_mod_N": 2, "Gamma": 3}),
        (parse("a^12"), pgl5, psl5, {"Pi_G": 96, "Pi_G_mod_N": 2, "Gamma": 60}),
        (parse("abAB"), sym4, alt4, {}),
        (parse("a^2b^2"), sym3, alt3, {}),
        (parse("aa"), sym3, [sym3.one], {}),
    ]
    for w, G, N, want in cases:
        data = verify_cosetwise_bound(w, G, N)
        ok = data["holds"] and all(data[k] == v for k, v in want.items())
        if len(N) < len(G) and w.d == 1:
            data["representative_independent"] = representative_independence(w, G, N)
            ok = ok and data["representative_independent"]
        out.append(CheckResult("coset-bound", {"word": format_word(w), "G": G.name, "N_order": len(N)},
                               data, want, ok))
    return out


def check_equations() -> list[CheckResult]:
    A = pgammal2_group(2, 2)  # Aut(PSL2(4))
    S = psl2_subgroup_of(A)
    swap, ident = (1, 0), (0, 1)
    sigma_frob = A.index[AutElem(identity2(psl2_ctx(2, 2).field), 1)]
    s0 = S[7]
    out = []
    configs = [
        ("aa", [swap], [[A.one, A.one]], ident),
        ("aa", [swap], [[A.one, A.one]], swap),
        ("aa", [swap], [[sigma_frob, s0]], ident),
        ("AA", [swap], [[sigma_frob, A.one]], ident),
        ("aaa", [swap], [[s0, sigma_frob]], swap),
        ("aaa", [swap], [[s0, sigma_frob]], ident),
        ("aa", [ident], [[sigma_frob, s0]], ident),
    ]
    for text, sigmas, alphas, psi in configs:
        w = parse(text)
        # beta: the value at one point, so the matched fibers are nonempty
        pt = [WreathElem((S[3], S[11]), ident)]
        gens = [wreath_mul(A, pt[0], WreathElem(tuple(alphas[0]), sigmas[0]))]
        betas = wreath_eval(A, w, gens).comps
        data = equation_system_check(w, A, S, 2, sigmas, alphas, psi, betas)
        if data["psi_matches"]:
            data["nonempty"] = data["fiber"] > 0
        out.append(CheckResult("equations", {"word": text, "n": 2, "psi": list(psi)}, data,
                               {"fiber_equals_solutions": True}, data["holds"]))
    # n = 1: the system is the coset word map itself
    w = parse("aa")
    data = equation_system_check(w, A, S, 1, [(0,)], [[sigma_frob]], (0,), [A.one])
    out.append(CheckResult("equations", {"word": "aa", "n": 1}, data,
                           {"fiber_equals_solutions": True}, data["holds"]))
    return out


CONSTANT_COSETS = [
    # e, p, L, eps, K: x^e is the identity on S * diag(xi^eps, 1) * frob^K
    (8, 3, 2, 1, 1),
    (12, 5, 1, 1, 0),
    (16, 3, 2, 1, 1),
    (18, 2, 3, 0, 1),
    (24, 5, 1, 1, 0),
    (30, 5, 1, 0, 0),
]


def check_constant_cosets() -> list[CheckResult]:
    """Every element of the named coset has order dividing e."""
    from .algebra import pmul
    out = []
    for e, p, L, eps, K in CONSTANT_COSETS:
        ctx = psl2_ctx(p, L)
        rep = _rep(ctx, eps, K)
        orders = set()
        for s in psl2_elements(ctx):
            g = AutElem(pmul(s, rep.part), rep.frob)
            orders.add(element_order(g, cap=10**4))
        lcm = math.lcm(*orders)
        out.append(CheckResult("constant-cosets", {"e": e, "group": ctx.name, "eps": eps, "K": K},
                               {"orders": sorted(orders), "lcm": lcm}, {"divides": e},
                               e % lcm == 0))
    return out


def check_fiber_bounds() -> list[CheckResult]:
    out = []
    for e, p, L, eps, K, want in [(12, 5, 1, 1, 0, 96), (30, 5, 1, 0, 0, 60)]:
        ctx = psl2_ctx(p, L)
        data = fiber_lower_bound_witness(parse(f"a^{e}"), ctx, [_rep(ctx, eps, K)])
        out.append(CheckResult("fiber-bound", {"e": e, "group": ctx.name}, data,
                               {"fiber": want}, data["holds"] and data["fiber"] == want))
    ctx = psl2_ctx(5, 1)
    G = psl2_group(5, 1)
    st = word_fibers(parse("a"), G)
    out.append(CheckResult("fiber-bound", {"word": "a", "group": G.name}, st.to_json(),
                           {"Pi": 1}, st.Pi == 1))
    return out


def check_fibers() -> list[CheckResult]:
    out = []
    sym3 = psl2_group(2, 1)
    st = word_fibers(parse("aa"), sym3)
    out.append(CheckResult("fibers", {"word": "aa", "G": "Sym3"}, st.to_json(), {"Pi": 4},
                           st.Pi == 4 and sum(st.counts.values()) == 6))
    pgl5 = pgl2_group(5, 1)
    st = word_fibers(parse("a^12"), pgl5)
    out.append(CheckResult("fibers", {"word": "a^12", "G": "PGL2(5)"}, st.to_json(), {"Pi": 96},
                           st.Pi == 96 and sum(st.counts.values()) == 120))
    for name, G, want in [("PSL2(5)", psl2_group(5, 1), 60), ("Sz(2)", sz_group(1), 20),
                          ("PGL2(9)", pgl2_group(3, 2), 720)]:
        out.append(CheckResult("enumerate", {"group": name}, {"order": len(G)}, {"order": want},
                               len(G) == want))
    return out


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "fibers": check_fibers,
    "exponents": check_exponents,
    "coset-bound": check_coset_bound,
    "equations": check_equations,
    "constant-cosets": check_constant_cosets,
    "fiber-bounds": check_fiber_bounds,
}


def run_suite(name: str) -> tuple[list[CheckResult], float]:
    if name == "all":
        t0 = time.perf_counter()
        res = []
        for fn in SUITES.values():
            res += fn()
        return res, time.perf_counter() - t0
    if name not in SUITES:
        raise KeyError(name)
    t0 = time.perf_counter()
    return SUITES[name](), time.perf_counter() - t0
