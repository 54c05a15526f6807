"""Coset word maps on PSL2 and Suzuki groups and the constancy kernel.

A coset word map of w with respect to representatives alpha_1..alpha_d sends
a point (s_1, ..., s_d) of S^d to w(s_1 alpha_1, ..., s_d alpha_d), evaluated
in the semidirect product.  ``find_witness`` searches for two points with
different values; ``exhaustive_constancy`` settles small cases completely.
"""

from __future__ import annotations

import hashlib
import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import (
    SZ,
    AutElem,
    GroupCtx,
    Mat4,
    ProjMat2,
    aut_eq,
    aut_inv,
    aut_mul,
    aut_pow,
    coset_label,
    diag2,
    group_elements,
    in_psl2,
    identity2,
    pmul,
    m4mul,
    random_element,
    sz_contains,
    sz_torus,
    sz_unipotent,
    sz_weyl,
)
from .ff import FieldElem
from .words import Word, format_word

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 256
DEFAULT_THRESHOLD = 10**7


class ThresholdError(RuntimeError):
    pass


@dataclass(frozen=True)
class EngineOpts:
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    threshold: int = DEFAULT_THRESHOLD

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be >= 1")
        if self.threshold < 1:
            raise ValueError("threshold must be >= 1")


def task_rng(seed: int, *key) -> random.Random:
    """Per-task RNG; stable across processes (no salted ``hash``)."""
    h = hashlib.sha256(repr((seed,) + key).encode()).digest()
    return random.Random(int.from_bytes(h[:16], "big"))


# ---------------------------------------------------------------------------
# evaluation


def _variables(w: Word, assignment: Sequence) -> list[int]:
    vs = w.variables
    if not vs:
        return []  # the empty word: the assignment only names the group
    if len(assignment) != len(vs):
        raise ValueError(f"word has {len(vs)} variables, assignment has {len(assignment)}")
    return vs


def eval_coset_map(w: Word, assignment: Sequence[AutElem], point: Sequence) -> AutElem:
    """w(s_1 alpha_1, ..., s_d alpha_d); the i-th entries of assignment and
    point belong to the i-th smallest variable of w."""
    vs = _variables(w, assignment)
    if vs and len(point) != len(vs):
        raise ValueError("point and assignment lengths differ")
    gens = {}
    for v, rep, s in zip(vs, assignment, point):
        if s.field is not rep.part.field and s.field != rep.part.field:
            from .algebra import ContextMismatchError
            raise ContextMismatchError("point and representative live over different fields")
        part = pmul(s, rep.part) if isinstance(s, ProjMat2) else m4mul(s, rep.part)
        gens[v] = AutElem(part, rep.frob)
    value = None
    cache = {}
    for v, e in w.runs:
        f = cache.get((v, e))
        if f is None:
            f = aut_pow(gens[v], e)
            cache[(v, e)] = f
        value = f if value is None else aut_mul(value, f)
    if value is None:
        first = assignment[0] if assignment else None
        if first is None:
            raise ValueError("empty word with empty assignment has no group")
        from .algebra import aut_identity
        return aut_identity(first.part)
    return value


def identity_point(ctx: GroupCtx, d: int) -> tuple:
    one = ctx.identity()
    return (one,) * d


def rep_value(w: Word, assignment: Sequence[AutElem], ctx: GroupCtx) -> AutElem:
    return eval_coset_map(w, assignment, identity_point(ctx, len(assignment)))


def residual_in_s(w: Word, assignment: Sequence[AutElem], point: Sequence, ctx: GroupCtx) -> bool:
    """Is value * (w evaluated on the representatives)^-1 an element of S?"""
    r = aut_mul(eval_coset_map(w, assignment, point), aut_inv(rep_value(w, assignment, ctx)))
    if r.frob != 0:
        return False
    if ctx.family == SZ:
        return sz_contains(ctx, r.part)
    return in_psl2(r.part)


# ---------------------------------------------------------------------------
# witnesses and certificates


@dataclass
class WitnessPair:
    points: tuple
    values: tuple

    def to_json(self) -> dict:
        return {"points": [[s.to_json() for s in pt] for pt in self.points],
                "values": [v.to_json() for v in self.values]}


@dataclass
class ConstancyCertificate:
    assignment: tuple
    value: AutElem
    domain_size: int
    exhaustive: bool = True

    def to_json(self) -> dict:
        return {"assignment": [coset_label(a) for a in self.assignment],
                "value": self.value.to_json(), "domain_size": self.domain_size,
                "exhaustive": self.exhaustive}


def part_from_json(ctx: GroupCtx, data) -> ProjMat2 | Mat4:
    """Inverse of ``to_json`` on matrices: row-major coefficient vectors."""
    F = ctx.field
    raw = tuple(F.from_coeffs(c) for c in data)
    if ctx.family == SZ:
        return Mat4(F, raw)
    return ProjMat2(F, raw)


def aut_from_json(ctx: GroupCtx, data: dict) -> AutElem:
    return AutElem(part_from_json(ctx, data["part"]), data["frob"])


def verify_witness(w: Word, assignment: Sequence[AutElem], pair: WitnessPair) -> bool:
    v1 = eval_coset_map(w, assignment, pair.points[0])
    v2 = eval_coset_map(w, assignment, pair.points[1])
    return aut_eq(v1, pair.values[0]) and aut_eq(v2, pair.values[1]) and not aut_eq(v1, v2)


def probe_parts(ctx: GroupCtx, count: int = 3) -> list:
    """Deterministic probe elements of S: diagonal/torus elements first."""
    F = ctx.field
    gs = F.probe_elements(count)
    E = lambda x: FieldElem(F, x)  # noqa: E731
    out = []
    if ctx.family == SZ:
        for g in gs:
            out.append(sz_torus(ctx, E(g)))
        one, zero = E(F.one), E(F.zero)
        out += [sz_unipotent(ctx, one, zero), sz_unipotent(ctx, zero, one), sz_weyl(ctx)]
        if gs:
            out.append(sz_unipotent(ctx, E(gs[0]), zero))
        return out
    for g in gs:
        c = g if F.p == 2 else F.mul(g, g)
        if c != F.one:
            out.append(diag2(F, E(c)))
    o, z = F.one, F.zero
    out.append(ProjMat2(F, (o, o, z, o)))
    out.append(ProjMat2(F, (o, z, o, o)))
    out.append(ProjMat2(F, (z, o, F.neg(o), z)))
    if gs:
        out.append(ProjMat2(F, (o, gs[0], z, o)))
    return out


def find_witness(w: Word, assignment: Sequence[AutElem], budget: int, rng: random.Random,
                 ctx: GroupCtx) -> WitnessPair | None:
    """Base point, then single-variable probes, then ``budget`` random points."""
    d = len(assignment)
    base = identity_point(ctx, d)
    v0 = eval_coset_map(w, assignment, base)
    one = ctx.identity()
    for g in probe_parts(ctx):
        for i in range(d):
            pt = tuple(g if j == i else one for j in range(d))
            v = eval_coset_map(w, assignment, pt)
            if not aut_eq(v, v0):
                return WitnessPair((base, pt), (v0, v))
    for _ in range(budget):
        pt = tuple(random_element(ctx, rng) for _ in range(d))
        v = eval_coset_map(w, assignment, pt)
        if not aut_eq(v, v0):
            return WitnessPair((base, pt), (v0, v))
    return None


def exhaustive_constancy(w: Word, assignment: Sequence[AutElem], ctx: GroupCtx,
                         threshold: int = DEFAULT_THRESHOLD):
    """Full enumeration: a ConstancyCertificate or a WitnessPair."""
    d = len(assignment)
    if ctx.order ** d > threshold:
        raise ThresholdError(f"{ctx.order}^{d} evaluations exceed threshold {threshold}")
    els = group_elements(ctx, limit=threshold)
    base = identity_point(ctx, d)
    v0 = eval_coset_map(w, assignment, base)
    for pt in itertools.product(els, repeat=d):
        v = eval_coset_map(w, assignment, pt)
        if not aut_eq(v, v0):
            return WitnessPair((base, pt), (v0, v))
    return ConstancyCertificate(tuple(assignment), v0, len(els) ** d)


def verify_certificate(w: Word, cert: ConstancyCertificate, ctx: GroupCtx,
                       threshold: int = DEFAULT_THRESHOLD) -> bool:
    again = exhaustive_constancy(w, cert.assignment, ctx, threshold)
    return isinstance(again, ConstancyCertificate) and aut_eq(again.value, cert.value)


# ---------------------------------------------------------------------------
# whole-group check


NONCONSTANT = "nonconstant-all"
CONSTANT = "constant-found"
UNDECIDED = "undecided"


@dataclass
class AssignmentResult:
    assignment: tuple
    kind: str  # witness | certificate | exhausted
    witness: WitnessPair | None = None
    certificate: ConstancyCertificate | None = None

    def to_json(self, full: bool = True) -> dict:
        out = {"assignment": [coset_label(a) for a in self.assignment], "kind": self.kind}
        if full and self.witness is not None:
            out.update(self.witness.to_json())
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


@dataclass
class GroupVerdict:
    ctx: GroupCtx
    status: str
    results: list = field(default_factory=list)
    checked: int = 0

    @property
    def certificate(self) -> ConstancyCertificate | None:
        for r in self.results:
            if r.certificate is not None:
                return r.certificate
        return None

    def to_json(self, full: bool = False) -> dict:
        out = {"ctx": self.ctx.describe(), "verdict": self.status, "assignments": self.checked}
        keep = [r for r in self.results if full or r.kind != "witness"]
        if keep:
            out["results"] = [r.to_json(full) for r in keep]
        return out


def all_assignments(ctx: GroupCtx, d: int, reps: Sequence[AutElem] | None = None):
    return itertools.product(reps if reps is not None else ctx.reps, repeat=d)


def check_word_on_group(w: Word, ctx: GroupCtx, opts: EngineOpts = EngineOpts(),
                        assignments=None, keep_witnesses: bool = False) -> GroupVerdict:
    """Run every assignment; stop at the first exhaustive constancy certificate."""
    d = w.d
    if assignments is None:
        assignments = all_assignments(ctx, d)
    text = format_word(w)
    results = []
    status = NONCONSTANT
    n = 0
    for idx, assignment in enumerate(assignments):
        n += 1
        rng = task_rng(opts.seed, ctx.key, text, idx)
        pair = find_witness(w, assignment, opts.budget, rng, ctx)
        if pair is not None:
            if keep_witnesses:
                results.append(AssignmentResult(tuple(assignment), "witness", witness=pair))
            continue
        try:
            out = exhaustive_constancy(w, assignment, ctx, opts.threshold)
        except ThresholdError:
            log.info("%s on %s: assignment %d exhausted, domain too large", text, ctx.name, idx)
            results.append(AssignmentResult(tuple(assignment), "exhausted"))
            status = UNDECIDED
            continue
        if isinstance(out, WitnessPair):
            if keep_witnesses:
                results.append(AssignmentResult(tuple(assignment), "witness", witness=out))
            continue
        results.append(AssignmentResult(tuple(assignment), "certificate", certificate=out))
        return GroupVerdict(ctx, CONSTANT, results, n)
    return GroupVerdict(ctx, status, results, n)
