"""PGL2(q), PSL2(q), Suzuki groups and their extensions by field automorphisms.

Group parts are immutable matrices over a ``Field``:

* ``ProjMat2`` keeps a raw 2x2 representative.  The canonical form (first
  nonzero entry in row-major order scaled to 1) is computed lazily; equality
  is decided by cross-multiplication so that products never pay for a field
  inversion.
* ``Mat4`` is a plain 4x4 matrix used for Sz(2^(2L-1)) in Suzuki's
  representation.

An ``AutElem`` is a pair (part, frob) in PGL2(q) x| Gal or Sz(q) x| Gal with
(M, K)(N, J) = (M * phi^K(N), K + J), phi the Frobenius x -> x^p.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .ff import Field, FieldElem, FieldError, make_field

PSL2 = "PSL2"
SZ = "Sz"


class AlgebraError(ValueError):
    pass


class ContextMismatchError(AlgebraError):
    pass


class SingularMatrixError(AlgebraError):
    pass


def _raw(field: Field, v):
    if isinstance(v, FieldElem):
        if v.field != field:
            raise ContextMismatchError(f"{v.field!r} vs {field!r}")
        return v.raw
    if isinstance(v, int):
        return field.from_int(v)
    return v


# ---------------------------------------------------------------------------
# 2x2 projective matrices


class ProjMat2:
    __slots__ = ("field", "raw", "_canon")

    def __init__(self, field: Field, raw: tuple):
        self.field = field
        self.raw = raw
        self._canon = None

    # --- canonical form, equality, hashing
    def canonical(self) -> tuple:
        if self._canon is None:
            F = self.field
            z = F.zero
            for x in self.raw:
                if x != z:
                    break
            else:
                raise SingularMatrixError("zero matrix")
            if x == F.one:
                self._canon = self.raw
            else:
                s = F.inv(x)
                self._canon = tuple(F.mul(y, s) if y != z else z for y in self.raw)
        return self._canon

    def __eq__(self, other):
        if not isinstance(other, ProjMat2):
            return NotImplemented
        F = self.field
        if other.field is not F and other.field != F:
            return False
        a, b = self.raw, other.raw
        if a == b:
            return True
        if self._canon is not None and other._canon is not None:
            return self._canon == other._canon
        z = F.zero
        pivot = -1
        for i in range(4):
            za, zb = a[i] == z, b[i] == z
            if za != zb:
                return False
            if pivot < 0 and not za:
                pivot = i
        ap, bp = a[pivot], b[pivot]
        mul = F.mul
        for i in range(pivot + 1, 4):
            if a[i] != z and mul(a[i], bp) != mul(b[i], ap):
                return False
        return True

    def __hash__(self):
        return hash(self.canonical())

    # --- arithmetic
    def __mul__(self, other: "ProjMat2") -> "ProjMat2":
        return pmul(self, other)

    def det(self):
        F = self.field
        a, b, c, d = self.raw
        return F.sub(F.mul(a, d), F.mul(b, c))

    def frob(self, K: int) -> "ProjMat2":
        if K % self.field.k == 0:
            return self
        F = self.field
        return ProjMat2(F, tuple(F.frob(x, K) for x in self.raw))

    def is_identity(self) -> bool:
        z = self.field.zero
        a, b, c, d = self.raw
        return b == z and c == z and a == d

    @property
    def entries(self) -> list[list[FieldElem]]:
        a, b, c, d = (FieldElem(self.field, x) for x in self.canonical())
        return [[a, b], [c, d]]

    def to_json(self) -> list[list[int]]:
        return [self.field.to_coeffs(x) for x in self.canonical()]

    def __repr__(self):
        return f"ProjMat2({self.to_json()})"


def _mat2_mul_raw(F: Field, x: tuple, y: tuple) -> tuple:
    a, b, c, d = x
    e, f, g, h = y
    z = F.zero
    mul, add = F.mul, F.add
    # skip products with a zero factor; diagonal and unipotent inputs are common
    if b == z and c == z:
        if f == z and g == z:
            return (mul(a, e), z, z, mul(d, h))
        return (mul(a, e) if e != z else z, mul(a, f) if f != z else z,
                mul(d, g) if g != z else z, mul(d, h) if h != z else z)
    if f == z and g == z:
        return (mul(a, e) if a != z else z, mul(b, h) if b != z else z,
                mul(c, e) if c != z else z, mul(d, h) if d != z else z)
    return (add(mul(a, e), mul(b, g)), add(mul(a, f), mul(b, h)),
            add(mul(c, e), mul(d, g)), add(mul(c, f), mul(d, h)))


def canon2(raw: Sequence, field: Field | None = None) -> ProjMat2:
    """Canonical projective image of a 2x2 matrix given as [[a, b], [c, d]]."""
    flat = [x for row in raw for x in row] if len(raw) == 2 else list(raw)
    if field is None:
        for x in flat:
            if isinstance(x, FieldElem):
                field = x.field
                break
        else:
            raise AlgebraError("canon2 needs a field for plain integer entries")
    m = ProjMat2(field, tuple(_raw(field, x) for x in flat))
    if m.det() == field.zero:
        raise SingularMatrixError("singular matrix")
    m.canonical()
    return m


def mat2(field: Field, a, b, c, d) -> ProjMat2:
    return canon2([[a, b], [c, d]], field)


def identity2(field: Field) -> ProjMat2:
    F = field
    return ProjMat2(F, (F.one, F.zero, F.zero, F.one))


def diag2(field: Field, a, d=None) -> ProjMat2:
    F = field
    return ProjMat2(F, (_raw(F, a), F.zero, F.zero, F.one if d is None else _raw(F, d)))


def pmul(x: ProjMat2, y: ProjMat2) -> ProjMat2:
    if x.field is not y.field and x.field != y.field:
        raise ContextMismatchError(f"{x.field!r} vs {y.field!r}")
    return ProjMat2(x.field, _mat2_mul_raw(x.field, x.raw, y.raw))


def pinv(x: ProjMat2) -> ProjMat2:
    """Adjugate; projectively equal to the inverse."""
    F = x.field
    a, b, c, d = x.raw
    return ProjMat2(F, (d, F.neg(b), F.neg(c), a))


def in_psl2(m: ProjMat2) -> bool:
    F = m.field
    if F.p == 2:
        return True
    return F.is_square(m.det())


# ---------------------------------------------------------------------------
# 4x4 matrices for Suzuki groups


class Mat4:
    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw: tuple):
        self.field = field
        self.raw = raw

    def __eq__(self, other):
        if not isinstance(other, Mat4):
            return NotImplemented
        return self.raw == other.raw and self.field == other.field

    def __hash__(self):
        return hash(self.raw)

    def __mul__(self, other: "Mat4") -> "Mat4":
        return m4mul(self, other)

    def frob(self, K: int) -> "Mat4":
        if K % self.field.k == 0:
            return self
        F = self.field
        return Mat4(F, tuple(F.frob(x, K) for x in self.raw))

    def is_identity(self) -> bool:
        return self.raw == identity4(self.field).raw

    @property
    def entries(self) -> list[list[FieldElem]]:
        r = [FieldElem(self.field, x) for x in self.raw]
        return [r[4 * i: 4 * i + 4] for i in range(4)]

    def to_json(self) -> list[list[int]]:
        return [self.field.to_coeffs(x) for x in self.raw]

    def __repr__(self):
        return f"Mat4({self.to_json()})"


def _mat4_mul_raw(F: Field, x: tuple, y: tuple) -> tuple:
    z = F.zero
    mul, add = F.mul, F.add
    out = []
    for i in range(0, 16, 4):
        row = x[i: i + 4]
        for j in range(4):
            acc = z
            for t in range(4):
                a = row[t]
                if a == z:
                    continue
                b = y[4 * t + j]
                if b == z:
                    continue
                acc = add(acc, mul(a, b))
            out.append(acc)
    return tuple(out)




_ID4: dict = {}


def identity4(field: Field) -> Mat4:
    m = _ID4.get(field)
    if m is None:
        o, z = field.one, field.zero
        m = Mat4(field, tuple(o if i % 5 == 0 else z for i in range(16)))
        _ID4[field] = m
    return m


def m4mul(x: Mat4, y: Mat4) -> Mat4:
    if x.field is not y.field and x.field != y.field:
        raise ContextMismatchError(f"{x.field!r} vs {y.field!r}")
    return Mat4(x.field, _mat4_mul_raw(x.field, x.raw, y.raw))


def m4inv(x: Mat4) -> Mat4:
    """Inverse of a Suzuki matrix.

    Sz(q) preserves the symplectic form with antidiagonal Gram matrix J
    (char 2, so no signs), hence M^-1 = J M^T J, the anti-transpose.
    """
    r = x.raw
    return Mat4(x.field, tuple(r[4 * (3 - j) + (3 - i)] for i in range(4) for j in range(4)))


# ---------------------------------------------------------------------------
# automorphism elements


@dataclass(frozen=True)
class AutElem:
    part: ProjMat2 | Mat4
    frob: int

    @property
    def family(self) -> str:
        return SZ if isinstance(self.part, Mat4) else PSL2

    @property
    def field(self) -> Field:
        return self.part.field

    def __mul__(self, other: "AutElem") -> "AutElem":
        return aut_mul(self, other)

    def to_json(self) -> dict:
        return {"part": self.part.to_json(), "frob": self.frob}


def _part_mul(x, y):
    if isinstance(x, ProjMat2):
        if not isinstance(y, ProjMat2):
            raise ContextMismatchError("mixed group families")
        return pmul(x, y)
    if not isinstance(y, Mat4):
        raise ContextMismatchError("mixed group families")
    return m4mul(x, y)


def part_inv(x):
    return pinv(x) if isinstance(x, ProjMat2) else m4inv(x)


def part_identity(x):
    return identity2(x.field) if isinstance(x, ProjMat2) else identity4(x.field)


def aut_mul(a: AutElem, b: AutElem) -> AutElem:
    k = a.part.field.k
    return AutElem(_part_mul(a.part, b.part.frob(a.frob)), (a.frob + b.frob) % k)


def aut_inv(a: AutElem) -> AutElem:
    k = a.part.field.k
    return AutElem(part_inv(a.part).frob(-a.frob % k), -a.frob % k)


def aut_eq(a: AutElem, b: AutElem) -> bool:
    return a.frob == b.frob and a.part == b.part


def aut_identity(part_or_field, family: str = PSL2) -> AutElem:
    if isinstance(part_or_field, Field):
        F = part_or_field
        return AutElem(identity4(F) if family == SZ else identity2(F), 0)
    return AutElem(part_identity(part_or_field), 0)


def aut_pow(a: AutElem, e: int) -> AutElem:
    if e < 0:
        a, e = aut_inv(a), -e
    result = aut_identity(a.part)
    base = a
    while e:
        if e & 1:
            result = aut_mul(result, base)
        e >>= 1
        if e:
            base = aut_mul(base, base)
    return result


def aut_is_identity(a: AutElem) -> bool:
    return a.frob == 0 and a.part.is_identity()


# ---------------------------------------------------------------------------
# group contexts


@dataclass(frozen=True, eq=False)
class GroupCtx:
    family: str
    field: Field
    L: int
    reps: tuple

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def k(self) -> int:
        return self.field.k

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def theta_frob(self) -> int:
        """Frobenius exponent of x -> x^(2^L) on GF(2^(2L-1))."""
        return self.L % self.field.k

    @property
    def order(self) -> int:
        q = self.q
        if self.family == SZ:
            return q * q * (q * q + 1) * (q - 1)
        g = 1 if self.p == 2 else 2
        return q * (q * q - 1) // g

    @property
    def name(self) -> str:
        if self.family == SZ:
            return f"Sz(2^{self.k})"
        return f"PSL2({self.p}^{self.L})"

    @property
    def key(self) -> tuple:
        return (self.family, self.p, self.k)

    def identity(self):
        return identity4(self.field) if self.family == SZ else identity2(self.field)

    def describe(self) -> dict:
        return {"family": self.family, "p": self.p, "k": self.k, "L": self.L,
                "coset_count": len(self.reps)}

    def contains(self, part) -> bool:
        if self.family == SZ:
            return isinstance(part, Mat4) and part.field == self.field
        return isinstance(part, ProjMat2) and part.field == self.field and in_psl2(part)


def psl2_ctx(p: int, L: int, seed: int = 0) -> GroupCtx:
    F = make_field(p, L, seed=seed)
    ctx = GroupCtx(PSL2, F, L, ())
    object.__setattr__(ctx, "reps", tuple(psl2_cosets(ctx)))
    return ctx


def sz_ctx(L: int, seed: int = 0) -> GroupCtx:
    if L < 1:
        raise AlgebraError("Sz needs L >= 1")
    F = make_field(2, 2 * L - 1, seed=seed)
    ctx = GroupCtx(SZ, F, L, ())
    object.__setattr__(ctx, "reps", tuple(sz_cosets(ctx)))
    return ctx


def psl2_cosets(ctx: GroupCtx) -> list[AutElem]:
    if ctx.family != PSL2:
        raise ContextMismatchError("psl2_cosets needs a PSL2 context")
    F = ctx.field
    I = identity2(F)
    if F.p == 2:
        return [AutElem(I, K) for K in range(F.k)]
    nu = diag2(F, FieldElem(F, F.nonsquare))
    return [AutElem(m, K) for m in (I, nu) for K in range(F.k)]


def sz_cosets(ctx: GroupCtx) -> list[AutElem]:
    if ctx.family != SZ:
        raise ContextMismatchError("sz_cosets needs a Sz context")
    I = identity4(ctx.field)
    return [AutElem(I, K) for K in range(ctx.field.k)]


def coset_label(rep: AutElem) -> dict:
    eps = 0 if rep.part.is_identity() else 1
    return {"eps": eps, "K": rep.frob}


# ---------------------------------------------------------------------------
# Suzuki matrices


def _sz_check(ctx: GroupCtx):
    if ctx.family != SZ:
        raise ContextMismatchError("Suzuki matrices need a Sz context")


def sz_torus(ctx: GroupCtx, kappa) -> Mat4:
    _sz_check(ctx)
    F = ctx.field
    k = _raw(F, kappa)
    if k == F.zero:
        raise AlgebraError("torus parameter must be nonzero")
    theta = 1 << ctx.L
    z = F.zero
    d = (k, F.pow(k, theta - 1), F.pow(k, 1 - theta), F.inv(k))
    return Mat4(F, tuple(d[i // 5] if i % 5 == 0 else z for i in range(16)))


def sz_unipotent(ctx: GroupCtx, a, b) -> Mat4:
    _sz_check(ctx)
    F = ctx.field
    a, b = _raw(F, a), _raw(F, b)
    t = ctx.theta_frob
    o, z = F.one, F.zero
    mul, add = F.mul, F.add
    at = F.frob(a, t)
    bt = F.frob(b, t)
    a2t = mul(mul(a, a), at)
    c30 = add(add(a2t, mul(a, b)), bt)
    c31 = add(mul(a, at), b)
    return Mat4(F, (o, z, z, z,
                    a, o, z, z,
                    b, at, o, z,
                    c30, c31, a, o))


def sz_weyl(ctx: GroupCtx) -> Mat4:
    _sz_check(ctx)
    F = ctx.field
    o, z = F.one, F.zero
    return Mat4(F, tuple(o if i in (3, 6, 9, 12) else z for i in range(16)))


# ---------------------------------------------------------------------------
# sampling and orders


def random_element(ctx: GroupCtx, rng: random.Random):
    F = ctx.field
    if ctx.family == SZ:
        E = lambda x: FieldElem(F, x)  # noqa: E731
        m = m4mul(sz_unipotent(ctx, E(F.random(rng)), E(F.random(rng))),
                  sz_torus(ctx, E(F.random_nonzero(rng))))
        if rng.random() < 0.75:
            u = sz_unipotent(ctx, E(F.random(rng)), E(F.random(rng)))
            m = m4mul(m4mul(m, sz_weyl(ctx)), u)
        return m
    while True:
        m = ProjMat2(F, tuple(F.random(rng) for _ in range(4)))
        d = m.det()
        if d == F.zero:
            continue
        if F.p == 2 or F.is_square(d):
            return m


def element_order(g, cap: int = 10**6):
    """Least n >= 1 with g^n = 1, or None past ``cap``.

    Works for ProjMat2, Mat4 and AutElem.
    """
    if isinstance(g, AutElem):
        one_test = aut_is_identity
        mul = aut_mul
    else:
        one_test = lambda x: x.is_identity()  # noqa: E731
        mul = _part_mul
    x = g
    for n in range(1, cap + 1):
        if one_test(x):
            return n
        x = mul(x, g)
    return None


def bfs_closure(gens: Sequence, limit: int = 10**5) -> list:
    """All products of the generators (a finite group), in BFS order."""
    if not gens:
        raise AlgebraError("no generators")
    first = gens[0]
    if isinstance(first, AutElem):
        one = aut_identity(first.part)
        mul = aut_mul
    else:
        one = part_identity(first)
        mul = _part_mul
    seen = {one: None}
    order = [one]
    queue = deque([one])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                if len(order) >= limit:
                    raise AlgebraError(f"closure exceeds {limit} elements")
                seen[y] = None
                order.append(y)
                queue.append(y)
    return order


def sz_generators(ctx: GroupCtx) -> list[Mat4]:
    F = ctx.field
    one, zero = F(1), F(0)
    gens = [sz_weyl(ctx), sz_unipotent(ctx, one, zero), sz_unipotent(ctx, zero, one)]
    if F.k > 1:
        x = F([0, 1])
        gens.append(sz_unipotent(ctx, x, zero))
        gens.append(sz_torus(ctx, x))
    return gens


def psl2_generators(ctx: GroupCtx) -> list[ProjMat2]:
    F = ctx.field
    o, z = F.one, F.zero
    gens = [ProjMat2(F, (o, o, z, o)), ProjMat2(F, (z, o, F.neg(o), z))]
    if F.k > 1 or F.p > 3:
        g = F.from_coeffs([0, 1]) if F.k > 1 else F.from_int(2)
        sq = F.mul(g, g)  # raw values go straight into the tuple
        gens.append(ProjMat2(F, (sq, z, z, o)))
        gens.append(ProjMat2(F, (o, g, z, o)))
    return gens


def _is_lower_unipotent_torus(ctx: GroupCtx, r: tuple) -> bool:
    """r = U(a, b) * t(kappa) for some a, b, kappa?"""
    F = ctx.field
    z = F.zero
    if any(r[4 * i + j] != z for i in range(4) for j in range(i + 1, 4)):
        return False
    kappa = r[0]
    if kappa == z:
        return False
    E = lambda x: FieldElem(F, x)  # noqa: E731
    t = sz_torus(ctx, E(kappa))
    n = m4mul(Mat4(F, r), m4inv(t))
    return n.raw == sz_unipotent(ctx, E(n.raw[4]), E(n.raw[8])).raw


def sz_contains(ctx: GroupCtx, m: Mat4) -> bool:
    """Membership in Sz(q) via the Bruhat decomposition
    Sz = B  u  B J U, with B = {U(a,b) t(kappa)}."""
    _sz_check(ctx)
    F = ctx.field
    r = m.raw
    if r[3] == F.zero:
        return _is_lower_unipotent_torus(ctx, r)
    kinv = F.inv(r[3])
    a = F.mul(r[2], kinv)
    t = ctx.theta_frob
    b = F.sub(F.mul(r[1], kinv), F.mul(a, F.frob(a, t)))
    E = lambda x: FieldElem(F, x)  # noqa: E731
    u2 = sz_unipotent(ctx, E(a), E(b))
    rest = m4mul(m4mul(m, m4inv(u2)), sz_weyl(ctx))
    return _is_lower_unipotent_torus(ctx, rest.raw)


def psl2_elements(ctx: GroupCtx) -> list[ProjMat2]:
    """All elements of PSL2(q) as canonical matrices."""
    F = ctx.field
    els = F.elements()
    z, o = F.zero, F.one
    sq = (lambda x: True) if F.p == 2 else F.is_square
    out = []
    for b in els:
        for c in els:
            bc = F.mul(b, c)
            for d in els:
                det = F.sub(d, bc)
                if det != z and sq(det):
                    out.append(ProjMat2(F, (o, b, c, d)))
    for c in els:
        if c == z:
            continue
        det = F.neg(c)
        if not sq(det):
            continue
        for d in els:
            out.append(ProjMat2(F, (z, o, c, d)))
    for m in out:
        m._canon = m.raw
    return out


def group_elements(ctx: GroupCtx, limit: int = 10**7) -> list:
    if ctx.order > limit:
        raise AlgebraError(f"{ctx.name} has {ctx.order} elements, above {limit}")
    if ctx.family == SZ:
        return bfs_closure(sz_generators(ctx), limit=limit)
    return psl2_elements(ctx)
