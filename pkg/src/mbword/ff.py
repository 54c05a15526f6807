"""Arithmetic in finite fields GF(p^k).

Two backends share one interface:

* ``ZechField`` (q <= 2**16): elements are discrete logarithms to a fixed
  primitive element, with ``q - 1`` standing for zero.  Addition goes through
  a Zech table, everything else is integer arithmetic mod ``q - 1``.
* ``PolyField`` (larger q): elements are the ``bytes`` of a float64 coefficient
  vector (low to high).  Multiplication is a numpy convolution followed by a
  precomputed reduction matrix; Frobenius powers are precomputed matrices.

Raw elements are opaque, hashable and compare with ``==``.  ``FieldElem``
wraps a raw element together with its field for user-facing arithmetic.
"""

from __future__ import annotations

import functools
import math
import random
from typing import Iterable, Sequence

import numpy as np

SMALL_FIELD_LIMIT = 1 << 16
PRIMITIVE_BOUND = 1 << 64


class FieldError(ValueError):
    pass


class FieldMismatchError(FieldError):
    pass


class UnsupportedSizeError(FieldError):
    pass


# ---------------------------------------------------------------------------
# integers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for r in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % r == 0:
            return n == r
    if n < 1369:
        return True
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n``; trial division with a sympy fallback."""
    out = []
    r = 2
    while r * r <= n and r < 1 << 20:
        if n % r == 0:
            out.append(r)
            while n % r == 0:
                n //= r
        r += 1 if r == 2 else 2
    if n > 1:
        if is_prime(n):
            out.append(n)
        else:
            import sympy

            out.extend(sorted(sympy.factorint(n)))
    return sorted(out)


# ---------------------------------------------------------------------------
# polynomials over Z_p as int lists (low to high); small-degree utilities


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, m, p)


def _ppowmod(a: Sequence[int], n: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while n:
        if n & 1:
            result = _pmulmod(result, base, m, p)
        n >>= 1
        if n:
            base = _pmulmod(base, base, m, p)
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


# numpy variants for large degrees


def _np_trim(a: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def _np_pmod(a: np.ndarray, m: np.ndarray, p: int) -> np.ndarray:
    a = _np_trim(a % p).copy()
    dm = len(m) - 1
    inv_lead = pow(int(m[-1]), -1, p)
    while len(a) - 1 >= dm:
        c = int(a[-1]) * inv_lead % p
        shift = len(a) - 1 - dm
        a[shift:] = (a[shift:] - c * m) % p
        a = _np_trim(a)
    return a


def _np_pgcd(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a = _np_trim(np.asarray(a, dtype=np.int64) % p)
    b = _np_trim(np.asarray(b, dtype=np.int64) % p)
    while b.size:
        a, b = b, _np_pmod(a, b, p)
    return a


def _reduction_matrix(modulus: Sequence[int], p: int) -> np.ndarray:
    """Rows i = 0..k-2 hold the coefficients of x^(k+i) mod f."""
    k = len(modulus) - 1
    rows = np.zeros((max(k - 1, 0), k), dtype=np.int64)
    if k < 2:
        return rows
    cur = np.array([(-c) % p for c in modulus[:k]], dtype=np.int64)  # x^k
    for i in range(k - 1):
        rows[i] = cur
        top = cur[-1]
        cur = np.concatenate(([0], cur[:-1]))
        if top:
            cur = (cur + top * rows[0]) % p
    return rows


def _x_pow_p_matrix(modulus: Sequence[int], p: int) -> np.ndarray:
    """Matrix of the Frobenius x -> x^p: column i holds x^(i*p) mod f."""
    k = len(modulus) - 1
    red = _reduction_matrix(modulus, p).astype(np.float64)
    m = np.asarray(modulus, dtype=np.int64)

    def mulmod(a, b):
        c = np.convolve(a, b)
        if len(c) < 2 * k - 1:
            c = np.concatenate((c, np.zeros(2 * k - 1 - len(c), dtype=np.int64)))
        hi = (c[k:] % p).astype(np.float64)
        return (c[:k] + (hi @ red).astype(np.int64)) % p

    xp = np.zeros(k, dtype=np.int64)
    if p < k:
        xp[p] = 1
    else:
        xp = _np_pmod(np.eye(1, p + 1, p, dtype=np.int64)[0], m, p)
        xp = np.concatenate((xp, np.zeros(k - len(xp), dtype=np.int64)))
    cols = np.zeros((k, k), dtype=np.int64)
    cur = np.zeros(k, dtype=np.int64)
    cur[0] = 1
    for i in range(k):
        cols[:, i] = cur
        cur = mulmod(cur, xp)
    return cols


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin's test with a cheap Ben-Or prefilter on small factor degrees."""
    f = _trim([int(c) % p for c in poly])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if f[0] == 0:
        return False
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    frob = _x_pow_p_matrix(f, p).astype(np.float64)
    fa = np.asarray(f, dtype=np.int64)

    def x_pow_p_iter(n):
        v = np.zeros(k, dtype=np.int64)
        v[1] = 1
        for _ in range(n):
            v = (frob @ v.astype(np.float64)).astype(np.int64) % p
            yield v

    def coprime_with(v):
        g = v.copy()
        g[1] = (g[1] - 1) % p
        return len(_np_pgcd(fa, g, p)) == 1

    bound = min(3, k // 2)
    powers = {}
    for i, v in enumerate(x_pow_p_iter(k), start=1):
        powers[i] = v
        if i <= bound and not coprime_with(v):
            return False
    top = powers[k]
    x = np.zeros(k, dtype=np.int64)
    x[1] = 1
    if not np.array_equal(top, x):
        return False
    for r in prime_factors(k):
        if not coprime_with(powers[k // r]):
            return False
    return True


def is_primitive(poly: Sequence[int], p: int) -> bool:
    f = _trim([int(c) % p for c in poly])
    k = len(f) - 1
    if k < 1:
        return False
    if p**k >= PRIMITIVE_BOUND:
        raise UnsupportedSizeError(f"primitivity check needs p^deg < 2^64, got {p}^{k}")
    if not is_irreducible(f, p):
        return False
    n = p**k - 1
    x = [0, 1] if k > 1 else [_x_mod_linear(f, p)]
    if _ppowmod(x, n, f, p) != [1]:
        return False
    return all(_ppowmod(x, n // r, f, p) != [1] for r in prime_factors(n))


def _x_mod_linear(f: Sequence[int], p: int) -> int:
    # x mod (f1 x + f0) is the root -f0/f1
    return (-f[0]) * pow(f[1], -1, p) % p


def _random_monic(p: int, k: int, rng: random.Random) -> list[int]:
    return [rng.randrange(p) for _ in range(k)] + [1]


def find_irreducible(p: int, k: int, seed: int = 0, primitive: bool = False) -> list[int]:
    """Seeded random search for a monic irreducible (optionally primitive) polynomial."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k == 1:
        return [0, 1]
    rng = random.Random(f"irreducible:{p}:{k}:{seed}")
    while True:
        f = _random_monic(p, k, rng)
        if f[0] == 0:
            continue
        if primitive:
            if is_primitive(f, p):
                return f
        elif is_irreducible(f, p):
            return f


# ---------------------------------------------------------------------------
# fields


class Field:
    """GF(p^k) defined by a monic irreducible ``modulus`` (low to high)."""

    p: int
    k: int
    q: int
    modulus: tuple[int, ...]
    seed: int
    nonsquare: object | None

    def __init__(self, p: int, k: int, modulus: Sequence[int], seed: int):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(int(c) for c in modulus)
        self.seed = seed

    # identity and hashing go by the defining data only
    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, int):
            return FieldElem(self, self.from_int(value))
        return FieldElem(self, self.from_coeffs(value))

    def _init_nonsquare(self):
        self.nonsquare = None
        if self.p != 2:
            self.nonsquare = self._find_nonsquare(random.Random(f"nonsquare:{self.seed}"))

    def _find_nonsquare(self, rng: random.Random):
        while True:
            a = self.random_nonzero(rng)
            if not self.is_square(a):
                return a

    # common derived operations
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random_nonzero(self, rng: random.Random):
        while True:
            a = self.random(rng)
            if a != self.zero:
                return a

    def is_zero(self, a) -> bool:
        return a == self.zero

    def describe(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "modulus": list(self.modulus),
            "nonsquare": None if self.nonsquare is None else self.to_coeffs(self.nonsquare),
            "seed": self.seed,
        }


class ZechField(Field):
    def __init__(self, p, k, modulus, seed):
        super().__init__(p, k, modulus, seed)
        q = self.q
        n = q - 1
        self.n = n
        self.zero = n
        self.one = 0
        exp_digits = self._exp_table()
        self._exp = [self._code(d) for d in exp_digits]
        log = [0] * q
        log[0] = n
        for i, c in enumerate(self._exp):
            log[c] = i
        self._log = log
        zech = [0] * n
        for i, c in enumerate(self._exp):
            c0 = c % p
            zech[i] = log[c - c0 + (c0 + 1) % p]
        self._zech = zech
        self._neg_one = n // 2 if p != 2 else 0
        self._frob_mult = [pow(p, j, n) if n > 1 else 0 for j in range(k)]
        self._init_nonsquare()

    def _code(self, digits):
        c = 0
        for d in reversed(digits):
            c = c * self.p + d
        return c

    def _digits(self, code):
        out = []
        for _ in range(self.k):
            code, r = divmod(code, self.p)
            out.append(r)
        return out

    def _exp_table(self) -> list[list[int]]:
        p, k, f, n = self.p, self.k, list(self.modulus), self.q - 1
        if n == 1:
            return [[1] + [0] * (k - 1)]
        g = self._primitive_element()
        out = []
        cur = [1]
        for _ in range(n):
            out.append(cur + [0] * (k - len(cur)))
            cur = _pmulmod(cur, g, f, p)
        if cur != [1]:
            raise FieldError("generator search failed")
        return out

    def _primitive_element(self) -> list[int]:
        p, k, f, n = self.p, self.k, list(self.modulus), self.q - 1
        factors = prime_factors(n)
        start = [0, 1] if k > 1 else [2 % p]
        candidates = [start] + [self._digits(c) for c in range(2, self.q)]
        for g in candidates:
            g = _trim(list(g))
            if not g:
                continue
            if all(_ppowmod(g, n // r, f, p) != [1] for r in factors):
                return g
        raise FieldError("no primitive element found")

    def add(self, a, b):
        n = self.n
        if a == n:
            return b
        if b == n:
            return a
        z = self._zech[b - a if b >= a else b - a + n]
        if z == n:
            return n
        r = a + z
        return r - n if r >= n else r

    def neg(self, a):
        if a == self.n:
            return a
        r = a + self._neg_one
        return r - self.n if r >= self.n else r

    def mul(self, a, b):
        n = self.n
        if a == n or b == n:
            return n
        r = a + b
        return r - n if r >= n else r

    def inv(self, a):
        if a == self.n:
            raise ZeroDivisionError("inverse of zero")
        return (-a) % self.n

    def pow(self, a, e: int):
        if a == self.n:
            if e > 0:
                return a
            if e == 0:
                return 0
            raise ZeroDivisionError("negative power of zero")
        return (a * e) % self.n

    def frob(self, a, K: int):
        if a == self.n or self.k == 1:
            return a
        return (a * self._frob_mult[K % self.k]) % self.n

    def is_square(self, a) -> bool:
        if a == self.n:
            raise FieldError("is_square of zero")
        return self.p == 2 or a % 2 == 0

    def random(self, rng: random.Random):
        return rng.randrange(self.q)

    def from_int(self, v: int):
        return self._log[v % self.p]

    def from_coeffs(self, coeffs: Sequence[int]):
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.k:
            raise FieldError(f"expected at most {self.k} coefficients")
        return self._log[self._code(coeffs)]

    def to_coeffs(self, a) -> list[int]:
        if a == self.n:
            return [0] * self.k
        return self._digits(self._exp[a])

    def elements(self) -> list:
        return list(range(self.q))

    def probe_elements(self, count: int) -> list:
        n = self.n
        return [(i + 1) % n for i in range(min(count, max(n - 1, 0)))]


class PolyField(Field):
    # Elements are float64 coefficient vectors holding exact integers in [0, p);
    # every product stays below 2^52, so float arithmetic is exact and we avoid
    # int/float conversions in the hot loops.
    FROB_CACHE_DEGREE = 64

    def __init__(self, p, k, modulus, seed):
        super().__init__(p, k, modulus, seed)
        if k * (p - 1) ** 2 * max(k, p) >= 1 << 52:
            raise UnsupportedSizeError(f"GF({p}^{k}) exceeds the float64 exactness bound")
        zero = np.zeros(k)
        one = zero.copy()
        one[0] = 1
        self.zero = zero.tobytes()
        self.one = one.tobytes()
        self._red = _reduction_matrix(self.modulus, p).astype(np.float64)
        self._frob_pow2 = [_x_pow_p_matrix(self.modulus, p).astype(np.float64)]
        self._frob_full = {}
        self._init_nonsquare()

    def _v(self, a) -> np.ndarray:
        return np.frombuffer(a, dtype=np.float64)

    def add(self, a, b):
        return ((self._v(a) + self._v(b)) % self.p).tobytes()

    def neg(self, a):
        if self.p == 2:
            return a
        return ((self.p - self._v(a)) % self.p).tobytes()

    def _mulv(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        k, p = self.k, self.p
        c = np.convolve(x, y)
        return (c[:k] + (c[k:] % p) @ self._red) % p

    def mul(self, a, b):
        if a == self.one:
            return b
        if b == self.one:
            return a
        return self._mulv(self._v(a), self._v(b)).tobytes()

    def scalar_mul(self, a, s: int):
        return ((self._v(a) * (s % self.p)) % self.p).tobytes()

    def _frob_matrix(self, j: int) -> np.ndarray:
        mats = self._frob_pow2
        while len(mats) <= j:
            m = mats[-1]
            mats.append((m @ m) % self.p)
        return mats[j]

    def _frobv(self, v: np.ndarray, K: int) -> np.ndarray:
        K %= self.k
        if K == 0:
            return v
        if self.k <= self.FROB_CACHE_DEGREE:
            m = self._frob_full.get(K)
            if m is None:
                m = np.eye(self.k)
                j, e = 0, K
                while e:
                    if e & 1:
                        m = (self._frob_matrix(j) @ m) % self.p
                    e >>= 1
                    j += 1
                self._frob_full[K] = m
            return (m @ v) % self.p
        j = 0
        while K:
            if K & 1:
                v = (self._frob_matrix(j) @ v) % self.p
            K >>= 1
            j += 1
        return v

    def frob(self, a, K: int):
        if K % self.k == 0 or a == self.zero or a == self.one:
            return a
        return self._frobv(self._v(a), K).tobytes()

    def _chain_exact(self, v: np.ndarray, n: int) -> np.ndarray:
        # T(m+1) = T(m) * frob^m(v); T(2m) = T(m) * frob^m(T(m))
        t = v.copy()
        m = 1
        for bit in bin(n)[3:]:
            t = self._mulv(t, self._frobv(t, m))
            m *= 2
            if bit == "1":
                t = self._mulv(t, self._frobv(v, m))
                m += 1
        return t

    def norm(self, a) -> int:
        """N(a) = a^((q-1)/(p-1)) as an integer in [0, p)."""
        t = self._chain_exact(self._v(a), self.k)
        return int(t[0])

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        v = self._v(a)
        if self.k == 1:
            return np.array([pow(int(v[0]), -1, self.p)], dtype=np.float64).tobytes()
        t = self._frobv(self._chain_exact(v, self.k - 1), 1)  # a^(r-1)
        nrm = int(self._mulv(t, v)[0])
        return ((t * pow(nrm, -1, self.p)) % self.p).tobytes()

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self._v(self.one)
        base = self._v(a)
        while e:
            if e & 1:
                result = self._mulv(result, base)
            e >>= 1
            if e:
                base = self._mulv(base, base)
        return np.ascontiguousarray(result, dtype=np.float64).tobytes()

    def is_square(self, a) -> bool:
        if a == self.zero:
            raise FieldError("is_square of zero")
        if self.p == 2:
            return True
        return pow(self.norm(a), (self.p - 1) // 2, self.p) == 1

    def random(self, rng: random.Random):
        return np.array([rng.randrange(self.p) for _ in range(self.k)], dtype=np.float64).tobytes()

    def from_int(self, v: int):
        out = np.zeros(self.k)
        out[0] = v % self.p
        return out.tobytes()

    def from_coeffs(self, coeffs: Sequence[int]):
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.k:
            raise FieldError(f"expected at most {self.k} coefficients")
        out = np.zeros(self.k)
        out[: len(coeffs)] = coeffs
        return out.tobytes()

    def to_coeffs(self, a) -> list[int]:
        return [int(c) for c in self._v(a)]

    def elements(self) -> list:
        raise UnsupportedSizeError(f"{self!r} is too large to enumerate")

    def probe_elements(self, count: int) -> list:
        base = self.from_coeffs([0, 1]) if self.k > 1 else self.from_int(2)
        out, cur = [], base
        for _ in range(count):
            out.append(cur)
            cur = self.mul(cur, base)
        return out


@functools.lru_cache(maxsize=None)
def _make_field(p: int, k: int, modulus: tuple[int, ...] | None, seed: int) -> Field:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError("degree must be at least 1")
    small = p**k <= SMALL_FIELD_LIMIT
    if modulus is None:
        modulus = tuple(find_irreducible(p, k, seed, primitive=small and k > 1))
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(_trim(list(modulus))) != k + 1:
            raise FieldError(f"modulus must have degree {k}")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over Z_{p}")
    cls = ZechField if small else PolyField
    return cls(p, k, modulus, seed)


def make_field(p: int, k: int = 1, modulus: Iterable[int] | None = None, seed: int = 0) -> Field:
    """Build (or fetch from cache) GF(p^k).

    Without a modulus a seeded random search picks one; small fields get a
    primitive modulus so the class of x generates the multiplicative group.
    For k = 1 the modulus is x.
    """
    if k == 1 and modulus is None:
        modulus = (0, 1)
    return _make_field(p, k, None if modulus is None else tuple(modulus), seed)


# ---------------------------------------------------------------------------
# user-facing elements


class FieldElem:
    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        self.field = field
        self.raw = raw

    def _check(self, other) -> "FieldElem":
        if isinstance(other, int):
            return FieldElem(self.field, self.field.from_int(other))
        if not isinstance(other, FieldElem):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElem(self.field, self.field.add(self.raw, other.raw))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return FieldElem(self.field, self.field.sub(self.raw, other.raw))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElem(self.field, self.field.mul(self.raw, other.raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElem(self.field, self.field.div(self.raw, other.raw))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.raw))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.raw, e))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.raw == self.field.from_int(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.field == other.field and self.raw == other.raw

    def __hash__(self):
        return hash((self.field, self.raw))

    def __bool__(self):
        return self.raw != self.field.zero

    @property
    def coeffs(self) -> list[int]:
        return self.field.to_coeffs(self.raw)

    def __repr__(self):
        return f"{self.field!r}{self.coeffs}"


def _same(a: FieldElem, b: FieldElem) -> Field:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")
    return a.field


def f_add(a: FieldElem, b: FieldElem) -> FieldElem:
    return FieldElem(_same(a, b), a.field.add(a.raw, b.raw))


def f_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return FieldElem(_same(a, b), a.field.mul(a.raw, b.raw))


def f_neg(a: FieldElem) -> FieldElem:
    return FieldElem(a.field, a.field.neg(a.raw))


def f_inv(a: FieldElem) -> FieldElem:
    return FieldElem(a.field, a.field.inv(a.raw))


def f_pow(a: FieldElem, n: int) -> FieldElem:
    if n < 0:
        raise FieldError("f_pow takes a nonnegative exponent")
    return FieldElem(a.field, a.field.pow(a.raw, n))


def frobenius(a: FieldElem, K: int) -> FieldElem:
    """a^(p^K)."""
    return FieldElem(a.field, a.field.frob(a.raw, K))


def is_square(a: FieldElem) -> bool:
    if a.field.p == 2:
        raise FieldError("square classes are trivial in characteristic 2")
    return a.field.is_square(a.raw)


def find_nonsquare(field: Field, seed: int | None = None) -> FieldElem:
    if field.p == 2:
        raise FieldError("no non-squares in characteristic 2")
    if seed is None or seed == field.seed:
        return FieldElem(field, field.nonsquare)
    return FieldElem(field, field._find_nonsquare(random.Random(f"nonsquare:{seed}")))


def field_from_dict(d: dict) -> Field:
    return make_field(d["p"], d["k"], d["modulus"], d.get("seed", 0))


def gcd_exponent(a: int, b: int) -> int:
    return math.gcd(a, b)
