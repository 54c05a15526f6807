"""Free-group words: parsing, symmetries, variations, syntactic certification
and the canonical enumeration of two-variable words of length 6 to 8.

Variables are small integers (0 = ``a``, 1 = ``b``, ...).  A word is a tuple
of (variable, sign) letters, always freely reduced.

Text grammar: lowercase letter = variable, uppercase = its inverse, each
optionally followed by ``^n`` (n a nonzero integer, may be negative).  The
empty word is written ``1``.  ``format_word`` emits run-length form, e.g.
``a^3B^2``.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Letter = tuple[int, int]

# Power words x^e known not to be multiplicity-bounding; IH never covers them.
NOT_MB_POWERS = frozenset({8, 12, 16, 18, 24, 30})
# Even |e| <= 22 shown multiplicity-bounding by machine check.
MB_EVEN_POWERS = frozenset({2, 4, 6, 10, 14, 20, 22})
# Lengths certified without machine group checks (all words of length <= 5).
SYNTACTIC_BASE = frozenset(range(1, 6))


class WordError(ValueError):
    pass


class ParseError(WordError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


def reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for v, s in letters:
        if s not in (1, -1):
            raise WordError(f"bad sign {s}")
        if out and out[-1][0] == v and out[-1][1] == -s:
            out.pop()
        else:
            out.append((v, s))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...]

    def __post_init__(self):
        if reduce_letters(self.letters) != self.letters:
            raise WordError("word is not freely reduced; use Word.of")

    @classmethod
    def of(cls, letters: Iterable[Letter]) -> "Word":
        return cls(reduce_letters(letters))

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[int, int]]) -> "Word":
        letters = []
        for v, e in runs:
            s = 1 if e > 0 else -1
            letters.extend([(v, s)] * abs(e))
        return cls.of(letters)

    @functools.cached_property
    def runs(self) -> tuple[tuple[int, int], ...]:
        out: list[list[int]] = []
        for v, s in self.letters:
            if out and out[-1][0] == v:
                out[-1][1] += s
            else:
                out.append([v, s])
        return tuple((v, e) for v, e in out)

    @property
    def length(self) -> int:
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    @functools.cached_property
    def mu(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for v, _ in self.letters:
            m[v] = m.get(v, 0) + 1
        return m

    @property
    def variables(self) -> list[int]:
        return sorted(self.mu)

    @property
    def d(self) -> int:
        return len(self.mu)

    @property
    def b(self) -> int:
        return len(self.runs)

    @property
    def m(self) -> int:
        return max(self.mu.values(), default=0)

    @property
    def is_power(self) -> bool:
        return self.d == 1

    @property
    def power_exponent(self) -> int:
        if not self.is_power or self.b != 1:
            raise WordError("not a power word")
        return self.runs[0][1]

    def segment(self, i: int, j: int) -> "Word":
        return Word(self.letters[i:j])

    def relabel(self) -> "Word":
        """Rename variables by order of first appearance."""
        names: dict[int, int] = {}
        for v, _ in self.letters:
            names.setdefault(v, len(names))
        return Word(tuple((names[v], s) for v, s in self.letters))

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"


# ---------------------------------------------------------------------------
# text


def parse(text: str) -> Word:
    letters: list[Letter] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "1" and not letters and text.strip() == "1":
            return Word(())
        if not ("a" <= c <= "z" or "A" <= c <= "Z"):
            raise ParseError(f"unexpected {c!r}", i)
        v = ord(c.lower()) - ord("a")
        s = 1 if c.islower() else -1
        i += 1
        e = 1
        if i < n and text[i] == "^":
            j = i + 1
            if j < n and text[j] in "+-":
                j += 1
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k == j:
                raise ParseError("missing exponent", i + 1)
            e = int(text[i + 1:k])
            if e == 0:
                raise ParseError("zero exponent", i + 1)
            i = k
        if e < 0:
            s, e = -s, -e
        letters.extend([(v, s)] * e)
    return Word.of(letters)


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    parts = []
    for v, e in w.runs:
        if v >= 26:
            raise WordError("only 26 variables have names")
        c = chr(ord("a") + v)
        if e < 0:
            c = c.upper()
        parts.append(c if abs(e) == 1 else f"{c}^{abs(e)}")
    return "".join(parts)


def multiplicity(w: Word, x: int | str) -> int:
    if isinstance(x, str):
        x = ord(x.lower()) - ord("a")
    return w.mu.get(x, 0)


# ---------------------------------------------------------------------------
# symmetries


def inverse(w: Word) -> Word:
    return Word(tuple((v, -s) for v, s in reversed(w.letters)))


def mirror(w: Word) -> Word:
    return Word(tuple(reversed(w.letters)))


def substitute(w: Word, perm: dict[int, int] | Sequence[int] | None = None,
               signs: dict[int, int] | Sequence[int] | None = None) -> Word:
    """Apply x_i -> x_perm(i)^signs(i)."""
    def look(table, v, default):
        if table is None:
            return default
        if isinstance(table, dict):
            return table.get(v, default)
        return table[v] if v < len(table) else default

    letters = [(look(perm, v, v), s * look(signs, v, 1)) for v, s in w.letters]
    return Word.of(letters)


def symmetry_orbit(w: Word) -> set[Word]:
    """Images of a word in at most two variables under mirror, swap and sign flips."""
    out = set()
    base = [w, mirror(w)]
    for u in base:
        for perm in ((0, 1), (1, 0)):
            for s0 in (1, -1):
                for s1 in (1, -1):
                    out.add(substitute(u, perm, (s0, s1)))
    return out


def gamma_word(n: int) -> Word:
    if n < 1:
        raise WordError("gamma_word needs n >= 1")
    g = Word(((0, 1),))
    for i in range(1, n):
        x = ((i, 1),)
        g = Word.of(x + g.letters + ((i, -1),) + inverse(g).letters)
    return g


# ---------------------------------------------------------------------------
# variations


@dataclass(frozen=True)
class Variation:
    letters: tuple[tuple[tuple[int, int], int], ...]

    def to_word(self) -> Word:
        """The variation as a plain word, variables renamed by first appearance."""
        names: dict[tuple[int, int], int] = {}
        for key, _ in self.letters:
            names.setdefault(key, len(names))
        return Word(tuple((names[key], s) for key, s in self.letters))

    def __str__(self):
        return " ".join(f"{chr(97 + v)}{o}{'' if s > 0 else '^-1'}" for (v, o), s in self.letters)


def _positions(w: Word) -> dict[int, list[int]]:
    pos: dict[int, list[int]] = {}
    for i, (v, _) in enumerate(w.letters):
        pos.setdefault(v, []).append(i)
    return pos


def _build_variation(w: Word, labels: dict[int, int]) -> Variation:
    return Variation(tuple(((v, labels[i]), s) for i, (v, s) in enumerate(w.letters)))


def variations(w: Word) -> Iterator[Variation]:
    pos = _positions(w)
    vars_ = sorted(pos)
    choices = [itertools.product(range(1, len(pos[v]) + 1), repeat=len(pos[v])) for v in vars_]
    for combo in itertools.product(*[list(c) for c in choices]):
        labels = {}
        for v, idx in zip(vars_, combo):
            for p, o in zip(pos[v], idx):
                labels[p] = o
        yield _build_variation(w, labels)


def variation_count(w: Word) -> int:
    return math.prod(m**m for m in w.mu.values())


def _set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length n (labels start at 1)."""
    if n == 0:
        yield ()
        return

    def rec(prefix, mx):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for lab in range(1, mx + 2):
            prefix.append(lab)
            yield from rec(prefix, max(mx, lab))
            prefix.pop()

    yield from rec([], 0)


def variations_up_to_equivalence(w: Word) -> list[Variation]:
    """One variation per class of words equal up to renaming variables.

    Only the partition of each variable's occurrences into index classes
    matters up to renaming, so set partitions are enumerated directly and
    the results deduplicated by their relabeled form.
    """
    pos = _positions(w)
    vars_ = sorted(pos)
    seen: set[Word] = set()
    out = []
    for combo in itertools.product(*[list(_set_partitions(len(pos[v]))) for v in vars_]):
        labels = {}
        for v, rgs in zip(vars_, combo):
            for p, o in zip(pos[v], rgs):
                labels[p] = o
        var = _build_variation(w, labels)
        key = var.to_word()
        if key not in seen:
            seen.add(key)
            out.append(var)
    return out


# ---------------------------------------------------------------------------
# syntactic certifier


@dataclass(frozen=True)
class Derivation:
    rule: str
    word: str
    note: str = ""
    children: tuple["Derivation", ...] = ()

    def to_json(self) -> dict:
        out = {"rule": self.rule, "word": self.word}
        if self.note:
            out["note"] = self.note
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out

    def rules(self) -> set[str]:
        out = {self.rule}
        for c in self.children:
            out |= c.rules()
        return out


def power_known_mb(e: int) -> bool:
    e = abs(e)
    return e % 2 == 1 or e in MB_EVEN_POWERS


def _shorter_certified(l: int, certified: frozenset[int]) -> bool:
    return all(n in certified for n in range(1, l))


_MEMO: dict = {}


def syntactic_vsmb(w: Word, certified: Iterable[int] = SYNTACTIC_BASE) -> Derivation | None:
    """A derivation tree proving w very strongly multiplicity-bounding, or None.

    ``certified`` is the set of lengths n for which every word of length n
    (power words x^e with |e| in NOT_MB_POWERS excepted) is already known to
    be very strongly multiplicity-bounding.
    """
    if not w.letters:
        raise WordError("empty word")
    cert = frozenset(certified)
    key = (w, cert)
    if key not in _MEMO:
        _MEMO[key] = _certify(w, cert)
    return _MEMO[key]


def _certify(w: Word, cert: frozenset[int]) -> Derivation | None:
    text = format_word(w)
    l = w.length
    mu = w.mu
    for v, c in mu.items():
        if c == 1:
            return Derivation("R1", text, f"{chr(97 + v)} occurs once")
    pos = _positions(w)
    for v, c in mu.items():
        if c != 2:
            continue
        i, j = pos[v]
        si, sj = w.letters[i][1], w.letters[j][1]
        name = chr(97 + v)
        if si == sj:
            return Derivation("R2", text, f"{name} occurs twice with the same sign")
    for v, c in mu.items():
        if c != 2:
            continue
        i, j = pos[v]
        mid = w.segment(i + 1, j)
        sub = syntactic_vsmb(mid, cert)
        if sub is not None:
            return Derivation("R3", text, f"{chr(97 + v)} occurs twice with opposite signs", (sub,))
    if l in cert and not (w.is_power and abs(w.power_exponent) in NOT_MB_POWERS):
        return Derivation("IH", text, f"all words of length {l} certified")
    if _shorter_certified(l, cert):
        if min(mu.values()) <= 2:
            return Derivation("R5", text, "some multiplicity <= 2, shorter lengths certified")
        if w.d >= l // 3 + 1:
            return Derivation("R6", text, f"{w.d} >= floor({l}/3)+1 variables, shorter lengths certified")
        if w.is_power and l <= 5 and power_known_mb(w.power_exponent):
            return Derivation("R7", text, "short power word, shorter lengths certified")
    for i in range(l):
        for j in range(i + 1, l + 1):
            if j - i == l:
                continue
            inner = set(v for v, _ in w.letters[i:j])
            outer = set(v for v, _ in w.letters[:i] + w.letters[j:])
            if inner & outer:
                continue
            sub = syntactic_vsmb(w.segment(i, j), cert)
            if sub is not None:
                return Derivation("R4", text, f"segment {i}:{j} isolated", (sub,))
    return None


def clear_memo():
    _MEMO.clear()


# ---------------------------------------------------------------------------
# compositions and the canonical enumeration


@dataclass(frozen=True)
class CompositionSet:
    n: int
    k: int
    all: tuple[tuple[int, ...], ...]
    reps: tuple[tuple[int, ...], ...]

    @property
    def p(self) -> int:
        return len(self.all)

    @property
    def pbar(self) -> int:
        return len(self.reps)


@functools.lru_cache(maxsize=None)
def compositions(n: int, k: int) -> CompositionSet:
    if n < 1 or k < 1:
        raise WordError("compositions need n, k >= 1")
    if k > n:
        return CompositionSet(n, k, (), ())
    out = []
    for cuts in itertools.combinations(range(1, n), k - 1):
        edges = (0,) + cuts + (n,)
        out.append(tuple(edges[i + 1] - edges[i] for i in range(k)))
    out.sort()
    reps = sorted({min(t, t[::-1]) for t in out})
    return CompositionSet(n, k, tuple(out), tuple(reps))


EXPECTED_CELLS = {
    (6, 4, 3): 16, (6, 5, 3): 8, (6, 6, 3): 16,
    (7, 4, 3): 24, (7, 5, 3): 16, (7, 5, 4): 48, (7, 6, 3): 48, (7, 7, 4): 32,
    (8, 4, 3): 32, (8, 4, 4): 36, (8, 5, 3): 16, (8, 5, 4): 48, (8, 5, 5): 64,
    (8, 6, 3): 96, (8, 6, 4): 144, (8, 7, 4): 64, (8, 7, 5): 64, (8, 8, 4): 64,
}


def _interleave(xs: Sequence[int], ys: Sequence[int], signs: Sequence[int]) -> Word:
    runs = []
    for i in range(len(xs) + len(ys)):
        mag = xs[i // 2] if i % 2 == 0 else ys[i // 2]
        s = 1 if i < 2 else signs[i - 2]
        runs.append((i % 2, s * mag))
    return Word.from_runs(runs)


def canonical_cells(l: int) -> dict[tuple[int, int, int], list[Word]]:
    """Canonical words per (l, b_w, mu_x) cell."""
    if l not in (6, 7, 8):
        raise WordError("canonical enumeration covers l in {6, 7, 8}")
    cells: dict[tuple[int, int, int], list[Word]] = {}
    for b in range(4, l + 1):
        k = b // 2
        if b % 2 == 0:
            lo, hi = max(3, k), l // 2
            plans = [(mx, compositions(mx, k).all, compositions(l - mx, k).all)
                     for mx in range(lo, hi + 1)]
        else:
            plans = []
            for mx in range(k + 1, l - max(3, k) + 1):
                my = l - mx
                if mx == k + 1:
                    plans.append((mx, ((1,) * (k + 1),), compositions(my, k).reps))
                else:
                    plans.append((mx, compositions(mx, k + 1).reps, compositions(my, k).all))
        for mx, xcomps, ycomps in plans:
            words = []
            for xs in xcomps:
                for ys in ycomps:
                    for signs in itertools.product((1, -1), repeat=b - 2):
                        words.append(_interleave(xs, ys, signs))
            if words:
                cells[(l, b, mx)] = words
    return cells


def enumerate_canonical(l: int) -> list[Word]:
    return [w for ws in canonical_cells(l).values() for w in ws]


def enumerate_all(l: int, d: int) -> list[Word]:
    """All reduced words of length l over variables 0..d-1."""
    if l < 0 or d < 1:
        raise WordError("enumerate_all needs l >= 0, d >= 1")
    alphabet = [(v, s) for v in range(d) for s in (1, -1)]
    out = []

    def rec(prefix):
        if len(prefix) == l:
            out.append(Word(tuple(prefix)))
            return
        for a in alphabet:
            if prefix and prefix[-1][0] == a[0] and prefix[-1][1] == -a[1]:
                continue
            prefix.append(a)
            rec(prefix)
            prefix.pop()

    rec([])
    return out


def coverage_targets(l: int) -> list[Word]:
    """Two-variable words of length l that no syntactic rule handles:
    both variables used, at least 4 runs, both multiplicities >= 3."""
    return [w for w in enumerate_all(l, 2)
            if w.d == 2 and w.b >= 4 and min(w.mu.values()) >= 3]


def coverage_check(l: int, details: bool = False):
    canon = enumerate_canonical(l)
    orbit: set[Word] = set()
    for w in canon:
        orbit |= symmetry_orbit(w)
    targets = coverage_targets(l)
    missing = [w for w in targets if w not in orbit]
    ok = not missing
    if details:
        return ok, {"targets": len(targets), "canonical": len(canon), "orbit": len(orbit),
                    "missing": [format_word(w) for w in missing]}
    return ok


def enumeration_report(l: int) -> str:
    cells = canonical_cells(l)
    lines = [format_word(w) for ws in cells.values() for w in ws]
    lines.append("# l b_w mu_x count expected")
    for key, ws in cells.items():
        lines.append(f"# {key[0]} {key[1]} {key[2]} {len(ws)} {EXPECTED_CELLS.get(key, '-')}")
    lines.append(f"# total {sum(len(ws) for ws in cells.values())}")
    return "\n".join(lines) + "\n"


def classify_two_variable(w: Word) -> str:
    """Which sweep class a two-variable word falls into."""
    if w.b <= 3:
        return "isolation"
    if min(w.mu.values()) <= 2:
        return "low-multiplicity"
    return "canonical-orbit"


def orbit_representative(w: Word, canon: dict[Word, Word]) -> Word | None:
    for u in symmetry_orbit(w):
        if u in canon:
            return canon[u]
    return None


__all__ = [
    "Word", "Variation", "Derivation", "CompositionSet", "parse", "format_word", "multiplicity",
    "inverse", "mirror", "substitute", "symmetry_orbit", "gamma_word", "variations",
    "variation_count", "variations_up_to_equivalence", "syntactic_vsmb", "compositions",
    "enumerate_canonical", "canonical_cells", "enumerate_all", "coverage_check", "EXPECTED_CELLS",
    "WordError", "ParseError", "reduce_letters",
]

