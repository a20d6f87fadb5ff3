"""Double braid words and their Deodhar combinatorics.

A double braid word is a tuple of nonzero integers; positive letters are
simple reflections acting on the right, negative letters act on the left.
Positions are 1-indexed, and position 0 is the left boundary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import BadDemazure, ConfigurationError, InternalInconsistency
from .rootsys import DynkinData, WeylElt


def parse_word(text, rank: int | None = None) -> tuple[int, ...]:
    """Parse "1 -2 3" or "1,-2,3"; also accepts an iterable of ints."""
    if isinstance(text, str):
        parts = [p for p in re.split(r"[\s,]+", text.strip()) if p]
        try:
            letters = tuple(int(p) for p in parts)
        except ValueError:
            raise ConfigurationError(f"cannot parse word {text!r}") from None
    else:
        letters = tuple(int(x) for x in text)
    for x in letters:
        if x == 0 or (rank is not None and abs(x) > rank):
            raise ConfigurationError(f"letter {x} out of range for rank {rank}")
    return letters


def format_word(word) -> str:
    return " ".join(str(x) for x in word)


def s_plus(i: int) -> int | None:
    """Index of s_i^+ (None for the identity)."""
    return i if i > 0 else None


def s_minus(i: int) -> int | None:
    return -i if i < 0 else None


def demazure_pi(D: DynkinData, word) -> WeylElt:
    """s^-_{i_m} * ... * s^-_{i_1} * s^+_{i_1} * ... * s^+_{i_m}."""
    w = D.identity
    for i in word:
        if i > 0:
            w = D.demazure_step(w, i, "right")
        else:
            w = D.demazure_step(w, -i, "left")
    return w


def _step(D, u, i):
    # s^-_i u s^+_i
    return D.apply_simple(u, i, "right") if i > 0 else D.apply_simple(u, -i, "left")


@dataclass(frozen=True)
class Crossings:
    word: tuple
    u_seq: tuple
    w_seq: tuple
    solid: tuple
    d_of: dict

    def is_solid(self, c: int) -> bool:
        return c in self.d_of


def pds(D: DynkinData, word):
    """Positive distinguished subexpression of any word, valid or not.

    Returns (u, solid) with u[c] for c in [0, m] and solid sorted ascending.
    """
    word = tuple(word)
    m = len(word)
    u = [None] * (m + 1)
    u[m] = D.w0
    solid = []
    for c in range(m, 0, -1):
        cur = u[c]
        other = _step(D, cur, word[c - 1])
        if other.length < cur.length:
            u[c - 1] = other
        else:
            u[c - 1] = cur
            solid.append(c)
    solid.reverse()
    return u, solid


def compute_crossings(D: DynkinData, word) -> Crossings:
    return _crossings(D, tuple(word))


@lru_cache(maxsize=65536)
def _crossings(D: DynkinData, word: tuple) -> Crossings:
    m = len(word)
    u, solid = pds(D, word)
    if u[0] != D.identity:
        raise BadDemazure(f"Demazure product of {format_word(word)} in {D.name} is not w0")
    if len(solid) != m - D.n_pos_roots:
        raise InternalInconsistency("|J| != m - l(w0)")
    w_seq = tuple(D.mul(D.w0, x) for x in u)
    d_of = {c: D.d[abs(word[c - 1]) - 1] for c in solid}
    return Crossings(word, tuple(u), w_seq, tuple(solid), d_of)


@dataclass(frozen=True)
class ApsData:
    e: int
    u_aps: tuple
    mutable_flag: bool


def compute_aps(D: DynkinData, word, crossings: Crossings, e: int) -> ApsData:
    word = tuple(word)
    m = len(word)
    if e not in crossings.solid:
        raise ValueError(f"{e} is not a solid crossing")
    u = [None] * (m + 1)
    u[m] = D.w0
    for c in range(m, 0, -1):
        cur = u[c]
        other = _step(D, cur, word[c - 1])
        if c == e:
            u[c - 1] = other if other.length > cur.length else cur
        else:
            u[c - 1] = other if other.length < cur.length else cur
    return ApsData(e, tuple(u), u[0] == D.identity)


def mutable_frozen(D: DynkinData, word, crossings: Crossings):
    mutable, frozen = [], []
    for e in crossings.solid:
        (mutable if compute_aps(D, word, crossings, e).mutable_flag else frozen).append(e)
    return tuple(mutable), tuple(frozen)


def op_word(D: DynkinData, word) -> tuple[int, ...]:
    """Letters j_c = -(i_c)*, with (-i)* = -(i*)."""
    out = []
    for i in word:
        s = D.star[abs(i)]
        out.append(-s if i > 0 else s)
    return tuple(out)


def suffix(word, c: int) -> tuple[int, ...]:
    word = tuple(word)
    if not 0 <= c <= len(word):
        raise ValueError("suffix index out of range")
    return word[c:]


def is_valid(D: DynkinData, word) -> bool:
    return demazure_pi(D, word) == D.w0


def random_valid_word(D: DynkinData, m: int, rng, signed: bool = True) -> tuple[int, ...]:
    """Random word of length max(m, l(w0)) with Demazure product w0.

    Draws random letters, then pads on the right with a reduced word for
    the missing part of w0.
    """
    n_free = max(0, m - D.n_pos_roots)
    while True:
        head = tuple((rng.choice((1, -1)) if signed else 1) * rng.randint(1, D.rank)
                     for _ in range(n_free))
        x = demazure_pi(D, head)
        pad = tuple(D.reduced_word(D.mul(D.inverse(x), D.w0)))
        word = head + pad
        if len(word) <= max(m, D.n_pos_roots) or n_free == 0:
            return word
        n_free -= 1


def valid_words(D: DynkinData, max_len: int, signed: bool = True, min_len: int = 0):
    """All valid words of length in [min_len, max_len], in lexicographic letter order.

    Letters are ordered 1..r then -1..-r.  The Demazure product is carried
    along the prefix, so each word costs one step.
    """
    letters = list(range(1, D.rank + 1)) + ([-i for i in range(1, D.rank + 1)] if signed else [])
    out = []

    def rec(prefix, w):
        if len(prefix) >= min_len and w == D.w0:
            out.append(tuple(prefix))
        if len(prefix) == max_len:
            return
        # the remaining letters must be able to reach w0
        if D.n_pos_roots - w.length > max_len - len(prefix):
            return
        for i in letters:
            prefix.append(i)
            rec(prefix, D.demazure_step(w, i, "right") if i > 0 else D.demazure_step(w, -i, "left"))
            prefix.pop()

    rec([], D.identity)
    return out
