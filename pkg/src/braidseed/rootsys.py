"""Finite root systems and Weyl groups for the Dynkin types A-G.

Conventions
-----------
Nodes are numbered 1..rank following Bourbaki.  The Cartan matrix entry
``cartan[i][j]`` is the pairing of the simple root i with the simple coroot j,
so for G2 the short simple root is node 1 and ``a_12 = -1, a_21 = -3``.  The
symmetrizers ``d`` satisfy ``d_i a_ij = d_j a_ji`` and are normalized so that
long roots get ``d = 1``; short roots get the lacing number (2 for B/C/F, 3 for
G).  This is the orbit-size normalization used when folding a simply-laced
diagram.

A Weyl group element is stored as its integer matrix on the root lattice in
the simple-root basis, together with the matrix of its inverse.  Coweights
(cocharacters) are integer vectors in the simple-coroot basis, and weights are
integer vectors in the fundamental-weight basis.
"""

from __future__ import annotations

import re
from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ConfigurationError


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


class WeylElt:
    """Weyl group element: action on the root lattice, simple-root basis.

    ``mat[r][c]`` is the coefficient of simple root r in the image of simple
    root c.  Equality and hashing use ``mat`` only.
    """

    __slots__ = ("mat", "inv", "length")

    def __init__(self, mat, inv, length):
        self.mat = mat
        self.inv = inv
        self.length = length

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"WeylElt(length={self.length}, mat={self.mat})"


def _left_mult(cartan, mat, i):
    # s_i on the left: only row i changes
    # s_i(alpha_j) = alpha_j - a_ji alpha_i, so new row i = row_i - sum_j a_ji row_j
    n = len(mat)
    row =[mat[i][l] - sum(cartan[j][i] * mat[j][l] for j in range(n)) for l in range(n)]
    return mat[:i] + (tuple(row),) + mat[i + 1:]


def _right_mult(cartan, mat, i):
    # w s_i (alpha_l) = w(alpha_l) - a_li w(alpha_i)
    n = len(mat)
    return tuple(
        tuple(mat[r][l] - cartan[l][i] * mat[r][i] for l in range(n))
        for r in range(n)
    )


class DynkinData:
    """Cartan data, Weyl group arithmetic and coweight actions for one type."""

    def __init__(self, letter: str, rank: int, cartan, name: str | None = None):
        self.letter = letter
        self.rank = rank
        self.name = name or f"{letter}{rank}"
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        _check_cartan(self.cartan)
        self.d = _symmetrizer(self.cartan)
        self.coxeter_m = tuple(
            tuple(1 if i == j else _coxeter_order(self.cartan[i][j] * self.cartan[j][i])
                  for j in range(rank))
            for i in range(rank)
        )
        self.identity = WeylElt(_identity(rank), _identity(rank), 0)
        self.positive_roots = _positive_roots(self.cartan)
        self.n_pos_roots = len(self.positive_roots)
        w = self.identity
        while True:
            for i in range(1, rank + 1):
                if self.is_right_ascent(w, i):
                    w = self.apply_simple(w, i, "right")
                    break
            else:
                break
        self.w0 = w
        if w.length != self.n_pos_roots:
            raise ConfigurationError(f"{self.name}: longest element has wrong length")
        star = []
        for i in range(rank):
            col = tuple(-w.mat[r][i] for r in range(rank))
            star.append(col.index(1) + 1)
        self.star = (None,) + tuple(star)  # 1-indexed, star[i] = i*

    def __repr__(self):
        return f"DynkinData({self.name})"

    def __eq__(self, other):
        return isinstance(other, DynkinData) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    # --- group operations -------------------------------------------------

    def simple(self, i: int) -> WeylElt:
        return self.apply_simple(self.identity, i, "left")

    def is_right_ascent(self, w: WeylElt, i: int) -> bool:
        """True iff w(alpha_i) > 0, i.e. w s_i > w."""
        return any(row[i - 1] > 0 for row in w.mat)

    def is_left_ascent(self, w: WeylElt, i: int) -> bool:
        """True iff s_i w > w."""
        return any(row[i - 1] > 0 for row in w.inv)

    def apply_simple(self, w: WeylElt, i: int, side: str = "right") -> WeylElt:
        """Return w s_i (side="right") or s_i w (side="left")."""
        k = i - 1
        if side == "right":
            up = self.is_right_ascent(w, i)
            mat = _right_mult(self.cartan, w.mat, k)
            inv = _left_mult(self.cartan, w.inv, k)
        elif side == "left":
            up = self.is_left_ascent(w, i)
            mat = _left_mult(self.cartan, w.mat, k)
            inv = _right_mult(self.cartan, w.inv, k)
        else:
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        return WeylElt(mat, inv, w.length + (1 if up else -1))

    def demazure_step(self, w: WeylElt, i: int, side: str = "right") -> WeylElt:
        """The longer of w and its product with s_i on the given side."""
        asc = self.is_right_ascent(w, i) if side == "right" else self.is_left_ascent(w, i)
        return self.apply_simple(w, i, side) if asc else w

    def inverse(self, w: WeylElt) -> WeylElt:
        return WeylElt(w.inv, w.mat, w.length)

    def reduced_word(self, w: WeylElt) -> list[int]:
        """A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}."""
        word = []
        while w.length > 0:
            for i in range(1, self.rank + 1):
                if not self.is_right_ascent(w, i):
                    word.append(i)
                    w = self.apply_simple(w, i, "right")
                    break
        word.reverse()
        return word

    def from_word(self, word) -> WeylElt:
        w = self.identity
        for i in word:
            w = self.apply_simple(w, i, "right")
        return w

    def mul(self, u: WeylElt, v: WeylElt) -> WeylElt:
        for i in self.reduced_word(v):
            u = self.apply_simple(u, i, "right")
        return u

    def demazure(self, u: WeylElt, v: WeylElt) -> WeylElt:
        """Demazure product u * v."""
        for i in self.reduced_word(v):
            u = self.demazure_step(u, i, "right")
        return u

    def root_length(self, w: WeylElt) -> int:
        """Length by inversion counting; used to cross-check ``w.length``."""
        count = 0
        for root in self.positive_roots:
            image = [sum(row[c] * root[c] for c in range(self.rank)) for row in w.mat]
            if any(x < 0 for x in image):
                count += 1
        return count

    # --- actions on coweights and weights --------------------------------

    def act_coweight(self, w: WeylElt, v) -> tuple[int, ...]:
        """Linear action on a coroot-basis vector; D^-1 W D in matrix form."""
        d = self.d
        out = []
        for k in range(self.rank):
            num = sum(w.mat[k][j] * d[j] * v[j] for j in range(self.rank))
            q, r = divmod(num, d[k])
            if r:
                raise ArithmeticError("coweight action left the coroot lattice")
            out.append(q)
        return tuple(out)

    def star_coweight(self, v) -> tuple[int, ...]:
        """v -> -w0 v; sends alpha_i^vee to alpha_{i*}^vee."""
        return tuple(-x for x in self.act_coweight(self.w0, v))

    def act_weight(self, w: WeylElt, lam) -> tuple[int, ...]:
        """Action on a fundamental-weight-basis vector."""
        lam = list(lam)
        for i in reversed(self.reduced_word(w)):
            c = lam[i - 1]
            if c:
                row = self.cartan[i - 1]
                for j in range(self.rank):
                    lam[j] -= c * row[j]
        return tuple(lam)

    def coroot(self, i: int) -> tuple[int, ...]:
        return tuple(int(j == i - 1) for j in range(self.rank))

    def enumerate_group(self) -> list[WeylElt]:
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            w = queue.popleft()
            for i in range(1, self.rank + 1):
                v = self.apply_simple(w, i, "right")
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return sorted(seen, key=lambda x: (x.length, x.mat))


def _coxeter_order(p):
    try:
        return {0: 2, 1: 3, 2: 4, 3: 6}[p]
    except KeyError:
        raise ConfigurationError(f"not a finite type: a_ij a_ji = {p}") from None


def _check_cartan(A):
    n = len(A)
    for i in range(n):
        if A[i][i] != 2:
            raise ConfigurationError("Cartan diagonal must be 2")
        for j in range(n):
            if i != j and (A[i][j] > 0 or (A[i][j] == 0) != (A[j][i] == 0)):
                raise ConfigurationError("invalid off-diagonal Cartan entries")


def _symmetrizer(A):
    n = len(A)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and A[i][j] != 0:
                    # d_i a_ij = d_j a_ji
                    val = d[i] * A[i][j] / A[j][i]
                    if d[j] is None:
                        d[j] = val
                        queue.append(j)
                    elif d[j] != val:
                        raise ConfigurationError("Cartan matrix is not symmetrizable")
    # minimal positive integers per connected component, long roots get 1
    den = 1
    for x in d:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _positive_roots(A):
    n = len(A)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for i in range(n):
            # s_i(r) = r - <r, alpha_i^vee> alpha_i
            pair = sum(r[j] * A[j][i] for j in range(n))
            s = list(r)
            s[i] -= pair
            s = tuple(s)
            if all(x >= 0 for x in s) and s not in seen:
                seen.add(s)
                queue.append(s)
    return sorted(seen, key=lambda r: (sum(r), r))


def cartan_matrix(letter: str, rank: int):
    """Bourbaki Cartan matrix; D3 is allowed here for folding B2."""
    n = rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        A[i - 1][j - 1] = aij
        A[j - 1][i - 1] = aji

    if letter == "A" and n >= 1:
        for i in range(1, n):
            link(i, i + 1)
    elif letter == "B" and n >= 2:
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 1, n, -2, -1)
    elif letter == "C" and n >= 2:
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 1, n, -1, -2)
    elif letter == "D" and n >= 3:
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif letter == "E" and n in (6, 7, 8):
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif letter == "F" and n == 4:
        link(1, 2)
        link(2, 3, -2, -1)
        link(3, 4)
    elif letter == "G" and n == 2:
        link(1, 2, -1, -3)
    else:
        raise ConfigurationError(f"unsupported Dynkin type {letter}{rank}")
    return A


@lru_cache(maxsize=None)
def build_dynkin(letter: str, rank: int) -> DynkinData:
    letter = letter.upper()
    if letter == "D" and rank < 4:
        raise ConfigurationError(f"unsupported Dynkin type D{rank} (need rank >= 4)")
    return DynkinData(letter, rank, cartan_matrix(letter, rank))


@lru_cache(maxsize=None)
def build_dynkin_any(letter: str, rank: int) -> DynkinData:
    """Like build_dynkin but also accepts D3 (used as the cover of B2)."""
    letter = letter.upper()
    return DynkinData(letter, rank, cartan_matrix(letter, rank))


def parse_type(text: str) -> DynkinData:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
    if not m:
        raise ConfigurationError(f"cannot parse Dynkin type {text!r}")
    return build_dynkin(m.group(1).upper(), int(m.group(2)))


# Thin functional wrappers, so callers can write length(D, w) etc.

def weyl_apply_simple(D: DynkinData, w: WeylElt, i: int, side: str) -> WeylElt:
    return D.apply_simple(w, i, side)


def length(D: DynkinData, w: WeylElt) -> int:
    return w.length


def is_right_ascent(D: DynkinData, w: WeylElt, i: int) -> bool:
    return D.is_right_ascent(w, i)


def is_left_ascent(D: DynkinData, w: WeylElt, i: int) -> bool:
    return D.is_left_ascent(w, i)


def demazure_step(D: DynkinData, w: WeylElt, i: int, side: str) -> WeylElt:
    return D.demazure_step(w, i, side)


def act_coweight(D: DynkinData, w: WeylElt, v) -> tuple[int, ...]:
    return D.act_coweight(w, v)


def star_coweight(D: DynkinData, v) -> tuple[int, ...]:
    return D.star_coweight(v)
