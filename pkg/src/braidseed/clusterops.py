"""Abstract seeds: mutation, freezing, contraction, relabeling, quasi-equivalence.

A seed carries the full square coefficient matrix of its 2-form, not just the
extended exchange matrix: ``B[i, j]`` is defined for every pair of indices
with ``d_j B[i, j] = -d_i B[j, i]``, and the 2-form is
``sum_{i<j} d_j B[i, j] dlog x_i ^ dlog x_j``.  The extended exchange matrix
is the restriction to mutable columns.  Mutating the whole square matrix by
the usual rule is the pullback of the 2-form, so frozen-frozen entries stay
meaningful (they may be non-integral).

Optional ``variables`` are exponent vectors of the cluster variables in some
shared character lattice Z^N, used by ``quasi_equivalent``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import AssumptionViolated, IncomparableLattices, NonIntegral, NotMutable
from .lattice import same_lattice, solve


def _sign(x):
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class AbstractSeed:
    index: tuple                 # labels in display order
    frozen: frozenset
    d: dict                      # label -> positive int
    B: dict                      # (i, j) -> Fraction, nonzero entries only
    variables: dict | None = field(default=None, compare=False)

    @property
    def mutable(self) -> tuple:
        return tuple(i for i in self.index if i not in self.frozen)

    @property
    def frozen_sorted(self) -> tuple:
        return tuple(i for i in self.index if i in self.frozen)

    @property
    def rank(self) -> int:
        return len(self.index) - len(self.frozen)

    def b(self, i, j):
        return self.B.get((i, j), 0)

    def extended(self, rows=None, cols=None):
        """Integer matrix B~ with given row/column label orders."""
        rows = self.index if rows is None else rows
        cols = self.mutable if cols is None else cols
        out = []
        for i in rows:
            row = []
            for j in cols:
                v = self.b(i, j)
                if Fraction(v).denominator != 1:
                    raise NonIntegral(f"B~[{i},{j}] = {v}")
                row.append(int(v))
            out.append(row)
        return out

    def principal(self):
        return self.extended(self.mutable, self.mutable)

    def omega(self):
        """{(i, j): coefficient of dlog x_i ^ dlog x_j} for i before j in index order."""
        pos = {x: n for n, x in enumerate(self.index)}
        return {(i, j): self.d[j] * v for (i, j), v in self.B.items() if pos[i] < pos[j]}

    def check(self):
        """Skew-symmetrizability of the whole matrix and integrality of B~."""
        for (i, j), v in self.B.items():
            if self.d[j] * v != -self.d[i] * self.b(j, i):
                raise AssumptionViolated(f"d_j B[{i},{j}] != -d_i B[{j},{i}]")
        self.extended()
        return True


def make_seed(index, frozen, d, B, variables=None) -> AbstractSeed:
    clean = {k: Fraction(v) for k, v in B.items() if v}
    return AbstractSeed(tuple(index), frozenset(frozen), dict(d), clean, variables)


def from_extended(index, frozen, d, Bext, rows=None, cols=None) -> AbstractSeed:
    """Seed from an integer B~ (rows x mutable cols); frozen-frozen part set to 0."""
    index = tuple(index)
    rows = index if rows is None else tuple(rows)
    mut = [i for i in index if i not in frozen]
    cols = mut if cols is None else list(cols)
    B = {}
    for r, i in enumerate(rows):
        for c, j in enumerate(cols):
            v = Fraction(Bext[r][c])
            if v:
                B[(i, j)] = v
                B[(j, i)] = -v * d[j] / d[i]
    return make_seed(index, frozen, d, B)


def mutate(seed: AbstractSeed, k) -> AbstractSeed:
    if k not in seed.index or k in seed.frozen:
        raise NotMutable(f"index {k} is not mutable")
    col = {i: seed.b(i, k) for i in seed.index}
    if any(Fraction(v).denominator != 1 for v in col.values()):
        raise NonIntegral(f"seed is not integral at {k}")
    B = {}
    for i in seed.index:
        for j in seed.index:
            v = seed.b(i, j)
            if i == k or j == k:
                v = -v
            else:
                bik, bkj = seed.b(i, k), seed.b(k, j)
                v = v + _sign(bik) * max(bik * bkj, 0)
            if v:
                B[(i, j)] = Fraction(v)
    # exponent vectors do not survive mutation; callers tracking actual
    # functions (the type A verification) mutate those themselves
    return AbstractSeed(seed.index, seed.frozen, seed.d, B, None)


def mutate_seq(seed: AbstractSeed, seq) -> AbstractSeed:
    """Apply mu_{a_1} o ... o mu_{a_r}, i.e. a_r first."""
    for k in reversed(tuple(seq)):
        seed = mutate(seed, k)
    return seed


def exchange_monomials(seed: AbstractSeed, k):
    """({j: exp} positive part, {j: exp} negative part) of the exchange binomial at k."""
    pos, neg = {}, {}
    for j in seed.index:
        v = seed.b(j, k)
        if v > 0:
            pos[j] = int(v)
        elif v < 0:
            neg[j] = int(-v)
    return pos, neg


def freeze(seed: AbstractSeed, S) -> AbstractSeed:
    S = set(S)
    bad = S - set(seed.mutable)
    if bad:
        raise NotMutable(f"cannot freeze non-mutable indices {sorted(bad)}")
    return replace(seed, frozen=seed.frozen | S)


def in_neighbours(seed: AbstractSeed, s):
    """Mutable j with an arrow j -> s, i.e. B[j, s] > 0."""
    return tuple(j for j in seed.mutable if j != s and seed.b(j, s) > 0)


def is_sink(seed: AbstractSeed, s) -> bool:
    return all(seed.b(s, j) <= 0 for j in seed.mutable if j != s)


def contract(seed: AbstractSeed, s, f) -> AbstractSeed:
    """Contraction at a mutable sink s with frozen partner f.

    The 2-form is rewritten with dlog x_s := 0 and
    dlog x_f := dlog M1 - dlog M2, where x_s x_s' = M1 + x_f M2.
    """
    if s in seed.frozen or s not in seed.index:
        raise AssumptionViolated(f"{s} is not mutable")
    if f not in seed.frozen:
        raise AssumptionViolated(f"{f} is not frozen")
    if not is_sink(seed, s):
        raise AssumptionViolated(f"{s} is not a sink")
    if abs(seed.b(f, s)) != 1 or any(seed.b(f, j) for j in seed.mutable if j != s):
        raise AssumptionViolated(f"row {f} is not +-1 at {s} and 0 elsewhere")
    pos, neg = exchange_monomials(seed, s)
    # x_f sits in the monomial whose sign matches B[f, s]
    M2, M1 = (pos, neg) if seed.b(f, s) > 0 else (neg, pos)
    M2 = {j: v for j, v in M2.items() if j != f}
    subst = {j: Fraction(M1.get(j, 0) - M2.get(j, 0)) for j in seed.index}
    keep = tuple(i for i in seed.index if i not in (s, f))
    om = {}
    for (i, j), v in seed.omega().items():
        vi = {i: Fraction(1)} if i not in (s, f) else ({} if i == s else subst)
        vj = {j: Fraction(1)} if j not in (s, f) else ({} if j == s else subst)
        for a, x in vi.items():
            for b, y in vj.items():
                if a != b and x and y:
                    om[(a, b)] = om.get((a, b), 0) + v * x * y
    pos_of = {x: n for n, x in enumerate(keep)}
    B = {}
    for (a, b), v in om.items():
        if pos_of[a] > pos_of[b]:
            a, b, v = b, a, -v
        B[(a, b)] = B.get((a, b), 0) + v / seed.d[b]
        B[(b, a)] = B.get((b, a), 0) - v / seed.d[a]
    frozen = (seed.frozen - {f}) | set(in_neighbours(seed, s))
    d = {i: seed.d[i] for i in keep}
    return make_seed(keep, frozen, d, B)


def relabel(seed: AbstractSeed, pi) -> AbstractSeed:
    """Rename index i to pi[i]; labels missing from pi are kept."""
    p = lambda i: pi.get(i, i)
    new_index = tuple(p(i) for i in seed.index)
    if len(set(new_index)) != len(new_index):
        raise ValueError("relabeling is not injective")
    order = tuple(sorted(new_index, key=lambda x: (str(type(x)), x)))
    B = {(p(i), p(j)): v for (i, j), v in seed.B.items()}
    variables = None
    if seed.variables is not None:
        variables = {p(i): v for i, v in seed.variables.items()}
    return AbstractSeed(order, frozenset(p(i) for i in seed.frozen),
                        {p(i): v for i, v in seed.d.items()}, B, variables)


def parse_mutation_seq(text: str) -> tuple[int, ...]:
    """'mu(4,3,4)', 'μ(4,3,4)', '4 3 4' or '4,3,4' -> (4, 3, 4)."""
    text = text.strip()
    m = re.fullmatch(r"(?:mu|μ)_?\((.*)\)", text)
    if m:
        text = m.group(1)
    parts = [p for p in re.split(r"[\s,]+", text) if p]
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"bad mutation sequence {text!r}") from exc


@dataclass
class QuasiReport:
    equivalent: bool
    reason: str = ""
    witnesses: dict = field(default_factory=dict)   # mutable k -> {frozen f: exponent}


def _pairing_matrix(seed, vecs, N):
    """The 2-form pushed into the shared lattice: sum W_ij (v_i ^ v_j)."""
    W = [[Fraction(0)] * N for _ in range(N)]
    for (i, j), w in seed.omega().items():
        vi, vj = vecs[i], vecs[j]
        for a in range(N):
            if vi[a]:
                for b in range(N):
                    if vj[b]:
                        t = w * vi[a] * vj[b]
                        W[a][b] += t
                        W[b][a] -= t
    return W


def quasi_equivalent(seed1: AbstractSeed, seed2: AbstractSeed, vecs1=None, vecs2=None) -> QuasiReport:
    """Decide seed1 ~ seed2 on exponent vectors in one shared lattice.

    ``vecs1``/``vecs2`` default to the seeds' own ``variables``.  Mutable
    labels must agree; frozen labels may differ.
    """
    vecs1 = seed1.variables if vecs1 is None else vecs1
    vecs2 = seed2.variables if vecs2 is None else vecs2
    if vecs1 is None or vecs2 is None:
        raise IncomparableLattices("no shared character lattice supplied")
    N = len(next(iter(vecs1.values()), ()))
    if any(len(v) != N for v in list(vecs1.values()) + list(vecs2.values())):
        raise IncomparableLattices("exponent vectors live in different lattices")
    if set(seed1.mutable) != set(seed2.mutable):
        return QuasiReport(False, "mutable index sets differ")
    if len(seed1.frozen) != len(seed2.frozen):
        return QuasiReport(False, "different numbers of frozen variables")
    for k in seed1.mutable:
        if seed1.d[k] != seed2.d[k]:
            return QuasiReport(False, f"d differs at {k}")
    if sorted(seed1.d[f] for f in seed1.frozen) != sorted(seed2.d[f] for f in seed2.frozen):
        return QuasiReport(False, "frozen d multisets differ")
    F1 = [list(vecs1[f]) for f in seed1.frozen_sorted]
    F2 = [list(vecs2[f]) for f in seed2.frozen_sorted]
    if not same_lattice(F1, F2, N):
        return QuasiReport(False, "frozen sublattices differ")
    witnesses = {}
    for k in seed1.mutable:
        diff = [b - a for a, b in zip(vecs1[k], vecs2[k])]
        x = solve(F1, diff)
        if x is None:
            return QuasiReport(False, f"variable {k} differs by a non-frozen monomial")
        witnesses[k] = {f: c for f, c in zip(seed1.frozen_sorted, x) if c}
    if _pairing_matrix(seed1, vecs1, N) != _pairing_matrix(seed2, vecs2, N):
        return QuasiReport(False, "2-forms differ")
    return QuasiReport(True, "", witnesses)
