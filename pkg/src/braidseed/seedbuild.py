"""Assemble the seed of a double braid word.

Pipeline: crossings -> order-of-vanishing table -> chamber matrix M (upper
unitriangular) -> cluster variables as Laurent monomials in chamber minors
(rows of M^-1) -> 2-form coefficients -> exchange matrix.

The 2-form is a sum over solid crossings c of
``sign(i_c) d_|i_c| L_{c-1,i_c} ^ L_{c,i_c}`` where
``L_{c,i} = 1/2 sum_k a_ik dlog Delta_{c,k}`` (k of the same sign as i), and
each ``dlog Delta_{c,k}`` expands through the ord table into ``dlog x_e``.
All arithmetic is exact (Fractions); integrality is enforced at the end.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .braidword import Crossings, compute_crossings, format_word, mutable_frozen
from .clusterops import AbstractSeed, make_seed
from .errors import InternalInconsistency, NonIntegral
from .gamma import OrdTable, ord_table
from .lattice import inverse_unitriangular, spans_all
from .rootsys import DynkinData


@dataclass(frozen=True)
class Seed(AbstractSeed):
    """An AbstractSeed together with the data it was built from."""

    cartan_type: str = ""
    word: tuple = ()
    ord: OrdTable | None = None
    chamber: tuple = ()          # M as a tuple of rows, indexed by solid order
    monomials: dict | None = None   # e -> {c: exponent of Delta_c}
    omega_coeffs: dict | None = None

    @property
    def solid(self) -> tuple:
        return self.index


def chamber_matrix(D: DynkinData, word, table: OrdTable) -> list:
    """M[c][e] = ord of the chamber minor Delta_{c-1, i_c} along V_e, c, e solid."""
    J = table.solid
    M = [[table.get(c - 1, word[c - 1], e) for e in J] for c in J]
    for a in range(len(J)):
        if M[a][a] != 1 or any(M[a][b] for b in range(a)):
            raise InternalInconsistency(f"chamber matrix of {format_word(word)} is not unitriangular")
        if any(v < 0 for v in M[a]):
            raise InternalInconsistency("negative order of vanishing in chamber matrix")
    return M


def cluster_monomials(M, labels) -> dict:
    """{e: {c: exponent}} with x_e = prod_c Delta_c^exponent (rows of M^-1)."""
    inv = inverse_unitriangular(M)
    return {e: {c: inv[a][b] for b, c in enumerate(labels) if inv[a][b]}
            for a, e in enumerate(labels)}


def _dlog(table: OrdTable, c: int, k: int) -> dict:
    return {e: Fraction(v) for e, v in table.row(c, k).items()}


def _L(D, table, c, i) -> dict:
    out = {}
    sgn = 1 if i > 0 else -1
    for k in range(1, D.rank + 1):
        a = D.cartan[abs(i) - 1][k - 1]
        if a:
            for e, v in _dlog(table, c, sgn * k).items():
                out[e] = out.get(e, 0) + Fraction(a, 2) * v
    return out


def _wedge_into(acc, coeff, left, right):
    for e, x in left.items():
        for f, y in right.items():
            if e == f:
                continue
            v = coeff * x * y
            if e < f:
                acc[(e, f)] = acc.get((e, f), 0) + v
            else:
                acc[(f, e)] = acc.get((f, e), 0) - v


def two_form(D: DynkinData, word, table: OrdTable, include_hollow: bool = False) -> dict:
    """{(e, f): Omega_ef} for e < f, nonzero entries only.

    ``include_hollow`` also adds the terms of hollow crossings, which must
    cancel; it exists for testing that identity.
    """
    word = tuple(word)
    cs = range(1, len(word) + 1) if include_hollow else table.solid
    acc = {}
    for c in cs:
        i = word[c - 1]
        coeff = (1 if i > 0 else -1) * D.d[abs(i) - 1]
        _wedge_into(acc, coeff, _L(D, table, c - 1, i), _L(D, table, c, i))
    return {k: v for k, v in acc.items() if v}


def extract_B(D: DynkinData, word, omega: dict, crossings: Crossings, frozen) -> dict:
    """Full coefficient matrix {(c, e): B_ce} from Omega, checking integrality of B~."""
    d = crossings.d_of
    B = {}
    for (c, e), v in omega.items():
        B[(c, e)] = v / d[e]
        B[(e, c)] = -v / d[c]
    for (r, col), v in B.items():
        if col not in frozen and v.denominator != 1:
            raise NonIntegral(f"B~[{r},{col}] = {v} for {format_word(word)} in {D.name}")
    return B


def build_seed(D: DynkinData, word, crossings: Crossings | None = None) -> Seed:
    """Seed of a valid word; results are cached (seeds are immutable values)."""
    return _build_seed(D, tuple(word))


@lru_cache(maxsize=4096)
def _build_seed(D: DynkinData, word: tuple) -> Seed:
    crossings = compute_crossings(D, word)
    table = ord_table(D, word, crossings)
    if D.letter == "A" and table.max_entry() > 1:
        raise InternalInconsistency(f"type A order of vanishing above 1 in {format_word(word)}")
    J = crossings.solid
    M = chamber_matrix(D, word, table)
    mono = cluster_monomials(M, J)
    _, frozen = mutable_frozen(D, word, crossings)
    omega = two_form(D, word, table)
    B = extract_B(D, word, omega, crossings, set(frozen))
    base = make_seed(J, frozen, crossings.d_of, B)
    seed = Seed(base.index, base.frozen, base.d, base.B, None,
                cartan_type=D.name, word=word, ord=table, chamber=tuple(map(tuple, M)),
                monomials=mono, omega_coeffs=omega)
    seed.check()
    return seed


def really_full_rank(seed: AbstractSeed) -> bool:
    """Rows of B~ span Z^n (n = number of mutable indices)."""
    n = len(seed.mutable)
    if n == 0:
        return True
    return spans_all(seed.extended(), n)


def json_layout(seed: AbstractSeed):
    """Row and column labels used for the exported B: mutable rows first."""
    rows = tuple(seed.mutable) + tuple(seed.frozen_sorted)
    return rows, tuple(seed.mutable)


def seed_to_dict(seed: Seed) -> dict:
    rows, cols = json_layout(seed)
    out = {
        "cartan_type": seed.cartan_type,
        "word": format_word(seed.word),
        "solid": list(seed.index),
        "mutable": list(seed.mutable),
        "frozen": list(seed.frozen_sorted),
        "d": [seed.d[e] for e in seed.index],
        "ord_table": [[c, k, e, v] for (c, k, e), v in seed.ord.sparse_triples()] if seed.ord else [],
        "cluster_in_chamber_minors": {str(e): {str(c): v for c, v in sorted(m.items())}
                                      for e, m in sorted((seed.monomials or {}).items())},
        "B_rows": list(rows),
        "B_cols": list(cols),
        "B": seed.extended(rows, cols),
    }
    return out


def seed_from_dict(data: dict) -> AbstractSeed:
    from .clusterops import from_extended
    index = tuple(data["solid"])
    d = dict(zip(index, data["d"]))
    return from_extended(index, set(data["frozen"]), d, data["B"],
                         rows=data.get("B_rows"), cols=data.get("B_cols"))


def to_dot(seed: AbstractSeed, name: str = "seed") -> str:
    lines = [f"digraph {json.dumps(name)} {{"]
    for e in seed.index:
        shape = "box" if e in seed.frozen else "circle"
        lines.append(f'  "{e}" [shape={shape}];')
    for c in seed.index:
        for e in seed.mutable:
            v = seed.b(c, e)
            if v > 0:
                src, dst = c, e
            elif v < 0 and c in seed.frozen:
                # mutable -> frozen arrows, read off the frozen row of B~
                src, dst = e, c
            else:
                continue
            label = f' [label="{abs(v)}"]' if abs(v) != 1 else ""
            lines.append(f'  "{src}" -> "{dst}"{label};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_seed(seed: Seed, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(seed_to_dict(seed), separators=(",", ":")) + "\n").encode()
    if fmt == "dot":
        return to_dot(seed, f"{seed.cartan_type} {format_word(seed.word)}").encode()
    raise ValueError(f"unknown format {fmt!r}")
