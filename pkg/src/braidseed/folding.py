"""Folding multiply-laced types out of simply-laced ones.

A folding is a diagram automorphism sigma of a simply-laced type whose
orbits become the nodes of the folded type, with d_i = |orb(i)| and
a_ij = sum over j' in orb(j) of a~_{i'j'}.  A word over the folded type
lifts by replacing each letter with its whole orbit (ascending), and the
seed of the lift folds back onto the seed of the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .clusterops import AbstractSeed, make_seed, mutate
from .errors import ConfigurationError, NotAdmissible, NotQuasiAdmissible
from .rootsys import DynkinData, build_dynkin, build_dynkin_any


@dataclass(frozen=True)
class FoldingData:
    folded: DynkinData
    cover: DynkinData
    sigma: dict          # node of the cover -> node of the cover
    orb: dict            # node of the folded type -> ascending tuple of cover nodes

    def node_of(self, k: int) -> int:
        for i, o in self.orb.items():
            if k in o:
                return i
        raise KeyError(k)


def _make(folded, cover, orb, sigma) -> FoldingData:
    F = FoldingData(folded, cover, dict(sigma), {i: tuple(sorted(o)) for i, o in orb.items()})
    _check_folding(F)
    return F


def _check_folding(F: FoldingData):
    A, At = F.folded.cartan, F.cover.cartan
    nodes = sorted(k for o in F.orb.values() for k in o)
    if nodes != list(range(1, F.cover.rank + 1)):
        raise ConfigurationError(f"orbits of {F.folded.name} do not partition the cover nodes")
    for i, o in F.orb.items():
        if F.folded.d[i - 1] != len(o):
            raise ConfigurationError(f"d_{i} != |orb({i})| for {F.folded.name}")
        # sigma cycles through the orbit
        if {F.sigma[k] for k in o} != set(o):
            raise ConfigurationError(f"orb({i}) is not a sigma-orbit")
        for a in o:
            for b in o:
                if a != b and At[a - 1][b - 1]:
                    raise ConfigurationError(f"orb({i}) does not commute")
        for j, oj in F.orb.items():
            for ip in o:
                if A[i - 1][j - 1] != sum(At[ip - 1][jp - 1] for jp in oj):
                    raise ConfigurationError(f"a_{i}{j} is not the orbit sum in {F.folded.name}")


def _cycle(*cycles):
    out = {}
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out[a] = b
    return out


def _type_c(n):
    m = 2 * n - 1
    orb = {i: (i, m + 1 - i) if i < n else (n,) for i in range(1, n + 1)}
    sigma = {k: m + 1 - k for k in range(1, m + 1)}
    return _make(build_dynkin("C", n), build_dynkin("A", m), orb, sigma)


def _type_b(n):
    cover = build_dynkin_any("D", n + 1)
    if n == 2:
        # D3 with node 1 in the middle
        orb = {1: (1,), 2: (2, 3)}
        sigma = {1: 1, 2: 3, 3: 2}
    else:
        orb = {i: (i,) for i in range(1, n)}
        orb[n] = (n, n + 1)
        sigma = {k: k for k in range(1, n)}
        sigma.update({n: n + 1, n + 1: n})
    return _make(build_dynkin("B", n), cover, orb, sigma)


def builtin_foldings() -> list:
    out = [_type_c(n) for n in (2, 3, 4)] + [_type_b(n) for n in (2, 3, 4)]
    out.append(_make(build_dynkin("F", 4), build_dynkin("E", 6),
                     {1: (2,), 2: (4,), 3: (3, 5), 4: (1, 6)},
                     {2: 2, 4: 4, **_cycle((3, 5), (1, 6))}))
    out.append(_make(build_dynkin("G", 2), build_dynkin("D", 4),
                     {1: (1, 3, 4), 2: (2,)},
                     {2: 2, **_cycle((1, 3, 4))}))
    return out


def folding_for(D: DynkinData) -> FoldingData:
    for F in builtin_foldings():
        if F.folded == D:
            return F
    raise ConfigurationError(f"no built-in folding onto {D.name}")


@dataclass(frozen=True)
class LiftMap:
    word: tuple          # the lifted word
    lam: tuple           # lam[p - 1] = position of the original letter for lifted position p
    blocks: tuple        # blocks[c] = last lifted position of the first c letters

    def fibre(self, c: int) -> tuple:
        return tuple(p for p in range(1, len(self.word) + 1) if self.lam[p - 1] == c)


def lift_word(F: FoldingData, word, order=None) -> LiftMap:
    """Replace each letter by its orbit; ``order`` maps i -> orbit order (default ascending)."""
    out, lam, blocks = [], [], [0]
    for c, i in enumerate(word, 1):
        o = (order or {}).get(abs(i), F.orb[abs(i)])
        sgn = 1 if i > 0 else -1
        for k in o:
            out.append(sgn * k)
            lam.append(c)
        blocks.append(len(out))
    return LiftMap(tuple(out), tuple(lam), tuple(blocks))


def lift_sigma(F: FoldingData, lift: LiftMap, solid) -> dict:
    """sigma on the lifted crossings: same block, letter moved by sigma."""
    out = {}
    for c in set(lift.lam):
        fib = lift.fibre(c)
        by_letter = {abs(lift.word[p - 1]): p for p in fib}
        for p in fib:
            q = by_letter[F.sigma[abs(lift.word[p - 1])]]
            if p in solid:
                out[p] = q
    return out


def _orbits(index, sigma):
    seen, out = set(), []
    for a in index:
        if a in seen:
            continue
        orb, b = [], a
        while b not in seen:
            seen.add(b)
            orb.append(b)
            b = sigma.get(b, b)
        out.append(tuple(orb))
    return out


def check_admissible(seed: AbstractSeed, sigma: dict):
    """Raise NotAdmissible naming the first violated clause."""
    for orb in _orbits(seed.index, sigma):
        fr = {a in seed.frozen for a in orb}
        if len(fr) > 1:
            raise NotAdmissible(f"clause (1): orbit {orb} mixes mutable and frozen indices")
    for (a, b), v in seed.B.items():
        if seed.b(sigma.get(a, a), sigma.get(b, b)) != v:
            raise NotAdmissible(f"clause (2): 2-form not invariant at ({a},{b})")
    for orb in _orbits(seed.index, sigma):
        if orb[0] in seed.frozen:
            continue
        for a in orb:
            for b in orb:
                if a != b and seed.b(a, b):
                    raise NotAdmissible(f"clause (3): B~[{a},{b}] != 0 inside orbit {orb}")


def fold_seed(seed: AbstractSeed, sigma: dict, label=None) -> AbstractSeed:
    """Folded seed; ``label`` maps each index to its orbit's label (default: orbit minimum)."""
    if any(d != 1 for d in seed.d.values()):
        raise NotAdmissible("the unfolded seed must have d = 1")
    check_admissible(seed, sigma)
    orbits = _orbits(seed.index, sigma)
    if label is None:
        label = {a: min(o) for o in orbits for a in o}
    names = sorted({label[a] for a in seed.index})
    size = {n: 0 for n in names}
    for a in seed.index:
        size[label[a]] += 1
    frozen = {label[a] for a in seed.frozen}
    # pull back the 2-form: every x~_{a'} becomes x_{label(a')}
    pos = {a: n for n, a in enumerate(seed.index)}
    om = {}
    for (a, b), v in seed.B.items():
        if pos[a] < pos[b]:
            la, lb = label[a], label[b]
            if la == lb:
                continue
            w = v * seed.d[b]
            if la > lb:
                la, lb, w = lb, la, -w
            om[(la, lb)] = om.get((la, lb), 0) + w
    B = {}
    for (a, b), w in om.items():
        B[(a, b)] = Fraction(w) / size[b]
        B[(b, a)] = -Fraction(w) / size[a]
    return make_seed(names, frozen, size, B)


def orbit_mutate(seed: AbstractSeed, orbit, sigma: dict | None = None) -> AbstractSeed:
    """Mutate once at each index of ``orbit``; requires quasi-admissibility."""
    orbit = tuple(orbit)
    if any(j in seed.frozen for j in orbit):
        raise NotQuasiAdmissible(f"orbit {orbit} is not mutable")
    for a in orbit:
        for b in orbit:
            if a != b and seed.b(a, b):
                raise NotQuasiAdmissible(f"arrow inside orbit {orbit}")
    orbits = _orbits(seed.index, sigma or {})
    for ok in orbits:
        if ok[0] in seed.frozen:
            continue
        for jp in orbit:
            vals = [seed.b(k, jp) for k in ok]
            if min(vals) < 0 < max(vals):
                raise NotQuasiAdmissible(f"orbit {ok} meets {jp} with both signs")
    out = seed
    for j in orbit:
        out = mutate(out, j)
    back = seed
    for j in reversed(orbit):
        back = mutate(back, j)
    assert out.B == back.B, "orbit mutation depends on the order"
    return out


@dataclass
class FoldReport:
    cartan_type: str
    word: tuple
    lifted: tuple
    passed: bool
    checks: dict
    detail: str = ""


def cross_check(F: FoldingData, word, order=None) -> FoldReport:
    """Compare Sigma_beta with the folded seed of the lifted word."""
    from .seedbuild import build_seed
    word = tuple(word)
    D, Dt = F.folded, F.cover
    lift = lift_word(F, word, order)
    s = build_seed(D, word)
    st = build_seed(Dt, lift.word)
    checks = {}
    solid_t = set(st.index)
    checks["solid_lift"] = solid_t == {p for e in s.index for p in lift.fibre(e)}
    checks["d_orbit"] = all(s.d[e] == len(F.orb[abs(word[e - 1])]) for e in s.index)
    # iota^* x~_{c'} = x_e on the whole fibre of e, so the folded order is the
    # fibre sum; the lifted table itself must be sigma-invariant
    sig = lift_sigma(F, lift, solid_t)
    bad = []
    for c in range(len(word) + 1):
        ct = lift.blocks[c]
        for k in range(1, D.rank + 1):
            for sgn in (1, -1):
                for kp in F.orb[k]:
                    row = st.ord.row(ct, sgn * kp)
                    for e in s.index:
                        total = sum(row.get(p, 0) for p in lift.fibre(e))
                        if total != s.ord.get(c, sgn * k, e):
                            bad.append((c, sgn * k, e))
                    img = st.ord.row(ct, sgn * F.sigma[kp])
                    if any(img.get(sig.get(p, p), 0) != v for p, v in row.items()):
                        bad.append((c, sgn * k, "sigma"))
    checks["ord"] = not bad
    detail = f"ord mismatch at {bad[0]}" if bad else ""
    if checks["solid_lift"]:
        sigma = sig
        label = {p: lift.lam[p - 1] for p in st.index}
        try:
            folded = fold_seed(st, sigma, label)
            checks["admissible"] = True
            checks["frozen"] = folded.frozen == s.frozen
            checks["B"] = folded.B == s.B
        except NotAdmissible as exc:
            checks["admissible"] = False
            detail = detail or str(exc)
    passed = all(checks.values())
    if not passed and not detail:
        detail = ", ".join(k for k, v in checks.items() if not v)
    return FoldReport(D.name, word, lift.word, passed, checks, detail)


def describe(F: FoldingData) -> str:
    orbs = ", ".join(f"{i}->{{{','.join(map(str, o))}}}" for i, o in sorted(F.orb.items()))
    return f"{F.folded.name} <- {F.cover.name}: {orbs}"

