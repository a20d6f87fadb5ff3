"""Exponent cocharacters of cluster variables and orders of vanishing.

``gamma(D, a, k, b)`` is the recursive cocharacter attached to Weyl group
elements a, b and a node k.  ``gamma_plus(D, word, crossings, c, e)`` is the
exponent of the cluster variable x_e in the torus-valued function at
position c (the "plus" chain), and ``ord_table`` pairs these with fundamental
weights to get orders of vanishing of every grid minor along every Deodhar
hypersurface.

Cocharacters are integer tuples in the simple-coroot basis, so pairing with
the fundamental weight omega_l is just coordinate l.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braidword import Crossings, compute_aps, compute_crossings, op_word, pds
from .errors import InternalInconsistency
from .rootsys import DynkinData, WeylElt

_CACHES: dict = {}


def _cache_for(D):
    return _CACHES.setdefault(D, {})


def clear_cache():
    _CACHES.clear()


def _add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def _sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def _scale(c, v):
    return tuple(c * x for x in v)


def _smallest(cands_i, cands_j):
    return cands_i[0], cands_j[0]


def gamma(D: DynkinData, a: WeylElt, k: int, b: WeylElt, pick=None) -> tuple[int, ...]:
    """Recursive cocharacter gamma(a, k, b).

    ``pick(cands_i, cands_j)`` chooses the generators used in the recursive
    step; the default takes the smallest admissible index of each kind and
    shares one memo table per root system.  Any other ``pick`` gets a private
    memo table.
    """
    if pick is None:
        return _gamma(D, a, k, b, _cache_for(D), _smallest)
    return _gamma(D, a, k, b, {}, pick)


def admissible_choices(D: DynkinData, a: WeylElt, b: WeylElt):
    """Indices i with s_i a > a and j with b s_j < b."""
    cands_i = [i for i in range(1, D.rank + 1) if D.is_left_ascent(a, i)]
    cands_j = [j for j in range(1, D.rank + 1) if not D.is_right_ascent(b, j)]
    return cands_i, cands_j


def _gamma(D, a, k, b, memo, pick):
    key = (a.mat, k, b.mat)
    hit = memo.get(key)
    if hit is not None:
        return hit
    zero = (0,) * D.rank
    if not D.is_right_ascent(a, k):
        res = zero
    elif a.length == D.n_pos_roots or b.length == D.n_pos_roots:
        res = zero
    elif b.length == 0:
        res = D.act_coweight(a, D.coroot(k))
    else:
        cands_i, cands_j = admissible_choices(D, a, b)
        i, j = pick(cands_i, cands_j)
        res = _gamma_step(D, a, k, b, i, j, memo, pick)
    memo[key] = res
    return res


def gamma_step(D: DynkinData, a: WeylElt, k: int, b: WeylElt, i: int, j: int, pick=None):
    """One recursive step with a prescribed generator pair (i, j).

    Sub-evaluations use ``gamma`` with the given ``pick``.  Used for testing
    that the result does not depend on the pair.
    """
    if not D.is_right_ascent(a, k) or a.length == D.n_pos_roots or \
            b.length == D.n_pos_roots or b.length == 0:
        return gamma(D, a, k, b, pick)
    if not D.is_left_ascent(a, i) or D.is_right_ascent(b, j):
        raise ValueError("inadmissible generator pair")
    memo = _cache_for(D) if pick is None else {}
    return _gamma_step(D, a, k, b, i, j, memo, pick or _smallest)


def _gamma_step(D, a, k, b, i, j, memo, pick):
    a1 = D.apply_simple(a, i, "left")
    b1 = D.apply_simple(b, j, "right")
    ask = D.demazure_step(a, k, "right")
    a1sk = D.demazure_step(a1, k, "right")
    len_top = D.demazure(a1sk, b).length
    w = D.demazure(ask, b)
    len_bot = D.demazure(ask, b1).length
    if len_top < w.length or w.length < len_bot:
        raise InternalInconsistency("Demazure products are not monotone")
    if len_top > w.length:
        # case (1)
        return D.act_coweight(D.simple(i), _gamma(D, a1, k, b, memo, pick))
    if w.length > len_bot:
        # case (2)
        return _gamma(D, a, k, b1, memo, pick)
    alpha = D.coroot(i)
    beta = tuple(-x for x in D.act_coweight(w, D.coroot(j)))
    if alpha != beta:
        # case (3a): solve g(a1,b) - g(a,b1) = x alpha + y beta, keep the beta part
        g_b1 = _gamma(D, a, k, b1, memo, pick)
        diff = _sub(_gamma(D, a1, k, b, memo, pick), g_b1)
        y = _solve_beta_coeff(diff, i - 1, beta)
        return _add(g_b1, _scale(y, beta))
    # case (3b)
    g11 = _gamma(D, a1, k, b1, memo, pick)
    g_a1 = _gamma(D, a1, k, b, memo, pick)
    g_b1 = _gamma(D, a, k, b1, memo, pick)
    row = D.cartan[i - 1]
    other = -sum(row[l] * g11[l] for l in range(D.rank) if l != i - 1)
    val = -g11[i - 1] + min(g_a1[i - 1] + g_b1[i - 1], other)
    return g11[:i - 1] + (val,) + g11[i:]


def _solve_beta_coeff(diff, i0, beta):
    """Integer y with diff - y*beta supported on coordinate i0 only."""
    y = None
    for l, bl in enumerate(beta):
        if l == i0:
            continue
        if bl == 0:
            if diff[l] != 0:
                raise InternalInconsistency("difference not in span of alpha, beta")
            continue
        q, r = divmod(diff[l], bl)
        if r or (y is not None and y != q):
            raise InternalInconsistency("no integral solution in span of alpha, beta")
        y = q
    if y is None:
        raise InternalInconsistency("alpha and beta are collinear in case (3a)")
    return y


def _suffix_memo(D):
    return _CACHES.setdefault(("suffix", D), {})


def gamma_plus(D: DynkinData, word, crossings: Crossings | None, c: int, e: int, pick=None):
    """Exponent cocharacter of x_e in the plus torus function at position c.

    Only the letters after c matter, so the work is done on the suffix.
    """
    word = tuple(word)
    if e <= c:
        return (0,) * D.rank
    if pick is not None:
        return _suffix_gamma(D, word[c:], e - c, {}, pick)
    return _suffix_gamma(D, word[c:], e - c, _suffix_memo(D), None)


def _suffix_gamma(D, S, e, memo, pick):
    key = (S, e)
    hit = memo.get(key)
    if hit is None:
        hit = memo[key] = _suffix_gamma_uncached(D, S, e, memo, pick)
    return hit


def _suffix_gamma_uncached(D, S, e, memo, pick):
    u, solid = pds(D, S)
    if e not in solid:
        raise InternalInconsistency(f"position {e} of {S} is not solid")
    k = S[e - 1]
    if e == 1:
        # t_1 carries x_1 to the first power
        return D.coroot(k) if k > 0 else D.act_coweight(D.inverse(u[0]), D.coroot(-k))
    if solid[0] != 1:
        # hollow first letter: s_i acts on the plus side, the minus side is inert
        rest = _suffix_gamma(D, S[1:], e - 1, memo, pick)
        return D.act_coweight(D.simple(S[0]), rest) if S[0] > 0 else rest
    if k < 0:
        g = _suffix_gamma(D, op_word(D, S), e, memo, pick)
        return D.act_coweight(D.inverse(u[0]), tuple(-x for x in D.act_coweight(D.w0, g)))
    a, b = _canonical_pair(D, S, e, u)
    return gamma(D, a, k, b, pick)


def _canonical_pair(D, S, e, u):
    """Demazure products (a, b) of a word (-b*rev) a k k equivalent to (S, e).

    Letters before e are sorted negatives-first by commutation moves; every
    such swap sits left of e, so x_e is untouched even when it mutates.  The
    hollow tail after e is replaced by k followed by a reduced word, whose
    letters are then flipped to negatives at the right end and pushed left
    past e.  A push past e must not be special, since that would move the
    solid marker off k; the next right descent is tried instead.
    """
    k = S[e - 1]
    mid = S[:e - 1]
    negs = tuple(x for x in mid if x < 0)
    poss = tuple(x for x in mid if x > 0)
    tail = D.mul(D.simple(k), D.mul(D.inverse(u[e]), D.w0))
    word = list(negs + poss + (k, k) + tuple(D.reduced_word(tail)))
    pos_e = len(negs) + len(poss) + 1
    if not _push_tail(D, word, pos_e, tail):
        raise InternalInconsistency(f"no non-special route to canonical form for {S}, e={e}")
    a = D.identity
    for x in poss:
        a = D.demazure_step(a, x, "right")
    b = D.identity
    for x in reversed(word[:len(word) - len(poss) - 2]):
        b = D.demazure_step(b, D.star[-x], "right")
    return a, b


def _push_tail(D, word, pos_e, rest):
    """Depth-first over right descents of ``rest``; mutates ``word`` on success."""
    if rest.length == 0:
        return True
    n_tail = rest.length
    head = word[:pos_e + 1]           # ... k k
    for x in range(1, D.rank + 1):
        if D.is_right_ascent(rest, x):
            continue
        shorter = D.apply_simple(rest, x, "right")
        u, _ = pds(D, head + D.reduced_word(shorter) + [x])
        # the mover crosses the hollow k first, then e; u between e and the
        # mover is the PDS value just right of e
        mid = u[pos_e]
        if D.mul(D.simple(D.star[x]), mid) == D.mul(mid, D.simple(word[pos_e - 1])):
            continue
        trial = head[:]
        trial.insert(pos_e - 1 - _count_pos(head, pos_e), -D.star[x])
        trial += D.reduced_word(shorter)
        if _push_tail(D, trial, pos_e + 1, shorter):
            word[:] = trial
            return True
    return False


def _count_pos(head, pos_e):
    n = 0
    for x in reversed(head[:pos_e - 1]):
        if x < 0:
            break
        n += 1
    return n


@dataclass
class OrdTable:
    """Orders of vanishing ord[(c, k), e] for c in [0, m], k in +-I, e in J."""

    word: tuple
    solid: tuple
    rank: int
    gamma_plus: dict   # (c, e) -> cocharacter, only for c < e
    entries: dict      # (c, k, e) -> positive integer; absent means 0

    def get(self, c: int, k: int, e: int) -> int:
        return self.entries.get((c, k, e), 0)

    def row(self, c: int, k: int) -> dict:
        """{e: ord} for the grid minor at (c, k), nonzero entries only."""
        return {e: self.entries[(c, k, e)] for e in self.solid if (c, k, e) in self.entries}

    def sparse_triples(self):
        return sorted(((c, k, e), v) for (c, k, e), v in self.entries.items())

    def max_entry(self) -> int:
        return max(self.entries.values(), default=0)


def ord_table(D: DynkinData, word, crossings: Crossings | None = None, pick=None) -> OrdTable:
    word = tuple(word)
    if crossings is None:
        crossings = compute_crossings(D, word)
    gp, entries = {}, {}
    for e in crossings.solid:
        for c in range(e):
            g = gamma_plus(D, word, crossings, c, e, pick)
            gp[(c, e)] = g
            if not any(g):
                continue
            gm = D.act_coweight(crossings.u_seq[c], g)
            for k in range(1, D.rank + 1):
                for key, val in (((c, k, e), g[k - 1]), ((c, -k, e), gm[k - 1])):
                    if val < 0:
                        raise InternalInconsistency(
                            f"negative order {val} at (c,k,e)={key} for word {word}")
                    if val:
                        entries[key] = val
    table = OrdTable(word, crossings.solid, D.rank, gp, entries)
    for e in crossings.solid:
        k = word[e - 1]
        if table.get(e - 1, k, e) != 1:
            raise InternalInconsistency(f"chamber minor at {e} does not vanish to order 1")
    return table


def aps_zero_check(D: DynkinData, word, crossings: Crossings | None = None,
                   table: OrdTable | None = None) -> list:
    """Compare ord == 0 with the almost-positive-sequence criterion.

    Returns a list of mismatching (c, k, e) triples; empty means agreement.
    """
    word = tuple(word)
    if crossings is None:
        crossings = compute_crossings(D, word)
    if table is None:
        table = ord_table(D, word, crossings)
    m = len(word)
    fund = [tuple(int(j == k) for j in range(D.rank)) for k in range(D.rank)]
    mismatches = []
    for e in crossings.solid:
        aps = compute_aps(D, word, crossings, e).u_aps
        for c in range(m + 1):
            u, v = crossings.u_seq[c], aps[c]
            for k in range(1, D.rank + 1):
                om = fund[k - 1]
                same_pos = u == v or D.act_weight(u, om) == D.act_weight(v, om)
                same_neg = u == v or D.act_weight(D.inverse(u), om) == D.act_weight(D.inverse(v), om)
                if (table.get(c, k, e) == 0) != same_pos:
                    mismatches.append((c, k, e))
                if (table.get(c, -k, e) == 0) != same_neg:
                    mismatches.append((c, -k, e))
    return mismatches
