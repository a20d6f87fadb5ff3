import random
from fractions import Fraction

import pytest

from braidseed.clusterops import (contract, exchange_monomials, freeze, from_extended,
                                  make_seed, mutate, mutate_seq, parse_mutation_seq,
                                  quasi_equivalent, relabel)
from braidseed.errors import AssumptionViolated, IncomparableLattices, NotMutable
from braidseed.rootsys import parse_type
from braidseed.seedbuild import build_seed

A1 = parse_type("A1")


def random_seed(rng, n=None, m=None):
    n = n or rng.randint(1, 5)
    m = rng.randint(0, 3) if m is None else m
    index = tuple(range(1, n + m + 1))
    d = {i: rng.choice([1, 1, 2, 3]) for i in index}
    frozen = set(index[n:])
    # B d skew-symmetric: B_ij = s_ij * l / d_j with l a multiple of lcm
    B = {}
    for a in index:
        for b in index:
            if a < b and not (a in frozen and b in frozen):
                w = rng.randint(-2, 2) * d[a] * d[b]
                if w:
                    B[(a, b)] = Fraction(w, d[b])
                    B[(b, a)] = Fraction(-w, d[a])
    return make_seed(index, frozen, d, B)


def test_mutate_normative():
    s = build_seed(A1, (1, 1, 1))
    t = mutate(s, 2)
    assert t.extended() == [[-1], [0]]
    assert exchange_monomials(s, 2) == ({1: 1}, {})
    with pytest.raises(NotMutable):
        mutate(s, 1)
    with pytest.raises(NotMutable):
        mutate(s, 7)


def test_mutation_properties():
    rng = random.Random(23)
    for _ in range(1000):
        s = random_seed(rng)
        k = rng.choice(s.mutable)
        t = mutate(s, k)
        t.check()
        assert t.d == s.d
        assert mutate(t, k).B == s.B
        assert all(Fraction(v).denominator == 1 for row in t.extended() for v in row)


def test_mutate_seq_order():
    rng = random.Random(4)
    s = random_seed(rng, n=4, m=1)
    assert mutate_seq(s, (1, 2, 3)).B == mutate(mutate(mutate(s, 3), 2), 1).B
    assert parse_mutation_seq("mu(4,3,4)") == (4, 3, 4)
    assert parse_mutation_seq("μ(6,3,4)") == (6, 3, 4)
    assert parse_mutation_seq("4 3 4") == parse_mutation_seq("4,3,4") == (4, 3, 4)
    with pytest.raises(ValueError):
        parse_mutation_seq("4 x")


def test_freeze():
    rng = random.Random(6)
    for _ in range(50):
        s = random_seed(rng, n=4)
        assert freeze(s, ()) == s
        assert freeze(s, s.mutable).rank == 0
        a, b = s.mutable[0], s.mutable[-1]
        if a != b:
            assert mutate(freeze(s, [a]), b).B == freeze(mutate(s, b), [a]).B
    with pytest.raises(NotMutable):
        freeze(build_seed(A1, (1, 1, 1)), [1])


def test_contract_normative():
    s = build_seed(A1, (1, 1, 1))
    c = contract(s, 2, 1)
    assert c.index == () and c.B == {}


def test_contract_isolated_pair():
    s = make_seed((1, 2, 3, 4), {3, 4}, {i: 1 for i in (1, 2, 3, 4)},
                  {(1, 2): 1, (2, 1): -1, (3, 1): 1, (1, 3): -1, (4, 2): 1, (2, 4): -1})
    # 1 -> 2: vertex 1 is not a sink, 2 is; row 4 is 1 at 2 and 0 at 1
    c = contract(s, 2, 4)
    assert c.index == (1, 3)
    # in-neighbour 1 of 2 gets frozen: rank n - q - 1, dimension n + m - 2
    assert c.rank == 0 and len(c.index) == 2
    with pytest.raises(AssumptionViolated):
        contract(s, 1, 3)
    with pytest.raises(AssumptionViolated):
        contract(s, 2, 3)
    plain = make_seed((1, 2, 3), {2, 3}, {1: 1, 2: 1, 3: 1}, {(2, 1): 1, (1, 2): -1, (3, 1): 1, (1, 3): -1})
    assert contract(plain, 1, 2).index == (3,)


def test_relabel():
    s = build_seed(A1, (1, 1, 1))
    assert relabel(s, {}).B == s.B
    t = relabel(s, {1: 2, 2: 1})
    assert t.frozen == {2} and t.b(2, 1) == 1
    assert relabel(t, {1: 2, 2: 1}).B == s.B
    with pytest.raises(ValueError):
        relabel(s, {1: 2})


def test_quasi_equivalence_examples():
    s = make_seed((1, 2), {1}, {1: 1, 2: 1}, {(1, 2): 1, (2, 1): -1})
    vecs = {1: (1, 0), 2: (0, 1)}
    rep = quasi_equivalent(s, s, vecs, vecs)
    assert rep.equivalent and rep.witnesses == {2: {}}
    # x_2 -> x_2 x_1 keeps dlog x_1 ^ dlog x_2
    rep = quasi_equivalent(s, s, vecs, {1: (1, 0), 2: (1, 1)})
    assert rep.equivalent and rep.witnesses == {2: {1: 1}}
    t = make_seed((1, 2, 3), {1}, {1: 1, 2: 1, 3: 1}, {(1, 2): 1, (2, 1): -1})
    v3 = {1: (1, 0, 0), 2: (0, 1, 0), 3: (0, 0, 1)}
    rep = quasi_equivalent(t, t, v3, {1: (1, 0, 0), 2: (0, 1, 1), 3: (0, 0, 1)})
    assert not rep.equivalent
    with pytest.raises(IncomparableLattices):
        quasi_equivalent(s, s)


def _rescaled(seed, vecs, rng):
    """Same 2-form, mutables multiplied by random frozen monomials; None if B~ not integral."""
    idx = seed.index
    n = len(idx)
    new = {}
    for i in idx:
        v = list(vecs[i])
        if i not in seed.frozen:
            for f in seed.frozen:
                c = rng.randint(-1, 1)
                v = [a + c * b for a, b in zip(v, vecs[f])]
        new[i] = tuple(v)
    # the same form in the new basis: W = C W_new C^T
    import sympy
    P = sympy.Matrix([[Fraction(x) for x in new[i]] for i in idx]).T
    Q = sympy.Matrix([[Fraction(x) for x in vecs[i]] for i in idx]).T
    W = sympy.zeros(n, n)
    for (a, b), w in seed.omega().items():
        W[idx.index(a), idx.index(b)] += w
        W[idx.index(b), idx.index(a)] -= w
    C = Q.inv() * P          # coordinates of the new variables in the old ones
    Wn = C.inv() * W * C.inv().T
    B = {}
    for r, a in enumerate(idx):
        for c, b in enumerate(idx):
            if r < c and Wn[r, c]:
                B[(a, b)] = Fraction(str(Wn[r, c])) / seed.d[b]
                B[(b, a)] = -Fraction(str(Wn[r, c])) / seed.d[a]
    out = make_seed(idx, seed.frozen, seed.d, B)
    try:
        out.extended()
    except Exception:
        return None
    return out, new


def test_quasi_equivalence_is_an_equivalence():
    rng = random.Random(31)
    done = 0
    for _ in range(200):
        s = random_seed(rng, n=3, m=2)
        base = {i: tuple(int(i == j) for j in s.index) for i in s.index}
        r1 = _rescaled(s, base, rng)
        if r1 is None:
            continue
        s1, v1 = r1
        r2 = _rescaled(s1, v1, rng)
        if r2 is None:
            continue
        s2, v2 = r2
        assert quasi_equivalent(s, s, base, base).equivalent
        assert quasi_equivalent(s, s1, base, v1).equivalent
        assert quasi_equivalent(s1, s, v1, base).equivalent
        assert quasi_equivalent(s1, s2, v1, v2).equivalent
        assert quasi_equivalent(s, s2, base, v2).equivalent
        # rescaling a mutable by another mutable is never a quasi-equivalence
        k, j = s.mutable[0], s.mutable[1]
        bad = dict(base)
        bad[k] = tuple(a + b for a, b in zip(base[k], base[j]))
        assert not quasi_equivalent(s, s, base, bad).equivalent
        done += 1
    assert done >= 50
