"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line at its stated tolerance; the lines are
repeated in the pytest terminal summary.  Criteria 4 and 5 are hard
assertions over every word processed by the other criteria, so they run last.
"""

import random
import time

from braidseed.braidword import compute_crossings, random_valid_word, valid_words
from braidseed.clusterops import exchange_monomials
from braidseed.folding import cross_check, folding_for
from braidseed.gamma import admissible_choices, aps_zero_check, gamma, gamma_step, ord_table
from braidseed.moves import enumerate_moves, is_special, verify_move
from braidseed.oracle import _ring, extract_cluster_polys, fz_identity_check, ord_oracle
from braidseed.rootsys import parse_type
from braidseed.seedbuild import build_seed, really_full_rank

# structural checks on every word processed by the other criteria
STRUCT = {"words": 0, "type_a": 0, "bad4": [], "bad5": []}


def _see(D, w, table=None):
    cr = compute_crossings(D, w)
    t = table or ord_table(D, w, cr)
    STRUCT["words"] += 1
    if len(cr.solid) != len(w) - D.n_pos_roots:
        STRUCT["bad4"].append((D.name, w, "|J|"))
    if any(v < 0 or c >= e for (c, k, e), v in t.entries.items()):
        STRUCT["bad4"].append((D.name, w, "support"))
    if any(t.get(e - 1, w[e - 1], e) != 1 for e in cr.solid):
        STRUCT["bad4"].append((D.name, w, "diagonal"))
    if D.letter == "A":
        STRUCT["type_a"] += 1
        if t.max_entry() > 1:
            STRUCT["bad5"].append((D.name, w))


def _sample(D, rng, max_len, signed=True):
    lo = D.n_pos_roots
    return random_valid_word(D, rng.randint(lo, max(lo, max_len)), rng, signed)


def test_criterion_01_normative_a1(record):
    t0 = time.perf_counter()
    D = parse_type("A1")
    s = build_seed(D, (1, 1, 1))
    t1, t2, _ = _ring(3, "t")[1]
    x = extract_cluster_polys(D, (1, 1, 1))
    ok = (s.index == (1, 2) and s.frozen == frozenset({1}) and s.mutable == (2,)
          and x == {1: t1 * t2 - 1, 2: t2} and s.b(1, 2) == 1 and s.b(2, 2) == 0
          and exchange_monomials(s, 2) == ({1: 1}, {}))
    # x_2 x_2' = x_1 + 1 with x_2' a polynomial
    q, r = (x[1] + 1).div(x[2])
    ok = ok and not r and q == t1
    dt = time.perf_counter() - t0
    ok = ok and dt < 1
    record(1, ok, f"A1 '1 1 1': J, split, cluster polynomials, B~=(1), exchange; {dt:.2f}s (< 1s)")
    assert ok


def test_criterion_02_oracle_equivalence(record):
    t0 = time.perf_counter()
    total, bad = 0, []
    for name, L in (("A1", 8), ("A2", 8), ("A3", 7)):
        D = parse_type(name)
        for w in valid_words(D, L):
            total += 1
            t = ord_table(D, w)
            _see(D, w, t)
            if t.entries != ord_oracle(D, w):
                bad.append((name, w))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 600
    record(2, ok, f"ord_table == ord_oracle on {total} words (A1<=8, A2<=8, A3<=7): "
                  f"{len(bad)} mismatches; {dt:.0f}s (< 600s)")
    assert not bad, bad[:3]


def test_criterion_03_aps_zero_pattern(record):
    t0 = time.perf_counter()
    rng = random.Random(3)
    names = ("A2", "A3", "B2", "C2", "G2", "D4")
    bad, n = [], 10 ** 4
    for t in range(n):
        D = parse_type(names[t % len(names)])
        w = _sample(D, rng, 12)
        _see(D, w)
        if aps_zero_check(D, w):
            bad.append((D.name, w))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 300
    record(3, ok, f"APS zero pattern on {n} sampled words ({', '.join(names)}, m<=12): "
                  f"{len(bad)} mismatches; {dt:.0f}s (< 300s)")
    assert not bad, bad[:3]


def test_criterion_06_integrality_and_rank(record):
    rng = random.Random(6)
    names = ("A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2", "F4")
    bad_form, bad_rank, n = [], [], 10 ** 3
    for t in range(n):
        D = parse_type(names[t % len(names)])
        w = _sample(D, rng, D.n_pos_roots + 5)
        _see(D, w)
        s = build_seed(D, w)
        for (a, b), v in s.B.items():
            if b in s.mutable and (v.denominator != 1 or s.d[a] * s.b(b, a) != -s.d[b] * v):
                bad_form.append((D.name, w))
                break
        if not really_full_rank(s):
            bad_rank.append((D.name, w))
    ok = not bad_form and not bad_rank
    record(6, ok, f"B~ integral and d-skew-symmetrizable, really full rank on {n} seeds "
                  f"({len(names)} types): {len(bad_form)} + {len(bad_rank)} failures")
    assert ok, (bad_form[:3], bad_rank[:3])


def test_criterion_07_move_compatibility(record):
    t0 = time.perf_counter()
    total, bad, counts = 0, [], 0
    for name, L in (("A2", 7), ("B2", 6), ("G2", 6)):
        D = parse_type(name)
        for w in valid_words(D, L):
            _see(D, w)
            for mv in enumerate_moves(D, w):
                rep = verify_move(D, w, mv)
                total += 1
                if mv.kind == "B3" and mv.solid:
                    counts += 1
                if not rep.passed:
                    bad.append((name, w, mv.label(), rep.detail))
    dt = time.perf_counter() - t0
    ok = not bad
    record(7, ok, f"verify_move on {total} moves (A2<=7 with oracle quasi-equivalence, "
                  f"B2<=6, G2<=6; {counts} solid B3 mutation counts): {len(bad)} failures; {dt:.0f}s")
    assert not bad, bad[:3]


def test_criterion_08_folding(record):
    t0 = time.perf_counter()
    rng = random.Random(8)
    names = ("C2", "B2", "B3", "G2")
    bad, n = [], 10 ** 3
    for t in range(n):
        D = parse_type(names[t % len(names)])
        w = _sample(D, rng, 10)
        _see(D, w)
        rep = cross_check(folding_for(D), w)
        if not rep.passed:
            bad.append((D.name, w, rep.detail))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 600
    record(8, ok, f"folded lifted seed == direct seed on {n} words ({', '.join(names)}, m<=10): "
                  f"{len(bad)} failures; {dt:.0f}s (< 600s)")
    assert not bad, bad[:3]


def test_criterion_09_gamma_choice_independence(record):
    rng = random.Random(9)
    D0 = parse_type("A2")
    e, s2 = D0.identity, D0.simple(2)
    routes = {gamma_step(D0, e, 1, s2, i, j) for i, j in ((1, 2), (2, 2))}
    ok = routes == {(1, 0)}
    bad, n = [], 10 ** 4
    groups = {name: parse_type(name).enumerate_group() for name in ("A2", "A3", "B2")}
    names = tuple(groups)
    for t in range(n):
        D = parse_type(names[t % 3])
        a, b = rng.choice(groups[D.name]), rng.choice(groups[D.name])
        k = rng.randint(1, D.rank)
        ci, cj = admissible_choices(D, a, b)
        vals = {gamma(D, a, k, b)}
        vals |= {gamma_step(D, a, k, b, i, j) for i in ci for j in cj}
        if len(vals) != 1:
            bad.append((D.name, a, k, b))
    ok = ok and not bad
    record(9, ok, f"gamma(id,1,s2) = alpha_1^vee by two routes; all admissible (i,j) agree on "
                  f"{n} triples (A2, A3, B2): {len(bad)} disagreements")
    assert ok, bad[:3]


def test_criterion_10_deletion_contraction(record):
    # taken literally: B~_12 = -1 and B~_1c = 0 for mutable c > 2
    rng = random.Random(10)
    names = ("A2", "A3", "B2", "C2", "G2")
    n, bad_sign, bad_zero = 500, [], []
    got = 0
    while got < n:
        D = parse_type(names[got % len(names)])
        w = _sample(D, rng, D.n_pos_roots + 6)
        w = (w[0],) + w   # still has Demazure product w0
        cr = compute_crossings(D, w)
        if 1 not in cr.solid or 2 not in cr.solid:
            continue
        got += 1
        _see(D, w)
        s = build_seed(D, w)
        if 2 in s.mutable and s.b(1, 2) != -1:
            bad_sign.append((D.name, w, s.b(1, 2)))
        if any(s.b(1, c) for c in s.mutable if c > 2):
            bad_zero.append((D.name, w))
    ok = not bad_sign and not bad_zero
    record(10, ok, f"beta = i i beta' on {n} words: B~_12 = -1 fails on {len(bad_sign)}, "
                   f"B~_1c = 0 (c > 2) fails on {len(bad_zero)}")
    assert ok, bad_sign[:3]


def test_criterion_11_fz_identity(record):
    rng = random.Random(11)
    done, bad = 0, []
    names = ("A2", "A3")
    tries = 0
    while done < 100 and tries < 10 ** 5:
        tries += 1
        D = parse_type(names[tries % 2])
        w = _sample(D, rng, D.n_pos_roots + 5)
        cr = compute_crossings(D, w)
        for c in range(1, len(w)):
            if (w[c - 1] < 0 < w[c] and c in cr.solid and c + 1 in cr.solid
                    and is_special(D, w, cr.u_seq, c)):
                _see(D, w)
                done += 1
                if not fz_identity_check(D, w, c):
                    bad.append((D.name, w, c))
                break
    ok = done >= 100 and not bad
    record(11, ok, f"exchange identity on {done} solid-special B1 instances (A2, A3): "
                   f"{len(bad)} failures")
    assert ok, bad[:3]


def test_criterion_04_triangularity(record):
    total, bad = STRUCT["words"], STRUCT["bad4"]
    ok = total > 0 and not bad
    record(4, ok, f"unitriangular, nonnegative, |J| = m - l(w0) on all {total} words processed: "
                  f"{len(bad)} failures")
    assert ok, bad[:3]


def test_criterion_05_type_a_zero_one(record):
    total, bad = STRUCT["type_a"], STRUCT["bad5"]
    ok = total > 0 and not bad
    record(5, ok, f"type A ord in {{0,1}} on all {total} type A words processed: {len(bad)} failures")
    assert ok, bad[:3]
