"""Symbolic SL_n oracle for type A.

Realizes the chain of matrices Z_c over the polynomial ring in the free
parameters t'_1..t'_m, evaluates grid minors as honest matrix minors and
recovers cluster variables and orders of vanishing by exact division.  This
is deliberately independent of the cocharacter recursion in ``gamma``.

Polynomial arithmetic uses sympy's sparse ``ring`` over ZZ.

Because Z_c only depends on the letters after position c, everything here is
cached by suffix.  Inside a ``SuffixOracle`` the parameter of the letter at
position c of a length-m word is the generator r_{m-c}, so words sharing a
suffix share polynomials.  Public results are translated back to t'_1..t'_m.
"""

from __future__ import annotations

from functools import lru_cache

from sympy import ZZ
from sympy.polys.rings import ring

from .braidword import compute_crossings
from .errors import ConfigurationError, DivisionFailure, FactorizationFailure
from .rootsys import DynkinData


def _require_type_a(D: DynkinData):
    if D.letter != "A":
        raise ConfigurationError("the symbolic oracle only supports type A")


@lru_cache(maxsize=None)
def _ring(nvars: int, prefix: str):
    # t-variables are numbered from 1 to match positions in the word
    base = 1 if prefix == "t" else 0
    names = ",".join(f"{prefix}{p + base}" for p in range(nvars))
    R, *gens = ring(names, ZZ)
    return R, tuple(gens)


def _identity(R, n):
    return [[R.one if i == j else R.zero for j in range(n)] for i in range(n)]


def _embed(R, n, i, block):
    M = _identity(R, n)
    (a, b), (c, d) = block
    M[i - 1][i - 1], M[i - 1][i] = a, b
    M[i][i - 1], M[i][i] = c, d
    return M


def gen_matrices(n: int, i: int, t, R=None):
    """(z_i(t), zbar_i(t)) as n x n matrices; blocks [[t,-1],[1,0]], [[t,1],[-1,0]]."""
    if R is None:
        R = t.ring
    return (_embed(R, n, i, ((t, -R.one), (R.one, R.zero))),
            _embed(R, n, i, ((t, R.one), (-R.one, R.zero))))


def zbar_inverse(n: int, i: int, t, R=None):
    if R is None:
        R = t.ring
    return _embed(R, n, i, ((R.zero, -R.one), (R.one, t)))


def _matmul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for r in range(n):
        row = []
        for c in range(m):
            acc = None
            for s in range(k):
                a, b = A[r][s], B[s][c]
                if a and b:
                    acc = a * b if acc is None else acc + a * b
            row.append(acc if acc is not None else A[0][0].ring.zero)
        out.append(row)
    return out


def _det(M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            term = M[0][j] * _det(minor)
            total = total + term if j % 2 == 0 else total - term
    return total


def _signed_perm(D: DynkinData, w, inverse_lift=False):
    """Integer matrix of the lift of w: product of s-dot along a reduced word.

    With ``inverse_lift`` the factors are s-dot inverses.
    """
    n = D.rank + 1
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in D.reduced_word(w):
        # right-multiply by the block [[0,-1],[1,0]] (or its inverse) at (i, i+1)
        sgn = -1 if inverse_lift else 1
        for r in range(n):
            a, b = M[r][i - 1], M[r][i]
            M[r][i - 1], M[r][i] = sgn * b, -sgn * a
    return M


def _left_int(P, Z):
    # P integer matrix with one nonzero per row
    out = []
    for row in P:
        for s, v in enumerate(row):
            if v:
                out.append([v * z for z in Z[s]])
                break
    return out


def _right_int(Z, Q):
    n = len(Q)
    cols = []
    for c in range(n):
        for s in range(n):
            if Q[s][c]:
                cols.append((s, Q[s][c]))
                break
    return [[v * row[s] for (s, v) in cols] for row in Z]


def _transpose(P):
    return [list(r) for r in zip(*P)]


def principal_minor(M, k):
    return _det([row[:k] for row in M[:k]])


def generalized_minor(D: DynkinData, v, w, k: int, X):
    """Minor Delta_{v omega_k, w omega_k}(X) = principal k-minor of vdot^-1 X wdot."""
    P = _transpose(_signed_perm(D, v))  # vdot^-1 (orthogonal)
    Q = _signed_perm(D, w)
    return principal_minor(_right_int(_left_int(P, X), Q), k)


def param_chain(D: DynkinData, word):
    """[Z_0, ..., Z_m] over ZZ[t1..tm]; Z_m is the identity."""
    _require_type_a(D)
    word = tuple(word)
    m, n = len(word), D.rank + 1
    R, ts = _ring(max(m, 1), "t")
    Z = _identity(R, n)
    chain = [Z]
    for c in range(m, 0, -1):
        i, t = word[c - 1], ts[c - 1]
        if i > 0:
            Z = _matmul(Z, gen_matrices(n, i, t, R)[0])
        else:
            Z = _matmul(zbar_inverse(n, D.star[-i], t, R), Z)
        chain.append(Z)
    chain.reverse()
    return chain


def valuation(p, x):
    """Largest v with x^v dividing p, and the cofactor."""
    if x.is_ground:
        raise DivisionFailure("cannot take valuation at a constant")
    v = 0
    while p:
        q, r = p.div(x)
        if r:
            break
        p, v = q, v + 1
    return v, p


class SuffixOracle:
    """Cached symbolic computations for all words over one type A root system."""

    def __init__(self, D: DynkinData, max_len: int = 12):
        _require_type_a(D)
        self.D = D
        self.n = D.rank + 1
        self.max_len = max_len
        self.R, self.gens = _ring(max_len, "r")
        self._z = {(): _identity(self.R, self.n)}
        self._u = {(): D.w0}
        self._minor = {}
        self._x = {}
        self._val = {}
        self._lift = {}

    def Z(self, s):
        z = self._z.get(s)
        if z is None:
            i, rest = s[0], s[1:]
            t = self.gens[len(rest)]
            prev = self.Z(rest)
            if i > 0:
                z = _matmul(prev, gen_matrices(self.n, i, t, self.R)[0])
            else:
                z = _matmul(zbar_inverse(self.n, self.D.star[-i], t, self.R), prev)
            self._z[s] = z
        return z

    def u(self, s):
        """u_c for the position whose suffix is s (PDS from the right)."""
        u = self._u.get(s)
        if u is None:
            D = self.D
            i, nxt = s[0], self.u(s[1:])
            other = D.apply_simple(nxt, i, "right") if i > 0 else D.apply_simple(nxt, -i, "left")
            u = other if other.length < nxt.length else nxt
            self._u[s] = u
        return u

    def solid(self, s):
        """Whether the first letter of s is a solid crossing."""
        return self.u(s) == self.u(s[1:])

    def _lift_of(self, w, inverse_lift=False):
        key = (w, inverse_lift)
        M = self._lift.get(key)
        if M is None:
            M = _signed_perm(self.D, w, inverse_lift)
            self._lift[key] = M
        return M

    def grid_minor(self, s, k):
        key = (s, k)
        p = self._minor.get(key)
        if p is None:
            D = self.D
            Z, u = self.Z(s), self.u(s)
            if k > 0:
                w = D.mul(D.w0, u)
                P = _transpose(self._lift_of(w))
                p = principal_minor(_left_int(P, Z), k)
            else:
                P = _transpose(self._lift_of(D.w0))
                Q = self._lift_of(D.inverse(u))
                p = principal_minor(_right_int(_left_int(P, Z), Q), -k)
            self._minor[key] = p
        return p

    def cluster_var(self, s):
        """x_e where s = letters i_e..i_m and e is solid."""
        x = self._x.get(s)
        if x is None:
            if not self.solid(s):
                raise ValueError("not a solid crossing")
            p = self.grid_minor(s, s[0])
            for j in range(1, len(s)):
                t = s[j:]
                if self.solid(t):
                    _, p = valuation(p, self.cluster_var(t))
            if p.is_ground:
                raise DivisionFailure(f"chamber minor fully absorbed for suffix {s}")
            if p.LC < 0:
                p = -p
            self._x[s] = p
            x = p
        return x

    def ord_row(self, s, k):
        """{offset: ord} for the grid minor at suffix s; offset = e - c >= 1.

        Also checks the grid minor is a constant times a monomial in the
        cluster variables.
        """
        key = (s, k)
        row = self._val.get(key)
        if row is None:
            p = self.grid_minor(s, k)
            if not p:
                raise FactorizationFailure(f"grid minor ({s},{k}) vanishes identically")
            row = {}
            for off in range(1, len(s) + 1):
                t = s[off - 1:]
                if self.solid(t):
                    v, p = valuation(p, self.cluster_var(t))
                    if v:
                        row[off] = v
            if not p.is_ground:
                raise FactorizationFailure(
                    f"grid minor ({s},{k}) is not a monomial in cluster variables: rest {p}")
            self._val[key] = row
        return row

    def ord_entries(self, word):
        """{(c, k, e): ord} with zero entries omitted."""
        word = tuple(word)
        m = len(word)
        if m > self.max_len:
            raise ValueError("word longer than the oracle's variable pool")
        out = {}
        for c in range(m + 1):
            s = word[c:]
            for k in range(1, self.D.rank + 1):
                for kk in (k, -k):
                    for off, v in self.ord_row(s, kk).items():
                        out[(c, kk, c + off)] = v
        return out

    def to_t(self, p, m):
        """Translate r-variables of a length-m word into ZZ[t1..tm]."""
        R, _ = _ring(max(m, 1), "t")
        terms = {}
        for exps, coeff in p.terms():
            if any(exps[m:]):
                raise ValueError("polynomial uses variables beyond the word")
            terms[tuple(reversed(exps[:m]))] = coeff
        return R.from_dict(terms) if terms else R.zero


def grid_minor_poly(D: DynkinData, word, crossings, c: int, k: int):
    word = tuple(word)
    m = len(word)
    orc = shared_oracle(D, m)
    return orc.to_t(orc.grid_minor(word[c:], k), m)


_SHARED = {}


def shared_oracle(D: DynkinData, min_len: int) -> SuffixOracle:
    """One cached oracle per type, grown when a longer word shows up."""
    orc = _SHARED.get(D)
    if orc is None or orc.max_len < min_len:
        orc = _SHARED[D] = SuffixOracle(D, max(min_len, 12))
    return orc


def extract_cluster_polys(D: DynkinData, word) -> dict:
    """{e: x_e} as polynomials in t'_1..t'_m."""
    word = tuple(word)
    m = len(word)
    crossings = compute_crossings(D, word)
    orc = shared_oracle(D, m)
    return {e: orc.to_t(orc.cluster_var(word[e - 1:]), m) for e in crossings.solid}


def ord_oracle(D: DynkinData, word, orc: SuffixOracle | None = None) -> dict:
    """{(c, k, e): ord} computed symbolically; zero entries omitted."""
    word = tuple(word)
    compute_crossings(D, word)
    if orc is None:
        orc = shared_oracle(D, len(word))
    return orc.ord_entries(word)


def fz_identity_check(D: DynkinData, word, c: int) -> bool:
    """Exchange identity across a solid-special commutation at (c, c+1).

    ``word`` has letters i_c = -i < 0 and i_{c+1} = j > 0 with
    u_c s_j = s_i u_c.  Both words are realized with matched parameters:
    the swapped word uses the same t' for the same letter.  Checks
    Delta_{c,j} Delta'_{c,j} = Delta_{c+1,j} Delta_{c-1,j} + prod_{k != j} Delta_{c,k}^{-a_jk}.
    """
    _require_type_a(D)
    word = tuple(word)
    m = len(word)
    if not (1 <= c < m and word[c - 1] < 0 < word[c]):
        raise ValueError("need a negative letter at c followed by a positive letter")
    j = word[c]
    swapped = word[:c - 1] + (word[c], word[c - 1]) + word[c + 1:]
    R, ts = _ring(m, "t")

    def chain(w, perm):
        n = D.rank + 1
        Z = _identity(R, n)
        out = [Z]
        for pos in range(m, 0, -1):
            i, t = w[pos - 1], ts[perm[pos - 1]]
            if i > 0:
                Z = _matmul(Z, gen_matrices(n, i, t, R)[0])
            else:
                Z = _matmul(zbar_inverse(n, D.star[-i], t, R), Z)
            out.append(Z)
        out.reverse()
        return out

    perm = list(range(m))
    perm_sw = perm[:c - 1] + [c, c - 1] + perm[c + 1:]
    Zs, Zs_sw = chain(word, perm), chain(swapped, perm_sw)
    cr, cr_sw = compute_crossings(D, word), compute_crossings(D, swapped)

    def minor(Zlist, crs, pos, k):
        u = crs.u_seq[pos]
        if k > 0:
            return generalized_minor(D, D.mul(D.w0, u), D.identity, k, Zlist[pos])
        return generalized_minor(D, D.w0, D.inverse(u), -k, Zlist[pos])

    lhs = minor(Zs, cr, c, j) * minor(Zs_sw, cr_sw, c, j)
    rhs = minor(Zs, cr, c + 1, j) * minor(Zs, cr, c - 1, j)
    prod = R.one
    for k in range(1, D.rank + 1):
        if k != j:
            e = -D.cartan[j - 1][k - 1]
            if e:
                prod *= minor(Zs, cr, c, k) ** e
    return lhs == rhs + prod


# --- move verification through explicit parameter maps ---------------------

def _window_matrix(D: DynkinData, letters, syms):
    """Product of the window's generator matrices as it enters Z_{l-1}."""
    import sympy
    n = D.rank + 1
    out = sympy.eye(n)
    pos = [(i, t) for i, t in zip(letters, syms) if i > 0]
    neg = [(i, t) for i, t in zip(letters, syms) if i < 0]
    for i, t in neg:
        M = sympy.eye(n)
        k = D.star[-i] - 1
        M[k, k], M[k, k + 1], M[k + 1, k], M[k + 1, k + 1] = 0, -1, 1, t
        out = out * M
    left = out
    out = sympy.eye(n)
    for i, t in reversed(pos):
        M = sympy.eye(n)
        k = i - 1
        M[k, k], M[k, k + 1], M[k + 1, k], M[k + 1, k + 1] = t, -1, 1, 0
        out = out * M
    return left, out


@lru_cache(maxsize=None)
def window_param_map(D: DynkinData, letters: tuple, new_letters: tuple):
    """Parameters of the new window as polynomials in the old ones.

    Returns a tuple of (exponent-dict) polynomials in the window's old
    parameters a_1..a_p, so that both windows give the same matrices on each
    side of the chain.  Raises DivisionFailure if no polynomial map exists.
    """
    import sympy
    p = len(letters)
    a = sympy.symbols(f"a1:{p + 1}")
    b = sympy.symbols(f"b1:{p + 1}")
    L1, R1 = _window_matrix(D, letters, a)
    L2, R2 = _window_matrix(D, new_letters, b)
    eqs = [e for e in list(L1 - L2) + list(R1 - R2) if e != 0]
    sols = sympy.solve(eqs, b, dict=True)
    if len(sols) != 1 or set(sols[0]) != set(b):
        raise DivisionFailure(f"no unique parameter map for {letters} -> {new_letters}")
    out = []
    for s in b:
        poly = sympy.Poly(sympy.expand(sols[0][s]), *a)
        if any(not c.is_integer for c in poly.coeffs()):
            raise DivisionFailure("parameter map is not integral")
        out.append({m: int(c) for m, c in zip(poly.monoms(), poly.coeffs())})
    return tuple(out)


def move_param_map(D: DynkinData, word, target, left: int, right: int):
    """[t'_1..t'_m] as polynomials in ZZ[t_1..t_m] (B1, B2, B3 windows)."""
    word, target = tuple(word), tuple(target)
    m = len(word)
    R, ts = _ring(max(m, 1), "t")
    images = list(ts)
    win, new = word[left - 1:right], target[left - 1:right]
    if (win[0] > 0) != (win[-1] > 0) or (len(win) == 2 and (win[0] > 0) != (win[1] > 0)):
        # a negative letter acts on the left and a positive one on the right,
        # so swapping them keeps the parameter with its letter
        images[left - 1], images[left] = ts[left], ts[left - 1]
        return images
    for pos, poly in enumerate(window_param_map(D, win, new)):
        acc = R.zero
        for mon, c in poly.items():
            term = R(c)
            for q, e in enumerate(mon):
                if e:
                    term *= ts[left - 1 + q] ** e
            acc += term
        images[left - 1 + pos] = acc
    return images


_FACTORS = {}


def _factor_cached(p):
    hit = _FACTORS.get(p)
    if hit is None:
        if len(_FACTORS) > 200000:
            _FACTORS.clear()
        hit = _FACTORS[p] = p.factor_list()[1]
    return hit


class FactorBasis:
    """Irreducible factors (up to sign) seen so far; vectors over them."""

    def __init__(self):
        self.factors = []
        self._pos = {}

    def _key(self, f):
        return -f if f.LC < 0 else f

    def factor(self, p) -> dict:
        if not p:
            raise FactorizationFailure("zero polynomial")
        facs = _factor_cached(p)
        out = {}
        for f, e in facs:
            f = self._key(f)
            if f not in self._pos:
                self._pos[f] = len(self.factors)
                self.factors.append(f)
            k = self._pos[f]
            out[k] = out.get(k, 0) + e
        return out

    def vector(self, fac: dict, N: int):
        return tuple(fac.get(k, 0) for k in range(N))

    def expand(self, fac: dict, R):
        p = R.one
        for k, e in fac.items():
            if e < 0:
                raise DivisionFailure("negative exponent in expand")
            p *= self.factors[k] ** e
        return p


def _add_monomials(basis, R, m1: dict, m2: dict) -> dict:
    """Factored form of m1 + m2 for factored Laurent monomials m1, m2."""
    keys = set(m1) | set(m2)
    g = {k: min(m1.get(k, 0), m2.get(k, 0)) for k in keys}
    a = basis.expand({k: m1.get(k, 0) - g[k] for k in keys}, R)
    b = basis.expand({k: m2.get(k, 0) - g[k] for k in keys}, R)
    out = {k: v for k, v in g.items() if v}
    for k, v in basis.factor(a + b).items():
        out[k] = out.get(k, 0) + v
    return out


def mutate_factored(seed, fvars: dict, k, basis, R) -> dict:
    """Cluster variables after mutation at k, in factored form."""
    def mono(part):
        out = {}
        for j, e in part.items():
            for f, v in fvars[j].items():
                out[f] = out.get(f, 0) + e * v
        return out
    pos = {j: int(seed.b(j, k)) for j in seed.index if seed.b(j, k) > 0}
    neg = {j: int(-seed.b(j, k)) for j in seed.index if seed.b(j, k) < 0}
    num = _add_monomials(basis, R, mono(pos), mono(neg))
    new = dict(num)
    for f, v in fvars[k].items():
        new[f] = new.get(f, 0) - v
    out = dict(fvars)
    out[k] = {f: v for f, v in new.items() if v}
    return out


def move_quasi_check(D: DynkinData, word, plan, s1, s2):
    """Quasi-equivalence of pi mu(Sigma_beta) and the pulled back Sigma_beta'.

    Only for B1-B3 in type A, where the two varieties are identified by an
    explicit polynomial change of parameters.  Returns (ok, reason).
    """
    from .clusterops import mutate, quasi_equivalent, relabel
    _require_type_a(D)
    word, target = tuple(word), tuple(plan.target)
    move = plan.steps[0]
    m = len(word)
    R, ts = _ring(max(m, 1), "t")
    images = move_param_map(D, word, target, move.left, move.right)
    pairs = list(zip(ts, images))
    x1 = extract_cluster_polys(D, word)
    x2 = {e: p.compose(pairs) for e, p in extract_cluster_polys(D, target).items()}
    basis = FactorBasis()
    f1 = {e: basis.factor(p) for e, p in x1.items()}
    f2 = {e: basis.factor(p) for e, p in x2.items()}
    seed = s1
    for k in reversed(plan.mutations):
        f1 = mutate_factored(seed, f1, k, basis, R)
        seed = mutate(seed, k)
    seed = relabel(seed, plan.relabel)
    f1 = {plan.relabel[e]: v for e, v in f1.items()}
    N = len(basis.factors)
    v1 = {e: basis.vector(f, N) for e, f in f1.items()}
    v2 = {e: basis.vector(f, N) for e, f in f2.items()}
    rep = quasi_equivalent(seed, s2, v1, v2)
    return rep.equivalent, rep.reason
