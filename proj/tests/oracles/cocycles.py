#!/usr/bin/env python3
"""Brute-force 1-cocycle oracles for the Radford-product coefficient setups.

Everything is dict/ndarray based and written independently of the C++ tree:
structure constants come from the rewriting construction in hopf_side.py
logic (re-derived here), cocycle sets from exhaustive normalized search.
"""
import numpy as np
from itertools import product


def inv_mod(a, p):
    return pow(int(a) % p, p - 2, p)


def zeta_pascal(n_max, zeta, p):
    C = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    for i in range(n_max + 1):
        C[i][0] = 1
        C[i][i] = 1
        for s in range(1, i):
            C[i][s] = (C[i - 1][s - 1] + pow(zeta, s, p) * C[i - 1][s]) % p
    return C


class Algebra:
    """table[i][j] = dict{k: coeff}; unit index 0 assumed (checked)."""

    def __init__(self, dim, table, p):
        self.dim, self.table, self.p = dim, table, p
        for j in range(dim):
            assert table[0][j] == {j: 1} and table[j][0] == {j: 1}

    def mul(self, x, y):
        out = {}
        for i, a in x.items():
            row = self.table[i]
            for j, b in y.items():
                for k, c in row[j].items():
                    out[k] = (out.get(k, 0) + a * b * c) % self.p
        return {k: v for k, v in out.items() if v}

    def units(self):
        """all invertible elements, coords lexicographic"""
        p, dim = self.p, self.dim
        res = []
        for vec in product(range(p), repeat=dim):
            x = {i: v for i, v in enumerate(vec) if v}
            if not x:
                continue
            M = np.zeros((dim, dim), dtype=np.int64)
            for j in range(dim):
                prod_ = self.mul(x, {j: 1})
                for k, c in prod_.items():
                    M[k, j] = c
            if rank_mod(M, p) == dim:
                res.append(vec)
        return res

    def inverse(self, x):
        p, dim = self.p, self.dim
        M = np.zeros((dim, dim), dtype=np.int64)
        for j in range(dim):
            for k, c in self.mul(x, {j: 1}).items():
                M[k, j] = c
        b = np.zeros(dim, dtype=np.int64)
        b[0] = 1
        sol = solve_mod(M, b, p)
        return {i: int(v) for i, v in enumerate(sol) if v}


def rank_mod(A, p):
    A = A.copy() % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        sel = next((rr for rr in range(r, rows) if A[rr, c] % p), None)
        if sel is None:
            continue
        A[[r, sel]] = A[[sel, r]]
        A[r] = (A[r] * inv_mod(A[r, c], p)) % p
        for rr in range(rows):
            if rr != r and A[rr, c]:
                A[rr] = (A[rr] - A[rr, c] * A[r]) % p
        r += 1
    return r


def solve_mod(A, b, p):
    A = A.copy() % p
    b = b.copy() % p
    rows, cols = A.shape
    x = np.zeros(cols, dtype=np.int64)
    piv = []
    r = 0
    for c in range(cols):
        sel = next((rr for rr in range(r, rows) if A[rr, c] % p), None)
        if sel is None:
            continue
        A[[r, sel]] = A[[sel, r]]
        b[[r, sel]] = b[[sel, r]]
        iv = inv_mod(A[r, c], p)
        A[r] = (A[r] * iv) % p
        b[r] = (b[r] * iv) % p
        for rr in range(rows):
            if rr != r and A[rr, c]:
                f = A[rr, c]
                A[rr] = (A[rr] - f * A[r]) % p
                b[rr] = (b[rr] - f * b[r]) % p
        piv.append(c)
        r += 1
    assert all(b[rr] % p == 0 for rr in range(r, rows))
    for k, c in enumerate(piv):
        x[c] = b[k]
    return x % p


def tensor(A, B):
    p = A.p
    dim = A.dim * B.dim
    table = [[None] * dim for _ in range(dim)]
    for i1, i2, j1, j2 in product(range(A.dim), range(B.dim), range(A.dim), range(B.dim)):
        out = {}
        for k1, c1 in A.table[i1][j1].items():
            for k2, c2 in B.table[i2][j2].items():
                out[k1 * B.dim + k2] = (c1 * c2) % p
        table[i1 * B.dim + i2][j1 * B.dim + j2] = out
    return Algebra(dim, table, p)


def setup(n, p):
    """Returns the full taft:n:p coefficient context."""
    zeta = next(c for c in range(2, p)
                if pow(c, n, p) == 1 and all(pow(c, k, p) != 1 for k in range(1, n)))
    C = zeta_pascal(n, zeta, p)
    dimH = n            # H = k[Z/n], basis u^a
    dimE = n            # E = k[y]/y^n
    dimB = n * n        # B = H_{n^2}, basis g^a h^b -> a*n+b

    Htab = [[{(i + j) % n: 1} for j in range(n)] for i in range(n)]
    Etab = [[({i + j: 1} if i + j < n else {}) for j in range(n)] for i in range(n)]
    Btab = [[None] * dimB for _ in range(dimB)]
    for a, b, c, d in product(range(n), repeat=4):
        Btab[a * n + b][c * n + d] = (
            {} if b + d >= n else {((a + c) % n) * n + (b + d): pow(zeta, b * c, p)})
    H = Algebra(dimH, Htab, p)
    E = Algebra(dimE, Etab, p)
    B = Algebra(dimB, Btab, p)

    deltaH = [{(i, i): 1} for i in range(n)]
    epsH = [1] * n
    deltaE = [{(s, i - s): C[i][s] for s in range(i + 1) if C[i][s]} for i in range(n)]
    epsE = [1] + [0] * (n - 1)
    deltaB = [None] * dimB
    for a, b in product(range(n), repeat=2):
        deltaB[a * n + b] = {(a * n + s, ((a + s) % n) * n + (b - s)): C[b][s]
                             for s in range(b + 1) if C[b][s]}
    epsB = [1 if i % n == 0 else 0 for i in range(dimB)]

    # F = E as coefficient algebra; coactions
    rhoFH = [{(i, i): 1} for i in range(n)]                       # y^i -> y^i (x) u^i
    rhoFE = deltaE                                                # y^i -> sum y^s (x) y^(i-s)
    rhoFB = [None] * n                                            # y^i -> sum y^s (x) g^s h^(i-s)
    for i in range(n):
        rhoFB[i] = {(s, s * n + (i - s)): C[i][s] for s in range(i + 1) if C[i][s]}
    rhoEH = [{(i, i): 1} for i in range(n)]                       # E's own H-coaction

    # F * E algebra (braided product, F = E): (y^a*y^b)(y^c*y^d) = z^{bc} y^{a+c}*y^{b+d}
    dimFE = n * n
    FEtab = [[None] * dimFE for _ in range(dimFE)]
    for a, b, c, d in product(range(n), repeat=4):
        FEtab[a * n + b][c * n + d] = (
            {} if (a + c >= n or b + d >= n)
            else {(a + c) * n + (b + d): pow(zeta, b * c, p)})
    FE = Algebra(dimFE, FEtab, p)

    # (F*E)*E: H-coaction on F*E: (y^a * y^b) -> (y^a * y^b) (x) u^(a+b)
    dimFEE = n ** 3
    FEEtab = [[None] * dimFEE for _ in range(dimFEE)]
    for a, b, c in product(range(n), repeat=3):
        for d, e, f in product(range(n), repeat=3):
            # (x * y^c)(x' * y^f) with x = y^a*y^b, x' = y^d*y^e:
            # tau(y^c (x) x') = x' (x) zeta^{c(d+e)} y^c
            if a + d < n and b + e < n and c + f < n:
                co = (pow(zeta, c * (d + e), p) * pow(zeta, b * d, p)) % p
                FEEtab[(a * n + b) * n + c][(d * n + e) * n + f] = {
                    ((a + d) * n + (b + e)) * n + (c + f): co}
            else:
                FEEtab[(a * n + b) * n + c][(d * n + e) * n + f] = {}
    FEE = Algebra(dimFEE, FEEtab, p)

    return dict(n=n, p=p, zeta=zeta, C=C, H=H, E=E, B=B, FE=FE, FEE=FEE,
                deltaH=deltaH, epsH=epsH, deltaE=deltaE, epsE=epsE,
                deltaB=deltaB, epsB=epsB, rhoFH=rhoFH, rhoFE=rhoFE,
                rhoFB=rhoFB, rhoEH=rhoEH)


def as_matrix(face, dim_dom, dim_cod, p):
    M = np.zeros((dim_cod, dim_dom), dtype=np.int64)
    for j in range(dim_dom):
        for k, c in face(j).items():
            M[k, j] = c % p
    return M


def z1_enumerate(p, dimF, dimC, epsC, one_F, d0, d1, d2, A2, batch=True):
    """Normalized search: X in F (x) C with (id (x) eps)X = 1_F, then the
    cocycle equation d2(X) d0(X) = d1(X) in A2.  d* are matrices."""
    dimA1 = dimF * dimC
    # normalization rows: for each f: sum_j eps[j] X[f*dimC+j] = [f == one_F]
    L = np.zeros((dimF, dimA1), dtype=np.int64)
    rhs = np.zeros(dimF, dtype=np.int64)
    for f in range(dimF):
        for j in range(dimC):
            L[f, f * dimC + j] = epsC[j]
        rhs[f] = 1 if f == one_F else 0
    X0 = solve_mod(L, rhs, p)
    # nullspace basis
    N = nullspace_mod(L, p)
    free = N.shape[1]
    total = p ** free
    tvals = np.array(list(product(range(p), repeat=free)), dtype=np.int64)
    Xs = (X0[None, :] + tvals @ N.T) % p                     # (total, dimA1)
    A = (Xs @ d2.T) % p
    Bm = (Xs @ d0.T) % p
    target = (Xs @ d1.T) % p
    prod_ = np.zeros_like(target)
    for i in range(A2.dim):
        for j in range(A2.dim):
            for k, c in A2.table[i][j].items():
                prod_[:, k] += A[:, i] * Bm[:, j] * c
        prod_ %= p
    ok = np.all((prod_ - target) % p == 0, axis=1)
    return [tuple(int(v) for v in row) for row in Xs[ok]]


def nullspace_mod(L, p):
    L = L.copy() % p
    rows, cols = L.shape
    r = 0
    piv = []
    for c in range(cols):
        sel = next((rr for rr in range(r, rows) if L[rr, c] % p), None)
        if sel is None:
            continue
        L[[r, sel]] = L[[sel, r]]
        L[r] = (L[r] * inv_mod(L[r, c], p)) % p
        for rr in range(rows):
            if rr != r and L[rr, c]:
                L[rr] = (L[rr] - L[rr, c] * L[r]) % p
        piv.append(c)
        r += 1
    freec = [c for c in range(cols) if c not in piv]
    N = np.zeros((cols, len(freec)), dtype=np.int64)
    for idx, fc in enumerate(freec):
        N[fc, idx] = 1
        for k, c in enumerate(piv):
            N[c, idx] = (-L[k, fc]) % p
    return N


def orbits(cocs, units, act):
    idx = {c: i for i, c in enumerate(cocs)}
    parent = list(range(len(cocs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for cvec in cocs:
        for u in units:
            moved = act(cvec, u)
            assert moved in idx, "unit action must preserve Z1"
            i, j = find(idx[cvec]), find(idx[moved])
            parent[i] = j
    groups = {}
    for i, c in enumerate(cocs):
        groups.setdefault(find(i), []).append(c)
    return list(groups.values())


def run(n, p):
    S = setup(n, p)
    H, E, B, FE, FEE = S["H"], S["E"], S["B"], S["FE"], S["FEE"]
    dimF = n
    F = E  # coefficient algebra is E itself

    # ---------------- C(H, F): A1 = F (x) H, A2 = F (x) H (x) H
    FH = tensor(F, H)
    FHH = tensor(FH, H)

    def face0_1(j):  # d0 = rhoFH on F leg: basis j = f*dimH + h... domain A1
        f, h = divmod(j, H.dim)
        return {(fp * H.dim + hp) * H.dim + h: c
                for (fp, hp), c in S["rhoFH"][f].items()}

    def face1_1(j):
        f, h = divmod(j, H.dim)
        return {(f * H.dim + h1) * H.dim + h2: c
                for (h1, h2), c in S["deltaH"][h].items()}

    def face2_1(j):
        return {j * H.dim + 0: 1}

    d0 = as_matrix(face0_1, FH.dim, FHH.dim, p)
    d1 = as_matrix(face1_1, FH.dim, FHH.dim, p)
    d2 = as_matrix(face2_1, FH.dim, FHH.dim, p)
    Z1H = z1_enumerate(p, dimF, H.dim, S["epsH"], 0, d0, d1, d2, FHH)
    print(f"n={n} p={p}: |Z1(H,F)| = {len(Z1H)}")

    # ---------------- C*(E, F): A1 = F*E, A2 = F*E*E
    def e_face0(j):
        f, e = divmod(j, E.dim)
        return {(fp * E.dim + ep) * E.dim + e: c
                for (fp, ep), c in S["rhoFE"][f].items()}

    def e_face1(j):
        f, e = divmod(j, E.dim)
        return {(f * E.dim + e1) * E.dim + e2: c
                for (e1, e2), c in S["deltaE"][e].items()}

    def e_face2(j):
        return {j * E.dim + 0: 1}

    e0 = as_matrix(e_face0, FE.dim, FEE.dim, p)
    e1 = as_matrix(e_face1, FE.dim, FEE.dim, p)
    e2 = as_matrix(e_face2, FE.dim, FEE.dim, p)
    Z1E = z1_enumerate(p, dimF, E.dim, S["epsE"], 0, e0, e1, e2, FEE)
    print(f"n={n} p={p}: |Z1*(E,F)| = {len(Z1E)}")

    # ---------------- box compatibility (elementwise form) in F (x) E (x) H
    def box_compatible(XH, XE):
        lhs, rhs = {}, {}
        for j in range(FH.dim):
            if not XH[j]:
                continue
            fj, hj = divmod(j, H.dim)
            for l in range(FE.dim):
                if not XE[l]:
                    continue
                gl, el = divmod(l, E.dim)
                coef = XH[j] * XE[l]
                # lhs: g_l (f_j^0)_0 (x) (e_l . (f_j^0)_1) f_j^1 (x) h_j
                for (f0, f1), c1 in S["rhoFE"][fj].items():
                    for (f00, f01), c2 in S["rhoFH"][f0].items():
                        for gf, c3 in F.table[gl][f00].items():
                            # e_l . u^(f01) = zeta^(el*f01) e_l (E module str.)
                            zc = pow(S["zeta"], el * f01, p)
                            for ee, c4 in E.table[el][f1].items():
                                key = (gf, ee, hj)
                                lhs[key] = (lhs.get(key, 0)
                                            + coef * c1 * c2 * c3 * zc * c4) % p
                # rhs: f_j (g_l)_0 (x) (e_l)_0 (x) h_j (g_l)_1 (e_l)_1
                for (g0, g1), c1 in S["rhoFH"][gl].items():
                    for fg, c2 in F.table[fj][g0].items():
                        for (e0_, e1_), c3 in S["rhoEH"][el].items():
                            for hh, c4 in H.table[hj][g1].items():
                                for hh2, c5 in H.table[hh][e1_].items():
                                    key = (fg, e0_, hh2)
                                    rhs[key] = (rhs.get(key, 0)
                                                + coef * c1 * c2 * c3 * c4 * c5) % p
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = {k: v for k, v in rhs.items() if v}
        return lhs == rhs

    box = [(XH, XE) for XH in Z1H for XE in Z1E if box_compatible(XH, XE)]
    print(f"n={n} p={p}: |box| = {len(box)}")

    # ---------------- assemble and compare with Z1(B, F) if feasible
    def assemble(XH, XE):
        X = [0] * (dimF * B.dim)
        for j in range(FH.dim):
            if not XH[j]:
                continue
            fj, hj = divmod(j, H.dim)
            for l in range(FE.dim):
                if not XE[l]:
                    continue
                gl, el = divmod(l, E.dim)
                coef = XH[j] * XE[l]
                # f_j (g_l)_0 (x) h_j (g_l)_1 (x) e_l ; B basis g^a h^b = a*n+b
                for (g0, g1), c1 in S["rhoFH"][gl].items():
                    for fg, c2 in F.table[fj][g0].items():
                        for hh, c3 in H.table[hj][g1].items():
                            bidx = hh * n + el
                            X[fg * B.dim + bidx] = (X[fg * B.dim + bidx]
                                                    + coef * c1 * c2 * c3) % p
        return tuple(X)

    assembled = sorted(assemble(XH, XE) for (XH, XE) in box)
    if n == 2:
        FB = tensor(F, B)
        FBB = tensor(FB, B)

        def b_face0(j):
            f, b = divmod(j, B.dim)
            return {(fp * B.dim + bp) * B.dim + b: c
                    for (fp, bp), c in S["rhoFB"][f].items()}

        def b_face1(j):
            f, b = divmod(j, B.dim)
            return {(f * B.dim + b1) * B.dim + b2: c
                    for (b1, b2), c in S["deltaB"][b].items()}

        def b_face2(j):
            return {j * B.dim + 0: 1}

        b0 = as_matrix(b_face0, FB.dim, FBB.dim, p)
        b1 = as_matrix(b_face1, FB.dim, FBB.dim, p)
        b2 = as_matrix(b_face2, FB.dim, FBB.dim, p)
        Z1B = z1_enumerate(p, dimF, B.dim, S["epsB"], 0, b0, b1, b2, FBB)
        print(f"n={n} p={p}: |Z1(B,F)| = {len(Z1B)}  assembled==Z1B: "
              f"{sorted(Z1B) == assembled}")

        # orbits under F^x: X >> x = d1(x^-1) X d0(x) inside A1 = F (x) B
        units = [u for u in F.units()]
        print(f"   |F^x| = {len(units)}")

        def act(Xvec, uvec):
            x = {i: v for i, v in enumerate(uvec) if v}
            xi = F.inverse(x)
            # d1(x^-1): F -> F (x) B: x (x) 1; d0(x) = rhoFB(x)
            d1x = {}
            for i, v in xi.items():
                d1x[i * B.dim + 0] = v
            d0x = {}
            for i, v in x.items():
                for (fp, bp), c in S["rhoFB"][i].items():
                    d0x[fp * B.dim + bp] = (d0x.get(fp * B.dim + bp, 0) + v * c) % p
            Xd = {i: v for i, v in enumerate(Xvec) if v}
            res = FB.mul(FB.mul(d1x, Xd), d0x)
            out = [0] * FB.dim
            for i, v in res.items():
                out[i] = v
            return tuple(out)

        cls = orbits(Z1B, units, act)
        sizes = sorted(len(c) for c in cls)
        triv = tuple(1 if i == 0 else 0 for i in range(FB.dim))
        dist = [len(c) for c in cls if triv in c]
        print(f"   |H1(B,F)| = {len(cls)} sizes={sizes} distinguished-size={dist}")

    # orbits on the box set under diagonal action (works for both n)
    unitsF = [u for u in F.units()]
    idx = {b: i for i, b in enumerate(box)}
    parent = list(range(len(box)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def actH(Xvec, uvec):
        x = {i: v for i, v in enumerate(uvec) if v}
        xi = F.inverse(x)
        d1x = {i * H.dim + 0: v for i, v in xi.items()}
        d0x = {}
        for i, v in x.items():
            for (fp, hp), c in S["rhoFH"][i].items():
                d0x[fp * H.dim + hp] = (d0x.get(fp * H.dim + hp, 0) + v * c) % p
        Xd = {i: v for i, v in enumerate(Xvec) if v}
        res = FH.mul(FH.mul(d1x, Xd), d0x)
        out = [0] * FH.dim
        for i, v in res.items():
            out[i] = v
        return tuple(out)

    def actE(Xvec, uvec):
        x = {i: v for i, v in enumerate(uvec) if v}
        xi = F.inverse(x)
        d1x = {i * E.dim + 0: v for i, v in xi.items()}
        d0x = {}
        for i, v in x.items():
            for (fp, ep), c in S["rhoFE"][i].items():
                d0x[fp * E.dim + ep] = (d0x.get(fp * E.dim + ep, 0) + v * c) % p
        Xd = {i: v for i, v in enumerate(Xvec) if v}
        res = FE.mul(FE.mul(d1x, Xd), d0x)
        out = [0] * FE.dim
        for i, v in res.items():
            out[i] = v
        return tuple(out)

    for (XH, XE) in box:
        for u in unitsF:
            key = (actH(XH, u), actE(XE, u))
            assert key in idx, "diagonal action must preserve box"
            i, j = find(idx[(XH, XE)]), find(idx[key])
            parent[i] = j
    nbox_orbits = len({find(i) for i in range(len(box))})
    trivH = tuple(1 if i == 0 else 0 for i in range(FH.dim))
    trivE = tuple(1 if i == 0 else 0 for i in range(FE.dim))
    sizes = {}
    for i in range(len(box)):
        sizes.setdefault(find(i), 0)
        sizes[find(i)] += 1
    print(f"   box diagonal orbits = {nbox_orbits} sizes={sorted(sizes.values())} "
          f"distinguished in box: {(trivH, trivE) in idx}")

    # H0 counts: invertible x with rho(x) = x (x) 1
    h0B = [u for u in F.units()
           if all((S["rhoFB"][i] == {(i, 0): 1} or u[i] == 0) for i in range(dimF))]
    # cleaner: check map equality directly
    def h0_count(rho, dimC):
        cnt = 0
        for u in F.units():
            lhs = {}
            for i, v in enumerate(u):
                if v:
                    for (f2, c2), c in rho[i].items():
                        lhs[(f2, c2)] = (lhs.get((f2, c2), 0) + v * c) % p
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {(i, 0): v % p for i, v in enumerate(u) if v}
            if lhs == rhs:
                cnt += 1
        return cnt

    print(f"   |H0(B,F)|={h0_count(S['rhoFB'], B.dim)} "
          f"|H0(H,F)|={h0_count(S['rhoFH'], H.dim)} "
          f"|H0*(E,F)|={h0_count(S['rhoFE'], E.dim)}")


run(2, 5)
run(3, 7)


def run_orbit_details(n, p):
    """H1 class structure of the plain-H and star-E diagrams (oracle for unit
    tests of the separate factors)."""
    S = setup(n, p)
    H, E, FE = S["H"], S["E"], S["FE"]
    F = E
    dimF = n
    FH = tensor(F, H)
    FHH = tensor(FH, H)

    def face0_1(j):
        f, h = divmod(j, H.dim)
        return {(fp * H.dim + hp) * H.dim + h: c
                for (fp, hp), c in S["rhoFH"][f].items()}

    def face1_1(j):
        f, h = divmod(j, H.dim)
        return {(f * H.dim + h1) * H.dim + h2: c
                for (h1, h2), c in S["deltaH"][h].items()}

    def face2_1(j):
        return {j * H.dim + 0: 1}

    d0 = as_matrix(face0_1, FH.dim, FHH.dim, p)
    d1 = as_matrix(face1_1, FH.dim, FHH.dim, p)
    d2 = as_matrix(face2_1, FH.dim, FHH.dim, p)
    Z1H = z1_enumerate(p, dimF, H.dim, S["epsH"], 0, d0, d1, d2, FHH)

    FEE = S["FEE"]

    def e_face0(j):
        f, e = divmod(j, E.dim)
        return {(fp * E.dim + ep) * E.dim + e: c
                for (fp, ep), c in S["rhoFE"][f].items()}

    def e_face1(j):
        f, e = divmod(j, E.dim)
        return {(f * E.dim + e1) * E.dim + e2: c
                for (e1, e2), c in S["deltaE"][e].items()}

    def e_face2(j):
        return {j * E.dim + 0: 1}

    e0 = as_matrix(e_face0, FE.dim, FEE.dim, p)
    e1 = as_matrix(e_face1, FE.dim, FEE.dim, p)
    e2 = as_matrix(e_face2, FE.dim, FEE.dim, p)
    Z1E = z1_enumerate(p, dimF, E.dim, S["epsE"], 0, e0, e1, e2, FEE)

    unitsF = [u for u in F.units()]

    def actH(Xvec, uvec):
        x = {i: v for i, v in enumerate(uvec) if v}
        xi = F.inverse(x)
        d1x = {i * H.dim + 0: v for i, v in xi.items()}
        d0x = {}
        for i, v in x.items():
            for (fp, hp), c in S["rhoFH"][i].items():
                d0x[fp * H.dim + hp] = (d0x.get(fp * H.dim + hp, 0) + v * c) % p
        Xd = {i: v for i, v in enumerate(Xvec) if v}
        res = FH.mul(FH.mul(d1x, Xd), d0x)
        out = [0] * FH.dim
        for i, v in res.items():
            out[i] = v
        return tuple(out)

    def actE(Xvec, uvec):
        x = {i: v for i, v in enumerate(uvec) if v}
        xi = F.inverse(x)
        d1x = {i * E.dim + 0: v for i, v in xi.items()}
        d0x = {}
        for i, v in x.items():
            for (fp, ep), c in S["rhoFE"][i].items():
                d0x[fp * E.dim + ep] = (d0x.get(fp * E.dim + ep, 0) + v * c) % p
        Xd = {i: v for i, v in enumerate(Xvec) if v}
        res = FE.mul(FE.mul(d1x, Xd), d0x)
        out = [0] * FE.dim
        for i, v in res.items():
            out[i] = v
        return tuple(out)

    trivH = tuple(1 if i == 0 else 0 for i in range(FH.dim))
    trivE = tuple(1 if i == 0 else 0 for i in range(FE.dim))
    clsH = orbits(Z1H, unitsF, actH)
    print(f"n={n} p={p}: H1(H,F) classes={len(clsH)} "
          f"sizes={sorted(len(c) for c in clsH)} "
          f"dist-size={[len(c) for c in clsH if trivH in c]}")
    clsE = orbits(Z1E, unitsF, actE)
    print(f"n={n} p={p}: H1*(E,F) classes={len(clsE)} "
          f"sizes={sorted(len(c) for c in clsE)} "
          f"dist-size={[len(c) for c in clsE if trivE in c]}")


run_orbit_details(2, 5)
run_orbit_details(3, 7)
