#!/usr/bin/env python3
"""Generate STO-3G FCIDUMP fixtures for the test suite.

Self-contained restricted Hartree-Fock over s/p Gaussians
(McMurchie-Davidson recurrences), MO transformation, FCIDUMP output,
and a determinant-based FCI check for the small systems.
"""
import argparse
import itertools
import math
import os

import numpy as np
from scipy.special import hyp1f1

ANGSTROM_TO_BOHR = 1.8897259886

# STO-3G: element -> list of shells (l, [(exponent, coeff), ...])
STO3G = {
    "H": [(0, [(3.42525091, 0.15432897),
               (0.62391373, 0.53532814),
               (0.16885540, 0.44463454)])],
    "B": [(0, [(48.79111318, 0.1543289673),
               (8.887362172, 0.5353281423),
               (2.405267040, 0.4446345422)]),
          (0, [(2.236956142, -0.09996722919),
               (0.5198204999, 0.3995128261),
               (0.1690617600, 0.7001154689)]),
          (1, [(2.236956142, 0.1559162750),
               (0.5198204999, 0.6076837186),
               (0.1690617600, 0.3919573931)])],
    "O": [(0, [(130.7093214, 0.1543289673),
               (23.80886605, 0.5353281423),
               (6.443608313, 0.4446345422)]),
          (0, [(5.033151319, -0.09996722919),
               (1.169596125, 0.3995128261),
               (0.3803889600, 0.7001154689)]),
          (1, [(5.033151319, 0.1559162750),
               (1.169596125, 0.6076837186),
               (0.3803889600, 0.3919573931)])],
    "F": [(0, [(166.6791340, 0.1543289673),
               (30.36081233, 0.5353281423),
               (8.216820672, 0.4446345422)]),
          (0, [(6.464803249, -0.09996722919),
               (1.502281245, 0.3995128261),
               (0.4885884864, 0.7001154689)]),
          (1, [(6.464803249, 0.1559162750),
               (1.502281245, 0.6076837186),
               (0.4885884864, 0.3919573931)])],
}

Z = {"H": 1, "B": 5, "O": 8, "F": 9}


def boys(n, t):
    return hyp1f1(n + 0.5, n + 1.5, -t) / (2.0 * n + 1.0)


def hermite_E(i, j, t, Qx, a, b):
    p = a + b
    q = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return math.exp(-q * Qx * Qx)
    if j == 0:
        return (hermite_E(i - 1, j, t - 1, Qx, a, b) / (2 * p)
                - (q * Qx / a) * hermite_E(i - 1, j, t, Qx, a, b)
                + (t + 1) * hermite_E(i - 1, j, t + 1, Qx, a, b))
    return (hermite_E(i, j - 1, t - 1, Qx, a, b) / (2 * p)
            + (q * Qx / b) * hermite_E(i, j - 1, t, Qx, a, b)
            + (t + 1) * hermite_E(i, j - 1, t + 1, Qx, a, b))


def overlap_prim(a, lmn1, A, b, lmn2, B):
    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    S1 = hermite_E(l1, l2, 0, A[0] - B[0], a, b)
    S2 = hermite_E(m1, m2, 0, A[1] - B[1], a, b)
    S3 = hermite_E(n1, n2, 0, A[2] - B[2], a, b)
    return S1 * S2 * S3 * (math.pi / (a + b)) ** 1.5


def kinetic_prim(a, lmn1, A, b, lmn2, B):
    l2, m2, n2 = lmn2
    term0 = b * (2 * (l2 + m2 + n2) + 3) * overlap_prim(a, lmn1, A, b, lmn2, B)
    term1 = -2 * b * b * (overlap_prim(a, lmn1, A, b, (l2 + 2, m2, n2), B)
                          + overlap_prim(a, lmn1, A, b, (l2, m2 + 2, n2), B)
                          + overlap_prim(a, lmn1, A, b, (l2, m2, n2 + 2), B))
    term2 = -0.5 * (l2 * (l2 - 1) * overlap_prim(a, lmn1, A, b, (l2 - 2, m2, n2), B)
                    + m2 * (m2 - 1) * overlap_prim(a, lmn1, A, b, (l2, m2 - 2, n2), B)
                    + n2 * (n2 - 1) * overlap_prim(a, lmn1, A, b, (l2, m2, n2 - 2), B))
    return term0 + term1 + term2


def hermite_R(t, u, v, n, p, PCx, PCy, PCz, RPC):
    if t == u == v == 0:
        return (-2 * p) ** n * boys(n, p * RPC * RPC)
    if t > 0:
        val = 0.0
        if t > 1:
            val += (t - 1) * hermite_R(t - 2, u, v, n + 1, p, PCx, PCy, PCz, RPC)
        return val + PCx * hermite_R(t - 1, u, v, n + 1, p, PCx, PCy, PCz, RPC)
    if u > 0:
        val = 0.0
        if u > 1:
            val += (u - 1) * hermite_R(t, u - 2, v, n + 1, p, PCx, PCy, PCz, RPC)
        return val + PCy * hermite_R(t, u - 1, v, n + 1, p, PCx, PCy, PCz, RPC)
    val = 0.0
    if v > 1:
        val += (v - 1) * hermite_R(t, u, v - 2, n + 1, p, PCx, PCy, PCz, RPC)
    return val + PCz * hermite_R(t, u, v - 1, n + 1, p, PCx, PCy, PCz, RPC)


def nuclear_prim(a, lmn1, A, b, lmn2, B, C):
    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    p = a + b
    P = (a * np.asarray(A) + b * np.asarray(B)) / p
    RPC = np.linalg.norm(P - C)
    val = 0.0
    for t in range(l1 + l2 + 1):
        for u in range(m1 + m2 + 1):
            for v in range(n1 + n2 + 1):
                val += (hermite_E(l1, l2, t, A[0] - B[0], a, b)
                        * hermite_E(m1, m2, u, A[1] - B[1], a, b)
                        * hermite_E(n1, n2, v, A[2] - B[2], a, b)
                        * hermite_R(t, u, v, 0, p, P[0] - C[0], P[1] - C[1], P[2] - C[2], RPC))
    return 2 * math.pi / p * val


def eri_prim(a, lmn1, A, b, lmn2, B, c, lmn3, C, d, lmn4, D):
    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    l3, m3, n3 = lmn3
    l4, m4, n4 = lmn4
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    P = (a * np.asarray(A) + b * np.asarray(B)) / p
    Q = (c * np.asarray(C) + d * np.asarray(D)) / q
    RPQ = np.linalg.norm(P - Q)
    val = 0.0
    for t in range(l1 + l2 + 1):
        for u in range(m1 + m2 + 1):
            for v in range(n1 + n2 + 1):
                Etuv = (hermite_E(l1, l2, t, A[0] - B[0], a, b)
                        * hermite_E(m1, m2, u, A[1] - B[1], a, b)
                        * hermite_E(n1, n2, v, A[2] - B[2], a, b))
                if Etuv == 0.0:
                    continue
                for tau in range(l3 + l4 + 1):
                    for nu in range(m3 + m4 + 1):
                        for phi in range(n3 + n4 + 1):
                            Etnp = (hermite_E(l3, l4, tau, C[0] - D[0], c, d)
                                    * hermite_E(m3, m4, nu, C[1] - D[1], c, d)
                                    * hermite_E(n3, n4, phi, C[2] - D[2], c, d))
                            if Etnp == 0.0:
                                continue
                            val += (Etuv * Etnp * (-1) ** (tau + nu + phi)
                                    * hermite_R(t + tau, u + nu, v + phi, 0, alpha,
                                                P[0] - Q[0], P[1] - Q[1], P[2] - Q[2], RPQ))
    return val * 2 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))


def prim_norm(a, lmn):
    l, m, n = lmn
    return math.sqrt((2 * a / math.pi) ** 1.5 * (4 * a) ** (l + m + n)
                     / (df(2 * l - 1) * df(2 * m - 1) * df(2 * n - 1)))


def df(n):
    return 1 if n <= 0 else n * df(n - 2)


class BasisFunction:
    def __init__(self, center, lmn, prims):
        self.A = np.asarray(center, dtype=float)
        self.lmn = lmn
        self.prims = [(a, c * prim_norm(a, lmn)) for a, c in prims]
        s = 0.0
        for a, ca in self.prims:
            for b, cb in self.prims:
                s += ca * cb * overlap_prim(a, lmn, self.A, b, lmn, self.A)
        norm = 1.0 / math.sqrt(s)
        self.prims = [(a, c * norm) for a, c in self.prims]


def build_basis(atoms):
    funcs = []
    for el, pos in atoms:
        for l, prims in STO3G[el]:
            if l == 0:
                funcs.append(BasisFunction(pos, (0, 0, 0), prims))
            else:
                for lmn in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
                    funcs.append(BasisFunction(pos, lmn, prims))
    return funcs


def contracted(op, f1, f2, *rest):
    val = 0.0
    if op in ("S", "T"):
        fn = overlap_prim if op == "S" else kinetic_prim
        for a, ca in f1.prims:
            for b, cb in f2.prims:
                val += ca * cb * fn(a, f1.lmn, f1.A, b, f2.lmn, f2.A)
    elif op == "V":
        C = rest[0]
        for a, ca in f1.prims:
            for b, cb in f2.prims:
                val += ca * cb * nuclear_prim(a, f1.lmn, f1.A, b, f2.lmn, f2.A, C)
    return val


def compute_integrals(atoms):
    funcs = build_basis(atoms)
    n = len(funcs)
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            S[i, j] = S[j, i] = contracted("S", funcs[i], funcs[j])
            T[i, j] = T[j, i] = contracted("T", funcs[i], funcs[j])
            v = 0.0
            for el, pos in atoms:
                v -= Z[el] * contracted("V", funcs[i], funcs[j], np.asarray(pos, dtype=float))
            V[i, j] = V[j, i] = v
    eri = np.zeros((n, n, n, n))
    done = {}
    for i in range(n):
        for j in range(i + 1):
            for k in range(n):
                for l in range(k + 1):
                    if (i, j) < (k, l):
                        continue
                    val = 0.0
                    for a, ca in funcs[i].prims:
                        for b, cb in funcs[j].prims:
                            for c, cc in funcs[k].prims:
                                for d, cd in funcs[l].prims:
                                    val += ca * cb * cc * cd * eri_prim(
                                        a, funcs[i].lmn, funcs[i].A,
                                        b, funcs[j].lmn, funcs[j].A,
                                        c, funcs[k].lmn, funcs[k].A,
                                        d, funcs[l].lmn, funcs[l].A)
                    for (p, q, r, s) in [(i, j, k, l), (j, i, k, l), (i, j, l, k), (j, i, l, k),
                                         (k, l, i, j), (l, k, i, j), (k, l, j, i), (l, k, j, i)]:
                        eri[p, q, r, s] = val
    return S, T + V, eri


def nuclear_repulsion(atoms):
    e = 0.0
    for (e1, p1), (e2, p2) in itertools.combinations(atoms, 2):
        e += Z[e1] * Z[e2] / np.linalg.norm(np.asarray(p1) - np.asarray(p2))
    return e


def rhf(atoms, charge, max_iter=200, tol=1e-12):
    S, hcore, eri = compute_integrals(atoms)
    n = S.shape[0]
    nelec = sum(Z[el] for el, _ in atoms) - charge
    assert nelec % 2 == 0, "RHF needs an even electron count"
    nocc = nelec // 2
    evals, evecs = np.linalg.eigh(S)
    X = evecs @ np.diag(evals ** -0.5) @ evecs.T
    D = np.zeros((n, n))
    e_old = 0.0
    for it in range(max_iter):
        J = np.einsum("pqrs,rs->pq", eri, D)
        K = np.einsum("prqs,rs->pq", eri, D)
        F = hcore + 2 * J - K
        Fp = X.T @ F @ X
        eps, Cp = np.linalg.eigh(Fp)
        C = X @ Cp
        D = C[:, :nocc] @ C[:, :nocc].T
        e_el = np.sum(D * (hcore + F))
        if abs(e_el - e_old) < tol and it > 1:
            break
        e_old = e_el
    e_nuc = nuclear_repulsion(atoms)
    return e_el + e_nuc, C, hcore, eri, e_nuc, nocc


def mo_integrals(C, hcore, eri):
    h1 = C.T @ hcore @ C
    g = np.einsum("pi,qj,rk,sl,pqrs->ijkl", C, C, C, C, eri, optimize=True)
    # g[i,j,k,l] = (ij|kl) chemist
    return h1, g


def write_fcidump(path, h1, g, e_nuc, nelec, ms2=0, thresh=1e-14):
    n = h1.shape[0]
    with open(path, "w") as f:
        f.write(f"&FCI NORB={n},NELEC={nelec},MS2={ms2},\n")
        f.write(" ORBSYM=" + "1," * n + "\n")
        f.write(" ISYM=1,\n")
        f.write("&END\n")
        for i in range(n):
            for j in range(i + 1):
                for k in range(i + 1):
                    lmax = j if k == i else k
                    for l in range(lmax + 1):
                        v = g[i, j, k, l]
                        if abs(v) > thresh:
                            f.write(f" {v:23.16E} {i+1:3d} {j+1:3d} {k+1:3d} {l+1:3d}\n")
        for i in range(n):
            for j in range(i + 1):
                if abs(h1[i, j]) > thresh:
                    f.write(f" {h1[i,j]:23.16E} {i+1:3d} {j+1:3d}   0   0\n")
        f.write(f" {e_nuc:23.16E}   0   0   0   0\n")


def fci_energy(h1, g, e_nuc, n_alpha, n_beta):
    """Sector FCI by dense Jordan-Wigner build over spin orbitals (blocked
    ordering: alpha 0..n-1, beta n..2n-1)."""
    import scipy.sparse as sp

    n = h1.shape[0]
    M = 2 * n
    dim = 2 ** M

    def ladder(p):
        rows, cols, vals = [], [], []
        for s in range(dim):
            if (s >> p) & 1:
                sign = (-1) ** bin(s & ((1 << p) - 1)).count("1")
                rows.append(s & ~(1 << p))
                cols.append(s)
                vals.append(float(sign))
        return sp.csr_matrix((vals, (rows, cols)), shape=(dim, dim))

    a = [ladder(p) for p in range(M)]
    ad = [x.T.tocsr() for x in a]
    spat = lambda p: p % n
    spin = lambda p: p // n
    H = sp.csr_matrix((dim, dim))
    for p in range(M):
        for q in range(M):
            if spin(p) == spin(q) and h1[spat(p), spat(q)] != 0:
                H = H + h1[spat(p), spat(q)] * (ad[p] @ a[q])
    for p in range(M):
        for q in range(M):
            for r in range(M):
                for s in range(M):
                    if spin(p) == spin(s) and spin(q) == spin(r):
                        v = g[spat(p), spat(s), spat(q), spat(r)]
                        if v != 0:
                            H = H + 0.5 * v * (ad[p] @ ad[q] @ a[r] @ a[s])
    H = H + e_nuc * sp.identity(dim)
    idxs = [s for s in range(dim)
            if bin(s & ((1 << n) - 1)).count("1") == n_alpha
            and bin(s >> n).count("1") == n_beta]
    Hs = H[np.ix_(idxs, idxs)].toarray()
    return np.linalg.eigvalsh(Hs)[0]


def geom_h2(r):
    return [("H", (0, 0, 0)), ("H", (0, 0, r * ANGSTROM_TO_BOHR))]


def geom_h3p(r):
    a = r * ANGSTROM_TO_BOHR
    h = a * math.sqrt(3) / 2
    return [("H", (0, 0, 0)), ("H", (a, 0, 0)), ("H", (a / 2, h, 0))]


def geom_diatomic(e1, e2, r):
    return [(e1, (0, 0, 0)), (e2, (0, 0, r * ANGSTROM_TO_BOHR))]


def geom_bh3(r):
    a = r * ANGSTROM_TO_BOHR
    out = [("B", (0, 0, 0))]
    for k in range(3):
        th = 2 * math.pi * k / 3
        out.append(("H", (a * math.cos(th), a * math.sin(th), 0)))
    return out


def emit(outdir, label, atoms, charge, bond, do_fci=False):
    e_hf, C, hcore, eri, e_nuc, nocc = rhf(atoms, charge)
    h1, g = mo_integrals(C, hcore, eri)
    nelec = sum(Z[el] for el, _ in atoms) - charge
    path = os.path.join(outdir, f"{label}_{bond:.4f}.fcidump")
    write_fcidump(path, h1, g, e_nuc, nelec)
    line = f"{label} r={bond:.4f} E_RHF={e_hf:.8f}"
    if do_fci:
        e_fci = fci_energy(h1, g, e_nuc, nocc, nocc)
        line += f" E_FCI={e_fci:.8f}"
    print(line, flush=True)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="tests/fixtures")
    ap.add_argument("--heavy", action="store_true", help="also generate OH-/HF/BH3 scans")
    args = ap.parse_args()
    os.makedirs(args.outdir, exist_ok=True)

    emit(args.outdir, "h2", geom_h2(0.7414), 0, 0.7414, do_fci=True)
    emit(args.outdir, "h3+", geom_h3p(0.9), 1, 0.9, do_fci=True)
    emit(args.outdir, "oh-", geom_diatomic("O", "H", 0.9640), -1, 0.9640, do_fci=True)
    emit(args.outdir, "hf", geom_diatomic("H", "F", 0.9168), 0, 0.9168, do_fci=True)
    emit(args.outdir, "bh3", geom_bh3(1.19), 0, 1.19)

    if args.heavy:
        for r in np.arange(0.7, 1.45, 0.1):
            emit(args.outdir, "oh-", geom_diatomic("O", "H", r), -1, r)
            emit(args.outdir, "hf", geom_diatomic("H", "F", r), 0, r)
            emit(args.outdir, "bh3", geom_bh3(r), 0, r)


if __name__ == "__main__":
    main()
