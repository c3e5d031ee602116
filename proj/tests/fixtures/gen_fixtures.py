#!/usr/bin/env python3
"""Regenerate the FCIDUMP fixtures under this directory.

Runs a minimal restricted Hartree-Fock on small molecules (s/p Gaussian
basis functions, McMurchie-Davidson integrals) and writes the MO-basis
integrals in FCIDUMP format (chemists' convention, 1-based indices).

The committed fixtures are the output of this script; it only needs to be
re-run if a fixture is added or a geometry changes.  Requires numpy.
"""

import math

import numpy as np

# ---------------------------------------------------------------------------
# Basis data (exponents / contraction coefficients for normalized primitives)
# ---------------------------------------------------------------------------

STO3G = {
    "H": [
        ("s", [3.42525091, 0.62391373, 0.16885540],
              [0.15432897, 0.53532814, 0.44463454]),
    ],
    "Li": [
        ("s", [16.1195750, 2.9362007, 0.7946505],
              [0.15432897, 0.53532814, 0.44463454]),
        ("s", [0.6362897, 0.1478601, 0.0480887],
              [-0.09996723, 0.39951283, 0.70011547]),
        ("p", [0.6362897, 0.1478601, 0.0480887],
              [0.15591627, 0.60768372, 0.39195739]),
    ],
}

G631 = {
    "H": [
        ("s", [18.7311370, 2.8253937, 0.6401217],
              [0.03349460, 0.23472695, 0.81375733]),
        ("s", [0.1612778], [1.0]),
    ],
}

ANGSTROM_TO_BOHR = 1.0 / 0.52917721067


# ---------------------------------------------------------------------------
# McMurchie-Davidson integrals over primitive Cartesian Gaussians
# ---------------------------------------------------------------------------

def boys(m_max, t):
    """F_0..F_m via downward recursion from a series-evaluated F_mmax.

    Uses F_m(t) = exp(-t)/2 * sum_k (2t)^k / [(2m+1)(2m+3)...(2m+2k+1)]
    for moderate t and the erf closed form plus upward recursion for large t.
    """
    f = np.zeros(m_max + 1)
    if t < 1e-13:
        for m in range(m_max + 1):
            f[m] = 1.0 / (2 * m + 1)
        return f
    if t > 35.0:
        f[0] = 0.5 * math.sqrt(math.pi / t) * math.erf(math.sqrt(t))
        et = math.exp(-t)
        for m in range(1, m_max + 1):
            f[m] = ((2 * m - 1) * f[m - 1] - et) / (2 * t)
        return f
    s = 0.0
    term = 1.0 / (2 * m_max + 1)
    k = 0
    while True:
        s += term
        k += 1
        term *= (2 * t) / (2 * m_max + 2 * k + 1)
        if term < 1e-17 * s or k > 500:
            break
    f[m_max] = math.exp(-t) * s
    for m in range(m_max - 1, -1, -1):
        f[m] = (2 * t * f[m + 1] + math.exp(-t)) / (2 * m + 1)
    return f


def hermite_e(i, j, t, qx, a, b):
    """Hermite expansion coefficient E_t^{ij} for a 1-D Gaussian product."""
    p = a + b
    q = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return math.exp(-q * qx * qx)
    if j == 0:
        return (hermite_e(i - 1, j, t - 1, qx, a, b) / (2 * p)
                - q * qx / a * hermite_e(i - 1, j, t, qx, a, b)
                + (t + 1) * hermite_e(i - 1, j, t + 1, qx, a, b))
    return (hermite_e(i, j - 1, t - 1, qx, a, b) / (2 * p)
            + q * qx / b * hermite_e(i, j - 1, t, qx, a, b)
            + (t + 1) * hermite_e(i, j - 1, t + 1, qx, a, b))


def overlap_prim(a, la, ra, b, lb, rb):
    p = a + b
    s = 1.0
    for x in range(3):
        s *= hermite_e(la[x], lb[x], 0, ra[x] - rb[x], a, b)
    return s * (math.pi / p) ** 1.5


def kinetic_prim(a, la, ra, b, lb, rb):
    l, m, n = lb
    term0 = b * (2 * (l + m + n) + 3) * overlap_prim(a, la, ra, b, lb, rb)
    term1 = -2 * b * b * (
        overlap_prim(a, la, ra, b, (l + 2, m, n), rb)
        + overlap_prim(a, la, ra, b, (l, m + 2, n), rb)
        + overlap_prim(a, la, ra, b, (l, m, n + 2), rb))
    term2 = -0.5 * (
        l * (l - 1) * overlap_prim(a, la, ra, b, (l - 2, m, n), rb)
        + m * (m - 1) * overlap_prim(a, la, ra, b, (l, m - 2, n), rb)
        + n * (n - 1) * overlap_prim(a, la, ra, b, (l, m, n - 2), rb))
    return term0 + term1 + term2


def hermite_coulomb(t, u, v, n, p, pc):
    if t == u == v == 0:
        return (-2 * p) ** n * hermite_coulomb.f[n]
    if t > 0:
        val = hermite_coulomb(t - 1, u, v, n + 1, p, pc) * pc[0]
        if t > 1:
            val += (t - 1) * hermite_coulomb(t - 2, u, v, n + 1, p, pc)
        return val
    if u > 0:
        val = hermite_coulomb(t, u - 1, v, n + 1, p, pc) * pc[1]
        if u > 1:
            val += (u - 1) * hermite_coulomb(t, u - 2, v, n + 1, p, pc)
        return val
    val = hermite_coulomb(t, u, v - 1, n + 1, p, pc) * pc[2]
    if v > 1:
        val += (v - 1) * hermite_coulomb(t, u, v - 2, n + 1, p, pc)
    return val


def nuclear_prim(a, la, ra, b, lb, rb, rc):
    p = a + b
    rp = (a * np.array(ra) + b * np.array(rb)) / p
    pc = rp - np.array(rc)
    lmax = sum(la) + sum(lb)
    hermite_coulomb.f = boys(lmax, p * float(pc @ pc))
    val = 0.0
    for t in range(la[0] + lb[0] + 1):
        for u in range(la[1] + lb[1] + 1):
            for v in range(la[2] + lb[2] + 1):
                e = (hermite_e(la[0], lb[0], t, ra[0] - rb[0], a, b)
                     * hermite_e(la[1], lb[1], u, ra[1] - rb[1], a, b)
                     * hermite_e(la[2], lb[2], v, ra[2] - rb[2], a, b))
                val += e * hermite_coulomb(t, u, v, 0, p, pc)
    return 2 * math.pi / p * val


def eri_prim(a, la, ra, b, lb, rb, c, lc, rc, d, ld, rd):
    p, q = a + b, c + d
    alpha = p * q / (p + q)
    rp = (a * np.array(ra) + b * np.array(rb)) / p
    rq = (c * np.array(rc) + d * np.array(rd)) / q
    rpq = rp - rq
    lmax = sum(la) + sum(lb) + sum(lc) + sum(ld)
    fvals = boys(lmax, alpha * float(rpq @ rpq))
    val = 0.0
    for t in range(la[0] + lb[0] + 1):
        for u in range(la[1] + lb[1] + 1):
            for v in range(la[2] + lb[2] + 1):
                e1 = (hermite_e(la[0], lb[0], t, ra[0] - rb[0], a, b)
                      * hermite_e(la[1], lb[1], u, ra[1] - rb[1], a, b)
                      * hermite_e(la[2], lb[2], v, ra[2] - rb[2], a, b))
                if e1 == 0.0:
                    continue
                for tt in range(lc[0] + ld[0] + 1):
                    for uu in range(lc[1] + ld[1] + 1):
                        for vv in range(lc[2] + ld[2] + 1):
                            e2 = (hermite_e(lc[0], ld[0], tt, rc[0] - rd[0], c, d)
                                  * hermite_e(lc[1], ld[1], uu, rc[1] - rd[1], c, d)
                                  * hermite_e(lc[2], ld[2], vv, rc[2] - rd[2], c, d))
                            if e2 == 0.0:
                                continue
                            hermite_coulomb.f = fvals
                            r = hermite_coulomb(t + tt, u + uu, v + vv, 0, alpha, rpq)
                            val += e1 * e2 * (-1) ** (tt + uu + vv) * r
    return val * 2 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))


def prim_norm(alpha, l):
    lx, ly, lz = l
    def df(n):
        return 1 if n <= 0 else n * df(n - 2)
    return ((2 * alpha / math.pi) ** 0.75
            * (4 * alpha) ** ((lx + ly + lz) / 2.0)
            / math.sqrt(df(2 * lx - 1) * df(2 * ly - 1) * df(2 * lz - 1)))


class BasisFunction:
    def __init__(self, center, l, exps, coefs):
        self.center = tuple(center)
        self.l = tuple(l)
        self.exps = list(exps)
        self.coefs = [c * prim_norm(a, l) for a, c in zip(exps, coefs)]
        # renormalize the contracted function
        s = 0.0
        for ai, ci in zip(self.exps, self.coefs):
            for aj, cj in zip(self.exps, self.coefs):
                s += ci * cj * overlap_prim(ai, self.l, self.center,
                                            aj, self.l, self.center)
        self.coefs = [c / math.sqrt(s) for c in self.coefs]


def build_basis(atoms, basis_table):
    fns = []
    for sym, pos in atoms:
        for shell, exps, coefs in basis_table[sym]:
            if shell == "s":
                fns.append(BasisFunction(pos, (0, 0, 0), exps, coefs))
            elif shell == "p":
                for l in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
                    fns.append(BasisFunction(pos, l, exps, coefs))
    return fns


def contracted(op, f1, f2, *rest):
    val = 0.0
    for a, ca in zip(f1.exps, f1.coefs):
        for b, cb in zip(f2.exps, f2.coefs):
            val += ca * cb * op(a, f1.l, f1.center, b, f2.l, f2.center, *rest)
    return val


def integrals(atoms, fns, charges):
    n = len(fns)
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    Vn = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            S[i, j] = contracted(overlap_prim, fns[i], fns[j])
            T[i, j] = contracted(kinetic_prim, fns[i], fns[j])
            for (sym, pos), z in zip(atoms, charges):
                Vn[i, j] -= z * contracted(nuclear_prim, fns[i], fns[j], pos)
    eri = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(i + 1):
            for k in range(n):
                for l in range(k + 1):
                    if (i * (i + 1) // 2 + j) < (k * (k + 1) // 2 + l):
                        continue
                    val = 0.0
                    for a, ca in zip(fns[i].exps, fns[i].coefs):
                        for b, cb in zip(fns[j].exps, fns[j].coefs):
                            for c, cc in zip(fns[k].exps, fns[k].coefs):
                                for d, cd in zip(fns[l].exps, fns[l].coefs):
                                    val += ca * cb * cc * cd * eri_prim(
                                        a, fns[i].l, fns[i].center,
                                        b, fns[j].l, fns[j].center,
                                        c, fns[k].l, fns[k].center,
                                        d, fns[l].l, fns[l].center)
                    for (p, q) in [(i, j), (j, i)]:
                        for (r, s) in [(k, l), (l, k)]:
                            eri[p, q, r, s] = val
                            eri[r, s, p, q] = val
    return S, T + Vn, eri


def rhf(S, Hcore, eri, n_elec, e_nuc, max_iter=200, tol=1e-12):
    n = S.shape[0]
    w, v = np.linalg.eigh(S)
    X = v @ np.diag(w ** -0.5) @ v.T
    D = np.zeros((n, n))
    e_old = 0.0
    C = None
    for _ in range(max_iter):
        J = np.einsum("pqrs,rs->pq", eri, D)
        K = np.einsum("prqs,rs->pq", eri, D)
        F = Hcore + 2 * J - K
        Fp = X.T @ F @ X
        eps, Cp = np.linalg.eigh(Fp)
        C = X @ Cp
        occ = C[:, : n_elec // 2]
        D = occ @ occ.T
        e_elec = np.einsum("pq,pq->", D, Hcore + F)
        if abs(e_elec - e_old) < tol:
            break
        e_old = e_elec
    return e_elec + e_nuc, C, eps


def mo_integrals(Hcore, eri, C):
    h_mo = C.T @ Hcore @ C
    eri_mo = np.einsum("pqrs,pi,qj,rk,sl->ijkl", eri, C, C, C, C, optimize=True)
    return h_mo, eri_mo


def write_fcidump(path, h_mo, eri_mo, n_elec, e_core, ms2=0, thresh=1e-12):
    n = h_mo.shape[0]
    lines = []
    lines.append(f"&FCI NORB={n},NELEC={n_elec},MS2={ms2},")
    lines.append(" ORBSYM=" + "1," * n)
    lines.append(" ISYM=1,")
    lines.append("&END")
    def emit(val, i, j, k, l):
        lines.append(f"{val: .16E} {i:4d} {j:4d} {k:4d} {l:4d}")
    seen = set()
    for p in range(n):
        for q in range(p + 1):
            for r in range(n):
                for s in range(r + 1):
                    pq = p * (p + 1) // 2 + q
                    rs = r * (r + 1) // 2 + s
                    if pq < rs:
                        continue
                    val = eri_mo[p, q, r, s]
                    if abs(val) > thresh and (pq, rs) not in seen:
                        seen.add((pq, rs))
                        emit(val, p + 1, q + 1, r + 1, s + 1)
    for p in range(n):
        for q in range(p + 1):
            if abs(h_mo[p, q]) > thresh:
                emit(h_mo[p, q], p + 1, q + 1, 0, 0)
    emit(e_core, 0, 0, 0, 0)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {path} (norb={n}, nelec={n_elec})")


def run(name, atoms, charges, n_elec, basis_table):
    e_nuc = 0.0
    for i in range(len(atoms)):
        for j in range(i):
            r = np.array(atoms[i][1]) - np.array(atoms[j][1])
            e_nuc += charges[i] * charges[j] / math.sqrt(float(r @ r))
    fns = build_basis(atoms, basis_table)
    S, Hcore, eri = integrals(atoms, fns, charges)
    e_hf, C, eps = rhf(S, Hcore, eri, n_elec, e_nuc)
    print(f"{name}: E_HF = {e_hf:.8f} Ha, orbital energies {np.round(eps, 4)}")
    h_mo, eri_mo = mo_integrals(Hcore, eri, C)
    write_fcidump(name, h_mo, eri_mo, n_elec, e_nuc)


def main():
    r_h2 = 0.7414 * ANGSTROM_TO_BOHR
    h2 = [("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, r_h2))]
    run("h2_sto3g.fcidump", h2, [1.0, 1.0], 2, STO3G)
    run("h2_631g.fcidump", h2, [1.0, 1.0], 2, G631)

    r_lih = 1.5949 * ANGSTROM_TO_BOHR
    lih = [("Li", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, r_lih))]
    run("lih_sto3g.fcidump", lih, [3.0, 1.0], 4, STO3G)


if __name__ == "__main__":
    main()
