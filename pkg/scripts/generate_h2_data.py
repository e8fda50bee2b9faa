#!/usr/bin/env python3
"""Generate the shipped H2/STO-3G integral file and reference-energy fixture.

Pre-build data step: computes the molecular-orbital integrals of H2 at a fixed
bond length from closed-form s-type Gaussian formulas, writes them as an
FCIDUMP file, and records independently computed reference energies (RHF and
full CI) in a JSON fixture next to it.

The CI oracle here deliberately avoids second quantization: the two-electron
Hamiltonian is assembled in the first-quantized product basis and projected
onto its antisymmetric subspace, so the recorded energies share no code path
with the package that consumes the FCIDUMP.

Only numpy/scipy are required:

    python3 scripts/generate_h2_data.py [--bond-angstrom 0.735] [--out-dir data]
"""

import argparse
import json
import math
from pathlib import Path

import numpy as np
from scipy.special import erf

BOHR_PER_ANGSTROM = 1.0 / 0.529177210903

# STO-3G hydrogen 1s: exponents and contraction coefficients (zeta = 1.24
# already folded into the exponents), Basis Set Exchange values.
STO3G_H_EXPONENTS = np.array([3.425250914, 0.6239137298, 0.1688554040])
STO3G_H_COEFFS = np.array([0.1543289673, 0.5353281423, 0.4446345422])


def boys_f0(t):
    if t < 1e-12:
        return 1.0 - t / 3.0
    return 0.5 * math.sqrt(math.pi / t) * erf(math.sqrt(t))


def primitive_norm(alpha):
    return (2.0 * alpha / math.pi) ** 0.75


def overlap_ss(a, b, rab2):
    return (math.pi / (a + b)) ** 1.5 * math.exp(-a * b / (a + b) * rab2)


def kinetic_ss(a, b, rab2):
    p = a + b
    mu = a * b / p
    return mu * (3.0 - 2.0 * mu * rab2) * (math.pi / p) ** 1.5 * math.exp(-mu * rab2)


def nuclear_ss(a, b, ra, rb, rc, charge):
    p = a + b
    rab2 = float(np.dot(ra - rb, ra - rb))
    rp = (a * ra + b * rb) / p
    rpc2 = float(np.dot(rp - rc, rp - rc))
    return -charge * 2.0 * math.pi / p * math.exp(-a * b / p * rab2) * boys_f0(p * rpc2)


def eri_ssss(a, b, c, d, ra, rb, rc, rd):
    p = a + b
    q = c + d
    rab2 = float(np.dot(ra - rb, ra - rb))
    rcd2 = float(np.dot(rc - rd, rc - rd))
    rp = (a * ra + b * rb) / p
    rq = (c * rc + d * rd) / q
    rpq2 = float(np.dot(rp - rq, rp - rq))
    pref = 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))
    return pref * math.exp(-a * b / p * rab2 - c * d / q * rcd2) * boys_f0(p * q / (p + q) * rpq2)


def h2_ao_integrals(r_bohr):
    """Contracted AO integrals for two STO-3G hydrogens on the z axis."""
    centers = [np.zeros(3), np.array([0.0, 0.0, r_bohr])]
    prims = [(alpha, coeff * primitive_norm(alpha))
             for alpha, coeff in zip(STO3G_H_EXPONENTS, STO3G_H_COEFFS)]

    s = np.zeros((2, 2))
    t = np.zeros((2, 2))
    v = np.zeros((2, 2))
    for i in range(2):
        for j in range(2):
            rij2 = float(np.dot(centers[i] - centers[j], centers[i] - centers[j]))
            for a, ca in prims:
                for b, cb in prims:
                    s[i, j] += ca * cb * overlap_ss(a, b, rij2)
                    t[i, j] += ca * cb * kinetic_ss(a, b, rij2)
                    for rc in centers:
                        v[i, j] += ca * cb * nuclear_ss(a, b, centers[i], centers[j], rc, 1.0)

    eri = np.zeros((2, 2, 2, 2))
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    val = 0.0
                    for a, ca in prims:
                        for b, cb in prims:
                            for c, cc in prims:
                                for d, cd in prims:
                                    val += ca * cb * cc * cd * eri_ssss(
                                        a, b, c, d,
                                        centers[i], centers[j], centers[k], centers[l])
                    eri[i, j, k, l] = val
    return s, t + v, eri


def h2_mo_integrals(r_bohr):
    """MO-basis one-/two-electron integrals; the symmetric dimer's RHF orbitals
    are fixed by symmetry (gerade/ungerade combinations), so no SCF is needed."""
    s, hcore, eri = h2_ao_integrals(r_bohr)
    s12 = s[0, 1]
    cg = np.array([1.0, 1.0]) / math.sqrt(2.0 * (1.0 + s12))
    cu = np.array([1.0, -1.0]) / math.sqrt(2.0 * (1.0 - s12))
    coeffs = np.column_stack([cg, cu])

    h_mo = coeffs.T @ hcore @ coeffs
    eri_mo = np.einsum("ai,bj,ck,dl,abcd->ijkl", coeffs, coeffs, coeffs, coeffs, eri)
    e_nuc = 1.0 / r_bohr
    return h_mo, eri_mo, e_nuc


def fci_first_quantized(h_mo, eri_mo, e_nuc):
    """Two-electron FCI via the antisymmetric subspace of the product basis.

    Spin orbitals are (spatial, spin) pairs; H = h(1) + h(2) + V(1,2) acts on
    the 16-dimensional product space and is projected with (1 - SWAP)/2.
    """
    n_spatial = h_mo.shape[0]
    spin_orbs = [(p, sp) for sp in (0, 1) for p in range(n_spatial)]
    n = len(spin_orbs)

    h1 = np.zeros((n, n))
    for i, (p, sp) in enumerate(spin_orbs):
        for j, (q, sq) in enumerate(spin_orbs):
            if sp == sq:
                h1[i, j] = h_mo[p, q]

    dim = n * n
    ham = np.kron(h1, np.eye(n)) + np.kron(np.eye(n), h1)
    vee = np.zeros((dim, dim))
    for i, (p, sp) in enumerate(spin_orbs):
        for j, (q, sq) in enumerate(spin_orbs):
            for k, (r, sr) in enumerate(spin_orbs):
                for l, (s, ss) in enumerate(spin_orbs):
                    if sp == sr and sq == ss:
                        vee[i * n + j, k * n + l] = eri_mo[p, r, q, s]
    ham = ham + vee

    swap = np.zeros((dim, dim))
    for i in range(n):
        for j in range(n):
            swap[i * n + j, j * n + i] = 1.0
    antisym = 0.5 * (np.eye(dim) - swap)

    # Orthonormal basis of the antisymmetric subspace.
    w, vecs = np.linalg.eigh(antisym)
    basis = vecs[:, w > 0.5]
    h_asym = basis.T @ ham @ basis
    evals = np.linalg.eigvalsh(h_asym)
    return float(evals[0] + e_nuc)


def rhf_energy(h_mo, eri_mo, e_nuc):
    # Closed shell, both electrons in the gerade orbital.
    return float(2.0 * h_mo[0, 0] + eri_mo[0, 0, 0, 0] + e_nuc)


def write_fcidump(path, h_mo, eri_mo, e_nuc, nelec, ms2, tol=1e-14):
    norb = h_mo.shape[0]
    lines = [f" &FCI NORB={norb},NELEC={nelec},MS2={ms2},",
             "  ORBSYM=" + "1," * norb,
             "  ISYM=1,",
             " &END"]
    # Chemist-notation (ij|kl), 8-fold-symmetry-unique entries.
    for i in range(norb):
        for j in range(i + 1):
            for k in range(i + 1):
                lmax = j if k == i else k
                for l in range(lmax + 1):
                    val = eri_mo[i, j, k, l]
                    if abs(val) > tol:
                        lines.append(f"{val:23.16e} {i+1:3d} {j+1:3d} {k+1:3d} {l+1:3d}")
    for i in range(norb):
        for j in range(i + 1):
            if abs(h_mo[i, j]) > tol:
                lines.append(f"{h_mo[i, j]:23.16e} {i+1:3d} {j+1:3d}   0   0")
    lines.append(f"{e_nuc:23.16e}   0   0   0   0")
    path.write_text("\n".join(lines) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bond-angstrom", type=float, default=0.735)
    parser.add_argument("--out-dir", type=Path, default=Path(__file__).resolve().parents[1] / "data")
    args = parser.parse_args()

    r_bohr = args.bond_angstrom * BOHR_PER_ANGSTROM
    h_mo, eri_mo, e_nuc = h2_mo_integrals(r_bohr)
    e_hf = rhf_energy(h_mo, eri_mo, e_nuc)
    e_fci = fci_first_quantized(h_mo, eri_mo, e_nuc)

    args.out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"h2_sto3g_{args.bond_angstrom:.3f}"
    fcidump_path = args.out_dir / f"{stem}.fcidump"
    write_fcidump(fcidump_path, h_mo, eri_mo, e_nuc, nelec=2, ms2=0)

    fixture = {
        "molecule": "H2",
        "basis": "sto-3g",
        "bond_angstrom": args.bond_angstrom,
        "bond_bohr": r_bohr,
        "fcidump": fcidump_path.name,
        "e_nuclear_ha": e_nuc,
        "e_rhf_ha": e_hf,
        "e_fci_ha": e_fci,
        "oracle": "first-quantized antisymmetric-subspace CI (this script)",
    }
    fixture_path = args.out_dir / f"{stem}.json"
    fixture_path.write_text(json.dumps(fixture, indent=2) + "\n")

    print(f"wrote {fcidump_path}")
    print(f"wrote {fixture_path}")
    print(f"E_nuc = {e_nuc:.10f} Ha")
    print(f"E_RHF = {e_hf:.10f} Ha")
    print(f"E_FCI = {e_fci:.10f} Ha")


if __name__ == "__main__":
    main()
