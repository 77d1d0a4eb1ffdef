#!/usr/bin/env python3
"""Reproduce the reference resonance curves at desk scale.

Recovers the strength pair (v1, v2) from the published singularity constants,
prints both closed-form branches with oracle confirmation, and writes one CSV
and one SVG per branch into the output directory.
"""

import argparse
from pathlib import Path

from qdelta.cli import rows_to_csv
from qdelta.oracle import minimize_dsq, potential_from_ss_pairs, quartic_roots
from qdelta.scatter import DeltaPotential, denominator, sweep
from qdelta.singular import classify_region, quartic_coeffs, ss_closed_form
from qdelta.svgplot import render_curves_svg
from qdelta.verify import REFERENCE_PAIRS


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="out", help="output directory")
    parser.add_argument("--emin", type=float, default=0.05)
    parser.add_argument("--emax", type=float, default=4.0)
    parser.add_argument("--steps", type=int, default=4000)
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    v1, v2 = potential_from_ss_pairs(*REFERENCE_PAIRS)
    print(f"strength pair recovered from the singularity constants: "
          f"v1={v1:g}, v2={v2:g}")
    print(f"region classification: {classify_region(v1, v2).value}")

    plus, minus = ss_closed_form(v1, v2)
    for sol in (plus, minus):
        pot = DeltaPotential.from_g_squared(v1, v2, sol.g_squared)
        beta_star, dsq = minimize_dsq(pot)
        roots = quartic_roots(quartic_coeffs(pot))
        double = next((z.real, tag) for z, tag in
                      zip(roots.roots, roots.multiplicity_tags)
                      if z.imag == 0.0 and tag >= 2)
        print(f"{sol.branch.value:>5} branch: g2={sol.g_squared:.12g} "
              f"beta={sol.beta:.12g} E={sol.energy:.12g}")
        print(f"       |D(beta)| = {abs(denominator(pot, sol.beta)):.3e}, "
              f"min |D|^2 = {dsq:.3e} at beta = {beta_star:.12f}, "
              f"double root at beta = {double[0]:.12f} (x{double[1]})")

        rows = sweep(pot, args.emin, args.emax, args.steps)
        table = [{"E": r.energy, "beta": r.beta, "r": r.r, "t": r.t,
                  "R": r.big_r, "T": r.big_t, "absD": abs(r.d_value),
                  "at_singularity": r.at_singularity} for r in rows]
        csv_path = outdir / f"curves_{sol.branch.value}.csv"
        csv_path.write_text(rows_to_csv(table), encoding="utf-8", newline="")
        markers = [s.energy for s in (plus, minus)
                   if s.feasible and args.emin <= s.energy <= args.emax]
        svg_path = outdir / f"curves_{sol.branch.value}.svg"
        svg_path.write_text(
            render_curves_svg([r.energy for r in rows],
                              [r.big_r for r in rows],
                              [r.big_t for r in rows],
                              markers,
                              f"v1={v1:g} v2={v2:g} g2={sol.g_squared:.6g} "
                              f"({sol.branch.value} branch)"),
            encoding="utf-8", newline="")
        print(f"       wrote {csv_path} and {svg_path}")


if __name__ == "__main__":
    main()
