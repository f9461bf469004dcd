"""Sweep the classification of foliations by curves of degree 1 to 3.

For each admissible second Chern number of the conormal sheaf the decision
procedure returns either a split type, a stable (instanton) type with its
tabulated data, or an impossibility with the violated constraint.
Discrepancy flags are printed wherever tabulated and recomputed values
disagree.
"""

from folcurves import classify_low_degree, generic_invariants, invariants_from_c2
from folcurves.errors import FolcurvesError

for d in (1, 2, 3):
    print(f"\n=== degree {d} (locally free conormal, c2 range "
          f"{d + 2}..{d * d + 2 * d + 1}) ===")
    for c2 in range(d + 2, d * d + 2 * d + 2):
        try:
            report = classify_low_degree(d, c2, reduced_singular_scheme=True)
        except FolcurvesError as exc:
            print(f"c2 = {c2:2d}: impossible ({exc})")
            continue
        verdict = report.verdict
        if verdict["type"] == "split":
            head = f"split {tuple(verdict['twists'])}"
        else:
            head = f"stable, normalized c2 = {verdict['charge']}"
        line = (f"c2 = {c2:2d}: {head:22s} curve ({report.degC:2d}, {report.paC:3d})")
        if report.dim_moduli is not None:
            line += f"  dim M = {report.dim_moduli}"
        if report.h0_OC is not None:
            line += f"  h0(O_C) = {report.h0_OC}"
        print(line)
        for flag in report.flags:
            print(f"        flag: {flag.claim}")

print("\n=== generic (isolated-singularity) invariants ===")
for d in range(0, 4):
    c2, c3 = generic_invariants(d)
    print(f"degree {d}: c2 = {c2}, isolated singularities = {c3}")

print("\n=== the closure identity at work ===")
inv = invariants_from_c2(3, 12)
print(f"(d, c2) = (3, 12): curve ({inv.degC}, {inv.paC}), "
      f"identity residual = {inv.identity_residual()}")
