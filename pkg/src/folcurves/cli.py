"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input or constraint
rejection.  Every subcommand accepts --json; JSON payloads are
deterministic (sorted keys, no timing data).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .classify import classify_low_degree, invariants_from_c2, legendrian_moduli_dim, nc_moduli_dim
from .errors import FolcurvesError
from .forms import parse_form, legendrian_foliation, singular_ideal, wedge
from .groebner import (
    GradedIdeal,
    curve_invariants,
    graded_syzygies,
    rao_module_dimensions,
)
from .monad import MonadSpec, monad_chern, monad_regularity_bound
from .polyring import parse_polynomial
from .sheafcoh import (
    ChernTriple,
    CohomologyTable,
    SheafSymbol,
    cotangent_cohomology,
    euler_characteristic,
    instanton_cohomology,
    line_bundle_cohomology,
    CLOSED_FORM,
)
from .verification import DEFAULT_SEED, SUITES, run_suite


def _emit(args, payload, flags=(), human=()):
    if args.json:
        body = {"status": "ok", "payload": payload, "flags": list(flags)}
        print(json.dumps(body, sort_keys=True))
    else:
        for line in human:
            print(line)
        for flag in flags:
            print(f"note: {flag['claim']} (computed {flag['computed']}, "
                  f"stated {flag['stated']})")
    return 0


def _cmd_classify(args):
    report = classify_low_degree(args.d, args.c2, args.reduced)
    payload = report.to_json()
    verdict = report.verdict
    if verdict["type"] == "split":
        head = f"split conormal, twists {tuple(verdict['twists'])}"
    else:
        head = (f"stable normalized conormal, c2 = {verdict['charge']}"
                + (";  " + "; ".join(verdict["constraints"]) if verdict["constraints"] else ""))
    human = [
        f"degree {args.d}, c2 = {args.c2}"
        + (" (reduced singular scheme)" if args.reduced else ""),
        f"  verdict:     {head}",
        f"  curve:       degree {report.degC}, genus {report.paC}",
    ]
    if report.components is not None:
        human.append(f"  components:  {report.components}")
    if report.dim_moduli is not None:
        human.append(f"  dim moduli:  {report.dim_moduli}")
    if report.h0_OC is not None:
        human.append(f"  h0(O_C):     {report.h0_OC}")
    return _emit(args, payload, [f.to_json() for f in report.flags], human)


def _cmd_wedge(args):
    from .errors import NotProjectiveError, WrongFormDegreeError
    from .forms import is_projective

    a = parse_form(args.form1)
    b = parse_form(args.form2)
    for name, form in (("first", a), ("second", b)):
        if form.form_degree != 1:
            raise WrongFormDegreeError(f"{name} argument is not a 1-form")
        if not is_projective(form):
            raise NotProjectiveError(f"{name} argument does not descend to P^3")
    two_form = legendrian_foliation(a, b).two_form if args.legendrian else wedge(a, b)
    payload = {"two_form": str(two_form)}
    human = [f"wedge: {two_form}"]
    if args.invariants or args.rao:
        ideal = singular_ideal(two_form)
        if args.invariants:
            deg, genus = curve_invariants(ideal)
            payload["invariants"] = {"degree": deg, "genus": genus}
            human.append(f"singular curve: degree {deg}, genus {genus}")
        if args.rao:
            profile = rao_module_dimensions(ideal)
            payload["rao"] = profile.to_json()
            human.append(f"Rao profile: {profile.to_json()}")
    return _emit(args, payload, (), human)


def _cmd_verify(args):
    started = time.monotonic()
    results = run_suite(args.suite, seed=args.seed)
    ok = all(res.ok for res in results)
    if args.json:
        body = {
            "status": "ok" if ok else "error",
            "payload": [res.to_json() for res in results],
            "flags": [flag for res in results for flag in res.flags],
        }
        print(json.dumps(body, sort_keys=True))
    else:
        for res in results:
            print(f"{res.cid:16s} {'PASS' if res.ok else 'FAIL'}  {res.title}")
            if not res.ok:
                for line in res.details:
                    if line.startswith("FAIL"):
                        print(f"    {line}")
            for flag in res.flags:
                print(f"    note: {flag['claim']} (computed {flag['computed']}, "
                      f"stated {flag['stated']})")
        print(f"{sum(res.ok for res in results)}/{len(results)} criteria passed",
              file=sys.stderr)
        print(f"elapsed: {time.monotonic() - started:.1f}s", file=sys.stderr)
    return 0 if ok else 1


def _cmd_hilbert(args):
    ideal = GradedIdeal.from_file(args.ideal_file)
    P = ideal.hilbert_polynomial()
    payload = {"hilbert_polynomial": str(P),
               "binomial_coefficients": [str(c) for c in P.coeffs]}
    human = [f"Hilbert polynomial: {P}"]
    try:
        deg, genus = curve_invariants(ideal)
        payload["curve"] = {"degree": deg, "genus": genus}
        human.append(f"curve invariants: degree {deg}, genus {genus}")
    except FolcurvesError:
        pass
    return _emit(args, payload, (), human)


def _cmd_rao(args):
    ideal = GradedIdeal.from_file(args.ideal_file)
    window = tuple(args.window) if args.window else None
    profile = rao_module_dimensions(ideal, window)
    return _emit(args, profile.to_json(), (),
                 [f"Rao profile: {profile.to_json()}"])


def _cmd_syzygy(args):
    row = [parse_polynomial(s) for s in args.row.split(",")]
    weights = [int(w) for w in args.weights.split(",")]
    basis = graded_syzygies(row, weights, args.degree)
    payload = {
        "dimension": len(basis),
        "columns": [[str(g) for g in tup] for tup in basis],
    }
    human = [f"syzygy space dimension: {len(basis)}"]
    human += ["  (" + ", ".join(str(g) for g in tup) + ")" for tup in basis]
    return _emit(args, payload, (), human)


def _cmd_chi(args):
    symbol = SheafSymbol(args.rank, ChernTriple(args.c1, args.c2, args.c3))
    value = euler_characteristic(symbol, args.twist)
    return _emit(args, {"chi": value}, (), [f"chi = {value}"])


def _parse_range(text):
    lo, _, hi = text.partition("..")
    return range(int(lo), int(hi) + 1)


def _cmd_cohomology(args):
    twists = _parse_range(args.twist_range)
    kind = args.kind
    if kind.startswith("instanton:") or kind in ("nc", "null-correlation"):
        if kind in ("nc", "null-correlation"):
            charge, h0 = 1, None
        else:
            parts = kind.split(":")
            charge = int(parts[1])
            h0 = int(parts[2]) if len(parts) > 2 else None
        table = instanton_cohomology(charge, h0, twists)
    else:
        table = CohomologyTable()
        for k in twists:
            if kind == "line":
                row = line_bundle_cohomology(k)
            elif kind == "cotangent":
                row = cotangent_cohomology(1, k)
            else:
                raise FolcurvesError(f"unknown cohomology kind {kind!r}")
            table.set_row(k, row, (CLOSED_FORM,) * 4)
    human = ["twist   h0   h1   h2   h3"]
    for k in sorted(table.rows):
        h = table.rows[k]
        human.append(f"{k:5d} {h[0]:4d} {h[1]:4d} {h[2]:4d} {h[3]:4d}")
    return _emit(args, table.to_json(), (), human)


def _cmd_monad(args):
    with open(args.spec_file, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if "template" in data:
        spec = MonadSpec.from_template(data["template"]["c"], data["template"]["b"])
    else:
        spec = MonadSpec.from_twists(data["left"], data["middle"], data["right"])
    rank, c1, c2, c3 = monad_chern(spec)
    payload = {"spec": spec.to_json(),
               "chern": {"rank": rank, "c1": c1, "c2": c2, "c3": c3}}
    human = [f"cohomology bundle: rank {rank}, c1 {c1}, c2 {c2}, c3 {c3}"]
    if args.regularity:
        bound = monad_regularity_bound(spec)
        payload["regularity"] = bound
        human.append(f"regularity bound: {bound}")
    return _emit(args, payload, (), human)


def _cmd_moduli(args):
    if args.family == "legendrian":
        value = legendrian_moduli_dim(args.parameter)
        return _emit(args, {"family": "legendrian", "degree": args.parameter,
                            "dimension": value}, (),
                     [f"legendrian degree {args.parameter}: dimension {value}"])
    stated, derived, flagged = nc_moduli_dim(args.parameter)
    flags = []
    if flagged:
        flags.append({
            "claim": "closed-form dimension and deformation count differ by 1",
            "computed": derived,
            "stated": stated,
            "location": f"nc-moduli-k{args.parameter}",
        })
    payload = {"family": "null_correlation", "k": args.parameter,
               "stated": stated, "derived": derived, "flagged": flagged}
    return _emit(args, payload, flags,
                 [f"null-correlation k={args.parameter}: stated {stated}, "
                  f"derived {derived}"])


def _cmd_invariants(args):
    inv = invariants_from_c2(args.d, args.c2, not args.not_locally_free)
    payload = {
        "d": inv.d, "c2": inv.c2N, "c1": inv.c1N,
        "curve": {"degree": inv.degC, "genus": inv.paC},
        "c3": inv.c3, "locally_free": inv.locally_free,
    }
    return _emit(args, payload, (),
                 [f"c1 = {inv.c1N}, curve degree {inv.degC}, genus {inv.paC}"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="folcurves",
        description="Exact invariants of foliations by curves on projective 3-space",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit deterministic JSON")
        p.set_defaults(func=func)
        return p

    p = add("classify", _cmd_classify, "classify a foliation by (degree, c2)")
    p.add_argument("d", type=int)
    p.add_argument("c2", type=int)
    p.add_argument("--reduced", action="store_true",
                   help="assume the singular scheme is reduced")

    p = add("wedge", _cmd_wedge, "wedge two 1-forms and inspect the result")
    p.add_argument("form1")
    p.add_argument("form2")
    p.add_argument("--invariants", action="store_true",
                   help="degree and genus of the singular curve")
    p.add_argument("--rao", action="store_true", help="Rao profile of the singular curve")
    p.add_argument("--legendrian", action="store_true",
                   help="validate form1 as a contact form first")

    p = add("verify", _cmd_verify, "run the acceptance checks")
    p.add_argument("--suite", choices=sorted(SUITES), default="all")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = add("hilbert", _cmd_hilbert, "Hilbert polynomial of an ideal file")
    p.add_argument("ideal_file")

    p = add("rao", _cmd_rao, "Rao profile of a curve ideal file")
    p.add_argument("ideal_file")
    p.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"))

    p = add("syzygy", _cmd_syzygy, "graded syzygies of a row of polynomials")
    p.add_argument("row", help="comma-separated polynomial expressions")
    p.add_argument("weights", help="comma-separated slot degrees")
    p.add_argument("degree", type=int)

    p = add("chi", _cmd_chi, "Euler characteristic from rank and Chern data")
    p.add_argument("rank", type=int)
    p.add_argument("c1", type=int)
    p.add_argument("c2", type=int)
    p.add_argument("c3", type=int)
    p.add_argument("twist", type=int)

    p = add("cohomology", _cmd_cohomology, "cohomology table over a twist range")
    p.add_argument("kind", help="line | cotangent | nc | instanton:N[:H0]")
    p.add_argument("twist_range", help="LO..HI")

    p = add("monad", _cmd_monad, "Chern data of a monad spec file")
    p.add_argument("spec_file")
    p.add_argument("--regularity", action="store_true")

    p = add("moduli", _cmd_moduli, "moduli dimension of a family")
    p.add_argument("family", choices=["legendrian", "nc"])
    p.add_argument("parameter", type=int)

    p = add("invariants", _cmd_invariants, "curve invariants from (degree, c2)")
    p.add_argument("d", type=int)
    p.add_argument("c2", type=int)
    p.add_argument("--not-locally-free", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FolcurvesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
