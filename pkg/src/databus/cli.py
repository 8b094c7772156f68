"""Command-line front end: estimates, benchmark reproduction, protocol checks."""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .bus import parity_error_stats
from .presets import table_presets
from .tradeoff import (
    ComputationProfile,
    TradeoffReport,
    counterexample,
    estimate,
    reports_to_csv,
    reports_to_json,
    sweep,
)


def _profile_from_args(args: argparse.Namespace) -> ComputationProfile:
    # --patches counts data + ancilla patches together; the routing factor
    # (or an explicit --ancilla) says how many of them are routing space.
    if args.ancilla is not None:
        q, a = args.patches - args.ancilla, args.ancilla
    else:
        q = round(args.patches / (1 + args.routing_factor))
        a = args.patches - q
    return ComputationProfile(q, a, args.volume, args.p_phys, args.epsilon)


def _print_reports(reports: list[TradeoffReport], fmt: str) -> None:
    if fmt == "json":
        print(reports_to_json(reports))
    elif fmt == "csv":
        print(reports_to_csv(reports), end="")
    else:
        header = (
            f"{'scale':>10} {'d_wo':>5} {'d_with':>6} {'qc_wo':>12} {'qc_with':>12} "
            f"{'improv':>7} {'hours_wo':>12} {'hours_with':>12} {'safe_wo':>8} {'safe_with':>9}"
        )
        print(header)
        for r in reports:
            print(
                f"{r.scale:>10.4g} {r.d_wo:>5} {r.d_with:>6} {r.qc_wo:>12} {r.qc_with:>12} "
                f"{r.improvement:>7.2f} {r.hours_wo:>12.4g} {r.hours_with:>12.4g} "
                f"{r.safety_wo:>8} {r.safety_with:>9}"
            )


def cmd_estimate(args: argparse.Namespace) -> int:
    report = estimate(
        _profile_from_args(args),
        force_d_wo=args.force_d_wo,
        force_d_with=args.force_d_with,
        scale=args.scale,
    )
    _print_reports([report], args.format)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    result = sweep(_profile_from_args(args), args.scale_min, args.scale_max, args.steps)
    if args.format == "json":
        print(json.dumps(result.to_dict(), indent=2))
    elif args.format == "csv":
        print(reports_to_csv(result.points), end="")
    else:
        _print_reports(result.points, "table")
        for b in result.boundaries:
            print(f"# distance {b.d} -> {b.d + 2} at scale {b.scale:.6g}")
    return 0


def cmd_benchmarks(args: argparse.Namespace) -> int:
    """Computed vs reference values for the five benchmark circuits."""
    rows = []
    for preset in table_presets():
        computed = estimate(preset.profile)  # distances from the default model
        injected = estimate(
            preset.profile, force_d_wo=preset.ref_d_wo, force_d_with=preset.ref_d_with
        )
        rows.append(
            {
                "name": preset.name,
                "d_wo": computed.d_wo,
                "d_with": computed.d_with,
                "ref_d_wo": preset.ref_d_wo,
                "ref_d_with": preset.ref_d_with,
                "qc_wo": injected.qc_wo,
                "qc_with": injected.qc_with,
                "ref_qc_wo": preset.ref_qc_wo,
                "ref_qc_with": preset.ref_qc_with,
                "residual_wo": injected.qc_wo - preset.ref_qc_wo,
                "residual_with": injected.qc_with - preset.ref_qc_with,
                "improvement": round(injected.improvement, 2),
                "ref_improvement": preset.ref_improvement,
            }
        )
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        cols = list(rows[0])
        print(" ".join(f"{c:>13}" for c in cols))
        for row in rows:
            print(" ".join(f"{row[c]:>13}" for c in cols))
    return 0


def cmd_counterexample(args: argparse.Namespace) -> int:
    rows = counterexample(args.d_min, args.d_max)
    payload = [
        {
            "d_a": r.d_a,
            "d_b": r.d_b,
            "qc_wo": r.qc_wo,
            "qc_with": r.qc_with,
            "improved": r.improved,
        }
        for r in rows
    ]
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"{'d_a':>5} {'d_b':>5} {'qc_wo':>10} {'qc_with':>10} improved")
        for r in rows:
            print(f"{r.d_a:>5} {r.d_b:>5} {r.qc_wo:>10} {r.qc_with:>10} {r.improved}")
    print("# whether any row improves depends on the error model in use", file=sys.stderr)
    return 0


def cmd_verify_protocol(args: argparse.Namespace) -> int:
    failed = False
    for result in checks.run_table_checks():
        status = "ok" if result.passed else "FAIL"
        print(f"table {result.scenario}/{result.fixture}: {status}")
        if not result.passed:
            failed = True
            print("  computed:", "; ".join(result.computed))
            print("  expected:", "; ".join(result.expected))
    if args.trials > 0:
        mismatches, total = checks.oracle_suite(args.distance, args.trials, args.seed)
        print(f"oracle equivalence: {total - mismatches}/{total} matched")
        failed = failed or mismatches > 0
        with_flip, without_flip = checks.y_flip_suite(seed=args.seed)
        print(f"Y parity flip: {with_flip}/50 correct with flip, {without_flip}/50 without")
        failed = failed or with_flip != 50 or without_flip != 0
        stats = parity_error_stats(4, 0.1, max(args.trials, 10_000), 3, seed=args.seed)
        sigma = (stats.analytic_odd * (1 - stats.analytic_odd) / max(args.trials, 10_000)) ** 0.5
        drift = abs(stats.empirical_odd - stats.analytic_odd)
        print(
            f"odd-flip stats: empirical {stats.empirical_odd:.4f} vs analytic "
            f"{stats.analytic_odd:.4f} (|diff| = {drift:.4f}, 3 sigma = {3 * sigma:.4f}); "
            f"vote failure {stats.vote_failure:.4f}"
        )
        failed = failed or drift > 3 * sigma
    else:
        print("statistics skipped (--trials 0)")
    print("PASS" if not failed else "FAIL")
    return 1 if failed else 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def _add_profile_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--volume", type=float, required=True, help="space-time volume (patches x time steps)")
    p.add_argument("--patches", type=int, required=True, help="total logical patches (data + ancilla)")
    p.add_argument("--ancilla", type=int, default=None, help="ancilla patch count (overrides --routing-factor)")
    p.add_argument("--routing-factor", type=float, default=0.5, help="ancilla/data patch ratio (default 0.5)")
    p.add_argument("--p-phys", type=float, default=1e-3, help="physical error rate (default 1e-3)")
    p.add_argument("--epsilon", type=float, default=1e-2, help="total failure budget (default 1e-2)")
    p.add_argument("--scale", type=float, default=0.5, help="volume scale used inside the bus-distance iteration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="databus",
        description="GHZ data-bus parity checks and qubit/time trade-off estimates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_est = sub.add_parser("estimate", help="with/without-bus report for one profile")
    _add_profile_flags(p_est)
    p_est.add_argument("--force-d-wo", type=int, default=None, help="inject the baseline distance")
    p_est.add_argument("--force-d-with", type=int, default=None, help="inject the bus distance")
    p_est.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p_est.set_defaults(func=cmd_estimate)

    p_sweep = sub.add_parser("sweep", help="estimates over a range of volume multipliers")
    _add_profile_flags(p_sweep)
    p_sweep.add_argument("--scale-min", type=float, default=0.1)
    p_sweep.add_argument("--scale-max", type=float, default=10.0)
    p_sweep.add_argument("--steps", type=int, default=25)
    p_sweep.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p_sweep.set_defaults(func=cmd_sweep)

    p_bench = sub.add_parser("benchmarks", help="computed vs reference benchmark table")
    p_bench.add_argument("--format", choices=["json", "table"], default="table")
    p_bench.set_defaults(func=cmd_benchmarks)

    p_ctr = sub.add_parser("counterexample", help="forced-distance range where the bus may not pay off")
    p_ctr.add_argument("--d-min", type=int, default=15)
    p_ctr.add_argument("--d-max", type=int, default=45)
    p_ctr.add_argument("--format", choices=["json", "table"], default="table")
    p_ctr.set_defaults(func=cmd_counterexample)

    p_ver = sub.add_parser("verify-protocol", help="stabilizer-table, oracle and statistics checks")
    p_ver.add_argument("--distance", type=int, default=2, choices=range(2, 6))
    p_ver.add_argument("--trials", type=int, default=1000)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.set_defaults(func=cmd_verify_protocol)

    p_srv = sub.add_parser("serve", help="run the local HTTP/JSON service")
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
