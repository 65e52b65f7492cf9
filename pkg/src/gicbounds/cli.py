"""Command-line interface: ``gicbounds <command> [flags]``.

Exit codes: 0 on success, 2 on a domain error or bad flags, 1 otherwise.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import asymptotics, corners, excess, report, sumrate
from .channel import (ChannelParams, Regime, classify, conjectured_corner_rates,
                      db_to_linear, single_user_capacity)
from .errors import GICError
from .optimizer import GridSpec


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="output file (default: standard output)")
    common.add_argument("--grid", type=int, help="grid points per axis (odd)")
    common.add_argument("--refine", type=int, help="refinement rounds")
    common.add_argument("--p-db", type=float, help="common power in dB")
    return common


def _channel_flags(p: argparse.ArgumentParser):
    p.add_argument("--p", type=float, help="common power (linear)")
    p.add_argument("--a", type=float, help="common cross gain")
    p.add_argument("--p1", type=float)
    p.add_argument("--p2", type=float)
    p.add_argument("--a12", type=float)
    p.add_argument("--a21", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gicbounds",
        description="Corner-point, sum-rate and excess-rate bounds for two-user "
                    "Gaussian interference channels.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()

    for name, help_ in (("classify", "regime of a channel"),
                        ("corners", "corner-point bounds"),
                        ("sumrate", "sum-rate bounds (symmetric weak)"),
                        ("delta", "excess-rate bounds (symmetric weak)")):
        sp = sub.add_parser(name, parents=[common], help=help_)
        _channel_flags(sp)
        if name == "corners":
            sp.add_argument("--epsilon", type=float, default=0.0)

    sp = sub.add_parser("asymptotics", parents=[common], help="GDOF and excess-rate slope")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--probe", type=float, nargs="*",
                    help="powers for the convergence probe")

    sp = sub.add_parser("table1", parents=[common], help="minimum/maximum of the excess rate")
    sp.add_argument("--p-db-list", type=float, nargs="+", default=[27.0, 40.0, 60.0])

    sp = sub.add_parser("figure", parents=[common], help="figure data as CSV")
    sp.add_argument("which", choices=report.FIGURES)
    sp.add_argument("--p", type=float)
    sp.add_argument("--a", type=float, default=0.5)
    sp.add_argument("--a-min", type=float, default=0.005)
    sp.add_argument("--a-max", type=float, default=1.0)
    sp.add_argument("--a-step", type=float, default=0.005)
    return parser


def _params(args) -> ChannelParams:
    p = db_to_linear(args.p_db) if args.p_db is not None else args.p
    p1 = args.p1 if args.p1 is not None else p
    p2 = args.p2 if args.p2 is not None else p
    a12 = args.a12 if args.a12 is not None else args.a
    a21 = args.a21 if args.a21 is not None else args.a
    missing = [n for n, v in (("p1", p1), ("p2", p2), ("a12", a12), ("a21", a21)) if v is None]
    if missing:
        raise GICError(f"missing channel parameters: {', '.join(missing)}")
    return ChannelParams(p1, p2, a12, a21)


def _symmetric(args):
    params = _params(args)
    if not params.is_symmetric:
        raise GICError("this command needs a symmetric channel (use --p and --a)")
    return params.p1, params.a12


def _grids(args):
    def make(default: GridSpec) -> GridSpec:
        return GridSpec(args.grid if args.grid is not None else default.points_per_axis,
                        args.refine if args.refine is not None else default.refinement_rounds,
                        default.shrink_factor)
    return make(sumrate.HK_GRID), make(sumrate.ETKIN_GRID)


def _bound_row(label, b) -> dict:
    return {"quantity": label, "value": b.value, "valid": b.valid,
            "active_term": b.active_term or "", "note": b.note}


def cmd_classify(args) -> List[dict]:
    params = _params(args)
    rc = classify(params)
    return [{"kind": str(rc.kind), "symmetric": rc.symmetric,
             "description": rc.description}]


def cmd_corners(args) -> List[dict]:
    params = _params(args)
    kind = classify(params).kind
    rows = [{"quantity": "C1", "value": single_user_capacity(params.p1)},
            {"quantity": "C2", "value": single_user_capacity(params.p2)}]
    if kind == Regime.WEAK:
        cb = corners.weak_corner_bounds(params)
        rows += [
            {"quantity": "R2 at R1=C1", "lo": cb.corner_at_c1.lo, "hi": cb.corner_at_c1.hi,
             "active_term": cb.corner_at_c1.active_term},
            {"quantity": "R1 at R2=C2", "lo": cb.corner_at_c2.lo, "hi": cb.corner_at_c2.hi,
             "active_term": cb.corner_at_c2.active_term},
        ]
        if args.epsilon > 0:
            rows.append(_bound_row("R2 given R1>=C1-eps",
                                   corners.rate_tradeoff_bound(params, args.epsilon, 1)))
            rows.append(_bound_row("R1 given R2>=C2-eps",
                                   corners.rate_tradeoff_bound(params, args.epsilon, 2)))
        if params.is_symmetric:
            rows.append(_bound_row("symmetric corner upper",
                                   corners.symmetric_corner_upper(params.p1, params.a12)))
            rows.append({"quantity": "ETW/Kramer threshold",
                         "value": corners.etw_kramer_threshold(params.a12)})
    elif kind in (Regime.MIXED, Regime.DEGRADED):
        e1, e2 = corners.mixed_corner_report(params, args.epsilon)
        rows += [_bound_row("sum-rate corner", e1), _bound_row("other corner", e2)]
    elif kind == Regime.ONE_SIDED_WEAK and max(params.a12, params.a21) > 0:
        flip = params.a21 == 0
        q = params.swapped() if flip else params
        exact, iv = corners.one_sided_corner_bounds(q.p1, q.p2, q.a21)
        r1, r2 = (exact.r2, exact.r1) if flip else (exact.r1, exact.r2)
        rows += [{"quantity": "exact corner", "r1": r1, "r2": r2},
                 {"quantity": "R2 at R1=C1" if flip else "R1 at R2=C2",
                  "lo": iv.lo, "hi": iv.hi}]
    else:
        rs = conjectured_corner_rates(params)
        rows += [{"quantity": "conjectured corner rates", "r1": rs.r1, "r2": rs.r2,
                  "note": f"{kind}: corners follow from the multiple-access regions"}]
    return rows


def cmd_sumrate(args) -> List[dict]:
    p, a = _symmetric(args)
    hk_grid, etkin_grid = _grids(args)
    params = ChannelParams.symmetric(p, a)
    upper, lower = sumrate.best_sum_bounds(p, a, hk_grid, etkin_grid)
    hk = sumrate.hk_sum_lower_optimized(p, a, hk_grid)
    ek = sumrate.etkin_sum_upper(p, a, etkin_grid)
    inside, _ = sumrate.tin_subclass(p, a)
    return [
        _bound_row("upper", upper),
        _bound_row("lower", lower),
        _bound_row("etw upper", sumrate.etw_sum_upper(params)),
        _bound_row("kramer upper", sumrate.kramer_sum_upper(p, a)),
        {"quantity": "etkin upper", "value": ek.value,
         "argopt": " ".join(f"{x:.6g}" for x in ek.argopt)},
        {"quantity": "hk lower", "value": hk.value,
         "argopt": " ".join(f"{x:.6g}" for x in hk.argopt)},
        _bound_row("half-bit lower", sumrate.hk_sum_lower_half_bit(params)),
        {"quantity": "tin", "value": sumrate.tin_sum_rate(p, a), "valid": inside,
         "note": "exact" if inside else "achievable"},
    ]


def cmd_delta(args) -> List[dict]:
    p, a = _symmetric(args)
    hk_grid, etkin_grid = _grids(args)
    r = excess.delta_bounds_improved(p, a, hk_grid, etkin_grid)
    return [
        _bound_row("upper_simple", r.upper_simple),
        _bound_row("lower_simple", r.lower_simple),
        _bound_row("upper_improved", r.upper_improved),
        _bound_row("lower_improved", r.lower_improved),
        {"quantity": "corner_total_lower", "value": r.corner_total_lower},
        {"quantity": "corner_total_upper", "value": r.corner_total_upper},
        {"quantity": "asymptotic_upper", "value": r.asymptotic_upper},
        {"quantity": "asymptotic_lower", "value": r.asymptotic_lower},
    ]


def cmd_asymptotics(args) -> List[dict]:
    al = args.alpha
    rows = [{"alpha": al, "gdof": asymptotics.gdof(al),
             "delta_slope": asymptotics.delta_slope(al),
             "normalized_loss": asymptotics.normalized_loss(al)}]
    if args.probe:
        rows += [{"alpha": al, "p": p, "upper_over_log2p": u, "lower_over_log2p": l}
                 for p, u, l in asymptotics.convergence_probe(al, args.probe)]
    return rows


def cmd_table1(args) -> List[dict]:
    _, etkin_grid = _grids(args)
    return report.table1(args.p_db_list, etkin_grid)


def cmd_figure(args) -> List[dict]:
    hk_grid, etkin_grid = _grids(args)
    p = db_to_linear(args.p_db) if args.p_db is not None else args.p
    return report.figure_rows(args.which, p, args.a, args.a_min, args.a_max,
                              args.a_step, hk_grid, etkin_grid)


COMMANDS = {
    "classify": cmd_classify, "corners": cmd_corners, "sumrate": cmd_sumrate,
    "delta": cmd_delta, "asymptotics": cmd_asymptotics, "table1": cmd_table1,
    "figure": cmd_figure,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rows = COMMANDS[args.command](args)
    except GICError as exc:
        print(f"gicbounds: error: {exc}", file=sys.stderr)
        return 2
    text = report.rows_to_json(rows) if args.format == "json" else report.rows_to_csv(rows)
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"gicbounds: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
