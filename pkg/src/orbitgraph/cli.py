"""Command-line experiment runner.

Subcommands mirror the library layout: ``graph`` builds families and writes
growth/DOT output, ``walk`` runs recurrence analytics and simulations,
``orbit`` enumerates hyperbolic orbits, ``fit`` inverts decay profiles,
``check`` evaluates the overlap-volume bound, and ``run`` executes an INI
config chaining any of the above.

Exit codes: 0 success, 1 internal error, 2 usage error, 3 invalid spec or
config, 4 missing input file.  All outputs are byte-reproducible for a fixed
command line (floats are written with repr).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import graphs
from .configio import ExperimentConfig
from .errors import SpecError
from .hyperbolic import (counting_curve, enumerate_orbit, estimate_delta,
                         kernel_counting, laplace_fit, model_from_name,
                         overlap_volume, read_generator_file)
from .schreier import (AssemblySpec, assembly_ball_counts,
                       assembly_cutset_sizes, assembly_graph, block_graph,
                       fibonacci_colors, growth_assembly_spec, ladder_graph,
                       periodic_colors, tube_graph, uniform_assembly_spec)
from .walk import (average_to_step, decay_exponent, effective_resistance,
                   growth_criterion, nash_williams, simulate_srw)

DOT_VERTEX_CAP = 2000

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_SPEC = 3
EXIT_MISSING = 4


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _write_json(path: str, payload: dict) -> None:
    _write(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _color_sequence(spec: str):
    if spec == "fib":
        return fibonacci_colors()
    if spec.startswith("periodic"):
        pattern = (0, 1, 2)
        if ":" in spec:
            pattern = tuple(int(t) for t in spec.split(":", 1)[1].split(","))
        return periodic_colors(pattern)
    raise SpecError(f"unknown color sequence {spec!r} (use fib or periodic:a,b,c)")


def _stock_graph(name: str):
    key = name.lower()
    if key == "z":
        return graphs.line_graph()
    if key.startswith("z") and key[1:].isdigit():
        return graphs.integer_lattice(int(key[1:]))
    if key == "ladder":
        return ladder_graph(fibonacci_colors())
    raise SpecError(f"unknown stock graph {name!r} (use z, z2, z3, ..., ladder)")


def _ladder_column_cutsets(ball):
    """Disjoint 4-edge cutsets of the two-rail ladder: the rail edges
    crossing columns +-k to +-(k+1), for k = 0 .. radius-2."""
    cutsets = []
    for k in range(ball.radius - 1):
        cs = [((k, i), (k + 1, i)) for i in range(2)]
        cs += [((-k - 1, i), (-k, i)) for i in range(2)]
        cutsets.append(cs)
    return cutsets


# ---------------------------------------------------------------------------
# graph subcommand

def _cmd_graph(args) -> int:
    if args.family == "ladder":
        g = ladder_graph(_color_sequence(args.tau))
    elif args.family == "tube":
        g = tube_graph(args.n).as_lazy(name=f"tube({args.n})")
    elif args.family == "block":
        g = block_graph(args.k).as_lazy(name=f"block({args.k})")
    elif args.family == "assembly":
        spec = _assembly_spec_from_args(args)
        g = assembly_graph(spec)
    elif args.family in ("z", "z1") or (args.family.startswith("z")
                                        and args.family[1:].isdigit()):
        g = _stock_graph(args.family)
    else:
        raise SpecError(f"unknown graph family {args.family!r}")
    ball = graphs.bfs_ball(g, args.radius)
    profile = graphs.growth_profile(ball)
    if args.out:
        _write(args.out, graphs.growth_csv(profile))
    if args.dot:
        if len(ball.dist) > DOT_VERTEX_CAP and not args.force_dot:
            raise SpecError(
                f"ball has {len(ball.dist)} vertices, above the DOT cap "
                f"{DOT_VERTEX_CAP}; pass --force-dot to write anyway")
        _write(args.dot, graphs.to_dot(ball))
    if args.json:
        _write_json(args.json, {
            "graph": g.name, "radius": args.radius,
            "vertices": len(ball.dist),
            "ball_sizes": list(profile.balls),
            "cutset_sizes": list(profile.cutsets),
        })
    print(f"{g.name}: radius {args.radius}, {len(ball.dist)} vertices, "
          f"D = {profile.balls[-1]}")
    return EXIT_OK


def _assembly_spec_from_args(args) -> AssemblySpec:
    if getattr(args, "spec", None):
        with open(args.spec, "r", encoding="utf-8") as fh:
            return AssemblySpec.from_text(fh.read())
    if getattr(args, "growth", None):
        if args.growth == "cube":
            f = lambda l: l ** 3
        elif args.growth == "linear":
            f = lambda l: l
        else:
            raise SpecError(f"unknown growth target {args.growth!r}")
        return growth_assembly_spec(f, count=args.count, shift=args.shift,
                                    name=args.growth)
    return uniform_assembly_spec(args.count, k=args.k, gap=args.gap)


# ---------------------------------------------------------------------------
# walk subcommands

def _cmd_walk_simulate(args) -> int:
    g = _stock_graph(args.graph)
    stats = simulate_srw(g, steps=args.steps, trials=args.trials,
                         seed=args.seed, threads=args.threads)
    if args.out:
        _write(args.out, stats.csv())
    summary = {"graph": g.name, "steps": args.steps, "trials": args.trials,
               "seed": args.seed,
               "green_sum": float(stats.green_sums[-1]),
               "green_trend": stats.green_trend().best_model}
    try:
        alpha, ci = decay_exponent(stats)
        summary["decay_exponent"] = alpha
        summary["decay_exponent_ci"] = ci
    except ValueError:
        pass
    if args.json:
        _write_json(args.json, summary)
    print(f"{g.name}: green sum {summary['green_sum']!r} "
          f"({summary['green_trend']})")
    return EXIT_OK


def _cmd_walk_criteria(args) -> int:
    g = _stock_graph(args.graph) if args.graph else None
    if args.graph and args.graph.startswith("assembly"):
        raise SpecError("use 'graph assembly' + growth CSV for assemblies")
    ball = graphs.bfs_ball(g, args.radius)
    profile = graphs.growth_profile(ball)
    if args.columns and args.graph == "ladder":
        cutsets = _ladder_column_cutsets(ball)
        report = nash_williams(cutsets=cutsets, ball=ball)
    else:
        report = nash_williams(profile=profile)
    growth = growth_criterion(profile.balls)
    if args.out:
        _write(args.out, report.csv())
    if args.json:
        _write_json(args.json, {
            "graph": g.name, "radius": args.radius,
            "nash_williams_sum": float(report.partial_sums[-1]),
            "nash_williams_trend": report.trend.best_model,
            "nash_williams_certified": report.certified_recurrent_trend,
            "growth_sum": float(growth.partial_sums[-1]),
            "growth_certified": growth.certified_recurrent_trend,
        })
    print(f"{g.name}: cutset sum {float(report.partial_sums[-1])!r} "
          f"({report.trend.best_model}), growth sum "
          f"{float(growth.partial_sums[-1])!r} ({growth.trend.best_model})")
    return EXIT_OK


def _cmd_walk_resistance(args) -> int:
    g = _stock_graph(args.graph)
    ball = graphs.bfs_ball(g, args.radius)
    radii = ([int(t) for t in args.radii.split(",")] if args.radii
             else None)
    report = effective_resistance(ball, radii=radii, tol=args.tol)
    if args.out:
        _write(args.out, report.csv())
    print(f"{g.name}: R_eff({report.radii[-1]}) = {float(report.r_eff[-1])!r}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# orbit / fit / check subcommands

def _cmd_orbit_count(args) -> int:
    gens = read_generator_file(args.gens)
    model = gens[0].model
    if args.model and model_from_name(args.model).name != model.name:
        raise SpecError(
            f"--model {args.model} conflicts with file header {model.name}")
    theta = None
    if args.theta:
        theta = [[int(x) for x in row.split(",")]
                 for row in args.theta.split(";")]
    orbit = enumerate_orbit(gens, t_max=args.tmax,
                            max_word_length=args.word_cap,
                            dedup_tol=args.dedup_tol, theta=theta)
    curve = counting_curve(orbit)
    if args.out:
        _write(args.out, curve.csv())
    summary = {
        "model": model.name, "points": len(orbit),
        "complete": orbit.complete, "t_max": orbit.t_max,
        "count_at_tmax": int(curve.count(orbit.t_max)),
    }
    try:
        est = estimate_delta(curve)
        summary["delta"] = est.delta
        summary["delta_ci"] = est.ci
    except ValueError as exc:
        summary["delta_error"] = str(exc)
    if theta is not None:
        report = kernel_counting(orbit)
        summary["kernel_count_at_tmax"] = int(
            report.kernel.count(report.kernel.t_max))
        try:
            p, ci = report.ratio_exponent()
            summary["ratio_exponent"] = p
            summary["ratio_exponent_ci"] = ci
        except ValueError as exc:
            summary["ratio_exponent_error"] = str(exc)
        if args.kernel_out:
            _write(args.kernel_out, report.kernel.csv())
    if args.json:
        _write_json(args.json, summary)
    print(f"{model.name}: {len(orbit)} points to T={args.tmax} "
          f"(complete={orbit.complete})"
          + (f", delta={summary['delta']!r}" if "delta" in summary else ""))
    return EXIT_OK


def _cmd_fit_laplace(args) -> int:
    if args.profile.startswith("exp:"):
        rate = float(args.profile.split(":", 1)[1])
        scale = args.scale
        profile = lambda ts: scale * np.exp(rate * np.asarray(ts))
    elif args.profile == "sqrt":
        profile = lambda ts: np.sqrt(np.asarray(ts))
    elif args.profile == "curve":
        if not args.curve:
            raise SpecError("--profile curve requires --curve FILE")
        data = np.loadtxt(args.curve, delimiter=",", skiprows=1)
        ts_file, f_file = data[:, 0], data[:, 2]
        profile = lambda ts: np.interp(ts, ts_file, f_file)
    else:
        raise SpecError(f"unknown profile {args.profile!r}")
    if args.geometric:
        ts = np.geomspace(args.tmin, args.tmax, args.samples)
        grid = np.geomspace(args.grid_min, args.n / 2.0, args.grid_size)
    else:
        ts = np.linspace(args.tmin, args.tmax, args.samples)
        grid = np.linspace(0.0, args.n / 2.0, args.grid_size)
    fit = laplace_fit(profile, n=args.n, sample_ts=ts, grid=grid)
    if args.out:
        _write(args.out, fit.csv())
    support = fit.support
    print(f"laplace fit: residual {fit.residual!r}, "
          f"{len(support)} atoms in [{float(support.min())!r}, {float(support.max())!r}]"
          if len(support) else "laplace fit: empty support")
    if args.json:
        _write_json(args.json, {"residual": fit.residual,
                                "atoms": int((fit.weights > 0).sum()),
                                "total_mass": float(fit.weights.sum())})
    return EXIT_OK


def _cmd_check_overlap(args) -> int:
    lines = ["T,S,volume,bound"]
    worst = 0.0
    t = args.tmin
    ts = []
    while t <= args.tmax + 1e-12:
        ts.append(t)
        t += args.tstep
    for t in ts:
        s = args.smin if args.smin is not None else float(np.log(2))
        while s <= 2 * t + 1e-12:
            v = overlap_volume(n=args.n, t=t, s=s, tol=args.tol)
            bound = float(np.exp(args.n * (t - s / 2)))
            worst = max(worst, v / bound)
            lines.append(f"{t!r},{s!r},{v!r},{bound!r}")
            s += args.sstep
    if args.out:
        _write(args.out, "\n".join(lines) + "\n")
    print(f"overlap n={args.n}: fitted constant {worst!r} over "
          f"{len(lines) - 1} grid points")
    if args.json:
        _write_json(args.json, {"n": args.n, "fitted_constant": worst,
                                "grid_points": len(lines) - 1})
    return EXIT_OK


# ---------------------------------------------------------------------------
# config runner

def _cmd_run(args) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        cfg = ExperimentConfig.from_ini(fh.read())
    cfg.apply_overrides(args.override or [])
    for name, argv in cfg.argv_per_section():
        print(f"[{name}] orbitgraph " + " ".join(argv))
        code = main(argv)
        if code != EXIT_OK:
            return code
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="orbitgraph", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    g = sub.add_parser("graph", help="build a graph family, write growth data")
    g.add_argument("family", help="ladder | tube | block | assembly | z | z2 | ...")
    g.add_argument("--radius", type=int, default=10)
    g.add_argument("--tau", default="fib")
    g.add_argument("--n", type=int, default=4, help="tube columns")
    g.add_argument("--k", type=int, default=2, help="block parameter")
    g.add_argument("--count", type=int, default=8, help="assembly pair count")
    g.add_argument("--gap", type=int, default=1)
    g.add_argument("--shift", type=int, default=None)
    g.add_argument("--growth", default=None, help="cube | linear")
    g.add_argument("--spec", default=None, help="assembly spec file")
    g.add_argument("--out", default=None, help="growth CSV path")
    g.add_argument("--dot", default=None, help="DOT output path")
    g.add_argument("--force-dot", action="store_true")
    g.add_argument("--json", default=None)
    g.set_defaults(func=_cmd_graph)

    w = sub.add_parser("walk", help="recurrence analytics and simulation")
    wsub = w.add_subparsers(dest="analysis", required=True)
    ws = wsub.add_parser("simulate")
    ws.add_argument("--graph", required=True)
    ws.add_argument("--steps", type=int, required=True)
    ws.add_argument("--trials", type=int, required=True)
    ws.add_argument("--seed", type=int, required=True)
    ws.add_argument("--threads", type=int, default=1)
    ws.add_argument("--out", default=None)
    ws.add_argument("--json", default=None)
    ws.set_defaults(func=_cmd_walk_simulate)
    wc = wsub.add_parser("criteria")
    wc.add_argument("--graph", required=True)
    wc.add_argument("--radius", type=int, required=True)
    wc.add_argument("--columns", action="store_true",
                    help="ladder column cutsets instead of BFS spheres")
    wc.add_argument("--out", default=None)
    wc.add_argument("--json", default=None)
    wc.set_defaults(func=_cmd_walk_criteria)
    wr = wsub.add_parser("resistance")
    wr.add_argument("--graph", required=True)
    wr.add_argument("--radius", type=int, required=True)
    wr.add_argument("--radii", default=None, help="comma-separated radii")
    wr.add_argument("--tol", type=float, default=1e-8)
    wr.add_argument("--out", default=None)
    wr.set_defaults(func=_cmd_walk_resistance)

    o = sub.add_parser("orbit", help="hyperbolic orbit enumeration")
    osub = o.add_subparsers(dest="analysis", required=True)
    oc = osub.add_parser("count")
    oc.add_argument("--gens", required=True, help="generator matrix file")
    oc.add_argument("--model", default=None)
    oc.add_argument("--tmax", type=float, required=True)
    oc.add_argument("--word-cap", type=int, default=None)
    oc.add_argument("--dedup-tol", type=float, default=1e-7)
    oc.add_argument("--theta", default=None,
                    help="integer rows per generator, e.g. '1;1' or '1,0;0,1'")
    oc.add_argument("--out", default=None)
    oc.add_argument("--kernel-out", default=None)
    oc.add_argument("--json", default=None)
    oc.set_defaults(func=_cmd_orbit_count)

    f = sub.add_parser("fit", help="decay-profile measure fitting")
    fsub = f.add_subparsers(dest="analysis", required=True)
    fl = fsub.add_parser("laplace")
    fl.add_argument("--profile", required=True, help="exp:RATE | sqrt | curve")
    fl.add_argument("--curve", default=None, help="counting-curve CSV")
    fl.add_argument("--scale", type=float, default=1.0)
    fl.add_argument("--n", type=int, default=1)
    fl.add_argument("--tmin", type=float, default=1.0)
    fl.add_argument("--tmax", type=float, default=30.0)
    fl.add_argument("--samples", type=int, default=80)
    fl.add_argument("--grid-size", type=int, default=41)
    fl.add_argument("--grid-min", type=float, default=1e-4)
    fl.add_argument("--geometric", action="store_true")
    fl.add_argument("--out", default=None)
    fl.add_argument("--json", default=None)
    fl.set_defaults(func=_cmd_fit_laplace)

    c = sub.add_parser("check", help="quantitative bound checks")
    csub = c.add_subparsers(dest="analysis", required=True)
    co = csub.add_parser("overlap")
    co.add_argument("--n", type=int, default=1)
    co.add_argument("--tmin", type=float, default=1.0)
    co.add_argument("--tmax", type=float, default=6.0)
    co.add_argument("--tstep", type=float, default=0.5)
    co.add_argument("--smin", type=float, default=None)
    co.add_argument("--sstep", type=float, default=0.25)
    co.add_argument("--tol", type=float, default=1e-9)
    co.add_argument("--out", default=None)
    co.add_argument("--json", default=None)
    co.set_defaults(func=_cmd_check_overlap)

    r = sub.add_parser("run", help="execute an INI experiment config")
    r.add_argument("--config", required=True)
    r.add_argument("--override", action="append", default=None,
                   help="section.key=value, repeatable")
    r.set_defaults(func=_cmd_run)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: missing file: {exc}", file=sys.stderr)
        return EXIT_MISSING
    except SpecError as exc:
        print(f"error: invalid spec: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except Exception as exc:  # module errors surface with a diagnostic
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
