"""Command-line front end.  Exit codes: 0 ok, 2 precondition, 3 resource cap, 4 parse."""

import argparse
import csv
import json
import sys

from .abc_theorem import mason_stothers_check, zero_place_count_check
from .constructor import Capped, CoefficientWitness, realize_chain
from .dynatomic import detect_power_map_conjugacy, x_set, y_set
from .dynmap import DEFAULT_BOUND, DEFAULT_DEGREE_CAP, IterationContext, portrait_mod_place
from .errors import ParseError, PreconditionError, ResourceLimitError
from .exactalg import Poly, RatFunc, RationalFunctionField
from .heights import canonical_height, height_comparison_bound, weil_height
from .parser import (
    parse_exclusions,
    parse_expression,
    parse_map,
    parse_place,
    parse_point,
    parse_portrait,
    parse_rational,
    parse_t_polynomial,
)
from .witness import Status, find_witness, portrait_grid, starting_point_sweep

EXIT_OK, EXIT_PRECONDITION, EXIT_RESOURCE, EXIT_PARSE = 0, 2, 3, 4


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise PreconditionError(f"--{name.replace('_', '-')} is required")
    return value


def _ctx(args):
    return IterationContext(args.degree_cap)


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def cmd_height(args):
    pt = parse_point(_need(args, "alpha"))
    payload = {"point": str(pt), "height": weil_height(pt)}
    text = f"h({pt}) = {payload['height']}"
    if args.map:
        phi = parse_map(args.map)
        payload["map"] = str(phi)
        payload["comparison_bound"] = height_comparison_bound(phi)
        text += f"\nC_phi for {phi} = {payload['comparison_bound']}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_canheight(args):
    phi = parse_map(_need(args, "map"))
    pt = parse_point(_need(args, "alpha"))
    eps = parse_rational(args.eps)
    est = canonical_height(phi, pt, eps, _ctx(args))
    payload = {"center": str(est.center), "radius": str(est.radius), "iterations": est.iterations_used}
    _emit(args, payload, f"canonical height of {pt}: {est.center} +/- {est.radius} (N = {est.iterations_used})")
    return EXIT_OK


def cmd_portrait(args):
    phi = parse_map(_need(args, "map"))
    pt = parse_point(_need(args, "alpha"))
    place = parse_place(_need(args, "place"), args.trust_irreducible)
    res = portrait_mod_place(phi, pt, place, args.bound)
    payload = {"place": str(place), "portrait": None if res is None else [res.m, res.n]}
    text = f"portrait of {pt} at {place}: " + (str(res) if res else f"unknown (no repeat within {args.bound} steps)")
    _emit(args, payload, text)
    return EXIT_OK


def _target(args):
    return parse_portrait(f"({_need(args, 'm')},{_need(args, 'n')})")


def cmd_witness(args):
    phi = parse_map(_need(args, "map"))
    pt = parse_point(_need(args, "alpha"))
    rep = find_witness(phi, pt, _target(args), parse_exclusions(args.exclude), _ctx(args))
    d = rep.as_dict()
    text = (
        f"portrait {rep.requested}: {rep.status}\n  divisor: {d['divisor']}\n"
        f"  rational witnesses: {', '.join(d['rational_witnesses']) or 'none'}\n"
        f"  infinity: {rep.infinity_is_witness}"
    )
    if rep.cofinite:
        text += f"\n  every place except roots of {rep.excluded}"
    _emit(args, d, text)
    return EXIT_RESOURCE if rep.status is Status.CAPPED else EXIT_OK


def cmd_grid(args):
    phi = parse_map(_need(args, "map"))
    pt = parse_point(_need(args, "alpha"))
    grid = portrait_grid(phi, pt, args.max_m, args.max_n, parse_exclusions(args.exclude), _ctx(args))
    rows = list(grid.csv_rows())
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            csv.writer(fh).writerows(rows)
    if args.json:
        cells = []
        for m, n, cell in grid.rows():
            entry = cell.report.as_dict()
            entry["annotation"] = cell.annotation
            cells.append(entry)
        print(json.dumps({"max_m": args.max_m, "max_n": args.max_n, "cells": cells}))
    else:
        for m, n, cell in grid.rows():
            note = f"  [{cell.annotation}]" if cell.annotation else ""
            print(f"({m},{n}) {cell.report.status} {cell.report.sample_witness()}{note}")
    return EXIT_OK


def cmd_sweep(args):
    phi = parse_map(_need(args, "map"))
    cands = [parse_rational(c) for c in args.candidates.split(",") if c.strip()]
    out = starting_point_sweep(phi, _target(args), parse_exclusions(args.exclude), cands, _ctx(args))
    payload = [{"alpha": str(c), **rep.as_dict()} for c, rep in out]
    _emit(args, payload, "\n".join(f"alpha = {c}: {rep.status} {rep.sample_witness()}" for c, rep in out))
    return EXIT_OK


def cmd_xset(args):
    phi = parse_map(_need(args, "map"))
    xs = sorted(x_set(phi, args.max_n, _ctx(args)))
    kind = detect_power_map_conjugacy(phi)
    _emit(args, {"x_set": xs, "power_map_type": str(kind)}, f"X = {set(xs) or '{}'}  (power-map type: {kind})")
    return EXIT_OK


def cmd_yset(args):
    phi = parse_map(_need(args, "map"))
    pt = parse_point(_need(args, "alpha"))
    ys = sorted(y_set(phi, pt, args.max_m, _ctx(args)))
    _emit(args, {"y_set": ys}, f"Y = {set(ys) or '{}'}")
    return EXIT_OK


def cmd_abc(args):
    if args.f:
        num, den = parse_expression(args.f)
        if den.degree > 0 or den.lc.degree > 0:
            raise PreconditionError("f must be a polynomial in z")
        f = Poly([RatFunc(c) / RatFunc(den.lc) for c in num.coeffs], RationalFunctionField("t"), "z")
        gamma = parse_point(_need(args, "gamma")).as_ratfunc()
        rep = zero_place_count_check(f, gamma)
    else:
        rep = mason_stothers_check(parse_t_polynomial(_need(args, "a")), parse_t_polynomial(_need(args, "b")))
    _emit(args, rep.as_dict(), f"lhs = {rep.lhs}, rhs = {rep.rhs}, holds = {rep.holds}, slack = {rep.slack}")
    return EXIT_OK


def cmd_construct(args):
    points = [parse_rational(p) for p in _need(args, "points").split(",")]
    targets = [parse_portrait(s) for s in _need(args, "portraits").split(";")]
    res = realize_chain(args.degree, points, targets, args.degree_cap)
    payload = res.as_dict()
    if isinstance(res, CoefficientWitness):
        text = ", ".join(f"{k} = {v}" for k, v in res.assignment.items()) + f" (verified: {res.verified})"
    else:
        text = f"{payload['status']}: {res.reason}"
    _emit(args, payload, text)
    return EXIT_RESOURCE if isinstance(res, Capped) else EXIT_OK


COMMANDS = {
    "height": (cmd_height, "Weil height of a point (and C_phi with --map)"),
    "canheight": (cmd_canheight, "canonical height with a certified error"),
    "portrait": (cmd_portrait, "portrait of a point modulo a place"),
    "witness": (cmd_witness, "places realizing a portrait"),
    "grid": (cmd_grid, "witness search over a rectangle of portraits"),
    "sweep": (cmd_sweep, "witness search over constant starting points"),
    "xset": (cmd_xset, "periods whose points are all totally ramified"),
    "yset": (cmd_yset, "preperiods blocked by total ramification"),
    "abc": (cmd_abc, "Mason-Stothers and zero-place checks"),
    "construct": (cmd_construct, "normal-form coefficients realizing portraits"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="portraits", description="Preperiodic portraits over QQ(t).")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        p.add_argument("--map", help='rational map in z and t, e.g. "z^2 + t"')
        p.add_argument("--alpha", help='starting point, e.g. "1/2", "t+1", "inf"')
        p.add_argument("--place", help='place, e.g. "t-3", "t^2+1", "inf"')
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--max-m", type=int, default=3)
        p.add_argument("--max-n", type=int, default=4)
        p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
        p.add_argument("--exclude", default="", help='extra excluded places, "poly;poly;inf"')
        p.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
        p.add_argument("--json", action="store_true")
        p.add_argument("--csv", metavar="PATH")
        p.add_argument("--trust-irreducible", action="store_true")
        if name == "canheight":
            p.add_argument("--eps", default="1/1024")
        if name == "sweep":
            p.add_argument("--candidates", default="-3,-2,-1,0,1,2,3")
        if name == "abc":
            p.add_argument("--a")
            p.add_argument("--b")
            p.add_argument("--f", help="monic squarefree polynomial in z of degree >= 3")
            p.add_argument("--gamma")
        if name == "construct":
            p.add_argument("--degree", type=int, default=2)
            p.add_argument("--points")
            p.add_argument("--portraits")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        return handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
