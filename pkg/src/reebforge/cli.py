"""Command line front end.

Exit codes: 0 success, 1 a negative answer (no good orientation, graphs not
isomorphic), 2 unreadable input, 3 singular zero set, 4 compactness not
certified, 5 not stable or not Morse, 6 precision budget exhausted,
7 no upward embedding, 8 realization failed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .errors import ParseError, ReebforgeError, RealizationFailed, UnrealizableEmbedding
from .graph import (Multigraph, OrientationWitness, dumps, enumerate_good_graphs,
                    find_good_orientation, format_rational, graph_from_json, is_good_orientation,
                    multigraph_to_json_obj, ordered_from_witness, ordered_isomorphic)
from .poly import format_poly, parse_poly


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_graph(path):
    return graph_from_json(_read(path))


def _witness(g: Multigraph, xs):
    """The x values of the file when they form a good orientation, else a
    computed one, else None."""
    if xs is not None:
        w = OrientationWitness(xs)
        if is_good_orientation(g, w):
            return w
    return find_good_orientation(g)


def _graph_extra(r):
    if not r.x_intervals:
        return None
    return {"x_intervals": {str(v): [format_rational(lo), format_rational(hi)]
                            for v, (lo, hi) in sorted(r.x_intervals.items())}}


def _critical_positions(d, r):
    from .reeb2d import critical_points
    pos = {}
    for (vid, _, _), cp in zip(r.vertices, critical_points(d)):
        (a, b), (c, e) = cp.box.x_interval, cp.box.y_interval
        pos[vid] = ((a + b) / 2, (c + e) / 2)
    return pos


def cmd_reeb(args):
    from .reeb2d import DomainSpec2, poincare_reeb_graph
    d = DomainSpec2(parse_poly(_read(args.poly), 2))
    r = poincare_reeb_graph(d)
    _write(args.out, r.to_json(_graph_extra(r)))
    if args.svg:
        from .render import render_domain
        Path(args.svg).write_text(render_domain(d.q, r, _critical_positions(d, r)))
    return 0


def cmd_orient(args):
    g, xs = _load_graph(args.graph)
    w = _witness(g, xs)
    if w is None:
        print("none")
        return 1
    _write(args.out, dumps(multigraph_to_json_obj(g, w)))
    return 0


def _read_config(path):
    from .realize import RealizationConfig
    if path is None:
        return RealizationConfig()
    kw = {}
    for n, line in enumerate(_read(path).splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in RealizationConfig.__dataclass_fields__:
            raise ParseError(f"config line {n}: expected one of "
                             f"{', '.join(RealizationConfig.__dataclass_fields__)} = value")
        try:
            v = Fraction(value)
        except ValueError as exc:
            raise ParseError(f"config line {n}: {value!r} is not a number") from exc
        kw[key] = int(v) if key in ("fit_degree", "coeff_denominator_bound", "max_retries") else v
    try:
        return RealizationConfig(**kw)
    except ValueError as exc:
        raise ParseError(f"config: {exc}") from exc


def cmd_realize(args):
    from .realize import realize_2d
    g, xs = _load_graph(args.graph)
    c = _read_config(args.config)
    w = _witness(g, xs)
    if w is None:
        print("none: the graph has no good orientation", file=sys.stderr)
        return 1
    if not set(g.degrees().values()) <= {1, 3}:
        raise UnrealizableEmbedding("planar realization needs every vertex degree in {1, 3}")
    report = {}
    try:
        q, r = realize_2d(g, w, c, report=report)
    except RealizationFailed as exc:
        report = {"status": "failed", "retries": c.max_retries,
                  "degree": exc.last_poly.degree() if exc.last_poly is not None else None,
                  "graph": exc.last_graph.to_json_obj() if exc.last_graph is not None else None,
                  "message": str(exc)}
        _write(args.report, dumps(report))
        raise
    _write(args.out, format_poly(q) + "\n")
    _write(args.report, dumps(report))
    if args.svg:
        from .reeb2d import DomainSpec2
        from .render import render_domain
        d = DomainSpec2(q)
        Path(args.svg).write_text(render_domain(q, r, _critical_positions(d, r)))
    return 0


def cmd_verify(args):
    from .reeb2d import DomainSpec2, poincare_reeb_graph
    g, xs = _load_graph(args.graph)
    if xs is None:
        raise ParseError("verify needs an x value on every vertex")
    r = poincare_reeb_graph(DomainSpec2(parse_poly(_read(args.poly), 2)))
    ok = ordered_isomorphic(r, ordered_from_witness(g, OrientationWitness(xs)))
    _write(args.out, dumps({"isomorphic": ok, "graph": r.to_json_obj()}))
    return 0 if ok else 1


def _grid(q, args):
    from .sampled import GridSpec, domain_box
    if args.half is not None:
        return GridSpec.cube(q.nvars, Fraction(args.half), args.resolution)
    return GridSpec(domain_box(q), args.resolution)


def cmd_sample_reeb(args):
    from .sampled import resolution_stable_reeb, sampled_reeb
    q = parse_poly(_read(args.poly), args.nvars)
    grid = _grid(q, args)
    s = (resolution_stable_reeb if args.stable else sampled_reeb)(q, q.nvars, grid)
    _write(args.out, dumps(s.to_json_obj()))
    return 0


def cmd_double(args):
    from .reeb2d import DomainSpec2, poincare_reeb_graph
    from .sampled import double_grid, sampled_double_reeb
    d = DomainSpec2(parse_poly(_read(args.poly), 2))
    r = poincare_reeb_graph(d)
    grid = _grid(d.q, args)
    s = sampled_double_reeb(d.q, grid)
    ok = ordered_isomorphic(r, s.to_ordered())
    top = max((abs(p[-1]) for p in s.points), default=0.0)
    obj = {"isomorphic": ok, "exact": r.to_json_obj(), "sampled": s.to_json_obj(),
           "max_abs_y": format_rational(Fraction(top).limit_denominator(10 ** 12)),
           "box": [[format_rational(a), format_rational(b)] for a, b in double_grid(d.q, grid).box]}
    _write(args.out, dumps(obj))
    return 0 if ok else 1


def _random_tree(n, rng):
    ids = [f"t{i}" for i in range(n)]
    return Multigraph(ids, [(ids[rng.randrange(i)], ids[i]) for i in range(1, n)])


def cmd_corpus(args):
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    degrees = {int(t) for t in args.degrees.split(",") if t.strip()}
    names = []
    for k, (g, w) in enumerate(enumerate_good_graphs(args.max_vertices, degrees)):
        name = f"graph_{k:03d}.json"
        (out / name).write_text(dumps(multigraph_to_json_obj(g, w)))
        names.append(name)
    rng = random.Random(args.seed)
    for k in range(args.random_trees):
        g = _random_tree(args.tree_size, rng)
        name = f"tree_{k:03d}.json"
        (out / name).write_text(dumps(multigraph_to_json_obj(g)))
        names.append(name)
    failed = 0
    if args.realize:
        from .realize import realize_2d
        for name in names:
            g, xs = graph_from_json((out / name).read_text())
            w = _witness(g, xs)
            stem = name[:-5]
            try:
                if w is None or not set(g.degrees().values()) <= {1, 3}:
                    raise UnrealizableEmbedding("not a good-oriented graph with degrees in {1, 3}")
                report = {}
                q, _ = realize_2d(g, w, report=report)
            except ReebforgeError as exc:
                report = {"status": type(exc).__name__, "message": str(exc)}
                failed += not isinstance(exc, UnrealizableEmbedding)
            else:
                (out / f"{stem}.poly").write_text(format_poly(q) + "\n")
            (out / f"{stem}.report.json").write_text(dumps(report))
            print(f"{stem}: {report['status']}", flush=True)
    _write(None, dumps({"graphs": names, "failed": failed}))
    return 8 if failed else 0


def cmd_render(args):
    from .render import render_domain, render_embedding
    text = _read(args.input)
    if text.lstrip().startswith("{"):
        from .realize import upward_embed
        g, xs = graph_from_json(text)
        w = _witness(g, xs)
        if w is None:
            print("none: the graph has no good orientation", file=sys.stderr)
            return 1
        Path(args.svg).write_text(render_embedding(upward_embed(g, w)))
        return 0
    from .reeb2d import DomainSpec2, poincare_reeb_graph
    d = DomainSpec2(parse_poly(text, 2))
    try:
        r = poincare_reeb_graph(d)
        pos = _critical_positions(d, r)
    except ReebforgeError as exc:
        print(f"drawing without the Reeb graph: {exc}", file=sys.stderr)
        r = pos = None
    Path(args.svg).write_text(render_domain(d.q, r, pos, resolution=args.resolution))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="reebforge", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("reeb", help="exact Reeb graph of a planar domain {q >= 0}")
    s.add_argument("poly")
    s.add_argument("out", nargs="?", default="-")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_reeb)

    s = sub.add_parser("orient", help="find a good orientation of a graph")
    s.add_argument("graph")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_orient)

    s = sub.add_parser("realize", help="build a polynomial whose domain has the given Reeb graph")
    s.add_argument("graph")
    s.add_argument("out")
    s.add_argument("--config", help="key = value lines overriding RealizationConfig")
    s.add_argument("--report", default="-")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("verify", help="compare a polynomial's Reeb graph with a graph file")
    s.add_argument("graph")
    s.add_argument("poly")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_verify)

    for name, fn, helptext in (("sample-reeb", cmd_sample_reeb, "sampled Reeb graph in any dimension"),
                               ("double", cmd_double, "sampled Reeb graph of the double of a planar domain")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("poly")
        if name == "sample-reeb":
            s.add_argument("--nvars", type=int, default=3)
            s.add_argument("--stable", action="store_true",
                           help="also sample at twice the resolution and insist on agreement")
        s.add_argument("--resolution", type=int, default=128)
        s.add_argument("--half", help="use the cube [-half, half]^n instead of a searched box")
        s.add_argument("--out", default="-")
        s.set_defaults(func=fn)

    s = sub.add_parser("corpus", help="write the good-oriented graph corpus")
    s.add_argument("--out", required=True)
    s.add_argument("--max-vertices", type=int, default=8)
    s.add_argument("--degrees", default="1,3")
    s.add_argument("--random-trees", type=int, default=0)
    s.add_argument("--tree-size", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--realize", action="store_true")
    s.set_defaults(func=cmd_corpus)

    s = sub.add_parser("render", help="SVG of a polynomial domain or a graph embedding")
    s.add_argument("input")
    s.add_argument("svg")
    s.add_argument("--resolution", type=int, default=256)
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ReebforgeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
