"""Command-line entry point: ``imf-loc detect|gen|check|export|bench``.

Exit codes: 0 success, 1 a check failed, 2 unreadable input, 64 bad usage.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import formats
from .flownet import build_flow_network
from .imf import DetectionConfig, Mode, adjacency_for, detect
from .maxflow import max_flow_push_relabel, max_flow_reference
from .netgen import (
    GeneratorConfig,
    generate_erdos_renyi,
    generate_unit_disk,
    generate_unit_disk_for_degree,
    random_small_instance,
)
from .network import generated_graph
from .oracle import OracleLimits, count_disjoint_paths_bruteforce, oracle_fixpoint
from .trilateration import tp_detect

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _InputError(Exception):
    pass


def _load(path):
    try:
        return formats.load_network(path)
    except formats.ParseError as exc:
        raise _InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise _InputError(f"{path}: {exc.strerror}") from None


def _run_detection(net, mode: str, dimension: int):
    if mode == "tp":
        return tp_detect(net, dimension)
    return detect(net, DetectionConfig(mode=mode.upper(), dimension=dimension))


# -- detect ------------------------------------------------------------------


def cmd_detect(args) -> int:
    net = _load(args.input)
    report = _run_detection(net, args.mode, args.dimension)
    agents = len(net.agents)
    found = len(report.localizable_agents(net))
    if args.format == "json":
        text = formats.format_report_json(report)
    else:
        text = (
            f"mode: {report.mode}\n"
            f"dimension: {report.dimension}\n"
            f"localizable: {' '.join(map(str, report.localizable))}\n"
            f"removed: {' '.join(map(str, report.removal_order))}\n"
            f"passes: {report.passes}\n"
        )
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    ratio = found / agents if agents else 0.0
    print(
        f"|V*| = {len(report.localizable)}; localizable agents: {found}/{agents} "
        f"({ratio:.1%}); passes: {report.passes}",
        file=sys.stderr if not args.out else sys.stdout,
    )
    return EXIT_OK


# -- gen -----------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.model == "disk":
        if args.degree is not None:
            net, _ = generate_unit_disk_for_degree(
                args.n, args.anchors, args.degree, args.dimension, args.side, args.seed
            )
        else:
            net = generate_unit_disk(
                GeneratorConfig(args.n, args.anchors, args.radius, args.side, args.dimension, args.seed)
            )
    else:
        net = generate_erdos_renyi(args.n, args.anchors, args.p, args.seed)
    if args.out:
        formats.save_network(net, args.out)
    else:
        sys.stdout.write(formats.format_network_json(net) if args.json else formats.format_edge_list(net))
    return EXIT_OK


# -- check ---------------------------------------------------------------------


def check_instance(net) -> list[str]:
    """Every cross-check on one network; returns human-readable failures."""
    failures = []
    m = len(net.anchors)
    limits = OracleLimits(max_nodes=max(14, net.node_count), max_cut_size=m)
    for mode in (Mode.BLL, Mode.NLL):
        cfg = DetectionConfig(mode=mode)
        neighbors = adjacency_for(net, cfg)
        fn = build_flow_network(neighbors, net.anchors)
        for i in fn.agents:
            pr = max_flow_push_relabel(fn, fn.out_vertex(i), fn.sink).value
            ek = max_flow_reference(fn, fn.out_vertex(i), fn.sink).value
            brute = count_disjoint_paths_bruteforce(neighbors, net.anchors, i, m + 1, limits=limits)
            if not pr == ek == brute:
                failures.append(
                    f"{mode.value} agent {i}: push-relabel {pr}, reference {ek}, brute force {brute}"
                )
        got = detect(net, cfg).localizable_set
        want = oracle_fixpoint(net, cfg, limits)
        if got != want:
            failures.append(
                f"{mode.value} fixpoint: detect {sorted(got)} vs oracle {sorted(want)}"
            )
    return failures


def _check_seed(job):
    seed, max_n = job
    net = random_small_instance(seed, max_n)
    return seed, check_instance(net)


def cmd_check(args) -> int:
    if args.input:
        failures = check_instance(_load(args.input))
        for f in failures:
            print("FAIL", f)
        print("ok" if not failures else f"{len(failures)} failure(s)")
        return EXIT_CHECK_FAILED if failures else EXIT_OK

    jobs = [(args.seed + k, args.max_n) for k in range(args.trials)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_check_seed, jobs, chunksize=8))
    else:
        results = map(_check_seed, jobs)
    done = 0
    for seed, failures in results:
        done += 1
        if failures:
            print(f"counterexample at seed {seed} (max-n {args.max_n}):")
            for f in failures:
                print("  " + f)
            print(formats.format_network_json(random_small_instance(seed, args.max_n)), end="")
            return EXIT_CHECK_FAILED
    print(f"{done} instances passed")
    return EXIT_OK


# -- export --------------------------------------------------------------------


def cmd_export(args) -> int:
    net = _load(args.input)
    if args.what == "g":
        text = formats.graph_to_dot(net, "G")
    elif args.what == "ga":
        text = formats.graph_to_dot(generated_graph(net, args.dimension), "GA", net.positions)
    else:
        neighbors = net.neighbors if args.mode == "nll" else generated_graph(net, args.dimension).neighbors
        text = build_flow_network(neighbors, net.anchors).to_dot()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- bench ---------------------------------------------------------------------


def _bench_one(job):
    n, m, degree, seed, mode = job
    net, radius = generate_unit_disk_for_degree(n, m, degree, seed=seed)
    start = time.perf_counter()
    report = _run_detection(net, mode, 2)
    elapsed = time.perf_counter() - start
    return seed, net.edge_count, len(report.localizable_agents(net)), report.passes, elapsed


def cmd_bench(args) -> int:
    jobs = [(args.n, args.anchors, args.degree, args.seed + k, args.mode) for k in range(args.trials)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(j) for j in jobs]
    print(f"{'seed':>6} {'n':>6} {'edges':>7} {'mean_deg':>8} {'mode':>4} {'found':>6} {'passes':>6} {'seconds':>8}")
    for seed, edges, found, passes, elapsed in rows:
        print(
            f"{seed:>6} {args.n:>6} {edges:>7} {2 * edges / args.n:>8.2f} {args.mode:>4} "
            f"{found:>6} {passes:>6} {elapsed:>8.3f}"
        )
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="imf-loc", description="Localizability detection by iterative max-flow.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("detect", help="find localizable nodes of a network file")
    p.add_argument("input")
    p.add_argument("--mode", choices=["bll", "nll", "tp"], default="bll")
    p.add_argument("--dimension", "-d", type=int, default=2)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("gen", help="generate a random network")
    p.add_argument("--model", choices=["disk", "gnp"], default="disk")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--anchors", type=int, default=3)
    p.add_argument("--radius", type=float, default=0.25)
    p.add_argument("--degree", type=float, help="target mean degree (disk); overrides --radius")
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--side", type=float, default=1.0)
    p.add_argument("--dimension", "-d", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="JSON on stdout instead of an edge list")
    p.add_argument("--out", help="output file; .json selects the JSON format")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="cross-check detector, solvers and oracle")
    p.add_argument("input", nargs="?")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("export", help="DOT drawing of G, its generated graph, or the flow network")
    p.add_argument("input")
    p.add_argument("--what", choices=["g", "ga", "gprime"], default="g")
    p.add_argument("--mode", choices=["bll", "nll"], default="bll", help="adjacency behind gprime")
    p.add_argument("--dimension", "-d", type=int, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("bench", help="time detection on random unit-disk networks")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--degree", type=float, default=10.0)
    p.add_argument("--anchors", type=int, default=10)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--mode", choices=["bll", "nll", "tp"], default="bll")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"imf-loc: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
