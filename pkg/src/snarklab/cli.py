"""Command-line interface: analyze, construct, reduce, verify, batch.

Configuration precedence: command-line flags > SNARKLAB_* environment
variables > plain-text key=value config file (--config or ./snarklab.cfg)
> built-in defaults.  Exit codes: 0 success, 1 verification failure,
2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .canonical import canonical_form
from .colouring import is_colourable, resistance
from .connectivity import cyclic_connectivity, edge_connectivity
from .factors import OddnessUndefined, oddness_upper_bound, oddness, ratio_bound_check
from .graphio import (
    ParseError,
    read_graph6,
    read_multi_text,
    write_graph6,
    write_multi_text,
)
from .multigraph import AcyclicError, GraphError, enumerate_circuits, five_circuit_incidence, girth

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

DEFAULTS = {"cache": "", "jobs": "1", "max_zeta": "7", "format": "json"}


class UsageError(Exception):
    pass


# -- configuration ----------------------------------------------------------------


def load_config_file(path):
    cfg = {}
    p = Path(path)
    if not p.exists():
        return cfg
    for lineno, raw in enumerate(p.read_text().splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if "=" not in s:
            raise UsageError(f"{path}:{lineno}: expected key=value, got {s!r}")
        k, v = s.split("=", 1)
        cfg[k.strip()] = v.strip()
    return cfg


def setting(name, flag_value, config):
    """flags > SNARKLAB_<NAME> env > config file > defaults."""
    if flag_value is not None:
        return str(flag_value)
    env = os.environ.get(f"SNARKLAB_{name.upper()}")
    if env is not None:
        return env
    if name in config:
        return config[name]
    return DEFAULTS[name]


# -- graph input ------------------------------------------------------------------


def read_graph_records(text, source):
    """Yield (label, graph-or-ParseError) records from file text.

    A file whose first payload line is an 'n m' header is one multi_text
    graph; otherwise every payload line is a graph6 string.
    """
    payload = [
        (i, ln.strip())
        for i, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not payload:
        return
    first = payload[0][1].split()
    if len(first) == 2 and all(p.isdigit() for p in first):
        try:
            yield f"{source}", read_multi_text(text)
        except ParseError as exc:
            yield f"{source}", exc
        return
    for lineno, s in payload:
        try:
            yield f"{source}:{lineno}", read_graph6(s, line=lineno)
        except ParseError as exc:
            yield f"{source}:{lineno}", exc


# -- invariant records -------------------------------------------------------------


def canonical_key(g):
    return hashlib.sha256(repr(canonical_form(g)).encode()).hexdigest()[:24]


def compute_record(g, max_zeta=7, skip=(), timings=False):
    """All invariants of one cubic graph as a JSON-ready dict."""
    rec = {}
    times = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        out = fn()
        times[name] = round(time.perf_counter() - t0, 6)
        return out

    rec["key"] = timed("canonical", lambda: canonical_key(g))
    rec["order"] = g.n()
    try:
        rec["girth"] = timed("girth", lambda: girth(g))
    except AcyclicError:
        rec["girth"] = None
    rec["edge_connectivity"] = timed("edge_connectivity", lambda: edge_connectivity(g))
    if "zeta" not in skip:
        zr = timed("zeta", lambda: cyclic_connectivity(g, k_cap=max_zeta))
        rec["zeta"] = zr.describe()
        rec["zeta_exact"] = zr.zeta if zr.kind == "exact" else None
    rec["colourable"] = timed("colourable", lambda: is_colourable(g))
    if "rho" not in skip:
        rho, _ = timed("rho", lambda: resistance(g))
        rec["rho"] = rho
    if "omega" not in skip:
        cert = timed("omega", lambda: oddness(g))
        if isinstance(cert, OddnessUndefined):
            rec["omega"] = str(cert)
        else:
            rec["omega"] = cert.omega
    counts, profile, over6 = five_circuit_incidence(g)
    rec["five_circuit_profile"] = list(profile)
    omega = rec.get("omega")
    if isinstance(omega, int) and omega > 0:
        rec["ratio"] = str(Fraction(g.n(), omega))
    else:
        rec["ratio"] = None
    # bound checks, only meaningful for uncolourable bridgeless inputs
    if isinstance(omega, int) and omega > 0 and not rec["colourable"]:
        t8 = ratio_bound_check(g, omega=omega)
        rec["ratio_bound"] = {
            "class": t8.connectivity_class,
            "bound": str(t8.bound),
            "ok": bool(t8.ok or t8.exempt),
            "exempt": t8.exempt,
        }
        if rec["girth"] is not None and rec["girth"] >= 4:
            q = sum(1 for c in enumerate_circuits(g, 5) if len(c) == 5)
            b = oddness_upper_bound(g.n(), q)
            rec["oddness_bound"] = {"bound": str(b), "ok": Fraction(omega) <= b}
    # internal consistency
    if isinstance(omega, int) and "rho" in rec:
        assert rec["rho"] <= omega and omega % 2 == 0 and rec["rho"] != 1
    if timings:
        rec["timings"] = times
    return rec


def record_to_text(rec):
    cols = [
        ("key", rec.get("key", "")[:12]),
        ("n", rec.get("order")),
        ("girth", rec.get("girth")),
        ("lambda", rec.get("edge_connectivity")),
        ("zeta", rec.get("zeta", "-")),
        ("col", "yes" if rec.get("colourable") else "no"),
        ("rho", rec.get("rho", "-")),
        ("omega", rec.get("omega", "-")),
        ("ratio", rec.get("ratio") or "-"),
        ("n5-profile", ",".join(map(str, rec.get("five_circuit_profile", [])))),
    ]
    return "  ".join(f"{k}={v}" for k, v in cols)


# -- cache ------------------------------------------------------------------------


class RecordCache:
    """Append-only JSONL cache keyed by canonical key; corrupt lines are
    dropped with a warning and recomputed."""

    def __init__(self, path):
        self.path = Path(path)
        self.records = {}
        if self.path.exists():
            for lineno, raw in enumerate(self.path.read_text().splitlines(), 1):
                if not raw.strip():
                    continue
                try:
                    obj = json.loads(raw)
                    self.records[obj["key"]] = obj
                except (ValueError, KeyError):
                    print(
                        f"warning: {self.path}:{lineno}: corrupt cache entry dropped",
                        file=sys.stderr,
                    )

    def get(self, key):
        return self.records.get(key)

    def put(self, rec):
        if rec["key"] in self.records:
            return
        self.records[rec["key"]] = rec
        line = json.dumps(rec, sort_keys=True) + "\n"
        fd = os.open(self.path, os.O_WRONLY | os.O_CREAT | os.O_APPEND, 0o644)
        try:
            os.write(fd, line.encode())  # single write: atomic append
        finally:
            os.close(fd)


# -- commands ---------------------------------------------------------------------


def _emit(rec, fmt, out=None):
    out = out if out is not None else sys.stdout
    if fmt == "json":
        print(json.dumps(rec, sort_keys=True), file=out)
    else:
        print(record_to_text(rec), file=out)


def cmd_analyze(args, config):
    max_zeta = int(setting("max_zeta", args.max_zeta, config))
    fmt = setting("format", args.format, config)
    cache_path = setting("cache", args.cache, config)
    cache = RecordCache(cache_path) if cache_path else None
    skip = set(args.skip or [])
    status = EXIT_OK
    for path in args.inputs:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        for label, item in read_graph_records(text, path):
            if isinstance(item, ParseError):
                print(f"{label}: parse error: {item}", file=sys.stderr)
                continue
            if not item.is_cubic():
                print(f"{label}: not cubic, skipped", file=sys.stderr)
                continue
            key = canonical_key(item)
            cached = cache.get(key) if cache else None
            if cached is not None:
                _emit(cached, fmt)
                continue
            rec = compute_record(
                item, max_zeta=max_zeta, skip=skip, timings=args.timings
            )
            if cache:
                cache.put(rec)
            _emit(rec, fmt)
    return status


FAMILIES = {
    "petersen": ("", []),
    "flower": ("K (odd, >= 3)", [int]),
    "P2": ("", []),
    "P3": ("", []),
    "P4v": ("", []),
    "P4e": ("", []),
    "P5vvv": ("", []),
    "P5ev": ("", []),
    "R": ("I (>= 0)", [int]),
    "H": ("WHICH (1 or 2)", [int]),
    "ring": ("BLOCK [BLOCK...] (N1 or N2)", None),
    "Z-chain": ("R (>= 1)", [int]),
    "L": ("R (>= 2)", [int]),
    "M": ("R (>= 2)", [int]),
    "snark44": ("", []),
}


def _build_family(name, params):
    from . import constructions as C

    schema, types = FAMILIES[name]
    if types is not None:
        if len(params) != len(types):
            raise UsageError(f"family {name} takes parameters: {schema or '(none)'}")
        try:
            params = [t(p) for t, p in zip(types, params)]
        except ValueError:
            raise UsageError(f"family {name} parameters must be: {schema}")
    sidecar = {"family": name, "params": params}
    if name == "petersen":
        return C.petersen(), sidecar
    if name == "flower":
        return C.flower_snark(params[0]), sidecar
    if name in C.P_NETWORK_BUILDERS:
        net = C.P_NETWORK_BUILDERS[name]()
        sidecar["terminals"] = list(net.terminals)
        sidecar["connectors"] = [
            {"name": cn, "terminals": list(ts)} for cn, ts in net.connectors
        ]
        return net.graph, sidecar
    if name == "R":
        return C.build_R(params[0]), sidecar
    if name == "H":
        return C.build_H(params[0]), sidecar
    if name == "ring":
        if not params:
            raise UsageError("family ring takes parameters: BLOCK [BLOCK...]")
        builders = {"N1": C.build_N1, "N2": C.build_N2}
        try:
            blocks = [builders[p]() for p in params]
        except KeyError as exc:
            raise UsageError(f"unknown ring block {exc.args[0]!r} (use N1 or N2)")
        sidecar["blocks"] = list(params)
        return C.ring_join(blocks), sidecar
    if name == "Z-chain":
        return C.chain_Z(params[0]), sidecar
    if name == "L":
        return C.build_L(params[0]), sidecar
    if name == "M":
        g = C.build_M(params[0])
        _, plan = C.build_M_plan(params[0])
        sidecar["plan"] = {
            "base_order": plan.base.n(),
            "supervertices": len(plan.supervertices),
            "superedges": len(plan.superedges),
        }
        return g, sidecar
    if name == "snark44":
        sidecar["blocks"] = ["N2", "N1"]
        return C.snark44(), sidecar
    raise UsageError(f"unknown family {name!r}")


def _write_graph(g, fmt, out_path):
    if fmt == "graph6":
        text = write_graph6(g) + "\n"
    else:
        text = write_multi_text(g)
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args, config):
    if args.family not in FAMILIES:
        known = ", ".join(sorted(FAMILIES))
        raise UsageError(f"unknown family {args.family!r}; known: {known}")
    g, sidecar = _build_family(args.family, args.params)
    fmt = args.graph_format or ("graph6" if not g.has_parallel_edges() else "multi_text")
    try:
        _write_graph(g, fmt, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    sidecar["order"] = g.n()
    sidecar["size"] = g.m()
    sidecar["key"] = canonical_key(g)
    if args.out:
        Path(str(args.out) + ".json").write_text(
            json.dumps(sidecar, sort_keys=True) + "\n"
        )
    else:
        print(json.dumps(sidecar, sort_keys=True), file=sys.stderr)
    return EXIT_OK


def cmd_reduce(args, config):
    from .reductions import RULES, reduce_all

    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    records = list(read_graph_records(text, args.input))
    if len(records) != 1 or isinstance(records[0][1], ParseError):
        print("error: reduce expects exactly one valid graph", file=sys.stderr)
        return EXIT_USAGE
    g = records[0][1]
    op = reduce_all if args.rule == "all" else RULES[args.rule]
    try:
        out, trace = op(g)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    fmt = args.graph_format or (
        "graph6" if not out.has_parallel_edges() else "multi_text"
    )
    try:
        _write_graph(out, fmt, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    payload = json.dumps(trace.to_dict(), sort_keys=True) + "\n"
    if args.out:
        Path(str(args.out) + ".trace.json").write_text(payload)
    else:
        sys.stderr.write(payload)
    return EXIT_OK


def cmd_verify(args, config):
    from . import verify as V

    def progress(res):
        mark = "PASS" if res.ok else "FAIL"
        print(f"[{mark}] {res.suite}/{res.name} ({res.seconds:.2f}s): {res.detail}")

    if args.suite == "claims":
        claims = V.claims(slow=not args.skip_slow)
        results = V.run_suite("claims", claims, progress=progress)
    elif args.suite == "properties":
        results = V.properties(
            seed=args.seed, size_cap=args.size_cap or 12, progress=progress
        )
    else:
        results = V.oracles(size_cap=args.size_cap or 16, progress=progress)
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} claims passed")
    return EXIT_FAIL if failed else EXIT_OK


def _batch_worker(item):
    label, g6, max_zeta = item
    g = read_graph6(g6)
    return label, compute_record(g, max_zeta=max_zeta)


def cmd_batch(args, config):
    jobs = int(setting("jobs", args.jobs, config))
    max_zeta = int(setting("max_zeta", args.max_zeta, config))
    fmt = setting("format", args.format, config)
    cache_path = setting("cache", args.cache, config)
    if args.resume and not cache_path:
        raise UsageError("--resume requires a cache (--cache or SNARKLAB_CACHE)")
    cache = RecordCache(cache_path) if cache_path else None
    root = Path(args.dir)
    if not root.is_dir():
        print(f"error: {root} is not a directory", file=sys.stderr)
        return EXIT_IO
    tasks = []
    records = []
    for path in sorted(root.iterdir()):
        if path.suffix not in (".g6", ".graph6", ".mtxt", ".txt"):
            continue
        try:
            text = path.read_text()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        for label, item in read_graph_records(text, str(path)):
            if isinstance(item, ParseError):
                print(f"{label}: parse error: {item}", file=sys.stderr)
                continue
            if not item.is_cubic():
                print(f"{label}: not cubic, skipped", file=sys.stderr)
                continue
            key = canonical_key(item)
            cached = cache.get(key) if cache else None
            if cached is not None:
                records.append((label, cached))
            else:
                tasks.append((label, write_graph6(item), max_zeta))
    if tasks:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                computed = list(pool.map(_batch_worker, tasks))
        else:
            computed = [_batch_worker(t) for t in tasks]
        for label, rec in computed:
            if cache:
                cache.put(rec)
            records.append((label, rec))
    records.sort(key=lambda lr: lr[0])
    for _, rec in records:
        _emit(rec, fmt)
    # zeta-class summary of the oddness ratio
    by_zeta = {}
    for _, rec in records:
        omega = rec.get("omega")
        if not isinstance(omega, int) or omega == 0 or rec.get("colourable"):
            continue
        by_zeta.setdefault(rec.get("zeta", "-"), []).append(
            Fraction(rec["order"], omega)
        )
    summary = {}
    for z, ratios in sorted(by_zeta.items()):
        summary[str(z)] = {
            "count": len(ratios),
            "min": str(min(ratios)),
            "max": str(max(ratios)),
            "mean": str(sum(ratios, Fraction(0)) / len(ratios)),
        }
    print(json.dumps({"summary_ratio_by_zeta": summary}, sort_keys=True))
    return EXIT_OK


# -- entry point ------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(
        prog="snarklab",
        description="Exact analysis and construction toolkit for cubic graphs.",
    )
    p.add_argument("--config", help="key=value config file (default ./snarklab.cfg)")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="compute invariant records for input graphs")
    a.add_argument("inputs", nargs="+", help="graph6 or multi_text files")
    a.add_argument("--max-zeta", type=int, default=None)
    a.add_argument("--skip", action="append", choices=["omega", "rho", "zeta"])
    a.add_argument("--format", choices=["json", "text"], default=None)
    a.add_argument("--cache", default=None)
    a.add_argument("--timings", action="store_true", help="include per-field timings")

    c = sub.add_parser("construct", help="build a named family member")
    c.add_argument("family")
    c.add_argument("params", nargs="*")
    c.add_argument("--out", default=None)
    c.add_argument(
        "--graph-format", choices=["graph6", "multi_text"], default=None
    )

    r = sub.add_parser("reduce", help="apply oddness-preserving reductions")
    r.add_argument("input")
    r.add_argument(
        "--rule",
        choices=["girth4", "girth5", "cut2", "cut3", "all"],
        default="all",
    )
    r.add_argument("--out", default=None)
    r.add_argument(
        "--graph-format", choices=["graph6", "multi_text"], default=None
    )

    v = sub.add_parser("verify", help="run a built-in verification suite")
    v.add_argument("suite", choices=["claims", "properties", "oracles"])
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--size-cap", type=int, default=None)
    v.add_argument("--skip-slow", action="store_true")

    b = sub.add_parser("batch", help="analyze a directory of graph files")
    b.add_argument("dir")
    b.add_argument("--jobs", type=int, default=None)
    b.add_argument("--cache", default=None)
    b.add_argument("--resume", action="store_true")
    b.add_argument("--max-zeta", type=int, default=None)
    b.add_argument("--format", choices=["json", "text"], default=None)
    return p


COMMANDS = {
    "analyze": cmd_analyze,
    "construct": cmd_construct,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
    "batch": cmd_batch,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        config = load_config_file(args.config or "snarklab.cfg")
        return COMMANDS[args.command](args, config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
