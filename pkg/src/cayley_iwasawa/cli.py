"""Command line entry point: ``cayley-iwasawa <command> --input job.json``.

Exit status is 0 on success, 1 when the mathematics rejects the input (or a
check fails), and 2 when the job file cannot be read or parsed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from .errors import IwasawaError
from .report import ConfigError, full_report, parse_config, to_dot, validation


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cayley-iwasawa", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("validate", "check the base graph and the voltage function"),
        ("invariants", "Iwasawa polynomial, per-character table and identity checks"),
        ("tower", "l-part of the complexity along the tower and the fitted nu"),
        ("export", "derived cover at one level as DOT or JSON"),
        ("report", "everything above in one document"),
    ]:
        s = sub.add_parser(name, help=help_)
        s.add_argument("--input", required=True, help="job file (JSON)")
        s.add_argument("--out", help="write here instead of stdout")
        s.add_argument("--precision", type=int, help="l-adic working precision in digits")
        s.add_argument("--depth", type=int, help="highest tower level")
        if name == "export":
            s.add_argument("--level", type=int, default=1)
            s.add_argument("--format", choices=("dot", "json"), default="dot")
    return p


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def run(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        cfg = parse_config(Path(args.input).read_text())
    except (OSError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.precision is not None:
        cfg = replace(cfg, precision=args.precision)
    if args.depth is not None:
        cfg = replace(cfg, tower_depth=args.depth)

    try:
        if args.command == "validate":
            rep, ok = validation(cfg)
            _emit(_dump(rep), args.out)
            return 0 if ok else 1
        if args.command == "export":
            if args.format == "dot":
                _emit(to_dot(cfg, args.level), args.out)
            else:
                from .voltage import derived_graph
                from .multigraph import build_cayley

                d = cfg.datum()
                Xn = derived_graph(build_cayley(d.group, d.gens), d, args.level)
                _emit(_dump({"vertices": [f"v{v}_s{s}" for v, s in Xn.labels],
                             "edges": [list(Xn.edges[e]) for e in Xn.undirected_representatives]}), args.out)
            return 0
        if args.command == "tower":
            rep = full_report(replace(cfg, checks=()), with_tower=True)
            _emit(_dump({"iwasawa": {k: rep["iwasawa"][k] for k in ("mu", "lambda", "nu", "n0")}, "tower": rep["tower"]}), args.out)
            return 0
        rep = full_report(cfg, with_tower=args.command == "report")
        if args.command == "invariants":
            rep.pop("tower")
        _emit(_dump(rep), args.out)
        return 0 if all(rep["checks"].values()) else 1
    except (IwasawaError, ValueError) as exc:
        _emit(_dump({"error": type(exc).__name__, "message": str(exc)}), args.out)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
