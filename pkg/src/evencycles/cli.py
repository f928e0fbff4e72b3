"""Command-line front end: solve, verify, gadget, oracle.

Exit codes: 0 success/pass, 1 fail/violation, 2 usage or budget error.
Machine output is deterministic JSON (stdout or --output); the human
summary goes to stderr.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import List, Optional

from .budget import BudgetError, OracleBudget
from .certificates import certificate_from_json, dumps
from .cycles import EVEN_A, PreconditionError
from .engine import solve_general_report, solve_single_z_report
from .gadgets import GadgetSpec, long_gadget, mod_gadget
from .graph import GraphError, parse_graph, serialize_graph
from .oracles import (max_edge_disjoint_packing, min_edge_hitting_set, min_vertex_hitting_set,
                      verify_certificate)
from .pipeline import SingleZViolation

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclasses.dataclass
class RunConfig:
    command: str
    input: Optional[Path] = None
    output: Optional[Path] = None
    k: Optional[int] = None
    mode: str = "single-z"
    trusted: bool = False
    cert: Optional[Path] = None
    gadget: str = "long"
    wall: int = 4
    ell: int = 5
    m: Optional[int] = None
    h: int = 1
    oracle: str = "packing"
    budget: OracleBudget = dataclasses.field(default_factory=OracleBudget)
    seed: int = 0

    def validate(self):
        if self.command not in ("solve", "verify", "gadget", "oracle"):
            raise UsageError(f"unknown command {self.command!r}")
        if self.command in ("solve", "verify") and self.k is not None and self.k < 1:
            raise UsageError("k must be at least 1")
        if self.command == "solve" and self.k is None:
            raise UsageError("solve needs --k")
        if self.command != "gadget" and self.input is None:
            raise UsageError(f"{self.command} needs --input")


def _read_graph(path: Path):
    return parse_graph(Path(path).read_text())


def _emit(text: str, path: Optional[Path]):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def _solve(cfg: RunConfig) -> int:
    G = _read_graph(cfg.input)
    if cfg.mode == "single-z":
        if G.z is None:
            raise UsageError("single-z mode needs a 'z <v>' line in the input")
        try:
            rep = solve_single_z_report(G, cfg.k, trusted=cfg.trusted, budget=cfg.budget)
        except SingleZViolation as exc:
            out = {"kind": "violation", "message": str(exc),
                   "cycle": exc.cycle.to_json() if exc.cycle is not None else None}
            _emit(_json(out), cfg.output)
            print(f"single-z violation: {exc}", file=sys.stderr)
            return EXIT_FAIL
    elif cfg.mode == "general":
        rep = solve_general_report(G, cfg.k, budget=cfg.budget)
    else:
        raise UsageError(f"unknown mode {cfg.mode!r}")
    _emit(dumps(rep.certificate), cfg.output)
    print(rep.summary(), file=sys.stderr)
    return EXIT_OK


def _verify(cfg: RunConfig) -> int:
    if cfg.cert is None:
        raise UsageError("verify needs --cert")
    G = _read_graph(cfg.input)
    try:
        cert = certificate_from_json(json.loads(Path(cfg.cert).read_text()))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"unreadable certificate: {exc}")
    k = cfg.k if cfg.k is not None else cert.k
    rep = verify_certificate(G, k, cert, budget=cfg.budget)
    _emit(_json(rep.to_json()), cfg.output)
    for name, ok, detail in rep.checks:
        print(f"{'ok  ' if ok else 'FAIL'} {name} {detail}".rstrip(), file=sys.stderr)
    if rep.counterexample is not None:
        print(f"counterexample: {rep.counterexample.to_json()}", file=sys.stderr)
    if rep.status == "inconclusive":
        return EXIT_USAGE
    return EXIT_OK if rep.passed else EXIT_FAIL


def _gadget(cfg: RunConfig) -> int:
    if cfg.output is None:
        raise UsageError("gadget needs --out")
    if cfg.gadget == "long":
        G, info = long_gadget(GadgetSpec(h=cfg.h, wall_size=cfg.wall, ell=cfg.ell))
    elif cfg.gadget == "mod":
        if cfg.m is None:
            raise UsageError("mod gadget needs --m")
        G, info = mod_gadget(GadgetSpec(h=cfg.h, wall_size=cfg.wall, ell=cfg.ell, m=cfg.m))
    else:
        raise UsageError(f"unknown gadget {cfg.gadget!r}")
    out = Path(cfg.output)
    out.write_text(serialize_graph(G))
    sidecar = out.with_name(out.name + ".json")
    sidecar.write_text(_json(info.to_json()))
    print(f"{cfg.gadget} gadget: {G.n} vertices, {G.m} edges -> {out}, {sidecar}", file=sys.stderr)
    return EXIT_OK


def _oracle(cfg: RunConfig) -> int:
    G = _read_graph(cfg.input)
    if cfg.oracle == "packing":
        cnt, cycles = max_edge_disjoint_packing(G, EVEN_A, k_target=cfg.k, budget=cfg.budget)
        out = {"kind": "packing", "value": cnt, "k_target": cfg.k,
               "cycles": [c.to_json() for c in cycles]}
    elif cfg.oracle == "edge-hitting":
        F = min_edge_hitting_set(G, EVEN_A, budget=cfg.budget)
        out = {"kind": "edge-hitting", "value": len(F), "edges": [list(e) for e in F]}
    elif cfg.oracle == "vertex-hitting":
        X = min_vertex_hitting_set(G, EVEN_A, budget=cfg.budget)
        out = {"kind": "vertex-hitting", "value": len(X), "vertices": list(X)}
    else:
        raise UsageError(f"unknown oracle {cfg.oracle!r}")
    _emit(_json(out), cfg.output)
    print(f"{cfg.oracle}: {out['value']}", file=sys.stderr)
    return EXIT_OK


def run(cfg: RunConfig) -> int:
    try:
        cfg.validate()
        return {"solve": _solve, "verify": _verify, "gadget": _gadget, "oracle": _oracle}[cfg.command](cfg)
    except (UsageError, BudgetError, GraphError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="evencycles",
                                description="Packing or covering even A-cycles by edges.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="k disjoint even A-cycles or a small edge hitting set")
    s.add_argument("--input", type=Path, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--mode", choices=["single-z", "general"], default="single-z")
    s.add_argument("--output", type=Path)
    s.add_argument("--trusted", action="store_true", help="skip the check that z meets every target")

    v = sub.add_parser("verify", help="check a certificate against the oracles")
    v.add_argument("--input", type=Path, required=True)
    v.add_argument("--cert", type=Path, required=True)
    v.add_argument("--k", type=int)
    v.add_argument("--output", type=Path)

    g = sub.add_parser("gadget", help="write a counterexample gadget and its id-map sidecar")
    g.add_argument("kind", choices=["long", "mod"])
    g.add_argument("--wall", type=int, default=4)
    g.add_argument("--ell", type=int, default=5)
    g.add_argument("--m", type=int)
    g.add_argument("--h", type=int, default=1)
    g.add_argument("--out", dest="output", type=Path, required=True)

    o = sub.add_parser("oracle", help="exact packing number or minimum hitting sets")
    o.add_argument("kind", choices=["packing", "edge-hitting", "vertex-hitting"])
    o.add_argument("--input", type=Path, required=True)
    o.add_argument("--k", type=int, help="stop the packing search at k cycles")
    o.add_argument("--output", type=Path)

    for sp in (s, v, g, o):
        sp.add_argument("--seed", type=int, default=0)
    return p


def config_from_args(argv: Optional[List[str]] = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    d = vars(ns)
    cmd = d.pop("command")
    kind = d.pop("kind", None)
    if cmd == "gadget":
        d["gadget"] = kind
    elif cmd == "oracle":
        d["oracle"] = kind
    return RunConfig(command=cmd, **d)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        cfg = config_from_args(argv)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg.budget = OracleBudget.from_env()
    except (ValueError, TypeError) as exc:
        print(f"error: bad EVENCYC_BUDGET: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
