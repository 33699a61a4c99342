"""Command-line interface.

Exit codes: 0 success / all checks pass, 1 a verification check failed,
2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, fields, replace
from typing import Optional, Sequence

from .algebra import DEFAULT_MAX_STEPS, TermOrder, initial_ideal, is_squarefree, minimal_monomials
from .betti import DEFAULT_FIBER_LIMIT, betti_graphs, betti_report, fiber_graphs_dot
from .dynkin import Configuration, ade_configuration, closed_form_configuration, default_bound
from .errors import BoundInsufficient, BudgetExceeded, InvalidInput, ToricError
from .fan import DEFAULT_CONE_CAP, DEFAULT_WEIGHT_BOX, groebner_fan, sample_initial_ideals, squarefree_initials
from .paperdata import kind_for, verify_all
from .serialize import basis_to_dict, config_to_dict, dumps, format_config_text, load_config, parse_order
from .toric import toric_ideal

log = logging.getLogger("toricsing")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
FORMATS = ("json", "text", "dot")


@dataclass(frozen=True)
class RunConfig:
    """Budgets and output settings shared by every command."""

    max_steps: int = DEFAULT_MAX_STEPS
    fiber_limit: int = DEFAULT_FIBER_LIMIT
    cone_cap: int = DEFAULT_CONE_CAP
    bound: Optional[int] = None  # Hilbert-basis box; None = per-size default
    seed: int = 0
    samples: int = 200
    weight_low: int = DEFAULT_WEIGHT_BOX[0]
    weight_high: int = DEFAULT_WEIGHT_BOX[1]
    jobs: int = 1
    format: str = "json"
    output: Optional[str] = None

    def __post_init__(self) -> None:
        for name in ("max_steps", "fiber_limit", "cone_cap", "samples", "jobs", "weight_low"):
            if getattr(self, name) < 1:
                raise InvalidInput(f"{name} must be positive")
        if self.bound is not None and self.bound < 1:
            raise InvalidInput("bound must be positive")
        if self.weight_high < self.weight_low:
            raise InvalidInput("empty weight box")
        if self.format not in FORMATS:
            raise InvalidInput(f"format must be one of {FORMATS}")

    @classmethod
    def from_file(cls, path: str) -> "RunConfig":
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise InvalidInput(f"unknown run-config keys: {sorted(unknown)}")
        return cls(**data)


def _env_steps(default: int) -> int:
    env = os.environ.get("TORICSING_BUDGET_STEPS")
    if not env:
        return default
    try:
        value = int(env)
    except ValueError:
        raise InvalidInput(f"TORICSING_BUDGET_STEPS must be an integer, got {env!r}") from None
    if value < 1:
        raise InvalidInput("TORICSING_BUDGET_STEPS must be positive")
    return value


def run_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig.from_file(args.run_config) if args.run_config else RunConfig()
    cfg = replace(cfg, max_steps=_env_steps(cfg.max_steps))
    overrides = {k: getattr(args, k) for k in ("max_steps", "fiber_limit", "cone_cap", "bound", "seed",
                                                 "samples", "jobs", "format", "output")
                 if getattr(args, k, None) is not None}
    return replace(cfg, **overrides)


# --------------------------------------------------------------------------
# helpers


def _configuration(args, cfg: RunConfig) -> Configuration:
    if getattr(args, "points", None):
        return load_config(args.points)
    if not args.kind or args.n is None:
        raise InvalidInput("give --kind and --n, or --points FILE")
    kind = args.kind.upper()
    if kind == "A" or getattr(args, "lipman", False):
        bound = cfg.bound if cfg.bound is not None else default_bound(args.n)
        return ade_configuration(kind, args.n, bound)
    return closed_form_configuration(kind, args.n)


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _order(args, c: Configuration) -> Optional[TermOrder]:
    return parse_order(args.order, c.N) if getattr(args, "order", None) else None


# --------------------------------------------------------------------------
# commands


def cmd_config(args, cfg: RunConfig) -> int:
    c = _configuration(args, cfg)
    if cfg.format == "text":
        _emit(format_config_text(c), cfg)
    else:
        _emit(dumps(config_to_dict(c)), cfg)
    return EXIT_OK


def cmd_gb(args, cfg: RunConfig) -> int:
    c = _configuration(args, cfg)
    order = _order(args, c)
    I = toric_ideal(c, order, cfg.max_steps)
    leads = minimal_monomials(initial_ideal(I.reduced_gb))
    if cfg.format == "text":
        lines = [f"# toric ideal of {c.N} points, order {I.order.describe()}"]
        if I.is_zero:
            lines.append("the toric ideal is zero (empty Groebner basis)")
        lines += I.reduced_gb.format()
        lines.append(f"# {len(I.reduced_gb)} elements; initial ideal squarefree: {str(is_squarefree(leads)).lower()}")
        _emit("\n".join(lines) + "\n", cfg)
    else:
        out = {
            "configuration": config_to_dict(c),
            "order": I.order.describe(),
            "zero_ideal": I.is_zero,
            "groebner_basis": basis_to_dict(I.reduced_gb),
            "text": I.reduced_gb.format(),
            "initial_ideal": [list(m) for m in leads],
            "squarefree": is_squarefree(leads),
        }
        if I.is_zero:
            print("note: the toric ideal is zero", file=sys.stderr)
        _emit(dumps(out), cfg)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    kind = kind_for(args.kind, args.n)
    rep = verify_all(kind, args.n, cfg.max_steps, betti=not args.no_betti, fiber_limit=cfg.fiber_limit)
    if cfg.format == "text":
        lines = [f"{kind} n={args.n}: {'all pass' if rep.all_pass else 'FAILURES'} ({rep.seconds}s)"]
        for cl in rep.claims:
            extra = f" = {cl.value}" if cl.value is not None else ""
            lines.append(f"  [{cl.status:7}] {cl.name}{extra}" + (f"  ({cl.detail})" if cl.detail else ""))
        _emit("\n".join(lines) + "\n", cfg)
    else:
        _emit(dumps(rep.to_dict()), cfg)
    return EXIT_OK if rep.all_pass else EXIT_FAIL


def cmd_betti(args, cfg: RunConfig) -> int:
    c = _configuration(args, cfg)
    I = toric_ideal(c, _order(args, c), cfg.max_steps)
    if cfg.format == "dot":
        graphs = betti_graphs(I, args.mode, cfg.fiber_limit, cfg.max_steps, jobs=cfg.jobs)
        _emit(fiber_graphs_dot(graphs, c.names), cfg)
        return EXIT_OK
    rep = betti_report(I, args.mode, cfg.fiber_limit, cfg.seed, jobs=cfg.jobs)
    if cfg.format == "text":
        lines = [f"betti degrees: {len(rep.betti_degrees)}",
                 f"indispensable binomials: {len(rep.indispensables)}",
                 f"minimal generating sets: {rep.min_gen_set_count}",
                 f"sample minimal generating set ({len(rep.sample_min_gen_set)}):"]
        lines += ["  " + b.format(c.names) for b in rep.sample_min_gen_set]
        _emit("\n".join(lines) + "\n", cfg)
    else:
        _emit(dumps(rep.to_dict(c.names)), cfg)
    return EXIT_OK


def cmd_fan(args, cfg: RunConfig) -> int:
    c = _configuration(args, cfg)
    I = toric_ideal(c, None, cfg.max_steps)
    if args.mode == "flip":
        r = groebner_fan(I, cfg.cone_cap, cfg.max_steps, jobs=cfg.jobs)
    else:
        r = sample_initial_ideals(I, cfg.samples, cfg.seed, (cfg.weight_low, cfg.weight_high), cfg.max_steps)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(r.dot(c.names))
    if cfg.format == "dot":
        _emit(r.dot(c.names), cfg)
    elif cfg.format == "text":
        sq = squarefree_initials(r)
        lines = [f"initial ideals: {len(r)} ({'complete' if r.complete else 'sampled'})",
                 f"squarefree: {len(sq)} {sq}"]
        for i in sq:
            lines.append(f"  cone {i}: {len(r.initial_ideals[i])} minimal generators")
        _emit("\n".join(lines) + "\n", cfg)
    else:
        _emit(dumps(r.to_dict(c.names)), cfg)
    return EXIT_OK


COMMANDS = {"config": cmd_config, "gb": cmd_gb, "verify": cmd_verify, "betti": cmd_betti, "fan": cmd_fan}


# --------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors -> exit 2 with message on stderr
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--run-config", help="JSON file with RunConfig fields")
    common.add_argument("--max-steps", type=int, help="reduction-step budget")
    common.add_argument("--fiber-limit", type=int, help="fiber search-node budget")
    common.add_argument("--cone-cap", type=int, help="maximum number of Groebner cones")
    common.add_argument("--bound", type=int, help="Hilbert-basis search box")
    common.add_argument("--seed", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--jobs", type=int, help="worker processes for fan/Betti analysis")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    def source(p, allow_points=True):
        p.add_argument("--kind", help="A, D or E")
        p.add_argument("--n", type=int)
        if allow_points:
            p.add_argument("--points", help="configuration file (text or JSON)")
            p.add_argument("--lipman", action="store_true", help="use the Hilbert basis instead of the closed form")

    parser = _Parser(prog="toricsing", description="Toric ideals of ADE configurations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("config", parents=[common], help="print a configuration")
    source(p)
    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis of the toric ideal")
    source(p)
    p.add_argument("--order", help="lex|grlex|degrevlex[:i1,...] or weight:w1,...[;...]|i1,...")
    p = sub.add_parser("verify", parents=[common], help="check a transcribed table")
    source(p, allow_points=False)
    p.add_argument("--no-betti", action="store_true")
    p = sub.add_parser("betti", parents=[common], help="Betti degrees and minimal generating sets")
    source(p)
    p.add_argument("--order")
    p.add_argument("--mode", choices=("gcd", "ideal"), default="gcd")
    p = sub.add_parser("fan", parents=[common], help="initial ideals of the toric ideal")
    source(p)
    p.add_argument("--mode", choices=("flip", "sample"), default="flip")
    p.add_argument("--dot", help="also write the cone adjacency graph here")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.command == "verify" and (not args.kind or args.n is None):
            raise InvalidInput("verify needs --kind and --n")
        cfg = run_config(args)
        return COMMANDS[args.command](args, cfg)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except BoundInsufficient as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidInput, ValueError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ToricError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
