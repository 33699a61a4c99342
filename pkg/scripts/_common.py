"""Shared plumbing for the research scripts: dataclass configs <-> argparse, JSON output."""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import time
from pathlib import Path
from typing import Any, Type, TypeVar

from toricsing.serialize import dumps

T = TypeVar("T")
RESULTS = Path(__file__).resolve().parent.parent / "results"


def parse_config(cls: Type[T], description: str) -> T:
    """Build ``cls`` from command-line flags named after its fields."""
    parser = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cls):
        default = f.default if f.default is not dataclasses.MISSING else f.default_factory()
        flag = "--" + f.name.replace("_", "-")
        if isinstance(default, bool):
            parser.add_argument(flag, action=argparse.BooleanOptionalAction, default=default)
        elif isinstance(default, (list, tuple)):
            kind = type(default[0]) if default else str
            parser.add_argument(flag, nargs="*", type=kind, default=list(default))
        else:
            parser.add_argument(flag, type=type(default) if default is not None else str, default=default)
    parser.add_argument("--config", help="JSON file with field values (flags override it)")
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    values: dict[str, Any] = {}
    if args.config:
        values.update(json.loads(Path(args.config).read_text()))
    for f in dataclasses.fields(cls):
        given = getattr(args, f.name)
        default = f.default if f.default is not dataclasses.MISSING else f.default_factory()
        if given != (list(default) if isinstance(default, tuple) else default) or f.name not in values:
            values[f.name] = tuple(given) if isinstance(default, tuple) else given
    return cls(**values)


def write_result(name: str, cfg: Any, payload: Any, started: float) -> Path:
    RESULTS.mkdir(exist_ok=True)
    out = RESULTS / f"{name}.json"
    record = {"config": dataclasses.asdict(cfg), "seconds": round(time.time() - started, 2), "result": payload}
    out.write_text(dumps(record) + "\n", encoding="utf-8")
    return out
