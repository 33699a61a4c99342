"""JSON and text formats for configurations, bases, orders and reports.

Monomials are exponent arrays, binomials ``{"lead": [...], "trail": [...]}``
and configurations arrays of integer arrays.  Integers beyond 2^53 are written
as decimal strings so that JSON consumers with double-precision numbers keep
them exact; the readers accept both spellings.
"""

from __future__ import annotations

import json
from typing import Any, Optional, Sequence

from .algebra import Binomial, MarkedBasis, TermOrder
from .dynkin import Configuration
from .errors import InvalidInput

SAFE_INT = 2**53


def _int_out(v: int):
    return str(v) if abs(v) > SAFE_INT else v


def _int_in(v) -> int:
    if isinstance(v, bool):
        raise InvalidInput(f"expected an integer, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v)
        except ValueError:
            raise InvalidInput(f"expected an integer, got {v!r}") from None
    raise InvalidInput(f"expected an integer, got {v!r}")


def safe_ints(obj: Any) -> Any:
    """Recursively replace oversized integers by decimal strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return _int_out(obj)
    if isinstance(obj, dict):
        return {k: safe_ints(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [safe_ints(v) for v in obj]
    return obj


def _vec(v) -> tuple[int, ...]:
    return tuple(_int_in(x) for x in v)


# --------------------------------------------------------------------------
# term orders


def parse_order(spec: str, n: int) -> TermOrder:
    """``lex``, ``grlex``, ``degrevlex`` optionally followed by ``:i1,i2,...``
    (1-based variables, largest first), or ``weight:w1,...;w'1,...|i1,...``."""
    spec = spec.strip()
    kind, _, rest = spec.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "weight":
            rows_part, _, perm_part = rest.partition("|")
            rows = [tuple(int(x) for x in r.split(",")) for r in rows_part.split(";") if r.strip()]
            if not rows:
                raise InvalidInput("weight order needs at least one row")
            perm = _perm(perm_part, n)
            if any(len(r) != n for r in rows):
                raise InvalidInput(f"weight rows must have {n} entries")
            return TermOrder.weight(rows[0], perm, *rows[1:])
        if kind in ("lex", "grlex", "degrevlex"):
            perm = _perm(rest, n)
            return getattr(TermOrder, kind)(n, perm)
    except ValueError as e:
        raise InvalidInput(f"bad order {spec!r}: {e}") from None
    raise InvalidInput(f"unknown order kind {kind!r}")


def _perm(text: str, n: int) -> Optional[tuple[int, ...]]:
    text = text.strip()
    if not text:
        return None
    perm = tuple(int(x) - 1 for x in text.split(","))
    if sorted(perm) != list(range(n)):
        raise InvalidInput(f"variable order must list each of 1..{n} exactly once")
    return perm


def order_to_dict(o: Optional[TermOrder]) -> Optional[dict]:
    if o is None:
        return None
    return {"kind": o.kind, "perm": list(o.perm), "weights": [list(r) for r in o.weights]}


def order_from_dict(d: Optional[dict]) -> Optional[TermOrder]:
    if d is None:
        return None
    return TermOrder(d["kind"], tuple(d["perm"]), tuple(_vec(r) for r in d.get("weights", ())))


# --------------------------------------------------------------------------
# configurations


def config_to_dict(c: Configuration) -> dict:
    return {"points": [list(p) for p in c.points], "names": list(c.names)}


def config_from_dict(d) -> Configuration:
    if isinstance(d, list):  # bare array of points
        return Configuration(tuple(_vec(p) for p in d), ())
    return Configuration(tuple(_vec(p) for p in d["points"]), tuple(d.get("names") or ()))


def parse_config_text(text: str, names: Sequence[str] = ()) -> Configuration:
    """One lattice point per line, space-separated integers; ``#`` starts a comment."""
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            pts.append(tuple(int(x) for x in line.split()))
        except ValueError:
            raise InvalidInput(f"line {lineno}: expected integers, got {raw.strip()!r}") from None
    if not pts:
        raise InvalidInput("configuration has no points")
    try:
        return Configuration(tuple(pts), tuple(names))
    except ValueError as e:
        raise InvalidInput(str(e)) from None


def format_config_text(c: Configuration) -> str:
    lines = [f"# {c.N} points in dimension {c.n}"]
    width = max(len(name) for name in c.names) if c.names else 0
    for name, p in zip(c.names, c.points):
        lines.append(" ".join(str(v) for v in p) + f"  # {name:<{width}}")
    return "\n".join(lines) + "\n"


def load_config(path: str) -> Configuration:
    with open(path, encoding="utf-8") as f:
        text = f.read()
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        return config_from_dict(json.loads(text))
    return parse_config_text(text)


# --------------------------------------------------------------------------
# binomials and bases


def binomial_to_dict(b: Binomial) -> dict:
    return {"lead": list(b.lead), "trail": list(b.trail)}


def binomial_from_dict(d: dict) -> Binomial:
    return Binomial(_vec(d["lead"]), _vec(d["trail"]), True)


def basis_to_dict(B: MarkedBasis) -> dict:
    return {
        "names": list(B.names) if B.names is not None else None,
        "reduced": B.reduced,
        "order": order_to_dict(B.order),
        "elements": [binomial_to_dict(b) for b in B],
    }


def basis_from_dict(d: dict) -> MarkedBasis:
    return MarkedBasis(tuple(binomial_from_dict(e) for e in d["elements"]),
                       tuple(d["names"]) if d.get("names") is not None else None,
                       bool(d.get("reduced", False)), order_from_dict(d.get("order")))


def dumps(obj: Any, indent: Optional[int] = 2) -> str:
    return json.dumps(safe_ints(obj), indent=indent, ensure_ascii=False)
