"""Groebner fans (complete traversal) and weight sampling for small ADE configurations.

    python3 scripts/fan_survey.py --cases A:2 A:3 D:4 E:7 --samples 500
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from _common import parse_config, write_result
from toricsing.algebra import minimal_monomials
from toricsing.dynkin import ade_configuration, closed_form_configuration
from toricsing.fan import groebner_fan, is_connected, sample_initial_ideals, squarefree_initials
from toricsing.toric import toric_ideal


@dataclass(frozen=True)
class FanConfig:
    cases: tuple = ("A:2", "A:3", "D:4", "E:7")
    samples: int = 500
    seeds: tuple = (0, 1, 2)
    jobs: int = 1
    cone_cap: int = 5000


def main() -> None:
    cfg = parse_config(FanConfig, __doc__)
    t0 = time.time()
    rows = []
    for case in cfg.cases:
        kind, n = case.split(":")
        c = ade_configuration(kind, int(n)) if kind == "A" else closed_form_configuration(kind, int(n))
        I = toric_ideal(c)
        r = groebner_fan(I, cfg.cone_cap, jobs=cfg.jobs)
        full = set(map(frozenset, r.initial_ideals))
        sampled = []
        for seed in cfg.seeds:
            s = sample_initial_ideals(I, cfg.samples, seed)
            assert set(map(frozenset, s.initial_ideals)) <= full
            sampled.append(len(s))
        sq = squarefree_initials(r)
        gens = [len(minimal_monomials(r.initial_ideals[i])) for i in sq]
        print(f"{case:5} cones {len(r):5}  squarefree {len(sq)} (generators {gens})  "
              f"connected {is_connected(r)}  sampled {sampled}", flush=True)
        rows.append({"case": case, "cones": len(r), "squarefree": sq, "squarefree_generators": gens,
                     "sampled": sampled, "fan": r.to_dict(c.names)})
    print("wrote", write_result("fan_survey", cfg, rows, t0))


if __name__ == "__main__":
    main()
