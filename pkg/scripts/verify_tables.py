"""Run the verification battery over the transcribed D and E tables.

    python3 scripts/verify_tables.py --max-m 6
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from _common import parse_config, write_result
from toricsing.paperdata import verify_all


@dataclass(frozen=True)
class VerifyConfig:
    min_m: int = 2
    max_m: int = 6
    include_e: bool = True
    betti: bool = True
    max_steps: int = 10**7


def main() -> None:
    cfg = parse_config(VerifyConfig, __doc__)
    t0 = time.time()
    cases = []
    for m in range(cfg.min_m, cfg.max_m + 1):
        cases += [("Deven", 2 * m), ("Dodd", 2 * m + 1)]
    if cfg.include_e:
        cases += [("E6", 6), ("E7", 7)]
    reports = []
    for kind, n in cases:
        rep = verify_all(kind, n, cfg.max_steps, betti=cfg.betti)
        failed = [c.name for c in rep.claims if c.status == "fail"]
        print(f"{kind:5} n={n:2}  {'all pass' if rep.all_pass else 'fails: ' + ', '.join(failed):40} {rep.seconds:7.1f}s",
              flush=True)
        reports.append(rep.to_dict())
    print("wrote", write_result("verify_tables", cfg, reports, t0))


if __name__ == "__main__":
    main()
