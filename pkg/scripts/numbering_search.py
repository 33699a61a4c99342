"""Search point-numbering conventions for the stated A_4 / A_5 lex orders.

The lex orders name variables by an unstated numbering of the Hilbert-basis
points.  Every convention (coordinate sorts, and sorts of the cycle
coefficients) is combined with every placement of unlisted variables; an
attempt reproduces the claim when the size matches and all leads are squarefree.

    python3 scripts/numbering_search.py --ranks 4 5
"""

from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass

from _common import parse_config, write_result
from toricsing.dynkin import ade_configuration, ade_graph, incidence_matrix
from toricsing.fan import all_conventions, numbering_search
from toricsing.paperdata import A_LEX_CLAIMS


@dataclass(frozen=True)
class SearchConfig:
    ranks: tuple = (4, 5)
    cycles: bool = True
    max_steps: int = 10**7


def search(n: int, cfg: SearchConfig) -> dict:
    claim = A_LEX_CLAIMS[n]
    c = ade_configuration("A", n)
    M = incidence_matrix(ade_graph("A", n))
    attempts = numbering_search(c, claim.ranking, claim.target, claim.count, cfg.max_steps,
                                all_conventions(cfg.cycles), M)
    per_conv = defaultdict(list)
    for a in attempts:
        per_conv[a.convention].append(a)
    summary = {}
    for conv, items in per_conv.items():
        sizes = [a.gb_size for a in items if a.gb_size is not None]
        summary[conv] = {"attempts": len(items), "closest": min(sizes, key=lambda s: abs(s - claim.target)) if sizes else None,
                         "any_squarefree": any(a.leads_squarefree for a in items),
                         "budget_skips": sum(a.gb_size is None for a in items)}
    hits = [{"convention": a.convention, "perm": list(a.perm), "size": a.gb_size} for a in attempts if a.reproduces]
    return {"n": n, "target": claim.target, "count": claim.count, "attempts": len(attempts),
            "reproduced": bool(hits), "hits": hits, "per_convention": summary}


def main() -> None:
    cfg = parse_config(SearchConfig, __doc__)
    t0 = time.time()
    out = []
    for n in cfg.ranks:
        res = search(int(n), cfg)
        verdict = "REPRODUCED" if res["reproduced"] else "inconclusive"
        print(f"A_{n}: {res['attempts']} attempts, target {res['target']} ({res['count']}): {verdict}", flush=True)
        for conv, s in res["per_convention"].items():
            print(f"    {conv:24} closest {s['closest']}  squarefree seen {s['any_squarefree']}", flush=True)
        out.append(res)
    print("wrote", write_result("numbering_search", cfg, out, t0))


if __name__ == "__main__":
    main()
