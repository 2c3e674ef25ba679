#!/usr/bin/env python3
"""Survey the cyclic S^1 x S^3 triangulations: generate the family, check the
minimality battery, and fill one of them to a 2-neighborly triangulation while
watching the h-vector walk up.

Usage: python3 scripts/sphere_bundle_survey.py [n_max]
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import faceenum as fe
from faceenum.audit import Assertions


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 16
    print("n   f1    g2   closed  walkup  betti(1..4)")
    for n in range(11, n_max + 1):
        K = fe.kuhnel_lassmann(n, 2)
        hv = fe.h_vector(K)
        rep = fe.manifold_report(K)
        b = fe.betti(K)
        print(
            f"{n:<3} {len(K.all_faces(1)):<5} {hv[2] - hv[1]:<4} "
            f"{str(rep.closed):<7} {str(fe.in_walkup_class(K)):<7} {b.positive_range()[1:]}"
        )

    n = 12
    print(f"\nfilling n = {n} to the complete 1-skeleton:")
    K = fe.kuhnel_lassmann(n, 2)
    base = fe.betti(K).reduced_betti
    target = n * (n - 1) // 2
    K2, log = fe.s1xs3_fill(n, target, check_betti=True)
    print(f"  {len(log.steps)} one-moves, final h = {fe.h_vector(K2).entries}")
    print(f"  Betti preserved: {fe.betti(K2).reduced_betti == base}")

    print("\naudit of the minimal member (beta_1 > 0 asserted):")
    rep = fe.audit(fe.kuhnel_lassmann(11, 2), assertions=Assertions(beta1_positive=True), name="kl11")
    for c in rep.checks:
        print(f"  {c.name:24} {c.status}")


if __name__ == "__main__":
    main()
