#!/usr/bin/env python3
"""Reproduce the invariants of every embedded catalog entry and print them.

Usage: python3 scripts/catalog_report.py
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import faceenum as fe


def complex_row(name, K):
    hv = fe.h_vector(K)
    b = fe.betti(K)
    rep = fe.manifold_report(K)
    print(f"{name}:")
    print(f"  f = {K.f_vector[1:]}")
    print(f"  h = {hv.entries}   g = {fe.g_from_h(hv).entries}")
    print(f"  chi = {fe.euler_characteristic(K)}   reduced Betti = {b.positive_range()}")
    print(f"  closed = {rep.closed}   2-neighborly = {K.is_i_neighborly(2)}")
    print(f"  Dehn-Sommerville defect = {fe.ds_defect(K)}")


def main():
    complex_row("cp2_9", fe.catalog("cp2_9").payload)
    complex_row("s2xs2_sum", fe.catalog("s2xs2_sum").payload)

    K, col = fe.catalog("bipyramid").payload
    complex_row("bipyramid", K)
    fh = fe.fine_h(fe.fine_f(K, col))
    print(f"  fine h (type (1,2)) = {dict(sorted(fh.entries.items()))}")

    P = fe.catalog("torus_poset").payload
    t = fe.toric_h(P)
    print("torus_poset:")
    print(f"  classification = {fe.classify_poset(P)}")
    print(f"  toric h = {t}   (th_0..th_3) = {t.indexed}")
    print(f"  symmetry defect = {fe.toric_ds_defect(P)}")

    Kb, _ = fe.catalog("bipyramid").payload
    Pb = fe.face_poset(Kb, augment=True)
    _, fhb = fe.flag_vectors(Pb)
    cd = fe.cd_index(fe.ab_from_flag_h(fhb))
    print(f"bipyramid face poset cd-index = {cd.nonzero()}")

    tree = fe.catalog("cp2_tree").payload
    print(f"cp2_tree: length {tree.length}, spanning = {tree.is_spanning()}")
    tree = fe.catalog("s2xs2_tree").payload
    print(f"s2xs2_tree: length {tree.length}, spanning = {tree.is_spanning()}")


if __name__ == "__main__":
    main()
