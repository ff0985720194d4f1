#!/usr/bin/env python3
"""Sweep both construction families and print the verdict tables.

Thin wrapper over the library; for machine-readable output use the
`spinact enumerate` subcommand instead.
"""

import argparse

from spinact.obstruction import check_z2, check_z2xz2, subgroup_smoothability_hint
from spinact.templates import klein_family_comparison, klein_template, z2_template


def sweep_involutions(l_max, k_max):
    print("== involution family: l spheres, 2k exchanged E8 pieces ==")
    for k in range(k_max + 1):
        for l in range(3 * k, l_max + 1):
            r = check_z2(z2_template(l, k))
            print(
                f"l={l} k={k}: b={r.b} bound={r.k} "
                f"trace={r.trace_value} -> {r.verdict}"
            )


def sweep_klein(l_max, k_max):
    print("== Klein family: two chains of l1/l2 pairs, 4k exchanged E8 pieces ==")
    for k in range(1, k_max + 1):
        for l1 in range(3 * k, l_max + 1):
            for l2 in range(3 * k, l_max + 1):
                s = klein_template(l1, l2, k)
                r = check_z2xz2(s)
                hints = {
                    sub: subgroup_smoothability_hint(s, sub)
                    for sub in ("gen1", "gen2", "diagonal")
                }
                tag = "all-subgroups-smoothable" if set(hints.values()) == {
                    "smoothable_by_construction"
                } else "subgroup-status-unknown"
                print(
                    f"l1={l1} l2={l2} k={k}: b={r.b} bound={r.k} -> {r.verdict} "
                    f"[{tag}]"
                )
                comparison = klein_family_comparison(l1, l2, k)
                if not comparison.match:
                    print(
                        f"   note: advertised total {comparison.advertised} differs "
                        f"from constructed {comparison.constructed}"
                    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--l-max", type=int, default=7)
    parser.add_argument("--k-max", type=int, default=2)
    args = parser.parse_args()
    sweep_involutions(args.l_max, args.k_max)
    print()
    sweep_klein(args.l_max, args.k_max)


if __name__ == "__main__":
    main()
