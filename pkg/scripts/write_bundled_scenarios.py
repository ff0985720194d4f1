#!/usr/bin/env python3
"""Regenerate the bundled scenario files under scenarios/ from the templates."""

from pathlib import Path

from spinact.equivariant_sum import serialize_scenario
from spinact.templates import klein_template, z2_template

OUT = Path(__file__).resolve().parents[1] / "scenarios"

BUNDLED = {
    "z2_l3_k1.json": z2_template(3, 1),
    "klein_l3_l3_k1.json": klein_template(3, 3, 1),
}


def main():
    OUT.mkdir(exist_ok=True)
    for name, scenario in BUNDLED.items():
        path = OUT / name
        path.write_text(serialize_scenario(scenario), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
