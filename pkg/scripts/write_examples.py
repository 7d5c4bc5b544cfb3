#!/usr/bin/env python3
"""Write a handful of input documents for trying out the command line tool."""
import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from fingroupoid import cyclic, discrete_groupoid, group_groupoid, pair_groupoid, trivial_group
from fingroupoid.bibundle import bibundle_of_functor
from fingroupoid.corpus import homomorphism_functor
from fingroupoid.io import canonical, dump_bibundle, dump_functor, dump_groupoid


@dataclass
class ExampleConfig:
    out: Path = Path("cli-examples")


def documents():
    z4_to_z2 = homomorphism_functor(cyclic(4), cyclic(2), {x: x % 2 for x in range(4)})
    z2_to_z4 = homomorphism_functor(cyclic(2), cyclic(4), {0: 0, 1: 2})
    return {
        "z2.grpd.json": dump_groupoid(group_groupoid(cyclic(2))),
        "pair3.grpd.json": dump_groupoid(pair_groupoid([0, 1, 2])),
        "discrete3.grpd.json": dump_groupoid(discrete_groupoid([0, 1, 2])),
        "point.grpd.json": dump_groupoid(group_groupoid(trivial_group())),
        "z4_to_z2.functor.json": dump_functor(z4_to_z2),
        "z2_to_z4.functor.json": dump_functor(z2_to_z4),
        "z4_to_z2.bibundle.json": dump_bibundle(bibundle_of_functor(z4_to_z2)),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=ExampleConfig.out)
    cfg = ExampleConfig(ap.parse_args(argv).out)
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, doc in documents().items():
        (cfg.out / name).write_text(canonical(doc) + "\n")
        print(cfg.out / name)
    return 0


if __name__ == "__main__":
    sys.exit(main())
