#!/usr/bin/env python3
"""Sizes of the generated corpora, plus a few counts worth keeping an eye on.

Prints one line per corpus.  With ``--json`` the same numbers come out as
one JSON object.
"""
import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass

from fingroupoid import fiber_product_groupoid
from fingroupoid.corpus import (
    CorpusConfig, extension_corpus, groupoid_types, groupoids_up_to, non_full_functors, ses_corpus,
    transitive_groupoids,
)


@dataclass
class CensusConfig:
    corpus: CorpusConfig
    type_morphisms: int = 3
    small_morphisms: int = 6
    as_json: bool = False


def census(cfg):
    out = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        value = fn()
        out[name] = {"value": len(value) if isinstance(value, list) else value,
                     "seconds": round(time.perf_counter() - t0, 3)}
        return value

    c = cfg.corpus
    exts = timed("extensions", lambda: extension_corpus(c))
    timed("intransitive fiber products",
          lambda: sum(not fiber_product_groupoid(e).is_transitive() for _, e in exts))
    timed("extensions over intransitive G", lambda: sum(not e.G.is_transitive() for _, e in exts))
    timed("non-full functors", lambda: len(non_full_functors(c.non_full_max_order)))
    timed("transitive groupoids",
          lambda: len(transitive_groupoids(c.transitive_max_objects, c.transitive_max_isotropy)))
    timed(f"groupoid types (<= {cfg.type_morphisms} arrows)", lambda: len(groupoid_types(cfg.type_morphisms)))
    timed(f"groupoids (<= {cfg.small_morphisms} arrows)", lambda: len(groupoids_up_to(cfg.small_morphisms)))
    timed("short exact sequences", lambda: len(ses_corpus()))
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=CorpusConfig.seed)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    cfg = CensusConfig(CorpusConfig(seed=args.seed), as_json=args.json)
    res = census(cfg)
    if cfg.as_json:
        print(json.dumps({"config": asdict(cfg), "counts": res}, indent=2, sort_keys=True))
    else:
        for name, r in res.items():
            print(f"{name:40s} {r['value']:>7}  ({r['seconds']}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
