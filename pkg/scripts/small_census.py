"""Census rows for small families of 2-dds with six-arc ACs."""

import argparse
import time
from dataclasses import dataclass

from twodd.generation import FamilySpec, census


@dataclass
class Config:
    max_m: int = 3
    k: int = 3


def main(cfg: Config) -> None:
    print(f"{'family':8} {'total':>8} {'connected':>10} {'clean odd nonham':>17} {'split decided':>14} {'s':>7}")
    for m in range(1, cfg.max_m + 1):
        spec = FamilySpec(cfg.k, m, {"saturated"})
        t0 = time.perf_counter()
        row = census(spec)
        dt = time.perf_counter() - t0
        print(f"{spec.name:8} {row.total:>8} {row.connected:>10} {row.clean_odd_nonham:>17} "
              f"{row.split_decided:>14} {dt:>7.1f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=Config.max_m)
    ap.add_argument("--k", type=int, default=Config.k)
    a = ap.parse_args()
    main(Config(a.max_m, a.k))
