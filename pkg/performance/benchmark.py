"""Time the localization pipeline over the catalog."""

import time

from ringlab.config import config
from ringlab.core.classify import classification_report
from ringlab.core.localization import exhaustive_denominator_sets
from ringlab.core.ring import construct
from ringlab.ringspec import catalog_names
from ringlab.types import Catalog


def benchmark_catalog() -> None:
    """Report construction, classification and exhaustive-oracle times per catalog ring."""
    print(f"{'ring':<10} {'order':>6} {'construct':>10} {'report':>10} {'oracle':>10}")
    for name in catalog_names():
        t0 = time.perf_counter()
        ring = construct(Catalog(name=name))
        t1 = time.perf_counter()
        classification_report(ring)
        t2 = time.perf_counter()
        oracle = "-"
        if ring.order <= config.bounds.oracle_max_order:
            exhaustive_denominator_sets(ring)
            oracle = f"{time.perf_counter() - t2:.4f}"
        print(f"{name:<10} {ring.order:>6} {t1 - t0:>10.4f} {t2 - t1:>10.4f} {oracle:>10}")


if __name__ == "__main__":
    benchmark_catalog()
