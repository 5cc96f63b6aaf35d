"""Named verification suites and their default bounds.

``max_n`` caps the size parameter of the suites that have one; it never
raises a bound above its default.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .balmer import verify_prime_classification
from .characters import verify_character_integrity
from .lr import (
    verify_deligne_110,
    verify_inclusions_equivalence,
    verify_lr_oracles,
    verify_okada_consistency,
)
from .report import VerificationReport
from .schur_calculus import (
    GradedObject,
    cofiber_bound_check,
    graded_objects,
    verify_dimension_window,
    verify_euler,
    verify_hook_equivalence,
    verify_kill_sym_and_alt,
    verify_shift_rule,
)

#: degrees used by the graded-object batteries
BATTERY_DEGREES = (-2, -1, 0, 1, 2)


def small_battery(max_total: int = 4) -> list[GradedObject]:
    """Objects on degrees -2..2 with total dimension at most ``max_total``."""
    return list(graded_objects(BATTERY_DEGREES, max_total, max_total))


def _cap(default: int, max_n: int | None) -> int:
    return default if max_n is None else min(default, max_n)


def cofiber_sweep(max_mult: int = 3, max_side: int = 5) -> VerificationReport:
    report = VerificationReport("cofiber")
    for x in graded_objects(BATTERY_DEGREES, max_mult):
        for split in (False, True):
            if split and x[0] < 1:
                continue
            report.merge(cofiber_bound_check(x, split, max_side))
    return report


def kill_sym_alt_sweep(max_product: int = 12) -> VerificationReport:
    report = VerificationReport("kill-sym-alt")
    battery = list(graded_objects((-1, 0, 1, 2), 3, 4))
    for n in range(1, max_product + 1):
        for m in range(1, max_product // n + 1):
            report.merge(verify_kill_sym_and_alt(n, m, battery))
    return report


def dimension_window_sweep(max_total: int = 4) -> VerificationReport:
    report = VerificationReport("dimension-window")
    for x in small_battery(max_total):
        if x:
            report.merge(verify_dimension_window(x))
    return report


SUITES: dict[str, Callable[[int | None], VerificationReport]] = {
    "lr-oracles": lambda n: verify_lr_oracles(_cap(8, n)),
    "inclusions": lambda n: verify_inclusions_equivalence(_cap(8, n)),
    "deligne110": lambda n: verify_deligne_110(_cap(9, n), 3),
    "hook": lambda n: verify_hook_equivalence(_cap(7, n), 3),
    "okada": lambda n: verify_okada_consistency(_cap(12, n)),
    "shifts": lambda n: verify_shift_rule(_cap(6, n), small_battery(4)),
    "euler": lambda n: verify_euler(_cap(5, n), small_battery(4)),
    "characters": lambda n: verify_character_integrity(_cap(6, n), _cap(8, n), _cap(6, n)),
    "cofiber": lambda n: cofiber_sweep(),
    "kill-sym-alt": lambda n: kill_sym_alt_sweep(_cap(12, n)),
    "balmer": lambda n: verify_prime_classification(_cap(5, n)),
    "dimension-window": lambda n: dimension_window_sweep(),
}


def run_suite(name: str, max_n: int | None = None) -> VerificationReport:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'") from None
    return suite(max_n)


def _run_one(args: tuple[str, int | None]) -> VerificationReport:
    return run_suite(*args)


def thread_budget() -> int:
    raw = os.environ.get("SCHURCALC_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suites(names: list[str], max_n: int | None = None) -> list[VerificationReport]:
    """Run suites in the given order; parallel across processes when allowed.

    Output order always follows ``names``.
    """
    workers = min(thread_budget(), len(names))
    jobs = [(name, max_n) for name in names]
    if workers <= 1:
        return [_run_one(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs))
