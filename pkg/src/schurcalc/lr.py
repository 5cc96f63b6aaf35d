"""Littlewood-Richardson coefficients and the sweeps built on them.

Coefficients are counted directly as LR tableaux: semistandard fillings of a
skew shape whose reverse reading word (rows top to bottom, each row right to
left) is a lattice word. One depth-first pass over a skew shape yields the
coefficients for every content at once, so the memo key is ``(λ, μ)``.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from typing import Iterator

from .characters import induction_multiplicity
from .partitions import (
    EMPTY,
    Partition,
    contains,
    has_cell,
    partitions_inside,
    partitions_of,
    partitions_up_to,
    rectangle,
    specht_dim,
)
from .report import VerificationReport


class SchurExpansion(dict):
    """A finite formal sum of partitions with positive multiplicities."""

    def __init__(self, terms=()):
        super().__init__()
        for lam, m in dict(terms).items():
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {lam}")
            if m:
                self[Partition(lam)] = m

    def dimension(self) -> int:
        """Total dimension as a representation: Σ m·dim V_λ."""
        return sum(m * (specht_dim(lam) if lam else 1) for lam, m in self.items())

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self.items(), key=lambda kv: (kv[0].size, kv[0]), reverse=True)

    def to_json(self) -> list[dict]:
        return [{"lambda": list(lam), "multiplicity": m} for lam, m in self.sorted_items()]


def _skew_cells(lam: Partition, mu: Partition) -> list[tuple[int, int]]:
    cells = []
    for i in range(len(lam)):
        for j in range(lam[i] - 1, mu.part(i + 1) - 1, -1):
            cells.append((i, j))
    return cells


@cache
def skew_lr_expansion(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Map each content ν to the number of LR tableaux of shape λ/μ with content ν."""
    if not contains(mu, lam):
        return {}
    cells = _skew_cells(lam, mu)
    if not cells:
        return {EMPTY: 1}
    filled: dict[tuple[int, int], int] = {}
    counts = [0] * (len(lam) + 1)  # counts[v] for v = 1..len(lam)
    found: Counter[Partition] = Counter()

    def dfs(k: int) -> None:
        if k == len(cells):
            found[Partition(c for c in counts[1:] if c)] += 1
            return
        i, j = cells[k]
        hi = filled.get((i, j + 1), len(lam))
        lo = filled.get((i - 1, j), 0) + 1
        for v in range(lo, min(hi, i + 1) + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filled[(i, j)] = v
            dfs(k + 1)
            counts[v] -= 1
        filled.pop((i, j), None)

    dfs(0)
    return dict(found)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The multiplicity ``[λ: μ, ν]``; zero on size mismatch or non-containment."""
    if lam.size != mu.size + nu.size:
        return 0
    return skew_lr_expansion(Partition(lam), Partition(mu)).get(Partition(nu), 0)


def tensor_square_expansion(mu: Partition, nu: Partition) -> SchurExpansion:
    """Expansion of the product ``S_μ · S_ν`` into irreducibles (the LR product)."""
    n = mu.size + nu.size
    terms = {}
    for lam in partitions_of(n):
        if contains(mu, lam) and contains(nu, lam):
            c = lr_coefficient(lam, mu, nu)
            if c:
                terms[lam] = c
    return SchurExpansion(terms)


def lr_constituent_pairs(lam: Partition) -> Iterator[tuple[Partition, Partition, int]]:
    """Every ``(μ, ν, c)`` with ``c = [λ: μ, ν] > 0``."""
    for mu in partitions_inside(lam):
        for nu, c in skew_lr_expansion(lam, mu).items():
            yield mu, nu, c


def rectangular_lr_support(p: int, q: int, r: int, s: int) -> list[Partition]:
    """Support of the product of the rectangles ``(p)^q`` and ``(r)^s``.

    Generated from the closed form for a product of two rectangles, with the
    taller rectangle first: rows ``s+1..q`` equal ``p``, row ``s`` is at least
    ``max(p, r)``, and rows ``i`` and ``q+s+1-i`` sum to ``p+r`` for
    ``i <= s``. Every row of λ is determined by its first ``s`` rows.
    """
    if min(p, q, r, s) < 1:
        raise ValueError(f"rectangle sides must be positive, got {(p, q, r, s)}")
    if q < s:
        p, q, r, s = r, s, p, q
    out = []

    def heads(k: int, upper: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield ()
            return
        for x in range(upper, max(p, r) - 1, -1):
            for rest in heads(k - 1, x):
                yield (x,) + rest

    for top in heads(s, p + r):
        middle = (p,) * (q - s)
        bottom = tuple(p + r - top[s - 1 - t] for t in range(s))
        out.append(Partition(x for x in top + middle + bottom if x))
    out.sort(reverse=True)
    return out


def brute_force_lr_support(mu: Partition, nu: Partition) -> list[Partition]:
    return sorted(tensor_square_expansion(mu, nu), reverse=True)


def verify_inclusions_equivalence(max_size: int) -> VerificationReport:
    """Sweep the three equivalent forms of diagram containment.

    (a) some ν has [λ: μ, ν] ≠ 0, (b) [μ] ⊆ [λ], (c) [λ: μ, (1), ..., (1)] ≠ 0.
    (a) and (c) are computed from characters so they never consult (b).
    """
    report = VerificationReport("inclusions")
    box = Partition((1,))
    for lam in partitions_up_to(max_size):
        for m in range(lam.size + 1):
            rest = lam.size - m
            for mu in partitions_of(m):
                a = any(induction_multiplicity(lam, [mu, nu]) for nu in partitions_of(rest))
                b = contains(mu, lam)
                c = induction_multiplicity(lam, [mu] + [box] * rest) != 0 if rest else lam == mu
                report.check(
                    a == b == c,
                    {"lambda": list(lam), "mu": list(mu), "exists_nu": a, "contained": b, "boxes": c},
                )
    return report


def verify_deligne_110(max_size: int, max_corner: int) -> VerificationReport:
    """If the cell (p+r+1, q+s+1) lies in λ and [λ: μ, ν] ≠ 0, then
    (p+1, q+1) lies in μ or (r+1, s+1) lies in ν."""
    report = VerificationReport("deligne110")
    rng = range(max_corner + 1)
    for lam in partitions_up_to(max_size):
        corners = [
            (p, q, r, s)
            for p in rng for q in rng for r in rng for s in rng
            if has_cell(lam, p + r + 1, q + s + 1)
        ]
        if not corners:
            continue
        for mu, nu, _ in lr_constituent_pairs(lam):
            for p, q, r, s in corners:
                ok = has_cell(mu, p + 1, q + 1) or has_cell(nu, r + 1, s + 1)
                report.check(
                    ok,
                    {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "pqrs": [p, q, r, s]},
                )
    return report


def verify_lr_oracles(max_total: int) -> VerificationReport:
    """LR tableau counts against character-theoretic induction multiplicities."""
    report = VerificationReport("lr-oracles")
    for n in range(max_total + 1):
        for a in range(n + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(n - a):
                    for lam in partitions_of(n):
                        x = lr_coefficient(lam, mu, nu)
                        y = induction_multiplicity(lam, [mu, nu])
                        report.check(
                            x == y,
                            {"lambda": list(lam), "mu": list(mu), "nu": list(nu),
                             "tableaux": x, "characters": y},
                        )
    return report


def rectangles_up_to(max_size: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(1, max_size + 1) for q in range(1, max_size // p + 1)]


def verify_okada_consistency(max_total: int) -> VerificationReport:
    """Closed-form rectangle supports against brute-force LR supports."""
    report = VerificationReport("okada")
    rects = rectangles_up_to(max_total)
    for p, q in rects:
        for r, s in rects:
            if p * q + r * s > max_total:
                continue
            formula = rectangular_lr_support(p, q, r, s)
            brute = brute_force_lr_support(rectangle(p, q), rectangle(r, s))
            report.check(
                formula == brute,
                {"pqrs": [p, q, r, s], "formula": [list(x) for x in formula],
                 "brute_force": [list(x) for x in brute]},
            )
    return report
