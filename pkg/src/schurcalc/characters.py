"""Symmetric group characters by the Murnaghan-Nakayama rule.

Everything here is exact integer arithmetic. Inner products are computed as
class-size weighted sums and divided by the group order at the very end,
with an assertion that the division is exact.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from math import factorial, prod
from typing import Sequence

from .errors import BoundExceeded, SizeMismatch
from .partitions import Partition, partitions_of, specht_dim
from .report import VerificationReport

#: largest n for which character tables are built and memoized
MAX_TABLE_SIZE = 12

CycleType = Partition


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    assert r == 0, f"{what}: {num} not divisible by {den}"
    return q


def centralizer_order(rho: CycleType) -> int:
    return prod(k**m * factorial(m) for k, m in Counter(rho).items())


@cache
def class_size(rho: CycleType) -> int:
    """Number of permutations of cycle type ``rho``."""
    return _exact_div(factorial(sum(rho)), centralizer_order(rho), "class size")


def _border_strips(lam: tuple[int, ...], k: int) -> list[tuple[tuple[int, ...], int]]:
    """All ways to remove a border strip of size k; returns (remainder, height)."""
    # Beta-set formulation: removing a k-strip moves one bead k positions left.
    n = len(lam)
    beta = [lam[i] + (n - 1 - i) for i in range(n)]
    beads = set(beta)
    out = []
    for b in beta:
        t = b - k
        if t < 0 or t in beads:
            continue
        height = sum(1 for c in beads if t < c < b)
        new_beta = sorted((t if c == b else c for c in beta), reverse=True)
        parts = tuple(new_beta[i] - (n - 1 - i) for i in range(n))
        out.append((tuple(x for x in parts if x), height))
    return out


@cache
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    k, rest = rho[0], rho[1:]
    total = 0
    for smaller, height in _border_strips(lam, k):
        total += (-1) ** height * _mn(smaller, rest)
    return total


def mn_character(lam: Partition, rho: CycleType) -> int:
    """Irreducible character value of ``lam`` at a permutation of cycle type ``rho``."""
    if sum(lam) != sum(rho):
        raise SizeMismatch(f"|λ|={sum(lam)} but |ρ|={sum(rho)}")
    return _mn(tuple(lam), tuple(rho))


@cache
def character_table(n: int) -> dict[Partition, dict[CycleType, int]]:
    """Rows indexed by partitions of n, columns by cycle types of n."""
    if n > MAX_TABLE_SIZE:
        raise BoundExceeded(f"character table for n={n} exceeds bound {MAX_TABLE_SIZE}")
    classes = partitions_of(n)
    return {lam: {rho: mn_character(lam, rho) for rho in classes} for lam in classes}


def _chi(lam: Partition, rho: CycleType) -> int:
    n = sum(lam)
    if n <= MAX_TABLE_SIZE:
        return character_table(n)[lam][rho]
    return mn_character(lam, rho)


@cache
def _induction2(lam: Partition, mu: Partition, nu: Partition) -> int:
    a, b = mu.size, nu.size
    total = 0
    for alpha in partitions_of(a):
        ca = class_size(alpha) * _chi(mu, alpha)
        if not ca:
            continue
        for beta in partitions_of(b):
            cb = class_size(beta) * _chi(nu, beta)
            if not cb:
                continue
            joined = Partition.from_parts(alpha + beta)
            total += ca * cb * _chi(lam, joined)
    return _exact_div(total, factorial(a) * factorial(b), "induction multiplicity")


@cache
def induction_expansion(factors: tuple[Partition, ...]) -> dict[Partition, int]:
    """Decompose the induced outer product of ``factors`` into irreducibles.

    Built by iterated two-factor induction, folding left to right.
    """
    if not factors:
        return {Partition(): 1}
    if len(factors) == 1:
        return {factors[0]: 1}
    head = induction_expansion(factors[:-1])
    last = factors[-1]
    size = sum(f.size for f in factors)
    out: Counter[Partition] = Counter()
    for target in partitions_of(size):
        m = sum(c * _induction2(target, kappa, last) for kappa, c in head.items())
        if m:
            out[target] = m
    return dict(out)


def induction_multiplicity(lam: Partition, factors: Sequence[Partition]) -> int:
    """Multiplicity of ``lam`` in the induction of the outer product of ``factors``.

    Two factors are handled directly by Frobenius reciprocity, summing over
    pairs of conjugacy classes of the Young subgroup.
    """
    if not factors:
        raise ValueError("need at least one factor")
    if sum(f.size for f in factors) != lam.size:
        raise SizeMismatch(
            f"|λ|={lam.size} but factor sizes sum to {sum(f.size for f in factors)}"
        )
    factors = tuple(Partition(f) for f in factors)
    if len(factors) == 2:
        return _induction2(Partition(lam), factors[0], factors[1])
    return induction_expansion(factors).get(Partition(lam), 0)


@cache
def _kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    n = lam.size
    total = sum(
        class_size(rho) * _chi(mu, rho) * _chi(nu, rho) * _chi(lam, rho)
        for rho in partitions_of(n)
    )
    value = _exact_div(total, factorial(n), "kronecker multiplicity")
    assert value >= 0
    return value


def kronecker_multiplicity(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of ``lam`` in the internal tensor product of ``mu`` and ``nu``."""
    if not lam.size == mu.size == nu.size:
        raise SizeMismatch(f"sizes differ: {lam.size}, {mu.size}, {nu.size}")
    return _kronecker(Partition(lam), Partition(mu), Partition(nu))


def character_table_json(n: int) -> dict:
    table = character_table(n)
    key = lambda rho: ",".join(map(str, rho))  # noqa: E731
    return {
        "n": n,
        "rows": [
            {"lambda": list(lam), "values": {key(rho): v for rho, v in row.items()}}
            for lam, row in table.items()
        ],
    }


def verify_character_integrity(
    max_orthogonality: int = 6, max_square_sum: int = 8, max_kronecker: int = 6
) -> VerificationReport:
    """Orthogonality, the sum of squared dimensions, and the Kronecker dimension rule."""
    report = VerificationReport("characters")
    for n in range(1, max_orthogonality + 1):
        table = character_table(n)
        classes = partitions_of(n)
        for lam in classes:
            report.check(table[lam][Partition((1,) * n)] == specht_dim(lam),
                         {"n": n, "lambda": list(lam), "failed": "identity value"})
            for mu in classes:
                row = sum(class_size(r) * table[lam][r] * table[mu][r] for r in classes)
                report.check(row == factorial(n) * (lam == mu),
                             {"n": n, "pair": [list(lam), list(mu)], "failed": "row orthogonality"})
        for r in classes:
            for s in classes:
                col = sum(table[lam][r] * table[lam][s] for lam in classes)
                expected = centralizer_order(r) if r == s else 0
                report.check(col == expected,
                             {"n": n, "classes": [list(r), list(s)], "failed": "column orthogonality"})
    for n in range(1, max_square_sum + 1):
        total = sum(specht_dim(lam) ** 2 for lam in partitions_of(n))
        report.check(total == factorial(n), {"n": n, "failed": "sum of squares", "got": total})
    for n in range(1, max_kronecker + 1):
        classes = partitions_of(n)
        for mu in classes:
            for nu in classes:
                lhs = sum(kronecker_multiplicity(lam, mu, nu) * specht_dim(lam) for lam in classes)
                report.check(lhs == specht_dim(mu) * specht_dim(nu),
                             {"n": n, "mu": list(mu), "nu": list(nu), "failed": "kronecker dimension"})
    return report
