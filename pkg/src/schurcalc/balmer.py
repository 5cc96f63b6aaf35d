"""Prime tensor ideals of the free semisimple category on one object.

The simple objects are the Schur functors ``S_λ(X)``, so a thick tensor ideal
is a set of partitions, and closure under tensoring with simples is closure
under diagram containment. Everything here works with truncations: the part
of an ideal made of partitions of size at most ``N``, with primality checked
only on products that stay within that size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from typing import Iterable, Iterator

from .errors import BoundExceeded, EmptyIdeal, ImproperIdeal
from .lr import tensor_square_expansion, verify_okada_consistency  # noqa: F401
from .partitions import (
    Partition,
    contains,
    is_rectangular,
    partitions_up_to,
    rectangle,
    transpose,
)
from .report import VerificationReport

#: largest N accepted by :func:`enumerate_prime_truncations`
MAX_ENUMERATION_N = 6


@dataclass(frozen=True)
class PrimeLabel:
    """Names the prime of partitions containing ``(p)^q`` (q rows of length p)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError(f"prime labels are positive, got {(self.p, self.q)}")

    @property
    def rectangle(self) -> Partition:
        return rectangle(self.p, self.q)

    def transposed(self) -> PrimeLabel:
        return PrimeLabel(self.q, self.p)

    def to_json(self) -> dict:
        return {"result": "prime", "p": self.p, "q": self.q}


@dataclass(frozen=True)
class Zero:
    def to_json(self) -> dict:
        return {"result": "zero"}


@dataclass(frozen=True)
class NotPrime:
    """Failed classification.

    ``witness`` is a pair of factors outside the set whose product lands in
    it. Without a witness the set passed the truncated primality test but
    matches no ``P_(p,q)``; such sets are flagged rather than treated as primes.
    """

    witness: tuple[Partition, Partition] | None = None
    reason: str = ""

    @property
    def flagged(self) -> bool:
        return self.witness is None

    def to_json(self) -> dict:
        out: dict = {"result": "not_prime"}
        if self.witness is None:
            out["witness"] = None
            out["flagged"] = True
        else:
            out["witness"] = {"mu": list(self.witness[0]), "nu": list(self.witness[1])}
        if self.reason:
            out["reason"] = self.reason
        return out


Classification = PrimeLabel | Zero | NotPrime


@dataclass(frozen=True)
class IdealTruncation:
    """An upward-closed, proper set of partitions of size at most ``max_size``."""

    max_size: int
    members: frozenset[Partition] = field(default_factory=frozenset)

    def __post_init__(self):
        members = frozenset(Partition(m) for m in self.members)
        object.__setattr__(self, "members", members)
        if Partition() in members:
            raise ImproperIdeal("the empty partition generates everything")
        for mu in members:
            if mu.size > self.max_size:
                raise ValueError(f"{list(mu)} is larger than max_size={self.max_size}")
        for mu in members:
            for lam in _universe(self.max_size):
                if lam not in members and contains(mu, lam):
                    raise ValueError(f"not upward closed: {list(mu)} ⊆ {list(lam)}")

    def __contains__(self, lam: Partition) -> bool:
        return lam in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[Partition]:
        return sorted(self.members, key=lambda m: (m.size, tuple(-x for x in m)))

    def to_json(self) -> dict:
        return {"max_size": self.max_size, "members": [list(m) for m in self.sorted_members()]}

    @classmethod
    def from_json(cls, obj: dict) -> IdealTruncation:
        return cls(int(obj["max_size"]), frozenset(Partition(m) for m in obj["members"]))


@cache
def _universe(n: int) -> tuple[Partition, ...]:
    """Nonempty partitions of size ≤ n, by size then reverse-lex."""
    return tuple(lam for lam in partitions_up_to(n) if lam)


@cache
def product_support(mu: Partition, nu: Partition) -> frozenset[Partition]:
    """Partitions λ with ``[λ: μ, ν] > 0``."""
    return frozenset(tensor_square_expansion(mu, nu))


def prime_membership(label: PrimeLabel, lam: Partition) -> bool:
    """``[(p)^q] ⊆ [λ]``, i.e. ``λ_q >= p``."""
    return Partition(lam).part(label.q) >= label.p


def prime_truncation(label: PrimeLabel, n: int) -> IdealTruncation:
    return IdealTruncation(n, frozenset(lam for lam in _universe(n) if prime_membership(label, lam)))


def ideal_closure(generators: Iterable[Partition], n: int) -> IdealTruncation:
    """Smallest upward-closed set of partitions of size ≤ n containing ``generators``."""
    gens = [Partition(g) for g in generators]
    for g in gens:
        if not g:
            raise ImproperIdeal("the empty partition cannot be a generator of a proper ideal")
        if g.size > n:
            raise ValueError(f"generator {list(g)} is larger than N={n}")
    return IdealTruncation(
        n, frozenset(lam for lam in _universe(n) if any(contains(g, lam) for g in gens))
    )


def _factor_pairs(n: int) -> Iterator[tuple[Partition, Partition]]:
    """Unordered pairs of nonempty partitions with total size ≤ n."""
    univ = _universe(n)
    for i, mu in enumerate(univ):
        for nu in univ[i:]:
            if mu.size + nu.size <= n:
                yield mu, nu


@dataclass(frozen=True)
class PrimalityResult:
    is_prime: bool
    witness: tuple[Partition, Partition] | None = None

    def __bool__(self) -> bool:
        return self.is_prime


def is_prime_truncation(s: IdealTruncation) -> PrimalityResult:
    """Whether ``μ ⊗ ν ∈ S`` forces ``μ ∈ S`` or ``ν ∈ S`` for all products of size ≤ N."""
    for mu, nu in _factor_pairs(s.max_size):
        if mu in s.members or nu in s.members:
            continue
        if product_support(mu, nu) <= s.members:
            return PrimalityResult(False, (mu, nu))
    return PrimalityResult(True)


def minimal_rectangles(s: IdealTruncation) -> list[Partition]:
    if not s.members:
        raise EmptyIdeal("the zero ideal contains no rectangles")
    rects = [m for m in s.members if is_rectangular(m)]
    minimal = [r for r in rects if not any(o != r and contains(o, r) for o in rects)]
    return sorted(minimal, key=lambda m: (m.size, tuple(-x for x in m)))


def classify(s: IdealTruncation) -> Classification:
    if not s.members:
        return Zero()
    prime = is_prime_truncation(s)
    if not prime:
        return NotPrime(prime.witness, "a product lands in the set with neither factor in it")
    rects = minimal_rectangles(s)
    if len(rects) != 1:
        return NotPrime(None, f"{len(rects)} minimal rectangles")
    p, q = is_rectangular(rects[0])
    label = PrimeLabel(p, q)
    if s.members != prime_truncation(label, s.max_size).members:
        return NotPrime(None, f"differs from the truncation of P({p},{q})")
    return label


# -- enumeration -------------------------------------------------------------


@cache
def _poset_masks(n: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, int, int], ...]]:
    """Bitmask tables over the universe: upsets, comparabilities, factor pairs."""
    univ = _universe(n)
    index = {lam: i for i, lam in enumerate(univ)}
    up = tuple(
        sum(1 << j for j, lam in enumerate(univ) if contains(mu, lam)) for mu in univ
    )
    comparable = tuple(
        sum(1 << j for j, lam in enumerate(univ) if contains(mu, lam) or contains(lam, mu))
        for mu in univ
    )
    pairs = tuple(
        (index[mu], index[nu], sum(1 << index[lam] for lam in product_support(mu, nu)))
        for mu, nu in _factor_pairs(n)
    )
    return up, comparable, pairs


def _antichains(n: int) -> Iterator[int]:
    """Every antichain of the containment poset, as a bitmask, depth-first."""
    size = len(_universe(n))
    _, comparable, _ = _poset_masks(n)

    def rec(start: int, chosen: int, blocked: int) -> Iterator[int]:
        yield chosen
        for i in range(start, size):
            if not blocked >> i & 1:
                yield from rec(i + 1, chosen | 1 << i, blocked | comparable[i])

    yield from rec(0, 0, 0)


def _prime_masks(n: int) -> Iterator[int]:
    up, _, pairs = _poset_masks(n)
    size = len(up)
    for anti in _antichains(n):
        members = 0
        for i in range(size):
            if anti >> i & 1:
                members |= up[i]
        ok = True
        for i, j, support in pairs:
            if (support & ~members) == 0 and not (members >> i & 1 or members >> j & 1):
                ok = False
                break
        if ok:
            yield members


def enumerate_prime_truncations(n: int) -> list[IdealTruncation]:
    """All proper upward-closed sets at level ``n`` passing the truncated prime test.

    The zero ideal is included. Ordered by size of the set, then by sorted
    member list, so the output is deterministic.
    """
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    if n > MAX_ENUMERATION_N:
        raise BoundExceeded(f"N={n} exceeds {MAX_ENUMERATION_N}")
    univ = _universe(n)
    out = [
        IdealTruncation(n, frozenset(univ[i] for i in range(len(univ)) if mask >> i & 1))
        for mask in _prime_masks(n)
    ]
    out.sort(key=lambda s: (len(s), [(m.size, tuple(-x for x in m)) for m in s.sorted_members()]))
    return out


def count_upsets(n: int) -> int:
    return sum(1 for _ in _antichains(n))


def expected_prime_truncations(n: int) -> dict[frozenset[Partition], PrimeLabel | Zero]:
    """Zero plus the truncations of ``P_(p,q)`` for ``pq <= n`` (larger labels truncate to zero)."""
    out: dict[frozenset[Partition], PrimeLabel | Zero] = {frozenset(): Zero()}
    for p in range(1, n + 1):
        for q in range(1, n // p + 1):
            out[prime_truncation(PrimeLabel(p, q), n).members] = PrimeLabel(p, q)
    return out


@dataclass
class PrimeCensus:
    """Prime truncations at one level, split into classified and flagged."""

    n: int
    upsets: int
    zero: list[IdealTruncation]
    primes: dict[PrimeLabel, IdealTruncation]
    flagged: list[tuple[IdealTruncation, NotPrime]]
    missing: list[PrimeLabel]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "upsets": self.upsets,
            "zero": len(self.zero),
            "primes": [{"p": l.p, "q": l.q, "members": len(s)} for l, s in self.primes.items()],
            "flagged_count": len(self.flagged),
            "flagged": [
                {"members": [list(m) for m in s.sorted_members()], "reason": c.reason}
                for s, c in self.flagged
            ],
            "missing": [[l.p, l.q] for l in self.missing],
        }


def prime_census(n: int) -> PrimeCensus:
    found = enumerate_prime_truncations(n)
    zero, primes, flagged = [], {}, []
    for s in found:
        c = classify(s)
        if isinstance(c, Zero):
            zero.append(s)
        elif isinstance(c, PrimeLabel):
            primes[c] = s
        else:
            flagged.append((s, c))
    expected = expected_prime_truncations(n)
    missing = [lab for lab in expected.values() if isinstance(lab, PrimeLabel) and lab not in primes]
    return PrimeCensus(n, count_upsets(n), zero, primes, flagged, missing)


def verify_prime_classification(n: int) -> VerificationReport:
    """Executable form of the classification at level ``n``.

    Counterexamples are genuine failures: a ``P_(p,q)`` truncation that is not
    prime, a classified prime without a unique minimal rectangle, or an
    expected truncation missing from the enumeration. Sets that pass the
    truncated test without matching any ``P_(p,q)`` are reported under
    ``notes.flagged_count``.
    """
    report = VerificationReport("balmer")
    for p in range(1, n + 1):
        for q in range(1, n // p + 1):
            label = PrimeLabel(p, q)
            s = prime_truncation(label, n)
            report.check(bool(is_prime_truncation(s)), {"label": [p, q], "failed": "truncation not prime"})
            report.check(classify(s) == label, {"label": [p, q], "failed": "classification"})
    census = prime_census(n)
    report.check(len(census.zero) == 1, {"failed": "zero ideal count", "count": len(census.zero)})
    for label, s in census.primes.items():
        report.check(minimal_rectangles(s) == [label.rectangle],
                     {"label": [label.p, label.q], "failed": "unique minimal rectangle"})
    for label in census.missing:
        report.fail({"label": [label.p, label.q], "failed": "missing from enumeration"})
    report.notes = {
        "upsets": census.upsets,
        "prime_truncations": len(census.primes) + len(census.zero) + len(census.flagged),
        "classified": len(census.primes),
        "flagged_count": len(census.flagged),
        "flagged": census.to_json()["flagged"],
    }
    return report
