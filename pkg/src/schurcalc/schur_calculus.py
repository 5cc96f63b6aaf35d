"""Schur functors on graded objects.

A :class:`GradedObject` records a finite direct sum of shifted unit lines
``Σ^d 1`` by the multiplicity of each degree ``d``. That is exactly the data of
a perfect complex over ℚ up to isomorphism, and Schur functors of such sums are
again sums of shifted lines.

Two independent evaluation routes are provided:

* :func:`schur_of_object` peels one line at a time off the object and expands
  with Littlewood-Richardson coefficients, bottoming out in
  :func:`schur_of_line`. This is the reference route; it is bounded.
* :func:`schur_by_tableaux` counts super-semistandard tableaux: an even line
  contributes a horizontal strip, an odd line a vertical strip. It scales to
  the large rectangles needed by the cofiber sweep.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import BoundExceeded, InvalidSplit, ParseError, ZeroObject
from .lr import skew_lr_expansion
from .partitions import (
    EMPTY,
    Partition,
    contains,
    has_cell,
    is_rectangular,
    partitions_inside,
    partitions_of,
    rectangle,
    specht_dim,
    transpose,
)
from .report import VerificationReport

#: bounds for the LR peeling route
MAX_SCHUR_SIZE = 12
MAX_OBJECT_DIM = 8
#: bounds for the tableau route
MAX_TABLEAU_SIZE = 30
MAX_TABLEAU_DIM = 40


class GradedObject:
    """Finitely supported map from degree to positive multiplicity.

    Immutable and hashable; the empty map is the zero object.
    """

    __slots__ = ("_items",)

    def __init__(self, dims: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        dims = dict(dims)
        for d, m in dims.items():
            if m < 0:
                raise ValueError(f"negative multiplicity {m} in degree {d}")
        self._items = tuple(sorted((int(d), int(m)) for d, m in dims.items() if m))

    @classmethod
    def unit(cls) -> GradedObject:
        return cls({0: 1})

    @classmethod
    def zero(cls) -> GradedObject:
        return cls()

    @classmethod
    def parse(cls, text: str) -> GradedObject:
        """Parse ``"-1:1,0:2,1:1"``; the empty string is the zero object."""
        text = text.strip()
        if not text:
            return cls()
        dims: dict[int, int] = {}
        for token in text.split(","):
            deg, sep, mult = token.partition(":")
            if not sep:
                raise ParseError(f"expected 'degree:multiplicity', got {token!r}")
            try:
                d, m = int(deg), int(mult)
            except ValueError:
                raise ParseError(f"non-integer in {token!r}") from None
            if m < 0:
                raise ParseError(f"negative multiplicity in {token!r}")
            if d in dims:
                raise ParseError(f"degree {d} listed twice")
            dims[d] = m
        return cls(dims)

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> GradedObject:
        return cls({int(k): int(v) for k, v in obj.items()})

    @property
    def dims(self) -> dict[int, int]:
        return dict(self._items)

    def __getitem__(self, degree: int) -> int:
        return dict(self._items).get(degree, 0)

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._items

    def is_zero(self) -> bool:
        return not self._items

    def __bool__(self) -> bool:
        return bool(self._items)

    @property
    def even_total(self) -> int:
        return sum(m for d, m in self._items if d % 2 == 0)

    @property
    def odd_total(self) -> int:
        return sum(m for d, m in self._items if d % 2)

    @property
    def total_dim(self) -> int:
        return sum(m for _, m in self._items)

    def shift(self, k: int) -> GradedObject:
        """``Σ^k`` of this object."""
        return GradedObject({d + k: m for d, m in self._items})

    def __add__(self, other: GradedObject) -> GradedObject:
        out = Counter(self.dims)
        out.update(other.dims)
        return GradedObject(out)

    def tensor(self, other: GradedObject) -> GradedObject:
        out: Counter[int] = Counter()
        for d, m in self._items:
            for e, n in other._items:
                out[d + e] += m * n
        return GradedObject(out)

    def scale(self, k: int) -> GradedObject:
        return GradedObject({d: k * m for d, m in self._items})

    def collapse_parity(self) -> GradedObject:
        """Identify ``Σ^2 1`` with ``1``: fold all degrees into 0 and 1."""
        return GradedObject({0: self.even_total, 1: self.odd_total})

    def lines(self) -> list[int]:
        """Degrees of the individual lines, with repetition, ascending."""
        return [d for d, m in self._items for _ in range(m)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GradedObject) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        return f"GradedObject({dict(self._items)})"

    def __str__(self) -> str:
        return ",".join(f"{d}:{m}" for d, m in self._items)

    def to_json(self) -> dict[str, int]:
        return {str(d): m for d, m in self._items}


def super_dimension(x: GradedObject) -> int:
    """Euler characteristic Σ (-1)^d dims[d]."""
    return sum(m if d % 2 == 0 else -m for d, m in x.items())


def schur_of_line(mu: Partition, e: int) -> GradedObject:
    """``S_μ(Σ^e 1)``: a single line in degree ``e·|μ|`` or zero.

    An even line is symmetric, so only one-row shapes survive; an odd line
    carries the sign action, so only one-column shapes survive.
    """
    n = sum(mu)
    if n == 0:
        return GradedObject.unit()
    survives = len(mu) == 1 if e % 2 == 0 else mu[0] == 1
    return GradedObject({e * n: 1}) if survives else GradedObject.zero()


def _check_bounds(lam: Partition, x: GradedObject) -> None:
    if lam.size > MAX_SCHUR_SIZE:
        raise BoundExceeded(f"|λ|={lam.size} exceeds {MAX_SCHUR_SIZE}")
    if x.total_dim > MAX_OBJECT_DIM:
        raise BoundExceeded(f"object dimension {x.total_dim} exceeds {MAX_OBJECT_DIM}")


def schur_of_object(
    lam: Partition, x: GradedObject, peel_order: Sequence[int] | None = None
) -> GradedObject:
    """Evaluate ``S_λ(X)`` by the sum formula, peeling off one line at a time.

    ``peel_order`` lists degrees in the order their lines are split off;
    degrees it omits are peeled afterwards in ascending order. The answer
    does not depend on the order.
    """
    lam = Partition(lam)
    _check_bounds(lam, x)
    order = tuple(peel_order) if peel_order is not None else ()
    return _schur_peel(lam, x, order)


def _next_line(x: GradedObject, order: tuple[int, ...]) -> int:
    present = x.dims
    for d in order:
        if present.get(d):
            return d
    return x.items()[0][0]


@cache
def _schur_peel(lam: Partition, x: GradedObject, order: tuple[int, ...]) -> GradedObject:
    if not lam:
        return GradedObject.unit()
    if x.is_zero():
        return GradedObject.zero()
    d = _next_line(x, order)
    rest = GradedObject({**x.dims, d: x[d] - 1})
    out = GradedObject.zero()
    for mu in partitions_inside(lam):
        s_mu = _schur_peel(mu, rest, order)
        if s_mu.is_zero():
            continue
        for nu, c in skew_lr_expansion(lam, mu).items():
            s_nu = schur_of_line(nu, d)
            if s_nu:
                out = out + s_mu.tensor(s_nu).scale(c)
    return out


# -- tableau route ---------------------------------------------------------


@cache
def _horizontal_strips(kappa: Partition, lam: Partition) -> tuple[Partition, ...]:
    """Partitions κ' with κ ⊆ κ' ⊆ λ and κ'/κ a horizontal strip."""
    rows = len(lam)
    k = list(kappa) + [0] * (rows - len(kappa))
    ranges = []
    for i in range(rows):
        upper = lam[i] if i == 0 else min(lam[i], k[i - 1])
        ranges.append(range(k[i], upper + 1))
    return tuple(Partition.from_parts(parts) for parts in product(*ranges))


@cache
def _vertical_strips(kappa: Partition, lam: Partition) -> tuple[Partition, ...]:
    """Partitions κ' with κ ⊆ κ' ⊆ λ and κ'/κ a vertical strip."""
    rows = len(lam)
    k = list(kappa) + [0] * (rows - len(kappa))
    out = []
    for bumps in product((0, 1), repeat=rows):
        parts = [a + b for a, b in zip(k, bumps)]
        if all(parts[i] <= lam[i] for i in range(rows)) and all(
            parts[i] >= parts[i + 1] for i in range(rows - 1)
        ):
            out.append(Partition.from_parts(parts))
    return tuple(out)


def _strips(kappa: Partition, lam: Partition, degree: int) -> tuple[Partition, ...]:
    if degree % 2 == 0:
        return _horizontal_strips(kappa, lam)
    return _vertical_strips(kappa, lam)


def _check_tableau_bounds(lam: Partition, x: GradedObject) -> None:
    if lam.size > MAX_TABLEAU_SIZE:
        raise BoundExceeded(f"|λ|={lam.size} exceeds {MAX_TABLEAU_SIZE}")
    if x.total_dim > MAX_TABLEAU_DIM:
        raise BoundExceeded(f"object dimension {x.total_dim} exceeds {MAX_TABLEAU_DIM}")


def schur_by_tableaux(lam: Partition, x: GradedObject) -> GradedObject:
    """Evaluate ``S_λ(X)`` as a generating function of super-semistandard tableaux.

    Each line of ``X`` is a letter; a letter of degree ``d`` filling ``k``
    boxes contributes degree ``k·d``.
    """
    lam = Partition(lam)
    _check_tableau_bounds(lam, x)
    return _schur_tableaux(lam, x)


@cache
def _schur_tableaux(lam: Partition, x: GradedObject) -> GradedObject:
    states: dict[Partition, Counter[int]] = {EMPTY: Counter({0: 1})}
    for d in x.lines():
        nxt: dict[Partition, Counter[int]] = {}
        for kappa, poly in states.items():
            for grown in _strips(kappa, lam, d):
                bucket = nxt.setdefault(grown, Counter())
                added = d * (grown.size - kappa.size)
                for deg, m in poly.items():
                    bucket[deg + added] += m
        states = nxt
    return GradedObject(states.get(lam, {}))


def schur_is_zero(lam: Partition, x: GradedObject) -> bool:
    """Whether ``S_λ(X)`` vanishes, by reachability of λ through strips."""
    lam = Partition(lam)
    _check_tableau_bounds(lam, x)
    return _schur_zero(lam, tuple(d % 2 for d in x.lines()))


@cache
def _schur_zero(lam: Partition, parities: tuple[int, ...]) -> bool:
    reached = {EMPTY}
    for par in parities:
        reached = {g for kappa in reached for g in _strips(kappa, lam, par)}
    return lam not in reached


def vanishes(lam: Partition, x: GradedObject) -> bool:
    """``S_λ(X) = 0``, by peeling when in bounds and by tableaux otherwise."""
    if Partition(lam).size <= MAX_SCHUR_SIZE and x.total_dim <= MAX_OBJECT_DIM:
        return schur_of_object(lam, x).is_zero()
    return schur_is_zero(lam, x)


# -- criteria ----------------------------------------------------------------


def hook_vanishing_test(lam: Partition, p: int, q: int) -> bool:
    """Predict ``S_λ(1^p ⊕ Σ1^q) = 0``: true iff the cell (p+1, q+1) lies in λ."""
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError(f"need p, q >= 0 with p + q >= 1, got {(p, q)}")
    return has_cell(lam, p + 1, q + 1)


def minimal_annihilating_rectangle(x: GradedObject) -> Partition:
    """The rectangle with ``even_total + 1`` rows of length ``odd_total + 1``."""
    if x.is_zero():
        raise ZeroObject("every nonempty Schur functor kills the zero object")
    return rectangle(x.odd_total + 1, x.even_total + 1)


def verify_dimension_window(x: GradedObject) -> VerificationReport:
    """Check the dimension window attached to the minimal annihilating rectangle.

    With the rectangle written ``(a)^b`` (b rows of length a), the object has
    ``b-1`` even and ``a-1`` odd lines, so its superdimension is ``b - a``.
    """
    if x.is_zero():
        raise ZeroObject("the dimension window is undefined for the zero object")
    report = VerificationReport("dimension-window")
    rect = minimal_annihilating_rectangle(x)
    a, b = is_rectangular(rect)
    sdim = super_dimension(x)
    where = {"object": x.to_json(), "rectangle": list(rect)}
    report.check(x.even_total <= b - 1, {**where, "failed": "even_total <= b-1"})
    report.check(x.odd_total <= a - 1, {**where, "failed": "odd_total <= a-1"})
    report.check(sdim == b - a, {**where, "failed": "sdim == b-a", "sdim": sdim})
    report.check(1 - a <= sdim <= b - 1, {**where, "failed": "1-a <= sdim <= b-1"})
    report.check(vanishes(rect, x), {**where, "failed": "rectangle annihilates"})
    for smaller in (rectangle(a - 1, b), rectangle(a, b - 1)):
        if smaller:
            report.check(
                not vanishes(smaller, x),
                {**where, "failed": "smaller rectangle does not annihilate", "smaller": list(smaller)},
            )
    return report


def verify_kill_sym_and_alt(
    n: int, m: int, trials: Iterable[GradedObject], extra_sizes: int = 2
) -> VerificationReport:
    """If ``Sym^n X`` and ``Λ^m X`` both vanish then ``X`` is zero.

    Also sweeps the counting step behind it: every partition of ``k >= mn``
    contains the row ``(n)`` or the column ``(1)^m``.
    """
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got {(n, m)}")
    report = VerificationReport("kill-sym-alt")
    row, col = rectangle(n, 1), rectangle(1, m)
    for k in range(m * n, m * n + extra_sizes + 1):
        for lam in partitions_of(k):
            report.check(contains(row, lam) or contains(col, lam),
                         {"n": n, "m": m, "lambda": list(lam)})
    for x in trials:
        if vanishes(row, x) and vanishes(col, x):
            report.check(x.is_zero(), {"n": n, "m": m, "object": x.to_json()})
        else:
            report.checked += 1
    return report


def fiber_of_unit_map(x: GradedObject, split_case: bool) -> GradedObject:
    """Fiber ``Y`` of a map ``1 → X`` between sums of shifted lines.

    A zero map gives ``Y = 1 ⊕ Σ^{-1} X``; a split injection onto a degree-0
    line gives ``Y = Σ^{-1}(X with that line removed)``.
    """
    if not split_case:
        return GradedObject.unit() + x.shift(-1)
    if x[0] < 1:
        raise InvalidSplit("the unit only splits off X when X has a degree-0 line")
    return GradedObject({**x.dims, 0: x[0] - 1}).shift(-1)


def cofiber_bound_check(x: GradedObject, split_case: bool, max_side: int = 5) -> VerificationReport:
    """For the fiber ``Y → 1 → X``: if ``(p)^q`` kills X then ``(q)^{p+1}`` kills Y.

    Rectangles are ``(p)^q`` = q rows of length p, with ``1 <= p, q <= max_side``.
    """
    y = fiber_of_unit_map(x, split_case)
    report = VerificationReport("cofiber")
    for p in range(1, max_side + 1):
        for q in range(1, max_side + 1):
            if vanishes(rectangle(p, q), x):
                report.check(
                    vanishes(rectangle(q, p + 1), y),
                    {"object": x.to_json(), "split": split_case, "p": p, "q": q,
                     "fiber": y.to_json()},
                )
    return report


# -- batteries and sweeps ----------------------------------------------------


def graded_objects(degrees: Sequence[int], max_mult: int, max_total: int | None = None
                   ) -> Iterator[GradedObject]:
    """Every object supported on ``degrees`` with bounded multiplicities."""
    for mults in product(range(max_mult + 1), repeat=len(degrees)):
        if max_total is not None and sum(mults) > max_total:
            continue
        yield GradedObject(dict(zip(degrees, mults)))


def tensor_power(x: GradedObject, n: int) -> GradedObject:
    out = GradedObject.unit()
    for _ in range(n):
        out = out.tensor(x)
    return out


def verify_hook_equivalence(max_size: int = 7, max_pq: int = 3) -> VerificationReport:
    report = VerificationReport("hook")
    for k in range(1, max_size + 1):
        for lam in partitions_of(k):
            for p in range(max_pq + 1):
                for q in range(max_pq + 1):
                    if p + q == 0:
                        continue
                    x = GradedObject({0: p, 1: q})
                    built = schur_of_object(lam, x).is_zero()
                    report.check(
                        built == hook_vanishing_test(lam, p, q),
                        {"lambda": list(lam), "p": p, "q": q, "constructive_zero": built},
                    )
    return report


def verify_shift_rule(max_size: int, battery: Iterable[GradedObject]) -> VerificationReport:
    """``S_λ(ΣX) = Σ^{|λ|} S_{λ^t}(X)`` as graded objects."""
    report = VerificationReport("shifts")
    battery = list(battery)
    for k in range(1, max_size + 1):
        for lam in partitions_of(k):
            for x in battery:
                lhs = schur_of_object(lam, x.shift(1))
                rhs = schur_of_object(transpose(lam), x).shift(k)
                report.check(lhs == rhs, {"lambda": list(lam), "object": x.to_json(),
                                          "lhs": lhs.to_json(), "rhs": rhs.to_json()})
    return report


def verify_euler(max_n: int, battery: Iterable[GradedObject]) -> VerificationReport:
    """Dimension bookkeeping of ``X^{⊗n} = ⊕_λ S_λ(X)^{dim V_λ}``."""
    report = VerificationReport("euler")
    for x in battery:
        sdim = super_dimension(x)
        for n in range(1, max_n + 1):
            total = GradedObject.zero()
            for lam in partitions_of(n):
                total = total + schur_of_object(lam, x).scale(specht_dim(lam))
            where = {"object": x.to_json(), "n": n}
            report.check(total == tensor_power(x, n), {**where, "failed": "graded tensor power"})
            report.check(super_dimension(total) == sdim**n, {**where, "failed": "sdim^n"})
            report.check(total.total_dim == x.total_dim**n, {**where, "failed": "dim^n"})
        if x:
            rect = minimal_annihilating_rectangle(x)
            a, b = is_rectangular(rect)
            report.check(sdim == b - a, {"object": x.to_json(), "failed": "sdim == b-a"})
    return report
