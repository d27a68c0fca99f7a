"""k-deletion decks and the partition generators behind them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import EmptyDeckError, KTooLargeError, MixedWeightsError, TargetTooSmallError
from .partition import Partition, conjugate, contains


@dataclass(frozen=True)
class DeletionDeck:
    """A set of k-deletions of some unknown partition.

    Members are deduplicated and stored in descending lexicographic order, so
    two decks compare equal exactly when they hold the same set.
    """

    k: int
    members: tuple[Partition, ...]

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"k must be nonnegative, got {self.k}")
        members = tuple(sorted(set(self.members), reverse=True))
        if not members:
            raise EmptyDeckError("deck has no members")
        weights = {m.weight for m in members}
        if len(weights) > 1:
            raise MixedWeightsError(f"deck members have differing weights {sorted(weights)}")
        object.__setattr__(self, "members", members)

    @property
    def member_weight(self) -> int:
        return self.members[0].weight

    @property
    def n(self) -> int:
        """Weight of the partition the deck came from."""
        return self.member_weight + self.k

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.members)

    def conjugate(self) -> DeletionDeck:
        return DeletionDeck(self.k, tuple(conjugate(m) for m in self.members))

    def to_text(self) -> str:
        return "".join(f"{m}\n" for m in self.members)


def is_k_deletion(mu: Partition, lam: Partition, k: int) -> bool:
    return contains(mu, lam) and lam.weight - mu.weight == k


def _bounded_partitions(bounds: tuple[int, ...] | None, total: int, cap: int) -> Iterator[tuple[int, ...]]:
    # Nonincreasing sequences summing to `total`, part i at most bounds[i] (when
    # given) and at most `cap`; yielded in descending lexicographic order.
    def room(i, top):
        # most cells rows i.. can absorb when no part exceeds `top`
        return sum(min(b, top) for b in bounds[i:])

    out: list[int] = []

    def rec(i: int, remaining: int, top: int):
        if remaining == 0:
            yield tuple(out)
            return
        hi = min(top, remaining)
        if bounds is not None:
            if i >= len(bounds):
                return
            hi = min(hi, bounds[i])
        for p in range(hi, 0, -1):
            if bounds is not None and p + room(i + 1, p) < remaining:
                break
            out.append(p)
            yield from rec(i + 1, remaining - p, p)
            out.pop()

    yield from rec(0, total, cap)


def k_deletions(lam: Partition, k: int) -> DeletionDeck:
    """Every partition obtained from ``lam`` by removing exactly k cells."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if k > lam.weight:
        raise KTooLargeError(f"k={k} exceeds weight {lam.weight}")
    cap = lam.parts[0] if lam.parts else 0
    members = tuple(Partition(p) for p in _bounded_partitions(lam.parts, lam.weight - k, cap))
    return DeletionDeck(k, members)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    for p in _bounded_partitions(None, n, n):
        yield Partition(p)


def superpartitions(mu: Partition, n: int) -> Iterator[Partition]:
    """All partitions of n containing ``mu``, in descending lexicographic order."""
    if n < mu.weight:
        raise TargetTooSmallError(f"target {n} is below weight {mu.weight}")
    lower = mu.parts
    # suffix_need[i]: cells rows i.. must hold at minimum
    suffix_need = [0] * (len(lower) + 1)
    for i in range(len(lower) - 1, -1, -1):
        suffix_need[i] = suffix_need[i + 1] + lower[i]
    out: list[int] = []

    def rec(i: int, remaining: int, top: int):
        if remaining == 0:
            if i >= len(lower):
                yield Partition(tuple(out))
            return
        lo = lower[i] if i < len(lower) else 1
        need_after = suffix_need[i + 1] if i < len(lower) else 0
        hi = min(top, remaining - need_after)
        for p in range(hi, lo - 1, -1):
            out.append(p)
            yield from rec(i + 1, remaining - p, p)
            out.pop()

    yield from rec(0, n, n)

