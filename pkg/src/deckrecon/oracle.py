"""Brute-force ground truth for deck reconstruction.

Nothing here calls the case analysis in :mod:`deckrecon.reconstruct` except
:func:`exhaustive_check`, which compares it against enumeration.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations

from .deletion import DeletionDeck, is_k_deletion, k_deletions, partitions_of, superpartitions
from .errors import BoundNotMetError, ReconstructionError
from .partition import EMPTY, Partition, join, meet, normalize
from .reconstruct import reconstruct


class MatchMode(str, enum.Enum):
    DECK_EQUALS = "equals"
    DECK_CONTAINS = "contains"


@dataclass(frozen=True)
class ConsistencyReport:
    n: int
    k: int
    mode: MatchMode
    matches: tuple[Partition, ...]

    def to_text(self) -> str:
        lines = [f"n={self.n} k={self.k} mode={self.mode.value} matches={len(self.matches)}"]
        lines.extend(str(lam) for lam in self.matches)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SweepReport:
    n: int
    k: int
    total: int
    failures: tuple[tuple[Partition, str], ...] = field(default=())
    ambiguous_pairs: tuple[tuple[Partition, Partition], ...] = field(default=())

    def to_text(self) -> str:
        lines = [
            f"n={self.n} k={self.k} total={self.total} "
            f"failures={len(self.failures)} ambiguous={len(self.ambiguous_pairs)}"
        ]
        lines.extend(f"failure {lam} : {outcome}" for lam, outcome in self.failures)
        lines.extend(f"ambiguous {a} | {b}" for a, b in self.ambiguous_pairs)
        return "\n".join(lines) + "\n"


def consistent_partitions(deck: DeletionDeck, mode=MatchMode.DECK_EQUALS) -> ConsistencyReport:
    """Every partition of weight n whose k-deletion deck equals (or contains) ``deck``.

    Any such partition contains the join of the deck, so only superpartitions of
    the join are searched.
    """
    mode = MatchMode(mode)
    n, k = deck.n, deck.k
    mu = reduce(join, deck.members, EMPTY)
    matches: list[Partition] = []
    if mu.weight <= n:
        for lam in superpartitions(mu, n):
            if mode is MatchMode.DECK_EQUALS:
                ok = k_deletions(lam, k) == deck
            else:
                ok = all(is_k_deletion(m, lam, k) for m in deck.members)
            if ok:
                matches.append(lam)
    return ConsistencyReport(n, k, mode, tuple(matches))


def negative_example(k: int) -> tuple[Partition, Partition, Partition]:
    """Two distinct partitions of k**2 + 2k - 1 with identical k-deletion decks.

    Returns ``(mu, lam, meet(mu, lam))``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    mu = normalize([k + 1] * k + [k - 1])
    lam = normalize([k + 1] * (k - 1) + [k, k])
    return mu, lam, meet(mu, lam)


def _outcome(lam: Partition, k: int) -> str | None:
    # None means the partition was recovered (or the bound refused it).
    try:
        got, _ = reconstruct(k_deletions(lam, k))
    except BoundNotMetError:
        return None
    except ReconstructionError as exc:
        return f"{type(exc).__name__}: {exc}"
    return None if got == lam else f"returned {got}"


def _deck_key(lam: Partition, k: int) -> str:
    return k_deletions(lam, k).to_text()


def exhaustive_check(n: int, k: int, workers: int = 1) -> SweepReport:
    """Reconstruct every partition of n from its k-deck and collect disagreements.

    Below the bound reconstruction refuses with BoundNotMetError, which is not
    counted as a failure.  Partitions sharing a deck are reported pairwise.
    """
    lams = list(partitions_of(n))
    if k > n:
        return SweepReport(n, k, len(lams))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_outcome, lams, [k] * len(lams), chunksize=64))
            keys = list(pool.map(_deck_key, lams, [k] * len(lams), chunksize=64))
    else:
        outcomes = [_outcome(lam, k) for lam in lams]
        keys = [_deck_key(lam, k) for lam in lams]

    failures = tuple((lam, out) for lam, out in zip(lams, outcomes) if out is not None)
    groups: dict[str, list[Partition]] = defaultdict(list)
    for lam, key in zip(lams, keys):
        groups[key].append(lam)
    pairs = sorted(
        (pair for group in groups.values() for pair in combinations(group, 2)),
        key=lambda ab: (ab[0].parts, ab[1].parts),
        reverse=True,
    )
    return SweepReport(n, k, len(lams), failures, tuple(pairs))
