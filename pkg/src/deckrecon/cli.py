"""Command-line interface: ``deckrecon <command> ...``.

Exit status is 0 on success, 1 when a deck cannot be reconstructed (or a
counterexample check fails) and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, TextIO

from .deletion import DeletionDeck, k_deletions
from .errors import DeckError, EmptyDeckError, ParseError, PartitionError, ReconstructionError
from .oracle import MatchMode, consistent_partitions, exhaustive_check, negative_example
from .partition import EMPTY, Partition, conjugate, normalize
from .reconstruct import reconstruct


class _UsageError(Exception):
    pass


def parse_partition(text: str) -> Partition:
    """Parse ``"4 3 1"`` style text; ``"-"`` is the empty partition."""
    tokens = text.split()
    if tokens == ["-"]:
        return EMPTY
    values = []
    for tok in tokens:
        if not tok.isdigit():
            raise ParseError(f"not a nonnegative integer: {tok!r}")
        values.append(int(tok))
    return normalize(values)


def parse_deck(lines: Iterable[str], k: int, warn: TextIO | None = None) -> DeletionDeck:
    members: list[Partition] = []
    seen: set[Partition] = set()
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        lam = parse_partition(line)
        if lam in seen:
            if warn is not None:
                print(f"warning: line {lineno}: duplicate member {lam} ignored", file=warn)
            continue
        seen.add(lam)
        members.append(lam)
    if not members:
        raise EmptyDeckError("deck has no members")
    return DeletionDeck(k, tuple(members))


def render_ferrers(lam: Partition) -> str:
    if not lam:
        return "(empty)"
    return "\n".join("#" * p for p in lam.parts)


def _read_deck(path: str, k: int) -> DeletionDeck:
    if path == "-":
        return parse_deck(sys.stdin, k, warn=sys.stderr)
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_deck(fh, k, warn=sys.stderr)
    except OSError as exc:
        raise _UsageError(f"cannot read deck file {path}: {exc.strerror}") from exc


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be a nonnegative integer, got {value}")
    return value


def cmd_show(args, out):
    lam = parse_partition(args.parts)
    print(lam, file=out)
    print(f"weight={lam.weight} length={lam.length}", file=out)
    print(render_ferrers(lam), file=out)
    return 0


def cmd_conjugate(args, out):
    print(conjugate(parse_partition(args.parts)), file=out)
    return 0


def cmd_deletions(args, out):
    lam = parse_partition(args.parts)
    deck = k_deletions(lam, args.k)
    print(f"# k={args.k} n={lam.weight} members={len(deck)}", file=out)
    out.write(deck.to_text())
    return 0


def cmd_reconstruct(args, out):
    deck = _read_deck(args.deck, args.k)
    lam, trace = reconstruct(deck, validation=args.validation)
    print(lam, file=out)
    if args.trace:
        print(trace.to_text(), file=sys.stderr)
    return 0


def cmd_oracle(args, out):
    deck = _read_deck(args.deck, args.k)
    out.write(consistent_partitions(deck, MatchMode(args.mode)).to_text())
    return 0


def cmd_sweep(args, out):
    if args.n_min > args.n_max:
        raise _UsageError(f"--n-min {args.n_min} exceeds --n-max {args.n_max}")
    for n in range(args.n_min, args.n_max + 1):
        out.write(exhaustive_check(n, args.k, workers=args.workers).to_text())
    return 0


def cmd_counterexample(args, out):
    mu, lam, low = negative_example(args.k)
    deck_mu, deck_lam = k_deletions(mu, args.k), k_deletions(lam, args.k)
    equal = deck_mu == deck_lam
    print(f"mu={mu}", file=out)
    print(f"lambda={lam}", file=out)
    print(f"meet={low}", file=out)
    print(f"weight={mu.weight}", file=out)
    print(f"deck_size={len(deck_mu)}", file=out)
    print(f"decks_equal={'yes' if equal else 'no'}", file=out)
    return 0 if equal else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deckrecon",
        description="Reconstruct integer partitions from their k-deletion decks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", help="print a partition and its Ferrers diagram")
    p.add_argument("parts")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("conjugate", help="print the conjugate partition")
    p.add_argument("parts")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("deletions", help="print the k-deletion deck of a partition")
    p.add_argument("-k", type=_nonnegative, required=True)
    p.add_argument("parts")
    p.set_defaults(func=cmd_deletions)

    p = sub.add_parser("reconstruct", help="recover a partition from its deck")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("--trace", action="store_true", help="print the case trace on stderr")
    p.add_argument("--validation", choices=["strict", "subset"], default="strict")
    p.add_argument("deck", help="deck file, or - for stdin")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("oracle", help="list every partition consistent with a deck")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("--mode", choices=["equals", "contains"], default="equals")
    p.add_argument("deck", help="deck file, or - for stdin")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="reconstruct every partition of each n in a range")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("--n-min", type=_nonnegative, required=True)
    p.add_argument("--n-max", type=_nonnegative, required=True)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("counterexample", help="show two partitions with equal k-decks")
    p.add_argument("-k", type=_positive, required=True)
    p.set_defaults(func=cmd_counterexample)
    return parser


def main(argv=None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ReconstructionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (_UsageError, ParseError, PartitionError, DeckError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
