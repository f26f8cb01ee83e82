"""Integer partitions: enumeration, conjugation, centralizer orders, dimensions.

A partition is stored as a tuple of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  Partitions double as cycle types
when indexing conjugacy classes of the symmetric group.
"""

from collections import Counter
from functools import lru_cache
from math import factorial

from .errors import PartitionParseError

Partition = tuple[int, ...]


def as_partition(parts) -> Partition:
    """Validate an iterable of parts and return it as a canonical tuple."""
    p = tuple(parts)
    for i, part in enumerate(p):
        if not isinstance(part, int) or part < 1:
            raise PartitionParseError(f"parts must be positive integers, got {part!r}")
        if i > 0 and part > p[i - 1]:
            raise PartitionParseError(
                f"parts must be weakly decreasing, got {part!r} after {p[i - 1]!r}"
            )
    return p


@lru_cache(maxsize=None)
def _partitions(n: int, max_parts) -> tuple[Partition, ...]:
    out: list[Partition] = []
    slots = n if max_parts is None else max_parts

    def rec(remaining: int, largest: int, prefix: list[int], room: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if room == 0:
            return
        top = min(largest, remaining)
        # smallest admissible first part: room parts of size `part` must cover
        # `remaining`
        for part in range(top, 0, -1):
            if part * room < remaining:
                break
            prefix.append(part)
            rec(remaining - part, part, prefix, room - 1)
            prefix.pop()

    rec(n, n, [], slots)
    return tuple(out)


def partitions_of(n: int, max_parts: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, (n) first.

    With max_parts, only partitions with at most that many parts are listed.
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    if max_parts is not None and max_parts < 0:
        raise ValueError(f"max_parts must be nonnegative, got {max_parts}")
    return _partitions(n, max_parts)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > i) for i in range(p[0]))


def z_order(p: Partition) -> int:
    """Centralizer order of a permutation of cycle type p.

    The conjugacy class of cycle type p in S_n has n!/z_order(p) elements.
    """
    z = 1
    for size, mult in Counter(p).items():
        z *= size**mult * factorial(mult)
    return z


def dimension(p: Partition) -> int:
    """Dimension of the symmetric-group irreducible labeled by p (hook lengths)."""
    if not p:
        return 1
    conj = conjugate(p)
    hooks = 1
    for i, row in enumerate(p):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    dim, rem = divmod(factorial(sum(p)), hooks)
    if rem:
        raise AssertionError(f"hook product does not divide n! for {p}")
    return dim


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated partition; the literal '-' is the empty partition."""
    s = text.strip()
    if s == "-":
        return ()
    parts: list[int] = []
    for token in s.split(","):
        tok = token.strip()
        try:
            value = int(tok)
        except ValueError:
            raise PartitionParseError(f"invalid part {tok!r}") from None
        if value < 1:
            raise PartitionParseError(f"parts must be positive, got {tok!r}")
        if parts and value > parts[-1]:
            raise PartitionParseError(
                f"parts must be weakly decreasing, got {tok!r} after {parts[-1]!r}"
            )
        parts.append(value)
    return tuple(parts)


def format_partition(p: Partition) -> str:
    """Inverse of parse_partition."""
    return ",".join(str(part) for part in p) if p else "-"
