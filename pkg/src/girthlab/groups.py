"""Finite groups as multiplication tables, plus subset arithmetic.

The identity is always element 0.  Tables built by the internal constructors
(cyclic, direct_product) are correct by construction and skip revalidation;
from_table runs the full battery: identity position, Latin square, and
associativity (every triple for order <= 64, 100000 seeded triples above).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from .prng import XorShift64Star

FULL_ASSOC_LIMIT = 64
ASSOC_SAMPLES = 100_000
ASSOC_SEED = 0x5EED


class FiniteGroup:
    """Group of order n given by an n x n multiplication table."""

    __slots__ = ("order", "table", "name", "_inverse", "_abelian")

    def __init__(self, table: Sequence[Sequence[int]], name: Optional[str] = None,
                 _trusted: bool = False):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("table must be square and non-empty")
        if not _trusted:
            _validate_table(rows, n)
        self.order = n
        self.table = rows
        self.name = name if name is not None else f"order-{n}"
        self._inverse: Optional[tuple[int, ...]] = None
        self._abelian: Optional[bool] = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        if self._inverse is None:
            inv = [0] * self.order
            for x in range(self.order):
                inv[x] = self.table[x].index(0)
            self._inverse = tuple(inv)
        return self._inverse[a]

    def is_abelian(self) -> bool:
        if self._abelian is None:
            t = self.table
            n = self.order
            self._abelian = all(
                t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n)
            )
        return self._abelian

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def _validate_table(rows: tuple[tuple[int, ...], ...], n: int) -> None:
    for row in rows:
        for x in row:
            if not (0 <= x < n):
                raise ValueError("not a Latin square")
    if rows[0] != tuple(range(n)) or any(rows[a][0] != a for a in range(n)):
        raise ValueError("identity not at index 0")
    ref = frozenset(range(n))
    for row in rows:
        if frozenset(row) != ref:
            raise ValueError("not a Latin square")
    for b in range(n):
        if frozenset(rows[a][b] for a in range(n)) != ref:
            raise ValueError("not a Latin square")
    if n <= FULL_ASSOC_LIMIT:
        for a in range(n):
            ra = rows[a]
            for b in range(n):
                ab = ra[b]
                rb = rows[b]
                rab = rows[ab]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise ValueError("not associative")
    else:
        rng = XorShift64Star(ASSOC_SEED)
        for _ in range(ASSOC_SAMPLES):
            a = rng.bounded(n)
            b = rng.bounded(n)
            c = rng.bounded(n)
            if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                raise ValueError("not associative")


def cyclic(n: int) -> FiniteGroup:
    """The additive group Z/nZ."""
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, name=f"Z/{n}", _trusted=True)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product with lexicographic pair encoding (a, b) -> a*|h| + b."""
    n, m = g.order, h.order
    if n * m > 1 << 20:
        raise ValueError("direct product order too large")
    table = []
    for a1 in range(n):
        for b1 in range(m):
            row = [0] * (n * m)
            ta, tb = g.table[a1], h.table[b1]
            for a2 in range(n):
                base = ta[a2] * m
                for b2 in range(m):
                    row[a2 * m + b2] = base + tb[b2]
            table.append(row)
    return FiniteGroup(table, name=f"{g.name}x{h.name}", _trusted=True)


def from_table(table: Sequence[Sequence[int]], name: Optional[str] = None) -> FiniteGroup:
    """Validated group from an explicit table; see the module docstring."""
    return FiniteGroup(table, name=name, _trusted=False)


class GroupSubset:
    """Value-semantic subset of a group's elements, stored as a bitmask."""

    __slots__ = ("group", "mask")

    def __init__(self, group: FiniteGroup, members: Iterable[int] = (), mask: Optional[int] = None):
        if mask is None:
            mask = 0
            for x in members:
                if not (0 <= x < group.order):
                    raise ValueError(f"element {x} out of range")
                mask |= 1 << x
        elif mask < 0 or mask >> group.order:
            raise ValueError("mask out of range")
        self.group = group
        self.mask = mask

    @classmethod
    def from_mask(cls, group: FiniteGroup, mask: int) -> "GroupSubset":
        return cls(group, mask=mask)

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.group.order and (self.mask >> x) & 1 == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupSubset)
            and self.group is other.group
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.mask))

    def __repr__(self) -> str:
        return f"GroupSubset({self.group.name}, {{{', '.join(map(str, self))}}})"

    def contains_identity(self) -> bool:
        return self.mask & 1 == 1

    def union(self, other: "GroupSubset") -> "GroupSubset":
        _same_group(self, other)
        return GroupSubset(self.group, mask=self.mask | other.mask)

    def intersection(self, other: "GroupSubset") -> "GroupSubset":
        _same_group(self, other)
        return GroupSubset(self.group, mask=self.mask & other.mask)

    def inverse_set(self) -> "GroupSubset":
        g = self.group
        mask = 0
        for x in self:
            mask |= 1 << g.inverse(x)
        return GroupSubset(g, mask=mask)

    def translate_right(self, x: int) -> "GroupSubset":
        """A -> Ax."""
        t = self.group.table
        mask = 0
        for a in self:
            mask |= 1 << t[a][x]
        return GroupSubset(self.group, mask=mask)

    def translate_left(self, x: int) -> "GroupSubset":
        """A -> xA."""
        row = self.group.table[x]
        mask = 0
        for a in self:
            mask |= 1 << row[a]
        return GroupSubset(self.group, mask=mask)


def _same_group(a: GroupSubset, b: GroupSubset) -> None:
    if a.group is not b.group:
        raise ValueError("mixed groups")


def product_set(A: GroupSubset, B: GroupSubset) -> GroupSubset:
    """AB = {ab : a in A, b in B}."""
    _same_group(A, B)
    t = A.group.table
    mask = 0
    bs = tuple(B)
    for a in A:
        row = t[a]
        for b in bs:
            mask |= 1 << row[b]
    return GroupSubset(A.group, mask=mask)


def iterated_power(B: GroupSubset, k: int) -> GroupSubset:
    """B^k = B * B^(k-1), k >= 1."""
    if k < 1:
        raise ValueError("power must be positive")
    acc = B
    for _ in range(k - 1):
        acc = product_set(acc, B)
    return acc


def is_subgroup(H: GroupSubset) -> bool:
    if not H.contains_identity():
        return False
    t = H.group.table
    members = tuple(H)
    for a in members:
        row = t[a]
        for b in members:
            if row[b] not in H:
                return False
    return True


def left_cosets(g: FiniteGroup, H: GroupSubset) -> list[GroupSubset]:
    """Partition of g into left cosets xH, ordered by smallest representative."""
    if H.group is not g:
        raise ValueError("mixed groups")
    if not is_subgroup(H):
        raise ValueError("not a subgroup")
    cosets = []
    remaining = (1 << g.order) - 1
    while remaining:
        x = (remaining & -remaining).bit_length() - 1
        coset = H.translate_left(x)
        cosets.append(coset)
        remaining &= ~coset.mask
    return cosets


def parse_cayley_table(text: str) -> FiniteGroup:
    """Parse the Cayley-table format: line 1 "n", then n rows of n integers."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise ValueError("line 1: expected group order")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ValueError(f"line {lineno}: expected group order") from None
    if n < 1:
        raise ValueError(f"line {lineno}: order must be positive")
    body = lines[1:]
    if len(body) != n:
        raise ValueError(f"expected {n} table rows, found {len(body)}")
    table = []
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != n:
            raise ValueError(f"line {lineno}: expected {n} entries")
        try:
            table.append([int(p) for p in parts])
        except ValueError:
            raise ValueError(f"line {lineno}: entries must be integers") from None
    return from_table(table)


def load_cayley_table(path: str) -> FiniteGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cayley_table(fh.read())
