"""Kemperman's product-set growth bounds, verified and scanned exhaustively.

Pair bound: if 1 is in A and B and ab = 1 forces a = b = 1, then
|AB| >= |A| + |B| - 1.  Iterated bound: |B^k| >= k|B| - k + 1 under the
k-tuple analogue of the unit-product condition.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .groups import FiniteGroup, GroupSubset, iterated_power, product_set

SCAN_ORDER_CAP = 16
POWER_ENUM_CAP = 10_000_000


@dataclass(frozen=True)
class PairCondition:
    contains_identity: bool
    unique_unit_product: bool

    def both(self) -> bool:
        return self.contains_identity and self.unique_unit_product


def _unit_product_forbidden_mask(A: GroupSubset) -> int:
    """Bitmask of inverses of the non-identity elements of A.

    ab = 1 with a in A means b = a^-1, so condition (ii) holds for (A, B)
    exactly when B avoids every such inverse except the identity's.
    """
    g = A.group
    mask = 0
    for a in A:
        if a != 0:
            mask |= 1 << g.inverse(a)
    return mask


def check_conditions(A: GroupSubset, B: GroupSubset) -> PairCondition:
    if A.group is not B.group:
        raise ValueError("mixed groups")
    contains = A.contains_identity() and B.contains_identity()
    unique = (B.mask & _unit_product_forbidden_mask(A)) == 0
    return PairCondition(contains, unique)


@dataclass(frozen=True)
class PairBoundReport:
    holds: bool
    product_size: int
    bound: int


def verify_pair_bound(A: GroupSubset, B: GroupSubset) -> PairBoundReport:
    """Check |AB| >= |A| + |B| - 1; the hypotheses must hold beforehand."""
    if not check_conditions(A, B).both():
        raise ValueError("hypotheses violated")
    size = len(product_set(A, B))
    bound = len(A) + len(B) - 1
    return PairBoundReport(size >= bound, size, bound)


@dataclass(frozen=True)
class PowerBoundReport:
    holds: bool
    power_size: int
    bound: int


def _power_hypothesis_holds(B: GroupSubset, k: int) -> bool:
    """True when the only k-tuple over B multiplying to 1 is all-identity.

    Layered reachability: track the set of products of j factors that used at
    least one non-identity factor; the hypothesis fails exactly when the
    identity appears in layer k.
    """
    g = B.group
    t = g.table
    members = tuple(B)
    nontrivial = B.mask & ~1
    layer = nontrivial
    for _ in range(k - 1):
        nxt = nontrivial  # all-identity prefix followed by one non-identity
        m = layer
        while m:
            x = (m & -m).bit_length() - 1
            row = t[x]
            for b in members:
                nxt |= 1 << row[b]
            m &= m - 1
        layer = nxt
    return layer & 1 == 0


def verify_power_bound(B: GroupSubset, k: int) -> PowerBoundReport:
    """Check |B^k| >= k|B| - k + 1 under the iterated hypothesis."""
    if k < 1:
        raise ValueError("power must be positive")
    if len(B) ** k > POWER_ENUM_CAP:
        raise ValueError("hypothesis check too large")
    if not B.contains_identity() or not _power_hypothesis_holds(B, k):
        raise ValueError("hypotheses violated")
    size = len(iterated_power(B, k))
    bound = k * len(B) - k + 1
    return PowerBoundReport(size >= bound, size, bound)


@dataclass
class ScanReport:
    group: str
    pairs_checked: int
    violations: list
    tight_count: int
    witness: Optional[dict]

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "pairs_checked": self.pairs_checked,
            "violations": self.violations,
            "tight_count": self.tight_count,
            "witness": self.witness,
        }


def _members_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _spread_tables(table, n):
    # byte-indexed permutation spread: aB as a mask in two table lookups
    lo_size = 1 << min(8, n)
    hi_size = 1 << max(0, n - 8)
    spreads = []
    for a in range(n):
        row = table[a]
        lo = [0] * lo_size
        for bits in range(lo_size):
            m = 0
            b = bits
            while b:
                j = (b & -b).bit_length() - 1
                m |= 1 << row[j]
                b &= b - 1
            lo[bits] = m
        hi = [0] * hi_size
        for bits in range(hi_size):
            m = 0
            b = bits
            while b:
                j = (b & -b).bit_length() - 1
                m |= 1 << row[j + 8]
                b &= b - 1
            hi[bits] = m
        spreads.append((lo, hi))
    return spreads


def _scan_chunk(table, n, lo_index, hi_index, max_size):
    """Scan A-masks with index in [lo_index, hi_index); A = 2*index + 1.

    For each A the B-masks satisfying both hypotheses are exactly
    {1} | S for submasks S of the allowed complement, enumerated in
    increasing numeric order by the (s - allowed) & allowed walk.
    """
    inverse = [row.index(0) for row in table]
    spreads = _spread_tables(table, n)
    full_free = ((1 << n) - 1) & ~1
    pairs = 0
    tight = 0
    violations = []
    witness = None
    for idx in range(lo_index, hi_index):
        a_mask = 2 * idx + 1
        size_a = a_mask.bit_count()
        if size_a > max_size:
            continue
        forbidden = 0
        for a in _members_of(a_mask & ~1):
            forbidden |= 1 << inverse[a]
        allowed = full_free & ~forbidden
        a_spreads = [spreads[a] for a in _members_of(a_mask)]
        bound_base = size_a - 1
        s = 0
        while True:
            b_mask = s | 1
            size_b = b_mask.bit_count()
            if size_b <= max_size:
                prod = 0
                blo = b_mask & 0xFF
                bhi = b_mask >> 8
                for lo_t, hi_t in a_spreads:
                    prod |= lo_t[blo] | hi_t[bhi]
                pairs += 1
                size_p = prod.bit_count()
                bound = bound_base + size_b
                if size_p < bound:
                    violations.append(
                        {
                            "A": _members_of(a_mask),
                            "B": _members_of(b_mask),
                            "product_size": size_p,
                            "bound": bound,
                        }
                    )
                elif size_p == bound:
                    tight += 1
                    if witness is None:
                        witness = {
                            "A": _members_of(a_mask),
                            "B": _members_of(b_mask),
                            "product_size": size_p,
                            "bound": bound,
                        }
            if s == allowed:
                break
            s = (s - allowed) & allowed
    return {
        "pairs_checked": pairs,
        "violations": violations,
        "tight_count": tight,
        "witness": witness,
    }


def scan_group(g: FiniteGroup, max_subset_size: Optional[int] = None,
               workers: int = 1) -> ScanReport:
    """Verify the pair bound on every (A, B) meeting conditions (i) and (ii).

    A-masks are iterated in increasing numeric order, B-masks likewise, so the
    witness is the first tight pair in that order.  The outer range may be
    partitioned across processes; merged counts are order-independent.
    """
    n = g.order
    if n > SCAN_ORDER_CAP:
        raise ValueError("group too large")
    cap = n if max_subset_size is None else max_subset_size
    total = 1 << (n - 1)
    if workers <= 1 or total < 4 * workers:
        parts = [_scan_chunk(g.table, n, 0, total, cap)]
    else:
        step = -(-total // workers)
        ranges = [(i, min(i + step, total)) for i in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futures = [
                ex.submit(_scan_chunk, g.table, n, lo, hi, cap) for lo, hi in ranges
            ]
            parts = [f.result() for f in futures]
    report = ScanReport(g.name, 0, [], 0, None)
    for part in parts:  # chunks are in ascending A order; first witness wins
        report.pairs_checked += part["pairs_checked"]
        report.violations.extend(part["violations"])
        report.tight_count += part["tight_count"]
        if report.witness is None and part["witness"] is not None:
            report.witness = part["witness"]
    return report
