"""Ideal enumeration and classification for finite commutative rings.

Ideals are bit-sets over element indices.  The complete lattice is the
fixpoint of pairwise sums of principal ideals, which reaches every ideal
of a finite ring.  Ids are assigned canonically: sorted by cardinality,
then by the sorted member tuple, so id 0 is always the zero ideal and the
last id the unit ideal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .rings import CapExceededError, FiniteRing

DEFAULT_IDEAL_CAP = 4096


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class IdealSet:
    """A subset of ring-element indices closed under + and ring *."""

    ring: FiniteRing = field(compare=False, repr=False)
    mask: int

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def contains(self, index: int) -> bool:
        return (self.mask >> index) & 1 == 1

    def members(self) -> list[int]:
        return list(iter_bits(self.mask))

    def is_proper(self) -> bool:
        return self.mask != (1 << self.ring.size) - 1

    def is_closed(self) -> bool:
        """Exhaustive check of the ideal axioms, for tests."""
        ring, mask = self.ring, self.mask
        if not mask & 1:
            return False
        for a in iter_bits(mask):
            for b in iter_bits(mask):
                if not (mask >> ring.add[a][b]) & 1:
                    return False
            for r in range(ring.size):
                if not (mask >> ring.mul[r][a]) & 1:
                    return False
        return True


def _additive_closure(ring: FiniteRing, mask: int) -> int:
    add = ring.add
    queue = deque(iter_bits(mask))
    while queue:
        x = queue.popleft()
        row = add[x]
        for y in list(iter_bits(mask)):
            s = row[y]
            if not (mask >> s) & 1:
                mask |= 1 << s
                queue.append(s)
    return mask


def _principal_mask(ring: FiniteRing, g: int) -> int:
    mask = 0
    for r in range(ring.size):
        mask |= 1 << ring.mul[r][g]
    return mask


def ideal_generated_by(ring: FiniteRing, gens) -> IdealSet:
    """Smallest ideal containing ``gens`` (element indices)."""
    mask = 1  # zero element
    for g in gens:
        mask |= _principal_mask(ring, g)
    return IdealSet(ring, _additive_closure(ring, mask))


def _sum_mask(ring: FiniteRing, a: int, b: int) -> int:
    add = ring.add
    out = 0
    bs = list(iter_bits(b))
    for x in iter_bits(a):
        row = add[x]
        for y in bs:
            out |= 1 << row[y]
    return out


def _product_mask(ring: FiniteRing, a: int, b: int) -> int:
    mul = ring.mul
    prods = 0
    bs = list(iter_bits(b))
    for x in iter_bits(a):
        row = mul[x]
        for y in bs:
            prods |= 1 << row[y]
    return _additive_closure(ring, prods)


def _radical_mask(ring: FiniteRing, mask: int) -> int:
    power_masks = ring.power_masks()
    out = 0
    for x in range(ring.size):
        if power_masks[x] & mask:
            out |= 1 << x
    return out


class IdealLattice:
    """All ideals of a finite ring, with prime/maximal/primary flags."""

    def __init__(self, ring: FiniteRing, masks: list[int]):
        self.ring = ring
        order = sorted(masks, key=lambda m: (m.bit_count(), tuple(iter_bits(m))))
        self.ideals = [IdealSet(ring, m) for m in order]
        self.id_by_mask = {m: i for i, m in enumerate(order)}
        full = (1 << ring.size) - 1
        self.proper = [m != full for m in order]
        self.radical_ids = [self.id_by_mask[_radical_mask(ring, m)] for m in order]
        self.prime = [self._is_prime(i) for i in range(len(order))]
        self.maximal = [self._is_maximal(i) for i in range(len(order))]
        self.primary = [self._is_primary(i) for i in range(len(order))]
        self._render_cache: dict[int, str] = {}

    def __len__(self) -> int:
        return len(self.ideals)

    @property
    def zero_id(self) -> int:
        return 0

    @property
    def unit_id(self) -> int:
        return len(self.ideals) - 1

    def mask(self, ideal_id: int) -> int:
        return self.ideals[ideal_id].mask

    def id_of(self, ideal: IdealSet | int) -> int:
        mask = ideal if isinstance(ideal, int) else ideal.mask
        return self.id_by_mask[mask]

    def _is_prime(self, i: int) -> bool:
        if not self.proper[i]:
            return False
        mask = self.ideals[i].mask
        mul = self.ring.mul
        outside = [x for x in range(self.ring.size) if not (mask >> x) & 1]
        for r in outside:
            row = mul[r]
            for s in outside:
                if (mask >> row[s]) & 1:
                    return False
        return True

    def _is_maximal(self, i: int) -> bool:
        if not self.proper[i]:
            return False
        mask = self.ideals[i].mask
        for j, other in enumerate(self.ideals):
            if j != i and self.proper[j] and other.mask | mask == other.mask:
                return False
        return True

    def _is_primary(self, i: int) -> bool:
        if not self.proper[i]:
            return False
        mask = self.ideals[i].mask
        rad = self.ideals[self.radical_ids[i]].mask
        mul = self.ring.mul
        outside_q = [x for x in range(self.ring.size) if not (mask >> x) & 1]
        outside_rad = [x for x in range(self.ring.size) if not (rad >> x) & 1]
        for r in outside_q:
            row = mul[r]
            for s in outside_rad:
                if (mask >> row[s]) & 1:
                    return False
        return True

    # -- lattice operations ------------------------------------------------

    def sum_id(self, a: int, b: int) -> int:
        return self.id_by_mask[_sum_mask(self.ring, self.mask(a), self.mask(b))]

    def product_id(self, a: int, b: int) -> int:
        return self.id_by_mask[_product_mask(self.ring, self.mask(a), self.mask(b))]

    def intersection_id(self, a: int, b: int) -> int:
        return self.id_by_mask[self.mask(a) & self.mask(b)]

    def radical_id(self, a: int) -> int:
        return self.radical_ids[a]

    def nilradical_id(self) -> int:
        return self.radical_ids[self.zero_id]

    def contains_ideal(self, a: int, b: int) -> bool:
        """True when ideal a is a subset of ideal b."""
        return self.mask(a) | self.mask(b) == self.mask(b)

    # -- rendering ----------------------------------------------------------

    def generators(self, ideal_id: int) -> list[int]:
        """A small (greedily pruned) generating set of element indices."""
        mask = self.mask(ideal_id)
        if ideal_id == self.zero_id:
            return [0]
        for g in iter_bits(mask):
            if g and _additive_closure(self.ring, 1 | _principal_mask(self.ring, g)) == mask:
                return [g]
        gens: list[int] = []
        current = 1
        for g in iter_bits(mask):
            if not (current >> g) & 1:
                gens.append(g)
                current = _additive_closure(
                    self.ring, current | _principal_mask(self.ring, g)
                )
        for g in list(gens):
            rest = [h for h in gens if h != g]
            if ideal_generated_by(self.ring, rest).mask == mask:
                gens = rest
        return gens

    def render(self, ideal_id: int) -> str:
        if ideal_id not in self._render_cache:
            names = self.ring.element_names
            gens = self.generators(ideal_id)
            self._render_cache[ideal_id] = "(" + ", ".join(names[g] for g in gens) + ")"
        return self._render_cache[ideal_id]


def enumerate_ideals(ring: FiniteRing, max_ideals: int = DEFAULT_IDEAL_CAP) -> IdealLattice:
    """Complete ideal lattice: fixpoint of pairwise sums of principal ideals."""
    masks: set[int] = set()

    def register(mask: int) -> bool:
        if mask in masks:
            return False
        if len(masks) >= max_ideals:
            raise CapExceededError(
                f"ideal count exceeds cap {max_ideals} for {ring.label}"
            )
        masks.add(mask)
        return True

    for g in range(ring.size):
        register(_additive_closure(ring, 1 | _principal_mask(ring, g)))
    queue = deque(masks)
    while queue:
        m = queue.popleft()
        for other in list(masks):
            s = _sum_mask(ring, m, other)
            if register(s):
                queue.append(s)
    return IdealLattice(ring, list(masks))


def ideal_arithmetic(lattice: IdealLattice, op: str, a: int, b: int) -> int:
    """Sum, product or intersection of two lattice ideals, as a lattice id."""
    if op == "sum":
        return lattice.sum_id(a, b)
    if op == "product":
        return lattice.product_id(a, b)
    if op == "intersection":
        return lattice.intersection_id(a, b)
    raise ValueError(f"unknown ideal operation {op!r}")


def classify_ideal(lattice: IdealLattice, a: int) -> tuple[bool, bool, bool]:
    """(is_prime, is_maximal, is_primary) for a lattice ideal."""
    return lattice.prime[a], lattice.maximal[a], lattice.primary[a]


def radical(lattice: IdealLattice, a: int) -> int:
    """Lattice id of the radical of an ideal."""
    return lattice.radical_ids[a]


def nilradical(lattice: IdealLattice) -> int:
    """Lattice id of the nilradical (radical of the zero ideal)."""
    return lattice.nilradical_id()
