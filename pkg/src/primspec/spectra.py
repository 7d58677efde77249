"""Prime and primary spectra of finite rings as explicit topological spaces.

The primary spectrum has point set Prim(R) (all primary ideals) and closed
sets ``variety(I) = {Q : I contained in the radical of Q}``; the prime
spectrum uses the classical ``{P : I contained in P}``.  Closed sets are
stored deduplicated, each with back-references to every generating ideal.
"""

from __future__ import annotations

from .ideals import IdealLattice, mask_of
from .topology import FiniteTopology, TopologyAxiomError


class Spectrum:
    """Point set plus deduplicated closed-set family for one variety kind."""

    def __init__(self, lattice: IdealLattice, kind: str):
        if kind not in ("prime", "primary"):
            raise ValueError(f"unknown spectrum kind {kind!r}")
        self.lattice = lattice
        self.kind = kind
        flags = lattice.prime if kind == "prime" else lattice.primary
        self.points = [i for i in range(len(lattice)) if flags[i]]
        self.position = {ideal_id: pos for pos, ideal_id in enumerate(self.points)}
        if kind == "prime":
            self._point_masks = [lattice.mask(i) for i in self.points]
        else:
            self._point_masks = [
                lattice.mask(lattice.radical_ids[i]) for i in self.points
            ]
        by_set: dict[frozenset[int], list[int]] = {}
        for ideal_id in range(len(lattice)):
            closed = self._variety_of_mask(lattice.mask(ideal_id))
            by_set.setdefault(closed, []).append(ideal_id)
        self.closed_sets = sorted(by_set, key=lambda s: (len(s), sorted(s)))
        self.closed_index = {s: i for i, s in enumerate(self.closed_sets)}
        self.generating_ideals = [by_set[s] for s in self.closed_sets]
        self.variety_index_by_ideal = {
            ideal_id: self.closed_index[self._variety_of_mask(lattice.mask(ideal_id))]
            for ideal_id in range(len(lattice))
        }
        self._verify_axioms()
        self._basic_opens: list[frozenset[int]] | None = None

    # -- varieties -----------------------------------------------------------

    def _variety_of_mask(self, element_mask: int) -> frozenset[int]:
        return frozenset(
            pos
            for pos, pm in enumerate(self._point_masks)
            if element_mask & ~pm == 0
        )

    def variety(self, ideal_id: int) -> frozenset[int]:
        """Closed set of an ideal, as a set of point positions."""
        return self.closed_sets[self.variety_index_by_ideal[ideal_id]]

    def variety_of_elements(self, elements) -> frozenset[int]:
        """Closed set of an arbitrary element subset, straight from the definition."""
        return self._variety_of_mask(mask_of(elements))

    def basic_open(self, r: int) -> frozenset[int]:
        """Complement of the variety of a single element."""
        return self.all_points() - self._variety_of_mask(1 << r)

    def all_points(self) -> frozenset[int]:
        return frozenset(range(len(self.points)))

    def basic_open_family(self) -> list[frozenset[int]]:
        """Deduplicated basic opens, canonically ordered."""
        if self._basic_opens is None:
            distinct = {self.basic_open(r) for r in range(self.lattice.ring.size)}
            self._basic_opens = sorted(distinct, key=lambda s: (len(s), sorted(s)))
        return self._basic_opens

    # -- topology ------------------------------------------------------------

    def topology(self) -> FiniteTopology:
        return FiniteTopology(len(self.points), self.closed_sets)

    def closure(self, point_set) -> frozenset[int]:
        """Smallest closed superset; computed from the closed family alone."""
        wanted = frozenset(point_set)
        out = self.all_points()
        for closed in self.closed_sets:
            if wanted <= closed and len(closed) < len(out):
                out = closed
        return out

    def xi(self, point_set) -> int:
        """Lattice id of the intersection of the ideals underlying the points.

        The empty set yields the unit ideal (empty-intersection convention).
        """
        points = sorted(point_set)
        if not points:
            return self.lattice.unit_id
        mask = (1 << self.lattice.ring.size) - 1
        for pos in points:
            mask &= self.lattice.mask(self.points[pos])
        return self.lattice.id_of(mask)

    def is_base(self) -> tuple[bool, frozenset[int] | None]:
        """Do the basic opens generate every open set by union?"""
        basics = self.basic_open_family()
        full = self.all_points()
        for closed in self.closed_sets:
            open_set = full - closed
            union: set[int] = set()
            for b in basics:
                if b <= open_set:
                    union |= b
            if union != open_set:
                return False, open_set
        return True, None

    def render_point(self, pos: int) -> str:
        return self.lattice.render(self.points[pos])

    def render_point_set(self, point_set) -> str:
        inner = ", ".join(self.render_point(p) for p in sorted(point_set))
        return "{" + inner + "}"

    # -- construction checks ---------------------------------------------------

    def _verify_axioms(self):
        family = set(self.closed_sets)
        full = self.all_points()
        if frozenset() not in family:
            raise TopologyAxiomError("closed family lacks the empty set")
        if full not in family:
            raise TopologyAxiomError("closed family lacks the full point set")
        for a in self.closed_sets:
            for b in self.closed_sets:
                if a | b not in family:
                    raise TopologyAxiomError("closed family not closed under union")
                if a & b not in family:
                    raise TopologyAxiomError(
                        "closed family not closed under intersection"
                    )


def build_spectrum(lattice: IdealLattice, kind: str) -> Spectrum:
    """Spectrum of the given kind with its closed-set family verified."""
    return Spectrum(lattice, kind)


def v_rad(spectrum: Spectrum, subset) -> frozenset[int]:
    """Variety of an ideal id or of a set of element indices."""
    if spectrum.kind != "primary":
        raise ValueError("v_rad is defined on the primary spectrum")
    if isinstance(subset, int):
        return spectrum.variety(subset)
    return spectrum.variety_of_elements(subset)


def prime_variety(spectrum: Spectrum, ideal_id: int) -> frozenset[int]:
    """Classical variety of an ideal on the prime spectrum."""
    if spectrum.kind != "prime":
        raise ValueError("prime_variety is defined on the prime spectrum")
    return spectrum.variety(ideal_id)
