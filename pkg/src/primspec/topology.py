"""Property checkers for finite topological spaces given by closed sets.

Open sets are derived from the closed family by complementation on demand;
the closed family is the single source of truth.  All checkers are pure
functions over immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass


class TopologyAxiomError(RuntimeError):
    """The supplied family violates the closed-set axioms."""


class CoverageError(ValueError):
    """A purported cover does not cover the target subset."""


class FiniteTopology:
    """Finite topological space: ``point_count`` points plus closed sets."""

    def __init__(self, point_count: int, closed_sets, validate: bool = True):
        self.point_count = point_count
        self.closed_sets = sorted(
            {frozenset(c) for c in closed_sets}, key=lambda s: (len(s), sorted(s))
        )
        self.full = frozenset(range(point_count))
        self._closed_set_set = set(self.closed_sets)
        if validate:
            self._validate()
        self.opens = sorted(
            {self.full - c for c in self.closed_sets}, key=lambda s: (len(s), sorted(s))
        )
        self._closures: dict[int, frozenset[int]] | None = None

    def _validate(self):
        if frozenset() not in self._closed_set_set:
            raise TopologyAxiomError("missing empty closed set")
        if self.full not in self._closed_set_set:
            raise TopologyAxiomError("missing full closed set")
        for a in self.closed_sets:
            if not a <= self.full:
                raise TopologyAxiomError("closed set contains unknown points")
            for b in self.closed_sets:
                if a | b not in self._closed_set_set:
                    raise TopologyAxiomError("family not closed under union")
                if a & b not in self._closed_set_set:
                    raise TopologyAxiomError("family not closed under intersection")

    def is_closed(self, subset) -> bool:
        return frozenset(subset) in self._closed_set_set

    def closure(self, subset) -> frozenset[int]:
        wanted = frozenset(subset)
        out = self.full
        for c in self.closed_sets:
            if wanted <= c and len(c) < len(out):
                out = c
        return out

    def point_closures(self) -> dict[int, frozenset[int]]:
        if self._closures is None:
            self._closures = {x: self.closure({x}) for x in range(self.point_count)}
        return self._closures


@dataclass(frozen=True)
class SeparationResult:
    t0: bool
    t1: bool
    t2: bool
    witness: tuple[int, int] | None


def separation_axioms(t: FiniteTopology) -> SeparationResult:
    """T0/T1/T2 by exhaustive point-pair scan.

    The witness is a violating pair for the first failed axiom in
    (T0, T1, T2) order.
    """
    closures = t.point_closures()
    t0_witness = t1_witness = t2_witness = None
    for x in range(t.point_count):
        for y in range(x + 1, t.point_count):
            if closures[x] == closures[y] and t0_witness is None:
                t0_witness = (x, y)
    for x in range(t.point_count):
        if not t.is_closed({x}):
            other = next(iter(closures[x] - {x}), x)
            t1_witness = (x, other)
            break
    opens_with = [[u for u in t.opens if x in u] for x in range(t.point_count)]
    for x in range(t.point_count):
        for y in range(x + 1, t.point_count):
            if not any(
                not (u & v) for u in opens_with[x] for v in opens_with[y]
            ):
                t2_witness = (x, y)
                break
        if t2_witness:
            break
    witness = t0_witness or t1_witness or t2_witness
    return SeparationResult(
        t0_witness is None, t1_witness is None, t2_witness is None, witness
    )


def is_irreducible(
    t: FiniteTopology, subset=None
) -> tuple[bool, tuple[frozenset[int], frozenset[int]] | None]:
    """Irreducibility of a subspace (default: the whole space).

    Returns the verdict plus, when reducible, two proper relatively-closed
    subsets covering the subspace.  The empty set is not irreducible.
    """
    space = t.full if subset is None else frozenset(subset)
    if not space:
        return False, None
    relative = sorted(
        {c & space for c in t.closed_sets}, key=lambda s: (len(s), sorted(s))
    )
    proper = [c for c in relative if c != space]
    for i, a in enumerate(proper):
        for b in proper[i + 1 :]:
            if a | b == space:
                return False, (a, b)
    return True, None


def irreducible_open_characterization(t: FiniteTopology, subset=None) -> bool:
    """Irreducibility via "any two nonempty relatively-open sets intersect"."""
    space = t.full if subset is None else frozenset(subset)
    if not space:
        return False
    rel_opens = [u & space for u in t.opens]
    nonempty = [u for u in rel_opens if u]
    return all(a & b for a in nonempty for b in nonempty)


def irreducible_closed_with_generic_points(
    t: FiniteTopology,
) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Each irreducible member of the closed family with its generic points.

    A generic point of a closed set C is a point whose closure equals C.
    """
    closures = t.point_closures()
    out = []
    for c in t.closed_sets:
        if is_irreducible(t, c)[0]:
            generics = frozenset(x for x in range(t.point_count) if closures[x] == c)
            out.append((c, generics))
    return out


def is_sober(t: FiniteTopology) -> bool:
    """Every irreducible closed set has exactly one generic point."""
    return all(
        len(generics) == 1
        for _, generics in irreducible_closed_with_generic_points(t)
    )


def is_quasi_compact(t: FiniteTopology, subset, cover) -> list[int]:
    """Greedy finite subcover of ``subset`` from ``cover`` (a list of opens).

    Returns indices into ``cover``; raises CoverageError when the family
    does not cover the subset.
    """
    target = frozenset(subset)
    cover = [frozenset(c) for c in cover]
    union: set[int] = set()
    for c in cover:
        union |= c
    if not target <= union:
        raise CoverageError(f"family misses points {sorted(target - union)}")
    remaining = set(target)
    chosen: list[int] = []
    while remaining:
        best, best_gain = -1, 0
        for i, c in enumerate(cover):
            gain = len(c & remaining)
            if gain > best_gain:
                best, best_gain = i, gain
        chosen.append(best)
        remaining -= cover[best]
    return chosen


def quasi_compact_opens(t: FiniteTopology) -> list[frozenset[int]]:
    """Opens certified quasi-compact by running the subcover extractor."""
    out = []
    for u in t.opens:
        is_quasi_compact(t, u, t.opens)
        out.append(u)
    return out


def is_spectral(t: FiniteTopology, candidate_base=None) -> bool:
    """Quasi-compact + sober + a base of quasi-compact opens closed under
    pairwise intersection.

    When ``candidate_base`` is given it is used as the base family;
    otherwise all quasi-compact opens are used.
    """
    try:
        is_quasi_compact(t, t.full, t.opens)
    except CoverageError:
        return False
    if not is_sober(t):
        return False
    qc = set(quasi_compact_opens(t))
    family = (
        sorted({frozenset(b) for b in candidate_base}, key=lambda s: (len(s), sorted(s)))
        if candidate_base is not None
        else list(qc)
    )
    if any(b not in qc for b in family):
        return False
    family_set = set(family)
    for a in family:
        for b in family:
            if a & b not in family_set:
                return False
    for u in t.opens:
        union: set[int] = set()
        for b in family:
            if b <= u:
                union |= b
        if union != u:
            return False
    return True


def is_supercompact(t: FiniteTopology):
    """Every open cover of the space contains the space itself.

    Equivalent linear criterion: the proper opens do not cover the space.
    Returns (True, uncovered point) or (False, covering family of proper opens).
    """
    proper = [u for u in t.opens if u != t.full]
    union: set[int] = set()
    for u in proper:
        union |= u
    if union != t.full:
        missing = min(t.full - union) if t.full else None
        return True, missing
    chosen = is_quasi_compact(t, t.full, proper)
    return False, [proper[i] for i in chosen]
