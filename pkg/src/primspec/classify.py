"""Ring-level predicates and the property-verification suite.

``analyze_ring`` bundles ring, ideal lattice, both spectra and the
classification record; ``verify_theorems`` evaluates every checked law on
that bundle, reporting each biconditional with both sides computed
independently.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .ideals import (
    DEFAULT_IDEAL_CAP,
    IdealLattice,
    enumerate_ideals,
    ideal_generated_by,
)
from .rings import (
    DEFAULT_ELEMENT_CAP,
    CapExceededError,
    FiniteRing,
    RingSpecExpr,
    build_ring,
    parse_ring_spec,
    unit_and_nilpotent_flags,
)
from .spectra import Spectrum, build_spectrum
from .topology import (
    is_irreducible,
    is_quasi_compact,
    is_sober,
    is_spectral,
    is_supercompact,
    separation_axioms,
)


@dataclass
class RingClassification:
    is_field: bool
    is_local: bool
    is_zero_dimensional: bool
    is_p_ring: bool
    is_w_ring: bool | None
    krull_dimension: int
    maximal_ideals: list[int]
    prime_ideals: list[int]
    primary_ideals: list[int]
    w_ring_witness: str | None = None


def classify_ring(lattice: IdealLattice, max_prim_for_w: int = 16) -> RingClassification:
    """Field/local/zero-dimensional/P-ring/W-ring flags plus ideal id lists."""
    primes = [i for i in range(len(lattice)) if lattice.prime[i]]
    maximals = [i for i in range(len(lattice)) if lattice.maximal[i]]
    primaries = [i for i in range(len(lattice)) if lattice.primary[i]]
    w, w_witness = is_w_ring(lattice, max_prim_for_w)
    return RingClassification(
        is_field=len(lattice) == 2,
        is_local=len(maximals) == 1,
        is_zero_dimensional=all(lattice.maximal[i] for i in primes),
        is_p_ring=all(lattice.maximal[i] for i in primaries),
        is_w_ring=w,
        krull_dimension=_krull_dimension(lattice, primes),
        maximal_ideals=maximals,
        prime_ideals=primes,
        primary_ideals=primaries,
        w_ring_witness=w_witness,
    )


def _krull_dimension(lattice: IdealLattice, primes: list[int]) -> int:
    longest = {p: 0 for p in primes}
    for p in sorted(primes, key=lambda i: lattice.mask(i).bit_count(), reverse=True):
        for q in primes:
            if q != p and lattice.contains_ideal(p, q):
                longest[p] = max(longest[p], longest[q] + 1)
    return max(longest.values(), default=0)


def is_w_ring(
    lattice: IdealLattice, max_prim: int = 16
) -> tuple[bool | None, str | None]:
    """Does every proper ideal have exactly one irredundant representation
    as an intersection of primary ideals?

    The scan is exhaustive over subsets of Prim(R); above ``max_prim``
    points the answer is unknown (None), never guessed.  The unit ideal is
    excluded (it is the empty intersection by convention).
    """
    primaries = [i for i in range(len(lattice)) if lattice.primary[i]]
    if len(primaries) > max_prim:
        return None, f"Prim has {len(primaries)} points, exhaustive scan capped"
    full = (1 << lattice.ring.size) - 1
    reps: dict[int, list[tuple[int, ...]]] = {}
    for size in range(1, len(primaries) + 1):
        for combo in itertools.combinations(primaries, size):
            meet = full
            for i in combo:
                meet &= lattice.mask(i)
            irredundant = True
            for drop in range(size):
                rest = full
                for j, i in enumerate(combo):
                    if j != drop:
                        rest &= lattice.mask(i)
                if rest == meet:
                    irredundant = False
                    break
            if irredundant:
                reps.setdefault(meet, []).append(combo)
    for ideal_id in range(len(lattice)):
        if not lattice.proper[ideal_id]:
            continue
        found = reps.get(lattice.mask(ideal_id), [])
        if len(found) != 1:
            shown = [
                "{" + ", ".join(lattice.render(i) for i in combo) + "}"
                for combo in found
            ]
            return False, (
                f"ideal {lattice.render(ideal_id)} has {len(found)} "
                f"irredundant representations: {shown}"
            )
    return True, None


def star_condition(
    lattice: IdealLattice, spectrum: Spectrum
) -> tuple[bool, str | None]:
    """Single-member covering property of the basic opens.

    For each nonunit r with a nonempty basic open X_r, the only candidate
    violating family is F(r) = {nonzero s : X_s does not contain X_r}; the
    property fails exactly when the union of F(r)'s basic opens covers X_r.
    Units have X_r equal to the whole space and are skipped.
    """
    ring = lattice.ring
    opens = [spectrum.basic_open(r) for r in range(ring.size)]
    full = spectrum.all_points()
    for r in range(ring.size):
        xr = opens[r]
        if not xr or xr == full:
            continue
        union: set[int] = set()
        family = []
        for s in range(1, ring.size):
            if not xr <= opens[s]:
                union |= opens[s]
                family.append(s)
        if xr <= union:
            names = ring.element_names
            shown = [names[s] for s in family if opens[s]]
            return False, f"X_{names[r]} covered by basic opens of {shown}"
    return True, None


@dataclass
class AConditionsResult:
    a1: bool
    a2: bool
    witness: str | None


def a_conditions(
    lattice: IdealLattice,
    family: list[int],
    mode: str = "A2_original",
    subset_cap: int = 4,
    samples: int = 200,
    seed: int = 0,
) -> AConditionsResult:
    """A1 (family intersects to zero) and A2 in either formulation.

    ``A2_original``: every element admits one exponent n with a^n in I for
    every family member I whose radical contains a.  ``A2_radical_form``:
    radicals commute with intersections over subfamilies, exhaustively up
    to ``subset_cap`` members plus seeded random larger subfamilies.
    """
    if not family:
        raise ValueError("family must be nonempty")
    ring = lattice.ring
    full = (1 << ring.size) - 1
    meet = full
    for i in family:
        meet &= lattice.mask(i)
    a1 = meet == 1
    if mode == "A2_original":
        # once a^n lands in an ideal all later powers stay, so a uniform
        # exponent exists exactly when a per-ideal exponent exists for
        # every family member whose radical contains a
        power_masks = ring.power_masks()
        for a in range(ring.size):
            for i in family:
                imask = lattice.mask(i)
                if power_masks[a] & imask == 0:
                    continue  # a outside the radical of I
                cur = a
                seen = set()
                while not (imask >> cur) & 1:
                    seen.add(cur)
                    cur = ring.mul[cur][a]
                    if cur in seen:
                        return AConditionsResult(
                            a1,
                            False,
                            f"element {ring.element_names[a]} in the radical of "
                            f"{lattice.render(i)} with no power inside",
                        )
        return AConditionsResult(a1, True, None)
    if mode == "A2_radical_form":
        rng = random.Random(seed)
        subfamilies: list[tuple[int, ...]] = []
        for size in range(1, min(subset_cap, len(family)) + 1):
            subfamilies.extend(itertools.combinations(family, size))
        if len(family) > subset_cap:
            for _ in range(samples):
                size = rng.randint(subset_cap + 1, len(family))
                subfamilies.append(tuple(sorted(rng.sample(family, size))))
        for gamma in subfamilies:
            meet_g = full
            rad_meet = full
            for i in gamma:
                meet_g &= lattice.mask(i)
                rad_meet &= lattice.mask(lattice.radical_ids[i])
            rad_of_meet = lattice.mask(lattice.radical_ids[lattice.id_of(meet_g)])
            if rad_of_meet != rad_meet:
                shown = "{" + ", ".join(lattice.render(i) for i in gamma) + "}"
                return AConditionsResult(
                    a1, False, f"radical/intersection mismatch on {shown}"
                )
        return AConditionsResult(a1, True, None)
    raise ValueError(f"unknown A2 mode {mode!r}")


def closure_identity_check(
    spectrum: Spectrum,
    exhaustive_limit: int = 10,
    samples: int = 1000,
    seed: int = 0,
) -> tuple[bool, str | None]:
    """closure(Y) == variety(xi(Y)) over point subsets.

    Exhaustive over all subsets up to ``exhaustive_limit`` points, otherwise
    the empty/full sets plus ``samples`` seeded random subsets.  The closure
    side comes from the closed family alone, so the two sides are computed
    independently.
    """
    n_pts = len(spectrum.points)
    if n_pts <= exhaustive_limit:
        candidates = (
            frozenset(c)
            for size in range(n_pts + 1)
            for c in itertools.combinations(range(n_pts), size)
        )
    else:
        rng = random.Random(seed)
        sampled = [frozenset(), spectrum.all_points()]
        for _ in range(samples):
            size = rng.randint(0, n_pts)
            sampled.append(frozenset(rng.sample(range(n_pts), size)))
        candidates = iter(sampled)
    for y in candidates:
        if spectrum.closure(y) != spectrum.variety(spectrum.xi(y)):
            return False, spectrum.render_point_set(y)
    return True, None


# ---------------------------------------------------------------------------
# Analysis bundle and the verification suite


@dataclass
class RingAnalysis:
    spec: RingSpecExpr
    ring: FiniteRing
    lattice: IdealLattice
    prim: Spectrum
    primes: Spectrum
    classification: RingClassification


def analyze_ring(
    spec: RingSpecExpr | str,
    max_elements: int = DEFAULT_ELEMENT_CAP,
    max_ideals: int = DEFAULT_IDEAL_CAP,
) -> RingAnalysis:
    """Build ring, lattice, both spectra and the classification record."""
    if isinstance(spec, str):
        spec = parse_ring_spec(spec, max_elements)
    ring = build_ring(spec, max_elements)
    lattice = enumerate_ideals(ring, max_ideals)
    return RingAnalysis(
        spec=spec,
        ring=ring,
        lattice=lattice,
        prim=build_spectrum(lattice, "primary"),
        primes=build_spectrum(lattice, "prime"),
        classification=classify_ring(lattice),
    )


@dataclass
class TheoremEntry:
    entry_id: str
    claim: str
    applicable: bool
    lhs: bool | None
    rhs: bool | None
    passed: bool
    witness: str | None = None


# entry ids and claims, in report order
THEOREM_CLAIMS: dict[str, str] = {
    "variety-extremes": "the zero ideal cuts out every point, the unit ideal none",
    "variety-product-union": (
        "varieties of intersections and products equal the union of varieties"
    ),
    "variety-sum-intersection": (
        "varieties of sums equal the intersection of varieties"
    ),
    "variety-generators": (
        "an element set and the ideal it generates cut out the same variety"
    ),
    "variety-antitone": "larger ideals cut out smaller varieties",
    "variety-radical-invariance": (
        "an ideal and its radical cut out the same variety"
    ),
    "basic-opens-form-base": (
        "single-element opens form a base; zero gives the empty open and "
        "units the full one"
    ),
    "basic-open-radical-test": (
        "two elements open the same basic set exactly when their principal "
        "ideals share a radical"
    ),
    "basic-open-product": (
        "the basic open of a product is the intersection of basic opens"
    ),
    "basic-open-empty-iff-nilpotent": (
        "a basic open is empty exactly for nilpotent elements"
    ),
    "basic-open-quasi-compact": (
        "every cover of a basic open by basic opens admits a finite subcover"
    ),
    "space-quasi-compact": "the whole space is quasi-compact",
    "single-member-cover-two-primes": (
        "basic-open covers collapse to a single member exactly when there "
        "are at most two nonzero prime ideals"
    ),
    "uniform-exponent-mode-agreement": (
        "the uniform-exponent condition matches the radical-intersection "
        "formulation on every sampled family"
    ),
    "uniform-exponent-zero-dimensional": (
        "the uniform-exponent condition on the all-ideal and all-primary "
        "families holds exactly for zero-dimensional rings"
    ),
    "closure-via-ideal-intersection": (
        "closures agree with the variety of the intersected ideals "
        "(zero-dimensional rings)"
    ),
    "point-closure-is-variety": "a point's closure is the variety of its ideal",
    "specialization-radical-test": (
        "one point lies in another's closure exactly when the ideal sits "
        "inside the other's radical"
    ),
    "t0-iff-variety-injective": (
        "the space is T0 exactly when distinct points cut out distinct varieties"
    ),
    "p-ring-iff-t0": "every primary ideal is maximal exactly when the space is T0",
    "p-ring-iff-t2": "every primary ideal is maximal exactly when the space is T2",
    "separation-equivalence": (
        "T0, T1, T2 and the all-primary-maximal property coincide"
    ),
    "point-varieties-irreducible": "the variety of every point is irreducible",
    "irreducible-iff-nilradical-primary": (
        "the space is irreducible exactly when the nilradical is primary"
    ),
    "t0-iff-sober": (
        "under unique primary-intersection representations, T0 and sobriety "
        "coincide"
    ),
    "spectral-iff-t0": (
        "under unique primary-intersection representations, spectrality and "
        "T0 coincide"
    ),
    "local-iff-supercompact": (
        "the ring is local exactly when the space is supercompact"
    ),
}


@dataclass
class TheoremReport:
    ring_label: str
    seed: int
    entries: list[TheoremEntry] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[TheoremEntry]:
        return [e for e in self.entries if not e.passed]

    def entry(self, entry_id: str) -> TheoremEntry:
        for e in self.entries:
            if e.entry_id == entry_id:
                return e
        raise KeyError(entry_id)


def _law(report, entry_id, holds: bool, witness: str | None = None):
    report.entries.append(
        TheoremEntry(entry_id, THEOREM_CLAIMS[entry_id], True, holds, True, holds, witness)
    )


def _iff(report, entry_id, lhs, rhs, witness=None, applicable=True):
    passed = (not applicable) or lhs == rhs
    report.entries.append(
        TheoremEntry(
            entry_id,
            THEOREM_CLAIMS[entry_id],
            applicable,
            lhs if applicable else None,
            rhs if applicable else None,
            passed,
            witness if not passed or not applicable else None,
        )
    )


def verify_theorems(
    target: RingAnalysis | RingSpecExpr | str,
    seed: int = 0,
    closure_samples: int = 1000,
    max_elements: int = DEFAULT_ELEMENT_CAP,
    max_ideals: int = DEFAULT_IDEAL_CAP,
) -> TheoremReport:
    """Evaluate every checked law for one ring; THEOREM_CLAIMS lists them.

    A cap overflow while building the ring or its lattice yields a report
    with every entry marked skipped instead of raising.
    """
    if isinstance(target, RingAnalysis):
        a = target
    else:
        try:
            a = analyze_ring(target, max_elements, max_ideals)
        except CapExceededError as exc:
            report = TheoremReport(str(target), seed)
            for entry_id, claim in THEOREM_CLAIMS.items():
                report.entries.append(
                    TheoremEntry(
                        entry_id, claim, False, None, None, True, f"skipped: {exc}"
                    )
                )
            return report
    ring, lattice, prim = a.ring, a.lattice, a.prim
    cls = a.classification
    rng = random.Random(seed)
    report = TheoremReport(ring.label, seed)
    topo = prim.topology()
    n_ideals = len(lattice)
    all_pts = prim.all_points()
    varieties = [prim.variety(i) for i in range(n_ideals)]
    x = [prim.basic_open(r) for r in range(ring.size)]
    names = ring.element_names

    # variety laws ---------------------------------------------------------
    _law(
        report,
        "variety-extremes",
        varieties[lattice.zero_id] == all_pts
        and varieties[lattice.unit_id] == frozenset(),
    )

    holds, witness = True, None
    for i in range(n_ideals):
        for j in range(n_ideals):
            union = varieties[i] | varieties[j]
            if (
                varieties[lattice.intersection_id(i, j)] != union
                or varieties[lattice.product_id(i, j)] != union
            ):
                holds, witness = False, f"{lattice.render(i)}, {lattice.render(j)}"
                break
        if not holds:
            break
    _law(report, "variety-product-union", holds, witness)

    holds, witness = True, None
    for i in range(n_ideals):
        for j in range(n_ideals):
            if varieties[lattice.sum_id(i, j)] != varieties[i] & varieties[j]:
                holds, witness = False, f"{lattice.render(i)}, {lattice.render(j)}"
    _law(report, "variety-sum-intersection", holds, witness)

    subsets = [frozenset(), frozenset({0}), frozenset({ring.one_index})]
    subsets += [frozenset({r}) for r in range(ring.size)]
    for _ in range(30):
        size = rng.randint(0, min(4, ring.size))
        subsets.append(frozenset(rng.sample(range(ring.size), size)))
    holds, witness = True, None
    for s in subsets:
        gen = lattice.id_of(ideal_generated_by(ring, s))
        if prim.variety_of_elements(s) != varieties[gen]:
            holds, witness = False, f"S={sorted(s)}"
            break
    _law(report, "variety-generators", holds, witness)

    holds, witness = True, None
    for i in range(n_ideals):
        for j in range(n_ideals):
            if lattice.contains_ideal(i, j) and not varieties[j] <= varieties[i]:
                holds, witness = False, f"{lattice.render(i)} in {lattice.render(j)}"
    _law(report, "variety-antitone", holds, witness)

    holds, witness = True, None
    for i in range(n_ideals):
        if varieties[i] != varieties[lattice.radical_ids[i]]:
            holds, witness = False, lattice.render(i)
    _law(report, "variety-radical-invariance", holds, witness)

    # basic opens ------------------------------------------------------------
    base_ok, base_witness = prim.is_base()
    unit_laws = x[0] == frozenset() and x[ring.one_index] == all_pts
    for r in range(ring.size):
        if unit_and_nilpotent_flags(ring, r)[0] and x[r] != all_pts:
            unit_laws = False
    _law(
        report,
        "basic-opens-form-base",
        base_ok and unit_laws,
        None if base_ok else f"open {sorted(base_witness)} is not a union of basics",
    )

    holds, witness = True, None
    principal_rads = [
        lattice.mask(lattice.radical_ids[lattice.id_of(ideal_generated_by(ring, [r]))])
        for r in range(ring.size)
    ]
    for r in range(ring.size):
        for s in range(ring.size):
            if (x[r] == x[s]) != (principal_rads[r] == principal_rads[s]):
                holds, witness = False, f"r={names[r]}, s={names[s]}"
    _law(report, "basic-open-radical-test", holds, witness)

    holds, witness = True, None
    for r in range(ring.size):
        for s in range(ring.size):
            if x[ring.mul[r][s]] != x[r] & x[s]:
                holds, witness = False, f"r={names[r]}, s={names[s]}"
    _law(report, "basic-open-product", holds, witness)

    holds, witness = True, None
    for r in range(ring.size):
        if (x[r] == frozenset()) != unit_and_nilpotent_flags(ring, r)[1]:
            holds, witness = False, names[r]
    _law(report, "basic-open-empty-iff-nilpotent", holds, witness)

    holds, witness = True, None
    distinct_opens = prim.basic_open_family()
    for r in range(ring.size):
        chosen = is_quasi_compact(topo, x[r], distinct_opens)
        covered: set[int] = set()
        for i in chosen:
            covered |= distinct_opens[i]
        if not x[r] <= covered:
            holds, witness = False, names[r]
    _law(report, "basic-open-quasi-compact", holds, witness)

    chosen = is_quasi_compact(topo, all_pts, distinct_opens)
    covered = set()
    for i in chosen:
        covered |= distinct_opens[i]
    _law(report, "space-quasi-compact", all_pts <= covered)

    # star condition ---------------------------------------------------------
    nonzero_primes = [i for i in cls.prime_ideals if lattice.mask(i) != 1]
    hypothesis = all(lattice.maximal[i] for i in nonzero_primes)
    star, star_witness = star_condition(lattice, prim)
    _iff(
        report,
        "single-member-cover-two-primes",
        star,
        len(nonzero_primes) <= 2,
        star_witness,
        applicable=hypothesis,
    )

    # uniform exponents ---------------------------------------------------
    all_ids = list(range(n_ideals))
    primary_ids = cls.primary_ideals
    sampled_families = [all_ids, primary_ids or all_ids]
    for _ in range(10):
        size = rng.randint(1, n_ideals)
        sampled_families.append(sorted(rng.sample(all_ids, size)))
    holds, witness = True, None
    for fam in sampled_families:
        orig = a_conditions(lattice, fam, "A2_original", seed=seed).a2
        radf = a_conditions(lattice, fam, "A2_radical_form", seed=seed).a2
        if orig != radf:
            holds, witness = False, f"family of {len(fam)} ideals disagrees"
    _law(report, "uniform-exponent-mode-agreement", holds, witness)

    a2_values = [
        a_conditions(lattice, fam, mode, seed=seed).a2
        for fam in (all_ids, primary_ids or all_ids)
        for mode in ("A2_original", "A2_radical_form")
    ]
    _iff(
        report,
        "uniform-exponent-zero-dimensional",
        all(a2_values),
        cls.is_zero_dimensional,
    )

    # closures --------------------------------------------------------------
    holds, witness = closure_identity_check(prim, samples=closure_samples, seed=seed)
    _iff(
        report,
        "closure-via-ideal-intersection",
        holds,
        True,
        witness,
        applicable=cls.is_zero_dimensional,
    )

    holds, witness = True, None
    for pos, ideal_id in enumerate(prim.points):
        if prim.closure({pos}) != varieties[ideal_id]:
            holds, witness = False, prim.render_point(pos)
    _law(report, "point-closure-is-variety", holds, witness)

    holds, witness = True, None
    for pos_i, i in enumerate(prim.points):
        closure_i = prim.closure({pos_i})
        for pos_j, j in enumerate(prim.points):
            expected = lattice.mask(i) & ~lattice.mask(lattice.radical_ids[j]) == 0
            if (pos_j in closure_i) != expected:
                holds, witness = False, f"{lattice.render(i)}, {lattice.render(j)}"
    _law(report, "specialization-radical-test", holds, witness)

    # separation ------------------------------------------------------------
    sep = separation_axioms(topo)
    injective = all(
        varieties[i] != varieties[j] for i in prim.points for j in prim.points if i < j
    )
    _iff(report, "t0-iff-variety-injective", sep.t0, injective)
    _iff(report, "p-ring-iff-t0", cls.is_p_ring, sep.t0)
    _iff(report, "p-ring-iff-t2", cls.is_p_ring, sep.t2)
    four = {cls.is_p_ring, sep.t0, sep.t1, sep.t2}
    _law(
        report,
        "separation-equivalence",
        len(four) == 1,
        None if len(four) == 1 else f"t0={sep.t0} t1={sep.t1} t2={sep.t2}",
    )

    holds, witness = True, None
    for pos, ideal_id in enumerate(prim.points):
        if not is_irreducible(topo, varieties[ideal_id])[0]:
            holds, witness = False, prim.render_point(pos)
    _law(report, "point-varieties-irreducible", holds, witness)

    nil = lattice.nilradical_id()
    _iff(
        report,
        "irreducible-iff-nilradical-primary",
        is_irreducible(topo)[0],
        lattice.primary[nil],
    )

    w_known = cls.is_w_ring is True
    sober = is_sober(topo)
    _iff(
        report,
        "t0-iff-sober",
        sep.t0 if w_known else None,
        sober if w_known else None,
        cls.w_ring_witness,
        applicable=w_known,
    )
    spectral = is_spectral(topo, prim.basic_open_family())
    _iff(
        report,
        "spectral-iff-t0",
        spectral if w_known else None,
        sep.t0 if w_known else None,
        cls.w_ring_witness,
        applicable=w_known,
    )

    supercompact, sc_witness = is_supercompact(topo)
    _iff(
        report,
        "local-iff-supercompact",
        cls.is_local,
        supercompact,
        str(sc_witness),
    )
    return report
