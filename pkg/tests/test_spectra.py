"""Spectra: varieties, basic opens, closures, xi, and the variety laws."""

import itertools

import pytest

from primspec.ideals import enumerate_ideals, ideal_generated_by, mask_of
from primspec.rings import build_ring, parse_ring_spec, unit_and_nilpotent_flags
from primspec.spectra import build_spectrum, prime_variety, v_rad

LAW_RINGS = [
    "Zn(8)",
    "Zn(6)",
    "Zn(12)",
    "Zn(30)",
    "Quot(GF(2), x^3)",
    "Quot(Zn(4), x^2+x+1)",
    "Prod(GF(2), GF(2))",
]


def _setup(text):
    ring = build_ring(parse_ring_spec(text))
    lattice = enumerate_ideals(ring)
    return ring, lattice, build_spectrum(lattice, "primary")


def _pos(spectrum, members):
    return spectrum.position[spectrum.lattice.id_by_mask[mask_of(members)]]


def test_prim_z8():
    ring, lat, prim = _setup("Zn(8)")
    assert [prim.render_point(p) for p in range(3)] == ["(0)", "(4)", "(2)"]
    assert prim.closed_sets == [frozenset(), prim.all_points()]
    i4 = lat.id_by_mask[mask_of([0, 4])]
    assert v_rad(prim, i4) == prim.all_points()
    assert v_rad(prim, lat.unit_id) == frozenset()
    # every proper ideal cuts out the whole space
    for i in range(len(lat)):
        if lat.proper[i]:
            assert v_rad(prim, i) == prim.all_points()


def test_prim_z6_discrete():
    ring, lat, prim = _setup("Zn(6)")
    assert len(prim.points) == 2
    assert len(prim.closed_sets) == 4
    i2 = lat.id_by_mask[mask_of([0, 2, 4])]
    assert v_rad(prim, i2) == frozenset({prim.position[i2]})
    assert v_rad(prim, {2}) == v_rad(prim, i2)


def test_prime_spectrum_examples():
    ring, lat, _ = _setup("Zn(8)")
    spec = build_spectrum(lat, "prime")
    assert len(spec.points) == 1
    i4 = lat.id_by_mask[mask_of([0, 4])]
    assert prime_variety(spec, i4) == frozenset({0})
    ring6, lat6, _ = _setup("Zn(6)")
    spec6 = build_spectrum(lat6, "prime")
    assert prime_variety(spec6, lat6.zero_id) == spec6.all_points()
    assert prime_variety(spec6, lat6.unit_id) == frozenset()
    _, latg, _ = _setup("Quot(Zn(4), x^2+x+1)")
    assert len(build_spectrum(latg, "prime").points) == 1


def test_kind_mismatch_raises():
    _, lat, prim = _setup("Zn(6)")
    spec = build_spectrum(lat, "prime")
    with pytest.raises(ValueError):
        v_rad(spec, lat.zero_id)
    with pytest.raises(ValueError):
        prime_variety(prim, lat.zero_id)
    with pytest.raises(ValueError):
        build_spectrum(lat, "maximal")


def test_basic_open_examples():
    ring, lat, prim = _setup("Zn(8)")
    assert prim.basic_open(ring.one_index) == prim.all_points()
    assert prim.basic_open(2) == frozenset()
    ring6, lat6, prim6 = _setup("Zn(6)")
    assert prim6.basic_open(2) == frozenset({_pos(prim6, [0, 3])})


def test_xi_examples():
    ring, lat, prim = _setup("Zn(8)")
    y = {_pos(prim, [0, 2, 4, 6]), _pos(prim, [0, 4])}
    assert lat.render(prim.xi(y)) == "(4)"
    assert prim.xi({_pos(prim, [0, 4])}) == lat.id_by_mask[mask_of([0, 4])]
    assert prim.xi(set()) == lat.unit_id
    ring6, lat6, prim6 = _setup("Zn(6)")
    assert prim6.xi({0, 1}) == lat6.zero_id


def test_closure_examples():
    ring, lat, prim = _setup("Zn(8)")
    assert prim.closure({_pos(prim, [0, 4])}) == prim.all_points()
    assert prim.closure(set()) == frozenset()
    ring6, lat6, prim6 = _setup("Zn(6)")
    single = {_pos(prim6, [0, 2, 4])}
    assert prim6.closure(single) == frozenset(single)


def test_is_base():
    for text in ("Zn(8)", "Zn(6)"):
        _, _, prim = _setup(text)
        assert prim.is_base() == (True, None)
    _, lat30, _ = _setup("Zn(30)")
    assert build_spectrum(lat30, "prime").is_base() == (True, None)


@pytest.mark.parametrize("text", LAW_RINGS)
def test_variety_extremes(text):
    _, lat, prim = _setup(text)
    assert v_rad(prim, lat.zero_id) == prim.all_points()
    assert v_rad(prim, lat.unit_id) == frozenset()


@pytest.mark.parametrize("text", LAW_RINGS)
def test_variety_pair_laws_exhaustive(text):
    _, lat, prim = _setup(text)
    varieties = [prim.variety(i) for i in range(len(lat))]
    for i, j in itertools.product(range(len(lat)), repeat=2):
        union = varieties[i] | varieties[j]
        assert varieties[lat.intersection_id(i, j)] == union
        assert varieties[lat.product_id(i, j)] == union
        assert varieties[lat.sum_id(i, j)] == varieties[i] & varieties[j]
        if lat.contains_ideal(i, j):
            assert varieties[j] <= varieties[i]


@pytest.mark.parametrize("text", LAW_RINGS)
def test_variety_radical_and_generator_invariance(text):
    ring, lat, prim = _setup(text)
    for i in range(len(lat)):
        assert prim.variety(i) == prim.variety(lat.radical_ids[i])
        assert prim.variety_index_by_ideal[i] == prim.variety_index_by_ideal[
            lat.radical_ids[i]
        ]
    for size in range(3):
        for subset in itertools.combinations(range(min(ring.size, 6)), size):
            generated = lat.id_of(ideal_generated_by(ring, subset))
            assert prim.variety_of_elements(subset) == prim.variety(generated)


@pytest.mark.parametrize("text", LAW_RINGS)
def test_basic_open_laws_exhaustive(text):
    ring, lat, prim = _setup(text)
    opens = [prim.basic_open(r) for r in range(ring.size)]
    principal_rad = [
        lat.mask(lat.radical_ids[lat.id_of(ideal_generated_by(ring, [r]))])
        for r in range(ring.size)
    ]
    for r in range(ring.size):
        assert (opens[r] == frozenset()) == unit_and_nilpotent_flags(ring, r)[1]
        for s in range(ring.size):
            assert opens[ring.mul[r][s]] == opens[r] & opens[s]
            assert (opens[r] == opens[s]) == (principal_rad[r] == principal_rad[s])


@pytest.mark.parametrize("text", LAW_RINGS)
def test_point_closure_laws(text):
    _, lat, prim = _setup(text)
    for pos, ideal_id in enumerate(prim.points):
        assert prim.closure({pos}) == prim.variety(ideal_id)
        closure = prim.closure({pos})
        for other_pos, other_id in enumerate(prim.points):
            inside = lat.mask(ideal_id) & ~lat.mask(lat.radical_ids[other_id]) == 0
            assert (other_pos in closure) == inside


@pytest.mark.parametrize("text", LAW_RINGS)
def test_closure_via_xi_exhaustive(text):
    _, lat, prim = _setup(text)
    n = len(prim.points)
    assert n <= 10
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            y = frozenset(combo)
            assert prim.closure(y) == prim.variety(prim.xi(y))


@pytest.mark.parametrize("text", LAW_RINGS)
def test_closed_family_closed_under_ops(text):
    _, _, prim = _setup(text)
    family = set(prim.closed_sets)
    for a, b in itertools.product(prim.closed_sets, repeat=2):
        assert a | b in family
        assert a & b in family
