import itertools

import pytest

from atomspec.modules import (
    quotient,
    regular_module,
    sub_module,
    submodule_lattice,
)
from atomspec.serre import (
    SerreError,
    build_universe,
    calculus_check,
    closure_oracle,
    enumerate_serre,
    hasse_dot,
    inclusion_edges,
    serre_contains,
    serre_from_generators,
    universe_supports,
)
from atomspec.rings import tri2, zmod
from atomspec.spectrum import atom_spectrum, atom_support, enumerate_open_sets


def test_tri2_has_four_serre_subcategories(tri2_2):
    spec = atom_spectrum(tri2_2)
    subs = enumerate_serre(spec)
    assert len(subs) == 4
    assert sorted(map(sorted, (s.open_set for s in subs))) == [
        [], [0], [0, 1], [1],
    ]
    # generator supports union to the open set exactly
    for s in subs:
        union = frozenset()
        for q in s.generators:
            union |= spec.support_of_ideal(q)
        assert union == s.open_set


def test_serre_membership_in_tri2(tri2_2):
    spec = atom_spectrum(tri2_2)
    whole = regular_module(tri2_2)
    m_1 = frozenset({0, 1, 2, 3})
    m_2 = frozenset({0, 2, 4, 6})
    p_a = frozenset({0, 4})
    sub_m1 = serre_from_generators(spec, [quotient(whole, m_1)])
    # R/p_a has both simples among its factors, so it escapes <R/m_1>
    assert not serre_contains(sub_m1, quotient(whole, p_a))
    assert serre_contains(sub_m1, quotient(whole, m_1))
    both = serre_from_generators(
        spec, [quotient(whole, m_1), quotient(whole, m_2)]
    )
    assert serre_contains(both, whole)


def test_invalid_open_set_rejected(zmod12):
    from atomspec.serre import SerreSubcategory

    spec = atom_spectrum(zmod12)
    with pytest.raises(SerreError):
        SerreSubcategory(spectrum=spec, open_set=frozenset({99}))


def test_inclusion_edges_form_square(tri2_2):
    subs = enumerate_serre(atom_spectrum(tri2_2))
    edges = inclusion_edges(subs)
    # diamond: zero below both singletons, both below the whole category
    assert len(edges) == 4
    by_size = {}
    for i, s in enumerate(subs):
        by_size.setdefault(len(s.open_set), []).append(i)
    for i, j in edges:
        assert len(subs[i].open_set) + 1 == len(subs[j].open_set)


def test_hasse_dot_output(tri2_2):
    subs = enumerate_serre(atom_spectrum(tri2_2))
    dot = hasse_dot(subs)
    assert dot.startswith("digraph")
    assert dot.count("->") == 4
    assert dot.endswith("}\n")


def test_universe_of_zmod4():
    ambient = regular_module(zmod(4))
    universe = build_universe(ambient)
    # iso classes: 0, Z/2, Z/4
    assert len(universe.members) == 3
    orders = sorted(m.order for m in universe.members)
    assert orders == [1, 2, 4]
    z2 = next(i for i, m in enumerate(universe.members) if m.order == 2)
    # Z/4 is an extension of Z/2 by Z/2, so it enters the closure of Z/2
    closed = closure_oracle(universe, {z2})
    assert closed == frozenset(range(3))


def test_closure_oracle_detects_monoform_criterion(tri2_2):
    # a module is monoform iff it avoids the Serre closure of its proper
    # quotients; exercise this on R/p_a which is monoform
    whole = regular_module(tri2_2)
    p_a = frozenset({0, 4})
    mod = quotient(whole, p_a)
    universe = build_universe(mod)
    self_cls = universe.class_of(mod)
    proper_quots = {
        universe.class_of(quotient(mod, sub))
        for sub in submodule_lattice(mod)
        if len(sub) > 1
    }
    closed = closure_oracle(universe, proper_quots)
    assert self_cls not in closed


def test_closure_oracle_soundness_matches_open_sets(zmod12):
    # closure by subquotients and extensions never leaves an open support set
    spec = atom_spectrum(zmod12)
    ambient = regular_module(zmod12)
    universe = build_universe(ambient)
    supports = universe_supports(universe, spec)
    for gens in itertools.combinations(range(len(universe.members)), 2):
        closed = closure_oracle(universe, gens)
        phi = frozenset().union(*(supports[g] for g in gens))
        for m in closed:
            assert supports[m] <= phi


def test_oracle_completeness_on_curated_rings():
    # for these rings the open-set subcategories and the closure-oracle
    # subcategories coincide exactly
    for ring in (zmod(4), zmod(12), tri2(2)):
        spec = atom_spectrum(ring)
        ambient = regular_module(ring)
        universe = build_universe(ambient)
        supports = universe_supports(universe, spec)
        open_sets = set(enumerate_open_sets(spec))
        # closure-closed subsets of the universe, keyed by their support union
        closed_families = set()
        n = len(universe.members)
        for r in range(n + 1):
            for gens in itertools.combinations(range(n), r):
                closed = closure_oracle(universe, gens)
                closed_families.add(closed)
        assert len(closed_families) == len(open_sets)
        for family in closed_families:
            phi = frozenset().union(
                frozenset(), *(supports[m] for m in family)
            )
            assert phi in open_sets
            # family is exactly the members supported inside phi
            assert family == frozenset(
                m for m in range(n) if supports[m] <= phi
            )


def test_calculus_identities_hold(tri2_2):
    universe = build_universe(regular_module(tri2_2))
    report = calculus_check(universe, samples=50)
    assert report["passed"], report["violations"]


def test_calculus_identities_hold_zmod12(zmod12):
    universe = build_universe(regular_module(zmod12))
    report = calculus_check(universe, samples=50)
    assert report["passed"], report["violations"]


def test_serre_generator_minimality(zmod12):
    spec = atom_spectrum(zmod12)
    for s in enumerate_serre(spec):
        covered = frozenset()
        for q in s.generators:
            covered |= spec.support_of_ideal(q)
        assert covered == s.open_set
        for q in s.generators:
            rest = frozenset().union(
                frozenset(),
                *(spec.support_of_ideal(o) for o in s.generators if o != q),
            )
            assert rest != s.open_set


def test_generators_track_support(zoo):
    for ring in zoo:
        if ring.order > 16:
            continue
        spec = atom_spectrum(ring)
        whole = regular_module(ring)
        for members in submodule_lattice(whole):
            mod = sub_module(whole, members)[0]
            s = serre_from_generators(spec, [mod])
            assert s.open_set == atom_support(spec, mod)
            assert serre_contains(s, mod)
