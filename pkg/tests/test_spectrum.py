import itertools

import pytest

from atomspec.modules import (
    direct_sum,
    quotient,
    regular_module,
    sub_module,
    submodule_lattice,
    zero_module,
)
from atomspec.rings import mat, tri2, zmod
from atomspec.spectrum import (
    SpectrumError,
    associated_atoms,
    atom_equivalent,
    atom_spectrum,
    atom_support,
    classical_support,
    commutative_crosscheck,
    enumerate_open_sets,
    is_open,
    prime_ideals,
)

# element id of the lower triangular ring over F_2: 4*a11 + 2*a21 + a22
E21 = frozenset({0, 2})  # span of E21, the only non-comonoform proper ideal


def omega(n):
    return sum(
        1 for p in range(2, n + 1)
        if n % p == 0 and all(p % q for q in range(2, p))
    )


def test_tri2_spectrum_matches_hand_computation(tri2_2):
    spec = atom_spectrum(tri2_2)
    assert len(spec.atoms) == 2
    flat = sorted(
        sorted(ideal) for atom in spec.atoms for ideal in atom.members
    )
    assert flat == [[0, 1, 2, 3], [0, 2, 4, 6], [0, 4], [0, 6]]
    # the strict lower triangular span is not comonoform
    with pytest.raises(SpectrumError):
        spec.atom_of(E21)


def test_tri2_atom_equivalences(tri2_2):
    spec = atom_spectrum(tri2_2)
    # E11 R, (E11 + E21) R, and the maximal ideal with a11 = 0 collapse
    # into one atom; the maximal ideal with a22 = 0 stands alone
    p_a = frozenset({0, 4})
    m_1 = frozenset({0, 1, 2, 3})
    m_2 = frozenset({0, 2, 4, 6})
    diag = frozenset({0, 6})
    assert atom_equivalent(tri2_2, p_a, m_1) == (
        spec.atom_of(p_a) == spec.atom_of(m_1)
    )
    assert spec.atom_of(p_a) == spec.atom_of(m_1) == spec.atom_of(diag)
    assert spec.atom_of(p_a) != spec.atom_of(m_2)


def test_atom_equivalence_is_an_equivalence(zoo):
    for ring in zoo:
        if ring.order > 16:
            continue
        spec = atom_spectrum(ring)
        comono = spec.comonoform_ideals()
        for p in comono:
            assert atom_equivalent(ring, p, p)
        for p, q in itertools.combinations(comono, 2):
            assert atom_equivalent(ring, p, q) == atom_equivalent(ring, q, p)
        for p, q, r in itertools.combinations(comono, 3):
            if atom_equivalent(ring, p, q) and atom_equivalent(ring, q, r):
                assert atom_equivalent(ring, p, r)


def test_zmod_spectra_are_singleton_classes():
    for n in (4, 6, 8, 12, 30, 36, 60):
        ring = zmod(n)
        spec = atom_spectrum(ring)
        assert len(spec.atoms) == omega(n)
        for atom in spec.atoms:
            assert len(atom.members) == 1


def test_mat22_has_one_atom():
    spec = atom_spectrum(mat(2, 2))
    assert len(spec.atoms) == 1


def test_atom_support_of_zmod12_modules(zmod12):
    spec = atom_spectrum(zmod12)
    whole = regular_module(zmod12)
    by_rep = {
        tuple(sorted(atom.canonical_rep)): atom.id for atom in spec.atoms
    }
    a2 = by_rep[tuple(range(0, 12, 2))]
    a3 = by_rep[(0, 3, 6, 9)]
    assert atom_support(spec, whole) == frozenset({a2, a3})
    assert atom_support(spec, quotient(whole, frozenset(range(0, 12, 2)))) == \
        frozenset({a2})
    assert atom_support(spec, sub_module(whole, frozenset({0, 4, 8}))[0]) == \
        frozenset({a3})
    assert atom_support(spec, zero_module(zmod12)) == frozenset()


def test_associated_atoms_sandwich(zoo):
    # AAss is contained in ASupp; both empty only for the zero module
    for ring in zoo:
        if ring.order > 16:
            continue
        spec = atom_spectrum(ring)
        whole = regular_module(ring)
        for members in submodule_lattice(whole):
            mod = sub_module(whole, members)[0]
            ass = associated_atoms(spec, mod)
            supp = atom_support(spec, mod)
            assert ass <= supp
            assert (len(members) == 1) == (not supp)
            if len(members) > 1:
                assert ass


def test_support_additive_over_direct_sums(zmod12):
    spec = atom_spectrum(zmod12)
    whole = regular_module(zmod12)
    evens, _ = sub_module(whole, frozenset(range(0, 12, 2)))
    threes, _ = sub_module(whole, frozenset({0, 3, 6, 9}))
    assert atom_support(spec, direct_sum(evens, threes)) == \
        atom_support(spec, evens) | atom_support(spec, threes)


def test_open_sets_of_tri2(tri2_2):
    # the ring is artinian so the topology is discrete: all four subsets
    spec = atom_spectrum(tri2_2)
    opens = enumerate_open_sets(spec)
    assert sorted(map(sorted, opens)) == [[], [0], [0, 1], [1]]
    for phi in opens:
        assert is_open(spec, phi)


def test_zmod_open_sets_are_full_powerset():
    for n in (4, 12, 30):
        spec = atom_spectrum(zmod(n))
        opens = enumerate_open_sets(spec)
        assert len(opens) == 2 ** len(spec.atoms)


def test_prime_ideals_of_zmod12(zmod12):
    primes = prime_ideals(zmod12)
    assert sorted(map(sorted, primes)) == [
        [0, 2, 4, 6, 8, 10],
        [0, 3, 6, 9],
    ]


def test_classical_support_of_zmod12(zmod12):
    primes = prime_ideals(zmod12)
    whole = regular_module(zmod12)
    assert classical_support(zmod12, whole, primes) == frozenset(primes)
    evens = frozenset(range(0, 12, 2))
    quot = quotient(whole, evens)
    assert classical_support(zmod12, quot, primes) == frozenset({evens})


def test_commutative_crosscheck(zoo):
    for ring in zoo:
        if not ring.is_commutative():
            continue
        report = commutative_crosscheck(ring)
        assert report["passed"], report


def test_crosscheck_rejects_noncommutative(tri2_2):
    with pytest.raises(SpectrumError):
        commutative_crosscheck(tri2_2)


def test_spectrum_is_deterministic(tri2_2):
    a = atom_spectrum(tri2_2)
    b = atom_spectrum(tri2(2))
    assert a.atoms == b.atoms
