import pytest

from atomspec.modules import (
    quotient,
    regular_module,
    sub_module,
    submodule_lattice,
)
from atomspec.monoform import (
    MonoformError,
    filtration_factor,
    is_comonoform,
    is_completely_prime,
    is_monoform,
    max_monoform_submodule,
    monoform_filtration,
    monoform_oracle_artinian,
)
from atomspec.rings import zmod


def modules_of(ring, max_order=None):
    whole = regular_module(ring)
    out = []
    for members in submodule_lattice(whole):
        if len(members) == 1:
            continue
        mod = sub_module(whole, members)[0]
        if max_order is None or mod.order <= max_order:
            out.append(mod)
    return out


def test_simple_modules_are_monoform():
    whole = regular_module(zmod(12))
    for members in ({0, 6}, {0, 4, 8}):
        assert is_monoform(sub_module(whole, frozenset(members))[0])


def test_zmod4_is_uniform_but_not_monoform():
    # Z/4 and its quotient by (2) share the subobject Z/2
    module = regular_module(zmod(4))
    assert not is_monoform(module)
    assert not monoform_oracle_artinian(module)


def test_zmod12_regular_is_not_monoform():
    assert not is_monoform(regular_module(zmod(12)))


def test_socle_oracle_agrees_on_uniform_modules(zoo):
    # the multiplicity-one socle test decides monoformness for artinian rings
    # whenever the module has simple socle; compare on every cyclic quotient
    for ring in zoo:
        whole = regular_module(ring)
        for ideal in submodule_lattice(whole):
            if len(ideal) == whole.order:
                continue
            mod = quotient(whole, ideal)
            assert is_monoform(mod) == monoform_oracle_artinian(mod)


def test_comonoform_ideals_of_tri2(tri2_2):
    whole = regular_module(tri2_2)
    comono = [
        i for i in submodule_lattice(whole)
        if len(i) < whole.order and is_comonoform(tri2_2, i)
    ]
    assert set(comono) == {
        frozenset({0, 4}),
        frozenset({0, 6}),
        frozenset({0, 1, 2, 3}),
        frozenset({0, 2, 4, 6}),
    }
    assert not is_comonoform(tri2_2, frozenset({0, 2}))


def test_comonoform_equals_prime_for_zmod():
    for n in (4, 6, 12, 30):
        ring = zmod(n)
        whole = regular_module(ring)
        primes = {
            frozenset(range(0, n, p))
            for p in range(2, n)
            if n % p == 0 and all(p % q for q in range(2, p))
        }
        comono = {
            i for i in submodule_lattice(whole)
            if len(i) < n and is_comonoform(ring, i)
        }
        assert comono == primes


def test_comonoform_implies_completely_prime(zoo):
    for ring in zoo:
        whole = regular_module(ring)
        for ideal in submodule_lattice(whole):
            if len(ideal) == whole.order:
                continue
            if is_comonoform(ring, ideal):
                assert is_completely_prime(ring, ideal)


def test_completely_prime_converse_gap_report(zoo, capsys):
    # The converse can fail in general; over this zoo no counterexample
    # appears, so just report the count without asserting emptiness.
    gaps = 0
    for ring in zoo:
        whole = regular_module(ring)
        for ideal in submodule_lattice(whole):
            if len(ideal) == whole.order:
                continue
            if is_completely_prime(ring, ideal) and not is_comonoform(ring, ideal):
                gaps += 1
    print(f"completely prime but not comonoform: {gaps} ideals in zoo")


def test_monoform_filtration_of_zmod12():
    module = regular_module(zmod(12))
    filt = monoform_filtration(module)
    assert filt.chain[0] == frozenset({0})
    assert filt.chain[-1] == frozenset(range(12))
    # each label is the annihilator of the chosen comonoform cyclic factor
    for i in range(len(filt.labels)):
        factor = filtration_factor(module, filt, i)
        assert is_monoform(factor)
    assert len(filt.chain) == len(filt.labels) + 1


def test_filtration_on_zoo_regulars(zoo):
    for ring in zoo:
        module = regular_module(ring)
        filt = monoform_filtration(module)
        assert filt.chain[0] == frozenset({0})
        assert len(filt.chain[-1]) == module.order
        for i, j in zip(range(len(filt.chain) - 1), range(1, len(filt.chain))):
            assert filt.chain[i] < filt.chain[j]
        for i in range(len(filt.labels)):
            assert is_monoform(filtration_factor(module, filt, i))


def test_max_monoform_submodule_of_zmod4():
    # the socle (2) is the largest monoform submodule of Z/4
    module = regular_module(zmod(4))
    assert max_monoform_submodule(module) == frozenset({0, 2})


def test_max_monoform_submodule_of_sub():
    whole = regular_module(zmod(8))
    sub, _ = sub_module(whole, frozenset({0, 2, 4, 6}))
    assert len(max_monoform_submodule(sub)) == 2


def test_max_monoform_rejects_non_uniform():
    with pytest.raises(MonoformError):
        max_monoform_submodule(regular_module(zmod(6)))


def test_monoform_is_hereditary(zoo):
    # nonzero submodules of monoform modules are monoform
    for ring in zoo:
        if ring.order > 16:
            continue
        for mod in modules_of(ring):
            if not is_monoform(mod):
                continue
            for members in submodule_lattice(mod):
                if len(members) > 1:
                    assert is_monoform(sub_module(mod, members)[0])
