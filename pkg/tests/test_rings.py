import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atomspec.rings import (
    CapExceededError,
    RingAxiomError,
    RingFormatError,
    fp_algebra,
    mat,
    parse_ring_document,
    parse_ring_spec,
    product,
    serialize_ring,
    tri2,
    validate_ring,
    zmod,
)


def test_zmod12_is_a_valid_ring():
    ring = zmod(12)
    assert ring.order == 12
    assert ring.one == 1
    assert ring.is_commutative()


def test_zero_multiplication_is_rejected():
    # order 2 with x*y = 0 everywhere, claiming one = 1
    add = [[0, 1], [1, 0]]
    mul = [[0, 0], [0, 0]]
    with pytest.raises(RingAxiomError) as err:
        validate_ring(add, mul, 1)
    assert err.value.axiom == "one is not identity"
    assert 1 in err.value.witness


def test_distributivity_witness_is_reported():
    # corrupt one multiplication entry of zmod(3)
    base = zmod(3)
    mul = [list(row) for row in base.mul]
    mul[2][2] = 0  # 2*2 should be 1
    with pytest.raises(RingAxiomError) as err:
        validate_ring(base.add, mul, 1)
    assert len(err.value.witness) >= 2


def test_tri2_has_order_eight():
    ring = tri2(2)
    assert ring.order == 8
    assert not ring.is_commutative()


def test_mat22_is_valid_of_order_sixteen():
    ring = mat(2, 2)
    assert ring.order == 16


def test_builtins_are_deterministic():
    assert zmod(12) == zmod(12)
    assert tri2(3) == tri2(3)
    assert mat(2, 2).mul == mat(2, 2).mul


def test_product_components():
    ring = product(zmod(2), zmod(3))
    assert ring.order == 6
    # (1,0) * (0,1) = (0,0)
    e10, e01 = 3, 1
    assert ring.mul[e10][e01] == 0


def test_parse_ring_spec_builtins():
    assert parse_ring_spec("zmod:7").order == 7
    assert parse_ring_spec("tri2:2") == tri2(2)
    assert parse_ring_spec("mat:2:2") == mat(2, 2)
    assert parse_ring_spec("prod:zmod:2,zmod:2").order == 4
    with pytest.raises(RingFormatError):
        parse_ring_spec("weird:3")


def test_order_cap_enforced():
    with pytest.raises(CapExceededError):
        zmod(5000)
    with pytest.raises(CapExceededError):
        mat(3, 5)
    with pytest.raises(CapExceededError):
        zmod(10, order_cap=5)


def test_nonprime_field_rejected():
    with pytest.raises(RingFormatError):
        tri2(4)


def test_serialization_roundtrip():
    for ring in (zmod(2), tri2(2)):
        doc = serialize_ring(ring)
        again = parse_ring_document(doc)
        assert again == ring
        assert serialize_ring(again) == doc


def test_mutated_document_reports_location():
    doc = json.loads(serialize_ring(zmod(2)))
    doc["mul"][1][0] = 9
    with pytest.raises(RingFormatError) as err:
        parse_ring_document(json.dumps(doc))
    assert "mul[1][0]" in str(err.value)


def test_unknown_fields_rejected():
    doc = json.loads(serialize_ring(zmod(2)))
    doc["extra"] = 1
    with pytest.raises(RingFormatError) as err:
        parse_ring_document(json.dumps(doc))
    assert "extra" in str(err.value)


def test_fp_algebra_reconstructs_tri2():
    # basis: e0 = E11, e1 = E21, e2 = E22 of lower triangular 2x2 matrices
    d = 3
    c = [[[0] * d for _ in range(d)] for _ in range(d)]
    c[0][0][0] = 1  # e0 e0 = e0
    c[1][0][1] = 1  # e1 e0 = e1
    c[2][1][1] = 1  # e2 e1 = e1
    c[2][2][2] = 1  # e2 e2 = e2
    ring = fp_algebra(2, d, c, [1, 0, 1])
    built = tri2(2)
    assert ring.add == built.add
    assert ring.mul == built.mul
    assert ring.one == built.one


def test_fp_algebra_document_form():
    doc = {
        "fp_algebra": {
            "p": 2,
            "dim": 1,
            "structure_constants": [[[1]]],
            "unit_vector": [1],
        }
    }
    ring = parse_ring_document(json.dumps(doc))
    assert ring.order == 2
    assert ring.one == 1


def test_bad_structure_constants_rejected():
    # e0 is declared as the unit but e0 e1 = 0, so the unit axiom fails
    d = 2
    c = [[[0] * d for _ in range(d)] for _ in range(d)]
    c[0][0][0] = 1
    c[1][0][1] = 1
    c[1][1][1] = 1
    with pytest.raises(RingAxiomError):
        fp_algebra(2, d, c, [1, 0])


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=30))
def test_zmod_family_valid_and_roundtrips(n):
    ring = zmod(n)
    assert ring.order == n
    assert parse_ring_document(serialize_ring(ring)) == ring
