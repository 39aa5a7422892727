"""Tensor storage, the slot-permutation action, and the group-ring embedding."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from symcurv import (
    DenseTensor,
    GroupRingElement,
    Permutation,
    apply_symmetry_operator,
    canonical_elements,
    gamma,
    alpha,
    ring_product,
    slice_pairs,
    star,
    sym_split,
    tensor_product,
    to_group_ring,
)
from symcurv.young import curvature_tableau, young_symmetrizer

from helpers import (
    rand_ring_element,
    rand_skew,
    rand_symmetric,
    rand_tensor,
    rand_vector,
)


def _e1_star():
    """Projection onto symmetric order-2 tensors, starred."""
    e1 = GroupRingElement(2, [(Permutation.identity(2), Fraction(1, 2)),
                              (Permutation([2, 1]), Fraction(1, 2))])
    return star(e1)


def _e2_star():
    e2 = GroupRingElement(2, [(Permutation.identity(2), Fraction(1, 2)),
                              (Permutation([2, 1]), Fraction(-1, 2))])
    return star(e2)


# -------------------------------------------------------------------- storage

def test_dense_tensor_shape_validation():
    with pytest.raises(ValueError):
        DenseTensor(2, 2, [1, 2, 3])  # wrong entry count
    with pytest.raises(ValueError):
        DenseTensor.from_nested([[1, 2], [3]])
    with pytest.raises(TypeError):
        DenseTensor(1, 2, [0.5, 1])  # floats rejected


def test_dense_tensor_indexing_and_equality():
    t = DenseTensor.from_nested([[1, 2], [3, 4]])
    assert t[(0, 1)] == 2
    assert t[(1, 0)] == 3
    with pytest.raises(IndexError):
        t[(0, 2)]
    assert t == DenseTensor(2, 2, [1, 2, 3, 4])
    assert t != DenseTensor(2, 2, [1, 2, 3, 5])
    assert t.transpose() == DenseTensor.from_nested([[1, 3], [2, 4]])


def test_json_round_trip():
    t = DenseTensor.from_entries(4, 3, {(0, 0, 1, 2): Fraction(1, 3),
                                        (2, 1, 0, 0): -2})
    payload = t.to_json_dict()
    assert payload["order"] == 4 and payload["dim"] == 3
    assert {"idx": [0, 0, 1, 2], "value": "1/3"} in payload["entries"]
    assert DenseTensor.from_json_dict(payload) == t


# --------------------------------------------------------------------- action

def test_identity_acts_trivially():
    rng = random.Random(11)
    t = rand_tensor(rng, 4, 2)
    assert apply_symmetry_operator(GroupRingElement.one(4), t) == t


def test_degree_order_mismatch():
    rng = random.Random(12)
    t = rand_tensor(rng, 3, 2)
    with pytest.raises(ValueError):
        apply_symmetry_operator(GroupRingElement.one(4), t)


def test_symmetrizer_projects_squares():
    rng = random.Random(13)
    ystar = canonical_elements().symmetrizer_star
    for n in (2, 3):
        s = rand_symmetric(rng, n)
        a = rand_skew(rng, n)
        assert apply_symmetry_operator(ystar, tensor_product(s, s)) == gamma(s).scale(12)
        assert apply_symmetry_operator(ystar, tensor_product(a, a)) == alpha(a).scale(12)
        assert apply_symmetry_operator(ystar, tensor_product(s, a)).is_zero
        assert apply_symmetry_operator(ystar, tensor_product(a, s)).is_zero


def test_action_is_compatible_with_product():
    rng = random.Random(14)
    for _ in range(5):
        a = rand_ring_element(rng, 4)
        b = rand_ring_element(rng, 4)
        t = rand_tensor(rng, 4, 3)
        assert (apply_symmetry_operator(ring_product(a, b), t)
                == apply_symmetry_operator(a, apply_symmetry_operator(b, t)))


# -------------------------------------------------------------- tensor product

def test_tensor_product_values():
    eye = DenseTensor.from_nested([[1, 0], [0, 1]])
    prod = tensor_product(eye, eye)
    for idx in prod.indices():
        i, j, k, l = idx
        assert prod[idx] == (1 if (i == j and k == l) else 0)
    rot = DenseTensor.from_nested([[0, 1], [-1, 0]])
    assert tensor_product(rot, rot)[(0, 1, 0, 1)] == 1
    zero = DenseTensor.zeros(2, 2)
    assert tensor_product(zero, eye).is_zero
    with pytest.raises(ValueError):
        tensor_product(eye, DenseTensor.zeros(2, 3))


# ------------------------------------------------------------------- embedding

def test_to_group_ring_zero():
    rng = random.Random(15)
    b = [rand_vector(rng, 2) for _ in range(4)]
    assert to_group_ring(DenseTensor.zeros(4, 2), b).is_zero


def test_symmetric_embeds_in_symmetric_ideal():
    rng = random.Random(16)
    for _ in range(5):
        s = rand_symmetric(rng, 3)
        b = [rand_vector(rng, 3) for _ in range(2)]
        sb = to_group_ring(s, b)
        assert ring_product(sb, _e1_star()) == sb


def test_skew_embeds_in_skew_ideal():
    rng = random.Random(17)
    for _ in range(5):
        a = rand_skew(rng, 3)
        b = [rand_vector(rng, 3) for _ in range(2)]
        ab = to_group_ring(a, b)
        assert ring_product(ab, _e2_star()) == ab


def test_action_embedding_rule():
    # evaluating after acting == multiplying by the starred element
    rng = random.Random(18)
    for _ in range(5):
        a = rand_ring_element(rng, 4)
        t = rand_tensor(rng, 4, 2)
        b = [rand_vector(rng, 2) for _ in range(4)]
        lhs = to_group_ring(apply_symmetry_operator(a, t), b)
        rhs = ring_product(to_group_ring(t, b), star(a))
        assert lhs == rhs


def test_mixed_slices_annihilate_symmetrizer():
    rng = random.Random(19)
    y = young_symmetrizer(curvature_tableau())
    hits = 0
    for _ in range(5):
        s = rand_symmetric(rng, 3)
        a = rand_skew(rng, 3)
        b = [rand_vector(rng, 3) for _ in range(4)]
        assert ring_product(to_group_ring(tensor_product(s, a), b), y).is_zero
        assert ring_product(to_group_ring(tensor_product(a, s), b), y).is_zero
        if not ring_product(to_group_ring(tensor_product(s, s), b), y).is_zero:
            hits += 1
    assert hits > 0  # the symmetric square does NOT annihilate in general


def test_to_group_ring_shape_mismatch():
    rng = random.Random(20)
    t = rand_tensor(rng, 4, 2)
    with pytest.raises(ValueError):
        to_group_ring(t, [rand_vector(rng, 2) for _ in range(3)])
    with pytest.raises(ValueError):
        to_group_ring(t, [rand_vector(rng, 3) for _ in range(4)])


# --------------------------------------------------------------------- slicing

def test_slice_pairs_reconstruction():
    rng = random.Random(21)
    for n in (2, 3):
        t = rand_tensor(rng, 4, n)
        pairs = slice_pairs(t)
        total = DenseTensor.zeros(4, n)
        for m, unit in pairs:
            total = total + tensor_product(m, unit)
        assert total == t
    assert slice_pairs(DenseTensor.zeros(4, 2)) == []


def test_slice_pairs_generic_count():
    rng = random.Random(22)
    dense = DenseTensor(4, 3, [Fraction(rng.randint(1, 5))
                               for _ in range(81)])  # strictly nonzero
    assert len(slice_pairs(dense)) == 9


# ------------------------------------------------------------------- sym split

def test_sym_split():
    m = DenseTensor.from_nested([[1, 2], [0, 1]])
    s, a = sym_split(m)
    assert s == DenseTensor.from_nested([[1, 1], [1, 1]])
    assert a == DenseTensor.from_nested([[0, 1], [-1, 0]])
    assert s + a == m

    rng = random.Random(23)
    sym = rand_symmetric(rng, 3)
    assert sym_split(sym) == (sym, DenseTensor.zeros(2, 3))
    skew = rand_skew(rng, 3)
    assert sym_split(skew) == (DenseTensor.zeros(2, 3), skew)


# ------------------------------------------------------------ hypothesis props

_small = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


@settings(max_examples=25, deadline=None)
@given(st.lists(_small, min_size=16, max_size=16),
       st.lists(_small, min_size=16, max_size=16))
def test_action_linearity(xs, ys):
    t1 = DenseTensor(4, 2, xs)
    t2 = DenseTensor(4, 2, ys)
    ystar = canonical_elements().symmetrizer_star
    assert (apply_symmetry_operator(ystar, t1 + t2)
            == apply_symmetry_operator(ystar, t1) + apply_symmetry_operator(ystar, t2))
