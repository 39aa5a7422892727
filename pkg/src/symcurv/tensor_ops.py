"""Dense exact-rational tensors and the slot-permutation action on them.

A group-ring element ``a`` acts on an order-r tensor by
``(a T)[i_1..i_r] = sum over p of a(p) * T[i_{p(1)}..i_{p(r)}]``:
permutations shuffle argument slots, coefficients weight the sum.  With the
composition convention of :mod:`symcurv.symgroup` this is a left action,
``(a*b) T == a (b T)``.

Tensor indices are 0-based tuples here and in the JSON form; the 1-based
numbers inside permutations refer to argument *slots*, not index values.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _product
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from ._exact import exact
from .symgroup import GroupRingElement, Permutation, enumerate_group

Scalar = Union[int, str, Fraction]


class DenseTensor:
    """An order-r tensor over ``{0..n-1}^r`` with Fraction entries, row-major."""

    __slots__ = ("_order", "_dim", "_data", "_strides")

    def __init__(self, order: int, dim: int, data: Iterable[Scalar]):
        if order < 0 or dim < 1:
            raise ValueError(f"bad shape: order={order}, dim={dim}")
        self._order = order
        self._dim = dim
        entries = tuple(exact(v) for v in data)
        if len(entries) != dim ** order:
            raise ValueError(
                f"expected {dim ** order} entries for order {order}, dim {dim}; "
                f"got {len(entries)}"
            )
        self._data = entries
        self._strides = tuple(dim ** (order - 1 - k) for k in range(order))

    @classmethod
    def zeros(cls, order: int, dim: int) -> "DenseTensor":
        return cls(order, dim, [0] * (dim ** order))

    @classmethod
    def from_entries(cls, order: int, dim: int,
                     entries: Mapping[tuple[int, ...], Scalar]) -> "DenseTensor":
        """Build from a sparse ``index tuple -> value`` mapping; rest is zero."""
        data = [Fraction(0)] * (dim ** order)
        strides = [dim ** (order - 1 - k) for k in range(order)]
        for idx, value in entries.items():
            idx = tuple(idx)
            if len(idx) != order or any(not 0 <= i < dim for i in idx):
                raise ValueError(f"index {idx} out of range for order {order}, dim {dim}")
            data[sum(i * s for i, s in zip(idx, strides))] = exact(value)
        return cls(order, dim, data)

    @classmethod
    def from_function(cls, order: int, dim: int,
                      fn: Callable[[tuple[int, ...]], Scalar]) -> "DenseTensor":
        return cls(order, dim, (fn(idx) for idx in _product(range(dim), repeat=order)))

    @classmethod
    def from_nested(cls, nested) -> "DenseTensor":
        """Build from nested lists, e.g. ``from_nested([[1, 0], [0, -1]])``."""
        order = 0
        probe = nested
        while isinstance(probe, (list, tuple)):
            order += 1
            if not probe:
                raise ValueError("empty axis in nested data")
            probe = probe[0]
        dim = len(nested) if order else 1

        flat: list[Scalar] = []

        def walk(node, depth: int) -> None:
            if depth == order:
                if isinstance(node, (list, tuple)):
                    raise ValueError("ragged nested data")
                flat.append(node)
                return
            if not isinstance(node, (list, tuple)) or len(node) != dim:
                raise ValueError(f"axis at depth {depth} must have length {dim}")
            for child in node:
                walk(child, depth + 1)

        walk(nested, 0)
        return cls(order, dim, flat)

    @property
    def order(self) -> int:
        return self._order

    @property
    def dim(self) -> int:
        return self._dim

    def _flat(self, idx: tuple[int, ...]) -> int:
        return sum(i * s for i, s in zip(idx, self._strides))

    def __getitem__(self, idx: tuple[int, ...]) -> Fraction:
        if isinstance(idx, int):
            idx = (idx,)
        if len(idx) != self._order or any(not 0 <= i < self._dim for i in idx):
            raise IndexError(f"bad index {idx} for order {self._order}, dim {self._dim}")
        return self._data[self._flat(idx)]

    def indices(self) -> Iterator[tuple[int, ...]]:
        return _product(range(self._dim), repeat=self._order)

    def nonzero_items(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        for pos, idx in enumerate(self.indices()):
            value = self._data[pos]
            if value:
                yield idx, value

    @property
    def is_zero(self) -> bool:
        return not any(self._data)

    def __bool__(self) -> bool:
        return not self.is_zero

    def _require_same_shape(self, other: "DenseTensor") -> None:
        if self._order != other._order or self._dim != other._dim:
            raise ValueError(
                f"shape mismatch: order {self._order}, dim {self._dim} vs "
                f"order {other._order}, dim {other._dim}"
            )

    def __add__(self, other: "DenseTensor") -> "DenseTensor":
        if not isinstance(other, DenseTensor):
            return NotImplemented
        self._require_same_shape(other)
        return DenseTensor(self._order, self._dim,
                           (a + b for a, b in zip(self._data, other._data)))

    def __sub__(self, other: "DenseTensor") -> "DenseTensor":
        if not isinstance(other, DenseTensor):
            return NotImplemented
        self._require_same_shape(other)
        return DenseTensor(self._order, self._dim,
                           (a - b for a, b in zip(self._data, other._data)))

    def __neg__(self) -> "DenseTensor":
        return DenseTensor(self._order, self._dim, (-a for a in self._data))

    def scale(self, scalar: Scalar) -> "DenseTensor":
        factor = exact(scalar)
        return DenseTensor(self._order, self._dim, (factor * a for a in self._data))

    def __mul__(self, scalar) -> "DenseTensor":
        if isinstance(scalar, (int, str, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    __rmul__ = __mul__

    def transpose(self) -> "DenseTensor":
        """Swap the two slots of an order-2 tensor."""
        if self._order != 2:
            raise ValueError(f"transpose is for order 2, got order {self._order}")
        n = self._dim
        return DenseTensor(2, n, (self._data[j * n + i]
                                  for i in range(n) for j in range(n)))

    def __eq__(self, other) -> bool:
        return (isinstance(other, DenseTensor)
                and self._order == other._order
                and self._dim == other._dim
                and self._data == other._data)

    def __repr__(self) -> str:
        return f"DenseTensor(order={self._order}, dim={self._dim})"

    def to_nested(self):
        """Inverse of :meth:`from_nested` (order-0 tensors give a bare Fraction)."""
        if self._order == 0:
            return self._data[0]

        def build(depth: int, offset: int):
            if depth == self._order - 1:
                return [self._data[offset + i] for i in range(self._dim)]
            stride = self._strides[depth]
            return [build(depth + 1, offset + i * stride) for i in range(self._dim)]

        return build(0, 0)

    def to_json_dict(self) -> dict:
        return {
            "order": self._order,
            "dim": self._dim,
            "entries": [
                {"idx": list(idx), "value": str(value)}
                for idx, value in self.nonzero_items()
            ],
        }

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> "DenseTensor":
        order = int(payload["order"])
        dim = int(payload["dim"])
        entries = {
            tuple(entry["idx"]): entry["value"]
            for entry in payload.get("entries", ())
        }
        return cls.from_entries(order, dim, entries)


def apply_symmetry_operator(a: GroupRingElement, tensor: DenseTensor) -> DenseTensor:
    """Act with ``a`` on ``tensor`` by permuting slots and summing."""
    if a.degree != tensor.order:
        raise ValueError(
            f"element degree {a.degree} != tensor order {tensor.order}"
        )
    n, r = tensor.dim, tensor.order
    all_idx = list(_product(range(n), repeat=r))
    acc = [Fraction(0)] * len(all_idx)
    for perm, coeff in a.items():
        slots = [img - 1 for img in perm.images]
        for pos, idx in enumerate(all_idx):
            acc[pos] += coeff * tensor[tuple(idx[s] for s in slots)]
    return DenseTensor(r, n, acc)


def tensor_product(m: DenseTensor, n: DenseTensor) -> DenseTensor:
    """Order-2 times order-2 outer product: ``(M (x) N)[i,j,k,l] = M[i,j] N[k,l]``."""
    if m.order != 2 or n.order != 2:
        raise ValueError(f"need two order-2 tensors, got orders {m.order}, {n.order}")
    if m.dim != n.dim:
        raise ValueError(f"dimension mismatch: {m.dim} vs {n.dim}")
    d = m.dim
    return DenseTensor.from_function(
        4, d, lambda idx: m[(idx[0], idx[1])] * n[(idx[2], idx[3])]
    )


def to_group_ring(tensor: DenseTensor,
                  vectors: Sequence[Sequence[Scalar]]) -> GroupRingElement:
    """Evaluate ``tensor`` on every slot-permutation of the vector tuple.

    The coefficient of ``p`` is ``T(v_{p(1)}, ..., v_{p(r)})``.
    """
    r = tensor.order
    if len(vectors) != r:
        raise ValueError(f"need {r} vectors, got {len(vectors)}")
    vecs = [tuple(exact(c) for c in v) for v in vectors]
    if any(len(v) != tensor.dim for v in vecs):
        raise ValueError(f"every vector must have dimension {tensor.dim}")
    items = list(tensor.nonzero_items())
    terms: dict[Permutation, Fraction] = {}
    for perm in enumerate_group(r):
        chosen = [vecs[perm(k + 1) - 1] for k in range(r)]
        total = Fraction(0)
        for idx, value in items:
            term = value
            for k in range(r):
                component = chosen[k][idx[k]]
                if not component:
                    term = Fraction(0)
                    break
                term *= component
            total += term
        if total:
            terms[perm] = total
    return GroupRingElement(r, terms)


def slice_pairs(tensor: DenseTensor) -> list[tuple[DenseTensor, DenseTensor]]:
    """Cut an order-4 tensor into matrix pairs with ``sum M (x) N == tensor``.

    Pair (k,l) is the slice ``M[i,j] = T[i,j,k,l]`` together with the (k,l)
    matrix unit; slices that vanish are dropped.
    """
    if tensor.order != 4:
        raise ValueError(f"slice_pairs needs order 4, got {tensor.order}")
    n = tensor.dim
    pairs = []
    for k in range(n):
        for l in range(n):
            slab = DenseTensor.from_function(2, n, lambda ij: tensor[(ij[0], ij[1], k, l)])
            if slab.is_zero:
                continue
            unit = DenseTensor.from_entries(2, n, {(k, l): 1})
            pairs.append((slab, unit))
    return pairs


def sym_split(m: DenseTensor) -> tuple[DenseTensor, DenseTensor]:
    """Unique split ``M = S + A`` with S symmetric and A skew."""
    if m.order != 2:
        raise ValueError(f"sym_split needs order 2, got {m.order}")
    mt = m.transpose()
    half = Fraction(1, 2)
    return (m + mt).scale(half), (m - mt).scale(half)
