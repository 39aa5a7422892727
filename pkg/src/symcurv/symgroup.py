"""Exact arithmetic in the rational group ring of a symmetric group.

Conventions, fixed here once for the whole package:

* permutations are bijections of ``{1, ..., r}`` stored in one-line
  notation (``images[i-1]`` is the image of ``i``);
* composition is ``(p * q)(i) = p(q(i))``;
* the ring product is the convolution
  ``(a * b)(s) = sum of a(p)*b(q) over all p, q with p*q == s``;
* ``star`` maps each permutation to its inverse and extends linearly;
  it is an anti-homomorphism: ``star(a*b) == star(b)*star(a)``.

Coefficients are ``fractions.Fraction`` throughout; floats are rejected.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations as _one_line_tuples
from typing import Iterable, Mapping, Union

from ._exact import exact

#: Default bound on the group degree.  Supports grow like r!, so anything
#: past 8 (40320 permutations) stops being desk-scale; callers who really
#: want more pass ``cap=`` explicitly.
DEGREE_CAP = 8

Coefficient = Union[int, str, Fraction]


def _check_cap(r: int, cap: int) -> None:
    if r > cap:
        raise ValueError(
            f"degree {r} exceeds the cap of {cap} "
            f"(supports grow like r!; pass cap={r} explicitly to override)"
        )


class Permutation:
    """A permutation of ``{1..r}`` in one-line notation; immutable, hashable."""

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(i) for i in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        self._images = imgs

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Iterable[int]) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(4, (1, 3), (2, 4))``."""
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            cyc = [int(i) for i in cycle]
            for i in cyc:
                if i < 1 or i > degree or i in seen:
                    raise ValueError(f"bad cycle entry {i} for degree {degree}")
                seen.add(i)
            for pos, i in enumerate(cyc):
                images[i - 1] = cyc[(pos + 1) % len(cyc)]
        return cls(images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def is_identity(self) -> bool:
        return all(img == i + 1 for i, img in enumerate(self._images))

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self._images):
            raise ValueError(f"argument {i} outside 1..{len(self._images)}")
        return self._images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``(p * q)(i) = p(q(i))``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        mine = self._images
        return Permutation(mine[q - 1] for q in other._images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._images)
        for i, img in enumerate(self._images):
            inv[img - 1] = i + 1
        return Permutation(inv)

    def sign(self) -> int:
        """+1 for even permutations, -1 for odd (via cycle parity)."""
        sign = 1
        seen = [False] * len(self._images)
        for start in range(len(self._images)):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self._images[j] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __lt__(self, other: "Permutation") -> bool:
        return self._images < other._images

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)})"


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    """Composition ``(p o q)(i) = p(q(i))``; degrees must match."""
    return p * q


def enumerate_group(r: int, cap: int = DEGREE_CAP) -> list[Permutation]:
    """All r! permutations of ``{1..r}`` in lexicographic one-line order."""
    if r < 1:
        raise ValueError(f"degree must be >= 1, got {r}")
    _check_cap(r, cap)
    return [Permutation(t) for t in _one_line_tuples(range(1, r + 1))]


class GroupRingElement:
    """A finitely supported map ``Permutation -> Fraction``.

    Zero coefficients are never stored.  Instances are immutable by
    convention; all arithmetic returns fresh elements.
    """

    __slots__ = ("_degree", "_terms")

    def __init__(
        self,
        degree: int,
        terms: Union[Mapping[Permutation, Coefficient],
                     Iterable[tuple[Permutation, Coefficient]]] = (),
    ):
        self._degree = int(degree)
        if self._degree < 1:
            raise ValueError(f"degree must be >= 1, got {degree}")
        data: dict[Permutation, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for perm, coeff in items:
            if not isinstance(perm, Permutation):
                perm = Permutation(perm)
            if perm.degree != self._degree:
                raise ValueError(
                    f"term degree {perm.degree} != element degree {self._degree}"
                )
            value = exact(coeff)
            if not value:
                continue
            merged = data.get(perm, Fraction(0)) + value
            if merged:
                data[perm] = merged
            else:
                data.pop(perm, None)
        self._terms = data

    @classmethod
    def zero(cls, degree: int) -> "GroupRingElement":
        return cls(degree)

    @classmethod
    def one(cls, degree: int) -> "GroupRingElement":
        return cls(degree, {Permutation.identity(degree): 1})

    @classmethod
    def from_permutation(cls, perm: Permutation,
                         coeff: Coefficient = 1) -> "GroupRingElement":
        return cls(perm.degree, {perm: coeff})

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, perm: Permutation) -> Fraction:
        return self._terms.get(perm, Fraction(0))

    def items(self) -> list[tuple[Permutation, Fraction]]:
        """Terms sorted by one-line notation (deterministic)."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].images)

    def support(self) -> list[Permutation]:
        return sorted(self._terms, key=lambda p: p.images)

    def _require_same_degree(self, other: "GroupRingElement") -> None:
        if other._degree != self._degree:
            raise ValueError(
                f"degree mismatch: {self._degree} vs {other._degree}"
            )

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._require_same_degree(other)
        data = dict(self._terms)
        for perm, value in other._terms.items():
            merged = data.get(perm, Fraction(0)) + value
            if merged:
                data[perm] = merged
            else:
                data.pop(perm, None)
        out = GroupRingElement(self._degree)
        out._terms = data
        return out

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "GroupRingElement":
        out = GroupRingElement(self._degree)
        out._terms = {p: -c for p, c in self._terms.items()}
        return out

    def scale(self, scalar: Coefficient) -> "GroupRingElement":
        factor = exact(scalar)
        out = GroupRingElement(self._degree)
        if factor:
            out._terms = {p: factor * c for p, c in self._terms.items()}
        return out

    def __mul__(self, other) -> "GroupRingElement":
        if isinstance(other, GroupRingElement):
            self._require_same_degree(other)
            data: dict[Permutation, Fraction] = {}
            for p, cp in self._terms.items():
                for q, cq in other._terms.items():
                    s = p * q
                    merged = data.get(s, Fraction(0)) + cp * cq
                    if merged:
                        data[s] = merged
                    else:
                        data.pop(s, None)
            out = GroupRingElement(self._degree)
            out._terms = data
            return out
        if isinstance(other, (int, str, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "GroupRingElement":
        if isinstance(other, (int, str, Fraction)):
            return self.scale(other)
        return NotImplemented

    def star(self) -> "GroupRingElement":
        """The involution sending each permutation to its inverse."""
        out = GroupRingElement(self._degree)
        out._terms = {p.inverse(): c for p, c in self._terms.items()}
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupRingElement)
                and self._degree == other._degree
                and self._terms == other._terms)

    def __repr__(self) -> str:
        return f"GroupRingElement(degree={self._degree}, support={len(self)})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for perm, coeff in self.items():
            parts.append(f"{coeff}*{list(perm.images)}")
        return " + ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "r": self._degree,
            "terms": [
                {"perm": list(p.images), "coeff": str(c)}
                for p, c in self.items()
            ],
        }

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> "GroupRingElement":
        degree = int(payload["r"])
        terms = [
            (Permutation(entry["perm"]), entry["coeff"])
            for entry in payload.get("terms", ())
        ]
        return cls(degree, terms)


def ring_product(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Convolution product ``(a*b)(s) = sum over p*q == s of a(p)*b(q)``."""
    return a * b


def star(a: GroupRingElement) -> GroupRingElement:
    return a.star()


def solve_right_factor(
    a: GroupRingElement,
    c: GroupRingElement,
    cap: int = DEGREE_CAP,
) -> GroupRingElement | None:
    """Solve ``a * x == c`` exactly; ``None`` when no solution exists.

    Row-reduces the r! x r! matrix of left multiplication by ``a`` over the
    rationals, pivoting on the first nonzero entry per column, so the result
    is deterministic.  Any exact solution is acceptable to callers; no
    canonical representative is attempted.  Cost grows like (r!)^3 --
    practical for r <= 5 and easily for the r = 4 uses in this package.
    """
    if a.degree != c.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {c.degree}")
    r = a.degree
    _check_cap(r, cap)
    group = enumerate_group(r, cap)
    n = len(group)
    inverses = [p.inverse() for p in group]
    # (a*x)(s) = sum_q a(s * q^-1) x(q): row per s, column per q.
    rows: list[list[Fraction]] = []
    for s in group:
        row = [a.coefficient(s * q_inv) for q_inv in inverses]
        row.append(c.coefficient(s))
        rows.append(row)

    pivot_cols: list[int] = []
    rank = 0
    for col in range(n):
        pivot_row = None
        for i in range(rank, n):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        rows[rank] = [v / pivot for v in rows[rank]]
        for i in range(n):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [u - factor * v for u, v in zip(rows[i], rows[rank])]
        pivot_cols.append(col)
        rank += 1
        if rank == n:
            break

    for i in range(rank, n):
        if rows[i][n]:
            return None
    solution = {
        group[col]: rows[i][n]
        for i, col in enumerate(pivot_cols)
        if rows[i][n]
    }
    return GroupRingElement(r, solution)
