"""Pseudo-Riemannian metrics, Jacobi operators, and exact spectra.

Index conventions.  A metric ``g`` is a symmetric invertible matrix of
rationals.  A linear map ``C`` and a bilinear form ``B`` correspond
through ``B(x, y) = g(C x, y)``; ``Metric.raise_form`` / ``lower_map``
convert in both directions and are exact inverses of each other.  The
Jacobi operator of an order-4 tensor ``T`` at ``x`` is the map ``J`` with
``g(J y, w) = T(y, x, x, w)``.

Sampling on the pseudo-unit spheres ``g(x,x) = +-1`` intersects rational
lines through a fixed base point with the quadric, so every sample lies on
the sphere exactly; sequences are deterministic for a given seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping, Sequence, Union

from ._exact import exact
from .curvature import NotACurvatureTensor, alpha, gamma, is_algebraic_curvature
from .tensor_ops import DenseTensor

Scalar = Union[int, str, Fraction]
Vector = tuple[Fraction, ...]


class SignatureError(ValueError):
    """A construction was requested in a signature where it cannot exist."""


def _as_rows(matrix) -> tuple[tuple[Fraction, ...], ...]:
    if isinstance(matrix, DenseTensor):
        if matrix.order != 2:
            raise ValueError(f"order-2 tensor required, got order {matrix.order}")
        matrix = matrix.to_nested()
    rows = tuple(tuple(exact(v) for v in row) for row in matrix)
    if not rows or any(len(row) != len(rows) for row in rows):
        raise ValueError("matrix must be square and nonempty")
    return rows


def _mat_mul(a, b) -> tuple[tuple[Fraction, ...], ...]:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _mat_invert(rows) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse by Gauss-Jordan; ValueError when singular."""
    n = len(rows)
    work = [list(row) + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(rows)]
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if work[i][col]), None)
        if pivot_row is None:
            raise ValueError("matrix is singular over the rationals")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [v / pivot for v in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                factor = work[i][col]
                work[i] = [u - factor * v for u, v in zip(work[i], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def _signature_of(rows) -> tuple[int, int]:
    """Counts of positive/negative squares via congruence diagonalization."""
    n = len(rows)
    m = [list(row) for row in rows]
    pos = neg = 0
    for k in range(n):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][i]), None)
            if swap is not None:
                # symmetric swap of rows/columns k and swap
                m[k], m[swap] = m[swap], m[k]
                for row in m:
                    row[k], row[swap] = row[swap], row[k]
            else:
                other = next((j for j in range(k + 1, n) if m[k][j]), None)
                if other is None:
                    continue  # zero row: contributes nothing (singular input)
                # congruence "add row/col other into k" makes m[k][k] nonzero
                for j in range(n):
                    m[k][j] += m[other][j]
                for i in range(n):
                    m[i][k] += m[i][other]
        pivot = m[k][k]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if m[i][k]:
                factor = m[i][k] / pivot
                for j in range(n):
                    m[i][j] -= factor * m[k][j]
                for j in range(n):
                    m[j][i] -= factor * m[j][k]
    return pos, neg


class LinearMap:
    """An exact-rational square matrix acting on column vectors."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        self._rows = _as_rows(rows)

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "LinearMap":
        return cls([[0] * n for _ in range(n)])

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def to_nested(self) -> list[list[Fraction]]:
        return [list(row) for row in self._rows]

    def __call__(self, vector: Sequence[Scalar]) -> Vector:
        vec = tuple(exact(v) for v in vector)
        if len(vec) != self.dim:
            raise ValueError(f"vector length {len(vec)} != dimension {self.dim}")
        return tuple(sum(row[j] * vec[j] for j in range(self.dim))
                     for row in self._rows)

    def _require_same_dim(self, other: "LinearMap") -> None:
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if not isinstance(other, LinearMap):
            return NotImplemented
        self._require_same_dim(other)
        return LinearMap(_mat_mul(self._rows, other._rows))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if not isinstance(other, LinearMap):
            return NotImplemented
        self._require_same_dim(other)
        return LinearMap(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self._rows, other._rows)
        ))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LinearMap":
        return LinearMap(tuple(tuple(-v for v in row) for row in self._rows))

    def scale(self, scalar: Scalar) -> "LinearMap":
        factor = exact(scalar)
        return LinearMap(tuple(tuple(factor * v for v in row) for row in self._rows))

    def __mul__(self, scalar) -> "LinearMap":
        if isinstance(scalar, (int, str, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    __rmul__ = __mul__

    def transpose(self) -> "LinearMap":
        n = self.dim
        return LinearMap(tuple(tuple(self._rows[j][i] for j in range(n))
                               for i in range(n)))

    def trace(self) -> Fraction:
        return sum(self._rows[i][i] for i in range(self.dim))

    @property
    def is_zero(self) -> bool:
        return all(not v for row in self._rows for v in row)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearMap) and self._rows == other._rows

    def __repr__(self) -> str:
        return f"LinearMap(dim={self.dim})"


class Metric:
    """A symmetric, exactly invertible rational matrix with cached inverse."""

    __slots__ = ("_rows", "_inverse", "_signature")

    def __init__(self, matrix):
        rows = _as_rows(matrix)
        n = len(rows)
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("metric matrix must be symmetric")
        self._rows = rows
        self._inverse = _mat_invert(rows)
        self._signature = _signature_of(rows)

    @classmethod
    def standard(cls, p: int, q: int) -> "Metric":
        """diag(+1 x p, -1 x q)."""
        if p < 0 or q < 0 or p + q < 1:
            raise ValueError(f"bad signature ({p},{q})")
        diag = [1] * p + [-1] * q
        n = p + q
        return cls([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def inverse_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._inverse

    @property
    def signature(self) -> tuple[int, int]:
        return self._signature

    @property
    def is_standard_form(self) -> bool:
        p, _ = self._signature
        n = self.dim
        return all(
            self._rows[i][j] == (0 if i != j else (1 if i < p else -1))
            for i in range(n) for j in range(n)
        )

    def inner(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Fraction:
        xv = tuple(exact(v) for v in x)
        yv = tuple(exact(v) for v in y)
        n = self.dim
        if len(xv) != n or len(yv) != n:
            raise ValueError(f"vectors must have dimension {n}")
        return sum(xv[i] * self._rows[i][j] * yv[j]
                   for i in range(n) for j in range(n) if self._rows[i][j])

    def tensor(self) -> DenseTensor:
        """The metric as an order-2 tensor (symmetric, so gamma applies)."""
        return DenseTensor.from_nested([list(row) for row in self._rows])

    def raise_form(self, form: DenseTensor) -> LinearMap:
        """The map C with ``g(C x, y) == B(x, y)``."""
        rows = _as_rows(form)
        if len(rows) != self.dim:
            raise ValueError(f"form dimension {len(rows)} != metric dimension {self.dim}")
        n = self.dim
        # matrix of C is (B g^{-1})^T
        bg = _mat_mul(rows, self._inverse)
        return LinearMap(tuple(tuple(bg[j][i] for j in range(n)) for i in range(n)))

    def lower_map(self, mapping: LinearMap) -> DenseTensor:
        """The form B with ``B(x, y) == g(C x, y)``; inverse of raise_form."""
        if mapping.dim != self.dim:
            raise ValueError(
                f"map dimension {mapping.dim} != metric dimension {self.dim}"
            )
        b = _mat_mul(mapping.transpose().rows, self._rows)
        return DenseTensor.from_nested([list(row) for row in b])

    def is_skew_map(self, mapping: LinearMap) -> bool:
        """Skew as a map: the lowered form is skew-symmetric."""
        b = _mat_mul(self._rows, mapping.rows)
        n = self.dim
        return all(b[i][j] == -b[j][i] for i in range(n) for j in range(i, n))

    def is_symmetric_map(self, mapping: LinearMap) -> bool:
        b = _mat_mul(self._rows, mapping.rows)
        n = self.dim
        return all(b[i][j] == b[j][i] for i in range(n) for j in range(i + 1, n))

    def __eq__(self, other) -> bool:
        return isinstance(other, Metric) and self._rows == other._rows

    def __repr__(self) -> str:
        p, q = self._signature
        return f"Metric(dim={self.dim}, signature=({p},{q}))"

    def to_json_dict(self) -> dict:
        if self.is_standard_form:
            p, q = self._signature
            return {"p": p, "q": q}
        return {"matrix": [[str(v) for v in row] for row in self._rows]}

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> "Metric":
        if "matrix" in payload:
            return cls(payload["matrix"])
        return cls.standard(int(payload["p"]), int(payload["q"]))


def jacobi_operator(tensor: DenseTensor, g: Metric,
                    x: Sequence[Scalar]) -> LinearMap:
    """The map J with ``g(J y, w) = T(y, x, x, w)``.

    Callers are expected to pass an algebraic curvature tensor; only shape
    compatibility is enforced here (the membership check is not free and
    samplers call this in a loop).
    """
    if tensor.order != 4:
        raise ValueError(f"order-4 tensor required, got order {tensor.order}")
    n = g.dim
    if tensor.dim != n:
        raise ValueError(f"tensor dimension {tensor.dim} != metric dimension {n}")
    xv = tuple(exact(v) for v in x)
    if len(xv) != n:
        raise ValueError(f"vector length {len(xv)} != dimension {n}")
    xx = [[xv[b] * xv[c] for c in range(n)] for b in range(n)]
    contracted = [
        [
            sum(tensor[(a, b, c, d)] * xx[b][c]
                for b in range(n) for c in range(n) if xx[b][c])
            for d in range(n)
        ]
        for a in range(n)
    ]
    ginv = g.inverse_rows
    rows = tuple(
        tuple(sum(ginv[e][d] * contracted[a][d] for d in range(n))
              for a in range(n))
        for e in range(n)
    )
    return LinearMap(rows)


def _outer(u: Vector, w: Vector) -> LinearMap:
    return LinearMap(tuple(tuple(ue * wa for wa in w) for ue in u))


def jacobi_gamma_closed(s: DenseTensor, g: Metric,
                        x: Sequence[Scalar]) -> LinearMap:
    """Closed form for the Jacobi operator of ``gamma(S)``:
    ``J y = (g(Cx,x) C y - g(Cy,x) C x) / 3`` with ``C = raise_form(S)``."""
    if s != s.transpose():
        raise ValueError("symmetric matrix required")
    c = g.raise_form(s)
    xv = tuple(exact(v) for v in x)
    u = c(xv)
    gx = tuple(sum(g.rows[i][j] * xv[j] for j in range(g.dim))
               for i in range(g.dim))
    w = c.transpose()(gx)  # w . y == g(Cy, x)
    return (c.scale(g.inner(u, xv)) - _outer(u, w)).scale(Fraction(1, 3))


def jacobi_alpha_closed(a: DenseTensor, g: Metric,
                        x: Sequence[Scalar]) -> LinearMap:
    """Closed form for the Jacobi operator of ``alpha(A)``:
    ``J y = g(Cy,x) C x`` with ``C = raise_form(A)``."""
    if a != -a.transpose():
        raise ValueError("skew matrix required")
    c = g.raise_form(a)
    xv = tuple(exact(v) for v in x)
    u = c(xv)
    gx = tuple(sum(g.rows[i][j] * xv[j] for j in range(g.dim))
               for i in range(g.dim))
    w = c.transpose()(gx)
    return _outer(u, w)


def char_poly(mapping: LinearMap) -> tuple[Fraction, ...]:
    """Monic characteristic polynomial, highest power first, computed by
    the trace-recursion (Faddeev-LeVerrier) scheme: exact in rationals."""
    n = mapping.dim
    coefficients = [Fraction(1)]
    identity = LinearMap.identity(n)
    work = identity
    for k in range(1, n + 1):
        product = mapping @ work
        ck = -product.trace() / k
        coefficients.append(ck)
        work = product + identity.scale(ck)
    return tuple(coefficients)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d <= isqrt(n):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(
    coefficients: Sequence[Scalar],
) -> tuple[tuple[tuple[Fraction, int], ...], tuple[Fraction, ...]]:
    """Extract rational roots (with multiplicity) of a monic polynomial.

    Returns sorted ``(root, multiplicity)`` pairs and the monic unfactored
    remainder; a remainder of ``(1,)`` means the polynomial split
    completely over the rationals.
    """
    coeffs = [exact(c) for c in coefficients]
    if not coeffs or not coeffs[0]:
        raise ValueError("leading coefficient must be nonzero")
    if coeffs[0] != 1:
        coeffs = [c / coeffs[0] for c in coeffs]
    roots: dict[Fraction, int] = {}
    while len(coeffs) > 1:
        if not coeffs[-1]:
            roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
            coeffs.pop()
            continue
        # substitute x = L*t where L clears the denominators: integer monic
        # polynomial whose rational roots are integers dividing its constant
        scale = 1
        for c in coeffs:
            scale = scale * c.denominator // _gcd(scale, c.denominator)
        constant = coeffs[-1] * scale ** (len(coeffs) - 1)
        found = None
        for divisor in _divisors(int(constant)):
            for signed in (divisor, -divisor):
                candidate = Fraction(signed, scale)
                if _poly_eval(coeffs, candidate) == 0:
                    found = candidate
                    break
            if found is not None:
                break
        if found is None:
            break
        coeffs = _deflate(coeffs, found)
        roots[found] = roots.get(found, 0) + 1
    pairs = tuple(sorted(roots.items()))
    return pairs, tuple(coeffs)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _deflate(coeffs: Sequence[Fraction], root: Fraction) -> list[Fraction]:
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + root * out[-1])
    return out


def clifford_check(maps: Iterable[LinearMap], g: Metric,
                   generalized: bool = False) -> bool:
    """True iff the maps are skew w.r.t. ``g``, pairwise anticommute, and
    square to -Id (or to +-Id when ``generalized``)."""
    maps = tuple(maps)
    n = g.dim
    for c in maps:
        if c.dim != n:
            raise ValueError(f"map dimension {c.dim} != metric dimension {n}")
    identity = LinearMap.identity(n)
    minus_identity = -identity
    for c in maps:
        if not g.is_skew_map(c):
            return False
        square = c @ c
        if generalized:
            if square != identity and square != minus_identity:
                return False
        elif square != minus_identity:
            return False
    for i, ci in enumerate(maps):
        for cj in maps[i + 1:]:
            if not (ci @ cj + cj @ ci).is_zero:
                return False
    return True


def quaternion_triple() -> tuple[LinearMap, LinearMap, LinearMap]:
    """Left multiplication by i, j, k on the quaternions as maps of R^4:
    the canonical strict anticommuting family for the Euclidean metric."""
    i = LinearMap([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    j = LinearMap([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]])
    k = LinearMap([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
    return i, j, k


def clifford_family(lam0: Scalar, lams: Sequence[Scalar],
                    maps: Sequence[LinearMap], g: Metric) -> DenseTensor:
    """``T = 3*lam0*gamma(g) + 3*sum lam_i*alpha(lower(C_i))`` for an
    anticommuting family of skew maps squaring to -Id."""
    lams = [exact(v) for v in lams]
    if len(lams) != len(maps):
        raise ValueError(f"{len(lams)} coefficients for {len(maps)} maps")
    if not clifford_check(maps, g):
        raise ValueError(
            "maps must be skew w.r.t. the metric, square to -Id, and "
            "anticommute pairwise"
        )
    total = gamma(g.tensor()).scale(3 * exact(lam0))
    for coefficient, c in zip(lams, maps):
        total = total + alpha(g.lower_map(c)).scale(3 * coefficient)
    return total


def jordan_family(coefficients: Sequence[Scalar],
                  cross_coefficients: Sequence[Sequence[Scalar]],
                  skews: Sequence[DenseTensor]) -> DenseTensor:
    """``T = sum c_i alpha(A_i) + 1/2 sum over i != j of c_ij alpha(A_i + A_j)``
    with a symmetric cross-coefficient matrix."""
    k = len(skews)
    cs = [exact(v) for v in coefficients]
    if len(cs) != k:
        raise ValueError(f"{len(cs)} coefficients for {k} matrices")
    cross = [[exact(v) for v in row] for row in cross_coefficients]
    if len(cross) != k or any(len(row) != k for row in cross):
        raise ValueError(f"cross-coefficient matrix must be {k}x{k}")
    for i in range(k):
        for j in range(i + 1, k):
            if cross[i][j] != cross[j][i]:
                raise ValueError("cross coefficients must be symmetric")
    if k == 0:
        raise ValueError("need at least one skew matrix")
    n = skews[0].dim
    total = DenseTensor.zeros(4, n)
    half = Fraction(1, 2)
    for c, a in zip(cs, skews):
        if c:
            total = total + alpha(a).scale(c)
    for i in range(k):
        for j in range(k):
            if i != j and cross[i][j]:
                total = total + alpha(skews[i] + skews[j]).scale(half * cross[i][j])
    return total


def nilpotent_sym_example(p: int, q: int) -> DenseTensor:
    """A nonzero symmetric S with ``(S F)^2 == 0`` for signature (p, q):
    the all-ones 2x2 block across the last plus and first minus slot."""
    if p < 1 or q < 1:
        raise SignatureError(
            f"signature ({p},{q}) is definite: a symmetric or skew matrix "
            "M with M^2 = 0 has trace(M M^T) = 0 and therefore vanishes"
        )
    m = p + q
    block = {(p - 1, p - 1): 1, (p - 1, p): 1, (p, p - 1): 1, (p, p): 1}
    return DenseTensor.from_entries(2, m, block)


def nilpotent_skew_example(p: int, q: int) -> DenseTensor:
    """A nonzero skew A with ``(A F)^2 == 0`` for signature (p, q), built
    as ``u v^T - v u^T`` from two null, mutually orthogonal vectors."""
    if p < 2 or q < 2:
        raise SignatureError(
            f"signature ({p},{q}): with fewer than two plus or two minus "
            "directions every skew A with (A F)^2 = 0 vanishes"
        )
    m = p + q
    u = [Fraction(0)] * m
    v = [Fraction(0)] * m
    u[0] = u[p] = Fraction(1)
    v[1] = v[p + 1] = Fraction(1)
    return DenseTensor.from_function(
        2, m, lambda x: u[x[0]] * v[x[1]] - v[x[0]] * u[x[1]]
    )


def sample_vectors(dim: int, count: int, seed: int = 0) -> list[Vector]:
    """Deterministic nonzero rational vectors with small entries."""
    rng = random.Random(seed)
    out: list[Vector] = []
    while len(out) < count:
        vec = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                    for _ in range(dim))
        if any(vec):
            out.append(vec)
    return out


def _find_anchor(g: Metric, sign: int) -> Vector:
    n = g.dim
    for i in range(n):
        if g.rows[i][i] == sign:
            return tuple(Fraction(int(j == i)) for j in range(n))
    # non-diagonal or scaled metric: bounded deterministic grid search.
    # May legitimately fail: a quadric can be nonempty over the reals yet
    # have no rational points at all.
    span = sorted({Fraction(v, d) for v in range(-4, 5) for d in (1, 2, 3, 4)})
    from itertools import product as _product
    limit = 500_000
    tried = 0
    for candidate in _product(span, repeat=n):
        tried += 1
        if tried > limit:
            break
        if any(candidate) and g.inner(candidate, candidate) == sign:
            return tuple(candidate)
    raise SignatureError(
        f"found no small rational vector with g(x,x) == {sign:+d}; "
        "the quadric may have no rational points -- use a standard-form "
        "metric for sphere sampling"
    )


def sample_unit_vectors(g: Metric, sign: int, count: int,
                        seed: int = 0) -> list[Vector]:
    """Deterministic rational points with ``g(x,x) == sign`` exactly.

    A rational line ``anchor + s*d`` meets the quadric again at the
    rational parameter ``s = -2 g(anchor, d) / g(d, d)``, so arbitrarily
    many exact sphere points come from random small integer directions.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    p, q = g.signature
    if (sign == 1 and p == 0) or (sign == -1 and q == 0):
        raise SignatureError(
            f"the pseudo-sphere g(x,x) == {sign:+d} is empty in signature ({p},{q})"
        )
    anchor = _find_anchor(g, sign)
    rng = random.Random(seed)
    points: list[Vector] = [anchor]
    seen = {anchor}
    attempts = 0
    while len(points) < count and attempts < 400 * count:
        attempts += 1
        direction = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 2))
                          for _ in range(g.dim))
        if not any(direction):
            continue
        dd = g.inner(direction, direction)
        if not dd:
            continue
        s = -2 * g.inner(anchor, direction) / dd
        if not s:
            continue
        x = tuple(a + s * d for a, d in zip(anchor, direction))
        if x in seen:
            continue
        if g.inner(x, x) != sign:  # cannot happen; guards the algebra above
            raise RuntimeError("sphere sampling produced an off-sphere point")
        seen.add(x)
        points.append(x)
    return points


@dataclass(frozen=True)
class SpectrumReport:
    """Exact Jacobi spectra at sampled pseudo-unit vectors."""

    sign: int
    samples: tuple[Vector, ...]
    roots: tuple[tuple[tuple[Fraction, int], ...], ...]
    remainders: tuple[tuple[Fraction, ...], ...]
    constant: bool
    all_rational: bool

    def to_json_dict(self) -> dict:
        payload = {
            "sign": self.sign,
            "samples": [[str(v) for v in x] for x in self.samples],
            "roots": [
                [{"root": str(r), "multiplicity": m} for r, m in per_sample]
                for per_sample in self.roots
            ],
            "constant": self.constant,
            "all_rational": self.all_rational,
        }
        if not self.all_rational:
            payload["note"] = ("non-rational spectrum: constancy checked at "
                               "characteristic-polynomial level")
        return payload


def osserman_spectrum_sample(tensor: DenseTensor, g: Metric, count: int,
                             sign: int, seed: int = 0) -> SpectrumReport:
    """Sample the pseudo-unit sphere and report exact Jacobi spectra."""
    if not is_algebraic_curvature(tensor):
        raise NotACurvatureTensor("spectrum sampling needs a curvature tensor")
    if tensor.dim != g.dim:
        raise ValueError(f"tensor dimension {tensor.dim} != metric dimension {g.dim}")
    xs = sample_unit_vectors(g, sign, count, seed)
    roots = []
    remainders = []
    for x in xs:
        pairs, remainder = rational_roots(char_poly(jacobi_operator(tensor, g, x)))
        roots.append(pairs)
        remainders.append(remainder)
    fingerprint = {(r, rem) for r, rem in zip(roots, remainders)}
    return SpectrumReport(
        sign=sign,
        samples=tuple(xs),
        roots=tuple(roots),
        remainders=tuple(remainders),
        constant=len(fingerprint) <= 1,
        all_rational=all(len(rem) == 1 for rem in remainders),
    )


def nilpotency_check(tensor: DenseTensor, g: Metric, samples: int,
                     seed: int = 0) -> bool:
    """True iff ``J(x)^2 == 0`` exactly at every sampled x (plus a null
    vector when the signature is indefinite)."""
    if tensor.order != 4 or tensor.dim != g.dim:
        raise ValueError("order-4 tensor matching the metric dimension required")
    xs = sample_vectors(g.dim, samples, seed)
    p, q = g.signature
    if p >= 1 and q >= 1 and g.is_standard_form:
        null = [Fraction(0)] * g.dim
        null[0] = null[p] = Fraction(1)
        xs.append(tuple(null))
    for x in xs:
        j = jacobi_operator(tensor, g, x)
        if not (j @ j).is_zero:
            return False
    return True


@dataclass(frozen=True)
class LorentzReport:
    """Rigidity checks special to Lorentzian signature (1, q)."""

    q: int
    skew_trials: int
    skew_all_non_nilpotent: bool
    jacobi_samples: int
    jacobi_all_zero: bool

    @property
    def ok(self) -> bool:
        return self.skew_all_non_nilpotent and self.jacobi_all_zero

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "skew_trials": self.skew_trials,
            "skew_all_non_nilpotent": self.skew_all_non_nilpotent,
            "jacobi_samples": self.jacobi_samples,
            "jacobi_all_zero": self.jacobi_all_zero,
            "pass": self.ok,
        }


def lorentz_checks(q: int, trials: int, samples: int = 20,
                   seed: int = 0) -> LorentzReport:
    """Signature (1, q): no skew matrix is F-nilpotent (sampled), and the
    nilpotent-symmetric construction has identically vanishing Jacobi
    operators (sampled)."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    m = 1 + q
    g = Metric.standard(1, q)
    f_rows = g.rows
    rng = random.Random(seed)
    skew_ok = True
    for _ in range(trials):
        entries: dict[tuple[int, int], Fraction] = {}
        while not entries:
            for i in range(m):
                for j in range(i + 1, m):
                    value = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                    if value:
                        entries[(i, j)] = value
                        entries[(j, i)] = -value
        a = DenseTensor.from_entries(2, m, entries)
        af = _mat_mul(_as_rows(a), f_rows)
        if all(not v for row in _mat_mul(af, af) for v in row):
            skew_ok = False
    s = nilpotent_sym_example(1, q)
    t = gamma(s)
    xs = sample_vectors(m, samples, seed + 1)
    jacobi_ok = all(jacobi_operator(t, g, x).is_zero for x in xs)
    return LorentzReport(
        q=q,
        skew_trials=trials,
        skew_all_non_nilpotent=skew_ok,
        jacobi_samples=len(xs),
        jacobi_all_zero=jacobi_ok,
    )
