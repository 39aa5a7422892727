"""Deterministic random generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from symcurv import DenseTensor, GroupRingElement, Permutation, alpha, gamma


def rand_fraction(rng: random.Random, lo: int = -5, hi: int = 5,
                  max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_symmetric(rng: random.Random, n: int) -> DenseTensor:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rand_fraction(rng)
    return DenseTensor.from_nested(rows)


def rand_skew(rng: random.Random, n: int) -> DenseTensor:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            value = rand_fraction(rng)
            rows[i][j] = value
            rows[j][i] = -value
    return DenseTensor.from_nested(rows)


def rand_matrix(rng: random.Random, n: int) -> DenseTensor:
    return DenseTensor.from_nested(
        [[rand_fraction(rng) for _ in range(n)] for _ in range(n)]
    )


def rand_tensor(rng: random.Random, order: int, dim: int) -> DenseTensor:
    return DenseTensor(order, dim,
                       [rand_fraction(rng, -3, 3, 2)
                        for _ in range(dim ** order)])


def rand_curvature(rng: random.Random, n: int, pieces: int = 2) -> DenseTensor:
    """A random rational combination of gammas and alphas (hence curvature)."""
    total = DenseTensor.zeros(4, n)
    for _ in range(pieces):
        c = rand_fraction(rng, -3, 3, 2)
        total = total + gamma(rand_symmetric(rng, n)).scale(c)
        d = rand_fraction(rng, -3, 3, 2)
        total = total + alpha(rand_skew(rng, n)).scale(d)
    return total


def rand_vector(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(rand_fraction(rng, -4, 4, 3) for _ in range(n))


def rand_ring_element(rng: random.Random, degree: int,
                      terms: int = 3) -> GroupRingElement:
    images = list(range(1, degree + 1))
    chosen = []
    for _ in range(terms):
        rng.shuffle(images)
        chosen.append((Permutation(images), rand_fraction(rng, -4, 4, 3)))
    return GroupRingElement(degree, chosen)


# ----------------------------------------------------- Schur polynomial oracle
#
# Independent check of the Littlewood-Richardson implementation: expand each
# class as its generating function over semistandard tableaux (a polynomial
# in `nvars` variables) and compare products coefficient-by-coefficient.
# Nothing here shares code with the lattice-word counting under test.

def schur_polynomial(lam, nvars: int) -> dict[tuple[int, ...], int]:
    """Monomial dict of the degree-|lam| Schur polynomial in `nvars` variables."""
    rows = list(lam.parts)
    if not rows:
        return {(0,) * nvars: 1}
    out: dict[tuple[int, ...], int] = {}
    grid = [[0] * r for r in rows]

    def fill(i: int, j: int) -> None:
        if i == len(rows):
            content = [0] * nvars
            for row in grid:
                for v in row:
                    content[v - 1] += 1
            key = tuple(content)
            out[key] = out.get(key, 0) + 1
            return
        ni, nj = (i, j + 1) if j + 1 < rows[i] else (i + 1, 0)
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])          # rows weakly increase
        if i > 0 and j < rows[i - 1]:
            lo = max(lo, grid[i - 1][j] + 1)      # columns strictly increase
        for v in range(lo, nvars + 1):
            grid[i][j] = v
            fill(ni, nj)
        grid[i][j] = 0

    fill(0, 0)
    return out


def poly_mul(a: dict, b: dict) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return out


def schur_sum_polynomial(s, nvars: int) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for part, mult in s.items():
        for exp, coeff in schur_polynomial(part, nvars).items():
            out[exp] = out.get(exp, 0) + mult * coeff
    return out
