"""Algebraic curvature tensors: constructors, membership, decompositions.

An algebraic curvature tensor is an order-4 tensor that is antisymmetric in
its first and in its second index pair, symmetric under exchanging the
pairs, and satisfies the first Bianchi identity (the cyclic sum over the
last three slots vanishes).  Equivalently -- and the equivalence is checked
at runtime -- ``T`` satisfies ``ystar T == 12 T`` for the starred Young
symmetrizer of the (2,2) tableau ``[[1,3],[2,4]]``.

Two quadratic constructors produce such tensors from order-2 data:

* ``gamma(S)[i,j,k,l] = (S[i,l]S[j,k] - S[i,k]S[j,l]) / 3``, S symmetric,
* ``alpha(A)[i,j,k,l] = (2A[i,j]A[k,l] + A[i,k]A[j,l] - A[i,l]A[j,k]) / 3``,
  A skew,

and every algebraic curvature tensor is a signed rational combination of
gammas and alphas.  The three ``decompose_*`` functions compute such
combinations constructively and verify the reconstruction exactly before
returning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

from .symgroup import GroupRingElement, solve_right_factor
from .tensor_ops import (
    DenseTensor,
    apply_symmetry_operator,
    slice_pairs,
    sym_split,
)
from .young import curvature_tableau, young_symmetrizer


class NotACurvatureTensor(ValueError):
    """Raised when an operation requires the curvature symmetries and the
    input does not have them."""


class CriteriaDisagreement(RuntimeError):
    """The direct symmetry test and the symmetrizer test disagreed.

    The two criteria are mathematically equivalent, so this can only mean
    an implementation bug; it is raised loudly instead of picking a side.
    """


@dataclass(frozen=True)
class CanonicalElements:
    """The degree-4 group-ring elements behind every curvature computation.

    ``swap_sym`` is the unnormalized pair-exchange symmetrization
    ``id + (1 3)(2 4)`` used inside the generators; ``swap_proj`` is its
    idempotent half, the form used by the mixed decomposition.  The gamma
    and alpha generators span the same right ideal as ``symmetrizer_star``;
    ``gamma_preimage`` is a fixed solution of
    ``gamma_generator * x == symmetrizer_star`` (the gamma generator kills
    ``symmetrizer_star`` from the left, so a rescaling argument is not
    available on that side and an exact linear solve is used instead).
    """

    symmetrizer: GroupRingElement
    symmetrizer_star: GroupRingElement
    swap_sym: GroupRingElement
    swap_proj: GroupRingElement
    pair_sym: GroupRingElement
    pair_skew: GroupRingElement
    gamma_generator: GroupRingElement
    alpha_generator: GroupRingElement
    gamma_preimage: GroupRingElement


def _ring(*terms) -> GroupRingElement:
    return GroupRingElement(4, terms)


@lru_cache(maxsize=1)
def canonical_elements() -> CanonicalElements:
    """Build (once) and sanity-check the canonical degree-4 elements."""
    from .symgroup import Permutation

    identity = Permutation.identity(4)
    swap_pairs = Permutation.from_cycles(4, (1, 3), (2, 4))
    t12 = Permutation.from_cycles(4, (1, 2))
    t34 = Permutation.from_cycles(4, (3, 4))

    y = young_symmetrizer(curvature_tableau())
    ystar = y.star()
    swap_sym = _ring((identity, 1), (swap_pairs, 1))
    swap_proj = swap_sym.scale(Fraction(1, 2))
    pair_sym = _ring((identity, 1), (t12, 1)) * _ring((identity, 1), (t34, 1))
    pair_skew = _ring((identity, 1), (t12, -1)) * _ring((identity, 1), (t34, -1))
    gamma_gen = ystar * swap_sym * pair_sym
    alpha_gen = ystar * swap_sym * pair_skew

    if gamma_gen.is_zero or alpha_gen.is_zero:
        raise RuntimeError("generator construction collapsed to zero")
    if swap_proj * swap_proj != swap_proj:
        raise RuntimeError("pair-exchange projector is not idempotent")
    preimage = solve_right_factor(gamma_gen, ystar)
    if preimage is None or gamma_gen * preimage != ystar:
        raise RuntimeError("no right factor maps the gamma generator onto "
                           "the starred symmetrizer")
    return CanonicalElements(
        symmetrizer=y,
        symmetrizer_star=ystar,
        swap_sym=swap_sym,
        swap_proj=swap_proj,
        pair_sym=pair_sym,
        pair_skew=pair_skew,
        gamma_generator=gamma_gen,
        alpha_generator=alpha_gen,
        gamma_preimage=preimage,
    )


def _require_order2(t: DenseTensor, what: str) -> None:
    if t.order != 2:
        raise ValueError(f"{what} must have order 2, got order {t.order}")


def _require_symmetric(s: DenseTensor) -> None:
    _require_order2(s, "symmetric input")
    if s != s.transpose():
        raise ValueError("input matrix is not symmetric")


def _require_skew(a: DenseTensor) -> None:
    _require_order2(a, "skew input")
    if a != -a.transpose():
        raise ValueError("input matrix is not skew-symmetric")


def gamma(s: DenseTensor) -> DenseTensor:
    """Curvature tensor of a symmetric matrix:
    ``gamma(S)[i,j,k,l] = (S[i,l]S[j,k] - S[i,k]S[j,l]) / 3``."""
    _require_symmetric(s)
    third = Fraction(1, 3)
    return DenseTensor.from_function(
        4, s.dim,
        lambda x: third * (s[(x[0], x[3])] * s[(x[1], x[2])]
                           - s[(x[0], x[2])] * s[(x[1], x[3])]),
    )


def alpha(a: DenseTensor) -> DenseTensor:
    """Curvature tensor of a skew matrix:
    ``alpha(A)[i,j,k,l] = (2A[i,j]A[k,l] + A[i,k]A[j,l] - A[i,l]A[j,k]) / 3``."""
    _require_skew(a)
    third = Fraction(1, 3)
    return DenseTensor.from_function(
        4, a.dim,
        lambda x: third * (2 * a[(x[0], x[1])] * a[(x[2], x[3])]
                           + a[(x[0], x[2])] * a[(x[1], x[3])]
                           - a[(x[0], x[3])] * a[(x[1], x[2])]),
    )


def bianchi_defect(tensor: DenseTensor) -> DenseTensor:
    """Cyclic sum ``T[i,j,k,l] + T[i,k,l,j] + T[i,l,j,k]``; zero iff the
    first Bianchi identity holds."""
    if tensor.order != 4:
        raise ValueError(f"order-4 tensor required, got order {tensor.order}")
    return DenseTensor.from_function(
        4, tensor.dim,
        lambda x: (tensor[(x[0], x[1], x[2], x[3])]
                   + tensor[(x[0], x[2], x[3], x[1])]
                   + tensor[(x[0], x[3], x[1], x[2])]),
    )


@dataclass(frozen=True)
class CurvatureCheck:
    """Outcome of both membership criteria plus diagnostics."""

    direct_ok: bool
    young_ok: bool
    first_violation: str | None
    bianchi_nonzero: int

    @property
    def ok(self) -> bool:
        return self.direct_ok and self.young_ok

    def to_json_dict(self) -> dict:
        return {
            "direct": self.direct_ok,
            "symmetrizer": self.young_ok,
            "first_violation": self.first_violation,
            "bianchi_nonzero": self.bianchi_nonzero,
            "pass": self.ok,
        }


_DIRECT_CONDITIONS = (
    ("antisymmetry in the first index pair",
     lambda t, x: t[x] == -t[(x[1], x[0], x[2], x[3])]),
    ("antisymmetry in the second index pair",
     lambda t, x: t[x] == -t[(x[0], x[1], x[3], x[2])]),
    ("pair-exchange symmetry",
     lambda t, x: t[x] == t[(x[2], x[3], x[0], x[1])]),
)


def check_curvature(tensor: DenseTensor) -> CurvatureCheck:
    """Run the direct symmetry test and the symmetrizer test side by side."""
    if tensor.order != 4:
        raise ValueError(f"order-4 tensor required, got order {tensor.order}")
    first_violation = None
    for name, holds in _DIRECT_CONDITIONS:
        if all(holds(tensor, x) for x in tensor.indices()):
            continue
        first_violation = name
        break
    defect = bianchi_defect(tensor)
    bianchi_nonzero = sum(1 for _ in defect.nonzero_items())
    if first_violation is None and bianchi_nonzero:
        first_violation = "first Bianchi identity"
    direct_ok = first_violation is None

    ystar = canonical_elements().symmetrizer_star
    young_ok = apply_symmetry_operator(ystar, tensor) == tensor.scale(12)
    return CurvatureCheck(direct_ok, young_ok, first_violation, bianchi_nonzero)


def is_algebraic_curvature(tensor: DenseTensor) -> bool:
    """True iff ``tensor`` has the curvature symmetries.

    Both criteria are evaluated; a disagreement raises
    :class:`CriteriaDisagreement` because it would expose a bug, not a
    property of the input.
    """
    result = check_curvature(tensor)
    if result.direct_ok != result.young_ok:
        raise CriteriaDisagreement(
            f"direct test says {result.direct_ok}, symmetrizer test says "
            f"{result.young_ok}; violation={result.first_violation!r}"
        )
    return result.ok


def _require_curvature(tensor: DenseTensor) -> None:
    if not is_algebraic_curvature(tensor):
        raise NotACurvatureTensor(
            "input is not an algebraic curvature tensor: "
            f"{check_curvature(tensor).first_violation}"
        )


class DecompositionTerm(NamedTuple):
    sign: int                # +1 or -1
    weight: Fraction         # strictly positive
    matrix: DenseTensor      # symmetric for gamma terms, skew for alpha terms


@dataclass(frozen=True)
class CurvatureDecomposition:
    """A signed, weighted sum of gammas and alphas equal to some tensor.

    Weights stay rational so that ``reconstruct`` is exact; the textbook
    sign-only form would need irrational matrix rescalings
    (``gamma(c*S) == c^2 * gamma(S)``), so it is only available through
    :meth:`approx_unit_terms`, which is explicitly floating point.
    """

    kind: str  # "mixed" | "pure-gamma" | "pure-alpha"
    dim: int
    gamma_terms: tuple[DecompositionTerm, ...]
    alpha_terms: tuple[DecompositionTerm, ...]

    def reconstruct(self) -> DenseTensor:
        total = DenseTensor.zeros(4, self.dim)
        for sign, weight, matrix in self.gamma_terms:
            total = total + gamma(matrix).scale(sign * weight)
        for sign, weight, matrix in self.alpha_terms:
            total = total + alpha(matrix).scale(sign * weight)
        return total

    @property
    def term_count(self) -> int:
        return len(self.gamma_terms) + len(self.alpha_terms)

    def approx_unit_terms(self) -> list[tuple[str, int, list[list[float]]]]:
        """Sign-only display form: weight folded into the matrix as a float
        ``sqrt(weight)`` factor.  NOT exact; never feed this back in."""
        out = []
        for label, terms in (("gamma", self.gamma_terms), ("alpha", self.alpha_terms)):
            for sign, weight, matrix in terms:
                root = math.sqrt(weight)
                rows = [[float(v) * root for v in row] for row in matrix.to_nested()]
                out.append((label, sign, rows))
        return out

    def to_json_dict(self) -> dict:
        def encode(label: str, terms: Iterable[DecompositionTerm]) -> list[dict]:
            return [
                {
                    "map": label,
                    "sign": t.sign,
                    "weight": str(t.weight),
                    "matrix": [[str(v) for v in row] for row in t.matrix.to_nested()],
                }
                for t in terms
            ]

        return {
            "kind": self.kind,
            "dim": self.dim,
            "terms": encode("gamma", self.gamma_terms) + encode("alpha", self.alpha_terms),
        }

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> "CurvatureDecomposition":
        gammas, alphas = [], []
        for entry in payload.get("terms", ()):
            term = DecompositionTerm(
                sign=int(entry["sign"]),
                weight=Fraction(entry["weight"]),
                matrix=DenseTensor.from_nested(entry["matrix"]),
            )
            (gammas if entry["map"] == "gamma" else alphas).append(term)
        return cls(
            kind=payload["kind"],
            dim=int(payload["dim"]),
            gamma_terms=tuple(gammas),
            alpha_terms=tuple(alphas),
        )


def _merge_terms(raw: Iterable[tuple[Fraction, DenseTensor]]
                 ) -> tuple[DecompositionTerm, ...]:
    """Merge signed-weight terms over equal matrices.

    Matrices are sign-normalized first (first nonzero entry made positive);
    this is harmless because the quadratic maps ignore the overall sign of
    their argument.
    """
    acc: dict[tuple, tuple[Fraction, DenseTensor]] = {}
    for weight, matrix in raw:
        if not weight or matrix.is_zero:
            continue
        for _, value in matrix.nonzero_items():
            if value < 0:
                matrix = -matrix
            break
        key = tuple(matrix[idx] for idx in matrix.indices())
        old = acc.get(key)
        acc[key] = ((old[0] + weight) if old else weight, matrix)
    terms = [
        DecompositionTerm(1 if total > 0 else -1, abs(total), matrix)
        for total, matrix in acc.values()
        if total
    ]
    terms.sort(key=lambda t: (tuple(t.matrix[i] for i in t.matrix.indices()), t.sign))
    return tuple(terms)


def _checked(decomposition: CurvatureDecomposition,
             source: DenseTensor) -> CurvatureDecomposition:
    if decomposition.reconstruct() != source:
        raise RuntimeError(
            f"{decomposition.kind} decomposition failed to reconstruct its "
            "input exactly; this is a bug"
        )
    return decomposition


def decompose_mixed(tensor: DenseTensor) -> CurvatureDecomposition:
    """Write a curvature tensor as signed weighted gammas plus alphas.

    The pair-exchange projector fixes the input, so slicing the input
    itself into ``M (x) unit`` pairs and symmetrizing gives
    ``T = 1/2 sum (M (x) N + N (x) M)``; the polarization identity turns
    each summand into a difference of squares, each square splits into
    symmetric + skew parts, and applying the starred symmetrizer kills the
    cross terms, leaving gammas and alphas only.
    """
    _require_curvature(tensor)
    half = Fraction(1, 2)
    raw_gamma: list[tuple[Fraction, DenseTensor]] = []
    raw_alpha: list[tuple[Fraction, DenseTensor]] = []
    for m, n in slice_pairs(tensor):
        for weight, square in ((half, m + n), (-half, m), (-half, n)):
            sym, skew = sym_split(square)
            raw_gamma.append((weight, sym))
            raw_alpha.append((weight, skew))
    return _checked(
        CurvatureDecomposition("mixed", tensor.dim,
                               _merge_terms(raw_gamma), _merge_terms(raw_alpha)),
        tensor,
    )


def decompose_pure(tensor: DenseTensor, kind: str) -> CurvatureDecomposition:
    """Write a curvature tensor using gammas only or alphas only.

    kind="alpha": the alpha generator rescales curvature tensors by 96, so
    ``T' = T/96`` satisfies ``alpha_generator T' == T``; slicing ``T'``,
    skew-symmetrizing both slice factors, polarizing, and applying the
    starred symmetrizer leaves alpha terms only.

    kind="gamma": the gamma generator annihilates curvature tensors from
    the left, so instead ``T' = (gamma_preimage T)/12`` is used, which
    satisfies ``gamma_generator T' == T``; then the same pipeline with
    symmetrized factors leaves gamma terms only.
    """
    if kind not in ("gamma", "alpha"):
        raise ValueError(f"kind must be 'gamma' or 'alpha', got {kind!r}")
    _require_curvature(tensor)
    elements = canonical_elements()
    if kind == "alpha":
        source = tensor.scale(Fraction(1, 96))
    else:
        source = apply_symmetry_operator(
            elements.gamma_preimage, tensor).scale(Fraction(1, 12))

    raw: list[tuple[Fraction, DenseTensor]] = []
    for m, n in slice_pairs(source):
        if kind == "gamma":
            first, second = m + m.transpose(), n + n.transpose()
        else:
            first, second = m - m.transpose(), n - n.transpose()
        for weight, square in ((Fraction(12), first + second),
                               (Fraction(-12), first),
                               (Fraction(-12), second)):
            raw.append((weight, square))

    merged = _merge_terms(raw)
    if kind == "gamma":
        decomposition = CurvatureDecomposition("pure-gamma", tensor.dim, merged, ())
    else:
        decomposition = CurvatureDecomposition("pure-alpha", tensor.dim, (), merged)
    return _checked(decomposition, tensor)


@dataclass(frozen=True)
class TableLine:
    label: str
    passed: bool


@dataclass(frozen=True)
class IdentityTableReport:
    lines: tuple[TableLine, ...]

    @property
    def all_ok(self) -> bool:
        return all(line.passed for line in self.lines)

    def to_json_dict(self) -> dict:
        return {
            "checks": [{"name": l.label, "pass": l.passed} for l in self.lines],
            "all_pass": self.all_ok,
        }


def verify_identity_table(
    elements: CanonicalElements | None = None,
) -> IdentityTableReport:
    """Recompute the nine products among ``ystar`` and the two generators
    and compare with their known closed forms (coefficients 12, 96, 0).

    ``elements`` exists for fault injection in tests and the CLI; the
    default is the canonical set.
    """
    e = elements if elements is not None else canonical_elements()
    ys, gg, ag = e.symmetrizer_star, e.gamma_generator, e.alpha_generator
    cases = (
        ("ystar . ystar == 12 ystar", ys * ys == ys.scale(12)),
        ("ystar . gamma_gen == 12 gamma_gen", ys * gg == gg.scale(12)),
        ("gamma_gen . ystar == 0", (gg * ys).is_zero),
        ("ystar . alpha_gen == 12 alpha_gen", ys * ag == ag.scale(12)),
        ("alpha_gen . ystar == 96 ystar", ag * ys == ys.scale(96)),
        ("gamma_gen . gamma_gen == 0", (gg * gg).is_zero),
        ("alpha_gen . alpha_gen == 96 alpha_gen", ag * ag == ag.scale(96)),
        ("alpha_gen . gamma_gen == 96 gamma_gen", ag * gg == gg.scale(96)),
        ("gamma_gen . alpha_gen == 0", (gg * ag).is_zero),
    )
    return IdentityTableReport(tuple(TableLine(*case) for case in cases))
