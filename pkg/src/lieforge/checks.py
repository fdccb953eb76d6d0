"""Declarative verification engine.

Every algebraic identity the package claims is encoded as a named check over
generator sets; each run produces a :class:`CheckReport` with the worst
residual, the tolerance it was held to, and a witness when it failed.
Residuals are Frobenius norms of (left side - right side), maximised over all
index pairs, so the same engine validates hand-built, extracted and candidate
generator sets alike.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .generators import GeneratorSet, Kind, gamma, k2, rep22_v, v2, VectorParams
from .linalg import DEFAULT_TOL, Tolerance

__all__ = [
    "ShapeError",
    "Identity",
    "CheckReport",
    "EPS3",
    "reports_to_json_lines",
    "all_passed",
    "check_su2_fundamental",
    "check_lorentz",
    "check_poincare",
    "check_2rep_vk_asymmetry",
    "gamma_match_report",
]


class ShapeError(ValueError):
    """A generator set has the wrong kind or member count for a check."""


class Identity(str, Enum):
    """Stable identifiers, one per verified relation."""

    JJ_COMMUTATION = "jj-commutation"
    JJ_ANTICOMMUTATION = "jj-anticommutation"
    LORENTZ_JJ = "lorentz-jj"
    LORENTZ_JK = "lorentz-jk"
    LORENTZ_KK = "lorentz-kk"
    VECTOR_ROTATION = "vector-rotation"
    VECTOR_BOOST = "vector-boost"
    MOMENTA_COMMUTE = "momenta-commute"
    VK_ANTISYMMETRY = "vk-antisymmetry"
    TRANSFER_COMMUTATION = "transfer-commutation"
    TRANSFER_CLOSED_FORM = "transfer-closed-form"
    GAMMA_VECTOR_MATCH = "gamma-vector-match"
    ROTATION_INVARIANCE = "rotation-invariance"
    INTERVAL_INVARIANCE = "interval-invariance"
    DETERMINANT_INTERVAL = "determinant-interval"
    AFFINE_COMPOSITION = "affine-composition"
    TRANSLATION_DISPLACEMENT = "translation-displacement"
    INTERTWINING = "intertwining"
    STRUCTURE_RECONSTRUCTION = "structure-reconstruction"
    ADJOINT_CLOSURE = "adjoint-closure"
    ANTICOMMUTATOR_OBSTRUCTION = "anticommutator-obstruction"


# Totally antisymmetric 3-index symbol, tabulated as literal data so checks
# never depend on the code paths they are checking.
EPS3 = np.zeros((3, 3, 3))
for (_a, _b, _c), _v in {
    (0, 1, 2): 1.0,
    (1, 2, 0): 1.0,
    (2, 0, 1): 1.0,
    (0, 2, 1): -1.0,
    (2, 1, 0): -1.0,
    (1, 0, 2): -1.0,
}.items():
    EPS3[_a, _b, _c] = _v
EPS3.flags.writeable = False


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check.

    ``passed`` is exactly ``max_residual < tolerance``; ``witness`` is present
    only on failure and names the worst index pair.
    """

    identity: Identity
    max_residual: float
    tolerance: float
    passed: bool
    subject: str = ""
    witness: dict | None = None
    note: str | None = None

    def to_json(self) -> dict:
        return {
            "identity": self.identity.value,
            "subject": self.subject,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "witness": self.witness,
            "note": self.note,
        }


def make_report(
    identity: Identity,
    max_residual: float,
    tolerance: float,
    subject: str = "",
    witness: dict | None = None,
    note: str | None = None,
) -> CheckReport:
    passed = max_residual < tolerance
    return CheckReport(
        identity=identity,
        max_residual=float(max_residual),
        tolerance=float(tolerance),
        passed=passed,
        subject=subject,
        witness=witness if not passed else None,
        note=note,
    )


def reports_to_json_lines(reports) -> str:
    """One compact JSON object per line, in report order."""
    return "\n".join(
        json.dumps(r.to_json(), separators=(",", ":")) for r in reports
    )


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


# Members arrive through GeneratorSet, already validated; the hot loops below
# work on the raw arrays to keep whole-table checks in the sub-millisecond
# range.
def _comm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def _acomm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def _worst(pairs) -> tuple[float, dict | None]:
    """Max Frobenius residual over (label, lhs, rhs) triples, with argmax."""
    worst = 0.0
    where: dict | None = None
    for label, lhs, rhs in pairs:
        r = float(np.linalg.norm(lhs - rhs))
        if r > worst:
            worst = r
            where = {"indices": list(label[0]), "description": label[1]}
    return worst, where


def check_su2_fundamental(
    J: GeneratorSet,
    tol: Tolerance = DEFAULT_TOL,
    anticommutators: bool | None = None,
) -> list[CheckReport]:
    """Fundamental bracket table of an angular-momentum trio.

    Commutators must close with the antisymmetric structure constants; the
    anticommutator check asserts the two-dimensional pattern
    {J_i, J_j} = (1/2) delta_ij * identity, which holds only in the
    fundamental rep, so by default it runs just for dimension-2 sets.  Pass
    ``anticommutators=True`` to force it (e.g. to exhibit how a dimension-3
    trio violates it).
    """
    if J.kind is not Kind.ANGULAR_MOMENTUM or len(J) != 3:
        raise ShapeError("expected an angular-momentum set with 3 members")
    dim = J.rep.dim
    eye = np.eye(dim, dtype=complex)

    comm_pairs = []
    for i in range(1, 4):
        for j in range(1, 4):
            rhs = 1j * sum(EPS3[i - 1, j - 1, k - 1] * J[k] for k in range(1, 4))
            comm_pairs.append(
                (((i, j), f"commutator pair (i={i}, j={j})"), _comm(J[i], J[j]), rhs)
            )
    res, wit = _worst(comm_pairs)
    reports = [
        make_report(Identity.JJ_COMMUTATION, res, tol.abs_eps, subject=f"{J.rep.tag}-rep", witness=wit)
    ]

    do_anti = anticommutators if anticommutators is not None else dim == 2
    if do_anti:
        anti_pairs = []
        for i in range(1, 4):
            for j in range(1, 4):
                rhs = (0.5 if i == j else 0.0) * eye
                anti_pairs.append(
                    (
                        ((i, j), f"anticommutator pair (i={i}, j={j})"),
                        _acomm(J[i], J[j]),
                        rhs,
                    )
                )
        res, wit = _worst(anti_pairs)
        reports.append(
            make_report(
                Identity.JJ_ANTICOMMUTATION, res, tol.abs_eps, subject=f"{J.rep.tag}-rep", witness=wit
            )
        )
    return reports


def check_lorentz(
    J: GeneratorSet, K: GeneratorSet, tol: Tolerance = DEFAULT_TOL, note: str | None = None
) -> list[CheckReport]:
    """Closure of rotations and boosts: [J,J] -> J, [J,K] -> K, [K,K] -> -J,
    all with the antisymmetric structure constants, over all 9 index pairs
    each."""
    if len(J) != 3 or len(K) != 3:
        raise ShapeError("expected two 3-member sets")
    if J.rep.dim != K.rep.dim:
        raise ShapeError("rotation and boost sets must share a dimension")
    subject = f"{J.rep.tag}-rep"

    def relation(left, right, target, sign):
        pairs = []
        for i in range(1, 4):
            for j in range(1, 4):
                rhs = sign * 1j * sum(
                    EPS3[i - 1, j - 1, k - 1] * target[k] for k in range(1, 4)
                )
                pairs.append(
                    (((i, j), f"pair (i={i}, j={j})"), _comm(left[i], right[j]), rhs)
                )
        return _worst(pairs)

    res_jj, wit_jj = relation(J, J, J, +1)
    res_jk, wit_jk = relation(J, K, K, +1)
    res_kk, wit_kk = relation(K, K, J, -1)
    return [
        make_report(Identity.LORENTZ_JJ, res_jj, tol.abs_eps, subject=subject, witness=wit_jj),
        make_report(Identity.LORENTZ_JK, res_jk, tol.abs_eps, subject=subject, witness=wit_jk),
        make_report(Identity.LORENTZ_KK, res_kk, tol.abs_eps, subject=subject, witness=wit_kk, note=note),
    ]


def vector_relation_reports(
    J: GeneratorSet,
    K: GeneratorSet,
    V: GeneratorSet,
    tol: Tolerance = DEFAULT_TOL,
    alpha: complex = 1.0,
    subject: str | None = None,
) -> list[CheckReport]:
    """The two vector-family relations.

    Rotations mix only the spatial members: [V^mu, J^j] = i eps(mu,j,k) V^k
    with eps vanishing whenever mu is the time index.  Boosts swap each
    spatial member with the time member, scaled by alpha:
    [V^mu, K^j] = -i (alpha d(j,mu) V^4 + (1/alpha) d(4,mu) V^j).
    """
    if len(V) != 4:
        raise ShapeError("expected a 4-member vector family")
    if not (J.rep.dim == K.rep.dim == V.rep.dim):
        raise ShapeError("all sets must share a dimension")
    alpha = complex(alpha)
    if alpha == 0:
        raise ShapeError("alpha must be nonzero")
    subject = subject if subject is not None else f"{V.rep.tag}-rep"

    rot_pairs = []
    boost_pairs = []
    zero = np.zeros((V.rep.dim, V.rep.dim), dtype=complex)
    for mu in range(1, 5):
        for j in range(1, 4):
            if mu <= 3:
                rot_rhs = 1j * sum(
                    EPS3[mu - 1, j - 1, k - 1] * V[k] for k in range(1, 4)
                )
            else:
                rot_rhs = zero
            rot_pairs.append(
                (((mu, j), f"pair (mu={mu}, j={j})"), _comm(V[mu], J[j]), rot_rhs)
            )
            boost_rhs = -1j * (
                (alpha * V[4] if j == mu else zero)
                + ((1 / alpha) * V[j] if mu == 4 else zero)
            )
            boost_pairs.append(
                (((mu, j), f"pair (mu={mu}, j={j})"), _comm(V[mu], K[j]), boost_rhs)
            )
    res_rot, wit_rot = _worst(rot_pairs)
    res_boost, wit_boost = _worst(boost_pairs)
    return [
        make_report(Identity.VECTOR_ROTATION, res_rot, tol.abs_eps, subject=subject, witness=wit_rot),
        make_report(Identity.VECTOR_BOOST, res_boost, tol.abs_eps, subject=subject, witness=wit_boost),
    ]


def check_poincare(
    J: GeneratorSet,
    K: GeneratorSet,
    V: GeneratorSet,
    tol: Tolerance = DEFAULT_TOL,
    alpha: complex = 1.0,
    subject: str | None = None,
) -> list[CheckReport]:
    """Full bracket table of rotations, boosts and a vector family.

    Runs the Lorentz closure, both vector relations at the given alpha, and,
    when the vector family is a momentum set, the mutual-commutation check
    over all 16 pairs.
    """
    subject = subject if subject is not None else f"{V.rep.tag}-rep"
    reports = check_lorentz(J, K, tol)
    reports.extend(vector_relation_reports(J, K, V, tol, alpha, subject=subject))
    if V.kind is Kind.MOMENTUM:
        zero = np.zeros((V.rep.dim, V.rep.dim), dtype=complex)
        pairs = [
            (((mu, nu), f"pair (mu={mu}, nu={nu})"), _comm(V[mu], V[nu]), zero)
            for mu in range(1, 5)
            for nu in range(1, 5)
        ]
        res, wit = _worst(pairs)
        reports.append(
            make_report(Identity.MOMENTA_COMMUTE, res, tol.abs_eps, subject=subject, witness=wit)
        )
    return reports


def check_2rep_vk_asymmetry(tol: Tolerance = DEFAULT_TOL) -> CheckReport:
    """Demonstrate that the fundamental rep cannot host momenta.

    In the 2-dimensional family both V^i and K^j are multiples of the angular
    momenta, so [V^i, K^j] is antisymmetric in (i, j), while a translation
    algebra needs it symmetric (proportional to delta_ij).  The check passes
    when the symmetric part vanishes while the commutators themselves do not;
    a degenerate all-zero family would force the residual to 1.
    """
    V = v2(1.0, 1.0)
    K = k2()
    sym = 0.0
    wit = None
    largest = 0.0
    for i in range(1, 4):
        for j in range(1, 4):
            cij = _comm(V[i], K[j])
            cji = _comm(V[j], K[i])
            r = float(np.linalg.norm(cij + cji))
            if r > sym:
                sym = r
                wit = {"indices": [i, j], "description": f"symmetric part of pair (i={i}, j={j})"}
            if i != j:
                largest = max(largest, float(np.linalg.norm(cij)))
    residual = sym if largest > 0.1 else max(sym, 1.0)
    return make_report(
        Identity.VK_ANTISYMMETRY,
        residual,
        tol.abs_eps,
        subject="2-rep",
        witness=wit,
        note=f"largest off-diagonal commutator norm {largest:.6g} (must be nonzero)",
    )


def gamma_match_report(tol: Tolerance = DEFAULT_TOL) -> CheckReport:
    """The gamma matrices coincide with the doubled vector family at the
    default constants (c_plus = -2i, c_minus = +2i, alpha = 1)."""
    g = gamma()
    V = rep22_v(VectorParams())
    pairs = [
        (((mu,), f"member mu={mu}"), g[mu], V[mu]) for mu in range(1, 5)
    ]
    res, wit = _worst(pairs)
    return make_report(
        Identity.GAMMA_VECTOR_MATCH, res, tol.abs_eps, subject="2+2-rep", witness=wit
    )
