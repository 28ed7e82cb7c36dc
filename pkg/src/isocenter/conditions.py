"""Coefficient-level isochronicity conditions and geometric complexity.

Each checker evaluates two independent routes (coefficient relations and
the defining polynomial identity) and insists they agree exactly; modulus
conditions are handled as identities between products with conjugates,
never via square roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import BiPoly, GaussianRational
from .errors import InputError, InternalInconsistencyError
from .prepared import PlanarField, decompose


@dataclass(frozen=True)
class ConditionVerdict:
    condition_id: str
    holds: bool
    failing_relations: list[tuple[str, GaussianRational]] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "condition": self.condition_id,
            "holds": self.holds,
            "failing": [
                {"relation": rel, "residual": str(res)}
                for rel, res in self.failing_relations
            ],
        }


@dataclass(frozen=True)
class GeomComplexity:
    """(q, m): q polynomial identities of degree at most m, in an ambient
    coefficient space of the stated dimension."""

    q: int
    m: int
    ambient_dim: int

    def to_json_obj(self) -> dict:
        return {"q": self.q, "m": self.m, "ambient_dim": self.ambient_dim}


def _uniform_relations(f: PlanarField) -> list[tuple[str, GaussianRational]]:
    """Residuals of p_{0,n} = 0 and p_{i,n-i} = conj(p_{n-i+1,i-1})."""
    failing = []
    for n in range(2, f.degree + 1):
        r = f.coeff(0, n)
        if r:
            failing.append((f"p_{{0,{n}}}=0", r))
        for i in range(1, n + 1):
            res = f.coeff(i, n - i) - f.coeff(n - i + 1, i - 1).conj()
            if res:
                failing.append(
                    (f"p_{{{i},{n - i}}}=conj(p_{{{n - i + 1},{i - 1}}})", res)
                )
    return failing


def check_uniform(f: PlanarField) -> ConditionVerdict:
    """Uniform isochronicity: y*P = x*swap_conj(P).

    Route (a) is the coefficient relations, route (b) the polynomial
    identity; the two must agree.
    """
    failing = _uniform_relations(f)
    p = f.perturbation()
    identity_holds = (BiPoly.monomial(0, 1) * p) == (BiPoly.monomial(1, 0) * p.swap_conj())
    if identity_holds != (not failing):
        raise InternalInconsistencyError(
            "uniform-isochronicity routes disagree: "
            f"identity={identity_holds}, relations_failing={len(failing)}"
        )
    return ConditionVerdict("UI", not failing, failing)


def check_cauchy_riemann(f: PlanarField) -> ConditionVerdict:
    """Cauchy-Riemann condition: dP/dy = 0, i.e. p_{i,j} = 0 for j >= 1."""
    failing = []
    for n in range(2, f.degree + 1):
        for i in range(0, n):
            r = f.coeff(i, n - i)
            if r:
                failing.append((f"p_{{{i},{n - i}}}=0", r))
    identity_holds = f.perturbation().partial("y").is_zero()
    if identity_holds != (not failing):
        raise InternalInconsistencyError(
            "Cauchy-Riemann routes disagree: "
            f"identity={identity_holds}, relations_failing={len(failing)}"
        )
    return ConditionVerdict("CR", not failing, failing)


def classify_quadratic(f: PlanarField) -> set[str]:
    """Membership in the four quadratic isochronous-center conditions.

    Returns every satisfied condition id among Q_i..Q_iv (possibly
    several, possibly none).  Modulus relations are exact identities
    between squared moduli.
    """
    if f.degree != 2:
        raise InputError(f"quadratic classification needs degree 2, got {f.degree}")
    p20, p11, p02 = f.coeff(2, 0), f.coeff(1, 1), f.coeff(0, 2)
    out = set()
    if p11.is_zero() and p02.is_zero():
        out.add("Q_i")
    if (p20 - p11.conj()).is_zero() and p02.is_zero():
        out.add("Q_ii")
    half5 = GaussianRational.of(Fraction(5, 2))
    if (p20 - half5 * p11.conj()).is_zero() and (
        p11.norm_sq() - GaussianRational.of(Fraction(4, 9)) * p02.norm_sq()
    ).is_zero():
        out.add("Q_iii")
    sixth7 = GaussianRational.of(Fraction(7, 6))
    if (p20 - sixth7 * p11.conj()).is_zero() and (
        p11.norm_sq() - GaussianRational.of(4) * p02.norm_sq()
    ).is_zero():
        out.add("Q_iv")
    return out


def homogeneous_uniform_verdict(f: PlanarField) -> ConditionVerdict:
    """Homogeneous uniform conditions, with the extra odd-degree relation.

    Requires p_{0,d} = 0 and p_{i,d-i} = conj(p_{d-i+1,i-1}) for i=1..d;
    for d = 2m+1 additionally p_{m+1,m} = 0.  A positive verdict implies
    (and asserts) the structural linearisability of the alphabet.
    """
    if not f.is_homogeneous():
        raise InputError("field perturbation is not homogeneous")
    d = f.degree
    failing = []
    r = f.coeff(0, d)
    if r:
        failing.append((f"p_{{0,{d}}}=0", r))
    for i in range(1, d + 1):
        res = f.coeff(i, d - i) - f.coeff(d - i + 1, i - 1).conj()
        if res:
            failing.append((f"p_{{{i},{d - i}}}=conj(p_{{{d - i + 1},{i - 1}}})", res))
    if d % 2 == 1:
        m = (d - 1) // 2
        r = f.coeff(m + 1, m)
        if r:
            failing.append((f"p_{{{m + 1},{m}}}=0", r))
    verdict = ConditionVerdict("HOM_UNIFORM", not failing, failing)
    if verdict.holds:
        from .prenormal import LINEARISABLE_STRUCTURAL, structural_linearisability

        if structural_linearisability(decompose(f), 6) != LINEARISABLE_STRUCTURAL:
            raise InternalInconsistencyError(
                "homogeneous uniform field failed the structural "
                "linearisability check"
            )
    return verdict


def geometric_complexity(condition_id: str, d: int) -> GeomComplexity:
    """Closed-form complexity of the homogeneous degree-d condition family.

    Holomorphic: (d, 1).  Uniform: (d+1, 1) for even d, (d+2, 1) for odd
    d (the odd case carries the extra middle-coefficient relation).  The
    ambient dimension is the generic coefficient count of a degree-d
    perturbation.
    """
    if d < 2:
        raise InputError(f"degree must be >= 2, got {d}")
    ambient = (d + 1) * (d + 2) // 2 - 3
    if condition_id == "CR":
        return GeomComplexity(q=d, m=1, ambient_dim=ambient)
    if condition_id == "UI":
        q = d + 1 if d % 2 == 0 else d + 2
        return GeomComplexity(q=q, m=1, ambient_dim=ambient)
    raise InputError(f"unknown condition id {condition_id!r}")
