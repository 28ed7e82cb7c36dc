"""Seeded generators of random fields and scalars for the lemma suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import BiPoly, GaussianRational
from .operators import Derivation, hom_op
from .prepared import PlanarField


def random_scalar(rng: random.Random, bound: int = 9) -> GaussianRational:
    return GaussianRational(
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
    )


def random_nonzero_scalar(rng: random.Random, bound: int = 9) -> GaussianRational:
    while True:
        z = random_scalar(rng, bound)
        if z:
            return z


def random_field(rng: random.Random, d: int, density: float = 0.8) -> PlanarField:
    """Generic field of degree d with sparse random coefficients."""
    coeffs = {}
    for n in range(2, d + 1):
        for i in range(0, n + 1):
            if rng.random() < density:
                coeffs[(i, n - i)] = random_scalar(rng)
    return PlanarField(degree=d, coefficients=coeffs)


def random_ui_homogeneous(
    rng: random.Random, d: int, force_middle_zero: bool = False
) -> PlanarField:
    """Homogeneous degree-d field satisfying the uniform relations.

    Writes c_i = p_{i,d-i}; the relations are c_0 = 0 and
    c_{d-i+1} = conj(c_i) for i = 1..d, which pair index i with d-i+1.
    For odd d the middle coefficient c_{m+1} must be real; with
    ``force_middle_zero`` it is set to zero (the extra isochronicity
    relation for odd degree).
    """
    c: dict[int, GaussianRational] = {}
    for i in range(1, d + 1):
        partner = d - i + 1
        if i < partner:
            c[i] = random_scalar(rng)
            c[partner] = c[i].conj()
        elif i == partner:
            if force_middle_zero:
                c[i] = GaussianRational.of(0)
            else:
                c[i] = GaussianRational.of(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    coeffs = {(i, d - i): v for i, v in c.items() if v}
    return PlanarField(degree=d, coefficients=coeffs)


def random_cr_field(rng: random.Random, d: int) -> PlanarField:
    """Field with only x-powers: p_{n,0} random for n = 2..d."""
    coeffs = {}
    for n in range(2, d + 1):
        coeffs[(n, 0)] = random_nonzero_scalar(rng)
    return PlanarField(degree=d, coefficients=coeffs)


def random_hom_op(rng: random.Random, max_deg: int = 4) -> Derivation:
    """Random homogeneous operator of one of the three alphabet shapes."""
    k = rng.randint(2, max_deg)
    kind = rng.random()
    if kind < 0.7:
        i = rng.randint(1, k)
        return hom_op(
            (i - 1, k - i),
            BiPoly.monomial(i, k - i, random_scalar(rng)),
            BiPoly.monomial(i - 1, k - i + 1, random_scalar(rng)),
        )
    if kind < 0.85:
        return hom_op(
            (-1, k), BiPoly.monomial(0, k, random_nonzero_scalar(rng)), BiPoly.zero()
        )
    return hom_op(
        (k, -1), BiPoly.zero(), BiPoly.monomial(k, 0, random_nonzero_scalar(rng))
    )


def quadratic(p20, p11, p02) -> PlanarField:
    """Convenience quadratic field from three scalars."""
    coeffs = {}
    for key, val in (((2, 0), p20), ((1, 1), p11), ((0, 2), p02)):
        g = val if isinstance(val, GaussianRational) else GaussianRational.of(Fraction(val))
        if g:
            coeffs[key] = g
    return PlanarField(degree=2, coefficients=coeffs)
