import random
from fractions import Fraction

import pytest

from isocenter.algebra import BiPoly, GaussianRational
from isocenter.errors import InputError
from isocenter.lie_analysis import (
    central_series,
    cr_structural_predicate,
    enumerate_resonant_words,
    pairwise_brackets,
    resonant_subset_trivial,
)
from isocenter.prepared import PlanarField, decompose, weight
from isocenter.samples import quadratic, random_cr_field, random_ui_homogeneous


def G(re, im=0):
    return GaussianRational.of(Fraction(re), Fraction(im))


def test_pairwise_fond2_conditions():
    # p_{2,0} = conj(p_{1,1}), p_{0,2} = 0
    assert pairwise_brackets(decompose(quadratic(G(1, -2), G(1, 2), 0))).nilpotent_order1
    # p_{1,1} = p_{0,2} = 0
    assert pairwise_brackets(decompose(quadratic(G(3, 5), 0, 0))).nilpotent_order1


def test_pairwise_witness():
    report = pairwise_brackets(decompose(quadratic(1, 2, 0)))
    assert not report.nilpotent_order1
    (pair, br) = report.witnesses[0]
    assert set(pair) == {(1, 0), (0, 1)}
    # scalar 2 = p_{1,1} (conj(p_{1,1}) - p_{2,0})
    assert br.dx == BiPoly.monomial(2, 1, G(2)) or br.dx == BiPoly.monomial(2, 1, G(-2))


def test_central_series_levels():
    a = decompose(quadratic(1, 2, 0))
    report = central_series(a, 3)
    assert len(report.levels[0]) == 2
    assert report.levels[1]  # nonzero pairwise bracket exists
    assert len(report.levels) == 3
    # every level-k generator from homogeneous degree-2 generators has
    # total polynomial degree k(d-1)+1 = k+1
    for k, level in enumerate(report.levels, start=1):
        for d in level:
            for part in (d.dx, d.dy):
                assert part.is_zero() or part.is_homogeneous(k + 1)


def test_central_series_trivial_cases():
    assert central_series(decompose(PlanarField(degree=2, coefficients={})), 3).levels == [[]]
    nil = central_series(decompose(quadratic(G(1), G(1), 0)), 3)
    assert nil.nilpotent_order1 and nil.levels[1] == []
    with pytest.raises(InputError):
        central_series(decompose(quadratic(1, 0, 0)), 0)


def test_enumerate_resonant_words_quadratic():
    a = decompose(quadratic(1, 2, 3))
    assert enumerate_resonant_words(a, 1) == []
    words = enumerate_resonant_words(a, 2)
    assert words == sorted(
        [
            ((1, 0), (0, 1)),
            ((0, 1), (1, 0)),
            ((-1, 2), (2, -1)),
            ((2, -1), (-1, 2)),
        ],
        key=lambda w: (len(w), w),
    )


def test_enumerate_resonant_words_matches_brute_force():
    a = decompose(quadratic(1, 2, 3))
    letters = a.letters()
    brute = []
    for r in (1, 2, 3):
        def walk(word):
            if len(word) == r:
                if weight(word) == 0:
                    brute.append(word)
                return
            for n in letters:
                walk(word + (n,))
        walk(())
    brute.sort(key=lambda w: (len(w), w))
    assert enumerate_resonant_words(a, 3) == brute


def test_resonant_words_properties():
    a = decompose(quadratic(1, 2, 3))
    words = enumerate_resonant_words(a, 4)
    assert all(weight(w) == 0 for w in words)
    reversed_set = {tuple(reversed(w)) for w in words}
    assert reversed_set == set(words)


def test_resonant_letter_counts_homogeneous_cubic():
    coeffs = {(i, 3 - i): G(1, 1) for i in range(4)}
    a = decompose(PlanarField(degree=3, coefficients=coeffs))
    assert enumerate_resonant_words(a, 1) == [((1, 1),)]


def test_resonant_subset_trivial_cases():
    # CR field: all brackets of resonant words vanish, structurally proven
    rng = random.Random(0)
    rep = resonant_subset_trivial(decompose(random_cr_field(rng, 3)), 6)
    assert rep.all_brackets_zero and rep.structurally_proven
    # zero perturbation: trivially true
    rep = resonant_subset_trivial(decompose(PlanarField(degree=2, coefficients={})), 6)
    assert rep.all_brackets_zero
    # witness case
    rep = resonant_subset_trivial(decompose(quadratic(1, 2, 0)), 2)
    assert not rep.all_brackets_zero
    assert rep.witnesses[0][0] in (((1, 0), (0, 1)), ((0, 1), (1, 0)))


def test_resonant_length1_witness():
    # a weight-zero letter with nonzero operator is itself a witness
    coeffs = {(i, 3 - i): G(1, 1) for i in range(4)}
    rep = resonant_subset_trivial(decompose(PlanarField(degree=3, coefficients=coeffs)), 1)
    assert not rep.all_brackets_zero
    assert rep.witnesses[0][0] == ((1, 1),)


def test_cr_structural_predicate():
    rng = random.Random(1)
    assert cr_structural_predicate(decompose(random_cr_field(rng, 4)))
    assert not cr_structural_predicate(decompose(quadratic(1, 2, 0)))


def test_ui_homogeneous_nilpotent_sampled():
    rng = random.Random(42)
    for d in range(2, 7):
        for _ in range(10):
            f = random_ui_homogeneous(rng, d)
            assert pairwise_brackets(decompose(f)).nilpotent_order1


def test_series_grading_homogeneous():
    rng = random.Random(6)
    for d in (3, 4):
        coeffs = {(i, d - i): G(rng.randint(-3, 3), rng.randint(-3, 3)) for i in range(d + 1)}
        f = PlanarField(degree=d, coefficients={k: v for k, v in coeffs.items() if v})
        report = central_series(decompose(f), 3)
        for k, level in enumerate(report.levels, start=1):
            for deriv in level:
                for part in (deriv.dx, deriv.dy):
                    assert part.is_zero() or part.is_homogeneous(k * (d - 1) + 1)
