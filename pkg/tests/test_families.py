import cmath
import json
import math
import random

import pytest

from braidoka.errors import DegreeTooSmall, SeparabilityFailure, SignatureOutOfRange
from braidoka.families import (
    INCONCLUSIVE,
    REDUCIBLE,
    LaurentFamily,
    discriminant_from_coeffs,
    discriminant_from_roots,
    discriminant_index,
    nbraid_entropy_lower,
    nbraid_module_upper,
    penner_bound,
    resultant,
    thm1_verdict,
)


class TestDiscriminant:
    def test_two_roots(self):
        assert discriminant_from_roots([1, -1]) == 4

    def test_cubic_power_model(self):
        # zeta^3 - w has discriminant -27 w^2
        for w in (1, 2, -3, 7):
            assert discriminant_from_coeffs([-w, 0, 0, 1]) == -27 * w * w
        roots = [cmath.exp(2j * math.pi * k / 3) for k in range(3)]
        assert abs(discriminant_from_roots(roots) - (-27)) < 1e-9

    def test_depressed_cubic(self):
        rng = random.Random(0)
        for _ in range(25):
            p, q = rng.randint(-6, 6), rng.randint(-6, 6)
            assert discriminant_from_coeffs([q, p, 0, 1]) == -4 * p**3 - 27 * q**2

    def test_coeffs_match_roots(self):
        rng = random.Random(1)
        for n in (3, 4):
            for _ in range(20):
                roots = [
                    complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(n)
                ]
                coeffs = _expand(roots)
                d1 = complex(discriminant_from_coeffs(coeffs))
                d2 = complex(discriminant_from_roots(roots))
                assert abs(d1 - d2) <= 1e-10 * max(1.0, abs(d2)), (roots, d1, d2)

    def test_degree_too_small(self):
        with pytest.raises(DegreeTooSmall):
            discriminant_from_coeffs([1, 1])
        with pytest.raises(DegreeTooSmall):
            discriminant_from_roots([1])

    def test_resultant_known(self):
        # res(x^2 - 1, x - 2) = value of x^2 - 1 at 2 = 3
        assert resultant([-1, 0, 1], [-2, 1]) == 3


def _expand(roots):
    coeffs = [1.0 + 0j]
    for r in roots:
        nxt = [0j] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        coeffs = nxt
    return coeffs


class TestDiscriminantIndex:
    @pytest.mark.parametrize("n", [3, 5, 7])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_power_families(self, n, k):
        rep = discriminant_index(LaurentFamily.power_family(n, k), 256)
        assert rep.index == k * (n - 1)
        assert rep.min_abs_discriminant > 0

    def test_constant_family(self):
        rep = discriminant_index(LaurentFamily(2, {0: {0: -2.0}}), 64)
        assert rep.index == 0

    def test_stable_under_doubling(self):
        fam = LaurentFamily.power_family(3, 2)
        r1 = discriminant_index(fam, 64)
        r2 = discriminant_index(fam, 128)
        assert r1.index == r2.index

    def test_separability_failure(self):
        # zeta^2 - (z - 1): discriminant 4(z-1) vanishes on |z| = 1
        fam = LaurentFamily(2, {0: {0: 1.0, 1: -1.0}})
        with pytest.raises(SeparabilityFailure):
            discriminant_index(fam, 64)

    def test_adaptive_refinement(self):
        # k(n-1) = 12 winds fast; 16 samples force step doubling
        rep = discriminant_index(LaurentFamily.power_family(7, 2), 16)
        assert rep.index == 12
        assert rep.samples_used > 16

    def test_rejects_tiny_sample_count(self):
        with pytest.raises(ValueError):
            discriminant_index(LaurentFamily.power_family(3, 1), 8)

    def test_json_round_trip(self):
        fam = LaurentFamily(3, {0: {-1: complex(0, 1), 2: complex(2, 0)}, 1: {0: 1 + 0j}})
        again = LaurentFamily.from_json(json.loads(json.dumps(fam.to_json())))
        assert again == LaurentFamily(3, {0: {-1: 1j, 2: (2 + 0j)}, 1: {0: (1 + 0j)}})


class TestThm1:
    def test_reducible(self):
        modulus = 2 * math.pi * 3 / math.log(2) + 1
        assert thm1_verdict(3, modulus, 6) == REDUCIBLE

    def test_index_not_divisible(self):
        modulus = 2 * math.pi * 3 / math.log(2) + 1
        assert thm1_verdict(3, modulus, 2) == INCONCLUSIVE

    def test_composite_degree(self):
        assert thm1_verdict(4, 1e6, 8) == INCONCLUSIVE

    def test_modulus_below_threshold(self):
        assert thm1_verdict(3, 2 * math.pi * 3 / math.log(2) - 1, 6) == INCONCLUSIVE


class TestBounds:
    def test_penner_sphere_four_marked(self):
        assert penner_bound(0, 4) == math.log(2) / 4

    def test_braid_entropy_floor(self):
        v = nbraid_entropy_lower(3)
        assert v == math.log(2) / 4
        assert abs(v - 0.17328) < 1e-4

    def test_braid_module_cap(self):
        assert abs(nbraid_module_upper(3) - 6 * math.pi / math.log(2)) < 1e-12

    def test_consistency_with_min_entropy(self):
        assert math.log((3 + math.sqrt(5)) / 2) >= nbraid_entropy_lower(3)

    def test_signature_range(self):
        with pytest.raises(SignatureOutOfRange):
            penner_bound(1, 0)
        with pytest.raises(SignatureOutOfRange):
            nbraid_entropy_lower(2)
