import random

import pytest

from braidoka.braid import BraidWord, delta
from braidoka.errors import (
    DegenerateSignature,
    WrongSignature,
    WrongTarget,
)
from braidoka.oka import (
    GOReducible,
    GOSphereHolomorphic,
    NotGO,
    NotGOSphereAntiholomorphic,
    Oka3Classified,
    Oka3Violation,
    PERIODIC_DELTA,
    PERIODIC_SIGMA12,
    REDUCIBLE_SIGMA1_DELTA2,
    SurfaceHom,
    SurfaceSignature,
    TAG_COMMUTATOR,
    TAG_GENERATOR,
    TAG_PAIR,
    TARGET_B3,
    TARGET_F2,
    e0_set,
    eprime_generate,
    go_surface_decide,
    hole_product_inverse,
    oka3_decide,
    oka3_decide_both,
)
from braidoka.words import FreeWord, commutator, free_conjugate

a1, a2 = FreeWord.gen(1), FreeWord.gen(2)


def hom11(b1, b2):
    return SurfaceHom(SurfaceSignature(1, 1), TARGET_B3, {1: b1, 2: b2})


def fhom(sig, images):
    return SurfaceHom(sig, TARGET_F2, images)


class TestE0:
    def test_standard_set(self):
        got = [w.text(prefix="e") for w in e0_set()]
        assert got == ["e1", "e2", "e2 e1^-1", "e2 e1^-2", "e1 e2 e1^-1 e2^-1"]

    def test_commutator_element(self):
        e5 = e0_set()[4]
        assert e5 == commutator(FreeWord.gen(1), FreeWord.gen(2))
        # exponent sums vanish generator-wise
        assert sum(e for _, e in e5.blocks) == 0

    def test_mirrored_set(self):
        got = [w.text(prefix="e") for w in e0_set(mirrored=True)]
        assert got == ["e1", "e2", "e1 e2^-1", "e1 e2^-2", "e1 e2 e1^-1 e2^-1"]


class TestOka3:
    def test_periodic_sigma12(self):
        s12 = BraidWord.parse("1 2", 3)
        r = oka3_decide(hom11(s12**2, s12**5))
        assert isinstance(r, Oka3Classified) and r.type_ == PERIODIC_SIGMA12

    def test_calegari_walker_violation(self):
        r = oka3_decide(hom11(BraidWord.parse("-2 1", 3), BraidWord.parse("2 -1", 3)))
        assert isinstance(r, Oka3Violation)
        assert r.witness == FreeWord.gen(1)
        assert r.trace == 3 and r.entropy > 0

    def test_reducible(self):
        r = oka3_decide(hom11(BraidWord.parse("1 1 1", 3), delta(3) ** 4))
        assert isinstance(r, Oka3Classified) and r.type_ == REDUCIBLE_SIGMA1_DELTA2

    def test_periodic_delta(self):
        r = oka3_decide(hom11(delta(3), delta(3) ** 3))
        assert isinstance(r, Oka3Classified) and r.type_ == PERIODIC_DELTA

    def test_wrong_signature(self):
        hom = SurfaceHom(
            SurfaceSignature(0, 3),
            TARGET_B3,
            {1: BraidWord.identity(3), 2: BraidWord.identity(3)},
        )
        with pytest.raises(WrongSignature):
            oka3_decide(hom)

    def test_both_variants_report(self):
        s12 = BraidWord.parse("1 2", 3)
        rep = oka3_decide_both(hom11(s12, s12**2))
        assert rep["agree"] is True
        assert rep["standard"]["verdict"] == "classified"

    def test_no_contradiction_on_random_passing_homs(self):
        # rejection-sample homomorphisms that pass the zero-entropy screen;
        # the commutator assertion inside oka3_decide must never fire
        from braidoka import _backend

        rng = random.Random(123)
        words = [
            tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 6)))
            for _ in range(4000)
        ]
        passing = 0
        tried = 0
        while passing < 300 and tried < 200_000:
            tried += 1
            l1, l2 = rng.choice(words), rng.choice(words)
            if _backend.e0_screen(l1, l2) != 0:
                continue
            r = oka3_decide(hom11(BraidWord(3, l1), BraidWord(3, l2)))
            assert isinstance(r, Oka3Classified)
            passing += 1
        assert passing == 300


class TestEPrime:
    def test_torus_with_hole(self):
        ep = eprime_generate(SurfaceSignature(1, 1))
        assert ep.count == 3
        assert [t for _, t in ep.elements] == [TAG_GENERATOR, TAG_GENERATOR, TAG_COMMUTATOR]

    def test_three_holed_sphere(self):
        ep = eprime_generate(SurfaceSignature(0, 3))
        assert ep.count == 7
        tags = [t for _, t in ep.elements]
        assert tags.count(TAG_GENERATOR) == 3
        assert tags.count(TAG_PAIR) == 3

    def test_cylinder(self):
        ep = eprime_generate(SurfaceSignature(0, 2))
        assert ep.count == 1
        assert ep.words() == [FreeWord.gen(1)]

    def test_degenerate(self):
        with pytest.raises(DegenerateSignature):
            eprime_generate(SurfaceSignature(0, 1))

    def test_count_bound_sweep(self):
        for g in range(0, 4):
            for m in range(1, 6):
                if (g, m) == (0, 1):
                    continue
                ep = eprime_generate(SurfaceSignature(g, m))
                assert ep.count <= ep.bound, (g, m)

    def test_hole_product_inverse(self):
        em = hole_product_inverse(SurfaceSignature(0, 3))
        assert em == (FreeWord.gen(1) * FreeWord.gen(2)).inv()

    def test_simple_closed_curve_classes_are_nontrivial_for_positive_genus(self):
        ep = eprime_generate(SurfaceSignature(2, 2))
        for w, tag in ep.elements:
            assert not w.is_identity(), (w, tag)


class TestGoSurface:
    def test_cyclic_image(self):
        r = go_surface_decide(fhom(SurfaceSignature(1, 1), {1: a1**2, 2: a1**5}))
        assert isinstance(r, GOReducible)
        assert r.peripheral == "a1" and r.root == a1

    def test_commutator_witness(self):
        r = go_surface_decide(fhom(SurfaceSignature(1, 1), {1: a1, 2: a2}))
        assert isinstance(r, NotGO)
        assert r.witness == commutator(FreeWord.gen(1), FreeWord.gen(2))

    def test_sphere_holomorphic(self):
        r = go_surface_decide(fhom(SurfaceSignature(0, 3), {1: a1, 2: a2}))
        assert isinstance(r, GOSphereHolomorphic) and r.triple == (1, 2, 3)

    def test_sphere_antiholomorphic(self):
        r = go_surface_decide(
            fhom(SurfaceSignature(0, 3), {1: a1.inv(), 2: a2.inv()})
        )
        assert isinstance(r, NotGOSphereAntiholomorphic) and r.triple == (1, 2, 3)

    def test_sphere_pattern_conjugated(self):
        c = a2 * a1.inv() * a2 * a2
        r = go_surface_decide(
            fhom(
                SurfaceSignature(0, 3),
                {1: c * a1 * c.inv(), 2: c * a2 * c.inv()},
            )
        )
        assert isinstance(r, GOSphereHolomorphic)

    def test_sphere_with_trivial_hole(self):
        r = go_surface_decide(
            fhom(SurfaceSignature(0, 4), {1: a2, 2: FreeWord.identity(), 3: a1})
        )
        assert isinstance(r, GOSphereHolomorphic) and r.triple == (1, 3, 4)

    def test_trivial_monodromy(self):
        r = go_surface_decide(
            fhom(SurfaceSignature(1, 1), {1: FreeWord.identity(), 2: FreeWord.identity()})
        )
        assert isinstance(r, GOReducible) and r.root.is_identity()

    def test_wrong_target(self):
        hom = SurfaceHom(
            SurfaceSignature(1, 1),
            TARGET_B3,
            {1: BraidWord.identity(3), 2: BraidWord.identity(3)},
        )
        with pytest.raises(WrongTarget):
            go_surface_decide(hom)

    def test_peripheral_power_mix_not_go(self):
        # both images peripheral but along different peripherals on a
        # 4-holed sphere with powers > 1: not reducible, not a covering
        r = go_surface_decide(fhom(SurfaceSignature(0, 4), {1: a1**2, 2: a2, 3: a2.inv()}))
        assert isinstance(r, NotGO)

    def test_pair_product_order_insensitive(self):
        # the verdict on e'e'' matches the verdict on e''e' because the two
        # products are conjugate words
        rng = random.Random(5)
        pool = [a1, a2, a1 * a2, a2.inv(), a1.inv() * a2.inv()]
        for _ in range(40):
            u = rng.choice(pool) ** rng.randint(1, 3)
            v = rng.choice(pool) ** rng.randint(1, 3)
            from braidoka.words import is_conjugate_into_peripheral

            assert free_conjugate(u * v, v * u)
            lhs = is_conjugate_into_peripheral(u * v)
            rhs = is_conjugate_into_peripheral(v * u)
            assert (lhs is None) == (rhs is None)
            if lhs is not None:
                assert (lhs.peripheral, lhs.power) == (rhs.peripheral, rhs.power)

    def test_positive_genus_classification_exhaustive_small(self):
        # two-generator torus monodromies drawn from peripheral powers:
        # every outcome must be GOReducible or NotGO, never a contradiction
        pool = [
            FreeWord.identity(),
            a1,
            a1**-2,
            a2,
            a2**3,
            (a1 * a2).inv(),
            a1 * a2,
            a2 * a1 * a2.inv(),
        ]
        for u in pool:
            for v in pool:
                r = go_surface_decide(fhom(SurfaceSignature(1, 1), {1: u, 2: v}))
                assert isinstance(r, (GOReducible, NotGO))
