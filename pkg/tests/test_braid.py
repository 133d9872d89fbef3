import random

import pytest

from braidoka.braid import (
    BraidWord,
    braid_eq,
    commutator,
    conjugate_linking_tuple3,
    delta,
    enumerate_words,
    exponent_sum,
    linking_numbers,
    normal_form,
    permutation,
)
from braidoka.errors import NotPure, StrandMismatch
from braidoka.perms import Permutation


def w3(text):
    return BraidWord.parse(text, 3)


def test_parse_and_inference():
    b = BraidWord.parse("1 2 -1")
    assert b.strands == 3 and b.letters == (1, 2, -1)
    assert BraidWord.parse("3 1", None).strands == 4
    with pytest.raises(ValueError):
        BraidWord.parse("5", 3)


def test_free_reduce():
    assert w3("1 -1").free_reduce().letters == ()
    assert w3("1 2 -2 -1 2").free_reduce().letters == (2,)


def test_permutation_examples():
    assert permutation(w3("1")) == Permutation.transposition(3, 1)
    assert permutation(w3("1 2")).is_n_cycle()
    assert permutation(delta(3) ** 2).is_identity()


def test_exponent_sum():
    assert exponent_sum(w3("1 2 1")) == 3
    assert exponent_sum(delta(3) ** 4) == 12
    rng = random.Random(1)
    for _ in range(30):
        letters = tuple(rng.choice((1, -1, 2, -2)) for _ in range(8))
        b1, b2 = BraidWord(3, letters), BraidWord(3, letters[::-1])
        assert exponent_sum(commutator(b1, b2)) == 0


class TestNormalForm:
    def test_braid_relation_gives_delta(self):
        nf = normal_form(w3("1 2 1"))
        assert nf == normal_form(w3("2 1 2"))
        assert nf.power == 1 and nf.factors == ()

    def test_trivial(self):
        assert normal_form(w3("1 -1")).is_trivial()

    def test_calegari_walker(self):
        lhs = commutator(w3("-2 1"), w3("2 -1"))
        rhs = w3("-2 -2 -2 -2 -2 -2") * delta(3) ** 2
        assert normal_form(lhs) == normal_form(rhs)

    def test_b4_commutator(self):
        b1 = BraidWord.parse("-1 -1", 4)
        b2 = BraidWord.parse("2 1 3 2", 4).inv()
        lhs = commutator(b1, b2)
        rhs = BraidWord.parse("-1 -1 3 3", 4)
        assert normal_form(lhs) == normal_form(rhs)
        assert not normal_form(lhs).is_trivial()

    def test_left_weighted_factors_nontrivial(self):
        rng = random.Random(7)
        for n in (3, 4, 5):
            ident = Permutation.identity(n)
            w0 = Permutation(tuple(range(n, 0, -1)))
            for _ in range(40):
                letters = tuple(
                    rng.choice([i for k in range(1, n) for i in (k, -k)])
                    for _ in range(rng.randint(0, 10))
                )
                nf = normal_form(BraidWord(n, letters))
                assert all(f != ident and f != w0 for f in nf.factors)

    def test_round_trip_preserves_invariants(self):
        rng = random.Random(11)
        for n in (3, 4):
            for _ in range(50):
                letters = tuple(
                    rng.choice([i for k in range(1, n) for i in (k, -k)])
                    for _ in range(rng.randint(0, 12))
                )
                b = BraidWord(n, letters)
                back = normal_form(b).to_braid_word()
                assert exponent_sum(back) == exponent_sum(b)
                assert permutation(back) == permutation(b)
                assert normal_form(back) == normal_form(b)


class TestBraidEq:
    def test_relation(self):
        assert braid_eq(w3("1 2 1"), w3("2 1 2"))

    def test_b4_identity(self):
        b1 = BraidWord.parse("-1 -1", 4)
        b2 = BraidWord.parse("2 1 3 2", 4).inv()
        assert braid_eq(commutator(b1, b2), BraidWord.parse("-1 -1 3 3", 4))

    def test_distinct_generators(self):
        assert not braid_eq(w3("1"), w3("2"))

    def test_strand_mismatch(self):
        with pytest.raises(StrandMismatch):
            braid_eq(w3("1"), BraidWord.parse("1", 4))

    def test_braid_relations_all_strands(self):
        for n in range(2, 7):
            for i in range(1, n):
                for j in range(i + 2, n):
                    assert braid_eq(
                        BraidWord(n, (i, j)), BraidWord(n, (j, i)), use_fast_path=False
                    )
                if i + 1 < n:
                    assert braid_eq(
                        BraidWord(n, (i, i + 1, i)),
                        BraidWord(n, (i + 1, i, i + 1)),
                        use_fast_path=False,
                    )

    def test_center_commutes(self):
        z = delta(3) ** 2
        # exhaustive over length <= 8 through the faithful fast path, plus a
        # random slice through the Garside path
        for b in enumerate_words(3, 8, include_identity=True):
            assert braid_eq(b * z, z * b)
        rng = random.Random(3)
        for _ in range(60):
            letters = tuple(rng.choice((1, -1, 2, -2)) for _ in range(8))
            b = BraidWord(3, letters)
            assert braid_eq(b * z, z * b, use_fast_path=False)

    def test_fast_path_matches_garside(self):
        rng = random.Random(5)
        for _ in range(10_000):
            l1 = tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 12)))
            l2 = tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 12)))
            b1, b2 = BraidWord(3, l1), BraidWord(3, l2)
            assert braid_eq(b1, b2) == braid_eq(b1, b2, use_fast_path=False)


class TestLinking:
    def test_sigma1_squared(self):
        assert linking_numbers(w3("1 1")).tuple3() == (0, 0, 1)

    def test_full_twist(self):
        assert linking_numbers(delta(3) ** 2).tuple3() == (1, 1, 1)

    def test_commutator_unordered(self):
        b = commutator(w3("1 2"), w3("1 1"))
        assert linking_numbers(b).unordered() == (-1, 0, 1)

    def test_rejects_non_pure(self):
        with pytest.raises(NotPure):
            linking_numbers(w3("1"))

    def test_reduced_model_tuples(self):
        # sigma_1^{2k} Delta^{2l} has tuple (l, l, k + l)
        for k in (-2, 0, 1, 3):
            for ell in (-1, 0, 2):
                b = w3(" ".join(["1"] * (2 * k) if k >= 0 else ["-1"] * (-2 * k)) or "1 -1")
                b = BraidWord(3, (1,) * (2 * k) if k >= 0 else (-1,) * (-2 * k))
                b = b * delta(3) ** (2 * ell)
                assert linking_numbers(b).tuple3() == (ell, ell, k + ell)

    def test_conjugation_permutes_tuple(self):
        rng = random.Random(9)
        done = 0
        while done < 200:
            letters = tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 10)))
            b = BraidWord(3, letters)
            if not permutation(b).is_identity():
                continue
            w = BraidWord(3, tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 5))))
            lhs = linking_numbers(w.inv() * b * w).tuple3()
            assert lhs == conjugate_linking_tuple3(linking_numbers(b).tuple3(), w)
            done += 1


def test_enumerate_words_counts():
    words = list(enumerate_words(3, 3))
    assert len(words) == 4 + 12 + 36
    assert len(set(w.letters for w in words)) == len(words)
    raw = list(enumerate_words(3, 2, freely_reduced=False, include_identity=True))
    assert len(raw) == 1 + 4 + 16
