"""Braid words, the symmetric-group projection, linking numbers, and the
Garside left normal form.

Conventions.  A braid word is a sequence of nonzero integers: letter +i is
the Artin generator sigma_i, letter -i its inverse.  Strands are labelled by
their starting position; the permutation image sends a strand's start to its
end position, and sigma_i maps to the adjacent transposition (i, i+1).

The normal form is the classical left Garside form Delta^p . A_1 ... A_k
with each A_j a permutation braid (neither trivial nor Delta) and each
consecutive pair left-weighted: the starting set of A_{j+1} is contained in
the finishing set of A_j.  Inverse letters enter through the identity
sigma_i^-1 = Delta^-1 (Delta sigma_i^-1), whose second factor is a
permutation braid.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable

from . import _backend
from .errors import InternalInconsistency, NotPure, StrandMismatch
from .perms import Permutation


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_n."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise ValueError("braid group needs at least 2 strands")
        object.__setattr__(self, "letters", tuple(self.letters))
        for let in self.letters:
            if let == 0 or abs(let) > self.strands - 1:
                raise ValueError(f"letter {let} out of range for B_{self.strands}")

    @staticmethod
    def identity(n: int) -> "BraidWord":
        return BraidWord(n, ())

    @staticmethod
    def sigma(n: int, i: int, exp: int = 1) -> "BraidWord":
        sign = 1 if exp > 0 else -1
        return BraidWord(n, (sign * i,) * abs(exp))

    @staticmethod
    def parse(text: str, strands: int | None = None) -> "BraidWord":
        letters = tuple(int(tok) for tok in text.replace(",", " ").split())
        if strands is None:
            strands = max((abs(x) for x in letters), default=1) + 1
            strands = max(strands, 2)
        return BraidWord(strands, letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise StrandMismatch(f"B_{self.strands} vs B_{other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def inv(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inv()
        return BraidWord(self.strands, base.letters * abs(k))

    def free_reduce(self) -> "BraidWord":
        out: list[int] = []
        for let in self.letters:
            if out and out[-1] == -let:
                out.pop()
            else:
                out.append(let)
        return BraidWord(self.strands, tuple(out))

    def word_length(self) -> int:
        return len(self.letters)

    def text(self) -> str:
        return " ".join(str(x) for x in self.letters) if self.letters else ""

    def __repr__(self) -> str:
        return f"BraidWord(B{self.strands}: {self.text() or '1'})"


def delta(n: int) -> BraidWord:
    """The positive half twist Delta_n = (s1)(s2 s1)...(s_{n-1} ... s1)."""
    letters = [i for k in range(1, n) for i in range(k, 0, -1)]
    return BraidWord(n, tuple(letters))


def commutator(b1: BraidWord, b2: BraidWord) -> BraidWord:
    return b1 * b2 * b1.inv() * b2.inv()


def permutation(b: BraidWord) -> Permutation:
    """Image of b under the natural projection B_n -> S_n."""
    perm = list(range(1, b.strands + 1))  # perm[i-1] = current position of strand i
    pos = list(range(1, b.strands + 1))   # pos[p-1] = strand currently at position p
    for let in b.letters:
        k = abs(let)
        s, t = pos[k - 1], pos[k]
        pos[k - 1], pos[k] = t, s
        perm[s - 1], perm[t - 1] = k + 1, k
    return Permutation(tuple(perm))


def exponent_sum(b: BraidWord) -> int:
    """Sum of letter signs: the abelianization B_n -> Z."""
    return sum(1 if x > 0 else -1 for x in b.letters)


@dataclasses.dataclass(frozen=True)
class LinkingNumbers:
    """Linking numbers l_ij of a pure braid, one per strand pair i < j."""

    strands: int
    values: tuple[tuple[int, int, int], ...]  # sorted ((i, j), l) triples flattened

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = min(pair), max(pair)
        for a, b, v in self.values:
            if (a, b) == (i, j):
                return v
        raise KeyError(pair)

    def tuple3(self) -> tuple[int, int, int]:
        """The ordered tuple (l_23, l_13, l_12) used for 3-braids."""
        if self.strands != 3:
            raise ValueError("tuple3 is only defined for B_3")
        return (self[(2, 3)], self[(1, 3)], self[(1, 2)])

    def unordered(self) -> tuple[int, ...]:
        return tuple(sorted(v for _, _, v in self.values))


def linking_numbers(b: BraidWord) -> LinkingNumbers:
    """Linking numbers by strand tracing.

    Discarding all strands but {i, j} leaves a 2-braid sigma^(2m); here the
    signed crossings between the two retained strands are counted along the
    word and halved.  Sign convention: sigma_i^2 on adjacent retained
    strands has linking number +1.
    """
    if not permutation(b).is_identity():
        raise NotPure("linking numbers are defined for pure braids only")
    n = b.strands
    counts: dict[tuple[int, int], int] = {}
    pos = list(range(1, n + 1))  # pos[p-1] = strand currently at position p
    for let in b.letters:
        k = abs(let)
        s, t = pos[k - 1], pos[k]
        pair = (min(s, t), max(s, t))
        counts[pair] = counts.get(pair, 0) + (1 if let > 0 else -1)
        pos[k - 1], pos[k] = t, s
    values = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            c = counts.get((i, j), 0)
            if c % 2:
                raise InternalInconsistency("odd crossing count in a pure braid")
            values.append((i, j, c // 2))
    return LinkingNumbers(n, tuple(values))


def permute_linking_tuple3(t: tuple[int, int, int], s: Permutation) -> tuple[int, int, int]:
    """Apply a strand permutation s to an ordered (l_23, l_13, l_12) tuple.

    Component j of the result is the entry for the pair obtained by applying
    s to the complement pair of j: (l_{s(2)s(3)}, l_{s(1)s(3)}, l_{s(1)s(2)}).
    """
    by_pair = {(2, 3): t[0], (1, 3): t[1], (1, 2): t[2]}
    def look(a: int, b: int) -> int:
        return by_pair[(min(a, b), max(a, b))]
    return (look(s(2), s(3)), look(s(1), s(3)), look(s(1), s(2)))


def conjugate_linking_tuple3(t: tuple[int, int, int], w: BraidWord) -> tuple[int, int, int]:
    """The linking tuple of w^-1 b w, given the tuple t of the pure braid b.

    Conjugation relabels the strands by the permutation of w; with the
    start-position labelling used here the tuple transforms under the
    inverse of permutation(w).
    """
    return permute_linking_tuple3(t, permutation(w).inv())


# ---------------------------------------------------------------------------
# Garside left normal form
# ---------------------------------------------------------------------------


def _w0(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


# the normal-form inner loop works on raw image tuples (p[i-1] = image of i)
# to stay off the validating constructor


def _t_then(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q[x - 1] for x in p)


def _t_inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, img in enumerate(p, start=1):
        out[img - 1] = i
    return tuple(out)


def _t_starting_set(p: tuple[int, ...]) -> set[int]:
    """Indices i with sigma_i a word-prefix of the permutation braid of p."""
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def _t_finishing_set(p: tuple[int, ...]) -> set[int]:
    """Indices i with sigma_i a word-suffix of the permutation braid of p."""
    pi = _t_inv(p)
    return {i for i in range(1, len(p)) if pi[i - 1] > pi[i]}


def _t_swap_values(p: tuple[int, ...], i: int) -> tuple[int, ...]:
    """p followed by sigma_i: swap the values i, i+1 in the one-line form."""
    return tuple(i + 1 if x == i else (i if x == i + 1 else x) for x in p)


def _t_swap_positions(p: tuple[int, ...], i: int) -> tuple[int, ...]:
    """sigma_i followed by p: swap the entries at positions i, i+1."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _t_tau(p: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugation by Delta: flip both positions and values."""
    n = len(p)
    return tuple(n + 1 - p[n - 1 - i] for i in range(n))


def _t_slide(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...], bool]:
    """Move prefix letters of b across to a until (a, b) is left-weighted."""
    changed = False
    while True:
        need = _t_starting_set(b) - _t_finishing_set(a)
        if not need:
            return a, b, changed
        i = min(need)
        a = _t_swap_values(a, i)
        b = _t_swap_positions(b, i)
        changed = True


@dataclasses.dataclass(frozen=True)
class GarsideNormalForm:
    """Delta^power followed by a left-weighted sequence of permutation braids."""

    strands: int
    power: int
    factors: tuple[Permutation, ...]

    @property
    def infimum(self) -> int:
        return self.power

    @property
    def supremum(self) -> int:
        return self.power + len(self.factors)

    def canonical_length(self) -> int:
        return len(self.factors)

    def is_trivial(self) -> bool:
        return self.power == 0 and not self.factors

    def factor_images(self) -> tuple[tuple[int, ...], ...]:
        return tuple(f.images for f in self.factors)

    def to_braid_word(self) -> BraidWord:
        letters: list[int] = []
        d = delta(self.strands).letters
        if self.power >= 0:
            letters.extend(d * self.power)
        else:
            letters.extend(tuple(-x for x in reversed(d)) * (-self.power))
        for f in self.factors:
            letters.extend(_perm_to_letters(f))
        return BraidWord(self.strands, tuple(letters))

    def __repr__(self) -> str:
        facs = ", ".join(str(f.images) for f in self.factors)
        return f"GarsideNormalForm(B{self.strands}, Delta^{self.power}, [{facs}])"


def _perm_to_letters(p: Permutation) -> list[int]:
    """A positive word whose permutation image is p (peel word prefixes)."""
    out: list[int] = []
    images = list(p.images)
    while True:
        i = next((i for i in range(1, len(images)) if images[i - 1] > images[i]), None)
        if i is None:
            return out
        out.append(i)
        images[i - 1], images[i] = images[i], images[i - 1]


def normal_form(b: BraidWord) -> GarsideNormalForm:
    n = b.strands
    w0 = tuple(range(n, 0, -1))
    ident = tuple(range(1, n + 1))

    factors: list[tuple[int, ...]] = []
    dpows: list[int] = []
    for let in b.letters:
        i = abs(let)
        if let > 0:
            factors.append(_t_swap_values(ident, i))
            dpows.append(0)
        else:
            factors.append(_t_swap_values(w0, i))  # permutation of Delta sigma_i^-1
            dpows.append(-1)

    # migrate the Delta^-1 markers to the front through the tau automorphism
    power = 0
    for k in range(len(factors) - 1, -1, -1):
        if power % 2:
            factors[k] = _t_tau(factors[k])
        power += dpows[k]

    factors = [f for f in factors if f != ident]

    # local sliding to the unique left-weighted form
    guard = 4 * (len(factors) + 2) ** 2 + 16
    for _ in range(guard):
        changed = False
        k = 0
        while k < len(factors) - 1:
            a, bb = factors[k], factors[k + 1]
            if a != w0:
                a, bb, moved = _t_slide(a, bb)
                if moved:
                    changed = True
                    factors[k] = a
                    if bb == ident:
                        del factors[k + 1]
                        continue
                    factors[k + 1] = bb
            k += 1
        if not changed:
            break
    else:
        raise InternalInconsistency("normal form rewriting did not stabilize")

    while factors and factors[0] == w0:
        factors.pop(0)
        power += 1
    for a, bb in zip(factors, factors[1:]):
        if not _t_starting_set(bb) <= _t_finishing_set(a):
            raise InternalInconsistency("factors not left-weighted after rewrite")
    return GarsideNormalForm(n, power, tuple(Permutation(f) for f in factors))


def braid_eq(b1: BraidWord, b2: BraidWord, use_fast_path: bool = True) -> bool:
    """Equality in B_n via normal forms; B_3 uses the (theta, exponent sum)
    pair, which is faithful because the kernel of theta is generated by
    Delta^4 and Delta^4 has exponent sum 12."""
    if b1.strands != b2.strands:
        raise StrandMismatch(f"B_{b1.strands} vs B_{b2.strands}")
    if use_fast_path and b1.strands == 3:
        if exponent_sum(b1) != exponent_sum(b2):
            return False
        return _backend.theta_abcd(b1.letters) == _backend.theta_abcd(b2.letters)
    return normal_form(b1) == normal_form(b2)


def enumerate_words(
    n: int, maxlen: int, *, freely_reduced: bool = True, include_identity: bool = False
) -> Iterable[BraidWord]:
    """All words in B_n of length <= maxlen, lexicographic within a length."""
    alphabet = [i for k in range(1, n) for i in (k, -k)]
    alphabet.sort()
    if include_identity:
        yield BraidWord.identity(n)
    prev: list[tuple[int, ...]] = [()]
    for _ in range(maxlen):
        nxt = []
        for word in prev:
            for let in alphabet:
                if freely_reduced and word and word[-1] == -let:
                    continue
                nxt.append(word + (let,))
        for word in nxt:
            yield BraidWord(n, word)
        prev = nxt
