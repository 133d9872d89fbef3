"""Symmetric-group utilities and the constructive abelian-transitive lemmas."""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Sequence

from .errors import (
    NotAbelianTransitive,
    NotCommuting,
    NotPrime,
    NotTransitive,
)
from .words import FreeWord


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}; images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(n: int, i: int) -> "Permutation":
        """The adjacent transposition (i, i+1) in S_n."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"transposition index {i} out of range for S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(tuple(images))

    @staticmethod
    def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)([cyc[0]])):
                images[a - 1] = b
        return Permutation(tuple(images))

    @staticmethod
    def parse(n: int, text: str) -> "Permutation":
        """Parse cycle notation like ``(1 2 3)(4 5)`` or ``()``."""
        cycles = []
        for chunk in re.findall(r"\(([^()]*)\)", text):
            entries = [int(x) for x in chunk.replace(",", " ").split()]
            if entries:
                cycles.append(entries)
        return Permutation.from_cycles(n, cycles)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other (left-to-right composition)."""
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inv(self) -> "Permutation":
        out = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            out[img - 1] = i
        return Permutation(tuple(out))

    def __pow__(self, k: int) -> "Permutation":
        result = Permutation.identity(self.n)
        base = self if k >= 0 else self.inv()
        for _ in range(abs(k)):
            result = result.then(base)
        return result

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def is_n_cycle(self) -> bool:
        cycs = self.cycles()
        return len(cycs) == 1 and len(cycs[0]) == self.n

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation{self.cycle_string()}"


def commute(p: Permutation, q: Permutation) -> bool:
    return p.then(q) == q.then(p)


def is_transitive(gens: Sequence[Permutation], n: int) -> bool:
    if not gens:
        return n == 1
    reached = {1}
    frontier = [1]
    while frontier:
        x = frontier.pop()
        for g in gens:
            for y in (g(x), g.inv()(x)):
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
    return len(reached) == n


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def abelian_transitive_generator(
    gens: Sequence[Permutation], n: int
) -> tuple[Permutation, list[int]]:
    """Find an n-cycle s0 among the generators with every generator a power of it.

    Constructive content of the abelian-transitive lemma for prime n: the
    generated group is cyclic, generated by whichever generator moves a full
    minimal invariant block of size n.  Returns (s0, exponents) with
    gens[j] = s0 ** exponents[j].
    """
    if not _is_prime(n):
        raise NotPrime(f"{n} is not prime")
    for g in gens:
        if g.n != n:
            raise ValueError(f"permutation on {g.n} points, expected {n}")
    for i, p in enumerate(gens):
        for q in gens[i + 1:]:
            if not commute(p, q):
                raise NotCommuting(f"{p} and {q} do not commute")
    if not is_transitive(gens, n):
        raise NotTransitive("generated group is not transitive")

    # among the n-cycle generators pick the lexicographically smallest,
    # which makes the choice independent of the generator order
    candidates = sorted((g for g in gens if g.is_n_cycle()), key=lambda g: g.images)
    if not candidates:
        raise NotTransitive("no generator is an n-cycle")  # impossible for valid input
    s0 = candidates[0]
    powers = [s0 ** k for k in range(n)]
    exponents = []
    for g in gens:
        exponents.append(next(k for k in range(n) if powers[k] == g))
    return s0, exponents


def lemma5_generators(
    psi_e1: Permutation, psi_e2: Permutation
) -> tuple[FreeWord, FreeWord]:
    """Replace free generators so the first maps to a 3-cycle, the second to id.

    Given the images of e1, e2 under a homomorphism F2 -> S3 with abelian
    transitive image, returns new free generators (e1', e2') drawn from
    {e1, e2, e2 e1^-1, e2 e1^-2} and inverses, with [e1', e2'] conjugate to
    [e1, e2].  Tie-break: the smallest q in {0,1,2} with Psi(e2 e1^-q) = id.
    """
    if psi_e1.n != 3 or psi_e2.n != 3:
        raise NotAbelianTransitive("images must lie in S_3")
    if not commute(psi_e1, psi_e2):
        raise NotAbelianTransitive("images do not commute")
    if not is_transitive([psi_e1, psi_e2], 3):
        raise NotAbelianTransitive("image group is not transitive")

    e1, e2 = FreeWord.gen(1), FreeWord.gen(2)
    if psi_e1.is_n_cycle():
        for q in range(3):
            if psi_e2.then(psi_e1.inv() ** q).is_identity():
                return e1, e2 * e1 ** (-q)
        raise NotAbelianTransitive("image of e2 is not a power of the 3-cycle")
    # transitive abelian subgroup of S3 is generated by a 3-cycle, so here
    # psi_e1 must be the identity and psi_e2 the 3-cycle
    if psi_e1.is_identity() and psi_e2.is_n_cycle():
        return e2, e1.inv()
    raise NotAbelianTransitive("images do not generate a transitive abelian group")
