"""Nielsen-Thurston trichotomy, entropy, and conformal module for 3-braids.

The classification runs through the SL(2,Z) image: elliptic or central
means periodic, parabolic means reducible (non-periodic), hyperbolic means
pseudo-Anosov.  Entropy of a pseudo-Anosov 3-braid is the log of the
spectral radius of its theta image, and the conformal module of any class
is pi/2 times the reciprocal entropy (infinite for entropy zero).

All threshold comparisons are made on the exact integer trace, so the
trichotomy needs no floating-point tolerance.
"""

from __future__ import annotations

import concurrent.futures
import dataclasses
import math
from typing import Literal, Optional

from . import _backend
from .braid import BraidWord, braid_eq, commutator, exponent_sum, permutation
from .errors import (
    InternalInconsistency,
    ResourceLimit,
    TheoremContradiction,
    WrongStrandCount,
)
from .sl2z import (
    CENTRAL_I,
    CENTRAL_MINUS_I,
    ELLIPTIC,
    PARABOLIC,
    matrix_class,
    parabolic_normal_form,
    sl2z_conjugate,
    theta,
)

PERIODIC = "periodic"
REDUCIBLE = "reducible"
PSEUDO_ANOSOV = "pseudoAnosov"

# log((3 + sqrt 5)/2): smallest nonzero entropy among 3-braids, at |trace| 3
MIN_PA_ENTROPY = math.log((3 + math.sqrt(5)) / 2)


def log_spectral_radius(trace: int) -> float:
    """log((|t| + sqrt(t^2 - 4)) / 2) for |t| > 2, stable for huge traces."""
    t = abs(trace)
    if t <= 2:
        return 0.0
    if t < 10**8:
        return math.log((t + math.sqrt(t * t - 4)) / 2)
    # for huge traces sqrt(t^2-4) ~ t: split the log to avoid overflow
    return math.log(t) + math.log1p(math.sqrt(max(0.0, 1.0 - 4.0 / (t * t)))) - math.log(2)


@dataclasses.dataclass(frozen=True)
class ThreeBraidClass:
    """Classification verdict for a 3-braid."""

    kind: Literal["periodic", "reducible", "pseudoAnosov"]
    trace: int
    exponent_sum: int
    central: bool = False
    reducible_flag: bool = False
    base: Optional[Literal["sigma12", "delta"]] = None  # periodic: power base
    ell: Optional[int] = None       # periodic power / reducible Delta^2 power
    k: Optional[int] = None         # reducible sigma_1 power
    entropy: float = 0.0
    module: float = math.inf

    def as_dict(self) -> dict:
        out = {"kind": self.kind, "trace": self.trace, "exponentSum": self.exponent_sum}
        if self.kind == PERIODIC:
            out.update(base=self.base, ell=self.ell, central=self.central,
                       reducible=self.reducible_flag)
        elif self.kind == REDUCIBLE:
            out.update(k=self.k, ell=self.ell)
        out["entropy"] = self.entropy
        out["module"] = None if math.isinf(self.module) else self.module
        return out


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise InternalInconsistency(f"{what}: {num} not divisible by {den}")
    return num // den


def classify3(b: BraidWord) -> ThreeBraidClass:
    if b.strands != 3:
        raise WrongStrandCount(f"classify3 needs B_3, got B_{b.strands}")
    m = theta(b)
    es = exponent_sum(b)
    cls = matrix_class(m)
    t = m.trace

    if cls.kind in (CENTRAL_I, CENTRAL_MINUS_I):
        # b = Delta^{2l}; also reducible as sigma_1^0 Delta^{2l}
        ell = _exact_div(es, 6, "central power")
        if (cls.kind == CENTRAL_MINUS_I) != (ell % 2 == 1):
            raise InternalInconsistency("central sign does not match exponent sum")
        return ThreeBraidClass(PERIODIC, t, es, central=True, reducible_flag=True,
                               base="delta", ell=2 * ell)
    if cls.kind == ELLIPTIC:
        if t in (1, -1):
            ell = _exact_div(es, 2, "sigma12 power")
            if ell % 3 == 0:
                raise InternalInconsistency("elliptic +-1 trace with 3 | ell")
            return ThreeBraidClass(PERIODIC, t, es, base="sigma12", ell=ell)
        ell = _exact_div(es, 3, "delta power")
        if ell % 2 == 0:
            raise InternalInconsistency("trace-0 image with even Delta power")
        return ThreeBraidClass(PERIODIC, t, es, base="delta", ell=ell)
    if cls.kind == PARABOLIC:
        sign, k = parabolic_normal_form(m)
        ell = _exact_div(es - k, 6, "reducible Delta^2 power")
        if (sign == -1) != (ell % 2 == 1):
            raise InternalInconsistency("parabolic sign does not match ell parity")
        return ThreeBraidClass(REDUCIBLE, t, es, reducible_flag=True, k=k, ell=ell)

    h = log_spectral_radius(t)
    return ThreeBraidClass(PSEUDO_ANOSOV, t, es, entropy=h, module=math.pi / (2 * h))


def entropy3(b: BraidWord) -> float:
    if b.strands != 3:
        raise WrongStrandCount(f"entropy3 needs B_3, got B_{b.strands}")
    a, bb, c, d = _backend.theta_abcd(b.letters)
    return log_spectral_radius(a + d)


def conformal_module3(b: BraidWord) -> float:
    """pi/(2h), infinite when the entropy vanishes."""
    h = entropy3(b)
    return math.inf if h == 0.0 else math.pi / (2 * h)


def conj3(b1: BraidWord, b2: BraidWord) -> bool:
    """Conjugacy in B_3 through the SL(2,Z) quotient plus the exponent sum.

    Sound and complete: theta is onto, its kernel is generated by the
    central element Delta^4, and Delta^4 has exponent sum 12, so matching
    exponent sums pin down the central ambiguity.
    """
    if b1.strands != 3 or b2.strands != 3:
        raise WrongStrandCount("conj3 needs B_3 words")
    if exponent_sum(b1) != exponent_sum(b2):
        return False
    return sl2z_conjugate(theta(b1), theta(b2))


def centralizer_check(b: BraidWord, k: int) -> bool:
    """Does b commute with sigma_1^k?"""
    if b.strands != 3:
        raise WrongStrandCount("centralizer_check needs B_3 words")
    if k == 0:
        raise ValueError("k must be nonzero")
    s = BraidWord.sigma(3, 1, k)
    return braid_eq(b * s, s * b)


@dataclasses.dataclass(frozen=True)
class CommutatorPair:
    b1: tuple[int, ...]
    b2: tuple[int, ...]
    commutator_trace: int
    entropy_b1: float
    entropy_b2: float
    b1_pure: bool
    b2_pure: bool
    entropy_b2b1inv: float
    entropy_b2b1inv2: float

    def zero_entropy_inputs(self) -> bool:
        return self.entropy_b1 == 0.0 and self.entropy_b2 == 0.0


@dataclasses.dataclass(frozen=True)
class CommutatorScanReport:
    maxlen: int
    words_scanned: int
    pairs: tuple[CommutatorPair, ...]

    def contains(self, w1: tuple[int, ...], w2: tuple[int, ...]) -> bool:
        return any(p.b1 == w1 and p.b2 == w2 for p in self.pairs)

    def as_dict(self) -> dict:
        return {
            "maxlen": self.maxlen,
            "wordsScanned": self.words_scanned,
            "pairCount": len(self.pairs),
            "pairs": [
                {
                    "b1": list(p.b1),
                    "b2": list(p.b2),
                    "commutatorTrace": p.commutator_trace,
                    "entropyB1": p.entropy_b1,
                    "entropyB2": p.entropy_b2,
                    "b1Pure": p.b1_pure,
                    "b2Pure": p.b2_pure,
                    "entropyB2B1inv": p.entropy_b2b1inv,
                    "entropyB2B1inv2": p.entropy_b2b1inv2,
                }
                for p in self.pairs
            ],
        }


def _reduced_words3(maxlen: int) -> list[tuple[int, ...]]:
    words: list[tuple[int, ...]] = []
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(maxlen):
        nxt = []
        for w in frontier:
            for let in (1, -1, 2, -2):
                if w and w[-1] == -let:
                    continue
                nxt.append(w + (let,))
        words.extend(nxt)
        frontier = nxt
    return words

_SCAN_WORDS: list[tuple[int, ...]] = []
_SCAN_POS: dict[tuple[int, ...], int] = {}


def _scan_chunk(args: tuple[int, int]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    lo, hi = args
    from . import _purekernels as K

    words = _SCAN_WORDS
    mats = [K.theta_abcd(w) for w in words]
    found = []
    for i in range(lo, hi):
        w1, m1 = words[i], mats[i]
        m1i = K.mat_inv(m1)
        for w2, m2 in zip(words, mats):
            comm = K.mat_mul(K.mat_mul(m1, m2), K.mat_mul(m1i, K.mat_inv(m2)))
            if comm == (1, 0, 0, 1):
                continue  # commuting pair
            if abs(comm[0] + comm[3]) <= 2:
                found.append((w1, w2))
    return found


def zero_entropy_commutator_scan(maxlen: int, jobs: int = 1) -> CommutatorScanReport:
    """Find pairs (b1, b2) whose commutator is nontrivial yet has entropy
    zero, among all reduced words of length <= maxlen.

    Each pair carries the entropies of b1 and b2, so pairs answering the
    harder question (both inputs of entropy zero as well) can be filtered
    with zero_entropy_inputs().  Every found pair is checked against the
    commuting-criterion corollary: if b1, b2, and the commutator all have
    entropy zero, then either braid being pure, or b2*b1^-1 and b2*b1^-2
    both having entropy zero, would force the commutator to be trivial.  A
    found pair meeting those hypotheses raises TheoremContradiction.
    """
    if maxlen > 10:
        raise ResourceLimit("commutator scan is limited to maxlen <= 10")
    words = _reduced_words3(maxlen)

    _set_scan_words(words)
    if jobs > 1:
        chunk = (len(words) + jobs - 1) // jobs
        ranges = [(i, min(i + chunk, len(words))) for i in range(0, len(words), chunk)]
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=jobs, initializer=_set_scan_words, initargs=(words,)
        ) as ex:
            raw = [p for part in ex.map(_scan_chunk, ranges) for p in part]
    else:
        raw = _scan_chunk((0, len(words)))
    raw.sort()

    pairs = []
    for w1, w2 in raw:
        b1, b2 = BraidWord(3, w1), BraidWord(3, w2)
        comm = commutator(b1, b2)
        hb1, hb2 = entropy3(b1), entropy3(b2)
        b1_pure = permutation(b1).is_identity()
        b2_pure = permutation(b2).is_identity()
        h1 = entropy3(b2 * b1.inv())
        h2 = entropy3(b2 * b1.inv() ** 2)
        if hb1 == 0.0 and hb2 == 0.0:
            if b1_pure or b2_pure or (h1 == 0.0 and h2 == 0.0):
                raise TheoremContradiction(
                    f"pair {w1}, {w2} satisfies the corollary hypotheses "
                    "but has a nontrivial commutator"
                )
        pairs.append(
            CommutatorPair(w1, w2, theta(comm).trace, hb1, hb2, b1_pure, b2_pure, h1, h2)
        )
    return CommutatorScanReport(maxlen, len(words), tuple(pairs))


def _set_scan_words(words: list[tuple[int, ...]]) -> None:
    global _SCAN_WORDS, _SCAN_POS
    _SCAN_WORDS = words
    _SCAN_POS = {w: i for i, w in enumerate(words)}
