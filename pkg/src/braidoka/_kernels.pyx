# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot loops: the SL(2,Z) braid representation on
words, the zero-entropy screen, the exhaustive trichotomy sweep, and the
Weierstrass lattice sums.

Matrix entries live in int64; callers must keep words short enough that
products stay below 2^62 (the entries of a k-letter product are bounded by
2^(k-1)), which `_backend` enforces before dispatching here.
"""

from libc.stdint cimport int64_t


cdef inline void _letter(int let, int64_t* m) noexcept:
    if let == 1:
        m[0], m[1], m[2], m[3] = 1, 1, 0, 1
    elif let == -1:
        m[0], m[1], m[2], m[3] = 1, -1, 0, 1
    elif let == 2:
        m[0], m[1], m[2], m[3] = 1, 0, -1, 1
    else:
        m[0], m[1], m[2], m[3] = 1, 0, 1, 1


cdef inline void _mul(int64_t* x, int64_t* y, int64_t* out) noexcept:
    out[0] = x[0] * y[0] + x[1] * y[2]
    out[1] = x[0] * y[1] + x[1] * y[3]
    out[2] = x[2] * y[0] + x[3] * y[2]
    out[3] = x[2] * y[1] + x[3] * y[3]


cdef void _theta(object letters, int64_t* acc):
    cdef int64_t gen[4]
    cdef int64_t tmp[4]
    cdef int let
    acc[0], acc[1], acc[2], acc[3] = 1, 0, 0, 1
    for let in letters:
        _letter(let, gen)
        _mul(acc, gen, tmp)
        acc[0], acc[1], acc[2], acc[3] = tmp[0], tmp[1], tmp[2], tmp[3]


def theta_abcd(letters):
    cdef int64_t m[4]
    _theta(letters, m)
    return (m[0], m[1], m[2], m[3])


cdef inline void _inv(int64_t* m, int64_t* out) noexcept:
    out[0], out[1], out[2], out[3] = m[3], -m[1], -m[2], m[0]


cdef inline int64_t _abs64(int64_t x) noexcept:
    return -x if x < 0 else x


def e0_screen(l1, l2):
    """0 when all five test traces are <= 2 in absolute value, else the
    1-based index of the first failure."""
    cdef int64_t m1[4]
    cdef int64_t m2[4]
    cdef int64_t m1i[4]
    cdef int64_t m2i[4]
    cdef int64_t t1[4]
    cdef int64_t t2[4]
    _theta(l1, m1)
    if _abs64(m1[0] + m1[3]) > 2:
        return 1
    _theta(l2, m2)
    if _abs64(m2[0] + m2[3]) > 2:
        return 2
    _inv(m1, m1i)
    _mul(m2, m1i, t1)                    # e2 e1^-1
    if _abs64(t1[0] + t1[3]) > 2:
        return 3
    _mul(t1, m1i, t2)                    # e2 e1^-2
    if _abs64(t2[0] + t2[3]) > 2:
        return 4
    _inv(m2, m2i)
    _mul(m1, m2, t1)
    _mul(t1, m1i, t2)
    _mul(t2, m2i, t1)                    # [e1, e2]
    if _abs64(t1[0] + t1[3]) > 2:
        return 5
    return 0


def sweep3_stats(int maxlen):
    """Depth-first sweep over all raw B_3 words of length <= maxlen,
    classifying each by the theta trace; mirrors the pure version."""
    cdef long long total = 0, periodic = 0, reducible = 0, pa = 0
    cdef long long three_cycles = 0, violations = 0
    cdef int64_t min_pa_trace = 0

    cdef int depth = 0
    # explicit stacks: matrices, permutations, next-letter cursor
    cdef int64_t mats[64][4]
    cdef int perms[64][3]
    cdef int cursor[64]
    cdef int64_t gen[4]
    cdef int64_t tmp[4]
    cdef int64_t t
    cdef int li
    cdef int p0, p1, p2
    cdef int* letters4 = [1, -1, 2, -2]

    mats[0][0], mats[0][1], mats[0][2], mats[0][3] = 1, 0, 0, 1
    perms[0][0], perms[0][1], perms[0][2] = 1, 2, 3
    cursor[0] = 0

    while depth >= 0:
        if cursor[depth] == 0:
            # first visit of this node: classify
            total += 1
            t = mats[depth][0] + mats[depth][3]
            if _abs64(t) > 2:
                pa += 1
                if min_pa_trace == 0 or _abs64(t) < min_pa_trace:
                    min_pa_trace = _abs64(t)
            elif _abs64(t) == 2 and not (mats[depth][1] == 0 and mats[depth][2] == 0):
                reducible += 1
                if perms[depth][0] != 1 and perms[depth][1] != 2 and perms[depth][2] != 3:
                    violations += 1
            else:
                periodic += 1
            if perms[depth][0] != 1 and perms[depth][1] != 2 and perms[depth][2] != 3:
                three_cycles += 1
        if depth == maxlen or cursor[depth] >= 4:
            depth -= 1
            continue
        li = letters4[cursor[depth]]
        cursor[depth] += 1
        _letter(li, gen)
        _mul(mats[depth], gen, tmp)
        mats[depth + 1][0], mats[depth + 1][1] = tmp[0], tmp[1]
        mats[depth + 1][2], mats[depth + 1][3] = tmp[2], tmp[3]
        # letter li acts on positions |li|, |li|+1: compose permutation
        p0, p1, p2 = perms[depth][0], perms[depth][1], perms[depth][2]
        if li == 1 or li == -1:
            perms[depth + 1][0] = 2 if p0 == 1 else (1 if p0 == 2 else p0)
            perms[depth + 1][1] = 2 if p1 == 1 else (1 if p1 == 2 else p1)
            perms[depth + 1][2] = 2 if p2 == 1 else (1 if p2 == 2 else p2)
        else:
            perms[depth + 1][0] = 3 if p0 == 2 else (2 if p0 == 3 else p0)
            perms[depth + 1][1] = 3 if p1 == 2 else (2 if p1 == 3 else p1)
            perms[depth + 1][2] = 3 if p2 == 2 else (2 if p2 == 3 else p2)
        cursor[depth + 1] = 0
        depth += 1

    return {
        "total": total,
        "periodic": periodic,
        "reducible": reducible,
        "pseudo_anosov": pa,
        "three_cycles": three_cycles,
        "violations": violations,
        "min_pa_abs_trace": min_pa_trace,
    }


def wp_sum(double complex z, double complex tau, int radius):
    """Square-cutoff regularized Weierstrass sum."""
    cdef double complex acc = 1.0 / (z * z)
    cdef double complex w, d
    cdef int n, m
    for n in range(-radius, radius + 1):
        for m in range(-radius, radius + 1):
            if n == 0 and m == 0:
                continue
            w = n + m * tau
            d = z - w
            acc = acc + 1.0 / (d * d) - 1.0 / (w * w)
    return acc


def wp_prime_sum(double complex z, double complex tau, int radius):
    """Square-cutoff sum of -2/(z-w)^3 including the origin."""
    cdef double complex acc = 0
    cdef double complex d
    cdef int n, m
    for n in range(-radius, radius + 1):
        for m in range(-radius, radius + 1):
            d = z - (n + m * tau)
            acc = acc - 2.0 / (d * d * d)
    return acc
