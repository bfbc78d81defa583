# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels: same contract as congruence_lab._pykernels.

Arithmetic stays on Python's arbitrary-precision ints (exactness first); the
win over the pure version is loop and dispatch overhead.
"""


def dot2(list values, list weights):
    """Sum of values[i] * weights[i]; lists must have equal length."""
    cdef Py_ssize_t i, n = len(values)
    if len(weights) != n:
        raise ValueError("dot2: length mismatch")
    total = 0
    for i in range(n):
        total = total + values[i] * weights[i]
    return total


def dot3(list xs, list ys, list weights):
    """Sum of xs[i] * ys[i] * weights[i]; lists must have equal length."""
    cdef Py_ssize_t i, n = len(xs)
    if len(ys) != n or len(weights) != n:
        raise ValueError("dot3: length mismatch")
    total = 0
    for i in range(n):
        total = total + xs[i] * ys[i] * weights[i]
    return total


def power_steps(base, first_exponent, exponent_step, count):
    """[base**e for e = first, first+step, ...], ``count`` exact powers."""
    cdef Py_ssize_t i, cnt = count
    if cnt <= 0:
        return []
    if first_exponent < 0 or exponent_step < 0:
        raise ValueError("power_steps: exponents must be nonnegative")
    acc = base**first_exponent
    cdef list out = [acc]
    if cnt > 1:
        ratio = base**exponent_step
        for i in range(cnt - 1):
            acc = acc * ratio
            out.append(acc)
    return out


def stirling1_rows(max_n):
    """Rows 0..max_n of the unsigned first-kind Stirling triangle."""
    cdef Py_ssize_t n, k, top = max_n
    cdef list rows = [[1]]
    cdef list prev, row
    for n in range(1, top + 1):
        prev = rows[n - 1]
        nm1 = n - 1
        row = [nm1 * prev[0]]
        for k in range(1, n):
            row.append(prev[k - 1] + nm1 * prev[k])
        row.append(prev[n - 1])
        rows.append(row)
    return rows


def stirling2_rows(max_n):
    """Rows 0..max_n of the second-kind Stirling triangle."""
    cdef Py_ssize_t n, k, top = max_n
    cdef list rows = [[1]]
    cdef list prev, row
    for n in range(1, top + 1):
        prev = rows[n - 1]
        row = [0]
        for k in range(1, n):
            row.append(prev[k - 1] + k * prev[k])
        row.append(prev[n - 1])
        rows.append(row)
    return rows


def eulerian_rows(max_n):
    """Rows 0..max_n of the Eulerian triangle (row 0 is the seed [1])."""
    cdef Py_ssize_t n, k, plen, top = max_n
    cdef list rows = [[1]]
    cdef list prev, row
    for n in range(1, top + 1):
        prev = rows[n - 1]
        plen = len(prev)
        row = []
        for k in range(n):
            acc = 0
            if k < plen:
                acc = acc + (k + 1) * prev[k]
            if 0 <= k - 1 < plen:
                acc = acc + (n - k) * prev[k - 1]
            row.append(acc)
        rows.append(row)
    return rows
