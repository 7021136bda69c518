"""Small dense exact-matrix helpers, parameterized by a field object.

Matrices are lists or tuples of rows holding raw field values.  Nothing here
mutates its inputs.
"""

import itertools
import math


def identity(field, size):
    zero, one = field.zero, field.one
    return [[one if i == j else zero for j in range(size)] for i in range(size)]


def freeze(rows):
    return tuple(tuple(r) for r in rows)


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def mat_eq(a, b):
    return [list(r) for r in a] == [list(r) for r in b]


def is_identity(field, rows):
    return mat_eq(rows, identity(field, len(rows)))


def mat_mul(field, a, b):
    add, mul, zero = field.add, field.mul, field.zero
    cols = list(zip(*b))
    out = []
    for row in a:
        orow = []
        for col in cols:
            acc = zero
            for x, y in zip(row, col):
                if x != zero and y != zero:
                    acc = add(acc, mul(x, y))
            orow.append(acc)
        out.append(orow)
    return out


def embed_block(field, block, positions, dim):
    """Identity of the given dimension with block written at the 1-based
    positions, rows and columns alike."""
    out = identity(field, dim)
    for i, pi in enumerate(positions):
        for j, pj in enumerate(positions):
            out[pi - 1][pj - 1] = block[i][j]
    return out


def maximal_minors(field, rows):
    """All maximal minors of a wide matrix, keyed by 0-based column tuples.

    Row-at-a-time Laplace expansion, so the whole computation is division
    free and works over every supported field.
    """
    ncols = len(rows[0])
    zero = field.zero
    prev = {(): field.one}
    for r, row in enumerate(rows, start=1):
        cur = {}
        for cols in itertools.combinations(range(ncols), r):
            acc = zero
            for t, c in enumerate(cols):
                sub = prev[cols[:t] + cols[t + 1:]]
                if sub == zero or row[c] == zero:
                    continue
                term = field.mul(row[c], sub)
                if (r - 1 + t) % 2:
                    term = field.neg(term)
                acc = field.add(acc, term)
            cur[cols] = acc
        prev = cur
    return prev


def det(field, rows):
    return maximal_minors(field, rows)[tuple(range(len(rows)))]


def rank(field, rows):
    """Exact rank: fraction-free (Bareiss) over the rationals to bound entry
    growth, plain Gaussian elimination over finite fields."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    if field.kind == "rationals":
        cleared = []
        for r in rows:
            scale = math.lcm(*(v.denominator for v in r))
            cleared.append([int(v * scale) for v in r])
        return _rank_bareiss(cleared)
    return _rank_gauss(field, rows)


def _rank_bareiss(m):
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r


def _rank_gauss(field, m):
    zero = field.zero
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != zero), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        for i in range(r + 1, nrows):
            if m[i][c] != zero:
                f = field.mul(m[i][c], inv)
                for j in range(c, ncols):
                    m[i][j] = field.sub(m[i][j], field.mul(f, m[r][j]))
        r += 1
        if r == nrows:
            break
    return r
