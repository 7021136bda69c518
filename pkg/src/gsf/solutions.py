"""Operator families built from a table of maximal minors.

Every family is indexed by a label q in 1..2n+1.  The n x n blocks A and B
are mutual inverses, the 2n x 2n checkerboard matrix R interleaves them, and
Z is the one-parameter reduction of R that drops the last row and column.
"""

from dataclasses import dataclass

from . import matrices
from .combinatorics import check_n, complement, gon_positions, simplex_positions
from .errors import ConstructionError, InputError, ReductionError, StructuralError
from .grassmann import as_table


@dataclass(frozen=True)
class OperatorSlot:
    """One factor of an equation: a matrix acting at 1-based positions."""
    q: int
    kind: str
    matrix: tuple
    positions: tuple
    field: object
    lam: object = None

    def __post_init__(self):
        if self.kind not in ("A", "B", "R", "Z"):
            raise InputError("unknown operator kind %r" % (self.kind,))
        m = len(self.matrix)
        if m == 0 or any(len(row) != m for row in self.matrix):
            raise InputError("operator matrix must be square")
        if len(self.positions) != m:
            raise InputError("need one position per matrix row")
        if any(p < 1 for p in self.positions) or \
                any(a >= b for a, b in zip(self.positions, self.positions[1:])):
            raise InputError("positions must be strictly increasing and 1-based")
        if self.lam is not None and self.kind != "Z":
            raise InputError("only reduced operators carry a parameter")


def _family_matrix(table, q, use_evens):
    """The n x n block with entries (-1)^i p_{a', tail} / p_{parity class, q};
    use_evens False gives A (odd-indexed denominators), True gives B."""
    n, field = table.n, table.field
    a = complement(n, q)
    offset = 1 if use_evens else 0
    picks = [a[2 * i + offset] for i in range(n)]
    den = table.signed(list(picks) + [q])
    if den == field.zero:
        raise ConstructionError(
            "minor at columns %r vanishes; the construction needs it"
            % (tuple(sorted(picks + [q])),))
    inv_den = field.inv(den)
    out = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            other = a[2 * j - 1 - offset]
            rest = [x for x in picks if x != a[2 * i - 2 + offset]]
            num = table.signed([other] + rest + [q])
            val = field.mul(num, inv_den)
            if i % 2:
                val = field.neg(val)
            row.append(val)
        out.append(row)
    return out


def build_A(x, q):
    table = as_table(x)
    return _family_matrix(table, q, use_evens=False)


def build_B(x, q):
    """Inverse of the A block, built from the complementary minors."""
    table = as_table(x)
    out = _family_matrix(table, q, use_evens=True)
    prod = matrices.mat_mul(table.field, build_A(x, q), out)
    if not matrices.is_identity(table.field, prod):
        raise StructuralError("A and B blocks at q=%d are not inverse" % q)
    return out


def build_R(x, q):
    """2n x 2n matrix with A on the odd-row/even-column checkerboard and B on
    the even-row/odd-column one."""
    table = as_table(x)
    n, field = table.n, table.field
    a_block = build_A(x, q)
    b_block = build_B(x, q)
    out = [[field.zero] * (2 * n) for _ in range(2 * n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out[2 * i - 2][2 * j - 1] = a_block[i - 1][j - 1]
            out[2 * i - 1][2 * j - 2] = b_block[i - 1][j - 1]
    return out


def _swap_permutation(field, dim, count):
    """Identity with the first count positions swapped pairwise."""
    out = matrices.identity(field, dim)
    for k in range(0, count, 2):
        out[k][k] = out[k + 1][k + 1] = field.zero
        out[k][k + 1] = out[k + 1][k] = field.one
    return out


def factored_r_matrix(x, q):
    """R as a product: A embedded at the odd positions, B at the even ones,
    then the pairwise swap."""
    table = as_table(x)
    n, field = table.n, table.field
    odds = list(range(1, 2 * n, 2))
    evens = list(range(2, 2 * n + 1, 2))
    ae = matrices.embed_block(field, build_A(x, q), odds, 2 * n)
    be = matrices.embed_block(field, build_B(x, q), evens, 2 * n)
    swap = _swap_permutation(field, 2 * n, 2 * n)
    return matrices.mat_mul(field, matrices.mat_mul(field, ae, be), swap)


def reduce_matrix(field, rows, lam):
    """Drop the last row and column, folding them back in with weight lam.

    Fails with ReductionError when 1 - lam * S[m][m] vanishes, which is the
    only obstruction.
    """
    m = len(rows)
    if m < 2:
        raise InputError("nothing left to reduce")
    den = field.sub(field.one, field.mul(lam, rows[m - 1][m - 1]))
    if den == field.zero:
        raise ReductionError("reduction pivot 1 - lam*S[m][m] vanishes")
    inv_den = field.inv(den)
    out = []
    for i in range(m - 1):
        row = []
        for j in range(m - 1):
            corr = field.mul(field.mul(lam, rows[i][m - 1]),
                             field.mul(rows[m - 1][j], inv_den))
            row.append(field.add(rows[i][j], corr))
        out.append(row)
    return out


def build_Z(x, q, lam):
    """Level-one reduced operator, of size 2n-1, defined for q in 1..2n.

    Built two ways and compared: as the embedded product A P Lambda B, and by
    eliminating the last row and column of R.
    """
    table = as_table(x)
    n, field = table.n, table.field
    if not 1 <= q <= 2 * n:
        raise InputError("reduced operators exist for q in 1..%d" % (2 * n))
    dim = 2 * n - 1
    odds = list(range(1, 2 * n, 2))
    ae = matrices.embed_block(field, build_A(x, q), odds, dim)
    be = matrices.embed_block(field, build_B(x, q), odds, dim)
    swap = _swap_permutation(field, dim, 2 * n - 2)
    scale = matrices.identity(field, dim)
    scale[dim - 1][dim - 1] = lam
    closed = matrices.mat_mul(field, matrices.mat_mul(
        field, matrices.mat_mul(field, ae, swap), scale), be)
    eliminated = reduce_matrix(field, build_R(x, q), lam)
    if not matrices.mat_eq(closed, eliminated):
        raise StructuralError(
            "factored and eliminated reductions disagree at q=%d" % q)
    return closed


def gon_slot(x, q):
    table = as_table(x)
    return OperatorSlot(q, "A", matrices.freeze(build_A(x, q)),
                        tuple(gon_positions(table.n, q)), table.field)


def gon_inverse_slot(x, q):
    table = as_table(x)
    return OperatorSlot(q, "B", matrices.freeze(build_B(x, q)),
                        tuple(gon_positions(table.n, q)), table.field)


def simplex_slot(x, q):
    table = as_table(x)
    return OperatorSlot(q, "R", matrices.freeze(build_R(x, q)),
                        tuple(simplex_positions(2 * table.n, q)), table.field)


def reduced_slot(x, q, lam):
    table = as_table(x)
    return OperatorSlot(q, "Z", matrices.freeze(build_Z(x, q, lam)),
                        tuple(simplex_positions(2 * table.n - 1, q)),
                        table.field, lam)
