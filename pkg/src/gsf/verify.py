"""Exact checks of the polygon and simplex equations and of the structure
theorems tying them together.

Every check returns a VerificationReport; nothing here is approximate, a
single wrong entry flips the status to "fail" and is recorded as a witness.
A broken input (say a corrupted minor table that spoils the inverse pair)
also comes back as a fail report rather than an exception.
"""

import itertools

from . import matrices
from .combinatorics import (complement, color_classes, gon_factor_labels,
                            gon_inverse_factor_labels, simplex_factor_labels,
                            simplex_positions)
from .errors import ConstructionError, InputError, ReductionError, StructuralError
from .exterior import span_rank
from .grassmann import (as_table, assumption_check, phi, psi,
                        verify_plucker_relations)
from .report import Stopwatch, VerificationReport
from .solutions import (OperatorSlot, build_A, build_B, build_Z,
                        gon_inverse_slot, gon_slot, reduce_matrix,
                        simplex_slot)


class _Mismatch(Exception):
    """Internal: carries the witness of a failed comparison."""

    def __init__(self, witness):
        super().__init__(str(witness))
        self.witness = witness


def _finish(report, watch, body):
    try:
        body()
    except _Mismatch as m:
        report.status = "fail"
        report.witness = m.witness
    except (ConstructionError, StructuralError) as e:
        report.status = "fail"
        report.witness = {"reason": str(e)}
    report.millis = watch.millis()
    return report


def embed(slot, dim):
    """The slot's matrix as a dim x dim matrix acting at its positions."""
    if slot.positions[-1] > dim:
        raise InputError("slot positions exceed the ambient dimension %d" % dim)
    return matrices.embed_block(slot.field, slot.matrix, slot.positions, dim)


def side_product(slots, dim):
    """Product of the embedded slots, leftmost factor applied first to rows.

    Updates only the touched columns of each row, so the cost per slot is
    dim times the block size squared.
    """
    slots = list(slots)
    if not slots:
        raise InputError("a side needs at least one factor")
    field = slots[0].field
    out = matrices.identity(field, dim)
    for slot in slots:
        if slot.positions[-1] > dim:
            raise InputError(
                "slot positions exceed the ambient dimension %d" % dim)
        block = slot.matrix
        m = len(block)
        add, mul, zero = field.add, field.mul, field.zero
        for row in out:
            vals = [row[p - 1] for p in slot.positions]
            for j in range(m):
                acc = zero
                for i in range(m):
                    if vals[i] != zero and block[i][j] != zero:
                        acc = add(acc, mul(vals[i], block[i][j]))
                row[slot.positions[j] - 1] = acc
    return out


def _first_mismatch(a, b):
    for i, (ra, rb) in enumerate(zip(a, b)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return i + 1, j + 1
    return None


def _require_equal(part, field, lhs, rhs):
    spot = _first_mismatch(lhs, rhs)
    if spot is None:
        return
    i, j = spot
    raise _Mismatch({"part": part, "row": i, "col": j,
                     "lhs": field.fmt(lhs[i - 1][j - 1]),
                     "rhs": field.fmt(rhs[i - 1][j - 1])})


def verify_gon(x):
    """Both polygon equations: ascending odd A factors against descending
    even ones, and ascending even B factors against descending odd ones."""
    watch = Stopwatch()
    table = as_table(x)
    n, field = table.n, table.field
    dim = n * (n + 1) // 2
    report = VerificationReport("gon", {"n": n, "dim": dim})

    def body():
        lhs_q, rhs_q = gon_factor_labels(n)
        lhs = side_product([gon_slot(x, q) for q in lhs_q], dim)
        rhs = side_product([gon_slot(x, q) for q in rhs_q], dim)
        _require_equal("direct", field, lhs, rhs)
        inv_lhs_q, inv_rhs_q = gon_inverse_factor_labels(n)
        inv_lhs = side_product([gon_inverse_slot(x, q) for q in inv_lhs_q], dim)
        inv_rhs = side_product([gon_inverse_slot(x, q) for q in inv_rhs_q], dim)
        _require_equal("inverse", field, inv_lhs, inv_rhs)

    return _finish(report, watch, body)


def _simplex_sides(x):
    table = as_table(x)
    n = table.n
    dim = n * (2 * n + 1)
    lhs_q, rhs_q = simplex_factor_labels(2 * n)
    slots = {q: simplex_slot(x, q) for q in lhs_q}
    lhs = side_product([slots[q] for q in lhs_q], dim)
    rhs = side_product([slots[q] for q in rhs_q], dim)
    return lhs, rhs, dim


def verify_simplex(x):
    """The simplex equation for the checkerboard matrices."""
    watch = Stopwatch()
    table = as_table(x)
    report = VerificationReport(
        "simplex", {"n": table.n, "dim": table.n * (2 * table.n + 1)})

    def body():
        lhs, rhs, _ = _simplex_sides(x)
        _require_equal("sides", table.field, lhs, rhs)

    return _finish(report, watch, body)


def _submatrix(rows, row_positions, col_positions):
    return [[rows[i - 1][j - 1] for j in col_positions] for i in row_positions]


def verify_colors(x):
    """Block structure of the simplex products under the three-coloring.

    Both sides must vanish between the mixed-parity slots and the green ones,
    the mixed block must be off-diagonal with mutually inverse corners, and
    those corners must reproduce the polygon products."""
    watch = Stopwatch()
    table = as_table(x)
    n, field = table.n, table.field
    zero = field.zero
    report = VerificationReport("colors", {"n": n})

    def body():
        classes = color_classes(n)
        blue, red, green = classes["blue"], classes["red"], classes["green"]
        lhs, rhs, _ = _simplex_sides(x)
        for part, side in (("lhs", lhs), ("rhs", rhs)):
            for i in blue + red:
                for j in green:
                    if side[i - 1][j - 1] != zero or side[j - 1][i - 1] != zero:
                        raise _Mismatch({"part": part + " mixed-green block",
                                         "row": i, "col": j})
            for group in (blue, red):
                for i in group:
                    for j in group:
                        if side[i - 1][j - 1] != zero:
                            raise _Mismatch({"part": part + " same-color block",
                                             "row": i, "col": j})
        blue_to_red = _submatrix(lhs, blue, red)
        red_to_blue = _submatrix(lhs, red, blue)
        prod = matrices.mat_mul(field, blue_to_red, red_to_blue)
        if not matrices.is_identity(field, prod):
            raise _Mismatch({"part": "mixed corners not inverse"})
        dim = n * (n + 1) // 2
        lhs_q, _ = gon_factor_labels(n)
        gon_lhs = side_product([gon_slot(x, q) for q in lhs_q], dim)
        _require_equal("blue-to-red corner vs polygon product",
                       field, blue_to_red, gon_lhs)
        inv_lhs_q, _ = gon_inverse_factor_labels(n)
        inv_lhs = side_product([gon_inverse_slot(x, q) for q in inv_lhs_q], dim)
        _require_equal("red-to-blue corner vs inverse polygon product",
                       field, red_to_blue, inv_lhs)

    return _finish(report, watch, body)


def green_spectrum(x):
    """The green block G of the simplex product squares to the identity, and
    away from characteristic 2 it has rank(G - I) = n(n-1)/2 and
    rank(G + I) = n(n+1)/2."""
    watch = Stopwatch()
    table = as_table(x)
    n, field = table.n, table.field
    report = VerificationReport("green", {"n": n})

    def body():
        green = color_classes(n)["green"]
        lhs, _, _ = _simplex_sides(x)
        g = _submatrix(lhs, green, green)
        if not matrices.is_identity(field, matrices.mat_mul(field, g, g)):
            raise _Mismatch({"part": "green block is not an involution"})
        if field.characteristic == 2:
            report.params["ranks"] = "skipped in characteristic 2"
            return
        size = len(green)
        one, sub, add = field.one, field.sub, field.add
        minus = [[sub(g[i][j], one) if i == j else g[i][j]
                  for j in range(size)] for i in range(size)]
        plus = [[add(g[i][j], one) if i == j else g[i][j]
                 for j in range(size)] for i in range(size)]
        want = {"minus": n * (n - 1) // 2, "plus": n * (n + 1) // 2}
        got = {"minus": matrices.rank(field, minus),
               "plus": matrices.rank(field, plus)}
        report.params["ranks"] = got
        if got != want:
            raise _Mismatch({"expected": want, "actual": got})

    return _finish(report, watch, body)


def verify_intertwining(x):
    """The multivector families transform under A and B exactly as the
    construction demands, in all four combinations."""
    watch = Stopwatch()
    table = as_table(x)
    n = table.n
    report = VerificationReport("intertwining", {"n": n})

    def body():
        for q in range(1, 2 * n + 2):
            a = complement(n, q)
            a_block = build_A(x, q)
            b_block = build_B(x, q)
            phis = {c: phi(x, c, q) for c in a}
            psis = {c: psi(x, c, q) for c in a}
            for j in range(1, n + 1):
                acc = None
                for i in range(1, n + 1):
                    term = phis[a[2 * i - 2]].scaled(a_block[i - 1][j - 1])
                    acc = term if acc is None else acc + term
                if acc != -phis[a[2 * j - 1]]:
                    raise _Mismatch({"family": "phi-A", "q": q, "index": j})
                acc = None
                for i in range(1, n + 1):
                    term = phis[a[2 * i - 1]].scaled(b_block[i - 1][j - 1])
                    acc = term if acc is None else acc + term
                if acc != -phis[a[2 * j - 2]]:
                    raise _Mismatch({"family": "phi-B", "q": q, "index": j})
            for i in range(1, n + 1):
                acc = None
                for j in range(1, n + 1):
                    term = psis[a[2 * j - 1]].scaled(a_block[i - 1][j - 1])
                    acc = term if acc is None else acc + term
                if acc != psis[a[2 * i - 2]]:
                    raise _Mismatch({"family": "psi-A", "q": q, "index": i})
                acc = None
                for j in range(1, n + 1):
                    term = psis[a[2 * j - 2]].scaled(b_block[i - 1][j - 1])
                    acc = term if acc is None else acc + term
                if acc != psis[a[2 * i - 1]]:
                    raise _Mismatch({"family": "psi-B", "q": q, "index": i})

    return _finish(report, watch, body)


def verify_ranks(x):
    """Span dimensions of the multivector families."""
    watch = Stopwatch()
    table = as_table(x)
    n = table.n
    report = VerificationReport("ranks", {"n": n})

    def body():
        labels = range(1, 2 * n + 2)
        cases = []
        for j in labels:
            cases.append(("fixed-%d" % j,
                          [phi(x, i, j) for i in labels if i != j], n))
        odds = list(range(1, 2 * n + 2, 2))
        evens = list(range(2, 2 * n + 2, 2))
        cases.append(("odd-even",
                      [phi(x, o, e) for o in odds for e in evens if o < e],
                      n * (n + 1) // 2))
        cases.append(("odd-odd",
                      [phi(x, i, j) for i, j in itertools.combinations(odds, 2)],
                      n * (n + 1) // 2))
        cases.append(("even-even",
                      [psi(x, i, j) for i, j in itertools.combinations(evens, 2)],
                      n * (n - 1) // 2))
        for family, vectors, expected in cases:
            actual = span_rank(vectors)
            if actual != expected:
                raise _Mismatch({"family": family, "expected": expected,
                                 "actual": actual})

    return _finish(report, watch, body)


def verify_reduction(x, lambdas=None, depth=1):
    """Iterated reductions: at level k the operators shrink by one and must
    satisfy the simplex equation of size 2n-k, for every given parameter.
    A singular reduction pivot is reported as a failure with its level."""
    watch = Stopwatch()
    table = as_table(x)
    n, field = table.n, table.field
    if depth < 1 or depth > 2 * n - 1:
        raise InputError("depth must lie in 1..%d" % (2 * n - 1))
    if lambdas is None:
        lambdas = [field.zero, field.one]
    report = VerificationReport(
        "reduction", {"n": n, "depth": depth,
                      "lambdas": [field.fmt(l) for l in lambdas],
                      "levels": [{"level": k, "size": 2 * n - k,
                                  "dim": (2 * n - k) * (2 * n - k + 1) // 2}
                                 for k in range(1, depth + 1)]})

    def body():
        for lam in lambdas:
            mats = None
            for level in range(1, depth + 1):
                size = 2 * n - level
                labels = range(1, 2 * n + 1) if level == 1 else range(1, size + 2)
                nxt = {}
                for q in labels:
                    try:
                        nxt[q] = (build_Z(x, q, lam) if level == 1
                                  else reduce_matrix(field, mats[q], lam))
                    except ReductionError:
                        raise _Mismatch({"q": q, "level": level,
                                         "lambda": field.fmt(lam),
                                         "reason": "singular reduction pivot"})
                mats = nxt
                dim = size * (size + 1) // 2
                slots = [OperatorSlot(q, "Z", matrices.freeze(mats[q]),
                                      tuple(simplex_positions(size, q)),
                                      field, lam)
                         for q in range(1, size + 2)]
                lhs = side_product(slots, dim)
                rhs = side_product(list(reversed(slots)), dim)
                spot = _first_mismatch(lhs, rhs)
                if spot is not None:
                    i, j = spot
                    raise _Mismatch({"level": level, "lambda": field.fmt(lam),
                                     "row": i, "col": j,
                                     "lhs": field.fmt(lhs[i - 1][j - 1]),
                                     "rhs": field.fmt(rhs[i - 1][j - 1])})

    return _finish(report, watch, body)


CHECK_NAMES = ("assumption", "plucker", "gon", "simplex", "colors", "green",
               "intertwining", "ranks", "reduction")


def run_checks(x, checks=None, lambdas=None, depth=1):
    """Run the named checks (all of them by default) and return the reports."""
    if checks is None:
        checks = CHECK_NAMES
    unknown = [c for c in checks if c not in CHECK_NAMES]
    if unknown:
        raise InputError("unknown checks: %s" % ", ".join(unknown))
    reports = []
    for name in checks:
        if name == "assumption":
            reports.append(assumption_check(x))
        elif name == "plucker":
            reports.append(verify_plucker_relations(x))
        elif name == "gon":
            reports.append(verify_gon(x))
        elif name == "simplex":
            reports.append(verify_simplex(x))
        elif name == "colors":
            reports.append(verify_colors(x))
        elif name == "green":
            reports.append(green_spectrum(x))
        elif name == "intertwining":
            reports.append(verify_intertwining(x))
        elif name == "ranks":
            reports.append(verify_ranks(x))
        elif name == "reduction":
            reports.append(verify_reduction(x, lambdas=lambdas, depth=depth))
    return reports
