"""Sparse multivectors over an exact field, with wedge and interior products.

A multivector of grade g in dimension d is stored as a dict mapping strictly
increasing index tuples (subsets of 1..d of size g) to nonzero coefficients.
"""

from .errors import InputError
from .matrices import rank


class Multivector:
    __slots__ = ("field", "dim", "grade", "terms")

    def __init__(self, field, dim, grade, terms=None):
        if dim < 1 or grade < 0:
            raise InputError("bad multivector shape")
        clean = {}
        zero = field.zero
        for idx, coeff in (terms or {}).items():
            idx = tuple(idx)
            if len(idx) != grade:
                raise InputError("index set size must equal the grade")
            if any(not 1 <= i <= dim for i in idx):
                raise InputError("basis index out of range 1..%d" % dim)
            if any(idx[t] >= idx[t + 1] for t in range(len(idx) - 1)):
                raise InputError("index sets must be strictly increasing")
            if coeff != zero:
                clean[idx] = coeff
        self.field = field
        self.dim = dim
        self.grade = grade
        self.terms = clean

    @classmethod
    def basis(cls, field, dim, indices):
        indices = tuple(indices)
        return cls(field, dim, len(indices), {indices: field.one})

    def is_zero(self):
        return not self.terms

    def coefficient(self, indices):
        return self.terms.get(tuple(indices), self.field.zero)

    def scaled(self, c):
        mul = self.field.mul
        return Multivector(self.field, self.dim, self.grade,
                           {k: mul(v, c) for k, v in self.terms.items()})

    def __neg__(self):
        neg = self.field.neg
        return Multivector(self.field, self.dim, self.grade,
                           {k: neg(v) for k, v in self.terms.items()})

    def __add__(self, other):
        self._check_compatible(other)
        add = self.field.add
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = add(out[k], v) if k in out else v
        return Multivector(self.field, self.dim, self.grade, out)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (isinstance(other, Multivector) and self.field == other.field
                and self.dim == other.dim and self.grade == other.grade
                and self.terms == other.terms)

    def __repr__(self):
        return "<multivector dim=%d grade=%d terms=%d>" % (
            self.dim, self.grade, len(self.terms))

    def _check_compatible(self, other):
        if not isinstance(other, Multivector):
            raise InputError("expected a multivector")
        if self.field != other.field or self.dim != other.dim:
            raise InputError("multivectors live in different spaces")
        if self.grade != other.grade:
            raise InputError("mixed grades")

    def to_json(self):
        fmt = self.field.fmt
        return {"grade": self.grade,
                "terms": [{"indices": list(k), "coeff": fmt(v)}
                          for k, v in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, field, dim, obj):
        try:
            grade = int(obj["grade"])
            terms = {tuple(int(i) for i in rec["indices"]): field.parse(rec["coeff"])
                     for rec in obj["terms"]}
        except (KeyError, TypeError, ValueError) as e:
            raise InputError("malformed multivector record") from e
        return cls(field, dim, grade, terms)


def _merge_disjoint(s, t):
    """Merge two strictly increasing tuples, counting the transpositions
    needed to interleave them; sign 0 when they intersect."""
    merged = []
    i = j = swaps = 0
    while i < len(s) and j < len(t):
        if s[i] == t[j]:
            return 0, ()
        if s[i] < t[j]:
            merged.append(s[i])
            i += 1
        else:
            merged.append(t[j])
            j += 1
            swaps += len(s) - i
    merged.extend(s[i:])
    merged.extend(t[j:])
    return (-1 if swaps & 1 else 1), tuple(merged)


def wedge(u, v):
    if not isinstance(u, Multivector) or not isinstance(v, Multivector):
        raise InputError("wedge expects multivectors")
    if u.field != v.field or u.dim != v.dim:
        raise InputError("wedge operands live in different spaces")
    field = u.field
    zero = field.zero
    out = {}
    for s, a in u.terms.items():
        for t, b in v.terms.items():
            sign, merged = _merge_disjoint(s, t)
            if sign == 0:
                continue
            val = field.mul(a, b)
            if sign < 0:
                val = field.neg(val)
            out[merged] = field.add(out[merged], val) if merged in out else val
    out = {k: v2 for k, v2 in out.items() if v2 != zero}
    return Multivector(field, u.dim, u.grade + v.grade, out)


def contract(labels, w):
    """Iterated left interior product.

    The labels apply from the end of the list inwards, so contract([j, i], w)
    strips e_i first and then e_j: the coefficient of the surviving monomial
    e_{k_1} ^ ... is the sign-adjusted coefficient of e_i ^ e_j ^ e_{k_1} ^ ...
    in w.
    """
    labels = [int(l) for l in labels]
    if len(set(labels)) != len(labels):
        raise InputError("repeated contraction labels")
    if any(not 1 <= l <= w.dim for l in labels):
        raise InputError("contraction label out of range 1..%d" % w.dim)
    if len(labels) > w.grade:
        raise InputError("more contraction labels than the grade")
    field = w.field
    terms = w.terms
    grade = w.grade
    for l in reversed(labels):
        nxt = {}
        for idx, coeff in terms.items():
            try:
                t = idx.index(l)
            except ValueError:
                continue
            rest = idx[:t] + idx[t + 1:]
            nxt[rest] = coeff if t % 2 == 0 else field.neg(coeff)
        terms = nxt
        grade -= 1
    return Multivector(field, w.dim, grade, terms)


def span_rank(multivectors):
    """Dimension of the span, by exact elimination on the coefficient matrix."""
    vs = list(multivectors)
    if not vs:
        return 0
    first = vs[0]
    for v in vs[1:]:
        first._check_compatible(v)
    cols = sorted(set().union(*(v.terms.keys() for v in vs)))
    if not cols:
        return 0
    zero = first.field.zero
    rows = [[v.terms.get(c, zero) for c in cols] for v in vs]
    return rank(first.field, rows)
