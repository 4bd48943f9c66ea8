"""Exact sparse rational polynomials and linear algebra.

Everything here is over Q via gmpy2.mpq; no floating point anywhere.
Monomials are ascending tuples of variable indices (so degree = len),
ordered graded-lexicographically.  Matrices are lists of sparse rows
(dict column -> mpq).
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Sequence, Union

from gmpy2 import mpq

Q = mpq
QLike = Union[int, str, mpq]
Monomial = tuple  # ascending tuple of variable indices
SparseRow = dict  # column index -> mpq


def q(x: QLike) -> mpq:
    """coerce ints, 'p/q' strings, mpq to mpq"""
    return mpq(x)


def q_str(x: mpq) -> str:
    return str(mpq(x))


def mono_key(m: Monomial):
    """graded lex order key over the variable index order"""
    return (len(m), m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b))


class Poly:
    """sparse polynomial: dict monomial -> mpq, zero coefficients dropped"""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, QLike] | None = None):
        self.terms: dict[Monomial, mpq] = {}
        if terms:
            for m, c in terms.items():
                c = mpq(c)
                if c:
                    self.terms[tuple(m)] = c

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def constant(cls, c: QLike) -> "Poly":
        return cls({(): c})

    @classmethod
    def variable(cls, i: int) -> "Poly":
        return cls({(i,): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        p = Poly()
        p.terms = out
        return p

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(-1)

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[Monomial, mpq] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        p = Poly()
        p.terms = out
        return p

    def scale(self, c: QLike) -> "Poly":
        c = mpq(c)
        p = Poly()
        if c:
            p.terms = {m: cc * c for m, cc in self.terms.items()}
        return p

    def evaluate(self, point: Mapping[int, QLike] | Sequence[QLike]) -> mpq:
        """evaluate at a point; raises KeyError/IndexError on unbound variables"""
        total = mpq(0)
        for m, c in self.terms.items():
            v = c
            for i in m:
                v = v * mpq(point[i])
            total += v
        return total

    def diff(self, i: int) -> "Poly":
        out: dict[Monomial, mpq] = {}
        for m, c in self.terms.items():
            k = m.count(i)
            if not k:
                continue
            rest = list(m)
            rest.remove(i)
            rest = tuple(rest)
            s = out.get(rest, 0) + k * c
            if s:
                out[rest] = s
            else:
                out.pop(rest, None)
        p = Poly()
        p.terms = out
        return p

    def scale_vars(self, point: Mapping[int, QLike] | Sequence[QLike]) -> "Poly":
        """substitute x_i -> point[i] * x_i (dilatation of the variables)"""
        out: dict[Monomial, mpq] = {}
        for m, c in self.terms.items():
            v = c
            for i in m:
                v = v * mpq(point[i])
            if v:
                out[m] = v
        p = Poly()
        p.terms = out
        return p

    def rename_vars(self, table: Mapping[int, tuple[int, QLike]]) -> "Poly":
        """substitute x_i -> sign * x_j per table[i] = (j, sign)"""
        out: dict[Monomial, mpq] = {}
        for m, c in self.terms.items():
            v = c
            img = []
            for i in m:
                j, s = table[i]
                img.append(j)
                v = v * mpq(s)
            m2 = tuple(sorted(img))
            tot = out.get(m2, 0) + v
            if tot:
                out[m2] = tot
            else:
                out.pop(m2, None)
        p = Poly()
        p.terms = out
        return p

    def variables(self) -> set:
        return {i for m in self.terms for i in m}

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degs = {len(m) for m in self.terms}
        return len(degs) <= 1

    def leading_monomial(self) -> Monomial:
        return min(self.terms, key=mono_key)

    def primitive(self) -> "Poly":
        """integer coefficients, content 1, positive leading coefficient"""
        if not self.terms:
            return Poly()
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, int(c.denominator))
        nums = [int(c * den) for c in self.terms.values()]
        g = 0
        for n in nums:
            g = gcd(g, n)
        lead = self.terms[self.leading_monomial()]
        s = mpq(den, g) if lead > 0 else mpq(-den, g)
        return self.scale(s)

    def sorted_terms(self) -> list[tuple[Monomial, mpq]]:
        return sorted(self.terms.items(), key=lambda t: mono_key(t[0]))

    def to_json(self) -> list[dict]:
        return [{"monomial": list(m), "coeff": q_str(c)} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "Poly":
        return cls({tuple(t["monomial"]): mpq(t["coeff"]) for t in data})

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for m, c in self.sorted_terms()[:8]:
            mono = "*".join(f"x{i}" for i in m) or "1"
            bits.append(f"{c}*{mono}")
        tail = " + ..." if len(self.terms) > 8 else ""
        return "Poly(" + " + ".join(bits) + tail + ")"


def vec_primitive(v: Sequence[QLike]) -> tuple:
    """rescale a nonzero rational vector to primitive integers, first nonzero > 0"""
    v = [mpq(x) for x in v]
    den = 1
    for c in v:
        den = den * c.denominator // gcd(den, int(c.denominator))
    nums = [int(c * den) for c in v]
    g = 0
    for n in nums:
        g = gcd(g, n)
    if g == 0:
        return tuple(v)
    lead = next(n for n in nums if n)
    if lead < 0:
        g = -g
    return tuple(mpq(n, g) for n in nums)


def vec_content_free_row(row: SparseRow) -> SparseRow:
    """same normalization for a sparse row (content extraction after a pivot)"""
    if not row:
        return row
    items = sorted(row.items())
    prim = vec_primitive([c for _, c in items])
    return {j: c for (j, _), c in zip(items, prim) if c}


class RatMatrix:
    """sparse exact rational matrix with deterministic pivoted elimination"""

    def __init__(self, nrows: int, ncols: int, rows: list[SparseRow] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: list[SparseRow] = rows if rows is not None else [dict() for _ in range(nrows)]

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[QLike]]) -> "RatMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        out = cls(nrows, ncols)
        for i, r in enumerate(rows):
            out.rows[i] = {j: mpq(x) for j, x in enumerate(r) if mpq(x)}
        return out

    def set(self, i: int, j: int, x: QLike):
        x = mpq(x)
        if x:
            self.rows[i][j] = x
        else:
            self.rows[i].pop(j, None)

    def _echelon(self) -> tuple[list[SparseRow], list[int]]:
        """row echelon via online reduction; returns (pivot rows, pivot columns).

        Pivot choice inside a candidate row: maximal |numerator| with smallest
        column index as tiebreak; rows are content-extracted after each pivot.
        A new row is reduced against pivots in creation order; since each pivot
        row carries no support on earlier pivot columns, one pass suffices.
        """
        piv_rows: list[SparseRow] = []
        piv_cols: list[int] = []
        for raw in self.rows:
            row = dict(raw)
            for p, j in zip(piv_rows, piv_cols):
                if j in row:
                    f = row[j] / p[j]
                    for k, c in p.items():
                        s = row.get(k, 0) - f * c
                        if s:
                            row[k] = s
                        else:
                            row.pop(k, None)
            if row:
                row = vec_content_free_row(row)
                pj = max(row, key=lambda jj: (abs(row[jj].numerator), -jj))
                piv_rows.append(row)
                piv_cols.append(pj)
        return piv_rows, piv_cols

    def rank(self) -> int:
        rows, _ = self._echelon()
        return len(rows)

    def kernel(self) -> list[tuple]:
        """primitive integer basis of the right kernel, deterministic order"""
        rows, pivcols = self._echelon()
        piv_set = set(pivcols)
        free = [j for j in range(self.ncols) if j not in piv_set]
        # back substitution per free column
        basis = []
        # build reduced form: eliminate pivot columns among pivot rows
        reduced = [dict(r) for r in rows]
        for a in range(len(reduced) - 1, -1, -1):
            ra = reduced[a]
            ja = pivcols[a]
            for b in range(a):
                rb = reduced[b]
                if ja in rb:
                    f = rb[ja] / ra[ja]
                    for k, c in ra.items():
                        s = rb.get(k, 0) - f * c
                        if s:
                            rb[k] = s
                        else:
                            rb.pop(k, None)
        for jf in free:
            v = [mpq(0)] * self.ncols
            v[jf] = mpq(1)
            for r, jp in zip(reduced, pivcols):
                if jf in r:
                    v[jp] = -r[jf] / r[jp]
            basis.append(vec_primitive(v))
        return basis

    def mult_vec(self, v: Sequence[QLike]) -> list[mpq]:
        v = [mpq(x) for x in v]
        return [sum((c * v[j] for j, c in row.items()), mpq(0)) for row in self.rows]

    def rank_mod(self, p: int) -> int:
        """rank over GF(p); lower bound oracle for the exact rank"""
        rows = []
        for row in self.rows:
            r = {}
            for j, c in row.items():
                num = int(c.numerator) % p
                den = int(c.denominator) % p
                if den == 0:
                    raise ValueError("denominator divisible by modulus")
                x = num * pow(den, -1, p) % p
                if x:
                    r[j] = x
            rows.append(r)
        piv: list[tuple[int, dict]] = []
        for row in rows:
            for j, p_row in piv:
                if j in row:
                    f = row[j] * pow(p_row[j], -1, p) % p
                    for k, c in p_row.items():
                        x = (row.get(k, 0) - f * c) % p
                        if x:
                            row[k] = x
                        else:
                            row.pop(k, None)
            if row:
                piv.append((min(row), row))
        return len(piv)


def kernel_of_stacked(blocks: Iterable[RatMatrix], ncols: int) -> list[tuple]:
    rows = []
    for b in blocks:
        rows.extend(b.rows)
    m = RatMatrix(len(rows), ncols, rows)
    return m.kernel()
