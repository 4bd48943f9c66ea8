"""Picard lattice of split del Pezzo surfaces as an independent combinatorial
oracle: exceptional and conic classes by bounded integer search, the labeled
incidence graph, its automorphism group order, and the dictionary matching
weights of the minuscule representation with exceptional curves.

A divisor class is an integer vector (a; b_1, ..., b_r) in the basis
(hyperplane class; blow-up classes) with intersection form
a a' - sum b_i b_i' and canonical class K = (-3; -1, ..., -1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt

from gmpy2 import mpq

from .minrep import MinusculeRep

DivClass = tuple  # (a, b_1, ..., b_r)


def canonical_class(r: int) -> DivClass:
    return (-3,) + (-1,) * r


def intersect(c: DivClass, d: DivClass) -> int:
    return c[0] * d[0] - sum(a * b for a, b in zip(c[1:], d[1:]))


def _b_vectors(n: int, total: int, total_sq: int):
    """integer vectors of length n with given sum and sum of squares"""
    if n == 0:
        if total == 0 and total_sq == 0:
            yield ()
        return
    if total * total > n * total_sq:
        return
    top = isqrt(total_sq)
    for b in range(-top, top + 1):
        for rest in _b_vectors(n - 1, total - b, total_sq - b * b):
            yield (b,) + rest


def _bounded_classes(r: int, self_int: int, k_int: int, cap: int) -> list[DivClass]:
    """all (a; b) with a in 0..cap, C.C = self_int and C.K = k_int"""
    out = []
    for a in range(cap + 1):
        total_sq = a * a - self_int
        total = 3 * a + k_int  # C.K = -3a + sum(b) = k_int
        if total_sq < 0:
            continue
        for b in _b_vectors(r, total, total_sq):
            out.append((a,) + b)
    out.sort()
    return out


def _classes(r: int, self_int: int, k_int: int) -> tuple:
    found = _bounded_classes(r, self_int, k_int, 6)
    # certify the cap: one step further must find nothing new
    if len(_bounded_classes(r, self_int, k_int, 7)) != len(found):
        raise AssertionError("bounded class search cap 6 is insufficient")
    return tuple(found)


@lru_cache(maxsize=None)
def exceptional_classes(r: int) -> tuple:
    if not 4 <= r <= 7:
        raise ValueError("r must be in 4..7")
    return _classes(r, -1, -1)


@lru_cache(maxsize=None)
def conic_classes(r: int) -> tuple:
    if not 4 <= r <= 7:
        raise ValueError("r must be in 4..7")
    return _classes(r, 0, -2)


@dataclass(frozen=True)
class IncidenceGraph:
    r: int
    classes: tuple = field(repr=False)
    labels: tuple = field(repr=False)  # symmetric matrix of pairwise intersections


@lru_cache(maxsize=None)
def incidence_graph(r: int) -> IncidenceGraph:
    cls = exceptional_classes(r)
    labels = tuple(tuple(intersect(c, d) for d in cls) for c in cls)
    allowed = {0, 1, 2} if r == 7 else {0, 1}
    for i, row in enumerate(labels):
        for j, v in enumerate(row):
            if (v != -1 if i == j else v not in allowed):
                raise AssertionError(f"unexpected intersection value {v}")
    return IncidenceGraph(r=r, classes=cls, labels=labels)


def graph_automorphism_order(g: IncidenceGraph) -> int:
    """order of the labeled-graph automorphism group.

    Stabilizer-chain counting: the order is the product over v = 0, 1, ...
    of the number of valid images of v under automorphisms fixing 0..v-1
    pointwise (each candidate image is certified by exhibiting one full
    automorphism, so the product is exact).
    """
    lab = g.labels
    m = len(lab)
    profile = [tuple(sorted(row)) for row in lab]

    def extends(assign: list) -> bool:
        depth = len(assign)
        if depth == m:
            return True
        row = lab[depth]
        for w in range(m):
            if w in assign or profile[w] != profile[depth]:
                continue
            wrow = lab[w]
            if all(row[j] == wrow[assign[j]] for j in range(depth)):
                assign.append(w)
                if extends(assign):
                    assign.pop()
                    return True
                assign.pop()
        return False

    order = 1
    prefix: list[int] = []
    for v in range(m):
        row = lab[v]
        count = 0
        for w in range(m):
            if w in prefix or profile[w] != profile[v]:
                continue
            wrow = lab[w]
            if not all(row[j] == wrow[prefix[j]] for j in range(v)):
                continue
            prefix.append(w)
            if extends(prefix):
                count += 1
            prefix.pop()
        order *= count
        prefix.append(v)  # the identity always extends the identity prefix
    return order


def _affine_label_map(rep: MinusculeRep, g: IncidenceGraph) -> dict:
    """affine map sending weight inner products to intersection numbers,
    fixed by matching the sorted value sets (decreasing against increasing)"""
    rs = rep.rs
    n = rep.dim
    ips = [[rs.inner(rep.weights[i], rep.weights[j]) for j in range(n)] for i in range(n)]
    wvals = sorted({v for row in ips for v in row}, reverse=True)
    cvals = sorted({v for row in g.labels for v in row})
    if len(wvals) != len(cvals) or len(wvals) < 2:
        raise AssertionError("incompatible label value sets")
    v0, v1 = wvals[0], wvals[1]
    u0, u1 = cvals[0], cvals[1]
    alpha = mpq(u1 - u0) / (v1 - v0)
    beta = mpq(u0) - alpha * v0
    table = {}
    for v, u in zip(wvals, cvals):
        if alpha * v + beta != u:
            raise AssertionError("label value sets are not affinely matched")
        table[v] = u
    return {"alpha": alpha, "beta": beta, "ips": ips, "table": table}


@lru_cache(maxsize=None)
def weight_curve_bijection(system: str):
    """tuple b with b[i] = index into exceptional_classes(r) for weight i,
    such that intersections equal the affine image of weight inner products"""
    from .minrep import build_minuscule_rep

    rep = build_minuscule_rep(system)
    r = rep.rs.rank
    g = incidence_graph(r)
    n = rep.dim
    if len(g.classes) != n:
        raise AssertionError("class count does not match the weight count")
    data = _affine_label_map(rep, g)
    table, ips = data["table"], data["ips"]
    want = [[table[v] for v in row] for row in ips]

    wprof = [tuple(sorted(row)) for row in want]
    cprof = [tuple(sorted(row)) for row in g.labels]

    assign: list[int] = []
    used = [False] * n

    def search() -> bool:
        i = len(assign)
        if i == n:
            return True
        row = want[i]
        for c in range(n):
            if used[c] or cprof[c] != wprof[i]:
                continue
            crow = g.labels[c]
            if all(row[j] == crow[assign[j]] for j in range(i)):
                assign.append(c)
                used[c] = True
                if search():
                    return True
                assign.pop()
                used[c] = False
        return False

    if not search():
        raise AssertionError("no label-preserving bijection exists")
    return tuple(assign)


def conic_class_of_mu(system: str, mu) -> DivClass:
    """the conic class attached to a weight mu of the orbit of omega_1:
    the sum of the exceptional classes of any two weights adding up to mu
    (the result does not depend on the pair, which is asserted)"""
    from .minrep import build_minuscule_rep

    rep = build_minuscule_rep(system)
    r = rep.rs.rank
    bij = weight_curve_bijection(system)
    cls = exceptional_classes(r)
    mu = tuple(mu)
    results = set()
    for i in range(rep.dim):
        for j in range(i + 1, rep.dim):
            if tuple(a + b for a, b in zip(rep.weights[i], rep.weights[j])) == mu:
                ci, cj = cls[bij[i]], cls[bij[j]]
                results.add(tuple(a + b for a, b in zip(ci, cj)))
    if len(results) != 1:
        raise AssertionError(f"weight {mu}: {len(results)} distinct pair sums, expected 1")
    (d,) = results
    if intersect(d, d) != 0 or intersect(d, canonical_class(r)) != -2:
        raise AssertionError("pair sum is not a conic class")
    return d


@lru_cache(maxsize=None)
def conic_dictionary(system: str) -> dict:
    """bijection {mu in the orbit of omega_1: conic class}"""
    from .gpideal import cone_ideal

    ideal = cone_ideal(system)
    r = ideal.rep.rs.rank
    out = {mu: conic_class_of_mu(system, mu) for mu in ideal.generator_weights}
    if len(set(out.values())) != len(out):
        raise AssertionError("conic dictionary is not injective")
    if set(out.values()) != set(conic_classes(r)):
        raise AssertionError("conic dictionary is not onto")
    return out
