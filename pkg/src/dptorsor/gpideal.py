"""Quadratic ideal of the affine cone over the marked flag variety, and the
exponential section through the big cell.

S^2(V) splits into the Cartan square plus one extra irreducible whose
highest weight is the first fundamental weight; the cone is exactly the
vanishing of the projection onto that summand.  The generators are found
by solving raise_i . v = 0 inside the weight-(omega_1) graded piece of
S^2(V) and sweeping the resulting highest-weight vector around the orbit
with the lowering derivations.  Because lower_i is the transpose of
raise_i in the weight basis, the contravariant form on S^2(V) is diagonal
on monomials and the two summands are orthogonal, so the swept coefficient
vectors can be read directly as quadric coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from gmpy2 import mpq

from .minrep import Grading, MinusculeRep, build_grading, build_minuscule_rep
from .polyalg import Poly, RatMatrix, mono_key, vec_primitive
from .rootsys import Weight, weyl_orbit

Monomial = tuple  # (i, j) weight-index pair, i <= j


@dataclass(frozen=True)
class QuadraticGenerator:
    mu: Weight           # the weight: every monomial's two weights sum to mu
    poly: Poly = field(repr=False)
    monomials: tuple[Monomial, ...] = field(repr=False)


@dataclass(frozen=True)
class ConeIdeal:
    system: str
    rep: MinusculeRep = field(repr=False)
    grading: Grading = field(repr=False)
    generator_weights: tuple[Weight, ...]  # canonical order over orbit(omega_1)
    generators: dict = field(repr=False)   # mu -> QuadraticGenerator
    zero_generators: tuple[Poly, ...] = field(repr=False)  # nonempty for e7 only
    pair_table: dict = field(repr=False)   # weight -> monomial tuple

    def all_polys(self) -> list[Poly]:
        out = [self.generators[mu].poly for mu in self.generator_weights]
        out.extend(self.zero_generators)
        return out

    def monomials_of_weight(self, mu: Weight) -> tuple[Monomial, ...]:
        return self.pair_table.get(tuple(mu), ())

    def vanishes_at(self, point: Sequence) -> bool:
        return all(not p.evaluate(point) for p in self.all_polys())


def _pair_table(rep: MinusculeRep) -> dict:
    table: dict[Weight, list[Monomial]] = {}
    for i, wi in enumerate(rep.weights):
        for j in range(i, rep.dim):
            s = tuple(a + b for a, b in zip(wi, rep.weights[j]))
            table.setdefault(s, []).append((i, j))
    return {s: tuple(sorted(ms, key=mono_key)) for s, ms in table.items()}


def _derive(rep: MinusculeRep, table: dict, vec: dict) -> dict:
    """derivation action of one operator table on a sparse S^2 vector"""
    out: dict[Monomial, mpq] = {}
    for (a, b), c in vec.items():
        for src, other in ((a, b), (b, a)):
            hit = table.get(src)
            if hit is None:
                continue
            dst, s = hit
            m = (dst, other) if dst <= other else (other, dst)
            tot = out.get(m, 0) + c * s
            if tot:
                out[m] = tot
            else:
                out.pop(m, None)
    return out


class _Echelon:
    """per-weight span tracker; add() returns the reduced vector when new"""

    def __init__(self):
        self.rows: dict[Monomial, dict] = {}

    def add(self, vec: dict):
        vec = dict(vec)
        for pm, row in self.rows.items():
            if pm in vec:
                f = vec[pm] / row[pm]
                for k, c in row.items():
                    s = vec.get(k, 0) - f * c
                    if s:
                        vec[k] = s
                    else:
                        vec.pop(k, None)
        if not vec:
            return None
        keys = sorted(vec, key=mono_key)
        prim = vec_primitive([vec[k] for k in keys])
        vec = {k: c for k, c in zip(keys, prim) if c}
        self.rows[min(vec, key=mono_key)] = vec
        return vec

    def dim(self) -> int:
        return len(self.rows)

    def vectors(self) -> list[dict]:
        return list(self.rows.values())


def _canonical_rref(vectors: list[dict]) -> list[dict]:
    """reduced row echelon with graded-lex monomial pivots, primitive rows"""
    rows: list[dict] = []
    pivs: list[Monomial] = []
    for vec in vectors:
        vec = dict(vec)
        for pm, row in zip(pivs, rows):
            if pm in vec:
                f = vec[pm] / row[pm]
                for k, c in row.items():
                    s = vec.get(k, 0) - f * c
                    if s:
                        vec[k] = s
                    else:
                        vec.pop(k, None)
        if vec:
            rows.append(vec)
            pivs.append(min(vec, key=mono_key))
    for a in range(len(rows) - 1, -1, -1):
        pa = pivs[a]
        for b in range(a):
            rb = rows[b]
            if pa in rb:
                f = rb[pa] / rows[a][pa]
                for k, c in rows[a].items():
                    s = rb.get(k, 0) - f * c
                    if s:
                        rb[k] = s
                    else:
                        rb.pop(k, None)
    out = []
    for vec in rows:
        keys = sorted(vec, key=mono_key)
        prim = vec_primitive([vec[k] for k in keys])
        out.append({k: c for k, c in zip(keys, prim) if c})
    out.sort(key=lambda v: mono_key(min(v, key=mono_key)))
    return out


@lru_cache(maxsize=None)
def cone_ideal(system: str) -> ConeIdeal:
    rep = build_minuscule_rep(system)
    rs = rep.rs
    r = rs.rank
    grading = build_grading(system)
    pairs = _pair_table(rep)

    omega1 = rs.first_fundamental_weight()
    orbit1 = weyl_orbit(rs, omega1)
    base = pairs.get(omega1, ())
    if len(base) != r - 1:
        raise AssertionError(f"weight piece at omega_1 has size {len(base)}, expected {r - 1}")

    # highest-weight kernel: raise_i annihilates the sought vector for all i
    col = {m: j for j, m in enumerate(base)}
    rows = []
    for node in range(1, r + 1):
        images: dict[Monomial, dict] = {}
        for m in base:
            img = _derive(rep, rep.raising[node], {m: mpq(1)})
            for mm, c in img.items():
                images.setdefault(mm, {})[col[m]] = c
        rows.extend(images.values())
    mat = RatMatrix(len(rows), len(base), rows)
    kernel = mat.kernel()
    if len(kernel) != 1:
        raise AssertionError(f"highest-weight kernel has dimension {len(kernel)}, expected 1")
    hw_vec = {m: c for m, c in zip(base, kernel[0]) if c}

    # sweep the generated submodule by lowering; track spans per weight
    orbit_set = set(orbit1)
    zero = tuple(0 for _ in range(r))
    spans: dict[Weight, _Echelon] = {omega1: _Echelon()}
    start = spans[omega1].add(hw_vec)
    frontier = [(omega1, start)]
    while frontier:
        wt, vec = frontier.pop()
        for node in range(1, r + 1):
            img = _derive(rep, rep.lowering[node], vec)
            if not img:
                continue
            alpha = rs.simple_root(node)
            wt2 = tuple(a - b for a, b in zip(wt, alpha))
            if wt2 not in orbit_set and wt2 != zero:
                raise AssertionError("lowering left the expected weight support")
            ech = spans.setdefault(wt2, _Echelon())
            reduced = ech.add(img)
            if reduced is not None:
                frontier.append((wt2, reduced))

    generators: dict[Weight, QuadraticGenerator] = {}
    for mu in orbit1:
        ech = spans.get(mu)
        if ech is None or ech.dim() != 1:
            raise AssertionError(f"weight {mu}: span dimension {0 if ech is None else ech.dim()}, expected 1")
        poly = Poly(ech.vectors()[0]).primitive()
        monos = pairs[mu]
        if set(poly.terms) != set(monos):
            raise AssertionError(f"weight {mu}: generator support is not the full monomial set")
        generators[mu] = QuadraticGenerator(mu=mu, poly=poly, monomials=monos)

    zero_generators: tuple[Poly, ...] = ()
    if zero in spans:
        block = _canonical_rref(spans[zero].vectors())
        zero_generators = tuple(Poly(v).primitive() for v in block)
    if system == "e7":
        if len(zero_generators) != 7:
            raise AssertionError(f"zero-weight block dimension {len(zero_generators)}, expected 7")
    elif zero_generators:
        raise AssertionError("unexpected zero-weight generators")

    return ConeIdeal(
        system=system,
        rep=rep,
        grading=grading,
        generator_weights=orbit1,
        generators=generators,
        zero_generators=zero_generators,
        pair_table=pairs,
    )


def ver_mu(ideal: ConeIdeal, mu: Weight, point: Sequence) -> tuple:
    """values of the weight-mu monomials at a point, canonical monomial order"""
    monos = ideal.monomials_of_weight(mu)
    if not monos:
        raise ValueError(f"no monomials of weight {mu}")
    return tuple(mpq(point[i]) * mpq(point[j]) for i, j in monos)


def _level_index(ideal: ConeIdeal) -> tuple[int, tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    lv = ideal.grading.levels
    return lv[0][0], lv[1], lv[2], lv[3]


@lru_cache(maxsize=None)
def quadratic_section(system: str) -> dict:
    """level-2 coordinate polynomials of the exponential section: for each
    level-2 index, the quadric in level-1 variables solved from the unique
    generator that bridges the highest-weight coordinate to that one"""
    ideal = cone_ideal(system)
    top, lev1, lev2, _ = _level_index(ideal)
    omega = ideal.rep.rs.highest_weight()
    lev1_set = set(lev1)
    out: dict[int, Poly] = {}
    for i2 in lev2:
        mu = tuple(a + b for a, b in zip(omega, ideal.rep.weights[i2]))
        gen = ideal.generators.get(mu)
        if gen is None:
            raise AssertionError("no generator contains the needed bridging monomial")
        bridge = (top, i2) if top <= i2 else (i2, top)
        c0 = gen.poly.terms.get(bridge)
        if not c0:
            raise AssertionError("bridging monomial missing from the generator")
        rest = {}
        for m, c in gen.poly.terms.items():
            if m == bridge:
                continue
            if m[0] not in lev1_set or m[1] not in lev1_set:
                raise AssertionError("bridging generator has a monomial outside level 1 x level 1")
            rest[m] = -c / c0
        out[i2] = Poly(rest)
    return out


@lru_cache(maxsize=None)
def _cubic_data(system: str):
    """(bridge coefficient, level-3 index, level1xlevel2 tail) of the chosen
    zero-weight generator; only the rank-7 system has one"""
    ideal = cone_ideal(system)
    if not ideal.zero_generators:
        return None
    top, lev1, lev2, lev3 = _level_index(ideal)
    (i3,) = lev3
    bridge = (top, i3) if top <= i3 else (i3, top)
    for gen in ideal.zero_generators:
        c0 = gen.terms.get(bridge)
        if c0:
            break
    else:
        raise AssertionError("no zero-weight generator bridges to the level-3 coordinate")
    lev1_set, lev2_set = set(lev1), set(lev2)
    tail = []
    for m, c in gen.terms.items():
        if m == bridge:
            continue
        a, b = m
        if a in lev2_set and b in lev1_set:
            a, b = b, a
        if a not in lev1_set or b not in lev2_set:
            raise AssertionError("zero-weight generator has an unexpected monomial")
        tail.append((a, b, -c / c0))
    return c0, i3, tuple(tail)


def exp_point(ideal: ConeIdeal, x) -> tuple:
    """the section point (1, x, p(x), q(x)) over a level-1 vector x.

    x may be a mapping {level-1 weight index: value} or a sequence aligned
    with the level-1 indices in canonical order.  The result is checked
    against every generator before it is returned.
    """
    top, lev1, lev2, lev3 = _level_index(ideal)
    coords = [mpq(0)] * ideal.rep.dim
    coords[top] = mpq(1)
    if isinstance(x, Mapping):
        lev1_set = set(lev1)
        for i, v in x.items():
            if i not in lev1_set:
                raise ValueError("input is not supported on the level-1 block")
            coords[i] = mpq(v)
    else:
        if len(x) != len(lev1):
            raise ValueError(f"level-1 vector must have length {len(lev1)}")
        for i, v in zip(lev1, x):
            coords[i] = mpq(v)
    quad = quadratic_section(ideal.system)
    for i2 in lev2:
        coords[i2] = quad[i2].evaluate(coords)
    if lev3:
        c0, i3, tail = _cubic_data(ideal.system)
        coords[i3] = sum((c * coords[a] * coords[b] for a, b, c in tail), mpq(0))
    point = tuple(coords)
    for p in ideal.all_polys():
        if p.evaluate(point):
            raise AssertionError("exponential section point violates a generator")
    return point


@lru_cache(maxsize=None)
def invariant_cubic(system: str) -> Poly:
    """the cubic form on the level-1 block cut out by the zero-weight part of
    the ideal; invariant under the unmarked subalgebra (rank-7 system only)"""
    data = _cubic_data(system)
    if data is None:
        raise ValueError(f"{system} has no level-3 block")
    _, _, tail = data
    quad = quadratic_section(system)
    total = Poly()
    for a, b, c in tail:
        total = total + (Poly.variable(a) * quad[b]).scale(c)
    return total
