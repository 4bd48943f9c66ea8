"""Minuscule representation attached to the marked node, with signed
raising/lowering operators.

The weight set is the single W-orbit of the marked fundamental weight.
raise_i sends the basis vector of weight lambda to +-(basis vector of
lambda + alpha_i) when that is again a weight; the sign is the bilinear
asymmetry cocycle eps(alpha_i, omega - lambda).  lower_i is the transpose
of raise_i, which forces [raise_i, lower_i] to act diagonally with
eigenvalue <lambda, alpha_i^> in {-1, 0, 1} and makes the contravariant
form the identity in this basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from gmpy2 import mpq

from .rootsys import RootSystem, Weight, build_root_system, predecessor, weyl_orbit

# operator tables: node -> {source index: (target index, sign)}
OpTable = dict


@dataclass(frozen=True)
class MinusculeRep:
    rs: RootSystem
    weights: tuple[Weight, ...]
    index: dict = field(repr=False)
    raising: OpTable = field(repr=False)
    lowering: OpTable = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.weights)

    def apply(self, table_entry: dict, vec: dict) -> dict:
        """apply one operator table to a sparse vector {index: coeff}"""
        out: dict[int, mpq] = {}
        for i, c in vec.items():
            hit = table_entry.get(i)
            if hit is None:
                continue
            j, s = hit
            tot = out.get(j, 0) + c * s
            if tot:
                out[j] = tot
            else:
                out.pop(j, None)
        return out


@dataclass(frozen=True)
class Grading:
    """partition of the weight indices by the marked-root coefficient of
    omega - lambda; levels[n] lists indices of the level-n block"""

    levels: tuple[tuple[int, ...], ...]
    level_of: tuple[int, ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(l) for l in self.levels)


def _asymmetry_row(rs: RootSystem, node: int) -> tuple[int, ...]:
    """eps(alpha_node, alpha_j) for all j, as 0/1 parity bits"""
    return tuple(
        1 if (node < j and rs.cartan[node - 1][j - 1] == -1) else 0
        for j in range(1, rs.rank + 1)
    )


@lru_cache(maxsize=None)
def build_minuscule_rep(system: str) -> MinusculeRep:
    rs = build_root_system(system)
    omega = rs.highest_weight()
    weights = weyl_orbit(rs, omega)
    index = {w: i for i, w in enumerate(weights)}
    wset = set(weights)

    # root coordinates of omega - lambda (always a nonnegative integer vector)
    def drop_coords(lam: Weight) -> tuple[int, ...]:
        diff = tuple(o - l for o, l in zip(omega, lam))
        coords = rs.root_coords(diff)
        out = []
        for c in coords:
            if c.denominator != 1 or c < 0:
                raise AssertionError("omega - lambda is not a nonnegative root combination")
            out.append(int(c))
        return tuple(out)

    drops = {w: drop_coords(w) for w in weights}

    raising: OpTable = {}
    lowering: OpTable = {i: {} for i in range(1, rs.rank + 1)}
    for node in range(1, rs.rank + 1):
        parity_row = _asymmetry_row(rs, node)
        alpha = rs.simple_root(node)
        table = {}
        for lam in weights:
            up = tuple(l + a for l, a in zip(lam, alpha))
            if up not in wset:
                continue
            par = sum(p * n for p, n in zip(parity_row, drops[lam])) & 1
            table[index[lam]] = (index[up], -1 if par else 1)
        raising[node] = table
        for src, (dst, sign) in table.items():
            lowering[node][dst] = (src, sign)

    rep = MinusculeRep(rs=rs, weights=weights, index=index, raising=raising, lowering=lowering)
    expected = {"a4": 10, "d5": 16, "e6": 27, "e7": 56}[system]
    if rep.dim != expected:
        raise AssertionError(f"{system}: dim {rep.dim}, expected {expected}")
    return rep


@lru_cache(maxsize=None)
def build_grading(system: str) -> Grading:
    rep = build_minuscule_rep(system)
    rs = rep.rs
    omega = rs.highest_weight()
    mark = rs.marked - 1
    level_of = []
    for lam in rep.weights:
        diff = tuple(o - l for o, l in zip(omega, lam))
        c = rs.root_coords(diff)[mark]
        if c.denominator != 1 or not (0 <= c <= 3):
            raise AssertionError("marked-root level out of range")
        level_of.append(int(c))
    levels = tuple(
        tuple(i for i, n in enumerate(level_of) if n == lev) for lev in range(4)
    )
    if len(levels[0]) != 1:
        raise AssertionError("level-0 block must be the highest weight alone")
    return Grading(levels=levels, level_of=tuple(level_of))


def graded_scale(grading: Grading, t, point):
    """scale the level-n coordinate block by t**(1-n); t must be invertible"""
    t = mpq(t)
    if not t:
        raise ValueError("graded scaling needs an invertible scalar")
    factors = (t, mpq(1), 1 / t, 1 / t ** 2)
    return tuple(mpq(x) * factors[n] for x, n in zip(point, grading.level_of))


def unmarked_weight(rep: MinusculeRep, sigma: dict, lam: Weight) -> Weight:
    """weight of lambda under the predecessor subalgebra, in the
    predecessor's fundamental coordinates via the node relabeling"""
    return tuple(lam[sigma[m] - 1] for m in sorted(sigma))


@lru_cache(maxsize=None)
def level1_embedding(system: str):
    """signed equivariant embedding of the predecessor module onto the
    level-1 block: returns (pred system id, sigma, beta, signs) where
    beta maps predecessor weight index -> parent weight index and signs
    carries the +-1 gauge making all unmarked operators commute.
    """
    rep = build_minuscule_rep(system)
    grading = build_grading(system)
    pred_entry = predecessor(rep.rs)
    if pred_entry is None:
        raise ValueError("a4 has no predecessor")
    pred_rs, sigma = pred_entry
    pred = build_minuscule_rep(pred_rs.system)

    level1 = grading.levels[1]
    by_gweight = {}
    for i in level1:
        gw = unmarked_weight(rep, sigma, rep.weights[i])
        if gw in by_gweight:
            raise AssertionError("level-1 weights do not restrict injectively")
        by_gweight[gw] = i
    if set(by_gweight) != set(pred.weights):
        raise AssertionError("level-1 block does not match the predecessor weight set")

    beta = {pred.index[gw]: i for gw, i in by_gweight.items()}

    signs: dict[int, int] = {pred.index[pred.rs.highest_weight()]: 1}
    frontier = [pred.index[pred.rs.highest_weight()]]
    seen = set(frontier)
    while frontier:
        src = frontier.pop()
        for m in range(1, pred.rs.rank + 1):
            hit = pred.lowering[m].get(src)
            if hit is None:
                continue
            dst, a = hit
            par_hit = rep.lowering[sigma[m]].get(beta[src])
            if par_hit is None or par_hit[0] != beta[dst]:
                raise AssertionError("no equivariant bijection: lowering edges disagree")
            b = par_hit[1]
            d = signs[src] * a * b
            if dst in seen:
                if signs[dst] != d:
                    raise AssertionError("sign transport inconsistent across paths")
            else:
                signs[dst] = d
                seen.add(dst)
                frontier.append(dst)
    if len(signs) != pred.dim:
        raise AssertionError("lowering graph of the predecessor is not connected")

    # full equivariance replay, raising and lowering, every unmarked node
    for m in range(1, pred.rs.rank + 1):
        for table, par_table in (
            (pred.raising[m], rep.raising[sigma[m]]),
            (pred.lowering[m], rep.lowering[sigma[m]]),
        ):
            for i in range(pred.dim):
                hit = table.get(i)
                par_hit = par_table.get(beta[i])
                if hit is None:
                    if par_hit is not None and par_hit[0] in set(beta.values()):
                        raise AssertionError("operator acts on the image but not the source")
                    continue
                j, a = hit
                if par_hit is None or par_hit[0] != beta[j]:
                    raise AssertionError("no equivariant bijection: edges disagree")
                if signs[i] * a != par_hit[1] * signs[j]:
                    raise AssertionError("embedding signs fail equivariance")
    return pred.rs.system, sigma, beta, signs


def restrict_to_predecessor(rep: MinusculeRep) -> dict:
    """weight-level bijection: level-1 weight -> predecessor weight"""
    pred_id, sigma, beta, _ = level1_embedding(rep.rs.system)
    pred = build_minuscule_rep(pred_id)
    return {rep.weights[par]: pred.weights[pr] for pr, par in beta.items()}


def embed_level1_point(system: str, point) -> dict:
    """carry a predecessor-coordinate point into the parent level-1 block;
    returns {parent weight index: value} supported on the level-1 indices"""
    _, _, beta, signs = level1_embedding(system)
    return {par: mpq(point[pr]) * signs[pr] for pr, par in beta.items()}
