"""Simply-laced root systems A4, D5, E6, E7 with a marked simple root.

Bourbaki numbering throughout: the E-chains run 1-3-4-5-6(-7) with node 2
hanging off node 4; D5 is the chain 1-2-3 with fork tips 4 and 5.  Weights
live in fundamental-weight coordinates as plain int tuples, so the i-th
coordinate of a weight is its pairing with the i-th simple coroot.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from gmpy2 import mpq

Weight = tuple  # int tuple, fundamental-weight coordinates

_EDGES = {
    "a4": [(1, 2), (2, 3), (3, 4)],
    "d5": [(1, 2), (2, 3), (3, 4), (3, 5)],
    "e6": [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
    "e7": [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
}

_RANK = {"a4": 4, "d5": 5, "e6": 6, "e7": 7}
_MARKED = {"a4": 3, "d5": 5, "e6": 6, "e7": 7}

# predecessor relabeling: predecessor node -> parent node
_PREDECESSOR = {
    "d5": ("a4", {1: 1, 2: 2, 3: 3, 4: 4}),
    "e6": ("d5", {1: 1, 2: 3, 3: 4, 4: 2, 5: 5}),
    "e7": ("e6", {1: 1, 2: 2, 3: 3, 4: 4, 5: 5, 6: 6}),
}

SYSTEMS = ("a4", "d5", "e6", "e7")


def degree_of(system: str) -> int:
    """del Pezzo degree 9 - rank"""
    return 9 - _RANK[system]


def system_of_degree(degree: int) -> str:
    for s in SYSTEMS:
        if degree_of(s) == degree:
            return s
    raise ValueError(f"no system for degree {degree}")


def _cartan(system: str) -> tuple[tuple[int, ...], ...]:
    r = _RANK[system]
    m = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for a, b in _EDGES[system]:
        m[a - 1][b - 1] = -1
        m[b - 1][a - 1] = -1
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True)
class RootSystem:
    system: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    marked: int  # 1-based Bourbaki index of the marked simple root
    positive_roots: tuple[Weight, ...] = field(repr=False)
    inverse_cartan: tuple[tuple[mpq, ...], ...] = field(repr=False)

    def pairing(self, weight: Weight, node: int) -> int:
        """<weight, coroot of node> = the fundamental coordinate"""
        return weight[node - 1]

    def simple_root(self, node: int) -> Weight:
        """alpha_node in fundamental coordinates (a Cartan matrix row)"""
        return self.cartan[node - 1]

    def reflect(self, weight: Weight, node: int) -> Weight:
        c = weight[node - 1]
        if c == 0:
            return weight
        row = self.cartan[node - 1]
        return tuple(weight[k] - c * row[k] for k in range(self.rank))

    def highest_weight(self) -> Weight:
        """fundamental weight of the marked node"""
        return tuple(1 if i == self.marked - 1 else 0 for i in range(self.rank))

    def first_fundamental_weight(self) -> Weight:
        return tuple(1 if i == 0 else 0 for i in range(self.rank))

    def root_coords(self, vec: Weight) -> tuple[mpq, ...]:
        """write a fundamental-coordinate vector in the simple-root basis"""
        return tuple(
            sum((self.inverse_cartan[i][j] * vec[j] for j in range(self.rank)), mpq(0))
            for i in range(self.rank)
        )

    def inner(self, a: Weight, b: Weight) -> mpq:
        """W-invariant form normalized so roots have square 2"""
        return sum(
            (self.inverse_cartan[i][j] * a[i] * b[j] for i in range(self.rank) for j in range(self.rank)),
            mpq(0),
        )

    def weyl_orbit(self, weight: Weight) -> tuple[Weight, ...]:
        return weyl_orbit(self, weight)


def _invert(cartan) -> tuple[tuple[mpq, ...], ...]:
    r = len(cartan)
    aug = [[mpq(cartan[i][j]) for j in range(r)] + [mpq(1 if j == i else 0) for j in range(r)] for i in range(r)]
    for col in range(r):
        piv = next(i for i in range(col, r) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        d = aug[col][col]
        aug[col] = [x / d for x in aug[col]]
        for i in range(r):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return tuple(tuple(row[r:]) for row in aug)


def _positive_roots(cartan) -> tuple[Weight, ...]:
    """closure of the simple roots: beta + alpha_i is a root iff <beta, a_i^> = -1"""
    r = len(cartan)
    simple = [tuple(cartan[i]) for i in range(r)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(r):
            if beta[i] == -1:
                new = tuple(beta[k] + cartan[i][k] for k in range(r))
                if new not in roots:
                    roots.add(new)
                    frontier.append(new)
    return tuple(sorted(roots))


@lru_cache(maxsize=None)
def build_root_system(system: str) -> RootSystem:
    if system not in SYSTEMS:
        raise ValueError(f"unknown system {system!r}, expected one of {SYSTEMS}")
    cartan = _cartan(system)
    rs = RootSystem(
        system=system,
        rank=_RANK[system],
        cartan=cartan,
        marked=_MARKED[system],
        positive_roots=_positive_roots(cartan),
        inverse_cartan=_invert(cartan),
    )
    expected = {"a4": 10, "d5": 20, "e6": 36, "e7": 63}[system]
    if len(rs.positive_roots) != expected:
        raise AssertionError(f"{system}: {len(rs.positive_roots)} positive roots, expected {expected}")
    return rs


def weyl_orbit(rs: RootSystem, weight: Weight) -> tuple[Weight, ...]:
    """full W-orbit, canonically ordered ascending lexicographically"""
    weight = tuple(weight)
    seen = {weight}
    frontier = [weight]
    while frontier:
        w = frontier.pop()
        for i in range(1, rs.rank + 1):
            im = rs.reflect(w, i)
            if im not in seen:
                seen.add(im)
                frontier.append(im)
    return tuple(sorted(seen))


def _orbit_size_of_first(cartan) -> int:
    r = len(cartan)
    start = tuple(1 if i == 0 else 0 for i in range(r))
    seen = {start}
    frontier = [start]
    while frontier:
        w = frontier.pop()
        for i in range(r):
            c = w[i]
            if c:
                im = tuple(w[k] - c * cartan[i][k] for k in range(r))
                if im not in seen:
                    seen.add(im)
                    frontier.append(im)
    return len(seen)


@lru_cache(maxsize=None)
def _order_rec(cartan) -> int:
    """|W| by iterated orbit-stabilizer: orbit of a fundamental weight times
    the order of its stabilizer, the Weyl group of the sub-diagram"""
    if not cartan:
        return 1
    sub = tuple(tuple(row[1:]) for row in cartan[1:])
    return _orbit_size_of_first(cartan) * _order_rec(sub)


def weyl_group_order(rs: RootSystem) -> int:
    return _order_rec(rs.cartan)


def predecessor(rs: RootSystem):
    """(predecessor RootSystem, node relabeling pred -> parent), or None for a4.

    The predecessor diagram is the parent diagram with the marked node deleted;
    the relabeling is the unique diagram isomorphism sending the predecessor's
    marked node to the parent node adjacent to the deleted one.
    """
    entry = _PREDECESSOR.get(rs.system)
    if entry is None:
        return None
    pred_id, sigma = entry
    pred = build_root_system(pred_id)
    for m in range(1, pred.rank + 1):
        for n in range(1, pred.rank + 1):
            if pred.cartan[m - 1][n - 1] != rs.cartan[sigma[m] - 1][sigma[n] - 1]:
                raise AssertionError(f"{rs.system}: predecessor relabeling is not a diagram map")
    if rs.cartan[sigma[pred.marked] - 1][rs.marked - 1] != -1:
        raise AssertionError(f"{rs.system}: predecessor marked node not adjacent to deleted node")
    return pred, sigma


def deleted_subsystem_positive_root_count(rs: RootSystem) -> int:
    """positive roots of the diagram with the marked node removed"""
    keep = [i for i in range(rs.rank) if i != rs.marked - 1]
    sub = tuple(tuple(rs.cartan[i][j] for j in keep) for i in keep)
    return len(_positive_roots(sub))
