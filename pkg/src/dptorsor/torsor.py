"""Universal torsors of split del Pezzo surfaces of degrees 5..2, presented
as intersections of dilatations of the affine cone over the marked flag
variety.

The degree-5 torsor is the punctured cone over the Grassmannian of planes
in five-space in its Pluecker embedding.  Each subsequent degree is built
from the previous one by the exponential-section transport: given base
points x0, y0 of the previous torsor, the point t = exp(iota(x0^-1 y0^2))
and the dilatation points z_i = t^-1 exp(iota(x0^-1 y0 w_i)) with w_i in
the admissible open set of the previous cone present the new torsor as
the locus where every P_mu(z_i u) vanishes.  All arithmetic is exact.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from gmpy2 import mpq

from .gpideal import cone_ideal, exp_point, invariant_cubic, ver_mu
from .minrep import embed_level1_point, level1_embedding
from .polyalg import Poly, RatMatrix, q, q_str, vec_primitive
from .rootsys import build_root_system, degree_of

SYSTEM_BY_DIM = {10: "a4", 16: "d5", 27: "e6", 56: "e7"}
_SUCCESSOR = {"a4": "d5", "d5": "e6", "e6": "e7"}
_MAX_SAMPLES = {"a4": 16, "d5": 16, "e6": 16, "e7": 10}
_RETRY_BUDGET = 64
_NONZERO_DIGITS = [v for v in range(-9, 10) if v]


# ---------------------------------------------------------------- torus ops

def torus_identity(dim: int) -> tuple:
    return (mpq(1),) * dim


def torus_mul(a: Sequence, b: Sequence) -> tuple:
    if len(a) != len(b):
        raise ValueError("length mismatch")
    return tuple(mpq(x) * mpq(y) for x, y in zip(a, b))


def torus_inv(a: Sequence) -> tuple:
    if any(not x for x in a):
        raise ValueError("cannot invert a point with a zero coordinate")
    return tuple(1 / mpq(x) for x in a)


# ------------------------------------------------- Pluecker dictionary (A4)

def _subset_weight(rs, s: frozenset) -> tuple:
    return tuple((n in s) - (n + 1 in s) for n in range(1, rs.rank + 1))


@lru_cache(maxsize=None)
def plucker_dictionary():
    """match the rank-4 weight basis with Grassmannian Pluecker coordinates.

    Returns (pair_subsets, signs, relations): pair_subsets[i] is the 2-subset
    of {1..5} indexing the Pluecker coordinate carried by weight i, signs[i]
    is the +-1 rescaling x_i = signs[i] * p_{pair_subsets[i]}, and relations
    maps each generator weight to its 4-subset.  The signs are solved over
    GF(2) so that every generator becomes exactly a classical three-term
    Pluecker relation under the substitution.
    """
    ideal = cone_ideal("a4")
    rep = ideal.rep
    rs = rep.rs
    weight_of = {rep.weights[i]: i for i in range(rep.dim)}
    triple_of = {}
    for s in combinations(range(1, 6), 3):
        lam = _subset_weight(rs, frozenset(s))
        triple_of[weight_of[lam]] = frozenset(s)
    if len(triple_of) != 10:
        raise AssertionError("weight/3-subset matching is not a bijection")
    pair_subsets = [frozenset(range(1, 6)) - triple_of[i] for i in range(rep.dim)]

    def classical_sign(four: tuple, pa: frozenset, pb: frozenset) -> int:
        i, j, k, l = four
        first, second = (pa, pb) if i in pa else (pb, pa)
        if first == {i, j} and second == {k, l}:
            return 1
        if first == {i, k} and second == {j, l}:
            return -1
        if first == {i, l} and second == {j, k}:
            return 1
        raise AssertionError("monomial does not split the 4-subset")

    gens = [ideal.generators[mu] for mu in ideal.generator_weights]
    relations = {}
    rows = []  # GF(2): unknowns d_0..d_9, sigma_0..sigma_4
    for g, gen in enumerate(gens):
        fours = {tuple(sorted(pair_subsets[a] | pair_subsets[b])) for a, b in gen.monomials}
        if len(fours) != 1:
            raise AssertionError("generator monomials do not share one 4-subset")
        (four,) = fours
        if len(four) != 4:
            raise AssertionError("paired 2-subsets are not disjoint")
        relations[gen.mu] = four
        for (a, b), c in gen.poly.terms.items():
            if abs(c) != 1:
                raise AssertionError("rank-4 generator coefficients must be +-1")
            cls = classical_sign(four, pair_subsets[a], pair_subsets[b])
            rhs = 1 if c * cls < 0 else 0
            mask = (1 << a) | (1 << b) | (1 << (10 + g))
            rows.append((mask, rhs))

    # GF(2) elimination over 15 unknowns
    pivots = {}
    for mask, rhs in rows:
        for p, (pm, pr) in pivots.items():
            if mask >> p & 1:
                mask ^= pm
                rhs ^= pr
        if mask:
            p = mask.bit_length() - 1
            pivots[p] = (mask, rhs)
        elif rhs:
            raise AssertionError("Pluecker sign system is inconsistent")
    solution = [0] * 15
    for p in sorted(pivots):  # each pivot row only involves lower bits
        pm, pr = pivots[p]
        val = pr
        for jbit in range(p):
            if pm >> jbit & 1:
                val ^= solution[jbit]
        solution[p] = val
    signs = tuple(-1 if solution[i] else 1 for i in range(10))
    rel_signs = tuple(-1 if solution[10 + g] else 1 for g in range(5))

    # replay: every generator must now be exactly +-(classical relation)
    for g, gen in enumerate(gens):
        four = relations[gen.mu]
        for (a, b), c in gen.poly.terms.items():
            cls = classical_sign(four, pair_subsets[a], pair_subsets[b])
            if c * signs[a] * signs[b] != rel_signs[g] * cls:
                raise AssertionError("Pluecker sign replay failed")
    return tuple(pair_subsets), signs, relations


def plucker_point(matrix: Sequence[Sequence]) -> tuple:
    """weight-basis coordinates of the row space of a 2x5 matrix"""
    if len(matrix) != 2 or any(len(row) != 5 for row in matrix):
        raise ValueError("need a 2x5 matrix")
    pair_subsets, signs, _ = plucker_dictionary()
    top, bot = ([mpq(v) for v in row] for row in matrix)
    out = []
    for i in range(10):
        a, b = sorted(pair_subsets[i])
        minor = top[a - 1] * bot[b - 1] - top[b - 1] * bot[a - 1]
        out.append(signs[i] * minor)
    return tuple(out)


# ------------------------------------------------------------- presentation

@dataclass(frozen=True)
class TorsorStep:
    system: str
    degree: int
    x0: tuple | None = field(repr=False)
    y0: tuple | None = field(repr=False)
    t: tuple | None = field(repr=False)
    dilatations: tuple = field(repr=False)      # z_0 = identity first
    equations: tuple = field(repr=False)        # (mu, dilatation index, Poly)
    zero_equations: tuple = field(repr=False)   # dilatations of zero-weight gens
    samples: tuple = field(repr=False)
    general_position: bool
    jacobian_ranks: tuple
    expected_jacobian_rank: int


@dataclass(frozen=True)
class TorsorPresentation:
    seed: int
    steps: tuple
    schema_version: int = 1

    @property
    def system(self) -> str:
        return self.steps[-1].system

    @property
    def degree(self) -> int:
        return self.steps[-1].degree

    def to_json(self) -> str:
        def vec(v):
            return None if v is None else [q_str(mpq(c)) for c in v]

        steps = []
        for s in self.steps:
            steps.append({
                "system": s.system,
                "degree": s.degree,
                "x0": vec(s.x0),
                "y0": vec(s.y0),
                "t": vec(s.t),
                "dilatations": [vec(z) for z in s.dilatations],
                "equations": [
                    {"weight": list(mu), "dilatation": i, "poly": p.to_json()}
                    for mu, i, p in s.equations
                ],
                "zero_equations": [
                    {"dilatation": i, "poly": p.to_json()} for i, p in s.zero_equations
                ],
                "samples": [vec(v) for v in s.samples],
                "general_position": s.general_position,
                "jacobian_ranks": list(s.jacobian_ranks),
                "expected_jacobian_rank": s.expected_jacobian_rank,
            })
        doc = {"schema_version": self.schema_version, "seed": self.seed, "steps": steps}
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "TorsorPresentation":
        doc = json.loads(text)
        if doc.get("schema_version") != 1:
            raise ValueError("unsupported schema_version")

        def vec(v):
            return None if v is None else tuple(q(c) for c in v)

        steps = []
        for s in doc["steps"]:
            steps.append(TorsorStep(
                system=s["system"],
                degree=s["degree"],
                x0=vec(s["x0"]),
                y0=vec(s["y0"]),
                t=vec(s["t"]),
                dilatations=tuple(vec(z) for z in s["dilatations"]),
                equations=tuple(
                    (tuple(e["weight"]), e["dilatation"], Poly.from_json(e["poly"]))
                    for e in s["equations"]
                ),
                zero_equations=tuple(
                    (e["dilatation"], Poly.from_json(e["poly"])) for e in s["zero_equations"]
                ),
                samples=tuple(vec(v) for v in s["samples"]),
                general_position=s["general_position"],
                jacobian_ranks=tuple(s["jacobian_ranks"]),
                expected_jacobian_rank=s["expected_jacobian_rank"],
            ))
        return cls(seed=doc["seed"], steps=tuple(steps))


# ------------------------------------------------------------------- checks

def general_position_check(system: str, dilatations: Sequence) -> bool:
    """for every weight mu of the orbit, the Veronese-mu images of the
    dilatation points must be linearly independent"""
    ideal = cone_ideal(system)
    k = len(dilatations)
    for mu in ideal.generator_weights:
        rows = [dict(enumerate(ver_mu(ideal, mu, z))) for z in dilatations]
        m = RatMatrix(k, len(ideal.pair_table[mu]), rows)
        if m.rank() != k:
            return False
    return True


def jacobian_rank(equations, point: Sequence) -> int:
    """rank of the Jacobian of the equations at the point"""
    dim = len(point)
    rows = []
    for eq in equations:
        poly = eq[-1] if isinstance(eq, tuple) else eq
        row = {}
        for k in poly.variables():
            v = poly.diff(k).evaluate(point)
            if v:
                row[k] = v
        rows.append(row)
    return RatMatrix(len(rows), dim, rows).rank()


def _all_equations(step: TorsorStep) -> list:
    polys = [p for _, _, p in step.equations]
    polys.extend(p for _, p in step.zero_equations)
    return polys


def verify_sample(step: TorsorStep, point: Sequence) -> bool:
    """the point satisfies every equation and has no zero coordinate"""
    if any(not mpq(c) for c in point):
        return False
    ideal = cone_ideal(step.system)
    return all(ideal.vanishes_at(torus_mul(z, point)) for z in step.dilatations)


def pn_product_check(tp: TorsorPresentation, n: int | None = None,
                     trials: int = 20, rng_seed: int = 0) -> dict:
    """products of n+1 elements of t^-1 T^x must land on the cone, inside
    the locus with all coordinates nonzero"""
    step = tp.steps[-1]
    ideal = cone_ideal(step.system)
    r = ideal.rep.rs.rank
    if n is None:
        n = r - 4
    t = step.t if step.t is not None else step.samples[0]
    t_inv = torus_inv(t)
    rng = random.Random(rng_seed)
    failures = 0
    for _ in range(trials):
        point = t
        for _ in range(n + 1):
            s = step.samples[rng.randrange(len(step.samples))]
            point = torus_mul(point, torus_mul(t_inv, s))
        on_cone = ideal.vanishes_at(point) and all(mpq(c) for c in point)
        if not on_cone:
            failures += 1
    return {
        "system": step.system,
        "degree": step.degree,
        "factors": n + 1,
        "trials": trials,
        "failures": failures,
        "ok": failures == 0,
    }


# ------------------------------------------------------------- construction

@lru_cache(maxsize=None)
def _omega_cubic_on_predecessor() -> Poly:
    """the rank-7 cubic pulled back to predecessor coordinates"""
    _, _, beta, signs = level1_embedding("e7")
    table = {par: (pr, signs[pr]) for pr, par in beta.items()}
    return invariant_cubic("e7").rename_vars(table)


def omega_test(x0: Sequence, y0: Sequence, x: Sequence) -> bool:
    """whether x is admissible for the blow-up datum (x0, y0): every
    section quadric of the next system is nonzero at x0^-1 y0 x, and for
    the rank-7 step also the cubic.  The quadrics are evaluated through
    the predecessor generators, to which they restrict."""
    system = SYSTEM_BY_DIM.get(len(x0))
    if system is None or system not in _SUCCESSOR:
        raise ValueError("not a predecessor-system point")
    if len(y0) != len(x0) or len(x) != len(x0):
        raise ValueError("length mismatch")
    v = torus_mul(torus_mul(torus_inv(x0), y0), x)
    if any(not c for c in v):
        return False
    ideal = cone_ideal(system)
    if any(not g.evaluate(v) for g in (ideal.generators[mu].poly for mu in ideal.generator_weights)):
        return False
    if _SUCCESSOR[system] == "e7" and not _omega_cubic_on_predecessor().evaluate(v):
        return False
    return True


def _sample_vector(vec: Sequence) -> tuple:
    prim = vec_primitive(vec)
    if any(not c for c in prim):
        raise AssertionError("torsor point has a zero coordinate")
    return prim


def _certify(step_kwargs: dict) -> TorsorStep:
    """fill in the certificates of a step and assert them"""
    step = TorsorStep(**step_kwargs, general_position=False, jacobian_ranks=(),
                      expected_jacobian_rank=0)
    rs = build_root_system(step.system)
    gp = general_position_check(step.system, step.dilatations)
    if not gp:
        raise AssertionError("dilatation points are not in general position")
    expected = len(cone_ideal(step.system).rep.weights) - (rs.rank + 3)
    eqs = _all_equations(step)
    ranks = []
    for s in step.samples:
        if not verify_sample(step, s):
            raise AssertionError("sample fails the equations")
        rank = jacobian_rank(eqs, s)
        if rank != expected:
            raise AssertionError(f"Jacobian rank {rank} at a sample, expected {expected}")
        ranks.append(rank)
    return TorsorStep(**step_kwargs, general_position=True,
                      jacobian_ranks=tuple(ranks), expected_jacobian_rank=expected)


def seed_torsor_A4(rng_seed: int = 0) -> TorsorPresentation:
    """the degree-5 torsor: the punctured Pluecker cone with 16 samples"""
    ideal = cone_ideal("a4")
    rng = random.Random(rng_seed)
    samples = []
    seen = set()
    while len(samples) < 16:
        matrix = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(2)]
        point = plucker_point(matrix)
        if any(not c for c in point):
            continue
        prim = _sample_vector(point)
        if prim in seen:
            continue
        seen.add(prim)
        samples.append(prim)
    equations = tuple(
        (mu, 0, ideal.generators[mu].poly) for mu in ideal.generator_weights
    )
    step = _certify({
        "system": "a4",
        "degree": 5,
        "x0": None,
        "y0": None,
        "t": None,
        "dilatations": (torus_identity(ideal.rep.dim),),
        "equations": equations,
        "zero_equations": (),
        "samples": tuple(samples),
    })
    return TorsorPresentation(seed=rng_seed, steps=(step,))


def _choose_base_points(prev_step: TorsorStep):
    """pick x0 (and, for the first step, y0) among the previous samples;
    after the first step y0 is forced to be the previous t"""
    samples = prev_step.samples
    if prev_step.t is not None:
        y0 = prev_step.t
        for x0 in samples:
            if x0 != y0 and omega_test(x0, y0, y0):
                return x0, y0
        raise RuntimeError("no admissible base point x0 among the samples")
    for x0 in samples:
        for y0 in samples:
            if x0 != y0 and omega_test(x0, y0, y0):
                return x0, y0
    raise RuntimeError("no admissible base pair (x0, y0) among the samples")


def blow_up_step(prev: TorsorPresentation, rng_seed: int = 0) -> TorsorPresentation:
    prev_step = prev.steps[-1]
    system = prev_step.system
    if system not in _SUCCESSOR:
        raise ValueError(f"no further blow-up from {system}")
    parent = _SUCCESSOR[system]
    pred_ideal = cone_ideal(system)
    parent_ideal = cone_ideal(parent)
    parent_rank = parent_ideal.rep.rs.rank
    rng = random.Random(rng_seed)

    x0, y0 = _choose_base_points(prev_step)
    ratio = torus_mul(torus_inv(x0), y0)

    def transport(u: Sequence) -> tuple:
        return exp_point(parent_ideal, embed_level1_point(parent, torus_mul(ratio, u)))

    t = _sample_vector(transport(y0))
    t_inv = torus_inv(t)

    # dilatation points: z_0 = 1 and one transported admissible point per slot
    lev1 = pred_ideal.grading.levels[1]
    dilatations = [torus_identity(parent_ideal.rep.dim)]
    for _ in range(parent_rank - 4):
        for attempt in range(_RETRY_BUDGET):
            v = {i: rng.choice(_NONZERO_DIGITS) for i in lev1}
            w = exp_point(pred_ideal, v)
            if not omega_test(x0, y0, w):
                continue
            z = vec_primitive(torus_mul(t_inv, transport(w)))
            if any(not c for c in z):
                continue
            if general_position_check(parent, dilatations + [z]):
                dilatations.append(z)
                break
        else:
            raise RuntimeError("retry budget exhausted while drawing a dilatation point")

    equations = tuple(
        (mu, i, parent_ideal.generators[mu].poly.scale_vars(z).primitive())
        for mu in parent_ideal.generator_weights
        for i, z in enumerate(dilatations)
    )
    zero_equations = tuple(
        (i, p.scale_vars(z).primitive())
        for p in parent_ideal.zero_generators
        for i, z in enumerate(dilatations)
    )

    samples = [t]
    for u in prev_step.samples:
        if len(samples) >= _MAX_SAMPLES[parent]:
            break
        if u == y0 or not omega_test(x0, y0, u):
            continue
        samples.append(_sample_vector(transport(u)))
    if len(samples) < 5:
        raise RuntimeError("fewer than 5 samples survived the transport")

    step = _certify({
        "system": parent,
        "degree": degree_of(parent),
        "x0": x0,
        "y0": y0,
        "t": t,
        "dilatations": tuple(dilatations),
        "equations": equations,
        "zero_equations": zero_equations,
        "samples": tuple(samples),
    })
    return TorsorPresentation(seed=prev.seed, steps=prev.steps + (step,))


@lru_cache(maxsize=None)
def build_torsor(degree: int, seed: int = 0) -> TorsorPresentation:
    """build the chain of torsor presentations down to the given degree"""
    if degree not in (5, 4, 3, 2):
        raise ValueError("degree must be 5, 4, 3 or 2")
    chain_rng = random.Random(seed)
    step_seeds = [chain_rng.getrandbits(64) for _ in range(4)]
    if degree == 5:
        pres = seed_torsor_A4(step_seeds[0])
        return TorsorPresentation(seed=seed, steps=pres.steps)
    prev = build_torsor(degree + 1, seed)
    return blow_up_step(prev, step_seeds[5 - degree])
