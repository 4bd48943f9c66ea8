"""Machine-checkable verification suites.

Every check re-derives a property from scratch and reports a pass/fail
record with a self-contained statement, so a report is readable without
any external material.  All checks are exact; there are no tolerances.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import asdict, dataclass

from gmpy2 import mpq

from .gpideal import cone_ideal, exp_point, quadratic_section
from .minrep import build_grading, build_minuscule_rep, level1_embedding
from .picard import (conic_classes, conic_dictionary, exceptional_classes,
                     graph_automorphism_order, incidence_graph,
                     weight_curve_bijection)
from .rootsys import SYSTEMS, build_root_system, weyl_group_order, weyl_orbit
from .torsor import (TorsorPresentation, blow_up_step, build_torsor,
                     general_position_check, jacobian_rank, plucker_dictionary,
                     plucker_point, pn_product_check, seed_torsor_A4,
                     verify_sample)

_EXPECT = {
    "a4": {"rank": 4, "degree": 5, "roots": 10, "weyl": 120, "dim": 10,
           "generators": 5, "jacobian": 3, "equations": 5},
    "d5": {"rank": 5, "degree": 4, "roots": 20, "weyl": 1920, "dim": 16,
           "generators": 10, "jacobian": 8, "equations": 20},
    "e6": {"rank": 6, "degree": 3, "roots": 36, "weyl": 51840, "dim": 27,
           "generators": 27, "jacobian": 18, "equations": 81},
    "e7": {"rank": 7, "degree": 2, "roots": 63, "weyl": 2903040, "dim": 56,
           "generators": 126, "jacobian": 46, "equations": 504},
}

SUITES = ("combinatorics", "cone", "torsor", "products", "all")


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    statement: str
    passed: bool
    seconds: float
    detail: str = ""


def _run(check_id: str, statement: str, fn) -> CheckResult:
    start = time.monotonic()
    try:
        detail = fn() or ""
        passed = True
    except Exception as exc:  # noqa: BLE001 - report, do not crash the suite
        detail = f"{type(exc).__name__}: {exc}"
        passed = False
    return CheckResult(check_id, statement, passed, round(time.monotonic() - start, 3), detail)


# ----------------------------------------------------------- combinatorics

def _suite_combinatorics(cfg: dict) -> list[CheckResult]:
    out = []

    def roots():
        for s in SYSTEMS:
            rs = build_root_system(s)
            assert len(rs.positive_roots) == _EXPECT[s]["roots"], s
        return "10/20/36/63"

    out.append(_run("comb.roots", "positive root counts are 10/20/36/63", roots))

    def weyl():
        for s in SYSTEMS:
            assert weyl_group_order(build_root_system(s)) == _EXPECT[s]["weyl"], s
        return "120/1920/51840/2903040"

    out.append(_run("comb.weyl", "Weyl group orders are 120/1920/51840/2903040", weyl))

    def dims():
        for s in SYSTEMS:
            rep = build_minuscule_rep(s)
            assert rep.dim == _EXPECT[s]["dim"], s
            sizes = build_grading(s).sizes()
            assert sizes[0] == 1 and sum(sizes) == rep.dim, s
        return "10/16/27/56"

    out.append(_run("comb.dims", "minuscule dimensions are 10/16/27/56 with graded split", dims))

    def orbits():
        for s in SYSTEMS:
            rs = build_root_system(s)
            orbit = weyl_orbit(rs, rs.first_fundamental_weight())
            assert len(orbit) == _EXPECT[s]["generators"], s
        return "5/10/27/126"

    out.append(_run("comb.orbit", "orbit sizes of the first fundamental weight are 5/10/27/126", orbits))

    def exceptional():
        for s in SYSTEMS:
            r = _EXPECT[s]["rank"]
            assert len(exceptional_classes(r)) == _EXPECT[s]["dim"], s
        return "10/16/27/56"

    out.append(_run("comb.exceptional",
                    "lattice search finds 10/16/27/56 exceptional classes, matching dim V", exceptional))

    def conics():
        for s in SYSTEMS:
            r = _EXPECT[s]["rank"]
            assert len(conic_classes(r)) == _EXPECT[s]["generators"], s
        return "5/10/27/126"

    out.append(_run("comb.conics",
                    "lattice search finds 5/10/27/126 conic classes, matching the weight orbit", conics))

    def labels():
        for s in SYSTEMS:
            r = _EXPECT[s]["rank"]
            g = incidence_graph(r)
            vals = {v for i, row in enumerate(g.labels) for j, v in enumerate(row) if i != j}
            assert vals <= ({0, 1, 2} if r == 7 else {0, 1}), s
        return ""

    out.append(_run("comb.labels",
                    "incidence labels lie in {0,1} for ranks 4..6 and {0,1,2} for rank 7", labels))

    def aut():
        for s in SYSTEMS:
            r = _EXPECT[s]["rank"]
            order = graph_automorphism_order(incidence_graph(r))
            assert order == _EXPECT[s]["weyl"], (s, order)
        return "full search, orbit-stabilizer counting"

    out.append(_run("comb.aut",
                    "incidence-graph automorphism orders equal the Weyl orders by full search", aut))

    def bijection():
        for s in SYSTEMS:
            rep = build_minuscule_rep(s)
            rs = rep.rs
            g = incidence_graph(rs.rank)
            bij = weight_curve_bijection(s)
            index = {w: i for i, w in enumerate(rep.weights)}
            for node in range(1, rs.rank + 1):
                perm = {bij[i]: bij[index[rs.reflect(lam, node)]]
                        for i, lam in enumerate(rep.weights)}
                for a in range(rep.dim):
                    for b in range(rep.dim):
                        assert g.labels[a][b] == g.labels[perm[a]][perm[b]], (s, node)
        return "simple reflections act as graph automorphisms"

    out.append(_run("comb.bijection",
                    "a label-preserving weight/curve bijection exists and is reflection-equivariant",
                    bijection))

    def conic_map():
        for s in SYSTEMS:
            conic_dictionary(s)  # asserts bijectivity and class invariants
        return "bijections onto 5/10/27/126 conic classes"

    out.append(_run("comb.conicmap",
                    "the pair-sum map is a bijection from the weight orbit onto the conic classes",
                    conic_map))
    return out


# -------------------------------------------------------------------- cone

def _suite_cone(cfg: dict) -> list[CheckResult]:
    out = []

    def pieces():
        for s in SYSTEMS:
            ideal = cone_ideal(s)
            r = ideal.rep.rs.rank
            for mu in ideal.generator_weights:
                assert len(ideal.pair_table[mu]) == r - 1, (s, mu)
        return "every orbit weight carries exactly r-1 monomials"

    out.append(_run("cone.pieces",
                    "the degree-2 weight pieces over the orbit have dimension r-1", pieces))

    def generators():
        for s in SYSTEMS:
            ideal = cone_ideal(s)
            assert len(ideal.generator_weights) == _EXPECT[s]["generators"], s
            for mu in ideal.generator_weights:
                gen = ideal.generators[mu]
                assert set(gen.poly.terms) == set(gen.monomials), (s, mu)
            assert len(ideal.zero_generators) == (7 if s == "e7" else 0), s
        return "5/10/27/126 plus the rank-7 zero block of 7"

    out.append(_run("cone.generators",
                    "one full-support quadric per orbit weight; rank 7 adds a 7-dim zero-weight block",
                    generators))

    def plucker():
        plucker_dictionary()  # replays the sign identities
        ideal = cone_ideal("a4")
        rng = random.Random(cfg["seed"])
        trials = cfg["plucker_trials"]
        for _ in range(trials):
            matrix = [[mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(5)]
                      for _ in range(2)]
            point = plucker_point(matrix)
            assert ideal.vanishes_at(point)
        return f"sign replay plus {trials} random rational matrices"

    out.append(_run("cone.plucker",
                    "the rank-4 generators are the classical three-term relations and vanish "
                    "on random matrix minor vectors", plucker))

    def expsec():
        rng = random.Random(cfg["seed"])
        trials = cfg["exp_trials"]
        for s in SYSTEMS:
            ideal = cone_ideal(s)
            lev = ideal.grading.levels
            for _ in range(trials):
                x = [mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in lev[1]]
                pt = exp_point(ideal, x)
                assert ideal.vanishes_at(pt)
                c = mpq(rng.randint(1, 9), rng.randint(1, 9))
                scaled = exp_point(ideal, [c * v for v in x])
                for i in lev[2]:
                    assert scaled[i] == c * c * pt[i]
                for i in lev[3]:
                    assert scaled[i] == c ** 3 * pt[i]
        return f"{trials} random points per system, quadratic and cubic homogeneity exact"

    out.append(_run("cone.exp",
                    "the section (1, x, p(x), q(x)) annihilates every generator; p and q are "
                    "homogeneous of degrees 2 and 3", expsec))

    def restriction():
        for parent in ("d5", "e6", "e7"):
            pred_id, _, beta, signs = level1_embedding(parent)
            pred = cone_ideal(pred_id)
            inv = {beta[pr]: (pr, signs[pr]) for pr in range(len(beta))}
            hits = 0
            for p2 in quadratic_section(parent).values():
                comp = p2.rename_vars(inv).primitive()
                assert any(comp == g.poly or comp == g.poly.scale(-1)
                           for g in pred.generators.values())
                hits += 1
            assert hits == len(pred.generator_weights)
        return "all level-2 section quadrics restrict onto predecessor generators"

    out.append(_run("cone.restrict",
                    "the section quadrics pull back along the level-1 embedding to the "
                    "predecessor's cone generators", restriction))
    return out


# ------------------------------------------------------------------ torsor

def _suite_torsor(cfg: dict) -> list[CheckResult]:
    out = []
    seed = cfg["seed"]

    def chain():
        notes = []
        for degree in cfg["degrees"]:
            tp = build_torsor(degree, seed)
            step = tp.steps[-1]
            exp = _EXPECT[step.system]
            assert len(step.equations) == exp["equations"], degree
            assert len(step.samples) >= 5, degree
            assert step.general_position, degree
            assert set(step.jacobian_ranks) == {exp["jacobian"]}, degree
            for sample in step.samples:
                assert verify_sample(step, sample), degree
            rank = jacobian_rank([p for *_, p in step.equations] +
                                 [p for _, p in step.zero_equations], step.samples[0])
            assert rank == exp["jacobian"], (degree, rank)
            notes.append(f"deg {degree}: {len(step.equations)} eqs, "
                         f"{len(step.samples)} samples, rank {exp['jacobian']}")
        return "; ".join(notes)

    out.append(_run("torsor.chain",
                    "the build chain yields 5/20/81/504 equations with verified samples and "
                    "Jacobian ranks 3/8/18/46", chain))

    def position():
        for degree in cfg["degrees"]:
            step = build_torsor(degree, seed).steps[-1]
            assert general_position_check(step.system, step.dilatations), degree
            dup = step.dilatations + (step.dilatations[-1],)
            assert not general_position_check(step.system, dup), degree
        return "built points pass; a duplicated point fails"

    out.append(_run("torsor.position",
                    "dilatation points are in general position, and duplicating one breaks it",
                    position))

    def determinism():
        degree = cfg["degrees"][-1]
        tp = build_torsor(degree, seed)
        chain_rng = random.Random(seed)
        step_seeds = [chain_rng.getrandbits(64) for _ in range(4)]
        if degree == 5:
            again = seed_torsor_A4(step_seeds[0])
            again = TorsorPresentation(seed=seed, steps=again.steps)
        else:
            again = blow_up_step(build_torsor(degree + 1, seed), step_seeds[5 - degree])
        assert again.to_json() == tp.to_json()
        return f"independent rebuild of the degree-{degree} step is byte-identical"

    out.append(_run("torsor.determinism",
                    "rebuilding a step from the same seed reproduces the presentation exactly",
                    determinism))

    out.extend(_suite_products(cfg))
    return out


def _suite_products(cfg: dict) -> list[CheckResult]:
    out = []
    seed = cfg["seed"]
    trials = cfg["product_trials"]

    def products():
        notes = []
        for degree in cfg["degrees"]:
            tp = build_torsor(degree, seed)
            report = pn_product_check(tp, trials=trials, rng_seed=seed)
            assert report["ok"], report
            notes.append(f"deg {degree}: {report['factors']}-fold x{trials}")
        return "; ".join(notes)

    out.append(_run("torsor.products",
                    "random multi-fold coordinatewise products of torsor samples stay on the cone",
                    products))
    return out


# ------------------------------------------------------------------ driver

def run_suite(name: str, seed: int = 0, exp_trials: int = 100,
              product_trials: int = 20, plucker_trials: int = 200,
              degree: int = 2) -> list[CheckResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    if degree not in (5, 4, 3, 2):
        raise ValueError(f"degree must be one of 5, 4, 3, 2, not {degree}")
    cfg = {"seed": seed, "exp_trials": exp_trials,
           "product_trials": product_trials, "plucker_trials": plucker_trials,
           "degrees": tuple(range(5, degree - 1, -1))}
    if name == "combinatorics":
        return _suite_combinatorics(cfg)
    if name == "cone":
        return _suite_cone(cfg)
    if name == "torsor":
        return _suite_torsor(cfg)
    if name == "products":
        return _suite_products(cfg)
    return (_suite_combinatorics(cfg) + _suite_cone(cfg) + _suite_torsor(cfg))


def format_report(results: list[CheckResult], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([asdict(r) for r in results], sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["check_id", "passed", "seconds", "statement", "detail"])
        for r in results:
            writer.writerow([r.check_id, "pass" if r.passed else "FAIL",
                             f"{r.seconds:.3f}", r.statement, r.detail])
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    width = max(len(r.check_id) for r in results)
    lines = []
    for r in results:
        mark = "pass" if r.passed else "FAIL"
        lines.append(f"{r.check_id:<{width}}  {mark}  {r.seconds:8.3f}s  {r.statement}")
        if r.detail:
            lines.append(f"{'':<{width}}        {'':>8}   -> {r.detail}")
    good = sum(r.passed for r in results)
    lines.append(f"{good}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"
