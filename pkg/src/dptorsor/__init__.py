"""Exact universal-torsor presentations for del Pezzo surfaces of degree 5..2.

The package builds, entirely in exact rational arithmetic:

* simply-laced marked root systems and their Weyl orbits (``rootsys``),
* the associated minuscule representations with signed integer
  raising/lowering operators (``minrep``),
* sparse rational polynomials and exact linear algebra (``polyalg``),
* the quadratic ideal of the affine cone over the corresponding
  homogeneous space, together with its exponential section (``gpideal``),
* an independent Picard-lattice oracle for exceptional and conic curve
  classes (``picard``),
* the inductive blow-up construction of universal-torsor equation
  systems with certified samples (``torsor``), and
* machine-checkable verification suites (``verify``).
"""

from .gpideal import (ConeIdeal, QuadraticGenerator, cone_ideal, exp_point,
                      invariant_cubic, quadratic_section, ver_mu)
from .minrep import (Grading, MinusculeRep, build_grading, build_minuscule_rep,
                     embed_level1_point, graded_scale, level1_embedding)
from .picard import (DivClass, IncidenceGraph, canonical_class,
                     conic_class_of_mu, conic_classes, conic_dictionary,
                     exceptional_classes, graph_automorphism_order,
                     incidence_graph, intersect, weight_curve_bijection)
from .polyalg import Poly, RatMatrix, q, q_str, vec_primitive
from .rootsys import (SYSTEMS, RootSystem, build_root_system, degree_of,
                      system_of_degree, weyl_group_order, weyl_orbit)
from .torsor import (TorsorPresentation, TorsorStep, build_torsor,
                     general_position_check, jacobian_rank, omega_test,
                     plucker_dictionary, plucker_point, pn_product_check,
                     seed_torsor_A4, torus_inv, torus_mul, verify_sample)
from .verify import CheckResult, format_report, run_suite

__version__ = "0.1.0"

__all__ = [
    "ConeIdeal", "QuadraticGenerator", "cone_ideal", "exp_point",
    "invariant_cubic", "quadratic_section", "ver_mu",
    "Grading", "MinusculeRep", "build_grading", "build_minuscule_rep",
    "embed_level1_point", "graded_scale", "level1_embedding",
    "DivClass", "IncidenceGraph", "canonical_class", "conic_class_of_mu",
    "conic_classes", "conic_dictionary", "exceptional_classes",
    "graph_automorphism_order", "incidence_graph", "intersect",
    "weight_curve_bijection",
    "Poly", "RatMatrix", "q", "q_str", "vec_primitive",
    "SYSTEMS", "RootSystem", "build_root_system", "degree_of",
    "system_of_degree", "weyl_group_order", "weyl_orbit",
    "TorsorPresentation", "TorsorStep", "build_torsor",
    "general_position_check", "jacobian_rank", "omega_test",
    "plucker_dictionary", "plucker_point", "pn_product_check",
    "seed_torsor_A4", "torus_inv", "torus_mul", "verify_sample",
    "CheckResult", "format_report", "run_suite",
    "__version__",
]
