"""Exact duality workbench for finite simplicial pairs.

Chain-level machinery (twisted complexes over the fundamental group,
cup/cap/cross products, Smith normal form over the integers) feeding
verdict procedures that decide whether a pair satisfies the cap-product
duality conditions, plus covers with transfer, product formulas, and a
registry of pinned end-to-end scenarios.
"""

__version__ = "0.1.0"

from .chaincomplex import (ChainComplexZ, ChainMap, HomologyGroup,
                           is_quasi_iso)
from .coset import CosetTable, EnumerationOverflow, find_subgroup_words, \
    todd_coxeter
from .cover import CoverPair, build_cover, transfer_chain, \
    transfer_chain_map
from .duality import (ConditionVerdict, DualityReport, ThomVerdict,
                      TriadReport, boundary_pieces, check_condition,
                      find_fundamental_classes, find_thom_class,
                      verify_pair, verify_thom_class, verify_triad)
from .intmatrix import SparseIntMatrix, smith_normal_form
from .kunneth import (KunnethReport, cap_cross_check, invariant_chain,
                      kunneth_check, kunneth_expected)
from .localsystem import (EdgeSystem, LocalSystem, compile_edge_system,
                          orientation_systems, permutation_system,
                          regular_system, sign_system, trivial_edges,
                          trivial_system)
from .presentation import Presentation, fundamental_presentation
from .products import (cap_chain_map, cap_cocycle_chain_map, cap_eval,
                       cross_chain, cross_cochain, cup, theta_map)
from .scenarios import SCENARIO_NAMES, ScenarioResult, run_scenario
from .simplicial import (SimplicialComplex, SimplicialMap, SimplicialPair,
                         SimplicialTriad, barycentric_subdivision,
                         boundary_sphere, cone, connected_components,
                         double, from_labeled_facets, full_subcomplex,
                         glue, product, product_pair, puncture,
                         simplex_complex)
from .spaces import (circle, interval_pair, klein_bottle, mobius_band,
                     poincare_sphere, rp2, rp3, torus)
from .twisted import TwistedComplex, twisted_cochain_complex, \
    twisted_complex
