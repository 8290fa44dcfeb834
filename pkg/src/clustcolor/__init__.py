"""Clustered graph colouring toolkit.

Tree-decompositions and the necklace constructions, exact treewidth and
colouring oracles, extremal lower-bound families, and exact bound formulas.
"""
from .bounds import (adov_bound, combine_bound, ej_bound, main_constants, necklace_bound,
                     outgrowth_bound, recolor_budget)
from .coloring import (Coloring, MonoReport, Predicate, check_recolor_bound, exact_min_max_mono,
                       forall_colorings_check, mono_components, td_two_coloring)
from .decomp import (TreeDecomposition, VorticalDecomposition, combine_necklace_vortex,
                     necklace_td, validate_td, validate_vortical)
from .extremal import (GadgetParams, build_gadget, build_line_family, hex_check, verify_gadget,
                       verify_line_family)
from .graph import (Graph, NecklaceSpec, Society, component_diameter, components, girth,
                    line_graph, make_graph, max_degree, necklace_graph,
                    random_regular_with_girth, triangular_grid)
from .kernels import DEFAULT as KERNEL_BACKEND
from .treewidth import exact_treewidth
from .vortex import disjoint_paths, vortex_order_check

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "GadgetParams",
    "Graph",
    "KERNEL_BACKEND",
    "MonoReport",
    "NecklaceSpec",
    "Predicate",
    "Society",
    "TreeDecomposition",
    "VorticalDecomposition",
    "adov_bound",
    "build_gadget",
    "build_line_family",
    "check_recolor_bound",
    "combine_bound",
    "combine_necklace_vortex",
    "component_diameter",
    "components",
    "disjoint_paths",
    "ej_bound",
    "exact_min_max_mono",
    "exact_treewidth",
    "forall_colorings_check",
    "girth",
    "hex_check",
    "line_graph",
    "main_constants",
    "make_graph",
    "max_degree",
    "mono_components",
    "necklace_bound",
    "necklace_graph",
    "necklace_td",
    "outgrowth_bound",
    "random_regular_with_girth",
    "recolor_budget",
    "td_two_coloring",
    "triangular_grid",
    "validate_td",
    "validate_vortical",
    "verify_gadget",
    "verify_line_family",
    "vortex_order_check",
]
