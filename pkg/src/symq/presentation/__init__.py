"""Free symmetric racks, presentations, consequence closure and associated groups."""
from .abelian import abelianization, smith_diagonal
from .closure import Budget, Closure, Proof, consequence_closure, prove_equal, search_equal
from .core import (
    Flavor,
    GroupPresentation,
    SymQuandlePresentation,
    associated_group,
    eliminable,
    eliminate_generator,
    enumerate_homs,
    hom_count,
    load_group,
    load_presentation,
    merge_aliases,
    normalize_relation,
    parse_element,
    simplify,
)
from .fsr import FsrElement, augment, evaluate, fsr_op, fsr_op_inv, fsr_rho, gen

__all__ = [
    "Budget", "Closure", "Flavor", "FsrElement", "GroupPresentation", "Proof",
    "SymQuandlePresentation", "abelianization", "associated_group", "augment",
    "consequence_closure", "eliminable", "eliminate_generator", "enumerate_homs",
    "evaluate", "fsr_op", "fsr_op_inv", "fsr_rho", "gen", "hom_count", "load_group",
    "load_presentation", "merge_aliases", "normalize_relation", "parse_element", "prove_equal",
    "search_equal", "simplify", "smith_diagonal",
]
