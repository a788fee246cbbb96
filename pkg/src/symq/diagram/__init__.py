from .model import (
    Diagram,
    Stratum,
    a_relation,
    b_relation,
    diagram_from_dict,
    diagram_to_dict,
    flip_normal,
    flip_normals,
    load_diagram,
    oriented_presentation_from_diagram,
    presentation_from_diagram,
    relabel,
    renumber,
    save_diagram,
    sheets,
    switch_over,
)
from .pd import PdCode, diagram_from_pd_text, parse_pd, pd_to_diagram

__all__ = [
    "Diagram", "PdCode", "Stratum", "a_relation", "b_relation", "diagram_from_dict",
    "diagram_from_pd_text", "diagram_to_dict", "flip_normal", "flip_normals", "load_diagram",
    "oriented_presentation_from_diagram", "parse_pd", "pd_to_diagram", "presentation_from_diagram",
    "relabel", "renumber", "save_diagram", "sheets", "switch_over",
]
