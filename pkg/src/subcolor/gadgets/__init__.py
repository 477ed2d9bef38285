"""Edge and vertex gadgets: specifications, certification, construction and search."""
from .assemble import HUB_PLANS, assemble_vertex_gadget, w4_edge_gadget
from .library import BUILTIN, builtin_gadget, default_gadgets
from .specs import (EDGE_TERMINALS, PORT_DEGREE_LIMIT, EdgeGadgetSpec, GadgetSpecError,
                    VertexGadgetSpec, dump_gadget, gadget_from_json, load_gadget)
from .synth import SynthesisRefused, SynthesisResult, synthesize_edge_gadget, synthesize_vertex_gadget
from .verify import (FAIL, PASS, VACUOUS, GadgetReport, PropertyVerdict, ports_on_common_face,
                     verify_edge_gadget, verify_vertex_gadget)

__all__ = [
    "BUILTIN", "builtin_gadget", "default_gadgets",
    "HUB_PLANS", "assemble_vertex_gadget", "w4_edge_gadget",
    "EDGE_TERMINALS", "PORT_DEGREE_LIMIT", "EdgeGadgetSpec", "GadgetSpecError",
    "VertexGadgetSpec", "dump_gadget", "gadget_from_json", "load_gadget",
    "FAIL", "PASS", "VACUOUS", "GadgetReport", "PropertyVerdict", "ports_on_common_face",
    "verify_edge_gadget", "verify_vertex_gadget",
    "SynthesisRefused", "SynthesisResult", "synthesize_edge_gadget", "synthesize_vertex_gadget",
]
