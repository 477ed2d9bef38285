"""Certified gadget fixtures shipped with the package."""
from __future__ import annotations

import json
from importlib import resources

from .specs import EdgeGadgetSpec, VertexGadgetSpec, gadget_from_json

BUILTIN = {"edge-w4": "edge_w4.json", "vertex-h3": "vertex_h3.json", "vertex-h4": "vertex_h4.json"}


def builtin_gadget(name: str) -> EdgeGadgetSpec | VertexGadgetSpec:
    if name not in BUILTIN:
        raise KeyError(f"unknown built-in gadget {name!r}; known: {sorted(BUILTIN)}")
    text = resources.files("subcolor.data").joinpath(BUILTIN[name]).read_text()
    return gadget_from_json(json.loads(text))


def default_gadgets(pair_count: int = 4) -> tuple[VertexGadgetSpec, EdgeGadgetSpec]:
    if pair_count not in (3, 4):
        raise ValueError("pair_count must be 3 or 4")
    return builtin_gadget(f"vertex-h{pair_count}"), builtin_gadget("edge-w4")
