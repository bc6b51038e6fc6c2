"""Lossless export and import of the data the modular pipeline consumes."""

from __future__ import annotations

import json

from ..center import IntegralPair
from ..cyclo import Cyc
from ..hopf import AlgElem, DualElem, HopfAlgebra, TensorElem
from ..repnlib import CharacterTable, ModuleRep, module_from_generators
from ..ribbon import RibbonData

SCHEMA = 1


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _vec(v: dict) -> list:
    return [[k, c.to_json()] for k, c in sorted(v.items())]


def _unvec(data: list) -> dict:
    return {int(k): Cyc.from_json(c) for k, c in data}


def export_instance(inst) -> dict:
    H = inst.algebra
    t = inst.table
    simples = [V.name for V in t.simples]
    modules = {V.name: V.to_json() for V in list(t.simples) + list(t.projectives)}
    out = {
        "schema": SCHEMA,
        "family": inst.family,
        "param": inst.param,
        "algebra": H.to_json(),
        "idempotents": [_vec(e) for e in inst.idempotents],
        "modules": modules,
        "simples": simples,
        "projectives": [P.name for P in t.projectives],
        "steinberg": list(t.steinberg),
        "socle_dims": list(t.socle_dims),
        "higman_index": list(inst.higman_index),
        "class_weights": list(inst.class_weights),
        "ribbon_inverse": inst.ribbon_inverse,
    }
    if inst.ribbon is not None:
        r = inst.ribbon
        out["R"] = r.R.to_json()
        out["G"] = _vec(r.G.v)
        out["v"] = _vec(r.v.v) if r.v is not None else None
    if inst.integrals is not None:
        out["Lambda"] = _vec(inst.integrals.Lambda.v)
        out["lambda"] = _vec(inst.integrals.lam.v)
    return out


def _module(H: HopfAlgebra, obj: dict) -> ModuleRep:
    acts = {lab: [[Cyc.from_json(x) for x in row] for row in m]
            for lab, m in obj["generators"].items()}
    M = module_from_generators(H, acts, obj["name"], check=False)
    M.dim = int(obj["dim"])
    return M


def import_instance(obj: dict):
    """Rebuild a FamilyInstance (without golden tables) from ``export_instance`` output."""
    from . import FamilyInstance

    if obj.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {obj.get('schema')!r}")
    H = HopfAlgebra.from_json(obj["algebra"])
    mods = {name: _module(H, m) for name, m in obj["modules"].items()}
    table = CharacterTable(H, [mods[n] for n in obj["simples"]], [mods[n] for n in obj["projectives"]],
                           list(obj["steinberg"]), list(obj["socle_dims"]))
    rib = None
    if "R" in obj:
        v = obj.get("v")
        rib = RibbonData(H, TensorElem.from_json(H, obj["R"]),
                         AlgElem(H, _unvec(v)) if v is not None else None,
                         AlgElem(H, _unvec(obj["G"])))
    integrals = None
    if "Lambda" in obj:
        integrals = IntegralPair(AlgElem(H, _unvec(obj["Lambda"])), DualElem(H, _unvec(obj["lambda"])), True)
    return FamilyInstance(obj["family"], obj["param"], H, rib, integrals,
                          [_unvec(e) for e in obj["idempotents"]], mods, table,
                          higman_index=list(obj["higman_index"]),
                          class_weights=list(obj["class_weights"]),
                          ribbon_inverse=bool(obj["ribbon_inverse"]))
