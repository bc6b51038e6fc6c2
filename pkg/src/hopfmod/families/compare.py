"""Exact comparison of computed bundles against the golden tables of an instance."""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

from ..cyclo import Cyc, approx_str


def _show(x):
    return list(approx_str(x, 12)) if isinstance(x, Cyc) else x


@dataclass
class Row:
    table: str
    passed: bool
    witness: dict | None = None
    note: str | None = None

    def to_json(self) -> dict:
        out = {"table": self.table, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass
class DiffReport:
    instance: str
    rows: list[Row] = dfield(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.rows)

    def failures(self) -> list[Row]:
        return [r for r in self.rows if not r.passed]

    def to_json(self) -> dict:
        return {"instance": self.instance, "ok": self.ok, "rows": [r.to_json() for r in self.rows]}


def first_mismatch(got, exp, F=None) -> dict | None:
    """First differing entry of two matrices (or vectors), or None when equal."""
    if len(got) != len(exp):
        return {"shape": [len(got), len(exp)]}
    for i, (g, e) in enumerate(zip(got, exp)):
        if isinstance(g, list) or isinstance(e, list):
            if len(g) != len(e):
                return {"row": i, "shape": [len(g), len(e)]}
            for j, (a, b) in enumerate(zip(g, e)):
                if not _eq(a, b, F):
                    return {"entry": [i, j], "computed": _show(a), "expected": _show(b)}
        elif not _eq(g, e, F):
            return {"entry": [i], "computed": _show(g), "expected": _show(e)}
    return None


def _eq(a, b, F) -> bool:
    if isinstance(a, Cyc) or isinstance(b, Cyc):
        if F is None:
            F = a.F if isinstance(a, Cyc) else b.F
        return F.coerce(a) == F.coerce(b)
    return a == b


def up_to_scalar(got, exp, F) -> tuple[dict | None, Cyc | None]:
    """Compare matrices modulo one global scalar; returns (witness, scalar)."""
    c = None
    for i, r in enumerate(exp):
        for j, e in enumerate(r):
            if e:
                c = F.coerce(got[i][j]) / F.coerce(e)
                break
        if c is not None:
            break
    if c is None or not c:
        return first_mismatch(got, exp, F), None
    scaled = [[c * F.coerce(e) for e in r] for r in exp]
    return first_mismatch(got, scaled, F), c


def golden_compare(inst, bundle, verlinde=None) -> DiffReport:
    """Per-table exact comparison; T_CW is compared modulo its phase, which is reported."""
    F = inst.H.F
    g = inst.golden
    rep = DiffReport(inst.name)

    def add(name, w, note=None):
        rep.rows.append(Row(name, w is None, w, note))

    if "center_dim" in g:
        add("center_dim", first_mismatch([len(bundle.center)], [g["center_dim"]]))
    if "higman_dim" in g:
        add("higman_dim", first_mismatch([len(bundle.higman)], [g["higman_dim"]]))
    if "cartan" in g:
        add("cartan", first_mismatch(bundle.cartan, g["cartan"]))
    if "S_CW" in g:
        add("S_CW", first_mismatch(bundle.S_CW, g["S_CW"], F))
        add("S_CW_cartan_route", first_mismatch(bundle.S_CW_cartan, g["S_CW"], F))
    if "T_CW" in g:
        w, c = up_to_scalar(bundle.T_CW, g["T_CW"], F)
        note = None if c is None else f"T phase {_show(c)}, normalization {_show(bundle.T_phase)}"
        add("T_CW", w, note)
    for name, N in g.get("fusion_mixed", {}).items():
        add(f"fusion_mixed[{name}]", first_mismatch(bundle.fusion.get(name, []), N, F))
    if verlinde is not None:
        for name, d in g.get("diagonalized", {}).items():
            got = verlinde.diagonal.get(name)
            add(f"diagonalized[{name}]",
                {"computed": None, "expected": d} if got is None else first_mismatch(got, [F.from_int(x) for x in d], F))
        for name, ok in verlinde.entrywise.items():
            add(f"verlinde[{name}]", None if ok else {"simple": name})
    if bundle.kappa is not None:
        rep.rows.append(Row("kappa", True, None, f"kappa {_show(bundle.kappa)}"))
    return rep


def mixed_fusion_compare(inst) -> DiffReport:
    """Mixed fusion matrices only; needs no ribbon element."""
    from ..modular import mixed_fusion_matrices

    F = inst.H.F
    rep = DiffReport(inst.name)
    got = mixed_fusion_matrices(inst.cw_input(require_ribbon=False))
    for name, N in inst.golden.get("fusion_mixed", {}).items():
        w = first_mismatch(got.get(name, []), N, F)
        rep.rows.append(Row(f"fusion_mixed[{name}]", w is None, w))
    return rep


def fusion_table_compare(inst, products=None) -> DiffReport:
    """Decompose each listed tensor product and compare with the golden multiplicities."""
    from ..repnlib import decompose, tensor_module

    rep = DiffReport(inst.name)
    mods = inst.modules
    for X, Y, exp in products if products is not None else inst.golden.get("fusion_full", []):
        got = decompose(tensor_module(mods[X], mods[Y]), inst.table)
        got = {k: v for k, v in got.items() if v}
        w = None if got == exp else {"product": [X, Y], "computed": got, "expected": exp}
        rep.rows.append(Row(f"{X}*{Y}", w is None, w))
    return rep
