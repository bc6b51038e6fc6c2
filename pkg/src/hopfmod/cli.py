"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 on usage errors, 2 when a
verification or golden comparison fails.
"""

from __future__ import annotations

import copy
import csv
import dataclasses
import hashlib
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import click

from . import __version__
from .cyclo import Cyc, approx_str

TASKS = ["axioms", "ribbon", "center", "higman", "cartan", "fusion", "modular", "congruence", "golden"]
SCHEMA = 1
CACHE_ENV = "HOPFMOD_CACHE"

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2

SUITE = [("uqsl2", 3), ("uqsl2", 5), ("nichols", 1), ("nichols", 2), ("nichols", 3),
         ("dnichols", 1), ("dnichols", 2)]
STRETCH = [("uqsl2", 7), ("dnichols", 4)]


class UsageFailure(Exception):
    pass


# -- task runners ---------------------------------------------------------------------


class Context:
    """Lazily computed shared objects for one instance."""

    def __init__(self, inst, digits: int):
        self.inst = inst
        self.digits = digits
        self._bundle = None
        self._verlinde = None
        self._center = None

    @property
    def H(self):
        return self.inst.algebra

    @property
    def has_modular(self) -> bool:
        r = self.inst.ribbon
        return r is not None and r.v is not None and self.inst.integrals is not None

    def center(self):
        if self._center is None:
            from .center import center_basis

            self._center = center_basis(self.H)
        return self._center

    def bundle(self):
        if self._bundle is None:
            from .modular import cw_modular_data, verlinde_check

            data = self.inst.cw_input()
            self._bundle = cw_modular_data(data, center=self.center().elements)
            self._verlinde = verlinde_check(self._bundle, data)
        return self._bundle

    def verlinde(self):
        self.bundle()
        return self._verlinde


def _skip(reason: str):
    return "skipped", {"reason": reason}, None


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def task_axioms(ctx: Context):
    from .hopf import verify_hopf_axioms

    rep = verify_hopf_axioms(ctx.H, mode="auto")
    return _status(rep.ok), {"dim": ctx.H.dim, "checks": rep.to_json()}, (
        None if rep.ok else {"failed": rep.failures()})


def task_ribbon(ctx: Context):
    from .ribbon import is_factorizable, verify_quasitriangular, verify_ribbon

    inst, H = ctx.inst, ctx.H
    if inst.ribbon is None:
        return _skip("no R-matrix attached")
    R = inst.ribbon.R
    qt = verify_quasitriangular(H, R)
    art = {"quasitriangular": qt.to_json()}
    ok = qt.ok
    if inst.ribbon.v is not None:
        rb = verify_ribbon(H, R, inst.ribbon.v, inverse=inst.ribbon_inverse)
        art["ribbon"] = rb.to_json()
        ok = ok and rb.ok
    fact, rank = is_factorizable(H, R, inst.ribbon.Q)
    art["factorizable"] = fact
    art["drinfeld_rank"] = rank
    ok = ok and fact == inst.factorizable_expected
    return _status(ok), art, None if ok else {"failed": [k for k, v in art.items()
                                                          if isinstance(v, dict) and not all(
                                                              e["passed"] for e in v.values())]
                                               or ["factorizable"]}


def task_center(ctx: Context):
    from . import linalg
    from .center import cointegral, is_unimodular, left_integral

    inst, H = ctx.inst, ctx.H
    Z = ctx.center()
    art = {"center_dim": len(Z.elements), "unimodular": is_unimodular(H)}
    wit = {}
    g = inst.golden
    if "center_dim" in g and art["center_dim"] != g["center_dim"]:
        wit["center_dim"] = {"computed": art["center_dim"], "expected": g["center_dim"]}
    if "unimodular" in g and art["unimodular"] != g["unimodular"]:
        wit["unimodular"] = {"computed": art["unimodular"], "expected": g["unimodular"]}
    if inst.integrals is not None:
        Lam, lam = inst.integrals.Lambda.v, inst.integrals.lam.v
        left = left_integral(H).v
        co = cointegral(H, "right").v
        art["integral_matches_closed_form"] = linalg.rank([left, Lam], H.dim, H.F) == 1
        art["cointegral_matches_closed_form"] = linalg.rank([co, lam], H.dim, H.F) == 1
        pairing = sum((lam[k] * c for k, c in Lam.items() if k in lam), H.F.zero)
        art["lambda_Lambda"] = list(approx_str(pairing, ctx.digits))
        for key in ("integral_matches_closed_form", "cointegral_matches_closed_form"):
            if not art[key]:
                wit[key] = False
        if pairing != H.F.one:
            wit["lambda_Lambda"] = art["lambda_Lambda"]
    return _status(not wit), art, wit or None


def task_higman(ctx: Context):
    from .center import higman_ideal, span_equal

    inst, H = ctx.inst, ctx.H
    if inst.integrals is None or inst.ribbon is None:
        return _skip("no integral/balancing data attached")
    hig = [e.v for e in higman_ideal(H, inst.ribbon.G.v, inst.integrals.Lambda.v)]
    art = {"higman_dim": len(hig)}
    wit = {}
    exp = inst.golden.get("higman_dim")
    if exp is not None and exp != len(hig):
        wit["higman_dim"] = {"computed": len(hig), "expected": exp}
    if inst.family == "dnichols" and inst.param == 2:
        from .families import dk2_higman_elements

        art["matches_reference_basis"] = span_equal(H, hig, dk2_higman_elements(H))
        if not art["matches_reference_basis"]:
            wit["matches_reference_basis"] = False
    return _status(not wit), art, wit or None


def task_cartan(ctx: Context):
    from .families.compare import first_mismatch
    from .repnlib import cartan_matrix

    C = cartan_matrix(ctx.inst.table)
    t = ctx.inst.table
    art = {"cartan": C, "rank": t.rank, "total_rank": t.total_rank,
           "order": [P.name for P in t.projectives]}
    wit = {}
    g = ctx.inst.golden
    if "cartan" in g:
        w = first_mismatch(C, g["cartan"])
        if w:
            wit["cartan"] = w
    for key in ("rank", "total_rank"):
        if key in g and g[key] != art[key]:
            wit[key] = {"computed": art[key], "expected": g[key]}
    return _status(not wit), art, wit or None


def task_fusion(ctx: Context):
    from .families.compare import fusion_table_compare

    rep = fusion_table_compare(ctx.inst)
    if not rep.rows:
        return _skip("no listed products")
    art = {"products": [r.to_json() for r in rep.rows]}
    return _status(rep.ok), art, None if rep.ok else [r.witness for r in rep.failures()]


def task_modular(ctx: Context):
    if not ctx.has_modular:
        return _skip("needs R, a ribbon element and an integral pair")
    B = ctx.bundle()
    V = ctx.verlinde()
    art = B.to_json(ctx.digits)
    art["identities"] = {"S2_is_Sinv": B.identities.s_squared_is_sinv,
                         "ST_cubed": B.identities.st_cubed_ok}
    art["verlinde"] = {k: bool(v) for k, v in V.entrywise.items()}
    ok = B.identities.ok and V.ok and B.S_CW == B.S_CW_cartan
    wit = None
    if not ok:
        wit = {"identities": B.identities.ok, "verlinde": V.ok, "routes_agree": B.S_CW == B.S_CW_cartan}
    return _status(ok), art, wit


def certificate_candidates(inst, F):
    from .weil import even_odd_split, level2_piece, trivial_piece, weil_piece

    if inst.family == "uqsl2":
        sp = even_odd_split(inst.param)
        return [[weil_piece("V_even", sp.S_even, sp.T_even, sp.F)]]
    if inst.family == "dnichols":
        return [[trivial_piece(F), level2_piece(F)], [trivial_piece(F)] * 3]
    return []


def task_congruence(ctx: Context):
    from .weil import congruence_certify

    if not ctx.has_modular:
        return _skip("needs R, a ribbon element and an integral pair")
    B = ctx.bundle()
    cert = congruence_certify(B.S_CW, B.T_CW, certificate_candidates(ctx.inst, ctx.H.F))
    art = cert.to_json()
    return _status(cert.found), art, None if cert.found else {"candidates_exhausted": True}


def task_golden(ctx: Context):
    from .families.compare import fusion_table_compare, golden_compare, mixed_fusion_compare

    rows = []
    if ctx.has_modular:
        rows += golden_compare(ctx.inst, ctx.bundle(), ctx.verlinde()).rows
    elif ctx.inst.integrals is not None and "fusion_mixed" in ctx.inst.golden:
        rows += mixed_fusion_compare(ctx.inst).rows
    rows += fusion_table_compare(ctx.inst).rows
    if not any(r.table == "cartan" for r in rows):
        st, art, wit = task_cartan(ctx)
        rows.append(_row("cartan", st == "pass", wit))
    if ctx.inst.family == "uqsl2" and ctx.has_modular:
        from .modular import kerler_blocks

        k = kerler_blocks(ctx.inst)
        rows.append(_row("kerler_blocks", k.ok, None if k.ok else k.to_json()))
    ok = all(r.passed for r in rows)
    return _status(ok), {"rows": [r.to_json() for r in rows]}, (
        None if ok else [r.to_json() for r in rows if not r.passed])


def _row(name, passed, witness):
    from .families.compare import Row

    return Row(name, passed, witness)


RUNNERS = {"axioms": task_axioms, "ribbon": task_ribbon, "center": task_center,
           "higman": task_higman, "cartan": task_cartan, "fusion": task_fusion,
           "modular": task_modular, "congruence": task_congruence, "golden": task_golden}


# -- cache ----------------------------------------------------------------------------


def _cache_path(instance: str, task: str, digits: int) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    key = hashlib.sha256(f"{__version__}|{instance}|{task}|{digits}".encode()).hexdigest()[:16]
    return Path(root) / f"{task}-{key}.json"


def run_instance(family: str, param: int, tasks: list[str], digits: int = 12,
                 conductor: int | None = None, corrupt: str | None = None,
                 use_cache: bool = True) -> list[dict]:
    """Run ``tasks`` (in dependency order) on one instance and return report records."""
    from .families import build, uqsl2

    inst = uqsl2(param, conductor) if family == "uqsl2" and conductor else build(family, param)
    if corrupt:
        inst = dataclasses.replace(inst, golden=corrupt_golden(inst.golden, corrupt))
        use_cache = False
    ctx = Context(inst, digits)
    records = []
    for task in [t for t in TASKS if t in tasks]:
        path = _cache_path(inst.name, task, digits) if use_cache and conductor is None else None
        if path is not None and path.exists():
            records.append(json.loads(path.read_text()))
            continue
        t0 = time.perf_counter()
        try:
            status, art, wit = RUNNERS[task](ctx)
        except Exception as exc:  # structural failures are reported, not raised
            status, art, wit = "fail", None, {"error": f"{type(exc).__name__}: {exc}"}
        rec = {"instance": inst.name, "task": task, "status": status, "artifact": art,
               "seconds": round(time.perf_counter() - t0, 3)}
        if wit is not None:
            rec["witness"] = wit
        if path is not None and status != "fail":
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(rec, sort_keys=True))
        records.append(rec)
    return records


def corrupt_golden(golden: dict, target: str) -> dict:
    """Scale one golden table by 2 (test mode); ``target`` is a key or ``key.sub``."""
    g = copy.deepcopy(golden)
    key, _, sub = target.partition(".")
    holder = g[key] if sub else g
    name = sub or key
    if name not in holder:
        raise UsageFailure(f"no golden table {target!r}")
    holder[name] = _scale(holder[name])
    return g


def _scale(x):
    if isinstance(x, list):
        return [_scale(y) for y in x]
    return x * 2


# -- output ---------------------------------------------------------------------------


def _is_cyc_json(x) -> bool:
    return isinstance(x, dict) and set(x) == {"conductor", "coeffs"}


def _flatten(prefix: str, x, digits: int, out: list):
    if _is_cyc_json(x):
        re, im = approx_str(Cyc.from_json(x), digits)
        out.append((prefix, re if im in ("0.0", "0") else f"{re}{'' if im.startswith('-') else '+'}{im}i"))
    elif isinstance(x, dict):
        if "exact" in x and "approx" in x:
            _flatten(prefix, x["approx"], digits, out)
            return
        for k in sorted(x):
            _flatten(f"{prefix}.{k}" if prefix else str(k), x[k], digits, out)
    elif isinstance(x, list) and x and len(x) == 2 and all(isinstance(s, str) for s in x):
        re, im = x
        out.append((prefix, re if im in ("0.0", "0") else f"{re}{'' if im.startswith('-') else '+'}{im}i"))
    elif isinstance(x, list):
        for i, y in enumerate(x):
            _flatten(f"{prefix}[{i}]", y, digits, out)
    else:
        out.append((prefix, x))


def render(records: list[dict], fmt: str, digits: int) -> str:
    if fmt == "json":
        return json.dumps({"schema": SCHEMA, "records": records}, sort_keys=True, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        buf.write("# lossy: decimal approximations only; use --format json for exact values\n")
        w = csv.writer(buf)
        w.writerow(["instance", "task", "status", "field", "value"])
        for r in records:
            rows: list = []
            _flatten("", r.get("artifact"), digits, rows)
            if not rows:
                rows = [("", "")]
            for k, v in rows:
                w.writerow([r["instance"], r["task"], r["status"], k, v])
        return buf.getvalue()
    lines = []
    for r in records:
        line = f"{r['instance']:<14} {r['task']:<11} {r['status'].upper():<8}"
        if r["status"] == "fail":
            line += " " + json.dumps(r.get("witness"), sort_keys=True)[:200]
        elif r["status"] == "skipped":
            line += " " + r["artifact"]["reason"]
        lines.append(line)
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _exit_code(records: list[dict]) -> int:
    return EXIT_FAIL if any(r["status"] == "fail" for r in records) else EXIT_OK


# -- commands -------------------------------------------------------------------------


def _parse_tasks(value: str) -> list[str]:
    tasks = [t.strip() for t in value.split(",") if t.strip()]
    if not tasks:
        raise UsageFailure("--tasks must name at least one task")
    bad = [t for t in tasks if t not in TASKS]
    if bad:
        raise UsageFailure(f"unknown task(s) {', '.join(bad)}; choose from {', '.join(TASKS)}")
    return tasks


@click.group()
@click.version_option(__version__)
def cli():
    """Exact modular data of non-semisimple Hopf algebras."""


@cli.command()
@click.option("--family", required=True, type=click.Choice(["uqsl2", "nichols", "dnichols"]))
@click.option("--param", required=True, type=int)
@click.option("--conductor", type=int, default=None, help="cyclotomic conductor override (uqsl2 only)")
@click.option("--tasks", default=",".join(TASKS), show_default=True, help="comma-separated subset")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "pretty"]), default="pretty")
@click.option("--digits", type=click.IntRange(1, 60), default=12, show_default=True)
@click.option("--no-cache", is_flag=True, help=f"ignore ${CACHE_ENV}")
def compute(family, param, conductor, tasks, out, fmt, digits, no_cache):
    """Build one instance and run the requested tasks."""
    task_list = _parse_tasks(tasks)
    if conductor is not None and family != "uqsl2":
        raise UsageFailure("--conductor applies to uqsl2 only")
    try:
        records = run_instance(family, param, task_list, digits, conductor, use_cache=not no_cache)
    except ValueError as exc:
        raise UsageFailure(str(exc)) from None
    _emit(render(records, fmt, digits), out)
    sys.exit(_exit_code(records))


def _suite_job(args):
    family, param, digits, corrupt = args
    tasks = ["axioms", "ribbon", "center", "higman", "cartan", "golden", "congruence"]
    return run_instance(family, param, tasks, digits, corrupt=corrupt)


def golden_matrix(records: list[dict]) -> list[tuple[str, str, str]]:
    """(instance, check, status) rows: one per golden table plus one per other task."""
    rows = []
    for r in records:
        if r["task"] == "golden" and r["artifact"]:
            rows += [(r["instance"], row["table"], row["status"]) for row in r["artifact"]["rows"]]
        elif r["task"] == "golden":
            rows.append((r["instance"], "golden", r["status"]))
        else:
            rows.append((r["instance"], r["task"], r["status"]))
    return rows


@cli.command()
@click.option("--stretch", is_flag=True, help="add uqsl2(7) and dnichols(4)")
@click.option("--jobs", type=click.IntRange(1, 64), default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="write JSON records here")
@click.option("--digits", type=click.IntRange(1, 60), default=12)
@click.option("--corrupt", default=None, hidden=True,
              help="test mode: INSTANCE:TABLE scales one golden table by 2")
def reproduce(stretch, jobs, out, digits, corrupt):
    """Run the full golden suite and print a pass/fail matrix."""
    suite = SUITE + (STRETCH if stretch else [])
    target = {}
    if corrupt:
        inst_name, _, table = corrupt.partition(":")
        if not table:
            raise UsageFailure("--corrupt expects INSTANCE:TABLE")
        target[inst_name] = table
    jobs_args = [(f, p, digits, target.get(f"{f}({p})")) for f, p in suite]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_suite_job, jobs_args))
    else:
        chunks = [_suite_job(a) for a in jobs_args]
    records = [r for c in chunks for r in c]
    rows = golden_matrix(records)
    width = max(len(c) for _, c, _ in rows)
    for inst, check, status in rows:
        click.echo(f"{inst:<14} {check:<{width}} {status.upper()}")
    nfail = sum(1 for *_, s in rows if s == "fail")
    click.echo(f"{len(rows) - nfail}/{len(rows)} rows pass")
    if out:
        Path(out).write_text(render(records, "json", digits))
    sys.exit(EXIT_FAIL if nfail else EXIT_OK)


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="hopfmod", standalone_mode=False)
    except SystemExit as exc:
        return int(exc.code or 0)
    except UsageFailure as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_USAGE
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
