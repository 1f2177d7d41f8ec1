# prismlab/cli/commands/build.py
import json

import click

from prismlab.cli import deps
from prismlab.core.errors import PrismLabError
from prismlab.schemas.report import BuildReport
from prismlab.services import prism_complex


@click.command("build")
@click.argument("n", type=int)
@click.argument("r", type=int)
@click.option("--dim", "k", type=int, default=None, help="Also list the cells of dimension K.")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write the cell list to this file instead of stdout.")
@click.pass_obj
def command(ctx: deps.CommandContext, n: int, r: int, k: int | None, out: str | None):
    """f-вектор Y_{N,r} (перечислением и по формуле) и, по желанию, клетки размерности K."""
    if out is not None and k is None:
        raise click.UsageError("--out writes the cell list and needs --dim")
    try:
        spec = deps.get_spec(n, r)
        deps.guard_cell_cap(spec, ctx.settings)
        f = prism_complex.f_vector(spec)
        closed = prism_complex.closed_form_f_vector(spec)
        cells = prism_complex.enumerate_cells(spec, k) if k is not None else None
    except PrismLabError as e:
        deps.fail(ctx, e)

    cell_list = [[list(part) for part in cell.parts] for cell in cells] if cells is not None else None
    if out is not None:
        with open(out, "w", encoding="utf-8") as fh:
            json.dump({"n": n, "r": r, "dim": k, "cells": cell_list}, fh, sort_keys=True)
        cell_list = None

    report = BuildReport(
        n=n,
        r=r,
        dimension=spec.top_dim,
        f_vector=f.as_list(),
        closed_form_f_vector=closed.as_list(),
        euler_characteristic=f.euler_characteristic,
        dim=k,
        cells=cell_list,
        out=out,
    )
    lines = [
        f"{spec}: dimension {spec.top_dim}",
        "f-vector:    " + " ".join(str(x) for x in report.f_vector),
        "closed form: " + " ".join(str(x) for x in report.closed_form_f_vector),
        f"euler characteristic: {report.euler_characteristic}",
    ]
    if cells is not None:
        lines.append(f"{len(cells)} cells of dimension {k}" + (f" written to {out}" if out else ":"))
        if out is None:
            lines.extend(str(cell) for cell in cells)
    code = deps.EXIT_OK if report.f_vector == report.closed_form_f_vector else deps.EXIT_FAILURE
    deps.emit(ctx, report, lines, code=code)
