# prismlab/cli/commands/export_matrix.py
import click

from prismlab import schemas
from prismlab.cli import deps
from prismlab.core.errors import PrismLabError
from prismlab.services import homology


@click.command("export-matrix")
@click.argument("n", type=int)
@click.argument("r", type=int)
@click.argument("k", type=int)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write the sparse matrix to this file.")
@click.pass_obj
def command(ctx: deps.CommandContext, n: int, r: int, k: int, out: str | None):
    """Граничная матрица ∂_k в текстовом разреженном формате: "rows cols nnz", затем тройки "i j v"."""
    try:
        spec = deps.get_spec(n, r)
        deps.guard_cell_cap(spec, ctx.settings)
        matrix = homology.boundary_matrix(spec, k)
    except PrismLabError as e:
        deps.fail(ctx, e)

    text = matrix.to_text()
    if out is not None:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    report = schemas.MatrixExport(
        k=k, rows=matrix.rows, cols=matrix.cols, nnz=matrix.nnz,
        path=out, text=None if out is not None else text,
    )
    lines = [f"d_{k}: {matrix.rows}x{matrix.cols}, nnz={matrix.nnz} written to {out}"] if out else text.splitlines()
    deps.emit(ctx, report, lines)
