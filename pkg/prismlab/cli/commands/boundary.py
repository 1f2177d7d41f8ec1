# prismlab/cli/commands/boundary.py
import click
from pydantic import ValidationError

from prismlab import schemas
from prismlab.cli import deps
from prismlab.core.errors import DimensionError, PrismLabError, PrismParseError
from prismlab.models.cell import SignedCell
from prismlab.services import prism_complex


@click.command("boundary")
@click.argument("n", type=int)
@click.argument("r", type=int)
@click.argument("cell_json")
@click.pass_obj
def command(ctx: deps.CommandContext, n: int, r: int, cell_json: str):
    """Граница клетки в кодировке цепей; клетка задается как {"parts": [[0], [1, 3]]}."""
    try:
        spec = deps.get_spec(n, r)
        try:
            cell = schemas.CellSchema.model_validate_json(cell_json).to_model()
        except ValidationError as e:
            raise PrismParseError(f"malformed cell: {e}") from e
        if cell.r != spec.r or max(cell.vertices) >= spec.vertex_count:
            raise DimensionError(f"{cell} is not a cell of {spec}")
        chain = prism_complex.boundary(SignedCell(cell, 1))
        squared = prism_complex.boundary_chain(chain)
    except PrismLabError as e:
        deps.fail(ctx, e)

    report = schemas.BoundaryReport(
        n=n,
        r=r,
        cell=schemas.CellSchema.model_validate(cell),
        boundary=schemas.ChainSchema.from_model(chain),
        boundary_squared_zero=squared.is_zero(),
    )
    lines = [f"d{cell} ="]
    lines.extend(f"  {coef:+d} {face}" for face, coef in chain.items())
    deps.emit(ctx, report, lines)
