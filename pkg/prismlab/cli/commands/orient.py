# prismlab/cli/commands/orient.py
import click

from prismlab import schemas
from prismlab.cli import deps
from prismlab.core.errors import PrismLabError
from prismlab.services import orientation


@click.command("orient")
@click.argument("complex_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", type=click.Choice([orientation.MODE_O, orientation.MODE_CLASSICAL]),
              default=orientation.MODE_O, show_default=True)
@click.pass_obj
def command(ctx: deps.CommandContext, complex_path: str, mode: str):
    """Поиск ориентации общего призматического комплекса, заданного JSON-файлом."""
    try:
        with open(complex_path, "rb") as fh:
            description = fh.read()
        verdict = orientation.search_orientation(
            description, mode, exhaustive_limit=ctx.settings.EXHAUSTIVE_SEARCH_MAX_TOP_CELLS
        )
    except PrismLabError as e:
        deps.fail(ctx, e)

    report = schemas.OrientabilityVerdictSchema.from_model(verdict)
    lines = [
        f"{mode}-orientation: {'SAT' if verdict.satisfiable else 'UNSAT'} "
        f"({verdict.method}, {verdict.components} component(s))"
    ]
    lines.extend(f"  {reason}" for reason in verdict.reasons)
    if verdict.witness is not None:
        lines.extend(f"  {top}: {sign:+d}" for top, sign in verdict.witness.items())
    deps.emit(ctx, report, lines, code=deps.EXIT_OK if verdict.satisfiable else deps.EXIT_FAILURE)
