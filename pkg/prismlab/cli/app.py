# prismlab/cli/app.py
import click

from prismlab.cli import deps
from prismlab.cli.commands import build, boundary, verify, orient, homology, quotient, tverberg, export_matrix
from prismlab.core.config import get_settings
from prismlab.core.logging import setup_logging


@click.group()
@click.option("--format", "output_format", type=click.Choice(["json", "text"]), default="json",
              show_default=True, help="JSON (sorted keys) or human-readable text.")
@click.option("--verbose", is_flag=True, help="Debug logging to stderr.")
@click.pass_context
def cli(ctx: click.Context, output_format: str, verbose: bool) -> None:
    """Prism complexes Y_{N,r}: cells, O-orientation, homology, S_r quotients, Tverberg checks."""
    settings = get_settings()
    setup_logging("DEBUG" if verbose else settings.LOG_LEVEL)
    ctx.obj = deps.CommandContext(settings=settings, output_format=output_format)


# Каждая команда живет в своем модуле
cli.add_command(build.command)
cli.add_command(boundary.command)
cli.add_command(verify.command)
cli.add_command(orient.command)
cli.add_command(homology.command)
cli.add_command(quotient.command)
cli.add_command(tverberg.command)
cli.add_command(export_matrix.command)
