# prismlab/cli/commands/homology.py
import click

from prismlab import schemas
from prismlab.cli import deps
from prismlab.core.errors import PrismLabError
from prismlab.services import homology as homology_service


@click.command("homology")
@click.argument("n", type=int)
@click.argument("r", type=int)
@click.option("--unreduced", is_flag=True, help="Report H_k instead of reduced homology.")
@click.pass_obj
def command(ctx: deps.CommandContext, n: int, r: int, unreduced: bool):
    """
    Целочисленные гомологии Y_{N,r} с проверкой связности:
    приведенные H_k = 0 при k <= N-r и H_{N-r+1} != 0.
    """
    reduced = not unreduced
    try:
        spec = deps.get_spec(n, r)
        deps.guard_cell_cap(spec, ctx.settings)
        groups = homology_service.homology(spec, reduced=reduced)
        reduced_groups = groups if reduced else homology_service.to_reduced(groups)
        violations = homology_service.connectivity_violations(spec, reduced_groups)
        chi = homology_service.euler_characteristic(spec)
    except PrismLabError as e:
        deps.fail(ctx, e)

    report = schemas.HomologyReport(
        n=n,
        r=r,
        reduced=reduced,
        groups=[schemas.HomologyGroupSchema.model_validate(g) for g in groups],
        betti=homology_service.betti_numbers(groups),
        euler_characteristic=chi,
        euler_from_homology=homology_service.euler_characteristic_from_homology(groups, reduced=reduced),
        connectivity_ok=not violations,
    )
    prefix = "H~" if reduced else "H"
    lines = [f"{spec}:"] + [f"  {prefix}_{g.dimension} = {g}" for g in groups]
    lines.append(f"  euler characteristic: {chi} (from homology: {report.euler_from_homology})")
    lines.append(f"  connectivity: {'ok' if report.connectivity_ok else 'FAIL in dimensions ' + str(violations)}")
    code = deps.EXIT_OK if report.connectivity_ok and chi == report.euler_from_homology else deps.EXIT_FAILURE
    deps.emit(ctx, report, lines, code=code)
