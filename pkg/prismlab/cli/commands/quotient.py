# prismlab/cli/commands/quotient.py
import click

from prismlab import schemas
from prismlab.cli import deps
from prismlab.core.errors import FreenessViolationError, PrismLabError
from prismlab.services import prism_complex, symmetry


@click.command("quotient")
@click.argument("n", type=int)
@click.argument("r", type=int)
@click.option("--orbits", "orbit_dim", type=int, default=None, help="List orbit representatives in dimension K.")
@click.option("--cyclic", is_flag=True, help="Use the cyclic subgroup Z_r instead of S_r.")
@click.option("--signs", is_flag=True, help="Tabulate how each permutation acts on O-signs of top cells.")
@click.pass_obj
def command(ctx: deps.CommandContext, n: int, r: int, orbit_dim: int | None, cyclic: bool, signs: bool):
    """Проверка свободности действия и f-вектор фактора Y_{N,r}/S_r (или /Z_r)."""
    group_name = f"Z_{r}" if cyclic else f"S_{r}"
    try:
        spec = deps.get_spec(n, r, require_nondegenerate=signs)
        deps.guard_cell_cap(spec, ctx.settings)
        group = symmetry.cyclic_group(r) if cyclic else symmetry.symmetric_group(r)
        free = symmetry.verify_free_action(spec, group)
        orbit_report = symmetry.orbit_report(spec, orbit_dim, group) if orbit_dim is not None else None
        table = symmetry.signed_equivariance_report(spec) if signs else None
        f = prism_complex.f_vector(spec)
        if cyclic:
            quotient = list(free.orbit_counts) if free.passed else None
        else:
            quotient = symmetry.quotient_f_vector(spec).as_list()
    except FreenessViolationError:
        # Отчет о неподвижных парах информативнее самой ошибки
        quotient = None
    except PrismLabError as e:
        deps.fail(ctx, e)

    report = schemas.QuotientReport(
        n=n,
        r=r,
        group=group_name,
        f_vector=f.as_list(),
        quotient_f_vector=quotient,
        free_action=schemas.FreeActionReportSchema.from_model(free),
        orbit_report=orbit_report,
        signed_equivariance=table,
    )
    lines = [
        f"{spec} / {group_name}: action {'free' if free.passed else 'NOT free'}",
        "f-vector:          " + " ".join(str(x) for x in report.f_vector),
        "quotient f-vector: " + (" ".join(str(x) for x in quotient) if quotient is not None else "-"),
    ]
    if orbit_report is not None:
        lines.append(f"{len(orbit_report.orbits)} orbits of dimension {orbit_dim}:")
        lines.extend(f"  {o.rep.to_model()}  size {o.size}" for o in orbit_report.orbits)
    if table is not None:
        for sigma, shapes in table.items():
            lines.append(f"  {sigma}: " + ", ".join(
                f"{shape} +{b['preserved']}/-{b['reversed']}" for shape, b in shapes.items()
            ))
    code = deps.EXIT_OK if free.passed and quotient is not None else deps.EXIT_FAILURE
    deps.emit(ctx, report, lines, code=code)
