# prismlab/cli/commands/verify.py
import click

from prismlab.cli import deps
from prismlab.core.errors import PrismLabError
from prismlab.schemas.report import CheckResult, VerifyReport
from prismlab.services import orientation, prism_complex, symmetry


@click.command("verify")
@click.argument("n", type=int)
@click.argument("r", type=int)
@click.pass_obj
def command(ctx: deps.CommandContext, n: int, r: int):
    """∂∂ = 0, r родителей у каждой клетки коразмерности 1, свободность S_r, согласованность O."""
    try:
        spec = deps.get_spec(n, r, require_nondegenerate=True)
        deps.guard_cell_cap(spec, ctx.settings)
        squared = prism_complex.boundary_squared_violations(spec)
        parents = prism_complex.parent_count_violations(spec)
        free = symmetry.verify_free_action(spec)
        coherence = orientation.verify_o_orientability(spec)
    except PrismLabError as e:
        deps.fail(ctx, e)

    checks = [
        CheckResult(
            name="boundary_squared_zero",
            passed=not squared,
            details={"violations": [str(c) for c in squared[:10]], "violation_count": len(squared)},
        ),
        CheckResult(
            name="parent_count",
            passed=not parents,
            details={"expected": r, "violations": {str(c): m for c, m in list(parents.items())[:10]},
                     "violation_count": len(parents)},
        ),
        CheckResult(
            name="free_action",
            passed=free.passed,
            details={"group_order": free.group_order, "fixed_pairs": len(free.fixed_pairs),
                     "orbit_counts": list(free.orbit_counts)},
        ),
        CheckResult(
            name="o_orientation_coherent",
            passed=coherence.passed and coherence.parent_count_ok,
            details={"codim1_cells": coherence.codim1_count,
                     "violations": [str(c) for c in coherence.violations[:10]],
                     "violation_count": len(coherence.violations)},
        ),
    ]
    report = VerifyReport(n=n, r=r, passed=all(c.passed for c in checks), checks=checks)
    lines = [f"{spec}:"] + [f"  {'ok  ' if c.passed else 'FAIL'} {c.name}" for c in checks]
    deps.emit(ctx, report, lines, code=deps.EXIT_OK if report.passed else deps.EXIT_FAILURE)
