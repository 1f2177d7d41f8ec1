# prismlab/cli/commands/tverberg.py
import click

from prismlab import schemas
from prismlab.cli import deps
from prismlab.core.errors import PrismLabError, TheoremViolationError
from prismlab.services import tverberg as tverberg_service


@click.command("tverberg")
@click.option("--dim", "d", type=click.IntRange(min=1), required=True, help="Ambient dimension d.")
@click.option("--parts", "r", type=click.IntRange(min=2), required=True, help="Number of parts r.")
@click.option("--points", "points_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="One point per line, coordinates as integers or p/q.")
@click.option("--ttt", is_flag=True, help="Treat the points as vertex images of an affine map on the simplex boundary.")
@click.pass_obj
def command(ctx: deps.CommandContext, d: int, r: int, points_path: str, ttt: bool):
    """
    Поиск разбиения на r частей с пересекающимися выпуклыми оболочками.
    При числе точек >= (d+1)(r-1)+1 отсутствие разбиения - нарушение теоремы (код 1).
    """
    try:
        with open(points_path, encoding="utf-8") as fh:
            config = tverberg_service.parse_points(fh.read(), d)
        guarantee = len(config) >= config.tverberg_bound(r)
        ttt_result = tverberg_service.affine_ttt_check(config, r) if ttt else None
        certificate = ttt_result.certificate if ttt_result else tverberg_service.tverberg_search(config, r)
    except TheoremViolationError as e:
        report = schemas.TverbergReport(
            dim=d, parts=r, points=len(config), guarantee=True, found=False,
            theorem_violation=True, message=str(e),
        )
        deps.emit(ctx, report, [f"THEOREM VIOLATION: {e}"], code=deps.EXIT_FAILURE)
    except PrismLabError as e:
        deps.fail(ctx, e)

    if certificate is None:
        report = schemas.TverbergReport(
            dim=d, parts=r, points=len(config), guarantee=guarantee, found=False,
            message=f"no {r}-partition with intersecting hulls (below the bound {config.tverberg_bound(r)})",
        )
        deps.emit(ctx, report, [report.message], code=deps.EXIT_FAILURE)

    verified = tverberg_service.verify_certificate(config, certificate)
    report = schemas.TverbergReport(
        dim=d,
        parts=r,
        points=len(config),
        guarantee=guarantee,
        found=True,
        certificate=schemas.PartitionCertificateSchema.from_model(certificate),
        verified=verified,
        ttt=schemas.TverbergReport.ttt_faces(ttt_result, len(config) - 1) if ttt_result else None,
        message="certificate verified" if verified else "certificate failed exact verification",
    )
    lines = [f"partition of {len(config)} points in R^{d} into {r} parts:"]
    for block, weights in zip(report.certificate.parts, report.certificate.coefficients):
        lines.append("  {" + ", ".join(str(i) for i in block) + "}  weights " + " ".join(weights.weights))
    lines.append("  common point: (" + ", ".join(report.certificate.witness) + ")")
    if report.ttt is not None:
        lines.append("  complementary faces of dimensions " + " ".join(str(k) for k in report.ttt.face_dims))
    lines.append(f"  {report.message}")
    deps.emit(ctx, report, lines, code=deps.EXIT_OK if verified else deps.EXIT_FAILURE)
