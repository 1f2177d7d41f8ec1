# prismlab/cli/deps.py
"""Общие зависимости команд: контекст, проверка параметров, ограничение размера, вывод."""
import json
import logging
from typing import Iterable, NoReturn

import click
from pydantic import BaseModel

from prismlab.core.config import Settings
from prismlab.core.errors import (
    CellCapExceededError,
    DegenerateSpecError,
    FreenessViolationError,
    PrismLabError,
    TheoremViolationError,
)
from prismlab.models.cell import ComplexSpec
from prismlab.schemas.report import ErrorReport
from prismlab.services import prism_complex

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1 # Проверка не прошла / ничего не найдено
EXIT_USAGE = 2   # Неверные параметры, ошибки разбора, превышение лимита


# Контекст, который группа команд передает каждой команде
class CommandContext:
    def __init__(self, settings: Settings, output_format: str = "json"):
        self.settings = settings
        self.output_format = output_format

    @property
    def is_text(self) -> bool:
        return self.output_format == "text"


def get_spec(n: int, r: int, *, require_nondegenerate: bool = False) -> ComplexSpec:
    if require_nondegenerate and n < r:
        # Проверяем до конструктора, чтобы сообщение было именно о вырожденности
        raise DegenerateSpecError(f"degenerate spec N={n}, r={r}: this command needs N >= r")
    return ComplexSpec(n, r)


def guard_cell_cap(spec: ComplexSpec, settings: Settings) -> None:
    """Отказ до перечисления: число верхних клеток считается по замкнутой формуле."""
    count = prism_complex.top_cell_count(spec)
    if count > settings.MAX_CELLS:
        raise CellCapExceededError(
            f"{spec} has {count} top cells, above the cap {settings.MAX_CELLS} (PRISMLAB_MAX_CELLS)"
        )


def exit_code_for(error: PrismLabError) -> int:
    if isinstance(error, (TheoremViolationError, FreenessViolationError)):
        return EXIT_FAILURE
    return EXIT_USAGE


def render(ctx: CommandContext, payload: BaseModel) -> str:
    return json.dumps(payload.model_dump(mode="json"), sort_keys=True, indent=ctx.settings.JSON_INDENT)


def emit(ctx: CommandContext, payload: BaseModel, text_lines: Iterable[str] | None = None, code: int = EXIT_OK) -> NoReturn:
    if ctx.is_text and text_lines is not None:
        for line in text_lines:
            click.echo(line)
    else:
        click.echo(render(ctx, payload))
    click.get_current_context().exit(code)


def fail(ctx: CommandContext, error: PrismLabError) -> NoReturn:
    code = exit_code_for(error)
    logger.error("%s: %s", type(error).__name__, error)
    report = ErrorReport(
        error=type(error).__name__,
        message=str(error),
        theorem_violation=isinstance(error, TheoremViolationError),
    )
    emit(ctx, report, [f"error: {error}"], code=code)
