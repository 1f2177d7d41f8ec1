# prismlab/core/logging.py
import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setup_logging(level: str | int = "WARNING") -> None:
    """Настраивает логгер пакета: вывод в stderr, stdout остается под полезную нагрузку."""
    logger = logging.getLogger("prismlab")
    if isinstance(level, str):
        level = logging.getLevelNamesMapping().get(level.upper(), logging.WARNING)
    logger.setLevel(level)

    # Старый обработчик мог быть привязан к уже закрытому потоку (повторные вызовы CLI)
    for handler in list(logger.handlers):
        if getattr(handler, "_prismlab", False):
            logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._prismlab = True
    logger.addHandler(handler)
