# prismlab/core/errors.py
"""
Иерархия исключений. Сервисы бросают их, CLI переводит в коды выхода
(аналогично тому, как слой API переводит ошибки в HTTP-статусы).
"""


class PrismLabError(ValueError):
    """Базовая ошибка библиотеки."""


class InvalidSpecError(PrismLabError):
    """Параметры (N, r) вне допустимой области, в том числе N < r - 1."""


class DegenerateSpecError(PrismLabError):
    """N < r: у последней части нет места для упорядочения, O-рецепт не определен."""


class EmptyDomainError(PrismLabError):
    """Размерность k вне диапазона 0..N-r+1."""


class DimensionError(PrismLabError):
    """Клетка не той размерности (например, не верхняя) или k вне диапазона."""


class IncomparableStringsError(PrismLabError):
    """Строки ориентации не являются перестановками одного набора символов."""


class PrismParseError(PrismLabError):
    """Некорректное описание комплекса, файла точек или текстовой матрицы."""


class FreenessViolationError(PrismLabError):
    """Число клеток не делится на r!: действие S_r не свободно."""


class DimensionMismatchError(PrismLabError):
    """Точки разной размерности или размерность не совпадает с заявленной d."""


class PointCountError(PrismLabError):
    """Неверное число образов вершин для аффинной проверки TTT."""


class TheoremViolationError(PrismLabError):
    """Поиск не нашел разбиение Тверберга там, где оно обязано существовать."""


class CellCapExceededError(PrismLabError):
    """Спецификация превышает ограничение на число клеток."""
