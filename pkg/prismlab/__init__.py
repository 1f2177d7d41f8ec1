# prismlab/__init__.py
"""Призматические CW-комплексы Y_{N,r}, O-ориентация, гомологии и проверки Тверберга."""

__version__ = "0.1.0"
