# prismlab/core/__init__.py
