# prismlab/cli/__init__.py
