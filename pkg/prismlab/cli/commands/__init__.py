# prismlab/cli/commands/__init__.py
