# prismlab/__main__.py
from prismlab.main import cli

cli(prog_name="prismlab")
