# prismlab/main.py
from prismlab.cli.app import cli

if __name__ == "__main__":
    cli()
