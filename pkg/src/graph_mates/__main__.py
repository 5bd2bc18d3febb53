"""Allow `python -m graph_mates`."""

from .cli import cli

if __name__ == '__main__':
    cli()
