"""Allow ``python -m hyper2d`` to run the CLI."""

from .cli import main

main()
