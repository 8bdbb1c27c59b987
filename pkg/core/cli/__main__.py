"""Entry point for python -m core.cli."""

from .main import main

if __name__ == "__main__":
    main()
