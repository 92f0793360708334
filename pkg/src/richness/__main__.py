"""Allow ``python -m richness``."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
