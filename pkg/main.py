"""CLI entry point for the fishburn toolkit."""

import sys

from dotenv import load_dotenv

from src.fishburn.cli import run

load_dotenv()


def main() -> None:
    """CLI entry point."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
