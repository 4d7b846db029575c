# pnca/main.py
import sys

from .routers.cli import dispatch


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
