import logging
import sys
from os import getenv

from src.app import QH2App


def main():
    if not getenv("DEBUG"):
        logging.basicConfig(level=logging.WARNING)
    sys.exit(QH2App().run(sys.argv[1:]))


if __name__ == "__main__":
    main()
