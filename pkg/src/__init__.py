from os import getenv
import logging

__version__ = "0.1.0"

if getenv("DEBUG"):
    logging.basicConfig(level=logging.DEBUG)
