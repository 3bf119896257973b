"""
Logger setup. One logger per module, all writing to stderr with one format.
"""
import logging
import os
import sys

from dotenv import load_dotenv

load_dotenv()

_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"
_configured = False


def _root_level():
    name = os.getenv("TETRO_LOG_LEVEL", "WARNING").upper()
    return getattr(logging, name, logging.WARNING)


def setup_logger(name, level=None):
    """Return the module logger, installing the shared stderr handler on first use."""
    global _configured
    root = logging.getLogger("tetro")
    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT, datefmt="%H:%M:%S"))
        root.addHandler(handler)
        root.setLevel(_root_level())
        root.propagate = False
        _configured = True
    logger = root.getChild(name)
    if level is not None:
        logger.setLevel(level)
    return logger


def set_verbosity(verbose):
    """-v → INFO, -vv → DEBUG; 0 keeps the env-configured level."""
    if not verbose:
        return
    setup_logger(__name__)
    logging.getLogger("tetro").setLevel(logging.INFO if verbose == 1 else logging.DEBUG)
