import logging
import sys


class StandardErrorHandler(logging.StreamHandler):
    """Stream handler that writes to whatever sys.stderr is at emit time."""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


logging_config = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'f': {
            'format': '%(asctime)s %(name)-12s %(levelname)-8s %(message)s'
        }
    },
    'handlers': {
        'h': {
            'class': 'well_pressure.util.logging.StandardErrorHandler',
            'formatter': 'f',
            'level': logging.DEBUG
        }
    },
    'root': {
        'handlers': ['h'],
        'level': logging.INFO
    }
}


def set_verbosity(verbose):
    """Raise the root logger to DEBUG when verbose output is requested."""
    logging.getLogger().setLevel(logging.DEBUG if verbose else logging.INFO)
