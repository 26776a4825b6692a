import sys
import logging

PREFIXES = {
    logging.DEBUG: '[*]',
    logging.INFO: '[*]',
    logging.WARNING: '[!]',
    logging.ERROR: '[X]',
    logging.CRITICAL: '[X]',
}

class PrefixFormatter(logging.Formatter):
    def format(self, record):
        return "{} {}: {}".format(PREFIXES.get(record.levelno, '[*]'), record.name, record.getMessage())

### All diagnostics go to stderr; stdout carries reports only
def setup(debug=False, stream=None):
    root = logging.getLogger('ral')
    if not root.handlers:
        handler = logging.StreamHandler(stream or sys.stderr)
        handler.setFormatter(PrefixFormatter())
        root.addHandler(handler)
        root.propagate = False
    root.setLevel(logging.DEBUG if debug else logging.WARNING)
    return root

def getLogger(name):
    if not name.startswith('ral'):
        name = 'ral.{}'.format(name)
    return logging.getLogger(name)
