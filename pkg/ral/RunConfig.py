import os
import sys
import json

from .Exceptions import *
from .Feature import Feature
from .Writer import FileWriter, ReportWriter
from .helper import parse_rational
from . import Tactic

SEED_ENV = 'RAL_SEED'

### Flags that never change report bytes stay out of the echoed header
UNECHOED = ('handler', 'jobs', 'debug', 'profile', 'out')

def resolve_seed(value, environ=os.environ):
    if value is None:
        value = environ.get(SEED_ENV, '0')
    try:
        seed = int(value)
    except (TypeError, ValueError):
        raise ValueError("seed must be an integer, got '{}'".format(value))
    if not (0 <= seed < 2 ** 64):
        raise ValueError("seed must fit in 64 bits, got {}".format(seed))
    return seed

def int_list(text):
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise ValueError("expected a comma separated integer list, got '{}'".format(text))

### The resolved command line of one run: subcommand, seed, report format,
### input/output paths and the subcommand's own parameters.
class RunConfig:
    def __init__(self, args, environ=os.environ):
        self.args = args
        self.subcommand = "{} {}".format(args.module, args.subcommand)
        self.seed = resolve_seed(getattr(args, 'seed', None), environ)
        self.format = args.format
        self.jobs = args.jobs
        self.feature = Feature(debug=args.debug, jobs=args.jobs,
            tactic=Tactic.from_name(getattr(args, 'tactic', None) or 'honest'))
        self.profile = args.profile

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, self.to_json())

    def __getattr__(self, name):
        if name == 'args':
            raise AttributeError(name)
        return getattr(self.args, name)

    def to_json(self):
        res = {}
        for k, v in sorted(vars(self.args).items()):
            if k in UNECHOED:
                continue
            res[k] = v
        res['seed'] = self.seed
        return res

    def epsilon(self):
        value = getattr(self.args, 'epsilon', None)
        return None if value is None else parse_rational(value)

    def read_input(self):
        path = getattr(self.args, 'input', None)
        if path is None or path == '-':
            return sys.stdin.read()
        with open(path) as f:
            return f.read()

    def read_json(self):
        try:
            return json.loads(self.read_input())
        except json.JSONDecodeError as e:
            raise ParseError("input is not JSON: {}".format(e.msg), e.pos)

### Report writer over --out (or stdout), header already written
def open_report(config, file):
    report = ReportWriter(FileWriter(file), config.format)
    report.header(config.to_json())
    return report
