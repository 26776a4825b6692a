import os

from ..Exceptions import *
from ..RunConfig import int_list
from ..Logger import getLogger
from .Vm import ToyProgram, assemble, vm_run
from .Table import Caps, ComplexityTable, build_table, k_t
from .Experiments import counting_check, sample_axiom, sample_rate, compute_Tn, compute_Tn_factor2, \
    halting_bound_check, calibrate_margin, factor2_check

logger = getLogger(__name__)

def caps_of(config, n=None):
    n_bound = config.n_bound if config.n_bound is not None else max(n or 0, 8)
    return Caps(config.l_max, config.s_max, n_bound)

### --table FILE is loaded when it exists and written after a fresh build
def load_table(config, n):
    path = config.table
    if path and os.path.exists(path):
        table = ComplexityTable.load(path)
        logger.info("load_table: {} from {}".format(table, path))
    else:
        table = build_table(caps_of(config, n), config.feature)
        if path:
            table.save(path)
    if config.profile:
        table.profileMemoryUsage()
    return table

def load_program(config):
    if config.asm is not None:
        return assemble(config.asm)
    if config.program is not None:
        return ToyProgram(config.program)
    return ToyProgram(config.read_input().strip())

def run_cmd(config, report):
    p = load_program(config)
    state = vm_run(p, config.steps, max_output=config.max_output)
    record = p.to_json()
    record.update(state.to_json())
    report.record(record)
    return True

def k_cmd(config, report):
    caps = caps_of(config)
    value = k_t(config.x, config.t if config.t is not None else caps.S_max, caps.L_max)
    report.scalar('k', 'none' if value is None else value)
    return True

def build_cmd(config, report):
    table = load_table(config, None)
    report.record(table.to_json() if config.format == 'json' else {'caps': table.caps.key(), 'strings': len(table.entries)})
    return True

def count_cmd(config, report):
    cs = int_list(config.c) if config.c else list(range(config.n + 1))
    table = load_table(config, config.n)
    ok = True
    for c in cs:
        res = counting_check(config.n, c, table)
        report.record(res)
        ok = ok and res['verdict'] == 'ok'
    return ok

def sample_cmd(config, report):
    c = int(config.c or 0)
    table = load_table(config, config.n)
    if config.samples == 1:
        report.record(sample_axiom(config.n, c, config.seed, table, config.index).to_json())
        return True
    res = sample_rate(config.n, c, config.samples, config.seed, table)
    report.record(res)
    return res['within_3sigma']

def tn_cmd(config, report):
    table = load_table(config, config.n)
    res = compute_Tn(config.n, table)
    res['T2_n'] = compute_Tn_factor2(config.n, table)
    report.record(res)
    return True

def halting_cmd(config, report):
    table = load_table(config, config.n)
    if config.c is None:
        c = calibrate_margin(range(1, config.n + 1), table, config.audit, config.factor2)
        if c is None:
            report.record({'n': config.n, 'verdict': 'violation', 'reason': 'no margin constant found'})
            return False
        logger.info("halting: calibrated margin c={}".format(c))
    else:
        c = int(config.c)
    res = halting_bound_check(config.n, c, table, config.audit, config.factor2)
    report.record(res.to_json())
    return bool(res)

def factor2_cmd(config, report):
    table = load_table(config, config.n)
    res = factor2_check(config.n, table)
    report.record(res)
    return res['verdict'] == 'ok'

def register(subparsers, common):
    parser = subparsers.add_parser('kolmo', help='time-bounded complexity on the toy machine')
    commands = parser.add_subparsers(dest='subcommand', metavar='command')
    commands.required = True

    caps = []
    for name in ('k', 'build', 'count', 'sample', 'tn', 'halting', 'factor2'):
        p = commands.add_parser(name, parents=[common])
        p.add_argument("--l-max", type=int, default=16, help='program length cap in bits (default: 16)')
        p.add_argument("--s-max", type=int, default=10**4, help='step cap (default: 10000)')
        p.add_argument("--n-bound", type=int, default=None, help='string length cap (default: max(n, 8))')
        p.add_argument("--table", default=None, help='binary complexity table to load or write')
        caps.append(p)
    k, build, count, sample, tn, halting, factor2 = caps

    p = commands.add_parser('run', parents=[common], help='run one program')
    p.add_argument("--program", default=None, help='program bits')
    p.add_argument("--asm", default=None, help='assembly, e.g. "OUT1; DUP; HALT"')
    p.add_argument("--steps", type=int, default=10**4)
    p.add_argument("--max-output", type=int, default=1 << 16)
    p.set_defaults(handler=run_cmd)

    k.add_argument("--x", required=True)
    k.add_argument("--t", type=int, default=None, help='time bound (default: --s-max)')
    k.set_defaults(handler=k_cmd)

    build.set_defaults(handler=build_cmd)

    for p in (count, sample, tn, halting, factor2):
        p.add_argument("--n", type=int, required=True)

    count.add_argument("--c", default=None, help='margin(s), comma separated (default: 0..n)')
    count.set_defaults(handler=count_cmd)

    sample.add_argument("--c", default=None)
    sample.add_argument("--samples", type=int, default=1)
    sample.add_argument("--index", type=int, default=0)
    sample.set_defaults(handler=sample_cmd)

    tn.set_defaults(handler=tn_cmd)

    halting.add_argument("--c", default=None, help='margin constant (default: calibrated)')
    halting.add_argument("--audit", type=int, default=None, help='audit step cap (default: max(100 T_n, 1000))')
    halting.add_argument("--factor2", action="store_true")
    halting.set_defaults(handler=halting_cmd)

    factor2.set_defaults(handler=factor2_cmd)
