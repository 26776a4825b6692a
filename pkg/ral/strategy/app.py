from ..Exceptions import *
from ..helper import format_rational
from .Instance import StrategyInstance, validate
from .Engine import run_sample, exact_success_prob, mc_success_prob
from .Generator import GeneratorConfig
from ..compiler.Soundness import soundness_harness

def load_instance(config):
    return StrategyInstance.from_json(config.read_json(), config.feature)

def validate_cmd(config, report):
    s = load_instance(config)
    res = validate(s)
    report.record(res.to_json())
    return bool(res)

def run_cmd(config, report):
    s = load_instance(config)
    for i in range(config.index, config.index + config.samples):
        for record in run_sample(s, config.seed, i).to_json_lines():
            report.record(record)
    return True

def exact_cmd(config, report):
    s = load_instance(config)
    p = exact_success_prob(s, config.profile)
    report.scalar('p', format_rational(p))
    return True

def mc_cmd(config, report):
    s = load_instance(config)
    res = mc_success_prob(s, config.samples, config.seed, config.jobs)
    report.record(res.to_json())
    return True

def soundness_cmd(config, report):
    generator = GeneratorConfig(max_N=config.max_N, max_depth=config.max_depth, max_atoms=config.max_atoms)
    res = soundness_harness(generator, config.trials, config.seed, config.feature)
    record = res.to_json()
    if config.format != 'json':
        record.pop('counterexamples')
    report.record(record)
    return bool(res)

def register(subparsers, common):
    parser = subparsers.add_parser('strategy', help='probabilistic proof strategies')
    commands = parser.add_subparsers(dest='subcommand', metavar='command')
    commands.required = True

    p = commands.add_parser('validate', parents=[common], help='check the well-formedness rules')
    p.set_defaults(handler=validate_cmd)

    p = commands.add_parser('run', parents=[common], help='sample transcripts as JSON lines')
    p.add_argument("--index", type=int, default=0, help='first sample index (default: 0)')
    p.add_argument("--samples", type=int, default=1)
    p.set_defaults(handler=run_cmd)

    p = commands.add_parser('exact', parents=[common], help='exact success probability')
    p.set_defaults(handler=exact_cmd)

    p = commands.add_parser('mc', parents=[common], help='Monte Carlo success estimate')
    p.add_argument("--samples", type=int, default=10000)
    p.set_defaults(handler=mc_cmd)

    p = commands.add_parser('soundness', parents=[common], help='soundness harness over generated instances')
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-N", dest='max_N', type=int, default=4)
    p.add_argument("--max-depth", type=int, default=3)
    p.add_argument("--max-atoms", type=int, default=12)
    p.set_defaults(handler=soundness_cmd)
