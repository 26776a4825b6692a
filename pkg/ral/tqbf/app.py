import math

from .. import Tactic
from ..Exceptions import *
from ..RunConfig import int_list
from ..helper import format_rational
from ..strategy.Instance import validate
from ..strategy.Engine import mc_success_prob
from .Qbf import brute_eval
from .parse import parse_qbf
from .Arithmetize import arithmetize
from .Prover import run_protocol, acceptance_rate, soundness_bound
from .Cheater import optimal_cheater_value
from .Export import export_strategy, export_compile_sizes
from .Smt import qbf_to_smt2, shannon_eval

def load_formula(config):
    return parse_qbf(config.read_input())

def eval_cmd(config, report):
    f = load_formula(config)
    value = brute_eval(f, config.feature)
    if config.cross_check:
        oracle = shannon_eval(f, config.feature)
        if oracle != value:
            report.record({'value': value, 'shannon': oracle, 'verdict': 'violation'})
            return False
    report.scalar('value', 'true' if value else 'false')
    return True

def prove_cmd(config, report):
    f = load_formula(config)
    if config.seeds == 1:
        run = run_protocol(f, Tactic.Honest(), config.k, config.seed, config.feature)
        for record in run.to_json_lines():
            report.record(record)
        return bool(run)
    res = acceptance_rate(f, Tactic.Honest(), config.k, config.seeds, config.seed, config.feature)
    report.record(res.to_json())
    return res.accepted == res.seeds

### Acceptance of a dishonest prover over --seeds consecutive seeds. On a
### false formula the rate must stay within the degree bound plus three
### standard deviations; on a true one the cheater has nothing to gain.
def cheat_cmd(config, report):
    f = load_formula(config)
    tactic = config.feature.tactic
    res = acceptance_rate(f, tactic, config.k, config.seeds, config.seed, config.feature)
    record = res.to_json()
    record['truth'] = brute_eval(f, config.feature)
    bound = soundness_bound(res.arith)
    if config.exact:
        record['optimal'] = format_rational(optimal_cheater_value(res.arith, config.feature))
    if record['truth']:
        report.record(record)
        return True
    sigma = math.sqrt(float(bound) * (1 - float(bound)) / res.seeds) if bound < 1 else 0.0
    ok = float(res.rate) <= float(bound) + 3 * sigma
    record['verdict'] = 'ok' if ok else 'violation'
    report.record(record)
    return ok

def export_cmd(config, report):
    f = load_formula(config)
    run = run_protocol(f, Tactic.Honest(), config.k, config.seed, config.feature)
    s = export_strategy(run, config.epsilon(), config.feature)
    if config.strategy_out:
        with open(config.strategy_out, 'w') as out:
            out.write(s.dumps() + '\n')
    violations = validate(s)
    record = {'rounds': len(run.records), 'epsilon': format_rational(s.epsilon)}
    record.update(violations.to_json())
    if config.samples:
        record.update(mc_success_prob(s, config.samples, config.seed, config.jobs).to_json())
    report.record(record)
    return bool(violations)

def sizes_cmd(config, report):
    f = load_formula(config)
    rows = export_compile_sizes(f, int_list(config.ks), config.seed, config.feature)
    for row in rows:
        report.record(row)
    sizes = [r['compiled_size'] for r in rows]
    return all(a < b for a, b in zip(sizes, sizes[1:]))

def smt2_cmd(config, report):
    report.value(qbf_to_smt2(load_formula(config)).rstrip('\n'))
    return True

def degrees_cmd(config, report):
    arith = arithmetize(load_formula(config), config.k, config.feature)
    report.record({'k': config.k, 'degrees': arith.round_degrees(),
        'bound': format_rational(soundness_bound(arith))})
    return True

def register(subparsers, common):
    parser = subparsers.add_parser('tqbf', help='interactive protocol for closed QBF')
    commands = parser.add_subparsers(dest='subcommand', metavar='command')
    commands.required = True

    p = commands.add_parser('eval', parents=[common], help='truth value by brute force')
    p.add_argument("--cross-check", action="store_true", help='compare against Shannon expansion')
    p.set_defaults(handler=eval_cmd)

    p = commands.add_parser('prove', parents=[common], help='honest prover run(s)')
    p.add_argument("--k", type=int, default=8, help='field GF(2^k) (default: 8)')
    p.add_argument("--seeds", type=int, default=1)
    p.set_defaults(handler=prove_cmd)

    p = commands.add_parser('cheat', parents=[common], help='dishonest prover acceptance')
    p.add_argument("--k", type=int, default=8)
    p.add_argument("--seeds", type=int, default=1000)
    p.add_argument("--tactic", choices=['cheat', 'optimal'], default='cheat')
    p.add_argument("--exact", action="store_true", help='also report the optimal cheater value')
    p.set_defaults(handler=cheat_cmd)

    p = commands.add_parser('export', parents=[common], help='honest run as a probabilistic strategy')
    p.add_argument("--k", type=int, default=8)
    p.add_argument("--epsilon", default=None, help='capital (default: sum of round deltas)')
    p.add_argument("--samples", type=int, default=0, help='Monte Carlo samples of the export')
    p.add_argument("--strategy-out", default=None)
    p.set_defaults(handler=export_cmd)

    p = commands.add_parser('sizes', parents=[common], help='compiled size of the export per field size')
    p.add_argument("--ks", default='2,3,4')
    p.set_defaults(handler=sizes_cmd)

    p = commands.add_parser('degrees', parents=[common], help='round degrees and the soundness bound')
    p.add_argument("--k", type=int, default=8)
    p.set_defaults(handler=degrees_cmd)

    p = commands.add_parser('smt2', parents=[common], help='quantified SMT-LIB script')
    p.set_defaults(handler=smt2_cmd)
