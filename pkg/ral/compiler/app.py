import json

from ..Exceptions import *
from ..RunConfig import int_list
from ..helper import format_rational
from ..strategy.app import load_instance
from .Marking import mark_strong
from .Compile import compile_checked
from .Blowup import blowup_report, probabilistic_complexity, FAMILIES

### Proof bundle as `proof check` reads it
def proof_bundle(s, proof, declared):
    return {
        'predicates': s.ground_truth.to_json()['predicates'],
        'axioms': [x.to_dsl() for x in declared],
        'proof': proof.to_json(),
    }

def run_cmd(config, report):
    s = load_instance(config)
    marking = mark_strong(s, config.profile)
    try:
        proof, verdict, c = compile_checked(s, marking)
    except NotDerivable as e:
        report.record({'verdict': 'reject', 'reason': str(e), 'p': format_rational(marking.root.p),
            'epsilon': format_rational(s.epsilon)})
        return False
    if config.proof_out:
        with open(config.proof_out, 'w') as f:
            f.write(json.dumps(proof_bundle(s, proof, c.declared), sort_keys=True, indent=1) + '\n')
    prob = probabilistic_complexity(s, marking)
    report.record({
        'p': format_rational(marking.root.p),
        'epsilon': format_rational(s.epsilon),
        'prob_complexity': prob,
        'compiled_size': c.full_size,
        'serialized_size': proof.size(),
        'lines': len(proof),
        'theorem': proof.theorem.to_dsl(),
        'verdict': 'accept' if verdict else 'reject',
    })
    return bool(verdict)

def blowup_cmd(config, report):
    res = blowup_report(int_list(config.depths), config.family, config.feature)
    for row in res.rows:
        report.record(row)
    if config.format == 'json':
        report.record(res.summary())
    return bool(res)

def register(subparsers, common):
    parser = subparsers.add_parser('compile', help='compile strategies into proofs')
    commands = parser.add_subparsers(dest='subcommand', metavar='command')
    commands.required = True

    p = commands.add_parser('run', parents=[common], help='compile one strategy and re-check the proof')
    p.add_argument("--proof-out", default=None, help='write the proof bundle here')
    p.set_defaults(handler=run_cmd)

    p = commands.add_parser('blowup', parents=[common], help='compiled size against probabilistic complexity')
    p.add_argument("--depths", default='1,2,3,4,5')
    p.add_argument("--family", choices=FAMILIES, default='full')
    p.set_defaults(handler=blowup_cmd)
