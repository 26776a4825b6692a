from ..Proof import load_bundle
from .SmtlibCapability import proof_obligations

def obligations_cmd(config, report):
    proof, _ = load_bundle(config.read_json())
    scripts = proof_obligations(proof)
    if config.format == 'json':
        for i, text in scripts:
            report.record({'line': i, 'expected': 'unsat', 'smt2': text})
    else:
        for i, text in scripts:
            report.value(text.rstrip('\n'))
    return True

def register(commands, common):
    p = commands.add_parser('smt2', parents=[common], help='SMT-LIB obligations of the tautological steps')
    p.set_defaults(handler=obligations_cmd)
