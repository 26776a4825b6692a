import sys
import argparse

from .Exceptions import *
from .Logger import getLogger, setup
from .Proof import load_bundle, check_proof
from .RunConfig import RunConfig, open_report, int_list
from .corpus import corpus_gen, write_corpus, KINDS
from .strategy.Generator import GeneratorConfig
from .strategy import app as strategy_app
from .compiler import app as compiler_app
from .tqbf import app as tqbf_app
from .kolmo import app as kolmo_app
from .smtlib import app as smtlib_app

VERSION = '0.1.0'

EXIT_ACCEPT = 0
EXIT_REJECT = 1
EXIT_USAGE = 2

logger = getLogger(__name__)

def proof_check_cmd(config, report):
    proof, axioms = load_bundle(config.read_json())
    res = check_proof(proof, axioms, config.feature)
    record = res.to_json()
    record['lines'] = len(proof)
    report.record(record)
    return bool(res)

def corpus_cmd(config, report):
    generator = GeneratorConfig(max_N=config.max_N, max_depth=config.max_depth)
    depths = int_list(config.depths)
    entries = corpus_gen(config.kind, config.seed, config.count, generator, depths,
        config.max_vars, config.max_size, config.feature)
    if config.dir:
        write_corpus(entries, config.dir)
    for path, text in entries:
        report.record({'path': path, 'bytes': len(text.encode('utf-8'))})
    return True

def common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest='input', default=None, help='input file (default: standard input)')
    common.add_argument("--out", default=None, help='report file (default: standard output)')
    common.add_argument("--seed", default=None, help='64-bit seed (default: $RAL_SEED, then 0)')
    common.add_argument("--format", choices=['json', 'tsv', 'text'], default='json')
    common.add_argument("--jobs", type=int, default=1, help='worker processes (default: 1)')
    common.add_argument("--debug", action="store_true")
    common.add_argument("--profile", action="store_true", help='report memo table sizes')
    return common

def build_parser():
    common = common_parser()
    parser = argparse.ArgumentParser(prog='ral',
        description='ral [version {}]: random axioms, probabilistic strategies and their proofs.'.format(VERSION))
    modules = parser.add_subparsers(dest='module', metavar='module')
    modules.required = True

    proof = modules.add_parser('proof', help='proof objects')
    commands = proof.add_subparsers(dest='subcommand', metavar='command')
    commands.required = True
    p = commands.add_parser('check', parents=[common], help='check a proof bundle')
    p.set_defaults(handler=proof_check_cmd)
    smtlib_app.register(commands, common)

    strategy_app.register(modules, common)
    compiler_app.register(modules, common)
    tqbf_app.register(modules, common)
    kolmo_app.register(modules, common)

    corpus = modules.add_parser('corpus', help='deterministic corpora')
    commands = corpus.add_subparsers(dest='subcommand', metavar='kind')
    commands.required = True
    for kind in KINDS:
        p = commands.add_parser(kind, parents=[common])
        p.add_argument("--dir", default=None, help='write the files under this directory')
        p.add_argument("--count", type=int, default=100, help='strategies: number of instances')
        p.add_argument("--max-N", dest='max_N', type=int, default=4)
        p.add_argument("--max-depth", type=int, default=3)
        p.add_argument("--depths", default='1,2,3,4,5', help='blowup-family: depths')
        p.add_argument("--max-vars", type=int, default=3, help='qbf: variable count')
        p.add_argument("--max-size", type=int, default=7, help='qbf: matrix size in AST nodes')
        p.set_defaults(handler=corpus_cmd, kind=kind)
    return parser

### @public: exit code of one command line; the report goes to --out or `stdout`
def dispatch(argv, stdout=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    setup(args.debug)

    try:
        config = RunConfig(args)
        if args.out:
            with open(args.out, 'w') as f:
                ok = run(config, f)
        else:
            ok = run(config, stdout or sys.stdout)
    except (RalError, ValueError, OSError) as e:
        logger.error("{} {}: {}".format(args.module, args.subcommand, e))
        return EXIT_USAGE
    return EXIT_ACCEPT if ok else EXIT_REJECT

def run(config, file):
    report = open_report(config, file)
    ok = config.handler(config, report)
    report.finalize()
    return ok

def main():
    sys.exit(dispatch(sys.argv[1:]))

if __name__ == "__main__":
    main()
