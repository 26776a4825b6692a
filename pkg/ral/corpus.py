import os
import json

from . import AST
from .Feature import Feature
from .helper import digest64
from .Logger import getLogger
from .strategy.Generator import GeneratorConfig, generate_instance
from .compiler.Blowup import blowup_family
from .tqbf.Qbf import QbfFormula, Var

logger = getLogger(__name__)

KINDS = ('strategies', 'qbf', 'blowup-family')

### Every matrix over the variables `names` with exactly `size` AST nodes,
### built from not/and/or/implies (binary) and the variables themselves.
def matrices(names, size):
    memo = {}

    def walk(n):
        if n in memo:
            return memo[n]
        res = []
        if n == 1:
            res = [Var(x) for x in names]
        else:
            res += [AST.Not(x) for x in walk(n - 1)]
            for a in range(1, n - 1):
                for left in walk(a):
                    for right in walk(n - 1 - a):
                        res.append(AST.And(left, right))
                        res.append(AST.Or(left, right))
                        res.append(AST.Implies(left, right))
        memo[n] = res
        return res

    return walk(size)

### @public: closed QBF over x1..xn (n <= max_vars) mentioning xn, matrices of at most max_size nodes
def qbf_corpus(max_vars=3, max_size=7):
    for n in range(1, max_vars + 1):
        names = ['x{}'.format(i) for i in range(1, n + 1)]
        prefixes = []
        for mask in range(2 ** n):
            prefixes.append([('forall' if mask >> (n - 1 - i) & 1 else 'exists', x) for i, x in enumerate(names)])
        for size in range(1, max_size + 1):
            for m in matrices(names, size):
                if not names[-1] in set(x.name for x in m.getAtoms()):
                    continue
                for prefix in prefixes:
                    yield QbfFormula(prefix, m)

def strategy_corpus(count, seed, config=GeneratorConfig(), feature=Feature()):
    for i in range(count):
        yield generate_instance(digest64(seed, i), config, feature)

### @public: [(relative path, text)] in a fixed order; identical arguments give identical bytes
def corpus_gen(kind, seed=0, count=100, config=GeneratorConfig(), depths=(1, 2, 3, 4, 5),
        max_vars=3, max_size=7, feature=Feature()):
    if not kind in KINDS:
        raise ValueError("unknown corpus kind '{}'".format(kind))
    res = []
    if kind == 'strategies':
        width = len(str(max(count - 1, 0)))
        for i, s in enumerate(strategy_corpus(count, seed, config, feature)):
            res.append(("strategies/{}.json".format(str(i).zfill(width)), s.dumps() + '\n'))
    elif kind == 'qbf':
        lines = [f.to_infix() for f in qbf_corpus(max_vars, max_size)]
        res.append(("qbf/corpus.txt", '\n'.join(lines) + '\n'))
        res.append(("qbf/summary.json", json.dumps({'max_vars': max_vars, 'max_size': max_size,
            'count': len(lines)}, sort_keys=True) + '\n'))
    else:
        for m in depths:
            res.append(("blowup/B{}.json".format(m), blowup_family(m, 'full', feature).dumps() + '\n'))
    logger.info("corpus_gen: {} -> {} files".format(kind, len(res)))
    return res

def write_corpus(entries, directory):
    for path, text in entries:
        target = os.path.join(directory, path)
        os.makedirs(os.path.dirname(target), exist_ok=True)
        with open(target, 'w') as f:
            f.write(text)
