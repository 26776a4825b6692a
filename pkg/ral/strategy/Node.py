from fractions import Fraction

from .. import AST
from ..Proof import ProofObject
from ..helper import bitstrings, format_rational

### Deterministic map from a sampled bitstring r to a child node id
class Selector:
    def __call__(self, r):
        raise NotImplementedError()

    def children(self):
        return []

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, self.children())

class ConstantSelector(Selector):
    def __init__(self, child):
        assert isinstance(child, str)
        self.child = child

    def __call__(self, r):
        return self.child

    def children(self):
        return [self.child]

    def to_json(self):
        return {'kind': 'constant', 'child': self.child}

### Explicit child table (N <= 6); `default` covers strings missing from the table
class TableSelector(Selector):
    def __init__(self, table, default=None):
        assert isinstance(table, dict)
        self.table = dict(table)
        self.default = default

    def __call__(self, r):
        if r in self.table:
            return self.table[r]
        if self.default is None:
            raise KeyError("no child for r={}".format(r))
        return self.default

    def children(self):
        res = sorted(set(self.table.values()))
        if self.default is not None and not self.default in res:
            res.append(self.default)
        return res

    def covers(self, N):
        return self.default is not None or all(r in self.table for r in bitstrings(N))

    def to_json(self):
        res = {'kind': 'table', 'children': dict(sorted(self.table.items()))}
        if self.default is not None:
            res['default'] = self.default
        return res

### r in points -> then, otherwise -> else
class SplitSelector(Selector):
    def __init__(self, points, then, otherwise):
        self.points = frozenset(points)
        self.then = then
        self.otherwise = otherwise

    def __call__(self, r):
        return self.then if r in self.points else self.otherwise

    def children(self):
        return sorted(set([self.then, self.otherwise]))

    def to_json(self):
        return {'kind': 'split', 'points': sorted(self.points), 'then': self.then, 'else': self.otherwise}

def selector_from_json(record):
    kind = record.get('kind')
    if kind == 'constant':
        return ConstantSelector(record['child'])
    if kind == 'table':
        return TableSelector(record['children'], record.get('default'))
    if kind == 'split':
        return SplitSelector(record['points'], record['then'], record['else'])
    raise ValueError("unknown selector kind: {}".format(kind))

class StrategyNode:
    def __init__(self, id):
        assert isinstance(id, str)
        self.id = id

    def children(self):
        return []

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, self.id)

### Adds `axiom`, justified by a proof whose declared axioms are the accepted set
class InferStep(StrategyNode):
    def __init__(self, id, axiom, justification, child):
        StrategyNode.__init__(self, id)
        assert isinstance(axiom, AST.AST)
        assert isinstance(justification, ProofObject)
        assert isinstance(child, str)
        self.axiom = axiom
        self.justification = justification
        self.child = child

    def children(self):
        return [self.child]

    def to_json(self):
        return {'id': self.id, 'type': 'infer', 'axiom': self.axiom.to_dsl(),
            'justification': self.justification.to_json(), 'child': self.child}

### Certificate forms: 'enumerate' | ('axiom', index into base axioms) | ('proof', ProofObject)
class RandomStep(StrategyNode):
    def __init__(self, id, pred, N, delta, selector, certificate=None):
        StrategyNode.__init__(self, id)
        assert isinstance(pred, str)
        assert isinstance(N, int) and N > 0
        assert isinstance(selector, Selector)
        self.pred = pred
        self.N = N
        self.delta = Fraction(delta)
        self.selector = selector
        self.certificate = certificate

    def __repr__(self):
        return "{}({}, {}/{}, delta={})".format(self.__class__.__name__, self.id, self.pred, self.N, format_rational(self.delta))

    def statement(self):
        return AST.CountAtMost(self.pred, self.N, self.delta)

    def children(self):
        return self.selector.children()

    def certificate_json(self):
        if self.certificate is None:
            return None
        if self.certificate == 'enumerate':
            return 'enumerate'
        kind, value = self.certificate
        if kind == 'axiom':
            return {'axiom': value}
        return {'proof': value.to_json()}

    def to_json(self):
        res = {'id': self.id, 'type': 'random', 'pred': self.pred, 'N': self.N,
            'delta': format_rational(self.delta), 'selector': self.selector.to_json()}
        if self.certificate is not None:
            res['certificate'] = self.certificate_json()
        return res

class Leaf(StrategyNode):
    def __init__(self, id, claim):
        StrategyNode.__init__(self, id)
        assert isinstance(claim, AST.AST)
        self.claim = claim

    def to_json(self):
        return {'id': self.id, 'type': 'leaf', 'claim': self.claim.to_dsl()}
