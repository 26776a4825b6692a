from itertools import product

from .. import AST
from ..Exceptions import *
from ..Feature import Feature

QUANTIFIERS = ('forall', 'exists')

### Boolean variable of a QBF matrix
class Var(AST.Atom):
    def __init__(self, name):
        assert isinstance(name, str)
        self.name = name

    def __repr__(self):
        return self.name

    def key(self):
        return (self.name,)

    def to_dsl(self):
        return self.name

def variables_of(expr):
    return set(x.name for x in expr.getAtoms() if isinstance(x, Var))

### Prenex QBF: prefix [(quantifier, name)], outermost first
class QbfFormula:
    def __init__(self, prefix, matrix):
        self.prefix = [(q, x) for q, x in prefix]
        self.matrix = matrix
        for q, x in self.prefix:
            assert q in QUANTIFIERS, "quantifier={}".format(q)
        bound = [x for _, x in self.prefix]
        if len(set(bound)) != len(bound):
            raise ParseError("variable bound twice in prefix {}".format(bound))
        free = variables_of(matrix) - set(bound)
        if free:
            raise FreeVariableError("free variable(s): {}".format(', '.join(sorted(free))))

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, self.to_infix())

    def __eq__(a, b):
        return isinstance(b, QbfFormula) and a.prefix == b.prefix and a.matrix == b.matrix

    def __hash__(self):
        return hash(self.to_infix())

    @property
    def variables(self):
        return [x for _, x in self.prefix]

    def to_infix(self):
        res = self.matrix.to_dsl()
        for q, x in reversed(self.prefix):
            res = "({} {} {})".format(q, x, res)
        return res

    def to_json(self):
        return {'prefix': [[q, x] for q, x in self.prefix], 'matrix': self.matrix.to_dsl()}

### Boolean value of a matrix under {name: bool}
def eval_matrix(expr, assignment):
    if isinstance(expr, Var):
        return assignment[expr.name]
    if isinstance(expr, AST.Top):
        return True
    if isinstance(expr, AST.Bot):
        return False
    if isinstance(expr, AST.Not):
        return not eval_matrix(expr.v1, assignment)
    if isinstance(expr, AST.And):
        return all(eval_matrix(x, assignment) for x in expr.v)
    if isinstance(expr, AST.Or):
        return any(eval_matrix(x, assignment) for x in expr.v)
    if isinstance(expr, AST.Implies):
        return (not eval_matrix(expr.left, assignment)) or eval_matrix(expr.right, assignment)
    raise UnhandledCaseError("expr: {}".format(expr))

### @public
def brute_eval(f, feature=Feature()):
    assert isinstance(f, QbfFormula)
    if len(f.prefix) > feature.qbf_brute_bound:
        raise BoundExceededError("{} variables exceed the brute-force bound {}".format(len(f.prefix), feature.qbf_brute_bound))

    def walk(i, assignment):
        if i == len(f.prefix):
            return eval_matrix(f.matrix, assignment)
        q, x = f.prefix[i]
        values = (walk(i + 1, dict(assignment, **{x: v})) for v in (False, True))
        return all(values) if q == 'forall' else any(values)

    return walk(0, {})

### All 0/1 assignments of the prefix variables
def assignments(f):
    names = f.variables
    for values in product((False, True), repeat=len(names)):
        yield dict(zip(names, values))
