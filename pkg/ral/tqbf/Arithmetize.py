### Arithmetization of a prenex QBF over GF(2^k).
###
### Operators are listed outermost first: Q1 x1, L(x1), Q2 x2, L(x1), L(x2), ...,
### Qn xn, L(x1) ... L(xn), then the matrix. In characteristic 2, 1 - a = 1 + a,
### so the connectives become
###
### not a   -> 1 + a
### a and b -> a * b
### a or b  -> 1 + (1 + a)(1 + b)
### forall  -> f(0) * f(1)
### exists  -> 1 + (1 + f(0))(1 + f(1))
### L(x)    -> x * f(1) + (1 + x) * f(0)
###
### and every operator suffix agrees with the boolean value on 0/1 points.
from .. import AST
from ..Exceptions import *
from ..Feature import Feature, FeatureCapability
from ..ProfileCapability import ProfileCapability
from ..Logger import getLogger
from .Field import GF2k
from .Poly import interpolate
from .Qbf import QbfFormula, Var

logger = getLogger(__name__)

LINEAR = 'linear'

def operators(f):
    res = []
    for i, (q, x) in enumerate(f.prefix):
        res.append((q, x))
        for _, y in f.prefix[:i + 1]:
            res.append((LINEAR, y))
    return res

### Per-variable degree of the arithmetized matrix
def matrix_degrees(expr):
    if isinstance(expr, Var):
        return {expr.name: 1}
    if isinstance(expr, AST.Const):
        return {}
    if isinstance(expr, AST.Not):
        return matrix_degrees(expr.v1)
    if isinstance(expr, (AST.And, AST.Or, AST.Implies)):
        res = {}
        for x in expr.v:
            for name, d in matrix_degrees(x).items():
                res[name] = res.get(name, 0) + d
        return res
    raise UnhandledCaseError("expr: {}".format(expr))

### @public: value of the arithmetized matrix at a field point {name: element}
def matrix_value(field, expr, point):
    if isinstance(expr, Var):
        return point[expr.name]
    if isinstance(expr, AST.Top):
        return 1
    if isinstance(expr, AST.Bot):
        return 0
    if isinstance(expr, AST.Not):
        return 1 ^ matrix_value(field, expr.v1, point)
    if isinstance(expr, AST.And):
        res = 1
        for x in expr.v:
            res = field.mul(res, matrix_value(field, x, point))
        return res
    if isinstance(expr, AST.Or):
        res = 1
        for x in expr.v:
            res = field.mul(res, 1 ^ matrix_value(field, x, point))
        return 1 ^ res
    if isinstance(expr, AST.Implies):
        return 1 ^ field.mul(matrix_value(field, expr.left, point), 1 ^ matrix_value(field, expr.right, point))
    raise UnhandledCaseError("expr: {}".format(expr))

class Arithmetization(FeatureCapability, ProfileCapability):
    def __init__(self, f, k, feature=Feature()):
        FeatureCapability.__init__(self, feature)
        assert isinstance(f, QbfFormula)
        if len(f.prefix) > feature.qbf_protocol_bound:
            raise BoundExceededError("{} variables exceed the protocol bound {}".format(len(f.prefix), feature.qbf_protocol_bound))
        self.formula = f
        self.field = GF2k(k)
        self.ops = operators(f)
        self.free = self.__free_variables()
        self.degrees = self.__degrees()
        for p, d in enumerate(self.round_degrees()):
            if d >= self.field.order:
                raise BoundExceededError("round {} has degree {} but {} has only {} points".format(p, d, self.field, self.field.order))
        self.memo = {}

    def __repr__(self):
        return "{}({}, {}, rounds={})".format(self.__class__.__name__, self.formula.to_infix(), self.field, len(self.ops))

    ### free[p]: variables free in the suffix ops[p:], in prefix order
    def __free_variables(self):
        names = self.formula.variables
        res = []
        bound = 0
        for q, x in self.ops:
            res.append(names[:bound])
            if q != LINEAR:
                bound += 1
        res.append(names)
        return res

    ### degrees[p]: per-variable degree of the suffix ops[p:] applied to the matrix
    def __degrees(self):
        res = [None] * (len(self.ops) + 1)
        current = matrix_degrees(self.formula.matrix)
        res[len(self.ops)] = dict(current)
        for p in reversed(range(len(self.ops))):
            q, x = self.ops[p]
            if q == LINEAR:
                current = dict(current)
                if current.get(x, 0) > 0:
                    current[x] = 1
            else:
                current = dict((y, 2 * d) for y, d in current.items() if y != x)
            res[p] = current
        return res

    @property
    def rounds(self):
        return len(self.ops)

    def round_degree(self, p):
        _, x = self.ops[p]
        return self.degrees[p + 1].get(x, 0)

    def round_degrees(self):
        return [self.round_degree(p) for p in range(len(self.ops))]

    def matrix(self, point):
        return matrix_value(self.field, self.formula.matrix, point)

    ### E_p(point): the suffix ops[p:] evaluated with its free variables at `point`
    def value(self, p, point):
        if p == len(self.ops):
            return self.matrix(point)
        key = (p, tuple(point[x] for x in self.free[p]))
        if key in self.memo:
            return self.memo[key]
        field = self.field
        q, x = self.ops[p]
        if q == LINEAR and point[x] in (0, 1):
            res = self.value(p + 1, point)
        else:
            v0 = self.value(p + 1, dict(point, **{x: 0}))
            v1 = self.value(p + 1, dict(point, **{x: 1}))
            if q == 'forall':
                res = field.mul(v0, v1)
            elif q == 'exists':
                res = 1 ^ field.mul(1 ^ v0, 1 ^ v1)
            else:
                a = point[x]
                res = field.mul(a, v1) ^ field.mul(1 ^ a, v0)
        self.memo[key] = res
        return res

    ### The true round-p polynomial in the round variable, by interpolation on 0..d
    def restriction(self, p, point):
        _, x = self.ops[p]
        d = self.round_degree(p)
        xs = list(range(d + 1))
        ys = [self.value(p + 1, dict(point, **{x: v})) for v in xs]
        return interpolate(self.field, xs, ys)

    def to_json(self):
        return {
            'formula': self.formula.to_infix(),
            'k': self.field.k,
            'modulus': hex(self.field.modulus),
            'operators': [[q, x] for q, x in self.ops],
            'degrees': self.round_degrees(),
        }

### @public
def arithmetize(f, k, feature=Feature()):
    return Arithmetization(f, k, feature)
