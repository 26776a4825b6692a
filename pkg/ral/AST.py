from fractions import Fraction
from functools import reduce

from .helper import is_bitstring, format_rational

def checkAllItemsAreAST(*z):
    return reduce(lambda r, x: r and (isinstance(x, AST)), z, True)

class AST:
    def __repr__(self):
        return "{}()".format(self.__class__.__name__)

    def describe(self):
        return self.__repr__()

    def __hash__(self):
        if not "_hash" in self.__dict__:
            self._hash = hash(self.to_dsl())
        return self._hash

    def __eq__(a, b):
        return a.__class__ is b.__class__ and a.key() == b.key()

    def key(self):
        return ()

    ### Atoms are the opaque propositional variables of the kernel
    def getAtoms(self):
        return set()

    def getPredAtoms(self):
        return set(x for x in self.getAtoms() if isinstance(x, PredAtom))

    def getCounts(self):
        return set(x for x in self.getAtoms() if isinstance(x, CountAtMost))

    def size(self):
        return 1

    def depth(self):
        return 1

    def to_dsl(self):
        raise NotImplementedError()

class Atom(AST):
    def getAtoms(self):
        return set([self])

class PredAtom(Atom):
    def __init__(self, pred, bits):
        assert isinstance(pred, str)
        assert isinstance(bits, str) and bits and is_bitstring(bits), "bits={}".format(bits)
        self.pred = pred
        self.bits = bits

    def __repr__(self):
        return "{}({})".format(self.pred, self.bits)

    def key(self):
        return (self.pred, self.bits)

    def to_dsl(self):
        return "(pred {} {})".format(self.pred, self.bits)

class GoalAtom(Atom):
    def __init__(self, name):
        assert isinstance(name, str)
        self.name = name

    def __repr__(self):
        return self.name

    def key(self):
        return (self.name,)

    def to_dsl(self):
        return "(goal {})".format(self.name)

### Closed statement (*): at most delta*2^N strings of length N falsify pred
class CountAtMost(Atom):
    def __init__(self, pred, N, delta):
        assert isinstance(pred, str)
        assert isinstance(N, int) and N > 0, "N={}".format(N)
        assert isinstance(delta, (Fraction, int)), "delta must be an exact rational: {}".format(delta)
        delta = Fraction(delta)
        assert 0 <= delta <= 1, "delta={}".format(delta)
        self.pred = pred
        self.N = N
        self.delta = delta

    def __repr__(self):
        return "{}({}, {}, {})".format(self.__class__.__name__, self.pred, self.N, format_rational(self.delta))

    def key(self):
        return (self.pred, self.N, self.delta)

    ### floor(delta * 2^N): the largest falsifier count (*) allows
    def allowance(self):
        return (self.delta.numerator * 2 ** self.N) // self.delta.denominator

    def to_dsl(self):
        return "(countatmost {} {} {})".format(self.pred, self.N, format_rational(self.delta))

class Const(AST):
    def to_dsl(self):
        return self.__class__.__name__.lower()

### True
class Top(Const):
    def to_dsl(self):
        return "true"

### False
class Bot(Const):
    def to_dsl(self):
        return "false"

class NOp(AST):
    def __init__(self, *v):
        assert len(v) > 0
        assert checkAllItemsAreAST(*v), "v={}".format(v)
        self.v = list(v)

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, ', '.join(['{}'.format(x) for x in self.v]))

    def key(self):
        return tuple(self.v)

    def getAtoms(self):
        return reduce(lambda r, expr: r | expr.getAtoms(), self.v, set())

    def size(self):
        return 1 + sum(x.size() for x in self.v)

    def depth(self):
        return 1 + max(x.depth() for x in self.v)

    def to_dsl(self):
        return "({} {})".format(self.__class__.__name__.lower(), ' '.join([x.to_dsl() for x in self.v]))

class UniOp(NOp):
    def __init__(self, v1):
        assert isinstance(v1, AST)
        self.v1 = v1
        self.v = [v1]

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, self.v1)

class BinOp(NOp):
    def __init__(self, v1, v2):
        assert isinstance(v1, AST)
        assert isinstance(v2, AST)
        self.v1 = v1
        self.v2 = v2
        self.v = [v1, v2]

    def __repr__(self):
        return "{}({}, {})".format(self.__class__.__name__, self.v1, self.v2)

class Not(UniOp):
    pass

class And(NOp):
    pass

class Or(NOp):
    pass

class Implies(BinOp):
    @property
    def left(self):
        return self.v1

    @property
    def right(self):
        return self.v2

### h1 -> (h2 -> ... (hk -> goal)); no hypotheses gives goal itself
def curry(hypotheses, goal):
    assert isinstance(goal, AST)
    res = goal
    for h in reversed(list(hypotheses)):
        res = Implies(h, res)
    return res

def Disjunction(items):
    items = list(items)
    assert items, "empty disjunction"
    return Or(*items)
