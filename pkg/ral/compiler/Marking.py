from fractions import Fraction

from .. import AST
from ..Exceptions import *
from ..ProfileCapability import ProfileCapability
from ..helper import bitstrings, format_rational
from ..strategy.Instance import StrategyInstance, vertex_id
from ..strategy.Node import InferStep, RandomStep, Leaf
from ..Logger import getLogger

logger = getLogger(__name__)

class VertexMark:
    def __init__(self, path, node, p, rho, strong, hypotheses, sons=None):
        self.path = path
        self.node = node
        self.p = p
        self.rho = rho
        self.strong = strong
        self.hypotheses = hypotheses
        self.sons = sons or []

    def __repr__(self):
        return "{}({}, {}, p={}, rho={}, {})".format(self.__class__.__name__, vertex_id(self.path), self.node,
            format_rational(self.p), format_rational(self.rho), 'strong' if self.strong else 'weak')

    def to_json(self):
        return {'vertex': vertex_id(self.path), 'node': self.node, 'p': format_rational(self.p),
            'rho': format_rational(self.rho), 'strong': self.strong}

### Vertex path -> VertexMark for every vertex of the strategy tree
class StrongMarking(ProfileCapability):
    def __init__(self, instance):
        self.instance = instance
        self.marks = {}

    def __getitem__(self, path):
        return self.marks[tuple(path)]

    def __iter__(self):
        return iter(self.marks[k] for k in sorted(self.marks))

    def __len__(self):
        return len(self.marks)

    @property
    def root(self):
        return self.marks[()]

    def strong(self):
        return [m for m in self if m.strong]

    ### Vertices where p(u) > rho(u) but u stayed weak; empty on every sound run
    def induction_failures(self):
        return [m for m in self if m.p > m.rho and not m.strong]

    def to_json(self):
        return [m.to_json() for m in self]

class Marker:
    def __init__(self, s):
        assert isinstance(s, StrategyInstance)
        self.instance = s
        self.marking = StrongMarking(s)

    def visit(self, id, path, hypotheses, rho):
        s = self.instance
        node = s.node(id)
        if isinstance(node, Leaf):
            strong = s.succeeds(s.base_axioms + list(hypotheses))
            mark = VertexMark(path, id, Fraction(int(strong)), rho, strong, hypotheses)
        elif isinstance(node, InferStep):
            child = self.visit(node.child, path + ('infer',), hypotheses + (node.axiom,), rho)
            mark = VertexMark(path, id, child.p, rho, child.strong, hypotheses)
        elif isinstance(node, RandomStep):
            total = Fraction(0)
            sons = []
            for r in bitstrings(node.N):
                son = self.visit(node.selector(r), path + (r,), hypotheses + (AST.PredAtom(node.pred, r),), rho - node.delta)
                total += son.p
                if son.strong:
                    sons.append(r)
            ### |strong sons| > delta * 2^N, exactly
            strong = len(sons) * node.delta.denominator > node.delta.numerator * 2 ** node.N
            mark = VertexMark(path, id, total / 2 ** node.N, rho, strong, hypotheses, sons)
        else:
            raise UnhandledCaseError("node: {}".format(node))
        self.marking.marks[path] = mark
        return mark

    def run(self):
        s = self.instance
        s.check_budget()
        self.visit(s.root, (), (), s.epsilon)
        if s.feature.debug:
            logger.debug("mark_strong: {} vertices, {} strong".format(len(self.marking), len(self.marking.strong())))
        return self.marking

### @public
def mark_strong(s, profile=False):
    res = Marker(s).run()
    if profile:
        res.profileMemoryUsage()
    return res
