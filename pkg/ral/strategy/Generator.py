from fractions import Fraction

from .. import AST
from ..Feature import Feature
from ..Interpretation import Interpretation, Predicate
from ..Pcg32 import Pcg32
from ..Proof import ProofObject, AxiomRef, TautCons
from ..Solver import eval_formula
from ..helper import bitstrings, digest64, format_rational
from ..Logger import getLogger
from .Instance import StrategyInstance
from .Node import InferStep, RandomStep, Leaf, ConstantSelector, TableSelector, SplitSelector

logger = getLogger(__name__)

class GeneratorConfig:
    def __init__(self, max_N=6, max_depth=3, max_atoms=12, max_bits=8, infer_rate=Fraction(1, 5), win_rate=Fraction(3, 4)):
        assert 1 <= max_N <= 6
        assert 0 <= max_depth <= 3
        assert 1 <= max_atoms <= 12
        self.max_N = max_N
        self.max_depth = max_depth
        self.max_atoms = max_atoms
        self.max_bits = max_bits
        self.infer_rate = Fraction(infer_rate)
        ### share of instances aimed at winning: G true and R(x) -> G for every x in reach
        self.win_rate = Fraction(win_rate)
        assert 0 <= self.win_rate <= 1

    def __repr__(self):
        return "{}(max_N={}, max_depth={}, max_atoms={}, max_bits={})".format(self.__class__.__name__,
            self.max_N, self.max_depth, self.max_atoms, self.max_bits)

    def to_json(self):
        return {'max_N': self.max_N, 'max_depth': self.max_depth, 'max_atoms': self.max_atoms, 'max_bits': self.max_bits,
            'win_rate': format_rational(self.win_rate)}

def _predicate(rng, name, N):
    kind = rng.choice(['always', 'false_on', 'false_on', 'weight_at_least', 'true_on'])
    strings = bitstrings(N)
    if kind == 'false_on':
        points = set(rng.choice(strings) for _ in range(rng.randint(1, max(1, len(strings) // 4))))
        return Predicate(name, N, 'false_on', points=points)
    if kind == 'true_on':
        points = set(rng.choice(strings) for _ in range(rng.randint(len(strings) // 2, len(strings))))
        return Predicate(name, N, 'true_on', points=points)
    if kind == 'weight_at_least':
        return Predicate(name, N, 'weight_at_least', weight=rng.randint(0, 1))
    return Predicate(name, N, 'always')

class _Builder:
    def __init__(self, rng, config):
        self.rng = rng
        self.config = config
        self.nodes = []
        self.predicates = []
        self.goal = AST.GoalAtom('G')
        self.base = []
        self.counter = 0
        self.aim = False

    def fresh(self):
        self.counter += 1
        return "n{}".format(self.counter - 1)

    def selector(self, N, depth, bits):
        rng = self.rng
        kind = rng.randint(0, 2)
        if kind == 0:
            return ConstantSelector(self.subtree(depth + 1, bits))
        then = self.subtree(depth + 1, bits)
        otherwise = self.subtree(depth + 1, bits)
        strings = bitstrings(N)
        points = set(rng.choice(strings) for _ in range(rng.randint(1, len(strings))))
        if kind == 1 or N > 3:
            return SplitSelector(points, then, otherwise)
        return TableSelector(dict((r, then) for r in sorted(points)), otherwise)

    def subtree(self, depth, bits):
        rng = self.rng
        id = self.fresh()
        room = min(self.config.max_N, self.config.max_bits - bits)
        if depth >= self.config.max_depth or room <= 0 or ((depth > 0 or not self.aim) and rng.coin(1, 4)):
            self.nodes.append(Leaf(id, self.goal))
            return id
        if self.base and rng.coin(self.config.infer_rate.numerator, self.config.infer_rate.denominator):
            i = rng.randint(0, len(self.base) - 1)
            axiom = AST.Or(self.base[i], self.goal)
            proof = ProofObject([AxiomRef(i, self.base[i]), TautCons([0], axiom)])
            self.nodes.append(InferStep(id, axiom, proof, self.subtree(depth + 1, bits)))
            return id
        lengths = sorted(set(p.length for p in self.predicates if p.length <= room))
        N = rng.choice(lengths) if self.aim and lengths else rng.randint(1, room)
        R = self.pick_predicate(N)
        k = sum(1 for x in bitstrings(N) if not R(x))
        ### aimed instances pay exactly the falsifier share
        delta = min(Fraction(1), Fraction(k + (0 if self.aim else rng.randint(0, 1)), 2 ** N))
        node = RandomStep(id, R.name, N, delta, self.selector(N, depth, bits + N), 'enumerate')
        self.nodes.append(node)
        return id

    def pick_predicate(self, N):
        same = [p for p in self.predicates if p.length == N]
        if same and (self.aim or self.rng.coin(1, 2)):
            return self.rng.choice(same)
        p = _predicate(self.rng, "R{}".format(len(self.predicates)), N)
        self.predicates.append(p)
        return p

    ### True implications R(x) -> G and (R(x) and S(y)) -> G, within the atom bound;
    ### an aimed instance first gets R(x) -> G for every x, in predicate order
    def base_axioms(self, m):
        rng = self.rng
        atoms = set([self.goal])
        res = []
        candidates = []
        for p in self.predicates:
            candidates += [AST.PredAtom(p.name, x) for x in bitstrings(p.length)]
        if self.aim and eval_formula(self.goal, m):
            for a in candidates:
                if len(atoms | set([a])) > self.config.max_atoms:
                    break
                res.append(AST.Implies(a, self.goal))
                atoms.add(a)
        for _ in range(2 * len(candidates)):
            if not candidates or len(atoms) >= self.config.max_atoms:
                break
            a = rng.choice(candidates)
            if rng.coin(1, 4):
                b = rng.choice(candidates)
                f = AST.Implies(AST.And(a, b) if a != b else a, self.goal)
            else:
                f = AST.Implies(a, self.goal)
            if len(atoms | f.getAtoms()) > self.config.max_atoms:
                continue
            if eval_formula(f, m) and not f in res:
                res.append(f)
                atoms |= f.getAtoms()
        return res

def _max_spend(nodes, root):
    index = dict((n.id, n) for n in nodes)

    def spend(id):
        node = index[id]
        here = node.delta if isinstance(node, RandomStep) else Fraction(0)
        return here + max([spend(c) for c in node.children()] or [Fraction(0)])

    return spend(root)

### @public
def generate_instance(seed, config=GeneratorConfig(), feature=Feature()):
    rng = Pcg32(digest64('strategy', seed))
    b = _Builder(rng, config)
    b.aim = rng.coin(config.win_rate.numerator, config.win_rate.denominator)
    goal_value = b.aim or rng.coin(1, 2)

    ### Base axioms come first so InferSteps can cite them
    catalog = _Builder(Pcg32(digest64('predicates', seed)), config)
    for _ in range(rng.randint(1, 3)):
        N = rng.randint(1, min(config.max_N, 3) if b.aim else config.max_N)
        catalog.pick_predicate(N)
    b.predicates = catalog.predicates
    m = Interpretation(b.predicates, {'G': goal_value})
    b.base = b.base_axioms(m)
    b.predicates = list(b.predicates)

    root = b.subtree(0, 0)
    m = Interpretation(b.predicates, {'G': goal_value})
    spend = _max_spend(b.nodes, root)
    epsilon = spend + rng.choice([Fraction(0), Fraction(0), Fraction(1, 8), Fraction(1, 4)])
    if feature.debug:
        logger.debug("generate_instance: seed={} aimed={} spend={}".format(seed, b.aim, format_rational(spend)))
    return StrategyInstance(root, b.nodes, epsilon, b.base, b.goal, m, feature)
