import math
import pickle
from fractions import Fraction
from multiprocessing import Pool

from .. import AST
from ..Exceptions import *
from ..Pcg32 import Pcg32
from ..ProfileCapability import ProfileCapability
from ..Solver import eval_formula
from ..helper import bitstrings, digest64, format_rational
from ..Logger import getLogger
from .Instance import StrategyInstance, vertex_id
from .Node import InferStep, RandomStep, Leaf

logger = getLogger(__name__)

class Transcript:
    def __init__(self, seed, index=0):
        self.seed = seed
        self.index = index
        self.steps = []
        self.accepted = []
        self.outcome = None

    def __repr__(self):
        return "{}(seed={}, steps={}, outcome={})".format(self.__class__.__name__, self.seed, len(self.steps), self.outcome)

    def __eq__(a, b):
        return isinstance(b, Transcript) and a.to_json() == b.to_json()

    def step(self, node, choice, rho):
        self.steps.append({'node': node, 'choice': choice, 'rho': format_rational(rho)})

    @property
    def success(self):
        return self.outcome == 'success'

    def to_json(self):
        return {
            'seed': self.seed,
            'sample': self.index,
            'steps': list(self.steps),
            'accepted': [x.to_dsl() for x in self.accepted],
            'outcome': self.outcome,
        }

    ### One record per step, then the outcome
    def to_json_lines(self):
        res = [dict(x, seed=self.seed, sample=self.index) for x in self.steps]
        res.append({'seed': self.seed, 'sample': self.index, 'outcome': self.outcome,
            'accepted': [x.to_dsl() for x in self.accepted]})
        return res

### Hoeffding form of the two-sided Chernoff bound
def chernoff_halfwidth(samples, confidence):
    assert samples >= 1
    return math.sqrt(math.log(2 / (1 - float(confidence))) / (2 * samples))

class ProbReport:
    def __init__(self, exact=None, successes=None, samples=None, confidence=Fraction(99, 100)):
        self.exact = exact
        self.successes = successes
        self.samples = samples
        self.confidence = Fraction(confidence)

    @property
    def estimate(self):
        if not self.samples:
            return None
        return Fraction(self.successes, self.samples)

    @property
    def halfwidth(self):
        if not self.samples:
            return None
        return chernoff_halfwidth(self.samples, self.confidence)

    def __repr__(self):
        return "{}(exact={}, estimate={}, samples={})".format(self.__class__.__name__,
            self.exact, self.estimate, self.samples)

    def to_json(self):
        res = {}
        if self.exact is not None:
            res['p'] = format_rational(self.exact)
        if self.samples:
            res['p_hat'] = format_rational(self.estimate)
            res['p_hat_float'] = round(float(self.estimate), 6)
            res['samples'] = self.samples
            res['successes'] = self.successes
            res['halfwidth'] = round(self.halfwidth, 6)
            res['confidence'] = format_rational(self.confidence)
        return res

### @public
def run_sample(s, seed, index=0):
    assert isinstance(s, StrategyInstance)
    state = digest64(seed, index)
    t = Transcript(seed, index)
    accepted = list(s.base_axioms)
    rho = s.epsilon
    path = ()
    id = s.root
    while True:
        node = s.node(id)
        if isinstance(node, RandomStep):
            rng = Pcg32(state, digest64(vertex_id(path)))
            r = rng.bits(node.N)
            rho -= node.delta
            if rho < 0:
                raise CapitalError("negative capital at {}".format(vertex_id(path)))
            accepted.append(AST.PredAtom(node.pred, r))
            t.step(id, r, rho)
            path += (r,)
            id = node.selector(r)
        elif isinstance(node, InferStep):
            accepted.append(node.axiom)
            t.step(id, 'infer', rho)
            path += ('infer',)
            id = node.child
        elif isinstance(node, Leaf):
            t.accepted = accepted
            t.outcome = 'success' if s.succeeds(accepted) else 'failure'
            return t
        else:
            raise UnhandledCaseError("node: {}".format(node))

class ExactEvaluator(ProfileCapability):
    def __init__(self, s):
        assert isinstance(s, StrategyInstance)
        self.instance = s
        self.memo = {}

    def value(self, id, accepted):
        key = (id, frozenset(accepted))
        if key in self.memo:
            return self.memo[key]
        s = self.instance
        node = s.node(id)
        if isinstance(node, Leaf):
            res = Fraction(1) if s.succeeds(accepted) else Fraction(0)
        elif isinstance(node, InferStep):
            res = self.value(node.child, accepted + (node.axiom,))
        elif isinstance(node, RandomStep):
            total = sum(self.value(node.selector(r), accepted + (AST.PredAtom(node.pred, r),)) for r in bitstrings(node.N))
            res = Fraction(total, 2 ** node.N)
        else:
            raise UnhandledCaseError("node: {}".format(node))
        self.memo[key] = res
        return res

    def run(self):
        self.instance.check_budget()
        return self.value(self.instance.root, tuple(self.instance.base_axioms))

### @public
def exact_success_prob(s, profile=False):
    e = ExactEvaluator(s)
    res = e.run()
    if profile:
        e.profileMemoryUsage()
    return res

### Probability that a run accepts some axiom false under the ground truth
class BadAxiomEvaluator:
    def __init__(self, s):
        assert isinstance(s, StrategyInstance)
        self.instance = s
        self.memo = {}
        self.truth = {}
        self.excess = []

    def holds(self, f):
        if not f in self.truth:
            self.truth[f] = eval_formula(f, self.instance.ground_truth, self.instance.feature)
        return self.truth[f]

    ### Conditional on nothing false accepted before reaching `id`
    def value(self, id):
        if id in self.memo:
            return self.memo[id]
        s = self.instance
        node = s.node(id)
        if isinstance(node, Leaf):
            res = Fraction(0)
        elif isinstance(node, InferStep):
            res = Fraction(1) if not self.holds(node.axiom) else self.value(node.child)
        elif isinstance(node, RandomStep):
            R = s.ground_truth.pred(node.pred)
            total = sum(Fraction(1) if not R(r) else self.value(node.selector(r)) for r in bitstrings(node.N))
            res = total / 2 ** node.N
        else:
            raise UnhandledCaseError("node: {}".format(node))
        self.memo[id] = res
        return res

    ### Every vertex reachable with only true axioms accepted must carry risk <= rho
    def audit(self):
        s = self.instance
        seen = set()

        def walk(id, rho, path):
            if (id, rho) in seen:
                return
            seen.add((id, rho))
            risk = self.value(id)
            if risk > rho:
                self.excess.append({'vertex': vertex_id(path), 'node': id,
                    'risk': format_rational(risk), 'rho': format_rational(rho)})
            node = s.node(id)
            if isinstance(node, RandomStep):
                R = s.ground_truth.pred(node.pred)
                for r in bitstrings(node.N):
                    if R(r):
                        walk(node.selector(r), rho - node.delta, path + (r,))
            elif isinstance(node, InferStep) and self.holds(node.axiom):
                walk(node.child, rho, path + ('infer',))

        walk(s.root, s.epsilon, ())
        return self.excess

### @public
def bad_axiom_prob(s):
    if any(not eval_formula(x, s.ground_truth, s.feature) for x in s.base_axioms):
        return Fraction(1)
    return BadAxiomEvaluator(s).value(s.root)

def _mc_chunk(args):
    s, seed, start, stop = args
    return sum(1 for i in range(start, stop) if run_sample(s, seed, i).success)

def _chunks(samples, jobs):
    size = max(1, -(-samples // (jobs * 4)))
    return [(i, min(samples, i + size)) for i in range(0, samples, size)]

### @public
def mc_success_prob(s, samples, seed, jobs=None):
    assert isinstance(s, StrategyInstance)
    assert samples >= 1
    jobs = jobs or s.feature.jobs
    successes = None
    if jobs > 1:
        try:
            pickle.dumps(s)
            with Pool(processes=jobs) as pool:
                successes = sum(pool.map(_mc_chunk, [(s, seed, a, b) for a, b in _chunks(samples, jobs)]))
        except (pickle.PicklingError, AttributeError, TypeError) as e:
            logger.warning("mc_success_prob: falling back to one worker ({})".format(e))
    if successes is None:
        successes = _mc_chunk((s, seed, 0, samples))
    res = ProbReport(successes=successes, samples=samples, confidence=s.feature.chernoff_confidence)
    if s.feature.debug:
        logger.debug("mc_success_prob: {}".format(res))
    return res
