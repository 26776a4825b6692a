import json
from fractions import Fraction

from .. import AST
from ..Exceptions import *
from ..Feature import Feature, FeatureCapability
from ..Interpretation import Interpretation
from ..Proof import ProofObject, check_proof, counting_certificate, AxiomRef, CountingRule
from ..Solver import Solver, eval_formula
from ..Verdict import Violations
from ..dsl import parse_formula
from ..helper import bitstrings, parse_rational, format_rational
from ..Logger import getLogger
from .Node import StrategyNode, InferStep, RandomStep, Leaf, TableSelector, selector_from_json

logger = getLogger(__name__)

def vertex_id(path):
    return '/' + '/'.join(path)

class StrategyInstance(FeatureCapability):
    def __init__(self, root, nodes, epsilon, base_axioms, goal, ground_truth, feature=Feature()):
        FeatureCapability.__init__(self, feature)
        assert isinstance(root, str)
        assert isinstance(ground_truth, Interpretation)
        assert isinstance(goal, AST.AST)
        self.root = root
        self.nodes = {}
        for node in nodes:
            assert isinstance(node, StrategyNode)
            self.nodes[node.id] = node
        self.epsilon = Fraction(epsilon)
        self.base_axioms = list(base_axioms)
        self.goal = goal
        self.ground_truth = ground_truth
        self.entailment_cache = {}

    def __repr__(self):
        return "{}(root={}, nodes={}, epsilon={}, goal={})".format(self.__class__.__name__,
            self.root, len(self.nodes), format_rational(self.epsilon), self.goal)

    def node(self, id):
        if not id in self.nodes:
            raise UndeclaredNameError("strategy node {} is not defined".format(id))
        return self.nodes[id]

    ### Leaf outcome: the base axioms entail hypotheses -> goal (memoized per accepted set).
    ### Counting premises must follow from the base alone, as they must in a compiled proof
    def succeeds(self, accepted):
        key = frozenset(accepted)
        if not key in self.entailment_cache:
            hypotheses = sorted(key - set(self.base_axioms), key=lambda a: a.to_dsl())
            s = Solver(self.feature)
            s.add(*self.base_axioms)
            self.entailment_cache[key] = s.entails(AST.curry(hypotheses, self.goal))
        return self.entailment_cache[key]

    ### Counting premises certified by enumeration, in node order; declared after the base axioms
    def lemmas(self):
        res = []
        for id in sorted(self.nodes):
            node = self.nodes[id]
            if isinstance(node, RandomStep) and node.certificate == 'enumerate':
                statement = node.statement()
                if not statement in self.base_axioms and not statement in res:
                    res.append(statement)
        return res

    def declared_axioms(self):
        return self.base_axioms + self.lemmas()

    def has_infer_steps(self):
        return any(isinstance(n, InferStep) for n in self.nodes.values())

    ### Number of tree vertices (paths); exact evaluation visits each once
    def vertex_count(self):
        memo = {}
        budget = self.feature.exact_budget

        def count(id, stack):
            if id in memo:
                return memo[id]
            if id in stack:
                raise ExecutionError("strategy graph has a cycle through {}".format(id))
            node = self.node(id)
            stack.add(id)
            if isinstance(node, RandomStep):
                res = 1
                for r in bitstrings(node.N):
                    res += count(node.selector(r), stack)
                    if res > budget:
                        break
            elif isinstance(node, InferStep):
                res = 1 + count(node.child, stack)
            else:
                res = 1
            stack.discard(id)
            memo[id] = min(res, budget + 1)
            return memo[id]

        return count(self.root, set())

    def check_budget(self):
        n = self.vertex_count()
        if n > self.feature.exact_budget:
            raise BudgetExceededError("strategy tree has more than {} vertices".format(self.feature.exact_budget))
        return n

    def to_json(self):
        return {
            'epsilon': format_rational(self.epsilon),
            'predicates': self.ground_truth.to_json()['predicates'],
            'goals': self.ground_truth.to_json()['goals'],
            'base_axioms': [x.to_dsl() for x in self.base_axioms],
            'goal': self.goal.to_dsl(),
            'root': self.root,
            'nodes': [self.nodes[k].to_json() for k in sorted(self.nodes)],
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, record, feature=Feature()):
        try:
            ground_truth = Interpretation.from_json(record)
            signature = ground_truth.signature()
            base = [parse_formula(x, signature) for x in record.get('base_axioms', [])]
            goal = parse_formula(record['goal'], signature)
            nodes = [node_from_json(x, signature) for x in record['nodes']]
            root = record.get('root', nodes[0].id if nodes else None)
            if root is None:
                raise ParseError("strategy has no nodes")
            return cls(root, nodes, parse_rational(str(record['epsilon'])), base, goal, ground_truth, feature)
        except KeyError as e:
            raise ParseError("strategy file misses field {}".format(e))
        except ValueError as e:
            raise ParseError("strategy file: {}".format(e))

    @classmethod
    def loads(cls, text, feature=Feature()):
        return cls.from_json(json.loads(text), feature)

def node_from_json(record, signature=None):
    kind = record['type']
    if kind == 'leaf':
        return Leaf(record['id'], parse_formula(record['claim'], signature))
    if kind == 'infer':
        return InferStep(record['id'], parse_formula(record['axiom'], signature),
            ProofObject.from_json(record['justification']), record['child'])
    if kind == 'random':
        certificate = record.get('certificate')
        if isinstance(certificate, dict):
            if 'axiom' in certificate:
                certificate = ('axiom', int(certificate['axiom']))
            elif 'proof' in certificate:
                certificate = ('proof', ProofObject.from_json(certificate['proof'], signature))
            else:
                raise ParseError("unknown certificate form in node {}".format(record['id']))
        elif certificate is not None and certificate != 'enumerate':
            raise ParseError("unknown certificate form in node {}".format(record['id']))
        return RandomStep(record['id'], record['pred'], int(record['N']), parse_rational(str(record['delta'])),
            selector_from_json(record['selector']), certificate)
    raise ParseError("unknown node type '{}'".format(kind))

def _check_certificate(s, node, violations):
    where = node.id
    if node.certificate is None:
        violations.add(where, 'certificate-missing')
        return
    statement = node.statement()
    if node.certificate == 'enumerate':
        if node.N > s.feature.enum_bound:
            violations.add(where, 'certificate-bound', "N={} exceeds the enumeration bound".format(node.N))
            return
        cert = counting_certificate(node.pred, node.N, node.delta, s.ground_truth, s.feature)
        if not cert:
            violations.add(where, 'certificate-refused', repr(cert))
        return
    kind, value = node.certificate
    if kind == 'axiom':
        if not (0 <= value < len(s.base_axioms)) or s.base_axioms[value] != statement:
            violations.add(where, 'certificate-mismatch', "base axiom {} is not {}".format(value, statement))
    else:
        res = check_proof(value, s.base_axioms, s.feature)
        if not res:
            violations.add(where, 'certificate-invalid', repr(res))
        elif value.theorem != statement:
            violations.add(where, 'certificate-mismatch', "proof concludes {}".format(value.theorem))

def _check_justification(s, node, accepted, path, violations):
    where = "{}@{}".format(node.id, vertex_id(path))
    if isinstance(node.axiom, AST.CountAtMost):
        violations.add(where, 'infer-count', "counting premises are certified, not inferred")
        return
    for line in node.justification:
        if isinstance(line, CountingRule):
            source = node.justification[line.source] if 0 <= line.source < len(node.justification) else None
            if not (isinstance(source, AxiomRef) and source.index < len(s.base_axioms)):
                violations.add(where, 'infer-counting-source', "counting source must be a base axiom")
                return
    res = check_proof(node.justification, list(accepted), s.feature)
    if not res:
        violations.add(where, 'infer-justification', repr(res))
    elif node.justification.theorem != node.axiom:
        violations.add(where, 'infer-justification', "proof concludes {}".format(node.justification.theorem))

### @public
def validate(s):
    assert isinstance(s, StrategyInstance)
    violations = Violations()

    for i, axiom in enumerate(s.base_axioms):
        try:
            if not eval_formula(axiom, s.ground_truth, s.feature):
                violations.add('base[{}]'.format(i), 'base-axiom-false', axiom.to_dsl())
        except RalError as e:
            violations.add('base[{}]'.format(i), 'undeclared-name', str(e))
    try:
        eval_formula(s.goal, s.ground_truth, s.feature)
    except RalError as e:
        violations.add('goal', 'undeclared-name', str(e))

    ### Node-local rules
    for id in sorted(s.nodes):
        node = s.nodes[id]
        for child in node.children():
            if not child in s.nodes:
                violations.add(id, 'dangling-child', child)
        if isinstance(node, RandomStep):
            if not node.pred in s.ground_truth.predicates or s.ground_truth.pred(node.pred).length != node.N:
                violations.add(id, 'arity', "{} is not a declared {}-bit predicate".format(node.pred, node.N))
                continue
            if isinstance(node.selector, TableSelector) and not node.selector.covers(node.N):
                violations.add(id, 'selector-coverage')
            _check_certificate(s, node, violations)
        if isinstance(node, Leaf) and node.claim != s.goal:
            violations.add(id, 'leaf-claim', "leaf claims {}, goal is {}".format(node.claim, s.goal))
    if not s.root in s.nodes:
        violations.add(s.root, 'dangling-child', 'root')
    if violations:
        violations = violations & _check_paths(s)
    return violations

### Capital along every path, and InferStep justifications per vertex
def _check_paths(s):
    violations = Violations()
    seen = set()
    flagged = set()

    def capital(id, rho, stack):
        if (id, rho) in seen:
            return
        if id in stack:
            violations.add(id, 'cycle')
            return
        seen.add((id, rho))
        node = s.nodes[id]
        stack.add(id)
        if isinstance(node, RandomStep):
            rest = rho - node.delta
            if rest < 0:
                if not id in flagged:
                    flagged.add(id)
                    violations.add(id, 'capital', "remaining {} < delta {}".format(format_rational(rho), format_rational(node.delta)))
            else:
                for child in node.children():
                    capital(child, rest, stack)
        elif isinstance(node, InferStep):
            capital(node.child, rho, stack)
        stack.discard(id)

    capital(s.root, s.epsilon, set())
    if not violations or not s.has_infer_steps():
        return violations

    try:
        s.check_budget()
    except BudgetExceededError as e:
        violations.add(s.root, 'budget', str(e))
        return violations

    visited = set()

    def walk(id, accepted, path):
        key = (id, accepted)
        if key in visited:
            return
        visited.add(key)
        node = s.nodes[id]
        if isinstance(node, RandomStep):
            for r in bitstrings(node.N):
                walk(node.selector(r), accepted + (AST.PredAtom(node.pred, r),), path + (r,))
        elif isinstance(node, InferStep):
            _check_justification(s, node, accepted, path, violations)
            walk(node.child, accepted + (node.axiom,), path + ('infer',))

    walk(s.root, tuple(s.base_axioms), ())
    return violations
