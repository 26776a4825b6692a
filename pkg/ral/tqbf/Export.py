### Protocol runs as probabilistic proof strategies.
###
### Round i becomes a RandomStep over k-bit challenges adopting R_i(r): "if the
### prover's polynomial agrees with the true one at r, they agree everywhere".
### Two distinct polynomials of degree <= d_i agree on at most d_i points, so
### R_i has at most d_i falsifiers and costs delta_i = d_i / 2^k.
from fractions import Fraction

from .. import AST, Tactic
from ..Exceptions import *
from ..Feature import Feature
from ..Interpretation import Interpretation, Predicate
from ..helper import format_rational
from ..strategy.Instance import StrategyInstance
from ..strategy.Node import RandomStep, Leaf, ConstantSelector
from ..compiler import Compiler, mark_strong
from ..Logger import getLogger
from .Prover import ProtocolRun, run_protocol

logger = getLogger(__name__)

### True restriction polynomial of every round along the recorded challenges
def true_polynomials(run):
    arith = run.arith
    point = {}
    res = []
    for record in run.records:
        res.append(arith.restriction(record.index, point))
        point = dict(point, **{record.op[1]: record.challenge})
    return res

### claim_i holds iff the round-i claim equals the true suffix value at the point reached;
### the last entry is the claim left for the final evaluation
def true_claims(run):
    arith = run.arith
    point = {}
    res = []
    for record in run.records:
        res.append(record.claim == arith.value(record.index, point))
        point = dict(point, **{record.op[1]: record.challenge})
    last = run.records[-1].next_claim if run.records else 1
    res.append(last == arith.value(arith.rounds, point))
    return res

def _round_predicate(name, field, true, sent):
    def holds(r):
        x = int(r, 2)
        return true(x) != sent(x) or true == sent
    return Predicate(name, field.k, 'callable', func=holds)

### @public
def export_strategy(run, epsilon=None, feature=Feature()):
    assert isinstance(run, ProtocolRun)
    if not run:
        raise ExecutionError("only accepted runs export as strategies, got {}".format(run.verdict))
    field = run.arith.field
    k = field.k
    rounds = len(run.records)

    predicates = []
    nodes = []
    for i, (record, true) in enumerate(zip(run.records, true_polynomials(run))):
        name = 'R{}'.format(i)
        predicates.append(_round_predicate(name, field, true, record.message))
        child = 'round{}'.format(i + 1) if i + 1 < rounds else 'leaf'
        delta = Fraction(record.degree, field.order)
        nodes.append(RandomStep('round{}'.format(i), name, k, delta, ConstantSelector(child), 'enumerate'))

    F = AST.GoalAtom('F')
    claims = [AST.GoalAtom('claim{}'.format(i)) for i in range(rounds + 1)]
    nodes.append(Leaf('leaf', F))
    goals = dict((c.name, v) for c, v in zip(claims, true_claims(run)))
    ### the arithmetized value at the empty point is the truth value of the formula
    goals['F'] = run.arith.value(0, {}) == 1
    truth = Interpretation(predicates, goals)

    ### claim_i follows from R_i(r) and claim_{i+1}, for every challenge r
    base = []
    for i in range(rounds):
        for r in range(field.order):
            base.append(AST.Implies(AST.And(AST.PredAtom('R{}'.format(i), field.to_bits(r)), claims[i + 1]), claims[i]))
    base.append(claims[rounds])
    base.append(AST.Implies(claims[0], F))

    spent = sum((n.delta for n in nodes if isinstance(n, RandomStep)), Fraction(0))
    if epsilon is None:
        epsilon = spent
    epsilon = Fraction(epsilon)
    if epsilon < spent:
        raise CapitalError("epsilon {} is below the total round cost {}".format(format_rational(epsilon), format_rational(spent)))

    root = 'round0' if rounds else 'leaf'
    logger.info("export_strategy: {} rounds, k={}, delta total {}".format(rounds, k, format_rational(spent)))
    return StrategyInstance(root, nodes, epsilon, base, F, truth, feature)

### Compiled proof size of the honest export at each field size (tiny k only)
def export_compile_sizes(f, ks, seed=0, feature=Feature()):
    rows = []
    for k in ks:
        run = run_protocol(f, Tactic.Honest(), k, seed, feature)
        s = export_strategy(run, feature=feature)
        marking = mark_strong(s)
        c = Compiler(s, marking)
        proof = c.run()
        rows.append({
            'k': k,
            'rounds': len(run.records),
            'epsilon': format_rational(s.epsilon),
            'compiled_size': c.full_size,
            'lines': len(proof),
            'per_round': round(c.full_size ** (1.0 / max(1, len(run.records))), 6),
        })
        logger.info("export_compile_sizes: k={} size={}".format(k, c.full_size))
    return rows
