from fractions import Fraction

import numpy as np

from .. import AST
from ..Feature import Feature
from ..Interpretation import Interpretation, Predicate
from ..helper import bitstrings, format_rational
from ..strategy.Instance import StrategyInstance
from ..strategy.Node import RandomStep, Leaf, ConstantSelector
from ..Logger import getLogger
from .Marking import mark_strong
from .Compile import Compiler

logger = getLogger(__name__)

FAMILIES = ('full', 'single')

### @public
### B_m: a chain of m RandomSteps over always-true 2-bit predicates R1..Rm.
###
### `full`: every son strong (base axioms Rm(x) -> G for all x, delta 1/8 per
### level). `single`: only the 00...0 branch succeeds (delta 0, one curried
### base axiom), the linear control case. m = 0 is a bare leaf over base {G}.
def blowup_family(m, kind='full', feature=Feature()):
    assert m >= 0
    assert kind in FAMILIES
    G = AST.GoalAtom('G')
    predicates = [Predicate('R{}'.format(i), 2, 'always') for i in range(1, m + 1)]
    m_truth = Interpretation(predicates, {'G': True})
    if m == 0:
        return StrategyInstance('leaf', [Leaf('leaf', G)], Fraction(0), [G], G, m_truth, feature)

    delta = Fraction(1, 8) if kind == 'full' else Fraction(0)
    nodes = []
    for i in range(1, m + 1):
        child = 'level{}'.format(i + 1) if i < m else 'leaf'
        nodes.append(RandomStep('level{}'.format(i), 'R{}'.format(i), 2, delta, ConstantSelector(child), 'enumerate'))
    nodes.append(Leaf('leaf', G))
    if kind == 'full':
        base = [AST.Implies(AST.PredAtom('R{}'.format(m), x), G) for x in bitstrings(2)]
    else:
        base = [AST.curry([AST.PredAtom(p.name, '00') for p in predicates], G)]
    return StrategyInstance('level1', nodes, delta * m, base, G, m_truth, feature)

### Max over branches of the formula lengths written along it (accepted axioms + goal)
def probabilistic_complexity(s, marking, certificates=False):
    res = 0
    for mark in marking:
        node = s.node(mark.node)
        if not isinstance(node, Leaf):
            continue
        total = s.goal.size() + sum(h.size() for h in mark.hypotheses)
        if certificates:
            for i in range(len(mark.path)):
                step = s.node(marking[mark.path[:i]].node)
                if isinstance(step, RandomStep):
                    total += step.statement().size()
                    if isinstance(step.certificate, tuple) and step.certificate[0] == 'proof':
                        total += step.certificate[1].size()
        res = max(res, total)
    return res

### Least squares of log(ratio) against depth
def exponential_fit(depths, ratios):
    return _log_fit(np.array(depths, dtype=float), ratios)

### Least squares of log(ratio) against log(depth): the slope is the polynomial degree
def power_fit(depths, ratios):
    return _log_fit(np.log(np.array(depths, dtype=float)), ratios)

def _log_fit(x, ratios):
    y = np.log(np.array(ratios, dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    total = y - y.mean()
    ss_tot = float(np.dot(total, total))
    r2 = 1.0 - float(np.dot(residual, residual)) / ss_tot if ss_tot > 0 else 1.0
    return {'slope': round(float(slope), 6), 'intercept': round(float(intercept), 6), 'r2': round(r2, 6)}

class BlowupReport:
    def __init__(self, kind, rows):
        self.kind = kind
        self.rows = rows
        ratios = [r['ratio'] for r in rows]
        self.monotone = all(a < b for a, b in zip(ratios, ratios[1:]))
        fitted = [r for r in rows if r['depth'] > 0]
        self.fit = None
        self.power = None
        if len(fitted) >= 3:
            self.fit = exponential_fit([r['depth'] for r in fitted], [r['ratio'] for r in fitted])
            self.power = power_fit([r['depth'] for r in fitted], [r['ratio'] for r in fitted])

    def __bool__(self):
        if not self.monotone:
            return False
        if self.kind == 'full' and self.fit is not None:
            return self.fit['slope'] > 0 and self.fit['r2'] >= 0.95
        ### the control ratio grows at most linearly in depth: one curried hypothesis per level
        if self.kind == 'single' and self.power is not None:
            return self.power['slope'] <= 1.0
        return True

    def __repr__(self):
        return "{}({}, rows={}, monotone={}, fit={})".format(self.__class__.__name__, self.kind, len(self.rows), self.monotone, self.fit)

    def summary(self):
        return {'family': self.kind, 'monotone': self.monotone, 'fit': self.fit, 'power_fit': self.power, 'verdict': 'ok' if self else 'violation'}

### @public
def blowup_row(s, depth):
    marking = mark_strong(s)
    c = Compiler(s, marking)
    proof = c.run()
    prob = probabilistic_complexity(s, marking)
    return {
        'depth': depth,
        'p': format_rational(marking.root.p),
        'epsilon': format_rational(s.epsilon),
        'prob_complexity': prob,
        'prob_complexity_cert': probabilistic_complexity(s, marking, certificates=True),
        'compiled_size': c.full_size,
        'serialized_size': proof.size(),
        'lines': len(proof),
        'ratio': round(c.full_size / prob, 6),
    }

### @public
def blowup_report(depths, kind='full', feature=Feature()):
    rows = []
    for m in depths:
        rows.append(blowup_row(blowup_family(m, kind, feature), m))
        logger.info("blowup_report: {} m={} ratio={}".format(kind, m, rows[-1]['ratio']))
    return BlowupReport(kind, rows)
