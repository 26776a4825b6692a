import math
from fractions import Fraction

from .. import AST
from ..Exceptions import *
from ..Feature import Feature
from ..Interpretation import Interpretation, Predicate
from ..Pcg32 import Pcg32
from ..helper import bitstrings, bitstrings_upto, digest64, format_rational, shortlex
from ..strategy.Instance import StrategyInstance
from ..strategy.Node import RandomStep, Leaf, ConstantSelector
from ..Logger import getLogger
from .Table import ComplexityTable, LITERAL_WIDTH, programs
from .Vm import vm_run

logger = getLogger(__name__)

def _table(table, n):
    assert isinstance(table, ComplexityTable)
    if n > table.caps.n_bound:
        raise BoundExceededError("n={} exceeds the table bound {}".format(n, table.caps.n_bound))
    if not table.caps.covers(n):
        raise BoundExceededError("{} leaves strings of length {} without a program; needs L_max >= {} and S_max >= {}".format(
            table.caps, n, LITERAL_WIDTH * n, n))

### k_final < n - c is decided once every program shorter than n - c is enumerated
def _decides(table, n, c):
    assert isinstance(table, ComplexityTable)
    if n > table.caps.n_bound:
        raise BoundExceededError("n={} exceeds the table bound {}".format(n, table.caps.n_bound))
    if table.caps.L_max < n - c - 1:
        raise BoundExceededError("L_max={} cannot decide K(x) < {}".format(table.caps.L_max, n - c))

def _order(value):
    return math.inf if value is None else value

### @public: strings of length n with k_final < n - c, against the 2^-c bound
def counting_check(n, c, table):
    assert c >= 0
    _decides(table, n, c)
    compressible = [x for x in bitstrings(n) if _order(table.k_final(x)) < n - c]

    fraction = Fraction(len(compressible), 2 ** n)
    bound = Fraction(1, 2 ** c)
    return {
        'n': n,
        'c': c,
        'caps': table.caps.to_json(),
        'compressible': len(compressible),
        'fraction': format_rational(fraction),
        'bound': format_rational(bound),
        'verdict': 'ok' if fraction <= bound else 'violation',
    }

class AxiomSample:
    def __init__(self, x, n, c, k_final):
        self.x = x
        self.n = n
        self.c = c
        self.k_final = k_final

    ### "K(x) >= n - c" as far as the capped table can tell
    @property
    def valid(self):
        return _order(self.k_final) >= self.n - self.c

    def __repr__(self):
        return "{}(K({}) >= {}, {})".format(self.__class__.__name__, self.x, self.n - self.c, 'valid' if self.valid else 'invalid')

    def statement(self):
        return "K({}) >= {}".format(self.x, self.n - self.c)

    def to_json(self):
        return {'x': self.x, 'n': self.n, 'c': self.c, 'statement': self.statement(),
            'k_final': self.k_final, 'valid': self.valid}

### @public
def sample_axiom(n, c, seed, table, index=0):
    _decides(table, n, c)
    rng = Pcg32(digest64(seed, index), digest64('kolmo', n))
    x = rng.bits(n)
    res = AxiomSample(x, n, c, table.k_final(x))
    if not res.valid:
        logger.info("sample_axiom: drew compressible {} (k_final={})".format(x, res.k_final))
    return res

### Invalid-axiom rate over `samples` draws, next to the exact fraction
def sample_rate(n, c, samples, seed, table):
    invalid = sum(1 for i in range(samples) if not sample_axiom(n, c, seed, table, i).valid)
    exact = counting_check(n, c, table)
    rate = Fraction(invalid, samples)
    sigma = math.sqrt(float(Fraction(exact['fraction'])) * (1 - float(Fraction(exact['fraction']))) / samples)
    return {
        'n': n,
        'c': c,
        'samples': samples,
        'seed': seed,
        'invalid': invalid,
        'rate': format_rational(rate),
        'exact': exact['fraction'],
        'bound': exact['bound'],
        'sigma': round(sigma, 6),
        'within_3sigma': abs(float(rate) - float(Fraction(exact['fraction']))) <= 3 * sigma + 1e-12,
    }

### @public: first t at which k_t reaches k_final for every |x| <= n
def compute_Tn(n, table):
    _table(table, n)
    witness = max(table.strings(n), key=lambda x: (table.final_time(x), shortlex(x)))
    return {
        'n': n,
        'T_n': table.final_time(witness),
        'witness': witness,
        'caps': table.caps.to_json(),
        'certainty': 'exact-under-caps',
    }

### @public: first T with k_t(x, T) <= 2 k_final(x) for every |x| <= n
def compute_Tn_factor2(n, table):
    _table(table, n)
    return max(table.factor2_time(x) for x in table.strings(n))

def margin_length(n, c, factor2=False):
    log = math.log2(n) if n > 1 else 0.0
    base = n / 2 if factor2 else n
    return int(math.floor(base - c * log))

class HaltingReport:
    def __init__(self, n, c, bound, length, audit, factor2=False):
        self.n = n
        self.c = c
        self.bound = bound
        self.length = length
        self.audit = audit
        self.factor2 = factor2
        self.checked = 0
        self.halting = 0
        self.diverging = 0
        self.counterexamples = []

    def __bool__(self):
        return not self.counterexamples

    def __repr__(self):
        return "{}(n={}, c={}, checked={}, counterexamples={})".format(self.__class__.__name__,
            self.n, self.c, self.checked, len(self.counterexamples))

    def to_json(self):
        return {
            'n': self.n,
            'c': self.c,
            'variant': 'factor2' if self.factor2 else 'plain',
            'time_bound': self.bound,
            'max_length': self.length,
            'audit_cap': self.audit,
            'checked': self.checked,
            'halting': self.halting,
            'diverging': self.diverging,
            'counterexamples': list(self.counterexamples),
            'verdict': 'ok' if self else 'violation',
        }

### @public
### Every program of at most n - c log n bits (n/2 - c log n for the factor-2
### variant) either halts within T_n (T'_n) steps or runs past the audit cap.
def halting_bound_check(n, c, table, audit=None, factor2=False):
    _table(table, n)
    bound = compute_Tn_factor2(n, table) if factor2 else compute_Tn(n, table)['T_n']
    audit = audit if audit is not None else max(100 * bound, 1000)
    length = margin_length(n, c, factor2)
    report = HaltingReport(n, c, bound, length, audit, factor2)
    if length < 0:
        return report
    for p in programs(length):
        state = vm_run(p, audit, max_output=table.caps.n_bound)
        report.checked += 1
        if state.diverges:
            report.diverging += 1
        if not state.halted:
            continue
        report.halting += 1
        if state.steps > bound:
            report.counterexamples.append({'program': ''.join(x.to_bits() for x in p),
                'asm': [repr(x) for x in p], 'steps': state.steps})
    logger.info("halting_bound_check: {}".format(report))
    return report

### Smallest integer margin constant with no counterexample at any n in `ns`
def calibrate_margin(ns, table, audit=None, factor2=False, c_max=8):
    for c in range(c_max + 1):
        if all(halting_bound_check(n, c, table, audit, factor2) for n in ns):
            return c
    return None

### @public: shortlex-first string of length <= n maximizing k_t(., t), None counting as +inf
def x_max(n, t, table):
    _table(table, n)
    best = None
    for x in bitstrings_upto(n):
        if best is None or _order(table.k_t(x, t)) > _order(table.k_t(best, t)):
            best = x
    return best

### {K(x) >= ceil(k_final(x) / 2) : |x| <= n}: per-string slack c_x is
### k_final(x) minus the claimed bound.
class HalfAxiomSet:
    def __init__(self, n, table):
        _table(table, n)
        self.n = n
        self.bounds = dict((x, -(-table.k_final(x) // 2)) for x in table.strings(n))
        self.table = table

    def __len__(self):
        return len(self.bounds)

    def consistent(self):
        return all(self.table.k_final(x) >= b for x, b in self.bounds.items())

    def to_json(self):
        return {'n': self.n, 'axioms': len(self.bounds), 'consistent': self.consistent()}

### @public
def factor2_check(n, table, schedule=None):
    _table(table, n)
    T2 = compute_Tn_factor2(n, table)
    Tn = compute_Tn(n, table)['T_n']
    top = max(table.k_final(x) for x in table.strings(n))
    if schedule is None:
        schedule = [t for t in table.breakpoints(n) if t > T2]
        if T2 + 1 <= table.caps.S_max:
            schedule = sorted(set(schedule + [T2 + 1]))
    audited = []
    failures = []
    for t in schedule:
        x = x_max(n, t, table)
        k = table.k_final(x)
        audited.append({'t': t, 'x_max': x, 'k_t': table.k_t(x, t), 'k_final': k})
        if 2 * k < top:
            failures.append(t)
    return {
        'n': n,
        'caps': table.caps.to_json(),
        'T_n': Tn,
        'T2_n': T2,
        'max_k_final': top,
        'audited': audited,
        'failures': failures,
        'half_axioms': HalfAxiomSet(n, table).to_json(),
        'verdict': 'ok' if not failures and T2 <= Tn else 'violation',
    }

### @public: m chained incompressibility axioms K(x) >= n - c on fresh random x
def incompressibility_strategy(n, c, m, table, feature=Feature()):
    _decides(table, n, c)
    assert m >= 1
    check = counting_check(n, c, table)
    delta = Fraction(check['fraction'])

    def holds(x):
        return _order(table.k_final(x)) >= n - c

    G = AST.GoalAtom('G')
    predicates = [Predicate('K{}'.format(i), n, 'callable', func=holds) for i in range(1, m + 1)]
    nodes = []
    for i in range(1, m + 1):
        child = 'step{}'.format(i + 1) if i < m else 'leaf'
        nodes.append(RandomStep('step{}'.format(i), 'K{}'.format(i), n, delta, ConstantSelector(child), 'enumerate'))
    nodes.append(Leaf('leaf', G))
    ### G: "some string of length n is incompressible", from any adopted axiom
    base = [AST.Implies(AST.PredAtom(p.name, x), G) for p in predicates for x in bitstrings(n)]
    epsilon = Fraction(m, 2 ** c)
    if epsilon < m * delta:
        raise CapitalError("epsilon {} below the spend {}".format(format_rational(epsilon), format_rational(m * delta)))
    return StrategyInstance('step1', nodes, epsilon, base, G, Interpretation(predicates, {'G': True}), feature)
