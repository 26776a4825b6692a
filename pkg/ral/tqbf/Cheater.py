### Exact acceptance analysis over tiny fields.
###
### The verifier's coins are enumerated exhaustively, so every value here is an
### exact rational. `OptimalCheater` plays the backward-induction argmax: at each
### round it picks the message maximizing the average, over the next challenge,
### of the best continuation value.
from fractions import Fraction
from itertools import product

from ..Exceptions import *
from ..Feature import Feature, FeatureCapability
from ..ProfileCapability import ProfileCapability
from ..Logger import getLogger
from .Arithmetize import Arithmetization
from .Poly import Poly1, interpolate
from .Protocol import ProtocolState, check_round, final_check, honest_round

logger = getLogger(__name__)

### Every message of degree <= d that passes the round check, in a fixed order
def passing_messages(state):
    field = state.field
    d = state.degree()
    if d == 0:
        for v in field.elements():
            if state.combine_values(v, v) == state.claim:
                yield Poly1(field, [v])
        return
    xs = list(range(d + 1))
    for p0, p1 in product(field.elements(), repeat=2):
        if state.combine_values(p0, p1) != state.claim:
            continue
        for rest in product(field.elements(), repeat=d - 1):
            yield interpolate(field, xs, [p0, p1] + list(rest))

def _child(state, r, claim):
    res = state.fork()
    _, x = res.op()
    res.point = dict(res.point, **{x: r})
    res.claim = claim
    res.pos += 1
    return res

class OptimalCheater(FeatureCapability, ProfileCapability):
    def __init__(self, arith, feature=Feature()):
        FeatureCapability.__init__(self, feature)
        assert isinstance(arith, Arithmetization)
        self.arith = arith
        self.values = {}
        self.best = {}
        self.work = 0

    def __repr__(self):
        return "{}({}, states={}, work={})".format(self.__class__.__name__, self.arith, len(self.values), self.work)

    def value(self, state):
        key = state.key()
        if key in self.values:
            return self.values[key]
        if state.finished():
            res = Fraction(1) if final_check(state) else Fraction(0)
            self.values[key] = res
            return res

        field = state.field
        _, x = state.op()
        res = None
        best = None
        for message in passing_messages(state):
            self.work += 1
            if self.work > self.feature.exact_budget:
                raise BudgetExceededError("optimal cheater ran past {} messages at {}".format(self.feature.exact_budget, state))
            total = sum(self.value(_child(state, r, message(r))) for r in field.elements())
            v = Fraction(total, field.order)
            if res is None or v > res:
                res, best = v, message
            if res == 1:
                break
        if res is None:
            res = Fraction(0)
        self.values[key] = res
        self.best[key] = best
        return res

    ### The argmax message at `state` (falls back to the honest one when nothing passes)
    def message(self, state):
        self.value(state)
        best = self.best.get(state.key())
        return best if best is not None else honest_round(state)

### @public: best acceptance probability of any prover from the initial claim 1
def optimal_cheater_value(arith, feature=Feature()):
    if not isinstance(arith, Arithmetization):
        raise TypeError("expected an Arithmetization, got {}".format(arith))
    return OptimalCheater(arith, feature).value(ProtocolState(arith))

### @public: acceptance probability of a deterministic prover `message(state)`, over all coins
def exact_acceptance(arith, message, feature=Feature()):
    memo = {}
    budget = feature.exact_budget

    def walk(state):
        key = state.key()
        if key in memo:
            return memo[key]
        if len(memo) > budget:
            raise BudgetExceededError("exact acceptance ran past {} states".format(budget))
        if state.finished():
            res = Fraction(1) if final_check(state) else Fraction(0)
        else:
            m = message(state)
            if not check_round(state, m):
                res = Fraction(0)
            else:
                total = sum(walk(_child(state, r, m(r))) for r in state.field.elements())
                res = Fraction(total, state.field.order)
        memo[key] = res
        return res

    return walk(ProtocolState(arith))
