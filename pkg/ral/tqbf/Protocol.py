from ..Exceptions import *
from ..Pcg32 import Pcg32
from ..Verdict import Reject, accept
from ..helper import digest64
from ..Logger import getLogger
from .Arithmetize import Arithmetization, LINEAR
from .Poly import Poly1

logger = getLogger(__name__)

### Verifier coins: one k-bit string per round, MSB-first, read as a field element
class ChallengeSource:
    def __init__(self, seed, k):
        self.seed = seed
        self.k = k
        self.rng = Pcg32(digest64(seed), digest64('tqbf'))

    def draw(self):
        return int(self.rng.bits(self.k), 2)

### Replays a fixed challenge list (exhaustive analysis, tests)
class FixedChallenges:
    def __init__(self, values):
        self.values = list(values)
        self.index = 0

    def draw(self):
        if self.index >= len(self.values):
            raise ExecutionError("challenge list exhausted after {} rounds".format(self.index))
        self.index += 1
        return self.values[self.index - 1]

class RoundRecord:
    def __init__(self, index, op, degree, claim, message, challenge, next_claim):
        self.index = index
        self.op = op
        self.degree = degree
        self.claim = claim
        self.message = message
        self.challenge = challenge
        self.next_claim = next_claim

    def __repr__(self):
        return "{}({}, {} {}, r={}, claim {} -> {})".format(self.__class__.__name__, self.index,
            self.op[0], self.op[1], self.challenge, self.claim, self.next_claim)

    def to_json(self):
        return {
            'round': self.index,
            'op': self.op[0],
            'var': self.op[1],
            'degree': self.degree,
            'claim': self.claim,
            'message': list(self.message.coeffs),
            'challenge': self.challenge,
            'next_claim': self.next_claim,
            'checks': 'passed',
        }

### Verifier-side view of a run: the operator position, the field point the
### free variables are pinned to, and the claimed value of the remaining
### operator suffix at that point.
class ProtocolState:
    def __init__(self, arith, claim=1):
        assert isinstance(arith, Arithmetization)
        self.arith = arith
        self.pos = 0
        self.point = {}
        self.claim = claim
        self.records = []

    def __repr__(self):
        return "{}(pos={}/{}, claim={}, point={})".format(self.__class__.__name__, self.pos, self.arith.rounds, self.claim, self.point)

    @property
    def field(self):
        return self.arith.field

    def finished(self):
        return self.pos == self.arith.rounds

    def op(self):
        return self.arith.ops[self.pos]

    def degree(self):
        return self.arith.round_degree(self.pos)

    ### Value the check compares against the claim, from P(0) and P(1)
    def combine(self, message):
        return self.combine_values(message(0), message(1))

    def combine_values(self, p0, p1):
        field = self.field
        q, x = self.op()
        if q == 'forall':
            return field.mul(p0, p1)
        if q == 'exists':
            return 1 ^ field.mul(1 ^ p0, 1 ^ p1)
        a = self.point[x]
        return field.mul(a, p1) ^ field.mul(1 ^ a, p0)

    def advance(self, message, r):
        q, x = self.op()
        next_claim = message(r)
        self.records.append(RoundRecord(self.pos, (q, x), self.degree(), self.claim, message, r, next_claim))
        self.point = dict(self.point, **{x: r})
        self.claim = next_claim
        self.pos += 1

    ### Copy for branching analyses; records are shared up to the branch point
    def fork(self):
        res = ProtocolState(self.arith, self.claim)
        res.pos = self.pos
        res.point = dict(self.point)
        res.records = list(self.records)
        return res

    def key(self):
        return (self.pos, tuple(sorted(self.point.items())), self.claim)

### @public: the true restriction polynomial
def honest_round(state):
    assert not state.finished()
    return state.arith.restriction(state.pos, state.point)

### Degree and consistency checks of one round, no coins drawn
def check_round(state, message):
    assert isinstance(message, Poly1)
    if message.field != state.field:
        return Reject("message over {} in a {} run".format(message.field, state.field), state.pos)
    if message.degree > state.degree():
        return Reject("degree {} exceeds round bound {}".format(message.degree, state.degree()), state.pos)
    if state.combine(message) != state.claim:
        q, x = state.op()
        return Reject("{} {} consistency check failed".format(q, x), state.pos)
    return accept

### @public: on success draws the challenge and advances `state`
def verify_round(state, message, challenges):
    verdict = check_round(state, message)
    if not verdict:
        return verdict
    state.advance(message, challenges.draw())
    return verdict

### The claim about the bare matrix is checked by direct evaluation
def final_check(state):
    assert state.finished()
    value = state.arith.matrix(state.point)
    if value != state.claim:
        return Reject("final evaluation {} != claim {}".format(value, state.claim), state.pos)
    return accept

def _sqrt_correction(field, target):
    return Poly1(field, [field.sqrt(target)])

### Smallest correction of T making P(0) * P(1) == target
def _product_correction(field, T, target, degree):
    if degree == 0:
        return _sqrt_correction(field, target)
    t0, t1 = T(0), T(1)
    if t1 != 0:
        e0 = field.div(target, t1) ^ t0
        return T + Poly1(field, [e0, e0])
    if t0 != 0:
        e1 = field.div(target, t0) ^ t1
        return T + Poly1(field, [0, e1])
    return T + Poly1(field, [1, 1 ^ target])

### @public: the true polynomial plus the lowest-degree correction that passes the check
def cheat_round(state):
    field = state.field
    T = honest_round(state)
    q, x = state.op()
    d = state.degree()
    if q == LINEAR:
        return T + Poly1(field, [state.claim ^ state.combine(T)])
    if q == 'forall':
        return _product_correction(field, T, state.claim, d)
    one = Poly1(field, [1])
    return one + _product_correction(field, one + T, 1 ^ state.claim, d)
