from fractions import Fraction

from .. import Tactic
from ..Exceptions import *
from ..Feature import Feature
from ..helper import format_rational
from ..Logger import getLogger
from .Arithmetize import arithmetize
from .Cheater import OptimalCheater
from .Protocol import ProtocolState, ChallengeSource, honest_round, cheat_round, verify_round, final_check
from .Qbf import QbfFormula

logger = getLogger(__name__)

class Prover:
    def __init__(self, arith):
        self.arith = arith

    def __repr__(self):
        return "{}()".format(self.__class__.__name__)

    def message(self, state):
        raise NotImplementedError()

class HonestProver(Prover):
    def message(self, state):
        return honest_round(state)

class CheatProver(Prover):
    def message(self, state):
        return cheat_round(state)

class OptimalProver(Prover):
    def __init__(self, arith, feature=Feature()):
        Prover.__init__(self, arith)
        self.cheater = OptimalCheater(arith, feature)

    def message(self, state):
        return self.cheater.message(state)

def make_prover(arith, tactic, feature=Feature()):
    if isinstance(tactic, Tactic.Honest):
        return HonestProver(arith)
    if isinstance(tactic, Tactic.Cheat):
        return CheatProver(arith)
    if isinstance(tactic, Tactic.OptimalCheat):
        return OptimalProver(arith, feature)
    raise UnhandledCaseError("tactic: {}".format(tactic))

class ProtocolRun:
    def __init__(self, arith, tactic, seed, verdict, records):
        self.arith = arith
        self.tactic = tactic
        self.seed = seed
        self.verdict = verdict
        self.records = records

    def __repr__(self):
        return "{}({}, seed={}, {}, rounds={})".format(self.__class__.__name__, self.tactic, self.seed, self.verdict, len(self.records))

    def __bool__(self):
        return bool(self.verdict)

    def to_json(self):
        res = {'seed': self.seed, 'prover': repr(self.tactic).lower(), 'k': self.arith.field.k}
        res.update(self.verdict.to_json())
        res['verdict'] = 'accept' if self.verdict else 'reject'
        return res

    ### Transcript as JSON lines: one record per round, then the verdict
    def to_json_lines(self):
        return [r.to_json() for r in self.records] + [self.to_json()]

### @public
def run_protocol(f, tactic=Tactic.Honest(), k=8, seed=0, feature=Feature(), arith=None, prover=None):
    if arith is None:
        assert isinstance(f, QbfFormula)
        arith = arithmetize(f, k, feature)
    if prover is None:
        prover = make_prover(arith, tactic, feature)
    state = ProtocolState(arith)
    challenges = ChallengeSource(seed, arith.field.k)
    while not state.finished():
        message = prover.message(state)
        verdict = verify_round(state, message, challenges)
        if not verdict:
            logger.debug("run_protocol: seed={} rejected at round {}: {}".format(seed, state.pos, verdict))
            return ProtocolRun(arith, tactic, seed, verdict, state.records)
    return ProtocolRun(arith, tactic, seed, final_check(state), state.records)

### Sum of round degrees over the field size: the soundness error bound
def soundness_bound(arith):
    return Fraction(sum(arith.round_degrees()), arith.field.order)

class AcceptanceReport:
    def __init__(self, arith, tactic, seeds, accepted):
        self.arith = arith
        self.tactic = tactic
        self.seeds = seeds
        self.accepted = accepted

    @property
    def rate(self):
        return Fraction(self.accepted, self.seeds)

    def __repr__(self):
        return "{}({}, {}/{})".format(self.__class__.__name__, self.tactic, self.accepted, self.seeds)

    def to_json(self):
        return {
            'formula': self.arith.formula.to_infix(),
            'k': self.arith.field.k,
            'prover': repr(self.tactic).lower(),
            'seeds': self.seeds,
            'accepted': self.accepted,
            'rate': format_rational(self.rate),
            'bound': format_rational(soundness_bound(self.arith)),
        }

### @public: runs seeds seed0 .. seed0 + seeds - 1 sharing one arithmetization and prover
def acceptance_rate(f, tactic, k, seeds, seed0=0, feature=Feature()):
    arith = arithmetize(f, k, feature)
    prover = make_prover(arith, tactic, feature)
    accepted = 0
    for seed in range(seed0, seed0 + seeds):
        if run_protocol(f, tactic, k, seed, feature, arith=arith, prover=prover):
            accepted += 1
    return AcceptanceReport(arith, tactic, seeds, accepted)
