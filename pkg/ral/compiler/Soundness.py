from fractions import Fraction

from ..Exceptions import *
from ..Feature import Feature
from ..Solver import eval_formula
from ..helper import digest64, format_rational
from ..strategy.Instance import validate
from ..strategy.Engine import exact_success_prob, BadAxiomEvaluator
from ..strategy.Generator import GeneratorConfig, generate_instance
from ..Logger import getLogger
from .Marking import mark_strong
from .Compile import compile_checked

logger = getLogger(__name__)

class SoundnessReport:
    def __init__(self, config, trials, seed):
        self.config = config
        self.trials = trials
        self.seed = seed
        self.checked = 0
        self.invalid = 0
        self.winning = 0
        self.compiled = 0
        self.compile_skipped = 0
        self.false_goals = 0
        self.max_bad = Fraction(0)
        self.counterexamples = []

    def __bool__(self):
        return not self.counterexamples

    def __repr__(self):
        return "{}(checked={}, winning={}, compiled={}, counterexamples={})".format(self.__class__.__name__,
            self.checked, self.winning, self.compiled, len(self.counterexamples))

    def violation(self, trial, rule, s, **kwargs):
        self.counterexamples.append(dict(kwargs, trial=trial, rule=rule, instance=s.to_json()))

    ### Every check on one instance; `trial` only labels counterexamples
    def record(self, trial, s):
        violations = validate(s)
        if not violations:
            logger.warning("soundness_harness: generated instance {} is invalid: {}".format(trial, violations))
            self.invalid += 1
            return
        self.checked += 1
        p = exact_success_prob(s)
        truth = eval_formula(s.goal, s.ground_truth, s.feature)
        if not truth:
            self.false_goals += 1
        ### winning is strict: p = epsilon proves nothing
        if p > s.epsilon:
            self.winning += 1
            if not truth:
                self.violation(trial, 'false-goal-won', s, p=format_rational(p))
            self.compile_winner(trial, s)

        evaluator = BadAxiomEvaluator(s)
        bad = evaluator.value(s.root)
        self.max_bad = max(self.max_bad, bad)
        if bad > s.epsilon:
            self.violation(trial, 'bad-axiom', s, bad=format_rational(bad))
        for excess in evaluator.audit():
            self.violation(trial, 'vertex-risk', s, **excess)

    ### A winning strategy compiles into a proof the kernel accepts
    def compile_winner(self, trial, s):
        try:
            marking = mark_strong(s)
            failures = marking.induction_failures()
            if failures:
                self.violation(trial, 'induction', s, vertices=[m.to_json() for m in failures])
                return
            proof, verdict, _ = compile_checked(s, marking)
        except NotDerivable as e:
            self.violation(trial, 'not-derivable', s, reason=str(e))
            return
        except (BoundExceededError, BudgetExceededError) as e:
            logger.warning("soundness_harness: instance {} skipped by the compiler: {}".format(trial, e))
            self.compile_skipped += 1
            return
        if not verdict:
            self.violation(trial, 'compile-rejected', s, verdict=verdict.to_json())
            return
        self.compiled += 1

    def to_json(self):
        return {
            'config': self.config.to_json(),
            'trials': self.trials,
            'seed': self.seed,
            'checked': self.checked,
            'invalid': self.invalid,
            'winning': self.winning,
            'compiled': self.compiled,
            'compile_skipped': self.compile_skipped,
            'false_goals': self.false_goals,
            'max_bad_axiom_prob': format_rational(self.max_bad),
            'counterexamples': list(self.counterexamples),
            'verdict': 'ok' if self else 'violation',
        }

### @public
def soundness_harness(config, trials, seed, feature=Feature()):
    assert isinstance(config, GeneratorConfig)
    report = SoundnessReport(config, trials, seed)
    for i in range(trials):
        report.record(i, generate_instance(digest64(seed, i), config, feature))
    logger.info("soundness_harness: {}".format(report))
    return report
