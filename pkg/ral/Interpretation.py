# coding:utf-8
from .Exceptions import UndeclaredNameError, ArityError
from .helper import is_bitstring, bitstrings

### Total deterministic evaluator over bitstrings of one declared length
class Predicate:
    KINDS = ('always', 'never', 'true_on', 'false_on', 'weight_at_least', 'callable')

    def __init__(self, name, length, kind='always', points=None, weight=None, func=None):
        assert isinstance(name, str)
        assert isinstance(length, int) and length > 0
        assert kind in self.KINDS, "kind={}".format(kind)
        self.name = name
        self.length = length
        self.kind = kind
        self.points = frozenset(points or [])
        self.weight = weight
        self.func = func
        for x in self.points:
            if not (len(x) == length and is_bitstring(x)):
                raise ArityError("predicate {} point {} is not a {}-bit string".format(name, x, length))
        if kind == 'weight_at_least':
            assert isinstance(weight, int)
        if kind == 'callable':
            assert callable(func)

    def __repr__(self):
        return "{}({}/{}, {})".format(self.__class__.__name__, self.name, self.length, self.kind)

    def __call__(self, x):
        if len(x) != self.length:
            raise ArityError("{} takes {}-bit strings, got '{}'".format(self.name, self.length, x))
        if self.kind == 'always':
            return True
        if self.kind == 'never':
            return False
        if self.kind == 'true_on':
            return x in self.points
        if self.kind == 'false_on':
            return not x in self.points
        if self.kind == 'weight_at_least':
            return x.count('1') >= self.weight
        return bool(self.func(x))

    def to_json(self):
        res = {'name': self.name, 'length': self.length, 'kind': self.kind}
        if self.kind in ('true_on', 'false_on'):
            res['points'] = sorted(self.points)
        if self.kind == 'weight_at_least':
            res['weight'] = self.weight
        if self.kind == 'callable':
            res['kind'] = 'false_on'
            res['points'] = sorted(x for x in bitstrings(self.length) if not self(x))
        return res

    @classmethod
    def from_json(cls, record):
        return cls(record['name'], int(record['length']), record.get('kind', 'always'),
            points=record.get('points'), weight=record.get('weight'))

### Hidden ground truth: stands in for "true in the standard model"
class Interpretation:
    def __init__(self, predicates=None, goals=None):
        self.predicates = {}
        self.goals = {}
        for p in (predicates or []):
            self.declare(p)
        for name, value in (goals or {}).items():
            self.setGoal(name, value)

    def __repr__(self):
        if len(self.predicates) + len(self.goals) < 100:
            return "{}(predicates={}, goals={})".format(self.__class__.__name__, list(self.predicates.values()), self.goals)
        else: # Avoid too long output
            return "{}(...)".format(self.__class__.__name__)

    def declare(self, predicate):
        assert isinstance(predicate, Predicate)
        self.predicates[predicate.name] = predicate

    def setGoal(self, name, value):
        assert isinstance(name, str)
        assert isinstance(value, bool)
        self.goals[name] = value

    def pred(self, name):
        if not name in self.predicates:
            raise UndeclaredNameError("predicate {} is not declared".format(name))
        return self.predicates[name]

    def goal(self, name):
        if not name in self.goals:
            raise UndeclaredNameError("goal {} is not declared".format(name))
        return self.goals[name]

    ### name -> declared length, as the parser wants it
    def signature(self):
        return dict((name, p.length) for name, p in self.predicates.items())

    def copy(self):
        return Interpretation(list(self.predicates.values()), dict(self.goals))

    def to_json(self):
        return {
            'predicates': [self.predicates[k].to_json() for k in sorted(self.predicates)],
            'goals': dict(sorted(self.goals.items())),
        }

    @classmethod
    def from_json(cls, record):
        return cls([Predicate.from_json(p) for p in record.get('predicates', [])],
            dict((k, bool(v)) for k, v in record.get('goals', {}).items()))
