from fractions import Fraction

from .Tactic import Tactic, Honest
from .Logger import getLogger, setup

logger = getLogger(__name__)

class Feature:
    def __init__(self, debug=False, tactic=Honest(),
            atom_bound=20, enum_bound=20, exact_budget=2**20,
            chernoff_confidence=Fraction(99, 100), field_bits=8,
            qbf_brute_bound=16, qbf_protocol_bound=24, jobs=1):
        assert isinstance(debug, bool)
        assert isinstance(tactic, Tactic)
        assert atom_bound > 0 and enum_bound > 0 and exact_budget > 0
        assert 0 < chernoff_confidence < 1
        assert field_bits >= 2
        assert jobs >= 1
        self.debug = debug
        self.tactic = tactic
        self.atom_bound = atom_bound
        self.enum_bound = enum_bound
        self.exact_budget = exact_budget
        self.chernoff_confidence = Fraction(chernoff_confidence)
        self.field_bits = field_bits
        self.qbf_brute_bound = qbf_brute_bound
        self.qbf_protocol_bound = qbf_protocol_bound
        self.jobs = jobs

        if self.debug:
            setup(debug=True)
            logger.debug("ral.Feature: {}".format(self))

    def __repr__(self):
        return '{}(debug={}, tactic={}, atom_bound={}, enum_bound={}, exact_budget={}, jobs={})'.format(
            self.__class__.__name__, self.debug, self.tactic, self.atom_bound,
            self.enum_bound, self.exact_budget, self.jobs)

    def replace(self, **kwargs):
        values = dict(vars(self))
        values.update(kwargs)
        return Feature(**values)

class FeatureCapability:
    def __init__(self, feature):
        assert isinstance(feature, Feature)
        self.feature = feature
