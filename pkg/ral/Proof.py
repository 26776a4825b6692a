import json
from fractions import Fraction

from .Exceptions import *
from . import AST
from .Feature import Feature
from .Interpretation import Interpretation
from .Solver import tautological_consequence, count_falsifiers
from .Verdict import Reject, accept
from .dsl import parse_formula
from .helper import is_bitstring, format_rational
from .Logger import getLogger

logger = getLogger(__name__)

class Line:
    rule = None

    def __init__(self, formula):
        assert isinstance(formula, AST.AST)
        self.formula = formula

    def refs(self):
        return []

    def witnesses(self):
        return []

    def key(self):
        return (self.rule, self.formula, tuple(self.refs()), tuple(self.witnesses()))

    def __eq__(a, b):
        return isinstance(b, Line) and a.key() == b.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "{}({}, {})".format(self.__class__.__name__, self.refs(), self.formula)

    def to_json(self):
        return {'rule': self.rule, 'formula': self.formula.to_dsl(), 'refs': self.refs(), 'witnesses': self.witnesses()}

### Index into the declared axiom list
class AxiomRef(Line):
    rule = 'axiom'

    def __init__(self, index, formula):
        Line.__init__(self, formula)
        assert isinstance(index, int)
        self.index = index

    def refs(self):
        return [self.index]

### From a line holding CountAtMost(R,N,d) and |S| > d*2^N witnesses: R(s1) or ... or R(sk)
class CountingRule(Line):
    rule = 'counting'

    def __init__(self, source, witnesses, formula):
        Line.__init__(self, formula)
        assert isinstance(source, int)
        self.source = source
        self._witnesses = list(witnesses)

    def refs(self):
        return [self.source]

    def witnesses(self):
        return list(self._witnesses)

### Propositional tautological consequence of earlier lines (atoms opaque)
class TautCons(Line):
    rule = 'taut'

    def __init__(self, refs, formula):
        Line.__init__(self, formula)
        self._refs = list(refs)

    def refs(self):
        return list(self._refs)

def counting_conclusion(pred, witnesses):
    return AST.Disjunction(AST.PredAtom(pred, x) for x in witnesses)

class ProofObject:
    def __init__(self, lines=None):
        self.lines = list(lines or [])
        for line in self.lines:
            assert isinstance(line, Line)

    def __repr__(self):
        return "{}({} lines, size={})".format(self.__class__.__name__, len(self.lines), self.size())

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def __getitem__(self, i):
        return self.lines[i]

    @property
    def theorem(self):
        assert self.lines, "empty proof"
        return self.lines[-1].formula

    ### Total symbol count over all line formulas
    def size(self):
        return sum(line.formula.size() for line in self.lines)

    def to_json(self):
        return [line.to_json() for line in self.lines]

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, records, signature=None):
        lines = []
        for i, r in enumerate(records):
            try:
                formula = parse_formula(r['formula'], signature)
                refs = list(r.get('refs', []))
                if r['rule'] == 'axiom':
                    if len(refs) != 1:
                        raise ParseError("axiom line needs exactly one ref", i)
                    lines.append(AxiomRef(int(refs[0]), formula))
                elif r['rule'] == 'counting':
                    if len(refs) != 1:
                        raise ParseError("counting line needs exactly one source ref", i)
                    lines.append(CountingRule(int(refs[0]), list(r.get('witnesses', [])), formula))
                elif r['rule'] == 'taut':
                    lines.append(TautCons([int(x) for x in refs], formula))
                else:
                    raise ParseError("unknown rule '{}'".format(r['rule']), i)
            except KeyError as e:
                raise ParseError("line record misses field {}".format(e), i)
        return cls(lines)

    @classmethod
    def loads(cls, text, signature=None):
        return cls.from_json(json.loads(text), signature)

### Append-only proof assembly; identical lines are shared by reference
class ProofBuilder:
    def __init__(self):
        self.lines = []
        self.index = {}

    def __len__(self):
        return len(self.lines)

    def add(self, line):
        key = line.key()
        if key in self.index:
            return self.index[key]
        self.lines.append(line)
        self.index[key] = len(self.lines) - 1
        return len(self.lines) - 1

    def axiom(self, index, formula):
        return self.add(AxiomRef(index, formula))

    def counting(self, source, witnesses):
        count = self.lines[source].formula
        assert isinstance(count, AST.CountAtMost)
        return self.add(CountingRule(source, witnesses, counting_conclusion(count.pred, witnesses)))

    def taut(self, refs, formula):
        return self.add(TautCons(sorted(set(refs)), formula))

    def formula(self, i):
        return self.lines[i].formula

    ### Proof whose final line is `conclusion`
    def build(self, conclusion):
        if self.lines[conclusion] is not self.lines[-1]:
            line = self.lines[conclusion]
            self.lines.append(TautCons([conclusion], line.formula))
        return ProofObject(self.lines)

def _check_counting(p, i, line):
    if not (0 <= line.source < i):
        return Reject("dangling reference to line {}".format(line.source), i)
    count = p[line.source].formula
    if not isinstance(count, AST.CountAtMost):
        return Reject("source line {} does not hold a CountAtMost statement".format(line.source), i)
    S = line.witnesses()
    if len(set(S)) != len(S):
        return Reject("duplicate witness", i)
    for x in S:
        if not (isinstance(x, str) and len(x) == count.N and is_bitstring(x)):
            return Reject("witness '{}' is not a {}-bit string".format(x, count.N), i)
    ### |S| > delta * 2^N, exactly
    if not len(S) * count.delta.denominator > count.delta.numerator * 2 ** count.N:
        return Reject("bad witness count: {} > {}*2^{} fails".format(len(S), format_rational(count.delta), count.N), i)
    if line.formula != counting_conclusion(count.pred, S):
        return Reject("conclusion is not the disjunction over the witnesses", i)
    return accept

### @public
def check_proof(p, declared_axioms, feature=Feature()):
    assert isinstance(p, ProofObject)
    if not p.lines:
        return Reject("empty proof")

    for i, line in enumerate(p.lines):
        if isinstance(line, AxiomRef):
            if not (0 <= line.index < len(declared_axioms)):
                return Reject("dangling axiom reference {}".format(line.index), i)
            if line.formula != declared_axioms[line.index]:
                return Reject("formula differs from declared axiom {}".format(line.index), i)

        elif isinstance(line, CountingRule):
            res = _check_counting(p, i, line)
            if not res:
                return res

        elif isinstance(line, TautCons):
            for j in line.refs():
                if not (0 <= j < i):
                    return Reject("dangling reference to line {}".format(j), i)
            try:
                if not tautological_consequence([p[j].formula for j in line.refs()], line.formula, feature):
                    return Reject("non-tautological step", i)
            except BoundExceededError as e:
                return Reject("atom bound exceeded: {}".format(e), i)

        else:
            raise UnhandledCaseError("line: {}".format(line))

    if feature.debug:
        logger.debug("check_proof: accepted {}".format(p))
    return accept

### Certificate (or refusal) for the counting premise CountAtMost(pred, N, delta)
class CountingCertificate:
    def __init__(self, pred, N, delta, falsifiers):
        self.statement = AST.CountAtMost(pred, N, delta)
        self.falsifiers = falsifiers

    @property
    def ok(self):
        return self.falsifiers <= self.statement.allowance()

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "{}({}, k={})".format('certificate' if self.ok else 'refusal', self.statement, self.falsifiers)

    def to_json(self):
        return {
            'verdict': 'certificate' if self.ok else 'refusal',
            'statement': self.statement.to_dsl(),
            'falsifiers': self.falsifiers,
        }

### @public
def counting_certificate(pred, N, delta, m, feature=Feature()):
    assert isinstance(m, Interpretation)
    k = count_falsifiers(pred, N, m, feature)
    return CountingCertificate(pred, N, Fraction(delta), k)

### {predicates, axioms, proof} as `compile run --proof-out` writes it
def load_bundle(record):
    try:
        signature = Interpretation.from_json(record).signature()
        axioms = [parse_formula(x, signature) for x in record.get('axioms', [])]
        return ProofObject.from_json(record['proof'], signature), axioms
    except KeyError as e:
        raise ParseError("proof bundle misses field {}".format(e))
