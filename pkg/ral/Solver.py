from functools import reduce
from itertools import combinations

from .Exceptions import *
from . import AST
from .Feature import Feature, FeatureCapability
from .Interpretation import Interpretation
from .ProfileCapability import ProfileCapability
from .smtlib.SmtlibCapability import SmtlibCapability
from .Verdict import Sat, Unsat, Unknown
from .helper import bitstrings
from .Logger import getLogger

logger = getLogger(__name__)

sat = Sat()
unsat = Unsat()
unknown = Unknown()

### Truth table as one integer: bit i holds the value under assignment i
class TruthColumns:
    def __init__(self, atoms, fixed=None):
        self.fixed = dict(fixed or {})
        self.atoms = sorted((a for a in atoms if not a in self.fixed), key=lambda a: a.to_dsl())
        self.index = dict((a, i) for i, a in enumerate(self.atoms))
        self.rows = 1 << len(self.atoms)
        self.full = (1 << self.rows) - 1
        self.cache = {}

    def column(self, atom):
        if atom in self.fixed:
            return self.full if self.fixed[atom] else 0
        i = self.index[atom]
        block = ((1 << (1 << i)) - 1) << (1 << i)
        repeat = self.full // ((1 << (1 << (i + 1))) - 1)
        return repeat * block

    def evaluate(self, expr):
        if expr in self.cache:
            return self.cache[expr]
        res = self.__evaluate(expr)
        self.cache[expr] = res
        return res

    def __evaluate(self, expr):
        if isinstance(expr, AST.Atom):
            return self.column(expr)
        if isinstance(expr, AST.Top):
            return self.full
        if isinstance(expr, AST.Bot):
            return 0
        if isinstance(expr, AST.Not):
            return self.full ^ self.evaluate(expr.v1)
        if isinstance(expr, AST.And):
            return reduce(lambda r, x: r & self.evaluate(x), expr.v, self.full)
        if isinstance(expr, AST.Or):
            return reduce(lambda r, x: r | self.evaluate(x), expr.v, 0)
        if isinstance(expr, AST.Implies):
            return (self.full ^ self.evaluate(expr.left)) | self.evaluate(expr.right)
        raise UnhandledCaseError("expr: {}".format(expr))

    ### At most floor(d*2^N) of the appearing R-atoms are false, for a licensed CountAtMost(R,N,d)
    def counting_closure(self, count):
        assert isinstance(count, AST.CountAtMost)
        candidates = [a for a in self.atoms if isinstance(a, AST.PredAtom) and a.pred == count.pred and len(a.bits) == count.N]
        K = count.allowance()
        if len(candidates) <= K:
            return self.full
        dp = [self.full] + [0] * K
        for a in candidates:
            c = self.column(a)
            nc = self.full ^ c
            dp = [(dp[j] & c) | ((dp[j - 1] & nc) if j > 0 else 0) for j in range(K + 1)]
        return reduce(lambda r, x: r | x, dp, 0)

    def assignment(self, row):
        res = dict(self.fixed)
        res.update((a, bool(row >> i & 1)) for i, a in enumerate(self.atoms))
        return res

### Signs (+1 / -1) under which each atom occurs
def polarity(expr, sign=1, res=None):
    res = {} if res is None else res
    if isinstance(expr, AST.Atom):
        res.setdefault(expr, set()).add(sign)
    elif isinstance(expr, AST.Not):
        polarity(expr.v1, -sign, res)
    elif isinstance(expr, AST.Implies):
        polarity(expr.left, -sign, res)
        polarity(expr.right, sign, res)
    elif isinstance(expr, AST.NOp):
        for x in expr.v:
            polarity(x, sign, res)
    return res

### Unit facts and pure literals, fixed ahead of the table (satisfiability-preserving)
def fixed_atoms(formulas, atoms, counting=True):
    protected = set()
    if counting:
        for count in atoms:
            if isinstance(count, AST.CountAtMost):
                protected.add(count)
                protected |= set(a for a in atoms if isinstance(a, AST.PredAtom) and a.pred == count.pred and len(a.bits) == count.N)
    fixed = {}
    for x in formulas:
        if isinstance(x, AST.Atom) and not x in protected:
            fixed[x] = True
        elif isinstance(x, AST.Not) and isinstance(x.v1, AST.Atom) and not x.v1 in protected:
            fixed[x.v1] = False
    signs = {}
    for x in formulas:
        polarity(x, 1, signs)
    for a, s in signs.items():
        if not a in fixed and not a in protected and len(s) == 1:
            fixed[a] = 1 in s
    return fixed

### Disjunctions the counting rule licenses from each count over the appearing R-atoms
def counting_disjunctions(counts, atoms):
    res = []
    for count in counts:
        candidates = sorted(a.bits for a in atoms if isinstance(a, AST.PredAtom) and a.pred == count.pred and len(a.bits) == count.N)
        K = count.allowance()
        if len(candidates) <= K:
            continue
        res += [AST.Disjunction(AST.PredAtom(count.pred, x) for x in S) for S in combinations(candidates, K + 1)]
    return res

### CountAtMost atoms among `atoms` that the premises derive with atoms opaque,
### closed under the disjunctions already licensed; premises first, then derivation order
def licensed_counts(premises, atoms, feature=Feature()):
    counts = sorted((a for a in atoms if isinstance(a, AST.CountAtMost)), key=lambda a: a.to_dsl())
    res = [c for c in counts if c in premises]
    pending = [c for c in counts if not c in res]
    while pending:
        known = list(premises) + counting_disjunctions(res, atoms)
        found = [c for c in pending if tautological_consequence(known, c, feature)]
        if not found:
            break
        res += found
        pending = [c for c in pending if not c in found]
    return res

class Solver(FeatureCapability, SmtlibCapability, ProfileCapability):
    def __init__(self, feature=Feature(), counting=True):
        assert isinstance(feature, Feature)
        FeatureCapability.__init__(self, feature)
        self.counting = counting
        self.constraints = []
        self.satisfiability = unknown
        self.table = None
        self.conjunction = None

    def add(self, *expr_list):
        for expr in expr_list:
            assert isinstance(expr, AST.AST), "expr={}".format(expr)
            self.constraints.append(expr)
        self.satisfiability = unknown
        self.table = None

    def atoms(self, *extra):
        return reduce(lambda r, x: r | x.getAtoms(), list(self.constraints) + list(extra), set())

    ### Table and row set where the constraints (and `query`, negated) hold
    def __build(self, query=None):
        formulas = list(self.constraints)
        if query is not None:
            ### not (h -> q) splits into h and not q, so hypotheses become unit facts
            while isinstance(query, AST.Implies):
                formulas.append(query.left)
                query = query.right
            formulas.append(AST.Not(query))
        atoms = reduce(lambda r, x: r | x.getAtoms(), formulas, set())
        fixed = fixed_atoms(formulas, atoms, self.counting)
        if len(atoms) - len(fixed) > self.feature.atom_bound:
            raise BoundExceededError("{} distinct atoms exceed the bound {}".format(len(atoms) - len(fixed), self.feature.atom_bound))
        table = TruthColumns(atoms, fixed)
        conjunction = reduce(lambda r, x: r & table.evaluate(x), formulas, table.full)
        if self.counting:
            for count in licensed_counts(self.constraints, atoms, self.feature):
                conjunction &= table.counting_closure(count)
        return table, conjunction

    def check(self):
        if self.satisfiability == unknown:
            self.table, self.conjunction = self.__build()
            self.satisfiability = sat if self.conjunction else unsat
        return self.satisfiability

    ### First satisfying assignment (atom -> bool), None when unsat
    def model(self):
        if not self.check():
            return None
        row = (self.conjunction & -self.conjunction).bit_length() - 1
        return self.table.assignment(row)

    ### True iff f holds in every row satisfying the constraints (and counting closure)
    def entails(self, f):
        assert isinstance(f, AST.AST)
        table, rows = self.__build(f)
        res = rows == 0
        if self.feature.debug:
            logger.debug("entails({} axioms, {}) = {} over {} atoms".format(len(self.constraints), f, res, len(table.atoms)))
        return res

    ### Row where constraints hold but f fails, None if entailed
    def countermodel(self, f):
        table, rows = self.__build(f)
        if not rows:
            return None
        return table.assignment((rows & -rows).bit_length() - 1)

### @public
def entails(axioms, f, feature=Feature()):
    s = Solver(feature)
    s.add(*axioms)
    return s.entails(f)

### @public: premises |= conclusion with atoms opaque (no counting closure)
def tautological_consequence(premises, conclusion, feature=Feature()):
    s = Solver(feature, counting=False)
    s.add(*premises)
    return s.entails(conclusion)

### @public
def eval_formula(f, m, feature=Feature()):
    assert isinstance(f, AST.AST)
    assert isinstance(m, Interpretation)

    if isinstance(f, AST.Top):
        return True
    if isinstance(f, AST.Bot):
        return False
    if isinstance(f, AST.PredAtom):
        return m.pred(f.pred)(f.bits)
    if isinstance(f, AST.GoalAtom):
        return m.goal(f.name)
    if isinstance(f, AST.CountAtMost):
        return count_falsifiers(f.pred, f.N, m, feature) <= f.allowance()
    if isinstance(f, AST.Not):
        return not eval_formula(f.v1, m, feature)
    if isinstance(f, AST.And):
        return all(eval_formula(x, m, feature) for x in f.v)
    if isinstance(f, AST.Or):
        return any(eval_formula(x, m, feature) for x in f.v)
    if isinstance(f, AST.Implies):
        return (not eval_formula(f.left, m, feature)) or eval_formula(f.right, m, feature)
    raise UnhandledCaseError("expr: {}".format(f))

def count_falsifiers(pred, N, m, feature=Feature()):
    if N > feature.enum_bound:
        raise BoundExceededError("enumerating 2^{} strings exceeds the bound 2^{}".format(N, feature.enum_bound))
    R = m.pred(pred)
    if R.length != N:
        raise ArityError("predicate {} takes {}-bit strings, counted at {}".format(pred, R.length, N))
    return sum(1 for x in bitstrings(N) if not R(x))
