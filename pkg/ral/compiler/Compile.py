
from .. import AST
from ..Exceptions import *
from ..Proof import ProofBuilder, AxiomRef, CountingRule, TautCons, check_proof
from ..Solver import licensed_counts, counting_disjunctions
from ..strategy.Instance import StrategyInstance, vertex_id
from ..strategy.Node import InferStep, RandomStep, Leaf
from ..Logger import getLogger
from .Marking import mark_strong, StrongMarking

logger = getLogger(__name__)

### Assembles a proof of the goal from the strong vertices of a marking.
###
### Every strong vertex u with path hypotheses h1..hk proves its claim
### h1 -> (h2 -> ... (hk -> goal)); the root claim is the goal. Declared
### axioms are the base axioms followed by the enumeration-certified
### counting lemmas.
class Compiler:
    def __init__(self, s, marking=None):
        assert isinstance(s, StrategyInstance)
        self.instance = s
        self.marking = marking or mark_strong(s)
        assert isinstance(self.marking, StrongMarking)
        self.base = list(s.base_axioms)
        self.lemmas = s.lemmas()
        self.declared = self.base + self.lemmas
        self.builder = ProofBuilder()
        self.full_size = 0

    def claim(self, hypotheses):
        return AST.curry(hypotheses, self.instance.goal)

    ### (line index, full size) proving the claim of the vertex at `path`
    def prove(self, path):
        mark = self.marking[path]
        if not mark.strong:
            raise NotDerivable("vertex {} is weak".format(vertex_id(path)))
        node = self.instance.node(mark.node)
        if isinstance(node, Leaf):
            return self.leaf(mark)
        if isinstance(node, RandomStep):
            return self.random(mark, node)
        if isinstance(node, InferStep):
            return self.infer(mark, node)
        raise UnhandledCaseError("node: {}".format(node))

    def leaf(self, mark):
        b = self.builder
        claim = self.claim(mark.hypotheses)
        if claim in self.declared:
            return b.axiom(self.declared.index(claim), claim), claim.size()

        refs = []
        full = claim.size()
        atoms = set(claim.getAtoms())
        for i, f in enumerate(self.base):
            refs.append(b.axiom(i, f))
            full += f.size()
            atoms |= f.getAtoms()

        ### Counting instances over the atoms in play, in the order the entailment closure licenses them
        counts = licensed_counts(self.base, atoms, self.instance.feature)
        for f in counts:
            if f in self.base:
                source = b.axiom(self.base.index(f), f)
            else:
                source = b.taut(list(refs), f)
                full += f.size()
            for disjunction in counting_disjunctions([f], atoms):
                refs.append(b.counting(source, [x.bits for x in disjunction.v]))
                full += disjunction.size()

        return b.taut(refs, claim), full

    ### Line holding the node's counting premise
    def counting_source(self, node):
        b = self.builder
        statement = node.statement()
        if node.certificate == 'enumerate':
            return b.axiom(self.declared.index(statement), statement), statement.size()
        kind, value = node.certificate
        if kind == 'axiom':
            return b.axiom(value, statement), statement.size()
        index = {}
        for j, line in enumerate(value):
            if isinstance(line, AxiomRef):
                index[j] = b.axiom(line.index, line.formula)
            elif isinstance(line, CountingRule):
                index[j] = b.add(CountingRule(index[line.source], line.witnesses(), line.formula))
            else:
                index[j] = b.taut([index[k] for k in line.refs()], line.formula)
        return index[len(value) - 1], value.size()

    def random(self, mark, node):
        b = self.builder
        source, full = self.counting_source(node)
        witness = b.counting(source, mark.sons)
        full += b.formula(witness).size()
        refs = [witness]
        for r in mark.sons:
            line, size = self.prove(mark.path + (r,))
            refs.append(line)
            full += size
        claim = self.claim(mark.hypotheses)
        return b.taut(refs, claim), full + claim.size()

    ### The justification re-proved under the path hypotheses H: each line phi becomes H -> phi
    def infer(self, mark, node):
        b = self.builder
        H = list(mark.hypotheses)
        rel = {}
        raw = {}
        full = 0
        for j, line in enumerate(node.justification):
            target = AST.curry(H, line.formula)
            if isinstance(line, AxiomRef):
                if line.index < len(self.base):
                    raw[j] = b.axiom(line.index, self.base[line.index])
                    full += line.formula.size()
                    rel[j] = raw[j] if not H else b.taut([raw[j]], target)
                else:
                    ### cites a hypothesis: H -> h holds outright
                    rel[j] = b.taut([], target)
            elif isinstance(line, CountingRule):
                c = b.add(CountingRule(raw[line.source], line.witnesses(), line.formula))
                full += line.formula.size()
                rel[j] = c if not H else b.taut([c], target)
            elif isinstance(line, TautCons):
                rel[j] = b.taut([rel[k] for k in line.refs()], target)
            else:
                raise UnhandledCaseError("line: {}".format(line))
            if H or isinstance(line, TautCons):
                full += target.size()
        chi = rel[len(node.justification) - 1]
        child, size = self.prove(mark.path + ('infer',))
        claim = self.claim(mark.hypotheses)
        return b.taut([chi, child], claim), full + size + claim.size()

    def run(self):
        if not self.marking.root.strong:
            raise NotDerivable("root is weak (p={}, epsilon={})".format(self.marking.root.p, self.instance.epsilon))
        root, self.full_size = self.prove(())
        proof = self.builder.build(root)
        if self.instance.feature.debug:
            logger.debug("compile: {} lines, size={}, full size={}".format(len(proof), proof.size(), self.full_size))
        return proof

### @public
def compile(s, marking=None):
    return Compiler(s, marking).run()

### @public: compile and re-check against the declared axioms
def compile_checked(s, marking=None):
    c = Compiler(s, marking)
    proof = c.run()
    verdict = check_proof(proof, c.declared, s.feature)
    return proof, verdict, c
