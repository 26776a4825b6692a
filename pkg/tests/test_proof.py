import json
import unittest
from fractions import Fraction
from itertools import product

from hypothesis import given, settings, strategies as st

from ral import *
from ral.Proof import load_bundle
from ral.Exceptions import ParseError

G = GoalAtom('G')

def R(x):
    return PredAtom('R', x)

DECLARED = [Implies(R('00'), G), Implies(R('01'), G), Implies(R('10'), G), CountAtMost('R', 2, Fraction(1, 4))]

def counting_proof(witnesses):
    return ProofObject([
        AxiomRef(3, DECLARED[3]),
        CountingRule(0, witnesses, Or(*[R(x) for x in witnesses])),
        AxiomRef(0, DECLARED[0]),
        AxiomRef(1, DECLARED[1]),
        AxiomRef(2, DECLARED[2]),
        TautCons([1, 2, 3, 4], G),
    ])

def interpretations():
    strings = ['00', '01', '10', '11']
    for mask in range(16):
        points = [x for i, x in enumerate(strings) if mask >> i & 1]
        for f, g in product((False, True), repeat=2):
            yield Interpretation([Predicate('R', 2, 'true_on', points=points)], {'F': f, 'G': g})

def small_formulas():
    atoms = st.one_of(
        st.builds(R, st.sampled_from(['00', '01', '10', '11'])),
        st.builds(GoalAtom, st.sampled_from(['F', 'G'])),
        st.builds(CountAtMost, st.just('R'), st.just(2), st.sampled_from([Fraction(0), Fraction(1, 4), Fraction(1, 2)])),
    )
    return st.recursive(atoms, lambda children: st.one_of(
        st.builds(Not, children),
        st.builds(lambda a, b: Or(a, b), children, children),
        st.builds(Implies, children, children),
    ), max_leaves=4)

@st.composite
def random_proofs(draw):
    axioms = draw(st.lists(small_formulas(), min_size=1, max_size=4))
    lines = []
    for _ in range(draw(st.integers(min_value=1, max_value=6))):
        kind = draw(st.sampled_from(['axiom', 'axiom', 'taut', 'taut', 'counting']))
        if kind == 'axiom' or not lines:
            i = draw(st.integers(min_value=0, max_value=len(axioms) - 1))
            lines.append(AxiomRef(i, axioms[i]))
        elif kind == 'counting':
            j = draw(st.integers(min_value=0, max_value=len(lines) - 1))
            witnesses = sorted(draw(st.sets(st.sampled_from(['00', '01', '10', '11']), min_size=1)))
            lines.append(CountingRule(j, witnesses, Or(*[R(x) for x in witnesses])))
        else:
            refs = sorted(draw(st.sets(st.integers(min_value=0, max_value=len(lines) - 1), min_size=1, max_size=3)))
            premises = [lines[j].formula for j in refs]
            shape = draw(st.sampled_from(['and', 'or', 'random', 'consequent']))
            if shape == 'and':
                conclusion = And(*premises)
            elif shape == 'or':
                conclusion = Or(premises[0], draw(small_formulas()))
            elif shape == 'consequent' and isinstance(premises[0], Implies):
                conclusion = premises[0].right
            else:
                conclusion = draw(small_formulas())
            lines.append(TautCons(refs, conclusion))
    return axioms, ProofObject(lines)


class TestCheckProof(unittest.TestCase):
    def test_counting_proof(self):
        print("\n[*] G from three implications and CountAtMost(R, 2, 1/4)")
        self.assertEqual(check_proof(counting_proof(['00', '01', '10']), DECLARED), accept)

    def test_bad_witness_count(self):
        print("\n[*] one witness under delta = 1/4, N = 2")
        p = ProofObject([AxiomRef(3, DECLARED[3]), CountingRule(0, ['00'], R('00'))])
        res = check_proof(p, DECLARED)
        self.assertFalse(res)
        self.assertEqual(res.line, 1)
        self.assertIn('witness count', res.reason)

    def test_non_tautological(self):
        print("\n[*] G from R(00) -> G alone")
        p = ProofObject([AxiomRef(0, DECLARED[0]), TautCons([0], G)])
        res = check_proof(p, DECLARED)
        self.assertFalse(res)
        self.assertEqual(res.line, 1)
        self.assertEqual(res.reason, "non-tautological step")

    def test_dangling(self):
        print("\n[*] dangling references")
        res = check_proof(ProofObject([AxiomRef(7, G)]), DECLARED)
        self.assertFalse(res)
        self.assertEqual(res.line, 0)
        res = check_proof(ProofObject([AxiomRef(0, DECLARED[0]), TautCons([1], G)]), DECLARED)
        self.assertFalse(res)
        self.assertIn('dangling', res.reason)

    def test_axiom_mismatch(self):
        print("\n[*] axiom line with a different formula")
        res = check_proof(ProofObject([AxiomRef(0, G)]), DECLARED)
        self.assertFalse(res)
        self.assertEqual(res.line, 0)

    def test_counting_conclusion(self):
        print("\n[*] counting line must conclude the disjunction over its witnesses")
        p = ProofObject([AxiomRef(3, DECLARED[3]), CountingRule(0, ['00', '01'], Or(R('00'), R('10')))])
        self.assertFalse(check_proof(p, DECLARED))

    def test_counting_source(self):
        print("\n[*] counting source must be a CountAtMost line")
        p = ProofObject([AxiomRef(0, DECLARED[0]), CountingRule(0, ['00', '01'], Or(R('00'), R('01')))])
        self.assertFalse(check_proof(p, DECLARED))

    def test_empty(self):
        print("\n[*] empty proof")
        self.assertFalse(check_proof(ProofObject([]), DECLARED))

    def test_json(self):
        print("\n[*] proof JSON")
        p = counting_proof(['00', '01', '10'])
        records = json.loads(p.dumps())
        self.assertEqual(records[1], {'rule': 'counting', 'formula': '(or (pred R 00) (pred R 01) (pred R 10))',
            'refs': [0], 'witnesses': ['00', '01', '10']})
        q = ProofObject.from_json(records, {'R': 2})
        self.assertEqual(q.lines, p.lines)
        self.assertEqual(check_proof(q, DECLARED), accept)
        with self.assertRaises(ParseError):
            ProofObject.from_json([{'rule': 'modus', 'formula': 'true'}])
        with self.assertRaises(ParseError):
            ProofObject.from_json([{'rule': 'axiom', 'formula': 'true', 'refs': []}])

    def test_bundle(self):
        print("\n[*] proof bundle")
        bundle = {
            'predicates': [{'name': 'R', 'length': 2, 'kind': 'false_on', 'points': ['11']}],
            'axioms': [x.to_dsl() for x in DECLARED],
            'proof': counting_proof(['00', '01', '10']).to_json(),
        }
        proof, axioms = load_bundle(bundle)
        self.assertEqual(axioms, DECLARED)
        self.assertEqual(check_proof(proof, axioms), accept)
        with self.assertRaises(ParseError):
            load_bundle({'axioms': []})

    def test_builder(self):
        print("\n[*] ProofBuilder shares identical lines")
        b = ProofBuilder()
        i = b.axiom(0, DECLARED[0])
        self.assertEqual(b.axiom(0, DECLARED[0]), i)
        c = b.axiom(3, DECLARED[3])
        d = b.counting(c, ['00', '01'])
        self.assertEqual(b.formula(d), Or(R('00'), R('01')))
        p = b.build(i)
        self.assertEqual(p.theorem, DECLARED[0])
        self.assertEqual(len(p), 4)
        self.assertEqual(check_proof(p, DECLARED), accept)

    @settings(max_examples=150, derandomize=True, deadline=None)
    @given(random_proofs())
    def test_kernel_soundness(self, proof):
        axioms, p = proof
        if not check_proof(p, axioms):
            return
        for m in interpretations():
            if all(eval_formula(x, m) for x in axioms):
                self.assertTrue(eval_formula(p.theorem, m), msg="{} under {}".format(p.lines, m))
