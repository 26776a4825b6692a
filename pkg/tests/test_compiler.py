import os
import unittest
from fractions import Fraction

from ral import *
from ral.strategy import *
from ral.compiler import *
from ral.Exceptions import NotDerivable

from fixtures import e1, G, R


class TestMarking(unittest.TestCase):
    def test_e1(self):
        print("\n[*] strong marking of E1")
        marking = mark_strong(e1())
        self.assertEqual(marking.root.p, Fraction(3, 4))
        self.assertTrue(marking.root.strong)
        self.assertEqual(marking.root.sons, ['00', '01', '10'])
        self.assertFalse(marking[('11',)].strong)
        self.assertEqual(len(marking), 5)
        self.assertEqual(marking.induction_failures(), [])

    def test_weak_root(self):
        print("\n[*] weak root")
        s = e1()
        s.base_axioms = s.base_axioms[:1]
        marking = mark_strong(s)
        self.assertEqual(marking.root.p, Fraction(1, 4))
        self.assertFalse(marking.root.strong)
        with self.assertRaises(NotDerivable):
            compile(s)


class TestCompile(unittest.TestCase):
    def test_e1(self):
        print("\n[*] compile E1 into a six-line proof")
        proof, verdict, c = compile_checked(e1())
        self.assertEqual(verdict, accept)
        self.assertEqual(len(proof), 6)
        self.assertEqual(proof.theorem, G)
        self.assertEqual(c.declared[3], CountAtMost('R', 2, Fraction(1, 4)))
        self.assertEqual([line.rule for line in proof], ['axiom', 'counting', 'axiom', 'axiom', 'axiom', 'taut'])
        self.assertEqual(proof[1].witnesses(), ['00', '01', '10'])

    def test_axiom_certificate(self):
        print("\n[*] compile with a counting premise among the base axioms")
        s = e1(certificate=('axiom', 3))
        s.base_axioms.append(CountAtMost('R', 2, Fraction(1, 4)))
        proof, verdict, c = compile_checked(s)
        self.assertEqual(verdict, accept)
        self.assertEqual(c.lemmas, [])

    def test_leaf_with_derived_count(self):
        print("\n[*] leaf whose counting premise follows from H and H -> CountAtMost")
        H = GoalAtom('H')
        count = CountAtMost('R', 2, Fraction(1, 4))
        m = Interpretation([Predicate('R', 2, 'false_on', points=['11'])], {'G': True, 'H': True})
        base = [H, Implies(H, count)] + [Implies(R(x), G) for x in ['00', '01', '10']]
        s = StrategyInstance('leaf', [Leaf('leaf', G)], Fraction(0), base, G, m)
        self.assertTrue(validate(s))
        self.assertEqual(exact_success_prob(s), 1)
        proof, verdict, c = compile_checked(s)
        self.assertEqual(verdict, accept)
        self.assertEqual(proof.theorem, G)
        rules = [line.rule for line in proof]
        self.assertEqual(rules.count('counting'), 3)
        self.assertIn(count, [line.formula for line in proof])

    def test_leaf_needs_entailment(self):
        print("\n[*] leaf proved from the base axioms")
        m = Interpretation([], {'F': True, 'G': True})
        F = GoalAtom('F')
        s = StrategyInstance('leaf', [Leaf('leaf', G)], Fraction(0), [F, Implies(F, G)], G, m)
        proof, verdict, c = compile_checked(s)
        self.assertEqual(verdict, accept)
        self.assertEqual(proof.theorem, G)

    def test_infer(self):
        print("\n[*] compile through an InferStep")
        F = GoalAtom('F')
        m = Interpretation([Predicate('R', 2, 'false_on', points=['11'])], {'F': True, 'G': True})
        justification = ProofObject([AxiomRef(0, Implies(F, G)), AxiomRef(1, F), TautCons([0, 1], G)])
        nodes = [
            RandomStep('root', 'R', 2, Fraction(1, 4), ConstantSelector('infer'), 'enumerate'),
            InferStep('infer', G, justification, 'leaf'),
            Leaf('leaf', G),
        ]
        s = StrategyInstance('root', nodes, Fraction(1, 4), [Implies(F, G), F], G, m)
        self.assertTrue(validate(s))
        self.assertEqual(exact_success_prob(s), Fraction(1))
        proof, verdict, c = compile_checked(s)
        self.assertEqual(verdict, accept)

    def test_generated(self):
        print("\n[*] every winning generated instance compiles to a checked proof")
        config = GeneratorConfig(max_N=2, max_depth=2)
        for seed in range(10):
            s = generate_instance(seed, config)
            if not validate(s):
                continue
            marking = mark_strong(s)
            if marking.root.p <= s.epsilon:
                continue
            self.assertTrue(marking.root.strong, msg="seed {}".format(seed))
            proof, verdict, c = compile_checked(s, marking)
            self.assertEqual(verdict, accept, msg="seed {}".format(seed))


class TestBlowup(unittest.TestCase):
    def test_bare_leaf(self):
        print("\n[*] B_0 is a bare leaf")
        s = blowup_family(0)
        self.assertTrue(validate(s))
        self.assertEqual(exact_success_prob(s), Fraction(1))
        self.assertEqual(len(compile(s)), 1)

    def test_family(self):
        print("\n[*] B_m compiles for m = 1..3")
        for m in range(1, 4):
            for kind in ['full', 'single']:
                s = blowup_family(m, kind)
                self.assertTrue(validate(s), msg="{} {}".format(kind, m))
                proof, verdict, c = compile_checked(s)
                self.assertEqual(verdict, accept, msg="{} {}".format(kind, m))

    def test_full_grows(self):
        print("\n[*] full family ratio grows with depth")
        report = blowup_report([1, 2, 3, 4])
        self.assertTrue(report.monotone)
        sizes = [r['compiled_size'] for r in report.rows]
        self.assertTrue(all(a < b for a, b in zip(sizes, sizes[1:])))
        self.assertEqual(report.summary()['family'], 'full')

    def test_single_is_control(self):
        print("\n[*] single-branch control grows slower than the full family")
        full = blowup_report([1, 2, 3, 4], 'full')
        single = blowup_report([1, 2, 3, 4], 'single')
        self.assertTrue(single, msg=repr(single.summary()))
        self.assertLessEqual(single.power['slope'], 1.0)
        ### ratio per level never increases
        per_level = [r['ratio'] / r['depth'] for r in single.rows]
        self.assertTrue(all(a >= b for a, b in zip(per_level, per_level[1:])), msg=per_level)
        self.assertLess(single.rows[-1]['compiled_size'], full.rows[-1]['compiled_size'])

    @unittest.skipUnless(os.environ.get('RAL_SLOW'), "set RAL_SLOW=1")
    def test_exponential_fit(self):
        print("\n[*] full family fits an exponential, depths 1..6")
        report = blowup_report([1, 2, 3, 4, 5, 6])
        self.assertTrue(report, msg=repr(report))
