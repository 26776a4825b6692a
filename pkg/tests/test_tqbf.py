import os
import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from ral import Tactic, Feature
from ral.tqbf import *
from ral.corpus import qbf_corpus
from ral import eval_formula
from ral.strategy import validate, exact_success_prob, chernoff_halfwidth
from ral.Exceptions import ParseError, FreeVariableError, BoundExceededError, ExecutionError

TRUE_QBF = "(forall x (exists y (and (or x y) (or (not x) y))))"
FALSE_QBF = "(forall x (exists y (and x y)))"

QDIMACS = """c the same formula as TRUE_QBF
p cnf 2 2
a 1 0
e 2 0
1 2 0
-1 2 0
"""


class TestField(unittest.TestCase):
    def test_irreducible(self):
        print("\n[*] every table modulus is irreducible")
        for k, m in IRREDUCIBLE.items():
            self.assertEqual(m.bit_length() - 1, k)
            self.assertTrue(is_irreducible(m), msg="k={}".format(k))
        self.assertFalse(is_irreducible(0b101))

    def test_unsupported(self):
        print("\n[*] k outside the table")
        with self.assertRaises(BoundExceededError):
            GF2k(17)

    @settings(max_examples=300, derandomize=True)
    @given(st.integers(min_value=2, max_value=10), st.data())
    def test_axioms(self, k, data):
        field = GF2k(k)
        a, b, c = [data.draw(st.integers(min_value=0, max_value=field.order - 1)) for _ in range(3)]
        self.assertEqual(field.mul(a, b), field.mul_slow(a, b))
        self.assertEqual(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c)))
        self.assertEqual(field.mul(a, b ^ c), field.mul(a, b) ^ field.mul(a, c))
        if a:
            self.assertEqual(field.mul(a, field.inverse(a)), 1)
        self.assertEqual(field.mul(field.sqrt(a), field.sqrt(a)), a)

    def test_elements(self):
        print("\n[*] FieldElement operators")
        field = GF2k(8)
        a = field.element(0x57)
        b = field.element(0x83)
        self.assertEqual(int(a * b), 0xC1)
        self.assertEqual(int(a + a), 0)
        self.assertEqual(a / b * b, a)


class TestPoly(unittest.TestCase):
    @settings(max_examples=100, derandomize=True)
    @given(st.lists(st.integers(min_value=0, max_value=255), min_size=1, max_size=6))
    def test_interpolate(self, coeffs):
        field = GF2k(8)
        p = Poly1(field, coeffs)
        xs = list(range(len(coeffs)))
        self.assertEqual(interpolate(field, xs, p.values(xs)), p)
        for x in [0, 1, 2, 200]:
            self.assertEqual(p(x), p.eval_naive(x))

    def test_arithmetic(self):
        print("\n[*] polynomial arithmetic")
        field = GF2k(4)
        x = Poly1(field, [0, 1])
        one = Poly1(field, [1])
        self.assertEqual((x + one) * (x + one), x * x + one)
        self.assertEqual((x + x).degree, -1)
        self.assertTrue(Poly1(field, [0, 0]).is_zero())
        self.assertEqual(Poly1.from_json((x * 3).to_json()), x * 3)


class TestParse(unittest.TestCase):
    def test_infix(self):
        print("\n[*] infix QBF")
        f = parse_qbf(TRUE_QBF)
        self.assertEqual(f.prefix, [('forall', 'x'), ('exists', 'y')])
        self.assertEqual(f.to_infix(), TRUE_QBF)
        self.assertEqual(parse_qbf("(forall (x y) (or x y))").variables, ['x', 'y'])

    def test_qdimacs(self):
        print("\n[*] QDIMACS")
        f = parse_qbf(QDIMACS)
        self.assertEqual(f, parse_infix("(forall x1 (exists x2 (and (or x1 x2) (or (not x1) x2))))"))
        self.assertEqual(parse_qdimacs(to_qdimacs(f)), f)

    def test_errors(self):
        print("\n[*] malformed QBF")
        with self.assertRaises(FreeVariableError):
            parse_qbf("(forall x (and x y))")
        with self.assertRaises(ParseError):
            parse_qbf("(forall x (forall x x))")
        with self.assertRaises(ParseError):
            parse_qbf("(forall x (and x (exists y y)))")
        with self.assertRaises(ParseError):
            parse_qbf("a 1 0\n1 0\n")
        with self.assertRaises(ParseError):
            parse_qbf("p cnf 1 2\na 1 0\n1 0\n")
        with self.assertRaises(ParseError):
            parse_qbf("p cnf 1 1\na 2 0\n2 0\n")


class TestEval(unittest.TestCase):
    def test_brute(self):
        print("\n[*] brute_eval")
        self.assertTrue(brute_eval(parse_qbf(TRUE_QBF)))
        self.assertFalse(brute_eval(parse_qbf(FALSE_QBF)))
        self.assertTrue(brute_eval(parse_qbf("(exists x (exists y (and x (not y))))")))

    def test_bound(self):
        print("\n[*] brute-force bound")
        f = parse_qbf("(forall (a b c) (or a b c))")
        with self.assertRaises(BoundExceededError):
            brute_eval(f, Feature(qbf_brute_bound=2))

    def test_arithmetization_agrees(self):
        print("\n[*] arithmetized value agrees with the boolean value")
        for f in qbf_corpus(max_vars=2, max_size=5):
            arith = arithmetize(f, 8)
            self.assertEqual(arith.value(0, {}), int(brute_eval(f)), msg=f.to_infix())

    def test_shannon(self):
        print("\n[*] Shannon expansion agrees with brute force")
        for f in qbf_corpus(max_vars=2, max_size=3):
            self.assertEqual(shannon_eval(f), brute_eval(f), msg=f.to_infix())

    def test_smt2(self):
        print("\n[*] QBF as SMT-LIB")
        text = qbf_to_smt2(parse_qbf(TRUE_QBF))
        self.assertIn("(set-logic BOOL)", text)
        self.assertIn("forall", text)
        self.assertIn("exists", text)
        self.assertTrue(text.rstrip().endswith("(check-sat)"))


class TestProtocol(unittest.TestCase):
    def test_degrees(self):
        print("\n[*] round degrees of the forall-exists example")
        arith = arithmetize(parse_qbf(TRUE_QBF), 8)
        self.assertEqual(arith.ops, [('forall', 'x'), ('linear', 'x'), ('exists', 'y'), ('linear', 'x'), ('linear', 'y')])
        self.assertEqual(arith.round_degrees(), [1, 2, 1, 2, 2])
        self.assertEqual(soundness_bound(arith), Fraction(8, 256))

    def test_degree_bound(self):
        print("\n[*] degree must stay below the field size")
        with self.assertRaises(BoundExceededError):
            arithmetize(parse_qbf("(forall x (and x x x x x))"), 2)

    def test_honest_completeness(self):
        print("\n[*] honest prover is accepted on a true formula")
        f = parse_qbf(TRUE_QBF)
        for seed in range(10):
            run = run_protocol(f, Tactic.Honest(), 8, seed)
            self.assertTrue(run, msg=repr(run))
            self.assertEqual(len(run.records), 5)
            self.assertEqual(run.to_json_lines()[-1]['verdict'], 'accept')

    def test_deterministic(self):
        print("\n[*] transcripts are a function of the seed")
        f = parse_qbf(TRUE_QBF)
        a = run_protocol(f, Tactic.Honest(), 8, 42).to_json_lines()
        self.assertEqual(a, run_protocol(f, Tactic.Honest(), 8, 42).to_json_lines())

    def test_honest_rejected_on_false(self):
        print("\n[*] honest prover is rejected on a false formula")
        run = run_protocol(parse_qbf(FALSE_QBF), Tactic.Honest(), 8, 0)
        self.assertFalse(run)
        self.assertEqual(run.verdict.line, 0)

    def test_tampered_message(self):
        print("\n[*] a message of too high degree is rejected")
        arith = arithmetize(parse_qbf(TRUE_QBF), 8)
        state = ProtocolState(arith)
        message = honest_round(state) + Poly1(arith.field, [0, 0, 0, 1])
        self.assertFalse(check_round(state, message))
        state = ProtocolState(arith)
        self.assertTrue(verify_round(state, honest_round(state), FixedChallenges([5])))
        self.assertEqual(state.point, {'x': 5})
        with self.assertRaises(ExecutionError):
            FixedChallenges([]).draw()

    def test_cheat_bound(self):
        print("\n[*] cheating prover stays under the soundness bound")
        f = parse_qbf(FALSE_QBF)
        report = acceptance_rate(f, Tactic.Cheat(), 8, 300)
        bound = soundness_bound(report.arith)
        self.assertEqual(bound, Fraction(6, 256))
        self.assertLessEqual(report.rate, bound + Fraction(1, 20))

    def test_cheat_round_passes_check(self):
        print("\n[*] every cheating message passes its round check")
        arith = arithmetize(parse_qbf(FALSE_QBF), 8)
        state = ProtocolState(arith)
        challenges = ChallengeSource(3, 8)
        while not state.finished():
            message = cheat_round(state)
            self.assertLessEqual(message.degree, state.degree())
            self.assertTrue(verify_round(state, message, challenges))

    def test_optimal_cheater(self):
        print("\n[*] optimal cheater over GF(4)")
        arith = arithmetize(parse_qbf("(forall x x)"), 2)
        bound = soundness_bound(arith)
        self.assertEqual(bound, Fraction(1, 2))
        best = optimal_cheater_value(arith)
        self.assertLessEqual(best, bound)
        self.assertGreaterEqual(best, exact_acceptance(arith, cheat_round))
        self.assertEqual(exact_acceptance(arith, honest_round), Fraction(0))
        true = arithmetize(parse_qbf("(exists x x)"), 2)
        self.assertEqual(exact_acceptance(true, honest_round), Fraction(1))

    def test_honest_completeness_on_corpus(self):
        print("\n[*] honest prover is accepted on every true formula of the small corpus")
        count = 0
        for f in qbf_corpus(max_vars=2, max_size=4):
            if not brute_eval(f):
                continue
            count += 1
            for seed in range(3):
                self.assertTrue(run_protocol(f, Tactic.Honest(), 8, seed), msg="{} seed={}".format(f.to_infix(), seed))
        self.assertGreater(count, 0)

    def test_optimal_cheater_rate(self):
        print("\n[*] measured acceptance of the optimal cheater matches its exact value")
        f = parse_qbf("(forall x x)")
        for k in [2, 3, 4]:
            report = acceptance_rate(f, Tactic.OptimalCheat(), k, 400)
            best = optimal_cheater_value(report.arith)
            self.assertLessEqual(best, soundness_bound(report.arith))
            self.assertLessEqual(abs(float(report.rate) - float(best)), chernoff_halfwidth(400, Fraction(999, 1000)), msg="k={}".format(k))

    @unittest.skipUnless(os.environ.get('RAL_SLOW'), "set RAL_SLOW=1")
    def test_cheat_sweep(self):
        print("\n[*] cheating prover over the small QBF corpus")
        for f in qbf_corpus(max_vars=2, max_size=4):
            if brute_eval(f):
                continue
            report = acceptance_rate(f, Tactic.Cheat(), 8, 200)
            self.assertLessEqual(report.rate, soundness_bound(report.arith) + Fraction(1, 10), msg=f.to_infix())


class TestExport(unittest.TestCase):
    FORMULA = "(forall x (or x (not x)))"

    def test_export(self):
        print("\n[*] honest transcript as a strategy")
        run = run_protocol(parse_qbf(self.FORMULA), Tactic.Honest(), 2, 0)
        self.assertTrue(run)
        s = export_strategy(run)
        self.assertEqual(s.epsilon, Fraction(3, 4))
        self.assertTrue(validate(s))
        self.assertEqual(exact_success_prob(s), Fraction(1))

    def test_rejected_run(self):
        print("\n[*] rejected runs do not export")
        run = run_protocol(parse_qbf(FALSE_QBF), Tactic.Honest(), 8, 0)
        with self.assertRaises(ExecutionError):
            export_strategy(run)

    def test_compile_sizes(self):
        print("\n[*] compiled export grows with the field size")
        rows = export_compile_sizes(parse_qbf(self.FORMULA), [2, 3, 4])
        sizes = [r['compiled_size'] for r in rows]
        self.assertTrue(all(a < b for a, b in zip(sizes, sizes[1:])), msg=sizes)

    def test_honest_claims_true(self):
        print("\n[*] every claim of an honest export is true")
        run = run_protocol(parse_qbf(TRUE_QBF), Tactic.Honest(), 3, 1)
        self.assertTrue(run)
        self.assertTrue(all(true_claims(run)))
        s = export_strategy(run)
        self.assertTrue(eval_formula(s.goal, s.ground_truth))

    def test_accepted_cheat_export(self):
        print("\n[*] an accepted cheating run exports a strategy whose goal is false")
        f = parse_qbf("(forall x x)")
        accepted = 0
        for seed in range(40):
            run = run_protocol(f, Tactic.Cheat(), 2, seed)
            if not run:
                continue
            accepted += 1
            self.assertFalse(true_claims(run)[0])
            s = export_strategy(run)
            self.assertFalse(eval_formula(s.goal, s.ground_truth), msg="seed={}".format(seed))
            if validate(s):
                self.assertLessEqual(exact_success_prob(s), s.epsilon, msg="seed={}".format(seed))
        self.assertGreater(accepted, 0)
