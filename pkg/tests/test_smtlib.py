import unittest
from fractions import Fraction

from ral import *
from ral.Exceptions import ParseError
from ral.smtlib.convert import COUNT_PREFIX

from test_proof import DECLARED, counting_proof

G = GoalAtom('G')


class TestSmtlib(unittest.TestCase):
    def test_symbols(self):
        print("\n[*] atom <-> symbol name")
        for atom in [PredAtom('R', '0101'), GoalAtom('G'), CountAtMost('R', 2, Fraction(1, 4))]:
            self.assertEqual(atom_from_symbol(symbol_name(atom)), atom)
        self.assertEqual(symbol_name(CountAtMost('R', 2, Fraction(1, 4))), "{}@R@2@1/4".format(COUNT_PREFIX))
        with self.assertRaises(ParseError):
            atom_from_symbol("R@01@x")

    def test_solver_script(self):
        print("\n[*] Solver.to_smt2 parses back to the same constraints")
        s = Solver()
        s.add(*DECLARED)
        s.add(Not(G))
        text = s.to_smt2()
        self.assertIn("(set-logic QF_UF)", text)
        self.assertEqual(text.count("(declare-fun"), 5)
        self.assertEqual(parse_smt2(text), DECLARED + [Not(G)])

    def test_parse(self):
        print("\n[*] parse SMT-LIB")
        text = "(declare-fun F () Bool)(declare-fun R@01 () Bool)(assert (=> F R@01))(assert (= F true))(check-sat)"
        res = parse_smt2(text)
        self.assertEqual(res[0], Implies(GoalAtom('F'), PredAtom('R', '01')))
        self.assertEqual(res[1], And(Implies(GoalAtom('F'), Top()), Implies(Top(), GoalAtom('F'))))
        with self.assertRaises(ParseError):
            parse_smt2("(declare-fun F () Bool)(assert (and F")

    def test_pysmt_round_trip(self):
        print("\n[*] to_pysmt / from_pysmt")
        f = Implies(And(PredAtom('R', '00'), CountAtMost('R', 2, Fraction(1, 2))), Or(G, Not(GoalAtom('F'))))
        self.assertEqual(from_pysmt(to_pysmt(f)), f)

    def test_obligations(self):
        print("\n[*] proof obligations")
        res = proof_obligations(counting_proof(['00', '01', '10']))
        self.assertEqual([i for i, _ in res], [5])
        text = res[0][1]
        self.assertIn("expected: unsat", text)
        formulas = parse_smt2(text)
        self.assertEqual(formulas[-1], Not(G))
        self.assertEqual(len(formulas), 5)
