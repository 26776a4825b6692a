import os
import unittest
from fractions import Fraction

from ral.kolmo import *
from ral.kolmo.Vm import ToyProgram
from ral.strategy import validate, exact_success_prob, bad_axiom_prob
from ral.Exceptions import ParseError, BoundExceededError

CAPS = Caps(L_max=12, S_max=50, n_bound=4)
_tables = {}

def small_table():
    if not CAPS in _tables:
        _tables[CAPS] = build_table(CAPS)
    return _tables[CAPS]


class TestVm(unittest.TestCase):
    def test_dup(self):
        print("\n[*] OUT1 DUP HALT")
        state = vm_run(assemble("OUT1; DUP; HALT"), 10)
        self.assertTrue(state.halted)
        self.assertEqual(state.output, "11")
        self.assertEqual(state.steps, 3)

    def test_literal(self):
        print("\n[*] literal program")
        p = literal_program("0110")
        self.assertEqual(len(p), 12)
        state = vm_run(p, 4)
        self.assertTrue(state.halted)
        self.assertEqual(state.output, "0110")
        self.assertEqual(state.steps, 4)

    def test_counter_loop(self):
        print("\n[*] SETC/DECJ loop")
        state = vm_run(assemble("SETC 2; OUT1; DECJ 1; HALT"), 100)
        self.assertTrue(state.halted)
        self.assertEqual(state.output, "1111")
        self.assertEqual(state.steps, 10)

    def test_divergence(self):
        print("\n[*] JMP 0 diverges")
        state = vm_run(assemble("OUT0; JMP 0"), 1000)
        self.assertFalse(state.halted)
        self.assertTrue(state.diverges)
        self.assertEqual(state.to_json()['diverges'], True)

    def test_step_cap(self):
        print("\n[*] step cap")
        state = vm_run(assemble("OUT1; DUP; DUP; HALT"), 2)
        self.assertFalse(state.halted)
        self.assertEqual(state.output, "11")

    def test_overflow(self):
        print("\n[*] output past max_output")
        state = vm_run(assemble("OUT1; DUP; DUP; DUP; HALT"), 10, max_output=4)
        self.assertTrue(state.halted)
        self.assertTrue(state.overflow)
        self.assertEqual(state.length, 8)
        self.assertNotIn('output', state.to_json())

    def test_decode(self):
        print("\n[*] decoding ignores trailing bits")
        self.assertEqual(ToyProgram("0011").instructions, [Instruction(1)])
        self.assertEqual(decode(encode(assemble("SETC 15; DOUBLE").instructions)), assemble("setc 15; double").instructions)
        self.assertEqual(vm_run(ToyProgram(""), 5).output, "")

    def test_errors(self):
        print("\n[*] malformed programs")
        for text in ["FOO", "JMP 16", "JMP", "OUT1 3"]:
            with self.assertRaises(ParseError, msg=text):
                assemble(text)
        with self.assertRaises(ParseError):
            ToyProgram("012")

    def test_trace_digest(self):
        print("\n[*] trace digest is deterministic")
        p = assemble("SETC 3; DOUBLE; OUT0; DECJ 1; HALT")
        self.assertEqual(trace_digest(p, 200), trace_digest(p, 200))
        self.assertNotEqual(trace_digest(p, 200), trace_digest(p, 3))


class TestComplexity(unittest.TestCase):
    def test_k_t(self):
        print("\n[*] k_t without a table")
        self.assertEqual(k_t("11", 10, 12), 6)
        self.assertEqual(k_t("11", 1, 12), None)
        self.assertEqual(k_t("", 0, 12), 0)
        self.assertEqual(k_t("0000", 100, 12), 9)
        self.assertEqual(k_t("01", 2, 6), 6)
        ### nothing of at most L_max bits prints it
        self.assertEqual(k_t("01", 2, 0), None)
        self.assertEqual(k_t("0101", 100, 3), None)
        self.assertEqual(k_t("0101", 100, 12), 9)
        with self.assertRaises(ValueError):
            k_t("2", 1, 3)

    def test_table(self):
        print("\n[*] complexity table")
        table = small_table()
        self.assertEqual(table.k_final("11"), 6)
        self.assertEqual(table.k_t("11", 1), None)
        self.assertEqual(table.k_final(""), 0)
        self.assertEqual(table.bound_violations(), [])
        for x in table.strings(3):
            self.assertEqual(table.k_t(x, 50), k_t(x, 50, 12), msg=x)
            pairs = table.entries[x]
            self.assertEqual(pairs, sorted(pairs))
            self.assertTrue(all(a[1] > b[1] for a, b in zip(pairs, pairs[1:])))
        with self.assertRaises(BoundExceededError):
            table.k_final("00000")

    def test_table_jobs(self):
        print("\n[*] table is independent of the worker count")
        from ral import Feature
        self.assertEqual(build_table(Caps(L_max=9, S_max=20, n_bound=3), Feature(jobs=2)),
            build_table(Caps(L_max=9, S_max=20, n_bound=3)))

    def test_binary(self):
        print("\n[*] binary table format")
        table = small_table()
        data = table.to_bytes()
        self.assertEqual(data[:4], b'RALK')
        self.assertEqual(ComplexityTable.from_bytes(data), table)
        with self.assertRaises(ParseError):
            ComplexityTable.from_bytes(b'XXXX' + data[4:])
        with self.assertRaises(ParseError):
            ComplexityTable.from_bytes(data[:-3])
        with self.assertRaises(ParseError):
            ComplexityTable.from_bytes(b'RA')

    def test_short_caps(self):
        print("\n[*] caps too short for the literal program leave strings undefined")
        caps = Caps(L_max=3, S_max=50, n_bound=2)
        self.assertFalse(caps.covers(2))
        self.assertTrue(caps.covers(1))
        table = build_table(caps)
        self.assertEqual(table.k_final("0"), 3)
        self.assertEqual(table.k_final("01"), None)
        self.assertEqual(table.final_time("01"), 0)
        self.assertEqual(table.factor2_time("01"), 0)
        self.assertIn("01", table.undefined())
        self.assertNotIn("0", table.undefined())
        self.assertEqual(table.bound_violations(), [])
        self.assertEqual(ComplexityTable.from_bytes(table.to_bytes()), table)
        self.assertIn({'x': '01', 'k_final': None, 'final_time': 0, 'schedule': []}, table.to_json()['strings'])
        with self.assertRaises(BoundExceededError):
            compute_Tn(2, table)
        self.assertEqual(counting_check(2, 0, table)['verdict'], 'ok')
        with self.assertRaises(BoundExceededError):
            counting_check(2, 0, build_table(Caps(L_max=0, S_max=50, n_bound=2)))

    def test_literal_bound(self):
        print("\n[*] every k_final stays within the literal program under covering caps")
        table = small_table()
        self.assertEqual(table.undefined(), [])
        for x in table.strings():
            self.assertLessEqual(table.k_final(x), 3 * len(x), msg=x)

    def test_programs(self):
        print("\n[*] canonical program enumeration")
        found = list(programs(6))
        self.assertIn([], found)
        self.assertIn([Instruction(1), Instruction(7)], found)
        for p in found:
            self.assertLessEqual(sum(x.width for x in p), 6)
            self.assertNotIn(7, [x.op for x in p[:-1]])


class TestExperiments(unittest.TestCase):
    def test_counting(self):
        print("\n[*] counting check over the small table")
        table = small_table()
        for n in range(1, 5):
            for c in range(0, n + 1):
                res = counting_check(n, c, table)
                self.assertEqual(res['verdict'], 'ok', msg=res)
        with self.assertRaises(BoundExceededError):
            counting_check(5, 1, table)

    def test_sample(self):
        print("\n[*] sampled incompressibility axioms")
        table = small_table()
        a = sample_axiom(4, 1, 9, table, 3)
        self.assertEqual(a.to_json(), sample_axiom(4, 1, 9, table, 3).to_json())
        self.assertEqual(len(a.x), 4)
        self.assertEqual(a.valid, table.k_final(a.x) >= 3)
        self.assertEqual(sample_rate(4, 1, 50, 9, table)['samples'], 50)

    def test_Tn(self):
        print("\n[*] T_n")
        table = small_table()
        self.assertEqual(compute_Tn(0, table)['T_n'], 0)
        values = [compute_Tn(n, table)['T_n'] for n in range(5)]
        self.assertEqual(values, sorted(values))
        for n in range(5):
            self.assertLessEqual(compute_Tn_factor2(n, table), values[n])

    def test_x_max(self):
        print("\n[*] x_max")
        table = small_table()
        self.assertEqual(x_max(3, 0, table), "0")
        x = x_max(4, table.caps.S_max, table)
        top = max(table.k_final(y) for y in table.strings(4))
        self.assertEqual(table.k_final(x), top)

    def test_halting(self):
        print("\n[*] halting bound")
        table = small_table()
        report = halting_bound_check(4, 0, table)
        self.assertTrue(report, msg=report.to_json())
        self.assertGreater(report.checked, 0)
        self.assertEqual(report.to_json()['time_bound'], compute_Tn(4, table)['T_n'])
        self.assertIsNotNone(calibrate_margin([2, 3, 4], table))
        self.assertTrue(halting_bound_check(4, 0, table, factor2=True))

    def test_factor2(self):
        print("\n[*] factor-2 variant")
        res = factor2_check(4, small_table())
        self.assertEqual(res['verdict'], 'ok', msg=res)
        self.assertTrue(res['half_axioms']['consistent'])
        self.assertLessEqual(res['T2_n'], res['T_n'])

    def test_strategy(self):
        print("\n[*] chained incompressibility axioms as a strategy")
        table = small_table()
        s = incompressibility_strategy(4, 1, 2, table)
        self.assertTrue(validate(s))
        self.assertEqual(exact_success_prob(s), Fraction(1))
        self.assertLessEqual(bad_axiom_prob(s), s.epsilon)

    @unittest.skipUnless(os.environ.get('RAL_SLOW'), "set RAL_SLOW=1")
    def test_counting_n8(self):
        print("\n[*] counting check n = 8, c = 3")
        table = build_table(Caps(L_max=16, S_max=10**4, n_bound=8))
        res = counting_check(8, 3, table)
        self.assertLessEqual(Fraction(res['fraction']), Fraction(1, 8))
