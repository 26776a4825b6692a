from .Field import GF2k, FieldElement, IRREDUCIBLE, is_irreducible
from .Poly import Poly1, interpolate
from .Qbf import QbfFormula, Var, brute_eval, eval_matrix
from .parse import parse_qbf, parse_infix, parse_qdimacs, to_qdimacs
from .Arithmetize import Arithmetization, arithmetize, matrix_value
from .Protocol import ProtocolState, RoundRecord, ChallengeSource, FixedChallenges, honest_round, cheat_round, check_round, verify_round, final_check
from .Cheater import OptimalCheater, optimal_cheater_value, exact_acceptance
from .Prover import run_protocol, acceptance_rate, soundness_bound, make_prover, ProtocolRun, AcceptanceReport
from .Export import export_strategy, export_compile_sizes, true_claims, true_polynomials
from .Smt import qbf_to_pysmt, qbf_to_smt2, shannon_eval
