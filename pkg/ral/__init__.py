from .Solver import Solver, sat, unsat, entails, tautological_consequence, eval_formula
from .AST import *
### the star import above binds the AST base class over the submodule
from importlib import import_module as _import_module
AST = _import_module(".AST", __name__)
from .Interpretation import Interpretation, Predicate
from .Proof import ProofObject, ProofBuilder, AxiomRef, CountingRule, TautCons, check_proof, counting_certificate
from .Verdict import accept, Accept, Reject, Violations

from .Feature import Feature
from . import Tactic

from .dsl import *
from .smtlib import *

from .helper import *
