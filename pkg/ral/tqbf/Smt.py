from pysmt.shortcuts import ForAll, Exists, Symbol, qelim
from pysmt.typing import BOOL

from ..Feature import Feature
from ..Writer import FileWriter, StringWriter
from ..smtlib.convert import to_pysmt
from .Qbf import QbfFormula

### @public: closed QBF as a PySMT formula over Bool symbols named like the variables
def qbf_to_pysmt(f):
    assert isinstance(f, QbfFormula)
    res = to_pysmt(f.matrix)
    for q, x in reversed(f.prefix):
        v = Symbol(x, BOOL)
        res = ForAll([v], res) if q == 'forall' else Exists([v], res)
    return res

### @public
def qbf_to_smt2(f, file=None):
    out = FileWriter(file) if file else StringWriter()
    out.write("; generated by ral")
    out.write("; {}".format(f.to_infix()))
    out.write("(set-logic BOOL)")
    out.write("(assert\n {})".format(qbf_to_pysmt(f).to_smtlib(daggify=False)))
    out.write("(check-sat)")
    return out.finalize()

### Truth value of a closed QBF by PySMT's Shannon expansion, used as an
### oracle independent of brute_eval.
def shannon_eval(f, feature=Feature()):
    res = qelim(qbf_to_pysmt(f), solver_name='shannon').simplify()
    return res.is_true()
