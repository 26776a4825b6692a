from functools import reduce

from .. import AST
from ..Writer import FileWriter, StringWriter
from .convert import to_pysmt, symbol_name

def _script(out, formulas, header):
    out.write("; generated by ral")
    for line in header:
        out.write("; {}".format(line))
    out.write("(set-logic QF_UF)")
    out.write("(set-info :status unknown)")

    atoms = reduce(lambda r, x: r | x.getAtoms(), formulas, set())
    for a in sorted(atoms, key=lambda a: symbol_name(a)):
        out.write("(declare-fun {} () Bool)".format(to_pysmt(a).to_smtlib(daggify=False)))

    for expr in formulas:
        out.write("(assert\n {})".format(to_pysmt(expr).to_smtlib(daggify=False)))

    out.write("(check-sat)")
    return out.finalize()

class SmtlibCapability:

    ### serialize constraints; atoms are opaque Bool constants (no counting closure)
    def to_smt2(self, file=None):
        if file:
            out = FileWriter(file)
        else:
            out = StringWriter()
        return _script(out, list(self.constraints), [])

### @public: one script per TautCons line, premises and the negated conclusion; each is expected unsat
def proof_obligations(p):
    res = []
    for i, line in enumerate(p):
        if line.rule != 'taut':
            continue
        formulas = [p[j].formula for j in line.refs()] + [AST.Not(line.formula)]
        res.append((i, _script(StringWriter(), formulas, ["obligation of line {}".format(i), "expected: unsat"])))
    return res
