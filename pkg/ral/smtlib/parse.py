from io import StringIO

from pysmt.exceptions import PysmtSyntaxError
from pysmt.smtlib.parser import SmtLibParser

from ..Exceptions import *
from .convert import from_pysmt, atom_from_symbol

def get_script(f):
    parser = SmtLibParser()
    try:
        return parser.get_script(f)
    except PysmtSyntaxError as e:
        raise ParseError("SMT-LIB: {}".format(e))

### @public: the asserted formulas of an SMT-LIB script over Bool constants
def parse_smt2(text, make_atom=atom_from_symbol):
    script = get_script(StringIO(text))
    res = []
    for cmd in script.commands:
        if cmd.name == 'assert':
            res += [from_pysmt(x, make_atom) for x in cmd.args]
        elif cmd.name in ['declare-fun', 'declare-const', 'set-info', 'set-logic', 'set-option', 'check-sat', 'exit']:
            pass
        else:
            raise UnhandledCaseError("cmd = {}".format(cmd.name))
    return res

### @public
def parse_smt2_file(file_name):
    with open(file_name) as f:
        return parse_smt2(f.read())
