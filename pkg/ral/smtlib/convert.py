from pysmt.shortcuts import Symbol, And, Or, Not, Implies, TRUE, FALSE
from pysmt.typing import BOOL

from ..Exceptions import *
from .. import AST
from ..helper import is_bitstring, parse_rational, format_rational

COUNT_PREFIX = 'countatmost'

### Every atom is a Bool constant: R@0101, countatmost@R@N@p/q, or the goal/variable name
def symbol_name(atom):
    if isinstance(atom, AST.PredAtom):
        return "{}@{}".format(atom.pred, atom.bits)
    if isinstance(atom, AST.CountAtMost):
        return "{}@{}@{}@{}".format(COUNT_PREFIX, atom.pred, atom.N, format_rational(atom.delta))
    if isinstance(atom, AST.Atom) and hasattr(atom, 'name'):
        return atom.name
    raise UnhandledCaseError("atom: {}".format(atom))

def atom_from_symbol(name):
    parts = name.split('@')
    if len(parts) == 1:
        return AST.GoalAtom(name)
    if len(parts) == 2 and parts[1] and is_bitstring(parts[1]):
        return AST.PredAtom(parts[0], parts[1])
    if len(parts) == 4 and parts[0] == COUNT_PREFIX and parts[2].isdigit():
        try:
            return AST.CountAtMost(parts[1], int(parts[2]), parse_rational(parts[3]))
        except ValueError:
            pass
    raise ParseError("symbol '{}' does not name an atom".format(name))

### @public
def to_pysmt(expr):
    if isinstance(expr, AST.Atom):
        return Symbol(symbol_name(expr), BOOL)
    if isinstance(expr, AST.Top):
        return TRUE()
    if isinstance(expr, AST.Bot):
        return FALSE()
    if isinstance(expr, AST.Not):
        return Not(to_pysmt(expr.v1))
    if isinstance(expr, AST.And):
        return And(*[to_pysmt(x) for x in expr.v])
    if isinstance(expr, AST.Or):
        return Or(*[to_pysmt(x) for x in expr.v])
    if isinstance(expr, AST.Implies):
        return Implies(to_pysmt(expr.left), to_pysmt(expr.right))
    raise UnhandledCaseError("expr: {}".format(expr))

### @public: `make_atom` maps a symbol name to an AST atom
def from_pysmt(fnode, make_atom=atom_from_symbol):
    if fnode.is_and():
        return AST.And(*[from_pysmt(x, make_atom) for x in fnode.args()])

    elif fnode.is_or():
        return AST.Or(*[from_pysmt(x, make_atom) for x in fnode.args()])

    elif fnode.is_not():
        return AST.Not(from_pysmt(fnode.args()[0], make_atom))

    elif fnode.is_implies():
        return AST.Implies(from_pysmt(fnode.args()[0], make_atom), from_pysmt(fnode.args()[1], make_atom))

    elif fnode.is_iff():
        a = from_pysmt(fnode.args()[0], make_atom)
        b = from_pysmt(fnode.args()[1], make_atom)
        return AST.And(AST.Implies(a, b), AST.Implies(b, a))

    elif fnode.is_symbol():
        if not fnode.symbol_type().is_bool_type():
            raise UnhandledCaseError("{}: only Bool symbols are supported".format(fnode))
        return make_atom(fnode.symbol_name())

    elif fnode.is_bool_constant():
        if fnode.constant_value():
            return AST.Top()
        else:
            return AST.Bot()

    else:
        raise UnhandledCaseError("{}: node_type = {}".format(fnode, fnode.node_type()))
