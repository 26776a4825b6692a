from ..Exceptions import ParseError, ArityError
from ..AST import PredAtom, GoalAtom, CountAtMost, Top, Bot, Not, And, Or, Implies
from ..helper import is_bitstring, parse_rational
from .reader import read_sexpr, read_sexprs, SList

KEYWORDS = ['pred', 'goal', 'not', 'and', 'or', 'implies', 'countatmost', 'true', 'false']

def _pos(expr):
    return getattr(expr, 'pos', None)

def _name(expr, what):
    if isinstance(expr, SList) or expr in KEYWORDS or expr in ['(', ')']:
        raise ParseError("expected {} name, got {}".format(what, expr), _pos(expr))
    return str(expr)

def _arity(expr, n, keyword):
    if len(expr) - 1 != n:
        raise ParseError("'{}' takes {} argument(s), got {}".format(keyword, n, len(expr) - 1), _pos(expr))

def parse_fnode(expr, signature=None):
    if not isinstance(expr, SList):
        if expr == 'true':
            return Top()
        if expr == 'false':
            return Bot()
        raise ParseError("unexpected atom '{}'".format(expr), _pos(expr))

    if not expr:
        raise ParseError("empty expression", _pos(expr))
    head = expr[0]
    if isinstance(head, SList):
        raise ParseError("expected a keyword", _pos(head))

    if head == 'pred':
        _arity(expr, 2, head)
        name = _name(expr[1], 'predicate')
        bits = expr[2]
        if isinstance(bits, SList) or not bits or not is_bitstring(bits):
            raise ParseError("expected a 0/1 word, got {}".format(bits), _pos(bits))
        if signature is not None:
            if not name in signature:
                raise ArityError("predicate {} is not declared".format(name), _pos(expr[1]))
            if len(bits) != signature[name]:
                raise ArityError("predicate {} takes {}-bit literals, got {}".format(name, signature[name], bits), _pos(bits))
        return PredAtom(name, str(bits))

    if head == 'goal':
        _arity(expr, 1, head)
        return GoalAtom(_name(expr[1], 'goal'))

    if head == 'countatmost':
        _arity(expr, 3, head)
        name = _name(expr[1], 'predicate')
        if isinstance(expr[2], SList) or not expr[2].isdigit() or int(expr[2]) <= 0:
            raise ParseError("expected a positive integer N, got {}".format(expr[2]), _pos(expr[2]))
        N = int(expr[2])
        try:
            delta = parse_rational(expr[3]) if not isinstance(expr[3], SList) else None
        except ValueError:
            delta = None
        if delta is None or not (0 <= delta <= 1):
            raise ParseError("expected a rational p/q in [0,1], got {}".format(expr[3]), _pos(expr[3]))
        if signature is not None and name in signature and signature[name] != N:
            raise ArityError("predicate {} takes {}-bit literals, counted at {}".format(name, signature[name], N), _pos(expr[2]))
        return CountAtMost(name, N, delta)

    if head == 'not':
        _arity(expr, 1, head)
        return Not(parse_fnode(expr[1], signature))

    if head == 'implies':
        _arity(expr, 2, head)
        return Implies(parse_fnode(expr[1], signature), parse_fnode(expr[2], signature))

    if head in ['and', 'or']:
        if len(expr) < 2:
            raise ParseError("'{}' needs at least one argument".format(head), _pos(expr))
        args = [parse_fnode(x, signature) for x in expr[1:]]
        return And(*args) if head == 'and' else Or(*args)

    raise ParseError("unknown keyword '{}'".format(head), _pos(head))

### @public
def parse_formula(text, signature=None):
    return parse_fnode(read_sexpr(text), signature)

### @public
def parse_formulas(text, signature=None):
    return [parse_fnode(x, signature) for x in read_sexprs(text)]

### @public
def print_formula(formula):
    return formula.to_dsl()
