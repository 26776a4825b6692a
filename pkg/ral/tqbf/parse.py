from .. import AST
from ..Exceptions import ParseError
from ..dsl.reader import read_sexpr, SList
from .Qbf import QbfFormula, Var

KEYWORDS = ['forall', 'exists', 'and', 'or', 'not', 'implies', 'true', 'false']

def _pos(expr):
    return getattr(expr, 'pos', None)

def _matrix(expr):
    if not isinstance(expr, SList):
        if expr == 'true':
            return AST.Top()
        if expr == 'false':
            return AST.Bot()
        if expr in KEYWORDS:
            raise ParseError("unexpected keyword '{}'".format(expr), _pos(expr))
        return Var(str(expr))
    if not expr or isinstance(expr[0], SList):
        raise ParseError("expected a connective", _pos(expr))
    head = expr[0]
    if head in ('forall', 'exists'):
        raise ParseError("quantifier below a connective; only prenex formulas are accepted", _pos(head))
    if head == 'not':
        if len(expr) != 2:
            raise ParseError("'not' takes 1 argument", _pos(expr))
        return AST.Not(_matrix(expr[1]))
    if head == 'implies':
        if len(expr) != 3:
            raise ParseError("'implies' takes 2 arguments", _pos(expr))
        return AST.Implies(_matrix(expr[1]), _matrix(expr[2]))
    if head in ('and', 'or'):
        if len(expr) < 2:
            raise ParseError("'{}' needs at least one argument".format(head), _pos(expr))
        args = [_matrix(x) for x in expr[1:]]
        return AST.And(*args) if head == 'and' else AST.Or(*args)
    raise ParseError("unknown keyword '{}'".format(head), _pos(head))

### (forall x (exists (y z) M)): quantifiers outermost, then the matrix
def parse_infix(text):
    expr = read_sexpr(text)
    prefix = []
    while isinstance(expr, SList) and expr and expr[0] in ('forall', 'exists'):
        if len(expr) != 3:
            raise ParseError("'{}' takes a variable and a body".format(expr[0]), _pos(expr))
        names = expr[1] if isinstance(expr[1], SList) else [expr[1]]
        for x in names:
            if isinstance(x, SList) or x in KEYWORDS:
                raise ParseError("expected a variable name, got {}".format(x), _pos(x))
            prefix.append((str(expr[0]), str(x)))
        expr = expr[2]
    return QbfFormula(prefix, _matrix(expr))

def _ints(tokens, line_no):
    try:
        values = [int(x) for x in tokens]
    except ValueError:
        raise ParseError("expected integers", "line {}".format(line_no))
    if not values or values[-1] != 0:
        raise ParseError("line must end with 0", "line {}".format(line_no))
    return values[:-1]

def _literal(n):
    v = Var("x{}".format(abs(n)))
    return v if n > 0 else AST.Not(v)

### QDIMACS subset: c / p cnf V C / a,e blocks / clauses; variables become x<n>
def parse_qdimacs(text):
    prefix = []
    clauses = []
    header = None
    for line_no, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if not tokens or tokens[0] == 'c':
            continue
        if tokens[0] == 'p':
            if len(tokens) != 4 or tokens[1] != 'cnf':
                raise ParseError("malformed problem line", "line {}".format(line_no))
            header = (int(tokens[2]), int(tokens[3]))
            continue
        if header is None:
            raise ParseError("missing problem line 'p cnf'", "line {}".format(line_no))
        if tokens[0] in ('a', 'e'):
            if clauses:
                raise ParseError("quantifier block after clauses", "line {}".format(line_no))
            for n in _ints(tokens[1:], line_no):
                if n <= 0 or n > header[0]:
                    raise ParseError("variable {} out of range".format(n), "line {}".format(line_no))
                prefix.append(('forall' if tokens[0] == 'a' else 'exists', "x{}".format(n)))
            continue
        literals = _ints(tokens, line_no)
        for n in literals:
            if abs(n) > header[0]:
                raise ParseError("variable {} out of range".format(abs(n)), "line {}".format(line_no))
        clauses.append(literals)
    if header is None:
        raise ParseError("missing problem line 'p cnf'")
    if len(clauses) != header[1]:
        raise ParseError("expected {} clauses, found {}".format(header[1], len(clauses)))
    matrix = AST.And(*[AST.Or(*[_literal(n) for n in c]) if c else AST.Bot() for c in clauses]) if clauses else AST.Top()
    return QbfFormula(prefix, matrix)

### @public
def parse_qbf(text):
    if text.lstrip().startswith('('):
        return parse_infix(text)
    return parse_qdimacs(text)

### @public: QDIMACS text for a formula whose matrix is a CNF over x<n> variables
def to_qdimacs(f):
    index = dict((x, i + 1) for i, x in enumerate(f.variables))
    clauses = f.matrix.v if isinstance(f.matrix, AST.And) else [f.matrix]

    def literal(e):
        if isinstance(e, Var):
            return index[e.name]
        if isinstance(e, AST.Not) and isinstance(e.v1, Var):
            return -index[e.v1.name]
        raise ParseError("matrix is not in CNF: {}".format(e.to_dsl()))

    lines = ["p cnf {} {}".format(len(index), len(clauses))]
    block = None
    for q, x in f.prefix:
        tag = 'a' if q == 'forall' else 'e'
        if block is not None and block[0] == tag:
            block[1].append(index[x])
        else:
            if block is not None:
                lines.append("{} {} 0".format(block[0], ' '.join(map(str, block[1]))))
            block = [tag, [index[x]]]
    if block is not None:
        lines.append("{} {} 0".format(block[0], ' '.join(map(str, block[1]))))
    for c in clauses:
        items = c.v if isinstance(c, AST.Or) else [c]
        lines.append("{} 0".format(' '.join(str(literal(e)) for e in items)))
    return '\n'.join(lines) + '\n'
