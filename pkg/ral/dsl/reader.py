from ..Exceptions import ParseError

### Token carrying its character offset in the source text
class Symbol(str):
    def __new__(cls, text, pos):
        self = str.__new__(cls, text)
        self.pos = pos
        return self

class SList(list):
    def __init__(self, items, pos):
        list.__init__(self, items)
        self.pos = pos

### Split text into '(' ')' and atoms; ';' starts a comment running to end of line
def tokenize(text):
    tokens = []
    word = ""
    start = 0
    comment_line = False
    for i, c in enumerate(text):
        if comment_line:
            if c == '\n':
                comment_line = False
            continue
        if c in '();' or c.isspace():
            if word:
                tokens.append(Symbol(word, start))
                word = ""
            if c == ';':
                comment_line = True
            elif c in '()':
                tokens.append(Symbol(c, i))
        else:
            if not word:
                start = i
            word += c
    if word:
        tokens.append(Symbol(word, start))
    return tokens

def _read(tokens, i):
    tk = tokens[i]
    if tk == ')':
        raise ParseError("unexpected ')'", tk.pos)
    if tk != '(':
        return tk, i + 1
    items = []
    i += 1
    while True:
        if i >= len(tokens):
            raise ParseError("unclosed '('", tk.pos)
        if tokens[i] == ')':
            return SList(items, tk.pos), i + 1
        item, i = _read(tokens, i)
        items.append(item)

### @return list of top-level s-expressions (Symbol or SList)
def read_sexprs(text):
    tokens = tokenize(text)
    res = []
    i = 0
    while i < len(tokens):
        expr, i = _read(tokens, i)
        res.append(expr)
    return res

def read_sexpr(text):
    exprs = read_sexprs(text)
    if len(exprs) != 1:
        if not exprs:
            raise ParseError("empty input", 0)
        raise ParseError("trailing input after first expression", _pos(exprs[1]))
    return exprs[0]

def _pos(expr):
    return getattr(expr, 'pos', None)
