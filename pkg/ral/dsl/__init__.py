from .reader import read_sexprs, read_sexpr
from .parse import parse_formula, parse_formulas, print_formula
