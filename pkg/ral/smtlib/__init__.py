from .parse import parse_smt2, parse_smt2_file
from .convert import to_pysmt, from_pysmt, symbol_name, atom_from_symbol
from .SmtlibCapability import SmtlibCapability, proof_obligations
