import hashlib
from fractions import Fraction
from itertools import product

### All bitstrings of length n in lexicographic order
def bitstrings(n):
    assert n >= 0
    return [''.join(bits) for bits in product('01', repeat=n)]

### Strings of length <= n in shortlex order
def bitstrings_upto(n):
    res = []
    for length in range(n + 1):
        res += bitstrings(length)
    return res

def shortlex(x):
    return (len(x), x)

def is_bitstring(text):
    return all(c in '01' for c in text)

def parse_rational(text):
    text = text.strip()
    if '/' in text:
        p, q = text.split('/', 1)
        if not p.lstrip('-').isdigit() or not q.isdigit() or int(q) == 0:
            raise ValueError("not a rational: {}".format(text))
        return Fraction(int(p), int(q))
    if not text.lstrip('-').isdigit():
        raise ValueError("not a rational: {}".format(text))
    return Fraction(int(text))

def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "{}/{}".format(q.numerator, q.denominator)

### Stable 64-bit digest used for seeding (independent of PYTHONHASHSEED)
def digest64(*parts):
    h = hashlib.blake2b(digest_size=8)
    for part in parts:
        h.update(repr(part).encode('utf-8'))
        h.update(b'\x00')
    return int.from_bytes(h.digest(), 'big')
