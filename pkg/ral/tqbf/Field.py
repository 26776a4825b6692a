### GF(2^k) arithmetic on k-bit integers.
###
### Elements are plain ints in [0, 2^k); addition is XOR and multiplication is
### carry-less multiplication reduced by the fixed modulus below. A k-bit coin
### string read MSB-first is exactly one element, so sampled challenges need no
### rejection step.
from ..Exceptions import BoundExceededError

### k -> irreducible polynomial, bit i = coefficient of x^i
IRREDUCIBLE = {
    2: 0b111,       # x^2 + x + 1
    3: 0b1011,      # x^3 + x + 1
    4: 0x13,        # x^4 + x + 1
    5: 0x25,        # x^5 + x^2 + 1
    6: 0x43,        # x^6 + x + 1
    7: 0x83,        # x^7 + x + 1
    8: 0x11B,       # x^8 + x^4 + x^3 + x + 1
    9: 0x211,       # x^9 + x^4 + 1
    10: 0x409,      # x^10 + x^3 + 1
    11: 0x805,      # x^11 + x^2 + 1
    12: 0x10EB,     # x^12 + x^7 + x^6 + x^5 + x^3 + x + 1
    13: 0x201B,     # x^13 + x^4 + x^3 + x + 1
    14: 0x40A9,     # x^14 + x^7 + x^5 + x^3 + 1
    15: 0x8003,     # x^15 + x + 1
    16: 0x1002D,    # x^16 + x^5 + x^3 + x^2 + 1
}

def clmul(a, b):
    res = 0
    while b:
        if b & 1:
            res ^= a
        a <<= 1
        b >>= 1
    return res

def polymod(a, m):
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a

### Irreducible over GF(2) iff no factor of degree <= deg/2 divides it
def is_irreducible(m):
    d = m.bit_length() - 1
    if d < 1:
        return False
    for f in range(2, 1 << (d // 2 + 1)):
        if polymod(m, f) == 0:
            return False
    return True

class GF2k:
    def __init__(self, k):
        if not k in IRREDUCIBLE:
            raise BoundExceededError("no field table entry for k={} (supported: {}..{})".format(k, min(IRREDUCIBLE), max(IRREDUCIBLE)))
        self.k = k
        self.modulus = IRREDUCIBLE[k]
        self.order = 1 << k
        self.exp, self.log = self.__tables()

    ### exp/log tables over a generator of the multiplicative group
    def __tables(self):
        q = self.order
        for g in range(2, q):
            exp = [1]
            while len(exp) < q:
                v = polymod(clmul(exp[-1], g), self.modulus)
                if v == 1:
                    break
                exp.append(v)
            if len(exp) == q - 1:
                log = [0] * q
                for i, v in enumerate(exp):
                    log[v] = i
                return exp + exp, log
        ### GF(4): g = 2 always generates; reaching here means the modulus is reducible
        raise ValueError("modulus {:#x} does not define a field".format(self.modulus))

    def __repr__(self):
        return "GF(2^{})".format(self.k)

    def __eq__(a, b):
        return isinstance(b, GF2k) and a.k == b.k

    def __hash__(self):
        return hash(('GF2k', self.k))

    def elements(self):
        return range(self.order)

    def add(self, a, b):
        return a ^ b

    sub = add

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    ### Reference multiplication, used to cross-check the tables
    def mul_slow(self, a, b):
        return polymod(clmul(a, b), self.modulus)

    def pow(self, a, n):
        if a == 0:
            return 0 if n > 0 else 1
        return self.exp[(self.log[a] * n) % (self.order - 1)]

    def inverse(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in {}".format(self))
        return self.exp[(self.order - 1 - self.log[a]) % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inverse(b))

    ### Every element of GF(2^k) is a square
    def sqrt(self, a):
        return self.pow(a, self.order >> 1)

    def from_bits(self, bits):
        assert len(bits) == self.k
        return int(bits, 2)

    def to_bits(self, a):
        return format(a, '0{}b'.format(self.k))

    def element(self, value):
        return FieldElement(value, self)

class FieldElement:
    def __init__(self, value, field):
        assert isinstance(field, GF2k)
        assert 0 <= value < field.order, "value={}".format(value)
        self.value = value
        self.field = field

    def __repr__(self):
        return "{}({:#x}, {})".format(self.__class__.__name__, self.value, self.field)

    def __int__(self):
        return self.value

    def __eq__(a, b):
        if isinstance(b, int):
            return a.value == b
        return isinstance(b, FieldElement) and a.field == b.field and a.value == b.value

    def __hash__(self):
        return hash((self.value, self.field.k))

    def _coerce(self, other):
        return other.value if isinstance(other, FieldElement) else other

    def __add__(self, other):
        return FieldElement(self.field.add(self.value, self._coerce(other)), self.field)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        return FieldElement(self.field.mul(self.value, self._coerce(other)), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field.div(self.value, self._coerce(other)), self.field)

    def __pow__(self, n):
        return FieldElement(self.field.pow(self.value, n), self.field)

    def inverse(self):
        return FieldElement(self.field.inverse(self.value), self.field)
