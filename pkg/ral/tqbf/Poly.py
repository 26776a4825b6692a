from .Field import GF2k

### Univariate polynomial over GF(2^k); coeffs[i] is the coefficient of X^i
class Poly1:
    def __init__(self, field, coeffs):
        assert isinstance(field, GF2k)
        coeffs = list(coeffs)
        for c in coeffs:
            assert 0 <= c < field.order, "coefficient {} outside {}".format(c, field)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    def __repr__(self):
        return "{}({}, {})".format(self.__class__.__name__, self.field, self.coeffs)

    def __eq__(a, b):
        return isinstance(b, Poly1) and a.field == b.field and a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.field.k, tuple(self.coeffs)))

    ### -1 for the zero polynomial
    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    ### Horner
    def __call__(self, x):
        res = 0
        for c in reversed(self.coeffs):
            res = self.field.mul(res, x) ^ c
        return res

    ### Power-sum evaluation, the reference for Horner
    def eval_naive(self, x):
        res = 0
        for i, c in enumerate(self.coeffs):
            res ^= self.field.mul(c, self.field.pow(x, i))
        return res

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [0] * (n - len(self.coeffs))
        b = other.coeffs + [0] * (n - len(other.coeffs))
        return Poly1(self.field, [x ^ y for x, y in zip(a, b)])

    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Poly1(self.field, [])
        res = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                res[i + j] ^= self.field.mul(a, b)
        return Poly1(self.field, res)

    def scale(self, c):
        return Poly1(self.field, [self.field.mul(c, x) for x in self.coeffs])

    def values(self, xs):
        return [self(x) for x in xs]

    def to_json(self):
        return {'k': self.field.k, 'coeffs': list(self.coeffs)}

    @classmethod
    def from_json(cls, record):
        return cls(GF2k(int(record['k'])), [int(c) for c in record['coeffs']])

### @public: the unique polynomial of degree < len(xs) through (xs[i], ys[i])
def interpolate(field, xs, ys):
    assert len(xs) == len(ys)
    assert len(set(xs)) == len(xs), "interpolation points must be distinct"
    res = Poly1(field, [])
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        ### Lagrange basis: prod_{j != i} (X - xj) / (xi - xj)
        basis = Poly1(field, [1])
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * Poly1(field, [xj, 1])
            denom = field.mul(denom, xi ^ xj)
        res = res + basis.scale(field.div(yi, denom))
    return res
