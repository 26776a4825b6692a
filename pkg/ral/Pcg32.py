MASK64 = 0xFFFF_FFFF_FFFF_FFFF
MASK32 = 0xFFFF_FFFF
MULTIPLIER = 6364136223846793005

### PCG32 (XSH RR) generator, bit-exact with pcg32_srandom_r / pcg32_random_r
### of the minimal C implementation, so transcripts replay across implementations.
class Pcg32:
    def __init__(self, seed, stream=0):
        assert 0 <= seed <= MASK64
        assert 0 <= stream <= MASK64
        self.state = 0
        self.inc = ((stream << 1) & MASK64) | 1
        self.next_u32()
        self.state = (self.state + seed) & MASK64
        self.next_u32()

    def __repr__(self):
        return "{}(state={:#x}, inc={:#x})".format(self.__class__.__name__, self.state, self.inc)

    def next_u32(self):
        oldstate = self.state
        self.state = (oldstate * MULTIPLIER + self.inc) & MASK64
        xorshifted = (((oldstate >> 18) ^ oldstate) >> 27) & MASK32
        rot = oldstate >> 59
        return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & MASK32

    ### n fair coins, MSB-first from successive 32-bit outputs
    def bits(self, n):
        assert n >= 0
        res = []
        while len(res) < n:
            word = self.next_u32()
            res += ['1' if word >> (31 - i) & 1 else '0' for i in range(32)]
        return ''.join(res[:n])

    ### Return a random integer N such that a <= N <= b (pcg32_boundedrand_r).
    def randint(self, a, b):
        if a == b:
            return a
        if b < a:
            a, b = b, a
        bound = b - a + 1
        if bound > MASK32 + 1:
            ### draw bit_length(bound - 1) bits until the value lands below bound
            n = (bound - 1).bit_length()
            while True:
                result = int(self.bits(n), 2)
                if result < bound:
                    return a + result
        threshold = (MASK32 + 1 - bound) % bound
        while True:
            result = self.next_u32()
            if result >= threshold:
                return a + (result % bound)

    def choice(self, items):
        items = list(items)
        assert items
        return items[self.randint(0, len(items) - 1)]

    def coin(self, num=1, den=2):
        return self.randint(0, den - 1) < num
