import struct
from bisect import bisect_right
from multiprocessing import Pool

from ..Exceptions import *
from ..Feature import Feature
from ..ProfileCapability import ProfileCapability
from ..helper import bitstrings_upto, is_bitstring
from ..Logger import getLogger
from .Vm import Instruction, ISA_VERSION, OUT0, OUT1, DUP, JMP, SETC, DECJ, DOUBLE, HALT, vm_run, width

### bits per output bit of the literal-emission program
LITERAL_WIDTH = width(OUT0)

logger = getLogger(__name__)

### Enumeration caps stamped into every report: programs of at most `L_max`
### bits, runs of at most `S_max` steps, strings of at most `n_bound` bits.
class Caps:
    def __init__(self, L_max=16, S_max=10**4, n_bound=8):
        assert L_max >= 0 and S_max >= 0 and n_bound >= 0
        self.L_max = L_max
        self.S_max = S_max
        self.n_bound = n_bound

    def __repr__(self):
        return "{}(L_max={}, S_max={}, n_bound={})".format(self.__class__.__name__, self.L_max, self.S_max, self.n_bound)

    def __eq__(a, b):
        return isinstance(b, Caps) and a.key() == b.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return (self.L_max, self.S_max, self.n_bound)

    ### Every string of length <= n has its literal program under the caps
    def covers(self, n):
        return self.L_max >= LITERAL_WIDTH * n and self.S_max >= n

    def replace(self, **kwargs):
        values = dict(vars(self))
        values.update(kwargs)
        return Caps(**values)

    def to_json(self):
        return {'L_max': self.L_max, 'S_max': self.S_max, 'n_bound': self.n_bound, 'isa': ISA_VERSION}

### Everything but HALT, which only ever ends a canonical program
ALPHABET = [Instruction(op) for op in (OUT0, OUT1, DUP, DOUBLE)] + \
    [Instruction(op, arg) for op in (JMP, SETC, DECJ) for arg in range(16)]

### Canonical programs of at most L_max bits: instruction lists in which HALT
### can only come last. Every bitstring program behaves like the canonical
### program it decodes to (cut after its first HALT), which is never longer.
def programs(L_max, prefix=None):
    prefix = list(prefix or [])
    if prefix and prefix[-1].op == HALT:
        if sum(x.width for x in prefix) <= L_max:
            yield prefix
        return
    stack = [prefix]
    while stack:
        p = stack.pop()
        used = sum(x.width for x in p)
        if used > L_max:
            continue
        yield p
        if used + 3 <= L_max:
            yield p + [Instruction(HALT)]
        for x in reversed(ALPHABET):
            if used + x.width <= L_max:
                stack.append(p + [x])

### x -> [(t, width)] with t ascending and width strictly decreasing
def pareto(pairs):
    res = []
    for t, w in sorted(pairs):
        if not res or w < res[-1][1]:
            res.append((t, w))
    return res

def _enumerate(args):
    caps, prefix = args
    found = {}
    for p in programs(caps.L_max, prefix):
        state = vm_run(p, caps.S_max, max_output=caps.n_bound, stop_on_overflow=True)
        if not state.halted or state.overflow:
            continue
        found.setdefault(state.output, []).append((state.steps, sum(x.width for x in p)))
    return dict((x, pareto(pairs)) for x, pairs in found.items())

class ComplexityTable(ProfileCapability):
    MAGIC = b'RALK'
    HEADER = struct.Struct('>4sHIIHI')
    RECORD = struct.Struct('>BIH')
    PAIR = struct.Struct('>IH')

    def __init__(self, caps, entries):
        assert isinstance(caps, Caps)
        self.caps = caps
        self.entries = {}
        ### strings with no program under the caps have no entry
        for x, pairs in entries.items():
            if pairs:
                self.entries[x] = pareto(pairs)
        self.times = dict((x, [t for t, _ in pairs]) for x, pairs in self.entries.items())

    def __repr__(self):
        return "{}({}, strings={})".format(self.__class__.__name__, self.caps, len(self.entries))

    def __eq__(a, b):
        return isinstance(b, ComplexityTable) and a.caps == b.caps and a.entries == b.entries

    def check(self, x):
        if not is_bitstring(x):
            raise ValueError("not a bitstring: '{}'".format(x))
        if len(x) > self.caps.n_bound:
            raise BoundExceededError("|x|={} exceeds the table bound {}".format(len(x), self.caps.n_bound))

    ### Shortest program printing x within t steps; None when there is none under the caps
    def k_t(self, x, t):
        self.check(x)
        pairs = self.entries.get(x, [])
        i = bisect_right(self.times.get(x, []), t)
        if i == 0:
            return None
        return pairs[i - 1][1]

    def k_final(self, x):
        return self.k_t(x, self.caps.S_max)

    ### First t at which k_t(x, t) reaches k_final(x); 0 when k_t is none throughout
    def final_time(self, x):
        self.check(x)
        pairs = self.entries.get(x)
        return pairs[-1][0] if pairs else 0

    ### First t with k_t(x, t) <= 2 k_final(x)
    def factor2_time(self, x):
        self.check(x)
        if self.k_final(x) is None:
            return 0
        bound = 2 * self.k_final(x)
        for t, w in self.entries[x]:
            if w <= bound:
                return t
        raise UnhandledCaseError("no entry under 2*k_final for {}".format(x))

    def strings(self, n=None):
        return bitstrings_upto(self.caps.n_bound if n is None else n)

    ### Times at which some k_t value changes, with 0 and S_max
    def breakpoints(self, n=None):
        res = set([0, self.caps.S_max])
        for x in self.strings(n):
            res |= set(self.times.get(x, []))
        return sorted(t for t in res if t <= self.caps.S_max)

    ### Strings whose k_final exceeds their literal program
    def bound_violations(self):
        return [x for x in self.strings() if self.k_final(x) is not None and self.k_final(x) > LITERAL_WIDTH * len(x)]

    def undefined(self, n=None):
        return [x for x in self.strings(n) if self.k_final(x) is None]

    def to_json(self, n=None):
        return {
            'caps': self.caps.to_json(),
            'exact_under_caps': True,
            'strings': [{'x': x, 'k_final': self.k_final(x), 'final_time': self.final_time(x),
                'schedule': [[t, w] for t, w in self.entries.get(x, [])]} for x in self.strings(n)],
        }

    ### Header (magic, ISA version, L_max, S_max, n_bound, count), then one record per string
    def to_bytes(self):
        if self.caps.n_bound > 32:
            raise BoundExceededError("binary tables hold strings of at most 32 bits")
        keys = self.strings()
        res = [self.HEADER.pack(self.MAGIC, ISA_VERSION, self.caps.L_max, self.caps.S_max, self.caps.n_bound, len(keys))]
        for x in keys:
            pairs = self.entries.get(x, [])
            res.append(self.RECORD.pack(len(x), int(x, 2) if x else 0, len(pairs)))
            for t, w in pairs:
                res.append(self.PAIR.pack(t, w))
        return b''.join(res)

    @classmethod
    def from_bytes(cls, data):
        try:
            magic, isa, L_max, S_max, n_bound, count = cls.HEADER.unpack_from(data, 0)
        except struct.error as e:
            raise ParseError("complexity table header: {}".format(e))
        if magic != cls.MAGIC:
            raise ParseError("not a complexity table (magic {!r})".format(magic))
        if isa != ISA_VERSION:
            raise ParseError("table built for ISA version {}, this is version {}".format(isa, ISA_VERSION))
        offset = cls.HEADER.size
        entries = {}
        try:
            for _ in range(count):
                n, value, m = cls.RECORD.unpack_from(data, offset)
                offset += cls.RECORD.size
                x = format(value, '0{}b'.format(n)) if n else ''
                pairs = []
                for _ in range(m):
                    pairs.append(cls.PAIR.unpack_from(data, offset))
                    offset += cls.PAIR.size
                entries[x] = pairs
        except struct.error as e:
            raise ParseError("truncated complexity table at byte {}: {}".format(offset, e))
        return cls(Caps(L_max, S_max, n_bound), entries)

    def save(self, path):
        with open(path, 'wb') as f:
            f.write(self.to_bytes())

    @classmethod
    def load(cls, path):
        with open(path, 'rb') as f:
            return cls.from_bytes(f.read())

### @public: one enumeration pass per first instruction; the merge is order-independent
def build_table(caps, feature=Feature()):
    assert isinstance(caps, Caps)
    tasks = [(caps, [x]) for x in ALPHABET + [Instruction(HALT)] if x.width <= caps.L_max]
    parts = None
    if feature.jobs > 1 and len(tasks) > 1:
        with Pool(processes=feature.jobs) as pool:
            parts = pool.map(_enumerate, tasks)
    else:
        parts = [_enumerate(task) for task in tasks]

    ### the empty program halts at once with empty output
    merged = {'': [(0, 0)]}
    for part in parts:
        for x, pairs in part.items():
            merged.setdefault(x, []).extend(pairs)
    res = ComplexityTable(caps, merged)
    logger.info("build_table: {}".format(res))
    if feature.debug:
        res.profileMemoryUsage()
    return res

### @public: k_t of a single string by increasing program width, without a table
def k_t(x, t, L_max):
    if not is_bitstring(x):
        raise ValueError("not a bitstring: '{}'".format(x))
    if x == '':
        return 0
    ### the literal program bounds the search whenever it runs in time
    limit = min(L_max, LITERAL_WIDTH * len(x)) if t >= len(x) else L_max
    best = None
    for p in programs(limit):
        w = sum(i.width for i in p)
        if best is not None and w >= best:
            continue
        state = vm_run(p, t, max_output=len(x), stop_on_overflow=True)
        if state.halted and not state.overflow and state.output == x:
            best = w
    return best

### @public
def k_final(x, caps):
    return k_t(x, caps.S_max, caps.L_max)
