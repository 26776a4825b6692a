### Toy universal machine.
###
### Programs are bitstrings read as 3-bit opcodes; JMP, SETC and DECJ carry a
### 4-bit argument:
###
###     000 OUT0        append '0'
###     001 OUT1        append '1'
###     010 DUP         append a copy of the whole output
###     011 JMP  o      jump back o instructions (o = 0 loops forever)
###     100 SETC i      counter += i + 1
###     101 DECJ o      if counter > 0: counter -= 1 and jump back o
###     110 DOUBLE      counter *= 2
###     111 HALT
###
### Decoding is total: trailing bits that do not complete an instruction are
### ignored. Every executed instruction costs one step, HALT included; running
### off the end halts at no cost.
import hashlib

from ..Exceptions import *
from ..helper import is_bitstring

ISA_VERSION = 1

OUT0, OUT1, DUP, JMP, SETC, DECJ, DOUBLE, HALT = range(8)
NAMES = ['OUT0', 'OUT1', 'DUP', 'JMP', 'SETC', 'DECJ', 'DOUBLE', 'HALT']
WITH_ARG = (JMP, SETC, DECJ)

def width(op):
    return 7 if op in WITH_ARG else 3

class Instruction:
    def __init__(self, op, arg=0):
        assert 0 <= op < 8
        assert 0 <= arg < 16
        self.op = op
        self.arg = arg if op in WITH_ARG else 0

    def __repr__(self):
        if self.op in WITH_ARG:
            return "{} {}".format(NAMES[self.op], self.arg)
        return NAMES[self.op]

    def __eq__(a, b):
        return isinstance(b, Instruction) and (a.op, a.arg) == (b.op, b.arg)

    def __hash__(self):
        return hash((self.op, self.arg))

    @property
    def width(self):
        return width(self.op)

    def to_bits(self):
        res = format(self.op, '03b')
        if self.op in WITH_ARG:
            res += format(self.arg, '04b')
        return res

class ToyProgram:
    def __init__(self, bits):
        if not is_bitstring(bits):
            raise ParseError("program must be a bitstring, got '{}'".format(bits))
        self.bits = bits
        self.instructions = decode(bits)

    @classmethod
    def from_instructions(cls, instructions):
        return cls(encode(instructions))

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, '; '.join(map(repr, self.instructions)))

    def __len__(self):
        return len(self.bits)

    def to_json(self):
        return {'bits': self.bits, 'asm': [repr(x) for x in self.instructions]}

def decode(bits):
    res = []
    i = 0
    while i + 3 <= len(bits):
        op = int(bits[i:i + 3], 2)
        if op in WITH_ARG:
            if i + 7 > len(bits):
                break
            res.append(Instruction(op, int(bits[i + 3:i + 7], 2)))
            i += 7
        else:
            res.append(Instruction(op))
            i += 3
    return res

def encode(instructions):
    return ''.join(x.to_bits() for x in instructions)

### Assembly: "OUT1; DUP; HALT"
def assemble(text):
    res = []
    for item in text.replace('\n', ';').split(';'):
        tokens = item.split()
        if not tokens:
            continue
        name = tokens[0].upper()
        if not name in NAMES:
            raise ParseError("unknown instruction '{}'".format(tokens[0]))
        op = NAMES.index(name)
        if op in WITH_ARG:
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) > 15:
                raise ParseError("{} takes a 4-bit argument".format(name))
            res.append(Instruction(op, int(tokens[1])))
        elif len(tokens) != 1:
            raise ParseError("{} takes no argument".format(name))
        else:
            res.append(Instruction(op))
    return ToyProgram.from_instructions(res)

class VmState:
    def __init__(self):
        self.ip = 0
        self.counter = 0
        self.output = ''
        self.length = 0
        self.steps = 0
        self.status = 'running'
        ### past max_output the output is dropped and its length frozen
        self.overflow = False
        ### a repeated (ip, counter) configuration: it never halts
        self.diverges = False

    def __repr__(self):
        return "{}(ip={}, counter={}, output={}, steps={}, status={})".format(self.__class__.__name__,
            self.ip, self.counter, self.output if not self.overflow else '<{} bits>'.format(self.length), self.steps, self.status)

    @property
    def halted(self):
        return self.status == 'halted'

    def key(self):
        return (self.ip, self.counter, self.length, self.output if not self.overflow else None, self.steps, self.status)

    def to_json(self):
        res = {'status': self.status, 'steps': self.steps, 'ip': self.ip, 'counter': self.counter, 'length': self.length}
        if not self.overflow:
            res['output'] = self.output
        if self.diverges:
            res['diverges'] = True
        return res

def _jump(ip, offset):
    return max(0, ip - offset)

### One transition; returns False when the state is final
def step(state, instructions, max_output=None):
    if state.ip >= len(instructions):
        state.status = 'halted'
        return False
    x = instructions[state.ip]
    state.steps += 1
    op = x.op
    if op == HALT:
        state.status = 'halted'
        return False
    if op == OUT0 or op == OUT1 or op == DUP:
        if state.overflow:
            pass
        elif op == DUP:
            added = state.output
            state.length *= 2
        else:
            added = '1' if op == OUT1 else '0'
            state.length += 1
        if not state.overflow:
            if max_output is not None and state.length > max_output:
                state.overflow = True
                state.output = None
            else:
                state.output += added
        state.ip += 1
    elif op == JMP:
        state.ip = _jump(state.ip, x.arg)
    elif op == SETC:
        state.counter += x.arg + 1
        state.ip += 1
    elif op == DECJ:
        if state.counter > 0:
            state.counter -= 1
            state.ip = _jump(state.ip, x.arg)
        else:
            state.ip += 1
    elif op == DOUBLE:
        state.counter *= 2
        state.ip += 1
    else:
        raise UnhandledCaseError("opcode {}".format(op))
    return True

### @public
### Run `program` (ToyProgram or decoded instruction list) for at most
### `step_cap` steps. The result is halted iff HALT executed or the program
### ran off its end within the cap.
def vm_run(program, step_cap, max_output=1 << 16, stop_on_overflow=False):
    assert step_cap >= 0
    instructions = program.instructions if isinstance(program, ToyProgram) else program
    state = VmState()
    seen = set()
    while True:
        if state.ip >= len(instructions):
            state.status = 'halted'
            return state
        if state.steps >= step_cap:
            return state
        ### output never steers control flow, so a repeated (ip, counter) loops forever
        if instructions[state.ip].op in (JMP, DECJ):
            config = (state.ip, state.counter)
            if config in seen:
                state.diverges = True
                return state
            seen.add(config)
        if not step(state, instructions, max_output):
            return state
        if stop_on_overflow and state.overflow:
            return state

### Digest of the whole state sequence, for determinism checks
def trace_digest(program, step_cap, max_output=1 << 12):
    instructions = program.instructions if isinstance(program, ToyProgram) else program
    h = hashlib.blake2b(digest_size=16)
    state = VmState()
    while state.steps < step_cap:
        h.update(repr(state.key()).encode('utf-8'))
        if not step(state, instructions, max_output):
            break
    h.update(repr(state.key()).encode('utf-8'))
    return h.hexdigest()

### The 3|x|-bit program writing x literally; runs |x| steps and falls off the end
def literal_program(x):
    assert is_bitstring(x)
    return ToyProgram.from_instructions([Instruction(OUT1 if c == '1' else OUT0) for c in x])
