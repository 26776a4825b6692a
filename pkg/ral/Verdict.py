class Verdict:
    def __bool__(self):
        return False

    def __eq__(a, b):
        return a.__class__.__name__ == b.__class__.__name__

    def __hash__(self):
        return hash(self.__class__.__name__)

    def __repr__(self):
        return "{}".format(self.__class__.__name__.lower())

    def to_json(self):
        return {'verdict': repr(self)}

class Accept(Verdict):
    def __and__(self, other):
        return other

    def __bool__(self):
        return True

### `line` is the first failing proof line (or None when not line-specific)
class Reject(Verdict):
    def __init__(self, reason, line=None):
        assert isinstance(reason, str)
        self.reason = reason
        self.line = line

    def __and__(self, other):
        return self

    def __repr__(self):
        if self.line is None:
            return "reject({})".format(self.reason)
        return "reject(line {}: {})".format(self.line, self.reason)

    def to_json(self):
        return {'verdict': 'reject', 'reason': self.reason, 'line': self.line}

class Violation:
    def __init__(self, node, rule, detail=""):
        self.node = node
        self.rule = rule
        self.detail = detail

    def __repr__(self):
        return "{}(node={}, rule={}{})".format(self.__class__.__name__, self.node, self.rule,
            ", {}".format(self.detail) if self.detail else "")

    def __eq__(a, b):
        return isinstance(b, Violation) and (a.node, a.rule) == (b.node, b.rule)

    def to_json(self):
        return {'node': self.node, 'rule': self.rule, 'detail': self.detail}

### Collected validation failures; empty means ok
class Violations(Verdict):
    def __init__(self, items=None):
        self.items = list(items or [])

    def add(self, node, rule, detail=""):
        self.items.append(Violation(node, rule, detail))

    def __and__(self, other):
        if isinstance(other, Violations):
            return Violations(self.items + other.items)
        return self if self.items else other

    def __bool__(self):
        return not self.items

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def rules(self):
        return [v.rule for v in self.items]

    def __repr__(self):
        if not self.items:
            return "ok"
        return "violations({})".format(', '.join(map(repr, self.items)))

    def to_json(self):
        return {'verdict': 'ok' if not self.items else 'violation', 'violations': [v.to_json() for v in self.items]}

accept = Accept()

### Satisfiability of a Solver's constraint set
class Sat(Verdict):
    def __bool__(self):
        return True

class Unsat(Verdict):
    pass

class Unknown(Verdict):
    pass
