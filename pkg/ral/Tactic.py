### Prover behaviour for the TQBF protocol
class Tactic:
    def __repr__(self):
        return self.__class__.__name__

    def __eq__(a, b):
        return a.__class__.__name__ == b.__class__.__name__

    def __hash__(self):
        return hash(self.__class__.__name__)

### Sends the true restriction polynomial every round
class Honest(Tactic):
    pass

### Sends the true polynomial plus the smallest correction that passes the round check
class Cheat(Tactic):
    pass

### Plays the backward-induction argmax message (tiny fields only)
class OptimalCheat(Tactic):
    pass

def from_name(name):
    table = {
        'honest': Honest,
        'cheat': Cheat,
        'adversary': Cheat,
        'optimal': OptimalCheat,
    }
    if not name in table:
        raise ValueError("unknown prover tactic: {}".format(name))
    return table[name]()
