class RalError(Exception):
    pass

class UnhandledCaseError(RalError):
    pass

class ExecutionError(RalError):
    pass

class ParseError(RalError):
    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        if position is None:
            RalError.__init__(self, message)
        else:
            RalError.__init__(self, "{} (at {})".format(message, position))

class ArityError(ParseError):
    pass

class FreeVariableError(ParseError):
    pass

class UndeclaredNameError(RalError):
    pass

### Desk-scale bounds: atom count of entailment, 2^N enumerations, variable counts
class BoundExceededError(RalError):
    pass

### Exact evaluation / cheater recursion ran past its outcome budget
class BudgetExceededError(RalError):
    pass

class CapitalError(RalError):
    pass

class NotDerivable(RalError):
    pass
