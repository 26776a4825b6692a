from fractions import Fraction

from ral import *
from ral.strategy import *

G = GoalAtom('G')

def R(x):
    return PredAtom('R', x)

### R = (x != 11), base R(x) -> G for x != 11, one RandomStep with delta 1/4
def e1(epsilon=Fraction(1, 4), certificate='enumerate', feature=Feature()):
    m = Interpretation([Predicate('R', 2, 'false_on', points=['11'])], {'G': True})
    base = [Implies(R(x), G) for x in ['00', '01', '10']]
    nodes = [
        RandomStep('root', 'R', 2, Fraction(1, 4), ConstantSelector('leaf'), certificate),
        Leaf('leaf', G),
    ]
    return StrategyInstance('root', nodes, epsilon, base, G, m, feature)

def e1_json():
    return e1().to_json()
