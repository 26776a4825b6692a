from fractions import Fraction

from ral import *
from ral.strategy import *
from ral.compiler import compile_checked

G = GoalAtom('G')

def R(x):
    return PredAtom('R', x)

### R is false on 11 only, and R(x) -> G holds for the other three points
m = Interpretation([Predicate('R', 2, 'false_on', points=['11'])], {'G': True})
base = [Implies(R(x), G) for x in ['00', '01', '10']]

s = StrategyInstance('root', [
    RandomStep('root', 'R', 2, Fraction(1, 4), ConstantSelector('leaf'), 'enumerate'),
    Leaf('leaf', G),
], Fraction(1, 4), base, G, m)

print(validate(s))
print(exact_success_prob(s))
print(mc_success_prob(s, 1000, seed=7))

proof, verdict, c = compile_checked(s)
print(proof)
assert verdict == accept
