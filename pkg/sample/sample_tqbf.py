from ral import Tactic
from ral.tqbf import *
from ral.strategy import exact_success_prob

f = parse_qbf("(forall x (exists y (and (or x y) (or (not x) y))))")
print(brute_eval(f))

run = run_protocol(f, Tactic.Honest(), k=8, seed=1)
for line in run.to_json_lines():
    print(line)

report = acceptance_rate(parse_qbf("(forall x (exists y (and x y)))"), Tactic.Cheat(), 8, 200)
print(report)

### a winning honest run over GF(4) becomes a strategy the engine can score
run = run_protocol(parse_qbf("(forall x (or x (not x)))"), Tactic.Honest(), k=2, seed=0)
print(exact_success_prob(export_strategy(run)))
