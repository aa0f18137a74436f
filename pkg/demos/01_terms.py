"""
Terms and the step-counting evaluator
=====================================

Parse a few terms, step them one redex at a time, and count beta-steps.
"""

from tmlambda.terms import evaluate, fixpoint, is_lamdet, parse, redex_positions, step_det, to_str

# arguments of an application must be values (lambdas or variables)
good = parse(r"(\x. x) (\y. y)")
bad = parse(r"x ((\y. y) (\z. z))")
print("in the calculus:", is_lamdet(good), is_lamdet(bad))

# weak evaluation: at most one redex, always in head position
t = parse(r"(\f. f (\a. a)) (\g. g)")
while t is not None:
    print(f"{len(redex_positions(t))} redex  {to_str(t)}")
    t = step_det(t)

# the fixpoint unfolds on demand; alone it takes a single step
out = evaluate(fixpoint(), 10)
print("fixpoint alone:", out.steps, "step")

# Omega never stops: fuel runs out instead
omega = parse(r"(\x. x x) (\x. x x)")
out = evaluate(omega, 1000)
print("omega:", out.steps, "steps, exhausted =", out.exhausted)
