"""
Evaluating schedules: total tardiness and pairing savings
=========================================================

A solution is a job sequence plus a pairing of adjacent positions.  Tardiness
depends only on the sequence; savings depend only on which jobs sit paired.
"""

from pairsched import bundled_instance_path, evaluate, load_problem, notation, parse_notation

instance = load_problem(bundled_instance_path("example1"))
print(f"jobs: {instance.n}, workday: {instance.workday_minutes} minutes")

## A solution in compact notation: parentheses mark paired jobs.
sequence, pairing = parse_notation("(2-5)-(1-4)-3")
objectives = evaluate(sequence, pairing, instance)
print(f"(2-5)-(1-4)-3  ->  T = {objectives.tardiness} days, C = {objectives.savings / 100:.2f}")
assert (objectives.tardiness, objectives.savings) == (13, 831)

## The pairing moves savings, never tardiness: re-pair the same sequence.
for text in ("(2-5)-(1-4)-3", "(2-5)-1-(4-3)", "2-(5-1)-(4-3)"):
    sequence, pairing = parse_notation(text)
    objectives = evaluate(sequence, pairing, instance)
    print(f"{text:16s} T = {objectives.tardiness:2d}  C = {objectives.savings / 100:5.2f}")

## Round trip: notation() is the inverse of parse_notation().
sequence, pairing = parse_notation("(2-4)-(5-1)-3")
assert notation(sequence, pairing) == "(2-4)-(5-1)-3"
print("notation round trip ok")
