"""Print the beta trace tables for the ten published (p, c, d) instances."""
from fractions import Fraction

from padic_period.cli import render_table
from padic_period.core import normalize
from padic_period.expansion import run_expansion
from padic_period.theorem import classify_case

INSTANCES = [
    (3, 7, 11), (3, 8, 5), (3, 17, 5), (3, 124, 7), (3, 247, 7),
    (2, 5, 9), (2, 5, 3), (2, 7, 3), (2, 13, 3), (2, 25, 3),
]

for n, (p, c, d) in enumerate(INSTANCES, 1):
    report = classify_case(c, d, p)
    print(f"Table {n}: p={p}, c={c}, d={d}  {report.title}")
    print(render_table(run_expansion(normalize(Fraction(c, d), p), 16)))
    print()
