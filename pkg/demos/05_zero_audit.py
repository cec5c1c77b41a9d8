"""Which zero indicators are unexplained.

A zero is expected when m = 1, when the character is induced from the whole
group, or when both u and m are odd. Anything else is an unexpected zero.
"""

from fsind import compute_matrix
from fsind.report import zeros_report

for n in (5, 6, 7):
    print(zeros_report(compute_matrix(n)))
