"""Brute-force generator for the figure 1-4 golden CSVs.

Works on formatted bit strings only, independent of the Rust code paths.
Usage: python3 oracle.py [L] (default 10), writes into this directory.
"""
import os
import sys
from math import comb

L = int(sys.argv[1]) if len(sys.argv) > 1 else 10
HERE = os.path.dirname(os.path.abspath(__file__))


def word(x, n):
    return format(x, "0%db" % n)


def tz(x, n):
    s = word(x, n)
    return len(s) - len(s.rstrip("0"))


def refl(x, n):
    return int(word(x, n)[::-1], 2)


def blocks(x, n):
    s = word(x, n)
    return 1 + sum(1 for a, b in zip(s, s[1:]) if a != b)


def write(name, header, rows):
    with open(os.path.join(HERE, name), "w", newline="\n") as f:
        f.write(",".join(header) + "\n")
        for r in rows:
            f.write(",".join(str(v) for v in r) + "\n")


N = 2 ** L
write("fig1_L%d.csv" % L, ["x", "two_pow_t"],
      [(x, 2 ** tz(x, L + 1)) for x in range(1, N + 1)])

sorted_t = sorted((tz(n, L) for n in range(N)), reverse=True)
write("fig2_L%d.csv" % L, ["n", "t_reflect", "t_sorted_desc"],
      [(n, tz(refl(n, L), L), sorted_t[n]) for n in range(N)])

write("fig3_L%d.csv" % L, ["x", "reflect_prev", "reflect", "diff"],
      [(x, refl(x - 1, L), refl(x, L), refl(x, L) - refl(x - 1, L)) for x in range(1, N)])

write("fig4a_L%d.csv" % L, ["n", "rld"], [(n, blocks(n, L)) for n in range(N)])

rld_counts = [0] * (L + 1)
for n in range(N):
    rld_counts[blocks(n, L)] += 1
write("fig4b_L%d.csv" % L, ["value", "rld_count", "digit_sum_count"],
      [(v, rld_counts[v], sum(1 for n in range(N) if word(n, L).count("1") == v)) for v in range(L + 1)])
assert all(sum(1 for n in range(N) if word(n, L).count("1") == v) == comb(L, v) for v in range(L + 1))
