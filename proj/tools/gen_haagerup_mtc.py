#!/usr/bin/env python3
"""Writes the Haagerup-center modular data as a .mtc file.

Every irrational entry is spelled out on the 13th roots of unity, with
sqrt(13) written as the quadratic Gauss sum sum_k (k|13) E(13)^k.
"""
from fractions import Fraction
import sys

P = 13
SQUARES = {(k * k) % P for k in range(1, P)}


def chi(k):
    return 1 if k % P in SQUARES else -1


def const(q):
    return {0: Fraction(q)}


def add(*xs):
    out = {}
    for x in xs:
        for k, v in x.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v != 0}


def scale(q, x):
    return {k: Fraction(q) * v for k, v in x.items()}


def gauss(shift=0):
    """sum_k chi(k) E(13)^(k + shift)"""
    return {(k + shift) % P: Fraction(chi(k)) for k in range(1, P)}


def render(x):
    if not x:
        return "0"
    parts = []
    for k in sorted(x):
        v = x[k]
        mag = abs(v)
        coef = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        if k == 0:
            body = coef
        else:
            root = f"E({P})^{k}"
            body = root if mag == 1 else f"{coef}*{root}"
        sign = "-" if v < 0 else "+"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


# (13 - 3 sqrt13)/26 and 3/sqrt13 = (3/13) sqrt13, then the overall factor 1/3
x = add(const(Fraction(1, 2)), scale(Fraction(-3, 26), gauss()))
one = const(1)
y = scale(Fraction(3, 13), gauss())
top = [[x, add(one, scale(-1, x)), one, one, one, one],
       [add(one, scale(-1, x)), x, one, one, one, one],
       [one, one, const(2), const(-1), const(-1), const(-1)],
       [one, one, const(-1), const(2), const(-1), const(-1)],
       [one, one, const(-1), const(-1), const(-1), const(2)],
       [one, one, const(-1), const(-1), const(2), const(-1)]]
pattern = [[1, 2, 3, 4, 5, 6], [2, 4, 6, 5, 3, 1], [3, 6, 4, 1, 2, 5],
           [4, 5, 1, 3, 6, 2], [5, 3, 2, 6, 1, 4], [6, 1, 5, 2, 4, 3]]


def c(j):
    # -y (E(13)^j + E(13)^-j)
    return scale(Fraction(-3, 13), add(gauss(j), gauss(-j)))


S = [[{} for _ in range(12)] for _ in range(12)]
for i in range(6):
    for j in range(6):
        S[i][j] = top[i][j]
for k in range(6, 12):
    S[0][k] = S[k][0] = y
    S[1][k] = S[k][1] = scale(-1, y)
for i in range(6):
    for j in range(6):
        S[6 + i][6 + j] = c(pattern[i][j])
S = [[scale(Fraction(1, 3), e) for e in row] for row in S]

# twists e^{pi i p/q} = E(2q)^p
turns = [(0, 1), (0, 1), (0, 1), (0, 1), (2, 3), (-2, 3),
         (12, 13), (-4, 13), (4, 13), (10, 13), (-12, 13), (-10, 13)]
T = ["1" if p == 0 else f"E({2 * q})^{p}" for p, q in turns]

out = sys.stdout
out.write("# Haagerup center: rank-12 modular data of conductor 39.\n")
out.write("# sqrt(13) is written as the Gauss sum over E(13).\n")
out.write("rank: 12\n")
out.write("labels: " + ", ".join(f"x{i}" for i in range(1, 13)) + "\n")
out.write("unit: x1\n")
out.write("S:\n")
for row in S:
    for j, e in enumerate(row):
        out.write("  " + render(e) + ("," if j < 11 else "") + "\n")
out.write("T: " + ", ".join(T) + "\n")
