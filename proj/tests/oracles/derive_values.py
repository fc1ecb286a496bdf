"""Independent derivations of the expected values frozen into the C++ tests.

Uses only fractions, mpmath and brute-force enumeration; nothing here calls
the library. Run: python3 tests/oracles/derive_values.py
"""
from fractions import Fraction as F
import itertools

import mpmath as mp

mp.mp.dps = 40


def mpq(x):
    x = F(x)
    return mp.mpf(x.numerator) / x.denominator


def term(n, r, phi, k, j):
    return mp.mpf(r) ** k * mp.expjpi(2 * (mpq(phi) * k + mp.mpf(j) / n))


def word_value(n, r, phi, word):
    return sum(term(n, r, phi, k, j) for k, j in enumerate(word))


def v(theta, z):
    return mp.re(z * mp.expjpi(-2 * mpq(theta)))


def best_digits(n, phi, theta, k):
    # Exact: compare circular distances from theta to k*phi + j/n as fractions.
    def dist(j):
        d = (F(theta) - F(phi) * k - F(j, n)) % 1
        return min(d, 1 - d)
    ds = [dist(j) for j in range(n)]
    m = min(ds)
    return [j for j in range(n) if ds[j] == m]


print("evaluate n=5 r=0.4 phi=1/4 word (0,1):", word_value(5, 0.4, F(1, 4), [0, 1]))
print("fixed point n=4 r=0.3 digit 1 via depth-40 word:", word_value(4, 0.3, 0, [1] * 40))
print("C_1 n=5 phi=1/4:", sorted((F(1, 4) + F(j, 5)) % 1 for j in range(5)))
print("J n=5 phi=1/4 theta=0 k=0..3:", [best_digits(5, F(1, 4), 0, k) for k in range(4)])
print("J n=5 phi=1/4 theta=1/10 k=0..7:", [best_digits(5, F(1, 4), F(1, 10), k) for k in range(8)])
print("J n=4 phi=0 theta=1/8 k=0:", best_digits(4, 0, F(1, 8), 0))

# Brute force support over the full depth-8 cloud for n=5, r=0.4, phi=1/4, theta=1/10.
n, r, phi, theta = 5, 0.4, 0.25, 0.1
import numpy as np
terms = [[r ** k * np.exp(2j * np.pi * (k * phi + j / n)) for j in range(n)] for k in range(8)]
pts = np.zeros(1, complex)
for k in range(8):
    pts = (pts[:, None] + np.array(terms[k])[None, :]).ravel()
e = np.exp(2j * np.pi * theta)
print("brute support depth-8 cloud theta=1/10:", (pts * np.conj(e)).real.max())
print("analytic support (mp, 80 terms):",
      sum(max(v(F(1, 10), term(5, 0.4, F(1, 4), k, j)) for j in range(5)) for k in range(80)))

# Square hull for n=4, r=0.3, phi=0: vertex xi^j/0.7 and its v_{1/8} value.
print("v_{1/8}(1/0.7) =", v(F(1, 8), mp.mpf(1) / mp.mpf("0.7")),
      " v_{1/8}(i/0.7) =", v(F(1, 8), mp.mpc(0, 1) / mp.mpf("0.7")))

# Period for n=3, q=100: smallest b with C_b == C_0 (p = 1).
def cset(n, phi, k):
    return {(phi * k + F(j, n)) % 1 for j in range(n)}
b = next(b for b in range(1, 1000) if cset(3, F(1, 100), b) == cset(3, F(1, 100), 0))
print("period n=3 q=100:", b)

# Irrational witness: n=3, phi=0.6180339887 (the double), theta = phi + 1/6.
phi = F(0.6180339887)
theta = (phi + F(1, 6)) % 1
ties = [k for k in range(200) if len(best_digits(3, phi, theta, k)) == 2]
print("ties for theta=phi+1/6, k<200:", ties)
theta = phi % 1
print("ties for theta=phi, k<200:", [k for k in range(200) if len(best_digits(3, phi, theta, k)) == 2])
