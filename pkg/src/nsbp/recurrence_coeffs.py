"""Coefficient tables for the two spectral-moment recurrences.

Every function is a multivariate polynomial with integer (or half-integer)
coefficients, evaluated over whatever scalar field the arguments live in:
Fractions for the exact path, mpf for floats, or the truncated Laurent
field used to continue the recursion through vanishing leading
coefficients.  The d-family drives the production recursion in (k, n);
the b-family enters the verification-only recursion that trades length
for derivatives with respect to the horizon time.

Transcription of tables this size is the dominant error risk, so each
function has a unit test comparing it against an independently re-typed
flat monomial form, and the identities they feed are themselves checked
against quadrature oracles.
"""

from __future__ import annotations

from fractions import Fraction

_HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# d-family: recursion in k and n (seven coefficients)
# ---------------------------------------------------------------------------

def d1(k, n, a, c):
    block = (
        -2 * a * c**2 + c**2 * k**3 - 3 * c**2 * k**2 * n - 5 * c**2 * k**2
        - a**2 * c**2 * k + a * c**2 * k + 2 * c**2 * k * n**2 + a * c**2 * k * n
        + 9 * c**2 * k * n + 8 * c**2 * k - 2 * c**2 * n**2 - 2 * a * c**2 * n
        - 6 * c**2 * n - 4 * c**2 + 2 * a * c - 3 * c * k**2 - 3 * a * c * k
        + 5 * c * k - 2 * c - 2 * k + 2
    )
    return c * (k + 1) * (2 * k + 1) * (c * k - a * c - c * n - c - 1) * block


def d2(k, n, a, c):
    A = (
        2 * k**6 - 15 * n * k**5 - 14 * a * k**5 - 18 * k**5 + 58 * n**2 * k**4
        + 22 * a**2 * k**4 + 94 * n * k**4 + 77 * n * a * k**4 + 62 * a * k**4
        + 42 * k**4 - 63 * n**3 * k**3 - 10 * a**3 * k**3 - 192 * n**2 * k**3
        - 77 * n * a**2 * k**3 - 58 * a**2 * k**3 - 157 * n * k**3
        - 130 * n**2 * a * k**3 - 233 * n * a * k**3 - 82 * a * k**3
        + 18 * n**4 * k**2 - 34 * k**3 + 112 * n**3 * k**2 + 15 * n * a**3 * k**2
        + 14 * a**3 * k**2 + 166 * n**2 * k**2 + 48 * n**2 * a**2 * k**2
        + 112 * n * a**2 * k**2 + 38 * a**2 * k**2 + 78 * n * k**2
        + 51 * n**3 * a * k**2 + 210 * n**2 * a * k**2 + 176 * n * a * k**2
        + 30 * a * k**2 + 4 * k**2 - 12 * n**4 * k - 21 * n**3 * k
        - n * a**3 * k + 2 * a**3 * k - 14 * n**2 * a**2 * k + 9 * n * a**2 * k
        + 10 * a**2 * k + 12 * n * k - 25 * n**3 * a * k - 14 * n**2 * a * k
        + 18 * n * a * k + 8 * a * k + 4 * k - 6 * n**4 - 28 * n**3
        - 4 * n * a**3 - 6 * a**3 - 32 * n**2 - 14 * n**2 * a**2
        - 32 * n * a**2 - 12 * a**2 - 12 * n - 16 * n**3 * a - 54 * n**2 * a
        - 36 * n * a - 4 * a
    )
    B = (
        14 * k**6 - 92 * n * k**5 - 46 * a * k**5 - 70 * k**5 + 148 * n**2 * k**4
        + 50 * a**2 * k**4 + 339 * n * k**4 + 192 * n * a * k**4 + 174 * a * k**4
        + 128 * k**4 - 120 * n**3 * k**3 - 18 * a**3 * k**3 - 401 * n**2 * k**3
        - 144 * n * a**2 * k**3 - 134 * a**2 * k**3 - 422 * n * k**3
        - 264 * n**2 * a * k**3 - 510 * n * a * k**3 - 228 * a * k**3
        - 104 * k**3 + 14 * n**4 * k**2 + 188 * n**3 * k**2 + 44 * n * a**3 * k**2
        + 84 * n**2 * a**2 * k**2 + 306 * n**2 * k**2 + 30 * a**3 * k**2
        + 231 * n * a**2 * k**2 + 106 * a**2 * k**2 + 179 * n * k**2
        + 54 * n**3 * a * k**2 + 385 * n * a * k**2 + 395 * n**2 * a * k**2
        + 112 * a * k**2 + 34 * k**2 - 12 * n**4 * k - 38 * n**3 * k
        - 8 * n * a**3 * k - 6 * a**3 * k - 22 * n**2 * a**2 * k - 13 * n**2 * k
        - 31 * n * a**2 * k - 10 * a**2 * k + 14 * n * k - 26 * n**3 * a * k
        - 59 * n**2 * a * k - 25 * n * a * k - 6 * a * k - 2 * k - 2 * n**4
        - 30 * n**3 - 6 * n * a**3 - 6 * a**3 - 40 * n**2 - 10 * n**2 * a**2
        - 32 * n * a**2 - 12 * a**2 - 18 * n - 56 * n**2 * a - 6 * n**3 * a
        - 40 * n * a - 6 * a
    )
    C = (
        14 * k**5 - 35 * n * k**4 - 28 * a * k**4 - 52 * k**4 + 27 * n**2 * k**3
        + 14 * a**2 * k**3 + 64 * n * k**3 + 38 * n * a * k**3 + 78 * a * k**3
        + 72 * k**3 + 30 * n**3 * k**2 - 14 * n**2 * k**2 - 63 * n * a**2 * k**2
        - 26 * a**2 * k**2 - 33 * n * k**2 - 15 * n**2 * a * k**2
        - 89 * n * a * k**2 - 70 * a * k**2 - 44 * k**2 - 20 * n**3 * k
        - 7 * n**2 * k + 21 * n * a**2 * k + 10 * a**2 * k + 10 * n * k
        - 5 * n**2 * a * k + 35 * n * a * k + 18 * a * k + 10 * k - 10 * n**3
        - 6 * n**2 + 12 * n * a**2 + 2 * a**2 - 6 * n - 2 * n**2 * a
        + 4 * n * a + 2 * a
    )
    D = (
        2 * k**4 + 10 * n * k**3 - 2 * a * k**3 - 6 * k**3 - 8 * n**2 * k**2
        + 22 * n * a * k**2 - 9 * n * k**2 + 4 * a * k**2 + 6 * k**2
        + 6 * n**2 * k - 3 * n * k - 11 * n * a * k - 2 * a * k - 2 * k
        + 2 * n**2 + 2 * n - 6 * n * a
    )
    return (
        2 * (k - 1) * (k + 1) * (k - n - 1) * (k - n - a - 2)
        * (k - n - a - 1) ** 2 * (k - n - a) * (k + n + a) * c**5
        + (k - n - a - 1) * A * c**4
        - B * c**3
        + C * c**2
        - 2 * D * c
        - 4 * (k - 1) * (3 * k + 1) * n
    )


def d3(k, n, a, c):
    A = (
        2 * k**7 - 24 * n * k**6 - 12 * a * k**6 - 25 * k**6 + 52 * n**2 * k**5
        + 8 * a**2 * k**5 + 102 * n * k**5 + 54 * n * a * k**5 + 49 * a * k**5
        + 55 * k**5 - 8 * n**3 * k**4 + 12 * a**3 * k**4 - 121 * n**2 * k**4
        + 34 * n * a**2 * k**4 + 11 * a**2 * k**4 - 126 * n * k**4
        + 14 * n**2 * a * k**4 - 82 * n * a * k**4 - 44 * a * k**4 - 33 * k**4
        - 42 * n**4 * k**3 - 10 * a**4 * k**3 - 76 * n**3 * k**3
        - 78 * n * a**3 * k**3 - 49 * a**3 * k**3 + 15 * n**2 * k**3
        - 168 * n**2 * a**2 * k**3 - 210 * n * a**2 * k**3 - 57 * a**2 * k**3
        + 26 * n * k**3 - 142 * n**3 * a * k**3 - 237 * n**2 * a * k**3
        - 76 * n * a * k**3 - 9 * a * k**3 - 9 * k**3 + 20 * n**5 * k**2
        + 108 * n**4 * k**2 + 14 * n * a**4 * k**2 + 14 * a**4 * k**2
        + 162 * n**3 * k**2 + 62 * n**2 * a**3 * k**2 + 124 * n * a**3 * k**2
        + 44 * a**3 * k**2 + 107 * n**2 * k**2 + 102 * n**3 * a**2 * k**2
        + 314 * n**2 * a**2 * k**2 + 228 * n * a**2 * k**2 + 39 * a**2 * k**2
        + 38 * n * k**2 + 74 * n**4 * a * k**2 + 312 * n**3 * a * k**2
        + 346 * n**2 * a * k**2 + 142 * n * a * k**2 + 16 * a * k**2 + 10 * k**2
        - 12 * n**5 * k - 30 * n**4 * k - 2 * n * a**4 * k + 2 * a**4 * k
        - 32 * n**3 * k - 18 * n**2 * a**3 * k + 8 * n * a**3 * k + 9 * a**3 * k
        - 35 * n**2 * k - 42 * n**3 * a**2 * k - 20 * n**2 * a**2 * k
        + 22 * n * a**2 * k + 9 * a**2 * k - 16 * n * k - 38 * n**4 * a * k
        - 56 * n**3 * a * k - 19 * n**2 * a * k - 10 * n * a * k - 8 * n**5
        - 36 * n**4 - 4 * n * a**4 - 6 * a**4 - 46 * n**3 - 20 * n**2 * a**3
        - 42 * n * a**3 - 16 * a**3 - 36 * n**3 * a**2 - 18 * n**2
        - 102 * n**2 * a**2 - 70 * n * a**2 - 10 * a**2 - 28 * n**4 * a
        - 102 * n**3 * a - 100 * n**2 * a - 28 * n * a
    )
    B = (
        27 * k**6 - 64 * n * k**5 - 33 * a * k**5 - 87 * k**5 + 35 * n**2 * k**4
        - 27 * a**2 * k**4 + 156 * n * k**4 + 20 * n * a * k**4 + 44 * a * k**4
        + 87 * k**4 + 106 * n**3 * k**3 + 33 * a**3 * k**3 + 53 * n**2 * k**3
        + 166 * n * a**2 * k**3 + 87 * a**2 * k**3 - 92 * n * k**3
        + 239 * n**2 * a * k**3 + 132 * n * a * k**3 + 5 * a * k**3 - 25 * k**3
        - 32 * n**4 * k**2 - 216 * n**3 * k**2 - 38 * n * a**3 * k**2
        - 44 * a**3 * k**2 - 185 * n**2 * k**2 - 72 * n**2 * a**2 * k**2
        - 252 * n * a**2 * k**2 - 79 * a**2 * k**2 - 32 * n * k**2
        - 66 * n**3 * a * k**2 - 388 * n**2 * a * k**2 - 236 * n * a * k**2
        - 24 * a * k**2 - 2 * k**2 + 24 * n**4 * k + 66 * n**3 * k
        + 10 * n * a**3 * k + 3 * a**3 * k + 67 * n**2 * k
        + 32 * n**2 * a**2 * k + 22 * n * a**2 * k + 9 * a**2 * k + 32 * n * k
        + 46 * n**3 * a * k + 73 * n**2 * a * k + 48 * n * a * k + 8 * a * k
        + 8 * n**4 + 44 * n**3 + 4 * n * a**3 + 8 * a**3 + 30 * n**2
        + 8 * n**2 * a**2 + 40 * n * a**2 + 10 * a**2 + 12 * n**3 * a
        + 68 * n**2 * a + 32 * n * a
    )
    C = (
        12 * k**5 - 14 * n * k**4 + 12 * a * k**4 - 23 * k**4 - 47 * n**2 * k**3
        - 24 * a**2 * k**3 + 16 * n * k**3 - 65 * n * a * k**3 - 30 * a * k**3
        + 17 * k**3 - 14 * n**3 * k**2 + 48 * n**2 * k**2 + 25 * n * a**2 * k**2
        + 33 * a**2 * k**2 + n * k**2 - 7 * n**2 * a * k**2 + 92 * n * a * k**2
        + 25 * a * k**2 - 7 * k**2 + 8 * n**3 * k + n**2 * k - 9 * n * a**2 * k
        - 6 * a**2 * k - 6 * n * k + 5 * n**2 * a * k - 12 * n * a * k
        - 6 * a * k + k + 6 * n**3 - 2 * n**2 - 4 * n * a**2 - 3 * a**2 + 3 * n
        - 9 * n * a + 6 * n**2 * a - a
    )
    D = (
        4 * k**4 - 16 * n * k**3 - 16 * a * k**3 - 7 * k**3 - 17 * n**2 * k**2
        + 19 * n * k**2 + 16 * n * a * k**2 + 23 * a * k**2 + 4 * k**2
        + 12 * n**2 * k - 2 * n * k - 7 * n * a * k - 6 * a * k - k + 5 * n**2
        - n - 5 * n * a - a
    )
    half = _HALF
    return (
        half * (k - 1) * (k + 1) * (k - n - a - 2) * (k - n - a - 1)
        * (k - n - a) * (k + n + a)
        * (k**2 + 2 * n * k + a * k + k - 2 * n**2 - 4 * n - 2 * n * a - 2 * a - 2)
        * c**5
        + half * A * c**4
        - half * B * c**3
        + C * c**2
        + D * c
        - 2 * (k - 1) * (2 * k**2 - 2 * n * k - k - n)
    )


def d4(k, n, a, c):
    blockD = (
        -2 * a * c**2 + c**2 * k**3 - 3 * c**2 * k**2 * n - 5 * c**2 * k**2
        - a**2 * c**2 * k + a * c**2 * k + 2 * c**2 * k * n**2 + a * c**2 * k * n
        + 9 * c**2 * k * n + 8 * c**2 * k - 2 * c**2 * n**2 - 2 * a * c**2 * n
        - 6 * c**2 * n - 4 * c**2 + 2 * a * c - 3 * c * k**2 - 3 * a * c * k
        + 5 * c * k - 2 * c - 2 * k + 2
    )
    blockE = (
        a**2 * c**2 + a * c**2 + c**2 * k**3 - 2 * a * c**2 * k**2
        - 2 * c**2 * k**2 * n + a**2 * c**2 * k - a * c**2 * k
        + c**2 * k * n**2 + 2 * a * c**2 * k * n - c**2 * k * n - c**2 * k
        + c**2 * n**2 + 2 * a * c**2 * n + c**2 * n + a * c - 3 * c * k**2
        + 3 * a * c * k + 9 * c * k * n + c * k + 3 * c * n + 2 * k
    )
    half = _HALF
    return half * n * blockD * blockE


def d5(k, n, a, c):
    A = (
        -2 * a**2 - a + 2 * k**4 - 6 * a * k**3 - 3 * k**3 * n - 5 * k**3
        + 4 * a**2 * k**2 + 7 * a * k**2 + 10 * k**2 * n**2 + 23 * a * k**2 * n
        + 5 * k**2 * n + 2 * k**2 - 2 * a**2 * k - 6 * k * n**2 - 11 * a * k * n
        - k * n + k - 4 * n**2 - 8 * a * n - n
    )
    B = (
        a**2 + a + 5 * k**3 - 10 * a * k**2 - 11 * k**2 * n - 6 * k**2
        + 5 * a**2 * k + 5 * a * k + 23 * a * k * n + 8 * k * n + k + 7 * a * n
        + 3 * n
    )
    return (
        c**4 * (k - 1) * (k + 1) * (n + 1) * (k - a - 1) * (k - a - n - 1)
        * (k - a - n) * (a + k + n)
        + c**3 * (n + 1) * (k - a - 1) * A
        - c**2 * (k - 1) * (n + 1) * B
        + 2 * c * (k**2 - k) * (n + 1) * (k - a - 1)
    )


def d6(k, n, a, c):
    A = (
        k**5 - 8 * n * k**4 - 7 * a * k**4 - 10 * k**4 + 24 * n**2 * k**3
        + 5 * a**2 * k**3 + 32 * n * k**3 + 29 * n * a * k**3 + 19 * a * k**3
        + 13 * k**3 - 16 * n**3 * k**2 + 7 * a**3 * k**2 - 53 * n**2 * k**2
        + 10 * n * a**2 * k**2 + 2 * a**2 * k**2 - 30 * n * k**2
        - 13 * n**2 * a * k**2 - 45 * n * a * k**2 - 8 * a * k**2 - 2 * k**2
        - n**4 * k - 6 * a**4 * k + 8 * n**3 * k - 31 * n * a**3 * k
        - 7 * a**3 * k + 17 * n**2 * k - 45 * n**2 * a**2 * k
        - 32 * n * a**2 * k + a**2 * k + 4 * n * k - 21 * n**3 * a * k
        - 17 * n**2 * a * k + 8 * n * a * k - 2 * k - n**4 - 4 * a**4 + 4 * n**3
        - 17 * n * a**3 - 6 * a**3 + 14 * n**2 - 23 * n**2 * a**2
        - 18 * n * a**2 + 2 * a**2 + 6 * n - 11 * n**3 * a - 8 * n**2 * a
        + 12 * n * a + 2 * a
    )
    B = (
        8 * k**6 - 30 * n * k**5 - 16 * a * k**5 - 33 * k**5 + 26 * n**2 * k**4
        - 6 * a**2 * k**4 + 114 * n * k**4 + 27 * n * a * k**4 + 38 * a * k**4
        + 50 * k**4 + 5 * n**3 * k**3 + 28 * a**3 * k**3 - 59 * n**2 * k**3
        + 72 * n * a**2 * k**3 + 37 * a**2 * k**3 - 159 * n * k**3
        + 34 * n**2 * a * k**3 - 31 * n * a * k**3 - 33 * a * k**3 - 36 * k**3
        - 14 * a**4 * k**2 - 7 * n**3 * k**2 - 69 * n * a**3 * k**2
        - 50 * a**3 * k**2 + 37 * n**2 * k**2 - 72 * n**2 * a**2 * k**2
        - 173 * n * a**2 * k**2 - 33 * a**2 * k**2 + 85 * n * k**2
        - 17 * n**3 * a * k**2 - 75 * n**2 * a * k**2 - n * a * k**2
        + 19 * a * k**2 + 14 * k**2 + 8 * a**4 * k - n**3 * k + 42 * n * a**3 * k
        + 10 * a**3 * k - n**2 * k + 44 * n**2 * a**2 * k + 49 * n * a**2 * k
        - 3 * a**2 * k + n * k + 10 * n**3 * a * k + 16 * n**2 * a * k
        - n * a * k - 7 * a * k - 3 * k + 6 * a**4 + 3 * n**3 + 27 * n * a**3
        + 12 * a**3 - 3 * n**2 + 28 * n**2 * a**2 + 48 * n * a**2 + 5 * a**2
        - 11 * n + 7 * n**3 * a + 25 * n**2 * a + 6 * n * a - a
    )
    C = (
        5 * k**4 - 8 * n * k**3 + 6 * a * k**3 - 4 * k**3 - 21 * n**2 * k**2
        - 27 * a**2 * k**2 - 8 * n * k**2 - 53 * n * a * k**2 - 23 * a * k**2
        + 3 * k**2 + 16 * a**3 * k + 14 * n**2 * k + 61 * n * a**2 * k
        + 23 * a**2 * k + 12 * n * k + 33 * n**2 * a * k + 70 * n * a * k
        + 5 * a * k - 4 * k + 4 * a**3 + 7 * n**2 + 19 * n * a**2 + 6 * a**2
        + 4 * n + 27 * n * a + 11 * n**2 * a + 2 * a
    )
    return (
        (k - 1) * (k + 1) * (k - a - 1) * (k - n - a - 2) * (k - n - a - 1)
        * (k - n - a) * (k + a - 1) * (k + n + a) * c**5
        + (k - 1) * (k - a - 1) * A * c**4
        - B * c**3
        + (k - 1) * C * c**2
        + (k - 1) * (k - a - 1)
        * (3 * k**2 - 19 * n * k - 9 * a * k - 3 * k - 5 * n - a) * c
        - 2 * (k - 1) * k * (k - a - 1)
    )


def d7(k, n, a, c):
    A = (
        k**5 + 5 * n * k**4 + 5 * a * k**4 + 5 * k**4 - 25 * n**2 * k**3
        - 13 * a**2 * k**3 - 23 * n * k**3 - 38 * n * a * k**3 - 17 * a * k**3
        - 8 * k**3 + 19 * n**3 * k**2 + 7 * a**3 * k**2 + 35 * n**2 * k**2
        + 33 * n * a**2 * k**2 + 9 * a**2 * k**2 + 12 * n * k**2
        + 45 * n**2 * a * k**2 + 44 * n * a * k**2 + 2 * a * k**2 + 7 * n**3 * k
        + 3 * a**3 * k + 18 * n**2 * k + 13 * n * a**2 * k + 8 * a**2 * k
        + 6 * n * k + 17 * n**2 * a * k + 26 * n * a * k + 2 * a * k - 2 * n**3
        - 2 * a**3 - 2 * n**2 - 6 * n * a**2 - 2 * a**2 - 6 * n**2 * a
        - 4 * n * a
    )
    B = (
        13 * k**6 - 42 * n * k**5 - 32 * a * k**5 - 50 * k**5 + 57 * n**2 * k**4
        + 6 * a**2 * k**4 + 139 * n * k**4 + 80 * n * a * k**4 + 85 * a * k**4
        + 64 * k**4 - 10 * n**3 * k**3 + 32 * a**3 * k**3 - 149 * n**2 * k**3
        + 50 * n * a**2 * k**3 - 7 * a**2 * k**3 - 161 * n * k**3
        + 8 * n**2 * a * k**3 - 166 * n * a * k**3 - 71 * a * k**3 - 28 * k**3
        - 19 * a**4 * k**2 + 18 * n**3 * k**2 - 88 * n * a**3 * k**2
        - 29 * a**3 * k**2 + 109 * n**2 * k**2 - 65 * n**2 * a**2 * k**2
        - 67 * n * a**2 * k**2 + 8 * a**2 * k**2 + 63 * n * k**2
        - 14 * n**3 * a * k**2 - 32 * n**2 * a * k**2 + 72 * n * a * k**2
        + 13 * a * k**2 - k**2 + a**4 * k - 6 * n**3 * k + 10 * n * a**3 * k
        - 7 * a**3 * k + n**2 * k + 11 * n**2 * a**2 * k - 13 * n * a**2 * k
        + a**2 * k + 11 * n * k + 8 * n**3 * a * k + 8 * n**2 * a * k
        + 22 * n * a * k + 7 * a * k + 2 * k + 6 * a**4 - 2 * n**3
        + 22 * n * a**3 + 6 * a**3 - 18 * n**2 + 18 * n**2 * a**2
        + 16 * n * a**2 - 2 * a**2 - 10 * n + 6 * n**3 * a + 16 * n**2 * a
        - 8 * n * a - 2 * a
    )
    C = (
        13 * k**4 - 41 * n * k**3 + 12 * a * k**3 - 24 * k**3 - 20 * n**2 * k**2
        - 25 * a**2 * k**2 + 58 * n * k**2 - 93 * n * a * k**2 - 7 * a * k**2
        + 15 * k**2 + 12 * n**2 * k + 11 * a**2 * k - 9 * n * k + 43 * n * a * k
        - 3 * a * k - 4 * k + 8 * n**2 + 6 * a**2 - 8 * n + 26 * n * a
    )
    D = (
        2 * k**3 - 17 * n * k**2 - 8 * a * k**2 - k + 12 * n * k + 6 * a * k
        - k**2 + 5 * n + a
    )
    half = _HALF
    return (
        -half * k * (k + 1) * (k - a - 1) * (k - n - a - 2) * (k - n - a - 1)
        * (k - n - a) * (k + a - 1) * (k + n + a) * c**5
        + half * (k - a - 1) * (k + a - 1) * A * c**4
        + half * B * c**3
        - half * (k - a - 1) * C * c**2
        - (k - a - 1) * D * c
        + 2 * (k - 1) * k * (k - a - 1)
    )


# ---------------------------------------------------------------------------
# b-family: compact recursion in k with horizon-time derivatives
# ---------------------------------------------------------------------------

def b0(k, n, a, c, beta, t, T):
    return (
        2 * a * (4 * k + 13)
        - c * (k + 4) * (-(a**2) + k**2 + 5 * k - a * n + 6)
    ) / beta**2


def b1(k, n, a, c, beta, t, T):
    inner = (
        156 * a - 12 * a**3 * c**2 + 48 * a * c**2 + 3 * a * c**2 * k**4
        + 7 * c**2 * k**4 * n + 27 * a * c**2 * k**3 + 69 * c**2 * k**3 * n
        - 3 * a**3 * c**2 * k**2 + 84 * a * c**2 * k**2
        - 4 * a * c**2 * k**2 * n**2 - 7 * a**2 * c**2 * k**2 * n
        + 242 * c**2 * k**2 * n - 15 * a**3 * c**2 * k + 108 * a * c**2 * k
        - 22 * a * c**2 * k * n**2 - 37 * a**2 * c**2 * k * n
        + 360 * c**2 * k * n - 24 * a * c**2 * n**2 - 36 * a**2 * c**2 * n
        + 192 * c**2 * n - 24 * a**2 * c + 11 * c * k**4 + 81 * c * k**3
        - 11 * a**2 * c * k**2 - 28 * a * c * k**2 * n + 202 * c * k**2
        - 41 * a**2 * c * k - 130 * a * c * k * n + 192 * c * k
        - 132 * a * c * n + 48 * c + 32 * a * k**2 + 152 * a * k
    )
    return inner / (beta * c)


def b2(k, n, a, c, beta, t, T):
    inner = (
        c**2 * (k**2 + 6 * k + 8)
        * (-(a**2) + k**2 + 6 * k - n**2 - 2 * a * n + 9)
        + 2 * c * (k + 4) * (5 * a + 2 * a * k + 4 * k * n + 11 * n)
        + 2 * (10 * k**2 + 57 * k + 80)
    )
    return 3 * inner / c


def b3(k, n, a, c, beta, t, T):
    return -6 * beta


def b4(k, n, a, c, beta, t, T):
    inner = (
        -24 * a * c + a * c * k**4 + 3 * c * k**4 * n + 6 * a * c * k**3
        + 27 * c * k**3 * n - a**3 * c * k**2 + 5 * a * c * k**2
        - a**2 * c * k**2 * n + 84 * c * k**2 * n - 4 * a**3 * c * k
        - 18 * a * c * k - 4 * a**2 * c * k * n + 108 * c * k * n + 48 * c * n
        + 24 * k**4 + 198 * k**3 - 8 * a**2 * k**2 + 582 * k**2
        - 26 * a**2 * k + 720 * k + 312
    )
    return 2 * (t - T) ** 2 * inner


def b5(k, n, a, c, beta, t, T):
    inner = (
        c * (24 * a + 4 * a * k**2 + 21 * k**2 * n + 19 * a * k + 108 * k * n + 132 * n)
        - c**2 * (k + 4)
        * (
            -3 * a**2 + 2 * k**3 + 16 * k**2 - 2 * a**2 * k - 3 * k * n**2
            - 5 * a * k * n + 42 * k - 6 * n**2 - 9 * a * n + 36
        )
        - 6 * (k + 2) * (4 * k + 13)
    )
    return -2 * (t - T) ** 2 * beta * inner / (c * (k + 2))


def b6(k, n, a, c, beta, t, T):
    return 3 * a * beta * c**3 * (k - 1) * k**2 * (k + 1) * ((k - 1) ** 2 - a**2)


def b7(k, n, a, c, beta, t, T):
    inner = (
        -2 * a**3 - a**4 * c + 2 * c * k**4 - 2 * c * k**3 + 5 * a**2 * c * k**2
        + 13 * a * c * k**2 * n - a**2 * c * k - 6 * a * c * k * n
        - a**3 * c * n - 4 * a * k**2 + 3 * a * k
    )
    return beta**2 * c**2 * k * (k + 1) * inner


def b8(k, n, a, c, beta, t, T):
    inner = (
        -4 * a + a**3 * c**2 + a * c**2 * k**3 + 8 * c**2 * k**3 * n
        - 2 * a * c**2 * k**2 - 4 * c**2 * k**2 * n + 2 * a**3 * c**2 * k
        + a * c**2 * k + 4 * a * c**2 * k * n**2 + 6 * a**2 * c**2 * k * n
        - 4 * c**2 * k * n + 2 * a * c**2 * n**2 + 3 * a**2 * c**2 * n
        + 10 * c * k**3 - 2 * c * k**2 + a * c * k * n - 8 * c * k
        + 2 * a * c * n - 5 * a * k
    )
    return beta**3 * c * (k + 1) * inner


def b9(k, n, a, c, beta, t, T):
    return (
        -(beta**4) * c**2 * k * (k + 2)
        * (a**2 * c - a + 2 * c * k**2 - 2 * c * k + a * c * n)
    )


def b10(k, n, a, c, beta, t, T):
    inner = (
        2 * a**3 + a**4 * c + 4 * c * k**4 - 4 * c * k**3 - 5 * a**2 * c * k**2
        - 7 * a * c * k**2 * n + 4 * a**2 * c * k + 3 * a * c * k * n
        + a**3 * c * n - 2 * a * k**2
    )
    return c * k * (k + 1) * n * inner


def b11(k, n, a, c, beta, t, T):
    inner = (
        -4 * a + 2 * c**2 * k**3 * n + 2 * c**2 * k**2 * n
        + a * c**2 * k * n**2 + a**2 * c**2 * k * n - 4 * c**2 * k * n
        + 2 * a * c**2 * n**2 + 2 * a**2 * c**2 * n - 2 * a**2 * c
        + 16 * c * k**3 - 8 * c * k**2 - 4 * a**2 * c * k + 7 * a * c * k * n
        - 8 * c * k + 2 * a * c * n - 8 * a * k
    )
    return -beta * (k + 1) * n * inner


def b12(k, n, a, c, beta, t, T):
    return (
        beta**2 * c**2 * k * (k + 1) * (k**2 - a**2)
        * (a - a**2 * c + c * k**2 + c * k - a * c * n)
    )


def b13(k, n, a, c, beta, t, T):
    inner = (
        -2 * a - a**3 * c**2 + 2 * a * c**2 * k**3 + 4 * c**2 * k**3 * n
        + 3 * a * c**2 * k**2 + 6 * c**2 * k**2 * n - 2 * a**3 * c**2 * k
        + a * c**2 * k - 4 * a * c**2 * k * n**2 - 6 * a**2 * c**2 * k * n
        + 2 * c**2 * k * n - 2 * a * c**2 * n**2 - 3 * a**2 * c**2 * n
        + 3 * a**2 * c + 5 * c * k**3 + 9 * c * k**2 + 3 * a**2 * c * k
        + 8 * a * c * k * n + 4 * c * k + 4 * a * c * n - 4 * a * k
    )
    return beta**3 * c * (k + 1) * inner


def b14(k, n, a, c, beta, t, T):
    return (
        -(beta**4) * c**2 * k * (k + 2)
        * (4 * a - a**2 * c + c * k**2 + c * k - a * c * n)
    )


def b15(k, n, a, c, beta, t, T):
    return (
        c * k * (k + 1) * n * (k**2 - a**2)
        * (-a + a**2 * c + 2 * c * k**2 + 2 * c * k + a * c * n)
    )


def b16(k, n, a, c, beta, t, T):
    inner = (
        -2 * a + 3 * a * c**2 * k**3 + c**2 * k**3 * n + 6 * a * c**2 * k**2
        + 3 * c**2 * k**2 * n - 3 * a**3 * c**2 * k + 3 * a * c**2 * k
        - 4 * a * c**2 * k * n**2 - 7 * a**2 * c**2 * k * n + 2 * c**2 * k * n
        - 2 * a * c**2 * n**2 - 2 * a**2 * c**2 * n + 2 * a**2 * c
        + 8 * c * k**3 + 12 * c * k**2 + 4 * a**2 * c * k + 8 * a * c * k * n
        + 4 * c * k + 4 * a * c * n - 4 * a * k
    )
    return -beta * (k + 1) * n * inner


def b17(k, n, a, c, beta, t, T):
    return 6 * a * beta**2 * c * k * (2 * k + 3) * n
