"""Stated polynomials, quotient matrices and closed forms, typed in as published.

Everything here is data to be checked against, never used to compute.
"""

from fractions import Fraction as F

from .exact import M, X
from .exact.quad import M as Mq, S

# the extremal quartic
P = X**4 - M * X**2 - (M - 2) * X + M / 2 - 1

Q_T = [[0, 4, M - 10], [1, 3, 0], [1, 0, 0]]
Q_SAME = [
    [0, 4, 1, 0, M - 14],
    [1, 3, 0, 0, 0],
    [1, 0, 0, 2, 0],
    [0, 0, 1, 1, 0],
    [1, 0, 0, 0, 0],
]
Q_DIST = [
    [0, 4, 2, 0, M - 15],
    [1, 3, 0, 0, 0],
    [1, 0, 0, 1, 0],
    [0, 0, 1, 1, 0],
    [1, 0, 0, 0, 0],
]
Q_MIX = [
    [0, 1, 3, 1, 0, 0, M - 14],
    [1, 0, 3, 0, 1, 0, 0],
    [1, 1, 2, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 1, 0, 0],
    [1, 0, 0, 0, 0, 0, 0],
]
QUOTIENTS = {"t": Q_T, "same": Q_SAME, "dist": Q_DIST, "mixed": Q_MIX}

Q_T_POLY = X**3 - 3 * X**2 + (6 - M) * X + 3 * M - 30
F_SAME = X**5 - 4 * X**4 + (10 - M) * X**3 + (4 * M - 42) * X**2 + (19 - M) * X + 84 - 6 * M
F_DIST = X**5 - 4 * X**4 + (11 - M) * X**3 + (4 * M - 45) * X**2 + (28 - 2 * M) * X + 45 - 3 * M
F_MIX = (
    X**7 - 2 * X**6 + (3 - M) * X**5 + (2 * M - 24) * X**4
    + (6 * M - 61) * X**3 + (84 - 6 * M) * X**2 + (90 - 7 * M) * X + 2 * M - 28
)
CHAR_POLYS = {"t": Q_T_POLY, "same": F_SAME, "dist": F_DIST, "mixed": F_MIX}

Q_SAME_FACTOR = X - 4
Q_DIST_FACTOR = X - 4
Q_MIX_FACTOR = X**3 - 2 * X**2 + 3 * X + M - 26

R_SAME = 10 * X**3 + (M - 44) * X**2 + (28 - F(11, 2) * M) * X + 80 - 4 * M
R_DIST = 11 * X**3 + (M - 47) * X**2 + (37 - F(13, 2) * M) * X + 41 - M
R_MIX = (
    (F(13, 2) * M - 56) * X**3 + (M**2 - 28 * M + 76) * X**2
    + (M**2 - F(73, 2) * M + 145) * X - M**2 / 2 + 16 * M - 54
)

DECOMPOSITIONS = {
    "same": (F_SAME, Q_SAME_FACTOR, R_SAME),
    "dist": (F_DIST, Q_DIST_FACTOR, R_DIST),
    "mixed": (F_MIX, Q_MIX_FACTOR, R_MIX),
}

# displayed x-derivatives
DERIVATIVES = {
    "q_T'": (Q_T_POLY, 1, 3 * X**2 - 6 * X + 6 - M),
    "q_T''": (Q_T_POLY, 2, 6 * X - 6),
    "R_same'": (R_SAME, 1, 30 * X**2 + (2 * M - 88) * X + 28 - F(11, 2) * M),
    "R_same''": (R_SAME, 2, 60 * X + 2 * M - 88),
    "R_dist'": (R_DIST, 1, 33 * X**2 + (2 * M - 94) * X + 37 - F(13, 2) * M),
    "R_dist''": (R_DIST, 2, 66 * X + 2 * M - 94),
    "q_mix'": (Q_MIX_FACTOR, 1, 3 * X**2 - 4 * X + 3),
    "R_mix'": (R_MIX, 1, (F(39, 2) * M - 168) * X**2 + (2 * M**2 - 56 * M + 152) * X
               + M**2 - F(73, 2) * M + 145),
    "R_mix''": (R_MIX, 2, (39 * M - 336) * X + 2 * M**2 - 56 * M + 152),
}

# closed forms at x = L_m, in terms of s = sqrt(4m - 5)
m, s = Mq, S
CLOSED_FORMS = {
    "q_T(L)": (Q_T_POLY, 0, False, (4 * m + 5 * s - 103) / 4),
    "q_T'(L)": (Q_T_POLY, 1, False, (4 * m - 3 * s) / 2),
    "R_same(L)": (R_SAME, 0, False, (4 * m**2 + 11 * m * s - 147 * m - 42 * s + 482) / 4),
    "d/dm R_same(L)": (R_SAME, 0, True, 2 * m - F(147, 4) + (66 * m - 139) / (4 * s)),
    "R_same'(L)": (R_SAME, 1, False, (2 * m * s + 51 * m - 58 * s - 92) / 2),
    "d/dm R_same'(L)": (R_SAME, 1, True, 3 * (4 * m + 17 * s - 42) / (2 * s)),
    "R_dist(L)": (R_DIST, 0, False, (4 * m**2 + 11 * m * s - 143 * m - 31 * s + 349) / 4),
    "d/dm R_dist(L)": (R_DIST, 0, True, 2 * m - F(143, 4) + (66 * m - 117) / (4 * s)),
    "R_dist'(L)": (R_DIST, 1, False, (2 * m * s + 55 * m - 61 * s - 86) / 2),
    "d/dm R_dist'(L)": (R_DIST, 1, True, (12 * m + 55 * s - 132) / (2 * s)),
    "q_mix(L)": (Q_MIX_FACTOR, 0, False, (2 * m * s + 2 * m + s - 97) / 4),
    "R_mix(L)": (R_MIX, 0, False,
                 (8 * m**3 + 34 * m**2 * s - 154 * m**2 - 495 * m * s + 51 * m + 996 * s + 324) / 8),
    "d/dm R_mix(L)": (R_MIX, 0, True,
                      ((24 * m**2 - 308 * m + 51) * s + 340 * m**2 - 3310 * m + 4467) / (8 * s)),
    "R_mix''(L)": (R_MIX, 2, False, (4 * m**2 + (39 * m - 336) * s - 73 * m - 32) / 2),
    "R_mix'(L)": (R_MIX, 1, False,
                  (4 * m**2 * s + 86 * m**2 - 73 * m * s - 1008 * m - 32 * s + 1556) / 4),
    "d/dm R_mix'(L)": (R_MIX, 1, True,
                       ((172 * m - 1008) * s + 40 * m**2 - 478 * m + 301) / (4 * s)),
}

# the m = 18 specializations, as (a, b) for a + b*sqrt(67)
AT_18 = {
    "R_same(L)": (-217, 39),
    "R_same'(L)": (413, -11),
    "R_dist(L)": (F(-929, 4), F(167, 4)),
    "R_dist'(L)": (452, F(-25, 2)),
    "R_mix(L)": (F(-2169, 4), F(1557, 4)),
    "R_mix'(L)": (2819, F(-25, 2)),
}

del m, s
