"""Frozen reference values from the worked examples, shared by the test modules."""

from hecke2b.weyl import parse_root


def roots(text):
    return frozenset(parse_root(x) for x in text.split())


# k = 3 configuration example: c = (2, 2, 3), r1 = 1, r2 = 3
EX31_C = (2, 2, 3)
EX31_R = (1, 3)
EX31_Z = roots("e2-e1")
EX31_P = roots("e3 e3-e1 e3-e2")
EX31_J_SMALL = roots("e3-e2")
EX31_J_LARGE = roots("e3 e3-e1 e3-e2")
# fillings listed as (S(box1), S(box2), S(box3))
EX31_FILLINGS = [(1, 3, 2), (-1, 3, 2), (-2, 3, 1)]
EX31_NON_FILLING = (-3, 1, -2)
# (row, col) of each box in the first displayed configuration, rows increasing downward
EX31_SMALL_POSITIONS = {1: (-2, 0), 2: (-1, 1), 3: (-2, 1), -1: (1, -1), -2: (0, -2), -3: (1, -2)}
EX31_SMALL_MARK3 = (-2, 1)

# k = 12 example: r1 = 3/2, r2 = 15/2
EX32_C = ("1/2", "1/2", "3/2", "3/2", "5/2", "9/2", "11/2", "13/2", "13/2", "15/2", "15/2", "17/2")
EX32_R = ("3/2", "15/2")
EX32_J = roots("e3 e10 e3-e2 e4-e2 e5-e4 e8-e7 e10-e8 e10-e9 e11-e9 e12-e10 e12-e11")
EX32_P = roots(
    "e3 e4 e10 e11 e2+e1 e3-e1 e4-e1 e3-e2 e4-e2 e5-e3 e5-e4 e7-e6 e8-e7 e9-e7 e10-e8 e11-e8 "
    "e10-e9 e11-e9 e12-e10 e12-e11"
)
EX32_W = (-9, 10, -8, 7, 6, 3, 4, 1, 5, -11, 2, -12)
# the inversion set of EX32_W exactly as printed (84 roots)
EX32_R_W = roots(
    "e1 e3 e10 e12 e10-e1 e12-e1 e3-e2 e4-e2 e5-e2 e6-e2 e7-e2 e8-e2 e9-e2 e10-e2 e11-e2 e12-e2 "
    "e10-e3 e12-e3 e5-e4 e6-e4 e7-e4 e8-e4 e9-e4 e10-e4 e11-e4 e12-e4 e6-e5 e7-e5 e8-e5 e9-e5 "
    "e10-e5 e11-e5 e12-e5 e8-e6 e10-e6 e11-e6 e12-e6 e8-e7 e10-e7 e11-e7 e12-e7 e10-e8 e12-e8 "
    "e10-e9 e11-e9 e12-e9 e12-e10 e12-e11 e3+e1 e4+e1 e5+e1 e6+e1 e7+e1 e8+e1 e9+e1 e10+e1 "
    "e11+e1 e12+e1 e10+e2 e12+e2 e4+e3 e5+e3 e6+e3 e7+e3 e8+e3 e9+e3 e10+e3 e11+e3 e12+e3 "
    "e10+e4 e12+e4 e10+e5 e12+e5 e10+e6 e12+e6 e10+e7 e12+e7 e10+e8 e12+e8 e10+e9 e12+e9 "
    "e11+e10 e12+e10 e12+e11"
)

# the same region from partitions: M = L(5^4), N = L(3^3), k = 12
SLR_RECT = (5, 4, 3, 3)
SLR_LAMBDA = (9, 9, 6, 6, 6, 2, 1, 1, 1)
SLR_S0MAX = (7, 6, 5, 5, 3, 2, 1)
SLR_Z_Q_EXPONENT = 16
# the displayed path: box -> step at which it is added to S0max
SLR_PATH_FILLING = {
    (1, 8): 1, (1, 9): 2, (2, 7): 3, (2, 8): 4, (2, 9): 5, (3, 6): 6,
    (4, 6): 7, (5, 4): 8, (5, 5): 9, (5, 6): 10, (8, 1): 11, (9, 1): 12,
}
SLR_PATHS = 6209280

# two-row example: M = L(6), N = L(3)
TWO_ROW_RECT = (6, 1, 3, 1)
TWO_ROW_LAMBDA = (10, 8)
TWO_ROW_S0MAX = (6, 3)
TWO_ROW_SHIFTED2 = sorted([-3, -1, 1, 3, 5, 5, 7, 9, 11])

# rectangle tensor with b = d = 2 at a = 7, c = 5
FIG3_RECT = (7, 5, 2, 2)
FIG3_E0 = {28, 16, 6, 2, -8, -20}
FIG3_LEVEL_SIZES = (1, 6, 18)

# two partitions giving the same module
ISO_RECT_STATED = (6, 6, 4, 4)
ISO_RECT_DRAWN = (6, 6, 5, 5)


def iso_lambda(k):
    return (11 + k, 10, 8, 8, 6, 6, 5, 3, 3, 1)


def iso_mu(k):
    return (11 + k, 9, 9, 8, 7, 6, 4, 3, 2, 2)


def iso_q_exponent(k):
    return 28 + k * (k + 21)
