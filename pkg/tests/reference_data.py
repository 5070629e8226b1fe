"""Reference values, transcribed row by row."""

# (n_lo, n_hi, D(S, N))
SQUARES_TABLE = [
    (1, 2, 1), (3, 5, 2), (6, 7, 3), (8, 10, 4), (11, 12, 5), (13, 15, 6), (16, 17, 7),
    (18, 20, 8), (21, 22, 9), (23, 34, 10), (35, 37, 11), (38, 42, 12), (43, 47, 13),
    (48, 52, 14), (53, 57, 15), (58, 65, 16), (66, 67, 17), (68, 70, 18), (71, 72, 19),
    (73, 80, 20), (81, 85, 21), (86, 91, 22), (92, 96, 23), (97, 101, 24), (102, 106, 25),
    (107, 111, 26), (112, 117, 27), (118, 119, 28), (120, 124, 29), (125, 130, 30),
    (131, 132, 31), (133, 137, 32), (138, 143, 33), (144, 145, 34), (146, 150, 35),
    (151, 156, 36), (157, 158, 37), (159, 163, 38), (164, 188, 39), (189, 198, 40),
    (199, 202, 41), (203, 205, 42), (206, 207, 43), (208, 218, 44), (219, 222, 45),
    (223, 235, 46), (236, 241, 47), (242, 247, 48), (248, 252, 49), (253, 257, 50),
    (258, 262, 51), (263, 265, 52), (266, 268, 53), (269, 282, 54), (283, 284, 55),
    (285, 287, 56), (288, 292, 57), (293, 300, 58),
]

# (n_lo, n_hi, D(P-1, N))
SHIFTED_PRIMES_TABLE = [
    (1, 3, 1), (4, 8, 2), (9, 11, 3), (12, 32, 4), (33, 35, 5), (36, 48, 6), (49, 51, 7),
    (52, 64, 8), (65, 67, 9), (68, 104, 10), (105, 107, 11), (108, 132, 12), (133, 135, 13),
    (136, 152, 14), (153, 155, 15), (156, 208, 16), (209, 211, 17), (212, 216, 18),
    (217, 219, 19), (220, 242, 20), (243, 245, 21), (246, 298, 22), (299, 301, 23),
    (302, 488, 24), (489, 491, 25), (492, 500, 26),
]

SQUARE_FREE_269 = [
    1, 4, 6, 9, 11, 14, 16, 21, 28, 33, 38, 48, 51, 59, 66, 72, 79, 86, 89, 94, 96, 107,
    113, 118, 124, 126, 131, 139, 144, 146, 152, 157, 163, 174, 176, 181, 184, 191,
    204, 211, 214, 219, 222, 232, 237, 242, 249, 254, 256, 259, 261, 264, 266, 269,
]

SHIFTED_PRIME_FREE_302 = [
    1, 4, 57, 60, 65, 68, 91, 94, 141, 144, 155, 158, 175, 178,
    189, 192, 209, 212, 265, 268, 273, 276, 299, 302,
]


def rows_within(table, lo, hi):
    """Table rows clipped to [lo, hi]."""
    return [(max(a, lo), min(b, hi), d) for a, b, d in table if b >= lo and a <= hi]


def per_n(table):
    return {n: d for a, b, d in table for n in range(a, b + 1)}
