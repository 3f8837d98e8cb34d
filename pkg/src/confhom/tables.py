"""Reference Betti numbers and torsion for the benchmark families.

Rows are keyed by (family DSL, n, d) or structured per suite; each carries a
short label so a failing comparison names its table cell.  Core rows are
desk-scale; extended rows are opt-in and may take hours.
"""

# family, n -> {d: betti}; torsion-free throughout
K4_BETTI = {
    3: {2: 3, 3: 0},
    4: {2: 9, 3: 0, 4: 0},
    5: {2: 15, 3: 0, 4: 0},
    6: {2: 21, 3: 4, 4: 0},
    7: {2: 27, 3: 16, 4: 0},
    8: {2: 33, 3: 40, 4: 1},
    9: {2: 39, 3: 80, 4: 6},
}

K33_BETTI = {
    2: {2: 0},
    3: {2: 8, 3: 0},
    4: {2: 19, 3: 1, 4: 0},
    5: {2: 28, 3: 10, 4: 0},
    6: {2: 37, 3: 39, 4: 0},
    7: {2: 46, 3: 88, 4: 0},
    8: {2: 55, 3: 157, 4: 15},
}

K5_BETTI = {
    2: {2: 0},
    3: {2: 30, 3: 0},
    4: {2: 76, 3: 1, 4: 0},
    5: {2: 116, 3: 77, 4: 0},
    6: {2: 156, 3: 381, 4: 0},
    7: {2: 196, 3: 961, 4: 0},
}

# (m, n) -> {d: betti}
WHEEL_BETTI = {
    (5, 3): {2: 8, 3: 0},
    (5, 4): {2: 22, 3: 0, 4: 0},
    (5, 5): {2: 34, 3: 4, 4: 0},
    (5, 6): {2: 46, 3: 30, 4: 0},
    (5, 7): {2: 58, 3: 90, 4: 0},
    (5, 8): {2: 70, 3: 196, 4: 13},
    (6, 3): {2: 15, 3: 0},
    (6, 4): {2: 40, 3: 0, 4: 0},
    (6, 5): {2: 60, 3: 15, 4: 0},
    (6, 6): {2: 80, 3: 90, 4: 0},
    (6, 7): {2: 100, 3: 250, 4: 5},
    (7, 3): {2: 24, 3: 0},
    (7, 4): {2: 63, 3: 0, 4: 0},
    (7, 5): {2: 93, 3: 36, 4: 0},
    (7, 6): {2: 123, 3: 197, 4: 0},
    (7, 7): {2: 153, 3: 527, 4: 24},
}

# family DSL -> (beta_2 at n=4, torsion of H_2 at n=4)
PETERSEN_N4_CORE = {
    "petersen:9": (70, (2,)),
    "petersen:10": (40, (2,)),
}

PETERSEN_N4_EXTENDED = {
    "petersen:6": (264, (2,)),
    "petersen:7": (177, (2,)),
    "k331": (172, (2,)),
    "k44e": (144, (2, 2)),
    "petersen:8": (114, (2,)),
}

# family DSL -> (beta_3 at n=6, torsion of H_3 at n=6); very heavy
PETERSEN_N6_EXTENDED = {
    "k44e": (1460, tuple([2] * 73)),
}

# rim-run grouping table rows: (m, composition) -> (count, leaves)
WHEEL_GROUPINGS = {
    (5, (1,)): (4, 2),
    (5, (2,)): (4, 3),
    (5, (1, 1)): (2, 4),
    (5, (3,)): (4, 4),
    (5, (4,)): (1, 4),
    (6, (1,)): (5, 2),
    (6, (2,)): (5, 3),
    (6, (1, 1)): (5, 4),
    (6, (3,)): (5, 4),
    (6, (2, 1)): (5, 5),
    (6, (4,)): (5, 5),
    (6, (5,)): (1, 5),
    (7, (1,)): (6, 2),
    (7, (2,)): (6, 3),
    (7, (1, 1)): (9, 4),
    (7, (3,)): (6, 4),
    (7, (2, 1)): (12, 5),
    (7, (1, 1, 1)): (2, 6),
    (7, (4,)): (6, 5),
    (7, (3, 1)): (6, 6),
    (7, (2, 2)): (3, 6),
    (7, (5,)): (6, 6),
    (7, (6,)): (1, 6),
}

CROSS_MODEL_SET = [
    ("star:3", 2), ("star:3", 3),
    ("theta:3", 2), ("theta:3", 3), ("theta:3", 4),
    ("k4", 2), ("k4", 3), ("k4", 4),
]

TREE_NET_GRID = {
    "m": (2, 3, 4),
    "n": (1, 2, 3, 4, 5, 6),
}

K2P_GRID = {
    "p": (3, 4, 5),
    "n": (3, 4, 5, 6),
}
