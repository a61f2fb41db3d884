"""Reference configurations shared by the tests (hollow = A, filled = B when drawn).

Coordinates are the picture's own lattice coordinates; only shapes matter.
"""

from bubblegrid import Configuration


def cfg(a, b) -> Configuration:
    return Configuration.from_sets(a, b)


def block(xs, ys):
    return [(x, y) for x in xs for y in ys]


# (2, 1): L-shape and bar
FIG_21 = [
    cfg([(0, 0), (0, 1)], [(1, 0)]),
    cfg([(5, 0), (6, 0)], [(7, 0)]),
]

# (3, 3): straight interface and one-step staircase
FIG_33_STRAIGHT = cfg(block([0], range(3)), block([1], range(3)))
FIG_33_STAIRCASE = cfg([(6, 0), (6, 1), (7, 1)], [(7, 0), (8, 1), (8, 0)])

# (4, 4): the unique minimiser
FIG_44 = cfg(block([-1, 0], [0, 1]), block([1, 2], [0, 1]))

# (3, 4): three minimisers
FIG_34 = [
    cfg([(0, 0), (0, 1), (0, 2)], [(1, 0), (1, 1), (2, 0), (2, 1)]),
    cfg([(5, 0), (6, 0), (6, 1)], [(7, 0), (7, 1), (8, 0), (8, 1)]),
    cfg([(11, 1), (11, 2), (12, 2)], [(12, 1), (12, 0), (13, 1), (13, 0)]),
]

# (5, 5): five minimisers up to isometry and phase swap
FIG_55 = [
    cfg([(5, 7), (5, 6), (5, 5), (4, 6), (4, 5)], [(6, 6), (6, 5), (7, 5), (7, 6), (6, 7)]),
    cfg([(10, 7), (11, 7), (12, 7), (11, 6), (10, 6)], [(12, 6), (12, 5), (11, 5), (13, 6), (13, 5)]),
    cfg([(15, 3), (17, 4), (16, 3), (15, 4), (16, 4)], [(19, 4), (17, 3), (18, 3), (19, 3), (18, 4)]),
    cfg([(11, 1), (12, 2), (10, 1), (11, 2), (10, 2)], [(12, 0), (13, 1), (13, 2), (13, 0), (12, 1)]),
    cfg([(5, 2), (5, 1), (5, 0), (4, 0), (4, 1)], [(6, 0), (6, 1), (6, 2), (7, 2), (7, 1)]),
]

# (12, 4): two configurations with energy -20 - 4 beta
FIG_124_FOUR_BETA = [
    cfg(
        block([0], range(4)) + [(1, 3), (2, 3), (3, 3), (3, 2), (1, 0), (1, 1), (1, 2), (2, 2)],
        [(3, 1), (3, 0), (2, 0), (2, 1)],
    ),
    cfg(block(range(7, 10), range(4)), block([10], range(4))),
]

# (12, 4): three configurations with energy -21 - 2 beta
FIG_124_TWO_BETA = [
    cfg(block(range(0, 3), range(4)), block([3, 4], [0, 1])),
    cfg(block(range(7, 10), range(4)), block([10, 11], [1, 2])),
    cfg(block(range(14, 18), range(3)), block([18, 19], [0, 1])),
]

# the staircase used to illustrate the interface
INTERFACE_EXAMPLE = cfg(
    [
        (2, 3), (2, 4), (3, 3), (3, 4), (3, 5), (3, 6), (4, 4), (4, 5), (4, 6), (4, 7), (5, 4), (5, 5),
        (5, 6), (5, 7), (5, 8), (6, 6), (6, 7), (6, 8), (7, 6), (7, 7), (7, 8), (8, 7), (9, 7),
    ],
    [
        (10, 4), (10, 5), (10, 6), (11, 5), (11, 6), (4, 2), (4, 3), (5, 2), (5, 3), (6, 2), (6, 3), (6, 4),
        (6, 5), (7, 3), (7, 4), (7, 5), (8, 3), (8, 4), (8, 5), (8, 6), (9, 3), (9, 4), (9, 5), (9, 6),
    ],
)

# adjacent rows: (n, m) = (2, 3) over (3, 2) aligned optimally, and misaligned
ROWS_ALIGNED = cfg([(0, 0), (1, 0), (2, 0), (0, -1), (1, -1), (2, -1)], [(-2, 0), (-1, 0), (-3, -1), (-2, -1), (-1, -1)])
ROWS_MISALIGNED = cfg([(3, -3), (4, -3), (5, -3), (4, -4), (5, -4), (6, -4)], [(1, -3), (2, -3), (1, -4), (2, -4), (3, -4)])
