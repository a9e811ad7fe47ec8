"""Hard-coded edge lists for the platonic solids and the classical cubic cages.

Vertex numbering is 0-based. Each list is checked in the test-suite against
order, regularity and girth, and against an independent construction.
"""

TETRAHEDRON_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

# Q3: vertices are 3-bit strings, adjacent when they differ in one bit.
CUBE_EDGES = (
    (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 6), (3, 7), (4, 5),
    (4, 6), (5, 7), (6, 7),
)

# Opposite vertex pairs are (0, 5), (1, 3), (2, 4).
OCTAHEDRON_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (1, 5), (2, 3), (2, 5),
    (3, 4), (3, 5), (4, 5),
)

# 0 top, 1-5 upper pentagon, 6-10 lower pentagon, 11 bottom.
ICOSAHEDRON_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (1, 6), (1, 7),
    (2, 3), (2, 7), (2, 8), (3, 4), (3, 8), (3, 9), (4, 5), (4, 9), (4, 10),
    (5, 6), (5, 10), (6, 7), (6, 10), (6, 11), (7, 8), (7, 11), (8, 9),
    (8, 11), (9, 10), (9, 11), (10, 11),
)

# Outer pentagon 0-4, middle decagon 5-14, inner pentagon 15-19.
DODECAHEDRON_EDGES = (
    (0, 1), (0, 4), (0, 5), (1, 2), (1, 7), (2, 3), (2, 9), (3, 4), (3, 11),
    (4, 13), (5, 6), (5, 14), (6, 7), (6, 15), (7, 8), (8, 9), (8, 16),
    (9, 10), (10, 11), (10, 17), (11, 12), (12, 13), (12, 18), (13, 14),
    (14, 19), (15, 16), (15, 19), (16, 17), (17, 18), (18, 19),
)

# Outer pentagon 0-4, spokes i -> i+5, inner pentagram.
PETERSEN_EDGES = (
    (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (3, 8),
    (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
)

# LCF [5, -5]^7
HEAWOOD_EDGES = (
    (0, 1), (0, 5), (0, 13), (1, 2), (1, 10), (2, 3), (2, 7), (3, 4), (3, 12),
    (4, 5), (4, 9), (5, 6), (6, 7), (6, 11), (7, 8), (8, 9), (8, 13), (9, 10),
    (10, 11), (11, 12), (12, 13),
)

# LCF [12, 7, -7]^8
MCGEE_EDGES = (
    (0, 1), (0, 12), (0, 23), (1, 2), (1, 8), (2, 3), (2, 19), (3, 4), (3, 15),
    (4, 5), (4, 11), (5, 6), (5, 22), (6, 7), (6, 18), (7, 8), (7, 14), (8, 9),
    (9, 10), (9, 21), (10, 11), (10, 17), (11, 12), (12, 13), (13, 14),
    (13, 20), (14, 15), (15, 16), (16, 17), (16, 23), (17, 18), (18, 19),
    (19, 20), (20, 21), (21, 22), (22, 23),
)

PLATONIC = {
    "tetrahedron": (4, TETRAHEDRON_EDGES),
    "cube": (8, CUBE_EDGES),
    "octahedron": (6, OCTAHEDRON_EDGES),
    "dodecahedron": (20, DODECAHEDRON_EDGES),
    "icosahedron": (12, ICOSAHEDRON_EDGES),
}

NAMED = {
    "petersen": (10, PETERSEN_EDGES),
    "heawood": (14, HEAWOOD_EDGES),
    "mcgee": (24, MCGEE_EDGES),
    **PLATONIC,
}
