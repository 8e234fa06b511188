"""Published rows and worked examples the verification suites compare against."""

# Mahonian triangle (A008302), rows n = 1..6
MAHONIAN_ROWS = (
    (1,),
    (1, 1),
    (1, 2, 2, 1),
    (1, 3, 5, 6, 5, 3, 1),
    (1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1),
    (1, 5, 14, 29, 49, 71, 90, 101, 101, 90, 71, 49, 29, 14, 5, 1),
)

# Structures of size n with i marked Fishburn features, rows n = 1..9
UNSIEVED_ROWS = (
    (1,),
    (2,),
    (6, 1),
    (24, 9),
    (120, 72, 5),
    (720, 600, 98, 1),
    (5040, 5400, 1450, 76),
    (40320, 52920, 20100, 2200, 35),
    (362880, 564480, 279300, 48750, 2299, 9),
)

# Fishburn distribution f_{n,k}, rows n = 1..9
FISHBURN_ROWS = (
    (1,),
    (2,),
    (5, 1),
    (15, 9),
    (53, 62, 5),
    (217, 407, 95, 1),
    (1014, 2728, 1222, 76),
    (5335, 19180, 13710, 2060, 35),
    (31240, 142979, 146754, 39644, 2254, 9),
)

# Fishburn numbers (A022493), n = 0..9
FISHBURN_NUMBERS = (1, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240)

# Primitive row Fishburn matrix totals (A179525), n = 1..6
PRIMITIVE_ROW_TOTALS = (1, 2, 7, 33, 197, 1419)

PERMUTATION_EXAMPLE = {
    "input": "246531",
    "marks": ((4, 1), (6, 1), (6, 5)),
    "output": "436289751",
    "occurrences": ((2, 3, 4), (4, 5, 9), (5, 6, 7)),
}

MATCHING_EXAMPLE = {
    "input": ((1, 9), (2, 12), (3, 10), (4, 7), (5, 8), (6, 11)),
    "marks": (((2, 12), 4), ((1, 9), 4), ((2, 12), 3)),
    "output": ((1, 12), (2, 16), (3, 17), (4, 14), (5, 18), (6, 13), (7, 10), (8, 11), (9, 15)),
    "confused": ((3, 17), (5, 18), (6, 13)),
}

POSET_EXAMPLE = {
    "input": (0, 1, 0, 3, 0, 0),
    "marks": ((2, 3), (1, 3), (4, 6), (3, 6)),
    "output": (0, 1, 2, 1, 0, 5, 0, 6, 5, 0),
    "mislabelings": (3, 4, 8, 9),
}
