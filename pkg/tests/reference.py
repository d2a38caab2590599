"""Frozen reference values shared by the unit and acceptance suites."""

# n = 5 voters, m = 1..10: (m, phi, c, ratio percent)
EXPLORATION_ROWS = [
    (1, 1, 1, "100.0"),
    (2, 33, 9, "27.3"),
    (3, 276, 36, "13.0"),
    (4, 1300, 100, "7.7"),
    (5, 4425, 225, "5.1"),
    (6, 12201, 441, "3.6"),
    (7, 29008, 784, "2.7"),
    (8, 61776, 1296, "2.1"),
    (9, 120825, 2025, "1.7"),
    (10, 220825, 3025, "1.4"),
]

EXPLORATION_CSV = "m,phi,c,ratio_percent\n" + "".join(
    f"{m},{phi},{c},{r}\n" for m, phi, c, r in EXPLORATION_ROWS
)
