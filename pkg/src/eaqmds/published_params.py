"""Published sample parameters for the four code families.

One tuple per printed row, in printed order: (m, q, n, alpha, kq, d, c),
standing for the code [[n, kq, d; c]]_q at that (m, q, alpha).  The table
command recomputes every row and compares against these values, so the
data below is reference input, never derived output.

The case-3 rows for q = 67 are printed with a stale field-size subscript
(47) in the source tables; the q column value 67 is the one consistent
with n = 449 and is what is recorded here.
"""

PUBLISHED_ROWS: dict[int, tuple[tuple[int, int, int, int, int, int, int], ...]] = {
    1: (
        (1, 13, 85, 1, 33, 33, 12),
        (1, 13, 85, 2, 9, 59, 40),
        (1, 13, 85, 3, 1, 85, 84),
        (1, 17, 145, 1, 73, 43, 12),
        (1, 17, 145, 2, 33, 77, 40),
        (1, 17, 145, 3, 9, 111, 84),
        (1, 17, 145, 4, 1, 145, 144),
        (3, 43, 185, 1, 41, 99, 52),
        (3, 43, 185, 2, 1, 185, 184),
        (3, 83, 689, 1, 361, 191, 52),
        (3, 83, 689, 2, 161, 357, 184),
        (3, 83, 689, 3, 41, 523, 396),
        (3, 83, 689, 4, 1, 689, 688),
        (5, 109, 457, 1, 105, 239, 124),
        (5, 109, 457, 2, 1, 457, 456),
    ),
    2: (
        (1, 11, 61, 1, 9, 39, 24),
        (1, 11, 61, 2, 1, 61, 60),
        (1, 19, 181, 1, 73, 67, 24),
        (1, 19, 181, 2, 33, 105, 60),
        (1, 19, 181, 3, 9, 143, 112),
        (1, 19, 181, 4, 1, 181, 180),
        (3, 53, 281, 1, 41, 175, 108),
        (3, 53, 281, 2, 1, 281, 280),
        (3, 73, 533, 1, 161, 241, 108),
        (3, 73, 533, 2, 41, 387, 280),
        (3, 73, 533, 3, 1, 533, 532),
        (5, 239, 2197, 1, 937, 763, 264),
        (5, 239, 2197, 2, 417, 1241, 700),
        (5, 239, 2197, 3, 105, 1719, 1344),
        (5, 239, 2197, 4, 1, 2197, 2196),
    ),
    3: (
        (1, 29, 421, 1, 289, 73, 12),
        (1, 29, 421, 2, 201, 131, 40),
        (1, 29, 421, 3, 129, 189, 84),
        (1, 29, 421, 4, 73, 247, 144),
        (1, 29, 421, 5, 33, 305, 220),
        (1, 29, 421, 6, 9, 363, 312),
        (1, 29, 421, 7, 1, 421, 420),
        (3, 47, 221, 1, 41, 127, 72),
        (3, 47, 221, 2, 1, 221, 220),
        (3, 67, 449, 1, 161, 181, 72),
        (3, 67, 449, 2, 41, 315, 220),
        (3, 67, 449, 3, 1, 449, 448),
        (5, 229, 2017, 1, 937, 643, 204),
        (5, 229, 2017, 2, 417, 1101, 600),
        (5, 229, 2017, 3, 105, 1559, 1204),
        (5, 229, 2017, 4, 1, 2017, 2016),
    ),
    4: (
        (1, 23, 265, 1, 129, 81, 24),
        (1, 23, 265, 2, 73, 127, 60),
        (1, 23, 265, 3, 33, 173, 112),
        (1, 23, 265, 4, 9, 219, 180),
        (1, 23, 265, 5, 1, 265, 264),
        (3, 97, 941, 1, 361, 359, 136),
        (3, 97, 941, 2, 161, 553, 324),
        (3, 97, 941, 3, 41, 747, 592),
        (3, 97, 941, 4, 1, 941, 940),
        (5, 151, 877, 1, 105, 575, 376),
        (5, 151, 877, 2, 1, 877, 876),
    ),
}

ROW_COUNTS = {case: len(rows) for case, rows in PUBLISHED_ROWS.items()}
