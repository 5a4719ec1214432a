//! The first 32 basis polynomials as printed, `(k, [(t, c)], constant)`.

pub type TableEntry = (u64, &'static [(u32, i64)], i64);

pub const TABLE: [TableEntry; 32] = [
    (0, &[], 1),
    (1, &[(1, 1)], -1),
    (2, &[(2, 1)], -1),
    (3, &[(2, 1), (1, -1)], 1),
    (4, &[(3, 1)], -1),
    (5, &[(3, 2), (1, -1)], 1),
    (6, &[(3, 2), (2, -1)], 1),
    (7, &[(3, 1), (2, -1), (1, 1)], -1),
    (8, &[(4, 1)], -1),
    (9, &[(4, 3), (1, -1)], 1),
    (10, &[(4, 5), (2, -1)], 1),
    (11, &[(4, 3), (2, -1), (1, 1)], -1),
    (12, &[(4, 3), (3, -1)], 1),
    (13, &[(4, 5), (3, -2), (1, 1)], -1),
    (14, &[(4, 3), (3, -2), (2, 1)], -1),
    (15, &[(4, 1), (3, -1), (2, 1), (1, -1)], 1),
    (16, &[(5, 1)], -1),
    (17, &[(5, 4), (1, -1)], 1),
    (18, &[(5, 9), (2, -1)], 1),
    (19, &[(5, 6), (2, -1), (1, 1)], -1),
    (20, &[(5, 9), (3, -1)], 1),
    (21, &[(5, 16), (3, -2), (1, 1)], -1),
    (22, &[(5, 11), (3, -2), (2, 1)], -1),
    (23, &[(5, 4), (3, -1), (2, 1), (1, -1)], 1),
    (24, &[(5, 4), (4, -1)], 1),
    (25, &[(5, 11), (4, -3), (1, 1)], -1),
    (26, &[(5, 16), (4, -5), (2, 1)], -1),
    (27, &[(5, 9), (4, -3), (2, 1), (1, -1)], 1),
    (28, &[(5, 6), (4, -3), (3, 1)], -1),
    (29, &[(5, 9), (4, -5), (3, 2), (1, -1)], 1),
    (30, &[(5, 4), (4, -3), (3, 2), (2, -1)], 1),
    (31, &[(5, 1), (4, -1), (3, 1), (2, -1), (1, 1)], -1),
];
