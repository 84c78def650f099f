// Literal d̃ tables for E7 and E8 (upper triangle, i <= j).

use super::LiteralTable;

#[rustfmt::skip]
pub(crate) static E7_TILDE_D: LiteralTable = &[
    (1, 1, &[(1, 1), (7, 1), (11, 1), (17, 1)]),
    (1, 2, &[(4, 1), (8, 1), (10, 1), (14, 1)]),
    (1, 3, &[(2, 1), (6, 1), (8, 1), (10, 1), (12, 1), (16, 1)]),
    (1, 4, &[(3, 1), (5, 1), (7, 1), (9, 2), (11, 1), (13, 1), (15, 1)]),
    (1, 6, &[(5, 1), (7, 1), (11, 1), (13, 1)]),
    (1, 7, &[(6, 1), (12, 1)]),
    (2, 2, &[(1, 1), (5, 1), (7, 1), (9, 1), (11, 1), (13, 1), (17, 1)]),
    (2, 3, &[(3, 1), (5, 1), (7, 1), (9, 2), (11, 1), (13, 1), (15, 1)]),
    (2, 4, &[(2, 1), (4, 1), (6, 2), (8, 2), (10, 2), (12, 2), (14, 1), (16, 1)]),
    (2, 5, &[(3, 1), (5, 1), (7, 2), (9, 1), (11, 2), (13, 1), (15, 1)]),
    (2, 6, &[(4, 1), (6, 1), (8, 1), (10, 1), (12, 1), (14, 1)]),
    (2, 7, &[(5, 1), (9, 1), (13, 1)]),
    (3, 3, &[(1, 1), (3, 1), (5, 1), (7, 2), (9, 2), (11, 2), (13, 1), (15, 1), (17, 1)]),
    (3, 4, &[(2, 1), (4, 2), (6, 2), (8, 3), (10, 3), (12, 2), (14, 2), (16, 1)]),
    (3, 5, &[(3, 1), (5, 2), (7, 2), (9, 2), (11, 2), (13, 2), (15, 1)]),
    (3, 6, &[(4, 1), (6, 2), (8, 1), (10, 1), (12, 2), (14, 1)]),
    (3, 7, &[(5, 1), (7, 1), (11, 1), (13, 1)]),
    (4, 4, &[(1, 1), (3, 2), (5, 3), (7, 4), (9, 4), (11, 4), (13, 3), (15, 2), (17, 1)]),
    (4, 5, &[(2, 1), (4, 2), (6, 3), (8, 3), (10, 3), (12, 3), (14, 2), (16, 1)]),
    (4, 6, &[(3, 1), (5, 2), (7, 2), (9, 2), (11, 2), (13, 2), (15, 1)]),
    (4, 7, &[(4, 1), (6, 1), (8, 1), (10, 1), (12, 1), (14, 1)]),
    (5, 5, &[(1, 1), (3, 1), (5, 2), (7, 2), (9, 3), (11, 2), (13, 2), (15, 1), (17, 1)]),
    (5, 6, &[(2, 1), (4, 1), (6, 1), (8, 2), (10, 2), (12, 1), (14, 1), (16, 1)]),
    (5, 7, &[(3, 1), (7, 1), (11, 1), (15, 1)]),
    (6, 6, &[(1, 1), (3, 1), (7, 1), (9, 2), (11, 1), (15, 1), (17, 1)]),
    (6, 7, &[(2, 1), (8, 1), (10, 1), (16, 1)]),
    (7, 7, &[(1, 1), (9, 1), (17, 1)]),
];

#[rustfmt::skip]
pub(crate) static E8_TILDE_D: LiteralTable = &[
    (1, 1, &[(1, 1), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (29, 1)]),
    (1, 2, &[(4, 1), (8, 1), (10, 1), (12, 1), (14, 1), (16, 1), (18, 1), (20, 1), (22, 1), (26, 1)]),
    (1, 3, &[(2, 1), (6, 1), (8, 1), (10, 1), (12, 2), (14, 1), (16, 1), (18, 2), (20, 1), (22, 1), (24, 1), (28, 1)]),
    (1, 4, &[(3, 1), (5, 1), (7, 1), (9, 2), (11, 2), (13, 2), (15, 2), (17, 2), (19, 2), (21, 2), (23, 1), (25, 1), (27, 1)]),
    (1, 5, &[(4, 1), (6, 1), (8, 1), (10, 2), (12, 1), (14, 2), (16, 2), (18, 1), (20, 2), (22, 1), (24, 1), (26, 1)]),
    (1, 6, &[(5, 1), (7, 1), (9, 1), (11, 1), (13, 1), (15, 2), (17, 1), (19, 1), (21, 1), (23, 1), (25, 1)]),
    (1, 7, &[(6, 1), (8, 1), (12, 1), (14, 1), (16, 1), (18, 1), (22, 1), (24, 1)]),
    (1, 8, &[(7, 1), (13, 1), (17, 1), (23, 1)]),
    (2, 2, &[(1, 1), (5, 1), (7, 1), (9, 1), (11, 2), (13, 1), (15, 2), (17, 1), (19, 2), (21, 1), (23, 1), (25, 1), (29, 1)]),
    (2, 3, &[(3, 1), (5, 1), (7, 1), (9, 2), (11, 2), (13, 2), (15, 2), (17, 2), (19, 2), (21, 2), (23, 1), (25, 1), (27, 1)]),
    (2, 4, &[(2, 1), (4, 1), (6, 2), (8, 2), (10, 3), (12, 3), (14, 3), (16, 3), (18, 3), (20, 3), (22, 2), (24, 2), (26, 1), (28, 1)]),
    (2, 5, &[(3, 1), (5, 1), (7, 2), (9, 2), (11, 2), (13, 3), (15, 3), (17, 3), (19, 2), (21, 2), (23, 2), (25, 1), (27, 1)]),
    (2, 6, &[(4, 1), (6, 1), (8, 2), (10, 1), (12, 2), (14, 2), (16, 2), (18, 2), (20, 1), (22, 2), (24, 1), (26, 1)]),
    (2, 7, &[(5, 1), (7, 1), (9, 1), (11, 1), (13, 1), (15, 2), (17, 1), (19, 1), (21, 1), (23, 1), (25, 1)]),
    (2, 8, &[(6, 1), (10, 1), (14, 1), (16, 1), (20, 1), (24, 1)]),
    (3, 3, &[(1, 1), (3, 1), (5, 1), (7, 2), (9, 2), (11, 3), (13, 3), (15, 2), (17, 3), (19, 3), (21, 2), (23, 2), (25, 1), (27, 1), (29, 1)]),
    (3, 4, &[(2, 1), (4, 2), (6, 2), (8, 3), (10, 4), (12, 4), (14, 4), (16, 4), (18, 4), (20, 4), (22, 3), (24, 2), (26, 2), (28, 1)]),
    (3, 5, &[(3, 1), (5, 2), (7, 2), (9, 3), (11, 3), (13, 3), (15, 4), (17, 3), (19, 3), (21, 3), (23, 2), (25, 2), (27, 1)]),
    (3, 6, &[(4, 1), (6, 2), (8, 2), (10, 2), (12, 2), (14, 3), (16, 3), (18, 2), (20, 2), (22, 2), (24, 2), (26, 1)]),
    (3, 7, &[(5, 1), (7, 2), (9, 1), (11, 1), (13, 2), (15, 2), (17, 2), (19, 1), (21, 1), (23, 2), (25, 1)]),
    (3, 8, &[(6, 1), (8, 1), (12, 1), (14, 1), (16, 1), (18, 1), (22, 1), (24, 1)]),
    (4, 4, &[(1, 1), (3, 2), (5, 3), (7, 4), (9, 5), (11, 6), (13, 6), (15, 6), (17, 6), (19, 6), (21, 5), (23, 4), (25, 3), (27, 2), (29, 1)]),
    (4, 5, &[(2, 1), (4, 2), (6, 3), (8, 4), (10, 4), (12, 5), (14, 5), (16, 5), (18, 5), (20, 4), (22, 4), (24, 3), (26, 2), (28, 1)]),
    (4, 6, &[(3, 1), (5, 2), (7, 3), (9, 3), (11, 3), (13, 4), (15, 4), (17, 4), (19, 3), (21, 3), (23, 3), (25, 2), (27, 1)]),
    (4, 7, &[(4, 1), (6, 2), (8, 2), (10, 2), (12, 2), (14, 3), (16, 3), (18, 2), (20, 2), (22, 2), (24, 2), (26, 1)]),
    (4, 8, &[(5, 1), (7, 1), (9, 1), (11, 1), (13, 1), (15, 2), (17, 1), (19, 1), (21, 1), (23, 1), (25, 1)]),
    (5, 5, &[(1, 1), (3, 1), (5, 2), (7, 3), (9, 3), (11, 4), (13, 4), (15, 4), (17, 4), (19, 4), (21, 3), (23, 3), (25, 2), (27, 1), (29, 1)]),
    (5, 6, &[(2, 1), (4, 1), (6, 2), (8, 2), (10, 3), (12, 3), (14, 3), (16, 3), (18, 3), (20, 3), (22, 2), (24, 2), (26, 1), (28, 1)]),
    (5, 7, &[(3, 1), (5, 1), (7, 1), (9, 2), (11, 2), (13, 2), (15, 2), (17, 2), (19, 2), (21, 2), (23, 1), (25, 1), (27, 1)]),
    (5, 8, &[(4, 1), (8, 1), (10, 1), (12, 1), (14, 1), (16, 1), (18, 1), (20, 1), (22, 1), (26, 1)]),
    (6, 6, &[(1, 1), (3, 1), (5, 1), (7, 1), (9, 2), (11, 3), (13, 2), (15, 2), (17, 2), (19, 3), (21, 2), (23, 1), (25, 1), (27, 1), (29, 1)]),
    (6, 7, &[(2, 1), (4, 1), (8, 1), (10, 2), (12, 2), (14, 1), (16, 1), (18, 2), (20, 2), (22, 1), (26, 1), (28, 1)]),
    (6, 8, &[(3, 1), (9, 1), (11, 1), (13, 1), (17, 1), (19, 1), (21, 1), (27, 1)]),
    (7, 7, &[(1, 1), (3, 1), (9, 1), (11, 2), (13, 1), (17, 1), (19, 2), (21, 1), (27, 1), (29, 1)]),
    (7, 8, &[(2, 1), (10, 1), (12, 1), (18, 1), (20, 1), (28, 1)]),
    (8, 8, &[(1, 1), (11, 1), (19, 1), (29, 1)]),
];
