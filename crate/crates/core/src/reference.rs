//! Published reference values: the Weyl character polynomials for
//! partitions of at most 5 and the stable restriction coefficients for
//! partitions of at most 5.

/// `(shape, S_shape)` with shapes written as in the command line.
pub const WEYL_TABLE: [(&str, &str); 18] = [
    ("1", "X1"),
    ("2", "1/2*X1^2 + 1/2*X1 + X2"),
    ("1,1", "1/2*X1^2 - 1/2*X1 - X2"),
    ("3", "1/6*X1^3 + 1/2*X1^2 + X1*X2 + 1/3*X1 + X3"),
    ("2,1", "1/3*X1^3 - 1/3*X1 - X3"),
    ("1,1,1", "1/6*X1^3 - 1/2*X1^2 - X1*X2 + 1/3*X1 + X3"),
    ("4", "1/24*X1^4 + 1/4*X1^3 + 1/2*X1^2*X2 + 11/24*X1^2 + 1/2*X1*X2 + 1/2*X2^2 + X1*X3 + 1/4*X1 + 1/2*X2 + X4"),
    ("3,1", "1/8*X1^4 + 1/4*X1^3 + 1/2*X1^2*X2 - 1/8*X1^2 - 1/2*X1*X2 - 1/2*X2^2 - 1/4*X1 - 1/2*X2 - X4"),
    ("2,2", "1/12*X1^4 - 1/12*X1^2 + X1*X2 + X2^2 - X1*X3"),
    ("2,1,1", "1/8*X1^4 - 1/4*X1^3 - 1/2*X1^2*X2 - 1/8*X1^2 - 1/2*X1*X2 - 1/2*X2^2 + 1/4*X1 + 1/2*X2 + X4"),
    ("1,1,1,1", "1/24*X1^4 - 1/4*X1^3 - 1/2*X1^2*X2 + 11/24*X1^2 + 1/2*X1*X2 + 1/2*X2^2 + X1*X3 - 1/4*X1 - 1/2*X2 - X4"),
    ("5", "1/120*X1^5 + 1/12*X1^4 + 1/6*X1^3*X2 + 7/24*X1^3 + 1/2*X1^2*X2 + 1/2*X1*X2^2 + 1/2*X1^2*X3 + 5/12*X1^2 + 5/6*X1*X2 + 1/2*X1*X3 + X2*X3 + X1*X4 + 1/5*X1 + X5"),
    ("4,1", "1/30*X1^5 + 1/6*X1^4 + 1/3*X1^3*X2 + 1/6*X1^3 + 1/2*X1^2*X3 - 1/6*X1^2 - 1/3*X1*X2 - 1/2*X1*X3 - X2*X3 - 1/5*X1 - X5"),
    ("3,2", "1/24*X1^5 + 1/12*X1^4 + 1/6*X1^3*X2 - 1/24*X1^3 + 1/2*X1^2*X2 + 1/2*X1*X2^2 - 1/2*X1^2*X3 - 1/12*X1^2 - 1/6*X1*X2 + 1/2*X1*X3 + X2*X3 - X1*X4"),
    ("3,1,1", "1/20*X1^5 - 1/4*X1^3 - X1^2*X2 - X1*X2^2 + 1/5*X1 + X5"),
    ("2,2,1", "1/24*X1^5 - 1/12*X1^4 - 1/6*X1^3*X2 - 1/24*X1^3 + 1/2*X1^2*X2 + 1/2*X1*X2^2 - 1/2*X1^2*X3 + 1/12*X1^2 + 1/6*X1*X2 - 1/2*X1*X3 - X2*X3 + X1*X4"),
    ("2,1,1,1", "1/30*X1^5 - 1/6*X1^4 - 1/3*X1^3*X2 + 1/6*X1^3 + 1/2*X1^2*X3 + 1/6*X1^2 + 1/3*X1*X2 + 1/2*X1*X3 + X2*X3 - 1/5*X1 - X5"),
    ("1,1,1,1,1", "1/120*X1^5 - 1/12*X1^4 - 1/6*X1^3*X2 + 7/24*X1^3 + 1/2*X1^2*X2 + 1/2*X1*X2^2 + 1/2*X1^2*X3 - 5/12*X1^2 - 5/6*X1*X2 - 1/2*X1*X3 - X2*X3 - X1*X4 + 1/5*X1 + X5"),
];

/// `r_{lambda mu}` for `|lambda|, |mu| <= 5`, rows and columns ordered by size and
/// then reverse-lexicographically.
#[rustfmt::skip]
pub const RESTRICTION_MATRIX: [[u64; 19]; 19] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [3, 4, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 3, 2, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [5, 7, 5, 2, 2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 7, 5, 6, 2, 3, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 3, 4, 1, 1, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 3, 0, 2, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [7, 12, 9, 5, 5, 3, 0, 2, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [5, 14, 13, 12, 6, 9, 3, 2, 3, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0],
    [4, 10, 11, 8, 6, 8, 2, 1, 3, 2, 1, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 3, 4, 8, 1, 7, 6, 0, 2, 1, 3, 1, 0, 0, 0, 1, 0, 0, 0],
    [1, 3, 4, 3, 2, 5, 1, 0, 1, 2, 2, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 1, 3, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1],
];
