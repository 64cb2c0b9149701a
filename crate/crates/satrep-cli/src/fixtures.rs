//! Bundled reference tables for the `reproduce` subcommands.

/// One row of the two-row Kronecker stretching table: labels, the odd and
/// even constituents (coefficient strings, ascending degree), and the
/// closed form of the generating function as numerator coefficients over
/// (1 - t^a)^mult factors.
pub struct KronRow {
    pub lambda: [u64; 2],
    pub mu: [u64; 2],
    pub pi: [u64; 4],
    pub odd: &'static [&'static str],
    pub even: &'static [&'static str],
    pub f_num: &'static [i64],
    pub f_den: &'static [(u64, u32)],
}

/// Data notes. Row 9's tabulated closed form disagrees with its own
/// sample sequence (the row is constant 1, whose series is forced); the
/// canonical equivalent 1/(1-t) is stored. Four period-1 rows print the
/// denominator (1-t)^3 next to a numerator divisible by (1+t) whose
/// series only matches the row's constituents over (1-t)^2(1-t^2); the
/// corrected denominator is stored for those rows.
pub const KRON_ROWS: &[KronRow] = &[
    KronRow {
        lambda: [87, 62],
        mu: [97, 52],
        pi: [64, 39, 24, 22],
        odd: &["1/2", "4", "11/2"],
        even: &["1", "4", "11/2"],
        f_num: &[1, 8, 11, 2],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [104, 95],
        mu: [149, 50],
        pi: [95, 78, 15, 11],
        odd: &["1/2", "13/2", "18"],
        even: &["1", "13/2", "18"],
        f_num: &[1, 23, 36, 12],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [101, 85],
        mu: [102, 84],
        pi: [78, 72, 24, 12],
        odd: &["0", "17/2", "71/2"],
        even: &["1", "17/2", "71/2"],
        f_num: &[1, 42, 72, 27],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [79, 63],
        mu: [93, 49],
        pi: [88, 37, 14, 3],
        odd: &["3/4", "27/2", "303/4"],
        even: &["1", "27/2", "303/4"],
        f_num: &[1, 88, 151, 63],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [97, 93],
        mu: [114, 76],
        pi: [77, 66, 47, 0],
        odd: &["1/2", "15/2", "21"],
        even: &["1", "15/2", "21"],
        f_num: &[1, 27, 42, 14],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [88, 56],
        mu: [113, 31],
        pi: [99, 35, 7, 3],
        odd: &["1/2", "11/2", "10"],
        even: &["1", "11/2", "10"],
        f_num: &[1, 14, 20, 5],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [134, 82],
        mu: [140, 76],
        pi: [91, 72, 49, 4],
        odd: &["3/4", "21", "669/4"],
        even: &["1", "21", "669/4"],
        f_num: &[1, 187, 334, 147],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [133, 69],
        mu: [149, 53],
        pi: [98, 55, 43, 6],
        odd: &["1", "6", "8"],
        even: &["1", "6", "8"],
        f_num: &[1, 13, 15, 3],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [80, 63],
        mu: [111, 32],
        pi: [88, 38, 10, 7],
        odd: &["1"],
        even: &["1"],
        f_num: &[1],
        f_den: &[(1, 1)],
    },
    KronRow {
        lambda: [118, 69],
        mu: [151, 36],
        pi: [95, 63, 20, 9],
        odd: &["1", "4", "4"],
        even: &["1", "4", "4"],
        f_num: &[1, 7, 7, 1],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [96, 51],
        mu: [103, 44],
        pi: [90, 53, 3, 1],
        odd: &["1/2", "39/2", "36"],
        even: &["1", "39/2", "36"],
        f_num: &[1, 54, 72, 17],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [117, 72],
        mu: [133, 56],
        pi: [82, 57, 41, 9],
        odd: &["1", "9", "18"],
        even: &["1", "9", "18"],
        f_num: &[1, 26, 35, 10],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [72, 63],
        mu: [77, 58],
        pi: [49, 38, 28, 20],
        odd: &["1/2", "7", "55/2"],
        even: &["1", "7", "55/2"],
        f_num: &[1, 33, 55, 21],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [48, 37],
        mu: [49, 36],
        pi: [34, 24, 16, 11],
        odd: &["1/2", "6", "37/2"],
        even: &["1", "6", "37/2"],
        f_num: &[1, 23, 37, 13],
        f_den: &[(1, 2), (2, 1)],
    },
    KronRow {
        lambda: [108, 56],
        mu: [113, 51],
        pi: [73, 50, 29, 12],
        odd: &["1", "4", "4"],
        even: &["1", "4", "4"],
        f_num: &[1, 7, 7, 1],
        f_den: &[(1, 2), (2, 1)],
    },
];

/// Hilbert polynomial rows for closed GL_k orbits: exact leading
/// coefficient, and the remaining printed coefficients as fractions to
/// compare within 1e-6 after conversion to floats (the source table
/// carries binary-float rounding noise in those positions).
pub struct GpRow {
    pub k: usize,
    pub lambda: &'static [u64],
    pub leading: i64,
    /// printed (numerator, denominator) for degrees 0..deg-1, ascending
    pub lower: &'static [(i128, i128)],
}

pub const GP_ROWS: &[GpRow] = &[
    GpRow {
        k: 3,
        lambda: &[21, 19],
        leading: 399,
        lower: &[
            (1, 1),
            (4329327034365, 137438953472),
            (35527969472513, 137438953472),
        ],
    },
    GpRow {
        k: 3,
        lambda: &[12, 9, 5],
        leading: 42,
        lower: &[
            (1, 1),
            (11544872091645, 1099511627776),
            (40132174413825, 1099511627776),
        ],
    },
];

/// Symmetric-invariant Hilbert quasi-polynomials: expected constituents
/// for k = 2 and k = 3 (coefficient strings, ascending degree, residue
/// classes 1..period).
pub struct SymRow {
    pub k: u64,
    pub period: usize,
    pub constituents: &'static [&'static [&'static str]],
}

pub const SYM_ROWS: &[SymRow] = &[
    SymRow {
        k: 2,
        period: 2,
        constituents: &[&["1/2", "1/2"], &["1", "1/2"]],
    },
    SymRow {
        k: 3,
        period: 6,
        constituents: &[
            &["5/12", "1/2", "1/12"],
            &["2/3", "1/2", "1/12"],
            &["3/4", "1/2", "1/12"],
            &["2/3", "1/2", "1/12"],
            &["5/12", "1/2", "1/12"],
            &["1", "1/2", "1/12"],
        ],
    },
];
