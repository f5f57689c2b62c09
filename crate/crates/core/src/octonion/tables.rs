//! Multiplication-table source data for Im(O) in the y-basis, and the
//! change-of-basis matrix to the canonical e-basis.

use crate::linalg::Matrix;
use crate::numfield::{GaussSqrt2, Rational};

/// Orderings of the y-basis vectors: position p (0-based) holds y-label.
pub const B1_ORDER: [usize; 7] = [1, 2, 3, 4, 5, 6, 7];
pub const B2_ORDER: [usize; 7] = [2, 3, 4, 5, 6, 1, 7];
pub const B3_ORDER: [usize; 7] = [1, 2, 4, 5, 3, 6, 7];

/// Incidence lines of the Fano diagram on the e-basis labels.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 7],
    [1, 5, 6],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 5],
    [3, 6, 7],
];

/// The complete multiplication table in the ordering (y2,y3,y4,y5,y6,y1,y7),
/// row · column. Entries use y-labels; "s2" stands for √2.
pub const TABLE_B2: [[&str; 7]; 7] = [
    ["0", "-s2 y1", "s2 y6", "-1+i y7", "0", "0", "-i y2"],
    ["s2 y1", "0", "-s2 y5", "0", "-1+i y7", "0", "-i y3"],
    ["-s2 y6", "s2 y5", "0", "0", "0", "-1+i y7", "-i y4"],
    ["-1-i y7", "0", "0", "0", "-s2 y4", "s2 y3", "i y5"],
    ["0", "-1-i y7", "0", "s2 y4", "0", "-s2 y2", "i y6"],
    ["0", "0", "-1-i y7", "-s2 y3", "s2 y2", "0", "i y1"],
    ["i y2", "i y3", "i y4", "-i y5", "-i y6", "-i y1", "-1"],
];

/// The multiplication table in the ordering (y1,y2,y4,y5,y3,y6,y7).
pub const TABLE_B3: [[&str; 7]; 7] = [
    ["0", "0", "-1-i y7", "-s2 y3", "0", "s2 y2", "i y1"],
    ["0", "0", "s2 y6", "-1+i y7", "-s2 y1", "0", "-i y2"],
    ["-1+i y7", "-s2 y6", "0", "0", "s2 y5", "0", "-i y4"],
    ["s2 y3", "-1-i y7", "0", "0", "0", "-s2 y4", "i y5"],
    ["0", "s2 y1", "-s2 y5", "0", "0", "-1+i y7", "-i y3"],
    ["-s2 y2", "0", "0", "s2 y4", "-1-i y7", "0", "i y6"],
    ["-i y1", "i y2", "i y4", "-i y5", "i y3", "-i y6", "-1"],
];

/// One product b_a · b_b: scalar part plus imaginary coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductEntry {
    pub real: GaussSqrt2,
    pub imag: [GaussSqrt2; 7],
}

impl ProductEntry {
    pub fn zero() -> Self {
        ProductEntry { real: GaussSqrt2::zero(), imag: std::array::from_fn(|_| GaussSqrt2::zero()) }
    }
}

/// Parses a table cell like "-1+i y7", "s2 y6", "-i y2", "0", "-1".
pub fn parse_entry(s: &str) -> ProductEntry {
    let mut out = ProductEntry::zero();
    let s = s.trim();
    if s == "0" {
        return out;
    }
    let (scalar, rest) = if let Some(r) = s.strip_prefix("-1+") {
        (GaussSqrt2::from_int(-1), r)
    } else if let Some(r) = s.strip_prefix("-1-") {
        // the minus sign transfers onto the imaginary term
        out.real = GaussSqrt2::from_int(-1);
        return parse_term(&format!("-{r}"), out);
    } else if s == "-1" {
        out.real = GaussSqrt2::from_int(-1);
        return out;
    } else {
        (GaussSqrt2::zero(), s)
    };
    out.real = scalar;
    parse_term(rest, out)
}

fn parse_term(term: &str, mut out: ProductEntry) -> ProductEntry {
    let term = term.trim();
    let (coeff, label) = term.rsplit_once(' ').expect("coefficient and y-label");
    let coeff = match coeff {
        "i" => GaussSqrt2::i(),
        "-i" => -GaussSqrt2::i(),
        "s2" => GaussSqrt2::sqrt2(),
        "-s2" => -GaussSqrt2::sqrt2(),
        other => panic!("unrecognized coefficient {other:?}"),
    };
    let k: usize = label.strip_prefix('y').expect("y-label").parse().expect("label index");
    out.imag[k - 1] = coeff;
    out
}

/// The y-label-indexed multiplication table reconstructed from TABLE_B2.
pub fn canonical_y_table() -> [[ProductEntry; 7]; 7] {
    let mut table: [[ProductEntry; 7]; 7] =
        std::array::from_fn(|_| std::array::from_fn(|_| ProductEntry::zero()));
    for (ri, row) in TABLE_B2.iter().enumerate() {
        for (ci, cell) in row.iter().enumerate() {
            table[B2_ORDER[ri] - 1][B2_ORDER[ci] - 1] = parse_entry(cell);
        }
    }
    table
}

/// Change-of-basis matrix from B1 to B0: columns are the y-vectors in
/// e-coordinates, so coords_e = P · coords_y.
pub fn p_matrix() -> Matrix<GaussSqrt2> {
    let h = Rational::new(1, 2).unwrap();
    let hs2 = GaussSqrt2::sqrt2().scale(&h); // √2/2
    let his2 = GaussSqrt2::i_sqrt2().scale(&h); // i√2/2
    let z = GaussSqrt2::zero;
    let rows = vec![
        vec![z(), hs2.clone(), z(), z(), hs2.clone(), z(), z()],
        vec![hs2.clone(), z(), z(), hs2.clone(), z(), z(), z()],
        vec![z(), z(), hs2.clone(), z(), z(), hs2.clone(), z()],
        vec![z(), -his2.clone(), z(), z(), his2.clone(), z(), z()],
        vec![-his2.clone(), z(), z(), his2.clone(), z(), z(), z()],
        vec![z(), z(), -his2.clone(), z(), z(), his2.clone(), z()],
        vec![z(), z(), z(), z(), z(), z(), GaussSqrt2::one()],
    ];
    Matrix::from_rows(rows)
}
