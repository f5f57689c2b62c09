//! Exact solver for the derivation algebra of Im(O): linear maps D with
//! D(xy) = D(x)y + x D(y). The solution space is g2, of dimension 14.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::numfield::GaussSqrt2;
use crate::octonion::{BasisId, Octonion, StructureConstants};

/// Basis of the derivation algebra in a fixed octonion basis. Each element
/// is the 7×7 matrix of the map on imaginary coordinates.
#[derive(Clone, Debug)]
pub struct DerivationAlgebra {
    pub basis: BasisId,
    pub basis_maps: Vec<Matrix<GaussSqrt2>>,
}

/// Solves the Leibniz constraints over Q(i,√2). The unknowns are the 49
/// matrix entries d[k][j]; one unordered basis pair contributes 8 scalar
/// equations (the scalar part and 7 imaginary coordinates of the identity).
/// Diagonal and swapped pairs are implied by bilinearity and anticommutation
/// of the imaginary part, and the full 49-pair check below confirms it.
pub fn derivation_algebra(sc: &StructureConstants) -> DerivationAlgebra {
    let idx = |k: usize, j: usize| (k - 1) * 7 + (j - 1);
    let mut rows: Vec<Vec<GaussSqrt2>> = Vec::with_capacity(21 * 8);
    for a in 1..=7usize {
        for b in a + 1..=7 {
            let prod = sc.entry(a, b);
            // scalar part of D(b_a)·b_b + b_a·D(b_b) must vanish
            let mut real_row = vec![GaussSqrt2::zero(); 49];
            for k in 1..=7 {
                real_row[idx(k, a)] =
                    real_row[idx(k, a)].clone() + sc.entry(k, b).real.clone();
                real_row[idx(k, b)] =
                    real_row[idx(k, b)].clone() + sc.entry(a, k).real.clone();
            }
            rows.push(real_row);
            // imaginary coordinate m: RHS minus D applied to the product
            for m in 1..=7 {
                let mut row = vec![GaussSqrt2::zero(); 49];
                for k in 1..=7 {
                    row[idx(k, a)] = row[idx(k, a)].clone() + sc.entry(k, b).imag[m - 1].clone();
                    row[idx(k, b)] = row[idx(k, b)].clone() + sc.entry(a, k).imag[m - 1].clone();
                }
                for j in 1..=7 {
                    if !prod.imag[j - 1].is_zero() {
                        row[idx(m, j)] = row[idx(m, j)].clone() - prod.imag[j - 1].clone();
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(rows);
    let basis_maps = system
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zero(7, 7);
            for k in 1..=7 {
                for j in 1..=7 {
                    *m.at_mut(k - 1, j - 1) = v[idx(k, j)].clone();
                }
            }
            m
        })
        .collect();
    DerivationAlgebra { basis: sc.basis(), basis_maps }
}

impl DerivationAlgebra {
    pub fn dimension(&self) -> usize {
        self.basis_maps.len()
    }

    fn apply(&self, map: &Matrix<GaussSqrt2>, x: &Octonion) -> Octonion {
        // derivations kill the scalar part
        let coords = map.mul_vec(x.coords.as_ref());
        Octonion {
            real: GaussSqrt2::zero(),
            coords: std::array::from_fn(|k| coords[k].clone()),
            basis: x.basis,
        }
    }

    /// Checks the Leibniz identity for every basis map on all 49 ordered
    /// basis pairs, through the actual product.
    pub fn leibniz_holds(&self) -> Result<()> {
        for (n, map) in self.basis_maps.iter().enumerate() {
            for a in 1..=7 {
                for b in 1..=7 {
                    let x = Octonion::basis_vector(self.basis, a);
                    let y = Octonion::basis_vector(self.basis, b);
                    let lhs = self.apply(map, &x.multiply(&y)?);
                    let rhs = self.apply(map, &x).multiply(&y)?.add(&x.multiply(&self.apply(map, &y))?)?;
                    if lhs != rhs {
                        return Err(Error::InternalArithmetic(format!(
                            "basis derivation {n} violates Leibniz on pair ({a}, {b})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn flatten(m: &Matrix<GaussSqrt2>) -> Vec<GaussSqrt2> {
        let mut v = Vec::with_capacity(49);
        for r in 0..7 {
            for c in 0..7 {
                v.push(m.at(r, c).clone());
            }
        }
        v
    }

    /// Column matrix of the flattened basis maps, 49 × dim.
    fn span_matrix(&self) -> Matrix<GaussSqrt2> {
        let mut span = Matrix::zero(49, self.basis_maps.len());
        for (c, m) in self.basis_maps.iter().enumerate() {
            for (r, x) in Self::flatten(m).into_iter().enumerate() {
                *span.at_mut(r, c) = x;
            }
        }
        span
    }

    /// True when [D_i, D_j] lies back in the span for all pairs, so the
    /// solution space is a Lie algebra.
    pub fn closed_under_bracket(&self) -> bool {
        let span = self.span_matrix();
        for i in 0..self.basis_maps.len() {
            for j in i + 1..self.basis_maps.len() {
                let a = &self.basis_maps[i];
                let b = &self.basis_maps[j];
                let mut bracket = a.mul_mat(b);
                let ba = b.mul_mat(a);
                for r in 0..7 {
                    for c in 0..7 {
                        *bracket.at_mut(r, c) = bracket.at(r, c).clone() - ba.at(r, c).clone();
                    }
                }
                if !span.spans(&Self::flatten(&bracket)) {
                    return false;
                }
            }
        }
        true
    }

    /// Subalgebra of derivations mapping each listed coordinate subspace into
    /// itself. Subspaces are given as 1-based basis positions. An empty list
    /// returns the full algebra.
    pub fn stabilizer_subalgebra(&self, subspaces: &[Vec<usize>]) -> DerivationAlgebra {
        let dim = self.basis_maps.len();
        // constraint per (j in W, k outside W): Σ_i t_i M_i[k][j] = 0
        let mut rows: Vec<Vec<GaussSqrt2>> = Vec::new();
        for w in subspaces {
            for &j in w {
                for k in 1..=7 {
                    if w.contains(&k) {
                        continue;
                    }
                    let row: Vec<GaussSqrt2> = self
                        .basis_maps
                        .iter()
                        .map(|m| m.at(k - 1, j - 1).clone())
                        .collect();
                    if row.iter().all(GaussSqrt2::is_zero) {
                        continue;
                    }
                    rows.push(row);
                }
            }
        }
        let coeffs = if rows.is_empty() {
            (0..dim)
                .map(|i| {
                    let mut v = vec![GaussSqrt2::zero(); dim];
                    v[i] = GaussSqrt2::one();
                    v
                })
                .collect::<Vec<_>>()
        } else {
            Matrix::from_rows(rows).nullspace()
        };
        let basis_maps = coeffs
            .into_iter()
            .map(|t| {
                let mut m: Matrix<GaussSqrt2> = Matrix::zero(7, 7);
                for (i, c) in t.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for r in 0..7 {
                        for col in 0..7 {
                            *m.at_mut(r, col) = m.at(r, col).clone()
                                + c.clone() * self.basis_maps[i].at(r, col).clone();
                        }
                    }
                }
                m
            })
            .collect();
        DerivationAlgebra { basis: self.basis, basis_maps }
    }
}
