//! Alternating 3-forms with exact coefficients, the Engel pairing
//! B(x,y) = (ι_x ω) ∧ (ι_y ω) ∧ ω, and its nondegeneracy test.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::numfield::GaussSqrt2;
use crate::octonion::{trilinear_omega, BasisId, Octonion};

/// Alternating trilinear form on an n-dimensional space, stored as
/// coefficients on sorted index triples (1-based).
#[derive(Clone, Debug, PartialEq)]
pub struct AlternatingForm3 {
    dim: usize,
    coeffs: BTreeMap<[usize; 3], GaussSqrt2>,
}

/// Sorts a triple, returning the sorted triple and the permutation sign.
/// None when an index repeats.
fn sort_triple(i: usize, j: usize, k: usize) -> Option<([usize; 3], i8)> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut t = [i, j, k];
    let mut sign = 1i8;
    // three-element bubble sort, counting swaps
    for _ in 0..2 {
        for p in 0..2 {
            if t[p] > t[p + 1] {
                t.swap(p, p + 1);
                sign = -sign;
            }
        }
    }
    Some((t, sign))
}

/// Sign of a sequence of distinct indices as a permutation of 1..=n.
fn signature(seq: &[usize]) -> i8 {
    let mut sign = 1i8;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] > seq[b] {
                sign = -sign;
            }
        }
    }
    sign
}

impl AlternatingForm3 {
    pub fn new(dim: usize) -> Self {
        AlternatingForm3 { dim, coeffs: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets the coefficient on a triple, normalizing order and sign.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: GaussSqrt2) -> Result<()> {
        if i > self.dim || j > self.dim || k > self.dim || i == 0 || j == 0 || k == 0 {
            return Err(Error::InvalidArgument(format!(
                "triple ({i}, {j}, {k}) out of range for dimension {}",
                self.dim
            )));
        }
        let Some((t, sign)) = sort_triple(i, j, k) else {
            if value.is_zero() {
                return Ok(());
            }
            return Err(Error::NonAlternating(i, j, k));
        };
        let v = if sign < 0 { -value } else { value };
        if v.is_zero() {
            self.coeffs.remove(&t);
        } else {
            self.coeffs.insert(t, v);
        }
        Ok(())
    }

    /// Value on ordered arguments, with the alternating sign.
    pub fn evaluate(&self, i: usize, j: usize, k: usize) -> GaussSqrt2 {
        match sort_triple(i, j, k) {
            None => GaussSqrt2::zero(),
            Some((t, sign)) => {
                let v = self.coeffs.get(&t).cloned().unwrap_or_else(GaussSqrt2::zero);
                if sign < 0 {
                    -v
                } else {
                    v
                }
            }
        }
    }

    /// Sorted triples with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = (&[usize; 3], &GaussSqrt2)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, c: &GaussSqrt2) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .filter_map(|(t, v)| {
                let w = v.clone() * c.clone();
                (!w.is_zero()).then_some((*t, w))
            })
            .collect();
        AlternatingForm3 { dim: self.dim, coeffs }
    }

    /// Copy with every triple containing the given index removed. Restriction
    /// fixture for degeneracy tests.
    pub fn drop_triples_containing(&self, idx: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(t, _)| !t.contains(&idx))
            .map(|(t, v)| (*t, v.clone()))
            .collect();
        AlternatingForm3 { dim: self.dim, coeffs }
    }

    /// The octonion form ω(x,y,z) = −Re[(xy)z] on the imaginary basis of the
    /// given basis, checked to be alternating on all 343 ordered triples.
    pub fn from_octonion_omega(basis: BasisId) -> Result<Self> {
        let e = |k: usize| Octonion::basis_vector(basis, k);
        let mut form = AlternatingForm3::new(7);
        for i in 1..=7usize {
            for j in i + 1..=7 {
                for k in j + 1..=7 {
                    let v = trilinear_omega(&e(i), &e(j), &e(k))?;
                    form.set(i, j, k, v)?;
                }
            }
        }
        for i in 1..=7usize {
            for j in 1..=7 {
                for k in 1..=7 {
                    let v = trilinear_omega(&e(i), &e(j), &e(k))?;
                    if v != form.evaluate(i, j, k) {
                        return Err(Error::NonAlternating(i, j, k));
                    }
                }
            }
        }
        Ok(form)
    }

    /// ι_x ω for x the idx-th basis vector, as sorted-pair coefficients.
    fn contract(&self, idx: usize) -> BTreeMap<[usize; 2], GaussSqrt2> {
        let mut out: BTreeMap<[usize; 2], GaussSqrt2> = BTreeMap::new();
        for (t, v) in &self.coeffs {
            for pos in 0..3 {
                if t[pos] != idx {
                    continue;
                }
                let rest: Vec<usize> = (0..3).filter(|&p| p != pos).map(|p| t[p]).collect();
                let signed = if pos == 1 { -v.clone() } else { v.clone() };
                let key = [rest[0], rest[1]];
                let entry = out.entry(key).or_insert_with(GaussSqrt2::zero);
                *entry = entry.clone() + signed;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Coefficient of e¹∧…∧e⁷ in α ∧ β ∧ ω for 2-forms α, β on sorted pairs.
    fn wedge_coefficient(
        &self,
        alpha: &BTreeMap<[usize; 2], GaussSqrt2>,
        beta: &BTreeMap<[usize; 2], GaussSqrt2>,
    ) -> GaussSqrt2 {
        let mut total = GaussSqrt2::zero();
        for ([i, j], va) in alpha {
            for ([k, l], vb) in beta {
                if i == k || i == l || j == k || j == l {
                    continue;
                }
                for ([p, q, r], vc) in &self.coeffs {
                    let seq = [*i, *j, *k, *l, *p, *q, *r];
                    let mut seen = [false; 8];
                    if seq.iter().any(|&x| std::mem::replace(&mut seen[x], true)) {
                        continue;
                    }
                    let term = va.clone() * vb.clone() * vc.clone();
                    total = if signature(&seq) < 0 { total - term } else { total + term };
                }
            }
        }
        total
    }

    /// The symmetric pairing B(x,y) = (ι_x ω) ∧ (ι_y ω) ∧ ω as a 7×7 Gram
    /// matrix on the basis vectors. Defined for dimension 7.
    pub fn engel_pairing(&self) -> Result<Matrix<GaussSqrt2>> {
        if self.dim != 7 {
            return Err(Error::InvalidArgument(format!(
                "Engel pairing needs dimension 7, got {}",
                self.dim
            )));
        }
        let contractions: Vec<_> = (1..=7).map(|a| self.contract(a)).collect();
        let mut b = Matrix::zero(7, 7);
        for x in 0..7 {
            for y in x..7 {
                let v = self.wedge_coefficient(&contractions[x], &contractions[y]);
                *b.at_mut(x, y) = v.clone();
                *b.at_mut(y, x) = v;
            }
        }
        Ok(b)
    }

    /// Nondegeneracy of the Engel pairing, by exact determinant.
    pub fn is_nondegenerate(&self) -> Result<bool> {
        Ok(!self.engel_pairing()?.det().is_zero())
    }

    /// JSON export as a sorted-triple list.
    pub fn export_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Triple<'a> {
            i: usize,
            j: usize,
            k: usize,
            value: &'a GaussSqrt2,
        }
        let triples: Vec<Triple> = self
            .coeffs
            .iter()
            .map(|(t, v)| Triple { i: t[0], j: t[1], k: t[2], value: v })
            .collect();
        serde_json::json!({
            "dim": self.dim,
            "triples": triples,
        })
    }
}
