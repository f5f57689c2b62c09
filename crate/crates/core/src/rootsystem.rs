//! Root-system data for types A_n and G2: exact inner products of roots and
//! weights, Weyl dimension formula, and Dynkin index.
//!
//! All roots and weights carry coordinates over the simple roots; the inner
//! product normalizes long roots to squared length 2.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::numfield::Rational;

/// Supported simple Lie algebra types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AlgebraType {
    /// A_n = sl(n+1), n ≥ 1
    A(usize),
    G2,
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraType::A(n) => write!(f, "A{n}"),
            AlgebraType::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for AlgebraType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "G2" {
            return Ok(AlgebraType::G2);
        }
        if let Some(n) = s.strip_prefix('A') {
            let n: usize = n
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("unrecognized algebra {s:?}")))?;
            if n >= 1 {
                return Ok(AlgebraType::A(n));
            }
        }
        Err(Error::InvalidArgument(format!(
            "unrecognized algebra {s:?} (expected A<n> with n >= 1, or G2)"
        )))
    }
}

/// Weight in simple-root coordinates, tagged with its root system.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Weight {
    pub algebra: AlgebraType,
    pub coords: Vec<Rational>,
}

impl Weight {
    pub fn add(&self, rhs: &Weight) -> Result<Weight> {
        if self.algebra != rhs.algebra {
            return Err(Error::SystemMismatch);
        }
        Ok(Weight {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

/// Complete exact data of a root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub algebra: AlgebraType,
    pub rank: usize,
    /// Gram matrix ⟨α_i, α_j⟩ of the simple roots.
    pub gram_simple: Matrix<Rational>,
    /// Positive roots in simple-root coordinates.
    pub positive_roots: Vec<Vec<Rational>>,
    /// Half-sum of positive roots, equals the sum of fundamental weights.
    pub rho: Weight,
    /// Fundamental weights in simple-root coordinates, row i = ϖ_{i+1}.
    pub fundamental: Matrix<Rational>,
    /// Highest root θ in simple-root coordinates.
    pub theta: Vec<Rational>,
    pub dual_coxeter: u64,
    /// Order of the center P/Q.
    pub center_order: u64,
    /// Index of the long-root lattice, #(Q/Q_lg).
    pub long_index: u64,
}

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

impl RootSystem {
    pub fn new(algebra: AlgebraType) -> Result<Self> {
        match algebra {
            AlgebraType::A(n) => Self::type_a(n),
            AlgebraType::G2 => Self::type_g2(),
        }
    }

    fn type_a(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("A0 is not a root system".into()));
        }
        // all roots long: the Gram matrix is the Cartan matrix
        let mut gram = Matrix::zero(n, n);
        for i in 0..n {
            *gram.at_mut(i, i) = r(2);
            if i + 1 < n {
                *gram.at_mut(i, i + 1) = r(-1);
                *gram.at_mut(i + 1, i) = r(-1);
            }
        }
        let mut positive_roots = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut root = vec![Rational::zero(); n];
                for c in root.iter_mut().take(j + 1).skip(i) {
                    *c = Rational::one();
                }
                positive_roots.push(root);
            }
        }
        let theta = vec![Rational::one(); n];
        Self::finish(
            AlgebraType::A(n),
            gram,
            positive_roots,
            theta,
            (n as u64) + 1,
            (n as u64) + 1,
            1,
        )
    }

    fn type_g2() -> Result<Self> {
        // α1 short (length² 2/3), α2 long
        let gram = Matrix::from_rows(vec![
            vec![Rational::new(2, 3)?, r(-1)],
            vec![r(-1), r(2)],
        ]);
        let positive_roots = vec![
            vec![r(1), r(0)],
            vec![r(0), r(1)],
            vec![r(1), r(1)],
            vec![r(2), r(1)],
            vec![r(3), r(1)],
            vec![r(3), r(2)],
        ];
        let theta = vec![r(3), r(2)];
        Self::finish(AlgebraType::G2, gram, positive_roots, theta, 4, 1, 3)
    }

    fn finish(
        algebra: AlgebraType,
        gram: Matrix<Rational>,
        positive_roots: Vec<Vec<Rational>>,
        theta: Vec<Rational>,
        dual_coxeter: u64,
        center_order: u64,
        long_index: u64,
    ) -> Result<Self> {
        let rank = gram.rows;
        // ϖ_i = Σ_j c_ij α_j with C·G = diag(⟨α_j,α_j⟩/2)
        let inv = gram
            .inverse()
            .ok_or_else(|| Error::InternalArithmetic("singular Gram matrix".into()))?;
        let half = Rational::new(1, 2)?;
        let mut fundamental = Matrix::zero(rank, rank);
        for i in 0..rank {
            let norm_half = gram.at(i, i) * &half;
            for j in 0..rank {
                *fundamental.at_mut(i, j) = &norm_half * inv.at(i, j);
            }
        }
        let mut rho_coords = vec![Rational::zero(); rank];
        for i in 0..rank {
            for (j, c) in rho_coords.iter_mut().enumerate() {
                *c += fundamental.at(i, j);
            }
        }
        Ok(RootSystem {
            algebra,
            rank,
            gram_simple: gram,
            positive_roots,
            rho: Weight { algebra, coords: rho_coords },
            fundamental,
            theta,
            dual_coxeter,
            center_order,
            long_index,
        })
    }

    /// Inner product of two vectors in simple-root coordinates.
    pub fn pairing_coords(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let gy = self.gram_simple.mul_vec(y);
        let mut acc = Rational::zero();
        for (a, b) in x.iter().zip(&gy) {
            acc += &(a * b);
        }
        acc
    }

    pub fn pairing(&self, x: &Weight, y: &Weight) -> Result<Rational> {
        if x.algebra != self.algebra || y.algebra != self.algebra {
            return Err(Error::SystemMismatch);
        }
        Ok(self.pairing_coords(&x.coords, &y.coords))
    }

    /// Weight with the given fundamental-weight coefficients.
    pub fn weight_from_fundamental(&self, coeffs: &[i64]) -> Result<Weight> {
        if coeffs.len() != self.rank {
            return Err(Error::InvalidArgument(format!(
                "expected {} fundamental coefficients, got {}",
                self.rank,
                coeffs.len()
            )));
        }
        let mut coords = vec![Rational::zero(); self.rank];
        for (i, &m) in coeffs.iter().enumerate() {
            let m = r(m);
            for (j, c) in coords.iter_mut().enumerate() {
                *c += &(&m * self.fundamental.at(i, j));
            }
        }
        Ok(Weight { algebra: self.algebra, coords })
    }

    /// Coefficients over the fundamental weights, exact.
    pub fn fundamental_coords(&self, w: &Weight) -> Result<Vec<Rational>> {
        if w.algebra != self.algebra {
            return Err(Error::SystemMismatch);
        }
        // coords = m · C, so m = coords · C⁻¹
        let inv = self
            .fundamental
            .inverse()
            .ok_or_else(|| Error::InternalArithmetic("singular weight matrix".into()))?;
        Ok((0..self.rank)
            .map(|j| {
                let mut acc = Rational::zero();
                for (i, c) in w.coords.iter().enumerate() {
                    acc += &(c * inv.at(i, j));
                }
                acc
            })
            .collect())
    }

    pub fn zero_weight(&self) -> Weight {
        Weight { algebra: self.algebra, coords: vec![Rational::zero(); self.rank] }
    }

    pub fn is_dominant(&self, w: &Weight) -> Result<bool> {
        Ok(self
            .fundamental_coords(w)?
            .iter()
            .all(|c| !c.is_negative()))
    }

    /// Dimension of the adjoint representation.
    pub fn lie_dimension(&self) -> u64 {
        self.rank as u64 + 2 * self.positive_roots.len() as u64
    }

    /// Weyl dimension formula: Π_{α>0} ⟨α, λ+ρ⟩ / ⟨α, ρ⟩ for dominant λ.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<Rational> {
        if !self.is_dominant(lambda)? {
            return Err(Error::NonDominantWeight);
        }
        let shifted = lambda.add(&self.rho)?;
        let mut dim = Rational::one();
        for alpha in &self.positive_roots {
            let num = self.pairing_coords(alpha, &shifted.coords);
            let den = self.pairing_coords(alpha, &self.rho.coords);
            dim *= &num.checked_div(&den)?;
        }
        Ok(dim)
    }

    /// Dynkin index of the irreducible with highest weight λ:
    /// dim V_λ · ⟨λ, λ+2ρ⟩ / dim g.
    pub fn dynkin_index(&self, lambda: &Weight) -> Result<Rational> {
        let dim = self.weyl_dim(lambda)?;
        let two_rho = Weight {
            algebra: self.algebra,
            coords: self.rho.coords.iter().map(|c| c * &r(2)).collect(),
        };
        let shifted = lambda.add(&two_rho)?;
        let casimir = self.pairing(lambda, &shifted)?;
        (&dim * &casimir).checked_div(&Rational::from_int(self.lie_dimension() as i64))
    }

    /// Level of a weight: ⟨λ, θ⟩, with θ^∨ = θ for the long highest root.
    pub fn level_of(&self, w: &Weight) -> Result<Rational> {
        if w.algebra != self.algebra {
            return Err(Error::SystemMismatch);
        }
        Ok(self.pairing_coords(&w.coords, &self.theta))
    }
}
