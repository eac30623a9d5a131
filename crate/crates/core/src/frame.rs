//! Frames with constant structure constants and a constant metric.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, Rational};
use crate::tensor::{Tensor, Variance, DIM};

pub type Matrix3 = [[Rational; DIM]; DIM];

/// One user-supplied bracket `[e_i, e_j] = Σ_k coeffs[k] e_k`, indices 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub coeffs: [Rational; DIM],
}

impl Bracket {
    pub fn new(i: usize, j: usize, coeffs: [Rational; DIM]) -> Self {
        Self { i, j, coeffs }
    }
}

/// A vector field with constant frame components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VectorField(pub [Rational; DIM]);

impl VectorField {
    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| Rational::zero()))
    }

    /// The frame vector `e_{i+1}` (0-based `i`).
    pub fn basis(i: usize) -> Self {
        Self(std::array::from_fn(|k| if k == i { Rational::one() } else { Rational::zero() }))
    }

    pub fn from_fn(f: impl FnMut(usize) -> Rational) -> Self {
        Self(std::array::from_fn(f))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_fn(|i| &self.0[i] * k)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn components(&self) -> &[Rational; DIM] {
        &self.0
    }
}

impl Add for &VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        VectorField::from_fn(|i| &self.0[i] + &rhs.0[i])
    }
}

impl Sub for &VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        VectorField::from_fn(|i| &self.0[i] - &rhs.0[i])
    }
}

impl Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        VectorField::from_fn(|i| -&self.0[i])
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A 3-dimensional frame `e_1, e_2, e_3` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`
/// and constant metric coefficients `g_ij = g(e_i, e_j)`.
///
/// Immutable once built; the inverse metric is computed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameManifold {
    structure: [[[Rational; DIM]; DIM]; DIM],
    metric: Matrix3,
    inverse_metric: Matrix3,
}

/// Builds and validates a frame manifold.
///
/// Only one of `[e_i,e_j]` and `[e_j,e_i]` may be given; the other follows
/// by antisymmetry. `metric` defaults to the identity.
pub fn build_manifold(brackets: &[Bracket], metric: Option<Matrix3>) -> Result<FrameManifold> {
    let mut structure: [[[Rational; DIM]; DIM]; DIM] =
        std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())));
    let mut seen = [[false; DIM]; DIM];
    for b in brackets {
        for idx in [b.i, b.j] {
            if !(1..=DIM).contains(&idx) {
                return Err(Error::BadIndex(idx));
            }
        }
        let (i, j) = (b.i - 1, b.j - 1);
        if seen[i][j] || seen[j][i] {
            return Err(Error::DuplicateBracket(b.i, b.j));
        }
        seen[i][j] = true;
        if i == j {
            // [e_i, e_i] = 0; only an all-zero entry is consistent.
            if b.coeffs.iter().any(|c| !c.is_zero()) {
                return Err(Error::JacobiViolation(b.i, b.j, b.i));
            }
            continue;
        }
        for k in 0..DIM {
            structure[i][j][k] = b.coeffs[k].clone();
            structure[j][i][k] = -&b.coeffs[k];
        }
    }
    let metric = metric.unwrap_or_else(identity_matrix);
    let inverse_metric = spd_inverse(&metric).ok_or(Error::MetricNotSpd)?;
    let m = FrameManifold { structure, metric, inverse_metric };
    if let Some((i, j, k)) = m.jacobi_violation() {
        return Err(Error::JacobiViolation(i + 1, j + 1, k + 1));
    }
    Ok(m)
}

impl FrameManifold {
    /// `c[i][j][k]`, 0-based.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.structure[i][j][k]
    }

    pub fn metric(&self) -> &Matrix3 {
        &self.metric
    }

    pub fn inverse_metric(&self) -> &Matrix3 {
        &self.inverse_metric
    }

    /// `g` as a (0,2) tensor.
    pub fn metric_tensor(&self) -> Tensor {
        Tensor::covariant(2, |i| self.metric[i[0]][i[1]].clone())
    }

    /// `[e_i, e_j]` as a vector field.
    pub fn frame_bracket(&self, i: usize, j: usize) -> VectorField {
        VectorField::from_fn(|k| self.structure[i][j][k].clone())
    }

    /// Bracket of two constant-coefficient fields.
    pub fn bracket(&self, x: &VectorField, y: &VectorField) -> VectorField {
        let mut out = VectorField::zero();
        for i in 0..DIM {
            if x.0[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y.0[j].is_zero() {
                    continue;
                }
                let w = &x.0[i] * &y.0[j];
                for k in 0..DIM {
                    out.0[k] += &w * &self.structure[i][j][k];
                }
            }
        }
        out
    }

    pub fn inner(&self, x: &VectorField, y: &VectorField) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                acc += &x.0[i] * &self.metric[i][j] * &y.0[j];
            }
        }
        acc
    }

    /// The metric dual 1-form `X♭ = g(X, ·)`, as a (0,1) tensor.
    pub fn flat(&self, x: &VectorField) -> Tensor {
        Tensor::covariant(1, |k| self.inner(x, &VectorField::basis(k[0])))
    }

    /// The vector `ω♯` with `g(ω♯, ·) = ω`.
    pub fn sharp(&self, omega: &Tensor) -> VectorField {
        VectorField::from_fn(|k| {
            (0..DIM).map(|j| &self.inverse_metric[k][j] * &omega[[j]]).sum()
        })
    }

    /// First index triple at which the cyclic Jacobi sum is nonzero.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let e = VectorField::basis;
                    let a = self.bracket(&self.frame_bracket(i, j), &e(k));
                    let b = self.bracket(&self.frame_bracket(j, k), &e(i));
                    let c = self.bracket(&self.frame_bracket(k, i), &e(j));
                    if !(&(&a + &b) + &c).is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

/// `T(X)` for a (1,1) tensor stored as `[Down, Up]`.
pub fn apply(t: &Tensor, x: &VectorField) -> VectorField {
    assert_eq!(t.slots(), &[Variance::Down, Variance::Up]);
    VectorField::from_fn(|k| (0..DIM).map(|j| &x.0[j] * &t[[j, k]]).sum())
}

pub fn identity_matrix() -> Matrix3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() })
    })
}

/// Exact inverse of a symmetric matrix, or `None` unless it is positive
/// definite (Sylvester: all leading principal minors positive).
fn spd_inverse(a: &Matrix3) -> Option<Matrix3> {
    for i in 0..DIM {
        for j in 0..DIM {
            if a[i][j] != a[j][i] {
                return None;
            }
        }
    }
    let minor1 = a[0][0].clone();
    let minor2 = &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0];
    let minor3 = det3(a);
    if minor1 <= Rational::zero() || minor2 <= Rational::zero() || minor3 <= Rational::zero() {
        return None;
    }
    gauss_jordan_inverse(a)
}

fn det3(a: &Matrix3) -> Rational {
    &a[0][0] * (&a[1][1] * &a[2][2] - &a[1][2] * &a[2][1])
        - &a[0][1] * (&a[1][0] * &a[2][2] - &a[1][2] * &a[2][0])
        + &a[0][2] * (&a[1][0] * &a[2][1] - &a[1][1] * &a[2][0])
}

fn gauss_jordan_inverse(a: &Matrix3) -> Option<Matrix3> {
    let mut m: Vec<Vec<Rational>> = (0..DIM)
        .map(|i| {
            let mut row = a[i].to_vec();
            row.extend((0..DIM).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for col in 0..DIM {
        let pivot = (col..DIM).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..DIM {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(std::array::from_fn(|i| std::array::from_fn(|j| m[i][DIM + j].clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::{frac, int};

    fn v(a: i64, b: i64, c: i64) -> [Rational; 3] {
        [int(a), int(b), int(c)]
    }

    #[test]
    fn hyp3_builds_with_completed_antisymmetry() {
        let m = fixtures::hyp3();
        assert_eq!(*m.structure_constant(0, 2, 0), int(-1));
        assert_eq!(*m.structure_constant(2, 0, 0), int(1));
        assert_eq!(*m.structure_constant(1, 2, 1), int(-1));
        assert_eq!(*m.structure_constant(2, 1, 1), int(1));
        assert_eq!(m.frame_bracket(0, 1), VectorField::zero());
    }

    #[test]
    fn flat_and_su2_build() {
        let flat = build_manifold(&[], None).unwrap();
        assert!(flat.jacobi_violation().is_none());
        let su2 = fixtures::su2();
        assert_eq!(su2.frame_bracket(2, 0), VectorField(v(0, 2, 0)));
        assert_eq!(su2.frame_bracket(0, 2), VectorField(v(0, -2, 0)));
    }

    #[test]
    fn jacobi_violation_detected() {
        // [e1,e2] = e3, [e1,e3] = e1 : cyclic sum at (1,2,3) is -e3 != 0.
        let err = build_manifold(
            &[Bracket::new(1, 2, v(0, 0, 1)), Bracket::new(1, 3, v(1, 0, 0))],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::JacobiViolation(..)));
    }

    #[test]
    fn duplicate_and_bad_index() {
        let dup = build_manifold(
            &[Bracket::new(1, 2, v(0, 0, 1)), Bracket::new(2, 1, v(0, 0, -1))],
            None,
        );
        assert_eq!(dup.unwrap_err(), Error::DuplicateBracket(2, 1));
        assert_eq!(
            build_manifold(&[Bracket::new(0, 2, v(0, 0, 1))], None).unwrap_err(),
            Error::BadIndex(0)
        );
        assert_eq!(
            build_manifold(&[Bracket::new(1, 4, v(0, 0, 1))], None).unwrap_err(),
            Error::BadIndex(4)
        );
    }

    #[test]
    fn metric_must_be_spd() {
        let indefinite = [v(1, 0, 0), v(0, -1, 0), v(0, 0, 1)];
        assert_eq!(build_manifold(&[], Some(indefinite)).unwrap_err(), Error::MetricNotSpd);
        let asym = [v(1, 1, 0), v(0, 1, 0), v(0, 0, 1)];
        assert_eq!(build_manifold(&[], Some(asym)).unwrap_err(), Error::MetricNotSpd);
        let singular = [v(1, 1, 0), v(1, 1, 0), v(0, 0, 1)];
        assert_eq!(build_manifold(&[], Some(singular)).unwrap_err(), Error::MetricNotSpd);
    }

    #[test]
    fn inverse_metric_exact() {
        let g = [v(2, 1, 0), v(1, 2, 0), v(0, 0, 3)];
        let m = build_manifold(&[], Some(g.clone())).unwrap();
        let inv = m.inverse_metric();
        assert_eq!(inv[0][0], frac(2, 3));
        assert_eq!(inv[0][1], frac(-1, 3));
        assert_eq!(inv[2][2], frac(1, 3));
        for i in 0..3 {
            for j in 0..3 {
                let p: Rational = (0..3).map(|k| &g[i][k] * &inv[k][j]).sum();
                assert_eq!(p, if i == j { int(1) } else { int(0) });
            }
        }
    }

    #[test]
    fn flat_sharp_round_trip() {
        let g = [v(2, 1, 0), v(1, 2, 0), v(0, 0, 3)];
        let m = build_manifold(&[], Some(g)).unwrap();
        let x = VectorField([frac(1, 2), int(-3), int(5)]);
        assert_eq!(m.sharp(&m.flat(&x)), x);
    }
}
