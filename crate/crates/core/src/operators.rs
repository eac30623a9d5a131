//! First-order differential operators on constant-coefficient fields:
//! Lie derivative of the metric, divergence, exterior derivative of
//! 1-forms, Hessian of a gradient, and covariant derivatives of (1,1)
//! tensors.

use num_traits::Zero;

use crate::connection::Connection;
use crate::error::Result;
use crate::frame::{apply, FrameManifold, VectorField};
use crate::scalar::Rational;
use crate::tensor::{Tensor, Variance, DIM};

/// `(£_Z g)(e_i, e_j) = g(∇_{e_i} Z, e_j) + g(∇_{e_j} Z, e_i)`.
pub fn lie_derivative_metric(m: &FrameManifold, conn: &Connection, z: &VectorField) -> Tensor {
    let nabla_z: Vec<VectorField> =
        (0..DIM).map(|i| conn.covariant_derivative(&VectorField::basis(i), z)).collect();
    Tensor::covariant(2, |ij| {
        let (i, j) = (ij[0], ij[1]);
        m.inner(&nabla_z[i], &VectorField::basis(j)) + m.inner(&nabla_z[j], &VectorField::basis(i))
    })
}

/// `div Z = trace(X ↦ ∇_X Z)`.
pub fn divergence(conn: &Connection, z: &VectorField) -> Rational {
    (0..DIM)
        .map(|i| conn.covariant_derivative(&VectorField::basis(i), z).0[i].clone())
        .sum()
}

/// `dω(e_i, e_j) = ½(e_i ω(e_j) - e_j ω(e_i) - ω([e_i, e_j])) = -½ ω([e_i, e_j])`.
pub fn exterior_derivative_1form(m: &FrameManifold, omega: &Tensor) -> Result<Tensor> {
    omega.require_valence(1, 0)?;
    let half = Rational::new(1.into(), 2.into());
    Ok(Tensor::covariant(2, |ij| {
        let s: Rational =
            (0..DIM).map(|k| m.structure_constant(ij[0], ij[1], k) * &omega[[k]]).sum();
        -(&half * s)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hessian {
    /// `Hess(e_i, e_j) = g(∇_{e_i} V, e_j)`; may be asymmetric when `closed` is false.
    pub tensor: Tensor,
    /// Whether `d(V♭) = 0`, i.e. `V` is locally a gradient.
    pub closed: bool,
}

pub fn hessian_from_gradient(m: &FrameManifold, conn: &Connection, v: &VectorField) -> Hessian {
    let nabla_v: Vec<VectorField> =
        (0..DIM).map(|i| conn.covariant_derivative(&VectorField::basis(i), v)).collect();
    let tensor = Tensor::covariant(2, |ij| m.inner(&nabla_v[ij[0]], &VectorField::basis(ij[1])));
    let closed = exterior_derivative_1form(m, &m.flat(v)).map(|d| d.is_zero()).unwrap_or(false);
    Hessian { tensor, closed }
}

/// `(∇_X T)(Y) = ∇_X(TY) - T(∇_X Y)` for a (1,1) tensor `T` with constant
/// frame components.
pub fn covariant_derivative_operator(
    conn: &Connection,
    t: &Tensor,
    direction: &VectorField,
) -> Result<Tensor> {
    t.require_valence(1, 1)?;
    let t = if t.slots() == [Variance::Down, Variance::Up] { t.clone() } else { t.transpose() };
    let columns: Vec<VectorField> = (0..DIM)
        .map(|j| {
            let y = VectorField::basis(j);
            let first = conn.covariant_derivative(direction, &apply(&t, &y));
            let second = apply(&t, &conn.covariant_derivative(direction, &y));
            &first - &second
        })
        .collect();
    Ok(Tensor::from_fn(&[Variance::Down, Variance::Up], |i| columns[i[0]].0[i[1]].clone()))
}

/// `(∇_X ω)(Y) = X(ω(Y)) - ω(∇_X Y) = -ω(∇_X Y)` for a constant 1-form.
pub fn covariant_derivative_1form(conn: &Connection, omega: &Tensor, x: &VectorField, y: &VectorField) -> Rational {
    let d = conn.covariant_derivative(x, y);
    -(0..DIM).map(|k| &d.0[k] * &omega[[k]]).fold(Rational::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connection::koszul_connection;
    use crate::fixtures;
    use crate::scalar::{frac, int};

    fn diag(a: i64, b: i64, c: i64) -> Tensor {
        Tensor::covariant(2, |ij| {
            if ij[0] != ij[1] {
                int(0)
            } else {
                int([a, b, c][ij[0]])
            }
        })
    }

    #[test]
    fn lie_derivative_examples() {
        let h = fixtures::hyp3();
        let e3 = VectorField::basis(2);
        assert_eq!(lie_derivative_metric(&h, &koszul_connection(&h), &e3), diag(-2, -2, 0));
        let f = fixtures::flat3();
        assert!(lie_derivative_metric(&f, &koszul_connection(&f), &e3).is_zero());
        let s = fixtures::su2();
        assert!(lie_derivative_metric(&s, &koszul_connection(&s), &e3).is_zero());
    }

    #[test]
    fn divergence_examples() {
        let e3 = VectorField::basis(2);
        assert_eq!(divergence(&koszul_connection(&fixtures::hyp3()), &e3), int(-2));
        assert_eq!(divergence(&koszul_connection(&fixtures::su2()), &e3), int(0));
        let z = VectorField([frac(1, 3), int(-7), int(2)]);
        assert_eq!(divergence(&koszul_connection(&fixtures::flat3()), &z), int(0));
    }

    #[test]
    fn exterior_derivative_examples() {
        let h = fixtures::hyp3();
        let eta = h.flat(&VectorField::basis(2));
        assert!(exterior_derivative_1form(&h, &eta).unwrap().is_zero());

        let s = fixtures::su2();
        let d = exterior_derivative_1form(&s, &s.flat(&VectorField::basis(2))).unwrap();
        assert_eq!(d[[0, 1]], int(-1));
        assert_eq!(d[[1, 0]], int(1));

        let zero = Tensor::covariant(1, |_| int(0));
        assert!(exterior_derivative_1form(&s, &zero).unwrap().is_zero());
        assert!(exterior_derivative_1form(&s, &Tensor::identity()).is_err());
    }

    #[test]
    fn hessian_examples() {
        let h = fixtures::hyp3();
        let hess = hessian_from_gradient(&h, &koszul_connection(&h), &VectorField::basis(2));
        assert_eq!(hess.tensor, diag(-1, -1, 0));
        assert!(hess.closed);

        let zero = hessian_from_gradient(&h, &koszul_connection(&h), &VectorField::zero());
        assert!(zero.tensor.is_zero() && zero.closed);

        let s = fixtures::su2();
        let hess = hessian_from_gradient(&s, &koszul_connection(&s), &VectorField::basis(2));
        assert!(!hess.closed);
        assert!(!hess.tensor.is_symmetric());
    }

    #[test]
    fn covariant_derivative_examples() {
        let h = fixtures::hyp3();
        let conn = koszul_connection(&h);
        let q = Tensor::identity().scale(&int(-2));
        for i in 0..3 {
            assert!(covariant_derivative_operator(&conn, &q, &VectorField::basis(i)).unwrap().is_zero());
        }
        let phi = fixtures::hyp3_structure(&h).phi().clone();
        let d = covariant_derivative_operator(&conn, &phi, &VectorField::basis(0)).unwrap();
        // (∇_{e1} φ)(e3) = -e2
        assert_eq!(apply(&d, &VectorField::basis(2)), VectorField([int(0), int(-1), int(0)]));

        let f = fixtures::flat3();
        let t = Tensor::from_fn(&[Variance::Down, Variance::Up], |i| int((i[0] * 3 + i[1]) as i64));
        let d = covariant_derivative_operator(&koszul_connection(&f), &t, &VectorField::basis(1)).unwrap();
        assert!(d.is_zero());
    }
}
