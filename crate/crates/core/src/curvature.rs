//! Riemann curvature, Ricci tensor and operator, scalar curvature.
//!
//! Conventions:
//! `R(X,Y)Z = ∇_X∇_Y Z - ∇_Y∇_X Z - ∇_{[X,Y]} Z`,
//! `R(X,Y,Z,W) = g(R(X,Y)Z, W)`,
//! `S(Y,Z) = trace_g R(·,Y,Z,·)`, `S(X,Y) = g(QX, Y)`, `r = trace_g S`.

use num_traits::Zero;

use crate::connection::Connection;
use crate::error::{Error, Result};
use crate::frame::{FrameManifold, VectorField};
use crate::kn::kulkarni_nomizu;
use crate::scalar::Rational;
use crate::tensor::{tensor_contract, Tensor, Variance, DIM};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvaturePackage {
    /// Slots `[Down, Down, Down, Up]`: `[i,j,k,l]` is the `e_l` component of `R(e_i,e_j)e_k`.
    pub riemann_31: Tensor,
    /// `R(e_i, e_j, e_k, e_l)`.
    pub riemann_04: Tensor,
    pub ricci: Tensor,
    /// Slots `[Down, Up]`: `[i,j]` is the `e_j` component of `Q e_i`.
    pub ricci_operator: Tensor,
    pub scalar: Rational,
}

pub fn curvature_package(m: &FrameManifold, conn: &Connection) -> CurvaturePackage {
    let down3_up = [Variance::Down, Variance::Down, Variance::Down, Variance::Up];
    let riemann_31 = Tensor::from_fn(&down3_up, |idx| {
        let (i, j, k, n) = (idx[0], idx[1], idx[2], idx[3]);
        let mut acc = Rational::zero();
        for l in 0..DIM {
            acc += conn.gamma(j, k, l) * conn.gamma(i, l, n);
            acc -= conn.gamma(i, k, l) * conn.gamma(j, l, n);
            acc -= m.structure_constant(i, j, l) * conn.gamma(l, k, n);
        }
        acc
    });
    let g = m.metric();
    let riemann_04 = Tensor::covariant(4, |idx| {
        (0..DIM).map(|n| &riemann_31[[idx[0], idx[1], idx[2], n]] * &g[n][idx[3]]).sum()
    });
    let ricci = tensor_contract(&riemann_04, 0, 3, m).expect("rank-4 contraction");
    let ginv = m.inverse_metric();
    let ricci_operator = Tensor::from_fn(&[Variance::Down, Variance::Up], |ij| {
        (0..DIM).map(|y| &ricci[[ij[0], y]] * &ginv[y][ij[1]]).sum()
    });
    let scalar = tensor_contract(&ricci, 0, 1, m).expect("rank-2 contraction").components()[0].clone();
    CurvaturePackage { riemann_31, riemann_04, ricci, ricci_operator, scalar }
}

impl CurvaturePackage {
    /// `R(X,Y)Z`.
    pub fn apply(&self, x: &VectorField, y: &VectorField, z: &VectorField) -> VectorField {
        let mut out = VectorField::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let w = &x.0[i] * &y.0[j] * &z.0[k];
                    if w.is_zero() {
                        continue;
                    }
                    for n in 0..DIM {
                        out.0[n] += &w * &self.riemann_31[[i, j, k, n]];
                    }
                }
            }
        }
        out
    }

    /// `R(X,Y,Z,W)`.
    pub fn eval_04(&self, x: &VectorField, y: &VectorField, z: &VectorField, w: &VectorField) -> Rational {
        let mut acc = Rational::zero();
        for (i, xi) in x.0.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.0.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (k, zk) in z.0.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    for (l, wl) in w.0.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        acc += xi * yj * zk * wl * &self.riemann_04[[i, j, k, l]];
                    }
                }
            }
        }
        acc
    }

    /// `QX`.
    pub fn q(&self, x: &VectorField) -> VectorField {
        crate::frame::apply(&self.ricci_operator, x)
    }

    /// Names the first failing algebraic curvature symmetry, if any:
    /// antisymmetry in each pair, pair exchange, first Bianchi identity.
    pub fn symmetry_violation(&self) -> Option<&'static str> {
        curvature_symmetry_violation(&self.riemann_04)
    }

    /// `R(E,F)Z - [S(F,Z)E - S(E,Z)F + g(F,Z)QE - g(E,Z)QF - (r/2)(g(F,Z)E - g(E,Z)F)]`,
    /// which vanishes identically in dimension 3.
    pub fn decomposition_residual(&self, m: &FrameManifold) -> Tensor {
        let g = m.metric();
        let s = &self.ricci;
        let q = &self.ricci_operator;
        let half_r = &self.scalar / Rational::from_integer(2.into());
        let delta = |a: usize, b: usize| if a == b { Rational::from_integer(1.into()) } else { Rational::zero() };
        Tensor::from_fn(self.riemann_31.slots(), |idx| {
            let (e, f, z, n) = (idx[0], idx[1], idx[2], idx[3]);
            let model = &s[[f, z]] * delta(e, n) - &s[[e, z]] * delta(f, n)
                + &g[f][z] * &q[[e, n]]
                - &g[e][z] * &q[[f, n]]
                - &half_r * (&g[f][z] * delta(e, n) - &g[e][z] * delta(f, n));
            &self.riemann_31[[e, f, z, n]] - model
        })
    }
}

/// Checks the four algebraic symmetries of a (0,4) curvature-type tensor.
pub fn curvature_symmetry_violation(t: &Tensor) -> Option<&'static str> {
    for a in 0..DIM {
        for b in 0..DIM {
            for c in 0..DIM {
                for d in 0..DIM {
                    let v = &t[[a, b, c, d]];
                    if *v != -&t[[b, a, c, d]] {
                        return Some("antisymmetry in slots (1,2)");
                    }
                    if *v != -&t[[a, b, d, c]] {
                        return Some("antisymmetry in slots (3,4)");
                    }
                    if *v != t[[c, d, a, b]] {
                        return Some("pair exchange");
                    }
                    if !(v + &t[[b, c, a, d]] + &t[[c, a, b, d]]).is_zero() {
                        return Some("first Bianchi identity");
                    }
                }
            }
        }
    }
    None
}

/// `K(u,v) = R(u,v,v,u) / (g(u,u)g(v,v) - g(u,v)^2)`.
pub fn sectional_curvature(
    pkg: &CurvaturePackage,
    m: &FrameManifold,
    u: &VectorField,
    v: &VectorField,
) -> Result<Rational> {
    let area = m.inner(u, u) * m.inner(v, v) - m.inner(u, v) * m.inner(u, v);
    if area.is_zero() {
        return Err(Error::DegeneratePlane);
    }
    Ok(pkg.eval_04(u, v, v, u) / area)
}

/// The `k` with `R(X,Y)Z = k{g(Y,Z)X - g(X,Z)Y}`, if the curvature has that form.
pub fn constant_curvature_coefficient(pkg: &CurvaturePackage, m: &FrameManifold) -> Option<Rational> {
    let g = m.metric();
    // Template at (e1,e2,e2,e1) is g11 g22 - g12^2 > 0 for a positive-definite metric.
    let template = |a: usize, b: usize, c: usize, d: usize| &g[b][c] * &g[a][d] - &g[a][c] * &g[b][d];
    let k = &pkg.riemann_04[[0, 1, 1, 0]] / template(0, 1, 1, 0);
    let matches = (0..DIM).all(|a| {
        (0..DIM).all(|b| {
            (0..DIM).all(|c| (0..DIM).all(|d| pkg.riemann_04[[a, b, c, d]] == &k * template(a, b, c, d)))
        })
    });
    matches.then_some(k)
}

/// `R_(0,4) - (k/2) g⊗g`; zero exactly when the manifold has constant curvature `k`.
pub fn constant_curvature_residual(pkg: &CurvaturePackage, m: &FrameManifold, k: &Rational) -> Tensor {
    let g = m.metric_tensor();
    let gg = kulkarni_nomizu(&g, &g).expect("metric is symmetric");
    &pkg.riemann_04 - &gg.scale(&(k / Rational::from_integer(2.into())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connection::koszul_connection;
    use crate::fixtures;
    use crate::scalar::int;

    fn e(i: usize) -> VectorField {
        VectorField::basis(i)
    }

    fn package(m: &FrameManifold) -> CurvaturePackage {
        curvature_package(m, &koszul_connection(m))
    }

    #[test]
    fn hyp3_curvature_list() {
        let p = package(&fixtures::hyp3());
        let neg = |i| e(i).scale(&int(-1));
        let cases = [
            ((0, 1, 2), VectorField::zero()),
            ((1, 2, 2), neg(1)),
            ((0, 2, 2), neg(0)),
            ((0, 1, 1), neg(0)),
            ((1, 2, 1), e(2)),
            ((0, 2, 1), VectorField::zero()),
            ((0, 1, 0), e(1)),
            ((1, 2, 0), VectorField::zero()),
            ((0, 2, 0), e(2)),
        ];
        for ((a, b, c), want) in cases {
            assert_eq!(p.apply(&e(a), &e(b), &e(c)), want, "R(e{},e{})e{}", a + 1, b + 1, c + 1);
        }
    }

    #[test]
    fn hyp3_ricci_and_scalar() {
        let m = fixtures::hyp3();
        let p = package(&m);
        assert_eq!(p.ricci, m.metric_tensor().scale(&int(-2)));
        assert_eq!(p.ricci_operator, Tensor::identity().scale(&int(-2)));
        assert_eq!(p.scalar, int(-6));
        // single contraction entry at (F,W) = (e1,e1)
        assert_eq!(p.ricci[[0, 0]], int(-2));
    }

    #[test]
    fn flat_is_flat() {
        let p = package(&fixtures::flat3());
        assert!(p.riemann_04.is_zero() && p.ricci.is_zero() && p.scalar.is_zero());
    }

    #[test]
    fn sectional_examples() {
        let h = fixtures::hyp3();
        assert_eq!(sectional_curvature(&package(&h), &h, &e(0), &e(1)).unwrap(), int(-1));
        let s = fixtures::su2();
        assert_eq!(sectional_curvature(&package(&s), &s, &e(0), &e(1)).unwrap(), int(1));
        let f = fixtures::flat3();
        let u = VectorField([int(1), int(2), int(3)]);
        assert_eq!(sectional_curvature(&package(&f), &f, &u, &e(1)).unwrap(), int(0));
        assert_eq!(
            sectional_curvature(&package(&h), &h, &u, &u.scale(&int(-4))),
            Err(Error::DegeneratePlane)
        );
    }

    #[test]
    fn constant_curvature_examples() {
        for (m, k) in [(fixtures::hyp3(), -1), (fixtures::flat3(), 0), (fixtures::su2(), 1)] {
            let p = package(&m);
            assert_eq!(constant_curvature_coefficient(&p, &m), Some(int(k)));
            assert!(constant_curvature_residual(&p, &m, &int(k)).is_zero());
        }
    }

    #[test]
    fn non_constant_curvature_returns_none() {
        // Heisenberg algebra: [e1,e2] = e3.
        let m = crate::frame::build_manifold(
            &[crate::frame::Bracket::new(1, 2, [int(0), int(0), int(1)])],
            None,
        )
        .unwrap();
        let p = package(&m);
        assert_eq!(constant_curvature_coefficient(&p, &m), None);
        assert_eq!(p.symmetry_violation(), None);
        assert!(p.decomposition_residual(&m).is_zero());
    }

    #[test]
    fn fixtures_satisfy_symmetries_and_decomposition() {
        for (name, m, _) in fixtures::all() {
            let p = package(&m);
            assert_eq!(p.symmetry_violation(), None, "{name}");
            assert!(p.decomposition_residual(&m).is_zero(), "{name}");
            assert!(p.ricci.is_symmetric(), "{name}");
        }
    }
}
