//! Levi-Civita connection of a constant-coefficient frame.

use num_traits::Zero;

use crate::frame::{FrameManifold, VectorField};
use crate::scalar::Rational;
use crate::tensor::DIM;

/// `∇_{e_i} e_j = Σ_k gamma[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    gamma: [[[Rational; DIM]; DIM]; DIM],
}

/// Solves the Koszul formula
/// `2 g(∇_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)`.
///
/// With constant metric coefficients the directional-derivative terms vanish.
pub fn koszul_connection(m: &FrameManifold) -> Connection {
    let g = m.metric();
    // lowered[i][j][k] = g([e_i, e_j], e_k)
    let lowered = |i: usize, j: usize, k: usize| -> Rational {
        (0..DIM).map(|l| m.structure_constant(i, j, l) * &g[l][k]).sum()
    };
    let half = Rational::new(1.into(), 2.into());
    let mut gamma: [[[Rational; DIM]; DIM]; DIM] =
        std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())));
    let ginv = m.inverse_metric();
    for i in 0..DIM {
        for j in 0..DIM {
            let cov: [Rational; DIM] = std::array::from_fn(|k| {
                &half * (lowered(i, j, k) - lowered(j, k, i) + lowered(k, i, j))
            });
            for l in 0..DIM {
                gamma[i][j][l] = (0..DIM).map(|k| &cov[k] * &ginv[k][l]).sum();
            }
        }
    }
    Connection { gamma }
}

impl Connection {
    /// Christoffel coefficient, 0-based.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.gamma[i][j][k]
    }

    /// `∇_{e_i} e_j`.
    pub fn frame_derivative(&self, i: usize, j: usize) -> VectorField {
        VectorField::from_fn(|k| self.gamma[i][j][k].clone())
    }

    /// `∇_X Y` for constant-coefficient fields.
    pub fn covariant_derivative(&self, x: &VectorField, y: &VectorField) -> VectorField {
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
                    out.0[k] += &w * &self.gamma[i][j][k];
                }
            }
        }
        out
    }

    /// Residual of `Σ_m (Γ_ij^m g_mk + Γ_ik^m g_mj) = 0` at the first failing
    /// triple, if any.
    pub fn metric_compatibility_violation(&self, m: &FrameManifold) -> Option<(usize, usize, usize)> {
        let g = m.metric();
        triples().find(|&(i, j, k)| {
            let s: Rational = (0..DIM)
                .map(|l| &self.gamma[i][j][l] * &g[l][k] + &self.gamma[i][k][l] * &g[l][j])
                .sum();
            !s.is_zero()
        })
    }

    /// First triple where `Γ_ij^k - Γ_ji^k != c_ij^k`, if any.
    pub fn torsion_violation(&self, m: &FrameManifold) -> Option<(usize, usize, usize)> {
        triples().find(|&(i, j, k)| {
            &self.gamma[i][j][k] - &self.gamma[j][i][k] != *m.structure_constant(i, j, k)
        })
    }

    /// Human-readable list of nonzero `∇_{e_i} e_j`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                let v = self.frame_derivative(i, j);
                if !v.is_zero() {
                    parts.push(format!("∇_e{}e{} = {}", i + 1, j + 1, linear_combination(&v)));
                }
            }
        }
        if parts.is_empty() {
            "all ∇_ei ej = 0".to_string()
        } else {
            parts.join("; ")
        }
    }
}

fn triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..DIM).flat_map(|i| (0..DIM).flat_map(move |j| (0..DIM).map(move |k| (i, j, k))))
}

/// Formats a vector as `a e1 + b e2 + ...`, omitting zero terms.
pub fn linear_combination(v: &VectorField) -> String {
    use crate::scalar::format_rational;
    use num_traits::One;
    let mut out = String::new();
    for (k, c) in v.0.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format_rational(&mag));
        }
        out.push_str(&format!("e{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::int;

    fn e(i: usize) -> VectorField {
        VectorField::basis(i)
    }

    #[test]
    fn hyp3_matches_worked_example() {
        let c = koszul_connection(&fixtures::hyp3());
        assert_eq!(c.frame_derivative(0, 2), e(0).scale(&int(-1)));
        assert_eq!(c.frame_derivative(0, 1), VectorField::zero());
        assert_eq!(c.frame_derivative(0, 0), e(2));
        assert_eq!(c.frame_derivative(1, 2), e(1).scale(&int(-1)));
        assert_eq!(c.frame_derivative(1, 1), e(2));
        assert_eq!(c.frame_derivative(1, 0), VectorField::zero());
        for j in 0..3 {
            assert_eq!(c.frame_derivative(2, j), VectorField::zero());
        }
    }

    #[test]
    fn flat_connection_vanishes() {
        let c = koszul_connection(&fixtures::flat3());
        assert!((0..3).all(|i| (0..3).all(|j| c.frame_derivative(i, j).is_zero())));
    }

    #[test]
    fn su2_is_half_bracket() {
        let m = fixtures::su2();
        let c = koszul_connection(&m);
        assert_eq!(c.frame_derivative(0, 1), e(2));
        assert_eq!(c.frame_derivative(0, 2), e(1).scale(&int(-1)));
        let half = Rational::new(1.into(), 2.into());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(c.frame_derivative(i, j), m.frame_bracket(i, j).scale(&half));
            }
        }
    }

    #[test]
    fn levi_civita_invariants_on_fixtures() {
        for (_, m, _) in fixtures::all() {
            let c = koszul_connection(&m);
            assert_eq!(c.metric_compatibility_violation(&m), None);
            assert_eq!(c.torsion_violation(&m), None);
        }
    }

    #[test]
    fn describe_hyp3() {
        let c = koszul_connection(&fixtures::hyp3());
        assert_eq!(
            c.describe(),
            "∇_e1e1 = e3; ∇_e1e3 = -e1; ∇_e2e2 = e3; ∇_e2e3 = -e2"
        );
    }
}
