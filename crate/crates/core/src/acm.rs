//! Almost contact metric structures on a frame: axiom validation,
//! normality, the structure constants α and β, the structural identity
//! suite for normal structures with constant α, β, and classification.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::connection::{linear_combination, Connection};
use crate::curvature::{constant_curvature_coefficient, CurvaturePackage};
use crate::frame::{apply, FrameManifold, VectorField};
use crate::operators::{
    covariant_derivative_1form, covariant_derivative_operator, divergence, exterior_derivative_1form,
    lie_derivative_metric,
};
use crate::report::CheckReport;
use crate::scalar::{format_rational, Rational};
use crate::tensor::{Tensor, Variance, DIM};

/// `(φ, ξ, η)` on a frame manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcmStructure {
    phi: Tensor,
    xi: VectorField,
    eta: Tensor,
}

impl AcmStructure {
    /// `phi_columns[j]` holds the frame components of `φ(e_j)`. When `eta`
    /// is omitted it is the metric dual of `ξ`.
    pub fn new(
        m: &FrameManifold,
        phi_columns: [[Rational; DIM]; DIM],
        xi: VectorField,
        eta: Option<[Rational; DIM]>,
    ) -> Self {
        let phi = Tensor::endomorphism(&phi_columns);
        let eta = match eta {
            Some(e) => Tensor::covariant(1, |k| e[k[0]].clone()),
            None => m.flat(&xi),
        };
        Self { phi, xi, eta }
    }

    pub fn phi(&self) -> &Tensor {
        &self.phi
    }

    pub fn xi(&self) -> &VectorField {
        &self.xi
    }

    pub fn eta(&self) -> &Tensor {
        &self.eta
    }

    pub fn phi_of(&self, x: &VectorField) -> VectorField {
        apply(&self.phi, x)
    }

    pub fn eta_of(&self, x: &VectorField) -> Rational {
        (0..DIM).map(|k| &x.0[k] * &self.eta[[k]]).sum()
    }

    /// `Φ(E,F) = g(E, φF)`.
    pub fn fundamental_form(&self, m: &FrameManifold) -> Tensor {
        Tensor::covariant(2, |ij| m.inner(&e(ij[0]), &self.phi_of(&e(ij[1]))))
    }
}

fn e(i: usize) -> VectorField {
    VectorField::basis(i)
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..DIM).flat_map(|i| (0..DIM).map(move |j| (i, j)))
}

fn vector_residuals(f: impl Fn(usize, usize) -> VectorField) -> Vec<Rational> {
    pairs().flat_map(|(i, j)| f(i, j).0).collect()
}

/// Residuals of the structure axioms, metric compatibility, the dual
/// relation between η and ξ, and antisymmetry of the fundamental 2-form.
pub fn validate_acm(m: &FrameManifold, s: &AcmStructure) -> CheckReport {
    let mut r = CheckReport::new();
    let phi_sq: Vec<Rational> = (0..DIM)
        .flat_map(|i| {
            let x = e(i);
            let lhs = s.phi_of(&s.phi_of(&x));
            let rhs = &s.xi.scale(&s.eta_of(&x)) - &x;
            (&lhs - &rhs).0
        })
        .collect();
    r.residual("acm.phi_squared", "a1", &phi_sq, "φ²E = -E + η(E)ξ");
    let eta_xi = s.eta_of(&s.xi) - Rational::one();
    r.residual("acm.eta_xi", "a1", std::slice::from_ref(&eta_xi), format!("η(ξ) = {}", format_rational(&(&eta_xi + Rational::one()))));
    r.residual("acm.phi_xi", "a1", &s.phi_of(&s.xi).0, "φξ = 0");
    let eta_phi: Vec<Rational> = (0..DIM).map(|i| s.eta_of(&s.phi_of(&e(i)))).collect();
    r.residual("acm.eta_phi", "a1", &eta_phi, "η∘φ = 0");
    let compat: Vec<Rational> = pairs()
        .map(|(i, j)| {
            m.inner(&s.phi_of(&e(i)), &s.phi_of(&e(j))) - m.inner(&e(i), &e(j))
                + s.eta_of(&e(i)) * s.eta_of(&e(j))
        })
        .collect();
    r.residual("acm.compatibility", "a5", &compat, "g(φE,φF) = g(E,F) - η(E)η(F)");
    let dual: Vec<Rational> = (0..DIM).map(|i| s.eta_of(&e(i)) - m.inner(&e(i), &s.xi)).collect();
    r.residual("acm.eta_dual", "a6", &dual, "η(E) = g(E,ξ)");
    let big_phi = s.fundamental_form(m);
    let anti = &big_phi + &big_phi.transpose();
    r.tensor("acm.fundamental_form", "a7", &anti, format!("Φ(E,F) = g(E,φF) antisymmetric; Φ = {big_phi}"));
    r
}

/// Nijenhuis torsion `[φ,φ](E,F) = φ²[E,F] + [φE,φF] - φ[φE,F] - φ[E,φF]`.
pub fn nijenhuis(m: &FrameManifold, s: &AcmStructure) -> Tensor {
    let cols: Vec<VectorField> = pairs()
        .map(|(i, j)| {
            let (x, y) = (e(i), e(j));
            let (px, py) = (s.phi_of(&x), s.phi_of(&y));
            let a = s.phi_of(&s.phi_of(&m.bracket(&x, &y)));
            let b = m.bracket(&px, &py);
            let c = s.phi_of(&m.bracket(&px, &y));
            let d = s.phi_of(&m.bracket(&x, &py));
            &(&(&a + &b) - &c) - &d
        })
        .collect();
    Tensor::from_fn(&[Variance::Down, Variance::Down, Variance::Up], |idx| {
        cols[idx[0] * DIM + idx[1]].0[idx[2]].clone()
    })
}

/// `[φ,φ] + 2dη⊗ξ` on every frame pair.
pub fn normality_residual(m: &FrameManifold, s: &AcmStructure) -> Tensor {
    let n = nijenhuis(m, s);
    let d_eta = exterior_derivative_1form(m, &s.eta).expect("η is a 1-form");
    Tensor::from_fn(n.slots(), |idx| {
        &n[[idx[0], idx[1], idx[2]]] + Rational::from_integer(2.into()) * &d_eta[[idx[0], idx[1]]] * &s.xi.0[idx[2]]
    })
}

pub fn normality_check(m: &FrameManifold, s: &AcmStructure) -> CheckReport {
    let mut r = CheckReport::new();
    let res = normality_residual(m, s);
    r.tensor("acm.normality", "a3", &res, "[φ,φ] + 2dη⊗ξ = 0");
    r
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaBetaReport {
    pub alpha: Rational,
    pub beta: Rational,
    /// Row `i` is `∇_{e_i}ξ - α[e_i - η(e_i)ξ] + βφe_i`.
    pub b2_residual: Tensor,
}

impl AlphaBetaReport {
    /// `α² - β²`.
    pub fn alpha2_minus_beta2(&self) -> Rational {
        &self.alpha * &self.alpha - &self.beta * &self.beta
    }
}

/// `α = ½ div ξ`, `β = ½ tr(φ∇ξ)`, and the residual of
/// `∇_Eξ = α[E - η(E)ξ] - βφE`.
pub fn alpha_beta(_m: &FrameManifold, conn: &Connection, s: &AcmStructure) -> AlphaBetaReport {
    let half = Rational::new(1.into(), 2.into());
    let nabla_xi: Vec<VectorField> = (0..DIM).map(|i| conn.covariant_derivative(&e(i), &s.xi)).collect();
    let alpha = &half * divergence(conn, &s.xi);
    let beta = &half * (0..DIM).map(|i| s.phi_of(&nabla_xi[i]).0[i].clone()).sum::<Rational>();
    let rows: Vec<VectorField> = (0..DIM)
        .map(|i| {
            let x = e(i);
            let horizontal = &x - &s.xi.scale(&s.eta_of(&x));
            &(&nabla_xi[i] - &horizontal.scale(&alpha)) + &s.phi_of(&x).scale(&beta)
        })
        .collect();
    let b2_residual = Tensor::from_fn(&[Variance::Down, Variance::Up], |ij| rows[ij[0]].0[ij[1]].clone());
    AlphaBetaReport { alpha, beta, b2_residual }
}

/// The identities that hold on a normal structure with constant α, β.
/// Derivatives of α, β and r vanish in the constant-frame model.
pub fn structural_identities(
    m: &FrameManifold,
    conn: &Connection,
    pkg: &CurvaturePackage,
    s: &AcmStructure,
    ab: &AlphaBetaReport,
) -> CheckReport {
    let mut r = CheckReport::new();
    let (alpha, beta) = (&ab.alpha, &ab.beta);
    let a2b2 = ab.alpha2_minus_beta2();
    let two = Rational::from_integer(2.into());
    let xi = &s.xi;
    let nabla_phi: Vec<Tensor> = (0..DIM)
        .map(|i| covariant_derivative_operator(conn, &s.phi, &e(i)).expect("φ is (1,1)"))
        .collect();

    let b1 = vector_residuals(|i, j| {
        let (x, y) = (e(i), e(j));
        let phi_nabla_xi = s.phi_of(&conn.covariant_derivative(&x, xi));
        let rhs = &xi.scale(&m.inner(&phi_nabla_xi, &y)) - &phi_nabla_xi.scale(&s.eta_of(&y));
        &apply(&nabla_phi[i], &y) - &rhs
    });
    r.residual("identity.nabla_phi_general", "b1", &b1, "(∇_Eφ)F = g(φ∇_Eξ,F)ξ - η(F)φ∇_Eξ");

    r.tensor(
        "identity.nabla_xi",
        "b2",
        &ab.b2_residual,
        format!("∇_Eξ = α[E - η(E)ξ] - βφE with α = {}, β = {}", format_rational(alpha), format_rational(beta)),
    );

    let b3 = vector_residuals(|i, j| {
        let (x, y) = (e(i), e(j));
        let px = s.phi_of(&x);
        let a_term = &xi.scale(&m.inner(&px, &y)) - &px.scale(&s.eta_of(&y));
        let b_term = &xi.scale(&m.inner(&x, &y)) - &x.scale(&s.eta_of(&y));
        let rhs = &a_term.scale(alpha) + &b_term.scale(beta);
        &apply(&nabla_phi[i], &y) - &rhs
    });
    r.residual("identity.nabla_phi", "b3", &b3, "(∇_Eφ)F = α[g(φE,F)ξ - η(F)φE] + β[g(E,F)ξ - η(F)E]");

    let two_ab = &two * alpha * beta;
    let b4 = vector_residuals(|i, j| {
        let (x, y) = (e(i), e(j));
        let (ex, ey) = (s.eta_of(&x), s.eta_of(&y));
        let phi2 = |v: &VectorField| s.phi_of(&s.phi_of(v));
        let first = &phi2(&x).scale(&(&a2b2 * &ey)) - &phi2(&y).scale(&(&a2b2 * &ex));
        let second = &s.phi_of(&x).scale(&(&two_ab * &ey)) - &s.phi_of(&y).scale(&(&two_ab * &ex));
        &pkg.apply(&x, &y, xi) - &(&first + &second)
    });
    r.residual("identity.curvature_xi", "b4", &b4, "R(E,F)ξ = (α²-β²)[η(F)φ²E - η(E)φ²F] + 2αβ[η(F)φE - η(E)φF]");

    let b5: Vec<Rational> = (0..DIM)
        .map(|i| {
            let s_e_xi: Rational = (0..DIM).map(|k| &pkg.ricci[[i, k]] * &xi.0[k]).sum();
            s_e_xi + &two * &a2b2 * s.eta_of(&e(i))
        })
        .collect();
    r.residual("identity.ricci_xi", "b5", &b5, "S(E,ξ) = -2(α²-β²)η(E)");

    r.residual(
        "identity.alpha_beta_product",
        "b6",
        std::slice::from_ref(&two_ab),
        format!("ξβ + 2αβ = 0 reduces to 2αβ = {}", format_rational(&two_ab)),
    );

    let b7: Vec<Rational> = pairs()
        .map(|(i, j)| {
            let (x, y) = (e(i), e(j));
            let px = s.phi_of(&x);
            covariant_derivative_1form(conn, &s.eta, &x, &y) - alpha * m.inner(&px, &s.phi_of(&y))
                + beta * m.inner(&px, &y)
        })
        .collect();
    r.residual("identity.nabla_eta", "b7", &b7, "(∇_Eη)F = αg(φE,φF) - βg(φE,F)");

    r.tensor(
        "identity.dim3_decomposition",
        "b8",
        &pkg.decomposition_residual(m),
        "R(E,F)Z = S(F,Z)E - S(E,Z)F + g(F,Z)QE - g(E,Z)QF - (r/2)[g(F,Z)E - g(E,Z)F]",
    );

    let half_r = &pkg.scalar / &two;
    let b9: Vec<Rational> = pairs()
        .map(|(i, j)| {
            let (x, y) = (e(i), e(j));
            &pkg.ricci[[i, j]] - (&half_r + &a2b2) * m.inner(&s.phi_of(&x), &s.phi_of(&y))
                + &two * &a2b2 * s.eta_of(&x) * s.eta_of(&y)
        })
        .collect();
    r.residual("identity.ricci_eta_einstein", "b9", &b9, "S(E,F) = (r/2 + α²-β²)g(φE,φF) - 2(α²-β²)η(E)η(F)");

    let lie_xi = lie_derivative_metric(m, conn, xi);
    let n2: Vec<Rational> = pairs()
        .map(|(i, j)| {
            &lie_xi[[i, j]] - &two * alpha * (m.inner(&e(i), &e(j)) - s.eta_of(&e(i)) * s.eta_of(&e(j)))
        })
        .collect();
    r.residual("identity.lie_xi_metric", "n2", &n2, format!("£_ξ g = 2α(g - η⊗η); £_ξ g = {lie_xi}"));
    r
}

/// Flags derived from α, β and curvature.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub is_normal: bool,
    pub is_quasi_sasakian: bool,
    pub is_cosymplectic: bool,
    pub is_alpha_kenmotsu: bool,
    pub is_beta_sasakian: bool,
    pub is_eta_einstein: bool,
    pub is_einstein: bool,
    /// `k` when the sectional curvature is constant.
    pub constant_curvature: Option<String>,
    /// `(η∧dη)(e1,e2,e3)`.
    pub eta_wedge_d_eta: String,
    pub alpha: String,
    pub beta: String,
    /// `(a, b)` with `S = a g + b η⊗η`, when such a pair exists.
    pub eta_einstein_coefficients: Option<(String, String)>,
}

/// Solves `S = a g + b η⊗η` exactly, or returns `None`.
pub fn eta_einstein_coefficients(m: &FrameManifold, pkg: &CurvaturePackage, s: &AcmStructure) -> Option<(Rational, Rational)> {
    let g = m.metric_tensor();
    let nn = Tensor::covariant(2, |ij| &s.eta[[ij[0]]] * &s.eta[[ij[1]]]);
    // Normal equations under the Frobenius pairing <A,B> = Σ A_ij B_ij.
    let dot = |a: &Tensor, b: &Tensor| -> Rational {
        a.components().iter().zip(b.components()).map(|(x, y)| x * y).sum()
    };
    let (gg, gn, nn2) = (dot(&g, &g), dot(&g, &nn), dot(&nn, &nn));
    let (sg, sn) = (dot(&pkg.ricci, &g), dot(&pkg.ricci, &nn));
    let det = &gg * &nn2 - &gn * &gn;
    let (a, b) = if det.is_zero() {
        // η = 0: only multiples of g are available.
        (sg / gg, Rational::zero())
    } else {
        ((&sg * &nn2 - &sn * &gn) / &det, (&gg * &sn - &gn * &sg) / &det)
    };
    let fit = &g.scale(&a) + &nn.scale(&b);
    (fit == pkg.ricci).then_some((a, b))
}

/// `(η∧dη)(e1,e2,e3) = η(e1)dη(e2,e3) + η(e2)dη(e3,e1) + η(e3)dη(e1,e2)`.
pub fn eta_wedge_d_eta(m: &FrameManifold, s: &AcmStructure) -> Rational {
    let d = exterior_derivative_1form(m, &s.eta).expect("η is a 1-form");
    &s.eta[[0]] * &d[[1, 2]] + &s.eta[[1]] * &d[[2, 0]] + &s.eta[[2]] * &d[[0, 1]]
}

pub fn classify(
    m: &FrameManifold,
    _conn: &Connection,
    pkg: &CurvaturePackage,
    s: &AcmStructure,
    ab: &AlphaBetaReport,
) -> ClassificationReport {
    let a0 = ab.alpha.is_zero();
    let b0 = ab.beta.is_zero();
    let eta_einstein = eta_einstein_coefficients(m, pkg, s);
    let einstein = {
        let three = Rational::from_integer(3.into());
        pkg.ricci == m.metric_tensor().scale(&(&pkg.scalar / three))
    };
    ClassificationReport {
        is_normal: normality_residual(m, s).is_zero(),
        is_quasi_sasakian: a0,
        is_cosymplectic: a0 && b0,
        is_alpha_kenmotsu: b0 && !a0,
        is_beta_sasakian: a0 && !b0,
        is_eta_einstein: eta_einstein.is_some(),
        is_einstein: einstein,
        constant_curvature: constant_curvature_coefficient(pkg, m).map(|k| format_rational(&k)),
        eta_wedge_d_eta: format_rational(&eta_wedge_d_eta(m, s)),
        alpha: format_rational(&ab.alpha),
        beta: format_rational(&ab.beta),
        eta_einstein_coefficients: eta_einstein.map(|(a, b)| (format_rational(&a), format_rational(&b))),
    }
}

impl ClassificationReport {
    /// One of `cosymplectic`, `alpha-Kenmotsu`, `beta-Sasakian`, or `mixed`
    /// (both α and β nonzero).
    pub fn structure_type(&self) -> &'static str {
        if self.is_cosymplectic {
            "cosymplectic"
        } else if self.is_alpha_kenmotsu {
            "alpha-Kenmotsu"
        } else if self.is_beta_sasakian {
            "beta-Sasakian"
        } else {
            "mixed"
        }
    }

    pub fn summary(&self) -> String {
        let mut parts = vec![
            format!("type {}", self.structure_type()),
            format!("α = {}, β = {}", self.alpha, self.beta),
            format!("normal: {}", self.is_normal),
            format!("quasi-Sasakian: {}", self.is_quasi_sasakian),
            format!("Einstein: {}", self.is_einstein),
            format!("η-Einstein: {}", self.is_eta_einstein),
        ];
        if let Some((a, b)) = &self.eta_einstein_coefficients {
            parts.push(format!("S = {a} g + {b} η⊗η"));
        }
        parts.push(match &self.constant_curvature {
            Some(k) => format!("constant curvature {k}"),
            None => "non-constant curvature".to_string(),
        });
        parts.push(format!("η∧dη(e1,e2,e3) = {}", self.eta_wedge_d_eta));
        parts.join("; ")
    }
}

/// Identities for `Q`: the explicit form of `Q`, its covariant
/// derivative, `(∇_E Q)ξ`, and the scalar constraint forced by `ξr = 0`.
pub fn lemma_5_checks(
    m: &FrameManifold,
    conn: &Connection,
    pkg: &CurvaturePackage,
    s: &AcmStructure,
    ab: &AlphaBetaReport,
) -> CheckReport {
    let mut r = CheckReport::new();
    let two = Rational::from_integer(2.into());
    let a2b2 = ab.alpha2_minus_beta2();
    let half_r = &pkg.scalar / &two;
    let big = &half_r + Rational::from_integer(3.into()) * &a2b2;
    let (alpha, beta) = (&ab.alpha, &ab.beta);
    let xi = &s.xi;

    let gl1: Vec<Rational> = (0..DIM)
        .flat_map(|j| {
            let y = e(j);
            let rhs = &y.scale(&(&half_r + &a2b2)) - &xi.scale(&(&big * s.eta_of(&y)));
            (&pkg.q(&y) - &rhs).0
        })
        .collect();
    r.residual("lemma.ricci_operator", "gl1", &gl1, "QF = {r/2 + (α²-β²)}F - {r/2 + 3(α²-β²)}η(F)ξ");

    let nabla_q: Vec<Tensor> = (0..DIM)
        .map(|i| covariant_derivative_operator(conn, &pkg.ricci_operator, &e(i)).expect("Q is (1,1)"))
        .collect();
    let gl2 = vector_residuals(|i, j| {
        let (x, y) = (e(i), e(j));
        let (ex, ey) = (s.eta_of(&x), s.eta_of(&y));
        let px = s.phi_of(&x);
        let bracket = &(&(&(&xi.scale(&(alpha * m.inner(&x, &y))) - &xi.scale(&(&two * alpha * &ex * &ey)))
            + &x.scale(&(alpha * &ey)))
            - &xi.scale(&(beta * m.inner(&px, &y))))
            - &px.scale(&(beta * &ey));
        &apply(&nabla_q[i], &y) + &bracket.scale(&big)
    });
    r.residual(
        "lemma.nabla_ricci_operator",
        "gl2",
        &gl2,
        "(∇_EQ)F = -{r/2 + 3(α²-β²)}[αg(E,F)ξ - 2αη(E)η(F)ξ + αη(F)E - βg(φE,F)ξ - βη(F)φE]",
    );

    let g1: Vec<Rational> = (0..DIM)
        .flat_map(|i| {
            let x = e(i);
            let horizontal = &x - &xi.scale(&s.eta_of(&x));
            let rhs = (&horizontal.scale(alpha) - &s.phi_of(&x).scale(beta)).scale(&(-&big));
            (&apply(&nabla_q[i], xi) - &rhs).0
        })
        .collect();
    r.residual("lemma.nabla_ricci_operator_xi", "g1", &g1, "(∇_EQ)ξ = -{r/2 + 3(α²-β²)}[α{E - η(E)ξ} - βφE]");

    // ξr = 0 for constant r, so the lemma's value -4α{...} must vanish.
    let gl4 = Rational::from_integer(4.into()) * alpha * &big;
    r.residual(
        "lemma.xi_scalar_curvature",
        "gl4",
        std::slice::from_ref(&gl4),
        format!("ξr = 0 = -4α{{r/2 + 3(α²-β²)}}; r = {}", format_rational(&pkg.scalar)),
    );
    let g7 = alpha * &big;
    r.residual(
        "lemma.dichotomy_constraint",
        "g7",
        std::slice::from_ref(&g7),
        format!("α{{r/2 + 3(α²-β²)}} = {}", format_rational(&g7)),
    );
    r
}

/// Readable form of `∇_{e_i}ξ` rows.
pub fn describe_nabla_xi(conn: &Connection, s: &AcmStructure) -> String {
    (0..DIM)
        .map(|i| format!("∇_e{}ξ = {}", i + 1, linear_combination(&conn.covariant_derivative(&e(i), &s.xi))))
        .collect::<Vec<_>>()
        .join("; ")
}
