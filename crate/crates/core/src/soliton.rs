//! Riemann, Ricci and gradient soliton residuals, and instance-level
//! hypothesis/conclusion tables for the classification theorems.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::acm::{AcmStructure, AlphaBetaReport};
use crate::connection::Connection;
use crate::curvature::{constant_curvature_coefficient, CurvaturePackage};
use crate::frame::{FrameManifold, VectorField};
use crate::kn::{kulkarni_nomizu, kulkarni_nomizu_unchecked};
use crate::operators::{covariant_derivative_operator, divergence, hessian_from_gradient, lie_derivative_metric};
use crate::report::{CheckReport, Status};
use crate::scalar::{format_rational, Rational};
use crate::tensor::{tensor_contract, tensor_norm_squared, Tensor, Variance, DIM};

/// Potential field `Z` and constant `λ` of `2R + λ g⊗g + g⊗£_Z g = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolitonInstance {
    pub potential: VectorField,
    pub lambda: Rational,
}

/// Gradient `V = Dγ` and `λ` of `2R + λ g⊗g + g⊗∇²γ = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradientSolitonInstance {
    pub potential_gradient: VectorField,
    pub lambda: Rational,
}

impl GradientSolitonInstance {
    /// `Δγ = div Dγ`.
    pub fn laplacian(&self, conn: &Connection) -> Rational {
        divergence(conn, &self.potential_gradient)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolitonType {
    Expanding,
    Steady,
    Shrinking,
}

impl SolitonType {
    pub fn from_lambda(lambda: &Rational) -> Self {
        if lambda.is_positive() {
            SolitonType::Expanding
        } else if lambda.is_zero() {
            SolitonType::Steady
        } else {
            SolitonType::Shrinking
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SolitonType::Expanding => "expanding",
            SolitonType::Steady => "steady",
            SolitonType::Shrinking => "shrinking",
        }
    }
}

fn metric_square(m: &FrameManifold) -> Tensor {
    let g = m.metric_tensor();
    kulkarni_nomizu(&g, &g).expect("metric is symmetric")
}

/// `2R + λ g⊗g + g⊗£_Z g`.
pub fn riemann_soliton_residual(
    m: &FrameManifold,
    conn: &Connection,
    pkg: &CurvaturePackage,
    inst: &SolitonInstance,
) -> Tensor {
    let lie = lie_derivative_metric(m, conn, &inst.potential);
    let g = m.metric_tensor();
    let two = Rational::from_integer(2.into());
    let mut out = pkg.riemann_04.scale(&two);
    out = &out + &metric_square(m).scale(&inst.lambda);
    &out + &kulkarni_nomizu(&g, &lie).expect("£_Z g is symmetric")
}

/// The unique `λ` making the Riemann-soliton residual vanish for `z`, if any.
pub fn solve_lambda(
    m: &FrameManifold,
    conn: &Connection,
    pkg: &CurvaturePackage,
    z: &VectorField,
) -> Option<Rational> {
    let base = riemann_soliton_residual(m, conn, pkg, &SolitonInstance { potential: z.clone(), lambda: Rational::zero() });
    let gg = metric_square(m);
    let (idx, coeff) = gg.nonzero().next()?;
    let lambda = -base.get(&idx) / coeff;
    let fitted = &base + &gg.scale(&lambda);
    fitted.is_zero().then_some(lambda)
}

/// `£_Z g + 2S + (4λ + 2 div Z) g`.
pub fn ricci_soliton_residual(
    m: &FrameManifold,
    conn: &Connection,
    pkg: &CurvaturePackage,
    inst: &SolitonInstance,
) -> Tensor {
    let lie = lie_derivative_metric(m, conn, &inst.potential);
    let div = divergence(conn, &inst.potential);
    let coeff = Rational::from_integer(4.into()) * &inst.lambda + Rational::from_integer(2.into()) * div;
    &(&lie + &pkg.ricci.scale(&Rational::from_integer(2.into()))) + &m.metric_tensor().scale(&coeff)
}

/// Contracting the Riemann-soliton residual over its outer slots must give
/// the Ricci-form residual for every `(Z, λ)`.
pub fn contraction_identity_check(
    m: &FrameManifold,
    conn: &Connection,
    pkg: &CurvaturePackage,
    inst: &SolitonInstance,
) -> CheckReport {
    let full = riemann_soliton_residual(m, conn, pkg, inst);
    let contracted = tensor_contract(&full, 0, 3, m).expect("rank-4 contraction");
    let ricci_form = ricci_soliton_residual(m, conn, pkg, inst);
    let mut r = CheckReport::new();
    r.tensor(
        "soliton.contraction",
        "cc2",
        &(&contracted - &ricci_form),
        format!("contracted (cc1) residual = {contracted}; (cc2) residual = {ricci_form}"),
    );
    r
}

/// `λ'` with `£_Z g + 2S + 2λ' g = 0`, if `Z` is a Ricci soliton potential.
pub fn solve_ricci_lambda(
    m: &FrameManifold,
    conn: &Connection,
    pkg: &CurvaturePackage,
    z: &VectorField,
) -> Option<Rational> {
    let lie = lie_derivative_metric(m, conn, z);
    let base = &lie + &pkg.ricci.scale(&Rational::from_integer(2.into()));
    let g = m.metric_tensor();
    let (idx, coeff) = g.nonzero().next()?;
    let lambda = -base.get(&idx) / (Rational::from_integer(2.into()) * coeff);
    let fitted = &base + &g.scale(&(Rational::from_integer(2.into()) * &lambda));
    fitted.is_zero().then_some(lambda)
}

/// `½‖£_Z g‖² = dr(Z) + 2 div(λ'Z - QZ)` for a Ricci soliton
/// `£_Z g + 2S + 2λ'g = 0`; `dr = 0` since `r` is constant.
pub fn integrability_check(
    m: &FrameManifold,
    conn: &Connection,
    pkg: &CurvaturePackage,
    z: &VectorField,
    ricci_lambda: &Rational,
) -> CheckReport {
    let mut r = CheckReport::new();
    let two = Rational::from_integer(2.into());
    let lie = lie_derivative_metric(m, conn, z);
    let pre = &(&lie + &pkg.ricci.scale(&two)) + &m.metric_tensor().scale(&(&two * ricci_lambda));
    if !pre.is_zero() {
        r.status(
            "soliton.integrability",
            "n1",
            Status::Skipped,
            format!(
                "precondition not met: £_Z g + 2S + 2λ'g = {pre} with λ' = {}",
                format_rational(ricci_lambda)
            ),
        );
        return r;
    }
    let lhs = tensor_norm_squared(&lie, m).expect("(0,2)") / &two;
    let field = &z.scale(ricci_lambda) - &pkg.q(z);
    let rhs = &two * divergence(conn, &field);
    let diff = &lhs - &rhs;
    r.residual(
        "soliton.integrability",
        "n1",
        std::slice::from_ref(&diff),
        format!("½‖£_Z g‖² = {}, 2div(λ'Z - QZ) = {}", format_rational(&lhs), format_rational(&rhs)),
    );
    r
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem31Verdicts {
    /// Riemann-soliton residual vanishes.
    pub h1_soliton: bool,
    /// `div Z = 0`.
    pub h2_divergence_free: bool,
    /// `α = 0` (quasi-Sasakian).
    pub c1_quasi_sasakian: bool,
    /// Constant sectional curvature equal to `-λ`.
    pub c2_curvature_minus_lambda: bool,
    /// `r = -6λ`, reported when H1 and H2 hold.
    pub scalar_is_minus_6_lambda: Option<bool>,
    /// `Qξ = -2λξ`, reported when H1 and H2 hold.
    pub q_xi_is_minus_2_lambda_xi: Option<bool>,
}

impl Theorem31Verdicts {
    pub fn table(&self) -> String {
        let mark = |b: bool| if b { "✓" } else { "✗" };
        let mut s = format!(
            "H1 soliton {}; H2 div Z = 0 {}; C1 α = 0 {}; C2 K = -λ {}",
            mark(self.h1_soliton),
            mark(self.h2_divergence_free),
            mark(self.c1_quasi_sasakian),
            mark(self.c2_curvature_minus_lambda)
        );
        if let (Some(a), Some(b)) = (self.scalar_is_minus_6_lambda, self.q_xi_is_minus_2_lambda_xi) {
            s.push_str(&format!("; r = -6λ {}; Qξ = -2λξ {}", mark(a), mark(b)));
        }
        s
    }
}

pub fn theorem_31_check(
    m: &FrameManifold,
    conn: &Connection,
    pkg: &CurvaturePackage,
    s: &AcmStructure,
    ab: &AlphaBetaReport,
    inst: &SolitonInstance,
) -> Theorem31Verdicts {
    let h1 = riemann_soliton_residual(m, conn, pkg, inst).is_zero();
    let h2 = divergence(conn, &inst.potential).is_zero();
    let c1 = ab.alpha.is_zero();
    let c2 = constant_curvature_coefficient(pkg, m).is_some_and(|k| k == -&inst.lambda);
    let (r6, qxi) = if h1 && h2 {
        let r6 = pkg.scalar == Rational::from_integer((-6).into()) * &inst.lambda;
        let qxi = pkg.q(s.xi()) == s.xi().scale(&(Rational::from_integer((-2).into()) * &inst.lambda));
        (Some(r6), Some(qxi))
    } else {
        (None, None)
    };
    Theorem31Verdicts {
        h1_soliton: h1,
        h2_divergence_free: h2,
        c1_quasi_sasakian: c1,
        c2_curvature_minus_lambda: c2,
        scalar_is_minus_6_lambda: r6,
        q_xi_is_minus_2_lambda_xi: qxi,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem42Report {
    pub c: String,
    pub lambda: String,
    /// `div(cξ) = 2αc`.
    pub divergence: String,
    /// `λ* = (α² - β²) - div Z`.
    pub predicted_lambda: String,
    pub lambda_matches_prediction: bool,
    /// Riemann-soliton residual at `(cξ, λ*)` vanishes.
    pub soliton_at_prediction: bool,
    /// Riemann-soliton residual at `(cξ, λ)` vanishes.
    pub soliton_at_supplied: bool,
}

pub fn theorem_42_check(
    m: &FrameManifold,
    conn: &Connection,
    pkg: &CurvaturePackage,
    s: &AcmStructure,
    ab: &AlphaBetaReport,
    c: &Rational,
    lambda: &Rational,
) -> Theorem42Report {
    let z = s.xi().scale(c);
    let div = divergence(conn, &z);
    let predicted = ab.alpha2_minus_beta2() - &div;
    let at = |l: &Rational| {
        riemann_soliton_residual(m, conn, pkg, &SolitonInstance { potential: z.clone(), lambda: l.clone() }).is_zero()
    };
    Theorem42Report {
        c: format_rational(c),
        lambda: format_rational(lambda),
        divergence: format_rational(&div),
        predicted_lambda: format_rational(&predicted),
        lambda_matches_prediction: *lambda == predicted,
        soliton_at_prediction: at(&predicted),
        soliton_at_supplied: at(lambda),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dichotomy {
    /// Case (i): `α = 0`.
    pub alpha_zero: bool,
    /// Case (ii): `r = -6(α² - β²)`.
    pub scalar_is_minus_6_a2b2: bool,
    /// Constant sectional curvature `-(α² - β²)`.
    pub curvature_is_minus_a2b2: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolitonReport {
    pub residual_4tensor: Tensor,
    /// `£_Z g + 2S + (4λ + 2 div Z) g`.
    pub residual_ricci: Tensor,
    pub solved_lambda: Option<Rational>,
    /// Set only when the residual vanishes.
    pub type_tag: Option<SolitonType>,
    pub theorem_31: Theorem31Verdicts,
}

pub fn analyze_soliton(
    m: &FrameManifold,
    conn: &Connection,
    pkg: &CurvaturePackage,
    s: &AcmStructure,
    ab: &AlphaBetaReport,
    inst: &SolitonInstance,
) -> SolitonReport {
    let residual_4tensor = riemann_soliton_residual(m, conn, pkg, inst);
    let type_tag = residual_4tensor.is_zero().then(|| SolitonType::from_lambda(&inst.lambda));
    SolitonReport {
        residual_ricci: ricci_soliton_residual(m, conn, pkg, inst),
        solved_lambda: solve_lambda(m, conn, pkg, &inst.potential),
        type_tag,
        theorem_31: theorem_31_check(m, conn, pkg, s, ab, inst),
        residual_4tensor,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradientSolitonReport {
    pub closed: bool,
    pub hessian: Tensor,
    pub laplacian: Rational,
    /// `2R + λ g⊗g + g⊗Hess(V)`; `None` when `V♭` is not closed.
    pub residual_4tensor: Option<Tensor>,
    /// `R(E,F)V - (∇_F Q)E + (∇_E Q)F`, slots `[Down, Down, Up]`.
    pub gl12_residual: Tensor,
    pub type_tag: Option<SolitonType>,
    pub dichotomy: Dichotomy,
}

pub fn gradient_ars_check(
    m: &FrameManifold,
    conn: &Connection,
    pkg: &CurvaturePackage,
    ab: &AlphaBetaReport,
    ginst: &GradientSolitonInstance,
) -> GradientSolitonReport {
    let v = &ginst.potential_gradient;
    let hess = hessian_from_gradient(m, conn, v);
    let residual_4tensor = hess.closed.then(|| {
        let two = Rational::from_integer(2.into());
        let g = m.metric_tensor();
        &(&pkg.riemann_04.scale(&two) + &metric_square(m).scale(&ginst.lambda))
            + &kulkarni_nomizu_unchecked(&g, &hess.tensor)
    });
    let nabla_q: Vec<Tensor> = (0..DIM)
        .map(|i| covariant_derivative_operator(conn, &pkg.ricci_operator, &VectorField::basis(i)).expect("Q is (1,1)"))
        .collect();
    let gl12_residual = Tensor::from_fn(&[Variance::Down, Variance::Down, Variance::Up], |idx| {
        let (i, j, n) = (idx[0], idx[1], idx[2]);
        let rv = pkg.apply(&VectorField::basis(i), &VectorField::basis(j), v);
        &rv.0[n] - &nabla_q[j][[i, n]] + &nabla_q[i][[j, n]]
    });
    let a2b2 = ab.alpha2_minus_beta2();
    let dichotomy = Dichotomy {
        alpha_zero: ab.alpha.is_zero(),
        scalar_is_minus_6_a2b2: pkg.scalar == Rational::from_integer((-6).into()) * &a2b2,
        curvature_is_minus_a2b2: constant_curvature_coefficient(pkg, m).is_some_and(|k| k == -&a2b2),
    };
    let type_tag = residual_4tensor
        .as_ref()
        .filter(|t| t.is_zero())
        .map(|_| SolitonType::from_lambda(&ginst.lambda));
    GradientSolitonReport {
        closed: hess.closed,
        laplacian: ginst.laplacian(conn),
        hessian: hess.tensor,
        residual_4tensor,
        gl12_residual,
        type_tag,
        dichotomy,
    }
}
