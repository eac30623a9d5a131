//! Runs check suites over a manifest and assembles the report document.

use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::acm::{
    alpha_beta, classify, describe_nabla_xi, lemma_5_checks, normality_check, structural_identities,
    validate_acm, AcmStructure, AlphaBetaReport,
};
use crate::connection::{koszul_connection, linear_combination, Connection};
use crate::curvature::{constant_curvature_coefficient, curvature_package, sectional_curvature, CurvaturePackage};
use crate::error::Error;
use crate::frame::{build_manifold, FrameManifold, VectorField};
use crate::manifest::{CollinearCheck, Manifest, NamedSoliton};
use crate::operators::{divergence, lie_derivative_metric};
use crate::report::{Check, CheckReport, Status};
use crate::scalar::{format_rational, Rational};
use crate::soliton::{
    analyze_soliton, contraction_identity_check, gradient_ars_check, integrability_check, solve_ricci_lambda,
    theorem_42_check, GradientSolitonInstance, SolitonInstance,
};
use crate::tensor::{Tensor, DIM};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Suite {
    Validate,
    Connection,
    Curvature,
    Acm,
    Classify,
    Identities,
    Soliton { name: Option<String> },
    Gradient { name: Option<String> },
    Theorems,
    Report,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Validate => "validate",
            Suite::Connection => "connection",
            Suite::Curvature => "curvature",
            Suite::Acm => "acm",
            Suite::Classify => "classify",
            Suite::Identities => "identities",
            Suite::Soliton { .. } => "soliton",
            Suite::Gradient { .. } => "gradient",
            Suite::Theorems => "theorems",
            Suite::Report => "report",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub suite: String,
    /// `pass` iff no non-skipped, non-informational check failed.
    pub overall: Status,
    /// Set when the manifest could not be turned into a valid frame.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    pub checks: Vec<Check>,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let residual = match &c.residual_summary {
                Some(r) if r.is_zero() => "residual 0".to_string(),
                Some(r) => format!("residual {} nonzero, max |·| {}", r.nonzero, r.max_abs),
                None => String::new(),
            };
            let _ = writeln!(
                out,
                "{:<4}  {:<7} {:<44} {:<34} {}",
                c.status.label(),
                c.equation,
                c.check_id,
                residual,
                c.details
            );
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {e}");
        }
        let count = |s: Status| self.checks.iter().filter(|c| c.status == s).count();
        let _ = writeln!(
            out,
            "overall: {} ({} pass, {} fail, {} skipped, {} info)",
            self.overall.label(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped),
            count(Status::Info)
        );
        out
    }
}

/// Everything derived from a manifest's frame and structure.
pub struct Workbench {
    pub manifold: FrameManifold,
    pub connection: Connection,
    pub curvature: CurvaturePackage,
    pub structure: AcmStructure,
    pub alpha_beta: AlphaBetaReport,
}

impl Workbench {
    pub fn new(manifest: &Manifest) -> Result<Self, Error> {
        let manifold = build_manifold(&manifest.brackets, manifest.metric.clone())?;
        Ok(Self::from_parts(
            manifold.clone(),
            AcmStructure::new(&manifold, manifest.acm.phi_columns.clone(), manifest.acm.xi.clone(), manifest.acm.eta.clone()),
        ))
    }

    pub fn from_parts(manifold: FrameManifold, structure: AcmStructure) -> Self {
        let connection = koszul_connection(&manifold);
        let curvature = curvature_package(&manifold, &connection);
        let alpha_beta = alpha_beta(&manifold, &connection, &structure);
        Self { manifold, connection, curvature, structure, alpha_beta }
    }
}

fn e(i: usize) -> VectorField {
    VectorField::basis(i)
}

fn build_entry(r: &mut CheckReport, manifest: &Manifest) {
    let brackets: Vec<String> = manifest
        .brackets
        .iter()
        .map(|b| format!("[e{},e{}] = {}", b.i, b.j, linear_combination(&VectorField(b.coeffs.clone()))))
        .collect();
    r.verdict(
        "build.manifold",
        "frame",
        true,
        format!(
            "{}; Jacobi identity holds; metric {}",
            if brackets.is_empty() { "abelian".to_string() } else { brackets.join(", ") },
            if manifest.metric.is_some() { "positive definite" } else { "identity" }
        ),
    );
}

fn connection_entries(r: &mut CheckReport, w: &Workbench) {
    let m = &w.manifold;
    let c = &w.connection;
    r.verdict(
        "connection.metric_compatibility",
        "f5",
        c.metric_compatibility_violation(m).is_none(),
        "Σ_m Γ_ij^m g_mk + Γ_ik^m g_mj = 0",
    );
    r.verdict("connection.torsion_free", "f5", c.torsion_violation(m).is_none(), "Γ_ij^k - Γ_ji^k = c_ij^k");
    r.status("connection.coefficients", "f5", Status::Info, c.describe());
}

fn curvature_entries(r: &mut CheckReport, w: &Workbench) {
    let m = &w.manifold;
    let p = &w.curvature;
    let mut listing = Vec::new();
    for i in 0..DIM {
        for j in (i + 1)..DIM {
            for k in 0..DIM {
                let v = p.apply(&e(i), &e(j), &e(k));
                listing.push(format!("R(e{},e{})e{} = {}", i + 1, j + 1, k + 1, linear_combination(&v)));
            }
        }
    }
    r.status("curvature.riemann", "R", Status::Info, listing.join("; "));
    r.verdict(
        "curvature.symmetries",
        "R",
        p.symmetry_violation().is_none(),
        p.symmetry_violation().map_or("pair antisymmetry, pair exchange, first Bianchi".to_string(), |v| format!("violated: {v}")),
    );
    r.status("curvature.ricci", "S", Status::Info, format!("S = {}; r = {}", p.ricci, format_rational(&p.scalar)));
    r.verdict("curvature.ricci_symmetric", "S", p.ricci.is_symmetric(), "S(X,Y) = S(Y,X)");
    r.tensor("curvature.dim3_decomposition", "b8", &p.decomposition_residual(m), "Weyl part vanishes in dimension 3");
    let sectional: Vec<String> = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| {
            let k = sectional_curvature(p, m, &e(i), &e(j)).expect("frame vectors are independent");
            format!("K(e{},e{}) = {}", i + 1, j + 1, format_rational(&k))
        })
        .collect();
    let constant = match constant_curvature_coefficient(p, m) {
        Some(k) => format!("constant sectional curvature {}", format_rational(&k)),
        None => "sectional curvature not constant".to_string(),
    };
    r.status("curvature.sectional", "R", Status::Info, format!("{}; {constant}", sectional.join(", ")));
}

fn acm_entries(r: &mut CheckReport, w: &Workbench) {
    r.extend(normality_check(&w.manifold, &w.structure));
    let ab = &w.alpha_beta;
    r.tensor(
        "acm.alpha_beta",
        "b2",
        &ab.b2_residual,
        format!(
            "α = ½div ξ = {}, β = ½tr(φ∇ξ) = {}; {}",
            format_rational(&ab.alpha),
            format_rational(&ab.beta),
            describe_nabla_xi(&w.connection, &w.structure)
        ),
    );
    classify_entry(r, w);
}

fn classify_entry(r: &mut CheckReport, w: &Workbench) {
    let k = classify(&w.manifold, &w.connection, &w.curvature, &w.structure, &w.alpha_beta);
    r.status("classify.structure", "b3", Status::Info, k.summary());
}

fn identity_entries(r: &mut CheckReport, w: &Workbench) {
    r.extend(structural_identities(&w.manifold, &w.connection, &w.curvature, &w.structure, &w.alpha_beta));
    r.extend(lemma_5_checks(&w.manifold, &w.connection, &w.curvature, &w.structure, &w.alpha_beta));
    killing_entry(r, w);
}

/// Whether `ξ` is Killing. A nonzero `£_ξ g` is reported, not failed.
fn killing_entry(r: &mut CheckReport, w: &Workbench) {
    let lie = lie_derivative_metric(&w.manifold, &w.connection, w.structure.xi());
    if lie.is_zero() {
        r.verdict("discrepancy.xi_killing", "h3", true, "£_ξ g = 0: ξ is Killing");
    } else {
        r.checks.push(Check {
            check_id: "discrepancy.xi_killing".into(),
            equation: "h3".into(),
            status: Status::Info,
            residual_summary: Some(crate::report::ResidualSummary::of(lie.components())),
            details: format!(
                "£_ξ g = {lie} = 2α(g - η⊗η) with α = {} ≠ 0: ξ is not Killing, so a claim £_ξ g = 0 does not hold; the soliton equation holds with Z = 0 (or any Killing Z) instead",
                format_rational(&w.alpha_beta.alpha)
            ),
        });
    }
}

fn select<'a>(items: &'a [NamedSoliton], name: &Option<String>) -> Vec<&'a NamedSoliton> {
    items.iter().filter(|s| name.as_ref().is_none_or(|n| *n == s.name)).collect()
}

fn soliton_entries(r: &mut CheckReport, w: &Workbench, manifest: &Manifest, name: &Option<String>) {
    let (m, c, p) = (&w.manifold, &w.connection, &w.curvature);
    let two = Rational::from_integer(2.into());
    for sol in select(&manifest.solitons, name) {
        let id = |suffix: &str| format!("soliton.{}.{suffix}", sol.name);
        let inst = SolitonInstance { potential: sol.potential.clone(), lambda: sol.lambda.clone() };
        let rep = analyze_soliton(m, c, p, &w.structure, &w.alpha_beta, &inst);
        r.tensor(
            id("riemann"),
            "cc1",
            &rep.residual_4tensor,
            format!(
                "2R + λg⊗g + g⊗£_Z g with Z = {}, λ = {}; type {}; λ solving the equation for this Z: {}",
                linear_combination(&inst.potential),
                format_rational(&inst.lambda),
                rep.type_tag.map_or("none", |t| t.as_str()),
                rep.solved_lambda.as_ref().map_or("none".to_string(), format_rational)
            ),
        );
        r.tensor(id("ricci_form"), "cc2", &rep.residual_ricci, "£_Z g + 2S + (4λ + 2div Z)g");
        r.extend(rename(contraction_identity_check(m, c, p, &inst), &id("contraction")));

        let lie = lie_derivative_metric(m, c, &inst.potential);
        if lie.is_zero() {
            // With £_Z g = 0 the equation reduces to 2R(E,F)W + 2λ{g(F,W)E - g(E,W)F} = 0.
            let g = m.metric();
            let res = Tensor::from_fn(p.riemann_31.slots(), |idx| {
                let (a, b, k, n) = (idx[0], idx[1], idx[2], idx[3]);
                let delta = |x: usize| if x == n { Rational::from_integer(1.into()) } else { Rational::zero() };
                &two * &p.riemann_31[[a, b, k, n]] + &two * &inst.lambda * (&g[b][k] * delta(a) - &g[a][k] * delta(b))
            });
            r.tensor(id("constant_curvature_form"), "h3", &res, "2R(E,F)W + 2λ{g(F,W)E - g(E,W)F} = 0");
        } else {
            r.status(id("constant_curvature_form"), "h3", Status::Skipped, format!("Z is not Killing: £_Z g = {lie}"));
        }

        let div = divergence(c, &inst.potential);
        if div.is_zero() && rep.residual_4tensor.is_zero() {
            let n3 = &(&lie + &p.ricci.scale(&two)) + &m.metric_tensor().scale(&(Rational::from_integer(4.into()) * &inst.lambda));
            r.tensor(id("ricci_reduction"), "n3", &n3, "£_Z g + 2S + 4λg = 0 for a divergence-free potential");
        } else {
            r.status(
                id("ricci_reduction"),
                "n3",
                Status::Skipped,
                format!("needs a soliton with div Z = 0 (div Z = {})", format_rational(&div)),
            );
        }

        match solve_ricci_lambda(m, c, p, &inst.potential) {
            Some(l) => r.extend(rename(integrability_check(m, c, p, &inst.potential, &l), &id("integrability"))),
            None => r.status(id("integrability"), "n1", Status::Skipped, "Z is not a Ricci soliton potential for any λ'"),
        }
    }
}

fn rename(mut rep: CheckReport, id: &str) -> CheckReport {
    for c in &mut rep.checks {
        c.check_id = id.to_string();
    }
    rep
}

fn gradient_entries(r: &mut CheckReport, w: &Workbench, manifest: &Manifest, name: &Option<String>) {
    for sol in select(&manifest.gradient_solitons, name) {
        let id = |suffix: &str| format!("gradient.{}.{suffix}", sol.name);
        let g = GradientSolitonInstance { potential_gradient: sol.potential.clone(), lambda: sol.lambda.clone() };
        let rep = gradient_ars_check(&w.manifold, &w.connection, &w.curvature, &w.alpha_beta, &g);
        r.verdict(
            id("closed"),
            "aa2",
            rep.closed,
            format!("d(V♭) = 0 for V = {}; Δγ = div V = {}", linear_combination(&g.potential_gradient), format_rational(&rep.laplacian)),
        );
        let is_soliton = match &rep.residual_4tensor {
            Some(t) => {
                r.tensor(
                    id("riemann"),
                    "aa2",
                    t,
                    format!(
                        "2R + λg⊗g + g⊗Hess with λ = {}; Hess = {}; type {}",
                        format_rational(&g.lambda),
                        rep.hessian,
                        rep.type_tag.map_or("none", |t| t.as_str())
                    ),
                );
                t.is_zero()
            }
            None => {
                r.status(id("riemann"), "aa2", Status::Skipped, "V is not a gradient");
                false
            }
        };
        if is_soliton {
            r.tensor(id("curvature_gradient"), "gl12", &rep.gl12_residual, "R(E,F)Dγ = (∇_F Q)E - (∇_E Q)F");
        } else {
            r.status(id("curvature_gradient"), "gl12", Status::Skipped, "not a gradient soliton");
        }
    }
}

fn theorem_entries(r: &mut CheckReport, w: &Workbench, manifest: &Manifest) {
    let (m, c, p, s, ab) = (&w.manifold, &w.connection, &w.curvature, &w.structure, &w.alpha_beta);
    for sol in &manifest.solitons {
        let inst = SolitonInstance { potential: sol.potential.clone(), lambda: sol.lambda.clone() };
        let t = crate::soliton::theorem_31_check(m, c, p, s, ab, &inst);
        r.status(format!("theorem.divergence_free.{}", sol.name), "thm3.1", Status::Info, t.table());
    }
    let collinear = |check: &CollinearCheck| {
        let t = theorem_42_check(m, c, p, s, ab, &check.c, &check.lambda);
        format!(
            "Z = {}ξ: div Z = {}, predicted λ* = (α²-β²) - div Z = {}, supplied λ = {} ({}); soliton at λ*: {}; soliton at λ: {}",
            t.c,
            t.divergence,
            t.predicted_lambda,
            t.lambda,
            if t.lambda_matches_prediction { "matches" } else { "differs" },
            t.soliton_at_prediction,
            t.soliton_at_supplied
        )
    };
    for check in &manifest.collinear_checks {
        r.status(format!("theorem.collinear.{}", check.name), "thm4.2", Status::Info, collinear(check));
    }
    let one = Rational::from_integer(1.into());
    let xi_case = CollinearCheck { name: "xi".into(), c: one.clone(), lambda: ab.alpha2_minus_beta2() - divergence(c, s.xi()) };
    r.status("theorem.potential_xi", "cor4.3", Status::Info, collinear(&xi_case));
    for sol in &manifest.gradient_solitons {
        let g = GradientSolitonInstance { potential_gradient: sol.potential.clone(), lambda: sol.lambda.clone() };
        let rep = gradient_ars_check(m, c, p, ab, &g);
        let d = &rep.dichotomy;
        let a2b2 = ab.alpha2_minus_beta2();
        r.status(
            format!("theorem.gradient_dichotomy.{}", sol.name),
            "thm5.3",
            Status::Info,
            format!(
                "gradient soliton: {}; case (i) α = 0: {}; case (ii) r = -6(α²-β²) = {}: {}; constant curvature -(α²-β²) = {}: {}",
                rep.residual_4tensor.as_ref().is_some_and(Tensor::is_zero),
                d.alpha_zero,
                format_rational(&(Rational::from_integer((-6).into()) * &a2b2)),
                d.scalar_is_minus_6_a2b2,
                format_rational(&-&a2b2),
                d.curvature_is_minus_a2b2
            ),
        );
    }
}

/// Runs `suite` over `manifest`. Checks run in dependency order and the
/// output order is fixed.
pub fn run_suite(manifest: &Manifest, suite: &Suite) -> ReportDocument {
    let mut r = CheckReport::new();
    let w = match Workbench::new(manifest) {
        Ok(w) => w,
        Err(err) => {
            r.verdict("build.manifold", "frame", false, err.to_string());
            return ReportDocument { suite: suite.name().into(), overall: Status::Fail, error: Some(err.to_string()), checks: r.checks };
        }
    };
    build_entry(&mut r, manifest);
    let validate = |r: &mut CheckReport| r.extend(validate_acm(&w.manifold, &w.structure));
    match suite {
        Suite::Validate => validate(&mut r),
        Suite::Connection => connection_entries(&mut r, &w),
        Suite::Curvature => curvature_entries(&mut r, &w),
        Suite::Acm => {
            validate(&mut r);
            acm_entries(&mut r, &w);
        }
        Suite::Classify => classify_entry(&mut r, &w),
        Suite::Identities => identity_entries(&mut r, &w),
        Suite::Soliton { name } => soliton_entries(&mut r, &w, manifest, name),
        Suite::Gradient { name } => gradient_entries(&mut r, &w, manifest, name),
        Suite::Theorems => theorem_entries(&mut r, &w, manifest),
        Suite::Report => {
            connection_entries(&mut r, &w);
            curvature_entries(&mut r, &w);
            validate(&mut r);
            acm_entries(&mut r, &w);
            identity_entries(&mut r, &w);
            soliton_entries(&mut r, &w, manifest, &None);
            gradient_entries(&mut r, &w, manifest, &None);
            theorem_entries(&mut r, &w, manifest);
        }
    }
    ReportDocument { suite: suite.name().into(), overall: r.overall(), error: None, checks: r.checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifest::parse_manifest;

    const HYP3: &str = r#"{
        "dimension": 3,
        "brackets": [
            {"i": 1, "j": 3, "coeffs": ["-1", "0", "0"]},
            {"i": 2, "j": 3, "coeffs": ["0", "-1", "0"]}
        ],
        "acm": {"xi": ["0", "0", "1"], "phi": [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "0"]]},
        "solitons": [{"name": "static", "potential": ["0", "0", "0"], "lambda": "1"}],
        "gradient_solitons": [{"name": "trivial", "potential_gradient": ["0", "0", "0"], "lambda": "1"}],
        "collinear_checks": [{"name": "xi", "c": "1", "lambda": "3"}]
    }"#;

    #[test]
    fn full_report_passes_with_discrepancy() {
        let m = parse_manifest(HYP3).unwrap();
        let doc = run_suite(&m, &Suite::Report);
        assert_eq!(doc.overall, Status::Pass, "{}", doc.to_text());
        let k = doc.checks.iter().find(|c| c.check_id == "discrepancy.xi_killing").unwrap();
        assert_eq!(k.status, Status::Info);
        for tag in ["a1", "a3", "a5", "a6", "a7", "b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8", "b9", "g1", "g7", "cc1", "cc2", "h3"] {
            assert!(
                doc.checks.iter().any(|c| c.equation == tag && c.status == Status::Pass),
                "missing passing {tag}"
            );
        }
    }

    #[test]
    fn json_round_trip() {
        let m = parse_manifest(HYP3).unwrap();
        let doc = run_suite(&m, &Suite::Report);
        let json = doc.to_json();
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn jacobi_violation_becomes_failed_report() {
        let bad = HYP3.replace(
            r#"{"i": 2, "j": 3, "coeffs": ["0", "-1", "0"]}"#,
            r#"{"i": 1, "j": 2, "coeffs": ["0", "0", "1"]}"#,
        );
        let doc = run_suite(&parse_manifest(&bad).unwrap(), &Suite::Validate);
        assert_eq!(doc.overall, Status::Fail);
        assert!(doc.error.as_deref().unwrap().contains("Jacobi"));
    }

    #[test]
    fn soliton_name_filter() {
        let m = parse_manifest(HYP3).unwrap();
        let doc = run_suite(&m, &Suite::Soliton { name: Some("nope".into()) });
        assert_eq!(doc.checks.len(), 1);
        let doc = run_suite(&m, &Suite::Soliton { name: Some("static".into()) });
        assert!(doc.checks.iter().any(|c| c.check_id == "soliton.static.riemann" && c.status == Status::Pass));
    }
}
