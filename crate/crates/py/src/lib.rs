//! Python bindings. Rationals cross the boundary as strings such as `"-3/2"`;
//! frame indices are 1-based as in manifests.

use acmsol_core::acm::{alpha_beta as compute_alpha_beta, classify, AcmStructure};
use acmsol_core::curvature::{sectional_curvature, CurvaturePackage};
use acmsol_core::frame::Matrix3;
use acmsol_core::manifest::parse_manifest;
use acmsol_core::scalar::format_rational;
use acmsol_core::soliton::{riemann_soliton_residual, solve_lambda as core_solve_lambda};
use acmsol_core::suite::{run_suite, Suite};
use acmsol_core::{
    build_manifold, curvature_package, fixtures, koszul_connection, parse_rational, Bracket, Connection, FrameManifold,
    Rational, SolitonInstance, VectorField,
};
use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn triple(v: &[String]) -> PyResult<[Rational; 3]> {
    let parsed = v.iter().map(|s| parse_rational(s).map_err(value_error)).collect::<PyResult<Vec<_>>>()?;
    parsed.try_into().map_err(|_| PyValueError::new_err("expected 3 components"))
}

fn vector(v: &[String]) -> PyResult<VectorField> {
    triple(v).map(VectorField)
}

fn strings(v: &VectorField) -> Vec<String> {
    v.components().iter().map(format_rational).collect()
}

fn index(i: usize) -> PyResult<usize> {
    if (1..=3).contains(&i) {
        Ok(i - 1)
    } else {
        Err(PyIndexError::new_err(format!("frame index {i} out of range 1..=3")))
    }
}

/// A constant-structure frame with its Levi-Civita connection and curvature.
#[pyclass(frozen)]
struct Manifold {
    inner: FrameManifold,
    connection: Connection,
    curvature: CurvaturePackage,
}

impl Manifold {
    fn wrap(inner: FrameManifold) -> Self {
        let connection = koszul_connection(&inner);
        let curvature = curvature_package(&inner, &connection);
        Self { inner, connection, curvature }
    }

    fn structure(&self, phi: Vec<Vec<String>>, xi: Vec<String>) -> PyResult<AcmStructure> {
        let cols = phi.iter().map(|c| triple(c)).collect::<PyResult<Vec<_>>>()?;
        let cols: [[Rational; 3]; 3] = cols.try_into().map_err(|_| PyValueError::new_err("phi needs 3 columns"))?;
        Ok(AcmStructure::new(&self.inner, cols, vector(&xi)?, None))
    }
}

#[pymethods]
impl Manifold {
    /// `brackets` is a list of `(i, j, [c1, c2, c3])`; `metric` defaults to the identity.
    #[new]
    #[pyo3(signature = (brackets, metric=None))]
    fn new(brackets: Vec<(usize, usize, Vec<String>)>, metric: Option<Vec<Vec<String>>>) -> PyResult<Self> {
        let brackets = brackets
            .iter()
            .map(|(i, j, c)| Ok(Bracket::new(*i, *j, triple(c)?)))
            .collect::<PyResult<Vec<_>>>()?;
        let metric: Option<Matrix3> = match metric {
            Some(rows) => {
                let rows = rows.iter().map(|r| triple(r)).collect::<PyResult<Vec<_>>>()?;
                Some(rows.try_into().map_err(|_| PyValueError::new_err("metric needs 3 rows"))?)
            }
            None => None,
        };
        build_manifold(&brackets, metric).map(Self::wrap).map_err(value_error)
    }

    #[staticmethod]
    fn hyp3() -> Self {
        Self::wrap(fixtures::hyp3())
    }

    #[staticmethod]
    fn flat3() -> Self {
        Self::wrap(fixtures::flat3())
    }

    #[staticmethod]
    fn su2() -> Self {
        Self::wrap(fixtures::su2())
    }

    /// Components of `[e_i, e_j]`.
    fn bracket(&self, i: usize, j: usize) -> PyResult<Vec<String>> {
        Ok(strings(&self.inner.frame_bracket(index(i)?, index(j)?)))
    }

    /// Components of `∇_{e_i} e_j`.
    fn nabla(&self, i: usize, j: usize) -> PyResult<Vec<String>> {
        Ok(strings(&self.connection.frame_derivative(index(i)?, index(j)?)))
    }

    /// Nonzero `∇_{e_i} e_j`, one per clause.
    fn describe_connection(&self) -> String {
        self.connection.describe()
    }

    /// Components of `R(e_i, e_j) e_k`.
    fn riemann(&self, i: usize, j: usize, k: usize) -> PyResult<Vec<String>> {
        let e = |n| index(n).map(VectorField::basis);
        Ok(strings(&self.curvature.apply(&e(i)?, &e(j)?, &e(k)?)))
    }

    fn ricci(&self) -> Vec<Vec<String>> {
        (0..3).map(|i| (0..3).map(|j| format_rational(&self.curvature.ricci[[i, j]])).collect()).collect()
    }

    fn scalar_curvature(&self) -> String {
        format_rational(&self.curvature.scalar)
    }

    fn sectional(&self, u: Vec<String>, v: Vec<String>) -> PyResult<String> {
        sectional_curvature(&self.curvature, &self.inner, &vector(&u)?, &vector(&v)?)
            .map(|k| format_rational(&k))
            .map_err(value_error)
    }

    /// `(α, β)` for the structure with `φ(e_j) = phi[j-1]` and Reeb field `xi`.
    fn alpha_beta(&self, phi: Vec<Vec<String>>, xi: Vec<String>) -> PyResult<(String, String)> {
        let s = self.structure(phi, xi)?;
        let ab = compute_alpha_beta(&self.inner, &self.connection, &s);
        Ok((format_rational(&ab.alpha), format_rational(&ab.beta)))
    }

    /// One-line structure classification.
    fn classify(&self, phi: Vec<Vec<String>>, xi: Vec<String>) -> PyResult<String> {
        let s = self.structure(phi, xi)?;
        let ab = compute_alpha_beta(&self.inner, &self.connection, &s);
        Ok(classify(&self.inner, &self.connection, &self.curvature, &s, &ab).summary())
    }

    /// The `λ` making `(Z, λ)` a Riemann soliton, or `None`.
    fn solve_lambda(&self, z: Vec<String>) -> PyResult<Option<String>> {
        Ok(core_solve_lambda(&self.inner, &self.connection, &self.curvature, &vector(&z)?).map(|l| format_rational(&l)))
    }

    fn is_riemann_soliton(&self, z: Vec<String>, lambda: &str) -> PyResult<bool> {
        let inst = SolitonInstance { potential: vector(&z)?, lambda: parse_rational(lambda).map_err(value_error)? };
        Ok(riemann_soliton_residual(&self.inner, &self.connection, &self.curvature, &inst).is_zero())
    }
}

/// Runs a suite over a JSON manifest and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (manifest, suite="report", name=None))]
fn run_report(manifest: &str, suite: &str, name: Option<String>) -> PyResult<String> {
    let manifest = parse_manifest(manifest).map_err(value_error)?;
    let suite = match suite {
        "validate" => Suite::Validate,
        "connection" => Suite::Connection,
        "curvature" => Suite::Curvature,
        "acm" => Suite::Acm,
        "classify" => Suite::Classify,
        "identities" => Suite::Identities,
        "soliton" => Suite::Soliton { name },
        "gradient" => Suite::Gradient { name },
        "theorems" => Suite::Theorems,
        "report" => Suite::Report,
        other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
    };
    Ok(run_suite(&manifest, &suite).to_json())
}

#[pymodule]
fn acmsol(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Manifold>()?;
    m.add_function(wrap_pyfunction!(run_report, m)?)?;
    Ok(())
}
