//! Built-in reference instances.
//!
//! * `HYP3`: `[e1,e3] = -e1`, `[e2,e3] = -e2`, identity metric, with
//!   `φe1 = -e2, φe2 = e1, φe3 = 0, ξ = e3`. Hyperbolic 3-space as a
//!   solvable group; α-Kenmotsu type with α = -1.
//! * `FLAT3`: abelian, identity metric, standard structure; cosymplectic.
//! * `SU2`: `[e1,e2] = 2e3`, `[e2,e3] = 2e1`, `[e3,e1] = 2e2`, identity
//!   metric, `φe1 = e2, φe2 = -e1, ξ = e3`; β-Sasakian with β = 1.

use crate::acm::AcmStructure;
use crate::frame::{build_manifold, Bracket, FrameManifold, VectorField};
use crate::scalar::{int, Rational};

fn ints(a: i64, b: i64, c: i64) -> [Rational; 3] {
    [int(a), int(b), int(c)]
}

pub fn hyp3() -> FrameManifold {
    build_manifold(
        &[Bracket::new(1, 3, ints(-1, 0, 0)), Bracket::new(2, 3, ints(0, -1, 0))],
        None,
    )
    .expect("HYP3 is a valid frame")
}

pub fn flat3() -> FrameManifold {
    build_manifold(&[], None).expect("FLAT3 is a valid frame")
}

pub fn su2() -> FrameManifold {
    build_manifold(
        &[
            Bracket::new(1, 2, ints(0, 0, 2)),
            Bracket::new(2, 3, ints(2, 0, 0)),
            Bracket::new(3, 1, ints(0, 2, 0)),
        ],
        None,
    )
    .expect("SU2 is a valid frame")
}

/// `φe1 = -e2, φe2 = e1, φe3 = 0, ξ = e3`.
pub fn hyp3_structure(m: &FrameManifold) -> AcmStructure {
    AcmStructure::new(m, [ints(0, -1, 0), ints(1, 0, 0), ints(0, 0, 0)], VectorField(ints(0, 0, 1)), None)
}

pub fn flat3_structure(m: &FrameManifold) -> AcmStructure {
    hyp3_structure(m)
}

/// `φe1 = e2, φe2 = -e1, φe3 = 0, ξ = e3`.
pub fn su2_structure(m: &FrameManifold) -> AcmStructure {
    AcmStructure::new(m, [ints(0, 1, 0), ints(-1, 0, 0), ints(0, 0, 0)], VectorField(ints(0, 0, 1)), None)
}

/// `(name, manifold, structure)` for each built-in.
pub fn all() -> Vec<(&'static str, FrameManifold, AcmStructure)> {
    let h = hyp3();
    let f = flat3();
    let s = su2();
    vec![
        ("HYP3", h.clone(), hyp3_structure(&h)),
        ("FLAT3", f.clone(), flat3_structure(&f)),
        ("SU2", s.clone(), su2_structure(&s)),
    ]
}

/// Heisenberg frame `[e1,e2] = e3`; with the SU2-style structure it is
/// β-Sasakian but neither Einstein nor of constant curvature.
pub fn heis3() -> FrameManifold {
    build_manifold(&[Bracket::new(1, 2, ints(0, 0, 1))], None).expect("Heisenberg frame is valid")
}
