use acmsol_core::acm::{alpha_beta, lemma_5_checks, normality_residual, structural_identities, validate_acm};
use acmsol_core::curvature::curvature_symmetry_violation;
use acmsol_core::frame::Matrix3;
use acmsol_core::operators::{divergence, hessian_from_gradient, lie_derivative_metric};
use acmsol_core::scalar::{frac, int};
use acmsol_core::soliton::{riemann_soliton_residual, solve_lambda};
use acmsol_core::tensor::DIM;
use acmsol_core::*;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn small_int() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn vector() -> impl Strategy<Value = VectorField> {
    [rational(), rational(), rational()].prop_map(VectorField)
}

/// `AᵀA + I` for a small integer `A`.
fn spd_metric() -> impl Strategy<Value = Matrix3> {
    prop::array::uniform9(-2i64..=2).prop_map(|a| {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let dot: i64 = (0..DIM).map(|k| a[3 * k + i] * a[3 * k + j]).sum();
                int(dot + i64::from(i == j))
            })
        })
    })
}

fn det(a: &Matrix3) -> Rational {
    &a[0][0] * (&a[1][1] * &a[2][2] - &a[1][2] * &a[2][1]) - &a[0][1] * (&a[1][0] * &a[2][2] - &a[1][2] * &a[2][0])
        + &a[0][2] * (&a[1][0] * &a[2][1] - &a[1][1] * &a[2][0])
}

fn inverse(a: &Matrix3) -> Matrix3 {
    let d = det(a);
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
            let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
            (&a[r0][c0] * &a[r1][c1] - &a[r0][c1] * &a[r1][c0]) / &d
        })
    })
}

/// Structure constants `c[i][j][k]` of a Lie algebra, rewritten in the basis
/// `e'_i = Σ_j a[i][j] e_j`.
fn change_basis(c: &[[[Rational; 3]; 3]; 3], a: &Matrix3) -> Vec<Bracket> {
    let inv = inverse(a);
    let mut out = Vec::new();
    for i in 0..DIM {
        for j in (i + 1)..DIM {
            let old: [Rational; 3] = std::array::from_fn(|m| {
                let mut s = Rational::zero();
                for k in 0..DIM {
                    for l in 0..DIM {
                        s += &a[i][k] * &a[j][l] * &c[k][l][m];
                    }
                }
                s
            });
            let coeffs = std::array::from_fn(|n| (0..DIM).map(|m| &old[m] * &inv[m][n]).sum());
            out.push(Bracket::new(i + 1, j + 1, coeffs));
        }
    }
    out
}

fn constants(pairs: &[(usize, usize, [Rational; 3])]) -> [[[Rational; 3]; 3]; 3] {
    let mut c: [[[Rational; 3]; 3]; 3] = Default::default();
    for (i, j, v) in pairs {
        for k in 0..DIM {
            c[*i][*j][k] = v[k].clone();
            c[*j][*i][k] = -v[k].clone();
        }
    }
    c
}

/// Unimodular (`[e2,e3] = n1 e1` and cyclic) or semidirect `R² ⋊ R`
/// algebras, in a random rational basis with a random metric.
fn lie_manifold() -> impl Strategy<Value = FrameManifold> {
    let unimodular = (small_int(), small_int(), small_int()).prop_map(|(a, b, c)| {
        constants(&[(1, 2, [int(a), int(0), int(0)]), (2, 0, [int(0), int(b), int(0)]), (0, 1, [int(0), int(0), int(c)])])
    });
    let semidirect = (small_int(), small_int(), small_int(), small_int())
        .prop_map(|(a, b, c, d)| constants(&[(0, 2, [int(a), int(b), int(0)]), (1, 2, [int(c), int(d), int(0)])]));
    let basis = prop::array::uniform9(-2i64..=2)
        .prop_map(|v| -> Matrix3 { std::array::from_fn(|i| std::array::from_fn(|j| int(v[3 * i + j]))) })
        .prop_filter("invertible", |a| !det(a).is_zero());
    (prop_oneof![unimodular, semidirect], basis, spd_metric())
        .prop_map(|(c, a, g)| build_manifold(&change_basis(&c, &a), Some(g)).expect("basis change preserves Jacobi"))
}

fn symmetric2() -> impl Strategy<Value = Tensor> {
    prop::array::uniform6(rational()).prop_map(|v| {
        let at = |i: usize, j: usize| {
            let (a, b) = (i.min(j), i.max(j));
            v[a * 3 + b - a * (a + 1) / 2].clone()
        };
        Tensor::covariant(2, |ix| at(ix[0], ix[1]))
    })
}

fn covariant(rank: usize) -> impl Strategy<Value = Tensor> {
    prop::collection::vec(rational(), DIM.pow(rank as u32)).prop_map(move |v| {
        let mut it = v.into_iter();
        Tensor::covariant(rank, |_| it.next().unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_frames_satisfy_curvature_identities(m in lie_manifold()) {
        prop_assert!(m.jacobi_violation().is_none());
        let conn = koszul_connection(&m);
        prop_assert!(conn.metric_compatibility_violation(&m).is_none());
        prop_assert!(conn.torsion_violation(&m).is_none());
        let pkg = curvature_package(&m, &conn);
        prop_assert_eq!(pkg.symmetry_violation(), None);
        prop_assert!(pkg.decomposition_residual(&m).is_zero());
        prop_assert!(pkg.ricci.is_symmetric());
        let g = m.metric_tensor();
        prop_assert_eq!(tensor_contract(&pkg.ricci, 0, 1, &m).unwrap().components()[0].clone(), pkg.scalar.clone());
        prop_assert_eq!(tensor_contract(&g, 0, 1, &m).unwrap().components()[0].clone(), int(3));
    }

    #[test]
    fn divergence_is_half_trace_of_lie_derivative(m in lie_manifold(), z in vector()) {
        let conn = koszul_connection(&m);
        let lie = lie_derivative_metric(&m, &conn, &z);
        let tr = tensor_contract(&lie, 0, 1, &m).unwrap();
        prop_assert_eq!(divergence(&conn, &z), &tr.components()[0] / int(2));
    }

    #[test]
    fn hessian_symmetrises_to_half_lie_derivative(m in lie_manifold(), v in vector()) {
        let conn = koszul_connection(&m);
        let h = hessian_from_gradient(&m, &conn, &v);
        let lie = lie_derivative_metric(&m, &conn, &v);
        prop_assert_eq!(&h.tensor + &h.tensor.transpose(), lie.clone());
        prop_assert_eq!(h.closed, h.tensor.is_symmetric());
        if h.closed {
            prop_assert_eq!(h.tensor, lie.scale(&frac(1, 2)));
        }
    }

    #[test]
    fn contraction_is_linear(m in lie_manifold(), a in covariant(3), b in covariant(3), k in rational()) {
        for (x, y) in [(0, 1), (0, 2), (1, 2)] {
            let lhs = tensor_contract(&(&a + &b.scale(&k)), x, y, &m).unwrap();
            let rhs = &tensor_contract(&a, x, y, &m).unwrap() + &tensor_contract(&b, x, y, &m).unwrap().scale(&k);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn norm_is_nonnegative(g in spd_metric(), t in covariant(2)) {
        let m = build_manifold(&[], Some(g)).unwrap();
        let n = tensor_norm_squared(&t, &m).unwrap();
        prop_assert!(!n.is_negative());
        prop_assert_eq!(n.is_zero(), t.is_zero());
    }

    #[test]
    fn kulkarni_nomizu_properties(a in symmetric2(), b in symmetric2(), g in spd_metric()) {
        let ab = kulkarni_nomizu(&a, &b).unwrap();
        prop_assert_eq!(&ab, &kulkarni_nomizu(&b, &a).unwrap());
        prop_assert_eq!(curvature_symmetry_violation(&ab), None);
        let m = build_manifold(&[], Some(g)).unwrap();
        let gt = m.metric_tensor();
        let gg = kulkarni_nomizu(&gt, &gt).unwrap();
        prop_assert_eq!(tensor_contract(&gg, 0, 3, &m).unwrap(), gt.scale(&int(4)));
    }

    #[test]
    fn solved_lambda_kills_residual(m in lie_manifold(), z in vector(), shift in rational()) {
        let conn = koszul_connection(&m);
        let pkg = curvature_package(&m, &conn);
        if let Some(lambda) = solve_lambda(&m, &conn, &pkg, &z) {
            let at = |l: Rational| riemann_soliton_residual(&m, &conn, &pkg, &SolitonInstance { potential: z.clone(), lambda: l });
            prop_assert!(at(lambda.clone()).is_zero());
            if !shift.is_zero() {
                prop_assert!(!at(&lambda + &shift).is_zero());
            }
        }
    }

    /// `[e1,e2] = p e3`, `[e1,e3] = a e1 + b e2`, `[e2,e3] = -b e1 + a e2`
    /// with `pa = 0`, metric `diag(k, k, 1)`, `ξ = e3`: normal for every
    /// parameter choice.
    #[test]
    fn random_normal_structures(a in rational(), b in rational(), p in rational(), k in 1i64..=4, p_wins in any::<bool>()) {
        let (a, p) = if p_wins { (Rational::zero(), p) } else { (a, Rational::zero()) };
        let z = Rational::zero();
        let m = build_manifold(
            &[
                Bracket::new(1, 2, [z.clone(), z.clone(), p]),
                Bracket::new(1, 3, [a.clone(), b.clone(), z.clone()]),
                Bracket::new(2, 3, [-b, a, z.clone()]),
            ],
            Some([[int(k), int(0), int(0)], [int(0), int(k), int(0)], [int(0), int(0), int(1)]]),
        )
        .unwrap();
        let s = AcmStructure::new(
            &m,
            [[int(0), int(-1), int(0)], [int(1), int(0), int(0)], [int(0), int(0), int(0)]],
            VectorField::basis(2),
            None,
        );
        prop_assert!(validate_acm(&m, &s).passed());
        prop_assert!(normality_residual(&m, &s).is_zero());
        let conn = koszul_connection(&m);
        let pkg = curvature_package(&m, &conn);
        let ab = alpha_beta(&m, &conn, &s);
        prop_assert!((&ab.alpha * &ab.beta).is_zero());
        let ids = structural_identities(&m, &conn, &pkg, &s, &ab);
        prop_assert!(ids.passed(), "{:#?}", ids);
        let lemma = lemma_5_checks(&m, &conn, &pkg, &s, &ab);
        prop_assert!(lemma.passed(), "{:#?}", lemma);
    }
}
