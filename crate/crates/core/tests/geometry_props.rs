use num_traits::{One, Zero};
use proptest::prelude::*;

use octic_core::algebra::linalg::{dot, rank, rref};
use octic_core::algebra::parse::parse_param_poly;
use octic_core::algebra::Var;
use octic_core::arrangement::{integer_planes, Arrangement};
use octic_core::involution::{
    classify_twist, compose_linear, fixed_locus, is_eigenvector, octic_invariance, symplectic_lambda, FixedLocus,
    WeightedMap,
};
use octic_core::{PMatrix, QMatrix, QPoly, QRatFunc, Rat};

fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn normal() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-2i64..=2).prop_filter("nonzero", |n| n.iter().any(|c| *c != 0))
}

/// Eight planes with small integer normals; duplicates are rejected later.
fn planes() -> impl Strategy<Value = Vec<[i64; 4]>> {
    prop::collection::vec(normal(), 8)
}

fn build(rows: &[[i64; 4]]) -> Option<Arrangement> {
    Arrangement::new("random", integer_planes(rows), None).ok()
}

fn qmatrix(rows: [[i64; 4]; 4]) -> QMatrix {
    QMatrix::from_rows(rows.map(|r| r.map(rat)))
}

fn lift(m: &QMatrix) -> PMatrix {
    m.map(|e| QPoly::constant(e.clone()))
}

fn invertible() -> impl Strategy<Value = QMatrix> {
    prop::array::uniform4(prop::array::uniform4(-3i64..=3))
        .prop_map(qmatrix)
        .prop_filter("invertible", |m| !m.det().is_zero())
}

/// A permutation matrix times an invertible diagonal one; keeps composed
/// octics sparse.
fn monomial() -> impl Strategy<Value = QMatrix> {
    let entry = prop::sample::select(vec![-2i64, -1, 1, 3]);
    (Just(vec![0usize, 1, 2, 3]).prop_shuffle(), prop::array::uniform4(entry)).prop_map(|(perm, d)| {
        let mut rows = [[0i64; 4]; 4];
        for (i, &j) in perm.iter().enumerate() {
            rows[i][j] = d[i];
        }
        qmatrix(rows)
    })
}

fn inverse(m: &QMatrix) -> QMatrix {
    let rows: Vec<Vec<Rat>> = (0..4)
        .map(|i| {
            let mut r: Vec<Rat> = m.rows()[i].to_vec();
            r.extend((0..4).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let (reduced, _) = rref(&rows);
    let inv: [[Rat; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| reduced[i][4 + j].clone()));
    QMatrix::from_rows(inv)
}

fn point(v: &[Rat; 4]) -> [Rat; 7] {
    std::array::from_fn(|i| if i < 4 { v[i].clone() } else { Rat::zero() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn singular_lines_cut_degree_eight(rows in planes()) {
        let Some(arr) = build(&rows) else { return Ok(()) };
        let strata = arr.singular_strata().unwrap();
        for line in &strata.lines {
            let div = arr.restrict_to_line(&line.basis[0], &line.basis[1]).unwrap();
            prop_assert_eq!(div.contained_in.clone(), line.planes.clone());
            prop_assert_eq!(div.degree() + div.contained_in.len(), 8);
        }
    }

    #[test]
    fn strata_list_exactly_the_incident_planes(rows in planes()) {
        let Some(arr) = build(&rows) else { return Ok(()) };
        let normals = arr.normals().unwrap();
        let strata = arr.singular_strata().unwrap();
        for line in &strata.lines {
            let through: Vec<usize> = (0..8)
                .filter(|&i| line.basis.iter().all(|b| dot(&normals[i], b).is_zero()))
                .collect();
            prop_assert_eq!(&through, &line.planes);
            prop_assert!(through.len() >= 2);
        }
        for p in &strata.points {
            let through: Vec<usize> = (0..8).filter(|&i| dot(&normals[i], &p.point).is_zero()).collect();
            prop_assert_eq!(&through, &p.planes);
            let on_triple = strata
                .lines
                .iter()
                .any(|l| l.multiplicity() >= 3 && l.planes.iter().all(|i| p.planes.contains(i)));
            prop_assert_eq!(on_triple, p.on_triple_line);
        }
    }

    #[test]
    fn strata_ignore_plane_order(rows in planes(), perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle()) {
        let Some(arr) = build(&rows) else { return Ok(()) };
        let permuted: Vec<[i64; 4]> = perm.iter().map(|&i| rows[i]).collect();
        let other = build(&permuted).unwrap();
        let a = arr.singular_strata().unwrap();
        let b = other.singular_strata().unwrap();
        prop_assert_eq!(a.signature(), b.signature());
        prop_assert_eq!(arr.admissibility().unwrap().passes(), other.admissibility().unwrap().passes());
        for line in &b.lines {
            let mut back: Vec<usize> = line.planes.iter().map(|&i| perm[i]).collect();
            back.sort_unstable();
            let found = a.lines.iter().find(|l| l.basis == line.basis);
            prop_assert_eq!(found.map(|l| l.planes.clone()), Some(back));
        }
    }

    #[test]
    fn admissible_means_no_heavy_strata(rows in planes()) {
        let Some(arr) = build(&rows) else { return Ok(()) };
        let strata = arr.singular_strata().unwrap();
        let heavy = strata.lines.iter().any(|l| l.multiplicity() >= 4)
            || strata.points.iter().any(|p| p.multiplicity() >= 6);
        prop_assert_eq!(arr.admissibility().unwrap().passes(), !heavy);
    }

    #[test]
    fn lambda_ignores_weighted_rescaling(m in invertible(), u in 1i64..=9, neg in any::<bool>(), r in 1i64..=5) {
        let u = if neg { -u } else { u };
        let w = WeightedMap::new(lift(&m), QPoly::from_i64(u)).unwrap();
        let r = Rat::new(r.into(), 3.into());
        prop_assert_eq!(symplectic_lambda(&w.rescale(&r)), symplectic_lambda(&w));
        prop_assert_eq!(symplectic_lambda(&w.rescale(&-r)), symplectic_lambda(&w));
    }

    #[test]
    fn fixed_locus_is_pointwise_fixed(p in invertible(), signs in prop::array::uniform4(any::<bool>())) {
        prop_assume!(signs.iter().any(|s| *s) && signs.iter().any(|s| !*s));
        let d = QMatrix::diagonal(signs.map(|s| if s { rat(1) } else { rat(-1) }));
        let n = p.mul(&d).mul(&inverse(&p));
        prop_assert!(n.mul(&n).is_identity());
        let locus = fixed_locus(&n).unwrap();
        for comp in locus.components() {
            for v in &comp {
                prop_assert!(is_eigenvector(&n, v));
            }
        }
        let all: Vec<Vec<Rat>> = locus.components().concat().iter().map(|v| v.to_vec()).collect();
        prop_assert_eq!(rank(&all), 4);
        match &locus {
            FixedLocus::TwoLines { plus, minus } => {
                let plus_count = signs.iter().filter(|s| **s).count();
                prop_assert_eq!(plus_count, 2);
                prop_assert_eq!(rank(&plus.iter().map(|v| v.to_vec()).collect::<Vec<_>>()), 2);
                prop_assert_eq!(rank(&minus.iter().map(|v| v.to_vec()).collect::<Vec<_>>()), 2);
            }
            FixedLocus::PointPlane { plane, plane_basis, .. } => {
                for v in plane_basis {
                    prop_assert!(dot(plane, v).is_zero());
                }
            }
        }
    }

    #[test]
    fn symmetric_arrangements_have_kappa_squared_one(half in prop::collection::vec(normal(), 4)) {
        // the involution x <-> y, z <-> t, and each plane paired with its image
        let swap = |h: [i64; 4]| [h[1], h[0], h[3], h[2]];
        let rows: Vec<[i64; 4]> = half.iter().flat_map(|&h| [h, swap(h)]).collect();
        let Some(arr) = build(&rows) else { return Ok(()) };
        let m = qmatrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]);
        let report = octic_invariance(&arr, &lift(&m), None).unwrap();
        let kappa = report.kappa.as_constant().expect("constant ratio");
        prop_assert_eq!(&kappa * &kappa, rat(1));
    }
}

// Expanding an octic is costly in debug builds.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn octic_vanishes_on_singular_lines(rows in planes()) {
        let Some(arr) = build(&rows) else { return Ok(()) };
        let f = arr.octic();
        for line in &arr.singular_strata().unwrap().lines {
            let [p, q] = &line.basis;
            let mid: [Rat; 4] = std::array::from_fn(|i| &p[i] + &q[i] * rat(3));
            for v in [p, q, &mid] {
                prop_assert!(f.eval(&point(v)).is_zero());
                // a double root: every partial derivative vanishes too
                for var in Var::COORDS {
                    prop_assert!(f.derivative(var).eval(&point(v)).is_zero());
                }
            }
        }
    }

    #[test]
    fn twisting_there_and_back_is_a_square(
        rows in planes(),
        m in monomial(),
        coeffs in prop::collection::vec((0u32..=2, 0u32..=2, -3i64..=3), 1..4),
    ) {
        let Some(arr) = build(&rows) else { return Ok(()) };
        let terms: Vec<String> = coeffs.iter().map(|(i, j, c)| format!("({c})*A^{i}*B^{j}")).collect();
        let c = parse_param_poly(&terms.join(" + ")).unwrap();
        prop_assume!(!c.is_zero());
        let f = arr.octic();
        let inv = inverse(&m);
        // f_dst = c * f(M^-1 x), so f_dst(M x) = c f(x)
        let f_dst = &compose_linear(&f, &lift(&inv)) * &c;
        let one = QPoly::one();
        let there = classify_twist(&f, &f_dst, &lift(&m), &one).unwrap();
        let back = classify_twist(&f_dst, &f, &lift(&inv), &one).unwrap();
        prop_assert_eq!(&there.class, &back.class);
        prop_assert_eq!(there.mu, QRatFunc::from_poly(c));
    }
}
