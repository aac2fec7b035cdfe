use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use shiftfact::apsum::{ap_sum, APSumArgs, Method};
use shiftfact::detform::{det_oracle, DetKind, DeterminantSpec, NodeSet};
use shiftfact::numkernel::{c64, relative_residual, ExactRational};
use shiftfact::rmtpdd::{determinant_closed, integer_moment, phi_matrix, Ensemble, EnsembleSpec, Parity};
use shiftfact::sfact::{sf_int, sf_product};

fn rational() -> impl Strategy<Value = ExactRational> {
    (-24i64..=24, 1i64..=6).prop_map(|(p, q)| ExactRational::new(BigInt::from(p), BigInt::from(q)))
}

fn nonzero_rational() -> impl Strategy<Value = ExactRational> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

fn q(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

proptest! {
    #[test]
    fn product_recursion(z in rational(), s in rational(), n in 0u32..10) {
        let next = sf_product(&z, &s, n + 1);
        prop_assert_eq!(next, sf_product(&z, &s, n) * (z.clone() + q(n as i64) * s.clone()));
    }

    #[test]
    fn zero_shift_is_a_power(z in rational(), n in 0u32..10) {
        prop_assert_eq!(sf_product(&z, &q(0), n), (0..n).fold(ExactRational::one(), |acc, _| acc * z.clone()));
    }

    #[test]
    fn index_addition(z in rational(), s in nonzero_rational(), t in -5i64..=5, r in -5i64..=5) {
        let shifted = z.clone() + q(t) * s.clone();
        let parts = sf_int(&z, &s, t).and_then(|a| Ok(a * sf_int(&shifted, &s, r)?));
        let whole = sf_int(&z, &s, t + r);
        if let (Ok(parts), Ok(whole)) = (parts, whole) {
            prop_assert_eq!(parts, whole);
        }
    }

    #[test]
    fn progression_sum_routes_agree(a in rational(), s in nonzero_rational(), flip in any::<bool>(), p in 0u32..=6, n in 1u32..=12) {
        let r = if flip { -s.clone() } else { s.clone() };
        let args = APSumArgs::new(a, r, s, p, n).unwrap();
        let direct = ap_sum(&args, Method::Direct).unwrap();
        prop_assert_eq!(&ap_sum(&args, Method::Recurrence).unwrap(), &direct);
        prop_assert_eq!(&ap_sum(&args, Method::Closed).unwrap(), &direct);
    }

    #[test]
    fn shifted_determinant_is_exact(raw in prop::collection::btree_set(-30i64..=30, 1..=5), s in nonzero_rational()) {
        let nodes: Vec<ExactRational> = raw.into_iter().map(|v| ExactRational::new(BigInt::from(v), BigInt::from(3))).collect();
        let spec = DeterminantSpec::new(DetKind::SShifted, s);
        let (closed, oracle) = spec.evaluate_exact(&NodeSet::new(nodes).unwrap()).unwrap();
        prop_assert_eq!(closed, oracle);
    }

    #[test]
    fn two_set_determinant_matches_lu(
        z in prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 2..=5),
        shift in (0.3f64..1.5, -0.5f64..0.5),
    ) {
        let n = z.len();
        let nodes: Vec<_> = z.iter().map(|&(re, im)| c64(re, im)).collect();
        let w: Vec<_> = z.iter().map(|&(re, im)| c64(0.5 * im - 1.0, re + 0.3)).collect();
        let separated = |v: &[num_complex::Complex64]| (0..n).all(|i| (0..i).all(|j| (v[i] - v[j]).norm() > 0.1));
        prop_assume!(separated(&nodes) && separated(&w));
        let spec = DeterminantSpec::new(DetKind::TwoSetSymmetric, c64(shift.0, shift.1)).with_w(NodeSet::new(w).unwrap());
        let nodes = NodeSet::new(nodes).unwrap();
        let closed = spec.det_closed(&nodes).unwrap();
        let extended = spec.det_extended(&nodes).unwrap();
        prop_assert!(relative_residual(&closed, &extended, 0.0) < 1e-10, "{} vs {}", closed, extended);
    }

    #[test]
    fn hermite_checkerboard(n in 1usize..=6, s in 0.6f64..4.0, im in -1.0f64..1.0) {
        let ens = EnsembleSpec::new(Ensemble::Hermite, n).unwrap();
        let s = c64(s, im);
        for parity in Parity::BOTH {
            let (closed, _) = determinant_closed(&ens, s, parity).unwrap();
            let lu = det_oracle(&phi_matrix(&ens, s, parity).unwrap());
            prop_assert!(relative_residual(&closed, &lu, 1e-300) < 1e-9, "n={} {:?}: {} vs {}", n, parity, closed, lu);
            if parity == Parity::Minus && n % 2 == 1 {
                prop_assert_eq!(closed, c64(0.0, 0.0));
            }
        }
    }

    #[test]
    fn total_probability(n in 1usize..=5, alpha in -0.5f64..3.0, lambda in -0.4f64..3.0, ab in -0.8f64..3.0) {
        for kind in [Ensemble::Hermite, Ensemble::Laguerre { alpha }, Ensemble::Gegenbauer { lambda }, Ensemble::Jacobi { a: ab, b: 1.0 - ab / 2.0 }] {
            let total = integer_moment(&EnsembleSpec::new(kind, n).unwrap(), 0).unwrap();
            prop_assert!((total - 1.0).abs() < 1e-10, "{}: {}", kind, total);
        }
    }
}
