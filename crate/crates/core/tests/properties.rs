use harmonic_core::bounds::{coeff_bound_b, envelope, Quantity};
use harmonic_core::maps::{alexander_lift, extremal_map, member_rng, MemberRecipe, PolarGrid};
use harmonic_core::series::{quadratic_tail, TruncatedSeries};
use harmonic_core::Complex64;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(coeff(), order + 1).prop_map(|c| TruncatedSeries::new(c).unwrap())
}

fn close(a: &TruncatedSeries, b: &TruncatedSeries, tol: f64) -> bool {
    a.max_coeff_diff(b) <= tol
}

proptest! {
    #[test]
    fn ring_axioms(a in series(12), b in series(12), c in series(12)) {
        prop_assert!(close(&(&a + &b), &(&b + &a), 0.0));
        prop_assert!(close(&(&a * &b), &(&b * &a), 1e-12));
        prop_assert!(close(&(&(&a * &b) * &c), &(&a * &(&b * &c)), 1e-9));
        prop_assert!(close(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)), 1e-10));
        prop_assert!(close(&(&a - &a), &TruncatedSeries::zero(12), 0.0));
    }

    #[test]
    fn derivative_inverts_antiderivative(a in series(20)) {
        prop_assert!(close(&a.antiderivative0().derivative(), &a, 1e-13));
    }

    #[test]
    fn reciprocal_inverts(rest in series(15), c0 in (0.5..2.0f64, 0.0..std::f64::consts::TAU)) {
        let mut coeffs = rest.coeffs().to_vec();
        coeffs[0] = Complex64::from_polar(c0.0, c0.1);
        let a = TruncatedSeries::new(coeffs).unwrap();
        let prod = &a * &a.reciprocal().unwrap();
        // coefficients of the inverse can grow geometrically, so compare relative to them
        let scale = a.reciprocal().unwrap().coeffs().iter().map(|c| c.norm()).fold(1.0, f64::max);
        prop_assert!(close(&prod, &TruncatedSeries::constant(Complex64::new(1.0, 0.0), 15), 1e-12 * scale * 8.0));
    }

    #[test]
    fn evaluate_matches_power_sum(a in series(30), r in 0.0..0.9f64, t in 0.0..6.3f64) {
        let z = Complex64::from_polar(r, t);
        let direct: Complex64 = a.coeffs().iter().enumerate().map(|(n, c)| c * z.powu(n as u32)).sum();
        let v = a.evaluate(z, 0.9).unwrap();
        prop_assert!((v.value - direct).norm() <= 1e-12);
    }

    #[test]
    fn tail_bound_covers_koebe_remainder(order in 8usize..200, r in 0.05..0.9f64) {
        // k(z) = z/(1-z)^2, coefficients n
        let k = TruncatedSeries::from_fn(order, |n| Complex64::new(n as f64, 0.0));
        let exact = r / (1.0 - r).powi(2);
        let v = k.evaluate(Complex64::new(r, 0.0), 0.9).unwrap();
        prop_assert!((exact - v.value.re) <= v.tail_bound * (1.0 + 1e-9) + 1e-12);
        prop_assert!(quadratic_tail(order, r) >= 0.0);
    }

    #[test]
    fn envelopes_are_ordered(alpha in 0.0..0.99f64, r in 0.0..0.9f64) {
        for q in Quantity::ALL {
            let e = envelope(q, alpha, r).unwrap();
            prop_assert!(e.lower >= 0.0);
            prop_assert!(e.lower <= e.upper * (1.0 + 1e-12), "{q} at alpha {alpha}, r {r}");
        }
    }

    #[test]
    fn upper_envelopes_grow_with_r(alpha in 0.0..0.99f64, r in 0.0..0.85f64, dr in 1e-4..0.05f64) {
        for q in Quantity::ALL {
            if q == Quantity::Jacobian && r < alpha {
                // the inner branch is not claimed monotone
                continue;
            }
            let a = envelope(q, alpha, r).unwrap().upper;
            let b = envelope(q, alpha, r + dr).unwrap().upper;
            prop_assert!(b >= a * (1.0 - 1e-12), "{q}: {a} then {b}");
        }
    }

    #[test]
    fn seams_are_continuous(alpha in 0.05..0.9f64) {
        for q in [Quantity::GDeriv, Quantity::GGrowth, Quantity::Jacobian] {
            let at = envelope(q, alpha, alpha).unwrap();
            let near = envelope(q, alpha, alpha * (1.0 - 1e-12)).unwrap();
            prop_assert!((at.lower - near.lower).abs() <= 1e-9 * (1.0 + at.lower));
            prop_assert!((at.upper - near.upper).abs() <= 1e-9 * at.upper);
        }
    }

    #[test]
    fn coefficient_bound_specializes(alpha in 0.0..0.99f64, n in 3usize..400) {
        let b = coeff_bound_b(n, alpha).unwrap();
        let nf = n as f64;
        prop_assert!((b.bound - (alpha + ((nf - alpha * alpha) * (nf - 1.0)).sqrt())).abs() <= 1e-12 * nf);
        prop_assert!(b.strict_cap == nf);
        // at alpha = 0 the bound reduces to sqrt(n (n - 1)) < n
        let b0 = coeff_bound_b(n, 0.0).unwrap();
        prop_assert!((b0.bound - (nf * (nf - 1.0)).sqrt()).abs() <= 1e-12 * nf);
    }

    #[test]
    fn extremal_members_satisfy_class_conditions(zeta in 0.0..0.95f64, r in 0.01..0.9f64, t in 0.0..6.3f64) {
        let m = extremal_map(zeta, 256).unwrap();
        prop_assert!(m.alpha() < 1.0);
        let z = Complex64::from_polar(r, t);
        let s = m.sample(z).unwrap();
        prop_assert!(s.jacobian().value.re > 0.0);
        prop_assert!(s.g.value.norm() < s.h.value.norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_members_satisfy_class_conditions(seed in any::<u64>(), r in 0.01..0.9f64, t in 0.0..6.3f64) {
        let grid = PolarGrid::new(8, 24, 0.9);
        let (_, m) = MemberRecipe::draw_member(&mut member_rng(seed, 0), 256, &grid).unwrap();
        prop_assert!(m.alpha() < 1.0);
        let z = Complex64::from_polar(r, t);
        let s = m.sample(z).unwrap();
        let j = s.jacobian();
        prop_assert!(j.value.re > -j.tail_bound);
        prop_assert!(s.g.value.norm() < s.h.value.norm() + s.g.tail_bound + s.h.tail_bound);

        let lifted = alexander_lift(&m, &grid).unwrap();
        for n in 1..=m.order() {
            let want = lifted.g().coeff(n) * n as f64;
            prop_assert!((m.g().coeff(n) - want).norm() <= 1e-12 * n as f64 * (1.0 + want.norm()));
        }
    }
}
