use bicentric_core::bicentric::modified_sylvester;
use bicentric_core::chordal::robbins_polynomial;
use bicentric_core::linkage::{elementary_symmetric, tangent_lengths};
use bicentric_core::oracle::{
    circumcircle_fit, euler_triple, incircle_fit, reconstruct_cyclic, reconstruct_tangential, shoelace_area,
};
use bicentric_core::quad;
use bicentric_core::roots::{count_distinct_roots, real_roots, Domain};
use bicentric_core::tangential::{arctan_inradius, pentagon_inradii};
use bicentric_core::{to_f64, Linkage, Poly, Rational, TangentLengths};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn eighths(v: &[u32]) -> Vec<Rational> {
    v.iter().map(|&k| Rational::new(k.into(), 8.into())).collect()
}

/// Pentagon sides generated from positive tangent lengths in eighths.
fn tangential_pentagon() -> impl Strategy<Value = (Vec<Rational>, Linkage)> {
    prop::collection::vec(1u32..800, 5).prop_map(|k| {
        let t = eighths(&k);
        let sides = (0..5).map(|j| &t[j] + &t[(j + 1) % 5]).collect();
        (t, Linkage::new(sides).unwrap())
    })
}

fn odd_linkage() -> impl Strategy<Value = Linkage> {
    prop::sample::select(vec![3usize, 5, 7, 9])
        .prop_flat_map(|n| prop::collection::vec(1i64..200, n))
        .prop_map(|v| Linkage::from_integers(&v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn tangent_lengths_solve_the_circulant_system(l in odd_linkage()) {
        let t = tangent_lengths(&l).unwrap();
        prop_assert!(t.residuals(&l).iter().all(Zero::is_zero));
    }

    #[test]
    fn tangent_lengths_recover_their_source((t, l) in tangential_pentagon()) {
        let got = tangent_lengths(&l).unwrap();
        prop_assert_eq!(got.values(), t.as_slice());
    }

    #[test]
    fn tangent_lengths_rotate_and_scale(l in odd_linkage(), k in 0usize..9, num in 1i64..50, den in 1i64..50) {
        let n = l.n();
        let t = tangent_lengths(&l).unwrap();
        let rotated = tangent_lengths(&l.rotated(k)).unwrap();
        for j in 0..n {
            prop_assert_eq!(&rotated.values()[j], &t.values()[(j + k) % n]);
        }
        let lambda = Rational::new(num.into(), den.into());
        let scaled = tangent_lengths(&l.scaled(&lambda).unwrap()).unwrap();
        for (s, v) in scaled.values().iter().zip(t.values()) {
            prop_assert_eq!(s, &(v * &lambda));
        }
    }

    #[test]
    fn symmetric_functions_match_subset_sums(v in prop::collection::vec(-30i64..30, 1..=6)) {
        let values: Vec<Rational> = v.iter().map(|&x| Rational::from_integer(x.into())).collect();
        let e = elementary_symmetric(&values);
        let n = values.len();
        for k in 1..=n {
            let brute = (0u32..1 << n)
                .filter(|mask| mask.count_ones() as usize == k)
                .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| values[i].clone()).product::<Rational>())
                .fold(Rational::zero(), |a, b| a + b);
            prop_assert_eq!(e.get(k), brute);
        }
    }

    #[test]
    fn biquadratic_and_arctan_agree((t, _) in tangential_pentagon()) {
        let t = TangentLengths::new(t);
        let pair = pentagon_inradii(&t).unwrap();
        prop_assert!(rel(pair.r_convex, arctan_inradius(&t, 1).unwrap()) < 1e-9);
        prop_assert!(rel(pair.r_star, arctan_inradius(&t, 2).unwrap()) < 1e-9);
    }

    #[test]
    fn modified_sylvester_roots_are_sixteen_area_squared((t, l) in tangential_pentagon()) {
        let t = TangentLengths::new(t);
        let pair = pentagon_inradii(&t).unwrap();
        let p = l.semiperimeter();
        let (big, small) = modified_sylvester(&t, &p).unwrap().roots().unwrap();
        let pf = to_f64(&p);
        prop_assert!(rel(big, 16.0 * (pair.r_convex * pf).powi(2)) < 1e-9);
        prop_assert!(rel(small, 16.0 * (pair.r_star * pf).powi(2)) < 1e-9);
    }

    #[test]
    fn inradii_are_homogeneous((t, _) in tangential_pentagon(), lambda in 1u32..20) {
        let base = pentagon_inradii(&TangentLengths::new(t.clone())).unwrap();
        let factor = Rational::from_integer(lambda.into());
        let scaled = pentagon_inradii(&TangentLengths::new(t.iter().map(|x| x * &factor).collect())).unwrap();
        prop_assert!(rel(scaled.r_convex, f64::from(lambda) * base.r_convex) < 1e-12);
        prop_assert!(rel(scaled.r_star, f64::from(lambda) * base.r_star) < 1e-12);
    }

    #[test]
    fn tangential_round_trip((t, l) in tangential_pentagon(), winding in 1u32..=2) {
        let t = TangentLengths::new(t);
        let tf = t.to_f64();
        let r = arctan_inradius(&t, winding).unwrap();
        let rebuilt = reconstruct_tangential(&tf, r, winding).unwrap();
        let perimeter = to_f64(&l.perimeter());
        prop_assert!(rebuilt.closure_residual <= 1e-9 * perimeter);
        let fit = incircle_fit(&rebuilt.configuration);
        prop_assert!(rel(fit.circle.radius, r) < 1e-8);
        prop_assert!(fit.circle.center.x.hypot(fit.circle.center.y) < 1e-8 * r.max(1.0));
        prop_assert!(rel(shoelace_area(&rebuilt.configuration), r * perimeter / 2.0) < 1e-8);
    }

    #[test]
    fn cyclic_round_trip(sides in prop::collection::vec(5.0f64..10.0, 5)) {
        let (config, circle) = reconstruct_cyclic(&sides, 1).unwrap();
        prop_assert!(circumcircle_fit(&config).residual <= 1e-9 * circle.radius);
        for (got, want) in config.side_lengths().iter().zip(&sides) {
            prop_assert!(rel(*got, *want) < 1e-9);
        }
    }

    #[test]
    fn sturm_count_matches_isolated_roots(c in prop::collection::vec(-20i64..20, 2..8)) {
        let p = Poly::from_integers_descending(&c);
        prop_assume!(p.degree().unwrap_or(0) > 0);
        for domain in [Domain::all(), Domain::positive()] {
            let roots = real_roots(&p, &domain, 1e-12);
            prop_assert_eq!(roots.len(), count_distinct_roots(&p, &domain));
            for r in &roots.roots {
                prop_assert!(r.is_exact() || p.sign_at(&r.lower) != p.sign_at(&r.upper) || r.multiplicity % 2 == 0);
            }
        }
    }

    #[test]
    fn robbins_coefficients_scale(v in prop::collection::vec(1i64..30, 5), lambda in 2i64..5) {
        let sides: Vec<Rational> = v.iter().map(|&x| Rational::from_integer(x.into())).collect();
        let factor = Rational::from_integer(lambda.into());
        let scaled: Vec<Rational> = sides.iter().map(|a| a * &factor).collect();
        let a = robbins_polynomial(&sides).unwrap().coefficients();
        let b = robbins_polynomial(&scaled).unwrap().coefficients();
        let mut power = Rational::one();
        let step = factor.pow(4);
        for (x, y) in a.iter().zip(&b) {
            prop_assert_eq!(&(x * &power), y);
            power *= &step;
        }
    }

    #[test]
    fn euler_relation(a in 1.0f64..100.0, b in 1.0f64..100.0, c in 1.0f64..100.0) {
        prop_assume!(a < b + c && b < a + c && c < a + b);
        let e = euler_triple(a, b, c).unwrap();
        prop_assert!(e.relative_defect() < 1e-9);
    }

    #[test]
    fn pitot_quads_have_ordered_inradii(a in 1i64..40, b in 1i64..40, c in 1i64..40) {
        let d = a + c - b;
        prop_assume!(d > 0);
        let l = Linkage::from_integers(&[a, b, c, d]).unwrap();
        prop_assume!(l.closable().is_ok());
        let report = quad::quad_report(&l).unwrap();
        prop_assert!(report.pitot);
        let (lo, hi) = (report.r_min.unwrap(), report.r_max.unwrap());
        prop_assert!(lo <= hi && hi > 0.0);
        prop_assert_eq!(quad::is_kite(&l.rotated(1)).unwrap(), report.is_kite);
        if report.is_kite {
            prop_assert_eq!(lo, 0.0);
        }
    }
}
