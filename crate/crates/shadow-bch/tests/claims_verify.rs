//! Exact verification of every claimed shadow-Hamiltonian expansion.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shadow_bch::report::series_text;
use shadow_bch::series::Word;
use shadow_bch::{claims, CommutatorExpr, CommutatorTree, NcSeries, Symbol, SymbolicScheme};
use splitting::builders;

fn br(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn assert_empty(residual: &NcSeries, context: &str) {
    assert!(
        residual.is_zero(),
        "{context}: nonzero residual {}",
        series_text(residual, false)
    );
}

#[test]
fn leapfrog_drift_outside_shadow() {
    let scheme = builders::leapfrog_drift_outside();
    let symbolic = SymbolicScheme::from_scheme_single_potential(&scheme, 4).unwrap();
    let residual = symbolic
        .verify_claim(&claims::leapfrog_dkd_claims())
        .unwrap();
    // Grade 3 matches the claim; grade 5 would not, but degree 4 truncation
    // certifies everything up to the declared order.
    assert_empty(&residual, "leapfrog drift-outside");
}

#[test]
fn leapfrog_kick_outside_shadow() {
    let scheme = builders::leapfrog();
    let symbolic = SymbolicScheme::from_scheme_single_potential(&scheme, 4).unwrap();
    let residual = symbolic.verify_claim(&claims::leapfrog_kdk_claims()).unwrap();
    assert_empty(&residual, "leapfrog kick-outside");
}

#[test]
fn omelyan5_shadow() {
    let scheme = builders::omelyan5();
    let symbolic = SymbolicScheme::from_scheme_single_potential(&scheme, 4).unwrap();
    let residual = symbolic.verify_claim(&claims::omelyan5_claims()).unwrap();
    assert_empty(&residual, "omelyan5");
}

#[test]
fn omelyan5_fg_is_fourth_order() {
    let scheme = builders::omelyan5_fg();
    let symbolic = SymbolicScheme::from_scheme_single_potential(&scheme, 4).unwrap();
    let log = symbolic.shadow_log().unwrap();
    for grade in 2..=4 {
        assert!(
            log.grade_part(grade).is_zero(),
            "omelyan5-fg grade {grade}: {}",
            series_text(&log.grade_part(grade), true)
        );
    }
    let residual = symbolic.verify_claim(&claims::omelyan5_fg_claims()).unwrap();
    assert_empty(&residual, "omelyan5-fg");
}

#[test]
fn nested_limit_expansion_at_four_lambdas() {
    for lambda in [
        Rational64::new(1, 6),
        Rational64::new(1, 4),
        Rational64::new(1, 3),
        Rational64::new(1, 2),
    ] {
        let scheme = claims::nested_limit_scheme(lambda, 4, false);
        let residual = scheme
            .verify_claim(&claims::nested_limit_claims(lambda))
            .unwrap();
        assert_empty(&residual, &format!("nested limit lambda={lambda}"));
    }
}

#[test]
fn nested_limit_at_one_sixth_under_quotient() {
    let lambda = Rational64::new(1, 6);
    let scheme = claims::nested_limit_scheme(lambda, 4, true);
    let residual = scheme
        .verify_claim(&claims::lambda_sixth_quotient_claims())
        .unwrap();
    assert_empty(&residual, "nested limit lambda=1/6 quotient");
}

#[test]
fn nested_force_gradient_limit_is_fourth_order_under_quotient() {
    let scheme = claims::nested_force_gradient_limit_scheme(4, true);
    let log = scheme.shadow_log().unwrap();
    for grade in 2..=4 {
        assert!(
            log.grade_part(grade).is_zero(),
            "nested fg limit grade {grade}: {}",
            series_text(&log.grade_part(grade), false)
        );
    }
}

#[test]
fn nested_force_gradient_limit_needs_the_quotient() {
    // In the free algebra a [V2,[V1,V2]] term of weight -1/72 survives; it
    // vanishes only because position-dependent potentials commute.
    let scheme = claims::nested_force_gradient_limit_scheme(4, false);
    let log = scheme.shadow_log().unwrap();
    let grade3 = log.grade_part(3);
    assert!(!grade3.is_zero());
    let claim = CommutatorExpr::new()
        .term(br(-1, 72), CommutatorTree::nested(Symbol::V2, Symbol::V1, Symbol::V2));
    assert_eq!(grade3, claim.expand(4).grade_part(3));
    assert!(grade3.normal_ordered().is_zero());
}

#[test]
fn nested_leapfrog_shadow_at_small_m() {
    for m in [1, 2, 3] {
        let scheme = builders::nested_leapfrog(m).unwrap();
        let symbolic = SymbolicScheme::from_scheme(&scheme, 4, true);
        let residual = symbolic
            .verify_claim(&claims::nested_leapfrog_claims(m))
            .unwrap();
        assert_empty(&residual, &format!("nested leap-frog M={m}"));
    }
}

#[test]
fn nested_leapfrog_claim_signs_are_essential() {
    // Flipping the sign of the two 1/12 cross terms (a plausible
    // transcription slip) must leave a nonzero residual.
    let m = 2;
    let m2 = br(1, i64::from(m) * i64::from(m));
    let flipped = vec![(
        3,
        CommutatorExpr::new()
            .term(br(1, 24), CommutatorTree::nested(Symbol::V2, Symbol::T, Symbol::V2))
            .term(br(-1, 12), CommutatorTree::nested(Symbol::V1, Symbol::T, Symbol::V2))
            .term(br(-1, 12), CommutatorTree::nested(Symbol::T, Symbol::T, Symbol::V2))
            .term(&m2 * br(1, 24), CommutatorTree::nested(Symbol::V1, Symbol::T, Symbol::V1))
            .term(&m2 * br(-1, 12), CommutatorTree::nested(Symbol::T, Symbol::T, Symbol::V1)),
    )];
    let scheme = builders::nested_leapfrog(m).unwrap();
    let symbolic = SymbolicScheme::from_scheme(&scheme, 4, true);
    let residual = symbolic.verify_claim(&flipped).unwrap();
    assert!(!residual.is_zero());
}

#[test]
fn alike5_finite_m_shadow_in_free_algebra() {
    let lambda = Rational64::new(1, 6);
    for m in [1, 2, 3] {
        let scheme = builders::alike5_nested(lambda, m).unwrap();
        let symbolic = SymbolicScheme::from_scheme(&scheme, 4, false);
        let residual = symbolic
            .verify_claim(&claims::alike5_claims(lambda, m))
            .unwrap();
        assert_empty(&residual, &format!("alike5 lambda=1/6 M={m}"));
    }
}

#[test]
fn alike5_excess_over_limit_scales_as_inverse_m_squared() {
    let lambda = Rational64::new(1, 6);
    let limit = claims::nested_limit_scheme(lambda, 4, false)
        .shadow_log()
        .unwrap()
        .grade_part(3);
    let mut scaled: Vec<NcSeries> = Vec::new();
    for m in [1u32, 2, 3] {
        let scheme = builders::alike5_nested(lambda, m).unwrap();
        let log = SymbolicScheme::from_scheme(&scheme, 4, false)
            .shadow_log()
            .unwrap();
        let excess = log.grade_part(3).sub(&limit);
        assert!(!excess.is_zero());
        let m2 = br(i64::from(m) * i64::from(m), 1);
        scaled.push(excess.scale(&m2));
    }
    assert_eq!(scaled[0], scaled[1]);
    assert_eq!(scaled[1], scaled[2]);
}

#[test]
fn nested_force_gradient_finite_m_under_quotient() {
    for m in [1, 2, 3] {
        let scheme = builders::nested_force_gradient(m).unwrap();
        let symbolic = SymbolicScheme::from_scheme(&scheme, 4, true);
        let residual = symbolic
            .verify_claim(&claims::nested_force_gradient_claims(m))
            .unwrap();
        assert_empty(&residual, &format!("nested fg M={m}"));
    }
}

#[test]
fn log_exp_round_trip_on_random_sparse_series() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xbc4);
    for degree in 1..=5 {
        for _ in 0..8 {
            let mut x = NcSeries::zero(degree);
            let terms = rng.gen_range(1..=6);
            for _ in 0..terms {
                let len = rng.gen_range(1..=degree);
                let word: Vec<Symbol> = (0..len)
                    .map(|_| Symbol::ALL[rng.gen_range(0..3)])
                    .collect();
                let coeff = br(rng.gen_range(-9..=9), rng.gen_range(1..=9));
                x.add_term(Word(word), coeff);
            }
            let back = x.exp_truncated().unwrap().log_truncated().unwrap();
            assert_eq!(back, x, "degree {degree}");
            let forward = x.exp_truncated().unwrap();
            assert_eq!(
                forward.log_truncated().unwrap().exp_truncated().unwrap(),
                forward
            );
        }
    }
}

#[test]
fn grade1_part_is_plain_symbol_sum() {
    for m in [1, 2, 3] {
        for scheme in builders::all_builders(m) {
            let log = SymbolicScheme::from_scheme(&scheme, 3, false)
                .shadow_log()
                .unwrap();
            let g1 = log.grade_part(1);
            for sym in Symbol::ALL {
                assert_eq!(
                    g1.coefficient(&Word::letter(sym)),
                    BigRational::one(),
                    "{} M={m} {sym}",
                    scheme.name()
                );
            }
        }
    }
}

#[test]
fn scheme_text_feeds_the_verifier() {
    let text = splitting::text::scheme_to_text(&builders::nested_force_gradient(2).unwrap());
    let symbolic = SymbolicScheme::from_scheme_text(&text, 4, true).unwrap();
    let residual = symbolic
        .verify_claim(&claims::nested_force_gradient_claims(2))
        .unwrap();
    assert!(residual.is_zero());

    let err = SymbolicScheme::from_scheme_text("K(FULL,1,0) garbage", 3, false).unwrap_err();
    assert!(matches!(err, shadow_bch::ShadowError::SchemeText(_)));
}
