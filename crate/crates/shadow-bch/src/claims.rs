//! Known shadow-Hamiltonian expansions for the builder schemes, stated as
//! exact commutator claims, plus symbolic forms of the infinite-M limits.
//!
//! Grade `g` of the shadow log corresponds to the `h^(g-1)` term of the
//! shadow Hamiltonian. Every expression here is checked against the series
//! engine in this crate's tests and in the acceptance suite; none is taken
//! on trust.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::One;

use crate::commutator::{CommutatorExpr, CommutatorTree};
use crate::scheme::SymbolicScheme;
use crate::series::{big, NcSeries, Symbol};

fn br(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn nested(a: Symbol, b: Symbol, c: Symbol) -> CommutatorTree {
    CommutatorTree::nested(a, b, c)
}

use Symbol::{T, V1, V2};

/// Kick-drift-kick leap-frog on one potential `V == V1`:
/// grade 3 is `(1/24)[V,[T,V]] + (1/12)[T,[T,V]]`.
pub fn leapfrog_kdk_claims() -> Vec<(usize, CommutatorExpr)> {
    vec![(
        3,
        CommutatorExpr::new()
            .term(br(1, 24), nested(V1, T, V1))
            .term(br(1, 12), nested(T, T, V1)),
    )]
}

/// Drift-kick-drift leap-frog: grade 3 is
/// `-(1/24)(2[V,[T,V]] + [T,[T,V]])`.
pub fn leapfrog_dkd_claims() -> Vec<(usize, CommutatorExpr)> {
    vec![(
        3,
        CommutatorExpr::new()
            .term(br(-1, 12), nested(V1, T, V1))
            .term(br(-1, 24), nested(T, T, V1)),
    )]
}

/// Five-stage scheme: grade 3 is `-(1/72)[V,[T,V]]`; the `[T,[T,V]]`
/// direction is eliminated by the 1/6 edge coefficient.
pub fn omelyan5_claims() -> Vec<(usize, CommutatorExpr)> {
    vec![(
        3,
        CommutatorExpr::new().term(br(-1, 72), nested(V1, T, V1)),
    )]
}

/// Force-gradient five-stage scheme: grades 2..4 all vanish.
pub fn omelyan5_fg_claims() -> Vec<(usize, CommutatorExpr)> {
    Vec::new()
}

/// Grade-3 expansion of the five-exponent nested limit at parameter
/// `lambda`, in the free algebra:
///
/// ```text
/// (-1+6l-6l^2)/12 on [V2,[V1,V2]] and [V2,[T,V2]]
/// (-1+6l)/24      on [V1,[T,V2]], [V1,[V1,V2]], [T,[V1,V2]], [T,[T,V2]]
/// ```
pub fn nested_limit_claims(lambda: Rational64) -> Vec<(usize, CommutatorExpr)> {
    let l = big(lambda);
    let alpha = (-BigRational::one() + br(6, 1) * &l - br(6, 1) * &l * &l) / br(12, 1);
    let beta = (-BigRational::one() + br(6, 1) * &l) / br(24, 1);
    vec![(
        3,
        CommutatorExpr::new()
            .term(alpha.clone(), nested(V2, V1, V2))
            .term(alpha, nested(V2, T, V2))
            .term(beta.clone(), nested(V1, T, V2))
            .term(beta.clone(), nested(V1, V1, V2))
            .term(beta.clone(), nested(T, V1, V2))
            .term(beta, nested(T, T, V2)),
    )]
}

/// At `lambda = 1/6` with commuting potentials only
/// `-(1/72)[V2,[T,V2]]` survives.
pub fn lambda_sixth_quotient_claims() -> Vec<(usize, CommutatorExpr)> {
    vec![(
        3,
        CommutatorExpr::new().term(br(-1, 72), nested(V2, T, V2)),
    )]
}

/// Grade-3 contribution of the inner fast leap-frog run at step `tau`:
/// `tau^3 * ((1/24)[V1,[T,V1]] + (1/12)[T,[T,V1]])` per unit step cubed.
fn inner_kdk_grade3(scale: BigRational) -> CommutatorExpr {
    CommutatorExpr::new()
        .term(&scale * br(1, 24), nested(V1, T, V1))
        .term(&scale * br(1, 12), nested(T, T, V1))
}

/// Shadow claim for the nested leap-frog at concrete `M`, with commuting
/// potentials:
///
/// ```text
/// (1/24)[V2,[T,V2]] + (1/12)[V1,[T,V2]] + (1/12)[T,[T,V2]]
/// + (1/M^2) ((1/24)[V1,[T,V1]] + (1/12)[T,[T,V1]])
/// ```
pub fn nested_leapfrog_claims(m: u32) -> Vec<(usize, CommutatorExpr)> {
    let m2 = br(1, i64::from(m) * i64::from(m));
    let mut expr = CommutatorExpr::new()
        .term(br(1, 24), nested(V2, T, V2))
        .term(br(1, 12), nested(V1, T, V2))
        .term(br(1, 12), nested(T, T, V2));
    for (coeff, tree) in inner_kdk_grade3(m2).terms() {
        expr.push(coeff.clone(), tree.clone());
    }
    vec![(3, expr)]
}

/// Finite-M excess of the five-stage nested family over its limit: two
/// half-step inner loops contribute `2 * (1/(2M))^3 * M = 1/(4M^2)` of the
/// inner grade-3 term.
pub fn half_step_loop_excess(m: u32) -> CommutatorExpr {
    inner_kdk_grade3(br(1, 4 * i64::from(m) * i64::from(m)))
}

/// Free-algebra claim for the five-stage nested scheme at finite `M`:
/// limit expansion plus the `1/M^2` inner excess.
pub fn alike5_claims(lambda: Rational64, m: u32) -> Vec<(usize, CommutatorExpr)> {
    let mut claims = nested_limit_claims(lambda);
    let excess = half_step_loop_excess(m);
    for (coeff, tree) in excess.terms() {
        claims[0].1.push(coeff.clone(), tree.clone());
    }
    claims
}

/// Claim for the nested force-gradient scheme at finite `M` with commuting
/// potentials: only the `1/M^2` inner excess survives at grade 3.
pub fn nested_force_gradient_claims(m: u32) -> Vec<(usize, CommutatorExpr)> {
    vec![(3, half_step_loop_excess(m))]
}

/// The `M -> infinity` limit of the five-stage nested integrator: the inner
/// loops become the exact flow of `T + V1`.
pub fn nested_limit_scheme(
    lambda: Rational64,
    max_degree: usize,
    commuting_potentials: bool,
) -> SymbolicScheme {
    let l = big(lambda);
    let v2 = NcSeries::symbol(V2, max_degree);
    let inner = NcSeries::symbol(V1, max_degree)
        .add(&NcSeries::symbol(T, max_degree))
        .scale(&br(1, 2));
    let middle_coeff = BigRational::one() - br(2, 1) * &l;
    SymbolicScheme::from_exponents(
        vec![
            v2.scale(&l),
            inner.clone(),
            v2.scale(&middle_coeff),
            inner,
            v2.scale(&l),
        ],
        commuting_potentials,
    )
}

/// The `M -> infinity` limit of the nested force-gradient scheme:
/// `lambda = 1/6` with `(1/72)[V2,[T,V2]]` added to the middle exponent.
pub fn nested_force_gradient_limit_scheme(
    max_degree: usize,
    commuting_potentials: bool,
) -> SymbolicScheme {
    let v2 = NcSeries::symbol(V2, max_degree);
    let t = NcSeries::symbol(T, max_degree);
    let inner = NcSeries::symbol(V1, max_degree).add(&t).scale(&br(1, 2));
    let sixth = br(1, 6);
    let force_gradient = v2.commutator(&t.commutator(&v2)).scale(&br(1, 72));
    let middle = v2.scale(&br(2, 3)).add(&force_gradient);
    SymbolicScheme::from_exponents(
        vec![v2.scale(&sixth), inner.clone(), middle, inner, v2.scale(&sixth)],
        commuting_potentials,
    )
}
