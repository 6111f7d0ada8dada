//! Scheme name resolution and the shadow-verification registry.

use anyhow::{anyhow, bail, Result};
use num_rational::Rational64;
use shadow_bch::{claims, CommutatorExpr, SymbolicScheme};
use splitting::{builders, SplittingScheme};

pub const SCHEME_NAMES: &[&str] = &[
    "leapfrog",
    "leapfrog-dkd",
    "omelyan5",
    "omelyan5-fg",
    "nested-leapfrog",
    "alike5",
    "nested-fg",
];

pub fn parse_lambda(text: &str) -> Result<Rational64> {
    text.trim()
        .parse::<Rational64>()
        .map_err(|e| anyhow!("lambda: not a rational `p/q`: {e}"))
}

/// Build a named scheme. `m` and `lambda` apply to the nested families.
pub fn resolve(name: &str, m: u32, lambda: Rational64) -> Result<SplittingScheme> {
    let scheme = match name {
        "leapfrog" => builders::leapfrog(),
        "leapfrog-dkd" => builders::leapfrog_drift_outside(),
        "omelyan5" => builders::omelyan5(),
        "omelyan5-fg" => builders::omelyan5_fg(),
        "nested-leapfrog" => builders::nested_leapfrog(m)?,
        "alike5" => builders::alike5_nested(lambda, m)?,
        "nested-fg" => builders::nested_force_gradient(m)?,
        other => bail!(
            "scheme: unknown name `{other}`; known schemes: {}",
            SCHEME_NAMES.join(", ")
        ),
    };
    Ok(scheme)
}

/// Everything shadow verification needs for one named scheme: the symbolic
/// translation mode, the algebra, and the known claims.
pub struct Verification {
    pub symbolic: SymbolicScheme,
    pub claims: Vec<(usize, CommutatorExpr)>,
    /// Render the one potential as `V` instead of `V1`.
    pub single_potential: bool,
}

pub fn verification(name: &str, m: u32, lambda: Rational64, degree: usize) -> Result<Verification> {
    let scheme = resolve(name, m, lambda)?;
    let (symbolic, claims, single_potential) = match name {
        "leapfrog" => (
            SymbolicScheme::from_scheme_single_potential(&scheme, degree)?,
            claims::leapfrog_kdk_claims(),
            true,
        ),
        "leapfrog-dkd" => (
            SymbolicScheme::from_scheme_single_potential(&scheme, degree)?,
            claims::leapfrog_dkd_claims(),
            true,
        ),
        "omelyan5" => (
            SymbolicScheme::from_scheme_single_potential(&scheme, degree)?,
            claims::omelyan5_claims(),
            true,
        ),
        "omelyan5-fg" => (
            SymbolicScheme::from_scheme_single_potential(&scheme, degree)?,
            claims::omelyan5_fg_claims(),
            true,
        ),
        "nested-leapfrog" => (
            SymbolicScheme::from_scheme(&scheme, degree, true),
            claims::nested_leapfrog_claims(m),
            false,
        ),
        "alike5" => (
            SymbolicScheme::from_scheme(&scheme, degree, false),
            claims::alike5_claims(lambda, m),
            false,
        ),
        "nested-fg" => (
            SymbolicScheme::from_scheme(&scheme, degree, true),
            claims::nested_force_gradient_claims(m),
            false,
        ),
        other => bail!("scheme: no shadow claims registered for `{other}`"),
    };
    Ok(Verification {
        symbolic,
        claims,
        single_potential,
    })
}
