//! Symbolic form of a splitting scheme and its shadow log.

use num_rational::{BigRational, Rational64};
use num_traits::One;

use crate::commutator::CommutatorExpr;
use crate::error::ShadowError;
use crate::series::{big, NcSeries, Symbol, Word};
use splitting::{SplittingScheme, Stage, Subset};

/// Ordered exponent list of a scheme's stage-exponential product, with all
/// step-size powers folded into word grades. Inner loops are unrolled at
/// their concrete repetition count.
#[derive(Clone, Debug)]
pub struct SymbolicScheme {
    exponents: Vec<NcSeries>,
    commuting_potentials: bool,
    max_degree: usize,
}

/// How `FULL` kicks map onto potential symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Translation {
    /// `FULL -> V1 + V2`, `FAST -> V1`, `SLOW -> V2`.
    TwoPotential,
    /// `FULL -> V1`; the scheme must not address a single part.
    SinglePotential,
}

fn subset_symbols(which: Subset, translation: Translation) -> Result<Vec<Symbol>, ShadowError> {
    match (translation, which) {
        (Translation::SinglePotential, Subset::Full) => Ok(vec![Symbol::V1]),
        (Translation::SinglePotential, other) => Err(ShadowError::MixedSubsets {
            found: other.to_string(),
        }),
        (Translation::TwoPotential, Subset::Full) => Ok(vec![Symbol::V1, Symbol::V2]),
        (Translation::TwoPotential, Subset::Fast) => Ok(vec![Symbol::V1]),
        (Translation::TwoPotential, Subset::Slow) => Ok(vec![Symbol::V2]),
    }
}

impl SymbolicScheme {
    /// Build from explicit exponent series (all at one truncation degree).
    pub fn from_exponents(exponents: Vec<NcSeries>, commuting_potentials: bool) -> Self {
        let max_degree = exponents
            .first()
            .map(NcSeries::max_degree)
            .unwrap_or_default();
        assert!(
            exponents.iter().all(|e| e.max_degree() == max_degree),
            "exponents must share one truncation degree"
        );
        Self {
            exponents,
            commuting_potentials,
            max_degree,
        }
    }

    /// Exact translation of a stage list with `FAST -> V1`, `SLOW -> V2`
    /// and `FULL -> V1 + V2`.
    pub fn from_scheme(
        scheme: &SplittingScheme,
        max_degree: usize,
        commuting_potentials: bool,
    ) -> Self {
        Self::translate(scheme, max_degree, commuting_potentials, Translation::TwoPotential)
            .expect("two-potential translation accepts every subset")
    }

    /// Translation for single-rate schemes with the whole potential written
    /// as one symbol `V1`. Fails if the scheme addresses `FAST` or `SLOW`.
    pub fn from_scheme_single_potential(
        scheme: &SplittingScheme,
        max_degree: usize,
    ) -> Result<Self, ShadowError> {
        Self::translate(scheme, max_degree, false, Translation::SinglePotential)
    }

    /// Parse the textual stage grammar
    /// (`K(<subset>,<b>,<c>) | D(<a>) | L(M=<m>,f=<frac>){ ... }`) and
    /// translate with `FAST -> V1`, `SLOW -> V2`, `FULL -> V1 + V2`.
    pub fn from_scheme_text(
        text: &str,
        max_degree: usize,
        commuting_potentials: bool,
    ) -> Result<Self, ShadowError> {
        let scheme = splitting::text::parse_scheme_text("from-text", 2, text)?;
        Ok(Self::from_scheme(&scheme, max_degree, commuting_potentials))
    }

    fn translate(
        scheme: &SplittingScheme,
        max_degree: usize,
        commuting_potentials: bool,
        translation: Translation,
    ) -> Result<Self, ShadowError> {
        let mut exponents = Vec::new();
        push_stages(
            &mut exponents,
            scheme.stages(),
            BigRational::one(),
            max_degree,
            translation,
        )?;
        Ok(Self {
            exponents,
            commuting_potentials,
            max_degree,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn commuting_potentials(&self) -> bool {
        self.commuting_potentials
    }

    pub fn exponents(&self) -> &[NcSeries] {
        &self.exponents
    }

    /// Log of the left-to-right product of the stage exponentials.
    ///
    /// The grade-1 part must come out as the plain sum of the symbols the
    /// scheme uses, each with coefficient exactly 1; anything else means an
    /// inconsistent stage list.
    pub fn shadow_log(&self) -> Result<NcSeries, ShadowError> {
        let mut product = NcSeries::one(self.max_degree);
        for exponent in &self.exponents {
            product = product.mul(&exponent.exp_truncated()?);
            if self.commuting_potentials {
                product = product.normal_ordered();
            }
        }
        let mut log = product.log_truncated()?;
        if self.commuting_potentials {
            // the log series multiplies representatives, which can recreate
            // non-canonical words at the junctions
            log = log.normal_ordered();
        }

        let mut expected = NcSeries::zero(self.max_degree);
        for sym in Symbol::ALL {
            let present = self
                .exponents
                .iter()
                .any(|e| e.terms().any(|(w, _)| w.0.contains(&sym)));
            if present {
                expected.add_term(Word::letter(sym), BigRational::one());
            }
        }
        if log.grade_part(1) != expected {
            return Err(ShadowError::Grade1Inconsistent);
        }
        Ok(log)
    }

    /// Residual of the claimed expansion: the shadow log minus its grade-1
    /// part minus the expanded per-grade claims. An empty residual means
    /// the claim holds exactly at every grade up to the truncation.
    pub fn verify_claim(
        &self,
        claims: &[(usize, CommutatorExpr)],
    ) -> Result<NcSeries, ShadowError> {
        let log = self.shadow_log()?;
        let mut residual = log.truncate_below(1);
        for (grade, claim) in claims {
            let mut expanded = claim.expand(self.max_degree).grade_part(*grade);
            if self.commuting_potentials {
                expanded = expanded.normal_ordered();
            }
            residual = residual.sub(&expanded);
        }
        if self.commuting_potentials {
            residual = residual.normal_ordered();
        }
        Ok(residual)
    }
}

fn push_stages(
    exponents: &mut Vec<NcSeries>,
    stages: &[Stage],
    scale: BigRational,
    max_degree: usize,
    translation: Translation,
) -> Result<(), ShadowError> {
    for stage in stages {
        match stage {
            Stage::Drift { a } => {
                let coeff = big(*a) * &scale;
                exponents.push(NcSeries::symbol(Symbol::T, max_degree).scale(&coeff));
            }
            Stage::Kick { subset, b, c } => {
                let symbols = subset_symbols(*subset, translation)?;
                let mut potential = NcSeries::zero(max_degree);
                for sym in &symbols {
                    potential = potential.add(&NcSeries::symbol(*sym, max_degree));
                }
                let mut exponent = potential.scale(&(big(*b) * &scale));
                if !num_traits::Zero::is_zero(c) {
                    let t = NcSeries::symbol(Symbol::T, max_degree);
                    let force_gradient = potential.commutator(&t.commutator(&potential));
                    let s3 = &scale * &scale * &scale;
                    exponent = exponent.add(&force_gradient.scale(&(big(*c) * s3)));
                }
                exponents.push(exponent);
            }
            Stage::InnerLoop {
                inner,
                repetitions,
                time_fraction,
            } => {
                let inner_scale =
                    &scale * big(*time_fraction / Rational64::from_integer(i64::from(*repetitions)));
                for _ in 0..*repetitions {
                    push_stages(
                        exponents,
                        inner.stages(),
                        inner_scale.clone(),
                        max_degree,
                        translation,
                    )?;
                }
            }
        }
    }
    Ok(())
}
