//! Truncated noncommutative polynomials with exact rational coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use crate::error::ShadowError;

/// Generator symbols. `T` is kinetic, `V1` the fast potential, `V2` the
/// slow one. Ordering puts `T` first and `V1` before `V2`, which is what
/// the normal-ordering rewrite relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    T,
    V1,
    V2,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::T, Symbol::V1, Symbol::V2];
}

/// A word over the symbol alphabet; its length is its grade in powers of
/// the step size.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(s: Symbol) -> Self {
        Word(vec![s])
    }

    pub fn grade(&self) -> usize {
        self.0.len()
    }

    fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Canonical form under the relation `V2 V1 -> V1 V2`: potential
    /// letters commute with each other but not with `T`, so each maximal
    /// `T`-free run is sorted.
    fn normal_form(&self) -> Word {
        let mut out = Vec::with_capacity(self.0.len());
        let mut run: Vec<Symbol> = Vec::new();
        for &s in &self.0 {
            if s == Symbol::T {
                run.sort();
                out.append(&mut run);
                out.push(Symbol::T);
            } else {
                run.push(s);
            }
        }
        run.sort();
        out.append(&mut run);
        Word(out)
    }
}

pub fn big(r: Rational64) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// Truncated series: a map from words to exact rational coefficients, with
/// no stored zeros and no word above the truncation grade.
#[derive(Clone, Debug, PartialEq)]
pub struct NcSeries {
    max_degree: usize,
    terms: BTreeMap<Word, BigRational>,
}

impl NcSeries {
    pub fn zero(max_degree: usize) -> Self {
        Self {
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(max_degree: usize) -> Self {
        let mut s = Self::zero(max_degree);
        s.add_term(Word::empty(), BigRational::one());
        s
    }

    pub fn symbol(sym: Symbol, max_degree: usize) -> Self {
        let mut s = Self::zero(max_degree);
        s.add_term(Word::letter(sym), BigRational::one());
        s
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &Word) -> BigRational {
        self.terms.get(word).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, word: Word, coeff: BigRational) {
        if word.grade() > self.max_degree || coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_degree(&self, other: &Self) -> Result<(), ShadowError> {
        if self.max_degree != other.max_degree {
            return Err(ShadowError::DegreeMismatch {
                left: self.max_degree,
                right: other.max_degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_degree(other).expect("matching degrees");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.max_degree);
        for (w, c) in &self.terms {
            out.terms.insert(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.max_degree);
        }
        let mut out = Self::zero(self.max_degree);
        for (w, c) in &self.terms {
            out.terms.insert(w.clone(), c * factor);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_degree(other).expect("matching degrees");
        let mut out = Self::zero(self.max_degree);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                if wa.grade() + wb.grade() <= self.max_degree {
                    out.add_term(wa.concat(wb), ca * cb);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// The grade-`g` homogeneous part.
    pub fn grade_part(&self, grade: usize) -> Self {
        let mut out = Self::zero(self.max_degree);
        for (w, c) in &self.terms {
            if w.grade() == grade {
                out.terms.insert(w.clone(), c.clone());
            }
        }
        out
    }

    /// Drop everything at or below the given grade.
    pub fn truncate_below(&self, grade: usize) -> Self {
        let mut out = Self::zero(self.max_degree);
        for (w, c) in &self.terms {
            if w.grade() > grade {
                out.terms.insert(w.clone(), c.clone());
            }
        }
        out
    }

    /// Quotient by `[V1, V2] = 0`: rewrite every word to its normal form.
    pub fn normal_ordered(&self) -> Self {
        let mut out = Self::zero(self.max_degree);
        for (w, c) in &self.terms {
            out.add_term(w.normal_form(), c.clone());
        }
        out
    }

    /// `sum_k x^k / k!`, exact and truncated.
    pub fn exp_truncated(&self) -> Result<Self, ShadowError> {
        if !self.coefficient(&Word::empty()).is_zero() {
            return Err(ShadowError::Grade0InExp);
        }
        let mut result = Self::one(self.max_degree);
        let mut term = Self::one(self.max_degree);
        for k in 1..=self.max_degree {
            term = term.mul(self);
            term = term.scale(&BigRational::new(BigInt::one(), BigInt::from(k)));
            if term.is_zero() {
                break;
            }
            result = result.add(&term);
        }
        Ok(result)
    }

    /// `log(1 + y) = sum_k (-1)^{k+1} y^k / k`, exact and truncated.
    pub fn log_truncated(&self) -> Result<Self, ShadowError> {
        if !self.coefficient(&Word::empty()).is_one() {
            return Err(ShadowError::Grade0NotOneInLog);
        }
        let y = self.sub(&Self::one(self.max_degree));
        let mut result = Self::zero(self.max_degree);
        let mut power = Self::one(self.max_degree);
        for k in 1..=self.max_degree {
            power = power.mul(&y);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            result = result.add(&power.scale(&BigRational::new(BigInt::from(sign), BigInt::from(k))));
        }
        Ok(result)
    }
}

impl std::fmt::Display for Symbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Symbol::T => write!(f, "T"),
            Symbol::V1 => write!(f, "V1"),
            Symbol::V2 => write!(f, "V2"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exp_of_zero_is_one() {
        let zero = NcSeries::zero(4);
        assert_eq!(zero.exp_truncated().unwrap(), NcSeries::one(4));
    }

    #[test]
    fn exp_of_single_symbol() {
        let t = NcSeries::symbol(Symbol::T, 2);
        let e = t.exp_truncated().unwrap();
        assert_eq!(e.coefficient(&Word::empty()), br(1, 1));
        assert_eq!(e.coefficient(&Word::letter(Symbol::T)), br(1, 1));
        assert_eq!(
            e.coefficient(&Word(vec![Symbol::T, Symbol::T])),
            br(1, 2)
        );
    }

    #[test]
    fn exp_times_exp_of_negation_is_one() {
        for degree in 1..=5 {
            let x = NcSeries::symbol(Symbol::T, degree)
                .add(&NcSeries::symbol(Symbol::V1, degree).scale(&br(2, 3)));
            let product = x
                .exp_truncated()
                .unwrap()
                .mul(&x.neg().exp_truncated().unwrap());
            assert_eq!(product, NcSeries::one(degree), "degree {degree}");
        }
    }

    #[test]
    fn log_of_one_is_zero() {
        assert!(NcSeries::one(4).log_truncated().unwrap().is_zero());
    }

    #[test]
    fn log_exp_round_trip_on_symbol_sum() {
        let x = NcSeries::symbol(Symbol::T, 4).add(&NcSeries::symbol(Symbol::V1, 4));
        let back = x.exp_truncated().unwrap().log_truncated().unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn first_bch_commutator() {
        // grade-2 part of log(e^T e^V1) is (1/2)[T, V1]
        let t = NcSeries::symbol(Symbol::T, 2);
        let v = NcSeries::symbol(Symbol::V1, 2);
        let log = t
            .exp_truncated()
            .unwrap()
            .mul(&v.exp_truncated().unwrap())
            .log_truncated()
            .unwrap();
        let expected = t.commutator(&v).scale(&br(1, 2));
        assert_eq!(log.grade_part(2), expected.grade_part(2));
    }

    #[test]
    fn exp_rejects_grade0() {
        assert_eq!(
            NcSeries::one(3).exp_truncated().unwrap_err(),
            ShadowError::Grade0InExp
        );
    }

    #[test]
    fn log_rejects_wrong_grade0() {
        assert_eq!(
            NcSeries::zero(3).log_truncated().unwrap_err(),
            ShadowError::Grade0NotOneInLog
        );
    }

    #[test]
    fn normal_ordering_sorts_potential_runs() {
        let mut s = NcSeries::zero(5);
        s.add_term(
            Word(vec![Symbol::V2, Symbol::V1, Symbol::T, Symbol::V2, Symbol::V1]),
            br(1, 1),
        );
        let n = s.normal_ordered();
        assert_eq!(
            n.coefficient(&Word(vec![
                Symbol::V1,
                Symbol::V2,
                Symbol::T,
                Symbol::V1,
                Symbol::V2
            ])),
            br(1, 1)
        );
        assert_eq!(n.terms().count(), 1);
    }

    #[test]
    fn commutator_of_potentials_vanishes_in_quotient() {
        let v1 = NcSeries::symbol(Symbol::V1, 3);
        let v2 = NcSeries::symbol(Symbol::V2, 3);
        assert!(v1.commutator(&v2).normal_ordered().is_zero());
    }
}
