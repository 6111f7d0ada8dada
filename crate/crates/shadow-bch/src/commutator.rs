//! Formal rational combinations of nested commutators.

use num_rational::BigRational;
use num_traits::Zero;

use crate::series::{NcSeries, Symbol};

/// A nested commutator term: a binary bracket tree over the symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommutatorTree {
    Leaf(Symbol),
    Bracket(Box<CommutatorTree>, Box<CommutatorTree>),
}

impl CommutatorTree {
    pub fn leaf(sym: Symbol) -> Self {
        CommutatorTree::Leaf(sym)
    }

    pub fn bracket(left: CommutatorTree, right: CommutatorTree) -> Self {
        CommutatorTree::Bracket(Box::new(left), Box::new(right))
    }

    /// `[a,[b,c]]` with symbol leaves, the shape every claim in this crate
    /// uses.
    pub fn nested(a: Symbol, b: Symbol, c: Symbol) -> Self {
        Self::bracket(Self::leaf(a), Self::bracket(Self::leaf(b), Self::leaf(c)))
    }

    /// Number of leaves, i.e. the grade of the expanded series.
    pub fn grade(&self) -> usize {
        match self {
            CommutatorTree::Leaf(_) => 1,
            CommutatorTree::Bracket(l, r) => l.grade() + r.grade(),
        }
    }

    pub fn expand(&self, max_degree: usize) -> NcSeries {
        match self {
            CommutatorTree::Leaf(sym) => NcSeries::symbol(*sym, max_degree),
            CommutatorTree::Bracket(l, r) => {
                l.expand(max_degree).commutator(&r.expand(max_degree))
            }
        }
    }
}

/// Rational-linear combination of commutator trees.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CommutatorExpr {
    terms: Vec<(BigRational, CommutatorTree)>,
}

impl CommutatorExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn term(mut self, coeff: BigRational, tree: CommutatorTree) -> Self {
        self.push(coeff, tree);
        self
    }

    pub fn push(&mut self, coeff: BigRational, tree: CommutatorTree) {
        if !coeff.is_zero() {
            self.terms.push((coeff, tree));
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(BigRational, CommutatorTree)] {
        &self.terms
    }

    pub fn expand(&self, max_degree: usize) -> NcSeries {
        let mut out = NcSeries::zero(max_degree);
        for (coeff, tree) in &self.terms {
            out = out.add(&tree.expand(max_degree).scale(coeff));
        }
        out
    }
}
