//! Exact-rational text rendering of series and commutator claims.
//!
//! Single-potential schemes write their one potential symbol as `V`.

use num_rational::BigRational;
use num_traits::Signed;

use crate::commutator::{CommutatorExpr, CommutatorTree};
use crate::series::{NcSeries, Symbol};

fn symbol_name(sym: Symbol, single_potential: bool) -> &'static str {
    match (sym, single_potential) {
        (Symbol::T, _) => "T",
        (Symbol::V1, true) => "V",
        (Symbol::V1, false) => "V1",
        (Symbol::V2, _) => "V2",
    }
}

fn tree_text(tree: &CommutatorTree, single_potential: bool) -> String {
    match tree {
        CommutatorTree::Leaf(sym) => symbol_name(*sym, single_potential).to_string(),
        CommutatorTree::Bracket(l, r) => format!(
            "[{},{}]",
            tree_text(l, single_potential),
            tree_text(r, single_potential)
        ),
    }
}

fn join_terms(terms: Vec<(BigRational, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (coeff, body)) in terms.into_iter().enumerate() {
        if idx == 0 {
            if coeff.is_negative() {
                out.push('-');
            }
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&format!("{} * {}", coeff.abs(), body));
    }
    out
}

/// `-1/72 * [V2,[T,V2]]`-style rendering of a commutator expression.
pub fn claim_text(expr: &CommutatorExpr, single_potential: bool) -> String {
    join_terms(
        expr.terms()
            .iter()
            .map(|(coeff, tree)| (coeff.clone(), tree_text(tree, single_potential)))
            .collect(),
    )
}

/// Word-form rendering of a series, letters joined by `.`.
pub fn series_text(series: &NcSeries, single_potential: bool) -> String {
    join_terms(
        series
            .terms()
            .map(|(word, coeff)| {
                let body = word
                    .0
                    .iter()
                    .map(|&s| symbol_name(s, single_potential))
                    .collect::<Vec<_>>()
                    .join(".");
                let body = if body.is_empty() { "1".to_string() } else { body };
                (coeff.clone(), body)
            })
            .collect(),
    )
}
