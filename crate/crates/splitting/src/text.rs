//! Textual scheme description.
//!
//! ```text
//! stage := K(<subset>,<b>,<c>) | D(<a>) | L(M=<m>,f=<frac>){ <stage>... }
//! ```
//!
//! with subsets `FULL`/`FAST`/`SLOW` and rationals written `p/q` (or a bare
//! integer). The printer emits a canonical space-separated form that parses
//! back to an equal scheme.

use num_rational::Rational64;
use std::fmt::Write as _;

use crate::error::SchemeError;
use crate::scheme::{SplittingScheme, Stage};
use dynamics::Subset;

/// Render the stage list in the textual grammar.
pub fn scheme_to_text(scheme: &SplittingScheme) -> String {
    let mut out = String::new();
    write_stages(&mut out, scheme.stages());
    out
}

fn write_stages(out: &mut String, stages: &[Stage]) {
    for (idx, stage) in stages.iter().enumerate() {
        if idx > 0 {
            out.push(' ');
        }
        match stage {
            Stage::Drift { a } => {
                let _ = write!(out, "D({a})");
            }
            Stage::Kick { subset, b, c } => {
                let _ = write!(out, "K({subset},{b},{c})");
            }
            Stage::InnerLoop {
                inner,
                repetitions,
                time_fraction,
            } => {
                let _ = write!(out, "L(M={repetitions},f={time_fraction}){{ ");
                write_stages(out, inner.stages());
                out.push_str(" }");
            }
        }
    }
}

/// Parse the textual grammar into a validated scheme.
pub fn parse_scheme_text(
    name: impl Into<String>,
    declared_order: u32,
    text: &str,
) -> Result<SplittingScheme, SchemeError> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let stages = parser.parse_stages(true)?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.error("trailing input"));
    }
    SplittingScheme::new(name, stages, declared_order)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> SchemeError {
        SchemeError::Parse {
            at: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, tag: &str) -> Result<(), SchemeError> {
        if self.bytes[self.pos..].starts_with(tag.as_bytes()) {
            self.pos += tag.len();
            Ok(())
        } else {
            Err(self.error(format!("expected `{tag}`")))
        }
    }

    fn parse_integer(&mut self) -> Result<i64, SchemeError> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self
            .peek()
            .map(|b| b.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        text.parse()
            .map_err(|_| self.error("expected an integer"))
    }

    fn parse_rational(&mut self) -> Result<Rational64, SchemeError> {
        let numerator = self.parse_integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denominator = self.parse_integer()?;
            if denominator == 0 {
                return Err(self.error("zero denominator"));
            }
            Ok(Rational64::new(numerator, denominator))
        } else {
            Ok(Rational64::from_integer(numerator))
        }
    }

    fn parse_subset(&mut self) -> Result<Subset, SchemeError> {
        for (tag, subset) in [
            ("FULL", Subset::Full),
            ("FAST", Subset::Fast),
            ("SLOW", Subset::Slow),
        ] {
            if self.bytes[self.pos..].starts_with(tag.as_bytes()) {
                self.pos += tag.len();
                return Ok(subset);
            }
        }
        Err(self.error("expected FULL, FAST or SLOW"))
    }

    fn parse_stages(&mut self, allow_loops: bool) -> Result<Vec<Stage>, SchemeError> {
        let mut stages = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'D') => {
                    self.pos += 1;
                    self.expect("(")?;
                    let a = self.parse_rational()?;
                    self.expect(")")?;
                    stages.push(Stage::Drift { a });
                }
                Some(b'K') => {
                    self.pos += 1;
                    self.expect("(")?;
                    let subset = self.parse_subset()?;
                    self.expect(",")?;
                    let b = self.parse_rational()?;
                    self.expect(",")?;
                    let c = self.parse_rational()?;
                    self.expect(")")?;
                    stages.push(Stage::Kick { subset, b, c });
                }
                Some(b'L') => {
                    if !allow_loops {
                        return Err(SchemeError::NestedInnerLoop);
                    }
                    self.pos += 1;
                    self.expect("(M=")?;
                    let m = self.parse_integer()?;
                    if m < 1 {
                        return Err(SchemeError::InvalidRepetitions);
                    }
                    self.expect(",f=")?;
                    let time_fraction = self.parse_rational()?;
                    self.expect(")")?;
                    self.skip_ws();
                    self.expect("{")?;
                    let inner_stages = self.parse_stages(false)?;
                    self.skip_ws();
                    self.expect("}")?;
                    let inner = SplittingScheme::new("inner", inner_stages, 2)?;
                    stages.push(Stage::InnerLoop {
                        inner,
                        repetitions: m as u32,
                        time_fraction,
                    });
                }
                _ => break,
            }
        }
        if stages.is_empty() {
            return Err(self.error("expected at least one stage"));
        }
        Ok(stages)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    #[test]
    fn builders_round_trip_through_text() {
        for scheme in builders::all_builders(3) {
            let text = scheme_to_text(&scheme);
            let reparsed =
                parse_scheme_text(scheme.name(), scheme.declared_order(), &text).unwrap();
            assert_eq!(reparsed, scheme, "{text}");
            assert_eq!(scheme_to_text(&reparsed), text);
        }
    }

    #[test]
    fn leapfrog_text_form() {
        assert_eq!(
            scheme_to_text(&builders::leapfrog()),
            "K(FULL,1/2,0) D(1) K(FULL,1/2,0)"
        );
    }

    #[test]
    fn nested_text_form() {
        let text = scheme_to_text(&builders::nested_force_gradient(30).unwrap());
        assert_eq!(
            text,
            "K(SLOW,1/6,0) \
             L(M=30,f=1/2){ K(FAST,1/2,0) D(1) K(FAST,1/2,0) } \
             K(SLOW,2/3,1/72) \
             L(M=30,f=1/2){ K(FAST,1/2,0) D(1) K(FAST,1/2,0) } \
             K(SLOW,1/6,0)"
        );
    }

    #[test]
    fn rejects_nested_loops_in_text() {
        let err = parse_scheme_text("bad", 2, "L(M=2,f=1){ L(M=2,f=1){ D(1) } }").unwrap_err();
        assert_eq!(err, SchemeError::NestedInnerLoop);
    }

    #[test]
    fn rejects_trailing_garbage() {
        let err = parse_scheme_text("bad", 2, "D(1) nonsense").unwrap_err();
        assert!(matches!(err, SchemeError::Parse { .. }));
    }

    #[test]
    fn rejects_inconsistent_totals() {
        let err = parse_scheme_text("bad", 2, "K(FULL,1/3,0) D(1) K(FULL,1/3,0)").unwrap_err();
        assert!(matches!(err, SchemeError::KickSum { .. }));
    }
}
