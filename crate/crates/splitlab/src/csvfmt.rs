//! CSV field formatting: shortest round-trip decimals for floats.

/// Shortest representation that parses back to the identical f64, always
/// carrying a decimal point or exponent (`0.0`, not `0`).
pub fn float(x: f64) -> String {
    format!("{x:?}")
}
