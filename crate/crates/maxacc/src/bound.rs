//! Common result type for inequality checks.

/// Outcome of comparing a computed quantity against the bound that must
/// dominate it.
///
/// Invariant: `satisfied == (margin >= 0.0)` with `margin = bound - value`,
/// including the boundary case `value == bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult {
    /// What was checked, e.g. "proper acceleration vs maximal acceleration".
    pub kind: String,
    /// The quantity under test, in the unit named by `kind`.
    pub value: f64,
    /// The bound it is compared against, same unit.
    pub bound: f64,
    /// Whether the bound holds.
    pub satisfied: bool,
    /// `bound - value`; non-negative exactly when `satisfied`.
    pub margin: f64,
}

impl BoundResult {
    pub fn new(kind: impl Into<String>, value: f64, bound: f64) -> Self {
        let margin = bound - value;
        BoundResult { kind: kind.into(), value, bound, satisfied: margin >= 0.0, margin }
    }
}
