use super::Parameter;
use serde::{Deserialize, Serialize};

/// One explicit inequality `value ≤ bound` evaluated on a kernel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub value: u128,
    pub bound: u128,
    pub holds: bool,
    /// Informational checks are reported but do not affect [`SizeReport::all_hold`].
    pub enforced: bool,
}

impl BoundCheck {
    pub fn new(name: impl Into<String>, value: u128, bound: u128) -> Self {
        BoundCheck { name: name.into(), value, bound, holds: value <= bound, enforced: true }
    }

    pub fn informational(name: impl Into<String>, value: u128, bound: u128) -> Self {
        BoundCheck { enforced: false, ..BoundCheck::new(name, value, bound) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeReport {
    pub parameter: Parameter,
    pub vertices_before: usize,
    pub vertices_after: usize,
    pub budget_before: usize,
    pub budget_after: usize,
    pub no_instance: bool,
    pub modulator_size: Option<usize>,
    pub pattern_count: Option<usize>,
    pub path_count: Option<usize>,
    pub max_leaf: Option<usize>,
    pub checks: Vec<BoundCheck>,
}

impl SizeReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().filter(|c| c.enforced).all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&BoundCheck> {
        self.checks.iter().filter(|c| c.enforced && !c.holds).collect()
    }

    pub fn check(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub(crate) fn pow2(e: u128) -> u128 {
    if e >= 127 {
        u128::MAX
    } else {
        1 << e
    }
}

pub(crate) fn pow3(e: u128) -> u128 {
    u32::try_from(e).ok().and_then(|e| 3u128.checked_pow(e)).unwrap_or(u128::MAX)
}
