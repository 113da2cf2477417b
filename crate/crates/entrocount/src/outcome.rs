//! Two-sided inequality results shared by the verifier modules.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// The two sides of a checked inequality `lhs <= rhs` and the verdict.
///
/// Serializes as `{"lhs":…, "rhs":…, "holds":…, "slack": rhs - lhs}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOutcome {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

impl CheckOutcome {
    pub(crate) fn compare(lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self {
            lhs,
            rhs,
            holds: lhs <= rhs + tolerance,
        }
    }

    /// Room left in the inequality; negative when violated.
    pub fn slack(&self) -> f64 {
        self.rhs - self.lhs
    }
}

impl Serialize for CheckOutcome {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CheckOutcome", 4)?;
        s.serialize_field("lhs", &self.lhs)?;
        s.serialize_field("rhs", &self.rhs)?;
        s.serialize_field("holds", &self.holds)?;
        s.serialize_field("slack", &self.slack())?;
        s.end()
    }
}
