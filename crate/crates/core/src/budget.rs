//! Work budgets for exhaustive enumeration and explicit realization.

use crate::binom::ExactCount;
use crate::error::{Error, Result};

/// Environment variable overriding both budgets.
pub const BUDGET_ENV: &str = "HYPERTOURNEY_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of loser assignments or candidate lists to enumerate.
    pub enumeration: u64,
    /// Maximum number of arcs in a constructed hypertournament.
    pub realization: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumeration: 10_000_000,
            realization: 1_000_000,
        }
    }
}

impl Budget {
    /// Both budgets set to `limit`.
    pub fn uniform(limit: u64) -> Self {
        Budget {
            enumeration: limit,
            realization: limit,
        }
    }

    /// Defaults, or the value of `HYPERTOURNEY_BUDGET` for both budgets.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(raw) => Self::parse_override(&raw),
            Err(std::env::VarError::NotPresent) => Ok(Budget::default()),
            Err(e) => Err(Error::usage(format!("{BUDGET_ENV}: {e}"))),
        }
    }

    fn parse_override(raw: &str) -> Result<Self> {
        match raw.trim().parse::<u64>() {
            Ok(v) if v > 0 => Ok(Budget::uniform(v)),
            _ => Err(Error::usage(format!(
                "{BUDGET_ENV} must be a positive integer, got {raw:?}"
            ))),
        }
    }

    pub(crate) fn check_enumeration(
        &self,
        what: &'static str,
        needed: Result<ExactCount>,
    ) -> Result<()> {
        check(what, needed, self.enumeration)
    }

    pub(crate) fn check_realization(
        &self,
        what: &'static str,
        needed: Result<ExactCount>,
    ) -> Result<()> {
        check(what, needed, self.realization)
    }
}

fn check(what: &'static str, needed: Result<ExactCount>, budget: u64) -> Result<()> {
    match needed {
        Ok(n) if n.get() <= budget => Ok(()),
        Ok(n) => Err(Error::Budget {
            what,
            needed: n.to_string(),
            budget,
        }),
        Err(Error::Overflow(_)) => Err(Error::Budget {
            what,
            needed: "more than 2^64".to_string(),
            budget,
        }),
        Err(e) => Err(e),
    }
}
