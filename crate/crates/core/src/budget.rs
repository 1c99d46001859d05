//! Object-count budgets guarding exhaustive enumeration.

use crate::error::{Error, Result};

/// Default ceiling on the number of objects a single enumeration may visit.
pub const DEFAULT_MAX_OBJECTS: u128 = 1_000_000_000;

/// Default largest `n` accepted by the polynomial recurrences.
pub const DEFAULT_MAX_RECURRENCE_N: usize = 100;

/// Environment variable that replaces [`DEFAULT_MAX_OBJECTS`].
pub const BUDGET_ENV: &str = "TREEPARK_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_objects: u128,
    pub max_recurrence_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_objects: DEFAULT_MAX_OBJECTS,
            max_recurrence_n: DEFAULT_MAX_RECURRENCE_N,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_objects: u128::MAX,
            max_recurrence_n: usize::MAX,
        }
    }

    /// Default budget, with the object ceiling taken from `TREEPARK_BUDGET`
    /// when that variable holds a non-negative integer.
    pub fn from_env() -> Result<Self> {
        let mut budget = Budget::default();
        if let Ok(raw) = std::env::var(BUDGET_ENV) {
            budget.max_objects = raw.trim().parse().map_err(|_| {
                Error::Domain(format!("{BUDGET_ENV}={raw:?} is not a non-negative integer"))
            })?;
        }
        Ok(budget)
    }

    pub fn check_objects(&self, what: impl Into<String>, requested: u128) -> Result<()> {
        if requested > self.max_objects {
            return Err(Error::Budget {
                what: what.into(),
                requested,
                limit: self.max_objects,
            });
        }
        Ok(())
    }

    pub fn check_recurrence(&self, n: usize) -> Result<()> {
        if n > self.max_recurrence_n {
            return Err(Error::Budget {
                what: format!("recurrence up to n={n}"),
                requested: n as u128,
                limit: self.max_recurrence_n as u128,
            });
        }
        Ok(())
    }
}

/// `(n+1)^(n-1)`, the size of both `Tree(n+1)` and `PF(n)`, saturating at `u128::MAX`.
pub fn cayley_count(n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    saturating_pow(n as u128 + 1, n - 1)
}

/// `n!`, saturating at `u128::MAX`.
pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

fn saturating_pow(base: u128, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_small_values() {
        assert_eq!(cayley_count(1), 1);
        assert_eq!(cayley_count(3), 16);
        assert_eq!(cayley_count(4), 125);
        assert_eq!(cayley_count(8), 4_782_969);
        assert_eq!(cayley_count(200), u128::MAX);
    }

    #[test]
    fn budget_refuses_above_limit() {
        let b = Budget::default();
        assert!(b.check_objects("trees", cayley_count(9)).is_ok());
        let err = b.check_objects("trees", cayley_count(10)).unwrap_err();
        assert!(err.to_string().contains("--budget-override"));
        assert!(b.check_recurrence(100).is_ok());
        assert!(b.check_recurrence(101).is_err());
    }
}
