use std::fmt;
use std::str::FromStr;

use syncode::bench::Family;
use syncode::{AzinvParams, CodeParams, MonotoneParams};

use crate::UsageError;

/// Code parameters as given on the command line or in a grid file.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeSpec {
    pub family: FamilyName,
    pub n: usize,
    pub m: u64,
    pub a: i64,
    /// Monotone weights; `None` means the Levenshtein weights `1..=n`.
    pub k: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyName {
    Monotone,
    Azinv,
}

impl FromStr for FamilyName {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, UsageError> {
        match s.to_ascii_lowercase().as_str() {
            "monotone" => Ok(FamilyName::Monotone),
            "azinv" => Ok(FamilyName::Azinv),
            _ => Err(UsageError(format!("unknown family {s:?} (expected monotone or azinv)"))),
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyName::Monotone => "monotone",
            FamilyName::Azinv => "azinv",
        })
    }
}

impl From<FamilyName> for Family {
    fn from(name: FamilyName) -> Self {
        match name {
            FamilyName::Monotone => Family::Monotone,
            FamilyName::Azinv => Family::Azinv,
        }
    }
}

/// Parses a comma-separated list of non-negative integers.
pub fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>, UsageError> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| UsageError(format!("bad list entry {t:?} in {s:?}"))))
        .collect()
}

pub fn join_list<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl CodeSpec {
    /// Builds a spec from optional flag values. `n` may be omitted when `k` is given.
    pub fn from_flags(
        family: Option<FamilyName>,
        n: Option<usize>,
        m: Option<u64>,
        a: i64,
        k: Option<Vec<u64>>,
    ) -> Result<Self, UsageError> {
        let family = family.ok_or_else(|| UsageError("--family is required".into()))?;
        let m = m.ok_or_else(|| UsageError("--m is required".into()))?;
        let n = match (n, &k) {
            (Some(n), _) => n,
            (None, Some(k)) => k.len(),
            (None, None) => return Err(UsageError("--n is required".into())),
        };
        let spec = CodeSpec { family, n, m, a, k };
        spec.params()?;
        Ok(spec)
    }

    pub fn params(&self) -> Result<CodeParams, UsageError> {
        match self.family {
            FamilyName::Monotone => {
                let k = match &self.k {
                    Some(k) if k.len() != self.n => {
                        return Err(UsageError(format!("k has {} entries but n = {}", k.len(), self.n)));
                    }
                    Some(k) => k.clone(),
                    None => (1..=self.n as u64).collect(),
                };
                Ok(MonotoneParams::new(self.m, self.a, k)?.into())
            }
            FamilyName::Azinv => {
                if self.k.is_some() {
                    return Err(UsageError("k applies to monotone codes only".into()));
                }
                Ok(AzinvParams::new(self.n, self.m, self.a)?.into())
            }
        }
    }

    pub fn with_a(&self, a: i64) -> Self {
        CodeSpec { a, ..self.clone() }
    }

    /// Command-line flags that reproduce this spec.
    pub fn flags(&self) -> String {
        let mut s = format!("--family {} --n {} --m {} --a {}", self.family, self.n, self.m, self.a);
        if let Some(k) = &self.k {
            s.push_str(&format!(" --k {}", join_list(k)));
        }
        s
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} m={} a={}", self.family, self.n, self.m, self.a)?;
        if let Some(k) = &self.k {
            write!(f, " k={}", join_list(k))?;
        }
        Ok(())
    }
}
