//! Verification grid files.
//!
//! One grid point per line: `family n m a [k=list] classes=list`, where `a`
//! may be `*` for every residue in `[0, m)`. Blank lines and lines starting
//! with `#` are ignored.

use syncode::oracle::DEFAULT_GUARD;
use syncode::ErrorClass;

use crate::codespec::{parse_list, CodeSpec, FamilyName};
use crate::UsageError;

/// Grid used by `verify` when no file is given.
pub const DEFAULT_GRID: &str = include_str!("default_grid.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPoint {
    /// 1-based source line.
    pub line: usize,
    pub spec: CodeSpec,
    pub classes: Vec<ErrorClass>,
}

impl GridPoint {
    /// The grid-file line that reproduces this point alone.
    pub fn to_line(&self) -> String {
        let mut s = format!("{} {} {} {}", self.spec.family, self.spec.n, self.spec.m, self.spec.a);
        if let Some(k) = &self.spec.k {
            s.push_str(&format!(" k={}", crate::codespec::join_list(k)));
        }
        s.push_str(&format!(" classes={}", crate::codespec::join_list(&self.classes)));
        s
    }
}

fn native(family: FamilyName) -> [ErrorClass; 2] {
    match family {
        FamilyName::Monotone => [ErrorClass::Del, ErrorClass::Rev],
        FamilyName::Azinv => [ErrorClass::Bad, ErrorClass::Bar],
    }
}

fn parse_line(line: usize, text: &str) -> Result<Vec<GridPoint>, UsageError> {
    let at = |msg: String| UsageError(format!("grid line {line}: {msg}"));
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() < 5 {
        return Err(at(format!("expected `family n m a [k=list] classes=list`, got {text:?}")));
    }
    let family: FamilyName = tokens[0].parse().map_err(|e: UsageError| at(e.0))?;
    let n: usize = tokens[1].parse().map_err(|_| at(format!("bad n {:?}", tokens[1])))?;
    let m: u64 = tokens[2].parse().map_err(|_| at(format!("bad m {:?}", tokens[2])))?;
    let a: Option<i64> = match tokens[3] {
        "*" => None,
        t => Some(t.parse().map_err(|_| at(format!("bad a {t:?}")))?),
    };

    let mut k = None;
    let mut classes = None;
    for token in &tokens[4..] {
        match token.split_once('=') {
            Some(("k", list)) if k.is_none() => k = Some(parse_list::<u64>(list).map_err(|e| at(e.0))?),
            Some(("classes", list)) if classes.is_none() => {
                let parsed = list
                    .split(',')
                    .map(|c| c.parse::<ErrorClass>().map_err(|e| at(e.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                classes = Some(parsed);
            }
            _ => return Err(at(format!("unexpected token {token:?}"))),
        }
    }
    let mut classes = classes.ok_or_else(|| at("missing classes=".into()))?;
    classes.sort();
    classes.dedup();
    if let Some(c) = classes.iter().find(|c| !native(family).contains(c)) {
        return Err(at(format!("class {c} does not apply to {family} codes")));
    }
    if n > DEFAULT_GUARD {
        return Err(at(format!("n = {n} exceeds the enumeration guard {DEFAULT_GUARD}")));
    }

    let spec = CodeSpec { family, n, m, a: a.unwrap_or(0), k };
    spec.params().map_err(|e| at(e.0))?;
    let residues: Vec<i64> = match a {
        Some(a) => vec![a],
        None => (0..m as i64).collect(),
    };
    Ok(residues
        .into_iter()
        .map(|a| GridPoint { line, spec: spec.with_a(a), classes: classes.clone() })
        .collect())
}

/// Parses a grid file and expands `*` residues. Fails on an empty grid.
pub fn parse_grid(text: &str) -> Result<Vec<GridPoint>, UsageError> {
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        points.extend(parse_line(i + 1, line)?);
    }
    if points.is_empty() {
        return Err(UsageError("no grid points".into()));
    }
    Ok(points)
}
