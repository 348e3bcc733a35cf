//! A small file-backed catalog of exceptional-type nilpotent-orbit facts:
//! Bala-Carter labels, rigidity flags and closure containments.
//!
//! Only curated facts ship as data; the format lets users extend the
//! dataset with further orbits and edges. Labels are opaque case-sensitive
//! strings such as `3A1` or `A2+2A1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The five exceptional simple types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExceptionalAlgebra {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl ExceptionalAlgebra {
    pub fn name(self) -> &'static str {
        match self {
            ExceptionalAlgebra::G2 => "G2",
            ExceptionalAlgebra::F4 => "F4",
            ExceptionalAlgebra::E6 => "E6",
            ExceptionalAlgebra::E7 => "E7",
            ExceptionalAlgebra::E8 => "E8",
        }
    }
}

impl fmt::Display for ExceptionalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExceptionalAlgebra {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s {
            "G2" => Ok(ExceptionalAlgebra::G2),
            "F4" => Ok(ExceptionalAlgebra::F4),
            "E6" => Ok(ExceptionalAlgebra::E6),
            "E7" => Ok(ExceptionalAlgebra::E7),
            "E8" => Ok(ExceptionalAlgebra::E8),
            _ => Err(()),
        }
    }
}

/// One orbit record: algebra, Bala-Carter label, rigidity flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub algebra: ExceptionalAlgebra,
    pub label: String,
    pub rigid: bool,
}

/// An assertion that `lower` lies in the closure of `upper`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClosureEdge {
    pub algebra: ExceptionalAlgebra,
    pub upper: String,
    pub lower: String,
}

/// In-memory catalog; immutable once loaded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    rigid: BTreeMap<(ExceptionalAlgebra, String), bool>,
    edges: BTreeSet<ClosureEdge>,
}

impl Catalog {
    /// Parses the line-oriented catalog format: `#` comments and blank
    /// lines are skipped; statements are
    /// `orbit <algebra> <label> rigid=<true|false>` and
    /// `closure <algebra> <upper> > <lower>`.
    ///
    /// Duplicate orbit records and closure edges naming unknown labels are
    /// rejected, with the offending line number.
    pub fn parse(source: &str) -> Result<Catalog> {
        let mut catalog = Catalog::default();
        let mut pending_edges: Vec<(usize, ClosureEdge)> = Vec::new();
        for (idx, raw) in source.lines().enumerate() {
            let line_no = idx + 1;
            let fail = |reason: String| Error::CatalogParse {
                line: line_no,
                reason,
            };
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["orbit", algebra, label, flag] => {
                    let algebra: ExceptionalAlgebra = algebra
                        .parse()
                        .map_err(|_| fail(format!("unknown algebra `{algebra}`")))?;
                    let rigid = match *flag {
                        "rigid=true" => true,
                        "rigid=false" => false,
                        other => return Err(fail(format!("expected rigid=<bool>, got `{other}`"))),
                    };
                    let key = (algebra, label.to_string());
                    if catalog.rigid.contains_key(&key) {
                        return Err(fail(format!("duplicate orbit {algebra} {label}")));
                    }
                    catalog.rigid.insert(key, rigid);
                }
                ["closure", algebra, upper, ">", lower] => {
                    let algebra: ExceptionalAlgebra = algebra
                        .parse()
                        .map_err(|_| fail(format!("unknown algebra `{algebra}`")))?;
                    pending_edges.push((
                        line_no,
                        ClosureEdge {
                            algebra,
                            upper: upper.to_string(),
                            lower: lower.to_string(),
                        },
                    ));
                }
                _ => return Err(fail(format!("unrecognized statement `{line}`"))),
            }
        }
        for (line_no, edge) in pending_edges {
            for label in [&edge.upper, &edge.lower] {
                if !catalog.rigid.contains_key(&(edge.algebra, label.clone())) {
                    return Err(Error::CatalogParse {
                        line: line_no,
                        reason: format!("closure edge names unknown orbit {} {label}", edge.algebra),
                    });
                }
            }
            catalog.edges.insert(edge);
        }
        Ok(catalog)
    }

    /// The dataset compiled into the crate from
    /// `data/exceptional_paper_facts.txt`.
    pub fn bundled() -> Catalog {
        Catalog::parse(BUNDLED_FACTS).expect("bundled dataset parses")
    }

    /// Canonical text form; `parse` of the output reproduces the catalog.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for ((algebra, label), rigid) in &self.rigid {
            out.push_str(&format!("orbit {algebra} {label} rigid={rigid}\n"));
        }
        for edge in &self.edges {
            out.push_str(&format!(
                "closure {} {} > {}\n",
                edge.algebra, edge.upper, edge.lower
            ));
        }
        out
    }

    pub fn orbit_count(&self) -> usize {
        self.rigid.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Rigidity flag of a recorded orbit.
    pub fn is_rigid(&self, algebra: ExceptionalAlgebra, label: &str) -> Result<bool> {
        self.rigid
            .get(&(algebra, label.to_string()))
            .copied()
            .ok_or_else(|| Error::UnknownLabel {
                algebra: algebra.to_string(),
                label: label.to_string(),
            })
    }

    /// Whether `lower` is reachable from `upper` through recorded closure
    /// edges: the reflexive-transitive closure of the sparse edge set.
    pub fn closure_contains(
        &self,
        algebra: ExceptionalAlgebra,
        upper: &str,
        lower: &str,
    ) -> Result<bool> {
        for label in [upper, lower] {
            if !self.rigid.contains_key(&(algebra, label.to_string())) {
                return Err(Error::UnknownLabel {
                    algebra: algebra.to_string(),
                    label: label.to_string(),
                });
            }
        }
        let mut stack = vec![upper.to_string()];
        let mut seen = BTreeSet::new();
        while let Some(current) = stack.pop() {
            if current == lower {
                return Ok(true);
            }
            if !seen.insert(current.clone()) {
                continue;
            }
            for edge in &self.edges {
                if edge.algebra == algebra && edge.upper == current {
                    stack.push(edge.lower.clone());
                }
            }
        }
        Ok(false)
    }
}

const BUNDLED_FACTS: &str = include_str!("../../../data/exceptional_paper_facts.txt");

/// The four recorded exceptional pairs: rigid upper orbit, non-rigid lower
/// orbit in its closure.
pub const EXPECTED_PAIRS: [(ExceptionalAlgebra, &str, &str); 4] = [
    (ExceptionalAlgebra::E6, "3A1", "2A1"),
    (ExceptionalAlgebra::E7, "A2+2A1", "A2+A1"),
    (ExceptionalAlgebra::E8, "A2+A1", "A2"),
    (ExceptionalAlgebra::F4, "A2+A1", "A2"),
];

/// Outcome of a single catalog check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub description: String,
    pub passed: bool,
    pub detail: Option<String>,
}

/// Result of [`verify_counterexample_pairs`]: one entry per check, in a
/// fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn total(&self) -> usize {
        self.checks.len()
    }

    pub fn is_success(&self) -> bool {
        self.passed() == self.total()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let status = if check.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} {}", check.description)?;
            if let Some(detail) = &check.detail {
                write!(f, " ({detail})")?;
            }
            writeln!(f)?;
        }
        write!(f, "{}/{} checks passed", self.passed(), self.total())
    }
}

/// Verifies the four recorded pairs against a catalog: for each, the upper
/// orbit must be rigid, the lower non-rigid, and the lower contained in the
/// closure of the upper. Missing records are reported as failed checks, not
/// errors; a complete bundled catalog passes 12/12.
pub fn verify_counterexample_pairs(catalog: &Catalog) -> VerificationReport {
    let mut checks = Vec::with_capacity(EXPECTED_PAIRS.len() * 3);
    for (algebra, upper, lower) in EXPECTED_PAIRS {
        let mut push = |description: String, outcome: Result<bool>, expect: bool| {
            let (passed, detail) = match outcome {
                Ok(value) if value == expect => (true, None),
                Ok(value) => (false, Some(format!("got {value}"))),
                Err(err) => (false, Some(err.to_string())),
            };
            checks.push(Check {
                description,
                passed,
                detail,
            });
        };
        push(
            format!("{algebra}: {upper} is rigid"),
            catalog.is_rigid(algebra, upper),
            true,
        );
        push(
            format!("{algebra}: {lower} is not rigid"),
            catalog.is_rigid(algebra, lower),
            false,
        );
        push(
            format!("{algebra}: {lower} lies in the closure of {upper}"),
            catalog.closure_contains(algebra, upper, lower),
            true,
        );
    }
    VerificationReport { checks }
}
