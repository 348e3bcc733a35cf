//! Classical Lie algebra kinds and the partition arithmetic that depends on
//! them: Jordan-type validity, the B/C/D collapse and orbit dimensions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// The four classical families, embedded in gl_N via the natural
/// representation: A = sl_n, B = so_odd, C = sp_even, D = so_even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    /// Whether a partition satisfies the parity-multiplicity condition of
    /// this family, regardless of its weight.
    ///
    /// Orthogonal types (B, D) need every even part with even multiplicity;
    /// the symplectic type (C) needs every odd part with even multiplicity.
    /// In type A every partition occurs.
    pub fn admits(self, lambda: &Partition) -> bool {
        let bad_parity = match self {
            Family::A => return true,
            Family::B | Family::D => 0,
            Family::C => 1,
        };
        let mut i = 0;
        let parts = lambda.parts();
        while i < parts.len() {
            let mut j = i;
            while j < parts.len() && parts[j] == parts[i] {
                j += 1;
            }
            if parts[i] % 2 == bad_parity && (j - i) % 2 == 1 {
                return false;
            }
            i = j;
        }
        true
    }

    /// Dimension of the algebra on its natural representation of size `n`,
    /// including the degenerate tails so_0, so_1, so_2 and sp_0 that occur
    /// inside Levi subalgebras.
    ///
    /// Type A uses the gl_n convention n^2; orbit dimensions and nilradical
    /// dimensions agree with the sl_n ones, which is all this crate needs.
    pub(crate) fn ambient_dim(self, n: usize) -> usize {
        match self {
            Family::A => n * n,
            Family::B | Family::D => n.saturating_sub(1) * n / 2,
            Family::C => n * (n + 1) / 2,
        }
    }

    /// The collapse: dominance-maximum partition admitted by this family
    /// below `lambda`. Identity in type A.
    ///
    /// Implemented as a repair loop: while some part of the unconstrained
    /// parity has odd multiplicity, take the largest such value, shrink its
    /// last copy by one and give the unit back at the earliest later slot
    /// that keeps the sequence decreasing. The dominance-maximum
    /// characterization is certified exhaustively in the tests; that
    /// characterization, not the loop, is the contract.
    pub(crate) fn collapse_parts(self, lambda: &Partition) -> Partition {
        if self == Family::A {
            return lambda.clone();
        }
        let bad_parity = match self {
            Family::B | Family::D => 0,
            Family::C => 1,
            Family::A => unreachable!(),
        };
        let mut parts = lambda.parts().to_vec();
        loop {
            let bad = largest_odd_multiplicity_part(&parts, bad_parity);
            let q = match bad {
                None => break,
                Some(q) => q,
            };
            // A bad value of 1 would need the total weight to be odd, which
            // no symplectic algebra admits.
            debug_assert!(q >= 2, "collapse of an odd weight in family C");
            let i = parts.iter().rposition(|&p| p == q).expect("part exists");
            parts[i] -= 1;
            let mut k = i + 1;
            while k < parts.len() && parts[k] + 1 > parts[k - 1] {
                k += 1;
            }
            if k < parts.len() {
                parts[k] += 1;
            } else {
                parts.push(1);
            }
        }
        Partition::new(parts).expect("repair keeps parts decreasing")
    }
}

fn largest_odd_multiplicity_part(parts: &[usize], parity: usize) -> Option<usize> {
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if parts[i] % 2 == parity && (j - i) % 2 == 1 {
            return Some(parts[i]);
        }
        i = j;
    }
    None
}

/// A classical simple Lie algebra given by family and the dimension `N` of
/// its natural representation: `A:n` (n >= 1), `B:N` (odd N >= 3),
/// `C:N` (even N >= 2), `D:N` (even N >= 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieAlgebraKind {
    family: Family,
    natural_dim: usize,
}

impl LieAlgebraKind {
    pub fn new(family: Family, natural_dim: usize) -> Result<Self> {
        let n = natural_dim;
        let ok = match family {
            Family::A => n >= 1,
            Family::B => n >= 3 && n % 2 == 1,
            Family::C => n >= 2 && n.is_multiple_of(2),
            Family::D => n >= 4 && n.is_multiple_of(2),
        };
        if !ok {
            return Err(Error::KindParse {
                text: format!("{}:{}", family.letter(), n),
                reason: "natural dimension does not fit the family".into(),
            });
        }
        Ok(LieAlgebraKind {
            family,
            natural_dim,
        })
    }

    pub fn family(self) -> Family {
        self.family
    }

    /// Dimension of the natural representation.
    pub fn natural_dim(self) -> usize {
        self.natural_dim
    }

    /// Dimension of the algebra: A -> N^2 - 1, B/D -> N(N-1)/2,
    /// C -> N(N+1)/2.
    pub fn adjoint_dim(self) -> usize {
        match self.family {
            Family::A => self.natural_dim * self.natural_dim - 1,
            _ => self.family.ambient_dim(self.natural_dim),
        }
    }

    fn check_weight(self, lambda: &Partition) -> Result<()> {
        if lambda.weight() != self.natural_dim {
            return Err(Error::WrongWeightForKind {
                weight: lambda.weight(),
                kind: self,
                expected: self.natural_dim,
            });
        }
        Ok(())
    }

    /// Whether `lambda` is the Jordan type of a nilpotent element of this
    /// algebra. Errors when the weight is not the natural dimension.
    pub fn is_valid(self, lambda: &Partition) -> Result<bool> {
        self.check_weight(lambda)?;
        Ok(self.family.admits(lambda))
    }

    /// The X-collapse of `lambda`: the unique dominance-maximum valid
    /// partition dominated by `lambda`. Defined for families B, C, D.
    pub fn collapse(self, lambda: &Partition) -> Result<Partition> {
        self.check_weight(lambda)?;
        if self.family == Family::A {
            return Err(Error::UnsupportedFamily {
                operation: "collapse",
                family: 'A',
            });
        }
        Ok(self.family.collapse_parts(lambda))
    }

    /// Dimension of the nilpotent orbit with Jordan type `lambda`.
    ///
    /// A: N^2 - sum(dual^2); B/D: N(N-1)/2 - (sum(dual^2) - #odd)/2;
    /// C: N(N+1)/2 - (sum(dual^2) + #odd)/2. Errors on invalid input.
    pub fn orbit_dimension(self, lambda: &Partition) -> Result<usize> {
        if !self.is_valid(lambda)? {
            return Err(Error::InvalidForKind {
                partition: lambda.to_string(),
                kind: self,
            });
        }
        Ok(orbit_dimension_unchecked(self.family, lambda))
    }
}

/// Orbit dimension without the kind bounds; also correct for the degenerate
/// small algebras (so_0, so_1, so_2, sp_0) that appear as Levi tails.
pub(crate) fn orbit_dimension_unchecked(family: Family, lambda: &Partition) -> usize {
    let n = lambda.weight();
    let squares = lambda.dual_square_sum();
    match family {
        Family::A => n * n - squares,
        Family::B | Family::D => {
            n.saturating_sub(1) * n / 2 - (squares - lambda.odd_part_count()) / 2
        }
        Family::C => n * (n + 1) / 2 - (squares + lambda.odd_part_count()) / 2,
    }
}

impl fmt::Display for LieAlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family.letter(), self.natural_dim)
    }
}

/// Every kind with natural dimension at most `max_n`; shared by the
/// exhaustive test loops.
#[cfg(test)]
pub(crate) fn all_kinds_up_to(max_n: usize) -> Vec<LieAlgebraKind> {
    let mut kinds = Vec::new();
    for n in 1..=max_n {
        for family in [Family::A, Family::B, Family::C, Family::D] {
            if let Ok(kind) = LieAlgebraKind::new(family, n) {
                kinds.push(kind);
            }
        }
    }
    kinds
}

impl FromStr for LieAlgebraKind {
    type Err = Error;

    /// Parses `A:n`, `B:N`, `C:N` or `D:N`.
    fn from_str(text: &str) -> Result<Self> {
        let fail = |reason: &str| Error::KindParse {
            text: text.into(),
            reason: reason.into(),
        };
        let (fam, dim) = text.split_once(':').ok_or_else(|| fail("expected `family:N`"))?;
        let family = match fam {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            _ => return Err(fail("family must be one of A, B, C, D")),
        };
        let natural_dim: usize = dim.parse().map_err(|_| fail("bad dimension"))?;
        LieAlgebraKind::new(family, natural_dim)
    }
}
