//! Nilpotent orbits of the classical algebras: closure order, induction
//! from Levi subalgebras, rigidity, and the search for rigid orbits whose
//! closure contains a non-rigid orbit.
//!
//! A rigid orbit is one that is a sheet by itself, equivalently one that is
//! not induced from any proper Levi subalgebra. Rigidity is decided by a
//! closed-form criterion on the partition and certified against the
//! brute-force induction search; any disagreement between the two routes is
//! a bug.

use crate::error::{Error, Result};
use crate::kind::{orbit_dimension_unchecked, Family, LieAlgebraKind};
use crate::partition::{enumerate_partitions, Partition};
use crate::sheets::run_chunked;

/// A nilpotent orbit, classified by its Jordan type.
///
/// Very even type D partitions label two orbits exchanged by an outer
/// automorphism; this crate works at partition level and keeps one record
/// for the pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentOrbit {
    kind: LieAlgebraKind,
    lambda: Partition,
}

impl NilpotentOrbit {
    pub fn new(kind: LieAlgebraKind, lambda: Partition) -> Result<Self> {
        if !kind.is_valid(&lambda)? {
            return Err(Error::InvalidForKind {
                partition: lambda.to_string(),
                kind,
            });
        }
        Ok(NilpotentOrbit { kind, lambda })
    }

    pub fn kind(&self) -> LieAlgebraKind {
        self.kind
    }

    pub fn partition(&self) -> &Partition {
        &self.lambda
    }

    pub fn dimension(&self) -> usize {
        orbit_dimension_unchecked(self.kind.family(), &self.lambda)
    }
}

/// Closure order on orbits of one algebra: `lower` lies in the closure of
/// `upper` iff `upper`'s partition dominates `lower`'s.
pub fn orbit_closure_leq(lower: &NilpotentOrbit, upper: &NilpotentOrbit) -> Result<bool> {
    if lower.kind != upper.kind {
        return Err(Error::KindMismatch {
            left: lower.kind,
            right: upper.kind,
        });
    }
    upper.lambda.dominates(&lower.lambda)
}

/// A parabolic's Levi factor inside a classical algebra, at the level of
/// block data: gl blocks of sizes `a_1, ..., a_r` plus a smaller algebra of
/// the same family on `tail_n` letters. In type A the tail is absent and
/// the blocks sum to N; otherwise `2 * sum(a_i) + tail_n = N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviSpec {
    kind: LieAlgebraKind,
    gl_blocks: Vec<usize>,
    tail_n: usize,
}

impl LeviSpec {
    pub fn new(kind: LieAlgebraKind, gl_blocks: Vec<usize>, tail_n: usize) -> Result<Self> {
        if gl_blocks.contains(&0) {
            return Err(Error::MalformedLevi {
                reason: "gl blocks must be positive".into(),
            });
        }
        let blocks_sum: usize = gl_blocks.iter().sum();
        let n = kind.natural_dim();
        match kind.family() {
            Family::A => {
                if tail_n != 0 || blocks_sum != n {
                    return Err(Error::MalformedLevi {
                        reason: format!("type A blocks must sum to {n} with no tail"),
                    });
                }
            }
            _ => {
                if 2 * blocks_sum + tail_n != n {
                    return Err(Error::MalformedLevi {
                        reason: format!("blocks and tail must satisfy 2*sum + tail = {n}"),
                    });
                }
            }
        }
        Ok(LeviSpec {
            kind,
            gl_blocks,
            tail_n,
        })
    }

    pub fn kind(&self) -> LieAlgebraKind {
        self.kind
    }

    pub fn gl_blocks(&self) -> &[usize] {
        &self.gl_blocks
    }

    pub fn tail_n(&self) -> usize {
        self.tail_n
    }

    /// Whether this is a proper Levi, i.e. has at least one gl block.
    pub fn is_proper(&self) -> bool {
        !self.gl_blocks.is_empty()
    }

    /// Dimension of the nilradical of a parabolic with this Levi factor:
    /// `(dim g - dim l) / 2`.
    pub fn nilradical_dim(&self) -> usize {
        let family = self.kind.family();
        let ambient = family.ambient_dim(self.kind.natural_dim());
        let levi: usize = self.gl_blocks.iter().map(|&a| a * a).sum::<usize>()
            + family.ambient_dim(self.tail_n);
        (ambient - levi) / 2
    }
}

/// Induction of a nilpotent orbit from a Levi subalgebra.
///
/// In type A the induced orbit is the componentwise sum of the block
/// orbits. Otherwise the blocks are absorbed one at a time: starting from
/// the tail orbit, each gl block `nu` grows the algebra by `2 * |nu|`
/// letters and the partition becomes the collapse of `current + 2 * nu`.
/// The result does not depend on the block order; the tests enforce that.
pub fn induce(
    levi: &LeviSpec,
    gl_orbits: &[Partition],
    tail_orbit: &Partition,
) -> Result<NilpotentOrbit> {
    if gl_orbits.len() != levi.gl_blocks.len() {
        return Err(Error::MalformedLevi {
            reason: format!(
                "{} gl blocks but {} orbits",
                levi.gl_blocks.len(),
                gl_orbits.len()
            ),
        });
    }
    for (nu, &a) in gl_orbits.iter().zip(&levi.gl_blocks) {
        if nu.weight() != a {
            return Err(Error::MalformedLevi {
                reason: format!("orbit [{nu}] does not fit gl block of size {a}"),
            });
        }
    }
    let family = levi.kind.family();
    if tail_orbit.weight() != levi.tail_n || !family.admits(tail_orbit) {
        return Err(Error::MalformedLevi {
            reason: format!(
                "tail orbit [{tail_orbit}] is not valid on {} letters",
                levi.tail_n
            ),
        });
    }
    let mut current = tail_orbit.clone();
    for nu in gl_orbits {
        current = match family {
            Family::A => current.row_sum(nu),
            _ => family.collapse_parts(&current.row_sum(&nu.scale(2))),
        };
    }
    NilpotentOrbit::new(levi.kind, current)
}

/// Whether the orbit is induced from some proper Levi subalgebra.
///
/// Exhaustive search over the maximal Levis (one gl block plus the largest
/// possible tail) and every choice of orbits on their factors; transitivity
/// of induction makes this sufficient.
pub fn is_induced(orbit: &NilpotentOrbit) -> bool {
    let kind = orbit.kind;
    let n = kind.natural_dim();
    match kind.family() {
        Family::A => {
            for a in 1..=n / 2 {
                for nu1 in enumerate_partitions(a) {
                    for nu2 in enumerate_partitions(n - a) {
                        if nu1.row_sum(&nu2) == orbit.lambda {
                            return true;
                        }
                    }
                }
            }
            false
        }
        family => {
            for a in 1..=n / 2 {
                let tail_n = n - 2 * a;
                let levi = LeviSpec::new(kind, vec![a], tail_n).expect("maximal Levi data");
                for nu in enumerate_partitions(a) {
                    for mu in admissible_partitions(family, tail_n) {
                        let induced = induce(&levi, std::slice::from_ref(&nu), &mu).expect("valid Levi data");
                        if induced.lambda == orbit.lambda {
                            return true;
                        }
                    }
                }
            }
            false
        }
    }
}

fn admissible_partitions(family: Family, n: usize) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|p| family.admits(p))
        .collect()
}

/// Whether the orbit is rigid, i.e. a sheet on its own.
///
/// Type A has a single rigid orbit, the zero one. For B, C, D the
/// closed-form criterion is used: consecutive parts differ by at most one
/// (so the smallest part is 1), and no part of the parity left free by
/// validity (odd for B/D, even for C) occurs exactly twice. The brute-force
/// route NOT [`is_induced`] must agree; the test suite checks every kind
/// with natural dimension up to 12.
pub fn is_rigid(orbit: &NilpotentOrbit) -> bool {
    let lambda = &orbit.lambda;
    match orbit.kind.family() {
        Family::A => lambda.parts().iter().all(|&p| p == 1),
        family => {
            let parts = lambda.parts();
            for (i, &part) in parts.iter().enumerate() {
                if part - lambda.part(i + 1) > 1 {
                    return false;
                }
            }
            let free_parity = match family {
                Family::B | Family::D => 1,
                Family::C => 0,
                Family::A => unreachable!(),
            };
            let mut i = 0;
            while i < parts.len() {
                let mut j = i;
                while j < parts.len() && parts[j] == parts[i] {
                    j += 1;
                }
                if parts[i] % 2 == free_parity && j - i == 2 {
                    return false;
                }
                i = j;
            }
            true
        }
    }
}

/// Ordered pairs `(rigid, non_rigid)` of distinct orbits of the algebra
/// with the non-rigid orbit contained in the closure of the rigid one.
///
/// Any such pair certifies that the closure of the sheet formed by the
/// rigid orbit is not a union of sheets: the sheets through the non-rigid
/// orbit leave the nilpotent cone. Pairs are sorted by (upper, lower)
/// partition strings.
pub fn rigid_closure_counterexamples(kind: LieAlgebraKind) -> Vec<(NilpotentOrbit, NilpotentOrbit)> {
    rigid_closure_counterexamples_threaded(kind, 1)
}

/// [`rigid_closure_counterexamples`] with the rigidity scan split over
/// `threads` workers; the result is identical for every thread count.
pub fn rigid_closure_counterexamples_threaded(
    kind: LieAlgebraKind,
    threads: usize,
) -> Vec<(NilpotentOrbit, NilpotentOrbit)> {
    let orbits: Vec<NilpotentOrbit> = admissible_partitions(kind.family(), kind.natural_dim())
        .into_iter()
        .map(|lambda| NilpotentOrbit { kind, lambda })
        .collect();
    let rigidity = run_chunked(&orbits, threads, is_rigid);
    let mut pairs = Vec::new();
    for (upper, &upper_rigid) in orbits.iter().zip(&rigidity) {
        if !upper_rigid {
            continue;
        }
        for (lower, &lower_rigid) in orbits.iter().zip(&rigidity) {
            if lower_rigid || lower.lambda == upper.lambda {
                continue;
            }
            if upper.lambda.dominates_same_weight(&lower.lambda) {
                pairs.push((upper.clone(), lower.clone()));
            }
        }
    }
    pairs.sort_by_key(|(upper, lower)| (upper.lambda.to_string(), lower.lambda.to_string()));
    pairs
}
