//! Integer partitions: the common currency of the whole crate.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers. It
//! classifies nilpotent orbits of the classical algebras (Jordan type) and
//! parameterizes the sheets of sl_n. Dual partitions and the dominance order
//! are defined here; everything kind-specific lives in [`crate::kind`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of a non-negative integer: weakly decreasing positive parts.
///
/// The parts are stored in canonical form, without trailing zeros, so
/// structural equality coincides with equality of partitions. The empty
/// partition is the unique partition of 0.
///
/// The derived `Ord` compares part sequences lexicographically; it is used
/// only to fix deterministic output orders and has no order-theoretic
/// meaning. The dominance order is [`Partition::dominates`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::MalformedPartition {
                reason: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition {
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The zero orbit's partition `[1^n]`.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The single-row partition `[n]`; empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The weight: sum of all parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The part at `i`, padding with zeros past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of the value `v` among the parts.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// Number of odd parts.
    pub fn odd_part_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// The dual (conjugate) partition: `dual_i = #{j : parts_j >= i}`.
    ///
    /// Transposes the Young diagram; an involution.
    pub fn dual(&self) -> Partition {
        let cols = self.first();
        let mut dual = Vec::with_capacity(cols);
        for i in 1..=cols {
            dual.push(self.parts.iter().take_while(|&&p| p >= i).count());
        }
        Partition { parts: dual }
    }

    /// Sum of the squares of the dual's parts; the centralizer dimension of
    /// a nilpotent matrix with this Jordan type in gl_n.
    pub fn dual_square_sum(&self) -> usize {
        self.dual().parts.iter().map(|&d| d * d).sum()
    }

    /// Dominance: `true` iff `other ⊴ self`, i.e. every partial sum of
    /// `other` is at most the corresponding partial sum of `self`.
    ///
    /// Restricted to the valid partitions of a classical kind this is the
    /// closure order on nilpotent orbits.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch {
                left: self.weight(),
                right: other.weight(),
            });
        }
        Ok(self.dominates_same_weight(other))
    }

    pub(crate) fn dominates_same_weight(&self, other: &Partition) -> bool {
        let mut sum_self = 0usize;
        let mut sum_other = 0usize;
        for k in 0..self.parts.len().max(other.parts.len()) {
            sum_self += self.part(k);
            sum_other += other.part(k);
            if sum_other > sum_self {
                return false;
            }
        }
        true
    }

    /// Componentwise sum of two partitions, padding the shorter with zeros.
    pub fn row_sum(&self, other: &Partition) -> Partition {
        let len = self.parts.len().max(other.parts.len());
        let parts = (0..len).map(|i| self.part(i) + other.part(i)).collect();
        // Componentwise sums of weakly decreasing sequences stay decreasing.
        Partition { parts }
    }

    /// Componentwise scaling by a positive factor.
    pub fn scale(&self, factor: usize) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| p * factor).collect(),
        }
    }
}

/// All partitions of `n` in reverse-lexicographic order, each exactly once.
///
/// `[n]` comes first and `[1^n]` last; `enumerate_partitions(0)` yields the
/// empty partition alone.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for next in (1..=remaining.min(cap)).rev() {
        current.push(next);
        descend(remaining - next, next, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    /// Plain comma-separated form, e.g. `3,2,2,1`; empty string for the
    /// empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        for p in &self.parts {
            write!(f, "{sep}{p}")?;
            sep = ",";
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `3,2,2,1` or the exponent form `3,2^2,1`; `1^5` expands to
    /// five ones. Parts must be given weakly decreasing, without whitespace.
    fn from_str(text: &str) -> Result<Self> {
        let fail = |reason: &str| Error::PartitionParse {
            text: text.into(),
            reason: reason.into(),
        };
        if text.is_empty() {
            return Err(fail("empty string"));
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let (base, mult) = match token.split_once('^') {
                Some((b, m)) => (b, m),
                None => (token, "1"),
            };
            let part: usize = base
                .parse()
                .map_err(|_| fail(&format!("bad part `{token}`")))?;
            let mult: usize = mult
                .parse()
                .map_err(|_| fail(&format!("bad exponent in `{token}`")))?;
            if part == 0 {
                return Err(fail("parts must be positive"));
            }
            if mult == 0 {
                return Err(fail("exponents must be positive"));
            }
            parts.extend(std::iter::repeat_n(part, mult));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(fail("parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    /// Independent count of partitions of `n` via the pentagonal-number
    /// recurrence; the oracle for `enumerate_partitions`.
    pub(crate) fn partition_count(n: usize) -> u64 {
        let mut table = vec![0u64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut sum: i64 = 0;
            let mut k: usize = 1;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i {
                    break;
                }
                let sign: i64 = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * table[i - g1] as i64;
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= i {
                    sum += sign * table[i - g2] as i64;
                }
                k += 1;
            }
            table[i] = sum as u64;
        }
        table[n]
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p("3,2").dual(), p("2,2,1"));
        assert_eq!(p("3,1,1").dual(), p("3,1,1"));
        assert_eq!(p("1,1,1,1").dual(), p("4"));
        assert_eq!(Partition::empty().dual(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(p("3,2").dominates(&p("3,1,1")).unwrap());
        assert!(p("2,2").dominates(&p("2,2")).unwrap());
        assert!(!p("2,2").dominates(&p("3,1")).unwrap());
        assert!(p("3,1").dominates(&p("2,2")).unwrap());
        assert_eq!(
            p("3,2").dominates(&p("3,1")),
            Err(Error::WeightMismatch { left: 5, right: 4 })
        );
    }

    #[test]
    fn enumerate_base_cases() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4),
            vec![p("4"), p("3,1"), p("2,2"), p("2,1,1"), p("1,1,1,1")]
        );
    }

    #[test]
    fn enumerate_count_matches_pentagonal_recurrence() {
        assert_eq!(partition_count(4), 5);
        assert_eq!(partition_count(10), 42);
        for n in 0..=30 {
            assert_eq!(
                enumerate_partitions(n).len() as u64,
                partition_count(n),
                "count mismatch at n={n}"
            );
        }
    }

    #[test]
    fn enumerate_is_reverse_lexicographic_and_duplicate_free() {
        for n in 0..=12 {
            let all = enumerate_partitions(n);
            for w in all.windows(2) {
                assert!(w[0] > w[1], "not strictly descending at n={n}");
            }
            for lam in &all {
                assert_eq!(lam.weight(), n);
            }
        }
    }

    #[test]
    fn dominance_is_partial_order_up_to_10() {
        for n in 0..=10 {
            let all = enumerate_partitions(n);
            for a in &all {
                assert!(a.dominates(a).unwrap(), "reflexivity");
                for b in &all {
                    if a.dominates(b).unwrap() && b.dominates(a).unwrap() {
                        assert_eq!(a, b, "antisymmetry");
                    }
                    for c in &all {
                        if a.dominates(b).unwrap()
                            && b.dominates(c).unwrap()
                            && !a.dominates(c).unwrap()
                        {
                            panic!("transitivity fails: {a} / {b} / {c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dual_is_an_involution_up_to_30() {
        for n in 0..=30 {
            for lam in enumerate_partitions(n) {
                assert_eq!(lam.dual().dual(), lam);
                assert_eq!(lam.dual().weight(), n);
            }
        }
    }

    #[test]
    fn dual_reverses_dominance_up_to_12() {
        for n in 0..=12 {
            let all = enumerate_partitions(n);
            for a in &all {
                for b in &all {
                    assert_eq!(
                        a.dominates(b).unwrap(),
                        b.dual().dominates(&a.dual()).unwrap(),
                        "order reversal fails for {a} vs {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("3,2^2,1").parts(), &[3, 2, 2, 1]);
        assert_eq!(p("1^5").parts(), &[1, 1, 1, 1, 1]);
        assert_eq!(p("4").to_string(), "4");
        assert_eq!(p("3,2,2,1").to_string(), "3,2,2,1");
        for bad in ["", "3,x", "0", "1,3", "3,,2", "2^0", "0^3", "^2", "3, 2"] {
            assert!(bad.parse::<Partition>().is_err(), "accepted `{bad}`");
        }
    }

    #[test]
    fn constructor_rejects_malformed_parts() {
        assert!(Partition::new(vec![3, 2, 2, 1]).is_ok());
        assert!(Partition::new(vec![]).is_ok());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn row_sum_and_scale() {
        assert_eq!(p("3,1").row_sum(&p("1,1,1")), p("4,2,1"));
        assert_eq!(p("2,1").scale(2), p("4,2"));
        assert_eq!(Partition::empty().row_sum(&p("2")), p("2"));
    }

    fn arb_partition(max_n: usize) -> impl Strategy<Value = Partition> {
        (0..=max_n)
            .prop_flat_map(|n| {
                let count = enumerate_partitions(n).len();
                (Just(n), 0..count.max(1))
            })
            .prop_map(|(n, i)| enumerate_partitions(n)[i].clone())
    }

    proptest! {
        #[test]
        fn dual_is_an_involution(lam in arb_partition(30)) {
            prop_assert_eq!(lam.dual().dual(), lam);
        }

        #[test]
        fn dual_preserves_weight(lam in arb_partition(30)) {
            prop_assert_eq!(lam.dual().weight(), lam.weight());
        }

        #[test]
        fn display_parse_round_trip(lam in arb_partition(30)) {
            if !lam.is_empty() {
                let back: Partition = lam.to_string().parse().unwrap();
                prop_assert_eq!(back, lam);
            }
        }
    }
}
