//! Sheets of sl_n.
//!
//! Each sheet contains a unique nilpotent orbit, and the orbit's partition
//! determines the sheet completely, so sheets are handled through their
//! partitions. A sheet lies in the closure of another exactly when the dual
//! parts of its partition arise as block sums of the other's dual parts;
//! [`sheet_precedes`] decides that combinatorial condition exactly.
//!
//! The sheet order refines the dominance order strictly: already for n = 4
//! there are dominance-comparable pairs that are not sheet-comparable, so
//! the closure of a sheet need not be a union of sheets.
//! [`counterexample_pairs`] lists every witness for a given n.

use std::thread;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// A sheet of sl_n, described by the partition of its nilpotent orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheetDescriptor {
    lambda: Partition,
    levi_blocks: Partition,
    orbit_dim: usize,
}

impl SheetDescriptor {
    /// The sheet whose nilpotent orbit has partition `lambda`; this map is
    /// a bijection onto the sheets of sl_n for n = weight.
    pub fn from_orbit(lambda: &Partition) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let levi_blocks = lambda.dual();
        let n = lambda.weight();
        let orbit_dim = n * n - levi_blocks.parts().iter().map(|&b| b * b).sum::<usize>();
        Ok(SheetDescriptor {
            lambda: lambda.clone(),
            levi_blocks,
            orbit_dim,
        })
    }

    /// Partition of the sheet's nilpotent orbit.
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// Block sizes of a Levi subalgebra whose centre generates the sheet;
    /// the dual partition of [`Self::lambda`].
    pub fn levi_blocks(&self) -> &Partition {
        &self.levi_blocks
    }

    /// Common dimension of all orbits in the sheet.
    pub fn orbit_dim(&self) -> usize {
        self.orbit_dim
    }
}

/// Decides the sheet order: the sheet of `lambda` lies in the closure of
/// the sheet of `lambda_p` iff the dual parts of `lambda` can be written as
/// block sums of the dual parts of `lambda_p`, over a partition of the dual
/// index set into nonempty blocks.
pub fn sheet_precedes(lambda: &Partition, lambda_p: &Partition) -> Result<bool> {
    if lambda.weight() != lambda_p.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.weight(),
            right: lambda_p.weight(),
        });
    }
    Ok(sheet_precedes_same_weight(lambda, lambda_p))
}

fn sheet_precedes_same_weight(lambda: &Partition, lambda_p: &Partition) -> bool {
    let targets = lambda.dual();
    let items = lambda_p.dual();
    let targets = targets.parts();
    let items = items.parts();
    // Blocks are nonempty, so there must be at least as many items as
    // targets; equal weights make the sums match overall.
    if targets.len() > items.len() {
        return false;
    }
    if targets.is_empty() {
        return items.is_empty();
    }
    if items[0] > targets[0] {
        return false;
    }
    let mut used = vec![false; items.len()];
    fill_target(targets, items, &mut used, 0, targets[0], 0, 0)
}

/// Depth-first block-sum matching. Targets are filled left to right, each
/// as an increasing run of item indices; equal items are never retried at
/// the same depth, and a block for a target equal to its predecessor must
/// start strictly after the predecessor's first item.
fn fill_target(
    targets: &[usize],
    items: &[usize],
    used: &mut [bool],
    target_idx: usize,
    residual: usize,
    from: usize,
    block_start_floor: usize,
) -> bool {
    if residual == 0 {
        let next = target_idx + 1;
        if next == targets.len() {
            return true;
        }
        let floor = if targets[next] == targets[target_idx] {
            block_start_floor
        } else {
            0
        };
        return fill_target(targets, items, used, next, targets[next], floor, floor);
    }
    let fresh_block = residual == targets[target_idx];
    let mut last_tried = usize::MAX;
    for i in from..items.len() {
        if used[i] || items[i] > residual || items[i] == last_tried {
            continue;
        }
        used[i] = true;
        let floor = if fresh_block { i + 1 } else { block_start_floor };
        if fill_target(targets, items, used, target_idx, residual - items[i], i + 1, floor) {
            used[i] = false;
            return true;
        }
        used[i] = false;
        last_tried = items[i];
    }
    false
}

/// All sheets contained in the closure of the sheet of `lambda_p`, as the
/// partitions of their nilpotent orbits, in reverse-lexicographic order.
pub fn sheet_closure(lambda_p: &Partition) -> Vec<Partition> {
    enumerate_partitions(lambda_p.weight())
        .into_iter()
        .filter(|lam| sheet_precedes_same_weight(lam, lambda_p))
        .collect()
}

/// Ordered pairs `(lambda, lambda_p)` of distinct partitions of `n` whose
/// orbits are comparable in the closure order while the sheets are not:
/// `lambda_p` dominates `lambda` but `lambda` does not precede `lambda_p`
/// in the sheet order. Each pair certifies that the closure of the sheet
/// of `lambda_p` is not a union of sheets.
///
/// Pairs come contained-orbit first and are sorted reverse-lexicographically.
pub fn counterexample_pairs(n: usize) -> Vec<(Partition, Partition)> {
    counterexample_pairs_threaded(n, 1)
}

/// [`counterexample_pairs`] with the candidate pairs split over `threads`
/// worker threads; the result is identical for every thread count.
pub fn counterexample_pairs_threaded(n: usize, threads: usize) -> Vec<(Partition, Partition)> {
    let all = enumerate_partitions(n);
    let mut candidates = Vec::new();
    for lam in &all {
        for lam_p in &all {
            if lam != lam_p && lam_p.dominates_same_weight(lam) {
                candidates.push((lam.clone(), lam_p.clone()));
            }
        }
    }
    let verdicts = run_chunked(&candidates, threads, |(lam, lam_p)| {
        !sheet_precedes_same_weight(lam, lam_p)
    });
    let mut pairs: Vec<(Partition, Partition)> = candidates
        .into_iter()
        .zip(verdicts)
        .filter_map(|(pair, keep)| keep.then_some(pair))
        .collect();
    pairs.sort_by(|a, b| b.cmp(a));
    pairs
}

/// Evaluates `f` over `items` on up to `threads` scoped worker threads,
/// preserving input order in the output.
pub(crate) fn run_chunked<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let threads = threads.max(1).min(items.len().max(1));
    if threads == 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    let mut out = Vec::with_capacity(items.len());
    thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|slice| scope.spawn(|| slice.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        for handle in handles {
            out.extend(handle.join().expect("worker panicked"));
        }
    });
    out
}

/// Graphviz DOT rendering of the Hasse diagram (transitive reduction) of
/// the sheet order on partitions of `n`. Nodes are quoted partition
/// strings; edges point from contained sheet to enclosing sheet; node and
/// edge lines are each sorted lexicographically.
pub fn sheet_poset_dot(n: usize) -> String {
    let all = enumerate_partitions(n);
    let count = all.len();
    let mut leq = vec![false; count * count];
    for (i, lam) in all.iter().enumerate() {
        for (j, lam_p) in all.iter().enumerate() {
            leq[i * count + j] = sheet_precedes_same_weight(lam, lam_p);
        }
    }
    let mut node_lines: Vec<String> = all.iter().map(|p| format!("  \"{p}\";")).collect();
    node_lines.sort();
    let mut edge_lines = Vec::new();
    for i in 0..count {
        for j in 0..count {
            if i == j || !leq[i * count + j] {
                continue;
            }
            let covered = (0..count).any(|k| {
                k != i && k != j && leq[i * count + k] && leq[k * count + j]
            });
            if !covered {
                edge_lines.push(format!("  \"{}\" -> \"{}\";", all[i], all[j]));
            }
        }
    }
    edge_lines.sort();
    let mut dot = format!("digraph sheets_{n} {{\n");
    for line in node_lines.iter().chain(edge_lines.iter()) {
        dot.push_str(line);
        dot.push('\n');
    }
    dot.push_str("}\n");
    dot
}
