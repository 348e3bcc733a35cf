//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line with its runtime. Every bound is exact; the time limits are part
//! of the contract and are asserted, not advisory.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use sheets_core::exceptional::{verify_counterexample_pairs, Catalog};
use sheets_core::oracle::{centralizer_dim, jordan_matrix, jordan_rank_profile};
use sheets_core::orbits::{
    induce, is_induced, is_rigid, orbit_closure_leq, LeviSpec, NilpotentOrbit,
};
use sheets_core::sheets::{counterexample_pairs, sheet_precedes};
use sheets_core::{enumerate_partitions, Family, LieAlgebraKind, OracleInt, Partition};

fn sheets(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sheets"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = sheets(args);
    assert!(out.status.success(), "`sheets {}` failed", args.join(" "));
    String::from_utf8(out.stdout).expect("utf8")
}

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

fn k(text: &str) -> LieAlgebraKind {
    text.parse().unwrap()
}

fn finish(criterion: u32, description: &str, started: Instant, limit: Duration) {
    let elapsed = started.elapsed();
    println!(
        "criterion {criterion}: PASS - {description} ({:.3}s, limit {:?})",
        elapsed.as_secs_f64(),
        limit
    );
    assert!(
        elapsed < limit,
        "criterion {criterion} exceeded its time limit: {elapsed:?} >= {limit:?}"
    );
}

fn classical_kinds(max_n: usize) -> Vec<LieAlgebraKind> {
    let mut kinds = Vec::new();
    for n in 1..=max_n {
        for family in [Family::B, Family::C, Family::D] {
            if let Ok(kind) = LieAlgebraKind::new(family, n) {
                kinds.push(kind);
            }
        }
    }
    kinds
}

#[test]
fn criterion_01_type_a_counterexample() {
    let started = Instant::now();
    assert_eq!(stdout(&["sheet-order", "3,1,1", "3,2"]), "false\n");
    assert_eq!(stdout(&["dominance", "3,2", "3,1,1"]), "true\n");
    let listing = stdout(&["counterexamples", "--family", "A", "--n", "5"]);
    assert!(
        listing.lines().any(|line| line == "3,1,1 3,2"),
        "pair missing from:\n{listing}"
    );
    finish(
        1,
        "sl_5 pair [3,1,1]/[3,2]: dominance holds, sheet order does not",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_so8_counterexample() {
    let started = Instant::now();
    assert_eq!(stdout(&["rigid", "D:8", "3,2^2,1"]), "true\n");
    assert_eq!(stdout(&["rigid", "D:8", "3,1^5"]), "false\n");
    let lower = NilpotentOrbit::new(k("D:8"), p("3,1^5")).unwrap();
    let upper = NilpotentOrbit::new(k("D:8"), p("3,2^2,1")).unwrap();
    assert!(orbit_closure_leq(&lower, &upper).unwrap());
    let listing = stdout(&["counterexamples", "--kind", "D:8"]);
    assert!(
        listing.lines().any(|line| line == "3,2,2,1 3,1,1,1,1,1"),
        "pair missing from:\n{listing}"
    );
    finish(
        2,
        "so_8 rigid orbit [3,2,2,1] contains non-rigid [3,1^5] in its closure",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_03_type_a_rigidity() {
    let started = Instant::now();
    for n in 1..=10 {
        let kind = LieAlgebraKind::new(Family::A, n).unwrap();
        for lam in enumerate_partitions(n) {
            let orbit = NilpotentOrbit::new(kind, lam.clone()).unwrap();
            assert_eq!(
                is_rigid(&orbit),
                lam == Partition::ones(n),
                "A:{n}: rigidity wrong at [{lam}]"
            );
        }
    }
    finish(
        3,
        "type A rigidity is exactly the zero orbit, all n <= 10",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_04_exceptional_pairs() {
    let started = Instant::now();
    let listing = stdout(&["verify-exceptional"]);
    assert!(listing.contains("12/12 checks passed"), "got:\n{listing}");
    let report = verify_counterexample_pairs(&Catalog::bundled());
    assert_eq!(report.passed(), 12);
    assert_eq!(report.total(), 12);
    finish(
        4,
        "bundled exceptional dataset passes 12/12 checks",
        started,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_05_oracle_equivalence() {
    let started = Instant::now();
    for n in 1..=8 {
        let all = enumerate_partitions(n);
        if n == 8 {
            assert_eq!(all.len(), 22);
            assert_eq!(all.len() * all.len(), 484);
        }
        for lam in &all {
            let matrix = jordan_matrix::<OracleInt>(lam).unwrap();
            assert_eq!(
                centralizer_dim(&matrix),
                lam.dual_square_sum(),
                "centralizer mismatch at [{lam}]"
            );
        }
        let profiles: Vec<Vec<usize>> = all
            .iter()
            .map(|lam| jordan_rank_profile::<OracleInt>(lam, n).unwrap())
            .collect();
        for (i, mu) in all.iter().enumerate() {
            for (j, lam) in all.iter().enumerate() {
                let by_rank = profiles[i].iter().zip(&profiles[j]).all(|(l, u)| l <= u);
                assert_eq!(
                    by_rank,
                    lam.dominates(mu).unwrap(),
                    "rank criterion vs dominance at [{mu}] / [{lam}]"
                );
            }
        }
    }
    finish(
        5,
        "matrix oracle agrees with the partition formulas, all n <= 8",
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_06_rigidity_criterion_vs_brute_force() {
    let started = Instant::now();
    for kind in classical_kinds(12) {
        for lam in enumerate_partitions(kind.natural_dim()) {
            if !kind.is_valid(&lam).unwrap() {
                continue;
            }
            let orbit = NilpotentOrbit::new(kind, lam.clone()).unwrap();
            assert_eq!(
                is_rigid(&orbit),
                !is_induced(&orbit),
                "{kind}: criterion vs induction search at [{lam}]"
            );
        }
    }
    finish(
        6,
        "rigidity criterion matches the induction search, all B/C/D kinds N <= 12",
        started,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_07_order_axioms() {
    let started = Instant::now();
    for n in 1..=10 {
        let all = enumerate_partitions(n);
        let count = all.len();
        let mut sheet = vec![false; count * count];
        let mut dom = vec![false; count * count];
        for i in 0..count {
            for j in 0..count {
                sheet[i * count + j] = sheet_precedes(&all[i], &all[j]).unwrap();
                dom[i * count + j] = all[j].dominates(&all[i]).unwrap();
            }
        }
        for (name, leq) in [("sheet order", &sheet), ("dominance", &dom)] {
            for i in 0..count {
                assert!(leq[i * count + i], "{name} reflexivity at n={n}");
                for j in 0..count {
                    if leq[i * count + j] && leq[j * count + i] && i != j {
                        panic!("{name} antisymmetry fails at n={n}");
                    }
                    for l in 0..count {
                        if leq[i * count + j] && leq[j * count + l] && !leq[i * count + l] {
                            panic!("{name} transitivity fails at n={n}");
                        }
                    }
                }
            }
        }
    }
    finish(
        7,
        "sheet order and dominance are partial orders, all n <= 10",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_08_strictness() {
    let started = Instant::now();
    for n in 1..=10 {
        let all = enumerate_partitions(n);
        for lam in &all {
            for lam_p in &all {
                if sheet_precedes(lam, lam_p).unwrap() {
                    assert!(
                        lam_p.dominates(lam).unwrap(),
                        "sheet order must refine dominance at n={n}"
                    );
                }
            }
        }
        if n >= 4 {
            assert!(
                !counterexample_pairs(n).is_empty(),
                "expected a dominance-comparable, sheet-incomparable pair at n={n}"
            );
        }
    }
    assert_eq!(
        counterexample_pairs(4),
        vec![(p("2,1,1"), p("2,2"))],
        "frozen n=4 counterexample set"
    );
    finish(
        8,
        "sheet order strictly refines dominance; n=4 witness set is exactly {[2,1,1]/[2,2]}",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_09_collapse_correctness() {
    let started = Instant::now();
    for kind in classical_kinds(12) {
        let all = enumerate_partitions(kind.natural_dim());
        for lam in &all {
            let collapsed = kind.collapse(lam).unwrap();
            // Exhaustive scan for the dominance-maximum valid partition
            // dominated by lam; it must exist, be unique and equal the
            // collapse.
            let candidates: Vec<&Partition> = all
                .iter()
                .filter(|mu| kind.is_valid(mu).unwrap() && lam.dominates(mu).unwrap())
                .collect();
            let maxima: Vec<&&Partition> = candidates
                .iter()
                .filter(|mu| candidates.iter().all(|nu| mu.dominates(nu).unwrap()))
                .collect();
            assert_eq!(
                maxima.len(),
                1,
                "{kind}: dominance maximum below [{lam}] is not unique"
            );
            assert_eq!(
                &collapsed, *maxima[0],
                "{kind}: collapse([{lam}]) is not the dominance maximum"
            );
        }
    }
    finish(
        9,
        "collapse equals the exhaustive dominance maximum, all B/C/D kinds N <= 12",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_10_induction_laws() {
    let started = Instant::now();
    for kind in classical_kinds(10) {
        let family = kind.family();
        let n = kind.natural_dim();
        let admissible = |m: usize| -> Vec<Partition> {
            enumerate_partitions(m)
                .into_iter()
                .filter(|t| family.admits(t))
                .collect()
        };
        // Single-block Levis: dimension law.
        for a in 1..=n / 2 {
            let tail_n = n - 2 * a;
            let levi = LeviSpec::new(kind, vec![a], tail_n).unwrap();
            for nu in enumerate_partitions(a) {
                for mu in admissible(tail_n) {
                    let ind = induce(&levi, std::slice::from_ref(&nu), &mu).unwrap();
                    let expected = mu_dim(family, &mu)
                        + (a * a - nu.dual_square_sum())
                        + 2 * levi.nilradical_dim();
                    assert_eq!(ind.dimension(), expected, "{kind}: dimension law, one block");
                }
            }
        }
        // Two-block Levis: dimension law and block-order independence.
        for a in 1..=n / 2 {
            for b in a..=n / 2 {
                if 2 * (a + b) > n {
                    continue;
                }
                let tail_n = n - 2 * (a + b);
                let levi = LeviSpec::new(kind, vec![a, b], tail_n).unwrap();
                let swapped = LeviSpec::new(kind, vec![b, a], tail_n).unwrap();
                for nu1 in enumerate_partitions(a) {
                    for nu2 in enumerate_partitions(b) {
                        for mu in admissible(tail_n) {
                            let one = induce(&levi, &[nu1.clone(), nu2.clone()], &mu).unwrap();
                            let two = induce(&swapped, &[nu2.clone(), nu1.clone()], &mu).unwrap();
                            assert_eq!(one, two, "{kind}: block order changed the result");
                            let expected = mu_dim(family, &mu)
                                + (a * a - nu1.dual_square_sum())
                                + (b * b - nu2.dual_square_sum())
                                + 2 * levi.nilradical_dim();
                            assert_eq!(
                                one.dimension(),
                                expected,
                                "{kind}: dimension law, two blocks"
                            );
                        }
                    }
                }
            }
        }
    }
    // Type A: the law for the maximal two-block Levis.
    for n in 2..=10 {
        let kind = LieAlgebraKind::new(Family::A, n).unwrap();
        for a in 1..=n / 2 {
            let levi = LeviSpec::new(kind, vec![a, n - a], 0).unwrap();
            for nu1 in enumerate_partitions(a) {
                for nu2 in enumerate_partitions(n - a) {
                    let ind = induce(&levi, &[nu1.clone(), nu2.clone()], &Partition::empty())
                        .unwrap();
                    let expected = (a * a - nu1.dual_square_sum())
                        + ((n - a) * (n - a) - nu2.dual_square_sum())
                        + 2 * levi.nilradical_dim();
                    assert_eq!(ind.dimension(), expected, "A:{n}: dimension law");
                }
            }
        }
    }
    finish(
        10,
        "induction dimension law and block-order independence, all Levis N <= 10",
        started,
        Duration::from_secs(60),
    );
}

fn mu_dim(family: Family, mu: &Partition) -> usize {
    // Orbit dimension of a (possibly degenerate) tail orbit, via the same
    // closed formulas the library uses for full kinds.
    let m = mu.weight();
    let squares = mu.dual_square_sum();
    match family {
        Family::A => m * m - squares,
        Family::B | Family::D => m.saturating_sub(1) * m / 2 - (squares - mu.odd_part_count()) / 2,
        Family::C => m * (m + 1) / 2 - (squares + mu.odd_part_count()) / 2,
    }
}
