//! Structural properties: order axioms, serialization round trips,
//! deletion closure, and the per-row residue facts the weight-permuting
//! involution is built on.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use kschur_core::involutions::{enumerate_a, TwoLetterFilling, XY};
use kschur_core::shapes::{
    bounded_partitions_of, compositions_of, core_of, partitions_of, Cell, Composition, Partition,
    SkewShape,
};
use kschur_core::tableaux::{
    classify, enumerate, letter_instance_order, restrict, EntryClass, KTableau, TableauMode,
};

fn partition_strategy() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..9, 0..8).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_parts(parts)
    })
}

proptest! {
    #[test]
    fn conjugation_is_a_degree_preserving_involution(p in partition_strategy()) {
        let c = p.conjugate();
        prop_assert_eq!(c.degree(), p.degree());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn union_preserves_degree_and_sorts(p in partition_strategy(), q in partition_strategy()) {
        let u = p.union(&q);
        prop_assert_eq!(u.degree(), p.degree() + q.degree());
        prop_assert!(u.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(p.union(&q), q.union(&p));
    }

    #[test]
    fn partition_json_round_trip(p in partition_strategy()) {
        let json = serde_json::to_string(&p).unwrap();
        let back: Partition = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn skew_shape_json_round_trip(p in partition_strategy()) {
        let inner = Partition::from_parts(
            p.parts().iter().map(|&x| x / 2).filter(|&x| x > 0).collect(),
        );
        let shape = SkewShape::new(p, inner).unwrap();
        let json = serde_json::to_string(&shape).unwrap();
        let back: SkewShape = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, shape);
    }

    #[test]
    fn deserializing_rejects_increasing_parts(a in 1usize..5, b in 1usize..5) {
        prop_assume!(a < b);
        let text = format!("[{a},{b}]");
        prop_assert!(serde_json::from_str::<Partition>(&text).is_err());
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 0..=8 {
        let parts = partitions_of(n);
        for p in &parts {
            assert!(p.dominates(p), "{p} should dominate itself");
        }
        for p in &parts {
            for q in &parts {
                if p.dominates(q) && q.dominates(p) {
                    assert_eq!(p, q, "antisymmetry fails at {p}, {q}");
                }
                for r in &parts {
                    if p.dominates(q) && q.dominates(r) {
                        assert!(p.dominates(r), "transitivity fails at {p}, {q}, {r}");
                    }
                }
            }
        }
    }
}

fn straight_tableaux(k: usize, max_degree: usize, max_comp_degree: usize) -> Vec<KTableau> {
    let mut out = Vec::new();
    for n in 0..=max_degree {
        for mu in bounded_partitions_of(n, k) {
            for weight in partitions_of(n) {
                if !weight.is_bounded_by(n.max(1)) {
                    continue;
                }
                let alpha = Composition::from(&weight);
                out.extend(
                    enumerate(k, &mu, &Partition::empty(), &alpha, TableauMode::ColumnStrict)
                        .unwrap(),
                );
            }
            if n <= max_comp_degree {
                for alpha in compositions_of(n) {
                    out.extend(
                        enumerate(k, &mu, &Partition::empty(), &alpha, TableauMode::ColumnStrict)
                            .unwrap(),
                    );
                }
            }
        }
    }
    out
}

#[test]
fn deletion_closure_on_straight_and_skew_tableaux() {
    for k in 1..=3usize {
        for n in 0..=6 {
            for mu in bounded_partitions_of(n, k) {
                for m in 0..=n {
                    for inner in bounded_partitions_of(m, k) {
                        if !core_of(&mu, k).unwrap().contains(&core_of(&inner, k).unwrap()) {
                            continue;
                        }
                        for weight in partitions_of(n - m) {
                            let alpha = Composition::from(&weight);
                            let tableaux =
                                enumerate(k, &mu, &inner, &alpha, TableauMode::ColumnStrict)
                                    .unwrap();
                            for t in &tableaux {
                                for letter in 1..=t.max_letter() {
                                    let order = letter_instance_order(t, letter);
                                    for rank in 1..=order.residues.len() {
                                        for strict in [false, true] {
                                            restrict(t, letter, rank, strict).unwrap_or_else(|e| {
                                                panic!(
                                                    "restrict({letter},{rank},{strict}) failed on {t:?}: {e}"
                                                )
                                            });
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

fn residues_by_row(t: &KTableau, letter: usize) -> BTreeMap<usize, BTreeSet<usize>> {
    let mut out: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (c, v) in t.cells() {
        if v == letter {
            out.entry(c.row).or_default().insert(t.residue(c));
        }
    }
    out
}

/// Cells of one letter and residue, split by marital status.
fn cells_of(t: &KTableau, cls: &kschur_core::tableaux::Classification, letter: usize) -> Vec<(Cell, bool)> {
    t.cells()
        .into_iter()
        .filter(|&(_, v)| v == letter)
        .map(|(c, _)| (c, cls.entry_class(c) == Some(EntryClass::Married)))
        .collect()
}

#[test]
fn unmarried_pair_structure_holds_on_enumerated_tableaux() {
    // For each unmarried b of some residue, every a of that residue is
    // married and lies weakly higher; an a of that residue exists exactly
    // when some unmarried b has a divorced b immediately to its left.
    // Symmetrically with the roles of a and b exchanged, strictly higher,
    // and a divorced a immediately to the right.
    for k in 1..=3usize {
        for t in straight_tableaux(k, 8, 5) {
            let p = t.k() + 1;
            for a in 1..t.max_letter() {
                let cls = classify(&t, a).unwrap();
                let b = a + 1;
                let a_cells = cells_of(&t, &cls, a);
                let b_cells = cells_of(&t, &cls, b);
                let b_unmarried_res: BTreeSet<usize> = b_cells
                    .iter()
                    .filter(|&&(_, married)| !married)
                    .map(|&(c, _)| t.residue(c))
                    .collect();
                for &j in &b_unmarried_res {
                    let highest = b_cells
                        .iter()
                        .filter(|&&(c, married)| !married && t.residue(c) == j)
                        .map(|&(c, _)| c.row)
                        .max()
                        .unwrap();
                    let mut a_j_exists = false;
                    for &(c, married) in &a_cells {
                        if t.residue(c) == j {
                            a_j_exists = true;
                            assert!(married, "unmarried a and b share residue {j} in {t:?}");
                            assert!(
                                c.row >= highest,
                                "a({j}) below an unmarried b({j}) in {t:?}"
                            );
                        }
                    }
                    let witness = b_cells.iter().any(|&(c, married)| {
                        if married || t.residue(c) != j {
                            return false;
                        }
                        let left = Cell::new(c.row, c.col - 1);
                        t.letter_at(left) == Some(b)
                            && cls.entry_class(left) == Some(EntryClass::Divorced)
                    });
                    assert_eq!(
                        a_j_exists, witness,
                        "letter {a} residue {j} presence mismatch in {t:?}"
                    );
                }
                let a_unmarried_res: BTreeSet<usize> = a_cells
                    .iter()
                    .filter(|&&(_, married)| !married)
                    .map(|&(c, _)| t.residue(c))
                    .collect();
                for &j in &a_unmarried_res {
                    let highest = a_cells
                        .iter()
                        .filter(|&&(c, married)| !married && t.residue(c) == j)
                        .map(|&(c, _)| c.row)
                        .max()
                        .unwrap();
                    let mut b_j_exists = false;
                    for &(c, married) in &b_cells {
                        if t.residue(c) == j {
                            b_j_exists = true;
                            assert!(married, "unmarried b and a share residue {j} in {t:?}");
                            assert!(
                                c.row > highest,
                                "b({j}) not strictly above the unmarried a({j}) in {t:?}"
                            );
                        }
                    }
                    let witness = a_cells.iter().any(|&(c, married)| {
                        if married || t.residue(c) != j {
                            return false;
                        }
                        let right = Cell::new(c.row, c.col + 1);
                        t.letter_at(right) == Some(a)
                            && cls.entry_class(right) == Some(EntryClass::Divorced)
                            && t.residue(right) == (j + 1) % p
                    });
                    assert_eq!(
                        b_j_exists, witness,
                        "letter {b} residue {j} presence mismatch in {t:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn repeated_residue_rows_nest() {
    // Two rows sharing a residue of one letter: the higher row's residue
    // set for that letter is contained in the lower one's.
    for k in 1..=3usize {
        for t in straight_tableaux(k, 8, 5) {
            for letter in 1..=t.max_letter() {
                let rows = residues_by_row(&t, letter);
                for (&r, set_r) in &rows {
                    for (&m, set_m) in &rows {
                        if r < m && !set_r.is_disjoint(set_m) {
                            assert!(
                                set_m.is_subset(set_r),
                                "letter {letter} rows {r},{m} fail nesting in {t:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn unmarried_residue_rows_nest_letterwise() {
    // When the unmarried residue sets of two rows meet, both single-letter
    // unmarried sets nest as well.
    for k in 1..=3usize {
        for t in straight_tableaux(k, 8, 5) {
            for a in 1..t.max_letter() {
                let cls = classify(&t, a).unwrap();
                for r in 1..=t.num_rows() {
                    for m in r + 1..=t.num_rows() {
                        let meet = cls.ures_ab(r).intersection(&cls.ures_ab(m)).count() > 0;
                        if meet {
                            assert!(
                                cls.ures_row(m, a).is_subset(&cls.ures_row(r, a)),
                                "rows {r},{m} letter {a} in {t:?}"
                            );
                            assert!(
                                cls.ures_row(m, a + 1).is_subset(&cls.ures_row(r, a + 1)),
                                "rows {r},{m} letter {} in {t:?}",
                                a + 1
                            );
                        }
                    }
                }
            }
        }
    }
}

/// Exhaustive two-letter oracle: try every x/y assignment of the skew
/// cells and keep the valid ones of total residue count l.
fn enumerate_a_by_brute_force(
    k: usize,
    nu: &Partition,
    l: usize,
    mu: &Partition,
) -> Vec<TwoLetterFilling> {
    let gamma = core_of(mu, k).unwrap();
    let delta = core_of(nu, k).unwrap();
    if !gamma.contains(&delta) {
        return Vec::new();
    }
    let row_sizes: Vec<usize> = (1..=gamma.len())
        .map(|r| gamma.row_len(r) - delta.row_len(r))
        .collect();
    let total: usize = row_sizes.iter().sum();
    let mut out = Vec::new();
    for mask in 0u32..(1 << total) {
        let mut rows: Vec<Vec<XY>> = Vec::with_capacity(row_sizes.len());
        let mut bit = 0;
        for &size in &row_sizes {
            let mut row = Vec::with_capacity(size);
            for _ in 0..size {
                row.push(if mask & (1 << bit) != 0 { XY::X } else { XY::Y });
                bit += 1;
            }
            rows.push(row);
        }
        let filling = TwoLetterFilling::new(k, gamma.clone(), delta.clone(), rows).unwrap();
        let (r, s) = filling.weight();
        if r + s == l && filling.is_valid() {
            out.push(filling);
        }
    }
    out.sort();
    out
}

#[test]
fn two_letter_enumeration_matches_brute_force() {
    for k in 1..=3usize {
        let max = if k == 3 { 4 } else { 5 };
        for n in 0..=max {
            for mu in bounded_partitions_of(n, k) {
                for l in 0..=k.min(n) {
                    for nu in bounded_partitions_of(n - l, k) {
                        let fast = enumerate_a(k, &nu, l, &mu).unwrap();
                        let slow = enumerate_a_by_brute_force(k, &nu, l, &mu);
                        assert_eq!(fast, slow, "mu={mu} nu={nu} l={l} k={k}");
                    }
                }
            }
        }
    }
}

#[test]
fn engines_agree_at_larger_k() {
    // The sweeps pin k <= 3; spot the residue arithmetic at k = 4 and 5.
    for k in 4..=5usize {
        for n in 0..=5 {
            for mu in bounded_partitions_of(n, k) {
                for alpha in compositions_of(n) {
                    for mode in [TableauMode::ColumnStrict, TableauMode::Transposed] {
                        let fast =
                            enumerate(k, &mu, &Partition::empty(), &alpha, mode).unwrap();
                        let slow = kschur_core::tableaux::enumerate_backtrack(
                            k,
                            &mu,
                            &Partition::empty(),
                            &alpha,
                            mode,
                        )
                        .unwrap();
                        assert_eq!(fast, slow, "k={k} mu={mu} alpha={alpha:?} mode={mode:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn weight_exchange_works_on_skew_tableaux() {
    // The exchange is defined for skew fillings too: involution and
    // swapped weight, checked against the enumeration of the swapped
    // weight.
    for k in 2..=3usize {
        for n in 2..=5 {
            for mu in bounded_partitions_of(n, k) {
                for m in 1..n {
                    for inner in bounded_partitions_of(m, k) {
                        if !core_of(&mu, k).unwrap().contains(&core_of(&inner, k).unwrap()) {
                            continue;
                        }
                        for alpha in compositions_of(n - m) {
                            let tableaux =
                                enumerate(k, &mu, &inner, &alpha, TableauMode::ColumnStrict)
                                    .unwrap();
                            for a in 1..alpha.len() {
                                let swapped = alpha.swap_adjacent(a);
                                let mut images: Vec<KTableau> = tableaux
                                    .iter()
                                    .map(|t| {
                                        let image = kschur_core::involutions::tau(t, a).unwrap();
                                        assert_eq!(
                                            kschur_core::involutions::tau(&image, a).unwrap(),
                                            *t
                                        );
                                        image
                                    })
                                    .collect();
                                images.sort();
                                images.dedup();
                                let target =
                                    enumerate(k, &mu, &inner, &swapped, TableauMode::ColumnStrict)
                                        .unwrap();
                                assert_eq!(
                                    images, target,
                                    "mu={mu}/{inner} alpha={alpha:?} a={a} k={k}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn chains_accept_zero_weight_components() {
    use kschur_core::tableaux::{enumerate_chains, k_kostka};
    let mu = Partition::from_parts(vec![2, 1]);
    let weight = Composition::new(vec![1, 0, 2]);
    let chains = enumerate_chains(2, &mu, &weight);
    assert_eq!(chains.len() as i64, k_kostka(2, &mu, &weight).unwrap());
    for chain in &chains {
        assert_eq!(chain.shapes[1], chain.shapes[2], "zero step must not move");
    }
}

#[test]
fn enumeration_is_deterministic_across_threads() {
    let outer = Partition::from_parts(vec![3, 3, 2, 1]);
    let weight = Composition::new(vec![1, 3, 1, 2, 1, 1]);
    let reference =
        enumerate(3, &outer, &Partition::empty(), &weight, TableauMode::ColumnStrict).unwrap();
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let outer = outer.clone();
            let weight = weight.clone();
            std::thread::spawn(move || {
                enumerate(3, &outer, &Partition::empty(), &weight, TableauMode::ColumnStrict)
                    .unwrap()
            })
        })
        .collect();
    for handle in handles {
        assert_eq!(handle.join().unwrap(), reference);
    }
}

#[test]
fn large_k_reduces_to_classical_tableau_counts() {
    let result = kschur_core::verify::check_reduction(6).unwrap();
    assert!(result.passed(), "{:?}", result.failures);
}

#[test]
fn enumerated_tableaux_round_trip_through_json() {
    let outer = Partition::from_parts(vec![3, 3, 2, 1]);
    let weight = Composition::new(vec![1, 3, 1, 2, 1, 1]);
    for t in enumerate(3, &outer, &Partition::empty(), &weight, TableauMode::ColumnStrict).unwrap()
    {
        let json = serde_json::to_string(&t).unwrap();
        let raw: kschur_core::tableaux::RawTableau = serde_json::from_str(&json).unwrap();
        assert_eq!(raw.into_tableau(TableauMode::ColumnStrict).unwrap(), t);
    }
}
