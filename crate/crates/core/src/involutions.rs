//! The two involutions: the weight-permuting operator on k-tableaux
//! (a Bender-Knuth generalization) and the sign-reversing map on
//! two-letter fillings used to cancel the alternating Pieri sum.
//!
//! The weight-permuting operator acts on the equivalence classes of rows
//! grouped under each fundamental row. Inside a fundamental row it swaps
//! the counts of single a's and b's, repairs the ordering among divorced
//! entries, and then propagates the relabelled residues to the unmarried
//! entries of the rows above. Marriage is recomputed from scratch after
//! every stage and checked to be unchanged.

use std::collections::BTreeSet;

use crate::error::{invariant, precondition, Result};
use crate::shapes::{core_of, is_p_core, residue, Cell, Partition, SkewShape};
use crate::tableaux::{
    classify, fundamental_rows, EntryClass, KTableau, TableauMode,
};

/// One intermediate snapshot of the weight-permuting operator.
#[derive(Debug, Clone)]
pub struct TauStage {
    /// Which fundamental-row class produced this snapshot (0-based).
    pub class_index: usize,
    /// "1a", "1b" or "2".
    pub stage: &'static str,
    pub tableau: KTableau,
}

/// Exchange the k-weight components `a` and `a+1` of a column-strict
/// (possibly skew) k-tableau.
pub fn tau(t: &KTableau, a: usize) -> Result<KTableau> {
    tau_with_trace(t, a).map(|(result, _)| result)
}

/// Like [`tau`], also returning the snapshot after each stage of the
/// construction.
pub fn tau_with_trace(t: &KTableau, a: usize) -> Result<(KTableau, Vec<TauStage>)> {
    if t.mode() != TableauMode::ColumnStrict {
        return Err(precondition("weight permutation requires a column-strict tableau".to_string()));
    }
    let letters = t.max_letter();
    if a == 0 || a >= letters {
        return Err(precondition(format!(
            "letter index {a} out of range for {letters} letters"
        )));
    }
    let b = a + 1;
    let before_weight = t.weight();
    let before_married = married_cells(t, a)?;
    let before_ures = ures_by_row(t, a)?;
    let fr = fundamental_rows(t, a)?;

    let mut current = t.clone();
    let mut stages = Vec::new();
    for (class_index, (&fund_row, class_rows)) in fr.rows.iter().zip(&fr.classes).enumerate() {
        let mut relabelled: BTreeSet<usize> = BTreeSet::new();

        // Stage 1(a): swap the string of single a's and b's in the
        // fundamental row.
        let cls = classify(&current, a)?;
        let singles: Vec<Cell> = row_cells(&current, fund_row, a)
            .into_iter()
            .filter(|&(c, _)| cls.entry_class(c) == Some(EntryClass::Single))
            .map(|(c, _)| c)
            .collect();
        let single_a = singles
            .iter()
            .filter(|&&c| current.letter_at(c) == Some(a))
            .count();
        let single_b = singles.len() - single_a;
        let a_to_b = single_a > single_b;
        for (pos, &c) in singles.iter().enumerate() {
            let new = if pos < single_b { a } else { b };
            if current.letter_at(c) != Some(new) {
                relabelled.insert(current.residue(c));
                current = set_letter(&current, c, new);
            }
        }
        stages.push(TauStage { class_index, stage: "1a", tableau: current.clone() });

        // Stage 1(b): repair the divorced entries the swap jumped over.
        let cls = classify(&current, a)?;
        let run = row_cells(&current, fund_row, a);
        if a_to_b {
            // Every a to the right of some b becomes a b.
            if let Some(&(first_b, _)) = run.iter().find(|&&(_, v)| v == b) {
                for &(c, v) in &run {
                    if v == a && c.col > first_b.col {
                        if cls.entry_class(c) == Some(EntryClass::Married) {
                            return Err(invariant(format!(
                                "married entry at {c:?} caught by the divorced repair"
                            )));
                        }
                        relabelled.insert(current.residue(c));
                        current = set_letter(&current, c, b);
                    }
                }
            }
        } else if let Some(&(last_a, _)) = run.iter().rev().find(|&&(_, v)| v == a) {
            // Every b to the left of an a becomes an a.
            for &(c, v) in &run {
                if v == b && c.col < last_a.col {
                    if cls.entry_class(c) == Some(EntryClass::Married) {
                        return Err(invariant(format!(
                            "married entry at {c:?} caught by the divorced repair"
                        )));
                    }
                    relabelled.insert(current.residue(c));
                    current = set_letter(&current, c, a);
                }
            }
        }
        stages.push(TauStage { class_index, stage: "1b", tableau: current.clone() });

        // Stage 2: in the rows above, relabel every unmarried source
        // letter whose residue was touched in stage 1.
        let cls = classify(&current, a)?;
        let (source, target) = if a_to_b { (a, b) } else { (b, a) };
        let mut modified_rows: BTreeSet<usize> = BTreeSet::new();
        for (c, v) in current.cells() {
            if c.row > fund_row
                && v == source
                && relabelled.contains(&current.residue(c))
                && cls.entry_class(c) != Some(EntryClass::Married)
            {
                modified_rows.insert(c.row);
                current = set_letter(&current, c, target);
            }
        }
        for row in &modified_rows {
            if !class_rows.contains(row) {
                return Err(invariant(format!(
                    "stage 2 touched row {row} outside its class {class_rows:?}"
                )));
            }
        }
        stages.push(TauStage { class_index, stage: "2", tableau: current.clone() });
    }

    let expected = before_weight.swap_adjacent(a);
    let problems = current.diagnostics(&expected);
    if !problems.is_empty() {
        return Err(invariant(format!(
            "weight permutation broke the tableau: {}",
            problems.join("; ")
        )));
    }
    if married_cells(&current, a)? != before_married {
        return Err(invariant("weight permutation changed the married cells".to_string()));
    }
    if ures_by_row(&current, a)? != before_ures {
        return Err(invariant("weight permutation changed an unmarried residue set".to_string()));
    }
    Ok((current, stages))
}

fn married_cells(t: &KTableau, a: usize) -> Result<Vec<Cell>> {
    let cls = classify(t, a)?;
    Ok(cls
        .classes()
        .iter()
        .filter(|&(_, &class)| class == EntryClass::Married)
        .map(|(&c, _)| c)
        .collect())
}

fn ures_by_row(t: &KTableau, a: usize) -> Result<Vec<BTreeSet<usize>>> {
    let cls = classify(t, a)?;
    Ok((1..=t.num_rows()).map(|row| cls.ures_ab(row)).collect())
}

/// Cells of `row` holding letter a or a+1, left to right.
fn row_cells(t: &KTableau, row: usize, a: usize) -> Vec<(Cell, usize)> {
    t.cells()
        .into_iter()
        .filter(|&(c, v)| c.row == row && (v == a || v == a + 1))
        .collect()
}

fn set_letter(t: &KTableau, cell: Cell, letter: usize) -> KTableau {
    let mut rows = t.rows().to_vec();
    let off = t.inner().row_len(cell.row);
    rows[cell.row - 1][cell.col - off - 1] = letter;
    KTableau::new(t.k(), t.outer().clone(), t.inner().clone(), rows, t.mode())
        .expect("relabelling keeps the shape")
}

/// The two letters of a cancellation filling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum XY {
    X,
    Y,
}

/// A filling of `core(mu)/core(nu)` with letters x < y such that the
/// x-cells form a transposed skew k-tableau and the y-cells, on top of
/// them, a skew k-tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoLetterFilling {
    k: usize,
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<XY>>,
}

impl TwoLetterFilling {
    pub fn new(k: usize, outer: Partition, inner: Partition, rows: Vec<Vec<XY>>) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(precondition(format!(
                "inner {inner} not contained in outer {outer}"
            )));
        }
        if rows.len() != outer.len() {
            return Err(precondition("row count does not match the outer shape".to_string()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != outer.row_len(i + 1) - inner.row_len(i + 1) {
                return Err(precondition(format!("row {} does not tile the shape", i + 1)));
            }
        }
        Ok(TwoLetterFilling { k, outer, inner, rows })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<XY>] {
        &self.rows
    }

    pub fn cells(&self) -> Vec<(Cell, XY)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let off = self.inner.row_len(i + 1);
            for (j, &v) in row.iter().enumerate() {
                out.push((Cell::new(i + 1, off + j + 1), v));
            }
        }
        out
    }

    pub fn letter_at(&self, c: Cell) -> Option<XY> {
        if !c.is_cell() || c.row > self.rows.len() {
            return None;
        }
        let off = self.inner.row_len(c.row);
        if c.col <= off {
            return None;
        }
        self.rows[c.row - 1].get(c.col - off - 1).copied()
    }

    pub fn residue(&self, c: Cell) -> usize {
        residue(c, self.k + 1)
    }

    fn residues_of(&self, letter: XY) -> BTreeSet<usize> {
        self.cells()
            .into_iter()
            .filter(|&(_, v)| v == letter)
            .map(|(c, _)| self.residue(c))
            .collect()
    }

    /// `(x residues, y residues)`.
    pub fn weight(&self) -> (usize, usize) {
        (self.residues_of(XY::X).len(), self.residues_of(XY::Y).len())
    }

    /// `(-1)^r` for weight `(r, l-r)`.
    pub fn sign(&self) -> i64 {
        if self.weight().0.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The core carved out by the x-cells together with the inner shape.
    pub fn x_support(&self) -> Result<Partition> {
        let mut parts: Vec<usize> = (1..=self.outer.len())
            .map(|row| {
                let xs = self.rows[row - 1].iter().filter(|&&v| v == XY::X).count();
                self.inner.row_len(row) + xs
            })
            .collect();
        // Zero rows may only trail; an occupied row above an empty one is
        // not a shape.
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts).map_err(|_| invariant("x-cells do not stack into a partition"))
    }

    /// Violations of the defining conditions, empty when valid.
    pub fn diagnostics(&self) -> Vec<String> {
        let mut problems = Vec::new();
        if !is_p_core(&self.outer, self.k + 1) {
            problems.push(format!("outer {} is not a {}-core", self.outer, self.k + 1));
        }
        if !is_p_core(&self.inner, self.k + 1) {
            problems.push(format!("inner {} is not a {}-core", self.inner, self.k + 1));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.iter().skip_while(|&&v| v == XY::X).any(|&v| v == XY::X) {
                problems.push(format!("row {}: an x follows a y", i + 1));
            }
            if row.iter().filter(|&&v| v == XY::X).count() > 1 {
                problems.push(format!("row {}: two x entries", i + 1));
            }
        }
        match self.x_support() {
            Err(_) => problems.push("x-cells do not stack into a partition".to_string()),
            Ok(support) => {
                if !is_p_core(&support, self.k + 1) {
                    problems.push(format!("x support {support} is not a {}-core", self.k + 1));
                }
            }
        }
        // y-cells form a horizontal strip: no two in a column.
        for (c, v) in self.cells() {
            if v == XY::Y && self.letter_at(Cell::new(c.row + 1, c.col)) == Some(XY::Y) {
                problems.push(format!("column {}: two y entries", c.col));
            }
        }
        problems
    }

    pub fn is_valid(&self) -> bool {
        self.diagnostics().is_empty()
    }
}

impl PartialOrd for TwoLetterFilling {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TwoLetterFilling {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.rows, self.outer.parts(), self.inner.parts())
            .cmp(&(&other.rows, other.outer.parts(), other.inner.parts()))
    }
}

/// All cancellation fillings of shape `core(mu)/core(nu)` of total
/// residue count `l`, over every split `(r, l-r)`.
pub fn enumerate_a(
    k: usize,
    nu: &Partition,
    l: usize,
    mu: &Partition,
) -> Result<Vec<TwoLetterFilling>> {
    if l > k {
        return Err(crate::error::Error::PieriDegreeExceedsK);
    }
    let gamma = core_of(mu, k)?;
    let delta = core_of(nu, k)?;
    let mut out = Vec::new();
    if !gamma.contains(&delta) {
        return Ok(out);
    }
    for r in 0..=l {
        for support in crate::tableaux::core_strip_successors(k, &delta, &gamma, r, true) {
            if !gamma.contains(&support) {
                continue;
            }
            let top = SkewShape::new(gamma.clone(), support.clone())?;
            let top_residues: BTreeSet<usize> =
                top.cells().iter().map(|&c| residue(c, k + 1)).collect();
            if top_residues.len() != l - r {
                continue;
            }
            if !matches!(
                crate::shapes::strip_type(&gamma, &support),
                crate::shapes::StripType::Horizontal | crate::shapes::StripType::Both
            ) {
                continue;
            }
            let rows: Vec<Vec<XY>> = (1..=gamma.len())
                .map(|row| {
                    let off = delta.row_len(row);
                    let xs = support.row_len(row) - off;
                    let total = gamma.row_len(row) - off;
                    (0..total)
                        .map(|j| if j < xs { XY::X } else { XY::Y })
                        .collect()
                })
                .collect();
            let filling = TwoLetterFilling::new(k, gamma.clone(), delta.clone(), rows)?;
            debug_assert!(filling.is_valid(), "{:?}", filling.diagnostics());
            debug_assert_eq!(filling.weight(), (r, l - r));
            out.push(filling);
        }
    }
    out.sort();
    Ok(out)
}

/// A free residue class of one letter, with the lowest row it occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeEntry {
    pub residue: usize,
    pub lowest_row: usize,
}

/// The free x and y residues of a filling.
///
/// An x residue is free when every cell of that residue holding x sits at
/// the top of its column; a y residue is free when no cell of that
/// residue holding y sits immediately right of another entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeEntries {
    pub x: Vec<FreeEntry>,
    pub y: Vec<FreeEntry>,
}

impl FreeEntries {
    /// Lowest row holding a free x, with its residue.
    pub fn r1(&self) -> Option<(usize, usize)> {
        self.x
            .iter()
            .min_by_key(|e| e.lowest_row)
            .map(|e| (e.lowest_row, e.residue))
    }

    /// Lowest row holding a free y, with its residue.
    pub fn r2(&self) -> Option<(usize, usize)> {
        self.y
            .iter()
            .min_by_key(|e| e.lowest_row)
            .map(|e| (e.lowest_row, e.residue))
    }
}

pub fn free_entries(t: &TwoLetterFilling) -> Result<FreeEntries> {
    let cells = t.cells();
    let mut x = Vec::new();
    let mut y = Vec::new();
    let x_residues: BTreeSet<usize> = cells
        .iter()
        .filter(|&&(_, v)| v == XY::X)
        .map(|&(c, _)| t.residue(c))
        .collect();
    for &r in &x_residues {
        let mine: Vec<Cell> = cells
            .iter()
            .filter(|&&(c, v)| v == XY::X && t.residue(c) == r)
            .map(|&(c, _)| c)
            .collect();
        let free = mine
            .iter()
            .all(|&c| !t.outer().contains_cell(Cell::new(c.row + 1, c.col)));
        if free {
            x.push(FreeEntry {
                residue: r,
                lowest_row: mine.iter().map(|c| c.row).min().unwrap(),
            });
        }
    }
    let y_residues: BTreeSet<usize> = cells
        .iter()
        .filter(|&&(_, v)| v == XY::Y)
        .map(|&(c, _)| t.residue(c))
        .collect();
    for &r in &y_residues {
        let mine: Vec<Cell> = cells
            .iter()
            .filter(|&&(c, v)| v == XY::Y && t.residue(c) == r)
            .map(|&(c, _)| c)
            .collect();
        let free = mine
            .iter()
            .all(|&c| t.letter_at(Cell::new(c.row, c.col.wrapping_sub(1))).is_none());
        if free {
            y.push(FreeEntry {
                residue: r,
                lowest_row: mine.iter().map(|c| c.row).min().unwrap(),
            });
        }
    }
    if x.is_empty() && y.is_empty() {
        return Err(invariant("no free entry in a two-letter filling".to_string()));
    }
    Ok(FreeEntries { x, y })
}

/// The sign-reversing involution: relabel the free residue class found in
/// the lowest row, x to y when the lowest free x sits strictly below the
/// lowest free y, otherwise y to x.
pub fn m_involution(t: &TwoLetterFilling) -> Result<TwoLetterFilling> {
    let fe = free_entries(t)?;
    let (from, to, pick) = match (fe.r1(), fe.r2()) {
        (Some((row1, res1)), Some((row2, _))) if row1 < row2 => (XY::X, XY::Y, res1),
        (Some((_, res1)), None) => (XY::X, XY::Y, res1),
        (_, Some((_, res2))) => (XY::Y, XY::X, res2),
        (None, None) => unreachable!("free_entries errors when empty"),
    };
    let (n1, n2) = t.weight();
    let mut rows = t.rows().to_vec();
    for (c, v) in t.cells() {
        if v == from && t.residue(c) == pick {
            let off = t.inner().row_len(c.row);
            rows[c.row - 1][c.col - off - 1] = to;
        }
    }
    let result = TwoLetterFilling::new(t.k(), t.outer().clone(), t.inner().clone(), rows)?;
    let problems = result.diagnostics();
    if !problems.is_empty() {
        return Err(invariant(format!(
            "sign-reversing map broke the filling: {}",
            problems.join("; ")
        )));
    }
    let (m1, m2) = result.weight();
    let weight_ok = if from == XY::X {
        m1 + 1 == n1 && m2 == n2 + 1
    } else {
        m1 == n1 + 1 && m2 + 1 == n2
    };
    if !weight_ok {
        return Err(invariant(format!(
            "sign-reversing map moved weight ({n1},{n2}) to ({m1},{m2})"
        )));
    }
    Ok(result)
}
