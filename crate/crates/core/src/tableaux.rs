//! k-tableaux: fillings of (k+1)-cores (or skews of two cores) where
//! letter i occupies exactly `weight[i]` distinct (k+1)-residues.
//!
//! Two enumeration engines are provided. The production engine walks
//! chains of intermediate cores, adding one letter per step as a strip
//! with the prescribed number of distinct residues. The backtracking
//! engine fills the shape cell by cell straight from the definition and
//! serves as the independent oracle: the test suite requires the two to
//! produce identical sorted lists.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{add_i64, invariant, precondition, Result};
use crate::shapes::{
    core_of, is_p_core, residue, Cell, Composition, Partition, SkewShape,
};

/// Row/column ordering discipline of a filling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableauMode {
    /// Rows weakly increase, columns strictly increase.
    ColumnStrict,
    /// Rows strictly increase, columns weakly increase.
    Transposed,
}

/// A filling of `outer/inner` (both (k+1)-cores) by positive letters.
///
/// `rows[r]` lists the letters of row `r+1` (bottom row first); the cells
/// of the inner shape are omitted, so `rows[r]` covers the columns
/// `inner_r+1 ..= outer_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KTableau {
    k: usize,
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<usize>>,
    mode: TableauMode,
}

impl KTableau {
    /// Structural constructor: row lengths must tile `outer/inner` and
    /// letters must be positive. Ordering, core and weight conditions are
    /// reported by [`KTableau::diagnostics`], not enforced here.
    pub fn new(
        k: usize,
        outer: Partition,
        inner: Partition,
        rows: Vec<Vec<usize>>,
        mode: TableauMode,
    ) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(precondition(format!(
                "inner {inner} not contained in outer {outer}"
            )));
        }
        if rows.len() != outer.len() {
            return Err(precondition(format!(
                "expected {} rows, got {}",
                outer.len(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let want = outer.row_len(i + 1) - inner.row_len(i + 1);
            if row.len() != want {
                return Err(precondition(format!(
                    "row {} has {} letters, expected {}",
                    i + 1,
                    row.len(),
                    want
                )));
            }
            if row.contains(&0) {
                return Err(precondition("letters must be positive".to_string()));
            }
        }
        Ok(KTableau { k, outer, inner, rows, mode })
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

    pub fn mode(&self) -> TableauMode {
        self.mode
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.outer.clone(), self.inner.clone()).expect("validated at construction")
    }

    pub fn letter_at(&self, c: Cell) -> Option<usize> {
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

    /// Cells with their letters, row-major from the bottom row.
    pub fn cells(&self) -> Vec<(Cell, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let off = self.inner.row_len(i + 1);
            for (j, &v) in row.iter().enumerate() {
                out.push((Cell::new(i + 1, off + j + 1), v));
            }
        }
        out
    }

    pub fn max_letter(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Residues occupied by `letter`.
    pub fn residues_of_letter(&self, letter: usize) -> BTreeSet<usize> {
        self.cells()
            .into_iter()
            .filter(|&(_, v)| v == letter)
            .map(|(c, _)| self.residue(c))
            .collect()
    }

    /// The k-weight: component i counts the distinct residues occupied by
    /// letter i, for i up to the largest letter present.
    pub fn weight(&self) -> Composition {
        let max = self.max_letter();
        Composition::new(
            (1..=max)
                .map(|letter| self.residues_of_letter(letter).len())
                .collect(),
        )
    }

    /// Every violated tableau condition, as human-readable strings.
    /// An empty list means the filling is a valid k-tableau of the given
    /// k-weight.
    pub fn diagnostics(&self, weight: &Composition) -> Vec<String> {
        let mut problems = Vec::new();
        if !is_p_core(&self.outer, self.k + 1) {
            problems.push(format!("outer shape {} is not a {}-core", self.outer, self.k + 1));
        }
        if !is_p_core(&self.inner, self.k + 1) {
            problems.push(format!("inner shape {} is not a {}-core", self.inner, self.k + 1));
        }
        for (i, row) in self.rows.iter().enumerate() {
            for j in 1..row.len() {
                let ok = match self.mode {
                    TableauMode::ColumnStrict => row[j - 1] <= row[j],
                    TableauMode::Transposed => row[j - 1] < row[j],
                };
                if !ok {
                    problems.push(format!(
                        "row {} breaks the row ordering at position {}",
                        i + 1,
                        j
                    ));
                }
            }
        }
        for (c, v) in self.cells() {
            let above = Cell::new(c.row + 1, c.col);
            if let Some(w) = self.letter_at(above) {
                let ok = match self.mode {
                    TableauMode::ColumnStrict => v < w,
                    TableauMode::Transposed => v <= w,
                };
                if !ok {
                    problems.push(format!(
                        "column {} breaks the column ordering at row {}",
                        c.col, c.row
                    ));
                }
            }
        }
        let letters = self.max_letter().max(weight.len());
        for letter in 1..=letters {
            let have = self.residues_of_letter(letter).len();
            let want = weight.get(letter);
            if have != want {
                problems.push(format!(
                    "letter {letter} occupies {have} residues, expected {want}"
                ));
            }
        }
        problems
    }

    pub fn is_valid(&self, weight: &Composition) -> bool {
        self.diagnostics(weight).is_empty()
    }

    /// Canonical comparison key: the letters row-major from the bottom.
    fn sort_key(&self) -> (&[Vec<usize>], &[usize], &[usize]) {
        (&self.rows, self.outer.parts(), self.inner.parts())
    }
}

impl PartialOrd for KTableau {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for KTableau {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then(self.k.cmp(&other.k))
            .then(self.mode.cmp(&other.mode))
    }
}

impl Serialize for KTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("KTableau", 4)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("outer", &self.outer)?;
        s.serialize_field("inner", &self.inner)?;
        s.serialize_field("rows", &self.rows)?;
        s.end()
    }
}

/// Wire form of a tableau; the ordering mode is contextual and not part
/// of the encoding.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawTableau {
    pub k: usize,
    pub outer: Partition,
    #[serde(default)]
    pub inner: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl RawTableau {
    pub fn into_tableau(self, mode: TableauMode) -> Result<KTableau> {
        KTableau::new(self.k, self.outer, self.inner, self.rows, mode)
    }
}

impl From<&KTableau> for RawTableau {
    fn from(t: &KTableau) -> Self {
        RawTableau {
            k: t.k,
            outer: t.outer.clone(),
            inner: t.inner.clone(),
            rows: t.rows.clone(),
        }
    }
}

/// Cores `c'` with `current ⊆ c' ⊆ target` such that `c'/current` is a
/// horizontal (or vertical) strip occupying exactly `m` distinct
/// (k+1)-residues. One step of the chain engine.
pub(crate) fn core_strip_successors(
    k: usize,
    current: &Partition,
    target: &Partition,
    m: usize,
    vertical: bool,
) -> Vec<Partition> {
    // Rows are chosen bottom-up; the residues of the new cells accumulate
    // in a bitmask so overfull branches die early, and branches that can
    // no longer reach m residues are cut by the remaining cell capacity.
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        current: &Partition,
        target: &Partition,
        m: u32,
        vertical: bool,
        row: usize,
        rows: usize,
        mask: u128,
        capacity: &[u32],
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > rows {
            if mask.count_ones() == m {
                let trimmed: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
                let candidate = Partition::from_parts(trimmed);
                if is_p_core(&candidate, k + 1) {
                    out.push(candidate);
                }
            }
            return;
        }
        if mask.count_ones() + capacity[row - 1] < m {
            return;
        }
        let lo = current.row_len(row);
        let cap_shape = if row == 1 { usize::MAX } else { parts[row - 2] };
        let cap_strip = if vertical {
            lo + 1
        } else if row == 1 {
            usize::MAX
        } else {
            current.row_len(row - 1)
        };
        let hi = target.row_len(row).min(cap_shape).min(cap_strip);
        if lo > hi {
            return;
        }
        let p = k + 1;
        let mut row_mask = mask;
        for v in lo..=hi {
            if v > lo {
                // Cell (row, v) joins the strip.
                row_mask |= 1u128 << ((v as i64 - row as i64).rem_euclid(p as i64) as u32);
                if row_mask.count_ones() > m {
                    break;
                }
            }
            parts.push(v);
            rec(k, current, target, m, vertical, row + 1, rows, row_mask, capacity, parts, out);
            parts.pop();
        }
    }
    let rows = target.len().max(current.len());
    // capacity[r-1]: cells addable in rows r and above, an upper bound on
    // the residues those rows can contribute.
    let mut capacity = vec![0u32; rows + 1];
    for row in (1..=rows).rev() {
        let gain = target.row_len(row).saturating_sub(current.row_len(row)) as u32;
        capacity[row - 1] = capacity[row] + gain;
    }
    let mut out = Vec::new();
    let mut parts: Vec<usize> = Vec::with_capacity(rows);
    rec(
        k,
        current,
        target,
        m as u32,
        vertical,
        1,
        rows,
        0,
        &capacity,
        &mut parts,
        &mut out,
    );
    out.sort();
    out.dedup();
    out
}

type SuccessorList = std::rc::Rc<Vec<std::rc::Rc<Partition>>>;
type TargetMemo = HashMap<Partition, HashMap<usize, SuccessorList>>;
type StripMemo = HashMap<(usize, bool, Partition), std::rc::Rc<std::cell::RefCell<TargetMemo>>>;

thread_local! {
    // Successor lists are pure functions of their arguments; memoizing
    // per thread keeps repeated enumerations over one target cheap
    // without any shared mutable state.
    static STRIP_MEMO: std::cell::RefCell<StripMemo> = std::cell::RefCell::new(HashMap::new());
    static CORE_MEMO: std::cell::RefCell<HashMap<(usize, Partition), Partition>> =
        std::cell::RefCell::new(HashMap::new());
}

fn core_of_memo(p: &Partition, k: usize) -> Result<Partition> {
    let hit = CORE_MEMO.with(|memo| memo.borrow().get(&(k, p.clone())).cloned());
    if let Some(core) = hit {
        return Ok(core);
    }
    let core = core_of(p, k)?;
    CORE_MEMO.with(|memo| memo.borrow_mut().insert((k, p.clone()), core.clone()));
    Ok(core)
}

/// Memoized view of [`core_strip_successors`] for one fixed target core.
struct StripStepper<'a> {
    k: usize,
    target: &'a Partition,
    vertical: bool,
    memo: std::rc::Rc<std::cell::RefCell<TargetMemo>>,
}

impl<'a> StripStepper<'a> {
    fn new(k: usize, target: &'a Partition, vertical: bool) -> Self {
        let memo = STRIP_MEMO.with(|table| {
            std::rc::Rc::clone(
                table
                    .borrow_mut()
                    .entry((k, vertical, target.clone()))
                    .or_default(),
            )
        });
        StripStepper { k, target, vertical, memo }
    }

    fn successors(&mut self, current: &Partition, m: usize) -> SuccessorList {
        if let Some(hit) = self
            .memo
            .borrow()
            .get(current)
            .and_then(|per_m| per_m.get(&m))
        {
            return std::rc::Rc::clone(hit);
        }
        let computed: SuccessorList = std::rc::Rc::new(
            core_strip_successors(self.k, current, self.target, m, self.vertical)
                .into_iter()
                .map(std::rc::Rc::new)
                .collect(),
        );
        self.memo
            .borrow_mut()
            .entry(current.clone())
            .or_default()
            .insert(m, std::rc::Rc::clone(&computed));
        computed
    }
}

fn check_enumeration_inputs(
    k: usize,
    outer: &Partition,
    inner: &Partition,
    weight: &Composition,
) -> Result<(Partition, Partition)> {
    let gamma = core_of_memo(outer, k)?;
    let delta = core_of_memo(inner, k)?;
    if !gamma.contains(&delta) {
        return Err(precondition(format!(
            "inner core {delta} not contained in outer core {gamma}"
        )));
    }
    let cells = outer.degree() - inner.degree();
    if weight.degree() != cells {
        return Err(precondition(format!(
            "weight sums to {}, expected {} k-bounded cells",
            weight.degree(),
            cells
        )));
    }
    Ok((gamma, delta))
}

/// Enumerate the k-tableaux of shape `core(outer)/core(inner)` and
/// k-weight `weight`, in canonical sorted order.
///
/// `outer` and `inner` are k-bounded partitions. This is the chain
/// engine: letter i extends the current core by a horizontal strip
/// (vertical in transposed mode) with exactly `weight[i]` distinct
/// residues.
pub fn enumerate(
    k: usize,
    outer: &Partition,
    inner: &Partition,
    weight: &Composition,
    mode: TableauMode,
) -> Result<Vec<KTableau>> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        gamma: &Partition,
        weight: &[usize],
        letter: usize,
        mode: TableauMode,
        stepper: &mut StripStepper,
        chain: &mut Vec<std::rc::Rc<Partition>>,
        out: &mut Vec<KTableau>,
    ) {
        if letter > weight.len() {
            if chain.last().unwrap().as_ref() == gamma {
                out.push(tableau_from_chain(k, chain, mode));
            }
            return;
        }
        let succs = stepper.successors(chain.last().unwrap(), weight[letter - 1]);
        for next in succs.iter() {
            chain.push(std::rc::Rc::clone(next));
            rec(k, gamma, weight, letter + 1, mode, stepper, chain, out);
            chain.pop();
        }
    }
    let (gamma, delta) = check_enumeration_inputs(k, outer, inner, weight)?;
    let mut stepper = StripStepper::new(k, &gamma, mode == TableauMode::Transposed);
    let mut chain: Vec<std::rc::Rc<Partition>> = vec![std::rc::Rc::new(delta)];
    let mut out = Vec::new();
    rec(k, &gamma, weight.parts(), 1, mode, &mut stepper, &mut chain, &mut out);
    out.sort();
    Ok(out)
}

fn tableau_from_chain(k: usize, chain: &[std::rc::Rc<Partition>], mode: TableauMode) -> KTableau {
    let outer = chain.last().unwrap().as_ref().clone();
    let inner = chain.first().unwrap().as_ref().clone();
    let mut rows: Vec<Vec<usize>> = (1..=outer.len())
        .map(|r| Vec::with_capacity(outer.row_len(r) - inner.row_len(r)))
        .collect();
    for step in 1..chain.len() {
        for r in 1..=chain[step].len() {
            let from = chain[step - 1].row_len(r);
            let to = chain[step].row_len(r);
            for _ in from..to {
                rows[r - 1].push(step);
            }
        }
    }
    KTableau::new(k, outer, inner, rows, mode).expect("chain steps tile the shape")
}

/// Cell-by-cell backtracking enumeration, straight from the defining
/// conditions. Independent of the chain engine; kept as the oracle.
pub fn enumerate_backtrack(
    k: usize,
    outer: &Partition,
    inner: &Partition,
    weight: &Composition,
    mode: TableauMode,
) -> Result<Vec<KTableau>> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        n: usize,
        letters: usize,
        mode: TableauMode,
        residues: &[usize],
        left: &[Option<usize>],
        below: &[Option<usize>],
        above_count: &[usize],
        right_count: &[usize],
        usable_gt: &[usize],
        weight: &Composition,
        assignment: &mut Vec<usize>,
        res_sets: &mut Vec<BTreeSet<usize>>,
        deficiency: &mut usize,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if idx == n {
            if *deficiency == 0 {
                emit(assignment);
            }
            return;
        }
        if *deficiency > n - idx {
            return;
        }
        let min_letter = match mode {
            TableauMode::ColumnStrict => left[idx]
                .map_or(1, |i| assignment[i])
                .max(below[idx].map_or(1, |i| assignment[i] + 1)),
            TableauMode::Transposed => left[idx]
                .map_or(1, |i| assignment[i] + 1)
                .max(below[idx].map_or(1, |i| assignment[i])),
        };
        for v in min_letter..=letters {
            if weight.get(v) == 0 {
                continue;
            }
            // Letters strictly increase along one axis, so enough usable
            // larger letters must remain for the cells that follow.
            let chain_needed = match mode {
                TableauMode::ColumnStrict => above_count[idx],
                TableauMode::Transposed => right_count[idx],
            };
            if usable_gt[v] < chain_needed {
                continue;
            }
            let r = residues[idx];
            let fresh = res_sets[v].insert(r);
            if fresh && res_sets[v].len() > weight.get(v) {
                res_sets[v].remove(&r);
                continue;
            }
            if fresh {
                *deficiency -= 1;
            }
            assignment[idx] = v;
            rec(
                idx + 1, n, letters, mode, residues, left, below, above_count, right_count,
                usable_gt, weight, assignment, res_sets, deficiency, emit,
            );
            assignment[idx] = 0;
            if fresh {
                res_sets[v].remove(&r);
                *deficiency += 1;
            }
        }
    }

    let (gamma, delta) = check_enumeration_inputs(k, outer, inner, weight)?;
    let shape = SkewShape::new(gamma.clone(), delta.clone())?;
    let cells = shape.cells();
    let n = cells.len();
    let letters = weight.len();

    let index_of: HashMap<Cell, usize> = cells.iter().copied().zip(0..).collect();
    let residues: Vec<usize> = cells.iter().map(|&c| residue(c, k + 1)).collect();
    let left: Vec<Option<usize>> = cells
        .iter()
        .map(|c| index_of.get(&Cell::new(c.row, c.col.wrapping_sub(1))).copied())
        .collect();
    let below: Vec<Option<usize>> = cells
        .iter()
        .map(|c| index_of.get(&Cell::new(c.row.wrapping_sub(1), c.col)).copied())
        .collect();
    let above_count: Vec<usize> = cells
        .iter()
        .map(|c| {
            (c.row + 1..=gamma.len())
                .filter(|&r| shape.contains_cell(Cell::new(r, c.col)))
                .count()
        })
        .collect();
    let right_count: Vec<usize> = cells.iter().map(|c| gamma.row_len(c.row) - c.col).collect();
    let usable_gt: Vec<usize> = (0..=letters)
        .map(|v| (v + 1..=letters).filter(|&w| weight.get(w) > 0).count())
        .collect();

    let mut assignment = vec![0usize; n];
    let mut res_sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); letters + 1];
    let mut deficiency: usize = weight.degree();
    let mut out = Vec::new();
    {
        let gamma = &gamma;
        let delta = &delta;
        let cells = &cells;
        let mut emit = |assignment: &[usize]| {
            let mut rows: Vec<Vec<usize>> = (1..=gamma.len())
                .map(|r| Vec::with_capacity(gamma.row_len(r) - delta.row_len(r)))
                .collect();
            for (i, &c) in cells.iter().enumerate() {
                rows[c.row - 1].push(assignment[i]);
            }
            out.push(
                KTableau::new(k, gamma.clone(), delta.clone(), rows, mode)
                    .expect("assignment tiles the shape"),
            );
        };
        rec(
            0, n, letters, mode, &residues, &left, &below, &above_count, &right_count,
            &usable_gt, weight, &mut assignment, &mut res_sets, &mut deficiency, &mut emit,
        );
    }
    out.sort();
    Ok(out)
}

/// Count the chains behind [`enumerate`] without materializing tableaux.
fn chain_count(
    k: usize,
    outer: &Partition,
    inner: &Partition,
    weight: &Composition,
    vertical: bool,
) -> Result<i64> {
    let (gamma, delta) = check_enumeration_inputs(k, outer, inner, weight)?;
    let mut stepper = StripStepper::new(k, &gamma, vertical);
    let mut layer: HashMap<std::rc::Rc<Partition>, i64> =
        HashMap::from([(std::rc::Rc::new(delta), 1i64)]);
    for &m in weight.parts() {
        let mut next: HashMap<std::rc::Rc<Partition>, i64> = HashMap::new();
        for (current, count) in &layer {
            for succ in stepper.successors(current, m).iter() {
                let slot = next.entry(std::rc::Rc::clone(succ)).or_insert(0);
                *slot = add_i64(*slot, *count)?;
            }
        }
        layer = next;
    }
    Ok(layer.get(&gamma).copied().unwrap_or(0))
}

/// The k-Kostka number: tableaux of shape `core(outer)` and k-weight `weight`.
pub fn k_kostka(k: usize, outer: &Partition, weight: &Composition) -> Result<i64> {
    chain_count(k, outer, &Partition::empty(), weight, false)
}

/// Skew k-tableaux of shape `core(outer)/core(inner)` and the given k-weight.
pub fn skew_k_kostka(
    k: usize,
    outer: &Partition,
    inner: &Partition,
    weight: &Composition,
) -> Result<i64> {
    chain_count(k, outer, inner, weight, false)
}

/// Transposed skew k-tableaux of shape `core(outer)/core(inner)`.
pub fn transposed_skew_kostka(
    k: usize,
    outer: &Partition,
    inner: &Partition,
    weight: &Composition,
) -> Result<i64> {
    chain_count(k, outer, inner, weight, true)
}

/// Classical semistandard tableau count of a (skew) shape with letter
/// multiplicities given by `weight`. No residues anywhere; this is an
/// independent reference for the large-k reduction.
pub fn ssyt_count(outer: &Partition, inner: &Partition, weight: &Composition) -> Result<i64> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        n: usize,
        letters: usize,
        left: &[Option<usize>],
        below: &[Option<usize>],
        remaining: &mut Vec<usize>,
        assignment: &mut Vec<usize>,
        count: &mut i64,
    ) -> Result<()> {
        if idx == n {
            *count = add_i64(*count, 1)?;
            return Ok(());
        }
        let min_letter = left[idx]
            .map_or(1, |i| assignment[i])
            .max(below[idx].map_or(1, |i| assignment[i] + 1));
        for v in min_letter..=letters {
            if remaining[v] == 0 {
                continue;
            }
            remaining[v] -= 1;
            assignment[idx] = v;
            rec(idx + 1, n, letters, left, below, remaining, assignment, count)?;
            assignment[idx] = 0;
            remaining[v] += 1;
        }
        Ok(())
    }

    if !outer.contains(inner) {
        return Err(precondition(format!(
            "inner {inner} not contained in outer {outer}"
        )));
    }
    if weight.degree() != outer.degree() - inner.degree() {
        return Err(precondition(
            "weight does not sum to the number of cells".to_string(),
        ));
    }
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    let cells = shape.cells();
    let n = cells.len();
    let letters = weight.len();
    let index_of: HashMap<Cell, usize> = cells.iter().copied().zip(0..).collect();
    let left: Vec<Option<usize>> = cells
        .iter()
        .map(|c| index_of.get(&Cell::new(c.row, c.col.wrapping_sub(1))).copied())
        .collect();
    let below: Vec<Option<usize>> = cells
        .iter()
        .map(|c| index_of.get(&Cell::new(c.row.wrapping_sub(1), c.col)).copied())
        .collect();
    let mut remaining: Vec<usize> = (0..=letters)
        .map(|v| if v == 0 { 0 } else { weight.get(v) })
        .collect();
    let mut assignment = vec![0usize; n];
    let mut count = 0i64;
    rec(0, n, letters, &left, &below, &mut remaining, &mut assignment, &mut count)?;
    Ok(count)
}

/// The total order on the occurrences of one letter: `residues[0]` labels
/// the lowest, rightmost occurrence; each later entry is found after
/// deleting all cells of the previous residue carrying the letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterInstanceOrder {
    pub letter: usize,
    pub residues: Vec<usize>,
}

pub fn letter_instance_order(t: &KTableau, letter: usize) -> LetterInstanceOrder {
    let mut cells: Vec<Cell> = t
        .cells()
        .into_iter()
        .filter(|&(_, v)| v == letter)
        .map(|(c, _)| c)
        .collect();
    let mut residues = Vec::new();
    while let Some(&pick) = cells
        .iter()
        .min_by_key(|c| (c.row, std::cmp::Reverse(c.col)))
    {
        let r = t.residue(pick);
        residues.push(r);
        cells.retain(|&c| t.residue(c) != r);
    }
    LetterInstanceOrder { letter, residues }
}

/// Delete every entry above the given instance of `letter` in the
/// instance order: strictly above for `strict = false` (keeping the
/// instance itself), weakly above for `strict = true`.
///
/// `residue_rank` is 1-based into [`LetterInstanceOrder::residues`].
pub fn restrict(
    t: &KTableau,
    letter: usize,
    residue_rank: usize,
    strict: bool,
) -> Result<KTableau> {
    let order = letter_instance_order(t, letter);
    if residue_rank == 0 || residue_rank > order.residues.len() {
        return Err(precondition(format!(
            "letter {letter} occupies {} residues, rank {residue_rank} out of range",
            order.residues.len()
        )));
    }
    let kept_from = if strict { residue_rank } else { residue_rank - 1 };
    let kept: BTreeSet<usize> = order.residues[kept_from..].iter().copied().collect();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut outer_parts: Vec<usize> = Vec::new();
    for row in 1..=t.num_rows() {
        let off = t.inner().row_len(row);
        let mut letters = Vec::new();
        let mut done = false;
        for col in off + 1..=t.outer().row_len(row) {
            let c = Cell::new(row, col);
            let v = t.letter_at(c).expect("cell of shape");
            let keep = v < letter || (v == letter && kept.contains(&t.residue(c)));
            if keep {
                if done {
                    return Err(invariant(format!(
                        "restricted row {row} is not left-contiguous"
                    )));
                }
                letters.push(v);
            } else {
                done = true;
            }
        }
        outer_parts.push(off + letters.len());
        rows.push(letters);
    }
    while let Some(&last) = outer_parts.last() {
        if last == 0 {
            outer_parts.pop();
            rows.pop();
        } else {
            break;
        }
    }
    let outer = Partition::new(outer_parts)
        .map_err(|_| invariant("restricted shape is not a partition"))?;
    let result = KTableau::new(t.k(), outer, t.inner().clone(), rows, t.mode())?;
    let weight = result.weight();
    let problems = result.diagnostics(&weight);
    if !problems.is_empty() {
        return Err(invariant(format!(
            "restriction produced an invalid tableau: {}",
            problems.join("; ")
        )));
    }
    if !strict {
        // The largest remaining instance of the letter sits at the end of
        // its row once everything above it is gone.
        if let Some(low) = result
            .cells()
            .into_iter()
            .filter(|&(_, v)| v == letter)
            .map(|(c, _)| c)
            .min_by_key(|c| (c.row, std::cmp::Reverse(c.col)))
        {
            if result.residue(low) != order.residues[residue_rank - 1]
                || low.col != result.outer().row_len(low.row)
            {
                return Err(invariant(
                    "largest restricted instance does not end its row".to_string(),
                ));
            }
        }
    }
    Ok(result)
}

/// Status of a letter-`a` or letter-`a+1` entry for the pair (a, a+1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryClass {
    /// Shares a column with the partner letter.
    Married,
    /// Same residue as a married occurrence of the same letter.
    Divorced,
    Single,
}

/// Per-cell classification and per-row residue bookkeeping for the
/// letters `a` and `b = a+1`.
#[derive(Debug, Clone)]
pub struct Classification {
    pub a: usize,
    classes: BTreeMap<Cell, EntryClass>,
    res: BTreeMap<(usize, usize), BTreeSet<usize>>,
    ures: BTreeMap<(usize, usize), BTreeSet<usize>>,
}

impl Classification {
    pub fn entry_class(&self, c: Cell) -> Option<EntryClass> {
        self.classes.get(&c).copied()
    }

    pub fn classes(&self) -> &BTreeMap<Cell, EntryClass> {
        &self.classes
    }

    /// Residues of `letter` in `row`.
    pub fn res_row(&self, row: usize, letter: usize) -> BTreeSet<usize> {
        self.res.get(&(row, letter)).cloned().unwrap_or_default()
    }

    /// Residues of unmarried `letter` entries in `row`.
    pub fn ures_row(&self, row: usize, letter: usize) -> BTreeSet<usize> {
        self.ures.get(&(row, letter)).cloned().unwrap_or_default()
    }

    /// Residues of unmarried entries of either letter in `row`.
    pub fn ures_ab(&self, row: usize) -> BTreeSet<usize> {
        let mut set = self.ures_row(row, self.a);
        set.extend(self.ures_row(row, self.a + 1));
        set
    }
}

/// Classify every a and b = a+1 entry as married, divorced or single and
/// collect the per-row residue sets.
pub fn classify(t: &KTableau, a: usize) -> Result<Classification> {
    if t.mode() != TableauMode::ColumnStrict {
        return Err(precondition(
            "classification requires a column-strict tableau".to_string(),
        ));
    }
    let b = a + 1;
    let cells = t.cells();
    let mut married: BTreeSet<Cell> = BTreeSet::new();
    for &(c, v) in &cells {
        if v != a && v != b {
            continue;
        }
        let partner = if v == a { b } else { a };
        let col_has_partner =
            (1..=t.num_rows()).any(|row| t.letter_at(Cell::new(row, c.col)) == Some(partner));
        if col_has_partner {
            married.insert(c);
        }
    }
    let mut married_residues: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &c in &married {
        let v = t.letter_at(c).unwrap();
        married_residues.entry(v).or_default().insert(t.residue(c));
    }
    let mut classes = BTreeMap::new();
    let mut res: BTreeMap<(usize, usize), BTreeSet<usize>> = BTreeMap::new();
    let mut ures: BTreeMap<(usize, usize), BTreeSet<usize>> = BTreeMap::new();
    for &(c, v) in &cells {
        if v != a && v != b {
            continue;
        }
        let r = t.residue(c);
        res.entry((c.row, v)).or_default().insert(r);
        let class = if married.contains(&c) {
            EntryClass::Married
        } else if married_residues.get(&v).is_some_and(|s| s.contains(&r)) {
            EntryClass::Divorced
        } else {
            EntryClass::Single
        };
        if class != EntryClass::Married {
            ures.entry((c.row, v)).or_default().insert(r);
        }
        classes.insert(c, class);
    }
    let classification = Classification { a, classes, res, ures };
    debug_assert!(married_positions_frame_runs(t, &classification));
    Ok(classification)
}

/// Married b's terminate the b-run of their row and married a's begin the
/// a-run: the positional fact the involution relies on.
fn married_positions_frame_runs(t: &KTableau, cls: &Classification) -> bool {
    let (a, b) = (cls.a, cls.a + 1);
    for row in 1..=t.num_rows() {
        let run: Vec<(Cell, usize)> = t
            .cells()
            .into_iter()
            .filter(|&(c, v)| c.row == row && (v == a || v == b))
            .collect();
        let mut seen_unmarried_a = false;
        let mut seen_married_b = false;
        for (c, v) in run {
            let married = cls.entry_class(c) == Some(EntryClass::Married);
            if v == a {
                if married && seen_unmarried_a {
                    return false;
                }
                if !married {
                    seen_unmarried_a = true;
                }
            } else {
                if married {
                    seen_married_b = true;
                } else if seen_married_b {
                    return false;
                }
            }
        }
    }
    true
}

/// Fundamental rows and their equivalence classes for the pair (a, a+1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalRows {
    /// Ascending row indices whose unmarried residue set is contained in
    /// no lower row's.
    pub rows: Vec<usize>,
    /// `classes[i]` lists every row grouped with `rows[i]`, ascending.
    pub classes: Vec<Vec<usize>>,
}

pub fn fundamental_rows(t: &KTableau, a: usize) -> Result<FundamentalRows> {
    let cls = classify(t, a)?;
    let ures: Vec<(usize, BTreeSet<usize>)> = (1..=t.num_rows())
        .map(|row| (row, cls.ures_ab(row)))
        .filter(|(_, s)| !s.is_empty())
        .collect();
    let mut rows = Vec::new();
    for (m, set_m) in &ures {
        let fundamental = ures
            .iter()
            .all(|(r, set_r)| r >= m || !set_m.is_subset(set_r));
        if fundamental {
            rows.push(*m);
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); rows.len()];
    for (r, set_r) in &ures {
        let mut homes = Vec::new();
        for (i, m) in rows.iter().enumerate() {
            let set_m = &ures.iter().find(|(row, _)| row == m).unwrap().1;
            if set_r.is_subset(set_m) {
                homes.push(i);
            }
        }
        if homes.len() != 1 {
            return Err(invariant(format!(
                "row {r} belongs to {} fundamental classes",
                homes.len()
            )));
        }
        classes[homes[0]].push(*r);
    }
    Ok(FundamentalRows { rows, classes })
}

/// A sequence of k-bounded partitions from the empty partition to `mu`
/// where consecutive entries form `weight[j]`-admissible pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleChain {
    pub k: usize,
    pub shapes: Vec<Partition>,
    pub weight: Composition,
}

/// All admissible chains for the given weight, ending at `mu`.
pub fn enumerate_chains(k: usize, mu: &Partition, weight: &Composition) -> Vec<AdmissibleChain> {
    fn preds(k: usize, mu: &Partition, l: usize) -> Vec<Partition> {
        // Candidates nu with mu/nu a horizontal strip, then the full
        // admissibility filter.
        fn rec(
            mu: &Partition,
            remaining: usize,
            row: usize,
            rows: usize,
            parts: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if row > rows {
                if remaining == 0 {
                    let trimmed: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
                    out.push(Partition::from_parts(trimmed));
                }
                return;
            }
            let hi = mu.row_len(row);
            let lo = mu.row_len(row + 1).max(hi.saturating_sub(remaining));
            for v in (lo..=hi).rev() {
                parts.push(v);
                rec(mu, remaining - (hi - v), row + 1, rows, parts, out);
                parts.pop();
            }
        }
        let rows = mu.len();
        let mut out = Vec::new();
        let mut parts: Vec<usize> = Vec::with_capacity(rows);
        rec(mu, l, 1, rows, &mut parts, &mut out);
        out.retain(|nu| crate::shapes::is_l_admissible(mu, nu, l, k));
        out.sort();
        out.dedup();
        out
    }

    fn rec(k: usize, target: &Partition, weight: &[usize]) -> Vec<Vec<Partition>> {
        if weight.is_empty() {
            return if target.is_empty() {
                vec![vec![Partition::empty()]]
            } else {
                Vec::new()
            };
        }
        let l = weight[weight.len() - 1];
        let mut out = Vec::new();
        for nu in preds(k, target, l) {
            for mut chain in rec(k, &nu, &weight[..weight.len() - 1]) {
                chain.push(target.clone());
                out.push(chain);
            }
        }
        out
    }

    rec(k, mu, weight.parts())
        .into_iter()
        .map(|shapes| AdmissibleChain {
            k,
            shapes,
            weight: weight.clone(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::shapes::bounded_partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.to_vec())
    }

    fn w(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    /// First displayed 3-tableau of shape (8,5,2,1), bottom row first.
    fn golden_tableau() -> KTableau {
        KTableau::new(
            3,
            p(&[8, 5, 2, 1]),
            Partition::empty(),
            vec![
                vec![1, 2, 2, 2, 3, 4, 4, 6],
                vec![2, 3, 4, 4, 6],
                vec![4, 6],
                vec![5],
            ],
            TableauMode::ColumnStrict,
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        let t = golden_tableau();
        assert!(t.is_valid(&w(&[1, 3, 1, 2, 1, 1])));
        assert!(!t.is_valid(&w(&[1, 3, 1, 2, 2])));
        let single = KTableau::new(
            1,
            p(&[1]),
            Partition::empty(),
            vec![vec![1]],
            TableauMode::ColumnStrict,
        )
        .unwrap();
        assert!(single.is_valid(&w(&[1])));
    }

    #[test]
    fn enumerate_golden_example() {
        let outer = crate::shapes::kbounded_of(&p(&[8, 5, 2, 1]), 3).unwrap();
        assert_eq!(outer, p(&[3, 3, 2, 1]));
        let weight = w(&[1, 3, 1, 2, 1, 1]);
        let got =
            enumerate(3, &outer, &Partition::empty(), &weight, TableauMode::ColumnStrict).unwrap();
        let mut expected = vec![
            golden_tableau(),
            KTableau::new(
                3,
                p(&[8, 5, 2, 1]),
                Partition::empty(),
                vec![
                    vec![1, 2, 2, 2, 3, 4, 4, 5],
                    vec![2, 3, 4, 4, 5],
                    vec![4, 5],
                    vec![6],
                ],
                TableauMode::ColumnStrict,
            )
            .unwrap(),
            KTableau::new(
                3,
                p(&[8, 5, 2, 1]),
                Partition::empty(),
                vec![
                    vec![1, 2, 2, 2, 4, 4, 5, 6],
                    vec![2, 4, 4, 5, 6],
                    vec![3, 6],
                    vec![4],
                ],
                TableauMode::ColumnStrict,
            )
            .unwrap(),
        ];
        expected.sort();
        assert_eq!(got, expected);
        let oracle = enumerate_backtrack(
            3,
            &outer,
            &Partition::empty(),
            &weight,
            TableauMode::ColumnStrict,
        )
        .unwrap();
        assert_eq!(got, oracle);
    }

    #[test]
    fn enumerate_small_examples() {
        let got = enumerate(
            2,
            &p(&[2, 1]),
            &Partition::empty(),
            &w(&[1, 1, 1]),
            TableauMode::ColumnStrict,
        )
        .unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].outer(), &p(&[3, 1]));
        assert_eq!(got[0].rows(), &[vec![1, 2, 3], vec![3]]);

        let got = enumerate(2, &p(&[2, 1]), &p(&[1]), &w(&[1, 1]), TableauMode::ColumnStrict)
            .unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].rows(), &[vec![1, 2], vec![2]]);
        let oracle =
            enumerate_backtrack(2, &p(&[2, 1]), &p(&[1]), &w(&[1, 1]), TableauMode::ColumnStrict)
                .unwrap();
        assert_eq!(got, oracle);
    }

    #[test]
    fn enumerate_rejects_bad_inputs() {
        assert!(matches!(
            enumerate(2, &p(&[3]), &Partition::empty(), &w(&[3]), TableauMode::ColumnStrict),
            Err(Error::PartExceedsK)
        ));
        assert!(matches!(
            enumerate(2, &p(&[2]), &Partition::empty(), &w(&[1]), TableauMode::ColumnStrict),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(k_kostka(2, &p(&[2, 1]), &w(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(skew_k_kostka(2, &p(&[2, 1]), &p(&[1]), &w(&[1, 1])).unwrap(), 1);
        for k in 1..=3usize {
            for n in 0..=8 {
                for mu in bounded_partitions_of(n, k) {
                    let diag = k_kostka(k, &mu, &Composition::from(&mu)).unwrap();
                    assert_eq!(diag, 1, "K({mu},{mu}) at k={k}");
                }
            }
        }
    }

    #[test]
    fn zero_weight_components_mean_absent_letters() {
        let got = enumerate(
            2,
            &p(&[2, 1]),
            &Partition::empty(),
            &w(&[1, 0, 1, 1]),
            TableauMode::ColumnStrict,
        )
        .unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].rows(), &[vec![1, 3, 4], vec![4]]);
        let oracle = enumerate_backtrack(
            2,
            &p(&[2, 1]),
            &Partition::empty(),
            &w(&[1, 0, 1, 1]),
            TableauMode::ColumnStrict,
        )
        .unwrap();
        assert_eq!(got, oracle);
    }

    #[test]
    fn transposed_enumeration_agrees_with_oracle() {
        for n in 0..=6 {
            for mu in bounded_partitions_of(n, 2) {
                for alpha in crate::shapes::compositions_of(n) {
                    let fast =
                        enumerate(2, &mu, &Partition::empty(), &alpha, TableauMode::Transposed)
                            .unwrap();
                    let slow = enumerate_backtrack(
                        2,
                        &mu,
                        &Partition::empty(),
                        &alpha,
                        TableauMode::Transposed,
                    )
                    .unwrap();
                    assert_eq!(fast, slow, "mu={mu} alpha={alpha:?}");
                    assert_eq!(
                        fast.len() as i64,
                        transposed_skew_kostka(2, &mu, &Partition::empty(), &alpha).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn letter_order_and_restrict() {
        let t = golden_tableau();
        // Letter 4 occupies residues 1 and 2; the lowest rightmost 4 is
        // (1,7) with residue 2.
        let order = letter_instance_order(&t, 4);
        assert_eq!(order.residues, vec![2, 1]);
        // Keeping both instances only deletes the letters above 4.
        let le = restrict(&t, 4, 1, false).unwrap();
        assert_eq!(le.weight(), w(&[1, 3, 1, 2]));
        // Strictly below the last instance removes letter 4 entirely.
        let lt = restrict(&t, 4, 2, true).unwrap();
        assert_eq!(lt.weight(), w(&[1, 3, 1]));
        assert!(matches!(restrict(&t, 4, 3, false), Err(Error::Precondition(_))));
    }

    #[test]
    fn restrict_standard_case() {
        // On a standard k-tableau, cutting strictly below the last
        // instance of the top letter deletes exactly one cell.
        let ts = enumerate(
            2,
            &p(&[2, 1]),
            &Partition::empty(),
            &w(&[1, 1, 1]),
            TableauMode::ColumnStrict,
        )
        .unwrap();
        for t in ts {
            let top = t.max_letter();
            let order = letter_instance_order(&t, top);
            let kept = restrict(&t, top, order.residues.len(), false).unwrap();
            assert_eq!(kept.cells().len(), t.cells().len());
            let cut = restrict(&t, top, order.residues.len(), true).unwrap();
            assert!(t.cells().len() - cut.cells().len() >= 1);
        }
    }

    #[test]
    fn classify_tau_example() {
        // The worked 4-tableau of weight (2,1,4,2,3).
        let t = KTableau::new(
            4,
            p(&[9, 5, 2, 2, 1]),
            Partition::empty(),
            vec![
                vec![1, 1, 3, 3, 3, 3, 5, 5, 5],
                vec![2, 3, 5, 5, 5],
                vec![3, 4],
                vec![4, 5],
                vec![5],
            ],
            TableauMode::ColumnStrict,
        )
        .unwrap();
        assert!(t.is_valid(&w(&[2, 1, 4, 2, 3])));
        let cls = classify(&t, 4).unwrap();
        assert_eq!(cls.entry_class(Cell::new(4, 1)), Some(EntryClass::Married));
        assert_eq!(cls.entry_class(Cell::new(3, 2)), Some(EntryClass::Married));
        assert_eq!(cls.entry_class(Cell::new(4, 2)), Some(EntryClass::Married));
        assert_eq!(cls.entry_class(Cell::new(5, 1)), Some(EntryClass::Married));
        // Row 1: 5s at residues 1,2,3; residues 1 and 3 divorced, 2 single.
        assert_eq!(cls.entry_class(Cell::new(1, 7)), Some(EntryClass::Divorced));
        assert_eq!(cls.entry_class(Cell::new(1, 8)), Some(EntryClass::Single));
        assert_eq!(cls.entry_class(Cell::new(1, 9)), Some(EntryClass::Divorced));
        assert_eq!(cls.ures_ab(1), BTreeSet::from([1, 2, 3]));
        assert_eq!(cls.ures_ab(2), BTreeSet::from([1, 2, 3]));
        assert!(cls.ures_ab(3).is_empty());
        assert!(cls.ures_ab(4).is_empty());
        assert!(cls.ures_ab(5).is_empty());

        let fr = fundamental_rows(&t, 4).unwrap();
        assert_eq!(fr.rows, vec![1]);
        assert_eq!(fr.classes, vec![vec![1, 2]]);
    }

    #[test]
    fn classify_without_partner_letter() {
        let t = KTableau::new(
            2,
            p(&[3, 1]),
            Partition::empty(),
            vec![vec![1, 2, 3], vec![3]],
            TableauMode::ColumnStrict,
        )
        .unwrap();
        // No letter 2 shares a column with a 1: the single 1 is single.
        let cls = classify(&t, 1).unwrap();
        assert_eq!(cls.entry_class(Cell::new(1, 1)), Some(EntryClass::Single));
        let fr = fundamental_rows(&t, 1).unwrap();
        assert_eq!(fr.rows, vec![1]);
    }

    #[test]
    fn chains_examples() {
        let chains = enumerate_chains(2, &p(&[2, 1]), &w(&[1, 1, 1]));
        assert_eq!(chains.len(), 1);
        assert_eq!(
            chains[0].shapes,
            vec![Partition::empty(), p(&[1]), p(&[2]), p(&[2, 1])]
        );
        let chains = enumerate_chains(2, &p(&[2]), &w(&[2]));
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].shapes, vec![Partition::empty(), p(&[2])]);
    }

    #[test]
    fn ssyt_matches_large_k_enumeration() {
        for n in 0..=5usize {
            for shape in crate::shapes::partitions_of(n) {
                let k = shape.main_hook().max(1);
                for weight in crate::shapes::partitions_of(n) {
                    let alpha = Composition::from(&weight);
                    let classical = ssyt_count(&shape, &Partition::empty(), &alpha).unwrap();
                    let via_k = k_kostka(k, &shape, &alpha).unwrap();
                    assert_eq!(classical, via_k, "shape {shape} weight {weight}");
                }
            }
        }
    }

    #[test]
    fn tableau_json_round_trip() {
        let t = golden_tableau();
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.starts_with("{\"k\":3,\"outer\":[8,5,2,1],\"inner\":[],\"rows\":"));
        let raw: RawTableau = serde_json::from_str(&json).unwrap();
        let back = raw.into_tableau(TableauMode::ColumnStrict).unwrap();
        assert_eq!(back, t);
    }
}
