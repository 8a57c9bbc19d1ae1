//! Partitions, cells, skew shapes, hooks, residues, and the bijection
//! between k-bounded partitions and (k+1)-cores.
//!
//! Conventions, fixed once for the whole crate:
//! - French notation: row 1 is the bottom row, rows grow upward.
//! - Cells are 1-based `(row, col)`; row 0 / col 0 mark virtual squares
//!   outside the diagram.
//! - The p-residue of square `(i, j)` is `(j - i) mod p`, taken in `0..p`.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};

/// A partition: weakly decreasing sequence of positive integers.
///
/// Also used for (k+1)-cores and for the inner/outer shapes of skew
/// diagrams. The empty partition is `Partition::default()`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validating constructor; rejects zero parts and increasing runs.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for i in 0..parts.len() {
            if parts[i] == 0 || (i + 1 < parts.len() && parts[i] < parts[i + 1]) {
                return Err(Error::InvalidPartition);
            }
        }
        Ok(Partition { parts })
    }

    /// Constructor for internally produced part lists; panics on invalid input.
    pub fn from_parts(parts: Vec<usize>) -> Self {
        Partition::new(parts).expect("parts must be weakly decreasing and positive")
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Length of `row` (1-based); 0 above the top row.
    pub fn row_len(&self, row: usize) -> usize {
        if row >= 1 && row <= self.parts.len() {
            self.parts[row - 1]
        } else {
            0
        }
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.is_cell() && c.col <= self.row_len(c.row)
    }

    /// Componentwise containment: `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= self.row_len(i + 1))
    }

    pub fn is_bounded_by(&self, k: usize) -> bool {
        self.parts.first().is_none_or(|&p| p <= k)
    }

    /// The conjugate partition: column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: true iff degrees agree and every partial sum of
    /// `self` is at least the corresponding partial sum of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let n = self.parts.len().max(other.parts.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=n {
            a += self.row_len(i);
            b += other.row_len(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiset union of parts, sorted weakly decreasing.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().chain(other.parts.iter()).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Hook-length of cell (1,1), with `h(∅) = 0`.
    pub fn main_hook(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.parts[0] + self.parts.len() - 1
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PartitionVisitor;
        impl<'de> Visitor<'de> for PartitionVisitor {
            type Value = Partition;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of weakly decreasing positive integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Partition, A::Error> {
                let mut parts = Vec::new();
                while let Some(p) = seq.next_element::<usize>()? {
                    parts.push(p);
                }
                Partition::new(parts).map_err(de::Error::custom)
            }
        }
        deserializer.deserialize_seq(PartitionVisitor)
    }
}

/// A lattice square in French notation. `row == 0` or `col == 0` marks a
/// virtual square outside the first quadrant; such squares are not cells.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "(usize, usize)", from = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn is_cell(&self) -> bool {
        self.row >= 1 && self.col >= 1
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The p-residue of a square: `(col - row) mod modulus`, non-negative.
pub fn residue(c: Cell, modulus: usize) -> usize {
    debug_assert!(modulus >= 2);
    (c.col as i64 - c.row as i64).rem_euclid(modulus as i64) as usize
}

/// A skew shape `outer/inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(precondition(format!(
                "inner {inner} not contained in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.is_cell() && c.col > self.inner.row_len(c.row) && c.col <= self.outer.row_len(c.row)
    }

    pub fn num_cells(&self) -> usize {
        self.outer.degree() - self.inner.degree()
    }

    /// Cells in row-major order, bottom row first, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.num_cells());
        for row in 1..=self.outer.len() {
            for col in self.inner.row_len(row) + 1..=self.outer.row_len(row) {
                out.push(Cell::new(row, col));
            }
        }
        out
    }

    /// Hook-length of square `s`: the number of skew cells inside the L
    /// with corner `s` (arm to the right, leg above, `s` itself when it
    /// is a cell of the skew diagram). `s` may lie below the diagram,
    /// inside `inner`, but must lie in `outer`.
    pub fn hook_length(&self, s: Cell) -> Result<usize> {
        if !self.outer.contains_cell(s) {
            return Err(Error::CellNotInShape);
        }
        let arm_start = s.col.max(self.inner.row_len(s.row) + 1);
        let row_end = self.outer.row_len(s.row);
        let arm = (row_end + 1).saturating_sub(arm_start);
        // The skew cells of a column form an interval, but it may start
        // above s when s lies below the diagram; scan the whole column.
        let mut leg = 0;
        for r in s.row + 1..=self.outer.len() {
            if self.contains_cell(Cell::new(r, s.col)) {
                leg += 1;
            }
        }
        Ok(arm + leg)
    }
}

/// True iff no cell of `p` has hook-length exactly `modulus`.
pub fn is_p_core(p: &Partition, modulus: usize) -> bool {
    debug_assert!(modulus >= 2);
    let conj = p.conjugate();
    for (i, &len) in p.parts().iter().enumerate() {
        for j in 1..=len {
            // Hook of (i+1, j): arm right, leg up, the cell itself.
            if len - j + conj.row_len(j) - i == modulus {
                return false;
            }
        }
    }
    true
}

/// Removable and addable corners of a partition.
///
/// Removable: cells `(i,j)` with neither `(i,j+1)` nor `(i+1,j)` in the
/// diagram. Addable: squares `(i,j)` outside the diagram whose left and
/// lower neighbours are cells, together with `(len+1, 1)` and `(1, p_1+1)`.
pub fn corners(p: &Partition) -> (Vec<Cell>, Vec<Cell>) {
    let mut removable = Vec::new();
    let mut addable = Vec::new();
    for row in 1..=p.len() {
        let len = p.row_len(row);
        if p.row_len(row + 1) < len {
            removable.push(Cell::new(row, len));
        }
    }
    for row in 2..=p.len() {
        let j = p.row_len(row) + 1;
        if j >= 2 && p.row_len(row - 1) >= j {
            addable.push(Cell::new(row, j));
        }
    }
    addable.push(Cell::new(p.len() + 1, 1));
    let top_right = Cell::new(1, p.row_len(1) + 1);
    if !addable.contains(&top_right) {
        addable.push(top_right);
    }
    addable.sort();
    (removable, addable)
}

/// The k-skew diagram of a k-bounded partition: row i has length `p_i`,
/// no cell has hook-length above k, and every square below the diagram
/// has hook-length above k.
///
/// Rows are placed from the smallest part down to `p_1`: each new bottom
/// row goes at the least offset that keeps offsets weakly increasing
/// downward and all hooks bounded by k. The result is checked against
/// all three defining conditions before being returned.
pub fn k_skew(p: &Partition, k: usize) -> Result<SkewShape> {
    assert!(k >= 1, "k must be at least 1");
    if !p.is_bounded_by(k) {
        return Err(Error::PartExceedsK);
    }
    let m = p.len();
    // offsets[i] is the inner length for the row of length p.parts[i];
    // built top-down, so offsets is filled from index m-1 back to 0.
    let mut offsets = vec![0usize; m];
    // Rows placed so far, bottom-up as (offset, length), for hook checks.
    let mut placed: Vec<(usize, usize)> = Vec::with_capacity(m);
    for idx in (0..m).rev() {
        let len = p.parts[idx];
        let min_offset = placed.last().map_or(0, |&(o, _)| o);
        let mut offset = min_offset;
        loop {
            if new_row_hooks_ok(&placed, offset, len, k) {
                break;
            }
            offset += 1;
        }
        offsets[idx] = offset;
        placed.push((offset, len));
    }
    let outer = Partition::new(
        (0..m).map(|i| offsets[i] + p.parts[i]).collect(),
    )
    .map_err(|_| crate::error::invariant("k-skew rows do not stack into a partition"))?;
    let inner = Partition::new(offsets.iter().copied().filter(|&o| o > 0).collect())
        .map_err(|_| crate::error::invariant("k-skew offsets are not weakly decreasing"))?;
    let shape = SkewShape::new(outer, inner)?;
    verify_k_skew(&shape, p, k)?;
    Ok(shape)
}

/// Hooks of the new bottom row only; rows above are unaffected because
/// hooks reach right and up.
fn new_row_hooks_ok(placed: &[(usize, usize)], offset: usize, len: usize, k: usize) -> bool {
    for j in 1..=len {
        let col = offset + j;
        let arm = len - j;
        let mut leg = 0;
        // placed[t] is the row t+2 candidate position, bottom-up above the new row
        for &(o, l) in placed.iter().rev() {
            if col > o && col <= o + l {
                leg += 1;
            } else {
                break;
            }
        }
        if arm + leg + 1 > k {
            return false;
        }
    }
    true
}

fn verify_k_skew(shape: &SkewShape, p: &Partition, k: usize) -> Result<()> {
    for row in 1..=p.len() {
        let have = shape.outer().row_len(row) - shape.inner().row_len(row);
        if have != p.row_len(row) {
            return Err(crate::error::invariant(format!(
                "k-skew row {row} has length {have}, expected {}",
                p.row_len(row)
            )));
        }
    }
    // Bulk hook computation: arm from the row lengths, leg from the two
    // conjugates. Equivalent to hook_length cell by cell, but one pass.
    let outer_conj = shape.outer().conjugate();
    let inner_conj = shape.inner().conjugate();
    let hook = |row: usize, col: usize| -> usize {
        let arm_start = col.max(shape.inner().row_len(row) + 1);
        let arm = (shape.outer().row_len(row) + 1).saturating_sub(arm_start);
        let above_outer = outer_conj.row_len(col).saturating_sub(row);
        let above_inner = inner_conj.row_len(col).saturating_sub(row);
        arm + above_outer - above_inner
    };
    for row in 1..=shape.outer().len() {
        for col in 1..=shape.outer().row_len(row) {
            let h = hook(row, col);
            let below = col <= shape.inner().row_len(row);
            if below && h <= k {
                return Err(crate::error::invariant(format!(
                    "square ({row},{col}) below the k-skew has hook at most {k}"
                )));
            }
            if !below && h > k {
                return Err(crate::error::invariant(format!(
                    "k-skew cell ({row},{col}) has hook above {k}"
                )));
            }
        }
    }
    Ok(())
}

/// The map from k-bounded partitions to (k+1)-cores: the outer shape of
/// the k-skew diagram.
pub fn core_of(p: &Partition, k: usize) -> Result<Partition> {
    let shape = k_skew(p, k)?;
    let core = shape.outer().clone();
    debug_assert!(is_p_core(&core, k + 1), "outer shape of k-skew must be a core");
    Ok(core)
}

/// The inverse map: row i of the result counts the cells of row i of the
/// core whose hook-length is at most k.
pub fn kbounded_of(core: &Partition, k: usize) -> Result<Partition> {
    if !is_p_core(core, k + 1) {
        return Err(Error::NotACore);
    }
    let shape = SkewShape::new(core.clone(), Partition::empty())?;
    let mut parts = Vec::with_capacity(core.len());
    for row in 1..=core.len() {
        let mut count = 0;
        for col in 1..=core.row_len(row) {
            if shape.hook_length(Cell::new(row, col))? <= k {
                count += 1;
            }
        }
        parts.push(count);
    }
    Partition::new(parts).map_err(|_| {
        crate::error::invariant("k-bounded hook counts are not weakly decreasing")
    })
}

/// k-conjugation: conjugate the core and map back.
pub fn k_conjugate(p: &Partition, k: usize) -> Result<Partition> {
    kbounded_of(&core_of(p, k)?.conjugate(), k)
}

/// Classification of a skew difference as a strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StripType {
    /// At most one cell per column (and some row has two or more cells).
    Horizontal,
    /// At most one cell per row (and some column has two or more cells).
    Vertical,
    /// At most one cell per row and per column; includes the empty strip.
    Both,
    Neither,
    NotContained,
}

pub fn strip_type(outer: &Partition, inner: &Partition) -> StripType {
    if !outer.contains(inner) {
        return StripType::NotContained;
    }
    // Horizontal: no column gains two cells, i.e. outer_{i+1} <= inner_i.
    let horizontal = (1..=outer.len())
        .all(|row| row == 1 || outer.row_len(row) <= inner.row_len(row - 1));
    // Vertical: no row gains two cells.
    let vertical = (1..=outer.len()).all(|row| outer.row_len(row) <= inner.row_len(row) + 1);
    match (horizontal, vertical) {
        (true, true) => StripType::Both,
        (true, false) => StripType::Horizontal,
        (false, true) => StripType::Vertical,
        (false, false) => StripType::Neither,
    }
}

/// `outer/inner` is a horizontal strip with exactly `l` cells.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition, l: usize) -> bool {
    matches!(strip_type(outer, inner), StripType::Horizontal | StripType::Both)
        && outer.degree() == inner.degree() + l
}

/// `outer/inner` is a vertical strip with exactly `l` cells.
pub fn is_vertical_strip(outer: &Partition, inner: &Partition, l: usize) -> bool {
    matches!(strip_type(outer, inner), StripType::Vertical | StripType::Both)
        && outer.degree() == inner.degree() + l
}

/// The pair (mu, nu) is l-admissible: `mu/nu` is a horizontal l-strip and
/// the k-conjugates differ by a vertical l-strip.
///
/// Both arguments must be k-bounded.
pub fn is_l_admissible(mu: &Partition, nu: &Partition, l: usize, k: usize) -> bool {
    if !is_horizontal_strip(mu, nu, l) {
        return false;
    }
    let mu_c = k_conjugate(mu, k).expect("mu must be k-bounded");
    let nu_c = k_conjugate(nu, k).expect("nu must be k-bounded");
    is_vertical_strip(&mu_c, &nu_c, l)
}

/// All k-bounded `mu` with (mu, nu) l-admissible: the h-Pieri successor set.
pub fn h_pieri_candidates(k: usize, nu: &Partition, l: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let rows = nu.len() + 1;
    let mut current = Vec::with_capacity(rows);
    gen_horizontal(k, nu, l, 1, rows, &mut current, &mut out);
    out.retain(|mu| is_l_admissible(mu, nu, l, k));
    out.sort();
    out
}

fn gen_horizontal(
    k: usize,
    nu: &Partition,
    remaining: usize,
    row: usize,
    rows: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row > rows {
        if remaining == 0 {
            let parts: Vec<usize> = current.iter().copied().filter(|&p| p > 0).collect();
            out.push(Partition::from_parts(parts));
        }
        return;
    }
    let lo = nu.row_len(row);
    // Horizontal strip: the new row may not reach past the previous row of nu.
    let hi_strip = if row == 1 { k } else { nu.row_len(row - 1) };
    let hi_shape = if row == 1 { k } else { current[row - 2] };
    let hi = hi_strip.min(hi_shape).min(lo + remaining);
    for v in lo..=hi {
        current.push(v);
        gen_horizontal(k, nu, remaining - (v - lo), row + 1, rows, current, out);
        current.pop();
    }
}

/// All k-bounded `mu` whose pair with `nu` is l-admissible after
/// k-conjugation: the e-Pieri successor set (vertical strip on this side).
pub fn e_pieri_candidates(k: usize, nu: &Partition, l: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let rows = nu.len() + l;
    let mut current = Vec::with_capacity(rows);
    gen_vertical(k, nu, l, 1, rows, &mut current, &mut out);
    out.retain(|mu| {
        if !is_vertical_strip(mu, nu, l) {
            return false;
        }
        let mu_c = k_conjugate(mu, k).expect("mu is k-bounded");
        let nu_c = k_conjugate(nu, k).expect("nu is k-bounded");
        is_horizontal_strip(&mu_c, &nu_c, l)
    });
    out.sort();
    out
}

fn gen_vertical(
    k: usize,
    nu: &Partition,
    remaining: usize,
    row: usize,
    rows: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row > rows {
        if remaining == 0 {
            let parts: Vec<usize> = current.iter().copied().filter(|&p| p > 0).collect();
            out.push(Partition::from_parts(parts));
        }
        return;
    }
    let lo = nu.row_len(row);
    let hi_shape = if row == 1 { k } else { current[row - 2] };
    let hi = (lo + 1).min(hi_shape).min(lo + remaining);
    for v in lo..=hi {
        current.push(v);
        gen_vertical(k, nu, remaining - (v - lo), row + 1, rows, current, out);
        current.pop();
    }
}

/// All partitions obtained from `p` by adding a horizontal `l`-strip,
/// with no bound on the parts.
pub fn horizontal_strip_additions(p: &Partition, l: usize) -> Vec<Partition> {
    fn rec(
        p: &Partition,
        remaining: usize,
        row: usize,
        rows: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > rows {
            if remaining == 0 {
                let parts: Vec<usize> = current.iter().copied().filter(|&v| v > 0).collect();
                out.push(Partition::from_parts(parts));
            }
            return;
        }
        let lo = p.row_len(row);
        let cap_strip = if row == 1 { lo + remaining } else { p.row_len(row - 1) };
        let cap_shape = if row == 1 { lo + remaining } else { current[row - 2] };
        let hi = cap_strip.min(cap_shape).min(lo + remaining);
        for v in lo..=hi {
            current.push(v);
            rec(p, remaining - (v - lo), row + 1, rows, current, out);
            current.pop();
        }
    }
    let rows = p.len() + 1;
    let mut out = Vec::new();
    rec(p, l, 1, rows, &mut Vec::with_capacity(rows), &mut out);
    out.sort();
    out
}

/// All partitions obtained from `p` by adding a vertical `l`-strip.
pub fn vertical_strip_additions(p: &Partition, l: usize) -> Vec<Partition> {
    fn rec(
        p: &Partition,
        remaining: usize,
        row: usize,
        rows: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > rows {
            if remaining == 0 {
                let parts: Vec<usize> = current.iter().copied().filter(|&v| v > 0).collect();
                out.push(Partition::from_parts(parts));
            }
            return;
        }
        let lo = p.row_len(row);
        let cap_shape = if row == 1 { lo + 1 } else { current[row - 2] };
        let hi = (lo + 1).min(cap_shape).min(lo + remaining);
        for v in lo..=hi {
            current.push(v);
            rec(p, remaining - (v - lo), row + 1, rows, current, out);
            current.pop();
        }
    }
    let rows = p.len() + l;
    let mut out = Vec::new();
    rec(p, l, 1, rows, &mut Vec::with_capacity(rows), &mut out);
    out.sort();
    out
}

/// A weight vector: non-negative integers, zeros allowed (a letter that
/// occupies zero residues is absent).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Component for 1-based letter index; 0 beyond the end.
    pub fn get(&self, letter: usize) -> usize {
        if letter >= 1 && letter <= self.parts.len() {
            self.parts[letter - 1]
        } else {
            0
        }
    }

    /// Swap components `a` and `a+1` (1-based).
    pub fn swap_adjacent(&self, a: usize) -> Composition {
        let mut parts = self.parts.clone();
        parts.swap(a - 1, a);
        Composition { parts }
    }

    /// The weakly decreasing rearrangement, dropping zeros.
    pub fn sorted(&self) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_parts(parts)
    }

    /// Equality up to trailing zeros.
    pub fn same_weight(&self, other: &Composition) -> bool {
        let n = self.parts.len().max(other.parts.len());
        (1..=n).all(|i| self.get(i) == other.get(i))
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition::new(p.parts().to_vec())
    }
}

/// All partitions of `n`, reverse-lexicographic, largest first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    bounded_partitions_of(n, n)
}

/// All partitions of `n` with parts at most `max_part`, reverse-lexicographic.
pub fn bounded_partitions_of(n: usize, max_part: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_parts(current.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            current.push(p);
            rec(n - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` into positive parts.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(n: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition::new(current.clone()));
            return;
        }
        for p in 1..=n {
            current.push(p);
            rec(n - p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Order partitions reverse-lexicographically, largest first; a linear
/// extension of dominance used for matrix indexing.
pub fn rev_lex_cmp(a: &Partition, b: &Partition) -> Ordering {
    b.parts().cmp(a.parts())
}
