//! Integer symmetric-function arithmetic over the h, e, Schur and
//! k-Schur bases.
//!
//! The k-Schur functions are defined by inverting the unitriangular
//! system expressing each `h` indexed by a k-bounded partition in the
//! k-Schur basis with k-Kostka coefficients. Everything here is exact
//! 64-bit integer arithmetic: matrix inversion is back-substitution, and
//! overflow is an error.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{add_i64, invariant, mul_i64, precondition, Error, Result};
use crate::shapes::{
    bounded_partitions_of, e_pieri_candidates, h_pieri_candidates, horizontal_strip_additions,
    k_conjugate, rev_lex_cmp, vertical_strip_additions, Composition, Partition,
};
use crate::tableaux::k_kostka;

/// The supported bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    H,
    E,
    Schur,
    KSchur(usize),
}

impl Basis {
    pub fn name(&self) -> String {
        match self {
            Basis::H => "h".to_string(),
            Basis::E => "e".to_string(),
            Basis::Schur => "schur".to_string(),
            Basis::KSchur(k) => format!("kschur({k})"),
        }
    }
}

/// A homogeneous integer linear combination of basis elements indexed by
/// partitions. Zero coefficients are never stored; k-Schur indices must
/// be k-bounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Partition, i64>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc { basis, degree, terms: BTreeMap::new() }
    }

    /// A single basis element with coefficient 1.
    pub fn single(basis: Basis, index: Partition) -> Result<Self> {
        let mut f = SymFunc::zero(basis, index.degree());
        f.add_term(index, 1)?;
        Ok(f)
    }

    pub fn kschur(k: usize, index: Partition) -> Result<Self> {
        SymFunc::single(Basis::KSchur(k), index)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn coeff(&self, index: &Partition) -> i64 {
        self.terms.get(index).copied().unwrap_or(0)
    }

    /// Terms ordered reverse-lexicographically, largest index first.
    pub fn sorted_terms(&self) -> Vec<(Partition, i64)> {
        let mut out: Vec<(Partition, i64)> =
            self.terms.iter().map(|(p, &c)| (p.clone(), c)).collect();
        out.sort_by(|(a, _), (b, _)| rev_lex_cmp(a, b));
        out
    }

    pub fn add_term(&mut self, index: Partition, coeff: i64) -> Result<()> {
        if index.degree() != self.degree {
            return Err(precondition(format!(
                "index {index} has degree {}, expected {}",
                index.degree(),
                self.degree
            )));
        }
        if let Basis::KSchur(k) = self.basis {
            if !index.is_bounded_by(k) {
                return Err(Error::PartExceedsK);
            }
        }
        let slot = self.terms.entry(index.clone()).or_insert(0);
        *slot = add_i64(*slot, coeff)?;
        if *slot == 0 {
            self.terms.remove(&index);
        }
        Ok(())
    }

    /// `self += factor * other`, requiring matching basis and degree.
    pub fn add_scaled(&mut self, other: &SymFunc, factor: i64) -> Result<()> {
        if self.basis != other.basis || self.degree != other.degree {
            return Err(precondition("basis or degree mismatch in addition".to_string()));
        }
        for (index, &coeff) in &other.terms {
            self.add_term(index.clone(), mul_i64(coeff, factor)?)?;
        }
        Ok(())
    }
}

/// The matrix of k-Kostka numbers over the k-bounded partitions of one
/// degree, indexed reverse-lexicographically (largest first, a linear
/// extension of dominance). Row = shape, column = weight; the matrix is
/// upper unitriangular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostkaMatrix {
    k: usize,
    degree: usize,
    index: Vec<Partition>,
    entries: Vec<Vec<i64>>,
}

impl KostkaMatrix {
    fn build(k: usize, degree: usize) -> Result<Self> {
        let index = matrix_index(k, degree);
        let n = index.len();
        let mut entries = vec![vec![0i64; n]; n];
        for (j, weight) in index.iter().enumerate() {
            let counts = kostka_column(k, weight, &index)?;
            for i in 0..n {
                entries[i][j] = counts[i];
            }
        }
        let m = KostkaMatrix { k, degree, index, entries };
        m.check_unitriangular()?;
        Ok(m)
    }

    fn check_unitriangular(&self) -> Result<()> {
        for i in 0..self.index.len() {
            if self.entries[i][i] != 1 {
                return Err(invariant(format!(
                    "diagonal entry at {} is {}",
                    self.index[i], self.entries[i][i]
                )));
            }
            for j in 0..self.index.len() {
                if self.entries[i][j] != 0 && !self.index[i].dominates(&self.index[j]) {
                    return Err(invariant(format!(
                        "nonzero entry at non-dominating pair ({}, {})",
                        self.index[i], self.index[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn index(&self) -> &[Partition] {
        &self.index
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.index.iter().position(|q| q == p)
    }

    /// `K[shape][weight]`, zero when either index is absent.
    pub fn entry(&self, shape: &Partition, weight: &Partition) -> i64 {
        match (self.position(shape), self.position(weight)) {
            (Some(i), Some(j)) => self.entries[i][j],
            _ => 0,
        }
    }

    /// Exact integer inverse by back-substitution; the product with the
    /// original is verified to be the identity.
    #[allow(clippy::needless_range_loop)]
    pub fn inverse(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.index.len();
        let mut inv = vec![vec![0i64; n]; n];
        for j in 0..n {
            inv[j][j] = 1;
            for i in (0..j).rev() {
                let mut sum = 0i64;
                for t in i + 1..=j {
                    sum = add_i64(sum, mul_i64(self.entries[i][t], inv[t][j])?)?;
                }
                inv[i][j] = -sum;
            }
        }
        for i in 0..n {
            for j in 0..n {
                let mut sum = 0i64;
                for t in 0..n {
                    sum = add_i64(sum, mul_i64(self.entries[i][t], inv[t][j])?)?;
                }
                let want = i64::from(i == j);
                if sum != want {
                    return Err(invariant("inverse check failed".to_string()));
                }
            }
        }
        Ok(inv)
    }
}

fn matrix_index(k: usize, degree: usize) -> Vec<Partition> {
    let mut index = bounded_partitions_of(degree, k);
    index.sort_by(rev_lex_cmp);
    index
}

fn kostka_column(k: usize, weight: &Partition, index: &[Partition]) -> Result<Vec<i64>> {
    let alpha = Composition::from(weight);
    index.iter().map(|shape| k_kostka(k, shape, &alpha)).collect()
}

/// On-disk form of a Kostka matrix.
#[derive(Debug, Serialize, Deserialize)]
pub struct KostkaFile {
    pub version: u32,
    pub k: usize,
    pub degree: usize,
    pub order: Vec<Partition>,
    #[serde(rename = "K")]
    pub matrix: Vec<Vec<i64>>,
}

impl From<&KostkaMatrix> for KostkaFile {
    fn from(m: &KostkaMatrix) -> Self {
        KostkaFile {
            version: 1,
            k: m.k,
            degree: m.degree,
            order: m.index.clone(),
            matrix: m.entries.clone(),
        }
    }
}

fn cache_file_name(k: usize, degree: usize) -> String {
    format!("kostka-k{k}-d{degree}.json")
}

fn load_cached(dir: &Path, k: usize, degree: usize) -> Option<KostkaMatrix> {
    let text = std::fs::read_to_string(dir.join(cache_file_name(k, degree))).ok()?;
    let file: KostkaFile = serde_json::from_str(&text).ok()?;
    if file.version != 1 || file.k != k || file.degree != degree {
        return None;
    }
    if file.order != matrix_index(k, degree) {
        return None;
    }
    let n = file.order.len();
    if file.matrix.len() != n || file.matrix.iter().any(|row| row.len() != n) {
        return None;
    }
    let m = KostkaMatrix { k, degree, index: file.order, entries: file.matrix };
    m.check_unitriangular().ok()?;
    Some(m)
}

fn store_cached(dir: &Path, m: &KostkaMatrix) {
    // Best effort: a cache miss next time just recomputes.
    if std::fs::create_dir_all(dir).is_err() {
        return;
    }
    if let Ok(text) = serde_json::to_string(&KostkaFile::from(m)) {
        let _ = std::fs::write(dir.join(cache_file_name(m.k, m.degree)), text);
    }
}

type MatrixCache = Mutex<HashMap<(usize, usize), Arc<KostkaMatrix>>>;

fn memory_cache() -> &'static MatrixCache {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cache_dir_slot() -> &'static Mutex<Option<PathBuf>> {
    static DIR: OnceLock<Mutex<Option<PathBuf>>> = OnceLock::new();
    DIR.get_or_init(|| Mutex::new(None))
}

/// Direct the process-wide matrix cache at a directory (None disables
/// the on-disk layer). The in-memory layer is always active.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *cache_dir_slot().lock().unwrap() = dir;
}

/// The k-Kostka matrix for one degree, built once per process and shared.
/// Holding the lock while building serializes concurrent callers; a
/// finished matrix is immutable.
pub fn kostka_matrix(k: usize, degree: usize) -> Result<Arc<KostkaMatrix>> {
    assert!(k >= 1, "k must be at least 1");
    let mut cache = memory_cache().lock().unwrap();
    if let Some(m) = cache.get(&(k, degree)) {
        return Ok(Arc::clone(m));
    }
    let dir = cache_dir_slot().lock().unwrap().clone();
    let built = match dir.as_deref().and_then(|d| load_cached(d, k, degree)) {
        Some(m) => m,
        None => {
            let m = KostkaMatrix::build(k, degree)?;
            if let Some(d) = dir.as_deref() {
                store_cached(d, &m);
            }
            m
        }
    };
    let arc = Arc::new(built);
    cache.insert((k, degree), Arc::clone(&arc));
    Ok(arc)
}

/// Exact integer inverse of the k-Kostka matrix of one degree.
pub fn kschur_to_h_inverse(k: usize, degree: usize) -> Result<Vec<Vec<i64>>> {
    kostka_matrix(k, degree)?.inverse()
}

/// Expand `f` in the Schur basis.
///
/// Homogeneous functions go through the classical Kostka matrix, which is
/// the k-Kostka matrix at k = degree; elementary functions go through the
/// omega image; k-Schur terms are first rewritten in the h basis with the
/// inverse k-Kostka matrix.
pub fn to_schur(f: &SymFunc) -> Result<SymFunc> {
    match f.basis() {
        Basis::Schur => Ok(f.clone()),
        Basis::H => {
            let n = f.degree();
            let mut out = SymFunc::zero(Basis::Schur, n);
            if n == 0 {
                if !f.is_zero() {
                    out.add_term(Partition::empty(), f.coeff(&Partition::empty()))?;
                }
                return Ok(out);
            }
            let classical = kostka_matrix(n, n)?;
            for (mu, &c) in f.terms() {
                let j = classical
                    .position(mu)
                    .ok_or_else(|| invariant(format!("{mu} missing from the classical index")))?;
                for (i, lambda) in classical.index().iter().enumerate() {
                    let k_entry = classical.entries()[i][j];
                    if k_entry != 0 {
                        out.add_term(lambda.clone(), mul_i64(c, k_entry)?)?;
                    }
                }
            }
            Ok(out)
        }
        Basis::E => {
            let mut h_version = SymFunc::zero(Basis::H, f.degree());
            for (mu, &c) in f.terms() {
                h_version.add_term(mu.clone(), c)?;
            }
            Ok(omega(&to_schur(&h_version)?))
        }
        Basis::KSchur(k) => {
            let n = f.degree();
            let mut h_version = SymFunc::zero(Basis::H, n);
            if n == 0 {
                let mut out = SymFunc::zero(Basis::Schur, 0);
                if !f.is_zero() {
                    out.add_term(Partition::empty(), f.coeff(&Partition::empty()))?;
                }
                return Ok(out);
            }
            let matrix = kostka_matrix(k, n)?;
            let inverse = matrix.inverse()?;
            for (lambda, &c) in f.terms() {
                let j = matrix
                    .position(lambda)
                    .ok_or(Error::PartExceedsK)?;
                for (i, mu) in matrix.index().iter().enumerate() {
                    if inverse[i][j] != 0 {
                        h_version.add_term(mu.clone(), mul_i64(c, inverse[i][j])?)?;
                    }
                }
            }
            to_schur(&h_version)
        }
    }
}

/// The h-Pieri successor set: partitions adding a horizontal l-strip to
/// `nu` whose k-conjugates add a vertical l-strip.
pub fn h_pieri_set(k: usize, nu: &Partition, l: usize) -> Result<Vec<Partition>> {
    if l > k {
        return Err(Error::PieriDegreeExceedsK);
    }
    if !nu.is_bounded_by(k) {
        return Err(Error::PartExceedsK);
    }
    Ok(h_pieri_candidates(k, nu, l))
}

/// The e-Pieri successor set: vertical strip here, horizontal after
/// k-conjugation.
pub fn e_pieri_set(k: usize, nu: &Partition, l: usize) -> Result<Vec<Partition>> {
    if l > k {
        return Err(Error::PieriDegreeExceedsK);
    }
    if !nu.is_bounded_by(k) {
        return Err(Error::PartExceedsK);
    }
    Ok(e_pieri_candidates(k, nu, l))
}

fn pieri_multiply(
    k: usize,
    l: usize,
    f: &SymFunc,
    set: impl Fn(&Partition) -> Result<Vec<Partition>>,
) -> Result<SymFunc> {
    let Basis::KSchur(fk) = f.basis() else {
        return Err(precondition("Pieri products act on the k-Schur basis".to_string()));
    };
    if fk != k {
        return Err(precondition(format!("function has k={fk}, expected {k}")));
    }
    let mut out = SymFunc::zero(Basis::KSchur(k), f.degree() + l);
    for (nu, &c) in f.terms() {
        for mu in set(nu)? {
            out.add_term(mu, c)?;
        }
    }
    Ok(out)
}

/// `h_l * f` on the k-Schur basis through the h-Pieri rule.
pub fn multiply_h(k: usize, l: usize, f: &SymFunc) -> Result<SymFunc> {
    pieri_multiply(k, l, f, |nu| h_pieri_set(k, nu, l))
}

/// `e_l * f` on the k-Schur basis through the e-Pieri rule.
pub fn multiply_e(k: usize, l: usize, f: &SymFunc) -> Result<SymFunc> {
    pieri_multiply(k, l, f, |nu| e_pieri_set(k, nu, l))
}

/// The omega involution: swaps the h and e bases, conjugates Schur
/// indices, k-conjugates k-Schur indices.
pub fn omega(f: &SymFunc) -> SymFunc {
    type IndexMap = Box<dyn Fn(&Partition) -> Partition>;
    let (basis, map): (Basis, IndexMap) = match f.basis() {
        Basis::H => (Basis::E, Box::new(|p: &Partition| p.clone())),
        Basis::E => (Basis::H, Box::new(|p: &Partition| p.clone())),
        Basis::Schur => (Basis::Schur, Box::new(|p: &Partition| p.conjugate())),
        Basis::KSchur(k) => (
            Basis::KSchur(k),
            Box::new(move |p: &Partition| {
                k_conjugate(p, k).expect("k-Schur indices are k-bounded")
            }),
        ),
    };
    let mut out = SymFunc::zero(basis, f.degree());
    for (index, &c) in f.terms() {
        out.add_term(map(index), c).expect("reindexing preserves degree");
    }
    out
}

/// Multiply by the Schur function of the k-rectangle with rows of length
/// `width`: every k-Schur index gains the rectangle's parts.
pub fn rectangle_multiply(k: usize, width: usize, f: &SymFunc) -> Result<SymFunc> {
    if width == 0 || width > k {
        return Err(precondition(format!(
            "rectangle width {width} out of range for k={k}"
        )));
    }
    let Basis::KSchur(fk) = f.basis() else {
        return Err(precondition("rectangle products act on the k-Schur basis".to_string()));
    };
    if fk != k {
        return Err(precondition(format!("function has k={fk}, expected {k}")));
    }
    let rect = k_rectangle(k, width);
    let mut out = SymFunc::zero(Basis::KSchur(k), f.degree() + rect.degree());
    for (mu, &c) in f.terms() {
        out.add_term(mu.union(&rect), c)?;
    }
    Ok(out)
}

/// The k-rectangle with rows of length `width`: `(width^(k-width+1))`.
pub fn k_rectangle(k: usize, width: usize) -> Partition {
    Partition::from_parts(vec![width; k - width + 1])
}

/// Expand `h_lambda` in the k-Schur basis: the coefficients are the
/// k-Kostka numbers of weight `lambda`.
pub fn h_expand(k: usize, lambda: &Partition) -> Result<SymFunc> {
    if !lambda.is_bounded_by(k) {
        return Err(Error::PartExceedsK);
    }
    let n = lambda.degree();
    let mut out = SymFunc::zero(Basis::KSchur(k), n);
    if n == 0 {
        out.add_term(Partition::empty(), 1)?;
        return Ok(out);
    }
    let matrix = kostka_matrix(k, n)?;
    let j = matrix
        .position(lambda)
        .ok_or_else(|| invariant(format!("{lambda} missing from the matrix index")))?;
    for (i, nu) in matrix.index().iter().enumerate() {
        let c = matrix.entries()[i][j];
        if c != 0 {
            out.add_term(nu.clone(), c)?;
        }
    }
    Ok(out)
}

/// Classical Pieri rule on the Schur basis: add horizontal l-strips.
pub fn classical_h_pieri(l: usize, f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::Schur {
        return Err(precondition("classical Pieri acts on the Schur basis".to_string()));
    }
    let mut out = SymFunc::zero(Basis::Schur, f.degree() + l);
    for (mu, &c) in f.terms() {
        for lambda in horizontal_strip_additions(mu, l) {
            out.add_term(lambda, c)?;
        }
    }
    Ok(out)
}

/// Classical dual Pieri rule: add vertical l-strips.
pub fn classical_e_pieri(l: usize, f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::Schur {
        return Err(precondition("classical Pieri acts on the Schur basis".to_string()));
    }
    let mut out = SymFunc::zero(Basis::Schur, f.degree() + l);
    for (mu, &c) in f.terms() {
        for lambda in vertical_strip_additions(mu, l) {
            out.add_term(lambda, c)?;
        }
    }
    Ok(out)
}

/// `s_lambda` written in the h basis through the inverse classical
/// Kostka matrix.
pub fn schur_to_h(lambda: &Partition) -> Result<SymFunc> {
    let n = lambda.degree();
    let mut out = SymFunc::zero(Basis::H, n);
    if n == 0 {
        out.add_term(Partition::empty(), 1)?;
        return Ok(out);
    }
    let classical = kostka_matrix(n, n)?;
    let inverse = classical.inverse()?;
    let j = classical
        .position(lambda)
        .ok_or_else(|| invariant(format!("{lambda} missing from the classical index")))?;
    for (i, mu) in classical.index().iter().enumerate() {
        if inverse[i][j] != 0 {
            out.add_term(mu.clone(), inverse[i][j])?;
        }
    }
    Ok(out)
}

/// `s_lambda * f` on the Schur basis, computed by expanding `s_lambda`
/// in the h basis and iterating the classical Pieri rule. Keeps the
/// trusted base small: no Littlewood-Richardson rule in the loop.
pub fn schur_multiply(lambda: &Partition, f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::Schur {
        return Err(precondition("Schur products act on the Schur basis".to_string()));
    }
    let expansion = schur_to_h(lambda)?;
    let mut out = SymFunc::zero(Basis::Schur, f.degree() + lambda.degree());
    for (mu, &c) in expansion.terms() {
        let mut product = f.clone();
        for &part in mu.parts() {
            product = classical_h_pieri(part, &product)?;
        }
        out.add_scaled(&product, c)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::ssyt_count;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.to_vec())
    }

    #[test]
    fn kostka_matrix_degree_three() {
        let m = kostka_matrix(2, 3).unwrap();
        assert_eq!(m.index(), &[p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(m.entries(), &[vec![1, 1], vec![0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, vec![vec![1, -1], vec![0, 1]]);
    }

    #[test]
    fn kostka_matrix_k_one_is_trivial() {
        for n in 1..=6 {
            let m = kostka_matrix(1, n).unwrap();
            assert_eq!(m.index().len(), 1);
            assert_eq!(m.entries(), &[vec![1]]);
        }
    }

    #[test]
    fn kostka_matrix_degree_zero() {
        let m = kostka_matrix(3, 0).unwrap();
        assert_eq!(m.index(), &[Partition::empty()]);
        assert_eq!(m.inverse().unwrap(), vec![vec![1]]);
    }

    #[test]
    fn large_k_matrix_is_classical() {
        // At k >= degree the entries are classical Kostka numbers.
        for n in 1..=5 {
            let m = kostka_matrix(n, n).unwrap();
            for shape in m.index() {
                for weight in m.index() {
                    let classical = ssyt_count(
                        shape,
                        &Partition::empty(),
                        &Composition::from(weight),
                    )
                    .unwrap();
                    assert_eq!(m.entry(shape, weight), classical, "{shape} {weight}");
                }
            }
        }
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        for k in 1..=3 {
            for n in 0..=8 {
                let m = kostka_matrix(k, n).unwrap();
                m.inverse().unwrap();
            }
        }
    }

    #[test]
    fn to_schur_examples() {
        let f = to_schur(&SymFunc::kschur(2, p(&[2, 1])).unwrap()).unwrap();
        assert_eq!(f.coeff(&p(&[2, 1])), 1);
        assert_eq!(f.coeff(&p(&[3])), 1);
        assert_eq!(f.terms().len(), 2);

        let f = to_schur(&SymFunc::kschur(2, p(&[1, 1, 1])).unwrap()).unwrap();
        assert_eq!(f.coeff(&p(&[1, 1, 1])), 1);
        assert_eq!(f.coeff(&p(&[2, 1])), 1);
        assert_eq!(f.terms().len(), 2);
    }

    #[test]
    fn to_schur_fixes_small_hooks() {
        for k in 1..=4usize {
            for n in 0..=7 {
                for lambda in bounded_partitions_of(n, k) {
                    if lambda.main_hook() <= k {
                        let f = to_schur(&SymFunc::kschur(k, lambda.clone()).unwrap()).unwrap();
                        assert_eq!(f.terms().len(), 1, "{lambda} at k={k}");
                        assert_eq!(f.coeff(&lambda), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn h_expansion_oracle() {
        // h_2 h_1 and h_1^3 expanded by explicit tableau counts.
        let h21 = to_schur(&SymFunc::single(Basis::H, p(&[2, 1])).unwrap()).unwrap();
        assert_eq!(h21.coeff(&p(&[3])), 1);
        assert_eq!(h21.coeff(&p(&[2, 1])), 1);
        assert_eq!(h21.coeff(&p(&[1, 1, 1])), 0);
        let h111 = to_schur(&SymFunc::single(Basis::H, p(&[1, 1, 1])).unwrap()).unwrap();
        assert_eq!(h111.coeff(&p(&[3])), 1);
        assert_eq!(h111.coeff(&p(&[2, 1])), 2);
        assert_eq!(h111.coeff(&p(&[1, 1, 1])), 1);
    }

    #[test]
    fn pieri_set_examples() {
        assert_eq!(h_pieri_set(2, &p(&[1, 1]), 1).unwrap(), vec![p(&[1, 1, 1])]);
        assert_eq!(h_pieri_set(2, &p(&[2]), 1).unwrap(), vec![p(&[2, 1])]);
        assert_eq!(h_pieri_set(2, &p(&[2]), 0).unwrap(), vec![p(&[2])]);
        assert!(matches!(
            h_pieri_set(2, &p(&[2]), 3),
            Err(Error::PieriDegreeExceedsK)
        ));
    }

    #[test]
    fn multiply_h_examples() {
        let f = SymFunc::kschur(2, p(&[1, 1])).unwrap();
        let g = multiply_h(2, 1, &f).unwrap();
        assert_eq!(g.sorted_terms(), vec![(p(&[1, 1, 1]), 1)]);

        let one = SymFunc::kschur(2, Partition::empty()).unwrap();
        let g = multiply_h(2, 2, &one).unwrap();
        assert_eq!(g.sorted_terms(), vec![(p(&[2]), 1)]);
    }

    #[test]
    fn omega_examples() {
        let f = omega(&SymFunc::kschur(2, p(&[2, 1])).unwrap());
        assert_eq!(f.sorted_terms(), vec![(p(&[1, 1, 1]), 1)]);
        let f = omega(&SymFunc::single(Basis::Schur, p(&[3])).unwrap());
        assert_eq!(f.sorted_terms(), vec![(p(&[1, 1, 1]), 1)]);
        let f = omega(&SymFunc::single(Basis::H, p(&[2, 1])).unwrap());
        assert_eq!(f.basis(), Basis::E);
        assert_eq!(f.sorted_terms(), vec![(p(&[2, 1]), 1)]);
    }

    #[test]
    fn rectangle_examples() {
        let f = SymFunc::kschur(2, p(&[1])).unwrap();
        let g = rectangle_multiply(2, 2, &f).unwrap();
        assert_eq!(g.sorted_terms(), vec![(p(&[2, 1]), 1)]);

        let one = SymFunc::kschur(2, Partition::empty()).unwrap();
        let g = rectangle_multiply(2, 1, &one).unwrap();
        assert_eq!(g.sorted_terms(), vec![(p(&[1, 1]), 1)]);

        // Schur-side check: s_(2) * s_(1) = s_(3) + s_(21).
        let lhs = to_schur(&rectangle_multiply(2, 2, &SymFunc::kschur(2, p(&[1])).unwrap()).unwrap())
            .unwrap();
        let rhs = schur_multiply(&p(&[2]), &to_schur(&SymFunc::kschur(2, p(&[1])).unwrap()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn h_expand_examples() {
        let f = h_expand(2, &p(&[1, 1, 1])).unwrap();
        assert_eq!(f.sorted_terms(), vec![(p(&[2, 1]), 1), (p(&[1, 1, 1]), 1)]);
        let f = h_expand(3, &p(&[2])).unwrap();
        assert_eq!(f.sorted_terms(), vec![(p(&[2]), 1)]);
        assert!(matches!(h_expand(2, &p(&[3])), Err(Error::PartExceedsK)));
    }

    #[test]
    fn h_expand_matches_iterated_pieri() {
        for k in 1..=3usize {
            for n in 0..=6 {
                for lambda in bounded_partitions_of(n, k) {
                    let direct = h_expand(k, &lambda).unwrap();
                    let mut iterated = SymFunc::kschur(k, Partition::empty()).unwrap();
                    for &part in lambda.parts().iter().rev() {
                        iterated = multiply_h(k, part, &iterated).unwrap();
                    }
                    assert_eq!(direct, iterated, "lambda={lambda} k={k}");
                }
            }
        }
    }

    #[test]
    fn schur_multiply_matches_pieri_on_rows() {
        // s_(l) * f equals the classical Pieri rule.
        let f = SymFunc::single(Basis::Schur, p(&[2, 1])).unwrap();
        let via_mult = schur_multiply(&p(&[2]), &f).unwrap();
        let via_pieri = classical_h_pieri(2, &f).unwrap();
        assert_eq!(via_mult, via_pieri);
        let via_mult = schur_multiply(&p(&[1, 1]), &f).unwrap();
        let via_pieri = classical_e_pieri(2, &f).unwrap();
        assert_eq!(via_mult, via_pieri);
    }

    #[test]
    fn coefficient_overflow_is_an_error() {
        let mut f = SymFunc::zero(Basis::Schur, 2);
        f.add_term(p(&[2]), i64::MAX).unwrap();
        assert_eq!(f.add_term(p(&[2]), 1), Err(Error::Overflow));
        assert_eq!(
            f.add_scaled(&SymFunc::single(Basis::Schur, p(&[2])).unwrap(), 2),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn disk_cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("kschur-test-cache-{}", std::process::id()));
        let m = kostka_matrix(2, 4).unwrap();
        store_cached(&dir, &m);
        let loaded = load_cached(&dir, 2, 4).unwrap();
        assert_eq!(&loaded, m.as_ref());
        // A corrupt file is ignored.
        std::fs::write(dir.join(cache_file_name(2, 4)), "{\"version\":9}").unwrap();
        assert!(load_cached(&dir, 2, 4).is_none());
        let _ = std::fs::remove_dir_all(&dir);
    }
}
