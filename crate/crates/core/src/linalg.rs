//! Sparse exact linear algebra over an ordered coordinate set.
//!
//! Vectors are sorted lists of `(key, coefficient)` pairs. Echelon forms use
//! the *largest* key of each row as its pivot, so the normal form of a vector
//! modulo a subspace is supported on the smaller, non-pivot keys.

use std::collections::HashMap;
use std::hash::Hash;

use crate::field::Field;

/// A sparse vector with coordinates indexed by `K`. Entries are sorted by key
/// and never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<K, F> {
    entries: Vec<(K, F)>,
}

/// A vector in a graded algebra, indexed by global basis position.
pub type Vector<F> = SparseVec<usize, F>;

impl<K: Ord + Clone, F: Field> Default for SparseVec<K, F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone, F: Field> SparseVec<K, F> {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(key: K) -> Self {
        SparseVec { entries: vec![(key, F::one())] }
    }

    pub fn single(key: K, c: F) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            SparseVec { entries: vec![(key, c)] }
        }
    }

    /// Builds a vector from entries in any order, summing repeated keys.
    pub fn from_entries(mut entries: Vec<(K, F)>) -> Self {
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(K, F)> = Vec::with_capacity(entries.len());
        for (k, c) in entries {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc = lc.add(&c),
                _ => out.push((k, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparseVec { entries: out }
    }

    /// Entries already sorted by strictly increasing key, zeros allowed.
    pub fn from_sorted(mut entries: Vec<(K, F)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &F)> + '_ {
        self.entries.iter().map(|(k, c)| (k, c))
    }

    pub fn entries(&self) -> &[(K, F)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(K, F)> {
        self.entries
    }

    pub fn get(&self, key: &K) -> F {
        match self.entries.binary_search_by(|(k, _)| k.cmp(key)) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn leading(&self) -> Option<(&K, &F)> {
        self.entries.last().map(|(k, c)| (k, c))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparseVec {
            entries: self.entries.iter().map(|(k, x)| (k.clone(), x.mul(c))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SparseVec {
            entries: self.entries.iter().map(|(k, x)| (k.clone(), x.neg())).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Self, c: &F) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0.clone(), b[j].1.mul(c)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = a[i].1.add(&b[j].1.mul(c));
                    if !s.is_zero() {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(k, x)| (k.clone(), x.mul(c))));
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &F::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &F::one().neg())
    }

    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> SparseVec<K2, F> {
        SparseVec::from_entries(self.entries.iter().map(|(k, c)| (f(k), c.clone())).collect())
    }
}

/// A subspace held in reduced row-echelon form.
///
/// Every row has pivot coefficient one at its largest key, and no other row
/// has a nonzero entry in that column.
#[derive(Clone, Debug)]
pub struct Subspace<K, F> {
    rows: Vec<SparseVec<K, F>>,
    pivots: HashMap<K, usize>,
}

impl<K: Ord + Clone + Hash, F: Field> Default for Subspace<K, F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone + Hash, F: Field> Subspace<K, F> {
    pub fn new() -> Self {
        Subspace { rows: Vec::new(), pivots: HashMap::new() }
    }

    /// Echelonizes the span of `vectors`.
    pub fn span<I: IntoIterator<Item = SparseVec<K, F>>>(vectors: I) -> Self {
        let mut b = EchelonBuilder::new();
        for v in vectors {
            b.insert(v);
        }
        b.finish()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows sorted by increasing pivot.
    pub fn rows(&self) -> &[SparseVec<K, F>] {
        &self.rows
    }

    pub fn is_pivot(&self, key: &K) -> bool {
        self.pivots.contains_key(key)
    }

    pub fn pivot_keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.rows.iter().map(|r| r.leading().expect("nonzero row").0)
    }

    /// Canonical normal form of `v` modulo the subspace: the unique vector
    /// congruent to `v` with no support on pivot columns.
    pub fn reduce(&self, v: &SparseVec<K, F>) -> SparseVec<K, F> {
        reduce_against(&self.rows, &self.pivots, v.clone())
    }

    pub fn contains(&self, v: &SparseVec<K, F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of a member of the subspace with respect to `rows()`.
    /// Returns `None` if `v` is not a member.
    pub fn coordinates(&self, v: &SparseVec<K, F>) -> Option<Vec<(usize, F)>> {
        let mut coords = Vec::new();
        let mut rest = v.clone();
        for (k, c) in v.iter() {
            if let Some(&r) = self.pivots.get(k) {
                coords.push((r, c.clone()));
                rest = rest.add_scaled(&self.rows[r], &c.neg());
            }
        }
        rest.is_zero().then_some(coords)
    }

    /// Whether `self` is contained in `other`.
    pub fn is_subspace_of(&self, other: &Subspace<K, F>) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

impl<K: Ord + Clone + Hash, F: Field> PartialEq for Subspace<K, F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

fn reduce_against<K: Ord + Clone + Hash, F: Field>(
    rows: &[SparseVec<K, F>],
    pivots: &HashMap<K, usize>,
    mut v: SparseVec<K, F>,
) -> SparseVec<K, F> {
    if pivots.is_empty() {
        return v;
    }
    // Walk downward from the top key. Subtracting a row with pivot p only
    // changes entries at keys <= p, so the scan never needs to go back up.
    let mut bound = v.len();
    while bound > 0 {
        let mut hit = None;
        for pos in (0..bound).rev() {
            if let Some(&r) = pivots.get(&v.entries[pos].0) {
                hit = Some((pos, r));
                break;
            }
        }
        let Some((pos, r)) = hit else { break };
        let key = v.entries[pos].0.clone();
        let c = v.entries[pos].1.neg();
        v = v.add_scaled(&rows[r], &c);
        bound = v.entries.partition_point(|(k, _)| *k < key);
    }
    v
}

/// Incremental semi-echelon form; `finish` back-substitutes into RREF.
#[derive(Clone, Debug)]
pub struct EchelonBuilder<K, F> {
    rows: Vec<SparseVec<K, F>>,
    pivots: HashMap<K, usize>,
}

impl<K: Ord + Clone + Hash, F: Field> Default for EchelonBuilder<K, F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone + Hash, F: Field> EchelonBuilder<K, F> {
    pub fn new() -> Self {
        EchelonBuilder { rows: Vec::new(), pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: SparseVec<K, F>) -> bool {
        let r = reduce_against(&self.rows, &self.pivots, v);
        let Some((k, c)) = r.leading() else { return false };
        let k = k.clone();
        let inv = c.inv().expect("nonzero leading coefficient");
        self.pivots.insert(k, self.rows.len());
        self.rows.push(r.scale(&inv));
        true
    }

    pub fn contains(&self, v: &SparseVec<K, F>) -> bool {
        reduce_against(&self.rows, &self.pivots, v.clone()).is_zero()
    }

    pub fn finish(self) -> Subspace<K, F> {
        let mut rows = self.rows;
        rows.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
        let mut done: Vec<SparseVec<K, F>> = Vec::with_capacity(rows.len());
        let mut pivots: HashMap<K, usize> = HashMap::with_capacity(rows.len());
        for row in rows {
            let mut entries = row.into_entries();
            let (pk, pc) = entries.pop().expect("nonzero row");
            let tail = reduce_against(&done, &pivots, SparseVec { entries });
            let mut e = tail.into_entries();
            e.push((pk.clone(), pc));
            pivots.insert(pk, done.len());
            done.push(SparseVec { entries: e });
        }
        Subspace { rows: done, pivots }
    }
}

/// Basis of the kernel of the linear map sending the `t`-th source basis
/// vector to `images[t]`. Kernel vectors are indexed by source position.
pub fn kernel<K: Ord + Clone + Hash, F: Field>(images: &[SparseVec<K, F>]) -> Vec<Vector<F>> {
    let mut rows: Vec<(SparseVec<K, F>, Vector<F>)> = Vec::new();
    let mut pivots: HashMap<K, usize> = HashMap::new();
    let mut out = Vec::new();
    for (t, img) in images.iter().enumerate() {
        let mut v = img.clone();
        let mut combo = Vector::unit(t);
        let mut bound = v.len();
        while bound > 0 {
            let mut hit = None;
            for pos in (0..bound).rev() {
                if let Some(&r) = pivots.get(&v.entries[pos].0) {
                    hit = Some((pos, r));
                    break;
                }
            }
            let Some((pos, r)) = hit else { break };
            let key = v.entries[pos].0.clone();
            let c = v.entries[pos].1.neg();
            v = v.add_scaled(&rows[r].0, &c);
            combo = combo.add_scaled(&rows[r].1, &c);
            bound = v.entries.partition_point(|(k, _)| *k < key);
        }
        match v.leading() {
            None => out.push(combo),
            Some((k, c)) => {
                let inv = c.inv().expect("nonzero");
                pivots.insert(k.clone(), rows.len());
                rows.push((v.scale(&inv), combo.scale(&inv)));
            }
        }
    }
    out
}

/// Inverse of a dense square matrix, `None` if singular.
pub fn invert<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = a[col][col].inv()?;
        for x in a[col].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let v = a[col][c].mul(&f);
                    a[r][c] = a[r][c].sub(&v);
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf2, Rational};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn v(entries: &[(usize, i64)]) -> Vector<Rational> {
        Vector::from_entries(entries.iter().map(|&(k, c)| (k, q(c))).collect())
    }

    #[test]
    fn empty_span_has_rank_zero() {
        let s: Subspace<usize, Rational> = Subspace::span(vec![]);
        assert_eq!(s.rank(), 0);
        assert_eq!(s.reduce(&v(&[(3, 2)])), v(&[(3, 2)]));
        assert!(s.contains(&Vector::zero()));
    }

    #[test]
    fn rref_has_unit_pivots_and_clean_columns() {
        let s = Subspace::span(vec![v(&[(0, 1), (2, 2)]), v(&[(1, 1), (2, 1)]), v(&[(0, 1), (1, 1), (2, 3)])]);
        assert_eq!(s.rank(), 2);
        for r in s.rows() {
            let (k, c) = r.leading().unwrap();
            assert!(c.is_one());
            for other in s.rows() {
                if other != r {
                    assert!(other.get(k).is_zero());
                }
            }
        }
        let res = s.reduce(&v(&[(2, 1)]));
        assert!(res.iter().all(|(k, _)| !s.is_pivot(k)));
    }

    #[test]
    fn kernel_of_simple_map() {
        // e0 -> f0, e1 -> f0, e2 -> f1
        let images = vec![v(&[(0, 1)]), v(&[(0, 1)]), v(&[(1, 1)])];
        let k = kernel(&images);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], v(&[(0, -1), (1, 1)]));
    }

    #[test]
    fn inverse_of_rotation() {
        let m = vec![vec![q(0), q(1)], vec![q(-1), q(0)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![q(0), q(-1)], vec![q(1), q(0)]]);
        assert!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
        let g = vec![vec![Gf2(true), Gf2(true)], vec![Gf2(true), Gf2(true)]];
        assert!(invert(&g).is_none());
    }

    fn arb_vec() -> impl Strategy<Value = Vector<Rational>> {
        proptest::collection::vec((0usize..8, -3i64..4), 0..6)
            .prop_map(|e| Vector::from_entries(e.into_iter().map(|(k, c)| (k, q(c))).collect()))
    }

    proptest! {
        #[test]
        fn echelon_idempotent(vs in proptest::collection::vec(arb_vec(), 0..7)) {
            let s = Subspace::span(vs.clone());
            let again = Subspace::span(s.rows().to_vec());
            prop_assert_eq!(s.rows(), again.rows());
            for x in &vs {
                prop_assert!(s.contains(x));
            }
        }

        #[test]
        fn residue_is_congruent_and_pivot_free(vs in proptest::collection::vec(arb_vec(), 0..7), x in arb_vec()) {
            let s = Subspace::span(vs);
            let r = s.reduce(&x);
            prop_assert!(s.contains(&x.sub(&r)));
            prop_assert!(r.iter().all(|(k, _)| !s.is_pivot(k)));
            if s.contains(&x) {
                let coords = s.coordinates(&x).unwrap();
                let mut rebuilt = Vector::zero();
                for (i, c) in coords {
                    rebuilt = rebuilt.add_scaled(&s.rows()[i], &c);
                }
                prop_assert_eq!(rebuilt, x);
            }
        }

        #[test]
        fn rank_nullity(vs in proptest::collection::vec(arb_vec(), 0..8)) {
            let k = kernel(&vs);
            let s = Subspace::span(vs.clone());
            prop_assert_eq!(k.len() + s.rank(), vs.len());
            for kv in &k {
                let mut img = Vector::zero();
                for (t, c) in kv.iter() {
                    img = img.add_scaled(&vs[*t], c);
                }
                prop_assert!(img.is_zero());
            }
        }
    }
}
