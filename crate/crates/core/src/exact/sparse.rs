use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{height, Scalar};
use crate::error::{Error, Result};

/// Sparse row: strictly increasing keys, no zero values.
pub type SparseRow<K> = Vec<(K, Scalar)>;

/// `v - c * w` for sorted sparse rows.
fn sub_scaled<K: Ord + Clone>(v: &[(K, Scalar)], c: &Scalar, w: &[(K, Scalar)]) -> SparseRow<K> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j >= w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i >= v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push(v[i].clone());
            i += 1;
        } else if take_w {
            out.push((w[j].0.clone(), -(c * &w[j].1)));
            j += 1;
        } else {
            let x = &v[i].1 - c * &w[j].1;
            if !x.is_zero() {
                out.push((v[i].0.clone(), x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally built row-echelon basis of a subspace of `Q^(K)`.
///
/// Each stored row is normalized so that its leading (smallest) key has
/// coefficient 1, and no two rows share a leading key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseRow<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Eliminates leading entries against stored pivots; zero iff `v` is in the span.
    pub fn reduce(&self, mut v: SparseRow<K>) -> SparseRow<K> {
        while let Some((k, a)) = v.first() {
            match self.rows.get(k) {
                Some(row) => {
                    let a = a.clone();
                    v = sub_scaled(&v, &a, row);
                }
                None => break,
            }
        }
        v
    }

    pub fn contains(&self, v: SparseRow<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns the normalized new row when the dimension grew.
    pub fn insert(&mut self, v: SparseRow<K>) -> Option<&SparseRow<K>> {
        let mut r = self.reduce(v);
        let (lead, a) = r.first()?.clone();
        if !a.is_one() {
            let inv = a.recip();
            for (_, x) in r.iter_mut() {
                *x *= &inv;
            }
        }
        self.rows.insert(lead.clone(), r);
        self.rows.get(&lead)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseRow<K>> {
        self.rows.values()
    }

    /// Back-substitutes so every pivot column is zero outside its own row.
    pub fn into_reduced(mut self) -> Self {
        let keys: Vec<K> = self.rows.keys().cloned().collect();
        for p in keys.iter().rev() {
            let mut row = self.rows.remove(p).expect("pivot row");
            loop {
                let hit = row
                    .iter()
                    .skip(1)
                    .find(|(k, _)| self.rows.contains_key(k))
                    .map(|(k, a)| (k.clone(), a.clone()));
                match hit {
                    Some((k, a)) => row = sub_scaled(&row, &a, &self.rows[&k]),
                    None => break,
                }
            }
            self.rows.insert(p.clone(), row);
        }
        self
    }
}

/// Sparse matrix over the rationals with row-major sorted storage.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseRow<usize>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    /// Builds from dense rows.
    pub fn from_dense(data: &[Vec<Scalar>]) -> Self {
        let ncols = data.first().map_or(0, Vec::len);
        let rows = data
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.clone()))
                    .collect()
            })
            .collect();
        Self { nrows: data.len(), ncols, rows }
    }

    /// Builds from sparse rows; entries are sorted and zeros dropped.
    pub fn from_rows(ncols: usize, rows: Vec<SparseRow<usize>>) -> Self {
        let rows: Vec<_> = rows
            .into_iter()
            .map(|mut r| {
                r.sort_by_key(|a| a.0);
                let mut merged: SparseRow<usize> = Vec::with_capacity(r.len());
                for (j, x) in r {
                    assert!(j < ncols, "column {j} out of range");
                    match merged.last_mut() {
                        Some((k, y)) if *k == j => *y += x,
                        _ => merged.push((j, x)),
                    }
                }
                merged.retain(|(_, x)| !x.is_zero());
                merged
            })
            .collect();
        Self { nrows: rows.len(), ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        assert!(i < self.nrows && j < self.ncols);
        let row = &mut self.rows[i];
        match row.binary_search_by(|(k, _)| k.cmp(&j)) {
            Ok(pos) if x.is_zero() => {
                row.remove(pos);
            }
            Ok(pos) => row[pos].1 = x,
            Err(_) if x.is_zero() => {}
            Err(pos) => row.insert(pos, (j, x)),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.rows[i].binary_search_by(|(k, _)| k.cmp(&j)) {
            Ok(pos) => self.rows[i][pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.ncols);
        self.rows
            .iter()
            .map(|r| r.iter().fold(Scalar::zero(), |acc, (j, a)| acc + a * &x[*j]))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.echelon().dim()
    }

    fn echelon(&self) -> Echelon<usize> {
        // Sparsest rows first, then smallest entries: keeps fill-in and
        // coefficient growth down.
        let mut order: Vec<&SparseRow<usize>> = self.rows.iter().filter(|r| !r.is_empty()).collect();
        order.sort_by_key(|r| (r.len(), r.iter().map(|(_, x)| height(x)).max().unwrap_or(0)));
        let mut ech = Echelon::new();
        for r in order {
            if ech.dim() == self.ncols {
                break;
            }
            ech.insert(r.clone());
        }
        ech
    }

    /// Rank and a sparse basis of the right kernel.
    pub fn kernel_sparse(&self) -> (usize, Vec<SparseRow<usize>>) {
        let ech = self.echelon().into_reduced();
        let rank = ech.dim();
        let pivots: std::collections::BTreeSet<usize> = ech.pivots().copied().collect();
        let mut basis = Vec::new();
        for f in (0..self.ncols).filter(|c| !pivots.contains(c)) {
            let mut v: SparseRow<usize> = vec![(f, Scalar::one())];
            for row in ech.rows() {
                if let Ok(pos) = row.binary_search_by(|(k, _)| k.cmp(&f)) {
                    v.push((row[0].0, -row[pos].1.clone()));
                }
            }
            v.sort_by_key(|a| a.0);
            basis.push(v);
        }
        (rank, basis)
    }
}

/// Rank of `m` and a basis of its kernel, as dense vectors of length `m.ncols()`.
pub fn nullspace(m: &SparseMatrix) -> (usize, Vec<Vec<Scalar>>) {
    let (rank, basis) = m.kernel_sparse();
    let dense = basis
        .into_iter()
        .map(|v| {
            let mut d = vec![Scalar::zero(); m.ncols()];
            for (j, x) in v {
                d[j] = x;
            }
            d
        })
        .collect();
    (rank, dense)
}

/// Inverse of a square dense matrix by Gauss-Jordan elimination.
pub fn invert_dense(m: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| height(&a[r][col]))
            .ok_or(Error::SingularGram)?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let c = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &c * p;
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
