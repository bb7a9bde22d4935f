//! Dense matrices and vectors over a single cyclotomic field.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::cyclotomic::{join_fields, CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::modular::{pow_mod, ModContext};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloVector {
    field: Arc<CycloField>,
    entries: Vec<CycloNum>,
}

impl CycloVector {
    /// Entries are lifted into the smallest field containing all of them.
    pub fn new(entries: Vec<CycloNum>) -> Result<CycloVector> {
        let first = entries.first().ok_or_else(|| Error::Dimension("empty vector".into()))?;
        let field = entries.iter().skip(1).fold(first.field().clone(), |f, x| join_fields(&f, x.field()));
        CycloVector::in_field(&field, entries)
    }

    pub fn in_field(field: &Arc<CycloField>, entries: Vec<CycloNum>) -> Result<CycloVector> {
        let entries = entries.iter().map(|x| x.lift(field)).collect::<Result<Vec<_>>>()?;
        Ok(CycloVector { field: field.clone(), entries })
    }

    pub fn zero(field: &Arc<CycloField>, n: usize) -> CycloVector {
        CycloVector { field: field.clone(), entries: vec![CycloNum::zero(field); n] }
    }

    pub fn from_ints(field: &Arc<CycloField>, xs: &[i64]) -> CycloVector {
        CycloVector { field: field.clone(), entries: xs.iter().map(|&x| CycloNum::from_int(field, x)).collect() }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CycloNum] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &CycloNum {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycloNum::is_zero)
    }

    pub fn lift(&self, field: &Arc<CycloField>) -> Result<CycloVector> {
        CycloVector::in_field(field, self.entries.clone())
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &CycloVector) -> CycloNum {
        let mut acc = CycloNum::zero(&self.field);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !a.is_zero() && !b.is_zero() {
                acc = &acc + &(&a.conj() * b);
            }
        }
        acc
    }

    /// `⟨self|self⟩`.
    pub fn norm2(&self) -> CycloNum {
        self.inner(self)
    }

    pub fn scale(&self, c: &CycloNum) -> CycloVector {
        CycloVector { field: self.field.clone(), entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &CycloVector) -> CycloVector {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        CycloVector { field: self.field.clone(), entries }
    }

    /// Scaled so the first nonzero entry is 1; `None` for the zero vector.
    pub fn projective_normal_form(&self) -> Option<CycloVector> {
        let lead = self.entries.iter().find(|x| !x.is_zero())?;
        let inv = lead.inv().ok()?;
        Some(self.scale(&inv))
    }

    /// `|self⟩⟨other|`.
    pub fn outer(&self, other: &CycloVector) -> CycloMatrix {
        let conj: Vec<CycloNum> = other.entries.iter().map(CycloNum::conj).collect();
        let mut data = Vec::with_capacity(self.len() * other.len());
        for a in &self.entries {
            for b in &conj {
                data.push(a * b);
            }
        }
        CycloMatrix { field: self.field.clone(), rows: self.len(), cols: other.len(), data }
    }

    pub fn embed(&self) -> Vec<Complex64> {
        self.entries.iter().map(CycloNum::embed).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloMatrix {
    field: Arc<CycloField>,
    rows: usize,
    cols: usize,
    data: Vec<CycloNum>,
}

impl CycloMatrix {
    pub fn zero(field: &Arc<CycloField>, rows: usize, cols: usize) -> CycloMatrix {
        CycloMatrix { field: field.clone(), rows, cols, data: vec![CycloNum::zero(field); rows * cols] }
    }

    pub fn identity(field: &Arc<CycloField>, n: usize) -> CycloMatrix {
        let mut m = CycloMatrix::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = CycloNum::one(field);
        }
        m
    }

    /// Row `i` has a 1 in column `σ(i)`.
    pub fn from_perm(field: &Arc<CycloField>, p: &Perm) -> CycloMatrix {
        let n = p.degree();
        let mut m = CycloMatrix::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + p.apply(i)] = CycloNum::one(field);
        }
        m
    }

    pub fn from_rows(field: &Arc<CycloField>, rows: Vec<Vec<CycloNum>>) -> Result<CycloMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.into_iter().flatten().map(|x| x.lift(field)).collect::<Result<Vec<_>>>()?;
        Ok(CycloMatrix { field: field.clone(), rows: r, cols: c, data })
    }

    pub fn from_vectors(field: &Arc<CycloField>, vs: &[CycloVector]) -> Result<CycloMatrix> {
        CycloMatrix::from_rows(field, vs.iter().map(|v| v.entries.clone()).collect())
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: CycloNum) {
        self.data[i * self.cols + j] = x.lift(&self.field).expect("entry must lie in the matrix field");
    }

    pub fn row(&self, i: usize) -> CycloVector {
        CycloVector { field: self.field.clone(), entries: self.data[i * self.cols..(i + 1) * self.cols].to_vec() }
    }

    pub fn row_vectors(&self) -> Vec<CycloVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn lift(&self, field: &Arc<CycloField>) -> Result<CycloMatrix> {
        let data = self.data.iter().map(|x| x.lift(field)).collect::<Result<Vec<_>>>()?;
        Ok(CycloMatrix { field: field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycloNum::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn trace(&self) -> CycloNum {
        (0..self.rows.min(self.cols)).fold(CycloNum::zero(&self.field), |acc, i| &acc + self.get(i, i))
    }

    pub fn transpose(&self) -> CycloMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        CycloMatrix { field: self.field.clone(), rows: self.cols, cols: self.rows, data }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CycloMatrix {
        let mut t = self.transpose();
        for x in &mut t.data {
            *x = x.conj();
        }
        t
    }

    pub fn scale(&self, c: &CycloNum) -> CycloMatrix {
        CycloMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn kron(&self, other: &CycloMatrix) -> CycloMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut m = CycloMatrix::zero(&self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.data[(i * other.rows + k) * cols + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        m
    }

    pub fn apply(&self, v: &CycloVector) -> CycloVector {
        let entries = (0..self.rows)
            .map(|i| {
                let mut acc = CycloNum::zero(&self.field);
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v.entries[j].is_zero() {
                        acc = &acc + &(a * &v.entries[j]);
                    }
                }
                acc
            })
            .collect();
        CycloVector { field: self.field.clone(), entries }
    }

    /// `self - λ·I`.
    pub fn shift_diagonal(&self, lambda: &CycloNum) -> CycloMatrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let x = &m.data[i * self.cols + i] - lambda;
            m.data[i * self.cols + i] = x;
        }
        m
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &CycloMatrix) -> CycloMatrix {
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        CycloMatrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Exact rank. Elimination modulo a prime `p ≡ 1` mod the conductor runs
    /// first: reduction cannot raise the rank, so a full rank there is the
    /// exact answer. Anything short of full rank is settled by [`Self::rank_bareiss`].
    pub fn rank(&self) -> usize {
        let full = self.rows.min(self.cols);
        if full > 0 && self.rank_mod_p() == Some(full) {
            return full;
        }
        self.rank_bareiss()
    }

    /// Rank of the reduction modulo a prime; `None` if some entry has the
    /// prime in its denominator.
    pub fn rank_mod_p(&self) -> Option<usize> {
        let ctx = ModContext::new(self.field.conductor(), 0);
        let p = ctx.p;
        let mut a: Vec<Vec<u64>> = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|x| if x.is_zero() { Some(0) } else { ctx.image_pair(x).map(|v| v.0) })
                .collect::<Option<Vec<u64>>>()?;
            a.push(row);
        }
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&r| a[r][c] != 0) else { continue };
            a.swap(rank, piv);
            let inv = pow_mod(a[rank][c], p - 2, p);
            for r in rank + 1..self.rows {
                if a[r][c] == 0 {
                    continue;
                }
                let f = ctx.mul(a[r][c], inv);
                for k in c..self.cols {
                    let t = ctx.mul(f, a[rank][k]);
                    a[r][k] = ctx.add(a[r][k], p - t);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        Some(rank)
    }

    /// Rank by fraction-free (Bareiss) elimination. Pivots are taken as the
    /// first nonzero entry, scanning rows in order, in the current column.
    pub fn rank_bareiss(&self) -> usize {
        let mut a: Vec<Vec<CycloNum>> = (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect();
        let mut rank = 0;
        let mut prev_inv = CycloNum::one(&self.field);
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !a[r][c].is_zero()) else { continue };
            a.swap(rank, p);
            let pivot = a[rank][c].clone();
            for r in rank + 1..self.rows {
                let f = a[r][c].clone();
                for k in c + 1..self.cols {
                    let x = &(&pivot * &a[r][k]) - &(&f * &a[rank][k]);
                    a[r][k] = &x * &prev_inv;
                }
                a[r][c] = CycloNum::zero(&self.field);
            }
            prev_inv = pivot.inv().expect("pivot is nonzero");
            rank += 1;
        }
        rank
    }

    /// Rank by Gauss–Jordan elimination on columns, used as an independent check.
    pub fn rank_by_columns(&self) -> usize {
        let mut cols: Vec<Vec<CycloNum>> = (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j).clone()).collect()).collect();
        let mut rank = 0;
        for r in 0..self.rows {
            let Some(p) = (rank..self.cols).find(|&j| !cols[j][r].is_zero()) else { continue };
            cols.swap(rank, p);
            let inv = cols[rank][r].inv().expect("pivot is nonzero");
            let pivot_col: Vec<CycloNum> = cols[rank].iter().map(|x| x * &inv).collect();
            for (j, col) in cols.iter_mut().enumerate() {
                if j == rank || col[r].is_zero() {
                    continue;
                }
                let f = col[r].clone();
                for (x, y) in col.iter_mut().zip(&pivot_col).skip(r) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            cols[rank] = pivot_col;
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (CycloMatrix, Vec<usize>) {
        let mut a: Vec<Vec<CycloNum>> = (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            let inv = a[r][c].inv().expect("pivot is nonzero");
            for x in a[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            for i in 0..self.rows {
                if i == r || a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].clone();
                for k in c..self.cols {
                    if !a[r][k].is_zero() {
                        let t = &f * &a[r][k];
                        a[i][k] = &a[i][k] - &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let data = a.into_iter().flatten().collect();
        (CycloMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }, pivots)
    }

    /// Basis of `{x : self·x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<CycloVector> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![CycloNum::zero(&self.field); self.cols];
            v[f] = CycloNum::one(&self.field);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, f);
            }
            out.push(CycloVector { field: self.field.clone(), entries: v });
        }
        out
    }

    /// Basis of `{x : self·x = λx}` over the join of both fields.
    pub fn eigenspace(&self, lambda: &CycloNum) -> Result<Vec<CycloVector>> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("eigenspace of a {}x{} matrix", self.rows, self.cols)));
        }
        let field = join_fields(&self.field, lambda.field());
        Ok(self.lift(&field)?.shift_diagonal(&lambda.lift(&field)?).kernel())
    }

    pub fn embed(&self) -> Vec<Complex64> {
        self.data.iter().map(CycloNum::embed).collect()
    }
}

/// Canonical basis of the span of `vs`: the nonzero rows of the RREF.
pub fn span_rref(field: &Arc<CycloField>, vs: &[CycloVector]) -> Result<Vec<CycloVector>> {
    if vs.is_empty() {
        return Ok(Vec::new());
    }
    let m = CycloMatrix::from_vectors(field, vs)?;
    let (r, pivots) = m.rref();
    Ok((0..pivots.len()).map(|i| r.row(i)).collect())
}

impl<'a> Mul<&'a CycloMatrix> for &'a CycloMatrix {
    type Output = CycloMatrix;

    fn mul(self, rhs: &CycloMatrix) -> CycloMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let field = join_fields(&self.field, &rhs.field);
        let (a, b) = if Arc::ptr_eq(&field, &self.field) && Arc::ptr_eq(&field, &rhs.field) {
            (None, None)
        } else {
            (Some(self.lift(&field).unwrap()), Some(rhs.lift(&field).unwrap()))
        };
        let a = a.as_ref().unwrap_or(self);
        let b = b.as_ref().unwrap_or(rhs);
        let mut out = CycloMatrix::zero(&field, a.rows, b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..b.cols {
                    let y = b.get(k, j);
                    if !y.is_zero() {
                        let idx = i * b.cols + j;
                        out.data[idx] = &out.data[idx] + &(x * y);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a CycloMatrix> for &'a CycloMatrix {
    type Output = CycloMatrix;

    fn add(self, rhs: &CycloMatrix) -> CycloMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in sum");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        CycloMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }
}

impl<'a> Sub<&'a CycloMatrix> for &'a CycloMatrix {
    type Output = CycloMatrix;

    fn sub(self, rhs: &CycloMatrix) -> CycloMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in difference");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        CycloMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }
}
