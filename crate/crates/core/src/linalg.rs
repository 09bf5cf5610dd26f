//! Dense exact linear algebra over a [`Field`].
//!
//! Vectors are column vectors; a matrix with `c` columns maps `k^c -> k^r`.
//! Tensor (Kronecker) products use the first-factor-major index
//! `index(i, j) = i * dim2 + j` everywhere in the crate.
//!
//! Pivoting is deterministic (first nonzero entry in the column), so every
//! derived basis is reproducible bit for bit.

use num::rational::BigRational;
use num::Zero;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::par::{self, ExecMode};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Data {
    Fp(Vec<u64>),
    Q(Vec<BigRational>),
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Data,
}

/// Scalar arithmetic specialised per storage type; the elimination kernels
/// are written once against this trait.
trait Arith: Copy + Send + Sync {
    type E: Clone + PartialEq + Send + Sync;
    fn zero(self) -> Self::E;
    fn add(self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(self, a: &Self::E) -> Self::E;
    fn inv(self, a: &Self::E) -> Self::E;
    fn is_zero(self, a: &Self::E) -> bool;
    /// `y += a x`, skipping zero entries of `x`.
    fn axpy(self, y: &mut [Self::E], a: &Self::E, x: &[Self::E]) {
        for (yi, xi) in y.iter_mut().zip(x) {
            if !self.is_zero(xi) {
                *yi = self.add(yi, &self.mul(a, xi));
            }
        }
    }
}

#[derive(Clone, Copy)]
struct ModP(u64);

#[derive(Clone, Copy)]
struct Rat;

impl Arith for ModP {
    type E = u64;
    #[inline]
    fn zero(self) -> u64 {
        0
    }
    #[inline]
    fn add(self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    #[inline]
    fn mul(self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    #[inline]
    fn neg(self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn inv(self, a: &u64) -> u64 {
        crate::field::pow_mod(*a, self.0 - 2, self.0)
    }
    #[inline]
    fn is_zero(self, a: &u64) -> bool {
        *a == 0
    }
    fn axpy(self, y: &mut [u64], a: &u64, x: &[u64]) {
        let p = self.0;
        if p < 1 << 31 {
            for (yi, &xi) in y.iter_mut().zip(x) {
                *yi = (*yi + a * xi) % p;
            }
        } else {
            for (yi, xi) in y.iter_mut().zip(x) {
                *yi = self.add(yi, &self.mul(a, xi));
            }
        }
    }
}

impl Arith for Rat {
    type E = BigRational;
    fn zero(self) -> BigRational {
        BigRational::zero()
    }
    fn add(self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

macro_rules! dispatch {
    ($field:expr, $data:expr, |$ar:ident, $v:ident| $body:expr) => {
        match ($field, $data) {
            (Field::Prime(p), Data::Fp($v)) => {
                let $ar = ModP(p);
                $body
            }
            (Field::Rationals, Data::Q($v)) => {
                let $ar = Rat;
                $body
            }
            _ => unreachable!("matrix storage does not match its field"),
        }
    };
}

macro_rules! dispatch2 {
    ($field:expr, $d1:expr, $d2:expr, |$ar:ident, $a:ident, $b:ident| $body:expr) => {
        match ($field, $d1, $d2) {
            (Field::Prime(p), Data::Fp($a), Data::Fp($b)) => {
                let $ar = ModP(p);
                Data::Fp($body)
            }
            (Field::Rationals, Data::Q($a), Data::Q($b)) => {
                let $ar = Rat;
                Data::Q($body)
            }
            _ => panic!("matrices over different fields"),
        }
    };
}

fn to_scalar_fp(v: u64) -> Scalar {
    Scalar::Fp(v)
}

/// Row-reduce in place; returns the pivot columns.
fn rref_kernel<A: Arith>(ar: A, v: &mut [A::E], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !ar.is_zero(&v[i * cols + c])) else {
            continue;
        };
        if piv != r {
            for j in c..cols {
                v.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = ar.inv(&v[r * cols + c]);
        for j in c..cols {
            v[r * cols + j] = ar.mul(&v[r * cols + j], &inv);
        }
        let pivot_row: Vec<A::E> = v[r * cols + c..(r + 1) * cols].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = v[i * cols + c].clone();
            if ar.is_zero(&f) {
                continue;
            }
            let nf = ar.neg(&f);
            ar.axpy(&mut v[i * cols + c..(i + 1) * cols], &nf, &pivot_row);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn matmul_kernel<A: Arith>(
    ar: A,
    a: &[A::E],
    b: &[A::E],
    n: usize,
    k: usize,
    m: usize,
) -> Vec<A::E> {
    let mode = if n * k * m >= par::PAR_THRESHOLD {
        ExecMode::Parallel
    } else {
        ExecMode::Sequential
    };
    // row i of the product is a combination of rows of b; zero entries of a are skipped
    let rows: Vec<Vec<A::E>> = par::map_indexed(mode, n, |i| {
        let mut out = vec![ar.zero(); m];
        for (l, x) in a[i * k..(i + 1) * k].iter().enumerate() {
            if !ar.is_zero(x) {
                ar.axpy(&mut out, x, &b[l * m..(l + 1) * m]);
            }
        }
        out
    });
    rows.into_iter().flatten().collect()
}

fn mode_kernel<A: Arith>(
    ar: A,
    a: &[A::E],
    x: &[A::E],
    out: usize,
    mid: usize,
    pre: usize,
    w: usize,
) -> Vec<A::E> {
    let mode = if pre * out * mid * w >= par::PAR_THRESHOLD && pre > 1 {
        ExecMode::Parallel
    } else {
        ExecMode::Sequential
    };
    let blocks: Vec<Vec<A::E>> = par::map_indexed(mode, pre, |p| {
        let xb = &x[p * mid * w..(p + 1) * mid * w];
        let mut yb = vec![ar.zero(); out * w];
        for j in 0..out {
            let yr = &mut yb[j * w..(j + 1) * w];
            for i in 0..mid {
                let c = &a[j * mid + i];
                if ar.is_zero(c) {
                    continue;
                }
                for (y, xv) in yr.iter_mut().zip(&xb[i * w..(i + 1) * w]) {
                    if !ar.is_zero(xv) {
                        *y = ar.add(y, &ar.mul(c, xv));
                    }
                }
            }
        }
        yb
    });
    blocks.into_iter().flatten().collect()
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        let data = match field {
            Field::Prime(_) => Data::Fp(vec![0; rows * cols]),
            Field::Rationals => Data::Q(vec![BigRational::zero(); rows * cols]),
        };
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Integer entries, row-major.
    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Self::from_fn(field, rows, cols, |i, j| {
            field.from_i64(entries[i * cols + j])
        })
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn column_vector(field: Field, v: &[Scalar]) -> Self {
        Self::from_cols(field, v.len(), &[v.to_vec()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let k = i * self.cols + j;
        match &self.data {
            Data::Fp(v) => to_scalar_fp(v[k]),
            Data::Q(v) => Scalar::Q(v[k].clone()),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let k = i * self.cols + j;
        match (&mut self.data, x) {
            (Data::Fp(v), Scalar::Fp(x)) => v[k] = x,
            (Data::Q(v), Scalar::Q(x)) => v[k] = x,
            _ => panic!("scalar does not match matrix field"),
        }
    }

    pub fn is_entry_zero(&self, i: usize, j: usize) -> bool {
        let k = i * self.cols + j;
        match &self.data {
            Data::Fp(v) => v[k] == 0,
            Data::Q(v) => v[k].is_zero(),
        }
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Data::Fp(v) => v.iter().all(|x| *x == 0),
            Data::Q(v) => v.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        match (&self.data, &mut t.data) {
            (Data::Fp(a), Data::Fp(b)) => {
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        b[j * self.rows + i] = a[i * self.cols + j];
                    }
                }
            }
            (Data::Q(a), Data::Q(b)) => {
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        b[j * self.rows + i] = a[i * self.cols + j].clone();
                    }
                }
            }
            _ => unreachable!(),
        }
        t
    }

    /// `self * other`. Panics on incompatible shapes.
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(
            self.cols,
            other.rows,
            "cannot multiply {:?} by {:?}",
            self.shape(),
            other.shape()
        );
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let data = dispatch2!(self.field, &self.data, &other.data, |ar, a, b| {
            matmul_kernel(ar, a, b, n, k, m)
        });
        Mat {
            field: self.field,
            rows: n,
            cols: m,
            data,
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.mul(&Mat::column_vector(self.field, v)).col(0)
    }

    fn zip_with(&self, other: &Mat, neg_other: bool) -> Mat {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in add/sub");
        let data = dispatch2!(self.field, &self.data, &other.data, |ar, a, b| {
            a.iter()
                .zip(b)
                .map(|(x, y)| {
                    if neg_other {
                        ar.add(x, &ar.neg(y))
                    } else {
                        ar.add(x, y)
                    }
                })
                .collect()
        });
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.zip_with(other, false)
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.zip_with(other, true)
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let mut out = self.clone();
        match (&mut out.data, s, self.field) {
            (Data::Fp(v), Scalar::Fp(x), Field::Prime(p)) => {
                let ar = ModP(p);
                v.iter_mut().for_each(|e| *e = ar.mul(e, x));
            }
            (Data::Q(v), Scalar::Q(x), Field::Rationals) => {
                v.iter_mut().for_each(|e| *e = &*e * x);
            }
            _ => panic!("scalar does not match matrix field"),
        }
        out
    }

    /// Kronecker product, first factor major.
    pub fn kron(&self, other: &Mat) -> Mat {
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = Mat::zeros(self.field, r1 * r2, c1 * c2);
        let cols = c1 * c2;
        match (self.field, &self.data, &other.data, &mut out.data) {
            (Field::Prime(p), Data::Fp(a), Data::Fp(b), Data::Fp(o)) => {
                let ar = ModP(p);
                for i1 in 0..r1 {
                    for j1 in 0..c1 {
                        let x = a[i1 * c1 + j1];
                        if x == 0 {
                            continue;
                        }
                        for i2 in 0..r2 {
                            for j2 in 0..c2 {
                                o[(i1 * r2 + i2) * cols + j1 * c2 + j2] =
                                    ar.mul(&x, &b[i2 * c2 + j2]);
                            }
                        }
                    }
                }
            }
            (Field::Rationals, Data::Q(a), Data::Q(b), Data::Q(o)) => {
                for i1 in 0..r1 {
                    for j1 in 0..c1 {
                        let x = &a[i1 * c1 + j1];
                        if x.is_zero() {
                            continue;
                        }
                        for i2 in 0..r2 {
                            for j2 in 0..c2 {
                                o[(i1 * r2 + i2) * cols + j1 * c2 + j2] = x * &b[i2 * c2 + j2];
                            }
                        }
                    }
                }
            }
            _ => panic!("matrices over different fields"),
        }
        out
    }

    /// `[self | other]`.
    pub fn hcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hcat row mismatch");
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    /// `self` stacked on top of `other`.
    pub fn vcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vcat column mismatch");
        let mut out = self.clone();
        out.rows += other.rows;
        match (&mut out.data, &other.data) {
            (Data::Fp(a), Data::Fp(b)) => a.extend_from_slice(b),
            (Data::Q(a), Data::Q(b)) => a.extend_from_slice(b),
            _ => panic!("matrices over different fields"),
        }
        out
    }

    /// Stack many blocks vertically; `cols` fixes the width when `blocks` is empty.
    pub fn vstack(field: Field, cols: usize, blocks: &[Mat]) -> Mat {
        let mut out = Mat::zeros(field, 0, cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            out.rows += b.rows;
            match (&mut out.data, &b.data) {
                (Data::Fp(a), Data::Fp(x)) => a.extend_from_slice(x),
                (Data::Q(a), Data::Q(x)) => a.extend_from_slice(x),
                _ => panic!("matrices over different fields"),
            }
        }
        out
    }

    /// Same row-major data read with a different shape.
    pub fn reshape(mut self, rows: usize, cols: usize) -> Mat {
        assert_eq!(rows * cols, self.rows * self.cols, "reshape size mismatch");
        self.rows = rows;
        self.cols = cols;
        self
    }

    /// Apply `self` (`out x mid`) to the middle index of `x`, whose rows are
    /// indexed by `(p, i, q)` with `p < pre`, `i < mid`, `q < post`.
    pub fn mode_apply(&self, x: &Mat, pre: usize, post: usize) -> Mat {
        let (out, mid) = (self.rows, self.cols);
        assert_eq!(x.rows, pre * mid * post, "mode_apply shape mismatch");
        let w = post * x.cols;
        let data = dispatch2!(self.field, &self.data, &x.data, |ar, a, xv| {
            mode_kernel(ar, a, xv, out, mid, pre, w)
        });
        Mat {
            field: self.field,
            rows: pre * out * post,
            cols: x.cols,
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let c = self.cols;
        let data = match &self.data {
            Data::Fp(v) => Data::Fp(
                idx.iter()
                    .flat_map(|&i| v[i * c..(i + 1) * c].iter().copied())
                    .collect(),
            ),
            Data::Q(v) => Data::Q(
                idx.iter()
                    .flat_map(|&i| v[i * c..(i + 1) * c].iter().cloned())
                    .collect(),
            ),
        };
        Mat {
            field: self.field,
            rows: idx.len(),
            cols: c,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let c = self.cols;
        let data = match &self.data {
            Data::Fp(v) => Data::Fp(
                (0..self.rows)
                    .flat_map(|i| idx.iter().map(move |&j| v[i * c + j]))
                    .collect(),
            ),
            Data::Q(v) => Data::Q(
                (0..self.rows)
                    .flat_map(|i| idx.iter().map(move |&j| v[i * c + j].clone()))
                    .collect(),
            ),
        };
        Mat {
            field: self.field,
            rows: self.rows,
            cols: idx.len(),
            data,
        }
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut out = self.clone();
        let (rows, cols) = (self.rows, self.cols);
        let pivots = dispatch!(self.field, &mut out.data, |ar, v| rref_kernel(
            ar, v, rows, cols
        ));
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.row_basis().rows
    }

    /// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
    pub fn row_basis(&self) -> Mat {
        if self.rows == 0 {
            return self.clone();
        }
        // eliminate in blocks so tall generator sets never grow past `cols` rows
        let block = self.cols.max(1) * 2;
        let mut acc = Mat::zeros(self.field, 0, self.cols);
        let mut start = 0;
        while start < self.rows {
            let end = (start + block).min(self.rows);
            let idx: Vec<usize> = (start..end).collect();
            let chunk = self.select_rows(&idx);
            let stacked = acc.vcat(&chunk);
            let (r, piv) = stacked.rref();
            let keep: Vec<usize> = (0..piv.len()).collect();
            acc = r.select_rows(&keep);
            start = end;
        }
        acc
    }

    /// Rows form a basis of `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = self.field;
        let mut out = Mat::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, f.one());
            for (pi, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.neg(&r.get(pi, fc)));
            }
        }
        out
    }

    /// Some `x` with `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "system has {} equations but right-hand side has length {}",
                self.rows,
                b.len()
            )));
        }
        let rhs = Mat::column_vector(self.field, b);
        Ok(self.solve_matrix(&rhs)?.map(|x| x.col(0)))
    }

    /// Some `X` with `self * X = b`, or `None` when any column is inconsistent.
    pub fn solve_matrix(&self, b: &Mat) -> Result<Option<Mat>> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "system has {} equations but right-hand side has {} rows",
                self.rows, b.rows
            )));
        }
        let aug = self.hcat(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(self.field, self.cols, b.cols);
        for (pi, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(pi, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    pub fn invert(&self) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = self.hcat(&Mat::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.iter().filter(|&&p| p < n).count() < n {
            return Err(Error::Singular);
        }
        let idx: Vec<usize> = (n..2 * n).collect();
        Ok(r.select_cols(&idx))
    }

    /// Left inverse of a matrix with independent columns; `None` otherwise.
    pub fn left_inverse(&self) -> Option<Mat> {
        let (_, pivots) = self.transpose().rref();
        if pivots.len() < self.cols {
            return None;
        }
        // pivot rows of `self` form an invertible square block
        let sub = self.select_rows(&pivots);
        let inv = sub.invert().ok()?;
        let mut sel = Mat::zeros(self.field, self.cols, self.rows);
        for (k, &p) in pivots.iter().enumerate() {
            sel.set(k, p, self.field.one());
        }
        Some(inv.mul(&sel))
    }

    /// Whether `v` lies in the column space.
    pub fn col_space_contains(&self, v: &[Scalar]) -> bool {
        matches!(self.solve(v), Ok(Some(_)))
    }
}

/// A quotient `k^ambient / W` with explicit projection and section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub ambient_dim: usize,
    /// Rows span `W`, in reduced echelon form.
    pub relation_basis: Mat,
    /// `ambient -> quotient`.
    pub proj: Mat,
    /// `quotient -> ambient`, a section of `proj`.
    pub sect: Mat,
}

impl QuotientPresentation {
    pub fn dim(&self) -> usize {
        self.proj.rows()
    }

    pub fn field(&self) -> Field {
        self.proj.field()
    }

    /// Columns span `W`.
    pub fn relation_cols(&self) -> Mat {
        self.relation_basis.transpose()
    }
}

/// Quotient of `k^ambient_dim` by the row span of `relations`.
///
/// The quotient basis is indexed by the non-pivot columns of the reduced
/// relation matrix; `sect` sends a class to the corresponding unit vector.
pub fn quotient(field: Field, ambient_dim: usize, relations: &Mat) -> QuotientPresentation {
    assert_eq!(relations.cols(), ambient_dim, "relation width");
    // row_basis is already reduced: pivots are the leading entries
    let basis = relations.row_basis();
    let pivots: Vec<usize> = (0..basis.rows())
        .map(|i| {
            (0..ambient_dim)
                .find(|&j| !basis.is_entry_zero(i, j))
                .expect("nonzero basis row")
        })
        .collect();
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
    let q = free.len();
    let mut proj = Mat::zeros(field, q, ambient_dim);
    let mut sect = Mat::zeros(field, ambient_dim, q);
    for (k, &fc) in free.iter().enumerate() {
        proj.set(k, fc, field.one());
        sect.set(fc, k, field.one());
        // a pivot coordinate v_p rewrites as -sum_f basis[p][f] v_f
        for (pi, &pc) in pivots.iter().enumerate() {
            proj.set(k, pc, field.neg(&basis.get(pi, fc)));
        }
    }
    QuotientPresentation {
        ambient_dim,
        relation_basis: basis,
        proj,
        sect,
    }
}

/// Sum of `coeffs[i] * mats[i]`.
pub fn combine(field: Field, coeffs: &[Scalar], mats: &[Mat]) -> Mat {
    assert_eq!(coeffs.len(), mats.len());
    let (r, c) = mats.first().map(|m| m.shape()).unwrap_or((0, 0));
    let mut acc = Mat::zeros(field, r, c);
    for (a, m) in coeffs.iter().zip(mats) {
        if !field.is_zero(a) {
            acc = acc.add(&m.scale(a));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf7() -> Field {
        Field::Prime(7)
    }

    #[test]
    fn rref_examples() {
        let f = gf7();
        let (r, p) = Mat::identity(f, 2).rref();
        assert!(r.is_identity());
        assert_eq!(p, vec![0, 1]);

        let (r, p) = Mat::zeros(f, 3, 3).rref();
        assert!(r.is_zero());
        assert!(p.is_empty());

        let (r, p) = Mat::from_i64(f, 2, 2, &[2, 4, 1, 2]).rref();
        assert_eq!(r, Mat::from_i64(f, 2, 2, &[1, 2, 0, 0]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let f = gf7();
        assert_eq!(Mat::identity(f, 4).kernel_basis().rows(), 0);
        let k = Mat::zeros(f, 2, 3).kernel_basis();
        assert_eq!(k.rows(), 3);
        assert_eq!(k.rank(), 3);
        let k = Mat::from_i64(f, 1, 2, &[1, 1]).kernel_basis();
        assert_eq!(k, Mat::from_i64(f, 1, 2, &[-1, 1]));
    }

    #[test]
    fn solve_examples() {
        let f = gf7();
        let b = vec![f.from_i64(3), f.from_i64(5)];
        assert_eq!(Mat::identity(f, 2).solve(&b).unwrap(), Some(b.clone()));
        let a = Mat::from_i64(f, 2, 2, &[1, 0, 1, 0]);
        assert_eq!(a.solve(&[f.from_i64(1), f.from_i64(2)]).unwrap(), None);
        let a = Mat::from_i64(f, 1, 1, &[2]);
        assert_eq!(a.solve(&[f.one()]).unwrap(), Some(vec![f.from_i64(4)]));
        assert!(matches!(a.solve(&b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn quotient_examples() {
        let f = gf7();
        let q = quotient(f, 3, &Mat::zeros(f, 0, 3));
        assert_eq!(q.dim(), 3);
        assert!(q.proj.is_identity());
        let q = quotient(f, 2, &Mat::identity(f, 2));
        assert_eq!(q.dim(), 0);
        let q = quotient(f, 2, &Mat::from_i64(f, 1, 2, &[1, -1]));
        assert_eq!(q.dim(), 1);
        assert_eq!(q.proj.col(0), q.proj.col(1));
    }

    #[test]
    fn kron_examples() {
        let f = gf7();
        assert!(Mat::identity(f, 2).kron(&Mat::identity(f, 3)).is_identity());
        let a = Mat::from_i64(f, 2, 3, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(a.kron(&Mat::identity(f, 1)), a);
        let x = Mat::from_i64(f, 2, 2, &[0, 1, 1, 0]);
        let mut swap = Mat::zeros(f, 4, 4);
        for (i, j) in [(0, 3), (3, 0), (1, 2), (2, 1)] {
            swap.set(i, j, f.one());
        }
        assert_eq!(x.kron(&x), swap);
    }

    #[test]
    fn invert_examples() {
        let f = Field::Rationals;
        assert!(Mat::identity(f, 3).invert().unwrap().is_identity());
        let x = Mat::from_i64(f, 2, 2, &[0, 1, 1, 0]);
        assert_eq!(x.invert().unwrap(), x);
        let u = Mat::from_i64(f, 2, 2, &[1, 1, 0, 1]);
        assert_eq!(u.invert().unwrap(), Mat::from_i64(f, 2, 2, &[1, -1, 0, 1]));
        let s = Mat::from_i64(f, 2, 2, &[1, 2, 2, 4]);
        assert_eq!(s.invert(), Err(Error::Singular));
        assert!(matches!(
            Mat::zeros(f, 2, 3).invert(),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn rational_elimination_is_exact() {
        let f = Field::Rationals;
        let a = Mat::from_i64(f, 3, 3, &[2, 1, 1, 1, 3, 2, 1, 0, 0]);
        let inv = a.invert().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
    }

    #[test]
    fn left_inverse_of_tall_matrix() {
        let f = gf7();
        let a = Mat::from_i64(f, 3, 2, &[0, 0, 1, 2, 3, 4]);
        let l = a.left_inverse().unwrap();
        assert!(l.mul(&a).is_identity());
        assert!(Mat::from_i64(f, 2, 2, &[1, 2, 2, 4])
            .left_inverse()
            .is_none());
    }
}
