use std::fmt;

use crate::field::Field;

/// Dense matrix over an exact field, row-major.
///
/// Linear maps act on column vectors: a map from a space of dimension `a`
/// to one of dimension `b` is a `b x a` matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| self.field.format(e)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            data: vec![field.zero(); rows * cols],
            field: field.clone(),
            rows,
            cols,
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Build from explicit rows; all rows must share a length.
    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { field: field.clone(), rows: n, cols, data }
    }

    pub fn from_i64_rows(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, rows, cols)
    }

    /// Columns given as vectors of length `rows`.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, x) in col.iter().enumerate() {
                m.data[r * cols + c] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        if other.cols == 0 {
            return out;
        }
        for r in 0..self.rows {
            let orow = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !f.is_zero(b) {
                        *o = f.add(o, &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, s)).collect(),
        }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, other: &Self, s: &F::Elem) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field.clone();
        if f.is_zero(s) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !f.is_zero(b) {
                *a = f.add(a, &f.mul(b, s));
            }
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(&self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.set(r0 + r, c0 + c, b.get(r, c).clone());
            }
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, idx.len(), self.cols, |r, c| self.get(idx[r], c).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, idx.len(), |r, c| self.get(r, idx[c]).clone())
    }

    /// Reduced row-echelon form.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    /// Row-reduce in place, returning pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..cols {
            if prow == rows {
                break;
            }
            let Some(sel) = (prow..rows).find(|&r| !f.is_zero(&self.data[r * cols + col])) else {
                continue;
            };
            if sel != prow {
                for c in 0..cols {
                    self.data.swap(sel * cols + c, prow * cols + c);
                }
            }
            let inv = f.inv(&self.data[prow * cols + col]).unwrap();
            for c in col..cols {
                let v = &self.data[prow * cols + c];
                if !f.is_zero(v) {
                    self.data[prow * cols + c] = f.mul(v, &inv);
                }
            }
            let pivot_row: Vec<F::Elem> = self.data[prow * cols + col..(prow + 1) * cols].to_vec();
            for r in 0..rows {
                if r == prow {
                    continue;
                }
                let factor = self.data[r * cols + col].clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let row = &mut self.data[r * cols + col..(r + 1) * cols];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !f.is_zero(p) {
                        *x = f.sub(x, &f.mul(&factor, p));
                    }
                }
            }
            pivots.push(col);
            prow += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the null space `{v : self * v = 0}`, one basis vector per row.
    pub fn kernel(&self) -> Self {
        self.null_space().transpose()
    }

    /// Basis of the null space as the columns of a `cols x k` matrix.
    pub fn null_space(&self) -> Self {
        let f = &self.field;
        let Rref { matrix: r, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Self::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, f.one());
            for (i, &pc) in pivots.iter().enumerate() {
                let v = r.get(i, fc);
                if !f.is_zero(v) {
                    out.set(pc, k, f.neg(v));
                }
            }
        }
        out
    }

    /// One particular solution `x` of `self * x = b` (column-wise), or `None`
    /// when some column of `b` lies outside the column space.
    pub fn solve(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows, "solve: row count mismatch");
        let f = &self.field;
        let aug = self.hstack(b);
        let Rref { matrix: r, pivots, .. } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(f, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(pc, c, r.get(i, self.cols + c).clone());
            }
        }
        Some(x)
    }

    pub fn solve_vec(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let bm = Self::from_columns(&self.field, self.rows, &[b.to_vec()]);
        self.solve(&bm).map(|x| x.column(0))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let r = self.hstack(&Self::identity(&self.field, n)).rref();
        if r.pivots.len() < n || r.pivots[n - 1] >= n {
            return None;
        }
        Some(r.matrix.block(0, n, n, n))
    }

    /// Indices of a maximal set of linearly independent columns (greedy, left to right).
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// A basis of the column space as the columns of a matrix.
    pub fn column_space(&self) -> Self {
        let piv = self.independent_columns();
        self.select_columns(&piv)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.pow(self.rows as u64).is_zero()
    }

    pub fn trace(&self) -> F::Elem {
        let f = &self.field;
        let mut t = f.zero();
        for i in 0..self.rows.min(self.cols) {
            t = f.add(&t, self.get(i, i));
        }
        t
    }
}

/// A subspace of `k^n` stored as an echelon basis, for fast membership and
/// reduction of vectors.
#[derive(Clone, Debug)]
pub struct RowSpace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(field: &F, ambient: usize) -> Self {
        RowSpace { field: field.clone(), ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by(field: &F, ambient: usize, vectors: impl IntoIterator<Item = Vec<F::Elem>>) -> Self {
        let mut s = Self::new(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Insert a vector; returns `true` if it enlarged the space.
    ///
    /// Pivots are taken at the first nonzero coordinate and earlier rows are
    /// kept reduced against the new pivot, so rows stay in reduced form.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.ambient);
        let f = self.field.clone();
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]).unwrap();
        for x in v.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Coordinates of `v` with respect to the stored basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = &self.field;
        let coords: Vec<F::Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (row, c) in self.rows.iter().zip(&coords) {
            if f.is_zero(c) {
                continue;
            }
            for (x, r) in w.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(c, r));
                }
            }
        }
        if w.iter().all(|x| f.is_zero(x)) {
            Some(coords)
        } else {
            None
        }
    }

    /// Basis as the columns of an `ambient x dim` matrix.
    pub fn as_columns(&self) -> Matrix<F> {
        Matrix::from_columns(&self.field, self.ambient, &self.rows)
    }
}

/// Data describing a quotient `k^n / S`: `complement` (n x q) spans a
/// complement of `S` and `projection` (q x n) has kernel `S` with
/// `projection * complement = I`.
#[derive(Clone, Debug)]
pub struct QuotientData<F: Field> {
    pub complement: Matrix<F>,
    pub projection: Matrix<F>,
}

/// Quotient data of `k^n` by the column span of `sub` (n x r).
pub fn quotient_data<F: Field>(field: &F, n: usize, sub: &Matrix<F>) -> QuotientData<F> {
    assert_eq!(sub.rows(), n);
    let space = RowSpace::spanned_by(field, n, sub.column_vectors());
    let mut is_pivot = vec![false; n];
    for &p in space.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
    let complement = Matrix::from_fn(field, n, free.len(), |r, c| if r == free[c] { field.one() } else { field.zero() });
    // projection: reduce a vector against S (pivots become zero), then read free coordinates.
    let mut projection = Matrix::zeros(field, free.len(), n);
    for j in 0..n {
        let mut e = vec![field.zero(); n];
        e[j] = field.one();
        space.reduce(&mut e);
        for (k, &fc) in free.iter().enumerate() {
            projection.set(k, j, e[fc].clone());
        }
    }
    QuotientData { complement, projection }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Matrix<Rationals> {
        Matrix::from_i64_rows(&Rationals, rows)
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(&Rationals, 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);
        let z = Matrix::zeros(&Rationals, 2, 2);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        let r = q(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.matrix, q(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(&Rationals, 3).kernel().rows(), 0);
        assert_eq!(Matrix::zeros(&Rationals, 3, 3).kernel().rows(), 3);
        let k = q(&[&[1, 2], &[2, 4]]).kernel();
        assert_eq!(k.rows(), 1);
        // proportional to (-2, 1)
        let v = k.row(0);
        let two = BigRational::from_integer(2.into());
        assert_eq!(v[0], -(&v[1] * &two));
    }

    #[test]
    fn solve_examples() {
        let b = q(&[&[5], &[7]]);
        assert_eq!(Matrix::identity(&Rationals, 2).solve(&b), Some(b.clone()));
        assert_eq!(Matrix::zeros(&Rationals, 2, 2).solve(&b), None);
        let x = q(&[&[1, 1], &[0, 1]]).solve(&q(&[&[3], &[1]])).unwrap();
        assert_eq!(x, q(&[&[2], &[1]]));
    }

    #[test]
    #[should_panic]
    fn solve_rejects_mismatch() {
        let _ = Matrix::identity(&Rationals, 2).solve(&q(&[&[1], &[2], &[3]]));
    }

    #[test]
    fn quotient_data_kills_subspace() {
        let f = PrimeField::default();
        let sub = Matrix::from_i64_rows(&f, &[&[1], &[1], &[0]]);
        let qd = quotient_data(&f, 3, &sub);
        assert!(qd.projection.mul(&sub).is_zero());
        assert_eq!(qd.projection.mul(&qd.complement), Matrix::identity(&f, 2));
    }

    fn arb_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..4, r * c)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn rank_nullity((r, c, data) in arb_matrix()) {
            let f = PrimeField::default();
            let m = Matrix::from_fn(&f, r, c, |i, j| f.from_i64(data[i * c + j]));
            let k = m.null_space();
            prop_assert_eq!(m.rank() + k.cols(), c);
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn rref_idempotent((r, c, data) in arb_matrix()) {
            let m = Matrix::from_fn(&Rationals, r, c, |i, j| Rationals.from_i64(data[i * c + j]));
            let once = m.rref().matrix;
            prop_assert_eq!(once.rref().matrix, once);
        }

        #[test]
        fn solve_is_exact((r, c, data) in arb_matrix(), xs in prop::collection::vec(-3i64..4, 6)) {
            let f = Rationals;
            let m = Matrix::from_fn(&f, r, c, |i, j| f.from_i64(data[i * c + j]));
            let x0 = Matrix::from_fn(&f, c, 1, |i, _| f.from_i64(xs[i]));
            let b = m.mul(&x0);
            let x = m.solve(&b).expect("b is in the column space by construction");
            prop_assert_eq!(m.mul(&x), b);
        }
    }
}
