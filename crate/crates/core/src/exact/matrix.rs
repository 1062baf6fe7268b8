use super::{Rational, Scalar};

/// Dense matrix over an exact scalar field, row major.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// The workhorse instantiation: matrices over ℚ.
pub type QMatrix = ExactMatrix<Rational>;

impl<T: Scalar> std::fmt::Debug for ExactMatrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| format!("{:?}", self.at(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> ExactMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows_data: Vec<Vec<T>>) -> Self {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |r| r.len());
        for r in &rows_data {
            assert_eq!(r.len(), cols, "ragged rows");
        }
        Self { rows, cols, data: rows_data.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c).add(other.at(r, c)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c).sub(other.at(r, c)))
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c).mul(s))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Kronecker product, used to form tensor-product actions.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.at(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.at(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn from_columns(rows: usize, cols_data: Vec<Vec<T>>) -> Self {
        let cols = cols_data.len();
        let mut m = Self::zeros(rows, cols);
        for (c, col) in cols_data.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for c in 0..self.cols {
                    if !self.at(r, c).is_zero() && !v[c].is_zero() {
                        acc = acc.add(&self.at(r, c).mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    fn to_sparse_rows(&self) -> Vec<Vec<(usize, T)>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| !self.at(r, c).is_zero())
                    .map(|c| (c, self.at(r, c).clone()))
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        rref(self.to_sparse_rows(), self.cols).pivots.len()
    }

    /// Basis of the null space, as matrix columns. M * kernel(M) = 0.
    pub fn kernel(&self) -> Self {
        let red = rref(self.to_sparse_rows(), self.cols);
        let pivot_cols: Vec<usize> = red.pivots.iter().map(|p| p.0).collect();
        let free_cols: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut out = Self::zeros(self.cols, free_cols.len());
        for (k, &fc) in free_cols.iter().enumerate() {
            out.set(fc, k, T::one());
            for (pc, row) in &red.pivots {
                if let Some((_, v)) = row.iter().find(|(c, _)| *c == fc) {
                    out.set(*pc, k, v.neg());
                }
            }
        }
        out
    }

    /// Surjection from the target space onto a complement of the column
    /// space, together with the cokernel dimension.
    pub fn cokernel_projection(&self) -> (Self, usize) {
        let red = rref(self.transpose().to_sparse_rows(), self.rows);
        let pivot_cols: Vec<usize> = red.pivots.iter().map(|p| p.0).collect();
        let free: Vec<usize> = (0..self.rows).filter(|c| !pivot_cols.contains(c)).collect();
        // class of e_t: subtract pivot rows to zero the pivot coordinates,
        // read off the free coordinates
        let mut proj = Self::zeros(free.len(), self.rows);
        for (k, &fk) in free.iter().enumerate() {
            proj.set(k, fk, T::one());
        }
        // class of e_{pc} is minus the free part of its pivot row
        for (pc, row) in &red.pivots {
            for (c, v) in row {
                if let Some(k) = free.iter().position(|f| f == c) {
                    proj.set(k, *pc, proj.at(k, *pc).sub(v));
                }
            }
        }
        (proj, free.len())
    }

    /// Solve self * X = rhs exactly; None if inconsistent.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        // augmented RREF
        let mut rows = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row: Vec<(usize, T)> = (0..self.cols)
                .filter(|&c| !self.at(r, c).is_zero())
                .map(|c| (c, self.at(r, c).clone()))
                .collect();
            for c in 0..rhs.cols {
                if !rhs.at(r, c).is_zero() {
                    row.push((self.cols + c, rhs.at(r, c).clone()));
                }
            }
            rows.push(row);
        }
        let red = rref(rows, self.cols + rhs.cols);
        let mut x = Self::zeros(self.cols, rhs.cols);
        for (pc, row) in &red.pivots {
            if *pc >= self.cols {
                return None; // pivot in the rhs block: inconsistent
            }
            for (c, v) in row {
                if *c >= self.cols {
                    x.set(*pc, c - self.cols, v.clone());
                }
            }
            // free columns of self stay zero: particular solution
        }
        Some(x)
    }

    /// Inverse of a square matrix; None if singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let inv = self.solve(&Self::identity(self.rows))?;
        if self.mul(&inv) == Self::identity(self.rows) {
            Some(inv)
        } else {
            None
        }
    }
}

pub(crate) struct Rref<T> {
    /// (pivot column, fully reduced row with unit pivot), sorted by pivot column.
    pub pivots: Vec<(usize, Vec<(usize, T)>)>,
}

/// Sparse reduced row echelon form. Pivoting picks the first nonzero
/// entry of each row, per the exact-pivoting design rule. Stored pivot
/// rows are kept fully reduced: unit pivot, zero at every other pivot
/// column.
pub(crate) fn rref<T: Scalar>(rows: Vec<Vec<(usize, T)>>, ncols: usize) -> Rref<T> {
    let _ = ncols;
    let mut pivots: Vec<(usize, Vec<(usize, T)>)> = Vec::new();
    for row in rows {
        let mut cur = row;
        cur.sort_by_key(|(c, _)| *c);
        loop {
            cur.retain(|(_, v)| !v.is_zero());
            if cur.is_empty() {
                break;
            }
            // eliminate the first entry that sits in an existing pivot column
            let mut hit = None;
            for (c, v) in &cur {
                if let Ok(idx) = pivots.binary_search_by_key(c, |p| p.0) {
                    hit = Some((idx, v.clone()));
                    break;
                }
            }
            match hit {
                Some((idx, factor)) => {
                    let prow = pivots[idx].1.clone();
                    cur = sparse_axpy(&cur, &prow, &factor.neg());
                }
                None => {
                    // fully reduced nonzero row: new pivot at its lead
                    let lead = cur[0].0;
                    let inv = cur[0].1.inv();
                    for (_, v) in cur.iter_mut() {
                        *v = v.mul(&inv);
                    }
                    for (_, prow) in pivots.iter_mut() {
                        if let Some((_, f)) = prow.iter().find(|(c, _)| *c == lead) {
                            let f = f.clone();
                            *prow = sparse_axpy(prow, &cur, &f.neg());
                        }
                    }
                    let idx = pivots.binary_search_by_key(&lead, |p| p.0).unwrap_err();
                    pivots.insert(idx, (lead, cur));
                    break;
                }
            }
        }
    }
    Rref { pivots }
}

/// target + factor * source, both sorted sparse rows.
fn sparse_axpy<T: Scalar>(target: &[(usize, T)], source: &[(usize, T)], factor: &T) -> Vec<(usize, T)> {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        if j >= source.len() || (i < target.len() && target[i].0 < source[j].0) {
            out.push(target[i].clone());
            i += 1;
        } else if i >= target.len() || source[j].0 < target[i].0 {
            let v = source[j].1.mul(factor);
            if !v.is_zero() {
                out.push((source[j].0, v));
            }
            j += 1;
        } else {
            let v = target[i].1.add(&source[j].1.mul(factor));
            if !v.is_zero() {
                out.push((target[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{q, qr};
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> QMatrix {
        QMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect())
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(m(vec![vec![1, 0], vec![0, 1]]).kernel().cols(), 0);
        assert_eq!(m(vec![vec![0, 0, 0], vec![0, 0, 0]]).kernel().cols(), 3);
        let k = m(vec![vec![1, 1], vec![1, 1]]).kernel();
        assert_eq!(k.cols(), 1);
        // spanned by (1, -1)
        let ratio = k.at(0, 0).clone() + k.at(1, 0).clone();
        assert!(super::super::Scalar::is_zero(&ratio));
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = m(vec![vec![2, 4, -2, 0], vec![1, 2, 0, 3], vec![3, 6, -2, 3]]);
        let k = a.kernel();
        assert_eq!(a.rank() + k.cols(), a.cols());
        assert!(a.mul(&k).is_zero_matrix());
    }

    #[test]
    fn cokernel_examples() {
        let (_, d) = m(vec![vec![1, 0], vec![0, 1]]).cokernel_projection();
        assert_eq!(d, 0);
        let (p, d) = QMatrix::zeros(4, 2).cokernel_projection();
        assert_eq!(d, 4);
        assert_eq!(p.rows(), 4);
        // rank-1 map into 2-dim space
        let a = m(vec![vec![1], vec![1]]);
        let (p, d) = a.cokernel_projection();
        assert_eq!(d, 1);
        assert!(p.mul(&a).is_zero_matrix());
    }

    #[test]
    fn cokernel_projection_annihilates_and_surjects() {
        let a = m(vec![vec![1, 2], vec![2, 4], vec![0, 1]]);
        let (p, d) = a.cokernel_projection();
        assert_eq!(d, 3 - a.rank());
        assert!(p.mul(&a).is_zero_matrix());
        assert_eq!(p.rank(), d);
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(vec![vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), QMatrix::identity(2));
        assert_eq!(inv.mul(&a), QMatrix::identity(2));
        assert_eq!(*inv.at(0, 0), q(1));
        assert_eq!(*inv.at(0, 1), q(-1));
        // inconsistent system
        let b = m(vec![vec![1, 1], vec![1, 1]]);
        assert!(b.solve(&m(vec![vec![1], vec![0]])).is_none());
        // consistent underdetermined
        let c = m(vec![vec![1, 1]]);
        let x = c.solve(&m(vec![vec![5]])).unwrap();
        assert_eq!(c.mul(&x), m(vec![vec![5]]));
        assert!(m(vec![vec![0, 1], vec![0, 2]]).inverse().is_none());
    }

    #[test]
    fn rational_pivots_divide_exactly() {
        let a = QMatrix::from_rows(vec![
            vec![qr(1, 2), qr(1, 3)],
            vec![qr(1, 5), qr(2, 7)],
        ]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), QMatrix::identity(2));
    }

    #[test]
    fn minpoly_at_companion_matrix_vanishes() {
        // Psi_n evaluated at the companion matrix of delta is zero
        for n in [3u32, 4, 5, 6, 7, 12] {
            let psi = super::super::minpoly_delta(n).unwrap();
            let d = psi.len() - 1;
            let mut comp = QMatrix::zeros(d, d);
            for i in 1..d {
                comp.set(i, i - 1, q(1));
            }
            for i in 0..d {
                comp.set(i, d - 1, -Rational::from_integer(psi[i].clone()));
            }
            let mut acc = QMatrix::zeros(d, d);
            let mut power = QMatrix::identity(d);
            for c in &psi {
                acc = acc.add(&power.scale(&Rational::from_integer(c.clone())));
                power = power.mul(&comp);
            }
            assert!(acc.is_zero_matrix(), "Psi_{n}(companion) must vanish");
        }
    }
}
