//! Exact dense linear algebra over prime fields F_p.
//!
//! Matrices are stored row-major with canonical residues in `[0, p)` and all
//! arithmetic reduced eagerly. Everything above this module reduces to row
//! echelon forms, kernels and quotient data computed here.

use crate::{Error, Result};

/// A prime field F_p, validated at construction by trial division.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct FieldSpec {
    p: u64,
}

impl FieldSpec {
    pub fn new(p: u64) -> Result<Self> {
        if p > (1 << 31) {
            return Err(Error::ModulusTooLarge(p));
        }
        if p < 2 {
            return Err(Error::NonPrimeModulus(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::NonPrimeModulus(p));
            }
            d += 1;
        }
        Ok(FieldSpec { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    /// Panics on zero; callers guard pivots.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        let (mut t, mut new_t) = (0i128, 1i128);
        let (mut r, mut new_r) = (self.p as i128, a as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        (t.rem_euclid(self.p as i128)) as u64
    }

    /// Canonical residue of an arbitrary signed integer.
    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

/// Result of reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Projection/section pair presenting a quotient of an ambient column space
/// by the column span of a submatrix.
#[derive(Clone, Debug)]
pub struct QuotientData {
    /// Surjection `ambient -> quotient`; kernel is the column span of `sub`.
    pub proj: Mat,
    /// Section with `proj * section = identity` on the quotient.
    pub section: Mat,
}

/// Dense matrix over F_p, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} over F_{} [", self.rows, self.cols, self.field.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::BadMatrixData {
                len: data.len(),
                rows,
                cols,
            });
        }
        for &v in &data {
            if v >= field.modulus() {
                return Err(Error::EntryOutOfRange {
                    value: v,
                    p: field.modulus(),
                });
            }
        }
        Ok(Mat {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: FieldSpec, rows: &[Vec<u64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::BadMatrixData {
                    len: row.len(),
                    rows: r,
                    cols: c,
                });
            }
            data.extend_from_slice(row);
        }
        Mat::new(field, r, c, data)
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Column vector from a slice of residues.
    pub fn column(field: FieldSpec, entries: &[u64]) -> Result<Self> {
        Mat::new(field, entries.len(), 1, entries.to_vec())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        debug_assert!(r < self.rows && c < self.cols);
        debug_assert!(v < self.field.p);
        self.data[r * self.cols + c] = v;
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn col(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn same_field(&self, other: &Mat) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.p,
                right: other.field.p,
            });
        }
        Ok(())
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.shape_err("add", other));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Ok(Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.shape_err("sub", other));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect();
        Ok(Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: u64) -> Mat {
        let data = self.data.iter().map(|&a| self.field.mul(a, s)).collect();
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    fn shape_err(&self, op: &'static str, other: &Mat) -> Error {
        Error::ShapeMismatch {
            op,
            lrows: self.rows,
            lcols: self.cols,
            rrows: other.rows,
            rcols: other.cols,
        }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(self.shape_err("mul", other));
        }
        let p = self.field.p;
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                let src = k * other.cols;
                let dst = r * other.cols;
                for c in 0..other.cols {
                    let v = out.data[dst + c] + a * other.data[src + c] % p;
                    out.data[dst + c] = if v >= p { v - p } else { v };
                }
            }
        }
        Ok(out)
    }

    /// Matrix applied to a coordinate vector.
    pub fn apply(&self, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch {
                op: "apply",
                lrows: self.rows,
                lcols: self.cols,
                rrows: v.len(),
                rcols: 1,
            });
        }
        let p = self.field.p;
        let mut out = vec![0u64; self.rows];
        for r in 0..self.rows {
            let mut acc = 0u64;
            for c in 0..self.cols {
                acc = (acc + self.data[r * self.cols + c] * v[c]) % p;
            }
            out[r] = acc;
        }
        Ok(out)
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Mat) -> Result<Mat> {
        self.same_field(other)?;
        let mut out = Mat::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c));
            }
        }
        Ok(out)
    }

    /// Kronecker product; shape `(rA*rB) x (cA*cB)` with index `(i*rB+k, j*cB+l)`.
    pub fn kronecker(&self, other: &Mat) -> Result<Mat> {
        self.same_field(other)?;
        let mut out = Mat::zeros(
            self.field,
            self.rows * other.rows,
            self.cols * other.cols,
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let v = self.field.mul(a, other.get(k, l));
                        out.set(i * other.rows + k, j * other.cols + l, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(self.shape_err("hstack", other));
        }
        let mut out = Mat::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(self.shape_err("vstack", other));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Matrix whose columns are the given subset of `self`'s columns.
    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows, idx.len());
        for (k, &c) in idx.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, k, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form with rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let p = m.field.p;
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for pc in 0..m.cols {
            if pr >= m.rows {
                break;
            }
            // find pivot
            let mut piv = None;
            for r in pr..m.rows {
                if m.get(r, pc) != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            // swap rows
            if piv != pr {
                for c in 0..m.cols {
                    let a = m.get(pr, c);
                    let b = m.get(piv, c);
                    m.set(pr, c, b);
                    m.set(piv, c, a);
                }
            }
            // normalize
            let inv = m.field.inv(m.get(pr, pc));
            if inv != 1 {
                for c in pc..m.cols {
                    let v = m.field.mul(m.get(pr, c), inv);
                    m.set(pr, c, v);
                }
            }
            // eliminate everywhere else
            for r in 0..m.rows {
                if r == pr {
                    continue;
                }
                let f = m.get(r, pc);
                if f == 0 {
                    continue;
                }
                let src = pr * m.cols;
                let dst = r * m.cols;
                for c in pc..m.cols {
                    let v = (m.data[dst + c] + (p - f) * m.data[src + c]) % p;
                    m.data[dst + c] = v;
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        Rref {
            rank: pivots.len(),
            pivots,
            reduced: m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the null space: columns are independent, `self * out = 0`,
    /// and the column count is `cols - rank`.
    pub fn kernel_basis(&self) -> Mat {
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = Some(i);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| pivot_set[*c].is_none()).collect();
        let mut out = Mat::zeros(self.field, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                let v = reduced.get(i, fc);
                out.set(pc, k, self.field.neg(v));
            }
        }
        out
    }

    /// Basis of the column space: the pivot columns of `self`.
    pub fn column_space_basis(&self) -> Mat {
        let piv = self.rref().pivots;
        self.select_cols(&piv)
    }

    /// Solve `self * X = rhs` for all columns at once; `None` if inconsistent.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        if self.rows != rhs.rows || self.field != rhs.field {
            return None;
        }
        let aug = self.hstack(rhs).expect("hstack after shape check");
        let Rref { reduced, pivots, .. } = aug.rref();
        // inconsistent if a pivot lands in the rhs block
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.field, self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, reduced.get(i, self.cols + c));
            }
        }
        // rref may leave free variables at zero; verify the candidate.
        let check = self.mul(&x).expect("mul after shape check");
        if &check == rhs {
            Some(x)
        } else {
            None
        }
    }

    /// Projection and section presenting `ambient / colspan(sub)`.
    ///
    /// `proj` is surjective with kernel exactly the column span of `sub`,
    /// `proj * section` is the identity on the quotient, and a chosen-basis
    /// convention is fixed once: quotient coordinates are the non-pivot
    /// ambient coordinates of the row-reduced subspace basis.
    pub fn quotient_data(field: FieldSpec, ambient: usize, sub: &Mat) -> Result<QuotientData> {
        if sub.rows != ambient {
            return Err(Error::ShapeMismatch {
                op: "quotient_data",
                lrows: ambient,
                lcols: ambient,
                rrows: sub.rows,
                rcols: sub.cols,
            });
        }
        if sub.field != field {
            return Err(Error::FieldMismatch {
                left: field.p,
                right: sub.field.p,
            });
        }
        let Rref {
            reduced, pivots, ..
        } = sub.transpose().rref();
        // pivots index ambient coordinates spanned "leading" by the subspace
        let in_pivots = {
            let mut v = vec![false; ambient];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let free: Vec<usize> = (0..ambient).filter(|c| !in_pivots[*c]).collect();
        let q = free.len();
        let mut proj = Mat::zeros(field, q, ambient);
        for (k, &fc) in free.iter().enumerate() {
            proj.set(k, fc, 1);
        }
        // reducing e_{pivot_i} by row i of the reduced basis leaves -row_i on
        // the free coordinates
        for (i, &pc) in pivots.iter().enumerate() {
            for (k, &fc) in free.iter().enumerate() {
                proj.set(k, pc, field.neg(reduced.get(i, fc)));
            }
        }
        let mut section = Mat::zeros(field, ambient, q);
        for (k, &fc) in free.iter().enumerate() {
            section.set(fc, k, 1);
        }
        Ok(QuotientData { proj, section })
    }

    /// Whether the columns of `sub` all lie in the column span of `space`.
    pub fn contains_columns(space: &Mat, sub: &Mat) -> bool {
        if space.rows != sub.rows {
            return false;
        }
        let r0 = space.rank();
        let joint = space.hstack(sub).expect("hstack");
        joint.rank() == r0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn field_rejects_composites() {
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(91).is_err()); // 7 * 13
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(97).is_ok());
    }

    #[test]
    fn field_inverse() {
        let f5 = f(5);
        for a in 1..5 {
            assert_eq!(f5.mul(a, f5.inv(a)), 1);
        }
    }

    #[test]
    fn rref_identity_case() {
        let id = Mat::identity(f(5), 2);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_zero_case() {
        let z = Mat::zeros(f(7), 3, 4);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one_hand_oracle() {
        // hand row-reduction over F_5: [[1,2],[2,4]] -> [[1,2],[0,0]]
        let m = Mat::from_rows(f(5), &[vec![1, 2], vec![2, 4]]).unwrap();
        let r = m.rref();
        assert_eq!(
            r.reduced,
            Mat::from_rows(f(5), &[vec![1, 2], vec![0, 0]]).unwrap()
        );
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_identity_and_zero() {
        let id = Mat::identity(f(5), 3);
        assert_eq!(id.kernel_basis().cols(), 0);
        let z = Mat::zeros(f(5), 4, 4);
        let k = z.kernel_basis();
        assert_eq!(k.cols(), 4);
        assert_eq!(k.rank(), 4);
    }

    #[test]
    fn kernel_matches_enumeration_oracle() {
        // enumerate all 25 vectors over F_5 and keep those mapped to zero
        let m = Mat::from_rows(f(5), &[vec![1, 2], vec![2, 4]]).unwrap();
        let mut brute = Vec::new();
        for x in 0..5u64 {
            for y in 0..5u64 {
                if m.apply(&[x, y]).unwrap().iter().all(|&v| v == 0) {
                    brute.push(vec![x, y]);
                }
            }
        }
        assert_eq!(brute.len(), 5); // one-dimensional kernel
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).unwrap().is_zero());
        // (3, 1) is in the enumerated kernel and spans it
        assert!(brute.contains(&vec![3, 1]));
        let span = k.hstack(&Mat::column(f(5), &[3, 1]).unwrap()).unwrap();
        assert_eq!(span.rank(), 1);
    }

    #[test]
    fn quotient_by_full_space_and_zero() {
        let f2 = f(2);
        let full = Mat::identity(f2, 3);
        let q = Mat::quotient_data(f2, 3, &full).unwrap();
        assert_eq!(q.proj.rows(), 0);
        let none = Mat::zeros(f2, 3, 0);
        let q = Mat::quotient_data(f2, 3, &none).unwrap();
        assert_eq!(q.proj, Mat::identity(f2, 3));
    }

    #[test]
    fn quotient_rank_oracle() {
        // ambient F_2^3, sub = span{(1,1,0)}
        let f2 = f(2);
        let sub = Mat::column(f2, &[1, 1, 0]).unwrap();
        let q = Mat::quotient_data(f2, 3, &sub).unwrap();
        assert_eq!(q.proj.rows(), 2);
        assert!(q.proj.mul(&sub).unwrap().is_zero());
        assert_eq!(q.proj.rank(), 2);
        let id = q.proj.mul(&q.section).unwrap();
        assert_eq!(id, Mat::identity(f2, 2));
    }

    #[test]
    fn solve_identity_and_singular() {
        let f5 = f(5);
        let id = Mat::identity(f5, 3);
        let b = Mat::column(f5, &[1, 4, 2]).unwrap();
        assert_eq!(id.solve(&b).unwrap(), b);
        let m = Mat::from_rows(f5, &[vec![1, 2], vec![2, 4]]).unwrap();
        // (1, 0) is not in the column space
        assert!(m.solve(&Mat::column(f5, &[1, 0]).unwrap()).is_none());
        // consistent system
        let b = Mat::column(f5, &[3, 6 % 5]).unwrap();
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul(&x).unwrap(), b);
    }

    #[test]
    fn kronecker_and_direct_sum_shapes() {
        let f5 = f(5);
        let a = Mat::from_rows(f5, &[vec![3]]).unwrap();
        let b = Mat::from_rows(f5, &[vec![4]]).unwrap();
        assert_eq!(a.kronecker(&b).unwrap().get(0, 0), 2); // 3*4 = 12 = 2 mod 5
        let m2 = Mat::identity(f5, 2);
        let m3 = Mat::identity(f5, 3);
        let s = m2.direct_sum(&m3).unwrap();
        assert_eq!((s.rows(), s.cols()), (5, 5));
        assert_eq!(s, Mat::identity(f5, 5));
    }

    #[test]
    fn shape_mismatch_is_an_error_value() {
        let f5 = f(5);
        let a = Mat::zeros(f5, 2, 3);
        let b = Mat::zeros(f5, 2, 3);
        assert!(matches!(a.mul(&b), Err(Error::ShapeMismatch { .. })));
        let f7 = f(7);
        let c = Mat::zeros(f7, 3, 3);
        assert!(matches!(a.mul(&c), Err(Error::FieldMismatch { .. })));
    }
}
