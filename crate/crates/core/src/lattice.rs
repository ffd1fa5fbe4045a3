//! Exact integer linear algebra over finitely generated abelian groups.
//!
//! The central computation is the Smith normal form `U * A * V = S` with
//! `U`, `V` unimodular and `S` diagonal with a divisibility chain along the
//! diagonal. Cokernels of integer matrices read off directly from `S`, which
//! is how grading groups are presented everywhere else in the crate.
//!
//! All arithmetic is on arbitrary-precision integers. SNF pivots can grow
//! exponentially in the input size, so fixed-width arithmetic is not an
//! option here.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
        }
        let nrows = rows.len();
        IntMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row\[dst\] += q * row\[src\]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let p = q * &self[(src, j)];
            self[(dst, j)] += p;
        }
    }

    /// col\[dst\] += q * col\[src\]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let p = q * &self[(i, src)];
            self[(i, dst)] += p;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    // exact by the Bareiss identity
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Smith normal form decomposition: `u * a * v = s`.
#[derive(Clone, Debug)]
pub struct Snf {
    /// Unimodular row transform.
    pub u: IntMatrix,
    /// Diagonal matrix with nonnegative entries `d_1 | d_2 | ...`.
    pub s: IntMatrix,
    /// Unimodular column transform.
    pub v: IntMatrix,
}

impl Snf {
    /// Diagonal entries `d_1, ..., d_min(rows,cols)`, including any zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }
}

/// Computes the Smith normal form of an arbitrary integer matrix.
///
/// Classical pivoting: move the entry of smallest absolute value into the
/// pivot position, reduce its row and column by division with remainder, and
/// repeat until the pivot divides everything; a final sweep folds any
/// non-divisible entry of the remaining block into the pivot row, which
/// enforces the divisibility chain.
pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let mut s = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let steps = a.rows().min(a.cols());

    for t in 0..steps {
        if !move_min_pivot(&mut s, &mut u, &mut v, t) {
            break; // remaining block is zero
        }
        loop {
            let mut dirty = false;
            for i in t + 1..s.rows() {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&s[(i, t)] / &s[(t, t)]);
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !s[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..s.cols() {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&s[(t, j)] / &s[(t, t)]);
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !s[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // leftover remainders are strictly smaller than the pivot
                move_min_pivot(&mut s, &mut u, &mut v, t);
                continue;
            }
            // pivot row/column clear; enforce d_t | (every remaining entry)
            let offender = (t + 1..s.rows())
                .flat_map(|i| (t + 1..s.cols()).map(move |j| (i, j)))
                .find(|&(i, j)| !(&s[(i, j)] % &s[(t, t)]).is_zero());
            match offender {
                Some((i, _)) => {
                    s.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    Snf { u, s, v }
}

/// Swaps the entry of smallest absolute value of `s[t.., t..]` into `(t, t)`.
/// Returns false when the block is all zero.
fn move_min_pivot(s: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) -> bool {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            if s[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some(b) if s[b].abs() <= s[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    let Some((i, j)) = best else { return false };
    s.swap_rows(t, i);
    u.swap_rows(t, i);
    s.swap_cols(t, j);
    v.swap_cols(t, j);
    true
}

/// A finitely generated abelian group in invariant-factor form:
/// `Z^rank + Z/m_1 + ... + Z/m_k` with `2 <= m_1 | m_2 | ... | m_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgAbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        let two = BigInt::from(2);
        for w in torsion.windows(2) {
            if !(&w[1] % &w[0]).is_zero() {
                return Err(Error::InvalidTorsion);
            }
        }
        if torsion.iter().any(|m| m < &two) {
            return Err(Error::InvalidTorsion);
        }
        Ok(FgAbelianGroup { rank, torsion })
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank == 0 && self.torsion.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.rank == 1 {
            parts.push("Z".to_string());
        } else if self.rank > 1 {
            parts.push(format!("Z^{}", self.rank));
        }
        for m in &self.torsion {
            parts.push(format!("Z/{}", m));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// An element of a finitely generated abelian group, split into its free
/// coordinates and its torsion residues. The `i`-th residue is reduced
/// modulo the `i`-th torsion invariant of the owning group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeVector {
    free: Vec<BigInt>,
    torsion: Vec<BigInt>,
}

impl DegreeVector {
    pub fn new(group: &FgAbelianGroup, free: Vec<BigInt>, torsion: Vec<BigInt>) -> Result<Self> {
        if free.len() != group.rank() {
            return Err(Error::ShapeMismatch {
                expected: group.rank(),
                got: free.len(),
            });
        }
        if torsion.len() != group.torsion().len() {
            return Err(Error::ShapeMismatch {
                expected: group.torsion().len(),
                got: torsion.len(),
            });
        }
        let torsion = torsion
            .into_iter()
            .zip(group.torsion())
            .map(|(t, m)| t.mod_floor(m))
            .collect();
        Ok(DegreeVector { free, torsion })
    }

    pub fn zero(group: &FgAbelianGroup) -> Self {
        DegreeVector {
            free: vec![BigInt::zero(); group.rank()],
            torsion: vec![BigInt::zero(); group.torsion().len()],
        }
    }

    pub fn from_free(group: &FgAbelianGroup, free: Vec<BigInt>) -> Result<Self> {
        let torsion = vec![BigInt::zero(); group.torsion().len()];
        DegreeVector::new(group, free, torsion)
    }

    pub fn free_part(&self) -> &[BigInt] {
        &self.free
    }

    pub fn torsion_part(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(Zero::is_zero)
    }

    /// Sum in the group; both operands must belong to `group`.
    pub fn add(&self, other: &DegreeVector, group: &FgAbelianGroup) -> Result<DegreeVector> {
        if self.free.len() != other.free.len() || self.torsion.len() != other.torsion.len() {
            return Err(Error::ShapeMismatch {
                expected: self.free.len(),
                got: other.free.len(),
            });
        }
        let free = self
            .free
            .iter()
            .zip(&other.free)
            .map(|(a, b)| a + b)
            .collect();
        let torsion = self
            .torsion
            .iter()
            .zip(&other.torsion)
            .map(|(a, b)| a + b)
            .collect();
        DegreeVector::new(group, free, torsion)
    }
}

/// Cokernel of an integer matrix `a`: the group `Z^rows / im(a)` in
/// invariant-factor form, together with the classes of the standard basis
/// vectors of the ambient `Z^rows`. The columns of `a` are the relations.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub group: FgAbelianGroup,
    /// `degrees[i]` is the class of `e_i`.
    pub degrees: Vec<DegreeVector>,
}

pub fn cokernel(a: &IntMatrix) -> Cokernel {
    let snf = smith_normal_form(a);
    let n = a.rows();
    let diag = snf.diagonal();
    let entry = |i: usize| -> BigInt {
        diag.get(i).cloned().unwrap_or_else(BigInt::zero)
    };

    // Coordinates of Z^n / im(S): d_i = 1 contributes nothing, d_i >= 2 a
    // torsion factor, d_i = 0 (or missing) a free factor. The SNF chain
    // already lists torsion invariants in divisibility order.
    let mut torsion_coords = Vec::new();
    let mut free_coords = Vec::new();
    for i in 0..n {
        let d = entry(i);
        if d.is_zero() {
            free_coords.push(i);
        } else if !d.is_one() {
            torsion_coords.push(i);
        }
    }
    let torsion: Vec<BigInt> = torsion_coords.iter().map(|&i| entry(i)).collect();
    let group = FgAbelianGroup::new(free_coords.len(), torsion)
        .expect("SNF diagonal is a divisibility chain");

    // Class of e_j reads off from column j of U, since x -> U x identifies
    // Z^n / im(A) with Z^n / im(S).
    let degrees = (0..n)
        .map(|j| {
            let free = free_coords.iter().map(|&i| snf.u[(i, j)].clone()).collect();
            let tors = torsion_coords
                .iter()
                .map(|&i| snf.u[(i, j)].clone())
                .collect();
            DegreeVector::new(&group, free, tors).expect("coordinate counts match")
        })
        .collect();

    Cokernel { group, degrees }
}

/// Applies the cokernel projection to an arbitrary vector of `Z^rows`.
pub fn project_to_cokernel(coker: &Cokernel, v: &[BigInt]) -> Result<DegreeVector> {
    if v.len() != coker.degrees.len() {
        return Err(Error::ShapeMismatch {
            expected: coker.degrees.len(),
            got: v.len(),
        });
    }
    let mut acc = DegreeVector::zero(&coker.group);
    for (c, d) in v.iter().zip(&coker.degrees) {
        let scaled = DegreeVector::new(
            &coker.group,
            d.free_part().iter().map(|x| c * x).collect(),
            d.torsion_part().iter().map(|x| c * x).collect(),
        )?;
        acc = acc.add(&scaled, &coker.group)?;
    }
    Ok(acc)
}

/// Rank over the rationals of a list of integer row vectors.
pub fn rank_of_rows(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut rank = 0;
    for j in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][j].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        // integer cross-multiplication elimination keeps everything exact
        let pivot = m[rank][j].clone();
        for i in 0..m.len() {
            if i == rank || m[i][j].is_zero() {
                continue;
            }
            let factor = m[i][j].clone();
            for k in 0..cols {
                let val = &m[i][k] * &pivot - &factor * &m[rank][k];
                m[i][k] = val;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Dimension of the rational span of the free parts of the given degrees.
/// Torsion parts are ignored. All vectors must share the same shape.
pub fn rank_of_span(vectors: &[DegreeVector]) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    let free_len = vectors[0].free_part().len();
    let tors_len = vectors[0].torsion_part().len();
    for v in vectors {
        if v.free_part().len() != free_len {
            return Err(Error::ShapeMismatch {
                expected: free_len,
                got: v.free_part().len(),
            });
        }
        if v.torsion_part().len() != tors_len {
            return Err(Error::ShapeMismatch {
                expected: tors_len,
                got: v.torsion_part().len(),
            });
        }
    }
    let rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| v.free_part().to_vec()).collect();
    Ok(rank_of_rows(&rows))
}

/// Basis of the integer kernel `{ x : a * x = 0 }`, as columns.
///
/// The kernel of `a` equals `V * ker(S)`, and `ker(S)` is spanned by the
/// standard basis vectors whose diagonal entry is zero or absent.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let mut basis = Vec::new();
    for j in 0..a.cols() {
        let d = diag.get(j).cloned().unwrap_or_else(BigInt::zero);
        if d.is_zero() {
            basis.push(snf.v.column(j));
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn assert_snf_valid(a: &IntMatrix) {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.s, "U*A*V != S");
        let du = snf.u.determinant();
        let dv = snf.v.determinant();
        assert!(du.abs().is_one(), "U not unimodular: det {du}");
        assert!(dv.abs().is_one(), "V not unimodular: det {dv}");
        let diag = snf.diagonal();
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    assert!(snf.s[(i, j)].is_zero(), "off-diagonal entry");
                }
            }
        }
        for w in diag.windows(2) {
            assert!(!w[0].is_negative() && !w[1].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zero before nonzero in the chain");
            } else {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility violated");
            }
        }
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(2);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.u, IntMatrix::identity(2));
        assert_eq!(snf.s, IntMatrix::identity(2));
        assert_eq!(snf.v, IntMatrix::identity(2));
    }

    #[test]
    fn snf_two_by_two() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8
        let a = m(&[&[2, 4], &[6, 8]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        assert_snf_valid(&a);
    }

    #[test]
    fn snf_wide() {
        let a = m(&[&[2, 3]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.diagonal(), vec![BigInt::one()]);
        assert!(snf.s[(0, 1)].is_zero());
        assert!(snf.v.determinant().abs().is_one());
        assert_snf_valid(&a);
    }

    #[test]
    fn cokernel_blowup_relations() {
        // relation columns (1,0,-1,1) and (0,1,-1,1) inside Z^4
        let a = m(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]);
        let coker = cokernel(&a);
        assert_eq!(coker.group, FgAbelianGroup::free(2));
        // every relation must die in the quotient
        for j in 0..a.cols() {
            let p = project_to_cokernel(&coker, &a.column(j)).unwrap();
            assert!(p.is_zero());
        }
        // degree configuration has the expected matroid: x,y parallel,
        // all other pairs independent
        let d = &coker.degrees;
        assert_eq!(rank_of_span(&[d[0].clone(), d[1].clone()]).unwrap(), 1);
        for (i, j) in [(0, 2), (0, 3), (2, 3), (1, 2), (1, 3)] {
            assert_eq!(rank_of_span(&[d[i].clone(), d[j].clone()]).unwrap(), 2);
        }
    }

    #[test]
    fn cokernel_rank_one() {
        let a = m(&[&[1], &[-1]]);
        let coker = cokernel(&a);
        assert_eq!(coker.group, FgAbelianGroup::free(1));
        let d0 = &coker.degrees[0];
        let d1 = &coker.degrees[1];
        assert_eq!(d0, d1, "both classes map to the same generator");
        assert!(!d0.is_zero());
    }

    #[test]
    fn cokernel_zero_map() {
        let a = IntMatrix::zeros(2, 0);
        let coker = cokernel(&a);
        assert_eq!(coker.group, FgAbelianGroup::free(2));
        assert_eq!(
            coker.degrees[0].free_part(),
            &[BigInt::one(), BigInt::zero()]
        );
        assert_eq!(
            coker.degrees[1].free_part(),
            &[BigInt::zero(), BigInt::one()]
        );
    }

    #[test]
    fn cokernel_with_torsion() {
        // Z^2 / <(2,0)> = Z + Z/2
        let a = m(&[&[2], &[0]]);
        let coker = cokernel(&a);
        assert_eq!(coker.group.rank(), 1);
        assert_eq!(coker.group.torsion(), &[BigInt::from(2)]);
    }

    #[test]
    fn rank_of_span_examples() {
        let g = FgAbelianGroup::free(2);
        let v = |a: i64, b: i64| {
            DegreeVector::from_free(&g, vec![BigInt::from(a), BigInt::from(b)]).unwrap()
        };
        assert_eq!(rank_of_span(&[v(1, 0), v(1, 0)]).unwrap(), 1);
        assert_eq!(rank_of_span(&[v(1, 0), v(1, 1)]).unwrap(), 2);
        assert_eq!(rank_of_span(&[]).unwrap(), 0);
    }

    #[test]
    fn rank_of_span_shape_error() {
        let g1 = FgAbelianGroup::free(1);
        let g2 = FgAbelianGroup::free(2);
        let a = DegreeVector::from_free(&g1, vec![BigInt::one()]).unwrap();
        let b = DegreeVector::from_free(&g2, vec![BigInt::one(), BigInt::zero()]).unwrap();
        assert!(matches!(
            rank_of_span(&[a, b]),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn degree_vector_reduces_torsion() {
        let g = FgAbelianGroup::new(1, vec![BigInt::from(2)]).unwrap();
        let d = DegreeVector::new(&g, vec![BigInt::from(3)], vec![BigInt::from(-1)]).unwrap();
        assert_eq!(d.torsion_part(), &[BigInt::one()]);
    }

    #[test]
    fn torsion_chain_rejected() {
        assert!(FgAbelianGroup::new(0, vec![BigInt::from(2), BigInt::from(3)]).is_err());
        assert!(FgAbelianGroup::new(0, vec![BigInt::one()]).is_err());
        assert!(FgAbelianGroup::new(1, vec![BigInt::from(2), BigInt::from(6)]).is_ok());
    }

    #[test]
    fn integer_kernel_of_grading() {
        // degrees of the blown-up plane as a 2x4 matrix; kernel is rank 2
        let a = m(&[&[1, 1, 1, 0], &[0, 0, 1, 1]]);
        let ker = integer_kernel(&a);
        assert_eq!(ker.len(), 2);
        for k in &ker {
            for i in 0..2 {
                let s: BigInt = (0..4).map(|j| &a[(i, j)] * &k[j]).sum();
                assert!(s.is_zero());
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = IntMatrix> {
            (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-9i64..=9, r * c).prop_map(move |ents| IntMatrix {
                    rows: r,
                    cols: c,
                    entries: ents.into_iter().map(BigInt::from).collect(),
                })
            })
        }

        proptest! {
            #[test]
            fn snf_round_trip(a in small_matrix()) {
                assert_snf_valid(&a);
            }

            #[test]
            fn cokernel_kills_relations(a in small_matrix()) {
                let coker = cokernel(&a);
                for j in 0..a.cols() {
                    let p = project_to_cokernel(&coker, &a.column(j)).unwrap();
                    prop_assert!(p.is_zero());
                }
            }

            // rank via elimination must agree with rank via nonzero minors
            #[test]
            fn rank_matches_minor_rank(a in small_matrix()) {
                let rows: Vec<Vec<BigInt>> =
                    (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
                prop_assert_eq!(rank_of_rows(&rows), minor_rank(&a));
            }
        }

        fn minor_rank(a: &IntMatrix) -> usize {
            let n = a.rows().min(a.cols());
            for size in (1..=n).rev() {
                for rows in combinations(a.rows(), size) {
                    for cols in combinations(a.cols(), size) {
                        let mut sub = IntMatrix::zeros(size, size);
                        for (si, &i) in rows.iter().enumerate() {
                            for (sj, &j) in cols.iter().enumerate() {
                                sub[(si, sj)] = a[(i, j)].clone();
                            }
                        }
                        if !sub.determinant().is_zero() {
                            return size;
                        }
                    }
                }
            }
            0
        }

        fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for i in start..n {
                    cur.push(i);
                    rec(i + 1, n, k, cur, out);
                    cur.pop();
                }
            }
            rec(0, n, k, &mut cur, &mut out);
            out
        }
    }
}
