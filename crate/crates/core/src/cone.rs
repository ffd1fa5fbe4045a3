//! Exact rational polyhedral cones and LP feasibility.
//!
//! A [`QCone`] carries both descriptions of a closed rational cone: extreme
//! rays plus a lineality basis (V-side) and integer inequality normals
//! (H-side, `x` in the cone iff `<n, x> >= 0` for every stored normal).
//! Conversion between the two sides is the incremental double description
//! method, run once against the polar to obtain facet normals and once more
//! to obtain extreme rays, so every constructor returns a fully canonical
//! cone: rays primitive, reduced modulo lineality, sorted; lineality in
//! reduced echelon form; implied equations stored as opposite normal pairs.
//!
//! There is no floating point anywhere. Target instances are small (ambient
//! dimension a handful, a few dozen generators), which the pivoting rules
//! here are sized for.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{rank_of_rows, IntMatrix};

// ---------------------------------------------------------------------------
// integer vector helpers

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn neg_vec(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().map(|x| -x).collect()
}

fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Divides out the content; `None` for the zero vector.
pub(crate) fn primitive(v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return None;
    }
    Some(v.iter().map(|x| x / &g).collect())
}

/// The primitive integer vector spanning the same ray, or `None` for zero.
pub fn primitive_vector(v: &[BigInt]) -> Option<Vec<BigInt>> {
    primitive(v)
}

/// Clears denominators and divides out the content, keeping the direction.
pub(crate) fn primitive_of_rationals(v: &[BigRational]) -> Option<Vec<BigInt>> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive(&ints)
}

// ---------------------------------------------------------------------------
// double description

struct DdRay {
    v: Vec<BigInt>,
    /// Which of the processed inequalities this ray satisfies with equality.
    zeros: Vec<bool>,
}

/// Extreme rays and lineality basis of `{ x : <a, x> >= 0 for all a }`.
///
/// Incremental double description with the combinatorial adjacency test.
/// The lineality space is carried explicitly and cut down one hyperplane at
/// a time; returned rays are extreme modulo the final lineality space.
fn double_description(dim: usize, ineqs: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let mut lines: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::one();
            e
        })
        .collect();
    let mut rays: Vec<DdRay> = Vec::new();
    let mut processed = 0usize;

    for a in ineqs {
        debug_assert_eq!(a.len(), dim);
        if is_zero_vec(a) {
            continue;
        }
        let line_vals: Vec<BigInt> = lines.iter().map(|l| dot(a, l)).collect();
        if let Some(p) = line_vals.iter().position(|c| !c.is_zero()) {
            // The hyperplane cuts the lineality space: one line becomes a
            // ray, the rest (and all rays) are projected into ker(a).
            let mut pivot = lines.swap_remove(p);
            let mut c0 = line_vals[p].clone();
            if c0.is_negative() {
                pivot = neg_vec(&pivot);
                c0 = -c0;
            }
            for l in lines.iter_mut() {
                let c = dot(a, l);
                if !c.is_zero() {
                    let combo: Vec<BigInt> = l
                        .iter()
                        .zip(&pivot)
                        .map(|(x, p)| &c0 * x - &c * p)
                        .collect();
                    *l = primitive(&combo).expect("projected line is nonzero");
                }
            }
            for r in rays.iter_mut() {
                let c = dot(a, &r.v);
                if !c.is_zero() {
                    let combo: Vec<BigInt> = r
                        .v
                        .iter()
                        .zip(&pivot)
                        .map(|(x, p)| &c0 * x - &c * p)
                        .collect();
                    r.v = primitive(&combo).expect("projected ray is nonzero");
                }
                r.zeros.push(true);
            }
            let mut zeros = vec![true; processed];
            zeros.push(false);
            rays.push(DdRay { v: pivot, zeros });
        } else {
            // Lineality untouched: split the rays by sign.
            let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
            let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
            let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
            if neg.is_empty() {
                for (r, val) in rays.iter_mut().zip(&vals) {
                    r.zeros.push(val.is_zero());
                }
                processed += 1;
                continue;
            }
            let mut next: Vec<DdRay> = Vec::new();
            for (i, r) in rays.iter().enumerate() {
                if !vals[i].is_negative() {
                    let mut zeros = r.zeros.clone();
                    zeros.push(vals[i].is_zero());
                    next.push(DdRay {
                        v: r.v.clone(),
                        zeros,
                    });
                }
            }
            for &ip in &pos {
                for &im in &neg {
                    if !adjacent(&rays, ip, im) {
                        continue;
                    }
                    // positive combination lying on the hyperplane
                    let combo: Vec<BigInt> = rays[im]
                        .v
                        .iter()
                        .zip(&rays[ip].v)
                        .map(|(m, p)| &vals[ip] * m - &vals[im] * p)
                        .collect();
                    let v = primitive(&combo).expect("combination of adjacent rays is nonzero");
                    let mut zeros: Vec<bool> = rays[ip]
                        .zeros
                        .iter()
                        .zip(&rays[im].zeros)
                        .map(|(x, y)| *x && *y)
                        .collect();
                    zeros.push(true);
                    next.push(DdRay { v, zeros });
                }
            }
            rays = next;
        }
        processed += 1;
    }
    (rays.into_iter().map(|r| r.v).collect(), lines)
}

/// Combinatorial adjacency: no third extreme ray is tight on every
/// inequality that is tight on both `i` and `j`.
fn adjacent(rays: &[DdRay], i: usize, j: usize) -> bool {
    let common: Vec<bool> = rays[i]
        .zeros
        .iter()
        .zip(&rays[j].zeros)
        .map(|(x, y)| *x && *y)
        .collect();
    for (k, r) in rays.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        if common.iter().zip(&r.zeros).all(|(c, z)| !*c || *z) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// canonical forms

/// Reduced echelon basis of the rational span of `rows`, scaled to primitive
/// integer vectors with positive leading entries. Unique per subspace.
fn echelon_basis(dim: usize, rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0usize;
    for col in 0..dim {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i == rank || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for k in 0..dim {
                let sub = &f * &m[rank][k];
                m[i][k] -= sub;
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    m.truncate(rank);
    m.iter()
        .map(|r| {
            let prim = primitive_of_rationals(r).expect("echelon row is nonzero");
            // leading entry of an echelon row is the pivot, already positive
            // after primitive scaling of a row with positive pivot
            debug_assert!(prim
                .iter()
                .find(|x| !x.is_zero())
                .map(|x| x.is_positive())
                .unwrap_or(true));
            prim
        })
        .collect()
}

/// Unique coset representative of `v` modulo the span of `basis` (which must
/// be in reduced echelon form): zero out the pivot coordinates.
fn reduce_mod_span(v: &[BigInt], basis: &[Vec<BigInt>]) -> Vec<BigRational> {
    let mut w: Vec<BigRational> = v.iter().map(|x| BigRational::from(x.clone())).collect();
    for b in basis {
        let pivot_col = b.iter().position(|x| !x.is_zero()).expect("nonzero row");
        if w[pivot_col].is_zero() {
            continue;
        }
        let f = &w[pivot_col] / BigRational::from(b[pivot_col].clone());
        for (k, bk) in b.iter().enumerate() {
            let sub = &f * BigRational::from(bk.clone());
            w[k] -= sub;
        }
    }
    w
}

fn canonical_rays(rays: Vec<Vec<BigInt>>, lin: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = rays
        .into_iter()
        .filter_map(|r| {
            let reduced = reduce_mod_span(&r, lin);
            primitive_of_rationals(&reduced)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// the cone type

/// A closed rational polyhedral cone in `R^ambient_dim`, stored canonically.
///
/// `rays` are the extreme rays of the cone modulo its lineality space,
/// reduced to the unique primitive representatives orthogonal (in the
/// echelon sense) to `lineality`; `lineality` is the reduced echelon basis
/// of the largest linear subspace contained in the cone. `ineqs` is a valid
/// H-representation: the cone is exactly the solution set of
/// `<n, x> >= 0` over all stored normals, with the span equations present as
/// opposite pairs.
#[derive(Clone)]
pub struct QCone {
    ambient_dim: usize,
    rays: Vec<Vec<BigInt>>,
    lineality: Vec<Vec<BigInt>>,
    ineqs: Vec<Vec<BigInt>>,
}

impl QCone {
    /// Closure of the set of nonnegative combinations of `generators`.
    /// Zero generators are discarded; opposite generators produce lineality.
    pub fn from_generators(ambient_dim: usize, generators: &[Vec<BigInt>]) -> Result<Self> {
        for g in generators {
            if g.len() != ambient_dim {
                return Err(Error::ShapeMismatch {
                    expected: ambient_dim,
                    got: g.len(),
                });
            }
        }
        let gens: Vec<Vec<BigInt>> = generators.iter().filter_map(|g| primitive(g)).collect();
        Ok(Self::from_v_data(ambient_dim, &gens, &[]))
    }

    /// The cone `{0}`.
    pub fn zero(ambient_dim: usize) -> Self {
        Self::from_v_data(ambient_dim, &[], &[])
    }

    /// Full canonicalization pipeline from arbitrary generating data.
    ///
    /// Runs double description against the polar to get a minimal
    /// H-representation, then once more to get canonical extreme rays.
    fn from_v_data(dim: usize, gens: &[Vec<BigInt>], lines: &[Vec<BigInt>]) -> Self {
        let mut polar_ineqs: Vec<Vec<BigInt>> = gens.to_vec();
        for l in lines {
            polar_ineqs.push(l.clone());
            polar_ineqs.push(neg_vec(l));
        }
        let (polar_rays, polar_lines) = double_description(dim, &polar_ineqs);

        // facets of the cone = extreme rays of the polar (mod its lineality);
        // span equations of the cone = lineality of the polar
        let equations = echelon_basis(dim, &polar_lines);
        let facets = canonical_rays(polar_rays, &equations);

        let mut ineqs: Vec<Vec<BigInt>> = facets.clone();
        for e in &equations {
            ineqs.push(e.clone());
            ineqs.push(neg_vec(e));
        }

        let (rays, lin) = double_description(dim, &ineqs);
        let lineality = echelon_basis(dim, &lin);
        let rays = canonical_rays(rays, &lineality);
        QCone {
            ambient_dim: dim,
            rays,
            lineality,
            ineqs,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Extreme rays modulo lineality, primitive and sorted.
    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    /// Reduced echelon basis of the lineality space.
    pub fn lineality(&self) -> &[Vec<BigInt>] {
        &self.lineality
    }

    /// Inequality normals of a valid H-representation.
    pub fn inequalities(&self) -> &[Vec<BigInt>] {
        &self.ineqs
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        let mut all: Vec<Vec<BigInt>> = self.rays.clone();
        all.extend(self.lineality.iter().cloned());
        rank_of_rows(&all)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    fn check_dim(&self, p_len: usize) -> Result<()> {
        if p_len != self.ambient_dim {
            return Err(Error::ShapeMismatch {
                expected: self.ambient_dim,
                got: p_len,
            });
        }
        Ok(())
    }

    /// Closed membership test for an integer point.
    pub fn contains(&self, p: &[BigInt]) -> Result<bool> {
        self.check_dim(p.len())?;
        Ok(self.ineqs.iter().all(|n| !dot(n, p).is_negative()))
    }

    /// Closed membership test for a rational point.
    pub fn contains_rational(&self, p: &[BigRational]) -> Result<bool> {
        self.check_dim(p.len())?;
        // membership is invariant under positive scaling
        match primitive_of_rationals(p) {
            Some(q) => self.contains(&q),
            None => Ok(true), // the origin
        }
    }

    /// True iff `p` lies in the cone and on none of its proper faces.
    ///
    /// A stored normal that vanishes on the whole cone is a span equation
    /// and must be met with equality; every other normal cuts out a proper
    /// face and must be strictly positive on `p`.
    pub fn in_relative_interior(&self, p: &[BigInt]) -> Result<bool> {
        self.check_dim(p.len())?;
        for n in &self.ineqs {
            let vanishes = self.rays.iter().all(|r| dot(n, r).is_zero())
                && self.lineality.iter().all(|l| dot(n, l).is_zero());
            let val = dot(n, p);
            if vanishes {
                if !val.is_zero() {
                    return Ok(false);
                }
            } else if !val.is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn in_relative_interior_rational(&self, p: &[BigRational]) -> Result<bool> {
        self.check_dim(p.len())?;
        match primitive_of_rationals(p) {
            Some(q) => self.in_relative_interior(&q),
            None => {
                // the origin lies in the relative interior exactly when the
                // cone is a linear subspace (no extreme rays)
                Ok(self.rays.is_empty())
            }
        }
    }

    /// Set intersection: concatenate H-representations and re-extract.
    pub fn intersect(&self, other: &QCone) -> Result<QCone> {
        self.check_dim(other.ambient_dim)?;
        let mut hs = self.ineqs.clone();
        hs.extend(other.ineqs.iter().cloned());
        Ok(Self::from_h_data(self.ambient_dim, &hs))
    }

    /// Intersection with the half-space `<normal, x> >= 0`.
    pub fn intersect_halfspace(&self, normal: &[BigInt]) -> Result<QCone> {
        self.check_dim(normal.len())?;
        let mut hs = self.ineqs.clone();
        hs.push(normal.to_vec());
        Ok(Self::from_h_data(self.ambient_dim, &hs))
    }

    fn from_h_data(dim: usize, ineqs: &[Vec<BigInt>]) -> QCone {
        let (rays, lines) = double_description(dim, ineqs);
        Self::from_v_data(dim, &rays, &lines)
    }

    /// True iff `self` is contained in `other` as a set.
    pub fn is_subset_of(&self, other: &QCone) -> Result<bool> {
        self.check_dim(other.ambient_dim)?;
        for r in &self.rays {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        for l in &self.lineality {
            if !other.contains(l)? || !other.contains(&neg_vec(l))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A point in the relative interior: the sum of all extreme rays
    /// (the origin for the zero cone or a pure subspace).
    pub fn relative_interior_point(&self) -> Vec<BigInt> {
        let mut p = vec![BigInt::zero(); self.ambient_dim];
        for r in &self.rays {
            for (pi, ri) in p.iter_mut().zip(r) {
                *pi += ri;
            }
        }
        p
    }

    /// Signs of `<normal, .>` over the generators: (any positive, any
    /// negative). A line with nonzero value reports both.
    pub(crate) fn generator_signs(&self, normal: &[BigInt]) -> (bool, bool) {
        let mut pos = false;
        let mut neg = false;
        for r in &self.rays {
            let v = dot(normal, r);
            pos |= v.is_positive();
            neg |= v.is_negative();
        }
        for l in &self.lineality {
            if !dot(normal, l).is_zero() {
                pos = true;
                neg = true;
            }
        }
        (pos, neg)
    }
}

impl PartialEq for QCone {
    /// Set equality. Canonical forms make this a structural comparison for
    /// pointed cones; with lineality present it falls back to mutual
    /// containment.
    fn eq(&self, other: &Self) -> bool {
        if self.ambient_dim != other.ambient_dim {
            return false;
        }
        if self.rays == other.rays && self.lineality == other.lineality {
            return true;
        }
        if self.lineality.is_empty() && other.lineality.is_empty() {
            return false;
        }
        self.is_subset_of(other).unwrap_or(false) && other.is_subset_of(self).unwrap_or(false)
    }
}

impl Eq for QCone {}

impl fmt::Debug for QCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QCone(dim {} in R^{}, rays {:?}, lineality {:?})",
            self.dim(),
            self.ambient_dim,
            self.rays,
            self.lineality
        )
    }
}

// ---------------------------------------------------------------------------
// exact LP feasibility

/// Feasibility problem `A x = b`, `x >= 0`, with some coordinates pinned to
/// zero. Models slices of the fiber polyhedron of a character by virtual
/// facets.
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub matrix: IntMatrix,
    pub rhs: Vec<BigInt>,
    pub forced_zero: BTreeSet<usize>,
}

impl LpProblem {
    pub fn new(matrix: IntMatrix, rhs: Vec<BigInt>, forced_zero: BTreeSet<usize>) -> Self {
        LpProblem {
            matrix,
            rhs,
            forced_zero,
        }
    }
}

/// Decides `exists x >= 0 with x_i = 0 for forced i and A x = b` by a
/// phase-one simplex on exact rationals with Bland's rule, which guarantees
/// termination under degeneracy.
pub fn lp_feasible(problem: &LpProblem) -> Result<bool> {
    let m = problem.matrix.rows();
    if problem.rhs.len() != m {
        return Err(Error::ShapeMismatch {
            expected: m,
            got: problem.rhs.len(),
        });
    }
    for &i in &problem.forced_zero {
        if i >= problem.matrix.cols() {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: problem.matrix.cols(),
            });
        }
    }
    let keep: Vec<usize> = (0..problem.matrix.cols())
        .filter(|j| !problem.forced_zero.contains(j))
        .collect();

    if problem.rhs.iter().all(Zero::is_zero) {
        return Ok(true); // x = 0
    }

    // tableau rows: [ A_keep | I_artificial | b ], with b made nonnegative
    let n = keep.len();
    let width = n + m + 1;
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<BigRational> = Vec::with_capacity(width);
        let flip = problem.rhs[i].is_negative();
        for &j in &keep {
            let a = problem.matrix[(i, j)].clone();
            row.push(BigRational::from(if flip { -a } else { a }));
        }
        for k in 0..m {
            row.push(if k == i {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        let b = problem.rhs[i].clone();
        row.push(BigRational::from(if flip { -b } else { b }));
        rows.push(row);
    }
    // objective: maximize -(sum of artificials); expressed over the
    // original (nonbasic) columns the coefficient of column j is
    // sum_i rows[i][j]. Artificial columns never re-enter the basis.
    let mut obj: Vec<BigRational> = vec![BigRational::zero(); width];
    for row in &rows {
        for (o, x) in obj.iter_mut().zip(row).take(n) {
            *o += x;
        }
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Bland: entering column = smallest index with positive coefficient
    while let Some(enter) = (0..n).find(|&j| !basis.contains(&j) && obj[j].is_positive()) {
        // ratio test; ties broken by smallest basic variable (Bland)
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for (i, row) in rows.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[enter];
            let better = match &best {
                None => true,
                Some(b) => {
                    &ratio < b || (&ratio == b && basis[i] < basis[leave.unwrap()])
                }
            };
            if better {
                best = Some(ratio);
                leave = Some(i);
            }
        }
        let Some(li) = leave else {
            // phase-one objective is bounded above by zero
            unreachable!("phase-one simplex cannot be unbounded");
        };
        // pivot
        let piv = rows[li][enter].clone();
        for x in rows[li].iter_mut() {
            *x /= &piv;
        }
        let pivot_row = rows[li].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == li || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (x, p) in obj.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        basis[li] = enter;
    }

    // feasible iff all artificial contributions vanished
    Ok(rows
        .iter()
        .enumerate()
        .all(|(i, row)| basis[i] < n || row[width - 1].is_zero()))
}
