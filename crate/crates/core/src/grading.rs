//! Effectively graded polynomial rings and their weight-cone combinatorics.
//!
//! A [`DegreeMatrix`] is a polynomial ring in `n` named variables together
//! with a degree in a finitely generated abelian group for each variable.
//! Construction checks effectivity (the degrees generate the whole group);
//! a non-effective grading is rejected, not repaired.
//!
//! Weight cones, relevance and semistability only see the *support* of a
//! monomial and the free parts of the degrees: torsion is carried along for
//! group-level bookkeeping but never enters a cone computation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::cone::QCone;
use crate::error::{Error, Result};
use crate::lattice::{
    rank_of_span, smith_normal_form, DegreeVector, FgAbelianGroup, IntMatrix,
};

/// Squarefree model of a monomial: the set of variables dividing it.
/// An optional exponent vector is carried for display only; every cone
/// computation depends on the support alone. The empty support is the
/// monomial `1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonomialSupport {
    indices: Vec<usize>,
    exponents: Option<Vec<u64>>,
}

impl MonomialSupport {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        MonomialSupport {
            indices,
            exponents: None,
        }
    }

    pub fn unit() -> Self {
        MonomialSupport::new(Vec::new())
    }

    /// Support of an exponent vector; the exponents are kept for display.
    pub fn from_exponents(exponents: Vec<u64>) -> Self {
        let indices = exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect();
        MonomialSupport {
            indices,
            exponents: Some(exponents),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn exponents(&self) -> Option<&[u64]> {
        self.exponents.as_deref()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains_support_of(&self, other: &MonomialSupport) -> bool {
        other.indices.iter().all(|i| self.indices.contains(i))
    }
}

/// The coordinates of a point of affine `n`-space that are nonzero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PointSupport {
    nonzero: Vec<usize>,
}

impl PointSupport {
    pub fn new(mut nonzero: Vec<usize>) -> Self {
        nonzero.sort_unstable();
        nonzero.dedup();
        PointSupport { nonzero }
    }

    pub fn origin() -> Self {
        PointSupport { nonzero: Vec::new() }
    }

    pub fn nonzero(&self) -> &[usize] {
        &self.nonzero
    }

    pub fn as_monomial(&self) -> MonomialSupport {
        MonomialSupport::new(self.nonzero.clone())
    }
}

/// An effective grading of a polynomial ring: one degree per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMatrix {
    group: FgAbelianGroup,
    names: Vec<String>,
    degrees: Vec<DegreeVector>,
}

impl DegreeMatrix {
    /// Builds and validates a grading. Fails with [`Error::NotEffective`]
    /// when the degrees do not generate the group, which is decided by a
    /// Smith normal form index computation on the free and torsion parts.
    pub fn new(
        group: FgAbelianGroup,
        names: Vec<String>,
        degrees: Vec<DegreeVector>,
    ) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::ShapeMismatch {
                expected: 1,
                got: 0,
            });
        }
        if names.len() != degrees.len() {
            return Err(Error::ShapeMismatch {
                expected: names.len(),
                got: degrees.len(),
            });
        }
        for d in &degrees {
            if d.free_part().len() != group.rank() {
                return Err(Error::ShapeMismatch {
                    expected: group.rank(),
                    got: d.free_part().len(),
                });
            }
            if d.torsion_part().len() != group.torsion().len() {
                return Err(Error::ShapeMismatch {
                    expected: group.torsion().len(),
                    got: d.torsion_part().len(),
                });
            }
        }
        let dm = DegreeMatrix {
            group,
            names,
            degrees,
        };
        if !dm.is_effective() {
            return Err(Error::NotEffective);
        }
        Ok(dm)
    }

    /// The degrees generate the group iff the lifted degree columns together
    /// with the torsion relations generate all of `Z^(rank + #torsion)`,
    /// i.e. iff that matrix has all invariant factors equal to one.
    fn is_effective(&self) -> bool {
        let r = self.group.rank();
        let k = self.group.torsion().len();
        let n = self.degrees.len();
        let mut m = IntMatrix::zeros(r + k, n + k);
        for (j, d) in self.degrees.iter().enumerate() {
            for (i, x) in d.free_part().iter().enumerate() {
                m[(i, j)] = x.clone();
            }
            for (i, x) in d.torsion_part().iter().enumerate() {
                m[(r + i, j)] = x.clone();
            }
        }
        for (i, inv) in self.group.torsion().iter().enumerate() {
            m[(r + i, n + i)] = inv.clone();
        }
        let snf = smith_normal_form(&m);
        let diag = snf.diagonal();
        diag.len() >= r + k && diag.iter().take(r + k).all(|d| d.is_one())
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn num_vars(&self) -> usize {
        self.degrees.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[DegreeVector] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> &DegreeVector {
        &self.degrees[i]
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Free parts of the degrees as a `rank x n` matrix (columns are
    /// variables), the constraint matrix of every fiber LP.
    pub fn free_degree_matrix(&self) -> IntMatrix {
        let r = self.rank();
        let n = self.num_vars();
        let mut m = IntMatrix::zeros(r, n);
        for (j, d) in self.degrees.iter().enumerate() {
            for (i, x) in d.free_part().iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    /// Renders a support as a monomial in the variable names; the empty
    /// support is `1`.
    pub fn monomial_string(&self, s: &MonomialSupport) -> String {
        if s.is_empty() {
            return "1".to_string();
        }
        match s.exponents() {
            Some(exps) => s
                .indices()
                .iter()
                .map(|&i| {
                    if exps[i] == 1 {
                        self.names[i].clone()
                    } else {
                        format!("{}^{}", self.names[i], exps[i])
                    }
                })
                .collect::<Vec<_>>()
                .join("*"),
            None => s
                .indices()
                .iter()
                .map(|&i| self.names[i].as_str())
                .collect::<Vec<_>>()
                .join("*"),
        }
    }

    /// Parses a monomial given as variable names joined by `*` (or, when
    /// every variable name is a single character, simply concatenated).
    pub fn parse_monomial(&self, text: &str) -> Option<MonomialSupport> {
        if text == "1" {
            return Some(MonomialSupport::unit());
        }
        let mut indices = Vec::new();
        if text.contains('*') || text.contains(',') {
            for part in text.split(['*', ',']) {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                indices.push(self.variable_index(part)?);
            }
        } else if self.names.iter().all(|n| n.chars().count() == 1) {
            for ch in text.chars() {
                indices.push(self.variable_index(&ch.to_string())?);
            }
        } else {
            indices.push(self.variable_index(text)?);
        }
        Some(MonomialSupport::new(indices))
    }

    fn degrees_of(&self, indices: &[usize]) -> Vec<DegreeVector> {
        indices.iter().map(|&i| self.degrees[i].clone()).collect()
    }

    fn free_parts_of(&self, indices: &[usize]) -> Vec<Vec<BigInt>> {
        indices
            .iter()
            .map(|&i| self.degrees[i].free_part().to_vec())
            .collect()
    }

    /// Weight cone of a monomial: the closed cone spanned by the free parts
    /// of the degrees of the variables in its support. The empty support
    /// gives the zero cone.
    pub fn weight_cone(&self, s: &MonomialSupport) -> QCone {
        self.assert_support(s.indices());
        QCone::from_generators(self.rank(), &self.free_parts_of(s.indices()))
            .expect("degree vectors share the group rank")
    }

    /// Hull of all variable degrees: the weight space of the ring.
    pub fn weight_space(&self) -> QCone {
        let all: Vec<usize> = (0..self.num_vars()).collect();
        QCone::from_generators(self.rank(), &self.free_parts_of(&all))
            .expect("degree vectors share the group rank")
    }

    /// A monomial is relevant iff its weight cone is full-dimensional,
    /// i.e. the degrees in its support span a subgroup of finite index.
    pub fn is_relevant(&self, s: &MonomialSupport) -> bool {
        self.assert_support(s.indices());
        let degs = self.degrees_of(s.indices());
        rank_of_span(&degs).expect("uniform shapes") == self.rank()
    }

    /// All monomic relevant generators: the products of exactly `rank`
    /// variables with linearly independent degrees. These are the bases of
    /// the linear matroid of the degree configuration, listed in
    /// lexicographic order of their index sets.
    pub fn monomic_relevant_generators(&self) -> Vec<MonomialSupport> {
        let r = self.rank();
        let mut out = Vec::new();
        for combo in combinations(self.num_vars(), r) {
            let degs = self.degrees_of(&combo);
            if rank_of_span(&degs).expect("uniform shapes") == r {
                out.push(MonomialSupport::new(combo));
            }
        }
        out
    }

    /// Orbit cone of a point: the weight cone of its nonzero coordinates.
    pub fn orbit_cone(&self, x: &PointSupport) -> QCone {
        self.weight_cone(&x.as_monomial())
    }

    /// `x` is semistable for `d` iff `d` lies in the orbit cone of `x`.
    pub fn is_semistable(&self, x: &PointSupport, d: &DegreeVector) -> bool {
        self.orbit_cone(x)
            .contains(d.free_part())
            .expect("degree vector has the group rank")
    }

    /// Geometric semistability: semistable for `d` (when given) and the
    /// orbit cone is full-dimensional; equivalently the nonzero set
    /// contains a matroid basis.
    pub fn is_geometrically_semistable(&self, x: &PointSupport, d: Option<&DegreeVector>) -> bool {
        if let Some(d) = d {
            if !self.is_semistable(x, d) {
                return false;
            }
        }
        let degs = self.degrees_of(x.nonzero());
        rank_of_span(&degs).expect("uniform shapes") == self.rank()
    }

    /// For a full-dimensional orbit cone, the weight cones of the matroid
    /// bases contained in the nonzero set; their union is the orbit cone.
    pub fn orbit_cone_cover(&self, x: &PointSupport) -> Result<Vec<QCone>> {
        if !self.is_geometrically_semistable(x, None) {
            return Err(Error::NotFullDimensional);
        }
        let cones = self
            .bases_within(x.nonzero())
            .into_iter()
            .map(|b| self.weight_cone(&b))
            .collect();
        Ok(cones)
    }

    /// Matroid bases whose support lies inside the given index set.
    pub fn bases_within(&self, allowed: &[usize]) -> Vec<MonomialSupport> {
        let r = self.rank();
        let mut out = Vec::new();
        for combo in combinations(allowed.len(), r) {
            let picked: Vec<usize> = combo.iter().map(|&i| allowed[i]).collect();
            let degs = self.degrees_of(&picked);
            if rank_of_span(&degs).expect("uniform shapes") == r {
                out.push(MonomialSupport::new(picked));
            }
        }
        out
    }

    fn assert_support(&self, indices: &[usize]) {
        for &i in indices {
            assert!(
                i < self.num_vars(),
                "variable index {i} out of range for {} variables",
                self.num_vars()
            );
        }
    }
}

impl fmt::Display for DegreeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k[{}] graded by {}", self.names.join(", "), self.group)
    }
}

/// All `k`-element subsets of `{0, ..., n-1}` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance the rightmost index that can still move
        let mut i = k;
        while i > 0 {
            i -= 1;
            if cur[i] != i + n - k {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}
