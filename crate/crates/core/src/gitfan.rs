//! Chambers of the weight space, irrelevant ideals of characters, and the
//! Gale correspondence between gradings and fans.
//!
//! The central object is the chamber decomposition: the full-dimensional
//! cones `lambda(a)` obtained by intersecting all weight cones containing a
//! degree `a`. Chamber enumeration is exact arrangement-cell enumeration —
//! split the weight space along every hyperplane spanned by `rank - 1` of
//! the degree vectors, take an interior witness per full-dimensional cell,
//! and deduplicate the resulting intersections. No sampling, no floats.
//!
//! Irrelevant ideals are computed along two independent routes: through the
//! matroid bases whose weight cone contains the character (valid for generic
//! characters) and through LP feasibility of virtual-facet intersections of
//! the fiber polyhedron (valid always). The two must agree on generic input,
//! which the test suites check extensively.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cone::{lp_feasible, neg_vec, primitive, LpProblem, QCone};
use crate::error::{Error, Result};
use crate::grading::{combinations, DegreeMatrix, MonomialSupport, PointSupport};
use crate::lattice::{cokernel, integer_kernel, rank_of_rows, DegreeVector, IntMatrix};

// ---------------------------------------------------------------------------
// fans

/// Ray configuration in `Z^lattice_dim` with simplicial maximal cones given
/// as ray index sets. Rays listed but used by no maximal cone are allowed;
/// they are reported by [`Fan::unused_ray_indices`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    lattice_dim: usize,
    rays: Vec<Vec<BigInt>>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(
        lattice_dim: usize,
        rays: Vec<Vec<BigInt>>,
        max_cones: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut prim_rays = Vec::with_capacity(rays.len());
        for r in &rays {
            if r.len() != lattice_dim {
                return Err(Error::ShapeMismatch {
                    expected: lattice_dim,
                    got: r.len(),
                });
            }
            let p = primitive(r).ok_or_else(|| Error::InvalidFan("zero ray".into()))?;
            prim_rays.push(p);
        }
        for i in 0..prim_rays.len() {
            for j in i + 1..prim_rays.len() {
                if prim_rays[i] == prim_rays[j] {
                    return Err(Error::InvalidFan(format!("rays {i} and {j} are parallel")));
                }
            }
        }
        if max_cones.is_empty() {
            return Err(Error::InvalidFan("no maximal cones".into()));
        }
        let mut cones: Vec<Vec<usize>> = Vec::with_capacity(max_cones.len());
        for c in max_cones {
            let mut c = c;
            c.sort_unstable();
            c.dedup();
            for &i in &c {
                if i >= prim_rays.len() {
                    return Err(Error::IndexOutOfRange {
                        index: i,
                        bound: prim_rays.len(),
                    });
                }
            }
            let rows: Vec<Vec<BigInt>> = c.iter().map(|&i| prim_rays[i].clone()).collect();
            if rank_of_rows(&rows) != c.len() {
                return Err(Error::InvalidFan(format!(
                    "cone {c:?} is not simplicial: rays are dependent"
                )));
            }
            cones.push(c);
        }
        cones.sort();
        cones.dedup();
        for a in &cones {
            for b in &cones {
                if a != b && b.iter().all(|i| a.contains(i)) {
                    return Err(Error::InvalidFan(format!("cone {b:?} contained in {a:?}")));
                }
            }
        }
        let fan = Fan {
            lattice_dim,
            rays: prim_rays,
            max_cones: cones,
        };
        // full face-compatibility is only affordable at low dimension;
        // higher-dimensional input is trusted as given
        if lattice_dim <= 3 {
            fan.check_pairwise_faces()?;
        }
        Ok(fan)
    }

    /// Pairwise intersections of maximal cones must be the cones spanned by
    /// the shared rays (a face of each, by simpliciality).
    fn check_pairwise_faces(&self) -> Result<()> {
        let cone_of = |idx: &[usize]| -> QCone {
            let gens: Vec<Vec<BigInt>> = idx.iter().map(|&i| self.rays[i].clone()).collect();
            QCone::from_generators(self.lattice_dim, &gens).expect("ray dims checked")
        };
        for (ai, a) in self.max_cones.iter().enumerate() {
            for b in self.max_cones.iter().skip(ai + 1) {
                let shared: Vec<usize> = a.iter().copied().filter(|i| b.contains(i)).collect();
                let meet = cone_of(a).intersect(&cone_of(b)).expect("same ambient");
                if meet != cone_of(&shared) {
                    return Err(Error::InvalidFan(format!(
                        "cones {a:?} and {b:?} do not meet in a common face"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn lattice_dim(&self) -> usize {
        self.lattice_dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// Indices of rays appearing in no maximal cone.
    pub fn unused_ray_indices(&self) -> Vec<usize> {
        (0..self.rays.len())
            .filter(|i| !self.max_cones.iter().any(|c| c.contains(i)))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// chambers

/// A full-dimensional GIT cone together with its defining data.
#[derive(Clone, Debug)]
pub struct Chamber {
    /// The chamber itself: intersection of the weight cones of
    /// `defining_bases`.
    pub cone: QCone,
    /// Matroid bases whose weight cone contains the chamber.
    pub defining_bases: Vec<MonomialSupport>,
    /// Generators of the irrelevant ideal of any interior character; for
    /// generic characters this coincides with `defining_bases`.
    pub b_generators: Vec<MonomialSupport>,
    /// An interior lattice point (the sum of the chamber's extreme rays).
    pub sample_point: DegreeVector,
}

impl Chamber {
    /// Variable indices dividing every generator: the indices whose virtual
    /// facet is empty for interior characters.
    pub fn always_used_indices(&self) -> Vec<usize> {
        let Some(first) = self.b_generators.first() else {
            return Vec::new();
        };
        first
            .indices()
            .iter()
            .copied()
            .filter(|i| self.b_generators.iter().all(|b| b.indices().contains(i)))
            .collect()
    }
}

/// The GIT cone of `a`: the intersection of all weight cones containing it.
///
/// For generic `a` only the matroid bases matter; otherwise all `2^n - 1`
/// supports are intersected. Fails when `a` lies outside the weight space.
pub fn git_cone(g: &DegreeMatrix, a: &DegreeVector) -> Result<QCone> {
    let space = g.weight_space();
    if !space.contains(a.free_part())? {
        return Err(Error::OutsideWeightSpace);
    }
    if is_generic(g, a) {
        let mut acc = space;
        for b in g.monomic_relevant_generators() {
            let c = g.weight_cone(&b);
            if c.contains(a.free_part())? {
                acc = acc.intersect(&c)?;
            }
        }
        Ok(acc)
    } else {
        git_cone_all_supports(g, a)
    }
}

/// The all-supports form of the GIT cone, total on the weight space.
pub fn git_cone_all_supports(g: &DegreeMatrix, a: &DegreeVector) -> Result<QCone> {
    let space = g.weight_space();
    if !space.contains(a.free_part())? {
        return Err(Error::OutsideWeightSpace);
    }
    let n = g.num_vars();
    let mut acc = space;
    for mask in 1u64..(1u64 << n) {
        let support = MonomialSupport::new(
            (0..n).filter(|i| mask & (1 << i) != 0).collect(),
        );
        let c = g.weight_cone(&support);
        if c.contains(a.free_part())? {
            acc = acc.intersect(&c)?;
        }
    }
    Ok(acc)
}

/// A character is generic iff it lies in the weight space but in no cone
/// spanned by fewer than `rank` of the degree vectors. By Caratheodory it
/// suffices to scan the subsets of size exactly `rank - 1`.
pub fn is_generic(g: &DegreeMatrix, a: &DegreeVector) -> bool {
    let space = g.weight_space();
    if !space.contains(a.free_part()).expect("degree has group rank") {
        return false;
    }
    let r = g.rank();
    if r == 0 {
        return true;
    }
    for combo in combinations(g.num_vars(), r - 1) {
        let c = g.weight_cone(&MonomialSupport::new(combo));
        if c.contains(a.free_part()).expect("degree has group rank") {
            return false;
        }
    }
    true
}

/// Minimal monomial generators of the irrelevant ideal of the character
/// `a`. Generic characters go through the matroid bases; everything else
/// through the virtual-facet LP route. The unit ideal is returned as the
/// single empty support.
pub fn irrelevant_ideal(g: &DegreeMatrix, a: &DegreeVector) -> Vec<MonomialSupport> {
    if is_generic(g, a) {
        g.monomic_relevant_generators()
            .into_iter()
            .filter(|b| {
                g.weight_cone(b)
                    .contains(a.free_part())
                    .expect("degree has group rank")
            })
            .collect()
    } else {
        irrelevant_ideal_via_lp(g, a)
    }
}

/// Irrelevant ideal through virtual facets: a product of the variables
/// outside `I` is a generator iff the facets indexed by `I` have a common
/// point in the fiber polyhedron and `I` is maximal with that property.
pub fn irrelevant_ideal_via_lp(g: &DegreeMatrix, a: &DegreeVector) -> Vec<MonomialSupport> {
    let n = g.num_vars();
    let matrix = g.free_degree_matrix();
    let rhs = a.free_part().to_vec();
    // feasibility is monotone under shrinking I, so scanning masks by
    // descending popcount and skipping subsets of recorded hits yields
    // exactly the maximal feasible index sets
    let mut masks: Vec<u64> = (0..(1u64 << n)).collect();
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut maximal: Vec<u64> = Vec::new();
    for mask in masks {
        if maximal.iter().any(|m| m | mask == *m) {
            continue;
        }
        let forced: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let problem = LpProblem::new(matrix.clone(), rhs.clone(), forced);
        if lp_feasible(&problem).expect("shapes are consistent") {
            maximal.push(mask);
        }
    }
    let mut gens: Vec<MonomialSupport> = maximal
        .into_iter()
        .map(|mask| {
            MonomialSupport::new((0..n).filter(|i| mask & (1 << i) == 0).collect())
        })
        .collect();
    gens.sort();
    gens
}

/// Semistability of a point for a character, decided through the virtual
/// facets indexed by the point's zero coordinates.
pub fn point_semistable_for_character(
    g: &DegreeMatrix,
    x: &PointSupport,
    a: &DegreeVector,
) -> bool {
    let n = g.num_vars();
    let forced: BTreeSet<usize> = (0..n).filter(|i| !x.nonzero().contains(i)).collect();
    let problem = LpProblem::new(g.free_degree_matrix(), a.free_part().to_vec(), forced);
    lp_feasible(&problem).expect("shapes are consistent")
}

/// All chambers of the weight space, canonically ordered.
///
/// Exact cell enumeration: the weight space is split along every hyperplane
/// spanned by `rank - 1` degree vectors; every full-dimensional cell gets an
/// exact interior witness (the sum of its extreme rays), which is generic by
/// construction; the GIT cone of each witness is computed over the bases and
/// the results are deduplicated.
pub fn enumerate_chambers(g: &DegreeMatrix) -> Result<Vec<Chamber>> {
    let r = g.rank();
    if r == 0 {
        return Err(Error::RankZero);
    }
    let normals = degree_hyperplane_normals(g);

    let mut cells = vec![g.weight_space()];
    for n in &normals {
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells {
            let (pos, neg) = cell.generator_signs(n);
            if pos && neg {
                // the hyperplane passes through the cell interior
                next.push(cell.intersect_halfspace(n)?);
                next.push(cell.intersect_halfspace(&neg_vec(n))?);
            } else {
                next.push(cell);
            }
        }
        cells = next;
    }

    let basis_cones: Vec<(MonomialSupport, QCone)> = g
        .monomic_relevant_generators()
        .into_iter()
        .map(|b| {
            let c = g.weight_cone(&b);
            (b, c)
        })
        .collect();

    let mut chambers: Vec<Chamber> = Vec::new();
    for cell in &cells {
        if cell.dim() != r {
            continue;
        }
        let witness = cell.relative_interior_point();
        let witness_degree = DegreeVector::from_free(g.group(), witness.clone())?;
        debug_assert!(is_generic(g, &witness_degree));
        let mut cone: Option<QCone> = None;
        for (_, c) in basis_cones.iter().filter(|(_, c)| {
            c.contains(&witness).expect("witness has group rank")
        }) {
            cone = Some(match cone {
                None => c.clone(),
                Some(acc) => acc.intersect(c)?,
            });
        }
        let cone = cone.expect("a generic weight-space point lies in some basis cone");
        debug_assert_eq!(cone.dim(), r);
        if chambers.iter().any(|ch| ch.cone == cone) {
            continue;
        }
        let sample = cone.relative_interior_point();
        let sample = DegreeVector::from_free(g.group(), sample)?;
        let b_generators: Vec<MonomialSupport> = basis_cones
            .iter()
            .filter(|(_, c)| {
                c.contains(sample.free_part()).expect("sample has group rank")
            })
            .map(|(b, _)| b.clone())
            .collect();
        chambers.push(Chamber {
            cone,
            defining_bases: b_generators.clone(),
            b_generators,
            sample_point: sample,
        });
    }
    chambers.sort_by(|a, b| a.cone.rays().cmp(b.cone.rays()));
    Ok(chambers)
}

/// Normals of all hyperplanes spanned by `rank - 1` of the degree vectors,
/// primitive, sign-normalized and deduplicated. For rank 1 the single
/// degenerate hyperplane is the origin.
fn degree_hyperplane_normals(g: &DegreeMatrix) -> Vec<Vec<BigInt>> {
    let r = g.rank();
    let mut normals: Vec<Vec<BigInt>> = Vec::new();
    for combo in combinations(g.num_vars(), r - 1) {
        let rows: Vec<Vec<BigInt>> = combo
            .iter()
            .map(|&i| g.degree(i).free_part().to_vec())
            .collect();
        if let Some(n) = orthogonal_normal(&rows, r) {
            normals.push(n);
        }
    }
    normals.sort();
    normals.dedup();
    normals
}

/// The vector of signed maximal minors of an `(r-1) x r` matrix: orthogonal
/// to every row, nonzero iff the rows are independent.
fn orthogonal_normal(rows: &[Vec<BigInt>], r: usize) -> Option<Vec<BigInt>> {
    let mut n = Vec::with_capacity(r);
    for skip in 0..r {
        let sub_rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let det = IntMatrix::from_rows(sub_rows).determinant();
        n.push(if skip % 2 == 0 { det } else { -det });
    }
    let mut p = primitive(&n)?;
    if p.iter().find(|x| !x.is_zero())?.lt(&BigInt::zero()) {
        p = neg_vec(&p);
    }
    Some(p)
}

/// Intersection of the weight cones of all products of `n - 1` variables.
pub fn moving_cone(g: &DegreeMatrix) -> Result<QCone> {
    if g.rank() == 0 {
        return Err(Error::RankZero);
    }
    let n = g.num_vars();
    let mut acc: Option<QCone> = None;
    for omit in 0..n {
        let support = MonomialSupport::new((0..n).filter(|&i| i != omit).collect());
        let c = g.weight_cone(&support);
        acc = Some(match acc {
            None => c,
            Some(a) => a.intersect(&c)?,
        });
    }
    Ok(acc.expect("at least one variable"))
}

/// A configuration is geometric iff all vectors are nonzero and no two
/// generate the same ray.
pub fn is_geometric_configuration(vectors: &[Vec<BigInt>]) -> bool {
    let mut prims = Vec::with_capacity(vectors.len());
    for v in vectors {
        match primitive(v) {
            None => return false,
            Some(p) => prims.push(p),
        }
    }
    for i in 0..prims.len() {
        for j in i + 1..prims.len() {
            if prims[i] == prims[j] {
                return false;
            }
        }
    }
    true
}

/// The grading Gale dual to a ray configuration: the cokernel of the
/// relation map, with the classes of the standard basis vectors as degrees.
/// Variables are named `x1, ..., xn`. Fails when the rays do not span.
pub fn gale_dual(rays: &[Vec<BigInt>]) -> Result<DegreeMatrix> {
    let n = rays.len();
    if n == 0 {
        return Err(Error::RaysDoNotSpan);
    }
    let d = rays[0].len();
    for r in rays {
        if r.len() != d {
            return Err(Error::ShapeMismatch {
                expected: d,
                got: r.len(),
            });
        }
    }
    if rank_of_rows(rays) != d {
        return Err(Error::RaysDoNotSpan);
    }
    let coker = cokernel(&IntMatrix::from_rows(rays.to_vec()));
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    DegreeMatrix::new(coker.group, names, coker.degrees)
}

/// The ray configuration Gale dual to a grading: a basis of the kernel of
/// the degree map, read as one ray per variable in `Z^(n - rank)`.
pub fn gale_dual_inverse(g: &DegreeMatrix) -> Vec<Vec<BigInt>> {
    let r = g.rank();
    let k = g.group().torsion().len();
    let n = g.num_vars();
    // lift the degree map to Z^(r+k) and adjoin the torsion relations so
    // the integer kernel of the lift projects onto the kernel of the map
    let mut m = IntMatrix::zeros(r + k, n + k);
    for (j, dv) in g.degrees().iter().enumerate() {
        for (i, x) in dv.free_part().iter().enumerate() {
            m[(i, j)] = x.clone();
        }
        for (i, x) in dv.torsion_part().iter().enumerate() {
            m[(r + i, j)] = x.clone();
        }
    }
    for (i, inv) in g.group().torsion().iter().enumerate() {
        m[(r + i, n + i)] = inv.clone();
    }
    let kernel = integer_kernel(&m);
    let s = kernel.len();
    debug_assert_eq!(s, n - r, "kernel rank is the number of variables minus the group rank");
    (0..n)
        .map(|i| (0..s).map(|j| kernel[j][i].clone()).collect())
        .collect()
}

/// Checks that `rays` and the grading fit into a Gale-dual pair: one ray
/// per variable, every relation column dies in the group, and the cokernel
/// of the relation matrix is the grading group itself.
pub fn check_gale_pair(g: &DegreeMatrix, rays: &[Vec<BigInt>]) -> Result<()> {
    let n = g.num_vars();
    if rays.len() != n {
        return Err(Error::ShapeMismatch {
            expected: n,
            got: rays.len(),
        });
    }
    let d = rays.first().map_or(0, Vec::len);
    for r in rays {
        if r.len() != d {
            return Err(Error::ShapeMismatch {
                expected: d,
                got: r.len(),
            });
        }
    }
    if rank_of_rows(rays) != d {
        return Err(Error::RaysDoNotSpan);
    }
    // gamma(delta(e_j)) = sum_i rays[i][j] * deg(x_i) must vanish
    for j in 0..d {
        let mut acc = DegreeVector::zero(g.group());
        for (i, ray) in rays.iter().enumerate() {
            let c = &ray[j];
            let scaled = DegreeVector::new(
                g.group(),
                g.degree(i).free_part().iter().map(|x| c * x).collect(),
                g.degree(i).torsion_part().iter().map(|x| c * x).collect(),
            )?;
            acc = acc.add(&scaled, g.group())?;
        }
        if !acc.is_zero() {
            return Err(Error::NotGaleDual);
        }
    }
    let coker = cokernel(&IntMatrix::from_rows(rays.to_vec()));
    if coker.group != *g.group() {
        return Err(Error::NotGaleDual);
    }
    Ok(())
}

/// The fan of the model attached to a chamber: one maximal cone per
/// generator of the irrelevant ideal, spanned by the rays of the variables
/// outside its support.
pub fn fan_of_chamber(g: &DegreeMatrix, chamber: &Chamber, rays: &[Vec<BigInt>]) -> Result<Fan> {
    check_gale_pair(g, rays)?;
    let n = g.num_vars();
    let d = rays.first().map_or(0, Vec::len);
    let mut cones: Vec<Vec<usize>> = chamber
        .b_generators
        .iter()
        .map(|b| (0..n).filter(|i| !b.indices().contains(i)).collect())
        .collect();
    cones.sort();
    cones.dedup();
    Fan::new(d, rays.to_vec(), cones)
}

/// The chamber of a fan inside the weight space of its Gale-dual grading:
/// the intersection over the maximal cones of the weight cones of their
/// complements.
pub fn nef_cone(g: &DegreeMatrix, fan: &Fan) -> Result<QCone> {
    check_gale_pair(g, fan.rays())?;
    let n = g.num_vars();
    let mut acc: Option<QCone> = None;
    for cone in fan.max_cones() {
        let support = MonomialSupport::new((0..n).filter(|i| !cone.contains(i)).collect());
        let c = g.weight_cone(&support);
        acc = Some(match acc {
            None => c,
            Some(a) => a.intersect(&c)?,
        });
    }
    Ok(acc.expect("fan has at least one maximal cone"))
}

/// Two relevant monomials are separated iff the intersection of their
/// weight cones is full-dimensional.
pub fn separated_pair(g: &DegreeMatrix, f: &MonomialSupport, h: &MonomialSupport) -> Result<bool> {
    if !g.is_relevant(f) || !g.is_relevant(h) {
        return Err(Error::NotRelevant);
    }
    let meet = g.weight_cone(f).intersect(&g.weight_cone(h))?;
    Ok(meet.dim() == g.rank())
}

/// One maximal separated chart collection per chamber: the generators of
/// the chamber's irrelevant ideal.
pub fn stable_subsets(g: &DegreeMatrix) -> Result<Vec<(Chamber, Vec<MonomialSupport>)>> {
    Ok(enumerate_chambers(g)?
        .into_iter()
        .map(|ch| {
            let charts = ch.b_generators.clone();
            (ch, charts)
        })
        .collect())
}
