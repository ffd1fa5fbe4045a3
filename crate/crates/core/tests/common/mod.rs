#![allow(dead_code)]

use num_bigint::BigInt;
use secfan_core::{DegreeMatrix, DegreeVector, FgAbelianGroup, PointSupport};

/// Deterministic xorshift64* generator so the random corpora are identical
/// on every run without pulling in an RNG dependency.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed | 1)
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// A random effective grading with rank <= 3, n <= 8 variables and degree
/// entries in [-3, 3]. Rejection-samples until effectivity holds.
pub fn random_grading(rng: &mut Rng) -> DegreeMatrix {
    for _ in 0..10_000 {
        let rank = rng.int_in(1, 3) as usize;
        let n = rng.int_in(rank as i64, 8) as usize;
        let group = FgAbelianGroup::free(rank);
        let degrees: Vec<DegreeVector> = (0..n)
            .map(|_| {
                let free = (0..rank).map(|_| BigInt::from(rng.int_in(-3, 3))).collect();
                DegreeVector::from_free(&group, free).expect("rank matches")
            })
            .collect();
        let names = (0..n).map(|i| format!("x{i}")).collect();
        if let Ok(dm) = DegreeMatrix::new(group, names, degrees) {
            return dm;
        }
    }
    panic!("failed to sample an effective grading");
}

/// A random lattice point of the weight space: a small nonnegative integer
/// combination of the degree vectors.
pub fn random_weight_point(rng: &mut Rng, g: &DegreeMatrix) -> DegreeVector {
    let mut acc = vec![BigInt::from(0); g.rank()];
    for d in g.degrees() {
        let c = rng.int_in(0, 3);
        for (a, x) in acc.iter_mut().zip(d.free_part()) {
            *a += BigInt::from(c) * x;
        }
    }
    DegreeVector::from_free(g.group(), acc).expect("rank matches")
}

pub fn random_point_support(rng: &mut Rng, g: &DegreeMatrix) -> PointSupport {
    let nonzero = (0..g.num_vars())
        .filter(|_| rng.below(2) == 1)
        .collect();
    PointSupport::new(nonzero)
}

pub fn int_vec(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn free_grading(rank: usize, names: &[&str], degree_rows: &[&[i64]]) -> DegreeMatrix {
    let group = FgAbelianGroup::free(rank);
    let degrees = degree_rows
        .iter()
        .map(|row| DegreeVector::from_free(&group, int_vec(row)).expect("rank matches"))
        .collect();
    DegreeMatrix::new(
        group,
        names.iter().map(|s| s.to_string()).collect(),
        degrees,
    )
    .expect("fixture gradings are effective")
}

/// Cox grading of the blown-up projective plane.
pub fn blowup_plane() -> DegreeMatrix {
    free_grading(
        2,
        &["x", "y", "z", "w"],
        &[&[1, 0], &[1, 0], &[1, 1], &[0, 1]],
    )
}

/// Three variables of degree one over the integers.
pub fn projective_plane() -> DegreeMatrix {
    free_grading(1, &["x", "y", "z"], &[&[1], &[1], &[1]])
}

/// Z + Z/2 grading with degrees (1,0), (0,1), (1,1).
pub fn torsion_example() -> DegreeMatrix {
    let group = FgAbelianGroup::new(1, vec![BigInt::from(2)]).expect("valid torsion");
    let d = |f: i64, t: i64| {
        DegreeVector::new(&group, vec![BigInt::from(f)], vec![BigInt::from(t)])
            .expect("shapes match")
    };
    DegreeMatrix::new(
        group.clone(),
        ["x", "y", "z"].map(String::from).to_vec(),
        vec![d(1, 0), d(0, 1), d(1, 1)],
    )
    .expect("effective")
}

/// Cox grading of the product of two projective lines.
pub fn p1_times_p1() -> DegreeMatrix {
    free_grading(
        2,
        &["x1", "x2", "y1", "y2"],
        &[&[1, 0], &[1, 0], &[0, 1], &[0, 1]],
    )
}
