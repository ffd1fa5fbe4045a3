//! Shared fixtures for the benchmark targets.

use num_bigint::BigInt;
use secfan_core::{DegreeMatrix, DegreeVector, FgAbelianGroup};

pub fn int_vec(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn grading(rank: usize, rows: &[&[i64]]) -> DegreeMatrix {
    let group = FgAbelianGroup::free(rank);
    let degrees = rows
        .iter()
        .map(|r| DegreeVector::from_free(&group, int_vec(r)).expect("rank matches"))
        .collect();
    let names = (0..rows.len()).map(|i| format!("x{i}")).collect();
    DegreeMatrix::new(group, names, degrees).expect("benchmark gradings are effective")
}

/// Cox grading of the blown-up projective plane.
pub fn blowup_plane() -> DegreeMatrix {
    grading(2, &[&[1, 0], &[1, 0], &[1, 1], &[0, 1]])
}

/// A rank-3 grading on seven variables with a nontrivial chamber fan.
pub fn rank3_grading() -> DegreeMatrix {
    grading(
        3,
        &[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[0, 1, 1],
            &[1, 0, 1],
            &[1, 1, 1],
        ],
    )
}
