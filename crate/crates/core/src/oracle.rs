//! Brute-force reference values for the min-max statistics.
//!
//! These enumerate every 3-subset of lattice points and share no code with
//! the closed-form paths in [`crate::lattice`]; the CLI `oracle` subcommand
//! prints both side by side.

use crate::lattice::{lattice_points, LatticePoint};

/// Minimum over all 3-subsets of `points` of the largest `|x − y|`.
pub fn brute_min_max_3(points: &[LatticePoint]) -> Option<u64> {
    let mut best: Option<u64> = None;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            for k in j + 1..points.len() {
                let m = points[i]
                    .abs_diff()
                    .max(points[j].abs_diff())
                    .max(points[k].abs_diff());
                best = Some(best.map_or(m, |b| b.min(m)));
            }
        }
    }
    best
}

/// Brute-force value of the three-point statistic of `n`.
pub fn brute_m3(n: u64) -> Option<u64> {
    brute_min_max_3(&lattice_points(n))
}

/// Brute-force value of the same-side statistic of `n` (`x > √n` strictly).
pub fn brute_m3_same_side(n: u64) -> Option<u64> {
    let points: Vec<LatticePoint> = lattice_points(n)
        .into_iter()
        .filter(|p| p.x as u128 * p.x as u128 > n as u128)
        .collect();
    brute_min_max_3(&points)
}
