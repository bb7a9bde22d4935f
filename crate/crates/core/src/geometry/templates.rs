//! Reference structures for recognition.

use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, IncidenceStructure};

/// The affine plane of order 3: points `3x + y`, lines `{p + t·d}`.
pub fn hesse() -> IncidenceStructure {
    let mut lines = Vec::new();
    for (dx, dy) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
        let mut seen = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                let mut l: Vec<usize> = (0..3).map(|t| 3 * ((x + t * dx) % 3) + (y + t * dy) % 3).collect();
                l.sort_unstable();
                if !seen.contains(&l) {
                    seen.push(l.clone());
                    lines.push(l);
                }
            }
        }
    }
    IncidenceStructure::from_blocks(9, lines)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// The doily: duads of a 6-set as points, synthemes as lines.
pub fn gq22() -> IncidenceStructure {
    let duads = pairs(6);
    let index = |a: usize, b: usize| duads.iter().position(|&p| p == (a.min(b), a.max(b))).expect("duad");
    let mut lines = Vec::new();
    for (i, &(a, b)) in duads.iter().enumerate() {
        for (j, &(c, d)) in duads.iter().enumerate().skip(i + 1) {
            if [c, d].contains(&a) || [c, d].contains(&b) {
                continue;
            }
            let rest: Vec<usize> = (0..6).filter(|x| ![a, b, c, d].contains(x)).collect();
            let k = index(rest[0], rest[1]);
            if k > j {
                lines.push(vec![i, j, k]);
            }
        }
    }
    IncidenceStructure::from_blocks(15, lines)
}

/// Rows and columns of a 3×3 array, point `3r + c`.
pub fn grid_3x3() -> IncidenceStructure {
    let mut lines = Vec::new();
    for r in 0..3 {
        lines.push((0..3).map(|c| 3 * r + c).collect());
    }
    for c in 0..3 {
        lines.push((0..3).map(|r| 3 * r + c).collect());
    }
    IncidenceStructure::from_blocks(9, lines)
}

/// Points `A₁..A₃` (0-2) and `B₁..B₃` (3-5) on two lines, and `C₁₂, C₁₃, C₂₃`
/// (6-8) where `C_ij` lies on `A_iB_j` and `A_jB_i`.
pub fn pappus() -> IncidenceStructure {
    let a = |i: usize| i - 1;
    let b = |i: usize| i + 2;
    let c = |i: usize, j: usize| match (i.min(j), i.max(j)) {
        (1, 2) => 6,
        (1, 3) => 7,
        _ => 8,
    };
    let mut lines = vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]];
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                lines.push(vec![a(i), b(j), c(i, j)]);
            }
        }
    }
    IncidenceStructure::from_blocks(9, lines)
}

/// The Kneser graph `K(5, 2)`.
pub fn petersen() -> Graph {
    let v = pairs(5);
    let mut edges = Vec::new();
    for (i, &(a, b)) in v.iter().enumerate() {
        for (j, &(c, d)) in v.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::new(10, edges)
}
