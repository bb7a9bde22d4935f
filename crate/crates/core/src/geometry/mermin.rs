//! Generalized quadrangle axioms and Mermin squares inside a doily.

use alloc::vec::Vec;

use super::{IncidenceStructure, ProductSign};

fn meet(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|p| b.contains(p)).count()
}

/// 15 points, 15 lines of 3, 3 lines per point, no two lines sharing two
/// points, and for every point off a line exactly one line through the point
/// meets it.
pub fn gq22_axioms(s: &IncidenceStructure) -> bool {
    if s.num_points() != 15 || s.num_blocks() != 15 || s.block_size() != Some(3) {
        return false;
    }
    if s.point_degrees().iter().any(|&d| d != 3) {
        return false;
    }
    let lines = &s.blocks;
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if meet(&lines[i], &lines[j]) >= 2 {
                return false;
            }
        }
    }
    for l in lines {
        for p in (0..15).filter(|p| !l.contains(p)) {
            let through_p_meeting_l = lines.iter().filter(|m| m.contains(&p) && meet(m, l) == 1).count();
            if through_p_meeting_l != 1 {
                return false;
            }
        }
    }
    true
}

/// Three rows and three columns of a 3×3 grid of operators whose line
/// products are all `±I` with an odd number of `-I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MerminSquare {
    /// Block indices in the source structure.
    pub rows: [usize; 3],
    pub cols: [usize; 3],
    /// `grid[i][j]` is the point on row `i` and column `j`.
    pub grid: [[usize; 3]; 3],
    pub signs_rows: [ProductSign; 3],
    pub signs_cols: [ProductSign; 3],
}

impl MerminSquare {
    pub fn minus_count(&self) -> usize {
        self.signs_rows.iter().chain(&self.signs_cols).filter(|s| **s == ProductSign::Minus).count()
    }

    /// The nine points and six lines as a structure of its own.
    pub fn structure(&self, s: &IncidenceStructure) -> IncidenceStructure {
        let lines: Vec<usize> = self.rows.iter().chain(&self.cols).copied().collect();
        let mut pts: Vec<usize> = self.grid.iter().flatten().copied().collect();
        pts.sort_unstable();
        let local = |p: usize| pts.binary_search(&p).expect("grid point");
        IncidenceStructure {
            labels: pts.iter().map(|&p| s.labels[p].clone()).collect(),
            orbit_index: pts.iter().map(|&p| s.orbit_index[p]).collect(),
            blocks: lines.iter().map(|&b| s.blocks[b].iter().map(|&p| local(p)).collect()).collect(),
            traces: lines.iter().map(|&b| s.traces[b].clone()).collect(),
            ordering_traces: lines.iter().map(|&b| s.ordering_traces[b].clone()).collect(),
            signs: lines.iter().map(|&b| s.signs[b]).collect(),
        }
    }
}

fn class_value(s: &IncidenceStructure, lines: &[usize; 3]) -> Option<f64> {
    let vals: Vec<_> = lines.iter().map(|&b| s.traces[b].clone()).collect::<Option<Vec<_>>>()?;
    vals.iter().all(|v| *v == vals[0]).then(|| vals[0].embed().re)
}

/// A Mermin square among the lines of a doily, or `None` when the structure
/// is not a doily or no grid meets the sign condition. Grids whose rows share
/// one trace value and whose columns share another are preferred; rows are
/// the class with the smaller value.
pub fn mermin_square(s: &IncidenceStructure) -> Option<MerminSquare> {
    if !gq22_axioms(s) {
        return None;
    }
    let lines = &s.blocks;
    let m = lines.len();
    let disjoint = |a: usize, b: usize| meet(&lines[a], &lines[b]) == 0;
    let mut best: Option<(bool, MerminSquare)> = None;
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if !(disjoint(a, b) && disjoint(a, c) && disjoint(b, c)) {
                    continue;
                }
                let rows = [a, b, c];
                let transversals: Vec<usize> = (0..m).filter(|t| !rows.contains(t) && rows.iter().all(|&r| meet(&lines[*t], &lines[r]) == 1)).collect();
                for x in 0..transversals.len() {
                    for y in x + 1..transversals.len() {
                        for z in y + 1..transversals.len() {
                            let cols = [transversals[x], transversals[y], transversals[z]];
                            if !(disjoint(cols[0], cols[1]) && disjoint(cols[0], cols[2]) && disjoint(cols[1], cols[2])) {
                                continue;
                            }
                            let signs_rows = rows.map(|r| s.signs[r]);
                            let signs_cols = cols.map(|r| s.signs[r]);
                            if signs_rows.iter().chain(&signs_cols).any(|x| *x == ProductSign::Neither) {
                                continue;
                            }
                            let minus = signs_rows.iter().chain(&signs_cols).filter(|x| **x == ProductSign::Minus).count();
                            if minus % 2 == 0 {
                                continue;
                            }
                            let (rv, cv) = (class_value(s, &rows), class_value(s, &cols));
                            let uniform = matches!((rv, cv), (Some(r), Some(c)) if r < c);
                            let grid = rows.map(|r| cols.map(|c| *lines[r].iter().find(|p| lines[c].contains(p)).expect("transversal meets row")));
                            let cand = MerminSquare { rows, cols, grid, signs_rows, signs_cols };
                            let better = match &best {
                                None => true,
                                Some((u, _)) => uniform && !u,
                            };
                            if better {
                                best = Some((uniform, cand));
                            }
                        }
                    }
                }
            }
        }
    }
    best.map(|(_, sq)| sq)
}
