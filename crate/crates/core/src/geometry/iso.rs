//! Isomorphism by backtracking over point maps, pruned by degrees and by
//! the number of blocks two points share.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, IncidenceStructure};

/// `m[p][q]` = number of blocks (or edges) containing both `p` and `q`.
fn pair_counts(n: usize, blocks: &[Vec<usize>]) -> Vec<Vec<u32>> {
    let mut m = vec![vec![0u32; n]; n];
    for b in blocks {
        for &p in b {
            for &q in b {
                m[p][q] += 1;
            }
        }
    }
    m
}

/// Points in breadth-first order over the pair-count graph, so each new
/// point tends to be constrained by earlier ones.
fn search_order(m: &[Vec<u32>]) -> Vec<usize> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut head = order.len() - 1;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for y in 0..n {
                if !seen[y] && m[x][y] > 0 {
                    seen[y] = true;
                    order.push(y);
                }
            }
        }
    }
    order
}

fn backtrack(ma: &[Vec<u32>], mb: &[Vec<u32>], order: &[usize], map: &mut Vec<usize>, used: &mut Vec<bool>, depth: usize, accept: &dyn Fn(&[usize]) -> bool) -> bool {
    if depth == order.len() {
        return accept(map);
    }
    let p = order[depth];
    for q in 0..mb.len() {
        if used[q] || ma[p][p] != mb[q][q] {
            continue;
        }
        if order[..depth].iter().any(|&r| ma[p][r] != mb[q][map[r]]) {
            continue;
        }
        map[p] = q;
        used[q] = true;
        if backtrack(ma, mb, order, map, used, depth + 1, accept) {
            return true;
        }
        used[q] = false;
    }
    map[p] = usize::MAX;
    false
}

fn sorted_degrees(m: &[Vec<u32>]) -> Vec<u32> {
    let mut d: Vec<u32> = (0..m.len()).map(|i| m[i][i]).collect();
    d.sort_unstable();
    d
}

/// Whether some bijection of points carries the blocks of `a` onto those of `b`.
pub fn structure_isomorphic(a: &IncidenceStructure, b: &IncidenceStructure) -> bool {
    let n = a.num_points();
    if n != b.num_points() || a.num_blocks() != b.num_blocks() {
        return false;
    }
    let sizes = |s: &IncidenceStructure| {
        let mut v: Vec<usize> = s.blocks.iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    };
    if sizes(a) != sizes(b) {
        return false;
    }
    let (ma, mb) = (pair_counts(n, &a.blocks), pair_counts(n, &b.blocks));
    if sorted_degrees(&ma) != sorted_degrees(&mb) {
        return false;
    }
    let target: BTreeSet<Vec<usize>> = b.blocks.iter().cloned().collect();
    let accept = |map: &[usize]| {
        a.blocks.iter().all(|blk| {
            let mut img: Vec<usize> = blk.iter().map(|&p| map[p]).collect();
            img.sort_unstable();
            target.contains(&img)
        })
    };
    let order = search_order(&ma);
    backtrack(&ma, &mb, &order, &mut vec![usize::MAX; n], &mut vec![false; n], 0, &accept)
}

/// Graph isomorphism; for graphs the pair counts are the adjacency matrix
/// with degrees on the diagonal, so any map passing the pruning is an isomorphism.
pub fn graph_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n != b.n || a.edges.len() != b.edges.len() {
        return false;
    }
    let blocks = |g: &Graph| -> Vec<Vec<usize>> { g.edges.iter().map(|&(x, y)| vec![x, y]).collect() };
    let (ma, mb) = (pair_counts(a.n, &blocks(a)), pair_counts(b.n, &blocks(b)));
    if sorted_degrees(&ma) != sorted_degrees(&mb) {
        return false;
    }
    let order = search_order(&ma);
    backtrack(&ma, &mb, &order, &mut vec![usize::MAX; a.n], &mut vec![false; a.n], 0, &|_| true)
}
