//! Incidence structures read off constant-trace products of orbit projectors.
//!
//! A `k`-subset of the orbit becomes a block when some cyclic ordering of its
//! projectors has a trace in the target set. Optionally the ordered product of
//! the underlying displacement operators must be `±I`.

mod iso;
mod ks;
mod mermin;
mod templates;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::CycloNum;
use crate::pauli::PauliOp;
use crate::povm::Orbit;

pub use iso::{graph_isomorphic, structure_isomorphic};
pub use ks::{ks_noncolorable, stabilizer_contexts};
pub use mermin::{gq22_axioms, mermin_square, MerminSquare};
pub use templates::{grid_3x3, gq22, hesse, pappus, petersen};

/// Sign of an operator product that is a multiple of the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProductSign {
    Plus,
    Minus,
    Neither,
}

impl fmt::Display for ProductSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductSign::Plus => "+I",
            ProductSign::Minus => "-I",
            ProductSign::Neither => "none",
        })
    }
}

/// Points with blocks of equal size; blocks hold sorted point indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    /// Operator labels of the points, when the structure comes from an orbit.
    pub labels: Vec<String>,
    /// Orbit positions of the points.
    pub orbit_index: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    /// First target value reached by each block.
    pub traces: Vec<Option<CycloNum>>,
    /// Trace of every cyclic ordering, first element fixed, the rest permuted
    /// in lexicographic order.
    pub ordering_traces: Vec<Vec<CycloNum>>,
    pub signs: Vec<ProductSign>,
}

impl IncidenceStructure {
    /// A bare structure on `n` points, without annotations.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> IncidenceStructure {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        let m = blocks.len();
        IncidenceStructure {
            labels: (0..n).map(|i| alloc::format!("{i}")).collect(),
            orbit_index: (0..n).collect(),
            blocks,
            traces: vec![None; m],
            ordering_traces: vec![Vec::new(); m],
            signs: vec![ProductSign::Neither; m],
        }
    }

    pub fn num_points(&self) -> usize {
        self.orbit_index.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Common block size, if all blocks agree.
    pub fn block_size(&self) -> Option<usize> {
        let k = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == k).then_some(k)
    }

    /// Number of blocks through each point.
    pub fn point_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.num_points()];
        for b in &self.blocks {
            for &p in b {
                d[p] += 1;
            }
        }
        d
    }

    /// Blocks sharing exactly `shared` points with each other.
    pub fn intersection_graph(&self, shared: usize) -> Graph {
        let m = self.blocks.len();
        let mut edges = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                let common = self.blocks[a].iter().filter(|p| self.blocks[b].binary_search(p).is_ok()).count();
                if common == shared {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(m, edges)
    }

    /// The `within`-point intersection graph restricted to pairs of blocks in
    /// the same component of the `split`-point intersection graph.
    pub fn split_intersection_graph(&self, split: usize, within: usize) -> Graph {
        let mut comp = vec![0usize; self.blocks.len()];
        for (c, members) in self.intersection_graph(split).components().iter().enumerate() {
            for &b in members {
                comp[b] = c;
            }
        }
        let g = self.intersection_graph(within);
        Graph::new(g.n, g.edges.into_iter().filter(|&(a, b)| comp[a] == comp[b]).collect())
    }

    /// Connected components of the point-block incidence graph, each as a
    /// substructure with points renumbered in order.
    pub fn components(&self) -> Vec<IncidenceStructure> {
        let n = self.num_points();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for b in &self.blocks {
            for w in b.windows(2) {
                let (x, y) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for p in 0..n {
            let r = find(&mut parent, p);
            groups.entry(r).or_default().push(p);
        }
        groups
            .into_values()
            .map(|pts| {
                let local: BTreeMap<usize, usize> = pts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
                let keep: Vec<usize> = (0..self.blocks.len()).filter(|&b| local.contains_key(&self.blocks[b][0])).collect();
                IncidenceStructure {
                    labels: pts.iter().map(|&p| self.labels[p].clone()).collect(),
                    orbit_index: pts.iter().map(|&p| self.orbit_index[p]).collect(),
                    blocks: keep.iter().map(|&b| self.blocks[b].iter().map(|p| local[p]).collect()).collect(),
                    traces: keep.iter().map(|&b| self.traces[b].clone()).collect(),
                    ordering_traces: keep.iter().map(|&b| self.ordering_traces[b].clone()).collect(),
                    signs: keep.iter().map(|&b| self.signs[b]).collect(),
                }
            })
            .collect()
    }

    /// Points relabeled by `perm` (point `p` becomes `perm[p]`), blocks re-sorted.
    pub fn relabel(&self, perm: &[usize]) -> IncidenceStructure {
        let n = self.num_points();
        let mut inv = vec![0; n];
        for (p, &q) in perm.iter().enumerate() {
            inv[q] = p;
        }
        let mut rows: Vec<(Vec<usize>, usize)> = self
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut nb: Vec<usize> = b.iter().map(|&p| perm[p]).collect();
                nb.sort_unstable();
                (nb, i)
            })
            .collect();
        rows.sort();
        IncidenceStructure {
            labels: (0..n).map(|q| self.labels[inv[q]].clone()).collect(),
            orbit_index: (0..n).map(|q| self.orbit_index[inv[q]]).collect(),
            blocks: rows.iter().map(|(b, _)| b.clone()).collect(),
            traces: rows.iter().map(|&(_, i)| self.traces[i].clone()).collect(),
            ordering_traces: rows.iter().map(|&(_, i)| self.ordering_traces[i].clone()).collect(),
            signs: rows.iter().map(|&(_, i)| self.signs[i]).collect(),
        }
    }
}

/// A simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n: usize,
    /// Sorted pairs `(a, b)` with `a < b`.
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut e: Vec<(usize, usize)> = edges.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b))).collect();
        e.sort_unstable();
        e.dedup();
        Graph { n, edges: e }
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency().iter().map(Vec::len).collect()
    }

    /// Vertex sets of the connected components, in order of least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let x = comp[head];
                head += 1;
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let local: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|(a, b)| Some((*local.get(a)?, *local.get(b)?)))
            .collect();
        Graph::new(vertices.len(), edges)
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let adj = self.adjacency();
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = alloc::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let c = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(c, |b| b.min(c)));
                    }
                }
            }
        }
        best
    }

    /// Graphviz text.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = alloc::format!("graph {name} {{\n");
        for v in 0..self.n {
            s.push_str(&alloc::format!("  {v};\n"));
        }
        for &(a, b) in &self.edges {
            s.push_str(&alloc::format!("  {a} -- {b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

/// Orderings `(s₀, π(s₁), …)` for all permutations `π` of the tail, in
/// lexicographic order: one per cyclic ordering.
fn cyclic_orderings(s: &[usize]) -> Vec<Vec<usize>> {
    fn perms(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            perms(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![s[0]];
    perms(&mut s[1..].to_vec(), &mut cur, &mut out);
    out
}

/// Sign of the ordered operator product of the orbit elements `idx`.
pub fn product_sign(orbit: &Orbit, idx: &[usize]) -> ProductSign {
    let group = orbit.group();
    let ops: Vec<&PauliOp> = idx.iter().map(|&i| &orbit.ops()[i]).collect();
    match group.product(&ops).sign_of_identity(group.dims()) {
        Some(true) => ProductSign::Plus,
        Some(false) => ProductSign::Minus,
        None => ProductSign::Neither,
    }
}

/// Cyclic traces and product signs of every `k`-subset of an orbit,
/// computed once so that several target sets can be tried cheaply.
pub struct TupleTable {
    k: usize,
    labels: Vec<String>,
    subsets: Vec<Vec<usize>>,
    values: Vec<Vec<CycloNum>>,
    signs: Vec<ProductSign>,
    field: alloc::sync::Arc<crate::cyclotomic::CycloField>,
}

impl TupleTable {
    pub fn new(orbit: &Orbit, k: usize) -> TupleTable {
        let mut subsets = Vec::new();
        let mut values = Vec::new();
        let mut signs = Vec::new();
        if k >= 2 && k <= orbit.len() {
            for_each_subset(orbit.len(), k, &mut |s| {
                subsets.push(s.to_vec());
                values.push(cyclic_orderings(s).iter().map(|o| orbit.cyclic_trace(o)).collect());
                signs.push(product_sign(orbit, s));
            });
        }
        TupleTable { k, labels: orbit.ops().iter().map(PauliOp::name).collect(), subsets, values, signs, field: orbit.field().clone() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Blocks whose cyclic traces reach `targets`.
    pub fn lines(&self, targets: &[CycloNum], require_pm_identity: bool) -> IncidenceStructure {
        let targets: Vec<CycloNum> = targets.iter().filter_map(|t| t.lift(&self.field).ok()).collect();
        let mut found: Vec<usize> = Vec::new();
        let mut hits: Vec<CycloNum> = Vec::new();
        if !targets.is_empty() {
            for (i, vals) in self.values.iter().enumerate() {
                if require_pm_identity && self.signs[i] == ProductSign::Neither {
                    continue;
                }
                if let Some(h) = vals.iter().find(|v| targets.contains(v)) {
                    found.push(i);
                    hits.push(h.clone());
                }
            }
        }
        let used: BTreeSet<usize> = found.iter().flat_map(|&i| self.subsets[i].iter().copied()).collect();
        let local: BTreeMap<usize, usize> = used.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        IncidenceStructure {
            labels: used.iter().map(|&p| self.labels[p].clone()).collect(),
            orbit_index: used.iter().copied().collect(),
            blocks: found.iter().map(|&i| self.subsets[i].iter().map(|p| local[p]).collect()).collect(),
            traces: hits.into_iter().map(Some).collect(),
            ordering_traces: found.iter().map(|&i| self.values[i].clone()).collect(),
            signs: found.iter().map(|&i| self.signs[i]).collect(),
        }
    }

    /// Distinct real cyclic-trace values with the number of subsets
    /// attaining each, sorted by value.
    pub fn real_values(&self, require_pm_identity: bool) -> Vec<(CycloNum, usize)> {
        let mut seen: BTreeMap<(u32, Vec<num_bigint::BigInt>, num_bigint::BigInt), (CycloNum, usize)> = BTreeMap::new();
        for (i, vals) in self.values.iter().enumerate() {
            if require_pm_identity && self.signs[i] == ProductSign::Neither {
                continue;
            }
            let mut here: Vec<&CycloNum> = vals.iter().filter(|v| v.is_real()).collect();
            here.sort_by(|a, b| a.cmp_canonical(b));
            here.dedup();
            for v in here {
                seen.entry(v.canonical_key()).or_insert((v.clone(), 0)).1 += 1;
            }
        }
        let mut out: Vec<(CycloNum, usize)> = seen.into_values().collect();
        out.sort_by(|a, b| crate::povm::cmp_real(&a.0, &b.0));
        out
    }
}

/// Blocks of `k` orbit elements with a cyclic trace in `targets`.
pub fn tuple_lines(orbit: &Orbit, k: usize, targets: &[CycloNum], require_pm_identity: bool) -> IncidenceStructure {
    if targets.is_empty() {
        return TupleTable::new(orbit, 0).lines(&[], require_pm_identity);
    }
    TupleTable::new(orbit, k).lines(targets, require_pm_identity)
}

/// Distinct real values taken by cyclic traces of `k`-subsets, with the
/// number of subsets attaining each, sorted by value.
pub fn real_cyclic_values(orbit: &Orbit, k: usize, require_pm_identity: bool) -> Vec<(CycloNum, usize)> {
    TupleTable::new(orbit, k).real_values(require_pm_identity)
}

/// Operators on each row and column of a Mermin square found in `s`.
pub fn square_lines(orbit: &Orbit, s: &IncidenceStructure, square: &MerminSquare) -> Vec<Vec<PauliOp>> {
    square.rows.iter().chain(&square.cols).map(|&b| s.blocks[b].iter().map(|&p| orbit.ops()[s.orbit_index[p]].clone()).collect()).collect()
}

/// The geometries that can be recognized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeometryKind {
    Hesse,
    Gq22,
    MerminSquare,
    Grid3x3,
    Pappus,
    PetersenDecomp,
    BorromeanPair,
    Unrecognized,
}

impl GeometryKind {
    pub fn name(&self) -> &'static str {
        match self {
            GeometryKind::Hesse => "HESSE",
            GeometryKind::Gq22 => "GQ22",
            GeometryKind::MerminSquare => "MERMIN_SQUARE",
            GeometryKind::Grid3x3 => "GRID_3x3",
            GeometryKind::Pappus => "PAPPUS",
            GeometryKind::PetersenDecomp => "PETERSEN_DECOMP",
            GeometryKind::BorromeanPair => "BORROMEAN_PAIR",
            GeometryKind::Unrecognized => "UNRECOGNIZED",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeometryLabel {
    pub kind: GeometryKind,
    pub copies: usize,
}

impl GeometryLabel {
    pub const UNRECOGNIZED: GeometryLabel = GeometryLabel { kind: GeometryKind::Unrecognized, copies: 0 };
}

impl fmt::Display for GeometryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GeometryKind::Unrecognized => f.write_str("UNRECOGNIZED"),
            _ => write!(f, "{} x{}", self.kind.name(), self.copies),
        }
    }
}

/// Odd number of `-I` lines with every line `±I`.
fn odd_parity(signs: &[ProductSign]) -> bool {
    signs.iter().all(|s| *s != ProductSign::Neither) && signs.iter().filter(|s| **s == ProductSign::Minus).count() % 2 == 1
}

/// Matches every component against the stored templates; a label is given
/// only when all components are isomorphic to the same template.
pub fn recognize(s: &IncidenceStructure) -> GeometryLabel {
    let comps = s.components();
    if comps.is_empty() || comps.iter().any(|c| c.is_empty()) {
        return GeometryLabel::UNRECOGNIZED;
    }
    let copies = comps.len();
    let templates = [
        (GeometryKind::Hesse, hesse()),
        (GeometryKind::Gq22, gq22()),
        (GeometryKind::Grid3x3, grid_3x3()),
        (GeometryKind::Pappus, pappus()),
    ];
    for (kind, t) in &templates {
        if comps.iter().all(|c| structure_isomorphic(c, t)) {
            let kind = if *kind == GeometryKind::Grid3x3 && comps.iter().all(|c| odd_parity(&c.signs)) {
                GeometryKind::MerminSquare
            } else {
                *kind
            };
            return GeometryLabel { kind, copies };
        }
    }
    if copies == 2
        && comps.iter().all(|c| c.num_points() == 6 && c.block_size() == Some(4))
        && structure_isomorphic(&comps[0], &comps[1])
    {
        return GeometryLabel { kind: GeometryKind::BorromeanPair, copies: 1 };
    }
    GeometryLabel::UNRECOGNIZED
}

/// Counts graph components isomorphic to the Petersen graph; the label is
/// given when every component is one.
pub fn recognize_graph(g: &Graph) -> GeometryLabel {
    let comps = g.components();
    let p = petersen();
    if g.n == 0 {
        return GeometryLabel::UNRECOGNIZED;
    }
    let count = comps.iter().filter(|c| graph_isomorphic(&g.induced(c), &p)).count();
    if count == comps.len() {
        GeometryLabel { kind: GeometryKind::PetersenDecomp, copies: count }
    } else {
        GeometryLabel::UNRECOGNIZED
    }
}

/// Structures attained at each target value separately and at their union.
pub fn per_target_structures(orbit: &Orbit, k: usize, targets: &[CycloNum], require_pm_identity: bool) -> Vec<(Vec<CycloNum>, IncidenceStructure)> {
    let mut out: Vec<(Vec<CycloNum>, IncidenceStructure)> =
        targets.iter().map(|t| (vec![t.clone()], tuple_lines(orbit, k, core::slice::from_ref(t), require_pm_identity))).collect();
    if targets.len() > 1 {
        out.push((targets.to_vec(), tuple_lines(orbit, k, targets, require_pm_identity)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycloField;
    use crate::linalg::CycloVector;
    use crate::pauli::DimFactorization;
    use crate::linalg::CycloMatrix;
    use crate::povm::Fiducial;

    fn orbit(dims: &str, conductor: u32, entries: Vec<CycloNum>) -> Orbit {
        let dims: DimFactorization = dims.parse().unwrap();
        let f = Fiducial::from_vector(dims, CycloVector::in_field(&CycloField::new(conductor), entries).unwrap()).unwrap();
        Orbit::new(&f)
    }

    fn ints(xs: &[i64]) -> Vec<CycloNum> {
        let f = CycloField::new(1);
        xs.iter().map(|&x| CycloNum::from_int(&f, x)).collect()
    }

    fn q(a: i64, b: i64) -> CycloNum {
        CycloNum::from_fraction(&CycloField::new(1), a, b)
    }

    #[test]
    fn hesse_from_qutrit_sic() {
        let o = orbit("3", 1, ints(&[0, 1, -1]));
        let s = tuple_lines(&o, 3, &[q(1, 8), q(-1, 8)], false);
        assert_eq!((s.num_points(), s.num_blocks()), (9, 12));
        assert!(s.point_degrees().iter().all(|&d| d == 4));
        for a in 0..9 {
            for b in a + 1..9 {
                let common = s.blocks.iter().filter(|l| l.contains(&a) && l.contains(&b)).count();
                assert_eq!(common, 1);
            }
        }
        assert_eq!(recognize(&s), GeometryLabel { kind: GeometryKind::Hesse, copies: 1 });
    }

    #[test]
    fn empty_targets_give_empty_structure() {
        let o = orbit("3", 1, ints(&[0, 1, -1]));
        let s = tuple_lines(&o, 3, &[], false);
        assert!(s.is_empty());
        assert_eq!(s.num_points(), 0);
        assert_eq!(recognize(&s), GeometryLabel::UNRECOGNIZED);
    }

    #[test]
    fn intersection_graphs_of_small_structures() {
        let s = IncidenceStructure::from_blocks(6, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(s.intersection_graph(1).edges.is_empty());
        let t = IncidenceStructure::from_blocks(5, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(t.intersection_graph(1).edges, vec![(0, 1)]);
        assert!(t.intersection_graph(2).edges.is_empty());
        assert_eq!(s.components().len(), 2);
    }

    #[test]
    fn orderings_are_cyclic_representatives() {
        assert_eq!(cyclic_orderings(&[1, 2, 3]), vec![vec![1, 2, 3], vec![1, 3, 2]]);
        assert_eq!(cyclic_orderings(&[0, 1, 2, 3]).len(), 6);
    }

    #[test]
    fn unrecognized_control() {
        let s = IncidenceStructure::from_blocks(9, vec![vec![0, 1, 2], vec![0, 3, 4], vec![5, 6, 7], vec![1, 7, 8]]);
        assert_eq!(recognize(&s), GeometryLabel::UNRECOGNIZED);
    }

    #[test]
    fn templates_recognize_themselves() {
        assert_eq!(recognize(&hesse()).kind, GeometryKind::Hesse);
        assert_eq!(recognize(&gq22()).kind, GeometryKind::Gq22);
        assert_eq!(recognize(&grid_3x3()).kind, GeometryKind::Grid3x3);
        assert_eq!(recognize(&pappus()).kind, GeometryKind::Pappus);
        assert!(!structure_isomorphic(&hesse(), &pappus()));
        let p = petersen();
        assert_eq!(recognize_graph(&p), GeometryLabel { kind: GeometryKind::PetersenDecomp, copies: 1 });
        assert_eq!(p.girth(), Some(5));
    }

    #[test]
    fn dot_output() {
        let g = Graph::new(2, vec![(1, 0)]);
        assert_eq!(g.to_dot("g"), "graph g {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }

    #[test]
    fn two_qubit_doily_and_square() {
        let f = CycloField::new(6);
        let w = CycloNum::root_of_unity(&f, 6, 1).unwrap();
        let one = CycloNum::one(&f);
        let o = orbit("2x2", 6, vec![CycloNum::zero(&f), one.clone(), -&w, &w - &one]);
        let s = tuple_lines(&o, 3, &[q(1, 9), q(1, 27), q(-1, 27)], true);
        assert_eq!((s.num_points(), s.num_blocks()), (15, 15));
        assert!(gq22_axioms(&s));
        assert_eq!(recognize(&s).kind, GeometryKind::Gq22);
        let sq = mermin_square(&s).unwrap();
        assert_eq!(sq.minus_count() % 2, 1);
        assert!(sq.rows.iter().all(|&b| s.traces[b] == Some(q(-1, 27).lift(o.field()).unwrap())));
        assert!(sq.cols.iter().all(|&b| s.traces[b] == Some(q(1, 27).lift(o.field()).unwrap())));
        let g = sq.structure(&s);
        assert!(structure_isomorphic(&g, &grid_3x3()));
        for b in 0..6 {
            let ops: Vec<&PauliOp> = g.blocks[b].iter().map(|&p| &o.ops()[g.orbit_index[p]]).collect();
            let m = ops.iter().fold(CycloMatrix::identity(o.group().field(), 4), |acc, op| &acc * &o.group().matrix(op));
            let sign = if g.signs[b] == ProductSign::Minus { -1 } else { 1 };
            assert_eq!(m, CycloMatrix::identity(o.group().field(), 4).scale(&CycloNum::from_int(o.group().field(), sign)));
        }
        let ctx = stabilizer_contexts(o.group().dims(), &square_lines(&o, &s, &sq)).unwrap();
        assert!(ks_noncolorable(&ctx).unwrap());
    }

    #[test]
    fn five_dimensional_configuration() {
        let o = orbit("5", 5, ints(&[0, 1, -1, -1, 1]));
        let s = tuple_lines(&o, 3, &[q(-1, 64)], false);
        assert_eq!((s.num_points(), s.num_blocks()), (25, 100));
        assert!(s.point_degrees().iter().all(|&d| d == 12));
        assert_eq!(s.intersection_graph(2).components().len(), 10);
        assert_eq!(recognize_graph(&s.intersection_graph(1)), GeometryLabel::UNRECOGNIZED);
        assert_eq!(recognize_graph(&s.split_intersection_graph(2, 1)), GeometryLabel { kind: GeometryKind::PetersenDecomp, copies: 10 });
    }
}
