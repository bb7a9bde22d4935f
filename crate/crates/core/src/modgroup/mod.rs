//! Finite-index subgroups of the modular group as permutation pairs.
//!
//! A subgroup of index `μ` is described by the action of the generators
//! `e` (order 2) and `v` (order 3) on its `μ` cosets. The parabolic element
//! acts as `σ_T = σ_e ∘ σ_v`, with `v` applied first.

mod classic;
mod congruence;
mod enumerate;
mod stabchain;

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use classic::{commutator_subgroup, dedekind_psi, gamma, gamma0, gamma_index_formula, sl2_order};
pub use congruence::{is_congruence, is_congruence_bounded, DEFAULT_SL2_BOUND};
pub use enumerate::{enumerate_index, enumerate_index_with_limit, DEFAULT_INDEX_LIMIT};
pub use stabchain::{group_order, group_order_bounded, DEFAULT_ORDER_BOUND};

use crate::cyclotomic::CycloField;
use crate::error::{Error, Result};
use crate::linalg::CycloMatrix;
use crate::perm::Perm;
use alloc::sync::Arc;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermPair {
    e: Perm,
    v: Perm,
}

impl PermPair {
    /// Checks `e² = v³ = 1` and transitivity.
    pub fn new(e: Perm, v: Perm) -> Result<PermPair> {
        let mu = e.degree();
        if mu == 0 {
            return Err(Error::InvalidPair("index must be positive".into()));
        }
        if v.degree() != mu {
            return Err(Error::InvalidPair(format!(
                "sigma_e acts on {mu} points but sigma_v on {}",
                v.degree()
            )));
        }
        if !e.compose(&e).is_identity() {
            return Err(Error::InvalidPair(format!("sigma_e = {e} is not an involution")));
        }
        if !v.compose(&v).compose(&v).is_identity() {
            return Err(Error::InvalidPair(format!("sigma_v = {v} does not have order dividing 3")));
        }
        let pair = PermPair { e, v };
        if !pair.is_transitive() {
            return Err(Error::InvalidPair("the generated group is not transitive".into()));
        }
        Ok(pair)
    }

    /// Parses both permutations from cycle notation on `mu` points.
    pub fn from_cycles(mu: usize, e: &str, v: &str) -> Result<PermPair> {
        PermPair::new(Perm::parse_cycles(mu, e)?, Perm::parse_cycles(mu, v)?)
    }

    pub(crate) fn from_arrays_unchecked(e: Vec<u32>, v: Vec<u32>) -> PermPair {
        PermPair {
            e: Perm::from_images(e).expect("valid image array"),
            v: Perm::from_images(v).expect("valid image array"),
        }
    }

    pub fn trivial() -> PermPair {
        PermPair { e: Perm::identity(1), v: Perm::identity(1) }
    }

    pub fn index(&self) -> usize {
        self.e.degree()
    }

    pub fn sigma_e(&self) -> &Perm {
        &self.e
    }

    pub fn sigma_v(&self) -> &Perm {
        &self.v
    }

    pub fn sigma_t(&self) -> Perm {
        self.e.compose(&self.v)
    }

    fn is_transitive(&self) -> bool {
        let mu = self.index();
        let mut seen = vec![false; mu];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for y in [self.e.apply(x), self.v.apply(x)] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == mu
    }

    /// Relabels points in breadth-first order from `root`, following `e`, `v`, `v²`.
    pub(crate) fn bfs_relabel(&self, root: usize) -> (Vec<u32>, Vec<u32>) {
        let mu = self.index();
        let mut label = vec![u32::MAX; mu];
        let mut order = Vec::with_capacity(mu);
        label[root] = 0;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            let vx = self.v.apply(x);
            for y in [self.e.apply(x), vx, self.v.apply(vx)] {
                if label[y] == u32::MAX {
                    label[y] = order.len() as u32;
                    order.push(y);
                }
            }
        }
        let mut ne = vec![0u32; mu];
        let mut nv = vec![0u32; mu];
        for x in 0..mu {
            ne[label[x] as usize] = label[self.e.apply(x)];
            nv[label[x] as usize] = label[self.v.apply(x)];
        }
        (ne, nv)
    }

    /// Canonical representative of the conjugacy class: the least breadth-first
    /// relabeling over all roots, compared on `σ_e` then `σ_v`.
    pub fn canonical(&self) -> PermPair {
        let mut best = self.bfs_relabel(0);
        for r in 1..self.index() {
            let cand = self.bfs_relabel(r);
            if cand < best {
                best = cand;
            }
        }
        PermPair::from_arrays_unchecked(best.0, best.1)
    }

    pub fn is_canonical(&self) -> bool {
        let own = (self.e.images(), self.v.images());
        if self.bfs_relabel(0) != (own.0.to_vec(), own.1.to_vec()) {
            return false;
        }
        (1..self.index()).all(|r| {
            let c = self.bfs_relabel(r);
            (c.0.as_slice(), c.1.as_slice()) >= own
        })
    }

    /// Whether the two pairs describe conjugate subgroups.
    pub fn is_conjugate(&self, other: &PermPair) -> bool {
        self.index() == other.index() && self.canonical() == other.canonical()
    }

    /// Full signature; the congruence test is bounded by `DEFAULT_SL2_BOUND`.
    pub fn signature(&self) -> Result<Signature> {
        let mut s = self.signature_without_congruence()?;
        s.congruence = is_congruence(self)?;
        Ok(s)
    }

    pub fn signature_without_congruence(&self) -> Result<Signature> {
        let mu = self.index();
        let nu2 = self.e.fixed_points();
        let nu3 = self.v.fixed_points();
        let cusp_widths = self.sigma_t().cycle_type();
        let level = cusp_widths.iter().fold(1u64, |acc, &w| num_integer::lcm(acc, w as u64));
        let twelve_g_minus_one = mu as i64 - 3 * nu2 as i64 - 4 * nu3 as i64 - 6 * cusp_widths.len() as i64;
        if twelve_g_minus_one % 12 != 0 || twelve_g_minus_one < -12 {
            return Err(Error::InvalidPair(format!(
                "genus formula gives 1 + {twelve_g_minus_one}/12, not a non-negative integer"
            )));
        }
        Ok(Signature {
            index: mu,
            genus: (twelve_g_minus_one / 12 + 1) as u64,
            nu2,
            nu3,
            cusp_widths,
            level,
            congruence: false,
        })
    }

    /// 0/1 matrices with a 1 in row `i`, column `σ(i)`.
    pub fn perm_matrices(&self, field: &Arc<CycloField>) -> (CycloMatrix, CycloMatrix) {
        (CycloMatrix::from_perm(field, &self.e), CycloMatrix::from_perm(field, &self.v))
    }

    /// Order of the permutation group `⟨σ_e, σ_v⟩`.
    pub fn group_order(&self) -> Result<u64> {
        group_order(self)
    }
}

impl fmt::Debug for PermPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermPair {{ e: {}, v: {} }}", self.e, self.v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub index: usize,
    pub genus: u64,
    pub nu2: usize,
    pub nu3: usize,
    /// Sorted ascending.
    pub cusp_widths: Vec<usize>,
    pub level: u64,
    pub congruence: bool,
}

impl Signature {
    pub fn cusps(&self) -> usize {
        self.cusp_widths.len()
    }

    /// Cusp widths as `[1^1 6^1]`.
    pub fn cusp_notation(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.cusp_widths.len() {
            let w = self.cusp_widths[i];
            let mut k = i;
            while k < self.cusp_widths.len() && self.cusp_widths[k] == w {
                k += 1;
            }
            parts.push(format!("{w}^{}", k - i));
            i = k;
        }
        format!("[{}]", parts.join(" "))
    }

    /// `NC(g,N,ν2,ν3,[widths])` for non-congruence groups, `C(...)` otherwise.
    pub fn label(&self) -> String {
        format!(
            "{}({},{},{},{},{})",
            if self.congruence { "C" } else { "NC" },
            self.genus,
            self.level,
            self.nu2,
            self.nu3,
            self.cusp_notation()
        )
    }
}
