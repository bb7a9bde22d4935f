//! Congruence test by lifting the coset action to `SL(2, Z/N)`.
//!
//! With `N` the generalized level, the subgroup is congruence exactly when
//! the action of `SL(2, Z)` on its cosets factors through `SL(2, Z/N)`. We
//! walk the Cayley graph of `SL(2, Z/N)` for the generators `S` and `T`,
//! attach to every element the permutation of the word that reached it, and
//! check that every edge is consistent.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::classic::sl2_order;
use super::PermPair;
use crate::error::{Error, Result};

/// Largest `|SL(2, Z/N)|` the default test will walk.
pub const DEFAULT_SL2_BOUND: u64 = 4_000_000;

pub fn is_congruence(pair: &PermPair) -> Result<bool> {
    is_congruence_bounded(pair, DEFAULT_SL2_BOUND)
}

pub fn is_congruence_bounded(pair: &PermPair, bound: u64) -> Result<bool> {
    let mu = pair.index();
    let n = pair.sigma_t().order();
    if n == 1 {
        return Ok(true);
    }
    let order = sl2_order(n);
    if order > bound {
        return Err(Error::OrderBound { bound });
    }
    let n = n as u32;
    let s_perm: Vec<u16> = pair.sigma_e().images().iter().map(|&x| x as u16).collect();
    let t_perm: Vec<u16> = pair.sigma_t().images().iter().map(|&x| x as u16).collect();
    let s_mat = [0, n - 1, 1, 0];
    let t_mat = [1, 1, 0, 1];

    let mut index = ElementIndex::new(n);
    let mut perms: Vec<u16> = Vec::with_capacity(order as usize * mu);
    let mut mats: Vec<[u32; 4]> = Vec::with_capacity(order as usize);
    index.insert([1, 0, 0, 1], 0);
    mats.push([1, 0, 0, 1]);
    perms.extend((0..mu as u16).collect::<Vec<_>>());

    let mut head = 0;
    let mut scratch = vec![0u16; mu];
    while head < mats.len() {
        let g = mats[head];
        for (m, sigma) in [(&s_mat, &s_perm), (&t_mat, &t_perm)] {
            let h = mat_mul(&g, m, n);
            // perm(g·gen) = perm(g) ∘ σ_gen
            let pg = &perms[head * mu..(head + 1) * mu];
            for i in 0..mu {
                scratch[i] = pg[sigma[i] as usize];
            }
            match index.get(&h) {
                Some(k) => {
                    if perms[k * mu..(k + 1) * mu] != scratch[..] {
                        return Ok(false);
                    }
                }
                None => {
                    index.insert(h, mats.len());
                    mats.push(h);
                    perms.extend_from_slice(&scratch);
                }
            }
        }
        head += 1;
    }
    Ok(true)
}

fn mat_mul(a: &[u32; 4], b: &[u32; 4], n: u32) -> [u32; 4] {
    let n = n as u64;
    let f = |x: u32, y: u32, z: u32, w: u32| ((x as u64 * y as u64 + z as u64 * w as u64) % n) as u32;
    [
        f(a[0], b[0], a[1], b[2]),
        f(a[0], b[1], a[1], b[3]),
        f(a[2], b[0], a[3], b[2]),
        f(a[2], b[1], a[3], b[3]),
    ]
}

/// Dense table for small moduli, ordered map otherwise.
enum ElementIndex {
    Dense { n: u64, slots: Vec<u32> },
    Sparse(BTreeMap<[u32; 4], usize>),
}

impl ElementIndex {
    fn new(n: u32) -> ElementIndex {
        let n = n as u64;
        if n.pow(4) <= 1 << 24 {
            ElementIndex::Dense { n, slots: vec![u32::MAX; n.pow(4) as usize] }
        } else {
            ElementIndex::Sparse(BTreeMap::new())
        }
    }

    fn key(n: u64, m: &[u32; 4]) -> usize {
        (((m[0] as u64 * n + m[1] as u64) * n + m[2] as u64) * n + m[3] as u64) as usize
    }

    fn get(&self, m: &[u32; 4]) -> Option<usize> {
        match self {
            ElementIndex::Dense { n, slots } => {
                let s = slots[Self::key(*n, m)];
                (s != u32::MAX).then_some(s as usize)
            }
            ElementIndex::Sparse(map) => map.get(m).copied(),
        }
    }

    fn insert(&mut self, m: [u32; 4], k: usize) {
        match self {
            ElementIndex::Dense { n, slots } => slots[Self::key(*n, &m)] = k as u32,
            ElementIndex::Sparse(map) => {
                map.insert(m, k);
            }
        }
    }
}
