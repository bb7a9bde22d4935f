//! Deterministic Schreier–Sims for the order of `⟨σ_e, σ_v⟩`.

use alloc::vec;
use alloc::vec::Vec;

use super::PermPair;
use crate::error::{Error, Result};
use crate::perm::Perm;

pub const DEFAULT_ORDER_BOUND: u64 = 1 << 62;

pub fn group_order(pair: &PermPair) -> Result<u64> {
    group_order_bounded(pair, DEFAULT_ORDER_BOUND)
}

pub fn group_order_bounded(pair: &PermPair, bound: u64) -> Result<u64> {
    let order = order_of_generated(&[pair.sigma_e().clone(), pair.sigma_v().clone()]);
    if order > bound as u128 {
        return Err(Error::OrderBound { bound });
    }
    Ok(order as u64)
}

/// Order of the group generated by `gens` (all of the same degree).
pub fn order_of_generated(gens: &[Perm]) -> u128 {
    let Some(first) = gens.first() else { return 1 };
    let mut chain = Chain { n: first.degree(), levels: Vec::new() };
    for g in gens {
        chain.insert(0, g.clone());
    }
    chain.levels.iter().map(|l| l.orbit.len() as u128).product()
}

struct Level {
    base: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Perm>>,
}

struct Chain {
    n: usize,
    levels: Vec<Level>,
}

impl Chain {
    /// Strips `g` through the levels from `i`; returns the residue and the level
    /// at which it stopped.
    fn sift(&self, i: usize, mut g: Perm) -> (Perm, usize) {
        for (k, level) in self.levels.iter().enumerate().skip(i) {
            let p = g.apply(level.base);
            match &level.transversal[p] {
                Some(t) => g = t.inverse().compose(&g),
                None => return (g, k),
            }
        }
        let k = self.levels.len();
        (g, k)
    }

    fn insert(&mut self, i: usize, g: Perm) {
        let (h, _) = self.sift(i, g.clone());
        if h.is_identity() {
            return;
        }
        if i == self.levels.len() {
            let base = (0..self.n).find(|&x| g.apply(x) != x).expect("non-identity moves a point");
            let mut transversal = vec![None; self.n];
            transversal[base] = Some(Perm::identity(self.n));
            self.levels.push(Level { base, gens: Vec::new(), orbit: vec![base], transversal });
        }
        let new_gen = self.levels[i].gens.len();
        self.levels[i].gens.push(g);
        let old_orbit = self.levels[i].orbit.len();
        let mut pending = Vec::new();
        let mut idx = 0;
        while idx < self.levels[i].orbit.len() {
            let p = self.levels[i].orbit[idx];
            for s_idx in 0..self.levels[i].gens.len() {
                if idx < old_orbit && s_idx < new_gen {
                    continue;
                }
                let level = &mut self.levels[i];
                let s = &level.gens[s_idx];
                let q = s.apply(p);
                let tp = level.transversal[p].clone().expect("orbit point has a transversal");
                let stp = s.compose(&tp);
                match &level.transversal[q] {
                    None => {
                        level.transversal[q] = Some(stp);
                        level.orbit.push(q);
                    }
                    Some(tq) => {
                        let schreier = tq.inverse().compose(&stp);
                        if !schreier.is_identity() {
                            pending.push(schreier);
                        }
                    }
                }
            }
            idx += 1;
        }
        for s in pending {
            self.insert(i + 1, s);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    /// Closure of the generators under composition.
    fn brute_order(gens: &[Perm]) -> usize {
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        let mut stack = vec![Perm::identity(gens[0].degree())];
        seen.insert(stack[0].clone());
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn small_groups_match_closure() {
        let cases = [
            ("(2,3)", "(1,2,3)", 3, 6),
            ("(1,2)(3,4)", "(2,3,4)", 4, 12),
            ("(1,2)(3,4)", "(1,3,5)", 5, 60),
        ];
        for (e, v, n, want) in cases {
            let gens = [Perm::parse_cycles(n, e).unwrap(), Perm::parse_cycles(n, v).unwrap()];
            assert_eq!(brute_order(&gens), want);
            assert_eq!(order_of_generated(&gens), want as u128);
        }
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=9 {
            let gens = [
                Perm::parse_cycles(n, "(1,2)").unwrap(),
                Perm::from_images((1..n as u32).chain([0]).collect()).unwrap(),
            ];
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(order_of_generated(&gens), fact);
        }
    }
}
