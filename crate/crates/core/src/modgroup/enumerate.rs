use alloc::vec;
use alloc::vec::Vec;

use super::PermPair;
use crate::error::{Error, Result};

pub const DEFAULT_INDEX_LIMIT: usize = 16;

const UNSET: u32 = u32::MAX;

/// One canonical pair per conjugacy class of index-`mu` subgroups, sorted.
pub fn enumerate_index(mu: usize) -> Result<Vec<PermPair>> {
    enumerate_index_with_limit(mu, DEFAULT_INDEX_LIMIT)
}

pub fn enumerate_index_with_limit(mu: usize, limit: usize) -> Result<Vec<PermPair>> {
    if mu == 0 {
        return Err(Error::InvalidInput("index must be positive".into()));
    }
    if mu > limit {
        return Err(Error::IndexLimit { index: mu, limit });
    }
    let mut st = State { mu, e: vec![UNSET; mu], v: vec![UNSET; mu], fresh: 1, out: Vec::new() };
    st.visit(0);
    st.out.sort();
    Ok(st.out)
}

/// Builds every pair whose labels already follow breadth-first order from
/// point 0, keeping those that are minimal over all roots.
struct State {
    mu: usize,
    e: Vec<u32>,
    v: Vec<u32>,
    fresh: usize,
    out: Vec<PermPair>,
}

impl State {
    fn visit(&mut self, x: usize) {
        if x == self.fresh {
            if self.fresh == self.mu {
                let p = PermPair::from_arrays_unchecked(self.e.clone(), self.v.clone());
                if p.is_canonical() {
                    self.out.push(p);
                }
            }
            return;
        }
        if self.e[x] != UNSET {
            self.visit_v(x);
            return;
        }
        // fixed point
        self.e[x] = x as u32;
        self.visit_v(x);
        self.e[x] = UNSET;
        // transposition with a point seen earlier, or with the next fresh label
        for y in self.candidates(x, true) {
            let was_fresh = y == self.fresh;
            if was_fresh {
                self.fresh += 1;
            }
            self.e[x] = y as u32;
            self.e[y] = x as u32;
            self.visit_v(x);
            self.e[x] = UNSET;
            self.e[y] = UNSET;
            if was_fresh {
                self.fresh -= 1;
            }
        }
    }

    fn visit_v(&mut self, x: usize) {
        if self.v[x] != UNSET {
            self.visit(x + 1);
            return;
        }
        self.v[x] = x as u32;
        self.visit(x + 1);
        self.v[x] = UNSET;
        for y in self.candidates(x, false) {
            let y_fresh = y == self.fresh;
            if y_fresh {
                self.fresh += 1;
            }
            self.v[y] = UNSET - 1; // reserve while choosing z
            for z in self.candidates(x, false) {
                if z == y {
                    continue;
                }
                let z_fresh = z == self.fresh;
                if z_fresh {
                    self.fresh += 1;
                }
                self.v[x] = y as u32;
                self.v[y] = z as u32;
                self.v[z] = x as u32;
                self.visit(x + 1);
                self.v[x] = UNSET;
                self.v[y] = UNSET - 1;
                self.v[z] = UNSET;
                if z_fresh {
                    self.fresh -= 1;
                }
            }
            self.v[y] = UNSET;
            if y_fresh {
                self.fresh -= 1;
            }
        }
    }

    /// Labelled points after `x` still free under `e` (or `v`), then the fresh label.
    fn candidates(&self, x: usize, for_e: bool) -> Vec<usize> {
        let arr = if for_e { &self.e } else { &self.v };
        let mut c: Vec<usize> = (x + 1..self.fresh).filter(|&y| arr[y] == UNSET).collect();
        if self.fresh < self.mu {
            c.push(self.fresh);
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_class_counts() {
        let counts: Vec<usize> = (1..=8).map(|mu| enumerate_index(mu).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 2, 1, 8, 6, 7]);
    }

    #[test]
    fn index_limit_is_enforced() {
        assert_eq!(enumerate_index_with_limit(10, 9), Err(Error::IndexLimit { index: 10, limit: 9 }));
        assert!(enumerate_index(0).is_err());
    }

    #[test]
    fn index_three_contains_gamma0_2() {
        let want = PermPair::from_cycles(3, "(2,3)", "(1,2,3)").unwrap();
        let list = enumerate_index(3).unwrap();
        assert!(list.iter().any(|p| p.is_conjugate(&want)));
    }
}
