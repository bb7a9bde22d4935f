//! Permutations of `{0, …, n-1}` stored as image arrays.
//!
//! Cycle notation on the outside is 1-based, e.g. `(1,2)(3,4)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { img: (0..n as u32).collect() }
    }

    pub fn from_images(img: Vec<u32>) -> Result<Perm> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{img:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm { img })
    }

    /// Builds a permutation on `n` points from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut used = vec![false; n];
        for cyc in cycles {
            for (k, &p) in cyc.iter().enumerate() {
                if p == 0 || p > n {
                    return Err(Error::InvalidPermutation(format!("point {p} outside 1..={n}")));
                }
                if used[p - 1] {
                    return Err(Error::InvalidPermutation(format!("point {p} repeated")));
                }
                used[p - 1] = true;
                img[p - 1] = (cyc[(k + 1) % cyc.len()] - 1) as u32;
            }
        }
        Ok(Perm { img })
    }

    /// Parses cycle notation on `n` points.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Perm> {
        let cycles = parse_cycle_list(s)?;
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { img: other.img.iter().map(|&x| self.img[x as usize]).collect() }
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        other.compose(self)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { img: inv }
    }

    pub fn pow(&self, e: usize) -> Perm {
        let mut acc = Perm::identity(self.degree());
        for _ in 0..e {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn fixed_points(&self) -> usize {
        self.img.iter().enumerate().filter(|&(i, &x)| i == x as usize).count()
    }

    /// All cycles including fixed points, each starting at its least element,
    /// listed by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.img[x] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().iter().fold(1u64, |acc, &l| num_integer::lcm(acc, l as u64))
    }

    pub fn to_cycle_string(&self) -> String {
        let mut s = String::new();
        for cyc in self.cycles() {
            if cyc.len() < 2 {
                continue;
            }
            s.push('(');
            let parts: Vec<String> = cyc.iter().map(|p| format!("{}", p + 1)).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}

/// Splits `(1,2)(3,4,5)` into 1-based cycles; `()` and the empty string give none.
pub fn parse_cycle_list(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body_end = rest
            .find(')')
            .filter(|_| rest.starts_with('('))
            .ok_or_else(|| Error::Parse(format!("malformed cycle notation '{s}'")))?;
        let body = rest[1..body_end].trim();
        if !body.is_empty() {
            let cyc = body
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad point '{t}' in '{s}'"))))
                .collect::<Result<Vec<_>>>()?;
            out.push(cyc);
        }
        rest = rest[body_end + 1..].trim_start();
    }
    Ok(out)
}

/// Largest point mentioned in cycle notation.
pub fn max_point(s: &str) -> Result<usize> {
    Ok(parse_cycle_list(s)?.iter().flatten().copied().max().unwrap_or(0))
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Degree is the largest point mentioned.
    fn from_str(s: &str) -> Result<Perm> {
        Perm::parse_cycles(max_point(s)?, s)
    }
}
