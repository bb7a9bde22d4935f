//! Coset actions of the classical congruence subgroups.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::PermPair;
use crate::perm::Perm;

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `ψ(N) = N ∏_{p | N} (1 + 1/p)`, the index of `Γ₀(N)`.
pub fn dedekind_psi(n: u64) -> u64 {
    prime_factors(n).iter().fold(n, |acc, &p| acc / p * (p + 1))
}

/// `|SL(2, Z/N)| = N³ ∏_{p | N} (1 - 1/p²)`.
pub fn sl2_order(n: u64) -> u64 {
    prime_factors(n).iter().fold(n * n * n, |acc, &p| acc / (p * p) * (p * p - 1))
}

/// The index formula `N³ ∏ (1 - 1/p²)` as usually quoted, alongside the index
/// in `PSL(2, Z)`, which is half of it for `N > 2`.
pub fn gamma_index_formula(n: u64) -> (u64, u64) {
    let sl = sl2_order(n);
    (sl, if n > 2 { sl / 2 } else { sl })
}

type Mat = [i64; 4];

const S_INV: Mat = [0, 1, -1, 0];
const V_INV: Mat = [1, 1, -1, 0];

fn modn(x: i64, n: i64) -> i64 {
    x.rem_euclid(n)
}

/// `Γ₀(N)` acting on the projective line over `Z/N`, with `(0:1)` as the base
/// point. A point `x` is sent to `x·g⁻¹` so that composition of permutations
/// follows multiplication of group elements.
pub fn gamma0(n: u64) -> PermPair {
    assert!(n >= 1, "level must be positive");
    if n == 1 {
        return PermPair::trivial();
    }
    let n = n as i64;
    let units: Vec<i64> = (1..n).filter(|&u| num_integer::gcd(u, n) == 1).collect();
    let canon = |c: i64, d: i64| -> (i64, i64) {
        units.iter().map(|&u| (modn(u * c, n), modn(u * d, n))).min().expect("1 is a unit")
    };
    let mut points: Vec<(i64, i64)> = Vec::new();
    for c in 0..n {
        for d in 0..n {
            if num_integer::gcd(num_integer::gcd(c, d), n) == 1 {
                points.push(canon(c, d));
            }
        }
    }
    points.sort_unstable();
    points.dedup();
    let base = canon(0, 1);
    let pos = points.iter().position(|&p| p == base).expect("(0:1) is a point");
    points.swap(0, pos);
    let index: BTreeMap<(i64, i64), u32> = points.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();
    let act = |m: &Mat| -> Vec<u32> {
        points
            .iter()
            .map(|&(c, d)| index[&canon(c * m[0] + d * m[2], c * m[1] + d * m[3])])
            .collect()
    };
    PermPair::new(Perm::from_images(act(&S_INV)).unwrap(), Perm::from_images(act(&V_INV)).unwrap())
        .expect("projective line action is transitive")
}

/// `Γ(N)` via left multiplication on `SL(2, Z/N) / {±1}`.
pub fn gamma(n: u64) -> PermPair {
    assert!(n >= 1, "level must be positive");
    if n == 1 {
        return PermPair::trivial();
    }
    let n = n as i64;
    let canon = |m: Mat| -> Mat {
        let a = [modn(m[0], n), modn(m[1], n), modn(m[2], n), modn(m[3], n)];
        let b = [modn(-m[0], n), modn(-m[1], n), modn(-m[2], n), modn(-m[3], n)];
        if a <= b {
            a
        } else {
            b
        }
    };
    let mut elems: Vec<Mat> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if modn(a * d - b * c, n) == 1 {
                        elems.push(canon([a, b, c, d]));
                    }
                }
            }
        }
    }
    elems.sort_unstable();
    elems.dedup();
    let id = canon([1, 0, 0, 1]);
    let pos = elems.iter().position(|&m| m == id).expect("identity present");
    elems.swap(0, pos);
    let index: BTreeMap<Mat, u32> = elems.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
    let s: Mat = [0, -1, 1, 0];
    let v: Mat = [0, -1, 1, 1];
    let act = |g: &Mat| -> Vec<u32> {
        elems
            .iter()
            .map(|x| {
                let prod = [
                    g[0] * x[0] + g[1] * x[2],
                    g[0] * x[1] + g[1] * x[3],
                    g[2] * x[0] + g[3] * x[2],
                    g[2] * x[1] + g[3] * x[3],
                ];
                index[&canon(prod)]
            })
            .collect()
    };
    PermPair::new(Perm::from_images(act(&s)).unwrap(), Perm::from_images(act(&v)).unwrap())
        .expect("regular action is transitive")
}

/// The commutator subgroup `Γ'`, of index 6 with `PSL(2, Z)/Γ' ≅ Z/6`.
pub fn commutator_subgroup() -> PermPair {
    let e = Perm::from_images((0..6).map(|x| (x + 3) % 6).collect()).unwrap();
    let v = Perm::from_images((0..6).map(|x| (x + 2) % 6).collect()).unwrap();
    PermPair::new(e, v).unwrap()
}
