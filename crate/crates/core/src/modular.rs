//! Reduction of cyclotomic numbers modulo primes `p ≡ 1 (mod M)`.
//!
//! Sending `ζ_M` to a primitive `M`-th root of unity in `F_p` is a ring map, so
//! a value with a nonzero image is certainly nonzero and equal values have
//! equal images. Search uses this to screen candidates cheaply; anything it
//! certifies is re-derived exactly afterwards.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::cyclotomic::CycloNum;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A prime `p ≡ 1 (mod M)` with the powers of a chosen primitive `M`-th root.
#[derive(Clone, Debug)]
pub struct ModContext {
    pub modulus: u32,
    pub p: u64,
    /// `roots[j] = r^j` for `0 <= j < M`.
    roots: Vec<u64>,
}

impl ModContext {
    /// The `skip`-th largest prime below `2^31` that is `1 mod m`.
    pub fn new(m: u32, skip: usize) -> ModContext {
        let m64 = m as u64;
        let mut p = ((1u64 << 31) - 1) / m64 * m64 + 1;
        let mut found = 0;
        loop {
            if p > m64 && is_prime(p) {
                if found == skip {
                    break;
                }
                found += 1;
            }
            p -= m64;
        }
        let factors = distinct_prime_factors(p - 1);
        let g = (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).expect("primitive root exists");
        let r = pow_mod(g, (p - 1) / m64, p);
        let mut roots = Vec::with_capacity(m as usize);
        let mut x = 1u64;
        for _ in 0..m {
            roots.push(x);
            x = mul_mod(x, r, p);
        }
        ModContext { modulus: m, p, roots }
    }

    /// Image of `ζ_n^k`; `n` must divide the modulus.
    pub fn root(&self, n: u32, k: i64) -> u64 {
        let step = (self.modulus / n) as i64;
        self.roots[(k * step).rem_euclid(self.modulus as i64) as usize]
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn reduce_int(&self, x: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = ((x % &p) + &p) % &p;
        r.to_u64().expect("residue fits")
    }

    /// Image of `x` and of its complex conjugate; `None` when `p` divides the
    /// denominator or the conductor does not divide the modulus.
    pub fn image_pair(&self, x: &CycloNum) -> Option<(u64, u64)> {
        let n = x.conductor();
        if self.modulus % n != 0 {
            return None;
        }
        let den = self.reduce_int(x.denominator());
        if den == 0 {
            return None;
        }
        let inv = pow_mod(den, self.p - 2, self.p);
        let mut a = 0;
        let mut b = 0;
        for (j, c) in x.numerators().iter().enumerate() {
            let c = self.reduce_int(c);
            if c == 0 {
                continue;
            }
            a = self.add(a, self.mul(c, self.root(n, j as i64)));
            b = self.add(b, self.mul(c, self.root(n, -(j as i64))));
        }
        Some((self.mul(a, inv), self.mul(b, inv)))
    }
}
