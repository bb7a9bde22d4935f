//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! An element is stored over the power basis `1, ζ, …, ζ^{φ(n)-1}` as integer
//! numerators with one positive common denominator. Every value is reduced
//! modulo the `n`-th cyclotomic polynomial and its fraction is kept in lowest
//! terms, so two values over the same conductor are equal exactly when their
//! stored parts are.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Coefficients (lowest degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "conductor must be positive");
    let divs = divisors(n);
    let mut table: Vec<(u32, Vec<i64>)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        // x^d - 1 divided by every Φ_k with k | d, k < d.
        let mut poly = vec![0i64; d as usize + 1];
        poly[0] = -1;
        poly[d as usize] = 1;
        for (k, phi_k) in &table {
            if d % k == 0 {
                poly = div_exact_monic(&poly, phi_k);
            }
        }
        table.push((d, poly));
    }
    table.pop().map(|(_, p)| p).unwrap_or_else(|| vec![-1, 1])
}

fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Reduction data for one cyclotomic field.
#[derive(Debug)]
pub struct CycloField {
    n: u32,
    phi: usize,
    poly: Vec<i64>,
    /// `powers[e]` is `ζ^e` over the power basis, for `0 <= e < n`.
    powers: Vec<Vec<i64>>,
}

impl CycloField {
    pub fn new(n: u32) -> Arc<CycloField> {
        assert!(n >= 1, "conductor must be positive");
        let poly = cyclotomic_polynomial(n);
        let phi = poly.len() - 1;
        let mut powers: Vec<Vec<i64>> = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by ζ
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * poly[i];
                }
            }
        }
        Arc::new(CycloField { n, phi, poly, powers })
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn polynomial(&self) -> &[i64] {
        &self.poly
    }

    fn power(&self, e: u64) -> &[i64] {
        &self.powers[(e % self.n as u64) as usize]
    }

    /// Units of `Z/nZ`, i.e. the exponents of the Galois automorphisms.
    pub fn galois_exponents(&self) -> Vec<u32> {
        (1..=self.n)
            .filter(|&k| gcd(k as u64, self.n as u64) == 1)
            .map(|k| k % self.n)
            .collect()
    }
}

impl PartialEq for CycloField {
    fn eq(&self, other: &CycloField) -> bool {
        self.n == other.n
    }
}

impl Eq for CycloField {}

/// The field of conductor `lcm(a, b)`, reusing an input when one contains the other.
pub fn join_fields(a: &Arc<CycloField>, b: &Arc<CycloField>) -> Arc<CycloField> {
    if a.n == b.n || a.n % b.n == 0 {
        a.clone()
    } else if b.n % a.n == 0 {
        b.clone()
    } else {
        CycloField::new(lcm(a.n as u64, b.n as u64) as u32)
    }
}

/// Smallest conductor describing the same field: `Q(ζ_{2m}) = Q(ζ_m)` for odd `m`.
pub fn canonical_conductor(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

#[derive(Clone)]
pub struct CycloNum {
    field: Arc<CycloField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloNum {
    fn from_parts(field: Arc<CycloField>, num: Vec<BigInt>, den: BigInt) -> CycloNum {
        let mut x = CycloNum { field, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -core::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn zero(field: &Arc<CycloField>) -> CycloNum {
        CycloNum { field: field.clone(), num: vec![BigInt::zero(); field.phi], den: BigInt::one() }
    }

    pub fn one(field: &Arc<CycloField>) -> CycloNum {
        CycloNum::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<CycloField>, v: i64) -> CycloNum {
        let mut x = CycloNum::zero(field);
        x.num[0] = BigInt::from(v);
        x
    }

    pub fn from_rational(field: &Arc<CycloField>, r: &BigRational) -> CycloNum {
        let mut num = vec![BigInt::zero(); field.phi];
        num[0] = r.numer().clone();
        CycloNum::from_parts(field.clone(), num, r.denom().clone())
    }

    /// `a / b` as an element of `field`.
    pub fn from_fraction(field: &Arc<CycloField>, a: i64, b: i64) -> CycloNum {
        CycloNum::from_rational(field, &BigRational::new(a.into(), b.into()))
    }

    /// `ζ_n^k` in a freshly built field of conductor `n`.
    pub fn root(n: u32, k: i64) -> CycloNum {
        CycloNum::root_in(&CycloField::new(n), k)
    }

    /// `ζ_n^k` where `n` is the conductor of `field`.
    pub fn root_in(field: &Arc<CycloField>, k: i64) -> CycloNum {
        let e = k.rem_euclid(field.n as i64) as u64;
        let num = field.power(e).iter().map(|&c| BigInt::from(c)).collect();
        CycloNum { field: field.clone(), num, den: BigInt::one() }
    }

    /// `ζ_n^k` inside `field`, which must contain the `n`-th roots of unity.
    /// Uses `ζ_{2m} = -ζ_m^{(m+1)/2}` for odd `m` when `field` has conductor `m`.
    pub fn root_of_unity(field: &Arc<CycloField>, n: u32, k: i64) -> Result<CycloNum> {
        let m = field.n;
        if m % n == 0 {
            return Ok(CycloNum::root_in(field, k * (m / n) as i64));
        }
        if n % 4 == 2 && m % (n / 2) == 0 {
            let h = (n / 2) as i64;
            let e = (k.rem_euclid(2 * h) * ((h + 1) / 2)).rem_euclid(h);
            let r = CycloNum::root_in(field, e * (m as i64 / h));
            return Ok(if k.rem_euclid(2) == 1 { -r } else { r });
        }
        Err(Error::NotInField(m))
    }

    /// Builds `Σ c_j ζ^j` from integer coefficients on arbitrary powers.
    pub fn from_power_coeffs(field: &Arc<CycloField>, coeffs: &[(i64, i64)]) -> CycloNum {
        let mut acc = vec![BigInt::zero(); field.phi];
        for &(e, c) in coeffs {
            let p = field.power(e.rem_euclid(field.n as i64) as u64);
            for (a, &b) in acc.iter_mut().zip(p) {
                *a += BigInt::from(c * b);
            }
        }
        CycloNum::from_parts(field.clone(), acc, BigInt::one())
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.n
    }

    pub fn degree(&self) -> usize {
        self.field.phi
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn scale(&self, r: &BigRational) -> CycloNum {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        CycloNum::from_parts(self.field.clone(), num, &self.den * r.denom())
    }

    pub fn scale_int(&self, k: i64) -> CycloNum {
        let k = BigInt::from(k);
        let num = self.num.iter().map(|c| c * &k).collect();
        CycloNum::from_parts(self.field.clone(), num, self.den.clone())
    }

    pub fn pow(&self, mut e: u32) -> CycloNum {
        let mut base = self.clone();
        let mut acc = CycloNum::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Re-expresses the value over `target`, whose conductor must be a multiple
    /// of this value's minimal conductor.
    pub fn lift(&self, target: &Arc<CycloField>) -> Result<CycloNum> {
        if self.field.n == target.n {
            return Ok(CycloNum { field: target.clone(), ..self.clone() });
        }
        if target.n % self.field.n == 0 {
            let step = (target.n / self.field.n) as u64;
            let mut acc = vec![BigInt::zero(); target.phi];
            for (j, c) in self.num.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (a, &p) in acc.iter_mut().zip(target.power(j as u64 * step)) {
                    if p != 0 {
                        *a += c * p;
                    }
                }
            }
            return Ok(CycloNum::from_parts(target.clone(), acc, self.den.clone()));
        }
        let reduced = self.reduce_conductor();
        if reduced.field.n != self.field.n && target.n % reduced.field.n == 0 {
            return reduced.lift(target);
        }
        Err(Error::NotInField(target.n))
    }

    fn lift_pair(a: &CycloNum, b: &CycloNum) -> (CycloNum, CycloNum) {
        let f = join_fields(&a.field, &b.field);
        (
            a.lift(&f).expect("lcm field contains both operands"),
            b.lift(&f).expect("lcm field contains both operands"),
        )
    }

    /// Image under the automorphism `ζ ↦ ζ^k`; `k` must be coprime to the conductor.
    pub fn galois(&self, k: u32) -> CycloNum {
        debug_assert_eq!(gcd(k as u64, self.field.n as u64), 1);
        let mut acc = vec![BigInt::zero(); self.field.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, &p) in acc.iter_mut().zip(self.field.power(j as u64 * k as u64)) {
                if p != 0 {
                    *a += c * p;
                }
            }
        }
        CycloNum::from_parts(self.field.clone(), acc, self.den.clone())
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> CycloNum {
        if self.field.n <= 2 {
            return self.clone();
        }
        self.galois(self.field.n - 1)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Product of the Galois conjugates other than the identity.
    fn conjugate_cofactor(&self) -> CycloNum {
        let mut acc = CycloNum::one(&self.field);
        for k in self.field.galois_exponents() {
            if k == 1 % self.field.n {
                continue;
            }
            acc = &acc * &self.galois(k);
        }
        acc
    }

    /// Norm from `Q(ζ_n)` down to `Q`, with `n` the stored conductor.
    pub fn field_norm(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let full = self * &self.conjugate_cofactor();
        full.as_rational().expect("the product of all conjugates is rational")
    }

    pub fn inv(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycloNum::from_rational(&self.field, &r.recip()));
        }
        let cof = self.conjugate_cofactor();
        let norm = (self * &cof).as_rational().expect("norm is rational");
        Ok(cof.scale(&norm.recip()))
    }

    pub fn div(&self, other: &CycloNum) -> Result<CycloNum> {
        Ok(self * &other.inv()?)
    }

    /// Evaluation at `ζ_n = exp(2πi/n)`.
    pub fn embed(&self) -> Complex64 {
        let n = self.field.n as f64;
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = BigRational::new(c.clone(), BigInt::one()).to_f64().unwrap_or(0.0) / den;
            let ang = 2.0 * core::f64::consts::PI * j as f64 / n;
            re += cf * libm::cos(ang);
            im += cf * libm::sin(ang);
        }
        Complex64::new(re, im)
    }

    /// The same value over the smallest cyclotomic field that contains it.
    pub fn reduce_conductor(&self) -> CycloNum {
        if let Some(r) = self.as_rational() {
            return CycloNum::from_rational(&CycloField::new(1), &r);
        }
        for m in divisors(self.field.n) {
            if m == self.field.n {
                break;
            }
            if m % 4 == 2 || m == 1 {
                continue;
            }
            if let Some(x) = self.express_in(m) {
                return x;
            }
        }
        self.clone()
    }

    /// Tries to write the value over the subfield `Q(ζ_m)`, `m | n`.
    fn express_in(&self, m: u32) -> Option<CycloNum> {
        let sub = CycloField::new(m);
        let step = (self.field.n / m) as u64;
        let rows = self.field.phi;
        let cols = sub.phi;
        let mut a: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..cols)
                    .map(|i| BigRational::from_integer(self.field.power(i as u64 * step)[r].into()))
                    .collect();
                row.push(BigRational::new(self.num[r].clone(), self.den.clone()));
                row
            })
            .collect();
        let sol = solve_augmented(&mut a, cols)?;
        let den = sol.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = sol.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        Some(CycloNum::from_parts(sub, num, den))
    }

    /// Structural key of the reduced form; equal values give equal keys.
    pub fn canonical_key(&self) -> (u32, Vec<BigInt>, BigInt) {
        let r = self.reduce_conductor();
        (r.field.n, r.num, r.den)
    }

    pub fn cmp_canonical(&self, other: &CycloNum) -> Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }

    /// Rational coefficients in the textual form `n:[c0,c1,...]`.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.coeffs().iter().map(fmt_rational).collect();
        format!("{}:[{}]", self.field.n, parts.join(","))
    }
}

pub fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let err = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| err())?)),
    }
}

/// Gaussian elimination on an augmented system with `cols` unknowns; returns
/// the unique solution or `None` when the system is inconsistent.
fn solve_augmented(a: &mut [Vec<BigRational>], cols: usize) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..=cols {
                    let t = &a[r][j] * &f;
                    a[i][j] = &a[i][j] - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !a[i][cols].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = a[i][cols].clone();
    }
    Some(sol)
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &CycloNum) -> bool {
        if self.field.n == other.field.n {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = CycloNum::lift_pair(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycloNum {}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for CycloNum {
    type Err = Error;

    fn from_str(s: &str) -> Result<CycloNum> {
        let s = s.trim();
        let (n, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected 'conductor:[...]', got '{s}'")))?;
        let n: u32 = n.trim().parse().map_err(|_| Error::Parse(format!("bad conductor in '{s}'")))?;
        if n == 0 {
            return Err(Error::Parse("conductor must be positive".into()));
        }
        let body = rest
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected bracketed coefficients in '{s}'")))?;
        let coeffs: Vec<BigRational> = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',').map(parse_rational).collect::<Result<_>>()?
        };
        let field = CycloField::new(n);
        if coeffs.len() != field.phi {
            return Err(Error::Parse(format!(
                "conductor {n} needs {} coefficients, got {}",
                field.phi,
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = coeffs.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        Ok(CycloNum::from_parts(field, num, den))
    }
}

fn add_same(a: &CycloNum, b: &CycloNum, negate_b: bool) -> CycloNum {
    let num: Vec<BigInt> = if a.den == b.den {
        a.num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| if negate_b { x - y } else { x + y })
            .collect()
    } else {
        a.num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| {
                let l = x * &b.den;
                let r = y * &a.den;
                if negate_b {
                    l - r
                } else {
                    l + r
                }
            })
            .collect()
    };
    let den = if a.den == b.den { a.den.clone() } else { &a.den * &b.den };
    CycloNum::from_parts(a.field.clone(), num, den)
}

fn mul_same(a: &CycloNum, b: &CycloNum) -> CycloNum {
    let field = &a.field;
    let phi = field.phi;
    if a.is_zero() || b.is_zero() {
        return CycloNum::zero(field);
    }
    let mut prod = vec![BigInt::zero(); 2 * phi - 1];
    for (i, x) in a.num.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.num.iter().enumerate() {
            if !y.is_zero() {
                prod[i + j] += x * y;
            }
        }
    }
    let mut out: Vec<BigInt> = prod[..phi].to_vec();
    for (e, c) in prod.iter().enumerate().skip(phi) {
        if c.is_zero() {
            continue;
        }
        for (o, &p) in out.iter_mut().zip(field.power(e as u64)) {
            if p != 0 {
                *o += c * p;
            }
        }
    }
    CycloNum::from_parts(field.clone(), out, &a.den * &b.den)
}

impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        if self.field.n == rhs.field.n {
            add_same(self, rhs, false)
        } else {
            let (a, b) = CycloNum::lift_pair(self, rhs);
            add_same(&a, &b, false)
        }
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        if self.field.n == rhs.field.n {
            add_same(self, rhs, true)
        } else {
            let (a, b) = CycloNum::lift_pair(self, rhs);
            add_same(&a, &b, true)
        }
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        if self.field.n == rhs.field.n {
            mul_same(self, rhs)
        } else {
            let (a, b) = CycloNum::lift_pair(self, rhs);
            mul_same(&a, &b)
        }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Add for CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: CycloNum) -> CycloNum {
        &self + &rhs
    }
}

impl Sub for CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: CycloNum) -> CycloNum {
        &self - &rhs
    }
}

impl Mul for CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: CycloNum) -> CycloNum {
        &self * &rhs
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}
