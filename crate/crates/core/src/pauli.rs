//! Clock and shift operators on tensor products of qudits.
//!
//! On a factor of dimension `f`, `X|j⟩ = |j+1⟩` and `Z|j⟩ = ω^j|j⟩` with
//! `ω = exp(2πi/f)`. A displacement is `⊗ X^a Z^b` with no extra phase, so
//! `X^a Z^b |j⟩ = ω^{bj} |j+a⟩`. The first factor is the most significant
//! digit of a basis index.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::cyclotomic::{canonical_conductor, lcm, CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::linalg::{CycloMatrix, CycloVector};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimFactorization {
    factors: Vec<u32>,
}

impl DimFactorization {
    pub fn new(factors: Vec<u32>) -> Result<DimFactorization> {
        if factors.is_empty() {
            return Err(Error::InvalidInput("factorization needs at least one factor".into()));
        }
        if let Some(f) = factors.iter().find(|&&f| f < 2) {
            return Err(Error::InvalidInput(format!("factor {f} is below 2")));
        }
        Ok(DimFactorization { factors })
    }

    pub fn single(d: u32) -> Result<DimFactorization> {
        DimFactorization::new(vec![d])
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|&f| f as usize).product()
    }

    /// Least common multiple of the factors.
    pub fn exponent(&self) -> u32 {
        self.factors.iter().fold(1u64, |acc, &f| lcm(acc, f as u64)) as u32
    }

    /// Smallest conductor whose field holds every clock phase.
    pub fn conductor(&self) -> u32 {
        canonical_conductor(self.exponent())
    }

    pub fn field(&self) -> Arc<CycloField> {
        CycloField::new(self.conductor())
    }
}

impl fmt::Display for DimFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| format!("{x}")).collect();
        f.write_str(&parts.join("x"))
    }
}

impl FromStr for DimFactorization {
    type Err = Error;

    /// Accepts `2x2`, `2,2`, `2*2` or a single dimension.
    fn from_str(s: &str) -> Result<DimFactorization> {
        let factors = s
            .split(|c| c == 'x' || c == 'X' || c == ',' || c == '*')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad factor '{t}' in '{s}'"))))
            .collect::<Result<Vec<_>>>()?;
        DimFactorization::new(factors)
    }
}

/// Labels `(a, b)` for `X^a Z^b`, one pair per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOp {
    labels: Vec<(u32, u32)>,
}

impl PauliOp {
    pub fn new(dims: &DimFactorization, labels: Vec<(u32, u32)>) -> Result<PauliOp> {
        if labels.len() != dims.factors.len() {
            return Err(Error::Dimension(format!(
                "{} labels for {} factors",
                labels.len(),
                dims.factors.len()
            )));
        }
        let labels = labels.iter().zip(&dims.factors).map(|(&(a, b), &f)| (a % f, b % f)).collect();
        Ok(PauliOp { labels })
    }

    pub fn identity(dims: &DimFactorization) -> PauliOp {
        PauliOp { labels: vec![(0, 0); dims.factors.len()] }
    }

    pub fn labels(&self) -> &[(u32, u32)] {
        &self.labels
    }

    pub fn is_identity(&self) -> bool {
        self.labels.iter().all(|&l| l == (0, 0))
    }

    /// `Z⊗XZ²` style name.
    pub fn name(&self) -> String {
        let parts: Vec<String> = self
            .labels
            .iter()
            .map(|&(a, b)| {
                let mut s = String::new();
                if a > 0 {
                    s.push('X');
                    if a > 1 {
                        s.push_str(&superscript(a));
                    }
                }
                if b > 0 {
                    s.push('Z');
                    if b > 1 {
                        s.push_str(&superscript(b));
                    }
                }
                if s.is_empty() {
                    s.push('I');
                }
                s
            })
            .collect();
        parts.join("⊗")
    }
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    format!("{n}").chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// A displacement with a phase `ζ_L^p`, `L` the exponent of the factorization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhasedOp {
    pub phase: u32,
    pub op: PauliOp,
}

impl PhasedOp {
    /// `Some(true)` for `+I`, `Some(false)` for `-I`, `None` otherwise.
    pub fn sign_of_identity(&self, dims: &DimFactorization) -> Option<bool> {
        if !self.op.is_identity() {
            return None;
        }
        let l = dims.exponent();
        if self.phase == 0 {
            Some(true)
        } else if l % 2 == 0 && self.phase == l / 2 {
            Some(false)
        } else {
            None
        }
    }
}

/// The Pauli group of a factorization with its phase tables.
#[derive(Clone, Debug)]
pub struct PauliGroup {
    dims: DimFactorization,
    field: Arc<CycloField>,
    /// `roots[k][j] = ω_{f_k}^j`.
    roots: Vec<Vec<CycloNum>>,
}

impl PauliGroup {
    pub fn new(dims: &DimFactorization) -> PauliGroup {
        PauliGroup::over(dims, &dims.field()).expect("the factorization's own field holds its phases")
    }

    /// Works over `field`, which must contain every clock phase.
    pub fn over(dims: &DimFactorization, field: &Arc<CycloField>) -> Result<PauliGroup> {
        let roots = dims
            .factors
            .iter()
            .map(|&f| (0..f as i64).map(|j| CycloNum::root_of_unity(field, f, j)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(PauliGroup { dims: dims.clone(), field: field.clone(), roots })
    }

    pub fn dims(&self) -> &DimFactorization {
        &self.dims
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dims.dim()
    }

    /// All `d²` operators, ordered lexicographically by `(a₁, b₁, a₂, b₂, …)`.
    pub fn enumerate(&self) -> Vec<PauliOp> {
        let mut out = vec![PauliOp { labels: Vec::new() }];
        for &f in &self.dims.factors {
            let mut next = Vec::with_capacity(out.len() * (f * f) as usize);
            for op in &out {
                for a in 0..f {
                    for b in 0..f {
                        let mut labels = op.labels.clone();
                        labels.push((a, b));
                        next.push(PauliOp { labels });
                    }
                }
            }
            out = next;
        }
        out
    }

    /// Position of `op` in `enumerate()` order.
    pub fn index_of(&self, op: &PauliOp) -> usize {
        op.labels
            .iter()
            .zip(&self.dims.factors)
            .fold(0usize, |acc, (&(a, b), &f)| acc * (f * f) as usize + (a * f + b) as usize)
    }

    fn digits(&self, mut j: usize) -> Vec<u32> {
        let mut d = vec![0u32; self.dims.factors.len()];
        for (k, &f) in self.dims.factors.iter().enumerate().rev() {
            d[k] = (j % f as usize) as u32;
            j /= f as usize;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> usize {
        d.iter().zip(&self.dims.factors).fold(0usize, |acc, (&x, &f)| acc * f as usize + x as usize)
    }

    /// Image of `|j⟩`: a basis index and a phase.
    fn act_on_basis(&self, op: &PauliOp, j: usize) -> (usize, CycloNum) {
        let digits = self.digits(j);
        let mut phase = CycloNum::one(&self.field);
        let mut out = digits.clone();
        for (k, (&(a, b), &f)) in op.labels.iter().zip(&self.dims.factors).enumerate() {
            let e = (b as u64 * digits[k] as u64 % f as u64) as usize;
            if e != 0 {
                phase = &phase * &self.roots[k][e];
            }
            out[k] = (digits[k] + a) % f;
        }
        (self.undigits(&out), phase)
    }

    /// `op·v` without building the matrix.
    pub fn apply(&self, op: &PauliOp, v: &CycloVector) -> Result<CycloVector> {
        let d = self.dim();
        if v.len() != d {
            return Err(Error::Dimension(format!("vector of length {} in dimension {d}", v.len())));
        }
        let v = v.lift(&crate::cyclotomic::join_fields(&self.field, v.field()))?;
        let mut out = vec![CycloNum::zero(v.field()); d];
        for j in 0..d {
            let x = v.get(j);
            if x.is_zero() {
                continue;
            }
            let (i, phase) = self.act_on_basis(op, j);
            out[i] = x * &phase;
        }
        CycloVector::in_field(v.field(), out)
    }

    pub fn matrix(&self, op: &PauliOp) -> CycloMatrix {
        let d = self.dim();
        let mut m = CycloMatrix::zero(&self.field, d, d);
        for j in 0..d {
            let (i, phase) = self.act_on_basis(op, j);
            m.set(i, j, phase);
        }
        m
    }

    /// `p·q` as a phased displacement, from `(X^a Z^b)(X^c Z^e) = ω^{bc} X^{a+c} Z^{b+e}`.
    pub fn multiply(&self, p: &PhasedOp, q: &PauliOp) -> PhasedOp {
        let l = self.dims.exponent();
        let mut phase = p.phase;
        let mut labels = Vec::with_capacity(q.labels.len());
        for ((&(a, b), &(c, e)), &f) in p.op.labels.iter().zip(&q.labels).zip(&self.dims.factors) {
            let w = (b as u64 * c as u64 % f as u64) as u32;
            phase = (phase + w * (l / f)) % l;
            labels.push(((a + c) % f, (b + e) % f));
        }
        PhasedOp { phase, op: PauliOp { labels } }
    }

    /// Ordered product of the given operators.
    pub fn product(&self, ops: &[&PauliOp]) -> PhasedOp {
        let mut acc = PhasedOp { phase: 0, op: PauliOp::identity(&self.dims) };
        for op in ops {
            acc = self.multiply(&acc, op);
        }
        acc
    }

    /// The phase `ζ_L^p` as a field element.
    pub fn phase_value(&self, p: u32) -> CycloNum {
        CycloNum::root_of_unity(&self.field, self.dims.exponent(), p as i64).expect("field holds all phases")
    }

    /// Parses a name such as `Z⊗XZ²`, also accepting `X^2Z` and `*` as separator.
    pub fn parse_name(&self, s: &str) -> Result<PauliOp> {
        let parts: Vec<&str> = s.split(|c| c == '⊗' || c == '*').map(str::trim).collect();
        let labels = parts.iter().map(|p| parse_factor(p)).collect::<Result<Vec<_>>>()?;
        PauliOp::new(&self.dims, labels)
    }
}

fn parse_factor(s: &str) -> Result<(u32, u32)> {
    let err = || Error::Parse(format!("bad operator factor '{s}'"));
    if s == "I" {
        return Ok((0, 0));
    }
    let mut a = 0;
    let mut b = 0;
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let letter = chars[i];
        i += 1;
        let mut exp = String::new();
        if i < chars.len() && chars[i] == '^' {
            i += 1;
        }
        while i < chars.len() {
            let c = chars[i];
            let digit = c.to_digit(10).or_else(|| "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|x| x == c).map(|p| p as u32));
            match digit {
                Some(dg) => exp.push(char::from_digit(dg, 10).unwrap()),
                None => break,
            }
            i += 1;
        }
        let e: u32 = if exp.is_empty() { 1 } else { exp.parse().map_err(|_| err())? };
        match letter {
            'X' => a += e,
            'Z' => b += e,
            _ => return Err(err()),
        }
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn dims(f: &[u32]) -> DimFactorization {
        DimFactorization::new(f.to_vec()).unwrap()
    }

    #[test]
    fn qubit_x_is_sigma_x() {
        let g = PauliGroup::new(&dims(&[2]));
        let x = g.matrix(&PauliOp::new(g.dims(), vec![(1, 0)]).unwrap());
        assert!(x.get(0, 1).is_one() && x.get(1, 0).is_one());
        assert!(x.get(0, 0).is_zero() && x.get(1, 1).is_zero());
        assert!(g.matrix(&PauliOp::identity(g.dims())).is_identity());
    }

    #[test]
    fn group_sizes_and_order() {
        assert_eq!(PauliGroup::new(&dims(&[2])).enumerate().len(), 4);
        assert_eq!(PauliGroup::new(&dims(&[2, 2])).enumerate().len(), 16);
        let g3 = PauliGroup::new(&dims(&[3]));
        let ops = g3.enumerate();
        assert_eq!(ops.len(), 9);
        assert_eq!(ops[1].labels(), &[(0, 1)]);
        assert_eq!(ops[3].labels(), &[(1, 0)]);
        for (i, op) in ops.iter().enumerate() {
            assert_eq!(g3.index_of(op), i);
        }
    }

    #[test]
    fn qutrit_commutation() {
        let g = PauliGroup::new(&dims(&[3]));
        let x = g.matrix(&PauliOp::new(g.dims(), vec![(1, 0)]).unwrap());
        let z = g.matrix(&PauliOp::new(g.dims(), vec![(0, 1)]).unwrap());
        let w = CycloNum::root(3, 1);
        assert_eq!(&z * &x, (&x * &z).scale(&w));
    }

    #[test]
    fn shift_on_basis_state() {
        let g = PauliGroup::new(&dims(&[3]));
        let f = g.field().clone();
        let e0 = CycloVector::from_ints(&f, &[1, 0, 0]);
        let x = PauliOp::new(g.dims(), vec![(1, 0)]).unwrap();
        assert_eq!(g.apply(&x, &e0).unwrap(), CycloVector::from_ints(&f, &[0, 1, 0]));
        let xx = PauliOp::new(&dims(&[2, 2]), vec![(1, 0), (1, 0)]).unwrap();
        let g22 = PauliGroup::new(&dims(&[2, 2]));
        let f1 = g22.field().clone();
        let v = CycloVector::from_ints(&f1, &[1, 0, 0, 0]);
        assert_eq!(g22.apply(&xx, &v).unwrap(), CycloVector::from_ints(&f1, &[0, 0, 0, 1]));
    }

    #[test]
    fn conductors() {
        assert_eq!(dims(&[2, 2]).conductor(), 1);
        assert_eq!(dims(&[6]).conductor(), 3);
        assert_eq!(dims(&[4]).conductor(), 4);
        assert_eq!(dims(&[2, 3]).conductor(), 3);
        assert_eq!(dims(&[3, 3]).to_string(), "3x3");
        assert_eq!("2x2".parse::<DimFactorization>().unwrap(), dims(&[2, 2]));
        assert!("2x1".parse::<DimFactorization>().is_err());
    }

    #[test]
    fn names_round_trip() {
        let g = PauliGroup::new(&dims(&[2, 3]));
        for op in g.enumerate() {
            assert_eq!(g.parse_name(&op.name()).unwrap(), op);
        }
        let op = PauliOp::new(&dims(&[2, 3]), vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(op.name(), "Z⊗XZ²");
        assert_eq!(g.parse_name("Z*X^1Z^2").unwrap(), op);
    }

    #[test]
    fn symbolic_product_matches_matrices() {
        let g = PauliGroup::new(&dims(&[2, 3]));
        let ops = g.enumerate();
        for p in ops.iter().step_by(5) {
            for q in ops.iter().step_by(7) {
                let sym = g.product(&[p, q]);
                let lhs = &g.matrix(p) * &g.matrix(q);
                let rhs = g.matrix(&sym.op).scale(&g.phase_value(sym.phase));
                assert_eq!(lhs, rhs, "{p} {q}");
            }
        }
    }
}
