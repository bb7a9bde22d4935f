//! Pauli orbits of fiducial states and their IC / SIC certificates.
//!
//! Vectors are never normalized. With `n = ⟨ψ|ψ⟩`, the normalized overlap of
//! two orbit states is `x_ij = ⟨ψ_i|ψ_j⟩ / n`, so `tr(Π_iΠ_j) = x_ij x_ji` and a
//! cyclic product `tr(Π_{i₁}⋯Π_{i_k})` is the product of overlaps around the cycle.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, ToPrimitive, Zero};

use crate::cyclotomic::{join_fields, lcm, CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::linalg::{CycloMatrix, CycloVector};
use crate::pauli::{DimFactorization, PauliGroup, PauliOp};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiducialState {
    Vector(CycloVector),
    /// A rank-one projector of unit trace.
    Projector(CycloMatrix),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiducial {
    dims: DimFactorization,
    state: FiducialState,
    norm2: CycloNum,
}

impl Fiducial {
    pub fn from_vector(dims: DimFactorization, v: CycloVector) -> Result<Fiducial> {
        if v.len() != dims.dim() {
            return Err(Error::Dimension(format!("fiducial of length {} for dimension {}", v.len(), dims.dim())));
        }
        if v.is_zero() {
            return Err(Error::InvalidInput("fiducial vector is zero".into()));
        }
        let norm2 = v.norm2();
        Ok(Fiducial { dims, state: FiducialState::Vector(v), norm2 })
    }

    pub fn from_projector(dims: DimFactorization, p: CycloMatrix) -> Result<Fiducial> {
        let d = dims.dim();
        if p.rows() != d || p.cols() != d {
            return Err(Error::Dimension(format!("{}x{} projector for dimension {d}", p.rows(), p.cols())));
        }
        if p.adjoint() != p {
            return Err(Error::InvalidInput("projector is not Hermitian".into()));
        }
        if &p * &p != p {
            return Err(Error::InvalidInput("projector is not idempotent".into()));
        }
        if !p.trace().is_one() {
            return Err(Error::InvalidInput("projector does not have unit trace".into()));
        }
        let norm2 = CycloNum::one(p.field());
        Ok(Fiducial { dims, state: FiducialState::Projector(p), norm2 })
    }

    pub fn dims(&self) -> &DimFactorization {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.dim()
    }

    pub fn state(&self) -> &FiducialState {
        &self.state
    }

    pub fn vector(&self) -> Option<&CycloVector> {
        match &self.state {
            FiducialState::Vector(v) => Some(v),
            FiducialState::Projector(_) => None,
        }
    }

    pub fn norm2(&self) -> &CycloNum {
        &self.norm2
    }

    fn state_field(&self) -> &Arc<CycloField> {
        match &self.state {
            FiducialState::Vector(v) => v.field(),
            FiducialState::Projector(p) => p.field(),
        }
    }

    /// Field holding the fiducial and every Pauli phase.
    pub fn working_field(&self) -> Arc<CycloField> {
        join_fields(self.state_field(), &self.dims.field())
    }

    /// Least conductor containing the entries and the Pauli phases.
    pub fn detected_conductor(&self) -> u32 {
        let entries: Vec<&CycloNum> = match &self.state {
            FiducialState::Vector(v) => v.entries().iter().collect(),
            FiducialState::Projector(p) => (0..p.rows()).flat_map(|i| (0..p.cols()).map(move |j| (i, j))).map(|(i, j)| p.get(i, j)).collect(),
        };
        let c = entries
            .iter()
            .filter(|x| !x.is_zero())
            .fold(self.dims.conductor() as u64, |acc, x| lcm(acc, x.reduce_conductor().conductor() as u64));
        crate::cyclotomic::canonical_conductor(c as u32)
    }

    /// Entries as `conductor:[...]` strings, or rows of them for a projector.
    pub fn to_text(&self) -> String {
        match &self.state {
            FiducialState::Vector(v) => {
                let parts: Vec<String> = v.entries().iter().map(|x| x.reduce_conductor().to_text()).collect();
                format!("({})", parts.join(", "))
            }
            FiducialState::Projector(p) => {
                let rows: Vec<String> = (0..p.rows())
                    .map(|i| {
                        let r: Vec<String> = (0..p.cols()).map(|j| p.get(i, j).reduce_conductor().to_text()).collect();
                        format!("[{}]", r.join(", "))
                    })
                    .collect();
                format!("[{}]", rows.join(", "))
            }
        }
    }
}

/// The `d²` orbit states or projectors under the Pauli group.
#[derive(Clone, Debug)]
pub struct Orbit {
    group: PauliGroup,
    ops: Vec<PauliOp>,
    kind: OrbitKind,
}

#[derive(Clone, Debug)]
enum OrbitKind {
    Vectors {
        states: Vec<CycloVector>,
        /// Row-major `x_ij`.
        overlaps: Vec<CycloNum>,
    },
    Projectors(Vec<CycloMatrix>),
}

impl Orbit {
    pub fn new(fid: &Fiducial) -> Orbit {
        let field = fid.working_field();
        let group = PauliGroup::over(&fid.dims, &field).expect("working field holds the Pauli phases");
        let ops = group.enumerate();
        let kind = match &fid.state {
            FiducialState::Vector(v) => {
                let v = v.lift(&field).expect("working field contains the fiducial");
                let states: Vec<CycloVector> = ops.iter().map(|op| group.apply(op, &v).expect("length checked")).collect();
                let inv_n = fid.norm2.lift(&field).unwrap().inv().expect("nonzero norm");
                let m = states.len();
                let mut overlaps = vec![CycloNum::zero(&field); m * m];
                for i in 0..m {
                    overlaps[i * m + i] = CycloNum::one(&field);
                    for j in i + 1..m {
                        let x = &states[i].inner(&states[j]) * &inv_n;
                        overlaps[j * m + i] = x.conj();
                        overlaps[i * m + j] = x;
                    }
                }
                OrbitKind::Vectors { states, overlaps }
            }
            FiducialState::Projector(p) => {
                let p = p.lift(&field).expect("working field contains the projector");
                let projs = ops
                    .iter()
                    .map(|op| {
                        let d = group.matrix(op);
                        &(&d * &p) * &d.adjoint()
                    })
                    .collect();
                OrbitKind::Projectors(projs)
            }
        };
        Orbit { group, ops, kind }
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn ops(&self) -> &[PauliOp] {
        &self.ops
    }

    pub fn group(&self) -> &PauliGroup {
        &self.group
    }

    pub fn field(&self) -> &Arc<CycloField> {
        self.group.field()
    }

    pub fn dim(&self) -> usize {
        self.group.dim()
    }

    pub fn states(&self) -> Option<&[CycloVector]> {
        match &self.kind {
            OrbitKind::Vectors { states, .. } => Some(states),
            OrbitKind::Projectors(_) => None,
        }
    }

    /// `⟨ψ_i|ψ_j⟩ / ⟨ψ|ψ⟩`, for vector orbits.
    pub fn overlap(&self, i: usize, j: usize) -> Option<&CycloNum> {
        match &self.kind {
            OrbitKind::Vectors { overlaps, .. } => Some(&overlaps[i * self.len() + j]),
            OrbitKind::Projectors(_) => None,
        }
    }

    /// Normalized projectors `Π_i`.
    pub fn projectors(&self) -> Vec<CycloMatrix> {
        match &self.kind {
            OrbitKind::Vectors { states, .. } => {
                let inv_n = self.overlap_norm_inverse();
                states.iter().map(|s| s.outer(s).scale(&inv_n)).collect()
            }
            OrbitKind::Projectors(p) => p.clone(),
        }
    }

    fn overlap_norm_inverse(&self) -> CycloNum {
        match &self.kind {
            OrbitKind::Vectors { states, .. } => states[0].norm2().inv().expect("nonzero norm"),
            OrbitKind::Projectors(_) => CycloNum::one(self.field()),
        }
    }

    pub fn pair_trace(&self, i: usize, j: usize) -> CycloNum {
        match &self.kind {
            OrbitKind::Vectors { overlaps, .. } => {
                let m = self.len();
                &overlaps[i * m + j] * &overlaps[j * m + i]
            }
            OrbitKind::Projectors(p) => trace_of_product(&p[i], &p[j]),
        }
    }

    /// `tr(Π_{i₁} Π_{i₂} ⋯ Π_{i_k})`.
    pub fn cyclic_trace(&self, idx: &[usize]) -> CycloNum {
        match &self.kind {
            OrbitKind::Vectors { overlaps, .. } => {
                let m = self.len();
                let mut acc = CycloNum::one(self.field());
                for (k, &i) in idx.iter().enumerate() {
                    let j = idx[(k + 1) % idx.len()];
                    acc = &acc * &overlaps[i * m + j];
                    if acc.is_zero() {
                        break;
                    }
                }
                acc
            }
            OrbitKind::Projectors(p) => {
                let mut acc = p[idx[0]].clone();
                for &i in &idx[1..] {
                    acc = &acc * &p[i];
                }
                acc.trace()
            }
        }
    }

    pub fn gram(&self) -> CycloMatrix {
        let m = self.len();
        let field = self.field().clone();
        let mut g = CycloMatrix::zero(&field, m, m);
        for i in 0..m {
            for j in i..m {
                let t = self.pair_trace(i, j);
                g.set(j, i, t.clone());
                g.set(i, j, t);
            }
        }
        g
    }

    pub fn povm_sum_ok(&self) -> bool {
        let d = self.dim();
        let field = self.field().clone();
        let sum = match &self.kind {
            OrbitKind::Vectors { states, .. } => {
                let mut s = CycloMatrix::zero(&field, d, d);
                for st in states {
                    s = &s + &st.outer(st);
                }
                s.scale(&self.overlap_norm_inverse())
            }
            OrbitKind::Projectors(p) => p.iter().fold(CycloMatrix::zero(&field, d, d), |acc, x| &acc + x),
        };
        sum == CycloMatrix::identity(&field, d).scale(&CycloNum::from_int(&field, d as i64))
    }

    /// Normalized overlaps `x_ij` for `i < j`, or `None` for projector orbits.
    fn upper_overlaps(&self) -> Option<Vec<CycloNum>> {
        let m = self.len();
        match &self.kind {
            OrbitKind::Vectors { overlaps, .. } => {
                Some((0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).map(|(i, j)| overlaps[i * m + j].clone()).collect())
            }
            OrbitKind::Projectors(_) => None,
        }
    }
}

fn trace_of_product(a: &CycloMatrix, b: &CycloMatrix) -> CycloNum {
    let mut acc = CycloNum::zero(a.field());
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            let x = a.get(i, k);
            let y = b.get(k, i);
            if !x.is_zero() && !y.is_zero() {
                acc = &acc + &(x * y);
            }
        }
    }
    acc
}

/// A squared Hermitian angle `radicand^(1/root)` with a positive rational radicand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AngleValue {
    pub radicand: BigRational,
    pub root: u32,
}

impl AngleValue {
    /// `r^(1/k)` with perfect powers pulled out so equal values compare equal.
    pub fn new(r: BigRational, k: u32) -> AngleValue {
        assert!(!r.is_negative(), "angle radicand must be non-negative");
        if r.is_zero() {
            return AngleValue { radicand: r, root: 1 };
        }
        for t in (2..=k).rev() {
            if k % t != 0 {
                continue;
            }
            if let (Some(p), Some(q)) = (exact_root(r.numer(), t), exact_root(r.denom(), t)) {
                return AngleValue::new(BigRational::new(p, q), k / t);
            }
        }
        AngleValue { radicand: r, root: k }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.root == 1).then_some(&self.radicand)
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.radicand.to_f64().unwrap_or(f64::NAN);
        libm::pow(r, 1.0 / self.root as f64)
    }
}

fn exact_root(x: &BigInt, t: u32) -> Option<BigInt> {
    let r = x.nth_root(t);
    (Pow::pow(&r, t) == *x).then_some(r)
}

impl fmt::Display for AngleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = crate::cyclotomic::fmt_rational(&self.radicand);
        if self.root == 1 {
            f.write_str(&r)
        } else {
            write!(f, "({r})^(1/{})", self.root)
        }
    }
}

impl PartialOrd for AngleValue {
    fn partial_cmp(&self, other: &AngleValue) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AngleValue {
    fn cmp(&self, other: &AngleValue) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        // compare r1^(1/k1) with r2^(1/k2) exactly as r1^k2 vs r2^k1
        let a: BigRational = Pow::pow(&self.radicand, other.root);
        let b: BigRational = Pow::pow(&other.radicand, self.root);
        a.cmp(&b).then_with(|| self.root.cmp(&other.root))
    }
}

/// Field-norm squared angle of a normalized overlap `x`, both ways:
/// `|N(x)|^(2/D)` and `N(x·x̄)^(1/D)`, `D` the degree of `x`'s field.
pub fn field_norm_angles(x: &CycloNum) -> (AngleValue, AngleValue) {
    let deg = x.degree() as u32;
    let n = x.field_norm();
    let of_value = AngleValue::new(&n * &n, deg);
    let modulus = x * &x.conj();
    let of_modulus = AngleValue::new(modulus.field_norm().abs(), deg);
    (of_value, of_modulus)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry<T> {
    pub value: T,
    /// Number of unordered pairs `{i, j}`, `i ≠ j`.
    pub multiplicity: usize,
}

/// Total order on real cyclotomic values: numeric, then canonical form.
pub fn cmp_real(a: &CycloNum, b: &CycloNum) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let (x, y) = (a.embed().re, b.embed().re);
    x.partial_cmp(&y).unwrap_or(Ordering::Equal).then_with(|| a.cmp_canonical(b))
}

fn tally_values(mut vals: Vec<CycloNum>) -> Vec<SpectrumEntry<CycloNum>> {
    vals.sort_by(cmp_real);
    let mut out: Vec<SpectrumEntry<CycloNum>> = Vec::new();
    for v in vals {
        match out.last_mut() {
            Some(e) if e.value == v => e.multiplicity += 1,
            _ => out.push(SpectrumEntry { value: v, multiplicity: 1 }),
        }
    }
    for e in &mut out {
        e.value = e.value.reduce_conductor();
    }
    out
}

fn tally_angles(mut vals: Vec<AngleValue>) -> Vec<SpectrumEntry<AngleValue>> {
    vals.sort();
    let mut out: Vec<SpectrumEntry<AngleValue>> = Vec::new();
    for v in vals {
        match out.last_mut() {
            Some(e) if e.value == v => e.multiplicity += 1,
            _ => out.push(SpectrumEntry { value: v, multiplicity: 1 }),
        }
    }
    out
}

/// The orbit projectors of `f`, in Pauli enumeration order.
pub fn build_orbit(f: &Fiducial) -> Vec<CycloMatrix> {
    Orbit::new(f).projectors()
}

/// `Σ Π_i = d·I`, with `d` the side of the projectors.
pub fn povm_sum_check(projs: &[CycloMatrix]) -> bool {
    let Some(first) = projs.first() else { return false };
    let d = first.rows();
    let field = first.field().clone();
    let sum = projs.iter().fold(CycloMatrix::zero(&field, d, d), |acc, p| &acc + p);
    sum == CycloMatrix::identity(&field, d).scale(&CycloNum::from_int(&field, d as i64))
}

pub fn gram_matrix(projs: &[CycloMatrix]) -> CycloMatrix {
    let m = projs.len();
    let field = projs.first().map(|p| p.field().clone()).unwrap_or_else(|| CycloField::new(1));
    let mut g = CycloMatrix::zero(&field, m, m);
    for i in 0..m {
        for j in i..m {
            let t = trace_of_product(&projs[i], &projs[j]);
            g.set(j, i, t.clone());
            g.set(i, j, t);
        }
    }
    g
}

pub fn gram_rank(projs: &[CycloMatrix]) -> usize {
    gram_matrix(projs).rank()
}

/// Distinct `tr(Π_iΠ_j)`, `i < j`, with multiplicities.
pub fn pair_spectrum(projs: &[CycloMatrix]) -> Vec<SpectrumEntry<CycloNum>> {
    let m = projs.len();
    let vals = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).map(|(i, j)| trace_of_product(&projs[i], &projs[j])).collect();
    tally_values(vals)
}

/// Squared field-norm angles from projectors alone, i.e. `N(tr(Π_iΠ_j))^(1/D)`
/// over the given field.
pub fn hermitian_angles(projs: &[CycloMatrix], field: &Arc<CycloField>) -> Result<Vec<SpectrumEntry<AngleValue>>> {
    let m = projs.len();
    let mut vals = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let t = trace_of_product(&projs[i], &projs[j]).lift(field)?;
            vals.push(AngleValue::new(t.field_norm().abs(), field.degree() as u32));
        }
    }
    Ok(tally_angles(vals))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ICCertificate {
    pub fiducial: Fiducial,
    pub conductor: u32,
    pub povm_sum_ok: bool,
    pub gram_rank: usize,
    pub trace_spectrum: Vec<SpectrumEntry<CycloNum>>,
    /// `|N(x)|^(2/D)` of each normalized overlap; empty for projector input.
    pub angle_spectrum: Vec<SpectrumEntry<AngleValue>>,
    /// `N(|x|²)^(1/D)`.
    pub angle_spectrum_modulus: Vec<SpectrumEntry<AngleValue>>,
    pub is_ic: bool,
    pub is_sic: bool,
}

impl ICCertificate {
    pub fn d(&self) -> usize {
        self.fiducial.dim()
    }

    /// Number of distinct pair traces.
    pub fn pp(&self) -> usize {
        self.trace_spectrum.len()
    }

    pub fn trace_values(&self) -> Vec<CycloNum> {
        self.trace_spectrum.iter().map(|e| e.value.clone()).collect()
    }
}

/// Full certificate: POVM sum, exact Gram rank, pair-trace and angle spectra.
pub fn verify(f: &Fiducial) -> ICCertificate {
    let orbit = Orbit::new(f);
    verify_orbit(f, &orbit)
}

pub fn verify_orbit(f: &Fiducial, orbit: &Orbit) -> ICCertificate {
    let d = f.dim();
    let m = orbit.len();
    let povm_sum_ok = orbit.povm_sum_ok();
    let gram_rank = orbit.gram().rank();
    let traces: Vec<CycloNum> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).map(|(i, j)| orbit.pair_trace(i, j)).collect();
    let (angle_spectrum, angle_spectrum_modulus) = match orbit.upper_overlaps() {
        Some(xs) => {
            let (a, b): (Vec<_>, Vec<_>) = xs.iter().map(field_norm_angles).unzip();
            (tally_angles(a), tally_angles(b))
        }
        None => {
            let deg = orbit.field().degree() as u32;
            let b = traces.iter().map(|t| AngleValue::new(t.field_norm().abs(), deg)).collect();
            (Vec::new(), tally_angles(b))
        }
    };
    let trace_spectrum = tally_values(traces);
    let is_ic = povm_sum_ok && gram_rank == d * d;
    let sic_value = CycloNum::from_fraction(orbit.field(), 1, d as i64 + 1);
    let is_sic = is_ic && trace_spectrum.len() == 1 && trace_spectrum[0].value == sic_value;
    ICCertificate {
        fiducial: f.clone(),
        conductor: f.detected_conductor(),
        povm_sum_ok,
        gram_rank,
        trace_spectrum,
        angle_spectrum,
        angle_spectrum_modulus,
        is_ic,
        is_sic,
    }
}

/// Characteristic values `c_k = ⟨ψ|D_k|ψ⟩ / ⟨ψ|ψ⟩` of a vector fiducial.
pub fn characteristic_values(f: &Fiducial, group: &PauliGroup) -> Result<Vec<CycloNum>> {
    let v = f.vector().ok_or_else(|| Error::InvalidInput("characteristic values need a vector fiducial".into()))?;
    let v = v.lift(group.field())?;
    let inv_n = f.norm2.lift(group.field())?.inv()?;
    group.enumerate().iter().map(|op| Ok(&v.inner(&group.apply(op, &v)?) * &inv_n)).collect()
}

/// Spectra read off the characteristic values, without the Gram matrix.
///
/// The Pauli operators form a nice error basis, so the orbit Gram matrix is
/// diagonalized by characters and its rank is the number of nonzero `c_k`.
/// Pair traces depend only on the label difference, which gives every pair
/// multiplicity from the `d²` values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuickProfile {
    pub ic_rank: usize,
    pub trace_spectrum: Vec<SpectrumEntry<CycloNum>>,
    pub angle_spectrum: Vec<SpectrumEntry<AngleValue>>,
}

pub fn quick_profile(f: &Fiducial) -> Result<QuickProfile> {
    let field = f.working_field();
    let group = PauliGroup::over(f.dims(), &field)?;
    let c = characteristic_values(f, &group)?;
    quick_profile_from(f.dim(), &c)
}

pub fn quick_profile_from(d: usize, c: &[CycloNum]) -> Result<QuickProfile> {
    let m = d * d;
    if c.len() != m {
        return Err(Error::Dimension(format!("{} characteristic values for dimension {d}", c.len())));
    }
    let ic_rank = c.iter().filter(|x| !x.is_zero()).count();
    let mut traces: Vec<CycloNum> = Vec::new();
    let mut angles: Vec<AngleValue> = Vec::new();
    for x in &c[1..] {
        traces.push(x * &x.conj());
        angles.push(field_norm_angles(x).0);
    }
    let scale = |mut e: Vec<SpectrumEntry<CycloNum>>| {
        for x in &mut e {
            x.multiplicity = x.multiplicity * m / 2;
        }
        e
    };
    let mut angle_spectrum = tally_angles(angles);
    for x in &mut angle_spectrum {
        x.multiplicity = x.multiplicity * m / 2;
    }
    Ok(QuickProfile { ic_rank, trace_spectrum: scale(tally_values(traces)), angle_spectrum })
}

impl core::ops::Mul for AngleValue {
    type Output = AngleValue;

    fn mul(self, rhs: AngleValue) -> AngleValue {
        let k = num_integer::lcm(self.root, rhs.root);
        let a: BigRational = Pow::pow(&self.radicand, k / self.root);
        let b: BigRational = Pow::pow(&rhs.radicand, k / rhs.root);
        AngleValue::new(a * b, k)
    }
}
