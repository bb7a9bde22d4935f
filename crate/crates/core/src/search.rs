//! Fiducial candidates from eigenspaces of permutation gates, and the IC search.
//!
//! A permutation `g` acts by `(P_g v)_i = v_{g(i)}`. Its eigenvectors for `λ`
//! live on the cycles of length dividing the order of `λ`, with entries
//! `v[c_t] = λ^t` along each cycle. Joint eigenvectors of two commuting
//! permutations are built the same way on the orbits of the group they
//! generate. Every basis vector therefore has root-of-unity entries on a
//! support disjoint from the others, which keeps candidates in a compact,
//! already normalized form: a candidate is a set of basis vectors with one
//! coefficient each, the first coefficient being 1.
//!
//! Candidates are screened modulo two primes before any exact work. A nonzero
//! residue certifies a nonzero characteristic value; a candidate whose values
//! all survive is IC. Residues of the pair traces give a fingerprint of the
//! spectrum, so the exact profile and the full certificate are only computed
//! once per spectrum.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use crate::cyclotomic::{canonical_conductor, lcm, CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::linalg::CycloVector;
use crate::modgroup::PermPair;
use crate::modular::ModContext;
use crate::pauli::DimFactorization;
use crate::perm::Perm;
use crate::povm::{cmp_real, quick_profile, verify, AngleValue, Fiducial, ICCertificate};

pub const DEFAULT_MAX_SUPPORT: usize = 3;
pub const DEFAULT_GROUP_ELEMENT_CAP: usize = 256;
pub const DEFAULT_CANDIDATE_CAP: usize = 500_000;

/// The root of unity `e^{2πi·num/den}`, reduced, with `(0, 1)` for 1.
pub type Phase = (u32, u32);

fn phase(num: u64, den: u64) -> Phase {
    let num = num % den;
    let g = crate::cyclotomic::gcd(num, den);
    ((num / g) as u32, (den / g) as u32)
}

/// The default alphabet: `0, ±1, ±ω₃, ±(ω₃+1), ±ω₆, ±(ω₆−1), ±i`.
pub fn default_entry_set() -> Vec<CycloNum> {
    let f3 = CycloField::new(3);
    let f4 = CycloField::new(4);
    let one = CycloNum::one(&f3);
    let w3 = CycloNum::root_in(&f3, 1);
    let w6 = CycloNum::root_of_unity(&f3, 6, 1).expect("ζ₆ lies in Q(ζ₃)");
    let i = CycloNum::root_in(&f4, 1);
    let base = [one.clone(), w3.clone(), &w3 + &one, w6.clone(), &w6 - &one, i];
    let mut out = vec![CycloNum::zero(&CycloField::new(1))];
    for x in base {
        out.push(x.clone());
        out.push(-x);
    }
    normalize_entry_set(out)
}

/// Reduces each entry to its least conductor and removes repeats, keeping
/// first occurrences.
pub fn normalize_entry_set(xs: Vec<CycloNum>) -> Vec<CycloNum> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in xs {
        let r = x.reduce_conductor();
        if seen.insert(r.canonical_key()) {
            out.push(r);
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct SearchBudget {
    pub entry_set: Vec<CycloNum>,
    /// Largest number of basis vectors combined into one candidate.
    pub max_support: usize,
    /// Number of non-identity group elements whose eigenspaces are scanned.
    pub group_element_cap: usize,
    /// Candidates beyond this many are dropped and the search is flagged as truncated.
    pub candidate_cap: usize,
    /// Allow coefficients outside the field of the eigenspace and the Pauli phases.
    pub widen_field: bool,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget {
            entry_set: default_entry_set(),
            max_support: DEFAULT_MAX_SUPPORT,
            group_element_cap: DEFAULT_GROUP_ELEMENT_CAP,
            candidate_cap: DEFAULT_CANDIDATE_CAP,
            widen_field: false,
        }
    }
}

impl SearchBudget {
    pub fn validate(&self) -> Result<()> {
        if !self.entry_set.iter().any(CycloNum::is_zero) {
            return Err(Error::InvalidInput("entry set must contain 0".into()));
        }
        if !self.entry_set.iter().any(CycloNum::is_one) {
            return Err(Error::InvalidInput("entry set must contain 1".into()));
        }
        if self.max_support == 0 || self.group_element_cap == 0 || self.candidate_cap == 0 {
            return Err(Error::InvalidInput("search limits must be positive".into()));
        }
        Ok(())
    }

    /// Nonzero entries, reduced and deduplicated, with 1 first.
    fn coefficients(&self) -> Vec<CycloNum> {
        let one = CycloNum::one(&CycloField::new(1));
        let mut xs = vec![one];
        xs.extend(self.entry_set.iter().filter(|x| !x.is_zero()).cloned());
        normalize_entry_set(xs)
    }
}

/// A group element as a permutation, with a word in `e`, `v` producing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub perm: Perm,
    pub word: String,
}

/// Non-identity elements of the permutation group in breadth-first word
/// order, generators first. The flag is set when the cap cut the list short.
pub fn group_elements(pair: &PermPair, cap: usize) -> (Vec<GroupElement>, bool) {
    let n = pair.index();
    let gens = [(pair.sigma_e(), 'e'), (pair.sigma_v(), 'v')];
    let mut seen = BTreeSet::new();
    let id = Perm::identity(n);
    seen.insert(id.images().to_vec());
    let mut queue = VecDeque::from([(id, String::new())]);
    let mut out = Vec::new();
    while let Some((g, w)) = queue.pop_front() {
        for (s, c) in gens {
            let h = g.compose(s);
            if !seen.insert(h.images().to_vec()) {
                continue;
            }
            if out.len() == cap {
                return (out, true);
            }
            let mut word = w.clone();
            word.push(c);
            out.push(GroupElement { perm: h.clone(), word: word.clone() });
            queue.push_back((h, word));
        }
    }
    (out, false)
}

/// An eigenspace with its basis: vectors with disjoint supports, listed by
/// least support point, each equal to 1 there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenspace {
    /// Element words with eigenvalue phases, e.g. `v:1/3` or `e:1/2,vev:0/1`.
    pub source: String,
    pub basis: Vec<Vec<Option<Phase>>>,
}

impl Eigenspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Least common denominator of the phases.
    pub fn conductor(&self) -> u32 {
        self.basis.iter().flatten().flatten().fold(1u64, |acc, &(_, d)| lcm(acc, d as u64)) as u32
    }

    /// Basis vectors as exact vectors over `field`.
    pub fn vectors(&self, field: &Arc<CycloField>) -> Result<Vec<CycloVector>> {
        self.basis
            .iter()
            .map(|b| {
                let entries = b
                    .iter()
                    .map(|x| match x {
                        None => Ok(CycloNum::zero(field)),
                        Some((k, n)) => CycloNum::root_of_unity(field, *n, *k as i64),
                    })
                    .collect::<Result<Vec<_>>>()?;
                CycloVector::in_field(field, entries)
            })
            .collect()
    }
}

/// Joint eigenspace of commuting permutations, each with eigenvalue
/// `ζ_L^{a}` given as `(perm, a)`.
fn joint_basis(n: usize, gens: &[(&Perm, u64)], l: u64) -> Vec<Vec<Option<Phase>>> {
    let mut exps: Vec<Option<u64>> = vec![None; n];
    let mut basis = Vec::new();
    for start in 0..n {
        if exps[start].is_some() {
            continue;
        }
        exps[start] = Some(0);
        let mut orbit = vec![start];
        let mut ok = true;
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            let ex = exps[x].expect("visited");
            for &(g, a) in gens {
                let y = g.apply(x);
                let want = (ex + a) % l;
                match exps[y] {
                    None => {
                        exps[y] = Some(want);
                        orbit.push(y);
                    }
                    Some(ey) if ey != want => ok = false,
                    _ => {}
                }
            }
        }
        if ok {
            let mut v = vec![None; n];
            for &x in &orbit {
                v[x] = Some(phase(exps[x].expect("visited"), l));
            }
            basis.push(v);
        }
    }
    basis
}

fn commute(g: &Perm, h: &Perm) -> bool {
    g.compose(h) == h.compose(g)
}

fn powers(g: &Perm) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let mut x = g.clone();
    while out.insert(x.images().to_vec()) {
        x = x.compose(g);
    }
    out
}

/// Eigenspaces of single elements, then joint eigenspaces of commuting pairs
/// neither of which is a power of the other; repeated spaces are dropped.
pub fn eigenspaces(pair: &PermPair, cap: usize) -> (Vec<Eigenspace>, bool) {
    let n = pair.index();
    let (elems, truncated) = group_elements(pair, cap);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |source: String, basis: Vec<Vec<Option<Phase>>>| {
        if !basis.is_empty() && seen.insert(basis.clone()) {
            out.push(Eigenspace { source, basis });
        }
    };
    for g in &elems {
        let o = g.perm.order();
        for k in 0..o {
            let basis = joint_basis(n, &[(&g.perm, k)], o);
            let (a, b) = phase(k, o);
            push(format!("{}:{a}/{b}", g.word), basis);
        }
    }
    let pows: Vec<BTreeSet<Vec<u32>>> = elems.iter().map(|g| powers(&g.perm)).collect();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            let (g, h) = (&elems[i].perm, &elems[j].perm);
            if pows[i].contains(h.images()) || pows[j].contains(g.images()) || !commute(g, h) {
                continue;
            }
            let (og, oh) = (g.order(), h.order());
            let l = lcm(og, oh);
            for a in 0..og {
                for b in 0..oh {
                    let basis = joint_basis(n, &[(g, a * (l / og)), (h, b * (l / oh))], l);
                    let (p, q) = phase(a, og);
                    let (r, s) = phase(b, oh);
                    push(format!("{}:{p}/{q},{}:{r}/{s}", elems[i].word, elems[j].word), basis);
                }
            }
        }
    }
    (out, truncated)
}

/// One candidate: basis vectors of a space, each with a coefficient index.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Combo {
    space: u32,
    terms: Vec<(u32, u32)>,
}

/// Deduplicated candidates in a compact form.
#[derive(Clone, Debug)]
pub struct CandidateSet {
    dim: usize,
    spaces: Vec<Eigenspace>,
    coefficients: Vec<CycloNum>,
    combos: Vec<Combo>,
    base_conductor: u32,
    pub truncated: bool,
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            cur.push(i);
            let go = rec(i + 1, n, k, cur, f);
            cur.pop();
            if !go {
                return false;
            }
        }
        true
    }
    rec(0, n, k, &mut Vec::new(), &mut f)
}

impl CandidateSet {
    pub fn len(&self) -> usize {
        self.combos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.combos.is_empty()
    }

    pub fn spaces(&self) -> &[Eigenspace] {
        &self.spaces
    }

    /// Least field holding candidate `i`, joined with the base conductor.
    fn conductor_of(&self, i: usize) -> u32 {
        let c = &self.combos[i];
        let mut m = lcm(self.spaces[c.space as usize].conductor() as u64, self.base_conductor as u64);
        for &(_, k) in &c.terms {
            m = lcm(m, self.coefficients[k as usize].conductor() as u64);
        }
        canonical_conductor(m as u32)
    }

    pub fn vector(&self, i: usize) -> Result<CycloVector> {
        let c = &self.combos[i];
        let field = CycloField::new(self.conductor_of(i));
        let basis = &self.spaces[c.space as usize].basis;
        let mut entries = vec![CycloNum::zero(&field); self.dim];
        for &(b, k) in &c.terms {
            let coef = self.coefficients[k as usize].lift(&field)?;
            for (j, x) in basis[b as usize].iter().enumerate() {
                if let Some((num, den)) = x {
                    entries[j] = &coef * &CycloNum::root_of_unity(&field, *den, *num as i64)?;
                }
            }
        }
        CycloVector::in_field(&field, entries)
    }

    /// Which eigenspace candidate `i` came from.
    pub fn source(&self, i: usize) -> &str {
        &self.spaces[self.combos[i].space as usize].source
    }

    fn entry_phases(&self, i: usize) -> Vec<Option<(u32, Phase)>> {
        let c = &self.combos[i];
        let basis = &self.spaces[c.space as usize].basis;
        let mut out = vec![None; self.dim];
        for &(b, k) in &c.terms {
            for (j, x) in basis[b as usize].iter().enumerate() {
                if let Some(p) = x {
                    out[j] = Some((k, *p));
                }
            }
        }
        out
    }
}

/// Candidates whose coefficients stay in the field of their eigenspace.
pub fn candidate_fiducials(pair: &PermPair, budget: &SearchBudget) -> Result<CandidateSet> {
    candidate_fiducials_over(pair, budget, 1)
}

/// As [`candidate_fiducials`], with the fields of the spaces joined with
/// `Q(ζ_base)` before coefficients are filtered.
pub fn candidate_fiducials_over(pair: &PermPair, budget: &SearchBudget, base: u32) -> Result<CandidateSet> {
    budget.validate()?;
    let dim = pair.index();
    let (spaces, mut truncated) = eigenspaces(pair, budget.group_element_cap);
    let coefficients = budget.coefficients();
    let mut all = lcm(base as u64, 1);
    for s in &spaces {
        all = lcm(all, s.conductor() as u64);
    }
    for c in &coefficients {
        all = lcm(all, c.conductor() as u64);
    }
    let field = CycloField::new(all as u32);
    // exact identity of each coefficient times root of unity, by id
    let mut value_ids: BTreeMap<(Vec<BigInt>, BigInt), u32> = BTreeMap::new();
    let mut term_ids: BTreeMap<(u32, Phase), u32> = BTreeMap::new();
    let mut term_id = |k: u32, p: Phase| -> Result<u32> {
        if let Some(&id) = term_ids.get(&(k, p)) {
            return Ok(id);
        }
        let x = &coefficients[k as usize].lift(&field)? * &CycloNum::root_of_unity(&field, p.1, p.0 as i64)?;
        let next = value_ids.len() as u32 + 1;
        let id = *value_ids.entry((x.numerators().to_vec(), x.denominator().clone())).or_insert(next);
        term_ids.insert((k, p), id);
        Ok(id)
    };
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut combos = Vec::new();
    'spaces: for (si, s) in spaces.iter().enumerate() {
        let natural = canonical_conductor(lcm(s.conductor() as u64, base as u64) as u32);
        let allowed: Vec<u32> = (0..coefficients.len() as u32)
            .filter(|&k| budget.widen_field || natural % coefficients[k as usize].conductor() == 0)
            .collect();
        for size in 1..=budget.max_support.min(s.dim()) {
            let mut err = None;
            let go = combinations(s.dim(), size, |subset| {
                let tuples = allowed.len().pow(size as u32 - 1);
                for t in 0..tuples {
                    let mut terms = Vec::with_capacity(size);
                    let mut rest = t;
                    for (pos, &b) in subset.iter().enumerate() {
                        let k = if pos == 0 {
                            0
                        } else {
                            let k = allowed[rest % allowed.len()];
                            rest /= allowed.len();
                            k
                        };
                        terms.push((b as u32, k));
                    }
                    let combo = Combo { space: si as u32, terms };
                    let mut key = vec![0u32; dim];
                    for &(b, k) in &combo.terms {
                        for (j, x) in s.basis[b as usize].iter().enumerate() {
                            if let Some(p) = x {
                                match term_id(k, *p) {
                                    Ok(id) => key[j] = id,
                                    Err(e) => {
                                        err = Some(e);
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                    if seen.insert(key) {
                        if combos.len() == budget.candidate_cap {
                            return false;
                        }
                        combos.push(combo);
                    }
                }
                true
            });
            if let Some(e) = err {
                return Err(e);
            }
            if !go {
                truncated = true;
                break 'spaces;
            }
        }
    }
    Ok(CandidateSet { dim, spaces, coefficients, combos, base_conductor: base, truncated })
}

/// Result of screening one candidate modulo two primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Screen {
    /// Some characteristic value vanishes modulo both primes, or the filter rejected it.
    Rejected,
    /// Certainly IC; the fingerprint is determined by the pair-trace multiset.
    Ic((u64, u64)),
}

/// Modular images of everything a candidate is built from.
pub struct Screener<'a> {
    set: &'a CandidateSet,
    dims: DimFactorization,
    ctx: [ModContext; 2],
    coef_images: [Vec<(u64, u64)>; 2],
    /// `act[k][j] = (i, e)`: the `k`-th displacement sends `|j⟩` to `ζ_L^e |i⟩`.
    act: Vec<Vec<(usize, u32)>>,
    exponent: u32,
}

const EVAL_POINT: u64 = 0x9E37_79B9;

impl<'a> Screener<'a> {
    pub fn new(set: &'a CandidateSet, dims: &DimFactorization) -> Result<Screener<'a>> {
        if dims.dim() != set.dim {
            return Err(Error::Dimension(format!("factorization {dims} for a subgroup of index {}", set.dim)));
        }
        let exponent = dims.exponent();
        let mut m = lcm(exponent as u64, set.base_conductor as u64);
        for s in &set.spaces {
            m = lcm(m, s.conductor() as u64);
        }
        for c in &set.coefficients {
            m = lcm(m, c.conductor() as u64);
        }
        let ctx = [ModContext::new(m as u32, 0), ModContext::new(m as u32, 1)];
        let images = |c: &ModContext| set.coefficients.iter().map(|x| c.image_pair(x).expect("conductor divides modulus")).collect();
        let coef_images = [images(&ctx[0]), images(&ctx[1])];
        Ok(Screener { set, dims: dims.clone(), ctx, coef_images, act: displacement_table(dims), exponent })
    }

    pub fn screen(&self, i: usize) -> Screen {
        let phases = self.set.entry_phases(i);
        let mut fp = [0u64; 2];
        let mut any_nonzero = vec![false; self.act.len()];
        let mut traces: [Vec<u64>; 2] = [Vec::new(), Vec::new()];
        for (t, ctx) in self.ctx.iter().enumerate() {
            let psi: Vec<(u64, u64)> = phases
                .iter()
                .map(|x| match x {
                    None => (0, 0),
                    Some((k, (num, den))) => {
                        let (a, b) = self.coef_images[t][*k as usize];
                        (ctx.mul(a, ctx.root(*den, *num as i64)), ctx.mul(b, ctx.root(*den, -(*num as i64))))
                    }
                })
                .collect();
            let norm = psi.iter().fold(0, |acc, &(a, b)| ctx.add(acc, ctx.mul(a, b)));
            let inv_norm2 = if norm == 0 { 0 } else { crate::modular::pow_mod(ctx.mul(norm, norm), ctx.p - 2, ctx.p) };
            for (k, row) in self.act.iter().enumerate() {
                let mut c = 0;
                let mut cc = 0;
                for (j, &(dst, e)) in row.iter().enumerate() {
                    let (x, xc) = psi[j];
                    if x == 0 && xc == 0 {
                        continue;
                    }
                    let (y, yc) = psi[dst];
                    let w = ctx.root(self.exponent, e as i64);
                    let wc = ctx.root(self.exponent, -(e as i64));
                    c = ctx.add(c, ctx.mul(ctx.mul(yc, w), x));
                    cc = ctx.add(cc, ctx.mul(ctx.mul(y, wc), xc));
                }
                if c != 0 || cc != 0 {
                    any_nonzero[k] = true;
                }
                if k > 0 {
                    traces[t].push(ctx.mul(ctx.mul(c, cc), inv_norm2));
                }
            }
            let z = EVAL_POINT % ctx.p;
            fp[t] = traces[t].iter().fold(1, |acc, &x| ctx.mul(acc, ctx.add(z, ctx.p - x)));
            if norm == 0 {
                fp[t] = u64::MAX - i as u64;
            }
        }
        if any_nonzero.iter().all(|&b| b) {
            Screen::Ic((fp[0], fp[1]))
        } else {
            Screen::Rejected
        }
    }

    pub fn dims(&self) -> &DimFactorization {
        &self.dims
    }
}

fn displacement_table(dims: &DimFactorization) -> Vec<Vec<(usize, u32)>> {
    let factors = dims.factors();
    let l = dims.exponent();
    let d = dims.dim();
    let digits = |mut j: usize| -> Vec<u32> {
        let mut out = vec![0u32; factors.len()];
        for (k, &f) in factors.iter().enumerate().rev() {
            out[k] = (j % f as usize) as u32;
            j /= f as usize;
        }
        out
    };
    let mut ops: Vec<Vec<(u32, u32)>> = vec![Vec::new()];
    for &f in factors {
        ops = ops
            .iter()
            .flat_map(|op| (0..f).flat_map(move |a| (0..f).map(move |b| (a, b))).map(move |ab| {
                let mut o = op.clone();
                o.push(ab);
                o
            }))
            .collect();
    }
    ops.iter()
        .map(|op| {
            (0..d)
                .map(|j| {
                    let dg = digits(j);
                    let mut e = 0u32;
                    let mut idx = 0usize;
                    for (k, (&(a, b), &f)) in op.iter().zip(factors).enumerate() {
                        e = (e + (b * dg[k] % f) * (l / f)) % l;
                        idx = idx * f as usize + ((dg[k] + a) % f) as usize;
                    }
                    (idx, e)
                })
                .collect()
        })
        .collect()
}

/// Runs independent jobs; implementations may run them in parallel but must
/// return results in index order.
pub trait Executor {
    fn map<T: Send, F: Fn(usize) -> T + Sync + Send>(&self, n: usize, f: F) -> Vec<T>;
}

pub struct Sequential;

impl Executor for Sequential {
    fn map<T: Send, F: Fn(usize) -> T + Sync + Send>(&self, n: usize, f: F) -> Vec<T> {
        (0..n).map(f).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub certificates: Vec<ICCertificate>,
    pub candidates: usize,
    pub ic_candidates: usize,
    pub truncated: bool,
}

type SpectrumKey = (Vec<((u32, Vec<BigInt>, BigInt), usize)>, Vec<(AngleValue, usize)>);

/// Total order on certificates: fewest distinct traces, then trace values,
/// then the fiducial text.
pub fn cmp_certificates(a: &ICCertificate, b: &ICCertificate) -> Ordering {
    a.pp()
        .cmp(&b.pp())
        .then_with(|| {
            for (x, y) in a.trace_spectrum.iter().zip(&b.trace_spectrum) {
                let o = cmp_real(&x.value, &y.value).then(x.multiplicity.cmp(&y.multiplicity));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
        .then_with(|| a.fiducial.to_text().cmp(&b.fiducial.to_text()))
}

/// IC certificates from the eigenspace candidates of `pair`, one per
/// distinct (trace spectrum, angle spectrum).
pub fn search_ic(pair: &PermPair, dims: &DimFactorization, budget: &SearchBudget) -> Result<SearchOutcome> {
    search_ic_with(pair, dims, budget, &Sequential, &|_| true)
}

/// As [`search_ic`], with a job runner and a filter on candidate vectors.
pub fn search_ic_with<E: Executor>(
    pair: &PermPair,
    dims: &DimFactorization,
    budget: &SearchBudget,
    exec: &E,
    filter: &(dyn Fn(&CycloVector) -> bool + Sync),
) -> Result<SearchOutcome> {
    if dims.dim() != pair.index() {
        return Err(Error::Dimension(format!("factorization {dims} for a subgroup of index {}", pair.index())));
    }
    let set = candidate_fiducials_over(pair, budget, dims.conductor())?;
    let screener = Screener::new(&set, dims)?;
    let screens = exec.map(set.len(), |i| match screener.screen(i) {
        Screen::Ic(fp) => match set.vector(i) {
            Ok(v) if filter(&v) => Screen::Ic(fp),
            _ => Screen::Rejected,
        },
        Screen::Rejected => Screen::Rejected,
    });
    let mut first: BTreeMap<(u64, u64), usize> = BTreeMap::new();
    let mut ic_candidates = 0;
    for (i, s) in screens.iter().enumerate() {
        if let Screen::Ic(fp) = s {
            ic_candidates += 1;
            first.entry(*fp).or_insert(i);
        }
    }
    let mut reps: Vec<usize> = first.into_values().collect();
    reps.sort_unstable();
    let fiducial = |i: usize| -> Result<Fiducial> { Fiducial::from_vector(dims.clone(), set.vector(i)?) };
    let keys = exec.map(reps.len(), |r| -> Result<Option<SpectrumKey>> {
        let p = quick_profile(&fiducial(reps[r])?)?;
        if p.ic_rank != dims.dim() * dims.dim() {
            return Ok(None);
        }
        let t = p.trace_spectrum.iter().map(|e| (e.value.canonical_key(), e.multiplicity)).collect();
        let a = p.angle_spectrum.iter().map(|e| (e.value.clone(), e.multiplicity)).collect();
        Ok(Some((t, a)))
    });
    let mut by_key: BTreeMap<SpectrumKey, usize> = BTreeMap::new();
    for (r, k) in keys.into_iter().enumerate() {
        if let Some(k) = k? {
            by_key.entry(k).or_insert(reps[r]);
        }
    }
    let mut chosen: Vec<usize> = by_key.into_values().collect();
    chosen.sort_unstable();
    let certs = exec.map(chosen.len(), |r| fiducial(chosen[r]).map(|f| verify(&f)));
    let mut certificates = certs.into_iter().collect::<Result<Vec<_>>>()?;
    certificates.retain(|c| c.is_ic);
    certificates.sort_by(cmp_certificates);
    Ok(SearchOutcome { certificates, candidates: set.len(), ic_candidates, truncated: set.truncated })
}

/// Whether the nonzero entries of `v` and `pattern` agree as multisets up to
/// one common nonzero factor.
pub fn same_entry_type(v: &CycloVector, pattern: &CycloVector) -> bool {
    let nz = |x: &CycloVector| -> Vec<CycloNum> { x.entries().iter().filter(|e| !e.is_zero()).cloned().collect() };
    let (a, b) = (nz(v), nz(pattern));
    if a.len() != b.len() || a.is_empty() {
        return a.len() == b.len();
    }
    let sorted_ratios = |xs: &[CycloNum], d: &CycloNum| -> Option<Vec<(u32, Vec<BigInt>, BigInt)>> {
        let inv = d.inv().ok()?;
        let mut ks: Vec<_> = xs.iter().map(|x| (x * &inv).canonical_key()).collect();
        ks.sort();
        Some(ks)
    };
    let target = sorted_ratios(&b, &b[0]);
    a.iter().any(|d| sorted_ratios(&a, d) == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgroup::gamma0;
    use crate::modgroup::enumerate_index;

    fn vec_in(conductor: u32, entries: &[CycloNum]) -> CycloVector {
        CycloVector::in_field(&CycloField::new(conductor), entries.to_vec()).unwrap()
    }

    fn contains(set: &CandidateSet, target: &CycloVector) -> bool {
        let t = target.projective_normal_form().unwrap();
        (0..set.len()).any(|i| {
            let v = set.vector(i).unwrap();
            v.len() == t.len() && v.entries().iter().zip(t.entries()).all(|(a, b)| a == b)
        })
    }

    fn ints(xs: &[i64]) -> CycloVector {
        CycloVector::from_ints(&CycloField::new(1), xs)
    }

    #[test]
    fn default_alphabet() {
        let s = default_entry_set();
        // ω₃+1 = ω₆ and ω₆−1 = ω₃, so nine distinct values
        assert_eq!(s.len(), 9);
        assert!(SearchBudget::default().validate().is_ok());
        let mut b = SearchBudget::default();
        b.entry_set.retain(|x| !x.is_one());
        assert!(b.validate().is_err());
    }

    #[test]
    fn elements_in_word_order() {
        let p = gamma0(2);
        let (els, truncated) = group_elements(&p, 100);
        assert!(!truncated);
        assert_eq!(els.len(), 5);
        assert_eq!(els[0].word, "e");
        assert_eq!(els[1].word, "v");
        let (few, t) = group_elements(&p, 3);
        assert!(t);
        assert_eq!(few.len(), 3);
    }

    #[test]
    fn eigenvectors_satisfy_eigen_equation() {
        let p = gamma0(3);
        let (spaces, _) = eigenspaces(&p, 64);
        let f = CycloField::new(12);
        let (els, _) = group_elements(&p, 64);
        for s in &spaces {
            let first = s.source.split(',').next().unwrap();
            let (word, ph) = first.split_once(':').unwrap();
            let (k, n) = ph.split_once('/').unwrap();
            let g = &els.iter().find(|e| e.word == word).unwrap().perm;
            let lam = CycloNum::root_of_unity(&f, n.parse().unwrap(), k.parse().unwrap()).unwrap();
            let m = crate::linalg::CycloMatrix::from_perm(&f, g);
            for v in s.vectors(&f).unwrap() {
                assert_eq!(m.apply(&v), v.scale(&lam));
            }
        }
    }

    #[test]
    fn qutrit_candidates() {
        let set = candidate_fiducials(&gamma0(2), &SearchBudget::default()).unwrap();
        assert!(contains(&set, &ints(&[0, 1, -1])));
        assert!(contains(&set, &ints(&[0, 1, 1])));
    }

    #[test]
    fn two_qubit_candidate() {
        let f = CycloField::new(3);
        let w6 = CycloNum::root_of_unity(&f, 6, 1).unwrap();
        let target = vec_in(3, &[CycloNum::zero(&f), CycloNum::one(&f), -w6.clone(), &w6 - &CycloNum::one(&f)]);
        let set = candidate_fiducials(&gamma0(3), &SearchBudget::default()).unwrap();
        assert!(contains(&set, &target));
    }

    #[test]
    fn index_five_candidates() {
        let groups = enumerate_index(5).unwrap();
        assert_eq!(groups.len(), 1);
        let set = candidate_fiducials(&groups[0], &SearchBudget::default()).unwrap();
        assert!(contains(&set, &ints(&[0, 1, 1, 1, 1])));
        assert!(contains(&set, &ints(&[0, 1, -1, -1, 1])));
    }

    #[test]
    fn candidates_are_normalized_and_distinct() {
        let set = candidate_fiducials(&gamma0(3), &SearchBudget::default()).unwrap();
        let f = CycloField::new(12);
        let vs: Vec<CycloVector> = (0..set.len()).map(|i| set.vector(i).unwrap().lift(&f).unwrap()).collect();
        for v in &vs {
            assert!(v.entries().iter().find(|x| !x.is_zero()).unwrap().is_one());
        }
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                assert_ne!(vs[i], vs[j]);
            }
        }
    }

    #[test]
    fn hesse_search() {
        let dims = DimFactorization::single(3).unwrap();
        let out = search_ic(&gamma0(2), &dims, &SearchBudget::default()).unwrap();
        assert!(!out.truncated);
        assert!(out.certificates.iter().any(|c| c.is_sic));
        for c in &out.certificates {
            assert!(c.is_ic);
            assert_eq!(verify(&c.fiducial), *c);
        }
    }

    #[test]
    fn two_qubit_search() {
        let dims: DimFactorization = "2x2".parse().unwrap();
        let out = search_ic(&gamma0(3), &dims, &SearchBudget::default()).unwrap();
        let f = CycloField::new(1);
        let want = [CycloNum::from_fraction(&f, 1, 9), CycloNum::from_fraction(&f, 1, 3)];
        assert!(out.certificates.iter().any(|c| c.trace_values() == want));
    }

    #[test]
    fn screening_agrees_with_exact_profile() {
        let dims: DimFactorization = "2x2".parse().unwrap();
        let set = candidate_fiducials_over(&gamma0(3), &SearchBudget::default(), dims.conductor()).unwrap();
        let sc = Screener::new(&set, &dims).unwrap();
        let mut by_fp: BTreeMap<(u64, u64), SpectrumKey> = BTreeMap::new();
        for i in 0..set.len() {
            let f = Fiducial::from_vector(dims.clone(), set.vector(i).unwrap()).unwrap();
            let p = quick_profile(&f).unwrap();
            let ic = p.ic_rank == 16;
            match sc.screen(i) {
                Screen::Ic(fp) => {
                    assert!(ic);
                    let key: SpectrumKey = (
                        p.trace_spectrum.iter().map(|e| (e.value.canonical_key(), e.multiplicity)).collect(),
                        p.angle_spectrum.iter().map(|e| (e.value.clone(), e.multiplicity)).collect(),
                    );
                    assert_eq!(by_fp.entry(fp).or_insert_with(|| key.clone()), &key);
                }
                Screen::Rejected => assert!(!ic),
            }
        }
    }

    #[test]
    fn deterministic() {
        let dims = DimFactorization::single(4).unwrap();
        let a = search_ic(&gamma0(3), &dims, &SearchBudget::default()).unwrap();
        let b = search_ic(&gamma0(3), &dims, &SearchBudget::default()).unwrap();
        assert_eq!(a.certificates, b.certificates);
    }

    #[test]
    fn entry_types() {
        let f = CycloField::new(3);
        let w = CycloNum::root_in(&f, 1);
        let a = vec_in(3, &[CycloNum::zero(&f), CycloNum::one(&f), w.clone(), CycloNum::zero(&f), &w * &w, CycloNum::zero(&f)]);
        let b = vec_in(3, &[w.clone(), CycloNum::one(&f), &w * &w, CycloNum::zero(&f), CycloNum::zero(&f), CycloNum::zero(&f)]);
        assert!(same_entry_type(&a, &b));
        assert!(!same_entry_type(&ints(&[1, 1, 0]), &ints(&[1, -1, 0])));
        assert!(same_entry_type(&ints(&[0, -1, -1]), &ints(&[1, 1, 0])));
    }
}
