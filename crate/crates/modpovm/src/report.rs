//! Per-dimension summary: which subgroup classes give an IC, the fewest
//! distinct pair values, and the recognized triple-product geometry.

use modpovm_core::geometry::{gq22_axioms, mermin_square, recognize, recognize_graph, GeometryKind, GeometryLabel, TupleTable};
use modpovm_core::modgroup::{commutator_subgroup, enumerate_index, gamma, gamma0};
use modpovm_core::povm::{verify, Orbit};
use modpovm_core::search::{search_ic_with, Executor, SearchBudget};
use modpovm_core::{CycloField, CycloMatrix, CycloNum, CycloVector, DimFactorization, Fiducial, ICCertificate, PermPair, Result, Signature};
use serde::{Deserialize, Serialize};

use crate::formats::{CertificateJson, PairJson, SignatureJson};

/// Pauli factorization used for dimension `d` in the table.
pub fn table_dims(d: usize) -> DimFactorization {
    let s = match d {
        4 => "2x2".to_string(),
        8 => "2x2x2".to_string(),
        9 => "3x3".to_string(),
        _ => d.to_string(),
    };
    s.parse().expect("valid factorization")
}

/// Distinct values used as "pp": squared angles for vector fiducials,
/// pair traces for projector input.
pub fn distinct_products(c: &ICCertificate) -> usize {
    if c.angle_spectrum.is_empty() {
        c.pp()
    } else {
        c.angle_spectrum.len()
    }
}

/// The qubit magic state with Bloch vector `(1,1,1)/√3`, as a projector.
pub fn qubit_t_projector() -> Fiducial {
    let f = CycloField::new(12);
    let s3 = CycloNum::from_power_coeffs(&f, &[(1, 1), (11, 1)]);
    let inv = s3.inv().expect("nonzero");
    let i = CycloNum::root_of_unity(&f, 4, 1).expect("i in Q(ζ12)");
    let half = CycloNum::from_fraction(&f, 1, 2);
    let one = CycloNum::one(&f);
    let rows = vec![
        vec![&half * &(&one + &inv), &half * &(&inv * &(&one - &i))],
        vec![&half * &(&inv * &(&one + &i)), &half * &(&one - &inv)],
    ];
    Fiducial::from_projector("2".parse().expect("dims"), CycloMatrix::from_rows(&f, rows).expect("2x2")).expect("rank-one projector")
}

/// The qubit magic state with Bloch vector `(1,0,1)/√2`, as a projector.
pub fn qubit_h_projector() -> Fiducial {
    let f = CycloField::new(8);
    let s2 = CycloNum::from_power_coeffs(&f, &[(1, 1), (7, 1)]);
    let inv = s2.inv().expect("nonzero");
    let half = CycloNum::from_fraction(&f, 1, 2);
    let one = CycloNum::one(&f);
    let rows = vec![vec![&half * &(&one + &inv), &half * &inv], vec![&half * &inv, &half * &(&one - &inv)]];
    Fiducial::from_projector("2".parse().expect("dims"), CycloMatrix::from_rows(&f, rows).expect("2x2")).expect("rank-one projector")
}

/// The seven-dimensional fiducial `(1,−ω−1,−ω,ω,ω+1,−1,0)`, `ω = ω₃`.
pub fn heptad_fiducial() -> Fiducial {
    let f = CycloField::new(3);
    let w = CycloNum::root_in(&f, 1);
    let one = CycloNum::one(&f);
    let v = vec![one.clone(), -&(&w + &one), -w.clone(), w.clone(), &w + &one, -one, CycloNum::zero(&f)];
    Fiducial::from_vector("7".parse().expect("dims"), CycloVector::in_field(&f, v).expect("entries")).expect("fiducial")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryFinding {
    pub k: usize,
    pub pm_identity: bool,
    pub targets: Vec<String>,
    pub points: usize,
    pub blocks: usize,
    /// `structure`, `graph(s)` or `split(s,t)`.
    pub via: String,
    pub label: String,
}

fn label_text(l: &GeometryLabel) -> String {
    l.to_string()
}

/// Intersection graphs are only built for structures with at most this many blocks.
pub const GRAPH_BLOCK_LIMIT: usize = 400;

/// Tries single real values, `±v` pairs and (with the `±I` restriction) all
/// values at once, recognizing each structure and its intersection graphs.
/// Tuples of more than three elements are only taken with the `±I` restriction.
pub fn scan_geometry(orbit: &Orbit, ks: &[usize], max_values: usize) -> Vec<GeometryFinding> {
    let mut out = Vec::new();
    for &k in ks {
        let table = TupleTable::new(orbit, k);
        for pm in [true, false] {
            if !pm && k > 3 {
                continue;
            }
            let values: Vec<CycloNum> = table.real_values(pm).into_iter().map(|(v, _)| v).collect();
            if values.is_empty() || values.len() > max_values {
                continue;
            }
            let mut sets: Vec<Vec<CycloNum>> = values.iter().map(|v| vec![v.clone()]).collect();
            for v in &values {
                let neg = -v.clone();
                if modpovm_core::povm::cmp_real(v, &neg) == core::cmp::Ordering::Greater && values.contains(&neg) {
                    sets.push(vec![neg, v.clone()]);
                }
            }
            if pm && values.len() > 1 {
                sets.push(values.clone());
            }
            for t in sets {
                let s = table.lines(&t, pm);
                if s.is_empty() {
                    continue;
                }
                let targets: Vec<String> = t.iter().map(|x| x.reduce_conductor().to_text()).collect();
                let mut push = |via: String, label: GeometryLabel| {
                    if label.kind != GeometryKind::Unrecognized {
                        out.push(GeometryFinding {
                            k,
                            pm_identity: pm,
                            targets: targets.clone(),
                            points: s.num_points(),
                            blocks: s.num_blocks(),
                            via,
                            label: label_text(&label),
                        });
                    }
                };
                push("structure".into(), recognize(&s));
                if gq22_axioms(&s) && mermin_square(&s).is_some() {
                    push("structure".into(), GeometryLabel { kind: GeometryKind::MerminSquare, copies: 1 });
                }
                for shared in (1..k).filter(|_| s.num_blocks() <= GRAPH_BLOCK_LIMIT) {
                    push(format!("graph({shared})"), recognize_graph(&s.intersection_graph(shared)));
                    for within in 1..shared {
                        push(format!("split({shared},{within})"), recognize_graph(&s.split_intersection_graph(shared, within)));
                    }
                }
            }
        }
    }
    out
}

/// Geometry kinds found, as names, sorted and deduplicated.
pub fn kinds(findings: &[GeometryFinding]) -> Vec<String> {
    let mut v: Vec<String> = findings.iter().map(|f| f.label.split(' ').next().unwrap_or("").to_string()).collect();
    v.sort();
    v.dedup();
    v
}

pub fn scan_ks(d: usize) -> Vec<usize> {
    if d == 6 {
        vec![3, 4]
    } else {
        vec![3]
    }
}

/// How a reference subgroup name is matched against an enumerated class.
#[derive(Clone, Copy, Debug)]
pub enum Matcher {
    Conjugate(fn() -> PermPair),
    Congruence { index: usize, level: u64, genus: u64 },
    Label(&'static str),
}

impl Matcher {
    pub fn matches(&self, pair: &PermPair, sig: &Signature) -> bool {
        match self {
            Matcher::Conjugate(f) => pair.is_conjugate(&f()),
            Matcher::Congruence { index, level, genus } => sig.congruence && sig.index == *index && sig.level == *level && sig.genus == *genus,
            Matcher::Label(l) => sig.label() == *l,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RefSubgroup {
    pub name: &'static str,
    pub matcher: Matcher,
}

/// One reference line: subgroups, pp and geometry kinds (empty when the
/// geometry is not one we recognize).
#[derive(Clone, Debug)]
pub struct RefEntry {
    pub subgroups: Vec<RefSubgroup>,
    pub pp: usize,
    pub geometry_text: &'static str,
    pub geometry: Vec<&'static str>,
}

#[derive(Clone, Debug)]
pub struct RefRow {
    pub d: usize,
    pub entries: Vec<RefEntry>,
}

fn g0_2() -> PermPair {
    gamma0(2)
}
fn g0_3() -> PermPair {
    gamma0(3)
}
fn g0_4() -> PermPair {
    gamma0(4)
}
fn g0_5() -> PermPair {
    gamma0(5)
}
fn g_2() -> PermPair {
    gamma(2)
}

fn sub(name: &'static str, matcher: Matcher) -> RefSubgroup {
    RefSubgroup { name, matcher }
}

/// The reference summary for `d ≤ 9`.
pub fn reference_rows() -> Vec<RefRow> {
    let e = |subgroups: Vec<RefSubgroup>, pp, geometry_text, geometry: Vec<&'static str>| RefEntry { subgroups, pp, geometry_text, geometry };
    vec![
        RefRow { d: 2, entries: vec![e(vec![], 1, "tetrahedron", vec!["TETRAHEDRON"])] },
        RefRow { d: 3, entries: vec![e(vec![sub("Γ0(2)", Matcher::Conjugate(g0_2))], 1, "Hesse SIC", vec!["HESSE"])] },
        RefRow {
            d: 4,
            entries: vec![e(
                vec![sub("Γ0(3)", Matcher::Conjugate(g0_3)), sub("4A0", Matcher::Congruence { index: 4, level: 4, genus: 0 })],
                2,
                "GQ(2,2)",
                vec!["GQ22"],
            )],
        },
        RefRow { d: 5, entries: vec![e(vec![sub("5A0", Matcher::Congruence { index: 5, level: 5, genus: 0 })], 1, "Petersen graph", vec!["PETERSEN_DECOMP"])] },
        RefRow {
            d: 6,
            entries: vec![e(
                vec![
                    sub("Γ'", Matcher::Conjugate(commutator_subgroup)),
                    sub("Γ(2)", Matcher::Conjugate(g_2)),
                    sub("3C0", Matcher::Congruence { index: 6, level: 3, genus: 0 }),
                    sub("Γ0(4)", Matcher::Conjugate(g0_4)),
                    sub("Γ0(5)", Matcher::Conjugate(g0_5)),
                ],
                2,
                "Borromean ring",
                vec!["BORROMEAN_PAIR"],
            )],
        },
        RefRow {
            d: 7,
            entries: vec![
                e(vec![sub("7A0", Matcher::Congruence { index: 7, level: 7, genus: 0 })], 2, "two-valued triple structure", vec![]),
                e(vec![sub("NC(0,6,1,1,[1^1 6^1])", Matcher::Label("NC(0,6,1,1,[1^1 6^1])"))], 2, "", vec![]),
                e(vec![], 1, "external equiangular fiducial", vec![]),
            ],
        },
        RefRow { d: 8, entries: vec![e(vec![], 1, "Hoggar SIC", vec![])] },
        RefRow {
            d: 9,
            entries: vec![
                e(vec![sub("NC(0,8,3,0,[1^1 8^1])", Matcher::Label("NC(0,8,3,0,[1^1 8^1])"))], 2, "(3x3)-grid, Pappus", vec!["GRID_3x3", "PAPPUS"]),
                e(vec![sub("NC(0,9,1,3,[9^1])", Matcher::Label("NC(0,9,1,3,[9^1])"))], 3, "[81_8,216_3]", vec![]),
            ],
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassResult {
    pub names: Vec<String>,
    pub signature: SignatureJson,
    pub pair: PairJson,
    pub candidates: usize,
    pub ic_candidates: usize,
    pub truncated: bool,
    pub certificates: usize,
    /// Fewest distinct products over the certificates, if any.
    pub pp: Option<usize>,
    /// Fewest distinct pair traces over the certificates, if any.
    pub trace_pp: Option<usize>,
    pub best: Option<CertificateJson>,
    pub geometry: Vec<GeometryFinding>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExternalResult {
    pub name: String,
    pub pp: usize,
    pub is_sic: bool,
    pub is_ic: bool,
    pub geometry: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReferenceJson {
    pub subgroups: Vec<String>,
    pub pp: usize,
    pub geometry: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub d: usize,
    pub dims: String,
    /// Classes searched; at `d = 9` only the named classes are.
    pub classes_total: usize,
    pub classes: Vec<ClassResult>,
    /// Labels of classes giving an IC, or `none`.
    pub subgroups: Vec<String>,
    pub pp: Option<usize>,
    pub geometry: Vec<String>,
    pub external: Vec<ExternalResult>,
    pub reference: Vec<ReferenceJson>,
    pub discrepancies: Vec<String>,
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub rows: Vec<TableRow>,
}

impl Table {
    pub fn truncated(&self) -> bool {
        self.rows.iter().any(|r| r.truncated)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("dim | subgroups leading to an IC | pp | geometry\n");
        for r in &self.rows {
            let subs = if r.subgroups.is_empty() { "none".to_string() } else { r.subgroups.join(", ") };
            let pp = r.pp.map_or("-".to_string(), |p| p.to_string());
            let geo = if r.geometry.is_empty() { "-".to_string() } else { r.geometry.join(", ") };
            s.push_str(&format!("{} ({}) | {} | {} | {}\n", r.d, r.dims, subs, pp, geo));
            for c in &r.classes {
                if let Some(pp) = c.pp {
                    s.push_str(&format!(
                        "    {} pp={} trace_pp={} geometry={}\n",
                        c.signature.label,
                        pp,
                        c.trace_pp.unwrap_or(0),
                        kinds(&c.geometry).join(",")
                    ));
                }
            }
            for x in &r.external {
                s.push_str(&format!("    external {}: pp={} sic={} geometry={}\n", x.name, x.pp, x.is_sic, x.geometry.join(",")));
            }
            for dsc in &r.discrepancies {
                s.push_str(&format!("    discrepancy: {dsc}\n"));
            }
        }
        s
    }
}

fn class_name(pair: &PermPair, sig: &Signature, reference: &[RefRow]) -> Vec<String> {
    reference
        .iter()
        .flat_map(|r| r.entries.iter().flat_map(|e| e.subgroups.iter()))
        .filter(|s| s.matcher.matches(pair, sig))
        .map(|s| s.name.to_string())
        .collect()
}

fn best_certificate(certs: &[ICCertificate]) -> Option<&ICCertificate> {
    certs.iter().enumerate().min_by_key(|(i, c)| (distinct_products(c), *i)).map(|(_, c)| c)
}

fn external_results(d: usize) -> Vec<ExternalResult> {
    let mut out = Vec::new();
    let mut add = |name: &str, f: Fiducial| {
        let c = verify(&f);
        let mut geometry = Vec::new();
        if d == 2 && c.is_sic && c.povm_sum_ok {
            // four equiangular qubit projectors: Bloch vectors of a regular tetrahedron
            geometry.push("TETRAHEDRON".to_string());
        }
        out.push(ExternalResult { name: name.to_string(), pp: distinct_products(&c), is_sic: c.is_sic, is_ic: c.is_ic, geometry });
    };
    match d {
        2 => add("|T> projector", qubit_t_projector()),
        7 => add("(1,-w-1,-w,w,w+1,-1,0)", heptad_fiducial()),
        _ => {}
    }
    out
}

/// Searches every class of index `d` (only the named ones at `d = 9`) and
/// compares each row with the reference summary.
pub fn build_table<E: Executor>(max_dim: usize, budget: &SearchBudget, exec: &E) -> Result<Table> {
    let reference = reference_rows();
    let mut rows = Vec::new();
    for d in 2..=max_dim {
        let dims = table_dims(d);
        let all = enumerate_index(d)?;
        let targeted = d == 9;
        let mut classes = Vec::new();
        let mut truncated = false;
        for pair in &all {
            let sig = pair.signature()?;
            let names = class_name(pair, &sig, &reference);
            if targeted && names.is_empty() {
                continue;
            }
            let out = search_ic_with(pair, &dims, budget, exec, &|_| true)?;
            truncated |= out.truncated;
            let best = best_certificate(&out.certificates);
            let geometry = match best {
                Some(c) => scan_geometry(&Orbit::new(&c.fiducial), &scan_ks(d), 32),
                None => Vec::new(),
            };
            classes.push(ClassResult {
                names,
                signature: SignatureJson::new(&sig),
                pair: PairJson::new(pair),
                candidates: out.candidates,
                ic_candidates: out.ic_candidates,
                truncated: out.truncated,
                certificates: out.certificates.len(),
                pp: best.map(distinct_products),
                trace_pp: out.certificates.iter().map(ICCertificate::pp).min(),
                best: best.map(CertificateJson::new),
                geometry,
            });
        }
        let external = external_results(d);
        let ic: Vec<&ClassResult> = classes.iter().filter(|c| c.pp.is_some()).collect();
        let subgroups: Vec<String> =
            ic.iter().map(|c| if c.names.is_empty() { c.signature.label.clone() } else { format!("{} {}", c.names.join("/"), c.signature.label) }).collect();
        let pp = ic.iter().filter_map(|c| c.pp).chain(external.iter().map(|x| x.pp)).min();
        let mut geometry: Vec<String> = ic.iter().flat_map(|c| kinds(&c.geometry)).chain(external.iter().flat_map(|x| x.geometry.clone())).collect();
        geometry.sort();
        geometry.dedup();
        let mut discrepancies = Vec::new();
        let mut refs = Vec::new();
        if let Some(rr) = reference.iter().find(|r| r.d == d) {
            for entry in &rr.entries {
                refs.push(ReferenceJson {
                    subgroups: if entry.subgroups.is_empty() { vec!["none".into()] } else { entry.subgroups.iter().map(|s| s.name.to_string()).collect() },
                    pp: entry.pp,
                    geometry: entry.geometry_text.to_string(),
                });
                for s in &entry.subgroups {
                    let hits: Vec<&ClassResult> = classes.iter().filter(|c| c.names.iter().any(|n| n == s.name)).collect();
                    if hits.is_empty() {
                        discrepancies.push(format!("{}: no class of index {d} matches", s.name));
                        continue;
                    }
                    let pps: Vec<Option<usize>> = hits.iter().map(|c| c.pp).collect();
                    let ok: Vec<&&ClassResult> = hits.iter().filter(|c| c.pp == Some(entry.pp)).collect();
                    if ok.is_empty() {
                        let found: Vec<String> = pps.iter().map(|p| p.map_or("no IC".to_string(), |p| format!("pp {p}"))).collect();
                        discrepancies.push(format!("{} ({}): {} found, pp {} listed", s.name, hits[0].signature.label, found.join(" / "), entry.pp));
                        continue;
                    }
                    for g in &entry.geometry {
                        if !ok.iter().any(|c| kinds(&c.geometry).iter().any(|k| k == g)) {
                            discrepancies.push(format!("{} ({}): geometry {} not recognized", s.name, ok[0].signature.label, g));
                        }
                    }
                }
                if entry.subgroups.is_empty() {
                    match external.first() {
                        Some(x) if x.pp == entry.pp => {
                            for g in &entry.geometry {
                                if !x.geometry.iter().any(|k| k == g) {
                                    discrepancies.push(format!("{}: geometry {} not recognized", x.name, g));
                                }
                            }
                        }
                        Some(x) => discrepancies.push(format!("{}: pp {} found, {} listed", x.name, x.pp, entry.pp)),
                        None => discrepancies.push(format!("'{}' (pp {}) has no fiducial available here", entry.geometry_text, entry.pp)),
                    }
                }
            }
            for c in &ic {
                if c.names.is_empty() {
                    discrepancies.push(format!("{}: IC with pp {} from an unlisted class", c.signature.label, c.pp.unwrap_or(0)));
                }
            }
        }
        rows.push(TableRow {
            d,
            dims: dims.to_string(),
            classes_total: all.len(),
            classes,
            subgroups,
            pp,
            geometry,
            external,
            reference: refs,
            discrepancies,
            truncated,
        });
    }
    Ok(Table { rows })
}
