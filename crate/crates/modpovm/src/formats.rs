//! Text and JSON file formats.
//!
//! Numbers are written `conductor:[c0,c1,...]` (coefficients on powers of
//! `ζ_conductor`); plain rationals such as `-1/8` are accepted on input.

use modpovm_core::geometry::{GeometryLabel, IncidenceStructure};
use modpovm_core::modgroup::{PermPair, Signature};
use modpovm_core::perm::max_point;
use modpovm_core::povm::{FiducialState, ICCertificate};
use modpovm_core::{CycloField, CycloMatrix, CycloNum, CycloVector, DimFactorization, Error, Fiducial, Result};
use serde::{Deserialize, Serialize};

/// A number in `conductor:[...]` form or a plain rational.
pub fn parse_number(s: &str) -> Result<CycloNum> {
    let s = s.trim();
    if s.contains(':') {
        s.parse()
    } else {
        Ok(CycloNum::from_rational(&CycloField::new(1), &modpovm_core::cyclotomic::parse_rational(s)?))
    }
}

/// Splits on commas outside brackets.
pub fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = s[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out.into_iter().filter(|x| !x.is_empty()).collect()
}

pub fn parse_number_list(s: &str) -> Result<Vec<CycloNum>> {
    split_top_level(s).into_iter().map(parse_number).collect()
}

/// A fiducial given either as a state vector or as a rank-one projector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiducialFile {
    pub dims: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projector: Option<Vec<Vec<String>>>,
}

impl FiducialFile {
    pub fn from_fiducial(f: &Fiducial) -> FiducialFile {
        let dims = f.dims().to_string();
        match f.state() {
            FiducialState::Vector(v) => FiducialFile {
                dims,
                entries: Some(v.entries().iter().map(|x| x.reduce_conductor().to_text()).collect()),
                projector: None,
            },
            FiducialState::Projector(p) => FiducialFile {
                dims,
                entries: None,
                projector: Some((0..p.rows()).map(|i| (0..p.cols()).map(|j| p.get(i, j).reduce_conductor().to_text()).collect()).collect()),
            },
        }
    }

    pub fn to_fiducial(&self) -> Result<Fiducial> {
        let dims: DimFactorization = self.dims.parse()?;
        match (&self.entries, &self.projector) {
            (Some(e), None) => {
                let xs = e.iter().map(|s| parse_number(s)).collect::<Result<Vec<_>>>()?;
                Fiducial::from_vector(dims, CycloVector::new(xs)?)
            }
            (None, Some(rows)) => {
                let rows = rows.iter().map(|r| r.iter().map(|s| parse_number(s)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
                let field = rows.iter().flatten().fold(CycloField::new(1), |f, x| modpovm_core::cyclotomic::join_fields(&f, x.field()));
                Fiducial::from_projector(dims, CycloMatrix::from_rows(&field, rows)?)
            }
            _ => Err(Error::InvalidInput("a fiducial needs exactly one of 'entries' or 'projector'".into())),
        }
    }
}

/// Reads a fiducial from JSON (a fiducial object or a certificate holding
/// one) or from text: a `dims` line followed by entries, or `projector`
/// followed by one row per line.
pub fn parse_fiducial(text: &str) -> Result<Fiducial> {
    let t = text.trim_start();
    if t.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = v.get("fiducial").cloned().unwrap_or(v);
        let f: FiducialFile = serde_json::from_value(obj).map_err(|e| Error::Parse(e.to_string()))?;
        return f.to_fiducial();
    }
    let mut dims = None;
    let mut entries: Vec<String> = Vec::new();
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut projector = false;
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("dims") {
            dims = Some(rest.trim_start_matches([' ', '=', ':']).trim().to_string());
        } else if line == "projector" {
            projector = true;
        } else if projector {
            rows.push(split_top_level(line).into_iter().map(str::to_string).collect());
        } else {
            entries.extend(split_top_level(line).into_iter().map(str::to_string));
        }
    }
    let n = if projector { rows.len() } else { entries.len() };
    let file = FiducialFile {
        dims: dims.unwrap_or_else(|| n.to_string()),
        entries: (!projector).then_some(entries),
        projector: projector.then_some(rows),
    };
    file.to_fiducial()
}

/// Reads `e = (1,2)(3,4)` and `v = (2,3,4)` lines, with an optional
/// `n = 7` when trailing points are fixed by both.
pub fn parse_pair(text: &str) -> Result<PermPair> {
    let (mut e, mut v, mut n) = (None, None, None);
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once(['=', ':']).ok_or_else(|| Error::Parse(format!("expected 'key = value', got '{line}'")))?;
        let value = value.trim().to_string();
        match key.trim() {
            "e" | "sigma_e" => e = Some(value),
            "v" | "sigma_v" => v = Some(value),
            "n" | "index" => n = Some(value.parse::<usize>().map_err(|_| Error::Parse(format!("bad index '{value}'")))?),
            k => return Err(Error::Parse(format!("unknown key '{k}'"))),
        }
    }
    let e = e.ok_or_else(|| Error::Parse("missing 'e' line".into()))?;
    let v = v.ok_or_else(|| Error::Parse("missing 'v' line".into()))?;
    let mu = match n {
        Some(n) => n,
        None => max_point(&e)?.max(max_point(&v)?).max(1),
    };
    PermPair::from_cycles(mu, &e, &v)
}

pub fn format_pair(p: &PermPair) -> String {
    format!("n = {}\ne = {}\nv = {}\n", p.index(), p.sigma_e().to_cycle_string(), p.sigma_v().to_cycle_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub index: usize,
    pub e: String,
    pub v: String,
}

impl PairJson {
    pub fn new(p: &PermPair) -> PairJson {
        PairJson { index: p.index(), e: p.sigma_e().to_cycle_string(), v: p.sigma_v().to_cycle_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureJson {
    pub label: String,
    pub index: usize,
    pub genus: u64,
    pub nu2: usize,
    pub nu3: usize,
    pub cusp_widths: Vec<usize>,
    pub level: u64,
    pub congruence: bool,
}

impl SignatureJson {
    pub fn new(s: &Signature) -> SignatureJson {
        SignatureJson {
            label: s.label(),
            index: s.index,
            genus: s.genus,
            nu2: s.nu2,
            nu3: s.nu3,
            cusp_widths: s.cusp_widths.clone(),
            level: s.level,
            congruence: s.congruence,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValueJson {
    pub value: String,
    pub approx: f64,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub d: usize,
    pub conductor: u32,
    pub fiducial: FiducialFile,
    pub povm_sum_ok: bool,
    pub gram_rank: usize,
    pub is_ic: bool,
    pub is_sic: bool,
    /// Distinct pair traces.
    pub pp: usize,
    /// Distinct field-norm squared angles.
    pub angle_count: usize,
    pub trace_spectrum: Vec<ValueJson>,
    pub angle_spectrum: Vec<ValueJson>,
}

fn approx(x: &CycloNum) -> f64 {
    let z = x.embed();
    let r = if z.re.abs() < 1e-15 { 0.0 } else { z.re };
    (r * 1e12).round() / 1e12
}

impl CertificateJson {
    pub fn new(c: &ICCertificate) -> CertificateJson {
        CertificateJson {
            d: c.d(),
            conductor: c.conductor,
            fiducial: FiducialFile::from_fiducial(&c.fiducial),
            povm_sum_ok: c.povm_sum_ok,
            gram_rank: c.gram_rank,
            is_ic: c.is_ic,
            is_sic: c.is_sic,
            pp: c.pp(),
            angle_count: c.angle_spectrum.len(),
            trace_spectrum: c
                .trace_spectrum
                .iter()
                .map(|e| ValueJson { value: e.value.reduce_conductor().to_text(), approx: approx(&e.value), multiplicity: e.multiplicity })
                .collect(),
            angle_spectrum: c
                .angle_spectrum
                .iter()
                .map(|e| ValueJson { value: e.value.to_string(), approx: (e.value.to_f64() * 1e12).round() / 1e12, multiplicity: e.multiplicity })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureJson {
    pub points: Vec<String>,
    pub blocks: Vec<Vec<usize>>,
    pub traces: Vec<Option<String>>,
    pub signs: Vec<String>,
    pub label: String,
    pub copies: usize,
}

impl StructureJson {
    pub fn new(s: &IncidenceStructure, label: &GeometryLabel) -> StructureJson {
        StructureJson {
            points: s.labels.clone(),
            blocks: s.blocks.clone(),
            traces: s.traces.iter().map(|t| t.as_ref().map(|x| x.reduce_conductor().to_text())).collect(),
            signs: s.signs.iter().map(|x| x.to_string()).collect(),
            label: label.kind.name().to_string(),
            copies: label.copies,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_and_lists() {
        assert_eq!(parse_number("-1/8").unwrap(), CycloNum::from_fraction(&CycloField::new(1), -1, 8));
        assert_eq!(parse_number("6:[0,1]").unwrap(), CycloNum::root_of_unity(&CycloField::new(6), 6, 1).unwrap());
        assert_eq!(split_top_level("1/8, 6:[0,1], -1"), vec!["1/8", "6:[0,1]", "-1"]);
        assert!(split_top_level("").is_empty());
        assert!(parse_number("x").is_err());
    }

    #[test]
    fn fiducial_text_and_json_agree() {
        let text = "dims 2x2\n0, 1\n6:[0,-1]\n6:[-1,1]\n";
        let f = parse_fiducial(text).unwrap();
        let json = serde_json::to_string(&FiducialFile::from_fiducial(&f)).unwrap();
        let back = parse_fiducial(&json).unwrap();
        assert_eq!(serde_json::to_string(&FiducialFile::from_fiducial(&back)).unwrap(), json);
        assert_eq!(back.dims(), f.dims());
        assert!(parse_fiducial("dims 3\n0, 1\n").is_err());
    }

    #[test]
    fn pair_files() {
        let p = parse_pair("# Hesse\ne = (1,2)\nv = (2,3)\n").unwrap_err();
        assert!(matches!(p, Error::InvalidPermutation(_) | Error::InvalidPair(_)));
        let p = parse_pair("e = (2,3)\nv = (1,2,3)\n").unwrap();
        assert_eq!(p.index(), 3);
        assert_eq!(parse_pair(&format_pair(&p)).unwrap(), p);
        let q = parse_pair("n = 4\ne = (1,2)(3,4)\nv = (2,3,4)\n").unwrap();
        assert_eq!(q.index(), 4);
    }
}
