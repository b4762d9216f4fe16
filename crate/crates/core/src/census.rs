//! The tabulated classification data: the genus-1 knots with 2-dimensional
//! top knot Floer homology, their Seifert matrices, Alexander polynomials,
//! JSJ descriptors of their 0-surgeries, cover counts, and optional PD
//! codes, together with a parser for knot names.
//!
//! Records for the named knots load from plain-text fixture files and are
//! fully revalidated on load: the Alexander polynomial of the stored
//! Seifert matrix must reproduce the stored Δ string, determinant and
//! signature must match, and any PD code must pass the Fox-calculus Δ
//! cross-check.  A loader mismatch is a hard error.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_traits::ToPrimitive;

use crate::laurent::LaurentError;
use crate::pi1::{fox_alexander, parse_pd, wirtinger, PdCode, Pi1Error};
use crate::seifert::{pretzel_seifert, SeifertError, SeifertMatrix};
use crate::{Int, LaurentPoly};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CensusError {
    #[error("knot spec parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("pretzel parameters must all be odd, got ({p}, {q}, {r})")]
    Parity { p: i64, q: i64, r: i64 },
    #[error("knot {0} is outside the classified universe")]
    UnknownKnot(String),
    #[error("fixture {file}: {msg}")]
    Fixture { file: String, msg: String },
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Pi1(#[from] Pi1Error),
}

/// Clasp sign of a Whitehead double.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Clasp {
    Positive,
    Negative,
}

/// Parsed knot identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum KnotFamily {
    /// Pretzel knot P(p, q, r) with odd parameters.
    Pretzel { p: i64, q: i64, r: i64 },
    /// Twisted Whitehead double of the right-handed trefoil.
    WhiteheadDouble { clasp: Clasp, twists: i64 },
    /// A named knot from the fixture set.
    Named(String),
}

/// Knot family plus mirroring flag.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct KnotSpec {
    pub family: KnotFamily,
    pub mirrored: bool,
}

impl KnotSpec {
    pub fn pretzel(p: i64, q: i64, r: i64) -> Result<Self, CensusError> {
        if p % 2 == 0 || q % 2 == 0 || r % 2 == 0 {
            return Err(CensusError::Parity { p, q, r });
        }
        Ok(KnotSpec { family: KnotFamily::Pretzel { p, q, r }, mirrored: false })
    }

    pub fn named(name: &str) -> Self {
        KnotSpec { family: KnotFamily::Named(name.to_string()), mirrored: false }
    }

    pub fn whitehead(clasp: Clasp, twists: i64) -> Self {
        KnotSpec { family: KnotFamily::WhiteheadDouble { clasp, twists }, mirrored: false }
    }

    pub fn mirror(&self) -> Self {
        KnotSpec { family: self.family.clone(), mirrored: !self.mirrored }
    }

    /// Mirrored pretzels in the classified family normalize to un-mirrored
    /// ones with negated third parameter: m(P(−3,3,k)) = P(−3,3,−k).
    pub fn normalize(&self) -> Self {
        match (&self.family, self.mirrored) {
            (KnotFamily::Pretzel { p: -3, q: 3, r }, true) => {
                KnotSpec { family: KnotFamily::Pretzel { p: -3, q: 3, r: -r }, mirrored: false }
            }
            _ => self.clone(),
        }
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mirrored {
            write!(f, "m(")?;
        }
        match &self.family {
            KnotFamily::Pretzel { p, q, r } => write!(f, "P({p},{q},{r})")?,
            KnotFamily::WhiteheadDouble { clasp, twists } => {
                let sign = if *clasp == Clasp::Positive { '+' } else { '-' };
                write!(f, "Wh{sign}(T(2,3),{twists})")?;
            }
            KnotFamily::Named(name) => write!(f, "{name}")?,
        }
        if self.mirrored {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl serde::Serialize for KnotSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parse `P(p,q,r)` | `Wh(+|-)(T(2,3),t)` | `5_2` | `15n43522` | `16n696530`
/// | `m(<spec>)`, whitespace-insensitive.
pub fn parse_knot_spec(text: &str) -> Result<KnotSpec, CensusError> {
    let stripped: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    parse_spec_inner(&stripped, 0)
}

fn parse_spec_inner(s: &str, offset: usize) -> Result<KnotSpec, CensusError> {
    let err = |pos: usize, msg: &str| CensusError::Parse { pos: offset + pos, msg: msg.to_string() };
    if let Some(inner) = s.strip_prefix("m(") {
        let inner = inner
            .strip_suffix(')')
            .ok_or_else(|| err(s.len(), "expected closing `)` for mirror"))?;
        let spec = parse_spec_inner(inner, offset + 2)?;
        return Ok(spec.mirror());
    }
    if let Some(rest) = s.strip_prefix("P(") {
        let body = rest
            .strip_suffix(')')
            .ok_or_else(|| err(s.len(), "expected closing `)` for pretzel"))?;
        let parts: Vec<&str> = body.split(',').collect();
        if parts.len() != 3 {
            return Err(err(2, "pretzel needs three parameters"));
        }
        let mut params = [0i64; 3];
        for (i, part) in parts.iter().enumerate() {
            params[i] = part
                .parse()
                .map_err(|_| err(2, &format!("invalid pretzel parameter `{part}`")))?;
        }
        return KnotSpec::pretzel(params[0], params[1], params[2]);
    }
    if s.starts_with("Wh+") || s.starts_with("Wh-") {
        let clasp = if s.as_bytes()[2] == b'+' { Clasp::Positive } else { Clasp::Negative };
        let rest = &s[3..];
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| err(3, "expected `(T(2,3),t)` after Wh±"))?;
        let body = body
            .strip_prefix("T(2,3),")
            .ok_or_else(|| err(4, "only the companion T(2,3) is supported"))?;
        let twists: i64 =
            body.parse().map_err(|_| err(4, &format!("invalid twist count `{body}`")))?;
        return Ok(KnotSpec::whitehead(clasp, twists));
    }
    match s {
        "5_2" => Ok(KnotSpec::named("5_2")),
        "15n43522" => Ok(KnotSpec::named("15n43522")),
        "16n696530" => Ok(KnotSpec::named("16n696530")),
        _ => Err(err(0, &format!("unrecognized knot spec `{s}`"))),
    }
}

/// Seifert-fibered base surface of a JSJ piece.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum SfBase {
    Annulus,
    PairOfPants,
}

/// One JSJ piece.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum JsjPiece {
    SeifertFibered { base: SfBase, tag: String },
    KnotExterior { name: String },
}

/// Tabulated JSJ data of a 0-surgery: the pieces and the cutting tori.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct JsjDescriptor {
    pub pieces: Vec<JsjPiece>,
    /// Separating flags, one per JSJ torus.
    pub tori_separating: Vec<bool>,
}

impl JsjDescriptor {
    /// The descriptor of the orientation-reversed manifold: knot-exterior
    /// pieces are replaced by their mirrors.
    pub fn mirror(&self) -> Self {
        let pieces = self
            .pieces
            .iter()
            .map(|p| match p {
                JsjPiece::KnotExterior { name } => {
                    JsjPiece::KnotExterior { name: mirror_torus_knot_name(name) }
                }
                other => other.clone(),
            })
            .collect();
        JsjDescriptor { pieces, tori_separating: self.tori_separating.clone() }
    }

    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }

    pub fn has_knot_exterior_piece(&self) -> bool {
        self.pieces.iter().any(|p| matches!(p, JsjPiece::KnotExterior { .. }))
    }
}

fn mirror_torus_knot_name(name: &str) -> String {
    match name {
        "T(2,3)" => "T(-2,3)".to_string(),
        "T(-2,3)" => "T(2,3)".to_string(),
        other => format!("m({other})"),
    }
}

/// Fully populated record of a classified knot.
#[derive(Debug, Clone)]
pub struct KnotRecord {
    pub spec: KnotSpec,
    pub names: Vec<String>,
    pub seifert: SeifertMatrix,
    pub delta: LaurentPoly,
    pub determinant: Int,
    pub signature: i64,
    pub genus: usize,
    pub dim_hfk_top: u32,
    pub jsj: Option<JsjDescriptor>,
    pub cover6: Option<u64>,
    pub pd: Option<PdCode>,
}

/// The loaded classification table.
#[derive(Debug, Clone)]
pub struct Census {
    named: Vec<KnotRecord>,
}

const FIXTURE_SOURCES: &[(&str, &str)] = &[
    ("5_2.knot", include_str!("../fixtures/5_2.knot")),
    ("15n43522.knot", include_str!("../fixtures/15n43522.knot")),
    ("wh_minus_t23_2.knot", include_str!("../fixtures/wh_minus_t23_2.knot")),
    ("wh_plus_t23_2.knot", include_str!("../fixtures/wh_plus_t23_2.knot")),
];

impl Census {
    /// The compiled-in fixture set.
    pub fn builtin() -> Self {
        Self::from_sources(FIXTURE_SOURCES.iter().map(|&(n, s)| (n.to_string(), s.to_string())))
            .expect("builtin fixtures must validate")
    }

    /// Load every `*.knot` file from a fixture directory.
    pub fn load_dir(dir: &Path) -> Result<Self, CensusError> {
        let mut sources = Vec::new();
        let entries = std::fs::read_dir(dir).map_err(|e| CensusError::Fixture {
            file: dir.display().to_string(),
            msg: e.to_string(),
        })?;
        for entry in entries {
            let entry = entry.map_err(|e| CensusError::Fixture {
                file: dir.display().to_string(),
                msg: e.to_string(),
            })?;
            let path = entry.path();
            if path.extension().and_then(|e| e.to_str()) == Some("knot") {
                let text = std::fs::read_to_string(&path).map_err(|e| CensusError::Fixture {
                    file: path.display().to_string(),
                    msg: e.to_string(),
                })?;
                sources.push((path.display().to_string(), text));
            }
        }
        sources.sort();
        if sources.is_empty() {
            return Err(CensusError::Fixture {
                file: dir.display().to_string(),
                msg: "no .knot fixtures found".to_string(),
            });
        }
        Self::from_sources(sources.into_iter())
    }

    fn from_sources(sources: impl Iterator<Item = (String, String)>) -> Result<Self, CensusError> {
        let mut named = Vec::new();
        for (file, text) in sources {
            named.push(parse_fixture(&file, &text)?);
        }
        named.sort_by(|a, b| a.names.cmp(&b.names));
        Ok(Census { named })
    }

    pub fn records(&self) -> &[KnotRecord] {
        &self.named
    }

    fn named_record(&self, name: &str) -> Option<&KnotRecord> {
        self.named.iter().find(|r| r.names.iter().any(|n| n == name))
    }

    /// Resolve a spec in the classified universe to its record.  Mirrors
    /// are produced by transforming the base record; mirrored pretzels
    /// normalize away their mirror flag first.
    pub fn lookup(&self, spec: &KnotSpec) -> Result<KnotRecord, CensusError> {
        let spec = spec.normalize();
        let base = match &spec.family {
            KnotFamily::Pretzel { p: -3, q: 3, r } => pretzel_record(*r)?,
            KnotFamily::Pretzel { .. } => {
                return Err(CensusError::UnknownKnot(spec.to_string()));
            }
            KnotFamily::WhiteheadDouble { clasp, twists: 2 } => {
                let name = match clasp {
                    Clasp::Positive => "Wh+(T(2,3),2)",
                    Clasp::Negative => "Wh-(T(2,3),2)",
                };
                self.named_record(name)
                    .cloned()
                    .ok_or_else(|| CensusError::UnknownKnot(spec.to_string()))?
            }
            KnotFamily::WhiteheadDouble { .. } => {
                return Err(CensusError::UnknownKnot(spec.to_string()));
            }
            KnotFamily::Named(name) => self
                .named_record(name)
                .cloned()
                .ok_or_else(|| CensusError::UnknownKnot(spec.to_string()))?,
        };
        Ok(if spec.mirrored { mirror_record(&base, &spec) } else { base })
    }
}

/// Mirror a record: V ↦ −Vᵀ, σ ↦ −σ, Δ fixed, JSJ pieces mirrored.
/// Cover counts carry over because π₁ ignores orientation.
fn mirror_record(base: &KnotRecord, spec: &KnotSpec) -> KnotRecord {
    KnotRecord {
        spec: spec.clone(),
        names: base.names.iter().map(|n| format!("m({n})")).collect(),
        seifert: base.seifert.mirror(),
        delta: base.delta.clone(),
        determinant: base.determinant.clone(),
        signature: -base.signature,
        genus: base.genus,
        dim_hfk_top: base.dim_hfk_top,
        jsj: base.jsj.as_ref().map(|j| j.mirror()),
        cover6: base.cover6,
        pd: None,
    }
}

/// The parametric pretzel record P(−3, 3, r), r odd.
fn pretzel_record(r: i64) -> Result<KnotRecord, CensusError> {
    let spec = KnotSpec::pretzel(-3, 3, r)?;
    let seifert = pretzel_seifert(-3, 3, r)?;
    let delta = seifert.alexander();
    debug_assert_eq!(delta, LaurentPoly::from_int_terms(&[(1, -2), (0, 5), (-1, -2)]));
    let determinant = seifert.determinant();
    let signature = seifert.signature();
    Ok(KnotRecord {
        spec: spec.clone(),
        names: vec![spec.to_string()],
        seifert,
        delta,
        determinant,
        signature,
        genus: 1,
        dim_hfk_top: 2,
        jsj: Some(JsjDescriptor {
            pieces: vec![JsjPiece::SeifertFibered {
                base: SfBase::Annulus,
                tag: "T(2,4)-complement".to_string(),
            }],
            tori_separating: vec![false],
        }),
        cover6: None,
        pd: None,
    })
}

fn parse_fixture(file: &str, text: &str) -> Result<KnotRecord, CensusError> {
    let fail = |msg: String| CensusError::Fixture { file: file.to_string(), msg };
    let mut fields: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| fail(format!("expected `key = value`, got `{line}`")))?;
        fields.entry(key.trim().to_string()).or_default().push(value.trim().to_string());
    }
    let one = |key: &str| -> Result<String, CensusError> {
        let vs = fields.get(key).ok_or_else(|| fail(format!("missing field `{key}`")))?;
        if vs.len() != 1 {
            return Err(fail(format!("field `{key}` must appear exactly once")));
        }
        Ok(vs[0].clone())
    };

    let name = one("name")?;
    let mut names = vec![name.clone()];
    if let Some(aliases) = fields.get("alias") {
        names.extend(aliases.iter().cloned());
    }

    let rows: Vec<Vec<i64>> = fields
        .get("seifert.row")
        .ok_or_else(|| fail("missing seifert.row fields".to_string()))?
        .iter()
        .map(|row| {
            row.split_whitespace()
                .map(|v| v.parse::<i64>().map_err(|_| fail(format!("bad matrix entry `{v}`"))))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let seifert = SeifertMatrix::new(rows)?;

    let delta = LaurentPoly::parse_with_var(&one("delta")?, "t")?;
    let computed = seifert.alexander();
    if computed != delta {
        return Err(fail(format!(
            "Alexander mismatch: matrix gives {computed}, fixture says {delta}"
        )));
    }
    let det: i64 = one("det")?.parse().map_err(|_| fail("bad det".to_string()))?;
    if seifert.determinant() != Int::from(det) {
        return Err(fail(format!(
            "determinant mismatch: matrix gives {}, fixture says {det}",
            seifert.determinant()
        )));
    }
    let sigma: i64 = one("sigma")?.parse().map_err(|_| fail("bad sigma".to_string()))?;
    if seifert.signature() != sigma {
        return Err(fail(format!(
            "signature mismatch: matrix gives {}, fixture says {sigma}",
            seifert.signature()
        )));
    }
    let genus: usize = one("genus")?.parse().map_err(|_| fail("bad genus".to_string()))?;
    if seifert.genus() != genus {
        return Err(fail("genus does not match matrix size".to_string()));
    }
    let dim_hfk_top: u32 =
        one("dim_hfk_top")?.parse().map_err(|_| fail("bad dim_hfk_top".to_string()))?;
    // classified universe: genus 1 with 2-dimensional top knot Floer homology
    if dim_hfk_top != 2 || genus != 1 {
        return Err(fail("classified records have genus 1 and dim_hfk_top 2".to_string()));
    }
    let det7 = LaurentPoly::from_int_terms(&[(1, 2), (0, -3), (-1, 2)]);
    let det9 = LaurentPoly::from_int_terms(&[(1, -2), (0, 5), (-1, -2)]);
    if delta != det7 && delta != det9 {
        return Err(fail(format!("Delta {delta} is outside the classified universe")));
    }
    let t_coeff = delta.coeff(1);
    if (dim_hfk_top as i64 - t_coeff.to_integer().to_i64().unwrap_or(0)) % 2 != 0 {
        return Err(fail("dim_hfk_top parity does not match χ".to_string()));
    }

    let jsj = parse_jsj(&fields, &fail)?;

    let cover6: Option<u64> = match fields.get("cover6") {
        Some(vs) if vs.len() == 1 => {
            Some(vs[0].parse().map_err(|_| fail("bad cover6".to_string()))?)
        }
        Some(_) => return Err(fail("cover6 must appear at most once".to_string())),
        None => None,
    };

    let pd = match fields.get("pd") {
        Some(vs) if vs.len() == 1 => {
            let pd = parse_pd(&vs[0])?;
            // Fox-calculus cross-check against the Seifert-matrix Δ
            let peripheral = wirtinger(&pd)?;
            let fox = fox_alexander(&peripheral)?;
            if fox != delta {
                return Err(fail(format!(
                    "PD fails the Fox oracle: diagram gives {fox}, fixture says {delta}"
                )));
            }
            Some(pd)
        }
        Some(_) => return Err(fail("pd must appear at most once".to_string())),
        None => None,
    };

    let spec = parse_knot_spec(&name).unwrap_or_else(|_| KnotSpec::named(&name));
    Ok(KnotRecord {
        spec,
        names,
        seifert,
        delta,
        determinant: Int::from(det),
        signature: sigma,
        genus,
        dim_hfk_top,
        jsj,
        cover6,
        pd,
    })
}

fn parse_jsj(
    fields: &BTreeMap<String, Vec<String>>,
    fail: &dyn Fn(String) -> CensusError,
) -> Result<Option<JsjDescriptor>, CensusError> {
    if let Some(vs) = fields.get("jsj") {
        if vs.len() == 1 && vs[0] == "untabulated" {
            return Ok(None);
        }
        return Err(fail("jsj must be `untabulated` or given via jsj.torus/jsj.piece".into()));
    }
    let tori = fields.get("jsj.torus");
    let pieces = fields.get("jsj.piece");
    match (tori, pieces) {
        (None, None) => Ok(None),
        (Some(tori), Some(pieces)) => {
            let tori_separating = tori
                .iter()
                .map(|t| match t.as_str() {
                    "separating" => Ok(true),
                    "nonseparating" => Ok(false),
                    other => Err(fail(format!("bad jsj.torus `{other}`"))),
                })
                .collect::<Result<_, _>>()?;
            let pieces = pieces
                .iter()
                .map(|p| {
                    let parts: Vec<&str> = p.split_whitespace().collect();
                    match parts.as_slice() {
                        ["exterior", name] => {
                            Ok(JsjPiece::KnotExterior { name: name.to_string() })
                        }
                        ["sf", base, tag] => {
                            let base = match *base {
                                "annulus" => SfBase::Annulus,
                                "pair-of-pants" => SfBase::PairOfPants,
                                other => return Err(fail(format!("bad sf base `{other}`"))),
                            };
                            Ok(JsjPiece::SeifertFibered { base, tag: tag.to_string() })
                        }
                        _ => Err(fail(format!("bad jsj.piece `{p}`"))),
                    }
                })
                .collect::<Result<_, _>>()?;
            Ok(Some(JsjDescriptor { pieces, tori_separating }))
        }
        _ => Err(fail("jsj.torus and jsj.piece must appear together".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_grammar() {
        let spec = parse_knot_spec("P(-3,3,7)").unwrap();
        assert_eq!(spec, KnotSpec::pretzel(-3, 3, 7).unwrap());
        assert!(!spec.mirrored);

        let spec = parse_knot_spec("m(Wh+(T(2,3),2))").unwrap();
        assert_eq!(spec.family, KnotFamily::WhiteheadDouble { clasp: Clasp::Positive, twists: 2 });
        assert!(spec.mirrored);

        let spec = parse_knot_spec(" m( P( -3, 3, 9 ) ) ").unwrap();
        assert!(spec.mirrored);

        assert!(matches!(parse_knot_spec("P(-3,3,4)"), Err(CensusError::Parity { .. })));
        assert!(matches!(parse_knot_spec("Q(1,2)"), Err(CensusError::Parse { .. })));
        assert!(matches!(parse_knot_spec("Wh+(T(2,5),2)"), Err(CensusError::Parse { .. })));
    }

    #[test]
    fn display_round_trips() {
        for text in
            ["P(-3,3,7)", "m(P(-3,3,-9))", "Wh-(T(2,3),2)", "m(Wh+(T(2,3),2))", "5_2", "15n43522"]
        {
            let spec = parse_knot_spec(text).unwrap();
            assert_eq!(parse_knot_spec(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn mirrored_pretzels_normalize() {
        let spec = parse_knot_spec("m(P(-3,3,7))").unwrap();
        assert_eq!(spec.normalize(), KnotSpec::pretzel(-3, 3, -7).unwrap());
        // and double mirror is the identity
        assert_eq!(spec.mirror().normalize(), KnotSpec::pretzel(-3, 3, 7).unwrap());
    }

    #[test]
    fn builtin_census_loads_and_validates() {
        let census = Census::builtin();
        assert_eq!(census.records().len(), 4);
        for record in census.records() {
            assert_eq!(record.seifert.alexander(), record.delta);
            assert_eq!(record.genus, 1);
            assert_eq!(record.dim_hfk_top, 2);
        }
    }

    #[test]
    fn lookup_fills_pretzel_records() {
        let census = Census::builtin();
        let record = census.lookup(&parse_knot_spec("P(-3,3,5)").unwrap()).unwrap();
        assert_eq!(record.delta, LaurentPoly::from_int_terms(&[(1, -2), (0, 5), (-1, -2)]));
        assert_eq!(record.jsj.as_ref().unwrap().piece_count(), 1);
        assert_eq!(record.determinant, Int::from(9));
    }

    #[test]
    fn lookup_resolves_names_and_aliases() {
        let census = Census::builtin();
        let a = census.lookup(&parse_knot_spec("15n43522").unwrap()).unwrap();
        assert_eq!(a.cover6, Some(3));
        assert_eq!(a.delta, LaurentPoly::from_int_terms(&[(1, 2), (0, -3), (-1, 2)]));
        let b = census.lookup(&parse_knot_spec("16n696530").unwrap()).unwrap();
        assert_eq!(b.cover6, Some(21));
        let c = census.lookup(&parse_knot_spec("Wh-(T(2,3),2)").unwrap()).unwrap();
        assert_eq!(b.names, c.names);
    }

    #[test]
    fn lookup_rejects_unknown_knots() {
        let census = Census::builtin();
        assert!(matches!(
            census.lookup(&parse_knot_spec("P(1,1,1)").unwrap()),
            Err(CensusError::UnknownKnot(_))
        ));
        assert!(matches!(
            census.lookup(&KnotSpec::whitehead(Clasp::Negative, 3)),
            Err(CensusError::UnknownKnot(_))
        ));
    }

    #[test]
    fn mirror_lookup_flips_signature_and_jsj() {
        let census = Census::builtin();
        let base = census.lookup(&parse_knot_spec("Wh+(T(2,3),2)").unwrap()).unwrap();
        let mirror = census.lookup(&parse_knot_spec("m(Wh+(T(2,3),2))").unwrap()).unwrap();
        assert_eq!(mirror.signature, -base.signature);
        assert_eq!(mirror.delta, base.delta);
        let exterior_names = |r: &KnotRecord| -> Vec<String> {
            r.jsj
                .as_ref()
                .unwrap()
                .pieces
                .iter()
                .filter_map(|p| match p {
                    JsjPiece::KnotExterior { name } => Some(name.clone()),
                    _ => None,
                })
                .collect()
        };
        assert_eq!(exterior_names(&base), vec!["T(2,3)".to_string()]);
        assert_eq!(exterior_names(&mirror), vec!["T(-2,3)".to_string()]);
    }

    #[test]
    fn mirror_of_mirror_is_identity_on_records() {
        let census = Census::builtin();
        let spec = parse_knot_spec("15n43522").unwrap();
        let once = census.lookup(&spec.mirror()).unwrap();
        let twice = census.lookup(&spec.mirror().mirror()).unwrap();
        assert_eq!(once.signature, -twice.signature);
        assert_eq!(twice.seifert, census.lookup(&spec).unwrap().seifert);
    }

    #[test]
    fn load_dir_matches_builtin() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        let census = Census::load_dir(&dir).unwrap();
        assert_eq!(census.records().len(), Census::builtin().records().len());
        for (a, b) in census.records().iter().zip(Census::builtin().records()) {
            assert_eq!(a.names, b.names);
            assert_eq!(a.delta, b.delta);
        }
    }
}
