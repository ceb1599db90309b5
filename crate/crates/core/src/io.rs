//! JSON formats for systems, star families, S-trees and certificates.
//!
//! A system file is either an abstract universe
//! `{"elements", "inverse", "leq", "join"?, "meet"?, "members"?}` or a set
//! of set separations `{"V": [...], "separations": [{"A": [...], "B": [...]}]}`.
//! Separations are referred to by their universe id everywhere else; in a
//! family file over a set system an `{"A", "B"}` object may stand in for an id.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::backends::{build_set_universe, GroundSet, SetSeparation, SetUniverse};
use crate::duality::{Certificate, Transcript};
use crate::error::{Error, Result};
use crate::star::{Star, StarFamily};
use crate::stree::{Node, STree};
use crate::system::{Orientation, SeparationSystem};
use crate::universe::{validate_universe, RawUniverse, Sep, Universe};

/// A parsed system, with its set representation when it has one.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub system: SeparationSystem,
    pub sets: Option<SetUniverse>,
}

impl Loaded {
    pub fn universe(&self) -> &Universe {
        self.system.universe()
    }

    /// `id -> "({a,b},{c})"` for every member, when the system is set based.
    pub fn descriptions(&self) -> Option<BTreeMap<String, String>> {
        let su = self.sets.as_ref()?;
        let u = self.universe();
        Some(self.system.members().iter().map(|&s| (u.id(s).to_string(), su.describe(s))).collect())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct UniverseJson {
    elements: Vec<u64>,
    inverse: BTreeMap<String, u64>,
    leq: Vec<[u64; 2]>,
    #[serde(default)]
    join: Option<Vec<[u64; 3]>>,
    #[serde(default)]
    meet: Option<Vec<[u64; 3]>>,
    #[serde(default)]
    members: Option<Vec<u64>>,
}

/// A vertex or point name; numbers are read as their decimal string.
#[derive(Deserialize, Serialize, Clone, Debug)]
#[serde(untagged)]
enum Name {
    Text(String),
    Number(u64),
}

impl Name {
    fn text(&self) -> String {
        match self {
            Name::Text(s) => s.clone(),
            Name::Number(n) => n.to_string(),
        }
    }
}

#[derive(Deserialize, Serialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
struct SidesJson {
    #[serde(rename = "A")]
    a: Vec<Name>,
    #[serde(rename = "B")]
    b: Vec<Name>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SetsJson {
    #[serde(rename = "V")]
    v: Vec<Name>,
    separations: Vec<SidesJson>,
}

fn parse_id(key: &str) -> Result<u64> {
    key.trim().parse().map_err(|_| Error::Parse(format!("expected an integer id, got {key:?}")))
}

/// Parses either system format.
pub fn parse_system(text: &str, max_closure: usize) -> Result<Loaded> {
    let value: Value = serde_json::from_str(text)?;
    if value.get("V").is_some() {
        let sets: SetsJson = serde_json::from_value(value)?;
        let ground = GroundSet::new(sets.v.iter().map(Name::text).collect())?;
        let pool = sets
            .separations
            .iter()
            .map(|s| sides_of(&ground, s))
            .collect::<Result<Vec<_>>>()?;
        let su = build_set_universe(&ground, &pool, max_closure)?;
        return Ok(Loaded { system: su.system.clone(), sets: Some(su) });
    }
    let raw: UniverseJson = serde_json::from_value(value)?;
    let inverse = raw
        .inverse
        .iter()
        .map(|(k, &v)| parse_id(k).map(|k| (k, v)))
        .collect::<Result<Vec<_>>>()?;
    let tri = |t: Option<Vec<[u64; 3]>>| t.map(|v| v.into_iter().map(|[a, b, c]| (a, b, c)).collect());
    let universe = validate_universe(&RawUniverse {
        elements: raw.elements,
        inverse,
        leq: raw.leq.into_iter().map(|[a, b]| (a, b)).collect(),
        join: tri(raw.join),
        meet: tri(raw.meet),
    })?;
    let universe = Arc::new(universe);
    let system = match raw.members {
        None => SeparationSystem::full(universe),
        Some(ids) => {
            let seps = ids.iter().map(|&id| universe.sep_checked(id)).collect::<Result<Vec<_>>>()?;
            SeparationSystem::new(universe, seps)?
        }
    };
    Ok(Loaded { system, sets: None })
}

fn sides_of(ground: &GroundSet, s: &SidesJson) -> Result<SetSeparation> {
    let a: Vec<String> = s.a.iter().map(Name::text).collect();
    let b: Vec<String> = s.b.iter().map(Name::text).collect();
    Ok(SetSeparation::new(
        ground.mask_of(a.iter().map(String::as_str))?,
        ground.mask_of(b.iter().map(String::as_str))?,
    ))
}

/// The universe format, listing the full order; join and meet tables are
/// written when the universe has them.
pub fn universe_to_json(sys: &SeparationSystem) -> Value {
    let u = sys.universe();
    let elements: Vec<u64> = u.elements().map(|s| u.id(s)).collect();
    let inverse: BTreeMap<String, u64> = u.elements().map(|s| (u.id(s).to_string(), u.id(u.inv(s)))).collect();
    let mut leq = Vec::new();
    let mut join = Vec::new();
    let mut meet = Vec::new();
    for a in u.elements() {
        for b in u.elements() {
            if u.leq(a, b) {
                leq.push([u.id(a), u.id(b)]);
            }
            if a <= b {
                if let (Some(j), Some(m)) = (u.join(a, b), u.meet(a, b)) {
                    join.push([u.id(a), u.id(b), u.id(j)]);
                    meet.push([u.id(a), u.id(b), u.id(m)]);
                }
            }
        }
    }
    let mut out = json!({
        "elements": elements,
        "inverse": inverse,
        "leq": leq,
        "members": u.ids(sys.members()),
    });
    if u.has_lattice() {
        out["join"] = json!(join);
        out["meet"] = json!(meet);
    }
    out
}

/// The set-separation format for a pool of separations.
pub fn sets_to_json(ground: &GroundSet, pool: &[SetSeparation]) -> Value {
    let names = |m: u32| ground.names_of(m).into_iter().map(String::from).collect::<Vec<_>>();
    json!({
        "V": ground.names(),
        "separations": pool.iter().map(|s| json!({"A": names(s.a), "B": names(s.b)})).collect::<Vec<_>>(),
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ElemJson {
    Id(u64),
    Sides(SidesJson),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyJson {
    stars: Vec<Vec<ElemJson>>,
}

fn elem(loaded: &Loaded, e: &ElemJson) -> Result<Sep> {
    match e {
        ElemJson::Id(id) => loaded.universe().sep_checked(*id),
        ElemJson::Sides(s) => {
            let su = loaded
                .sets
                .as_ref()
                .ok_or_else(|| Error::Parse("{A, B} elements need a set system".into()))?;
            let sides = sides_of(&su.ground, s)?;
            su.sep_of(sides).ok_or_else(|| Error::Parse(format!("{} is not in the universe", describe_sides(&su.ground, sides))))
        }
    }
}

fn describe_sides(ground: &GroundSet, s: SetSeparation) -> String {
    format!("({{{}}}, {{{}}})", ground.names_of(s.a).join(","), ground.names_of(s.b).join(","))
}

/// Members are not checked to be stars here; the engines do that.
pub fn parse_family(text: &str, loaded: &Loaded) -> Result<StarFamily> {
    family_from(&serde_json::from_str(text)?, loaded)
}

fn family_from(raw: &FamilyJson, loaded: &Loaded) -> Result<StarFamily> {
    raw.stars
        .iter()
        .map(|star| star.iter().map(|e| elem(loaded, e)).collect::<Result<Vec<_>>>().map(Star::new))
        .collect()
}

pub fn family_to_json(f: &StarFamily, u: &Universe) -> Value {
    json!({ "stars": f.iter().map(|s| u.ids(s.seps())).collect::<Vec<_>>() })
}

fn stree_fields(t: &STree, u: &Universe) -> serde_json::Map<String, Value> {
    let alpha: BTreeMap<String, u64> = t.oriented_edges().map(|((a, b), s)| (format!("{a}->{b}"), u.id(s))).collect();
    let mut m = serde_json::Map::new();
    m.insert("nodes".into(), json!(t.nodes().collect::<Vec<_>>()));
    m.insert("edges".into(), json!(t.edges().map(|(a, b)| [a, b]).collect::<Vec<_>>()));
    m.insert("alpha".into(), json!(alpha));
    if let Some(r) = t.root {
        m.insert("root".into(), json!(r));
    }
    m
}

pub fn stree_to_json(t: &STree, u: &Universe) -> Value {
    Value::Object(stree_fields(t, u))
}

#[derive(Deserialize)]
struct STreeJson {
    nodes: Vec<Node>,
    edges: Vec<[Node; 2]>,
    alpha: BTreeMap<String, u64>,
    #[serde(default)]
    root: Option<Node>,
}

fn parse_arrow(key: &str) -> Result<(Node, Node)> {
    let bad = || Error::Parse(format!("alpha key {key:?} is not of the form \"u->v\""));
    let (a, b) = key.split_once("->").ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn stree_from(raw: STreeJson, u: &Universe) -> Result<STree> {
    let mut t = STree::default();
    for &n in &raw.nodes {
        t.add_node(n);
    }
    let mut alpha = BTreeMap::new();
    for (k, &id) in &raw.alpha {
        alpha.insert(parse_arrow(k)?, u.sep_checked(id)?);
    }
    for &[a, b] in &raw.edges {
        if !t.contains_node(a) || !t.contains_node(b) {
            return Err(Error::NotATree(format!("edge {a}-{b} uses an unlisted node")));
        }
        let ab = alpha.remove(&(a, b)).ok_or_else(|| Error::Parse(format!("missing alpha for {a}->{b}")))?;
        let ba = alpha.remove(&(b, a)).ok_or_else(|| Error::Parse(format!("missing alpha for {b}->{a}")))?;
        t.add_edge(a, b, ab, ba);
    }
    if let Some(((a, b), _)) = alpha.into_iter().next() {
        return Err(Error::Parse(format!("alpha given for {a}->{b}, which is not an edge")));
    }
    t.root = raw.root;
    Ok(t)
}

pub fn parse_stree(text: &str, u: &Universe) -> Result<STree> {
    stree_from(serde_json::from_str(text)?, u)
}

/// Which theorem a certificate answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavour {
    Weak,
    Strong,
}

/// A certificate as read back from JSON.
#[derive(Clone, Debug)]
pub struct CertificateFile {
    pub flavour: Flavour,
    pub certificate: Certificate,
    pub family: Option<StarFamily>,
}

/// `{"kind": "tangle" | "orientation" | "stree", ...}` with the checks that
/// were run and the family the certificate refers to.
pub fn certificate_to_json(
    cert: &Certificate,
    flavour: Flavour,
    transcript: &Transcript,
    family: &StarFamily,
    loaded: &Loaded,
) -> Value {
    let u = loaded.universe();
    let mut m = match cert {
        Certificate::Orientation(o) => {
            let mut m = serde_json::Map::new();
            let kind = if flavour == Flavour::Strong { "tangle" } else { "orientation" };
            m.insert("kind".into(), json!(kind));
            m.insert("picks".into(), json!(u.ids(o.picks())));
            m
        }
        Certificate::Tree(t) => {
            let mut m = serde_json::Map::new();
            m.insert("kind".into(), json!("stree"));
            m.insert("theorem".into(), json!(if flavour == Flavour::Strong { "strong" } else { "weak" }));
            m.extend(stree_fields(t, u));
            m
        }
    };
    m.insert("verified".into(), json!(transcript.all_passed()));
    m.insert("transcript".into(), json!(transcript));
    m.insert("family".into(), family_to_json(family, u));
    if let Some(d) = loaded.descriptions() {
        m.insert("separations".into(), json!(d));
    }
    Value::Object(m)
}

/// Reads a certificate, or a bare S-tree (taken as a strong certificate).
pub fn parse_certificate(text: &str, loaded: &Loaded) -> Result<CertificateFile> {
    let value: Value = serde_json::from_str(text)?;
    let u = loaded.universe();
    let family = match value.get("family") {
        Some(f) => {
            Some(family_from(&serde_json::from_value(f.clone())?, loaded)?)
        }
        None => None,
    };
    let kind = value.get("kind").and_then(Value::as_str);
    let (flavour, certificate) = match kind {
        Some(k @ ("tangle" | "orientation")) => {
            let picks: Vec<u64> = serde_json::from_value(value.get("picks").cloned().unwrap_or(Value::Null))?;
            let picks = picks.iter().map(|&id| u.sep_checked(id)).collect::<Result<Vec<_>>>()?;
            let flavour = if k == "tangle" { Flavour::Strong } else { Flavour::Weak };
            (flavour, Certificate::Orientation(Orientation::new(picks)))
        }
        Some("stree") | None => {
            let flavour = match value.get("theorem").and_then(Value::as_str) {
                Some("weak") => Flavour::Weak,
                _ => Flavour::Strong,
            };
            let raw: STreeJson = serde_json::from_value(value)?;
            (flavour, Certificate::Tree(stree_from(raw, u)?))
        }
        Some(other) => return Err(Error::Parse(format!("unknown certificate kind {other:?}"))),
    };
    Ok(CertificateFile { flavour, certificate, family })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::DEFAULT_MAX_CLOSURE;

    const CHAIN: &str = r#"{
        "elements": [0, 1, 2, 3],
        "inverse": {"0": 3, "1": 2},
        "leq": [[0,0],[1,1],[2,2],[3,3],[0,1],[0,2],[0,3],[1,3],[2,3]]
    }"#;

    #[test]
    fn abstract_universe_round_trip() {
        let l = parse_system(CHAIN, DEFAULT_MAX_CLOSURE).unwrap();
        assert_eq!(l.system.members().len(), 4);
        let text = universe_to_json(&l.system).to_string();
        let again = parse_system(&text, DEFAULT_MAX_CLOSURE).unwrap();
        assert_eq!(universe_to_json(&again.system), universe_to_json(&l.system));
    }

    #[test]
    fn set_input_and_family_objects() {
        let text = r#"{"V": ["a","b","c"], "separations": [{"A": ["a"], "B": ["b","c"]}]}"#;
        let l = parse_system(text, DEFAULT_MAX_CLOSURE).unwrap();
        assert!(l.sets.is_some());
        let f = parse_family(r#"{"stars": [[{"A": ["b","c"], "B": ["a"]}], []]}"#, &l).unwrap();
        assert_eq!(f.len(), 2);
        let bad = parse_family(r#"{"stars": [[{"A": ["a"], "B": ["a"]}]]}"#, &l);
        assert!(matches!(bad, Err(Error::Parse(_))));
    }

    #[test]
    fn stree_round_trip_and_errors() {
        let l = parse_system(CHAIN, DEFAULT_MAX_CLOSURE).unwrap();
        let u = l.universe();
        let t = STree::k2(u, Sep(1));
        let text = stree_to_json(&t, u).to_string();
        assert_eq!(parse_stree(&text, u).unwrap(), t);
        let missing = r#"{"nodes": [0, 1], "edges": [[0, 1]], "alpha": {"0->1": 1}}"#;
        assert!(matches!(parse_stree(missing, u), Err(Error::Parse(_))));
        let stray = r#"{"nodes": [0, 1], "edges": [], "alpha": {"0->1": 1}}"#;
        assert!(matches!(parse_stree(stray, u), Err(Error::Parse(_))));
        let unknown = r#"{"nodes": [0, 1], "edges": [[0, 1]], "alpha": {"0->1": 9, "1->0": 2}}"#;
        assert_eq!(parse_stree(unknown, u), Err(Error::UnknownId(9)));
    }

    #[test]
    fn certificate_round_trip() {
        let l = parse_system(CHAIN, DEFAULT_MAX_CLOSURE).unwrap();
        let u = l.universe();
        let f = StarFamily::new().with(Star::singleton(Sep(1))).with(Star::singleton(Sep(2)));
        let cert = Certificate::Tree(STree::k2(u, Sep(1)));
        let tr = crate::duality::verify_strong(&l.system, &f, &cert).unwrap();
        let v = certificate_to_json(&cert, Flavour::Strong, &tr, &f, &l);
        assert_eq!(v["kind"], "stree");
        assert_eq!(v["verified"], true);
        let back = parse_certificate(&v.to_string(), &l).unwrap();
        assert_eq!(back.certificate, cert);
        assert_eq!(back.family, Some(f));
        let o = Certificate::Orientation(Orientation::new([Sep(0), Sep(1)]));
        let v = certificate_to_json(&o, Flavour::Weak, &Transcript::default(), &StarFamily::new(), &l);
        assert_eq!(v["kind"], "orientation");
        let back = parse_certificate(&v.to_string(), &l).unwrap();
        assert_eq!((back.flavour, back.certificate), (Flavour::Weak, o));
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(parse_system("{", DEFAULT_MAX_CLOSURE), Err(Error::Parse(_))));
        let bad_key = r#"{"elements": [0], "inverse": {"x": 0}, "leq": [[0,0]]}"#;
        assert!(matches!(parse_system(bad_key, DEFAULT_MAX_CLOSURE), Err(Error::Parse(_))));
    }
}
