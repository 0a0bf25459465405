//! Wire formats: JSON schemas for categories, simplicial sets, actions, and
//! coarse spaces, plus DOT export of underlying graphs.  Ids are dense
//! integers in every format.

use crate::controlled::{BornCoarseSpace, Bornology, GCoarseSpace};
use crate::equivariant::{FinGroup, GAction};
use crate::fincat::{FinCategory, Functor, RawCategory};
use crate::gtensor::FiniteSimplicialSet;
use crate::scalar::Scalar;
use crate::star::{LinElem, LinearStarCategory, MarkedStarCategory};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("json: {0}")]
    Json(String),
    #[error("field {field}: {message}")]
    Field { field: &'static str, message: String },
    #[error("ids must be dense integers 0..{expected}, found {found} in {field}")]
    NotDense { field: &'static str, expected: usize, found: usize },
    #[error("validation: {0}")]
    Validation(String),
}

fn dense(field: &'static str, ids: &[usize]) -> Result<(), ParseError> {
    for (k, &id) in ids.iter().enumerate() {
        if id != k {
            return Err(ParseError::NotDense { field, expected: ids.len(), found: id });
        }
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MorphismJson {
    pub id: usize,
    pub src: usize,
    pub tgt: usize,
}

/// The category wire format, with optional star and marking extension and
/// optional linear tables.
#[derive(Debug, Serialize, Deserialize)]
pub struct CategoryJson {
    pub objects: Vec<usize>,
    pub morphisms: Vec<MorphismJson>,
    pub identity: BTreeMap<String, usize>,
    pub compose: Vec<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star: Option<BTreeMap<String, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub marked: Option<Vec<usize>>,
}

pub fn category_to_json(cat: &FinCategory) -> CategoryJson {
    let raw = cat.to_raw();
    CategoryJson {
        objects: (0..raw.objects).collect(),
        morphisms: raw
            .morphisms
            .iter()
            .enumerate()
            .map(|(id, &(src, tgt))| MorphismJson { id, src, tgt })
            .collect(),
        identity: raw.identity.iter().enumerate().map(|(o, &m)| (o.to_string(), m)).collect(),
        compose: raw.compose.iter().map(|&(g, f, gf)| [g, f, gf]).collect(),
        star: None,
        marked: None,
    }
}

pub fn marked_star_to_json(cat: &MarkedStarCategory) -> CategoryJson {
    let mut j = category_to_json(cat.base());
    j.star = Some(
        cat.star_table().iter().enumerate().map(|(f, &g)| (f.to_string(), g)).collect(),
    );
    j.marked = Some(cat.marked().iter().copied().collect());
    j
}

pub fn category_from_json(j: &CategoryJson) -> Result<FinCategory, ParseError> {
    dense("objects", &j.objects)?;
    let ids: Vec<usize> = j.morphisms.iter().map(|m| m.id).collect();
    dense("morphisms", &ids)?;
    let mut identity = vec![usize::MAX; j.objects.len()];
    for (k, &m) in &j.identity {
        let o: usize = k
            .parse()
            .map_err(|_| ParseError::Field { field: "identity", message: format!("bad key {k}") })?;
        if o >= identity.len() {
            return Err(ParseError::Field { field: "identity", message: format!("object {o}") });
        }
        identity[o] = m;
    }
    if identity.contains(&usize::MAX) {
        return Err(ParseError::Field { field: "identity", message: "missing entries".into() });
    }
    let raw = RawCategory {
        objects: j.objects.len(),
        morphisms: j.morphisms.iter().map(|m| (m.src, m.tgt)).collect(),
        identity,
        compose: j.compose.iter().map(|&[g, f, gf]| (g, f, gf)).collect(),
    };
    FinCategory::validate(&raw).map_err(|e| ParseError::Validation(e.to_string()))
}

pub fn marked_star_from_json(j: &CategoryJson) -> Result<MarkedStarCategory, ParseError> {
    let base = category_from_json(j)?;
    let star_map = j.star.as_ref().ok_or(ParseError::Field {
        field: "star",
        message: "missing star table for a *-category".into(),
    })?;
    let mut star = vec![usize::MAX; base.mor_count()];
    for (k, &g) in star_map {
        let f: usize = k
            .parse()
            .map_err(|_| ParseError::Field { field: "star", message: format!("bad key {k}") })?;
        if f >= star.len() {
            return Err(ParseError::Field { field: "star", message: format!("morphism {f}") });
        }
        star[f] = g;
    }
    if star.contains(&usize::MAX) {
        return Err(ParseError::Field { field: "star", message: "missing entries".into() });
    }
    let marked: BTreeSet<usize> = match &j.marked {
        Some(v) => v.iter().copied().collect(),
        None => base.objects().map(|a| base.id(a)).collect(),
    };
    MarkedStarCategory::validate(base, star, marked)
        .map_err(|e| ParseError::Validation(e.to_string()))
}

/// Linear category wire format.  Coefficients are strings `a/b+c/d*i`.
#[derive(Debug, Serialize, Deserialize)]
pub struct LinearCategoryJson {
    pub objects: Vec<usize>,
    pub scalars: String,
    /// `hom_bases[a][b]` = dim Hom(a, b).
    pub hom_bases: Vec<Vec<usize>>,
    /// Entries `[a, b, c, j, i]` with the coefficient vector of e_j ∘ e_i.
    pub compose_bilinear: Vec<(usize, usize, usize, usize, usize, Vec<String>)>,
    /// Entries `[a, b, i]` with the coefficient vector of (e_i)*.
    pub star_antilinear: Vec<(usize, usize, usize, Vec<String>)>,
    pub identity: Vec<Vec<String>>,
    pub marked: Vec<LinElemJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LinElemJson {
    pub src: usize,
    pub tgt: usize,
    pub coeffs: Vec<String>,
}

fn scalars_to_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn scalars_from_strings(v: &[String]) -> Result<Vec<Scalar>, ParseError> {
    v.iter()
        .map(|s| Scalar::parse(s).map_err(|e| ParseError::Validation(e.to_string())))
        .collect()
}

pub fn linear_to_json(cat: &LinearStarCategory) -> LinearCategoryJson {
    let n = cat.ob_count();
    let (dims, compose, identity, star) = cat.tables();
    let mut compose_bilinear = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for (j, row) in compose[a][b][c].iter().enumerate() {
                    for (i, v) in row.iter().enumerate() {
                        compose_bilinear.push((a, b, c, j, i, scalars_to_strings(v)));
                    }
                }
            }
        }
    }
    let mut star_antilinear = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for (i, v) in star[a][b].iter().enumerate() {
                star_antilinear.push((a, b, i, scalars_to_strings(v)));
            }
        }
    }
    LinearCategoryJson {
        objects: (0..n).collect(),
        scalars: "gaussian-rational".into(),
        hom_bases: dims.clone(),
        compose_bilinear,
        star_antilinear,
        identity: identity.iter().map(|v| scalars_to_strings(v)).collect(),
        marked: cat
            .marked()
            .iter()
            .map(|m| LinElemJson {
                src: m.src,
                tgt: m.tgt,
                coeffs: scalars_to_strings(&m.coeffs),
            })
            .collect(),
    }
}

pub fn linear_from_json(j: &LinearCategoryJson) -> Result<LinearStarCategory, ParseError> {
    if j.scalars != "gaussian-rational" {
        return Err(ParseError::Field {
            field: "scalars",
            message: format!("unsupported scalar field {:?}", j.scalars),
        });
    }
    let n = j.objects.len();
    dense("objects", &j.objects)?;
    let dims = j.hom_bases.clone();
    if dims.len() != n || dims.iter().any(|r| r.len() != n) {
        return Err(ParseError::Field { field: "hom_bases", message: "wrong shape".into() });
    }
    let mut compose =
        vec![vec![vec![Vec::new(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                compose[a][b][c] =
                    vec![vec![crate::linalg::zero_vec(dims[a][c]); dims[a][b]]; dims[b][c]];
            }
        }
    }
    for (a, b, c, jj, ii, coeffs) in &j.compose_bilinear {
        compose[*a][*b][*c][*jj][*ii] = scalars_from_strings(coeffs)?;
    }
    let mut star = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in 0..n {
            star[a][b] = vec![crate::linalg::zero_vec(dims[b][a]); dims[a][b]];
        }
    }
    for (a, b, i, coeffs) in &j.star_antilinear {
        star[*a][*b][*i] = scalars_from_strings(coeffs)?;
    }
    let identity: Result<Vec<_>, _> = j.identity.iter().map(|v| scalars_from_strings(v)).collect();
    let marked: Result<Vec<LinElem>, ParseError> = j
        .marked
        .iter()
        .map(|m| {
            Ok(LinElem { src: m.src, tgt: m.tgt, coeffs: scalars_from_strings(&m.coeffs)? })
        })
        .collect();
    LinearStarCategory::validate(n, dims, compose, identity?, star, marked?)
        .map_err(|e| ParseError::Validation(e.to_string()))
}

/// Simplicial set format: s0 lists vertices, s1 edges (d1 = source,
/// d0 = target), s2 triangles by edge ids.
#[derive(Debug, Serialize, Deserialize)]
pub struct SimplicialJson {
    pub s0: Vec<usize>,
    pub s1: Vec<EdgeJson>,
    pub s2: Vec<TriangleJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: usize,
    pub d0: usize,
    pub d1: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TriangleJson {
    pub id: usize,
    pub d0: usize,
    pub d1: usize,
    pub d2: usize,
}

pub fn simplicial_from_json(j: &SimplicialJson) -> Result<FiniteSimplicialSet, ParseError> {
    dense("s0", &j.s0)?;
    let ids: Vec<usize> = j.s1.iter().map(|e| e.id).collect();
    dense("s1", &ids)?;
    let tids: Vec<usize> = j.s2.iter().map(|t| t.id).collect();
    dense("s2", &tids)?;
    let k = FiniteSimplicialSet {
        vertices: j.s0.len(),
        edges: j.s1.iter().map(|e| (e.d1, e.d0)).collect(),
        triangles: j.s2.iter().map(|t| (t.d0, t.d1, t.d2)).collect(),
    };
    k.validate().map_err(|e| ParseError::Validation(e.to_string()))?;
    Ok(k)
}

/// Group + action wire format.
#[derive(Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub elements: Vec<usize>,
    pub mult: Vec<Vec<usize>>,
    pub unit: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ActionJson {
    pub group: GroupJson,
    pub on_objects: BTreeMap<String, BTreeMap<String, usize>>,
    pub on_morphisms: BTreeMap<String, BTreeMap<String, usize>>,
}

pub fn group_from_json(j: &GroupJson) -> Result<FinGroup, ParseError> {
    dense("elements", &j.elements)?;
    FinGroup::validate(j.mult.clone(), j.unit).map_err(|e| ParseError::Validation(e.to_string()))
}

pub fn action_from_json(
    j: &ActionJson,
    base: &MarkedStarCategory,
) -> Result<GAction, ParseError> {
    let group = group_from_json(&j.group)?;
    let n = group.order();
    let mut on = Vec::with_capacity(n);
    for g in 0..n {
        let key = g.to_string();
        let objs = j.on_objects.get(&key).ok_or(ParseError::Field {
            field: "on_objects",
            message: format!("missing element {g}"),
        })?;
        let mors = j.on_morphisms.get(&key).ok_or(ParseError::Field {
            field: "on_morphisms",
            message: format!("missing element {g}"),
        })?;
        let mut obj = vec![usize::MAX; base.base().ob_count()];
        for (k, &v) in objs {
            let o: usize = k.parse().map_err(|_| ParseError::Field {
                field: "on_objects",
                message: format!("bad key {k}"),
            })?;
            obj[o] = v;
        }
        let mut mor = vec![usize::MAX; base.base().mor_count()];
        for (k, &v) in mors {
            let m: usize = k.parse().map_err(|_| ParseError::Field {
                field: "on_morphisms",
                message: format!("bad key {k}"),
            })?;
            mor[m] = v;
        }
        if obj.contains(&usize::MAX) || mor.contains(&usize::MAX) {
            return Err(ParseError::Field {
                field: "on_objects",
                message: format!("incomplete tables for element {g}"),
            });
        }
        on.push(Functor { obj, mor });
    }
    GAction::validate(group, base.clone(), on).map_err(|e| ParseError::Validation(e.to_string()))
}

/// Coarse space wire format.
#[derive(Debug, Serialize, Deserialize)]
pub struct SpaceJson {
    pub points: Vec<usize>,
    pub entourage_generators: Vec<[usize; 2]>,
    pub bornology: BornologyJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_action: Option<SpaceActionJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BornologyJson {
    All(String),
    Sets(Vec<Vec<usize>>),
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SpaceActionJson {
    pub group: GroupJson,
    pub on_points: BTreeMap<String, Vec<usize>>,
}

pub fn space_from_json(j: &SpaceJson) -> Result<BornCoarseSpace, ParseError> {
    dense("points", &j.points)?;
    let bornology = match &j.bornology {
        BornologyJson::All(s) if s == "all" => Bornology::All,
        BornologyJson::All(s) => {
            return Err(ParseError::Field {
                field: "bornology",
                message: format!("expected \"all\" or sets, got {s:?}"),
            })
        }
        BornologyJson::Sets(sets) => {
            Bornology::Generated(sets.iter().map(|s| s.iter().copied().collect()).collect())
        }
    };
    let gens: Vec<(usize, usize)> =
        j.entourage_generators.iter().map(|&[p, q]| (p, q)).collect();
    BornCoarseSpace::validate(j.points.len(), &gens, bornology)
        .map_err(|e| ParseError::Validation(e.to_string()))
}

pub fn g_space_from_json(j: &SpaceJson) -> Result<Option<GCoarseSpace>, ParseError> {
    let Some(aj) = &j.group_action else { return Ok(None) };
    let space = space_from_json(j)?;
    let group = group_from_json(&aj.group)?;
    let mut action = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let perm = aj.on_points.get(&g.to_string()).ok_or(ParseError::Field {
            field: "group_action",
            message: format!("missing element {g}"),
        })?;
        action.push(perm.clone());
    }
    GCoarseSpace::validate(space, group, action)
        .map(Some)
        .map_err(|e| ParseError::Validation(e.to_string()))
}

/// DOT export of the underlying graph: objects as nodes, non-identity
/// morphisms as labeled edges.
pub fn to_dot(cat: &FinCategory, name: &str) -> String {
    let mut out = format!("digraph {name} {{\n");
    for o in cat.objects() {
        out.push_str(&format!("  o{o} [label=\"{o}\"];\n"));
    }
    for m in cat.morphisms() {
        if cat.is_identity(m) {
            continue;
        }
        out.push_str(&format!("  o{} -> o{} [label=\"{m}\"];\n", cat.src(m), cat.tgt(m)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::{classifier, ClassifierKind};

    #[test]
    fn category_round_trip() {
        let one = classifier(ClassifierKind::MarkedUnitary);
        let j = marked_star_to_json(&one);
        let text = serde_json::to_string(&j).unwrap();
        let back: CategoryJson = serde_json::from_str(&text).unwrap();
        let cat = marked_star_from_json(&back).unwrap();
        assert_eq!(&cat, &one);
    }

    #[test]
    fn linear_round_trip() {
        let lin = crate::star::linearize(&classifier(ClassifierKind::MarkedUnitary)).cat;
        let j = linear_to_json(&lin);
        let text = serde_json::to_string(&j).unwrap();
        let back: LinearCategoryJson = serde_json::from_str(&text).unwrap();
        let cat = linear_from_json(&back).unwrap();
        assert_eq!(cat, lin);
    }

    #[test]
    fn bad_tables_are_rejected() {
        let one = classifier(ClassifierKind::MarkedUnitary);
        let mut j = marked_star_to_json(&one);
        j.compose.retain(|&[g, f, _]| !(g == 2 && f == 1));
        assert!(marked_star_from_json(&j).is_err());
        let mut j2 = marked_star_to_json(&one);
        j2.marked = Some(vec![0, 1, 2]);
        // {id₀, id₁, u} is not star-closed.
        assert!(marked_star_from_json(&j2).is_err());
    }

    #[test]
    fn dot_export_mentions_edges() {
        let one = classifier(ClassifierKind::Unitary);
        let dot = to_dot(one.base(), "one");
        assert!(dot.contains("o0 -> o1"));
    }

    #[test]
    fn space_parsing() {
        let text = r#"{"points":[0,1],"entourage_generators":[[0,1]],"bornology":"all"}"#;
        let j: SpaceJson = serde_json::from_str(text).unwrap();
        let s = space_from_json(&j).unwrap();
        assert_eq!(s.max_entourage.pairs.len(), 4);
    }
}
