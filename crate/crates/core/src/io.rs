//! JSON interchange formats. Every top-level document carries `"schema": 1`;
//! readers accept documents without the field and reject other versions.
//!
//! Field elements are a bare integer over a prime field and a coefficient
//! array (low degree first) otherwise. Groups are either a full Cayley table
//! or, on input only, a name understood by [`FiniteGroup::named`].

use serde::{Deserialize, Serialize};

use crate::algebra::GradedAlgebra;
use crate::analysis::{AnalysisReport, Caveat};
use crate::cohomology::{Cocycle, CohomologyGroup, ExponentCocycle};
use crate::constructors::model_algebra;
use crate::error::{Error, Result};
use crate::field::linalg::{Matrix, Vector};
use crate::field::{Field, FieldElement};
use crate::group::{FiniteGroup, Subgroup};
use crate::recovery::GradedDecomposition;

pub const SCHEMA: u32 = 1;

fn check_schema(schema: Option<u32>) -> Result<()> {
    match schema {
        None | Some(SCHEMA) => Ok(()),
        Some(v) => Err(Error::Parse(format!("unsupported schema version {v}"))),
    }
}

fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn render<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementJson {
    Int(u64),
    Coeffs(Vec<u64>),
}

pub fn element_to_json(f: &Field, a: FieldElement) -> ElementJson {
    if f.k() == 1 {
        ElementJson::Int(a.index())
    } else {
        ElementJson::Coeffs(f.coeffs(a))
    }
}

pub fn element_from_json(f: &Field, e: &ElementJson) -> Result<FieldElement> {
    let coeffs = match e {
        ElementJson::Int(v) => std::slice::from_ref(v),
        ElementJson::Coeffs(c) => c.as_slice(),
    };
    if coeffs.len() > f.k() || coeffs.iter().any(|&c| c >= f.p()) {
        return Err(Error::Parse(format!("{e:?} is not an element of GF({}^{})", f.p(), f.k())));
    }
    f.from_coeffs(coeffs)
}

fn vector_to_json(f: &Field, v: &[FieldElement]) -> Vec<ElementJson> {
    v.iter().map(|&a| element_to_json(f, a)).collect()
}

fn vector_from_json(f: &Field, v: &[ElementJson]) -> Result<Vector> {
    v.iter().map(|e| element_from_json(f, e)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u64,
    #[serde(default = "one")]
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

fn one() -> usize {
    1
}

impl FieldJson {
    pub fn of(f: &Field) -> FieldJson {
        FieldJson { p: f.p(), k: f.k(), modulus: (f.k() > 1).then(|| f.modulus().to_vec()) }
    }

    pub fn build(&self) -> Result<Field> {
        Field::new(self.p, self.k, self.modulus.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupJson {
    Named(String),
    Table {
        order: usize,
        identity: usize,
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
}

impl GroupJson {
    pub fn of(g: &FiniteGroup) -> GroupJson {
        GroupJson::Table {
            order: g.order(),
            identity: g.identity(),
            table: g.table(),
            names: Some(g.names().to_vec()),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupJson::Named(name) => {
                FiniteGroup::named(name).ok_or_else(|| Error::Parse(format!("unknown group name {name:?}")))
            }
            GroupJson::Table { order, identity, table, names } => {
                if *order != table.len() {
                    return Err(Error::BadTable(format!("order {order} but {} rows", table.len())));
                }
                FiniteGroup::new(table.clone(), *identity, names.clone())
            }
        }
    }
}

/// A group element written as its index or its name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Name(String),
}

impl ElementRef {
    pub fn resolve(&self, g: &FiniteGroup) -> Result<usize> {
        match self {
            ElementRef::Index(i) if *i < g.order() => Ok(*i),
            ElementRef::Index(i) => Err(Error::Dimension(format!("{i} is not a group element"))),
            ElementRef::Name(s) => g
                .element_by_name(s)
                .or_else(|| s.parse().ok().filter(|&i| i < g.order()))
                .ok_or_else(|| Error::Parse(format!("no group element named {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CocycleJson {
    Exponents {
        m: u64,
        exponents: Vec<Vec<u64>>,
    },
    Values {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        group: Option<GroupJson>,
        values: Vec<Vec<ElementJson>>,
    },
}

impl CocycleJson {
    /// Value form, without the group (the context always supplies it).
    pub fn of(c: &Cocycle) -> CocycleJson {
        let f = c.field();
        CocycleJson::Values { group: None, values: c.rows().iter().map(|r| vector_to_json(f, r)).collect() }
    }

    /// `group` is the group the cocycle must live on when the document does
    /// not name one.
    pub fn build(&self, f: &Field, group: Option<&FiniteGroup>) -> Result<Cocycle> {
        match self {
            CocycleJson::Exponents { m, exponents } => {
                let g = group.ok_or_else(|| Error::Parse("exponent cocycle needs a group".into()))?;
                Cocycle::from_exponents(f, g, &ExponentCocycle::new(g, *m, exponents)?)
            }
            CocycleJson::Values { group: own, values } => {
                let own = own.as_ref().map(GroupJson::build).transpose()?;
                let g = match (own.as_ref(), group) {
                    (Some(a), Some(b)) if a.table() != b.table() => {
                        return Err(Error::Dimension("cocycle group differs from its context".into()))
                    }
                    (Some(a), _) => a,
                    (None, Some(b)) => b,
                    (None, None) => return Err(Error::Parse("cocycle needs a group".into())),
                };
                let rows = values.iter().map(|r| vector_from_json(f, r)).collect::<Result<Vec<_>>>()?;
                Cocycle::check(f, g, &rows)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(default)]
    pub schema: Option<u32>,
    pub field: FieldJson,
    pub group: GroupJson,
    pub dim: usize,
    pub degrees: Vec<usize>,
    /// `[i, j, k, c]` for `b_i b_j ∋ c b_k`.
    pub structure: Vec<(usize, usize, usize, ElementJson)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<ElementJson>>,
}

impl AlgebraJson {
    pub fn of(r: &GradedAlgebra) -> AlgebraJson {
        let f = r.field();
        AlgebraJson {
            schema: Some(SCHEMA),
            field: FieldJson::of(f),
            group: GroupJson::of(r.group()),
            dim: r.dim(),
            degrees: r.degrees().to_vec(),
            structure: r.structure().into_iter().map(|(i, j, k, c)| (i, j, k, element_to_json(f, c))).collect(),
            unit: r.unit().map(|u| vector_to_json(f, u)),
        }
    }

    pub fn build(&self) -> Result<GradedAlgebra> {
        check_schema(self.schema)?;
        let f = self.field.build()?;
        let g = self.group.build()?;
        if self.dim != self.degrees.len() {
            return Err(Error::Dimension(format!("dim {} but {} degrees", self.dim, self.degrees.len())));
        }
        let structure = self
            .structure
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, element_from_json(&f, c)?)))
            .collect::<Result<Vec<_>>>()?;
        let unit = self.unit.as_ref().map(|u| vector_from_json(&f, u)).transpose()?;
        GradedAlgebra::new(&f, &g, self.degrees.clone(), &structure, unit)
    }
}

pub fn algebra_from_str(text: &str) -> Result<GradedAlgebra> {
    parse::<AlgebraJson>(text)?.build()
}

pub fn algebra_to_string(r: &GradedAlgebra) -> String {
    render(&AlgebraJson::of(r))
}

/// Input of the `construct` command: the data of `M_k(F^σ[H])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpecJson {
    #[serde(default)]
    pub schema: Option<u32>,
    pub field: FieldJson,
    pub group: GroupJson,
    /// Optional; must equal the tuple length when present.
    #[serde(default)]
    pub k: Option<usize>,
    pub tuple: Vec<ElementRef>,
    /// Members of `H`; the trivial subgroup when absent.
    #[serde(default)]
    pub subgroup: Option<Vec<ElementRef>>,
    /// On `H`, indexed by position within `H`; trivial when absent.
    #[serde(default)]
    pub cocycle: Option<CocycleJson>,
}

impl ModelSpecJson {
    pub fn build(&self) -> Result<GradedAlgebra> {
        check_schema(self.schema)?;
        let f = self.field.build()?;
        let g = self.group.build()?;
        let tuple = self.tuple.iter().map(|x| x.resolve(&g)).collect::<Result<Vec<_>>>()?;
        if let Some(k) = self.k {
            if k != tuple.len() {
                return Err(Error::Dimension(format!("k = {k} but the tuple has {} entries", tuple.len())));
            }
        }
        let h = match &self.subgroup {
            None => Subgroup::trivial(&g),
            Some(m) => Subgroup::from_members(&g, &m.iter().map(|x| x.resolve(&g)).collect::<Result<Vec<_>>>()?)?,
        };
        let hg = h.as_group(&g);
        let sigma = match &self.cocycle {
            None => Cocycle::trivial(&f, &hg),
            Some(c) => c.build(&f, Some(&hg))?,
        };
        model_algebra(&f, &g, &tuple, &h, &sigma)
    }
}

pub fn model_spec_from_str(text: &str) -> Result<ModelSpecJson> {
    parse(text)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    #[serde(default)]
    pub schema: Option<u32>,
    pub k: usize,
    pub tuple: Vec<usize>,
    #[serde(rename = "H")]
    pub subgroup: Vec<usize>,
    pub sigma: CocycleJson,
    pub iso: Vec<Vec<ElementJson>>,
}

impl DecompositionJson {
    pub fn of(f: &Field, d: &GradedDecomposition) -> DecompositionJson {
        DecompositionJson {
            schema: Some(SCHEMA),
            k: d.k,
            tuple: d.tuple.clone(),
            subgroup: d.subgroup.members().to_vec(),
            sigma: CocycleJson::of(&d.sigma),
            iso: d.iso.to_rows().iter().map(|r| vector_to_json(f, r)).collect(),
        }
    }

    /// Field and group come from the algebra the decomposition describes.
    pub fn build(&self, f: &Field, g: &FiniteGroup) -> Result<GradedDecomposition> {
        check_schema(self.schema)?;
        if let Some(&x) = self.tuple.iter().find(|&&x| x >= g.order()) {
            return Err(Error::Dimension(format!("tuple entry {x} is not a group element")));
        }
        let subgroup = Subgroup::from_members(g, &self.subgroup)?;
        let sigma = self.sigma.build(f, Some(&subgroup.as_group(g)))?;
        let rows = self.iso.iter().map(|r| vector_from_json(f, r)).collect::<Result<Vec<_>>>()?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("iso must be square".into()));
        }
        let iso = if n == 0 { Matrix::zeros(0, 0) } else { Matrix::from_rows(&rows) };
        Ok(GradedDecomposition { k: self.k, tuple: self.tuple.clone(), subgroup, sigma, iso })
    }
}

pub fn decomposition_from_str(text: &str, f: &Field, g: &FiniteGroup) -> Result<GradedDecomposition> {
    parse::<DecompositionJson>(text)?.build(f, g)
}

pub fn decomposition_to_string(f: &Field, d: &GradedDecomposition) -> String {
    render(&DecompositionJson::of(f, d))
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    pub schema: u32,
    pub dim: usize,
    pub support: Vec<usize>,
    pub unit: Option<Vec<ElementJson>>,
    pub graded_simple: bool,
    /// Basis of a proper nonzero graded ideal when one exists.
    pub witness: Option<Vec<Vec<ElementJson>>>,
    pub graded_division: bool,
    pub radical_dim: Option<usize>,
    pub radical_graded: Option<bool>,
    pub identity_summands: Option<Vec<usize>>,
    pub center_dim: usize,
    pub simple: Option<bool>,
    pub caveats: Vec<Caveat>,
}

impl ReportJson {
    pub fn of(f: &Field, r: &AnalysisReport) -> ReportJson {
        ReportJson {
            schema: SCHEMA,
            dim: r.dim,
            support: r.support.clone(),
            unit: r.unit.as_ref().map(|u| vector_to_json(f, u)),
            graded_simple: r.graded_simple,
            witness: r.witness.as_ref().map(|w| w.subspace().basis().iter().map(|v| vector_to_json(f, v)).collect()),
            graded_division: r.graded_division,
            radical_dim: r.radical_dim,
            radical_graded: r.radical_graded,
            identity_summands: r.identity_summands.clone(),
            center_dim: r.center_dim,
            simple: r.simple,
            caveats: r.caveats.clone(),
        }
    }
}

pub fn report_to_string(f: &Field, r: &AnalysisReport) -> String {
    render(&ReportJson::of(f, r))
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyJson {
    pub schema: u32,
    pub group_order: usize,
    pub m: u64,
    pub invariant_factors: Vec<u64>,
    pub order: u64,
    /// Exponent tables generating each invariant factor.
    pub representatives: Vec<Vec<Vec<u64>>>,
}

impl CohomologyJson {
    pub fn of(group: &FiniteGroup, c: &CohomologyGroup) -> CohomologyJson {
        CohomologyJson {
            schema: SCHEMA,
            group_order: group.order(),
            m: c.m,
            invariant_factors: c.invariant_factors.clone(),
            order: c.order(),
            representatives: c.representatives.iter().map(ExponentCocycle::rows).collect(),
        }
    }
}

pub fn cohomology_to_string(group: &FiniteGroup, c: &CohomologyGroup) -> String {
    render(&CohomologyJson::of(group, c))
}

pub fn to_pretty<T: Serialize>(doc: &T) -> String {
    render(doc)
}
