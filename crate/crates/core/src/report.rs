//! JSON documents emitted by the command-line tool. Field elements, forms
//! and matrices are written in the textual formats accepted by the parsers.

use serde::Serialize;

use crate::construct::Synthesis;
use crate::error::{Error, Result};
use crate::factor::{IrreducibilityCertificate, Status};
use crate::field::{Elem, FieldSpec};
use crate::forms::HomogeneousForm;
use crate::group::{GroupStructure, MatrixGroup};
use crate::lift::{ConditionsReport, LiftResult};
use crate::ramify::{Component, Normality, RamificationReport, Verdict};
use crate::verify::GaloisPointReport;

pub const SCHEMA: u32 = 1;

pub fn format_point(f: &FieldSpec, v: &[Elem]) -> String {
    v.iter().map(|&e| f.format(e)).collect::<Vec<_>>().join(",")
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema: u32,
    pub command: &'static str,
    #[serde(flatten)]
    pub body: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &'static str, body: T) -> Self {
        Envelope { schema: SCHEMA, command, body }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Serialize)]
struct ErrorBody {
    code: &'static str,
    message: String,
    exit_code: i32,
}

/// `{"schema":1,"error":{...}}`.
pub fn error_json(e: &Error) -> String {
    #[derive(Serialize)]
    struct Doc {
        schema: u32,
        error: ErrorBody,
    }
    let doc = Doc { schema: SCHEMA, error: ErrorBody { code: e.code(), message: e.to_string(), exit_code: e.exit_code() } };
    serde_json::to_string_pretty(&doc).expect("error serializes")
}

#[derive(Serialize)]
pub struct StructureJson {
    pub p: u64,
    pub u: u32,
    pub l: u64,
    pub order: usize,
    pub divisibility_holds: bool,
    pub sylow_generators: Vec<String>,
    pub complement_generator: String,
}

impl From<&GroupStructure> for StructureJson {
    fn from(s: &GroupStructure) -> Self {
        StructureJson {
            p: s.p,
            u: s.u,
            l: s.l,
            order: s.order,
            divisibility_holds: s.divisibility_holds,
            sylow_generators: strings(&s.sylow_generators),
            complement_generator: s.complement_generator.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct GroupJson {
    pub field: String,
    pub order: usize,
    pub generators: Vec<String>,
}

impl From<&MatrixGroup> for GroupJson {
    fn from(g: &MatrixGroup) -> Self {
        GroupJson { field: g.field().to_string(), order: g.order(), generators: strings(&g.minimal_generators()) }
    }
}

#[derive(Serialize)]
pub struct IrreducibilityJson {
    pub base: Status,
    pub absolute: Status,
    pub levels: Vec<(u32, Status)>,
    pub checked_up_to: u32,
}

impl From<&IrreducibilityCertificate> for IrreducibilityJson {
    fn from(c: &IrreducibilityCertificate) -> Self {
        IrreducibilityJson { base: c.base, absolute: c.absolute, levels: c.levels.clone(), checked_up_to: c.checked_up_to }
    }
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub field: String,
    pub form: String,
    pub point: String,
    pub degree: u32,
    pub multiplicity: u32,
    pub projection_degree: u32,
    pub transform: String,
    pub normalized_form: String,
    pub group: GroupJson,
    pub generators_original: Vec<String>,
    pub structure: Option<StructureJson>,
    pub is_galois: bool,
    pub is_extendable_witnessed: bool,
    pub is_wild: bool,
    pub is_inner: bool,
    pub is_outer: bool,
    pub nontrivial_scalars: bool,
    pub extension_level: u32,
    pub verified_up_to: u32,
    pub level_orders: Vec<(u32, usize)>,
    pub irreducibility: IrreducibilityJson,
}

impl VerifyJson {
    pub fn new(form: &HomogeneousForm, r: &GaloisPointReport) -> Result<Self> {
        Ok(VerifyJson {
            field: r.field.to_string(),
            form: form.to_string(),
            point: format_point(&r.field, &r.point),
            degree: r.degree,
            multiplicity: r.multiplicity,
            projection_degree: r.projection_degree,
            transform: r.transform.to_string(),
            normalized_form: r.normalized_form.to_string(),
            group: (&r.group).into(),
            generators_original: strings(&r.original_generators()?),
            structure: r.structure.as_ref().map(Into::into),
            is_galois: r.is_galois,
            is_extendable_witnessed: r.is_extendable_witnessed,
            is_wild: r.is_wild,
            is_inner: r.is_inner,
            is_outer: r.is_outer,
            nontrivial_scalars: r.nontrivial_scalars,
            extension_level: r.extension_level,
            verified_up_to: r.verified_up_to,
            level_orders: r.level_orders.clone(),
            irreducibility: (&r.irreducibility).into(),
        })
    }
}

#[derive(Serialize)]
pub struct ConstructParams {
    pub p: u64,
    pub u: u32,
    pub l: u64,
    pub n: usize,
    pub m: u32,
    pub seed: u64,
    pub s_max: u32,
}

#[derive(Serialize)]
pub struct ConstructJson {
    pub params: ConstructParams,
    pub field: String,
    pub level: u32,
    pub degree: u32,
    pub multiplicity: u32,
    pub form: String,
    pub point: String,
    pub branch: &'static str,
    pub group: GroupJson,
    pub structure: StructureJson,
    pub transform: String,
    pub normalized_form: String,
    pub normalized_group: GroupJson,
    pub orbit_product: String,
    pub a_form: String,
    pub b_form: String,
    pub points: Vec<String>,
    pub attempts: u32,
    pub irreducibility: IrreducibilityJson,
    pub irreducibility_source: &'static str,
    pub wild: bool,
    pub verification: VerifyJson,
}

impl ConstructJson {
    pub fn new(params: ConstructParams, s: &Synthesis, verification: VerifyJson) -> Self {
        let f = &s.field;
        ConstructJson {
            params,
            field: f.to_string(),
            level: s.level,
            degree: s.degree,
            multiplicity: s.multiplicity,
            form: s.form.to_string(),
            point: format_point(f, &s.point),
            branch: s.branch.name(),
            group: (&s.group).into(),
            structure: (&s.structure).into(),
            transform: s.transform.to_string(),
            normalized_form: s.normalized_form.to_string(),
            normalized_group: (&s.normalized_group).into(),
            orbit_product: s.orbit_product.to_string(),
            a_form: s.a_form.to_string(),
            b_form: s.b_form.to_string(),
            points: s.points.iter().map(|&(a, b)| format_point(f, &[a, b])).collect(),
            attempts: s.attempts,
            irreducibility: (&s.irreducibility).into(),
            irreducibility_source: s.irreducibility_source,
            wild: verification.is_wild,
            verification,
        }
    }
}

#[derive(Serialize)]
pub struct ConditionsJson {
    pub cond_i: bool,
    pub cond_ii: bool,
    pub common_line: Option<Vec<String>>,
    pub witnesses: Vec<String>,
}

impl From<&ConditionsReport> for ConditionsJson {
    fn from(c: &ConditionsReport) -> Self {
        ConditionsJson {
            cond_i: c.cond_i,
            cond_ii: c.cond_ii,
            common_line: c.common_line.as_ref().map(|l| l.format()),
            witnesses: strings(&c.witnesses),
        }
    }
}

#[derive(Serialize)]
pub struct LiftJson {
    pub field: String,
    pub projective_order: usize,
    pub level: u32,
    pub lift_field: String,
    pub lifted_group: GroupJson,
    pub structure: Option<StructureJson>,
    /// `[class representative, lift]` pairs.
    pub section: Vec<(String, String)>,
    pub conditions: ConditionsJson,
}

impl LiftJson {
    pub fn new(base: &FieldSpec, lift: &LiftResult, structure: Option<&GroupStructure>, conditions: &ConditionsReport) -> Self {
        LiftJson {
            field: base.to_string(),
            projective_order: lift.section.len(),
            level: lift.level,
            lift_field: lift.field().to_string(),
            lifted_group: (&lift.lifted_group).into(),
            structure: structure.map(Into::into),
            section: lift.section.iter().map(|(c, m)| (c.rep().to_string(), m.to_string())).collect(),
            conditions: conditions.into(),
        }
    }
}

#[derive(Serialize)]
pub struct ComponentJson {
    pub kind: &'static str,
    /// Point coordinates, or the defining form in the kept coordinates.
    pub value: String,
    pub degree: u32,
    pub multiplicity: u32,
    pub stabilizer_order: Option<usize>,
    pub wild: Option<bool>,
}

fn component_json(f: &FieldSpec, c: &Component) -> ComponentJson {
    let (kind, value) = match c {
        Component::Point { point, .. } => ("point", format_point(f, point)),
        Component::Factor { form, .. } => ("factor", form.to_string()),
        Component::Unsplit { form, .. } => {
            let coeffs: Vec<String> = form.coeffs.iter().map(|&e| f.format(e)).collect();
            ("unsplit", coeffs.join(","))
        }
        Component::Unfactored { form } => ("unfactored", form.to_string()),
    };
    ComponentJson { kind, value, degree: c.degree(), multiplicity: c.multiplicity(), stabilizer_order: None, wild: None }
}

#[derive(Serialize)]
pub struct ElementJson {
    pub element: String,
    pub hyperplane: String,
    pub section_field: String,
    pub section_level: u32,
    /// Variables of the restriction, as original indices.
    pub kept_variables: Vec<usize>,
    pub restriction: String,
    pub unfactored: bool,
    pub components: Vec<ComponentJson>,
}

#[derive(Serialize)]
pub struct RamifyJson {
    pub p: u32,
    pub normality: Normality,
    pub verdict: Verdict,
    pub elements: Vec<ElementJson>,
    pub verification: VerifyJson,
}

impl RamifyJson {
    pub fn new(r: &RamificationReport, verification: VerifyJson) -> Self {
        let elements = r
            .elements
            .iter()
            .map(|e| {
                let f = &e.section.field;
                let components = if e.divisors.is_empty() {
                    e.section.components.iter().map(|c| component_json(f, c)).collect()
                } else {
                    e.divisors
                        .iter()
                        .map(|d| ComponentJson { stabilizer_order: Some(d.stabilizer_order), wild: Some(d.wild), ..component_json(f, &d.component) })
                        .collect()
                };
                ElementJson {
                    element: e.element.to_string(),
                    hyperplane: HomogeneousForm::linear(e.element.field(), &e.hyperplane).to_string(),
                    section_field: f.to_string(),
                    section_level: e.section.level,
                    kept_variables: e.section.restriction.kept.clone(),
                    restriction: e.section.restriction.form.to_string(),
                    unfactored: e.section.unfactored,
                    components,
                }
            })
            .collect();
        RamifyJson { p: r.p, normality: r.normality, verdict: r.verdict, elements, verification }
    }
}

#[derive(Serialize)]
pub struct FixtureJson {
    pub name: String,
    pub field: String,
    pub form: String,
}
