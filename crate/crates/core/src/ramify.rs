//! Wild ramification along the fixed hyperplanes of order-p elements.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::factor;
use crate::field::{Elem, FieldSpec};
use crate::forms::{restrict_to_hyperplane, singular_points_curve, HomogeneousForm, Restriction};
use crate::group::MatrixGroup;
use crate::linalg::{fixed_locus, Matrix};
use crate::upoly::UPoly;

/// Coefficients of `sum_{i>=1} a_{0i} X_i`, the hyperplane fixed pointwise
/// by a unipotent element of UT(*,I).
pub fn fixed_hyperplane(g: &Matrix) -> Result<Vec<Elem>> {
    if !g.is_ut_star() || g.get(0, 0) != Elem::ONE {
        return Err(Error::NotUnipotent);
    }
    let mut out = g.row(0).to_vec();
    out[0] = Elem::ZERO;
    if out.iter().all(|e| e.is_zero()) {
        return Err(Error::Identity);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    /// A point of the section curve (`n = 1`), in ambient coordinates over
    /// the section field.
    Point { point: Vec<Elem>, multiplicity: u32 },
    /// An irreducible factor of the restriction (`n = 2`), in the kept
    /// coordinates.
    Factor { form: HomogeneousForm, multiplicity: u32 },
    /// Binary factor without roots in the sweep (`n = 1`).
    Unsplit { form: UPoly, multiplicity: u32 },
    /// The whole restriction (`n >= 3`).
    Unfactored { form: HomogeneousForm },
}

impl Component {
    pub fn multiplicity(&self) -> u32 {
        match self {
            Component::Point { multiplicity, .. } | Component::Factor { multiplicity, .. } | Component::Unsplit { multiplicity, .. } => {
                *multiplicity
            }
            Component::Unfactored { .. } => 1,
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            Component::Point { .. } => 1,
            Component::Factor { form, .. } | Component::Unfactored { form } => form.degree(),
            Component::Unsplit { form, .. } => form.degree().unwrap_or(0) as u32,
        }
    }
}

/// `X ∩ H` split into divisor candidates.
#[derive(Clone, Debug)]
pub struct Section {
    /// Field over which the components are defined.
    pub field: FieldSpec,
    /// Extension level of `field` over the form's field.
    pub level: u32,
    pub hyperplane: Vec<Elem>,
    pub restriction: Restriction,
    pub components: Vec<Component>,
    pub unfactored: bool,
}

fn binary_points(res: &Restriction, linear: &[Elem], ext: &FieldSpec) -> Result<Vec<Component>> {
    let g = res.form.embed(ext)?;
    let lin: Vec<Elem> = embed_vec(linear, res.form.field(), ext)?;
    let res_ext = Restriction { form: g.clone(), eliminated: res.eliminated, kept: res.kept.clone() };
    // g(x, 1) in the first kept variable; the point [1:0] takes the rest
    let d = g.degree() as usize;
    let mut coeffs = vec![Elem::ZERO; d + 1];
    for (exps, c) in g.terms() {
        coeffs[exps[0] as usize] = c;
    }
    let uni = UPoly::new(coeffs);
    let mut out = Vec::new();
    let at_infinity = d - uni.degree().unwrap_or(0);
    if at_infinity > 0 {
        out.push(Component::Point { point: res_ext.lift_point(&lin, &[Elem::ONE, Elem::ZERO]), multiplicity: at_infinity as u32 });
    }
    let mut rest = uni.clone();
    for (r, m) in uni.roots(ext) {
        out.push(Component::Point { point: res_ext.lift_point(&lin, &[r, Elem::ONE]), multiplicity: m });
        for _ in 0..m {
            rest = rest.divrem(ext, &UPoly::new(vec![ext.neg(r), Elem::ONE])).0;
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(Component::Unsplit { form: rest.monic(ext), multiplicity: 1 });
    }
    Ok(out)
}

fn embed_vec(v: &[Elem], from: &FieldSpec, to: &FieldSpec) -> Result<Vec<Elem>> {
    let emb = from.embedding_to(to)?;
    Ok(v.iter().map(|&x| emb.apply(x)).collect())
}

/// Components of `X ∩ {L = 0}`, over the first swept extension where the
/// section splits as far as the sweep can see.
pub fn section_components(form: &HomogeneousForm, linear: &[Elem], s_max: u32) -> Result<Section> {
    if linear.len() != form.nvars() {
        return Err(Error::SizeMismatch);
    }
    let res = restrict_to_hyperplane(form, linear)?;
    if res.form.is_zero() {
        return Err(Error::HyperplaneInsideX);
    }
    let base = form.field().clone();
    let n = form.nvars() - 2;
    let mut best: Option<(u32, FieldSpec, Vec<Component>)> = None;
    match n {
        1 => {
            for s in 1..=s_max.max(1) {
                let Ok(ext) = base.extension(s) else { break };
                let comps = binary_points(&res, linear, &ext)?;
                let split = !comps.iter().any(|c| matches!(c, Component::Unsplit { .. }));
                best = Some((s, ext, comps));
                if split {
                    break;
                }
            }
        }
        2 => {
            for s in 1..=s_max.max(1) {
                let Ok(ext) = base.extension(s) else { break };
                let fac = match factor(&res.form.embed(&ext)?) {
                    Ok(fac) => fac,
                    Err(e) if s == 1 => return Err(e),
                    Err(_) => break,
                };
                let all_linear = fac.factors.iter().all(|(g, _)| g.degree() == 1);
                let comps: Vec<Component> =
                    fac.factors.into_iter().map(|(form, multiplicity)| Component::Factor { form, multiplicity }).collect();
                if best.as_ref().is_none_or(|b| comps.len() > b.2.len()) {
                    best = Some((s, ext, comps));
                }
                if all_linear {
                    break;
                }
            }
        }
        _ => best = Some((1, base.clone(), vec![Component::Unfactored { form: res.form.clone() }])),
    }
    let (level, field, components) = best.expect("level 1 is always examined");
    Ok(Section { field, level, hyperplane: linear.to_vec(), restriction: res, unfactored: n >= 3, components })
}

/// The restriction of a linear form to the hyperplane, in kept coordinates.
fn restrict_linear(eq: &[Elem], section: &Section, f: &FieldSpec) -> Vec<Elem> {
    let lin = embed_vec(&section.hyperplane, section.restriction.form.field(), f).expect("section field extends the base");
    let j = section.restriction.eliminated;
    let ratio = f.div(eq[j], lin[j]).unwrap();
    section.restriction.kept.iter().map(|&i| f.sub(eq[i], f.mul(ratio, lin[i]))).collect()
}

fn proportional(f: &FieldSpec, a: &[Elem], b: &[Elem]) -> bool {
    let Some(i) = a.iter().position(|x| !x.is_zero()) else { return false };
    if b[i].is_zero() {
        return false;
    }
    let r = f.div(b[i], a[i]).unwrap();
    a.iter().zip(b).all(|(&x, &y)| f.mul(r, x) == y)
}

/// Whether the component lies on the projectivized eigenspace cut out by
/// `equations` (over the section field).
fn contained_in(component: &Component, equations: &[Vec<Elem>], section: &Section) -> Result<bool> {
    let f = &section.field;
    let dot = |eq: &[Elem], v: &[Elem]| eq.iter().zip(v).fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
    match component {
        Component::Point { point, .. } => Ok(equations.iter().all(|eq| dot(eq, point).is_zero())),
        Component::Factor { form, .. } => Ok(equations.iter().all(|eq| {
            let r = restrict_linear(eq, section, f);
            if r.iter().all(|x| x.is_zero()) {
                return true;
            }
            // a hyperplane not containing H meets it in a hyperplane of H
            form.linear_coeffs().is_some_and(|c| proportional(f, &c, &r))
        })),
        // a closed point of degree > 1 on a line
        Component::Unsplit { .. } => Ok(equations.iter().all(|eq| restrict_linear(eq, section, f).iter().all(|x| x.is_zero()))),
        Component::Unfactored { .. } => Err(Error::UnsupportedDimension(section.restriction.kept.len() + 1)),
    }
}

/// `|G_D|`: the number of elements whose fixed locus contains `D`.
pub fn stabilizer_order(group: &MatrixGroup, component: &Component, section: &Section) -> Result<usize> {
    if !group.is_ut_star() {
        return Err(Error::NotUTStar);
    }
    if let Component::Unfactored { .. } = component {
        return Err(Error::UnsupportedDimension(section.restriction.kept.len() + 1));
    }
    let emb = group.field().embedding_to(&section.field)?;
    let mut count = 0;
    for h in group.elements() {
        // eigenvalues of UT(*,I) matrices lie in the base field
        let locus = fixed_locus(h, 1)?;
        let mut fixed = false;
        for comp in &locus.components {
            let eqs: Vec<Vec<Elem>> = comp.space.equations().iter().map(|e| e.iter().map(|&x| emb.apply(x)).collect()).collect();
            if contained_in(component, &eqs, section)? {
                fixed = true;
                break;
            }
        }
        count += fixed as usize;
    }
    Ok(count)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Normality {
    /// No singular point over `F_{q^s}` for `s <= up_to`.
    CurveSmoothnessChecked { up_to: u32 },
    CurveSingular { level: u32 },
    UserAsserted,
    Unknown,
}

impl Normality {
    pub fn is_certified(self) -> bool {
        matches!(self, Normality::CurveSmoothnessChecked { .. } | Normality::UserAsserted)
    }
}

/// Smoothness of a plane curve over the swept extensions that fit the
/// point-scan bound.
pub fn curve_normality(form: &HomogeneousForm, s_max: u32) -> Result<Normality> {
    if form.nvars() != 3 {
        return Ok(Normality::Unknown);
    }
    let mut up_to = 0;
    for s in 1..=s_max.max(1) {
        match singular_points_curve(form, s) {
            Ok(pts) if pts.is_empty() => up_to = s,
            Ok(_) => return Ok(Normality::CurveSingular { level: s }),
            Err(Error::SearchSpaceExceeded { .. }) if s > 1 => break,
            Err(e) => return Err(e),
        }
    }
    Ok(Normality::CurveSmoothnessChecked { up_to })
}

#[derive(Clone, Debug)]
pub struct DivisorReport {
    pub component: Component,
    pub stabilizer_order: usize,
    pub wild: bool,
}

#[derive(Clone, Debug)]
pub struct ElementReport {
    pub element: Matrix,
    pub hyperplane: Vec<Elem>,
    pub section: Section,
    pub divisors: Vec<DivisorReport>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    WildlyRamified,
    /// No wild divisor found and normality not certified.
    NotWitnessed,
    /// No element of order p.
    NotApplicable,
    /// Certified-normal input without a wild divisor.
    ContradictsNormality,
}

#[derive(Clone, Debug)]
pub struct RamificationReport {
    pub p: u32,
    pub elements: Vec<ElementReport>,
    pub normality: Normality,
    pub verdict: Verdict,
}

/// Elements of order exactly `p` with `(1,1)`-entry 1.
pub fn order_p_elements(group: &MatrixGroup) -> Vec<Matrix> {
    let p = group.field().p() as u64;
    group.elements().iter().filter(|g| !g.is_identity() && g.get(0, 0) == Elem::ONE && g.pow(p).is_identity()).cloned().collect()
}

/// Per order-p element: hyperplane, section components, `|G_D|` and the
/// `p | |G_D|` verdict. `form` and `group` share coordinates and field.
pub fn wildness_verdict(form: &HomogeneousForm, group: &MatrixGroup, normality: Normality, s_max: u32) -> Result<RamificationReport> {
    let form = if form.field() == group.field() { form.clone() } else { form.embed(group.field())? };
    let p = group.field().p();
    let mut elements = Vec::new();
    for g in order_p_elements(group) {
        let hyperplane = fixed_hyperplane(&g)?;
        let section = section_components(&form, &hyperplane, s_max)?;
        let mut divisors = Vec::new();
        if !section.unfactored {
            for c in &section.components {
                let order = stabilizer_order(group, c, &section)?;
                divisors.push(DivisorReport { component: c.clone(), stabilizer_order: order, wild: order % p as usize == 0 });
            }
        }
        elements.push(ElementReport { element: g, hyperplane, section, divisors });
    }
    let verdict = if elements.is_empty() {
        Verdict::NotApplicable
    } else if elements.iter().any(|e| e.divisors.iter().any(|d| d.wild)) {
        Verdict::WildlyRamified
    } else if normality.is_certified() {
        Verdict::ContradictsNormality
    } else {
        Verdict::NotWitnessed
    };
    Ok(RamificationReport { p, elements, normality, verdict })
}
