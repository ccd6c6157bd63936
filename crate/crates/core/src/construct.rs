//! Synthesis of groups and invariant hypersurfaces.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factor::{certify_irreducible, line_certificate, IrreducibilityCertificate, Status};
use crate::field::{make_field, Elem, FieldSpec};
use crate::forms::{multiplicity_at_center, orbit_product, projective_points, HomogeneousForm};
use crate::group::{recognize_structure, sylow_p, GroupStructure, MatrixGroup, DEFAULT_CAP};
use crate::lift::{check_conditions, simultaneous_unitriangularize};
use crate::linalg::{normalizer_to_diagonal, Matrix};

/// Number of random `B` candidates tried before giving up.
pub const RETRY_BOUND: u32 = 10_000;

/// `{I + v E_12 : v in F_{p^u}}` extended by `diag(e_l, 1, ..., 1)`, acting
/// on `P^{n+1}` over `F_{p^u}`.
pub fn standard_group(p: u64, u: u32, l: u64, n: usize) -> Result<MatrixGroup> {
    if u == 0 || n == 0 || l == 0 {
        return Err(Error::ParameterViolation("u, l and n must be positive".into()));
    }
    let f = make_field(p, u)?;
    if !(f.size() as u64 - 1).is_multiple_of(l) {
        return Err(Error::DivisibilityFail { p, u, l });
    }
    let size = n + 2;
    let t = f.gen_t().unwrap_or(Elem::ONE);
    let mut gens: Vec<Matrix> = (0..u).map(|i| Matrix::transvection(&f, size, 0, 1, f.pow(t, i as i64))).collect();
    if l > 1 {
        let mut d = vec![Elem::ONE; size];
        d[0] = f.primitive_root_of_unity(l)?;
        gens.push(Matrix::diag(&f, &d));
    }
    MatrixGroup::generate(&f, size, &gens, DEFAULT_CAP)
}

/// Caller-fixed choices for [`synthesize`]; forms and points are over the
/// group's field, forms in all `n+2` variables without `X0`.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub a_form: Option<HomogeneousForm>,
    pub b_form: Option<HomogeneousForm>,
    pub points: Option<Vec<(Elem, Elem)>>,
}

#[derive(Clone, Debug)]
pub struct SynthesisOptions {
    pub m: u32,
    pub seed: u64,
    pub s_max: u32,
    pub overrides: Overrides,
}

impl SynthesisOptions {
    pub fn new(m: u32, seed: u64) -> SynthesisOptions {
        SynthesisOptions { m, seed, s_max: crate::field::DEFAULT_S_MAX, overrides: Overrides::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `n >= 2`: `A F_H' + B` with irreducible `A`, `B`.
    General,
    /// `n = 1`, `l >= 2`.
    CurveCyclic,
    /// `n = 1`, `l = 1`.
    CurveUnipotent,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::General => "n>=2",
            Branch::CurveCyclic => "n=1,l>=2",
            Branch::CurveUnipotent => "n=1,l=1",
        }
    }
}

/// A synthesized hypersurface with everything needed to audit it.
#[derive(Clone, Debug)]
pub struct Synthesis {
    pub field: FieldSpec,
    /// Extension level over the group's field (1 if no restart was needed).
    pub level: u32,
    /// Defining form in the input coordinates.
    pub form: HomogeneousForm,
    /// The Galois point in the input coordinates.
    pub point: Vec<Elem>,
    /// Form in normalized coordinates (Galois point `[1:0:...:0]`).
    pub normalized_form: HomogeneousForm,
    /// `T` with `H' = T H T^{-1}` in UT(*,I) and `form = act(T, normalized_form)`.
    pub transform: Matrix,
    pub group: MatrixGroup,
    pub normalized_group: MatrixGroup,
    pub structure: GroupStructure,
    pub branch: Branch,
    pub orbit_product: HomogeneousForm,
    pub a_form: HomogeneousForm,
    pub b_form: HomogeneousForm,
    pub points: Vec<(Elem, Elem)>,
    /// Index of the accepted `B` candidate (0 = deterministic choice).
    pub attempts: u32,
    pub irreducibility: IrreducibilityCertificate,
    /// How base irreducibility was established.
    pub irreducibility_source: &'static str,
    pub degree: u32,
    pub multiplicity: u32,
}

/// `X_1^d + X_2^{d-1} X_{last}`: linear in the last variable with coprime
/// coefficients, hence absolutely irreducible when `X_2 != X_last`.
fn default_irreducible(f: &FieldSpec, nvars: usize, d: u32) -> HomogeneousForm {
    match d {
        0 => HomogeneousForm::one(f, nvars),
        1 => HomogeneousForm::var(f, nvars, 1),
        _ => {
            let mut a = vec![0u16; nvars];
            a[1] = d as u16;
            let mut b = vec![0u16; nvars];
            b[2] = (d - 1) as u16;
            b[nvars - 1] += 1;
            HomogeneousForm::from_terms(f.clone(), nvars, d, vec![(a, Elem::ONE), (b, Elem::ONE)])
        }
    }
}

/// Monomials of degree `d` in `X_1..X_{nvars-1}`.
fn x0_free_monomials(nvars: usize, d: u32) -> Vec<Vec<u16>> {
    fn rec(i: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == exps.len() {
            exps[i] = left as u16;
            out.push(exps.clone());
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e as u16;
            rec(i + 1, left - e, exps, out);
        }
    }
    let mut out = Vec::new();
    rec(1, d, &mut vec![0u16; nvars], &mut out);
    out
}

fn random_x0_free_form(f: &FieldSpec, nvars: usize, d: u32, rng: &mut ChaCha8Rng) -> HomogeneousForm {
    let elems = f.elements();
    let terms = x0_free_monomials(nvars, d).into_iter().map(|m| (m, elems[rng.gen_range(0..elems.len())])).collect();
    HomogeneousForm::from_terms(f.clone(), nvars, d, terms)
}

/// `R` with `R w = e_1`: the inverse of the basis completion of `w` by the
/// standard vectors other than its first nonzero coordinate.
fn line_to_first_axis(f: &FieldSpec, w: &[Elem]) -> Matrix {
    let m = w.len();
    let pivot = w.iter().position(|e| !e.is_zero()).expect("nonzero vector");
    let mut completion = Matrix::zero(f, m);
    for (i, &x) in w.iter().enumerate() {
        completion.set(i, 0, x);
    }
    let mut col = 0;
    for i in (0..m).filter(|&i| i != pivot) {
        col += 1;
        completion.set(i, col, Elem::ONE);
    }
    completion.inverse().expect("basis completion is invertible")
}

/// Conjugator `T` moving the group into UT(*,I) with the complement
/// diagonal, following the simultaneous unitriangularization of the Sylow
/// part, a basis change taking the common line to `e_1` and the
/// diagonalizing normalizer of the complement.
pub fn normalizing_transform(group: &MatrixGroup, structure: &GroupStructure, common_line: &[Elem]) -> Result<Matrix> {
    let f = group.field();
    let size = group.size();
    let sylow = sylow_p(group)?;
    let q = if sylow.order() > 1 { simultaneous_unitriangularize(&sylow.minimal_generators())? } else { Matrix::identity(f, size) };
    let w = q.apply(common_line);
    let r = line_to_first_axis(f, &w);
    let rq = r.mul(&q);
    let t = if structure.l > 1 {
        let b = rq.mul(&structure.complement_generator).mul(&rq.inverse().unwrap());
        normalizer_to_diagonal(&b)?.mul(&rq)
    } else {
        rq
    };
    Ok(t)
}

fn check_x0_free(form: &HomogeneousForm, degree: u32, what: &str) -> Result<()> {
    if form.involves_x0() || (form.degree() != degree && !form.is_zero()) || form.is_zero() {
        return Err(Error::ParameterViolation(format!("{what} must be a nonzero form of degree {degree} without X0")));
    }
    Ok(())
}

struct Choice {
    a: HomogeneousForm,
    b: HomogeneousForm,
    points: Vec<(Elem, Elem)>,
}

/// Points `(a, b)` of `P^1` in canonical order: `(1, b)` then `(0, 1)`.
fn line_points(f: &FieldSpec) -> Vec<(Elem, Elem)> {
    projective_points(f, 2).into_iter().map(|v| (v[0], v[1])).collect()
}

fn eval_binary(form: &HomogeneousForm, (a, b): (Elem, Elem)) -> Elem {
    form.eval(&[Elem::ZERO, a, b])
}

/// `b X_1 - a X_2` in three variables.
fn vanishing_line(f: &FieldSpec, (a, b): (Elem, Elem)) -> HomogeneousForm {
    HomogeneousForm::linear(f, &[Elem::ZERO, b, f.neg(a)])
}

/// Point and `A` choices for the curve branches over `f`; `None` when `f`
/// is too small to host them.
fn curve_choice(f: &FieldSpec, d_form: &HomogeneousForm, n_deg: u32, m: u32, need: usize, overrides: &Overrides) -> Result<Option<Choice>> {
    let pts: Vec<(Elem, Elem)> = match &overrides.points {
        Some(given) => {
            let emb = given.clone();
            for &pt in &emb {
                if eval_binary(d_form, pt).is_zero() {
                    return Err(Error::ParameterViolation("D vanishes at a chosen point".into()));
                }
            }
            if emb.len() != need {
                return Err(Error::ParameterViolation(format!("expected {need} points")));
            }
            if need == 2 && f.mul(emb[0].0, emb[1].1) == f.mul(emb[1].0, emb[0].1) {
                return Err(Error::ParameterViolation("chosen points are proportional".into()));
            }
            emb
        }
        None => {
            let good: Vec<(Elem, Elem)> = line_points(f).into_iter().filter(|&pt| !eval_binary(d_form, pt).is_zero()).collect();
            if good.len() < need {
                return Ok(None);
            }
            good[..need].to_vec()
        }
    };
    let a = match &overrides.a_form {
        Some(a) => {
            let a = a.embed(f)?;
            check_x0_free(&a, m, "A")?;
            if pts.iter().any(|&pt| eval_binary(&a, pt).is_zero()) {
                return Err(Error::ParameterViolation("A vanishes at a chosen point".into()));
            }
            a
        }
        None if m == 0 => HomogeneousForm::one(f, 3),
        None => {
            let ell = line_points(f)
                .into_iter()
                .map(|(x, y)| HomogeneousForm::linear(f, &[Elem::ZERO, x, y]))
                .find(|ell| pts.iter().all(|&pt| !eval_binary(ell, pt).is_zero()));
            match ell {
                Some(ell) => ell.pow(m),
                None => return Ok(None),
            }
        }
    };
    let total = n_deg + m;
    let b = if need == 2 {
        vanishing_line(f, pts[0]).pow(total - 1).mul(&vanishing_line(f, pts[1]))
    } else {
        vanishing_line(f, pts[0]).pow(total)
    };
    Ok(Some(Choice { a, b, points: pts }))
}

/// The hypersurface synthesis pipeline.
pub fn synthesize(group: &MatrixGroup, opts: &SynthesisOptions) -> Result<Synthesis> {
    let cond = check_conditions(group);
    if !(cond.cond_i && cond.cond_ii) {
        return Err(Error::ConditionsFail(format!("condition (i) = {}, condition (ii) = {}", cond.cond_i, cond.cond_ii)));
    }
    let structure = recognize_structure(group)?;
    if !structure.divisibility_holds {
        return Err(Error::DivisibilityFail { p: structure.p, u: structure.u, l: structure.l });
    }
    let n = group.size() - 2;
    let line = cond.common_line.as_ref().expect("conditions hold").basis[0].clone();
    let t0 = normalizing_transform(group, &structure, &line)?;
    let base = group.field().clone();
    let m = opts.m;
    let big_n = structure.order as u32;
    let branch = match (n, structure.l) {
        (1, 1) => Branch::CurveUnipotent,
        (1, _) => Branch::CurveCyclic,
        _ => Branch::General,
    };

    for level in 1..=opts.s_max.max(1) {
        let f = match base.extension(level) {
            Ok(f) => f,
            Err(_) => break,
        };
        let g = group.embed(&f)?;
        let t = t0.embed(&f)?;
        let h = g.conjugate(&t)?;
        if !h.is_ut_star() {
            return Err(Error::InvariantViolation("normalized group is not in UT(*,I)".into()));
        }
        let fh = orbit_product(&h)?;
        let mut overrides = opts.overrides.clone();
        if let Some(a) = &overrides.a_form {
            overrides.a_form = Some(a.embed(&f)?);
        }
        if let Some(pts) = &overrides.points {
            let emb = base.embedding_to(&f)?;
            overrides.points = Some(pts.iter().map(|&(a, b)| (emb.apply(a), emb.apply(b))).collect());
        }
        let nvars = n + 2;
        let mut candidates: Box<dyn FnMut(u32) -> Result<Option<Choice>>> = match branch {
            Branch::General => {
                let a = match &overrides.a_form {
                    Some(a) => {
                        check_x0_free(a, m, "A")?;
                        a.clone()
                    }
                    None => default_irreducible(&f, nvars, m),
                };
                let fixed_b = match &opts.overrides.b_form {
                    Some(b) => {
                        let b = b.embed(&f)?;
                        check_x0_free(&b, big_n + m, "B")?;
                        Some(b)
                    }
                    None => None,
                };
                let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
                let f2 = f.clone();
                Box::new(move |attempt| {
                    let b = match (&fixed_b, attempt) {
                        (Some(b), 0) => b.clone(),
                        (Some(_), _) => return Ok(None),
                        (None, 0) => default_irreducible(&f2, nvars, big_n + m),
                        (None, _) => random_x0_free_form(&f2, nvars, big_n + m, &mut rng),
                    };
                    Ok(Some(Choice { a: a.clone(), b, points: Vec::new() }))
                })
            }
            Branch::CurveCyclic | Branch::CurveUnipotent => {
                let l_exp = structure.l as u32;
                let d_form = fh.x0_coefficient(l_exp);
                let need = if branch == Branch::CurveCyclic { 2 } else { 1 };
                match curve_choice(&f, &d_form, big_n, m, need, &overrides)? {
                    None => continue,
                    Some(choice) => {
                        let mut once = Some(choice);
                        Box::new(move |_| Ok(once.take()))
                    }
                }
            }
        };

        let mut attempt = 0;
        while attempt < RETRY_BOUND {
            let Some(choice) = candidates(attempt)? else { break };
            let form = choice.a.mul(&fh).add(&choice.b);
            attempt += 1;
            if let Some(syn) = finish(&g, &h, &t, &structure, branch, &fh, form, choice, level, attempt - 1, opts)? {
                return Ok(syn);
            }
        }
        return Err(Error::IrreducibleSearchFail(format!("no certified irreducible form after {attempt} candidates")));
    }
    Err(Error::IrreducibleSearchFail(format!("no admissible points within F_(q^{})", opts.s_max)))
}

#[allow(clippy::too_many_arguments)]
fn finish(
    g: &MatrixGroup,
    h: &MatrixGroup,
    t: &Matrix,
    structure: &GroupStructure,
    branch: Branch,
    fh: &HomogeneousForm,
    form: HomogeneousForm,
    choice: Choice,
    level: u32,
    attempt: u32,
    opts: &SynthesisOptions,
) -> Result<Option<Synthesis>> {
    for e in h.elements() {
        if form.act(e)? != form {
            return Err(Error::InvariantViolation("synthesized form is not invariant".into()));
        }
    }
    let mut cert = certify_irreducible(&form, opts.s_max, opts.seed)?;
    let mut source = "line restriction";
    if cert.base != Status::Irreducible {
        let by_construction = match branch {
            // constant term in X0 is B, and B irreducible forces F irreducible
            Branch::General => line_certificate(&choice.b.drop_var(0), opts.seed).is_some(),
            // point conditions were checked when choosing
            Branch::CurveCyclic | Branch::CurveUnipotent => cert.base != Status::Reducible,
        };
        if !by_construction {
            return Ok(None);
        }
        cert.base = Status::Irreducible;
        source = "constant-term argument";
    }
    let multiplicity = multiplicity_at_center(&form)?;
    if multiplicity != opts.m {
        return Err(Error::InvariantViolation(format!("multiplicity {multiplicity} != {}", opts.m)));
    }
    let f = g.field().clone();
    let original = form.act(t)?;
    let tinv = t.inverse().unwrap();
    let mut e0 = vec![Elem::ZERO; g.size()];
    e0[0] = Elem::ONE;
    let point = normalize_point(&f, &tinv.apply(&e0));
    let structure = if level == 1 { structure.clone() } else { recognize_structure(g)? };
    Ok(Some(Synthesis {
        field: f,
        level,
        degree: form.degree(),
        form: original,
        point,
        normalized_form: form,
        transform: t.clone(),
        group: g.clone(),
        normalized_group: h.clone(),
        structure,
        branch,
        orbit_product: fh.clone(),
        a_form: choice.a,
        b_form: choice.b,
        points: choice.points,
        attempts: attempt,
        irreducibility: cert,
        irreducibility_source: source,
        multiplicity,
    }))
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
pub fn normalize_point(f: &FieldSpec, v: &[Elem]) -> Vec<Elem> {
    let first = v.iter().copied().find(|e| !e.is_zero()).expect("nonzero point");
    let inv = f.inv(first).unwrap();
    v.iter().map(|&x| f.mul(x, inv)).collect()
}

/// `F_m X0^{d-m} + F_d` with `p` not dividing `d - m`; optionally certified
/// irreducible over the base field.
pub fn construct_nonwild(fm: &HomogeneousForm, fd: &HomogeneousForm, check: bool, s_max: u32) -> Result<HomogeneousForm> {
    let f = fm.field().clone();
    if fm.is_zero() || fm.involves_x0() || fd.involves_x0() {
        return Err(Error::ParameterViolation("F_m must be nonzero and both forms free of X0".into()));
    }
    let (m, d) = (fm.degree(), fd.degree());
    if d < m + 2 {
        return Err(Error::ParameterViolation("need d - m >= 2".into()));
    }
    if (d - m) % f.p() == 0 {
        return Err(Error::WildDegree { p: f.p() as u64, degree: d - m });
    }
    let mut x0 = vec![0u16; fm.nvars()];
    x0[0] = (d - m) as u16;
    let form = fm.mul(&HomogeneousForm::monomial(&f, &x0, Elem::ONE)).add(fd);
    // invariance under diag(e_{d-m}, 1, ..., 1) wherever e_{d-m} lives
    let ext = (1..=64).map(|s| f.extension(s)).find_map(|e| e.ok().filter(|e| (e.size() as u64 - 1).is_multiple_of((d - m) as u64)));
    if let Some(ext) = ext {
        let mut diag = vec![Elem::ONE; fm.nvars()];
        diag[0] = ext.primitive_root_of_unity((d - m) as u64)?;
        let g = form.embed(&ext)?;
        if g.act(&Matrix::diag(&ext, &diag))? != g {
            return Err(Error::InvariantViolation("non-wild form is not invariant".into()));
        }
    }
    if check {
        let cert = certify_irreducible(&form, s_max, 0)?;
        if cert.base != Status::Irreducible {
            return Err(Error::IrreducibleSearchFail(format!("irreducibility over the base field is {:?}", cert.base)));
        }
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::recognize_structure;
    use crate::text::parse_form;

    #[test]
    fn standard_group_examples() {
        let g = standard_group(3, 1, 1, 1).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.elements().iter().all(|e| e.get(0, 0) == Elem::ONE));
        let g = standard_group(2, 2, 3, 1).unwrap();
        assert_eq!(g.order(), 12);
        let s = recognize_structure(&g).unwrap();
        assert_eq!((s.u, s.l), (2, 3));
        let c = check_conditions(&g);
        assert!(c.cond_i && c.cond_ii);
        assert_eq!(standard_group(3, 1, 4, 1).unwrap_err(), Error::DivisibilityFail { p: 3, u: 1, l: 4 });
    }

    #[test]
    fn curve_unipotent_with_explicit_choices() {
        let g = standard_group(3, 1, 1, 1).unwrap();
        let f3 = g.field().clone();
        let mut opts = SynthesisOptions::new(1, 7);
        opts.overrides.points = Some(vec![(Elem::ONE, Elem::ONE)]);
        opts.overrides.a_form = Some(parse_form("X2", &f3, Some(3)).unwrap());
        let syn = synthesize(&g, &opts).unwrap();
        let expected = parse_form("X2*X0^3 + 2*X0*X1^2*X2 + (X1 + 2*X2)^4", &f3, Some(3)).unwrap();
        assert_eq!(syn.normalized_form, expected);
        assert_eq!(syn.multiplicity, 1);
        assert_eq!(syn.branch, Branch::CurveUnipotent);
        for h in g.elements() {
            assert_eq!(syn.form.act(h).unwrap(), syn.form);
        }
    }

    #[test]
    fn general_branch_quadric() {
        let g = standard_group(2, 1, 1, 2).unwrap();
        let f2 = g.field().clone();
        let syn = synthesize(&g, &SynthesisOptions::new(0, 1)).unwrap();
        assert_eq!(syn.orbit_product, parse_form("X0^2 + X0*X1", &f2, Some(4)).unwrap());
        assert_eq!(syn.a_form, HomogeneousForm::one(&f2, 4));
        assert_eq!(syn.normalized_form, syn.orbit_product.add(&syn.b_form));
        assert_eq!(syn.multiplicity, 0);
        assert_eq!(syn.irreducibility.base, Status::Irreducible);
    }

    #[test]
    fn curve_cyclic_branch() {
        let g = standard_group(2, 2, 3, 1).unwrap();
        let syn = synthesize(&g, &SynthesisOptions::new(1, 3)).unwrap();
        assert_eq!(syn.degree, 13);
        assert_eq!(syn.points.len(), 2);
        for h in syn.group.elements() {
            assert_eq!(syn.form.act(h).unwrap(), syn.form);
        }
    }

    #[test]
    fn conditions_failure() {
        let f2 = make_field(2, 1).unwrap();
        let a = Matrix::transvection(&f2, 4, 0, 1, Elem::ONE);
        let b = Matrix::transvection(&f2, 4, 2, 3, Elem::ONE);
        let g = MatrixGroup::generate(&f2, 4, &[a, b], 10).unwrap();
        assert!(matches!(synthesize(&g, &SynthesisOptions::new(1, 0)), Err(Error::ConditionsFail(_))));
    }

    #[test]
    fn conjugated_input_group() {
        // a non-normalized conjugate of the standard group still synthesizes
        let g = standard_group(3, 1, 2, 1).unwrap();
        let f = g.field().clone();
        let s = Matrix::from_ints(&f, &[&[1, 0, 1], &[1, 1, 0], &[0, 1, 1]]).unwrap();
        let conj = g.conjugate(&s).unwrap();
        let syn = synthesize(&conj, &SynthesisOptions::new(1, 5)).unwrap();
        for h in conj.elements() {
            assert_eq!(syn.form.act(h).unwrap(), syn.form);
        }
        assert!(syn.form.eval(&syn.point).is_zero());
    }

    #[test]
    fn nonwild_examples() {
        let f5 = make_field(5, 1).unwrap();
        let x1 = parse_form("X1", &f5, Some(3)).unwrap();
        let fd = parse_form("X1^4 + X2^4", &f5, Some(3)).unwrap();
        let g = construct_nonwild(&x1, &fd, false, 2).unwrap();
        assert_eq!(g, parse_form("X1*X0^3 + X1^4 + X2^4", &f5, Some(3)).unwrap());
        let f3 = make_field(3, 1).unwrap();
        let one = HomogeneousForm::one(&f3, 3);
        let g = construct_nonwild(&one, &parse_form("X1^4 + X2^4", &f3, Some(3)).unwrap(), true, 2).unwrap();
        assert_eq!(g, parse_form("X0^4 + X1^4 + X2^4", &f3, Some(3)).unwrap());
        let err = construct_nonwild(&one, &parse_form("X1^3 + X2^3", &f3, Some(3)).unwrap(), false, 2).unwrap_err();
        assert_eq!(err, Error::WildDegree { p: 3, degree: 3 });
    }
}
