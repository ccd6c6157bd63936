//! Classification of a point on a hypersurface by exhaustive search for
//! the projective-linear deck transformations of the projection from it.

use std::sync::atomic::{AtomicBool, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factor::{certify_irreducible, IrreducibilityCertificate, Status};
use crate::field::{gcd, Elem, FieldSpec, DEFAULT_S_MAX};
use crate::forms::{multiplicity_at_center, orbit_product, HomogeneousForm, SEARCH_BOUND};
use crate::group::{recognize_structure, GroupStructure, MatrixGroup};
use crate::linalg::Matrix;

/// Number of random evaluation points used to discard candidates before
/// the exact substitution check.
const TEST_POINTS: usize = 8;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub s_max: u32,
    /// Seed for the irreducibility certificate and the evaluation points.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { s_max: DEFAULT_S_MAX, seed: 0 }
    }
}

#[derive(Clone, Debug)]
pub struct GaloisPointReport {
    pub field: FieldSpec,
    /// The point as given.
    pub point: Vec<Elem>,
    /// `S` with `S e_0 = P`; the normalized form is `act(S, F)`.
    pub transform: Matrix,
    pub normalized_form: HomogeneousForm,
    pub degree: u32,
    pub multiplicity: u32,
    pub projection_degree: u32,
    /// Deck transformations in normalized coordinates, over `group_field`.
    pub group: MatrixGroup,
    pub group_field: FieldSpec,
    pub structure: Option<GroupStructure>,
    pub is_galois: bool,
    pub is_extendable_witnessed: bool,
    pub is_wild: bool,
    pub is_inner: bool,
    pub is_outer: bool,
    /// Whether some deck transformation scales the form by a constant other than 1.
    pub nontrivial_scalars: bool,
    /// Level whose group is reported.
    pub extension_level: u32,
    /// Last level searched exhaustively.
    pub verified_up_to: u32,
    /// `(s, order of the group over F_{q^s})` for every searched level.
    pub level_orders: Vec<(u32, usize)>,
    pub irreducibility: IrreducibilityCertificate,
}

impl GaloisPointReport {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Generators in the input coordinates (`S A S^{-1}`).
    pub fn original_generators(&self) -> Result<Vec<Matrix>> {
        let s = self.transform.embed(&self.group_field)?;
        let sinv = s.inverse().unwrap();
        Ok(self.group.minimal_generators().iter().map(|a| s.mul(a).mul(&sinv)).collect())
    }
}

/// `S` whose first column is `P` and whose other columns are the standard
/// vectors except the one at the first nonzero coordinate of `P`.
pub fn coordinate_change(f: &FieldSpec, point: &[Elem]) -> Result<Matrix> {
    let m = point.len();
    let pivot = point.iter().position(|e| !e.is_zero()).ok_or_else(|| Error::ParameterViolation("zero point".into()))?;
    let mut s = Matrix::zero(f, m);
    for (i, &x) in point.iter().enumerate() {
        s.set(i, 0, x);
    }
    let mut col = 0;
    for i in (0..m).filter(|&i| i != pivot) {
        col += 1;
        s.set(i, col, Elem::ONE);
    }
    Ok(s)
}

struct Prepared {
    /// Per test point: `f_j(x')` for `j = 0..=N`, `x`, and `F(x)`.
    points: Vec<(Vec<Elem>, Vec<Elem>, Elem)>,
}

fn prepare(form: &HomogeneousForm, top: u32, rng: &mut ChaCha8Rng) -> Prepared {
    let f = form.field();
    let elems = f.elements();
    let coeffs: Vec<HomogeneousForm> = (0..=top).map(|j| form.x0_coefficient(j)).collect();
    let points = (0..TEST_POINTS)
        .map(|_| {
            let x: Vec<Elem> = (0..form.nvars()).map(|_| elems[rng.gen_range(0..elems.len())]).collect();
            let fj = coeffs.iter().map(|c| c.eval(&x)).collect();
            let fx = form.eval(&x);
            (fj, x, fx)
        })
        .collect();
    Prepared { points }
}

fn passes(f: &FieldSpec, prep: &Prepared, a: Elem, c: Elem, b: &[Elem]) -> bool {
    prep.points.iter().all(|(fj, x, fx)| {
        let y = b.iter().zip(&x[1..]).fold(f.mul(a, x[0]), |acc, (&bi, &xi)| f.add(acc, f.mul(bi, xi)));
        let val = fj.iter().rev().fold(Elem::ZERO, |acc, &cj| f.add(f.mul(acc, y), cj));
        val == f.mul(c, *fx)
    })
}

fn ut_matrix(f: &FieldSpec, a: Elem, b: &[Elem]) -> Matrix {
    let mut m = Matrix::identity(f, b.len() + 1);
    m.set(0, 0, a);
    for (j, &x) in b.iter().enumerate() {
        m.set(0, j + 1, x);
    }
    m
}

/// All `A` in UT(*,I) over the form's field with `act(A, F) = a11^N F`.
/// Stops early once `stop_at` survivors are found.
fn scan_level(form: &HomogeneousForm, top: u32, stop_at: Option<usize>, seed: u64) -> Result<Vec<(Matrix, Elem)>> {
    let f = form.field().clone();
    let elems = f.elements();
    let q = elems.len() as u64;
    let nb = form.nvars() - 1;
    let total = q.pow(nb as u32);
    let prep = prepare(form, top, &mut ChaCha8Rng::seed_from_u64(seed));
    let done = AtomicBool::new(false);
    let found = std::sync::Mutex::new(Vec::new());
    let units: Vec<Elem> = elems.iter().copied().filter(|e| !e.is_zero()).collect();
    units.par_iter().try_for_each(|&a| -> Result<()> {
        let c = f.pow(a, top as i64);
        let mut b = vec![Elem::ZERO; nb];
        for idx in 0..total {
            if idx & 0xfff == 0 && done.load(Ordering::Relaxed) {
                return Ok(());
            }
            let mut rest = idx;
            for slot in b.iter_mut().rev() {
                *slot = elems[(rest % q) as usize];
                rest /= q;
            }
            if !passes(&f, &prep, a, c, &b) {
                continue;
            }
            let m = ut_matrix(&f, a, &b);
            if form.act(&m)? == form.scale(c) {
                let mut guard = found.lock().unwrap();
                guard.push((m, c));
                if stop_at.is_some_and(|s| guard.len() >= s) {
                    done.store(true, Ordering::Relaxed);
                }
            }
        }
        Ok(())
    })?;
    let mut out = found.into_inner().unwrap();
    out.sort_by(|x, y| x.0.entries().iter().map(|&e| f.order_key(e)).cmp(y.0.entries().iter().map(|&e| f.order_key(e))));
    Ok(out)
}

/// A searched level: `(s, field, survivors with their scalars)`.
type Level = (u32, FieldSpec, Vec<(Matrix, Elem)>);

/// Exhaustive extraction of the linear part of `G_{pi_P}`.
pub fn galois_report(form: &HomogeneousForm, point: &[Elem], opts: &VerifyOptions) -> Result<GaloisPointReport> {
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    if point.len() != form.nvars() {
        return Err(Error::SizeMismatch);
    }
    let f = form.field().clone();
    let s = coordinate_change(&f, point)?;
    let normalized = form.act(&s)?;
    let multiplicity = multiplicity_at_center(&normalized)?;
    let degree = form.degree();
    let top = degree - multiplicity;
    let n1 = form.nvars() as u32 - 1;
    let irreducibility = certify_irreducible(form, opts.s_max, opts.seed)?;

    let mut best: Option<Level> = None;
    let mut level_orders = Vec::new();
    let mut verified_up_to = 0;
    for level in 1..=opts.s_max.max(1) {
        let qs = (f.size() as u128).pow(level);
        let count = (qs - 1).saturating_mul(qs.saturating_pow(n1));
        if count > SEARCH_BOUND {
            if level == 1 {
                return Err(Error::SearchSpaceExceeded { what: "UT(*,I) candidates".into(), size: count, bound: SEARCH_BOUND });
            }
            break;
        }
        let Ok(ext) = f.extension(level) else { break };
        let g = normalized.embed(&ext)?;
        // an irreducible form bounds the group by the projection degree
        let irreducible_here = irreducibility.levels.iter().any(|&(s, st)| s == level && st == Status::Irreducible);
        let stop_at = irreducible_here.then_some(top as usize);
        let survivors = scan_level(&g, top, stop_at, opts.seed ^ level as u64)?;
        level_orders.push((level, survivors.len()));
        verified_up_to = level;
        let full = survivors.len() == top as usize;
        if best.as_ref().is_none_or(|b| survivors.len() > b.2.len()) {
            best = Some((level, ext, survivors));
        }
        if full {
            break;
        }
    }
    let (extension_level, group_field, survivors) = best.expect("level 1 is always searched");
    let size = form.nvars();
    let gens: Vec<Matrix> = survivors.iter().map(|s| s.0.clone()).filter(|m| !m.is_identity()).collect();
    let group = MatrixGroup::generate(&group_field, size, &gens, survivors.len() + 1)
        .map_err(|_| Error::InvariantViolation("survivors are not closed under products".into()))?;
    if group.order() != survivors.len() {
        return Err(Error::InvariantViolation("survivors are not closed under products".into()));
    }
    let nontrivial_scalars = survivors.iter().any(|s| s.1 != Elem::ONE);
    let structure = if group.order() > 1 { Some(recognize_structure(&group)?) } else { None };
    let is_galois = group.order() == top as usize;
    let p = f.p() as u64;
    let is_wild = is_galois && (top as u64).is_multiple_of(p);
    if is_wild {
        let s = structure.as_ref().expect("wild groups are nontrivial");
        if !s.divisibility_holds || gcd(s.l, p) != 1 {
            return Err(Error::InvariantViolation(format!("wild group with l = {} not dividing p^u - 1 = {}^{} - 1", s.l, p, s.u)));
        }
    }
    Ok(GaloisPointReport {
        field: f,
        point: point.to_vec(),
        transform: s,
        normalized_form: normalized,
        degree,
        multiplicity,
        projection_degree: top,
        group,
        group_field,
        structure,
        is_galois,
        is_extendable_witnessed: is_galois,
        is_wild,
        is_inner: multiplicity == 1,
        is_outer: multiplicity == 0,
        nontrivial_scalars,
        extension_level,
        verified_up_to,
        level_orders,
        irreducibility,
    })
}

/// `F = A * prod_{g in G} g^* X0 + B` with `A`, `B` free of `X0`.
pub fn decompose_4_7(form: &HomogeneousForm, group: &MatrixGroup) -> Result<(HomogeneousForm, HomogeneousForm)> {
    if !group.is_ut_star() {
        return Err(Error::NotUTStar);
    }
    let g_form = if form.field() == group.field() { form.clone() } else { form.embed(group.field())? };
    for h in group.elements() {
        if g_form.act(h)? != g_form {
            return Err(Error::NotInvariant);
        }
    }
    let prod = orbit_product(group)?;
    let n = group.order() as u32;
    let f = group.field();
    let lead = prod.x0_coefficient(n);
    let c = lead.terms().first().map(|t| t.1).filter(|_| lead.degree() == 0).ok_or_else(|| Error::DivisionFails("orbit product is not monic in X0".into()))?;
    if g_form.max_x0_exponent().unwrap_or(0) > n {
        return Err(Error::DivisionFails(format!("X0-degree exceeds the group order {n}")));
    }
    let a = g_form.x0_coefficient(n).scale(f.inv(c).unwrap());
    if a.is_zero() {
        return Err(Error::DivisionFails("no X0^N term".into()));
    }
    let b = g_form.sub(&a.mul(&prod));
    if b.involves_x0() {
        return Err(Error::DivisionFails("remainder involves X0".into()));
    }
    let b = if b.is_zero() { HomogeneousForm::zero(f, form.nvars(), form.degree()) } else { b };
    if a.mul(&prod).add(&b) != g_form {
        return Err(Error::DivisionFails("reassembly failed".into()));
    }
    Ok((a, b))
}

fn is_power_of(mut n: u32, p: u32) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Whether every positive `X0`-exponent of `form` is a power of `p`.
pub fn x0_exponents_are_p_powers(form: &HomogeneousForm) -> bool {
    let p = form.field().p();
    form.x0_exponents().into_iter().filter(|&e| e > 0).all(|e| is_power_of(e, p))
}

/// The support property of the orbit product of `G`.
pub fn p_power_support(_form: &HomogeneousForm, group: &MatrixGroup) -> Result<bool> {
    Ok(x0_exponents_are_p_powers(&orbit_product(group)?))
}

/// Named test hypersurfaces.
pub mod fixtures {
    use super::*;
    use crate::factor::certify_irreducible;
    use crate::text::parse_form;

    fn check_char3(f: &FieldSpec) -> Result<()> {
        if f.p() != 3 {
            return Err(Error::WrongCharacteristic { expected: 3, found: f.p() as u64 });
        }
        Ok(())
    }

    fn with_coeffs(f: &FieldSpec, base: &str, a: [Elem; 3]) -> Result<HomogeneousForm> {
        let mut form = parse_form(base, f, Some(3))?;
        let monos: [[u16; 3]; 3] = [[0, 1, 3], [0, 2, 2], [0, 3, 1]];
        for (mono, &c) in monos.iter().zip(&a) {
            form = form.add(&HomogeneousForm::monomial(f, mono, c));
        }
        Ok(form)
    }

    /// `X^3 Z - X Z^3 + Y^4 + a3 Y^3 Z + a2 Y^2 Z^2 + a1 Y Z^3`, with
    /// `a = (a1, a2, a3)`.
    pub fn thm25_1(f: &FieldSpec, a: [Elem; 3]) -> Result<HomogeneousForm> {
        check_char3(f)?;
        with_coeffs(f, "X0^3*X2 - X0*X2^3 + X1^4", a)
    }

    /// `X^3 Y - X Y Z^2 + a3 Y^3 Z + a2 Y^2 Z^2 + a1 Y Z^3 + Z^4`, `a3 != 0`.
    pub fn thm25_2(f: &FieldSpec, a: [Elem; 3]) -> Result<HomogeneousForm> {
        check_char3(f)?;
        if a[2].is_zero() {
            return Err(Error::ParameterViolation("a3 must be nonzero".into()));
        }
        with_coeffs(f, "X0^3*X1 - X0*X1*X2^2 + X2^4", a)
    }

    /// The translation group `X -> X + aY + bZ`, `(a, b)` in the
    /// `F_p`-span of the first `e` vectors of the basis `(t^i, 0), (0, t^i)`
    /// of `k^2`, `k = F_{p^ceil(e/2)}`.
    pub fn thm26_group(p: u64, e: u32) -> Result<MatrixGroup> {
        if e == 0 {
            return Err(Error::ParameterViolation("e must be positive".into()));
        }
        let k = e.div_ceil(2);
        let f = crate::field::make_field(p, k)?;
        let t = f.gen_t().unwrap_or(Elem::ONE);
        let gens: Vec<Matrix> = (0..e)
            .map(|i| {
                let col = if i < k { 1 } else { 2 };
                Matrix::transvection(&f, 3, 0, col, f.pow(t, (i % k) as i64))
            })
            .collect();
        MatrixGroup::generate(&f, 3, &gens, crate::group::DEFAULT_CAP)
    }

    /// Binary forms of degree `d` tried as `h(Y, Z)`, in order.
    fn h_candidates(f: &FieldSpec, d: u32) -> Vec<HomogeneousForm> {
        let mono = |y: u32| HomogeneousForm::monomial(f, &[0, y as u16, (d - y) as u16], Elem::ONE);
        let mut out = Vec::new();
        for j in 1..d {
            out.push(mono(d).add(&mono(j)));
        }
        for j in 1..d {
            out.push(mono(0).add(&mono(j)));
        }
        for j in 1..d {
            out.push(mono(d).add(&mono(0)).add(&mono(j)));
        }
        out
    }

    /// `g_0(X, Y, Z) + h(Y, Z)` with `g_0` the orbit product of
    /// [`thm26_group`]. Without `h`, the first candidate making the curve
    /// certifiably irreducible is used.
    pub fn thm26(p: u64, e: u32, h: Option<&HomogeneousForm>, s_max: u32) -> Result<HomogeneousForm> {
        let group = thm26_group(p, e)?;
        let f = group.field().clone();
        let g0 = orbit_product(&group)?;
        let d = g0.degree();
        match h {
            Some(h) => {
                let h = h.embed(&f)?;
                if h.involves_x0() || h.degree() != d {
                    return Err(Error::ParameterViolation(format!("h must be a form of degree {d} in X1, X2")));
                }
                Ok(g0.add(&h))
            }
            None => {
                for h in h_candidates(&f, d) {
                    let form = g0.add(&h);
                    let cert = certify_irreducible(&form, s_max.max(1), 0)?;
                    if cert.base == Status::Irreducible {
                        return Ok(form);
                    }
                }
                Err(Error::IrreducibleSearchFail("no candidate h gives an irreducible curve".into()))
            }
        }
    }
}
