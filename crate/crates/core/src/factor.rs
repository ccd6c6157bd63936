//! Trial-division factorization of forms and line-restriction
//! irreducibility certificates.
//!
//! If `F(u + T v)` is an irreducible polynomial of degree `deg F` over
//! `F_{q^s}` then `F` is irreducible over `F_{q^s}` (a factorization of `F`
//! would restrict to one of the same degrees, since `F(v) != 0`), and hence
//! over every subfield. This gives certificates for degrees far beyond the
//! reach of trial division.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::forms::{HomogeneousForm, SEARCH_BOUND};

/// `unit * prod f_i^{e_i}` with each `f_i` scaled to leading coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Elem,
    pub factors: Vec<(HomogeneousForm, u32)>,
}

impl Factorization {
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn expand(&self, field: &FieldSpec, nvars: usize) -> HomogeneousForm {
        self.factors
            .iter()
            .fold(HomogeneousForm::constant(field, nvars, self.unit), |acc, (g, e)| acc.mul(&g.pow(*e)))
    }

    /// Factors of degree one.
    pub fn linear_factors(&self) -> impl Iterator<Item = &(HomogeneousForm, u32)> {
        self.factors.iter().filter(|(g, _)| g.degree() == 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Irreducible,
    Reducible,
    Unknown,
}

/// Per-level irreducibility evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibilityCertificate {
    /// Over the field of definition.
    pub base: Status,
    /// Over every swept extension.
    pub absolute: Status,
    /// `(s, status over F_{q^s})`.
    pub levels: Vec<(u32, Status)>,
    pub checked_up_to: u32,
}

fn monomials(nvars: usize, degree: u32) -> Vec<Vec<u16>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if prefix.len() + 1 == n {
            prefix.push(d as u16);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u16);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

/// Number of normalized forms of degree `k`, i.e. `(q^M - 1)/(q - 1)`.
fn candidate_count(q: u128, nmono: usize) -> u128 {
    let mut total: u128 = 0;
    let mut pw: u128 = 1;
    for _ in 0..nmono {
        total = total.saturating_add(pw);
        pw = pw.saturating_mul(q);
    }
    total
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// First normalized form of degree `k` dividing `target`, in enumeration
/// order (leading monomial position, then coefficients in canonical order).
fn find_divisor(target: &HomogeneousForm, k: u32) -> Option<HomogeneousForm> {
    let f = target.field();
    let n = target.nvars();
    let mons = monomials(n, k);
    let elems = f.elements();
    let q = elems.len() as u64;
    let terms = target.terms();
    let lead = terms.first()?.0.clone();
    let trail = terms.last()?.0.clone();
    for i in 0..mons.len() {
        if !divides(&mons[i], &lead) {
            continue;
        }
        let free = mons.len() - i - 1;
        let count = q.pow(free as u32);
        let build = |mut idx: u64| {
            let mut ts = Vec::with_capacity(free + 1);
            ts.push((mons[i].clone(), Elem::ONE));
            for slot in (i + 1..mons.len()).rev() {
                let c = elems[(idx % q) as usize];
                idx /= q;
                if !c.is_zero() {
                    ts.push((mons[slot].clone(), c));
                }
            }
            HomogeneousForm::from_terms(f.clone(), n, k, ts)
        };
        let found = (0..count).into_par_iter().find_first(|&idx| {
            let g = build(idx);
            let last = g.terms().last().map(|t| t.0.clone()).unwrap();
            divides(&last, &trail) && target.div_exact(&g).is_some()
        });
        if let Some(idx) = found {
            return Some(build(idx));
        }
    }
    None
}

/// Complete factorization over the form's own field by trial division.
/// Cofactors whose degree puts trial division out of reach are accepted as
/// irreducible only with a line certificate; otherwise the search bound is
/// reported.
pub fn factor(form: &HomogeneousForm) -> Result<Factorization> {
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    let f = form.field().clone();
    let n = form.nvars();
    let unit = form.terms()[0].1;
    let mut rest = form.normalized();
    let mut factors: Vec<(HomogeneousForm, u32)> = Vec::new();
    let mut k = 1;
    while rest.degree() >= 2 * k {
        let count = candidate_count(f.size() as u128, monomials(n, k).len());
        if count > SEARCH_BOUND {
            if line_certificate(&rest, 0xfac7).is_some() {
                break;
            }
            return Err(Error::SearchSpaceExceeded { what: format!("degree-{k} divisor search"), size: count, bound: SEARCH_BOUND });
        }
        match find_divisor(&rest, k) {
            Some(g) => {
                rest = rest.div_exact(&g).unwrap().normalized();
                match factors.iter_mut().find(|(h, _)| *h == g) {
                    Some(entry) => entry.1 += 1,
                    None => factors.push((g, 1)),
                }
            }
            None => k += 1,
        }
    }
    if rest.degree() >= 1 {
        match factors.iter_mut().find(|(h, _)| *h == rest) {
            Some(entry) => entry.1 += 1,
            None => factors.push((rest, 1)),
        }
    }
    let out = Factorization { unit, factors };
    debug_assert_eq!(&out.expand(&f, n), form);
    Ok(out)
}

/// Factorizations over `F_{q^s}` for `s = 1..=s_max` (levels whose field
/// would exceed the size bound are skipped).
pub fn factor_absolute(form: &HomogeneousForm, s_max: u32) -> Result<Vec<(u32, Factorization)>> {
    let mut out = Vec::new();
    for s in 1..=s_max {
        let Ok(ext) = form.field().extension(s) else { break };
        out.push((s, factor(&form.embed(&ext)?)?));
    }
    Ok(out)
}

/// Searches for a line whose restriction is irreducible of full degree.
/// Returns the line `(u, v)` on success.
pub fn line_certificate(form: &HomogeneousForm, seed: u64) -> Option<(Vec<Elem>, Vec<Elem>)> {
    let d = form.degree();
    if d == 0 || form.is_zero() {
        return None;
    }
    let f = form.field();
    let n = form.nvars();
    if d == 1 {
        return Some((vec![Elem::ZERO; n], vec![Elem::ONE; n]));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((f.size() as u64) << 32) ^ d as u64);
    let q = f.size();
    let trials = 64 + 24 * d as usize;
    for _ in 0..trials {
        let u: Vec<Elem> = (0..n).map(|_| f.elements()[rng.gen_range(0..q) as usize]).collect();
        let v: Vec<Elem> = (0..n).map(|_| f.elements()[rng.gen_range(0..q) as usize]).collect();
        if form.eval(&v).is_zero() {
            continue;
        }
        let uni = form.restrict_to_line(&u, &v);
        if uni.degree() == Some(d as usize) && uni.is_irreducible(f) {
            return Some((u, v));
        }
    }
    None
}

/// Cheap reducibility evidence: a linear factor found by a small search.
fn has_small_linear_factor(form: &HomogeneousForm) -> bool {
    let count = candidate_count(form.field().size() as u128, form.nvars());
    count <= 200_000 && form.degree() >= 2 && find_divisor(form, 1).is_some()
}

/// Irreducibility over the base field and each swept extension.
pub fn certify_irreducible(form: &HomogeneousForm, s_max: u32, seed: u64) -> Result<IrreducibilityCertificate> {
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    let mut levels: Vec<(u32, Status)> = Vec::new();
    for s in 1..=s_max {
        let Ok(ext) = form.field().extension(s) else { break };
        if levels.iter().any(|&(_, st)| st == Status::Reducible) {
            levels.push((s, Status::Reducible));
            continue;
        }
        let g = form.embed(&ext)?;
        let status = if g.degree() == 0 {
            Status::Reducible
        } else if line_certificate(&g, seed.wrapping_add(s as u64)).is_some() {
            Status::Irreducible
        } else if has_small_linear_factor(&g) {
            Status::Reducible
        } else {
            Status::Unknown
        };
        levels.push((s, status));
    }
    // irreducible over F_{q^s} implies irreducible over F_{q^t} for t | s
    let proven: Vec<u32> = levels.iter().filter(|l| l.1 == Status::Irreducible).map(|l| l.0).collect();
    for (t, st) in levels.iter_mut() {
        if *st == Status::Unknown && proven.iter().any(|s| s % *t == 0) {
            *st = Status::Irreducible;
        }
    }
    let base = if !proven.is_empty() {
        Status::Irreducible
    } else if levels.first().map(|l| l.1) == Some(Status::Reducible) {
        Status::Reducible
    } else {
        match factor(form) {
            Ok(fac) if fac.is_irreducible() => Status::Irreducible,
            Ok(_) => Status::Reducible,
            Err(_) => Status::Unknown,
        }
    };
    let absolute = if levels.iter().any(|l| l.1 == Status::Reducible) || base == Status::Reducible {
        Status::Reducible
    } else if levels.iter().all(|l| l.1 == Status::Irreducible) {
        Status::Irreducible
    } else {
        Status::Unknown
    };
    if let Some(first) = levels.first_mut() {
        if first.1 == Status::Unknown {
            first.1 = base;
        }
    }
    let checked_up_to = levels.last().map_or(0, |l| l.0);
    Ok(IrreducibilityCertificate { base, absolute, levels, checked_up_to })
}
