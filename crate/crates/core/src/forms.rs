//! Sparse homogeneous polynomials in `X0..X{nvars-1}`.
//!
//! Exponent vectors are packed into a `u64`, one byte per variable with
//! `X0` in the most significant used byte, so integer order on keys is
//! lexicographic order on exponent vectors and monomial products are key
//! sums. This limits forms to at most 8 variables and degree 255.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::group::MatrixGroup;
use crate::linalg::Matrix;
use crate::upoly::UPoly;

pub const MAX_VARS: usize = 8;
pub const MAX_DEGREE: u32 = 255;

#[derive(Clone, PartialEq, Eq)]
pub struct HomogeneousForm {
    field: FieldSpec,
    nvars: usize,
    degree: u32,
    terms: BTreeMap<u64, Elem>,
}

fn shift_of(nvars: usize, i: usize) -> u32 {
    8 * (nvars - 1 - i) as u32
}

fn pack(exps: &[u16]) -> u64 {
    let n = exps.len();
    exps.iter().enumerate().fold(0u64, |acc, (i, &e)| {
        assert!(e <= MAX_DEGREE as u16, "exponent {e} exceeds {MAX_DEGREE}");
        acc | ((e as u64) << shift_of(n, i))
    })
}

fn exp_at(key: u64, nvars: usize, i: usize) -> u32 {
    ((key >> shift_of(nvars, i)) & 0xff) as u32
}

fn unpack(key: u64, nvars: usize) -> Vec<u16> {
    (0..nvars).map(|i| exp_at(key, nvars, i) as u16).collect()
}

impl fmt::Debug for HomogeneousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomogeneousForm({}; {})", self.field, self)
    }
}

impl fmt::Display for HomogeneousForm {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let mut first = true;
        for (&key, &c) in self.terms.iter().rev() {
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let vars: Vec<String> = (0..self.nvars)
                .filter_map(|i| match exp_at(key, self.nvars, i) {
                    0 => None,
                    1 => Some(format!("X{i}")),
                    e => Some(format!("X{i}^{e}")),
                })
                .collect();
            let cs = self.field.format(c);
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            match (vars.is_empty(), c == Elem::ONE) {
                (true, _) => write!(out, "{cs}")?,
                (false, true) => write!(out, "{}", vars.join("*"))?,
                (false, false) => write!(out, "{cs}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

impl HomogeneousForm {
    /// Builds a form, summing repeated monomials and dropping zeros.
    pub fn from_terms(field: FieldSpec, nvars: usize, degree: u32, terms: Vec<(Vec<u16>, Elem)>) -> HomogeneousForm {
        assert!((1..=MAX_VARS).contains(&nvars), "unsupported variable count {nvars}");
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        let mut map = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), nvars);
            assert_eq!(exps.iter().map(|&e| e as u32).sum::<u32>(), degree, "inhomogeneous term");
            let entry = map.entry(pack(&exps)).or_insert(Elem::ZERO);
            *entry = field.add(*entry, c);
        }
        map.retain(|_, c: &mut Elem| !c.is_zero());
        HomogeneousForm { field, nvars, degree, terms: map }
    }

    fn from_map(field: &FieldSpec, nvars: usize, degree: u32, mut terms: BTreeMap<u64, Elem>) -> HomogeneousForm {
        terms.retain(|_, c| !c.is_zero());
        HomogeneousForm { field: field.clone(), nvars, degree, terms }
    }

    pub fn zero(field: &FieldSpec, nvars: usize, degree: u32) -> HomogeneousForm {
        HomogeneousForm::from_map(field, nvars, degree, BTreeMap::new())
    }

    pub fn constant(field: &FieldSpec, nvars: usize, c: Elem) -> HomogeneousForm {
        HomogeneousForm::from_map(field, nvars, 0, BTreeMap::from([(0, c)]))
    }

    pub fn one(field: &FieldSpec, nvars: usize) -> HomogeneousForm {
        HomogeneousForm::constant(field, nvars, Elem::ONE)
    }

    pub fn monomial(field: &FieldSpec, exps: &[u16], c: Elem) -> HomogeneousForm {
        let degree = exps.iter().map(|&e| e as u32).sum();
        HomogeneousForm::from_terms(field.clone(), exps.len(), degree, vec![(exps.to_vec(), c)])
    }

    pub fn var(field: &FieldSpec, nvars: usize, i: usize) -> HomogeneousForm {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        HomogeneousForm::monomial(field, &exps, Elem::ONE)
    }

    /// `sum coeffs[i] X_i`.
    pub fn linear(field: &FieldSpec, coeffs: &[Elem]) -> HomogeneousForm {
        let n = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, c)
            })
            .collect();
        HomogeneousForm::from_terms(field.clone(), n, 1, terms)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u16]) -> Elem {
        self.terms.get(&pack(exps)).copied().unwrap_or(Elem::ZERO)
    }

    /// Terms in descending lexicographic order of exponents.
    pub fn terms(&self) -> Vec<(Vec<u16>, Elem)> {
        self.terms.iter().rev().map(|(&k, &c)| (unpack(k, self.nvars), c)).collect()
    }

    /// Coefficients of a linear form.
    pub fn linear_coeffs(&self) -> Option<Vec<Elem>> {
        if self.degree != 1 {
            return None;
        }
        Some((0..self.nvars).map(|i| self.coeff(&unit_exps(self.nvars, i))).collect())
    }

    fn check_compatible(&self, other: &HomogeneousForm) {
        assert_eq!(self.field, other.field, "forms over different fields");
        assert_eq!(self.nvars, other.nvars, "forms in different variable counts");
    }

    pub fn add(&self, other: &HomogeneousForm) -> HomogeneousForm {
        self.check_compatible(other);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        assert_eq!(self.degree, other.degree, "adding forms of different degrees");
        let f = &self.field;
        let mut terms = self.terms.clone();
        for (&k, &c) in &other.terms {
            let e = terms.entry(k).or_insert(Elem::ZERO);
            *e = f.add(*e, c);
        }
        HomogeneousForm::from_map(f, self.nvars, self.degree, terms)
    }

    pub fn neg(&self) -> HomogeneousForm {
        self.scale(self.field.neg(Elem::ONE))
    }

    pub fn sub(&self, other: &HomogeneousForm) -> HomogeneousForm {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Elem) -> HomogeneousForm {
        let terms = self.terms.iter().map(|(&k, &a)| (k, self.field.mul(a, c))).collect();
        HomogeneousForm::from_map(&self.field, self.nvars, self.degree, terms)
    }

    pub fn mul(&self, other: &HomogeneousForm) -> HomogeneousForm {
        self.check_compatible(other);
        let degree = self.degree + other.degree;
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        let f = &self.field;
        let mut acc: HashMap<u64, Elem> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (&ka, &ca) in &self.terms {
            for (&kb, &cb) in &other.terms {
                let e = acc.entry(ka + kb).or_insert(Elem::ZERO);
                *e = f.add(*e, f.mul(ca, cb));
            }
        }
        HomogeneousForm::from_map(f, self.nvars, degree, acc.into_iter().collect())
    }

    pub fn pow(&self, e: u32) -> HomogeneousForm {
        let mut acc = HomogeneousForm::one(&self.field, self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, point: &[Elem]) -> Elem {
        assert_eq!(point.len(), self.nvars);
        let f = &self.field;
        let d = self.degree as usize;
        let powers: Vec<Vec<Elem>> = point
            .iter()
            .map(|&x| {
                let mut v = Vec::with_capacity(d + 1);
                let mut acc = Elem::ONE;
                for _ in 0..=d {
                    v.push(acc);
                    acc = f.mul(acc, x);
                }
                v
            })
            .collect();
        self.terms.iter().fold(Elem::ZERO, |acc, (&k, &c)| {
            let mono = (0..self.nvars).fold(c, |m, i| f.mul(m, powers[i][exp_at(k, self.nvars, i) as usize]));
            f.add(acc, mono)
        })
    }

    /// `dF/dX_i`.
    pub fn derivative(&self, i: usize) -> HomogeneousForm {
        let f = &self.field;
        let mut terms = BTreeMap::new();
        let unit = 1u64 << shift_of(self.nvars, i);
        for (&k, &c) in &self.terms {
            let e = exp_at(k, self.nvars, i);
            if e == 0 {
                continue;
            }
            terms.insert(k - unit, f.mul(c, f.scalar(e as u64)));
        }
        HomogeneousForm::from_map(f, self.nvars, self.degree.saturating_sub(1), terms)
    }

    pub fn embed(&self, target: &FieldSpec) -> Result<HomogeneousForm> {
        let emb = self.field.embedding_to(target)?;
        let terms = self.terms.iter().map(|(&k, &c)| (k, emb.apply(c))).collect();
        Ok(HomogeneousForm::from_map(target, self.nvars, self.degree, terms))
    }

    /// Substitutes `X_j -> sum_i images[j][i] Y_i` into a form in
    /// `images[0].len()` variables.
    pub fn substitute(&self, images: &[Vec<Elem>]) -> HomogeneousForm {
        assert_eq!(images.len(), self.nvars);
        let new_n = images.first().map_or(self.nvars, Vec::len);
        let f = &self.field;
        let lin: Vec<HomogeneousForm> = images.iter().map(|row| HomogeneousForm::linear(f, row)).collect();
        let mut powers: Vec<Vec<HomogeneousForm>> = lin.iter().map(|l| vec![HomogeneousForm::one(f, new_n), l.clone()]).collect();
        let mut acc: HashMap<u64, Elem> = HashMap::new();
        // group terms by their exponent prefix to share partial products
        let mut prefix_cache: HashMap<(usize, u64), HomogeneousForm> = HashMap::new();
        for (&key, &c) in &self.terms {
            let mut prod = HomogeneousForm::one(f, new_n);
            let mut prefix = 0u64;
            for (j, pw) in powers.iter_mut().enumerate() {
                let e = exp_at(key, self.nvars, j) as usize;
                prefix |= (e as u64) << shift_of(self.nvars, j);
                if let Some(p) = prefix_cache.get(&(j, prefix)) {
                    prod = p.clone();
                    continue;
                }
                while pw.len() <= e {
                    let next = pw[pw.len() - 1].mul(&pw[1]);
                    pw.push(next);
                }
                if e > 0 {
                    prod = prod.mul(&pw[e]);
                }
                if j + 1 < self.nvars {
                    prefix_cache.insert((j, prefix), prod.clone());
                }
            }
            for (&k, &v) in &prod.terms {
                let entry = acc.entry(k).or_insert(Elem::ZERO);
                *entry = f.add(*entry, f.mul(v, c));
            }
        }
        HomogeneousForm::from_map(f, new_n, self.degree, acc.into_iter().collect())
    }

    /// `A^* F`: row `j` of `A` replaces `X_{j}`, so `act(AB, F) = act(B, act(A, F))`.
    pub fn act(&self, a: &Matrix) -> Result<HomogeneousForm> {
        if a.size() != self.nvars {
            return Err(Error::SizeMismatch);
        }
        if a.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.substitute(&a.rows()))
    }

    /// Largest exponent of `X0`, or `None` for the zero form.
    pub fn max_x0_exponent(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|&k| exp_at(k, self.nvars, 0))
    }

    /// Exponents of `X0` occurring in the form, ascending.
    pub fn x0_exponents(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.terms.keys().map(|&k| exp_at(k, self.nvars, 0)).collect();
        v.dedup();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The coefficient of `X0^e` as a form in the remaining variables (kept
    /// in the same variable count, with `X0` absent).
    pub fn x0_coefficient(&self, e: u32) -> HomogeneousForm {
        let unit = (e as u64) << shift_of(self.nvars, 0);
        let terms = self.terms.iter().filter(|(&k, _)| exp_at(k, self.nvars, 0) == e).map(|(&k, &c)| (k - unit, c)).collect();
        HomogeneousForm::from_map(&self.field, self.nvars, self.degree.saturating_sub(e), terms)
    }

    pub fn involves_x0(&self) -> bool {
        self.max_x0_exponent().is_some_and(|e| e > 0)
    }

    /// Leading term in lexicographic order.
    fn leading(&self) -> Option<(u64, Elem)> {
        self.terms.iter().next_back().map(|(&k, &c)| (k, c))
    }

    /// Scaled so the lexicographically first coefficient is 1.
    pub fn normalized(&self) -> HomogeneousForm {
        match self.leading() {
            Some((_, c)) => self.scale(self.field.inv(c).unwrap()),
            None => self.clone(),
        }
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide.
    pub fn div_exact(&self, g: &HomogeneousForm) -> Option<HomogeneousForm> {
        self.check_compatible(g);
        let (lk, lc) = g.leading()?;
        if self.is_zero() {
            return Some(HomogeneousForm::zero(&self.field, self.nvars, self.degree.saturating_sub(g.degree)));
        }
        if g.degree > self.degree {
            return None;
        }
        let f = &self.field;
        let inv = f.inv(lc).unwrap();
        let n = self.nvars;
        let divides = |a: u64, b: u64| (0..n).all(|i| exp_at(a, n, i) <= exp_at(b, n, i));
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((&k, &c)) = rem.iter().next_back() {
            if !divides(lk, k) {
                return None;
            }
            let qk = k - lk;
            let qc = f.mul(c, inv);
            quot.insert(qk, qc);
            for (&gk, &gc) in &g.terms {
                let e = rem.entry(qk + gk).or_insert(Elem::ZERO);
                *e = f.sub(*e, f.mul(qc, gc));
                if e.is_zero() {
                    rem.remove(&(qk + gk));
                }
            }
        }
        Some(HomogeneousForm::from_map(f, n, self.degree - g.degree, quot))
    }

    /// Drops variable `i`, which must not occur.
    pub fn drop_var(&self, i: usize) -> HomogeneousForm {
        let n = self.nvars;
        let terms = self
            .terms
            .iter()
            .map(|(&k, &c)| {
                assert_eq!(exp_at(k, n, i), 0, "dropped variable occurs");
                let mut e = unpack(k, n);
                e.remove(i);
                (pack(&e), c)
            })
            .collect();
        HomogeneousForm::from_map(&self.field, n - 1, self.degree, terms)
    }

    /// Inserts a new variable at position `i` with exponent 0 everywhere.
    pub fn insert_var(&self, i: usize) -> HomogeneousForm {
        let n = self.nvars;
        let terms = self
            .terms
            .iter()
            .map(|(&k, &c)| {
                let mut e = unpack(k, n);
                e.insert(i, 0);
                (pack(&e), c)
            })
            .collect();
        HomogeneousForm::from_map(&self.field, n + 1, self.degree, terms)
    }

    /// Univariate `F(u + T v)`.
    pub fn restrict_to_line(&self, u: &[Elem], v: &[Elem]) -> UPoly {
        let f = &self.field;
        let d = self.degree as usize;
        let powers: Vec<Vec<UPoly>> = u
            .iter()
            .zip(v)
            .map(|(&a, &b)| {
                let lin = UPoly::new(vec![a, b]);
                let mut out = vec![UPoly::constant(Elem::ONE)];
                for i in 0..d {
                    let next = out[i].mul(f, &lin);
                    out.push(next);
                }
                out
            })
            .collect();
        let mut acc = UPoly::zero();
        for (&k, &c) in &self.terms {
            let mut prod = UPoly::constant(c);
            for (i, pw) in powers.iter().enumerate() {
                let e = exp_at(k, self.nvars, i) as usize;
                if e > 0 {
                    prod = prod.mul(f, &pw[e]);
                }
            }
            acc = acc.add(f, &prod);
        }
        acc
    }
}

fn unit_exps(n: usize, i: usize) -> Vec<u16> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// `prod_{h in G} h^* X0`.
pub fn orbit_product(group: &MatrixGroup) -> Result<HomogeneousForm> {
    if !group.is_ut_star() {
        return Err(Error::NotUTStar);
    }
    let f = group.field();
    let n = group.size();
    Ok(group
        .elements()
        .iter()
        .fold(HomogeneousForm::one(f, n), |acc, h| acc.mul(&HomogeneousForm::linear(f, h.row(0)))))
}

/// Multiplicity of `{F = 0}` at `[1:0:...:0]`.
pub fn multiplicity_at_center(form: &HomogeneousForm) -> Result<u32> {
    match form.max_x0_exponent() {
        None => Err(Error::ZeroForm),
        Some(0) => Err(Error::DegenerateCone),
        Some(e) => Ok(form.degree() - e),
    }
}

/// Result of eliminating one variable via a linear equation.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub form: HomogeneousForm,
    /// Index of the eliminated variable.
    pub eliminated: usize,
    /// Original indices of the remaining variables, in order.
    pub kept: Vec<usize>,
}

impl Restriction {
    /// Lifts a point of the hyperplane (in the kept coordinates) back to the
    /// ambient space.
    pub fn lift_point(&self, linear: &[Elem], pt: &[Elem]) -> Vec<Elem> {
        let f = self.form.field();
        let j = self.eliminated;
        let inv = f.inv(linear[j]).unwrap();
        let mut out = vec![Elem::ZERO; self.kept.len() + 1];
        let mut acc = Elem::ZERO;
        for (pos, &i) in self.kept.iter().enumerate() {
            out[i] = pt[pos];
            acc = f.add(acc, f.mul(linear[i], pt[pos]));
        }
        out[j] = f.neg(f.mul(acc, inv));
        out
    }
}

/// Restricts `F` to `{L = 0}` by solving for the largest-index variable
/// with nonzero coefficient in `L`.
pub fn restrict_to_hyperplane(form: &HomogeneousForm, linear: &[Elem]) -> Result<Restriction> {
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    assert_eq!(linear.len(), form.nvars());
    let f = form.field();
    let j = (0..linear.len()).rev().find(|&i| !linear[i].is_zero()).ok_or(Error::ZeroForm)?;
    let kept: Vec<usize> = (0..linear.len()).filter(|&i| i != j).collect();
    let inv = f.inv(linear[j]).unwrap();
    let images: Vec<Vec<Elem>> = (0..linear.len())
        .map(|i| {
            if i == j {
                kept.iter().map(|&c| f.neg(f.mul(linear[c], inv))).collect()
            } else {
                kept.iter().map(|&c| if c == i { Elem::ONE } else { Elem::ZERO }).collect()
            }
        })
        .collect();
    Ok(Restriction { form: form.substitute(&images), eliminated: j, kept })
}

/// Projective points of `P^{dim-1}` over `f`, normalized so the first
/// nonzero coordinate is 1, in canonical order.
pub fn projective_points(f: &FieldSpec, dim: usize) -> Vec<Vec<Elem>> {
    let elems = f.elements();
    let mut out = Vec::new();
    for lead in 0..dim {
        let free = dim - lead - 1;
        let count = (elems.len() as u64).pow(free as u32);
        for mut idx in 0..count {
            let mut pt = vec![Elem::ZERO; dim];
            pt[lead] = Elem::ONE;
            for slot in (lead + 1..dim).rev() {
                pt[slot] = elems[(idx % elems.len() as u64) as usize];
                idx /= elems.len() as u64;
            }
            out.push(pt);
        }
    }
    out
}

/// Singular points of a plane curve over the degree-`s` extension.
pub fn singular_points_curve(form: &HomogeneousForm, s: u32) -> Result<Vec<Vec<Elem>>> {
    if form.nvars() != 3 {
        return Err(Error::UnsupportedDimension(form.nvars()));
    }
    let ext = form.field().extension(s)?;
    let size = (ext.size() as u128).pow(3);
    if size > SEARCH_BOUND {
        return Err(Error::SearchSpaceExceeded { what: "singular point scan".into(), size, bound: SEARCH_BOUND });
    }
    let g = form.embed(&ext)?;
    let partials: Vec<HomogeneousForm> = (0..3).map(|i| g.derivative(i)).collect();
    Ok(projective_points(&ext, 3)
        .into_iter()
        .filter(|pt| g.eval(pt).is_zero() && partials.iter().all(|d| d.eval(pt).is_zero()))
        .collect())
}

/// Per-degree bound on exhaustive searches.
pub const SEARCH_BOUND: u128 = 10_000_000;

pub use crate::factor::{certify_irreducible, factor, factor_absolute, Factorization, IrreducibilityCertificate, Status};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::group::closure;
    use crate::text::parse_form;

    fn form(text: &str, f: &FieldSpec, n: usize) -> HomogeneousForm {
        parse_form(text, f, Some(n)).unwrap()
    }

    #[test]
    fn act_examples() {
        let f5 = make_field(5, 1).unwrap();
        let g = form("X0*X2", &f5, 3);
        assert_eq!(g.act(&Matrix::identity(&f5, 3)).unwrap(), g);
        let d = Matrix::diag(&f5, &[Elem(2), Elem::ONE, Elem::ONE]);
        assert_eq!(g.act(&d).unwrap(), form("2*X0*X2", &f5, 3));
        let f3 = make_field(3, 1).unwrap();
        let sq = form("X0^2", &f3, 3);
        let e12 = Matrix::transvection(&f3, 3, 0, 1, Elem::ONE);
        assert_eq!(sq.act(&e12).unwrap(), form("X0^2 + 2*X0*X1 + X1^2", &f3, 3));
        assert_eq!(sq.act(&Matrix::identity(&f3, 4)).unwrap_err(), Error::SizeMismatch);
    }

    #[test]
    fn contravariance() {
        let f3 = make_field(3, 1).unwrap();
        let a = Matrix::from_ints(&f3, &[&[1, 2, 0], &[0, 2, 1], &[1, 0, 1]]).unwrap();
        let b = Matrix::from_ints(&f3, &[&[2, 0, 1], &[1, 1, 0], &[0, 1, 2]]).unwrap();
        let g = form("X0^3*X2 + 2*X0*X2^3 + X1^4 + X0*X1^2*X2", &f3, 3);
        assert_eq!(g.act(&a.mul(&b)).unwrap(), g.act(&a).unwrap().act(&b).unwrap());
    }

    #[test]
    fn orbit_products() {
        let f3 = make_field(3, 1).unwrap();
        let trivial = MatrixGroup::trivial(&f3, 3);
        assert_eq!(orbit_product(&trivial).unwrap(), form("X0", &f3, 3));
        let tr = closure(&[Matrix::transvection(&f3, 3, 0, 1, Elem::ONE)], 10).unwrap();
        assert_eq!(orbit_product(&tr).unwrap(), form("X0^3 + 2*X0*X1^2", &f3, 3));
        let f4 = make_field(2, 2).unwrap();
        let c3 = closure(&[Matrix::diag(&f4, &[f4.gen_t().unwrap(), Elem::ONE, Elem::ONE])], 10).unwrap();
        assert_eq!(orbit_product(&c3).unwrap(), form("X0^3", &f4, 3));
    }

    #[test]
    fn orbit_product_is_invariant() {
        let f4 = make_field(2, 2).unwrap();
        let t = f4.gen_t().unwrap();
        let g = closure(
            &[
                Matrix::diag(&f4, &[t, Elem::ONE, Elem::ONE]),
                Matrix::transvection(&f4, 3, 0, 1, Elem::ONE),
                Matrix::transvection(&f4, 3, 0, 1, t),
            ],
            100,
        )
        .unwrap();
        let prod = orbit_product(&g).unwrap();
        assert_eq!(prod.degree(), 12);
        for h in g.elements() {
            assert_eq!(prod.act(h).unwrap(), prod);
        }
        // support starts at X0^3 since im(phi) has order 3
        assert_eq!(prod.x0_exponents().first(), Some(&3));
        assert!(!prod.x0_coefficient(3).is_zero());
    }

    #[test]
    fn multiplicity_examples() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(multiplicity_at_center(&form("X1*X0^3 + X1^4", &f3, 3)).unwrap(), 1);
        assert_eq!(multiplicity_at_center(&form("X0^4 + X1^4", &f3, 3)).unwrap(), 0);
        assert_eq!(multiplicity_at_center(&form("X1^4 + X2^4", &f3, 3)).unwrap_err(), Error::DegenerateCone);
    }

    #[test]
    fn restriction_examples() {
        let f3 = make_field(3, 1).unwrap();
        let z = [Elem::ZERO, Elem::ZERO, Elem::ONE];
        let r = restrict_to_hyperplane(&form("X0^2 + X1*X2", &f3, 3), &z).unwrap();
        assert_eq!(r.form, form("X0^2", &f3, 2));
        assert_eq!(r.kept, vec![0, 1]);
        let quartic = form("X0^3*X2 - X0*X2^3 + X1^4", &f3, 3);
        let r = restrict_to_hyperplane(&quartic, &z).unwrap();
        assert_eq!(r.form, form("X1^4", &f3, 2));
        // one remaining variable: the restriction is its square
        let r = restrict_to_hyperplane(&form("X0^2", &f3, 2), &[Elem::ONE, Elem::ONE]).unwrap();
        assert_eq!(r.form, form("X0^2", &f3, 1));
        assert_eq!(r.kept.len(), 1);
        assert_eq!(restrict_to_hyperplane(&HomogeneousForm::zero(&f3, 2, 2), &[Elem::ONE, Elem::ONE]).unwrap_err(), Error::ZeroForm);
    }

    #[test]
    fn restriction_points_lie_on_hyperplane() {
        let f5 = make_field(5, 1).unwrap();
        let lin = [Elem(1), Elem(2), Elem(3)];
        let g = form("X0^2*X1 + 3*X1*X2^2 + X2^3", &f5, 3);
        let r = restrict_to_hyperplane(&g, &lin).unwrap();
        for pt in projective_points(&f5, 2) {
            let lifted = r.lift_point(&lin, &pt);
            let on_h = lin.iter().zip(&lifted).fold(Elem::ZERO, |a, (&c, &x)| f5.add(a, f5.mul(c, x)));
            assert!(on_h.is_zero());
            assert_eq!(g.eval(&lifted), r.form.eval(&pt));
        }
    }

    #[test]
    fn singular_points() {
        let f5 = make_field(5, 1).unwrap();
        assert!(singular_points_curve(&form("X0^4 + X1^4 + X2^4", &f5, 3), 2).unwrap().is_empty());
        let f3 = make_field(3, 1).unwrap();
        let nc = singular_points_curve(&form("X0*X1*X2", &f3, 3), 1).unwrap();
        assert_eq!(nc.len(), 3);
        let quartic = form("X0^3*X2 - X0*X2^3 + X1^4", &f3, 3);
        assert!(singular_points_curve(&quartic, 2).unwrap().is_empty());
    }

    #[test]
    fn exact_division() {
        let f3 = make_field(3, 1).unwrap();
        let a = form("X0 + X1", &f3, 2);
        let b = form("X0 + 2*X1", &f3, 2);
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(form("X0^2 + X1^2", &f3, 2).div_exact(&a).is_none());
    }

    #[test]
    fn display_round_trip() {
        let f9 = make_field(3, 2).unwrap();
        let g = form("(2*t+1)*X0^2*X1 + t*X1^3 + 2*X0*X1*X2", &f9, 3);
        assert_eq!(parse_form(&g.to_string(), &f9, Some(3)).unwrap(), g);
    }
}
