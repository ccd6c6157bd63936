//! Finite fields `F_{p^k}` with a canonical modulus.
//!
//! Elements are stored as a `u32` index encoding the coefficient vector of
//! the representative polynomial in base `p` (index = `sum c_i p^i`). The
//! zero element has index 0 and the unit has index 1, so the prime subfield
//! maps to the integers `0..p`. Multiplication goes through log/antilog
//! tables and addition through a Zech table, so both are constant time.
//!
//! Two fields with the same `(p, k)` are always the same object: the modulus
//! is the lexicographically smallest monic irreducible polynomial, with
//! coefficients compared from the constant term upwards, and fields are
//! interned in a process-wide cache.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::upoly::UPoly;

/// Default cap on `p^k`.
pub const DEFAULT_SIZE_BOUND: u64 = 1 << 20;
/// Default number of extension levels swept when something may need the
/// algebraic closure.
pub const DEFAULT_S_MAX: u32 = 4;

const NO_LOG: u32 = u32::MAX;

/// An element of some [`FieldSpec`]; the field is carried separately.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Raw table index (`sum c_i p^i`).
    pub fn index(self) -> u32 {
        self.0
    }
}

struct FieldData {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, low degree first; empty for prime fields.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    log_neg_one: u32,
    generator: u32,
}

/// An explicit finite field `F_{p^k}`.
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldData>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.k == other.0.k
    }
}
impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec({})", self)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={},k={}", self.0.p, self.0.k)
    }
}

fn field_cache() -> &'static Mutex<HashMap<(u32, u32), FieldSpec>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), FieldSpec>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Builds (or fetches) the canonical field `F_{p^k}` with the default size bound.
pub fn make_field(p: u64, k: u32) -> Result<FieldSpec> {
    make_field_bounded(p, k, DEFAULT_SIZE_BOUND)
}

pub fn make_field_bounded(p: u64, k: u32, bound: u64) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::ParameterViolation("extension degree must be at least 1".into()));
    }
    let size = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
    if size > bound as u128 || size > u32::MAX as u128 {
        return Err(Error::SizeBoundExceeded { p, k, bound });
    }
    let key = (p as u32, k);
    if let Some(f) = field_cache().lock().unwrap().get(&key) {
        return Ok(f.clone());
    }
    let field = if k == 1 {
        build_field(p as u32, 1, Vec::new())?
    } else {
        let prime = make_field_bounded(p, 1, bound)?;
        let modulus = canonical_modulus(&prime, k);
        build_field(p as u32, k, modulus)?
    };
    let mut cache = field_cache().lock().unwrap();
    Ok(cache.entry(key).or_insert(field).clone())
}

/// Parses the field format string `p=3,k=2`.
pub fn parse_field(text: &str) -> Result<FieldSpec> {
    let mut p = None;
    let mut k = None;
    for part in text.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Syntax(format!("bad field string `{text}`")))?;
        let value: u64 = value
            .trim()
            .parse()
            .map_err(|_| Error::Syntax(format!("bad field string `{text}`")))?;
        match key.trim() {
            "p" => p = Some(value),
            "k" => k = Some(value as u32),
            other => return Err(Error::Syntax(format!("unknown field key `{other}`"))),
        }
    }
    let p = p.ok_or_else(|| Error::Syntax(format!("field string `{text}` lacks p")))?;
    make_field(p, k.unwrap_or(1))
}

/// Lexicographic scan of monic degree-`k` polynomials over `F_p`, comparing
/// coefficient sequences from the constant term up.
fn canonical_modulus(prime: &FieldSpec, k: u32) -> Vec<u32> {
    let p = prime.p();
    let total = (p as u64).pow(k);
    for v in 0..total {
        // most significant digit of v is the constant coefficient
        let mut coeffs = vec![0u32; k as usize + 1];
        let mut rest = v;
        for i in (0..k as usize).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[k as usize] = 1;
        if coeffs[0] == 0 {
            continue;
        }
        let poly = UPoly::new(coeffs.iter().map(|&c| Elem(c)).collect());
        if poly.is_irreducible(prime) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn digits(mut idx: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = vec![0; k as usize];
    for d in out.iter_mut() {
        *d = idx % p;
        idx /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

fn raw_mul(a: u32, b: u32, p: u32, k: u32, modulus: &[u32]) -> u32 {
    if k == 1 {
        return ((a as u64 * b as u64) % p as u64) as u32;
    }
    let da = digits(a, p, k);
    let db = digits(b, p, k);
    let k = k as usize;
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for deg in (k..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &m) in modulus[..k].iter().enumerate() {
            let sub = c * m as u64 % p as u64;
            prod[deg - k + i] = (prod[deg - k + i] + p as u64 - sub) % p as u64;
        }
    }
    let out: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
    undigits(&out, p)
}

fn raw_pow(mut base: u32, mut e: u64, p: u32, k: u32, modulus: &[u32]) -> u32 {
    let mut acc = 1u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = raw_mul(acc, base, p, k, modulus);
        }
        base = raw_mul(base, base, p, k, modulus);
        e >>= 1;
    }
    acc
}

fn raw_add_one(a: u32, p: u32) -> u32 {
    let c0 = a % p;
    a - c0 + (c0 + 1) % p
}

fn build_field(p: u32, k: u32, modulus: Vec<u32>) -> Result<FieldSpec> {
    let q = p.pow(k);
    let q1 = q - 1;
    let factors = prime_factors(q1 as u64);
    // smallest index that generates the unit group
    let generator = (1..q)
        .find(|&g| factors.iter().all(|&r| raw_pow(g, q1 as u64 / r, p, k, &modulus) != 1))
        .ok_or_else(|| Error::InvariantViolation(format!("modulus for p={p},k={k} is not irreducible")))?;
    let mut exp = vec![0u32; 2 * q1 as usize + 1];
    let mut log = vec![NO_LOG; q as usize];
    let mut cur = 1u32;
    for i in 0..q1 {
        exp[i as usize] = cur;
        if log[cur as usize] != NO_LOG {
            return Err(Error::InvariantViolation(format!(
                "unit group of p={p},k={k} is not cyclic of order {q1}"
            )));
        }
        log[cur as usize] = i;
        cur = raw_mul(cur, generator, p, k, &modulus);
    }
    if cur != 1 || log.iter().skip(1).any(|&l| l == NO_LOG) {
        return Err(Error::InvariantViolation(format!("p={p},k={k}: generator order mismatch")));
    }
    for i in q1..2 * q1 + 1 {
        exp[i as usize] = exp[(i - q1) as usize];
    }
    let zech = (0..q1)
        .map(|i| {
            let s = raw_add_one(exp[i as usize], p);
            if s == 0 {
                NO_LOG
            } else {
                log[s as usize]
            }
        })
        .collect();
    let log_neg_one = if p == 2 { 0 } else { q1 / 2 };
    Ok(FieldSpec(Arc::new(FieldData { p, k, q, modulus, exp, log, zech, log_neg_one, generator })))
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    /// Number of elements `p^k`.
    pub fn size(&self) -> u32 {
        self.0.q
    }

    /// Monic modulus coefficients, low degree first (`None` for prime fields).
    pub fn modulus(&self) -> Option<&[u32]> {
        if self.0.k == 1 {
            None
        } else {
            Some(&self.0.modulus)
        }
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The generator `t` of an extension field.
    pub fn gen_t(&self) -> Option<Elem> {
        (self.0.k > 1).then_some(Elem(self.0.p))
    }

    /// Fixed primitive element used for the log tables.
    pub fn primitive_element(&self) -> Elem {
        Elem(self.0.generator)
    }

    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.0.k as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::ParameterViolation(format!("invalid coefficients for {self}")));
        }
        let mut ds = coeffs.to_vec();
        ds.resize(self.0.k as usize, 0);
        Ok(Elem(undigits(&ds, self.0.p)))
    }

    /// Coefficients of the representative polynomial, low degree first.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        digits(a.0, self.0.p, self.0.k)
    }

    /// Key realizing the canonical total order (lexicographic on the
    /// coefficient sequence, constant term most significant).
    pub fn order_key(&self, a: Elem) -> u32 {
        let ds = digits(a.0, self.0.p, self.0.k);
        ds.iter().fold(0u32, |acc, &d| acc * self.0.p + d)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> Vec<Elem> {
        let mut all: Vec<Elem> = (0..self.0.q).map(Elem).collect();
        all.sort_by_key(|&e| self.order_key(e));
        all
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.0.q
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let d = &*self.0;
        let la = d.log[a.0 as usize];
        let lb = d.log[b.0 as usize];
        let q1 = d.q - 1;
        let diff = if lb >= la { lb - la } else { lb + q1 - la };
        let z = d.zech[diff as usize];
        if z == NO_LOG {
            Elem::ZERO
        } else {
            Elem(d.exp[(la + z) as usize])
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if a.0 == 0 {
            return a;
        }
        let d = &*self.0;
        let l = d.log[a.0 as usize] + d.log_neg_one;
        Elem(d.exp[l as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let d = &*self.0;
        Elem(d.exp[(d.log[a.0 as usize] + d.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.0 == 0 {
            return None;
        }
        let d = &*self.0;
        let l = d.log[a.0 as usize];
        Some(Elem(d.exp[((d.q - 1 - l) % (d.q - 1)) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    /// `a^e` for a signed exponent (negative powers need `a != 0`).
    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let d = &*self.0;
        let q1 = (d.q - 1) as i64;
        let l = (d.log[a.0 as usize] as i64 * e.rem_euclid(q1)).rem_euclid(q1);
        Elem(d.exp[l as usize])
    }

    /// Discrete log with respect to [`FieldSpec::primitive_element`].
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a.0 != 0).then(|| self.0.log[a.0 as usize])
    }

    pub fn exp(&self, e: u64) -> Elem {
        Elem(self.0.exp[(e % (self.0.q as u64 - 1)) as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Elem) -> Option<u64> {
        let l = self.log(a)? as u64;
        let q1 = self.0.q as u64 - 1;
        Some(q1 / gcd(l, q1))
    }

    /// Integer `n` as a field element (image of `n` under `Z -> F_p`).
    pub fn scalar(&self, n: u64) -> Elem {
        Elem((n % self.0.p as u64) as u32)
    }

    /// The deterministic primitive `l`-th root of unity (smallest in the
    /// canonical order). `l = 1` gives the unit.
    pub fn primitive_root_of_unity(&self, l: u64) -> Result<Elem> {
        if l == 0 {
            return Err(Error::ParameterViolation("l must be positive".into()));
        }
        if l == 1 {
            return Ok(Elem::ONE);
        }
        let q1 = self.0.q as u64 - 1;
        if !q1.is_multiple_of(l) {
            return Err(Error::NoSuchRoot { l, q: self.0.q as u64 });
        }
        let step = q1 / l;
        (1..l)
            .filter(|&j| gcd(j, l) == 1)
            .map(|j| self.exp(j * step))
            .min_by_key(|&e| self.order_key(e))
            .ok_or(Error::NoSuchRoot { l, q: self.0.q as u64 })
    }

    /// The unique `y` with `y^p = x`, computed as `x^(p^(k-1))`.
    pub fn pth_root(&self, x: Elem) -> Elem {
        let mut acc = x;
        for _ in 0..self.0.k - 1 {
            acc = self.pow(acc, self.0.p as i64);
        }
        acc
    }

    /// Smallest (canonical order) `y` with `y^l = x`, if any.
    pub fn nth_root(&self, x: Elem, l: u64) -> Option<Elem> {
        if x.is_zero() {
            return Some(Elem::ZERO);
        }
        let q1 = self.0.q as u64 - 1;
        let lx = self.log(x)? as u64;
        let g = gcd(l % q1, q1);
        let g = if g == 0 { q1 } else { g };
        if !lx.is_multiple_of(g) {
            return None;
        }
        (0..q1)
            .filter(|&y| (y * (l % q1)) % q1 == lx)
            .map(|y| self.exp(y))
            .min_by_key(|&e| self.order_key(e))
    }

    /// `F_{p^(k s)}`.
    pub fn extension(&self, s: u32) -> Result<FieldSpec> {
        make_field(self.0.p as u64, self.0.k * s)
    }

    /// Cached embedding of this field into `target`.
    pub fn embedding_to(&self, target: &FieldSpec) -> Result<Arc<Embedding>> {
        embedding(self, target)
    }

    /// Text form: an integer in prime fields, a polynomial in `t` otherwise.
    pub fn format(&self, a: Elem) -> String {
        if self.0.k == 1 {
            return a.0.to_string();
        }
        let cs = self.coeffs(a);
        let mut parts = Vec::new();
        for (i, &c) in cs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    pub fn parse(&self, text: &str) -> Result<Elem> {
        crate::text::parse_element(text, self)
    }

    pub fn element(&self, a: Elem) -> FqElement {
        FqElement { field: self.clone(), value: a }
    }
}

/// Ring embedding `F_{p^k} -> F_{p^{ks}}` sending `t` to the smallest root of
/// the source modulus in the target.
#[derive(Debug)]
pub struct Embedding {
    pub source: FieldSpec,
    pub target: FieldSpec,
    /// Image of the generator `t` (or 1 for prime fields).
    pub image_of_t: Elem,
    map: Vec<Elem>,
}

impl Embedding {
    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a.0 as usize]
    }
}

fn embedding(source: &FieldSpec, target: &FieldSpec) -> Result<Arc<Embedding>> {
    type Key = (u32, u32, u32);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Embedding>>>> = OnceLock::new();
    if source.p() != target.p() || !target.k().is_multiple_of(source.k()) {
        return Err(Error::NoEmbedding { p: source.p(), from: source.k(), p2: target.p(), to: target.k() });
    }
    let key = (source.p(), source.k(), target.k());
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(e) = cache.lock().unwrap().get(&key) {
        return Ok(e.clone());
    }
    let p = source.p();
    let image_of_t = if source.k() == 1 {
        Elem::ONE
    } else {
        let modulus: Vec<Elem> = source.0.modulus.iter().map(|&c| target.scalar(c as u64)).collect();
        let poly = UPoly::new(modulus);
        target
            .elements()
            .into_iter()
            .find(|&r| poly.eval(target, r).is_zero())
            .ok_or(Error::NoEmbedding { p, from: source.k(), p2: p, to: target.k() })?
    };
    let powers: Vec<Elem> = (0..source.k()).map(|i| target.pow(image_of_t, i as i64)).collect();
    let map = (0..source.size())
        .map(|idx| {
            digits(idx, p, source.k())
                .iter()
                .zip(&powers)
                .fold(Elem::ZERO, |acc, (&c, &pw)| target.add(acc, target.mul(target.scalar(c as u64), pw)))
        })
        .collect();
    let emb = Arc::new(Embedding { source: source.clone(), target: target.clone(), image_of_t, map });
    cache.lock().unwrap().insert(key, emb.clone());
    Ok(emb)
}

/// Arithmetic operations on owned elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Pow(i64),
}

/// A field element bundled with its field.
#[derive(Clone, PartialEq, Eq)]
pub struct FqElement {
    pub field: FieldSpec,
    pub value: Elem,
}

impl fmt::Debug for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.field.format(self.value), self.field)
    }
}

impl fmt::Display for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

impl FqElement {
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    /// `self op other`; for `Op::Pow` the second operand is ignored.
    pub fn apply(&self, other: &FqElement, op: Op) -> Result<FqElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let value = match op {
            Op::Add => f.add(self.value, other.value),
            Op::Sub => f.sub(self.value, other.value),
            Op::Mul => f.mul(self.value, other.value),
            Op::Div => f.div(self.value, other.value)?,
            Op::Pow(e) => {
                if e < 0 && self.value.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                f.pow(self.value, e)
            }
        };
        Ok(f.element(value))
    }

    pub fn pow(&self, e: i64) -> Result<FqElement> {
        self.apply(self, Op::Pow(e))
    }

    pub fn pth_root(&self) -> FqElement {
        self.field.element(self.field.pth_root(self.value))
    }

    pub fn embed(&self, target: &FieldSpec) -> Result<FqElement> {
        let e = self.field.embedding_to(target)?;
        Ok(target.element(e.apply(self.value)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_no_modulus() {
        let f = make_field(3, 1).unwrap();
        assert!(f.modulus().is_none());
        assert_eq!(f.size(), 3);
        assert_eq!(f.add(Elem(2), Elem(2)), Elem(1));
    }

    #[test]
    fn canonical_moduli_match_brute_force() {
        // monic quadratics without a root, scanned with constant term first
        for p in [2u64, 3, 5, 7] {
            let prime = make_field(p, 1).unwrap();
            let mut expected = None;
            'outer: for c0 in 0..p {
                for c1 in 0..p {
                    let has_root = (0..p).any(|x| (x * x + c1 * x + c0) % p == 0);
                    if !has_root {
                        expected = Some(vec![c0 as u32, c1 as u32, 1]);
                        break 'outer;
                    }
                }
            }
            let _ = prime;
            assert_eq!(make_field(p, 2).unwrap().modulus().unwrap(), expected.unwrap().as_slice());
        }
        assert_eq!(make_field(2, 2).unwrap().modulus().unwrap(), &[1, 1, 1]);
        assert_eq!(make_field(3, 2).unwrap().modulus().unwrap(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_composite_and_oversized() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(make_field(2, 21), Err(Error::SizeBoundExceeded { .. })));
    }

    #[test]
    fn extension_products() {
        let f4 = make_field(2, 2).unwrap();
        let t = f4.gen_t().unwrap();
        assert_eq!(f4.mul(t, t), f4.add(t, Elem::ONE));
        let f9 = make_field(3, 2).unwrap();
        let t = f9.gen_t().unwrap();
        assert_eq!(f9.mul(t, t), Elem(2));
    }

    #[test]
    fn roots_of_unity() {
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(f4.primitive_root_of_unity(3).unwrap(), f4.gen_t().unwrap());
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f3.primitive_root_of_unity(2).unwrap(), Elem(2));
        assert!(matches!(f3.primitive_root_of_unity(4), Err(Error::NoSuchRoot { .. })));
        assert_eq!(f3.primitive_root_of_unity(1).unwrap(), Elem::ONE);
    }

    #[test]
    fn root_of_unity_exists_iff_divides() {
        for (p, k) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1)] {
            let f = make_field(p, k).unwrap();
            let q1 = f.size() as u64 - 1;
            for l in 1..=30u64 {
                let r = f.primitive_root_of_unity(l);
                if q1.is_multiple_of(l) {
                    let e = r.unwrap();
                    assert_eq!(f.pow(e, l as i64), Elem::ONE);
                    for j in 1..l {
                        assert_ne!(f.pow(e, j as i64), Elem::ONE);
                    }
                } else {
                    assert!(r.is_err());
                }
            }
        }
    }

    #[test]
    fn pth_roots() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f3.pth_root(Elem(2)), Elem(2));
        assert_eq!(f3.pth_root(Elem::ONE), Elem::ONE);
        let f9 = make_field(3, 2).unwrap();
        let t = f9.gen_t().unwrap();
        let two_t = f9.mul(Elem(2), t);
        assert_eq!(f9.pth_root(t), two_t);
        for (p, k) in [(2u64, 6u32), (3, 4), (5, 3), (7, 2)] {
            let f = make_field(p, k).unwrap();
            for x in 0..f.size() {
                let y = f.pth_root(Elem(x));
                assert_eq!(f.pow(y, p as i64), Elem(x));
            }
        }
    }

    #[test]
    fn embeddings_are_injective_homomorphisms() {
        let f2 = make_field(2, 1).unwrap();
        let f4 = make_field(2, 2).unwrap();
        let f16 = make_field(2, 4).unwrap();
        assert_eq!(f2.element(Elem::ONE).embed(&f4).unwrap().value, Elem::ONE);
        let f3 = make_field(3, 1).unwrap();
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f3.element(Elem(2)).embed(&f9).unwrap().value, Elem(2));
        let e = f4.embedding_to(&f16).unwrap();
        let r = e.image_of_t;
        assert_eq!(f16.add(f16.add(f16.mul(r, r), r), Elem::ONE), Elem::ZERO);
        for (src, dst) in [(&f4, &f16), (&f3, &f9), (&make_field(3, 2).unwrap(), &make_field(3, 4).unwrap())] {
            let e = src.embedding_to(dst).unwrap();
            let mut seen = std::collections::HashSet::new();
            for a in 0..src.size() {
                assert!(seen.insert(e.apply(Elem(a))));
                for b in 0..src.size() {
                    let (a, b) = (Elem(a), Elem(b));
                    assert_eq!(e.apply(src.add(a, b)), dst.add(e.apply(a), e.apply(b)));
                    assert_eq!(e.apply(src.mul(a, b)), dst.mul(e.apply(a), e.apply(b)));
                }
            }
            assert_eq!(e.apply(Elem::ONE), Elem::ONE);
        }
        assert!(matches!(f4.embedding_to(&make_field(2, 3).unwrap()), Err(Error::NoEmbedding { .. })));
    }

    #[test]
    fn mismatched_fields_error() {
        let a = make_field(3, 1).unwrap().element(Elem(1));
        let b = make_field(5, 1).unwrap().element(Elem(1));
        assert_eq!(a.apply(&b, Op::Add).unwrap_err(), Error::FieldMismatch);
        let z = make_field(3, 1).unwrap().element(Elem(0));
        assert_eq!(a.apply(&z, Op::Div).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn formats_elements() {
        let f9 = make_field(3, 2).unwrap();
        let x = f9.from_coeffs(&[1, 2]).unwrap();
        assert_eq!(f9.format(x), "2*t+1");
        assert_eq!(f9.parse("2*t+1").unwrap(), x);
        assert_eq!(f9.format(Elem::ZERO), "0");
    }
}
