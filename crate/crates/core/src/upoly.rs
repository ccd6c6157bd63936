//! Dense univariate polynomials over a [`FieldSpec`], low degree first.

use crate::field::{prime_factors, Elem, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    pub coeffs: Vec<Elem>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Elem) -> Self {
        UPoly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        UPoly { coeffs: vec![Elem::ZERO, Elem::ONE] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn eval(&self, f: &FieldSpec, x: Elem) -> Elem {
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, f: &FieldSpec, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Elem], i: usize| v.get(i).copied().unwrap_or(Elem::ZERO);
        UPoly::new((0..n).map(|i| f.add(get(&self.coeffs, i), get(&other.coeffs, i))).collect())
    }

    pub fn sub(&self, f: &FieldSpec, other: &UPoly) -> UPoly {
        self.add(f, &other.scale(f, f.neg(Elem::ONE)))
    }

    pub fn scale(&self, f: &FieldSpec, c: Elem) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &FieldSpec, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        UPoly::new(out)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, f: &FieldSpec, divisor: &UPoly) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv_lead = f.inv(divisor.leading()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], inv_lead);
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn rem(&self, f: &FieldSpec, divisor: &UPoly) -> UPoly {
        self.divrem(f, divisor).1
    }

    pub fn monic(&self, f: &FieldSpec) -> UPoly {
        match f.inv(self.leading()) {
            Some(inv) => self.scale(f, inv),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, f: &FieldSpec, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self, f: &FieldSpec) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.scalar(i as u64)))
                .collect(),
        )
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn powmod(&self, f: &FieldSpec, mut e: u128, modulus: &UPoly) -> UPoly {
        let mut base = self.rem(f, modulus);
        let mut acc = UPoly::constant(Elem::ONE).rem(f, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, modulus);
            }
            base = base.mul(f, &base).rem(f, modulus);
            e >>= 1;
        }
        acc
    }

    /// Rabin's irreducibility test over `f`: `x^(Q^d) = x mod g` and
    /// `gcd(x^(Q^(d/r)) - x, g) = 1` for every prime `r | d`.
    pub fn is_irreducible(&self, f: &FieldSpec) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(d) => d,
        };
        let g = self.monic(f);
        let q = f.size() as u128;
        let x = UPoly::x();
        // frob[i] = x^(Q^i) mod g
        let mut frob = vec![x.rem(f, &g)];
        for i in 1..=d {
            let next = frob[i - 1].powmod(f, q, &g);
            frob.push(next);
        }
        if frob[d] != x.rem(f, &g) {
            return false;
        }
        prime_factors(d as u64).into_iter().all(|r| {
            let h = frob[d / r as usize].sub(f, &x);
            h.gcd(f, &g).degree() == Some(0)
        })
    }

    /// Roots in `f` with multiplicities, by exhaustive evaluation and
    /// repeated synthetic division.
    pub fn roots(&self, f: &FieldSpec) -> Vec<(Elem, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let mut rest = self.clone();
        for r in f.elements() {
            let lin = UPoly::new(vec![f.neg(r), Elem::ONE]);
            let mut mult = 0;
            while rest.degree().unwrap_or(0) > 0 && rest.eval(f, r).is_zero() {
                rest = rest.divrem(f, &lin).0;
                mult += 1;
            }
            if mult > 0 {
                out.push((r, mult));
            }
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn poly(f: &FieldSpec, cs: &[i64]) -> UPoly {
        UPoly::new(cs.iter().map(|&c| f.from_int(c)).collect())
    }

    #[test]
    fn irreducibility_matches_root_search_for_small_degrees() {
        let f = make_field(3, 1).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    // degree 3: irreducible iff rootless
                    let g = poly(&f, &[a, b, c, 1]);
                    let rootless = (0..3).all(|x| !g.eval(&f, f.from_int(x)).is_zero());
                    assert_eq!(g.is_irreducible(&f), rootless);
                }
            }
        }
        // x^4 + 1 = (x^2+x+2)(x^2+2x+2) over F_3
        assert!(!poly(&f, &[1, 0, 0, 0, 1]).is_irreducible(&f));
    }

    #[test]
    fn divrem_reassembles() {
        let f = make_field(5, 1).unwrap();
        let a = poly(&f, &[1, 2, 3, 4, 1]);
        let b = poly(&f, &[2, 0, 1]);
        let (q, r) = a.divrem(&f, &b);
        assert_eq!(q.mul(&f, &b).add(&f, &r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn roots_with_multiplicity() {
        let f = make_field(5, 1).unwrap();
        // (x-1)^2 (x-3)
        let g = poly(&f, &[-1, 1]).mul(&f, &poly(&f, &[-1, 1])).mul(&f, &poly(&f, &[-3, 1]));
        assert_eq!(g.roots(&f), vec![(f.from_int(1), 2), (f.from_int(3), 1)]);
    }
}
