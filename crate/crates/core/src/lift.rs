//! Lifting projective groups to matrix groups and the liftability
//! realization conditions.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::group::{split_order, MatrixGroup, DEFAULT_CAP};
use crate::linalg::{image_of_shift, kernel_basis, LinearSubspace, Matrix, ProjectiveClass};

/// A matrix group mapping isomorphically onto a projective group.
#[derive(Clone, Debug)]
pub struct LiftResult {
    pub lifted_group: MatrixGroup,
    /// `(class, lift)` pairs in the enumeration order of the projective group.
    pub section: Vec<(ProjectiveClass, Matrix)>,
    /// Extension level the lift lives over (1 = the input field).
    pub level: u32,
}

impl LiftResult {
    pub fn field(&self) -> &FieldSpec {
        self.lifted_group.field()
    }

    pub fn lift_of(&self, g: &ProjectiveClass) -> Option<&Matrix> {
        self.section.iter().find(|(c, _)| c == g).map(|(_, m)| m)
    }
}

#[derive(Clone, Debug)]
pub struct ConditionsReport {
    pub cond_i: bool,
    pub cond_ii: bool,
    pub common_line: Option<LinearSubspace>,
    pub witnesses: Vec<Matrix>,
}

/// The lift `A` of a class with `g^p = e` satisfying `A^p = I`.
pub fn normalize_p_element(g: &ProjectiveClass) -> Result<Matrix> {
    let c = g.rep();
    let f = c.field();
    let p = f.p() as u64;
    let lambda = c.pow(p).as_scalar().ok_or(Error::NotPPower)?;
    let tau = f.pth_root(lambda);
    let a = c.scale(f.inv(tau).unwrap());
    let m = a.size() as u64;
    if !a.pow(p).is_identity() || !a.shift().pow(m).entries().iter().all(|e| e.is_zero()) {
        return Err(Error::InvariantViolation("p-element normalization failed".into()));
    }
    Ok(a)
}

/// Closure of projective classes under multiplication.
pub fn projective_closure(gens: &[ProjectiveClass], cap: usize) -> Result<Vec<ProjectiveClass>> {
    let first = gens.first().ok_or_else(|| Error::ParameterViolation("no generators".into()))?;
    let id = ProjectiveClass::identity(first.rep().field(), first.rep().size());
    let mut elements = vec![id.clone()];
    let mut seen = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let prod = elements[i].mul(g);
            if seen.contains_key(&prod) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::CapExceeded { cap });
            }
            seen.insert(prod.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(prod);
        }
    }
    Ok(elements)
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Lifts the projective group generated by `gens`, recognized as
/// `(Z/p)^u x| Z/l`. The complement generator is rescaled by an `l`-th root
/// searched over `F_{q^s}`, `s <= s_max`.
pub fn lift_group(gens: &[ProjectiveClass], hint: Option<(u32, u64)>, s_max: u32) -> Result<LiftResult> {
    lift_group_capped(gens, hint, s_max, DEFAULT_CAP)
}

/// [`lift_group`] with an explicit cap on the projective closure.
pub fn lift_group_capped(gens: &[ProjectiveClass], hint: Option<(u32, u64)>, s_max: u32, cap: usize) -> Result<LiftResult> {
    let elements = projective_closure(gens, cap)?;
    let base = elements[0].rep().field().clone();
    let size = elements[0].rep().size();
    let p = base.p() as u64;
    let (u, l) = split_order(elements.len() as u64, p);
    if let Some(h) = hint {
        if h != (u, l) {
            return Err(Error::NotRecognized(format!("group order {} does not match (u,l) = {:?}", elements.len(), h)));
        }
    }
    let orders: Vec<u64> = elements.iter().map(ProjectiveClass::order).collect();
    let p_part: Vec<&ProjectiveClass> = elements.iter().zip(&orders).filter(|(_, &o)| is_power_of(o, p)).map(|(e, _)| e).collect();
    if orders.iter().any(|&o| o > p && is_power_of(o, p)) {
        return Err(Error::NotRecognized("Sylow not elementary abelian (element of order p^2 or more)".into()));
    }
    if p_part.len() as u64 != p.pow(u) {
        return Err(Error::NotRecognized("p-elements do not form a subgroup of order p^u".into()));
    }
    for a in &p_part {
        for b in &p_part {
            if a.mul(b) != b.mul(a) {
                return Err(Error::NotRecognized("Sylow not abelian".into()));
            }
        }
    }
    let sylow_lifts: Vec<Matrix> = p_part.iter().filter(|g| !g.is_identity()).map(|g| normalize_p_element(g)).collect::<Result<_>>()?;

    let (field, level, complement) = if l == 1 {
        (base.clone(), 1, None)
    } else {
        let idx = orders.iter().position(|&o| o == l).ok_or_else(|| Error::NotRecognized(format!("no element of order {l}")))?;
        let c = elements[idx].rep();
        let lambda = c.pow(l).as_scalar().ok_or_else(|| Error::InvariantViolation("c^l not scalar".into()))?;
        let mut found = None;
        for s in 1..=s_max {
            let Ok(ext) = base.extension(s) else { break };
            let emb = base.embedding_to(&ext)?;
            if let Some(mu) = ext.nth_root(emb.apply(lambda), l) {
                let a = c.embed(&ext)?.scale(ext.inv(mu).unwrap());
                found = Some((ext, s, Some(a)));
                break;
            }
        }
        found.ok_or(Error::RootOutsideSweep { s_max })?
    };

    let mut lifted_gens: Vec<Matrix> = sylow_lifts.iter().map(|a| a.embed(&field)).collect::<Result<_>>()?;
    lifted_gens.extend(complement);
    let lifted = MatrixGroup::generate(&field, size, &lifted_gens, elements.len() * 2 + 1)?;
    if lifted.order() != elements.len() {
        return Err(Error::InvariantViolation(format!("lift has order {} for a group of order {}", lifted.order(), elements.len())));
    }
    let mut by_class: HashMap<ProjectiveClass, Matrix> = HashMap::new();
    for m in lifted.elements() {
        if by_class.insert(ProjectiveClass::new(m)?, m.clone()).is_some() {
            return Err(Error::InvariantViolation("projection not injective on the lift".into()));
        }
    }
    let mut section = Vec::with_capacity(elements.len());
    for g in &elements {
        let ge = g.embed(&field)?;
        let m = by_class.get(&ge).cloned().ok_or_else(|| Error::InvariantViolation("projection not surjective on the lift".into()))?;
        section.push((ge, m));
    }
    // homomorphism check against generators of the projective group
    let lookup: HashMap<&ProjectiveClass, &Matrix> = section.iter().map(|(c, m)| (c, m)).collect();
    for (c, m) in &section {
        for g in gens {
            let ge = g.embed(&field)?;
            let prod = c.mul(&ge);
            if *lookup[&prod] != m.mul(lookup[&ge]) {
                return Err(Error::InvariantViolation("section is not a homomorphism".into()));
            }
        }
    }
    Ok(LiftResult { lifted_group: lifted, section, level })
}

/// `Q` with `Q A Q^{-1}` unit upper triangular for every `A` in `set`.
pub fn simultaneous_unitriangularize(set: &[Matrix]) -> Result<Matrix> {
    let first = set.first().ok_or_else(|| Error::ParameterViolation("empty set".into()))?;
    let f = first.field().clone();
    let m = first.size();
    for a in set {
        for b in set {
            if a.mul(b) != b.mul(a) {
                return Err(Error::NotCommuting);
            }
        }
        if !a.shift().pow(m as u64).entries().iter().all(|e| e.is_zero()) {
            return Err(Error::NotUnipotent);
        }
    }
    let shifts: Vec<Matrix> = set.iter().map(Matrix::shift).collect();
    let mut flag: Vec<Vec<Elem>> = Vec::new();
    while flag.len() < m {
        let w = LinearSubspace::from_spanning(&f, m, flag.clone());
        let ann = w.equations();
        let mut rows = Vec::new();
        for n in &shifts {
            for r in &ann {
                rows.push((0..m).map(|j| (0..m).fold(Elem::ZERO, |acc, i| f.add(acc, f.mul(r[i], n.get(i, j))))).collect());
            }
        }
        let candidates = if rows.is_empty() {
            (0..m).map(|i| (0..m).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }).collect()).collect()
        } else {
            kernel_basis(&f, rows, m)
        };
        let v = candidates
            .into_iter()
            .find(|v| !w.contains(v))
            .ok_or_else(|| Error::InvariantViolation("no common eigenvector outside the flag".into()))?;
        flag.push(v);
    }
    // columns of P are the flag vectors
    let mut p = Matrix::zero(&f, m);
    for (j, v) in flag.iter().enumerate() {
        for (i, &x) in v.iter().enumerate() {
            p.set(i, j, x);
        }
    }
    let q = p.inverse().ok_or(Error::SingularMatrix)?;
    for a in set {
        let c = q.mul(a).mul(&p);
        for i in 0..m {
            for j in 0..=i {
                let want = if i == j { Elem::ONE } else { Elem::ZERO };
                if c.get(i, j) != want {
                    return Err(Error::InvariantViolation("conjugate is not unitriangular".into()));
                }
            }
        }
    }
    Ok(q)
}

/// Conditions (i) and (ii): some element has a one-dimensional shift image,
/// and all non-identity elements share the same shift image.
pub fn check_conditions(group: &MatrixGroup) -> ConditionsReport {
    let mut images: Vec<(&Matrix, LinearSubspace)> = Vec::new();
    for g in group.elements().iter().filter(|g| !g.is_identity()) {
        images.push((g, image_of_shift(g)));
    }
    let cond_i = images.iter().any(|(_, im)| im.dim() == 1);
    let mut witnesses = Vec::new();
    let mut cond_ii = true;
    if let Some((g0, im0)) = images.first() {
        if let Some((g1, _)) = images.iter().find(|(_, im)| im != im0) {
            cond_ii = false;
            witnesses = vec![(*g0).clone(), (*g1).clone()];
        }
    }
    let common_line = if cond_i && cond_ii { images.first().map(|(_, im)| im.clone()) } else { None };
    ConditionsReport { cond_i, cond_ii, common_line, witnesses }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::group::closure;

    #[test]
    fn normalize_examples() {
        let f9 = make_field(3, 2).unwrap();
        assert!(normalize_p_element(&ProjectiveClass::identity(&f9, 3)).unwrap().is_identity());
        let e12 = Matrix::transvection(&f9, 3, 0, 1, Elem::ONE);
        let g = ProjectiveClass::new(&e12.scale(f9.from_int(2))).unwrap();
        let a = normalize_p_element(&g).unwrap();
        assert_eq!(a, e12);
        assert!(a.pow(3).is_identity());
        let f5 = make_field(5, 1).unwrap();
        let d = ProjectiveClass::new(&Matrix::diag(&f5, &[Elem(2), Elem::ONE, Elem::ONE])).unwrap();
        assert_eq!(normalize_p_element(&d).unwrap_err(), Error::NotPPower);
    }

    #[test]
    fn normalization_from_scaled_representatives() {
        // C = c (I + E12) has C^p = c^p I; tau = pth_root(c^p) = c
        let f9 = make_field(3, 2).unwrap();
        let e = Matrix::transvection(&f9, 3, 0, 2, f9.gen_t().unwrap());
        for c in f9.elements().into_iter().filter(|c| !c.is_zero()) {
            let g = ProjectiveClass::new(&e.scale(c)).unwrap();
            assert_eq!(normalize_p_element(&g).unwrap(), e);
        }
    }

    #[test]
    fn lift_examples() {
        let f2 = make_field(2, 1).unwrap();
        let e12 = Matrix::transvection(&f2, 3, 0, 1, Elem::ONE);
        let res = lift_group(&[ProjectiveClass::new(&e12).unwrap()], None, 4).unwrap();
        assert_eq!(res.lifted_group.order(), 2);
        assert!(res.lifted_group.contains(&e12));

        let f4 = make_field(2, 2).unwrap();
        let t = f4.gen_t().unwrap();
        // scaled generators: the lift must undo the scalars
        let gens = [
            Matrix::diag(&f4, &[t, Elem::ONE, Elem::ONE]).scale(t),
            Matrix::transvection(&f4, 3, 0, 1, Elem::ONE).scale(t),
            Matrix::transvection(&f4, 3, 0, 1, t),
        ];
        let classes: Vec<ProjectiveClass> = gens.iter().map(|g| ProjectiveClass::new(g).unwrap()).collect();
        let res = lift_group(&classes, Some((2, 3)), 4).unwrap();
        assert_eq!(res.lifted_group.order(), 12);
        for (c, m) in &res.section {
            assert_eq!(&ProjectiveClass::new(m).unwrap(), c);
        }

        let j = Matrix::from_ints(&f2, &[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]).unwrap();
        match lift_group(&[ProjectiveClass::new(&j).unwrap()], None, 4) {
            Err(Error::NotRecognized(msg)) => assert!(msg.contains("elementary abelian")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn complement_root_from_extension() {
        // C^2 = -I over F_3, and -1 has no square root until F_9
        let f3 = make_field(3, 1).unwrap();
        let c = Matrix::from_ints(&f3, &[&[0, 1], &[2, 0]]).unwrap();
        let res = lift_group(&[ProjectiveClass::new(&c).unwrap()], Some((0, 2)), 2).unwrap();
        assert_eq!(res.level, 2);
        assert_eq!(res.lifted_group.order(), 2);
        assert!(res.lifted_group.elements().iter().all(|m| m.pow(2).is_identity()));
        assert_eq!(
            lift_group(&[ProjectiveClass::new(&c).unwrap()], None, 1).unwrap_err(),
            Error::RootOutsideSweep { s_max: 1 }
        );
    }

    #[test]
    fn unitriangularize_examples() {
        let f3 = make_field(3, 1).unwrap();
        assert!(simultaneous_unitriangularize(&[Matrix::identity(&f3, 3)]).unwrap().is_identity());
        let lower = Matrix::transvection(&f3, 3, 1, 0, Elem::ONE);
        let q = simultaneous_unitriangularize(std::slice::from_ref(&lower)).unwrap();
        assert_eq!(q, Matrix::from_ints(&f3, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).unwrap());
        assert_eq!(q.mul(&lower).mul(&q.inverse().unwrap()), Matrix::transvection(&f3, 3, 0, 1, Elem::ONE));
        let f2 = make_field(2, 1).unwrap();
        let s = [Matrix::transvection(&f2, 3, 0, 1, Elem::ONE), Matrix::transvection(&f2, 3, 1, 0, Elem::ONE)];
        assert_eq!(simultaneous_unitriangularize(&s).unwrap_err(), Error::NotCommuting);
        let d = Matrix::diag(&f3, &[Elem(2), Elem::ONE, Elem::ONE]);
        assert_eq!(simultaneous_unitriangularize(&[d]).unwrap_err(), Error::NotUnipotent);
    }

    #[test]
    fn conditions_examples() {
        let f2 = make_field(2, 1).unwrap();
        let a = Matrix::transvection(&f2, 4, 0, 1, Elem::ONE);
        let b = Matrix::transvection(&f2, 4, 2, 3, Elem::ONE);
        let g = closure(&[a, b], 10).unwrap();
        assert_eq!(g.order(), 4);
        let rep = check_conditions(&g);
        assert!(rep.cond_i && !rep.cond_ii);
        let ims: Vec<LinearSubspace> = rep.witnesses.iter().map(image_of_shift).collect();
        assert_ne!(ims[0], ims[1]);
        let rep = check_conditions(&MatrixGroup::trivial(&f2, 3));
        assert!(!rep.cond_i && rep.cond_ii);
        let f3 = make_field(3, 1).unwrap();
        let tr = closure(&[Matrix::transvection(&f3, 3, 0, 2, Elem::ONE)], 10).unwrap();
        let rep = check_conditions(&tr);
        assert!(rep.cond_i && rep.cond_ii);
        assert_eq!(rep.common_line.unwrap().basis, vec![vec![Elem::ONE, Elem::ZERO, Elem::ZERO]]);
    }
}
