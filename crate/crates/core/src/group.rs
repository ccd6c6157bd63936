//! Finite matrix groups given by generators.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::field::{gcd, Elem, FieldSpec};
use crate::linalg::Matrix;

pub const DEFAULT_CAP: usize = 1_000_000;

/// A fully enumerated finite subgroup of `GL(m, q)`.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    field: FieldSpec,
    size: usize,
    elements: Vec<Matrix>,
    index: HashMap<Vec<Elem>, usize>,
    generators: Vec<Matrix>,
    is_ut_star: bool,
}

/// `|G| = p^u * l` with an elementary abelian Sylow part and a cyclic
/// complement of order `l`.
#[derive(Clone, Debug)]
pub struct GroupStructure {
    pub p: u64,
    pub u: u32,
    pub l: u64,
    pub order: usize,
    pub sylow_generators: Vec<Matrix>,
    pub complement_generator: Matrix,
    /// Whether `l | p^u - 1`.
    pub divisibility_holds: bool,
}

/// Breadth-first closure of `gens`.
pub fn closure(gens: &[Matrix], cap: usize) -> Result<MatrixGroup> {
    let first = gens.first().ok_or_else(|| Error::ParameterViolation("no generators".into()))?;
    MatrixGroup::generate(first.field(), first.size(), gens, cap)
}

impl MatrixGroup {
    pub fn generate(field: &FieldSpec, size: usize, gens: &[Matrix], cap: usize) -> Result<MatrixGroup> {
        for g in gens {
            if g.field() != field || g.size() != size {
                return Err(Error::SizeMismatch);
            }
            if g.det().is_zero() {
                return Err(Error::SingularGenerator);
            }
        }
        let id = Matrix::identity(field, size);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id.entries().to_vec(), 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let prod = elements[i].mul(g);
                if index.contains_key(prod.entries()) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(prod.entries().to_vec(), elements.len());
                queue.push_back(elements.len());
                elements.push(prod);
            }
        }
        let is_ut_star = elements.iter().all(Matrix::is_ut_star);
        let group = MatrixGroup { field: field.clone(), size, elements, index, generators: gens.to_vec(), is_ut_star };
        // a finite set closed under right multiplication by generators is a group
        debug_assert!(group.elements.iter().all(|e| group.contains(&e.inverse().unwrap())));
        Ok(group)
    }

    /// The trivial group.
    pub fn trivial(field: &FieldSpec, size: usize) -> MatrixGroup {
        MatrixGroup::generate(field, size, &[], 1).expect("trivial group")
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn is_ut_star(&self) -> bool {
        self.is_ut_star
    }

    pub fn contains(&self, a: &Matrix) -> bool {
        self.index.contains_key(a.entries())
    }

    pub fn index_of(&self, a: &Matrix) -> Option<usize> {
        self.index.get(a.entries()).copied()
    }

    /// Order of an element of this group.
    pub fn element_order(&self, a: &Matrix) -> u64 {
        let mut acc = a.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.mul(a);
            k += 1;
            assert!(k as usize <= self.order().max(1) + 1, "element of infinite order");
        }
        k
    }

    pub fn embed(&self, target: &FieldSpec) -> Result<MatrixGroup> {
        let gens: Vec<Matrix> = self.generators.iter().map(|g| g.embed(target)).collect::<Result<_>>()?;
        MatrixGroup::generate(target, self.size, &gens, self.order().max(1))
    }

    /// `T G T^{-1}`.
    pub fn conjugate(&self, t: &Matrix) -> Result<MatrixGroup> {
        let tinv = t.inverse().ok_or(Error::SingularMatrix)?;
        let gens: Vec<Matrix> = self.generators.iter().map(|g| t.mul(g).mul(&tinv)).collect();
        MatrixGroup::generate(&self.field, self.size, &gens, self.order().max(1))
    }

    /// Greedy generating set: scan elements in enumeration order and keep
    /// those not already generated.
    pub fn minimal_generators(&self) -> Vec<Matrix> {
        let mut gens: Vec<Matrix> = Vec::new();
        let mut current = MatrixGroup::trivial(&self.field, self.size);
        for e in &self.elements {
            if current.contains(e) {
                continue;
            }
            gens.push(e.clone());
            current = MatrixGroup::generate(&self.field, self.size, &gens, self.order()).expect("subgroup");
            if current.order() == self.order() {
                break;
            }
        }
        gens
    }

    /// Subgroup generated by the given elements of this group.
    pub fn subgroup(&self, gens: &[Matrix]) -> MatrixGroup {
        MatrixGroup::generate(&self.field, self.size, gens, self.order()).expect("subgroup of a finite group")
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().all(|a| gens.iter().all(|b| a.mul(b) == b.mul(a)))
    }
}

/// The homomorphism `h -> h_11` on a UT(*,I) group, one value per element.
pub fn phi(group: &MatrixGroup) -> Result<Vec<Elem>> {
    if !group.is_ut_star() {
        return Err(Error::NotUTStar);
    }
    let f = group.field();
    let values: Vec<Elem> = group.elements().iter().map(|h| h.get(0, 0)).collect();
    for (i, g) in group.elements().iter().enumerate() {
        for h in group.generators() {
            let j = group.index_of(&g.mul(h)).expect("closed");
            if values[j] != f.mul(values[i], h.get(0, 0)) {
                return Err(Error::InvariantViolation("phi is not multiplicative".into()));
            }
        }
    }
    Ok(values)
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// The unique Sylow `p`-subgroup (the kernel of `phi` for UT(*,I) groups).
pub fn sylow_p(group: &MatrixGroup) -> Result<MatrixGroup> {
    let p = group.field().p() as u64;
    let members: Vec<Matrix> = if group.is_ut_star() {
        let values = phi(group)?;
        group.elements().iter().zip(values).filter(|(_, v)| *v == Elem::ONE).map(|(m, _)| m.clone()).collect()
    } else {
        group.elements().iter().filter(|m| is_p_power(group.element_order(m), p)).cloned().collect()
    };
    let keys: HashSet<&[Elem]> = members.iter().map(|m| m.entries()).collect();
    for a in &members {
        for b in &members {
            if !keys.contains(a.mul(b).entries()) {
                return Err(Error::NotNormalSylow);
            }
        }
    }
    let sub = group.subgroup(&members.iter().filter(|m| !m.is_identity()).cloned().collect::<Vec<_>>());
    debug_assert_eq!(sub.order(), members.len());
    let gens = sub.minimal_generators();
    Ok(group.subgroup(&gens))
}

/// Splits `n = p^u * l` with `gcd(p, l) = 1`.
pub fn split_order(n: u64, p: u64) -> (u32, u64) {
    let mut u = 0;
    let mut l = n;
    while l.is_multiple_of(p) {
        l /= p;
        u += 1;
    }
    (u, l)
}

pub fn recognize_structure(group: &MatrixGroup) -> Result<GroupStructure> {
    let p = group.field().p() as u64;
    let order = group.order();
    let (u, l) = split_order(order as u64, p);
    if gcd(p, l) != 1 {
        return Err(Error::NotRecognized("order not of the form p^u * l".into()));
    }
    let sylow = sylow_p(group).map_err(|_| Error::NotRecognized("p-elements do not form a subgroup".into()))?;
    if sylow.order() as u64 != (p).pow(u) {
        return Err(Error::NotRecognized("Sylow subgroup has the wrong order".into()));
    }
    if sylow.elements().iter().any(|e| !e.is_identity() && sylow.element_order(e) != p) || !sylow.is_abelian() {
        return Err(Error::NotRecognized("Sylow not elementary abelian".into()));
    }
    let complement = find_complement(group, l)?;
    let divisibility_holds = (p.pow(u) as u128).wrapping_sub(1).is_multiple_of(l as u128) || u == 0;
    Ok(GroupStructure {
        p,
        u,
        l,
        order,
        sylow_generators: sylow.minimal_generators(),
        complement_generator: complement,
        divisibility_holds,
    })
}

fn find_complement(group: &MatrixGroup, l: u64) -> Result<Matrix> {
    let f = group.field();
    if l == 1 {
        return Ok(Matrix::identity(f, group.size()));
    }
    if group.is_ut_star() {
        // phi-preimages of a generator of im(phi) first
        let mut image: Vec<Elem> = group.elements().iter().map(|h| h.get(0, 0)).collect();
        image.sort_by_key(|&e| f.order_key(e));
        image.dedup();
        if let Some(zeta) = image.iter().copied().find(|&e| f.mult_order(e) == Some(l)) {
            if let Some(g) = group.elements().iter().find(|g| g.get(0, 0) == zeta && group.element_order(g) == l) {
                return Ok(g.clone());
            }
        }
    }
    group
        .elements()
        .iter()
        .find(|g| group.element_order(g) == l)
        .cloned()
        .ok_or_else(|| Error::NotRecognized(format!("no complement element of order {l}")))
}
