//! Dense square matrices over `F_q`, projective classes, and subspaces.
//!
//! Indices are 0-based in code; the first row/column is the one acting on
//! `X0`. A matrix of size `m = n + 2` acts on points of `P^{n+1}` by
//! `x -> A x` and on forms by substitution (see [`crate::forms`]).

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::upoly::UPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    size: usize,
    data: Vec<Elem>,
}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.size.hash(state);
        self.data.hash(state);
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}]({})", self.field, self)
    }
}

impl fmt::Display for Matrix {
    /// Matrix text format: rows separated by `;`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.size)
            .map(|i| {
                (0..self.size)
                    .map(|j| self.field.format(self.get(i, j)))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&rows.join(";"))
    }
}

impl Matrix {
    pub fn zero(field: &FieldSpec, size: usize) -> Matrix {
        Matrix { field: field.clone(), size, data: vec![Elem::ZERO; size * size] }
    }

    pub fn identity(field: &FieldSpec, size: usize) -> Matrix {
        let mut m = Matrix::zero(field, size);
        for i in 0..size {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn diag(field: &FieldSpec, entries: &[Elem]) -> Matrix {
        let mut m = Matrix::zero(field, entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    /// `I + c * E_{row,col}` (0-based).
    pub fn transvection(field: &FieldSpec, size: usize, row: usize, col: usize, c: Elem) -> Matrix {
        let mut m = Matrix::identity(field, size);
        let v = field.add(m.get(row, col), c);
        m.set(row, col, v);
        m
    }

    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<Elem>>) -> Result<Matrix> {
        let size = rows.len();
        if size < 2 || rows.iter().any(|r| r.len() != size) {
            return Err(Error::SizeMismatch);
        }
        if rows.iter().flatten().any(|&e| !field.contains(e)) {
            return Err(Error::ParameterViolation("entry outside the field".into()));
        }
        Ok(Matrix { field: field.clone(), size, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(field: &FieldSpec, rows: &[&[i64]]) -> Result<Matrix> {
        Matrix::from_rows(field, rows.iter().map(|r| r.iter().map(|&c| field.from_int(c)).collect()).collect())
    }

    pub fn parse(text: &str, field: &FieldSpec) -> Result<Matrix> {
        Matrix::from_rows(field, crate::text::parse_rows(text, field)?)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.size + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.size + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        (0..self.size).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries in row-major order; serves as a canonical key.
    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.size, other.size, "matrix size mismatch");
        let f = &self.field;
        let n = self.size;
        let mut out = Matrix::zero(f, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            size: self.size,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            size: self.size,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let f = &self.field;
        Matrix { field: f.clone(), size: self.size, data: self.data.iter().map(|&a| f.mul(a, c)).collect() }
    }

    /// `A - I`.
    pub fn shift(&self) -> Matrix {
        self.sub(&Matrix::identity(&self.field, self.size))
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.size);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.field, self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        (0..self.size)
            .map(|i| self.row(i).iter().zip(v).fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| self.get(i, j) == if i == j { Elem::ONE } else { Elem::ZERO }))
    }

    /// `Some(c)` when the matrix is `c * I`.
    pub fn as_scalar(&self) -> Option<Elem> {
        let c = self.get(0, 0);
        let scalar = (0..self.size)
            .all(|i| (0..self.size).all(|j| self.get(i, j) == if i == j { c } else { Elem::ZERO }));
        scalar.then_some(c)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        let f = &self.field;
        let n = self.size;
        let mut a: Vec<Vec<Elem>> = self.rows();
        let mut inv = Matrix::identity(f, n).rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let pinv = f.inv(a[col][col]).unwrap();
            for j in 0..n {
                a[col][j] = f.mul(a[col][j], pinv);
                inv[col][j] = f.mul(inv[col][j], pinv);
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let c = a[r][col];
                for j in 0..n {
                    a[r][j] = f.sub(a[r][j], f.mul(c, a[col][j]));
                    inv[r][j] = f.sub(inv[r][j], f.mul(c, inv[col][j]));
                }
            }
        }
        Matrix::from_rows(f, inv).ok()
    }

    pub fn det(&self) -> Elem {
        let f = &self.field;
        let n = self.size;
        let mut a = self.rows();
        let mut det = Elem::ONE;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Elem::ZERO;
            };
            if pivot != col {
                a.swap(col, pivot);
                det = f.neg(det);
            }
            det = f.mul(det, a[col][col]);
            let pinv = f.inv(a[col][col]).unwrap();
            for r in col + 1..n {
                let c = f.mul(a[r][col], pinv);
                if c.is_zero() {
                    continue;
                }
                #[allow(clippy::needless_range_loop)]
                for j in col..n {
                    a[r][j] = f.sub(a[r][j], f.mul(c, a[col][j]));
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        rref(&self.field, self.rows(), self.size).0.len()
    }

    /// Right kernel `{x : A x = 0}`.
    pub fn kernel(&self) -> LinearSubspace {
        LinearSubspace::from_spanning(&self.field, self.size, kernel_basis(&self.field, self.rows(), self.size))
    }

    /// Column space.
    pub fn image(&self) -> LinearSubspace {
        LinearSubspace::from_spanning(&self.field, self.size, self.transpose().rows())
    }

    /// Entrywise image under the field embedding into `target`.
    pub fn embed(&self, target: &FieldSpec) -> Result<Matrix> {
        if target == &self.field {
            return Ok(self.clone());
        }
        let e = self.field.embedding_to(target)?;
        Ok(Matrix { field: target.clone(), size: self.size, data: self.data.iter().map(|&a| e.apply(a)).collect() })
    }

    /// Membership in UT(*,I): invertible (1,1)-entry, free first row,
    /// identity elsewhere.
    pub fn is_ut_star(&self) -> bool {
        !self.get(0, 0).is_zero()
            && (1..self.size).all(|i| (0..self.size).all(|j| self.get(i, j) == if i == j { Elem::ONE } else { Elem::ZERO }))
    }

    /// Characteristic polynomial `det(x I - A)` by fraction-free elimination
    /// over `F_q[x]`.
    pub fn char_poly(&self) -> UPoly {
        let f = &self.field;
        let n = self.size;
        let mut a: Vec<Vec<UPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = f.neg(self.get(i, j));
                        if i == j {
                            UPoly::new(vec![c, Elem::ONE])
                        } else {
                            UPoly::constant(c)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut sign = Elem::ONE;
        let mut prev = UPoly::constant(Elem::ONE);
        for k in 0..n {
            let Some(pivot) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return UPoly::zero();
            };
            if pivot != k {
                a.swap(k, pivot);
                sign = f.neg(sign);
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j].mul(f, &a[k][k]).sub(f, &a[i][k].mul(f, &a[k][j]));
                    let (q, r) = num.divrem(f, &prev);
                    debug_assert!(r.is_zero());
                    a[i][j] = q;
                }
                a[i][k] = UPoly::zero();
            }
            prev = a[k][k].clone();
        }
        a[n - 1][n - 1].scale(f, sign)
    }
}

/// Reduced row echelon form (first-nonzero pivoting). Returns the nonzero
/// rows and their pivot columns.
pub fn rref(f: &FieldSpec, mut rows: Vec<Vec<Elem>>, ncols: usize) -> (Vec<Vec<Elem>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][col]).unwrap();
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let c = rows[i][col];
            #[allow(clippy::needless_range_loop)]
            for j in 0..ncols {
                let v = f.mul(c, rows[r][j]);
                rows[i][j] = f.sub(rows[i][j], v);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of the right kernel of the matrix with the given rows.
pub fn kernel_basis(f: &FieldSpec, rows: Vec<Vec<Elem>>, ncols: usize) -> Vec<Vec<Elem>> {
    let (red, pivots) = rref(f, rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Elem::ZERO; ncols];
            v[fc] = Elem::ONE;
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// A linear subspace of `F^ambient` with a reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearSubspace {
    pub field: FieldSpec,
    pub ambient: usize,
    pub basis: Vec<Vec<Elem>>,
}

impl LinearSubspace {
    pub fn from_spanning(f: &FieldSpec, ambient: usize, vectors: Vec<Vec<Elem>>) -> LinearSubspace {
        let (basis, _) = rref(f, vectors, ambient);
        LinearSubspace { field: f.clone(), ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref(&self.field, rows, self.ambient).0.len() == self.dim()
    }

    pub fn contains_subspace(&self, other: &LinearSubspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Linear forms cutting out the subspace (a basis of its annihilator).
    pub fn equations(&self) -> Vec<Vec<Elem>> {
        kernel_basis(&self.field, self.basis.clone(), self.ambient)
    }

    pub fn format(&self) -> Vec<String> {
        self.basis
            .iter()
            .map(|v| v.iter().map(|&e| self.field.format(e)).collect::<Vec<_>>().join(","))
            .collect()
    }
}

/// Column space of `A - I`.
pub fn image_of_shift(a: &Matrix) -> LinearSubspace {
    a.shift().image()
}

/// An element of `PGL(m, q)` stored by its canonically scaled representative
/// (first nonzero entry in row-major order equal to 1).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjectiveClass {
    rep: Matrix,
}

impl ProjectiveClass {
    pub fn new(a: &Matrix) -> Result<ProjectiveClass> {
        if a.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let first = a.entries().iter().copied().find(|e| !e.is_zero()).unwrap();
        let inv = a.field().inv(first).unwrap();
        Ok(ProjectiveClass { rep: a.scale(inv) })
    }

    pub fn identity(field: &FieldSpec, size: usize) -> ProjectiveClass {
        ProjectiveClass { rep: Matrix::identity(field, size) }
    }

    pub fn rep(&self) -> &Matrix {
        &self.rep
    }

    pub fn mul(&self, other: &ProjectiveClass) -> ProjectiveClass {
        ProjectiveClass::new(&self.rep.mul(&other.rep)).expect("product of invertible matrices")
    }

    pub fn pow(&self, e: u64) -> ProjectiveClass {
        ProjectiveClass::new(&self.rep.pow(e)).expect("power of an invertible matrix")
    }

    pub fn is_identity(&self) -> bool {
        self.rep.is_identity()
    }

    /// Order in the projective group.
    pub fn order(&self) -> u64 {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.mul(self);
            k += 1;
        }
        k
    }

    pub fn embed(&self, target: &FieldSpec) -> Result<ProjectiveClass> {
        ProjectiveClass::new(&self.rep.embed(target)?)
    }
}

/// The unique UT(*,I) matrix in the class `g`.
pub fn ut_star_representative(g: &ProjectiveClass) -> Result<Matrix> {
    let b = g.rep();
    let m = b.size();
    let c = b.get(1, 1);
    if c.is_zero() {
        return Err(Error::NotUTStarClass);
    }
    for i in 1..m {
        for j in 0..m {
            let want = if i == j { c } else { Elem::ZERO };
            if b.get(i, j) != want {
                return Err(Error::NotUTStarClass);
            }
        }
    }
    let a = b.scale(b.field().inv(c).unwrap());
    debug_assert!(a.is_ut_star());
    Ok(a)
}

/// For `A` in UT(*,I) with `a11 != 1`, the matrix `B` in UT(*,I) with
/// `B A B^{-1} = diag(a11, 1, ..., 1)`.
pub fn normalizer_to_diagonal(a: &Matrix) -> Result<Matrix> {
    if !a.is_ut_star() {
        return Err(Error::NotUTStar);
    }
    let f = a.field();
    let a11 = a.get(0, 0);
    if a11 == Elem::ONE {
        return Err(Error::UnipotentInput);
    }
    let denom = f.inv(f.sub(a11, Elem::ONE)).unwrap();
    let mut b = Matrix::identity(f, a.size());
    for j in 1..a.size() {
        b.set(0, j, f.mul(a.get(0, j), denom));
    }
    let mut target = vec![Elem::ONE; a.size()];
    target[0] = a11;
    let conj = b.mul(a).mul(&b.inverse().unwrap());
    if conj != Matrix::diag(f, &target) {
        return Err(Error::InvariantViolation("normalizer did not diagonalize".into()));
    }
    Ok(b)
}

/// A projectivized eigenspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenspace {
    pub eigenvalue: Elem,
    pub space: LinearSubspace,
}

/// Fixed points of `[A]` on projective space, computed over the smallest
/// swept extension in which the characteristic polynomial splits.
#[derive(Clone, Debug)]
pub struct FixedLocus {
    pub field: FieldSpec,
    pub level: u32,
    pub components: Vec<Eigenspace>,
}

impl FixedLocus {
    /// Whether the point lies on some component.
    pub fn contains_point(&self, v: &[Elem]) -> bool {
        self.components.iter().any(|c| c.space.contains(v))
    }
}

pub fn fixed_locus(a: &Matrix, s_max: u32) -> Result<FixedLocus> {
    if a.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let base = a.field();
    let cp = a.char_poly();
    for s in 1..=s_max {
        let Ok(ext) = base.extension(s) else { break };
        let emb = base.embedding_to(&ext)?;
        let cp_ext = UPoly::new(cp.coeffs.iter().map(|&c| emb.apply(c)).collect());
        let roots = cp_ext.roots(&ext);
        let total: u32 = roots.iter().map(|&(_, m)| m).sum();
        if total as usize != a.size() {
            continue;
        }
        let a_ext = a.embed(&ext)?;
        let components = roots
            .into_iter()
            .map(|(lambda, _)| {
                let shifted = a_ext.sub(&Matrix::identity(&ext, a.size()).scale(lambda));
                Eigenspace { eigenvalue: lambda, space: shifted.kernel() }
            })
            .collect();
        return Ok(FixedLocus { field: ext, level: s, components });
    }
    Err(Error::EigenvalueOutsideSweep { s_max })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn e12(f: &FieldSpec) -> Matrix {
        Matrix::transvection(f, 3, 0, 1, Elem::ONE)
    }

    #[test]
    fn image_of_shift_examples() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(image_of_shift(&Matrix::identity(&f2, 3)).dim(), 0);
        let img = image_of_shift(&e12(&f2));
        assert_eq!(img.basis, vec![vec![Elem(1), Elem(0), Elem(0)]]);
        let f4 = make_field(2, 2).unwrap();
        let a = Matrix::diag(&f4, &[f4.gen_t().unwrap(), Elem::ONE, Elem::ONE]);
        assert_eq!(image_of_shift(&a).basis, vec![vec![Elem(1), Elem(0), Elem(0)]]);
    }

    #[test]
    fn ut_star_representatives() {
        let f5 = make_field(5, 1).unwrap();
        let id = ProjectiveClass::identity(&f5, 3);
        assert!(ut_star_representative(&id).unwrap().is_identity());
        let g = ProjectiveClass::new(&Matrix::from_ints(&f5, &[&[4, 2, 0], &[0, 2, 0], &[0, 0, 2]]).unwrap()).unwrap();
        let a = ut_star_representative(&g).unwrap();
        assert_eq!(a, Matrix::from_ints(&f5, &[&[2, 1, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap());
        assert_eq!(ProjectiveClass::new(&a).unwrap(), g);
        let bad = ProjectiveClass::new(&Matrix::from_ints(&f5, &[&[1, 0, 0], &[0, 1, 0], &[0, 1, 1]]).unwrap()).unwrap();
        assert_eq!(ut_star_representative(&bad).unwrap_err(), Error::NotUTStarClass);
    }

    #[test]
    fn normalizer_examples() {
        let f5 = make_field(5, 1).unwrap();
        let d = Matrix::diag(&f5, &[Elem(2), Elem::ONE, Elem::ONE]);
        assert!(normalizer_to_diagonal(&d).unwrap().is_identity());
        let a = Matrix::from_ints(&f5, &[&[2, 1, 3], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let b = normalizer_to_diagonal(&a).unwrap();
        assert_eq!(b, Matrix::from_ints(&f5, &[&[1, 1, 3], &[0, 1, 0], &[0, 0, 1]]).unwrap());
        assert_eq!(b.mul(&a).mul(&b.inverse().unwrap()), d);
        assert_eq!(normalizer_to_diagonal(&e12(&f5)).unwrap_err(), Error::UnipotentInput);
    }

    #[test]
    fn fixed_locus_examples() {
        let f3 = make_field(3, 1).unwrap();
        let fl = fixed_locus(&e12(&f3), 4).unwrap();
        assert_eq!(fl.components.len(), 1);
        // hyperplane X1 = 0: spanned by e0, e2
        assert_eq!(fl.components[0].space.dim(), 2);
        assert_eq!(fl.components[0].space.equations(), vec![vec![Elem(0), Elem(1), Elem(0)]]);

        let f5 = make_field(5, 1).unwrap();
        let fl = fixed_locus(&Matrix::diag(&f5, &[Elem(2), Elem::ONE, Elem::ONE]), 4).unwrap();
        let mut dims: Vec<(u32, usize)> = fl.components.iter().map(|c| (c.eigenvalue.index(), c.space.dim())).collect();
        dims.sort();
        assert_eq!(dims, vec![(1, 2), (2, 1)]);
        let point = fl.components.iter().find(|c| c.eigenvalue == Elem(2)).unwrap();
        assert_eq!(point.space.basis, vec![vec![Elem(1), Elem(0), Elem(0)]]);

        let fl = fixed_locus(&Matrix::identity(&f5, 3), 4).unwrap();
        assert_eq!(fl.components.len(), 1);
        assert_eq!(fl.components[0].space.dim(), 3);
    }

    #[test]
    fn eigenvalues_in_extension() {
        // rotation-like matrix with char poly x^2 + 1 over F_3 splits over F_9
        let f3 = make_field(3, 1).unwrap();
        let a = Matrix::from_ints(&f3, &[&[0, 2], &[1, 0]]).unwrap();
        let fl = fixed_locus(&a, 2).unwrap();
        assert_eq!(fl.level, 2);
        assert_eq!(fl.components.len(), 2);
        assert!(matches!(fixed_locus(&a, 1), Err(Error::EigenvalueOutsideSweep { .. })));
    }

    #[test]
    fn char_poly_of_companion() {
        let f5 = make_field(5, 1).unwrap();
        let a = Matrix::from_ints(&f5, &[&[0, 0, 2], &[1, 0, 3], &[0, 1, 4]]).unwrap();
        let cp = a.char_poly();
        // x^3 - 4x^2 - 3x - 2
        assert_eq!(cp.coeffs, vec![f5.from_int(-2), f5.from_int(-3), f5.from_int(-4), Elem::ONE]);
    }
}
