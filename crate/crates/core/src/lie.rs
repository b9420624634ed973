//! Lie algebras presented by structure constants.
//!
//! Basis indices are 0-based in the API; errors and the text format use the
//! 1-based `e1, e2, ...` names.

use crate::error::LieError;
use crate::linalg::{kernel_basis, unit_vector, Matrix, Subspace};
use crate::rational::Rational;

/// Position of the pair `(i, j)`, `i < j`, in the lexicographic list of pairs of `0..n`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn choose3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// A finite-dimensional Lie algebra over the rationals.
///
/// Only `[e_i, e_j]` with `i < j` is stored; the rest follows from
/// antisymmetry. The Jacobi identity is checked on construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LieAlgebra {
    dim: usize,
    // constants[pair_index(i, j)][k] = coefficient of e_k in [e_i, e_j]
    constants: Vec<Vec<Rational>>,
    labels: Option<Vec<String>>,
}

/// Lower central series data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    /// `dim L^1, dim L^2, ...` up to the first zero term or stabilization.
    pub lcs_dims: Vec<usize>,
    /// `None` when the series stabilizes above zero.
    pub nilpotency_class: Option<usize>,
    pub derived_dim: usize,
    pub center_dim: usize,
}

impl SeriesReport {
    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class.is_some()
    }
}

impl LieAlgebra {
    /// Builds and validates an algebra from `(i, j, [e_i, e_j])` triples with `i < j`.
    pub fn build(dim: usize, brackets: Vec<(usize, usize, Vec<Rational>)>) -> Result<Self, LieError> {
        let mut constants = vec![vec![Rational::zero(); dim]; choose2(dim)];
        let mut seen = vec![false; constants.len()];
        for (i, j, coeffs) in brackets {
            if i >= dim || j >= dim {
                return Err(LieError::IndexOutOfRange { i: i + 1, j: j + 1, dim });
            }
            if i >= j {
                return Err(LieError::UnorderedPair { i: i + 1, j: j + 1 });
            }
            if coeffs.len() != dim {
                return Err(LieError::CoefficientLength {
                    i: i + 1,
                    j: j + 1,
                    found: coeffs.len(),
                    dim,
                });
            }
            let p = pair_index(dim, i, j);
            if std::mem::replace(&mut seen[p], true) {
                return Err(LieError::DuplicateBracket { i: i + 1, j: j + 1 });
            }
            constants[p] = coeffs;
        }
        let alg = LieAlgebra {
            dim,
            constants,
            labels: None,
        };
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// Abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            constants: vec![vec![Rational::zero(); dim]; choose2(dim)],
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim, "one label per basis vector");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `[e_i, e_j]` for any `i, j`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.constants[pair_index(self.dim, i, j)].clone(),
            Greater => self.constants[pair_index(self.dim, j, i)]
                .iter()
                .map(|x| -x)
                .collect(),
            Equal => vec![Rational::zero(); self.dim],
        }
    }

    /// Stored `[e_i, e_j]` for `i < j`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[Rational] {
        &self.constants[pair_index(self.dim, i, j)]
    }

    /// Nonzero brackets `(i, j, [e_i, e_j])` with `i < j`, in lexicographic order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &[Rational])> {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.structure_constants(i, j)))
            .filter(|(_, _, c)| c.iter().any(|x| !x.is_zero()))
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().flatten().all(Rational::is_zero)
    }

    fn check_len(&self, v: &[Rational]) -> Result<(), LieError> {
        if v.len() != self.dim {
            return Err(crate::error::LinalgError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            }
            .into());
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            for j in i + 1..n {
                let c = &self.constants[pair_index(n, i, j)];
                if c.iter().all(Rational::is_zero) {
                    continue;
                }
                let w = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
                if w.is_zero() {
                    continue;
                }
                for (o, ck) in out.iter_mut().zip(c) {
                    if !ck.is_zero() {
                        *o += &(&w * ck);
                    }
                }
            }
        }
        out
    }

    /// `[e_i, v]` without allocating the unit vector.
    fn bracket_basis_with(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() || j == i {
                continue;
            }
            let (c, sign) = if i < j {
                (&self.constants[pair_index(n, i, j)], Rational::one())
            } else {
                (&self.constants[pair_index(n, j, i)], -Rational::one())
            };
            let f = vj * &sign;
            for (o, ck) in out.iter_mut().zip(c) {
                if !ck.is_zero() {
                    *o += &(&f * ck);
                }
            }
        }
        out
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
                    let a = self.bracket_basis_with(k, &self.basis_bracket(i, j));
                    let b = self.bracket_basis_with(i, &self.basis_bracket(j, k));
                    let c = self.bracket_basis_with(j, &self.basis_bracket(k, i));
                    // bracket_basis_with computes [e, v] = -[v, e]
                    let defect: Vec<Rational> = a
                        .iter()
                        .zip(&b)
                        .zip(&c)
                        .map(|((a, b), c)| -(&(a + b) + c))
                        .collect();
                    if defect.iter().any(|x| !x.is_zero()) {
                        return Err(LieError::JacobiViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            defect,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `L^2 = span{[e_i, e_j]}`.
    pub fn derived_subalgebra(&self) -> Subspace {
        Subspace::span(self.dim, self.constants.clone())
    }

    /// `[L, S]` for a subspace `S`.
    pub fn bracket_with_subspace(&self, s: &Subspace) -> Subspace {
        let vectors = s
            .basis_vectors()
            .flat_map(|v| (0..self.dim).map(move |i| self.bracket_basis_with(i, v)))
            .collect();
        Subspace::span(self.dim, vectors)
    }

    /// Kernel of `x -> ([x, e_1], ..., [x, e_n])`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // row (j, k), column i: coefficient of e_k in [e_i, e_j]
        let mut ad = Matrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let b = self.basis_bracket(i, j);
                for (k, x) in b.into_iter().enumerate() {
                    ad[(j * n + k, i)] = x;
                }
            }
        }
        kernel_basis(&ad)
    }

    /// Terms `L = L^1 ⊇ L^2 ⊇ ...` until the series reaches zero or stops shrinking.
    pub fn lower_central_series_terms(&self) -> Vec<Subspace> {
        let mut terms = vec![Subspace::full(self.dim)];
        loop {
            let last = terms.last().unwrap();
            if last.is_zero() {
                break;
            }
            let next = self.bracket_with_subspace(last);
            let stalled = next.dim() == last.dim();
            if !stalled {
                terms.push(next);
            } else {
                break;
            }
        }
        terms
    }

    pub fn lower_central_series(&self) -> SeriesReport {
        let terms = self.lower_central_series_terms();
        let lcs_dims: Vec<usize> = terms.iter().map(Subspace::dim).collect();
        let last = *lcs_dims.last().unwrap();
        let nilpotency_class = (last == 0).then(|| lcs_dims.len().saturating_sub(1));
        SeriesReport {
            derived_dim: lcs_dims.get(1).copied().unwrap_or(last),
            center_dim: self.center().dim(),
            lcs_dims,
            nilpotency_class,
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series_terms()
            .last()
            .is_some_and(Subspace::is_zero)
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool, LieError> {
        if s.ambient_dim() != self.dim {
            return Err(crate::error::LinalgError::AmbientMismatch {
                left: self.dim,
                right: s.ambient_dim(),
            }
            .into());
        }
        for v in s.basis_vectors() {
            for i in 0..self.dim {
                if !s.contains(&self.bracket_basis_with(i, v))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_central(&self, s: &Subspace) -> Result<bool, LieError> {
        if s.ambient_dim() != self.dim {
            return Err(crate::error::LinalgError::AmbientMismatch {
                left: self.dim,
                right: s.ambient_dim(),
            }
            .into());
        }
        Ok(s.is_subspace_of(&self.center())?)
    }

    /// `L / K` on the complement spanned by the standard basis vectors not
    /// among the pivots of `K`, with the projection `L -> L/K` as a matrix.
    pub fn quotient(&self, k: &Subspace) -> Result<(LieAlgebra, Matrix), LieError> {
        if !self.is_ideal(k)? {
            return Err(LieError::NotAnIdeal);
        }
        let n = self.dim;
        let comp = k.complement_indices();
        let r = comp.len();
        // columns: basis of K, then the complement vectors
        let mut basis = Matrix::zeros(n, n);
        for (c, v) in k.basis_vectors().enumerate() {
            for (i, x) in v.iter().enumerate() {
                basis[(i, c)] = x.clone();
            }
        }
        for (c, &e) in comp.iter().enumerate() {
            basis[(e, k.dim() + c)] = Rational::one();
        }
        let inv = basis.inverse()?;
        let projection = Matrix::from_rows(n, (k.dim()..n).map(|i| inv.row(i).to_vec()).collect());

        let mut brackets = Vec::new();
        for a in 0..r {
            for b in a + 1..r {
                let v = self.basis_bracket(comp[a], comp[b]);
                let img = projection.apply(&v)?;
                if img.iter().any(|x| !x.is_zero()) {
                    brackets.push((a, b, img));
                }
            }
        }
        let mut q = LieAlgebra::build(r, brackets)?;
        if let Some(labels) = &self.labels {
            q.labels = Some(comp.iter().map(|&i| labels[i].clone()).collect());
        }
        Ok((q, projection))
    }

    /// `L1 ⊕ L2` with the basis of `L1` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 + n2;
        let mut constants = vec![vec![Rational::zero(); n]; choose2(n)];
        for (i, j, c) in self.nonzero_brackets() {
            constants[pair_index(n, i, j)][..n1].clone_from_slice(c);
        }
        for (i, j, c) in other.nonzero_brackets() {
            constants[pair_index(n, n1 + i, n1 + j)][n1..].clone_from_slice(c);
        }
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            (a, b) => {
                let name = |l: &Option<Vec<String>>, i: usize, off: usize| {
                    l.as_ref().map_or_else(|| format!("e{}", off + i + 1), |l| l[i].clone())
                };
                Some(
                    (0..n1)
                        .map(|i| name(a, i, 0))
                        .chain((0..n2).map(|i| name(b, i, n1)))
                        .collect(),
                )
            }
        };
        LieAlgebra {
            dim: n,
            constants,
            labels,
        }
    }

    /// Re-expresses the algebra in the basis `f_j = sum_i P[i][j] e_i`
    /// (the columns of `p`).
    pub fn change_of_basis(&self, p: &Matrix) -> Result<LieAlgebra, LieError> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(crate::error::LinalgError::DimensionMismatch {
                expected: n,
                found: p.rows().max(p.cols()),
            }
            .into());
        }
        let inv = p.inverse()?;
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| p.column(j)).collect();
        let mut constants = vec![vec![Rational::zero(); n]; choose2(n)];
        for a in 0..n {
            for b in a + 1..n {
                let v = self.bracket_unchecked(&cols[a], &cols[b]);
                if v.iter().any(|x| !x.is_zero()) {
                    constants[pair_index(n, a, b)] = inv.apply(&v)?;
                }
            }
        }
        Ok(LieAlgebra {
            dim: n,
            constants,
            labels: None,
        })
    }
}

/// `(i, j, &[(k, c)])` meaning `[e_i, e_j] = sum c e_k` (0-based).
pub type SparseBracket<'a> = (usize, usize, &'a [(usize, i64)]);

/// Convenience for tests and the catalog: integer structure constants.
pub fn build_sparse(dim: usize, brackets: &[SparseBracket<'_>]) -> Result<LieAlgebra, LieError> {
    let triples = brackets
        .iter()
        .map(|&(i, j, terms)| {
            let mut v = vec![Rational::zero(); dim];
            for &(k, c) in terms {
                if k < dim {
                    v[k] += &Rational::from(c);
                }
            }
            (i, j, v)
        })
        .collect();
    LieAlgebra::build(dim, triples)
}

/// Basis vector `e_i` in dimension `n`.
pub fn basis_vector(n: usize, i: usize) -> Vec<Rational> {
    unit_vector(n, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::LinalgError;

    fn q(x: i64) -> Rational {
        Rational::from(x)
    }

    fn h1() -> LieAlgebra {
        build_sparse(3, &[(0, 1, &[(2, 1)])]).unwrap()
    }

    fn l3414() -> LieAlgebra {
        build_sparse(4, &[(0, 1, &[(2, 1)]), (0, 2, &[(3, 1)])]).unwrap()
    }

    fn h2() -> LieAlgebra {
        build_sparse(5, &[(0, 1, &[(4, 1)]), (2, 3, &[(4, 1)])]).unwrap()
    }

    #[test]
    fn pair_indexing_is_lexicographic() {
        let n = 6;
        let mut expected = 0;
        for i in 0..n {
            for j in i + 1..n {
                assert_eq!(pair_index(n, i, j), expected);
                expected += 1;
            }
        }
        assert_eq!(expected, choose2(n));
    }

    #[test]
    fn build_examples() {
        let h = h1();
        assert_eq!(h.dim(), 3);
        assert_eq!(h.basis_bracket(0, 1), vec![q(0), q(0), q(1)]);
        assert!(LieAlgebra::build(2, vec![]).unwrap().is_abelian());
        // so(3)-like relations over Q: one Jacobi triple, sums to zero
        let so3 = build_sparse(3, &[(0, 1, &[(2, 1)]), (0, 2, &[(1, 1)]), (1, 2, &[(0, 1)])]);
        assert!(so3.is_ok());
    }

    #[test]
    fn build_errors() {
        assert!(matches!(
            build_sparse(3, &[(0, 3, &[(2, 1)])]),
            Err(LieError::IndexOutOfRange { i: 1, j: 4, dim: 3 })
        ));
        assert!(matches!(
            build_sparse(3, &[(1, 0, &[(2, 1)])]),
            Err(LieError::UnorderedPair { .. })
        ));
        assert!(matches!(
            build_sparse(3, &[(0, 1, &[(2, 1)]), (0, 1, &[(2, 2)])]),
            Err(LieError::DuplicateBracket { i: 1, j: 2 })
        ));
        // [e1,e2]=e2, [e1,e3]=e3, [e2,e3]=e1 breaks Jacobi
        let bad = build_sparse(3, &[(0, 1, &[(1, 1)]), (0, 2, &[(2, 1)]), (1, 2, &[(0, 1)])]);
        match bad {
            Err(LieError::JacobiViolation { i, j, k, defect }) => {
                assert_eq!((i, j, k), (1, 2, 3));
                assert!(defect.iter().any(|x| !x.is_zero()));
            }
            other => panic!("expected Jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn bracket_examples() {
        let h = h1();
        let e = |i| basis_vector(3, i);
        assert_eq!(h.bracket(&e(0), &e(1)).unwrap(), e(2));
        assert_eq!(h.bracket(&e(1), &e(0)).unwrap(), vec![q(0), q(0), q(-1)]);
        let x = vec![q(3), q(-2), q(5)];
        assert!(h.bracket(&x, &x).unwrap().iter().all(Rational::is_zero));
        assert!(matches!(
            h.bracket(&x, &[q(1)]),
            Err(LieError::Linalg(LinalgError::DimensionMismatch { .. }))
        ));
    }

    #[test]
    fn derived_and_center() {
        assert!(LieAlgebra::abelian(4).derived_subalgebra().is_zero());
        assert_eq!(h2().derived_subalgebra(), Subspace::coordinate(5, &[4]));
        assert_eq!(l3414().derived_subalgebra().dim(), 2);

        assert_eq!(LieAlgebra::abelian(3).center(), Subspace::full(3));
        assert_eq!(h1().center(), Subspace::coordinate(3, &[2]));
        let l4524a1 = build_sparse(6, &[(0, 1, &[(3, 1)]), (0, 2, &[(4, 1)])]).unwrap();
        assert_eq!(l4524a1.center().dim(), 3);
        for z in l4524a1.center().basis_vectors() {
            for j in 0..6 {
                assert!(l4524a1.bracket(z, &basis_vector(6, j)).unwrap().iter().all(Rational::is_zero));
            }
        }
    }

    #[test]
    fn lower_central_series_examples() {
        let a4 = LieAlgebra::abelian(4).lower_central_series();
        assert_eq!(a4.lcs_dims, vec![4, 0]);
        assert_eq!(a4.nilpotency_class, Some(1));
        let s = h2().lower_central_series();
        assert_eq!((s.lcs_dims, s.nilpotency_class), (vec![5, 1, 0], Some(2)));
        let s = l3414().lower_central_series();
        assert_eq!((s.lcs_dims, s.nilpotency_class), (vec![4, 2, 1, 0], Some(3)));
        // [e1,e2]=e2 is solvable but not nilpotent
        let aff = build_sparse(2, &[(0, 1, &[(1, 1)])]).unwrap();
        let s = aff.lower_central_series();
        assert_eq!((s.lcs_dims, s.nilpotency_class), (vec![2, 1], None));
        assert!(!aff.is_nilpotent());
        let zero = LieAlgebra::abelian(0).lower_central_series();
        assert_eq!((zero.lcs_dims, zero.nilpotency_class), (vec![0], Some(0)));
    }

    #[test]
    fn ideals() {
        for l in [h1(), h2(), l3414()] {
            assert!(l.is_ideal(&l.derived_subalgebra()).unwrap());
            assert!(l.is_ideal(&l.center()).unwrap());
        }
        assert!(!h1().is_ideal(&Subspace::coordinate(3, &[0])).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let h = h1();
        let (q1, _) = h.quotient(&h.center()).unwrap();
        assert_eq!(q1, LieAlgebra::abelian(2));

        let l = l3414();
        let (ab, _) = l.quotient(&l.derived_subalgebra()).unwrap();
        assert_eq!(ab, LieAlgebra::abelian(2));

        let (q2, proj) = l.quotient(&Subspace::coordinate(4, &[3])).unwrap();
        assert_eq!(q2, h1());
        assert_eq!((proj.rows(), proj.cols()), (3, 4));

        assert_eq!(
            h.quotient(&Subspace::coordinate(3, &[0])).unwrap_err(),
            LieError::NotAnIdeal
        );
    }

    #[test]
    fn quotient_commutes_with_projection() {
        let l = l3414().direct_sum(&h1());
        let k = Subspace::span(7, vec![vec![q(0), q(0), q(0), q(1), q(0), q(0), q(-2)]]);
        assert!(l.is_central(&k).unwrap());
        let (quo, proj) = l.quotient(&k).unwrap();
        let x = vec![q(1), q(2), q(-1), q(0), q(3), q(1), q(4)];
        let y = vec![q(0), q(-1), q(1), q(2), q(1), q(5), q(0)];
        let lhs = proj.apply(&l.bracket(&x, &y).unwrap()).unwrap();
        let rhs = quo
            .bracket(&proj.apply(&x).unwrap(), &proj.apply(&y).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn direct_sum_examples() {
        let h = h1();
        assert_eq!(h.direct_sum(&LieAlgebra::abelian(0)), h);
        let s = h.direct_sum(&LieAlgebra::abelian(1));
        assert_eq!((s.dim(), s.derived_subalgebra().dim()), (4, 1));
        assert_eq!(
            LieAlgebra::abelian(2).direct_sum(&LieAlgebra::abelian(3)),
            LieAlgebra::abelian(5)
        );
        assert_eq!(l3414().direct_sum(&h2()).derived_subalgebra().dim(), 3);
    }

    #[test]
    fn change_of_basis_examples() {
        let h = h1();
        assert_eq!(h.change_of_basis(&Matrix::identity(3)).unwrap(), h);
        let mut p = Matrix::identity(3);
        p[(2, 2)] = q(2);
        let scaled = h.change_of_basis(&p).unwrap();
        assert_eq!(scaled.basis_bracket(0, 1), vec![q(0), q(0), Rational::new(1, 2)]);
        let singular = Matrix::zeros(3, 3);
        assert_eq!(
            h.change_of_basis(&singular).unwrap_err(),
            LieError::Linalg(LinalgError::SingularMatrix)
        );
    }

    #[test]
    fn change_of_basis_preserves_series() {
        let l = l3414();
        let p = Matrix::from_i64(&[&[1, 1, 0, 2], &[0, 1, -1, 0], &[0, 0, 1, 3], &[1, 0, 0, 1]]);
        let m = l.change_of_basis(&p).unwrap();
        assert_eq!(m.lower_central_series(), l.lower_central_series());
        // round trip through the inverse
        let back = m.change_of_basis(&p.inverse().unwrap()).unwrap();
        assert_eq!(back, l);
    }
}
