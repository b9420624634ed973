//! Dense exact linear algebra over the rationals: reduced row-echelon form,
//! rank, kernels, and subspaces with a canonical basis.

use std::fmt;

use crate::error::LinalgError;
use crate::rational::Rational;

/// A dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from a list of rows. Every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            data.extend(row);
        }
        Matrix { rows: n, cols, data }
    }

    /// Convenience constructor from integer entries.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Rational] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.iter_rows().map(|row| dot(row, v)).collect())
    }

    /// Inverse of a square matrix, or `SingularMatrix`.
    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || !pivots.iter().take(n).copied().eq(0..n) {
            return Err(LinalgError::SingularMatrix);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for row in self.iter_rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// `dst -= factor * src`, touching only the columns listed in `support`.
fn axpy_neg(dst: &mut [Rational], factor: &Rational, src: &[Rational], support: &[usize]) {
    for &j in support {
        dst[j] -= &(factor * &src[j]);
    }
}

fn support_from(row: &[Rational], start: usize) -> Vec<usize> {
    (start..row.len()).filter(|&j| !row[j].is_zero()).collect()
}

/// Forward elimination in place. Returns the pivot columns; rows
/// `0..pivots.len()` are then in echelon form with unit leading entries.
fn echelon_in_place(m: &mut Matrix, back_substitute: bool) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Prefer the pivot with the fewest nonzeros to limit fill-in.
        let Some(p) = (r..rows)
            .filter(|&i| !m[(i, c)].is_zero())
            .min_by_key(|&i| m.row(i)[c..].iter().filter(|x| !x.is_zero()).count())
        else {
            continue;
        };
        if p != r {
            for j in c..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
            if back_substitute {
                for j in 0..c {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
        }
        let inv = m[(r, c)].recip();
        if !inv.is_one() {
            for x in &mut m.row_mut(r)[c..] {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let support = support_from(m.row(r), c);
        let pivot_row: Vec<Rational> = m.row(r).to_vec();
        let targets: Box<dyn Iterator<Item = usize>> = if back_substitute {
            Box::new((0..rows).filter(|&i| i != r))
        } else {
            Box::new(r + 1..rows)
        };
        for i in targets {
            let f = m[(i, c)].clone();
            if !f.is_zero() {
                axpy_neg(m.row_mut(i), &f, &pivot_row, &support);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row-echelon form with unit leading entries, and the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut work = m.clone();
    let pivots = echelon_in_place(&mut work, true);
    (work, pivots)
}

/// Rank by forward elimination only.
pub fn rank(m: &Matrix) -> usize {
    // Eliminate along the shorter side.
    let mut work = if m.rows > m.cols { m.transpose() } else { m.clone() };
    echelon_in_place(&mut work, false).len()
}

/// Canonical basis of `{ v : m v = 0 }`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let n = m.cols;
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<Rational>> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(i, f)];
            }
            v
        })
        .collect();
    Subspace::span(n, vectors)
}

/// Canonical subspace spanned by the rows of `m`.
pub fn row_space(m: &Matrix) -> Subspace {
    let (r, pivots) = rref(m);
    let k = pivots.len();
    let basis = Matrix {
        rows: k,
        cols: m.cols,
        data: r.data[..k * m.cols].to_vec(),
    };
    Subspace {
        ambient_dim: m.cols,
        basis,
        pivots,
    }
}

/// A linear subspace of `Q^n` stored by its reduced row-echelon basis.
/// Two values compare equal exactly when they are the same subspace.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        row_space(&Matrix::from_rows(ambient_dim, vectors))
    }

    /// Span of the standard basis vectors with the given (0-based) indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vectors = indices
            .iter()
            .map(|&i| unit_vector(ambient_dim, i))
            .collect();
        Self::span(ambient_dim, vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.iter_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let rows: Vec<Vec<Rational>> = self
            .basis_vectors()
            .chain(other.basis_vectors())
            .map(<[Rational]>::to_vec)
            .collect();
        Ok(Subspace::span(self.ambient_dim, rows))
    }

    /// `{ w : w . v = 0 for all v in self }`.
    pub fn annihilator(&self) -> Subspace {
        kernel_basis(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        // A ∩ B = ann(ann A + ann B)
        let constraints = self.annihilator().sum(&other.annihilator())?;
        Ok(kernel_basis(&constraints.basis))
    }

    /// Residual of `v` after reduction against the echelon basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter_rows().zip(&self.pivots) {
            let f = w[p].clone();
            if !f.is_zero() {
                for (x, y) in w.iter_mut().zip(row).skip(p) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(Rational::is_zero))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        for v in self.basis_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        // With an RREF basis the coordinate on row i is just v[pivot_i].
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Standard basis indices that extend a basis of `self` to the whole space,
    /// chosen greedily in increasing order.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        // For an RREF basis the non-pivot coordinates are exactly the greedy choice.
        (0..self.ambient_dim).filter(|&i| !is_pivot[i]).collect()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}) ", self.dim(), self.ambient_dim)?;
        f.debug_list()
            .entries(
                self.basis_vectors()
                    .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()),
            )
            .finish()
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(x: i64) -> Rational {
        Rational::from(x)
    }

    fn vecq(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(3);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1, 2]));

        let z = Matrix::zeros(2, 4);
        assert_eq!(rref(&z), (z.clone(), vec![]));

        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(rref(&m), (Matrix::from_i64(&[&[1, 2], &[0, 0]]), vec![0]));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(5)), 5);
        assert_eq!(rank(&Matrix::zeros(3, 7)), 0);
        assert_eq!(rank(&Matrix::from_i64(&[&[1, 2], &[2, 4], &[3, 6]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::zeros(2, 3)), Subspace::full(3));
        assert_eq!(kernel_basis(&Matrix::identity(3)), Subspace::zero(3));
        let k = kernel_basis(&Matrix::from_i64(&[&[1, 1, 0]]));
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&vecq(&[1, -1, 0])).unwrap());
        assert!(k.contains(&vecq(&[0, 0, 1])).unwrap());
    }

    #[test]
    fn row_space_examples() {
        assert_eq!(row_space(&Matrix::identity(4)), Subspace::full(4));
        assert_eq!(row_space(&Matrix::zeros(3, 4)), Subspace::zero(4));
        assert_eq!(
            row_space(&Matrix::from_i64(&[&[1, 0], &[1, 1]])),
            Subspace::full(2)
        );
    }

    #[test]
    fn sum_and_intersection_examples() {
        let e = |i| Subspace::coordinate(3, &[i]);
        let a = Subspace::span(3, vec![vecq(&[1, 2, 3])]);
        assert_eq!(a.sum(&Subspace::zero(3)).unwrap(), a);
        assert_eq!(e(0).sum(&e(1)).unwrap(), Subspace::coordinate(3, &[0, 1]));
        let plus = Subspace::span(3, vec![vecq(&[1, 1, 0])]);
        let minus = Subspace::span(3, vec![vecq(&[1, -1, 0])]);
        assert_eq!(plus.sum(&minus).unwrap(), Subspace::coordinate(3, &[0, 1]));

        assert_eq!(a.intersect(&Subspace::full(3)).unwrap(), a);
        assert_eq!(e(0).intersect(&e(1)).unwrap(), Subspace::zero(3));
        let ab = Subspace::coordinate(3, &[0, 1]);
        let bc = Subspace::coordinate(3, &[1, 2]);
        assert_eq!(ab.intersect(&bc).unwrap(), e(1));

        assert!(matches!(
            e(0).sum(&Subspace::zero(2)),
            Err(LinalgError::AmbientMismatch { .. })
        ));
        assert!(e(0).intersect(&Subspace::zero(4)).is_err());
    }

    #[test]
    fn contains_examples() {
        let s = Subspace::coordinate(3, &[1]);
        assert!(s.contains(&vecq(&[0, 0, 0])).unwrap());
        assert!(!s.contains(&vecq(&[1, 0, 0])).unwrap());
        let t = Subspace::span(3, vec![vecq(&[1, 1, 0]), vecq(&[0, 0, 1])]);
        assert!(t.contains(&vecq(&[1, 1, 0])).unwrap());
        assert!(!t.contains(&vecq(&[1, 0, 0])).unwrap());
    }

    #[test]
    fn inverse_and_singular() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        let s = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(LinalgError::SingularMatrix));
        assert_eq!(Matrix::identity(0).inverse().unwrap(), Matrix::identity(0));
    }

    fn arb_matrix(max_r: usize, max_c: usize) -> impl Strategy<Value = Matrix> {
        (1..=max_r, 1..=max_c).prop_flat_map(|(r, c)| {
            // mostly small entries with many zeros so ranks vary
            proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], r * c).prop_map(
                move |xs| {
                    Matrix::from_rows(
                        c,
                        xs.chunks(c)
                            .map(|row| row.iter().map(|&x| Rational::from(x)).collect())
                            .collect(),
                    )
                },
            )
        })
    }

    fn arb_subspace_triple() -> impl Strategy<Value = (Subspace, Subspace)> {
        (1usize..6).prop_flat_map(|n| {
            let v = move || {
                proptest::collection::vec(
                    proptest::collection::vec(-2i64..=2, n).prop_map(|r| vecq(&r)),
                    0..=n,
                )
            };
            (v(), v()).prop_map(move |(a, b)| (Subspace::span(n, a), Subspace::span(n, b)))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix(6, 7)) {
            prop_assert_eq!(rank(&m) + kernel_basis(&m).dim(), m.cols());
            for v in kernel_basis(&m).basis_vectors() {
                prop_assert!(m.apply(v).unwrap().iter().all(Rational::is_zero));
            }
        }

        #[test]
        fn rank_matches_rref_pivots(m in arb_matrix(7, 5)) {
            prop_assert_eq!(rank(&m), rref(&m).1.len());
        }

        #[test]
        fn rref_idempotent(m in arb_matrix(5, 6)) {
            let (r, p) = rref(&m);
            prop_assert_eq!(rref(&r), (r.clone(), p));
        }

        #[test]
        fn row_equivalent_matrices_share_subspace(m in arb_matrix(4, 5), a in -3i64..=3, b in 1i64..=3) {
            // row-add and row-scale keep the row space
            let mut n = m.clone();
            if n.rows() >= 2 {
                let r0 = n.row(0).to_vec();
                for (x, y) in n.row_mut(1).iter_mut().zip(&r0) {
                    *x += &(y * &Rational::from(a));
                }
            }
            for x in n.row_mut(0) {
                *x *= &Rational::from(b);
            }
            prop_assert_eq!(row_space(&m), row_space(&n));
        }

        #[test]
        fn modular_law((a, b) in arb_subspace_triple()) {
            let s = a.sum(&b).unwrap();
            let i = a.intersect(&b).unwrap();
            prop_assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
            prop_assert!(i.is_subspace_of(&a).unwrap() && i.is_subspace_of(&b).unwrap());
            prop_assert!(a.is_subspace_of(&s).unwrap() && b.is_subspace_of(&s).unwrap());
        }
    }
}
