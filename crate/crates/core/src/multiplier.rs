//! Schur multiplier dimension through the Chevalley–Eilenberg complex
//! `Λ³L -> Λ²L -> L` with trivial coefficients, the `t` and `s` defects, and
//! checks of the standard multiplier identities and bounds.

use crate::error::LieError;
use crate::lie::{choose2, choose3, pair_index, LieAlgebra};
use crate::linalg::{rank, Matrix, Subspace};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierReport {
    pub n: usize,
    pub rank_d2: usize,
    pub rank_d3: usize,
    pub dim_m: usize,
    pub t: i64,
    pub s: i64,
}

/// `n(n-1)/2 - dim M`.
pub fn t_defect(n: usize, dim_m: usize) -> i64 {
    choose2(n) as i64 - dim_m as i64
}

/// `(n-1)(n-2)/2 + 1 - dim M`.
pub fn s_defect(n: usize, dim_m: usize) -> i64 {
    let n = n as i64;
    (n - 1) * (n - 2) / 2 + 1 - dim_m as i64
}

/// `d2: Λ²L -> L`, `e_i ∧ e_j -> [e_i, e_j]`, as an `n × C(n,2)` matrix.
pub fn ce_d2(l: &LieAlgebra) -> Matrix {
    let n = l.dim();
    let mut d2 = Matrix::zeros(n, choose2(n));
    for (i, j, c) in l.nonzero_brackets() {
        let col = pair_index(n, i, j);
        for (k, x) in c.iter().enumerate() {
            d2[(k, col)] = x.clone();
        }
    }
    d2
}

/// Image of `v ∧ e_k` in the `Λ²` basis, accumulated into `out` with factor `sign`.
fn wedge_into(out: &mut [Rational], n: usize, v: &[Rational], k: usize, negate: bool) {
    for (l, x) in v.iter().enumerate() {
        if x.is_zero() || l == k {
            continue;
        }
        // e_l ∧ e_k = -e_k ∧ e_l when l > k
        let flip = (l > k) != negate;
        let idx = if l < k { pair_index(n, l, k) } else { pair_index(n, k, l) };
        if flip {
            out[idx] -= x;
        } else {
            out[idx] += x;
        }
    }
}

/// Images `d3(e_i ∧ e_j ∧ e_k)` for `i < j < k` in lexicographic order, one
/// `Λ²` coordinate vector per triple.
fn d3_images(l: &LieAlgebra) -> Vec<Vec<Rational>> {
    let n = l.dim();
    let m = choose2(n);
    let mut rows = Vec::with_capacity(choose3(n));
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut out = vec![Rational::zero(); m];
                // [e_i,e_j]∧e_k − [e_i,e_k]∧e_j + [e_j,e_k]∧e_i
                wedge_into(&mut out, n, l.structure_constants(i, j), k, false);
                wedge_into(&mut out, n, l.structure_constants(i, k), j, true);
                wedge_into(&mut out, n, l.structure_constants(j, k), i, false);
                rows.push(out);
            }
        }
    }
    rows
}

/// `d3: Λ³L -> Λ²L` as a `C(n,2) × C(n,3)` matrix.
pub fn ce_d3(l: &LieAlgebra) -> Matrix {
    let n = l.dim();
    Matrix::from_rows(choose2(n), d3_images(l)).transpose()
}

/// `dim M(L) = dim ker d2 - rank d3`.
pub fn schur_multiplier_dim(l: &LieAlgebra) -> Result<MultiplierReport, LieError> {
    let n = l.dim();
    let d2 = ce_d2(l);
    let images = d3_images(l);
    // d2 ∘ d3 = 0 on every triple
    for img in &images {
        if d2.apply(img)?.iter().any(|x| !x.is_zero()) {
            return Err(LieError::ComplexNotExact);
        }
    }
    let rank_d2 = rank(&d2);
    // Only the nonzero images matter for the rank, and there are usually few.
    let nonzero: Vec<Vec<Rational>> = images
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let rank_d3 = if nonzero.is_empty() {
        0
    } else {
        rank(&Matrix::from_rows(choose2(n), nonzero))
    };
    let dim_m = choose2(n) - rank_d2 - rank_d3;
    Ok(MultiplierReport {
        n,
        rank_d2,
        rank_d3,
        dim_m,
        t: t_defect(n, dim_m),
        s: s_defect(n, dim_m),
    })
}

/// `dim(H/H² ⊗ K)` for an abelian `K` of dimension `k_dim`.
pub fn tensor_term_dim(h: &LieAlgebra, k_dim: usize) -> usize {
    (h.dim() - h.derived_subalgebra().dim()) * k_dim
}

fn abelianization_dim(l: &LieAlgebra) -> usize {
    l.dim() - l.derived_subalgebra().dim()
}

/// Both sides of the direct-sum formula for the multiplier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KunnethCheck {
    pub holds: bool,
    /// `dim M(L1 ⊕ L2)` computed on the sum itself.
    pub lhs: usize,
    /// `dim M(L1) + dim M(L2) + dim(L1/L1² ⊗ L2/L2²)`.
    pub rhs: usize,
    pub dim_m1: usize,
    pub dim_m2: usize,
    pub tensor: usize,
}

pub fn check_kunneth(l1: &LieAlgebra, l2: &LieAlgebra) -> Result<KunnethCheck, LieError> {
    let lhs = schur_multiplier_dim(&l1.direct_sum(l2))?.dim_m;
    let dim_m1 = schur_multiplier_dim(l1)?.dim_m;
    let dim_m2 = schur_multiplier_dim(l2)?.dim_m;
    let tensor = abelianization_dim(l1) * abelianization_dim(l2);
    let rhs = dim_m1 + dim_m2 + tensor;
    Ok(KunnethCheck {
        holds: lhs == rhs,
        lhs,
        rhs,
        dim_m1,
        dim_m2,
        tensor,
    })
}

/// Terms of `dim M(L) + dim(L² ∩ K) <= dim M(H) + dim M(K) + dim(H/H² ⊗ K)`
/// for a central ideal `K` and `H = L/K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBoundCheck {
    pub holds: bool,
    pub dim_m_l: usize,
    pub dim_derived_cap_k: usize,
    pub dim_m_h: usize,
    pub dim_m_k: usize,
    pub tensor: usize,
}

impl QuotientBoundCheck {
    pub fn lhs(&self) -> usize {
        self.dim_m_l + self.dim_derived_cap_k
    }

    pub fn rhs(&self) -> usize {
        self.dim_m_h + self.dim_m_k + self.tensor
    }
}

pub fn check_quotient_bound(l: &LieAlgebra, k: &Subspace) -> Result<QuotientBoundCheck, LieError> {
    if !l.is_central(k)? {
        return Err(LieError::NotCentral);
    }
    let (h, _) = l.quotient(k)?;
    let dim_m_l = schur_multiplier_dim(l)?.dim_m;
    let dim_derived_cap_k = l.derived_subalgebra().intersect(k)?.dim();
    let dim_m_h = schur_multiplier_dim(&h)?.dim_m;
    // K is central, hence abelian as a Lie algebra.
    let dim_m_k = schur_multiplier_dim(&LieAlgebra::abelian(k.dim()))?.dim_m;
    let tensor = tensor_term_dim(&h, k.dim());
    let mut check = QuotientBoundCheck {
        holds: false,
        dim_m_l,
        dim_derived_cap_k,
        dim_m_h,
        dim_m_k,
        tensor,
    };
    check.holds = check.lhs() <= check.rhs();
    Ok(check)
}

/// `(n + k - 2)(n - k - 1)/2 + 1`, the multiplier bound for a nilpotent
/// algebra of dimension `n` with `dim L² = k >= 1`.
pub fn derived_bound(n: usize, k: usize) -> i64 {
    let (n, k) = (n as i64, k as i64);
    (n + k - 2) * (n - k - 1) / 2 + 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectBoundCheck {
    pub holds: bool,
    pub n: usize,
    pub derived_dim: usize,
    pub dim_m: usize,
    pub t: i64,
    /// `None` for abelian algebras, where the bound does not apply.
    pub s: Option<i64>,
    /// The bound for `k = dim L²`, when `k >= 1`.
    pub derived_bound: Option<i64>,
}

pub fn check_defect_bounds(l: &LieAlgebra) -> Result<DefectBoundCheck, LieError> {
    if !l.is_nilpotent() {
        return Err(LieError::NotNilpotent);
    }
    let report = schur_multiplier_dim(l)?;
    let k = l.derived_subalgebra().dim();
    let s = (k > 0).then_some(report.s);
    let bound = (k > 0).then(|| derived_bound(report.n, k));
    let holds = report.t >= 0
        && s.is_none_or(|s| s >= 0)
        && bound.is_none_or(|b| report.dim_m as i64 <= b);
    Ok(DefectBoundCheck {
        holds,
        n: report.n,
        derived_dim: k,
        dim_m: report.dim_m,
        t: report.t,
        s,
        derived_bound: bound,
    })
}
