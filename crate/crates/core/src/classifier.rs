//! Identification of nilpotent algebras with small `s` by invariant fingerprint.
//!
//! For `s ∈ {0, 1, 2}` the possible algebras form a short list of families
//! whose fingerprints are pairwise disjoint, so matching the fingerprint
//! against the family pins is enough to name the algebra.

use std::fmt;

use crate::catalog::Family;
use crate::error::LieError;
use crate::lie::LieAlgebra;
use crate::multiplier::schur_multiplier_dim;

/// Isomorphism invariants of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub n: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    /// `None` when not nilpotent.
    pub nilpotency_class: Option<usize>,
    pub lcs_dims: Vec<usize>,
    pub dim_m: usize,
    pub t: i64,
    pub s: i64,
}

impl Fingerprint {
    pub fn is_abelian(&self) -> bool {
        self.derived_dim == 0
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class.is_some()
    }
}

impl fmt::Display for Fingerprint {
    /// `n=5 dimL2=1 dimZ=1 class=2 lcs=5,1,0 dimM=5 t=5 s=2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let class = self
            .nilpotency_class
            .map_or_else(|| "none".to_string(), |c| c.to_string());
        let lcs: Vec<String> = self.lcs_dims.iter().map(ToString::to_string).collect();
        write!(
            f,
            "n={} dimL2={} dimZ={} class={} lcs={} dimM={} t={} s={}",
            self.n,
            self.derived_dim,
            self.center_dim,
            class,
            lcs.join(","),
            self.dim_m,
            self.t,
            self.s
        )
    }
}

pub fn fingerprint(l: &LieAlgebra) -> Result<Fingerprint, LieError> {
    let series = l.lower_central_series();
    let m = schur_multiplier_dim(l)?;
    Ok(Fingerprint {
        n: l.dim(),
        derived_dim: series.derived_dim,
        center_dim: series.center_dim,
        nilpotency_class: series.nilpotency_class,
        lcs_dims: series.lcs_dims,
        dim_m: m.dim_m,
        t: m.t,
        s: m.s,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Classified,
    OutOfScope,
    TheoremViolation,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Classified => "classified",
            Status::OutOfScope => "out_of_scope",
            Status::TheoremViolation => "theorem_violation",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub status: Status,
    /// Family and parameters when classified. `H(m) ⊕ A(k)` is reported as
    /// `HplusA` with `[m, k]`, including `m = 1`.
    pub family: Option<(Family, Vec<usize>)>,
    pub s: i64,
    pub fingerprint: Fingerprint,
    pub notes: String,
}

impl ClassificationResult {
    pub fn family_id(&self) -> &'static str {
        self.family.as_ref().map_or("none", |(f, _)| f.id())
    }

    pub fn params_string(&self) -> String {
        match &self.family {
            Some((Family::HeisenbergPlusAbelian, p)) => format!("m:{},k:{}", p[0], p[1]),
            Some((_, p)) => p.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
            None => String::new(),
        }
    }
}

/// The necessary conditions a fingerprint must meet for each family with
/// `s <= 2`; `None` fields are unconstrained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyPins {
    pub family: Family,
    pub s: i64,
    pub n: Option<usize>,
    pub derived_dim: usize,
    pub center_dim: Option<usize>,
    pub nilpotency_class: Option<usize>,
}

/// Pin sets for the `s = 2` families. `H(m) ⊕ A(k)` additionally needs
/// `m = (n − dim Z)/2 >= 2` and `dim M = n(n−3)/2`.
pub const S2_PINS: [FamilyPins; 3] = [
    FamilyPins {
        family: Family::L3414,
        s: 2,
        n: Some(4),
        derived_dim: 2,
        center_dim: None,
        nilpotency_class: Some(3),
    },
    FamilyPins {
        family: Family::L4524PlusA1,
        s: 2,
        n: Some(6),
        derived_dim: 2,
        center_dim: Some(3),
        nilpotency_class: Some(2),
    },
    FamilyPins {
        family: Family::HeisenbergPlusAbelian,
        s: 2,
        n: None,
        derived_dim: 1,
        center_dim: None,
        nilpotency_class: Some(2),
    },
];

pub const S1_PINS: FamilyPins = FamilyPins {
    family: Family::L4524,
    s: 1,
    n: Some(5),
    derived_dim: 2,
    center_dim: Some(2),
    nilpotency_class: Some(2),
};

impl FamilyPins {
    pub fn matches(&self, fp: &Fingerprint) -> bool {
        fp.s == self.s
            && self.n.is_none_or(|n| n == fp.n)
            && fp.derived_dim == self.derived_dim
            && self.center_dim.is_none_or(|z| z == fp.center_dim)
            && self.nilpotency_class.is_none_or(|c| Some(c) == fp.nilpotency_class)
    }
}

/// `m = (n − dim Z)/2` for an algebra with one-dimensional derived algebra,
/// when that is an integer.
fn heisenberg_rank(fp: &Fingerprint) -> Option<usize> {
    let d = fp.n.checked_sub(fp.center_dim)?;
    (d % 2 == 0 && d > 0).then_some(d / 2)
}

pub fn classify(l: &LieAlgebra) -> Result<ClassificationResult, LieError> {
    let fp = fingerprint(l)?;
    classify_fingerprint(fp)
}

pub fn classify_fingerprint(fp: Fingerprint) -> Result<ClassificationResult, LieError> {
    if !fp.is_nilpotent() {
        return Err(LieError::NotNilpotent);
    }
    if fp.is_abelian() {
        return Err(LieError::Abelian);
    }
    let s = fp.s;
    let classified = |family: Family, params: Vec<usize>, notes: String| ClassificationResult {
        status: Status::Classified,
        family: Some((family, params)),
        s,
        fingerprint: fp.clone(),
        notes,
    };
    let unmatched = |status: Status, notes: String| ClassificationResult {
        status,
        family: None,
        s,
        fingerprint: fp.clone(),
        notes,
    };

    let result = match s {
        0 => match heisenberg_rank(&fp) {
            Some(1) if fp.derived_dim == 1 => classified(
                Family::HeisenbergPlusAbelian,
                vec![1, fp.n - 3],
                "s=0: H(1)+A(n-3)".into(),
            ),
            _ => unmatched(
                Status::TheoremViolation,
                format!("s=0 but not of the form H(1)+A(n-3): {fp}"),
            ),
        },
        1 if S1_PINS.matches(&fp) => classified(Family::L4524, vec![], "s=1: L(4,5,2,4)".into()),
        1 => unmatched(
            Status::TheoremViolation,
            format!("s=1 but fingerprint differs from L(4,5,2,4): {fp}"),
        ),
        2 => {
            let hits: Vec<&FamilyPins> = S2_PINS.iter().filter(|p| p.matches(&fp)).collect();
            match hits.as_slice() {
                [p] if p.family == Family::HeisenbergPlusAbelian => match heisenberg_rank(&fp) {
                    Some(m) if m >= 2 && fp.dim_m == fp.n * fp.n.saturating_sub(3) / 2 => classified(
                        Family::HeisenbergPlusAbelian,
                        vec![m, fp.n - 2 * m - 1],
                        format!("s=2: H({m})+A({})", fp.n - 2 * m - 1),
                    ),
                    _ => unmatched(
                        Status::TheoremViolation,
                        format!("s=2 with dim L^2=1 but no H(m)+A(k), m>=2, fits: {fp}"),
                    ),
                },
                [p] => classified(p.family, vec![], format!("s=2: {}", p.family)),
                [] => unmatched(
                    Status::TheoremViolation,
                    format!("s=2 but no family pin-set matches: {fp}"),
                ),
                _ => unmatched(
                    Status::TheoremViolation,
                    format!("s=2 and several families match: {fp}"),
                ),
            }
        }
        _ => unmatched(Status::OutOfScope, format!("s={s} is outside 0..=2")),
    };
    Ok(result)
}

/// Outcome of checking that no algebra has `s = 2` together with `dim L² >= 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateCheck {
    pub passes: bool,
    pub fingerprint: Fingerprint,
}

pub fn lemma_l1_gate(l: &LieAlgebra) -> Result<GateCheck, LieError> {
    if !l.is_nilpotent() {
        return Err(LieError::NotNilpotent);
    }
    let fp = fingerprint(l)?;
    Ok(GateCheck {
        passes: !(fp.s == 2 && fp.derived_dim >= 3),
        fingerprint: fp,
    })
}

/// True when every two `s = 2` pin sets disagree on `n`, `dim L²` or class.
pub fn s2_pins_disjoint() -> bool {
    let differ = |a: &FamilyPins, b: &FamilyPins| {
        let n = matches!((a.n, b.n), (Some(x), Some(y)) if x != y);
        let c = matches!((a.nilpotency_class, b.nilpotency_class), (Some(x), Some(y)) if x != y);
        n || a.derived_dim != b.derived_dim || c
    };
    S2_PINS
        .iter()
        .enumerate()
        .all(|(i, a)| S2_PINS[i + 1..].iter().all(|b| differ(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::lie::build_sparse;
    use crate::linalg::Matrix;

    #[test]
    fn fingerprint_examples() {
        let fp = fingerprint(&catalog::heisenberg(2).unwrap().algebra).unwrap();
        assert_eq!(
            (fp.n, fp.derived_dim, fp.center_dim, fp.nilpotency_class, fp.dim_m, fp.t, fp.s),
            (5, 1, 1, Some(2), 5, 5, 2)
        );
        let fp = fingerprint(&catalog::abelian(3).algebra).unwrap();
        assert_eq!(
            (fp.n, fp.derived_dim, fp.center_dim, fp.nilpotency_class, fp.dim_m, fp.t),
            (3, 0, 3, Some(1), 3, 0)
        );
        let fp = fingerprint(&catalog::l_3_4_1_4().algebra).unwrap();
        assert_eq!(
            (fp.n, fp.derived_dim, fp.center_dim, fp.nilpotency_class, fp.dim_m, fp.s),
            (4, 2, 1, Some(3), 2, 2)
        );
        assert_eq!(fp.to_string(), "n=4 dimL2=2 dimZ=1 class=3 lcs=4,2,1,0 dimM=2 t=4 s=2");
    }

    #[test]
    fn classify_examples() {
        let r = classify(&catalog::heisenberg_plus_abelian(3, 2).unwrap().algebra).unwrap();
        assert_eq!(r.status, Status::Classified);
        assert_eq!(r.family, Some((Family::HeisenbergPlusAbelian, vec![3, 2])));
        assert_eq!(r.s, 2);

        let p = Matrix::from_i64(&[&[1, 0, 1, 0], &[1, 1, 0, 0], &[0, 0, 1, 2], &[0, 1, 0, 1]]);
        let moved = catalog::l_3_4_1_4().algebra.change_of_basis(&p).unwrap();
        assert_eq!(classify(&moved).unwrap().family, Some((Family::L3414, vec![])));

        let r = classify(&catalog::l_4_5_2_4().algebra).unwrap();
        assert_eq!((r.family_id(), r.s), ("L4524", 1));

        let r = classify(&catalog::heisenberg_plus_abelian(1, 4).unwrap().algebra).unwrap();
        assert_eq!(r.family, Some((Family::HeisenbergPlusAbelian, vec![1, 4])));
        assert_eq!(r.s, 0);

        let r = classify(&catalog::l4524_plus_a1().algebra).unwrap();
        assert_eq!(r.family_id(), "L4524plusA1");
    }

    #[test]
    fn classify_gates() {
        assert_eq!(classify(&catalog::abelian(3).algebra).unwrap_err(), LieError::Abelian);
        let aff = build_sparse(2, &[(0, 1, &[(1, 1)])]).unwrap();
        assert_eq!(classify(&aff).unwrap_err(), LieError::NotNilpotent);
    }

    #[test]
    fn out_of_scope() {
        // H(1) ⊕ H(1): n=6, dim M = 2+2+4 = 8, s = 3
        let h = catalog::heisenberg(1).unwrap().algebra;
        let r = classify(&h.direct_sum(&h)).unwrap();
        assert_eq!((r.status, r.s), (Status::OutOfScope, 3));
    }

    #[test]
    fn synthetic_violation_is_reported() {
        let mut fp = fingerprint(&catalog::l4524_plus_a1().algebra).unwrap();
        fp.center_dim = 2;
        let r = classify_fingerprint(fp).unwrap();
        assert_eq!(r.status, Status::TheoremViolation);
        assert!(r.family.is_none());
    }

    #[test]
    fn gate_examples() {
        for e in catalog::entries(3, 2) {
            assert!(lemma_l1_gate(&e.algebra).unwrap().passes);
        }
        let g = lemma_l1_gate(&catalog::l_3_4_1_4().algebra).unwrap();
        assert!(g.passes && g.fingerprint.s == 2);
    }

    #[test]
    fn disjoint_pins() {
        assert!(s2_pins_disjoint());
    }
}
