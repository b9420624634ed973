//! Named algebra families with closed-form multiplier dimensions.

use std::fmt;
use std::str::FromStr;

use crate::lie::{build_sparse, choose2, LieAlgebra, SparseBracket};
use crate::multiplier::s_defect;

/// Stable family identifiers, shared with the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `A(k)`
    Abelian,
    /// `H(m)`
    Heisenberg,
    /// `L(3,4,1,4)`
    L3414,
    /// `L(4,5,2,4)`
    L4524,
    /// `H(m) ⊕ A(k)`
    HeisenbergPlusAbelian,
    /// `L(4,5,2,4) ⊕ A(1)`
    L4524PlusA1,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Abelian,
        Family::Heisenberg,
        Family::L3414,
        Family::L4524,
        Family::HeisenbergPlusAbelian,
        Family::L4524PlusA1,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::Abelian => "A",
            Family::Heisenberg => "H",
            Family::L3414 => "L3414",
            Family::L4524 => "L4524",
            Family::HeisenbergPlusAbelian => "HplusA",
            Family::L4524PlusA1 => "L4524plusA1",
        }
    }

    /// Number of integer parameters the constructor takes.
    pub fn arity(self) -> usize {
        match self {
            Family::Abelian | Family::Heisenberg => 1,
            Family::HeisenbergPlusAbelian => 2,
            Family::L3414 | Family::L4524 | Family::L4524PlusA1 => 0,
        }
    }

    /// Builds the entry for this family, or `None` if the parameters are invalid.
    pub fn entry(self, params: &[usize]) -> Option<CatalogEntry> {
        if params.len() != self.arity() {
            return None;
        }
        match self {
            Family::Abelian => Some(abelian(params[0])),
            Family::Heisenberg => heisenberg(params[0]),
            Family::L3414 => Some(l_3_4_1_4()),
            Family::L4524 => Some(l_4_5_2_4()),
            Family::HeisenbergPlusAbelian => heisenberg_plus_abelian(params[0], params[1]),
            Family::L4524PlusA1 => Some(l4524_plus_a1()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown family `{0}` (expected one of A, H, L3414, L4524, HplusA, L4524plusA1)")]
pub struct UnknownFamily(pub String);

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| UnknownFamily(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub family: Family,
    pub params: Vec<usize>,
    pub algebra: LieAlgebra,
    pub expected_dim_m: Option<usize>,
    pub expected_s: Option<i64>,
}

impl CatalogEntry {
    /// `A(3)`, `H(2)`, `H(2)+A(1)`, `L(3,4,1,4)`, ...
    pub fn name(&self) -> String {
        match (self.family, self.params.as_slice()) {
            (Family::Abelian, [k]) => format!("A({k})"),
            (Family::Heisenberg, [m]) => format!("H({m})"),
            (Family::HeisenbergPlusAbelian, [m, k]) => format!("H({m})+A({k})"),
            (Family::L3414, _) => "L(3,4,1,4)".into(),
            (Family::L4524, _) => "L(4,5,2,4)".into(),
            (Family::L4524PlusA1, _) => "L(4,5,2,4)+A(1)".into(),
            (f, p) => format!("{f}{p:?}"),
        }
    }
}

pub fn abelian(k: usize) -> CatalogEntry {
    CatalogEntry {
        family: Family::Abelian,
        params: vec![k],
        algebra: LieAlgebra::abelian(k),
        expected_dim_m: Some(choose2(k)),
        expected_s: None,
    }
}

/// Multiplier dimension of `H(m)`: 2 for `m = 1`, `2m² − m − 1` otherwise.
pub fn heisenberg_multiplier_dim(m: usize) -> usize {
    if m == 1 {
        2
    } else {
        2 * m * m - m - 1
    }
}

fn heisenberg_algebra(m: usize) -> LieAlgebra {
    let n = 2 * m + 1;
    let terms = [(n - 1, 1i64)];
    let brackets: Vec<SparseBracket> =
        (0..m).map(|i| (2 * i, 2 * i + 1, &terms[..])).collect();
    build_sparse(n, &brackets).expect("Heisenberg relations satisfy Jacobi")
}

/// `H(m)`, dimension `2m + 1`, `[e_{2i-1}, e_{2i}] = e_{2m+1}`. `None` for `m = 0`.
pub fn heisenberg(m: usize) -> Option<CatalogEntry> {
    if m == 0 {
        return None;
    }
    let dim_m = heisenberg_multiplier_dim(m);
    Some(CatalogEntry {
        family: Family::Heisenberg,
        params: vec![m],
        algebra: heisenberg_algebra(m),
        expected_dim_m: Some(dim_m),
        expected_s: Some(s_defect(2 * m + 1, dim_m)),
    })
}

/// The 4-dimensional filiform algebra: `[e1,e2] = e3`, `[e1,e3] = e4`.
pub fn l_3_4_1_4() -> CatalogEntry {
    let algebra = build_sparse(4, &[(0, 1, &[(2, 1)]), (0, 2, &[(3, 1)])])
        .expect("filiform relations satisfy Jacobi");
    CatalogEntry {
        family: Family::L3414,
        params: vec![],
        algebra,
        expected_dim_m: Some(2),
        expected_s: Some(2),
    }
}

fn l4524_algebra() -> LieAlgebra {
    build_sparse(5, &[(0, 1, &[(3, 1)]), (0, 2, &[(4, 1)])]).expect("relations satisfy Jacobi")
}

/// `[e1,e2] = e4`, `[e1,e3] = e5`.
pub fn l_4_5_2_4() -> CatalogEntry {
    CatalogEntry {
        family: Family::L4524,
        params: vec![],
        algebra: l4524_algebra(),
        expected_dim_m: Some(6),
        expected_s: Some(1),
    }
}

/// `H(m) ⊕ A(k)`. `None` for `m = 0`.
pub fn heisenberg_plus_abelian(m: usize, k: usize) -> Option<CatalogEntry> {
    if m == 0 {
        return None;
    }
    let n = 2 * m + 1 + k;
    let (dim_m, s) = if m == 1 {
        (choose2(n - 1) + 1, 0)
    } else {
        (n * (n - 3) / 2, 2)
    };
    Some(CatalogEntry {
        family: Family::HeisenbergPlusAbelian,
        params: vec![m, k],
        algebra: heisenberg_algebra(m).direct_sum(&LieAlgebra::abelian(k)),
        expected_dim_m: Some(dim_m),
        expected_s: Some(s),
    })
}

pub fn l4524_plus_a1() -> CatalogEntry {
    CatalogEntry {
        family: Family::L4524PlusA1,
        params: vec![],
        algebra: l4524_algebra().direct_sum(&LieAlgebra::abelian(1)),
        expected_dim_m: Some(9),
        expected_s: Some(2),
    }
}

/// Every catalog entry with `m <= max_m`, `k <= max_k`: `A(0..=max_k)`,
/// `H(1..=max_m)`, the two named algebras, `H(m) ⊕ A(k)` and `L(4,5,2,4) ⊕ A(1)`.
pub fn entries(max_m: usize, max_k: usize) -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = (0..=max_k).map(abelian).collect();
    out.extend((1..=max_m).filter_map(heisenberg));
    out.push(l_3_4_1_4());
    out.push(l_4_5_2_4());
    for m in 1..=max_m {
        out.extend((0..=max_k).filter_map(|k| heisenberg_plus_abelian(m, k)));
    }
    out.push(l4524_plus_a1());
    out
}
