//! Seeded generation of test populations.
//!
//! Random structure constants almost never satisfy Jacobi, so populations are
//! built from catalog algebras by direct sums, central quotients and basis
//! changes.
//!
//! The generator is the 64-bit linear congruential recurrence
//! `x ← x · 6364136223846793005 + 1442695040888963407 (mod 2^64)`
//! started at `x = seed`; each draw advances once and returns the high 32 bits
//! `x >> 32`. `below(b)` is `draw mod b`. Every random choice below is a fixed
//! sequence of draws, so any implementation of the recurrence reproduces the
//! same population.

use crate::catalog::{self, CatalogEntry};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish draw in `0..bound`. `bound` must be positive.
    pub fn below(&mut self, bound: u32) -> u32 {
        self.next_u32() % bound
    }

    /// Draw in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u32) as i64
    }
}

/// A random integer matrix with determinant ±1, so its inverse is integral too.
///
/// Draw order: a permutation by Fisher–Yates (`i` from `n-1` down to 1, swap
/// with `below(i+1)`), `n` signs (`below(2)`), then for each `i < j` an entry
/// of a unit upper triangular factor (`range(-2, 2)`), then for each `i > j`
/// an entry of a unit lower triangular factor (`range(-1, 1)`).
/// The result is `Perm · Signs · U · L`.
pub fn random_unimodular(n: usize, rng: &mut Lcg) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u32 + 1) as usize;
        perm.swap(i, j);
    }
    let signs: Vec<i64> = (0..n).map(|_| if rng.below(2) == 0 { 1 } else { -1 }).collect();
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            upper[(i, j)] = Rational::from(rng.range_i64(-2, 2));
        }
    }
    let mut lower = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = Rational::from(rng.range_i64(-1, 1));
        }
    }
    let mut ps = Matrix::zeros(n, n);
    for (col, &row) in perm.iter().enumerate() {
        ps[(row, col)] = Rational::from(signs[col]);
    }
    ps.mul(&upper)
        .and_then(|m| m.mul(&lower))
        .expect("square factors")
}

/// A random nonzero subspace of the center, or `None` if the center is zero
/// or every draw came out zero.
///
/// Draw order: the requested dimension `1 + below(dim Z)`, then that many
/// vectors of center-basis coefficients `range(-3, 3)`.
pub fn random_central_subspace(l: &LieAlgebra, rng: &mut Lcg) -> Option<Subspace> {
    let z = l.center();
    if z.is_zero() {
        return None;
    }
    let r = 1 + rng.below(z.dim() as u32) as usize;
    let basis: Vec<Vec<Rational>> = z.basis_vectors().map(<[Rational]>::to_vec).collect();
    let vectors: Vec<Vec<Rational>> = (0..r)
        .map(|_| {
            let mut v = vec![Rational::zero(); l.dim()];
            for b in &basis {
                let c = Rational::from(rng.range_i64(-3, 3));
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(b) {
                    *x += &(&c * y);
                }
            }
            v
        })
        .collect();
    let s = Subspace::span(l.dim(), vectors);
    (!s.is_zero()).then_some(s)
}

/// How a population member was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Catalog,
    Sum,
    CentralQuotient,
    BasisChange,
}

#[derive(Clone, Debug)]
pub struct Case {
    /// Unique, human-readable construction path, e.g. `cob(quot(H(2)+A(1)#0)#3)`.
    pub id: String,
    pub origin: Origin,
    pub algebra: LieAlgebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PopulationSpec {
    pub max_m: usize,
    pub max_k: usize,
    pub max_n: usize,
    pub seed: u64,
}

impl Default for PopulationSpec {
    fn default() -> Self {
        PopulationSpec {
            max_m: 4,
            max_k: 3,
            max_n: 10,
            seed: 7,
        }
    }
}

fn seeds(spec: &PopulationSpec) -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = (1..=spec.max_k.max(1)).map(catalog::abelian).collect();
    out.extend((1..=spec.max_m).filter_map(catalog::heisenberg));
    out.push(catalog::l_3_4_1_4());
    out.push(catalog::l_4_5_2_4());
    for m in 1..=spec.max_m {
        out.extend((1..=spec.max_k).filter_map(|k| catalog::heisenberg_plus_abelian(m, k)));
    }
    out.push(catalog::l4524_plus_a1());
    out.retain(|e| e.algebra.dim() <= spec.max_n);
    out
}

/// Builds the population in four stages:
///
/// 1. catalog seeds of dimension `<= max_n`;
/// 2. every unordered pair of seeds (with repetition) whose sum has dimension `<= max_n`,
///    skipping abelian ⊕ abelian;
/// 3. two random central quotients of every stage 1–2 member with nonzero center;
/// 4. one random basis change of every stage 1–3 member.
///
/// A single generator is threaded through stages 3 and 4 in member order.
pub fn generate(spec: &PopulationSpec) -> Vec<Case> {
    let mut rng = Lcg::new(spec.seed);
    let seeds = seeds(spec);
    let mut cases: Vec<Case> = seeds
        .iter()
        .map(|e| Case {
            id: e.name(),
            origin: Origin::Catalog,
            algebra: e.algebra.clone(),
        })
        .collect();

    for (a, ea) in seeds.iter().enumerate() {
        for eb in &seeds[a..] {
            if ea.algebra.dim() + eb.algebra.dim() > spec.max_n
                || (ea.algebra.is_abelian() && eb.algebra.is_abelian())
            {
                continue;
            }
            cases.push(Case {
                id: format!("{}(+){}", ea.name(), eb.name()),
                origin: Origin::Sum,
                algebra: ea.algebra.direct_sum(&eb.algebra),
            });
        }
    }

    let base = cases.len();
    for idx in 0..base {
        for draw in 0..2 {
            let l = &cases[idx].algebra;
            let Some(k) = random_central_subspace(l, &mut rng) else {
                continue;
            };
            let (q, _) = l.quotient(&k).expect("central subspaces are ideals");
            let id = format!("quot({})#{draw}", cases[idx].id);
            cases.push(Case {
                id,
                origin: Origin::CentralQuotient,
                algebra: q,
            });
        }
    }

    let base = cases.len();
    for idx in 0..base {
        let l = &cases[idx].algebra;
        let p = random_unimodular(l.dim(), &mut rng);
        let moved = l.change_of_basis(&p).expect("unimodular matrices are invertible");
        cases.push(Case {
            id: format!("cob({})", cases[idx].id),
            origin: Origin::BasisChange,
            algebra: moved,
        });
    }
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcg_reference_values() {
        // first outputs for seed 0: high words of 1442695040888963407 and its successor
        let mut g = Lcg::new(0);
        assert_eq!(g.next_u32(), (1442695040888963407u64 >> 32) as u32);
        let second = 1442695040888963407u64
            .wrapping_mul(Lcg::MULTIPLIER)
            .wrapping_add(Lcg::INCREMENT);
        assert_eq!(g.next_u32(), (second >> 32) as u32);
    }

    #[test]
    fn unimodular_is_invertible_over_z() {
        let mut g = Lcg::new(42);
        for n in 0..8 {
            let p = random_unimodular(n, &mut g);
            let inv = p.inverse().unwrap();
            assert!((0..n).all(|i| (0..n).all(|j| inv[(i, j)].is_integer())));
        }
    }

    #[test]
    fn central_subspaces_are_central() {
        let mut g = Lcg::new(3);
        let l = catalog::l4524_plus_a1().algebra;
        for _ in 0..10 {
            let k = random_central_subspace(&l, &mut g).unwrap();
            assert!(l.is_central(&k).unwrap());
        }
        assert!(random_central_subspace(&LieAlgebra::abelian(0), &mut g).is_none());
    }

    #[test]
    fn population_is_deterministic_and_large() {
        let spec = PopulationSpec::default();
        let a = generate(&spec);
        let b = generate(&spec);
        assert!(a.len() >= 500, "population has {} cases", a.len());
        assert!(a.iter().zip(&b).all(|(x, y)| x.id == y.id && x.algebra == y.algebra));
        let mut ids: Vec<&str> = a.iter().map(|c| c.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), a.len());
        assert!(a.iter().all(|c| c.algebra.dim() <= spec.max_n));
    }
}
