//! Connes' `(b, B)`-bicomplex of the cocyclic module and the dimensions of
//! `HH^n` and `HC^n`.

use rayon::prelude::*;
use serde::Serialize;

use crate::exactla::{elim, Scalar, SparseMatrix, TensorMap};

use super::{CocyclicModule, CyclicError};

/// `b: C^{n-1} → C^n` for `1 ≤ n ≤ top`, `B: C^{n+1} → C^n` for
/// `0 ≤ n < top`, with `b² = 0`, `B² = 0` and `bB + Bb = 0` checked exactly
/// at construction.
#[derive(Debug)]
pub struct Bicomplex<'a> {
    module: &'a CocyclicModule,
    top: usize,
    b: Vec<TensorMap>,
    big_b: Vec<TensorMap>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyRow {
    pub degree: usize,
    pub hochschild: usize,
    pub cyclic: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub rows: Vec<CohomologyRow>,
}

impl CohomologyTable {
    pub fn hochschild(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.hochschild).collect()
    }

    pub fn cyclic(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.cyclic).collect()
    }
}

impl<'a> Bicomplex<'a> {
    /// Builds all operators touching levels `0..=top`.
    pub fn new(module: &'a CocyclicModule, top: usize) -> Result<Self, CyclicError> {
        module.check_level(top)?;
        let mut b = vec![TensorMap::zero(module.hopf().field.clone(), module.hopf().dim, 0, 0)];
        for n in 1..=top {
            b.push(module.hochschild_b(n)?);
        }
        let big_b = (0..top).map(|n| module.connes_b(n)).collect::<Result<Vec<_>, _>>()?;
        let bc = Bicomplex { module, top, b, big_b };
        bc.assert_identities()?;
        Ok(bc)
    }

    fn assert_identities(&self) -> Result<(), CyclicError> {
        let fail = |identity, level| Err(CyclicError::BicomplexIdentity { identity, level });
        for n in 1..self.top {
            if !self.b[n + 1].compose(&self.b[n])?.is_zero() {
                return fail("b∘b = 0", n + 1);
            }
        }
        for n in 0..self.top.saturating_sub(1) {
            if !self.big_b[n].compose(&self.big_b[n + 1])?.is_zero() {
                return fail("B∘B = 0", n);
            }
        }
        // on C^n: b_n B_{n-1} + B_n b_{n+1}
        for n in 0..self.top {
            let mut s = self.big_b[n].compose(&self.b[n + 1])?;
            if n >= 1 {
                s = s.add(&self.b[n].compose(&self.big_b[n - 1])?)?;
            }
            if !s.is_zero() {
                return fail("b∘B + B∘b = 0", n);
            }
        }
        Ok(())
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// `b: C^{n-1} → C^n`; `n = 0` gives the zero map into `C^0`.
    pub fn b(&self, n: usize) -> &TensorMap {
        &self.b[n]
    }

    /// `B: C^{n+1} → C^n`.
    pub fn big_b(&self, n: usize) -> &TensorMap {
        &self.big_b[n]
    }

    fn level_dim(&self, n: usize) -> usize {
        self.module.level_dim(n).expect("checked level")
    }

    /// The total differential `Tot^n → Tot^{n+1}` where
    /// `Tot^n = C^n ⊕ C^{n-2} ⊕ …`.
    pub fn total_differential(&self, n: usize) -> Result<SparseMatrix, CyclicError> {
        assert!(n < self.top, "total differential needs level n+1");
        let col_sizes: Vec<usize> = (0..=n / 2).map(|p| self.level_dim(n - 2 * p)).collect();
        let row_sizes: Vec<usize> = (0..=(n + 1) / 2).map(|p| self.level_dim(n + 1 - 2 * p)).collect();
        let mut grid: Vec<Vec<Option<&SparseMatrix>>> = vec![vec![None; col_sizes.len()]; row_sizes.len()];
        for p in 0..col_sizes.len() {
            let k = n - 2 * p;
            grid[p][p] = Some(self.b[k + 1].matrix());
            if k >= 1 {
                grid[p + 1][p] = Some(self.big_b[k - 1].matrix());
            }
        }
        Ok(SparseMatrix::from_blocks(&row_sizes, &col_sizes, &grid)?)
    }

    /// `dim HH^n` and `dim HC^n` for `0 ≤ n < top`, ranks computed in parallel.
    pub fn cohomology(&self) -> Result<CohomologyTable, CyclicError> {
        let field = &self.module.hopf().field;
        let b_ranks: Vec<usize> = (0..=self.top)
            .into_par_iter()
            .map(|n| if n == 0 { 0 } else { self.b[n].rank() })
            .collect();
        let totals: Vec<SparseMatrix> = (0..self.top).map(|n| self.total_differential(n)).collect::<Result<_, _>>()?;
        let d_ranks: Vec<usize> = totals.par_iter().map(|d| elim::rank(field, d)).collect();
        let rows = (0..self.top)
            .map(|n| {
                let tot: usize = (0..=n / 2).map(|p| self.level_dim(n - 2 * p)).sum();
                let prev = if n == 0 { 0 } else { d_ranks[n - 1] };
                CohomologyRow {
                    degree: n,
                    hochschild: self.level_dim(n) - b_ranks[n + 1] - b_ranks[n],
                    cyclic: tot - d_ranks[n] - prev,
                }
            })
            .collect();
        Ok(CohomologyTable { rows })
    }
}

impl CocyclicModule {
    /// `b = Σ (−1)^i δ_i: C^{n-1} → C^n`.
    pub fn hochschild_b(&self, n: usize) -> Result<TensorMap, CyclicError> {
        let mut acc = (*self.face(n, 0)?).clone();
        for i in 1..=n {
            let f = self.face(n, i)?;
            acc = if i % 2 == 0 { acc.add(&f)? } else { acc.sub(&f)? };
        }
        Ok(acc)
    }

    /// `B: C^{n+1} → C^n`, `B = N ∘ σ_{-1} ∘ (1 − λ)` with `λ = (−1)^n τ`, `σ_{-1} = σ_n τ_{n+1}`
    /// and `N = Σ λ^i`.
    pub fn connes_b(&self, n: usize) -> Result<TensorMap, CyclicError> {
        let h = self.hopf();
        let lam_up = self.signed_cyclic(n + 1)?;
        let one_minus = h.id(n + 1).sub(&lam_up)?;
        let extra = self.degeneracy(n, n)?.compose(&*self.cyclic(n + 1)?)?;
        let lam = self.signed_cyclic(n)?;
        let mut norm = h.id(n);
        let mut power = h.id(n);
        for _ in 1..=n {
            power = lam.compose(&power)?;
            norm = norm.add(&power)?;
        }
        Ok(norm.compose(&extra)?.compose(&one_minus)?)
    }

    /// `dim HH^n` and `dim HC^n` for `0 ≤ n ≤ max_degree`; materializes
    /// level `max_degree + 1`.
    pub fn cohomology_dims(&self, max_degree: usize) -> Result<CohomologyTable, CyclicError> {
        Bicomplex::new(self, max_degree + 1)?.cohomology()
    }

    /// The element `1 ∈ C^0`, a cocycle for `b` and `B`.
    pub fn unit_cochain(&self) -> Scalar {
        Scalar::one()
    }
}
