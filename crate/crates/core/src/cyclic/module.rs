use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::exactla::{tensor, Scalar, TensorMap};
use crate::hopf::{is_modular_pair_in_involution, HopfAlgebra, ModularPair};

use super::{CyclicError, DEFAULT_MAX_SPACE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum OpKey {
    Face(usize, usize),
    Degeneracy(usize, usize),
    Cyclic(usize),
}

/// `{H^{⊗n}}` with faces, degeneracies and cyclic operators; operators are
/// built on demand and cached write-once.
#[derive(Debug)]
pub struct CocyclicModule {
    hopf: HopfAlgebra,
    pair: ModularPair,
    twisted: TensorMap,
    max_space: usize,
    cache: Mutex<HashMap<OpKey, Arc<TensorMap>>>,
}

impl CocyclicModule {
    /// Refuses pairs that are not in involution.
    pub fn new(hopf: HopfAlgebra, pair: ModularPair) -> Result<Self, CyclicError> {
        let rep = is_modular_pair_in_involution(&hopf, &pair);
        if !rep.all_passed() {
            return Err(CyclicError::NotInInvolution(rep));
        }
        Ok(Self::new_unchecked(hopf, pair))
    }

    /// Builds the operators for any modular pair, without the involution
    /// guard. Relations beyond the cosimplicial ones may then fail.
    pub fn new_unchecked(hopf: HopfAlgebra, pair: ModularPair) -> Self {
        let twisted = pair.twisted_antipode(&hopf);
        CocyclicModule {
            hopf,
            pair,
            twisted,
            max_space: DEFAULT_MAX_SPACE,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Sets the bound on `dim H^{⊗n}` for materialized levels.
    pub fn with_max_space(mut self, max_space: usize) -> Self {
        self.max_space = max_space;
        self
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn pair(&self) -> &ModularPair {
        &self.pair
    }

    pub fn max_space(&self) -> usize {
        self.max_space
    }

    /// `dim H^{⊗n}`, or `None` on overflow.
    pub fn level_dim(&self, n: usize) -> Option<usize> {
        self.hopf.dim.checked_pow(n as u32)
    }

    pub fn check_level(&self, n: usize) -> Result<(), CyclicError> {
        match self.level_dim(n) {
            Some(dim) if dim <= self.max_space => Ok(()),
            dim => Err(CyclicError::LevelCap { level: n, dim: dim.unwrap_or(usize::MAX), cap: self.max_space }),
        }
    }

    /// Highest level within the space cap, bounded by `limit`.
    pub fn max_materializable_level(&self, limit: usize) -> usize {
        (0..=limit).take_while(|&n| self.check_level(n).is_ok()).last().unwrap_or(0)
    }

    fn cached(&self, key: OpKey, build: impl FnOnce() -> TensorMap) -> Arc<TensorMap> {
        if let Some(m) = self.cache.lock().expect("cache lock").get(&key) {
            return m.clone();
        }
        let m = Arc::new(build());
        self.cache.lock().expect("cache lock").entry(key).or_insert(m).clone()
    }

    fn id(&self, k: usize) -> TensorMap {
        self.hopf.id(k)
    }

    /// `δ_i: H^{⊗(n-1)} → H^{⊗n}` for `0 ≤ i ≤ n`: `δ₀` prepends `1`,
    /// `δ_j` applies `Δ` to the `j`-th factor, `δ_n` appends `σ`.
    pub fn face(&self, n: usize, i: usize) -> Result<Arc<TensorMap>, CyclicError> {
        if n == 0 || i > n {
            return Err(CyclicError::IndexOutOfRange { op: "face", level: n, index: i });
        }
        self.check_level(n)?;
        Ok(self.cached(OpKey::Face(n, i), || {
            let h = &self.hopf;
            let m = if i == 0 {
                h.unit.tensor(&self.id(n - 1))
            } else if i == n {
                self.id(n - 1).tensor(&self.pair.sigma)
            } else {
                self.id(i - 1)
                    .tensor(&h.comult)
                    .and_then(|t| t.tensor(&self.id(n - 1 - i)))
            };
            m.expect("same algebra")
        }))
    }

    /// `σ_i: H^{⊗(n+1)} → H^{⊗n}` for `0 ≤ i ≤ n`: applies `ε` to factor `i+1`.
    pub fn degeneracy(&self, n: usize, i: usize) -> Result<Arc<TensorMap>, CyclicError> {
        if i > n {
            return Err(CyclicError::IndexOutOfRange { op: "degeneracy", level: n, index: i });
        }
        self.check_level(n + 1)?;
        Ok(self.cached(OpKey::Degeneracy(n, i), || {
            self.id(i)
                .tensor(&self.hopf.counit)
                .and_then(|t| t.tensor(&self.id(n - i)))
                .expect("same algebra")
        }))
    }

    /// `τ_n(h¹⊗…⊗hⁿ) = Δ^{(n-1)}S̃(h¹) · (h²⊗…⊗hⁿ⊗σ)`; `τ₀ = id`.
    pub fn cyclic(&self, n: usize) -> Result<Arc<TensorMap>, CyclicError> {
        self.check_level(n)?;
        Ok(self.cached(OpKey::Cyclic(n), || {
            if n == 0 {
                return self.id(0);
            }
            let h = &self.hopf;
            let head = h.iterated_comult(n).compose(&self.twisted).expect("arity");
            let factors = head
                .tensor(&self.id(n - 1))
                .and_then(|t| t.tensor(&self.pair.sigma))
                .expect("same algebra");
            h.multiply_slots(&factors)
        }))
    }

    /// `λ_n = (−1)^n τ_n`.
    pub fn signed_cyclic(&self, n: usize) -> Result<TensorMap, CyclicError> {
        let t = self.cyclic(n)?;
        Ok(if n % 2 == 0 { (*t).clone() } else { t.neg() })
    }

    /// The closed form of `τ_n^j` for `1 ≤ j ≤ n+1`:
    /// `Δ^{(n-1)}S̃(h^j) · (h^{j+1}⊗…⊗hⁿ⊗σ⊗S̃²(h¹)σ⊗…⊗S̃²(h^{j-1})σ)`,
    /// reading `h^{n+1}` as `σ` when `j = n+1`.
    pub fn cyclic_power_closed_form(&self, n: usize, j: usize) -> Result<TensorMap, CyclicError> {
        if n == 0 || j == 0 || j > n + 1 {
            return Err(CyclicError::IndexOutOfRange { op: "cyclic power", level: n, index: j });
        }
        self.check_level(n)?;
        let h = &self.hopf;
        let head = h.iterated_comult(n).compose(&self.twisted)?;
        let sq = self.twisted.compose(&self.twisted)?;
        let tail = h.right_mult_op(&self.pair.sigma).compose(&sq)?;
        let mut factors = if j <= n {
            head.tensor(&self.id(n - j))?.tensor(&self.pair.sigma)?
        } else {
            head.compose(&self.pair.sigma)?
        };
        for _ in 1..j {
            factors = factors.tensor(&tail)?;
        }
        // input order (h^j, …, h^n, h^1, …, h^{j-1})
        let rotate: Vec<usize> = if j <= n {
            (j - 1..n).chain(0..j - 1).collect()
        } else {
            (0..n).collect()
        };
        let perm = h.permutation(&rotate);
        Ok(h.multiply_slots(&factors).compose(&perm)?)
    }

    /// The constant `1_H^{⊗0}` generator of level 0, for convenience.
    pub fn ground_one(&self) -> TensorMap {
        self.hopf.scalar(Scalar::one())
    }

    /// Decodes a level-`n` basis index into a multi-index.
    pub fn multi_index(&self, n: usize, index: usize) -> Vec<usize> {
        tensor::decode(self.hopf.dim, n, index)
    }
}
