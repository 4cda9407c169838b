//! Sweedler's four-dimensional algebra and the Taft algebras `T_N(ζ)`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::exactla::{Field, Scalar, TensorMap};
use crate::hopf::{is_modular_pair_in_involution, HopfAlgebra, HopfData, ModularPair};

use super::CatalogError;

/// Sweedler's `H₄` on the basis `1, g, x, gx` with `g² = 1`, `x² = 0`,
/// `xg = −gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `S(x) = −gx`.
#[derive(Clone, Debug)]
pub struct SweedlerH4 {
    pub hopf: HopfAlgebra,
    pub g: TensorMap,
}

impl SweedlerH4 {
    /// `R_λ = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + λ/2 (x⊗x − x⊗gx + gx⊗gx + gx⊗x)`,
/// the sign pattern matching `Δx = x⊗1 + g⊗x`.
    ///
    /// Entered as data; callers gate it with `check_quasitriangular`.
    pub fn r_matrix(&self, lambda: &Scalar) -> TensorMap {
        let f = &self.hopf.field;
        let half = Scalar::from_frac(1, 2);
        let lh = f.mul(lambda, &half);
        let (one, g, x, gx) = (0, 1, 2, 3);
        let d = 4;
        let entries = [
            ((one, one), half.clone()),
            ((one, g), half.clone()),
            ((g, one), half.clone()),
            ((g, g), -&half),
            ((x, x), lh.clone()),
            ((x, gx), -&lh),
            ((gx, gx), lh.clone()),
            ((gx, x), lh.clone()),
        ];
        let coords: Vec<(usize, Scalar)> =
            entries.iter().map(|((a, b), v)| (a * d + b, v.clone())).collect();
        TensorMap::vector(f.clone(), d, 2, &coords).expect("indices in range")
    }
}

pub fn sweedler_h4(field: Arc<Field>) -> Result<SweedlerH4, CatalogError> {
    let one = Scalar::one;
    let neg = || -Scalar::one();
    let (e1, g, x, gx) = (0usize, 1usize, 2usize, 3usize);
    // (result, left, right, coefficient)
    let table: Vec<(usize, usize, usize, Scalar)> = vec![
        (e1, e1, e1, one()),
        (g, e1, g, one()),
        (x, e1, x, one()),
        (gx, e1, gx, one()),
        (g, g, e1, one()),
        (e1, g, g, one()),
        (gx, g, x, one()),
        (x, g, gx, one()),
        (x, x, e1, one()),
        (gx, x, g, neg()),
        (gx, gx, e1, one()),
        (x, gx, g, neg()),
    ];
    let mult = TensorMap::from_entries(
        field.clone(),
        4,
        2,
        1,
        table.into_iter().map(|(r, a, b, v)| (vec![r], vec![a, b], v)),
    )?;
    let unit = TensorMap::from_entries(field.clone(), 4, 0, 1, [(vec![e1], vec![], one())])?;
    let comult = TensorMap::from_entries(
        field.clone(),
        4,
        1,
        2,
        [
            (vec![e1, e1], vec![e1], one()),
            (vec![g, g], vec![g], one()),
            (vec![x, e1], vec![x], one()),
            (vec![g, x], vec![x], one()),
            (vec![gx, g], vec![gx], one()),
            (vec![e1, gx], vec![gx], one()),
        ],
    )?;
    let counit = TensorMap::from_entries(
        field.clone(),
        4,
        1,
        0,
        [(vec![], vec![e1], one()), (vec![], vec![g], one())],
    )?;
    let antipode = TensorMap::from_entries(
        field.clone(),
        4,
        1,
        1,
        [
            (vec![e1], vec![e1], one()),
            (vec![g], vec![g], one()),
            (vec![gx], vec![x], neg()),
            (vec![x], vec![gx], one()),
        ],
    )?;
    let hopf = HopfAlgebra::new(HopfData {
        field,
        dim: 4,
        basis_labels: ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    })?;
    let g = hopf.basis_vector(1);
    Ok(SweedlerH4 { hopf, g })
}

/// The Taft algebra of dimension `N²` on the basis `g^a x^b`
/// (index `a + N·b`) with `g^N = 1`, `x^N = 0`, `xg = ζ gx`,
/// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `S(g) = g⁻¹`, `S(x) = −g⁻¹x`.
#[derive(Clone, Debug)]
pub struct TaftAlgebra {
    pub hopf: HopfAlgebra,
    pub order: usize,
    pub zeta: Scalar,
}

/// A modular pair found by [`TaftAlgebra::search_modular_pairs`]:
/// `σ = g^k` and `δ(g) = ζ^m`, `δ(x) = 0`.
#[derive(Clone, Debug)]
pub struct TaftPair {
    pub sigma_power: usize,
    pub delta_power: usize,
    pub pair: ModularPair,
}

fn label(a: usize, b: usize) -> String {
    let part = |sym: &str, e: usize| match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}{e}"),
    };
    let s = format!("{}{}", part("g", a), part("x", b));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Product in `H^{⊗k}` of elements given as (multi-index, coefficient)
/// lists, from the table `table[i][j]` = coordinates of `e_i e_j`.
fn mul_tensor(
    field: &Field,
    table: &[Vec<Vec<(usize, Scalar)>>],
    a: &[(Vec<usize>, Scalar)],
    b: &[(Vec<usize>, Scalar)],
) -> Vec<(Vec<usize>, Scalar)> {
    let mut acc: std::collections::BTreeMap<Vec<usize>, Scalar> = Default::default();
    for (ia, va) in a {
        for (ib, vb) in b {
            // expand the product factor by factor
            let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), field.mul(va, vb))];
            for (p, q) in ia.iter().zip(ib) {
                let mut next = Vec::new();
                for (idx, c) in &partial {
                    for (k, t) in &table[*p][*q] {
                        let mut j = idx.clone();
                        j.push(*k);
                        next.push((j, field.mul(c, t)));
                    }
                }
                partial = next;
            }
            for (idx, c) in partial {
                *acc.entry(idx).or_default() += &c;
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Builds `T_N(ζ)`; `ζ` must be a primitive `N`-th root of unity in `field`.
pub fn taft(order: usize, zeta: Scalar, field: Arc<Field>) -> Result<TaftAlgebra, CatalogError> {
    let n = order;
    if n < 2 {
        return Err(CatalogError::NoPrimitiveRoot(n));
    }
    if !field.pow(&zeta, n as u64).is_one() || (1..n).any(|k| field.pow(&zeta, k as u64).is_one()) {
        return Err(CatalogError::NoPrimitiveRoot(n));
    }
    let d = n * n;
    let idx = |a: usize, b: usize| a + n * b;
    let zeta_pow: Vec<Scalar> = (0..n).map(|k| field.pow(&zeta, k as u64)).collect();

    // (g^a x^b)(g^c x^e) = ζ^{bc} g^{a+c} x^{b+e}
    let mut table = vec![vec![Vec::new(); d]; d];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    if b + e < n {
                        table[idx(a, b)][idx(c, e)] = vec![(idx((a + c) % n, b + e), zeta_pow[(b * c) % n].clone())];
                    }
                }
            }
        }
    }
    let mult = TensorMap::from_entries(
        field.clone(),
        d,
        2,
        1,
        (0..d).flat_map(|i| {
            let table = &table;
            (0..d).flat_map(move |j| table[i][j].iter().map(move |(k, v)| (vec![*k], vec![i, j], v.clone())))
        }),
    )?;
    let unit = TensorMap::from_entries(field.clone(), d, 0, 1, [(vec![0], vec![], Scalar::one())])?;

    let g = idx(1, 0);
    let x = idx(0, 1);
    let g_inv = idx(n - 1, 0);
    let one2: Vec<(Vec<usize>, Scalar)> = vec![(vec![0, 0], Scalar::one())];
    let dg: Vec<(Vec<usize>, Scalar)> = vec![(vec![g, g], Scalar::one())];
    let dx: Vec<(Vec<usize>, Scalar)> = vec![(vec![x, 0], Scalar::one()), (vec![g, x], Scalar::one())];
    let one1: Vec<(Vec<usize>, Scalar)> = vec![(vec![0], Scalar::one())];
    let sg: Vec<(Vec<usize>, Scalar)> = vec![(vec![g_inv], Scalar::one())];
    let sx: Vec<(Vec<usize>, Scalar)> = mul_tensor(&field, &table, &[(vec![g_inv], -Scalar::one())], &[(vec![x], Scalar::one())]);

    let mut comult = Vec::new();
    let mut antipode = Vec::new();
    let mut counit = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let col = idx(a, b);
            // Δ(g^a x^b) = Δ(g)^a Δ(x)^b
            let mut v = one2.clone();
            for _ in 0..a {
                v = mul_tensor(&field, &table, &v, &dg);
            }
            for _ in 0..b {
                v = mul_tensor(&field, &table, &v, &dx);
            }
            comult.extend(v.into_iter().map(|(r, s)| (r, vec![col], s)));
            // S(g^a x^b) = S(x)^b S(g)^a
            let mut s = one1.clone();
            for _ in 0..b {
                s = mul_tensor(&field, &table, &s, &sx);
            }
            for _ in 0..a {
                s = mul_tensor(&field, &table, &s, &sg);
            }
            antipode.extend(s.into_iter().map(|(r, v)| (r, vec![col], v)));
            if b == 0 {
                counit.push((vec![], vec![col], Scalar::one()));
            }
        }
    }
    let comult = TensorMap::from_entries(field.clone(), d, 1, 2, comult)?;
    let antipode = TensorMap::from_entries(field.clone(), d, 1, 1, antipode)?;
    let counit = TensorMap::from_entries(field.clone(), d, 1, 0, counit)?;
    let labels = (0..d).map(|i| label(i % n, i / n)).collect();
    let hopf = HopfAlgebra::new(HopfData {
        field,
        dim: d,
        basis_labels: labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
    })?;
    Ok(TaftAlgebra { hopf, order: n, zeta })
}

/// `T_N` over `ℚ(ζ_N)` with `ζ` the generator (`ζ = −1` over `ℚ` for `N = 2`).
pub fn taft_cyclotomic(order: usize) -> Result<TaftAlgebra, CatalogError> {
    let field = Field::cyclotomic(order);
    let zeta = field.generator_element().unwrap_or_else(|| -Scalar::one());
    taft(order, zeta, field)
}

impl TaftAlgebra {
    /// The group-like `g^k`.
    pub fn group_like(&self, k: usize) -> TensorMap {
        self.hopf.basis_vector(k % self.order)
    }

    /// The character with `δ(g) = ζ^m`, `δ(x) = 0`.
    pub fn character(&self, m: usize) -> TensorMap {
        let f = &self.hopf.field;
        let zm = f.pow(&self.zeta, m as u64);
        let coords: Vec<(usize, Scalar)> = (0..self.order)
            .map(|a| (a, f.pow(&zm, a as u64)))
            .collect();
        self.hopf.covector(&coords).expect("indices in range")
    }

    /// Every pair `(δ_m, g^k)` on the `N × N` grid that is a modular pair in
    /// involution, ordered by `(k, m)`.
    pub fn search_modular_pairs(&self) -> Vec<TaftPair> {
        let n = self.order;
        let grid: Vec<(usize, usize)> = (0..n).flat_map(|k| (0..n).map(move |m| (k, m))).collect();
        grid.into_par_iter()
            .filter_map(|(k, m)| {
                let pair = ModularPair::new(&self.hopf, self.character(m), self.group_like(k)).ok()?;
                is_modular_pair_in_involution(&self.hopf, &pair)
                    .all_passed()
                    .then_some(TaftPair { sigma_power: k, delta_power: m, pair })
            })
            .collect()
    }
}
