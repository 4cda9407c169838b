use std::sync::Arc;

use crate::exactla::{Field, Scalar, TensorMap};
use crate::hopf::{dual, HopfAlgebra, HopfData, ModularPair};

use super::CatalogError;

/// A finite group by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub labels: Vec<String>,
    /// `cayley_table[a][b]` is the index of `a·b`.
    pub cayley_table: Vec<Vec<usize>>,
    pub inverse_table: Vec<usize>,
    pub identity_index: usize,
}

impl GroupPresentation {
    /// Validates closure, identity, inverses and associativity.
    pub fn new(labels: Vec<String>, cayley_table: Vec<Vec<usize>>) -> Result<Self, CatalogError> {
        let n = cayley_table.len();
        if n == 0 || labels.len() != n {
            return Err(CatalogError::InvalidGroup("table and labels must be nonempty and agree".into()));
        }
        if cayley_table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(CatalogError::InvalidGroup("Cayley table is not closed".into()));
        }
        let identity_index = (0..n)
            .find(|&e| (0..n).all(|a| cayley_table[e][a] == a && cayley_table[a][e] == a))
            .ok_or_else(|| CatalogError::InvalidGroup("no identity element".into()))?;
        let mut inverse_table = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| cayley_table[a][b] == identity_index && cayley_table[b][a] == identity_index)
                .ok_or_else(|| CatalogError::InvalidGroup(format!("{} has no inverse", labels[a])))?;
            inverse_table.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley_table[cayley_table[a][b]][c] != cayley_table[a][cayley_table[b][c]] {
                        return Err(CatalogError::InvalidGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(GroupPresentation { labels, cayley_table, inverse_table, identity_index })
    }

    pub fn order(&self) -> usize {
        self.cayley_table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley_table[a][b]
    }

    /// ℤ/n with elements `1, g, g2, …`.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(labels, table).expect("cyclic group")
    }

    /// The symmetric group on three letters, elements ordered
    /// lexicographically as permutations (identity first); `a·b` is the
    /// composite "apply `b`, then `a`".
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let labels = perms
            .iter()
            .map(|p| {
                if *p == [0, 1, 2] {
                    "1".to_string()
                } else {
                    format!("({}{}{})", p[0] + 1, p[1] + 1, p[2] + 1)
                }
            })
            .collect();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        Self::new(labels, table).expect("S3")
    }
}

fn entries_1(
    items: impl IntoIterator<Item = (Vec<usize>, Vec<usize>)>,
) -> Vec<(Vec<usize>, Vec<usize>, Scalar)> {
    items.into_iter().map(|(r, c)| (r, c, Scalar::one())).collect()
}

/// The group algebra `k[G]` with its trivial modular pair `(ε, 1)`.
pub fn group_algebra(g: &GroupPresentation, field: Arc<Field>) -> Result<(HopfAlgebra, ModularPair), CatalogError> {
    let n = g.order();
    let e = g.identity_index;
    let mk = |dom, cod, items| TensorMap::from_entries(field.clone(), n, dom, cod, entries_1(items));
    let mult = mk(
        2,
        1,
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| (vec![g.mul(a, b)], vec![a, b]))
            .collect::<Vec<_>>(),
    )?;
    let unit = mk(0, 1, vec![(vec![e], vec![])])?;
    let comult = mk(1, 2, (0..n).map(|a| (vec![a, a], vec![a])).collect())?;
    let counit = mk(1, 0, (0..n).map(|a| (vec![], vec![a])).collect())?;
    let antipode = mk(1, 1, (0..n).map(|a| (vec![g.inverse_table[a]], vec![a])).collect())?;
    let h = HopfAlgebra::new(HopfData {
        field,
        dim: n,
        basis_labels: g.labels.clone(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    })?;
    let pair = ModularPair::trivial(&h);
    Ok((h, pair))
}

/// The algebra of functions on `G` in the basis of point indicators
/// (labelled `g*`), with pointwise product and `Δ(f)(a, b) = f(ab)`.
pub fn function_algebra(g: &GroupPresentation, field: Arc<Field>) -> Result<HopfAlgebra, CatalogError> {
    let n = g.order();
    let e = g.identity_index;
    let mk = |dom, cod, items| TensorMap::from_entries(field.clone(), n, dom, cod, entries_1(items));
    let mult = mk(2, 1, (0..n).map(|a| (vec![a], vec![a, a])).collect())?;
    let unit = mk(0, 1, (0..n).map(|a| (vec![a], vec![])).collect())?;
    let comult = mk(
        1,
        2,
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| (vec![a, b], vec![g.mul(a, b)]))
            .collect::<Vec<_>>(),
    )?;
    let counit = mk(1, 0, vec![(vec![], vec![e])])?;
    let antipode = mk(1, 1, (0..n).map(|a| (vec![g.inverse_table[a]], vec![a])).collect())?;
    let h = HopfAlgebra::new(HopfData {
        field,
        dim: n,
        basis_labels: g.labels.iter().map(|l| format!("{l}*")).collect(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    })?;
    Ok(h)
}

/// `dual(k[G])`, for cross-checking [`function_algebra`].
pub fn function_algebra_via_dual(g: &GroupPresentation, field: Arc<Field>) -> Result<HopfAlgebra, CatalogError> {
    let (h, _) = group_algebra(g, field)?;
    Ok(dual(&h)?)
}

/// The one-dimensional Hopf algebra `k`.
pub fn trivial(field: Arc<Field>) -> HopfAlgebra {
    let g = GroupPresentation::cyclic(1);
    group_algebra(&g, field).expect("trivial group").0
}
