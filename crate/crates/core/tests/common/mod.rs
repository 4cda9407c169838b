//! Dense textbook linear algebra over ℚ, used as an independent oracle.
#![allow(dead_code)]

use hopfcyc_core::exactla::{elim, Field, Scalar, SparseMatrix};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Dense {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Vec<Q>>,
}

impl Dense {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Dense { rows, cols, a: vec![vec![Q::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.a[i][i] = Q::one();
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Dense { rows: rows.len(), cols, a: rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect() }
    }

    pub fn random(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64, density: f64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if rng.gen_bool(density) {
                    m.a[r][c] = q(rng.gen_range(lo..=hi));
                }
            }
        }
        m
    }

    pub fn from_sparse(s: &SparseMatrix) -> Self {
        let mut m = Self::zeros(s.rows(), s.cols());
        for (r, c, v) in s.triplets() {
            m.a[r][c] = v.as_rational().expect("rational entry");
        }
        m
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        let entries = (0..self.rows).flat_map(|r| {
            (0..self.cols).filter(move |&c| !self.a[r][c].is_zero()).map(move |c| (r, c, Scalar::from_rational(self.a[r][c].clone())))
        });
        SparseMatrix::from_triplets(self.rows, self.cols, entries).unwrap()
    }

    pub fn mul(&self, b: &Dense) -> Dense {
        assert_eq!(self.cols, b.rows);
        let mut out = Dense::zeros(self.rows, b.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.a[i][k].is_zero() {
                    continue;
                }
                for j in 0..b.cols {
                    if !b.a[k][j].is_zero() {
                        out.a[i][j] += &self.a[i][k] * &b.a[k][j];
                    }
                }
            }
        }
        out
    }

    pub fn kron(&self, b: &Dense) -> Dense {
        let mut out = Dense::zeros(self.rows * b.rows, self.cols * b.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        out.a[i * b.rows + k][j * b.cols + l] = &self.a[i][j] * &b.a[k][l];
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, b: &Dense) -> Dense {
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.a[i][j] += &b.a[i][j];
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Dense {
        let mut out = self.clone();
        out.a.iter_mut().flatten().for_each(|x| *x *= c);
        out
    }

    pub fn transpose(&self) -> Dense {
        let mut out = Dense::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.a[j][i] = self.a[i][j].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().flatten().all(|x| x.is_zero())
    }

    /// Reduced row echelon form by plain Gauss-Jordan elimination, with the
    /// pivot columns.
    pub fn rref(&self) -> (Dense, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            let Some(p) = (row..m.rows).find(|&r| !m.a[r][col].is_zero()) else { continue };
            m.a.swap(row, p);
            let inv = Q::one() / &m.a[row][col];
            for x in m.a[row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..m.rows {
                if r != row && !m.a[r][col].is_zero() {
                    let f = m.a[r][col].clone();
                    for c in 0..m.cols {
                        let t = &f * &m.a[row][c];
                        m.a[r][c] -= t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel basis indexed by free columns: `e_f − Σ rref[r][f] e_{pivot r}`.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.a[i][f].clone();
                }
                v
            })
            .collect()
    }
}

/// Sparse kernel vectors as dense ones.
pub fn densify(len: usize, v: &[(usize, Scalar)]) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    for (i, s) in v {
        out[*i] = s.as_rational().expect("rational entry");
    }
    out
}

/// Random matrices up to 6×6 with entries in −3..3; returns how many agree
/// with the oracle on rank, pivots and kernel basis.
pub fn rank_kernel_agreement(cases: usize, seed: u64) -> usize {
    let f = Field::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agreed = 0;
    for _ in 0..cases {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let density = rng.gen_range(0.2..=1.0);
        let d = Dense::random(&mut rng, r, c, -3, 3, density);
        let rk = elim::rank_and_kernel(&f, &d.to_sparse());
        let (_, pivots) = d.rref();
        let kernel: Vec<_> = rk.kernel.iter().map(|v| densify(c, v)).collect();
        if rk.rank == pivots.len() && rk.pivots == pivots && kernel == d.kernel() && rk.rank + kernel.len() == c {
            agreed += 1;
        }
    }
    agreed
}

/// Random composable pairs and Kronecker factors; returns how many agree.
pub fn compose_tensor_agreement(cases: usize, seed: u64) -> usize {
    let f = Field::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agreed = 0;
    for _ in 0..cases {
        let (n, k, m) = (rng.gen_range(1..=6), rng.gen_range(1..=6), rng.gen_range(1..=6));
        let a = Dense::random(&mut rng, n, k, -3, 3, 0.5);
        let b = Dense::random(&mut rng, k, m, -3, 3, 0.5);
        let (sa, sb) = (a.to_sparse(), b.to_sparse());
        let composed = sa.compose(&f, &sb).unwrap();
        let (cr, cc) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let c = Dense::random(&mut rng, cr, cc, -3, 3, 0.6);
        let kron = sa.kron(&f, &c.to_sparse());
        if composed == a.mul(&b).to_sparse() && kron == a.kron(&c).to_sparse() {
            agreed += 1;
        }
    }
    agreed
}

pub mod catalog {
    use hopfcyc_core::catalog::{function_algebra, group_algebra, sweedler_h4, taft_cyclotomic, trivial, GroupPresentation};
    use hopfcyc_core::exactla::{Field, Scalar, TensorMap};
    use hopfcyc_core::hopf::{HopfAlgebra, ModularPair};

    pub struct Entry {
        pub name: &'static str,
        pub hopf: HopfAlgebra,
        /// Known characters, `ε` first.
        pub characters: Vec<TensorMap>,
        /// Modular pairs in involution.
        pub pairs: Vec<(String, ModularPair)>,
    }

    fn entry(name: &'static str, hopf: HopfAlgebra, mut characters: Vec<TensorMap>) -> Entry {
        characters.insert(0, hopf.counit.clone());
        let pairs = vec![("eps_one".to_string(), ModularPair::trivial(&hopf))];
        Entry { name, hopf, characters, pairs }
    }

    fn signs(h: &HopfAlgebra, s: &[i64]) -> TensorMap {
        let coords: Vec<_> = s.iter().enumerate().map(|(i, v)| (i, Scalar::from_int(*v))).collect();
        h.covector(&coords).unwrap()
    }

    /// Point evaluations of a function algebra other than `ε`.
    fn evaluations(h: &HopfAlgebra) -> Vec<TensorMap> {
        (1..h.dim).map(|i| h.covector(&[(i, Scalar::one())]).unwrap()).collect()
    }

    pub fn all() -> Vec<Entry> {
        let q = Field::rationals();
        let mut out = vec![entry("trivial", trivial(q.clone()), vec![])];

        let groups = [("2", GroupPresentation::cyclic(2)), ("3", GroupPresentation::cyclic(3)), ("S3", GroupPresentation::symmetric3())];
        for (tag, g) in &groups {
            let (kg, _) = group_algebra(g, q.clone()).unwrap();
            let chars = match *tag {
                "2" => vec![signs(&kg, &[1, -1])],
                "S3" => vec![signs(&kg, &[1, -1, -1, 1, 1, -1])],
                _ => vec![],
            };
            let name = match *tag {
                "2" => "k[Z/2]",
                "3" => "k[Z/3]",
                _ => "k[S3]",
            };
            let mut e = entry(name, kg, chars);
            if *tag == "2" {
                let s = e.characters[1].clone();
                e.pairs.push(("eps_g".into(), ModularPair::new(&e.hopf, e.hopf.counit.clone(), e.hopf.basis_vector(1)).unwrap()));
                e.pairs.push(("sign_one".into(), ModularPair::new(&e.hopf, s, e.hopf.unit.clone()).unwrap()));
            }
            out.push(e);
            let fg = function_algebra(g, q.clone()).unwrap();
            let chars = evaluations(&fg);
            let name = match *tag {
                "2" => "F(Z/2)",
                "3" => "F(Z/3)",
                _ => "F(S3)",
            };
            out.push(entry(name, fg, chars));
        }

        let h4 = sweedler_h4(q).unwrap();
        let minus = signs(&h4.hopf, &[1, -1]);
        let mut e = entry("H4", h4.hopf.clone(), vec![minus.clone()]);
        e.pairs = vec![
            ("eps_g".into(), ModularPair::new(&h4.hopf, h4.hopf.counit.clone(), h4.g.clone()).unwrap()),
            ("sign_one".into(), ModularPair::new(&h4.hopf, minus, h4.hopf.unit.clone()).unwrap()),
        ];
        out.push(e);

        let f3 = Field::cyclotomic(3);
        let (z3, _) = group_algebra(&GroupPresentation::cyclic(3), f3.clone()).unwrap();
        let z = f3.generator_element().unwrap();
        let chars: Vec<TensorMap> = (1..3u64)
            .map(|k| z3.covector(&(0..3u64).map(|a| (a as usize, f3.pow(&z, k * a))).collect::<Vec<_>>()).unwrap())
            .collect();
        let mut e = entry("k[Z/3] over Q(z3)", z3.clone(), chars.clone());
        for (k, c) in chars.into_iter().enumerate() {
            e.pairs.push((format!("chi{}_one", k + 1), ModularPair::new(&z3, c, z3.unit.clone()).unwrap()));
        }
        out.push(e);

        let taft = taft_cyclotomic(3).unwrap();
        let chars = (1..3).map(|m| taft.character(m)).collect();
        let mut e = entry("Taft(3)", taft.hopf.clone(), chars);
        e.pairs = taft
            .search_modular_pairs()
            .into_iter()
            .map(|p| (format!("sigma{}_delta{}", p.sigma_power, p.delta_power), p.pair))
            .collect();
        out.push(e);
        out
    }
}

/// The cocyclic operators and the `(b, B)` complex rebuilt densely from the
/// structure constants, sharing nothing with the library beyond the input
/// tensors. Rational fields only.
pub mod dense_cyclic {
    use super::{q, Dense, Q};
    use hopfcyc_core::hopf::{HopfAlgebra, ModularPair};
    use num_traits::{One, Zero};
    use std::collections::BTreeMap;

    pub struct DenseModule {
        pub d: usize,
        mult: Dense,
        comult: Dense,
        unit: Dense,
        counit: Dense,
        twisted: Dense,
        sigma: Dense,
    }

    fn ipow(d: usize, n: usize) -> usize {
        d.pow(n as u32)
    }

    fn kron_all(parts: &[&Dense]) -> Dense {
        parts.iter().fold(Dense::identity(1), |acc, p| acc.kron(p))
    }

    impl DenseModule {
        pub fn new(h: &HopfAlgebra, pair: &ModularPair) -> Self {
            let s = Dense::from_sparse(h.antipode.matrix());
            let comult = Dense::from_sparse(h.comult.matrix());
            let delta = Dense::from_sparse(pair.delta.matrix());
            // S̃ = (δ ⊗ S) ∘ Δ
            let twisted = delta.kron(&s).mul(&comult);
            DenseModule {
                d: h.dim,
                mult: Dense::from_sparse(h.mult.matrix()),
                comult,
                unit: Dense::from_sparse(h.unit.matrix()),
                counit: Dense::from_sparse(h.counit.matrix()),
                twisted,
                sigma: Dense::from_sparse(pair.sigma.matrix()),
            }
        }

        fn id(&self, k: usize) -> Dense {
            Dense::identity(ipow(self.d, k))
        }

        /// `δ_i: C^{n-1} → C^n`.
        pub fn face(&self, n: usize, i: usize) -> Dense {
            if i == 0 {
                kron_all(&[&self.unit, &self.id(n - 1)])
            } else if i == n {
                kron_all(&[&self.id(n - 1), &self.sigma])
            } else {
                kron_all(&[&self.id(i - 1), &self.comult, &self.id(n - 1 - i)])
            }
        }

        /// `σ_i: C^{n+1} → C^n`.
        pub fn degeneracy(&self, n: usize, i: usize) -> Dense {
            kron_all(&[&self.id(i), &self.counit, &self.id(n - i)])
        }

        fn iterated_comult(&self, k: usize) -> Dense {
            let mut acc = self.id(1);
            for j in 1..k {
                acc = kron_all(&[&self.comult, &self.id(j - 1)]).mul(&acc);
            }
            acc
        }

        fn decode(&self, n: usize, mut idx: usize) -> Vec<usize> {
            let mut out = vec![0; n];
            for k in (0..n).rev() {
                out[k] = idx % self.d;
                idx /= self.d;
            }
            out
        }

        fn encode(&self, idx: &[usize]) -> usize {
            idx.iter().fold(0, |acc, i| acc * self.d + i)
        }

        /// Slot-wise product of two elements of `H^{⊗n}` by direct expansion.
        fn slot_product(&self, n: usize, v: &[Q], w: &[Q]) -> Vec<Q> {
            let mut out = vec![Q::zero(); v.len()];
            for (a, va) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for (b, wb) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    let (ia, ib) = (self.decode(n, a), self.decode(n, b));
                    let mut partial: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
                    partial.insert(vec![], va * wb);
                    for k in 0..n {
                        let col = ia[k] * self.d + ib[k];
                        let mut next = BTreeMap::new();
                        for (prefix, c) in &partial {
                            for r in 0..self.d {
                                let m = &self.mult.a[r][col];
                                if !m.is_zero() {
                                    let mut p = prefix.clone();
                                    p.push(r);
                                    *next.entry(p).or_insert_with(Q::zero) += c * m;
                                }
                            }
                        }
                        partial = next;
                    }
                    for (idx, c) in partial {
                        out[self.encode(&idx)] += c;
                    }
                }
            }
            out
        }

        /// `τ_n(h¹⊗…⊗hⁿ) = Δ^{n−1}S̃(h¹) · (h²⊗…⊗hⁿ⊗σ)`.
        pub fn cyclic(&self, n: usize) -> Dense {
            if n == 0 {
                return Dense::identity(1);
            }
            let dn = ipow(self.d, n);
            let head = self.iterated_comult(n).mul(&self.twisted);
            let mut out = Dense::zeros(dn, dn);
            for col in 0..dn {
                let idx = self.decode(n, col);
                let v: Vec<Q> = (0..dn).map(|r| head.a[r][idx[0]].clone()).collect();
                let mut tail = vec![Q::one()];
                for &i in &idx[1..] {
                    tail = tail.iter().flat_map(|t| (0..self.d).map(move |r| if r == i { t.clone() } else { Q::zero() })).collect();
                }
                let w: Vec<Q> = tail.iter().flat_map(|t| (0..self.d).map(move |r| t * &self.sigma.a[r][0])).collect();
                let p = self.slot_product(n, &v, &w);
                for (r, x) in p.into_iter().enumerate() {
                    out.a[r][col] = x;
                }
            }
            out
        }

        pub fn b(&self, n: usize) -> Dense {
            let mut acc = Dense::zeros(ipow(self.d, n), ipow(self.d, n - 1));
            for i in 0..=n {
                let sign = if i % 2 == 0 { q(1) } else { q(-1) };
                acc = acc.add(&self.face(n, i).scale(&sign));
            }
            acc
        }

        fn lambda(&self, n: usize) -> Dense {
            let sign = if n % 2 == 0 { q(1) } else { q(-1) };
            self.cyclic(n).scale(&sign)
        }

        /// `B_n: C^{n+1} → C^n`.
        pub fn big_b(&self, n: usize) -> Dense {
            let one_minus = self.id(n + 1).add(&self.lambda(n + 1).scale(&q(-1)));
            let extra = self.degeneracy(n, n).mul(&self.cyclic(n + 1));
            let lam = self.lambda(n);
            let mut norm = self.id(n);
            let mut power = self.id(n);
            for _ in 0..n {
                power = lam.mul(&power);
                norm = norm.add(&power);
            }
            norm.mul(&extra).mul(&one_minus)
        }

        /// `(dim HH^n, dim HC^n)` for `n ≤ max_degree`.
        pub fn cohomology(&self, max_degree: usize) -> (Vec<usize>, Vec<usize>) {
            let top = max_degree + 1;
            let dims: Vec<usize> = (0..=top).map(|n| ipow(self.d, n)).collect();
            let bs: Vec<Dense> = (1..=top).map(|n| self.b(n)).collect();
            let b_rank = |n: usize| if n == 0 { 0 } else { bs[n - 1].rank() };
            let big: Vec<Dense> = (0..top).map(|n| self.big_b(n)).collect();
            let tot_dim = |n: usize| (0..=n / 2).map(|p| dims[n - 2 * p]).sum::<usize>();
            let total = |n: usize| {
                let (rows, cols) = (tot_dim(n + 1), tot_dim(n));
                let mut m = Dense::zeros(rows, cols);
                let mut place = |blk: &Dense, r0: usize, c0: usize| {
                    for i in 0..blk.rows {
                        for j in 0..blk.cols {
                            m.a[r0 + i][c0 + j] = blk.a[i][j].clone();
                        }
                    }
                };
                let (mut r0, mut c0) = (0, 0);
                for p in 0..=n / 2 {
                    let k = n - 2 * p;
                    place(&bs[k], r0, c0);
                    if k >= 1 {
                        place(&big[k - 1], r0 + dims[k + 1], c0);
                    }
                    r0 += dims[k + 1];
                    c0 += dims[k];
                }
                m
            };
            let d_ranks: Vec<usize> = (0..top).map(|n| total(n).rank()).collect();
            let hh = (0..=max_degree).map(|n| dims[n] - b_rank(n + 1) - b_rank(n)).collect();
            let hc = (0..=max_degree)
                .map(|n| tot_dim(n) - d_ranks[n] - if n == 0 { 0 } else { d_ranks[n - 1] })
                .collect();
            (hh, hc)
        }
    }
}
