mod common;

use common::{compose_tensor_agreement, densify, q, rank_kernel_agreement, Dense};
use hopfcyc_core::exactla::{elim, Field, SparseMatrix, TensorMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn rank_and_kernel_match_dense_elimination() {
    assert_eq!(rank_kernel_agreement(1200, 7), 1200);
}

#[test]
fn compose_and_kron_match_dense_products() {
    assert_eq!(compose_tensor_agreement(600, 11), 600);
}

#[test]
fn tensor_maps_match_dense_on_random_arities() {
    let f = Field::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let d: usize = 2;
        let (a0, a1, a2): (usize, usize, usize) = (rng.gen_range(0..=2), rng.gen_range(0..=2), rng.gen_range(0..=2));
        let x = Dense::random(&mut rng, d.pow(a1 as u32), d.pow(a0 as u32), -3, 3, 0.5);
        let y = Dense::random(&mut rng, d.pow(a2 as u32), d.pow(a1 as u32), -3, 3, 0.5);
        let tx = TensorMap::from_matrix(f.clone(), d, a0, a1, x.to_sparse()).unwrap();
        let ty = TensorMap::from_matrix(f.clone(), d, a1, a2, y.to_sparse()).unwrap();
        assert_eq!(Dense::from_sparse(ty.compose(&tx).unwrap().matrix()), y.mul(&x));
        assert_eq!(Dense::from_sparse(tx.tensor(&ty).unwrap().matrix()), x.kron(&y));
    }
}

#[test]
fn swap_squared_on_three_dimensional_factors() {
    let f = Field::rationals();
    let swap = TensorMap::swap(f.clone(), 3);
    let dense = Dense::from_sparse(swap.matrix());
    assert_eq!(dense.mul(&dense), Dense::identity(9));
    assert_eq!(swap.compose(&swap).unwrap(), TensorMap::identity(f, 3, 2));
}

#[test]
fn kron_of_two_by_two_blocks() {
    let f = Field::rationals();
    let a = Dense::from_ints(&[&[1, 2], &[0, 1]]);
    let b = Dense::from_ints(&[&[1, 0], &[3, 1]]);
    let expected = Dense::from_ints(&[&[1, 0, 2, 0], &[3, 1, 6, 2], &[0, 0, 1, 0], &[0, 0, 3, 1]]);
    assert_eq!(a.kron(&b), expected);
    assert_eq!(Dense::from_sparse(&a.to_sparse().kron(&f, &b.to_sparse())), expected);
}

#[test]
fn classic_singular_matrix() {
    let f = Field::rationals();
    let m = Dense::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
    assert_eq!(m.rank(), 2);
    assert_eq!(m.kernel(), vec![vec![q(1), q(-2), q(1)]]);
    let rk = elim::rank_and_kernel(&f, &m.to_sparse());
    assert_eq!(rk.rank, 2);
    assert_eq!(densify(3, &rk.kernel[0]), vec![q(1), q(-2), q(1)]);
}

#[test]
fn zero_and_identity_maps() {
    let f = Field::rationals();
    let id = TensorMap::identity(f.clone(), 5, 1).rank_and_kernel();
    assert_eq!((id.rank, id.kernel.len()), (5, 0));
    let zero = TensorMap::zero(f.clone(), 2, 2, 2).rank_and_kernel();
    assert_eq!((zero.rank, zero.kernel.len()), (0, 4));
    let empty = SparseMatrix::zeros(0, 0);
    assert_eq!(elim::rank(&f, &empty), 0);
}
