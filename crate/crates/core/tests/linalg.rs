use genus_calc::lattice::linalg::*;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn echelon_inverse_pair() {
    let a = Matrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 1, 1]]);
    let e = a.column_echelon();
    assert!(e.u.mul(&e.u_inv).is_identity());
    assert_eq!(e.rank, 2);
    let au = a.mul(&e.u);
    for r in 0..3 {
        assert!(au.get(r, 2).is_zero());
    }
}

#[test]
fn smith_known() {
    let a = Matrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    assert_eq!(a.smith_diagonal(), big(&[2, 6, 12]));
    let b = Matrix::from_rows(&[vec![2, 0], vec![0, 3]]);
    assert_eq!(b.smith_diagonal(), big(&[1, 6]));
    assert!(Matrix::zeros(2, 3).smith_diagonal().is_empty());
}

#[test]
fn kernel_is_saturated() {
    // kernel of (2 2) is spanned by (1, -1), not (2, -2)
    let a = Matrix::from_rows(&[vec![2, 2]]);
    let k = Kernel::of(&a);
    assert_eq!(k.rank(), 1);
    let v = k.basis().column(0);
    assert_eq!(v[0].abs(), BigInt::one());
    let target = Matrix::from_big_rows(vec![big(&[3]), big(&[-3])]);
    let c = k.coordinates(&target);
    assert_eq!(c.get(0, 0).abs(), BigInt::from(3));
}

#[test]
fn quotient_of_scaled_identity() {
    // Z^2 / 3Z^2
    let zero = Matrix::zeros(1, 2);
    let three = Matrix::from_rows(&[vec![3, 0], vec![0, 3]]);
    let (t, free) = quotient(&zero, &three);
    assert_eq!(t, big(&[3, 3]));
    assert_eq!(free, 0);
}

#[test]
fn power() {
    let p = Matrix::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
    assert!(p.pow(3).is_identity());
    assert!(!p.pow(2).is_identity());
}
