use genus_calc::gee_chars::{aug, reg, CyclicGroupSpec, GCharacter};
use genus_calc::lattice::*;

fn rows(l: &GLattice) -> Vec<Vec<i64>> {
    l.sigma().to_i64_rows().unwrap()
}

#[test]
fn canonical_blocks() {
    assert_eq!(
        rows(&canonical_lattice(3, 1, 0, 0).unwrap()),
        vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]
    );
    assert_eq!(rows(&canonical_lattice(3, 0, 1, 0).unwrap()), vec![vec![0, -1], vec![1, -1]]);
    let triv = canonical_lattice(3, 0, 0, 1).unwrap();
    assert_eq!(rows(&triv), vec![vec![1]]);
    assert_eq!(triv.k(), 0);
    assert_eq!(canonical_lattice(3, 0, 0, 0), Err(LatticeError::Empty));
}

#[test]
fn basic_cohomology() {
    let triv = cohomology(&canonical_lattice(3, 0, 0, 1).unwrap());
    assert_eq!(triv.h1_invariant_factors, Vec::<u64>::new());
    assert_eq!(triv.h2_invariant_factors, vec![3]);
    assert_eq!(triv.herbrand_q, Some(1));

    let cyc = cohomology(&canonical_lattice(3, 0, 1, 0).unwrap());
    assert_eq!(cyc.h1_invariant_factors, vec![3]);
    assert!(cyc.h2_invariant_factors.is_empty());
    assert_eq!(cyc.herbrand_q, Some(-1));

    let free = cohomology(&canonical_lattice(3, 1, 0, 0).unwrap());
    assert_eq!((free.h1_dim, free.h2_dim, free.herbrand_q), (Some(0), Some(0), Some(0)));
}

#[test]
fn disguise_properties() {
    let l = canonical_lattice(3, 1, 1, 1).unwrap();
    let d1 = disguise(&l, 7);
    let d2 = disguise(&l, 7);
    assert_eq!(d1, d2);
    assert_ne!(d1, l);
    assert_eq!(d1.rank(), l.rank());
    assert_eq!(cohomology(&d1), cohomology(&l));
    assert!(GLattice::new(3, 1, d1.sigma().clone()).is_ok());
}

#[test]
fn fixed_ranks() {
    assert_eq!(fixed_rank(&canonical_lattice(3, 1, 1, 1).unwrap()), 2);
    assert_eq!(fixed_rank(&canonical_lattice(3, 0, 1, 0).unwrap()), 0);
    // regular representation of Z/9
    let mut rows = vec![vec![0i64; 9]; 9];
    for i in 0..9 {
        rows[(i + 1) % 9][i] = 1;
    }
    let l = disguise(&GLattice::from_rows(3, 2, &rows).unwrap(), 11);
    assert_eq!(fixed_dims_chain(&l), vec![1, 3, 9]);
}

#[test]
fn decomposition_and_characters() {
    let l = disguise(&canonical_lattice(5, 2, 1, 3).unwrap(), 3);
    assert_eq!(
        recover_decomposition(&l).unwrap(),
        Decomposition { alpha: 2, beta: 1, gamma: 3 }
    );
    let spec = CyclicGroupSpec { ell: 3, m: 1 };
    assert_eq!(character_of(&canonical_lattice(3, 1, 0, 0).unwrap()).unwrap(), reg(spec));
    assert_eq!(character_of(&canonical_lattice(3, 0, 1, 0).unwrap()).unwrap(), aug(spec));
    let c = character_of(&disguise(&canonical_lattice(3, 1, 2, 1).unwrap(), 5)).unwrap();
    assert_eq!(c.coeffs(), &[2, 3]);
    assert_eq!(c.degree(), 8);
    let t = canonical_lattice(3, 0, 0, 1).unwrap();
    assert_eq!(divisible_character_of(&t).unwrap(), GCharacter::unit(spec));
}

#[test]
fn validation() {
    assert!(matches!(
        GLattice::from_rows(3, 1, &[vec![2]]),
        Err(LatticeError::NotOfOrder { .. })
    ));
    assert!(matches!(
        GLattice::from_rows(3, 1, &[vec![1]]),
        Err(LatticeError::OrderTooSmall { .. })
    ));
    let json = r#"{"ell":3,"k":1,"rank":2,"sigma":[[0,-1],[1,-1]]}"#;
    let l: GLattice = serde_json::from_str(json).unwrap();
    assert_eq!(serde_json::to_string(&l).unwrap(), json);
    assert!(serde_json::from_str::<GLattice>(r#"{"ell":3,"k":1,"rank":3,"sigma":[[0,-1],[1,-1]]}"#).is_err());
}
