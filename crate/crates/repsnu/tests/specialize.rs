mod common;

use common::*;
use num_traits::Zero;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use repsnu::arith::{binomial_poly, falling_factorial, int, NuPolynomial, Rational};
use repsnu::diagram::{enumerate_bar, perm, res, res_star, BarDiagram, DeltaMorphism};
use repsnu::specialize::{
    categorical_dimension, images, oracle_check_at, oracle_check_composition, specialize_diagram,
    specialize_morphism, InjectionBasis, RationalMatrix, SpecializeError,
};

fn to_dense(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect()).collect()
}

fn int_dense(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

#[test]
fn injection_basis() {
    for k in 0..=4 {
        for n in k..=5 {
            let b = InjectionBasis::new(k, n).unwrap();
            let expect = injections(k, n);
            assert_eq!(b.elements(), expect.as_slice());
            assert_eq!(b.len() as u64, factorial(n as u64) / factorial((n - k) as u64));
            for (i, f) in expect.iter().enumerate() {
                assert_eq!(b.index_of(f), Some(i));
            }
        }
    }
    assert!(matches!(InjectionBasis::new(3, 2), Err(SpecializeError::TooSmall { n: 2, k: 3 })));
}

#[test]
fn diagram_matrices_match_brute_force() {
    for r in 0..=3 {
        for s in 0..=3 {
            for pi in enumerate_bar(r, s).unwrap() {
                for n in r.max(s)..=4 {
                    let m = specialize_diagram(&pi, n).unwrap();
                    assert_eq!(to_dense(&m), int_dense(&brute_matrix(&pi, n)), "{pi} n={n}");
                }
            }
        }
    }
}

#[test]
fn res_acts_by_restriction() {
    // res_l forgets the l-th value of g.
    for k in 0..=3 {
        for l in 1..=k + 1 {
            let n = k + 2;
            let d = res(k, l).unwrap();
            for f in injections(k + 1, n) {
                let mut g = f.clone();
                g.remove(l - 1);
                assert_eq!(images(&d, &f, n), vec![g]);
            }
        }
    }
    let m = specialize_diagram(&BarDiagram::identity(2), 4).unwrap();
    assert_eq!(m, RationalMatrix::identity(12));
}

#[test]
fn two_solitary_example() {
    let d = bd("[1,1] {1} {1'}");
    assert_eq!(images(&d, &[0], 3), vec![vec![1], vec![2]]);
    // res*_1 after res_1 is this diagram plus the identity.
    let lhs = specialize_diagram(&res_star(0, 1).unwrap(), 3)
        .unwrap()
        .mul(&specialize_diagram(&res(0, 1).unwrap(), 3).unwrap())
        .unwrap();
    let rhs = specialize_diagram(&d, 3).unwrap().add(&RationalMatrix::identity(3)).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn oracle_worked_examples() {
    assert!(oracle_check_composition(&bd(DELTA_PI), &bd(DELTA_RHO)).unwrap());
    for k in 0..=3 {
        for l in 1..=k + 1 {
            let a = res_star(k, l).unwrap();
            let b = res(k, l).unwrap();
            assert!(oracle_check_composition(&a, &b).unwrap());
            for n in k + 1..=k + 3 {
                let prod = specialize_diagram(&b, n).unwrap().mul(&specialize_diagram(&a, n).unwrap()).unwrap();
                let dim = InjectionBasis::new(k, n).unwrap().len();
                assert_eq!(prod, RationalMatrix::identity(dim).scale(&int((n - k) as i64)));
            }
        }
    }
}

#[test]
fn oracle_exhaustive_small_arities() {
    for r in 0..=3 {
        for s in 0..=3 {
            for t in 0..=3 {
                for pi in enumerate_bar(r, s).unwrap() {
                    for rho in enumerate_bar(s, t).unwrap() {
                        assert!(oracle_check_composition(&pi, &rho).unwrap(), "{pi} ; {rho}");
                    }
                }
            }
        }
    }
}

#[test]
fn full_matrix_functoriality_small_n() {
    // Composition must agree with matrix products at every n, not only the
    // sampled ones, and on every column.
    for r in 0..=2 {
        for s in 0..=2 {
            for t in 0..=2 {
                for pi in enumerate_bar(r, s).unwrap() {
                    for rho in enumerate_bar(s, t).unwrap() {
                        for n in r.max(s).max(t)..=4 {
                            assert!(oracle_check_at(&pi, &rho, n).unwrap(), "{pi} ; {rho} n={n}");
                            let composite = DeltaMorphism::from_diagram(pi.clone())
                                .compose_delta(&DeltaMorphism::from_diagram(rho.clone()))
                                .unwrap();
                            let brute = dense_mul(&brute_matrix(&rho, n), &brute_matrix(&pi, n));
                            let got = specialize_morphism(&composite, n).unwrap();
                            assert_eq!(to_dense(&got), int_dense(&brute));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn oracle_random_arity_four() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let (r, s, t) = (rng.gen_range(0..=4), rng.gen_range(0..=4), rng.gen_range(0..=4));
        let pi = enumerate_bar(r, s).unwrap().choose(&mut rng).unwrap().clone();
        let rho = enumerate_bar(s, t).unwrap().choose(&mut rng).unwrap().clone();
        assert!(oracle_check_composition(&pi, &rho).unwrap());
    }
}

#[test]
fn oracle_detects_wrong_coefficients() {
    let pi = bd(DELTA_PI);
    let rho = bd(DELTA_RHO);
    let good = DeltaMorphism::from_diagram(pi.clone()).compose_delta(&DeltaMorphism::from_diagram(rho.clone())).unwrap();
    let mut bad = good.clone();
    bad.add_term(bd(DELTA_TAU2), &NuPolynomial::one()).unwrap();
    let n = 8;
    let prod = specialize_diagram(&rho, n).unwrap().mul(&specialize_diagram(&pi, n).unwrap()).unwrap();
    assert_eq!(specialize_morphism(&good, n).unwrap(), prod);
    assert_ne!(specialize_morphism(&bad, n).unwrap(), prod);
}

#[test]
fn specialization_is_equivariant() {
    // Relabelling values by a permutation of 0..n commutes with every diagram.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for r in 0..=3 {
        for s in 0..=3 {
            for pi in enumerate_bar(r, s).unwrap() {
                let n = 5;
                let mut w: Vec<usize> = (0..n).collect();
                w.shuffle(&mut rng);
                for f in injections(r, n) {
                    let wf: Vec<usize> = f.iter().map(|&x| w[x]).collect();
                    let mut left: Vec<Vec<usize>> = images(&pi, &f, n)
                        .into_iter()
                        .map(|g| g.iter().map(|&x| w[x]).collect())
                        .collect();
                    let mut right = images(&pi, &wf, n);
                    left.sort();
                    right.sort();
                    assert_eq!(left, right);
                }
            }
        }
    }
}

#[test]
fn categorical_dimensions() {
    let id = |k| DeltaMorphism::from_diagram(BarDiagram::identity(k));
    assert_eq!(categorical_dimension(&id(0)).unwrap(), NuPolynomial::one());
    assert_eq!(categorical_dimension(&id(2)).unwrap(), &NuPolynomial::nu() * &NuPolynomial::nu_minus(1));
    for k in 0..=4 {
        assert_eq!(categorical_dimension(&id(k)).unwrap(), falling_factorial(k));
    }
    let swap = DeltaMorphism::from_diagram(perm(&[1, 0]).unwrap());
    assert!(categorical_dimension(&swap).unwrap().is_zero());
    // The symmetrizer has trace C(v, 3).
    let mut sym = DeltaMorphism::zero(3, 3);
    for p in permutations(3) {
        sym.add_term(perm(&p).unwrap(), &NuPolynomial::one()).unwrap();
    }
    let sym = sym.scale(&NuPolynomial::constant(Rational::new(1.into(), 6.into())));
    assert_eq!(categorical_dimension(&sym).unwrap(), binomial_poly(3));
    // res* then res on Delta_1 is (v - 1) id.
    let e = DeltaMorphism::from_diagram(res_star(1, 2).unwrap())
        .compose_delta(&DeltaMorphism::from_diagram(res(1, 2).unwrap()))
        .unwrap();
    assert_eq!(categorical_dimension(&e).unwrap(), &NuPolynomial::nu_minus(1) * &NuPolynomial::nu());
    assert!(matches!(
        categorical_dimension(&DeltaMorphism::from_diagram(res(1, 1).unwrap())),
        Err(SpecializeError::NotEndo(2, 1))
    ));
    let _ = Rational::zero();
}
