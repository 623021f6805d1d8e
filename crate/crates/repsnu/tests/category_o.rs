use num_bigint::BigInt;
use repsnu::arith::{int, rat};
use repsnu::category_o::{
    bgg_reciprocity_check, dual_label, k_lambda, module_char, projective_data, projective_verma_mult, simple_char,
    verma_char, verma_composition_mult, verma_hom_dim, OKind, OModuleLabel,
};
use repsnu::character::GlUCharacter;
use repsnu::young::{is_horizontal_strip, nu_class, partitions_bounded, schur_dim, tilde, NuClass, YoungDiagram};

fn y(s: &str) -> YoungDiagram {
    s.parse().unwrap()
}

fn chains(max_nu: u64) -> Vec<(NuClass, u64)> {
    let mut out = Vec::new();
    for nu in 0..=max_nu {
        for b in partitions_bounded(nu as usize, nu as usize) {
            let class = nu_class(&b, &int(nu as i64));
            if !class.is_trivial() && class.base() == &b {
                out.push((class, nu));
            }
        }
    }
    out
}

fn support(c: &GlUCharacter) -> Vec<String> {
    c.support().map(|m| m.to_string()).collect()
}

#[test]
fn verma_examples() {
    let c = verma_char(&y("1"), 3, 2);
    assert_eq!(support(&c), vec!["1", "1,1", "2"]);
    assert!(c.mults().values().all(|&m| m == 1));
    assert!(verma_char(&y("1,1"), 2, 5).is_zero());
    let c = verma_char(&y("0"), 2, 4);
    assert_eq!(support(&c), vec!["0", "1", "2", "3", "4"]);
}

#[test]
fn verma_support_is_strip_set() {
    for lambda in partitions_bounded(5, 5) {
        for n in 1..=5 {
            for cutoff in lambda.size()..=9 {
                let c = verma_char(&lambda, n, cutoff);
                let expect: Vec<YoungDiagram> = partitions_bounded(cutoff, n - 1)
                    .into_iter()
                    .filter(|mu| lambda.length() < n && is_horizontal_strip(&lambda, mu))
                    .collect();
                let got: Vec<YoungDiagram> = c.support().cloned().collect();
                let mut expect = expect;
                expect.sort();
                assert_eq!(got, expect);
            }
        }
    }
}

#[test]
fn verma_homs() {
    let half = rat(7, 2);
    assert_eq!(verma_hom_dim(&y("2"), &y("1"), &half, 3), 0);
    assert_eq!(verma_hom_dim(&y("2"), &y("2"), &half, 3), 1);
    let nu = int(2);
    assert_eq!(verma_hom_dim(&y("3"), &y("0"), &nu, 3), 1);
    assert_eq!(verma_hom_dim(&y("0"), &y("3"), &nu, 3), 0);
    assert_eq!(verma_hom_dim(&y("3,1"), &y("0"), &nu, 3), 0);
    assert_eq!(verma_hom_dim(&y("3,1"), &y("3"), &nu, 3), 1);
    // (3,1) has two rows, too long for N = 2.
    assert_eq!(verma_hom_dim(&y("3,1"), &y("3"), &nu, 2), 0);
    assert_eq!(verma_hom_dim(&y("3"), &y("1"), &nu, 3), 0);
}

#[test]
fn k_lambda_examples() {
    let c = nu_class(&y("0"), &int(2));
    assert_eq!(k_lambda(&c, 2), 2);
    assert_eq!(k_lambda(&c, 1), 1);
    assert_eq!(k_lambda(&c, 3), 3);
    assert_eq!(k_lambda(&nu_class(&y("2,1"), &rat(7, 2)), 2), 0);
    assert_eq!(k_lambda(&nu_class(&y("2,1"), &rat(7, 2)), 3), 1);
    let l = OModuleLabel::new(OKind::Simple, c.clone(), 2, 2);
    assert!(l.is_zero());
}

#[test]
fn simple_examples() {
    let c = nu_class(&y("0"), &int(2));
    let l0 = simple_char(&c, 0, 2, 10).unwrap();
    assert_eq!(support(&l0), vec!["0", "1", "2"]);
    assert_eq!(l0.dimension(), BigInt::from(3));
    let t = nu_class(&y("2,1"), &rat(7, 2));
    assert_eq!(simple_char(&t, 0, 3, 8).unwrap(), verma_char(&y("2,1"), 3, 8));
    for (class, _) in chains(6) {
        for n in 1..=4 {
            let k = k_lambda(&class, n);
            if k >= 1 {
                let last = class.member(k - 1).unwrap();
                assert_eq!(simple_char(&class, k - 1, n, 10).unwrap(), verma_char(&last, n, 10));
            }
        }
    }
}

/// `L_0` is the finite-dimensional module with highest weight `λ̃(v)`:
/// its restriction to `gl(U)` is given by branching, and its dimension by
/// the hook content formula in `N` variables.
#[test]
fn first_simple_is_finite_dimensional() {
    for (class, nu) in chains(8) {
        let base = class.base();
        let top = tilde(base, nu as i64).unwrap();
        for n in 1..=5 {
            if k_lambda(&class, n) == 0 {
                continue;
            }
            let l0 = simple_char(&class, 0, n, nu as usize + 2).unwrap();
            let expect: Vec<YoungDiagram> = partitions_bounded(nu as usize, n - 1)
                .into_iter()
                .filter(|rho| is_horizontal_strip(rho, &top))
                .collect();
            let mut expect = expect;
            expect.sort();
            assert_eq!(l0.support().cloned().collect::<Vec<_>>(), expect, "base={base} ν={nu} N={n}");
            assert_eq!(l0.dimension(), BigInt::from(schur_dim(&top, n)));
        }
    }
}

#[test]
fn simple_characters_are_nonnegative() {
    for (class, _) in chains(10) {
        for n in 1..=5 {
            for i in 0..=6 {
                for cutoff in [6, 9, 12] {
                    assert!(simple_char(&class, i, n, cutoff).is_ok());
                }
            }
        }
    }
}

#[test]
fn projective_examples() {
    let c = nu_class(&y("0"), &int(2));
    let p0 = projective_data(&c, 0, 3);
    assert_eq!(p0.standard_filtration.into_iter().collect::<Vec<_>>(), vec![(0, 1)]);
    assert_eq!(p0.socle_layers, vec![vec![1], vec![0]]);
    let p1 = projective_data(&c, 1, 3);
    assert_eq!(p1.standard_filtration.into_iter().collect::<Vec<_>>(), vec![(0, 1), (1, 1)]);
    assert_eq!(p1.socle_layers, vec![vec![1], vec![0, 2], vec![1]]);
    assert_eq!(p1.k_lambda, 3);
    // The last nonzero projective loses L_k from its middle layer.
    let p2 = projective_data(&c, 2, 3);
    assert_eq!(p2.socle_layers, vec![vec![2], vec![1], vec![2]]);
    assert!(projective_data(&c, 3, 3).standard_filtration.is_empty());
    assert_eq!(projective_data(&c, 0, 2).k_lambda, 2);
}

#[test]
fn bgg_reciprocity_in_o() {
    assert!(bgg_reciprocity_check(&nu_class(&y("0"), &int(2)), 3, 3));
    for (class, _) in chains(8) {
        for n in 1..=5 {
            assert!(bgg_reciprocity_check(&class, n, 6));
            for i in 0..=6usize {
                for j in 0..=6 {
                    if i.abs_diff(j) >= 2 {
                        assert_eq!(projective_verma_mult(&class, j, i, n), 0);
                        assert_eq!(verma_composition_mult(&class, i, j, n), 0);
                    }
                }
            }
        }
    }
    assert!(bgg_reciprocity_check(&nu_class(&y("1"), &rat(7, 2)), 3, 6));
}

#[test]
fn character_presentations_agree() {
    let cutoff = 10;
    for (class, _) in chains(7) {
        for n in 1..=5 {
            let k = k_lambda(&class, n);
            let ch = |kind, i| module_char(&OModuleLabel::new(kind, class.clone(), i, n), cutoff).unwrap();
            for i in 0..=6 {
                // ch M_i = ch L_i + ch L_{i+1}
                assert_eq!(ch(OKind::Verma, i), ch(OKind::Simple, i).add(&ch(OKind::Simple, i + 1)));
                assert_eq!(ch(OKind::Verma, i), ch(OKind::DualVerma, i));
                if i >= 1 && i < k {
                    assert_eq!(ch(OKind::Projective, i), ch(OKind::Verma, i - 1).add(&ch(OKind::Verma, i)));
                }
                if i >= k {
                    assert!(ch(OKind::Projective, i).is_zero());
                }
                // Socle layers of P_i add up to its character.
                let data = projective_data(&class, i, n);
                let from_layers = data
                    .socle_layers
                    .iter()
                    .flatten()
                    .fold(GlUCharacter::zero(n - 1, cutoff), |acc, &j| acc.add(&ch(OKind::Simple, j)));
                assert_eq!(from_layers, ch(OKind::Projective, i));
            }
        }
    }
}

#[test]
fn trivial_classes_collapse() {
    for lambda in partitions_bounded(4, 4) {
        let class = nu_class(&lambda, &rat(7, 2));
        for n in 1..=4 {
            let chars: Vec<GlUCharacter> = [OKind::Verma, OKind::DualVerma, OKind::Simple, OKind::Projective]
                .into_iter()
                .map(|k| module_char(&OModuleLabel::new(k, class.clone(), 0, n), 8).unwrap())
                .collect();
            assert!(chars.windows(2).all(|w| w[0] == w[1]));
            let p = OModuleLabel::new(OKind::Projective, class.clone(), 0, n);
            assert_eq!(dual_label(&p), p);
        }
    }
}

#[test]
fn duality_on_labels() {
    let c = nu_class(&y("0"), &int(2));
    let lab = |k, i| OModuleLabel::new(k, c.clone(), i, 4);
    assert_eq!(dual_label(&lab(OKind::Verma, 1)), lab(OKind::DualVerma, 1));
    assert_eq!(dual_label(&lab(OKind::DualVerma, 1)), lab(OKind::Verma, 1));
    assert_eq!(dual_label(&lab(OKind::Simple, 2)), lab(OKind::Simple, 2));
    assert_eq!(dual_label(&lab(OKind::Projective, 2)), lab(OKind::Projective, 2));
    assert_eq!(dual_label(&lab(OKind::Projective, 0)).kind, OKind::InjectiveHull);
    assert_eq!(dual_label(&dual_label(&lab(OKind::Projective, 0))), lab(OKind::Projective, 0));
    assert_eq!(dual_label(&lab(OKind::Simple, 7)), lab(OKind::Simple, 7));
    assert!(lab(OKind::Simple, 7).is_zero());
    assert_eq!(lab(OKind::Verma, 1).to_string(), "M(3)");
}
