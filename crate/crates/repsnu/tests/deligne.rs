mod common;

use std::collections::BTreeMap;

use common::inj_hom_dim;
use repsnu::arith::{int, rat, Rational};
use repsnu::deligne::{
    abelian_object_data, bgg_reciprocity_check, hom_dim_indec, hom_dim_x_mu_delta, lift, multiplicity_space_char,
    projective_standard_mult, standard_composition_mult, AbelianKind, AbelianObjectLabel,
};
use repsnu::young::{is_horizontal_strip, nu_class, partitions_bounded, tilde, NuClass, YoungDiagram};

fn y(s: &str) -> YoungDiagram {
    s.parse().unwrap()
}

fn chain(base: &str, nu: u64) -> NuClass {
    NuClass::Chain { base: y(base), nu }
}

fn bases(max_nu: u64) -> Vec<(NuClass, u64)> {
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

#[test]
fn hom_dims_between_indecomposables() {
    let half = rat(7, 2);
    assert_eq!(hom_dim_indec(&y("2,1"), &y("2,1"), &half), 1);
    assert_eq!(hom_dim_indec(&y("2,1"), &y("2"), &half), 0);
    let c = chain("0", 2);
    let m: Vec<YoungDiagram> = c.members(4);
    let nu = int(2);
    for i in 0..=4 {
        for j in 0..=4 {
            let expect = match (i as i64 - j as i64).abs() {
                0 if i == 0 => 1,
                0 => 2,
                1 => 1,
                _ => 0,
            };
            assert_eq!(hom_dim_indec(&m[i], &m[j], &nu), expect);
        }
    }
    assert_eq!(hom_dim_indec(&m[1], &y("1"), &nu), 0);
    for nu in 0..=6 {
        let nu = int(nu);
        let pool = partitions_bounded(5, 5);
        for a in &pool {
            for b in &pool {
                assert_eq!(hom_dim_indec(a, b, &nu), hom_dim_indec(b, a, &nu));
            }
        }
    }
}

#[test]
fn lifts() {
    assert_eq!(lift(&y("2,1"), &rat(7, 2)), vec![y("2,1")]);
    assert_eq!(lift(&y("3"), &int(2)), vec![y("3"), y("0")]);
    assert_eq!(lift(&y("0"), &int(2)), vec![y("0")]);
    assert_eq!(lift(&y("8,7,4,1"), &int(23)), vec![y("8,7,4,1"), y("8,5,4,1")]);
}

#[test]
fn hom_into_delta_examples() {
    assert_eq!(hom_dim_x_mu_delta(&y("0"), &y("1"), &rat(7, 2)), 1);
    assert_eq!(hom_dim_x_mu_delta(&y("3"), &y("4"), &int(2)), 2);
    assert_eq!(hom_dim_x_mu_delta(&y("2"), &y("1,1"), &rat(7, 2)), 0);
}

/// The lemma's table against a character computation in `S_n × S_k`:
/// lift to generic parameter, pad each summand to `λ̃(n)`, and count.
#[test]
fn hom_into_delta_matches_symmetric_group_count() {
    let mut cache: BTreeMap<(YoungDiagram, YoungDiagram), i64> = BTreeMap::new();
    let mut count = |lam: &YoungDiagram, mu: &YoungDiagram, n: usize| {
        let lt = tilde(lam, n as i64).unwrap();
        *cache.entry((lt.clone(), mu.clone())).or_insert_with(|| inj_hom_dim(lt.parts(), mu.parts()))
    };
    let nus: Vec<Rational> = vec![rat(7, 2), int(0), int(1), int(2), int(3), int(5)];
    for nu in &nus {
        for tau in partitions_bounded(3, 3) {
            for mu in partitions_bounded(3, 3) {
                let n = 2 * (tau.size() + mu.size()) + 2 + tau.size();
                let expect: i64 = lift(&tau, nu).iter().map(|l| count(l, &mu, n.max(2 * l.size() + 2))).sum();
                assert_eq!(hom_dim_x_mu_delta(&tau, &mu, nu) as i64, expect, "τ={tau} μ={mu} ν={nu}");
            }
        }
    }
}

#[test]
fn abelian_examples() {
    let c = chain("0", 2);
    let p = |i| abelian_object_data(&AbelianObjectLabel::new(AbelianKind::Projective, c.clone(), i));
    for i in 0..5 {
        assert_eq!(p(i).standard_filtration, Some(BTreeMap::from([(i, 1), (i + 1, 1)])));
    }
    assert_eq!(p(2).socle_layers, vec![vec![2], vec![1, 3], vec![2]]);
    assert_eq!(p(0).socle_layers, vec![vec![0], vec![1], vec![0]]);
    let m2 = abelian_object_data(&AbelianObjectLabel::new(AbelianKind::Standard, c.clone(), 2));
    assert_eq!(m2.composition_factors, BTreeMap::from([(1, 1), (2, 1)]));
    assert_eq!(m2.top(), &[2]);
    let t = nu_class(&y("2,1"), &rat(7, 2));
    let all: Vec<_> = [AbelianKind::Simple, AbelianKind::Standard, AbelianKind::Costandard, AbelianKind::Projective]
        .into_iter()
        .map(|k| abelian_object_data(&AbelianObjectLabel::new(k, t.clone(), 0)))
        .collect();
    assert!(all.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(all[0].composition_factors, BTreeMap::from([(0, 1)]));
    let l0 = abelian_object_data(&AbelianObjectLabel::new(AbelianKind::Simple, c.clone(), 0));
    let m0 = abelian_object_data(&AbelianObjectLabel::new(AbelianKind::Standard, c.clone(), 0));
    let d0 = abelian_object_data(&AbelianObjectLabel::new(AbelianKind::Costandard, c.clone(), 0));
    assert!(l0 == m0 && m0 == d0);
}

#[test]
fn projective_factors_match_layers() {
    for (class, _) in bases(6) {
        for i in 0..=6 {
            let data = abelian_object_data(&AbelianObjectLabel::new(AbelianKind::Projective, class.clone(), i));
            let mut from_filtration = BTreeMap::new();
            for (&j, &mult) in data.standard_filtration.as_ref().unwrap() {
                for l in 0..=7 {
                    let f = standard_composition_mult(&class, j, l) * mult;
                    if f > 0 {
                        *from_filtration.entry(l).or_insert(0) += f;
                    }
                }
            }
            let mut from_layers = BTreeMap::new();
            for layer in &data.socle_layers {
                for &l in layer {
                    *from_layers.entry(l).or_insert(0) += 1;
                }
            }
            assert_eq!(from_filtration, data.composition_factors);
            assert_eq!(from_layers, data.composition_factors);
        }
        for i in 0..=6 {
            for kind in [AbelianKind::Standard, AbelianKind::Costandard, AbelianKind::Simple] {
                let data = abelian_object_data(&AbelianObjectLabel::new(kind, class.clone(), i));
                let layers: usize = data.socle_layers.iter().map(Vec::len).sum();
                assert_eq!(layers as u32, data.composition_factors.values().sum::<u32>());
            }
        }
    }
}

#[test]
fn bgg_reciprocity_on_envelope_tables() {
    for (class, _) in bases(8) {
        assert!(bgg_reciprocity_check(&class, 6));
        assert_eq!(projective_standard_mult(&class, 0, 2), 0);
        assert_eq!(standard_composition_mult(&class, 3, 1), 0);
    }
    assert!(bgg_reciprocity_check(&nu_class(&y("2,1"), &rat(7, 2)), 6));
}

#[test]
fn multiplicity_spaces() {
    // Trivial class: I^+_μ.
    let c = multiplicity_space_char(&y("1"), &rat(7, 2), 2, 3);
    let support: Vec<String> = c.support().map(|m| m.to_string()).collect();
    assert_eq!(support, vec!["1", "1,1", "2", "2,1", "3"]);
    for (class, nu) in bases(8) {
        let m = class.members(5);
        let nu_r = int(nu as i64);
        for d in 1..=3 {
            let cutoff = 10;
            // Position 0 is I^+_{λ(0)} minus I^+_{λ(1)}.
            let c0 = multiplicity_space_char(&m[0], &nu_r, d, cutoff);
            for rho in partitions_bounded(cutoff, d) {
                let expect = is_horizontal_strip(&m[0], &rho) && !is_horizontal_strip(&m[1], &rho);
                assert_eq!(c0.mult(&rho), expect as i64, "ρ={rho} base={} ν={nu}", m[0]);
            }
            for i in 1..=4 {
                let ci = multiplicity_space_char(&m[i], &nu_r, d, cutoff);
                for rho in ci.support() {
                    assert!(is_horizontal_strip(&m[i - 1], rho) && is_horizontal_strip(&m[i], rho));
                }
            }
        }
    }
}

#[test]
fn label_display_and_duality() {
    let c = chain("0", 2);
    let l = AbelianObjectLabel::new(AbelianKind::Standard, c.clone(), 2);
    assert_eq!(l.to_string(), "M(3,1)");
    assert_eq!(l.dual().kind, AbelianKind::Costandard);
    assert_eq!(l.dual().dual(), l);
    let p = AbelianObjectLabel::of_diagram(AbelianKind::Projective, &y("3"), &int(2));
    assert_eq!((p.index, p.dual()), (1, p.clone()));
}
