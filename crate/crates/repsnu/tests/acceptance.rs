//! Acceptance run: one line per criterion, non-zero exit if any fails.
//! Built with `harness = false` so the lines always reach the test log.

mod common;

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use repsnu::arith::{int, NuPolynomial};
use repsnu::category_o::{k_lambda, module_char, OKind, OModuleLabel};
use repsnu::deligne::{AbelianKind, AbelianObjectLabel};
use repsnu::diagram::{compose_bar, enumerate_bar, glue, res, res_star, BarDiagram, DeltaMorphism, HMorphism};
use repsnu::schur_weyl::{sw_image, sw_kernel, SwLabel};
use repsnu::tensor::graded_dimension;
use repsnu::verify::{self, chain_classes, SuiteResult};
use repsnu::young::{hook_dim, nu_class, partitions_of, same_mu_multiset, schur_dim, tilde, YoungDiagram};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn y(s: &str) -> YoungDiagram {
    s.parse().unwrap()
}

fn suite(r: SuiteResult) -> Outcome {
    if r.ok() {
        Ok(format!("{} cases", r.cases))
    } else {
        Err(r.to_string())
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn worked_examples() -> Outcome {
    let out = DeltaMorphism::from_diagram(bd(DELTA_PI))
        .compose_delta(&DeltaMorphism::from_diagram(bd(DELTA_RHO)))
        .map_err(|e| e.to_string())?;
    let a = &NuPolynomial::nu_minus(6) * &NuPolynomial::nu_minus(7);
    let b = &NuPolynomial::nu_minus(5) * &NuPolynomial::nu_minus(6);
    let mut want = DeltaMorphism::zero(5, 4);
    want.add_term(bd(DELTA_TAU1), &a).unwrap();
    want.add_term(bd(DELTA_TAU2), &b).unwrap();
    want.add_term(bd(DELTA_TAU3), &b).unwrap();
    ensure(out == want, || format!("Delta composition gave {out}"))?;

    let h = HMorphism::from_diagram(d(GLUE_PI))
        .compose_h(&HMorphism::from_diagram(d(GLUE_RHO)))
        .map_err(|e| e.to_string())?;
    let mut want = HMorphism::zero(6, 4);
    want.add_term(d(GLUE_STAR), &NuPolynomial::nu().pow(2)).unwrap();
    ensure(h == want, || format!("gluing composition gave {h}"))?;
    Ok("Delta example and gluing example exact".into())
}

/// Images of `f` under a bar diagram at `n`, built from the edge list:
/// connected bottom points copy their top value, solitary ones take fresh
/// values outside `im f`.
fn images_of(pi: &BarDiagram, f: &[usize], n: usize) -> Vec<Vec<usize>> {
    let s = pi.bottom_arity();
    let mut source = vec![None; s];
    for (i, j) in pi.edges() {
        source[j] = Some(i);
    }
    let mut out = Vec::new();
    let mut g = Vec::with_capacity(s);
    fn rec(j: usize, source: &[Option<usize>], f: &[usize], n: usize, g: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j == source.len() {
            out.push(g.clone());
            return;
        }
        match source[j] {
            Some(i) => {
                g.push(f[i]);
                rec(j + 1, source, f, n, g, out);
                g.pop();
            }
            None => {
                for x in 0..n {
                    if f.contains(&x) || g.contains(&x) {
                        continue;
                    }
                    g.push(x);
                    rec(j + 1, source, f, n, g, out);
                    g.pop();
                }
            }
        }
    }
    rec(0, &source, f, n, &mut g, &mut out);
    out
}

fn column_agrees(pi: &BarDiagram, rho: &BarDiagram, terms: &[(BarDiagram, NuPolynomial)], n: usize) -> bool {
    let f: Vec<usize> = (0..pi.top_arity()).collect();
    let mut product: HashMap<Vec<usize>, i64> = HashMap::new();
    for g in images_of(pi, &f, n) {
        for h in images_of(rho, &g, n) {
            *product.entry(h).or_default() += 1;
        }
    }
    let mut combo: HashMap<Vec<usize>, i64> = HashMap::new();
    for (tau, c) in terms {
        let c = c.eval_int(n as i64);
        if !c.is_integer() {
            return false;
        }
        let c: i64 = c.to_integer().try_into().unwrap();
        for h in images_of(tau, &f, n) {
            *combo.entry(h).or_default() += c;
        }
    }
    combo.retain(|_, v| *v != 0);
    combo == product
}

fn oracle_equivalence() -> Outcome {
    let mut pairs = 0;
    for r in 0..=3 {
        for s in 0..=3 {
            for t in 0..=3 {
                let left = enumerate_bar(r, s).map_err(|e| e.to_string())?;
                let right = enumerate_bar(s, t).map_err(|e| e.to_string())?;
                for pi in &left {
                    for rho in &right {
                        let terms = compose_bar(pi, rho).map_err(|e| e.to_string())?;
                        let (_, trapped) = glue(pi, rho).map_err(|e| e.to_string())?;
                        let n0 = 2 * (r + s + t) + 1;
                        for n in n0..=n0 + trapped {
                            ensure(column_agrees(pi, rho, &terms, n), || format!("pi = {pi}, rho = {rho}, n = {n}"))?;
                        }
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} composable pairs"))
}

fn generator_identities() -> Outcome {
    let r = verify::generators(5, 4);
    ensure(r.ok(), || r.to_string())?;
    // res_l after res*_l on honest injection matrices: (n - k) times the identity.
    for k in 0..=3 {
        for l in 1..=k + 1 {
            for n in k + 1..=k + 3 {
                let m = dense_mul(&brute_matrix(&res(k, l).unwrap(), n), &brute_matrix(&res_star(k, l).unwrap(), n));
                let size = m.len();
                let ok = (0..size).all(|i| (0..size).all(|j| m[i][j] == if i == j { (n - k) as i64 } else { 0 }));
                ensure(ok, || format!("res_{l} res*_{l} at k = {k}, n = {n}"))?;
            }
        }
    }
    Ok(format!("{} diagrammatic cases, matrix check k <= 3", r.cases))
}

fn graded_dimension_check() -> Outcome {
    for k in 0..=5usize {
        for dd in 1..=3u64 {
            let p = graded_dimension(k, dd as usize).map_err(|e| e.to_string())?;
            ensure(p.degree() <= k as i64, || format!("k = {k}, d = {dd}: degree {}", p.degree()))?;
            for nu in 0..=k as u64 + 6 {
                let want = binomial(nu, k as u64) * dd.pow(k as u32);
                ensure(p.eval_int(nu as i64) == int(want as i64), || format!("k = {k}, d = {dd}, v = {nu}: {p}"))?;
            }
        }
    }
    // d = 1: coefficients of (1+y)^t for t = 0..10.
    for t in 0..=10u64 {
        let mut coeffs = vec![1u64];
        for _ in 0..t {
            let mut next = vec![0; coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            coeffs = next;
        }
        for k in 0..=5usize {
            let got = graded_dimension(k, 1).unwrap().eval_int(t as i64);
            let want = coeffs.get(k).copied().unwrap_or(0);
            ensure(got == int(want as i64), || format!("(1+y)^{t}, y^{k}"))?;
        }
    }
    Ok("k <= 5, d <= 3".into())
}

fn class_structure() -> Outcome {
    let class = nu_class(&y("6,5,4,1"), &int(23));
    let members = class.members(2);
    let want = vec![y("6,5,4,1"), y("8,5,4,1"), y("8,7,4,1")];
    ensure(members == want, || format!("chain starts {members:?}"))?;
    for w in members.windows(2) {
        ensure(same_mu_multiset(&w[0], &w[1], &int(23)), || format!("{} vs {}", w[0], w[1]))?;
    }
    let t = tilde(&y("6,5,4,1"), 23);
    ensure(t == Some(y("7,6,5,4,1")), || format!("tilde {t:?}"))?;
    Ok("chain and tilde at v = 23".into())
}

fn schur_weyl_images() -> Outcome {
    let r = verify::schur_weyl(8, 5, 12, 5);
    ensure(r.ok(), || r.to_string())?;
    let mut exceptional = 0;
    for (class, nu) in chain_classes(8) {
        let q = int(nu as i64);
        for n in 1..=5 {
            let k = k_lambda(&class, n);
            if k >= 2 {
                let m1 = sw_image(&AbelianObjectLabel::new(AbelianKind::Costandard, class.clone(), 1), &q, n, 12)
                    .map_err(|e| e.to_string())?;
                ensure(m1.label == SwLabel::Kernel { class: class.clone(), dim_v: n }, || format!("{class} N={n}: {}", m1.label))?;
                let p1 = module_char(&OModuleLabel::new(OKind::Projective, class.clone(), 1, n), 12).map_err(|e| e.to_string())?;
                let l1 = module_char(&OModuleLabel::new(OKind::Simple, class.clone(), 1, n), 12).map_err(|e| e.to_string())?;
                ensure(m1.char == p1.sub(&l1), || format!("{class} N={n}: kernel character"))?;

                let top = sw_image(&AbelianObjectLabel::new(AbelianKind::Projective, class.clone(), k - 1), &q, n, 12)
                    .map_err(|e| e.to_string())?;
                let want = SwLabel::Module(OModuleLabel::new(OKind::Simple, class.clone(), k - 1, n));
                ensure(top.label == want, || format!("{class} N={n}: P_(k-1) -> {}", top.label))?;
                exceptional += 1;
            }
            for i in 1..=6 {
                let x = AbelianObjectLabel::new(AbelianKind::Simple, class.clone(), i);
                ensure(sw_kernel(&x, n) == (i + 1 >= k), || format!("{class} N={n}: kernel at L_{i}, k = {k}"))?;
            }
        }
    }
    Ok(format!("{} cases, {exceptional} exceptional pairs", r.cases))
}

fn classical_duality() -> Outcome {
    for n in 0..=8usize {
        for dd in 1..=4usize {
            let mut total: u64 = 0;
            for lambda in partitions_of(n) {
                let f = count_syt(&lambda);
                let s = count_ssyt(&lambda, dd);
                ensure(hook_dim(&lambda) == f.into(), || format!("hook length at {lambda}"))?;
                ensure(schur_dim(&lambda, dd) == s.into(), || format!("hook content at {lambda}, d = {dd}"))?;
                total += f * s;
            }
            ensure(total == (dd as u64).pow(n as u32), || format!("n = {n}, d = {dd}: {total}"))?;
        }
    }
    let r = verify::classical(8, 4);
    ensure(r.ok(), || r.to_string())?;
    Ok("n <= 8, d <= 4".into())
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("worked examples", Duration::from_secs(1), worked_examples),
        ("oracle equivalence", Duration::from_secs(300), oracle_equivalence),
        ("generator identities", Duration::from_secs(10), generator_identities),
        ("commutators", Duration::from_secs(120), || suite(verify::commutators(3, 2))),
        ("integer compatibility", Duration::from_secs(120), || suite(verify::specialize(4, 2))),
        ("graded dimension", Duration::from_secs(30), graded_dimension_check),
        ("class structure", Duration::from_secs(1), class_structure),
        ("BGG reciprocity", Duration::from_secs(10), || suite(verify::bgg(8, 5, 6))),
        ("Schur-Weyl images", Duration::from_secs(120), schur_weyl_images),
        ("classical duality", Duration::from_secs(5), classical_duality),
        ("multiplicity spaces at v = 7/2", Duration::from_secs(10), || suite(verify::multiplicity_spaces(5, 3, 8))),
        ("almost-injectivity", Duration::from_secs(30), || suite(verify::injectivity(200, 3, 2024))),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|m| {
            if elapsed <= budget {
                Ok(m)
            } else {
                Err(format!("{m}, but over the {budget:?} budget"))
            }
        });
        match outcome {
            Ok(m) => println!("criterion {} ({name}): PASS [{m}; {elapsed:.2?}]", i + 1),
            Err(m) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{m}; {elapsed:.2?}]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
