//! Named property suites over the whole library, shared by the command
//! line and the integration tests.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{binomial_poly, int, rat, NuPolynomial};
use crate::category_o;
use crate::deligne::{self, multiplicity_space_char};
use crate::diagram::{enumerate_bar, res, res_star, BarDiagram, DeltaMorphism};
use crate::schur_weyl::{class_images, classical_sw, sw_exactness_check};
use crate::specialize::oracle_check_composition;
use crate::tensor::{almost_injectivity_suite, graded_dimension, specialize_and_compare, verify_commutators};
use crate::young::{nu_class, partitions_bounded, NuClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Oracle,
    Generators,
    Commutators,
    Specialize,
    Dimension,
    Bgg,
    SchurWeyl,
    Classical,
    Multiplicity,
    Injectivity,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Oracle,
        Suite::Generators,
        Suite::Commutators,
        Suite::Specialize,
        Suite::Dimension,
        Suite::Bgg,
        Suite::SchurWeyl,
        Suite::Classical,
        Suite::Multiplicity,
        Suite::Injectivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Generators => "generators",
            Suite::Commutators => "commutators",
            Suite::Specialize => "specialize",
            Suite::Dimension => "dimension",
            Suite::Bgg => "bgg",
            Suite::SchurWeyl => "sw",
            Suite::Classical => "classical",
            Suite::Multiplicity => "multiplicity",
            Suite::Injectivity => "injectivity",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// Outcome of one suite: how many cases ran and the first failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub suite: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: OK ({} cases)", self.suite, self.cases),
            Some(msg) => write!(f, "{}: FAILED after {} cases: {msg}", self.suite, self.cases),
        }
    }
}

struct Tally {
    suite: String,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(suite: impl Into<String>) -> Self {
        Tally { suite: suite.into(), cases: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn done(self) -> SuiteResult {
        SuiteResult { suite: self.suite, cases: self.cases, failure: self.failure }
    }
}

/// Sizes for the suites; defaults are the desk-scale ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_arity: usize,
    pub max_k: usize,
    pub max_d: usize,
    pub max_n: usize,
    pub max_nu: u64,
    pub max_dim_v: usize,
    pub cutoff: usize,
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_arity: 3, max_k: 3, max_d: 2, max_n: 4, max_nu: 8, max_dim_v: 5, cutoff: 12, seed: 2024 }
    }
}

pub fn run_suite(suite: Suite, limits: &Limits) -> SuiteResult {
    match suite {
        Suite::Oracle => oracle(limits.max_arity),
        Suite::Generators => generators(5, 4),
        Suite::Commutators => commutators(limits.max_k, limits.max_d),
        Suite::Specialize => specialize(limits.max_n, limits.max_d),
        Suite::Dimension => dimension(5, 3),
        Suite::Bgg => bgg(limits.max_nu, limits.max_dim_v, 6),
        Suite::SchurWeyl => schur_weyl(limits.max_nu, limits.max_dim_v, limits.cutoff, 5),
        Suite::Classical => classical(8, 4),
        Suite::Multiplicity => multiplicity_spaces(5, 3, 8),
        Suite::Injectivity => injectivity(200, 3, limits.seed),
    }
}

/// Composition against the injection model for all arities `≤ max_arity`.
pub fn oracle(max_arity: usize) -> SuiteResult {
    let mut t = Tally::new("oracle");
    for r in 0..=max_arity {
        for s in 0..=max_arity {
            for u in 0..=max_arity {
                let (Ok(left), Ok(right)) = (enumerate_bar(r, s), enumerate_bar(s, u)) else {
                    t.check(false, || format!("arity ({r},{s},{u}) out of range"));
                    continue;
                };
                for pi in &left {
                    for rho in &right {
                        let ok = oracle_check_composition(pi, rho).unwrap_or(false);
                        t.check(ok, || format!("pi = {pi}, rho = {rho}"));
                    }
                }
            }
        }
    }
    t.done()
}

fn compose(first: &BarDiagram, second: &BarDiagram) -> DeltaMorphism {
    DeltaMorphism::from_diagram(first.clone())
        .compose_delta(&DeltaMorphism::from_diagram(second.clone()))
        .expect("composable")
}

/// `res_l ∘ res*_l = (v - k) id` for `k ≤ max_k`, and the shift relations
/// among the `res*` and among the `res` for `k ≤ max_shift`.
pub fn generators(max_k: usize, max_shift: usize) -> SuiteResult {
    let mut t = Tally::new("generators");
    for k in 0..=max_k {
        for l in 1..=k + 1 {
            let got = compose(&res_star(k, l).expect("index"), &res(k, l).expect("index"));
            let mut want = DeltaMorphism::zero(k, k);
            want.add_term(BarDiagram::identity(k), &NuPolynomial::nu_minus(k as i64)).expect("shape");
            t.check(got == want, || format!("res_{l} res*_{l} on grade {k}: {got}"));
        }
    }
    for k in 0..=max_shift {
        for l1 in 1..=k + 1 {
            for l2 in 1..=k + 2 {
                let lhs = compose(&res_star(k, l1).expect("index"), &res_star(k + 1, l2).expect("index"));
                let rhs = if l1 < l2 {
                    compose(&res_star(k, l2 - 1).expect("index"), &res_star(k + 1, l1).expect("index"))
                } else {
                    compose(&res_star(k, l2).expect("index"), &res_star(k + 1, l1 + 1).expect("index"))
                };
                t.check(lhs == rhs, || format!("res* shift k={k} l1={l1} l2={l2}"));
            }
        }
        if k >= 2 {
            for l1 in 1..=k {
                for l2 in 1..k {
                    let lhs = compose(&res(k - 1, l1).expect("index"), &res(k - 2, l2).expect("index"));
                    let rhs = if l1 <= l2 {
                        compose(&res(k - 1, l2 + 1).expect("index"), &res(k - 2, l1).expect("index"))
                    } else {
                        compose(&res(k - 1, l2).expect("index"), &res(k - 2, l1 - 1).expect("index"))
                    };
                    t.check(lhs == rhs, || format!("res shift k={k} l1={l1} l2={l2}"));
                }
            }
        }
    }
    t.done()
}

pub fn commutators(max_k: usize, max_d: usize) -> SuiteResult {
    let mut t = Tally::new("commutators");
    for d in 1..=max_d {
        for k in 0..=max_k {
            match verify_commutators(k, d) {
                Ok(report) => {
                    for c in &report.checks {
                        t.check(c.ok, || format!("k={k} d={d} {}: {}", c.name, c.detail.clone().unwrap_or_default()));
                    }
                }
                Err(e) => t.check(false, || format!("k={k} d={d}: {e}")),
            }
        }
    }
    t.done()
}

pub fn specialize(max_n: usize, max_d: usize) -> SuiteResult {
    let mut t = Tally::new("specialize");
    for d in 1..=max_d {
        for n in 1..=max_n {
            match specialize_and_compare(n, d, n) {
                Ok(report) => {
                    for c in &report.checks {
                        t.check(c.ok, || format!("n={n} d={d} {}: {}", c.name, c.detail.clone().unwrap_or_default()));
                    }
                }
                Err(e) => t.check(false, || format!("n={n} d={d}: {e}")),
            }
        }
    }
    t.done()
}

pub fn dimension(max_k: usize, max_d: usize) -> SuiteResult {
    let mut t = Tally::new("dimension");
    for k in 0..=max_k {
        for d in 1..=max_d {
            let want = binomial_poly(k).scale(&int((d as i64).pow(k as u32)));
            match graded_dimension(k, d) {
                Ok(got) => t.check(got == want, || format!("k={k} d={d}: {got}")),
                Err(e) => t.check(false, || format!("k={k} d={d}: {e}")),
            }
        }
    }
    t.done()
}

/// Chain classes at integer `v ≤ max_nu`, each listed by its base.
pub fn chain_classes(max_nu: u64) -> Vec<(NuClass, u64)> {
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

pub fn bgg(max_nu: u64, max_dim_v: usize, max_pos: usize) -> SuiteResult {
    let mut t = Tally::new("bgg");
    for (class, _) in chain_classes(max_nu) {
        t.check(deligne::bgg_reciprocity_check(&class, max_pos), || format!("envelope, {class}"));
        for n in 1..=max_dim_v {
            t.check(category_o::bgg_reciprocity_check(&class, n, max_pos), || format!("O, {class}, N={n}"));
        }
    }
    t.done()
}

pub fn schur_weyl(max_nu: u64, max_dim_v: usize, cutoff: usize, max_pos: usize) -> SuiteResult {
    let mut t = Tally::new("sw");
    for (class, nu) in chain_classes(max_nu) {
        let q = int(nu as i64);
        for n in 1..=max_dim_v {
            match class_images(&class, &q, n, cutoff, max_pos) {
                Ok(images) => t.cases += images.len(),
                Err(e) => t.check(false, || format!("{class}, N={n}: {e}")),
            }
            match sw_exactness_check(&class, &q, n, cutoff, max_pos) {
                Ok(f) => t.check(f.is_empty(), || format!("{class}, N={n}: {:?}", f.first())),
                Err(e) => t.check(false, || format!("{class}, N={n}: {e}")),
            }
        }
    }
    t.done()
}

pub fn classical(max_n: usize, max_d: usize) -> SuiteResult {
    let mut t = Tally::new("classical");
    for n in 0..=max_n {
        for d in 1..=max_d {
            match classical_sw(n, d) {
                Ok(c) => t.check(c.balances(), || format!("n={n} d={d}: total {}", c.total)),
                Err(e) => t.check(false, || format!("n={n} d={d}: {e}")),
            }
        }
    }
    t.done()
}

/// At `v = 7/2` the multiplicity space of `X_μ` is the parabolic Verma
/// character.
pub fn multiplicity_spaces(max_size: usize, max_d: usize, cutoff: usize) -> SuiteResult {
    let mut t = Tally::new("multiplicity");
    let nu = rat(7, 2);
    for mu in partitions_bounded(max_size, max_size) {
        for d in 0..=max_d {
            let a = multiplicity_space_char(&mu, &nu, d, cutoff);
            let b = category_o::verma_char(&mu, d + 1, cutoff);
            t.check(a == b, || format!("mu={mu} d={d}: {a} vs {b}"));
        }
    }
    t.done()
}

pub fn injectivity(cases: usize, max_grade: usize, seed: u64) -> SuiteResult {
    let mut t = Tally::new("injectivity");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match almost_injectivity_suite(&mut rng, cases, max_grade, 2) {
        Ok(s) => {
            t.cases = s.cases;
            if s.failures > 0 {
                t.failure = Some(format!("{} of {} random maps killed by F_u", s.failures, s.cases));
            }
        }
        Err(e) => t.check(false, || e.to_string()),
    }
    t.done()
}
