#![allow(dead_code)]

use repsnu::diagram::{BarDiagram, Diagram};

pub fn d(text: &str) -> Diagram {
    text.parse().unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn bd(text: &str) -> BarDiagram {
    text.parse().unwrap_or_else(|e| panic!("{text}: {e}"))
}

// The gluing example: pi in P_{6,5}, rho in P_{5,4}.
pub const GLUE_PI: &str = "[6,5] {1,1',3} {2,4,5} {2',3'} {4'} {5'} {6}";
pub const GLUE_RHO: &str = "[5,4] {1,4,2',4'} {2,3} {5} {1',3'}";
pub const GLUE_STAR: &str = "[6,4] {1,3,2',4'} {1',3'} {2,4,5} {6}";

// The Delta-composition example: pi in barP_{5,5}, rho in barP_{5,4}.
pub const DELTA_PI: &str = "[5,5] {1,1'} {2,3'} {4,2'} {3} {4'} {5} {5'}";
pub const DELTA_RHO: &str = "[5,4] {1,3'} {2,1'} {2'} {3,4'} {4} {5}";
pub const DELTA_TAU1: &str = "[5,4] {1,3'} {4,1'} {2'} {2,4'} {3} {5}";
pub const DELTA_TAU2: &str = "[5,4] {1,3'} {4,1'} {3,2'} {2,4'} {5}";
pub const DELTA_TAU3: &str = "[5,4] {1,3'} {4,1'} {5,2'} {2,4'} {3}";

// The res / res* example.
pub const RES_PI: &str = "[5,5] {1,1'} {2'} {2,3'} {3} {4,4'} {5} {5'}";
pub const RES_STAR_3_PI: &str = "[5,6] {1,1'} {2,4'} {4,5'} {3} {5} {2'} {3'} {6'}";
pub const RES_3_PI: &str = "[5,4] {1,1'} {4,3'} {2} {3} {5} {2'} {4'}";

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// |barP_{r,s}| = sum_j C(r,j) C(s,j) j!
pub fn bar_count(r: u64, s: u64) -> u64 {
    (0..=r.min(s)).map(|j| binomial(r, j) * binomial(s, j) * factorial(j)).sum()
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

/// All permutations of 0..k in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Injective tuples of length `k` with values in `0..n`, lexicographic.
pub fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for t in &out {
            for v in 0..n {
                if !t.contains(&v) {
                    let mut u: Vec<usize> = t.clone();
                    u.push(v);
                    next.push(u);
                }
            }
        }
        out = next;
    }
    out
}

/// Dense 0/1 matrix of a bar diagram at `n`, read straight off its edge
/// list. Rows are indexed by `injections(s, n)`, columns by
/// `injections(r, n)`.
pub fn brute_matrix(pi: &BarDiagram, n: usize) -> Vec<Vec<i64>> {
    let (r, s) = (pi.top_arity(), pi.bottom_arity());
    let edges = pi.edges();
    let cols = injections(r, n);
    let rows = injections(s, n);
    rows.iter()
        .map(|g| {
            cols.iter()
                .map(|f| {
                    let ok = (0..s).all(|j| match edges.iter().find(|e| e.1 == j) {
                        Some(&(i, _)) => g[j] == f[i],
                        None => f.iter().all(|&x| x != g[j]),
                    });
                    ok as i64
                })
                .collect()
        })
        .collect()
}

pub fn dense_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..cols).map(|c| (0..inner).map(|k| row[k] * b[k][c]).sum()).collect())
        .collect()
}

/// Partitions of `n` as plain vectors, largest parts first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Irreducible character of `S_n` at cycle type `rho` by the
/// Murnaghan–Nakayama rule on bead positions.
pub fn mn_character(lambda: &[usize], rho: &[usize]) -> i64 {
    let l = lambda.len();
    let beads: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    fn rec(beads: &mut Vec<usize>, rho: &[usize]) -> i64 {
        let Some((&r, rest)) = rho.split_first() else { return 1 };
        let mut total = 0;
        for idx in 0..beads.len() {
            let b = beads[idx];
            if b < r || beads.contains(&(b - r)) {
                continue;
            }
            let between = beads.iter().filter(|&&x| x > b - r && x < b).count();
            beads[idx] = b - r;
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * rec(beads, rest);
            beads[idx] = b;
        }
        total
    }
    let mut beads = beads;
    rec(&mut beads, rho)
}

/// `z_ρ = Π c^{a_c} a_c!`.
pub fn z_factor(rho: &[usize]) -> u128 {
    let mut counts = std::collections::BTreeMap::new();
    for &c in rho {
        *counts.entry(c).or_insert(0u32) += 1;
    }
    counts.iter().map(|(&c, &a)| (c as u128).pow(a) * (1..=a as u128).product::<u128>()).product()
}

/// `dim Hom_{S_n × S_k}(λ ⊗ μ, C Inj(k, n))` computed as a character
/// inner product. For cycle types `σ ~ ρ`, `τ ~ κ`, the permutation
/// character counts injections sending each `κ`-cycle of length `c` onto a
/// `ρ`-cycle of length `c`.
pub fn inj_hom_dim(lambda: &[usize], mu: &[usize]) -> i64 {
    use num_rational::BigRational;
    use num_traits::Zero;
    let n: usize = lambda.iter().sum();
    let k: usize = mu.iter().sum();
    let count = |v: &[usize], c: usize| v.iter().filter(|&&x| x == c).count() as u128;
    let mut total = BigRational::zero();
    for rho in partitions(n) {
        let chi_l = mn_character(lambda, &rho);
        if chi_l == 0 {
            continue;
        }
        for kappa in partitions(k) {
            let mut fixed: u128 = 1;
            for &c in kappa.iter().collect::<std::collections::BTreeSet<_>>() {
                let (a, b) = (count(&kappa, c), count(&rho, c));
                if a > b {
                    fixed = 0;
                    break;
                }
                fixed *= (0..a).map(|i| b - i).product::<u128>() * (c as u128).pow(a as u32);
            }
            if fixed == 0 {
                continue;
            }
            let chi_m = mn_character(mu, &kappa);
            let num = num_bigint::BigInt::from(chi_l * chi_m) * num_bigint::BigInt::from(fixed);
            let den = num_bigint::BigInt::from(z_factor(&rho)) * num_bigint::BigInt::from(z_factor(&kappa));
            total += BigRational::new(num, den);
        }
    }
    assert!(total.is_integer());
    total.to_integer().try_into().unwrap()
}

/// Semistandard tableaux of shape `lambda` with entries in 1..=d, counted
/// by filling cells in row order.
pub fn count_ssyt(lambda: &repsnu::young::YoungDiagram, d: usize) -> u64 {
    let cells: Vec<(usize, usize)> =
        lambda.parts().iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j))).collect();
    fn rec(idx: usize, cells: &[(usize, usize)], fill: &mut Vec<Vec<usize>>, d: usize) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (i, j) = cells[idx];
        let mut total = 0;
        for v in 1..=d {
            if j > 0 && fill[i][j - 1] > v {
                continue;
            }
            if i > 0 && fill[i - 1][j] >= v {
                continue;
            }
            fill[i][j] = v;
            total += rec(idx + 1, cells, fill, d);
        }
        fill[i][j] = 0;
        total
    }
    let mut fill: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    rec(0, &cells, &mut fill, d)
}

/// Standard tableaux counted by removing corners.
pub fn count_syt(lambda: &repsnu::young::YoungDiagram) -> u64 {
    if lambda.size() == 0 {
        return 1;
    }
    let parts = lambda.parts();
    (0..parts.len())
        .filter(|&i| i + 1 == parts.len() || parts[i] > parts[i + 1])
        .map(|i| {
            let mut p = parts.to_vec();
            p[i] -= 1;
            count_syt(&repsnu::young::YoungDiagram::new(p).unwrap())
        })
        .sum()
}
