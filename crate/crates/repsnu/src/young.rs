//! Young diagrams, Pieri sets, and the classes of diagrams sharing a
//! `mu`-multiset at a given `v`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{int, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YoungError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("cannot parse partition {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// An integer partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

impl YoungDiagram {
    /// Zero parts are dropped; the rest must be weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, YoungError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(YoungError::NotDecreasing(parts));
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty() -> Self {
        YoungDiagram { parts: Vec::new() }
    }

    /// A single row of length `m` (empty for `m = 0`).
    pub fn row(m: usize) -> Self {
        YoungDiagram::new(vec![m]).expect("one part")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` counted from 1; zero past the last row and for `i = 0`.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.part(1)
    }

    /// Whether `self ⊆ other` as sets of cells.
    pub fn is_contained_in(&self, other: &YoungDiagram) -> bool {
        self.length() <= other.length() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> YoungDiagram {
        let cols = (1..=self.first_row())
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        YoungDiagram { parts: cols }
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                out.push(p - j + conj.parts[j] - i - 1);
            }
        }
        out
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = YoungError;

    /// Comma-separated parts. `""`, `"0"` and `"∅"` give the empty diagram;
    /// surrounding parentheses are accepted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(t).trim();
        if t.is_empty() || t == "∅" {
            return Ok(YoungDiagram::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|e| YoungError::Parse { text: s.to_string(), reason: e.to_string() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        YoungDiagram::new(parts).map_err(|e| YoungError::Parse { text: s.to_string(), reason: e.to_string() })
    }
}

/// First `m` entries of `(v - |λ|, λ_1 - 1, λ_2 - 2, ...)`.
pub fn mu_sequence(lambda: &YoungDiagram, nu: &Rational, m: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(m);
    if m == 0 {
        return out;
    }
    out.push(nu - int(lambda.size() as i64));
    for i in 1..m {
        out.push(int(lambda.part(i) as i64 - i as i64));
    }
    out
}

/// Whether the `mu`-multisets of `a` and `b` at `nu` agree. Past
/// `max(ℓ) + 2` entries both sequences are `-i`, so only a prefix matters.
pub fn same_mu_multiset(a: &YoungDiagram, b: &YoungDiagram, nu: &Rational) -> bool {
    let m = a.length().max(b.length()) + 2;
    let mut x = mu_sequence(a, nu, m);
    let mut y = mu_sequence(b, nu, m);
    x.sort();
    y.sort();
    x == y
}

/// `λ̃(n)`: prepend a row of length `n - |λ|` when that is at least `λ_1`.
pub fn tilde(lambda: &YoungDiagram, n: i64) -> Option<YoungDiagram> {
    let first = n - lambda.size() as i64;
    if first < lambda.first_row() as i64 {
        return None;
    }
    let mut parts = vec![first as usize];
    parts.extend_from_slice(lambda.parts());
    Some(YoungDiagram::new(parts).expect("first row is longest"))
}

/// Whether `big / small` is a horizontal strip: `small ⊆ big` and no two
/// added cells share a column.
pub fn is_horizontal_strip(small: &YoungDiagram, big: &YoungDiagram) -> bool {
    if big.length() > small.length() + 1 || small.length() > big.length() {
        return false;
    }
    (1..=big.length()).all(|i| big.part(i) >= small.part(i) && small.part(i) >= big.part(i + 1))
}

/// `I^{m,+}_λ`: diagrams obtained by adding `m` cells, no two in a column.
pub fn pieri_plus(lambda: &YoungDiagram, m: usize) -> BTreeSet<YoungDiagram> {
    let mut out = BTreeSet::new();
    fn rec(lambda: &YoungDiagram, i: usize, left: usize, rows: &mut Vec<usize>, out: &mut BTreeSet<YoungDiagram>) {
        let l = lambda.length();
        if i > l + 1 {
            if left == 0 {
                out.insert(YoungDiagram::new(rows.clone()).expect("interlacing rows"));
            }
            return;
        }
        let lo = lambda.part(i);
        let hi = if i == 1 { lo + left } else { lambda.part(i - 1).min(lo + left) };
        for v in lo..=hi {
            rows.push(v);
            rec(lambda, i + 1, left - (v - lo), rows, out);
            rows.pop();
        }
    }
    rec(lambda, 1, m, &mut Vec::new(), &mut out);
    out
}

/// `I^{m,-}_λ`: diagrams obtained by removing `m` cells, no two in a column.
pub fn pieri_minus(lambda: &YoungDiagram, m: usize) -> BTreeSet<YoungDiagram> {
    let mut out = BTreeSet::new();
    if m > lambda.size() {
        return out;
    }
    fn rec(lambda: &YoungDiagram, i: usize, left: usize, rows: &mut Vec<usize>, out: &mut BTreeSet<YoungDiagram>) {
        if i > lambda.length() {
            if left == 0 {
                out.insert(YoungDiagram::new(rows.clone()).expect("interlacing rows"));
            }
            return;
        }
        let hi = lambda.part(i);
        let lo = lambda.part(i + 1).max(hi.saturating_sub(left));
        for v in lo..=hi {
            rows.push(v);
            rec(lambda, i + 1, left - (hi - v), rows, out);
            rows.pop();
        }
    }
    rec(lambda, 1, m, &mut Vec::new(), &mut out);
    out
}

/// `I^+_λ` truncated at total size `max_size`.
pub fn pieri_plus_bounded(lambda: &YoungDiagram, max_size: usize) -> BTreeSet<YoungDiagram> {
    let mut out = BTreeSet::new();
    for m in 0..=max_size.saturating_sub(lambda.size()) {
        if lambda.size() + m > max_size {
            break;
        }
        out.extend(pieri_plus(lambda, m));
    }
    out
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<YoungDiagram> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if left == 0 {
            out.push(YoungDiagram { parts: cur.clone() });
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

/// All partitions of size at most `max_size` with at most `max_len` rows.
pub fn partitions_bounded(max_size: usize, max_len: usize) -> Vec<YoungDiagram> {
    (0..=max_size)
        .flat_map(partitions_of)
        .filter(|p| p.length() <= max_len)
        .collect()
}

/// Dimension of the Specht module (hook length formula).
pub fn hook_dim(lambda: &YoungDiagram) -> BigUint {
    let mut num: BigUint = (1..=lambda.size() as u64).product();
    let den: BigUint = lambda.hooks().into_iter().map(|h| BigUint::from(h as u64)).product();
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    num = q;
    num
}

/// `dim S^λ C^d` (hook content formula); zero when `ℓ(λ) > d`.
pub fn schur_dim(lambda: &YoungDiagram, d: usize) -> BigUint {
    if lambda.length() > d {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 0..p {
            num *= BigUint::from((d + j - i) as u64);
        }
    }
    let den: BigUint = lambda.hooks().into_iter().map(|h| BigUint::from(h as u64)).product();
    num / den
}

/// The class of diagrams sharing a `mu`-multiset at `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NuClass {
    Trivial(YoungDiagram),
    /// The chain `λ^(0) ⊂ λ^(1) ⊂ ...` with `λ^(0) = base`, at integer `v`.
    Chain { base: YoungDiagram, nu: u64 },
}

impl NuClass {
    pub fn is_trivial(&self) -> bool {
        matches!(self, NuClass::Trivial(_))
    }

    /// `λ^(i)`. A trivial class has only the member at `i = 0`.
    pub fn member(&self, i: usize) -> Option<YoungDiagram> {
        match self {
            NuClass::Trivial(l) => (i == 0).then(|| l.clone()),
            NuClass::Chain { base, nu } => {
                if i == 0 {
                    return Some(base.clone());
                }
                let head = *nu as usize - base.size();
                let mut parts = vec![head + 1];
                parts.extend((1..i).map(|j| base.part(j) + 1));
                parts.extend(base.parts().iter().skip(i).copied());
                Some(YoungDiagram::new(parts).expect("chain member is a partition"))
            }
        }
    }

    /// `λ^(0), ..., λ^(upto)`, or the single member of a trivial class.
    pub fn members(&self, upto: usize) -> Vec<YoungDiagram> {
        match self {
            NuClass::Trivial(l) => vec![l.clone()],
            NuClass::Chain { .. } => (0..=upto).map(|i| self.member(i).expect("chain")).collect(),
        }
    }

    pub fn position_of(&self, lambda: &YoungDiagram) -> Option<usize> {
        match self {
            NuClass::Trivial(l) => (l == lambda).then_some(0),
            NuClass::Chain { .. } => {
                (0..=lambda.length() + 1).find(|&i| self.member(i).as_ref() == Some(lambda))
            }
        }
    }

    pub fn base(&self) -> &YoungDiagram {
        match self {
            NuClass::Trivial(l) => l,
            NuClass::Chain { base, .. } => base,
        }
    }
}

impl fmt::Display for NuClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NuClass::Trivial(l) => write!(f, "trivial({l})"),
            NuClass::Chain { base, nu } => write!(f, "chain(base {base}, v = {nu})"),
        }
    }
}

/// Nonnegative integer value of `nu`, if it has one.
pub fn nonneg_integer(nu: &Rational) -> Option<u64> {
    if nu.is_integer() && !nu.is_negative() {
        nu.to_integer().to_u64()
    } else {
        None
    }
}

/// Diagrams whose `mu`-sequence at `v` is a rearrangement of that of
/// `lambda`, found by choosing which of the first `ℓ + 2` entries is the
/// head `v - |λ'|` and reading the rows off the remaining entries.
pub fn class_candidates(lambda: &YoungDiagram, nu: &Rational) -> Vec<YoungDiagram> {
    let Some(n) = nonneg_integer(nu) else {
        return vec![lambda.clone()];
    };
    let len = lambda.length() + 2;
    let entries: Vec<i64> = mu_sequence(lambda, nu, len)
        .iter()
        .map(|x| x.to_integer().to_i64().expect("small entries"))
        .collect();
    let mut out = BTreeSet::new();
    for h in 0..len {
        let mut rest: Vec<i64> = entries.iter().enumerate().filter(|&(i, _)| i != h).map(|(_, &e)| e).collect();
        rest.sort_unstable_by(|a, b| b.cmp(a));
        let rows: Vec<i64> = rest.iter().enumerate().map(|(j, &e)| e + j as i64 + 1).collect();
        if rows.iter().any(|&r| r < 0) || rows.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        let Ok(cand) = YoungDiagram::new(rows.iter().map(|&r| r as usize).collect()) else {
            continue;
        };
        if entries[h] == n as i64 - cand.size() as i64 {
            out.insert(cand);
        }
    }
    out.into_iter().collect()
}

/// The class of `lambda` at `v`.
pub fn nu_class(lambda: &YoungDiagram, nu: &Rational) -> NuClass {
    let Some(n) = nonneg_integer(nu) else {
        return NuClass::Trivial(lambda.clone());
    };
    let candidates = class_candidates(lambda, nu);
    if candidates.len() < 2 {
        return NuClass::Trivial(lambda.clone());
    }
    let base = candidates.iter().min_by_key(|c| c.size()).expect("nonempty").clone();
    debug_assert!(tilde(&base, n as i64).is_some());
    let class = NuClass::Chain { base, nu: n };
    debug_assert!(class.position_of(lambda).is_some());
    class
}
