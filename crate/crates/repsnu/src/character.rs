//! Truncated characters of polynomial `gl(U)`-modules: multiplicities of
//! `S^μ U` for `|μ| ≤ cutoff` and `ℓ(μ) ≤ d`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::young::{schur_dim, YoungDiagram};

/// Multiplicities are signed so that differences of characters can be
/// formed; [`GlUCharacter::is_effective`] tells whether the result is an
/// honest module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlUCharacter {
    d: usize,
    cutoff: usize,
    mults: BTreeMap<YoungDiagram, i64>,
    /// Set when two characters with different cutoffs were combined.
    cutoff_mismatch: bool,
}

impl GlUCharacter {
    pub fn zero(d: usize, cutoff: usize) -> Self {
        GlUCharacter { d, cutoff, mults: BTreeMap::new(), cutoff_mismatch: false }
    }

    /// Indicator character of the diagrams in `support` that fit.
    pub fn indicator<'a>(d: usize, cutoff: usize, support: impl IntoIterator<Item = &'a YoungDiagram>) -> Self {
        let mut c = GlUCharacter::zero(d, cutoff);
        for mu in support {
            c.add_mult(mu, 1);
        }
        c
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn cutoff_mismatch(&self) -> bool {
        self.cutoff_mismatch
    }

    pub fn fits(&self, mu: &YoungDiagram) -> bool {
        mu.size() <= self.cutoff && mu.length() <= self.d
    }

    /// Adds `m` copies of `S^μ U`; diagrams outside the window are dropped.
    pub fn add_mult(&mut self, mu: &YoungDiagram, m: i64) {
        if m == 0 || !self.fits(mu) {
            return;
        }
        let e = self.mults.entry(mu.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.mults.remove(mu);
        }
    }

    pub fn mult(&self, mu: &YoungDiagram) -> i64 {
        self.mults.get(mu).copied().unwrap_or(0)
    }

    pub fn mults(&self) -> &BTreeMap<YoungDiagram, i64> {
        &self.mults
    }

    pub fn support(&self) -> impl Iterator<Item = &YoungDiagram> {
        self.mults.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.mults.values().all(|&m| m >= 0)
    }

    /// Restricts to a smaller cutoff.
    pub fn truncate(&self, cutoff: usize) -> Self {
        let cutoff = cutoff.min(self.cutoff);
        let mut out = GlUCharacter { cutoff, ..self.clone() };
        out.mults.retain(|mu, _| mu.size() <= cutoff);
        out
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        assert_eq!(self.d, other.d, "characters for different dim U");
        let cutoff = self.cutoff.min(other.cutoff);
        let mut out = self.truncate(cutoff);
        out.cutoff_mismatch |= other.cutoff_mismatch || self.cutoff != other.cutoff;
        for (mu, &m) in &other.mults {
            out.add_mult(mu, sign * m);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut out = GlUCharacter::zero(self.d, self.cutoff);
        out.cutoff_mismatch = self.cutoff_mismatch;
        for (mu, &m) in &self.mults {
            out.add_mult(mu, s * m);
        }
        out
    }

    /// `Σ m_μ dim S^μ U` over the truncated support.
    pub fn dimension(&self) -> BigInt {
        self.mults
            .iter()
            .map(|(mu, &m)| BigInt::from(m) * BigInt::from(schur_dim(mu, self.d)))
            .sum()
    }

    pub fn max_size(&self) -> Option<usize> {
        self.mults.keys().map(YoungDiagram::size).max()
    }
}

impl fmt::Display for GlUCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.mults.iter().map(|(mu, m)| format!("({mu}):{m}")).collect();
        write!(f, "{{{}}}", terms.join(", "))
    }
}
