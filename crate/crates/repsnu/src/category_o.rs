//! The blocks of parabolic category O for `gl(V)`, `dim V = N`, with the
//! mirabolic parabolic, at the level of `gl(U)`-characters and
//! multiplicity tables (`U` has dimension `N - 1`).

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::arith::Rational;
use crate::character::GlUCharacter;
use crate::deligne::place;
use crate::young::{pieri_plus_bounded, NuClass, YoungDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OError {
    #[error("simple character has a negative multiplicity at ({0}); raise the cutoff")]
    NegativeMultiplicity(YoungDiagram),
    #[error("dim V must be at least 1")]
    ZeroDimension,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OKind {
    Verma,
    DualVerma,
    Simple,
    Projective,
    /// The dual of `P_0` when `P_0` is not simple; it is the injective hull
    /// of `L_0` and is not isomorphic to `P_0`.
    InjectiveHull,
    Zero,
}

impl OKind {
    pub fn letter(self) -> &'static str {
        match self {
            OKind::Verma => "M",
            OKind::DualVerma => "M∨",
            OKind::Simple => "L",
            OKind::Projective => "P",
            OKind::InjectiveHull => "I",
            OKind::Zero => "0",
        }
    }
}

/// `M_i`, `M∨_i`, `L_i`, `P_i` for the class of `λ`; collapses to `Zero`
/// from position `k_λ` on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OModuleLabel {
    pub kind: OKind,
    pub class: NuClass,
    pub index: usize,
    pub dim_v: usize,
}

/// `k_λ = min{k : ℓ(λ^(k)) > N - 1}`. A trivial class has one position, so
/// this is 1 or 0 there.
pub fn k_lambda(class: &NuClass, dim_v: usize) -> usize {
    let d = dim_v.saturating_sub(1);
    match class {
        NuClass::Trivial(l) => (l.length() <= d) as usize,
        NuClass::Chain { .. } => {
            (0..).find(|&k| class.member(k).expect("chain").length() > d).expect("lengths grow along a chain")
        }
    }
}

impl OModuleLabel {
    pub fn new(kind: OKind, class: NuClass, index: usize, dim_v: usize) -> Self {
        let index = if class.is_trivial() { 0 } else { index };
        let kind = if index >= k_lambda(&class, dim_v) { OKind::Zero } else { kind };
        OModuleLabel { kind, class, index, dim_v }
    }

    pub fn of_diagram(kind: OKind, lambda: &YoungDiagram, nu: &Rational, dim_v: usize) -> Self {
        let p = place(lambda, nu);
        OModuleLabel::new(kind, p.class, p.position, dim_v)
    }

    pub fn zero(class: NuClass, dim_v: usize) -> Self {
        OModuleLabel { kind: OKind::Zero, class, index: 0, dim_v }
    }

    pub fn is_zero(&self) -> bool {
        self.kind == OKind::Zero
    }

    pub fn diagram(&self) -> YoungDiagram {
        self.class.member(self.index).expect("label index lies in its class")
    }

    pub fn k_lambda(&self) -> usize {
        k_lambda(&self.class, self.dim_v)
    }
}

impl fmt::Display for OModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}({})", self.kind.letter(), self.diagram())
    }
}

/// `ch M_p(v - |λ|, λ)|_{gl(U)} = Σ_{μ ∈ I^+_λ} S^μ U`, truncated.
pub fn verma_char(lambda: &YoungDiagram, dim_v: usize, cutoff: usize) -> GlUCharacter {
    let d = dim_v.saturating_sub(1);
    if lambda.length() > d {
        return GlUCharacter::zero(d, cutoff);
    }
    GlUCharacter::indicator(d, cutoff, &pieri_plus_bounded(lambda, cutoff))
}

/// `dim Hom(M_p(μ), M_p(τ))`.
pub fn verma_hom_dim(mu: &YoungDiagram, tau: &YoungDiagram, nu: &Rational, dim_v: usize) -> u32 {
    let a = OModuleLabel::of_diagram(OKind::Verma, mu, nu, dim_v);
    let b = OModuleLabel::of_diagram(OKind::Verma, tau, nu, dim_v);
    if a.is_zero() || b.is_zero() || a.class != b.class {
        return 0;
    }
    (a.index == b.index || a.index == b.index + 1) as u32
}

/// `ch L_i` from the BGG resolution `Σ_{i ≤ j < k_λ} (-1)^{j-i} ch M_j`.
pub fn simple_char(class: &NuClass, i: usize, dim_v: usize, cutoff: usize) -> Result<GlUCharacter, OError> {
    if dim_v == 0 {
        return Err(OError::ZeroDimension);
    }
    let k = k_lambda(class, dim_v);
    let mut out = GlUCharacter::zero(dim_v - 1, cutoff);
    for j in i..k {
        let m = verma_char(&class.member(j).expect("chain"), dim_v, cutoff);
        out = if (j - i).is_multiple_of(2) { out.add(&m) } else { out.sub(&m) };
    }
    if let Some((mu, _)) = out.mults().iter().find(|(_, &m)| m < 0) {
        return Err(OError::NegativeMultiplicity(mu.clone()));
    }
    Ok(out)
}

/// Character of any labelled module.
pub fn module_char(label: &OModuleLabel, cutoff: usize) -> Result<GlUCharacter, OError> {
    let d = label.dim_v.saturating_sub(1);
    let verma = |i: usize| verma_char(&label.class.member(i).expect("chain"), label.dim_v, cutoff);
    Ok(match label.kind {
        OKind::Zero => GlUCharacter::zero(d, cutoff),
        OKind::Verma | OKind::DualVerma => verma(label.index),
        OKind::Simple => simple_char(&label.class, label.index, label.dim_v, cutoff)?,
        OKind::Projective | OKind::InjectiveHull => {
            let data = projective_data(&label.class, label.index, label.dim_v);
            data.standard_filtration
                .iter()
                .fold(GlUCharacter::zero(d, cutoff), |acc, (&j, &m)| acc.add(&verma(j).scale(m as i64)))
        }
    })
}

/// `[M_i : L_j]`: the factors of `M_i` are `L_i` and `L_{i+1}`, minus any
/// that vanish.
pub fn verma_composition_mult(class: &NuClass, i: usize, j: usize, dim_v: usize) -> u32 {
    let k = k_lambda(class, dim_v);
    (i < k && j < k && (j == i || (j == i + 1 && !class.is_trivial()))) as u32
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveData {
    pub standard_filtration: BTreeMap<usize, u32>,
    /// Socle first, top last.
    pub socle_layers: Vec<Vec<usize>>,
    pub k_lambda: usize,
}

pub fn projective_data(class: &NuClass, i: usize, dim_v: usize) -> ProjectiveData {
    let k = k_lambda(class, dim_v);
    let alive = |j: usize| j < k && (j == 0 || !class.is_trivial());
    let mut standard_filtration = BTreeMap::new();
    let mut socle_layers = Vec::new();
    if alive(i) {
        if i == 0 {
            standard_filtration.insert(0, 1);
            if alive(1) {
                socle_layers.push(vec![1]);
            }
            socle_layers.push(vec![0]);
        } else {
            standard_filtration.insert(i - 1, 1);
            standard_filtration.insert(i, 1);
            let middle: Vec<usize> = [i - 1, i + 1].into_iter().filter(|&j| alive(j)).collect();
            socle_layers = vec![vec![i], middle, vec![i]];
        }
    }
    ProjectiveData { standard_filtration, socle_layers, k_lambda: k }
}

/// `(P_j : M_i)`.
pub fn projective_verma_mult(class: &NuClass, j: usize, i: usize, dim_v: usize) -> u32 {
    projective_data(class, j, dim_v).standard_filtration.get(&i).copied().unwrap_or(0)
}

/// BGG reciprocity `(P_j : M_i) = [M_i : L_j]` for positions `0..=max_pos`.
pub fn bgg_reciprocity_check(class: &NuClass, dim_v: usize, max_pos: usize) -> bool {
    (0..=max_pos).all(|i| {
        (0..=max_pos).all(|j| projective_verma_mult(class, j, i, dim_v) == verma_composition_mult(class, i, j, dim_v))
    })
}

/// The duality `∨` on labels.
pub fn dual_label(label: &OModuleLabel) -> OModuleLabel {
    let p0_is_simple = label.k_lambda() <= 1;
    let kind = match label.kind {
        OKind::Verma => OKind::DualVerma,
        OKind::DualVerma => OKind::Verma,
        OKind::Projective if label.index == 0 && !p0_is_simple => OKind::InjectiveHull,
        OKind::InjectiveHull => OKind::Projective,
        k => k,
    };
    OModuleLabel { kind, ..label.clone() }
}
