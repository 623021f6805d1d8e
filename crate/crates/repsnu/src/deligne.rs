//! Blocks of `Rep(S_v)` and the multiplicity tables of its abelian
//! envelope. Objects are represented by labels and multiplicity data only.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::Rational;
use crate::character::GlUCharacter;
use crate::young::{is_horizontal_strip, nonneg_integer, nu_class, partitions_bounded, NuClass, YoungDiagram};

/// A diagram together with its class and position in that class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Placed {
    pub class: NuClass,
    pub position: usize,
}

pub fn place(lambda: &YoungDiagram, nu: &Rational) -> Placed {
    let class = nu_class(lambda, nu);
    let position = class.position_of(lambda).expect("a diagram lies in its own class");
    Placed { class, position }
}

/// `dim Hom(X_λ, X_λ')` in the Karoubian category.
pub fn hom_dim_indec(lambda: &YoungDiagram, other: &YoungDiagram, nu: &Rational) -> u32 {
    let a = place(lambda, nu);
    let b = place(other, nu);
    if a.class != b.class {
        return 0;
    }
    if a.class.is_trivial() {
        return 1;
    }
    match a.position.abs_diff(b.position) {
        0 if a.position == 0 => 1,
        0 => 2,
        1 => 1,
        _ => 0,
    }
}

/// The decomposition of `lift_v(X_λ)` at generic parameter.
pub fn lift(lambda: &YoungDiagram, nu: &Rational) -> Vec<YoungDiagram> {
    let p = place(lambda, nu);
    if p.position == 0 {
        return vec![lambda.clone()];
    }
    vec![lambda.clone(), p.class.member(p.position - 1).expect("chain")]
}

/// `dim Hom(X_τ ⊗ μ, Δ_{|μ|})` with `μ` the Specht module of `S_{|μ|}`.
pub fn hom_dim_x_mu_delta(tau: &YoungDiagram, mu: &YoungDiagram, nu: &Rational) -> u32 {
    let in_plus = |lambda: &YoungDiagram| is_horizontal_strip(lambda, mu) as u32;
    let p = place(tau, nu);
    if p.position == 0 {
        return in_plus(tau);
    }
    let prev = p.class.member(p.position - 1).expect("chain");
    in_plus(tau) + in_plus(&prev)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AbelianKind {
    Simple,
    Standard,
    Costandard,
    Projective,
}

impl AbelianKind {
    pub fn letter(self) -> &'static str {
        match self {
            AbelianKind::Simple => "L",
            AbelianKind::Standard => "M",
            AbelianKind::Costandard => "M*",
            AbelianKind::Projective => "P",
        }
    }
}

/// `L(λ^(i))`, `M(λ^(i))`, `M(λ^(i))*` or `P(λ^(i))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianObjectLabel {
    pub kind: AbelianKind,
    pub class: NuClass,
    pub index: usize,
}

impl AbelianObjectLabel {
    pub fn new(kind: AbelianKind, class: NuClass, index: usize) -> Self {
        let index = if class.is_trivial() { 0 } else { index };
        AbelianObjectLabel { kind, class, index }
    }

    pub fn of_diagram(kind: AbelianKind, lambda: &YoungDiagram, nu: &Rational) -> Self {
        let p = place(lambda, nu);
        AbelianObjectLabel::new(kind, p.class, p.position)
    }

    pub fn diagram(&self) -> YoungDiagram {
        self.class.member(self.index).expect("label index lies in its class")
    }

    /// The dual object: `M ↔ M*`, with simples and projectives fixed.
    pub fn dual(&self) -> Self {
        let kind = match self.kind {
            AbelianKind::Standard => AbelianKind::Costandard,
            AbelianKind::Costandard => AbelianKind::Standard,
            k => k,
        };
        AbelianObjectLabel { kind, ..self.clone() }
    }
}

impl fmt::Display for AbelianObjectLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind.letter(), self.diagram())
    }
}

/// Multiplicity data of an envelope object. Simple and standard objects
/// are named by their class position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianObjectData {
    pub composition_factors: BTreeMap<usize, u32>,
    pub standard_filtration: Option<BTreeMap<usize, u32>>,
    /// Socle layers, socle first and top last.
    pub socle_layers: Vec<Vec<usize>>,
}

impl AbelianObjectData {
    pub fn top(&self) -> &[usize] {
        self.socle_layers.last().map_or(&[], |v| v.as_slice())
    }
}

fn multiset(items: &[usize]) -> BTreeMap<usize, u32> {
    let mut out = BTreeMap::new();
    for &i in items {
        *out.entry(i).or_insert(0) += 1;
    }
    out
}

pub fn abelian_object_data(label: &AbelianObjectLabel) -> AbelianObjectData {
    let i = label.index;
    let single = |i: usize, standard: bool| AbelianObjectData {
        composition_factors: multiset(&[i]),
        standard_filtration: standard.then(|| multiset(&[i])),
        socle_layers: vec![vec![i]],
    };
    if label.class.is_trivial() {
        return single(0, true);
    }
    match label.kind {
        AbelianKind::Simple => single(i, i == 0),
        AbelianKind::Standard | AbelianKind::Costandard if i == 0 => single(0, true),
        AbelianKind::Standard => AbelianObjectData {
            composition_factors: multiset(&[i - 1, i]),
            standard_filtration: Some(multiset(&[i])),
            socle_layers: vec![vec![i - 1], vec![i]],
        },
        AbelianKind::Costandard => AbelianObjectData {
            composition_factors: multiset(&[i - 1, i]),
            standard_filtration: None,
            socle_layers: vec![vec![i], vec![i - 1]],
        },
        AbelianKind::Projective => {
            let middle = if i == 0 { vec![1] } else { vec![i - 1, i + 1] };
            let mut factors = vec![i, i];
            factors.extend(&middle);
            AbelianObjectData {
                composition_factors: multiset(&factors),
                standard_filtration: Some(multiset(&[i, i + 1])),
                socle_layers: vec![vec![i], middle, vec![i]],
            }
        }
    }
}

/// `[M(λ^(i)) : L(λ^(j))]`.
pub fn standard_composition_mult(class: &NuClass, i: usize, j: usize) -> u32 {
    let data = abelian_object_data(&AbelianObjectLabel::new(AbelianKind::Standard, class.clone(), i));
    data.composition_factors.get(&j).copied().unwrap_or(0)
}

/// `(P(λ^(j)) : M(λ^(i)))`.
pub fn projective_standard_mult(class: &NuClass, j: usize, i: usize) -> u32 {
    let data = abelian_object_data(&AbelianObjectLabel::new(AbelianKind::Projective, class.clone(), j));
    data.standard_filtration.and_then(|f| f.get(&i).copied()).unwrap_or(0)
}

/// BGG reciprocity on the envelope tables for positions `0..=max_pos`.
pub fn bgg_reciprocity_check(class: &NuClass, max_pos: usize) -> bool {
    let top = if class.is_trivial() { 0 } else { max_pos };
    (0..=top).all(|i| {
        (0..=top).all(|j| projective_standard_mult(class, j, i) == standard_composition_mult(class, i, j))
    })
}

/// Character of the multiplicity space of `X_μ` in `V^{⊗v}`, truncated at
/// `|ρ| ≤ cutoff`, `ℓ(ρ) ≤ d`.
pub fn multiplicity_space_char(mu: &YoungDiagram, nu: &Rational, d: usize, cutoff: usize) -> GlUCharacter {
    let p = place(mu, nu);
    let candidates = partitions_bounded(cutoff, d);
    let keep: Vec<&YoungDiagram> = match (&p.class, p.position) {
        (NuClass::Trivial(_), _) => candidates.iter().filter(|rho| is_horizontal_strip(mu, rho)).collect(),
        (NuClass::Chain { .. }, 0) => {
            let n = nonneg_integer(nu).expect("chain classes have integer v") as usize;
            candidates
                .iter()
                .filter(|rho| is_horizontal_strip(mu, rho) && rho.first_row() + mu.size() <= n)
                .collect()
        }
        (class, i) => {
            let prev = class.member(i - 1).expect("chain");
            candidates
                .iter()
                .filter(|rho| is_horizontal_strip(mu, rho) && is_horizontal_strip(&prev, rho))
                .collect()
        }
    };
    GlUCharacter::indicator(d, cutoff, keep)
}
