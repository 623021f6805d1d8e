//! The Schur–Weyl functor from the abelian envelope to parabolic category
//! O, on labels and `gl(U)`-characters.
//!
//! Every image character is computed twice: from the O-side tables of the
//! image label, and from the envelope side through the multiplicity spaces
//! of `V^{⊗v}`,
//!
//! `ch SW(X) = dim Hom(X, L_0) · W_0 + Σ_j [X : L_j] · W_{j+1}`,
//!
//! where `W_j` is the multiplicity space of `X_{λ^(j)}`. A trivial class
//! contributes `W_0` for every object.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::arith::Rational;
use crate::category_o::{dual_label, k_lambda, module_char, OError, OKind, OModuleLabel};
use crate::character::GlUCharacter;
use crate::deligne::{abelian_object_data, multiplicity_space_char, AbelianKind, AbelianObjectLabel};
use crate::young::{hook_dim, nonneg_integer, partitions_of, schur_dim, NuClass, YoungDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SwError {
    #[error("dim V must be at least 1")]
    ZeroDimension,
    #[error("the class of {label} is a chain at v = {chain_nu}, not at v = {nu}")]
    ParameterMismatch { label: String, chain_nu: u64, nu: String },
    #[error("characters of SW({label}) disagree: O side {o_side}, envelope side {envelope_side}")]
    CharacterMismatch { label: String, o_side: String, envelope_side: String },
    #[error("{0} exceeds the resource guard")]
    Resource(String),
    #[error(transparent)]
    O(#[from] OError),
}

/// An image of the functor: a module of category O, or the kernel of
/// `P_1 ↠ L_1`, which has no label of its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SwLabel {
    Module(OModuleLabel),
    Kernel { class: NuClass, dim_v: usize },
}

impl SwLabel {
    pub fn is_zero(&self) -> bool {
        matches!(self, SwLabel::Module(m) if m.is_zero())
    }
}

impl fmt::Display for SwLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwLabel::Module(m) => write!(f, "{m}"),
            SwLabel::Kernel { class, .. } => {
                let member = |i| class.member(i).expect("chain");
                write!(f, "Ker(P({}) -> L({}))", member(1), member(1))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwImage {
    pub label: SwLabel,
    pub char: GlUCharacter,
}

fn check_parameter(x: &AbelianObjectLabel, nu: &Rational, dim_v: usize) -> Result<(), SwError> {
    if dim_v == 0 {
        return Err(SwError::ZeroDimension);
    }
    if let NuClass::Chain { nu: n, .. } = x.class {
        if nonneg_integer(nu) != Some(n) {
            return Err(SwError::ParameterMismatch { label: x.to_string(), chain_nu: n, nu: nu.to_string() });
        }
    }
    Ok(())
}

/// The image label, read off the table of images.
pub fn sw_image_label(x: &AbelianObjectLabel, dim_v: usize) -> SwLabel {
    let class = x.class.clone();
    let module = |kind, i| SwLabel::Module(OModuleLabel::new(kind, class.clone(), i, dim_v));
    if class.is_trivial() {
        return module(OKind::Verma, 0);
    }
    let i = x.index;
    let k = k_lambda(&class, dim_v);
    match x.kind {
        AbelianKind::Simple if i == 0 => module(OKind::Verma, 0),
        AbelianKind::Simple => module(OKind::Simple, i + 1),
        AbelianKind::Standard => module(OKind::Verma, i),
        AbelianKind::Costandard if i == 0 => module(OKind::Verma, 0),
        // With k_λ = 1 (only when dim V = 1) both P_1 and L_1 vanish and the
        // image is the surviving factor L_0.
        AbelianKind::Costandard if i == 1 && k <= 1 => module(OKind::Simple, 0),
        AbelianKind::Costandard if i == 1 => SwLabel::Kernel { class, dim_v },
        AbelianKind::Costandard => module(OKind::DualVerma, i),
        AbelianKind::Projective if i + 1 < k => module(OKind::Projective, i + 1),
        AbelianKind::Projective if i + 1 == k => module(OKind::Simple, i),
        AbelianKind::Projective => module(OKind::Zero, 0),
    }
}

/// Character of an image label from the O-side tables.
pub fn o_side_char(label: &SwLabel, cutoff: usize) -> Result<GlUCharacter, SwError> {
    Ok(match label {
        SwLabel::Module(m) => module_char(m, cutoff)?,
        SwLabel::Kernel { class, dim_v } => {
            let p = OModuleLabel::new(OKind::Projective, class.clone(), 1, *dim_v);
            let l = OModuleLabel::new(OKind::Simple, class.clone(), 1, *dim_v);
            module_char(&p, cutoff)?.sub(&module_char(&l, cutoff)?)
        }
    })
}

/// Character of `SW(x)` from the composition factors of `x` and the
/// multiplicity spaces of `V^{⊗v}`.
pub fn envelope_side_char(x: &AbelianObjectLabel, nu: &Rational, dim_v: usize, cutoff: usize) -> GlUCharacter {
    let d = dim_v - 1;
    let space = |j: usize| multiplicity_space_char(&x.class.member(j).expect("chain"), nu, d, cutoff);
    if x.class.is_trivial() {
        return space(0);
    }
    let data = abelian_object_data(x);
    let mut out = GlUCharacter::zero(d, cutoff);
    let hom_to_l0 = data.top().iter().filter(|&&j| j == 0).count() as i64;
    if hom_to_l0 > 0 {
        out = out.add(&space(0).scale(hom_to_l0));
    }
    for (&j, &m) in &data.composition_factors {
        out = out.add(&space(j + 1).scale(m as i64));
    }
    out
}

/// The image of `x`, with both character computations compared.
pub fn sw_image(x: &AbelianObjectLabel, nu: &Rational, dim_v: usize, cutoff: usize) -> Result<SwImage, SwError> {
    check_parameter(x, nu, dim_v)?;
    let label = sw_image_label(x, dim_v);
    let o_side = o_side_char(&label, cutoff)?;
    let envelope_side = envelope_side_char(x, nu, dim_v, cutoff);
    if o_side != envelope_side {
        return Err(SwError::CharacterMismatch {
            label: x.to_string(),
            o_side: o_side.to_string(),
            envelope_side: envelope_side.to_string(),
        });
    }
    Ok(SwImage { label, char: o_side })
}

/// The image label after quotienting by finite-dimensional modules. In a
/// chain class the only finite-dimensional simple is `L_0`; in a trivial
/// class the Verma module is simple and is written as such.
pub fn localize(label: &SwLabel) -> OModuleLabel {
    match label {
        SwLabel::Kernel { class, dim_v } => OModuleLabel::new(OKind::DualVerma, class.clone(), 1, *dim_v),
        SwLabel::Module(m) if m.is_zero() || m.index > 0 => m.clone(),
        SwLabel::Module(m) if m.class.is_trivial() => OModuleLabel { kind: OKind::Simple, ..m.clone() },
        SwLabel::Module(m) => match m.kind {
            OKind::Simple => OModuleLabel::zero(m.class.clone(), m.dim_v),
            _ => OModuleLabel::new(OKind::Simple, m.class.clone(), 1, m.dim_v),
        },
    }
}

/// Whether the simple object `L(λ^(i))` is killed by the localized functor.
pub fn sw_kernel(x: &AbelianObjectLabel, dim_v: usize) -> bool {
    assert_eq!(x.kind, AbelianKind::Simple, "the kernel is described on simple objects");
    localize(&sw_image_label(x, dim_v)).is_zero()
}

/// Whether a character is that of a finite-dimensional polynomial module
/// of degree `v`: effective, with every `|ρ| ≤ v`.
pub fn is_finite_correction(c: &GlUCharacter, nu: u64) -> bool {
    c.is_effective() && c.support().all(|rho| rho.size() as u64 <= nu)
}

/// A short exact sequence `0 → sub → middle → quotient → 0` of the
/// envelope, by labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortExact {
    pub sub: AbelianObjectLabel,
    pub middle: AbelianObjectLabel,
    pub quotient: AbelianObjectLabel,
}

/// The sequences `L_{i-1} → M_i → L_i`, `L_i → M*_i → L_{i-1}` and
/// `M_{i+1} → P_i → M_i` for `i ≤ max_pos`.
pub fn envelope_sequences(class: &NuClass, max_pos: usize) -> Vec<ShortExact> {
    let label = |kind, i| AbelianObjectLabel::new(kind, class.clone(), i);
    let mut out = Vec::new();
    if class.is_trivial() {
        return out;
    }
    for i in 0..=max_pos {
        if i >= 1 {
            out.push(ShortExact {
                sub: label(AbelianKind::Simple, i - 1),
                middle: label(AbelianKind::Standard, i),
                quotient: label(AbelianKind::Simple, i),
            });
            out.push(ShortExact {
                sub: label(AbelianKind::Simple, i),
                middle: label(AbelianKind::Costandard, i),
                quotient: label(AbelianKind::Simple, i - 1),
            });
        }
        out.push(ShortExact {
            sub: label(AbelianKind::Standard, i + 1),
            middle: label(AbelianKind::Projective, i),
            quotient: label(AbelianKind::Standard, i),
        });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessFailure {
    pub sequence: String,
    pub correction: String,
}

/// The functor is contravariant and left exact, so for every sequence
/// `ch SW(sub) + ch SW(quotient) - ch SW(middle)` is a finite-dimensional
/// correction; for projectives in the range `1 ≤ i < k_λ - 1` it vanishes.
pub fn sw_exactness_check(
    class: &NuClass,
    nu: &Rational,
    dim_v: usize,
    cutoff: usize,
    max_pos: usize,
) -> Result<Vec<ExactnessFailure>, SwError> {
    let n = nonneg_integer(nu).unwrap_or(0);
    let k = k_lambda(class, dim_v);
    let mut failures = Vec::new();
    for seq in envelope_sequences(class, max_pos) {
        let ch = |x: &AbelianObjectLabel| sw_image(x, nu, dim_v, cutoff).map(|img| img.char);
        let correction = ch(&seq.sub)?.add(&ch(&seq.quotient)?).sub(&ch(&seq.middle)?);
        let generic = seq.middle.kind == AbelianKind::Projective && seq.middle.index >= 1 && seq.middle.index + 1 < k;
        let ok = if generic { correction.is_zero() } else { is_finite_correction(&correction, n) };
        if !ok {
            failures.push(ExactnessFailure {
                sequence: format!("0 -> {} -> {} -> {} -> 0", seq.sub, seq.middle, seq.quotient),
                correction: correction.to_string(),
            });
        }
    }
    Ok(failures)
}

/// `SW(x*)` against `SW(x)∨`, after localization.
pub fn duality_check(x: &AbelianObjectLabel, dim_v: usize) -> bool {
    let lhs = localize(&sw_image_label(&x.dual(), dim_v));
    let rhs = dual_label(&localize(&sw_image_label(x, dim_v)));
    (lhs.is_zero() && rhs.is_zero()) || (lhs.kind == rhs.kind && lhs.index == rhs.index && lhs.class == rhs.class)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalTerm {
    pub lambda: YoungDiagram,
    /// Dimension of the Specht module.
    pub specht_dim: BigUint,
    /// Dimension of `S^λ C^d`.
    pub schur_dim: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalSw {
    pub n: usize,
    pub d: usize,
    pub terms: Vec<ClassicalTerm>,
    pub total: BigUint,
}

impl ClassicalSw {
    /// `Σ f_λ · dim S^λ C^d = d^n`.
    pub fn balances(&self) -> bool {
        self.total == BigUint::from(self.d).pow(self.n as u32)
    }
}

pub const MAX_CLASSICAL_N: usize = 10;
pub const MAX_CLASSICAL_D: usize = 5;

/// `(C^d)^{⊗n} = ⊕_{λ ⊢ n, ℓ(λ) ≤ d} λ ⊗ S^λ C^d`.
pub fn classical_sw(n: usize, d: usize) -> Result<ClassicalSw, SwError> {
    if n > MAX_CLASSICAL_N || d > MAX_CLASSICAL_D {
        return Err(SwError::Resource(format!("n = {n}, d = {d}")));
    }
    classical_sw_unchecked(n, d)
}

pub fn classical_sw_unchecked(n: usize, d: usize) -> Result<ClassicalSw, SwError> {
    let terms: Vec<ClassicalTerm> = partitions_of(n)
        .into_iter()
        .filter(|l| l.length() <= d)
        .map(|lambda| ClassicalTerm { specht_dim: hook_dim(&lambda), schur_dim: schur_dim(&lambda, d), lambda })
        .collect();
    let total = terms.iter().map(|t| &t.specht_dim * &t.schur_dim).sum();
    Ok(ClassicalSw { n, d, terms, total })
}

/// All labels of a class at positions `≤ max_pos`.
pub fn class_labels(class: &NuClass, max_pos: usize) -> Vec<AbelianObjectLabel> {
    let top = if class.is_trivial() { 0 } else { max_pos };
    let mut out = Vec::new();
    for kind in [AbelianKind::Simple, AbelianKind::Standard, AbelianKind::Costandard, AbelianKind::Projective] {
        for i in 0..=top {
            out.push(AbelianObjectLabel::new(kind, class.clone(), i));
        }
    }
    out
}

/// Images of every label of a class, keyed by the label's display.
pub fn class_images(
    class: &NuClass,
    nu: &Rational,
    dim_v: usize,
    cutoff: usize,
    max_pos: usize,
) -> Result<BTreeMap<String, SwImage>, SwError> {
    class_labels(class, max_pos)
        .into_iter()
        .map(|x| Ok((x.to_string(), sw_image(&x, nu, dim_v, cutoff)?)))
        .collect()
}
