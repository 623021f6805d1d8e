//! The graded pieces `(U^{⊗k} ⊗ Δ_k)^{S_k}` of the complex tensor power of
//! a unital space `V = C·1 ⊕ U`, the `gl(V)`-action on them, and the
//! comparison with the honest tensor power `V^{⊗n}`.
//!
//! Operators are stored unsymmetrized: a map `U^{⊗k} ⊗ Δ_k → U^{⊗k'} ⊗ Δ_{k'}`
//! is a sum over bar diagrams of a matrix on the `U`-factors whose entries
//! are polynomials in `v`. Identities that only hold on invariants are
//! checked after right composition with the symmetrizer.
//!
//! The basis of `U^{⊗k}` is indexed in mixed radix with the first tensor
//! factor most significant. In `V` the distinguished vector has index 0
//! and `U` is spanned by indices `1..=d`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::arith::{falling_factorial, int, NuPolynomial, Rational};
use crate::diagram::{compose_bar, perm, res, res_iota, res_star, BarDiagram, DiagramError};
use crate::specialize::{diagram_contains, for_each_image, InjectionBasis, RationalMatrix, SpecializeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("grade mismatch: {0}")]
    Grade(String),
    #[error("the map does not send the distinguished vector to itself")]
    NotUnital,
    #[error("{0} exceeds the resource guard")]
    Resource(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Specialize(#[from] SpecializeError),
}

/// `dim U^{⊗k}`.
pub fn u_power(d: usize, k: usize) -> usize {
    d.pow(k as u32)
}

/// Tensor-factor digits of a basis index of `U^{⊗k}`.
pub fn digits(mut idx: usize, d: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

pub fn index_of(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * d + x)
}

/// A sparse matrix with polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), NuPolynomial>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn from_rational(m: &RationalMatrix) -> Self {
        let mut out = PolyMatrix::zero(m.rows(), m.cols());
        for (&(r, c), v) in m.entries() {
            out.add_entry(r, c, &NuPolynomial::constant(v.clone()));
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), NuPolynomial> {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> NuPolynomial {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(NuPolynomial::zero)
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: &NuPolynomial) {
        assert!(r < self.rows && c < self.cols, "entry ({r},{c}) out of range");
        if v.is_zero() {
            return;
        }
        let e = self.entries.entry((r, c)).or_insert_with(NuPolynomial::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_scaled(&mut self, other: &PolyMatrix, s: &NuPolynomial) {
        for (&(r, c), v) in &other.entries {
            self.add_entry(r, c, &(v * s));
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions");
        let mut by_row: BTreeMap<usize, Vec<(usize, &NuPolynomial)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = PolyMatrix::zero(self.rows, other.cols);
        for (&(r, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    out.add_entry(r, c, &(a * b));
                }
            }
        }
        out
    }

    pub fn eval_int(&self, n: i64) -> RationalMatrix {
        let mut out = RationalMatrix::zero(self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            out.add_entry(r, c, &v.eval_int(n));
        }
        out
    }

    pub fn trace(&self) -> NuPolynomial {
        let mut t = NuPolynomial::zero();
        for (&(r, c), v) in &self.entries {
            if r == c {
                t += v;
            }
        }
        t
    }
}

/// A map `U^{⊗src} ⊗ Δ_src → U^{⊗dst} ⊗ Δ_dst`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOperator {
    d: usize,
    src: usize,
    dst: usize,
    terms: BTreeMap<BarDiagram, PolyMatrix>,
}

impl TensorOperator {
    pub fn zero(d: usize, src: usize, dst: usize) -> Self {
        TensorOperator { d, src, dst, terms: BTreeMap::new() }
    }

    pub fn identity(d: usize, k: usize) -> Self {
        let mut op = TensorOperator::zero(d, k, k);
        op.add_term(&RationalMatrix::identity(u_power(d, k)), BarDiagram::identity(k), &NuPolynomial::one())
            .expect("shapes match");
        op
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn terms(&self) -> &BTreeMap<BarDiagram, PolyMatrix> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · umap ⊗ diagram`.
    pub fn add_term(&mut self, umap: &RationalMatrix, diagram: BarDiagram, coeff: &NuPolynomial) -> Result<(), TensorError> {
        self.add_poly_term(&PolyMatrix::from_rational(umap), diagram, coeff)
    }

    fn add_poly_term(&mut self, umap: &PolyMatrix, diagram: BarDiagram, coeff: &NuPolynomial) -> Result<(), TensorError> {
        if diagram.top_arity() != self.src || diagram.bottom_arity() != self.dst {
            return Err(TensorError::Grade(format!(
                "diagram {} -> {} in an operator {} -> {}",
                diagram.top_arity(),
                diagram.bottom_arity(),
                self.src,
                self.dst
            )));
        }
        if umap.rows() != u_power(self.d, self.dst) || umap.cols() != u_power(self.d, self.src) {
            return Err(TensorError::Dimension(format!("{}x{} matrix", umap.rows(), umap.cols())));
        }
        if coeff.is_zero() || umap.is_zero() {
            return Ok(());
        }
        let rows = umap.rows();
        let cols = umap.cols();
        let slot = self.terms.entry(diagram.clone()).or_insert_with(|| PolyMatrix::zero(rows, cols));
        slot.add_scaled(umap, coeff);
        if slot.is_zero() {
            self.terms.remove(&diagram);
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), TensorError> {
        if (self.d, self.src, self.dst) != (other.d, other.src, other.dst) {
            return Err(TensorError::Grade(format!(
                "({}, {} -> {}) vs ({}, {} -> {})",
                self.d, self.src, self.dst, other.d, other.src, other.dst
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, TensorError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (d, m) in &other.terms {
            out.add_poly_term(m, d.clone(), &NuPolynomial::one())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TensorError> {
        self.add(&other.scale(&NuPolynomial::from_int(-1)))
    }

    pub fn scale(&self, s: &NuPolynomial) -> Self {
        let mut out = TensorOperator::zero(self.d, self.src, self.dst);
        for (d, m) in &self.terms {
            out.add_poly_term(m, d.clone(), s).expect("same shape");
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, TensorError> {
        if self.d != other.d || self.src != other.dst {
            return Err(TensorError::Grade(format!(
                "cannot apply {} -> {} after {} -> {}",
                self.src, self.dst, other.src, other.dst
            )));
        }
        let mut out = TensorOperator::zero(self.d, other.src, self.dst);
        for (da, ma) in &self.terms {
            for (db, mb) in &other.terms {
                let m = ma.mul(mb);
                if m.is_zero() {
                    continue;
                }
                for (tau, c) in compose_bar(db, da)? {
                    out.add_poly_term(&m, tau, &c)?;
                }
            }
        }
        Ok(out)
    }

    /// `tr` of the operator specialized at `v = n`, by enumerating
    /// `U^{⊗k} ⊗ C Inj(k, n)`.
    pub fn trace_at(&self, n: usize) -> Result<Rational, TensorError> {
        if self.src != self.dst {
            return Err(TensorError::Grade("trace of a non-endomorphism".into()));
        }
        let basis = InjectionBasis::new(self.src, n)?;
        let mut total = Rational::zero();
        for (d, m) in &self.terms {
            let fixed = basis.elements().iter().filter(|f| diagram_contains(d, f, f)).count();
            total += m.trace().eval_int(n as i64) * int(fixed as i64);
        }
        Ok(total)
    }

    /// The categorical trace. An injection is fixed by a bar diagram only
    /// when the diagram is the identity, so only that term contributes.
    pub fn categorical_trace(&self) -> Result<NuPolynomial, TensorError> {
        if self.src != self.dst {
            return Err(TensorError::Grade("trace of a non-endomorphism".into()));
        }
        Ok(match self.terms.get(&BarDiagram::identity(self.src)) {
            Some(m) => &m.trace() * &falling_factorial(self.src),
            None => NuPolynomial::zero(),
        })
    }

    /// Applies the operator specialized at `v = n` to a vector of
    /// `U^{⊗src} ⊗ C Inj(src, n)`.
    pub fn apply_at(&self, n: usize, v: &InjVector) -> InjVector {
        let mut out = InjVector::new();
        for (d, m) in &self.terms {
            let mut by_col: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
            for (&(r, c), p) in m.entries() {
                let x = p.eval_int(n as i64);
                if !x.is_zero() {
                    by_col.entry(c).or_default().push((r, x));
                }
            }
            for ((u, f), coeff) in v {
                let Some(col) = by_col.get(u) else { continue };
                for_each_image(d, f, n, &mut |g| {
                    for (r, x) in col {
                        add_to(&mut out, (*r, g.to_vec()), &(coeff * x));
                    }
                });
            }
        }
        out
    }

    /// The first term, for failure reports.
    pub fn first_term(&self) -> Option<String> {
        self.terms.iter().next().map(|(d, m)| {
            let ((r, c), p) = m.entries().iter().next().expect("nonzero term");
            format!("{d} with U-entry ({r},{c}) = {p}")
        })
    }
}

impl fmt::Display for TensorOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "operator grade {} -> {} ({} diagram terms)", self.src, self.dst, self.terms.len())
    }
}

/// A vector in `U^{⊗k} ⊗ C Inj(k, n)`, keyed by (U-index, injection).
pub type InjVector = BTreeMap<(usize, Vec<usize>), Rational>;

/// A vector in `⊕_k U^{⊗k} ⊗ C Inj(k, n)`, keyed by grade.
pub type GradedVector = BTreeMap<usize, InjVector>;

fn add_to<K: Ord>(v: &mut BTreeMap<K, Rational>, key: K, x: &Rational) {
    if x.is_zero() {
        return;
    }
    match v.entry(key) {
        Entry::Vacant(e) => {
            e.insert(x.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += x;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn add_graded(v: &mut GradedVector, grade: usize, w: &InjVector, s: &Rational) {
    let slot = v.entry(grade).or_default();
    for (key, x) in w {
        add_to(slot, key.clone(), &(x * s));
    }
    if slot.is_empty() {
        v.remove(&grade);
    }
}

/// `u^{(l)}: U^{⊗k} → U^{⊗k+1}`, inserting `u` as factor `l` (1-based).
pub fn insert_op(u: &[Rational], l: usize, k: usize) -> RationalMatrix {
    let d = u.len();
    let mut m = RationalMatrix::zero(u_power(d, k + 1), u_power(d, k));
    for c in 0..u_power(d, k) {
        let dg = digits(c, d, k);
        for (x, ux) in u.iter().enumerate() {
            let mut out = dg.clone();
            out.insert(l - 1, x);
            m.add_entry(index_of(&out, d), c, ux);
        }
    }
    m
}

/// `f^{(l)}: U^{⊗k} → U^{⊗k-1}`, evaluating `f` on factor `l`.
pub fn contract_op(f: &[Rational], l: usize, k: usize) -> RationalMatrix {
    let d = f.len();
    let mut m = RationalMatrix::zero(u_power(d, k - 1), u_power(d, k));
    for c in 0..u_power(d, k) {
        let mut dg = digits(c, d, k);
        let x = dg.remove(l - 1);
        m.add_entry(index_of(&dg, d), c, &f[x]);
    }
    m
}

/// `A^{(i)}` on `U^{⊗k}`.
pub fn factor_op(a: &[Vec<Rational>], i: usize, k: usize) -> RationalMatrix {
    let d = a.len();
    let mut m = RationalMatrix::zero(u_power(d, k), u_power(d, k));
    for c in 0..u_power(d, k) {
        let dg = digits(c, d, k);
        for (r, row) in a.iter().enumerate() {
            let mut out = dg.clone();
            out[i - 1] = r;
            m.add_entry(index_of(&out, d), c, &row[dg[i - 1]]);
        }
    }
    m
}

/// `σ` on `U^{⊗k}`, moving factor `i` to position `σ(i)` (0-based).
pub fn permute_op(sigma: &[usize], d: usize) -> RationalMatrix {
    let k = sigma.len();
    let mut m = RationalMatrix::zero(u_power(d, k), u_power(d, k));
    let one = Rational::one();
    for c in 0..u_power(d, k) {
        let dg = digits(c, d, k);
        let mut out = vec![0; k];
        for i in 0..k {
            out[sigma[i]] = dg[i];
        }
        m.add_entry(index_of(&out, d), c, &one);
    }
    m
}

/// `T_{f,u}: v ↦ f(v) u`.
pub fn rank_one(f: &[Rational], u: &[Rational]) -> Vec<Vec<Rational>> {
    u.iter().map(|ur| f.iter().map(|fc| ur * fc).collect()).collect()
}

pub fn basis_vector(d: usize, i: usize) -> Vec<Rational> {
    (0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()
}

pub fn identity_matrix(d: usize) -> Vec<Vec<Rational>> {
    (0..d).map(|i| basis_vector(d, i)).collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
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

/// `F_u = 1/(k+1) Σ_l u^{(l)} ⊗ res*_l` on grade `k`.
pub fn f_operator(u: &[Rational], k: usize) -> Result<TensorOperator, TensorError> {
    let d = u.len();
    let mut op = TensorOperator::zero(d, k, k + 1);
    let c = NuPolynomial::constant(Rational::new(1.into(), ((k + 1) as i64).into()));
    for l in 1..=k + 1 {
        op.add_term(&insert_op(u, l, k), res_star(k, l)?, &c)?;
    }
    Ok(op)
}

/// `E_f = Σ_l f^{(l)} ⊗ res_l` on grade `k`; zero on grade 0.
pub fn e_operator(f: &[Rational], k: usize) -> Result<TensorOperator, TensorError> {
    if k == 0 {
        return Err(TensorError::Grade("E_f has no target below grade 0".into()));
    }
    let d = f.len();
    let mut op = TensorOperator::zero(d, k, k - 1);
    for l in 1..=k {
        op.add_term(&contract_op(f, l, k), res(k - 1, l)?, &NuPolynomial::one())?;
    }
    Ok(op)
}

/// `Σ_i A^{(i)} ⊗ id` on grade `k`.
pub fn gl_operator(a: &[Vec<Rational>], k: usize) -> Result<TensorOperator, TensorError> {
    let d = a.len();
    if a.iter().any(|row| row.len() != d) {
        return Err(TensorError::Dimension("A must be square".into()));
    }
    let mut op = TensorOperator::zero(d, k, k);
    for i in 1..=k {
        op.add_term(&factor_op(a, i, k), BarDiagram::identity(k), &NuPolynomial::one())?;
    }
    Ok(op)
}

/// The projector `1/k! Σ_σ σ ⊗ σ` onto `S_k`-invariants.
pub fn sym_operator(d: usize, k: usize) -> Result<TensorOperator, TensorError> {
    let perms = permutations(k);
    let c = NuPolynomial::constant(Rational::new(1.into(), (perms.len() as i64).into()));
    let mut op = TensorOperator::zero(d, k, k);
    for s in &perms {
        op.add_term(&permute_op(s, d), perm(s)?, &c)?;
    }
    Ok(op)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    F(Vec<Rational>),
    E(Vec<Rational>),
    GL(Vec<Vec<Rational>>),
    Sym(usize),
}

pub fn build_generator(g: &Generator, k: usize) -> Result<TensorOperator, TensorError> {
    match g {
        Generator::F(u) => f_operator(u, k),
        Generator::E(f) => e_operator(f, k),
        Generator::GL(a) => gl_operator(a, k),
        Generator::Sym(d) => sym_operator(*d, k),
    }
}

/// The action of `X ∈ gl(V)` on grade `k`, split by target grade. `X` is
/// an `(d+1) × (d+1)` matrix in the basis `(1, e_1, ..., e_d)`.
#[derive(Clone, Debug)]
pub struct GradedAction {
    pub down: Option<TensorOperator>,
    pub same: TensorOperator,
    pub up: TensorOperator,
}

pub fn glv_action(x: &[Vec<Rational>], k: usize) -> Result<GradedAction, TensorError> {
    let n = x.len();
    if n < 2 || x.iter().any(|r| r.len() != n) {
        return Err(TensorError::Dimension("X must be square of size at least 2".into()));
    }
    let d = n - 1;
    let x00 = x[0][0].clone();
    let column: Vec<Rational> = (1..n).map(|r| x[r][0].clone()).collect();
    let row: Vec<Rational> = (1..n).map(|c| x[0][c].clone()).collect();
    let a: Vec<Vec<Rational>> = (1..n)
        .map(|r| (1..n).map(|c| if r == c { &x[r][c] - &x00 } else { x[r][c].clone() }).collect())
        .collect();
    let same = gl_operator(&a, k)?.add(&TensorOperator::identity(d, k).scale(&(&NuPolynomial::nu() * &NuPolynomial::constant(x00))))?;
    Ok(GradedAction {
        down: if k == 0 { None } else { Some(e_operator(&row, k)?) },
        same,
        up: f_operator(&column, k)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub ok: bool,
    /// The first offending term when the check fails.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<IdentityCheck>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    fn push(&mut self, name: impl Into<String>, diff: &TensorOperator) {
        self.checks.push(IdentityCheck { name: name.into(), ok: diff.is_zero(), detail: diff.first_term() });
    }

    /// Collapses checks sharing a name prefix before `[` into one line each.
    pub fn summary(&self) -> Vec<IdentityCheck> {
        let mut out: Vec<IdentityCheck> = Vec::new();
        for c in &self.checks {
            let key = c.name.split('[').next().unwrap_or(&c.name).trim().to_string();
            match out.iter_mut().find(|x| x.name == key) {
                Some(x) => {
                    if x.ok && !c.ok {
                        x.ok = false;
                        x.detail = Some(format!("{}: {}", c.name, c.detail.clone().unwrap_or_default()));
                    }
                }
                None => out.push(IdentityCheck {
                    name: key,
                    ok: c.ok,
                    detail: (!c.ok).then(|| format!("{}: {}", c.name, c.detail.clone().unwrap_or_default())),
                }),
            }
        }
        out
    }
}

pub const MAX_COMMUTATOR_K: usize = 3;
pub const MAX_COMMUTATOR_D: usize = 2;

/// The three commutator families on grade `k`, each composed on the right
/// with `Sym_k`, for all basis vectors and covectors of `U`.
pub fn verify_commutators(k: usize, d: usize) -> Result<Report, TensorError> {
    if k > MAX_COMMUTATOR_K || d > MAX_COMMUTATOR_D {
        return Err(TensorError::Resource(format!("k = {k}, d = {d}")));
    }
    verify_commutators_unchecked(k, d)
}

pub fn verify_commutators_unchecked(k: usize, d: usize) -> Result<Report, TensorError> {
    if d == 0 {
        return Err(TensorError::Dimension("d must be at least 1".into()));
    }
    let sym = sym_operator(d, k)?;
    let basis: Vec<Vec<Rational>> = (0..d).map(|i| basis_vector(d, i)).collect();
    let mut report = Report { checks: Vec::new() };
    for (i, u1) in basis.iter().enumerate() {
        for (j, u2) in basis.iter().enumerate() {
            let a = f_operator(u2, k + 1)?.compose(&f_operator(u1, k)?)?;
            let b = f_operator(u1, k + 1)?.compose(&f_operator(u2, k)?)?;
            report.push(format!("(a) [F,F] = 0 [u{} u{}]", i + 1, j + 1), &a.sub(&b)?.compose(&sym)?);
        }
    }
    if k >= 2 {
        for (i, f1) in basis.iter().enumerate() {
            for (j, f2) in basis.iter().enumerate() {
                let a = e_operator(f2, k - 1)?.compose(&e_operator(f1, k)?)?;
                let b = e_operator(f1, k - 1)?.compose(&e_operator(f2, k)?)?;
                report.push(format!("(b) [E,E] = 0 [f{} f{}]", i + 1, j + 1), &a.sub(&b)?.compose(&sym)?);
            }
        }
    } else {
        report.checks.push(IdentityCheck { name: "(b) [E,E] = 0 [vacuous]".into(), ok: true, detail: None });
    }
    for (i, f) in basis.iter().enumerate() {
        for (j, u) in basis.iter().enumerate() {
            let ef = e_operator(f, k + 1)?.compose(&f_operator(u, k)?)?;
            let fe = if k == 0 {
                TensorOperator::zero(d, 0, 0)
            } else {
                f_operator(u, k - 1)?.compose(&e_operator(f, k)?)?
            };
            let fu: Rational = f.iter().zip(u).map(|(a, b)| a * b).sum();
            let rhs = TensorOperator::identity(d, k)
                .scale(&NuPolynomial::nu_minus(k as i64).scale(&fu))
                .sub(&gl_operator(&rank_one(f, u), k)?)?;
            let diff = ef.sub(&fe)?.sub(&rhs)?.compose(&sym)?;
            report.push(format!("(c) [E,F] = (v-k)f(u) - T [f{} u{}]", i + 1, j + 1), &diff);
        }
    }
    Ok(report)
}

/// `Sym_{k+1} ∘ F_u ∘ Sym_k = F_u ∘ Sym_k`.
pub fn f_preserves_invariants(u: &[Rational], k: usize) -> Result<bool, TensorError> {
    let d = u.len();
    let fs = f_operator(u, k)?.compose(&sym_operator(d, k)?)?;
    Ok(sym_operator(d, k + 1)?.compose(&fs)? == fs)
}

/// `ρ_l(σ) ∈ S_k` with `σ ∘ res*_l = res*_{σ(l)} ∘ ρ_l(σ)`: delete vertex
/// `l` from the source and `σ(l)` from the target (0-based images, `l`
/// 1-based).
pub fn rho_l(sigma: &[usize], l: usize) -> Vec<usize> {
    let k = sigma.len() - 1;
    let target = sigma[l - 1];
    (0..k)
        .map(|i| {
            let src = if i < l - 1 { i } else { i + 1 };
            let img = sigma[src];
            if img > target {
                img - 1
            } else {
                img
            }
        })
        .collect()
}

/// Basis tensor of `V^{⊗n}`: entry 0 is the distinguished vector, `c ≥ 1`
/// is `e_c ∈ U`.
pub type VTensor = Vec<usize>;

/// `Φ(v_1 ⊗ ... ⊗ v_n) = Sym_k(v_J ⊗ f_J)` where `J` lists the positions
/// holding vectors of `U`.
pub fn phi_basis(v: &[usize], d: usize) -> Result<GradedVector, TensorError> {
    let n = v.len();
    let positions: Vec<usize> = (0..n).filter(|&i| v[i] != 0).collect();
    let k = positions.len();
    let u_digits: Vec<usize> = positions.iter().map(|&i| v[i] - 1).collect();
    let mut start = InjVector::new();
    start.insert((index_of(&u_digits, d), positions), Rational::one());
    let sym = sym_operator(d, k)?;
    let mut out = GradedVector::new();
    add_graded(&mut out, k, &sym.apply_at(n, &start), &Rational::one());
    Ok(out)
}

fn phi_linear(v: &BTreeMap<VTensor, Rational>, d: usize) -> Result<GradedVector, TensorError> {
    let mut out = GradedVector::new();
    for (t, c) in v {
        for (g, w) in phi_basis(t, d)? {
            add_graded(&mut out, g, &w, c);
        }
    }
    Ok(out)
}

/// `X ∈ gl(V)` acting on a basis tensor of `V^{⊗n}`.
fn act_on_vtensor(x: &[Vec<Rational>], v: &[usize]) -> BTreeMap<VTensor, Rational> {
    let mut out = BTreeMap::new();
    for i in 0..v.len() {
        for (r, row) in x.iter().enumerate() {
            let c = &row[v[i]];
            if c.is_zero() {
                continue;
            }
            let mut w = v.to_vec();
            w[i] = r;
            add_to(&mut out, w, c);
        }
    }
    out
}

/// `X ∈ gl(V)` acting on a graded vector, with `v` specialized to `n`.
fn act_on_graded(x: &[Vec<Rational>], v: &GradedVector, n: usize, k_max: usize) -> Result<GradedVector, TensorError> {
    let mut out = GradedVector::new();
    for (&k, w) in v {
        let act = glv_action(x, k)?;
        add_graded(&mut out, k, &act.same.apply_at(n, w), &Rational::one());
        if k < k_max {
            add_graded(&mut out, k + 1, &act.up.apply_at(n, w), &Rational::one());
        }
        if let Some(down) = &act.down {
            add_graded(&mut out, k - 1, &down.apply_at(n, w), &Rational::one());
        }
    }
    Ok(out)
}

fn truncate(mut v: GradedVector, k_max: usize) -> GradedVector {
    v.retain(|&k, _| k <= k_max);
    v
}

fn all_vtensors(n: usize, dim_v: usize) -> Vec<VTensor> {
    (0..dim_v.pow(n as u32)).map(|i| digits(i, dim_v, n)).collect()
}

/// Elementary matrix `E_{rc}` of `gl(V)`.
pub fn elementary(dim_v: usize, r: usize, c: usize) -> Vec<Vec<Rational>> {
    (0..dim_v)
        .map(|i| (0..dim_v).map(|j| if (i, j) == (r, c) { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub const MAX_SPECIALIZE_N: usize = 6;

/// Checks that `Φ: V^{⊗n} → ⊕_{k ≤ k_max} (U^{⊗k} ⊗ C Inj(k, n))^{S_k}`
/// intertwines every elementary matrix of `gl(V)` and every adjacent
/// transposition of `S_n`, on basis tensors with at most `k_max` factors
/// from `U`, and that `Φ(1 ⊗ ... ⊗ 1) = 1`.
pub fn specialize_and_compare(k_max: usize, d: usize, n: usize) -> Result<Report, TensorError> {
    if n > MAX_SPECIALIZE_N || d > MAX_COMMUTATOR_D {
        return Err(TensorError::Resource(format!("n = {n}, d = {d}")));
    }
    specialize_and_compare_unchecked(k_max, d, n)
}

pub fn specialize_and_compare_unchecked(k_max: usize, d: usize, n: usize) -> Result<Report, TensorError> {
    if d == 0 {
        return Err(TensorError::Dimension("d must be at least 1".into()));
    }
    let dim_v = d + 1;
    let mut report = Report { checks: Vec::new() };
    let tensors: Vec<VTensor> = all_vtensors(n, dim_v)
        .into_iter()
        .filter(|t| t.iter().filter(|&&x| x != 0).count() <= k_max)
        .collect();
    let unit = phi_basis(&vec![0; n], d)?;
    let expect: GradedVector = BTreeMap::from([(0, BTreeMap::from([((0, vec![]), Rational::one())]))]);
    report.checks.push(IdentityCheck {
        name: "Phi(1...1) = 1".into(),
        ok: unit == expect,
        detail: None,
    });
    let phis: Vec<GradedVector> = tensors.iter().map(|t| phi_basis(t, d)).collect::<Result<_, _>>()?;
    for r in 0..dim_v {
        for c in 0..dim_v {
            let x = elementary(dim_v, r, c);
            let kind = match (r, c) {
                (0, 0) => "id-part".to_string(),
                (_, 0) => format!("F_u{r}"),
                (0, _) => format!("E_f{c}"),
                _ => format!("gl(U) E{r}{c}"),
            };
            let mut failure = None;
            for (t, ph) in tensors.iter().zip(&phis) {
                let lhs = truncate(phi_linear(&act_on_vtensor(&x, t), d)?, k_max);
                let rhs = act_on_graded(&x, ph, n, k_max)?;
                if lhs != rhs {
                    failure = Some(format!("on basis tensor {t:?}"));
                    break;
                }
            }
            report.checks.push(IdentityCheck { name: format!("intertwines {kind}"), ok: failure.is_none(), detail: failure });
        }
    }
    for s in 0..n.saturating_sub(1) {
        let mut failure = None;
        for (t, ph) in tensors.iter().zip(&phis) {
            let mut swapped = t.clone();
            swapped.swap(s, s + 1);
            let lhs = phi_basis(&swapped, d)?;
            let mut rhs = GradedVector::new();
            for (&k, w) in ph {
                let mut moved = InjVector::new();
                for ((u, f), x) in w {
                    let g: Vec<usize> = f
                        .iter()
                        .map(|&val| if val == s { s + 1 } else if val == s + 1 { s } else { val })
                        .collect();
                    add_to(&mut moved, (*u, g), x);
                }
                add_graded(&mut rhs, k, &moved, &Rational::one());
            }
            if lhs != rhs {
                failure = Some(format!("on basis tensor {t:?}"));
                break;
            }
        }
        report.checks.push(IdentityCheck {
            name: format!("intertwines s{}", s + 1),
            ok: failure.is_none(),
            detail: failure,
        });
    }
    Ok(report)
}

/// Splits a unital map `φ: V → V` (matrix in the basis `(1, e_1, ..)`)
/// into `φ_{U,U}` and the covector `φ_{U,1}`.
pub fn unital_parts(phi: &[Vec<Rational>]) -> Result<(Vec<Vec<Rational>>, Vec<Rational>), TensorError> {
    let n = phi.len();
    if n < 2 || phi.iter().any(|r| r.len() != n) {
        return Err(TensorError::Dimension("phi must be square of size at least 2".into()));
    }
    if !phi[0][0].is_one() || (1..n).any(|r| !phi[r][0].is_zero()) {
        return Err(TensorError::NotUnital);
    }
    let uu = (1..n).map(|r| (1..n).map(|c| phi[r][c].clone()).collect()).collect();
    let f = (1..n).map(|c| phi[0][c].clone()).collect();
    Ok((uu, f))
}

fn strictly_increasing(l: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, left: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..=k {
            cur.push(v);
            rec(v + 1, left - 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, l, k, &mut Vec::new(), &mut out);
    out
}

/// `Φ^{l,k} = Σ_ι φ_{U,U} on Im(ι) ⊗ φ_{U,1} on the rest ⊗ res_ι`.
pub fn unital_morphism_component(phi: &[Vec<Rational>], l: usize, k: usize) -> Result<TensorOperator, TensorError> {
    let (uu, f) = unital_parts(phi)?;
    let d = uu.len();
    if l > k {
        return Ok(TensorOperator::zero(d, k, l));
    }
    let mut op = TensorOperator::zero(d, k, l);
    for iota in strictly_increasing(l, k) {
        let mut m = RationalMatrix::zero(u_power(d, l), u_power(d, k));
        for c in 0..u_power(d, k) {
            let dg = digits(c, d, k);
            let mut weight = Rational::one();
            for (i, &x) in dg.iter().enumerate() {
                if !iota.contains(&(i + 1)) {
                    weight *= &f[x];
                }
            }
            if weight.is_zero() {
                continue;
            }
            // Distribute φ_{U,U} over the kept factors.
            let mut partial: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), weight)];
            for &pos in &iota {
                let x = dg[pos - 1];
                let mut next = Vec::new();
                for (dig, w) in &partial {
                    for (r, row) in uu.iter().enumerate() {
                        if row[x].is_zero() {
                            continue;
                        }
                        let mut nd = dig.clone();
                        nd.push(r);
                        next.push((nd, w * &row[x]));
                    }
                }
                partial = next;
            }
            for (dig, w) in partial {
                m.add_entry(index_of(&dig, d), c, &w);
            }
        }
        op.add_term(&m, res_iota(k, &iota)?, &NuPolynomial::one())?;
    }
    Ok(op)
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..n).map(|c| row.iter().zip(b).map(|(x, brow)| x * &brow[c]).sum()).collect())
        .collect()
}

/// Two complements of the line through `1`: `U = span(e_i)` and
/// `W = span(e_i + c_i·1)`. The identity of `V`, written from the
/// `U`-splitting to the `W`-splitting, has `φ_{U,W} = id` and
/// `φ_{U,1} = -c`. Checks `Φ ∘ X_U = X_W ∘ Φ` on grades `≤ max_grade`
/// (after `Sym`) for every elementary `X ∈ gl(V)`, where `X_W` is `X`
/// rewritten in the `W`-adapted basis.
pub fn splitting_check(c: &[Rational], max_grade: usize) -> Result<Report, TensorError> {
    let d = c.len();
    let dim_v = d + 1;
    let mut to_w = identity_matrix(dim_v);
    let mut from_w = identity_matrix(dim_v);
    for i in 0..d {
        to_w[0][i + 1] = -c[i].clone();
        from_w[0][i + 1] = c[i].clone();
    }
    let mut report = Report { checks: Vec::new() };
    let phi = |l: usize, k: usize| unital_morphism_component(&to_w, l, k);
    for r in 0..dim_v {
        for col in 0..dim_v {
            let x_u = elementary(dim_v, r, col);
            let x_w = mat_mul(&mat_mul(&to_w, &x_u), &from_w);
            for k in 0..=max_grade {
                let sym = sym_operator(d, k)?;
                let act_u = glv_action(&x_u, k)?;
                let mut u_side: Vec<(usize, TensorOperator)> = vec![(k, act_u.same), (k + 1, act_u.up)];
                if let Some(down) = act_u.down {
                    u_side.push((k - 1, down));
                }
                for l in 0..=k + 1 {
                    // Φ^{l,j} ∘ X_U(grade k → j)
                    let mut lhs = TensorOperator::zero(d, k, l);
                    for (j, op) in &u_side {
                        lhs = lhs.add(&phi(l, *j)?.compose(op)?)?;
                    }
                    // X_W(grade j → l) ∘ Φ^{j,k}
                    let mut rhs = TensorOperator::zero(d, k, l);
                    for j in l.saturating_sub(1)..=(l + 1).min(k) {
                        let act_w = glv_action(&x_w, j)?;
                        let part = if j == l {
                            Some(act_w.same)
                        } else if j + 1 == l {
                            Some(act_w.up)
                        } else {
                            act_w.down
                        };
                        if let Some(op) = part {
                            rhs = rhs.add(&op.compose(&phi(j, k)?)?)?;
                        }
                    }
                    let diff = lhs.sub(&rhs)?.compose(&sym)?;
                    report.push(format!("splitting E{r}{col} [grade {k} -> {l}]"), &diff);
                }
            }
        }
    }
    Ok(report)
}

/// `F_u ∘ φ ≠ 0` for `φ` landing in grade `k`.
pub fn almost_injectivity_check(phi: &TensorOperator, u: &[Rational]) -> Result<bool, TensorError> {
    Ok(!f_operator(u, phi.dst())?.compose(phi)?.is_zero())
}

/// `F_u^m ∘ φ ≠ 0`.
pub fn iterated_almost_injectivity(phi: &TensorOperator, u: &[Rational], m: usize) -> Result<bool, TensorError> {
    let mut cur = phi.clone();
    for _ in 0..m {
        cur = f_operator(u, cur.dst())?.compose(&cur)?;
        if cur.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A random nonzero operator from grade `l` to grade `k` with one to three
/// diagram terms and small integer matrices.
pub fn random_operator<R: Rng>(rng: &mut R, d: usize, l: usize, k: usize) -> Result<TensorOperator, TensorError> {
    let diagrams = crate::diagram::enumerate_bar(l, k)?;
    loop {
        let mut op = TensorOperator::zero(d, l, k);
        for _ in 0..rng.gen_range(1..=3) {
            let dgm = diagrams[rng.gen_range(0..diagrams.len())].clone();
            let mut m = RationalMatrix::zero(u_power(d, k), u_power(d, l));
            for _ in 0..rng.gen_range(1..=3) {
                let r = rng.gen_range(0..m.rows());
                let c = rng.gen_range(0..m.cols());
                m.add_entry(r, c, &int(rng.gen_range(-3..=3)));
            }
            op.add_term(&m, dgm, &NuPolynomial::one())?;
        }
        if !op.is_zero() {
            return Ok(op);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteSummary {
    pub cases: usize,
    pub failures: usize,
}

/// Random `φ` into grades `≤ max_grade` and random nonzero `u`.
pub fn almost_injectivity_suite<R: Rng>(rng: &mut R, cases: usize, max_grade: usize, d: usize) -> Result<SuiteSummary, TensorError> {
    let mut failures = 0;
    for _ in 0..cases {
        let l = rng.gen_range(0..=max_grade);
        let k = rng.gen_range(0..=max_grade);
        let phi = random_operator(rng, d, l, k)?;
        let u = loop {
            let u: Vec<Rational> = (0..d).map(|_| int(rng.gen_range(-2..=2))).collect();
            if u.iter().any(|x| !x.is_zero()) {
                break u;
            }
        };
        if !almost_injectivity_check(&phi, &u)? {
            failures += 1;
        }
    }
    Ok(SuiteSummary { cases, failures })
}

pub const MAX_GRADED_K: usize = 8;

/// Categorical dimension of `(U^{⊗k} ⊗ Δ_k)^{S_k}`, the trace of `Sym_k`.
pub fn graded_dimension(k: usize, d: usize) -> Result<NuPolynomial, TensorError> {
    if k > MAX_GRADED_K {
        return Err(TensorError::Resource(format!("k = {k}")));
    }
    sym_operator(d, k)?.categorical_trace()
}
