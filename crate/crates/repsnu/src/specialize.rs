//! Specialization at an integer `n`: `Delta_k` becomes the span of injections
//! `{1..k} -> {1..n}` and a bar diagram becomes a 0/1 matrix. Symbolic
//! compositions are certified by comparing against products of these
//! matrices at enough integer points.
//!
//! Injection values are zero-based here (`0..n`).

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{int, interpolate, NuPolynomial, Rational};
use crate::diagram::{compose_bar, BarDiagram, DeltaMorphism, DiagramError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecializeError {
    #[error("n = {n} is too small for arity {k}")]
    TooSmall { n: usize, k: usize },
    #[error("morphism is not an endomorphism ({0} -> {1})")]
    NotEndo(usize, usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("dimension mismatch: {0}")]
    Shape(String),
}

/// All injective tuples of length `k` with values in `0..n`, in
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct InjectionBasis {
    k: usize,
    n: usize,
    elements: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl InjectionBasis {
    pub fn new(k: usize, n: usize) -> Result<Self, SpecializeError> {
        if k > n {
            return Err(SpecializeError::TooSmall { n, k });
        }
        let mut elements = Vec::new();
        let mut cur = Vec::with_capacity(k);
        let mut used = vec![false; n];
        fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(k, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(k, &mut cur, &mut used, &mut elements);
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Ok(InjectionBasis { k, n, elements, index })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn index_of(&self, f: &[usize]) -> Option<usize> {
        self.index.get(f).copied()
    }
}

/// Sparse matrix with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: &Rational) {
        debug_assert!(r < self.rows && c < self.cols);
        if v.is_zero() {
            return;
        }
        let e = self.entries.entry((r, c)).or_insert_with(Rational::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SpecializeError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(SpecializeError::Shape(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_entry(r, c, v);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.rows, self.cols);
        if s.is_zero() {
            return out;
        }
        out.entries = self.entries.iter().map(|(k, v)| (*k, v * s)).collect();
        out
    }

    /// `self * other`
    pub fn mul(&self, other: &Self) -> Result<Self, SpecializeError> {
        if self.cols != other.rows {
            return Err(SpecializeError::Shape(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut by_row: HashMap<usize, Vec<(usize, &Rational)>> = HashMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for (&(r, m), a) in &self.entries {
            if let Some(row) = by_row.get(&m) {
                for &(c, b) in row {
                    out.add_entry(r, c, &(a * b));
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Rational {
        self.entries
            .iter()
            .filter(|((r, c), _)| r == c)
            .fold(Rational::zero(), |acc, (_, v)| acc + v)
    }

    pub fn transpose(&self) -> Self {
        RationalMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(r, c), v)| ((c, r), v.clone())).collect(),
        }
    }
}

/// Whether `g` occurs in the image of `f` under the diagram: every edge
/// `(i, j)` forces `g(j) = f(i)`, and every solitary bottom vertex `j` must
/// take a value outside the image of `f`.
pub fn diagram_contains(pi: &BarDiagram, f: &[usize], g: &[usize]) -> bool {
    let bottom_map = pi.bottom_map();
    bottom_map.iter().enumerate().all(|(j, src)| match src {
        Some(i) => g[j] == f[*i],
        None => !f.contains(&g[j]),
    })
}

/// Calls `emit` on every `g` in the image of `f`.
pub fn for_each_image(pi: &BarDiagram, f: &[usize], n: usize, emit: &mut dyn FnMut(&[usize])) {
    let bottom_map = pi.bottom_map();
    let s = bottom_map.len();
    let mut g = vec![usize::MAX; s];
    let mut used = vec![false; n];
    for &v in f {
        used[v] = true;
    }
    for (j, src) in bottom_map.iter().enumerate() {
        if let Some(i) = src {
            g[j] = f[*i];
        }
    }
    let free: Vec<usize> = (0..s).filter(|&j| bottom_map[j].is_none()).collect();
    fn rec(idx: usize, free: &[usize], g: &mut Vec<usize>, used: &mut [bool], emit: &mut dyn FnMut(&[usize])) {
        if idx == free.len() {
            emit(g);
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                g[free[idx]] = v;
                rec(idx + 1, free, g, used, emit);
                used[v] = false;
            }
        }
    }
    rec(0, &free, &mut g, &mut used, emit);
}

pub fn images(pi: &BarDiagram, f: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_image(pi, f, n, &mut |g| out.push(g.to_vec()));
    out
}

/// The matrix of `pi` from `Inj(r, n)` to `Inj(s, n)`.
pub fn specialize_diagram(pi: &BarDiagram, n: usize) -> Result<RationalMatrix, SpecializeError> {
    let src = InjectionBasis::new(pi.top_arity(), n)?;
    let dst = InjectionBasis::new(pi.bottom_arity(), n)?;
    let mut m = RationalMatrix::zero(dst.len(), src.len());
    let one = Rational::one();
    for (c, f) in src.elements().iter().enumerate() {
        for_each_image(pi, f, n, &mut |g| {
            let r = dst.index_of(g).expect("image is an injection");
            m.add_entry(r, c, &one);
        });
    }
    Ok(m)
}

/// Evaluates every coefficient at `v = n` and sums the diagram matrices.
pub fn specialize_morphism(m: &DeltaMorphism, n: usize) -> Result<RationalMatrix, SpecializeError> {
    let src = InjectionBasis::new(m.src(), n)?;
    let dst = InjectionBasis::new(m.dst(), n)?;
    let mut out = RationalMatrix::zero(dst.len(), src.len());
    for (d, p) in m.terms() {
        let c = p.eval_int(n as i64);
        if c.is_zero() {
            continue;
        }
        out = out.add(&specialize_diagram(d, n)?.scale(&c))?;
    }
    Ok(out)
}

/// Mixed-radix index of a tuple with entries below `n`.
fn dense_index(g: &[usize], n: usize) -> usize {
    g.iter().fold(0, |acc, &v| acc * n + v)
}

/// First sample point used by the oracle for a triple of arities.
pub fn oracle_start(r: usize, s: usize, t: usize) -> usize {
    2 * (r + s + t) + 1
}

/// Compares `compose_delta(pi, rho)` with the product of the specialized
/// matrices at `n(rho, pi) + 1` consecutive integers from
/// [`oracle_start`].
///
/// Both sides commute with relabelling the values by `S_n`, which acts
/// transitively on `Inj(r, n)`, so comparing the column of the injection
/// `(0, 1, ..., r-1)` compares the whole matrices.
pub fn oracle_check_composition(pi: &BarDiagram, rho: &BarDiagram) -> Result<bool, SpecializeError> {
    let (r, s, t) = (pi.top_arity(), pi.bottom_arity(), rho.bottom_arity());
    if s != rho.top_arity() {
        return Err(DiagramError::ArityMismatch(format!("{r} -> {s} then {} -> {t}", rho.top_arity())).into());
    }
    let terms = compose_bar(pi, rho)?;
    let (_, n_mid) = crate::diagram::glue(pi, rho)?;
    let n0 = oracle_start(r, s, t);
    for n in n0..=n0 + n_mid {
        if !column_matches(pi, rho, &terms, n) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn column_matches(pi: &BarDiagram, rho: &BarDiagram, terms: &[(BarDiagram, NuPolynomial)], n: usize) -> bool {
    let r = pi.top_arity();
    let f0: Vec<usize> = (0..r).collect();
    let t = rho.bottom_arity();
    let size = n.pow(t as u32);
    let mut rhs = vec![0i64; size];
    for_each_image(pi, &f0, n, &mut |g| {
        for_each_image(rho, g, n, &mut |h| rhs[dense_index(h, n)] += 1);
    });
    let mut lhs: HashMap<usize, Rational> = HashMap::new();
    for (tau, p) in terms {
        let c = p.eval_int(n as i64);
        if c.is_zero() {
            continue;
        }
        for_each_image(tau, &f0, n, &mut |h| {
            *lhs.entry(dense_index(h, n)).or_insert_with(Rational::zero) += &c;
        });
    }
    let nonzero_rhs = rhs.iter().filter(|&&x| x != 0).count();
    let nonzero_lhs = lhs.values().filter(|v| !v.is_zero()).count();
    if nonzero_lhs != nonzero_rhs {
        return false;
    }
    lhs.iter().all(|(&idx, v)| *v == int(rhs[idx]))
}

/// Full-matrix version of the oracle at one value of `n`, for small `n`.
pub fn oracle_check_at(pi: &BarDiagram, rho: &BarDiagram, n: usize) -> Result<bool, SpecializeError> {
    let composite = DeltaMorphism::from_diagram(pi.clone()).compose_delta(&DeltaMorphism::from_diagram(rho.clone()))?;
    let lhs = specialize_morphism(&composite, n)?;
    let rhs = specialize_diagram(rho, n)?.mul(&specialize_diagram(pi, n)?)?;
    Ok(lhs == rhs)
}

/// Trace of the specialized endomorphism at `n`.
pub fn specialized_trace(e: &DeltaMorphism, n: usize) -> Result<Rational, SpecializeError> {
    if e.src() != e.dst() {
        return Err(SpecializeError::NotEndo(e.src(), e.dst()));
    }
    let basis = InjectionBasis::new(e.src(), n)?;
    let mut total = Rational::zero();
    for (d, p) in e.terms() {
        let fixed = basis.elements().iter().filter(|f| diagram_contains(d, f, f)).count();
        total += p.eval_int(n as i64) * int(fixed as i64);
    }
    Ok(total)
}

/// The categorical trace of `e`, recovered by interpolating the specialized
/// traces at `k + 2` integers starting from `2k + 1`.
pub fn categorical_dimension(e: &DeltaMorphism) -> Result<NuPolynomial, SpecializeError> {
    let k = e.src();
    let start = 2 * k + 1;
    let extra = e.max_degree().max(0) as usize;
    let points = (start..start + k + 2 + extra)
        .map(|n| Ok((int(n as i64), specialized_trace(e, n)?)))
        .collect::<Result<Vec<_>, SpecializeError>>()?;
    Ok(interpolate(&points).expect("distinct nodes"))
}
