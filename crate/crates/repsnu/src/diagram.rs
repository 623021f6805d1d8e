//! Partition diagrams and the two composition rules.
//!
//! Vertices of a diagram `r -> s` are numbered `0..r` for the top row and
//! `r..r+s` for the bottom row. In the text syntax they are written `1..r`
//! and `1'..s'`. Composition `compose(pi, rho)` means "`pi` first", i.e. the
//! bottom row of `pi` is glued to the top row of `rho`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{falling_from, NuPolynomial};

type EdgeSink<'a> = &'a mut dyn FnMut(&[(usize, usize)]);

/// Largest row length accepted by enumeration unless the caller opts out.
pub const MAX_ENUM_ARITY: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("diagram {0} has a block meeting a row twice")]
    NotBar(String),
    #[error("vertex {0} appears in more than one block")]
    Overlap(String),
    #[error("vertex {0} is not covered by any block")]
    NotCovering(String),
    #[error("empty block")]
    EmptyBlock,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("arity {0} exceeds the enumeration limit of {MAX_ENUM_ARITY}")]
    Resource(usize),
}

/// A set partition of `{T1..Tr, B1..Bs}` in canonical form: every block is
/// sorted and blocks are ordered by their least vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    top: usize,
    bottom: usize,
    blocks: Vec<Vec<usize>>,
}

impl Diagram {
    pub fn new(top: usize, bottom: usize, blocks: Vec<Vec<usize>>) -> Result<Self, DiagramError> {
        let n = top + bottom;
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(DiagramError::EmptyBlock);
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v >= n {
                    return Err(DiagramError::IndexOutOfRange(format!(
                        "vertex index {v} in a diagram [{top},{bottom}]"
                    )));
                }
                if seen[v] {
                    return Err(DiagramError::Overlap(vertex_name(top, v)));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(DiagramError::NotCovering(vertex_name(top, v)));
        }
        blocks.sort_unstable();
        Ok(Diagram { top, bottom, blocks })
    }

    /// Builds the diagram whose blocks are the classes of `labels`
    /// (one label per vertex).
    pub fn from_labels(top: usize, bottom: usize, labels: &[usize]) -> Self {
        debug_assert_eq!(labels.len(), top + bottom);
        let mut by_label: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &l) in labels.iter().enumerate() {
            by_label.entry(l).or_default().push(v);
        }
        let mut blocks: Vec<Vec<usize>> = by_label.into_values().collect();
        blocks.sort_unstable();
        Diagram { top, bottom, blocks }
    }

    /// Diagram with every block of size at most two, given by top-to-bottom
    /// edges `(i, j)` (zero-based in each row).
    pub fn from_edges(top: usize, bottom: usize, edges: &[(usize, usize)]) -> Result<Self, DiagramError> {
        let mut blocks = Vec::new();
        let mut used_top = vec![false; top];
        let mut used_bottom = vec![false; bottom];
        for &(i, j) in edges {
            if i >= top || j >= bottom {
                return Err(DiagramError::IndexOutOfRange(format!("edge ({},{}')", i + 1, j + 1)));
            }
            used_top[i] = true;
            used_bottom[j] = true;
            blocks.push(vec![i, top + j]);
        }
        blocks.extend((0..top).filter(|&i| !used_top[i]).map(|i| vec![i]));
        blocks.extend((0..bottom).filter(|&j| !used_bottom[j]).map(|j| vec![top + j]));
        Diagram::new(top, bottom, blocks)
    }

    pub fn identity(k: usize) -> Self {
        Diagram {
            top: k,
            bottom: k,
            blocks: (0..k).map(|i| vec![i, k + i]).collect(),
        }
    }

    pub fn top_arity(&self) -> usize {
        self.top
    }

    pub fn bottom_arity(&self) -> usize {
        self.bottom
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks, `l(pi)`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_top(&self, v: usize) -> bool {
        v < self.top
    }

    /// One label per vertex: the index of its block.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.top + self.bottom];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                out[v] = b;
            }
        }
        out
    }

    pub fn is_bar(&self) -> bool {
        self.blocks.iter().all(|b| {
            let tops = b.iter().filter(|&&v| v < self.top).count();
            tops <= 1 && b.len() - tops <= 1
        })
    }

    /// Whether the top vertex `i` (zero-based) forms a block on its own.
    pub fn top_is_solitary(&self, i: usize) -> bool {
        self.blocks.iter().any(|b| b.len() == 1 && b[0] == i)
    }

    pub fn bottom_is_solitary(&self, j: usize) -> bool {
        let v = self.top + j;
        self.blocks.iter().any(|b| b.len() == 1 && b[0] == v)
    }

    /// Top-to-bottom edges `(i, j)` of a diagram, zero-based per row. Only
    /// meaningful for bar diagrams.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.blocks
            .iter()
            .filter(|b| b.len() == 2 && b[0] < self.top && b[1] >= self.top)
            .map(|b| (b[0], b[1] - self.top))
            .collect()
    }

    /// Whether every block of `self` is a union of blocks of `finer`.
    pub fn is_coarsening_of(&self, finer: &Diagram) -> bool {
        if self.top != finer.top || self.bottom != finer.bottom {
            return false;
        }
        let labels = self.labels();
        finer
            .blocks
            .iter()
            .all(|b| b.iter().all(|&v| labels[v] == labels[b[0]]))
    }

    pub fn to_bar(self) -> Result<BarDiagram, DiagramError> {
        BarDiagram::try_from(self)
    }
}

fn vertex_name(top: usize, v: usize) -> String {
    if v < top {
        format!("{}", v + 1)
    } else {
        format!("{}'", v - top + 1)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.top, self.bottom)?;
        for b in &self.blocks {
            let names: Vec<String> = b.iter().map(|&v| vertex_name(self.top, v)).collect();
            write!(f, " {{{}}}", names.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(text: &str) -> Result<Self, DiagramError> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let perr = |pos: usize, msg: &str| DiagramError::Parse { pos, msg: msg.to_string() };
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let read_num = |pos: &mut usize| -> Result<usize, DiagramError> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            text[start..*pos]
                .parse::<usize>()
                .map_err(|_| perr(start, "expected a number"))
        };
        skip_ws(&mut pos);
        if bytes.get(pos) != Some(&b'[') {
            return Err(perr(pos, "expected '[' opening the arity header"));
        }
        pos += 1;
        skip_ws(&mut pos);
        let top = read_num(&mut pos)?;
        skip_ws(&mut pos);
        if bytes.get(pos) != Some(&b',') {
            return Err(perr(pos, "expected ',' in the arity header"));
        }
        pos += 1;
        skip_ws(&mut pos);
        let bottom = read_num(&mut pos)?;
        skip_ws(&mut pos);
        if bytes.get(pos) != Some(&b']') {
            return Err(perr(pos, "expected ']' closing the arity header"));
        }
        pos += 1;
        let mut blocks = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                break;
            }
            if bytes[pos] != b'{' {
                return Err(perr(pos, "expected '{' opening a block"));
            }
            pos += 1;
            let mut block = Vec::new();
            loop {
                skip_ws(&mut pos);
                let at = pos;
                let n = read_num(&mut pos)?;
                let bottom_vertex = bytes.get(pos) == Some(&b'\'');
                if bottom_vertex {
                    pos += 1;
                }
                let (limit, offset) = if bottom_vertex { (bottom, top) } else { (top, 0) };
                if n == 0 || n > limit {
                    return Err(perr(at, "vertex number out of range for the arity header"));
                }
                block.push(offset + n - 1);
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b'}') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(perr(pos, "expected ',' or '}' inside a block")),
                }
            }
            blocks.push(block);
        }
        Diagram::new(top, bottom, blocks)
    }
}

/// A diagram in which each block meets each row at most once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarDiagram(Diagram);

impl BarDiagram {
    pub fn identity(k: usize) -> Self {
        BarDiagram(Diagram::identity(k))
    }

    pub fn from_edges(top: usize, bottom: usize, edges: &[(usize, usize)]) -> Result<Self, DiagramError> {
        let d = Diagram::from_edges(top, bottom, edges)?;
        BarDiagram::try_from(d)
    }

    pub fn into_inner(self) -> Diagram {
        self.0
    }

    /// The bottom partner of each top vertex.
    pub fn top_map(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.top];
        for (i, j) in self.edges() {
            out[i] = Some(j);
        }
        out
    }

    /// The top partner of each bottom vertex.
    pub fn bottom_map(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.bottom];
        for (i, j) in self.edges() {
            out[j] = Some(i);
        }
        out
    }
}

impl Deref for BarDiagram {
    type Target = Diagram;
    fn deref(&self) -> &Diagram {
        &self.0
    }
}

impl TryFrom<Diagram> for BarDiagram {
    type Error = DiagramError;
    fn try_from(d: Diagram) -> Result<Self, DiagramError> {
        if d.is_bar() {
            Ok(BarDiagram(d))
        } else {
            Err(DiagramError::NotBar(d.to_string()))
        }
    }
}

impl From<BarDiagram> for Diagram {
    fn from(d: BarDiagram) -> Diagram {
        d.0
    }
}

impl fmt::Display for BarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for BarDiagram {
    type Err = DiagramError;
    fn from_str(text: &str) -> Result<Self, DiagramError> {
        BarDiagram::try_from(text.parse::<Diagram>()?)
    }
}

/// All diagrams `r -> s`, sorted canonically.
pub fn enumerate_diagrams(r: usize, s: usize, bar_only: bool) -> Result<Vec<Diagram>, DiagramError> {
    if r.max(s) > MAX_ENUM_ARITY {
        return Err(DiagramError::Resource(r.max(s)));
    }
    Ok(enumerate_diagrams_unchecked(r, s, bar_only))
}

pub fn enumerate_diagrams_unchecked(r: usize, s: usize, bar_only: bool) -> Vec<Diagram> {
    let mut out = Vec::new();
    if bar_only {
        let mut used = vec![false; s];
        let mut edges = Vec::new();
        matchings(0, r, &mut used, &mut edges, &mut |e| {
            out.push(Diagram::from_edges(r, s, e).expect("valid edges"));
        });
    } else {
        // Restricted growth strings.
        let n = r + s;
        let mut labels = vec![0usize; n];
        fn rec(i: usize, max: usize, labels: &mut Vec<usize>, r: usize, s: usize, out: &mut Vec<Diagram>) {
            if i == labels.len() {
                out.push(Diagram::from_labels(r, s, labels));
                return;
            }
            for l in 0..=max {
                labels[i] = l;
                rec(i + 1, if l == max { max + 1 } else { max }, labels, r, s, out);
            }
        }
        rec(0, 0, &mut labels, r, s, &mut out);
    }
    out.sort();
    out
}

pub fn enumerate_bar(r: usize, s: usize) -> Result<Vec<BarDiagram>, DiagramError> {
    Ok(enumerate_diagrams(r, s, true)?.into_iter().map(BarDiagram).collect())
}

fn matchings(
    i: usize,
    r: usize,
    used: &mut Vec<bool>,
    edges: &mut Vec<(usize, usize)>,
    emit: EdgeSink<'_>,
) {
    if i == r {
        emit(edges);
        return;
    }
    matchings(i + 1, r, used, edges, emit);
    for j in 0..used.len() {
        if !used[j] {
            used[j] = true;
            edges.push((i, j));
            matchings(i + 1, r, used, edges, emit);
            edges.pop();
            used[j] = false;
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Stacks `pi: r -> s` on top of `rho: s -> t`. Returns the induced partition
/// of the outer rows together with the number of components that live
/// entirely in the middle row.
pub fn glue(pi: &Diagram, rho: &Diagram) -> Result<(Diagram, usize), DiagramError> {
    if pi.bottom != rho.top {
        return Err(DiagramError::ArityMismatch(format!(
            "cannot glue {} -> {} onto {} -> {}",
            pi.top, pi.bottom, rho.top, rho.bottom
        )));
    }
    let (r, s, t) = (pi.top, pi.bottom, rho.bottom);
    let mut uf = UnionFind::new(r + s + t);
    for b in &pi.blocks {
        for w in b.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    // rho's vertex v sits at r + v in the glued graph.
    for b in &rho.blocks {
        for w in b.windows(2) {
            uf.union(r + w[0], r + w[1]);
        }
    }
    let outer = |v: usize| v < r || v >= r + s;
    let mut has_outer = vec![false; r + s + t];
    for v in (0..r + s + t).filter(|&v| outer(v)) {
        let root = uf.find(v);
        has_outer[root] = true;
    }
    let mut n_mid = 0;
    for (v, outer) in has_outer.iter().enumerate().take(r + s).skip(r) {
        if uf.find(v) == v && !outer {
            n_mid += 1;
        }
    }
    let labels: Vec<usize> = (0..r)
        .chain(r + s..r + s + t)
        .map(|v| uf.find(v))
        .collect();
    Ok((Diagram::from_labels(r, t, &labels), n_mid))
}

/// A formal linear combination of diagrams `src -> dst` with coefficients in
/// `Q[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism<D> {
    src: usize,
    dst: usize,
    terms: BTreeMap<D, NuPolynomial>,
}

/// Morphisms `Delta_r -> Delta_s`, spanned by bar diagrams.
pub type DeltaMorphism = Morphism<BarDiagram>;
/// Morphisms `h^r -> h^s`, spanned by all partition diagrams.
pub type HMorphism = Morphism<Diagram>;

impl<D: Ord + Clone + AsDiagram + fmt::Display> Morphism<D> {
    pub fn zero(src: usize, dst: usize) -> Self {
        Morphism { src, dst, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: D) -> Self {
        let (src, dst) = (d.diagram().top_arity(), d.diagram().bottom_arity());
        let mut terms = BTreeMap::new();
        terms.insert(d, NuPolynomial::one());
        Morphism { src, dst, terms }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn terms(&self) -> &BTreeMap<D, NuPolynomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &D) -> NuPolynomial {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, d: D, c: &NuPolynomial) -> Result<(), DiagramError> {
        if d.diagram().top_arity() != self.src || d.diagram().bottom_arity() != self.dst {
            return Err(DiagramError::ArityMismatch(format!(
                "term {} in a morphism {} -> {}",
                d, self.src, self.dst
            )));
        }
        add_into(&mut self.terms, d, c);
        Ok(())
    }

    pub fn scale(&self, c: &NuPolynomial) -> Self {
        let mut out = Self::zero(self.src, self.dst);
        for (d, p) in &self.terms {
            add_into(&mut out.terms, d.clone(), &(p * c));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, DiagramError> {
        if self.src != other.src || self.dst != other.dst {
            return Err(DiagramError::ArityMismatch(format!(
                "adding {} -> {} to {} -> {}",
                self.src, self.dst, other.src, other.dst
            )));
        }
        let mut out = self.clone();
        for (d, p) in &other.terms {
            add_into(&mut out.terms, d.clone(), p);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, DiagramError> {
        self.add(&other.scale(&NuPolynomial::from_int(-1)))
    }

    /// Largest coefficient degree, `-1` for the zero morphism.
    pub fn max_degree(&self) -> i64 {
        self.terms.values().map(|p| p.degree()).max().unwrap_or(-1)
    }

    fn compose_with(
        &self,
        rho: &Self,
        basis: impl Fn(&D, &D) -> Result<Vec<(D, NuPolynomial)>, DiagramError>,
    ) -> Result<Self, DiagramError> {
        if self.dst != rho.src {
            return Err(DiagramError::ArityMismatch(format!(
                "composing {} -> {} with {} -> {}",
                self.src, self.dst, rho.src, rho.dst
            )));
        }
        let mut out = Self::zero(self.src, rho.dst);
        for (p, cp) in &self.terms {
            for (q, cq) in &rho.terms {
                let c = cp * cq;
                for (tau, coeff) in basis(p, q)? {
                    add_into(&mut out.terms, tau, &(&coeff * &c));
                }
            }
        }
        Ok(out)
    }
}

fn add_into<D: Ord>(terms: &mut BTreeMap<D, NuPolynomial>, d: D, c: &NuPolynomial) {
    if c.is_zero() {
        return;
    }
    match terms.entry(d) {
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Read access to the underlying diagram of a basis element.
pub trait AsDiagram {
    fn diagram(&self) -> &Diagram;
}

impl AsDiagram for Diagram {
    fn diagram(&self) -> &Diagram {
        self
    }
}

impl AsDiagram for BarDiagram {
    fn diagram(&self) -> &Diagram {
        &self.0
    }
}

impl HMorphism {
    /// `rho ∘ pi` in the `h^⊗k` calculus: each pair contributes
    /// `v^{n_mid}` times the glued diagram.
    pub fn compose_h(&self, rho: &HMorphism) -> Result<HMorphism, DiagramError> {
        self.compose_with(rho, |p, q| {
            let (star, n) = glue(p, q)?;
            Ok(vec![(star, NuPolynomial::nu().pow(n))])
        })
    }
}

pub fn compose_h(pi: &HMorphism, rho: &HMorphism) -> Result<HMorphism, DiagramError> {
    pi.compose_h(rho)
}

/// `rho ∘ pi` for two bar diagrams, as a list of `(tau, coefficient)`.
///
/// `tau` runs over the glued diagram and every diagram obtained from it by
/// joining some tops that are solitary in `pi` to bottoms that are solitary
/// in `rho` (a partial matching). Each `tau` gets the falling product of
/// `n_mid` factors starting at `v - l(tau)`.
pub fn compose_bar(pi: &BarDiagram, rho: &BarDiagram) -> Result<Vec<(BarDiagram, NuPolynomial)>, DiagramError> {
    let (star, n_mid) = glue(pi, rho)?;
    let (r, t) = (star.top, star.bottom);
    let free_tops: Vec<usize> = (0..r).filter(|&i| pi.top_is_solitary(i)).collect();
    let free_bottoms: Vec<usize> = (0..t).filter(|&m| rho.bottom_is_solitary(m)).collect();
    let star_edges = star.edges();
    let base_blocks = star.num_blocks() as i64;
    let mut out = Vec::new();
    let mut used = vec![false; free_bottoms.len()];
    let mut extra: Vec<(usize, usize)> = Vec::new();
    fn rec(
        idx: usize,
        free_tops: &[usize],
        free_bottoms: &[usize],
        used: &mut Vec<bool>,
        extra: &mut Vec<(usize, usize)>,
        emit: EdgeSink<'_>,
    ) {
        if idx == free_tops.len() {
            emit(extra);
            return;
        }
        rec(idx + 1, free_tops, free_bottoms, used, extra, emit);
        for j in 0..free_bottoms.len() {
            if !used[j] {
                used[j] = true;
                extra.push((free_tops[idx], free_bottoms[j]));
                rec(idx + 1, free_tops, free_bottoms, used, extra, emit);
                extra.pop();
                used[j] = false;
            }
        }
    }
    let mut emit = |merges: &[(usize, usize)]| {
        let mut edges = star_edges.clone();
        edges.extend_from_slice(merges);
        let tau = BarDiagram::from_edges(r, t, &edges).expect("merging solitary vertices stays in bar form");
        let l = base_blocks - merges.len() as i64;
        out.push((tau, falling_from(l, n_mid)));
    };
    rec(0, &free_tops, &free_bottoms, &mut used, &mut extra, &mut emit);
    Ok(out)
}

impl DeltaMorphism {
    /// `rho ∘ pi` in `Hom(Delta_r, Delta_t)`.
    pub fn compose_delta(&self, rho: &DeltaMorphism) -> Result<DeltaMorphism, DiagramError> {
        self.compose_with(rho, compose_bar)
    }

    /// Value of every coefficient at `v = q`, dropping zero terms.
    pub fn eval_at(&self, q: &num_rational::BigRational) -> Vec<(BarDiagram, num_rational::BigRational)> {
        self.terms
            .iter()
            .map(|(d, p)| (d.clone(), p.eval(q)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }
}

pub fn compose_delta(pi: &DeltaMorphism, rho: &DeltaMorphism) -> Result<DeltaMorphism, DiagramError> {
    pi.compose_delta(rho)
}

impl<D: fmt::Display> fmt::Display for Morphism<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, c)| format!("({})*{}", c, d))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `res_l : Delta_{k+1} -> Delta_k`; the top vertex `l` is solitary.
pub fn res(k: usize, l: usize) -> Result<BarDiagram, DiagramError> {
    if l == 0 || l > k + 1 {
        return Err(DiagramError::IndexOutOfRange(format!("res({k},{l}) needs 1 <= l <= {}", k + 1)));
    }
    let l = l - 1;
    let edges: Vec<(usize, usize)> = (0..k + 1)
        .filter(|&i| i != l)
        .map(|i| (i, if i < l { i } else { i - 1 }))
        .collect();
    BarDiagram::from_edges(k + 1, k, &edges)
}

/// `res*_l : Delta_k -> Delta_{k+1}`; the bottom vertex `l` is solitary.
pub fn res_star(k: usize, l: usize) -> Result<BarDiagram, DiagramError> {
    if l == 0 || l > k + 1 {
        return Err(DiagramError::IndexOutOfRange(format!(
            "res_star({k},{l}) needs 1 <= l <= {}",
            k + 1
        )));
    }
    let l = l - 1;
    let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, if i < l { i } else { i + 1 })).collect();
    BarDiagram::from_edges(k, k + 1, &edges)
}

/// The permutation diagram with edges `i -> sigma[i]` (zero-based).
pub fn perm(sigma: &[usize]) -> Result<BarDiagram, DiagramError> {
    let k = sigma.len();
    let mut seen = vec![false; k];
    for &j in sigma {
        if j >= k || seen[j] {
            return Err(DiagramError::IndexOutOfRange(format!("{sigma:?} is not a permutation")));
        }
        seen[j] = true;
    }
    let edges: Vec<(usize, usize)> = sigma.iter().copied().enumerate().collect();
    BarDiagram::from_edges(k, k, &edges)
}

/// For a strictly increasing `iota: {1..l} -> {1..k}` (one-based values),
/// the diagram `Delta_k -> Delta_l` with edges `iota(i) -> i'`.
pub fn res_iota(k: usize, iota: &[usize]) -> Result<BarDiagram, DiagramError> {
    if iota.windows(2).any(|w| w[0] >= w[1]) || iota.iter().any(|&x| x == 0 || x > k) {
        return Err(DiagramError::IndexOutOfRange(format!(
            "{iota:?} is not a strictly increasing map into 1..={k}"
        )));
    }
    let edges: Vec<(usize, usize)> = iota.iter().enumerate().map(|(i, &x)| (x - 1, i)).collect();
    BarDiagram::from_edges(k, iota.len(), &edges)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Res(usize),
    ResStar(usize),
    Perm(Vec<usize>),
}

/// Dispatches to [`res`], [`res_star`] or [`perm`].
pub fn generator(kind: &GeneratorKind, k: usize) -> Result<BarDiagram, DiagramError> {
    match kind {
        GeneratorKind::Res(l) => res(k, *l),
        GeneratorKind::ResStar(l) => res_star(k, *l),
        GeneratorKind::Perm(sigma) => {
            if sigma.len() != k {
                return Err(DiagramError::ArityMismatch(format!(
                    "permutation of length {} on Delta_{k}",
                    sigma.len()
                )));
            }
            perm(sigma)
        }
    }
}
