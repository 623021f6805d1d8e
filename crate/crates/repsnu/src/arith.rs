//! Exact rationals and dense univariate polynomials in the formal variable `v`
//! (written `ν` in the docs). Everything else in the crate uses these as
//! scalars.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// Polynomials of this degree or higher are refused.
pub const MAX_DEGREE: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("polynomial degree {0} exceeds the limit of {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("cannot parse {what} from {text:?}: {reason}")]
    Parse {
        what: &'static str,
        text: String,
        reason: String,
    },
    #[error("interpolation nodes must be distinct")]
    RepeatedNode,
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `a` or `a/b`.
pub fn parse_rational(text: &str) -> Result<Rational, ArithError> {
    let err = |reason: &str| ArithError::Parse {
        what: "rational",
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A polynomial in `v` with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NuPolynomial {
    coeffs: Vec<Rational>,
}

impl NuPolynomial {
    pub fn zero() -> Self {
        NuPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::trimmed(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    /// The variable itself.
    pub fn nu() -> Self {
        Self::trimmed(vec![Rational::zero(), Rational::one()])
    }

    /// `v - a`
    pub fn nu_minus(a: i64) -> Self {
        Self::trimmed(vec![int(-a), Rational::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self, ArithError> {
        let p = Self::trimmed(coeffs);
        if p.coeffs.len() > MAX_DEGREE {
            return Err(ArithError::DegreeTooLarge(p.coeffs.len() - 1));
        }
        Ok(p)
    }

    fn trimmed(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NuPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    pub fn eval_int(&self, n: i64) -> Rational {
        self.eval(&int(n))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::trimmed(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        if len > MAX_DEGREE {
            return Err(ArithError::DegreeTooLarge(len - 1));
        }
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::trimmed(out))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by `v - r`; `None` when `r` is not a root.
    fn deflate(&self, r: &Rational) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.coeffs.len();
        let mut q = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            let c = &self.coeffs[i] + &carry * r;
            if i == 0 {
                return c.is_zero().then(|| Self::trimmed(q));
            }
            q[i - 1] = c.clone();
            carry = c;
        }
        unreachable!()
    }

    /// Rational roots with multiplicity in ascending order, together with the
    /// leftover factor that has no rational roots (leading coefficient kept).
    pub fn rational_roots(&self) -> (Vec<Rational>, NuPolynomial) {
        let mut roots = Vec::new();
        let mut rest = self.clone();
        if rest.is_zero() {
            return (roots, rest);
        }
        while rest.degree() >= 1 && rest.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            rest = Self::trimmed(rest.coeffs[1..].to_vec());
        }
        // Clear denominators, then run the rational root test on the result.
        loop {
            if rest.degree() < 1 {
                break;
            }
            let lcm = rest
                .coeffs
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let ints: Vec<BigInt> = rest
                .coeffs
                .iter()
                .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
                .collect();
            let a0 = ints[0].abs();
            let an = ints.last().unwrap().abs();
            let mut found = None;
            'search: for p in small_divisors(&a0) {
                for q in small_divisors(&an) {
                    for sign in [1i64, -1] {
                        let cand = Rational::new(&p * BigInt::from(sign), q.clone());
                        if let Some(d) = rest.deflate(&cand) {
                            found = Some((cand, d));
                            break 'search;
                        }
                    }
                }
            }
            match found {
                Some((r, d)) => {
                    roots.push(r);
                    rest = d;
                }
                None => break,
            }
        }
        roots.sort();
        (roots, rest)
    }

    /// Product form such as `v*(v-1)*(v-2)/6`; `sep` goes between factors.
    pub fn factored_with(&self, sep: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        if self.is_constant() {
            return format_rational(&self.coeffs[0]);
        }
        let (roots, rest) = self.rational_roots();
        let mut grouped: Vec<(Rational, usize)> = Vec::new();
        for r in roots {
            match grouped.last_mut() {
                Some((last, m)) if *last == r => *m += 1,
                _ => grouped.push((r, 1)),
            }
        }
        let mut factors: Vec<String> = grouped
            .iter()
            .map(|(r, m)| {
                let base = if r.is_zero() {
                    "v".to_string()
                } else if r.is_positive() {
                    format!("(v-{})", format_rational(r))
                } else {
                    format!("(v+{})", format_rational(&-r))
                };
                if *m == 1 {
                    base
                } else {
                    format!("{base}^{m}")
                }
            })
            .collect();
        let content = if rest.is_constant() {
            rest.coeffs[0].clone()
        } else {
            let lead = rest.leading();
            factors.push(format!("({})", rest.scale(&lead.recip())));
            lead
        };
        let mut out = String::new();
        let num = content.numer().clone();
        if num == -BigInt::one() {
            out.push('-');
        } else if !num.is_one() {
            out.push_str(&format!("{}{}", num, sep_or_star(sep)));
        }
        out.push_str(&factors.join(sep));
        if !content.denom().is_one() {
            out.push_str(&format!("/{}", content.denom()));
        }
        out
    }

    pub fn factored(&self) -> String {
        self.factored_with("*")
    }

    pub fn to_u64_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }
}

fn sep_or_star(sep: &str) -> &str {
    if sep.is_empty() {
        "*"
    } else {
        sep
    }
}

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    // Coefficients here are products of small integers; give up on huge ones.
    let Some(m) = n.to_u64() else {
        return vec![BigInt::one()];
    };
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(BigInt::from(d));
            if d * d != m {
                out.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    out.sort();
    out
}

impl Add for &NuPolynomial {
    type Output = NuPolynomial;
    fn add(self, rhs: &NuPolynomial) -> NuPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NuPolynomial::trimmed((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for NuPolynomial {
    type Output = NuPolynomial;
    fn add(self, rhs: NuPolynomial) -> NuPolynomial {
        &self + &rhs
    }
}

impl AddAssign<&NuPolynomial> for NuPolynomial {
    fn add_assign(&mut self, rhs: &NuPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl Sub for &NuPolynomial {
    type Output = NuPolynomial;
    fn sub(self, rhs: &NuPolynomial) -> NuPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NuPolynomial::trimmed((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub for NuPolynomial {
    type Output = NuPolynomial;
    fn sub(self, rhs: NuPolynomial) -> NuPolynomial {
        &self - &rhs
    }
}

impl Neg for &NuPolynomial {
    type Output = NuPolynomial;
    fn neg(self) -> NuPolynomial {
        NuPolynomial::trimmed(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for NuPolynomial {
    type Output = NuPolynomial;
    fn neg(self) -> NuPolynomial {
        -&self
    }
}

/// # Panics
/// When the product would reach [`MAX_DEGREE`]; use
/// [`NuPolynomial::checked_mul`] to get an error instead.
impl Mul for &NuPolynomial {
    type Output = NuPolynomial;
    fn mul(self, rhs: &NuPolynomial) -> NuPolynomial {
        self.checked_mul(rhs).expect("polynomial degree limit exceeded")
    }
}

impl Mul for NuPolynomial {
    type Output = NuPolynomial;
    fn mul(self, rhs: NuPolynomial) -> NuPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for NuPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "v".to_string(),
                _ => format!("v^{i}"),
            };
            if i == 0 {
                write!(f, "{}", format_rational(c))?;
            } else if c.is_one() {
                write!(f, "{var}")?;
            } else if *c == -Rational::one() {
                write!(f, "-{var}")?;
            } else {
                write!(f, "{}*{var}", format_rational(c))?;
            }
        }
        Ok(())
    }
}

impl FromStr for NuPolynomial {
    type Err = ArithError;

    /// Accepts sums of terms `c`, `c*v`, `c*v^k`, `v^k`, `-v`; `T` and `ν`
    /// are accepted as the variable name too.
    fn from_str(text: &str) -> Result<Self, ArithError> {
        let err = |reason: String| ArithError::Parse {
            what: "polynomial",
            text: text.to_string(),
            reason,
        };
        let cleaned: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == 'ν' || c == 'T' { 'v' } else { c })
            .collect();
        if cleaned.is_empty() {
            return Err(err("empty input".into()));
        }
        // Split into signed terms; a sign right after '^' or '*' belongs to a number.
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for ch in cleaned.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !matches!(prev, Some('^' | '*' | '/'))
            {
                terms.push(std::mem::take(&mut cur));
            }
            if ch != '+' || !cur.is_empty() {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        terms.push(cur);
        let mut coeffs: Vec<Rational> = Vec::new();
        for term in terms.iter().filter(|t| !t.is_empty() && *t != "+") {
            let (coef, power) = parse_term(term).map_err(|r| err(format!("term {term:?}: {r}")))?;
            if power >= MAX_DEGREE {
                return Err(ArithError::DegreeTooLarge(power));
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Rational::zero());
            }
            coeffs[power] += coef;
        }
        NuPolynomial::from_coeffs(coeffs)
    }
}

fn parse_term(term: &str) -> Result<(Rational, usize), String> {
    let (sign, body) = match term.strip_prefix('-') {
        Some(rest) => (-Rational::one(), rest),
        None => (Rational::one(), term.strip_prefix('+').unwrap_or(term)),
    };
    let Some(vpos) = body.find('v') else {
        let c = parse_rational(body).map_err(|e| e.to_string())?;
        return Ok((sign * c, 0));
    };
    let coef_part = body[..vpos].trim_end_matches('*');
    let coef = if coef_part.is_empty() {
        Rational::one()
    } else {
        parse_rational(coef_part).map_err(|e| e.to_string())?
    };
    let rest = &body[vpos + 1..];
    let power = if rest.is_empty() {
        1
    } else if let Some(p) = rest.strip_prefix('^') {
        p.parse::<usize>().map_err(|_| format!("bad exponent {p:?}"))?
    } else {
        return Err(format!("unexpected {rest:?} after variable"));
    };
    Ok((sign * coef, power))
}

/// `v(v-1)...(v-k+1)`
pub fn falling_factorial(k: usize) -> NuPolynomial {
    (0..k as i64).fold(NuPolynomial::one(), |acc, i| &acc * &NuPolynomial::nu_minus(i))
}

/// `v(v-1)...(v-k+1)/k!`
pub fn binomial_poly(k: usize) -> NuPolynomial {
    let fact: BigInt = (1..=k as u64).map(BigInt::from).product();
    falling_factorial(k).scale(&Rational::new(BigInt::one(), fact))
}

/// Falling product `(v-a)(v-a-1)...` with `count` factors; 1 when `count = 0`.
pub fn falling_from(a: i64, count: usize) -> NuPolynomial {
    (0..count as i64).fold(NuPolynomial::one(), |acc, j| &acc * &NuPolynomial::nu_minus(a + j))
}

pub fn poly_eval(p: &NuPolynomial, q: &Rational) -> Rational {
    p.eval(q)
}

/// Lagrange interpolation through the given nodes.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<NuPolynomial, ArithError> {
    if points.len() > MAX_DEGREE {
        return Err(ArithError::DegreeTooLarge(points.len() - 1));
    }
    let mut out = NuPolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = NuPolynomial::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            if xi == xj {
                return Err(ArithError::RepeatedNode);
            }
            basis = &basis * &NuPolynomial::trimmed(vec![-xj.clone(), Rational::one()]);
            denom *= xi - xj;
        }
        out += &basis.scale(&(yi / denom));
    }
    Ok(out)
}
