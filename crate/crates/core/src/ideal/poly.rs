use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{PrimeField, Rational};
use crate::tensor::Tensor3;

/// Coordinates on `U (x) S^2 V` (symmetric) or `U (x) V (x) W` (general).
///
/// Symmetric: `x_{i,(a,b)}` with `a <= b` gets index
/// `i * n(n+1)/2 + b(b+1)/2 + a`. General: `x_{i,a,b}` gets `(i*n + a)*k + b`.
/// Both enumerations are colex on the index tuples read right to left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoordinateSystem {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub symmetric: bool,
}

impl CoordinateSystem {
    pub fn symmetric(m: usize, n: usize) -> Self {
        CoordinateSystem {
            m,
            n,
            k: n,
            symmetric: true,
        }
    }

    pub fn general(m: usize, n: usize, k: usize) -> Self {
        CoordinateSystem {
            m,
            n,
            k,
            symmetric: false,
        }
    }

    pub fn for_tensor(x: &Tensor3) -> Self {
        if x.is_symmetric() {
            Self::symmetric(x.m(), x.n())
        } else {
            Self::general(x.m(), x.n(), x.k())
        }
    }

    /// Number of variables `D`.
    pub fn num_vars(&self) -> usize {
        if self.symmetric {
            self.m * self.n * (self.n + 1) / 2
        } else {
            self.m * self.n * self.k
        }
    }

    /// Variable carrying entry `(A_i)_{a,b}`.
    pub fn var(&self, i: usize, a: usize, b: usize) -> usize {
        if self.symmetric {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            i * self.n * (self.n + 1) / 2 + hi * (hi + 1) / 2 + lo
        } else {
            (i * self.n + a) * self.k + b
        }
    }

    /// Inverse of [`var`](Self::var), with `a <= b` in the symmetric case.
    pub fn coords_of(&self, v: usize) -> (usize, usize, usize) {
        if self.symmetric {
            let per = self.n * (self.n + 1) / 2;
            let (i, mut rem) = (v / per, v % per);
            let mut hi = 0;
            while rem > hi {
                rem -= hi + 1;
                hi += 1;
            }
            (i, rem, hi)
        } else {
            (v / (self.n * self.k), (v / self.k) % self.n, v % self.k)
        }
    }

    /// Value of every variable at `x`.
    pub fn point(&self, x: &Tensor3) -> Result<Vec<Rational>> {
        if x.dims() != (self.m, self.n, self.k) || (self.symmetric && !x.is_symmetric()) {
            return Err(Error::CoordinateMismatch);
        }
        Ok((0..self.num_vars())
            .map(|v| {
                let (i, a, b) = self.coords_of(v);
                x.entry(i, a, b).clone()
            })
            .collect())
    }
}

/// A monomial as the sorted multiset of its variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_vars(mut vars: Vec<u16>) -> Self {
        vars.sort_unstable();
        Monomial(vars)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn vars(&self) -> &[u16] {
        &self.0
    }

    pub fn times_var(&self, v: u16) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let pos = self.0.partition_point(|&w| w <= v);
        out.extend_from_slice(&self.0[..pos]);
        out.push(v);
        out.extend_from_slice(&self.0[pos..]);
        Monomial(out)
    }

    pub fn exponents(&self, num_vars: usize) -> Vec<u32> {
        let mut e = vec![0; num_vars];
        for &v in &self.0 {
            e[v as usize] += 1;
        }
        e
    }
}

/// Graded colex: degree first, then the exponent of the highest variable
/// where the two differ.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with integer coefficients, terms sorted by the graded
/// colex order, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    coords: CoordinateSystem,
    terms: Vec<(Monomial, i64)>,
}

impl SparsePoly {
    pub fn zero(coords: CoordinateSystem) -> Self {
        SparsePoly {
            coords,
            terms: Vec::new(),
        }
    }

    pub fn from_terms(coords: CoordinateSystem, terms: impl IntoIterator<Item = (Monomial, i64)>) -> Self {
        let mut acc: HashMap<Monomial, i64> = HashMap::new();
        for (mono, c) in terms {
            let slot = acc.entry(mono).or_insert(0);
            *slot = slot.checked_add(c).expect("coefficient overflow");
        }
        let mut terms: Vec<(Monomial, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        SparsePoly { coords, terms }
    }

    /// A single variable.
    pub fn var(coords: CoordinateSystem, v: usize) -> Self {
        SparsePoly {
            coords,
            terms: vec![(Monomial(vec![v as u16]), 1)],
        }
    }

    pub fn coords(&self) -> CoordinateSystem {
        self.coords
    }

    pub fn terms(&self) -> &[(Monomial, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.coords, self.terms.iter().map(|(m, a)| (m.clone(), a * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.coords, self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                let mut vars = ma.0.clone();
                vars.extend_from_slice(&mb.0);
                out.push((
                    Monomial::from_vars(vars),
                    a.checked_mul(*b).expect("coefficient overflow"),
                ));
            }
        }
        Self::from_terms(self.coords, out)
    }

    /// Exact value at `point`. Coordinates are scaled to integers by their
    /// common denominator `L`, and a term of degree `e` is divided by `L^e`.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let l = point.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let scaled: Vec<BigInt> = point.iter().map(|q| q.numer() * (&l / q.denom())).collect();
        let mut by_degree: Vec<BigInt> = Vec::new();
        for (mono, c) in &self.terms {
            let mut t = BigInt::from(*c);
            for &v in mono.vars() {
                t *= &scaled[v as usize];
            }
            let d = mono.degree();
            if by_degree.len() <= d {
                by_degree.resize(d + 1, BigInt::zero());
            }
            by_degree[d] += t;
        }
        by_degree
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(d, v)| Rational::new(v, num_traits::pow(l.clone(), d)))
            .sum()
    }

    pub fn eval_at(&self, x: &Tensor3) -> Result<Rational> {
        Ok(self.eval(&self.coords.point(x)?))
    }

    pub fn eval_mod(&self, point: &[u64], field: PrimeField) -> u64 {
        let mut acc = 0;
        for (mono, c) in &self.terms {
            let mut t = field.from_i64(*c);
            for &v in mono.vars() {
                t = field.mul(t, point[v as usize]);
            }
            acc = field.add(acc, t);
        }
        acc
    }
}

/// Text export: one line `coeff e_1 ... e_D` per term, polynomials separated by
/// a line `---`.
pub fn export_text(polys: &[SparsePoly]) -> String {
    let mut out = String::new();
    for (idx, p) in polys.iter().enumerate() {
        if idx > 0 {
            out.push_str("---\n");
        }
        let d = p.coords.num_vars();
        for (mono, c) in &p.terms {
            write!(out, "{c}").unwrap();
            for e in mono.exponents(d) {
                write!(out, " {e}").unwrap();
            }
            out.push('\n');
        }
    }
    out
}

/// Parses [`export_text`] output back into polynomials over `coords`.
pub fn import_text(coords: CoordinateSystem, text: &str) -> Result<Vec<SparsePoly>> {
    let d = coords.num_vars();
    let mut polys = Vec::new();
    let mut cur = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line == "---" {
            polys.push(SparsePoly::from_terms(coords, std::mem::take(&mut cur)));
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| Error::Parse(format!("line {}: {what}", lineno + 1));
        let mut fields = line.split_whitespace();
        let c: i64 = fields
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("malformed coefficient"))?;
        let exps: Vec<u32> = fields
            .map(|s| s.parse().map_err(|_| bad("malformed exponent")))
            .collect::<Result<_>>()?;
        if exps.len() != d {
            return Err(bad(&format!("expected {d} exponents, got {}", exps.len())));
        }
        let vars = exps
            .iter()
            .enumerate()
            .flat_map(|(v, &e)| std::iter::repeat_n(v as u16, e as usize))
            .collect();
        cur.push((Monomial::from_vars(vars), c));
    }
    if !cur.is_empty() || !text.trim().is_empty() {
        polys.push(SparsePoly::from_terms(coords, cur));
    }
    Ok(polys)
}
