//! Dense exact matrices and the elimination routines behind every rank,
//! determinant and Pfaffian in the crate.
//!
//! Over the rationals all eliminations are fraction free: the matrix is first
//! cleared of denominators (row-wise for rank and determinant, globally for
//! the Pfaffian, which must stay skew) and then reduced with Bareiss-type
//! updates whose divisions are exact. Pivoting is deterministic: columns are
//! scanned left to right and, within a column, the remaining row with the
//! lowest original index is taken. The pivot rows and columns are reported so
//! that certificates can name a nonvanishing minor.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{PrimeField, Rational};

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Rank together with the pivot positions chosen by the deterministic rule.
/// The submatrix on `pivot_rows` x `pivot_cols` is nonsingular, and so is the
/// one on any common prefix of the two lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub rank: usize,
    pub pivot_rows: Vec<usize>,
    pub pivot_cols: Vec<usize>,
}

/// Rank of a skew-symmetric matrix and the pivot pairs of the congruence
/// elimination. The principal submatrix on the union of any prefix of the
/// pairs has a nonzero Pfaffian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewProfile {
    pub rank: usize,
    pub pivot_pairs: Vec<(usize, usize)>,
}

impl SkewProfile {
    /// Sorted indices of the first `pairs` pivot pairs.
    pub fn principal_witness(&self, pairs: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.pivot_pairs.iter().take(pairs).flat_map(|&(a, b)| [a, b]).collect();
        v.sort_unstable();
        v
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| Rational::from_integer(BigInt::from(rows[i][j])))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| self.get(i, i).is_zero() && (i + 1..self.cols).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    /// Block matrix from a grid of equally-shaped blocks.
    pub fn from_blocks(blocks: &[Vec<ExactMatrix>]) -> Result<Self> {
        let br = blocks.len();
        let bc = blocks.first().map_or(0, Vec::len);
        let (h, w) = blocks
            .first()
            .and_then(|r| r.first())
            .map_or((0, 0), |b| (b.rows, b.cols));
        if blocks
            .iter()
            .any(|r| r.len() != bc || r.iter().any(|b| b.rows != h || b.cols != w))
        {
            return Err(Error::DimensionMismatch("blocks must share one shape".into()));
        }
        Ok(Self::from_fn(br * h, bc * w, |i, j| {
            blocks[i / h][j / w].get(i % h, j % w).clone()
        }))
    }

    /// Rows scaled to primitive-free integer rows (each row multiplied by the
    /// lcm of its denominators), plus the product of the scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut total = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                total *= &l;
                row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
            })
            .collect();
        (rows, total)
    }

    pub fn rank_profile(&self) -> RankProfile {
        let (rows, _) = self.integer_rows();
        bareiss(rows, self.cols).profile
    }

    pub fn rank(&self) -> usize {
        self.rank_profile().rank
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        let (rows, scale) = self.integer_rows();
        let out = bareiss(rows, self.cols);
        if out.profile.rank < self.rows {
            return Ok(Rational::zero());
        }
        let det = if out.odd_swaps { -out.last_pivot } else { out.last_pivot };
        Ok(Rational::new(det, scale))
    }

    fn check_skew(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        Ok(())
    }

    /// Whole-matrix denominator clearing, which keeps skew symmetry.
    fn integer_skew(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let l = self.data.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let rows = (0..self.rows)
            .map(|i| self.row(i).iter().map(|q| q.numer() * (&l / q.denom())).collect())
            .collect();
        (rows, l)
    }

    /// Pfaffian, normalized so that `pf([[0,1],[-1,0]]) = 1`.
    pub fn pfaffian(&self) -> Result<Rational> {
        self.check_skew()?;
        if self.rows % 2 == 1 {
            return Err(Error::NotSkewSymmetric);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let (b, l) = self.integer_skew();
        let out = skew_eliminate(b, true);
        if out.profile.rank < n {
            return Ok(Rational::zero());
        }
        let order: Vec<usize> = out.profile.pivot_pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        let mut pf = out.last_pivot;
        if permutation_is_odd(&order) {
            pf = -pf;
        }
        Ok(Rational::new(pf, num_traits::pow(l, n / 2)))
    }

    /// Rank of a skew-symmetric matrix with its pivot pairs.
    pub fn skew_profile(&self) -> Result<SkewProfile> {
        self.check_skew()?;
        let (b, _) = self.integer_skew();
        Ok(skew_eliminate(b, false).profile)
    }

    /// Rank of a skew-symmetric matrix; always even.
    pub fn even_rank(&self) -> Result<usize> {
        let rank = self.skew_profile()?.rank;
        assert!(rank % 2 == 0, "skew rank must be even");
        Ok(rank)
    }

    /// Reduced row echelon form by Gauss-Jordan over the rationals, with the
    /// pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Image modulo `p`; `None` if some denominator vanishes mod `p`.
    pub fn reduce_mod(&self, field: PrimeField) -> Option<FpMatrix> {
        let data = self
            .data
            .iter()
            .map(|q| field.from_rational(q))
            .collect::<Option<Vec<_>>>()?;
        Some(FpMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
            field,
        })
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(crate::scalar::format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

struct BareissOutcome {
    profile: RankProfile,
    last_pivot: BigInt,
    odd_swaps: bool,
}

/// Fraction-free echelon reduction of an integer matrix.
fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> BareissOutcome {
    let nrows = a.len();
    let mut orig: Vec<usize> = (0..nrows).collect();
    let mut prev = BigInt::one();
    let mut odd_swaps = false;
    let mut pivot_rows = Vec::new();
    let mut pivot_cols = Vec::new();
    let mut k = 0;
    for c in 0..cols {
        if k == nrows {
            break;
        }
        let Some(p) = (k..nrows).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| orig[i]) else {
            continue;
        };
        if p != k {
            a.swap(p, k);
            orig.swap(p, k);
            odd_swaps = !odd_swaps;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let piv = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut v = &row[j] * &piv;
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v -= &lead * &pivot_row[j];
                }
                row[j] = if prev.is_one() { v } else { exact_div(v, &prev) };
            }
        }
        pivot_rows.push(orig[k]);
        pivot_cols.push(c);
        prev = piv;
        k += 1;
    }
    BareissOutcome {
        profile: RankProfile {
            rank: k,
            pivot_rows,
            pivot_cols,
        },
        last_pivot: prev,
        odd_swaps,
    }
}

#[inline]
fn exact_div(v: BigInt, d: &BigInt) -> BigInt {
    debug_assert!((&v % d).is_zero(), "inexact fraction-free division");
    v / d
}

struct SkewOutcome {
    profile: SkewProfile,
    last_pivot: BigInt,
}

/// Fraction-free congruence elimination of an integer skew matrix using
/// 2x2 pivot blocks. Each update is the four-term Pfaffian expansion divided
/// by the previous pivot, and every intermediate entry is the Pfaffian of a
/// bordered principal submatrix, hence an integer.
///
/// With `leading_only` the first remaining index must pivot (Pfaffian mode,
/// which stops at the first zero row); otherwise zero rows are skipped.
fn skew_eliminate(mut b: Vec<Vec<BigInt>>, leading_only: bool) -> SkewOutcome {
    let n = b.len();
    let mut alive = vec![true; n];
    let mut prev = BigInt::one();
    let mut pairs = Vec::new();
    loop {
        let mut found = None;
        for a in (0..n).filter(|&a| alive[a]) {
            if let Some(c) = (0..n).find(|&c| alive[c] && c != a && !b[a][c].is_zero()) {
                found = Some((a, c));
                break;
            }
            if leading_only {
                break;
            }
        }
        let Some((p, q)) = found else { break };
        alive[p] = false;
        alive[q] = false;
        let piv = b[p][q].clone();
        let rest: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
        for (x, &i) in rest.iter().enumerate() {
            for &j in &rest[x + 1..] {
                let v = &piv * &b[i][j] - &b[i][q] * &b[p][j] + &b[i][p] * &b[q][j];
                let v = if prev.is_one() { v } else { exact_div(v, &prev) };
                b[j][i] = -&v;
                b[i][j] = v;
            }
        }
        pairs.push((p, q));
        prev = piv;
    }
    SkewOutcome {
        profile: SkewProfile {
            rank: 2 * pairs.len(),
            pivot_pairs: pairs,
        },
        last_pivot: prev,
    }
}

fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

/// Dense matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
    field: PrimeField,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize, field: PrimeField) -> Self {
        FpMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
            field,
        }
    }

    pub fn from_rows(rows: Vec<Vec<u64>>, field: PrimeField) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let p = field.modulus();
        FpMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().map(|x| x % p).collect(),
            field,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.field.modulus();
    }

    pub fn rank_profile(&self) -> RankProfile {
        let f = self.field;
        let mut a: Vec<Vec<u64>> = self.data.chunks(self.cols.max(1)).map(<[u64]>::to_vec).collect();
        a.truncate(self.rows);
        let mut orig: Vec<usize> = (0..self.rows).collect();
        let mut pivot_rows = Vec::new();
        let mut pivot_cols = Vec::new();
        let mut k = 0;
        for c in 0..self.cols {
            if k == self.rows {
                break;
            }
            let Some(p) = (k..self.rows).filter(|&i| a[i][c] != 0).min_by_key(|&i| orig[i]) else {
                continue;
            };
            a.swap(p, k);
            orig.swap(p, k);
            let inv = f.inv(a[k][c]);
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in bottom.iter_mut() {
                if row[c] == 0 {
                    continue;
                }
                let factor = f.mul(row[c], inv);
                row[c] = 0;
                for j in c + 1..self.cols {
                    if pivot_row[j] != 0 {
                        row[j] = f.sub(row[j], f.mul(factor, pivot_row[j]));
                    }
                }
            }
            pivot_rows.push(orig[k]);
            pivot_cols.push(c);
            k += 1;
        }
        RankProfile {
            rank: k,
            pivot_rows,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank_profile().rank
    }
}

/// Exact rank over the rationals.
pub fn rank(m: &ExactMatrix) -> usize {
    m.rank()
}

pub fn determinant(m: &ExactMatrix) -> Result<Rational> {
    m.determinant()
}

pub fn pfaffian(m: &ExactMatrix) -> Result<Rational> {
    m.pfaffian()
}

pub fn even_rank(m: &ExactMatrix) -> Result<usize> {
    m.even_rank()
}
