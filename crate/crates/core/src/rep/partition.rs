use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers; `[]` is the empty
/// partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Drops zero parts; the remaining parts must be weakly decreasing.
    pub fn from_padded(parts: &[usize]) -> Result<Self> {
        Self::new(parts.iter().copied().filter(|&p| p > 0).collect())
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.first();
        Partition((0..width).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// `(l - lam_rows, ..., l - lam_1)` with zero parts dropped, or `None` when
    /// `lam_1 > l` or `lam` has more than `rows` parts.
    pub fn complement(&self, l: usize, rows: usize) -> Option<Self> {
        if self.len() > rows || self.first() > l {
            return None;
        }
        let parts: Vec<usize> = (0..rows).rev().map(|i| l - self.part(i)).filter(|&p| p > 0).collect();
        Some(Partition(parts))
    }

    /// Adds `1` to each of the first `count` parts (padding with zeros).
    pub fn plus_ones(&self, count: usize) -> Self {
        let len = self.len().max(count);
        Partition((0..len).map(|i| self.part(i) + usize::from(i < count)).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Partitions of `d` with at most `max_len` parts, each at most `max_part`,
/// in reverse lexicographic order (`(d)` first).
pub fn partitions_bounded(d: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn go(rem: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `d`, `(d)` first.
pub fn partitions(d: usize) -> Vec<Partition> {
    partitions_bounded(d, d, d)
}

/// Dimension of the Schur module `S_lam C^n` by the Weyl formula
/// `prod_{i<j} (lam_i - lam_j + j - i) / (j - i)`; zero when `lam` has more
/// than `n` parts.
pub fn schur_dim(lam: &Partition, n: usize) -> BigInt {
    if lam.len() > n {
        return BigInt::ZERO;
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= lam.part(i) + j - lam.part(j) - i;
            den *= j - i;
        }
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flatten::binomial;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Semistandard tableaux of shape `lam` with entries in `1..=n`, counted by brute force.
    fn count_ssyt(lam: &Partition, n: usize) -> usize {
        let cells: Vec<(usize, usize)> = (0..lam.len())
            .flat_map(|r| (0..lam.part(r)).map(move |c| (r, c)))
            .collect();
        fn go(idx: usize, cells: &[(usize, usize)], fill: &mut Vec<Vec<usize>>, n: usize) -> usize {
            if idx == cells.len() {
                return 1;
            }
            let (r, c) = cells[idx];
            let mut total = 0;
            for v in 1..=n {
                if c > 0 && fill[r][c - 1] > v {
                    continue;
                }
                if r > 0 && fill[r - 1][c] >= v {
                    continue;
                }
                fill[r][c] = v;
                total += go(idx + 1, cells, fill, n);
            }
            fill[r][c] = 0;
            total
        }
        let mut fill: Vec<Vec<usize>> = (0..lam.len()).map(|r| vec![0; lam.part(r)]).collect();
        go(0, &cells, &mut fill, n)
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_padded(&[3, 1, 0, 0]).unwrap(), p(&[3, 1]));
        assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for d in 0..9 {
            for lam in partitions(d) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().size(), d);
            }
        }
    }

    #[test]
    fn complements() {
        assert_eq!(p(&[3]).complement(3, 3), Some(p(&[3, 3])));
        assert_eq!(Partition::empty().complement(4, 3), Some(p(&[4, 4, 4])));
        assert_eq!(p(&[4]).complement(3, 3), None);
        assert_eq!(p(&[1, 1, 1, 1]).complement(3, 3), None);
        assert_eq!(p(&[2, 1, 1]).complement(4, 3), Some(p(&[3, 3, 2])));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..13).map(|d| partitions(d).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert_eq!(partitions(4)[0], p(&[4]));
        assert_eq!(partitions_bounded(6, 3, 3).len(), 3);
        assert_eq!(partitions_bounded(6, 3, 6).len(), 7);
    }

    #[test]
    fn weyl_dimensions() {
        for n in 1..6 {
            for k in 0..=n + 1 {
                let col = Partition::from_padded(&vec![1; k]).unwrap();
                assert_eq!(schur_dim(&col, n), BigInt::from(binomial(n, k)));
            }
        }
        assert_eq!(schur_dim(&p(&[3, 3, 3, 3]), 4), BigInt::from(1));
        assert_eq!(schur_dim(&p(&[2, 1]), 3), BigInt::from(8));
        assert_eq!(schur_dim(&p(&[1, 1, 1]), 2), BigInt::from(0));
        for d in 1..6 {
            for lam in partitions(d) {
                for n in 1..4 {
                    assert_eq!(schur_dim(&lam, n), BigInt::from(count_ssyt(&lam, n)), "{lam} n={n}");
                }
            }
        }
    }
}
