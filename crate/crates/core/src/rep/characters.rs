use std::collections::HashMap;

use super::partition::{partitions, Partition};
use crate::error::{Error, Result};

/// Largest degree for which symmetric-group characters are tabulated.
pub const MAX_SYMMETRIC_DEGREE: usize = 12;

/// Removes a border strip of length `h` in every possible way, returning the
/// remaining partitions with their height signs.
fn remove_strips(lam: &[usize], h: usize) -> Vec<(Vec<usize>, i64)> {
    let len = lam.len();
    let beta: Vec<usize> = (0..len).map(|i| lam[i] + len - 1 - i).collect();
    let mut out = Vec::new();
    for i in 0..len {
        let Some(target) = beta[i].checked_sub(h) else { continue };
        if beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&b| b > target && b < beta[i]).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = (0..len).map(|j| next[j] - (len - 1 - j)).filter(|&p| p > 0).collect();
        out.push((parts, if crossed % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Murnaghan-Nakayama recursion on the cycle type `mu[pos..]`.
fn mn(lam: &[usize], mu: &[usize], pos: usize, memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    if pos == mu.len() {
        return i64::from(lam.is_empty());
    }
    if let Some(&v) = memo.get(&(lam.to_vec(), pos)) {
        return v;
    }
    let v = remove_strips(lam, mu[pos])
        .into_iter()
        .map(|(rest, s)| s * mn(&rest, mu, pos + 1, memo))
        .sum();
    memo.insert((lam.to_vec(), pos), v);
    v
}

/// `d! / z_mu`, the size of the conjugacy class of cycle type `mu`.
pub fn class_size(mu: &Partition) -> u128 {
    let d = mu.size();
    let mut z: u128 = 1;
    let mut i = 0;
    while i < mu.len() {
        let part = mu.part(i);
        let mult = mu.parts().iter().filter(|&&q| q == part).count();
        for t in 1..=mult as u128 {
            z *= part as u128 * t;
        }
        i += mult;
    }
    (1..=d as u128).product::<u128>() / z
}

/// Full character table of `S_d`.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    degree: usize,
    index: HashMap<Partition, usize>,
    classes: Vec<Partition>,
    /// `values[irrep][class]`.
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(d: usize) -> Result<Self> {
        if d > MAX_SYMMETRIC_DEGREE {
            return Err(Error::CharacterTableBound(d));
        }
        let classes = partitions(d);
        let index: HashMap<Partition, usize> = classes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut values = vec![vec![0i64; classes.len()]; classes.len()];
        for (c, mu) in classes.iter().enumerate() {
            let mut memo = HashMap::new();
            for (r, lam) in classes.iter().enumerate() {
                values[r][c] = mn(lam.parts(), mu.parts(), 0, &mut memo);
            }
        }
        Ok(CharacterTable {
            degree: d,
            index,
            classes,
            values,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.classes
    }

    fn idx(&self, p: &Partition) -> Result<usize> {
        self.index
            .get(p)
            .copied()
            .ok_or(Error::SizeMismatch(p.size(), self.degree))
    }

    /// `chi^lam(mu)`.
    pub fn value(&self, lam: &Partition, mu: &Partition) -> Result<i64> {
        Ok(self.values[self.idx(lam)?][self.idx(mu)?])
    }

    /// Kronecker coefficient `g_{a,b,c} = (1/d!) sum_sigma chi^a chi^b chi^c`.
    pub fn kronecker(&self, a: &Partition, b: &Partition, c: &Partition) -> Result<u64> {
        let (ia, ib, ic) = (self.idx(a)?, self.idx(b)?, self.idx(c)?);
        let total: i128 = self
            .classes
            .iter()
            .enumerate()
            .map(|(k, mu)| {
                let prod =
                    i128::from(self.values[ia][k]) * i128::from(self.values[ib][k]) * i128::from(self.values[ic][k]);
                class_size(mu) as i128 * prod
            })
            .sum();
        let order: i128 = (1..=self.degree as i128).product();
        debug_assert_eq!(total % order, 0);
        Ok((total / order) as u64)
    }
}

/// Character of the irreducible `S_d`-module `[lam]` at cycle type `mu`.
pub fn sn_character(lam: &Partition, mu: &Partition) -> Result<i64> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(lam.size(), mu.size()));
    }
    if lam.size() > MAX_SYMMETRIC_DEGREE {
        return Err(Error::CharacterTableBound(lam.size()));
    }
    Ok(mn(lam.parts(), mu.parts(), 0, &mut HashMap::new()))
}

/// Kronecker coefficient of three partitions of the same `d <= 12`.
pub fn kronecker_coefficient(a: &Partition, b: &Partition, c: &Partition) -> Result<u64> {
    let d = a.size();
    for other in [b, c] {
        if other.size() != d {
            return Err(Error::SizeMismatch(d, other.size()));
        }
    }
    CharacterTable::new(d)?.kronecker(a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::partition::schur_dim;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Number of standard Young tableaux by the hook length formula.
    fn hook_count(lam: &Partition) -> i64 {
        let conj = lam.conjugate();
        let mut hooks: u128 = 1;
        for r in 0..lam.len() {
            for c in 0..lam.part(r) {
                hooks *= (lam.part(r) - c + conj.part(c) - r - 1) as u128;
            }
        }
        ((1..=lam.size() as u128).product::<u128>() / hooks) as i64
    }

    #[test]
    fn s3_table() {
        let t = CharacterTable::new(3).unwrap();
        let rows = [
            (p(&[3]), [1, 1, 1]),
            (p(&[2, 1]), [2, 0, -1]),
            (p(&[1, 1, 1]), [1, -1, 1]),
        ];
        let cols = [p(&[1, 1, 1]), p(&[2, 1]), p(&[3])];
        for (lam, vals) in rows {
            for (mu, v) in cols.iter().zip(vals) {
                assert_eq!(t.value(&lam, mu).unwrap(), v, "{lam} at {mu}");
            }
        }
    }

    #[test]
    fn identity_column_is_hook_formula_and_rsk_holds() {
        for d in 0..=10 {
            let t = CharacterTable::new(d).unwrap();
            let id = Partition::from_padded(&vec![1; d]).unwrap();
            let mut squares: i64 = 0;
            for lam in t.partitions() {
                let f = t.value(lam, &id).unwrap();
                assert_eq!(f, hook_count(lam));
                squares += f * f;
            }
            assert_eq!(squares, (1..=d as i64).product::<i64>());
            // n^d = sum_lam f^lam dim S_lam C^n.
            for n in 1..4 {
                let total: BigInt = t
                    .partitions()
                    .iter()
                    .map(|l| schur_dim(l, n) * t.value(l, &id).unwrap())
                    .sum();
                assert_eq!(total, BigInt::from(n).pow(d as u32));
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        let t = CharacterTable::new(7).unwrap();
        for mu in t.partitions() {
            for nu in t.partitions() {
                let s: i64 = t
                    .partitions()
                    .iter()
                    .map(|l| t.value(l, mu).unwrap() * t.value(l, nu).unwrap())
                    .sum();
                let z = (1..=7u128).product::<u128>() / class_size(mu);
                assert_eq!(s as u128, if mu == nu { z } else { 0 });
            }
        }
    }

    #[test]
    fn kronecker_basics() {
        let t = CharacterTable::new(4).unwrap();
        for a in t.partitions() {
            for b in t.partitions() {
                let g = t.kronecker(a, b, &p(&[4])).unwrap();
                assert_eq!(g, u64::from(a == b));
                let sign = t.kronecker(a, b, &p(&[1, 1, 1, 1])).unwrap();
                assert_eq!(sign, u64::from(*a == b.conjugate()));
            }
        }
        assert_eq!(kronecker_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(kronecker_coefficient(&p(&[2, 2]), &p(&[2, 2]), &p(&[2, 2])).unwrap(), 1);
    }

    #[test]
    fn guards() {
        let big = p(&[13]);
        assert!(matches!(
            kronecker_coefficient(&big, &big, &big),
            Err(Error::CharacterTableBound(13))
        ));
        assert!(matches!(CharacterTable::new(13), Err(Error::CharacterTableBound(13))));
        assert!(sn_character(&p(&[2]), &p(&[1])).is_err());
        assert!(kronecker_coefficient(&p(&[2]), &p(&[1]), &p(&[2])).is_err());
        assert_eq!(sn_character(&p(&[3, 2, 1]), &p(&[3, 3])).unwrap(), -2);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn kronecker_is_symmetric(d in 1usize..=8, i in 0usize..200, j in 0usize..200, k in 0usize..200) {
            let t = CharacterTable::new(d).unwrap();
            let parts = t.partitions();
            let (a, b, c) = (&parts[i % parts.len()], &parts[j % parts.len()], &parts[k % parts.len()]);
            let g = t.kronecker(a, b, c).unwrap();
            prop_assert_eq!(g, t.kronecker(b, a, c).unwrap());
            prop_assert_eq!(g, t.kronecker(c, b, a).unwrap());
            prop_assert_eq!(g, t.kronecker(a, c, b).unwrap());
            prop_assert_eq!(g, t.kronecker(&a.conjugate(), &b.conjugate(), c).unwrap());
        }
    }
}
