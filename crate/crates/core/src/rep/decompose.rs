use num_bigint::BigInt;
use serde_json::{json, Value};

use super::characters::{CharacterTable, MAX_SYMMETRIC_DEGREE};
use super::lr::lr_coefficient;
use super::partition::{partitions_bounded, schur_dim, Partition};
use crate::error::{Error, Result};

/// One isotypic piece `S_pi U (x) S_lam V (x) S_mu W` with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurModuleSummand {
    pub pi_u: Partition,
    pub lam_v: Partition,
    pub mu_w: Option<Partition>,
    pub multiplicity: u64,
    pub dimension: BigInt,
}

impl SchurModuleSummand {
    fn new(
        pi_u: Partition,
        lam_v: Partition,
        mu_w: Option<Partition>,
        multiplicity: u64,
        dims: (usize, usize, usize),
    ) -> Self {
        let mut dimension = BigInt::from(multiplicity) * schur_dim(&pi_u, dims.0) * schur_dim(&lam_v, dims.1);
        if let Some(mu) = &mu_w {
            dimension *= schur_dim(mu, dims.2);
        }
        SchurModuleSummand {
            pi_u,
            lam_v,
            mu_w,
            multiplicity,
            dimension,
        }
    }

    /// `pi|lam` or `pi|lam|mu`.
    pub fn label(&self) -> String {
        match &self.mu_w {
            Some(mu) => format!("{}|{}|{}", self.pi_u, self.lam_v, mu),
            None => format!("{}|{}", self.pi_u, self.lam_v),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pi_U": self.pi_u.parts(),
            "lam_V": self.lam_v.parts(),
            "mu_W": self.mu_w.as_ref().map(|p| p.parts().to_vec()),
            "multiplicity": self.multiplicity,
            "dimension": self.dimension.to_string(),
        })
    }
}

pub fn total_dimension(summands: &[SchurModuleSummand]) -> BigInt {
    summands.iter().map(|s| &s.dimension).sum()
}

/// Degree `r+1` part of the ideal of `(r+1)`-minors of the first flattening:
/// `sum_{|pi|=r+1} S_pi U (x) S_{pi'+1^{r+1}} V`.
pub fn decompose_kappa0(m: usize, n: usize, r: usize) -> Vec<SchurModuleSummand> {
    let d = r + 1;
    partitions_bounded(d, m, d)
        .into_iter()
        .filter_map(|pi| {
            let v = pi.conjugate().plus_ones(d);
            (v.len() <= n).then(|| SchurModuleSummand::new(pi, v, None, 1, (m, n, 0)))
        })
        .collect()
}

/// Degree `r+1` part of the Pfaffian ideal of the skew form, `m = 3`:
/// `sum_pi S_pi U (x) S_{((r+1)^3 - pi)'} V`.
pub fn decompose_kappa1_sym(n: usize, r: usize) -> Vec<SchurModuleSummand> {
    let d = r + 1;
    partitions_bounded(d, 3, d)
        .into_iter()
        .filter_map(|pi| {
            let v = pi.complement(d, 3)?.conjugate();
            (v.len() <= n).then(|| SchurModuleSummand::new(pi, v, None, 1, (3, n, 0)))
        })
        .collect()
}

/// Upper bound for the degree `c+1` part of the `(c+1)`-minors of the middle
/// flattening of a general `3 x n x k` tensor: multiplicity of
/// `S_pi U S_lam V S_mu W` is at most `min(c^nu_{lam',mu'}, g_{pi,lam,mu})`
/// with `nu = (c+1)^3 - pi`.
pub fn decompose_kappa1_nonsym_bound(n: usize, k: usize, c: usize) -> Result<Vec<SchurModuleSummand>> {
    let d = c + 1;
    if d > MAX_SYMMETRIC_DEGREE {
        return Err(Error::CharacterTableBound(d));
    }
    let table = CharacterTable::new(d)?;
    let us = partitions_bounded(d, 3, d);
    let vs = partitions_bounded(d, n, 3);
    let ws = partitions_bounded(d, k, 3);
    let mut out = Vec::new();
    for pi in &us {
        let nu = pi.complement(d, 3).expect("pi fits in three rows of length d");
        for lam in &vs {
            let lam_c = lam.conjugate();
            for mu in &ws {
                let lr = lr_coefficient(&lam_c, &mu.conjugate(), &nu);
                if lr == 0 {
                    continue;
                }
                let mult = lr.min(table.kronecker(pi, lam, mu)?);
                if mult > 0 {
                    out.push(SchurModuleSummand::new(
                        pi.clone(),
                        lam.clone(),
                        Some(mu.clone()),
                        mult,
                        (3, n, k),
                    ));
                }
            }
        }
    }
    Ok(out)
}
