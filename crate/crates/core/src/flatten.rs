//! Exterior flattenings.
//!
//! For `x = sum_i e_i (x) A_i` the map `psi_j : V (x) L^j U* -> W* (x) L^{j+1} U*`
//! sends `v (x) e_S` to `sum_{i not in S} (A_i v) (x) (e_i ^ e_S)`. As a matrix,
//! rows are indexed by pairs `(a, S)` and columns by `(b, T)`, both
//! subset-major (`row = index(S) * n + a`), with subsets in colex order. The
//! block at `(S, T)` is `sign(S, i) * A_i` when `T = S + {i}`, where
//! `sign(S, i) = (-1)^{#{s in S : s < i}}`, and zero otherwise.
//!
//! All indices here are 0-based.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::format_rational;
use crate::tensor::Tensor3;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All `j`-subsets of `{0..m}` in colex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetBasis {
    pub m: usize,
    pub j: usize,
    pub subsets: Vec<Vec<usize>>,
}

impl SubsetBasis {
    pub fn new(m: usize, j: usize) -> Self {
        SubsetBasis {
            m,
            j,
            subsets: colex_subsets(m, j),
        }
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// Position of a sorted subset (combinatorial number system).
    pub fn index_of(subset: &[usize]) -> usize {
        subset.iter().enumerate().map(|(t, &s)| binomial(s, t + 1)).sum()
    }
}

/// `k`-subsets of `{0..n}`, sorted colexicographically.
pub fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // Advance to the colex successor: bump the first element that can move.
        let mut t = 0;
        while t < k && (t + 1 < k && cur[t] + 1 == cur[t + 1] || t + 1 == k && cur[t] + 1 == n) {
            t += 1;
        }
        if t == k {
            break;
        }
        cur[t] += 1;
        for (s, c) in cur.iter_mut().enumerate().take(t) {
            *c = s;
        }
    }
    out
}

/// One nonzero block of `psi_j`: rows of subset `source`, columns of subset
/// `target`, filled with `sign * A_slice`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WedgeBlock {
    pub source: usize,
    pub target: usize,
    pub slice: usize,
    pub sign: i8,
}

/// Block sparsity pattern of `psi_j` for `dim U = m`.
pub fn wedge_pattern(m: usize, j: usize) -> Vec<WedgeBlock> {
    let mut out = Vec::new();
    for (si, s) in colex_subsets(m, j).iter().enumerate() {
        for i in (0..m).filter(|i| !s.contains(i)) {
            let below = s.iter().filter(|&&t| t < i).count();
            let mut t = s.clone();
            t.insert(below, i);
            out.push(WedgeBlock {
                source: si,
                target: SubsetBasis::index_of(&t),
                slice: i,
                sign: if below % 2 == 0 { 1 } else { -1 },
            });
        }
    }
    out
}

/// A row or column label: vector-space index and exterior-basis subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Label {
    pub index: usize,
    pub subset: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatteningMatrix {
    pub j: usize,
    pub matrix: ExactMatrix,
    pub row_labels: Vec<Label>,
    pub col_labels: Vec<Label>,
}

fn labels(dim: usize, basis: &SubsetBasis) -> Vec<Label> {
    basis
        .subsets
        .iter()
        .flat_map(|s| {
            (0..dim).map(move |a| Label {
                index: a,
                subset: s.clone(),
            })
        })
        .collect()
}

impl FlatteningMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// JSON form used by the CLI's matrix dump.
    pub fn to_json(&self) -> Value {
        let label = |l: &Label| json!({ "index": l.index, "subset": l.subset });
        json!({
            "j": self.j,
            "rows": self.matrix.rows(),
            "cols": self.matrix.cols(),
            "entries": self.matrix.entries().iter().map(format_rational).collect::<Vec<_>>(),
            "row_labels": self.row_labels.iter().map(label).collect::<Vec<_>>(),
            "col_labels": self.col_labels.iter().map(label).collect::<Vec<_>>(),
        })
    }
}

/// The matrix of `psi_{j,x}`, of shape `n*C(m,j) x k*C(m,j+1)`.
pub fn exterior_flattening(x: &Tensor3, j: usize) -> Result<FlatteningMatrix> {
    let (m, n, k) = x.dims();
    if m == 0 || j >= m {
        return Err(Error::FlatteningIndex {
            j,
            max: m.saturating_sub(1),
        });
    }
    let src = SubsetBasis::new(m, j);
    let dst = SubsetBasis::new(m, j + 1);
    let mut mat = ExactMatrix::zeros(n * src.len(), k * dst.len());
    for blk in wedge_pattern(m, j) {
        for a in 0..n {
            for b in 0..k {
                let v = x.entry(blk.slice, a, b);
                if num_traits::Zero::is_zero(v) {
                    continue;
                }
                let v = if blk.sign > 0 { v.clone() } else { -v };
                mat.set(blk.source * n + a, blk.target * k + b, v);
            }
        }
    }
    Ok(FlatteningMatrix {
        j,
        matrix: mat,
        row_labels: labels(n, &src),
        col_labels: labels(k, &dst),
    })
}

/// Column-block post-composition turning `psi_1` (m = 3) into the skew form:
/// output block `c` is `SKEW_SIGNS[c]` times input block `SKEW_PERM[c]`. In
/// colex order the 2-subsets are `{0,1}, {0,2}, {1,2}`; this is the Hodge
/// complement `{1,2} -> 0, {0,2} -> 1, {0,1} -> 2` with signs `(+, -, +)`.
pub const SKEW_PERM: [usize; 3] = [2, 1, 0];
pub const SKEW_SIGNS: [i8; 3] = [1, -1, 1];

/// Block pattern of the skew form: `(row block, column block, slice, sign)`.
/// Gives `[[0, A3, -A2], [-A3, 0, A1], [A2, -A1, 0]]`.
pub fn skew_form_pattern() -> Vec<WedgeBlock> {
    let inverse = |t: usize| SKEW_PERM.iter().position(|&p| p == t).expect("permutation");
    wedge_pattern(3, 1)
        .into_iter()
        .map(|b| {
            let c = inverse(b.target);
            WedgeBlock {
                source: b.source,
                target: c,
                slice: b.slice,
                sign: b.sign * SKEW_SIGNS[c],
            }
        })
        .collect()
}

/// The `3n x 3n` skew-symmetric matrix `[[0, A3, -A2], [-A3, 0, A1], [A2, -A1, 0]]`
/// of an `m = 3` partially symmetric tensor.
pub fn pfaffian_form(x: &Tensor3) -> Result<ExactMatrix> {
    if x.m() != 3 || !x.is_symmetric() {
        return Err(Error::PfaffianFormShape);
    }
    let psi = exterior_flattening(x, 1)?.matrix;
    let n = x.n();
    let mut out = ExactMatrix::zeros(3 * n, 3 * n);
    for (c, (&src, &sign)) in SKEW_PERM.iter().zip(&SKEW_SIGNS).enumerate() {
        for row in 0..3 * n {
            for b in 0..n {
                let v = psi.get(row, src * n + b);
                out.set(row, c * n + b, if sign > 0 { v.clone() } else { -v });
            }
        }
    }
    Ok(out)
}
