//! Symbolic minors of `psi_j` and principal Pfaffians of the `m = 3` skew form.
//!
//! Every entry of these matrices is zero or a single signed variable, so a
//! minor is expanded by a dynamic program over column subsets (Laplace along
//! the rows) and a Pfaffian by enumerating perfect matchings. Generator lists
//! are ordered colexicographically: for minors the column subset is the
//! major key and the row subset the minor key.

use std::collections::HashMap;

use super::poly::{CoordinateSystem, Monomial, SparsePoly};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::flatten::{binomial, colex_subsets, skew_form_pattern, wedge_pattern};

/// Largest minor expanded symbolically.
pub const MAX_MINOR_SIZE: usize = 10;
/// Largest principal Pfaffian expanded symbolically.
pub const MAX_PFAFFIAN_SIZE: usize = 12;

/// A matrix whose entries are `0` or `sign * x_var`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    pub coords: CoordinateSystem,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Option<(u16, i8)>>,
}

impl SymbolicMatrix {
    fn new(coords: CoordinateSystem, rows: usize, cols: usize) -> Self {
        SymbolicMatrix {
            coords,
            rows,
            cols,
            entries: vec![None; rows * cols],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<(u16, i8)> {
        self.entries[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: usize, sign: i8) {
        self.entries[i * self.cols + j] = Some((v as u16, sign));
    }

    /// Symbolic determinant of the submatrix on `rows x cols`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> SparsePoly {
        assert_eq!(rows.len(), cols.len());
        let s = rows.len();
        // dp[mask]: signed sum over injections of the first popcount(mask)
        // rows into the columns of mask.
        let mut dp: HashMap<u32, HashMap<Monomial, i64>> = HashMap::new();
        dp.insert(0, HashMap::from([(Monomial::one(), 1)]));
        for &r in rows {
            let mut next: HashMap<u32, HashMap<Monomial, i64>> = HashMap::new();
            for (mask, poly) in &dp {
                for (q, &c) in cols.iter().enumerate() {
                    if mask & (1 << q) != 0 {
                        continue;
                    }
                    let Some((v, sign)) = self.get(r, c) else { continue };
                    let inversions = (mask >> (q + 1)).count_ones();
                    let sign = if inversions % 2 == 0 {
                        sign as i64
                    } else {
                        -(sign as i64)
                    };
                    let slot = next.entry(mask | (1 << q)).or_default();
                    for (mono, coef) in poly {
                        *slot.entry(mono.times_var(v)).or_insert(0) += sign * coef;
                    }
                }
            }
            for poly in next.values_mut() {
                poly.retain(|_, c| *c != 0);
            }
            next.retain(|_, p| !p.is_empty());
            dp = next;
        }
        let full = if s == 32 { u32::MAX } else { (1u32 << s) - 1 };
        let terms = dp.remove(&full).unwrap_or_default();
        SparsePoly::from_terms(self.coords, terms)
    }

    /// Symbolic Pfaffian of the principal submatrix on `idx`, by perfect
    /// matchings: pair the first index with the `p`-th remaining one with sign
    /// `(-1)^(p+1)`.
    pub fn principal_pfaffian(&self, idx: &[usize]) -> SparsePoly {
        let mut terms = Vec::new();
        let mut vars = Vec::with_capacity(idx.len() / 2);
        self.matchings(idx.to_vec(), 1, &mut vars, &mut terms);
        SparsePoly::from_terms(self.coords, terms)
    }

    fn matchings(&self, rest: Vec<usize>, sign: i64, vars: &mut Vec<u16>, out: &mut Vec<(Monomial, i64)>) {
        if rest.is_empty() {
            out.push((Monomial::from_vars(vars.clone()), sign));
            return;
        }
        let first = rest[0];
        for p in 1..rest.len() {
            let Some((v, s)) = self.get(first, rest[p]) else {
                continue;
            };
            let sg = if p % 2 == 1 { sign } else { -sign } * s as i64;
            let remaining: Vec<usize> = rest[1..]
                .iter()
                .enumerate()
                .filter(|&(t, _)| t + 1 != p)
                .map(|(_, &i)| i)
                .collect();
            vars.push(v);
            self.matchings(remaining, sg, vars, out);
            vars.pop();
        }
    }
}

/// Symbolic `psi_j` in the given coordinates, laid out as in
/// [`crate::flatten::exterior_flattening`].
pub fn symbolic_flattening(coords: CoordinateSystem, j: usize) -> Result<SymbolicMatrix> {
    let CoordinateSystem { m, n, k, .. } = coords;
    if m == 0 || j >= m {
        return Err(Error::FlatteningIndex {
            j,
            max: m.saturating_sub(1),
        });
    }
    let mut out = SymbolicMatrix::new(coords, n * binomial(m, j), k * binomial(m, j + 1));
    for blk in wedge_pattern(m, j) {
        for a in 0..n {
            for b in 0..k {
                out.set(
                    blk.source * n + a,
                    blk.target * k + b,
                    coords.var(blk.slice, a, b),
                    blk.sign,
                );
            }
        }
    }
    Ok(out)
}

/// Symbolic `3n x 3n` skew form `[[0, A3, -A2], [-A3, 0, A1], [A2, -A1, 0]]`.
pub fn symbolic_skew_form(n: usize) -> SymbolicMatrix {
    let coords = CoordinateSystem::symmetric(3, n);
    let mut out = SymbolicMatrix::new(coords, 3 * n, 3 * n);
    for blk in skew_form_pattern() {
        for a in 0..n {
            for b in 0..n {
                out.set(
                    blk.source * n + a,
                    blk.target * n + b,
                    coords.var(blk.slice, a, b),
                    blk.sign,
                );
            }
        }
    }
    out
}

/// Row and column subsets of each minor, in generator-list order.
pub fn minor_subsets(rows: usize, cols: usize, size: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let rs = colex_subsets(rows, size);
    colex_subsets(cols, size)
        .into_iter()
        .flat_map(|c| rs.iter().map(move |r| (r.clone(), c.clone())))
        .collect()
}

/// All `size x size` minors of the symbolic `psi_j`.
pub fn minor_generators(
    m: usize,
    n: usize,
    k: usize,
    symmetric: bool,
    j: usize,
    size: usize,
) -> Result<Vec<SparsePoly>> {
    minor_generators_with(Exec::default(), m, n, k, symmetric, j, size)
}

pub fn minor_generators_with(
    exec: Exec,
    m: usize,
    n: usize,
    k: usize,
    symmetric: bool,
    j: usize,
    size: usize,
) -> Result<Vec<SparsePoly>> {
    if symmetric && n != k {
        return Err(Error::DimensionMismatch(format!(
            "symmetric coordinates need k = n, got n={n}, k={k}"
        )));
    }
    let coords = if symmetric {
        CoordinateSystem::symmetric(m, n)
    } else {
        CoordinateSystem::general(m, n, k)
    };
    let psi = symbolic_flattening(coords, j)?;
    let bound = psi.rows.min(psi.cols).min(MAX_MINOR_SIZE);
    if size == 0 || size > bound {
        return Err(Error::SizeOutOfRange {
            size,
            bound: format!(
                "1 <= size <= min(rows={}, cols={}, {MAX_MINOR_SIZE}) = {bound}",
                psi.rows, psi.cols
            ),
        });
    }
    let subsets = minor_subsets(psi.rows, psi.cols, size);
    Ok(exec.map(subsets, |(r, c)| psi.minor(&r, &c)))
}

/// All principal `size x size` Pfaffians of the symbolic skew form, one per
/// `size`-subset of `{0..3n}` in colex order.
pub fn pfaffian_generators(n: usize, size: usize) -> Result<Vec<SparsePoly>> {
    pfaffian_generators_with(Exec::default(), n, size)
}

pub fn pfaffian_generators_with(exec: Exec, n: usize, size: usize) -> Result<Vec<SparsePoly>> {
    let bound = (3 * n).min(MAX_PFAFFIAN_SIZE);
    if size % 2 == 1 || size < 2 || size > bound {
        return Err(Error::SizeOutOfRange {
            size,
            bound: format!(
                "even with 2 <= size <= min(3n={}, {MAX_PFAFFIAN_SIZE}) = {bound}",
                3 * n
            ),
        });
    }
    let form = symbolic_skew_form(n);
    Ok(exec.map(colex_subsets(3 * n, size), |s| form.principal_pfaffian(&s)))
}
