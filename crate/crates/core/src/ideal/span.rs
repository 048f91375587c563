//! Dimension of, and membership in, the span of homogeneous polynomials over
//! a prime field.
//!
//! The coefficient matrix (polynomials by monomials) is block diagonal once
//! monomials are grouped into the connected components of the
//! "shares a polynomial" relation; for the torus-homogeneous generators of
//! this crate the components are the weight spaces. Each block is reduced
//! independently by dense elimination mod `p`.

use std::collections::HashMap;

use super::poly::{Monomial, SparsePoly};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matrix::FpMatrix;
use crate::scalar::PrimeField;

fn check_compatible(polys: &[&SparsePoly]) -> Result<Option<usize>> {
    let mut degree: Option<usize> = None;
    let coords = polys.first().map(|p| p.coords());
    for p in polys {
        if Some(p.coords()) != coords {
            return Err(Error::CoordinateMismatch);
        }
        if !p.is_homogeneous() {
            let lo = p.terms().first().map_or(0, |t| t.0.degree());
            return Err(Error::MixedDegrees(lo, p.degree().unwrap_or(0)));
        }
        if let Some(d) = p.degree() {
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => return Err(Error::MixedDegrees(e, d)),
                _ => {}
            }
        }
    }
    Ok(degree)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

fn rank_mod(polys: &[&SparsePoly], field: PrimeField, exec: Exec) -> usize {
    let mut index: HashMap<&Monomial, usize> = HashMap::new();
    let mut monos: Vec<&Monomial> = Vec::new();
    for p in polys {
        for (m, _) in p.terms() {
            index.entry(m).or_insert_with(|| {
                monos.push(m);
                monos.len() - 1
            });
        }
    }
    let mut uf = UnionFind((0..monos.len()).collect());
    for p in polys {
        let mut it = p.terms().iter().map(|(m, _)| index[m]);
        if let Some(first) = it.next() {
            for other in it {
                uf.union(first, other);
            }
        }
    }
    // Component id -> (rows, local column numbering).
    let mut comp_of_root: HashMap<usize, usize> = HashMap::new();
    let mut comps: Vec<(Vec<usize>, HashMap<usize, usize>)> = Vec::new();
    for (pi, p) in polys.iter().enumerate() {
        let Some((m, _)) = p.terms().first() else { continue };
        let root = uf.find(index[m]);
        let c = *comp_of_root.entry(root).or_insert_with(|| {
            comps.push((Vec::new(), HashMap::new()));
            comps.len() - 1
        });
        let (rows, cols) = &mut comps[c];
        rows.push(pi);
        for (m, _) in p.terms() {
            let next = cols.len();
            cols.entry(index[m]).or_insert(next);
        }
    }
    exec.map(comps, |(rows, cols)| {
        let mut mat = FpMatrix::zeros(rows.len(), cols.len(), field);
        for (r, &pi) in rows.iter().enumerate() {
            for (m, c) in polys[pi].terms() {
                mat.set(r, cols[&index[m]], field.from_i64(*c));
            }
        }
        mat.rank()
    })
    .into_iter()
    .sum()
}

/// Dimension over `F_p` of the span of homogeneous polynomials of one degree.
pub fn span_dimension(polys: &[SparsePoly], p: u64) -> Result<usize> {
    span_dimension_with(Exec::default(), polys, p)
}

pub fn span_dimension_with(exec: Exec, polys: &[SparsePoly], p: u64) -> Result<usize> {
    let field = PrimeField::new(p)?;
    let refs: Vec<&SparsePoly> = polys.iter().collect();
    check_compatible(&refs)?;
    Ok(rank_mod(&refs, field, exec))
}

/// Whether `f` lies in the `F_p`-span of `polys`.
pub fn in_span(f: &SparsePoly, polys: &[SparsePoly], p: u64) -> Result<bool> {
    in_span_with(Exec::default(), f, polys, p)
}

pub fn in_span_with(exec: Exec, f: &SparsePoly, polys: &[SparsePoly], p: u64) -> Result<bool> {
    let field = PrimeField::new(p)?;
    let mut refs: Vec<&SparsePoly> = polys.iter().collect();
    check_compatible(&refs)?;
    if f.is_zero() {
        return Ok(true);
    }
    refs.push(f);
    check_compatible(&refs)?;
    let with = rank_mod(&refs, field, exec);
    refs.pop();
    Ok(with == rank_mod(&refs, field, exec))
}
