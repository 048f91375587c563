//! Kappa vectors, border-rank lower bounds, secant membership certificates and
//! a few related probes.
//!
//! Dimensions returned by [`terracini_dimension`] are projective: the affine
//! cone over `sigma_r` has one more dimension.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::flatten::{binomial, colex_subsets, exterior_flattening, pfaffian_form};
use crate::matrix::{ExactMatrix, FpMatrix};
use crate::scalar::{int, PrimeField, Rational};
use crate::tensor::Tensor3;

/// `(kappa_0, ..., kappa_{m-1})`, the ranks of the exterior flattenings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaVector {
    pub values: Vec<usize>,
}

impl fmt::Display for KappaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn kappa(x: &Tensor3) -> KappaVector {
    kappa_with(Exec::default(), x)
}

pub fn kappa_with(exec: Exec, x: &Tensor3) -> KappaVector {
    let values = exec.map_range(0..x.m(), |j| exterior_flattening(x, j).expect("j < m").rank());
    KappaVector { values }
}

/// `max_j ceil(kappa_j / C(m-1, j))`.
pub fn border_rank_lower_bound(x: &Tensor3) -> usize {
    bound_from_kappa(&kappa(x))
}

pub fn bound_from_kappa(kappa: &KappaVector) -> usize {
    let m = kappa.values.len();
    kappa
        .values
        .iter()
        .enumerate()
        .map(|(j, &v)| v.div_ceil(binomial(m - 1, j)))
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Kappa0,
    Kappa1,
}

impl Stage {
    pub fn as_str(self) -> &'static str {
        match self {
            Stage::Kappa0 => "kappa0",
            Stage::Kappa1 => "kappa1",
        }
    }
}

/// A nonvanishing minor of `psi_0` or principal Pfaffian of the skew form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Minor { rows: Vec<usize>, cols: Vec<usize> },
    Principal(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub r: usize,
    pub member: bool,
    pub kappa: KappaVector,
    pub theorem_backed: bool,
    pub violated_stage: Option<Stage>,
    pub witness: Option<Witness>,
}

impl MembershipCertificate {
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("r".into(), json!(self.r));
        obj.insert("member".into(), json!(self.member));
        obj.insert("theorem_backed".into(), json!(self.theorem_backed));
        obj.insert("kappa".into(), json!(self.kappa.values));
        obj.insert("violated_stage".into(), json!(self.violated_stage.map(Stage::as_str)));
        match &self.witness {
            Some(Witness::Minor { rows, cols }) => {
                obj.insert("witness_rows".into(), json!(rows));
                obj.insert("witness_cols".into(), json!(cols));
            }
            Some(Witness::Principal(idx)) => {
                obj.insert("witness_principal".into(), json!(idx));
            }
            None => {}
        }
        Value::Object(obj)
    }
}

/// Decides `kappa_0 <= r` (and `kappa_1 <= 2r` when `m = 3`) for a symmetric
/// tensor. For `m = 2`, and for `m = 3` with `r <= 5`, membership is exactly
/// membership in `sigma_r`; for `m = 3`, `r >= 6` it is only necessary, and
/// `theorem_backed` is false.
///
/// On failure the witness holds sorted 0-based row and column indices of a
/// nonzero minor of `psi_0`, or principal indices of a nonzero Pfaffian of
/// the skew form.
pub fn certify_membership(x: &Tensor3, r: usize) -> Result<MembershipCertificate> {
    let m = x.m();
    if !x.is_symmetric() || !(m == 2 || m == 3) {
        return Err(Error::Unsupported(
            "membership certificates need a symmetric tensor with m = 2 or 3; use kappa or the lower bound instead"
                .into(),
        ));
    }
    let kappa = kappa(x);
    let mut cert = MembershipCertificate {
        r,
        member: true,
        kappa,
        theorem_backed: m == 2 || r <= 5,
        violated_stage: None,
        witness: None,
    };
    let profile = exterior_flattening(x, 0)?.matrix.rank_profile();
    if profile.rank > r {
        cert.member = false;
        cert.violated_stage = Some(Stage::Kappa0);
        let sorted = |v: &[usize]| {
            let mut v = v.to_vec();
            v.sort_unstable();
            v
        };
        cert.witness = Some(Witness::Minor {
            rows: sorted(&profile.pivot_rows[..=r]),
            cols: sorted(&profile.pivot_cols[..=r]),
        });
        return Ok(cert);
    }
    if m == 3 {
        let skew = pfaffian_form(x)?.skew_profile()?;
        if skew.rank > 2 * r {
            cert.member = false;
            cert.violated_stage = Some(Stage::Kappa1);
            cert.witness = Some(Witness::Principal(skew.principal_witness(r + 1)));
        }
    }
    Ok(cert)
}

/// Result of [`subspace_compress`]: `x = sum_i e_i (x) B y_i B^T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Compression {
    pub n_prime: usize,
    /// `n x n_prime`; its pivot rows form an identity matrix.
    pub basis: ExactMatrix,
    pub y: Tensor3,
}

impl Compression {
    /// Expands `y` along the basis.
    pub fn expand(&self) -> Result<Tensor3> {
        let bt = self.basis.transpose();
        let slices = self
            .y
            .slices()
            .iter()
            .map(|s| self.basis.mul(s)?.mul(&bt))
            .collect::<Result<Vec<_>>>()?;
        if slices.is_empty() {
            return Tensor3::zeros(0, self.basis.rows(), self.basis.rows(), true);
        }
        Tensor3::from_slices(&slices, true)
    }
}

/// Smallest subspace of `V*` containing every column space of the slices,
/// with the tensor rewritten inside it. The basis is the reduced row echelon
/// basis of the stacked slices; `y_i` is `A_i` restricted to the pivot rows
/// and columns.
pub fn subspace_compress(x: &Tensor3) -> Result<Compression> {
    if !x.is_symmetric() {
        return Err(Error::Unsupported("subspace_compress needs a symmetric tensor".into()));
    }
    let (m, n, _) = x.dims();
    let stacked = ExactMatrix::from_fn(m * n, n, |row, c| x.entry(row / n, c, row % n).clone());
    let (reduced, pivots) = stacked.rref();
    let n_prime = pivots.len();
    let basis = ExactMatrix::from_fn(n, n_prime, |a, t| reduced.get(t, a).clone());
    let slices: Vec<ExactMatrix> = x.slices().iter().map(|s| s.submatrix(&pivots, &pivots)).collect();
    let y = if m == 0 {
        Tensor3::zeros(0, n_prime, n_prime, true)?
    } else {
        Tensor3::from_slices(&slices, true)?
    };
    Ok(Compression { n_prime, basis, y })
}

fn pencil_slices(x: &Tensor3) -> Result<[ExactMatrix; 3]> {
    if x.m() != 3 || x.n() != x.k() {
        return Err(Error::Unsupported(
            "the determinant pencil needs m = 3 and square slices".into(),
        ));
    }
    let s = x.slices();
    Ok([s[0].clone(), s[1].clone(), s[2].clone()])
}

/// Coefficients of the polynomial through `(i, values[i])`, `i = 0..len`, lowest degree first.
fn interpolate(values: &[Rational]) -> Vec<Rational> {
    let len = values.len();
    let mut dd = values.to_vec();
    for level in 1..len {
        for i in (level..len).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / int(level as i64);
        }
    }
    // Horner on the Newton form.
    let mut poly = vec![Rational::zero(); len];
    for i in (0..len).rev() {
        let node = int(i as i64);
        let mut next = vec![Rational::zero(); len];
        for (e, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e + 1 < len {
                next[e + 1] += c;
            }
            next[e] -= c * &node;
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly
}

/// The `C(n+2, 2)` coefficients of `det(t1 A1 + t2 A2 + t3 A3)` as
/// `([e1, e2, e3], coefficient)`, recovered exactly by interpolating
/// `det(A1 + s A2 + t A3)` on the grid `{0..n}^2`.
pub fn det_pencil_coefficients(x: &Tensor3) -> Result<Vec<([usize; 3], Rational)>> {
    det_pencil_coefficients_with(Exec::default(), x)
}

pub fn det_pencil_coefficients_with(exec: Exec, x: &Tensor3) -> Result<Vec<([usize; 3], Rational)>> {
    let [a1, a2, a3] = pencil_slices(x)?;
    let n = x.n();
    let side = n + 1;
    let grid = exec.map_range(0..side * side, |idx| {
        let (s, t) = (int((idx / side) as i64), int((idx % side) as i64));
        let pencil = a1.add(&a2.scale(&s)).and_then(|p| p.add(&a3.scale(&t)))?;
        pencil.determinant()
    });
    let grid = grid.into_iter().collect::<Result<Vec<_>>>()?;
    // Interpolate in t for each s, then in s for each power of t.
    let by_t: Vec<Vec<Rational>> = grid.chunks(side).map(interpolate).collect();
    let mut coeff = vec![vec![Rational::zero(); side]; side];
    for e3 in 0..side {
        let column: Vec<Rational> = by_t.iter().map(|row| row[e3].clone()).collect();
        for (e2, c) in interpolate(&column).into_iter().enumerate() {
            coeff[e2][e3] = c;
        }
    }
    let mut out = Vec::new();
    for (e2, row) in coeff.into_iter().enumerate() {
        for (e3, c) in row.into_iter().enumerate() {
            if e2 + e3 <= n {
                out.push(([n - e2 - e3, e2, e3], c));
            } else {
                debug_assert!(c.is_zero(), "pencil determinant has degree n");
            }
        }
    }
    Ok(out)
}

/// Whether `det(t1 A1 + t2 A2 + t3 A3)` vanishes identically (the locus `P`).
pub fn det_pencil_vanishes(x: &Tensor3) -> Result<bool> {
    Ok(det_pencil_coefficients(x)?.iter().all(|(_, c)| c.is_zero()))
}

/// `sum_i g_{a,i} A_i` for each row `a` of `g`.
fn project(x: &Tensor3, g: &[Vec<i64>]) -> Result<Tensor3> {
    let slices = x.slices();
    let projected: Vec<ExactMatrix> = g
        .iter()
        .map(|row| {
            let mut acc = ExactMatrix::zeros(x.n(), x.k());
            for (c, s) in row.iter().zip(&slices) {
                if *c != 0 {
                    acc = acc.add(&s.scale(&int(*c)))?;
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    Tensor3::from_slices(&projected, true)
}

/// Necessary condition for border rank `<= r` when `m >= 3`: every projection
/// of `U*` onto three coordinates, and `samples` random integer projections
/// `3 x m`, must have skew-form rank at most `2r`.
pub fn inherited_pfaffian_check(x: &Tensor3, r: usize, samples: usize, seed: u64) -> Result<bool> {
    inherited_pfaffian_check_with(Exec::default(), x, r, samples, seed)
}

pub fn inherited_pfaffian_check_with(exec: Exec, x: &Tensor3, r: usize, samples: usize, seed: u64) -> Result<bool> {
    let m = x.m();
    if !x.is_symmetric() || m < 3 {
        return Err(Error::Unsupported(
            "inherited Pfaffian check needs a symmetric tensor with m >= 3".into(),
        ));
    }
    let mut projections: Vec<Vec<Vec<i64>>> = colex_subsets(m, 3)
        .into_iter()
        .map(|t| t.iter().map(|&i| (0..m).map(|c| i64::from(c == i)).collect()).collect())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        projections.push(
            (0..3)
                .map(|_| (0..m).map(|_| rng.gen_range(-9..=9)).collect())
                .collect(),
        );
    }
    let ok = exec.map(projections, |g| -> Result<bool> {
        let y = project(x, &g)?;
        Ok(pfaffian_form(&y)?.skew_profile()?.rank <= 2 * r)
    });
    ok.into_iter().try_fold(true, |acc, v| Ok(acc && v?))
}

/// Projective dimension of `sigma_r` of `P(U*) x P(V*)` embedded by `O(1,2)`,
/// as the rank of the tangent spaces at `r` random points over `F_p`, minus
/// one. The maximum over `trials` independent samples is returned; trial `t`
/// draws from ChaCha8 seeded with `seed` on stream `t`.
pub fn terracini_dimension(m: usize, n: usize, r: usize, trials: usize, seed: u64, p: u64) -> Result<usize> {
    terracini_dimension_with(Exec::default(), m, n, r, trials, seed, p)
}

pub fn terracini_dimension_with(
    exec: Exec,
    m: usize,
    n: usize,
    r: usize,
    trials: usize,
    seed: u64,
    p: u64,
) -> Result<usize> {
    if m == 0 || n == 0 || r == 0 || trials == 0 {
        return Err(Error::Unsupported(
            "terracini_dimension needs m, n, r, trials >= 1".into(),
        ));
    }
    let field = PrimeField::new(p)?;
    let ranks = exec.map_range(0..trials, |t| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64);
        tangent_rank(field, m, n, r, &mut rng)
    });
    Ok(ranks.into_iter().max().unwrap_or(0).saturating_sub(1))
}

fn tangent_rank(field: PrimeField, m: usize, n: usize, r: usize, rng: &mut ChaCha8Rng) -> usize {
    let half = n * (n + 1) / 2;
    let sym = |lo: usize, hi: usize| hi * (hi + 1) / 2 + lo;
    let mut rows = Vec::with_capacity(r * (m + n));
    for _ in 0..r {
        let u: Vec<u64> = (0..m).map(|_| rng.gen_range(0..field.modulus())).collect();
        let v: Vec<u64> = (0..n).map(|_| rng.gen_range(0..field.modulus())).collect();
        // e_a (x) v v^T
        for a in 0..m {
            let mut row = vec![0u64; m * half];
            for hi in 0..n {
                for lo in 0..=hi {
                    row[a * half + sym(lo, hi)] = field.mul(v[lo], v[hi]);
                }
            }
            rows.push(row);
        }
        // u (x) (v e_c^T + e_c v^T)
        for c in 0..n {
            let mut row = vec![0u64; m * half];
            for a in 0..m {
                for hi in 0..n {
                    for lo in 0..=hi {
                        let mut s = 0;
                        if hi == c {
                            s = field.add(s, v[lo]);
                        }
                        if lo == c {
                            s = field.add(s, v[hi]);
                        }
                        row[a * half + sym(lo, hi)] = field.mul(u[a], s);
                    }
                }
            }
            rows.push(row);
        }
    }
    FpMatrix::from_rows(rows, field).rank()
}

/// Whether every `(size x size)` minor of `psi_0` vanishes, by rank.
pub fn kappa0_minors_vanish(x: &Tensor3, size: usize) -> bool {
    exterior_flattening(x, 0).map_or(true, |f| f.rank() < size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{apply_gl, example_tensor, random_rank_r, random_tensor};
    use crate::DEFAULT_PRIME;
    use proptest::prelude::*;
    use rand::Rng;

    fn random_invertible(n: usize, seed: u64) -> ExactMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect())
                .collect();
            let g = ExactMatrix::from_i64(&rows);
            if g.rank() == n {
                return g;
            }
        }
    }

    /// Rank-`r` symmetric tensor whose `V` factors lie in the first `sub` coordinates.
    fn in_subspace(m: usize, n: usize, sub: usize, r: usize, seed: u64) -> Tensor3 {
        let small = random_rank_r(m, sub, r, seed, true);
        let slices: Vec<ExactMatrix> = small
            .slices()
            .iter()
            .map(|s| {
                ExactMatrix::from_fn(n, n, |a, b| {
                    if a < sub && b < sub {
                        s.get(a, b).clone()
                    } else {
                        int(0)
                    }
                })
            })
            .collect();
        Tensor3::from_slices(&slices, true).unwrap()
    }

    #[test]
    fn kappa464_values() {
        let x = example_tensor("ex23_kappa464").unwrap();
        let k = kappa(&x);
        assert_eq!(k.values, [4, 6, 4]);
        assert_eq!(k.to_string(), "(4,6,4)");
        assert_eq!(border_rank_lower_bound(&x), 4);
        let cert = certify_membership(&x, 3).unwrap();
        assert!(!cert.member);
        assert_eq!(cert.violated_stage, Some(Stage::Kappa0));
        let Some(Witness::Minor { rows, cols }) = &cert.witness else {
            panic!("minor witness")
        };
        let psi0 = exterior_flattening(&x, 0).unwrap().matrix;
        assert!(!psi0.submatrix(rows, cols).determinant().unwrap().is_zero());
        assert!(det_pencil_vanishes(&x).unwrap());
        let c4 = certify_membership(&x, 4).unwrap();
        assert!(c4.member && c4.theorem_backed && c4.witness.is_none());
    }

    #[test]
    fn rank_one_and_zero() {
        let x = example_tensor("rank_one(4,3)").unwrap();
        assert_eq!(kappa(&x).values, [1, 3, 3, 1]);
        assert_eq!(border_rank_lower_bound(&x), 1);
        let z = example_tensor("zero(3,4,4)").unwrap();
        assert_eq!(kappa(&z).values, [0, 0, 0]);
        assert!(det_pencil_vanishes(&z).unwrap());
        assert_eq!(subspace_compress(&z).unwrap().n_prime, 0);
    }

    #[test]
    fn generic_n4() {
        let x = random_tensor(3, 4, 4, 7, true).unwrap();
        assert_eq!(kappa(&x).values, [4, 12, 4]);
        assert_eq!(border_rank_lower_bound(&x), 6);
        let cert = certify_membership(&x, 5).unwrap();
        assert!(!cert.member);
        assert_eq!(cert.violated_stage, Some(Stage::Kappa1));
        let Some(Witness::Principal(idx)) = &cert.witness else {
            panic!("principal witness")
        };
        assert_eq!(idx.len(), 12);
        let form = pfaffian_form(&x).unwrap();
        assert!(!form.submatrix(idx, idx).pfaffian().unwrap().is_zero());
        assert!(!det_pencil_vanishes(&x).unwrap());
    }

    #[test]
    fn pfaffian_hypersurface_at_n4() {
        for seed in 0..5 {
            let generic = random_tensor(3, 4, 4, seed, true).unwrap();
            assert!(!pfaffian_form(&generic).unwrap().pfaffian().unwrap().is_zero());
            let low = random_rank_r(3, 4, 5, seed, true);
            assert!(pfaffian_form(&low).unwrap().pfaffian().unwrap().is_zero());
        }
    }

    #[test]
    fn certify_preconditions_and_m2() {
        let general = random_rank_r(3, 3, 2, 1, false);
        assert!(matches!(certify_membership(&general, 2), Err(Error::Unsupported(_))));
        let m4 = random_rank_r(4, 3, 2, 1, true);
        assert!(certify_membership(&m4, 2).is_err());
        let x = random_rank_r(2, 4, 2, 3, true);
        let cert = certify_membership(&x, 2).unwrap();
        assert!(cert.member && cert.theorem_backed);
        let cert = certify_membership(&x, 1).unwrap();
        assert!(!cert.member && cert.theorem_backed);
        let big = random_rank_r(3, 6, 6, 3, true);
        assert!(!certify_membership(&big, 6).unwrap().theorem_backed);
    }

    #[test]
    fn certificate_json() {
        let x = example_tensor("ex23_kappa464").unwrap();
        let v = certify_membership(&x, 3).unwrap().to_json();
        assert_eq!(v["violated_stage"], json!("kappa0"));
        assert_eq!(v["kappa"], json!([4, 6, 4]));
        assert_eq!(v["witness_rows"].as_array().unwrap().len(), 4);
        assert!(v.get("witness_principal").is_none());
        let v = certify_membership(&x, 4).unwrap().to_json();
        assert_eq!(v["violated_stage"], Value::Null);
        assert!(v.get("witness_rows").is_none());
    }

    #[test]
    fn compression_cases() {
        let x = in_subspace(3, 5, 2, 3, 11);
        let c = subspace_compress(&x).unwrap();
        assert_eq!(c.n_prime, 2);
        assert_eq!(c.y.slice(0), x.slice(0).submatrix(&[0, 1], &[0, 1]));
        assert_eq!(c.expand().unwrap(), x);
        let generic = random_tensor(3, 4, 4, 2, true).unwrap();
        let c = subspace_compress(&generic).unwrap();
        assert_eq!(c.n_prime, 4);
        assert_eq!(c.basis, ExactMatrix::identity(4));
        assert_eq!(c.y, generic);
        assert!(subspace_compress(&random_rank_r(3, 3, 1, 0, false)).is_err());
    }

    #[test]
    fn pencil_coefficients() {
        // A1 = I, A2 = diag(1, 2), A3 = 0: det = (t1 + t2)(t1 + 2 t2) = t1^2 + 3 t1 t2 + 2 t2^2.
        let a1 = ExactMatrix::identity(2);
        let a2 = ExactMatrix::from_i64(&[vec![1, 0], vec![0, 2]]);
        let x = Tensor3::from_slices(&[a1, a2, ExactMatrix::zeros(2, 2)], true).unwrap();
        let coeffs = det_pencil_coefficients(&x).unwrap();
        assert_eq!(coeffs.len(), 6);
        for (e, c) in coeffs {
            let want = match e {
                [2, 0, 0] => 1,
                [1, 1, 0] => 3,
                [0, 2, 0] => 2,
                _ => 0,
            };
            assert_eq!(c, int(want), "{e:?}");
        }
        assert!(det_pencil_vanishes(&random_rank_r(2, 2, 1, 0, true)).is_err());
    }

    #[test]
    fn pencil_matches_direct_evaluation() {
        let x = random_tensor(3, 3, 3, 4, true).unwrap();
        let coeffs = det_pencil_coefficients(&x).unwrap();
        let s = x.slices();
        for (t1, t2, t3) in [(2, -1, 3), (-4, 5, 7), (1, 1, -1)] {
            let m = s[0]
                .scale(&int(t1))
                .add(&s[1].scale(&int(t2)))
                .unwrap()
                .add(&s[2].scale(&int(t3)))
                .unwrap();
            let direct = m.determinant().unwrap();
            let via: Rational = coeffs
                .iter()
                .map(|(e, c)| c * int(t1.pow(e[0] as u32) * t2.pow(e[1] as u32) * t3.pow(e[2] as u32)))
                .sum();
            assert_eq!(direct, via);
        }
    }

    #[test]
    fn inheritance() {
        let x = random_rank_r(3, 4, 3, 9, true);
        assert!(inherited_pfaffian_check(&x, 3, 4, 0).unwrap());
        assert_eq!(inherited_pfaffian_check(&x, 2, 4, 0).unwrap(), kappa(&x).values[1] <= 4);
        let x = random_rank_r(4, 4, 2, 5, true);
        assert!(inherited_pfaffian_check(&x, 2, 6, 1).unwrap());
        let g = random_tensor(4, 4, 4, 5, true).unwrap();
        assert!(!inherited_pfaffian_check(&g, 2, 6, 1).unwrap());
        assert!(inherited_pfaffian_check(&random_rank_r(2, 3, 1, 0, true), 1, 1, 0).is_err());
    }

    #[test]
    fn terracini_values() {
        assert_eq!(terracini_dimension(2, 3, 2, 3, 0, DEFAULT_PRIME).unwrap(), 7);
        assert_eq!(terracini_dimension(3, 4, 5, 3, 0, DEFAULT_PRIME).unwrap(), 28);
        assert_eq!(terracini_dimension(3, 6, 7, 2, 0, DEFAULT_PRIME).unwrap(), 55);
        assert_eq!(terracini_dimension(3, 2, 1, 1, 0, DEFAULT_PRIME).unwrap(), 3);
        assert!(terracini_dimension(0, 2, 1, 1, 0, DEFAULT_PRIME).is_err());
        assert!(terracini_dimension(2, 2, 1, 1, 0, 10).is_err());
    }

    #[test]
    fn terracini_policies_agree() {
        let a = terracini_dimension_with(Exec::Sequential, 3, 4, 4, 4, 9, DEFAULT_PRIME).unwrap();
        let b = terracini_dimension_with(Exec::Parallel, 3, 4, 4, 4, 9, DEFAULT_PRIME).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let poly = [int(3), int(-2), int(0), int(5)];
        let values: Vec<Rational> = (0..4)
            .map(|x| {
                poly.iter()
                    .enumerate()
                    .map(|(e, c)| c * int((x as i64).pow(e as u32)))
                    .sum()
            })
            .collect();
        assert_eq!(interpolate(&values), poly);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn symmetric_kappa_is_palindrome(seed in any::<u64>(), n in 2usize..5, r in 1usize..5) {
            let k = kappa(&random_rank_r(3, n, r, seed, true)).values;
            prop_assert_eq!(k[0], k[2]);
        }

        #[test]
        fn lower_bound_below_construction_rank(seed in any::<u64>(), m in 3usize..5, n in 2usize..5, r in 1usize..5) {
            let x = random_rank_r(m, n, r, seed, true);
            prop_assert!(border_rank_lower_bound(&x) <= r);
            let g = random_rank_r(m, n, r, seed, false);
            prop_assert!(border_rank_lower_bound(&g) <= r);
        }

        #[test]
        fn membership_is_monotone(seed in any::<u64>(), n in 2usize..6, r in 1usize..5) {
            let x = random_tensor(3, n, n, seed, true).unwrap();
            let mut seen = false;
            for s in 1..=2 * n {
                let member = certify_membership(&x, s).unwrap().member;
                prop_assert!(!seen || member);
                seen |= member;
            }
            let y = random_rank_r(3, n, r, seed, true);
            prop_assert!(certify_membership(&y, r).unwrap().member);
        }

        #[test]
        fn compression_round_trip(seed in any::<u64>(), sub in 1usize..4, r in 1usize..4) {
            let x = in_subspace(3, 4, sub, r, seed);
            let h = random_invertible(4, seed ^ 0x5a5a);
            let moved = apply_gl(&ExactMatrix::identity(3), &h, &x).unwrap();
            for t in [x, moved] {
                let c = subspace_compress(&t).unwrap();
                prop_assert_eq!(c.n_prime, kappa(&t).values[0]);
                prop_assert_eq!(kappa(&c.y).values[0], c.n_prime);
                prop_assert_eq!(c.expand().unwrap(), t.clone());
                prop_assert!(kappa0_minors_vanish(&t, c.n_prime + 1));
            }
        }

        #[test]
        fn terracini_within_bounds(m in 1usize..4, n in 1usize..5, r in 1usize..5, seed in any::<u64>()) {
            let d = terracini_dimension(m, n, r, 2, seed, DEFAULT_PRIME).unwrap();
            let ambient = m * n * (n + 1) / 2;
            prop_assert!(d < ambient);
            prop_assert!(d < r * (n + m - 1));
        }
    }
}
