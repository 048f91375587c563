//! Exact 3-tensors `x = sum_i e_i (x) A_i` in `U* (x) V* (x) W*`, with an optional
//! partial-symmetry flag for `U* (x) S^2 V*`.

mod file;

pub use file::{read_tensor_file, tensor_from_json, tensor_to_json, write_tensor_file};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::{int, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor3 {
    m: usize,
    n: usize,
    k: usize,
    /// Row-major `[i][a][b]`.
    entries: Vec<Rational>,
    symmetric: bool,
}

impl Tensor3 {
    pub fn zeros(m: usize, n: usize, k: usize, symmetric: bool) -> Result<Self> {
        if symmetric && n != k {
            return Err(Error::DimensionMismatch(format!(
                "symmetric tensor needs k = n, got n={n}, k={k}"
            )));
        }
        Ok(Tensor3 {
            m,
            n,
            k,
            entries: vec![Rational::zero(); m * n * k],
            symmetric,
        })
    }

    /// Builds a tensor from its slices `A_1, ..., A_m` (all `n x k`). With
    /// `symmetric` every slice must be a symmetric matrix.
    pub fn from_slices(slices: &[ExactMatrix], symmetric: bool) -> Result<Self> {
        let m = slices.len();
        let (n, k) = slices.first().map_or((0, 0), |s| (s.rows(), s.cols()));
        if slices.iter().any(|s| s.rows() != n || s.cols() != k) {
            return Err(Error::DimensionMismatch("slices must share one shape".into()));
        }
        if symmetric {
            if let Some(i) = slices.iter().position(|s| !s.is_symmetric()) {
                return Err(Error::DimensionMismatch(format!("slice {i} is not symmetric")));
            }
        }
        let entries = slices.iter().flat_map(|s| s.entries().iter().cloned()).collect();
        Ok(Tensor3 {
            m,
            n,
            k,
            entries,
            symmetric,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.m, self.n, self.k)
    }

    #[inline]
    pub fn entry(&self, i: usize, a: usize, b: usize) -> &Rational {
        &self.entries[(i * self.n + a) * self.k + b]
    }

    pub fn slice(&self, i: usize) -> ExactMatrix {
        ExactMatrix::from_fn(self.n, self.k, |a, b| self.entry(i, a, b).clone())
    }

    /// The `m` slices `A_i`, each `n x k`.
    pub fn slices(&self) -> Vec<ExactMatrix> {
        (0..self.m).map(|i| self.slice(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// The same tensor viewed in `U* (x) V* (x) W*` without the symmetry flag.
    pub fn forget_symmetry(&self) -> Self {
        Tensor3 {
            symmetric: false,
            ..self.clone()
        }
    }

    /// Entrywise sum; the result is symmetric iff both inputs are.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch(format!(
                "{:?} + {:?}",
                self.dims(),
                other.dims()
            )));
        }
        Ok(Tensor3 {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
            symmetric: self.symmetric && other.symmetric,
            ..*self
        })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Tensor3 {
            entries: self.entries.iter().map(|x| x * s).collect(),
            ..self.clone()
        }
    }

    /// `u (x) v (x) w`.
    pub fn outer(u: &[Rational], v: &[Rational], w: &[Rational]) -> Self {
        let (m, n, k) = (u.len(), v.len(), w.len());
        let mut entries = Vec::with_capacity(m * n * k);
        for ui in u {
            for va in v {
                let uv = ui * va;
                for wb in w {
                    entries.push(&uv * wb);
                }
            }
        }
        Tensor3 {
            m,
            n,
            k,
            entries,
            symmetric: false,
        }
    }

    /// `u (x) v (x) v`, flagged symmetric.
    pub fn outer_sym(u: &[Rational], v: &[Rational]) -> Self {
        Tensor3 {
            symmetric: true,
            ..Self::outer(u, v, v)
        }
    }
}

/// Slices of `x` (free-function form).
pub fn slices(x: &Tensor3) -> Vec<ExactMatrix> {
    x.slices()
}

/// Named tensors: `ex23_kappa464`, `rank_one(m,n)` and `zero(m,n,k)`.
///
/// `ex23_kappa464` is `sum_{i=1..3} u_i (x) (v_1 v_{i+1} + v_{i+1} v_1)` with
/// `m = 3`, `n = 4`, whose kappa vector is `(4, 6, 4)`. `rank_one(m,n)` is
/// `e_1 (x) v_1 (x) v_1`. `zero(m,n,k)` is flagged symmetric when `n = k`.
pub fn example_tensor(name: &str) -> Result<Tensor3> {
    let unknown = || Error::UnknownExample(name.to_string());
    let name = name.trim();
    if name == "ex23_kappa464" {
        let slices: Vec<ExactMatrix> = (1..=3)
            .map(|i| {
                let mut a = ExactMatrix::zeros(4, 4);
                a.set(0, i, int(1));
                a.set(i, 0, int(1));
                a
            })
            .collect();
        return Tensor3::from_slices(&slices, true);
    }
    let args = |prefix: &str| -> Option<Vec<usize>> {
        let inner = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
        inner.split(',').map(|s| s.trim().parse().ok()).collect()
    };
    if let Some(a) = args("rank_one") {
        let [m, n] = a[..] else { return Err(unknown()) };
        if m == 0 || n == 0 {
            return Err(unknown());
        }
        let mut x = Tensor3::zeros(m, n, n, true)?;
        x.entries[0] = int(1);
        return Ok(x);
    }
    if let Some(a) = args("zero") {
        let [m, n, k] = a[..] else { return Err(unknown()) };
        return Tensor3::zeros(m, n, k, n == k);
    }
    Err(unknown())
}

/// Integers uniform on `[-9, 9]` from ChaCha8 seeded with `seed`.
struct EntrySource(ChaCha8Rng);

impl EntrySource {
    fn new(seed: u64) -> Self {
        EntrySource(ChaCha8Rng::seed_from_u64(seed))
    }

    fn vector(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| int(self.0.gen_range(-9..=9))).collect()
    }
}

/// `sum_{t=1..r} u_t (x) v_t (x) v_t` (symmetric) or `sum u_t (x) v_t (x) w_t`
/// with `k = n` (general). Coordinates are drawn from ChaCha8 seeded with
/// `seed`, in the order `u_1, v_1, [w_1,] u_2, ...`, so the output is fixed
/// by the arguments on every platform.
pub fn random_rank_r(m: usize, n: usize, r: usize, seed: u64, symmetric: bool) -> Tensor3 {
    if symmetric {
        let mut src = EntrySource::new(seed);
        let mut x = Tensor3::zeros(m, n, n, true).expect("k = n");
        for _ in 0..r {
            let u = src.vector(m);
            let v = src.vector(n);
            x = x.add(&Tensor3::outer_sym(&u, &v)).expect("same dims");
        }
        x
    } else {
        random_rank_r_general(m, n, n, r, seed)
    }
}

/// General-case sampler with an independent third dimension `k`.
pub fn random_rank_r_general(m: usize, n: usize, k: usize, r: usize, seed: u64) -> Tensor3 {
    let mut src = EntrySource::new(seed);
    let mut x = Tensor3::zeros(m, n, k, false).expect("general");
    for _ in 0..r {
        let u = src.vector(m);
        let v = src.vector(n);
        let w = src.vector(k);
        x = x.add(&Tensor3::outer(&u, &v, &w)).expect("same dims");
    }
    x
}

/// A tensor with independent uniform entries in `[-9, 9]` (symmetrized slices
/// when `symmetric`); used as a stand-in for a generic point.
pub fn random_tensor(m: usize, n: usize, k: usize, seed: u64, symmetric: bool) -> Result<Tensor3> {
    let mut x = Tensor3::zeros(m, n, k, symmetric)?;
    let mut src = EntrySource::new(seed);
    for i in 0..m {
        for a in 0..n {
            let lo = if symmetric { a } else { 0 };
            for b in lo..k {
                let v = src.vector(1).remove(0);
                if symmetric {
                    x.entries[(i * n + b) * k + a] = v.clone();
                }
                x.entries[(i * n + a) * k + b] = v;
            }
        }
    }
    Ok(x)
}

fn check_invertible(g: &ExactMatrix, dim: usize) -> Result<()> {
    if g.rows() != dim || g.cols() != dim {
        return Err(Error::DimensionMismatch(format!(
            "group element is {}x{}, expected {dim}x{dim}",
            g.rows(),
            g.cols()
        )));
    }
    if g.rank() < dim {
        return Err(Error::SingularGroupElement);
    }
    Ok(())
}

/// Action of `(g, h)` in `GL(m) x GL(n)`: `A'_i = sum_j g_ij h A_j h^T`. For a
/// non-symmetric tensor `h` acts on both the `V` and `W` factors, so `n = k`
/// is required; use [`apply_gl3`] otherwise.
pub fn apply_gl(g: &ExactMatrix, h: &ExactMatrix, x: &Tensor3) -> Result<Tensor3> {
    apply_gl3(g, h, h, x)
}

/// Action of `(g, h, l)` in `GL(m) x GL(n) x GL(k)`: `A'_i = sum_j g_ij h A_j l^T`.
/// The symmetry flag is kept when `h = l`.
pub fn apply_gl3(g: &ExactMatrix, h: &ExactMatrix, l: &ExactMatrix, x: &Tensor3) -> Result<Tensor3> {
    check_invertible(g, x.m)?;
    check_invertible(h, x.n)?;
    check_invertible(l, x.k)?;
    let lt = l.transpose();
    let moved: Vec<ExactMatrix> = x.slices().iter().map(|a| h.mul(a)?.mul(&lt)).collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(x.m);
    for i in 0..x.m {
        let mut acc = ExactMatrix::zeros(x.n, x.k);
        for (j, mj) in moved.iter().enumerate() {
            let c = g.get(i, j);
            if !c.is_zero() {
                acc = acc.add(&mj.scale(c))?;
            }
        }
        out.push(acc);
    }
    let symmetric = x.symmetric && h == l;
    let mut y = Tensor3::from_slices(&out, false)?;
    y.symmetric = symmetric;
    if x.m == 0 {
        y.n = x.n;
        y.k = x.k;
    }
    Ok(y)
}
