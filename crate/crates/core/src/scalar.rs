//! Scalars: exact rationals and a word-sized prime field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator; `0/1` is the canonical zero.
pub type Rational = num_rational::BigRational;

/// Default modulus for prime-field computations, 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p"` or `"p/q"`. Denominators must be positive and nonzero; a
/// non-reduced fraction such as `"2/4"` is accepted and normalized.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty rational".into());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let parse_int = |x: &str, what: &str| -> std::result::Result<BigInt, String> {
        let ok = !x.is_empty() && x.strip_prefix('-').unwrap_or(x).chars().all(|c| c.is_ascii_digit()) && x != "-";
        if !ok {
            return Err(format!("malformed {what} {x:?} in {s:?}"));
        }
        x.parse::<BigInt>()
            .map_err(|e| format!("malformed {what} in {s:?}: {e}"))
    };
    let n = parse_int(num, "numerator")?;
    let d = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with('-') {
                return Err(format!("negative denominator in {s:?}"));
            }
            let d = parse_int(d, "denominator")?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            d
        }
    };
    Ok(Rational::new(n, d))
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Arithmetic modulo a prime `p < 2^62`. Elements are `u64` values in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1u64 << 62) || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }

    pub fn from_bigint(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }

    /// Image of a rational; `None` when p divides the denominator.
    pub fn from_rational(&self, q: &Rational) -> Option<u64> {
        let d = self.from_bigint(q.denom());
        if d == 0 {
            return None;
        }
        Some(self.mul(self.from_bigint(q.numer()), self.inv(d)))
    }

    /// Symmetric lift of a residue into `(-p/2, p/2]`.
    pub fn lift(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            -((self.p - a) as i64)
        } else {
            a as i64
        }
    }
}

/// Deterministic Miller-Rabin; the base set is exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        acc
    };
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(
            parse_rational("-6/4").unwrap(),
            Rational::new(BigInt::from(-3), BigInt::from(2))
        );
        assert_eq!(format_rational(&parse_rational("-6/4").unwrap()), "-3/2");
        assert_eq!(format_rational(&parse_rational("0/7").unwrap()), "0");
        for bad in ["", "1/0", "a", "1/-2", "--1", "1/", "/3", "1.5", "-"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn primes() {
        assert!(is_prime(DEFAULT_PRIME));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(!is_prime(561));
        assert!(is_prime((1u64 << 61) - 1));
        assert!(PrimeField::new(1u64 << 62).is_err());
        assert!(PrimeField::new(91).is_err());
    }

    #[test]
    fn field_ops() {
        let f = PrimeField::new(101).unwrap();
        assert_eq!(f.mul(f.inv(7), 7), 1);
        assert_eq!(f.from_i64(-1), 100);
        assert_eq!(f.lift(100), -1);
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.mul(f.from_rational(&half).unwrap(), 2), 1);
        let bad = Rational::new(BigInt::from(1), BigInt::from(101));
        assert_eq!(f.from_rational(&bad), None);
    }
}
