use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The coefficient field: exact rationals, or a prime field F_p.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

/// Default prime for the finite-field backend.
pub const DEFAULT_PRIME: u64 = 32003;

impl FieldSpec {
    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Fp(p) => Scalar::Fp {
                val: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// Parses "q" or "fp:P".
    pub fn parse(s: &str) -> Result<FieldSpec> {
        if s == "q" {
            return Ok(FieldSpec::Q);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad prime in field spec '{s}'")))?;
            if p < 2 || !is_prime(p) {
                return Err(Error::InvalidInput(format!("{p} is not prime")));
            }
            return Ok(FieldSpec::Fp(p));
        }
        Err(Error::InvalidInput(format!(
            "unknown field '{s}' (expected 'q' or 'fp:P')"
        )))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "q"),
            FieldSpec::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. F_p values are kept reduced to [0, p).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { val: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Q,
            Scalar::Fp { p, .. } => FieldSpec::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(r) => Scalar::Q(r.recip()),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: fp_inv(*val, *p),
                p: *p,
            },
        })
    }

    pub fn from_rational(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Q(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Serialized form: rationals as "n" or "n/d", F_p as the canonical
    /// representative in decimal.
    pub fn to_repr(&self) -> String {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => val.to_string(),
        }
    }

    pub fn parse(s: &str, field: FieldSpec) -> Result<Scalar> {
        let bad = || Error::InvalidInput(format!("bad scalar '{s}'"));
        match field {
            FieldSpec::Q => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Q(BigRational::new(n, d)))
            }
            FieldSpec::Fp(p) => {
                let v: i64 = s.parse().map_err(|_| bad())?;
                Ok(FieldSpec::Fp(p).from_i64(v))
            }
        }
    }

    /// Numerator/denominator view; only valid for rationals.
    pub fn as_rational(&self) -> &BigRational {
        match self {
            Scalar::Q(r) => r,
            Scalar::Fp { .. } => panic!("as_rational on an F_p element"),
        }
    }
}

fn check_fields(a: &Scalar, b: &Scalar) {
    debug_assert_eq!(a.field(), b.field(), "mixed-field scalar arithmetic");
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit; p fits well below 2^63
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "non-invertible element mod {p}");
    t0.rem_euclid(p as i128) as u64
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        check_fields(self, rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                val: (a + b) % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        check_fields(self, rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                val: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: if *val == 0 { 0 } else { p - val },
                p: *p,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_repr())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roundtrip() {
        let x = Scalar::from_rational(-3, 6);
        assert_eq!(x.to_repr(), "-1/2");
        let y = Scalar::parse("-1/2", FieldSpec::Q).unwrap();
        assert_eq!(x, y);
        assert_eq!((&x + &y).to_repr(), "-1");
    }

    #[test]
    fn fp_arithmetic() {
        let f = FieldSpec::Fp(7);
        let a = f.from_i64(5);
        let b = f.from_i64(4);
        assert_eq!((&a * &b).to_repr(), "6");
        assert_eq!((&a + &b).to_repr(), "2");
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(f.from_i64(-1).to_repr(), "6");
    }

    #[test]
    fn field_spec_parse() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Q);
        assert_eq!(FieldSpec::parse("fp:32003").unwrap(), FieldSpec::Fp(32003));
        assert!(FieldSpec::parse("fp:32004").is_err());
        assert!(FieldSpec::parse("r").is_err());
    }
}
