//! Exact field coefficients: arbitrary-precision rationals or residues mod an
//! odd prime p < 2^31. The characteristic is a ring-wide constant; mixing
//! characteristics inside one arithmetic operation is a bug, not an error.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// A coefficient in Q (characteristic 0) or in F_p.
///
/// Rationals are kept in lowest terms with positive denominator (maintained
/// by `BigRational`); residues are reduced into [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Mod { value: u64, prime: u32 },
}

impl Coeff {
    pub fn zero(characteristic: u32) -> Self {
        match characteristic {
            0 => Coeff::Rat(BigRational::zero()),
            p => Coeff::Mod { value: 0, prime: p },
        }
    }

    pub fn one(characteristic: u32) -> Self {
        match characteristic {
            0 => Coeff::Rat(BigRational::one()),
            p => Coeff::Mod { value: 1, prime: p },
        }
    }

    pub fn from_i64(characteristic: u32, n: i64) -> Self {
        match characteristic {
            0 => Coeff::Rat(BigRational::from_integer(BigInt::from(n))),
            p => {
                let p64 = p as i64;
                Coeff::Mod {
                    value: n.rem_euclid(p64) as u64,
                    prime: p,
                }
            }
        }
    }

    /// Exact fraction n/d. In F_p the denominator is inverted; a denominator
    /// divisible by p is rejected.
    pub fn ratio(characteristic: u32, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::BadCharacteristic {
                denominator: "0".to_string(),
            });
        }
        match characteristic {
            0 => Ok(Coeff::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            p => {
                let d = den.rem_euclid(p as i64) as u64;
                if d == 0 {
                    return Err(Error::BadCharacteristic {
                        denominator: den.to_string(),
                    });
                }
                let n = num.rem_euclid(p as i64) as u64;
                Ok(Coeff::Mod {
                    value: mul_mod(n, inv_mod(d, p as u64), p as u64),
                    prime: p,
                })
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Coeff::Rat(_) => 0,
            Coeff::Mod { prime, .. } => *prime,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Mod { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Mod { value: a, prime: p }, Coeff::Mod { value: b, prime: q }) => {
                assert_eq!(p, q, "coefficient characteristic mismatch");
                Coeff::Mod {
                    value: (a + b) % (*p as u64),
                    prime: *p,
                }
            }
            _ => panic!("coefficient characteristic mismatch"),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a - b),
            (Coeff::Mod { value: a, prime: p }, Coeff::Mod { value: b, prime: q }) => {
                assert_eq!(p, q, "coefficient characteristic mismatch");
                let m = *p as u64;
                Coeff::Mod {
                    value: (a + m - b) % m,
                    prime: *p,
                }
            }
            _ => panic!("coefficient characteristic mismatch"),
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Mod { value: a, prime: p }, Coeff::Mod { value: b, prime: q }) => {
                assert_eq!(p, q, "coefficient characteristic mismatch");
                Coeff::Mod {
                    value: mul_mod(*a, *b, *p as u64),
                    prime: *p,
                }
            }
            _ => panic!("coefficient characteristic mismatch"),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Mod { value: 0, prime } => Coeff::Mod {
                value: 0,
                prime: *prime,
            },
            Coeff::Mod { value, prime } => Coeff::Mod {
                value: *prime as u64 - value,
                prime: *prime,
            },
        }
    }

    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "inverse of zero coefficient");
        match self {
            Coeff::Rat(a) => Coeff::Rat(a.recip()),
            Coeff::Mod { value, prime } => Coeff::Mod {
                value: inv_mod(*value, *prime as u64),
                prime: *prime,
            },
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Mod { value, .. } => write!(f, "{}", value),
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    // a, b < p < 2^31, so the product fits in u64.
    (a * b) % p
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "element not invertible mod {}", p);
    t.rem_euclid(p as i64) as u64
}

/// Trial-division primality test, adequate for p < 2^31.
pub fn is_odd_prime(p: u32) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    let p64 = p as u64;
    while d * d <= p64 {
        if p64 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Rationals are printed with an explicit sign-free numerator by the poly
/// printer; this reports whether the coefficient is negative.
pub fn is_negative(c: &Coeff) -> bool {
    match c {
        Coeff::Rat(r) => r.is_negative(),
        Coeff::Mod { .. } => false,
    }
}
