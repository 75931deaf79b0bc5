//! Exact field scalars: arbitrary-precision rationals and prime fields `F_p`.
//!
//! Every computation in this crate fixes one [`Field`] up front and sticks to
//! it; there is no floating point anywhere. Mixing scalars from different
//! fields is a programming error and panics.

use num::rational::BigRational;
use num::{BigInt, One, Zero};
use rand::Rng;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// The coefficient field of a computation: the rationals, or `F_p` for a
/// prime `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    Rational,
    Fp(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    let p = p as u64;
    while k * k <= p {
        if p % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

impl Field {
    /// The prime field `F_p`. Panics if `p` is not a prime below `2^31`.
    pub fn fp(p: u32) -> Field {
        assert!(p < (1 << 31), "modulus {p} must be below 2^31");
        assert!(is_prime(p), "modulus {p} is not prime");
        Field::Fp(p)
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, x: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(x))),
            Field::Fp(p) => {
                let m = x.rem_euclid(p as i64) as u32;
                Scalar::Fp { p, v: m }
            }
        }
    }

    /// Uniform element: an integer from `pool` for the rationals, a uniform
    /// residue for `F_p`.
    pub fn random_element<R: Rng>(self, pool: (i64, i64), rng: &mut R) -> Scalar {
        match self {
            Field::Rational => self.from_i64(rng.gen_range(pool.0..=pool.1)),
            Field::Fp(p) => Scalar::Fp {
                p,
                v: rng.gen_range(0..p),
            },
        }
    }

    pub fn random_nonzero<R: Rng>(self, pool: (i64, i64), rng: &mut R) -> Scalar {
        loop {
            let s = self.random_element(pool, rng);
            if !s.is_zero() {
                return s;
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact field element. Arithmetic between elements of different fields
/// is rejected (panic).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u32, v: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse; `None` on zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(r.recip()))
                }
            }
            Scalar::Fp { p, v } => {
                if *v == 0 {
                    None
                } else {
                    Some(Scalar::Fp {
                        p: *p,
                        v: mod_inv(*v, *p),
                    })
                }
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Rat(_) => serde_json::Value::String(self.to_string()),
            Scalar::Fp { v, .. } => serde_json::Value::from(*v),
        }
    }
}

/// Extended Euclid; requires `0 < v < p` and `p` prime.
fn mod_inv(v: u32, p: u32) -> u32 {
    let (mut r0, mut r1) = (p as i64, v as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus not coprime to element");
    t0.rem_euclid(p as i64) as u32
}

fn check_same_field(a: &Scalar, b: &Scalar) {
    assert_eq!(
        a.field(),
        b.field(),
        "mixed-field arithmetic is rejected: {} vs {}",
        a.field(),
        b.field()
    );
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        check_same_field(self, rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: ((*a as u64 + *b as u64) % *p as u64) as u32,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        check_same_field(self, rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: ((*a as u64 + (*p - *b) as u64) % *p as u64) as u32,
            },
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        check_same_field(self, rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: ((*a as u64 * *b as u64) % *p as u64) as u32,
            },
            _ => unreachable!(),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        check_same_field(self, rhs);
        let inv = rhs.inv().expect("division by zero");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: if *v == 0 { 0 } else { *p - *v },
            },
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Rat(_) => serializer.serialize_str(&self.to_string()),
            Scalar::Fp { v, .. } => serializer.serialize_u32(*v),
        }
    }
}
