//! Exact arithmetic over the Gaussian rationals ℚ(i) and dense exact linear
//! algebra on top of it.

mod matrix;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use matrix::{Matrix, Solution};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

/// The four field operations accepted by [`scalar_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies a field operation; division by zero is an error.
pub fn scalar_arith(x: &Scalar, y: &Scalar, op: ArithOp) -> Result<Scalar> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(Rational::from_integer(n.into()), Rational::zero())
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::new(Rational::new(num.into(), den.into()), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::new(r, Rational::zero())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -&self.im)
    }

    /// `re² + im²`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Scalar::from_rational(self.re.recip()));
        }
        let n = self.norm();
        Ok(Scalar::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Serialized form: `[re, im]` as `p/q` strings.
    pub fn to_pair(&self) -> [String; 2] {
        [rational_to_string(&self.re), rational_to_string(&self.im)]
    }

    pub fn from_pair(re: &str, im: &str) -> Result<Self> {
        Ok(Scalar::new(parse_rational(re)?, parse_rational(im)?))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => Scalar::from_rational(&self.re * &rhs.re),
            (true, false) => Scalar::new(&self.re * &rhs.re, &self.re * &rhs.im),
            (false, true) => Scalar::new(&self.re * &rhs.re, &self.im * &rhs.re),
            (false, false) => {
                Scalar::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
            }
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.re, -&self.im)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

/// Text rendering: `3`, `-1/2`, `4i`, `-i`, `1/2 + 3i`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |im: &Rational| -> String {
            if im.is_one() {
                "i".to_string()
            } else if (-im).is_one() {
                "-i".to_string()
            } else {
                format!("{}i", rational_to_string(im))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", rational_to_string(&self.re)),
            (true, false) => write!(f, "{}", imag(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}", rational_to_string(&self.re), sign, imag(&self.im.abs()))
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pair().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [re, im] = <[String; 2]>::deserialize(deserializer)?;
        Scalar::from_pair(&re, &im).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn conjugate_product_is_norm() {
        let x = Scalar::new(q(1, 2), q(1, 1));
        let y = Scalar::new(q(1, 2), q(-1, 1));
        assert_eq!(&x * &y, Scalar::from_ratio(5, 4));
        assert_eq!(Scalar::from_rational(x.norm()), Scalar::from_ratio(5, 4));
    }

    #[test]
    fn additive_identity_and_i_squared() {
        let x = Scalar::new(q(-3, 7), q(2, 5));
        assert_eq!(&x + &Scalar::zero(), x);
        assert_eq!(Scalar::i().pow(2), Scalar::from_int(-1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let x = Scalar::from_int(3);
        assert_eq!(scalar_arith(&x, &Scalar::zero(), ArithOp::Div), Err(Error::DivisionByZero));
        assert_eq!(scalar_arith(&x, &Scalar::from_int(2), ArithOp::Div).unwrap(), Scalar::from_ratio(3, 2));
    }

    #[test]
    fn normalized_after_arithmetic() {
        let x = Scalar::from_ratio(2, 4);
        assert_eq!(x.re().numer(), &BigInt::from(1));
        assert_eq!(x.re().denom(), &BigInt::from(2));
        let y = &Scalar::from_ratio(1, 3) + &Scalar::from_ratio(2, 3);
        assert!(y.is_one());
        let neg = Scalar::from_ratio(1, -2);
        assert_eq!(rational_to_string(neg.re()), "-1/2");
    }

    #[test]
    fn text_and_pair_forms() {
        assert_eq!(Scalar::from_int(-8).to_string(), "-8");
        assert_eq!((&Scalar::i() * &Scalar::from_int(8)).to_string(), "8i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!(Scalar::new(q(1, 2), q(-3, 1)).to_string(), "1/2 - 3i");
        let s = Scalar::new(q(-7, 3), q(4, 1));
        assert_eq!(s.to_pair(), ["-7/3".to_string(), "4".to_string()]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"["-7/3","4"]"#);
        assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), s);
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn small_scalar() -> impl Strategy<Value = Scalar> {
        (-20i64..20, 1i64..9, -20i64..20, 1i64..9).prop_map(|(a, b, c, d)| Scalar::new(q(a, b), q(c, d)))
    }

    proptest! {
        #[test]
        fn field_axioms(x in small_scalar(), y in small_scalar(), z in small_scalar()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
        }
    }
}
