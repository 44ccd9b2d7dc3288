//! Sparse polynomials in α, β, γ with weighted grading deg α = 2,
//! deg β = 4, deg γ = 6.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalars::Scalar;

pub const WEIGHTS: [u32; 3] = [2, 4, 6];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Alpha,
    Beta,
    Gamma,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Alpha, Var::Beta, Var::Gamma];

    fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Var::Alpha => "α",
            Var::Beta => "β",
            Var::Gamma => "γ",
        }
    }
}

/// `α^a β^b γ^c`, ordered by weighted degree and then lexicographically
/// with α > β > γ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub exps: [u32; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub fn new(alpha: u32, beta: u32, gamma: u32) -> Self {
        Monomial { exps: [alpha, beta, gamma] }
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0; 3];
        exps[v.index()] = 1;
        Monomial { exps }
    }

    pub fn weighted_degree(&self) -> u32 {
        self.exps.iter().zip(WEIGHTS).map(|(e, w)| e * w).sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: [0, 1, 2].map(|i| self.exps[i] + other.exps[i]) }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial { exps: [0, 1, 2].map(|i| other.exps[i] - self.exps[i]) })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: [0, 1, 2].map(|i| self.exps[i].max(other.exps[i])) }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weighted_degree().cmp(&other.weighted_degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return write!(f, "1");
        }
        for v in Var::ALL {
            match self.exp(v) {
                0 => {}
                1 => write!(f, "{}", v.symbol())?,
                e => write!(f, "{}^{}", v.symbol(), e)?,
            }
        }
        Ok(())
    }
}

/// A polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &Polynomial, q: &Polynomial, op: PolyOp) -> Polynomial {
    match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(m, Scalar::one())
    }

    pub fn var(v: Var) -> Self {
        Polynomial::monomial(Monomial::var(v))
    }

    pub fn alpha() -> Self {
        Polynomial::var(Var::Alpha)
    }

    pub fn beta() -> Self {
        Polynomial::var(Var::Beta)
    }

    pub fn gamma() -> Self {
        Polynomial::var(Var::Gamma)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &Scalar)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<Monomial> {
        self.leading_term().map(|(m, _)| *m)
    }

    /// Weighted degree of the top component; `None` for zero.
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::weighted_degree).max()
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Polynomial> {
        let (_, lc) = self.leading_term()?;
        Ok(self.scale(&lc.inv()?))
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn has_real_coefficients(&self) -> bool {
        self.terms.values().all(Scalar::is_real)
    }

    /// Splits into weighted-homogeneous parts keyed by degree.
    pub fn weighted_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weighted_degree()).or_default().terms.insert(*m, c.clone());
        }
        out
    }

    /// Substitutes constants for the assigned generators.
    pub fn specialize(&self, assignment: &Assignment) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut kept = [0u32; 3];
            for v in Var::ALL {
                let e = m.exp(v);
                match assignment.get(v) {
                    Some(value) => coeff = &coeff * &value.pow(e),
                    None => kept[v.index()] = e,
                }
            }
            out.add_term(Monomial { exps: kept }, &coeff);
        }
        out
    }

    /// Evaluates at a point.
    pub fn eval(&self, alpha: &Scalar, beta: &Scalar, gamma: &Scalar) -> Scalar {
        let a = Assignment::new()
            .set(Var::Alpha, alpha.clone())
            .set(Var::Beta, beta.clone())
            .set(Var::Gamma, gamma.clone());
        self.specialize(&a).coeff(&Monomial::ONE)
    }
}

/// A partial substitution `{α, β, γ} → Scalar`; unassigned generators are
/// kept symbolic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    values: [Option<Scalar>; 3],
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn set(mut self, v: Var, value: Scalar) -> Self {
        self.values[v.index()] = Some(value);
        self
    }

    pub fn get(&self, v: Var) -> Option<&Scalar> {
        self.values[v.index()].as_ref()
    }
}

impl From<Scalar> for Polynomial {
    fn from(c: Scalar) -> Self {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Self {
        Polynomial::constant(Scalar::from_int(n))
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = if c.re().is_zero() { c.im().is_negative() } else { c.is_real() && c.re().is_negative() };
            let mag = if neg { -c } else { c.clone() };
            let sep = match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let coeff = if !mag.is_real() && !mag.re().is_zero() { format!("({mag})") } else { mag.to_string() };
            if *m == Monomial::ONE {
                write!(f, "{sep}{coeff}")?;
            } else if mag.is_one() {
                write!(f, "{sep}{m}")?;
            } else {
                write!(f, "{sep}{coeff}{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    c: Scalar,
    e: [u32; 3],
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson { terms: self.terms().map(|(m, c)| TermJson { c: c.clone(), e: m.exps }).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = PolyJson::deserialize(deserializer)?;
        let mut p = Polynomial::zero();
        for t in json.terms {
            if p.terms.contains_key(&Monomial { exps: t.e }) {
                return Err(D::Error::custom("duplicate monomial"));
            }
            p.add_term(Monomial { exps: t.e }, &t.c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a() -> Polynomial {
        Polynomial::alpha()
    }
    fn b() -> Polynomial {
        Polynomial::beta()
    }
    fn g() -> Polynomial {
        Polynomial::gamma()
    }
    fn c(n: i64) -> Polynomial {
        Polynomial::from(n)
    }

    #[test]
    fn arithmetic_examples() {
        assert!(((a() + b()) * Polynomial::zero()).is_zero());
        assert_eq!(a() * (b() + c(8)), a() * b() + c(8) * a());
        let p = (a() * a() + b() - c(8)) * g();
        assert_eq!(p, a() * a() * g() + b() * g() - c(8) * g());
        assert_eq!(poly_arith(&a(), &a(), PolyOp::Sub), Polynomial::zero());
    }

    #[test]
    fn monomial_order() {
        // α² and β tie on weighted degree; lex puts α² first
        assert!(Monomial::new(2, 0, 0) > Monomial::new(0, 1, 0));
        assert!(Monomial::new(1, 1, 0) > Monomial::new(0, 0, 1));
        assert!(Monomial::new(1, 1, 0) > Monomial::new(0, 1, 0));
        assert_eq!((a() * a() + b() - c(8)).leading_monomial().unwrap(), Monomial::new(2, 0, 0));
        assert_eq!(Polynomial::zero().leading_term(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn weighted_component_examples() {
        let comps = (b() - c(8)).weighted_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[&4], b());
        assert_eq!(comps[&0], c(-8));
        let comps = (a() * a() + b() - c(8)).weighted_components();
        assert_eq!(comps[&4], a() * a() + b());
        assert_eq!(comps[&0], c(-8));
        assert!(Polynomial::zero().weighted_components().is_empty());
    }

    #[test]
    fn specialize_examples() {
        let zeta3 = a().pow(3) + c(5) * a() * b() + c(24) * a() + c(4) * g();
        let no_gamma = Assignment::new().set(Var::Gamma, Scalar::zero());
        assert_eq!(zeta3.specialize(&no_gamma), a().pow(3) + c(5) * a() * b() + c(24) * a());
        assert_eq!(zeta3.specialize(&Assignment::new()), zeta3);
        let p = a() * (b() + c(8)) + g();
        let at = Assignment::new().set(Var::Beta, Scalar::from_int(8)).set(Var::Gamma, Scalar::zero());
        assert_eq!(p.specialize(&at), c(16) * a());
    }

    #[test]
    fn display_and_json() {
        let p = a() * a() + b() - c(8);
        assert_eq!(p.to_string(), "α^2 + β - 8");
        let q = a() - Polynomial::constant(Scalar::i() * Scalar::from_int(8));
        assert_eq!(q.to_string(), "α - 8i");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"c":["1","0"],"e":[2,0,0]},{"c":["1","0"],"e":[0,1,0]},{"c":["-8","0"],"e":[0,0,0]}]}"#
        );
        assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), p);
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(((0u32..3, 0u32..2, 0u32..2), -5i64..5), 0..5).prop_map(|ts| {
            Polynomial::from_terms(ts.into_iter().map(|((x, y, z), k)| (Monomial::new(x, y, z), Scalar::from_int(k))))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &q, &q * &p);
        }

        #[test]
        fn components_convolve(p in small_poly(), q in small_poly()) {
            let cp = p.weighted_components();
            let cq = q.weighted_components();
            let mut expect: BTreeMap<u32, Polynomial> = BTreeMap::new();
            for (dp, xp) in &cp {
                for (dq, xq) in &cq {
                    let e = expect.entry(dp + dq).or_default();
                    *e = &*e + &(xp * xq);
                }
            }
            expect.retain(|_, v| !v.is_zero());
            prop_assert_eq!((&p * &q).weighted_components(), expect);
            let total = cp.values().fold(Polynomial::zero(), |acc, x| acc + x);
            prop_assert_eq!(total, p);
        }

        #[test]
        fn specialize_is_multiplicative(p in small_poly(), q in small_poly(), x in -3i64..3, y in -3i64..3) {
            let s = Assignment::new().set(Var::Beta, Scalar::from_int(x)).set(Var::Gamma, Scalar::from_int(y));
            prop_assert_eq!((&p * &q).specialize(&s), &p.specialize(&s) * &q.specialize(&s));
        }
    }
}
