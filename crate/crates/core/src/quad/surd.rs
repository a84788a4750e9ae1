use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The real number `(p + q·√d) / r`, kept in canonical form.
///
/// Canonical means `r > 0`, `gcd(p, q, r) = 1`, small square factors of `d`
/// moved into `q`, and `q = d = 0` whenever the value is rational. Two
/// canonical surds with the same radicand are equal iff their fields are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    r: BigInt,
}

/// Trial-division bound used when pulling square factors out of `d`.
const SQUARE_FACTOR_BOUND: u64 = 1 << 16;

impl QuadSurd {
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        d: impl Into<BigInt>,
        r: impl Into<BigInt>,
    ) -> Result<Self> {
        let (p, q, d, r) = (p.into(), q.into(), d.into(), r.into());
        if r.is_zero() {
            return Err(Error::Precondition("surd denominator is zero".into()));
        }
        if d.is_negative() {
            return Err(Error::Precondition("surd radicand is negative".into()));
        }
        Ok(Self::canonical(p, q, d, r))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        QuadSurd {
            p: n.into(),
            q: BigInt::zero(),
            d: BigInt::zero(),
            r: BigInt::one(),
        }
    }

    pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        Self::new(num, 0, 0, den)
    }

    /// `(p + q√d)/r` with small integer data; panics only on `r = 0`.
    pub fn from_parts(p: i64, q: i64, d: u64, r: i64) -> Self {
        Self::new(p, q, d, r).expect("nonzero denominator")
    }

    fn canonical(mut p: BigInt, mut q: BigInt, mut d: BigInt, mut r: BigInt) -> Self {
        if q.is_zero() || d.is_zero() {
            q = BigInt::zero();
            d = BigInt::zero();
        } else {
            let s = d.sqrt();
            if &s * &s == d {
                p += &q * s;
                q = BigInt::zero();
                d = BigInt::zero();
            } else {
                let mut f = 2u64;
                while f <= SQUARE_FACTOR_BOUND {
                    let ff = BigInt::from(f * f);
                    if ff > d {
                        break;
                    }
                    while (&d % &ff).is_zero() {
                        d /= &ff;
                        q *= f;
                    }
                    f += 1;
                }
            }
        }
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() && !g.is_zero() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        QuadSurd { p, q, d, r }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }
    /// Radicand; zero for rationals.
    pub fn d(&self) -> &BigInt {
        &self.d
    }
    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadSurd {
            p: self.p.clone(),
            q: -&self.q,
            d: self.d.clone(),
            r: self.r.clone(),
        }
    }

    fn common_radicand(&self, other: &Self) -> Option<BigInt> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Some(other.d.clone()),
            (_, true) => Some(self.d.clone()),
            _ if self.d == other.d => Some(self.d.clone()),
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let d = self.common_radicand(other)?;
        let p = &self.p * &other.r + &other.p * &self.r;
        let q = &self.q * &other.r + &other.q * &self.r;
        Some(Self::canonical(p, q, d, &self.r * &other.r))
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let d = self.common_radicand(other)?;
        let p = &self.p * &other.p + &self.q * &other.q * &d;
        let q = &self.p * &other.q + &self.q * &other.p;
        Some(Self::canonical(p, q, d, &self.r * &other.r))
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // r / (p + q√d) = r (p − q√d) / (p² − q² d)
        let den = &self.p * &self.p - &self.q * &self.q * &self.d;
        Some(Self::canonical(
            &self.r * &self.p,
            -(&self.r * &self.q),
            self.d.clone(),
            den,
        ))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        self.checked_mul(&other.recip()?)
    }

    /// Sign of the value, decided exactly.
    pub fn signum(&self) -> Ordering {
        sign_of(&self.p, &self.q, &self.d)
    }

    pub fn cmp_exact(&self, other: &Self) -> Option<Ordering> {
        self.checked_add(&-other).map(|diff| diff.signum())
    }

    /// `⌊x⌋`, computed with integer square roots only.
    pub fn floor(&self) -> BigInt {
        let t = floor_q_sqrt_d(&self.q, &self.d);
        Integer::div_floor(&(&self.p + t), &self.r)
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// `⌊x·10^digits⌋`.
    pub fn scaled_floor(&self, digits: u32) -> BigInt {
        (self * &QuadSurd::integer(BigInt::from(10u32).pow(digits))).floor()
    }

    /// Decimal rendering rounded to `digits` places.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        let half = QuadSurd::rational(1, 2).expect("nonzero");
        let n = (&(self * &QuadSurd::integer(scale.clone())) + &half).floor();
        let neg = n.is_negative();
        let n = n.abs();
        let (int, frac) = n.div_rem(&scale);
        let sign = if neg && !(int.is_zero() && frac.is_zero()) {
            "-"
        } else {
            ""
        };
        if digits == 0 {
            return format!("{sign}{int}");
        }
        format!(
            "{sign}{int}.{:0>width$}",
            frac.to_string(),
            width = digits as usize
        )
    }

    /// Display-only approximation.
    pub fn to_f64(&self) -> f64 {
        self.to_decimal(20).parse().unwrap_or(f64::NAN)
    }

    /// Integer value when rational with unit denominator.
    pub fn as_integer(&self) -> Option<&BigInt> {
        (self.is_rational() && self.r.is_one()).then_some(&self.p)
    }

    pub fn to_i64_floor(&self) -> Result<i64> {
        self.floor().to_i64().ok_or(Error::Overflow("surd floor"))
    }
}

/// `⌊q·√d⌋` for `d >= 0`.
fn floor_q_sqrt_d(q: &BigInt, d: &BigInt) -> BigInt {
    if q.is_zero() || d.is_zero() {
        return BigInt::zero();
    }
    let n = q * q * d;
    let s = n.sqrt();
    if q.is_positive() {
        s
    } else if &s * &s == n {
        -s
    } else {
        -s - 1
    }
}

fn sign_of(p: &BigInt, q: &BigInt, d: &BigInt) -> Ordering {
    if q.is_zero() || d.is_zero() {
        return p.sign().cmp_zero();
    }
    match (p.sign(), q.sign()) {
        (Sign::Minus, Sign::Minus) | (Sign::NoSign, Sign::Minus) | (Sign::Minus, Sign::NoSign) => {
            Ordering::Less
        }
        (Sign::Plus, Sign::Plus) | (Sign::NoSign, Sign::Plus) | (Sign::Plus, Sign::NoSign) => {
            Ordering::Greater
        }
        (Sign::NoSign, Sign::NoSign) => Ordering::Equal,
        (Sign::Plus, Sign::Minus) => (p * p).cmp(&(q * q * d)),
        (Sign::Minus, Sign::Plus) => (q * q * d).cmp(&(p * p)),
    }
}

trait CmpZero {
    fn cmp_zero(self) -> Ordering;
}

impl CmpZero for Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.cmp_exact(other)
    }
}

impl Neg for &QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd {
            p: -&self.p,
            q: -&self.q,
            d: self.d.clone(),
            r: self.r.clone(),
        }
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&QuadSurd> for &QuadSurd {
            type Output = QuadSurd;
            /// Panics when both operands are irrational with different radicands.
            fn $method(self, rhs: &QuadSurd) -> QuadSurd {
                let f: fn(&QuadSurd, &QuadSurd) -> Option<QuadSurd> = $body;
                f(self, rhs)
                    .unwrap_or_else(|| panic!("incompatible surd operands {self} and {rhs}"))
            }
        }
        impl $tr<QuadSurd> for QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: QuadSurd) -> QuadSurd {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QuadSurd> for QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: &QuadSurd) -> QuadSurd {
                (&self).$method(rhs)
            }
        }
        impl $tr<i64> for &QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: i64) -> QuadSurd {
                self.$method(&QuadSurd::integer(rhs))
            }
        }
        impl $tr<i64> for QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: i64) -> QuadSurd {
                (&self).$method(&QuadSurd::integer(rhs))
            }
        }
    };
}

binop!(Add, add, |a, b| a.checked_add(b));
binop!(Sub, sub, |a, b| a.checked_add(&-b));
binop!(Mul, mul, |a, b| a.checked_mul(b));
binop!(Div, div, |a, b| a.checked_div(b));

impl From<i64> for QuadSurd {
    fn from(n: i64) -> Self {
        QuadSurd::integer(n)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let radical = if self.q.is_zero() {
            String::new()
        } else {
            let coef = match self.q.abs() {
                c if c.is_one() => String::new(),
                c => c.to_string(),
            };
            format!("{coef}√{}", self.d)
        };
        let num = match (self.p.is_zero(), self.q.sign()) {
            (_, Sign::NoSign) => self.p.to_string(),
            (true, Sign::Minus) => format!("-{radical}"),
            (true, _) => radical,
            (false, Sign::Minus) => format!("{}-{radical}", self.p),
            (false, _) => format!("{}+{radical}", self.p),
        };
        if self.r.is_one() {
            write!(f, "{num}")
        } else if self.q.is_zero() || self.p.is_zero() && !self.q.is_negative() {
            write!(f, "{num}/{}", self.r)
        } else {
            write!(f, "({num})/{}", self.r)
        }
    }
}

/// `c2·x² + c1·x + c0` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadratic {
    pub c2: BigInt,
    pub c1: BigInt,
    pub c0: BigInt,
}

impl Quadratic {
    pub fn new(c2: impl Into<BigInt>, c1: impl Into<BigInt>, c0: impl Into<BigInt>) -> Self {
        Quadratic {
            c2: c2.into(),
            c1: c1.into(),
            c0: c0.into(),
        }
    }

    pub fn eval(&self, x: &QuadSurd) -> QuadSurd {
        let c = |v: &BigInt| QuadSurd::integer(v.clone());
        &(&(&c(&self.c2) * x) * x + &(&c(&self.c1) * x)) + &c(&self.c0)
    }

    /// The larger real root, `None` when the discriminant is negative or `c2 = 0`.
    pub fn larger_root(&self) -> Option<QuadSurd> {
        if self.c2.is_zero() {
            return None;
        }
        let disc = &self.c1 * &self.c1 - BigInt::from(4) * &self.c2 * &self.c0;
        if disc.is_negative() {
            return None;
        }
        let sign = if self.c2.is_positive() { 1 } else { -1 };
        QuadSurd::new(-&self.c1, sign, disc, BigInt::from(2) * &self.c2).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: i64, q: i64, d: u64, r: i64) -> QuadSurd {
        QuadSurd::from_parts(p, q, d, r)
    }

    #[test]
    fn floors() {
        assert_eq!(s(1, 1, 17, 2).floor(), BigInt::from(2));
        assert_eq!(s(4, 4, 5, 2).floor(), BigInt::from(6));
        assert_eq!(s(0, 0, 5, 1).floor(), BigInt::from(0));
        // −√2 ≈ −1.414
        assert_eq!(s(0, -1, 2, 1).floor(), BigInt::from(-2));
        assert_eq!(s(-1, 0, 0, 2).floor(), BigInt::from(-1));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(s(2, 1, 12, 4), s(1, 1, 3, 2));
        assert_eq!(s(4, 1, 32, 8), s(1, 1, 2, 2));
        assert_eq!(s(1, 1, 9, 2), QuadSurd::integer(2));
        assert_eq!(s(-3, -3, 5, -6), s(1, 1, 5, 2));
    }

    #[test]
    fn arithmetic() {
        let phi = s(1, 1, 5, 2);
        assert_eq!(&(&phi * &phi) - &phi, QuadSurd::integer(1));
        assert_eq!(phi.recip().unwrap(), &phi - 1);
        assert_eq!(&phi / &phi, QuadSurd::integer(1));
        assert_eq!(phi.checked_add(&s(0, 1, 2, 1)), None);
    }

    #[test]
    fn ordering() {
        let phi = s(1, 1, 5, 2);
        assert!(phi > QuadSurd::rational(8, 5).unwrap());
        assert!(phi < QuadSurd::rational(13, 8).unwrap());
        assert_eq!(phi.partial_cmp(&s(0, 1, 3, 1)), None);
    }

    #[test]
    fn decimals() {
        assert_eq!(s(1, 1, 5, 2).to_decimal(10), "1.6180339887");
        assert_eq!(s(-1, 1, 3, 2).to_decimal(5), "0.36603");
        assert_eq!(s(0, -1, 2, 2).to_decimal(3), "-0.707");
        assert_eq!(QuadSurd::integer(3).to_decimal(2), "3.00");
    }

    #[test]
    fn display() {
        assert_eq!(s(1, 1, 5, 2).to_string(), "(1+√5)/2");
        assert_eq!(s(2, 1, 6, 1).to_string(), "2+√6");
        assert_eq!(s(3, 2, 3, 1).to_string(), "3+2√3");
        assert_eq!(QuadSurd::rational(-1, 2).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn quadratic_roots() {
        let golden = Quadratic::new(1, -1, -1);
        let root = golden.larger_root().unwrap();
        assert_eq!(root, s(1, 1, 5, 2));
        assert!(golden.eval(&root).is_zero());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn floor_brackets_value(p in -1000i64..1000, q in -50i64..50, d in 2u64..200, r in 1i64..100) {
                let x = s(p, q, d, r);
                let f = QuadSurd::integer(x.floor());
                prop_assert!(f <= x);
                prop_assert!(x < &f + 1);
            }

            #[test]
            fn ordering_agrees_with_f64(p in -1000i64..1000, q in -50i64..50, d in 2u64..200, r in 1i64..100) {
                let x = s(p, q, d, r);
                let y = s(q, p % 7, d, r + 3);
                let fx = (p as f64 + q as f64 * (d as f64).sqrt()) / r as f64;
                let fy = (q as f64 + (p % 7) as f64 * (d as f64).sqrt()) / (r + 3) as f64;
                if (fx - fy).abs() > 1e-9 {
                    prop_assert_eq!(x.partial_cmp(&y), fx.partial_cmp(&fy));
                }
            }
        }
    }
}
