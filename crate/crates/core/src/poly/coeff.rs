//! Exact coefficient fields: the rationals and prime fields `F_p` with `p < 2^31`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// An exact rational number with an allocation-free fast path for values
/// whose reduced numerator and denominator fit in an `i64`.
///
/// The representation is canonical: `Small` is used whenever the value fits,
/// the denominator is positive and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Rational {
    pub fn zero() -> Self {
        Rational::Small { num: 0, den: 1 }
    }

    pub fn one() -> Self {
        Rational::Small { num: 1, den: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Rational::Small { num: n, den: 1 }
    }

    /// Builds `num / den`. Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let (mut n, mut d) = if den < 0 {
            match (num.checked_neg(), den.checked_neg()) {
                (Some(n), Some(d)) => (n, d),
                _ => {
                    return Self::from_big(BigRational::new(BigInt::from(num), BigInt::from(den)))
                }
            }
        } else {
            (num, den)
        };
        let g = gcd_i128(n, d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(num), Ok(den)) => Rational::Small { num, den },
            _ => Rational::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d)))),
        }
    }

    pub fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Rational::Small { num, den },
            _ => Rational::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small { num: 1, den: 1 })
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small { den, .. } => *den == 1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small { num, .. } => BigInt::from(*num),
            Rational::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small { den, .. } => BigInt::from(*den),
            Rational::Big(b) => b.denom().clone(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rational::Small { num, .. } => num.signum() as i32,
            Rational::Big(b) => {
                if b.is_negative() {
                    -1
                } else if b.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if let (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) = (self, o)
        {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Rational::new(a + c, b);
            }
            if let Some(n) = (a * d).checked_add(c * b) {
                return Rational::new(n, b * d);
            }
        }
        Self::from_big(self.to_big() + o.to_big())
    }

    pub fn neg(&self) -> Self {
        match self {
            Rational::Small { num, den } if *num != i64::MIN => {
                Rational::Small { num: -num, den: *den }
            }
            _ => Self::from_big(-self.to_big()),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if let (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) = (self, o)
        {
            return Rational::new(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        Self::from_big(self.to_big() * o.to_big())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Rational::Small { num, den } => Rational::new(*den as i128, *num as i128),
            Rational::Big(b) => Self::from_big(b.recip()),
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if let (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) =
            (self, other)
        {
            return (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128));
        }
        self.to_big().cmp(&other.to_big())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small { num, den: 1 } => write!(f, "{num}"),
            Rational::Small { num, den } => write!(f, "{num}/{den}"),
            Rational::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if p as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field `F_p`; rejects composite moduli and `p >= 2^31`.
    pub fn prime(p: u32) -> Result<Self, AlgebraError> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(AlgebraError::InvalidModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(Rational::zero()),
            Field::Prime(p) => Coeff::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(Rational::from_int(n)),
            Field::Prime(p) => Coeff::Fp { v: n.rem_euclid(*p as i64) as u32, p: *p },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(Rational::from_big(BigRational::from_integer(n.clone()))),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Coeff::Fp { v: r.to_u32().unwrap(), p: *p }
            }
        }
    }

    /// Maps an exact rational into this field. Fails when the denominator
    /// vanishes modulo `p`.
    pub fn from_rational(&self, r: &Rational) -> Result<Coeff, AlgebraError> {
        match self {
            Field::Rationals => Ok(Coeff::Q(r.clone())),
            Field::Prime(p) => {
                let d = self.from_bigint(&r.denom());
                if d.is_zero() {
                    return Err(AlgebraError::DenominatorVanishes(*p));
                }
                Ok(self.from_bigint(&r.numer()).div(&d))
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn contains(&self, c: &Coeff) -> bool {
        match (self, c) {
            (Field::Rationals, Coeff::Q(_)) => true,
            (Field::Prime(p), Coeff::Fp { p: q, .. }) => p == q,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(Field::Rationals);
        }
        let digits = t
            .strip_prefix("F")
            .or_else(|| t.strip_prefix("GF"))
            .or_else(|| t.strip_prefix("ZZ/"))
            .ok_or_else(|| AlgebraError::UnknownField(t.to_string()))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| AlgebraError::UnknownField(t.to_string()))?;
        Field::prime(p)
    }
}

/// A field element. Prime-field residues carry their modulus so arithmetic is
/// self-contained; mixing elements of different fields panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(Rational),
    Fp { v: u32, p: u32 },
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_zero(),
            Coeff::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_one(),
            Coeff::Fp { v, .. } => *v == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Coeff::Q(_) => Field::Rationals,
            Coeff::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn zero_like(&self) -> Coeff {
        self.field().zero()
    }

    pub fn one_like(&self) -> Coeff {
        self.field().one()
    }

    pub fn add(&self, o: &Coeff) -> Coeff {
        match (self, o) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a.add(b)),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: q }) if p == q => {
                Coeff::Fp { v: ((*a as u64 + *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Q(a) => Coeff::Q(a.neg()),
            Coeff::Fp { v, p } => Coeff::Fp { v: if *v == 0 { 0 } else { p - v }, p: *p },
        }
    }

    pub fn sub(&self, o: &Coeff) -> Coeff {
        match (self, o) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a.sub(b)),
            _ => self.add(&o.neg()),
        }
    }

    pub fn mul(&self, o: &Coeff) -> Coeff {
        match (self, o) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a.mul(b)),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: q }) if p == q => {
                Coeff::Fp { v: ((*a as u64 * *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Coeff::Q(a) => Coeff::Q(a.inv()),
            Coeff::Fp { v, p } => Coeff::Fp { v: pow_mod(*v as u64, *p as u64 - 2, *p as u64) as u32, p: *p },
        }
    }

    pub fn div(&self, o: &Coeff) -> Coeff {
        self.mul(&o.inv())
    }

    /// The coefficient as a rational, when it is one.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coeff::Q(r) => Some(r),
            Coeff::Fp { .. } => None,
        }
    }

    /// True for a "negative looking" coefficient, used only when printing.
    pub(crate) fn prints_negative(&self) -> bool {
        match self {
            Coeff::Q(r) => r.signum() < 0,
            Coeff::Fp { v, p } => *v > p / 2,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(r) => write!(f, "{r}"),
            Coeff::Fp { v, p } => {
                if *v > p / 2 {
                    write!(f, "-{}", p - v)
                } else {
                    write!(f, "{v}")
                }
            }
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_small_and_big_paths_agree() {
        let a = Rational::new(i64::MAX as i128, 3);
        let b = Rational::new(i64::MAX as i128, 5);
        let s = a.add(&b);
        let expect = a.to_big() + b.to_big();
        assert_eq!(s.to_big(), expect);
        let p = a.mul(&b);
        assert!(matches!(p, Rational::Big(_)));
        assert_eq!(p.div(&b), a);
        assert!(matches!(p.div(&b), Rational::Small { .. }));
    }

    #[test]
    fn rational_canonical_form() {
        assert_eq!(Rational::new(6, -4), Rational::new(-3, 2));
        assert_eq!(Rational::new(0, -7), Rational::zero());
        assert!(Rational::new(5, 5).is_one());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        assert_eq!(a.inv(), f.from_i64(5));
        assert_eq!(a.mul(&a.inv()), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("F7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("F8".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
    }

    #[test]
    fn rational_into_prime_field() {
        let f = Field::Prime(5);
        let half = Rational::new(1, 2);
        assert_eq!(f.from_rational(&half).unwrap(), f.from_i64(3));
        assert!(f.from_rational(&Rational::new(1, 5)).is_err());
    }
}
