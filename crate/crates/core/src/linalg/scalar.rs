use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// The base field of every computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Prime field; rejects non-primes and moduli too large for exact `u128` products.
    pub fn prime(p: u64) -> Option<Self> {
        if p >= 2 && p < (1 << 62) && is_prime(p) {
            Some(FieldSpec::Prime(p))
        } else {
            None
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Small(0, 1),
            FieldSpec::Prime(p) => Scalar::Mod(0, *p),
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Small(n, 1),
            FieldSpec::Prime(p) => Scalar::Mod(n.rem_euclid(*p as i64) as u64, *p),
        }
    }

    /// `num/den` in this field; `None` when `den` vanishes in the field.
    pub fn frac(&self, num: i64, den: i64) -> Option<Scalar> {
        if den == 0 {
            return None;
        }
        match self {
            FieldSpec::Rationals => Some(Scalar::from_i128(num as i128, den as i128)),
            FieldSpec::Prime(_) => {
                let d = self.int(den);
                if d.is_zero() {
                    None
                } else {
                    Some(self.int(num) * d.inv())
                }
            }
        }
    }

    /// Embeds an exact rational; `None` if the denominator is divisible by the characteristic.
    pub fn from_rational(&self, q: &BigRational) -> Option<Scalar> {
        match self {
            FieldSpec::Rationals => Some(Scalar::from_big(q.clone())),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(*p);
                let n = q.numer().mod_floor(&pb).to_u64().unwrap();
                let d = q.denom().mod_floor(&pb).to_u64().unwrap();
                if d == 0 {
                    None
                } else {
                    Some(Scalar::Mod(n, *p) * Scalar::Mod(d, *p).inv())
                }
            }
        }
    }

    /// Parses `n`, `-n` or `n/m`.
    pub fn parse(&self, s: &str) -> Option<Scalar> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        self.from_rational(&BigRational::new(n, d))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F {}", p),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Rationals stay in machine words until they overflow.
///
/// Representation is canonical: `Small(n, d)` has `d > 0` and `gcd(n, d) = 1`,
/// `Big` is used only when the value does not fit `Small`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Small(i64, i64),
    Big(Box<BigRational>),
    Mod(u64, u64),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Scalar {
    fn from_i128(n: i128, d: i128) -> Scalar {
        debug_assert!(d != 0);
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        if n == 0 {
            return Scalar::Small(0, 1);
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n >= i64::MIN as i128 + 1 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Scalar::Small(n as i64, d as i64)
        } else {
            Scalar::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    fn from_big(q: BigRational) -> Scalar {
        if let (Some(n), Some(d)) = (q.numer().to_i64(), q.denom().to_i64()) {
            if n != i64::MIN {
                return Scalar::Small(n, d);
            }
        }
        Scalar::Big(Box::new(q))
    }

    fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Scalar::Big(q) => (**q).clone(),
            Scalar::Mod(..) => panic!("prime-field element used as rational"),
        }
    }

    /// The exact rational value (rational fields only).
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Mod(..) => None,
            _ => Some(self.to_big()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(n, _) => *n == 0,
            Scalar::Big(_) => false,
            Scalar::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Small(n, d) => *n == 1 && *d == 1,
            Scalar::Big(_) => false,
            Scalar::Mod(v, _) => *v == 1,
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Mod(_, p) => FieldSpec::Prime(*p),
            _ => FieldSpec::Rationals,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Small(n, d) => {
                assert!(*n != 0, "inverse of zero");
                Scalar::from_i128(*d as i128, *n as i128)
            }
            Scalar::Big(q) => Scalar::from_big(q.recip()),
            Scalar::Mod(v, p) => {
                assert!(*v != 0, "inverse of zero");
                Scalar::Mod(pow_mod(*v, *p - 2, *p), *p)
            }
        }
    }

    /// Integer numerator and denominator as big integers (rationals only).
    pub fn num_den(&self) -> Option<(BigInt, BigInt)> {
        self.to_rational().map(|q| (q.numer().clone(), q.denom().clone()))
    }

    pub fn add_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        if s != i64::MIN {
                            return Scalar::Small(s, 1);
                        }
                    }
                }
                Scalar::from_i128(*a as i128 * *d as i128 + *c as i128 * *b as i128, *b as i128 * *d as i128)
            }
            (Scalar::Mod(a, p), Scalar::Mod(b, q)) => {
                debug_assert_eq!(p, q);
                let s = a + b;
                Scalar::Mod(if s >= *p { s - p } else { s }, *p)
            }
            _ => Scalar::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_mul(*c) {
                        if s != i64::MIN {
                            return Scalar::Small(s, 1);
                        }
                    }
                }
                Scalar::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            (Scalar::Mod(a, p), Scalar::Mod(b, q)) => {
                debug_assert_eq!(p, q);
                Scalar::Mod(((*a as u128 * *b as u128) % *p as u128) as u64, *p)
            }
            _ => Scalar::from_big(self.to_big() * o.to_big()),
        }
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Small(a, b) => Scalar::Small(-a, *b),
            Scalar::Big(q) => Scalar::from_big(-(**q).clone()),
            Scalar::Mod(v, p) => Scalar::Mod(if *v == 0 { 0 } else { p - v }, *p),
        }
    }

    pub fn sub_ref(&self, o: &Scalar) -> Scalar {
        self.add_ref(&o.neg_ref())
    }

    /// `self - a * b`, the elimination kernel.
    pub fn sub_mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.sub_ref(&a.mul_ref(b))
    }

    /// Total order used only for deterministic tie-breaking.
    pub fn cmp_key(&self, o: &Scalar) -> Ordering {
        match (self, o) {
            (Scalar::Mod(a, _), Scalar::Mod(b, _)) => a.cmp(b),
            _ => self.to_big().cmp(&o.to_big()),
        }
    }

    /// Numeric size used when choosing pivots over the rationals.
    pub fn height(&self) -> u128 {
        match self {
            Scalar::Small(n, d) => n.unsigned_abs() as u128 + *d as u128,
            Scalar::Big(_) => u128::MAX,
            Scalar::Mod(..) => 0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Small(n, _) => *n < 0,
            Scalar::Big(q) => q.is_negative(),
            Scalar::Mod(..) => false,
        }
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u128;
    let mut bb = b as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * bb % m as u128;
        }
        bb = bb * bb % m as u128;
        e >>= 1;
    }
    r as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(n, 1) => write!(f, "{}", n),
            Scalar::Small(n, d) => write!(f, "{}/{}", n, d),
            Scalar::Big(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Mod(v, _) => write!(f, "{}", v),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        self.add_ref(&o)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        self.sub_ref(&o)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        self.mul_ref(&o)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.add_ref(o)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.sub_ref(o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_ref(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_stays_canonical() {
        let q = FieldSpec::Rationals;
        let a = q.frac(1, 2).unwrap();
        let b = q.frac(1, 3).unwrap();
        assert_eq!(a.add_ref(&b), q.frac(5, 6).unwrap());
        assert_eq!(a.mul_ref(&b).inv(), q.int(6));
        assert_eq!(q.frac(2, -4).unwrap(), q.frac(-1, 2).unwrap());
    }

    #[test]
    fn overflow_promotes_to_big_and_back() {
        let q = FieldSpec::Rationals;
        let big = q.int(i64::MAX).mul_ref(&q.int(4));
        assert!(matches!(big, Scalar::Big(_)));
        let back = big.mul_ref(&q.frac(1, 4).unwrap());
        assert_eq!(back, q.int(i64::MAX));
    }

    #[test]
    fn prime_field_inverse() {
        let f = FieldSpec::prime(7).unwrap();
        for n in 1..7 {
            assert!(f.int(n).mul_ref(&f.int(n).inv()).is_one());
        }
        assert_eq!(f.parse("1/2").unwrap(), f.int(4));
        assert!(FieldSpec::prime(9).is_none());
    }
}
