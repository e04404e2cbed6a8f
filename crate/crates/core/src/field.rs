//! Exact scalars: arbitrary-precision rationals and prime-field residues.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field every structure in this crate is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScalarField {
    Rationals,
    Prime(u32),
}

impl ScalarField {
    /// Builds `F_p`, rejecting composite or out-of-range moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 / 2 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(ScalarField::Prime(p as u32))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            ScalarField::Rationals => 0,
            ScalarField::Prime(p) => p,
        }
    }

    /// Number of elements, `None` for `Q`.
    pub fn order(self) -> Option<u64> {
        match self {
            ScalarField::Rationals => None,
            ScalarField::Prime(p) => Some(p as u64),
        }
    }

    /// Superalgebra constructions need `2` to be invertible.
    pub fn require_odd_characteristic(self) -> Result<()> {
        if self.characteristic() == 2 {
            Err(Error::CharacteristicTwo)
        } else {
            Ok(())
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            ScalarField::Rationals => Scalar::Rat(BigRational::zero()),
            ScalarField::Prime(p) => Scalar::Mod { value: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            ScalarField::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            ScalarField::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u32,
                p,
            },
        }
    }

    /// `num / den`; fails when `den` vanishes in the field.
    pub fn ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match self {
            ScalarField::Rationals => {
                if den.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone())))
            }
            ScalarField::Prime(p) => {
                let n = reduce_big(num, p);
                let d = reduce_big(den, p);
                if d == 0 {
                    return Err(Error::ZeroDenominator);
                }
                let d = Scalar::Mod { value: d, p }.inv().ok_or(Error::ZeroDenominator)?;
                Ok(&Scalar::Mod { value: n, p } * &d)
            }
        }
    }

    /// Every element of a finite field, in residue order `0, 1, …, p−1`.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            ScalarField::Rationals => None,
            ScalarField::Prime(p) => Some((0..p).map(move |value| Scalar::Mod { value, p })),
        }
    }
}

impl fmt::Display for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarField::Rationals => write!(f, "Q"),
            ScalarField::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn reduce_big(n: &BigInt, p: u32) -> u32 {
    let m = BigInt::from(p);
    let r = ((n % &m) + &m) % &m;
    r.to_u32().unwrap_or(0)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Mixing elements of different fields is a bug and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u32, p: u32 },
}

impl Scalar {
    pub fn field(&self) -> ScalarField {
        match self {
            Scalar::Rat(_) => ScalarField::Rationals,
            Scalar::Mod { p, .. } => ScalarField::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(r.recip()))
                }
            }
            Scalar::Mod { value, p } => {
                if *value == 0 {
                    return None;
                }
                // extended Euclid on (value, p)
                let (mut r0, mut r1) = (*p as i64, *value as i64);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                Some(Scalar::Mod {
                    value: t0.rem_euclid(*p as i64) as u32,
                    p: *p,
                })
            }
        }
    }

    /// `(numerator, denominator)` in lowest terms with a positive denominator;
    /// prime-field residues report denominator 1.
    pub fn to_fraction(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rat(r) => (r.numer().clone(), r.denom().clone()),
            Scalar::Mod { value, .. } => (BigInt::from(*value), BigInt::one()),
        }
    }

    /// Small integer value, if the scalar is one.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rat(r) if r.is_integer() => r.numer().to_i64(),
            Scalar::Rat(_) => None,
            Scalar::Mod { value, .. } => Some(*value as i64),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact square root in the field when one exists (rationals: both parts perfect squares).
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => {
                if r.is_negative() {
                    return None;
                }
                let n = r.numer().sqrt();
                let d = r.denom().sqrt();
                if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
                    Some(Scalar::Rat(BigRational::new(n, d)))
                } else {
                    None
                }
            }
            Scalar::Mod { value, p } => (0..*p)
                .find(|x| (*x as u64 * *x as u64) % *p as u64 == *value as u64)
                .map(|x| Scalar::Mod { value: x, p: *p }),
        }
    }

    fn same_field(&self, other: &Scalar) {
        assert_eq!(self.field(), other.field(), "scalars from different fields");
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used only for canonical sorting; not a field order.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Mod { value: a, p: pa }, Scalar::Mod { value: b, p: pb }) => {
                (pa, a).cmp(&(pb, b))
            }
            (Scalar::Rat(_), Scalar::Mod { .. }) => Ordering::Less,
            (Scalar::Mod { .. }, Scalar::Rat(_)) => Ordering::Greater,
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
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
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_validation() {
        assert!(ScalarField::prime(5).is_ok());
        assert_eq!(ScalarField::prime(4), Err(Error::NotPrime(4)));
        assert_eq!(ScalarField::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(ScalarField::prime(7).unwrap().characteristic(), 7);
        assert_eq!(ScalarField::Rationals.characteristic(), 0);
    }

    #[test]
    fn modular_inverse_table() {
        let f = ScalarField::prime(7).unwrap();
        for a in 1..7 {
            let x = f.int(a);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn ratio_reduces() {
        let q = ScalarField::Rationals;
        let x = q.ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(x.to_fraction(), (BigInt::from(-2), BigInt::from(3)));
        let f5 = ScalarField::prime(5).unwrap();
        // 1/2 = 3 mod 5
        assert_eq!(f5.ratio(&BigInt::from(1), &BigInt::from(2)).unwrap(), f5.int(3));
        assert!(f5.ratio(&BigInt::from(1), &BigInt::from(10)).is_err());
    }

    #[test]
    fn square_roots() {
        let q = ScalarField::Rationals;
        assert_eq!(q.ratio(&BigInt::from(4), &BigInt::from(9)).unwrap().sqrt(),
            Some(q.ratio(&BigInt::from(2), &BigInt::from(3)).unwrap()));
        assert_eq!(q.int(2).sqrt(), None);
        let f7 = ScalarField::prime(7).unwrap();
        assert!(f7.int(2).sqrt().is_some());
        assert!(f7.int(3).sqrt().is_none());
    }

    #[test]
    fn characteristic_two_rejected() {
        assert_eq!(
            ScalarField::prime(2).unwrap().require_odd_characteristic(),
            Err(Error::CharacteristicTwo)
        );
    }
}
