use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse, Rational, UniPoly};
use crate::error::{Error, Result};

/// An element of Q(t): a reduced fraction of polynomials in a formal
/// transcendental `t` with monic denominator.
///
/// Deformation parameters that are "generic" live here with `t` standing for
/// the generic direction, so every integrality test downstream is exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamScalar {
    num: UniPoly,
    den: UniPoly,
}

impl ParamScalar {
    /// Builds `num / den` in lowest terms. A zero denominator (including
    /// `0/0`) is rejected.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.constant_term().recip();
            return ParamScalar {
                num: num.scale(&c),
                den: UniPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().expect("nonzero").recip();
        ParamScalar {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn zero() -> Self {
        ParamScalar {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(v.into()))
    }

    pub fn from_rational(r: Rational) -> Self {
        ParamScalar {
            num: UniPoly::constant(r),
            den: UniPoly::one(),
        }
    }

    /// `p / q` as a constant.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(Rational::new(p.into(), q.into()))
    }

    /// The formal generic parameter `t`.
    pub fn tau() -> Self {
        ParamScalar {
            num: UniPoly::var(),
            den: UniPoly::one(),
        }
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the value does not depend on `t`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as a rational, if it is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.constant_term())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn as_positive_integer(&self) -> Option<BigInt> {
        self.as_integer().filter(|k| k.is_positive())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Representative of the class of `self` modulo the integers: the
    /// constant term of the polynomial part is replaced by its fractional
    /// part in `[0, 1)`. Two scalars differ by an integer exactly when their
    /// representatives agree.
    pub fn coset_rep(&self) -> Self {
        let (q, r) = self.num.div_rem(&self.den);
        let c0 = q.constant_term();
        let frac = &c0 - c0.floor();
        let mut coeffs = q.coeffs().to_vec();
        if coeffs.is_empty() {
            coeffs.push(frac);
        } else {
            coeffs[0] = frac;
        }
        let q = UniPoly::from_coeffs(coeffs);
        Self::reduce(q.mul(&self.den).add(&r), self.den.clone())
    }

    /// Integer `k` with `self - other == k`, if any.
    pub fn integer_difference(&self, other: &Self) -> Option<BigInt> {
        (self - other).as_integer()
    }

    /// Numerator and denominator scaled to coprime integer coefficients with
    /// the denominator's leading coefficient positive.
    fn integral_parts(&self) -> (UniPoly, UniPoly) {
        let l = num_integer::Integer::lcm(&self.num.denominator_lcm(), &self.den.denominator_lcm());
        let l = Rational::from_integer(l);
        let num = self.num.scale(&l);
        let den = self.den.scale(&l);
        let g = num_integer::Integer::gcd(&num.numerator_gcd(), &den.numerator_gcd());
        let g = Rational::from_integer(g).recip();
        (num.scale(&g), den.scale(&g))
    }

    fn sort_key(&self) -> (Option<usize>, &[Rational], Option<usize>, &[Rational]) {
        (
            self.den.degree(),
            self.den.coeffs(),
            self.num.degree(),
            self.num.coeffs(),
        )
    }
}

/// A canonical total order (by denominator, then numerator coefficients).
/// It is only used to sort values deterministically and carries no
/// arithmetic meaning.
impl Ord for ParamScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for ParamScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        if self.den == rhs.den {
            return ParamScalar::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        ParamScalar::reduce(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        self + &(-rhs)
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        ParamScalar::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: ParamScalar) -> ParamScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: &ParamScalar) -> ParamScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

impl From<i64> for ParamScalar {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Rational> for ParamScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.integral_parts();
        let den_is_one = den.is_constant() && den.constant_term().is_one();
        if den_is_one {
            return num.fmt_integral(f);
        }
        if num.term_count() > 1 {
            write!(f, "(")?;
            num.fmt_integral(f)?;
            write!(f, ")")?;
        } else {
            num.fmt_integral(f)?;
        }
        write!(f, "/")?;
        let bare = den.term_count() == 1 && den.leading().is_some_and(|l| l.is_one());
        if !den.is_constant() && !bare {
            write!(f, "(")?;
            den.fmt_integral(f)?;
            write!(f, ")")
        } else {
            den.fmt_integral(f)
        }
    }
}

impl FromStr for ParamScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_scalar(s)
    }
}

impl Serialize for ParamScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ParamScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> ParamScalar {
        x.parse().unwrap()
    }

    #[test]
    fn tau_terms_cancel() {
        assert_eq!(s("3+2t") + s("1-2t"), ParamScalar::from_int(4));
    }

    #[test]
    fn common_factor_cancels() {
        assert_eq!(s("5t+5").checked_div(&s("t+1")).unwrap(), ParamScalar::from_int(5));
    }

    #[test]
    fn rectangle_diagram_content() {
        let d = ParamScalar::ratio(5, 2);
        let lhs = ParamScalar::one() - ParamScalar::from_int(2) * d;
        let q = lhs.checked_div(&(ParamScalar::from_int(2) * ParamScalar::tau())).unwrap();
        assert_eq!(q, s("-2/t"));
        assert_eq!(q.to_string(), "-2/t");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(s("t").checked_div(&ParamScalar::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            ParamScalar::new(UniPoly::zero(), UniPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn integrality() {
        assert_eq!(ParamScalar::from_int(6).as_integer(), Some(6.into()));
        let v = (ParamScalar::from_int(45) + ParamScalar::from_int(8) * ParamScalar::from_int(-3))
            .checked_div(&ParamScalar::from_int(7))
            .unwrap();
        assert_eq!(v.as_integer(), Some(3.into()));
        assert_eq!(s("3+t").as_integer(), None);
        assert_eq!(ParamScalar::from_int(-2).as_positive_integer(), None);
        assert_eq!(ParamScalar::ratio(7, 2).as_integer(), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(ParamScalar::ratio(5, 2).to_string(), "5/2");
        assert_eq!(s("7/2 - t").to_string(), "(-2*t+7)/2");
        assert_eq!(s("1/(2t+1)").to_string(), "1/(2*t+1)");
        assert_eq!(ParamScalar::zero().to_string(), "0");
        assert_eq!(s("t^2/3").to_string(), "t^2/3");
        assert_eq!(s("-1/(2t)").to_string(), "-1/(2*t)");
    }

    #[test]
    fn coset_representatives() {
        assert_eq!(ParamScalar::ratio(11, 3).coset_rep(), ParamScalar::ratio(2, 3));
        assert_eq!(ParamScalar::ratio(-1, 3).coset_rep(), ParamScalar::ratio(2, 3));
        assert_eq!(s("t + 7/2").coset_rep(), s("t+1/2"));
        assert_eq!(s("(3t+1)/t").coset_rep(), s("1/t"));
        assert_eq!(s("-2/t").coset_rep(), s("-2/t"));
    }
}
