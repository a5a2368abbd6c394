//! Exact scalars for Hermitian spaces: an involutive field abstraction with
//! two instantiations, the rationals with the trivial involution and the
//! Gaussian rationals with conjugation. Arbitrary-precision throughout; no
//! floating point anywhere.

use crate::HermitianError;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::hash::Hash;


fn rzero() -> BigRational {
    <BigRational as Zero>::zero()
}

fn rone() -> BigRational {
    <BigRational as One>::one()
}

/// An exact field element with an involutory antiautomorphism.
pub trait Scalar: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// The involution.
    fn conj(&self) -> Self;

    /// The value as a rational if its imaginary part vanishes.
    fn to_rational(&self) -> Option<BigRational>;
    /// The norm `x · x*`, always a rational for these scalars.
    fn norm(&self) -> BigRational {
        self.mul(&self.conj())
            .to_rational()
            .expect("x·x* is invariant under the involution")
    }

    fn parse(s: &str) -> Result<Self, HermitianError>;
    /// Decides whether `q ≥ 0` is a norm `γγ*` of some scalar γ.
    fn is_norm_value(q: &BigRational) -> bool;
}

/// ℚ with the trivial involution.
pub type Rational = BigRational;

impl Scalar for BigRational {
    const NAME: &'static str = "Q";

    fn zero() -> Self {
        rzero()
    }
    fn one() -> Self {
        rone()
    }
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
    fn parse(s: &str) -> Result<Self, HermitianError> {
        parse_rational(s.trim())
    }
    fn is_norm_value(q: &BigRational) -> bool {
        // γ² = q needs numerator and denominator to be perfect squares
        !q.is_negative() && is_perfect_square(&q.numer().abs()) && is_perfect_square(q.denom())
    }
}

/// ℚ(i) with conjugation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn i() -> Self {
        Gaussian {
            re: rzero(),
            im: rone(),
        }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Gaussian {
            re: <BigRational as Scalar>::from_int(re),
            im: <BigRational as Scalar>::from_int(im),
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}-{} i", self.re, -&self.im)
        } else {
            write!(f, "{}+{} i", self.re, self.im)
        }
    }
}

impl Scalar for Gaussian {
    const NAME: &'static str = "Q(i)";

    fn zero() -> Self {
        Gaussian::new(rzero(), rzero())
    }
    fn one() -> Self {
        Gaussian::new(rone(), rzero())
    }
    fn from_int(v: i64) -> Self {
        Gaussian::new(<BigRational as Scalar>::from_int(v), rzero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, other: &Self) -> Self {
        Gaussian::new(&self.re + &other.re, &self.im + &other.im)
    }
    fn sub(&self, other: &Self) -> Self {
        Gaussian::new(&self.re - &other.re, &self.im - &other.im)
    }
    fn mul(&self, other: &Self) -> Self {
        Gaussian::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }
    fn neg(&self) -> Self {
        Gaussian::new(-&self.re, -&self.im)
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        let n = &self.re * &self.re + &self.im * &self.im;
        Some(Gaussian::new(&self.re / &n, -&self.im / &n))
    }
    fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -&self.im)
    }
    fn to_rational(&self) -> Option<BigRational> {
        if Zero::is_zero(&self.im) {
            Some(self.re.clone())
        } else {
            None
        }
    }
    fn parse(s: &str) -> Result<Self, HermitianError> {
        parse_gaussian(s.trim())
    }
    fn is_norm_value(q: &BigRational) -> bool {
        // γγ* = a² + b²: a non-negative rational is a sum of two rational
        // squares iff every prime ≡ 3 (mod 4) appears to an even power in
        // numerator and denominator.
        if q.is_negative() {
            return false;
        }
        sum_of_two_squares_ok(&q.numer().abs()) && sum_of_two_squares_ok(q.denom())
    }
}

fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let root = n.sqrt();
    &root * &root == *n
}

/// Every prime ≡ 3 (mod 4) divides `n` to an even power. Trial division is
/// adequate at the magnitudes exercised here.
fn sum_of_two_squares_ok(n: &BigInt) -> bool {
    let mut n = n.clone();
    if Zero::is_zero(&n) {
        return true;
    }
    let two = BigInt::from(2);
    while (&n % &two).is_zero() {
        n /= &two;
    }
    let mut p = BigInt::from(3);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            let mut count = 0u32;
            while (&n % &p).is_zero() {
                n /= &p;
                count += 1;
            }
            if count % 2 == 1 && (&p % BigInt::from(4)) == BigInt::from(3) {
                return false;
            }
        }
        p += 2;
    }
    // leftover prime factor
    !(n > BigInt::one() && (&n % BigInt::from(4)) == BigInt::from(3))
}

fn parse_rational(s: &str) -> Result<BigRational, HermitianError> {
    let bad = || HermitianError::ScalarParse(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Accepts `a/b`, `a/b+c/d i`, `a/b-c/d i`, with integer shorthands and the
/// space before `i` optional.
fn parse_gaussian(s: &str) -> Result<Gaussian, HermitianError> {
    let bad = || HermitianError::ScalarParse(s.to_string());
    let body = s.trim();
    if let Some(stripped) = body.strip_suffix('i') {
        let stripped = stripped.trim_end();
        // split at the last top-level + or - that separates the two parts
        let bytes = stripped.as_bytes();
        let mut split_at = None;
        for (k, &b) in bytes.iter().enumerate().skip(1) {
            if (b == b'+' || b == b'-') && bytes[k - 1] != b'/' && bytes[k - 1] != b'+' && bytes[k - 1] != b'-' {
                split_at = Some(k);
            }
        }
        match split_at {
            Some(k) => {
                let re = parse_rational(stripped[..k].trim())?;
                let sign = if bytes[k] == b'-' { -1 } else { 1 };
                let im_str = stripped[k + 1..].trim();
                let im_mag = if im_str.is_empty() {
                    rone()
                } else {
                    parse_rational(im_str)?
                };
                Ok(Gaussian::new(re, im_mag * BigRational::from_integer(sign.into())))
            }
            None => {
                // purely imaginary: "i", "-i", "3/4 i"
                let im_str = stripped.trim();
                let im = match im_str {
                    "" | "+" => rone(),
                    "-" => -rone(),
                    other => parse_rational(other)?,
                };
                Ok(Gaussian::new(rzero(), im))
            }
        }
    } else {
        if body.is_empty() {
            return Err(bad());
        }
        Ok(Gaussian::new(parse_rational(body)?, rzero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn involution_is_an_antiautomorphism() {
        let a = Gaussian::from_ints(2, 3);
        let b = Gaussian::from_ints(-1, 5);
        assert_eq!(a.mul(&b).conj(), b.conj().mul(&a.conj()));
        assert_eq!(a.conj().conj(), a);
        let r = q(3, 7);
        assert_eq!(Scalar::conj(&r), r);
    }

    #[test]
    fn field_inverses() {
        let a = Gaussian::from_ints(1, 1);
        assert_eq!(a.mul(&a.inv().unwrap()), Scalar::one());
        assert!(Scalar::inv(&Gaussian::zero()).is_none());
        assert_eq!(Scalar::inv(&q(2, 3)).unwrap(), q(3, 2));
    }

    #[test]
    fn gaussian_parsing_and_rendering() {
        for s in ["1/2+3/4 i", "-2", "0-1 i", "5/3", "1+1 i", "-1/2-2 i"] {
            let v = Gaussian::parse(s).unwrap();
            let back = Gaussian::parse(&v.to_string()).unwrap();
            assert_eq!(v, back, "{s}");
        }
        assert_eq!(Gaussian::parse("i").unwrap(), Gaussian::i());
        assert_eq!(Gaussian::parse("-i").unwrap(), Gaussian::i().neg());
        assert_eq!(Gaussian::parse("3 i").unwrap(), Gaussian::from_ints(0, 3));
        assert!(Gaussian::parse("1//2").is_err());
        assert!(Gaussian::parse("").is_err());
        assert_eq!(<BigRational as Scalar>::parse("-4/6").unwrap(), q(-2, 3));
    }

    #[test]
    fn norm_decisions_over_q() {
        assert!(<BigRational as Scalar>::is_norm_value(&q(4, 9)));
        assert!(!<BigRational as Scalar>::is_norm_value(&q(2, 1)));
        assert!(!<BigRational as Scalar>::is_norm_value(&q(-1, 1)));
        assert!(<BigRational as Scalar>::is_norm_value(&q(0, 1)));
    }

    #[test]
    fn norm_decisions_over_q_i() {
        // 2 = (1+i)(1-i)
        assert!(Gaussian::is_norm_value(&q(2, 1)));
        // 3 is not a sum of two rational squares
        assert!(!Gaussian::is_norm_value(&q(3, 1)));
        assert!(Gaussian::is_norm_value(&q(5, 1)));
        assert!(Gaussian::is_norm_value(&q(9, 1)));
        assert!(!Gaussian::is_norm_value(&q(21, 1)));
        assert!(Gaussian::is_norm_value(&q(1, 2)));
        assert!(!Gaussian::is_norm_value(&q(3, 4)));
        assert!(!Gaussian::is_norm_value(&q(1, 3)));
    }

    #[test]
    fn norms_are_real_and_non_negative() {
        use num::Signed;
        for v in [
            Gaussian::from_ints(3, -4),
            Gaussian::new(q(1, 2), q(-5, 3)),
            Gaussian::zero(),
        ] {
            let n = v.norm();
            assert!(!n.is_negative());
            assert!(Gaussian::is_norm_value(&n));
        }
    }
}
