//! Exact scalar fields.
//!
//! Every computation in the crate is generic over a [`Field`], a small
//! context object that carries whatever the element type itself cannot (the
//! modulus of a prime field) and performs the arithmetic. Two fields are
//! provided: [`Rationals`] backed by arbitrary-precision integers and
//! [`PrimeField`] for residues modulo a prime `p <= 2^31`.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus.
pub const MAX_PRIME: u64 = 1 << 31;

/// Runtime description of a field, as found in algebra documents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    Prime(u32),
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// Arithmetic context for an exact field.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> FieldDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Image of an integer under the canonical ring map.
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;

    /// Parses the scalar text syntax: optional sign, decimal digits and,
    /// over the rationals only, an optional `/` followed by positive digits.
    fn parse(&self, text: &str) -> Result<Self::Elem>;

    /// Exact text form, the inverse of [`Field::parse`].
    fn format(&self, a: &Self::Elem) -> String;

    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64> {
        None
    }

    fn to_scalar(&self, a: &Self::Elem) -> Scalar;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

/// Residues modulo a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_big(&self, v: &BigInt) -> u32 {
        let m = BigInt::from(self.p);
        v.mod_floor(&m).to_u32().expect("residue fits in u32")
    }
}

/// Deterministic trial division; moduli are at most 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A field element tagged with its field, the value type used at the
/// document and command-line boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u32, modulus: u32 },
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}", Rationals.format(q)),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Parses `text` as an element of the described field.
pub fn parse_scalar(text: &str, field: FieldDescriptor) -> Result<Scalar> {
    match field {
        FieldDescriptor::Rationals => Rationals.parse(text).map(Scalar::Rational),
        FieldDescriptor::Prime(p) => {
            let fp = PrimeField::new(p as u64)?;
            let value = fp.parse(text)?;
            Ok(Scalar::Prime { value, modulus: p })
        }
    }
}

struct Lexed<'a> {
    negative: bool,
    numerator: &'a str,
    denominator: Option<&'a str>,
}

fn lex(text: &str) -> Result<Lexed<'_>> {
    let malformed = || Error::MalformedScalar(text.to_string());
    let (negative, rest) = match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    };
    let (numerator, denominator) = match rest.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (rest, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(numerator) || denominator.is_some_and(|d| !digits(d)) {
        return Err(malformed());
    }
    Ok(Lexed {
        negative,
        numerator,
        denominator,
    })
}

fn big(digits: &str) -> BigInt {
    digits.parse().expect("lexer only admits decimal digits")
}

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn parse(&self, text: &str) -> Result<BigRational> {
        let lexed = lex(text)?;
        let mut numer = big(lexed.numerator);
        if lexed.negative {
            numer = -numer;
        }
        let denom = lexed.denominator.map(big).unwrap_or_else(BigInt::one);
        if denom.is_zero() {
            return Err(Error::ZeroDenominator(text.to_string()));
        }
        // BigRational::new reduces and moves the sign to the numerator.
        Ok(BigRational::new(numer, denom))
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar::Rational(a.clone())
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime(self.p)
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1 % self.p
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }

    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2).
        let p = self.p as u64;
        let mut base = *a as u64 % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Some(acc as u32)
    }

    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    fn parse(&self, text: &str) -> Result<u32> {
        let lexed = lex(text)?;
        if lexed.denominator.is_some() {
            return Err(Error::MalformedScalar(text.to_string()));
        }
        let mut v = big(lexed.numerator);
        if lexed.negative {
            v = -v;
        }
        Ok(self.reduce_big(&v))
    }

    fn format(&self, a: &u32) -> String {
        a.to_string()
    }

    fn order(&self) -> Option<u64> {
        Some(self.p as u64)
    }

    fn to_scalar(&self, a: &u32) -> Scalar {
        Scalar::Prime {
            value: *a,
            modulus: self.p,
        }
    }
}

/// Sign-normalised check used by tests and debug assertions.
pub fn is_canonical_rational(q: &BigRational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing_reduces() {
        let q = Rationals.parse("3/6").unwrap();
        assert_eq!(Rationals.format(&q), "1/2");
        let q = Rationals.parse("-2/4").unwrap();
        assert_eq!(Rationals.format(&q), "-1/2");
        assert!(q.denom().is_positive());
        assert!(is_canonical_rational(&q));
        assert_eq!(Rationals.format(&Rationals.parse("0/7").unwrap()), "0");
        assert_eq!(Rationals.parse("0/7").unwrap().denom(), &BigInt::one());
        assert_eq!(Rationals.format(&Rationals.parse("+12").unwrap()), "12");
    }

    #[test]
    fn prime_parsing_reduces() {
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.parse("5").unwrap(), 1);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.parse("-1").unwrap(), 6);
        assert_eq!(
            f7.parse("700000000000000000000001").unwrap(),
            (700000000000000000000001u128 % 7) as u32
        );
        assert!(matches!(f7.parse("1/2"), Err(Error::MalformedScalar(_))));
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "-", "1/", "/2", "1.5", "1/-2", "a", "1 ", "--1", "1/2/3"] {
            assert!(
                matches!(Rationals.parse(bad), Err(Error::MalformedScalar(_))),
                "{bad:?}"
            );
        }
        assert!(matches!(Rationals.parse("1/0"), Err(Error::ZeroDenominator(_))));
    }

    #[test]
    fn modulus_must_be_prime() {
        assert!(matches!(PrimeField::new(4), Err(Error::NotPrime(4))));
        assert!(matches!(PrimeField::new(1), Err(Error::NotPrime(1))));
        assert!(PrimeField::new(2_147_483_647).is_ok());
        assert!(PrimeField::new(MAX_PRIME + 11).is_err());
        assert!(parse_scalar("1", FieldDescriptor::Prime(9)).is_err());
    }

    #[test]
    fn parse_scalar_tags_field() {
        assert_eq!(
            parse_scalar("5", FieldDescriptor::Prime(2)).unwrap(),
            Scalar::Prime { value: 1, modulus: 2 }
        );
        assert_eq!(
            parse_scalar("3/6", FieldDescriptor::Rationals).unwrap().to_string(),
            "1/2"
        );
    }

    #[test]
    fn prime_inverse() {
        let f = PrimeField::new(2_147_483_647).unwrap();
        for a in [1u32, 2, 12345, 2_147_483_646] {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), 1);
        }
        assert_eq!(f.inv(&0), None);
    }
}
