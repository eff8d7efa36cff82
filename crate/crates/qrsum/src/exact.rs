//! Exact arithmetic in `Q[ω]/(ω² − D)` for a nonzero integer D.
//!
//! The counting formulas live in Q(√q) or Q(i√q); representing ω = √q or
//! ω = i√q symbolically (D = q resp. D = −q) keeps every intermediate value
//! exact. A value only leaves the ring through [`QuadExact::assert_integer`],
//! which demands a zero ω-part and unit denominator — any residue there is an
//! implementation bug, never a rounding artifact.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Identifies the ring by the square of the adjoined element: ω² = D.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingTag {
    d: BigInt,
}

impl RingTag {
    pub fn new(d: BigInt) -> RingTag {
        assert!(!d.is_zero(), "ω² must be nonzero");
        RingTag { d }
    }

    /// ω = √n (n a positive integer).
    pub fn real(n: &BigInt) -> RingTag {
        assert!(n.is_positive());
        RingTag::new(n.clone())
    }

    /// ω = i√n, i.e. ω² = −n.
    pub fn imaginary(n: &BigInt) -> RingTag {
        assert!(n.is_positive());
        RingTag::new(-n)
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω²={}", self.d)
    }
}

/// a + b·ω with exact rational coefficients, ω² = D from the tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExact {
    a: BigRational,
    b: BigRational,
    tag: RingTag,
}

impl QuadExact {
    pub fn new(a: BigRational, b: BigRational, tag: RingTag) -> QuadExact {
        QuadExact { a, b, tag }
    }

    pub fn zero(tag: RingTag) -> QuadExact {
        QuadExact::new(BigRational::zero(), BigRational::zero(), tag)
    }

    pub fn one(tag: RingTag) -> QuadExact {
        QuadExact::from_int(1, tag)
    }

    /// The adjoined element ω itself.
    pub fn omega(tag: RingTag) -> QuadExact {
        QuadExact::new(BigRational::zero(), BigRational::one(), tag)
    }

    pub fn from_int(n: i64, tag: RingTag) -> QuadExact {
        QuadExact::from_rational(BigRational::from_integer(BigInt::from(n)), tag)
    }

    pub fn from_bigint(n: &BigInt, tag: RingTag) -> QuadExact {
        QuadExact::from_rational(BigRational::from_integer(n.clone()), tag)
    }

    pub fn from_rational(a: BigRational, tag: RingTag) -> QuadExact {
        QuadExact::new(a, BigRational::zero(), tag)
    }

    pub fn tag(&self) -> &RingTag {
        &self.tag
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn omega_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The conjugate a − b·ω, the nontrivial ring automorphism.
    pub fn conj(&self) -> QuadExact {
        QuadExact::new(self.a.clone(), -self.b.clone(), self.tag.clone())
    }

    pub fn scalar_mul(&self, r: &BigRational) -> QuadExact {
        QuadExact::new(&self.a * r, &self.b * r, self.tag.clone())
    }

    /// Exact division by a nonzero rational.
    pub fn scalar_div(&self, r: &BigRational) -> QuadExact {
        assert!(!r.is_zero(), "division by zero rational");
        self.scalar_mul(&r.recip())
    }

    /// x·conj(x) = a² − b²·D, always ω-free.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.tag.d.clone())
    }

    /// n-th power by repeated squaring; x⁰ = 1.
    pub fn pow(&self, n: u64) -> QuadExact {
        let mut result = QuadExact::one(self.tag.clone());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        result
    }

    /// x(x−1)⋯(x−k+1); the empty product (k = 0) is 1.
    pub fn falling_factorial(&self, k: u64) -> QuadExact {
        let mut result = QuadExact::one(self.tag.clone());
        let mut factor = self.clone();
        let one = QuadExact::one(self.tag.clone());
        for _ in 0..k {
            result = &result * &factor;
            factor = &factor - &one;
        }
        result
    }

    /// Generalized binomial coefficient: falling_factorial(x, n) / n!.
    pub fn binomial_general(&self, n: u64) -> QuadExact {
        let mut n_fact = BigRational::one();
        for j in 1..=n {
            n_fact *= BigRational::from_integer(BigInt::from(j));
        }
        self.falling_factorial(n).scalar_div(&n_fact)
    }

    /// The single exit from ring arithmetic to integer counts: succeeds only
    /// when the ω-part is zero and the rational part has denominator 1.
    pub fn assert_integer(&self) -> Result<BigInt> {
        if self.b.is_zero() && self.a.is_integer() {
            Ok(self.a.to_integer())
        } else {
            Err(Error::NonIntegerResult(self.to_string()))
        }
    }
}

impl fmt::Display for QuadExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·ω [{}]", self.a, self.b, self.tag)
    }
}

fn check_tags(x: &QuadExact, y: &QuadExact) {
    assert_eq!(x.tag, y.tag, "mixed quadratic rings: {} vs {}", x.tag, y.tag);
}

impl Add for &QuadExact {
    type Output = QuadExact;
    fn add(self, rhs: &QuadExact) -> QuadExact {
        check_tags(self, rhs);
        QuadExact::new(&self.a + &rhs.a, &self.b + &rhs.b, self.tag.clone())
    }
}

impl Sub for &QuadExact {
    type Output = QuadExact;
    fn sub(self, rhs: &QuadExact) -> QuadExact {
        check_tags(self, rhs);
        QuadExact::new(&self.a - &rhs.a, &self.b - &rhs.b, self.tag.clone())
    }
}

impl Mul for &QuadExact {
    type Output = QuadExact;
    fn mul(self, rhs: &QuadExact) -> QuadExact {
        check_tags(self, rhs);
        let d = BigRational::from_integer(self.tag.d.clone());
        QuadExact::new(
            &self.a * &rhs.a + (&self.b * &rhs.b) * &d,
            &self.a * &rhs.b + &self.b * &rhs.a,
            self.tag.clone(),
        )
    }
}

impl Neg for &QuadExact {
    type Output = QuadExact;
    fn neg(self) -> QuadExact {
        QuadExact::new(-self.a.clone(), -self.b.clone(), self.tag.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn multiplication_examples() {
        let d5 = RingTag::real(&BigInt::from(5));
        let x = QuadExact::new(int(1), int(1), d5.clone()); // 1 + ω
        let y = QuadExact::new(int(1), int(-1), d5.clone()); // 1 − ω
        assert_eq!(&x * &y, QuadExact::from_int(-4, d5.clone()));

        let dm7 = RingTag::imaginary(&BigInt::from(7));
        let x = QuadExact::new(int(1), int(1), dm7.clone());
        let y = QuadExact::new(int(-1), int(1), dm7.clone());
        assert_eq!(&x * &y, QuadExact::from_int(-8, dm7.clone()));

        let any = QuadExact::new(rat(3, 2), rat(-1, 3), d5.clone());
        assert_eq!(&any * &QuadExact::one(d5), any);
    }

    #[test]
    fn pow_examples() {
        let d5 = RingTag::real(&BigInt::from(5));
        let x = QuadExact::new(int(1), int(1), d5.clone());
        assert_eq!(x.pow(2), QuadExact::new(int(6), int(2), d5.clone()));
        let y = QuadExact::new(int(1), int(-1), d5.clone());
        assert_eq!(y.pow(2), QuadExact::new(int(6), int(-2), d5.clone()));
        assert_eq!(x.pow(0), QuadExact::one(d5));
    }

    #[test]
    fn conj_examples() {
        let d5 = RingTag::real(&BigInt::from(5));
        let x = QuadExact::new(int(3), int(2), d5.clone());
        assert_eq!(x.conj(), QuadExact::new(int(3), int(-2), d5.clone()));
        assert_eq!(&x + &x.conj(), QuadExact::from_int(6, d5));
    }

    #[test]
    fn falling_factorial_examples() {
        let d5 = RingTag::real(&BigInt::from(5));
        let four = QuadExact::from_int(4, d5.clone());
        assert_eq!(four.falling_factorial(2), QuadExact::from_int(12, d5.clone()));
        let omega = QuadExact::omega(d5.clone());
        assert_eq!(
            omega.falling_factorial(3),
            QuadExact::new(int(-15), int(7), d5.clone())
        );
        assert_eq!(omega.falling_factorial(0), QuadExact::one(d5));
    }

    #[test]
    fn binomial_general_examples() {
        let d5 = RingTag::real(&BigInt::from(5));
        let minus_one = QuadExact::from_int(-1, d5.clone());
        assert_eq!(minus_one.binomial_general(3), QuadExact::from_int(-1, d5.clone()));
        let half = QuadExact::from_rational(rat(1, 2), d5.clone());
        assert_eq!(
            half.binomial_general(2),
            QuadExact::from_rational(rat(-1, 8), d5.clone())
        );
        let omega = QuadExact::omega(d5.clone());
        assert_eq!(
            omega.binomial_general(2),
            QuadExact::new(rat(5, 2), rat(-1, 2), d5)
        );
    }

    #[test]
    fn assert_integer_examples() {
        let d5 = RingTag::real(&BigInt::from(5));
        assert_eq!(
            QuadExact::from_int(8, d5.clone()).assert_integer().unwrap(),
            BigInt::from(8)
        );
        assert!(matches!(
            QuadExact::from_rational(rat(1, 2), d5.clone()).assert_integer(),
            Err(Error::NonIntegerResult(_))
        ));
        assert!(matches!(
            QuadExact::new(int(3), int(1), d5).assert_integer(),
            Err(Error::NonIntegerResult(_))
        ));
    }

    #[test]
    #[should_panic(expected = "mixed quadratic rings")]
    fn mixed_tags_panic() {
        let x = QuadExact::from_int(1, RingTag::real(&BigInt::from(5)));
        let y = QuadExact::from_int(1, RingTag::imaginary(&BigInt::from(5)));
        let _ = &x + &y;
    }

    fn random_value(rng: &mut ChaCha8Rng, tag: &RingTag) -> QuadExact {
        let part = |rng: &mut ChaCha8Rng| {
            BigRational::new(BigInt::from(rng.gen_range(-99i64..=99)), BigInt::from(rng.gen_range(1i64..=9)))
        };
        QuadExact::new(part(rng), part(rng), tag.clone())
    }

    #[test]
    fn ring_axioms_randomized() {
        let tags = [RingTag::real(&BigInt::from(7)), RingTag::imaginary(&BigInt::from(7))];
        for (i, tag) in tags.iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + i as u64);
            for _ in 0..10_000 {
                let x = random_value(&mut rng, tag);
                let y = random_value(&mut rng, tag);
                let z = random_value(&mut rng, tag);
                assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
                assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
                assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
                assert_eq!(&x * &y, &y * &x);
            }
        }
    }

    #[test]
    fn conj_is_an_automorphism_and_norm_is_multiplicative() {
        let tags = [RingTag::real(&BigInt::from(13)), RingTag::imaginary(&BigInt::from(13))];
        for (i, tag) in tags.iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(0xc0_0001 + i as u64);
            for _ in 0..2_000 {
                let x = random_value(&mut rng, tag);
                let y = random_value(&mut rng, tag);
                assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
                assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
                assert_eq!((&x * &y).norm(), x.norm() * y.norm());
                // the norm really is x·conj(x)
                assert_eq!(
                    &x * &x.conj(),
                    QuadExact::from_rational(x.norm(), tag.clone())
                );
            }
        }
    }
}
