//! Exact arithmetic in `Q[ω]/(ω² − D)`, the ring every counting formula is
//! evaluated in.
//!
//! The counting formulas live in Q(√q) or Q(i√q) depending on the field.
//! Instead of floating point, values are pairs of exact rationals a + b·ω
//! with ω² = D pinned by a ring tag, and the final counts are *certified*
//! integers: any surviving ω-part or denominator is an error, not a
//! rounding candidate.
//!
//! Run with: cargo run --example quadratic_ring

use num_bigint::BigInt;
use num_rational::BigRational;
use qrsum::{QuadExact, RingTag};

fn main() {
    // ω² = 5: the ring Q(√5)
    let tag = RingTag::real(&BigInt::from(5));
    let one = QuadExact::one(tag.clone());
    let omega = QuadExact::omega(tag.clone());

    let plus = &one + &omega; // 1 + ω
    let minus = &one - &omega; // 1 − ω
    println!("in Q[ω]/(ω² − 5):");
    println!("  (1+ω)(1−ω) = {}", &plus * &minus); // 1 − ω² = −4
    println!("  (1+ω)²     = {}", plus.pow(2));
    println!("  conj(1+ω)  = {}", plus.conj());
    println!("  norm(1+ω)  = {}", plus.norm()); // a² − b²·D = −4

    // falling factorials and generalized binomials work over the ring —
    // these are the pieces the subset-sum formulas are assembled from
    println!("\n  ω·(ω−1)·(ω−2) = {}", omega.falling_factorial(3));
    println!("  C(ω, 2)        = {}", omega.binomial_general(2));
    let half = QuadExact::from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)), tag.clone());
    println!("  C(1/2, 2)      = {}", half.binomial_general(2));

    // the imaginary ring: ω² = −7, i.e. Q(i√7)
    let itag = RingTag::imaginary(&BigInt::from(7));
    let a = &QuadExact::one(itag.clone()) + &QuadExact::omega(itag.clone());
    println!("\nin Q[ω]/(ω² + 7):");
    println!("  (1+ω)(−1+ω) = {}", &a * &(&QuadExact::omega(itag.clone()) - &QuadExact::one(itag)));

    // integer certification: the exit gate for every count
    let six = &plus * &(&minus * &(-&(&one + &(&one + &one)).scalar_div(&BigRational::from_integer(BigInt::from(2)))));
    println!("\ncertification:");
    println!("  (1+ω)(1−ω)·(−3/2) = {six}");
    println!("  certified integer: {:?}", six.assert_integer().map(|v| v.to_string()));
    println!("  certifying ω itself: {:?}", omega.assert_integer().err().map(|e| e.to_string()));
}
