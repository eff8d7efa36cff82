//! Gauss and Jacobi-type character sums for the trivial and quadratic
//! characters: closed forms in exact arithmetic, plus direct brute-force
//! evaluators used to verify them.
//!
//! Conventions: the trivial character takes the value 1 everywhere, including
//! at 0; a nontrivial character vanishes at 0. The quadratic character's
//! Gauss sum is ±√q or ±i√q depending on p mod 4 and the parity of s, which
//! is why every closed form here is stated over the ring ω² = q or ω² = −q.

use crate::error::{Error, Result};
use crate::exact::{QuadExact, RingTag};
use crate::field::{FieldElement, FieldSpec};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

/// State cap for the direct Jacobi-sum evaluator (q^{n−1} tuples).
pub const JACOBI_DIRECT_CAP: u64 = 10_000_000;

/// A character slot in a Jacobi-type sum. Counting solutions of quadratic
/// equations only ever needs characters with χ² = 1, so these two suffice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharSlot {
    Trivial,
    Quadratic,
}

/// Which of the four hyperplane sums to evaluate: target 1 or 0, with or
/// without the all-coordinates-nonzero restriction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobiVariant {
    /// Σ over y_1+…+y_n = 1.
    J,
    /// Σ over y_1+…+y_n = 1 with all y_i ≠ 0.
    JStar,
    /// Σ over y_1+…+y_n = 0.
    J0,
    /// Σ over y_1+…+y_n = 0 with all y_i ≠ 0.
    J0Star,
}

impl JacobiVariant {
    fn target_is_one(self) -> bool {
        matches!(self, JacobiVariant::J | JacobiVariant::JStar)
    }

    fn nonzero_only(self) -> bool {
        matches!(self, JacobiVariant::JStar | JacobiVariant::J0Star)
    }
}

/// True when the quadratic character's Gauss sum is real (±√q), i.e. when
/// p ≡ 1 (mod 4) or s is even; false when it is purely imaginary (±i√q).
pub fn gauss_is_real(f: &FieldSpec) -> bool {
    f.p() % 4 == 1 || f.s().is_multiple_of(2)
}

/// The quadratic ring every closed formula for this field evaluates in:
/// ω² = q in the real case, ω² = −q in the imaginary case.
pub fn ring_tag(f: &FieldSpec) -> RingTag {
    let q = f.q_int();
    if gauss_is_real(f) {
        RingTag::real(&q)
    } else {
        RingTag::imaginary(&q)
    }
}

/// Closed form of the quadratic-character Gauss sum G(χ) = Σ χ(t)·ζ^{Tr(t)}:
/// (−1)^{s−1}√q when p ≡ 1 (mod 4), (−1)^{s−1}i^s√q when p ≡ 3 (mod 4).
/// Returned as ±ω in the matching ring, with a case label
/// ("real" or "imaginary") naming the branch taken.
pub fn gauss_closed(f: &FieldSpec) -> (QuadExact, &'static str) {
    let s = f.s();
    let tag = ring_tag(f);
    let omega = QuadExact::omega(tag.clone());
    let (sign, case) = if f.p() % 4 == 1 {
        // (−1)^{s−1}·√q
        (if (s - 1).is_multiple_of(2) { 1 } else { -1 }, "real")
    } else if s.is_multiple_of(2) {
        // (−1)^{s−1}·i^s·√q with i^s = (−1)^{s/2} real; s even makes
        // (−1)^{s−1} = −1.
        (if (s / 2).is_multiple_of(2) { -1 } else { 1 }, "real")
    } else {
        // s odd: i^s = (−1)^{(s−1)/2}·i and (−1)^{s−1} = 1, so the
        // coefficient of ω = i√q is (−1)^{(s−1)/2}.
        (if ((s - 1) / 2).is_multiple_of(2) { 1 } else { -1 }, "imaginary")
    };
    let value = if sign == 1 { omega } else { -&omega };
    (value, case)
}

/// Numeric image of a + b·ω: ω ↦ √D for D > 0, ω ↦ i√|D| for D < 0.
/// Test oracle only — all production arithmetic stays exact.
pub fn numeric_value(x: &QuadExact) -> Complex64 {
    let d = x.tag().d().to_f64().expect("tag fits f64");
    let omega = if d >= 0.0 {
        Complex64::new(d.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-d).sqrt())
    };
    let a = x.rational_part().to_f64().expect("coefficient fits f64");
    let b = x.omega_part().to_f64().expect("coefficient fits f64");
    Complex64::new(a, 0.0) + Complex64::new(b, 0.0) * omega
}

/// Direct numeric evaluation of G_a(χ) = Σ_t χ(t)·ζ^{Tr(at)} with
/// ζ = e^{2πi/p}; the brute-force counterpart of [`gauss_closed`].
pub fn gauss_direct(a: &FieldElement, f: &FieldSpec) -> Result<Complex64> {
    let p = f.p() as f64;
    let mut total = Complex64::zero();
    for t in f.elements()? {
        let chi = f.chi(&t);
        if chi == 0 {
            continue;
        }
        let tr = f.trace(&f.mul(a, &t)) as f64;
        let angle = 2.0 * std::f64::consts::PI * tr / p;
        total += Complex64::new(chi as f64, 0.0) * Complex64::new(angle.cos(), angle.sin());
    }
    Ok(total)
}

fn bigint_pow(base: BigInt, e: u64) -> BigInt {
    base.pow(e as u32)
}

/// Closed form of J(χ,…,χ) with e ≥ 1 quadratic slots. Real case:
/// q^{(e−1)/2} for e odd, −q^{e/2−1} for e even. Imaginary case: (−q)^{(e−1)/2}
/// for e odd, (−q)^{e/2−1} for e even.
pub fn jacobi_quadratic_closed(e: u64, f: &FieldSpec) -> BigInt {
    assert!(e >= 1, "at least one slot");
    let q = f.q_int();
    if gauss_is_real(f) {
        if e % 2 == 1 {
            bigint_pow(q, (e - 1) / 2)
        } else {
            -bigint_pow(q, e / 2 - 1)
        }
    } else {
        let neg_q = -q;
        if e % 2 == 1 {
            bigint_pow(neg_q, (e - 1) / 2)
        } else {
            bigint_pow(neg_q, e / 2 - 1)
        }
    }
}

/// Closed form of J_0(χ,…,χ) with e ≥ 1 quadratic slots: 0 for e odd (the
/// product character is χ ≠ 1); for e even, (q−1)·q^{e/2−1} in the real case
/// and −(q−1)·(−q)^{e/2−1} in the imaginary case.
pub fn j0_quadratic_closed(e: u64, f: &FieldSpec) -> BigInt {
    assert!(e >= 1, "at least one slot");
    if e % 2 == 1 {
        return BigInt::zero();
    }
    let q = f.q_int();
    let q_minus_1: BigInt = &q - 1;
    if gauss_is_real(f) {
        q_minus_1 * bigint_pow(q, e / 2 - 1)
    } else {
        -q_minus_1 * bigint_pow(-q, e / 2 - 1)
    }
}

/// Brute-force evaluation of any of the four Jacobi-type sums by enumerating
/// the q^{n−1} points of the hyperplane. Exact: every character value is in
/// {−1, 0, 1}.
pub fn jacobi_direct(slots: &[CharSlot], variant: JacobiVariant, f: &FieldSpec) -> Result<BigInt> {
    let n = slots.len();
    assert!(n >= 1, "at least one slot");
    let states = f.q().pow(n as u32 - 1);
    if states > JACOBI_DIRECT_CAP.into() {
        return Err(Error::CapExceeded { needed: states, cap: JACOBI_DIRECT_CAP });
    }
    let elems = f.elements_capped(JACOBI_DIRECT_CAP)?;
    let chi: Vec<i8> = elems.iter().map(|x| f.chi(x)).collect();
    // character value per slot kind, indexed by element rank
    let slot_value = |slot: CharSlot, idx: usize| -> i64 {
        match slot {
            CharSlot::Trivial => 1,
            CharSlot::Quadratic => chi[idx] as i64,
        }
    };
    let target = if variant.target_is_one() { f.one() } else { f.zero() };

    let mut total: i64 = 0;
    // odometer over the first n−1 coordinates; the last is solved for
    let mut idx = vec![0usize; n - 1];
    loop {
        let mut sum = f.zero();
        let mut product: i64 = 1;
        let mut skip = false;
        for (j, &i) in idx.iter().enumerate() {
            let y = &elems[i];
            if y.is_zero() && variant.nonzero_only() {
                skip = true;
                break;
            }
            let v = slot_value(slots[j], i);
            if v == 0 {
                skip = true; // a quadratic slot at 0 contributes nothing
                break;
            }
            product *= v;
            sum = f.add(&sum, y);
        }
        if !skip {
            let last = f.sub(&target, &sum);
            let allowed = !(last.is_zero() && variant.nonzero_only());
            if allowed {
                total += product * slot_value(slots[n - 1], f.element_index(&last));
            }
        }
        // advance the odometer
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(BigInt::from(total));
            }
            idx[pos] += 1;
            if idx[pos] < elems.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Closed-form evaluation of any of the four sums for a mixed
/// trivial/quadratic slot pattern, by the reduction rules: trivial slots
/// either factor out (contributing a sign (−1)^e under the nonzero
/// restriction) or force the value, leaving a pure quadratic sum.
pub fn closed_mixed(slots: &[CharSlot], variant: JacobiVariant, f: &FieldSpec) -> BigInt {
    let n = slots.len() as u64;
    assert!(n >= 1, "at least one slot");
    let e = slots.iter().filter(|s| matches!(s, CharSlot::Trivial)).count() as u64;
    let q = f.q_int();
    let q_minus_1 = &q - 1;
    let sign = |k: u64| -> BigInt {
        if k.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    match variant {
        JacobiVariant::JStar => {
            if e == n {
                // (1/q)[(q−1)^n − (−1)^n]
                (bigint_pow(q_minus_1, n) - sign(n)) / q
            } else {
                sign(e) * jacobi_quadratic_closed(n - e, f)
            }
        }
        JacobiVariant::J0Star => {
            if e == n {
                // (1/q)[(q−1)^n + (q−1)(−1)^n]
                (bigint_pow(q_minus_1.clone(), n) + q_minus_1 * sign(n)) / q
            } else {
                sign(e) * j0_quadratic_closed(n - e, f)
            }
        }
        JacobiVariant::J0 => {
            if e == n {
                bigint_pow(q, n - 1)
            } else if e > 0 {
                BigInt::zero()
            } else {
                // all slots quadratic
                j0_quadratic_closed(n, f)
            }
        }
        JacobiVariant::J => {
            if e == n {
                // unconstrained apart from the hyperplane
                bigint_pow(q, n - 1)
            } else if e > 0 {
                // a free trivial variable detaches the constraint and each
                // remaining quadratic slot sums to Σχ = 0
                BigInt::zero()
            } else {
                jacobi_quadratic_closed(n, f)
            }
        }
    }
}

/// The e-th elementary symmetric character sum Σ χ(a_{i₁}⋯a_{i_e}) over all
/// e-subsets of the coefficient list, evaluated two ways.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymMethod {
    /// Enumerate all e-subsets and sum the character of their product.
    Direct,
    /// (−1)^e·Σ_i (−1)^i·C(m,i)·C(n−m,e−i) with m = #{i : χ(a_i) = 1} —
    /// the coefficient of x^e in (1+x)^m(1−x)^{n−m}.
    Binomial,
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut result = BigInt::one();
    for j in 0..k {
        result = result * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    result
}

pub fn elementary_symmetric_char_sum(
    a: &[FieldElement],
    e: u64,
    f: &FieldSpec,
    method: SymMethod,
) -> Result<BigInt> {
    let n = a.len() as u64;
    assert!(e >= 1 && e <= n, "1 ≤ e ≤ n required");
    if a.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroCoefficient);
    }
    match method {
        SymMethod::Direct => {
            // iterate e-subsets by index combination
            let e = e as usize;
            let n = n as usize;
            let mut pick: Vec<usize> = (0..e).collect();
            let mut total = BigInt::zero();
            loop {
                let mut prod = f.one();
                for &i in &pick {
                    prod = f.mul(&prod, &a[i]);
                }
                total += BigInt::from(f.chi(&prod));
                // next combination in lexicographic order
                let mut i = e;
                loop {
                    if i == 0 {
                        return Ok(total);
                    }
                    i -= 1;
                    if pick[i] != i + n - e {
                        break;
                    }
                }
                pick[i] += 1;
                for j in i + 1..e {
                    pick[j] = pick[j - 1] + 1;
                }
            }
        }
        SymMethod::Binomial => {
            let m = a.iter().filter(|x| f.chi(x) == 1).count() as u64;
            let mut total = BigInt::zero();
            for i in 0..=m.min(e) {
                let term = binomial(m, i) * binomial(n - m, e - i);
                if i % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            if e % 2 == 1 {
                total = -total;
            }
            Ok(total)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn field(p: u64, s: usize) -> FieldSpec {
        FieldSpec::new(p, s, None).unwrap()
    }

    #[test]
    fn gauss_closed_examples() {
        let f5 = field(5, 1);
        let (g, case) = gauss_closed(&f5);
        assert_eq!(g, QuadExact::omega(RingTag::real(&BigInt::from(5))));
        assert_eq!(case, "real");

        let f3 = field(3, 1);
        let (g, case) = gauss_closed(&f3);
        assert_eq!(g, QuadExact::omega(RingTag::imaginary(&BigInt::from(3))));
        assert_eq!(case, "imaginary");

        let f9 = field(3, 2);
        let (g, case) = gauss_closed(&f9);
        assert_eq!(case, "real");
        let numeric = numeric_value(&g);
        assert!((numeric.re - 3.0).abs() < 1e-9 && numeric.im.abs() < 1e-12);
    }

    #[test]
    fn gauss_direct_examples() {
        let f5 = field(5, 1);
        let g = gauss_direct(&f5.one(), &f5).unwrap();
        assert!((g.re - 5f64.sqrt()).abs() < 1e-9 && g.im.abs() < 1e-9);

        let f3 = field(3, 1);
        let g = gauss_direct(&f3.one(), &f3).unwrap();
        assert!(g.re.abs() < 1e-9 && (g.im - 3f64.sqrt()).abs() < 1e-9);

        let zero_sum = gauss_direct(&f5.zero(), &f5).unwrap();
        assert!(zero_sum.norm() < 1e-9);
    }

    #[test]
    fn gauss_closed_matches_direct_across_fields() {
        for (p, s) in [(3, 1), (5, 1), (7, 1), (13, 1), (3, 2), (5, 2), (3, 3), (7, 2)] {
            let f = field(p, s);
            let (closed, _) = gauss_closed(&f);
            let direct = gauss_direct(&f.one(), &f).unwrap();
            let diff = numeric_value(&closed) - direct;
            assert!(diff.norm() < 1e-6, "gauss mismatch for q={}^{}", p, s);
        }
    }

    #[test]
    fn jacobi_closed_examples() {
        let f5 = field(5, 1);
        assert_eq!(jacobi_quadratic_closed(2, &f5), BigInt::from(-1));
        let f3 = field(3, 1);
        assert_eq!(jacobi_quadratic_closed(3, &f3), BigInt::from(-3));
        assert_eq!(jacobi_quadratic_closed(1, &f5), BigInt::from(1));
        assert_eq!(jacobi_quadratic_closed(1, &f3), BigInt::from(1));
    }

    #[test]
    fn j0_closed_examples() {
        let f5 = field(5, 1);
        assert_eq!(j0_quadratic_closed(2, &f5), BigInt::from(4));
        assert_eq!(j0_quadratic_closed(3, &f5), BigInt::from(0));
        let f3 = field(3, 1);
        assert_eq!(j0_quadratic_closed(2, &f3), BigInt::from(-2));
    }

    #[test]
    fn jacobi_direct_examples() {
        let f5 = field(5, 1);
        use CharSlot::*;
        assert_eq!(
            jacobi_direct(&[Quadratic, Quadratic], JacobiVariant::J, &f5).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            jacobi_direct(&[Trivial, Trivial], JacobiVariant::JStar, &f5).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            jacobi_direct(&[Trivial, Quadratic], JacobiVariant::J0, &f5).unwrap(),
            BigInt::from(0)
        );
    }

    #[test]
    fn closed_mixed_examples() {
        let f5 = field(5, 1);
        use CharSlot::*;
        // all-trivial patterns, every n
        for n in 1..=4u64 {
            let slots = vec![Trivial; n as usize];
            let q = BigInt::from(5);
            let qm1 = BigInt::from(4);
            let expected = (qm1.pow(n as u32)
                + &qm1 * if n % 2 == 0 { BigInt::one() } else { -BigInt::one() })
                / &q;
            assert_eq!(closed_mixed(&slots, JacobiVariant::J0Star, &f5), expected);
        }
        assert_eq!(
            closed_mixed(&[Trivial, Quadratic, Quadratic], JacobiVariant::JStar, &f5),
            BigInt::from(1)
        );
        assert_eq!(closed_mixed(&[Quadratic], JacobiVariant::J0, &f5), BigInt::from(0));
    }

    #[test]
    fn closed_mixed_matches_direct_on_all_small_patterns() {
        use CharSlot::*;
        for (p, s) in [(3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (3, 2)] {
            let f = field(p, s);
            for n in 1..=4usize {
                for mask in 0..(1u32 << n) {
                    let slots: Vec<CharSlot> = (0..n)
                        .map(|i| if mask >> i & 1 == 1 { Quadratic } else { Trivial })
                        .collect();
                    for variant in [
                        JacobiVariant::J,
                        JacobiVariant::JStar,
                        JacobiVariant::J0,
                        JacobiVariant::J0Star,
                    ] {
                        let direct = jacobi_direct(&slots, variant, &f).unwrap();
                        let closed = closed_mixed(&slots, variant, &f);
                        assert_eq!(
                            closed, direct,
                            "{:?} {:?} over F_{}^{}",
                            slots, variant, p, s
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn quadratic_closed_forms_match_direct() {
        for (p, s) in [(3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (3, 2), (5, 2), (3, 3)] {
            let f = field(p, s);
            for e in 1..=4u64 {
                let slots = vec![CharSlot::Quadratic; e as usize];
                assert_eq!(
                    jacobi_quadratic_closed(e, &f),
                    jacobi_direct(&slots, JacobiVariant::J, &f).unwrap(),
                    "J(χ^{e}) over F_{p}^{s}"
                );
                assert_eq!(
                    j0_quadratic_closed(e, &f),
                    jacobi_direct(&slots, JacobiVariant::J0, &f).unwrap(),
                    "J0(χ^{e}) over F_{p}^{s}"
                );
            }
        }
    }

    #[test]
    fn elementary_symmetric_examples() {
        let f7 = field(7, 1);
        let residues: Vec<FieldElement> =
            [1, 2, 4].iter().map(|&r| f7.from_residue(r)).collect();
        for method in [SymMethod::Direct, SymMethod::Binomial] {
            assert_eq!(
                elementary_symmetric_char_sum(&residues, 2, &f7, method).unwrap(),
                BigInt::from(3)
            );
            assert_eq!(
                elementary_symmetric_char_sum(&residues, 3, &f7, method).unwrap(),
                BigInt::from(1)
            );
        }
        let mixed: Vec<FieldElement> = [1, 3].iter().map(|&r| f7.from_residue(r)).collect();
        for method in [SymMethod::Direct, SymMethod::Binomial] {
            assert_eq!(
                elementary_symmetric_char_sum(&mixed, 2, &f7, method).unwrap(),
                BigInt::from(-1)
            );
        }
        let with_zero = vec![f7.zero()];
        assert!(matches!(
            elementary_symmetric_char_sum(&with_zero, 1, &f7, SymMethod::Direct),
            Err(Error::ZeroCoefficient)
        ));
    }

    #[test]
    fn elementary_symmetric_methods_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5e17);
        for (p, s) in [(5, 1), (7, 1), (11, 1), (13, 1), (3, 2), (5, 2), (3, 3)] {
            let f = field(p, s);
            let elems = f.elements().unwrap();
            for n in 1..=6usize {
                let a: Vec<FieldElement> = (0..n)
                    .map(|_| loop {
                        let x = elems[rng.gen_range(0..elems.len())].clone();
                        if !x.is_zero() {
                            break x;
                        }
                    })
                    .collect();
                for e in 1..=n as u64 {
                    let direct =
                        elementary_symmetric_char_sum(&a, e, &f, SymMethod::Direct).unwrap();
                    let binom =
                        elementary_symmetric_char_sum(&a, e, &f, SymMethod::Binomial).unwrap();
                    assert_eq!(direct, binom, "n={n}, e={e} over F_{p}^{s}");
                }
            }
        }
    }

    #[test]
    fn gauss_magnitude_is_sqrt_q() {
        for (p, s) in [(3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (3, 2), (5, 2), (7, 2), (3, 3)] {
            let f = field(p, s);
            let g = gauss_direct(&f.one(), &f).unwrap();
            let q = f.q().to_f64().unwrap();
            assert!((g.norm_sqr() - q).abs() < 1e-6, "|G|² ≠ q for {}^{}", p, s);
        }
    }

    #[test]
    fn numeric_value_embeds_rationals_exactly() {
        let tag = RingTag::real(&BigInt::from(9));
        let x = QuadExact::new(
            BigRational::new(BigInt::from(7), BigInt::from(2)),
            BigRational::new(BigInt::from(-1), BigInt::from(4)),
            tag,
        );
        // 7/2 − (1/4)·3 = 2.75
        let v = numeric_value(&x);
        assert!((v.re - 2.75).abs() < 1e-12 && v.im.abs() < 1e-12);
    }
}
