//! The counting pipeline, in exact arithmetic end to end:
//!
//! 1. `diagonal_count` — solutions of a_1x_1² + … + a_nx_n² = b with all x_i ≠ 0,
//!    from the two-case closed form over ω = √q or ω = i√q.
//! 2. `distinct_count` — the same with pairwise-distinct coordinates, via the
//!    cycle-type sieve: a signed sum over permutation cycle types collapses
//!    into the three-slot generating polynomial A_{k,b}(u, v, w).
//! 3. `subset_count` — the target quantity: k-element subsets of the quadratic
//!    residues H summing to b, obtained from the distinct-coordinate count by
//!    halving every slot argument (each residue has exactly two square roots)
//!    and dividing by k!.
//!
//! Every result leaves through `assert_integer`, so a nonzero ω-part or a
//! denominator anywhere is surfaced as an error instead of rounded away.

use crate::charsums::{gauss_is_real, ring_tag};
use crate::error::{Error, Result};
use crate::exact::{QuadExact, RingTag};
use crate::field::{FieldElement, FieldSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An integer count together with the label of the formula branch that
/// produced it, so a failing comparison always names its code path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub value: BigInt,
    pub branch: &'static str,
}

impl CountResult {
    fn certified(x: &QuadExact, branch: &'static str) -> Result<CountResult> {
        let value = x.assert_integer()?;
        assert!(!value.is_negative(), "negative count from branch {branch}: {value}");
        Ok(CountResult { value, branch })
    }
}

/// A permutation cycle type: c[i−1] cycles of length i, with Σ i·c_i = k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleType {
    c: Vec<u64>,
}

impl CycleType {
    pub fn counts(&self) -> &[u64] {
        &self.c
    }

    pub fn k(&self) -> u64 {
        self.c.iter().enumerate().map(|(i, &ci)| (i as u64 + 1) * ci).sum()
    }

    /// Number of permutations in S_k with this cycle type:
    /// k! / ∏ (i^{c_i} · c_i!).
    pub fn permutation_count(&self) -> BigInt {
        let mut denom = BigInt::one();
        for (i, &ci) in self.c.iter().enumerate() {
            let len = BigInt::from(i as u64 + 1);
            denom *= len.pow(ci as u32) * factorial(ci);
        }
        let num = factorial(self.k());
        let (quot, rem) = num_integer::Integer::div_rem(&num, &denom);
        debug_assert!(rem.is_zero());
        quot
    }
}

/// Every cycle type of S_k exactly once, in a fixed order (larger cycle
/// lengths filled first).
pub fn cycle_types(k: u64) -> Vec<CycleType> {
    fn go(len: u64, remaining: u64, current: &mut Vec<u64>, out: &mut Vec<CycleType>) {
        if len == 0 {
            if remaining == 0 {
                let mut c = current.clone();
                c.reverse(); // recorded from longest length down
                out.push(CycleType { c });
            }
            return;
        }
        for count in 0..=remaining / len {
            current.push(count);
            go(len - 1, remaining - count * len, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    go(k, k, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// C(n, k) for arbitrary-precision nonnegative n.
pub fn binomial(n: &BigInt, k: u64) -> BigInt {
    debug_assert!(!n.is_negative());
    if BigInt::from(k) > *n {
        return BigInt::zero();
    }
    let mut result = BigInt::one();
    for j in 0..k {
        result = result * (n - BigInt::from(j)) / BigInt::from(j + 1);
    }
    result
}

fn falling_bigint(n: &BigInt, k: u64) -> BigInt {
    let mut result = BigInt::one();
    for j in 0..k {
        result *= n - BigInt::from(j);
    }
    result
}

fn rational(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// How to evaluate the cycle-type generating polynomial C_k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CkMethod {
    /// Coefficient recurrence of exp(Σ t_i·u^i/i) — O(k²) ring products,
    /// the production path.
    Egf,
    /// Literal Σ over cycle types of N(c)·∏ t_i^{c_i} — the cross-check
    /// oracle; cost grows with the partition function.
    Partition,
}

/// C_k(t_1,…,t_k) = Σ_{Σ i·c_i = k} N(c)·∏ t_i^{c_i}, where k = |t| and the
/// tag pins the ring (needed when k = 0).
pub fn c_k(t: &[QuadExact], tag: &RingTag, method: CkMethod) -> QuadExact {
    for ti in t {
        assert_eq!(ti.tag(), tag, "slot values from a different ring");
    }
    let k = t.len();
    match method {
        CkMethod::Egf => {
            // f_0 = 1; (n+1)·f_{n+1} = Σ_{i=1}^{n+1} t_i·f_{n+1−i}; C_k = k!·f_k
            let mut f: Vec<QuadExact> = Vec::with_capacity(k + 1);
            f.push(QuadExact::one(tag.clone()));
            for n in 0..k {
                let mut sum = QuadExact::zero(tag.clone());
                for i in 1..=n + 1 {
                    sum = &sum + &(&t[i - 1] * &f[n + 1 - i]);
                }
                f.push(sum.scalar_div(&rational(BigInt::from(n as u64 + 1))));
            }
            f[k].scalar_mul(&rational(factorial(k as u64)))
        }
        CkMethod::Partition => {
            if k == 0 {
                return QuadExact::one(tag.clone());
            }
            let mut total = QuadExact::zero(tag.clone());
            for ct in cycle_types(k as u64) {
                let mut term = QuadExact::one(tag.clone());
                for (i, &ci) in ct.counts().iter().enumerate() {
                    if ci > 0 {
                        term = &term * &t[i].pow(ci);
                    }
                }
                total = &total + &term.scalar_mul(&rational(ct.permutation_count()));
            }
            total
        }
    }
}

/// The three slot values of the sieve polynomial plus the character branch:
/// cycle length i contributes w when p | i, else u when χ(i) = chi_b, else v.
#[derive(Clone, Debug)]
pub struct SieveArgs {
    u: QuadExact,
    v: QuadExact,
    w: QuadExact,
    chi_b: i8,
}

impl SieveArgs {
    pub fn new(u: QuadExact, v: QuadExact, w: QuadExact, chi_b: i8) -> Result<SieveArgs> {
        if u.tag() != v.tag() || u.tag() != w.tag() {
            return Err(Error::TagMismatch);
        }
        assert!(chi_b == 1 || chi_b == -1, "the branch selector is ±1");
        Ok(SieveArgs { u, v, w, chi_b })
    }
}

/// A_{k,b}(u, v, w): C_k with slots assigned by the divisibility/character
/// rule. When u = v the two-argument closed form is evaluated as well and
/// must agree.
pub fn a_kb(k: u64, args: &SieveArgs, f: &FieldSpec) -> QuadExact {
    let p = f.p();
    let t: Vec<QuadExact> = (1..=k)
        .map(|i| {
            if i % p == 0 {
                args.w.clone()
            } else if f.chi(&f.embed_int(i as i64)) == args.chi_b {
                args.u.clone()
            } else {
                args.v.clone()
            }
        })
        .collect();
    let generic = c_k(&t, args.u.tag(), CkMethod::Egf);
    if args.u == args.v {
        let closed = a_kb_closed(k, &args.u, &args.w, p);
        assert_eq!(generic, closed, "two-argument closed form disagrees at k={k}");
    }
    generic
}

/// The collapsed form when every p∤i slot carries the same value u:
/// A_k(u, w) = k!·(−1)^k·Σ_i C(−u, k−p·i)·C((u−w)/p, i).
pub fn a_kb_closed(k: u64, u: &QuadExact, w: &QuadExact, p: u64) -> QuadExact {
    let tag = u.tag().clone();
    let minus_u = -u;
    let ratio = (u - w).scalar_div(&rational(BigInt::from(p)));
    let mut sum = QuadExact::zero(tag);
    let mut i = 0u64;
    while p * i <= k {
        let term = &minus_u.binomial_general(k - p * i) * &ratio.binomial_general(i);
        sum = &sum + &term;
        i += 1;
    }
    let mut scale = rational(factorial(k));
    if k % 2 == 1 {
        scale = -scale;
    }
    sum.scalar_mul(&scale)
}

fn one_plus_minus_omega(tag: &RingTag) -> (QuadExact, QuadExact) {
    let one = QuadExact::one(tag.clone());
    let omega = QuadExact::omega(tag.clone());
    (&one + &omega, &one - &omega)
}

/// Number of solutions of Σ a_i·x_i² = b with every x_i ≠ 0, via the closed
/// two-case formula (ω = √q when p ≡ 1 mod 4 or s even, else ω = i√q).
pub fn diagonal_count(a: &[FieldElement], b: &FieldElement, f: &FieldSpec) -> Result<CountResult> {
    let n = a.len() as u64;
    assert!(n >= 1, "at least one coefficient");
    if a.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroCoefficient);
    }
    let tag = ring_tag(f);
    let real = gauss_is_real(f);
    let (plus, minus) = one_plus_minus_omega(&tag);
    let q = rational(f.q_int());
    let qm1_pow_n = rational((f.q_int() - BigInt::one()).pow(n as u32));
    let sign_n = if n.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };

    let (value, branch) = if !b.is_zero() {
        let chi_b = f.chi(b);
        let m = a.iter().filter(|ai| f.chi(ai) == chi_b).count() as u64;
        // the bracket pairs each product with its ω-conjugate
        let bracket = if real {
            &(&minus.pow(m + 1) * &plus.pow(n - m)) + &(&plus.pow(m + 1) * &minus.pow(n - m))
        } else {
            &(&minus.pow(m) * &plus.pow(n - m + 1)) + &(&plus.pow(m) * &minus.pow(n - m + 1))
        };
        let correction = bracket.scalar_mul(&(&sign_n / (BigRational::from_integer(BigInt::from(2)) * &q)));
        let main = QuadExact::from_rational(&qm1_pow_n / &q, tag.clone());
        (
            &main - &correction,
            if real { "diagonal-nonzero-real" } else { "diagonal-nonzero-imaginary" },
        )
    } else {
        let m = a.iter().filter(|ai| f.chi(ai) == 1).count() as u64;
        let bracket = &(&minus.pow(m) * &plus.pow(n - m)) + &(&plus.pow(m) * &minus.pow(n - m));
        let weight = &sign_n * (&q - BigRational::one())
            / (BigRational::from_integer(BigInt::from(2)) * &q);
        let main = QuadExact::from_rational(&qm1_pow_n / &q, tag.clone());
        (
            &main + &bracket.scalar_mul(&weight),
            if real { "diagonal-zero-real" } else { "diagonal-zero-imaginary" },
        )
    };
    CountResult::certified(&value, branch)
}

/// Number of tuples in (F_q*)^k with pairwise-distinct coordinates and
/// Σ x_i² = b, via the cycle-type sieve collapsed into A_{k,b}.
pub fn distinct_count(k: u64, b: &FieldElement, f: &FieldSpec) -> Result<CountResult> {
    let q_minus_1 = f.q() - 1u32;
    if num_bigint::BigUint::from(k) > q_minus_1 {
        return Err(Error::KOutOfRange { k, max: q_minus_1 });
    }
    let tag = ring_tag(f);
    let real = gauss_is_real(f);
    let (plus, minus) = one_plus_minus_omega(&tag);
    let one_minus_q = QuadExact::from_rational(
        rational(BigInt::one() - f.q_int()),
        tag.clone(),
    );
    let q = rational(f.q_int());
    let chi_b = if b.is_zero() { 1 } else { f.chi(b) };

    let a_first = a_kb(k, &SieveArgs::new(minus.clone(), plus.clone(), one_minus_q.clone(), chi_b)?, f);
    let a_second = a_kb(k, &SieveArgs::new(plus.clone(), minus.clone(), one_minus_q, chi_b)?, f);

    let main = QuadExact::from_rational(
        rational(falling_bigint(&(f.q_int() - BigInt::one()), k)) / &q,
        tag.clone(),
    );
    let sign_k = if k.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    let two_q = BigRational::from_integer(BigInt::from(2)) * &q;

    let (value, branch) = if !b.is_zero() {
        // the prefactor of each A is its u argument in the real case and the
        // conjugate of its u argument in the imaginary case
        let bracket = if real {
            &(&minus * &a_first) + &(&plus * &a_second)
        } else {
            &(&plus * &a_first) + &(&minus * &a_second)
        };
        (
            &main - &bracket.scalar_mul(&(&sign_k / two_q)),
            if real { "distinct-nonzero-real" } else { "distinct-nonzero-imaginary" },
        )
    } else {
        let bracket = &a_first + &a_second;
        let weight = &sign_k * (&q - BigRational::one()) / two_q;
        (
            &main + &bracket.scalar_mul(&weight),
            if real { "distinct-zero-real" } else { "distinct-zero-imaginary" },
        )
    };
    CountResult::certified(&value, branch)
}

fn check_subset_k(k: u64, f: &FieldSpec) -> Result<()> {
    let h_size = f.half_group_order();
    if num_bigint::BigUint::from(k) > h_size {
        return Err(Error::KOutOfRange { k, max: h_size });
    }
    Ok(())
}

/// N_H(k, b) — k-element subsets of the quadratic residues summing to b —
/// through the general two-case formula (halved slot arguments, 1/k!).
pub fn subset_count_via_sieve(k: u64, b: &FieldElement, f: &FieldSpec) -> Result<CountResult> {
    check_subset_k(k, f)?;
    if k == 0 {
        return Ok(CountResult {
            value: if b.is_zero() { BigInt::one() } else { BigInt::zero() },
            branch: "empty-subset",
        });
    }
    let tag = ring_tag(f);
    let real = gauss_is_real(f);
    let (plus, minus) = one_plus_minus_omega(&tag);
    let two = rational(BigInt::from(2));
    let half_plus = plus.scalar_div(&two);
    let half_minus = minus.scalar_div(&two);
    let half_one_minus_q = QuadExact::from_rational(
        rational(BigInt::one() - f.q_int()) / &two,
        tag.clone(),
    );
    let q = rational(f.q_int());
    let chi_b = if b.is_zero() { 1 } else { f.chi(b) };

    let a_first = a_kb(
        k,
        &SieveArgs::new(half_minus.clone(), half_plus.clone(), half_one_minus_q.clone(), chi_b)?,
        f,
    );
    let a_second =
        a_kb(k, &SieveArgs::new(half_plus, half_minus, half_one_minus_q, chi_b)?, f);

    let main = QuadExact::from_rational(
        rational(binomial(&BigInt::from(f.half_group_order()), k)) / &q,
        tag.clone(),
    );
    let sign_k = if k.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    let two_q_kfact = BigRational::from_integer(BigInt::from(2)) * &q * rational(factorial(k));

    let (value, branch) = if !b.is_zero() {
        let bracket = if real {
            &(&minus * &a_first) + &(&plus * &a_second)
        } else {
            &(&plus * &a_first) + &(&minus * &a_second)
        };
        (
            &main - &bracket.scalar_mul(&(&sign_k / two_q_kfact)),
            if real { "subset-nonzero-real" } else { "subset-nonzero-imaginary" },
        )
    } else {
        let bracket = &a_first + &a_second;
        let weight = &sign_k * (&q - BigRational::one()) / two_q_kfact;
        (
            &main + &bracket.scalar_mul(&weight),
            if real { "subset-zero-real" } else { "subset-zero-imaginary" },
        )
    };
    CountResult::certified(&value, branch)
}

/// N_H(k, b) when s is even: χ restricted to the prime field is trivial, so
/// both non-multiple slots coincide and the two-argument closed form applies,
/// with √q = p^{s/2} an ordinary integer — the whole computation stays in
/// plain rationals.
pub fn subset_count_even_s(k: u64, b: &FieldElement, f: &FieldSpec) -> Result<CountResult> {
    if !f.s().is_multiple_of(2) {
        return Err(Error::OddExtensionDegree);
    }
    check_subset_k(k, f)?;
    if k == 0 {
        return Ok(CountResult {
            value: if b.is_zero() { BigInt::one() } else { BigInt::zero() },
            branch: "empty-subset",
        });
    }
    let tag = ring_tag(f);
    let p = f.p();
    let sqrt_q = rational(BigInt::from(p).pow(f.s() as u32 / 2));
    let rat = |r: BigRational| QuadExact::from_rational(r, tag.clone());
    let two = rational(BigInt::from(2));
    let plus = rat((BigRational::one() + &sqrt_q) / &two); // (1+√q)/2
    let minus = rat((BigRational::one() - &sqrt_q) / &two); // (1−√q)/2
    let w = rat((BigRational::one() - rational(f.q_int())) / &two); // (1−q)/2
    let q = rational(f.q_int());
    let sign_k = if k.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    let two_q_kfact = BigRational::from_integer(BigInt::from(2)) * &q * rational(factorial(k));
    let main = rat(rational(binomial(&BigInt::from(f.half_group_order()), k)) / &q);

    let (value, branch) = if !b.is_zero() {
        // prefactors are always (1∓√q); χ(b) decides which halved argument
        // each one multiplies
        let (first_arg, second_arg) = if f.chi(b) == 1 {
            (&minus, &plus)
        } else {
            (&plus, &minus)
        };
        let pref_minus = rat(BigRational::one() - &sqrt_q);
        let pref_plus = rat(BigRational::one() + &sqrt_q);
        let bracket = &(&pref_minus * &a_kb_closed(k, first_arg, &w, p))
            + &(&pref_plus * &a_kb_closed(k, second_arg, &w, p));
        (&main - &bracket.scalar_mul(&(&sign_k / two_q_kfact)), "subset-nonzero-even-s")
    } else {
        let bracket = &a_kb_closed(k, &plus, &w, p) + &a_kb_closed(k, &minus, &w, p);
        let weight = &sign_k * (&q - BigRational::one()) / two_q_kfact;
        (&main + &bracket.scalar_mul(&weight), "subset-zero-even-s")
    };
    CountResult::certified(&value, branch)
}

/// N_H(k, b), dispatching on the extension degree: for even s the simplified
/// rational path is the production route and the general formula is
/// evaluated alongside as a consistency assertion.
pub fn subset_count(k: u64, b: &FieldElement, f: &FieldSpec) -> Result<CountResult> {
    if f.s().is_multiple_of(2) {
        let fast = subset_count_even_s(k, b, f)?;
        let general = subset_count_via_sieve(k, b, f)?;
        assert_eq!(
            fast.value, general.value,
            "simplified and general subset formulas disagree at k={k}, b={b}"
        );
        Ok(fast)
    } else {
        subset_count_via_sieve(k, b, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{
        oracle_diagonal_table, oracle_distinct_table, oracle_subset_table, OracleBudget,
    };
    use num_traits::ToPrimitive;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn field(p: u64, s: usize) -> FieldSpec {
        FieldSpec::new(p, s, None).unwrap()
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn cycle_type_examples() {
        let types = cycle_types(3);
        assert_eq!(types.len(), 3);
        let by_counts: Vec<(Vec<u64>, BigInt)> = types
            .iter()
            .map(|t| (t.counts().to_vec(), t.permutation_count()))
            .collect();
        assert!(by_counts.contains(&(vec![3, 0, 0], int(1))));
        assert!(by_counts.contains(&(vec![1, 1, 0], int(3))));
        assert!(by_counts.contains(&(vec![0, 0, 1], int(2))));

        let k1 = cycle_types(1);
        assert_eq!(k1.len(), 1);
        assert_eq!(k1[0].counts(), &[1]);
        assert_eq!(k1[0].permutation_count(), int(1));
    }

    #[test]
    fn cycle_types_partition_the_symmetric_group() {
        for k in 1..=12u64 {
            let total: BigInt = cycle_types(k).iter().map(|t| t.permutation_count()).sum();
            assert_eq!(total, factorial(k), "Σ N(c) ≠ k! at k={k}");
        }
    }

    #[test]
    fn c_k_examples() {
        let tag = RingTag::real(&int(5));
        let a = QuadExact::from_rational(
            BigRational::new(int(3), int(2)),
            tag.clone(),
        );
        // C_2(a, a) = a² + a
        let expected = &(&a * &a) + &a;
        for method in [CkMethod::Egf, CkMethod::Partition] {
            assert_eq!(c_k(&[a.clone(), a.clone()], &tag, method), expected);
        }
        // C_3(2,2,2) = 2·3·4
        let two = QuadExact::from_int(2, tag.clone());
        for method in [CkMethod::Egf, CkMethod::Partition] {
            assert_eq!(
                c_k(&[two.clone(), two.clone(), two.clone()], &tag, method),
                QuadExact::from_int(24, tag.clone())
            );
        }
        for method in [CkMethod::Egf, CkMethod::Partition] {
            assert_eq!(c_k(&[], &tag, method), QuadExact::one(tag.clone()));
        }
    }

    #[test]
    fn c_k_uniform_slots_give_rising_factorial() {
        // C_k(a,…,a) = (−1)^k·(−a)_k = a(a+1)⋯(a+k−1)
        let tag = RingTag::imaginary(&int(7));
        let a = QuadExact::new(
            BigRational::new(int(2), int(3)),
            BigRational::new(int(1), int(2)),
            tag.clone(),
        );
        for k in 0..=6u64 {
            let slots = vec![a.clone(); k as usize];
            let direct = c_k(&slots, &tag, CkMethod::Egf);
            let negated = (-&a).falling_factorial(k);
            let expected = if k % 2 == 0 { negated } else { -&negated };
            assert_eq!(direct, expected, "k={k}");
        }
    }

    #[test]
    fn egf_and_partition_methods_agree_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc7c7);
        let tags = [RingTag::real(&int(9)), RingTag::imaginary(&int(7))];
        for tag in &tags {
            for _ in 0..40 {
                let k = rng.gen_range(0..=8usize);
                let t: Vec<QuadExact> = (0..k)
                    .map(|_| {
                        QuadExact::new(
                            BigRational::new(int(rng.gen_range(-9..=9)), int(rng.gen_range(1..=4))),
                            BigRational::new(int(rng.gen_range(-9..=9)), int(rng.gen_range(1..=4))),
                            tag.clone(),
                        )
                    })
                    .collect();
                assert_eq!(
                    c_k(&t, tag, CkMethod::Egf),
                    c_k(&t, tag, CkMethod::Partition),
                    "k={k}"
                );
            }
        }
    }

    #[test]
    fn a_kb_examples() {
        let f7 = field(7, 1);
        let tag = ring_tag(&f7);
        let u = QuadExact::new(BigRational::new(int(1), int(2)), BigRational::one(), tag.clone());
        let v = QuadExact::from_int(-3, tag.clone());
        let w = QuadExact::from_int(-6, tag.clone());

        // k = 1, χ(1) = 1 matches chi_b = +1 → the single slot is u
        let args = SieveArgs::new(u.clone(), v.clone(), w.clone(), 1).unwrap();
        assert_eq!(a_kb(1, &args, &f7), u);

        // k = 2, chi_b = −1: χ(1) = χ(2) = +1 in F_7, so both slots are v
        let args = SieveArgs::new(u.clone(), v.clone(), w.clone(), -1).unwrap();
        assert_eq!(a_kb(2, &args, &f7), &(&v * &v) + &v);
    }

    #[test]
    fn a_kb_closed_form_matches_generic_below_p() {
        // k < p with u = v: single closed-form term C(−u, k), i.e. (−1)^k(−u)_k
        let f11 = field(11, 1);
        let tag = ring_tag(&f11);
        let u = QuadExact::new(
            BigRational::new(int(2), int(5)),
            BigRational::new(int(-1), int(3)),
            tag.clone(),
        );
        let w = QuadExact::from_int(4, tag.clone());
        for k in 0..=6u64 {
            let closed = a_kb_closed(k, &u, &w, 11);
            let negated = (-&u).falling_factorial(k);
            let expected = if k % 2 == 0 { negated } else { -&negated };
            assert_eq!(closed, expected, "k={k}");
        }
    }

    #[test]
    fn a_kb_cross_asserts_when_u_equals_v() {
        // crossing a multiple of p exercises both closed-form terms
        let f3 = field(3, 1);
        let tag = ring_tag(&f3);
        let u = QuadExact::new(BigRational::one(), BigRational::one(), tag.clone());
        let w = QuadExact::from_rational(BigRational::new(int(-8), int(3)), tag.clone());
        for k in 0..=9u64 {
            let args = SieveArgs::new(u.clone(), u.clone(), w.clone(), 1).unwrap();
            let _ = a_kb(k, &args, &f3); // the internal assertion is the test
        }
    }

    #[test]
    fn sieve_args_reject_mixed_tags() {
        let real = QuadExact::from_int(1, RingTag::real(&int(5)));
        let imag = QuadExact::from_int(1, RingTag::imaginary(&int(5)));
        assert!(matches!(
            SieveArgs::new(real.clone(), imag, real.clone(), 1),
            Err(Error::TagMismatch)
        ));
    }

    #[test]
    fn diagonal_count_examples() {
        let f5 = field(5, 1);
        let one = f5.one();
        assert_eq!(diagonal_count(std::slice::from_ref(&one), &one, &f5).unwrap().value, int(2));
        assert_eq!(
            diagonal_count(std::slice::from_ref(&one), &f5.from_residue(2), &f5).unwrap().value,
            int(0)
        );
        let r = diagonal_count(&[one.clone(), one.clone()], &f5.zero(), &f5).unwrap();
        assert_eq!(r.value, int(8));
        assert_eq!(r.branch, "diagonal-zero-real");

        let f3 = field(3, 1);
        let r = diagonal_count(&[f3.one()], &f3.one(), &f3).unwrap();
        assert_eq!(r.value, int(2));
        assert_eq!(r.branch, "diagonal-nonzero-imaginary");

        assert!(matches!(
            diagonal_count(&[f5.zero()], &one, &f5),
            Err(Error::ZeroCoefficient)
        ));
    }

    #[test]
    fn diagonal_count_matches_oracle_on_small_patterns() {
        let budget = OracleBudget::default();
        for (p, s) in [(5, 1), (7, 1), (11, 1), (3, 2), (3, 3)] {
            let f = field(p, s);
            let nonresidue = f
                .elements()
                .unwrap()
                .into_iter()
                .find(|x| f.chi(x) == -1)
                .unwrap();
            let choices = [f.one(), nonresidue];
            for n in 1..=3usize {
                for mask in 0..(1u32 << n) {
                    let a: Vec<FieldElement> = (0..n)
                        .map(|i| choices[(mask >> i & 1) as usize].clone())
                        .collect();
                    let table = oracle_diagonal_table(&a, &f, &budget).unwrap();
                    for (idx, expected) in table.iter().enumerate() {
                        let b = f.element_at(idx);
                        let got = diagonal_count(&a, &b, &f).unwrap();
                        assert_eq!(
                            &got.value, expected,
                            "pattern {mask:b} length {n}, b={b} over F_{p}^{s} ({})",
                            got.branch
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn distinct_count_examples() {
        let f5 = field(5, 1);
        let r = distinct_count(2, &f5.zero(), &f5).unwrap();
        assert_eq!(r.value, int(8));
        assert_eq!(r.branch, "distinct-zero-real");
        assert_eq!(distinct_count(1, &f5.one(), &f5).unwrap().value, int(2));
        assert_eq!(distinct_count(0, &f5.zero(), &f5).unwrap().value, int(1));
        assert_eq!(distinct_count(0, &f5.one(), &f5).unwrap().value, int(0));
        assert!(matches!(
            distinct_count(5, &f5.zero(), &f5),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn distinct_count_matches_oracle() {
        let budget = OracleBudget::default();
        for (p, s) in [(5, 1), (7, 1), (11, 1), (3, 2), (3, 3)] {
            let f = field(p, s);
            for k in 0..=4u64 {
                let table = oracle_distinct_table(k, &f, &budget).unwrap();
                for (idx, expected) in table.iter().enumerate() {
                    let b = f.element_at(idx);
                    let got = distinct_count(k, &b, &f).unwrap();
                    assert_eq!(&got.value, expected, "k={k}, b={b} over F_{p}^{s}");
                }
            }
        }
    }

    #[test]
    fn subset_count_examples() {
        let f7 = field(7, 1);
        let r = subset_count(2, &f7.from_residue(3), &f7).unwrap();
        assert_eq!(r.value, int(1));
        assert_eq!(r.branch, "subset-nonzero-imaginary");
        assert_eq!(subset_count(3, &f7.zero(), &f7).unwrap().value, int(1));
        let f5 = field(5, 1);
        assert_eq!(subset_count(2, &f5.zero(), &f5).unwrap().value, int(1));
        assert_eq!(subset_count(0, &f5.zero(), &f5).unwrap().value, int(1));
        assert_eq!(subset_count(0, &f5.one(), &f5).unwrap().value, int(0));
        assert!(matches!(subset_count(3, &f5.zero(), &f5), Err(Error::KOutOfRange { .. })));
    }

    #[test]
    fn subset_count_matches_oracle() {
        let budget = OracleBudget::default();
        for (p, s) in [(5, 1), (7, 1), (11, 1), (13, 1), (3, 2), (3, 3)] {
            let f = field(p, s);
            let h_size = f.half_group_order().to_u64().unwrap();
            for k in 0..=4u64.min(h_size) {
                let table = oracle_subset_table(k, &f, &budget).unwrap();
                for (idx, expected) in table.iter().enumerate() {
                    let b = f.element_at(idx);
                    let got = subset_count(k, &b, &f).unwrap();
                    assert_eq!(
                        &got.value, expected,
                        "k={k}, b={b} over F_{p}^{s} ({})",
                        got.branch
                    );
                }
            }
        }
    }

    #[test]
    fn even_s_examples() {
        let f9 = field(3, 2);
        for x in f9.elements().unwrap() {
            if x.is_zero() {
                continue;
            }
            let expected = if f9.chi(&x) == 1 { 1 } else { 0 };
            let r = subset_count_even_s(1, &x, &f9).unwrap();
            assert_eq!(r.value, int(expected), "k=1, b={x}");
            assert_eq!(r.branch, "subset-nonzero-even-s");
        }
        let f7 = field(7, 1);
        assert!(matches!(
            subset_count_even_s(1, &f7.one(), &f7),
            Err(Error::OddExtensionDegree)
        ));
    }

    #[test]
    fn even_s_fast_path_equals_general_formula() {
        for (p, s) in [(3, 2), (5, 2)] {
            let f = field(p, s);
            for k in 0..=4u64 {
                for b in f.elements().unwrap() {
                    let fast = subset_count_even_s(k, &b, &f).unwrap();
                    let general = subset_count_via_sieve(k, &b, &f).unwrap();
                    assert_eq!(fast.value, general.value, "k={k}, b={b} over F_{p}^{s}");
                }
            }
        }
    }

    #[test]
    fn subset_mass_identity_closed_form_only() {
        // Σ_b N_H(k, b) = C((q−1)/2, k): every k-subset has exactly one sum
        for (p, s) in [(13, 1), (3, 3)] {
            let f = field(p, s);
            for k in 0..=5u64 {
                let total: BigInt = f
                    .elements()
                    .unwrap()
                    .iter()
                    .map(|b| subset_count(k, b, &f).unwrap().value)
                    .sum();
                let expected = binomial(&BigInt::from(f.half_group_order()), k);
                assert_eq!(total, expected, "k={k} over F_{p}^{s}");
            }
        }
    }

    #[test]
    fn subset_complement_symmetry() {
        // the residues sum to 0 for q > 3, so removing a subset from H
        // negates its sum
        for (p, s) in [(7, 1), (11, 1), (3, 2)] {
            let f = field(p, s);
            let h_size = f.half_group_order().to_u64().unwrap();
            for k in 0..=h_size {
                for b in f.elements().unwrap() {
                    let lhs = subset_count(k, &b, &f).unwrap().value;
                    let rhs = subset_count(h_size - k, &f.neg(&b), &f).unwrap().value;
                    assert_eq!(lhs, rhs, "k={k}, b={b} over F_{p}^{s}");
                }
            }
        }
    }
}
