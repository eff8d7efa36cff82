//! Arithmetic in F_{p^s} for odd p: field construction, trace, quadratic
//! character, and deterministic element enumeration.
//!
//! Elements are coefficient vectors over F_p (constant term first) reduced
//! modulo a monic irreducible polynomial of degree s. All operations are pure
//! and the types are immutable, so values can be shared freely across threads.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::collections::BTreeSet;
use std::fmt;

/// Default bound on q for element enumeration.
pub const ENUMERATION_CAP: u64 = 1_000_000;

/// Description of F_{p^s}: characteristic, degree, and the reduction modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    s: usize,
    q: BigUint,
    /// Monic modulus polynomial, ascending degree, length s + 1.
    /// Unused for s = 1 (stored as t for uniformity).
    modulus: Vec<u64>,
}

/// An element of F_{p^s} as its canonical coefficient vector, constant term
/// first. Equality, ordering and hashing are all on the vector, so the
/// derived `Ord` is the deterministic element order used everywhere.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

// ---- dense polynomial helpers over F_p (ascending degree, not trimmed) ----

fn poly_degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

/// Remainder of a by monic-after-normalization divisor b.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = poly_degree(b).expect("divisor is nonzero");
    let lead_inv = inv_mod(b[db], p);
    let mut r = a.to_vec();
    while let Some(dr) = poly_degree(&r) {
        if dr < db {
            break;
        }
        let factor = mul_mod(r[dr], lead_inv, p);
        for (j, &bj) in b.iter().enumerate().take(db + 1) {
            let sub = mul_mod(factor, bj, p);
            let idx = dr - db + j;
            r[idx] = (r[idx] + p - sub) % p;
        }
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on i128
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    assert_eq!(r, 1, "inverse of non-unit mod p");
    t.rem_euclid(p as i128) as u64
}

/// Trial division by every monic polynomial of degree up to deg/2.
fn poly_is_irreducible(m: &[u64], p: u64) -> bool {
    let deg = poly_degree(m).unwrap_or(0);
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // all monic divisor candidates of degree d
        let count = (p as u128).pow(d as u32);
        let mut idx = 0u128;
        while idx < count {
            let mut g = vec![0u64; d + 1];
            let mut rest = idx;
            for coeff in g.iter_mut().take(d) {
                *coeff = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            g[d] = 1;
            let r = poly_rem(m, &g, p);
            if poly_degree(&r).is_none() {
                return false;
            }
            idx += 1;
        }
    }
    true
}

/// Lexicographically smallest (constant term first) monic irreducible of
/// degree s over F_p.
fn find_modulus(p: u64, s: usize) -> Vec<u64> {
    let total = (p as u128).checked_pow(s as u32).expect("modulus search space overflow");
    let mut idx = 0u128;
    while idx < total {
        // idx encodes (c_0, ..., c_{s-1}) with c_0 most significant, so
        // scanning idx upward is exactly lexicographic order on the sequence.
        let mut m = vec![0u64; s + 1];
        let mut rest = idx;
        for j in (0..s).rev() {
            m[j] = (rest % p as u128) as u64;
            rest /= p as u128;
        }
        m[s] = 1;
        if poly_is_irreducible(&m, p) {
            return m;
        }
        idx += 1;
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

impl FieldSpec {
    /// Build F_{p^s}. With no modulus and s > 1, selects the lexicographically
    /// smallest monic irreducible polynomial of degree s, so construction is
    /// deterministic and reproducible.
    pub fn new(p: u64, s: usize, modulus: Option<Vec<u64>>) -> Result<FieldSpec> {
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::InvalidFieldSpec("extension degree must be >= 1".into()));
        }
        let q = BigUint::from(p).pow(s as u32);
        let modulus = match modulus {
            Some(raw) => {
                if raw.len() != s + 1 {
                    return Err(Error::InvalidFieldSpec(format!(
                        "modulus must have {} coefficients for degree {}",
                        s + 1,
                        s
                    )));
                }
                let m: Vec<u64> = raw.iter().map(|&c| c % p).collect();
                if m[s] != 1 {
                    return Err(Error::InvalidFieldSpec("modulus must be monic".into()));
                }
                if s > 1 && !poly_is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus(m));
                }
                m
            }
            None => {
                if s == 1 {
                    vec![0, 1]
                } else {
                    find_modulus(p, s)
                }
            }
        };
        Ok(FieldSpec { p, s, q, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }

    pub fn q_int(&self) -> BigInt {
        BigInt::from(self.q.clone())
    }

    /// (q - 1) / 2, the size of the residue subgroup H.
    pub fn half_group_order(&self) -> BigUint {
        (&self.q - 1u32) / 2u32
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn check(&self, x: &FieldElement) {
        debug_assert_eq!(x.coeffs.len(), self.s, "element shape mismatch");
        debug_assert!(x.coeffs.iter().all(|&c| c < self.p));
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.s] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_residue(1)
    }

    /// Element with the given constant term (reduced mod p) and zero higher
    /// coefficients.
    pub fn from_residue(&self, r: u64) -> FieldElement {
        let mut coeffs = vec![0; self.s];
        coeffs[0] = r % self.p;
        FieldElement { coeffs }
    }

    /// Canonical image of an integer under Z -> F_p ⊂ F_q.
    pub fn embed_int(&self, n: i64) -> FieldElement {
        self.from_residue(n.rem_euclid(self.p as i64) as u64)
    }

    pub fn embed_bigint(&self, n: &BigInt) -> FieldElement {
        let r = n.mod_floor(&BigInt::from(self.p));
        self.from_residue(r.to_u64().expect("residue fits u64"))
    }

    /// Element from explicit coefficients (length s), reduced mod p.
    pub fn element(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() != self.s {
            return Err(Error::ParseElement(format!(
                "expected {} coefficients, got {}",
                self.s,
                coeffs.len()
            )));
        }
        Ok(FieldElement {
            coeffs: coeffs.iter().map(|&c| c.rem_euclid(self.p as i64) as u64).collect(),
        })
    }

    /// Parse the element text form: a plain integer (any s, embedded via the
    /// prime subfield) or s comma-separated coefficients, constant term first.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let text = text.trim();
        if text.contains(',') {
            let parts: std::result::Result<Vec<i64>, _> =
                text.split(',').map(|t| t.trim().parse::<i64>()).collect();
            match parts {
                Ok(cs) => self.element(&cs),
                Err(e) => Err(Error::ParseElement(format!("{text:?}: {e}"))),
            }
        } else {
            match text.parse::<BigInt>() {
                Ok(n) => Ok(self.embed_bigint(&n)),
                Err(e) => Err(Error::ParseElement(format!("{text:?}: {e}"))),
            }
        }
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.check(x);
        self.check(y);
        FieldElement {
            coeffs: x
                .coeffs
                .iter()
                .zip(&y.coeffs)
                .map(|(&a, &b)| (a + b) % self.p)
                .collect(),
        }
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        self.check(x);
        FieldElement { coeffs: x.coeffs.iter().map(|&a| (self.p - a) % self.p).collect() }
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.check(x);
        self.check(y);
        let s = self.s;
        if s == 1 {
            return FieldElement { coeffs: vec![mul_mod(x.coeffs[0], y.coeffs[0], self.p)] };
        }
        let mut prod = vec![0u64; 2 * s - 1];
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        // fold degrees >= s back down using t^s = -(m_0 + ... + m_{s-1} t^{s-1})
        for deg in (s..2 * s - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for j in 0..s {
                let sub = mul_mod(c, self.modulus[j], self.p);
                prod[deg - s + j] = (prod[deg - s + j] + self.p - sub) % self.p;
            }
        }
        prod.truncate(s);
        FieldElement { coeffs: prod }
    }

    /// x^e with the 0^0 = 1 convention.
    pub fn pow(&self, x: &FieldElement, e: u64) -> FieldElement {
        let mut result = self.one();
        let mut base = x.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    pub fn pow_big(&self, x: &FieldElement, e: &BigUint) -> FieldElement {
        let mut result = self.one();
        let mut base = x.clone();
        for i in 0..e.bits() {
            if e.bit(i) {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
        }
        result
    }

    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow_big(x, &(&self.q - 2u32)))
    }

    /// Trace down to F_p: sum of the Frobenius orbit, returned as a residue.
    pub fn trace(&self, x: &FieldElement) -> u64 {
        self.check(x);
        let mut acc = x.clone();
        let mut frob = x.clone();
        for _ in 1..self.s {
            frob = self.pow(&frob, self.p);
            acc = self.add(&acc, &frob);
        }
        debug_assert!(acc.coeffs[1..].iter().all(|&c| c == 0), "trace lies in F_p");
        acc.coeffs[0]
    }

    /// The quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
    pub fn chi(&self, x: &FieldElement) -> i8 {
        if x.is_zero() {
            return 0;
        }
        let e = (&self.q - 1u32) / 2u32;
        let v = self.pow_big(x, &e);
        if v == self.one() {
            1
        } else {
            debug_assert_eq!(v, self.neg(&self.one()), "x^((q-1)/2) is ±1 for x != 0");
            -1
        }
    }

    /// Rank of an element in the deterministic enumeration order.
    pub fn element_index(&self, x: &FieldElement) -> usize {
        self.check(x);
        x.coeffs.iter().fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }

    /// Inverse of [`element_index`](Self::element_index).
    pub fn element_at(&self, index: usize) -> FieldElement {
        let p = self.p as usize;
        let mut coeffs = vec![0u64; self.s];
        let mut rest = index;
        for j in (0..self.s).rev() {
            coeffs[j] = (rest % p) as u64;
            rest /= p;
        }
        debug_assert_eq!(rest, 0, "index < q");
        FieldElement { coeffs }
    }

    /// All q elements in lexicographic coefficient order (so the zero element
    /// comes first). Refuses above the cap.
    pub fn elements_capped(&self, cap: u64) -> Result<Vec<FieldElement>> {
        if self.q > BigUint::from(cap) {
            return Err(Error::CapExceeded { needed: self.q.clone(), cap });
        }
        let q = self.q.to_usize().expect("q fits usize under cap");
        Ok((0..q).map(|i| self.element_at(i)).collect())
    }

    pub fn elements(&self) -> Result<Vec<FieldElement>> {
        self.elements_capped(ENUMERATION_CAP)
    }

    /// The residue subgroup H = { x^2 : x in F_q* }, sorted in element order.
    pub fn quadratic_residues_capped(&self, cap: u64) -> Result<Vec<FieldElement>> {
        let mut squares = BTreeSet::new();
        for x in self.elements_capped(cap)? {
            if !x.is_zero() {
                squares.insert(self.mul(&x, &x));
            }
        }
        Ok(squares.into_iter().collect())
    }

    pub fn quadratic_residues(&self) -> Result<Vec<FieldElement>> {
        self.quadratic_residues_capped(ENUMERATION_CAP)
    }
}
