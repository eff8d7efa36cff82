//! Brute-force ground truth for every count the closed formulas produce.
//!
//! Everything here is plain nested enumeration — no meet-in-the-middle, no
//! algebraic shortcuts — so a disagreement with the closed forms always
//! indicts the formula side. Enumeration state is bounded by an explicit
//! budget and refusal is an error, never a silent truncation.
//!
//! Each function has a `*_table` sibling that fills the counts for every
//! target b in a single enumeration pass (indexed by the deterministic
//! element order); the per-b functions answer one query at the same cost, so
//! sweeps over all b should prefer the table forms.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

/// Cap on enumerated states (tuples or subsets) per oracle call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_states: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_states: OracleBudget::DEFAULT_MAX_STATES }
    }
}

impl OracleBudget {
    pub const DEFAULT_MAX_STATES: u64 = 10_000_000;

    pub fn new(max_states: u64) -> OracleBudget {
        OracleBudget { max_states }
    }

    fn admit(&self, needed: BigUint) -> Result<()> {
        if needed > BigUint::from(self.max_states) {
            Err(Error::BudgetExceeded { needed, budget: self.max_states })
        } else {
            Ok(())
        }
    }
}

/// Dense index-arithmetic view of a small field: addition as a q×q lookup
/// table over element ranks. Memory is q² entries, which the budget keeps
/// desk-scale (enumerations of n ≥ 2 coordinates already cost q² states).
struct IndexField {
    q: usize,
    add: Vec<u32>,
}

impl IndexField {
    fn build(f: &FieldSpec) -> Result<IndexField> {
        let q = f
            .q()
            .to_usize()
            .ok_or_else(|| Error::CapExceeded { needed: f.q().clone(), cap: u32::MAX as u64 })?;
        let elems = f.elements_capped(u32::MAX as u64)?;
        let mut add = vec![0u32; q * q];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                add[i * q + j] = f.element_index(&f.add(x, y)) as u32;
            }
        }
        Ok(IndexField { q, add })
    }

    #[inline]
    fn add(&self, i: usize, j: usize) -> usize {
        self.add[i * self.q + j] as usize
    }
}

fn falling(q_minus_1: u64, k: u64) -> BigUint {
    let mut result = BigUint::one();
    for j in 0..k {
        if j >= q_minus_1 {
            return BigUint::ZERO;
        }
        result *= BigUint::from(q_minus_1 - j);
    }
    result
}

fn choose(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let mut result = BigUint::one();
    for j in 0..k {
        result = result * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    result
}

fn counts_to_bigint(counts: Vec<u64>) -> Vec<BigInt> {
    counts.into_iter().map(BigInt::from).collect()
}

/// All q counts of Σ a_i·x_i² = b over nonzero coordinates, one enumeration
/// pass, indexed by the element rank of b.
pub fn oracle_diagonal_table(
    a: &[FieldElement],
    f: &FieldSpec,
    budget: &OracleBudget,
) -> Result<Vec<BigInt>> {
    let n = a.len();
    assert!(n >= 1, "at least one coefficient");
    if a.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroCoefficient);
    }
    let q_minus_1 = f.q() - 1u32;
    budget.admit(q_minus_1.pow(n as u32))?;
    let ix = IndexField::build(f)?;
    let elems = f.elements_capped(u32::MAX as u64)?;

    // contribution ranks per slot: a_i·x² for every nonzero x (with
    // multiplicity — ordered tuples are what is being counted)
    let contrib: Vec<Vec<u32>> = a
        .iter()
        .map(|ai| {
            elems
                .iter()
                .skip(1) // rank 0 is the zero element
                .map(|x| f.element_index(&f.mul(ai, &f.mul(x, x))) as u32)
                .collect()
        })
        .collect();

    let mut counts = vec![0u64; ix.q];
    fn walk(ix: &IndexField, contrib: &[Vec<u32>], depth: usize, sum: usize, counts: &mut [u64]) {
        if depth == contrib.len() {
            counts[sum] += 1;
            return;
        }
        for &c in &contrib[depth] {
            walk(ix, contrib, depth + 1, ix.add(sum, c as usize), counts);
        }
    }
    walk(&ix, &contrib, 0, 0, &mut counts);
    Ok(counts_to_bigint(counts))
}

/// Count of (x_1,…,x_n) ∈ (F_q*)^n with Σ a_i·x_i² = b, by exhaustion.
pub fn oracle_diagonal(
    a: &[FieldElement],
    b: &FieldElement,
    f: &FieldSpec,
    budget: &OracleBudget,
) -> Result<BigInt> {
    let table = oracle_diagonal_table(a, f, budget)?;
    Ok(table[f.element_index(b)].clone())
}

/// All q counts of injective tuples in (F_q*)^k with Σ x_i² = b, one pass.
pub fn oracle_distinct_table(k: u64, f: &FieldSpec, budget: &OracleBudget) -> Result<Vec<BigInt>> {
    let q_minus_1 = (f.q() - 1u32).to_u64().unwrap_or(u64::MAX);
    budget.admit(falling(q_minus_1, k))?;
    let ix = IndexField::build(f)?;
    let elems = f.elements_capped(u32::MAX as u64)?;
    let squares: Vec<u32> =
        elems.iter().map(|x| f.element_index(&f.mul(x, x)) as u32).collect();

    let mut counts = vec![0u64; ix.q];
    let mut used = vec![false; ix.q];
    #[allow(clippy::too_many_arguments)]
    fn walk(
        ix: &IndexField,
        squares: &[u32],
        remaining: u64,
        sum: usize,
        used: &mut [bool],
        counts: &mut [u64],
    ) {
        if remaining == 0 {
            counts[sum] += 1;
            return;
        }
        for x in 1..ix.q {
            if used[x] {
                continue;
            }
            used[x] = true;
            walk(ix, squares, remaining - 1, ix.add(sum, squares[x] as usize), used, counts);
            used[x] = false;
        }
    }
    walk(&ix, &squares, k, 0, &mut used, &mut counts);
    Ok(counts_to_bigint(counts))
}

/// Count of injective tuples in (F_q*)^k with pairwise-distinct coordinates
/// and Σ x_i² = b.
pub fn oracle_distinct_tuples(
    k: u64,
    b: &FieldElement,
    f: &FieldSpec,
    budget: &OracleBudget,
) -> Result<BigInt> {
    let table = oracle_distinct_table(k, f, budget)?;
    Ok(table[f.element_index(b)].clone())
}

/// All q counts of k-element subsets of H = {x² : x ∈ F_q*} summing to b,
/// one pass over the C((q−1)/2, k) combinations in lexicographic H order.
pub fn oracle_subset_table(k: u64, f: &FieldSpec, budget: &OracleBudget) -> Result<Vec<BigInt>> {
    let h_size = ((f.q() - 1u32) / 2u32).to_u64().unwrap_or(u64::MAX);
    budget.admit(choose(h_size, k))?;
    let ix = IndexField::build(f)?;
    let residues = f.quadratic_residues_capped(u32::MAX as u64)?;
    let h_ranks: Vec<u32> = residues.iter().map(|x| f.element_index(x) as u32).collect();

    let mut counts = vec![0u64; ix.q];
    fn walk(
        ix: &IndexField,
        h: &[u32],
        start: usize,
        remaining: u64,
        sum: usize,
        counts: &mut [u64],
    ) {
        if remaining == 0 {
            counts[sum] += 1;
            return;
        }
        // leave room for the remaining-1 later picks
        let last = h.len() - remaining as usize;
        for i in start..=last {
            walk(ix, h, i + 1, remaining - 1, ix.add(sum, h[i] as usize), counts);
        }
    }
    if k <= h_ranks.len() as u64 {
        walk(&ix, &h_ranks, 0, k, 0, &mut counts);
    }
    Ok(counts_to_bigint(counts))
}

/// Number of k-element subsets S ⊆ H with Σ_{a∈S} a = b, by exhaustion.
pub fn oracle_subset_sum(
    k: u64,
    b: &FieldElement,
    f: &FieldSpec,
    budget: &OracleBudget,
) -> Result<BigInt> {
    let table = oracle_subset_table(k, f, budget)?;
    Ok(table[f.element_index(b)].clone())
}
