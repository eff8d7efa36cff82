//! The headline quantity: how many k-element subsets of the quadratic
//! residues of F_q sum to a target b — computed by closed formula, never by
//! enumeration.
//!
//! Run with: cargo run --example subset_sums

use num_bigint::BigInt;
use qrsum::counting::{binomial, subset_count};
use qrsum::FieldSpec;

fn main() {
    // H ⊂ F_13* is {1, 3, 4, 9, 10, 12}; count 3-element subsets per target
    let f = FieldSpec::new(13, 1, None).unwrap();
    let residues = f.quadratic_residues().unwrap();
    let shown: Vec<String> = residues.iter().map(|r| r.to_string()).collect();
    println!("H = {{{}}} ⊂ F_13", shown.join(", "));

    println!("\n3-element subsets of H summing to b:");
    println!("  {:>2}  {:>5}", "b", "count");
    let mut total = BigInt::from(0);
    for b in f.elements().unwrap() {
        let r = subset_count(3, &b, &f).unwrap();
        total += &r.value;
        println!("  {:>2}  {:>5}", b.to_string(), r.value);
    }
    println!("  Σ = {total} = C(6, 3) — every subset has exactly one sum");

    // complement symmetry: H sums to 0 for q > 3, so dropping a k-subset
    // from H is the same as picking its complement with negated target
    let b = f.from_residue(5);
    let k_side = subset_count(2, &b, &f).unwrap().value;
    let complement = subset_count(4, &f.neg(&b), &f).unwrap().value;
    println!("\ncomplement symmetry: N(2, 5) = {k_side}, N(4, −5) = {complement}");

    // the formulas never enumerate subsets, so large fields are instant
    let big = FieldSpec::new(10103, 1, None).unwrap();
    let r = subset_count(12, &big.from_residue(77), &big).unwrap();
    println!(
        "\n12-element subsets of the {} residues of F_10103 summing to 77:\n  {}",
        big.half_group_order(),
        r.value
    );
    let space = binomial(&BigInt::from(big.half_group_order()), 12);
    println!("  (out of C(5051, 12) = {space} subsets — far beyond enumeration)");

    // extension fields work the same; even-degree ones take a faster
    // all-rational path because √q is an integer there
    let f49 = FieldSpec::new(7, 2, None).unwrap();
    let b49 = f49.element(&[3, 1]).unwrap();
    let r = subset_count(5, &b49, &f49).unwrap();
    println!("\n5-element subsets of H ⊂ F_49 summing to {b49}: {} ({})", r.value, r.branch);
}
