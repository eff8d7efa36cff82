//! Counting solutions of diagonal quadratic equations
//! a_1·x_1² + … + a_n·x_n² = b with every coordinate nonzero.
//!
//! The closed formula only depends on n, on χ(b), and on how many
//! coefficients share the character of b — this example makes that collapse
//! visible, then cross-checks a batch of counts against brute force.
//!
//! Run with: cargo run --example diagonal_equations

use qrsum::counting::diagonal_count;
use qrsum::oracle::{oracle_diagonal_table, OracleBudget};
use qrsum::FieldSpec;

fn main() {
    let f = FieldSpec::new(13, 1, None).unwrap();

    // x² + y² = b over F_13, for every b
    let coeffs = vec![f.one(), f.one()];
    println!("solutions of x² + y² = b over F_13 (x, y ≠ 0):");
    println!("  {:>2}  {:>5}  branch", "b", "count");
    for b in f.elements().unwrap() {
        let r = diagonal_count(&coeffs, &b, &f).unwrap();
        println!("  {:>2}  {:>5}  {}", b.to_string(), r.value, r.branch);
    }

    // the count is blind to everything about the coefficients except how
    // many of them match χ(b): rescaling by squares changes nothing
    let b = f.from_residue(3);
    let scaled = vec![f.from_residue(4), f.from_residue(9)]; // both squares, like 1
    let original = diagonal_count(&coeffs, &b, &f).unwrap().value;
    let rescaled = diagonal_count(&scaled, &b, &f).unwrap().value;
    println!("\ncoefficients [1, 1] vs [4, 9] at b = 3: {original} vs {rescaled} (equal — only characters matter)");

    // flipping one coefficient to a non-residue lands in a different branch
    let mixed = vec![f.one(), f.from_residue(2)]; // χ(2) = −1 in F_13
    let flipped = diagonal_count(&mixed, &b, &f).unwrap();
    println!("coefficients [1, 2] at b = 3: {} ({})", flipped.value, flipped.branch);

    // cross-check every length-3 pattern against exhaustive enumeration
    let budget = OracleBudget::default();
    let reps = [f.one(), f.from_residue(2)];
    let mut verified = 0;
    for mask in 0u32..8 {
        let pattern: Vec<_> = (0..3).map(|i| reps[(mask >> i & 1) as usize].clone()).collect();
        let table = oracle_diagonal_table(&pattern, &f, &budget).unwrap();
        for (idx, b) in f.elements().unwrap().iter().enumerate() {
            assert_eq!(diagonal_count(&pattern, b, &f).unwrap().value, table[idx]);
            verified += 1;
        }
    }
    println!("\ncross-checked {verified} three-coordinate counts against enumeration — all match");

    // an extension field with an "imaginary" Gauss sum (ω = i√q) for flavor
    let f27 = FieldSpec::new(3, 3, None).unwrap();
    let b27 = f27.element(&[1, 1, 0]).unwrap();
    let r = diagonal_count(&[f27.one(), f27.one()], &b27, &f27).unwrap();
    println!("\nx² + y² = {b27} over F_27: {} ({})", r.value, r.branch);
}
