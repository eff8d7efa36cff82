//! A tour of finite-field construction and the quadratic character.
//!
//! Builds F_27 = F_3[t]/(m), walks through arithmetic, the trace map, and
//! the quadratic character, then lists the residue set H whose subset sums
//! the rest of the crate counts.
//!
//! Run with: cargo run --example field_tour

use qrsum::FieldSpec;

fn main() {
    // the modulus is found automatically: the lexicographically smallest
    // monic irreducible cubic over F_3
    let f = FieldSpec::new(3, 3, None).expect("3 is an odd prime");
    println!("built F_{} = F_3[t]/(m) with m coefficients {:?}", f.q(), f.modulus());

    // elements are coefficient vectors c_0 + c_1·t + c_2·t², printed "c0,c1,c2"
    let x = f.element(&[1, 2, 0]).unwrap();
    let y = f.element(&[0, 0, 1]).unwrap();
    println!("\nx = {x},  y = {y}");
    println!("x + y = {}", f.add(&x, &y));
    println!("x · y = {}", f.mul(&x, &y));
    println!("x⁻¹   = {}  (check: x·x⁻¹ = {})", f.inv(&x).unwrap(), {
        let inv = f.inv(&x).unwrap();
        f.mul(&x, &inv)
    });
    println!("x^26  = {}  (the group order, so this must be 1)", f.pow(&x, 26));

    // the trace maps into the prime field and is F_3-linear
    println!("\ntrace(x) = {}", f.trace(&x));
    println!("trace(y) = {}", f.trace(&y));

    // χ(x) = x^((q−1)/2) evaluated to {0, ±1}: the quadratic character
    println!("\nquadratic character on a few elements:");
    for coeffs in [[0, 0, 0], [1, 0, 0], [2, 0, 0], [0, 1, 0], [1, 2, 0]] {
        let e = f.element(&coeffs).unwrap();
        println!("  χ({e}) = {:+}", f.chi(&e));
    }

    // H = the nonzero squares; exactly (q−1)/2 of them
    let residues = f.quadratic_residues().unwrap();
    println!("\nH = squares of F_{}*, |H| = {} = (q−1)/2:", f.q(), residues.len());
    for r in residues.iter().take(6) {
        println!("  {r}");
    }
    println!("  … ({} more)", residues.len() - 6);

    // χ is multiplicative and balanced on the nonzero elements
    let mut plus = 0;
    let mut minus = 0;
    for e in f.elements().unwrap() {
        match f.chi(&e) {
            1 => plus += 1,
            -1 => minus += 1,
            _ => {}
        }
    }
    println!("\nχ takes value +1 on {plus} elements and −1 on {minus} — perfectly balanced");
}
