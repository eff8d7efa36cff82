//! Gauss sums and Jacobi-type sums: the bridge between character theory and
//! the counting formulas.
//!
//! The number of solutions of a quadratic equation over F_q unwinds into
//! sums of quadratic-character values. This example evaluates the closed
//! forms and confirms them against direct summation over the field.
//!
//! Run with: cargo run --example character_sums

use qrsum::charsums::{
    closed_mixed, elementary_symmetric_char_sum, gauss_closed, gauss_direct, jacobi_direct,
    numeric_value, CharSlot, JacobiVariant, SymMethod,
};
use qrsum::FieldSpec;

fn main() {
    // the quadratic Gauss sum G = Σ_x χ(x)·ζ^Tr(x) collapses to ±√q or ±i√q
    println!("quadratic Gauss sums:");
    for (p, s) in [(5, 1), (7, 1), (3, 2), (3, 3), (7, 2)] {
        let f = FieldSpec::new(p, s, None).unwrap();
        let (closed, case) = gauss_closed(&f);
        let direct = gauss_direct(&f.one(), &f).unwrap();
        let numeric = numeric_value(&closed);
        println!(
            "  F_{:<3} {} case: G = {:<18} numeric {:>7.3}{:+.3}i   direct {:>7.3}{:+.3}i",
            f.q(),
            case,
            closed.to_string(),
            numeric.re,
            numeric.im,
            direct.re,
            direct.im,
        );
    }

    // Jacobi-type sums over pairs (χ^{e} slots, target 1 or 0, coordinates
    // unrestricted or all nonzero) — closed forms are plain integers
    println!("\nJacobi-type sums over F_11 with e quadratic slots:");
    let f = FieldSpec::new(11, 1, None).unwrap();
    println!("  {:>3} {:>8} {:>8} {:>8} {:>8}", "e", "J", "J*", "J0", "J0*");
    for e in 1..=4usize {
        let slots = vec![CharSlot::Quadratic; e];
        let row: Vec<String> = [JacobiVariant::J, JacobiVariant::JStar, JacobiVariant::J0, JacobiVariant::J0Star]
            .into_iter()
            .map(|v| {
                let closed = closed_mixed(&slots, v, &f);
                let direct = jacobi_direct(&slots, v, &f).unwrap();
                assert_eq!(closed, direct, "closed and direct evaluation must agree");
                closed.to_string()
            })
            .collect();
        println!("  {:>3} {:>8} {:>8} {:>8} {:>8}", e, row[0], row[1], row[2], row[3]);
    }

    // mixed slots work too: here Σ over x+y+z = 1 of χ(y)·χ(z), x free
    let mixed = [CharSlot::Trivial, CharSlot::Quadratic, CharSlot::Quadratic];
    let closed = closed_mixed(&mixed, JacobiVariant::J, &f);
    let direct = jacobi_direct(&mixed, JacobiVariant::J, &f).unwrap();
    println!("\nmixed slots (1, χ, χ), target 1: closed = {closed}, direct = {direct}");

    // character sums of elementary symmetric polynomials: Σ χ(e_k-terms)
    // over k-subsets of fixed elements — two independent evaluations
    let f7 = FieldSpec::new(7, 1, None).unwrap();
    let points: Vec<_> = [1, 2, 3, 4, 5].iter().map(|&r| f7.from_residue(r)).collect();
    println!("\nelementary symmetric character sums over {{1,…,5}} ⊂ F_7:");
    for e in 1..=3u64 {
        let direct = elementary_symmetric_char_sum(&points, e, &f7, SymMethod::Direct).unwrap();
        let binom = elementary_symmetric_char_sum(&points, e, &f7, SymMethod::Binomial).unwrap();
        assert_eq!(direct, binom);
        println!("  e = {e}: {direct}");
    }
}
