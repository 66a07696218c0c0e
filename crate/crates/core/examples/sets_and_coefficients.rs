//! Exact interval-set algebra and the Fourier coefficients of indicators.
//!
//!     cargo run --example sets_and_coefficients

use translates::set::{rational, rational_to_f64, CantorSpec, IntervalSet};
use translates::CoefficientWindow;

fn main() {
    // Set literals round-trip; everything below is exact rational arithmetic.
    let a: IntervalSet = "1/8..1/4, 1/2..3/4".parse().unwrap();
    println!("A          = {a}");
    println!("|A|        = {}", a.measure());
    println!("A^c        = {}", a.complement());
    println!("|A^c|      = {}", a.complement().measure());

    let spec = CantorSpec::uniform(4, rational(1, 4)).unwrap();
    let cantor = IntervalSet::fat_cantor(&spec).unwrap();
    println!("\nfat Cantor set, depth 4, removing 1/4 per stage:");
    println!("  intervals = {}", cantor.intervals().len());
    println!("  measure   = {} (closed form {})", cantor.measure(), spec.residual_measure());

    // Indicator coefficients and the Parseval climb toward the measure.
    let w = CoefficientWindow::indicator(&cantor, 4096);
    println!("\nf = chi_A coefficients:");
    for k in [0i64, 1, 2, 5] {
        println!("  f^({k:>2}) = {:+.6}", w.coeff(k));
    }
    let mut energy = w.coeff(0).norm_sqr();
    for k in 1..=4096i64 {
        energy += w.coeff(k).norm_sqr() + w.coeff(-k).norm_sqr();
    }
    println!(
        "  sum |f^(k)|^2, |k| <= 4096 : {energy:.6} -> |A| = {:.6}",
        rational_to_f64(&cantor.measure())
    );
}
