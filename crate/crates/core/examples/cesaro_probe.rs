//! Cesàro averages against a sampled periodization function.  If the
//! averaged norms of a nonzero sequence tend to zero, p must vanish on a
//! set of positive measure; averaging also never beats the best partial
//! sum (Fejér contraction).
//!
//!     cargo run --example cesaro_probe

use translates::independence::{cesaro_independence_probe, combination_norm};
use translates::periodization::{periodization_grid, spectrum_from_set};
use translates::{CoefficientWindow, IntervalSet};

fn main() {
    let ac: IntervalSet = "0..1/2".parse().unwrap();
    let psi = spectrum_from_set(&ac).unwrap();
    let grid = periodization_grid(&psi, 2048, 1e-9).unwrap();
    let f = CoefficientWindow::indicator(&"5/8..7/8".parse().unwrap(), 128);
    let c = f.reversed();

    let schedule: Vec<usize> = (0..=7).map(|e| 1usize << e).collect();
    let probe = cesaro_independence_probe(&c, &grid, &schedule).unwrap();

    println!("p = chi_[0,1/2), c_k = f^(-k) for f = chi_[5/8,7/8]\n");
    println!("{:>5}  {:>16}  {:>16}", "n", "Cesàro norm", "max partial norm");
    for (i, &n) in schedule.iter().enumerate() {
        let max_partial = (0..n)
            .map(|h| combination_norm(&c, h.min(c.half_width()), &grid).unwrap().value)
            .fold(f64::NEG_INFINITY, f64::max);
        println!("{n:>5}  {:>16.10}  {:>16.10}", probe[i], max_partial);
    }
    println!("\nboth columns decay (this sequence is a dependence witness), and the");
    println!("Cesàro column never exceeds the partial-sum column.");
}
