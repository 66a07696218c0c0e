//! Periodization of the Haar scaling spectrum with a certified tail:
//! orthonormal integer translates force p identically 1, and the computed
//! bracket [value, value + tail] must contain it.
//!
//!     cargo run --example periodize_haar

use translates::periodization::{periodization_grid, periodize};
use translates::SpectrumDescriptor;

fn main() {
    let psi = SpectrumDescriptor::haar();

    println!("pointwise p(xi) with certified tails:");
    for (xi, eps) in [(1.0 / 3.0, 1e-6), (0.1, 1e-8), (0.77, 1e-6)] {
        let (value, tail) = periodize(&psi, xi, eps).unwrap();
        println!(
            "  xi={xi:.4}  eps={eps:.0e}  value={value:.12}  tail<={tail:.2e}  bracket contains 1: {}",
            value <= 1.0 && 1.0 <= value + tail
        );
    }

    let grid = periodization_grid(&psi, 64, 1e-6).unwrap();
    let max_dev = grid.values().iter().map(|v| (v - 1.0).abs()).fold(0.0f64, f64::max);
    println!("\ngrid M=64, eps=1e-6: max deviation from 1 = {max_dev:.3e}");
    println!("(eps=1e-8 pushes the cutoff to ~2e7 translates per point; the");
    println!(" acceptance suite runs that configuration and lands below 1e-7)");
}
