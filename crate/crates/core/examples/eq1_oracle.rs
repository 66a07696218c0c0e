//! The norm identity computed along two independent routes: the frequency
//! side integrates |S_n(f)|^2 against the periodization of chi_{A^c}; the
//! time side integrates |sum_k f^(-k) psi(x-k)|^2 over the real line by
//! adaptive quadrature with a certified truncation.
//!
//!     cargo run --example eq1_oracle

use translates::independence::{combination_norm, time_domain_norm_oracle};
use translates::periodization::{periodization_grid, spectrum_from_set};
use translates::{CoefficientWindow, IntervalSet};

fn main() {
    let ac: IntervalSet = "0..1/2".parse().unwrap();
    let psi = spectrum_from_set(&ac).unwrap();
    let grid = periodization_grid(&psi, 65_536, 1e-9).unwrap();
    let support: IntervalSet = "5/8..7/8".parse().unwrap();

    println!("psi^ = chi_[0,1/2), f = chi_[5/8,7/8], c_k = f^(-k)\n");
    println!("{:>4}  {:>18}  {:>18}  {:>10}", "n", "frequency route", "time route", "rel diff");
    for n in [1usize, 2, 4, 8, 16, 32] {
        let f = CoefficientWindow::indicator(&support, n);
        let c = f.reversed();
        let freq = combination_norm(&c, n, &grid).unwrap();
        let time = time_domain_norm_oracle(&c, n, &psi, 1e-8).unwrap();
        println!(
            "{n:>4}  {:>18.12}  {time:>18.12}  {:>10.2e}",
            freq.value,
            (freq.value - time).abs() / time
        );
    }
    println!("\nthe two columns agreeing is the computational content of the identity");
}
