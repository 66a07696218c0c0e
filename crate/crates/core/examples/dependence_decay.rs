//! The dependence witness: take A = [1/2,1) as the designed zero set of
//! p_psi, feed the coefficients of f = chi_[5/8,7/8] (supported in A, and
//! with bounded partial sums on A^c by localization), and watch the
//! combination norms collapse: a nonzero l2 sequence annihilating the
//! translates, so the system is not l2-linearly independent.
//!
//!     cargo run --example dependence_decay

use translates::independence::dependence_witness;
use translates::{CoefficientWindow, IntervalSet};

fn main() {
    let a: IntervalSet = "1/2..1".parse().unwrap();
    let support: IntervalSet = "5/8..7/8".parse().unwrap();
    let f = CoefficientWindow::indicator(&support, 256);
    let schedule: Vec<usize> = (0..=8).map(|e| 1usize << e).collect();

    let witness = dependence_witness(&a, &f, &schedule, 4096, true).unwrap();
    println!("A = {a}, supp f = {support}\n");
    println!("{:>5}  {:>16}  {:>16}", "n", "||sum c_k T_k psi||", "time-domain check");
    for (i, &n) in witness.schedule.iter().enumerate() {
        let oracle = witness.oracle_norms.as_ref().unwrap()[i]
            .map(|v| format!("{v:.10}"))
            .unwrap_or_else(|| "-".into());
        println!("{n:>5}  {:>16.10}  {oracle:>16}", witness.norms[i]);
    }
    println!("\nfinal/first = {:.5}  (strictly positive, collapsing)", witness.decay_ratio());
}
