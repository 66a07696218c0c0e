//! The honest frontier: a fat Cantor set has positive measure but contains
//! no interval, so localization says nothing about the whole complement.
//! The probe reports leakage (exactly 0 by construction), the windowed-sum
//! norm estimate, and boundedness profiles: evidence, not a verdict.
//!
//!     cargo run --example cantor_evidence

use translates::independence::{nice_function_probe, Candidate};
use translates::IntervalSet;

fn main() {
    let a: IntervalSet = "cantor(depth=5, remove=1/4)".parse().unwrap();
    let candidate = Candidate::indicator(&a, 256);
    let schedule: Vec<usize> = (0..=8).map(|e| 1usize << e).collect();
    let report = nice_function_probe(&a, &candidate, 11, &schedule).unwrap();

    println!("A = fat Cantor, depth 5, measure {} (~{:.4})", a.measure(), 243.0 / 1024.0);
    println!("candidate: chi_A coefficients to width 256\n");
    println!("support leakage into A^c: {} (exact: {})", report.leakage, report.leakage_exact);
    println!(
        "U-norm estimate: {:.4} (certified grid bound {:.4})",
        report.u_norm.value,
        report.u_norm.certified_bound()
    );
    println!("\n{:>5}  {:>14}  {:>14}", "n", "sup on A^c", "sup on [0,1)");
    for (i, &n) in schedule.iter().enumerate() {
        println!(
            "{n:>5}  {:>14.6}  {:>14.6}",
            report.profile_complement.sups[i].value,
            report.profile_full.sups[i].value
        );
    }
    println!("\nno boundedness claim is made: a finite schedule is evidence only.");
}
