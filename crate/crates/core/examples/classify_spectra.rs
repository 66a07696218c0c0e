//! The classification scheme read off sampled periodization functions:
//! strictly positive, vanishing at a point, vanishing on a set of
//! positive measure.
//!
//!     cargo run --example classify_spectra

use translates::periodization::{classify, periodization_grid, spectrum_from_set};
use translates::set::rational;
use translates::{IntervalSet, SpectrumDescriptor};

fn main() {
    let tau = 1e-6;
    let full: IntervalSet = "0..1".parse().unwrap();
    let half: IntervalSet = "0..1/2".parse().unwrap();
    let cases = [
        ("p = 1 (full-circle indicator)", spectrum_from_set(&full).unwrap()),
        (
            "p = sin^2(pi xi) (sine bump)",
            SpectrumDescriptor::sine_bump(rational(0, 1), rational(1, 1)).unwrap(),
        ),
        ("p = chi_[0,1/2)", spectrum_from_set(&half).unwrap()),
    ];
    for (name, psi) in cases {
        let grid = periodization_grid(&psi, 1024, 1e-9).unwrap();
        let r = classify(&grid, tau).unwrap();
        println!("{name}");
        println!("  ess inf ~ {:.3e}   ess sup ~ {:.3}", r.ess_inf_est, r.ess_sup_est);
        println!(
            "  positive a.e. (grid sense): {}   minimal (1/p integrable): {}",
            r.positive_ae, r.minimal_flag
        );
        println!(
            "  1/p integral estimate {:.4e} -> {:.4e} under tau/10 (ratio {:.2}, diverged: {})",
            r.inv_integral, r.inv_integral_refined, r.divergence_ratio, r.diverged
        );
        println!("  zero set ~ {} (measure {})", r.zero_set_approx, r.zero_measure());
        println!();
    }
}
