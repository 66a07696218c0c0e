//! Windowed-sum norms: the sup over all coefficient windows n <= k <= m,
//! not just the symmetric ones.  Per grid point this is the diameter of
//! the prefix-sum walk in the complex plane.
//!
//!     cargo run --example unorm_windows

use translates::fourier::{boundedness_profile, u_norm_estimate};
use translates::{CoefficientWindow, IntervalSet};

fn main() {
    let level = 10;
    let full = IntervalSet::full();
    for literal in ["0..1/4", "0..1/2", "1/4..1/2, 5/8..3/4"] {
        let support: IntervalSet = literal.parse().unwrap();
        let w = CoefficientWindow::indicator(&support, 64);
        let u = u_norm_estimate(&w, level);
        let symmetric =
            boundedness_profile(&w, &full, &[1, 2, 4, 8, 16, 32, 64], level).unwrap();
        println!("f = chi_{{{literal}}}, width 64:");
        println!(
            "  windowed-sum norm >= {:.6}   (certified grid bound {:.3})",
            u.value,
            u.certified_bound()
        );
        println!(
            "  best symmetric window sup = {:.6}   (dominated by the U-norm: {})",
            symmetric.max_value(),
            u.value >= symmetric.max_value()
        );
        println!();
    }
    println!("one-sided windows can exceed every symmetric one; the gap above is real.");
}
