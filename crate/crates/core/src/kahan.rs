//! Compensated accumulators used by every summation whose order is part of
//! the contract.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct KahanF64 {
    sum: f64,
    comp: f64,
}

impl KahanF64 {
    pub(crate) fn add(&mut self, term: f64) {
        let y = term - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct KahanComplex {
    re: KahanF64,
    im: KahanF64,
}

impl KahanComplex {
    pub(crate) fn add(&mut self, term: Complex64) {
        self.re.add(term.re);
        self.im.add(term.im);
    }

    pub(crate) fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensation_beats_naive_summation() {
        let mut k = KahanF64::default();
        let mut naive = 0.0f64;
        let term = 1e-9f64;
        for _ in 0..10_000_000 {
            k.add(term);
            naive += term;
        }
        let exact = 1e-2;
        assert!((k.value() - exact).abs() <= 1e-15);
        assert!((k.value() - exact).abs() <= (naive - exact).abs());
    }
}
