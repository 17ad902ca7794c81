//! Compensated summation primitives.
//!
//! Every float reduction in the crate either runs sequentially in a fixed
//! order or maps independent items into a position-indexed buffer that is
//! folded sequentially afterwards. Kahan compensation keeps long sums of
//! unit-modulus terms accurate well past the 1e-12 tolerances used by the
//! verification suites.

use num_complex::Complex64;

/// Kahan–Babuska compensated accumulator for `f64`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.comp += (self.sum - t) + value;
        } else {
            self.comp += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated accumulator for complex values, one [`Kahan`] per component.
#[derive(Clone, Copy, Debug, Default)]
pub struct KahanComplex {
    re: Kahan,
    im: Kahan,
}

impl KahanComplex {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: Complex64) {
        self.re.add(value.re);
        self.im.add(value.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// Compensated sum of an iterator in its own order.
pub fn kahan_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut acc = Kahan::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}

/// Compensated complex sum of an iterator in its own order.
pub fn kahan_sum_complex(values: impl IntoIterator<Item = Complex64>) -> Complex64 {
    let mut acc = KahanComplex::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}
