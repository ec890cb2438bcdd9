//! Minimal double-double arithmetic (~31 significant digits).
//!
//! The convergent series in this crate cancel heavily at negative arguments;
//! in plain f64 the round-off of the peak term leaves up to ~1e-7 relative
//! noise at the worst tested points. Carrying the terms as unevaluated
//! f64 pairs removes that amplification. Only the handful of operations the
//! series loops need are implemented.

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

// exact product: f64::mul_add rounds a*b+c once, so the residual is exact
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, other: f64) -> Dd {
        let (s, e) = two_sum(self.hi, other);
        let e = e + self.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, other: f64) -> Dd {
        let (p, e) = two_prod(self.hi, other);
        let e = e + self.lo * other;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div_f64(self, other: f64) -> Dd {
        let q1 = self.hi / other;
        let (p, e) = two_prod(q1, other);
        let r = ((self.hi - p) - e + self.lo) / other;
        let (hi, lo) = quick_two_sum(q1, r);
        Dd { hi, lo }
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_cancellation() {
        // (1e16 + 1) - 1e16 == 1 in dd, not in f64
        let a = Dd::from(1e16).add_f64(1.0);
        let b = a.add_f64(-1e16);
        assert_eq!(b.value(), 1.0);
    }

    #[test]
    fn product_precision() {
        // (1 + 2^-30)^2 = 1 + 2^-29 + 2^-60 exactly representable as dd
        let x = Dd::from(1.0).add_f64((2f64).powi(-30));
        let sq = x.mul(x);
        let expect_hi = 1.0 + (2f64).powi(-29);
        assert_eq!(sq.hi, expect_hi);
        assert_eq!(sq.lo, (2f64).powi(-60));
    }

    #[test]
    fn division_round_trip() {
        let a = Dd::from(std::f64::consts::PI);
        let b = a.div_f64(7.3);
        let back = b.mul_f64(7.3);
        assert!((back.value() - std::f64::consts::PI).abs() < 1e-30);
    }

    #[test]
    fn alternating_sum_beats_f64() {
        // sum (-1)^n * 10^8 / n! style cancellation
        let mut dd = Dd::ZERO;
        let mut term = Dd::from(1e8);
        for n in 1..60 {
            dd = dd.add(term);
            term = term.mul_f64(-1.0).div_f64(n as f64);
        }
        // reference: 1e8 * (terms of e^-1 series) summed from n=0..58 scaled
        let expect = 1e8 * (-1f64).exp();
        assert!(((dd.value() - expect) / expect).abs() < 1e-25);
    }
}
