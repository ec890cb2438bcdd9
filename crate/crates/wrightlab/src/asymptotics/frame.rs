//! Parameter frame kappa, h, vartheta shared by the asymptotic expansions.

/// The (kappa, h, vartheta) triple of a Wright-type function, plus the
/// derived large-argument variable X and the A0' normalization where one
/// applies.
#[derive(Debug, Clone, Copy)]
pub struct AsymptoticFrame {
    pub kappa: f64,
    pub h: f64,
    pub vartheta: f64,
    /// (2 pi sigma)^{1/2} / kappa for the F-function frame, NaN otherwise
    pub a0_prime: f64,
}

impl AsymptoticFrame {
    /// Frame of 1Psi1(rho, k; rho, 0; .): kappa = 1, h = 1, vartheta = k.
    pub fn psi11(k: f64) -> Self {
        AsymptoticFrame { kappa: 1.0, h: 1.0, vartheta: k, a0_prime: f64::NAN }
    }

    /// Frame of phi(rho, 0; .) with rho > 0: kappa = 1 + rho, h = rho^-rho.
    pub fn phi_pos(rho: f64) -> Self {
        AsymptoticFrame { kappa: 1.0 + rho, h: rho.powf(-rho), vartheta: 0.0, a0_prime: f64::NAN }
    }

    /// Frame of F(z) driving phi(-sigma, 0; .): kappa = 1 - sigma, h = sigma^sigma.
    pub fn f_of_sigma(sigma: f64) -> Self {
        let kappa = 1.0 - sigma;
        AsymptoticFrame {
            kappa,
            h: sigma.powf(sigma),
            vartheta: 1.0,
            a0_prime: (2.0 * std::f64::consts::PI * sigma).sqrt() / kappa,
        }
    }

    /// X = kappa (h x)^{1/kappa} for x > 0.
    pub fn big_x(&self, x: f64) -> f64 {
        self.kappa * (self.h * x).powf(1.0 / self.kappa)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_half_values() {
        // kappa = 1/2, h = sqrt(1/2), X = x^2/4, A0' = 2 sqrt(pi)
        let f = AsymptoticFrame::f_of_sigma(0.5);
        assert!((f.kappa - 0.5).abs() < 1e-15);
        assert!((f.big_x(3.0) - 2.25).abs() < 1e-14);
        assert!((f.a0_prime - 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn psi11_frame_collapses() {
        let f = AsymptoticFrame::psi11(7.0);
        assert_eq!(f.kappa, 1.0);
        assert_eq!(f.h, 1.0);
        assert_eq!(f.vartheta, 7.0);
        assert!((f.big_x(5.0) - 5.0).abs() < 1e-15);
    }
}
