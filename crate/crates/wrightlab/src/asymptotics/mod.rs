pub mod coeffs;
pub mod expansions;
pub mod frame;
pub mod phi_asym;
pub mod saddle;

pub use coeffs::{b_coeffs, c_coeffs, d_coeffs_general, CoeffTable};
pub use expansions::{
    psi11_algebraic_expansion, psi11_exact_expansion, psi11_large_rho, psi11_largek_smallx,
    psi11_negrho_largek, psi11_saddle_approx, theorem6_ratio,
};
pub use frame::AsymptoticFrame;
pub use phi_asym::{phi_asym_neg_rho_neg_x, phi_asym_neg_rho_pos_x, phi_asym_pos_rho};
pub use saddle::{solve_saddle, SaddleResult};
