pub mod errata;
pub mod error;
pub mod export;
pub mod gamma;
pub mod hermite;
pub mod inner_product;
pub mod operators;
pub mod oscillator;
pub mod params;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use gamma::gamma_value;
pub use hermite::{gen_hermite, laguerre, radial_hermite, radial_hermite_family, Method};
pub use inner_product::{
    gram_matrix, inner_product, moment, norm_sq, GammaSum, GramMatrix, Pairing, SymbolicMoment,
};
pub use operators::{apply_operator, deriv_dxr, dunkl_y, project, reflect_rr, Operator};
pub use oscillator::{
    apply_h0, apply_h_susy, apply_q, hermite_function, lower_a, raise_adag, spectrum_table,
    SpectrumRow, WeightedFunction,
};
pub use params::{parse_rational, DegreeClass, ModelParams, Parity, Rational};
pub use poly::{LaurentPoly, SparsePoly};
