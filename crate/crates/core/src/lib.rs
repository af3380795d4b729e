//! Spectral solutions for one-dimensional dispersive media driven by a Lamb
//! (damped point-mass) oscillator.
//!
//! The forced problems on the periodic domain have closed-form Fourier
//! coefficients ([`modal`]) which [`periodic`] sums into profiles. The same
//! closed forms at continuous wave number give the whole-line solutions in
//! [`line`]. [`oracle`] re-derives the coefficients by direct integration.

pub mod analysis;
pub mod dispersion;
pub mod error;
pub mod line;
pub mod modal;
pub mod oracle;
pub mod oscillator;
pub mod periodic;
pub mod profile;
pub mod regularity;

pub use dispersion::{DispersionRelation, CATALOG_NAMES};
pub use error::{Error, Result};
pub use modal::ModalCoefficients;
pub use oscillator::OscillatorParams;
pub use profile::{Normalization, SolutionProfile};
pub use regularity::{classify_regularity, Model, RegularityClass, RegularityReport};
