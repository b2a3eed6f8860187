//! Panel unit-root and cointegration tests, pooled panel VECM estimation
//! with policy dummies, impulse responses, variance decompositions and
//! residual diagnostics, plus synthetic data generators with known truth.
//!
//! Numerical code is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the scalar to `f64`.

pub mod cointegration;
pub mod diagnostics;
pub mod dist;
pub mod dynamics;
pub mod error;
pub mod panel;
pub mod regress;
pub mod report;
pub mod scalar;
pub mod synth;
pub mod tables;
pub mod unit_root;
pub mod vecm;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Panel = panel::PanelDataset<f64>;
pub type Series = panel::SeriesView<f64>;
pub type Fit = regress::OlsFit<f64>;
pub type LongRun = vecm::CointegratingVector<f64>;
pub type Vecm = vecm::VecmEstimate<f64>;
pub type Var = vecm::VarSystem<f64>;
pub type Companion = dynamics::CompanionForm<f64>;
pub type Irf = dynamics::IrfResult<f64>;
pub type Fevd = dynamics::FevdResult<f64>;
