//! Hard-margin linear SVM and a bias-corrected variant for
//! high-dimension, low-sample-size (HDLSS) classification.
//!
//! When the feature dimension `d` far exceeds the sample count `N`, the
//! hard-margin SVM's decision values carry a systematic shift of size
//! `kappa / delta`, where `kappa = tr(S1)/n1 - tr(S2)/n2` compares the
//! per-class scatter-to-size ratios and `delta = ||mu1 - mu2||^2` is the
//! squared mean separation. The shift unbalances the class-wise error
//! rates whenever class sizes or covariance scales differ. This crate
//! provides:
//!
//! - [`svm`]: the hard-margin dual solver (SMO with no upper box
//!   constraint), the trained classifier, an exact small-instance
//!   oracle, and a distance-based linear baseline;
//! - [`bias`]: plug-in estimators of the separation and trace-imbalance
//!   quantities and the bias-corrected classifier built from them;
//! - [`multiclass`]: one-versus-one max-wins voting over either rule;
//! - [`dataset`]: the column-major labeled sample container;
//! - [`population`]: synthetic population models, scenario presets, and
//!   asymptotic-assumption diagnostics for simulation studies.
//!
//! The crate is `no_std` (with `alloc`) and performs no I/O; file
//! formats, configuration, and the Monte Carlo experiment driver live in
//! the companion `bcsvm-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bias;
pub mod dataset;
pub mod error;
pub mod multiclass;
pub mod population;
pub mod svm;

pub use error::{Error, Result};
