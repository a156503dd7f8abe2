//! Survival-analysis toolkit built around the starshaped mean residual life
//! (SMEL) property and proportional mean residual life (PMRL) regression.
//!
//! The crate provides:
//! - the Weibull–resilience lifetime family ([`dist`]),
//! - PMRL conditional functions over that baseline ([`pmrl`]),
//! - synthetic cohort generation with calibrated censoring and a shared
//!   frailty link to student trajectories ([`simdata`]),
//! - Kaplan–Meier / reverse-KM / MRL estimators and IPCW weights
//!   ([`nonparam`]),
//! - the starshapedness ratio statistic and its bootstrap test ([`startest`]),
//! - Bayesian PMRL inference with an adaptive Hamiltonian sampler ([`bayes`]),
//! - Cox, Weibull AFT and standard-Bayesian-Weibull benchmarks ([`bench`]),
//! - evaluation metrics ([`metrics`]), the joint longitudinal–survival model
//!   ([`joint`]), and the Monte Carlo experiment harness ([`harness`]).

pub mod bayes;
pub mod bench;
pub mod data;
pub mod dist;
pub mod error;
pub mod harness;
pub mod joint;
pub mod metrics;
pub mod nonparam;
pub mod pmrl;
pub mod simdata;
pub mod startest;
pub mod util;

pub use error::{Error, Result};
