//! Page-view dynamics of front-page promoted content.
//!
//! When a site promotes one article per day on its front page at a fixed
//! hour, the article's hourly view counts follow a remarkably regular
//! pattern: a large first-hour peak, exponential decay while featured, a
//! sharp drop when the next day's article takes over, and continued decay
//! at the same rate while the article remains linked in a "recently
//! featured" list. The decay only looks exponential once the site's
//! circadian activity cycle is removed; this crate implements that
//! correction and everything built on top of it:
//!
//! - [`ingest`] parses raw hourly pagecount dumps and a promotion schedule
//!   into clean 96-hour exposure windows.
//! - [`circadian`] computes the front-page activity profile, finds the
//!   optimal decycling fraction, and converts series between real time and
//!   the redistributed time scale in both directions.
//! - [`model`] holds the two-parameter decay model (per-hour decay factor
//!   `beta`, day-boundary jump factor `gamma`) and its estimators,
//!   including the log-linear law tying `gamma` to first-hour views.
//! - [`predict`] forecasts hourly views from the first-hour count alone,
//!   or re-anchored on the first count after demotion, with interval bands
//!   and error metrics.
//! - [`simulate`] generates synthetic promoted-article traffic from the
//!   model's Poisson interpretation; it serves as the ground-truth oracle
//!   for the estimator and predictor test suites.
//! - [`cli`] wires the above into the `pvd` binary.
//!
//! All operations are deterministic given their inputs (and seeds, where
//! randomness is involved); parallel execution never changes results.

pub mod artifact;
pub mod circadian;
pub mod cli;
pub mod error;
pub mod hours;
pub mod ingest;
pub mod model;
pub mod predict;
pub mod simulate;
pub(crate) mod stats;

pub use error::{Error, Result};
