//! Ingestion of raw hourly pagecount dumps and promotion schedules into
//! clean per-article exposure windows.
//!
//! The raw input is one dump file per UTC hour listing `project title
//! views bytes` for every page that received at least one view during
//! that hour, optionally gzip-compressed, named
//! `pagecounts-YYYYMMDD-HHMMSS(.gz)`. Timestamps come from the file
//! names, never from file contents.
//!
//! A promoted article's exposure window is the 96 hours (1 day featured
//! + 3 days listed) starting at its promotion midnight. Because the dump
//! omits zero-view pages, a title absent from a *present* hour file means
//! zero views that hour; only an absent or unreadable hour file makes a
//! slot missing. Duplicate entries for the same title within one hour are
//! summed.
//!
//! Parsed series are cached to a small binary format (see
//! [`series::write_series`]) so fitting never re-reads raw dumps.

pub mod pagecounts;
pub mod run;
pub mod schedule;
pub mod series;

use std::collections::{HashMap, HashSet};

pub use pagecounts::{encode_title, load_hour_file, parse_pagecounts_line, PageViewRecord};
pub use run::{run_ingest, IngestConfig, IngestReport};
pub use schedule::{PromotionSchedule, ScheduleEntry};
pub use series::HourlySeries;

use crate::error::{Error, Result};
use crate::hours::HourStamp;

/// Length of a promoted article's exposure window in hours.
pub const EXPOSURE_HOURS: usize = 96;

/// The 96-hour exposure window of one promoted article.
///
/// `slots[i]` is the view count of exposure hour `i + 1` (so `slots[0]`
/// holds `v1`, the first-hour views), or `None` where the hour's dump
/// file was missing. The window is complete when every slot is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArticleExposure {
    pub title: String,
    pub promoted_at: HourStamp,
    pub slots: Vec<Option<u64>>,
    /// Redistributed-time counterpart, filled by `circadian::redistribute`.
    pub v_star: Option<Vec<f64>>,
}

impl ArticleExposure {
    pub fn new(title: String, promoted_at: HourStamp, slots: Vec<Option<u64>>) -> Result<Self> {
        if !promoted_at.is_midnight() {
            return Err(Error::invalid(
                "exposure",
                format!("promotion of {title:?} is not at 00h UTC"),
            ));
        }
        if slots.len() != EXPOSURE_HOURS {
            return Err(Error::invalid(
                "exposure",
                format!("expected {EXPOSURE_HOURS} slots, got {}", slots.len()),
            ));
        }
        Ok(ArticleExposure {
            title,
            promoted_at,
            slots,
            v_star: None,
        })
    }

    /// True iff all 96 slots are present.
    pub fn complete(&self) -> bool {
        self.slots.iter().all(Option::is_some)
    }

    /// Views during the first exposure hour.
    pub fn v1(&self) -> Option<u64> {
        self.slots[0]
    }

    /// Views during the first hour after demotion (exposure hour 25).
    pub fn v25(&self) -> Option<u64> {
        self.slots[24]
    }

    /// The counts as floats; errors when the window is incomplete.
    pub fn views(&self) -> Result<Vec<f64>> {
        self.slots
            .iter()
            .enumerate()
            .map(|(i, s)| {
                s.map(|v| v as f64).ok_or_else(|| {
                    Error::invalid(
                        "exposure",
                        format!("{:?}: hour {} is missing", self.title, i + 1),
                    )
                })
            })
            .collect()
    }

    pub fn to_series(&self) -> HourlySeries {
        HourlySeries {
            title: self.title.clone(),
            start: self.promoted_at,
            counts: self.slots.clone(),
        }
    }

    pub fn from_series(series: HourlySeries) -> Result<Self> {
        ArticleExposure::new(series.title, series.start, series.counts)
    }
}

/// Fills one exposure window from 96 consecutive hour maps.
///
/// `hour_maps[i]` is the title→views map for exposure hour `i + 1`, or
/// `None` when that hour's dump was missing or unreadable. A present map
/// lacking the title yields an explicit 0 (the dump omits zero-view
/// pages); a missing map yields a missing slot.
pub fn build_exposure(
    title: &str,
    promoted_at: HourStamp,
    hour_maps: &[Option<HashMap<String, u64>>],
) -> Result<ArticleExposure> {
    if hour_maps.len() != EXPOSURE_HOURS {
        return Err(Error::invalid(
            "exposure",
            format!("expected {EXPOSURE_HOURS} hour maps, got {}", hour_maps.len()),
        ));
    }
    let slots = hour_maps
        .iter()
        .map(|m| m.as_ref().map(|m| m.get(title).copied().unwrap_or(0)))
        .collect();
    ArticleExposure::new(title.to_string(), promoted_at, slots)
}

/// Keeps only complete exposures whose title is not excluded.
pub fn filter_complete(
    exposures: Vec<ArticleExposure>,
    exclusions: &HashSet<String>,
) -> Vec<ArticleExposure> {
    exposures
        .into_iter()
        .filter(|e| e.complete() && !exclusions.contains(&e.title))
        .collect()
}
