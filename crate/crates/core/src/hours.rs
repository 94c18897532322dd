//! Absolute-hour timestamps.
//!
//! Everything in this crate is indexed by whole UTC hours. An [`HourStamp`]
//! counts hours since the Unix epoch, which keeps arithmetic trivial
//! (promotion windows are contiguous ranges of stamps) and makes the
//! hour-of-day computation a single `rem_euclid`.

use chrono::{NaiveDate, NaiveDateTime, Timelike};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A UTC timestamp with whole-hour resolution, stored as hours since the
/// Unix epoch.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct HourStamp(pub i64);

impl HourStamp {
    /// Midnight (00h UTC) of the given calendar date.
    pub fn from_date(date: NaiveDate) -> Self {
        let secs = date.and_hms_opt(0, 0, 0).expect("valid midnight").and_utc();
        HourStamp(secs.timestamp() / 3600)
    }

    pub fn from_datetime(dt: NaiveDateTime) -> Result<Self> {
        if dt.minute() != 0 || dt.second() != 0 {
            return Err(Error::invalid(
                "timestamp",
                format!("{dt} is not aligned to a whole hour"),
            ));
        }
        Ok(HourStamp(dt.and_utc().timestamp() / 3600))
    }

    /// UTC hour of day, 0..=23.
    pub fn hour_of_day(self) -> u8 {
        (self.0.rem_euclid(24)) as u8
    }

    /// True if this stamp is 00h UTC of some day.
    pub fn is_midnight(self) -> bool {
        self.hour_of_day() == 0
    }

    pub fn plus_hours(self, hours: i64) -> Self {
        HourStamp(self.0 + hours)
    }

    /// The calendar date and hour this stamp falls in.
    pub fn to_datetime(self) -> NaiveDateTime {
        chrono::DateTime::from_timestamp(self.0 * 3600, 0)
            .expect("hour stamp in datetime range")
            .naive_utc()
    }

    /// `YYYYMMDD-HHMMSS` as used in pagecounts dump file names.
    pub fn dump_suffix(self) -> String {
        self.to_datetime().format("%Y%m%d-%H0000").to_string()
    }
}

/// Parses the timestamp out of a pagecounts dump file name of the form
/// `pagecounts-YYYYMMDD-HHMMSS` with an optional `.gz` suffix. Returns
/// `None` for names that do not follow the convention.
pub fn hour_from_dump_name(name: &str) -> Option<HourStamp> {
    let stem = name.strip_suffix(".gz").unwrap_or(name);
    let rest = stem.strip_prefix("pagecounts-")?;
    let (date, time) = rest.split_once('-')?;
    if date.len() != 8 || time.len() != 6 || !time.ends_with("0000") {
        return None;
    }
    let date = NaiveDate::parse_from_str(date, "%Y%m%d").ok()?;
    let hour: u32 = time[..2].parse().ok()?;
    if hour > 23 {
        return None;
    }
    Some(HourStamp::from_date(date).plus_hours(i64::from(hour)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epoch_is_midnight() {
        let h = HourStamp(0);
        assert_eq!(h.hour_of_day(), 0);
        assert!(h.is_midnight());
    }

    #[test]
    fn hour_of_day_wraps() {
        assert_eq!(HourStamp(25).hour_of_day(), 1);
        assert_eq!(HourStamp(-1).hour_of_day(), 23);
    }

    #[test]
    fn dump_name_round_trip() {
        let d = NaiveDate::from_ymd_opt(2009, 3, 31).unwrap();
        let h = HourStamp::from_date(d).plus_hours(23);
        let name = format!("pagecounts-{}", h.dump_suffix());
        assert_eq!(name, "pagecounts-20090331-230000");
        assert_eq!(hour_from_dump_name(&name), Some(h));
        assert_eq!(hour_from_dump_name(&format!("{name}.gz")), Some(h));
    }

    #[test]
    fn dump_name_rejects_noise() {
        assert_eq!(hour_from_dump_name("pagecounts-2009033-000000"), None);
        assert_eq!(hour_from_dump_name("pagecounts-20090331-240000"), None);
        assert_eq!(hour_from_dump_name("projectcounts-20090331-000000"), None);
        assert_eq!(hour_from_dump_name("pagecounts-20090331-003000"), None);
        assert_eq!(hour_from_dump_name("readme.txt"), None);
    }

    #[test]
    fn date_conversion_matches_chrono() {
        let d = NaiveDate::from_ymd_opt(2008, 11, 4).unwrap();
        let h = HourStamp::from_date(d);
        assert!(h.is_midnight());
        assert_eq!(h.to_datetime().date(), d);
    }
}
