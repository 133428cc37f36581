//! Calendar arithmetic: the Gregorian leap rule, conversion between civil
//! dates and Julian Days in both the Gregorian and Julian calendars,
//! day-of-year handling and day of the week.
//!
//! All instants are UT. Civil midnight falls on a half-integer Julian Day.

use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};

/// Years accepted by the Easter entry points.
pub const SUPPORTED_YEARS: RangeInclusive<i32> = 1583..=3000;

/// Julian Day of 1500-01-01 0h (Gregorian), inclusive lower bound.
pub const JD_MIN: f64 = 2_268_923.5;
/// Julian Day of 3101-01-01 0h (Gregorian), exclusive upper bound.
pub const JD_MAX: f64 = 2_853_676.5;

const MONTH_NAMES: [&str; 12] = [
    "January",
    "February",
    "March",
    "April",
    "May",
    "June",
    "July",
    "August",
    "September",
    "October",
    "November",
    "December",
];

pub fn check_supported_year(year: i32) -> Result<()> {
    if SUPPORTED_YEARS.contains(&year) {
        Ok(())
    } else {
        Err(Error::YearOutOfRange(year))
    }
}

/// Remainder of `x / y` in `[0, y)`, whatever the sign of `x`.
///
/// ```
/// use easter_core::calendar::euclidean_mod;
/// assert_eq!(euclidean_mod(-76, 7).unwrap(), 1);
/// ```
pub fn euclidean_mod(x: i64, y: i64) -> Result<i64> {
    if y <= 0 {
        return Err(Error::InvalidArgument(format!(
            "modulus must be positive, got {y}"
        )));
    }
    Ok(x.rem_euclid(y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CalendarSystem {
    Gregorian,
    Julian,
}

impl CalendarSystem {
    pub fn is_leap(self, year: i32) -> bool {
        match self {
            CalendarSystem::Gregorian => leap_indicator(year).is_leap(),
            CalendarSystem::Julian => year.rem_euclid(4) == 0,
        }
    }

    pub fn days_in_month(self, year: i32, month: u32) -> u32 {
        match month {
            1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
            4 | 6 | 9 | 11 => 30,
            2 if self.is_leap(year) => 29,
            2 => 28,
            _ => 0,
        }
    }
}

/// Number of extra days in February of a Gregorian year: 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LeapIndicator(u8);

impl LeapIndicator {
    pub const COMMON: LeapIndicator = LeapIndicator(0);
    pub const LEAP: LeapIndicator = LeapIndicator(1);

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_leap(self) -> bool {
        self.0 == 1
    }
}

impl From<LeapIndicator> for i64 {
    fn from(nf: LeapIndicator) -> i64 {
        i64::from(nf.0)
    }
}

/// The four-clause Gregorian leap rule.
pub fn leap_indicator(year: i32) -> LeapIndicator {
    let m = i64::from(year);
    if m.rem_euclid(400) == 0 {
        LeapIndicator::LEAP
    } else if m.rem_euclid(100) == 0 {
        LeapIndicator::COMMON
    } else if m.rem_euclid(4) == 0 {
        LeapIndicator::LEAP
    } else {
        LeapIndicator::COMMON
    }
}

/// A civil date tagged with the calendar it is expressed in. Ordering is
/// only chronological between dates of the same system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CalendarDate {
    year: i32,
    month: u32,
    day: u32,
    system: CalendarSystem,
}

impl CalendarDate {
    pub fn new(year: i32, month: u32, day: u32, system: CalendarSystem) -> Result<Self> {
        if !(1..=12).contains(&month) {
            return Err(Error::InvalidArgument(format!("month {month} not in 1–12")));
        }
        let last = system.days_in_month(year, month);
        if day == 0 || day > last {
            return Err(Error::InvalidArgument(format!(
                "day {day} invalid for {year}-{month:02} ({system:?})"
            )));
        }
        Ok(CalendarDate {
            year,
            month,
            day,
            system,
        })
    }

    pub fn gregorian(year: i32, month: u32, day: u32) -> Result<Self> {
        Self::new(year, month, day, CalendarSystem::Gregorian)
    }

    pub fn julian(year: i32, month: u32, day: u32) -> Result<Self> {
        Self::new(year, month, day, CalendarSystem::Julian)
    }

    pub fn year(&self) -> i32 {
        self.year
    }

    pub fn month(&self) -> u32 {
        self.month
    }

    pub fn day(&self) -> u32 {
        self.day
    }

    pub fn system(&self) -> CalendarSystem {
        self.system
    }

    pub fn month_name(&self) -> &'static str {
        MONTH_NAMES[(self.month - 1) as usize]
    }

    /// `27 March` style, as used in the comparison tables.
    pub fn day_month(&self) -> String {
        format!("{} {}", self.day, self.month_name())
    }

    /// Julian Day at 0h UT of this date.
    pub fn jd(&self) -> JulianDay {
        JulianDay(day_number(self.year, self.month, self.day, self.system) as f64 - 0.5)
    }
}

/// ISO `YYYY-MM-DD`.
impl fmt::Display for CalendarDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)
    }
}

/// A point on the astronomical Julian Day scale (UT).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct JulianDay(f64);

impl JulianDay {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && (JD_MIN..JD_MAX).contains(&value) {
            Ok(JulianDay(value))
        } else {
            Err(Error::JulianDayOutOfRange(value))
        }
    }

    pub(crate) fn unchecked(value: f64) -> Self {
        JulianDay(value)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// This instant moved by `days`. Range is not rechecked.
    pub fn shifted(self, days: f64) -> JulianDay {
        JulianDay(self.0 + days)
    }

    /// Signed interval `self − other` in days.
    pub fn days_since(self, other: JulianDay) -> f64 {
        self.0 - other.0
    }
}

impl fmt::Display for JulianDay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Integer Julian Day Number of the civil day (the JD at noon).
fn day_number(year: i32, month: u32, day: u32, system: CalendarSystem) -> i64 {
    let (mut y, mut m) = (i64::from(year), i64::from(month));
    if m <= 2 {
        y -= 1;
        m += 12;
    }
    let b = match system {
        CalendarSystem::Gregorian => {
            let a = y.div_euclid(100);
            2 - a + a.div_euclid(4)
        }
        CalendarSystem::Julian => 0,
    };
    // floor(365.25 (y + 4716)) + floor(30.6001 (m + 1)), in integers
    (1461 * (y + 4716)).div_euclid(4) + (306_001 * (m + 1)) / 10_000 + i64::from(day) + b - 1524
}

pub fn date_to_jd(date: &CalendarDate, fraction_of_day: f64) -> Result<JulianDay> {
    if !(0.0..1.0).contains(&fraction_of_day) {
        return Err(Error::InvalidArgument(format!(
            "fraction of day {fraction_of_day} not in [0, 1)"
        )));
    }
    JulianDay::new(date.jd().0 + fraction_of_day)
}

/// Civil date containing `jd` in the requested calendar, with the elapsed
/// fraction of that day since 0h UT.
pub fn jd_to_date(jd: JulianDay, system: CalendarSystem) -> Result<(CalendarDate, f64)> {
    let jd = JulianDay::new(jd.0)?.0 + 0.5;
    let z = jd.floor();
    let fraction = jd - z;
    let a = match system {
        CalendarSystem::Gregorian => {
            let alpha = ((z - 1_867_216.25) / 36_524.25).floor();
            z + 1.0 + alpha - (alpha / 4.0).floor()
        }
        CalendarSystem::Julian => z,
    };
    let b = a + 1524.0;
    let c = ((b - 122.1) / 365.25).floor();
    let d = (365.25 * c).floor();
    let e = ((b - d) / 30.6001).floor();
    let day = (b - d - (30.6001 * e).floor()) as u32;
    let month = if e < 14.0 { e - 1.0 } else { e - 13.0 } as u32;
    let year = if month > 2 { c - 4716.0 } else { c - 4715.0 } as i32;
    let date = CalendarDate::new(year, month, day, system)
        .map_err(|err| Error::Internal(format!("inverse JD conversion: {err}")))?;
    Ok((date, fraction))
}

/// An ordinal day within a Gregorian year, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DayOfYear(u32);

impl DayOfYear {
    pub fn new(value: u32, year: i32) -> Result<Self> {
        let last = 365 + u32::from(leap_indicator(year).value());
        if (1..=last).contains(&value) {
            Ok(DayOfYear(value))
        } else {
            Err(Error::InvalidArgument(format!(
                "day of year {value} not in 1–{last} for {year}"
            )))
        }
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

/// Gregorian civil date of the `z`-th day of `year`.
///
/// Inside March and April this reduces to the familiar rule: past
/// `90 + nf` the date is `z − 90 − nf` April, otherwise `z − 59 − nf` March.
pub fn day_of_year_to_date(z: DayOfYear, year: i32) -> Result<CalendarDate> {
    let z = DayOfYear::new(z.0, year)?.0;
    let mut remaining = z;
    for month in 1..=12 {
        let len = CalendarSystem::Gregorian.days_in_month(year, month);
        if remaining <= len {
            return CalendarDate::gregorian(year, month, remaining);
        }
        remaining -= len;
    }
    unreachable!("day {z} validated against the year length")
}

/// Day of the week, 0 = Sunday … 6 = Saturday.
pub fn day_of_week(jd: JulianDay) -> u32 {
    ((jd.0 + 1.5).floor() as i64).rem_euclid(7) as u32
}
