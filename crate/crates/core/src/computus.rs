//! Classical Easter computus: Gregorian (Catholic) and Julian (Orthodox).

use crate::astronomical::astronomical_easter;
use crate::calendar::{check_supported_year, jd_to_date, CalendarDate, CalendarSystem};
use crate::error::{Error, Result};

const FIRST_GREGORIAN_YEAR: i32 = 1583;

fn check_computus_year(year: i32) -> Result<()> {
    if year < FIRST_GREGORIAN_YEAR {
        return Err(Error::InvalidArgument(format!(
            "computus requires a year from {FIRST_GREGORIAN_YEAR}, got {year}"
        )));
    }
    Ok(())
}

/// Split `n = 31 * month + (day - 1)` into a calendar month and day.
fn month_day(n: i32) -> (u32, u32) {
    ((n / 31) as u32, (n % 31 + 1) as u32)
}

/// Gregorian computus (anonymous Gregorian algorithm).
#[allow(clippy::many_single_char_names)]
pub fn catholic_easter(year: i32) -> Result<CalendarDate> {
    check_computus_year(year)?;
    let a = year % 19;
    let b = year / 100;
    let c = year % 100;
    let d = b / 4;
    let e = b % 4;
    let f = (b + 8) / 25;
    let g = (b - f + 1) / 3;
    let h = (19 * a + b - d - g + 15) % 30;
    let i = c / 4;
    let k = c % 4;
    let l = (32 + 2 * e + 2 * i - h - k) % 7;
    let m = (a + 11 * h + 22 * l) / 451;
    let (month, day) = month_day(h + l - 7 * m + 114);
    CalendarDate::gregorian(year, month, day)
}

/// Easter Sunday of the Julian computus, as a Julian-calendar date.
#[allow(clippy::many_single_char_names)]
pub fn julian_computus(year: i32) -> Result<CalendarDate> {
    let a = year.rem_euclid(4);
    let b = year.rem_euclid(7);
    let c = year.rem_euclid(19);
    let d = (19 * c + 15) % 30;
    let e = (2 * a + 4 * b - d + 34).rem_euclid(7);
    let (month, day) = month_day(d + e + 114);
    CalendarDate::julian(year, month, day)
}

/// Orthodox Easter expressed in the Gregorian calendar.
pub fn orthodox_easter(year: i32) -> Result<CalendarDate> {
    check_computus_year(year)?;
    let julian = julian_computus(year)?;
    let (gregorian, _) = jd_to_date(julian.jd(), CalendarSystem::Gregorian)?;
    Ok(gregorian)
}

/// One year's Easter by all three methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EasterResult {
    pub year: i32,
    pub orthodox: CalendarDate,
    pub catholic: CalendarDate,
    pub astronomical: CalendarDate,
    pub astro_minus_catholic_days: i64,
    pub astro_minus_orthodox_days: i64,
}

fn days_between(later: &CalendarDate, earlier: &CalendarDate) -> i64 {
    later.jd().days_since(earlier.jd()).round() as i64
}

pub fn easter_result(year: i32) -> Result<EasterResult> {
    check_supported_year(year)?;
    let orthodox = orthodox_easter(year)?;
    let catholic = catholic_easter(year)?;
    let astronomical = astronomical_easter(year)?;
    Ok(EasterResult {
        year,
        orthodox,
        catholic,
        astronomical,
        astro_minus_catholic_days: days_between(&astronomical, &catholic),
        astro_minus_orthodox_days: days_between(&astronomical, &orthodox),
    })
}
