//! Astronomical Easter: the Sunday following the 14th day of the first mean
//! lunation whose 14th day is not before the true vernal equinox.

use crate::calendar::{
    check_supported_year, date_to_jd, day_of_year_to_date, euclidean_mod, leap_indicator,
    CalendarDate, DayOfYear, JulianDay, LeapIndicator,
};
use crate::error::{Error, Result};
use crate::lunar::{
    first_lunation_after_march, march_fraction, mean_new_moon, paschal_new_moon, LunationIndex,
    YearFraction, PASCHAL_AGE_DAYS,
};
use crate::solar::{find_vernal_equinox, wrapped_true_longitude};

/// Every intermediate quantity of one year's computation, in evaluation
/// order. The date in `easter` is derived from exactly these values.
#[derive(Debug, Clone, PartialEq)]
pub struct PaschalContext {
    pub year: i32,
    /// 21 March 0h, centre of the equinox search.
    pub jj_0: JulianDay,
    /// 1 January 0h.
    pub jj_1j: JulianDay,
    pub jj_e: JulianDay,
    /// Wrapped true longitude of the Sun at `jj_e`, degrees.
    pub longitude_at_equinox: f64,
    pub nf: LeapIndicator,
    pub f: YearFraction,
    pub k: LunationIndex,
    /// First mean New Moon after 1 March, before the Paschal check.
    pub first_new_moon: JulianDay,
    /// Selected Paschal New Moon.
    pub jj_nm: JulianDay,
    pub moved_to_next_lunation: bool,
    pub z_a: DayOfYear,
    pub c: i64,
    pub u: i64,
    pub m_ac: i64,
    pub z_p: DayOfYear,
    pub easter: CalendarDate,
}

impl PaschalContext {
    /// `(JJ_NM + 14) − JJ_e` for the lunation the Paschal test was applied
    /// to. Small magnitudes mean the lunation choice is fragile.
    pub fn selection_margin(&self) -> f64 {
        self.first_new_moon.value() + PASCHAL_AGE_DAYS - self.jj_e.value()
    }
}

/// Ordinal day of `year` containing the instant `jd`: `floor(jd − JJ_1J) + 1`.
pub fn day_of_year_of(jd: JulianDay, year: i32) -> Result<DayOfYear> {
    let jj_1j = CalendarDate::gregorian(year, 1, 1)?.jd();
    let z = jd.days_since(jj_1j).floor() as i64 + 1;
    let z = u32::try_from(z)
        .map_err(|_| Error::InvalidArgument(format!("JD {jd} precedes 1 January {year}")))?;
    DayOfYear::new(z, year)
}

/// Day of the year of the Paschal New Moon. It must fall on or after 1 March.
pub fn paschal_day_of_year(jj_nm: JulianDay, year: i32) -> Result<DayOfYear> {
    let z_a = day_of_year_of(jj_nm, year)
        .map_err(|e| Error::Internal(format!("Paschal New Moon outside {year}: {e}")))?;
    if z_a.value() < 60 {
        return Err(Error::Internal(format!(
            "Paschal New Moon on day {} of {year}, before 1 March",
            z_a.value()
        )));
    }
    Ok(z_a)
}

/// Weekday index of the year, 1–7; one less in leap years, so it may be 0.
/// Only its residue modulo 7 is ever used.
pub fn catholic_hand(year: i32, nf: LeapIndicator) -> i64 {
    let (c, u) = century_split(year);
    let hand = (u + u.div_euclid(4) + c.div_euclid(4) - 2 * c).rem_euclid(7) + 1;
    hand - i64::from(nf)
}

fn century_split(year: i32) -> (i64, i64) {
    let m = i64::from(year);
    (m.div_euclid(100), m.rem_euclid(100))
}

/// `j + [2 − j − m_ac]_7`: the first Sunday on or after day `j`, where
/// `m_ac` is the year's [`catholic_hand`].
pub fn next_sunday_on_or_after_offset(j: u32, m_ac: i64) -> u32 {
    let j = i64::from(j);
    let offset = euclidean_mod(2 - j - m_ac, 7).expect("positive modulus");
    (j + offset) as u32
}

pub fn paschal_context(year: i32) -> Result<PaschalContext> {
    check_supported_year(year)?;
    let nf = leap_indicator(year);
    let jj_0 = date_to_jd(&CalendarDate::gregorian(year, 3, 21)?, 0.0)?;
    let jj_1j = date_to_jd(&CalendarDate::gregorian(year, 1, 1)?, 0.0)?;
    let jj_e = find_vernal_equinox(year)?;

    let f = march_fraction(nf);
    let k = first_lunation_after_march(year, f);
    let first_new_moon = mean_new_moon(k);
    let jj_nm = paschal_new_moon(first_new_moon, jj_e);

    let z_a = paschal_day_of_year(jj_nm, year)?;
    let (c, u) = century_split(year);
    let m_ac = catholic_hand(year, nf);
    let z_p = next_sunday_on_or_after_offset(z_a.value() + PASCHAL_AGE_DAYS as u32, m_ac);
    let z_p = DayOfYear::new(z_p, year)?;
    let easter = day_of_year_to_date(z_p, year)?;

    Ok(PaschalContext {
        year,
        jj_0,
        jj_1j,
        jj_e,
        longitude_at_equinox: wrapped_true_longitude(jj_e),
        nf,
        f,
        k,
        first_new_moon,
        jj_nm,
        moved_to_next_lunation: jj_nm != first_new_moon,
        z_a,
        c,
        u,
        m_ac,
        z_p,
        easter,
    })
}

pub fn astronomical_easter(year: i32) -> Result<CalendarDate> {
    paschal_context(year).map(|ctx| ctx.easter)
}
