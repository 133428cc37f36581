//! Mean New Moon after 1 March and selection of the Paschal lunation.

use crate::calendar::{JulianDay, LeapIndicator};

/// Mean synodic month in days.
pub const SYNODIC_MONTH: f64 = 29.530_588_68;
/// Mean New Moon of lunation 0 (early January 1900).
pub const NEW_MOON_EPOCH_JD: f64 = 2_415_020.759_33;
/// Mean lunations per year used to count from 1900.
pub const LUNATIONS_PER_YEAR: f64 = 12.3685;
/// Age of the Moon, in days, that the Paschal lunation must reach on or
/// after the equinox.
pub const PASCHAL_AGE_DAYS: f64 = 14.0;

/// Fraction of the year elapsed at 1 March 0h.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct YearFraction(pub f64);

/// Lunation count from the 1900 epoch. Negative before 1900.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LunationIndex(pub i64);

pub fn march_fraction(nf: LeapIndicator) -> YearFraction {
    let nf = f64::from(nf.value());
    YearFraction((59.0 + nf) / (365.0 + nf))
}

/// Index of the first mean New Moon after 1 March of `year`.
///
/// The integer part is taken with `floor`, which matters only for years
/// before 1900 where the product is negative.
pub fn first_lunation_after_march(year: i32, f: YearFraction) -> LunationIndex {
    let lunations = (f64::from(year) + f.0 - 1900.0) * LUNATIONS_PER_YEAR;
    LunationIndex(lunations.floor() as i64 + 1)
}

pub fn mean_new_moon(k: LunationIndex) -> JulianDay {
    JulianDay::unchecked(NEW_MOON_EPOCH_JD + SYNODIC_MONTH * k.0 as f64)
}

/// Keep `jj_nm` if its 14th day is not before the equinox, otherwise move
/// to the next lunation.
pub fn paschal_new_moon(jj_nm: JulianDay, jj_e: JulianDay) -> JulianDay {
    if jj_nm.value() + PASCHAL_AGE_DAYS >= jj_e.value() {
        jj_nm
    } else {
        jj_nm.shifted(SYNODIC_MONTH)
    }
}
