//! Truncated Newcomb series for the Sun and the vernal equinox search.

use crate::calendar::{check_supported_year, date_to_jd, CalendarDate, JulianDay};
use crate::error::{Error, Result};

/// Epoch of the series, 1900 January 0.5.
pub const EPOCH_JD: f64 = 2_415_020.0;
pub const DAYS_PER_CENTURY: f64 = 36_525.0;

/// Half-width of the equinox search window around 21 March 0h.
pub const EQUINOX_BRACKET_DAYS: f64 = 5.0;
/// Bisection stops once the bracket is at most this wide.
pub const EQUINOX_TOLERANCE_DAYS: f64 = 1e-6;

/// Julian centuries elapsed since [`EPOCH_JD`].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CenturiesT(pub f64);

pub fn centuries_from_jd(jd: JulianDay) -> CenturiesT {
    CenturiesT((jd.value() - EPOCH_JD) / DAYS_PER_CENTURY)
}

/// Solar angles in degrees at one instant. Not reduced modulo 360.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolarAngles {
    pub mean_longitude: f64,
    pub mean_anomaly: f64,
    /// Equation of the center.
    pub center: f64,
    pub true_longitude: f64,
}

pub fn solar_angles(t: CenturiesT) -> SolarAngles {
    let t = t.0;
    let t2 = t * t;
    let t3 = t2 * t;

    let mean_longitude = 279.69668 + 36000.76892 * t + 0.000_302_5 * t2;
    let mean_anomaly = 358.47583 + 35999.04975 * t - 0.000_150 * t2 - 0.000_003_3 * t3;

    let m = mean_anomaly.rem_euclid(360.0).to_radians();
    let center = (1.919_460 - 0.004_789 * t - 0.000_014 * t2) * m.sin()
        + (0.020_094 - 0.000_1 * t) * (2.0 * m).sin()
        + 0.000_293 * (3.0 * m).sin();

    SolarAngles {
        mean_longitude,
        mean_anomaly,
        center,
        true_longitude: mean_longitude + center,
    }
}

/// Reduce an angle to `(-180, 180]` degrees.
pub fn wrap_degrees(angle: f64) -> f64 {
    let r = angle.rem_euclid(360.0);
    if r > 180.0 {
        r - 360.0
    } else {
        r
    }
}

/// True longitude at `jd`, wrapped so that it crosses zero at the equinox.
pub fn wrapped_true_longitude(jd: JulianDay) -> f64 {
    wrap_degrees(solar_angles(centuries_from_jd(jd)).true_longitude)
}

/// Final state of a bisection search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bisection {
    pub lo: f64,
    pub hi: f64,
    pub root: f64,
    pub iterations: u32,
}

impl Bisection {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Bisection on `[lo, hi]` for an increasing sign change of `g`.
///
/// Needs `g(lo) <= 0 <= g(hi)`. Halves until the bracket is no wider than
/// `tolerance` and returns its midpoint.
pub fn bisect<G>(g: G, mut lo: f64, mut hi: f64, tolerance: f64) -> Result<Bisection>
where
    G: Fn(f64) -> f64,
{
    let (g_lo, g_hi) = (g(lo), g(hi));
    if !(g_lo <= 0.0 && g_hi >= 0.0) {
        return Err(Error::Bracket { lo, hi, g_lo, g_hi });
    }
    let mut iterations = 0;
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(Bisection {
        lo,
        hi,
        root: 0.5 * (lo + hi),
        iterations,
    })
}

/// Bisection state of the equinox search for `year`.
pub fn vernal_equinox_search(year: i32) -> Result<Bisection> {
    check_supported_year(year)?;
    let jj0 = date_to_jd(&CalendarDate::gregorian(year, 3, 21)?, 0.0)?.value();
    let g = |jd: f64| wrapped_true_longitude(JulianDay::new(jd).expect("bracket inside JD range"));
    bisect(
        g,
        jj0 - EQUINOX_BRACKET_DAYS,
        jj0 + EQUINOX_BRACKET_DAYS,
        EQUINOX_TOLERANCE_DAYS,
    )
    .map_err(|e| Error::Internal(format!("equinox search for {year}: {e}")))
}

/// Instant when the Sun's true longitude crosses 0° near 21 March.
pub fn find_vernal_equinox(year: i32) -> Result<JulianDay> {
    JulianDay::new(vernal_equinox_search(year)?.root)
}
