//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function is a thin wrapper over a plain Rust function so the
//! logic can be tested natively.

use easter_core::calendar::{date_to_jd, CalendarDate};
use easter_core::report::{easter_results, format_year_report};
use easter_core::solar::wrapped_true_longitude;
use easter_core::{easter_result, find_vernal_equinox, paschal_context, Result};
use wasm_bindgen::prelude::*;

/// Everything the year explorer shows.
#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone)]
pub struct YearReport {
    pub orthodox: String,
    pub catholic: String,
    pub astronomical: String,
    pub astro_minus_catholic: i32,
    pub trace: String,
}

/// Wrapped solar longitude sampled around 21 March 0h UT.
#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone)]
pub struct LongitudeCurve {
    /// Days from 21 March 0h.
    pub offsets: Vec<f64>,
    /// Degrees in (−180, 180].
    pub longitudes: Vec<f64>,
    pub equinox_offset: f64,
    pub equinox_label: String,
}

pub fn year_report(year: i32) -> Result<YearReport> {
    let result = easter_result(year)?;
    let ctx = paschal_context(year)?;
    Ok(YearReport {
        orthodox: result.orthodox.to_string(),
        catholic: result.catholic.to_string(),
        astronomical: result.astronomical.to_string(),
        astro_minus_catholic: result.astro_minus_catholic_days as i32,
        trace: format_year_report(&result, Some(&ctx)),
    })
}

pub fn astro_minus_catholic(from: i32, to: i32) -> Result<Vec<i32>> {
    Ok(easter_results(from, to)?
        .iter()
        .map(|r| r.astro_minus_catholic_days as i32)
        .collect())
}

pub fn longitude_curve(year: i32, half_width_days: f64, samples: u32) -> Result<LongitudeCurve> {
    let anchor = date_to_jd(&CalendarDate::gregorian(year, 3, 21)?, 0.0)?;
    let equinox = find_vernal_equinox(year)?;
    let samples = samples.clamp(2, 2000);
    let half = half_width_days.clamp(0.1, 5.0);
    let step = 2.0 * half / f64::from(samples - 1);
    let offsets: Vec<f64> = (0..samples).map(|i| -half + step * f64::from(i)).collect();
    let longitudes = offsets
        .iter()
        .map(|&d| wrapped_true_longitude(anchor.shifted(d)))
        .collect();
    Ok(LongitudeCurve {
        offsets,
        longitudes,
        equinox_offset: equinox.days_since(anchor),
        equinox_label: easter_core::report::describe_instant(equinox),
    })
}

fn js_err(e: easter_core::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen(js_name = yearReport)]
pub fn year_report_js(year: i32) -> std::result::Result<YearReport, JsError> {
    year_report(year).map_err(js_err)
}

#[wasm_bindgen(js_name = astroMinusCatholic)]
pub fn astro_minus_catholic_js(from: i32, to: i32) -> std::result::Result<Vec<i32>, JsError> {
    astro_minus_catholic(from, to).map_err(js_err)
}

#[wasm_bindgen(js_name = longitudeCurve)]
pub fn longitude_curve_js(
    year: i32,
    half_width_days: f64,
    samples: u32,
) -> std::result::Result<LongitudeCurve, JsError> {
    longitude_curve(year, half_width_days, samples).map_err(js_err)
}
