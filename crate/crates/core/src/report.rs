//! Range evaluation, discrepancy statistics and the text renderings used by
//! the command-line tool.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::astronomical::PaschalContext;
use crate::calendar::{check_supported_year, jd_to_date, CalendarSystem, JulianDay};
use crate::computus::{easter_result, EasterResult};
use crate::error::{Error, Result};

/// Header shared by the CSV output and the reference fixture.
pub const CSV_HEADER: &str = "year,orthodox,catholic,astronomical";

/// `|(JJ_NM + 14) − JJ_e|` below this is reported as near the boundary.
pub const NEAR_BOUNDARY_DAYS: f64 = 0.05;

/// Easter results for every year of `from..=to`, in ascending order.
pub fn easter_results(from: i32, to: i32) -> Result<Vec<EasterResult>> {
    check_supported_year(from)?;
    check_supported_year(to)?;
    if from > to {
        return Err(Error::InvalidArgument(format!(
            "range start {from} is after range end {to}"
        )));
    }
    (from..=to).map(easter_result).collect()
}

/// Histogram of astronomical-minus-catholic day differences.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ComparisonStats {
    pub total_years: usize,
    pub differing_years: usize,
    pub histogram: BTreeMap<i64, usize>,
}

impl ComparisonStats {
    pub fn count(&self, difference: i64) -> usize {
        self.histogram.get(&difference).copied().unwrap_or(0)
    }

    /// Share of all years, in tenths of a percent, rounded half up.
    pub fn permille(&self, count: usize) -> u64 {
        percent_tenths(count, self.total_years)
    }

    /// `(difference, count, tenths of a percent)` in ascending difference.
    pub fn percentages(&self) -> Vec<(i64, usize, u64)> {
        self.histogram
            .iter()
            .map(|(&diff, &count)| (diff, count, self.permille(count)))
            .collect()
    }
}

/// `count / total` as tenths of a percent, rounded half up.
pub fn percent_tenths(count: usize, total: usize) -> u64 {
    if total == 0 {
        return 0;
    }
    let (count, total) = (count as u64, total as u64);
    (2000 * count + total) / (2 * total)
}

/// `356` → `35.6%`.
pub fn format_percent(tenths: u64) -> String {
    format!("{}.{}%", tenths / 10, tenths % 10)
}

pub fn comparison_stats(results: &[EasterResult]) -> ComparisonStats {
    let mut histogram = BTreeMap::new();
    for r in results {
        *histogram.entry(r.astro_minus_catholic_days).or_insert(0) += 1;
    }
    let total_years = results.len();
    let agreeing = histogram.get(&0).copied().unwrap_or(0);
    ComparisonStats {
        total_years,
        differing_years: total_years - agreeing,
        histogram,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RangeFormat {
    Table,
    Csv,
}

pub fn csv_row(r: &EasterResult) -> String {
    format!(
        "{},{},{},{}",
        r.year, r.orthodox, r.catholic, r.astronomical
    )
}

pub fn format_range(results: &[EasterResult], format: RangeFormat) -> String {
    let mut out = String::new();
    match format {
        RangeFormat::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in results {
                out.push_str(&csv_row(r));
                out.push('\n');
            }
        }
        RangeFormat::Table => {
            let _ = writeln!(
                out,
                "{:<6}{:<12}{:<12}ASTRONOMIC",
                "YEAR", "ORTHODOX", "CATHOLIC"
            );
            for r in results {
                let _ = writeln!(
                    out,
                    "{:<6}{:<12}{:<12}{}",
                    r.year,
                    r.orthodox.day_month(),
                    r.catholic.day_month(),
                    r.astronomical.day_month()
                );
            }
        }
    }
    out
}

pub fn format_stats(from: i32, to: i32, stats: &ComparisonStats) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "years {from}–{to}: {}", stats.total_years);
    let _ = writeln!(
        out,
        "differing (astronomical vs catholic): {} ({})",
        stats.differing_years,
        format_percent(stats.permille(stats.differing_years))
    );
    let _ = writeln!(out, "astronomical minus catholic, days:");
    for (diff, count, tenths) in stats.percentages() {
        let key = if diff == 0 {
            "0".to_string()
        } else {
            format!("{diff:+}")
        };
        let _ = writeln!(out, "  {key:>4}: {count} ({})", format_percent(tenths));
    }
    out
}

/// `20 March 21:00 UT` for the civil (Gregorian) day containing `jd`.
pub fn describe_instant(jd: JulianDay) -> String {
    match jd_to_date(jd, CalendarSystem::Gregorian) {
        Ok((date, fraction)) => {
            let minutes = (fraction * 1440.0).round() as u32;
            // 23:59.5 and later rounds into the next day; clamp to keep the date.
            let minutes = minutes.min(1439);
            format!(
                "{} {:02}:{:02} UT",
                date.day_month(),
                minutes / 60,
                minutes % 60
            )
        }
        Err(_) => format!("JD {jd}"),
    }
}

/// Report for one year. With `trace`, the Paschal computation is listed step
/// by step after the three dates.
pub fn format_year_report(result: &EasterResult, trace: Option<&PaschalContext>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Easter {}", result.year);
    let _ = writeln!(out, "  orthodox      {}", result.orthodox.day_month());
    let _ = writeln!(out, "  catholic      {}", result.catholic.day_month());
    let _ = writeln!(out, "  astronomical  {}", result.astronomical.day_month());
    let _ = writeln!(
        out,
        "  astronomical − catholic: {:+} days, astronomical − orthodox: {:+} days",
        result.astro_minus_catholic_days, result.astro_minus_orthodox_days
    );

    let Some(ctx) = trace else {
        return out;
    };
    let _ = writeln!(out, "trace:");
    let _ = writeln!(out, "  JJ_0={:.1}", ctx.jj_0.value());
    let _ = writeln!(out, "  JJ_1J={:.1}", ctx.jj_1j.value());
    let _ = writeln!(
        out,
        "  JJ_e={:.6} ({}), TL={:.1e}",
        ctx.jj_e.value(),
        describe_instant(ctx.jj_e),
        ctx.longitude_at_equinox
    );
    let _ = writeln!(out, "  nf={}", ctx.nf.value());
    let _ = writeln!(out, "  f={:.7}", ctx.f.0);
    let _ = writeln!(out, "  k={}", ctx.k.0);
    let _ = writeln!(
        out,
        "  JJ_NM={:.5} ({})",
        ctx.first_new_moon.value(),
        describe_instant(ctx.first_new_moon)
    );
    let margin = ctx.selection_margin();
    let _ = writeln!(out, "  JJ_NM+14-JJ_e={margin:.5}");
    if ctx.moved_to_next_lunation {
        let _ = writeln!(
            out,
            "  14th day precedes the equinox; next lunation JJ_NM={:.5} ({})",
            ctx.jj_nm.value(),
            describe_instant(ctx.jj_nm)
        );
    }
    if margin.abs() < NEAR_BOUNDARY_DAYS {
        let _ = writeln!(
            out,
            "  warning: 14th day within {NEAR_BOUNDARY_DAYS} day of the equinox; lunation choice is sensitive"
        );
    }
    let _ = writeln!(out, "  z_a={}", ctx.z_a.value());
    let _ = writeln!(out, "  c={} u={}", ctx.c, ctx.u);
    let _ = writeln!(out, "  m_ac={}", ctx.m_ac);
    let _ = writeln!(out, "  z_p={}", ctx.z_p.value());
    let _ = writeln!(out, "  astronomical Easter: {}", ctx.easter.day_month());
    out
}
