//! Acceptance checks. One line per criterion; exits nonzero if any fails.
//!
//! Run with `cargo test -p easter-cli --test acceptance`.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use easter_core::astronomical::paschal_context;
use easter_core::calendar::{
    date_to_jd, day_of_week, euclidean_mod, jd_to_date, leap_indicator, CalendarDate,
    CalendarSystem,
};
use easter_core::golden::{parse_fixture, verify_rows, Method, REFERENCE_FIXTURE};
use easter_core::{catholic_easter, find_vernal_equinox, orthodox_easter, SUPPORTED_YEARS};

const KNIFE_EDGE_DAYS: f64 = 0.01;
const MAX_KNIFE_EDGE_YEARS: usize = 2;

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            pass,
            detail: detail.into(),
        }
    }
}

fn easter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_easter"))
        .args(args)
        .output()
        .expect("spawn easter")
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

fn greg(y: i32, m: u32, d: u32) -> CalendarDate {
    CalendarDate::gregorian(y, m, d).unwrap()
}

fn classical_columns() -> Verdict {
    let start = Instant::now();
    let rows = parse_fixture(REFERENCE_FIXTURE).unwrap();
    let report = verify_rows(&rows);
    let elapsed = start.elapsed();
    let bad = report
        .mismatches
        .iter()
        .filter(|m| m.method != Method::Astronomical)
        .count();
    let total = rows.len() * 2;
    let matched = total - bad;
    Verdict::new(
        matched == 202 && total == 202 && elapsed < Duration::from_secs(1),
        format!("{matched}/{total} orthodox+catholic cells, {elapsed:.2?}"),
    )
}

fn astronomical_column() -> Verdict {
    let rows = parse_fixture(REFERENCE_FIXTURE).unwrap();
    let report = verify_rows(&rows);
    let astro: Vec<_> = report
        .mismatches
        .iter()
        .filter(|m| m.method == Method::Astronomical)
        .collect();
    let matched = rows.len() - astro.len();
    let mut knife_edge = 0;
    let mut outside = Vec::new();
    for m in &astro {
        let margin = paschal_context(m.year).unwrap().selection_margin();
        if margin.abs() < KNIFE_EDGE_DAYS {
            knife_edge += 1;
        } else {
            outside.push(format!("{} ({margin:+.2} d)", m.year));
        }
    }
    let pass = outside.is_empty() && knife_edge <= MAX_KNIFE_EDGE_YEARS;
    let mut detail = format!("{matched}/{} astronomical cells", rows.len());
    if !astro.is_empty() {
        detail.push_str(&format!(", {knife_edge} knife-edge"));
    }
    if !outside.is_empty() {
        detail.push_str(&format!(", not knife-edge: {}", outside.join(", ")));
    }
    Verdict::new(pass, detail)
}

fn trace_field(trace: &str, key: &str) -> Option<String> {
    let rest = trace
        .split_whitespace()
        .find_map(|token| token.strip_prefix(key)?.strip_prefix('='))?;
    let end = rest
        .find(|c: char| !(c.is_ascii_digit() || c == '.' || c == '-'))
        .unwrap_or(rest.len());
    Some(rest[..end].to_string())
}

fn worked_example_1994() -> Verdict {
    let ctx = paschal_context(1994).unwrap();
    let mut failures = Vec::new();
    let mut check = |name: &str, ok: bool, shown: String| {
        if !ok {
            failures.push(format!("{name}={shown}"));
        }
    };
    check("nf", ctx.nf.value() == 0, ctx.nf.value().to_string());
    check(
        "f",
        (ctx.f.0 - 0.161_643_8).abs() <= 1e-7,
        format!("{:.8}", ctx.f.0),
    );
    check("k", ctx.k.0 == 1165, ctx.k.0.to_string());
    check(
        "JJ_NM",
        (ctx.jj_nm.value() - 2_449_423.895).abs() <= 0.001,
        format!("{:.5}", ctx.jj_nm.value()),
    );
    check(
        "JJ_e",
        (ctx.jj_e.value() - 2_449_432.375).abs() <= 0.02,
        format!(
            "{:.5} (off by {:.4})",
            ctx.jj_e.value(),
            ctx.jj_e.value() - 2_449_432.375
        ),
    );
    check("z_a", ctx.z_a.value() == 71, ctx.z_a.value().to_string());
    check("m_ac", ctx.m_ac == 7, ctx.m_ac.to_string());
    check("z_p", ctx.z_p.value() == 86, ctx.z_p.value().to_string());
    check(
        "date",
        ctx.easter == greg(1994, 3, 27),
        ctx.easter.to_string(),
    );

    // The CLI trace must show the same numbers.
    let out = easter(&["year", "1994", "--trace"]);
    let trace = text(&out.stdout);
    let num = |k: &str| trace_field(&trace, k).and_then(|v| v.parse::<f64>().ok());
    let cli_ok = out.status.code() == Some(0)
        && num("nf") == Some(0.0)
        && num("k") == Some(1165.0)
        && num("z_a") == Some(71.0)
        && num("m_ac") == Some(7.0)
        && num("z_p") == Some(86.0)
        && num("f").is_some_and(|f| (f - 0.161_643_8).abs() <= 1e-7)
        && num("JJ_NM").is_some_and(|v| (v - ctx.first_new_moon.value()).abs() <= 1e-5)
        && num("JJ_e").is_some_and(|v| (v - ctx.jj_e.value()).abs() <= 1e-6)
        && trace.contains("astronomical Easter: 27 March");
    if !cli_ok {
        failures.push("CLI trace disagrees".to_string());
    }

    if failures.is_empty() {
        Verdict::new(true, "1994 trace within tolerance, 27 March")
    } else {
        Verdict::new(
            false,
            format!("1994 out of tolerance: {}", failures.join(", ")),
        )
    }
}

/// `(count, percentage)` as printed.
type Cell = (usize, String);

fn parse_stats(out: &str) -> (Option<Cell>, BTreeMap<i64, Cell>) {
    let mut differing = None;
    let mut histogram = BTreeMap::new();
    for line in out.lines() {
        let Some((key, value)) = line.trim().rsplit_once(": ") else {
            continue;
        };
        let mut parts = value.split_whitespace();
        let (Some(count), Some(pct)) = (parts.next(), parts.next()) else {
            continue;
        };
        let Ok(count) = count.parse::<usize>() else {
            continue;
        };
        let pct = pct.trim_matches(|c| c == '(' || c == ')').to_string();
        if key.starts_with("differing") {
            differing = Some((count, pct));
        } else if let Ok(diff) = key.parse::<i64>() {
            histogram.insert(diff, (count, pct));
        }
    }
    (differing, histogram)
}

fn statistics_1950_2050() -> Verdict {
    let out = easter(&["stats", "--from", "1950", "--to", "2050"]);
    let (differing, histogram) = parse_stats(&text(&out.stdout));
    let keys: Vec<i64> = histogram.keys().copied().collect();
    let get = |k: i64| histogram.get(&k).cloned();
    let pass = out.status.code() == Some(0)
        && differing == Some((36, "35.6%".to_string()))
        && keys == [-7, 0, 28]
        && get(-7) == Some((21, "20.8%".to_string()))
        && get(28) == Some((15, "14.8%".to_string()))
        && get(0).map(|(c, _)| c) == Some(65);
    let shown: Vec<String> = histogram
        .iter()
        .map(|(k, (c, p))| match k {
            0 => format!("0: {c} ({p})"),
            _ => format!("{k:+}: {c} ({p})"),
        })
        .collect();
    let differing = differing.map_or("?".to_string(), |(c, p)| format!("{c} ({p})"));
    Verdict::new(
        pass,
        format!("differing {differing}, histogram {{{}}}", shown.join(", ")),
    )
}

fn property_suite() -> Verdict {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    let mut fail = |msg: String| {
        if failures.len() < 5 {
            failures.push(msg);
        }
    };

    for y in SUPPORTED_YEARS {
        let ctx = paschal_context(y).unwrap();
        let dates = [
            ("astronomical", ctx.easter),
            ("catholic", catholic_easter(y).unwrap()),
            ("orthodox", orthodox_easter(y).unwrap()),
        ];
        for (name, d) in dates {
            if day_of_week(d.jd()) != 0 {
                fail(format!("{y} {name} not a Sunday"));
            }
        }
        let gap = ctx.z_p.value() - ctx.z_a.value();
        if !(14..=20).contains(&gap) {
            fail(format!("{y}: z_p - z_a = {gap}"));
        }
        if date_to_jd(&ctx.easter, 0.0).unwrap().value() + 1.0 <= ctx.jj_e.value() {
            fail(format!("{y}: Easter before the equinox"));
        }
    }

    for x in (-50_000i64..50_000).step_by(7) {
        for y in [1, 2, 7, 19, 30, 100, 400] {
            let r = euclidean_mod(x, y).unwrap();
            if !(0..y).contains(&r) || (x - r) % y != 0 {
                fail(format!("[{x}]_{y} = {r}"));
            }
        }
    }

    for y in SUPPORTED_YEARS {
        let rule = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
        if leap_indicator(y).is_leap() != rule || CalendarSystem::Gregorian.is_leap(y) != rule {
            fail(format!("leap rule {y}"));
        }
        for system in [CalendarSystem::Gregorian, CalendarSystem::Julian] {
            for m in 1..=12 {
                for d in 1..=system.days_in_month(y, m) {
                    let date = CalendarDate::new(y, m, d, system).unwrap();
                    let (back, frac) =
                        jd_to_date(date_to_jd(&date, 0.25).unwrap(), system).unwrap();
                    if back != date || (frac - 0.25).abs() > 1e-9 {
                        fail(format!("round trip {date} {system:?}"));
                    }
                }
            }
        }
    }

    let mut prev = None;
    for y in SUPPORTED_YEARS {
        let je = find_vernal_equinox(y).unwrap().value();
        if je < greg(y, 3, 18).jd().value() || je > greg(y, 3, 23).jd().value() {
            fail(format!("{y}: equinox outside 18–23 March"));
        }
        if let Some(p) = prev {
            let spacing: f64 = je - p;
            if (spacing - 365.2422).abs() > 0.02 {
                fail(format!("{y}: equinox spacing {spacing:.4}"));
            }
        }
        prev = Some(je);
    }

    for y in 1900..=2099 {
        let c = catholic_easter(y).unwrap();
        if c < greg(y, 3, 22) || c > greg(y, 4, 25) {
            fail(format!("{y}: catholic {c}"));
        }
        let o = orthodox_easter(y).unwrap();
        if o < greg(y, 4, 4) || o > greg(y, 5, 8) {
            fail(format!("{y}: orthodox {o}"));
        }
    }

    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(30) {
        failures.push(format!("took {elapsed:.1?}"));
    }
    if failures.is_empty() {
        Verdict::new(true, format!("all properties hold, {elapsed:.2?}"))
    } else {
        Verdict::new(false, failures.join("; "))
    }
}

/// Replaces one date in the CSV text with the same date shifted by a week.
fn inject_fault(csv: &str, year: i32, column: usize) -> String {
    csv.lines()
        .map(|line| {
            let mut fields: Vec<String> = line.split(',').map(str::to_string).collect();
            if fields[0] == year.to_string() {
                let ymd: Vec<u32> = fields[column]
                    .split('-')
                    .map(|p| p.parse().unwrap())
                    .collect();
                let jd = greg(year, ymd[1], ymd[2]).jd().shifted(7.0);
                let (date, _) = jd_to_date(jd, CalendarSystem::Gregorian).unwrap();
                fields[column] = date.to_string();
            }
            fields.join(",") + "\n"
        })
        .collect()
}

fn verify_command() -> Verdict {
    let shipped = easter(&["verify"]);
    let shipped_out = text(&shipped.stdout);
    let summary = shipped_out.lines().last().unwrap_or("").to_string();
    let shipped_ok = shipped.status.code() == Some(0) && summary == "303/303 dates match";

    let dir = tempfile::tempdir().unwrap();
    let mut fault_ok = true;
    let mut tried = 0;
    for (year, column) in [(1950, 1), (1994, 2), (2010, 3), (2050, 2)] {
        let faulty = inject_fault(REFERENCE_FIXTURE, year, column);
        let path = dir.path().join(format!("fault_{year}_{column}.csv"));
        std::fs::write(&path, faulty).unwrap();
        let out = easter(&["verify", "--fixture", path.to_str().unwrap()]);
        let named = text(&out.stdout)
            .lines()
            .any(|l| l.starts_with(&format!("{year} ")));
        fault_ok &= out.status.code() == Some(1) && named;
        tried += 1;
    }

    Verdict::new(
        shipped_ok && fault_ok,
        format!(
            "shipped fixture: exit {:?}, {summary}; injected faults: {}",
            shipped.status.code(),
            if fault_ok {
                format!("{tried}/{tried} exit 1 naming the year")
            } else {
                "not all detected".to_string()
            }
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(u8, fn() -> Verdict); 6] = [
        (1, classical_columns),
        (2, astronomical_column),
        (3, worked_example_1994),
        (4, statistics_1950_2050),
        (5, property_suite),
        (6, verify_command),
    ];
    let mut failed = 0;
    for (n, check) in criteria {
        let v = check();
        println!(
            "criterion {n}: {} {}",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
        if !v.pass {
            failed += 1;
        }
    }
    println!(
        "{}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
