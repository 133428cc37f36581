//! Easter dates three ways.
//!
//! * **Astronomical**: the first Sunday on or after the 14th day of the mean
//!   lunation whose 14th day does not precede the true vernal equinox. The
//!   equinox comes from a truncated Newcomb solar series solved by
//!   bisection; the New Moon is the mean phase.
//! * **Catholic**: the Gregorian computus.
//! * **Orthodox**: the Julian computus, converted to the Gregorian calendar.
//!
//! ```
//! use easter_core::{astronomical_easter, catholic_easter, orthodox_easter};
//!
//! let astro = astronomical_easter(1994).unwrap();
//! assert_eq!(astro.day_month(), "27 March");
//! assert_eq!(catholic_easter(1994).unwrap().day_month(), "3 April");
//! assert_eq!(orthodox_easter(1994).unwrap().day_month(), "1 May");
//! ```

pub mod astronomical;
pub mod calendar;
pub mod computus;
pub mod error;
pub mod golden;
pub mod lunar;
pub mod report;
pub mod solar;

pub use astronomical::{astronomical_easter, paschal_context, PaschalContext};
pub use calendar::{CalendarDate, CalendarSystem, JulianDay, SUPPORTED_YEARS};
pub use computus::{catholic_easter, easter_result, orthodox_easter, EasterResult};
pub use error::{Error, Result};
pub use solar::find_vernal_equinox;
