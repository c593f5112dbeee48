//! Closed-form Haar averages, evaluated in exact rational arithmetic.

mod exact;
mod leading;
mod scenario;
mod weingarten;

pub use exact::exact_average_y;
pub use leading::{leading_average_y, LeadingValue, UNRELIABLE_CORRECTION};
pub use scenario::{Scenario, ScenarioDims};
pub use weingarten::{to_f64, weingarten1, weingarten2, weingarten4, Rational};
