//! File formats, reports and sweeps on top of `unitop-core`.
//!
//! The `unitop` binary is a thin clap front end over this library; tests
//! drive the same functions directly.

pub mod census;
pub mod error;
pub mod formats;
pub mod output;
pub mod sweep;

pub use error::AppError;

use unitop_core::Limits;

/// Environment variable capping the bytes enumerations may hold.
pub const GUARD_BYTES_VAR: &str = "UNITOP_GUARD_BYTES";

/// Default guards, or none with `unsafe_limits`, plus the byte budget from
/// the environment when set.
pub fn limits_from_env(unsafe_limits: bool) -> Result<Limits, AppError> {
    let base = if unsafe_limits {
        Limits::unbounded()
    } else {
        Limits::DEFAULT
    };
    let bytes = match std::env::var(GUARD_BYTES_VAR) {
        Ok(raw) => Some(raw.trim().parse::<u64>().map_err(|_| {
            AppError::Input(format!("{GUARD_BYTES_VAR} must be a byte count, got `{raw}`"))
        })?),
        Err(std::env::VarError::NotPresent) => None,
        Err(e) => return Err(AppError::Input(format!("{GUARD_BYTES_VAR}: {e}"))),
    };
    Ok(base.with_max_bytes(bytes))
}
