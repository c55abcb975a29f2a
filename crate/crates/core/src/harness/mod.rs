//! Configuration files, built-in presets, the verification suite and file
//! output for the command line tool.

pub mod config;
pub mod io;
pub mod presets;
pub mod verify;

pub use config::{load_config, Config, HSpec, Normalization};
pub use presets::{all_presets, preset, PRESET_NAMES};
pub use verify::{
    random_element, random_state, run_verify, CheckResult, Family, Fault, Samples, Status, VerificationReport,
    VerifyOptions,
};
