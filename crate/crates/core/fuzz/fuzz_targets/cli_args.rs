#![no_main]

use libfuzzer_sys::fuzz_target;
use renner_core::cli::{exit_code, parse_args, JobSpec};

// one argument per line
fuzz_target!(|data: &str| {
    let args = std::iter::once("renner").chain(data.lines());
    if let Ok(cli) = parse_args(args) {
        if let Err(e) = JobSpec::from_cli(&cli) {
            assert_eq!(exit_code(&e), 2);
        }
    }
});
