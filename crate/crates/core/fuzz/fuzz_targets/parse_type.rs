#![no_main]

use libfuzzer_sys::fuzz_target;
use renner_core::parse::parse_type;

fuzz_target!(|data: &str| {
    if let Ok(cartan) = parse_type(data) {
        let again = parse_type(&cartan.to_string()).unwrap();
        assert_eq!(again, cartan);
    }
});
