#![no_main]

use libfuzzer_sys::fuzz_target;
use renner_core::partialinj::PartialInjection;

fuzz_target!(|data: &[u8]| {
    let Some((&degree, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(sigma) = PartialInjection::from_json(text, degree as usize) {
        let back = PartialInjection::from_json(&sigma.to_json(), degree as usize).unwrap();
        assert_eq!(back, sigma);
        assert_eq!(sigma.compose(&sigma.inverse()).compose(&sigma), sigma);
    }
});
