#![no_main]

use libfuzzer_sys::fuzz_target;
use renner_core::export::MonoidDocument;

fuzz_target!(|data: &str| {
    if let Ok(doc) = MonoidDocument::from_json(data) {
        let back = MonoidDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
    }
});
