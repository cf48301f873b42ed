#![no_main]

use libfuzzer_sys::fuzz_target;
use renner_core::parse::{parse_index_list, parse_j0, parse_weight, MAX_WEIGHT_COORD};

fuzz_target!(|data: &str| {
    if let Ok(list) = parse_index_list(data) {
        let rank = list.len();
        if let Ok(w) = parse_weight(data, rank) {
            assert!(w.coords().iter().all(|&c| c >= 0 && c as u64 <= MAX_WEIGHT_COORD));
        }
    }
    for rank in [1, 4, 8] {
        if let Ok(j0) = parse_j0(data, rank) {
            assert!(j0.iter().all(|i| i < rank));
        }
    }
});
