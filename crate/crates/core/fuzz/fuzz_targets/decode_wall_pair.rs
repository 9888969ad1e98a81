#![no_main]

use libfuzzer_sys::fuzz_target;
use spincc_core::geometry::{wall_classify, WallPair};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(pairs) = WallPair::batch_from_json_str(text) {
        for pair in &pairs {
            let _ = wall_classify(pair);
        }
    }
});
