#![no_main]

use libfuzzer_sys::fuzz_target;
use spincc_core::geometry::{parse_char_numbers, class_ring, Classes};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let ring = class_ring(Classes::Q, 3, None).unwrap();
    let _ = parse_char_numbers(&ring, text, 12);
});
