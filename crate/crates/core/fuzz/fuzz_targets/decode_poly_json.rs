#![no_main]

use libfuzzer_sys::fuzz_target;
use spincc_core::{Format, Poly, QPoly};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Poly::from_json_str(text) {
        assert_eq!(Poly::from_json_str(&p.render(Format::Json)).unwrap(), p);
    }
    let _ = QPoly::from_json_str(text);
});
