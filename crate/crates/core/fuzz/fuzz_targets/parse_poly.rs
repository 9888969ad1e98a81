#![no_main]

use libfuzzer_sys::fuzz_target;
use spincc_core::{Format, Poly, QPoly, RingSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let ring = RingSpec::new([("w2", 2), ("w3", 3), ("y", 2), ("c1", 2), ("c2", 4), ("q1", 4)], 0).unwrap();
    if let Ok(p) = Poly::parse(&ring, text) {
        assert_eq!(Poly::parse(&ring, &p.render(Format::Plain)).unwrap(), p);
    }
    if let Ok(q) = QPoly::parse(&ring, text) {
        assert_eq!(QPoly::parse(&ring, &q.render(Format::Plain)).unwrap(), q);
    }
    let mod2 = ring.with_modulus(2).unwrap();
    let _ = Poly::parse(&mod2, text);
});
