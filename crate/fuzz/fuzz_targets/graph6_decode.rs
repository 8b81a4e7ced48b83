#![no_main]

use libfuzzer_sys::fuzz_target;
use permpoly::graph6::{decode, encode, HEADER};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    // Decoding must never panic, and anything that decodes must re-encode
    // to exactly the accepted bytes (minus the optional header).
    if let Ok(g) = decode(s) {
        let canonical = s.strip_prefix(HEADER).unwrap_or(s);
        assert_eq!(encode(&g), canonical);
    }
});
