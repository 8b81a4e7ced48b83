#![no_main]

use libfuzzer_sys::fuzz_target;
use permpoly::graph6::decode_lines;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    // File-level iteration must never panic and line numbers stay 1-based
    // and increasing.
    let mut last = 0usize;
    for (line, _result) in decode_lines(s) {
        assert!(line > last);
        last = line;
    }
});
