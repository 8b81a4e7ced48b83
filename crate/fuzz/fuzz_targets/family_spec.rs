#![no_main]

use libfuzzer_sys::fuzz_target;
use permpoly::families::FamilySpec;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    // Parsing arbitrary specs and constructing the accepted ones must never
    // panic; construction may return an error but not blow up.
    if let Ok(spec) = FamilySpec::parse(s) {
        if let Ok(g) = spec.construct() {
            assert!(g.n() >= 1 && g.n() <= 64);
        }
        // the rendered form must parse back to the same spec
        let rendered = spec.to_string();
        assert_eq!(FamilySpec::parse(&rendered).unwrap(), spec);
    }
});
