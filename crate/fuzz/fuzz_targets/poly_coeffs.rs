#![no_main]

use libfuzzer_sys::fuzz_target;
use permpoly::graph::MatrixKind;
use permpoly::invariants::poly_invariants;
use permpoly::poly::IntPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if s.len() > 4096 {
        return;
    }
    // The CLI's coefficient-list input path: parse, normalize, invert.
    let Ok(coeffs) = s
        .split(',')
        .map(|c| c.trim().parse::<num_bigint::BigInt>())
        .collect::<Result<Vec<_>, _>>()
    else {
        return;
    };
    let p = IntPoly::from_coeffs(coeffs);
    // re-normalizing a canonical polynomial is the identity
    assert_eq!(IntPoly::from_coeffs(p.coeffs().to_vec()), p);
    // inversion may reject the polynomial but must never panic
    let _ = poly_invariants(&p, MatrixKind::Laplacian);
    let _ = poly_invariants(&p, MatrixKind::Signless);
});
