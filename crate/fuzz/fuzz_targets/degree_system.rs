#![no_main]

use libfuzzer_sys::fuzz_target;
use permpoly::graph::MatrixKind;
use permpoly::invariants::{solve_degree_system, InvariantReport};

fuzz_target!(|data: &[u8]| {
    if data.len() < 6 {
        return;
    }
    // Small fabricated reports: the solver must terminate and everything it
    // returns must actually satisfy all four constraints.
    let n = 1 + (data[0] as usize) % 10;
    let m = (u16::from_le_bytes([data[1], data[2]]) % 64) as i64;
    let sum_d2 = (data[3] as i64) * 2;
    let cubic = (data[4] as i64) * 4 - 256;
    let kind = if data[5] & 1 == 0 {
        MatrixKind::Laplacian
    } else {
        MatrixKind::Signless
    };
    let report = InvariantReport {
        n,
        m,
        sum_d2,
        cubic,
        kind,
        t_known: None,
    };
    for sol in solve_degree_system(&report) {
        assert!(sol.t >= 0);
        assert_eq!(sol.k.len(), n);
        assert_eq!(sol.k.iter().sum::<i64>(), n as i64);
        let s1: i64 = sol.k.iter().enumerate().map(|(i, &c)| i as i64 * c).sum();
        assert_eq!(s1, 2 * m);
        let s2: i64 = sol
            .k
            .iter()
            .enumerate()
            .map(|(i, &c)| (i * i) as i64 * c)
            .sum();
        assert_eq!(s2, sum_d2);
        let s3: i64 = sol
            .k
            .iter()
            .enumerate()
            .map(|(i, &c)| (i * i * i) as i64 * c)
            .sum();
        match kind {
            MatrixKind::Laplacian => assert_eq!(-6 * sol.t + s3, cubic),
            MatrixKind::Signless => assert_eq!(6 * sol.t + s3, cubic),
        }
    }
});
