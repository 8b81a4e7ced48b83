//! Published coefficient claims and the errata report that adjudicates them.
//!
//! `stated_claims` instantiates the displayed coefficient formulas for the
//! families that have them (coconut trees, the H tree, length-2 spiders, and
//! the two empty-graph coronas). `errata_report` compares every claim — and
//! every fully displayed polynomial — against the permanent engines and
//! emits one verdict row per coefficient. Where a source displays two
//! variants of a formula, both variants are evaluated against the engine so
//! the report records which one survives. The report is deterministic down
//! to the byte.

use crate::closedforms;
use crate::engines::{psi, Method};
use crate::families::{self, Family, FamilySpec};
use crate::graph::MatrixKind;
use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_traits::Pow;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClaimError {
    #[error("no displayed coefficient claims for family '{0}'")]
    NoClaims(String),
    #[error("no displayed claims for family '{0}' and kind {1}")]
    NoClaimsForKind(String, &'static str),
    #[error("displayed coefficient {coeff} for '{family}' is not integral")]
    NonIntegral { family: String, coeff: String },
}

/// One displayed coefficient: the power it is attached to and its stated
/// value. `stated: None` marks a power the display skips over (its computed
/// value is still reported).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimEntry {
    pub power: usize,
    pub stated: Option<BigInt>,
}

/// The displayed partial expansion for one family instance and kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialClaim {
    pub spec: FamilySpec,
    pub kind: MatrixKind,
    pub entries: Vec<ClaimEntry>,
}

fn exact_div(v: BigInt, d: i64, family: &str, what: &str) -> Result<BigInt, ClaimError> {
    let d = BigInt::from(d);
    if (&v % &d) != BigInt::from(0) {
        return Err(ClaimError::NonIntegral {
            family: family.to_string(),
            coeff: what.to_string(),
        });
    }
    Ok(v / d)
}

fn sign_pow(n: usize) -> BigInt {
    if n.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// The displayed coefficient formulas for a family instance, as printed.
/// Claims exist for coconut trees with path length 3 or 4, the H tree, the
/// length-2 spider, and both empty-graph coronas (Laplacian display only for
/// those two).
pub fn stated_claims(spec: &FamilySpec, kind: MatrixKind) -> Result<PartialClaim, ClaimError> {
    let entry = |power: usize, v: BigInt| ClaimEntry {
        power,
        stated: Some(v),
    };
    let ni = |v: i64| BigInt::from(v);
    let entries: Vec<ClaimEntry> = match (spec.family, spec.params.as_slice()) {
        (Family::Coconut, [3, n]) => {
            let n = *n;
            let x = n as i64;
            vec![
                entry(n + 3, ni(1)),
                entry(n + 2, ni(-(2 * x + 4))),
                entry(
                    n + 1,
                    exact_div(ni(3 * x * x + 15 * x + 14), 2, "ct3", "x^(n+1)")?,
                ),
                entry(
                    n,
                    -exact_div(
                        ni(2 * x * x * x + 15 * x * x + 31 * x + 12),
                        3,
                        "ct3",
                        "x^n",
                    )?,
                ),
                entry(0, ni(2 * (3 * x + 2)) * sign_pow(n)),
            ]
        }
        (Family::Coconut, [4, n]) | (Family::H3n, [n]) => {
            let n = *n;
            let x = n as i64;
            let constant = if spec.family == Family::H3n {
                ni(18 * x - 15) * sign_pow(n)
            } else {
                ni(14 * x + 10) * sign_pow(n)
            };
            vec![
                entry(n + 4, ni(1)),
                entry(n + 3, ni(-(2 * x + 6))),
                // the display jumps from x^(n+3) to x^(n+1); record the
                // skipped power so its computed value is still reported
                ClaimEntry {
                    power: n + 2,
                    stated: None,
                },
                entry(
                    n + 1,
                    exact_div(ni(3 * x * x + 23 * x + 32), 2, "ct4", "x^(n+1)")?,
                ),
                entry(
                    n,
                    -exact_div(
                        ni(2 * x * x * x + 24 * x * x + 82 * x + 60),
                        3,
                        "ct4",
                        "x^n",
                    )?,
                ),
                entry(0, constant),
            ]
        }
        (Family::Spider, [n, 2]) => {
            let n = *n;
            let x = n as i64;
            vec![
                entry(2 * n + 1, ni(1)),
                entry(2 * n, ni(-4 * x)),
                entry(
                    2 * n - 1,
                    exact_div(ni(15 * x * x - x), 2, "spider", "x^(2n-1)")?,
                ),
                entry(2 * n - 2, ni(-x * (3 * x - 2) * (3 * x + 1))),
                entry(0, BigInt::from(-3).pow((n - 1) as u32) * ni(3 * x - 1)),
            ]
        }
        (Family::CoronaCycleEmpty, [3, n]) => {
            if kind != MatrixKind::Laplacian {
                return Err(ClaimError::NoClaimsForKind(spec.to_string(), kind.name()));
            }
            let n = *n;
            let x = n as i64;
            vec![
                entry(3 * n + 3, ni(1)),
                entry(3 * n + 2, ni(-(6 * x + 6))),
                entry(
                    3 * n + 1,
                    exact_div(ni(33 * x * x + 63 * x + 30), 2, "c3bar", "x^(3n+1)")?,
                ),
                entry(3 * n, ni(-(28 * x * x * x + 75 * x * x + 61 * x + 12))),
                // printed with the factor (1)^(n-1), i.e. always positive
                entry(0, ni(8 * x * x * x + 24 * x * x + 30 * x + 12)),
            ]
        }
        (Family::CoronaCycleEmpty, [4, n]) => {
            if kind != MatrixKind::Laplacian {
                return Err(ClaimError::NoClaimsForKind(spec.to_string(), kind.name()));
            }
            let n = *n;
            let x = n as i64;
            vec![
                entry(4 * n + 4, ni(1)),
                entry(4 * n + 3, ni(-(8 * x + 8))),
                entry(4 * n + 2, ni(30 * x * x + 58 * x + 28)),
                entry(
                    4 * n + 1,
                    -exact_div(
                        ni(212 * x * x * x + 588 * x * x + 520 * x + 144),
                        3,
                        "c4bar",
                        "x^(4n+1)",
                    )?,
                ),
                entry(0, ni(-(13 * x * x - 4 * x - 36))),
            ]
        }
        _ => return Err(ClaimError::NoClaims(spec.to_string())),
    };
    Ok(PartialClaim {
        spec: spec.clone(),
        kind,
        entries,
    })
}

/// One errata line: a stated value against its computed replacement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrataRow {
    pub family: String,
    pub kind: String,
    pub params: String,
    pub power: String,
    pub stated: String,
    pub computed: String,
    pub verdict: String,
}

pub const VERDICT_OK: &str = "ok";
pub const VERDICT_MISMATCH: &str = "mismatch";
pub const VERDICT_UNDISPLAYED: &str = "undisplayed";

impl ErrataRow {
    fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.family,
            self.kind,
            self.params,
            self.power,
            self.stated,
            self.computed,
            self.verdict
        )
    }
}

/// Render rows as the errata CSV (stable header and field order).
pub fn rows_to_csv(rows: &[ErrataRow]) -> String {
    let mut out = String::from("family,kind,params,power,stated,computed,verdict\n");
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}

fn params_of(spec: &FamilySpec) -> String {
    if spec.params.is_empty() {
        "-".to_string()
    } else {
        spec.params
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Compare one claim against a computed polynomial, one row per displayed
/// power. Nothing is accepted silently: every entry gets a verdict.
pub fn claim_rows(claim: &PartialClaim, computed: &IntPoly, kind_label: &str) -> Vec<ErrataRow> {
    let family = claim.spec.family.name().to_string();
    let params = params_of(&claim.spec);
    claim
        .entries
        .iter()
        .map(|e| {
            let got = computed.coeff(e.power);
            let (stated, verdict) = match &e.stated {
                Some(v) if *v == got => (v.to_string(), VERDICT_OK),
                Some(v) => (v.to_string(), VERDICT_MISMATCH),
                None => ("-".to_string(), VERDICT_UNDISPLAYED),
            };
            ErrataRow {
                family: family.clone(),
                kind: kind_label.to_string(),
                params: params.clone(),
                power: format!("x^{}", e.power),
                stated,
                computed: got.to_string(),
                verdict: verdict.to_string(),
            }
        })
        .collect()
}

/// Compare a fully displayed polynomial against the engine, highest power
/// first, with a leading degree row when the degrees disagree.
fn displayed_poly_rows(
    family: &str,
    kind: &str,
    params: &str,
    stated: &[i64],
    computed: &IntPoly,
) -> Vec<ErrataRow> {
    let stated_poly = IntPoly::from_i64_coeffs(stated);
    let mut rows = Vec::new();
    let stated_deg = stated_poly.degree().unwrap_or(0);
    let comp_deg = computed.degree().unwrap_or(0);
    if stated_deg != comp_deg {
        rows.push(ErrataRow {
            family: family.to_string(),
            kind: kind.to_string(),
            params: params.to_string(),
            power: "degree".to_string(),
            stated: stated_deg.to_string(),
            computed: comp_deg.to_string(),
            verdict: VERDICT_MISMATCH.to_string(),
        });
    }
    for power in (0..=stated_deg).rev() {
        let s = stated_poly.coeff(power);
        let c = computed.coeff(power);
        rows.push(ErrataRow {
            family: family.to_string(),
            kind: kind.to_string(),
            params: params.to_string(),
            power: format!("x^{}", power),
            stated: s.to_string(),
            computed: c.to_string(),
            verdict: if s == c { VERDICT_OK } else { VERDICT_MISMATCH }.to_string(),
        });
    }
    rows
}

/// Compare a candidate formula variant against the engine. Equality gets a
/// single confirming row; otherwise the report carries the degrees and the
/// highest power where the two differ, with both coefficients.
fn variant_rows(
    family: &str,
    kind: &str,
    params: &str,
    candidate: &IntPoly,
    truth: &IntPoly,
) -> Vec<ErrataRow> {
    let mk = |power: String, stated: String, computed: String, ok: bool| ErrataRow {
        family: family.to_string(),
        kind: kind.to_string(),
        params: params.to_string(),
        power,
        stated,
        computed,
        verdict: if ok { VERDICT_OK } else { VERDICT_MISMATCH }.to_string(),
    };
    if candidate == truth {
        return vec![mk(
            "whole-polynomial".to_string(),
            "equal".to_string(),
            "equal".to_string(),
            true,
        )];
    }
    let cd = candidate.degree().map(|d| d as i64).unwrap_or(-1);
    let td = truth.degree().map(|d| d as i64).unwrap_or(-1);
    let mut rows = vec![mk(
        "degree".to_string(),
        cd.to_string(),
        td.to_string(),
        cd == td,
    )];
    let top = cd.max(td).max(0) as usize;
    for power in (0..=top).rev() {
        let c = candidate.coeff(power);
        let t = truth.coeff(power);
        if c != t {
            rows.push(mk(
                format!("x^{power}"),
                c.to_string(),
                t.to_string(),
                false,
            ));
            break;
        }
    }
    rows
}

/// The variant of the triangle-corona formula whose middle multiplier reads
/// 3n^3 instead of 3n^2; the two coincide at n = 1.
fn c3_bar_statement_variant(n: usize) -> IntPoly {
    let ni = n as i64;
    let a = IntPoly::from_i64_coeffs(&[-(ni + 2), 1]);
    let b = IntPoly::from_i64_coeffs(&[-1, 1]);
    let lead = a
        .pow(3)
        .add(&a.scale(&BigInt::from(3)))
        .add(&IntPoly::constant(2));
    let a2p1 = a.pow(2).add(&IntPoly::one());
    lead.mul(&b.pow(3 * n))
        .add(&a2p1.mul(&b.pow(3 * n - 1)).scale(&BigInt::from(3 * ni)))
        .add(
            &a.mul(&b.pow(3 * n - 2))
                .scale(&BigInt::from(3 * ni * ni * ni)),
        )
        .add(&b.pow(3 * n - 3).scale(&BigInt::from(ni * ni * ni)))
}

/// The 4-cycle corona statement variant: its third term 2n^2(3A^2+1) is
/// printed without the B^(4n-2) factor.
fn c4_bar_statement_variant(n: usize) -> IntPoly {
    let ni = n as i64;
    let a = IntPoly::from_i64_coeffs(&[-(ni + 2), 1]);
    let b = IntPoly::from_i64_coeffs(&[-1, 1]);
    let a2 = a.pow(2);
    let lead = a2.add(&IntPoly::constant(2)).pow(2);
    let second = a
        .mul(&a2.scale(&BigInt::from(2)).add(&IntPoly::constant(3)))
        .scale(&BigInt::from(2 * ni));
    let third_bare = a2
        .scale(&BigInt::from(3))
        .add(&IntPoly::one())
        .scale(&BigInt::from(2 * ni * ni));
    let fourth = a.scale(&BigInt::from(4 * ni * ni * ni));
    lead.mul(&b.pow(4 * n))
        .add(&second.mul(&b.pow(4 * n - 1)))
        .add(&third_bare)
        .add(&fourth.mul(&b.pow(4 * n - 3)))
        .add(&b.pow(4 * n - 4).scale(&BigInt::from(ni * ni * ni * ni)))
}

/// The 4-cycle corona proof variant as printed: middle terms
/// 2nA(2A^2+3) B^(4n-1) and 2n^2(3A^2+1) B^(4n-2); the derivation it comes
/// from drops two inner-switch terms of the pendant-deleted submatrix, so
/// this variant also fails against the engine.
fn c4_bar_proof_printed_variant(n: usize) -> IntPoly {
    let ni = n as i64;
    let a = IntPoly::from_i64_coeffs(&[-(ni + 2), 1]);
    let b = IntPoly::from_i64_coeffs(&[-1, 1]);
    let a2 = a.pow(2);
    let lead = a2.add(&IntPoly::constant(2)).pow(2);
    let second = a
        .mul(&a2.scale(&BigInt::from(2)).add(&IntPoly::constant(3)))
        .scale(&BigInt::from(2 * ni));
    let third = a2
        .scale(&BigInt::from(3))
        .add(&IntPoly::one())
        .scale(&BigInt::from(2 * ni * ni));
    let fourth = a.scale(&BigInt::from(4 * ni * ni * ni));
    lead.mul(&b.pow(4 * n))
        .add(&second.mul(&b.pow(4 * n - 1)))
        .add(&third.mul(&b.pow(4 * n - 2)))
        .add(&fourth.mul(&b.pow(4 * n - 3)))
        .add(&b.pow(4 * n - 4).scale(&BigInt::from(ni * ni * ni * ni)))
}

/// The signless display for the 4-cycle corona as printed: leading factor
/// A^2(A^2+4) with exponent 3n, then the Laplacian tail (with its own
/// missing-factor slip left as printed).
fn c4_bar_signless_statement_variant(n: usize) -> IntPoly {
    let ni = n as i64;
    let a = IntPoly::from_i64_coeffs(&[-(ni + 2), 1]);
    let b = IntPoly::from_i64_coeffs(&[-1, 1]);
    let a2 = a.pow(2);
    let lead = a2.mul(&a2.add(&IntPoly::constant(4)));
    let second = a
        .mul(&a2.scale(&BigInt::from(2)).add(&IntPoly::constant(3)))
        .scale(&BigInt::from(2 * ni));
    let third_bare = a2
        .scale(&BigInt::from(3))
        .add(&IntPoly::one())
        .scale(&BigInt::from(2 * ni * ni));
    let fourth = a.scale(&BigInt::from(4 * ni * ni * ni));
    lead.mul(&b.pow(3 * n))
        .add(&second.mul(&b.pow(4 * n - 1)))
        .add(&third_bare)
        .add(&fourth.mul(&b.pow(4 * n - 3)))
        .add(&b.pow(4 * n - 4).scale(&BigInt::from(ni * ni * ni * ni)))
}

fn engine_psi(spec: &FamilySpec, kind: MatrixKind) -> IntPoly {
    let g = spec.construct().expect("valid family instance");
    psi(&g, kind, Method::Auto).expect("within engine caps")
}

/// The full adjudication: every displayed claim and polynomial compared
/// against the engines, in a fixed order. Running it twice gives identical
/// rows.
pub fn errata_report() -> Vec<ErrataRow> {
    let mut rows = Vec::new();

    // coconut trees, the H tree, and length-2 spiders (both kinds coincide
    // on these bipartite families, so one comparison serves both)
    for n in 2..=6usize {
        let spec = FamilySpec::new(Family::Coconut, vec![3, n]).unwrap();
        let claim = stated_claims(&spec, MatrixKind::Laplacian).unwrap();
        rows.extend(claim_rows(
            &claim,
            &engine_psi(&spec, MatrixKind::Laplacian),
            "both",
        ));
    }
    for n in 2..=6usize {
        let spec = FamilySpec::new(Family::Coconut, vec![4, n]).unwrap();
        let claim = stated_claims(&spec, MatrixKind::Laplacian).unwrap();
        rows.extend(claim_rows(
            &claim,
            &engine_psi(&spec, MatrixKind::Laplacian),
            "both",
        ));
    }
    for n in 2..=6usize {
        let spec = FamilySpec::new(Family::H3n, vec![n]).unwrap();
        let claim = stated_claims(&spec, MatrixKind::Laplacian).unwrap();
        rows.extend(claim_rows(
            &claim,
            &engine_psi(&spec, MatrixKind::Laplacian),
            "both",
        ));
    }
    for n in 2..=6usize {
        let spec = FamilySpec::new(Family::Spider, vec![n, 2]).unwrap();
        let claim = stated_claims(&spec, MatrixKind::Laplacian).unwrap();
        rows.extend(claim_rows(
            &claim,
            &engine_psi(&spec, MatrixKind::Laplacian),
            "both",
        ));
    }

    // empty-graph coronas: the displayed expansions are for the Laplacian
    for n in 1..=4usize {
        let spec = FamilySpec::new(Family::CoronaCycleEmpty, vec![3, n]).unwrap();
        let claim = stated_claims(&spec, MatrixKind::Laplacian).unwrap();
        rows.extend(claim_rows(
            &claim,
            &engine_psi(&spec, MatrixKind::Laplacian),
            "laplacian",
        ));
    }
    for n in 1..=3usize {
        let spec = FamilySpec::new(Family::CoronaCycleEmpty, vec![4, n]).unwrap();
        let claim = stated_claims(&spec, MatrixKind::Laplacian).unwrap();
        rows.extend(claim_rows(
            &claim,
            &engine_psi(&spec, MatrixKind::Laplacian),
            "laplacian",
        ));
    }

    // fully displayed polynomials of the pendant coronas on 3, 4, 5 cycle
    // vertices, and of the ten-vertex census sibling
    let c3k1 = families::corona_cycle_k1(3).unwrap();
    rows.extend(displayed_poly_rows(
        "corona_cycle_k1",
        "laplacian",
        "3",
        &[74, -215, 273, -176, 63, -12, 1],
        &psi(&c3k1, MatrixKind::Laplacian, Method::Auto).unwrap(),
    ));
    rows.extend(displayed_poly_rows(
        "corona_cycle_k1",
        "signless",
        "3",
        &[78, -227, 285, -180, 63, -12, 1],
        &psi(&c3k1, MatrixKind::Signless, Method::Auto).unwrap(),
    ));

    let c4k1 = families::corona_cycle_k1(4).unwrap();
    let c4_display = [324, -1280, 2190, -2144, 1288, -488, 116, -16, 1];
    for kind in MatrixKind::BOTH {
        rows.extend(displayed_poly_rows(
            "corona_cycle_k1",
            kind.name(),
            "4",
            &c4_display,
            &psi(&c4k1, kind, Method::Auto).unwrap(),
        ));
    }

    // the display repeats the previous degree-8 polynomial for the 10-vertex
    // graph; the degree row carries the headline discrepancy
    let c5k1 = families::corona_cycle_k1(5).unwrap();
    rows.extend(displayed_poly_rows(
        "corona_cycle_k1",
        "laplacian",
        "5",
        &c4_display,
        &psi(&c5k1, MatrixKind::Laplacian, Method::Auto).unwrap(),
    ));

    rows.extend(displayed_poly_rows(
        "fig4_t2",
        "laplacian",
        "-",
        &[
            1317, -6715, 15102, -19762, -16709, -9579, 3792, -1030, 185, -20, 1,
        ],
        &psi(&families::fig4_t2(), MatrixKind::Laplacian, Method::Auto).unwrap(),
    ));

    // formula variants: statement form vs proof form, both against the engine
    for n in 1..=3usize {
        let spec = FamilySpec::new(Family::CoronaCycleEmpty, vec![3, n]).unwrap();
        let truth = engine_psi(&spec, MatrixKind::Laplacian);
        let params = format!("3;{n}");
        rows.extend(variant_rows(
            "c3bar-statement-form",
            "laplacian",
            &params,
            &c3_bar_statement_variant(n),
            &truth,
        ));
        rows.extend(variant_rows(
            "c3bar-proof-form",
            "laplacian",
            &params,
            &closedforms::c3_bar_psi(n, MatrixKind::Laplacian).unwrap(),
            &truth,
        ));
    }
    for n in 1..=3usize {
        let spec = FamilySpec::new(Family::CoronaCycleEmpty, vec![4, n]).unwrap();
        let params = format!("4;{n}");
        let truth_l = engine_psi(&spec, MatrixKind::Laplacian);
        rows.extend(variant_rows(
            "c4bar-statement-form",
            "laplacian",
            &params,
            &c4_bar_statement_variant(n),
            &truth_l,
        ));
        rows.extend(variant_rows(
            "c4bar-proof-form-printed",
            "laplacian",
            &params,
            &c4_bar_proof_printed_variant(n),
            &truth_l,
        ));
        rows.extend(variant_rows(
            "c4bar-corrected-form",
            "laplacian",
            &params,
            &closedforms::c4_bar_psi(n, MatrixKind::Laplacian).unwrap(),
            &truth_l,
        ));
        let truth_q = engine_psi(&spec, MatrixKind::Signless);
        rows.extend(variant_rows(
            "c4bar-statement-form",
            "signless",
            &params,
            &c4_bar_signless_statement_variant(n),
            &truth_q,
        ));
    }

    // partial display for the depth-3 binary tree: the quoted x^13, x^12,
    // and constant values contradict the coefficient formulas (the x^13
    // value must be 2m^2 + m - (sum d^2)/2 = 373), so these rows come out
    // as mismatches with the engine values beside them
    {
        let t3 = families::perfect_binary_tree(3).unwrap();
        let truth = psi(&t3, MatrixKind::Laplacian, Method::Auto).unwrap();
        let displayed: [(usize, i64); 5] =
            [(15, 1), (14, -28), (13, 371), (12, -3074), (0, -14200)];
        for (power, stated) in displayed {
            let got = truth.coeff(power);
            let sv = BigInt::from(stated);
            rows.push(ErrataRow {
                family: "binary_tree".to_string(),
                kind: "both".to_string(),
                params: "3".to_string(),
                power: format!("x^{power}"),
                stated: sv.to_string(),
                computed: got.to_string(),
                verdict: if sv == got {
                    VERDICT_OK
                } else {
                    VERDICT_MISMATCH
                }
                .to_string(),
            });
        }
    }

    // degree-system solution counts: the published determination arguments
    // enumerate solutions only up to the target's maximum degree (3), so
    // their stated counts fall short of the exhaustive ones for four cases
    {
        use crate::invariants::{forward_invariants, solve_degree_system};
        let systems: [(&str, &str, crate::graph::Graph, usize); 4] = [
            (
                "binary_tree",
                "3",
                families::perfect_binary_tree(3).unwrap(),
                1,
            ),
            (
                "corona_cycle_k1",
                "3",
                families::corona_cycle_k1(3).unwrap(),
                2,
            ),
            (
                "corona_cycle_k1",
                "4",
                families::corona_cycle_k1(4).unwrap(),
                1,
            ),
            (
                "corona_cycle_k1",
                "5",
                families::corona_cycle_k1(5).unwrap(),
                1,
            ),
        ];
        for (family, params, g, stated_count) in systems {
            let report = forward_invariants(&g, MatrixKind::Laplacian);
            let count = solve_degree_system(&report).len();
            rows.push(ErrataRow {
                family: family.to_string(),
                kind: "laplacian".to_string(),
                params: params.to_string(),
                power: "degree-system solutions".to_string(),
                stated: stated_count.to_string(),
                computed: count.to_string(),
                verdict: if count == stated_count {
                    VERDICT_OK
                } else {
                    VERDICT_MISMATCH
                }
                .to_string(),
            });
        }
    }

    rows
}

/// Rows for one grid point: closed form (when one exists) against the
/// engine, the claim rows, and the printed-variant adjudications.
fn verify_grid_point(spec: &FamilySpec, kind: MatrixKind) -> Vec<ErrataRow> {
    let mut rows = Vec::new();
    let g = match spec.construct() {
        Ok(g) => g,
        Err(_) => return rows,
    };
    let truth = psi(&g, kind, Method::Auto).expect("grid sizes fit the engines");
    let closed: Option<IntPoly> = match spec.family {
        Family::Spider => Some(closedforms::spider_psi(spec.params[0], spec.params[1]).unwrap()),
        Family::BinaryTree => Some(closedforms::btree_psi(spec.params[0]).unwrap()),
        Family::CoronaCycleK1 => {
            Some(closedforms::corona_cycle_psi(spec.params[0], kind).unwrap())
        }
        Family::CoronaCycleEmpty if spec.params[0] == 3 => {
            Some(closedforms::c3_bar_psi(spec.params[1], kind).unwrap())
        }
        Family::CoronaCycleEmpty if spec.params[0] == 4 => {
            Some(closedforms::c4_bar_psi(spec.params[1], kind).unwrap())
        }
        _ => None,
    };
    if let Some(cf) = closed {
        let ok = cf == truth;
        rows.push(ErrataRow {
            family: spec.family.name().to_string(),
            kind: kind.name().to_string(),
            params: params_of(spec),
            power: "closed-form".to_string(),
            stated: format!("degree {}", cf.degree().map(|d| d as i64).unwrap_or(-1)),
            computed: format!("degree {}", truth.degree().map(|d| d as i64).unwrap_or(-1)),
            verdict: if ok { VERDICT_OK } else { VERDICT_MISMATCH }.to_string(),
        });
    }
    if let Ok(claim) = stated_claims(spec, kind) {
        rows.extend(claim_rows(&claim, &truth, kind.name()));
    }
    // the corona formulas come in printed variants; adjudicate them at every
    // grid point so a verify run shows which variant survives
    if kind == MatrixKind::Laplacian && spec.family == Family::CoronaCycleEmpty {
        let params = params_of(spec);
        let np = spec.params[1];
        if spec.params[0] == 3 {
            rows.extend(variant_rows(
                "c3bar-statement-form",
                kind.name(),
                &params,
                &c3_bar_statement_variant(np),
                &truth,
            ));
            rows.extend(variant_rows(
                "c3bar-proof-form",
                kind.name(),
                &params,
                &closedforms::c3_bar_psi(np, kind).unwrap(),
                &truth,
            ));
        } else if spec.params[0] == 4 {
            rows.extend(variant_rows(
                "c4bar-statement-form",
                kind.name(),
                &params,
                &c4_bar_statement_variant(np),
                &truth,
            ));
            rows.extend(variant_rows(
                "c4bar-proof-form-printed",
                kind.name(),
                &params,
                &c4_bar_proof_printed_variant(np),
                &truth,
            ));
            rows.extend(variant_rows(
                "c4bar-corrected-form",
                kind.name(),
                &params,
                &closedforms::c4_bar_psi(np, kind).unwrap(),
                &truth,
            ));
        }
    }
    rows
}

/// Grid verification for one family: every grid point is independent, so
/// points run on parallel workers and the rows are merged back in grid
/// order.
pub fn verify_family(
    family: Family,
    n_range: (usize, usize),
    m_range: Option<(usize, usize)>,
    kinds: &[MatrixKind],
) -> Result<Vec<ErrataRow>, ClaimError> {
    use rayon::prelude::*;

    let mut work: Vec<(FamilySpec, MatrixKind)> = Vec::new();
    let (lo, hi) = n_range;
    for n in lo..=hi.max(lo) {
        let specs: Vec<FamilySpec> =
            match family {
                Family::Spider => {
                    let (mlo, mhi) = m_range.unwrap_or((1, 4));
                    (mlo..=mhi)
                        .map(|m| FamilySpec::new(Family::Spider, vec![n, m]).unwrap())
                        .collect()
                }
                Family::Coconut => {
                    let (mlo, mhi) = m_range.unwrap_or((3, 4));
                    (mlo..=mhi)
                        .map(|m| FamilySpec::new(Family::Coconut, vec![m, n]).unwrap())
                        .collect()
                }
                Family::CoronaCycleEmpty => {
                    let (mlo, mhi) = m_range.unwrap_or((3, 4));
                    (mlo..=mhi)
                        .map(|m| FamilySpec::new(Family::CoronaCycleEmpty, vec![m, n]).unwrap())
                        .collect()
                }
                f => vec![FamilySpec::new(f, vec![n])
                    .map_err(|_| ClaimError::NoClaims(f.name().into()))?],
            };
        for spec in specs {
            for &kind in kinds {
                work.push((spec.clone(), kind));
            }
        }
    }
    let chunks: Vec<Vec<ErrataRow>> = work
        .par_iter()
        .map(|(spec, kind)| verify_grid_point(spec, *kind))
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}
