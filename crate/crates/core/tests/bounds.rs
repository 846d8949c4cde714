mod common;

use common::{linear_candidates, scenarios_up_to};
use diagcoinv::characters::{
    eps_chi_bound, multiplicity_linear, parity_pattern, scenario_report, theorem_bound, LinearChar, Scenario,
};
use diagcoinv::params::hook_k;
use diagcoinv::shapes::is_vertical_strip;

/// For generic fillings with a parity pattern, row-strictness and the
/// vertical-strip test on the reconstructed diagram agree.
#[test]
fn generic_shortcut_matches_diagram_test() {
    for (n, scenario) in scenarios_up_to(7) {
        let lw = scenario.lowest_weight(n).unwrap();
        for sigma in [LinearChar::Det, LinearChar::Chi] {
            let sheet = if sigma == LinearChar::Det { 1 } else { 0 };
            let pattern = parity_pattern(lw.lambda(), sigma).unwrap();
            for q in lw.enumerate_tab().unwrap() {
                if !pattern(&q) || !lw.is_generic(&q) {
                    continue;
                }
                let strip = is_vertical_strip(&lw.diagram_of_q(&q).unwrap(), sheet);
                assert_eq!(q.is_row_strict(lw.lambda()), strip, "{scenario} n={n} {sigma} Q={q}");
            }
        }
    }
}

#[test]
fn filtered_candidates_are_exactly_the_row_strict_patterned_fillings() {
    for (n, scenario) in scenarios_up_to(6) {
        let lw = scenario.lowest_weight(n).unwrap();
        let det = parity_pattern(lw.lambda(), LinearChar::Det).unwrap();
        let chi = parity_pattern(lw.lambda(), LinearChar::Chi).unwrap();
        let mut want: Vec<_> = lw
            .enumerate_tab()
            .unwrap()
            .into_iter()
            .filter(|q| q.is_row_strict(lw.lambda()) && (det(q) || chi(q)))
            .collect();
        let mut got = linear_candidates(&lw);
        want.sort();
        got.sort();
        assert_eq!(got, want, "{scenario} n={n}");
    }
}

#[test]
fn hook_identity_symbolic() {
    for n in 4..=64i64 {
        let k = hook_k(n as usize) as i64;
        let m = n - k;
        let value = 2 + k * m - (n + 1);
        match n % 4 {
            0 => assert_eq!(4 * value, n * (n - 4), "n={n}"),
            2 => assert_eq!(4 * value, (n - 6) * (n + 2), "n={n}"),
            _ => assert_eq!(4 * value, (n - 1) * (n - 3), "n={n}"),
        }
    }
}

#[test]
fn computed_bound_dominates_stated_bound() {
    for n in 4..=16 {
        let r = eps_chi_bound(n, false).unwrap();
        assert_eq!(r.det_mult, 1, "n={n}");
        assert!(r.eps_chi_lower >= theorem_bound(n), "n={n}");
        if n % 2 == 1 || n % 4 == 0 {
            assert_eq!(r.eps_chi_lower, theorem_bound(n), "n={n}");
        }
        let conservative = eps_chi_bound(n, true).unwrap();
        assert!(conservative.eps_chi_lower <= r.eps_chi_lower);
    }
}

#[test]
fn every_scenario_is_of_coinvariant_type() {
    for n in 1..=16 {
        let r = scenario_report(n, Scenario::for_rank(n), false).unwrap();
        assert!(r.coinvariant_type, "n={n} {}", r.scenario);
    }
    for n in 1..=8 {
        let r = scenario_report(n, Scenario::Gordon, false).unwrap();
        assert_eq!((r.det_mult, r.chi_total), (1, n + 1));
    }
}

/// Non-generic fillings never add χ occurrences in these scenarios; the
/// rejected det candidates are exactly those meeting the pair bound.
#[test]
fn nongeneric_contributions_measured() {
    for n in 5..=12 {
        let lw = Scenario::Hook { k: hook_k(n) }.lowest_weight(n).unwrap();
        let chi = multiplicity_linear(&lw, LinearChar::Chi).unwrap();
        assert!(chi.nongeneric.is_empty(), "n={n}");
        let det = multiplicity_linear(&lw, LinearChar::Det).unwrap();
        assert_eq!(det.generic_count(), 1);
        assert!(det.nongeneric.is_empty());
        assert_eq!(det.rejected.len(), hook_k(n) - 1, "n={n}");
    }
}

#[test]
fn report_json_schema() {
    let r = eps_chi_bound(6, false).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    for key in ["n", "scenario", "det_mult", "chi_generic", "chi_total", "eps_chi_lower", "theorem_bound"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["scenario"]["shape"], serde_json::json!([3, 3]));
    let back: diagcoinv::characters::BoundReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}
