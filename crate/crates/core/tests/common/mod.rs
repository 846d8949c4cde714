//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use diagcoinv::arith::ParamScalar;
use diagcoinv::characters::Scenario;
use diagcoinv::shapes::{
    canonical_form, enumerate_skew_shapes, enumerate_standard_tableaux, SkewPair,
};
use diagcoinv::tableaux::{FillingFilter, LowestWeight, QFilling};

/// The set of `(diagram index, content)` sequences over every compatible `P`.
pub fn weight_set(lw: &LowestWeight, q: &QFilling) -> BTreeSet<Vec<(u8, ParamScalar)>> {
    let dag = lw.p_dag(q).unwrap();
    dag.linear_extensions()
        .unwrap()
        .into_iter()
        .map(|pf| {
            let w = lw.weight_sequence(&pf, q);
            let contents = w.contents(lw.params()).unwrap();
            w.entries.iter().map(|e| e.b).zip(contents).collect()
        })
        .collect()
}

/// Every diagram pair whose standard tableaux have exactly the given set of
/// content sequences, found by enumerating all skew arrangements of the
/// contents. Reconstruction is not used.
pub fn brute_force_diagrams(weights: &BTreeSet<Vec<(u8, ParamScalar)>>) -> Vec<SkewPair> {
    let sample = weights.iter().next().expect("nonempty weight set");
    let sheet = |which: u8| -> Vec<ParamScalar> {
        sample.iter().filter(|e| e.0 == which).map(|e| e.1.clone()).collect()
    };
    let mut out = Vec::new();
    for d0 in enumerate_skew_shapes(&sheet(0)).unwrap() {
        for d1 in enumerate_skew_shapes(&sheet(1)).unwrap() {
            let d = SkewPair::new(d0.clone(), d1);
            let seqs: BTreeSet<_> = enumerate_standard_tableaux(&d)
                .unwrap()
                .iter()
                .map(|t| t.content_sequence(&d))
                .collect();
            if &seqs == weights {
                out.push(canonical_form(&d));
            }
        }
    }
    out.sort_by_key(|d| format!("{d:?}"));
    out.dedup();
    out
}

/// Fillings in scope for the linear-character criteria: parity pattern of
/// det or χ and row-strict.
pub fn linear_candidates(lw: &LowestWeight) -> Vec<QFilling> {
    let mut all = Vec::new();
    for off in [0, 1] {
        all.extend(
            lw.enumerate_filtered(FillingFilter {
                parity_offset: Some(off),
                row_strict: true,
            })
            .unwrap(),
        );
    }
    all
}

/// Every scenario with rank `n <= max_n` used by the bounds, plus Gordon.
pub fn scenarios_up_to(max_n: usize) -> Vec<(usize, Scenario)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((n, Scenario::Gordon));
        let s = Scenario::for_rank(n);
        if s != Scenario::Gordon {
            out.push((n, s));
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
