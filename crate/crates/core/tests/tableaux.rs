mod common;

use common::binomial;
use diagcoinv::characters::Scenario;
use diagcoinv::shapes::{enumerate_skew_shapes, enumerate_standard_tableaux, SkewPair};
use diagcoinv::arith::ParamScalar;
use diagcoinv::tableaux::{count_linear_extensions, Dag};
use proptest::prelude::*;

#[test]
fn gordon_tab_and_dimension() {
    for n in 1..=5usize {
        let lw = Scenario::Gordon.lowest_weight(n).unwrap();
        let tab = lw.enumerate_tab().unwrap();
        assert_eq!(tab.len() as u64, binomial(3 * n as u64, n as u64));
        let dim: u128 = tab.iter().map(|q| lw.dim_lq(q).unwrap()).sum();
        assert_eq!(dim, (2 * n as u128 + 1).pow(n as u32));
        assert!(tab.iter().all(|q| lw.is_generic(q)));
    }
}

fn arb_dag() -> impl Strategy<Value = Dag> {
    (1usize..8).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..12).prop_map(move |pairs| {
            // orient every edge forward so the graph is acyclic
            Dag::new(n, pairs.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b)))).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn extension_count_matches_enumeration(dag in arb_dag()) {
        let all = dag.linear_extensions().unwrap();
        prop_assert_eq!(count_linear_extensions(&dag).unwrap(), all.len() as u128);
        for pf in &all {
            for (u, v) in dag.edges() {
                prop_assert!(pf.values()[u] < pf.values()[v]);
            }
        }
        prop_assert_eq!(&all[0], &dag.minimal_linear_extension());
    }

    #[test]
    fn skew_arrangements_have_the_requested_contents(raw in proptest::collection::vec(-3i64..4, 1..6), frac in 0usize..2) {
        let shift = if frac == 0 { ParamScalar::zero() } else { "t".parse().unwrap() };
        let contents: Vec<ParamScalar> = raw.iter().map(|&k| ParamScalar::from_int(k) + &shift).collect();
        let mut want = contents.clone();
        want.sort();
        for arrangement in enumerate_skew_shapes(&contents).unwrap() {
            let mut got: Vec<ParamScalar> = arrangement.iter().flat_map(|c| c.contents()).collect();
            got.sort();
            prop_assert_eq!(&got, &want);
            for comp in &arrangement {
                prop_assert!(comp.validate().is_ok());
            }
            let d = SkewPair::new(arrangement.clone(), Vec::new());
            for t in enumerate_standard_tableaux(&d).unwrap() {
                prop_assert!(t.is_standard(&d));
            }
        }
    }
}
