use std::collections::BTreeSet;

use proptest::prelude::*;

use fqdecomp::groebner::{intersect, Ideal};
use fqdecomp::mpoly::{Monomial, OrderKind, Polynomial, Ring};
use fqdecomp::oracle::{factor_bruteforce, maximal_ideal, point_ideal, OracleConfig};
use fqdecomp::primdec::{primary_decomposition, verify};
use fqdecomp::univar::factor;

fn points_strategy() -> impl Strategy<Value = (u64, Vec<(u64, u64)>)> {
    prop::sample::select(vec![3u64, 5, 7]).prop_flat_map(|p| {
        (Just(p), prop::collection::btree_set((0..p, 0..p), 1..=4).prop_map(|s| s.into_iter().collect()))
    })
}

fn univariate_strategy(max_deg: usize) -> impl Strategy<Value = (u64, Vec<u64>)> {
    prop::sample::select(vec![2u64, 3, 5]).prop_flat_map(move |p| {
        (
            Just(p),
            prop::collection::vec(0..p, 1..=max_deg).prop_map(|mut c| {
                c.push(1);
                c
            }),
        )
    })
}

fn dense(ring: &std::sync::Arc<Ring>, coeffs: &[u64]) -> Polynomial {
    let terms =
        coeffs.iter().enumerate().map(|(i, &c)| (ring.field().elem(c), Monomial::var(1, 0, i as u16))).collect();
    ring.from_terms(terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn point_sets_decompose_into_their_maximal_ideals((p, pts) in points_strategy(), grevlex in any::<bool>()) {
        let order = if grevlex { OrderKind::Grevlex } else { OrderKind::Lex };
        let r = Ring::new(p, &["x", "y"], order).unwrap();
        let coords: Vec<Vec<u64>> = pts.iter().map(|&(a, b)| vec![a, b]).collect();
        let i = point_ideal(&r, &coords).unwrap();
        let d = primary_decomposition(&i).unwrap();
        let expected: BTreeSet<String> =
            coords.iter().map(|pt| maximal_ideal(&r, pt).groebner().to_string()).collect();
        let got: BTreeSet<String> = d.components.iter().map(|c| c.groebner().to_string()).collect();
        prop_assert_eq!(got, expected);
        prop_assert_eq!(d.t(), coords.len());
        prop_assert!(verify(&d).passed());
    }

    #[test]
    fn fat_points_verify((p, pts) in points_strategy(), e in 1u32..=3) {
        // <x-a, y-b>^e style primary components, intersected
        let r = Ring::new(p, &["x", "y"], OrderKind::Grevlex).unwrap();
        let mut acc: Option<Ideal> = None;
        for (k, &(a, b)) in pts.iter().enumerate() {
            let pow = if k == 0 { e as u64 } else { 1 };
            let xa = r.parse("x").unwrap().sub(&r.constant(r.field().elem(a))).pow(pow);
            let yb = r.parse("y").unwrap().sub(&r.constant(r.field().elem(b)));
            let q = Ideal::new(&r, vec![xa, yb]);
            acc = Some(match acc { None => q, Some(i) => intersect(&i, &q) });
        }
        let i = acc.unwrap();
        let d = primary_decomposition(&i).unwrap();
        prop_assert_eq!(d.t(), pts.len());
        let report = verify(&d);
        prop_assert!(report.passed(), "{:?}", report.checks());
    }

    #[test]
    fn factors_multiply_back((p, coeffs) in univariate_strategy(8), lc in 1u64..5) {
        let r = Ring::new(p, &["x"], OrderKind::Lex).unwrap();
        let f = dense(&r, &coeffs).scale(r.field().elem(lc % (p - 1) + 1));
        let fz = factor(&f).unwrap();
        prop_assert_eq!(fz.product(), f.clone());
        for (a, g) in fz.factors.iter().enumerate() {
            prop_assert_eq!(g.leading_coeff().value(), 1);
            for h in &fz.factors[a + 1..] {
                let both = Ideal::new(&r, vec![g.clone(), h.clone()]);
                prop_assert!(both.is_unit());
            }
        }
    }

    #[test]
    fn component_count_is_distinct_irreducible_count((p, coeffs) in univariate_strategy(6)) {
        let r = Ring::new(p, &["x"], OrderKind::Lex).unwrap();
        let f = dense(&r, &coeffs);
        let oracle = factor_bruteforce(&f, &OracleConfig { max_univariate_space: 1 << 16, ..Default::default() })
            .unwrap();
        let fz = factor(&f).unwrap();
        prop_assert_eq!(fz.factors.len(), oracle.len());
        let grouped: Vec<Polynomial> = oracle.iter().map(|(g, m)| g.pow(*m as u64)).collect();
        let a: BTreeSet<String> = grouped.iter().map(|g| g.to_string()).collect();
        let b: BTreeSet<String> = fz.factors.iter().map(|g| g.to_string()).collect();
        prop_assert_eq!(a, b);
    }
}
