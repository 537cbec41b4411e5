use proptest::prelude::*;

use lie_ncg_core::graphlab::{canonical_certificate, graph_isomorphic, is_planar};
use lie_ncg_core::verifier::builtin_catalog;
use lie_ncg_core::{AlgebraSpec, Element, Graph, LieAlgebra, Limits, NcGraph};

fn catalog() -> Vec<LieAlgebra> {
    builtin_catalog().into_iter().map(|e| e.algebra().unwrap()).collect()
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn bracket_is_alternating_and_bilinear(which in 0usize..10, a in any::<u64>(), b in any::<u64>(), c in any::<u64>(), s in any::<u16>()) {
        let alg = &catalog()[which];
        let (q, n) = (alg.field().order(), alg.dim());
        let f = alg.field();
        let el = |i: u64| Element::from_index(i % alg.order(), q, n);
        let (x, y, z) = (el(a), el(b), el(c));
        let scalar = lie_ncg_core::FieldElem::from_code(s % q as u16);
        prop_assert!(alg.bracket(&x, &x).is_zero());
        prop_assert_eq!(alg.bracket(&x, &y), alg.bracket(&y, &x).neg(f));
        prop_assert_eq!(alg.bracket(&x.add(f, &y), &z), alg.bracket(&x, &z).add(f, &alg.bracket(&y, &z)));
        prop_assert_eq!(alg.bracket(&x.scale(f, scalar), &y), alg.bracket(&x, &y).scale(f, scalar));
        let jacobi = alg.bracket(&x, &alg.bracket(&y, &z))
            .add(f, &alg.bracket(&y, &alg.bracket(&z, &x)))
            .add(f, &alg.bracket(&z, &alg.bracket(&x, &y)));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn centralizer_contains_x_and_center(which in 0usize..10, a in any::<u64>()) {
        let alg = &catalog()[which];
        let f = alg.field();
        let x = Element::from_index(a % alg.order(), f.order(), alg.dim());
        let c = alg.centralizer(&x);
        prop_assert!(c.contains(f, x.coeffs()));
        prop_assert!(alg.center().is_subspace_of(f, &c));
    }

    #[test]
    fn certificate_and_planarity_are_invariant((g, perm) in graph_and_perm(12)) {
        let limits = Limits::default();
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_certificate(&g, &limits).unwrap(), canonical_certificate(&h, &limits).unwrap());
        prop_assert_eq!(is_planar(&g), is_planar(&h));
        let phi = graph_isomorphic(&g, &h, &limits).unwrap();
        prop_assert!(phi.is_some());
    }

    #[test]
    fn spec_json_round_trip(which in 0usize..10) {
        let alg = &catalog()[which];
        let json = serde_json::to_string(&alg.to_spec()).unwrap();
        let back: AlgebraSpec = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&LieAlgebra::from_spec(&back).unwrap(), alg);
    }

    #[test]
    fn degree_is_order_minus_centralizer(which in 0usize..10, v in any::<usize>()) {
        let alg = &catalog()[which];
        let g = NcGraph::build(alg, &Limits::default()).unwrap();
        let v = v % g.order();
        let c = alg.centralizer(&g.vertices()[v]).cardinality(alg.field());
        prop_assert_eq!(g.degree(v).unwrap() as u64, alg.order() - c);
    }
}
