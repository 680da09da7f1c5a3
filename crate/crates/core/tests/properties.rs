//! Property-based checks of combinatorial invariants.

mod common;

use proptest::prelude::*;
use rainbow_bipartite::construction::{
    build_coloring, classify_pair, g_threshold, make_scheme, WitnessGenerator,
};
use rainbow_bipartite::graph::{Color, EdgeColoring, LabelSpec, RainbowPath, Side, Vertex};
use rainbow_bipartite::verifier::{
    check_witness_set, enumerate_rainbow_paths, max_disjoint_packing, passes, verify_k_connectivity,
};

/// A scheme `(k, r)` at or above the threshold, small enough to check quickly.
fn scheme_params() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=5).prop_flat_map(|k| {
        let g = g_threshold(k).unwrap();
        (Just(k), g..=g + 2 * k + 1)
    })
}

fn coloring(
    r: std::ops::RangeInclusive<usize>,
    colors: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = EdgeColoring> {
    (r, colors).prop_flat_map(|(r, c)| {
        prop::collection::vec(1..=c as Color, r * r)
            .prop_map(move |a| EdgeColoring::new(r, c, a).unwrap())
    })
}

fn label_text() -> impl Strategy<Value = String> {
    let side = prop_oneof![Just("U"), Just("W")];
    (side, 1usize..40, 1usize..40, any::<bool>()).prop_map(|(s, a, b, extra)| {
        if extra {
            format!("{s}:e:{a}")
        } else {
            format!("{s}:{a}:{b}")
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn label_grammar_round_trips(s in label_text()) {
        let parsed: LabelSpec = s.parse().unwrap();
        prop_assert_eq!(parsed.to_string(), s);
    }

    #[test]
    fn malformed_labels_rejected(s in "[UWX]:[0-9e+-]{0,3}:[0-9e]{0,3}(:[0-9])?") {
        if let Ok(parsed) = s.parse::<LabelSpec>() {
            prop_assert_eq!(parsed.to_string(), s);
        }
    }

    #[test]
    fn flat_index_round_trips((k, r) in scheme_params(), flat in 0usize..64, w_side in any::<bool>()) {
        let s = make_scheme(k, r).unwrap();
        let flat = flat % r;
        let side = if w_side { Side::W } else { Side::U };
        let l = s.labeling();
        let v = l.vertex_at(Vertex { side, flat }).unwrap();
        prop_assert_eq!(v.vertex(), Vertex { side, flat });
        let reparsed = l.parse(&v.to_string()).unwrap();
        prop_assert_eq!(reparsed, v);
        prop_assert_eq!(l.flat_index(v.label).unwrap(), flat);
    }

    #[test]
    fn reversed_rainbow_path(c in coloring(3..=4, 2..=5), u in 0usize..8, v in 0usize..8) {
        let r = c.r();
        let (u, v) = (Vertex::from_id(u % (2 * r), r), Vertex::from_id(v % (2 * r), r));
        prop_assume!(u != v);
        for p in enumerate_rainbow_paths(&c, u, v, None).unwrap().paths() {
            let fwd = RainbowPath::new(p.clone(), &c).unwrap();
            let back = fwd.reversed();
            let mut rp = p.clone();
            rp.reverse();
            prop_assert_eq!(back.vertices(), &rp[..]);
            let mut rc = fwd.colors().to_vec();
            rc.reverse();
            prop_assert_eq!(back.colors(), &rc[..]);
            prop_assert_eq!(RainbowPath::new(rp, &c).unwrap(), back);
        }
    }

    #[test]
    fn packing_matches_exhaustive(c in coloring(3..=4, 2..=4)) {
        let r = c.r();
        for a in 0..2 * r {
            for b in a + 1..2 * r {
                let (u, v) = (Vertex::from_id(a, r), Vertex::from_id(b, r));
                let cands = enumerate_rainbow_paths(&c, u, v, None).unwrap();
                let packing = max_disjoint_packing(&cands, r);
                let exhaustive = common::brute_max(&common::brute_paths(&c, u, v), r);
                prop_assert_eq!(packing.size, exhaustive);
                let chosen = packing.rainbow_paths(&cands, &c).unwrap();
                prop_assert_eq!(chosen.len(), packing.size);
                if packing.size > 0 {
                    prop_assert!(check_witness_set(&c, u, v, &chosen, packing.size).is_ok());
                }
            }
        }
    }

    #[test]
    fn connectivity_is_monotone_in_k(c in coloring(3..=3, 2..=5)) {
        let ok: Vec<bool> = (1..=3).map(|k| passes(&c, k).unwrap()).collect();
        prop_assert!(ok.windows(2).all(|w| w[0] || !w[1]), "{:?}", ok);
        let report = verify_k_connectivity(&c, 1, false).unwrap();
        prop_assert_eq!(report.ok, ok[0]);
    }

    #[test]
    fn color_renaming_preserves_packings(c in coloring(3..=4, 2..=4), seed in any::<u64>()) {
        let mut perm: Vec<Color> = (1..=c.colors() as Color).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let renamed = c.permute_colors(&perm).unwrap();
        let k = c.r();
        let a = verify_k_connectivity(&c, k, false).unwrap();
        let b = verify_k_connectivity(&renamed, k, false).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn classification_transform_reproduces_pair((k, r) in scheme_params(), a in 0usize..100, b in 0usize..100) {
        let s = make_scheme(k, r).unwrap();
        let (a, b) = (a % (2 * r), b % (2 * r));
        prop_assume!(a != b);
        let u = s.vertex(Vertex::from_id(a, r)).unwrap();
        let v = s.vertex(Vertex::from_id(b, r)).unwrap();
        let c = classify_pair(&s, &u, &v).unwrap();
        let (x, y) = (
            s.resolve(&c.transform.apply(&c.canonical_u)).unwrap(),
            s.resolve(&c.transform.apply(&c.canonical_v)).unwrap(),
        );
        let (eu, ev) = if c.endpoints_swapped { (v, u) } else { (u, v) };
        prop_assert_eq!(x, eu);
        prop_assert_eq!(y, ev);
    }

    #[test]
    fn witness_families_hold((k, r) in scheme_params(), a in 0usize..100, b in 0usize..100) {
        // the smallest instance is excluded: its single-slot groups leave
        // some opposite-side pairs with the direct edge only
        prop_assume!((k, r) != (2, 4));
        let s = make_scheme(k, r).unwrap();
        let (a, b) = (a % (2 * r), b % (2 * r));
        prop_assume!(a != b);
        let gen = WitnessGenerator::new(s);
        let (u, v) = (s.vertex(Vertex::from_id(a, r)).unwrap(), s.vertex(Vertex::from_id(b, r)).unwrap());
        let w = gen.witnesses(&u, &v).unwrap();
        prop_assert!(check_witness_set(gen.coloring(), u.vertex(), v.vertex(), &w.paths, k).is_ok());
        // families alone suffice once every group has two slots
        if s.k1() >= 2 {
            prop_assert_eq!(w.supplemented, 0);
        }
    }
}

#[test]
fn constructed_colorings_use_three_colors() {
    for k in 2..=6 {
        let g = g_threshold(k).unwrap();
        for r in [g, g + 1, g + 2 * k - 1] {
            let c = build_coloring(&make_scheme(k, r).unwrap());
            assert_eq!(c.colors_used(), 3, "k={k} r={r}");
            assert_eq!(c.histogram().iter().sum::<usize>(), r * r);
        }
    }
}
