use proptest::prelude::*;

use uniserial::cli::parse_object;
use uniserial::field::Rationals;
use uniserial::proalgebra::TruncatedSeries;
use uniserial::tube::{hom_dim, hom_space, tau, tau_inv, Morphism};
use uniserial::{CoverPoint, IntervalObject, Site, Vertex};

fn z_object() -> impl Strategy<Value = IntervalObject> {
    (-12i64..12, -12i64..12, 0u64..4).prop_map(|(s, t, n)| {
        IntervalObject::make(Site::big_tube_int(), Vertex::Int(s), Vertex::Int(t), n).unwrap()
    })
}

fn pair_object() -> impl Strategy<Value = IntervalObject> {
    (any::<[i8; 2]>(), any::<[i8; 2]>(), 0u64..4).prop_map(|(s, t, n)| {
        let v = |p: [i8; 2]| Vertex::Pair([p[0] as i64, p[1] as i64]);
        IntervalObject::make(Site::big_tube_pairs(), v(s), v(t), n).unwrap()
    })
}

fn tube_object(r: u32) -> impl Strategy<Value = IntervalObject> {
    (0..r as i64, 0..r as i64, 0u64..4).prop_map(move |(s, t, n)| {
        IntervalObject::make(Site::tube(r), Vertex::Int(s), Vertex::Int(t), n).unwrap()
    })
}

fn series(n: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(-5i64..5, n).prop_map(|c| TruncatedSeries::from_ints(&c, 0).unwrap())
}

/// Direct count of shifts `k` with `a_X ≤ σ^k a_Y ≤ b_X ≤ σ^k b_Y`.
fn brute_force_hom(x: &IntervalObject, y: &IntervalObject) -> u64 {
    let shift = |p: CoverPoint, k: i64| CoverPoint {
        deck: p.deck + k,
        vertex: p.vertex,
    };
    (-30..=30)
        .filter(|&k| {
            let (ay, by) = (shift(y.a(), k), shift(y.b(), k));
            x.a() <= ay && ay <= x.b() && x.b() <= by
        })
        .count() as u64
}

proptest! {
    #[test]
    fn hom_matches_brute_force(x in z_object(), y in z_object()) {
        prop_assert_eq!(hom_dim(&x, &y).unwrap(), brute_force_hom(&x, &y));
    }

    #[test]
    fn hom_matches_brute_force_on_pairs(x in pair_object(), y in pair_object()) {
        prop_assert_eq!(hom_dim(&x, &y).unwrap(), brute_force_hom(&x, &y));
    }

    #[test]
    fn tau_is_invertible(x in z_object()) {
        prop_assert_eq!(tau_inv(&tau(&x).unwrap()).unwrap(), x);
        prop_assert_eq!(tau(&x).unwrap().winding(), x.winding());
    }

    #[test]
    fn labels_round_trip(x in pair_object()) {
        let s = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(parse_object(x.site(), &s).unwrap(), x);
        prop_assert_eq!(IntervalObject::from_label(x.site(), x.label()).unwrap(), x);
    }

    #[test]
    fn composition_is_associative(
        x in tube_object(3), y in tube_object(3), z in tube_object(3), w in tube_object(3),
    ) {
        let f = Rationals;
        let maps = |a: IntervalObject, b: IntervalObject| {
            hom_space(&a, &b).unwrap().basis.into_iter()
                .map(move |k| Morphism::basis(&f, a, b, k).unwrap())
                .collect::<Vec<_>>()
        };
        for p in maps(x, y) {
            for q in maps(y, z) {
                for r in maps(z, w) {
                    let left = r.compose(&f, &q.compose(&f, &p).unwrap()).unwrap();
                    let right = r.compose(&f, &q).unwrap().compose(&f, &p).unwrap();
                    prop_assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn series_ring_laws(a in series(6), b in series(6), c in series(6)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs.coeffs(), rhs.coeffs());
    }

    #[test]
    fn succ_and_pred_are_inverse(deck in -5i64..5, v in -50i64..50) {
        let z = Site::big_tube_int();
        let p = CoverPoint::new(deck, v);
        prop_assert_eq!(z.pred(z.succ(p).unwrap()).unwrap(), p);
        let c = Site::tube(4);
        let q = CoverPoint::new(deck, v.rem_euclid(4));
        prop_assert_eq!(c.succ(c.pred(q).unwrap()).unwrap(), q);
    }
}
