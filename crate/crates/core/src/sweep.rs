//! Enumeration of small objects and comparison with the matrix oracle.

use rand::Rng;
use serde::Serialize;

use crate::error::Result;
use crate::field::Field;
use crate::oracle::{oracle_ext_dim, oracle_hom_dim, realize};
use crate::site::{Base, CoverPoint, Kind, Site, Vertex};
use crate::tube::{ext_dim, hom_dim, IntervalObject};

/// Every indecomposable of a finite tube or finite line of length at most
/// `max_len`, ordered by length and then socle.
pub fn objects_up_to_length(site: Site, max_len: u64) -> Vec<IntervalObject> {
    let Some(vertices) = site.vertices() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for len in 1..=max_len {
        for &v in &vertices {
            let a = CoverPoint { deck: 0, vertex: v };
            let mut b = a;
            let mut ok = true;
            for _ in 1..len {
                match site.succ(b) {
                    Ok(next) => b = next,
                    Err(_) => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                out.push(IntervalObject::from_cover(site, a, b).expect("a ≤ b"));
            }
        }
    }
    out
}

/// All labels `M(s,t;n)` of a finite tube with `n ≤ max_winding`.
pub fn objects_up_to_winding(rank: u32, max_winding: u64) -> Vec<IntervalObject> {
    let site = Site::tube(rank);
    let vs = site.vertices().unwrap();
    let mut out = Vec::new();
    for n in 0..=max_winding {
        for &s in &vs {
            for &t in &vs {
                out.push(IntervalObject::make(site, s, t, n).expect("valid label"));
            }
        }
    }
    out
}

/// A random vertex, drawn from `[-window, window]` on unbounded bases
/// (both coordinates on pairs).
pub fn random_vertex<R: Rng>(site: Site, rng: &mut R, window: i64) -> Vertex {
    match site.base() {
        Base::Cyclic(r) => Vertex::Int(rng.gen_range(0..r as i64)),
        Base::Finite(n) => Vertex::Int(rng.gen_range(1..=n as i64)),
        Base::Int => Vertex::Int(rng.gen_range(-window..=window)),
        Base::IntPairsLex => Vertex::Pair([
            rng.gen_range(-window..=window),
            rng.gen_range(-window..=window),
        ]),
    }
}

/// A random indecomposable; winding is at most `max_winding` on loop sites
/// and zero on linear ones.
pub fn random_object<R: Rng>(
    site: Site,
    rng: &mut R,
    window: i64,
    max_winding: u64,
) -> IntervalObject {
    let s = random_vertex(site, rng, window);
    let t = random_vertex(site, rng, window);
    match site.kind() {
        Kind::Loop => {
            let n = rng.gen_range(0..=max_winding);
            IntervalObject::make(site, s, t, n).expect("valid loop label")
        }
        Kind::Linear => IntervalObject::make(site, s.min(t), s.max(t), 0).expect("s ≤ t"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub from: IntervalObject,
    pub to: IntervalObject,
    pub quantity: &'static str,
    pub combinatorial: u64,
    pub oracle: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub pairs: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Compares `hom_dim` and `ext_dim` with the oracle on all ordered pairs.
pub fn oracle_sweep<F: Field>(field: &F, objects: &[IntervalObject]) -> Result<SweepReport> {
    let reps = objects
        .iter()
        .map(|x| realize(field, x))
        .collect::<Result<Vec<_>>>()?;
    let mut mismatches = Vec::new();
    let mut pairs = 0;
    for (x, mx) in objects.iter().zip(&reps) {
        for (y, my) in objects.iter().zip(&reps) {
            pairs += 1;
            let checks = [
                ("hom", hom_dim(x, y)?, oracle_hom_dim(field, mx, my)? as u64),
                ("ext", ext_dim(x, y)?, oracle_ext_dim(field, mx, my)? as u64),
            ];
            for (quantity, combinatorial, oracle) in checks {
                if combinatorial != oracle {
                    mismatches.push(Mismatch {
                        from: *x,
                        to: *y,
                        quantity,
                        combinatorial,
                        oracle,
                    });
                }
            }
        }
    }
    Ok(SweepReport { pairs, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn counts() {
        assert_eq!(objects_up_to_length(Site::tube(3), 6).len(), 18);
        assert_eq!(objects_up_to_length(Site::linear_finite(3), 10).len(), 6);
        assert_eq!(objects_up_to_winding(2, 1).len(), 8);
        assert!(objects_up_to_length(Site::big_tube_int(), 2).is_empty());
    }

    #[test]
    fn random_objects_stay_in_range() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for site in [
            Site::big_tube_pairs(),
            Site::linear_finite(4),
            Site::tube(3),
        ] {
            for _ in 0..50 {
                let x = random_object(site, &mut rng, 3, 2);
                assert_eq!(x.site(), site);
                assert!(x.winding() <= 2);
            }
        }
    }

    #[test]
    fn small_sweep() {
        let objs = objects_up_to_length(Site::tube(2), 4);
        let report = oracle_sweep(&PrimeField::default(), &objs).unwrap();
        assert_eq!(report.pairs, 64);
        assert!(report.mismatches.is_empty());
    }
}
