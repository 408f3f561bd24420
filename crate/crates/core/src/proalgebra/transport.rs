//! Equivalences induced by order automorphisms of the base.
//!
//! A bijection of base vertices that commutes with `succ` lifts to the
//! cover and carries intervals to intervals, keeping winding. Hom spaces
//! keep their shift basis, and the ray algebra keeps its slots when the
//! anchor is moved along.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::rays::{inj_matrix_algebra, SeriesMatrixAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::site::{Base, CoverPoint, Site, Vertex};
use crate::tube::{ar_sequence, ext_dim, hom_dim, hom_space, tau, IntervalObject, Morphism};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BaseBijection {
    Identity,
    /// `v ↦ v + k (mod r)` on a cyclic base.
    Rotate {
        by: i64,
    },
    /// `v ↦ v + k` on the integers.
    Translate {
        by: i64,
    },
    /// `(i, j) ↦ (i + c, j + k)` on lexicographic pairs.
    TranslatePairs {
        by: [i64; 2],
    },
    /// An explicit table on a finite base.
    Table {
        map: Vec<(Vertex, Vertex)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transport {
    pub site: Site,
    pub map: BaseBijection,
}

fn not_monotone(msg: impl Into<String>) -> Error {
    Error::NotOrderPreserving(msg.into())
}

/// Validates the bijection; tables are reduced to the rotation or identity
/// they must be.
pub fn transport(source: Site, target: Site, map: BaseBijection) -> Result<Transport> {
    if source != target {
        return Err(not_monotone(format!(
            "{source} and {target} have different base orders"
        )));
    }
    let site = source;
    let map = match (map, site.base()) {
        (BaseBijection::Identity, _) => BaseBijection::Identity,
        (BaseBijection::Rotate { by }, Base::Cyclic(r)) => BaseBijection::Rotate {
            by: by.rem_euclid(r as i64),
        },
        (m @ BaseBijection::Translate { .. }, Base::Int) => m,
        (m @ BaseBijection::TranslatePairs { .. }, Base::IntPairsLex) => m,
        (BaseBijection::Table { map }, Base::Cyclic(_) | Base::Finite(_)) => {
            table_to_shift(site, &map)?
        }
        (m, _) => return Err(not_monotone(format!("{m:?} does not act on {site}"))),
    };
    Ok(Transport { site, map })
}

fn table_to_shift(site: Site, pairs: &[(Vertex, Vertex)]) -> Result<BaseBijection> {
    let vertices = site.vertices().expect("finite base");
    let table: BTreeMap<Vertex, Vertex> = pairs.iter().cloned().collect();
    let mut images: Vec<Vertex> = table.values().cloned().collect();
    images.sort();
    images.dedup();
    if table.keys().cloned().collect::<Vec<_>>() != vertices || images != vertices {
        return Err(not_monotone(
            "table is not a bijection of the base vertices",
        ));
    }
    let offset = table[&vertices[0]].int().unwrap() - vertices[0].int().unwrap();
    let candidate = match site.base() {
        Base::Cyclic(_) => BaseBijection::Rotate { by: offset },
        _ if offset == 0 => BaseBijection::Identity,
        _ => return Err(not_monotone("a finite line has no nontrivial automorphism")),
    };
    let t = Transport {
        site,
        map: candidate.clone(),
    };
    for (&v, &w) in &table {
        if t.vertex(v) != w {
            return Err(not_monotone(format!("{v} ↦ {w} breaks succ")));
        }
    }
    Ok(if offset == 0 {
        BaseBijection::Identity
    } else {
        candidate
    })
}

impl Transport {
    pub fn vertex(&self, v: Vertex) -> Vertex {
        self.point(CoverPoint { deck: 0, vertex: v }).vertex
    }

    pub fn point(&self, p: CoverPoint) -> CoverPoint {
        match (&self.map, p.vertex) {
            (BaseBijection::Rotate { by }, _) => self
                .site
                .unflatten(self.site.flatten(p).unwrap() + by)
                .unwrap(),
            (BaseBijection::Translate { by }, Vertex::Int(v)) => CoverPoint::new(p.deck, v + by),
            (BaseBijection::TranslatePairs { by: [c, k] }, Vertex::Pair([i, j])) => CoverPoint {
                deck: p.deck,
                vertex: Vertex::Pair([i + c, j + k]),
            },
            _ => p,
        }
    }

    pub fn object(&self, x: &IntervalObject) -> Result<IntervalObject> {
        if x.site() != self.site {
            return Err(Error::SiteMismatch);
        }
        IntervalObject::from_cover(self.site, self.point(x.a()), self.point(x.b()))
    }

    /// Deck of the image of the socle lift, before renormalizing to deck 0.
    fn deck_offset(&self, x: &IntervalObject) -> i64 {
        self.point(x.a()).deck - x.a().deck
    }

    /// Image of the basis shift `k` of `Hom(X, Y)`.
    pub fn shift(&self, x: &IntervalObject, y: &IntervalObject, k: i64) -> i64 {
        k + self.deck_offset(y) - self.deck_offset(x)
    }

    pub fn morphism<E: Clone + PartialEq>(&self, f: &Morphism<E>) -> Result<Morphism<E>> {
        let coeffs = f
            .coeffs
            .iter()
            .map(|(&k, c)| (self.shift(&f.source, &f.target, k), c.clone()))
            .collect();
        Ok(Morphism {
            source: self.object(&f.source)?,
            target: self.object(&f.target)?,
            coeffs,
        })
    }

    /// The ray algebra on the image keep set, anchored at the image anchor.
    pub fn ray_algebra(
        &self,
        keep: &[Vertex],
        anchor: Option<Vertex>,
        precision: usize,
    ) -> Result<SeriesMatrixAlgebra> {
        let anchor = anchor.unwrap_or_else(|| *keep.iter().min().expect("nonempty keep"));
        let keep: Vec<Vertex> = keep.iter().map(|&v| self.vertex(v)).collect();
        inj_matrix_algebra(self.site, &keep, Some(self.vertex(anchor)), precision)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub hom: bool,
    pub ext: bool,
    pub hom_basis: bool,
    pub tau: bool,
    pub ar: bool,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.hom && self.ext && self.hom_basis && self.tau && self.ar
    }
}

/// Compares the invariants of `(X, Y)` with those of their images.
pub fn check_invariance(
    t: &Transport,
    x: &IntervalObject,
    y: &IntervalObject,
) -> Result<InvarianceReport> {
    let (tx, ty) = (t.object(x)?, t.object(y)?);
    let hom = hom_dim(x, y)? == hom_dim(&tx, &ty)?;
    let ext = ext_dim(x, y)? == ext_dim(&tx, &ty)?;
    let moved: Vec<i64> = hom_space(x, y)?
        .basis
        .iter()
        .map(|&k| t.shift(x, y, k))
        .collect();
    let hom_basis = moved == hom_space(&tx, &ty)?.basis;
    let tau = match (tau(x), tau(&tx)) {
        (Ok(a), Ok(b)) => t.object(&a)? == b,
        (Err(a), Err(b)) => a == b,
        _ => false,
    };
    let ar = match (ar_sequence(x), ar_sequence(&tx)) {
        (Ok(a), Ok(b)) => {
            let middle = a
                .middle
                .iter()
                .map(|m| t.object(m))
                .collect::<Result<Vec<_>>>()?;
            t.object(&a.start)? == b.start && middle == b.middle && t.object(&a.end)? == b.end
        }
        (Err(a), Err(b)) => a == b,
        _ => false,
    };
    Ok(InvarianceReport {
        hom,
        ext,
        hom_basis,
        tau,
        ar,
    })
}

/// The composite of transported maps equals the transported composite.
pub fn commutes_with_composition<F: Field>(
    field: &F,
    t: &Transport,
    g: &Morphism<F::Elem>,
    f: &Morphism<F::Elem>,
) -> Result<bool> {
    let lhs = t.morphism(&g.compose(field, f)?)?;
    let rhs = t.morphism(g)?.compose(field, &t.morphism(f)?)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn v(x: i64) -> Vertex {
        Vertex::Int(x)
    }

    fn obj(site: Site, s: i64, t: i64, n: u64) -> IntervalObject {
        IntervalObject::make(site, v(s), v(t), n).unwrap()
    }

    #[test]
    fn identity_is_identity() {
        let c3 = Site::tube(3);
        let t = transport(c3, c3, BaseBijection::Identity).unwrap();
        let x = obj(c3, 1, 0, 2);
        assert_eq!(t.object(&x), Ok(x));
    }

    #[test]
    fn rotation_moves_labels() {
        let c3 = Site::tube(3);
        let t = transport(c3, c3, BaseBijection::Rotate { by: 1 }).unwrap();
        assert_eq!(t.object(&obj(c3, 2, 0, 1)), Ok(obj(c3, 0, 1, 1)));
        let x = obj(c3, 2, 2, 0);
        assert!(check_invariance(&t, &x, &obj(c3, 0, 2, 1))
            .unwrap()
            .passed());
    }

    #[test]
    fn tables() {
        let c3 = Site::tube(3);
        let rot = vec![(v(0), v(2)), (v(1), v(0)), (v(2), v(1))];
        let t = transport(c3, c3, BaseBijection::Table { map: rot }).unwrap();
        assert_eq!(t.map, BaseBijection::Rotate { by: 2 });
        let swap = vec![(v(0), v(1)), (v(1), v(0)), (v(2), v(2))];
        assert!(matches!(
            transport(c3, c3, BaseBijection::Table { map: swap }),
            Err(Error::NotOrderPreserving(_))
        ));
        let a3 = Site::linear_finite(3);
        let shift = vec![(v(1), v(2)), (v(2), v(3)), (v(3), v(1))];
        assert!(transport(a3, a3, BaseBijection::Table { map: shift }).is_err());
        assert!(transport(c3, Site::tube(4), BaseBijection::Identity).is_err());
    }

    #[test]
    fn translate_and_compose() {
        let f = PrimeField::default();
        let z = Site::big_tube_int();
        let t = transport(z, z, BaseBijection::Translate { by: 1 }).unwrap();
        let x = obj(z, 0, 2, 1);
        let y = obj(z, 1, 3, 1);
        let w = obj(z, 2, 1, 2);
        let fxy = Morphism::basis(&f, x, y, 0).unwrap();
        let gyw = Morphism::basis(&f, y, w, 1).unwrap();
        assert!(commutes_with_composition(&f, &t, &gyw, &fxy).unwrap());
        let c2 = Site::tube(2);
        let r = transport(c2, c2, BaseBijection::Rotate { by: 1 }).unwrap();
        let (x, y) = (obj(c2, 1, 1, 1), obj(c2, 0, 1, 1));
        let g = Morphism::basis(&f, x, y, 1).unwrap();
        let h = Morphism::basis(&f, y, x, 0).unwrap();
        assert!(commutes_with_composition(&f, &r, &h, &g).unwrap());
        assert_eq!(
            r.morphism(&g).unwrap().coeffs.keys().collect::<Vec<_>>(),
            [&0]
        );
        let alg = inj_matrix_algebra(z, &[v(4), v(-2), v(7)], None, 8).unwrap();
        assert_eq!(
            t.ray_algebra(&[v(4), v(-2), v(7)], None, 8)
                .unwrap()
                .pattern,
            alg.pattern
        );
    }
}
