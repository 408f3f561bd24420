//! Perpendicular categories to all simples outside a finite keep set.
//!
//! An object `[a, b]` is perpendicular to the dropped simples when
//! `Hom(S_v, X) = 0` and `Ext¹(S_v, X) = 0` for every dropped `v`, which
//! amounts to `socle ∈ keep` and `succ(top) ∈ keep` (or `top` maximal on a
//! finite line). The perpendicular category is a finite tube on loop sites
//! and a finite line on linear sites; its simples are the intervals running
//! from one kept vertex up to just below the next.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::site::{Base, CoverPoint, Kind, Site, Vertex};
use crate::tube::{hom_dim, IntervalObject};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerpPresentation {
    pub ambient: Site,
    /// Kept vertices in base order; inner vertex `i` corresponds to `keep[i]`
    /// (shifted by one on finite inner sites, whose vertices start at 1).
    pub keep: Vec<Vertex>,
    pub inner: Site,
}

pub fn perp(ambient: Site, keep: &[Vertex]) -> Result<PerpPresentation> {
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    for &v in keep {
        ambient.check_vertex(v)?;
    }
    let mut keep = keep.to_vec();
    keep.sort();
    keep.dedup();
    let m = keep.len() as u32;
    let inner = match (ambient.kind(), ambient.base()) {
        (Kind::Loop, _) => Site::tube(m),
        (Kind::Linear, Base::Finite(_)) => Site::linear_finite(m),
        (Kind::Linear, _) if m == 1 => {
            return Err(Error::EmptySubcategory(format!("{keep:?}")));
        }
        (Kind::Linear, _) => Site::linear_finite(m - 1),
    };
    Ok(PerpPresentation {
        ambient,
        keep,
        inner,
    })
}

impl PerpPresentation {
    fn index(&self, v: Vertex) -> Option<usize> {
        self.keep.binary_search(&v).ok()
    }

    /// Position of a kept vertex as an inner vertex.
    fn inner_vertex(&self, i: usize) -> Vertex {
        if self.inner.is_loop() {
            Vertex::Int(i as i64)
        } else {
            Vertex::Int(i as i64 + 1)
        }
    }

    fn keep_position(&self, v: Vertex) -> usize {
        let i = v.int().expect("inner vertices are integers");
        if self.inner.is_loop() {
            i as usize
        } else {
            i as usize - 1
        }
    }

    /// Inner cover point `(d, j)` to the ambient point `(d, keep[j])`.
    fn lift(&self, p: CoverPoint) -> CoverPoint {
        CoverPoint {
            deck: p.deck,
            vertex: self.keep[self.keep_position(p.vertex)],
        }
    }

    fn unlift(&self, p: CoverPoint) -> Option<CoverPoint> {
        self.index(p.vertex).map(|i| CoverPoint {
            deck: p.deck,
            vertex: self.inner_vertex(i),
        })
    }

    pub fn contains(&self, x: &IntervalObject) -> Result<bool> {
        if x.site() != self.ambient {
            return Err(Error::SiteMismatch);
        }
        if self.index(x.socle()).is_none() {
            return Ok(false);
        }
        Ok(match self.ambient.succ(x.b()) {
            Ok(next) => self.index(next.vertex).is_some(),
            Err(_) => true,
        })
    }

    /// The exact embedding of the inner category.
    pub fn include(&self, x: &IntervalObject) -> Result<IntervalObject> {
        if x.site() != self.inner {
            return Err(Error::SiteMismatch);
        }
        let a = self.lift(x.a());
        let b = if self.inner.is_loop() {
            self.ambient.pred(self.lift(self.inner.succ(x.b())?))?
        } else {
            match self.keep.get(self.keep_position(x.top()) + 1) {
                Some(&next) => self.ambient.pred(CoverPoint {
                    deck: 0,
                    vertex: next,
                })?,
                None => CoverPoint {
                    deck: 0,
                    vertex: self
                        .ambient
                        .max_vertex()
                        .expect("only finite lines reach here"),
                },
            }
        };
        IntervalObject::from_cover(self.ambient, a, b)
    }

    /// The left adjoint of [`Self::include`]: keeps the kept composition
    /// factors of `X`, in order. `None` is the zero object.
    pub fn reflect(&self, x: &IntervalObject) -> Result<Option<IntervalObject>> {
        if x.site() != self.ambient {
            return Err(Error::SiteMismatch);
        }
        let (a, b) = (x.a(), x.b());
        let mut kept: Vec<CoverPoint> = Vec::new();
        for &k in &self.keep {
            let lo = a.deck + i64::from(k < a.vertex);
            let hi = b.deck - i64::from(k > b.vertex);
            kept.extend((lo..=hi).map(|d| CoverPoint { deck: d, vertex: k }));
        }
        let (Some(&first), Some(&last)) = (kept.iter().min(), kept.iter().max()) else {
            return Ok(None);
        };
        if !self.ambient.is_loop() && self.ambient.max_vertex().is_none() {
            // On an unbounded line the last kept vertex has no simple of its
            // own; anything reaching it is killed.
            if last.vertex == *self.keep.last().unwrap() {
                return Ok(None);
            }
        }
        let p = self.unlift(first).unwrap();
        let q = self.unlift(last).unwrap();
        IntervalObject::from_cover(self.inner, p, q).map(Some)
    }

    /// Simple objects of the perpendicular category, in inner vertex order.
    pub fn simples(&self) -> Vec<IntervalObject> {
        let n = self.inner.rank().expect("inner sites are finite");
        (0..n)
            .map(|i| {
                let s = IntervalObject::simple(self.inner, self.inner_vertex(i)).unwrap();
                self.include(&s).unwrap()
            })
            .collect()
    }

    /// `dim Hom(X, Y)` computed inside the inner category.
    pub fn hom_via_window(&self, x: &IntervalObject, y: &IntervalObject) -> Result<u64> {
        if !self.contains(x)? || !self.contains(y)? {
            return Err(Error::NotInSubcategory);
        }
        let xi = self.reflect(x)?.ok_or(Error::NotInSubcategory)?;
        let yi = self.reflect(y)?.ok_or(Error::NotInSubcategory)?;
        hom_dim(&xi, &yi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64) -> Vertex {
        Vertex::Int(x)
    }

    fn obj(site: Site, s: i64, t: i64, n: u64) -> IntervalObject {
        IntervalObject::make(site, v(s), v(t), n).unwrap()
    }

    #[test]
    fn keep_zero_five() {
        let z = Site::big_tube_int();
        let pp = perp(z, &[v(5), v(0)]).unwrap();
        assert_eq!(pp.inner, Site::tube(2));
        assert_eq!(pp.simples(), vec![obj(z, 0, 4, 0), obj(z, 5, -1, 0)]);
        for s in pp.simples() {
            assert_eq!(hom_dim(&s, &s), Ok(1));
            assert!(pp.contains(&s).unwrap());
        }
        let inner = obj(pp.inner, 0, 0, 1);
        let x = pp.include(&inner).unwrap();
        assert_eq!(x, obj(z, 0, 4, 1));
        assert_eq!(pp.reflect(&x), Ok(Some(inner)));
    }

    #[test]
    fn reflect_examples() {
        let z = Site::big_tube_int();
        let pp = perp(z, &[v(0), v(5)]).unwrap();
        assert_eq!(
            pp.reflect(&obj(z, 3, 8, 0)),
            Ok(Some(obj(pp.inner, 1, 1, 0)))
        );
        assert_eq!(pp.reflect(&obj(z, 1, 4, 0)), Ok(None));
        assert_eq!(
            pp.hom_via_window(&obj(z, 0, 4, 1), &obj(z, 5, -1, 0)),
            hom_dim(&obj(z, 0, 4, 1), &obj(z, 5, -1, 0))
        );
        assert_eq!(
            pp.hom_via_window(&obj(z, 1, 4, 0), &obj(z, 0, 4, 0)),
            Err(Error::NotInSubcategory)
        );
    }

    #[test]
    fn identity_presentation() {
        let c3 = Site::tube(3);
        let pp = perp(c3, &[v(0), v(1), v(2)]).unwrap();
        assert_eq!(pp.inner, c3);
        for s in 0..3 {
            for n in 0..3 {
                let x = obj(c3, s, (s + 2) % 3, n);
                assert_eq!(pp.include(&x), Ok(x));
                assert_eq!(pp.reflect(&x), Ok(Some(x)));
            }
        }
    }

    #[test]
    fn linear_sites() {
        let l = Site::linear_int();
        let pp = perp(l, &[v(1), v(2), v(3)]).unwrap();
        assert_eq!(pp.inner, Site::linear_finite(2));
        assert_eq!(pp.simples(), vec![obj(l, 1, 1, 0), obj(l, 2, 2, 0)]);
        assert_eq!(pp.reflect(&obj(l, 2, 3, 0)), Ok(None));
        assert_eq!(
            perp(l, &[v(4)]),
            Err(Error::EmptySubcategory("[Int(4)]".into()))
        );

        let a5 = Site::linear_finite(5);
        let pp = perp(a5, &[v(1), v(2), v(3)]).unwrap();
        assert_eq!(pp.inner, Site::linear_finite(3));
        assert_eq!(
            pp.simples(),
            vec![obj(a5, 1, 1, 0), obj(a5, 2, 2, 0), obj(a5, 3, 5, 0)]
        );
        assert_eq!(perp(a5, &[]), Err(Error::EmptyKeepSet));
    }
}
