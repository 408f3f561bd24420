//! Hom spaces between interval objects.
//!
//! A nonzero map `[a_X, b_X] → [a_Y, b_Y]` factors as a quotient of `X`
//! followed by a subobject of a shifted copy `σ^k Y`. On the cover this is
//! the condition `a_X ≤ σ^k(a_Y) ≤ b_X ≤ σ^k(b_Y)`, and each such `k` gives
//! one basis map `f_k` with image `[σ^k(a_Y), b_X]`.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::IntervalObject;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::site::{CoverPoint, Site};

/// Shift of a cover point, the identity on linear sites (where only `k = 0`
/// ever occurs).
pub(crate) fn shifted(site: Site, p: CoverPoint, k: i64) -> CoverPoint {
    if site.is_loop() {
        CoverPoint {
            deck: p.deck + k,
            vertex: p.vertex,
        }
    } else {
        debug_assert_eq!(k, 0);
        p
    }
}

/// The inclusive range of shifts `k` carrying a basis map `X → Y`.
pub fn hom_window(x: &IntervalObject, y: &IntervalObject) -> Result<Option<(i64, i64)>> {
    x.same_site(y)?;
    let (ax, bx, ay, by) = (x.a, x.b, y.a, y.b);
    let window = if x.site.is_loop() {
        let lo = Site::least_shift_above(ay, ax).max(Site::least_shift_above(by, bx));
        let hi = Site::greatest_shift_below(ay, bx);
        (lo, hi)
    } else if ax <= ay && ay <= bx && bx <= by {
        (0, 0)
    } else {
        (1, 0)
    };
    Ok((window.0 <= window.1).then_some(window))
}

pub fn hom_dim(x: &IntervalObject, y: &IntervalObject) -> Result<u64> {
    Ok(hom_window(x, y)?.map_or(0, |(lo, hi)| (hi - lo + 1) as u64))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub source: IntervalObject,
    pub target: IntervalObject,
    pub basis: Vec<i64>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, k: i64) -> bool {
        self.basis.binary_search(&k).is_ok()
    }
}

impl Serialize for HomSpace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HomSpace", 2)?;
        st.serialize_field("dim", &self.basis.len())?;
        st.serialize_field("basis", &self.basis)?;
        st.end()
    }
}

pub fn hom_space(x: &IntervalObject, y: &IntervalObject) -> Result<HomSpace> {
    let basis = hom_window(x, y)?.map_or_else(Vec::new, |(lo, hi)| (lo..=hi).collect());
    Ok(HomSpace {
        source: *x,
        target: *y,
        basis,
    })
}

/// A linear combination of basis maps `f_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism<E> {
    pub source: IntervalObject,
    pub target: IntervalObject,
    pub coeffs: BTreeMap<i64, E>,
}

impl<E: Clone + PartialEq> Morphism<E> {
    pub fn zero(source: IntervalObject, target: IntervalObject) -> Self {
        Self {
            source,
            target,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis map `f_k`, if `k` lies in the hom window.
    pub fn basis<F: Field<Elem = E>>(
        field: &F,
        source: IntervalObject,
        target: IntervalObject,
        k: i64,
    ) -> Result<Self> {
        let space = hom_space(&source, &target)?;
        if !space.contains(k) {
            return Err(Error::CompositionMismatch);
        }
        let mut m = Self::zero(source, target);
        m.coeffs.insert(k, field.one());
        Ok(m)
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, x: IntervalObject) -> Self {
        let mut m = Self::zero(x, x);
        m.coeffs.insert(0, field.one());
        m
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.coeffs.values().all(|c| field.is_zero(c))
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::CompositionMismatch);
        }
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            let sum = match out.coeffs.get(k) {
                Some(d) => field.add(d, c),
                None => c.clone(),
            };
            out.coeffs.insert(*k, sum);
        }
        out.coeffs.retain(|_, c| !field.is_zero(c));
        Ok(out)
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v = field.mul(v, c);
        }
        out.coeffs.retain(|_, c| !field.is_zero(c));
        out
    }

    /// `g ∘ f` for `f: X → Y` and `g = self: Y → Z`. The basis rule is
    /// `g_l ∘ f_k = f_{k+l}` when `σ^{k+l}(a_Z) ≤ b_X`, and zero otherwise.
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, f: &Self) -> Result<Self> {
        if f.target != self.source {
            return Err(Error::CompositionMismatch);
        }
        let (x, z) = (f.source, self.target);
        let mut out = Self::zero(x, z);
        for (k, c) in &f.coeffs {
            for (l, d) in &self.coeffs {
                if shifted(x.site, z.a, k + l) > x.b {
                    continue;
                }
                let prod = field.mul(c, d);
                let sum = match out.coeffs.get(&(k + l)) {
                    Some(e) => field.add(e, &prod),
                    None => prod,
                };
                out.coeffs.insert(k + l, sum);
            }
        }
        out.coeffs.retain(|_, c| !field.is_zero(c));
        Ok(out)
    }
}

/// Some basis map is a monomorphism: `σ^k(a_Y) = a_X` inside the window.
pub fn has_mono(x: &IntervalObject, y: &IntervalObject) -> Result<bool> {
    Ok(hom_space(x, y)?
        .basis
        .iter()
        .any(|&k| shifted(x.site, y.a, k) == x.a))
}

/// Some basis map is an epimorphism: `σ^k(b_Y) = b_X` inside the window.
pub fn has_epi(x: &IntervalObject, y: &IntervalObject) -> Result<bool> {
    Ok(hom_space(x, y)?
        .basis
        .iter()
        .any(|&k| shifted(x.site, y.b, k) == x.b))
}

pub fn is_subobject(x: &IntervalObject, y: &IntervalObject) -> Result<bool> {
    has_mono(x, y)
}

/// The chain `0 ⊂ [a,a] ⊂ [a, succ a] ⊂ …`; `None` stands for the zero object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubobjectChain {
    pub entries: Vec<Option<IntervalObject>>,
    pub complete: bool,
}

pub fn subobject_chain(x: &IntervalObject, limit: usize) -> SubobjectChain {
    let mut entries = Vec::new();
    if limit > 0 {
        entries.push(None);
    }
    let mut top = x.a;
    let mut complete = false;
    while entries.len() < limit {
        entries.push(Some(IntervalObject {
            site: x.site,
            a: x.a,
            b: top,
        }));
        if top == x.b {
            complete = true;
            break;
        }
        top = x.site.succ(top).expect("interval end lies inside the site");
    }
    SubobjectChain { entries, complete }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::site::Vertex;

    fn obj(site: Site, s: i64, t: i64, n: u64) -> IntervalObject {
        IntervalObject::make(site, Vertex::Int(s), Vertex::Int(t), n).unwrap()
    }

    #[test]
    fn hom_examples() {
        let c2 = Site::tube(2);
        assert_eq!(hom_dim(&obj(c2, 0, 0, 1), &obj(c2, 1, 0, 0)), Ok(1));
        assert_eq!(hom_dim(&obj(c2, 0, 0, 0), &obj(c2, 0, 0, 0)), Ok(1));
        assert_eq!(hom_dim(&obj(c2, 0, 0, 0), &obj(c2, 1, 1, 0)), Ok(0));
        let z = Site::big_tube_int();
        let hs = hom_space(&obj(z, 2, 9, 1), &obj(z, 4, 6, 2)).unwrap();
        assert_eq!(hs.basis, vec![0, 1]);
        assert_eq!(
            serde_json::to_string(&hs).unwrap(),
            r#"{"dim":2,"basis":[0,1]}"#
        );
        assert_eq!(
            hom_dim(&obj(c2, 0, 0, 0), &obj(z, 0, 0, 0)),
            Err(Error::SiteMismatch)
        );
    }

    #[test]
    fn rank_one_composition() {
        let f = Rationals;
        let c1 = Site::tube(1);
        let x = obj(c1, 0, 0, 2);
        assert_eq!(x.length(), Some(3));
        let f1 = Morphism::basis(&f, x, x, 1).unwrap();
        let f2 = Morphism::basis(&f, x, x, 2).unwrap();
        assert_eq!(f1.compose(&f, &f1).unwrap(), f2);
        assert!(f1.compose(&f, &f2).unwrap().is_zero(&f));
        let id = Morphism::identity(&f, x);
        assert_eq!(id.compose(&f, &f1).unwrap(), f1);
        assert_eq!(f1.compose(&f, &id).unwrap(), f1);
    }

    #[test]
    fn mono_then_epi() {
        let f = Rationals;
        let z = Site::big_tube_int();
        let x = obj(z, 0, 2, 0);
        let y = x.interval(x.a, x.site.succ(x.b).unwrap()).unwrap();
        let w = y.interval(y.site.succ(y.a).unwrap(), y.b).unwrap();
        assert!(has_mono(&x, &y).unwrap());
        assert!(has_epi(&y, &w).unwrap());
        let m = Morphism::basis(&f, x, y, 0).unwrap();
        let e = Morphism::basis(&f, y, w, 0).unwrap();
        let c = e.compose(&f, &m).unwrap();
        assert_eq!(c, Morphism::basis(&f, x, w, 0).unwrap());
    }

    #[test]
    fn mono_epi_examples() {
        let z = Site::big_tube_int();
        assert!(has_mono(&obj(z, 0, 0, 1), &obj(z, 0, 1, 1)).unwrap());
        let c2 = Site::tube(2);
        assert!(has_epi(&obj(c2, 0, 0, 1), &obj(c2, 1, 0, 0)).unwrap());
        assert!(!has_mono(&obj(c2, 0, 0, 1), &obj(c2, 1, 0, 0)).unwrap());
    }

    #[test]
    fn chains() {
        let c2 = Site::tube(2);
        let s = obj(c2, 0, 0, 0);
        let ch = subobject_chain(&s, 10);
        assert_eq!(ch.entries, vec![None, Some(s)]);
        assert!(ch.complete);

        let x = obj(c2, 0, 0, 1);
        let ch = subobject_chain(&x, 10);
        let expect = vec![None, Some(s), Some(obj(c2, 0, 1, 0)), Some(x)];
        assert_eq!(ch.entries, expect);

        let z = Site::big_tube_int();
        let ch = subobject_chain(&obj(z, 0, 0, 1), 4);
        assert_eq!(ch.entries.len(), 4);
        assert!(!ch.complete);
    }

    #[test]
    fn linear_hom() {
        let l = Site::linear_finite(4);
        let x = obj(l, 1, 2, 0);
        let y = obj(l, 2, 4, 0);
        assert_eq!(hom_dim(&x, &y), Ok(1));
        assert_eq!(hom_dim(&y, &x), Ok(0));
        assert_eq!(hom_dim(&obj(l, 1, 1, 0), &obj(l, 2, 2, 0)), Ok(0));
    }
}
