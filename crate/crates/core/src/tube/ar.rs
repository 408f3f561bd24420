//! Auslander-Reiten translate, almost split sequences and irreducible maps.

use serde::Serialize;

use super::hom::hom_dim;
use super::IntervalObject;
use crate::error::{Error, Result};

/// `τ[a, b] = [pred a, pred b]`.
pub fn tau(x: &IntervalObject) -> Result<IntervalObject> {
    let a = x.site.pred(x.a).map_err(|_| Error::ProjectiveObject)?;
    let b = x.site.pred(x.b).expect("pred b exists when pred a does");
    x.interval(a, b)
}

/// `τ⁻[a, b] = [succ a, succ b]`.
pub fn tau_inv(x: &IntervalObject) -> Result<IntervalObject> {
    let b = x.site.succ(x.b).map_err(|_| Error::InjectiveObject)?;
    let a = x.site.succ(x.a).expect("succ a exists when succ b does");
    x.interval(a, b)
}

/// `dim Ext¹(X, Y) = dim Hom(Y, τX)`, zero from projectives.
pub fn ext_dim(x: &IntervalObject, y: &IntervalObject) -> Result<u64> {
    x.same_site(y)?;
    match tau(x) {
        Ok(t) => hom_dim(y, &t),
        Err(Error::ProjectiveObject) => Ok(0),
        Err(e) => Err(e),
    }
}

/// The almost split sequence `0 → start → ⊕ middle → end → 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArData {
    pub start: IntervalObject,
    pub middle: Vec<IntervalObject>,
    pub end: IntervalObject,
}

pub fn ar_sequence(x: &IntervalObject) -> Result<ArData> {
    let start = tau(x)?;
    let pa = x.site.pred(x.a)?;
    let pb = x.site.pred(x.b)?;
    let mut middle = vec![x.interval(pa, x.b)?];
    if pb >= x.a {
        middle.push(x.interval(x.a, pb)?);
    }
    Ok(ArData {
        start,
        middle,
        end: *x,
    })
}

/// Targets of irreducible maps out of `X`: the quotient by the socle, then
/// the one-point extension at the top.
pub fn irreducibles_out(x: &IntervalObject) -> Vec<IntervalObject> {
    let site = x.site;
    let mut out = Vec::with_capacity(2);
    if let Ok(a) = site.succ(x.a) {
        if a <= x.b {
            out.push(x.interval(a, x.b).unwrap());
        }
    }
    if let Ok(b) = site.succ(x.b) {
        out.push(x.interval(x.a, b).unwrap());
    }
    out
}

/// Sources of irreducible maps into `X`: the one-point extension at the
/// socle, then the subobject missing the top.
pub fn irreducibles_in(x: &IntervalObject) -> Vec<IntervalObject> {
    let site = x.site;
    let mut out = Vec::with_capacity(2);
    if let Ok(a) = site.pred(x.a) {
        out.push(x.interval(a, x.b).unwrap());
    }
    if let Ok(b) = site.pred(x.b) {
        if b >= x.a {
            out.push(x.interval(x.a, b).unwrap());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::site::{Site, Vertex};

    fn obj(site: Site, s: i64, t: i64, n: u64) -> IntervalObject {
        IntervalObject::make(site, Vertex::Int(s), Vertex::Int(t), n).unwrap()
    }

    #[test]
    fn tau_examples() {
        let c2 = Site::tube(2);
        assert_eq!(tau(&obj(c2, 0, 0, 0)), Ok(obj(c2, 1, 1, 0)));
        let z = Site::big_tube_int();
        assert_eq!(tau(&obj(z, 2, 9, 1)), Ok(obj(z, 1, 8, 1)));
        let l = Site::linear_finite(4);
        assert_eq!(tau(&obj(l, 1, 3, 0)), Err(Error::ProjectiveObject));
        assert_eq!(tau_inv(&obj(l, 2, 4, 0)), Err(Error::InjectiveObject));
        let x = obj(l, 2, 3, 0);
        assert_eq!(tau_inv(&tau(&x).unwrap()), Ok(x));
    }

    #[test]
    fn ext_examples() {
        let c2 = Site::tube(2);
        assert_eq!(ext_dim(&obj(c2, 0, 0, 0), &obj(c2, 1, 1, 0)), Ok(1));
        assert_eq!(ext_dim(&obj(c2, 0, 0, 0), &obj(c2, 0, 0, 0)), Ok(0));
        let l = Site::linear_finite(4);
        for t in 1..=4 {
            for s in 1..=t {
                assert_eq!(ext_dim(&obj(l, 1, 2, 0), &obj(l, s, t, 0)), Ok(0));
            }
        }
    }

    #[test]
    fn ar_examples() {
        let c2 = Site::tube(2);
        let seq = ar_sequence(&obj(c2, 0, 0, 0)).unwrap();
        assert_eq!(seq.start, obj(c2, 1, 1, 0));
        assert_eq!(seq.middle, vec![obj(c2, 1, 0, 0)]);

        let seq = ar_sequence(&obj(c2, 1, 0, 0)).unwrap();
        assert_eq!(seq.middle, vec![obj(c2, 0, 0, 1), obj(c2, 1, 1, 0)]);

        let c1 = Site::tube(1);
        let x = obj(c1, 0, 0, 3);
        let lens: Vec<_> = ar_sequence(&x)
            .unwrap()
            .middle
            .iter()
            .map(|m| m.length())
            .collect();
        assert_eq!(lens, vec![Some(5), Some(3)]);
    }

    #[test]
    fn irreducible_examples() {
        let c3 = Site::tube(3);
        let s = obj(c3, 1, 1, 0);
        assert_eq!(irreducibles_out(&s), vec![obj(c3, 1, 2, 0)]);
        assert_eq!(irreducibles_in(&s), vec![obj(c3, 0, 1, 0)]);

        let l = Site::linear_finite(3);
        let x = obj(l, 1, 2, 0);
        assert_eq!(irreducibles_in(&x), vec![obj(l, 1, 1, 0)]);
        assert_eq!(irreducibles_out(&x), vec![obj(l, 2, 2, 0), obj(l, 1, 3, 0)]);

        let z = Site::big_tube_int();
        let x = obj(z, 0, 0, 1);
        let out = irreducibles_out(&x);
        assert_eq!(out, vec![obj(z, 1, 0, 0), obj(z, 0, 1, 1)]);
    }
}
