//! Short paths between indecomposables and the anchored order on simples.

use std::cmp::Ordering;

use super::hom::{hom_dim, shifted};
use super::IntervalObject;
use crate::error::{Error, Result};
use crate::site::{CoverPoint, Site, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathWitness {
    Identity,
    /// `Hom(X, Y) ≠ 0`.
    Direct,
    /// `X → Z → Y` with both maps nonzero.
    Via(IntervalObject),
    /// No oriented path from `X` to `Y` exists.
    Unoriented(UnorientedWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnorientedWitness {
    /// `Hom(Y, X) ≠ 0`.
    Reverse,
    /// `Y → Z → X`.
    ReverseVia(IntervalObject),
    /// `X → Z ← Y`.
    Sink(IntervalObject),
    /// `X ← Z → Y`.
    Source(IntervalObject),
}

impl PathWitness {
    pub fn is_oriented(&self) -> bool {
        !matches!(self, PathWitness::Unoriented(_))
    }
}

fn nonzero(x: &IntervalObject, y: &IntervalObject) -> bool {
    hom_dim(x, y).is_ok_and(|d| d > 0)
}

/// The middle term of a two-step path `X → Z → Y`, when one exists.
///
/// Socles and tops only move up along nonzero maps, so after shifting `Y`
/// by the least `l` placing both of its ends above those of `X`, the object
/// `[a_X, max(b_X, σ^l a_Y)]` maps onto the relevant part of each side.
fn oriented_middle(x: &IntervalObject, y: &IntervalObject) -> Option<IntervalObject> {
    let site = x.site;
    let l = if site.is_loop() {
        Site::least_shift_above(y.a, x.a).max(Site::least_shift_above(y.b, x.b))
    } else if x.a <= y.a && x.b <= y.b {
        0
    } else {
        return None;
    };
    let top = x.b.max(shifted(site, y.a, l));
    let z = x.interval(x.a, top).ok()?;
    (nonzero(x, &z) && nonzero(&z, y)).then_some(z)
}

fn unoriented(x: &IntervalObject, y: &IntervalObject) -> Option<UnorientedWitness> {
    if nonzero(y, x) {
        return Some(UnorientedWitness::Reverse);
    }
    if let Some(z) = oriented_middle(y, x) {
        return Some(UnorientedWitness::ReverseVia(z));
    }
    let (lo_a, hi_a, hi_b) = (x.a.min(y.a), x.a.max(y.a), x.b.max(y.b));
    if let Ok(z) = x.interval(hi_a, hi_b) {
        if nonzero(x, &z) && nonzero(y, &z) {
            return Some(UnorientedWitness::Sink(z));
        }
    }
    if let Ok(z) = x.interval(lo_a, hi_a) {
        if nonzero(&z, x) && nonzero(&z, y) {
            return Some(UnorientedWitness::Source(z));
        }
    }
    None
}

/// A path of length at most two from `X` to `Y`, oriented when possible.
pub fn path_within_two(x: &IntervalObject, y: &IntervalObject) -> Result<PathWitness> {
    x.same_site(y)?;
    if x == y {
        return Ok(PathWitness::Identity);
    }
    if nonzero(x, y) {
        return Ok(PathWitness::Direct);
    }
    if let Some(z) = oriented_middle(x, y) {
        return Ok(PathWitness::Via(z));
    }
    unoriented(x, y)
        .map(PathWitness::Unoriented)
        .ok_or_else(|| Error::NoPath(x.to_string(), y.to_string()))
}

/// The unique winding-0 object with socle `S` and top `T`.
pub fn endo_simple_between(site: Site, s: Vertex, t: Vertex) -> Result<IntervalObject> {
    if !site.is_loop() && t < s {
        return Err(Error::NoPath(s.to_string(), t.to_string()));
    }
    IntervalObject::make(site, s, t, 0)
}

/// Simples ordered by inclusion of the endo-simple objects `[S, T]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnchoredOrder {
    site: Site,
    anchor: Vertex,
}

impl AnchoredOrder {
    pub fn anchor(&self) -> Vertex {
        self.anchor
    }

    /// Position of `T` as the top lift of `[S, T]`.
    pub fn key(&self, t: Vertex) -> Result<CoverPoint> {
        Ok(endo_simple_between(self.site, self.anchor, t)?.b)
    }

    pub fn compare(&self, t1: Vertex, t2: Vertex) -> Result<Ordering> {
        Ok(self.key(t1)?.cmp(&self.key(t2)?))
    }

    /// Sorts vertices increasingly in the anchored order.
    pub fn sort(&self, vs: &mut [Vertex]) -> Result<()> {
        for &v in vs.iter() {
            self.key(v)?;
        }
        vs.sort_by_key(|&v| self.key(v).unwrap());
        Ok(())
    }
}

pub fn anchored_order(site: Site, anchor: Vertex) -> Result<AnchoredOrder> {
    site.check_vertex(anchor)?;
    Ok(AnchoredOrder { site, anchor })
}
