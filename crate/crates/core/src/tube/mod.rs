//! Indecomposable objects of tubes, big tubes and `rep_c L`.
//!
//! An indecomposable is an interval `[a, b]` of cover points. On a loop site
//! it is only defined up to the deck shift, and the stored representative has
//! its socle lift on deck 0. The socle is `vertex(a)`, the top is `vertex(b)`,
//! and the winding number is the largest `k ≥ 0` with `σ^k(a) ≤ b`.
//!
//! Labels `M(s,t;n)` map to `[(0,s), (n+δ,t)]` where `δ = 1` exactly when
//! `t < s` in the base order.

mod ar;
mod hom;
mod paths;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::site::{Base, CoverPoint, Site, Vertex};

pub use ar::{ar_sequence, ext_dim, irreducibles_in, irreducibles_out, tau, tau_inv, ArData};
pub use hom::{
    has_epi, has_mono, hom_dim, hom_space, hom_window, is_subobject, subobject_chain, HomSpace,
    Morphism, SubobjectChain,
};
pub use paths::{
    anchored_order, endo_simple_between, path_within_two, AnchoredOrder, PathWitness,
    UnorientedWitness,
};

/// `M(s,t;n)`: socle, top and winding number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label {
    pub socle: Vertex,
    pub top: Vertex,
    pub winding: u64,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{};{})", self.socle, self.top, self.winding)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalObject {
    site: Site,
    a: CoverPoint,
    b: CoverPoint,
}

impl IntervalObject {
    /// Builds `[a, b]`, normalizing loop representatives to deck 0.
    pub fn from_cover(site: Site, a: CoverPoint, b: CoverPoint) -> Result<Self> {
        site.check_point(a)?;
        site.check_point(b)?;
        if a > b {
            return Err(Error::InvalidLabel(format!("empty interval [{a}, {b}]")));
        }
        let (a, b) = if site.is_loop() {
            let d = a.deck;
            (
                CoverPoint { deck: 0, ..a },
                CoverPoint {
                    deck: b.deck - d,
                    ..b
                },
            )
        } else {
            (a, b)
        };
        Ok(Self { site, a, b })
    }

    /// `M(socle, top; winding)`.
    pub fn make(site: Site, socle: Vertex, top: Vertex, winding: u64) -> Result<Self> {
        site.check_vertex(socle)?;
        site.check_vertex(top)?;
        if !site.is_loop() {
            if winding > 0 {
                return Err(Error::InvalidLabel(
                    "winding must be 0 on a linear site".into(),
                ));
            }
            if top < socle {
                return Err(Error::InvalidLabel(format!(
                    "top {top} lies below socle {socle}"
                )));
            }
        }
        let delta = i64::from(top < socle);
        let a = CoverPoint {
            deck: 0,
            vertex: socle,
        };
        let b = CoverPoint {
            deck: delta + winding as i64,
            vertex: top,
        };
        Self::from_cover(site, a, b)
    }

    pub fn simple(site: Site, v: Vertex) -> Result<Self> {
        Self::make(site, v, v, 0)
    }

    pub fn from_label(site: Site, label: Label) -> Result<Self> {
        Self::make(site, label.socle, label.top, label.winding)
    }

    pub fn site(&self) -> Site {
        self.site
    }

    /// Socle lift.
    pub fn a(&self) -> CoverPoint {
        self.a
    }

    /// Top lift.
    pub fn b(&self) -> CoverPoint {
        self.b
    }

    pub fn socle(&self) -> Vertex {
        self.a.vertex
    }

    pub fn top(&self) -> Vertex {
        self.b.vertex
    }

    pub fn winding(&self) -> u64 {
        if self.site.is_loop() {
            Site::greatest_shift_below(self.a, self.b) as u64
        } else {
            0
        }
    }

    pub fn label(&self) -> Label {
        Label {
            socle: self.socle(),
            top: self.top(),
            winding: self.winding(),
        }
    }

    pub fn is_simple(&self) -> bool {
        self.a == self.b
    }

    /// Number of composition factors, `None` for infinite length.
    pub fn length(&self) -> Option<u64> {
        let (a, b) = (self.a, self.b);
        match (self.site.base(), a.vertex, b.vertex) {
            (Base::Cyclic(_), _, _) => {
                Some((self.site.flatten(b).unwrap() - self.site.flatten(a).unwrap()) as u64 + 1)
            }
            (_, Vertex::Int(x), Vertex::Int(y)) if a.deck == b.deck => Some((y - x) as u64 + 1),
            (_, Vertex::Pair([i, x]), Vertex::Pair([j, y])) if a.deck == b.deck && i == j => {
                Some((y - x) as u64 + 1)
            }
            _ => None,
        }
    }

    pub fn is_finite_length(&self) -> bool {
        self.length().is_some()
    }

    /// Cover points from socle to top.
    pub fn points(&self) -> Result<Vec<CoverPoint>> {
        let len = self.length().ok_or(Error::InfiniteLength)?;
        let mut out = Vec::with_capacity(len as usize);
        let mut p = self.a;
        out.push(p);
        while p != self.b {
            p = self.site.succ(p)?;
            out.push(p);
        }
        Ok(out)
    }

    /// Projective objects exist only on linear sites with a minimum.
    pub fn is_projective(&self) -> bool {
        self.site.pred(self.a).is_err()
    }

    pub fn is_injective(&self) -> bool {
        self.site.succ(self.b).is_err()
    }

    pub(crate) fn same_site(&self, other: &Self) -> Result<()> {
        if self.site == other.site {
            Ok(())
        } else {
            Err(Error::SiteMismatch)
        }
    }

    pub(crate) fn interval(&self, a: CoverPoint, b: CoverPoint) -> Result<Self> {
        Self::from_cover(self.site, a, b)
    }
}

/// Serializes through the label, which determines the object given its site.
impl Serialize for IntervalObject {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.label().serialize(s)
    }
}

impl fmt::Display for IntervalObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.label().fmt(f)
    }
}
