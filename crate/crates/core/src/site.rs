//! Locally discrete linear orders, their covers and deck shifts.
//!
//! Every category in this crate lives on a [`Site`]. A loop site has a cover
//! `Z × L` ordered lexicographically, with the deck shift `σ` adding one to
//! the deck coordinate. For the cyclic base `cyclic(r)` the cover is the
//! integers and `σ = +r`; a point `z` is stored as `(z div r, z mod r)` so the
//! lexicographic order agrees with the integer order. Linear sites have no
//! shift and all points sit on deck 0.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the base order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Vertex {
    Int(i64),
    Pair([i64; 2]),
}

impl Vertex {
    pub fn int(self) -> Option<i64> {
        match self {
            Vertex::Int(v) => Some(v),
            Vertex::Pair(_) => None,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Int(v) => write!(f, "{v}"),
            Vertex::Pair([i, j]) => write!(f, "({i},{j})"),
        }
    }
}

impl From<i64> for Vertex {
    fn from(v: i64) -> Self {
        Vertex::Int(v)
    }
}

/// A point `(deck, vertex)` of the cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoverPoint {
    pub deck: i64,
    pub vertex: Vertex,
}

impl CoverPoint {
    pub fn new(deck: i64, vertex: impl Into<Vertex>) -> Self {
        Self {
            deck,
            vertex: vertex.into(),
        }
    }
}

impl fmt::Display for CoverPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{}", self.deck, self.vertex)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Loop,
    Linear,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    /// `0 < 1 < … < r-1`, only meaningful as the base of a loop.
    Cyclic(u32),
    Int,
    IntPairsLex,
    /// `1 < 2 < … < n`.
    Finite(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Site {
    kind: Kind,
    base: Base,
}

impl Site {
    pub fn new(kind: Kind, base: Base) -> Result<Self> {
        match (kind, base) {
            (_, Base::Cyclic(0)) | (_, Base::Finite(0)) => Err(Error::InvalidSite(
                "rank and size must be at least 1".into(),
            )),
            (Kind::Loop, Base::Finite(_)) => Err(Error::InvalidSite(
                "a finite order cannot carry a loop".into(),
            )),
            (Kind::Linear, Base::Cyclic(_)) => Err(Error::InvalidSite(
                "a cyclic base needs the loop kind".into(),
            )),
            _ => Ok(Self { kind, base }),
        }
    }

    /// The tube `nilp Ã_{r-1}`.
    pub fn tube(rank: u32) -> Self {
        Self::new(Kind::Loop, Base::Cyclic(rank)).expect("rank must be positive")
    }

    /// The big tube over `Z`.
    pub fn big_tube_int() -> Self {
        Self {
            kind: Kind::Loop,
            base: Base::Int,
        }
    }

    /// The big tube over `Z × Z` with the lexicographic order.
    pub fn big_tube_pairs() -> Self {
        Self {
            kind: Kind::Loop,
            base: Base::IntPairsLex,
        }
    }

    /// `rep A_n` with linear orientation.
    pub fn linear_finite(size: u32) -> Self {
        Self::new(Kind::Linear, Base::Finite(size)).expect("size must be positive")
    }

    pub fn linear_int() -> Self {
        Self {
            kind: Kind::Linear,
            base: Base::Int,
        }
    }

    pub fn linear_pairs() -> Self {
        Self {
            kind: Kind::Linear,
            base: Base::IntPairsLex,
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn is_loop(&self) -> bool {
        self.kind == Kind::Loop
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        let ok = match (self.base, v) {
            (Base::Cyclic(r), Vertex::Int(x)) => (0..r as i64).contains(&x),
            (Base::Finite(n), Vertex::Int(x)) => (1..=n as i64).contains(&x),
            (Base::Int, Vertex::Int(_)) => true,
            (Base::IntPairsLex, Vertex::Pair(_)) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidVertex(format!("{v} on {self}")))
        }
    }

    pub fn check_point(&self, p: CoverPoint) -> Result<()> {
        self.check_vertex(p.vertex)?;
        if !self.is_loop() && p.deck != 0 {
            return Err(Error::InvalidVertex(format!(
                "deck {} on a linear site",
                p.deck
            )));
        }
        Ok(())
    }

    pub fn succ(&self, p: CoverPoint) -> Result<CoverPoint> {
        let CoverPoint { deck, vertex } = p;
        Ok(match (self.base, vertex) {
            (Base::Cyclic(r), Vertex::Int(v)) if v + 1 == r as i64 => CoverPoint::new(deck + 1, 0),
            (Base::Finite(n), Vertex::Int(v)) if v == n as i64 => {
                return Err(Error::OutOfRange(format!("{v} is the maximum")))
            }
            (_, Vertex::Int(v)) => CoverPoint::new(deck, v + 1),
            (_, Vertex::Pair([i, j])) => CoverPoint {
                deck,
                vertex: Vertex::Pair([i, j + 1]),
            },
        })
    }

    pub fn pred(&self, p: CoverPoint) -> Result<CoverPoint> {
        let CoverPoint { deck, vertex } = p;
        Ok(match (self.base, vertex) {
            (Base::Cyclic(r), Vertex::Int(0)) => CoverPoint::new(deck - 1, r as i64 - 1),
            (Base::Finite(_), Vertex::Int(1)) => {
                return Err(Error::OutOfRange("1 is the minimum".into()))
            }
            (_, Vertex::Int(v)) => CoverPoint::new(deck, v - 1),
            (_, Vertex::Pair([i, j])) => CoverPoint {
                deck,
                vertex: Vertex::Pair([i, j - 1]),
            },
        })
    }

    /// The iterated deck shift `σ^k`.
    pub fn shift(&self, p: CoverPoint, k: i64) -> Result<CoverPoint> {
        if !self.is_loop() {
            return Err(Error::NotALoop);
        }
        Ok(CoverPoint {
            deck: p.deck + k,
            vertex: p.vertex,
        })
    }

    pub fn compare(&self, p: CoverPoint, q: CoverPoint) -> Ordering {
        p.cmp(&q)
    }

    /// Least `k` with `σ^k(p) ≥ q`.
    pub(crate) fn least_shift_above(p: CoverPoint, q: CoverPoint) -> i64 {
        q.deck - p.deck + i64::from(p.vertex < q.vertex)
    }

    /// Greatest `k` with `σ^k(p) ≤ q`.
    pub(crate) fn greatest_shift_below(p: CoverPoint, q: CoverPoint) -> i64 {
        q.deck - p.deck - i64::from(p.vertex > q.vertex)
    }

    /// All base vertices, when the base is finite.
    pub fn vertices(&self) -> Option<Vec<Vertex>> {
        match self.base {
            Base::Cyclic(r) => Some((0..r as i64).map(Vertex::Int).collect()),
            Base::Finite(n) => Some((1..=n as i64).map(Vertex::Int).collect()),
            _ => None,
        }
    }

    /// Number of base vertices, when finite.
    pub fn rank(&self) -> Option<usize> {
        match self.base {
            Base::Cyclic(r) | Base::Finite(r) => Some(r as usize),
            _ => None,
        }
    }

    pub fn min_vertex(&self) -> Option<Vertex> {
        match (self.kind, self.base) {
            (Kind::Linear, Base::Finite(_)) => Some(Vertex::Int(1)),
            _ => None,
        }
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        match (self.kind, self.base) {
            (Kind::Linear, Base::Finite(n)) => Some(Vertex::Int(n as i64)),
            _ => None,
        }
    }

    /// Integer coordinate of a cyclic cover point.
    pub fn flatten(&self, p: CoverPoint) -> Option<i64> {
        match (self.base, p.vertex) {
            (Base::Cyclic(r), Vertex::Int(v)) => Some(p.deck * r as i64 + v),
            _ => None,
        }
    }

    /// Inverse of [`Site::flatten`] for cyclic bases.
    pub fn unflatten(&self, z: i64) -> Option<CoverPoint> {
        match self.base {
            Base::Cyclic(r) => {
                let r = r as i64;
                Some(CoverPoint::new(z.div_euclid(r), z.rem_euclid(r)))
            }
            _ => None,
        }
    }

    pub fn descriptor(&self) -> SiteDescriptor {
        let (base, rank, size) = match self.base {
            Base::Cyclic(r) => ("cyclic", Some(r), None),
            Base::Int => ("int", None, None),
            Base::IntPairsLex => ("int_pairs_lex", None, None),
            Base::Finite(n) => ("finite", None, Some(n)),
        };
        SiteDescriptor {
            kind: self.kind,
            base: base.to_string(),
            rank,
            size,
        }
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            Kind::Loop => "loop",
            Kind::Linear => "linear",
        };
        match self.base {
            Base::Cyclic(r) => write!(f, "{kind}/cyclic({r})"),
            Base::Int => write!(f, "{kind}/int"),
            Base::IntPairsLex => write!(f, "{kind}/int_pairs_lex"),
            Base::Finite(n) => write!(f, "{kind}/finite({n})"),
        }
    }
}

/// JSON form of a site: `{"kind":"loop","base":"cyclic","rank":2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SiteDescriptor {
    pub kind: Kind,
    pub base: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<u32>,
}

impl TryFrom<SiteDescriptor> for Site {
    type Error = Error;

    fn try_from(d: SiteDescriptor) -> Result<Site> {
        let missing = |what: &str| Error::InvalidSite(format!("base {} needs \"{what}\"", d.base));
        let base = match d.base.as_str() {
            "cyclic" => Base::Cyclic(d.rank.ok_or_else(|| missing("rank"))?),
            "int" => Base::Int,
            "int_pairs_lex" => Base::IntPairsLex,
            "finite" => Base::Finite(d.size.ok_or_else(|| missing("size"))?),
            other => return Err(Error::InvalidSite(format!("unknown base {other:?}"))),
        };
        Site::new(d.kind, base)
    }
}

impl Serialize for Site {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.descriptor().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Site {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let desc = SiteDescriptor::deserialize(d)?;
        Site::try_from(desc).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn successor_examples() {
        let z = Site::big_tube_int();
        assert_eq!(z.succ(CoverPoint::new(0, 3)), Ok(CoverPoint::new(0, 4)));
        let c3 = Site::tube(3);
        assert_eq!(c3.succ(CoverPoint::new(0, 2)), Ok(CoverPoint::new(1, 0)));
        let a4 = Site::linear_finite(4);
        assert!(matches!(
            a4.succ(CoverPoint::new(0, 4)),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn predecessor_examples() {
        let z = Site::big_tube_int();
        assert_eq!(z.pred(CoverPoint::new(1, 0)), Ok(CoverPoint::new(1, -1)));
        let c2 = Site::tube(2);
        let p = c2.pred(c2.unflatten(0).unwrap()).unwrap();
        assert_eq!(c2.flatten(p), Some(-1));
        assert_eq!(p, CoverPoint::new(-1, 1));
        let a4 = Site::linear_finite(4);
        assert!(matches!(
            a4.pred(CoverPoint::new(0, 1)),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn shift_examples() {
        let z = Site::big_tube_int();
        assert_eq!(z.shift(CoverPoint::new(0, 5), 2), Ok(CoverPoint::new(2, 5)));
        let c3 = Site::tube(3);
        let p = c3.shift(c3.unflatten(1).unwrap(), -1).unwrap();
        assert_eq!(c3.flatten(p), Some(-2));
        assert_eq!(
            Site::linear_int().shift(CoverPoint::new(0, 5), 1),
            Err(Error::NotALoop)
        );
    }

    #[test]
    fn compare_examples() {
        let s = Site::big_tube_int();
        assert_eq!(
            s.compare(CoverPoint::new(0, 3), CoverPoint::new(0, 7)),
            Ordering::Less
        );
        assert_eq!(
            s.compare(CoverPoint::new(1, -9), CoverPoint::new(0, 100)),
            Ordering::Greater
        );
        let p = CoverPoint::new(4, 4);
        assert_eq!(s.compare(p, p), Ordering::Equal);
    }

    #[test]
    fn shift_helpers() {
        let p = CoverPoint::new(0, 3);
        let q = CoverPoint::new(2, 1);
        let k = Site::least_shift_above(p, q);
        assert_eq!(k, 2);
        assert!(CoverPoint::new(k, 3) >= q && CoverPoint::new(k - 1, 3) < q);
        let k = Site::greatest_shift_below(p, q);
        assert_eq!(k, 1);
    }

    #[test]
    fn descriptor_roundtrip() {
        for site in [
            Site::tube(3),
            Site::big_tube_int(),
            Site::big_tube_pairs(),
            Site::linear_finite(4),
            Site::linear_int(),
        ] {
            let json = serde_json::to_string(&site).unwrap();
            let back: Site = serde_json::from_str(&json).unwrap();
            assert_eq!(back, site);
        }
        let s: Site = serde_json::from_str(r#"{"kind":"loop","base":"cyclic","rank":2}"#).unwrap();
        assert_eq!(s, Site::tube(2));
        assert!(
            serde_json::from_str::<Site>(r#"{"kind":"loop","base":"finite","size":2}"#).is_err()
        );
        assert!(serde_json::from_str::<Site>(r#"{"kind":"loop","base":"cyclic"}"#).is_err());
    }

    #[test]
    fn vertex_json_forms() {
        assert_eq!(serde_json::to_string(&Vertex::Int(3)).unwrap(), "3");
        assert_eq!(
            serde_json::to_string(&Vertex::Pair([1, -2])).unwrap(),
            "[1,-2]"
        );
        let p: CoverPoint = serde_json::from_str(r#"{"deck":1,"vertex":[0,4]}"#).unwrap();
        assert_eq!(
            p,
            CoverPoint {
                deck: 1,
                vertex: Vertex::Pair([0, 4])
            }
        );
    }
}
