//! Injective rays `[a, ∞)` and the endomorphism algebra of a sum of them.
//!
//! A map `I(S) → I(T)` is a shift `f_k` with `σ^k(a_T) ≥ a_S`; composition
//! adds shifts and never vanishes, so `Hom(I(S), I(T))` is `x^{k0} k[[x]]`
//! with `f_k ↔ x^k`. Lifting every socle into the fundamental domain
//! `[(0, anchor), (1, anchor))` makes `k0` equal to 0 or 1.

use rand::Rng;
use serde::Serialize;

use super::series::TruncatedSeries;
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::site::{CoverPoint, Site, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InjectiveRay {
    #[serde(skip)]
    site: Site,
    a: CoverPoint,
}

impl InjectiveRay {
    /// The ray with socle `v`, lifted to the least point `≥ (0, anchor)`.
    pub fn new(site: Site, v: Vertex, anchor: Vertex) -> Result<Self> {
        if !site.is_loop() {
            return Err(Error::NotALoop);
        }
        site.check_vertex(v)?;
        site.check_vertex(anchor)?;
        let a = CoverPoint {
            deck: i64::from(v < anchor),
            vertex: v,
        };
        Ok(Self { site, a })
    }

    pub fn site(&self) -> Site {
        self.site
    }

    pub fn socle(&self) -> Vertex {
        self.a.vertex
    }

    pub fn lift(&self) -> CoverPoint {
        self.a
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RayHom {
    pub source: InjectiveRay,
    pub target: InjectiveRay,
    /// Least shift `k0`; the basis is `f_k` for `k ≥ k0`.
    pub min_order: u8,
}

impl RayHom {
    /// Basis shifts visible at precision `n`.
    pub fn basis(&self, n: usize) -> Vec<usize> {
        (self.min_order as usize..n).collect()
    }
}

pub fn ray_hom(source: &InjectiveRay, target: &InjectiveRay) -> Result<RayHom> {
    if source.site != target.site {
        return Err(Error::SiteMismatch);
    }
    let k0 = Site::least_shift_above(target.a, source.a);
    debug_assert!((0..=1).contains(&k0));
    Ok(RayHom {
        source: *source,
        target: *target,
        min_order: k0 as u8,
    })
}

/// `g ∘ f` for series-coded maps of rays.
pub fn ray_compose(g: &TruncatedSeries, f: &TruncatedSeries) -> Result<TruncatedSeries> {
    g.mul(f)
}

/// `End(⊕ I(S_i))` as matrices of series, slot `(i, j)` holding
/// `Hom(I(S_j), I(S_i))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesMatrixAlgebra {
    pub rays: Vec<InjectiveRay>,
    pub precision: usize,
    pub pattern: Vec<Vec<u8>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesMatrix {
    pub entries: Vec<Vec<TruncatedSeries>>,
}

/// Builds the algebra for the given simples, ordered from the anchor
/// (default: the least kept vertex).
pub fn inj_matrix_algebra(
    site: Site,
    keep: &[Vertex],
    anchor: Option<Vertex>,
    precision: usize,
) -> Result<SeriesMatrixAlgebra> {
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let anchor = anchor.unwrap_or_else(|| *keep.iter().min().unwrap());
    let mut rays = keep
        .iter()
        .map(|&v| InjectiveRay::new(site, v, anchor))
        .collect::<Result<Vec<_>>>()?;
    rays.sort_by_key(InjectiveRay::lift);
    rays.dedup();
    let pattern = rays
        .iter()
        .map(|ri| {
            rays.iter()
                .map(|rj| ray_hom(rj, ri).map(|h| h.min_order))
                .collect()
        })
        .collect::<Result<Vec<Vec<u8>>>>()?;
    Ok(SeriesMatrixAlgebra {
        rays,
        precision,
        pattern,
    })
}

impl SeriesMatrixAlgebra {
    pub fn size(&self) -> usize {
        self.rays.len()
    }

    pub fn zero(&self) -> SeriesMatrix {
        let entries = self
            .pattern
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&o| TruncatedSeries::zero(self.precision, o))
                    .collect()
            })
            .collect();
        SeriesMatrix { entries }
    }

    pub fn identity(&self) -> SeriesMatrix {
        let mut m = self.zero();
        for i in 0..self.size() {
            m.entries[i][i] = TruncatedSeries::one(self.precision);
        }
        m
    }

    /// `x^e` in slot `(i, j)`.
    pub fn unit(&self, i: usize, j: usize, e: usize) -> Result<SeriesMatrix> {
        let o = self.pattern[i][j];
        if e < o as usize {
            return Err(Error::PatternViolation(format!("x^{e} in slot ({i},{j})")));
        }
        let mut m = self.zero();
        m.entries[i][j] =
            TruncatedSeries::monomial(self.precision, e, Rational::from_integer(1.into()))
                .with_min_order(o)?;
        Ok(m)
    }

    /// Checks shape, precision and the divisibility pattern.
    pub fn element(&self, entries: Vec<Vec<TruncatedSeries>>) -> Result<SeriesMatrix> {
        let n = self.size();
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::PatternViolation(format!(
                "expected a {n}x{n} matrix"
            )));
        }
        let mut out = Vec::with_capacity(n);
        for (i, row) in entries.into_iter().enumerate() {
            let mut r = Vec::with_capacity(n);
            for (j, s) in row.into_iter().enumerate() {
                if s.precision() != self.precision {
                    return Err(Error::PrecisionMismatch(s.precision(), self.precision));
                }
                r.push(s.with_min_order(self.pattern[i][j])?);
            }
            out.push(r);
        }
        Ok(SeriesMatrix { entries: out })
    }

    pub fn add(&self, a: &SeriesMatrix, b: &SeriesMatrix) -> Result<SeriesMatrix> {
        let mut out = self.zero();
        for i in 0..self.size() {
            for j in 0..self.size() {
                out.entries[i][j] = a.entries[i][j].add(&b.entries[i][j])?;
            }
        }
        Ok(out)
    }

    pub fn mul(&self, a: &SeriesMatrix, b: &SeriesMatrix) -> Result<SeriesMatrix> {
        let n = self.size();
        let mut out = self.zero();
        for i in 0..n {
            for k in 0..n {
                let mut acc = TruncatedSeries::zero(self.precision, 0);
                for j in 0..n {
                    acc = acc.add(&ray_compose(&a.entries[i][j], &b.entries[j][k])?)?;
                }
                out.entries[i][k] = acc.with_min_order(self.pattern[i][k])?;
            }
        }
        Ok(out)
    }

    /// Path length of `x^e` in slot `(i, j)` of the completed path algebra.
    pub fn path_length(&self, i: usize, j: usize, e: usize) -> usize {
        let len = (e * self.size()) as i64 + i as i64 - j as i64;
        debug_assert!(len >= 0);
        len as usize
    }

    /// Least path length among nonzero terms; `None` for zero.
    pub fn degree(&self, a: &SeriesMatrix) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, row) in a.entries.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                for (e, c) in s.coeffs().iter().enumerate() {
                    if !num_traits::Zero::is_zero(c) {
                        let d = self.path_length(i, j, e);
                        best = Some(best.map_or(d, |b| b.min(d)));
                    }
                }
            }
        }
        best
    }

    /// The `d`-th power of the radical, as the least exponent allowed in
    /// each slot.
    pub fn filtration(&self, d: usize) -> Vec<Vec<usize>> {
        let n = self.size() as i64;
        (0..self.size())
            .map(|i| {
                (0..self.size())
                    .map(|j| {
                        let need = d as i64 - (i as i64 - j as i64);
                        let e = if need <= 0 { 0 } else { (need + n - 1) / n };
                        (e as usize).max(self.pattern[i][j] as usize)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn in_ideal(&self, a: &SeriesMatrix, d: usize) -> bool {
        self.degree(a).is_none_or(|deg| deg >= d)
    }

    /// A random element with small integer coefficients.
    pub fn random<R: Rng>(&self, rng: &mut R) -> SeriesMatrix {
        let mut m = self.zero();
        for i in 0..self.size() {
            for j in 0..self.size() {
                let o = self.pattern[i][j] as usize;
                let coeffs: Vec<i64> = (0..self.precision)
                    .map(|e| if e < o { 0 } else { rng.gen_range(-3..=3) })
                    .collect();
                m.entries[i][j] = TruncatedSeries::from_ints(&coeffs, o as u8).unwrap();
            }
        }
        m
    }
}
