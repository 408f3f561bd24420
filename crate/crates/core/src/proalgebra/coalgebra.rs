//! The path coalgebra of a cyclic quiver and comodules over it.
//!
//! The quiver has vertices `0..r` and arrows `v → v-1 (mod r)`, so a path
//! is fixed by its start vertex and length. The comultiplication splits a
//! path in every possible way, `Δ(a) = Σ_{p∘q = a} p ⊗ q` with `q` walked
//! first, and the counit picks out trivial paths.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::rays::{inj_matrix_algebra, SeriesMatrix, SeriesMatrixAlgebra};
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::site::{Base, Site, Vertex};
use crate::tube::IntervalObject;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    pub start: u32,
    pub len: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCoalgebra {
    rank: u32,
    max_len: u32,
}

pub type Tensor2 = BTreeMap<(Path, Path), i64>;
pub type Tensor3 = BTreeMap<(Path, Path, Path), i64>;

impl PathCoalgebra {
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn max_len(&self) -> u32 {
        self.max_len
    }

    pub fn end(&self, p: Path) -> u32 {
        let r = self.rank as i64;
        (p.start as i64 - p.len as i64).rem_euclid(r) as u32
    }

    /// `p ∘ q`: walk `q`, then `p`.
    pub fn compose(&self, p: Path, q: Path) -> Option<Path> {
        (self.end(q) == p.start).then_some(Path {
            start: q.start,
            len: p.len + q.len,
        })
    }

    pub fn basis(&self) -> Vec<Path> {
        (0..self.rank)
            .flat_map(|s| (0..=self.max_len).map(move |len| Path { start: s, len }))
            .collect()
    }

    pub fn delta(&self, a: Path) -> Tensor2 {
        (0..=a.len)
            .map(|i| {
                let q = Path {
                    start: a.start,
                    len: i,
                };
                let p = Path {
                    start: self.end(q),
                    len: a.len - i,
                };
                ((p, q), 1)
            })
            .collect()
    }

    pub fn counit(&self, a: Path) -> i64 {
        i64::from(a.len == 0)
    }

    /// `(Δ ⊗ 1) Δ(a)` and `(1 ⊗ Δ) Δ(a)`.
    pub fn coassociativity_sides(&self, a: Path) -> (Tensor3, Tensor3) {
        let mut left = Tensor3::new();
        let mut right = Tensor3::new();
        for ((p, q), c) in self.delta(a) {
            for ((p1, p2), d) in self.delta(p) {
                *left.entry((p1, p2, q)).or_default() += c * d;
            }
            for ((q1, q2), d) in self.delta(q) {
                *right.entry((p, q1, q2)).or_default() += c * d;
            }
        }
        left.retain(|_, c| *c != 0);
        right.retain(|_, c| *c != 0);
        (left, right)
    }

    pub fn is_coassociative_at(&self, a: Path) -> bool {
        let (l, r) = self.coassociativity_sides(a);
        l == r
    }

    /// `(ε ⊗ 1) Δ(a) = a = (1 ⊗ ε) Δ(a)`.
    pub fn counit_holds_at(&self, a: Path) -> bool {
        let mut left: BTreeMap<Path, i64> = BTreeMap::new();
        let mut right: BTreeMap<Path, i64> = BTreeMap::new();
        for ((p, q), c) in self.delta(a) {
            *left.entry(q).or_default() += c * self.counit(p);
            *right.entry(p).or_default() += c * self.counit(q);
        }
        left.retain(|_, c| *c != 0);
        right.retain(|_, c| *c != 0);
        let expect = BTreeMap::from([(a, 1)]);
        left == expect && right == expect
    }
}

pub fn path_coalgebra(rank: u32, max_len: u32) -> Result<PathCoalgebra> {
    if rank == 0 {
        return Err(Error::InvalidSite("rank must be at least 1".into()));
    }
    Ok(PathCoalgebra { rank, max_len })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualCheck {
    pub passed: bool,
    pub pairs_checked: usize,
    /// First pair `(p, q)` whose convolution product disagrees.
    pub counterexample: Option<(Path, Path)>,
}

/// Position of vertex `v` among the rays: the quiver runs downwards while
/// the rays are ordered upwards from 0.
fn slot_index(rank: u32, v: u32) -> usize {
    ((rank - v) % rank) as usize
}

/// Matrix of a path: `x^e` in slot `(idx end, idx start)`.
fn path_matrix(alg: &SeriesMatrixAlgebra, c: &PathCoalgebra, p: Path) -> Result<SeriesMatrix> {
    let r = c.rank;
    let i = slot_index(r, c.end(p));
    let j = slot_index(r, p.start);
    let shift = p.len as i64 - (i as i64 - j as i64);
    debug_assert!(shift >= 0 && shift % r as i64 == 0);
    alg.unit(i, j, (shift / r as i64) as usize)
}

/// Reads a matrix back as a combination of paths of length at most `max_len`.
fn matrix_paths(
    alg: &SeriesMatrixAlgebra,
    c: &PathCoalgebra,
    m: &SeriesMatrix,
) -> BTreeMap<Path, Rational> {
    let mut out = BTreeMap::new();
    for start in 0..c.rank {
        let j = slot_index(c.rank, start);
        for (i, row) in m.entries.iter().enumerate() {
            for (e, coeff) in row[j].coeffs().iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let len = alg.path_length(i, j, e);
                if len > c.max_len as usize {
                    continue;
                }
                out.insert(
                    Path {
                        start,
                        len: len as u32,
                    },
                    coeff.clone(),
                );
            }
        }
    }
    out
}

/// Compares convolution in the dual of `C` with multiplication in the
/// injective matrix algebra on all `r` simples at precision `N + 1`,
/// modulo paths longer than `N`.
pub fn coalgebra_dual_check(c: &PathCoalgebra) -> Result<DualCheck> {
    let site = Site::tube(c.rank);
    let keep: Vec<Vertex> = (0..c.rank as i64).map(Vertex::Int).collect();
    let alg = inj_matrix_algebra(site, &keep, None, c.max_len as usize + 1)?;
    let basis = c.basis();
    // Convolution δ_p * δ_q = Σ_a ⟨Δ(a), p ⊗ q⟩ δ_a, read off the Δ-table.
    let mut conv: BTreeMap<(Path, Path), BTreeMap<Path, Rational>> = BTreeMap::new();
    for &a in &basis {
        for ((p, q), k) in c.delta(a) {
            let slot = conv.entry((p, q)).or_default();
            *slot.entry(a).or_insert_with(Rational::zero) += Rational::from_integer(k.into());
        }
    }
    let mut pairs = 0;
    for &p in &basis {
        for &q in &basis {
            pairs += 1;
            let mut expect = conv.get(&(p, q)).cloned().unwrap_or_default();
            expect.retain(|_, v| !v.is_zero());
            let prod = alg.mul(&path_matrix(&alg, c, p)?, &path_matrix(&alg, c, q)?)?;
            if matrix_paths(&alg, c, &prod) != expect {
                return Ok(DualCheck {
                    passed: false,
                    pairs_checked: pairs,
                    counterexample: Some((p, q)),
                });
            }
        }
    }
    Ok(DualCheck {
        passed: true,
        pairs_checked: pairs,
        counterexample: None,
    })
}

/// Right coaction `ρ: X → X ⊗ C` of a finite-length module on a cyclic base.
/// Basis vectors are the flattened cover points of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction {
    pub coalgebra: PathCoalgebra,
    pub points: Vec<i64>,
    pub table: BTreeMap<i64, BTreeMap<(i64, Path), i64>>,
}

pub fn comodule_coaction(x: &IntervalObject) -> Result<Coaction> {
    let site = x.site();
    let Base::Cyclic(r) = site.base() else {
        return Err(Error::InvalidSite(format!(
            "coactions need a cyclic base, got {site}"
        )));
    };
    let len = x.length().ok_or(Error::InfiniteLength)?;
    let lo = site.flatten(x.a()).unwrap();
    let hi = site.flatten(x.b()).unwrap();
    let coalgebra = path_coalgebra(r, len as u32)?;
    let vertex = |z: i64| z.rem_euclid(r as i64) as u32;
    let table = (lo..=hi)
        .map(|z| {
            let terms = (0..=z - lo)
                .map(|i| {
                    (
                        (
                            z - i,
                            Path {
                                start: vertex(z),
                                len: i as u32,
                            },
                        ),
                        1,
                    )
                })
                .collect();
            (z, terms)
        })
        .collect();
    Ok(Coaction {
        coalgebra,
        points: (lo..=hi).collect(),
        table,
    })
}

impl Coaction {
    fn rho(&self, z: i64) -> &BTreeMap<(i64, Path), i64> {
        &self.table[&z]
    }

    /// Every term `z' ⊗ p` has `p` running from `vertex(z)` to `vertex(z')`.
    pub fn is_graded(&self) -> bool {
        self.table.iter().all(|(&z, terms)| {
            terms.keys().all(|&(w, p)| {
                let r = self.coalgebra.rank() as i64;
                p.start as i64 == z.rem_euclid(r) && self.coalgebra.end(p) as i64 == w.rem_euclid(r)
            })
        })
    }

    /// `(ρ ⊗ 1) ρ = (1 ⊗ Δ) ρ` on every basis vector.
    pub fn is_coassociative(&self) -> bool {
        self.points.iter().all(|&z| {
            let mut left: BTreeMap<(i64, Path, Path), i64> = BTreeMap::new();
            let mut right: BTreeMap<(i64, Path, Path), i64> = BTreeMap::new();
            for (&(w, p), &c) in self.rho(z) {
                for (&(u, q), &d) in self.rho(w) {
                    *left.entry((u, q, p)).or_default() += c * d;
                }
                for ((p1, p2), d) in self.coalgebra.delta(p) {
                    *right.entry((w, p1, p2)).or_default() += c * d;
                }
            }
            left.retain(|_, c| *c != 0);
            right.retain(|_, c| *c != 0);
            left == right
        })
    }

    /// `(1 ⊗ ε) ρ = id`.
    pub fn is_counital(&self) -> bool {
        self.points.iter().all(|&z| {
            let mut out: BTreeMap<i64, i64> = BTreeMap::new();
            for (&(w, p), &c) in self.rho(z) {
                *out.entry(w).or_default() += c * self.coalgebra.counit(p);
            }
            out.retain(|_, c| *c != 0);
            out == BTreeMap::from([(z, 1)])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divided_powers() {
        let c = path_coalgebra(1, 5).unwrap();
        let x3 = Path { start: 0, len: 3 };
        let d = c.delta(x3);
        assert_eq!(d.len(), 4);
        for ((p, q), k) in d {
            assert_eq!(p.len + q.len, 3);
            assert_eq!(k, 1);
        }
        assert_eq!(c.counit(Path { start: 0, len: 0 }), 1);
        assert_eq!(c.counit(Path { start: 0, len: 1 }), 0);
    }

    #[test]
    fn axioms() {
        for r in 1..=3 {
            let c = path_coalgebra(r, 6).unwrap();
            for a in c.basis() {
                assert!(c.is_coassociative_at(a));
                assert!(c.counit_holds_at(a));
            }
        }
    }

    #[test]
    fn dual_rank_two() {
        let c = path_coalgebra(2, 5).unwrap();
        let report = coalgebra_dual_check(&c).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.pairs_checked, 144);
    }

    #[test]
    fn coactions() {
        let c2 = Site::tube(2);
        let s = IntervalObject::simple(c2, Vertex::Int(0)).unwrap();
        let rho = comodule_coaction(&s).unwrap();
        assert_eq!(
            rho.table[&0],
            BTreeMap::from([((0, Path { start: 0, len: 0 }), 1)])
        );

        let x = IntervalObject::make(c2, Vertex::Int(0), Vertex::Int(1), 0).unwrap();
        let rho = comodule_coaction(&x).unwrap();
        let arrows: usize = rho
            .table
            .values()
            .flat_map(|t| t.keys())
            .filter(|(_, p)| p.len == 1)
            .count();
        assert_eq!(arrows, 1);
        assert!(rho.is_coassociative() && rho.is_counital() && rho.is_graded());

        let z = Site::big_tube_int();
        let y = IntervalObject::make(z, Vertex::Int(0), Vertex::Int(0), 1).unwrap();
        assert!(comodule_coaction(&y).is_err());
    }
}
