//! Explicit matrix representations, used as an independent check on the
//! interval calculus in [`crate::tube`].
//!
//! Nothing here reads hom windows or labels. An interval is realized by
//! putting one basis vector on each cover point and letting every arrow step
//! a point down to the next point below it (or to zero once it falls below
//! the socle). Hom spaces are then nullspaces of the intertwining equations,
//! and Ext comes from the Euler form.

mod ar;
mod thread;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{span_rank, Matrix};
use crate::site::{Base, CoverPoint, Kind, Site, Vertex};
use crate::tube::IntervalObject;

pub use ar::{ar_verify, ArReport};
pub use thread::{thread_restriction, ThreadQuiverRep};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: usize,
    /// `(source, target)` pairs.
    pub arrows: Vec<(usize, usize)>,
}

/// A quiver whose vertices sit on base vertices of a site and whose arrows
/// act on cover points by `(m, u) ↦ (m - drop, u')`, never moving up.
#[derive(Clone, Debug)]
pub(crate) struct CoverQuiver {
    pub labels: Vec<Vertex>,
    pub arrows: Vec<(usize, usize, i64)>,
}

impl CoverQuiver {
    pub fn for_site(site: Site) -> Result<Self> {
        match (site.kind(), site.base()) {
            (Kind::Loop, Base::Cyclic(r)) => {
                let r = r as usize;
                let arrows = (0..r).map(|v| if v == 0 { (0, r - 1, 1) } else { (v, v - 1, 0) });
                Ok(Self {
                    labels: (0..r as i64).map(Vertex::Int).collect(),
                    arrows: arrows.collect(),
                })
            }
            (Kind::Linear, Base::Finite(n)) => {
                let n = n as usize;
                Ok(Self {
                    labels: (1..=n as i64).map(Vertex::Int).collect(),
                    arrows: (1..n).map(|v| (v, v - 1, 0)).collect(),
                })
            }
            _ => Err(Error::InvalidSite(format!(
                "matrix realizations need a cyclic or finite base, got {site}"
            ))),
        }
    }

    pub fn quiver(&self) -> Quiver {
        Quiver {
            vertices: self.labels.len(),
            arrows: self.arrows.iter().map(|&(s, t, _)| (s, t)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep<E> {
    pub quiver: Quiver,
    pub dims: Vec<usize>,
    /// One `dims[t] × dims[s]` matrix per arrow `s → t`.
    pub maps: Vec<Matrix<E>>,
}

impl<E: Clone + PartialEq> MatrixRep<E> {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.dims
            .iter()
            .map(|d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }
}

/// A representation together with the cover point behind each basis vector.
#[derive(Clone, Debug)]
pub struct Realization<E> {
    pub rep: MatrixRep<E>,
    pub points: Vec<Vec<CoverPoint>>,
}

/// Cover points of `[a, b]` lying over the base vertex `u`.
fn points_over(a: CoverPoint, b: CoverPoint, u: Vertex) -> Vec<CoverPoint> {
    let lo = a.deck + i64::from(u < a.vertex);
    let hi = b.deck - i64::from(u > b.vertex);
    (lo..=hi)
        .map(|m| CoverPoint { deck: m, vertex: u })
        .collect()
}

pub(crate) fn realize_on<F: Field>(
    field: &F,
    cq: &CoverQuiver,
    a: CoverPoint,
    b: CoverPoint,
) -> Realization<F::Elem> {
    let points: Vec<Vec<CoverPoint>> = cq.labels.iter().map(|&u| points_over(a, b, u)).collect();
    let dims: Vec<usize> = points.iter().map(Vec::len).collect();
    let maps = cq
        .arrows
        .iter()
        .map(|&(s, t, drop)| {
            let mut m = Matrix::zeros(field, dims[t], dims[s]);
            for (j, p) in points[s].iter().enumerate() {
                let q = CoverPoint {
                    deck: p.deck - drop,
                    vertex: cq.labels[t],
                };
                debug_assert!(q <= *p, "arrows must not step up the cover");
                if q >= a {
                    let i = points[t]
                        .iter()
                        .position(|x| *x == q)
                        .expect("image inside interval");
                    m.set(i, j, field.one());
                }
            }
            m
        })
        .collect();
    Realization {
        rep: MatrixRep {
            quiver: cq.quiver(),
            dims,
            maps,
        },
        points,
    }
}

/// Realizes a finite-length object on a cyclic or finite base.
pub fn realize<F: Field>(field: &F, x: &IntervalObject) -> Result<MatrixRep<F::Elem>> {
    Ok(realize_points(field, x.site(), x.a(), x.b())?.rep)
}

/// Realizes the raw interval `[a, b]`, keeping the cover points.
pub fn realize_points<F: Field>(
    field: &F,
    site: Site,
    a: CoverPoint,
    b: CoverPoint,
) -> Result<Realization<F::Elem>> {
    let cq = CoverQuiver::for_site(site)?;
    if a > b {
        return Err(Error::InvalidLabel(format!("empty interval [{a}, {b}]")));
    }
    Ok(realize_on(field, &cq, a, b))
}

/// A morphism of representations, one block per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMap<E> {
    pub blocks: Vec<Matrix<E>>,
}

impl<E: Clone + PartialEq> RepMap<E> {
    pub fn zero<F: Field<Elem = E>>(field: &F, from: &MatrixRep<E>, to: &MatrixRep<E>) -> Self {
        let blocks = from
            .dims
            .iter()
            .zip(&to.dims)
            .map(|(&c, &r)| Matrix::zeros(field, r, c));
        Self {
            blocks: blocks.collect(),
        }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, m: &MatrixRep<E>) -> Self {
        Self {
            blocks: m.dims.iter().map(|&d| Matrix::identity(field, d)).collect(),
        }
    }

    /// Sends every shared cover point to itself and all others to zero.
    pub fn by_points<F: Field<Elem = E>>(
        field: &F,
        from: &Realization<E>,
        to: &Realization<E>,
    ) -> Self {
        let mut map = Self::zero(field, &from.rep, &to.rep);
        for (v, block) in map.blocks.iter_mut().enumerate() {
            for (j, p) in from.points[v].iter().enumerate() {
                if let Some(i) = to.points[v].iter().position(|q| q == p) {
                    block.set(i, j, field.one());
                }
            }
        }
        map
    }

    /// `self ∘ other`.
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(g, f)| g.mul(field, f));
        Self {
            blocks: blocks.collect(),
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(g, f)| g.add(field, f));
        Self {
            blocks: blocks.collect(),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        Self {
            blocks: self.blocks.iter().map(|b| b.scale(field, c)).collect(),
        }
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        self.blocks.iter().map(|b| b.rank(field)).sum()
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.blocks.iter().all(|b| b.is_zero(field))
    }

    /// All block entries in one vector.
    pub fn flatten(&self) -> Vec<E> {
        self.blocks
            .iter()
            .flat_map(|b| b.entries().iter().cloned())
            .collect()
    }

    pub fn is_morphism<F: Field<Elem = E>>(
        &self,
        field: &F,
        from: &MatrixRep<E>,
        to: &MatrixRep<E>,
    ) -> bool {
        from.quiver.arrows.iter().enumerate().all(|(k, &(s, t))| {
            let lhs = self.blocks[t].mul(field, &from.maps[k]);
            let rhs = to.maps[k].mul(field, &self.blocks[s]);
            lhs == rhs
        })
    }

    /// Direct-sum pairing `(f, g): A → B ⊕ C`.
    pub fn stack(&self, lower: &Self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .zip(&lower.blocks)
            .map(|(f, g)| f.vstack(g));
        Self {
            blocks: blocks.collect(),
        }
    }

    /// Copairing `[f, g]: B ⊕ C → A`.
    pub fn join(&self, right: &Self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .zip(&right.blocks)
            .map(|(f, g)| f.hstack(g));
        Self {
            blocks: blocks.collect(),
        }
    }
}

/// Direct sum of two representations of one quiver.
pub fn direct_sum<F: Field>(
    field: &F,
    m: &MatrixRep<F::Elem>,
    n: &MatrixRep<F::Elem>,
) -> Result<MatrixRep<F::Elem>> {
    if m.quiver != n.quiver {
        return Err(Error::RankMismatch);
    }
    let dims = m.dims.iter().zip(&n.dims).map(|(a, b)| a + b).collect();
    let maps = m
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| {
            let mut out = Matrix::zeros(field, m.dims[t] + n.dims[t], m.dims[s] + n.dims[s]);
            for i in 0..m.dims[t] {
                for j in 0..m.dims[s] {
                    out.set(i, j, m.maps[k].get(i, j).clone());
                }
            }
            for i in 0..n.dims[t] {
                for j in 0..n.dims[s] {
                    out.set(m.dims[t] + i, m.dims[s] + j, n.maps[k].get(i, j).clone());
                }
            }
            out
        })
        .collect();
    Ok(MatrixRep {
        quiver: m.quiver.clone(),
        dims,
        maps,
    })
}

/// The intertwining system `φ_t M(α) = N(α) φ_s`, one column per unknown.
fn intertwining_system<F: Field>(
    field: &F,
    m: &MatrixRep<F::Elem>,
    n: &MatrixRep<F::Elem>,
) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut offsets = Vec::with_capacity(m.dims.len());
    let mut unknowns = 0;
    for v in 0..m.dims.len() {
        offsets.push(unknowns);
        unknowns += n.dims[v] * m.dims[v];
    }
    let var = |v: usize, i: usize, j: usize| offsets[v] + i * m.dims[v] + j;
    let mut rows = Vec::new();
    for (k, &(s, t)) in m.quiver.arrows.iter().enumerate() {
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                let mut row = vec![field.zero(); unknowns];
                for l in 0..m.dims[t] {
                    let c = m.maps[k].get(l, j);
                    if !field.is_zero(c) {
                        let idx = var(t, i, l);
                        row[idx] = field.add(&row[idx], c);
                    }
                }
                for l in 0..n.dims[s] {
                    let c = n.maps[k].get(i, l);
                    if !field.is_zero(c) {
                        let idx = var(s, l, j);
                        row[idx] = field.sub(&row[idx], c);
                    }
                }
                rows.push(row);
            }
        }
    }
    (Matrix::from_rows(rows, unknowns), offsets)
}

fn check_same_quiver<E>(m: &MatrixRep<E>, n: &MatrixRep<E>) -> Result<()> {
    if m.quiver == n.quiver {
        Ok(())
    } else {
        Err(Error::RankMismatch)
    }
}

/// `dim Hom(M, N)` as the nullity of the intertwining system.
pub fn oracle_hom_dim<F: Field>(
    field: &F,
    m: &MatrixRep<F::Elem>,
    n: &MatrixRep<F::Elem>,
) -> Result<usize> {
    check_same_quiver(m, n)?;
    let (sys, _) = intertwining_system(field, m, n);
    Ok(sys.cols() - sys.rank(field))
}

/// A basis of `Hom(M, N)`.
pub fn hom_basis<F: Field>(
    field: &F,
    m: &MatrixRep<F::Elem>,
    n: &MatrixRep<F::Elem>,
) -> Result<Vec<RepMap<F::Elem>>> {
    check_same_quiver(m, n)?;
    let (sys, offsets) = intertwining_system(field, m, n);
    let basis = sys
        .kernel(field)
        .into_iter()
        .map(|vec| {
            let blocks = (0..m.dims.len())
                .map(|v| {
                    let (r, c) = (n.dims[v], m.dims[v]);
                    let rows = (0..r)
                        .map(|i| vec[offsets[v] + i * c..offsets[v] + (i + 1) * c].to_vec())
                        .collect();
                    Matrix::from_rows(rows, c)
                })
                .collect();
            RepMap { blocks }
        })
        .collect();
    Ok(basis)
}

/// `Σ_v m_v n_v − Σ_{s→t} m_s n_t`.
pub fn euler<E>(m: &MatrixRep<E>, n: &MatrixRep<E>) -> Result<i64> {
    check_same_quiver(m, n)?;
    let diag: usize = m.dims.iter().zip(&n.dims).map(|(a, b)| a * b).sum();
    let off: usize = m
        .quiver
        .arrows
        .iter()
        .map(|&(s, t)| m.dims[s] * n.dims[t])
        .sum();
    Ok(diag as i64 - off as i64)
}

/// `dim Ext¹(M, N) = dim Hom(M, N) − ⟨M, N⟩`.
pub fn oracle_ext_dim<F: Field>(
    field: &F,
    m: &MatrixRep<F::Elem>,
    n: &MatrixRep<F::Elem>,
) -> Result<usize> {
    let hom = oracle_hom_dim(field, m, n)? as i64;
    let ext = hom - euler(m, n)?;
    assert!(ext >= 0, "negative Ext from the Euler form");
    Ok(ext as usize)
}

/// Seeded random combinations of a basis, used to find maps of maximal rank.
fn generic_ranks<F: Field>(field: &F, basis: &[RepMap<F::Elem>], trials: usize) -> usize {
    let mut best = basis.iter().map(|f| f.rank(field)).max().unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..trials {
        let Some(first) = basis.first() else { break };
        let mut acc = first.scale(field, &field.zero());
        for f in basis {
            let c = field.from_i64(rng.gen_range(1..1000));
            acc = acc.add(field, &f.scale(field, &c));
        }
        best = best.max(acc.rank(field));
    }
    best
}

/// Whether `Hom(M, N)` contains a surjection.
pub fn oracle_has_epi<F: Field>(
    field: &F,
    m: &MatrixRep<F::Elem>,
    n: &MatrixRep<F::Elem>,
) -> Result<bool> {
    let basis = hom_basis(field, m, n)?;
    Ok(n.total_dim() == 0 || generic_ranks(field, &basis, 3) == n.total_dim())
}

/// Whether `Hom(M, N)` contains an injection.
pub fn oracle_has_mono<F: Field>(
    field: &F,
    m: &MatrixRep<F::Elem>,
    n: &MatrixRep<F::Elem>,
) -> Result<bool> {
    let basis = hom_basis(field, m, n)?;
    Ok(m.total_dim() == 0 || generic_ranks(field, &basis, 3) == m.total_dim())
}

/// The socle series `0 = S_0 ⊂ S_1 ⊂ …`, where `S_{i+1}` is everything every
/// arrow sends into `S_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleSeries {
    /// Dimension vector of each `S_i`, starting with the zero vector.
    pub layers: Vec<Vec<usize>>,
}

impl SocleSeries {
    /// Every layer `S_{i+1}/S_i` is one-dimensional, so the submodules form
    /// a chain with `length + 1` members.
    pub fn is_chain(&self) -> bool {
        self.layers.windows(2).all(|w| {
            let d0: usize = w[0].iter().sum();
            let d1: usize = w[1].iter().sum();
            d1 == d0 + 1
        })
    }

    /// Base vertex index of the simple layer `S_i / S_{i-1}`.
    pub fn layer_vertex(&self, i: usize) -> Option<usize> {
        let (lo, hi) = (&self.layers[i - 1], &self.layers[i]);
        let diff: Vec<usize> = lo.iter().zip(hi).map(|(a, b)| b - a).collect();
        (diff.iter().sum::<usize>() == 1).then(|| diff.iter().position(|&d| d == 1).unwrap())
    }
}

/// Embeds a vertex-local block into the total space.
fn arrow_total<F: Field>(field: &F, m: &MatrixRep<F::Elem>, k: usize) -> Matrix<F::Elem> {
    let offs = m.offsets();
    let d = m.total_dim();
    let (s, t) = m.quiver.arrows[k];
    let mut out = Matrix::zeros(field, d, d);
    for i in 0..m.dims[t] {
        for j in 0..m.dims[s] {
            out.set(offs[t] + i, offs[s] + j, m.maps[k].get(i, j).clone());
        }
    }
    out
}

pub fn oracle_submodules<F: Field>(field: &F, m: &MatrixRep<F::Elem>) -> SocleSeries {
    let d = m.total_dim();
    let offs = m.offsets();
    let arrows: Vec<_> = (0..m.quiver.arrows.len())
        .map(|k| arrow_total(field, m, k))
        .collect();
    let dim_vector = |basis: &[Vec<F::Elem>]| -> Vec<usize> {
        (0..m.dims.len())
            .map(|v| {
                let block: Vec<Vec<F::Elem>> = basis
                    .iter()
                    .map(|b| b[offs[v]..offs[v] + m.dims[v]].to_vec())
                    .collect();
                span_rank(field, &block, m.dims[v])
            })
            .collect()
    };
    let mut current: Vec<Vec<F::Elem>> = Vec::new();
    let mut layers = vec![vec![0; m.dims.len()]];
    loop {
        // v with A_k v ∈ span(current) for all k: solve [A_k | -B] (v, w_k) = 0 jointly.
        let c = current.len();
        let cols = d + c * arrows.len();
        let mut rows = Vec::new();
        for (k, a) in arrows.iter().enumerate() {
            for i in 0..d {
                let mut row = vec![field.zero(); cols];
                row[..d].clone_from_slice(a.row(i));
                for (j, b) in current.iter().enumerate() {
                    row[d + k * c + j] = field.neg(&b[i]);
                }
                rows.push(row);
            }
        }
        let sys = Matrix::from_rows(rows, cols);
        let kernel: Vec<Vec<F::Elem>> = sys
            .kernel(field)
            .into_iter()
            .map(|v| v[..d].to_vec())
            .collect();
        let mut reduced = if kernel.is_empty() {
            Matrix::zeros(field, 0, d)
        } else {
            Matrix::from_rows(kernel, d)
        };
        let rank = reduced.row_reduce(field).len();
        let next: Vec<Vec<F::Elem>> = (0..rank).map(|i| reduced.row(i).to_vec()).collect();
        if next.len() == current.len() {
            break;
        }
        layers.push(dim_vector(&next));
        current = next;
    }
    SocleSeries { layers }
}

/// Dimension vector of `M / rad M`.
pub fn top_dims<F: Field>(field: &F, m: &MatrixRep<F::Elem>) -> Vec<usize> {
    (0..m.dims.len())
        .map(|v| {
            let incoming: Vec<&Matrix<F::Elem>> = m
                .quiver
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, &(_, t))| t == v)
                .map(|(k, _)| &m.maps[k])
                .collect();
            let image = incoming
                .iter()
                .fold(None::<Matrix<F::Elem>>, |acc, a| match acc {
                    None => Some((*a).clone()),
                    Some(b) => Some(b.hstack(a)),
                });
            m.dims[v] - image.map_or(0, |i| i.rank(field))
        })
        .collect()
}

/// Dimension vector of the socle, the joint kernel of all arrows.
pub fn socle_dims<F: Field>(field: &F, m: &MatrixRep<F::Elem>) -> Vec<usize> {
    oracle_submodules(field, m)
        .layers
        .get(1)
        .cloned()
        .unwrap_or_else(|| vec![0; m.dims.len()])
}
