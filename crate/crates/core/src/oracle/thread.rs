//! Restriction of big-tube objects over `Z` to the quivers `Q_n`.
//!
//! `Q_n` has vertices `a_0, …, a_n, b_n, …, b_0`, a lower branch
//! `a_0 → a_1 → … → a_n → b_n → … → b_0` and one extra arrow `α: a_0 → b_0`;
//! `β` is the composite of the lower branch. Vertex `a_i` goes to the base
//! vertex `-i` and `b_i` to `i`, so `a_0` and `b_0` share vertex 0, every
//! branch arrow steps down the cover, the arrow `a_n → b_n` wraps once around
//! the loop, `α` is the identity on vertex 0 and `β` acts as `x`.

use serde::Serialize;

use super::{realize_on, CoverQuiver, MatrixRep};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::site::{Base, Kind, Vertex};
use crate::tube::IntervalObject;

#[derive(Clone, Debug, PartialEq)]
pub struct ThreadQuiverRep<E> {
    pub n: usize,
    /// Quiver vertices in the order `a_0..a_n, b_n..b_0`; arrows are the
    /// lower branch in order, then `α`.
    pub rep: MatrixRep<E>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThreadDims {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl<E: Clone + PartialEq> ThreadQuiverRep<E> {
    pub fn alpha(&self) -> &Matrix<E> {
        self.rep.maps.last().expect("α is always present")
    }

    /// `M(β)`, the composite of the lower branch.
    pub fn beta<F: Field<Elem = E>>(&self, field: &F) -> Matrix<E> {
        let branch = &self.rep.maps[..self.rep.maps.len() - 1];
        let d0 = self.rep.dims[0];
        branch
            .iter()
            .fold(Matrix::identity(field, d0), |acc, m| m.mul(field, &acc))
    }

    pub fn dims(&self) -> ThreadDims {
        let n = self.n;
        let a = self.rep.dims[..=n].to_vec();
        let b = self.rep.dims[n + 1..].iter().rev().cloned().collect();
        ThreadDims { a, b }
    }

    /// `M(α)` invertible and `M(α)⁻¹ M(β)` nilpotent.
    pub fn in_tube<F: Field<Elem = E>>(&self, field: &F) -> bool {
        let alpha = self.alpha();
        if alpha.rows() != alpha.cols() {
            return false;
        }
        let Some(inv) = alpha.inverse(field) else {
            return false;
        };
        let t = inv.mul(field, &self.beta(field));
        let mut p = Matrix::identity(field, t.rows());
        for _ in 0..t.rows() {
            p = p.mul(field, &t);
        }
        p.is_zero(field)
    }
}

fn thread_quiver(n: usize) -> CoverQuiver {
    let n64 = n as i64;
    let mut labels: Vec<Vertex> = (0..=n64).map(|i| Vertex::Int(-i)).collect();
    labels.extend((0..=n64).rev().map(Vertex::Int));
    let b = |i: usize| 2 * n + 1 - i;
    let mut arrows: Vec<(usize, usize, i64)> = (0..n).map(|i| (i, i + 1, 0)).collect();
    arrows.push((n, b(n), 1));
    arrows.extend((1..=n).rev().map(|i| (b(i), b(i - 1), 0)));
    arrows.push((0, b(0), 0));
    CoverQuiver { labels, arrows }
}

/// Restricts `X` on the big tube over `Z` to a representation of `Q_n`.
/// Finite-length objects must be supported on `[-n, n]`.
pub fn thread_restriction<F: Field>(
    field: &F,
    x: &IntervalObject,
    n: usize,
) -> Result<ThreadQuiverRep<F::Elem>> {
    let site = x.site();
    if (site.kind(), site.base()) != (Kind::Loop, Base::Int) {
        return Err(Error::InvalidSite(format!(
            "thread restriction needs loop/int, got {site}"
        )));
    }
    if let Ok(points) = x.points() {
        let bound = n as i64;
        let outside = points
            .iter()
            .any(|p| p.vertex.int().is_none_or(|v| v.abs() > bound));
        if outside {
            return Err(Error::SupportOutOfWindow(bound));
        }
    }
    let rep = realize_on(field, &thread_quiver(n), x.a(), x.b()).rep;
    Ok(ThreadQuiverRep { n, rep })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::site::Site;

    fn obj(s: i64, t: i64, w: u64) -> IntervalObject {
        IntervalObject::make(Site::big_tube_int(), Vertex::Int(s), Vertex::Int(t), w).unwrap()
    }

    #[test]
    fn kronecker_base_case() {
        let f = Rationals;
        let m = thread_restriction(&f, &obj(0, 0, 0), 0).unwrap();
        assert_eq!(
            m.dims(),
            ThreadDims {
                a: vec![1],
                b: vec![1]
            }
        );
        assert_eq!(m.alpha(), &Matrix::identity(&f, 1));
        assert!(m.beta(&f).is_zero(&f));
        assert!(m.in_tube(&f));
    }

    #[test]
    fn simples_add_to_null_root() {
        let f = PrimeField::default();
        for n in 1..=2usize {
            let mut total = vec![0; 2 * n + 2];
            for v in -(n as i64)..=n as i64 {
                let m = thread_restriction(&f, &obj(v, v, 0), n).unwrap();
                assert!(m.in_tube(&f));
                for (t, d) in total.iter_mut().zip(&m.rep.dims) {
                    *t += d;
                }
            }
            assert_eq!(total, vec![1; 2 * n + 2]);
        }
    }

    #[test]
    fn winding_objects_restrict_into_the_tube() {
        let f = PrimeField::default();
        let m = thread_restriction(&f, &obj(0, 0, 1), 1).unwrap();
        assert_eq!(
            m.dims(),
            ThreadDims {
                a: vec![2, 1],
                b: vec![2, 1]
            }
        );
        assert!(!m.beta(&f).is_zero(&f));
        assert!(m.in_tube(&f));
    }

    #[test]
    fn support_window() {
        let f = PrimeField::default();
        assert_eq!(
            thread_restriction(&f, &obj(0, 3, 0), 2).unwrap_err(),
            Error::SupportOutOfWindow(2)
        );
        let c = IntervalObject::simple(Site::tube(2), Vertex::Int(0)).unwrap();
        assert!(matches!(
            thread_restriction(&f, &c, 1),
            Err(Error::InvalidSite(_))
        ));
    }

    #[test]
    fn singular_alpha_is_rejected() {
        let f = PrimeField::default();
        let mut m = thread_restriction(&f, &obj(0, 0, 0), 0).unwrap();
        let last = m.rep.maps.len() - 1;
        m.rep.maps[last] = Matrix::zeros(&f, 1, 1);
        assert!(!m.in_tube(&f));
    }
}
