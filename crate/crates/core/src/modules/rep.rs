use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q as rat, Matrix, Rational};
use crate::quiver::{Arrow, Quiver};

/// Vertices and arrows `(tail, head)` of a finite quiver.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepQuiver {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

impl RepQuiver {
    /// The quiver of `H`, with arrows in the order of [`Quiver::arrows`].
    pub fn of(q: &Quiver) -> Self {
        RepQuiver {
            vertices: q.vertex_count(),
            arrows: q.arrows().into_iter().map(|a| (q.tail(a), q.head(a))).collect(),
        }
    }

    /// Reverses every arrow.
    pub fn opposite(&self) -> Self {
        RepQuiver {
            vertices: self.vertices,
            arrows: self.arrows.iter().map(|&(t, h)| (h, t)).collect(),
        }
    }
}

/// A representation: one space per vertex, one matrix per arrow (`dim head x dim tail`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub quiver: RepQuiver,
    pub dims: Vec<usize>,
    pub mats: Vec<Matrix>,
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    dims: Vec<usize>,
    mats: Vec<Vec<Vec<String>>>,
}

impl Representation {
    pub fn new(quiver: RepQuiver, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Self> {
        if dims.len() != quiver.vertices || mats.len() != quiver.arrows.len() {
            return Err(Error::UnsupportedShape("dimension or arrow count mismatch".into()));
        }
        for (m, &(t, h)) in mats.iter().zip(&quiver.arrows) {
            if m.rows() != dims[h] || m.cols() != dims[t] {
                return Err(Error::UnsupportedShape("matrix shape does not match dims".into()));
            }
        }
        Ok(Representation { quiver, dims, mats })
    }

    pub fn zero(quiver: RepQuiver) -> Self {
        let dims = vec![0; quiver.vertices];
        let mats = vec![Matrix::zeros(0, 0); quiver.arrows.len()];
        Representation { quiver, dims, mats }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert_eq!(self.quiver, other.quiver);
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let mats = self
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(t, h))| {
                let mut m = Matrix::zeros(dims[h], dims[t]);
                let (a, b) = (&self.mats[k], &other.mats[k]);
                for i in 0..a.rows() {
                    for j in 0..a.cols() {
                        m[(i, j)] = a[(i, j)].clone();
                    }
                }
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        m[(a.rows() + i, a.cols() + j)] = b[(i, j)].clone();
                    }
                }
                m
            })
            .collect();
        Representation {
            quiver: self.quiver.clone(),
            dims,
            mats,
        }
    }

    /// Dual representation over the opposite quiver.
    pub fn dual(&self) -> Representation {
        Representation {
            quiver: self.quiver.opposite(),
            dims: self.dims.clone(),
            mats: self.mats.iter().map(Matrix::transpose).collect(),
        }
    }

    /// `eps^2 = 0` for both loops, for a representation of `H`.
    pub fn check_relations(&self, q: &Quiver) -> Result<()> {
        for (k, a) in q.arrows().into_iter().enumerate() {
            if let Arrow::Eps(v) = a {
                let m = &self.mats[k];
                if !(m * m).is_zero() {
                    return Err(Error::RelationViolation(format!("loop at {v} does not square to zero")));
                }
            }
        }
        Ok(())
    }

    /// Free over the dual numbers at both loop vertices.
    pub fn is_locally_free(&self, q: &Quiver) -> bool {
        q.arrows().into_iter().enumerate().all(|(k, a)| match a {
            Arrow::Eps(v) => self.dims[v] % 2 == 0 && 2 * self.mats[k].rank() == self.dims[v],
            Arrow::Eta(_) => true,
        })
    }

    /// Rank vector of a locally free representation of `H`.
    pub fn rank_vector(&self, q: &Quiver) -> Option<crate::cartan::RootVector> {
        if !self.is_locally_free(q) {
            return None;
        }
        let mut v: Vec<i64> = self.dims.iter().map(|&d| d as i64).collect();
        v[0] /= 2;
        v[q.n()] /= 2;
        Some(crate::cartan::RootVector(v))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RepJson {
            dims: self.dims.clone(),
            mats: self.mats.iter().map(Matrix::to_strings).collect(),
        })
        .expect("serializable")
    }
}

/// Offsets of the blocks `f_v` inside a flat unknown vector.
fn hom_layout(m: &Representation, n: &Representation) -> (Vec<usize>, usize) {
    let mut off = Vec::with_capacity(m.dims.len());
    let mut total = 0;
    for v in 0..m.dims.len() {
        off.push(total);
        total += n.dims[v] * m.dims[v];
    }
    (off, total)
}

/// The linear map `f -> (N(a) f_tail - f_head M(a))_a`.
fn coboundary(m: &Representation, n: &Representation) -> Matrix {
    let (off, total) = hom_layout(m, n);
    let rows: usize = m
        .quiver
        .arrows
        .iter()
        .map(|&(t, h)| n.dims[h] * m.dims[t])
        .sum();
    let mut a = Matrix::zeros(rows, total);
    let mut r0 = 0;
    for (k, &(t, h)) in m.quiver.arrows.iter().enumerate() {
        let (ma, na) = (&m.mats[k], &n.mats[k]);
        for i in 0..n.dims[h] {
            for j in 0..m.dims[t] {
                let row = r0 + i * m.dims[t] + j;
                for l in 0..n.dims[t] {
                    let c = &na[(i, l)];
                    if !c.is_zero() {
                        a[(row, off[t] + l * m.dims[t] + j)] += c;
                    }
                }
                for l in 0..m.dims[h] {
                    let c = &ma[(l, j)];
                    if !c.is_zero() {
                        a[(row, off[h] + i * m.dims[h] + l)] -= c;
                    }
                }
            }
        }
        r0 += n.dims[h] * m.dims[t];
    }
    a
}

/// A basis of `Hom(M, N)`, each element given as its blocks `f_v` (`dim N(v) x dim M(v)`).
pub fn hom_basis(m: &Representation, n: &Representation) -> Vec<Vec<Matrix>> {
    assert_eq!(m.quiver, n.quiver);
    let (off, _) = hom_layout(m, n);
    coboundary(m, n)
        .nullspace()
        .into_iter()
        .map(|x| unflatten(m, n, &off, &x))
        .collect()
}

fn unflatten(m: &Representation, n: &Representation, off: &[usize], x: &[Rational]) -> Vec<Matrix> {
    (0..m.dims.len())
        .map(|v| {
            let mut f = Matrix::zeros(n.dims[v], m.dims[v]);
            for i in 0..n.dims[v] {
                for j in 0..m.dims[v] {
                    f[(i, j)] = x[off[v] + i * m.dims[v] + j].clone();
                }
            }
            f
        })
        .collect()
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    let a = coboundary(m, n);
    a.cols() - a.rank()
}

/// `dim Ext^1(M, N)` for representations of `H`, computed from derivations.
///
/// A cocycle assigns `d_a : M(tail) -> N(head)` to each arrow; at a loop it must
/// satisfy `N(e) d + d M(e) = 0`. Coboundaries are the image of the map whose
/// kernel is `Hom(M, N)`.
pub fn ext1_dim(q: &Quiver, m: &Representation, n: &Representation) -> usize {
    let arrows = q.arrows();
    let mut z1 = 0;
    for (k, a) in arrows.iter().enumerate() {
        let (t, h) = m.quiver.arrows[k];
        let size = n.dims[h] * m.dims[t];
        match a {
            Arrow::Eta(_) => z1 += size,
            Arrow::Eps(_) => {
                let (me, ne) = (&m.mats[k], &n.mats[k]);
                let (dn, dm) = (n.dims[h], m.dims[t]);
                let mut c = Matrix::zeros(dn * dm, dn * dm);
                for i in 0..dn {
                    for j in 0..dm {
                        let row = i * dm + j;
                        for l in 0..dn {
                            if !ne[(i, l)].is_zero() {
                                c[(row, l * dm + j)] += &ne[(i, l)];
                            }
                        }
                        for l in 0..dm {
                            if !me[(l, j)].is_zero() {
                                c[(row, i * dm + l)] += &me[(l, j)];
                            }
                        }
                    }
                }
                z1 += size - c.rank();
            }
        }
    }
    let a = coboundary(m, n);
    let b1 = a.rank();
    z1 - b1
}

/// Decides `M ~ N` by testing random elements of `Hom(M, N)` for invertibility.
///
/// Any invertible sample is a certificate. A negative answer after `trials`
/// samples drawn from a large integer range is correct with overwhelming
/// probability; the generator is seeded, so answers are reproducible.
pub fn is_isomorphic(m: &Representation, n: &Representation, trials: usize) -> bool {
    if m.quiver != n.quiver || m.dims != n.dims {
        return false;
    }
    let basis = hom_basis(m, n);
    if basis.is_empty() {
        return m.total_dim() == 0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..trials {
        let coeffs: Vec<Rational> = basis
            .iter()
            .map(|_| rat(rng.gen_range(-1000..=1000)))
            .collect();
        let invertible = (0..m.dims.len()).all(|v| {
            let mut f = Matrix::zeros(n.dims[v], m.dims[v]);
            for (c, b) in coeffs.iter().zip(&basis) {
                f = &f + &b[v].scale(c);
            }
            f.rank() == m.dims[v]
        });
        if invertible {
            return true;
        }
    }
    false
}

/// Per vertex, a basis (as columns) of the vectors killed by every arrow leaving it.
pub fn socle(m: &Representation) -> Vec<Matrix> {
    (0..m.dims.len())
        .map(|v| {
            let rows: Vec<Vec<Rational>> = m
                .quiver
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, &(t, _))| t == v)
                .flat_map(|(k, _)| (0..m.mats[k].rows()).map(move |i| m.mats[k].row(i).to_vec()))
                .collect();
            if rows.is_empty() || m.dims[v] == 0 {
                return Matrix::identity(m.dims[v]);
            }
            let kernel = Matrix::from_rows(rows).nullspace();
            let mut b = Matrix::zeros(m.dims[v], kernel.len());
            for (j, x) in kernel.iter().enumerate() {
                for (i, c) in x.iter().enumerate() {
                    b[(i, j)] = c.clone();
                }
            }
            b
        })
        .collect()
}

/// `M / U` for a subrepresentation `U` given per vertex by a matrix of full column rank.
pub fn quotient(m: &Representation, sub: &[Matrix]) -> Result<Representation> {
    let mut lift = Vec::with_capacity(m.dims.len());
    let mut proj = Vec::with_capacity(m.dims.len());
    for v in 0..m.dims.len() {
        let d = m.dims[v];
        let f = &sub[v];
        if d == 0 {
            lift.push(Matrix::zeros(0, 0));
            proj.push(Matrix::zeros(0, 0));
            continue;
        }
        let mut cols: Vec<Vec<Rational>> = (0..f.cols()).map(|j| (0..d).map(|i| f[(i, j)].clone()).collect()).collect();
        let mut extra = Vec::new();
        for e in 0..d {
            let mut cand = cols.clone();
            cand.push((0..d).map(|i| if i == e { Rational::one() } else { Rational::zero() }).collect());
            if Matrix::from_rows(cand.clone()).rank() == cand.len() {
                cols = cand;
                extra.push(e);
            }
        }
        if cols.len() != d {
            return Err(Error::UnsupportedShape("submodule basis is not independent".into()));
        }
        let basis = Matrix::from_rows(cols).transpose();
        let inv = basis.inverse().expect("completed basis");
        let k = f.cols();
        let mut l = Matrix::zeros(d, d - k);
        for (j, &e) in extra.iter().enumerate() {
            l[(e, j)] = Rational::one();
        }
        let mut p = Matrix::zeros(d - k, d);
        for i in 0..d - k {
            for j in 0..d {
                p[(i, j)] = inv[(k + i, j)].clone();
            }
        }
        lift.push(l);
        proj.push(p);
    }
    let dims: Vec<usize> = (0..m.dims.len()).map(|v| m.dims[v] - sub[v].cols()).collect();
    let mats = m
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(k, &(t, h))| &(&proj[h] * &m.mats[k]) * &lift[t])
        .collect();
    Representation::new(m.quiver.clone(), dims, mats)
}

/// Thin representation of a host quiver: every space `k`, every map `1`.
pub fn thin(quiver: RepQuiver) -> Representation {
    let dims = vec![1; quiver.vertices];
    let mats = quiver
        .arrows
        .iter()
        .map(|_| Matrix::from_rows(vec![vec![Rational::one()]]))
        .collect();
    Representation { quiver, dims, mats }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RepQuiver {
        RepQuiver {
            vertices: 2,
            arrows: vec![(0, 1)],
        }
    }

    fn simple(v: usize) -> Representation {
        let mut dims = vec![0, 0];
        dims[v] = 1;
        Representation::new(a2(), dims.clone(), vec![Matrix::zeros(dims[1], dims[0])]).unwrap()
    }

    #[test]
    fn hom_dims_on_a2() {
        let p = thin(a2());
        let s0 = simple(0);
        let s1 = simple(1);
        assert_eq!(hom_dim(&p, &s0), 1);
        assert_eq!(hom_dim(&s1, &p), 1);
        assert_eq!(hom_dim(&s0, &p), 0);
        assert_eq!(hom_dim(&p, &p), 1);
        assert!(is_isomorphic(&p, &p, 4));
        assert!(!is_isomorphic(&s0.direct_sum(&s1), &p, 4));
    }
}
