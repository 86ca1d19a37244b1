use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::quiver::{Arrow, Quiver};
use crate::strings::{Band, StringWord};

use super::rep::{thin, RepQuiver, Representation};

/// A quiver map from a path or cycle into the quiver of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Winding {
    pub host: RepQuiver,
    pub cyclic: bool,
    pub vertex_label: Vec<usize>,
    pub arrow_label: Vec<Arrow>,
}

/// A label-preserving quiver map between the hosts of two windings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WindingMorphism {
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

#[derive(Serialize)]
struct WindingJson {
    cyclic: bool,
    edges: Vec<(usize, usize, String)>,
    fibers: Vec<Vec<usize>>,
}

/// Host arrow `p-1` joins `p-1` and `p` and points to `p-1` when the letter is direct.
pub fn winding_of_string(q: &Quiver, w: &StringWord) -> Winding {
    let arrows = w
        .letters()
        .iter()
        .enumerate()
        .map(|(p, x)| if x.inverse { (p, p + 1) } else { (p + 1, p) })
        .collect();
    Winding {
        host: RepQuiver {
            vertices: w.len() + 1,
            arrows,
        },
        cyclic: false,
        vertex_label: w.walk(q),
        arrow_label: w.letters().iter().map(|x| x.arrow).collect(),
    }
}

/// The cyclic host of a band; arrow `p` joins `p` and `p+1 mod l`.
pub fn winding_of_band(q: &Quiver, b: &Band) -> Winding {
    let l = b.len();
    let arrows = b
        .letters()
        .iter()
        .enumerate()
        .map(|(p, x)| {
            let next = (p + 1) % l;
            if x.inverse {
                (p, next)
            } else {
                (next, p)
            }
        })
        .collect();
    Winding {
        host: RepQuiver {
            vertices: l,
            arrows,
        },
        cyclic: true,
        vertex_label: b.walk(q),
        arrow_label: b.letters().iter().map(|x| x.arrow).collect(),
    }
}

impl Winding {
    /// Label compatibility and conditions (s), (t).
    pub fn is_winding(&self, q: &Quiver) -> bool {
        let compatible = self.host.arrows.iter().zip(&self.arrow_label).all(|(&(t, h), &a)| {
            self.vertex_label[t] == q.tail(a) && self.vertex_label[h] == q.head(a)
        });
        let distinct = |by_tail: bool| {
            (0..self.host.arrows.len()).all(|x| {
                (x + 1..self.host.arrows.len()).all(|y| {
                    let (ex, ey) = (self.host.arrows[x], self.host.arrows[y]);
                    let same_end = if by_tail { ex.0 == ey.0 } else { ex.1 == ey.1 };
                    !same_end || self.arrow_label[x] != self.arrow_label[y]
                })
            })
        };
        compatible && distinct(true) && distinct(false)
    }

    /// No host path of length two mapping onto a square of a loop.
    pub fn avoids_relations(&self) -> bool {
        let arrows = &self.host.arrows;
        (0..arrows.len()).all(|x| {
            (0..arrows.len()).all(|y| {
                x == y
                    || arrows[x].1 != arrows[y].0
                    || !(self.arrow_label[x].is_loop() && self.arrow_label[x] == self.arrow_label[y])
            })
        })
    }

    /// Windings satisfying (s), (t), the relation condition and having no
    /// automorphism besides the identity.
    pub fn is_admissible(&self, q: &Quiver) -> bool {
        self.is_winding(q) && self.avoids_relations() && morphisms(self, self).len() == 1
    }

    /// For each vertex of `H`, the host vertices over it in increasing order.
    pub fn fibers(&self, n: usize) -> Vec<Vec<usize>> {
        let mut f = vec![Vec::new(); n + 1];
        for (v, &i) in self.vertex_label.iter().enumerate() {
            f[i].push(v);
        }
        f
    }

    pub fn to_json(&self, q: &Quiver) -> serde_json::Value {
        let edges = self
            .host
            .arrows
            .iter()
            .zip(&self.arrow_label)
            .map(|(&(t, h), &a)| (t, h, q.letter_name(crate::quiver::Letter::direct(a))))
            .collect();
        serde_json::to_value(WindingJson {
            cyclic: self.cyclic,
            edges,
            fibers: self.fibers(q.n()),
        })
        .expect("serializable")
    }
}

/// All morphisms `src -> dst` with labels commuting, for a connected source.
///
/// Each placement of source vertex 0 determines at most one morphism, because
/// labels of arrows sharing an endpoint are distinct in the target.
pub fn morphisms(src: &Winding, dst: &Winding) -> Vec<WindingMorphism> {
    let mut out = Vec::new();
    let ns = src.host.vertices;
    for start in 0..dst.host.vertices {
        if dst.vertex_label[start] != src.vertex_label[0] {
            continue;
        }
        let mut vmap: Vec<Option<usize>> = vec![None; ns];
        let mut amap: Vec<Option<usize>> = vec![None; src.host.arrows.len()];
        vmap[0] = Some(start);
        let mut ok = true;
        let mut changed = true;
        while ok && changed {
            changed = false;
            for (x, &(t, h)) in src.host.arrows.iter().enumerate() {
                if amap[x].is_some() {
                    continue;
                }
                let (known, at_tail) = match (vmap[t], vmap[h]) {
                    (Some(v), _) => (v, true),
                    (None, Some(v)) => (v, false),
                    (None, None) => continue,
                };
                let cand = dst.host.arrows.iter().enumerate().find(|&(y, &(dt, dh))| {
                    dst.arrow_label[y] == src.arrow_label[x]
                        && if at_tail { dt == known } else { dh == known }
                });
                let Some((y, &(dt, dh))) = cand else {
                    ok = false;
                    break;
                };
                for (sv, dv) in [(t, dt), (h, dh)] {
                    match vmap[sv] {
                        Some(e) if e != dv => ok = false,
                        _ => vmap[sv] = Some(dv),
                    }
                }
                amap[x] = Some(y);
                changed = true;
            }
        }
        if ok && vmap.iter().all(Option::is_some) && amap.iter().all(Option::is_some) {
            out.push(WindingMorphism {
                vertex_map: vmap.into_iter().map(Option::unwrap).collect(),
                arrow_map: amap.into_iter().map(Option::unwrap).collect(),
            });
        }
    }
    out
}

/// Push-forward of a host representation to a representation of `H`.
pub fn pushforward(q: &Quiver, f: &Winding, rep: &Representation) -> Result<Representation> {
    let hq = RepQuiver::of(q);
    let fibers = f.fibers(q.n());
    let mut offset = vec![0usize; f.host.vertices];
    let mut dims = vec![0usize; q.vertex_count()];
    for (i, fib) in fibers.iter().enumerate() {
        for &v in fib {
            offset[v] = dims[i];
            dims[i] += rep.dims[v];
        }
    }
    let arrows = q.arrows();
    let mut mats: Vec<Matrix> = hq
        .arrows
        .iter()
        .map(|&(t, h)| Matrix::zeros(dims[h], dims[t]))
        .collect();
    for (x, &(t, h)) in f.host.arrows.iter().enumerate() {
        let k = arrows
            .iter()
            .position(|&a| a == f.arrow_label[x])
            .expect("label is an arrow of H");
        let block = &rep.mats[x];
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                mats[k][(offset[h] + i, offset[t] + j)] += &block[(i, j)];
            }
        }
    }
    let out = Representation::new(hq, dims, mats)?;
    out.check_relations(q)?;
    Ok(out)
}

/// The string module `M_w`.
pub fn string_module(q: &Quiver, w: &StringWord) -> Representation {
    let f = winding_of_string(q, w);
    pushforward(q, &f, &thin(f.host.clone())).expect("strings avoid relations")
}

/// Host representation of a band: identities, with a Jordan block on the first arrow.
pub fn band_host_rep(b: &Band, t: &Rational, m: usize, host: &RepQuiver) -> Result<Representation> {
    if t == &Rational::from_integer(0.into()) {
        return Err(Error::NotApplicable("band parameter must be nonzero".into()));
    }
    let param = if b.letters()[0].inverse {
        Rational::one() / t
    } else {
        t.clone()
    };
    let mut mats = vec![Matrix::identity(m); host.arrows.len()];
    mats[0] = Matrix::jordan_block(m, &param);
    Representation::new(host.clone(), vec![m; host.vertices], mats)
}

/// The band module `M_(b,t,m)`.
pub fn band_module(q: &Quiver, b: &Band, t: &Rational, m: usize) -> Result<Representation> {
    let f = winding_of_band(q, b);
    pushforward(q, &f, &band_host_rep(b, t, m, &f.host)?)
}

/// Push-forward of a host representation along a morphism of hosts.
pub fn pushforward_morphism(
    dst: &RepQuiver,
    g: &WindingMorphism,
    rep: &Representation,
) -> Result<Representation> {
    let mut offset = vec![0usize; g.vertex_map.len()];
    let mut dims = vec![0usize; dst.vertices];
    for (v, &u) in g.vertex_map.iter().enumerate() {
        offset[v] = dims[u];
        dims[u] += rep.dims[v];
    }
    let mut mats: Vec<Matrix> = dst
        .arrows
        .iter()
        .map(|&(t, h)| Matrix::zeros(dims[h], dims[t]))
        .collect();
    for (x, &(t, h)) in rep.quiver.arrows.iter().enumerate() {
        let y = g.arrow_map[x];
        let block = &rep.mats[x];
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                mats[y][(offset[h] + i, offset[t] + j)] += &block[(i, j)];
            }
        }
    }
    Representation::new(dst.clone(), dims, mats)
}
