use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cartan::{CartanData, RootVector};
use crate::error::{Error, Result};
use crate::linalg::{q as rat, Matrix, Rational};
use crate::modules::{
    band_host_rep, hom_basis, hom_dim, is_isomorphic, morphisms, pushforward_morphism, quotient, socle,
    thin, winding_of_band, winding_of_string, Representation,
};
use crate::quiver::{Letter, Quiver};
use crate::strings::{bands_within, strings_within, BasicStrings, Band, StringWord};

use super::function::ConstructibleFunction;
use super::symbol::{Indecomposable, Symbol};

/// Which isomorphism classes a universe lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UniverseKind {
    /// Only indecomposables; enough for brackets of primitive functions.
    Indecomposable,
    /// Every locally free module of the grade.
    Full,
}

/// The isomorphism classes of one grade on which products are evaluated.
#[derive(Clone, Debug)]
pub struct Universe {
    pub grade: RootVector,
    pub kind: UniverseKind,
    pub symbols: Vec<Symbol>,
}

type SubsetTable = HashMap<(Symbol, Symbol), i64>;

/// The band parameters used when a value has to be computed at a concrete `t`.
pub fn default_t_samples() -> Vec<Rational> {
    [2, 3, 5, 7, -1].into_iter().map(rat).collect()
}

/// Products, brackets and evaluations for one orientation.
pub struct ConvolutionAlgebra {
    cd: CartanData,
    basic: BasicStrings,
    t_samples: Vec<Rational>,
    tables: Mutex<HashMap<Symbol, Arc<SubsetTable>>>,
    classes: Mutex<HashMap<RootVector, Arc<Vec<Indecomposable>>>>,
}

struct HostPart {
    offset: usize,
    len: usize,
    labels: Vec<usize>,
    letters: Vec<Letter>,
    band: Option<Band>,
}

/// Disjoint union of the coefficient quivers of the summands.
struct Host {
    parts: Vec<HostPart>,
    arrows: Vec<(usize, usize)>,
    vertices: usize,
}

const MAX_HOST: usize = 48;

fn host_of(q: &Quiver, x: &Symbol) -> Result<Host> {
    if x.band_count() > 1 {
        return Err(Error::UnsupportedBandEvaluation(
            "targets with two band summands".into(),
        ));
    }
    let mut parts = Vec::new();
    let mut arrows = Vec::new();
    let mut offset = 0;
    for p in x.parts() {
        let (f, letters, band) = match p {
            Indecomposable::String(w) => (winding_of_string(q, w), w.letters().to_vec(), None),
            Indecomposable::Band { band, m: 1 } => {
                (winding_of_band(q, band), band.letters().to_vec(), Some(band.clone()))
            }
            Indecomposable::Band { .. } => {
                return Err(Error::UnsupportedBandEvaluation(
                    "band summand of multiplicity above one inside a sum".into(),
                ))
            }
        };
        arrows.extend(f.host.arrows.iter().map(|&(t, h)| (t + offset, h + offset)));
        parts.push(HostPart {
            offset,
            len: f.host.vertices,
            labels: f.vertex_label,
            letters,
            band,
        });
        offset += f.host.vertices;
    }
    if offset > MAX_HOST {
        return Err(Error::OutOfBounds(format!("host with {offset} vertices")));
    }
    Ok(Host {
        parts,
        arrows,
        vertices: offset,
    })
}

/// Vertex sets `T` with `tail in T => head in T` for every arrow.
fn closed_subsets(vertices: usize, arrows: &[(usize, usize)]) -> Vec<u64> {
    let mut at: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertices];
    for &(t, h) in arrows {
        at[t.max(h)].push((t, h));
    }
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0u64)];
    while let Some((v, mask)) = stack.pop() {
        if v == vertices {
            out.push(mask);
            continue;
        }
        for bit in [0u64, 1] {
            let m = mask | (bit << v);
            let ok = at[v]
                .iter()
                .all(|&(t, h)| m >> t & 1 == 0 || m >> h & 1 == 1);
            if ok {
                stack.push((v + 1, m));
            }
        }
    }
    out
}

fn arc(part: &HostPart, start: usize, count: usize) -> Indecomposable {
    if count == 1 {
        return Indecomposable::string(&StringWord::trivial(part.labels[start], true));
    }
    let letters = (0..count - 1)
        .map(|k| part.letters[(start + k) % part.len])
        .collect();
    Indecomposable::string(&StringWord::from_letters_unchecked(letters))
}

/// Isomorphism types of the restriction to `mask` and to its complement.
fn split(host: &Host, mask: u64) -> (Symbol, Symbol) {
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    for part in &host.parts {
        let member = |k: usize| mask >> (part.offset + k % part.len) & 1 == 1;
        let l = part.len;
        let start = match &part.band {
            Some(band) => match (0..l).find(|&k| member(k) != member(k + l - 1)) {
                Some(k) => k,
                None => {
                    let whole = Indecomposable::Band {
                        band: band.clone(),
                        m: 1,
                    };
                    if member(0) {
                        inside.push(whole);
                    } else {
                        outside.push(whole);
                    }
                    continue;
                }
            },
            None => 0,
        };
        let mut k = 0;
        while k < l {
            let side = member(start + k);
            let mut count = 1;
            while k + count < l && member(start + k + count) == side {
                count += 1;
            }
            let piece = arc(part, (start + k) % l, count);
            if side {
                inside.push(piece);
            } else {
                outside.push(piece);
            }
            k += count;
        }
    }
    (Symbol::from_parts(inside), Symbol::from_parts(outside))
}

fn random_coeffs(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| rat(rng.gen_range(-1000..=1000))).collect()
}

fn combine(basis: &[Vec<Matrix>], coeffs: &[Rational], v: usize, rows: usize, cols: usize) -> Matrix {
    let mut f = Matrix::zeros(rows, cols);
    for (c, b) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            f = &f + &b[v].scale(c);
        }
    }
    f
}

impl ConvolutionAlgebra {
    pub fn new(cd: CartanData) -> Self {
        let basic = BasicStrings::new(&cd.quiver);
        ConvolutionAlgebra {
            cd,
            basic,
            t_samples: default_t_samples(),
            tables: Mutex::new(HashMap::new()),
            classes: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_t_samples(mut self, t: Vec<Rational>) -> Result<Self> {
        if t.is_empty() || t.iter().any(Zero::is_zero) {
            return Err(Error::NotApplicable("band parameters must be nonzero".into()));
        }
        self.t_samples = t;
        Ok(self)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.cd.quiver
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cd
    }

    pub fn basic(&self) -> &BasicStrings {
        &self.basic
    }

    pub fn t_samples(&self) -> &[Rational] {
        &self.t_samples
    }

    /// Indecomposable locally free classes of rank exactly `rank`.
    pub fn indecomposables(&self, rank: &RootVector) -> Arc<Vec<Indecomposable>> {
        if let Some(c) = self.classes.lock().unwrap().get(rank) {
            return c.clone();
        }
        let mut all = self.indecomposables_within(rank);
        let found = Arc::new(all.remove(rank).unwrap_or_default());
        self.classes.lock().unwrap().insert(rank.clone(), found.clone());
        found
    }

    /// Indecomposables of every rank fitting inside `bound`, grouped by rank.
    fn indecomposables_within(&self, bound: &RootVector) -> BTreeMap<RootVector, Vec<Indecomposable>> {
        let q = self.quiver();
        let mut by_rank: BTreeMap<RootVector, Vec<Indecomposable>> = BTreeMap::new();
        for w in strings_within(q, bound) {
            if w.is_locally_free(q) {
                if let Ok(r) = w.rank_vector(q) {
                    by_rank.entry(r).or_default().push(Indecomposable::string(&w));
                }
            }
        }
        for b in bands_within(q, bound) {
            let Ok(r) = b.rank_vector(q) else { continue };
            let mut m = 1;
            while r.scaled(m as i64).le(bound) {
                by_rank.entry(r.scaled(m as i64)).or_default().push(Indecomposable::Band {
                    band: b.clone(),
                    m,
                });
                m += 1;
            }
        }
        for v in by_rank.values_mut() {
            v.sort();
            v.dedup();
        }
        by_rank
    }

    /// The classes of `grade`: indecomposables only, or all direct sums of them.
    pub fn universe(&self, grade: &RootVector, kind: UniverseKind) -> Universe {
        let symbols = match kind {
            UniverseKind::Indecomposable => self
                .indecomposables(grade)
                .iter()
                .map(|p| Symbol::from_parts(vec![p.clone()]))
                .collect(),
            UniverseKind::Full => {
                let pieces: Vec<(Indecomposable, RootVector)> = self
                    .indecomposables_within(grade)
                    .into_iter()
                    .flat_map(|(r, v)| v.into_iter().map(move |p| (p, r.clone())))
                    .collect();
                let mut out = Vec::new();
                let mut chosen = Vec::new();
                multisets(&pieces, 0, grade, &mut chosen, &mut out);
                out.sort();
                out
            }
        };
        Universe {
            grade: grade.clone(),
            kind,
            symbols,
        }
    }

    fn table(&self, x: &Symbol) -> Result<Arc<SubsetTable>> {
        if let Some(t) = self.tables.lock().unwrap().get(x) {
            return Ok(t.clone());
        }
        let host = host_of(self.quiver(), x)?;
        let mut table = SubsetTable::new();
        for mask in closed_subsets(host.vertices, &host.arrows) {
            *table.entry(split(&host, mask)).or_insert(0) += 1;
        }
        let table = Arc::new(table);
        self.tables.lock().unwrap().insert(x.clone(), table.clone());
        Ok(table)
    }

    fn is_thick_band(x: &Symbol) -> Option<(&Band, usize)> {
        match x.parts() {
            [Indecomposable::Band { band, m }] if *m > 1 => Some((band, *m)),
            _ => None,
        }
    }

    /// `chi` of `{U <= X : U ~ A, X/U ~ B}`.
    pub fn pair_value(&self, a: &Symbol, b: &Symbol, x: &Symbol) -> Result<i64> {
        let q = self.quiver();
        if &a.rank_vector(q)? + &b.rank_vector(q)? != x.rank_vector(q)? {
            return Ok(0);
        }
        if x.parts().iter().any(|p| matches!(p, Indecomposable::Band { m, .. } if *m > 1)) {
            let Some((band, m)) = Self::is_thick_band(x) else {
                return Err(Error::UnsupportedBandEvaluation(
                    "band summand of multiplicity above one inside a sum".into(),
                ));
            };
            let mut value = None;
            for t in &self.t_samples {
                let v = self.krause_value(a, b, band, t, m)?;
                match value {
                    None => value = Some(v),
                    Some(w) if w != v => {
                        return Err(Error::UnsupportedBandEvaluation(format!(
                            "value depends on the band parameter ({w} vs {v})"
                        )))
                    }
                    _ => {}
                }
            }
            return Ok(value.unwrap_or(0));
        }
        Ok(self
            .table(x)?
            .get(&(a.clone(), b.clone()))
            .copied()
            .unwrap_or(0))
    }

    /// Evaluation on `M_(b,t,m)` by Haupt's sum over winding morphisms into the band.
    ///
    /// Each pair of morphisms contributes a value computed over the path algebra
    /// of the cyclic host, see [`host_pair_value`].
    pub fn krause_value(&self, a: &Symbol, b: &Symbol, band: &Band, t: &Rational, m: usize) -> Result<i64> {
        let q = self.quiver();
        let x_sym = Symbol::band(band.clone(), m);
        if &a.rank_vector(q)? + &b.rank_vector(q)? != x_sym.rank_vector(q)? {
            return Ok(0);
        }
        if a.is_zero() {
            return Ok((b == &x_sym) as i64);
        }
        if b.is_zero() {
            return Ok((a == &x_sym) as i64);
        }
        let x = x_sym.module(q, t)?;
        for p in a.parts() {
            if hom_dim(&p.module(q, t)?, &x) == 0 {
                return Ok(0);
            }
        }
        for p in b.parts() {
            if hom_dim(&x, &p.module(q, t)?) == 0 {
                return Ok(0);
            }
        }
        let (Some(Indecomposable::String(aw)), Some(Indecomposable::String(bw))) =
            (a.is_indecomposable().then(|| &a.parts()[0]), b.is_indecomposable().then(|| &b.parts()[0]))
        else {
            return Err(Error::UnsupportedBandEvaluation(format!(
                "{} inside {} with quotient {}",
                a.format(q),
                x_sym.format(q),
                b.format(q)
            )));
        };
        let fb = winding_of_band(q, band);
        let r = band_host_rep(band, t, m, &fb.host)?;
        let (fa, fw) = (winding_of_string(q, aw), winding_of_string(q, bw));
        let (ta, tw) = (thin(fa.host.clone()), thin(fw.host.clone()));
        let mut total = 0;
        for g in morphisms(&fa, &fb) {
            let am = pushforward_morphism(&fb.host, &g, &ta)?;
            for h in morphisms(&fw, &fb) {
                let bm = pushforward_morphism(&fb.host, &h, &tw)?;
                if am.dims.iter().zip(&bm.dims).any(|(x, y)| x + y != m) {
                    continue;
                }
                total += host_pair_value(&am, &bm, &r, m).map_err(|e| match e {
                    Error::UnsupportedBandEvaluation(s) => Error::UnsupportedBandEvaluation(format!(
                        "{s} ({} inside {} with quotient {})",
                        aw.format(q),
                        x_sym.format(q),
                        bw.format(q)
                    )),
                    e => e,
                })?;
            }
        }
        Ok(total)
    }

    /// Haupt's sum over pairs of winding morphisms into the string `x`.
    ///
    /// A pair contributes one when the images partition the host of `x` and the
    /// image of `v` is closed under arrows.
    pub fn evaluate_product_on_string(&self, v: &StringWord, w: &StringWord, x: &StringWord) -> i64 {
        let q = self.quiver();
        let (fv, fw, fx) = (winding_of_string(q, v), winding_of_string(q, w), winding_of_string(q, x));
        let nx = fx.host.vertices;
        if fv.host.vertices + fw.host.vertices != nx {
            return 0;
        }
        let gs = morphisms(&fv, &fx);
        let hs = morphisms(&fw, &fx);
        let mut count = 0;
        for g in &gs {
            let mut seen = vec![0u8; nx];
            for &u in &g.vertex_map {
                seen[u] += 1;
            }
            if seen.iter().any(|&c| c > 1) {
                continue;
            }
            let closed = fx.host.arrows.iter().all(|&(t, h)| seen[t] == 0 || seen[h] == 1);
            if !closed {
                continue;
            }
            for hm in &hs {
                let mut cover = seen.clone();
                for &u in &hm.vertex_map {
                    cover[u] += 1;
                }
                if cover.iter().all(|&c| c == 1) {
                    count += 1;
                }
            }
        }
        count
    }

    /// `(chi_v * chi_w)(M_(b,t,m))`: thin count for `m = 1`, Hom-space evaluation otherwise.
    pub fn evaluate_product_on_band(
        &self,
        v: &StringWord,
        w: &StringWord,
        band: &Band,
        t: &Rational,
        m: usize,
    ) -> Result<i64> {
        let (a, b) = (Symbol::string(v), Symbol::string(w));
        if m == 1 {
            self.pair_value(&a, &b, &Symbol::band(band.clone(), 1))
        } else {
            self.krause_value(&a, &b, band, t, m)
        }
    }

    /// `(f * g)(X)` for one class `X`.
    pub fn evaluate_product(&self, f: &ConstructibleFunction, g: &ConstructibleFunction, x: &Symbol) -> Result<Rational> {
        let mut total = Rational::zero();
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                let v = self.pair_value(a, b, x)?;
                if v != 0 {
                    total += ca * cb * rat(v);
                }
            }
        }
        Ok(total)
    }

    fn convolve_on(&self, f: &ConstructibleFunction, g: &ConstructibleFunction, u: &Universe) -> Result<ConstructibleFunction> {
        let grade = f.grade() + g.grade();
        if u.grade != grade {
            return Err(Error::IncompleteUniverse(format!(
                "universe has grade {} but the product has grade {}",
                u.grade, grade
            )));
        }
        let values: Vec<(Symbol, Rational)> = u
            .symbols
            .par_iter()
            .map(|x| Ok((x.clone(), self.evaluate_product(f, g, x)?)))
            .collect::<Result<_>>()?;
        let mut out = ConstructibleFunction::zero(grade);
        for (x, v) in values {
            out.add_term(x, v);
        }
        Ok(out)
    }

    /// `f * g` on a full universe.
    pub fn convolve(&self, f: &ConstructibleFunction, g: &ConstructibleFunction, u: &Universe) -> Result<ConstructibleFunction> {
        if u.kind != UniverseKind::Full {
            return Err(Error::IncompleteUniverse(
                "products need every class of the grade, not only indecomposables".into(),
            ));
        }
        self.convolve_on(f, g, u)
    }

    /// `f * g - g * f`; an indecomposable universe is accepted when both inputs are primitive.
    pub fn bracket(&self, f: &ConstructibleFunction, g: &ConstructibleFunction, u: &Universe) -> Result<ConstructibleFunction> {
        if u.kind == UniverseKind::Indecomposable && !(f.is_primitive() && g.is_primitive()) {
            return Err(Error::IncompleteUniverse(
                "brackets of non-primitive functions need the full universe".into(),
            ));
        }
        self.convolve_on(f, g, u)?.sub(&self.convolve_on(g, f, u)?)
    }

    /// `f * g` on the full universe of its grade.
    pub fn product(&self, f: &ConstructibleFunction, g: &ConstructibleFunction) -> Result<ConstructibleFunction> {
        self.convolve(f, g, &self.universe(&(f.grade() + g.grade()), UniverseKind::Full))
    }

    /// `[f, g]` on the smallest universe that determines it.
    pub fn commutator(&self, f: &ConstructibleFunction, g: &ConstructibleFunction) -> Result<ConstructibleFunction> {
        let kind = if f.is_primitive() && g.is_primitive() {
            UniverseKind::Indecomposable
        } else {
            UniverseKind::Full
        };
        self.bracket(f, g, &self.universe(&(f.grade() + g.grade()), kind))
    }

    pub fn module_of(&self, s: &Symbol, t: &Rational) -> Result<Representation> {
        s.module(self.quiver(), t)
    }
}

/// `chi` of `{U <= R : U ~ A, R/U ~ B}` for representations of a cyclic host,
/// `R` being the Jordan-block representation of multiplicity `m`.
///
/// Zero Hom spaces give zero. Otherwise the count is taken on the side of
/// submodules and, through duality, on the side of quotients, each with
/// [`cyclic_count`] and then [`embeddings_count`]. Every method that applies
/// must give the same value.
pub fn host_pair_value(a: &Representation, b: &Representation, r: &Representation, m: usize) -> Result<i64> {
    if hom_dim(a, r) == 0 || hom_dim(r, b) == 0 {
        return Ok(0);
    }
    let shift = Matrix::jordan_block(m, &Rational::zero());
    let (da, db, dr) = (a.dual(), b.dual(), r.dual());
    let attempts = [
        cyclic_count(a, b, r, &shift),
        cyclic_count(&db, &da, &dr, &shift.transpose()),
        embeddings_count(a, b, r, m - 1),
        embeddings_count(&db, &da, &dr, 0),
    ];
    let mut value = None;
    let mut first_err = None;
    for x in attempts {
        match x {
            Ok(v) => match value {
                Some(w) if w != v => {
                    return Err(Error::UnsupportedBandEvaluation(format!("counting methods disagree: {w} and {v}")))
                }
                _ => value = Some(v),
            },
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    value.ok_or_else(|| first_err.expect("at least one method ran"))
}

/// The count when `Hom(A, R)` is a free module of rank one over
/// `End(R) = k[N]/(N^m)`, `N` acting by `shift` at every vertex.
///
/// With a generator `f`, every map is `N^j u f` for a unit `u` and a unique
/// `j`, so the maps of level `j` form one orbit of `Aut(R)`. Modulo scalars on
/// the brick `A`, that orbit is an affine space, of Euler characteristic one,
/// and all its members have isomorphic images and quotients. The count is the
/// number of levels `j` at which `N^j f` is injective with quotient `B`.
pub fn cyclic_count(a: &Representation, b: &Representation, r: &Representation, shift: &Matrix) -> Result<i64> {
    let unsupported = |s: &str| Err(Error::UnsupportedBandEvaluation(s.into()));
    let m = shift.rows();
    if hom_dim(a, a) != 1 {
        return unsupported("submodule type is not a brick");
    }
    let basis = hom_basis(a, r);
    if basis.len() != m {
        return unsupported("Hom space is not cyclic over the endomorphisms");
    }
    let apply = |f: &[Matrix], j: usize| -> Vec<Matrix> {
        f.iter()
            .map(|fv| (0..j).fold(fv.clone(), |acc, _| if acc.rows() == 0 { acc } else { shift * &acc }))
            .collect()
    };
    let is_zero = |f: &[Matrix]| f.iter().all(Matrix::is_zero);
    let mut rng = ChaCha8Rng::seed_from_u64(0xc1c1);
    let mut candidates: Vec<Vec<Matrix>> = basis.clone();
    for _ in 0..4 {
        let c = random_coeffs(&mut rng, m);
        candidates.push((0..r.dims.len()).map(|v| combine(&basis, &c, v, r.dims[v], a.dims[v])).collect());
    }
    let Some(gen) = candidates.into_iter().find(|f| !is_zero(&apply(f, m - 1))) else {
        return unsupported("no generator of the Hom space found");
    };
    let mut count = 0;
    for j in 0..m {
        let f = apply(&gen, j);
        if f.iter().zip(&a.dims).any(|(fv, &d)| d > 0 && fv.rank() != d) {
            break;
        }
        if is_isomorphic(&quotient(r, &f)?, b, 8) {
            count += 1;
        }
    }
    Ok(count)
}

/// Submodules of type `A` in `R` with quotient of type `B`, for a brick `A`
/// whose socle has dimension at most one at every vertex.
///
/// A map `A -> R` is injective exactly when it is injective on the socle, so
/// the non-injective maps form the union of the kernels `K_v` of evaluation at
/// the socle vectors. The count applies when that union is the subspace `W` of
/// maps into the maximal regular submodule of `R`, cut out at every vertex by
/// the vanishing of coordinate `radical_row`; the submodules then form the
/// complement of a projective subspace, of Euler characteristic `h - dim W`.
/// Quotients are checked on sampled maps.
pub fn embeddings_count(a: &Representation, b: &Representation, r: &Representation, radical_row: usize) -> Result<i64> {
    let unsupported = |s: &str| Err(Error::UnsupportedBandEvaluation(s.into()));
    if hom_dim(a, a) != 1 {
        return unsupported("submodule type is not a brick");
    }
    let basis = hom_basis(a, r);
    let h = basis.len();
    let soc = socle(a);
    if soc.iter().any(|s| s.cols() > 1) {
        return unsupported("socle of the submodule type is not multiplicity free");
    }
    let kernels: Vec<Matrix> = (0..a.dims.len())
        .filter(|&v| soc[v].cols() == 1)
        .map(|v| {
            Matrix::from_rows(
                (0..r.dims[v])
                    .map(|row| {
                        basis
                            .iter()
                            .map(|f| {
                                (0..a.dims[v])
                                    .map(|c| &f[v][(row, c)] * &soc[v][(c, 0)])
                                    .fold(Rational::zero(), |acc, y| acc + y)
                            })
                            .collect()
                    })
                    .collect(),
            )
        })
        .collect();
    let regular = stack_or(
        &Matrix::zeros(0, h),
        &Matrix::from_rows(
            (0..r.dims.len())
                .flat_map(|u| (0..a.dims[u]).map(move |c| (u, c)))
                .map(|(u, c)| basis.iter().map(|f| f[u][(radical_row, c)].clone()).collect())
                .collect::<Vec<Vec<Rational>>>()
                .into_iter()
                .chain(std::iter::once(vec![Rational::zero(); h]))
                .collect(),
        ),
        h,
    );
    let rk_reg = rank_or_zero(&regular, h);
    let joint = |k: &Matrix| rank_or_zero(&stack_or(k, &regular, h), h);
    let inside = kernels.iter().all(|k| joint(k) == rank_or_zero(k, h));
    let equal = kernels.iter().any(|k| joint(k) == rank_or_zero(k, h) && joint(k) == rk_reg);
    if !(inside && equal) {
        return unsupported("non-injective maps are not the maps into the regular radical");
    }
    if rk_reg == 0 {
        return Ok(0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xba2d);
    let mut checked = 0;
    while checked < 3 {
        let c = random_coeffs(&mut rng, h);
        let f: Vec<Matrix> = (0..r.dims.len())
            .map(|v| combine(&basis, &c, v, r.dims[v], a.dims[v]))
            .collect();
        if f.iter().zip(&a.dims).any(|(fv, &d)| d > 0 && fv.rank() != d) {
            continue;
        }
        if !is_isomorphic(&quotient(r, &f)?, b, 8) {
            return unsupported("generic quotient has the wrong isomorphism type");
        }
        checked += 1;
    }
    Ok(rk_reg as i64)
}

fn rank_or_zero(m: &Matrix, cols: usize) -> usize {
    if m.rows() == 0 || cols == 0 {
        0
    } else {
        m.rank()
    }
}

fn stack_or(a: &Matrix, b: &Matrix, cols: usize) -> Matrix {
    let rows: Vec<Vec<Rational>> = (0..a.rows())
        .map(|i| a.row(i).to_vec())
        .chain((0..b.rows()).map(|i| b.row(i).to_vec()))
        .filter(|r| r.len() == cols)
        .collect();
    if rows.is_empty() {
        Matrix::zeros(0, cols)
    } else {
        Matrix::from_rows(rows)
    }
}

fn multisets(
    pieces: &[(Indecomposable, RootVector)],
    from: usize,
    rest: &RootVector,
    chosen: &mut Vec<Indecomposable>,
    out: &mut Vec<Symbol>,
) {
    if rest.is_zero() {
        out.push(Symbol::from_parts(chosen.clone()));
        return;
    }
    for k in from..pieces.len() {
        let (p, r) = &pieces[k];
        if r.le(rest) {
            chosen.push(p.clone());
            multisets(pieces, k, &(rest - r), chosen, out);
            chosen.pop();
        }
    }
}

impl Universe {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}
