//! Complexes of indecomposable projectives (or injectives) stored as path data.
//!
//! A term is a list of summand vertices; a differential is a matrix of algebra
//! elements whose `(t, s)` entry is a combination of paths `v(t) → v(s)`, the
//! path-basis description of `Hom(P_{v(s)}, P_{v(t)})`. The same data describes
//! maps between injectives through `Hom(I_i, I_j) ≅ Hom(P_i, P_j)`, and the
//! Nakayama functor is the change of [`Kind`].

use super::{Complex, GradedMap};
use crate::linalg::{Matrix, Q};
use crate::pathalg::{AlgElem, Algebra};
use crate::repcore::{self, injective, projective, RepMap};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Projective,
    Injective,
}

/// Matrix of path combinations: rows index target summands, columns source.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PMat {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    entries: Vec<AlgElem>,
}

impl PMat {
    pub fn zero(alg: &Algebra, rows: &[usize], cols: &[usize]) -> PMat {
        PMat { rows: rows.to_vec(), cols: cols.to_vec(), entries: vec![alg.zero(); rows.len() * cols.len()] }
    }

    pub fn identity(alg: &Algebra, verts: &[usize]) -> PMat {
        let mut m = PMat::zero(alg, verts, verts);
        for (i, &v) in verts.iter().enumerate() {
            m.set(i, i, alg.idempotent(v));
        }
        m
    }

    pub fn get(&self, t: usize, s: usize) -> &AlgElem {
        &self.entries[t * self.cols.len() + s]
    }

    pub fn set(&mut self, t: usize, s: usize, x: AlgElem) {
        let n = self.cols.len();
        self.entries[t * n + s] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.iter().all(Zero::is_zero))
    }

    /// `self ∘ other` where `other: S → T`, `self: T → U`.
    pub fn after(&self, alg: &Algebra, other: &PMat) -> PMat {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = PMat::zero(alg, &self.rows, &other.cols);
        for u in 0..self.rows.len() {
            for s in 0..other.cols.len() {
                let mut acc = alg.zero();
                for t in 0..self.cols.len() {
                    let g = self.get(u, t);
                    let f = other.get(t, s);
                    if g.iter().all(Zero::is_zero) || f.iter().all(Zero::is_zero) {
                        continue;
                    }
                    for (a, b) in acc.iter_mut().zip(alg.compose(f, g)) {
                        *a += b;
                    }
                }
                out.set(u, s, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &PMat) -> PMat {
        PMat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> PMat {
        PMat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().map(|a| a.iter().map(|x| x * c).collect()).collect(),
        }
    }

    pub fn neg(&self) -> PMat {
        self.scale(&-Q::one())
    }

    /// Block matrix from a grid of blocks (row-major), row and column vertex
    /// lists concatenated.
    pub fn blocks(alg: &Algebra, grid: &[Vec<&PMat>]) -> PMat {
        let rows: Vec<usize> = grid.iter().flat_map(|r| r[0].rows.iter().copied()).collect();
        let cols: Vec<usize> = grid[0].iter().flat_map(|b| b.cols.iter().copied()).collect();
        let mut out = PMat::zero(alg, &rows, &cols);
        let mut r0 = 0;
        for row in grid {
            let mut c0 = 0;
            for b in row {
                for t in 0..b.rows.len() {
                    for s in 0..b.cols.len() {
                        out.set(r0 + t, c0 + s, b.get(t, s).clone());
                    }
                }
                c0 += b.cols.len();
            }
            r0 += row[0].rows.len();
        }
        out
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PMat {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &t in rows {
            for &s in cols {
                entries.push(self.get(t, s).clone());
            }
        }
        PMat { rows: rows.iter().map(|&t| self.rows[t]).collect(), cols: cols.iter().map(|&s| self.cols[s]).collect(), entries }
    }

    /// The represented map between realized sums of projectives or injectives.
    pub fn realize(&self, alg: &Algebra, kind: Kind) -> RepMap {
        let nv = alg.vertex_count();
        let dim = |v: usize, j: usize| match kind {
            Kind::Projective => alg.paths_between(v, j).len(),
            Kind::Injective => alg.paths_between(j, v).len(),
        };
        let maps = (0..nv)
            .map(|j| {
                let rdims: Vec<usize> = self.rows.iter().map(|&v| dim(v, j)).collect();
                let cdims: Vec<usize> = self.cols.iter().map(|&v| dim(v, j)).collect();
                let mut m = Matrix::zeros(rdims.iter().sum(), cdims.iter().sum());
                let mut r0 = 0;
                for (t, &vt) in self.rows.iter().enumerate() {
                    let mut c0 = 0;
                    for (s, &vs) in self.cols.iter().enumerate() {
                        let e = self.get(t, s);
                        if e.iter().any(|x| !x.is_zero()) {
                            let block = match kind {
                                Kind::Projective => repcore::projective_map(alg, vs, vt, e),
                                Kind::Injective => repcore::injective_map(alg, vs, vt, e),
                            };
                            m.set_block(r0, c0, &block.maps[j]);
                        }
                        c0 += cdims[s];
                    }
                    r0 += rdims[t];
                }
                m
            })
            .collect();
        RepMap { maps }
    }

    /// Whether some entry has a nonzero idempotent coefficient, i.e. is a unit
    /// of the local endomorphism ring.
    pub fn unit_entry(&self, alg: &Algebra) -> Option<(usize, usize)> {
        for t in 0..self.rows.len() {
            for s in 0..self.cols.len() {
                if self.rows[t] == self.cols[s] && !self.get(t, s)[alg.idempotent_index(self.rows[t])].is_zero() {
                    return Some((t, s));
                }
            }
        }
        None
    }
}

/// A bounded complex whose terms are sums of indecomposable projectives or
/// injectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathComplex {
    pub kind: Kind,
    bottom: i64,
    terms: Vec<Vec<usize>>,
    diffs: Vec<PMat>,
}

impl PathComplex {
    /// Assembles from terms and differentials; trims zero ends. Panics if
    /// `d² ≠ 0`, since every caller produces the data algorithmically.
    pub fn new(alg: &Algebra, kind: Kind, bottom: i64, mut terms: Vec<Vec<usize>>, mut diffs: Vec<PMat>) -> PathComplex {
        assert_eq!(diffs.len(), terms.len().saturating_sub(1));
        for (i, d) in diffs.iter().enumerate() {
            assert_eq!(d.cols, terms[i]);
            assert_eq!(d.rows, terms[i + 1]);
        }
        for i in 1..diffs.len() {
            assert!(diffs[i].after(alg, &diffs[i - 1]).is_zero(), "d∘d ≠ 0 in path complex");
        }
        let mut bottom = bottom;
        while terms.last().is_some_and(Vec::is_empty) {
            terms.pop();
            diffs.pop();
        }
        while terms.first().is_some_and(Vec::is_empty) {
            terms.remove(0);
            if !diffs.is_empty() {
                diffs.remove(0);
            }
            bottom += 1;
        }
        if terms.is_empty() {
            bottom = 0;
        }
        PathComplex { kind, bottom, terms, diffs }
    }

    pub fn zero(kind: Kind) -> PathComplex {
        PathComplex { kind, bottom: 0, terms: vec![], diffs: vec![] }
    }

    /// A single indecomposable in degree `n`.
    pub fn stalk(kind: Kind, v: usize, n: i64) -> PathComplex {
        PathComplex { kind, bottom: n, terms: vec![vec![v]], diffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn bottom(&self) -> i64 {
        self.bottom
    }

    pub fn top(&self) -> i64 {
        self.bottom + self.terms.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.bottom..=self.top()
    }

    pub fn term(&self, n: i64) -> &[usize] {
        let i = n - self.bottom;
        if i >= 0 && (i as usize) < self.terms.len() {
            &self.terms[i as usize]
        } else {
            &[]
        }
    }

    pub fn d(&self, alg: &Algebra, n: i64) -> PMat {
        let i = n - self.bottom;
        if i >= 0 && (i as usize) < self.diffs.len() {
            self.diffs[i as usize].clone()
        } else {
            PMat::zero(alg, self.term(n + 1), self.term(n))
        }
    }

    pub fn shift(&self, n: i64) -> PathComplex {
        let sign = if n.rem_euclid(2) == 1 { -Q::one() } else { Q::one() };
        PathComplex {
            kind: self.kind,
            bottom: if self.is_zero() { 0 } else { self.bottom - n },
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    /// Nakayama functor (projective → injective) or its inverse.
    pub fn with_kind(&self, kind: Kind) -> PathComplex {
        PathComplex { kind, ..self.clone() }
    }

    pub fn summand_count(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }

    pub fn realize(&self, alg: &Algebra) -> Complex {
        let objects = self
            .terms
            .iter()
            .map(|t| {
                let parts: Vec<_> = t
                    .iter()
                    .map(|&v| match self.kind {
                        Kind::Projective => projective(alg, v),
                        Kind::Injective => injective(alg, v),
                    })
                    .collect();
                repcore::direct_sum(alg, &parts.iter().collect::<Vec<_>>()).sum
            })
            .collect();
        let diffs = self.diffs.iter().map(|d| d.realize(alg, self.kind)).collect();
        Complex::raw(alg, self.bottom, objects, diffs)
    }

    /// Whether every differential entry lies in the radical.
    pub fn is_minimal(&self, alg: &Algebra) -> bool {
        self.diffs.iter().all(|d| d.unit_entry(alg).is_none())
    }

    /// Mapping cone of a degree-0 map `f: self → y` (same kind).
    pub fn cone(&self, alg: &Algebra, f: &PathMap, y: &PathComplex) -> PathComplex {
        let lo = (self.bottom - 1).min(y.bottom);
        let hi = (self.top() - 1).max(y.top());
        if self.is_zero() {
            return y.clone();
        }
        if y.is_zero() {
            return self.shift(1);
        }
        let terms: Vec<Vec<usize>> = (lo..=hi).map(|k| [self.term(k + 1), y.term(k)].concat()).collect();
        let diffs = (lo..hi)
            .map(|k| {
                let dx = self.d(alg, k + 1).neg();
                let fk = f.comp(alg, k + 1, self, y);
                let z = PMat::zero(alg, self.term(k + 2), y.term(k));
                PMat::blocks(alg, &[vec![&dx, &z], vec![&fk, &y.d(alg, k)]])
            })
            .collect();
        PathComplex::new(alg, self.kind, lo, terms, diffs)
    }

    /// Direct sum of complexes of one kind.
    pub fn sum(alg: &Algebra, kind: Kind, parts: &[PathComplex]) -> PathComplex {
        let parts: Vec<&PathComplex> = parts.iter().filter(|p| !p.is_zero()).collect();
        if parts.is_empty() {
            return PathComplex::zero(kind);
        }
        let lo = parts.iter().map(|p| p.bottom).min().unwrap();
        let hi = parts.iter().map(|p| p.top()).max().unwrap();
        let terms: Vec<Vec<usize>> = (lo..=hi).map(|k| parts.iter().flat_map(|p| p.term(k).iter().copied()).collect()).collect();
        let diffs = (lo..hi)
            .map(|k| {
                let ds: Vec<PMat> = parts.iter().map(|p| p.d(alg, k)).collect();
                block_diag(alg, &ds)
            })
            .collect();
        PathComplex::new(alg, kind, lo, terms, diffs)
    }
}

pub(crate) fn block_diag(alg: &Algebra, ds: &[PMat]) -> PMat {
    let rows: Vec<usize> = ds.iter().flat_map(|d| d.rows.iter().copied()).collect();
    let cols: Vec<usize> = ds.iter().flat_map(|d| d.cols.iter().copied()).collect();
    let mut out = PMat::zero(alg, &rows, &cols);
    let (mut r0, mut c0) = (0, 0);
    for d in ds {
        for t in 0..d.rows.len() {
            for s in 0..d.cols.len() {
                out.set(r0 + t, c0 + s, d.get(t, s).clone());
            }
        }
        r0 += d.rows.len();
        c0 += d.cols.len();
    }
    out
}

/// Graded map between path complexes, components keyed by source degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathMap {
    pub degree: i64,
    pub comps: BTreeMap<i64, PMat>,
}

impl PathMap {
    pub fn zero(degree: i64) -> PathMap {
        PathMap { degree, comps: BTreeMap::new() }
    }

    pub fn from_comps(degree: i64, comps: impl IntoIterator<Item = (i64, PMat)>) -> PathMap {
        PathMap { degree, comps: comps.into_iter().filter(|(_, m)| !m.is_zero()).collect() }
    }

    pub fn identity(alg: &Algebra, x: &PathComplex) -> PathMap {
        PathMap::from_comps(0, x.degrees().map(|k| (k, PMat::identity(alg, x.term(k)))).collect::<Vec<_>>())
    }

    pub fn comp(&self, alg: &Algebra, k: i64, src: &PathComplex, tgt: &PathComplex) -> PMat {
        self.comps.get(&k).cloned().unwrap_or_else(|| PMat::zero(alg, tgt.term(k + self.degree), src.term(k)))
    }

    /// `self ∘ other` with `other: X → Y`, `self: Y → Z`.
    pub fn after(&self, alg: &Algebra, other: &PathMap, x: &PathComplex, y: &PathComplex, z: &PathComplex) -> PathMap {
        let comps: Vec<(i64, PMat)> =
            x.degrees().map(|k| (k, self.comp(alg, k + other.degree, y, z).after(alg, &other.comp(alg, k, x, y)))).collect();
        PathMap::from_comps(self.degree + other.degree, comps)
    }

    pub fn add(&self, alg: &Algebra, other: &PathMap, src: &PathComplex, tgt: &PathComplex) -> PathMap {
        let keys: std::collections::BTreeSet<i64> = self.comps.keys().chain(other.comps.keys()).copied().collect();
        PathMap::from_comps(
            self.degree,
            keys.into_iter().map(|k| (k, self.comp(alg, k, src, tgt).add(&other.comp(alg, k, src, tgt)))).collect::<Vec<_>>(),
        )
    }

    pub fn scale(&self, c: &Q) -> PathMap {
        PathMap::from_comps(self.degree, self.comps.iter().map(|(&k, m)| (k, m.scale(c))).collect::<Vec<_>>())
    }

    pub fn shift(&self, n: i64) -> PathMap {
        PathMap { degree: self.degree, comps: self.comps.iter().map(|(&k, m)| (k - n, m.clone())).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(PMat::is_zero)
    }

    pub fn realize(&self, alg: &Algebra, kind: Kind) -> GradedMap {
        GradedMap::from_comps(self.degree, self.comps.iter().map(|(&k, m)| (k, m.realize(alg, kind))).collect::<Vec<_>>())
    }

    /// `d h − (−1)^{|h|} h d`, the differential of the Hom complex.
    pub fn differential(&self, alg: &Algebra, src: &PathComplex, tgt: &PathComplex) -> PathMap {
        let n = self.degree;
        let sign = if n.rem_euclid(2) == 0 { Q::one() } else { -Q::one() };
        let comps: Vec<(i64, PMat)> = (src.bottom() - 1..=src.top())
            .map(|k| {
                let a = tgt.d(alg, k + n).after(alg, &self.comp(alg, k, src, tgt));
                let b = self.comp(alg, k + 1, src, tgt).after(alg, &src.d(alg, k));
                (k, a.add(&b.scale(&-sign.clone())))
            })
            .collect();
        PathMap::from_comps(n + 1, comps)
    }
}

/// The Hom complex `Hom^•(S, Y)` from a complex of projectives `S` into a
/// complex of representations `Y`.
///
/// A degree-`n` element is a family of vectors `f_{k,s} ∈ (Y^{k+n})_{v(s)}`, one
/// per summand `s` of `S^k`, and `D f = d_Y f − (−1)^n f d_S`. A degree-`n`
/// cocycle is literally a chain map `S → Y[n]` (equivalently `S[−n] → Y`).
pub struct HomComplex<'a> {
    alg: &'a Algebra,
    src: &'a PathComplex,
    tgt: Complex,
}

/// Representatives and coordinate solver for one cohomology group.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: i64,
    pub basis: Vec<Vec<Q>>,
    boundaries: usize,
    solver: Option<crate::linalg::SpanSolver>,
}

impl Cohomology {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Class coordinates of a cocycle; `None` if `z` is not a cocycle.
    pub fn class_coords(&self, z: &[Q]) -> Option<Vec<Q>> {
        match &self.solver {
            None => z.iter().all(Zero::is_zero).then(Vec::new),
            Some(s) => s.coords(z).map(|c| c[self.boundaries..].to_vec()),
        }
    }

    /// Coordinates `(boundary part, class part)`; the boundary part expresses
    /// `z − Σ c_i b_i` in the chosen boundary basis.
    pub fn split_coords(&self, z: &[Q]) -> Option<(Vec<Q>, Vec<Q>)> {
        match &self.solver {
            None => z.iter().all(Zero::is_zero).then(|| (Vec::new(), Vec::new())),
            Some(s) => s.coords(z).map(|c| (c[..self.boundaries].to_vec(), c[self.boundaries..].to_vec())),
        }
    }
}

impl<'a> HomComplex<'a> {
    pub fn new(alg: &'a Algebra, src: &'a PathComplex, tgt: Complex) -> Self {
        assert_eq!(src.kind, Kind::Projective, "Hom complex needs a projective source");
        HomComplex { alg, src, tgt }
    }

    pub fn target(&self) -> &Complex {
        &self.tgt
    }

    pub fn source(&self) -> &PathComplex {
        self.src
    }

    pub fn range(&self) -> std::ops::RangeInclusive<i64> {
        if self.src.is_zero() || self.tgt.is_zero() {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        (self.tgt.bottom() - self.src.top())..=(self.tgt.top() - self.src.bottom())
    }

    /// `(k, summand, offset, dim)` for each coordinate block in degree `n`.
    fn slots(&self, n: i64) -> Vec<(i64, usize, usize, usize)> {
        let mut out = Vec::new();
        let mut off = 0;
        for k in self.src.degrees() {
            for (s, &v) in self.src.term(k).iter().enumerate() {
                let d = self.tgt.obj(k + n).dims[v];
                out.push((k, s, off, d));
                off += d;
            }
        }
        out
    }

    pub fn dim(&self, n: i64) -> usize {
        self.slots(n).iter().map(|s| s.3).sum()
    }

    /// Matrix of `D: Hom^n → Hom^{n+1}`.
    pub fn differential(&self, n: i64) -> Matrix {
        let alg = self.alg;
        let from = self.slots(n);
        let to = self.slots(n + 1);
        let rows: usize = to.iter().map(|s| s.3).sum();
        let cols: usize = from.iter().map(|s| s.3).sum();
        let mut m = Matrix::zeros(rows, cols);
        let sign = if n.rem_euclid(2) == 0 { -Q::one() } else { Q::one() };
        let find = |slots: &[(i64, usize, usize, usize)], k: i64, s: usize| slots.iter().find(|x| x.0 == k && x.1 == s).copied();
        for &(k, s2, roff, rdim) in &to {
            if rdim == 0 {
                continue;
            }
            let v2 = self.src.term(k)[s2];
            // d_Y f_{k,s2}
            if let Some((_, _, coff, cdim)) = find(&from, k, s2) {
                if cdim > 0 {
                    m.set_block(roff, coff, &self.tgt.d(k + n).maps[v2]);
                }
            }
            // −(−1)^n Σ_s Y(p_{s,s2}) f_{k+1,s}
            let ds = self.src.d(alg, k);
            for (s, &v) in self.src.term(k + 1).iter().enumerate() {
                let p = ds.get(s, s2);
                if p.iter().all(Zero::is_zero) {
                    continue;
                }
                let Some((_, _, coff, cdim)) = find(&from, k + 1, s) else { continue };
                if cdim == 0 {
                    continue;
                }
                let act = self.tgt.obj(k + 1 + n).elem_action(alg, p, v, v2).scale(&sign);
                for r in 0..rdim {
                    for c in 0..cdim {
                        let x = act.get(r, c);
                        if !x.is_zero() {
                            m.add_at(roff + r, coff + c, x);
                        }
                    }
                }
            }
        }
        m
    }

    pub fn cocycles(&self, n: i64) -> Matrix {
        let d = self.differential(n);
        if d.rows() == 0 {
            Matrix::identity(d.cols())
        } else {
            d.nullspace()
        }
    }

    pub fn cohomology(&self, n: i64) -> Cohomology {
        let z = self.cocycles(n);
        let prev = self.differential(n - 1);
        let b = if prev.cols() == 0 { Matrix::zeros(prev.rows(), 0) } else { prev.column_basis() };
        let nb = b.cols();
        let ext = Matrix::hstack(&[&b, &z]).column_basis();
        let basis: Vec<Vec<Q>> = (nb..ext.cols()).map(|j| ext.col(j)).collect();
        let solver = (ext.cols() > 0).then(|| crate::linalg::SpanSolver::new(ext));
        Cohomology { degree: n, basis, boundaries: nb, solver }
    }

    pub fn cohomology_dim(&self, n: i64) -> usize {
        let dn = self.differential(n);
        let dp = self.differential(n - 1);
        self.dim(n) - dn.rank() - dp.rank()
    }

    /// The graded map `realize(S) → Y` of degree `n` with these coordinates.
    pub fn to_graded_map(&self, n: i64, coords: &[Q]) -> GradedMap {
        let alg = self.alg;
        let slots = self.slots(n);
        let mut comps = Vec::new();
        for k in self.src.degrees() {
            let verts = self.src.term(k);
            let y = self.tgt.obj(k + n);
            let maps = (0..alg.vertex_count())
                .map(|j| {
                    let cdims: Vec<usize> = verts.iter().map(|&v| alg.paths_between(v, j).len()).collect();
                    let mut m = Matrix::zeros(y.dims[j], cdims.iter().sum());
                    let mut c0 = 0;
                    for (s, &v) in verts.iter().enumerate() {
                        let (_, _, off, dim) = slots.iter().find(|x| x.0 == k && x.1 == s).copied().unwrap();
                        if dim > 0 {
                            let vec = Matrix::column(coords[off..off + dim].to_vec());
                            for (c, &p) in alg.paths_between(v, j).iter().enumerate() {
                                let img = y.basis_action(alg, p).mul(&vec);
                                for r in 0..img.rows() {
                                    m.set(r, c0 + c, img.get(r, 0).clone());
                                }
                            }
                        }
                        c0 += cdims[s];
                    }
                    m
                })
                .collect();
            comps.push((k, RepMap { maps }));
        }
        GradedMap::from_comps(n, comps)
    }

    /// Coordinates of a graded map `realize(S) → Y`: evaluate on idempotents.
    pub fn coords_of(&self, f: &GradedMap) -> Vec<Q> {
        let alg = self.alg;
        let n = f.degree;
        let mut out = vec![Q::zero(); self.dim(n)];
        let src = self.src.realize(alg);
        for (k, s, off, dim) in self.slots(n) {
            if dim == 0 {
                continue;
            }
            let verts = self.src.term(k);
            let v = verts[s];
            // Column of e_v for summand s at vertex v.
            let col: usize = verts[..s].iter().map(|&w| alg.paths_between(w, v).len()).sum::<usize>()
                + alg.paths_between(v, v).iter().position(|&p| p == alg.idempotent_index(v)).unwrap();
            let m = f.comp(k, &src, &self.tgt).maps[v].clone();
            for r in 0..dim {
                out[off + r] = m.get(r, col).clone();
            }
        }
        out
    }

    /// Path-map form of coordinates when the target is a realized projective
    /// complex `t` (or its Nakayama image).
    pub fn to_path_map(&self, n: i64, coords: &[Q], t: &PathComplex) -> PathMap {
        let alg = self.alg;
        let mut comps = Vec::new();
        for k in self.src.degrees() {
            let mut m = PMat::zero(alg, t.term(k + n), self.src.term(k));
            for (s, &vs) in self.src.term(k).iter().enumerate() {
                let (_, _, off, _) = self.slots(n).into_iter().find(|x| x.0 == k && x.1 == s).unwrap();
                let mut pos = off;
                for (ti, &vt) in t.term(k + n).iter().enumerate() {
                    let mut e = alg.zero();
                    for &p in alg.paths_between(vt, vs) {
                        e[p] = coords[pos].clone();
                        pos += 1;
                    }
                    m.set(ti, s, e);
                }
            }
            comps.push((k, m));
        }
        PathMap::from_comps(n, comps)
    }

    /// Coordinates of a path map `S → t` (inverse of [`Self::to_path_map`]).
    pub fn coords_of_path_map(&self, f: &PathMap, t: &PathComplex) -> Vec<Q> {
        let alg = self.alg;
        let n = f.degree;
        let mut out = vec![Q::zero(); self.dim(n)];
        for (k, s, off, _) in self.slots(n) {
            let vs = self.src.term(k)[s];
            let m = f.comp(alg, k, self.src, t);
            let mut pos = off;
            for (ti, &vt) in t.term(k + n).iter().enumerate() {
                for &p in alg.paths_between(vt, vs) {
                    out[pos] = m.get(ti, s)[p].clone();
                    pos += 1;
                }
            }
        }
        out
    }
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use crate::pathalg::bondal;

    #[test]
    fn realize_two_term_and_nakayama() {
        let alg = bondal();
        let mut d = PMat::zero(&alg, &[1], &[2]);
        d.set(0, 0, alg.basis_elem(5));
        let x = PathComplex::new(&alg, Kind::Projective, -1, vec![vec![2], vec![1]], vec![d]);
        let r = x.realize(&alg);
        assert_eq!(r.homology_dims(&alg).get(&0), Some(&vec![0, 1, 1]));
        let nx = x.with_kind(Kind::Injective).realize(&alg);
        assert_eq!(nx.obj(-1).dims, vec![2, 2, 1]);
        assert_eq!(nx.obj(0).dims, vec![2, 1, 0]);
    }

    #[test]
    fn hom_complex_between_projectives_matches_cartan() {
        let alg = bondal();
        let c = alg.cartan_matrix();
        for i in 0..3 {
            for j in 0..3 {
                let s = PathComplex::stalk(Kind::Projective, i, 0);
                let t = PathComplex::stalk(Kind::Projective, j, 0);
                let hc = HomComplex::new(&alg, &s, t.realize(&alg));
                assert_eq!(hc.cohomology_dim(0) as i64, c[j][i]);
                let h = hc.cohomology(0);
                for b in &h.basis {
                    let pm = hc.to_path_map(0, b, &t);
                    assert_eq!(hc.coords_of_path_map(&pm, &t), *b);
                    let g = hc.to_graded_map(0, b);
                    assert_eq!(hc.coords_of(&g), *b);
                    assert_eq!(pm.realize(&alg, Kind::Projective), g);
                }
            }
        }
    }
}
