//! Finite-dimensional representations of a quiver with relations.
//!
//! A representation assigns a vector space `k^{dims[v]}` to every vertex and a
//! matrix of shape `dims[tgt] × dims[src]` to every arrow. Standard modules
//! follow one fixed convention: `P_i` at vertex `j` is spanned by the basis
//! paths `i → j` with arrows acting by post-composition, and `I_i` at `j` is the
//! dual of the span of paths `j → i`.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::pathalg::{AlgElem, Algebra, Path};
use num_traits::{One, Zero};
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

/// A morphism of representations: one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepMap {
    pub maps: Vec<Matrix>,
}

impl Rep {
    pub fn zero(alg: &Algebra) -> Rep {
        Rep { dims: vec![0; alg.vertex_count()], maps: alg.quiver().arrows().iter().map(|_| Matrix::zeros(0, 0)).collect() }
    }

    /// Validates shapes and every relation; the checked constructor.
    pub fn new(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Rep> {
        if dims.len() != alg.vertex_count() || maps.len() != alg.quiver().arrows().len() {
            return Err(Error::Shape("dimension vector or arrow list has the wrong length".into()));
        }
        for (a, m) in alg.quiver().arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.tgt], dims[a.src]) {
                return Err(Error::Shape(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    a.id,
                    dims[a.tgt],
                    dims[a.src],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let rep = Rep { dims, maps };
        for r in alg.relations() {
            let (_, first) = &r.terms[0];
            let src = alg.quiver().arrows()[first[0]].src;
            let tgt = alg.quiver().arrows()[*first.last().unwrap()].tgt;
            let mut sum = Matrix::zeros(rep.dims[tgt], rep.dims[src]);
            for (c, arrows) in &r.terms {
                sum = sum.add(&rep.arrow_product(arrows).scale(c));
            }
            if !sum.is_zero() {
                return Err(Error::Relation(format!("relation on arrows {:?} does not hold", first)));
            }
        }
        Ok(rep)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Product of arrow matrices along a sequence in application order.
    fn arrow_product(&self, arrows: &[usize]) -> Matrix {
        let mut m: Option<Matrix> = None;
        for &a in arrows {
            m = Some(match m {
                None => self.maps[a].clone(),
                Some(prev) => self.maps[a].mul(&prev),
            });
        }
        m.expect("nonempty arrow sequence")
    }

    /// The action `M(p): M_src → M_tgt` of a path.
    pub fn path_action(&self, p: &Path) -> Matrix {
        if p.is_empty() {
            Matrix::identity(self.dims[p.src])
        } else {
            self.arrow_product(&p.arrows)
        }
    }

    /// The action of an algebra element supported on paths `src → tgt`.
    pub fn elem_action(&self, alg: &Algebra, x: &AlgElem, src: usize, tgt: usize) -> Matrix {
        let mut out = Matrix::zeros(self.dims[tgt], self.dims[src]);
        for &i in alg.paths_between(src, tgt) {
            if !x[i].is_zero() {
                out = out.add(&self.path_action(&alg.basis()[i]).scale(&x[i]));
            }
        }
        out
    }

    /// Action of the `i`-th basis path.
    pub fn basis_action(&self, alg: &Algebra, i: usize) -> Matrix {
        self.path_action(&alg.basis()[i])
    }
}

impl RepMap {
    pub fn zero(src: &Rep, tgt: &Rep) -> RepMap {
        RepMap { maps: src.dims.iter().zip(&tgt.dims).map(|(&s, &t)| Matrix::zeros(t, s)).collect() }
    }

    pub fn identity(m: &Rep) -> RepMap {
        RepMap { maps: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &RepMap) -> RepMap {
        RepMap { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        RepMap { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &RepMap) -> RepMap {
        RepMap { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, s: &Q) -> RepMap {
        RepMap { maps: self.maps.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn neg(&self) -> RepMap {
        self.scale(&-Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<RepMap> {
        Some(RepMap { maps: self.maps.iter().map(Matrix::inverse).collect::<Option<_>>()? })
    }

    /// Flattens the vertex matrices into one coordinate vector.
    pub fn flatten(&self) -> Vec<Q> {
        self.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    /// Checks shapes and that every arrow square commutes.
    pub fn check(&self, alg: &Algebra, src: &Rep, tgt: &Rep) -> Result<()> {
        if self.maps.len() != src.dims.len() {
            return Err(Error::Shape("vertex count".into()));
        }
        for (v, m) in self.maps.iter().enumerate() {
            if m.shape() != (tgt.dims[v], src.dims[v]) {
                return Err(Error::Shape(format!(
                    "vertex {} needs {}x{}, got {}x{}",
                    alg.quiver().vertices()[v],
                    tgt.dims[v],
                    src.dims[v],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        for (ai, a) in alg.quiver().arrows().iter().enumerate() {
            let lhs = tgt.maps[ai].mul(&self.maps[a.src]);
            let rhs = self.maps[a.tgt].mul(&src.maps[ai]);
            if lhs != rhs {
                return Err(Error::NotChainMap(format!("square at arrow `{}` does not commute", a.id)));
            }
        }
        Ok(())
    }
}

/// `P_i`: basis paths `i → j` at vertex `j`, arrows acting by post-composition.
pub fn projective(alg: &Algebra, i: usize) -> Rep {
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|j| alg.paths_between(i, j).len()).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let arrow = arrow_elem(alg, ai);
            let src = alg.paths_between(i, a.src);
            let tgt = alg.paths_between(i, a.tgt);
            let mut m = Matrix::zeros(tgt.len(), src.len());
            for (c, &p) in src.iter().enumerate() {
                let img = alg.compose(&arrow, &alg.basis_elem(p));
                for (r, &t) in tgt.iter().enumerate() {
                    m.set(r, c, img[t].clone());
                }
            }
            m
        })
        .collect();
    Rep { dims, maps }
}

/// `I_i`: the dual of the paths `j → i` at vertex `j`. For `a: j → k` the entry
/// `[q'][p]` is the coefficient of `p` in `q' ∘ a`.
pub fn injective(alg: &Algebra, i: usize) -> Rep {
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|j| alg.paths_between(j, i).len()).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let arrow = arrow_elem(alg, ai);
            let src = alg.paths_between(a.src, i);
            let tgt = alg.paths_between(a.tgt, i);
            let mut m = Matrix::zeros(tgt.len(), src.len());
            for (r, &qp) in tgt.iter().enumerate() {
                let img = alg.compose(&alg.basis_elem(qp), &arrow);
                for (c, &p) in src.iter().enumerate() {
                    m.set(r, c, img[p].clone());
                }
            }
            m
        })
        .collect();
    Rep { dims, maps }
}

pub fn simple(alg: &Algebra, i: usize) -> Rep {
    let mut dims = vec![0; alg.vertex_count()];
    dims[i] = 1;
    let maps = alg.quiver().arrows().iter().map(|a| Matrix::zeros(dims[a.tgt], dims[a.src])).collect();
    Rep { dims, maps }
}

fn arrow_elem(alg: &Algebra, a: usize) -> AlgElem {
    match alg.arrow_basis_index(a) {
        Some(i) => alg.basis_elem(i),
        None => alg.reduce_terms(&[(Q::one(), vec![a])]).expect("arrow path"),
    }
}

/// The map `P_s → P_t` given by a combination of paths `t → s` (`q ↦ q ∘ p`).
pub fn projective_map(alg: &Algebra, s: usize, t: usize, p: &AlgElem) -> RepMap {
    let maps = (0..alg.vertex_count())
        .map(|j| {
            let src = alg.paths_between(s, j);
            let tgt = alg.paths_between(t, j);
            let mut m = Matrix::zeros(tgt.len(), src.len());
            for (c, &qi) in src.iter().enumerate() {
                let img = alg.compose(&alg.basis_elem(qi), p);
                for (r, &ti) in tgt.iter().enumerate() {
                    m.set(r, c, img[ti].clone());
                }
            }
            m
        })
        .collect();
    RepMap { maps }
}

/// The map `I_s → I_t` given by a combination of paths `t → s` (`φ ↦ φ(p ∘ −)`).
pub fn injective_map(alg: &Algebra, s: usize, t: usize, p: &AlgElem) -> RepMap {
    let maps = (0..alg.vertex_count())
        .map(|j| {
            let src = alg.paths_between(j, s);
            let tgt = alg.paths_between(j, t);
            let mut m = Matrix::zeros(tgt.len(), src.len());
            for (r, &ri) in tgt.iter().enumerate() {
                let img = alg.compose(p, &alg.basis_elem(ri));
                for (c, &qi) in src.iter().enumerate() {
                    m.set(r, c, img[qi].clone());
                }
            }
            m
        })
        .collect();
    RepMap { maps }
}

/// Blockwise direct sum with the canonical injections and projections.
pub struct DirectSum {
    pub sum: Rep,
    pub injections: Vec<RepMap>,
    pub projections: Vec<RepMap>,
}

pub fn direct_sum(alg: &Algebra, parts: &[&Rep]) -> DirectSum {
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let maps =
        (0..alg.quiver().arrows().len()).map(|a| Matrix::block_diag(&parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>())).collect();
    let sum = Rep { dims, maps };
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offsets = vec![0; n];
    for p in parts {
        let mut inj = RepMap::zero(p, &sum);
        for (v, off) in offsets.iter_mut().enumerate() {
            inj.maps[v].set_block(*off, 0, &Matrix::identity(p.dims[v]));
            *off += p.dims[v];
        }
        projections.push(RepMap { maps: inj.maps.iter().map(Matrix::transpose).collect() });
        injections.push(inj);
    }
    DirectSum { sum, injections, projections }
}

/// The subrepresentation spanned at each vertex by the columns of `basis[v]`,
/// which must be closed under the arrows. Returns it with its inclusion.
pub fn subrep(alg: &Algebra, m: &Rep, basis: &[Matrix]) -> (Rep, RepMap) {
    let dims: Vec<usize> = basis.iter().map(Matrix::cols).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let img = m.maps[ai].mul(&basis[a.src]);
            if dims[a.tgt] == 0 || img.cols() == 0 {
                return Matrix::zeros(dims[a.tgt], dims[a.src]);
            }
            basis[a.tgt].solve(&img).expect("subspace closed under arrows")
        })
        .collect();
    (Rep { dims, maps }, RepMap { maps: basis.to_vec() })
}

/// The quotient of `m` by the subrepresentation with column spans `sub[v]`,
/// with the projection and a vertexwise linear section.
pub fn quotient(alg: &Algebra, m: &Rep, sub: &[Matrix]) -> (Rep, RepMap, Vec<Matrix>) {
    let mut proj = Vec::new();
    let mut sect = Vec::new();
    for (v, s) in sub.iter().enumerate() {
        let s = if s.cols() == 0 { Matrix::zeros(m.dims[v], 0) } else { s.clone() };
        let (p, sc) = s.cokernel_projection();
        proj.push(p);
        sect.push(sc);
    }
    let dims: Vec<usize> = proj.iter().map(Matrix::rows).collect();
    let maps = alg.quiver().arrows().iter().enumerate().map(|(ai, a)| proj[a.tgt].mul(&m.maps[ai]).mul(&sect[a.src])).collect();
    (Rep { dims, maps }, RepMap { maps: proj }, sect)
}

pub fn kernel(alg: &Algebra, src: &Rep, f: &RepMap) -> (Rep, RepMap) {
    let basis: Vec<Matrix> = f.maps.iter().zip(&src.dims).map(|(m, &d)| kernel_basis(m, d)).collect();
    subrep(alg, src, &basis)
}

pub fn image(alg: &Algebra, tgt: &Rep, f: &RepMap) -> (Rep, RepMap) {
    let basis: Vec<Matrix> =
        f.maps.iter().zip(&tgt.dims).map(|(m, &d)| if m.cols() == 0 { Matrix::zeros(d, 0) } else { m.column_basis() }).collect();
    subrep(alg, tgt, &basis)
}

pub fn cokernel(alg: &Algebra, tgt: &Rep, f: &RepMap) -> (Rep, RepMap) {
    let basis: Vec<Matrix> =
        f.maps.iter().zip(&tgt.dims).map(|(m, &d)| if m.cols() == 0 { Matrix::zeros(d, 0) } else { m.column_basis() }).collect();
    let (q, p, _) = quotient(alg, tgt, &basis);
    (q, p)
}

pub(crate) fn kernel_basis(m: &Matrix, src_dim: usize) -> Matrix {
    if m.rows() == 0 {
        Matrix::identity(src_dim)
    } else {
        m.nullspace()
    }
}

/// Basis of `Hom(M, N)` as the nullspace of the intertwining system.
pub fn hom_basis(alg: &Algebra, m: &Rep, n: &Rep) -> Vec<RepMap> {
    let nv = alg.vertex_count();
    let mut offsets = Vec::with_capacity(nv + 1);
    let mut total = 0;
    for v in 0..nv {
        offsets.push(total);
        total += m.dims[v] * n.dims[v];
    }
    if total == 0 {
        return Vec::new();
    }
    // Unknown X_v is n.dims[v] × m.dims[v], row-major at offsets[v].
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let (s, t) = (a.src, a.tgt);
        let (ms, mt, ns, nt) = (m.dims[s], m.dims[t], n.dims[s], n.dims[t]);
        // N(a) X_s − X_t M(a) = 0, an nt × ms system.
        for r in 0..nt {
            for c in 0..ms {
                let mut row = vec![Q::zero(); total];
                for k in 0..ns {
                    let coef = n.maps[ai].get(r, k);
                    if !coef.is_zero() {
                        row[offsets[s] + k * ms + c] += coef;
                    }
                }
                for k in 0..mt {
                    let coef = m.maps[ai].get(k, c);
                    if !coef.is_zero() {
                        row[offsets[t] + r * mt + k] -= coef;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let null = Matrix::from_rows(rows, total).nullspace();
    (0..null.cols())
        .map(|j| {
            let col = null.col(j);
            RepMap {
                maps: (0..nv)
                    .map(|v| {
                        let (r, c) = (n.dims[v], m.dims[v]);
                        Matrix::from_rows((0..r).map(|i| col[offsets[v] + i * c..offsets[v] + (i + 1) * c].to_vec()).collect(), c)
                    })
                    .collect(),
            }
        })
        .collect()
}

pub fn combine(basis: &[RepMap], coeffs: &[Q]) -> Option<RepMap> {
    let mut it = basis.iter().zip(coeffs);
    let (b0, c0) = it.next()?;
    Some(it.fold(b0.scale(c0), |acc, (b, c)| acc.add(&b.scale(c))))
}

/// Searches `Hom(M, N)` for an isomorphism: seeded random combinations first,
/// then a `{-1, 0, 1}` grid when the space is small.
pub fn is_isomorphic(alg: &Algebra, m: &Rep, n: &Rep) -> Option<RepMap> {
    if m.dims != n.dims {
        return None;
    }
    if m.is_zero() {
        return Some(RepMap::zero(m, n));
    }
    let basis = hom_basis(alg, m, n);
    crate::sampling::search(basis.len(), |c| {
        let f = combine(&basis, c)?;
        f.is_iso().then_some(f)
    })
}

/// Cokernel of a random map `⊕ P_s → ⊕ P_t` (sources `srcs`, targets
/// `tgts`), with path coefficients in `[-2, 2]`. Every finite-dimensional
/// module arises this way, so property tests draw from here.
pub fn random_rep<R: Rng>(alg: &Algebra, srcs: &[usize], tgts: &[usize], rng: &mut R) -> Rep {
    let ps: Vec<Rep> = srcs.iter().map(|&s| projective(alg, s)).collect();
    let pt: Vec<Rep> = tgts.iter().map(|&t| projective(alg, t)).collect();
    let src = direct_sum(alg, &ps.iter().collect::<Vec<_>>());
    let tgt = direct_sum(alg, &pt.iter().collect::<Vec<_>>());
    let mut f = RepMap::zero(&src.sum, &tgt.sum);
    for (i, &s) in srcs.iter().enumerate() {
        for (j, &t) in tgts.iter().enumerate() {
            let mut p = alg.zero();
            for &b in alg.paths_between(t, s) {
                p[b] = crate::linalg::q(rng.gen_range(-2..=2));
            }
            let block = projective_map(alg, s, t, &p);
            f = f.add(&tgt.injections[j].after(&block).after(&src.projections[i]));
        }
    }
    cokernel(alg, &tgt.sum, &f).0
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::pathalg::bondal;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn projective_modules_match_displays() {
        let alg = bondal();
        let p1 = projective(&alg, 0);
        assert_eq!(p1.dims, vec![1, 2, 2]);
        assert_eq!(p1.maps[0], m(&[&[1], &[0]]));
        assert_eq!(p1.maps[1], m(&[&[0], &[1]]));
        assert_eq!(p1.maps[2], m(&[&[1, 0], &[0, 0]]));
        assert_eq!(p1.maps[3], m(&[&[0, 0], &[0, 1]]));
        let p2 = projective(&alg, 1);
        assert_eq!(p2.dims, vec![0, 1, 2]);
        assert_eq!(p2.maps[2], m(&[&[1], &[0]]));
        assert_eq!(p2.maps[3], m(&[&[0], &[1]]));
        assert_eq!(projective(&alg, 2), simple(&alg, 2));
    }

    #[test]
    fn injective_modules_match_displays() {
        let alg = bondal();
        let i3 = injective(&alg, 2);
        assert_eq!(i3.dims, vec![2, 2, 1]);
        assert_eq!(i3.maps[0], m(&[&[1, 0], &[0, 0]]));
        assert_eq!(i3.maps[1], m(&[&[0, 0], &[0, 1]]));
        assert_eq!(i3.maps[2], m(&[&[1, 0]]));
        assert_eq!(i3.maps[3], m(&[&[0, 1]]));
        let i2 = injective(&alg, 1);
        assert_eq!(i2.dims, vec![2, 1, 0]);
        assert_eq!(i2.maps[0], m(&[&[1, 0]]));
        assert_eq!(i2.maps[1], m(&[&[0, 1]]));
        assert_eq!(injective(&alg, 0).dims, vec![1, 0, 0]);
    }

    #[test]
    fn hom_dims_between_projectives() {
        let alg = bondal();
        let cartan = alg.cartan_matrix();
        for i in 0..3 {
            for j in 0..3 {
                let d = hom_basis(&alg, &projective(&alg, i), &projective(&alg, j)).len();
                assert_eq!(d as i64, cartan[j][i], "Hom(P{}, P{})", i + 1, j + 1);
            }
        }
        assert_eq!(hom_basis(&alg, &projective(&alg, 2), &projective(&alg, 1)).len(), 2);
        assert_eq!(hom_basis(&alg, &projective(&alg, 1), &projective(&alg, 2)).len(), 0);
    }

    #[test]
    fn path_maps_are_morphisms() {
        let alg = bondal();
        for s in 0..3 {
            for t in 0..3 {
                for &p in alg.paths_between(t, s) {
                    let e = alg.basis_elem(p);
                    projective_map(&alg, s, t, &e).check(&alg, &projective(&alg, s), &projective(&alg, t)).unwrap();
                    injective_map(&alg, s, t, &e).check(&alg, &injective(&alg, s), &injective(&alg, t)).unwrap();
                }
            }
        }
    }

    #[test]
    fn relation_violation_rejected() {
        let alg = bondal();
        let one = m(&[&[1]]);
        assert!(Rep::new(&alg, vec![1, 1, 1], vec![one.clone(), one.clone(), one.clone(), one]).is_err());
        let p = Rep::new(&alg, vec![1, 1, 1], vec![m(&[&[1]]), m(&[&[0]]), m(&[&[1]]), m(&[&[0]])]).unwrap();
        assert_eq!(hom_basis(&alg, &p, &p).len(), 1);
        assert!(Rep::new(&alg, vec![1, 1], vec![]).is_err());
    }

    #[test]
    fn kernel_cokernel_image() {
        let alg = bondal();
        let p2 = projective(&alg, 1);
        let id = RepMap::identity(&p2);
        assert!(kernel(&alg, &p2, &id).0.is_zero());
        assert!(cokernel(&alg, &p2, &id).0.is_zero());
        let f = projective_map(&alg, 2, 1, &alg.basis_elem(5));
        let p3 = projective(&alg, 2);
        let (im, _) = image(&alg, &p2, &f);
        assert_eq!(im.dims, vec![0, 0, 1]);
        let (ck, proj) = cokernel(&alg, &p2, &f);
        assert_eq!(ck.dims, vec![0, 1, 1]);
        proj.check(&alg, &p2, &ck).unwrap();
        assert!(kernel(&alg, &p3, &f).0.is_zero());
    }

    #[test]
    fn direct_sum_biproduct() {
        let alg = bondal();
        let p2 = projective(&alg, 1);
        let ds = direct_sum(&alg, &[&p2, &p2]);
        assert_eq!(ds.sum.dims, vec![0, 2, 4]);
        for (i, inj) in ds.injections.iter().enumerate() {
            for (j, proj) in ds.projections.iter().enumerate() {
                let c = proj.after(inj);
                assert_eq!(c.is_zero(), i != j);
            }
        }
        assert!(direct_sum(&alg, &[]).sum.is_zero());
    }

    #[test]
    fn isomorphism_search() {
        let alg = bondal();
        let p = Rep::new(&alg, vec![1, 1, 1], vec![m(&[&[1]]), m(&[&[0]]), m(&[&[1]]), m(&[&[0]])]).unwrap();
        let pt = Rep::new(&alg, vec![1, 1, 1], vec![m(&[&[0]]), m(&[&[1]]), m(&[&[0]]), m(&[&[1]])]).unwrap();
        assert!(is_isomorphic(&alg, &p, &p).is_some());
        assert!(is_isomorphic(&alg, &p, &pt).is_none());
        let scaled = Rep::new(&alg, vec![1, 1, 1], vec![m(&[&[2]]), m(&[&[0]]), m(&[&[5]]), m(&[&[0]])]).unwrap();
        let iso = is_isomorphic(&alg, &p, &scaled).unwrap();
        iso.check(&alg, &p, &scaled).unwrap();
        assert!(iso.is_iso());
        let _ = q(0);
    }
}
