//! Projective and injective replacements built degree by degree.
//!
//! The projective side works from the top down: with `P^{>n}` and `φ^{>n}`
//! already fixed, the cycles `Z^n` of the partial cone in `P^{n+1} ⊕ X^n` get a
//! projective cover, whose two components are `−d_P^n` and `φ^n`. The injective
//! side is dual, working bottom-up with injective envelopes of cokernels.

use super::structured::{Kind, PMat, PathComplex};
use super::{Complex, GradedMap};
use crate::linalg::{Matrix, Q};
use crate::pathalg::Algebra;
use crate::repcore::{self, Rep, RepMap};
use std::collections::BTreeMap;

/// Degree steps allowed beyond the support before giving up; the global
/// dimension of any algebra handled here is far below this.
const MAX_EXTRA_STEPS: i64 = 32;

pub struct ProjReplacement {
    pub complex: PathComplex,
    /// Quasi-isomorphism `realize(complex) → X`, as Hom-complex coordinates:
    /// for each degree `k` and summand `s` a vector of `(X^k)_{v(s)}`.
    pub generators: BTreeMap<i64, Vec<Vec<Q>>>,
    pub map: GradedMap,
}

pub struct InjReplacement {
    pub complex: PathComplex,
    /// Quasi-isomorphism `X → realize(complex)`.
    pub map: GradedMap,
}

/// The map `⊕_s P_{v(s)} → Y` sending `e_{v(s)}` to `vecs[s]`.
pub(crate) fn proj_map_from_generators(alg: &Algebra, verts: &[usize], vecs: &[Vec<Q>], y: &Rep) -> RepMap {
    let maps = (0..alg.vertex_count())
        .map(|j| {
            let cdims: Vec<usize> = verts.iter().map(|&v| alg.paths_between(v, j).len()).collect();
            let mut m = Matrix::zeros(y.dims[j], cdims.iter().sum());
            let mut c0 = 0;
            for (s, &v) in verts.iter().enumerate() {
                let g = Matrix::column(vecs[s].clone());
                for (c, &p) in alg.paths_between(v, j).iter().enumerate() {
                    let img = y.basis_action(alg, p).mul(&g);
                    for r in 0..img.rows() {
                        m.set(r, c0 + c, img.get(r, 0).clone());
                    }
                }
                c0 += cdims[s];
            }
            m
        })
        .collect();
    RepMap { maps }
}

fn realize_term(alg: &Algebra, kind: Kind, verts: &[usize]) -> Rep {
    let parts: Vec<Rep> = verts
        .iter()
        .map(|&v| match kind {
            Kind::Projective => repcore::projective(alg, v),
            Kind::Injective => repcore::injective(alg, v),
        })
        .collect();
    repcore::direct_sum(alg, &parts.iter().collect::<Vec<_>>()).sum
}

/// Column-space basis, or an empty matrix with the right row count.
fn col_basis(m: &Matrix, rows: usize) -> Matrix {
    if m.cols() == 0 {
        Matrix::zeros(rows, 0)
    } else {
        m.column_basis()
    }
}

/// Extends a basis of `sub` (columns) greedily by standard vectors; returns
/// the indices of the standard vectors used.
fn complement_indices(sub: &Matrix, dim: usize) -> Vec<usize> {
    let k = sub.cols();
    let full = Matrix::hstack(&[sub, &Matrix::identity(dim)]);
    full.rref().pivots.into_iter().filter(|&p| p >= k).map(|p| p - k).collect()
}

pub fn projective_replacement(alg: &Algebra, x: &Complex) -> ProjReplacement {
    let nv = alg.vertex_count();
    if x.is_zero() {
        return ProjReplacement { complex: PathComplex::zero(Kind::Projective), generators: BTreeMap::new(), map: GradedMap::zero(0) };
    }
    let mut terms: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    let mut diffs: BTreeMap<i64, PMat> = BTreeMap::new();
    let mut gens: BTreeMap<i64, Vec<Vec<Q>>> = BTreeMap::new();
    let empty: Vec<usize> = Vec::new();

    let mut n = x.top();
    loop {
        assert!(n >= x.bottom() - MAX_EXTRA_STEPS, "projective replacement did not terminate (infinite global dimension?)");
        let p1_verts = terms.get(&(n + 1)).unwrap_or(&empty).clone();
        let p2_verts = terms.get(&(n + 2)).unwrap_or(&empty).clone();
        let p1 = realize_term(alg, Kind::Projective, &p1_verts);
        let p2 = realize_term(alg, Kind::Projective, &p2_verts);
        let xn = x.obj(n);
        let xn1 = x.obj(n + 1);
        let m = repcore::direct_sum(alg, &[&p1, xn]);
        let tgt = repcore::direct_sum(alg, &[&p2, xn1]);
        let dp = diffs.get(&(n + 1)).map(|d| d.realize(alg, Kind::Projective)).unwrap_or_else(|| RepMap::zero(&p1, &p2));
        let phi = if p1_verts.is_empty() { RepMap::zero(&p1, xn1) } else { proj_map_from_generators(alg, &p1_verts, &gens[&(n + 1)], xn1) };
        // Cone differential on P^{n+1} ⊕ X^n.
        let delta = tgt.injections[0]
            .after(&dp.neg().after(&m.projections[0]))
            .add(&tgt.injections[1].after(&phi.after(&m.projections[0])))
            .add(&tgt.injections[1].after(&x.d(n).after(&m.projections[1])));
        let (z, zin) = repcore::kernel(alg, &m.sum, &delta);
        if z.is_zero() && n < x.bottom() {
            break;
        }
        // Projective cover: per vertex, complement of the radical.
        let mut cover: Vec<(usize, Vec<Q>)> = Vec::new();
        for v in 0..nv {
            if z.dims[v] == 0 {
                continue;
            }
            let incoming: Vec<Matrix> =
                alg.quiver().arrows().iter().enumerate().filter(|(_, a)| a.tgt == v).map(|(ai, _)| z.maps[ai].clone()).collect();
            let rad = if incoming.is_empty() {
                Matrix::zeros(z.dims[v], 0)
            } else {
                col_basis(&Matrix::hstack(&incoming.iter().collect::<Vec<_>>()), z.dims[v])
            };
            for i in complement_indices(&rad, z.dims[v]) {
                cover.push((v, zin.maps[v].col(i)));
            }
        }
        let verts: Vec<usize> = cover.iter().map(|(v, _)| *v).collect();
        let p1_dims = &p1.dims;
        let mut d = PMat::zero(alg, &p1_verts, &verts);
        let mut phis = Vec::new();
        for (s, (v, vec)) in cover.iter().enumerate() {
            let split = p1_dims[*v];
            // The P^{n+1} part at vertex v is ⊕_t paths v(t) → v.
            let mut pos = 0;
            for (t, &vt) in p1_verts.iter().enumerate() {
                let mut e = alg.zero();
                for &p in alg.paths_between(vt, *v) {
                    e[p] = -vec[pos].clone();
                    pos += 1;
                }
                d.set(t, s, e);
            }
            debug_assert_eq!(pos, split);
            phis.push(vec[split..].to_vec());
        }
        if !verts.is_empty() {
            terms.insert(n, verts);
            diffs.insert(n, d);
            gens.insert(n, phis);
        }
        n -= 1;
    }

    let lo = *terms.keys().next().unwrap_or(&0);
    let hi = *terms.keys().last().unwrap_or(&0);
    let term_list: Vec<Vec<usize>> = (lo..=hi).map(|k| terms.get(&k).cloned().unwrap_or_default()).collect();
    let diff_list: Vec<PMat> = (lo..hi)
        .map(|k| {
            diffs.get(&k).cloned().unwrap_or_else(|| PMat::zero(alg, &term_list[(k + 1 - lo) as usize], &term_list[(k - lo) as usize]))
        })
        .collect();
    let complex = PathComplex::new(alg, Kind::Projective, lo, term_list, diff_list);
    let map = GradedMap::from_comps(
        0,
        gens.iter().map(|(&k, g)| (k, proj_map_from_generators(alg, complex.term(k), g, x.obj(k)))).collect::<Vec<_>>(),
    );
    ProjReplacement { complex, generators: gens, map }
}

pub fn injective_replacement(alg: &Algebra, x: &Complex) -> InjReplacement {
    let nv = alg.vertex_count();
    if x.is_zero() {
        return InjReplacement { complex: PathComplex::zero(Kind::Injective), map: GradedMap::zero(0) };
    }
    let mut terms: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    let mut diffs: BTreeMap<i64, PMat> = BTreeMap::new();
    let mut phis: BTreeMap<i64, RepMap> = BTreeMap::new();
    let empty: Vec<usize> = Vec::new();

    let mut n = x.bottom();
    loop {
        assert!(n <= x.top() + MAX_EXTRA_STEPS, "injective replacement did not terminate (infinite global dimension?)");
        let i1_verts = terms.get(&(n - 1)).unwrap_or(&empty).clone();
        let i2_verts = terms.get(&(n - 2)).unwrap_or(&empty).clone();
        let i1 = realize_term(alg, Kind::Injective, &i1_verts);
        let i2 = realize_term(alg, Kind::Injective, &i2_verts);
        let xn = x.obj(n);
        let xp = x.obj(n - 1);
        let m = repcore::direct_sum(alg, &[xn, &i1]);
        let src = repcore::direct_sum(alg, &[xp, &i2]);
        let di = diffs.get(&(n - 2)).map(|d| d.realize(alg, Kind::Injective)).unwrap_or_else(|| RepMap::zero(&i2, &i1));
        let phi = phis.get(&(n - 1)).cloned().unwrap_or_else(|| RepMap::zero(xp, &i1));
        // Incoming cone differential X^{n-1} ⊕ I^{n-2} → X^n ⊕ I^{n-1}.
        let delta = m.injections[0]
            .after(&x.d(n - 1).neg().after(&src.projections[0]))
            .add(&m.injections[1].after(&phi.after(&src.projections[0])))
            .add(&m.injections[1].after(&di.after(&src.projections[1])));
        let img: Vec<Matrix> = delta.maps.iter().enumerate().map(|(v, d)| col_basis(d, m.sum.dims[v])).collect();
        let (c, pi, _) = repcore::quotient(alg, &m.sum, &img);
        if c.is_zero() && n > x.top() {
            break;
        }
        // Injective envelope: functionals dual to a socle basis at each vertex.
        let mut env: Vec<(usize, Vec<Q>)> = Vec::new();
        for v in 0..nv {
            if c.dims[v] == 0 {
                continue;
            }
            let outgoing: Vec<&Matrix> =
                alg.quiver().arrows().iter().enumerate().filter(|(_, a)| a.src == v).map(|(ai, _)| &c.maps[ai]).collect();
            let soc = if outgoing.is_empty() {
                Matrix::identity(c.dims[v])
            } else {
                let stacked = Matrix::vstack(&outgoing);
                if stacked.rows() == 0 {
                    Matrix::identity(c.dims[v])
                } else {
                    stacked.nullspace()
                }
            };
            if soc.cols() == 0 {
                continue;
            }
            let rows = soc.independent_rows();
            let inv = soc.select_rows(&rows).inverse().expect("pivot rows of a basis");
            let sel = Matrix::identity(c.dims[v]).select_rows(&rows);
            let lambda = inv.mul(&sel);
            for i in 0..lambda.rows() {
                env.push((v, lambda.row(i).to_vec()));
            }
        }
        let verts: Vec<usize> = env.iter().map(|(v, _)| *v).collect();
        // ψ = (C → ⊕ I_v) ∘ π, realized at every vertex.
        let psi: Vec<Matrix> = (0..nv)
            .map(|j| {
                let rows: usize = verts.iter().map(|&v| alg.paths_between(j, v).len()).sum();
                let mut out = Matrix::zeros(rows, m.sum.dims[j]);
                let mut r0 = 0;
                for (v, lam) in &env {
                    let lam = Matrix::from_rows(vec![lam.clone()], lam.len());
                    for &p in alg.paths_between(j, *v) {
                        let row = lam.mul(&c.basis_action(alg, p)).mul(&pi.maps[j]);
                        out.set_block(r0, 0, &row);
                        r0 += 1;
                    }
                }
                out
            })
            .collect();
        let phi_n = RepMap { maps: (0..nv).map(|j| psi[j].block(0, psi[j].rows(), 0, xn.dims[j])).collect() };
        let mut d = PMat::zero(alg, &verts, &i1_verts);
        for (t, &vt) in verts.iter().enumerate() {
            // Row of e_{vt} for summand t at vertex vt.
            let row_idx: usize = verts[..t].iter().map(|&w| alg.paths_between(vt, w).len()).sum::<usize>()
                + alg.paths_between(vt, vt).iter().position(|&p| p == alg.idempotent_index(vt)).unwrap();
            let mut col = xn.dims[vt];
            for (s, &vs) in i1_verts.iter().enumerate() {
                let mut e = alg.zero();
                for &p in alg.paths_between(vt, vs) {
                    e[p] = psi[vt].get(row_idx, col).clone();
                    col += 1;
                }
                d.set(t, s, e);
            }
        }
        if !verts.is_empty() {
            terms.insert(n, verts);
            diffs.insert(n - 1, d);
            phis.insert(n, phi_n);
        }
        n += 1;
    }

    let lo = *terms.keys().next().unwrap_or(&0);
    let hi = *terms.keys().last().unwrap_or(&0);
    let term_list: Vec<Vec<usize>> = (lo..=hi).map(|k| terms.get(&k).cloned().unwrap_or_default()).collect();
    let diff_list: Vec<PMat> = (lo..hi)
        .map(|k| {
            diffs.get(&k).cloned().unwrap_or_else(|| PMat::zero(alg, &term_list[(k + 1 - lo) as usize], &term_list[(k - lo) as usize]))
        })
        .collect();
    let complex = PathComplex::new(alg, Kind::Injective, lo, term_list, diff_list);
    let map = GradedMap::from_comps(0, phis.into_iter().filter(|(_, m)| m.maps.iter().any(|x| !x.is_zero())).collect::<Vec<_>>());
    InjReplacement { complex, map }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathalg::bondal;
    use crate::repcore::{injective, projective, simple};

    #[test]
    fn projective_module_is_its_own_replacement() {
        let alg = bondal();
        let x = Complex::stalk(&alg, projective(&alg, 0), 0);
        let r = projective_replacement(&alg, &x);
        assert_eq!(r.complex.degrees(), 0..=0);
        assert_eq!(r.complex.term(0), &[0]);
        r.map.check_chain(&alg, &r.complex.realize(&alg), &x).unwrap();
        assert!(r.map.is_quasi_iso(&alg, &r.complex.realize(&alg), &x));
    }

    #[test]
    fn simples_resolve_with_global_dimension_two() {
        let alg = bondal();
        for i in 0..3 {
            let x = Complex::stalk(&alg, simple(&alg, i), 0);
            let r = projective_replacement(&alg, &x);
            let real = r.complex.realize(&alg);
            r.map.check_chain(&alg, &real, &x).unwrap();
            assert!(r.map.is_quasi_iso(&alg, &real, &x));
            assert!(r.complex.is_minimal(&alg));
            assert!(r.complex.bottom() >= -2);
            let inj = injective_replacement(&alg, &x);
            let ireal = inj.complex.realize(&alg);
            inj.map.check_chain(&alg, &x, &ireal).unwrap();
            assert!(inj.map.is_quasi_iso(&alg, &x, &ireal));
            assert!(inj.complex.top() <= 2);
        }
        // S2 has the resolution P3 ⊕ P3 ⊕ ... → P2 → S2 ending in degree −1.
        let r = projective_replacement(&alg, &Complex::stalk(&alg, simple(&alg, 1), 0));
        assert_eq!(r.complex.term(-1), &[2, 2]);
        assert_eq!(r.complex.term(-2), &[] as &[usize]);
    }

    #[test]
    fn injective_module_is_its_own_replacement() {
        let alg = bondal();
        let x = Complex::stalk(&alg, injective(&alg, 2), 0);
        let r = injective_replacement(&alg, &x);
        assert_eq!(r.complex.term(0), &[2]);
        assert_eq!(r.complex.degrees(), 0..=0);
    }
}
