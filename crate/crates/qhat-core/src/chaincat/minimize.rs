//! Gaussian elimination of unit entries in complexes of projectives.
//!
//! If `d^k` has an entry `δ: P_v → P_v` that is a unit of the local ring
//! `e_v A e_v`, write `d^k = [[δ, γ], [β, α]]` against the splittings
//! `P^k = P_v ⊕ B` and `P^{k+1} = P_v ⊕ C`. The two summands cancel, leaving
//! `α − β δ⁻¹ γ: B → C`, with comparison maps
//! `f^k = [0, 1]`, `f^{k+1} = [−β δ⁻¹, 1]` and `g^k = (−δ⁻¹ γ; 1)`, `g^{k+1} = (0; 1)`.

use super::structured::{HomComplex, Kind, PMat, PathComplex, PathMap};
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::pathalg::{AlgElem, Algebra};
use num_traits::Zero;

/// A minimal complex with comparison maps `f: P → min` and `g: min → P`,
/// where `f ∘ g = id` exactly and `g ∘ f ≃ id`.
#[derive(Clone, Debug)]
pub struct Minimized {
    pub complex: PathComplex,
    pub f: PathMap,
    pub g: PathMap,
}

/// Inverse of a unit `c e_v + r` (`r` radical) as a finite geometric series.
pub(crate) fn local_inverse(alg: &Algebra, v: usize, x: &AlgElem) -> AlgElem {
    let e = alg.idempotent_index(v);
    let c = x[e].clone();
    assert!(!c.is_zero(), "not a unit");
    let cinv = c.recip();
    let mut nil = x.clone();
    nil[e] = Q::zero();
    let step: AlgElem = nil.iter().map(|y| -(y * &cinv)).collect();
    let mut term = alg.idempotent(v);
    let mut sum = term.clone();
    for _ in 0..alg.nilpotency_bound() {
        term = alg.compose(&term, &step);
        if term.iter().all(Zero::is_zero) {
            break;
        }
        for (a, b) in sum.iter_mut().zip(&term) {
            *a += b;
        }
    }
    sum.iter().map(|y| y * &cinv).collect()
}

fn others(n: usize, skip: usize) -> Vec<usize> {
    (0..n).filter(|&i| i != skip).collect()
}

pub fn minimize(alg: &Algebra, p: &PathComplex) -> Result<Minimized> {
    if p.kind != Kind::Projective {
        return Err(Error::NotProjective);
    }
    let orig = p.clone();
    let mut cur = p.clone();
    let mut f_tot = PathMap::identity(alg, p);
    let mut g_tot = PathMap::identity(alg, p);
    'outer: loop {
        for k in cur.bottom()..cur.top() {
            let d = cur.d(alg, k);
            let Some((t0, s0)) = d.unit_entry(alg) else { continue };
            let v = d.rows[t0];
            let dinv = local_inverse(alg, v, d.get(t0, s0));
            let mut dinv_m = PMat::zero(alg, &[v], &[v]);
            dinv_m.set(0, 0, dinv);
            let nb = others(d.cols.len(), s0);
            let nc = others(d.rows.len(), t0);
            let gamma = d.select(&[t0], &nb);
            let beta = d.select(&nc, &[s0]);
            let alpha = d.select(&nc, &nb);
            let new_d = alpha.add(&beta.after(alg, &dinv_m).after(alg, &gamma).neg());

            let mut terms = Vec::new();
            let mut diffs = Vec::new();
            for j in cur.degrees() {
                terms.push(if j == k {
                    nb.iter().map(|&i| d.cols[i]).collect()
                } else if j == k + 1 {
                    nc.iter().map(|&i| d.rows[i]).collect()
                } else {
                    cur.term(j).to_vec()
                });
            }
            for j in cur.bottom()..cur.top() {
                let dj = cur.d(alg, j);
                diffs.push(if j == k - 1 {
                    dj.select(&nb, &(0..dj.cols.len()).collect::<Vec<_>>())
                } else if j == k {
                    new_d.clone()
                } else if j == k + 1 {
                    dj.select(&(0..dj.rows.len()).collect::<Vec<_>>(), &nc)
                } else {
                    dj
                });
            }
            let next = PathComplex::new(alg, Kind::Projective, cur.bottom(), terms, diffs);

            let mut f_comps = Vec::new();
            let mut g_comps = Vec::new();
            for j in cur.degrees() {
                let verts = cur.term(j);
                let (f, g) = if j == k {
                    let id_b = PMat::identity(alg, next.term(k));
                    let zero_col = PMat::zero(alg, next.term(k), &[v]);
                    let f = reorder_cols(alg, &PMat::blocks(alg, &[vec![&zero_col, &id_b]]), s0);
                    let top = gamma.scale(&Q::from_integer((-1).into()));
                    let top = dinv_m.after(alg, &top);
                    let g = reorder_rows(alg, &PMat::blocks(alg, &[vec![&top], vec![&id_b]]), s0);
                    (f, g)
                } else if j == k + 1 {
                    let id_c = PMat::identity(alg, next.term(k + 1));
                    let y = beta.after(alg, &dinv_m).neg();
                    let f = reorder_cols(alg, &PMat::blocks(alg, &[vec![&y, &id_c]]), t0);
                    let zero_row = PMat::zero(alg, &[v], next.term(k + 1));
                    let g = reorder_rows(alg, &PMat::blocks(alg, &[vec![&zero_row], vec![&id_c]]), t0);
                    (f, g)
                } else {
                    (PMat::identity(alg, verts), PMat::identity(alg, verts))
                };
                f_comps.push((j, f));
                g_comps.push((j, g));
            }
            let f_step = PathMap::from_comps(0, f_comps);
            let g_step = PathMap::from_comps(0, g_comps);
            f_tot = f_step.after(alg, &f_tot, &orig, &cur, &next);
            g_tot = g_tot.after(alg, &g_step, &next, &cur, &orig);
            cur = next;
            continue 'outer;
        }
        break;
    }
    Ok(Minimized { complex: cur, f: f_tot, g: g_tot })
}

/// Moves column 0 to position `at`.
fn reorder_cols(alg: &Algebra, m: &PMat, at: usize) -> PMat {
    let n = m.cols.len();
    let mut order: Vec<usize> = (1..n).collect();
    order.insert(at, 0);
    let _ = alg;
    m.select(&(0..m.rows.len()).collect::<Vec<_>>(), &order)
}

/// Moves row 0 to position `at`.
fn reorder_rows(alg: &Algebra, m: &PMat, at: usize) -> PMat {
    let n = m.rows.len();
    let mut order: Vec<usize> = (1..n).collect();
    order.insert(at, 0);
    let _ = alg;
    m.select(&order, &(0..m.cols.len()).collect::<Vec<_>>())
}

impl Minimized {
    /// Checks `f`, `g` are chain maps, `f g = id` and `g f − id` is a coboundary.
    pub fn verify(&self, alg: &Algebra, orig: &PathComplex) -> bool {
        let chain = |m: &PathMap, s: &PathComplex, t: &PathComplex| m.differential(alg, s, t).is_zero();
        if !chain(&self.f, orig, &self.complex) || !chain(&self.g, &self.complex, orig) {
            return false;
        }
        let fg = self.f.after(alg, &self.g, &self.complex, orig, &self.complex);
        if fg != PathMap::identity(alg, &self.complex) {
            return false;
        }
        let gf = self.g.after(alg, &self.f, orig, &self.complex, orig);
        let diff = gf.add(alg, &PathMap::identity(alg, orig).scale(&Q::from_integer((-1).into())), orig, orig);
        let hc = HomComplex::new(alg, orig, orig.realize(alg));
        let coords = hc.coords_of_path_map(&diff, orig);
        hc.cohomology(0).class_coords(&coords).is_some_and(|c| c.iter().all(Zero::is_zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chaincat::{projective_replacement, Complex};
    use crate::pathalg::bondal;

    #[test]
    fn local_inverse_inverts() {
        let alg = bondal();
        let mut x = alg.idempotent(1);
        x[1] = Q::from_integer(3.into());
        let inv = local_inverse(&alg, 1, &x);
        assert_eq!(alg.compose(&x, &inv), alg.idempotent(1));
    }

    #[test]
    fn cone_of_identity_minimizes_to_zero() {
        let alg = bondal();
        let p1 = PathComplex::stalk(Kind::Projective, 0, 0);
        let id = PathMap::identity(&alg, &p1);
        let c = p1.cone(&alg, &id, &p1);
        assert_eq!(c.summand_count(), 2);
        let m = minimize(&alg, &c).unwrap();
        assert!(m.complex.is_zero());
        assert!(m.verify(&alg, &c));
    }

    #[test]
    fn minimize_preserves_homology() {
        let alg = bondal();
        // cone(P2 --a1--> P1) ⊕ cone(id_P3) is not minimal.
        let mut a1 = PMat::zero(&alg, &[0], &[1]);
        a1.set(0, 0, alg.basis_elem(3));
        let x = PathComplex::new(&alg, Kind::Projective, -1, vec![vec![1], vec![0]], vec![a1]);
        let p3 = PathComplex::stalk(Kind::Projective, 2, 0);
        let c = p3.cone(&alg, &PathMap::identity(&alg, &p3), &p3);
        let s = PathComplex::sum(&alg, Kind::Projective, &[x.clone(), c]);
        let m = minimize(&alg, &s).unwrap();
        assert!(m.complex.is_minimal(&alg));
        assert!(m.verify(&alg, &s));
        assert_eq!(m.complex.summand_count(), 2);
        assert_eq!(m.complex.realize(&alg).homology_dims(&alg), s.realize(&alg).homology_dims(&alg));
        let _ = projective_replacement(&alg, &Complex::zero(&alg));
        assert!(minimize(&alg, &x.with_kind(Kind::Injective)).is_err());
    }
}
