//! Grothendieck group, Euler form and derived-category comparisons.

use crate::chaincat::{
    injective_replacement, minimize, projective_replacement, Complex, GradedMap, HomComplex, Kind, PathComplex, PathMap,
};
use crate::linalg::{Matrix, Q};
use crate::pathalg::Algebra;
use crate::repcore::{self, Rep};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// A complex together with its minimal projective model.
#[derive(Debug)]
pub struct Resolved {
    pub complex: Complex,
    /// Minimal complex of projectives quasi-isomorphic to `complex`.
    pub proj: PathComplex,
    /// The quasi-isomorphism `realize(proj) → complex`.
    pub to_complex: GradedMap,
}

type Memo = Mutex<HashMap<(u64, Complex), Arc<Resolved>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Minimal projective replacement, memoized by structural hash.
pub fn resolve(alg: &Algebra, x: &Complex) -> Arc<Resolved> {
    let key = (alg.fingerprint(), x.clone());
    if let Some(r) = memo().lock().unwrap().get(&key) {
        return Arc::clone(r);
    }
    let rep = projective_replacement(alg, x);
    let min = minimize(alg, &rep.complex).expect("projective replacement is projective");
    let g = min.g.realize(alg, Kind::Projective);
    let full = rep.complex.realize(alg);
    let small = min.complex.realize(alg);
    let to_complex = rep.map.after(&g, &small, &full, x);
    let r = Arc::new(Resolved { complex: x.clone(), proj: min.complex, to_complex });
    memo().lock().unwrap().entry(key).or_insert_with(|| Arc::clone(&r));
    r
}

/// Minimal projective model of a complex of projectives given as path data.
pub fn resolve_path(alg: &Algebra, p: &PathComplex) -> PathComplex {
    match p.kind {
        Kind::Projective => minimize(alg, p).expect("projective").complex,
        Kind::Injective => resolve(alg, &p.realize(alg)).proj.clone(),
    }
}

/// `dim Hom_D(X, Y[n])` for `n` in the given range.
pub fn derived_hom_dims(alg: &Algebra, x: &Complex, y: &Complex, range: std::ops::RangeInclusive<i64>) -> Vec<usize> {
    let r = resolve(alg, x);
    let hc = HomComplex::new(alg, &r.proj, y.clone());
    range.map(|n| hc.cohomology_dim(n)).collect()
}

/// All nonzero `dim Hom_D(X, Y[n])`.
pub fn derived_hom_support(alg: &Algebra, x: &Complex, y: &Complex) -> BTreeMap<i64, usize> {
    let r = resolve(alg, x);
    let hc = HomComplex::new(alg, &r.proj, y.clone());
    hc.range().map(|n| (n, hc.cohomology_dim(n))).filter(|(_, d)| *d > 0).collect()
}

/// `Ext^n(M, N)` for modules through an injective resolution of `N`, an
/// independent route to [`derived_hom_dims`].
pub fn ext_via_injectives(alg: &Algebra, m: &Rep, n: &Rep, max_degree: i64) -> Vec<usize> {
    let inj = injective_replacement(alg, &Complex::stalk(alg, n.clone(), 0));
    let ic = inj.complex.realize(alg);
    let bases: Vec<Vec<repcore::RepMap>> = (-1..=max_degree + 1).map(|k| repcore::hom_basis(alg, m, ic.obj(k))).collect();
    // Post-composition with d_I as a matrix from Hom(M, I^k) to Hom(M, I^{k+1}).
    let post = |k: i64| -> Matrix {
        let src = &bases[(k + 1) as usize];
        let tgt = &bases[(k + 2) as usize];
        if src.is_empty() || tgt.is_empty() {
            return Matrix::zeros(tgt.len(), src.len());
        }
        let tb = Matrix::from_rows(tgt.iter().map(|b| b.flatten()).collect(), tgt[0].flatten().len()).transpose();
        let solver = crate::linalg::SpanSolver::new(tb);
        let cols: Vec<Vec<Q>> = src.iter().map(|f| solver.coords(&ic.d(k).after(f).flatten()).expect("image is a morphism")).collect();
        Matrix::from_rows(cols, tgt.len()).transpose()
    };
    (0..=max_degree)
        .map(|k| {
            let dim = bases[(k + 1) as usize].len();
            dim - post(k).rank() - if k > 0 { post(k - 1).rank() } else { 0 }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct K0Class(pub Vec<i64>);

impl K0Class {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &K0Class) -> K0Class {
        K0Class(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> K0Class {
        K0Class(self.0.iter().map(|a| -a).collect())
    }
}

/// Alternating sum of dimension vectors (equivalently of homology).
pub fn k0_class(x: &Complex) -> K0Class {
    K0Class(x.euler_vector())
}

/// Bilinear form on `K_0` in the simple basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerForm {
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Debug, thiserror::Error)]
#[error("global dimension probe failed at vertex {0}")]
pub struct GlobalDimensionError(pub usize);

impl EulerForm {
    /// `χ(x, y) = x C⁻¹ yᵀ`, so that `χ([P_i], [P_j]) = dim Hom(P_i, P_j)`.
    /// Checks first that every simple has a projective resolution of length at
    /// most `vertices + 2`.
    pub fn new(alg: &Algebra) -> Result<EulerForm, GlobalDimensionError> {
        let n = alg.vertex_count();
        for v in 0..n {
            let s = Complex::stalk(alg, repcore::simple(alg, v), 0);
            let r = resolve(alg, &s);
            if r.proj.bottom() < -(n as i64 + 2) {
                return Err(GlobalDimensionError(v));
            }
        }
        let c = alg.cartan_matrix();
        let cm = Matrix::from_rows(c.iter().map(|r| r.iter().map(|&x| crate::linalg::q(x)).collect()).collect(), n);
        let inv = cm.inverse().ok_or(GlobalDimensionError(0))?;
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let x = inv.get(i, j);
                        assert!(x.is_integer(), "Cartan inverse is integral for finite global dimension");
                        x.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();
        Ok(EulerForm { matrix })
    }

    pub fn pair(&self, x: &K0Class, y: &K0Class) -> i64 {
        let n = self.matrix.len();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += x.0[i] * self.matrix[i][j] * y.0[j];
            }
        }
        s
    }
}

/// Alternating sum of `dim Hom(X, Y[n])` over the whole support.
pub fn euler_pairing_derived(alg: &Algebra, x: &Complex, y: &Complex) -> i64 {
    derived_hom_support(alg, x, y).iter().map(|(&n, &d)| if n.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
}

/// A certified isomorphism in the derived category between minimal models.
#[derive(Clone, Debug)]
pub struct DerivedIso {
    pub source: PathComplex,
    pub target: PathComplex,
    pub forward: PathMap,
    pub backward: PathMap,
    /// Number of sampled candidates examined before success.
    pub attempts: usize,
}

impl DerivedIso {
    /// Re-verifies both maps are chain maps and compose to identities up to
    /// homotopy.
    pub fn verify(&self, alg: &Algebra) -> bool {
        let (s, t) = (&self.source, &self.target);
        if !self.forward.differential(alg, s, t).is_zero() || !self.backward.differential(alg, t, s).is_zero() {
            return false;
        }
        is_identity_up_to_homotopy(alg, &self.backward.after(alg, &self.forward, s, t, s), s)
            && is_identity_up_to_homotopy(alg, &self.forward.after(alg, &self.backward, t, s, t), t)
    }
}

pub(crate) fn is_identity_up_to_homotopy(alg: &Algebra, f: &PathMap, x: &PathComplex) -> bool {
    let diff = f.add(alg, &PathMap::identity(alg, x).scale(&-Q::one()), x, x);
    is_null_homotopic_path(alg, &diff, x, x)
}

/// Whether a degree-0 chain map between projective path complexes is null-homotopic.
pub fn is_null_homotopic_path(alg: &Algebra, f: &PathMap, x: &PathComplex, y: &PathComplex) -> bool {
    let (xp, yp) = (x.with_kind(Kind::Projective), y.with_kind(Kind::Projective));
    let hc = HomComplex::new(alg, &xp, yp.realize(alg));
    let coords = hc.coords_of_path_map(f, &yp);
    hc.cohomology(f.degree).class_coords(&coords).is_some_and(|c| c.iter().all(Zero::is_zero))
}

/// Searches for a homotopy equivalence between the minimal models.
pub fn derived_iso(alg: &Algebra, x: &Complex, y: &Complex) -> Option<DerivedIso> {
    if x.homology_dims(alg) != y.homology_dims(alg) {
        return None;
    }
    let (rx, ry) = (resolve(alg, x), resolve(alg, y));
    iso_between(alg, &rx.proj, &ry.proj)
}

/// Derived isomorphism between two complexes of projectives (or of
/// injectives, compared through the Nakayama equivalence).
pub fn iso_between(alg: &Algebra, px: &PathComplex, py: &PathComplex) -> Option<DerivedIso> {
    let px = px.with_kind(Kind::Projective);
    let py = py.with_kind(Kind::Projective);
    let (px, py) = (resolve_path(alg, &px), resolve_path(alg, &py));
    // Minimal models of isomorphic objects are isomorphic complexes.
    let lo = px.bottom().min(py.bottom());
    let hi = px.top().max(py.top());
    for k in lo..=hi {
        let (mut a, mut b) = (px.term(k).to_vec(), py.term(k).to_vec());
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }
    if px.is_zero() {
        return Some(DerivedIso {
            source: px.clone(),
            target: py.clone(),
            forward: PathMap::zero(0),
            backward: PathMap::zero(0),
            attempts: 0,
        });
    }
    let hc = HomComplex::new(alg, &px, py.realize(alg));
    let z = hc.cocycles(0);
    let mut attempts = 0;
    let forward = crate::sampling::search(z.cols(), |c| {
        attempts += 1;
        let coords = z.mul_vec(c);
        let f = hc.to_path_map(0, &coords, &py);
        let cone = px.cone(alg, &f, &py);
        cone.realize(alg).is_acyclic(alg).then_some(f)
    })?;
    let backward = homotopy_inverse(alg, &forward, &px, &py)?;
    Some(DerivedIso { source: px, target: py, forward, backward, attempts })
}

/// Solves for `g` with `D g = 0` and `g f − id ∈ im D`.
pub fn homotopy_inverse(alg: &Algebra, f: &PathMap, x: &PathComplex, y: &PathComplex) -> Option<PathMap> {
    let hyx = HomComplex::new(alg, y, x.realize(alg));
    let hxx = HomComplex::new(alg, x, x.realize(alg));
    let ng = hyx.dim(0);
    let dyx = hyx.differential(0);
    let dxx = hxx.differential(-1);
    let nh = dxx.cols();
    let nxx = hxx.dim(0);
    // Unknowns (g, h); rows: D g = 0, then coords(g f) − D h = coords(id).
    let mut a = Matrix::zeros(dyx.rows() + nxx, ng + nh);
    a.set_block(0, 0, &dyx);
    for i in 0..ng {
        let mut e = vec![Q::zero(); ng];
        e[i] = Q::one();
        let g = hyx.to_path_map(0, &e, x);
        let gf = g.after(alg, f, x, y, x);
        let c = hxx.coords_of_path_map(&gf, x);
        for (r, v) in c.into_iter().enumerate() {
            if !v.is_zero() {
                a.set(dyx.rows() + r, i, v);
            }
        }
    }
    if nh > 0 {
        a.set_block(dyx.rows(), ng, &dxx.neg());
    }
    let mut b = vec![Q::zero(); dyx.rows()];
    b.extend(hxx.coords_of_path_map(&PathMap::identity(alg, x), x));
    let sol = a.solve_vec(&b)?;
    Some(hyx.to_path_map(0, &sol[..ng], x))
}

pub fn is_exceptional(alg: &Algebra, x: &Complex) -> bool {
    let s = derived_hom_support(alg, x, x);
    s.len() == 1 && s.get(&0) == Some(&1)
}

/// Self-Ext concentrated as `(1, 0, …, 0, 1)` in degrees `0..=n`, and
/// `serre(X) ≅ X[n]`.
pub fn is_spherical(alg: &Algebra, x: &Complex, n: i64, serre: impl Fn(&Complex) -> Complex) -> bool {
    let s = derived_hom_support(alg, x, x);
    let expected: BTreeMap<i64, usize> = if n == 0 { [(0, 2)].into() } else { [(0, 1), (n, 1)].into() };
    s == expected && derived_iso(alg, &serre(x), &x.shift(n)).is_some()
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use crate::pathalg::bondal;
    use crate::repcore::{injective, projective, simple};

    #[test]
    fn euler_form_calibrated_on_projectives() {
        let alg = bondal();
        let chi = EulerForm::new(&alg).unwrap();
        let c = alg.cartan_matrix();
        for i in 0..3 {
            for j in 0..3 {
                let pi = K0Class(projective(&alg, i).dims.iter().map(|&d| d as i64).collect());
                let pj = K0Class(projective(&alg, j).dims.iter().map(|&d| d as i64).collect());
                assert_eq!(chi.pair(&pi, &pj), c[j][i]);
            }
        }
    }

    #[test]
    fn ext_routes_agree_on_simples_and_standard_modules() {
        let alg = bondal();
        let mut mods = Vec::new();
        for v in 0..3 {
            mods.push(simple(&alg, v));
            mods.push(projective(&alg, v));
            mods.push(injective(&alg, v));
        }
        for m in &mods {
            for n in &mods {
                let a = derived_hom_dims(&alg, &Complex::stalk(&alg, m.clone(), 0), &Complex::stalk(&alg, n.clone(), 0), 0..=3);
                let b = ext_via_injectives(&alg, m, n, 3);
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn shifted_object_is_not_isomorphic() {
        let alg = bondal();
        let p = Complex::stalk(&alg, projective(&alg, 0), 0);
        assert!(derived_iso(&alg, &p, &p).is_some_and(|w| w.verify(&alg)));
        assert!(derived_iso(&alg, &p, &p.shift(1)).is_none());
        assert!(is_exceptional(&alg, &p));
        assert_eq!(k0_class(&p.shift(1)), k0_class(&p).neg());
    }

    #[test]
    fn module_and_its_resolution_are_isomorphic() {
        let alg = bondal();
        let s2 = Complex::stalk(&alg, simple(&alg, 1), 0);
        let r = resolve(&alg, &s2);
        let w = derived_iso(&alg, &r.proj.realize(&alg), &s2).unwrap();
        assert!(w.verify(&alg));
        r.to_complex.check_chain(&alg, &r.proj.realize(&alg), &s2).unwrap();
        assert!(r.to_complex.is_quasi_iso(&alg, &r.proj.realize(&alg), &s2));
    }
}
