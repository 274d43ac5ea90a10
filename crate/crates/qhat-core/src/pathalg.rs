//! Quivers with relations and the finite path basis of `kQ/I`.
//!
//! Composition follows the functional convention: `f ∘ g` applies `g` first.
//! A path is stored as its arrow sequence in application order, so the path
//! written `a2 a1` is the sequence `[a1, a2]`.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Validates ids and endpoints. Arrows are given as `(id, src, tgt)` by vertex id.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate vertex id `{v}`")));
            }
        }
        let lookup = |v: &str| seen.get(v).copied().ok_or_else(|| Error::Invalid(format!("arrow endpoint `{v}` is not a vertex")));
        let mut out = Vec::with_capacity(arrows.len());
        let mut ids = HashMap::new();
        for (id, s, t) in arrows {
            let id = id.as_ref().to_string();
            if ids.insert(id.clone(), ()).is_some() {
                return Err(Error::Invalid(format!("duplicate arrow id `{id}`")));
            }
            out.push(Arrow { id, src: lookup(s.as_ref())?, tgt: lookup(t.as_ref())? });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }
}

/// A path of the quiver; `arrows` in application order. Length-zero paths are
/// the idempotents `e_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { src: v, tgt: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self ∘ other`: `other` first. `None` if not composable.
    pub fn after(&self, other: &Path) -> Option<Path> {
        if other.tgt != self.src {
            return None;
        }
        let mut arrows = other.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path { src: other.src, tgt: self.tgt, arrows })
    }

    /// Sort key: length, then arrow sequence, then endpoints for idempotents.
    fn key(&self) -> (usize, Vec<usize>, usize) {
        (self.arrows.len(), self.arrows.clone(), self.src)
    }
}

/// A linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Q, Vec<usize>)>,
}

impl Relation {
    pub fn monomial(path: Vec<usize>) -> Self {
        Relation { terms: vec![(Q::one(), path)] }
    }
}

/// An element of `kQ/I` in the path-basis coordinates.
pub type AlgElem = Vec<Q>;

type Sparse = Vec<(usize, Q)>;

/// `kQ/I` presented by a finite path basis and a multiplication table.
#[derive(Clone, Debug)]
pub struct Algebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    nilpotency_bound: usize,
    index: HashMap<Path, usize>,
    // Normal form of every path of length below the bound that is not itself
    // a basis element; longer paths vanish.
    reduced: HashMap<Path, Vec<(usize, Q)>>,
    // mult[a][b] = nf(basis[a] ∘ basis[b]) as sparse coordinates.
    mult: Vec<Vec<Option<Sparse>>>,
    between: Vec<Vec<Vec<usize>>>,
    fingerprint: u64,
}

fn paths_up_to(quiver: &Quiver, max_len: usize) -> Vec<Path> {
    let mut all: Vec<Path> = (0..quiver.vertex_count()).map(Path::trivial).collect();
    let mut frontier = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, a) in quiver.arrows().iter().enumerate() {
                if a.src == p.tgt {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path { src: p.src, tgt: a.tgt, arrows });
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

fn path_of(quiver: &Quiver, arrows: &[usize]) -> Result<Path> {
    let first = arrows.first().ok_or_else(|| Error::Invalid("relation term with empty path".into()))?;
    let mut p = Path::trivial(quiver.arrows()[*first].src);
    for &a in arrows {
        let arrow = quiver.arrows().get(a).ok_or_else(|| Error::Invalid(format!("unknown arrow index {a}")))?;
        if arrow.src != p.tgt {
            return Err(Error::Invalid(format!("relation path `{}` is not composable", render_arrows(quiver, arrows))));
        }
        p.arrows.push(a);
        p.tgt = arrow.tgt;
    }
    Ok(p)
}

fn render_arrows(quiver: &Quiver, arrows: &[usize]) -> String {
    arrows.iter().rev().map(|&a| quiver.arrows()[a].id.as_str()).collect::<Vec<_>>().join("")
}

impl Algebra {
    /// Builds the path basis by reducing all paths up to `max_length` modulo
    /// the two-sided ideal. `None` picks arrows + 2.
    pub fn new(quiver: Quiver, relations: Vec<Relation>, max_length: Option<usize>) -> Result<Self> {
        let bound = max_length.unwrap_or(quiver.arrows().len() + 2);
        let paths = paths_up_to(&quiver, bound);

        let mut rel_paths = Vec::new();
        for r in &relations {
            let mut ends = None;
            let mut terms = Vec::new();
            for (c, arrows) in &r.terms {
                if arrows.len() < 2 {
                    return Err(Error::Invalid("relation paths must have length at least 2".into()));
                }
                let p = path_of(&quiver, arrows)?;
                match ends {
                    None => ends = Some((p.src, p.tgt)),
                    Some(e) if e != (p.src, p.tgt) => {
                        return Err(Error::Invalid("relation terms are not parallel".into()));
                    }
                    _ => {}
                }
                terms.push((c.clone(), p));
            }
            rel_paths.push(terms);
        }

        // Group paths into (src, tgt) blocks; columns longest first so that
        // rref pivots land on the longest (reducible) paths.
        let mut blocks: HashMap<(usize, usize), Vec<Path>> = HashMap::new();
        for p in &paths {
            blocks.entry((p.src, p.tgt)).or_default().push(p.clone());
        }
        let mut basis = Vec::new();
        let mut reduced = HashMap::new();
        let mut keys: Vec<_> = blocks.keys().copied().collect();
        keys.sort();
        for key in keys {
            let mut cols = blocks.remove(&key).unwrap();
            cols.sort_by_key(|p| std::cmp::Reverse(p.key()));
            let col_of: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut rows = Vec::new();
            for terms in &rel_paths {
                let (rs, rt) = (terms[0].1.src, terms[0].1.tgt);
                for u in paths.iter().filter(|u| u.src == rt && u.tgt == key.1) {
                    for v in paths.iter().filter(|v| v.tgt == rs && v.src == key.0) {
                        let mut row = vec![Q::zero(); cols.len()];
                        let mut fits = true;
                        for (c, p) in terms {
                            let full = u.after(&p.after(v).unwrap()).unwrap();
                            match col_of.get(&full) {
                                Some(&j) => row[j] += c,
                                None => {
                                    fits = false;
                                    break;
                                }
                            }
                        }
                        if fits && row.iter().any(|x| !x.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
            let rr = Matrix::from_rows(rows, cols.len()).rref();
            let free: Vec<usize> = (0..cols.len()).filter(|c| !rr.pivots.contains(c)).collect();
            for &f in &free {
                basis.push(cols[f].clone());
            }
            for (i, &p) in rr.pivots.iter().enumerate() {
                let combo: Vec<(Path, Q)> = free
                    .iter()
                    .filter(|&&f| !rr.matrix.get(i, f).is_zero())
                    .map(|&f| (cols[f].clone(), -rr.matrix.get(i, f).clone()))
                    .collect();
                reduced.insert(cols[p].clone(), combo);
            }
        }

        for p in paths.iter().filter(|p| p.len() == bound) {
            if reduced.get(p).is_none_or(|c| !c.is_empty()) {
                return Err(Error::NotAdmissible { bound });
            }
        }

        basis.sort_by_key(Path::key);
        let index: HashMap<Path, usize> = basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let reduced: HashMap<Path, Vec<(usize, Q)>> = reduced
            .into_iter()
            .map(|(p, combo)| {
                let mut c: Vec<(usize, Q)> = combo.into_iter().map(|(b, x)| (index[&b], x)).collect();
                c.sort_by_key(|(i, _)| *i);
                (p, c)
            })
            .collect();

        let n = quiver.vertex_count();
        let mut between = vec![vec![Vec::new(); n]; n];
        for (i, p) in basis.iter().enumerate() {
            between[p.src][p.tgt].push(i);
        }

        let fingerprint = {
            use std::hash::{Hash, Hasher};
            let mut h = std::collections::hash_map::DefaultHasher::new();
            quiver.vertices.hash(&mut h);
            for a in &quiver.arrows {
                (&a.id, a.src, a.tgt).hash(&mut h);
            }
            for r in &relations {
                for (c, p) in &r.terms {
                    (c, p).hash(&mut h);
                }
            }
            h.finish()
        };
        let mut alg = Algebra { quiver, relations, basis, nilpotency_bound: bound, index, reduced, mult: Vec::new(), between, fingerprint };
        let dim = alg.basis.len();
        let mut mult = vec![vec![None; dim]; dim];
        for (a, row) in mult.iter_mut().enumerate() {
            for (b, slot) in row.iter_mut().enumerate() {
                if let Some(p) = alg.basis[a].after(&alg.basis[b]) {
                    *slot = Some(alg.reduce_path(&p));
                }
            }
        }
        alg.mult = mult;
        Ok(alg)
    }

    /// Normal form of a single path as sparse basis coordinates.
    pub fn reduce_path(&self, p: &Path) -> Vec<(usize, Q)> {
        if let Some(&i) = self.index.get(p) {
            return vec![(i, Q::one())];
        }
        if p.len() >= self.nilpotency_bound {
            return Vec::new();
        }
        self.reduced.get(p).cloned().unwrap_or_default()
    }

    /// Structural hash of the presentation, used to key caches.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.nilpotency_bound
    }

    /// Basis indices of the paths `i → j`, in basis order.
    pub fn paths_between(&self, i: usize, j: usize) -> &[usize] {
        &self.between[i][j]
    }

    pub fn idempotent_index(&self, v: usize) -> usize {
        self.index[&Path::trivial(v)]
    }

    pub fn arrow_basis_index(&self, a: usize) -> Option<usize> {
        let arrow = &self.quiver.arrows()[a];
        self.index.get(&Path { src: arrow.src, tgt: arrow.tgt, arrows: vec![a] }).copied()
    }

    pub fn zero(&self) -> AlgElem {
        vec![Q::zero(); self.dim()]
    }

    pub fn basis_elem(&self, i: usize) -> AlgElem {
        let mut e = self.zero();
        e[i] = Q::one();
        e
    }

    pub fn idempotent(&self, v: usize) -> AlgElem {
        self.basis_elem(self.idempotent_index(v))
    }

    /// Product of two basis elements, sparse; `None` if not composable.
    pub fn mult_basis(&self, a: usize, b: usize) -> Option<&[(usize, Q)]> {
        self.mult[a][b].as_deref()
    }

    /// `x ∘ y` (apply `y` first).
    pub fn compose(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let mut out = self.zero();
        for (a, ca) in x.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in y.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                if let Some(prod) = &self.mult[a][b] {
                    let c = ca * cb;
                    for (k, v) in prod {
                        out[*k] += &c * v;
                    }
                }
            }
        }
        out
    }

    /// Reduces a relation-style combination of arrow sequences.
    pub fn reduce_terms(&self, terms: &[(Q, Vec<usize>)]) -> Result<AlgElem> {
        let mut out = self.zero();
        for (c, arrows) in terms {
            let p = path_of(&self.quiver, arrows)?;
            for (k, v) in self.reduce_path(&p) {
                out[k] += c * v;
            }
        }
        Ok(out)
    }

    /// Normal form of `p ∘ q` for two basis paths given as arrow sequences.
    pub fn compose_paths(&self, p: &Path, q: &Path) -> Result<AlgElem> {
        let full = p.after(q).ok_or_else(|| Error::Invalid("paths are not composable".into()))?;
        let mut out = self.zero();
        for (k, v) in self.reduce_path(&full) {
            out[k] += v;
        }
        Ok(out)
    }

    /// Entry `(i, j)` counts basis paths `i → j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        (0..n).map(|i| (0..n).map(|j| self.between[i][j].len() as i64).collect()).collect()
    }

    /// Source and target vertices of the support of `x`, if it is supported
    /// in one `(src, tgt)` block.
    pub fn endpoints(&self, x: &AlgElem) -> Option<(usize, usize)> {
        let mut ends = None;
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (self.basis[i].src, self.basis[i].tgt);
            match ends {
                None => ends = Some(e),
                Some(prev) if prev != e => return None,
                _ => {}
            }
        }
        ends
    }

    /// Human-readable name of a basis path, outermost arrow first.
    pub fn path_name(&self, i: usize) -> String {
        let p = &self.basis[i];
        if p.is_empty() {
            format!("e{}", self.quiver.vertices()[p.src])
        } else {
            render_arrows(&self.quiver, &p.arrows)
        }
    }

    pub fn format_elem(&self, x: &AlgElem) -> String {
        let parts: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| if c.is_one() { self.path_name(i) } else { format!("{}*{}", crate::linalg::q_to_string(c), self.path_name(i)) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Parses an arrow-id sequence in application order.
    pub fn parse_arrows<S: AsRef<str>>(&self, ids: &[S]) -> Result<Vec<usize>> {
        ids.iter()
            .map(|s| self.quiver.arrow_index(s.as_ref()).ok_or_else(|| Error::Invalid(format!("unknown arrow `{}`", s.as_ref()))))
            .collect()
    }
}

/// The quiver `1 ⇉ 2 ⇉ 3` with arrows `a1, b1` and `a2, b2` and the two
/// monomial relations `b2 a1 = a2 b1 = 0`.
pub fn bondal() -> Algebra {
    let quiver =
        Quiver::new(&["1", "2", "3"], &[("a1", "1", "2"), ("b1", "1", "2"), ("a2", "2", "3"), ("b2", "2", "3")]).expect("static quiver");
    let rels = vec![Relation::monomial(vec![0, 3]), Relation::monomial(vec![1, 2])];
    Algebra::new(quiver, rels, None).expect("admissible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    /// Enumerates every path by brute force and discards those containing a
    /// monomial relation as a consecutive subword.
    fn monomial_oracle(quiver: &Quiver, forbidden: &[Vec<usize>], max: usize) -> Vec<Path> {
        paths_up_to(quiver, max)
            .into_iter()
            .filter(|p| !forbidden.iter().any(|f| p.arrows.windows(f.len()).any(|w| w == f.as_slice())))
            .collect()
    }

    #[test]
    fn bondal_basis_matches_enumeration() {
        let alg = bondal();
        let oracle = monomial_oracle(alg.quiver(), &[vec![0, 3], vec![1, 2]], 6);
        assert_eq!(oracle.len(), 9);
        assert_eq!(alg.dim(), 9);
        let names: Vec<String> = (0..alg.dim()).map(|i| alg.path_name(i)).collect();
        assert_eq!(names, ["e1", "e2", "e3", "a1", "b1", "a2", "b2", "a2a1", "b2b1"]);
    }

    #[test]
    fn bondal_cartan() {
        let c = bondal().cartan_matrix();
        assert_eq!(c, vec![vec![1, 2, 2], vec![0, 1, 2], vec![0, 0, 1]]);
        let total: i64 = c.iter().flatten().sum();
        assert_eq!(total as usize, bondal().dim());
    }

    #[test]
    fn point_and_a2() {
        let point = Algebra::new(Quiver::new::<&str>(&["1"], &[]).unwrap(), vec![], None).unwrap();
        assert_eq!(point.dim(), 1);
        assert_eq!(point.cartan_matrix(), vec![vec![1]]);
        let a2 = Algebra::new(Quiver::new(&["1", "2"], &[("x", "1", "2")]).unwrap(), vec![], None).unwrap();
        assert_eq!(a2.dim(), 3);
        assert_eq!(a2.cartan_matrix(), vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn quiver_validation() {
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(Quiver::new(&["1"], &[("x", "1", "2")]).is_err());
        assert!(Quiver::new(&["1", "2"], &[("x", "1", "2"), ("x", "1", "2")]).is_err());
    }

    #[test]
    fn loop_without_relations_is_not_admissible() {
        let quiver = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        assert!(matches!(Algebra::new(quiver, vec![], None), Err(Error::NotAdmissible { .. })));
    }

    #[test]
    fn commutativity_relation_identifies_paths() {
        // A square 1→2→4, 1→3→4 with x2 x1 = y2 y1.
        let quiver = Quiver::new(&["1", "2", "3", "4"], &[("x1", "1", "2"), ("x2", "2", "4"), ("y1", "1", "3"), ("y2", "3", "4")]).unwrap();
        let rel = Relation { terms: vec![(q(1), vec![0, 1]), (q(-1), vec![2, 3])] };
        let alg = Algebra::new(quiver, vec![rel.clone()], None).unwrap();
        assert_eq!(alg.dim(), 4 + 4 + 1);
        assert!(alg.reduce_terms(&rel.terms).unwrap().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn composition_examples() {
        let alg = bondal();
        let p = |arrows: Vec<usize>| path_of(alg.quiver(), &arrows).unwrap();
        assert!(alg.compose_paths(&p(vec![3]), &p(vec![0])).unwrap().iter().all(|c| c.is_zero()));
        let e2 = Path::trivial(1);
        assert_eq!(alg.compose_paths(&e2, &p(vec![0])).unwrap(), alg.basis_elem(3));
        assert_eq!(alg.compose_paths(&p(vec![2]), &p(vec![0])).unwrap(), alg.basis_elem(7));
        assert!(alg.compose_paths(&p(vec![0]), &p(vec![2])).is_err());
    }

    #[test]
    fn relations_reduce_to_zero() {
        let alg = bondal();
        for r in alg.relations() {
            assert!(alg.reduce_terms(&r.terms).unwrap().iter().all(|c| c.is_zero()));
        }
    }
}
