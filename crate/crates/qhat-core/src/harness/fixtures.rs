//! Loading and validating the JSON fixture set.
//!
//! Every display is data. Loading validates relations, module-morphism
//! squares and chain-map squares, and aborts with the offending display name.

use crate::chaincat::{self, ChainMap, Complex, GradedMap, HomComplex};
use crate::error::{Error, Result};
use crate::functors;
use crate::linalg::{q_from_str, Matrix, Q};
use crate::pathalg::{Algebra, Quiver, Relation};
use crate::repcore::{self, Rep, RepMap};
use serde::Deserialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::PathBuf;

/// Environment variable naming a directory that replaces the built-in fixtures.
pub const FIXTURE_DIR_VAR: &str = "QHAT_FIXTURES";
pub const FIXTURE_FILE: &str = "bondal.json";

const BUILTIN: &str = include_str!("../../fixtures/bondal.json");

#[derive(Deserialize)]
struct RawFile {
    algebra: RawAlgebra,
    samples: RawSamples,
    modules: BTreeMap<String, RawModule>,
    morphisms: BTreeMap<String, RawMorphism>,
    complexes: BTreeMap<String, RawComplex>,
    chain_maps: BTreeMap<String, RawChainMap>,
}

#[derive(Deserialize)]
pub struct RawAlgebra {
    pub vertices: Vec<String>,
    pub arrows: Vec<RawArrow>,
    #[serde(default)]
    pub relations: Vec<Vec<RawTerm>>,
}

#[derive(Deserialize)]
pub struct RawArrow {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Deserialize)]
pub struct RawTerm {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Deserialize)]
struct RawSamples {
    pic0_k: Vec<String>,
    torsion_ab: Vec<[String; 2]>,
}

/// A module as `{dims, maps: {arrow: rows}}`; also the `--file` format of the CLI.
#[derive(Deserialize)]
pub struct RawModule {
    #[serde(default)]
    pub display: String,
    pub dims: Vec<usize>,
    pub maps: BTreeMap<String, Value>,
}

#[derive(Deserialize)]
struct RawMorphism {
    #[serde(default)]
    display: String,
    src: String,
    tgt: String,
    maps: Vec<Value>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawComplex {
    Explicit {
        #[serde(default)]
        display: String,
        bottom: i64,
        objects: Vec<String>,
        diffs: Vec<Vec<Value>>,
    },
    Cone {
        #[serde(default)]
        display: String,
        cone: String,
    },
}

#[derive(Deserialize)]
struct RawChainMap {
    #[serde(default)]
    display: String,
    src: String,
    tgt: String,
    comps: BTreeMap<String, Value>,
}

#[derive(Clone, Debug)]
pub struct NamedMorphism {
    pub src: String,
    pub tgt: String,
    pub map: RepMap,
}

/// A transcribed chain map together with its resolved source and target.
#[derive(Clone, Debug)]
pub struct NamedChainMap {
    pub src: Complex,
    pub tgt: Complex,
    pub map: ChainMap,
}

#[derive(Clone, Debug)]
pub struct Samples {
    pub pic0_k: Vec<Q>,
    pub torsion_ab: Vec<(Q, Q)>,
}

pub struct Fixtures {
    pub alg: Algebra,
    pub samples: Samples,
    /// Hex SHA-256 of the fixture file.
    pub hash: String,
    pub source: String,
    modules: BTreeMap<String, Rep>,
    morphisms: BTreeMap<String, NamedMorphism>,
    complexes: BTreeMap<String, Complex>,
    chain_maps: BTreeMap<String, NamedChainMap>,
    displays: BTreeMap<String, String>,
}

fn fx(name: &str, msg: impl std::fmt::Display) -> Error {
    Error::Fixture { name: name.to_string(), msg: msg.to_string() }
}

pub fn parse_q(name: &str, v: &Value) -> Result<Q> {
    match v {
        Value::Number(n) => n.as_i64().map(|n| Q::from_integer(n.into())).ok_or_else(|| fx(name, format!("entry {n} is not an integer"))),
        Value::String(s) => q_from_str(s).ok_or_else(|| fx(name, format!("entry `{s}` is not a rational"))),
        _ => Err(fx(name, "matrix entries must be integers or \"p/q\" strings")),
    }
}

/// Parses a matrix of the given shape; accepts the shorthands `"0"` and `"id"`.
pub fn parse_matrix(name: &str, v: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    match v {
        Value::String(s) if s == "0" => Ok(Matrix::zeros(rows, cols)),
        Value::String(s) if s == "id" => {
            if rows != cols {
                return Err(fx(name, format!("`id` used for a {rows}x{cols} block")));
            }
            Ok(Matrix::identity(rows))
        }
        Value::Array(rs) => {
            if rs.len() != rows {
                return Err(fx(name, format!("expected {rows} rows, found {}", rs.len())));
            }
            let mut out = Vec::with_capacity(rows);
            for r in rs {
                let r = r.as_array().ok_or_else(|| fx(name, "matrix rows must be arrays"))?;
                if r.len() != cols {
                    return Err(fx(name, format!("expected {cols} columns, found {}", r.len())));
                }
                out.push(r.iter().map(|e| parse_q(name, e)).collect::<Result<Vec<Q>>>()?);
            }
            Ok(Matrix::from_rows(out, cols))
        }
        _ => Err(fx(name, "a matrix must be a row list, \"0\" or \"id\"")),
    }
}

pub fn build_algebra(raw: &RawAlgebra) -> Result<Algebra> {
    let arrows: Vec<(String, String, String)> = raw.arrows.iter().map(|a| (a.id.clone(), a.src.clone(), a.tgt.clone())).collect();
    let quiver = Quiver::new(&raw.vertices, &arrows)?;
    let lookup = |id: &str| quiver.arrow_index(id).ok_or_else(|| fx("algebra", format!("unknown arrow `{id}`")));
    let mut relations = Vec::new();
    for r in &raw.relations {
        let mut terms = Vec::new();
        for t in r {
            let c = q_from_str(&t.coeff).ok_or_else(|| fx("algebra", format!("bad coefficient `{}`", t.coeff)))?;
            terms.push((c, t.path.iter().map(|s| lookup(s)).collect::<Result<Vec<_>>>()?));
        }
        relations.push(Relation { terms });
    }
    Algebra::new(quiver, relations, None)
}

pub fn build_module(alg: &Algebra, name: &str, raw: &RawModule) -> Result<Rep> {
    let arrows = alg.quiver().arrows();
    if raw.dims.len() != alg.vertex_count() {
        return Err(fx(name, "dimension vector has the wrong length"));
    }
    if let Some(k) = raw.maps.keys().find(|k| alg.quiver().arrow_index(k).is_none()) {
        return Err(fx(name, format!("unknown arrow `{k}`")));
    }
    let zero = Value::String("0".into());
    let maps = arrows
        .iter()
        .map(|a| parse_matrix(name, raw.maps.get(&a.id).unwrap_or(&zero), raw.dims[a.tgt], raw.dims[a.src]))
        .collect::<Result<Vec<_>>>()?;
    Rep::new(alg, raw.dims.clone(), maps).map_err(|e| fx(name, e))
}

fn vertex_maps(alg: &Algebra, name: &str, v: &Value, src: &Rep, tgt: &Rep) -> Result<RepMap> {
    if v.as_str() == Some("0") {
        return Ok(RepMap::zero(src, tgt));
    }
    let list = v.as_array().ok_or_else(|| fx(name, "expected one matrix per vertex or \"0\""))?;
    if list.len() != alg.vertex_count() {
        return Err(fx(name, format!("expected {} vertex matrices, found {}", alg.vertex_count(), list.len())));
    }
    let maps = list.iter().enumerate().map(|(i, m)| parse_matrix(name, m, tgt.dims[i], src.dims[i])).collect::<Result<Vec<_>>>()?;
    let f = RepMap { maps };
    f.check(alg, src, tgt).map_err(|e| fx(name, e))?;
    Ok(f)
}

/// Splits `base[n]` into `(base, n)`.
fn split_shift(r: &str) -> Option<(&str, i64)> {
    let r = r.trim();
    if !r.ends_with(']') {
        return None;
    }
    let open = r.rfind('[')?;
    let n = r[open + 1..r.len() - 1].trim().parse().ok()?;
    Some((&r[..open], n))
}

impl Fixtures {
    /// The built-in fixtures, or `$QHAT_FIXTURES/bondal.json` when set.
    pub fn load() -> Result<Fixtures> {
        match std::env::var_os(FIXTURE_DIR_VAR) {
            Some(dir) => {
                let path = PathBuf::from(dir).join(FIXTURE_FILE);
                let text = std::fs::read_to_string(&path).map_err(|e| fx(&path.display().to_string(), e))?;
                Fixtures::parse(&text)
            }
            None => Fixtures::parse(BUILTIN),
        }
    }

    pub fn builtin() -> Result<Fixtures> {
        Fixtures::parse(BUILTIN)
    }

    pub fn parse(text: &str) -> Result<Fixtures> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| fx("file", e))?;
        let alg = build_algebra(&raw.algebra)?;
        let samples = Samples {
            pic0_k: raw
                .samples
                .pic0_k
                .iter()
                .map(|s| q_from_str(s).ok_or_else(|| fx("samples", format!("bad k `{s}`"))))
                .collect::<Result<_>>()?,
            torsion_ab: raw
                .samples
                .torsion_ab
                .iter()
                .map(|[a, b]| match (q_from_str(a), q_from_str(b)) {
                    (Some(a), Some(b)) => Ok((a, b)),
                    _ => Err(fx("samples", format!("bad pair ({a}, {b})"))),
                })
                .collect::<Result<_>>()?,
        };
        let hash = Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
        let mut f = Fixtures {
            alg,
            samples,
            hash,
            source: text.to_string(),
            modules: BTreeMap::new(),
            morphisms: BTreeMap::new(),
            complexes: BTreeMap::new(),
            chain_maps: BTreeMap::new(),
            displays: BTreeMap::new(),
        };
        for (name, m) in &raw.modules {
            let rep = build_module(&f.alg, name, m)?;
            f.modules.insert(name.clone(), rep);
            f.displays.insert(name.clone(), m.display.clone());
        }
        for (name, m) in &raw.morphisms {
            let src = f.module_expr(&m.src).map_err(|e| fx(name, e))?;
            let tgt = f.module_expr(&m.tgt).map_err(|e| fx(name, e))?;
            let v = Value::Array(m.maps.clone());
            let map = vertex_maps(&f.alg, name, &v, &src, &tgt)?;
            f.morphisms.insert(name.clone(), NamedMorphism { src: m.src.clone(), tgt: m.tgt.clone(), map });
            f.displays.insert(name.clone(), m.display.clone());
        }
        for (name, c) in &raw.complexes {
            let (complex, display) = match c {
                RawComplex::Explicit { display, bottom, objects, diffs } => {
                    let objs = objects.iter().map(|o| f.module_expr(o).map_err(|e| fx(name, e))).collect::<Result<Vec<_>>>()?;
                    if diffs.len() + 1 != objs.len() {
                        return Err(fx(name, "need one differential between consecutive objects"));
                    }
                    let ds = diffs
                        .iter()
                        .enumerate()
                        .map(|(i, d)| vertex_maps(&f.alg, name, &Value::Array(d.clone()), &objs[i], &objs[i + 1]))
                        .collect::<Result<Vec<_>>>()?;
                    (Complex::new(&f.alg, *bottom, objs, ds).map_err(|e| fx(name, e))?, display)
                }
                RawComplex::Cone { display, cone } => (f.cone_of(cone).map_err(|e| fx(name, e))?, display),
            };
            f.complexes.insert(name.clone(), complex);
            f.displays.insert(name.clone(), display.clone());
        }
        for (name, c) in &raw.chain_maps {
            let src = f.complex(&c.src).map_err(|e| fx(name, e))?;
            let tgt = f.complex(&c.tgt).map_err(|e| fx(name, e))?;
            let mut comps = Vec::new();
            for (k, v) in &c.comps {
                let k: i64 = k.parse().map_err(|_| fx(name, format!("degree `{k}` is not an integer")))?;
                comps.push((k, vertex_maps(&f.alg, name, v, src.obj(k), tgt.obj(k))?));
            }
            let map = GradedMap::from_comps(0, comps);
            map.check_chain(&f.alg, &src, &tgt).map_err(|e| fx(name, e))?;
            f.chain_maps.insert(name.clone(), NamedChainMap { src, tgt, map });
            f.displays.insert(name.clone(), c.display.clone());
        }
        Ok(f)
    }

    /// A module name or a `+`-separated direct sum of module names.
    pub fn module_expr(&self, expr: &str) -> Result<Rep> {
        let parts = expr
            .split('+')
            .map(|p| self.modules.get(p.trim()).ok_or_else(|| Error::Invalid(format!("unknown module `{}`", p.trim()))))
            .collect::<Result<Vec<_>>>()?;
        if parts.len() == 1 {
            return Ok(parts[0].clone());
        }
        Ok(repcore::direct_sum(&self.alg, &parts).sum)
    }

    fn cone_of(&self, morphism: &str) -> Result<Complex> {
        let m = self.morphism(morphism)?;
        let (x, y) = (self.module_expr(&m.src)?, self.module_expr(&m.tgt)?);
        let f = GradedMap::from_comps(0, [(0, m.map.clone())]);
        Ok(chaincat::cone(&self.alg, &f, &Complex::stalk(&self.alg, x, 0), &Complex::stalk(&self.alg, y, 0)).complex)
    }

    /// Resolves a complex reference: a complex or module name, `A+B`,
    /// `Cone(m)`, or any of these followed by `[n]`.
    pub fn complex(&self, r: &str) -> Result<Complex> {
        let r = r.trim();
        if let Some((base, n)) = split_shift(r) {
            return Ok(self.complex(base)?.shift(n));
        }
        if let Some(m) = r.strip_prefix("Cone(").and_then(|s| s.strip_suffix(')')) {
            return self.cone_of(m.trim());
        }
        if let Some(c) = self.complexes.get(r) {
            return Ok(c.clone());
        }
        Ok(Complex::stalk(&self.alg, self.module_expr(r)?, 0))
    }

    pub fn module(&self, name: &str) -> Result<&Rep> {
        self.modules.get(name).ok_or_else(|| Error::Invalid(format!("unknown module `{name}`")))
    }

    pub fn morphism(&self, name: &str) -> Result<&NamedMorphism> {
        self.morphisms.get(name).ok_or_else(|| Error::Invalid(format!("unknown morphism `{name}`")))
    }

    /// The morphism as a chain map between stalk complexes in degree 0.
    pub fn morphism_chain(&self, name: &str) -> Result<NamedChainMap> {
        let m = self.morphism(name)?;
        Ok(NamedChainMap { src: self.complex(&m.src)?, tgt: self.complex(&m.tgt)?, map: GradedMap::from_comps(0, [(0, m.map.clone())]) })
    }

    pub fn chain_map(&self, name: &str) -> Result<&NamedChainMap> {
        self.chain_maps.get(name).ok_or_else(|| Error::Invalid(format!("unknown chain map `{name}`")))
    }

    pub fn display(&self, name: &str) -> Option<&str> {
        self.displays.get(name).map(String::as_str)
    }

    pub fn module_names(&self) -> impl Iterator<Item = &str> {
        self.modules.keys().map(String::as_str)
    }

    pub fn chain_map_names(&self) -> impl Iterator<Item = &str> {
        self.chain_maps.keys().map(String::as_str)
    }

    pub fn stalk(&self, name: &str) -> Result<Complex> {
        Ok(Complex::stalk(&self.alg, self.module(name)?.clone(), 0))
    }

    /// The nonzero map `P → S(P)`, unique up to scalar.
    pub fn p_to_serre_p(&self) -> Result<(Complex, Complex, ChainMap)> {
        let p = self.stalk("P")?;
        let model = functors::model(&self.alg, &p);
        let sp = functors::serre(&self.alg, &p);
        let hc = HomComplex::new(&self.alg, &model, sp.clone());
        let coh = hc.cohomology(0);
        if coh.dim() != 1 {
            return Err(fx("E", format!("Hom(P, S(P)) has dimension {}, expected 1", coh.dim())));
        }
        let u = hc.to_graded_map(0, &coh.basis[0]);
        Ok((model.realize(&self.alg), sp, u))
    }

    /// `E` from the triangle `S(P)[−1] → E → P → S(P)`, i.e. `cone(P → S(P))[−1]`.
    pub fn e(&self) -> Result<Complex> {
        let (x, sp, u) = self.p_to_serre_p()?;
        Ok(chaincat::cone(&self.alg, &u, &x, &sp).complex.shift(-1))
    }

    /// Torsion family member: `k ⇉ k ⇉ 0` with `a1 = a`, `b1 = b`.
    pub fn torsion(&self, a: &Q, b: &Q) -> Result<Rep> {
        let alg = &self.alg;
        let dims = vec![1, 1, 0];
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|ar| match ar.id.as_str() {
                "a1" => Matrix::from_rows(vec![vec![a.clone()]], 1),
                "b1" => Matrix::from_rows(vec![vec![b.clone()]], 1),
                _ => Matrix::zeros(dims[ar.tgt], dims[ar.src]),
            })
            .collect();
        Rep::new(alg, dims, maps).map_err(|e| fx("T(a,b)", e))
    }

    /// Degree-zero family member `P3 → P2 ⊕ P2 → P1` with differentials
    /// `(k·a2; b2)` and `(b1, a1)`, placed in degrees −2..0.
    pub fn pic0(&self, k: &Q) -> Result<Complex> {
        let alg = &self.alg;
        let v = |s: &str| alg.quiver().vertex_index(s).ok_or_else(|| fx("M(k)", format!("no vertex {s}")));
        let (v1, v2, v3) = (v("1")?, v("2")?, v("3")?);
        let arrow = |id: &str| -> Result<Vec<Q>> {
            let a = alg.quiver().arrow_index(id).ok_or_else(|| fx("M(k)", format!("no arrow {id}")))?;
            alg.reduce_terms(&[(Q::from_integer(1.into()), vec![a])])
        };
        let (p1, p2, p3) = (repcore::projective(alg, v1), repcore::projective(alg, v2), repcore::projective(alg, v3));
        let sum = repcore::direct_sum(alg, &[&p2, &p2]);
        let ka2: Vec<Q> = arrow("a2")?.iter().map(|c| c * k).collect();
        let d0 = sum.injections[0]
            .after(&repcore::projective_map(alg, v3, v2, &ka2))
            .add(&sum.injections[1].after(&repcore::projective_map(alg, v3, v2, &arrow("b2")?)));
        let d1 = repcore::projective_map(alg, v2, v1, &arrow("b1")?)
            .after(&sum.projections[0])
            .add(&repcore::projective_map(alg, v2, v1, &arrow("a1")?).after(&sum.projections[1]));
        Complex::new(alg, -2, vec![p3, sum.sum.clone(), p1], vec![d0, d1]).map_err(|e| fx("M(k)", e))
    }

    /// Named objects for queries: fixture references plus `E`, `S(P)`,
    /// `T(a,b)` and `M(k)`, each optionally shifted.
    pub fn object(&self, r: &str) -> Result<Complex> {
        let r = r.trim();
        if let Some((base, n)) = split_shift(r) {
            return Ok(self.object(base)?.shift(n));
        }
        if r == "E" {
            return self.e();
        }
        if r == "S(P)" {
            return Ok(functors::serre(&self.alg, &self.stalk("P")?));
        }
        if let Some(args) = r.strip_prefix("T(").and_then(|s| s.strip_suffix(')')) {
            let (a, b) = args.split_once(',').ok_or_else(|| Error::Invalid("T(a,b) needs two parameters".into()))?;
            let parse = |s: &str| q_from_str(s).ok_or_else(|| Error::Invalid(format!("bad parameter `{s}`")));
            return Ok(Complex::stalk(&self.alg, self.torsion(&parse(a)?, &parse(b)?)?, 0));
        }
        if let Some(k) = r.strip_prefix("M(").and_then(|s| s.strip_suffix(')')) {
            let k = q_from_str(k).ok_or_else(|| Error::Invalid(format!("bad parameter `{k}`")))?;
            return self.pic0(&k);
        }
        self.complex(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_fixtures_load_and_validate() {
        let f = Fixtures::builtin().unwrap();
        assert_eq!(f.alg.dim(), 9);
        assert_eq!(f.hash.len(), 64);
        let a = f.complex("A").unwrap();
        assert_eq!((a.bottom(), a.top()), (-1, 0));
        let id1 = f.complex("I_D[1]").unwrap();
        assert_eq!(id1.bottom(), -1);
        assert_eq!(id1.d(-1), f.complex("I_D").unwrap().d(0).neg());
    }

    #[test]
    fn malformed_display_is_named() {
        let text = BUILTIN.replace(
            r#""a2": [[1]], "b2": [[0]]}},
    "Ct""#,
            r#""a2": [[1, 0]], "b2": [[0]]}},
    "Ct""#,
        );
        match Fixtures::parse(&text) {
            Err(Error::Fixture { name, .. }) => assert_eq!(name, "D"),
            other => panic!("expected a fixture error, got {:?}", other.err()),
        }
    }

    #[test]
    fn family_members_are_complexes() {
        let f = Fixtures::builtin().unwrap();
        for k in &f.samples.pic0_k {
            assert!(f.pic0(k).is_ok());
        }
        for (a, b) in &f.samples.torsion_ab {
            assert!(f.torsion(a, b).is_ok());
        }
    }
}
