//! Shared inputs for the criterion benches.

use qhat::chaincat::Complex;
use qhat::harness::Fixtures;

pub struct Inputs {
    pub fixtures: Fixtures,
    pub d: Complex,
    pub p: Complex,
    pub a: Complex,
    pub e: Complex,
    pub ct: Complex,
}

pub fn inputs() -> Inputs {
    let fixtures = Fixtures::builtin().expect("builtin fixtures load");
    let get = |name: &str| fixtures.object(name).expect("fixture object");
    let (d, p, a, e, ct) = (get("D"), get("P"), get("A"), get("E"), get("Ct"));
    Inputs { fixtures, d, p, a, e, ct }
}
