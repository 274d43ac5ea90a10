use proptest::prelude::*;
use qhat::chaincat::{cone, injective_replacement, projective_replacement, ChainMap, Complex};
use qhat::homalg::{derived_hom_dims, derived_hom_support, derived_iso, euler_pairing_derived, ext_via_injectives, k0_class, EulerForm};
use qhat::linalg::q;
use qhat::pathalg::bondal;
use qhat::repcore::{combine, hom_basis, random_rep};
use qhat::{functors, Algebra, Rep, Q};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn alg() -> &'static Algebra {
    static ALG: OnceLock<Algebra> = OnceLock::new();
    ALG.get_or_init(bondal)
}

/// A presented module: generators and relations are vertex lists, the
/// presentation map is drawn from `seed`.
fn module() -> impl Strategy<Value = Rep> {
    (prop::collection::vec(0..3usize, 0..3), prop::collection::vec(0..3usize, 1..3), any::<u64>()).prop_map(|(srcs, tgts, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_rep(alg(), &srcs, &tgts, &mut rng)
    })
}

fn stalk(m: Rep) -> Complex {
    Complex::stalk(alg(), m, 0)
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((-2i64..=2).prop_map(q), n)
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 64, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn presented_modules_satisfy_relations(m in module()) {
        prop_assert!(Rep::new(alg(), m.dims.clone(), m.maps.clone()).is_ok());
    }

    #[test]
    fn cone_of_identity_is_acyclic(m in module(), n in -2i64..=2) {
        let x = stalk(m).shift(n);
        let c = cone(alg(), &ChainMap::identity(&x), &x, &x);
        prop_assert!(c.complex.is_acyclic(alg()));
    }

    #[test]
    fn shift_round_trips(m in module(), n in -3i64..=3) {
        let x = stalk(m);
        prop_assert_eq!(x.shift(n).shift(-n), x.clone());
        prop_assert_eq!(k0_class(&x.shift(n)).0, k0_class(&x).0.iter().map(|v| if n % 2 == 0 { *v } else { -v }).collect::<Vec<_>>());
    }

    #[test]
    fn cone_class_is_difference((m, n, c) in (module(), module()).prop_flat_map(|(m, n)| {
        let k = hom_basis(alg(), &m, &n).len();
        (Just(m), Just(n), coeffs(k))
    })) {
        let basis = hom_basis(alg(), &m, &n);
        let f = combine(&basis, &c).unwrap_or_else(|| qhat::RepMap::zero(&m, &n));
        let (x, y) = (stalk(m), stalk(n));
        let g = ChainMap::from_comps(0, [(0, f)]);
        let cn = cone(alg(), &g, &x, &y);
        prop_assert_eq!(k0_class(&cn.complex), k0_class(&y).add(&k0_class(&x).neg()));
    }

    #[test]
    fn projective_replacement_is_quasi_iso(m in module()) {
        let x = stalk(m);
        let r = projective_replacement(alg(), &x);
        let p = r.complex.realize(alg());
        prop_assert!(r.map.check_chain(alg(), &p, &x).is_ok());
        prop_assert!(r.map.is_quasi_iso(alg(), &p, &x));
    }

    #[test]
    fn injective_replacement_is_quasi_iso(m in module()) {
        let x = stalk(m);
        let r = injective_replacement(alg(), &x);
        let i = r.complex.realize(alg());
        prop_assert!(r.map.check_chain(alg(), &x, &i).is_ok());
        prop_assert!(r.map.is_quasi_iso(alg(), &x, &i));
    }

    #[test]
    fn ext_agrees_across_resolutions(m in module(), n in module()) {
        let via_proj = derived_hom_dims(alg(), &stalk(m.clone()), &stalk(n.clone()), 0..=3);
        let via_inj = ext_via_injectives(alg(), &m, &n, 3);
        prop_assert_eq!(via_proj, via_inj);
    }

    #[test]
    fn euler_form_matches_alternating_ext(m in module(), n in module()) {
        let chi = EulerForm::new(alg()).unwrap();
        let (x, y) = (stalk(m), stalk(n));
        prop_assert_eq!(chi.pair(&k0_class(&x), &k0_class(&y)), euler_pairing_derived(alg(), &x, &y));
    }

    #[test]
    fn serre_duality_on_modules(m in module(), n in module(), k in 0i64..=2) {
        let (x, y) = (stalk(m), stalk(n));
        let lhs = derived_hom_dims(alg(), &x, &y.shift(k), 0..=0)[0];
        let rhs = derived_hom_dims(alg(), &y, &functors::serre(alg(), &x).shift(-k), 0..=0)[0];
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn serre_inverse_undoes_serre(m in module()) {
        let x = stalk(m);
        let back = functors::serre_inverse(alg(), &functors::serre(alg(), &x));
        prop_assert!(derived_iso(alg(), &back, &x).is_some());
    }

    #[test]
    fn hom_support_is_bounded_by_global_dimension(m in module(), n in module()) {
        let s = derived_hom_support(alg(), &stalk(m), &stalk(n));
        prop_assert!(s.keys().all(|&k| (0..=2).contains(&k)));
    }
}
