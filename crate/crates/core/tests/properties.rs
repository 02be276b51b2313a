//! Property tests for the algebraic invariants: exact linear algebra laws on
//! random matrices, and module-level identities on seeded random modules
//! over the running instance.

use std::sync::Arc;

use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use tenring::campaign::{random_copair, random_module, random_pair, CampaignConfig};
use tenring::classify::{ext_dim, tor_dim};
use tenring::constructions::{example_qnak, FactorOrder};
use tenring::hom::{hom_basis, hom_from_left};
use tenring::linalg::{FieldSpec, Mat};
use tenring::module::{FdModule, ModHom};
use tenring::tensor::tensor_bimodule_module;
use tenring::tensor_ring::{TensorPowers, TensorRingCtx, DEFAULT_NILPOTENCY_CAP};

fn mat_strategy(p: u64, max_dim: usize) -> impl Strategy<Value = Mat> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0..p, r * c).prop_map(move |data| {
            Mat::new(FieldSpec::new(p).unwrap(), r, c, data).unwrap()
        })
    })
}

fn field_and_mat(max_dim: usize) -> impl Strategy<Value = Mat> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(7)]
        .prop_flat_map(move |p| mat_strategy(p, max_dim))
}

proptest! {
    #[test]
    fn rref_is_idempotent(a in field_and_mat(6)) {
        let first = a.rref();
        let second = first.reduced.rref();
        prop_assert_eq!(&second.reduced, &first.reduced);
        prop_assert_eq!(second.rank, first.rank);
    }

    #[test]
    fn rank_nullity(a in field_and_mat(6)) {
        let k = a.kernel_basis();
        prop_assert_eq!(a.rank() + k.cols(), a.cols());
        prop_assert!(a.mul(&k).unwrap().is_zero());
        prop_assert_eq!(k.rank(), k.cols(), "kernel basis is independent");
    }

    #[test]
    fn quotient_data_laws(a in field_and_mat(6)) {
        let q = Mat::quotient_data(a.field(), a.rows(), &a).unwrap();
        prop_assert!(q.proj.mul(&a).unwrap().is_zero());
        prop_assert_eq!(q.proj.rank(), a.rows() - a.rank());
        let id = q.proj.mul(&q.section).unwrap();
        prop_assert_eq!(id, Mat::identity(a.field(), q.proj.rows()));
    }

    #[test]
    fn kronecker_multiplicativity(
        seed in proptest::array::uniform4(0u64..100),
        p in prop_oneof![Just(2u64), Just(3), Just(5)],
        ra in 1usize..4, ca in 1usize..4, rb in 1usize..4, cb in 1usize..4,
        cc in 1usize..4, cd in 1usize..4,
    ) {
        // shapes compose: A (ra x ca), C (ca x cc), B (rb x cb), D (cb x cd)
        let f = FieldSpec::new(p).unwrap();
        let fill = |r: usize, c: usize, s: u64| {
            let mut m = Mat::zeros(f, r, c);
            let mut st = s.wrapping_add(1);
            for i in 0..r {
                for j in 0..c {
                    st = st.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    m.set(i, j, (st >> 33) % p);
                }
            }
            m
        };
        let a = fill(ra, ca, seed[0]);
        let b = fill(rb, cb, seed[1]);
        let c = fill(ca, cc, seed[2]);
        let d = fill(cb, cd, seed[3]);
        let lhs = a.kronecker(&b).unwrap().mul(&c.kronecker(&d).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kronecker(&b.mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_finds_solutions_of_consistent_systems(a in field_and_mat(5), xs in proptest::collection::vec(0u64..7, 0..5)) {
        // build a consistent right-hand side from a known solution
        let x: Vec<u64> = (0..a.cols()).map(|i| xs.get(i).copied().unwrap_or(0) % a.field().modulus()).collect();
        let b = a.apply(&x).unwrap();
        let rhs = Mat::new(a.field(), a.rows(), 1, b).unwrap();
        let sol = a.solve(&rhs);
        prop_assert!(sol.is_some());
        prop_assert_eq!(a.mul(&sol.unwrap()).unwrap(), rhs);
    }
}

fn qnak_ctx() -> &'static TensorRingCtx {
    static CTX: std::sync::OnceLock<TensorRingCtx> = std::sync::OnceLock::new();
    CTX.get_or_init(|| {
        let (r, m) = example_qnak(FieldSpec::new(2).unwrap(), 3, 2, 1, 3, FactorOrder::default())
            .unwrap();
        let tp = TensorPowers::new(r, m, DEFAULT_NILPOTENCY_CAP).unwrap();
        TensorRingCtx::new(tp, 16).unwrap()
    })
}

fn small_cfg(seed: u64) -> CampaignConfig {
    CampaignConfig {
        seed,
        samples: 1,
        max_len: 12,
        tor_bound: 8,
        ..CampaignConfig::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn constructed_modules_pass_axiom_checks(seed in 0u64..5000) {
        let ctx = qnak_ctx();
        let cfg = small_cfg(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_module(ctx.tp.base(), &cfg, &mut rng).unwrap();
        prop_assert!(x.check_axioms().is_ok());
        let t = tensor_bimodule_module(ctx.tp.bimodule(), &x).unwrap();
        prop_assert!(t.module.check_axioms().is_ok());
        let p = random_pair(&ctx.tp, &cfg, &mut rng).unwrap();
        let flat = tenring::tensor_ring::pair_to_flat(&ctx.tp, &ctx.ring, &p);
        prop_assert!(flat.check_axioms().is_ok());
        let c = random_copair(&ctx.tp, &ctx.base_op, &cfg, &mut rng).unwrap();
        let cflat = tenring::tensor_ring::copair_to_flat(&ctx.tp, &ctx.ring_op, &c);
        prop_assert!(cflat.check_axioms().is_ok());
    }

    #[test]
    fn kernel_image_cokernel_of_random_homs(seed in 0u64..5000) {
        let ctx = qnak_ctx();
        let cfg = small_cfg(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_module(ctx.tp.base(), &cfg, &mut rng).unwrap();
        let y = random_module(ctx.tp.base(), &cfg, &mut rng).unwrap();
        let homs = hom_basis(&x, &y).unwrap();
        let Some(h) = homs.first() else { return Ok(()); };
        let hom = ModHom::new(x.clone(), y.clone(), h.clone()).unwrap();
        let (ker, ki) = hom.kernel_mod();
        let (im, ii) = hom.image_mod();
        let (cok, cp) = hom.cokernel_mod();
        prop_assert_eq!(ker.dim() + im.dim(), x.dim());
        prop_assert_eq!(im.dim() + cok.dim(), y.dim());
        prop_assert!(ker.check_axioms().is_ok());
        prop_assert!(im.check_axioms().is_ok());
        prop_assert!(cok.check_axioms().is_ok());
        prop_assert!(ki.check_intertwines().is_ok());
        prop_assert!(ii.check_intertwines().is_ok());
        prop_assert!(cp.check_intertwines().is_ok());
        // duality exchanges kernels and cokernels
        let dual = hom.kdual_into(&ctx.base_op).unwrap();
        prop_assert_eq!(dual.kernel_mod().0.dim(), cok.dim());
        prop_assert_eq!(dual.cokernel_mod().0.dim(), ker.dim());
    }

    #[test]
    fn adjunction_dimension_law(seed in 0u64..5000) {
        // dim Hom(M (x) X, Z) = dim Hom(X, Hom(M, Z)) by independent solves
        let ctx = qnak_ctx();
        let cfg = small_cfg(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_module(ctx.tp.base(), &cfg, &mut rng).unwrap();
        let z = random_module(ctx.tp.base(), &cfg, &mut rng).unwrap();
        let mx = tensor_bimodule_module(ctx.tp.bimodule(), &x).unwrap();
        let lhs = hom_basis(&mx.module, &z).unwrap().len();
        let hz = hom_from_left(ctx.tp.bimodule(), &z).unwrap();
        let rhs = hom_basis(&x, &hz.module).unwrap().len();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn duality_bridge_and_dimension_shift(seed in 0u64..5000) {
        let ctx = qnak_ctx();
        let cfg = small_cfg(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_module(ctx.tp.base(), &cfg, &mut rng).unwrap();
        let y = random_module(ctx.tp.base(), &cfg, &mut rng).unwrap();
        let dy = y.kdual();
        for n in 0..=2usize {
            let t = tor_dim(&dy, &x, n, 8).unwrap();
            let e = ext_dim(&x, &y, n, 8).unwrap();
            prop_assert_eq!(t, e, "degree {}", n);
        }
        // dimension shift against the first syzygy
        if x.dim() > 0 {
            let omega = tenring::resolution::syzygy(&x).unwrap();
            for n in 1..=2usize {
                prop_assert_eq!(
                    ext_dim(&x, &y, n + 1, 8).unwrap(),
                    ext_dim(&omega, &y, n, 8).unwrap(),
                    "shift at degree {}", n
                );
            }
        }
    }

    #[test]
    fn tensor_additivity(seed in 0u64..5000) {
        let ctx = qnak_ctx();
        let cfg = small_cfg(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_module(ctx.tp.base(), &cfg, &mut rng).unwrap();
        let y = random_module(ctx.tp.base(), &cfg, &mut rng).unwrap();
        let (sum, _) = FdModule::direct_sum(&[&x, &y]).unwrap();
        let m = ctx.tp.bimodule();
        let a = tensor_bimodule_module(m, &x).unwrap().module.dim();
        let b = tensor_bimodule_module(m, &y).unwrap().module.dim();
        let c = tensor_bimodule_module(m, &Arc::new(sum)).unwrap().module.dim();
        prop_assert_eq!(a + b, c);
    }
}
