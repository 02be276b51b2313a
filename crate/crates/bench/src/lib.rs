//! Shared fixtures for the benchmark suite.

use std::sync::Arc;

use tenring::constructions::{example_qnak, FactorOrder};
use tenring::linalg::{FieldSpec, Mat};
use tenring::tensor_ring::{TensorPowers, TensorRingCtx, DEFAULT_NILPOTENCY_CAP};

pub fn qnak_powers() -> TensorPowers {
    let (r, m) = example_qnak(
        FieldSpec::new(2).unwrap(),
        3,
        2,
        1,
        3,
        FactorOrder::default(),
    )
    .unwrap();
    TensorPowers::new(r, m, DEFAULT_NILPOTENCY_CAP).unwrap()
}

pub fn qnak_ctx() -> TensorRingCtx {
    TensorRingCtx::new(qnak_powers(), 16).unwrap()
}

/// Deterministic pseudo-random dense matrix.
pub fn scrambled_matrix(p: u64, rows: usize, cols: usize, seed: u64) -> Mat {
    let f = FieldSpec::new(p).unwrap();
    let mut m = Mat::zeros(f, rows, cols);
    let mut st = seed.wrapping_add(0x9e3779b97f4a7c15);
    for r in 0..rows {
        for c in 0..cols {
            st = st
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            m.set(r, c, (st >> 33) % p);
        }
    }
    m
}

pub fn regular_module(ctx: &TensorRingCtx) -> Arc<tenring::FdModule> {
    Arc::new(tenring::FdModule::regular_left(&ctx.ring))
}
