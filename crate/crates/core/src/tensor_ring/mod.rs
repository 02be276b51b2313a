//! Tensor rings of nilpotent bimodules: the chain of tensor powers with its
//! multiplication maps, the ring itself as a structure-constant algebra, and
//! the classification engine over it.
//!
//! Summand ordering is ascending tensor degree everywhere; all canonical
//! maps are matrices relative to the bases chosen by the tensor quotients.

mod copairs;
mod pairs;

pub use copairs::{
    canonical_copresentation, classify_copair, coind, copair_to_flat, flat_to_copair, k_functor,
    psi_membership, CanonicalCopresentation, Coinduced, CopairClassification, CopairModule,
    PsiVerdict,
};
pub use pairs::{
    canonical_presentation, classify_pair, cok_functor, direct_verdict, flat_to_pair, ind,
    ind_hom, pair_to_flat, phi_membership, stalk, u_functor, CanonicalPresentation, Induced,
    PairClassification, PairModule, PhiVerdict,
};

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{unit_vec, Algebra};
use crate::classify::{ig_data, IgCertificate};
use crate::linalg::Mat;
use crate::module::Bimodule;
use crate::tensor::{tensor_bimodule_bimodule, TensorSpace};
use crate::{Error, Result};

/// Default cap on the number of tensor powers computed before giving up on
/// nilpotency.
pub const DEFAULT_NILPOTENCY_CAP: usize = 16;

/// Guard on the plain tensor dimension of a single power; exceeding it is
/// reported as a nilpotency-cap failure.
const POWER_DIM_GUARD: usize = 100_000;

/// The chain `R, M, M^(x)2, ..., M^(x)N` with chosen bases, the defining
/// quotients, and all multiplication maps `mu_{i,j}` induced from them.
#[derive(Clone, Debug)]
pub struct TensorPowers {
    base: Arc<Algebra>,
    m: Bimodule,
    powers: Vec<Bimodule>,
    /// Defining quotient of `M (x) M^(x)k` for power `k+1`, `k >= 1`.
    defining: Vec<TensorSpace>,
    /// `mu[i][j]` maps the plain pair space of degrees `(i, j)` onto degree
    /// `i+j` (a zero-row matrix past the nilpotency index).
    mu: Vec<Vec<Mat>>,
    nil_index: usize,
}

impl TensorPowers {
    /// Iterate tensor powers until one vanishes; error if `cap` powers have
    /// been computed without reaching zero (or an intermediate dimension
    /// exceeds the internal guard).
    pub fn new(base: Arc<Algebra>, m: Bimodule, cap: usize) -> Result<Self> {
        if m.left_algebra().as_ref() != base.as_ref()
            || m.right_algebra().as_ref() != base.as_ref()
        {
            return Err(Error::AlgebraMismatch(
                "tensor powers need a bimodule over the base algebra".into(),
            ));
        }
        let mut powers = vec![Bimodule::regular(&base)];
        let mut defining: Vec<TensorSpace> = Vec::new();
        if m.dim() > 0 {
            powers.push(m.clone());
            loop {
                let prev = powers.last().expect("nonempty");
                if powers.len() > cap {
                    return Err(Error::NotNilpotentWithinCap { cap });
                }
                if m.dim() * prev.dim() > POWER_DIM_GUARD {
                    return Err(Error::NotNilpotentWithinCap { cap });
                }
                let t = tensor_bimodule_bimodule(&m, prev)?;
                if t.bimodule.dim() == 0 {
                    break;
                }
                powers.push(t.bimodule);
                defining.push(t.space);
            }
        }
        let nil_index = powers.len() - 1;
        let mut tp = TensorPowers {
            base,
            m,
            powers,
            defining,
            mu: Vec::new(),
            nil_index,
        };
        tp.mu = tp.build_mu_table();
        Ok(tp)
    }

    fn build_mu_table(&self) -> Vec<Vec<Mat>> {
        let n = self.nil_index;
        let f = self.base.field();
        let dim = |i: usize| self.power_dim(i);
        let mut mu: Vec<Vec<Mat>> =
            vec![vec![Mat::zeros(f, 0, 0); n + 1]; n + 1];
        // degree 0 times degree j: the left action of R on the power
        for j in 0..=n {
            let mut m00 = Mat::zeros(f, dim(j), self.base.dim() * dim(j));
            for r in 0..self.base.dim() {
                let act = &self.powers[j].left_action()[r];
                for t in 0..dim(j) {
                    for l in 0..dim(j) {
                        let v = act.get(l, t);
                        if v != 0 {
                            m00.set(l, r * dim(j) + t, v);
                        }
                    }
                }
            }
            mu[0][j] = m00;
        }
        // degree i times degree 0: the right action
        for i in 1..=n {
            let mut mi0 = Mat::zeros(f, dim(i), dim(i) * self.base.dim());
            for r in 0..self.base.dim() {
                let act = &self.powers[i].right_action()[r];
                for t in 0..dim(i) {
                    for l in 0..dim(i) {
                        let v = act.get(l, t);
                        if v != 0 {
                            mi0.set(l, t * self.base.dim() + r, v);
                        }
                    }
                }
            }
            mu[i][0] = mi0;
        }
        // degree 1 times degree j: the defining quotients
        for j in 1..=n {
            mu[1][j] = if j + 1 > n {
                Mat::zeros(f, 0, dim(1) * dim(j))
            } else {
                self.defining[j - 1].surj.clone()
            };
        }
        // higher degrees by unfolding the leftmost factor
        for i in 2..=n {
            for j in 1..=n {
                if i + j > n {
                    mu[i][j] = Mat::zeros(f, 0, dim(i) * dim(j));
                    continue;
                }
                let sect = &self.defining[i - 2].sect; // M^(x)i -> M (x) M^(x)(i-1)
                let idj = Mat::identity(f, dim(j));
                let step1 = sect.kronecker(&idj).expect("shape");
                let idm = Mat::identity(f, dim(1));
                let step2 = idm.kronecker(&mu[i - 1][j]).expect("shape");
                let step3 = &mu[1][i - 1 + j];
                mu[i][j] = step3
                    .mul(&step2)
                    .and_then(|t| t.mul(&step1))
                    .expect("shape");
            }
        }
        mu
    }

    pub fn base(&self) -> &Arc<Algebra> {
        &self.base
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.m
    }

    pub fn nil_index(&self) -> usize {
        self.nil_index
    }

    pub fn power(&self, i: usize) -> &Bimodule {
        &self.powers[i]
    }

    pub fn powers(&self) -> &[Bimodule] {
        &self.powers
    }

    pub fn power_dim(&self, i: usize) -> usize {
        if i <= self.nil_index {
            self.powers[i].dim()
        } else {
            0
        }
    }

    /// Decomposition section of `M^(x)i` into the plain space
    /// `M (x) M^(x)(i-1)`, for `i >= 2`.
    pub fn power_section(&self, i: usize) -> &Mat {
        &self.defining[i - 2].sect
    }

    /// Multiplication `M^(x)i (x) M^(x)j -> M^(x)(i+j)` on the plain pair
    /// space; zero rows past the nilpotency index.
    pub fn mu(&self, i: usize, j: usize) -> &Mat {
        &self.mu[i][j]
    }

    /// Total dimension of the tensor ring.
    pub fn total_dim(&self) -> usize {
        (0..=self.nil_index).map(|i| self.power_dim(i)).sum()
    }

    /// Coordinate offset of the degree-`i` block.
    pub fn offset(&self, i: usize) -> usize {
        (0..i).map(|k| self.power_dim(k)).sum()
    }
}

/// Build the tensor ring as a structure-constant algebra: degree blocks in
/// ascending order, multiplication through the `mu` maps, idempotents from
/// the base in degree zero, radical = base radical plus everything of
/// positive degree.
pub fn build_tensor_ring(tp: &TensorPowers) -> Result<Algebra> {
    let n = tp.nil_index();
    let base = tp.base();
    let f = base.field();
    let dim = tp.total_dim();
    let mut labels: Vec<String> = Vec::with_capacity(dim);
    labels.extend(base.labels().iter().cloned());
    for i in 1..=n {
        for t in 0..tp.power_dim(i) {
            labels.push(format!("t{i}_{t}"));
        }
    }
    let embed = |v: &[u64], off: usize| {
        let mut w = vec![0u64; dim];
        w[off..off + v.len()].copy_from_slice(v);
        w
    };
    let mut table = vec![vec![vec![0u64; dim]; dim]; dim];
    for i in 0..=n {
        let oi = tp.offset(i);
        for j in 0..=n {
            let oj = tp.offset(j);
            if i + j > n {
                continue;
            }
            let ok = tp.offset(i + j);
            let mu = tp.mu(i, j);
            for t in 0..tp.power_dim(i) {
                for s in 0..tp.power_dim(j) {
                    let col = mu.col(t * tp.power_dim(j) + s);
                    for (l, &v) in col.iter().enumerate() {
                        table[oi + t][oj + s][ok + l] = v;
                    }
                }
            }
        }
    }
    let unit = embed(base.unit(), 0);
    let idempotents: Vec<Vec<u64>> = base
        .idempotents()
        .iter()
        .map(|e| embed(e, 0))
        .collect();
    let mut rad: Vec<Vec<u64>> = base.rad_basis().iter().map(|r| embed(r, 0)).collect();
    for k in tp.power_dim(0)..dim {
        rad.push(unit_vec(dim, k));
    }
    let mut gens: Vec<Vec<u64>> = base.generators().iter().map(|g| embed(g, 0)).collect();
    for t in 0..tp.power_dim(1) {
        gens.push(unit_vec(dim, tp.offset(1) + t));
    }
    let _ = f;
    Algebra::with_generators(base.field(), labels, table, unit, idempotents, rad, gens)
}

/// Which membership class a verdict is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleClass {
    #[serde(rename = "proj")]
    Projective,
    #[serde(rename = "inj")]
    Injective,
    #[serde(rename = "flat")]
    Flat,
    #[serde(rename = "gp")]
    GorensteinProjective,
    #[serde(rename = "gi")]
    GorensteinInjective,
    #[serde(rename = "gf")]
    GorensteinFlat,
}

impl ModuleClass {
    pub fn parse(s: &str) -> Option<ModuleClass> {
        Some(match s {
            "proj" => ModuleClass::Projective,
            "inj" => ModuleClass::Injective,
            "flat" => ModuleClass::Flat,
            "gp" => ModuleClass::GorensteinProjective,
            "gi" => ModuleClass::GorensteinInjective,
            "gf" => ModuleClass::GorensteinFlat,
            _ => return None,
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ModuleClass::Projective => "proj",
            ModuleClass::Injective => "inj",
            ModuleClass::Flat => "flat",
            ModuleClass::GorensteinProjective => "gp",
            ModuleClass::GorensteinInjective => "gi",
            ModuleClass::GorensteinFlat => "gf",
        }
    }
}

/// Classification route selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Phi,
    Direct,
    Both,
}

impl Method {
    pub fn parse(s: &str) -> Option<Method> {
        Some(match s {
            "phi" => Method::Phi,
            "direct" => Method::Direct,
            "both" => Method::Both,
            _ => return None,
        })
    }
}

/// Everything a classification campaign needs about one instance: the powers,
/// the ring and its opposite, the base opposite, and self-injective
/// dimension certificates for both base and ring.
pub struct TensorRingCtx {
    pub tp: TensorPowers,
    pub ring: Arc<Algebra>,
    pub ring_op: Arc<Algebra>,
    pub base_op: Arc<Algebra>,
    pub base_cert: IgCertificate,
    pub ring_cert: IgCertificate,
    pub max_len: usize,
}

impl TensorRingCtx {
    pub fn new(tp: TensorPowers, max_len: usize) -> Result<Self> {
        let ring = Arc::new(build_tensor_ring(&tp)?);
        let ring_op = Arc::new(ring.opposite());
        let base_op = Arc::new(tp.base().opposite());
        let base_cert = ig_data(tp.base(), max_len)?;
        let ring_cert = ig_data(&ring, max_len)?;
        Ok(TensorRingCtx {
            tp,
            ring,
            ring_op,
            base_op,
            base_cert,
            ring_cert,
            max_len,
        })
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::nakayama;
    use crate::linalg::FieldSpec;
    use crate::module::FdModule;
    use test_support::{qnak_ctx, qnak_powers};

    #[test]
    fn zero_bimodule_gives_the_base_ring_back() {
        let f2 = FieldSpec::new(2).unwrap();
        let r = Arc::new(nakayama(f2, 3, 2).unwrap());
        let m = Bimodule::zero(r.clone(), r.clone());
        let tp = TensorPowers::new(r.clone(), m, 8).unwrap();
        assert_eq!(tp.nil_index(), 0);
        assert_eq!(tp.powers().len(), 1);
        let t = build_tensor_ring(&tp).unwrap();
        assert_eq!(t.dim(), r.dim());
        assert_eq!(t.table(), r.table());
    }

    #[test]
    fn regular_bimodule_is_not_nilpotent() {
        let f2 = FieldSpec::new(2).unwrap();
        let r = Arc::new(nakayama(f2, 3, 2).unwrap());
        let m = Bimodule::regular(&r);
        let err = TensorPowers::new(r, m, 8).unwrap_err();
        assert!(matches!(err, Error::NotNilpotentWithinCap { cap: 8 }));
    }

    #[test]
    fn qnak_powers_have_expected_dimensions() {
        // dims [6, 4], nilpotency index 1, M (x) M = 0
        let tp = qnak_powers();
        assert_eq!(tp.nil_index(), 1);
        assert_eq!(tp.power_dim(0), 6);
        assert_eq!(tp.power_dim(1), 4);
        assert_eq!(tp.power_dim(2), 0);
        assert_eq!(tp.total_dim(), 10);
    }

    #[test]
    fn qnak_tensor_ring_builds_and_validates() {
        let ctx = qnak_ctx();
        assert_eq!(ctx.ring.dim(), 10);
        assert_eq!(ctx.ring.idempotents().len(), 3);
        // radical: 3 arrows + 4 degree-one vectors
        assert_eq!(ctx.ring.rad_basis().len(), 7);
    }

    #[test]
    fn mu_maps_are_surjective_onto_their_targets() {
        let tp = qnak_powers();
        let n = tp.nil_index();
        for i in 0..=n {
            for j in 0..=n {
                let mu = tp.mu(i, j);
                if i + j <= n {
                    assert_eq!(mu.rows(), tp.power_dim(i + j));
                    assert_eq!(mu.rank(), tp.power_dim(i + j), "mu({i},{j})");
                } else {
                    assert_eq!(mu.rows(), 0);
                }
            }
        }
    }

    #[test]
    fn opposite_ring_matches_tensor_ring_of_opposite_data() {
        // T_R(M)^op has a structure-constant bijection onto T_{R^op}(M')
        // where M' is M with the actions swapped, via degree-wise order
        // reversal of tensor factors.
        let tp = qnak_powers();
        let t = build_tensor_ring(&tp).unwrap();
        let top = t.opposite();
        let base_op = Arc::new(tp.base().opposite());
        let m_sw = tp.bimodule().swapped();
        // rebuild over the structurally equal opposite
        let m_sw = Bimodule::from_parts(
            base_op.clone(),
            base_op.clone(),
            m_sw.dim(),
            m_sw.left_action().to_vec(),
            m_sw.right_action().to_vec(),
        );
        m_sw.check_axioms().unwrap();
        let tp_op = TensorPowers::new(base_op, m_sw, 8).unwrap();
        assert_eq!(tp_op.nil_index(), tp.nil_index());
        let t_op_built = build_tensor_ring(&tp_op).unwrap();
        assert_eq!(t_op_built.dim(), top.dim());

        // degree-wise reversal isomorphisms sigma_i: M^(x)i -> M'^(x)i
        let f = tp.base().field();
        let n = tp.nil_index();
        let mut sigma: Vec<Mat> = vec![Mat::identity(f, tp.power_dim(0))];
        if n >= 1 {
            sigma.push(Mat::identity(f, tp.power_dim(1)));
        }
        for i in 2..=n {
            // sigma_i(m (x) w) = mu'_{i-1,1}(sigma_{i-1}(w) (x) m)
            let d_m = tp.power_dim(1);
            let d_prev = tp.power_dim(i - 1);
            let mut plain = Mat::zeros(f, tp_op.power_dim(i), d_m * d_prev);
            let mu_p = tp_op.mu(i - 1, 1);
            for a in 0..d_m {
                for w in 0..d_prev {
                    let sw = sigma[i - 1].col(w);
                    // column of mu'_{i-1,1} at (sigma(w), a), summed by coords
                    let mut acc = vec![0u64; tp_op.power_dim(i)];
                    for (wp, &cw) in sw.iter().enumerate() {
                        if cw == 0 {
                            continue;
                        }
                        let col = mu_p.col(wp * d_m + a);
                        for (l, &v) in col.iter().enumerate() {
                            acc[l] = f.add(acc[l], f.mul(cw, v));
                        }
                    }
                    for (l, &v) in acc.iter().enumerate() {
                        plain.set(l, a * d_prev + w, v);
                    }
                }
            }
            let s = plain.mul(tp.power_section(i)).expect("shape");
            sigma.push(s);
        }
        // assemble the block-diagonal map and compare multiplication tables
        let dim = t.dim();
        let mut sig = Mat::zeros(f, dim, dim);
        for i in 0..=n {
            let o = tp.offset(i);
            let oo = tp_op.offset(i);
            for c in 0..tp.power_dim(i) {
                for r in 0..tp_op.power_dim(i) {
                    let v = sigma[i].get(r, c);
                    if v != 0 {
                        sig.set(oo + r, o + c, v);
                    }
                }
            }
        }
        assert_eq!(sig.rank(), dim, "reversal map must be invertible");
        // sig is an algebra isomorphism T^op -> T_built: check on products
        for x in 0..dim {
            for y in 0..dim {
                let lhs = sig
                    .apply(&top.table()[x][y])
                    .expect("shape");
                let sx = sig.apply(&unit_vec(dim, x)).expect("shape");
                let sy = sig.apply(&unit_vec(dim, y)).expect("shape");
                let rhs = t_op_built.mult(&sx, &sy);
                assert_eq!(lhs, rhs, "product mismatch at ({x},{y})");
            }
        }
    }

    #[test]
    fn ring_certificates_for_qnak_instance() {
        // base is self-injective; the tensor ring has self-injective
        // dimension one on both sides. The golden value 1 is frozen after
        // cross-checking the resolution route against a minimal injective
        // copresentation computed by envelope iteration.
        let ctx = qnak_ctx();
        assert_eq!(ctx.base_cert.finite_bound(), Some(0));
        assert_eq!(ctx.ring_cert.finite_bound(), Some(1));
        let reg = Arc::new(FdModule::regular_left(&ctx.ring));
        assert_eq!(
            id_by_injective_copresentation(&reg, 16),
            crate::classify::DimBound::Finite(1)
        );
        let base_reg = Arc::new(FdModule::regular_left(ctx.tp.base()));
        assert_eq!(
            id_by_injective_copresentation(&base_reg, 16),
            crate::classify::DimBound::Finite(0)
        );
    }

    /// Independent oracle: iterate minimal injective envelopes (duals of
    /// projective covers over the opposite) and count cokernel steps.
    fn id_by_injective_copresentation(
        x: &Arc<FdModule>,
        max_len: usize,
    ) -> crate::classify::DimBound {
        use crate::resolution::projective_cover;
        let mut z = x.clone();
        let mut steps = 0usize;
        loop {
            if z.dim() == 0 {
                return crate::classify::DimBound::Finite(steps.saturating_sub(1));
            }
            let op = Arc::new(z.algebra().opposite());
            let dz = Arc::new(z.kdual_into(&op).expect("dual"));
            let (_, epi) = projective_cover(&dz).expect("cover");
            let opop = Arc::new(op.opposite());
            let emb = epi.kdual_into(&opop).expect("dual of cover");
            if !emb.is_injective() {
                panic!("envelope embedding must be injective");
            }
            let (cok, _) = emb.cokernel_mod();
            if cok.dim() == 0 {
                return crate::classify::DimBound::Finite(steps);
            }
            steps += 1;
            if steps > max_len {
                return crate::classify::DimBound::AtLeast(max_len);
            }
            z = cok;
        }
    }
}
