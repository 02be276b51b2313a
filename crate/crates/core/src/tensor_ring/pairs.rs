//! Left modules over the tensor ring in pair presentation `(X, u)` with
//! `u: M (x) X -> X`, the induction and stalk functors with their adjoints,
//! the canonical two-term presentation, and the monomorphism-category
//! membership test.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Method, ModuleClass, TensorPowers, TensorRingCtx};
use crate::classify::{
    is_flat_module, is_gorenstein_flat, is_gorenstein_projective, is_injective_module,
    is_projective_module, IgCertificate, Tri,
};
use crate::linalg::Mat;
use crate::module::{FdModule, ModHom};
use crate::tensor::{tensor_bimodule_module, tensor_map_right_factor, TensorSpace};
use crate::{Error, Result};

/// A tensor-ring module presented as a base module with a structure map out
/// of the computed tensor quotient `M (x) X`.
#[derive(Clone, Debug)]
pub struct PairModule {
    x: Arc<FdModule>,
    mx: Arc<FdModule>,
    mx_space: TensorSpace,
    u: Mat,
}

impl PairModule {
    /// Validate and wrap: `u` must be a homomorphism of base modules
    /// `M (x) X -> X`.
    pub fn new(tp: &TensorPowers, x: Arc<FdModule>, u: Mat) -> Result<Self> {
        if x.algebra().as_ref() != tp.base().as_ref() {
            return Err(Error::AlgebraMismatch(
                "pair module must live over the base algebra".into(),
            ));
        }
        let t = tensor_bimodule_module(tp.bimodule(), &x)?;
        Self::from_tensor(x, t.module, t.space, u)
    }

    pub(crate) fn from_tensor(
        x: Arc<FdModule>,
        mx: FdModule,
        mx_space: TensorSpace,
        u: Mat,
    ) -> Result<Self> {
        let mx = Arc::new(mx);
        // membership of u in Hom_R(M (x) X, X) is the pair invariant
        ModHom::new(mx.clone(), x.clone(), u.clone())?;
        Ok(PairModule { x, mx, mx_space, u })
    }

    pub fn x(&self) -> &Arc<FdModule> {
        &self.x
    }

    /// The computed quotient `M (x) X`.
    pub fn mx(&self) -> &Arc<FdModule> {
        &self.mx
    }

    pub fn mx_space(&self) -> &TensorSpace {
        &self.mx_space
    }

    pub fn u(&self) -> &Mat {
        &self.u
    }

    pub fn u_hom(&self) -> ModHom {
        ModHom::from_parts(self.mx.clone(), self.x.clone(), self.u.clone())
    }

    pub fn is_u_mono(&self) -> bool {
        self.u.rank() == self.mx.dim()
    }

    pub fn dim(&self) -> usize {
        self.x.dim()
    }
}

/// The stalk pair `(X, 0)`.
pub fn stalk(tp: &TensorPowers, x: Arc<FdModule>) -> Result<PairModule> {
    let t = tensor_bimodule_module(tp.bimodule(), &x)?;
    let u = Mat::zeros(tp.base().field(), x.dim(), t.module.dim());
    PairModule::from_tensor(x, t.module, t.space, u)
}

/// The forgetful functor: underlying base module.
pub fn u_functor(p: &PairModule) -> Arc<FdModule> {
    p.x.clone()
}

/// Left adjoint of the stalk functor: the cokernel of the structure map.
pub fn cok_functor(p: &PairModule) -> (Arc<FdModule>, ModHom) {
    p.u_hom().cokernel_mod()
}

/// Induction `Ind(X) = ((+)_i M^(x)i (x) X, shift)` with the summand data
/// retained: `components[i]` is the iterated tensor `M^(x)i (x) X` and
/// `spaces[i]` the quotient presenting `components[i+1]`.
#[derive(Clone, Debug)]
pub struct Induced {
    pub pair: PairModule,
    pub components: Vec<Arc<FdModule>>,
    pub spaces: Vec<TensorSpace>,
    pub offsets: Vec<usize>,
}

pub fn ind(tp: &TensorPowers, x: Arc<FdModule>) -> Result<Induced> {
    let n = tp.nil_index();
    let f = tp.base().field();
    let m = tp.bimodule();
    let mut components: Vec<Arc<FdModule>> = vec![x.clone()];
    let mut spaces: Vec<TensorSpace> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let t = tensor_bimodule_module(m, &components[i])?;
        if i == n {
            assert_eq!(
                t.module.dim(),
                0,
                "M^(x)(N+1) (x) X must vanish for an N-nilpotent bimodule"
            );
            spaces.push(t.space);
            break;
        }
        components.push(Arc::new(t.module));
        spaces.push(t.space);
    }
    let parts: Vec<&FdModule> = components.iter().map(|c| c.as_ref()).collect();
    let (w, offsets) = FdModule::direct_sum(&parts)?;
    let w = Arc::new(w);
    // quotient M (x) W and the blockwise shift map u
    let tw = tensor_bimodule_module(m, &w)?;
    let expected: usize = (1..=n).map(|i| components[i].dim()).sum();
    assert_eq!(tw.module.dim(), expected, "M (x) Ind(X) block dimensions");
    let dmw_plain = m.dim() * w.dim();
    let mut u_plain = Mat::zeros(f, w.dim(), dmw_plain);
    for a in 0..m.dim() {
        for (i, comp) in components.iter().enumerate() {
            if i == n {
                continue; // top block maps to zero
            }
            let di = comp.dim();
            for c in 0..di {
                let col_plain = a * w.dim() + offsets[i] + c;
                let target = spaces[i].surj.col(a * di + c);
                for (l, &v) in target.iter().enumerate() {
                    if v != 0 {
                        u_plain.set(offsets[i + 1] + l, col_plain, v);
                    }
                }
            }
        }
    }
    let u = u_plain.mul(&tw.space.sect).expect("shape");
    let back = u.mul(&tw.space.surj).expect("shape");
    assert_eq!(back, u_plain, "shift map must respect balancing");
    let pair = PairModule::from_tensor(w, tw.module, tw.space, u)?;
    Ok(Induced {
        pair,
        components,
        spaces,
        offsets,
    })
}

/// Realize a pair as an honest module over the tensor ring: degree-one basis
/// elements act through `u`, higher degrees through the section-decomposed
/// iterates.
pub fn pair_to_flat(tp: &TensorPowers, ring: &Arc<Algebra>, p: &PairModule) -> FdModule {
    let n = tp.nil_index();
    let dx = p.x.dim();
    let f = tp.base().field();
    let dm = tp.power_dim(1);
    // levels[i][t]: action of the degree-i basis element t
    let mut levels: Vec<Vec<Mat>> = Vec::with_capacity(n + 1);
    levels.push(p.x.action().to_vec());
    if n >= 1 {
        let mut deg1 = Vec::with_capacity(dm);
        for a in 0..dm {
            let mut slice = Mat::zeros(f, p.mx.dim(), dx);
            for c in 0..dx {
                let col = p.mx_space.surj.col(a * dx + c);
                for (l, &v) in col.iter().enumerate() {
                    slice.set(l, c, v);
                }
            }
            deg1.push(p.u.mul(&slice).expect("shape"));
        }
        levels.push(deg1);
    }
    for i in 2..=n {
        let d_prev = tp.power_dim(i - 1);
        let sect = tp.power_section(i);
        let mut level = Vec::with_capacity(tp.power_dim(i));
        for t in 0..tp.power_dim(i) {
            let dec = sect.col(t);
            let mut acc = Mat::zeros(f, dx, dx);
            for (idx, &gamma) in dec.iter().enumerate() {
                if gamma == 0 {
                    continue;
                }
                let a = idx / d_prev;
                let c = idx % d_prev;
                let prod = levels[1][a].mul(&levels[i - 1][c]).expect("shape");
                acc = acc.add(&prod.scale(gamma)).expect("shape");
            }
            level.push(acc);
        }
        levels.push(level);
    }
    let action: Vec<Mat> = levels.into_iter().flatten().collect();
    assert_eq!(action.len(), ring.dim());
    FdModule::from_parts(ring.clone(), dx, action)
}

/// Read the pair presentation back off a tensor-ring module: restrict to
/// degree zero and take the degree-one action as the structure map.
pub fn flat_to_pair(tp: &TensorPowers, ring: &Arc<Algebra>, z: &FdModule) -> Result<PairModule> {
    if z.algebra().as_ref() != ring.as_ref() {
        return Err(Error::AlgebraMismatch(
            "module does not live over the given tensor ring".into(),
        ));
    }
    let f = tp.base().field();
    let dz = z.dim();
    let x_action: Vec<Mat> = (0..tp.base().dim()).map(|r| z.action()[r].clone()).collect();
    let x = Arc::new(FdModule::from_parts(tp.base().clone(), dz, x_action));
    let t = tensor_bimodule_module(tp.bimodule(), &x)?;
    let dm = tp.power_dim(1);
    let o1 = tp.offset(1);
    let mut u_plain = Mat::zeros(f, dz, dm * dz);
    for a in 0..dm {
        let act = &z.action()[o1 + a];
        for c in 0..dz {
            for l in 0..dz {
                let v = act.get(l, c);
                if v != 0 {
                    u_plain.set(l, a * dz + c, v);
                }
            }
        }
    }
    let u = u_plain.mul(&t.space.sect).expect("shape");
    let back = u.mul(&t.space.surj).expect("shape");
    assert_eq!(back, u_plain, "degree-one action must factor over M (x) X");
    PairModule::from_tensor(x, t.module, t.space, u)
}

use crate::algebra::Algebra;

/// The canonical two-term presentation
/// `0 -> Ind(M (x) X) --phi--> Ind(X) --eps--> (X, u) -> 0`
/// with both maps as validated tensor-ring homomorphisms between the flat
/// realizations. Exactness is asserted at all three nodes.
#[derive(Clone, Debug)]
pub struct CanonicalPresentation {
    pub ind_x: Induced,
    pub ind_mx: Induced,
    pub phi: ModHom,
    pub eps: ModHom,
}

pub fn canonical_presentation(
    tp: &TensorPowers,
    ring: &Arc<Algebra>,
    p: &PairModule,
) -> Result<CanonicalPresentation> {
    let n = tp.nil_index();
    let f = tp.base().field();
    let dm = tp.bimodule().dim();
    let ind_x = ind(tp, p.x.clone())?;
    let ind_mx = ind(tp, p.mx.clone())?;
    // the components of Ind(M (x) X) coincide with the shifted components of
    // Ind(X) because both iterate the same deterministic tensor constructor
    for i in 0..n {
        assert_eq!(
            ind_mx.components[i].dim(),
            ind_x.components[i + 1].dim(),
            "component alignment at degree {i}"
        );
    }
    // diagonal blocks: iterated tensors of u
    let mut diag: Vec<Mat> = vec![p.u.clone()];
    for i in 1..n {
        let next = tensor_map_right_factor(dm, &ind_mx.spaces[i - 1], &ind_x.spaces[i - 1], &diag[i - 1]);
        diag.push(next);
    }
    let dim_src = ind_mx.pair.dim();
    let dim_dst = ind_x.pair.dim();
    let mut phi = Mat::zeros(f, dim_dst, dim_src);
    for i in 0..n {
        let src_off = ind_mx.offsets[i];
        let d_src = ind_mx.components[i].dim();
        // identity into block i+1
        for c in 0..d_src {
            phi.set(ind_x.offsets[i + 1] + c, src_off + c, 1);
        }
        // minus the tensored structure map into block i
        for c in 0..d_src {
            for l in 0..ind_x.components[i].dim() {
                let v = diag[i].get(l, c);
                if v != 0 {
                    phi.set(ind_x.offsets[i] + l, src_off + c, f.neg(v));
                }
            }
        }
    }
    // counit: eps_0 = id, eps_i = u o (M (x) eps_{i-1})
    let mut eps_blocks: Vec<Mat> = vec![Mat::identity(f, p.x.dim())];
    for i in 1..=n {
        let lifted = tensor_map_right_factor(
            dm,
            &ind_x.spaces[i - 1],
            &ind_x.spaces[0],
            &eps_blocks[i - 1],
        );
        eps_blocks.push(p.u.mul(&lifted).expect("shape"));
    }
    let mut eps = Mat::zeros(f, p.x.dim(), dim_dst);
    for (i, block) in eps_blocks.iter().enumerate() {
        for c in 0..ind_x.components[i].dim() {
            for l in 0..p.x.dim() {
                let v = block.get(l, c);
                if v != 0 {
                    eps.set(l, ind_x.offsets[i] + c, v);
                }
            }
        }
    }
    // exactness of 0 -> Ind(MX) -> Ind(X) -> X -> 0 at every node
    assert_eq!(phi.rank(), dim_src, "phi must be injective");
    assert_eq!(eps.rank(), p.x.dim(), "eps must be surjective");
    assert!(eps.mul(&phi).expect("shape").is_zero(), "eps o phi = 0");
    assert_eq!(
        phi.rank(),
        dim_dst - eps.rank(),
        "image of phi must be the kernel of eps"
    );
    // both maps are tensor-ring homomorphisms between the flat forms
    let flat_src = Arc::new(pair_to_flat(tp, ring, &ind_mx.pair));
    let flat_dst = Arc::new(pair_to_flat(tp, ring, &ind_x.pair));
    let flat_p = Arc::new(pair_to_flat(tp, ring, p));
    let phi = ModHom::new(flat_src, flat_dst.clone(), phi)?;
    let eps = ModHom::new(flat_dst, flat_p, eps)?;
    Ok(CanonicalPresentation {
        ind_x,
        ind_mx,
        phi,
        eps,
    })
}

/// `Ind(f)` for a base-module homomorphism `f: X -> Y`: the block-diagonal
/// matrix of iterated tensor lifts between the induced modules.
pub fn ind_hom(tp: &TensorPowers, src: &Induced, dst: &Induced, f: &Mat) -> Mat {
    let fq = tp.base().field();
    let n = tp.nil_index();
    let dm = tp.bimodule().dim();
    let mut blocks: Vec<Mat> = vec![f.clone()];
    for i in 1..=n {
        let lifted =
            tensor_map_right_factor(dm, &src.spaces[i - 1], &dst.spaces[i - 1], &blocks[i - 1]);
        blocks.push(lifted);
    }
    let mut out = Mat::zeros(fq, dst.pair.dim(), src.pair.dim());
    for (i, b) in blocks.iter().enumerate() {
        for c in 0..src.components[i].dim() {
            for l in 0..dst.components[i].dim() {
                let v = b.get(l, c);
                if v != 0 {
                    out.set(dst.offsets[i] + l, src.offsets[i] + c, v);
                }
            }
        }
    }
    out
}

/// Membership certificate for the monomorphism category over the base ring.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct PhiVerdict {
    pub u_mono: bool,
    pub cok_verdict: Tri,
    pub verdict: Tri,
}

/// `(X, u)` lies in `Phi(class)` when `u` is injective and `cok(u)` belongs
/// to the class over the base ring.
pub fn phi_membership(
    p: &PairModule,
    class: ModuleClass,
    base_cert: &IgCertificate,
    max_len: usize,
) -> Result<PhiVerdict> {
    let u_mono = p.is_u_mono();
    let (cok, _) = cok_functor(p);
    let cok_verdict = match class {
        ModuleClass::Projective => Tri::from_bool(is_projective_module(&cok)?),
        ModuleClass::Injective => Tri::from_bool(is_injective_module(&cok)?),
        ModuleClass::Flat => Tri::from_bool(is_flat_module(&cok)?),
        ModuleClass::GorensteinProjective => is_gorenstein_projective(&cok, base_cert, max_len)?,
        ModuleClass::GorensteinFlat => is_gorenstein_flat(&cok, base_cert, max_len)?,
        ModuleClass::GorensteinInjective => {
            return Err(Error::PreconditionViolated(
                "Gorenstein injectivity is a right-module test; use the copair route".into(),
            ))
        }
    };
    let verdict = if !u_mono {
        Tri::False
    } else {
        cok_verdict
    };
    Ok(PhiVerdict {
        u_mono,
        cok_verdict,
        verdict,
    })
}

/// Outcome of classifying one pair by the selected route(s).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairClassification {
    pub class: ModuleClass,
    pub method: Method,
    pub phi: Option<PhiVerdict>,
    pub direct: Option<Tri>,
    /// `Some(false)` is a hard counterexample: both routes conclusive and
    /// opposite.
    pub agree: Option<bool>,
    pub verdict: Tri,
}

/// Direct classification of the flat realization over the tensor ring.
pub fn direct_verdict(
    ctx: &TensorRingCtx,
    flat: &Arc<FdModule>,
    class: ModuleClass,
) -> Result<Tri> {
    Ok(match class {
        ModuleClass::Projective => Tri::from_bool(is_projective_module(flat)?),
        ModuleClass::Injective => Tri::from_bool(is_injective_module(flat)?),
        ModuleClass::Flat => Tri::from_bool(is_flat_module(flat)?),
        ModuleClass::GorensteinProjective => {
            is_gorenstein_projective(flat, &ctx.ring_cert, ctx.max_len)?
        }
        ModuleClass::GorensteinFlat => is_gorenstein_flat(flat, &ctx.ring_cert, ctx.max_len)?,
        ModuleClass::GorensteinInjective => {
            return Err(Error::PreconditionViolated(
                "Gorenstein injectivity is a right-module test; use the copair route".into(),
            ))
        }
    })
}

pub fn classify_pair(
    ctx: &TensorRingCtx,
    p: &PairModule,
    class: ModuleClass,
    method: Method,
) -> Result<PairClassification> {
    let phi = match method {
        Method::Phi | Method::Both => {
            Some(phi_membership(p, class, &ctx.base_cert, ctx.max_len)?)
        }
        Method::Direct => None,
    };
    let direct = match method {
        Method::Direct | Method::Both => {
            let flat = Arc::new(pair_to_flat(&ctx.tp, &ctx.ring, p));
            Some(direct_verdict(ctx, &flat, class)?)
        }
        Method::Phi => None,
    };
    let (agree, verdict) = combine_routes(phi.map(|v| v.verdict), direct);
    Ok(PairClassification {
        class,
        method,
        phi,
        direct,
        agree,
        verdict,
    })
}

/// Combine two optional route verdicts into an agreement flag and an overall
/// verdict. Conflicting conclusive routes yield `(Some(false), Unknown)`;
/// any Unknown downgrades the verdict.
pub(crate) fn combine_routes(a: Option<Tri>, b: Option<Tri>) -> (Option<bool>, Tri) {
    match (a, b) {
        (Some(x), Some(y)) => match (x, y) {
            (Tri::Unknown, _) | (_, Tri::Unknown) => (None, Tri::Unknown),
            (x, y) if x == y => (Some(true), x),
            _ => (Some(false), Tri::Unknown),
        },
        (Some(x), None) | (None, Some(x)) => (None, x),
        (None, None) => (None, Tri::Unknown),
    }
}
