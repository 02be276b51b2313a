//! Ext and Tor dimensions from minimal resolutions, projective/injective
//! dimension bounds, and the homological classifiers.
//!
//! Gorenstein projectivity is decided through the Iwanaga-Gorenstein
//! criterion: over an algebra of finite self-injective dimension `g` on both
//! sides, a module is Gorenstein projective exactly when `Ext^i(X, A) = 0`
//! for `1 <= i <= g`. Every bounded search reports `Unknown` instead of
//! guessing when the bound truncates.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::linalg::Mat;
use crate::module::FdModule;
use crate::resolution::{minimal_resolution, projective_cover, ProjectiveModule, Resolution};
use crate::Result;

/// Tri-state verdict; bounded checks never masquerade as proofs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }

    pub fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::False, _) | (_, Tri::False) => Tri::False,
            (Tri::Unknown, _) | (_, Tri::Unknown) => Tri::Unknown,
            _ => Tri::True,
        }
    }
}

/// Outcome of a bounded dimension search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DimBound {
    Finite(usize),
    AtLeast(usize),
}

impl DimBound {
    pub fn finite(&self) -> Option<usize> {
        match self {
            DimBound::Finite(n) => Some(*n),
            DimBound::AtLeast(_) => None,
        }
    }
}

/// Self-injective dimension data of an algebra on both sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IgCertificate {
    pub left: DimBound,
    pub right: DimBound,
}

impl IgCertificate {
    /// The common finite bound, when conclusive. Both sides of an
    /// Iwanaga-Gorenstein algebra agree; that identity is asserted.
    pub fn finite_bound(&self) -> Option<usize> {
        match (self.left.finite(), self.right.finite()) {
            (Some(l), Some(r)) => {
                assert_eq!(
                    l, r,
                    "finite left and right self-injective dimensions must agree"
                );
                Some(l)
            }
            _ => None,
        }
    }
}

/// Hom(P, Y) for a cover P = (+)_r A e_{s_r}: coordinates are blockwise
/// elements of the slices e_{s_r} Y.
struct CoverHoms {
    slice_bases: Vec<Mat>,
    offsets: Vec<usize>,
    total: usize,
    /// Per summand, the action of each local basis element on Y.
    applied: Vec<Vec<Mat>>,
}

fn cover_homs(p: &ProjectiveModule, y: &FdModule) -> CoverHoms {
    let mut slice_bases = Vec::with_capacity(p.summands.len());
    let mut offsets = Vec::with_capacity(p.summands.len());
    let mut applied = Vec::with_capacity(p.summands.len());
    let mut total = 0usize;
    for s in &p.summands {
        let e = &s.module.algebra().idempotents()[s.idem_index];
        let ey = y.action_of(e).column_space_basis();
        offsets.push(total);
        total += ey.cols();
        slice_bases.push(ey);
        let rho: Vec<Mat> = (0..s.basis.cols())
            .map(|j| y.action_of(&s.basis.col(j)))
            .collect();
        applied.push(rho);
    }
    CoverHoms {
        slice_bases,
        offsets,
        total,
        applied,
    }
}

impl CoverHoms {
    /// The hom matrix `P -> Y` with the given blockwise coordinates.
    fn to_matrix(&self, p: &ProjectiveModule, y: &FdModule, coords: &[u64]) -> Mat {
        let field = y.algebra().field();
        let mut f = Mat::zeros(field, y.dim(), p.dim());
        for (r, base) in self.slice_bases.iter().enumerate() {
            let local = &coords[self.offsets[r]..self.offsets[r] + base.cols()];
            if local.iter().all(|&c| c == 0) {
                continue;
            }
            let target = base
                .mul(&Mat::new(field, base.cols(), 1, local.to_vec()).expect("coords"))
                .expect("shape");
            for (j, rho) in self.applied[r].iter().enumerate() {
                let img = rho.mul(&target).expect("shape");
                for row in 0..y.dim() {
                    f.set(row, p.offsets[r] + j, img.get(row, 0));
                }
            }
        }
        f
    }

    /// Blockwise coordinates of a hom matrix.
    fn coords_of(&self, p: &ProjectiveModule, f: &Mat) -> Vec<u64> {
        let field = f.field();
        let mut coords = vec![0u64; self.total];
        for (r, base) in self.slice_bases.iter().enumerate() {
            let gen = p.generator_vec(r);
            let img = f.apply(&gen).expect("shape");
            let rhs = Mat::new(field, img.len(), 1, img).expect("coords");
            let sol = base.solve(&rhs).expect("image of a generator lies in e_s Y");
            for (k, &v) in sol.col(0).iter().enumerate() {
                coords[self.offsets[r] + k] = v;
            }
        }
        coords
    }
}

/// Dimensions of `Ext^n(X, Y)` for `0 <= n <= max_n`; `None` marks degrees
/// past the truncation point of the bounded resolution.
pub fn ext_dims(
    x: &Arc<FdModule>,
    y: &FdModule,
    max_n: usize,
    max_len: usize,
) -> Result<Vec<Option<usize>>> {
    let res = minimal_resolution(x, max_len)?;
    Ok(ext_dims_from(&res, y, max_n))
}

fn ext_dims_from(res: &Resolution, y: &FdModule, max_n: usize) -> Vec<Option<usize>> {
    let len = res.length();
    let homs: Vec<CoverHoms> = res.covers.iter().map(|p| cover_homs(p, y)).collect();
    // delta_i : Hom(P_i, Y) -> Hom(P_{i+1}, Y), available for i < len
    let mut deltas: Vec<Mat> = Vec::new();
    let field = y.algebra().field();
    for i in 0..len {
        let src = &homs[i];
        let dst = &homs[i + 1];
        let d = &res.differentials[i];
        let mut m = Mat::zeros(field, dst.total, src.total);
        for t in 0..src.total {
            let mut unit = vec![0u64; src.total];
            unit[t] = 1;
            let f = src.to_matrix(&res.covers[i], y, &unit);
            let g = f.mul(d.matrix()).expect("shape");
            let coords = dst.coords_of(&res.covers[i + 1], &g);
            for (row, &v) in coords.iter().enumerate() {
                m.set(row, t, v);
            }
        }
        deltas.push(m);
    }
    let mut out = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        if n > len || (n == len && res.truncated) {
            // complete resolutions vanish beyond their length
            out.push(if res.complete { Some(0) } else { None });
            continue;
        }
        // delta_n is zero past the end of a complete resolution
        let kernel_dim = if n == len {
            homs[n].total
        } else {
            homs[n].total - deltas[n].rank()
        };
        let image_prev = if n == 0 { 0 } else { deltas[n - 1].rank() };
        out.push(Some(kernel_dim - image_prev));
    }
    out
}

pub fn ext_dim(x: &Arc<FdModule>, y: &FdModule, n: usize, max_len: usize) -> Result<Option<usize>> {
    Ok(ext_dims(x, y, n, max_len)?.pop().expect("requested degree"))
}

/// Dimensions of `Tor_n(Y, X)` for a right module `Y` (left module over the
/// opposite algebra), computed by tensoring the minimal resolution of `X`.
pub fn tor_dims(
    y: &FdModule,
    x: &Arc<FdModule>,
    max_n: usize,
    max_len: usize,
) -> Result<Vec<Option<usize>>> {
    let res = minimal_resolution(x, max_len)?;
    Ok(tor_dims_from(&res, y, max_n))
}

fn tor_dims_from(res: &Resolution, y: &FdModule, max_n: usize) -> Vec<Option<usize>> {
    let len = res.length();
    let field = y.algebra().field();
    // Y (x) P_i = (+)_r Y e_{s_r}
    struct Slice {
        bases: Vec<Mat>,
        offsets: Vec<usize>,
        total: usize,
    }
    let slices: Vec<Slice> = res
        .covers
        .iter()
        .map(|p| {
            let mut bases = Vec::new();
            let mut offsets = Vec::new();
            let mut total = 0;
            for s in &p.summands {
                let e = &s.module.algebra().idempotents()[s.idem_index];
                let ye = y.action_of(e).column_space_basis();
                offsets.push(total);
                total += ye.cols();
                bases.push(ye);
            }
            Slice {
                bases,
                offsets,
                total,
            }
        })
        .collect();
    // boundary_i : Y (x) P_{i+1} -> Y (x) P_i
    let mut boundaries: Vec<Mat> = Vec::new();
    for i in 0..len {
        let src = &slices[i + 1];
        let dst = &slices[i];
        let d = &res.differentials[i];
        let p_src = &res.covers[i + 1];
        let p_dst = &res.covers[i];
        let mut m = Mat::zeros(field, dst.total, src.total);
        for (r, base) in src.bases.iter().enumerate() {
            // d(gen_r) decomposed over destination summands
            let w = d.matrix().apply(&p_src.generator_vec(r)).expect("shape");
            for (q, qsum) in p_dst.summands.iter().enumerate() {
                let local = &w[p_dst.offsets[q]..p_dst.offsets[q] + qsum.module.dim()];
                if local.iter().all(|&v| v == 0) {
                    continue;
                }
                let alpha = qsum
                    .basis
                    .mul(&Mat::new(field, local.len(), 1, local.to_vec()).expect("coords"))
                    .expect("shape");
                // y (x) gen_r |-> (y . alpha) (x) gen_q
                let act = y.action_of(&alpha.col(0));
                for c in 0..base.cols() {
                    let yv = base.col(c);
                    let img = act.apply(&yv).expect("shape");
                    let rhs = Mat::new(field, img.len(), 1, img).expect("coords");
                    let sol = dst.bases[q]
                        .solve(&rhs)
                        .expect("y.alpha lies in Y e_s");
                    for (k, &v) in sol.col(0).iter().enumerate() {
                        let row = dst.offsets[q] + k;
                        let cur = m.get(row, src.offsets[r] + c);
                        m.set(row, src.offsets[r] + c, field.add(cur, v));
                    }
                }
            }
        }
        boundaries.push(m);
    }
    let mut out = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        if n > len || (n == len && res.truncated) {
            out.push(if res.complete { Some(0) } else { None });
            continue;
        }
        let kernel_dim = if n == 0 {
            slices[0].total
        } else {
            slices[n].total - boundaries[n - 1].rank()
        };
        let image_next = if n == len {
            0
        } else {
            boundaries[n].rank()
        };
        out.push(Some(kernel_dim - image_next));
    }
    out
}

pub fn tor_dim(y: &FdModule, x: &Arc<FdModule>, n: usize, max_len: usize) -> Result<Option<usize>> {
    Ok(tor_dims(y, x, n, max_len)?.pop().expect("requested degree"))
}

/// Projective dimension from the minimal resolution; exact because covers
/// are minimal.
pub fn pd_bound(x: &Arc<FdModule>, max_len: usize) -> Result<DimBound> {
    let res = minimal_resolution(x, max_len)?;
    if res.complete {
        Ok(DimBound::Finite(res.length()))
    } else {
        Ok(DimBound::AtLeast(max_len))
    }
}

/// Injective dimension via duality: `id(X) = pd` of the field dual over the
/// opposite algebra.
pub fn id_bound(x: &FdModule, max_len: usize) -> Result<DimBound> {
    let dual = Arc::new(x.kdual());
    pd_bound(&dual, max_len)
}

/// Self-injective dimensions of the algebra on both sides.
pub fn ig_data(a: &Arc<Algebra>, max_len: usize) -> Result<IgCertificate> {
    let left_reg = FdModule::regular_left(a);
    let left = id_bound(&left_reg, max_len)?;
    let op = Arc::new(a.opposite());
    let right_reg = FdModule::regular_left(&op);
    let right = id_bound(&right_reg, max_len)?;
    Ok(IgCertificate { left, right })
}

pub fn is_projective_module(x: &Arc<FdModule>) -> Result<bool> {
    let (_, epi) = projective_cover(x)?;
    Ok(epi.kernel_mod().0.dim() == 0)
}

pub fn is_injective_module(x: &Arc<FdModule>) -> Result<bool> {
    let dual = Arc::new(x.kdual());
    is_projective_module(&dual)
}

/// Finite-dimensional modules over a finite-dimensional algebra are flat
/// exactly when they are projective.
pub fn is_flat_module(x: &Arc<FdModule>) -> Result<bool> {
    is_projective_module(x)
}

/// Iwanaga-Gorenstein test: `Ext^i(X, A) = 0` for `1 <= i <= g`.
pub fn is_gorenstein_projective(
    x: &Arc<FdModule>,
    cert: &IgCertificate,
    max_len: usize,
) -> Result<Tri> {
    let Some(g) = cert.finite_bound() else {
        return Ok(Tri::Unknown);
    };
    if g == 0 {
        // self-injective algebra: every module is Gorenstein projective
        return Ok(Tri::True);
    }
    let reg = FdModule::regular_left(x.algebra());
    let dims = ext_dims(x, &reg, g, max_len.max(g + 1))?;
    for d in dims.iter().skip(1) {
        match d {
            None => return Ok(Tri::Unknown),
            Some(0) => {}
            Some(_) => return Ok(Tri::False),
        }
    }
    Ok(Tri::True)
}

/// Gorenstein injectivity of a right module (left module over the opposite):
/// the field dual must be Gorenstein projective over the opposite of its
/// algebra.
pub fn is_gorenstein_injective(
    y: &FdModule,
    cert: &IgCertificate,
    max_len: usize,
) -> Result<Tri> {
    let dual = Arc::new(y.kdual());
    is_gorenstein_projective(&dual, cert, max_len)
}

/// Finite-dimensional Gorenstein flat coincides with Gorenstein projective
/// over Artin algebras; reports carry the flag for this identification.
pub fn is_gorenstein_flat(
    x: &Arc<FdModule>,
    cert: &IgCertificate,
    max_len: usize,
) -> Result<Tri> {
    is_gorenstein_projective(x, cert, max_len)
}
