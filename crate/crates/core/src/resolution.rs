//! Projective covers and minimal projective resolutions.
//!
//! Covers are direct sums of the indecomposable projectives `A e_s` with the
//! summand structure retained, so hom spaces out of resolution terms reduce
//! to idempotent slices `e_s Y` instead of intertwiner solves.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::linalg::Mat;
use crate::module::{FdModule, ModHom};
use crate::Result;

/// An indecomposable projective `A e_s` with its chosen basis inside `A` and
/// the coordinates of the generator `e_s`.
#[derive(Clone, Debug)]
pub struct IndecProjective {
    pub idem_index: usize,
    pub module: Arc<FdModule>,
    /// Basis of `A e_s` as columns in algebra coordinates.
    pub basis: Mat,
    /// Coordinates of the generator `e_s` in that basis.
    pub generator: Vec<u64>,
}

/// Build `A e_s` as the image of right multiplication by the idempotent.
pub fn indec_projective(algebra: &Arc<Algebra>, s: usize) -> IndecProjective {
    let e = &algebra.idempotents()[s];
    let rm = algebra.element_right_matrix(e);
    let basis = rm.column_space_basis();
    let action = (0..algebra.dim())
        .map(|i| {
            let img = algebra.left_mult_matrix(i).mul(&basis).expect("shape");
            basis.solve(&img).expect("A e_s is a left submodule")
        })
        .collect();
    let module = Arc::new(FdModule::from_parts(
        algebra.clone(),
        basis.cols(),
        action,
    ));
    let e_col = Mat::column(algebra.field(), e).expect("coords");
    let generator = basis
        .solve(&e_col)
        .expect("e_s lies in A e_s")
        .col(0);
    IndecProjective {
        idem_index: s,
        module,
        basis,
        generator,
    }
}

/// A finite direct sum of indecomposable projectives with blockwise
/// coordinates.
#[derive(Clone, Debug)]
pub struct ProjectiveModule {
    pub module: Arc<FdModule>,
    pub summands: Vec<IndecProjective>,
    pub offsets: Vec<usize>,
}

impl ProjectiveModule {
    pub fn direct_sum(algebra: &Arc<Algebra>, idem_indices: &[usize]) -> Result<Self> {
        let summands: Vec<IndecProjective> = idem_indices
            .iter()
            .map(|&s| indec_projective(algebra, s))
            .collect();
        if summands.is_empty() {
            return Ok(ProjectiveModule {
                module: Arc::new(FdModule::zero(algebra.clone())),
                summands,
                offsets: vec![],
            });
        }
        let parts: Vec<&FdModule> = summands.iter().map(|p| p.module.as_ref()).collect();
        let (module, offsets) = FdModule::direct_sum(&parts)?;
        Ok(ProjectiveModule {
            module: Arc::new(module),
            summands,
            offsets,
        })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Generator of summand `r` in the coordinates of the direct sum.
    pub fn generator_vec(&self, r: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.module.dim()];
        for (k, &c) in self.summands[r].generator.iter().enumerate() {
            v[self.offsets[r] + k] = c;
        }
        v
    }
}

/// The radical submodule `rad X` as a column basis.
pub fn radical_subspace(x: &FdModule) -> Mat {
    let a = x.algebra();
    let mut cols = Mat::zeros(a.field(), x.dim(), 0);
    for r in a.rad_basis() {
        cols = cols.hstack(&x.action_of(r)).expect("shape");
    }
    cols.column_space_basis()
}

/// `X / rad X` with its projection.
pub fn top_quotient(x: &Arc<FdModule>) -> (Arc<FdModule>, ModHom) {
    let rad = radical_subspace(x);
    let q = Mat::quotient_data(x.algebra().field(), x.dim(), &rad).expect("shape");
    let action = x
        .action()
        .iter()
        .map(|rho| q.proj.mul(rho).and_then(|m| m.mul(&q.section)).expect("shape"))
        .collect();
    let top = Arc::new(FdModule::from_parts(
        x.algebra().clone(),
        q.proj.rows(),
        action,
    ));
    let proj = ModHom::from_parts(x.clone(), top.clone(), q.proj);
    (top, proj)
}

/// The simple module attached to idempotent `s`: the top of `A e_s`.
pub fn simple_module(algebra: &Arc<Algebra>, s: usize) -> Arc<FdModule> {
    let p = indec_projective(algebra, s);
    top_quotient(&p.module).0
}

/// Projective cover: `P = (+)_s (A e_s)^{m_s}` with
/// `m_s = dim e_s (X / rad X)` and a surjection whose kernel lies in
/// `rad P` (asserted).
pub fn projective_cover(x: &Arc<FdModule>) -> Result<(ProjectiveModule, ModHom)> {
    let a = x.algebra().clone();
    if x.dim() == 0 {
        let p = ProjectiveModule::direct_sum(&a, &[])?;
        let epi = ModHom::from_parts(p.module.clone(), x.clone(), Mat::zeros(a.field(), 0, 0));
        return Ok((p, epi));
    }
    let (_, top_proj) = top_quotient(x);
    let pi = top_proj.matrix();
    let mut idem_indices = Vec::new();
    let mut gens: Vec<Vec<u64>> = Vec::new();
    for (s, e) in a.idempotents().iter().enumerate() {
        let es = x.action_of(e);
        let projected = pi.mul(&es).expect("shape");
        let piv = projected.rref().pivots;
        for &c in &piv {
            idem_indices.push(s);
            gens.push(es.col(c));
        }
    }
    let p = ProjectiveModule::direct_sum(&a, &idem_indices)?;
    // epi on summand r: local basis column (an element of A) applied to the
    // chosen generator image
    let mut epi = Mat::zeros(a.field(), x.dim(), p.dim());
    for (r, summand) in p.summands.iter().enumerate() {
        let target = &gens[r];
        for j in 0..summand.basis.cols() {
            let elt = summand.basis.col(j);
            let img = x.action_of(&elt).apply(target).expect("shape");
            for (row, &v) in img.iter().enumerate() {
                epi.set(row, p.offsets[r] + j, v);
            }
        }
    }
    assert_eq!(epi.rank(), x.dim(), "projective cover must be surjective");
    // minimality: kernel of the cover lies in rad P
    let ker = epi.kernel_basis();
    let rad_p = radical_subspace(&p.module);
    assert!(
        Mat::contains_columns(&rad_p, &ker),
        "cover kernel escapes the radical; cover is not minimal"
    );
    let epi = ModHom::from_parts(p.module.clone(), x.clone(), epi);
    Ok((p, epi))
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> X -> 0`, truncated
/// at `max_len` covers when the syzygies do not vanish.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub target: Arc<FdModule>,
    pub covers: Vec<ProjectiveModule>,
    pub augmentation: ModHom,
    /// `differentials[i]` is `d_{i+1}: P_{i+1} -> P_i`.
    pub differentials: Vec<ModHom>,
    pub complete: bool,
    pub truncated: bool,
}

impl Resolution {
    /// Number of cover terms minus one.
    pub fn length(&self) -> usize {
        self.covers.len() - 1
    }
}

pub fn minimal_resolution(x: &Arc<FdModule>, max_len: usize) -> Result<Resolution> {
    let (p0, epi0) = projective_cover(x)?;
    let mut covers = vec![p0];
    let mut differentials: Vec<ModHom> = Vec::new();
    let (mut syzygy, mut incl) = epi0.kernel_mod();
    let augmentation = epi0;
    let mut complete = syzygy.dim() == 0;
    while !complete && covers.len() <= max_len {
        let (p, epi) = projective_cover(&syzygy)?;
        let d = incl.compose(&epi)?;
        differentials.push(d);
        let (next, next_incl) = epi.kernel_mod();
        covers.push(p);
        syzygy = next;
        incl = next_incl;
        complete = syzygy.dim() == 0;
    }
    Ok(Resolution {
        target: x.clone(),
        covers,
        augmentation,
        differentials,
        complete,
        truncated: !complete,
    })
}

/// First syzygy of a module (kernel of its projective cover).
pub fn syzygy(x: &Arc<FdModule>) -> Result<Arc<FdModule>> {
    let (_, epi) = projective_cover(x)?;
    Ok(epi.kernel_mod().0)
}
