//! Tensor products over an algebra, computed as explicit quotients of the
//! plain tensor space with a retained surjection and section. The chosen
//! basis (non-pivot coordinates of the balancing subspace) makes every
//! canonical map downstream a literal matrix.

use crate::algebra::Algebra;
use crate::linalg::{FieldSpec, Mat};
use crate::module::{is_opposite_of, Bimodule, FdModule};
use crate::{Error, Result};

/// A computed balanced tensor space: `surj` maps the plain tensor space onto
/// the quotient, `sect` is a fixed section of it.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    pub dim: usize,
    pub surj: Mat,
    pub sect: Mat,
}

/// Quotient of `k^{dim_l * dim_r}` by the balancing relations
/// `(x.b (x) y) - (x (x) b.y)` over the given algebra. `right_on_left[k]`
/// is the right action of basis element `k` on the left factor and
/// `left_on_right[k]` the left action on the right factor.
///
/// Only generator relations are spanned: balancing vectors for products
/// decompose into generator balancing vectors, so the span is unchanged.
pub fn balanced_tensor(
    field: FieldSpec,
    algebra: &Algebra,
    dim_l: usize,
    dim_r: usize,
    right_on_left: &[Mat],
    left_on_right: &[Mat],
) -> Result<TensorSpace> {
    let n = dim_l * dim_r;
    let act = |mats: &[Mat], coords: &[u64], d: usize| -> Mat {
        let mut m = Mat::zeros(field, d, d);
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                m = m.add(&mats[i].scale(c)).expect("shape");
            }
        }
        m
    };
    let gens = algebra.generators();
    let mut balancing = Mat::zeros(field, n, gens.len() * n);
    for (gi, g) in gens.iter().enumerate() {
        let rg = act(right_on_left, g, dim_l);
        let lg = act(left_on_right, g, dim_r);
        for a in 0..dim_l {
            for c in 0..dim_r {
                let col = gi * n + a * dim_r + c;
                // (x_a . g) (x) y_c
                for r in 0..dim_l {
                    let v = rg.get(r, a);
                    if v != 0 {
                        balancing.set(r * dim_r + c, col, v);
                    }
                }
                // - x_a (x) (g . y_c)
                for s in 0..dim_r {
                    let v = lg.get(s, c);
                    if v != 0 {
                        let row = a * dim_r + s;
                        let cur = balancing.get(row, col);
                        balancing.set(row, col, field.sub(cur, v));
                    }
                }
            }
        }
    }
    let q = Mat::quotient_data(field, n, &balancing)?;
    Ok(TensorSpace {
        dim: q.proj.rows(),
        surj: q.proj,
        sect: q.section,
    })
}

/// `M (x)_R X` for a bimodule `M` and a left module `X` over the bimodule's
/// right algebra; the result is a left module over the bimodule's left
/// algebra.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub module: FdModule,
    pub space: TensorSpace,
}

pub fn tensor_bimodule_module(m: &Bimodule, x: &FdModule) -> Result<TensorProduct> {
    if m.right_algebra().as_ref() != x.algebra().as_ref() {
        return Err(Error::AlgebraMismatch(
            "tensor: bimodule right algebra differs from the module algebra".into(),
        ));
    }
    let field = x.algebra().field();
    let space = balanced_tensor(
        field,
        m.right_algebra(),
        m.dim(),
        x.dim(),
        m.right_action(),
        x.action(),
    )?;
    let la = m.left_algebra().clone();
    let idx = Mat::identity(field, x.dim());
    let action = (0..la.dim())
        .map(|k| {
            let plain = m.left_action()[k].kronecker(&idx).expect("shape");
            space
                .surj
                .mul(&plain)
                .and_then(|t| t.mul(&space.sect))
                .expect("shape")
        })
        .collect();
    let module = FdModule::from_parts(la, space.dim, action);
    Ok(TensorProduct { module, space })
}

/// `M (x)_R N` for bimodules with matching middle algebra; the result is a
/// bimodule over `(left of M, right of N)`.
#[derive(Clone, Debug)]
pub struct TensorBimodule {
    pub bimodule: Bimodule,
    pub space: TensorSpace,
}

pub fn tensor_bimodule_bimodule(m: &Bimodule, n: &Bimodule) -> Result<TensorBimodule> {
    if m.right_algebra().as_ref() != n.left_algebra().as_ref() {
        return Err(Error::AlgebraMismatch(
            "tensor: middle algebras differ".into(),
        ));
    }
    let field = m.left_algebra().field();
    let space = balanced_tensor(
        field,
        m.right_algebra(),
        m.dim(),
        n.dim(),
        m.right_action(),
        n.left_action(),
    )?;
    let im = Mat::identity(field, m.dim());
    let in_ = Mat::identity(field, n.dim());
    let left = (0..m.left_algebra().dim())
        .map(|k| {
            let plain = m.left_action()[k].kronecker(&in_).expect("shape");
            space
                .surj
                .mul(&plain)
                .and_then(|t| t.mul(&space.sect))
                .expect("shape")
        })
        .collect();
    let right = (0..n.right_algebra().dim())
        .map(|k| {
            let plain = im.kronecker(&n.right_action()[k]).expect("shape");
            space
                .surj
                .mul(&plain)
                .and_then(|t| t.mul(&space.sect))
                .expect("shape")
        })
        .collect();
    let bimodule = Bimodule::from_parts(
        m.left_algebra().clone(),
        n.right_algebra().clone(),
        space.dim,
        left,
        right,
    );
    Ok(TensorBimodule { bimodule, space })
}

/// `Y (x)_R M` for a right module `Y` (left module over the opposite) and a
/// bimodule `M`; the result is a right module again, acting through the
/// right action on `M`.
pub fn tensor_right_module_bimodule(y: &FdModule, m: &Bimodule) -> Result<TensorProduct> {
    if !is_opposite_of(m.left_algebra().as_ref(), y.algebra().as_ref()) {
        return Err(Error::AlgebraMismatch(
            "tensor: Y is not a right module over the bimodule's left algebra".into(),
        ));
    }
    let field = y.algebra().field();
    // balancing: (y . r) (x) m - y (x) (r . m); the right action on Y is its
    // opposite-module action
    let space = balanced_tensor(
        field,
        m.left_algebra(),
        y.dim(),
        m.dim(),
        y.action(),
        m.left_action(),
    )?;
    let op = y.algebra().clone();
    let iy = Mat::identity(field, y.dim());
    let action = (0..op.dim())
        .map(|k| {
            let plain = iy.kronecker(&m.right_action()[k]).expect("shape");
            space
                .surj
                .mul(&plain)
                .and_then(|t| t.mul(&space.sect))
                .expect("shape")
        })
        .collect();
    let module = FdModule::from_parts(op, space.dim, action);
    Ok(TensorProduct { module, space })
}

/// `Y (x)_R X` of a right and a left module: a plain vector space.
pub fn tensor_right_left(y: &FdModule, x: &FdModule) -> Result<TensorSpace> {
    if !is_opposite_of(x.algebra().as_ref(), y.algebra().as_ref()) {
        return Err(Error::AlgebraMismatch(
            "tensor: orientations do not match".into(),
        ));
    }
    balanced_tensor(
        x.algebra().field(),
        x.algebra(),
        y.dim(),
        x.dim(),
        y.action(),
        x.action(),
    )
}

/// The induced map `id (x) f : M (x) X -> M (x) X'` on computed quotients.
/// Well-definedness (the plain map respects both balancing subspaces) is
/// asserted.
pub fn tensor_map_right_factor(
    m_dim: usize,
    src: &TensorSpace,
    dst: &TensorSpace,
    f: &Mat,
) -> Mat {
    let field = f.field();
    let id = Mat::identity(field, m_dim);
    let plain = id.kronecker(f).expect("shape");
    let q = dst
        .surj
        .mul(&plain)
        .expect("plain map against destination surjection");
    let lifted = q.mul(&src.sect).expect("section shape");
    // factorisation check: the quotient-level map composed with the source
    // surjection must equal the plain-level map
    let back = lifted.mul(&src.surj).expect("shape");
    assert_eq!(back, q, "induced tensor map does not respect balancing");
    lifted
}

/// The induced map `f (x) id : Y (x) M -> Y' (x) M` on computed quotients.
pub fn tensor_map_left_factor(
    m_dim: usize,
    src: &TensorSpace,
    dst: &TensorSpace,
    f: &Mat,
) -> Mat {
    let field = f.field();
    let id = Mat::identity(field, m_dim);
    let plain = f.kronecker(&id).expect("shape");
    let q = dst.surj.mul(&plain).expect("shape");
    let lifted = q.mul(&src.sect).expect("shape");
    let back = lifted.mul(&src.surj).expect("shape");
    assert_eq!(back, q, "induced tensor map does not respect balancing");
    lifted
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::nakayama;
    use crate::module::ModHom;
    use std::sync::Arc;

    fn setup() -> Arc<Algebra> {
        Arc::new(nakayama(FieldSpec::new(2).unwrap(), 3, 2).unwrap())
    }

    #[test]
    fn unit_law_m_tensor_r() {
        // M (x)_R R ~ M for the regular bimodule: dimension equality
        let a = setup();
        let m = Bimodule::regular(&a);
        let r = FdModule::regular_left(&a);
        let t = tensor_bimodule_module(&m, &r).unwrap();
        assert_eq!(t.module.dim(), m.dim());
        t.module.check_axioms().unwrap();
    }

    #[test]
    fn zero_tensor_anything_is_zero() {
        let a = setup();
        let z = Bimodule::zero(a.clone(), a.clone());
        let r = FdModule::regular_left(&a);
        let t = tensor_bimodule_module(&z, &r).unwrap();
        assert_eq!(t.module.dim(), 0);
    }

    #[test]
    fn additivity_over_direct_sums() {
        let a = setup();
        let m = Bimodule::regular(&a);
        let r = FdModule::regular_left(&a);
        let (rr, _) = FdModule::direct_sum(&[&r, &r]).unwrap();
        let t1 = tensor_bimodule_module(&m, &r).unwrap();
        let t2 = tensor_bimodule_module(&m, &rr).unwrap();
        assert_eq!(t2.module.dim(), 2 * t1.module.dim());
    }

    #[test]
    fn regular_tensor_regular_bimodule() {
        // R (x)_R R ~ R as a bimodule
        let a = setup();
        let r = Bimodule::regular(&a);
        let t = tensor_bimodule_bimodule(&r, &r).unwrap();
        assert_eq!(t.bimodule.dim(), a.dim());
        t.bimodule.check_axioms().unwrap();
    }

    #[test]
    fn right_module_tensor_bimodule() {
        let a = setup();
        let op = Arc::new(a.opposite());
        let y = FdModule::regular_right(&a, &op).unwrap();
        let m = Bimodule::regular(&a);
        let t = tensor_right_module_bimodule(&y, &m).unwrap();
        assert_eq!(t.module.dim(), a.dim());
        t.module.check_axioms().unwrap();
    }

    #[test]
    fn right_left_tensor_dimension() {
        // R (x)_R R ~ R as a vector space
        let a = setup();
        let op = Arc::new(a.opposite());
        let y = FdModule::regular_right(&a, &op).unwrap();
        let x = FdModule::regular_left(&a);
        let t = tensor_right_left(&y, &x).unwrap();
        assert_eq!(t.dim, a.dim());
    }

    #[test]
    fn induced_map_factors_through_quotient() {
        let a = setup();
        let m = Bimodule::regular(&a);
        let r = Arc::new(FdModule::regular_left(&a));
        let e1 = &a.idempotents()[0];
        let h = ModHom::new(r.clone(), r.clone(), a.element_right_matrix(e1)).unwrap();
        let t = tensor_bimodule_module(&m, &r).unwrap();
        let induced = tensor_map_right_factor(m.dim(), &t.space, &t.space, h.matrix());
        assert_eq!(induced.rows(), t.module.dim());
        assert_eq!(induced.cols(), t.module.dim());
    }
}
