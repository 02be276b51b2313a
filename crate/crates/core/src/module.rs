//! Finite-dimensional left modules, right modules (left modules over the
//! opposite algebra behind a thin orientation wrapper), bimodules and module
//! homomorphisms.
//!
//! Validation happens at construction boundaries: `new` verifies the action
//! axioms against the algebra's generating set, while crate-internal
//! constructions (kernels, cokernels, tensor quotients, ...) are produced by
//! `from_parts` and covered by the axiom property tests instead of paying the
//! check on every intermediate value.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::linalg::Mat;
use crate::{Error, Result};

/// Left module over a fixed algebra: one action matrix per algebra basis
/// element.
#[derive(Clone)]
pub struct FdModule {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Mat>,
}

impl std::fmt::Debug for FdModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FdModule(dim {} over {:?})", self.dim, self.algebra)
    }
}

/// Structural test that `b` presents the opposite algebra of `a`.
pub fn is_opposite_of(a: &Algebra, b: &Algebra) -> bool {
    if a.field() != b.field() || a.dim() != b.dim() {
        return false;
    }
    if a.unit() != b.unit() || a.idempotents() != b.idempotents() || a.rad_basis() != b.rad_basis()
    {
        return false;
    }
    let (ta, tb) = (a.table(), b.table());
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if ta[i][j] != tb[j][i] {
                return false;
            }
        }
    }
    true
}

impl FdModule {
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Mat>) -> Result<Self> {
        let m = Self::from_parts(algebra, dim, action);
        m.check_axioms()?;
        Ok(m)
    }

    /// Trusted constructor for values that are modules by construction.
    pub(crate) fn from_parts(algebra: Arc<Algebra>, dim: usize, action: Vec<Mat>) -> Self {
        FdModule {
            algebra,
            dim,
            action,
        }
    }

    /// Verify the action laws: `rho(1) = id` and multiplicativity against the
    /// algebra's generating set (which implies it everywhere).
    pub fn check_axioms(&self) -> Result<()> {
        let a = &self.algebra;
        if self.action.len() != a.dim() {
            return Err(Error::ModuleAxiom(format!(
                "expected {} action matrices, got {}",
                a.dim(),
                self.action.len()
            )));
        }
        for (i, m) in self.action.iter().enumerate() {
            if m.rows() != self.dim || m.cols() != self.dim || m.field() != a.field() {
                return Err(Error::ModuleAxiom(format!(
                    "action matrix {i} has wrong shape or field"
                )));
            }
        }
        if self.action_of(a.unit()) != Mat::identity(a.field(), self.dim) {
            return Err(Error::ModuleAxiom("unit does not act as identity".into()));
        }
        for g in a.generators() {
            let rho_g = self.action_of(g);
            for j in 0..a.dim() {
                let lhs = rho_g.mul(&self.action[j]).expect("shape");
                let gj = a.mult(g, &crate::algebra::unit_vec(a.dim(), j));
                let rhs = self.action_of(&gj);
                if lhs != rhs {
                    return Err(Error::ModuleAxiom(format!(
                        "action not multiplicative at generator x basis element {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    pub fn action_matrix(&self, i: usize) -> &Mat {
        &self.action[i]
    }

    /// Action of an arbitrary algebra element given by coordinates.
    pub fn action_of(&self, coords: &[u64]) -> Mat {
        let mut m = Mat::zeros(self.algebra.field(), self.dim, self.dim);
        for (i, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            m = m.add(&self.action[i].scale(c)).expect("shape");
        }
        m
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let action = (0..algebra.dim())
            .map(|_| Mat::zeros(algebra.field(), 0, 0))
            .collect();
        FdModule::from_parts(algebra, 0, action)
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// The regular left module: the algebra acting on itself by left
    /// multiplication.
    pub fn regular_left(algebra: &Arc<Algebra>) -> Self {
        let action = (0..algebra.dim())
            .map(|i| algebra.left_mult_matrix(i).clone())
            .collect();
        FdModule::from_parts(algebra.clone(), algebra.dim(), action)
    }

    /// The algebra as a right module over itself, i.e. a left module over the
    /// supplied opposite algebra.
    pub fn regular_right(algebra: &Arc<Algebra>, opposite: &Arc<Algebra>) -> Result<Self> {
        if !is_opposite_of(algebra, opposite) {
            return Err(Error::AlgebraMismatch(
                "supplied algebra is not the opposite".into(),
            ));
        }
        let action = (0..algebra.dim())
            .map(|i| algebra.right_mult_matrix(i).clone())
            .collect();
        Ok(FdModule::from_parts(
            opposite.clone(),
            algebra.dim(),
            action,
        ))
    }

    /// Direct sum; returns the sum together with the coordinate offsets of
    /// the summands.
    pub fn direct_sum(parts: &[&FdModule]) -> Result<(FdModule, Vec<usize>)> {
        let Some(first) = parts.first() else {
            return Err(Error::AlgebraMismatch("empty direct sum needs an algebra".into()));
        };
        let algebra = first.algebra.clone();
        for p in parts {
            if p.algebra.as_ref() != algebra.as_ref() {
                return Err(Error::AlgebraMismatch(
                    "direct sum of modules over different algebras".into(),
                ));
            }
        }
        let mut offsets = Vec::with_capacity(parts.len());
        let mut total = 0usize;
        for p in parts {
            offsets.push(total);
            total += p.dim;
        }
        let mut action = Vec::with_capacity(algebra.dim());
        for i in 0..algebra.dim() {
            let mut m = Mat::zeros(algebra.field(), total, total);
            for (p, &off) in parts.iter().zip(&offsets) {
                let a = &p.action[i];
                for r in 0..p.dim {
                    for c in 0..p.dim {
                        let v = a.get(r, c);
                        if v != 0 {
                            m.set(off + r, off + c, v);
                        }
                    }
                }
            }
            action.push(m);
        }
        Ok((FdModule::from_parts(algebra, total, action), offsets))
    }

    /// Equality of action tables (not isomorphism): same algebra, same
    /// dimension, identical matrices.
    pub fn same_tables(&self, other: &FdModule) -> bool {
        self.algebra.as_ref() == other.algebra.as_ref()
            && self.dim == other.dim
            && self.action == other.action
    }

    /// The field dual as a left module over the opposite algebra: transposed
    /// action matrices.
    pub fn kdual_into(&self, opposite: &Arc<Algebra>) -> Result<FdModule> {
        if !is_opposite_of(self.algebra.as_ref(), opposite) {
            return Err(Error::AlgebraMismatch(
                "kdual target is not the opposite algebra".into(),
            ));
        }
        let action = self.action.iter().map(Mat::transpose).collect();
        Ok(FdModule::from_parts(opposite.clone(), self.dim, action))
    }

    /// Field dual, constructing the opposite algebra on the fly.
    pub fn kdual(&self) -> FdModule {
        let op = Arc::new(self.algebra.opposite());
        self.kdual_into(&op).expect("fresh opposite")
    }

    /// Socle: the largest semisimple submodule, computed as the joint kernel
    /// of the radical action. Returns a basis matrix of the subspace.
    pub fn socle_basis(&self) -> Mat {
        let f = self.algebra.field();
        let mut stacked = Mat::zeros(f, 0, self.dim);
        for r in self.algebra.rad_basis() {
            stacked = stacked.vstack(&self.action_of(r)).expect("shape");
        }
        stacked.kernel_basis()
    }
}

/// A right module: a left module over the opposite algebra, with the base
/// algebra recorded to prevent orientation mixing.
#[derive(Clone, Debug)]
pub struct RightModule {
    inner: FdModule,
}

impl RightModule {
    /// Wrap a left module over `base.opposite()` as a right `base`-module.
    pub fn over(base: &Algebra, inner: FdModule) -> Result<Self> {
        if !is_opposite_of(base, inner.algebra()) {
            return Err(Error::AlgebraMismatch(
                "right module must be presented over the opposite algebra".into(),
            ));
        }
        Ok(RightModule { inner })
    }

    pub fn inner(&self) -> &FdModule {
        &self.inner
    }

    pub fn into_inner(self) -> FdModule {
        self.inner
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }
}

/// Bimodule: commuting left and right actions over two (possibly equal)
/// algebras on the same field.
#[derive(Clone)]
pub struct Bimodule {
    left_algebra: Arc<Algebra>,
    right_algebra: Arc<Algebra>,
    dim: usize,
    left_action: Vec<Mat>,
    right_action: Vec<Mat>,
}

impl std::fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Bimodule(dim {})", self.dim)
    }
}

impl Bimodule {
    pub fn new(
        left_algebra: Arc<Algebra>,
        right_algebra: Arc<Algebra>,
        dim: usize,
        left_action: Vec<Mat>,
        right_action: Vec<Mat>,
    ) -> Result<Self> {
        let b = Self::from_parts(left_algebra, right_algebra, dim, left_action, right_action);
        b.check_axioms()?;
        Ok(b)
    }

    pub(crate) fn from_parts(
        left_algebra: Arc<Algebra>,
        right_algebra: Arc<Algebra>,
        dim: usize,
        left_action: Vec<Mat>,
        right_action: Vec<Mat>,
    ) -> Self {
        Bimodule {
            left_algebra,
            right_algebra,
            dim,
            left_action,
            right_action,
        }
    }

    pub fn check_axioms(&self) -> Result<()> {
        if self.left_algebra.field() != self.right_algebra.field() {
            return Err(Error::FieldMismatch {
                left: self.left_algebra.field().modulus(),
                right: self.right_algebra.field().modulus(),
            });
        }
        // left action law
        self.as_left_module().check_axioms()?;
        // right action law: the same matrices must form a left action of the
        // opposite, i.e. rho(x)rho(y) = rho(y*x)
        let ra = &self.right_algebra;
        let rho = |coords: &[u64]| -> Mat {
            let mut m = Mat::zeros(ra.field(), self.dim, self.dim);
            for (i, &c) in coords.iter().enumerate() {
                if c != 0 {
                    m = m.add(&self.right_action[i].scale(c)).expect("shape");
                }
            }
            m
        };
        if rho(ra.unit()) != Mat::identity(ra.field(), self.dim) {
            return Err(Error::ModuleAxiom(
                "right unit does not act as identity".into(),
            ));
        }
        for g in ra.generators() {
            let rho_g = rho(g);
            for j in 0..ra.dim() {
                let lhs = rho_g.mul(&self.right_action[j]).expect("shape");
                // (m . b_j) . g = m . (b_j g)
                let bj_g = ra.mult(&crate::algebra::unit_vec(ra.dim(), j), g);
                if lhs != rho(&bj_g) {
                    return Err(Error::ModuleAxiom(format!(
                        "right action law fails at generator x basis element {j}"
                    )));
                }
            }
        }
        // actions commute; generator pairs suffice once both laws hold
        let la = &self.left_algebra;
        for g in la.generators() {
            let lam_g = {
                let mut m = Mat::zeros(la.field(), self.dim, self.dim);
                for (i, &c) in g.iter().enumerate() {
                    if c != 0 {
                        m = m.add(&self.left_action[i].scale(c)).expect("shape");
                    }
                }
                m
            };
            for h in ra.generators() {
                let rho_h = rho(h);
                if lam_g.mul(&rho_h).expect("shape") != rho_h.mul(&lam_g).expect("shape") {
                    return Err(Error::ModuleAxiom(
                        "left and right actions do not commute".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The algebra as a bimodule over itself.
    pub fn regular(algebra: &Arc<Algebra>) -> Self {
        let left = (0..algebra.dim())
            .map(|i| algebra.left_mult_matrix(i).clone())
            .collect();
        let right = (0..algebra.dim())
            .map(|i| algebra.right_mult_matrix(i).clone())
            .collect();
        Bimodule::from_parts(algebra.clone(), algebra.clone(), algebra.dim(), left, right)
    }

    /// Zero bimodule.
    pub fn zero(left: Arc<Algebra>, right: Arc<Algebra>) -> Self {
        let f = left.field();
        let la = (0..left.dim()).map(|_| Mat::zeros(f, 0, 0)).collect();
        let ra = (0..right.dim()).map(|_| Mat::zeros(f, 0, 0)).collect();
        Bimodule::from_parts(left, right, 0, la, ra)
    }

    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.left_algebra
    }

    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.right_algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_action(&self) -> &[Mat] {
        &self.left_action
    }

    pub fn right_action(&self) -> &[Mat] {
        &self.right_action
    }

    pub fn left_action_of(&self, coords: &[u64]) -> Mat {
        let mut m = Mat::zeros(self.left_algebra.field(), self.dim, self.dim);
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.left_action[i].scale(c)).expect("shape");
            }
        }
        m
    }

    pub fn right_action_of(&self, coords: &[u64]) -> Mat {
        let mut m = Mat::zeros(self.right_algebra.field(), self.dim, self.dim);
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.right_action[i].scale(c)).expect("shape");
            }
        }
        m
    }

    /// Forget the right action.
    pub fn as_left_module(&self) -> FdModule {
        FdModule::from_parts(self.left_algebra.clone(), self.dim, self.left_action.clone())
    }

    /// The underlying right module, as a left module over the supplied
    /// opposite of the right algebra.
    pub fn as_right_module(&self, right_op: &Arc<Algebra>) -> Result<FdModule> {
        if !is_opposite_of(self.right_algebra.as_ref(), right_op) {
            return Err(Error::AlgebraMismatch(
                "supplied algebra is not the opposite of the right algebra".into(),
            ));
        }
        Ok(FdModule::from_parts(
            right_op.clone(),
            self.dim,
            self.right_action.clone(),
        ))
    }

    /// The same space as a bimodule over the opposite algebras, with the two
    /// actions exchanged.
    pub fn swapped(&self) -> Bimodule {
        let left_op = Arc::new(self.right_algebra.opposite());
        let right_op = Arc::new(self.left_algebra.opposite());
        Bimodule::from_parts(
            left_op,
            right_op,
            self.dim,
            self.right_action.clone(),
            self.left_action.clone(),
        )
    }
}

/// Homomorphism of left modules over a common algebra; the matrix maps source
/// coordinates to target coordinates.
#[derive(Clone)]
pub struct ModHom {
    source: Arc<FdModule>,
    target: Arc<FdModule>,
    matrix: Mat,
}

impl std::fmt::Debug for ModHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ModHom({} -> {}, rank {})",
            self.source.dim(),
            self.target.dim(),
            self.matrix.rank()
        )
    }
}

impl ModHom {
    pub fn new(source: Arc<FdModule>, target: Arc<FdModule>, matrix: Mat) -> Result<Self> {
        let h = Self::from_parts(source, target, matrix);
        h.check_intertwines()?;
        Ok(h)
    }

    pub(crate) fn from_parts(source: Arc<FdModule>, target: Arc<FdModule>, matrix: Mat) -> Self {
        ModHom {
            source,
            target,
            matrix,
        }
    }

    pub fn check_intertwines(&self) -> Result<()> {
        if self.source.algebra().as_ref() != self.target.algebra().as_ref() {
            return Err(Error::AlgebraMismatch(
                "hom between modules over different algebras".into(),
            ));
        }
        if self.matrix.rows() != self.target.dim() || self.matrix.cols() != self.source.dim() {
            return Err(Error::ModuleAxiom("hom matrix has wrong shape".into()));
        }
        for g in self.source.algebra().generators() {
            let lhs = self.matrix.mul(&self.source.action_of(g)).expect("shape");
            let rhs = self.target.action_of(g).mul(&self.matrix).expect("shape");
            if lhs != rhs {
                return Err(Error::ModuleAxiom(
                    "matrix does not intertwine the actions".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<FdModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FdModule> {
        &self.target
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn zero(source: Arc<FdModule>, target: Arc<FdModule>) -> Self {
        let m = Mat::zeros(source.algebra().field(), target.dim(), source.dim());
        ModHom::from_parts(source, target, m)
    }

    pub fn identity(module: Arc<FdModule>) -> Self {
        let m = Mat::identity(module.algebra().field(), module.dim());
        ModHom::from_parts(module.clone(), module, m)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &ModHom) -> Result<ModHom> {
        if !Arc::ptr_eq(&self.source, &other.target)
            && !self.source.same_tables(&other.target)
        {
            return Err(Error::AlgebraMismatch(
                "composition endpoints do not match".into(),
            ));
        }
        let m = self.matrix.mul(&other.matrix)?;
        Ok(ModHom::from_parts(other.source.clone(), self.target.clone(), m))
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Kernel with its inclusion.
    pub fn kernel_mod(&self) -> (Arc<FdModule>, ModHom) {
        let k = self.matrix.kernel_basis();
        let x = &self.source;
        let action = x
            .action()
            .iter()
            .map(|rho| {
                let img = rho.mul(&k).expect("shape");
                k.solve(&img)
                    .expect("kernel is action-stable for a module hom")
            })
            .collect();
        let ker = Arc::new(FdModule::from_parts(
            x.algebra().clone(),
            k.cols(),
            action,
        ));
        let incl = ModHom::from_parts(ker.clone(), x.clone(), k);
        (ker, incl)
    }

    /// Cokernel with its projection.
    pub fn cokernel_mod(&self) -> (Arc<FdModule>, ModHom) {
        let y = &self.target;
        let q = Mat::quotient_data(y.algebra().field(), y.dim(), &self.matrix)
            .expect("target dimensions agree");
        let action = y
            .action()
            .iter()
            .map(|rho| {
                q.proj
                    .mul(rho)
                    .and_then(|m| m.mul(&q.section))
                    .expect("shape")
            })
            .collect();
        let cok = Arc::new(FdModule::from_parts(
            y.algebra().clone(),
            q.proj.rows(),
            action,
        ));
        let proj = ModHom::from_parts(y.clone(), cok.clone(), q.proj);
        (cok, proj)
    }

    /// Image with its inclusion into the target.
    pub fn image_mod(&self) -> (Arc<FdModule>, ModHom) {
        let b = self.matrix.column_space_basis();
        let y = &self.target;
        let action = y
            .action()
            .iter()
            .map(|rho| {
                let img = rho.mul(&b).expect("shape");
                b.solve(&img).expect("image is action-stable")
            })
            .collect();
        let im = Arc::new(FdModule::from_parts(
            y.algebra().clone(),
            b.cols(),
            action,
        ));
        let incl = ModHom::from_parts(im.clone(), y.clone(), b);
        (im, incl)
    }

    /// Field dual with source and target exchanged.
    pub fn kdual_into(&self, opposite: &Arc<Algebra>) -> Result<ModHom> {
        let dsrc = Arc::new(self.target.kdual_into(opposite)?);
        let dtgt = Arc::new(self.source.kdual_into(opposite)?);
        Ok(ModHom::from_parts(dsrc, dtgt, self.matrix.transpose()))
    }
}
