//! Finite-dimensional associative algebras presented by structure constants,
//! with a designated complete set of orthogonal idempotents and a basis of the
//! Jacobson radical. Constructors for monomial path-algebra quotients,
//! opposite algebras and direct products.

use std::collections::HashMap;
use std::sync::Arc;

use crate::linalg::{FieldSpec, Mat};
use crate::{Error, Result};

/// Cap on basis paths grown by the path-algebra builder.
pub const DEFAULT_PATH_CAP: usize = 10_000;

/// Exhaustive associativity checking is done up to this dimension; larger
/// algebras are checked on deterministically sampled triples.
const EXHAUSTIVE_ASSOC_DIM: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

/// A finite quiver; vertices are numbered `1..=vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for a in &arrows {
            if a.from == 0 || a.from > vertices || a.to == 0 || a.to > vertices {
                return Err(Error::MalformedRelation(format!(
                    "arrow {} has endpoint out of range",
                    a.name
                )));
            }
            if !seen.insert(a.name.clone()) {
                return Err(Error::MalformedRelation(format!(
                    "duplicate arrow name {}",
                    a.name
                )));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Cyclic quiver `1 -> 2 -> ... -> n -> 1` with arrows `a1, ..., an`,
    /// `ak` starting at vertex `k`.
    pub fn cycle(n: usize) -> Quiver {
        let arrows = (1..=n)
            .map(|k| Arrow {
                name: format!("a{k}"),
                from: k,
                to: if k == n { 1 } else { k + 1 },
            })
            .collect();
        Quiver {
            vertices: n,
            arrows,
        }
    }
}

/// Finite-dimensional associative algebra over F_p.
///
/// `table[i][j]` holds the coordinates of `b_i * b_j`. Left and right
/// multiplication matrices per basis element are cached at construction; all
/// axioms (associativity, unit law, idempotent decomposition, radical
/// stability and nilpotency) are verified before a value exists.
#[derive(Clone)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<Vec<u64>>>,
    unit: Vec<u64>,
    idempotents: Vec<Vec<u64>>,
    rad_basis: Vec<Vec<u64>>,
    /// Coordinate vectors that generate the algebra together with the unit.
    gens: Vec<Vec<u64>>,
    left_mult: Vec<Mat>,
    right_mult: Vec<Mat>,
}

impl PartialEq for Algebra {
    /// Structural equality of the presented data; labels and the choice of
    /// generating set are presentation metadata and do not participate.
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.table == other.table
            && self.unit == other.unit
            && self.idempotents == other.idempotents
            && self.rad_basis == other.rad_basis
    }
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Algebra(dim {} over F_{}, {} idempotents, radical dim {})",
            self.dim,
            self.field.modulus(),
            self.idempotents.len(),
            self.rad_basis.len()
        )
    }
}

impl Algebra {
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        table: Vec<Vec<Vec<u64>>>,
        unit: Vec<u64>,
        idempotents: Vec<Vec<u64>>,
        rad_basis: Vec<Vec<u64>>,
    ) -> Result<Self> {
        let dim = labels.len();
        let gens = (0..dim).map(|i| unit_vec(dim, i)).collect();
        Self::with_generators(field, labels, table, unit, idempotents, rad_basis, gens)
    }

    /// Construct with an explicit generating set (coordinate vectors). The
    /// span closure of `{1} u gens` under multiplication must be the whole
    /// algebra; homomorphism solvers then only impose generator constraints.
    pub fn with_generators(
        field: FieldSpec,
        labels: Vec<String>,
        table: Vec<Vec<Vec<u64>>>,
        unit: Vec<u64>,
        idempotents: Vec<Vec<u64>>,
        rad_basis: Vec<Vec<u64>>,
        gens: Vec<Vec<u64>>,
    ) -> Result<Self> {
        let dim = labels.len();
        if table.len() != dim
            || table.iter().any(|r| r.len() != dim)
            || table
                .iter()
                .flatten()
                .any(|v| v.len() != dim || v.iter().any(|&e| e >= field.modulus()))
        {
            return Err(Error::AlgebraAxiom(
                "structure-constant table has wrong shape or entries".into(),
            ));
        }
        if unit.len() != dim {
            return Err(Error::AlgebraAxiom("unit vector has wrong length".into()));
        }

        // cache multiplication matrices
        let left_mult: Vec<Mat> = (0..dim)
            .map(|i| {
                let mut m = Mat::zeros(field, dim, dim);
                for j in 0..dim {
                    for l in 0..dim {
                        m.set(l, j, table[i][j][l]);
                    }
                }
                m
            })
            .collect();
        let right_mult: Vec<Mat> = (0..dim)
            .map(|j| {
                let mut m = Mat::zeros(field, dim, dim);
                for i in 0..dim {
                    for l in 0..dim {
                        m.set(l, i, table[i][j][l]);
                    }
                }
                m
            })
            .collect();

        let alg = Algebra {
            field,
            dim,
            labels,
            table,
            unit,
            idempotents,
            rad_basis,
            gens,
            left_mult,
            right_mult,
        };
        alg.check_unit()?;
        alg.check_associativity()?;
        alg.check_idempotents()?;
        alg.check_radical()?;
        alg.check_generators()?;
        Ok(alg)
    }

    fn check_unit(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::AlgebraAxiom("zero-dimensional algebra".into()));
        }
        let id = Mat::identity(self.field, self.dim);
        if self.element_left_matrix(&self.unit) != id
            || self.element_right_matrix(&self.unit) != id
        {
            return Err(Error::AlgebraAxiom("unit law fails".into()));
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<()> {
        // (b_i b_j) b_k = b_i (b_j b_k) for all k is equivalent to
        // L(b_i b_j) = L_i L_j as matrices.
        let check_pair = |i: usize, j: usize| -> bool {
            let lij = self.element_left_matrix(&self.table[i][j]);
            let li_lj = self.left_mult[i]
                .mul(&self.left_mult[j])
                .expect("square matrices");
            lij == li_lj
        };
        if self.dim <= EXHAUSTIVE_ASSOC_DIM {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    if !check_pair(i, j) {
                        return Err(Error::AlgebraAxiom(format!(
                            "associativity fails at basis pair ({i}, {j})"
                        )));
                    }
                }
            }
        } else {
            // deterministic sampling above the exhaustive cutoff
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut step = || {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 33) as usize
            };
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let i = step() % self.dim;
                let j = step() % self.dim;
                if !check_pair(i, j) {
                    return Err(Error::AlgebraAxiom(format!(
                        "associativity fails at sampled basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_idempotents(&self) -> Result<()> {
        let f = self.field;
        let mut total = vec![0u64; self.dim];
        for (s, e) in self.idempotents.iter().enumerate() {
            if e.len() != self.dim {
                return Err(Error::AlgebraAxiom("idempotent has wrong length".into()));
            }
            for (t, e2) in self.idempotents.iter().enumerate() {
                let prod = self.mult(e, e2);
                let expect = if s == t { e.clone() } else { vec![0; self.dim] };
                if prod != expect {
                    return Err(Error::AlgebraAxiom(format!(
                        "idempotents {s} and {t} are not orthogonal idempotents"
                    )));
                }
            }
            for (k, &v) in e.iter().enumerate() {
                total[k] = f.add(total[k], v);
            }
        }
        if total != self.unit {
            return Err(Error::AlgebraAxiom("idempotents do not sum to 1".into()));
        }
        Ok(())
    }

    fn check_radical(&self) -> Result<()> {
        if self.rad_basis.iter().any(|v| v.len() != self.dim) {
            return Err(Error::AlgebraAxiom(
                "radical vector has wrong length".into(),
            ));
        }
        let rad = self.vectors_as_columns(&self.rad_basis);
        // two-sided stability
        for i in 0..self.dim {
            let lr = self.left_mult[i].mul(&rad).expect("shapes");
            let rr = self.right_mult[i].mul(&rad).expect("shapes");
            if !Mat::contains_columns(&rad, &lr) || !Mat::contains_columns(&rad, &rr) {
                return Err(Error::AlgebraAxiom(format!(
                    "radical is not stable under basis element {i}"
                )));
            }
        }
        // nilpotency: J^m = 0 for some m <= dim
        let mut power = rad.clone();
        let mut steps = 1usize;
        while !power.is_zero() && power.cols() > 0 {
            if steps > self.dim {
                return Err(Error::AlgebraAxiom("radical is not nilpotent".into()));
            }
            let prev_rank = power.rank();
            let mut cols: Vec<Vec<u64>> = Vec::new();
            for c in 0..power.cols() {
                let lx = self.element_left_matrix(&power.col(c));
                for r in &self.rad_basis {
                    cols.push(lx.apply(r).expect("shape"));
                }
            }
            let next = self.vectors_as_columns(&cols).column_space_basis();
            if next.cols() == prev_rank && prev_rank > 0 {
                return Err(Error::AlgebraAxiom("radical is not nilpotent".into()));
            }
            power = next;
            steps += 1;
        }
        Ok(())
    }

    fn check_generators(&self) -> Result<()> {
        let mut span_cols: Vec<Vec<u64>> = vec![self.unit.clone()];
        span_cols.extend(self.gens.iter().cloned());
        let mut span = self.vectors_as_columns(&span_cols).column_space_basis();
        loop {
            let before = span.cols();
            let mut new_cols: Vec<Vec<u64>> = Vec::new();
            for a in 0..span.cols() {
                let la = self.element_left_matrix(&span.col(a));
                for b in 0..span.cols() {
                    new_cols.push(la.apply(&span.col(b)).expect("shape"));
                }
            }
            let bigger = span
                .hstack(&self.vectors_as_columns(&new_cols))
                .expect("stack");
            span = bigger.column_space_basis();
            if span.cols() == before {
                break;
            }
        }
        if span.cols() != self.dim {
            return Err(Error::AlgebraAxiom(format!(
                "generators span a proper subalgebra of dimension {}",
                span.cols()
            )));
        }
        Ok(())
    }

    fn vectors_as_columns(&self, vs: &[Vec<u64>]) -> Mat {
        let mut m = Mat::zeros(self.field, self.dim, vs.len());
        for (c, v) in vs.iter().enumerate() {
            for (r, &x) in v.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &Vec<Vec<Vec<u64>>> {
        &self.table
    }

    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    pub fn idempotents(&self) -> &[Vec<u64>] {
        &self.idempotents
    }

    pub fn rad_basis(&self) -> &[Vec<u64>] {
        &self.rad_basis
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.gens
    }

    /// Radical basis vectors as the columns of a matrix.
    pub fn radical_matrix(&self) -> Mat {
        self.vectors_as_columns(&self.rad_basis)
    }

    /// Product of two coordinate vectors.
    pub fn mult(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        self.element_left_matrix(x).apply(y).expect("shape")
    }

    /// Matrix of `v -> x * v` on the regular representation.
    pub fn element_left_matrix(&self, x: &[u64]) -> Mat {
        let mut m = Mat::zeros(self.field, self.dim, self.dim);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            m = m.add(&self.left_mult[i].scale(xi)).expect("shape");
        }
        m
    }

    /// Matrix of `v -> v * x` on the regular representation.
    pub fn element_right_matrix(&self, x: &[u64]) -> Mat {
        let mut m = Mat::zeros(self.field, self.dim, self.dim);
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            m = m.add(&self.right_mult[j].scale(xj)).expect("shape");
        }
        m
    }

    pub fn left_mult_matrix(&self, i: usize) -> &Mat {
        &self.left_mult[i]
    }

    pub fn right_mult_matrix(&self, i: usize) -> &Mat {
        &self.right_mult[i]
    }

    /// The opposite algebra: transposed structure constants, everything else
    /// carried over.
    pub fn opposite(&self) -> Algebra {
        let mut table = vec![vec![vec![0u64; self.dim]; self.dim]; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                table[i][j] = self.table[j][i].clone();
            }
        }
        Algebra::with_generators(
            self.field,
            self.labels.clone(),
            table,
            self.unit.clone(),
            self.idempotents.clone(),
            self.rad_basis.clone(),
            self.gens.clone(),
        )
        .expect("opposite of a valid algebra is valid")
    }

    /// Block-diagonal direct product.
    pub fn direct_product(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.modulus(),
                right: other.field.modulus(),
            });
        }
        let dim = self.dim + other.dim;
        let embed_l = |v: &[u64]| {
            let mut w = vec![0u64; dim];
            w[..self.dim].copy_from_slice(v);
            w
        };
        let embed_r = |v: &[u64]| {
            let mut w = vec![0u64; dim];
            w[self.dim..].copy_from_slice(v);
            w
        };
        let mut table = vec![vec![vec![0u64; dim]; dim]; dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                table[i][j] = embed_l(&self.table[i][j]);
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                table[self.dim + i][self.dim + j] = embed_r(&other.table[i][j]);
            }
        }
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("l.{l}")).collect();
        labels.extend(other.labels.iter().map(|l| format!("r.{l}")));
        let mut unit = embed_l(&self.unit);
        for (k, &v) in other.unit.iter().enumerate() {
            unit[self.dim + k] = v;
        }
        let mut idem: Vec<Vec<u64>> = self.idempotents.iter().map(|e| embed_l(e)).collect();
        idem.extend(other.idempotents.iter().map(|e| embed_r(e)));
        let mut rad: Vec<Vec<u64>> = self.rad_basis.iter().map(|r| embed_l(r)).collect();
        rad.extend(other.rad_basis.iter().map(|r| embed_r(r)));
        // component units are included so the generator span closure reaches
        // both blocks
        let mut gens: Vec<Vec<u64>> = vec![embed_l(&self.unit), embed_r(&other.unit)];
        gens.extend(self.gens.iter().map(|g| embed_l(g)));
        gens.extend(other.gens.iter().map(|g| embed_r(g)));
        Algebra::with_generators(self.field, labels, table, unit, idem, rad, gens)
    }

    /// Shared-reference helper.
    pub fn into_arc(self) -> Arc<Algebra> {
        Arc::new(self)
    }
}

pub(crate) fn unit_vec(dim: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0u64; dim];
    v[i] = 1;
    v
}

/// A basis path of a monomial path-algebra quotient; arrows are stored in
/// application order (index 0 acts first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

/// Build `kQ / <relations>` for monomial relations.
///
/// Composition convention: in a product `q * p` the path `p` acts first, and
/// the product is defined when `target(p) = source(q)`. The left module
/// `A * e_v` therefore has as basis the paths with source `v`. Relations are
/// given as arrow-name sequences in application order.
pub fn build_path_algebra(
    field: FieldSpec,
    quiver: &Quiver,
    relations: &[Vec<String>],
    cap: usize,
) -> Result<Algebra> {
    let arrow_index: HashMap<&str, usize> = quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (a.name.as_str(), i))
        .collect();
    let mut rels: Vec<Vec<usize>> = Vec::new();
    for rel in relations {
        if rel.len() < 2 {
            return Err(Error::MalformedRelation(format!(
                "relation {rel:?} has length < 2"
            )));
        }
        let mut seq = Vec::with_capacity(rel.len());
        for name in rel {
            let Some(&i) = arrow_index.get(name.as_str()) else {
                return Err(Error::MalformedRelation(format!("unknown arrow {name}")));
            };
            seq.push(i);
        }
        for w in seq.windows(2) {
            if quiver.arrows[w[0]].to != quiver.arrows[w[1]].from {
                return Err(Error::MalformedRelation(format!(
                    "relation {rel:?} is not composable"
                )));
            }
        }
        rels.push(seq);
    }

    let contains_relation = |arrows: &[usize]| -> bool {
        rels.iter()
            .any(|r| arrows.len() >= r.len() && arrows.windows(r.len()).any(|w| w == r.as_slice()))
    };
    // suffix check is enough when extending a relation-free path by one arrow
    let new_suffix_hits = |arrows: &[usize]| -> bool {
        rels.iter()
            .any(|r| arrows.len() >= r.len() && arrows[arrows.len() - r.len()..] == r[..])
    };

    // breadth-first growth of relation-free paths
    let mut basis: Vec<Path> = (1..=quiver.vertices)
        .map(|v| Path {
            source: v,
            target: v,
            arrows: vec![],
        })
        .collect();
    let mut frontier: Vec<Path> = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, a) in quiver.arrows.iter().enumerate() {
                if a.from != p.target {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                if new_suffix_hits(&arrows) {
                    continue;
                }
                next.push(Path {
                    source: p.source,
                    target: a.to,
                    arrows,
                });
            }
        }
        basis.extend(next.iter().cloned());
        if basis.len() > cap {
            return Err(Error::InfiniteDimensional { cap });
        }
        frontier = next;
    }

    let dim = basis.len();
    let index: HashMap<Path, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let label = |p: &Path| -> String {
        if p.arrows.is_empty() {
            format!("e{}", p.source)
        } else {
            // rightmost factor acts first
            p.arrows
                .iter()
                .rev()
                .map(|&a| quiver.arrows[a].name.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    };
    let labels: Vec<String> = basis.iter().map(label).collect();

    // multiplication: q * p = concatenation when composable and relation-free
    let mut table = vec![vec![vec![0u64; dim]; dim]; dim];
    for (qi, q) in basis.iter().enumerate() {
        for (pi, p) in basis.iter().enumerate() {
            if q.source != p.target {
                continue;
            }
            let mut arrows = p.arrows.clone();
            arrows.extend_from_slice(&q.arrows);
            if contains_relation(&arrows) {
                continue;
            }
            let prod = Path {
                source: p.source,
                target: q.target,
                arrows,
            };
            let Some(&k) = index.get(&prod) else {
                return Err(Error::MalformedRelation(
                    "relation set is not factor-closed: product escapes the basis".into(),
                ));
            };
            table[qi][pi][k] = 1;
        }
    }

    let mut unit = vec![0u64; dim];
    let mut idempotents = Vec::new();
    let mut rad = Vec::new();
    let mut gens = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        if p.arrows.is_empty() {
            unit[i] = 1;
            idempotents.push(unit_vec(dim, i));
            gens.push(unit_vec(dim, i));
        } else {
            rad.push(unit_vec(dim, i));
            if p.arrows.len() == 1 {
                gens.push(unit_vec(dim, i));
            }
        }
    }

    Algebra::with_generators(field, labels, table, unit, idempotents, rad, gens)
}

/// kQ/J^h for the cyclic quiver on `n` vertices; self-injective for
/// `2 <= h <= n`.
pub fn nakayama(field: FieldSpec, n: usize, h: usize) -> Result<Algebra> {
    if n == 0 || h < 1 {
        return Err(Error::PreconditionViolated(
            "nakayama requires n >= 1 and h >= 1".into(),
        ));
    }
    let q = Quiver::cycle(n);
    let rels: Vec<Vec<String>> = (0..n)
        .map(|start| {
            (0..h)
                .map(|k| format!("a{}", (start + k) % n + 1))
                .collect()
        })
        .collect();
    build_path_algebra(field, &q, &rels, DEFAULT_PATH_CAP)
}
