//! Finitely presented connected graded algebras and their validated graded
//! automorphisms.
//!
//! A [`GradedAlgebra`] bundles a presentation with its truncated rewriting
//! system. A [`GradedAutomorphism`] is a degree-preserving invertible linear
//! action on the generator space that maps every relation into the ideal;
//! for graded ideals this is exactly an automorphism of the algebra in
//! degrees within the completion bound.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::free::{
    apply_all_slots, check_degree_preserving, GeneratorTable, Multidegree, NcPolynomial,
};
use crate::matrix::Matrix;
use crate::rewrite::{buchberger_truncated, HilbertPrefix, RewriteSystem};
use crate::scalar::{FieldSpec, Scalar};

/// Where a registered fact comes from: a literature citation or one of this
/// crate's own computations. Every use of registry data is surfaced in
/// reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    PaperRegistry(String),
    Computed(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::PaperRegistry(s) => write!(f, "paper-registry: {s}"),
            Provenance::Computed(s) => write!(f, "computed-{s}"),
        }
    }
}

/// Closed-form homological determinant rules attachable to an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HdetRule {
    /// hdet sigma = det(sigma restricted to degree 1); commutative
    /// polynomial rings.
    Determinant,
    /// hdet sigma = det(sigma restricted to degree 1)^2; graded down-up
    /// algebras.
    DeterminantSquared,
}

impl HdetRule {
    pub fn name(&self) -> &'static str {
        match self {
            HdetRule::Determinant => "det",
            HdetRule::DeterminantSquared => "det_squared",
        }
    }
}

/// Registry of externally supplied or previously computed facts, each with
/// provenance. Computed entries must be reproducible by the operation named
/// in their provenance tag.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct KnownData {
    pub nakayama: Option<(Matrix, Provenance)>,
    pub as_index: Option<(Multidegree, Provenance)>,
    pub hdet_rule: Option<(HdetRule, Provenance)>,
}

#[derive(Debug)]
struct AlgebraInner {
    table: Arc<GeneratorTable>,
    field: FieldSpec,
    relations: Vec<NcPolynomial>,
    rewrite: RewriteSystem,
    known: KnownData,
}

/// A finitely presented connected graded algebra with exact coefficients.
/// Cheap to clone; immutable after construction.
#[derive(Debug, Clone)]
pub struct GradedAlgebra(Arc<AlgebraInner>);

impl PartialEq for GradedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (*self.0.table == *other.0.table
                && self.0.field == other.0.field
                && self.0.relations == other.0.relations
                && self.0.rewrite.complete_to() == other.0.rewrite.complete_to())
    }
}

impl GradedAlgebra {
    /// Builds the algebra: validates the presentation, completes the
    /// rewriting system to total degree `bound`.
    pub fn new(
        table: Arc<GeneratorTable>,
        field: FieldSpec,
        relations: Vec<NcPolynomial>,
        bound: i64,
    ) -> Result<GradedAlgebra> {
        field.validate()?;
        for r in &relations {
            if *r.field() != field {
                return Err(Error::FieldMismatch(r.field().clone(), field));
            }
            if **r.table() != *table {
                return Err(Error::GeneratorMismatch);
            }
        }
        let rewrite = buchberger_truncated(&table, &field, &relations, bound)?;
        // Connectedness: the empty word must stay normal (no degree-0
        // relations can arise from homogeneous input of positive degree).
        debug_assert_eq!(rewrite.monomial_basis_total(0)?.len(), 1);
        Ok(GradedAlgebra(Arc::new(AlgebraInner {
            table,
            field,
            relations,
            rewrite,
            known: KnownData::default(),
        })))
    }

    /// Attaches registry facts, returning a new value.
    pub fn with_known_data(&self, known: KnownData) -> GradedAlgebra {
        GradedAlgebra(Arc::new(AlgebraInner {
            table: Arc::clone(&self.0.table),
            field: self.0.field.clone(),
            relations: self.0.relations.clone(),
            rewrite: self.0.rewrite.clone(),
            known,
        }))
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.0.table
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn relations(&self) -> &[NcPolynomial] {
        &self.0.relations
    }

    pub fn rewrite(&self) -> &RewriteSystem {
        &self.0.rewrite
    }

    pub fn known(&self) -> &KnownData {
        &self.0.known
    }

    pub fn complete_to(&self) -> i64 {
        self.0.rewrite.complete_to()
    }

    pub fn hilbert_prefix(&self) -> HilbertPrefix {
        self.0.rewrite.hilbert_prefix()
    }

    pub fn dimension(&self, total_degree: i64) -> Result<usize> {
        Ok(self.0.rewrite.monomial_basis_total(total_degree)?.len())
    }

    /// Re-coefficients the presentation in a larger field (explicit field
    /// enlargement). Registry data is dropped; recompute what you need.
    pub fn embed(&self, target: &FieldSpec) -> Result<GradedAlgebra> {
        let relations: Vec<NcPolynomial> = self
            .0
            .relations
            .iter()
            .map(|r| {
                let pairs = r
                    .terms()
                    .iter()
                    .map(|(w, c)| Ok((w.clone(), c.embed(target)?)))
                    .collect::<Result<Vec<_>>>()?;
                NcPolynomial::from_terms(&self.0.table, target, pairs)
            })
            .collect::<Result<Vec<_>>>()?;
        GradedAlgebra::new(
            Arc::clone(&self.0.table),
            target.clone(),
            relations,
            self.complete_to(),
        )
    }

    /// Validates a candidate matrix as a graded automorphism: invertible,
    /// degree-preserving, and mapping every relation into the ideal. The
    /// error names the first violated relation.
    pub fn check_automorphism(&self, m: Matrix) -> Result<GradedAutomorphism> {
        check_degree_preserving(&self.0.table, &m)?;
        if m.inverse().is_err() {
            return Err(Error::SingularMatrix);
        }
        for (index, r) in self.0.relations.iter().enumerate() {
            let image = apply_all_slots(&m, r)?;
            let residue = self.0.rewrite.normal_form(&image)?;
            if !residue.is_zero() {
                return Err(Error::AutomorphismRejected {
                    index,
                    relation: r.render(),
                    remainder: residue.render(),
                });
            }
        }
        Ok(GradedAutomorphism {
            algebra: self.clone(),
            matrix: m,
        })
    }

    pub fn identity_automorphism(&self) -> GradedAutomorphism {
        GradedAutomorphism {
            algebra: self.clone(),
            matrix: Matrix::identity(self.0.table.len(), &self.0.field),
        }
    }

    /// The diagonal automorphism scaling each generator x by delta^|x|
    /// (componentwise powers over the Z^w grading). Always valid: it scales
    /// each homogeneous component, so graded relations map to multiples of
    /// themselves.
    pub fn degree_scaling(&self, delta: &[Scalar]) -> Result<GradedAutomorphism> {
        if delta.len() != self.0.table.rank() {
            return Err(Error::DimensionMismatch(delta.len(), 1, self.0.table.rank(), 1));
        }
        for d in delta {
            if d.is_zero() {
                return Err(Error::ZeroScalar);
            }
            if d.field() != self.0.field {
                return Err(Error::FieldMismatch(d.field(), self.0.field.clone()));
            }
        }
        let n = self.0.table.len();
        let mut m = Matrix::new(n, n, &self.0.field);
        for g in 0..n {
            let mut c = Scalar::one(&self.0.field);
            for (s, exp) in self.0.table.multidegree(g as u32).iter().enumerate() {
                c = c.mul(&delta[s].pow(*exp)?)?;
            }
            m.set(g, g, c);
        }
        Ok(GradedAutomorphism {
            algebra: self.clone(),
            matrix: m,
        })
    }

    /// degree_scaling with the same scalar in every grading slot, i.e.
    /// x -> c^(total degree) x.
    pub fn scalar_scaling(&self, c: &Scalar) -> Result<GradedAutomorphism> {
        let delta = vec![c.clone(); self.0.table.rank()];
        self.degree_scaling(&delta)
    }
}

/// Order of an automorphism under composition, or evidence that it is
/// infinite. The two infinite outcomes are distinguished: a non-torsion
/// eigenvalue is a proof, an exhausted cap is not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomorphismOrder {
    Finite(u64),
    /// A diagonal entry or the determinant is not a root of unity
    /// (characteristic zero only).
    InfiniteByEigenvalue(String),
    /// The iteration cap was reached without returning to the identity.
    CapExceeded(u64),
}

pub const DEFAULT_ORDER_CAP: u64 = 10_000;

/// A validated degree-preserving automorphism, stored as its matrix on the
/// generator space (column j is the image of generator j).
#[derive(Debug, Clone)]
pub struct GradedAutomorphism {
    algebra: GradedAlgebra,
    matrix: Matrix,
}

impl PartialEq for GradedAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.matrix == other.matrix
    }
}

impl GradedAutomorphism {
    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn apply(&self, f: &NcPolynomial) -> Result<NcPolynomial> {
        apply_all_slots(&self.matrix, f)
    }

    fn check_same_algebra(&self, other: &GradedAutomorphism) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Composition: `other` acts first, then `self`.
    pub fn compose(&self, other: &GradedAutomorphism) -> Result<GradedAutomorphism> {
        self.check_same_algebra(other)?;
        Ok(GradedAutomorphism {
            algebra: self.algebra.clone(),
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn inverse(&self) -> Result<GradedAutomorphism> {
        Ok(GradedAutomorphism {
            algebra: self.algebra.clone(),
            matrix: self.matrix.inverse()?,
        })
    }

    pub fn power(&self, e: i64) -> Result<GradedAutomorphism> {
        Ok(GradedAutomorphism {
            algebra: self.algebra.clone(),
            matrix: self.matrix.pow(e)?,
        })
    }

    pub fn commutes_with(&self, other: &GradedAutomorphism) -> Result<bool> {
        self.check_same_algebra(other)?;
        Ok(self.matrix.mul(&other.matrix)? == other.matrix.mul(&self.matrix)?)
    }

    /// Order by iteration up to `cap`, with a root-of-unity pre-check on
    /// the diagonal entries and the determinant in characteristic zero.
    pub fn order(&self, cap: u64) -> Result<AutomorphismOrder> {
        if self.algebra.field().characteristic() == 0 {
            if self.matrix.is_diagonal() {
                for i in 0..self.matrix.rows() {
                    let entry = self.matrix.get(i, i);
                    if entry.root_of_unity_order().is_none() {
                        return Ok(AutomorphismOrder::InfiniteByEigenvalue(format!(
                            "eigenvalue {} at generator {} is not a root of unity",
                            entry.render(),
                            self.algebra.table().name(i as u32)
                        )));
                    }
                }
            }
            let det = self.matrix.det()?;
            if det.root_of_unity_order().is_none() {
                return Ok(AutomorphismOrder::InfiniteByEigenvalue(format!(
                    "determinant {} is not a root of unity",
                    det.render()
                )));
            }
        }
        let mut acc = self.matrix.clone();
        let id = Matrix::identity(self.matrix.rows(), self.algebra.field());
        for k in 1..=cap {
            if acc == id {
                return Ok(AutomorphismOrder::Finite(k));
            }
            acc = acc.mul(&self.matrix)?;
        }
        Ok(AutomorphismOrder::CapExceeded(cap))
    }

    /// Canonical rendering as generator images.
    pub fn render(&self) -> String {
        let table = self.algebra.table();
        let field = self.algebra.field();
        let mut parts = Vec::new();
        for g in 0..table.len() as u32 {
            let image = crate::free::generator_image(table, field, &self.matrix, g)
                .expect("validated matrix");
            parts.push(format!("{} -> {}", table.name(g), image.render()));
        }
        parts.join(", ")
    }
}

impl fmt::Display for GradedAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
