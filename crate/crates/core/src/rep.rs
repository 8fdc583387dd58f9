//! Representations as matrix-valued homomorphisms, plus the functors the
//! Clifford machinery composes: restriction, induction, conjugation, tensor
//! product, inflation and the regular representation.
//!
//! Images are materialized eagerly for every group element (all groups in
//! scope are small); construction validates the homomorphism property on
//! every (element, generator) edge, which by induction over words covers all
//! pairs.

use std::sync::Arc;

use thiserror::Error;

use crate::field::{FieldCtx, FieldError};
use crate::group::{Group, QuotientGroup};
use crate::linalg::Matrix;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum RepError {
    #[error("generator images do not define a homomorphism")]
    NotAHomomorphism,
    #[error("generator images have mismatched degrees")]
    DegreeMismatch,
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("element does not normalize the subgroup")]
    DoesNotNormalize,
    #[error("representations are over different groups")]
    GroupMismatch,
    #[error("representations are over different field contexts")]
    ContextMismatch,
    #[error("representation does not come from this quotient")]
    QuotientMismatch,
    #[error("image of a group element is singular")]
    SingularImage,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] crate::group::GroupError),
}

#[derive(Clone)]
pub struct Representation {
    group: Arc<Group>,
    ctx: Arc<FieldCtx>,
    degree: usize,
    images: Vec<Matrix>,
    label: String,
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Representation({}, deg {}, over F_{}^{}, group {})",
            self.label,
            self.degree,
            self.ctx.p(),
            self.ctx.k(),
            self.group.name()
        )
    }
}

impl Representation {
    /// Build from images of the group's generators (in generator order),
    /// completing along BFS words and validating every (element, generator)
    /// product.
    pub fn from_generator_images(
        group: &Arc<Group>,
        ctx: &Arc<FieldCtx>,
        gen_images: &[Matrix],
        label: &str,
    ) -> Result<Representation, RepError> {
        if gen_images.len() != group.gens().len() {
            return Err(RepError::DegreeMismatch);
        }
        let degree = if gen_images.is_empty() { 1 } else { gen_images[0].rows() };
        for m in gen_images {
            if m.rows() != degree || m.cols() != degree {
                return Err(RepError::DegreeMismatch);
            }
            if m.ctx().id() != ctx.id() {
                return Err(RepError::ContextMismatch);
            }
            if m.inverse().is_none() {
                return Err(RepError::SingularImage);
            }
        }
        let n = group.order();
        let mut images = Vec::with_capacity(n);
        images.push(Matrix::identity(ctx, degree));
        for idx in 1..n {
            let (parent, gpos) = group.parent_word(idx);
            let img = images[parent].mul(&gen_images[gpos]);
            images.push(img);
        }
        let rep = Representation {
            group: Arc::clone(group),
            ctx: Arc::clone(ctx),
            degree,
            images,
            label: label.to_string(),
        };
        rep.validate()?;
        Ok(rep)
    }

    /// Build directly from a full image table indexed by element; validated
    /// like `from_generator_images`.
    pub fn from_image_table(
        group: &Arc<Group>,
        ctx: &Arc<FieldCtx>,
        images: Vec<Matrix>,
        label: &str,
    ) -> Result<Representation, RepError> {
        assert_eq!(images.len(), group.order());
        let degree = images[0].rows();
        let rep = Representation {
            group: Arc::clone(group),
            ctx: Arc::clone(ctx),
            degree,
            images,
            label: label.to_string(),
        };
        rep.validate()?;
        Ok(rep)
    }

    fn validate(&self) -> Result<(), RepError> {
        if !self.images[0].is_identity() {
            return Err(RepError::NotAHomomorphism);
        }
        for g in 0..self.group.order() {
            for &h in self.group.gens() {
                let prod = self.group.mul_idx(g, h);
                if self.images[g].mul(&self.images[h]) != self.images[prod] {
                    return Err(RepError::NotAHomomorphism);
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn set_label(&mut self, label: &str) {
        self.label = label.to_string();
    }

    /// Image of the element with the given index.
    pub fn image(&self, idx: usize) -> &Matrix {
        &self.images[idx]
    }

    /// Images of the group generators, in generator order.
    pub fn gen_images(&self) -> Vec<Matrix> {
        self.group.gens().iter().map(|&g| self.images[g].clone()).collect()
    }

    pub fn same_group(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
    }

    // -- constructors ------------------------------------------------------

    pub fn trivial(group: &Arc<Group>, ctx: &Arc<FieldCtx>) -> Representation {
        let images = vec![Matrix::identity(ctx, 1); group.order()];
        Representation {
            group: Arc::clone(group),
            ctx: Arc::clone(ctx),
            degree: 1,
            images,
            label: "trivial".to_string(),
        }
    }

    /// The defining matrix representation (entries embedded into `ctx`).
    pub fn natural(group: &Arc<Group>, ctx: &Arc<FieldCtx>) -> Result<Representation, RepError> {
        let images: Result<Vec<Matrix>, FieldError> =
            group.elements().iter().map(|e| e.matrix.embed_into(ctx)).collect();
        Self::from_image_table(group, ctx, images?, "natural")
    }

    /// Left-translation permutation representation of degree `|G|`.
    pub fn regular(group: &Arc<Group>, ctx: &Arc<FieldCtx>) -> Representation {
        let n = group.order();
        let mut images = Vec::with_capacity(n);
        for g in 0..n {
            let mut m = Matrix::zeros(ctx, n, n);
            for h in 0..n {
                m.set(group.mul_idx(g, h), h, ctx.one());
            }
            images.push(m);
        }
        Representation {
            group: Arc::clone(group),
            ctx: Arc::clone(ctx),
            degree: n,
            images,
            label: "regular".to_string(),
        }
    }

    // -- functors ----------------------------------------------------------

    /// Forget the action outside `sub`.
    pub fn restrict(&self, sub: &Arc<Group>) -> Result<Representation, RepError> {
        if !self.group.contains_subgroup(sub) {
            return Err(RepError::NotASubgroup);
        }
        let images: Vec<Matrix> = sub
            .elements()
            .iter()
            .map(|e| {
                let idx = self.group.index_of(&e.matrix).expect("subgroup element");
                self.images[idx].clone()
            })
            .collect();
        Ok(Representation {
            group: Arc::clone(sub),
            ctx: Arc::clone(&self.ctx),
            degree: self.degree,
            images,
            label: format!("Res[{}]", self.label),
        })
    }

    /// Induce a representation of `self.group` (= N) up to `big`, realized
    /// on coset blocks: with fixed left-coset reps `t_1..t_m`, block (i, j)
    /// of the image of g is `sigma(t_i^{-1} g t_j)` when that element lies
    /// in N, and zero otherwise.
    pub fn induce(&self, big: &Arc<Group>) -> Result<Representation, RepError> {
        let small = &self.group;
        if !big.contains_subgroup(small) {
            return Err(RepError::NotASubgroup);
        }
        let cosets = big.coset_reps(small)?;
        let m = cosets.reps.len();
        let d = self.degree;
        let ctx = &self.ctx;
        let mut images = Vec::with_capacity(big.order());
        for g in 0..big.order() {
            let mut img = Matrix::zeros(ctx, m * d, m * d);
            for (j, &tj) in cosets.reps.iter().enumerate() {
                let gtj = big.mul_idx(g, tj);
                let i = cosets.member_to_rep[gtj];
                let ti = cosets.reps[i];
                let inside_big = big.mul_idx(big.inv_idx(ti), gtj);
                let inside = small
                    .index_of(&big.element(inside_big).matrix)
                    .expect("t_i^{-1} g t_j lies in N by choice of i");
                let block = &self.images[inside];
                for r in 0..d {
                    for c in 0..d {
                        img.set(i * d + r, j * d + c, block.at(r, c));
                    }
                }
            }
            images.push(img);
        }
        Representation::from_image_table(big, ctx, images, &format!("Ind[{}]", self.label))
    }

    /// The g-conjugate `n -> sigma(g^{-1} n g)`; `g` is an element index of
    /// `big`, which must normalize `self.group`.
    pub fn conjugate(&self, big: &Arc<Group>, g: usize) -> Result<Representation, RepError> {
        let small = &self.group;
        if !big.contains_subgroup(small) {
            return Err(RepError::NotASubgroup);
        }
        let mut images = Vec::with_capacity(small.order());
        for n in small.elements() {
            let n_in_big = big.index_of(&n.matrix).expect("subgroup element");
            let conj_big = big.conj_idx(g, n_in_big);
            let conj_small = small
                .index_of(&big.element(conj_big).matrix)
                .ok_or(RepError::DoesNotNormalize)?;
            images.push(self.images[conj_small].clone());
        }
        Representation::from_image_table(
            small,
            &self.ctx,
            images,
            &format!("conj[{},{}]", self.label, g),
        )
    }

    pub fn tensor(&self, other: &Representation) -> Result<Representation, RepError> {
        if !self.same_group(other) {
            return Err(RepError::GroupMismatch);
        }
        if self.ctx.id() != other.ctx.id() {
            return Err(RepError::ContextMismatch);
        }
        let images: Vec<Matrix> = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.kron(b).expect("same ctx"))
            .collect();
        Representation::from_image_table(
            &self.group,
            &self.ctx,
            images,
            &format!("{}(x){}", self.label, other.label),
        )
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, RepError> {
        if !self.same_group(other) {
            return Err(RepError::GroupMismatch);
        }
        if self.ctx.id() != other.ctx.id() {
            return Err(RepError::ContextMismatch);
        }
        let d1 = self.degree;
        let d2 = other.degree;
        let images: Vec<Matrix> = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(&self.ctx, d1 + d2, d1 + d2);
                for i in 0..d1 {
                    for j in 0..d1 {
                        m.set(i, j, a.at(i, j));
                    }
                }
                for i in 0..d2 {
                    for j in 0..d2 {
                        m.set(d1 + i, d1 + j, b.at(i, j));
                    }
                }
                m
            })
            .collect();
        Representation::from_image_table(
            &self.group,
            &self.ctx,
            images,
            &format!("{}(+){}", self.label, other.label),
        )
    }

    /// Inflation along `G -> G/N`: `psi` is a representation of the
    /// permutation realization of `quotient`, and the result is the
    /// composite `g -> psi(gN)`, constant on N-cosets.
    pub fn inflate(
        psi: &Representation,
        big: &Arc<Group>,
        quotient: &QuotientGroup,
    ) -> Result<Representation, RepError> {
        if psi.group.order() != quotient.len() || big.order() != quotient.class_of.len() {
            return Err(RepError::QuotientMismatch);
        }
        let images: Vec<Matrix> = (0..big.order())
            .map(|g| {
                let class = quotient.class_index(g);
                let perm = quotient.class_matrix(psi.group.ctx(), class);
                let qidx = psi.group.index_of(&perm).expect("class matrix is a quotient element");
                psi.images[qidx].clone()
            })
            .collect();
        Representation::from_image_table(big, &psi.ctx, images, &format!("infl[{}]", psi.label))
    }

    /// One-dimensional determinant-power representation of a matrix group.
    pub fn det_power(group: &Arc<Group>, ctx: &Arc<FieldCtx>, r: u64) -> Result<Representation, RepError> {
        let images: Result<Vec<Matrix>, RepError> = group
            .elements()
            .iter()
            .map(|e| {
                let m = &e.matrix;
                assert_eq!(m.rows(), 2, "det_power currently supports 2x2 matrix groups");
                let gctx = m.ctx();
                let det = gctx.sub(
                    gctx.mul(m.at(0, 0), m.at(1, 1)),
                    gctx.mul(m.at(0, 1), m.at(1, 0)),
                );
                let det = crate::field::embed(gctx, ctx, det)?;
                let mut out = Matrix::zeros(ctx, 1, 1);
                out.set(0, 0, ctx.pow(det, r));
                Ok(out)
            })
            .collect();
        Representation::from_image_table(group, ctx, images?, &format!("det^{r}"))
    }

    /// Change of basis `P rho P^{-1}` (degree preserved).
    pub fn conjugate_by_basis(&self, p: &Matrix) -> Representation {
        let pinv = p.inverse().expect("basis change must be invertible");
        let images: Vec<Matrix> = self.images.iter().map(|m| p.mul(m).mul(&pinv)).collect();
        Representation {
            group: Arc::clone(&self.group),
            ctx: Arc::clone(&self.ctx),
            degree: self.degree,
            images,
            label: self.label.clone(),
        }
    }

    /// Re-base all images into `dst` via the canonical embedding.
    pub fn embed_into(&self, dst: &Arc<FieldCtx>) -> Result<Representation, RepError> {
        let images: Result<Vec<Matrix>, FieldError> =
            self.images.iter().map(|m| m.embed_into(dst)).collect();
        Ok(Representation {
            group: Arc::clone(&self.group),
            ctx: Arc::clone(dst),
            degree: self.degree,
            images: images?,
            label: self.label.clone(),
        })
    }

    /// The dual (contragredient) module `g -> rho(g^{-1})^T`.
    pub fn dual(&self) -> Representation {
        let images: Vec<Matrix> = (0..self.group.order())
            .map(|g| self.images[self.group.inv_idx(g)].transpose())
            .collect();
        Representation {
            group: Arc::clone(&self.group),
            ctx: Arc::clone(&self.ctx),
            degree: self.degree,
            images,
            label: format!("dual[{}]", self.label),
        }
    }
}
