//! Finite matrix groups by explicit enumeration. Everything in scope has
//! order at most a few thousand, so groups are stored as full element lists
//! with a key index; conjugation, cosets and quotients then reduce to table
//! lookups. Element ordering is BFS discovery depth with a key-sorted
//! frontier, which makes every derived object reproducible byte-for-byte.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{make_field, FieldCtx, FieldError};
use crate::linalg::Matrix;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GroupError {
    #[error("enumeration exceeded the bound of {0} elements")]
    BoundExceeded(usize),
    #[error("generator is singular")]
    SingularGenerator,
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("generators live over different contexts or have different sizes")]
    MixedGenerators,
    #[error("invalid permutation")]
    BadPermutation,
    #[error("unknown group descriptor: {0}")]
    UnknownGroup(String),
}

#[derive(Clone)]
pub struct GroupElement {
    pub matrix: Matrix,
}

impl GroupElement {
    pub fn canonical_key(&self) -> Vec<u8> {
        self.matrix.canonical_key()
    }
}

pub struct Group {
    ctx: Arc<FieldCtx>,
    dim: usize,
    elements: Vec<GroupElement>,
    index: HashMap<Vec<u8>, usize>,
    gens: Vec<usize>,
    name: String,
    /// `(parent, gen_pos)` with `element = parent * gens[gen_pos]`;
    /// the identity maps to itself.
    parent_word: Vec<(usize, usize)>,
    inv: Vec<usize>,
    elt_order: Vec<u64>,
}

/// A conjugacy class: canonical-key-minimal representative plus members.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub rep: usize,
    pub members: Vec<usize>,
}

/// Left-coset data of a subgroup: representatives (first one the identity)
/// and the member -> representative-position map.
pub struct CosetData {
    pub reps: Vec<usize>,
    pub member_to_rep: Vec<usize>,
}

/// A quotient `G/N` with its multiplication table on coset classes.
#[derive(Debug)]
pub struct QuotientGroup {
    pub parent_name: String,
    pub normal_name: String,
    pub reps: Vec<usize>,
    /// parent element index -> class index
    pub class_of: Vec<usize>,
    pub table: Vec<Vec<usize>>,
}

impl Group {
    /// BFS closure of a generating set, deterministically ordered.
    pub fn generate(gens: Vec<GroupElement>, bound: usize, name: &str) -> Result<Group, GroupError> {
        if gens.is_empty() {
            return Err(GroupError::MixedGenerators);
        }
        let ctx = gens[0].matrix.ctx().clone();
        let dim = gens[0].matrix.rows();
        for g in &gens {
            if g.matrix.rows() != dim || g.matrix.cols() != dim || g.matrix.ctx().id() != ctx.id() {
                return Err(GroupError::MixedGenerators);
            }
            if g.matrix.inverse().is_none() {
                return Err(GroupError::SingularGenerator);
            }
        }
        let identity = Matrix::identity(&ctx, dim);
        let mut elements = vec![GroupElement { matrix: identity }];
        let mut index = HashMap::new();
        index.insert(elements[0].canonical_key(), 0usize);
        let mut parent_word = vec![(0usize, usize::MAX)];

        // record generator positions once they appear as elements
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut discovered: Vec<(Vec<u8>, Matrix, usize, usize)> = Vec::new();
            let mut seen_this_level: HashMap<Vec<u8>, ()> = HashMap::new();
            for &e in &frontier {
                for (gpos, g) in gens.iter().enumerate() {
                    let prod = elements[e].matrix.mul(&g.matrix);
                    let key = prod.canonical_key();
                    if index.contains_key(&key) || seen_this_level.contains_key(&key) {
                        continue;
                    }
                    seen_this_level.insert(key.clone(), ());
                    discovered.push((key, prod, e, gpos));
                }
            }
            discovered.sort_by(|a, b| a.0.cmp(&b.0));
            frontier = Vec::new();
            for (key, mat, parent, gpos) in discovered {
                let idx = elements.len();
                if idx >= bound {
                    return Err(GroupError::BoundExceeded(bound));
                }
                elements.push(GroupElement { matrix: mat });
                index.insert(key, idx);
                parent_word.push((parent, gpos));
                frontier.push(idx);
            }
        }

        let gen_indices: Vec<usize> =
            gens.iter().map(|g| index[&g.canonical_key()]).collect();

        let mut inv = vec![0usize; elements.len()];
        let mut elt_order = vec![1u64; elements.len()];
        for (i, e) in elements.iter().enumerate() {
            let im = e.matrix.inverse().expect("group element invertible");
            inv[i] = index[&im.canonical_key()];
            let mut ord = 1u64;
            let mut cur = e.matrix.clone();
            while !cur.is_identity() {
                cur = cur.mul(&e.matrix);
                ord += 1;
            }
            elt_order[i] = ord;
        }

        Ok(Group {
            ctx,
            dim,
            elements,
            index,
            gens: gen_indices,
            name: name.to_string(),
            parent_word,
            inv,
            elt_order,
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }
    pub fn element(&self, idx: usize) -> &GroupElement {
        &self.elements[idx]
    }
    pub fn gens(&self) -> &[usize] {
        &self.gens
    }
    pub fn parent_word(&self, idx: usize) -> (usize, usize) {
        self.parent_word[idx]
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(&m.canonical_key()).copied()
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].matrix.mul(&self.elements[b].matrix);
        self.index[&prod.canonical_key()]
    }

    pub fn inv_idx(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.elt_order[a]
    }

    pub fn conj_idx(&self, g: usize, n: usize) -> usize {
        // g^{-1} n g
        self.mul_idx(self.mul_idx(self.inv[g], n), g)
    }

    /// Conjugacy classes, sorted by representative key; representatives are
    /// key-minimal within their class.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order();
        let mut class_id = vec![usize::MAX; n];
        let mut classes: Vec<ConjugacyClass> = Vec::new();
        for e in 0..n {
            if class_id[e] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            // orbit of e under conjugation
            let mut stack = vec![e];
            class_id[e] = id;
            while let Some(x) = stack.pop() {
                members.push(x);
                for &g in &self.gens {
                    let y = self.conj_idx(g, x);
                    if class_id[y] == usize::MAX {
                        class_id[y] = id;
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            let rep = *members
                .iter()
                .min_by(|&&a, &&b| {
                    self.elements[a].canonical_key().cmp(&self.elements[b].canonical_key())
                })
                .unwrap();
            classes.push(ConjugacyClass { rep, members });
        }
        classes.sort_by(|a, b| {
            self.elements[a.rep].canonical_key().cmp(&self.elements[b.rep].canonical_key())
        });
        classes
    }

    /// Classes whose elements have order coprime to `p`.
    pub fn p_regular_classes(&self, p: u64) -> Vec<ConjugacyClass> {
        self.conjugacy_classes()
            .into_iter()
            .filter(|c| crate::field::gcd(self.elt_order[c.rep], p) == 1)
            .collect()
    }

    /// True iff every element of `sub` belongs to `self`.
    pub fn contains_subgroup(&self, sub: &Group) -> bool {
        sub.dim == self.dim
            && sub.ctx.id() == self.ctx.id()
            && sub.elements.iter().all(|e| self.index.contains_key(&e.canonical_key()))
    }

    pub fn is_normal(&self, sub: &Group) -> Result<bool, GroupError> {
        if !self.contains_subgroup(sub) {
            return Err(GroupError::NotASubgroup);
        }
        for &g in &self.gens {
            for n in &sub.elements {
                let idx = self.index[&n.canonical_key()];
                let conj = self.conj_idx(g, idx);
                if !sub.index.contains_key(&self.elements[conj].canonical_key()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Left-coset representatives of `sub` in `self`, greedy over the
    /// canonical element order; the first representative is the identity.
    pub fn coset_reps(&self, sub: &Group) -> Result<CosetData, GroupError> {
        if !self.contains_subgroup(sub) {
            return Err(GroupError::NotASubgroup);
        }
        let n = self.order();
        let mut member_to_rep = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for e in 0..n {
            if member_to_rep[e] != usize::MAX {
                continue;
            }
            let pos = reps.len();
            reps.push(e);
            for h in &sub.elements {
                let hidx = self.index[&h.canonical_key()];
                let m = self.mul_idx(e, hidx);
                member_to_rep[m] = pos;
            }
        }
        Ok(CosetData { reps, member_to_rep })
    }

    pub fn quotient(&self, normal: &Group) -> Result<QuotientGroup, GroupError> {
        if !self.is_normal(normal)? {
            return Err(GroupError::NotNormal);
        }
        let cosets = self.coset_reps(normal)?;
        let m = cosets.reps.len();
        let mut table = vec![vec![0usize; m]; m];
        for a in 0..m {
            for b in 0..m {
                let prod = self.mul_idx(cosets.reps[a], cosets.reps[b]);
                table[a][b] = cosets.member_to_rep[prod];
            }
        }
        // well-definedness spot check on random-ish pairs
        for a in 0..m.min(4) {
            for b in 0..m.min(4) {
                for h in normal.elements.iter().take(3) {
                    let hidx = self.index[&h.canonical_key()];
                    let alt = self.mul_idx(self.mul_idx(cosets.reps[a], hidx), cosets.reps[b]);
                    assert_eq!(
                        cosets.member_to_rep[alt], table[a][b],
                        "quotient multiplication not well-defined"
                    );
                }
            }
        }
        Ok(QuotientGroup {
            parent_name: self.name.clone(),
            normal_name: normal.name.clone(),
            reps: cosets.reps,
            class_of: cosets.member_to_rep,
            table,
        })
    }

    /// Subgroup of `self` generated by the given element indices.
    pub fn subgroup(&self, gen_indices: &[usize], name: &str) -> Result<Group, GroupError> {
        let gens: Vec<GroupElement> =
            gen_indices.iter().map(|&i| self.elements[i].clone()).collect();
        Group::generate(gens, self.order() + 1, name)
    }

    /// Subgroup of `self` with exactly the given element set (must be closed).
    pub fn subgroup_from_elements(&self, members: &[usize], name: &str) -> Result<Group, GroupError> {
        let g = self.subgroup(members, name)?;
        if g.order() != members.len() {
            return Err(GroupError::NotASubgroup);
        }
        Ok(g)
    }
}

impl QuotientGroup {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// The quotient realized as a permutation matrix group over `ctx`
    /// (left translation on coset classes), so that representations of the
    /// quotient reuse the ordinary machinery.
    pub fn as_permutation_group(&self, ctx: &Arc<FieldCtx>) -> Result<Group, GroupError> {
        let m = self.len();
        let mut gens = Vec::new();
        for c in 0..m {
            let mut mat = Matrix::zeros(ctx, m, m);
            for d in 0..m {
                mat.set(self.table[c][d], d, ctx.one());
            }
            gens.push(GroupElement { matrix: mat });
        }
        Group::generate(gens, m + 1, &format!("{}/{}", self.parent_name, self.normal_name))
    }

    /// Index of the class of `g` (a parent element index) inside the
    /// permutation realization produced by `as_permutation_group`.
    pub fn class_index(&self, parent_idx: usize) -> usize {
        self.class_of[parent_idx]
    }

    /// The permutation matrix of a class inside `as_permutation_group`'s ctx.
    pub fn class_matrix(&self, ctx: &Arc<FieldCtx>, class: usize) -> Matrix {
        let m = self.len();
        let mut mat = Matrix::zeros(ctx, m, m);
        for d in 0..m {
            mat.set(self.table[class][d], d, ctx.one());
        }
        mat
    }
}

// ---------------------------------------------------------------------------
// Builders.

pub mod builders {
    use super::*;

    /// `SL_2(F_p)` from the standard transvection generators.
    pub fn sl2(ctx: &Arc<FieldCtx>) -> Result<Group, GroupError> {
        assert_eq!(ctx.k(), 1, "matrix groups are defined over the prime field");
        let p = ctx.p();
        let t = Matrix::from_ints(ctx, 2, 2, &[1, 1, 0, 1]);
        let s = Matrix::from_ints(ctx, 2, 2, &[0, -1, 1, 0]);
        let bound = (p * (p * p - 1)) as usize + 1;
        Group::generate(
            vec![GroupElement { matrix: t }, GroupElement { matrix: s }],
            bound,
            &format!("SL2(F{p})"),
        )
    }

    /// `GL_2(F_p)`: the SL2 generators plus `diag(g, 1)` for the least
    /// primitive root g.
    pub fn gl2(ctx: &Arc<FieldCtx>) -> Result<Group, GroupError> {
        assert_eq!(ctx.k(), 1);
        let p = ctx.p();
        let t = Matrix::from_ints(ctx, 2, 2, &[1, 1, 0, 1]);
        let s = Matrix::from_ints(ctx, 2, 2, &[0, -1, 1, 0]);
        let g = ctx.primitive();
        let mut d = Matrix::identity(ctx, 2);
        d.set(0, 0, g);
        let bound = ((p * p - 1) * (p * p - p)) as usize + 1;
        Group::generate(
            vec![
                GroupElement { matrix: t },
                GroupElement { matrix: s },
                GroupElement { matrix: d },
            ],
            bound,
            &format!("GL2(F{p})"),
        )
    }

    pub fn make_sl2(p: u64) -> Result<Group, GroupError> {
        let ctx = Arc::new(make_field(p, 1, None)?);
        sl2(&ctx)
    }

    pub fn make_gl2(p: u64) -> Result<Group, GroupError> {
        let ctx = Arc::new(make_field(p, 1, None)?);
        gl2(&ctx)
    }

    /// Both groups over one shared context, so subgroup relations hold.
    pub fn make_gl2_sl2(p: u64) -> Result<(Group, Group), GroupError> {
        let ctx = Arc::new(make_field(p, 1, None)?);
        Ok((gl2(&ctx)?, sl2(&ctx)?))
    }

    /// Permutations (image vectors on `0..n`) embedded as 0/1 matrices
    /// over `F_p`.
    pub fn from_permutations(
        ctx: &Arc<FieldCtx>,
        perms: &[Vec<usize>],
        n: usize,
        name: &str,
    ) -> Result<Group, GroupError> {
        let mut gens = Vec::new();
        for perm in perms {
            if perm.len() != n {
                return Err(GroupError::BadPermutation);
            }
            let mut seen = vec![false; n];
            for &img in perm {
                if img >= n || seen[img] {
                    return Err(GroupError::BadPermutation);
                }
                seen[img] = true;
            }
            let mut m = Matrix::zeros(ctx, n, n);
            for (j, &img) in perm.iter().enumerate() {
                m.set(img, j, ctx.one());
            }
            gens.push(GroupElement { matrix: m });
        }
        let mut bound = 1usize;
        for i in 2..=n {
            bound = bound.saturating_mul(i);
        }
        Group::generate(gens, bound + 1, name)
    }

    /// Cycle notation helper: `cycles` are disjoint cycles on `0..n`.
    pub fn perm_from_cycles(n: usize, cycles: &[&[usize]]) -> Vec<usize> {
        let mut img: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                img[cycle[w]] = cycle[(w + 1) % cycle.len()];
            }
        }
        img
    }
}

/// A named `(G, N, p)` test pair exercising the theorem hypotheses.
pub fn suite_pair(name: &str) -> Result<(Group, Group, u64), GroupError> {
    use builders::*;
    match name {
        "GL2F3/SL2F3" => {
            let (g, n) = make_gl2_sl2(3)?;
            Ok((g, n, 3))
        }
        "GL2F5/SL2F5" => {
            let (g, n) = make_gl2_sl2(5)?;
            Ok((g, n, 5))
        }
        "S4/A4" => {
            let ctx = Arc::new(make_field(2, 1, None)?);
            let s4 = from_permutations(
                &ctx,
                &[perm_from_cycles(4, &[&[0, 1]]), perm_from_cycles(4, &[&[0, 1, 2, 3]])],
                4,
                "S4",
            )?;
            let a4 = from_permutations(
                &ctx,
                &[perm_from_cycles(4, &[&[0, 1, 2]]), perm_from_cycles(4, &[&[0, 1], &[2, 3]])],
                4,
                "A4",
            )?;
            Ok((s4, a4, 2))
        }
        "A4/V4" => {
            let ctx = Arc::new(make_field(2, 1, None)?);
            let a4 = from_permutations(
                &ctx,
                &[perm_from_cycles(4, &[&[0, 1, 2]]), perm_from_cycles(4, &[&[0, 1], &[2, 3]])],
                4,
                "A4",
            )?;
            let v4 = from_permutations(
                &ctx,
                &[perm_from_cycles(4, &[&[0, 1], &[2, 3]]), perm_from_cycles(4, &[&[0, 2], &[1, 3]])],
                4,
                "V4",
            )?;
            Ok((a4, v4, 2))
        }
        "D8/C4" => {
            let ctx = Arc::new(make_field(2, 1, None)?);
            let d8 = from_permutations(
                &ctx,
                &[perm_from_cycles(4, &[&[0, 1, 2, 3]]), perm_from_cycles(4, &[&[0, 2]])],
                4,
                "D8",
            )?;
            let c4 = from_permutations(&ctx, &[perm_from_cycles(4, &[&[0, 1, 2, 3]])], 4, "C4")?;
            Ok((d8, c4, 2))
        }
        "C3xS3/S3" => {
            let ctx = Arc::new(make_field(3, 1, None)?);
            let g = from_permutations(
                &ctx,
                &[
                    perm_from_cycles(6, &[&[0, 1, 2]]),
                    perm_from_cycles(6, &[&[3, 4, 5]]),
                    perm_from_cycles(6, &[&[3, 4]]),
                ],
                6,
                "C3xS3",
            )?;
            let s3 = from_permutations(
                &ctx,
                &[perm_from_cycles(6, &[&[3, 4, 5]]), perm_from_cycles(6, &[&[3, 4]])],
                6,
                "S3",
            )?;
            Ok((g, s3, 3))
        }
        other => Err(GroupError::UnknownGroup(other.to_string())),
    }
}

pub const SUITE_PAIRS: &[&str] = &["GL2F3/SL2F3", "S4/A4", "A4/V4", "D8/C4", "C3xS3/S3"];

#[cfg(test)]
mod tests {
    use super::builders::*;
    use super::*;

    #[test]
    fn sl2_gl2_orders() {
        assert_eq!(make_sl2(3).unwrap().order(), 24);
        assert_eq!(make_gl2(3).unwrap().order(), 48);
        assert_eq!(make_sl2(5).unwrap().order(), 120);
        assert_eq!(make_gl2(5).unwrap().order(), 480);
    }

    #[test]
    fn trivial_group() {
        let ctx = Arc::new(make_field(3, 1, None).unwrap());
        let id = GroupElement { matrix: Matrix::identity(&ctx, 2) };
        let g = Group::generate(vec![id], 10, "1").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn s4_order_over_f2() {
        let ctx = Arc::new(make_field(2, 1, None).unwrap());
        let s4 = from_permutations(
            &ctx,
            &[perm_from_cycles(4, &[&[0, 1]]), perm_from_cycles(4, &[&[0, 1, 2, 3]])],
            4,
            "S4",
        )
        .unwrap();
        assert_eq!(s4.order(), 24);
    }

    #[test]
    fn conjugacy_class_sizes() {
        let (gl2, sl2) = make_gl2_sl2(3).unwrap();
        // class sizes partition the group and divide its order
        for g in [&gl2, &sl2] {
            let classes = g.conjugacy_classes();
            let total: usize = classes.iter().map(|c| c.members.len()).sum();
            assert_eq!(total, g.order());
            for c in &classes {
                assert_eq!(g.order() % c.members.len(), 0);
            }
        }
        // SL2(F3): the order-4 class (of c_4(z)) has size 6
        let sl2_classes = sl2.conjugacy_classes();
        let order4: Vec<_> =
            sl2_classes.iter().filter(|c| sl2.element_order(c.rep) == 4).collect();
        assert_eq!(order4.len(), 1);
        assert_eq!(order4[0].members.len(), 6);
        // GL2(F3): the class of c_3(1,-1) (order 2, size 12)
        let diag = Matrix::from_ints(gl2.ctx(), 2, 2, &[1, 0, 0, -1]);
        let didx = gl2.index_of(&diag).unwrap();
        let cls = gl2
            .conjugacy_classes()
            .into_iter()
            .find(|c| c.members.contains(&didx))
            .unwrap();
        assert_eq!(cls.members.len(), 12);
    }

    #[test]
    fn abelian_group_singleton_classes() {
        let ctx = Arc::new(make_field(2, 1, None).unwrap());
        let c4 = from_permutations(&ctx, &[perm_from_cycles(4, &[&[0, 1, 2, 3]])], 4, "C4").unwrap();
        assert!(c4.conjugacy_classes().iter().all(|c| c.members.len() == 1));
    }

    #[test]
    fn p_regular_class_counts() {
        let (gl2, sl2) = make_gl2_sl2(3).unwrap();
        assert_eq!(sl2.p_regular_classes(3).len(), 3);
        assert_eq!(gl2.p_regular_classes(3).len(), 6);
        // orders of SL2(F3) 3-regular reps: 1, 2, 4
        let mut orders: Vec<u64> =
            sl2.p_regular_classes(3).iter().map(|c| sl2.element_order(c.rep)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 4]);
        // a p-group at its own prime: only the identity class
        let ctx = Arc::new(make_field(2, 1, None).unwrap());
        let c4 = from_permutations(&ctx, &[perm_from_cycles(4, &[&[0, 1, 2, 3]])], 4, "C4").unwrap();
        assert_eq!(c4.p_regular_classes(2).len(), 1);
    }

    #[test]
    fn p_regular_counts_match_irreducible_counts_for_sl2_gl2() {
        for p in [3u64, 5] {
            let (gl2, sl2) = make_gl2_sl2(p).unwrap();
            assert_eq!(sl2.p_regular_classes(p).len() as u64, p);
            assert_eq!(gl2.p_regular_classes(p).len() as u64, p * (p - 1));
        }
    }

    #[test]
    fn normality() {
        let (gl2, sl2) = make_gl2_sl2(3).unwrap();
        assert!(gl2.is_normal(&sl2).unwrap());
        assert!(gl2.is_normal(&gl2).unwrap());
        // a 2-element subgroup of S3 is not normal
        let ctx = Arc::new(make_field(2, 1, None).unwrap());
        let s3 = from_permutations(
            &ctx,
            &[perm_from_cycles(3, &[&[0, 1]]), perm_from_cycles(3, &[&[0, 1, 2]])],
            3,
            "S3",
        )
        .unwrap();
        let two = from_permutations(&ctx, &[perm_from_cycles(3, &[&[0, 1]])], 3, "C2").unwrap();
        assert!(!s3.is_normal(&two).unwrap());
        // subgroup check failure
        let (gl5, _) = make_gl2_sl2(5).unwrap();
        assert_eq!(gl5.is_normal(&s3).unwrap_err(), GroupError::NotASubgroup);
    }

    #[test]
    fn coset_data() {
        let (gl2, sl2) = make_gl2_sl2(3).unwrap();
        let cosets = gl2.coset_reps(&sl2).unwrap();
        assert_eq!(cosets.reps.len(), 2);
        assert_eq!(cosets.reps[0], 0); // identity first
        // (rep, h) -> rep * h is a bijection onto G
        let mut hit = vec![false; gl2.order()];
        for &r in &cosets.reps {
            for h in sl2.elements() {
                let hidx = gl2.index_of(&h.matrix).unwrap();
                let m = gl2.mul_idx(r, hidx);
                assert!(!hit[m]);
                hit[m] = true;
            }
        }
        assert!(hit.iter().all(|&b| b));

        // H = G: one rep; H = 1: all of G
        let whole = gl2.coset_reps(&gl2).unwrap();
        assert_eq!(whole.reps, vec![0]);
        let triv = gl2.subgroup(&[0], "1").unwrap();
        assert_eq!(gl2.coset_reps(&triv).unwrap().reps.len(), gl2.order());
    }

    #[test]
    fn quotients() {
        let (gl2, sl2) = make_gl2_sl2(3).unwrap();
        let q = gl2.quotient(&sl2).unwrap();
        assert_eq!(q.len(), 2);
        // cyclic of order 2: nonidentity class squares to the identity class
        assert_eq!(q.table[1][1], 0);

        let qq = gl2.quotient(&gl2).unwrap();
        assert_eq!(qq.len(), 1);

        let triv = gl2.subgroup(&[0], "1").unwrap();
        let qg = gl2.quotient(&triv).unwrap();
        assert_eq!(qg.len(), gl2.order());

        // quotient by a non-normal subgroup errors
        let ctx = Arc::new(make_field(2, 1, None).unwrap());
        let s3 = from_permutations(
            &ctx,
            &[perm_from_cycles(3, &[&[0, 1]]), perm_from_cycles(3, &[&[0, 1, 2]])],
            3,
            "S3",
        )
        .unwrap();
        let two = from_permutations(&ctx, &[perm_from_cycles(3, &[&[0, 1]])], 3, "C2").unwrap();
        assert_eq!(s3.quotient(&two).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn quotient_as_permutation_group() {
        let (gl2, sl2) = make_gl2_sl2(3).unwrap();
        let q = gl2.quotient(&sl2).unwrap();
        let qg = q.as_permutation_group(gl2.ctx()).unwrap();
        assert_eq!(qg.order(), 2);
    }

    #[test]
    fn lagrange_spot_check() {
        for name in ["GL2F3/SL2F3", "S4/A4", "A4/V4", "D8/C4", "C3xS3/S3"] {
            let (g, n, _) = suite_pair(name).unwrap();
            assert!(g.contains_subgroup(&n), "{name}");
            assert!(g.is_normal(&n).unwrap(), "{name}");
            assert_eq!(g.order() % n.order(), 0, "{name}");
            for i in 0..g.order() {
                assert_eq!(g.order() as u64 % g.element_order(i), 0);
            }
        }
    }

    #[test]
    fn suite_pair_orders() {
        let expect = [
            ("GL2F3/SL2F3", 48, 24),
            ("S4/A4", 24, 12),
            ("A4/V4", 12, 4),
            ("D8/C4", 8, 4),
            ("C3xS3/S3", 18, 6),
        ];
        for (name, go, no) in expect {
            let (g, n, _) = suite_pair(name).unwrap();
            assert_eq!(g.order(), go, "{name}");
            assert_eq!(n.order(), no, "{name}");
        }
    }
}
