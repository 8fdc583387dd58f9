//! Module-theoretic structure analysis: intertwiner (hom) spaces,
//! irreducibility testing via the Meataxe with a Norton-style certificate,
//! composition series, multiplicities in semisimple modules, and splitting
//! field escalation.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{FieldCtx, FieldElement, FieldError};
use crate::linalg::Matrix;
use crate::rep::{RepError, Representation};

/// Number of random algebra elements tried before giving up on a
/// certificate.
pub const MEATAXE_BUDGET: usize = 200;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum StructureError {
    #[error("no irreducibility certificate found after {0} random algebra elements")]
    InconclusiveAfterBudget(usize),
    #[error("module is not absolutely irreducible over the current field (End dimension {0})")]
    NotAbsolutelyIrreducible(usize),
    #[error("representations are over different groups")]
    GroupMismatch,
    #[error("representations are over different field contexts")]
    ContextMismatch,
    #[error("no splitting field found within the extension-degree ladder")]
    SplittingFieldNotFound,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// The space `Hom_G(rho, tau)` of intertwiners `X` with
/// `X rho(g) = tau(g) X`, as a basis of `tau.degree x rho.degree` matrices.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub dim: usize,
    pub basis: Vec<Matrix>,
}

/// Compute `Hom_G(rho, tau)` by solving the intertwiner system on the
/// group's generators.
pub fn hom_space(rho: &Representation, tau: &Representation) -> Result<HomSpace, StructureError> {
    if !rho.same_group(tau) {
        return Err(StructureError::GroupMismatch);
    }
    if rho.ctx().id() != tau.ctx().id() {
        return Err(StructureError::ContextMismatch);
    }
    let ctx = rho.ctx();
    let m = rho.degree();
    let n = tau.degree();
    let gens = rho.group().gens().to_vec();
    let unknowns = n * m; // entries of X, row-major
    let mut sys = Matrix::zeros(ctx, gens.len() * unknowns + 1, unknowns);
    let mut row = 0usize;
    for &g in &gens {
        let r = rho.image(g);
        let t = tau.image(g);
        // constraint (i, j): sum_a t[i,a] X[a,j] - sum_b X[i,b] r[b,j] = 0
        for i in 0..n {
            for j in 0..m {
                for a in 0..n {
                    let cur = sys.at(row, a * m + j);
                    sys.set(row, a * m + j, ctx.add(cur, t.at(i, a)));
                }
                for b in 0..m {
                    let cur = sys.at(row, i * m + b);
                    sys.set(row, i * m + b, ctx.sub(cur, r.at(b, j)));
                }
                row += 1;
            }
        }
    }
    let kernel = sys.kernel_basis();
    let basis: Vec<Matrix> = kernel
        .iter()
        .map(|v| {
            let mut x = Matrix::zeros(ctx, n, m);
            for i in 0..n {
                for j in 0..m {
                    x.set(i, j, v[i * m + j]);
                }
            }
            x
        })
        .collect();
    Ok(HomSpace { dim: basis.len(), basis })
}

/// `dim End_G(rho)`.
pub fn endomorphism_dim(rho: &Representation) -> Result<usize, StructureError> {
    Ok(hom_space(rho, rho)?.dim)
}

/// Are two representations isomorphic? For arbitrary modules this tests for
/// an invertible intertwiner inside `Hom(rho, tau)` by trying basis elements
/// and a few deterministic combinations.
pub fn are_isomorphic(rho: &Representation, tau: &Representation) -> Result<bool, StructureError> {
    if rho.degree() != tau.degree() {
        return Ok(false);
    }
    let hom = hom_space(rho, tau)?;
    if hom.dim == 0 {
        return Ok(false);
    }
    for x in &hom.basis {
        if x.inverse().is_some() {
            return Ok(true);
        }
    }
    // search low-height combinations; for semisimple multiplicity-free
    // situations the basis elements themselves already decide the question
    let ctx = rho.ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(0x11);
    for _ in 0..64 {
        let mut cand = Matrix::zeros(ctx, tau.degree(), rho.degree());
        for x in &hom.basis {
            let c = ctx.unpack(rng.gen_range(0..ctx.order()));
            cand = cand.add(&x.scale(c));
        }
        if cand.inverse().is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

// --- spinning ------------------------------------------------------------

/// Echelonized invariant-subspace builder: spin `seed` under the images of
/// the group generators. Returns an RREF basis of the generated submodule
/// as matrix rows.
fn spin(seed: &[FieldElement], gen_images: &[Matrix], ctx: &Arc<FieldCtx>) -> Matrix {
    let n = seed.len();
    // echelon basis keyed by pivot column
    let mut pivots: Vec<Option<Vec<FieldElement>>> = vec![None; n];
    let mut queue: Vec<Vec<FieldElement>> = vec![seed.to_vec()];
    let reduce = |v: &mut Vec<FieldElement>, pivots: &Vec<Option<Vec<FieldElement>>>| {
        for col in 0..n {
            if v[col].is_zero() {
                continue;
            }
            if let Some(b) = &pivots[col] {
                let c = v[col];
                for j in col..n {
                    v[j] = ctx.sub(v[j], ctx.mul(c, b[j]));
                }
            }
        }
    };
    while let Some(mut v) = queue.pop() {
        reduce(&mut v, &pivots);
        let Some(col) = (0..n).find(|&j| !v[j].is_zero()) else { continue };
        let inv = ctx.inv(v[col]);
        for j in col..n {
            v[j] = ctx.mul(v[j], inv);
        }
        for img in gen_images {
            let mut w = vec![ctx.zero(); n];
            for i in 0..n {
                for j in 0..n {
                    if !v[j].is_zero() {
                        w[i] = ctx.add(w[i], ctx.mul(img.at(i, j), v[j]));
                    }
                }
            }
            queue.push(w);
        }
        pivots[col] = Some(v);
    }
    let rows: Vec<Vec<FieldElement>> = pivots.into_iter().flatten().collect();
    if rows.is_empty() {
        return Matrix::zeros(ctx, 0, n);
    }
    let (r, rank, _) = crate::linalg::from_rows(ctx, &rows).rref();
    Matrix::from_fn(ctx, rank, n, |i, j| r.at(i, j))
}

/// Outcome of a Meataxe run.
#[derive(Debug, Clone)]
pub enum MeataxeOutcome {
    /// Certified irreducible.
    Irreducible,
    /// A proper nonzero submodule, as an RREF basis of row vectors.
    Reducible(Matrix),
}

/// One representative vector per projective line of the span of `basis`,
/// or `None` if there are more than `cap` lines. Representatives have their
/// first nonzero coefficient (with respect to `basis`) equal to 1.
fn lines_of_span(
    basis: &[Vec<FieldElement>],
    ctx: &Arc<FieldCtx>,
    cap: u128,
) -> Option<Vec<Vec<FieldElement>>> {
    let d = basis.len();
    let q = ctx.order() as u128;
    let mut count: u128 = 1;
    for _ in 0..d {
        count = count.checked_mul(q)?;
        if (count - 1) / (q - 1) > cap {
            return None;
        }
    }
    let count = (count - 1) / (q - 1);
    if count > cap {
        return None;
    }
    let n = basis[0].len();
    let mut out = Vec::with_capacity(count as usize);
    let mut coeffs = vec![0u64; d];
    loop {
        // next tuple in base q
        let mut i = 0;
        while i < d {
            coeffs[i] += 1;
            if coeffs[i] == ctx.order() {
                coeffs[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
        if i == d {
            break;
        }
        let first = coeffs.iter().position(|&c| c != 0).unwrap();
        if coeffs[first] != 1 {
            continue;
        }
        let mut v = vec![ctx.zero(); n];
        for (c, b) in coeffs.iter().zip(basis) {
            if *c != 0 {
                let ce = ctx.unpack(*c);
                for j in 0..n {
                    v[j] = ctx.add(v[j], ctx.mul(ce, b[j]));
                }
            }
        }
        out.push(v);
    }
    Some(out)
}

/// Line counts below this bound trigger exhaustive spinning, which is
/// deterministic and complete.
const BRUTE_FORCE_LINES: u128 = 1024;
/// Kernel-line enumeration bound in the randomized certificate.
const KERNEL_LINES: u128 = 256;

/// Meataxe irreducibility test.
///
/// For small modules every projective line is spun: the module is
/// irreducible exactly when every spin fills the space. Otherwise random
/// group-algebra elements are drawn; each singular candidate `tau` (the
/// element itself or an eigenvalue shift of it) yields a Norton-style
/// certificate: any proper kernel-line spin exhibits a submodule, while all
/// kernel-line spins full plus one dual-kernel vector dual-spinning full
/// certifies irreducibility (a submodule missing the kernel would lie in
/// the image of `tau`, contradicting the dual spin).
pub fn meataxe(
    rep: &Representation,
    seed: u64,
    budget: usize,
) -> Result<MeataxeOutcome, StructureError> {
    let n = rep.degree();
    let ctx = rep.ctx();
    if n == 1 {
        return Ok(MeataxeOutcome::Irreducible);
    }
    let group = rep.group();
    let gens = group.gens().to_vec();
    let gen_images: Vec<Matrix> = gens.iter().map(|&g| rep.image(g).clone()).collect();
    let dual_gen_images: Vec<Matrix> = gens
        .iter()
        .map(|&g| rep.image(group.inv_idx(g)).transpose())
        .collect();

    // exhaustive path: spin every line of the module
    let std_basis: Vec<Vec<FieldElement>> = (0..n)
        .map(|i| {
            let mut e = vec![ctx.zero(); n];
            e[i] = ctx.one();
            e
        })
        .collect();
    if let Some(lines) = lines_of_span(&std_basis, ctx, BRUTE_FORCE_LINES) {
        for v in lines {
            let sub = spin(&v, &gen_images, ctx);
            if sub.rows() < n {
                return Ok(MeataxeOutcome::Reducible(sub));
            }
        }
        return Ok(MeataxeOutcome::Irreducible);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        // random element of the group algebra image
        let mut theta = Matrix::zeros(ctx, n, n);
        let terms = rng.gen_range(2..=5);
        for _ in 0..terms {
            let x = rng.gen_range(0..group.order());
            let c = ctx.unpack(rng.gen_range(1..ctx.order()));
            theta = theta.add(&rep.image(x).scale(c));
        }
        // singular candidates: theta - lambda*I over all scalars lambda
        // (lambda = 0 first); eigenvalue shifts matter over larger fields
        // where a random algebra element is rarely singular
        let scalar_range = if ctx.order() <= 256 { ctx.order() } else { 1 };
        let mut candidates_left = 3;
        for lam in 0..scalar_range {
            if candidates_left == 0 {
                break;
            }
            let tau = if lam == 0 {
                theta.clone()
            } else {
                let le = ctx.unpack(lam);
                theta.sub(&Matrix::identity(ctx, n).scale(le))
            };
            let kernel = tau.kernel_basis();
            if kernel.is_empty() || kernel.len() == n {
                continue;
            }
            let Some(lines) = lines_of_span(&kernel, ctx, KERNEL_LINES) else {
                continue;
            };
            candidates_left -= 1;
            for v in &lines {
                let sub = spin(v, &gen_images, ctx);
                if sub.rows() < n {
                    return Ok(MeataxeOutcome::Reducible(sub));
                }
            }
            // dual side: a proper dual submodule U gives the proper
            // submodule ann(U) on the original side
            let dual_kernel = tau.transpose().kernel_basis();
            let Some(u) = dual_kernel.first() else { continue };
            let dual_sub = spin(u, &dual_gen_images, ctx);
            if dual_sub.rows() == n {
                return Ok(MeataxeOutcome::Irreducible);
            }
            if dual_sub.rows() > 0 {
                let ann = dual_sub.kernel_basis();
                if !ann.is_empty() {
                    let (r, rank, _) = crate::linalg::from_rows(ctx, &ann).rref();
                    if rank > 0 && rank < n {
                        return Ok(MeataxeOutcome::Reducible(
                            Matrix::from_fn(ctx, rank, n, |i, j| r.at(i, j)),
                        ));
                    }
                }
            }
        }
    }
    Err(StructureError::InconclusiveAfterBudget(budget))
}

/// Certified irreducibility test (deterministic for a fixed seed).
pub fn is_irreducible(rep: &Representation, seed: u64) -> Result<bool, StructureError> {
    match meataxe(rep, seed, MEATAXE_BUDGET)? {
        MeataxeOutcome::Irreducible => Ok(true),
        MeataxeOutcome::Reducible(_) => Ok(false),
    }
}

/// Extract the submodule and quotient representations determined by an
/// invariant subspace given as RREF basis rows.
fn split_along(
    rep: &Representation,
    sub_basis: &Matrix,
) -> Result<(Representation, Representation), StructureError> {
    let n = rep.degree();
    let w = sub_basis.rows();
    let ctx = rep.ctx();
    // change of basis: columns = submodule basis vectors then a complement
    // of standard basis vectors
    let pivot_cols: Vec<usize> = {
        let (_, _, pivots) = sub_basis.rref();
        pivots
    };
    let mut cols: Vec<Vec<FieldElement>> = Vec::with_capacity(n);
    for i in 0..w {
        cols.push((0..n).map(|j| sub_basis.at(i, j)).collect());
    }
    for j in 0..n {
        if !pivot_cols.contains(&j) {
            let mut e = vec![ctx.zero(); n];
            e[j] = ctx.one();
            cols.push(e);
        }
    }
    let c = Matrix::from_fn(ctx, n, n, |i, j| cols[j][i]);
    let cinv = c.inverse().expect("basis extension is invertible");
    let group = rep.group();
    let mut sub_images = Vec::with_capacity(group.order());
    let mut quo_images = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let conj = cinv.mul(rep.image(g)).mul(&c);
        // invariance forces block upper-triangular shape [[A, B], [0, D]]
        let a = Matrix::from_fn(ctx, w, w, |i, j| conj.at(i, j));
        let d = Matrix::from_fn(ctx, n - w, n - w, |i, j| conj.at(w + i, w + j));
        sub_images.push(a);
        quo_images.push(d);
    }
    let sub = Representation::from_image_table(group, ctx, sub_images, &format!("sub[{}]", rep.label()))?;
    let quo = Representation::from_image_table(group, ctx, quo_images, &format!("quo[{}]", rep.label()))?;
    Ok((sub, quo))
}

/// A deterministic, isomorphism-invariant sort key: degree, then the
/// canonical bytes of the traces at the conjugacy class representatives.
pub fn trace_key(rep: &Representation) -> (usize, Vec<u8>) {
    let ctx = rep.ctx();
    let mut bytes = Vec::new();
    for class in rep.group().conjugacy_classes() {
        let t = rep.image(class.rep);
        let mut tr = ctx.zero();
        for i in 0..t.rows() {
            tr = ctx.add(tr, t.at(i, i));
        }
        bytes.extend_from_slice(&ctx.pack(tr).to_be_bytes());
    }
    (rep.degree(), bytes)
}

/// Composition factors with multiplicities, deterministically ordered by
/// `trace_key`. The factors are pairwise non-isomorphic.
pub fn composition_factors(
    rep: &Representation,
    seed: u64,
) -> Result<Vec<(Representation, usize)>, StructureError> {
    let mut pending = vec![rep.clone()];
    let mut factors: Vec<Representation> = Vec::new();
    while let Some(r) = pending.pop() {
        if r.degree() == 0 {
            continue;
        }
        match meataxe(&r, seed, MEATAXE_BUDGET)? {
            MeataxeOutcome::Irreducible => factors.push(r),
            MeataxeOutcome::Reducible(basis) => {
                let (sub, quo) = split_along(&r, &basis)?;
                pending.push(sub);
                pending.push(quo);
            }
        }
    }
    // group by isomorphism
    let mut grouped: Vec<(Representation, usize)> = Vec::new();
    'outer: for f in factors {
        for (g, count) in grouped.iter_mut() {
            if are_isomorphic(&f, g)? {
                *count += 1;
                continue 'outer;
            }
        }
        grouped.push((f, 1));
    }
    grouped.sort_by_key(|(f, _)| trace_key(f));
    Ok(grouped)
}

/// Multiplicity of an absolutely irreducible `irr` in a semisimple `rep`,
/// computed as `dim Hom(irr, rep)`. Errors if `End(irr)` is larger than the
/// scalars.
pub fn multiplicity_in_semisimple(
    rep: &Representation,
    irr: &Representation,
) -> Result<usize, StructureError> {
    let e = endomorphism_dim(irr)?;
    if e != 1 {
        return Err(StructureError::NotAbsolutelyIrreducible(e));
    }
    Ok(hom_space(irr, rep)?.dim)
}

/// Composition factors with multiplicities.
pub type Factorization = Vec<(Representation, usize)>;

/// Extension-degree ladder used when escalating to a splitting field.
pub const EXTENSION_LADDER: [usize; 7] = [1, 2, 3, 4, 6, 8, 12];

/// Factor `rep` over the smallest ladder field (an extension of its current
/// coefficient field) over which every composition factor is absolutely
/// irreducible. Returns the field together with the factors.
pub fn split_over_splitting_field(
    rep: &Representation,
    seed: u64,
) -> Result<(Arc<FieldCtx>, Factorization), StructureError> {
    let p = rep.ctx().p();
    let k0 = rep.ctx().k();
    for &k in EXTENSION_LADDER.iter() {
        if k % k0 != 0 {
            continue;
        }
        let ctx = if k == k0 {
            Arc::clone(rep.ctx())
        } else {
            Arc::new(crate::field::make_field(p, k, None)?)
        };
        let r = if k == k0 { rep.clone() } else { rep.embed_into(&ctx)? };
        let factors = composition_factors(&r, seed)?;
        let mut all_split = true;
        for (f, _) in &factors {
            if endomorphism_dim(f)? != 1 {
                all_split = false;
                break;
            }
        }
        if all_split {
            return Ok((ctx, factors));
        }
    }
    Err(StructureError::SplittingFieldNotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::group::builders::*;
    use crate::group::{suite_pair, Group};

    fn arc(g: Group) -> Arc<Group> {
        Arc::new(g)
    }

    #[test]
    fn natural_sl2_is_irreducible() {
        let sl2 = arc(make_sl2(3).unwrap());
        let ctx = sl2.ctx().clone();
        let nat = Representation::natural(&sl2, &ctx).unwrap();
        assert!(is_irreducible(&nat, 7).unwrap());
        assert_eq!(endomorphism_dim(&nat).unwrap(), 1);
    }

    #[test]
    fn regular_rep_of_p_group_in_char_p_is_uniserial() {
        // C3 over F_3: the regular representation has a unique composition
        // series with three trivial factors
        let ctx = Arc::new(make_field(3, 1, None).unwrap());
        let c3 = arc(from_permutations(&ctx, &[perm_from_cycles(3, &[&[0, 1, 2]])], 3, "C3").unwrap());
        let reg = Representation::regular(&c3, &ctx);
        let factors = composition_factors(&reg, 1).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].0.degree(), 1);
        assert_eq!(factors[0].1, 3);
        assert!(factors[0].0.image(1).is_identity());
    }

    #[test]
    fn direct_sum_factors_recovered() {
        let sl2 = arc(make_sl2(3).unwrap());
        let ctx = sl2.ctx().clone();
        let nat = Representation::natural(&sl2, &ctx).unwrap();
        let triv = Representation::trivial(&sl2, &ctx);
        let sum = nat.direct_sum(&triv).unwrap().direct_sum(&nat).unwrap();
        let factors = composition_factors(&sum, 3).unwrap();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].0.degree(), 1);
        assert_eq!(factors[0].1, 1);
        assert_eq!(factors[1].0.degree(), 2);
        assert_eq!(factors[1].1, 2);
        assert!(are_isomorphic(&factors[1].0, &nat).unwrap());
    }

    #[test]
    fn hom_space_schur() {
        let sl2 = arc(make_sl2(3).unwrap());
        let ctx = sl2.ctx().clone();
        let nat = Representation::natural(&sl2, &ctx).unwrap();
        let triv = Representation::trivial(&sl2, &ctx);
        assert_eq!(hom_space(&nat, &triv).unwrap().dim, 0);
        assert_eq!(hom_space(&triv, &nat).unwrap().dim, 0);
        assert_eq!(hom_space(&nat, &nat).unwrap().dim, 1);
        // hom into a direct sum adds up
        let sum = nat.direct_sum(&nat).unwrap();
        assert_eq!(hom_space(&nat, &sum).unwrap().dim, 2);
    }

    #[test]
    fn intertwiners_actually_intertwine() {
        let sl2 = arc(make_sl2(3).unwrap());
        let ctx = sl2.ctx().clone();
        let nat = Representation::natural(&sl2, &ctx).unwrap();
        let sum = nat.direct_sum(&nat).unwrap();
        let hom = hom_space(&nat, &sum).unwrap();
        for x in &hom.basis {
            for g in 0..sl2.order() {
                assert_eq!(x.mul(nat.image(g)), sum.image(g).mul(x));
            }
        }
    }

    #[test]
    fn conjugated_rep_is_isomorphic() {
        let sl2 = arc(make_sl2(3).unwrap());
        let ctx = sl2.ctx().clone();
        let nat = Representation::natural(&sl2, &ctx).unwrap();
        let p = Matrix::from_ints(&ctx, 2, 2, &[1, 1, 0, 1]);
        let twisted = nat.conjugate_by_basis(&p);
        assert!(are_isomorphic(&nat, &twisted).unwrap());
        assert!(!are_isomorphic(&nat, &Representation::trivial(&sl2, &ctx)).unwrap());
    }

    #[test]
    fn meataxe_determinism() {
        let (s4, a4, _) = suite_pair("S4/A4").unwrap();
        let (s4, _a4) = (arc(s4), arc(a4));
        let ctx = s4.ctx().clone();
        let nat = Representation::natural(&s4, &ctx).unwrap();
        let f1 = composition_factors(&nat, 42).unwrap();
        let f2 = composition_factors(&nat, 42).unwrap();
        assert_eq!(f1.len(), f2.len());
        for ((a, ma), (b, mb)) in f1.iter().zip(&f2) {
            assert_eq!(ma, mb);
            assert_eq!(trace_key(a), trace_key(b));
        }
    }

    #[test]
    fn s4_permutation_module_mod_2() {
        // the degree-4 permutation module of S4 over F_2 has factors
        // trivial (twice) and the 2-dimensional simple
        let (s4, _, _) = suite_pair("S4/A4").unwrap();
        let s4 = arc(s4);
        let ctx = s4.ctx().clone();
        let nat = Representation::natural(&s4, &ctx).unwrap();
        let factors = composition_factors(&nat, 9).unwrap();
        let degs: Vec<(usize, usize)> =
            factors.iter().map(|(f, m)| (f.degree(), *m)).collect();
        assert_eq!(degs, vec![(1, 2), (2, 1)]);
        assert!(is_irreducible(&factors[1].0, 9).unwrap());
    }

    #[test]
    fn splitting_field_escalation_for_a4_mod_2() {
        // over F_2 the regular module of C3 <= A4 needs F_4 to split: the
        // 2-dimensional factor has End of dimension 2 over F_2
        let ctx = Arc::new(make_field(2, 1, None).unwrap());
        let c3 = arc(from_permutations(&ctx, &[perm_from_cycles(3, &[&[0, 1, 2]])], 3, "C3").unwrap());
        let reg = Representation::regular(&c3, &ctx);
        let factors = composition_factors(&reg, 5).unwrap();
        let two_dim = factors.iter().find(|(f, _)| f.degree() == 2).unwrap();
        assert_eq!(endomorphism_dim(&two_dim.0).unwrap(), 2);
        assert_eq!(
            multiplicity_in_semisimple(&reg, &two_dim.0).unwrap_err(),
            StructureError::NotAbsolutelyIrreducible(2)
        );

        let (sctx, sfactors) = split_over_splitting_field(&reg, 5).unwrap();
        assert_eq!(sctx.k(), 2);
        // over F_4: trivial and the two nontrivial linear characters
        assert_eq!(sfactors.len(), 3);
        assert!(sfactors.iter().all(|(f, m)| f.degree() == 1 && *m == 1));
    }

    #[test]
    fn nakayama_reciprocity_dimensions() {
        // dim Hom_G(Ind sigma, theta) = dim Hom_N(sigma, Res theta) and the
        // mirror-image identity, across the built-in pairs
        for name in ["GL2F3/SL2F3", "S4/A4", "C3xS3/S3"] {
            let (g, n, p) = suite_pair(name).unwrap();
            let (g, n) = (arc(g), arc(n));
            let k = if p == 2 { 2 } else { 1 };
            let ctx = Arc::new(make_field(p, k, None).unwrap());
            let sigma = Representation::natural(&n, &ctx).unwrap();
            let theta = Representation::natural(&g, &ctx).unwrap();
            let ind = sigma.induce(&g).unwrap();
            let res = theta.restrict(&n).unwrap();
            assert_eq!(
                hom_space(&ind, &theta).unwrap().dim,
                hom_space(&sigma, &res).unwrap().dim,
                "first form fails for {name}"
            );
            assert_eq!(
                hom_space(&theta, &ind).unwrap().dim,
                hom_space(&res, &sigma).unwrap().dim,
                "second form fails for {name}"
            );
        }
    }
}
