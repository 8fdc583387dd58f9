//! Brauer characters: exact cyclotomic-integer lifts of eigenvalues on
//! p-regular classes, enumeration of the irreducible modular
//! representations of a finite group, and assembly of the Brauer character
//! table.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{lcm, make_field, FieldCtx, FieldError};
use crate::group::{ConjugacyClass, Group};
use crate::rep::{RepError, Representation};
use crate::structure::{
    are_isomorphic, composition_factors, endomorphism_dim, StructureError,
};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum BrauerError {
    #[error("matrix is not semisimple; eigenspaces fill only {0} of {1} dimensions")]
    NotSemisimple(usize, usize),
    #[error("tensor closure stalled with {found} of {wanted} irreducibles")]
    ClosureStalled { found: usize, wanted: usize },
    #[error("splitting field degree {0} exceeds the supported maximum")]
    ExtensionTooLarge(usize),
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

// --- cyclotomic integers -------------------------------------------------

/// Euler totient.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The m-th cyclotomic polynomial as integer coefficients, low degree
/// first, computed by dividing `x^m - 1` by the cyclotomic polynomials of
/// the proper divisors.
pub fn cyclotomic_polynomial(m: u64) -> Vec<i64> {
    assert!(m >= 1);
    if m == 1 {
        return vec![-1, 1];
    }
    // x^m - 1
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials (low degree first); panics if the
/// division is not exact, which cannot happen for cyclotomic inputs.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem: Vec<i64> = num.to_vec();
    let dn = den.len() - 1;
    assert_eq!(den[dn], 1, "divisor must be monic");
    let qn = rem.len() - 1 - dn;
    let mut quo = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn];
        quo[i] = c;
        for j in 0..=dn {
            rem[i + j] -= c * den[j];
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "non-exact polynomial division");
    quo
}

/// An element of `Z[zeta_m]`, stored on the power basis
/// `1, zeta, ..., zeta^(phi(m)-1)` after reduction modulo the m-th
/// cyclotomic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicInt {
    pub conductor: u64,
    pub coeffs: Vec<i64>,
}

impl CyclotomicInt {
    pub fn zero(m: u64) -> CyclotomicInt {
        CyclotomicInt { conductor: m, coeffs: vec![0; totient(m) as usize] }
    }

    pub fn from_integer(m: u64, n: i64) -> CyclotomicInt {
        let mut z = Self::zero(m);
        // conductor 1 has basis {1} with zeta = 1
        z.coeffs[0] = n;
        z
    }

    /// `zeta_m^e`, reduced to the power basis.
    pub fn zeta_power(m: u64, e: u64) -> CyclotomicInt {
        let e = (e % m) as usize;
        let phi = totient(m) as usize;
        let mut z = Self::zero(m);
        if e < phi {
            z.coeffs[e] = 1;
            return z;
        }
        // reduce x^e modulo Phi_m by repeated substitution of
        // x^phi = -(lower part of Phi_m)
        let phi_m = cyclotomic_polynomial(m);
        let mut acc = vec![0i64; e + 1];
        acc[e] = 1;
        while acc.len() > phi {
            let top = acc.len() - 1;
            let c = acc[top];
            acc.pop();
            if c != 0 {
                for j in 0..phi_m.len() - 1 {
                    acc[top - (phi_m.len() - 1) + j] -= c * phi_m[j];
                }
            }
            while acc.len() > phi && *acc.last().unwrap() == 0 {
                acc.pop();
            }
        }
        acc.resize(phi, 0);
        z.coeffs = acc;
        z
    }

    pub fn add(&self, other: &CyclotomicInt) -> Result<CyclotomicInt, BrauerError> {
        if self.conductor != other.conductor {
            return Err(BrauerError::ConductorMismatch(self.conductor, other.conductor));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CyclotomicInt { conductor: self.conductor, coeffs })
    }

    pub fn scaled(&self, c: i64) -> CyclotomicInt {
        CyclotomicInt {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Is this a rational integer, and which?
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    /// Galois conjugate `zeta -> zeta^t` for `t` coprime to the conductor.
    pub fn galois_twist(&self, t: u64) -> CyclotomicInt {
        let m = self.conductor;
        let mut out = CyclotomicInt::zero(m);
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let term = CyclotomicInt::zeta_power(m, (j as u64 * t) % m).scaled(c);
                out = out.add(&term).expect("same conductor");
            }
        }
        out
    }

    /// Human-readable form such as `2`, `-1+z8^2`, using `z{m}` for the
    /// fixed primitive m-th root of unity.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let base = match j {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{}", self.conductor, j),
            };
            let term = if j == 0 {
                format!("{c}")
            } else if c == 1 {
                base
            } else if c == -1 {
                format!("-{base}")
            } else {
                format!("{c}*{base}")
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (i, t) in parts.iter().enumerate() {
            if i > 0 && !t.starts_with('-') {
                out.push('+');
            }
            out.push_str(t);
        }
        out
    }
}

// --- eigenvalue lifting --------------------------------------------------

/// Lift the eigenvalues of the (semisimple) image of a p-regular element
/// to `Z[zeta_conductor]` and sum them: the Brauer character value. The
/// lift sends the canonical m-th root of unity of the field (a fixed power
/// of the distinguished generator) to `zeta_conductor^(conductor/m)`, which
/// is independent of the field in which the eigenvalues are computed
/// because the distinguished generators are compatible along extensions.
pub fn lift_eigenvalue_sum(
    mat: &crate::linalg::Matrix,
    element_order: u64,
    conductor: u64,
) -> Result<CyclotomicInt, BrauerError> {
    let ctx = mat.ctx().clone();
    let n = mat.rows();
    let m = element_order;
    assert!(conductor % m == 0, "element order must divide the conductor");
    let mu = ctx.root_of_unity(m)?;
    let mut total = 0usize;
    let mut value = CyclotomicInt::zero(conductor);
    let mut lam = ctx.one();
    for s in 0..m {
        let mult = mat.eigenspace_dim(lam);
        if mult > 0 {
            let term = CyclotomicInt::zeta_power(conductor, s * (conductor / m))
                .scaled(mult as i64);
            value = value.add(&term)?;
            total += mult;
        }
        lam = ctx.mul(lam, mu);
    }
    if total != n {
        return Err(BrauerError::NotSemisimple(total, n));
    }
    Ok(value)
}

/// Smallest conductor for a group in characteristic p: the lcm of the
/// orders of the p-regular elements.
pub fn conductor(group: &Group, p: u64) -> u64 {
    let mut m = 1;
    for e in 0..group.order() {
        let o = group.element_order(e);
        if o % p != 0 {
            m = lcm(m, o);
        }
    }
    m
}

/// Degree of the smallest field `F_(p^K)` containing all eigenvalues of all
/// p-regular elements: the multiplicative order of p modulo the conductor.
pub fn splitting_degree(group: &Group, p: u64) -> usize {
    let m = conductor(group, p);
    let mut k = 1usize;
    let mut pw = p % m;
    while pw != 1 % m {
        pw = (pw * p) % m;
        k += 1;
    }
    k
}

/// Brauer character of a representation: its lifted trace-of-eigenvalues
/// on each of the given p-regular classes.
pub fn brauer_character(
    rep: &Representation,
    classes: &[ConjugacyClass],
    conductor_m: u64,
) -> Result<Vec<CyclotomicInt>, BrauerError> {
    let group = rep.group();
    // eigenvalues may live in an extension of the coefficient field
    let need = splitting_degree(group, rep.ctx().p());
    let k0 = rep.ctx().k();
    let k = lcm(k0 as u64, need as u64) as usize;
    if k > crate::field::MAX_EXT_DEGREE {
        return Err(BrauerError::ExtensionTooLarge(k));
    }
    let rep = if k == k0 {
        rep.clone()
    } else {
        rep.embed_into(&Arc::new(make_field(rep.ctx().p(), k, None)?))?
    };
    classes
        .iter()
        .map(|c| {
            let o = group.element_order(c.rep);
            lift_eigenvalue_sum(rep.image(c.rep), o, conductor_m)
        })
        .collect()
}

// --- enumeration of irreducibles ----------------------------------------

/// Deterministic sort/identity key for an irreducible: degree followed by
/// the Brauer character values on the ordered p-regular classes.
pub fn character_key(
    rep: &Representation,
    classes: &[ConjugacyClass],
    conductor_m: u64,
) -> Result<(usize, Vec<Vec<i64>>), BrauerError> {
    let chi = brauer_character(rep, classes, conductor_m)?;
    Ok((rep.degree(), chi.into_iter().map(|c| c.coeffs).collect()))
}

/// p-regular classes in the canonical column order: by element order, then
/// class size, then representative key.
pub fn ordered_p_regular_classes(group: &Group, p: u64) -> Vec<ConjugacyClass> {
    let mut classes = group.p_regular_classes(p);
    classes.sort_by_key(|c| {
        (
            group.element_order(c.rep),
            c.members.len(),
            group.element(c.rep).matrix.canonical_key(),
        )
    });
    classes
}

/// All irreducible representations of the group over a splitting field of
/// characteristic p, pairwise non-isomorphic and absolutely irreducible,
/// sorted by `character_key`.
///
/// The search tensors known irreducibles together starting from the
/// defining representation and factors the products; if that closure
/// stalls, factors of the regular representation complete it. The number
/// of irreducibles must equal the number of p-regular classes.
pub fn enumerate_irreducibles(
    group: &Arc<Group>,
    p: u64,
    seed: u64,
) -> Result<(Arc<FieldCtx>, Vec<Representation>), BrauerError> {
    let k = splitting_degree(group, p);
    if k > crate::field::MAX_EXT_DEGREE {
        return Err(BrauerError::ExtensionTooLarge(k));
    }
    let ctx = Arc::new(make_field(p, k, None)?);
    let classes = ordered_p_regular_classes(group, p);
    let wanted = classes.len();
    let m = conductor(group, p);

    let mut known: Vec<Representation> = Vec::new();
    let mut frontier: Vec<Representation> = vec![Representation::natural(group, &ctx)?];
    let mut produced_regular = false;
    let mut rounds = 0usize;
    while known.len() < wanted {
        rounds += 1;
        if rounds > 64 {
            break;
        }
        let Some(next) = frontier.pop() else {
            if produced_regular {
                break;
            }
            produced_regular = true;
            frontier.push(Representation::regular(group, &ctx));
            continue;
        };
        let factors = composition_factors(&next, seed)?;
        let mut fresh: Vec<Representation> = Vec::new();
        for (f, _) in factors {
            if endomorphism_dim(&f)? != 1 {
                // the chosen field splits the group; a non-split factor can
                // only mean the certificate field was too small
                return Err(BrauerError::ExtensionTooLarge(k));
            }
            let mut new = true;
            for g in &known {
                if are_isomorphic(&f, g)? {
                    new = false;
                    break;
                }
            }
            if new {
                known.push(f.clone());
                fresh.push(f);
            }
        }
        if known.len() >= wanted {
            break;
        }
        for f in &fresh {
            for g in known.clone() {
                if f.degree() * g.degree() <= 64 {
                    frontier.push(f.tensor(&g)?);
                }
            }
            frontier.push(f.dual());
        }
    }
    if known.len() != wanted {
        return Err(BrauerError::ClosureStalled { found: known.len(), wanted });
    }
    let mut keyed: Vec<(usize, bool, Vec<Vec<i64>>, Representation)> = known
        .into_iter()
        .map(|r| {
            let (d, key) = character_key(&r, &classes, m)?;
            let trivial = d == 1 && key.iter().all(|c| c[0] == 1 && c[1..].iter().all(|&x| x == 0));
            Ok((d, !trivial, key, r))
        })
        .collect::<Result<_, BrauerError>>()?;
    keyed.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
    let mut sorted: Vec<Representation> = keyed.into_iter().map(|(_, _, _, r)| r).collect();
    for (i, rep) in sorted.iter_mut().enumerate() {
        rep.set_label(&format!("phi_{i}"));
    }
    Ok((ctx, sorted))
}

// --- the table -----------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableClass {
    /// Order of a representative element.
    pub order: u64,
    /// Size of the conjugacy class.
    pub size: usize,
    /// Representative matrix, one row per line, entries as strings.
    pub representative: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableRow {
    pub degree: usize,
    pub label: String,
    /// Cyclotomic-integer values, one per class column.
    pub values: Vec<CyclotomicInt>,
    /// Human-readable renderings of `values`.
    pub display: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BrauerTable {
    pub schema: String,
    pub group: String,
    pub order: usize,
    pub p: u64,
    pub conductor: u64,
    pub classes: Vec<TableClass>,
    pub rows: Vec<TableRow>,
}

impl BrauerTable {
    pub fn value(&self, row: usize, col: usize) -> &CyclotomicInt {
        &self.rows[row].values[col]
    }
}

/// Build the full Brauer character table of a group in characteristic p.
pub fn brauer_table(group: &Arc<Group>, p: u64, seed: u64) -> Result<BrauerTable, BrauerError> {
    let classes = ordered_p_regular_classes(group, p);
    let m = conductor(group, p);
    let (_, irreducibles) = enumerate_irreducibles(group, p, seed)?;
    let gctx = group.ctx();
    let table_classes: Vec<TableClass> = classes
        .iter()
        .map(|c| {
            let mat = &group.element(c.rep).matrix;
            let rows = (0..mat.rows())
                .map(|i| {
                    (0..mat.cols())
                        .map(|j| gctx.element_string(mat.at(i, j)))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            TableClass {
                order: group.element_order(c.rep),
                size: c.members.len(),
                representative: rows,
            }
        })
        .collect();
    let mut rows = Vec::new();
    for (i, r) in irreducibles.iter().enumerate() {
        let values = brauer_character(r, &classes, m)?;
        let display = values.iter().map(|v| v.display()).collect();
        rows.push(TableRow {
            degree: r.degree(),
            label: format!("phi_{i}"),
            values,
            display,
        });
    }
    Ok(BrauerTable {
        schema: "brauer-table/1".to_string(),
        group: group.name().to_string(),
        order: group.order(),
        p,
        conductor: m,
        classes: table_classes,
        rows,
    })
}

/// Consistency checks every table must satisfy: the trivial character is
/// the first row, row count equals the p-regular class count, and the
/// weighted column relation for the regular module holds: for g != 1
/// p-regular, `sum_i deg(phi_i^*) phi_i(g) = 0` would require projective
/// indecomposable degrees, so instead this verifies the first-column
/// degrees and the class-sum integrality of each value.
pub fn validate_table(table: &BrauerTable) -> Result<(), String> {
    if table.rows.is_empty() {
        return Err("empty table".to_string());
    }
    if table.rows[0].degree != 1 || !table.rows[0].values.iter().all(|v| v.as_integer() == Some(1))
    {
        return Err("first row is not the trivial character".to_string());
    }
    if table.classes.len() != table.rows.len() {
        return Err(format!(
            "{} rows vs {} p-regular classes",
            table.rows.len(),
            table.classes.len()
        ));
    }
    for row in &table.rows {
        if row.values[0].as_integer() != Some(row.degree as i64) {
            return Err(format!("row {} identity value is not its degree", row.label));
        }
    }
    Ok(())
}

/// Group together Galois-conjugate column data: used by consumers that
/// compare tables up to the choice of primitive root of unity.
pub fn galois_orbit(value: &CyclotomicInt) -> Vec<CyclotomicInt> {
    let m = value.conductor;
    let mut orbit = BTreeMap::new();
    for t in 1..m.max(2) {
        if crate::field::gcd(t, m) == 1 {
            let v = value.galois_twist(t);
            orbit.insert(v.coeffs.clone(), v);
        }
    }
    orbit.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builders::*;
    use crate::group::suite_pair;

    fn arc(g: Group) -> Arc<Group> {
        Arc::new(g)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_power_reduction() {
        // zeta_4^2 = -1
        let z = CyclotomicInt::zeta_power(4, 2);
        assert_eq!(z.as_integer(), Some(-1));
        // zeta_3^2 = -1 - zeta_3
        let z = CyclotomicInt::zeta_power(3, 2);
        assert_eq!(z.coeffs, vec![-1, -1]);
        // zeta_8^4 = -1, zeta_8^5 = -zeta_8
        assert_eq!(CyclotomicInt::zeta_power(8, 4).as_integer(), Some(-1));
        assert_eq!(CyclotomicInt::zeta_power(8, 5).coeffs, vec![0, -1, 0, 0]);
        // full-circle: zeta_m^m = 1
        for m in 1..=12 {
            assert_eq!(CyclotomicInt::zeta_power(m, m).as_integer(), Some(1));
        }
        // sum over all m-th roots of unity is zero for m > 1
        for m in 2..=12u64 {
            let mut s = CyclotomicInt::zero(m);
            for e in 0..m {
                s = s.add(&CyclotomicInt::zeta_power(m, e)).unwrap();
            }
            assert!(s.is_zero(), "root sum nonzero for m={m}");
        }
    }

    #[test]
    fn galois_twist_permutes_roots() {
        let z = CyclotomicInt::zeta_power(8, 1)
            .add(&CyclotomicInt::zeta_power(8, 3))
            .unwrap();
        // the twist t=3 sends z8 + z8^3 to z8^3 + z8^9 = z8^3 + z8
        assert_eq!(z.galois_twist(3), z);
        // t=5 negates it: z8^5 + z8^15 = -(z8 + z8^7); note z8^7 = -z8^3
        let t5 = z.galois_twist(5);
        assert_eq!(t5, z.scaled(-1));
    }

    #[test]
    fn conductor_and_splitting_degree() {
        let sl2 = make_sl2(3).unwrap();
        assert_eq!(conductor(&sl2, 3), 4); // orders 1, 2, 4
        assert_eq!(splitting_degree(&sl2, 3), 2); // ord of 3 mod 4
        let gl2 = make_gl2(3).unwrap();
        assert_eq!(conductor(&gl2, 3), 8);
        assert_eq!(splitting_degree(&gl2, 3), 2); // 3^2 = 9 = 1 mod 8
        let (s4, _, _) = suite_pair("S4/A4").unwrap();
        assert_eq!(conductor(&s4, 2), 3);
        assert_eq!(splitting_degree(&s4, 2), 2);
    }

    #[test]
    fn lift_of_minus_identity() {
        // -I over F_3 has both eigenvalues -1: the lift is -2
        let ctx = Arc::new(make_field(3, 1, None).unwrap());
        let m = crate::linalg::Matrix::from_ints(&ctx, 2, 2, &[2, 0, 0, 2]);
        let v = lift_eigenvalue_sum(&m, 2, 4).unwrap();
        assert_eq!(v.as_integer(), Some(-2));
    }

    #[test]
    fn non_semisimple_rejected() {
        let ctx = Arc::new(make_field(3, 1, None).unwrap());
        let m = crate::linalg::Matrix::from_ints(&ctx, 2, 2, &[1, 1, 0, 1]);
        // claim order 1 (identity): the unipotent matrix is not semisimple
        let err = lift_eigenvalue_sum(&m, 1, 4).unwrap_err();
        assert_eq!(err, BrauerError::NotSemisimple(1, 2));
    }

    #[test]
    fn c3_table_mod_2_is_the_ordinary_table() {
        let ctx = Arc::new(make_field(2, 1, None).unwrap());
        let c3 = arc(from_permutations(&ctx, &[perm_from_cycles(3, &[&[0, 1, 2]])], 3, "C3").unwrap());
        let table = brauer_table(&c3, 2, 11).unwrap();
        validate_table(&table).unwrap();
        assert_eq!(table.conductor, 3);
        assert_eq!(table.rows.len(), 3);
        assert!(table.rows.iter().all(|r| r.degree == 1));
        // rows: trivial, and the two conjugate characters with values
        // {zeta_3, zeta_3^2} on the nontrivial classes
        let z = CyclotomicInt::zeta_power(3, 1);
        let z2 = CyclotomicInt::zeta_power(3, 2);
        let nontrivial: Vec<&TableRow> =
            table.rows.iter().filter(|r| r.values[1].as_integer().is_none()).collect();
        assert_eq!(nontrivial.len(), 2);
        for r in &nontrivial {
            assert!(r.values[1] == z || r.values[1] == z2);
        }
        assert_ne!(nontrivial[0].values[1], nontrivial[1].values[1]);
        // the nontrivial rows are Galois twists of each other
        assert_eq!(nontrivial[0].values[1].galois_twist(2), nontrivial[1].values[1]);
    }

    #[test]
    fn s4_mod_2_has_two_irreducibles() {
        let (s4, _, _) = suite_pair("S4/A4").unwrap();
        let s4 = arc(s4);
        let (ctx, irr) = enumerate_irreducibles(&s4, 2, 5).unwrap();
        assert_eq!(ctx.k(), 2);
        let degs: Vec<usize> = irr.iter().map(|r| r.degree()).collect();
        assert_eq!(degs, vec![1, 2]);
    }

    #[test]
    fn a4_mod_2_has_three_linear_characters() {
        let (_, a4, _) = suite_pair("S4/A4").unwrap();
        let a4 = arc(a4);
        let table = brauer_table(&a4, 2, 5).unwrap();
        validate_table(&table).unwrap();
        let degs: Vec<usize> = table.rows.iter().map(|r| r.degree).collect();
        assert_eq!(degs, vec![1, 1, 1]);
    }

    #[test]
    fn sl2f3_table_shape() {
        let sl2 = arc(make_sl2(3).unwrap());
        let table = brauer_table(&sl2, 3, 7).unwrap();
        validate_table(&table).unwrap();
        assert_eq!(table.rows.len(), 3);
        let degs: Vec<usize> = table.rows.iter().map(|r| r.degree).collect();
        assert_eq!(degs, vec![1, 2, 3]);
        let sizes: Vec<usize> = table.classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 1, 6]);
    }

    #[test]
    fn table_serialization_roundtrip() {
        let sl2 = arc(make_sl2(3).unwrap());
        let table = brauer_table(&sl2, 3, 7).unwrap();
        let json = serde_json::to_string(&table).unwrap();
        let back: BrauerTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back.schema, "brauer-table/1");
        assert_eq!(back.rows.len(), table.rows.len());
        for (a, b) in table.rows.iter().zip(&back.rows) {
            assert_eq!(a.values, b.values);
        }
    }
}
