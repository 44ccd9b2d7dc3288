//! The relation families: classical ζ_n and q_g, deformed R_g and ζ̃_n, the
//! ideals I_g and J_g they generate, and the structural checks relating
//! them.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::floerring::build_quotient;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::memo::Memo;
use crate::poly::{Assignment, Polynomial, Var};
use crate::scalars::{Matrix, Scalar, Solution};

/// The size of the deformation: the Floer relations shift β by ±8.
pub const DEFORMATION: i64 = 8;

/// Three relations of weighted degrees 2g, 2g+2, 2g+4 (top components).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationTriple {
    pub genus: u32,
    pub relations: [Polynomial; 3],
}

impl RelationTriple {
    pub fn generators(&self) -> &[Polynomial] {
        &self.relations
    }

    /// Degrees of the leading components, `(2g, 2g+2, 2g+4)`.
    pub fn expected_degrees(genus: u32) -> [u32; 3] {
        [2 * genus, 2 * genus + 2, 2 * genus + 4]
    }
}

fn sign(r: u32) -> i64 {
    if r.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// ζ-type recursion
/// `z_{r+1} = α z_r + r² (β + shift(r)) z_{r−1} + 2r(r−1) γ z_{r−2}`, `z_0 = 1`.
fn zeta_family(n: u32, shift: impl Fn(u32) -> i64) -> Polynomial {
    let (a, b, g) = (Polynomial::alpha(), Polynomial::beta(), Polynomial::gamma());
    let mut zs: Vec<Polynomial> = vec![Polynomial::one()];
    for r in 0..n {
        let ru = r as usize;
        let mut next = &a * &zs[ru];
        if r >= 1 {
            let coeff = &b + &Polynomial::from(shift(r));
            next = &next + &(&coeff * &zs[ru - 1]).scale(&Scalar::from_int(i64::from(r * r)));
        }
        if r >= 2 {
            next = &next + &(&g * &zs[ru - 2]).scale(&Scalar::from_int(i64::from(2 * r * (r - 1))));
        }
        zs.push(next);
    }
    zs.pop().expect("nonempty")
}

/// Classical ζ_n: `ζ_{n+1} = α ζ_n + n² β ζ_{n−1} + 2n(n−1) γ ζ_{n−2}`.
pub fn classical_zeta(n: u32) -> Polynomial {
    zeta_family(n, |_| 0)
}

/// Deformed ζ̃_n: `ζ̃_{r+1} = α ζ̃_r + r² (β + (−1)^r 8) ζ̃_{r−1} + 2r(r−1) γ ζ̃_{r−2}`.
pub fn deformed_zeta(n: u32) -> Polynomial {
    zeta_family(n, |r| sign(r) * DEFORMATION)
}

/// Runs the three-term recursion from `(1, 0, 0)` with caller-supplied
/// constants `c_{r+1}`, `d_{r+1}`:
///
/// ```text
/// R¹_{r+1} = α R¹_r + r² R²_r
/// R²_{r+1} = (β + c_{r+1}) R¹_r + 2r/(r+1) R³_r
/// R³_{r+1} = γ R¹_r + d_{r+1} R²_r
/// ```
pub fn triple_recursion(genus: u32, c: impl Fn(u32) -> Scalar, d: impl Fn(u32) -> Scalar) -> RelationTriple {
    let (a, b, g) = (Polynomial::alpha(), Polynomial::beta(), Polynomial::gamma());
    let mut r = [Polynomial::one(), Polynomial::zero(), Polynomial::zero()];
    for step in 0..genus {
        let next1 = &(&a * &r[0]) + &r[1].scale(&Scalar::from_int(i64::from(step * step)));
        let next2 = &(&(&b + &Polynomial::constant(c(step + 1))) * &r[0])
            + &r[2].scale(&Scalar::from_ratio(i64::from(2 * step), i64::from(step + 1)));
        let next3 = &(&g * &r[0]) + &r[1].scale(&d(step + 1));
        r = [next1, next2, next3];
    }
    RelationTriple { genus, relations: r }
}

/// The recursion with `c_r = (−1)^r · epsilon`, `d_r = 0`. `epsilon = 8`
/// gives the Floer relations, `epsilon = 0` the classical ones.
pub fn deformed_triple(genus: u32, epsilon: i64) -> RelationTriple {
    triple_recursion(genus, |r| Scalar::from_int(sign(r) * epsilon), |_| Scalar::zero())
}

/// `R_g = (R¹_g, R²_g, R³_g)`, generators of J_g. `g = 0` is `(1, 0, 0)`.
#[allow(non_snake_case)]
pub fn floer_R(genus: u32) -> RelationTriple {
    deformed_triple(genus, DEFORMATION)
}

/// `q_g = (q¹_g, q²_g, q³_g)`, generators of I_g, from `q_1 = (α, β, γ)`.
pub fn classical_q(genus: u32) -> Result<RelationTriple> {
    if genus == 0 {
        return Err(Error::GenusOutOfRange { genus, reason: "classical relations start at genus 1" });
    }
    let (a, b, g) = (Polynomial::alpha(), Polynomial::beta(), Polynomial::gamma());
    let mut q = [a.clone(), b.clone(), g.clone()];
    for n in 1..genus {
        let next1 = &(&a * &q[0]) + &q[1].scale(&Scalar::from_int(i64::from(n * n)));
        let next2 = &(&b * &q[0]) + &q[2].scale(&Scalar::from_ratio(i64::from(2 * n), i64::from(n + 1)));
        let next3 = &g * &q[0];
        q = [next1, next2, next3];
    }
    Ok(RelationTriple { genus, relations: q })
}

/// The closed forms of q_g in terms of ζ:
/// `q¹ = ζ_g`, `q² = (ζ_{g+1} − α ζ_g)/g²`,
/// `q³ = (ζ_{g+2} − α ζ_{g+1} − (g+1)² β ζ_g)/(2g(g+1))`.
pub fn classical_q_closed_form(genus: u32) -> Result<[Polynomial; 3]> {
    if genus == 0 {
        return Err(Error::GenusOutOfRange { genus, reason: "classical relations start at genus 1" });
    }
    let (a, b) = (Polynomial::alpha(), Polynomial::beta());
    let z = [classical_zeta(genus), classical_zeta(genus + 1), classical_zeta(genus + 2)];
    let g = i64::from(genus);
    let q2 = (&z[1] - &(&a * &z[0])).scale(&Scalar::from_ratio(1, g * g));
    let q3 = (&(&z[2] - &(&a * &z[1])) - &(&b * &z[0]).scale(&Scalar::from_int((g + 1) * (g + 1))))
        .scale(&Scalar::from_ratio(1, 2 * g * (g + 1)));
    Ok([z[0].clone(), q2, q3])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    Classical,
    Floer,
}

/// A relation triple together with the reduced basis of its ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealFamily {
    pub kind: IdealKind,
    pub genus: u32,
    pub triple: RelationTriple,
    pub basis: GroebnerBasis,
}

impl IdealFamily {
    pub fn quotient_dim(&self) -> Result<usize> {
        self.basis.quotient_dim()
    }
}

static FLOER_IDEALS: Memo<Arc<IdealFamily>> = Memo::new();
static CLASSICAL_IDEALS: Memo<Arc<IdealFamily>> = Memo::new();

/// `J_g = (R¹_g, R²_g, R³_g)`; `J_0` is the unit ideal. Cached per genus.
pub fn ideal_j(genus: u32) -> Arc<IdealFamily> {
    FLOER_IDEALS.get_or_init(genus, || {
        let triple = floer_R(genus);
        let basis = buchberger(triple.generators());
        Arc::new(IdealFamily { kind: IdealKind::Floer, genus, triple, basis })
    })
}

/// `I_g = (q¹_g, q²_g, q³_g)`, `g ≥ 1`. Cached per genus.
pub fn ideal_i(genus: u32) -> Result<Arc<IdealFamily>> {
    let triple = classical_q(genus)?;
    Ok(CLASSICAL_IDEALS.get_or_init(genus, || {
        let basis = buchberger(triple.generators());
        Arc::new(IdealFamily { kind: IdealKind::Classical, genus, triple, basis })
    }))
}

/// `dim ℂ[α,β,γ]/J_g`.
pub fn floer_quotient_dim(genus: u32) -> Result<usize> {
    ideal_j(genus).quotient_dim()
}

/// Basis of `(z_g, z_{g+1}, z_{g+2})` for the classical or deformed ζ.
pub fn zeta_ideal(genus: u32, kind: IdealKind) -> GroebnerBasis {
    let z = |n| match kind {
        IdealKind::Classical => classical_zeta(n),
        IdealKind::Floer => deformed_zeta(n),
    };
    buchberger(&[z(genus), z(genus + 1), z(genus + 2)])
}

/// `I_g = (ζ_g, ζ_{g+1}, ζ_{g+2})`.
pub fn classical_ideal_equality(genus: u32) -> Result<bool> {
    Ok(ideal_i(genus)?.basis == zeta_ideal(genus, IdealKind::Classical))
}

/// `J_g = (ζ̃_g, ζ̃_{g+1}, ζ̃_{g+2})`.
pub fn deformed_ideal_equality(genus: u32) -> bool {
    ideal_j(genus).basis == zeta_ideal(genus, IdealKind::Floer)
}

/// Checks that each `R^i_g` is `q^i_g` plus components whose weighted
/// degrees are strictly lower and congruent to `deg q^i_g` mod 4.
pub fn verify_deformation_shape(genus: u32) -> Result<bool> {
    let q = classical_q(genus)?;
    let r = floer_R(genus);
    let degrees = RelationTriple::expected_degrees(genus);
    Ok((0..3).all(|i| {
        let top = degrees[i];
        let q_parts = q.relations[i].weighted_components();
        if q_parts.len() != 1 || !q_parts.contains_key(&top) {
            return false;
        }
        let parts = r.relations[i].weighted_components();
        parts.get(&top) == Some(&q.relations[i])
            && parts.keys().all(|&d| d == top || (d < top && (top - d).is_multiple_of(4)))
    }))
}

/// `J_{g+1} ⊂ J_g` and `γ J_g ⊂ J_{g+1}`, by generator membership.
pub fn verify_inclusions(genus: u32) -> bool {
    let here = ideal_j(genus);
    let next = ideal_j(genus + 1);
    let gamma = Polynomial::gamma();
    next.triple.generators().iter().all(|p| here.basis.contains(p))
        && here.triple.generators().iter().all(|p| next.basis.contains(&(&gamma * p)))
}

/// `γ^g ∈ J_g`.
pub fn gamma_power_in_ideal(genus: u32) -> bool {
    ideal_j(genus).basis.contains(&Polynomial::gamma().pow(genus))
}

/// `R¹_g = ζ̃_g` as polynomials.
pub fn first_relation_is_deformed_zeta(genus: u32) -> bool {
    floer_R(genus).relations[0] == deformed_zeta(genus)
}

/// Switching off the deformation recovers the classical relations.
pub fn classical_degeneration(genus: u32) -> Result<bool> {
    Ok(deformed_triple(genus, 0).relations == classical_q(genus)?.relations)
}

pub fn classical_closed_forms_hold(genus: u32) -> Result<bool> {
    Ok(classical_q_closed_form(genus)? == classical_q(genus)?.relations)
}

/// `ζ̄_r`: ζ̃_r with γ set to zero.
pub fn bar_zeta(n: u32) -> Polynomial {
    deformed_zeta(n).specialize(&Assignment::new().set(Var::Gamma, Scalar::zero()))
}

/// `ζ̂_r`: ζ̃_r with β = 8 and γ = 0.
pub fn hat_zeta(n: u32) -> Polynomial {
    deformed_zeta(n)
        .specialize(&Assignment::new().set(Var::Beta, Scalar::from_int(DEFORMATION)).set(Var::Gamma, Scalar::zero()))
}

/// Product form of ζ̂_r: `(α² + (r−1)²·16)···(α² + 2²·16)·α` for odd r and
/// `(α² + (r−2)²·16)···(α² + 2²·16)·α²` for even r.
pub fn hat_zeta_product_form(r: u32) -> Polynomial {
    if r == 0 {
        return Polynomial::one();
    }
    let a = Polynomial::alpha();
    let (mut acc, top) = if r % 2 == 1 { (a.clone(), r - 1) } else { (&a * &a, r - 2) };
    let mut k = 2;
    while k <= top {
        acc = &acc * &(&(&a * &a) + &Polynomial::from(i64::from(k * k) * 16));
        k += 2;
    }
    acc
}

/// `(β + (−1)^g 8)(β + (−1)^{g−1} 8)···(β − 8) ∈ (ζ̄_g, ζ̄_{g+1})`.
pub fn beta_product_in_bar_ideal(genus: u32) -> bool {
    let product = (1..=genus)
        .fold(Polynomial::one(), |acc, k| &acc * &(&Polynomial::beta() + &Polynomial::from(sign(k) * DEFORMATION)));
    buchberger(&[bar_zeta(genus), bar_zeta(genus + 1)]).contains(&product)
}

/// The α-eigenvalue of the extreme joint eigenvector in genus `g + 1`:
/// `4g` for odd g, `4g·√−1` for even g.
pub fn extreme_alpha_eigenvalue(genus: u32) -> Scalar {
    let x = Scalar::from_int(4 * i64::from(genus));
    if genus % 2 == 1 {
        x
    } else {
        &x * &Scalar::i()
    }
}

/// Recovers `(c_{g+1}, d_{g+1})` of the three-term recursion.
///
/// Finds `v` in `ℂ[α,β,γ]/J_{g+1}` with `γv = 0`, `βv = (−1)^g·8·v` and
/// `αv` equal to [`extreme_alpha_eigenvalue`], then solves
/// `0 = R²_{g+1} v = (β + c) R¹_g v + 2g/(g+1) R³_g v` and
/// `0 = R³_{g+1} v = γ R¹_g v + d R²_g v` for `c` and `d`.
pub fn recover_recursion_constants(genus: u32) -> Result<(Scalar, Scalar)> {
    if genus == 0 {
        return Err(Error::GenusOutOfRange { genus, reason: "constants are recovered from genus 1 upward" });
    }
    let algebra = build_quotient(genus + 1)?;
    let [ma, mb, mg] = algebra.operators();
    let mu = Scalar::from_int(sign(genus) * DEFORMATION);
    let lambda = extreme_alpha_eigenvalue(genus);
    let stacked = Matrix::vstack(&[mg, &mb.shifted(&mu)?, &ma.shifted(&lambda)?])?;
    let kernel = stacked.kernel();
    let v = kernel
        .first()
        .ok_or_else(|| Error::Falsified(format!("no joint eigenvector ({lambda}, {mu}, 0) in genus {}", genus + 1)))?;

    let r = floer_R(genus);
    let r1v = algebra.apply(&r.relations[0], v)?;
    let r2v = algebra.apply(&r.relations[1], v)?;
    let r3v = algebra.apply(&r.relations[2], v)?;
    let g = i64::from(genus);
    let weight = Scalar::from_ratio(2 * g, g + 1);

    let rhs_c: Vec<Scalar> = mb.mul_vec(&r1v)?.iter().zip(&r3v).map(|(x, y)| -(x + &(&weight * y))).collect();
    let rhs_d: Vec<Scalar> = mg.mul_vec(&r1v)?.iter().map(|x| -x).collect();
    let c = solve_single(&r1v, &rhs_c, "c")?;
    let d = solve_single(&r2v, &rhs_d, "d")?;
    Ok((c, d))
}

/// Solves `x · column = rhs` for a scalar `x`, demanding a unique answer.
fn solve_single(column: &[Scalar], rhs: &[Scalar], name: &str) -> Result<Scalar> {
    if column.iter().all(Scalar::is_zero) {
        return Err(Error::Falsified(format!("eigenvector does not determine {name}")));
    }
    let a = Matrix::from_columns(column.len(), &[column.to_vec()])?;
    match a.solve(rhs)? {
        Solution::Found(x) => Ok(x.into_iter().next().expect("one unknown")),
        Solution::Inconsistent => Err(Error::Falsified(format!("inconsistent system for {name}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Polynomial {
        Polynomial::alpha()
    }
    fn b() -> Polynomial {
        Polynomial::beta()
    }
    fn g() -> Polynomial {
        Polynomial::gamma()
    }
    fn c(n: i64) -> Polynomial {
        Polynomial::from(n)
    }

    #[test]
    fn classical_zeta_examples() {
        assert_eq!(classical_zeta(0), c(1));
        assert_eq!(classical_zeta(1), a());
        assert_eq!(classical_zeta(2), a() * a() + b());
        assert_eq!(classical_zeta(3), a().pow(3) + c(5) * a() * b() + c(4) * g());
    }

    #[test]
    fn deformed_zeta_examples() {
        assert_eq!(deformed_zeta(1), a());
        assert_eq!(deformed_zeta(2), a() * a() + b() - c(8));
        assert_eq!(deformed_zeta(3), a().pow(3) + c(5) * a() * b() + c(24) * a() + c(4) * g());
    }

    #[test]
    fn classical_q_examples() {
        assert_eq!(classical_q(1).unwrap().relations, [a(), b(), g()]);
        assert_eq!(classical_q(2).unwrap().relations[0], a() * a() + b());
        assert!(classical_q(0).is_err());
        for genus in 1..=8 {
            assert_eq!(classical_q(genus).unwrap().relations[0], classical_zeta(genus));
        }
    }

    #[test]
    fn floer_relation_examples() {
        assert_eq!(floer_R(0).relations, [c(1), Polynomial::zero(), Polynomial::zero()]);
        assert_eq!(floer_R(1).relations, [a(), b() - c(8), g()]);
        assert_eq!(floer_R(2).relations, [a() * a() + b() - c(8), a() * (b() + c(8)) + g(), a() * g()]);
        assert_eq!(floer_R(3).relations[0], a().pow(3) + c(5) * a() * b() + c(24) * a() + c(4) * g());
    }

    #[test]
    fn relations_have_rational_coefficients_and_expected_degrees() {
        for genus in 1..=6 {
            let r = floer_R(genus);
            let degrees = RelationTriple::expected_degrees(genus);
            for (p, d) in r.relations.iter().zip(degrees) {
                assert!(p.has_real_coefficients());
                assert_eq!(p.weighted_degree(), Some(d));
            }
        }
    }

    #[test]
    fn unit_ideal_at_genus_zero() {
        assert!(ideal_j(0).basis.is_unit());
        assert_eq!(floer_quotient_dim(0).unwrap(), 0);
    }

    #[test]
    fn quotient_dimensions_are_tetrahedral() {
        let dims: Vec<usize> = (1..=6).map(|g| floer_quotient_dim(g).unwrap()).collect();
        assert_eq!(dims, vec![1, 4, 10, 20, 35, 56]);
    }

    #[test]
    fn ideal_presentations_agree() {
        for genus in 1..=5 {
            assert!(deformed_ideal_equality(genus), "genus {genus}");
            assert!(classical_ideal_equality(genus).unwrap(), "genus {genus}");
        }
    }

    #[test]
    fn deformation_shape() {
        for genus in [1, 2, 4] {
            assert!(verify_deformation_shape(genus).unwrap());
        }
        assert!(verify_deformation_shape(0).is_err());
    }

    #[test]
    fn inclusions() {
        // γ·R¹_1 is R³_2 itself
        assert_eq!(&g() * &floer_R(1).relations[0], floer_R(2).relations[2]);
        assert!(verify_inclusions(1));
        assert!(verify_inclusions(2));
        for genus in 1..=5 {
            assert!(gamma_power_in_ideal(genus));
        }
        // J_2 ⊄ J_3: the inclusion is strict
        assert!(!ideal_j(3).basis.contains(&floer_R(2).relations[0]));
    }

    #[test]
    fn cross_checks() {
        for genus in 1..=6 {
            assert!(first_relation_is_deformed_zeta(genus));
            assert!(classical_degeneration(genus).unwrap());
            assert!(classical_closed_forms_hold(genus).unwrap(), "genus {genus}");
            assert!(beta_product_in_bar_ideal(genus), "genus {genus}");
        }
    }

    #[test]
    fn hat_zeta_closed_form() {
        assert_eq!(hat_zeta_product_form(3), a() * (a() * a() + c(64)));
        assert_eq!(hat_zeta_product_form(4), a() * a() * (a() * a() + c(64)));
        for r in 0..=9 {
            assert_eq!(hat_zeta(r), hat_zeta_product_form(r), "r = {r}");
        }
    }

    #[test]
    fn recovered_constants() {
        assert_eq!(recover_recursion_constants(1).unwrap(), (Scalar::from_int(8), Scalar::zero()));
        assert_eq!(recover_recursion_constants(2).unwrap(), (Scalar::from_int(-8), Scalar::zero()));
        assert_eq!(recover_recursion_constants(3).unwrap(), (Scalar::from_int(8), Scalar::zero()));
        assert!(recover_recursion_constants(0).is_err());
    }
}
