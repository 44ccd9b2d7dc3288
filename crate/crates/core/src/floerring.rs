//! The finite-dimensional algebra ℂ[α,β,γ]/J_g as three commuting
//! multiplication operators, its joint spectrum and its splitting into
//! local artinian summands.
//!
//! Spectra are not computed by factoring characteristic polynomials.
//! Instead every candidate eigenvalue triple `(4i or 4i√−1, (−1)^i 8, 0)`,
//! `|i| ≤ g−1`, is tested, and completeness is certified by showing that
//! the product of the shifted operator powers vanishes exactly.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::memo::Memo;
use crate::par;
use crate::poly::{Monomial, Polynomial, Var};
use crate::relations::{self, DEFORMATION};
use crate::scalars::{Matrix, Scalar};

/// `ℂ[α,β,γ]/J` in the standard-monomial basis.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    genus: u32,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ideal: GroebnerBasis,
    operators: [Matrix; 3],
}

impl QuotientAlgebra {
    /// Builds the algebra for an arbitrary zero-dimensional ideal.
    pub fn from_groebner(genus: u32, ideal: GroebnerBasis) -> Result<Self> {
        let basis = ideal.standard_monomials()?;
        let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let dim = basis.len();
        let mut algebra = QuotientAlgebra {
            genus,
            basis,
            index,
            ideal,
            operators: [Matrix::zeros(dim, dim), Matrix::zeros(dim, dim), Matrix::zeros(dim, dim)],
        };
        let ops: Vec<Matrix> = Var::ALL
            .iter()
            .map(|&v| {
                let x = Monomial::var(v);
                let columns = par::map(&algebra.basis, |m| algebra.coordinates(&Polynomial::monomial(x.mul(m))));
                Matrix::from_columns(dim, &columns)
            })
            .collect::<Result<_>>()?;
        let [a, b, c]: [Matrix; 3] = ops.try_into().expect("three generators");
        algebra.operators = [a, b, c];
        Ok(algebra)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn ideal(&self) -> &GroebnerBasis {
        &self.ideal
    }

    /// `[M_α, M_β, M_γ]`.
    pub fn operators(&self) -> [&Matrix; 3] {
        [&self.operators[0], &self.operators[1], &self.operators[2]]
    }

    pub fn operator(&self, v: Var) -> &Matrix {
        &self.operators[v as usize]
    }

    /// Coordinates of the class of `p` in the standard-monomial basis.
    pub fn coordinates(&self, p: &Polynomial) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (m, c) in self.ideal.normal_form(p).terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// The action of `p` on a coordinate vector.
    pub fn apply(&self, p: &Polynomial, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (m, c) in p.terms() {
            let mut w = v.to_vec();
            for var in Var::ALL {
                for _ in 0..m.exp(var) {
                    w = self.operator(var).mul_vec(&w)?;
                }
            }
            for (o, x) in out.iter_mut().zip(&w) {
                *o += &(c * x);
            }
        }
        Ok(out)
    }

    pub fn operators_commute(&self) -> Result<bool> {
        let [a, b, c] = self.operators();
        for (x, y) in [(a, b), (a, c), (b, c)] {
            if x.mul(y)? != y.mul(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

static QUOTIENTS: Memo<Result<Arc<QuotientAlgebra>>> = Memo::new();

/// `(HF*_g)_I = ℂ[α,β,γ]/J_g`. Cached per genus.
pub fn build_quotient(genus: u32) -> Result<Arc<QuotientAlgebra>> {
    if genus == 0 {
        return Err(Error::GenusOutOfRange { genus, reason: "the genus-0 quotient is the zero ring" });
    }
    QUOTIENTS.get_or_init(genus, || {
        QuotientAlgebra::from_groebner(genus, relations::ideal_j(genus).basis.clone()).map(Arc::new)
    })
}

/// One candidate joint eigenvalue `(α, β, γ)` with its index `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    #[serde(rename = "i")]
    pub index: i32,
    #[serde(rename = "eig")]
    pub eigenvalues: [Scalar; 3],
}

/// `α = 4i` for odd i, `4i√−1` for even i; `β = (−1)^i 8`; `γ = 0`.
pub fn candidate_eigenvalues(index: i32) -> [Scalar; 3] {
    let four_i = Scalar::from_int(4 * i64::from(index));
    let alpha = if index % 2 != 0 { four_i } else { &four_i * &Scalar::i() };
    let beta = Scalar::from_int(if index % 2 == 0 { DEFORMATION } else { -DEFORMATION });
    [alpha, beta, Scalar::zero()]
}

/// Candidates for `i = −(g−1), …, g−1`.
pub fn candidates(genus: u32) -> Vec<Candidate> {
    let top = genus as i32 - 1;
    (-top..=top).map(|index| Candidate { index, eigenvalues: candidate_eigenvalues(index) }).collect()
}

/// `ker P^k` for the least `k` at which the chain `ker P ⊆ ker P² ⊆ …`
/// stops growing. This equals `ker P^N` for every `N ≥ k`, in particular
/// `N = dim`. Each step solves `P v ∈ ker P^j` directly, so elimination
/// only ever sees `P` and the previous basis, never a power of `P`.
#[derive(Clone, Debug)]
struct GeneralizedKernel {
    basis: Vec<Vec<Scalar>>,
    exponent: u32,
}

fn generalized_kernel(p: &Matrix) -> Result<GeneralizedKernel> {
    let n = p.cols();
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    let mut exponent = 0;
    while basis.len() < n {
        let next: Vec<Vec<Scalar>> = if basis.is_empty() {
            p.kernel()
        } else {
            let minus_b: Vec<Vec<Scalar>> = basis.iter().map(|v| v.iter().map(|x| -x.clone()).collect()).collect();
            let aug = p.hstack(&Matrix::from_columns(n, &minus_b)?)?;
            aug.kernel()
                .into_iter()
                .map(|mut v| {
                    v.truncate(n);
                    v
                })
                .collect()
        };
        if next.len() == basis.len() {
            break;
        }
        basis = Matrix::from_rows(next)?.row_space_basis();
        exponent += 1;
    }
    Ok(GeneralizedKernel { basis, exponent })
}

/// Canonical basis of `U ∩ W` given bases of `U` and `W`.
fn intersect(u: &[Vec<Scalar>], w: &[Vec<Scalar>], n: usize) -> Result<Vec<Vec<Scalar>>> {
    if u.is_empty() || w.is_empty() {
        return Ok(Vec::new());
    }
    let minus_w: Vec<Vec<Scalar>> = w.iter().map(|v| v.iter().map(|x| -x.clone()).collect()).collect();
    let aug = Matrix::from_columns(n, u)?.hstack(&Matrix::from_columns(n, &minus_w)?)?;
    let mut out = Vec::new();
    for coeffs in aug.kernel() {
        let mut v = vec![Scalar::zero(); n];
        for (c, b) in coeffs.iter().zip(u) {
            if !c.is_zero() {
                for (x, y) in v.iter_mut().zip(b) {
                    *x += &(c * y);
                }
            }
        }
        out.push(v);
    }
    if out.is_empty() {
        return Ok(out);
    }
    Ok(Matrix::from_rows(out)?.row_space_basis())
}

/// Whether `v` lies in the span of a basis in reduced row echelon form.
fn in_echelon_span(v: &[Scalar], basis: &[Vec<Scalar>]) -> bool {
    let mut r = v.to_vec();
    for b in basis {
        let pivot = b.iter().position(|x| !x.is_zero()).expect("nonzero basis vector");
        let c = r[pivot].clone();
        if !c.is_zero() {
            for (x, y) in r.iter_mut().zip(b) {
                *x -= &(&c * y);
            }
        }
    }
    r.iter().all(Scalar::is_zero)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    #[serde(flatten)]
    pub candidate: Candidate,
    pub dim: usize,
}

/// Exponents used in the annihilation certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub alpha_exponents: Vec<u32>,
    pub beta_exponents: [u32; 2],
    pub gamma_exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub genus: u32,
    pub entries: Vec<SpectrumEntry>,
    pub certified: bool,
    pub certificate: Certificate,
}

struct Analysis {
    report: SpectrumReport,
    kernels: Vec<Vec<Vec<Scalar>>>,
}

/// `Π (M − λ_j)^{k_j}` over the given shifts and exponents.
fn certificate_product(m: &Matrix, factors: &[(&Scalar, u32)]) -> Result<Matrix> {
    factors.iter().try_fold(Matrix::identity(m.rows()), |acc, (lambda, k)| acc.mul(&m.shifted(lambda)?.pow(*k)?))
}

fn analyze(a: &QuotientAlgebra) -> Result<Analysis> {
    let n = a.dim();
    let [ma, mb, mg] = a.operators();
    let cands = candidates(a.genus());
    let alpha: Vec<GeneralizedKernel> =
        par::map(&cands, |c| ma.shifted(&c.eigenvalues[0]).and_then(|m| generalized_kernel(&m)))
            .into_iter()
            .collect::<Result<_>>()?;
    let betas = [Scalar::from_int(DEFORMATION), Scalar::from_int(-DEFORMATION)];
    let beta: Vec<GeneralizedKernel> = par::map(&betas, |mu| mb.shifted(mu).and_then(|m| generalized_kernel(&m)))
        .into_iter()
        .collect::<Result<_>>()?;
    let gamma = generalized_kernel(mg)?;

    let zero = Scalar::zero();
    let alpha_factors: Vec<(&Scalar, u32)> =
        cands.iter().zip(&alpha).map(|(c, k)| (&c.eigenvalues[0], k.exponent)).collect();
    let beta_factors = [(&betas[0], beta[0].exponent), (&betas[1], beta[1].exponent)];
    let checks = [
        ("α", ma, alpha_factors.as_slice()),
        ("β", mb, beta_factors.as_slice()),
        ("γ", mg, &[(&zero, gamma.exponent)][..]),
    ];
    let vanishing = par::map(&checks, |(_, m, f)| certificate_product(m, f).map(|p| p.is_zero()));
    let mut failures = Vec::new();
    for ((name, _, _), ok) in checks.iter().zip(vanishing) {
        if !ok? {
            failures.push(*name);
        }
    }
    if !failures.is_empty() {
        return Err(Error::SpectrumOutsideCandidates(format!(
            "genus {}: nonvanishing certificate for {}",
            a.genus(),
            failures.join(", ")
        )));
    }

    let kernels: Vec<Vec<Vec<Scalar>>> = par::map_range(cands.len(), |k| {
        let b = if cands[k].index % 2 == 0 { &beta[0] } else { &beta[1] };
        intersect(&alpha[k].basis, &b.basis, n).and_then(|ab| intersect(&ab, &gamma.basis, n))
    })
    .into_iter()
    .collect::<Result<_>>()?;

    let entries = cands
        .into_iter()
        .zip(&kernels)
        .map(|(candidate, kernel)| SpectrumEntry { candidate, dim: kernel.len() })
        .collect();
    let certificate = Certificate {
        alpha_exponents: alpha.iter().map(|p| p.exponent).collect(),
        beta_exponents: [beta[0].exponent, beta[1].exponent],
        gamma_exponent: gamma.exponent,
    };
    Ok(Analysis { report: SpectrumReport { genus: a.genus(), entries, certified: true, certificate }, kernels })
}

/// Dimensions of the joint generalized eigenspaces of every candidate
/// triple, with an exact certificate that no other eigenvalue occurs.
pub fn joint_spectrum(a: &QuotientAlgebra) -> Result<SpectrumReport> {
    analyze(a).map(|x| x.report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalSummand {
    #[serde(rename = "i")]
    pub index: i32,
    #[serde(rename = "eig")]
    pub eigenvalues: [Scalar; 3],
    pub dim: usize,
    /// Coordinate vectors in the standard-monomial basis, in reduced row
    /// echelon form, so each starts with 1.
    pub basis: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub genus: u32,
    pub summands: Vec<LocalSummand>,
    pub certified: bool,
}

impl DecompositionReport {
    pub fn dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.dim).collect()
    }

    /// Dimension of the summand with index `i`, zero when absent.
    pub fn dim_at(&self, index: i32) -> usize {
        self.summands.iter().find(|s| s.index == index).map_or(0, |s| s.dim)
    }
}

fn normalize(mut v: Vec<Scalar>) -> Vec<Scalar> {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        let inv = lead.inv().expect("nonzero");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
    }
    v
}

fn span_rank(vectors: &[Vec<Scalar>], width: usize) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    Ok(Matrix::from_rows(vectors.to_vec())
        .map_err(|_| Error::DimensionMismatch(format!("vectors of length {width}")))?
        .rank())
}

/// Splits the algebra into joint generalized eigenspaces and verifies that
/// they are operator-invariant and form a direct sum.
pub fn local_decomposition(a: &QuotientAlgebra) -> Result<DecompositionReport> {
    decompose_analyzed(a, &analyze(a)?)
}

fn decompose_analyzed(a: &QuotientAlgebra, analysis: &Analysis) -> Result<DecompositionReport> {
    let n = a.dim();
    let summands: Vec<LocalSummand> = analysis
        .report
        .entries
        .iter()
        .zip(analysis.kernels.iter().cloned())
        .filter(|(_, k)| !k.is_empty())
        .map(|(e, kernel)| LocalSummand {
            index: e.candidate.index,
            eigenvalues: e.candidate.eigenvalues.clone(),
            dim: e.dim,
            basis: kernel,
        })
        .collect();

    let all: Vec<Vec<Scalar>> = summands.iter().flat_map(|s| s.basis.iter().cloned()).collect();
    if all.len() != n || span_rank(&all, n)? != n {
        return Err(Error::Falsified(format!(
            "genus {}: generalized eigenspaces span {} of {} dimensions",
            a.genus(),
            span_rank(&all, n)?,
            n
        )));
    }
    for s in &summands {
        for op in a.operators() {
            let images = s.basis.iter().map(|v| op.mul_vec(v)).collect::<Result<Vec<_>>>()?;
            if !images.iter().all(|w| in_echelon_span(w, &s.basis)) {
                return Err(Error::Falsified(format!(
                    "genus {}: summand {} is not operator-invariant",
                    a.genus(),
                    s.index
                )));
            }
        }
    }
    Ok(DecompositionReport { genus: a.genus(), summands, certified: true })
}

static ANALYSES: Memo<Result<Arc<Analysis>>> = Memo::new();
static DECOMPOSITIONS: Memo<Result<Arc<DecompositionReport>>> = Memo::new();

fn cached_analysis(genus: u32) -> Result<Arc<Analysis>> {
    ANALYSES.get_or_init(genus, || build_quotient(genus).and_then(|a| analyze(&a)).map(Arc::new))
}

/// [`joint_spectrum`] of `build_quotient(genus)`, cached per genus.
pub fn spectrum(genus: u32) -> Result<SpectrumReport> {
    cached_analysis(genus).map(|x| x.report.clone())
}

/// [`local_decomposition`] of `build_quotient(genus)`, cached per genus.
pub fn decomposition(genus: u32) -> Result<Arc<DecompositionReport>> {
    DECOMPOSITIONS.get_or_init(genus, || {
        let algebra = build_quotient(genus)?;
        decompose_analyzed(&algebra, &*cached_analysis(genus)?).map(Arc::new)
    })
}

/// The local ideals displayed for genus 2 and genus 3, in display order.
pub fn example_ideals(genus: u32) -> Option<Vec<Vec<Polynomial>>> {
    let a = Polynomial::alpha();
    let b = Polynomial::beta();
    let g = Polynomial::gamma();
    let k = |n: i64| Polynomial::from(n);
    let eight_i = Polynomial::constant(&Scalar::from_int(8) * &Scalar::i());
    match genus {
        2 => Some(vec![
            vec![&a - &k(4), &b + &k(8), g.clone()],
            vec![&a * &a, &b - &k(8), &g + &(&k(16) * &a)],
            vec![&a + &k(4), &b + &k(8), g.clone()],
        ]),
        3 => {
            let shifted = |s: i64| &a + &k(s);
            Some(vec![
                vec![&a - &eight_i, &b - &k(8), g.clone()],
                vec![shifted(-4).pow(2), &b + &k(8), &g + &(&k(8) * &shifted(-4))],
                vec![
                    a.pow(3),
                    &a * &(&b - &k(8)),
                    &(&b - &k(8)).pow(2) - &(&a * &a).scale(&Scalar::from_ratio(64, 3)),
                    &g + &(&k(16) * &a),
                ],
                vec![shifted(4).pow(2), &b + &k(8), &g + &(&k(8) * &shifted(4))],
                vec![&a + &eight_i, &b - &k(8), g.clone()],
            ])
        }
        _ => None,
    }
}

/// Local ideals of `J_g` at the summands where the displayed ones are not
/// ideals of the quotient: the genus 3 summands at `α = ±4`. The others are
/// returned unchanged.
pub fn corrected_example_ideals(genus: u32) -> Option<Vec<Vec<Polynomial>>> {
    let mut ideals = example_ideals(genus)?;
    if genus == 3 {
        let a = Polynomial::alpha();
        let b = Polynomial::beta();
        let g = Polynomial::gamma();
        let k = |n: i64| Polynomial::from(n);
        ideals[1] = vec![(&a - &k(4)).pow(2), &(&b + &(&k(4) * &a)) - &k(8), &(&g - &(&k(12) * &a)) + &k(48)];
        ideals[3] = vec![(&a + &k(4)).pow(2), &(&b - &(&k(4) * &a)) - &k(8), &(&g - &(&k(12) * &a)) - &k(48)];
    }
    Some(ideals)
}

/// Certifies `J_g = ∩ ideals` and the direct-sum splitting by the Chinese
/// remainder theorem: each ideal contains J_g, the ideals are pairwise
/// comaximal, and their quotient dimensions add up to `dim ℂ[α,β,γ]/J_g`.
pub fn verify_example_decomposition(genus: u32, ideals: &[Vec<Polynomial>]) -> Result<bool> {
    let j = relations::ideal_j(genus);
    let bases: Vec<GroebnerBasis> = par::map(ideals, |gens| buchberger(gens));
    if !bases.iter().all(|gb| j.triple.generators().iter().all(|p| gb.contains(p))) {
        return Ok(false);
    }
    for x in 0..bases.len() {
        for y in x + 1..bases.len() {
            if !crate::groebner::comaximal(&bases[x], &bases[y]) {
                return Ok(false);
            }
        }
    }
    let mut total = 0;
    for gb in &bases {
        match gb.quotient_dim() {
            Ok(d) => total += d,
            Err(Error::InfiniteQuotient) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(total == j.quotient_dim()?)
}

/// Quotient dimension of each displayed ideal together with the candidate
/// index of its unique zero, if it has one among the candidates.
pub fn example_summand_profile(genus: u32, ideals: &[Vec<Polynomial>]) -> Result<Vec<(Option<i32>, usize)>> {
    ideals
        .iter()
        .map(|gens| {
            let dim = buchberger(gens).quotient_dim()?;
            let zeros: Vec<i32> = candidates(genus)
                .into_iter()
                .filter(|c| {
                    let [x, y, z] = &c.eigenvalues;
                    gens.iter().all(|p| p.eval(x, y, z).is_zero())
                })
                .map(|c| c.index)
                .collect();
            Ok((if zeros.len() == 1 { Some(zeros[0]) } else { None }, dim))
        })
        .collect()
}

/// The local ideal `J_g + m^N` at a candidate, `m` its maximal ideal and
/// `N = dim ℂ[α,β,γ]/J_g`. Its quotient is the summand at that candidate.
pub fn local_ideal(genus: u32, index: i32) -> Result<GroebnerBasis> {
    let n = relations::floer_quotient_dim(genus)? as u32;
    let [x, y, z] = candidate_eigenvalues(index);
    let mut gens = relations::ideal_j(genus).triple.generators().to_vec();
    for (v, value) in Var::ALL.into_iter().zip([x, y, z]) {
        gens.push((&Polynomial::var(v) - &Polynomial::constant(value)).pow(n));
    }
    Ok(buchberger(&gens))
}

/// Indices of displayed ideals that do not contain `J_g`.
pub fn example_ideals_missing_relations(genus: u32, ideals: &[Vec<Polynomial>]) -> Vec<usize> {
    let j = relations::ideal_j(genus);
    ideals
        .iter()
        .enumerate()
        .filter(|(_, gens)| {
            let gb = buchberger(gens);
            !j.triple.generators().iter().all(|p| gb.contains(p))
        })
        .map(|(k, _)| k)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaKernel {
    pub dim: usize,
    pub basis: Vec<Vec<Scalar>>,
}

/// `ker γ` on `ℂ[α,β,γ]/J_g`, checked to equal the image of `J_{g−1}` and
/// to have dimension `dim ℂ[α,β,γ]/J_g − dim ℂ[α,β,γ]/J_{g−1}`.
pub fn gamma_kernel(a: &QuotientAlgebra) -> Result<GammaKernel> {
    let genus = a.genus();
    let n = a.dim();
    let kernel: Vec<Vec<Scalar>> = a.operator(Var::Gamma).kernel().into_iter().map(normalize).collect();
    let expected = n - relations::floer_quotient_dim(genus - 1)?;
    if kernel.len() != expected {
        return Err(Error::Falsified(format!(
            "genus {genus}: ker γ has dimension {}, expected {expected}",
            kernel.len()
        )));
    }
    let previous = relations::ideal_j(genus - 1);
    let images: Vec<Vec<Scalar>> = previous
        .triple
        .generators()
        .iter()
        .flat_map(|f| a.basis().iter().map(move |m| (f, m)))
        .map(|(f, m)| a.coordinates(&f.mul_term(m, &Scalar::one())))
        .collect();
    let image_rank = span_rank(&images, n)?;
    let joint: Vec<Vec<Scalar>> = kernel.iter().chain(&images).cloned().collect();
    if image_rank != kernel.len() || span_rank(&joint, n)? != kernel.len() {
        return Err(Error::Falsified(format!("genus {genus}: ker γ differs from J_{}/J_{genus}", genus - 1)));
    }
    Ok(GammaKernel { dim: kernel.len(), basis: kernel })
}

/// Least `n ≥ 1` with `γ^n = 0`.
pub fn gamma_nilpotency_index(a: &QuotientAlgebra) -> Result<u32> {
    let mg = a.operator(Var::Gamma);
    let mut power = mg.clone();
    for n in 1..=a.dim().max(1) as u32 {
        if power.is_zero() {
            return Ok(n);
        }
        power = power.mul(mg)?;
    }
    Err(Error::Falsified(format!("genus {}: γ is not nilpotent", a.genus())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(a: i64, b: i64, imag: bool) -> [Scalar; 3] {
        let alpha = if imag { &Scalar::from_int(a) * &Scalar::i() } else { Scalar::from_int(a) };
        [alpha, Scalar::from_int(b), Scalar::zero()]
    }

    #[test]
    fn genus_one_algebra() {
        let a = build_quotient(1).unwrap();
        assert_eq!(a.dim(), 1);
        let [ma, mb, mg] = a.operators();
        assert_eq!(ma, &Matrix::from_ints(&[&[0]]));
        assert_eq!(mb, &Matrix::from_ints(&[&[8]]));
        assert_eq!(mg, &Matrix::from_ints(&[&[0]]));
        assert!(build_quotient(0).is_err());
    }

    #[test]
    fn genus_two_multiplication() {
        let a = build_quotient(2).unwrap();
        assert_eq!(a.dim(), 4);
        let alpha_col = a.operator(Var::Alpha).mul_vec(&a.coordinates(&Polynomial::alpha())).unwrap();
        let expect = a.coordinates(&(&Polynomial::from(8) - &Polynomial::beta()));
        assert_eq!(alpha_col, expect);
        assert!(a.operators_commute().unwrap());
    }

    #[test]
    fn operators_reproduce_normal_form_products() {
        let a = build_quotient(3).unwrap();
        for m1 in a.basis() {
            for m2 in a.basis() {
                let lhs = a.apply(&Polynomial::monomial(*m1), &a.coordinates(&Polynomial::monomial(*m2))).unwrap();
                assert_eq!(lhs, a.coordinates(&Polynomial::monomial(m1.mul(m2))));
            }
        }
    }

    #[test]
    fn candidate_list() {
        let c = candidates(3);
        assert_eq!(c.iter().map(|c| c.index).collect::<Vec<_>>(), vec![-2, -1, 0, 1, 2]);
        assert_eq!(c[0].eigenvalues, triple(-8, 8, true));
        assert_eq!(c[1].eigenvalues, triple(-4, -8, false));
        assert_eq!(c[2].eigenvalues, triple(0, 8, false));
        assert_eq!(c[4].eigenvalues, triple(8, 8, true));
    }

    #[test]
    fn spectra_of_small_genera() {
        let dims = |g| {
            let r = joint_spectrum(&build_quotient(g).unwrap()).unwrap();
            assert!(r.certified);
            r.entries.iter().map(|e| (e.candidate.index, e.dim)).collect::<Vec<_>>()
        };
        assert_eq!(dims(1), vec![(0, 1)]);
        assert_eq!(dims(2), vec![(-1, 1), (0, 2), (1, 1)]);
        assert_eq!(dims(3), vec![(-2, 1), (-1, 2), (0, 4), (1, 2), (2, 1)]);
    }

    #[test]
    fn decompositions() {
        assert_eq!(decomposition(1).unwrap().dims(), vec![1]);
        assert_eq!(decomposition(2).unwrap().dims(), vec![1, 2, 1]);
        let d3 = decomposition(3).unwrap();
        assert_eq!(d3.dims(), vec![1, 2, 4, 2, 1]);
        for s in &d3.summands {
            for v in &s.basis {
                assert!(v.iter().find(|x| !x.is_zero()).unwrap().is_one());
            }
        }
    }

    #[test]
    fn genus_two_example_splits() {
        assert!(verify_example_decomposition(2, &example_ideals(2).unwrap()).unwrap());
        assert!(example_ideals_missing_relations(2, &example_ideals(2).unwrap()).is_empty());
    }

    #[test]
    fn genus_three_display_misses_relations_at_alpha_plus_minus_four() {
        // The displayed ideals ((α∓4)², β+8, γ+8(α∓4)) have the right zero and
        // dimension but do not contain R²_3; the true local ideals do.
        let ideals = example_ideals(3).unwrap();
        assert_eq!(example_ideals_missing_relations(3, &ideals), vec![1, 3]);
        assert!(!verify_example_decomposition(3, &ideals).unwrap());
        let corrected = corrected_example_ideals(3).unwrap();
        assert!(verify_example_decomposition(3, &corrected).unwrap());
        assert_eq!(local_ideal(3, 1).unwrap(), buchberger(&corrected[1]));
        assert_eq!(local_ideal(3, -1).unwrap(), buchberger(&corrected[3]));
        assert_eq!(local_ideal(3, 0).unwrap(), buchberger(&ideals[2]));
        assert_eq!(corrected_example_ideals(2), example_ideals(2));
    }

    #[test]
    fn genus_three_display_profile() {
        let profile = example_summand_profile(3, &example_ideals(3).unwrap()).unwrap();
        assert_eq!(profile, vec![(Some(2), 1), (Some(1), 2), (Some(0), 4), (Some(-1), 2), (Some(-2), 1)]);
    }

    #[test]
    fn perturbed_example_is_rejected() {
        let mut ideals = example_ideals(2).unwrap();
        ideals[0][0] = &Polynomial::alpha() - &Polynomial::from(5);
        assert!(!verify_example_decomposition(2, &ideals).unwrap());
    }

    #[test]
    fn gamma_kernels() {
        let k1 = gamma_kernel(&build_quotient(1).unwrap()).unwrap();
        assert_eq!(k1.dim, 1);
        assert_eq!(gamma_kernel(&build_quotient(2).unwrap()).unwrap().dim, 3);
        assert_eq!(gamma_kernel(&build_quotient(3).unwrap()).unwrap().dim, 6);
    }

    #[test]
    fn gamma_nilpotency() {
        assert_eq!(gamma_nilpotency_index(&build_quotient(1).unwrap()).unwrap(), 1);
        assert_eq!(gamma_nilpotency_index(&build_quotient(2).unwrap()).unwrap(), 2);
        assert!(gamma_nilpotency_index(&build_quotient(4).unwrap()).unwrap() <= 4);
    }

    #[test]
    fn nonvanishing_certificate_is_reported() {
        // ℂ[α,β,γ]/(α−1, β−8, γ) has α-eigenvalue 1, which is not a candidate.
        let gb = buchberger(&[
            &Polynomial::alpha() - &Polynomial::from(1),
            &Polynomial::beta() - &Polynomial::from(8),
            Polynomial::gamma(),
        ]);
        let a = QuotientAlgebra::from_groebner(2, gb).unwrap();
        assert!(matches!(joint_spectrum(&a), Err(Error::SpectrumOutsideCandidates(_))));
    }
}
