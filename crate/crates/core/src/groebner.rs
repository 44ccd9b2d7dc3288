//! Reduced Gröbner bases over ℚ(i) for the weighted-degree order, and the
//! ideal-level predicates built on them.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::scalars::Scalar;

/// Tag identifying the monomial order in serialized bases.
pub const ORDER_TAG: &str = "wdeg(2,4,6)+lex(a>b>c)";

/// A reduced, monic Gröbner basis sorted ascending by leading monomial.
///
/// Two generating sets of the same ideal produce identical values, so
/// ideal equality is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroebnerBasis {
    order: String,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &str {
        &self.order
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| g.leading_monomial().expect("basis has no zero element")).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0] == Polynomial::one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        reduce(p, &self.generators)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Monomials outside the leading-term ideal, ascending. Errors when the
    /// quotient is infinite-dimensional.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if self.is_unit() {
            return Ok(Vec::new());
        }
        let lms = self.leading_monomials();
        let mut bounds = [0u32; 3];
        for (v, bound) in bounds.iter_mut().enumerate() {
            *bound = lms
                .iter()
                .filter(|m| (0..3).all(|w| w == v || m.exps[w] == 0))
                .map(|m| m.exps[v])
                .min()
                .ok_or(Error::InfiniteQuotient)?;
        }
        let mut out = Vec::new();
        for a in 0..bounds[0] {
            for b in 0..bounds[1] {
                for c in 0..bounds[2] {
                    let m = Monomial::new(a, b, c);
                    if !lms.iter().any(|l| l.divides(&m)) {
                        out.push(m);
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn quotient_dim(&self) -> Result<usize> {
        self.standard_monomials().map(|s| s.len())
    }
}

/// Fully reduces `p` modulo `basis` (any order of elements, no zeros).
fn reduce(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let leads: Vec<(Monomial, Scalar)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term().expect("no zero generators");
            (*m, c.clone())
        })
        .collect();
    let mut rest = p.clone();
    let mut remainder = Polynomial::zero();
    while let Ok((m, c)) = rest.leading_term() {
        let (m, c) = (*m, c.clone());
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(k) => {
                let (lm, lc) = &leads[k];
                let factor = c.checked_div(lc).expect("leading coefficient is nonzero");
                let shift = lm.quotient_of(&m).expect("divides");
                rest = &rest - &basis[k].mul_term(&shift, &factor);
            }
            None => {
                let t = Polynomial::term(m, c);
                rest = &rest - &t;
                remainder = &remainder + &t;
            }
        }
    }
    remainder
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(mg);
    let left = f.mul_term(&mf.quotient_of(&l).expect("lcm"), &cf.inv().expect("nonzero"));
    let right = g.mul_term(&mg.quotient_of(&l).expect("lcm"), &cg.inv().expect("nonzero"));
    &left - &right
}

fn unit_basis() -> GroebnerBasis {
    GroebnerBasis { order: ORDER_TAG.into(), generators: vec![Polynomial::one()] }
}

/// Buchberger's algorithm with the coprime and chain criteria and the
/// normal selection strategy (least lcm first, ties by pair index).
pub fn buchberger(gens: &[Polynomial]) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let g = g.monic().expect("nonzero");
        if g.leading_monomial().expect("nonzero") == Monomial::ONE {
            return unit_basis();
        }
        basis.push(g);
    }
    let lm = |p: &Polynomial| p.leading_monomial().expect("nonzero");
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while !pending.is_empty() {
        let &(i, j) = pending
            .iter()
            .min_by(|&&(a, b), &&(c, d)| {
                let l1 = lm(&basis[a]).lcm(&lm(&basis[b]));
                let l2 = lm(&basis[c]).lcm(&lm(&basis[d]));
                l1.cmp(&l2).then((a, b).cmp(&(c, d)))
            })
            .expect("nonempty");
        pending.remove(&(i, j));
        let (li, lj) = (lm(&basis[i]), lm(&basis[j]));
        if li.is_coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic().expect("nonzero");
        if lm(&r) == Monomial::ONE {
            return unit_basis();
        }
        let n = basis.len();
        basis.push(r);
        for k in 0..n {
            pending.insert((k, n));
        }
    }
    interreduce(basis)
}

fn interreduce(basis: Vec<Polynomial>) -> GroebnerBasis {
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().expect("nonzero")).collect();
    let minimal: Vec<Polynomial> = basis
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            !lms.iter().enumerate().any(|(j, lj)| j != i && lj.divides(&lms[i]) && (lj != &lms[i] || j < i))
        })
        .map(|(_, g)| g.clone())
        .collect();
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            reduce(&minimal[i], &others).monic().expect("minimal generator survives reduction")
        })
        .collect();
    reduced.sort_by_key(|g| g.leading_monomial().expect("nonzero"));
    GroebnerBasis { order: ORDER_TAG.into(), generators: reduced }
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}

pub fn ideal_contains(gb: &GroebnerBasis, p: &Polynomial) -> bool {
    gb.contains(p)
}

pub fn ideal_equal(a: &GroebnerBasis, b: &GroebnerBasis) -> bool {
    a == b
}

/// `b ⊆ a`, by generator membership.
pub fn ideal_includes(a: &GroebnerBasis, b: &GroebnerBasis) -> bool {
    b.generators().iter().all(|g| a.contains(g))
}

pub fn standard_monomials(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    gb.standard_monomials()
}

/// Basis of the sum of two ideals.
pub fn ideal_sum(a: &GroebnerBasis, b: &GroebnerBasis) -> GroebnerBasis {
    let gens: Vec<Polynomial> = a.generators().iter().chain(b.generators()).cloned().collect();
    buchberger(&gens)
}

/// True iff `a + b` is the unit ideal.
pub fn comaximal(a: &GroebnerBasis, b: &GroebnerBasis) -> bool {
    ideal_sum(a, b).is_unit()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

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

    fn j2_gens() -> Vec<Polynomial> {
        vec![a() * a() + b() - c(8), a() * (b() + c(8)) + g(), a() * g()]
    }

    #[test]
    fn genus_one_relations_are_already_reduced() {
        let gens = vec![a(), b() - c(8), g()];
        let gb = buchberger(&gens);
        assert_eq!(gb.generators(), &gens[..]);
        assert_eq!(gb.standard_monomials().unwrap(), vec![Monomial::ONE]);
    }

    #[test]
    fn unit_ideal() {
        let gb = buchberger(&[c(1)]);
        assert!(gb.is_unit());
        assert_eq!(gb.generators(), &[Polynomial::one()]);
        assert!(gb.standard_monomials().unwrap().is_empty());
        assert!(buchberger(&[a() + c(1), a()]).is_unit());
    }

    #[test]
    fn zero_ideal_is_infinite() {
        let gb = buchberger(&[Polynomial::zero()]);
        assert!(gb.is_zero_ideal());
        assert_eq!(gb.standard_monomials(), Err(Error::InfiniteQuotient));
        assert_eq!(buchberger(&[a(), b()]).standard_monomials(), Err(Error::InfiniteQuotient));
    }

    #[test]
    fn genus_two_quotient() {
        let gb = buchberger(&j2_gens());
        let expect: Vec<Monomial> =
            vec![Monomial::ONE, Monomial::new(1, 0, 0), Monomial::new(0, 1, 0), Monomial::new(0, 0, 1)];
        assert_eq!(gb.standard_monomials().unwrap(), expect);
        assert_eq!(gb.normal_form(&(a() * a())), c(8) - b());
        assert!(gb.normal_form(&(g() * g())).is_zero());
        assert!(gb.normal_form(&Polynomial::zero()).is_zero());
        assert!(ideal_contains(&gb, &(a() * g())));
        assert!(!ideal_contains(&gb, &a()));
        assert!(ideal_contains(&gb, &Polynomial::zero()));
        assert_eq!(buchberger(gb.generators()), gb);
    }

    #[test]
    fn equality_and_comaximality() {
        assert!(!ideal_equal(&buchberger(&[c(1)]), &buchberger(&[a()])));
        let plus = buchberger(&[a() - c(4), b() + c(8), g()]);
        let minus = buchberger(&[a() + c(4), b() + c(8), g()]);
        let mid = buchberger(&[a() * a(), b() - c(8), g() + c(16) * a()]);
        assert!(comaximal(&plus, &minus));
        assert!(comaximal(&mid, &plus));
        assert!(!comaximal(&buchberger(&[a()]), &buchberger(&[a(), b()])));
    }

    #[test]
    fn serialized_form_carries_order_tag() {
        let json = serde_json::to_value(buchberger(&[a()])).unwrap();
        assert_eq!(json["order"], ORDER_TAG);
        assert_eq!(json["generators"].as_array().unwrap().len(), 1);
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(((0u32..2, 0u32..2, 0u32..2), -3i64..4), 0..3).prop_map(|ts| {
            Polynomial::from_terms(ts.into_iter().map(|((x, y, z), k)| (Monomial::new(x, y, z), Scalar::from_int(k))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn canonical_under_regeneration(p in small_poly(), q in small_poly()) {
            let base = j2_gens();
            let gb = buchberger(&base);
            let mut gens = base.clone();
            gens.push(&(&p * &base[0]) + &(&q * &base[2]));
            gens[1] = &gens[1] + &(&q * &base[0]);
            prop_assert_eq!(buchberger(&gens), gb.clone());
            prop_assert_eq!(buchberger(gb.generators()), gb);
        }

        #[test]
        fn normal_form_is_multiplicative(p in small_poly(), q in small_poly()) {
            let gb = buchberger(&j2_gens());
            let lhs = gb.normal_form(&(&p * &q));
            let rhs = gb.normal_form(&(&gb.normal_form(&p) * &gb.normal_form(&q)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
