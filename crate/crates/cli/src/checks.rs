use std::time::{Duration, Instant};

use floer_core::floerring::{self, candidates};
use floer_core::groebner::buchberger;
use floer_core::poly::Polynomial;
use floer_core::relations;
use floer_core::scalars::Scalar;
use floer_core::{par, tables, Result};

/// Verdict of one check: `Ok(None)` passes silently, `Ok(Some(_))` passes
/// with a note, `Err(_)` fails with a falsification detail.
type Verdict = std::result::Result<Option<String>, String>;

struct Check {
    name: &'static str,
    applies: fn(u32) -> bool,
    run: fn(u32) -> Result<Verdict>,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub genus: u32,
    pub passed: bool,
    pub detail: Option<String>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub max_genus: u32,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn find(&self, name: &str, genus: u32) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name && c.genus == genus)
    }
}

fn expect(ok: bool, failure: impl FnOnce() -> String) -> Result<Verdict> {
    Ok(if ok { Ok(None) } else { Err(failure()) })
}

fn always(_: u32) -> bool {
    true
}

const CHECKS: &[Check] = &[
    Check { name: "base_case", applies: |g| g == 1, run: base_case },
    Check {
        name: "classical_ideal_equality",
        applies: always,
        run: |g| {
            expect(relations::classical_ideal_equality(g)?, || "GB(q_g) differs from GB(ζ_g, ζ_g+1, ζ_g+2)".into())
        },
    },
    Check {
        name: "deformed_ideal_equality",
        applies: always,
        run: |g| expect(relations::deformed_ideal_equality(g), || "GB(R_g) differs from GB(ζ̃_g, ζ̃_g+1, ζ̃_g+2)".into()),
    },
    Check {
        name: "first_relation_is_deformed_zeta",
        applies: always,
        run: |g| expect(relations::first_relation_is_deformed_zeta(g), || "R¹_g differs from ζ̃_g".into()),
    },
    Check {
        name: "classical_degeneration",
        applies: always,
        run: |g| expect(relations::classical_degeneration(g)?, || "undeformed recursion differs from q_g".into()),
    },
    Check {
        name: "classical_closed_forms",
        applies: always,
        run: |g| expect(relations::classical_closed_forms_hold(g)?, || "closed forms differ from q_g".into()),
    },
    Check {
        name: "deformation_shape",
        applies: always,
        run: |g| {
            expect(relations::verify_deformation_shape(g)?, || {
                "R_g − q_g has a term of wrong degree or congruence".into()
            })
        },
    },
    Check { name: "inclusion_chain", applies: always, run: inclusion_chain },
    Check {
        name: "beta_product_in_bar_ideal",
        applies: always,
        run: |g| expect(relations::beta_product_in_bar_ideal(g), || "β-product not in (ζ̄_g, ζ̄_g+1)".into()),
    },
    Check { name: "invariant_dimension", applies: always, run: invariant_dimension },
    Check { name: "spectrum", applies: always, run: spectrum },
    Check { name: "local_decomposition", applies: always, run: local_decomposition },
    Check { name: "gamma_kernel", applies: |g| g >= 2, run: gamma_kernel },
    Check { name: "recursion_constants", applies: always, run: recursion_constants },
    Check { name: "example_genus_2", applies: |g| g == 2, run: example_genus_2 },
    Check { name: "example_genus_3", applies: |g| g == 3, run: example_genus_3 },
    Check { name: "sp_table", applies: always, run: sp_table },
    Check { name: "conjecture_dimensions", applies: always, run: conjecture_dimensions },
];

/// Names of all checks, in suite order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

/// Runs every applicable check for genera `1..=max_genus`. Checks are
/// evaluated in parallel; results keep suite order.
pub fn run_suite(max_genus: u32) -> SuiteReport {
    let tasks: Vec<(&Check, u32)> =
        (1..=max_genus).flat_map(|g| CHECKS.iter().filter(move |c| (c.applies)(g)).map(move |c| (c, g))).collect();
    let checks = par::map(&tasks, |&(check, genus)| {
        let start = Instant::now();
        let verdict = (check.run)(genus).unwrap_or_else(|e| Err(e.to_string()));
        let elapsed = start.elapsed();
        let (passed, detail) = match verdict {
            Ok(note) => (true, note),
            Err(why) => (false, Some(why)),
        };
        CheckResult { name: check.name, genus, passed, detail, elapsed }
    });
    SuiteReport { max_genus, checks }
}

fn base_case(g: u32) -> Result<Verdict> {
    let family = relations::ideal_j(g);
    let expected = [Polynomial::alpha(), &Polynomial::beta() - &Polynomial::from(8), Polynomial::gamma()];
    let dim = family.quotient_dim()?;
    expect(family.triple.relations == expected && family.basis == buchberger(&expected) && dim == 1, || {
        let shown: Vec<String> = family.triple.relations.iter().map(ToString::to_string).collect();
        format!("J_1 = ({}) with dim {dim}", shown.join(", "))
    })
}

fn inclusion_chain(g: u32) -> Result<Verdict> {
    let chain = relations::verify_inclusions(g);
    let power = relations::gamma_power_in_ideal(g);
    expect(chain && power, || if chain { "γ^g ∉ J_g".into() } else { "γJ_g ⊂ J_g+1 ⊂ J_g fails".into() })
}

fn invariant_dimension(g: u32) -> Result<Verdict> {
    let floer = relations::floer_quotient_dim(g)? as u64;
    let classical = relations::ideal_i(g)?.quotient_dim()? as u64;
    let formula = tables::invariant_dim_formula(g);
    expect(floer == formula && classical == formula, || {
        format!("dim ℂ[α,β,γ]/J_g = {floer}, dim ℂ[α,β,γ]/I_g = {classical}, C(g+2,3) = {formula}")
    })
}

fn spectrum(g: u32) -> Result<Verdict> {
    let algebra = floerring::build_quotient(g)?;
    let report = floerring::spectrum(algebra.genus())?;
    let dims: Vec<usize> = report.entries.iter().map(|e| e.dim).collect();
    let listed: Vec<i32> = report.entries.iter().map(|e| e.candidate.index).collect();
    let expected: Vec<i32> = candidates(g).iter().map(|c| c.index).collect();
    let ok = report.certified
        && listed == expected
        && dims.iter().all(|&d| d > 0)
        && dims.iter().sum::<usize>() == algebra.dim();
    Ok(if ok { Ok(Some(format!("dims {dims:?}"))) } else { Err(format!("dims {dims:?} for indices {listed:?}")) })
}

fn local_decomposition(g: u32) -> Result<Verdict> {
    let report = floerring::decomposition(g)?;
    let total: usize = report.dims().iter().sum();
    let n = relations::floer_quotient_dim(g)?;
    expect(report.certified && total == n, || format!("summands span {total} of {n}"))
}

fn gamma_kernel(g: u32) -> Result<Verdict> {
    let kernel = floerring::gamma_kernel(&*floerring::build_quotient(g)?)?;
    Ok(Ok(Some(format!("dim {}", kernel.dim))))
}

fn recursion_constants(g: u32) -> Result<Verdict> {
    let (c, d) = relations::recover_recursion_constants(g)?;
    let expected = Scalar::from_int(if g % 2 == 1 { 8 } else { -8 });
    expect(c == expected && d.is_zero(), || format!("recovered ({c}, {d}), expected ({expected}, 0)"))
}

fn example_genus_2(g: u32) -> Result<Verdict> {
    let a = Polynomial::alpha();
    let b = Polynomial::beta();
    let k = |n: i64| Polynomial::from(n);
    let shown = [&(&a * &a) + &(&b - &k(8)), &(&a * &(&b + &k(8))) + &Polynomial::gamma(), &a * &Polynomial::gamma()];
    if buchberger(&shown) != relations::ideal_j(g).basis {
        return Ok(Err("J_2 differs from (α²+β−8, α(β+8)+γ, αγ)".into()));
    }
    let ideals = floerring::example_ideals(g).expect("genus 2 example");
    expect(floerring::verify_example_decomposition(g, &ideals)?, || "local ideals do not split J_2".into())
}

fn example_genus_3(g: u32) -> Result<Verdict> {
    let ideals = floerring::example_ideals(g).expect("genus 3 example");
    if floerring::verify_example_decomposition(g, &ideals)? {
        let dims: Vec<usize> = floerring::example_summand_profile(g, &ideals)?.iter().map(|p| p.1).collect();
        return expect(dims == [1, 2, 4, 2, 1], || format!("summand dims {dims:?}"));
    }
    let missing = floerring::example_ideals_missing_relations(g, &ideals);
    let corrected = floerring::corrected_example_ideals(g).expect("genus 3 example");
    let corrected_ok = floerring::verify_example_decomposition(g, &corrected)?;
    let describe = |k: usize| {
        let gens: Vec<String> = ideals[k].iter().map(ToString::to_string).collect();
        let fixed: Vec<String> = corrected[k].iter().map(ToString::to_string).collect();
        format!("({}) misses relations of J_3; local ideal is ({})", gens.join(", "), fixed.join(", "))
    };
    let notes: Vec<String> = missing.iter().map(|&k| describe(k)).collect();
    Ok(Err(format!(
        "displayed ideals do not split J_3: {}; corrected ideals {}",
        notes.join("; "),
        if corrected_ok { "split J_3 with dims [1, 2, 4, 2, 1]" } else { "also fail" }
    )))
}

fn sp_table(g: u32) -> Result<Verdict> {
    let table = tables::sp_table(g)?;
    let report = tables::conjecture_report(g)?;
    let euler_ok = g == 1 || (table.euler_char == 0 && report.sym_euler == 0);
    expect(table.total_dim == report.sym_total && table.total_dim == report.floer_total && euler_ok, || {
        format!(
            "total {} vs {} (symmetric products), euler {} vs {}",
            table.total_dim, report.sym_total, table.euler_char, report.sym_euler
        )
    })
}

fn conjecture_dimensions(g: u32) -> Result<Verdict> {
    let report = tables::conjecture_report(g)?;
    let note = format!(
        "g·2^g = {} {} total {} (informational)",
        report.g_two_to_g,
        if report.g_two_to_g_matches { "equals" } else { "differs from" },
        report.floer_total
    );
    Ok(if report.all_match() {
        Ok(Some(note))
    } else {
        let bad: Vec<String> = report
            .rows
            .iter()
            .filter(|r| !r.matches)
            .map(|r| format!("j={}: {} vs {}", r.j, r.floer_dim, r.sym_product_dim))
            .collect();
        Err(bad.join(", "))
    })
}
