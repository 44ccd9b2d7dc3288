//! Dimension bookkeeping for the full Floer group: primitive parts,
//! the Sp-decomposition table and the comparison with symmetric products.

use std::fmt;

use num_integer::binomial;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::floerring;
use crate::relations;

/// `C(n, m)`, zero outside `0 ≤ m ≤ n`.
fn choose(n: i64, m: i64) -> i64 {
    if m < 0 || m > n {
        0
    } else {
        binomial(n, m)
    }
}

/// Dimension of the primitive part `Λ₀^k H³`, i.e. `C(2g,k) − C(2g,k−2)`.
pub fn primitive_dim(genus: u32, k: u32) -> u64 {
    let n = 2 * i64::from(genus);
    let k = i64::from(k);
    (choose(n, k) - choose(n, k - 2)) as u64
}

/// `dim ℂ[α,β,γ]/J_g` predicted by counting: `C(g+2, 3)`.
pub fn invariant_dim_formula(genus: u32) -> u64 {
    choose(i64::from(genus) + 2, 3) as u64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpRow {
    pub k: u32,
    pub primitive_dim: u64,
    pub quotient_dim: u64,
    pub product: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpTable {
    pub genus: u32,
    pub rows: Vec<SpRow>,
    pub total_dim: u64,
    pub euler_char: i64,
}

/// `⊕_{k=0}^{g} Λ₀^k H³ ⊗ ℂ[α,β,γ]/J_{g−k}`, with signs `(−1)^k` for χ.
pub fn sp_table(genus: u32) -> Result<SpTable> {
    check_genus(genus)?;
    let rows: Vec<SpRow> = (0..=genus)
        .map(|k| {
            let quotient_dim = relations::floer_quotient_dim(genus - k)? as u64;
            let primitive_dim = primitive_dim(genus, k);
            Ok(SpRow { k, primitive_dim, quotient_dim, product: primitive_dim * quotient_dim })
        })
        .collect::<Result<_>>()?;
    let total_dim = rows.iter().map(|r| r.product).sum();
    let euler_char = rows.iter().map(|r| sign(r.k) * r.product as i64).sum();
    Ok(SpTable { genus, rows, total_dim, euler_char })
}

fn sign(k: u32) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_genus(genus: u32) -> Result<()> {
    if genus == 0 {
        return Err(Error::GenusOutOfRange { genus, reason: "genus must be at least 1" });
    }
    Ok(())
}

/// Betti numbers `b_0..b_{2n}` of the `n`-th symmetric product of `Σ_g`:
/// the `x^n` coefficient of `(1+xt)^{2g} / ((1−x)(1−xt²))`, which is
/// `Σ_a C(2g,a) t^a Σ_{c=0}^{n−a} t^{2c}`.
pub fn sym_product_betti(genus: u32, n: u32) -> Vec<u64> {
    let mut betti = vec![0u64; 2 * n as usize + 1];
    let two_g = 2 * i64::from(genus);
    for a in 0..=n {
        let c_a = choose(two_g, i64::from(a)) as u64;
        for c in 0..=(n - a) {
            betti[(a + 2 * c) as usize] += c_a;
        }
    }
    betti
}

/// Total Betti number and Euler characteristic of `s^n Σ_g`.
pub fn sym_product_dims(genus: u32, n: u32) -> (u64, i64) {
    let betti = sym_product_betti(genus, n);
    let total = betti.iter().sum();
    let euler = betti.iter().enumerate().map(|(d, &b)| sign(d as u32) * b as i64).sum();
    (total, euler)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub j: i32,
    pub floer_dim: u64,
    pub sym_product_dim: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub genus: u32,
    pub rows: Vec<ConjectureRow>,
    pub floer_total: u64,
    pub sym_total: u64,
    pub floer_euler: i64,
    pub sym_euler: i64,
    /// `g·2^g`, reported for reference only.
    pub g_two_to_g: u64,
    pub g_two_to_g_matches: bool,
}

impl ConjectureReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches) && self.floer_total == self.sym_total && self.floer_euler == self.sym_euler
    }
}

/// Eigenspace `j` of the full group, `Σ_k dim Λ₀^k H³ · dim R_{g−k, j}`,
/// against `H*(s^{g−1−|j|} Σ_g)`.
pub fn conjecture_report(genus: u32) -> Result<ConjectureReport> {
    check_genus(genus)?;
    let g = genus as i32;
    let mut rows = Vec::new();
    let (mut floer_euler, mut sym_euler) = (0i64, 0i64);
    for j in -(g - 1)..=(g - 1) {
        let top = (g - 1 - j.abs()) as u32;
        let mut floer_dim = 0u64;
        for k in 0..=top {
            let summand = floerring::decomposition(genus - k)?.dim_at(j) as u64;
            let contribution = primitive_dim(genus, k) * summand;
            floer_dim += contribution;
            floer_euler += sign(k) * contribution as i64;
        }
        let (sym_product_dim, euler) = sym_product_dims(genus, top);
        sym_euler += euler;
        rows.push(ConjectureRow { j, floer_dim, sym_product_dim, matches: floer_dim == sym_product_dim });
    }
    let floer_total = rows.iter().map(|r| r.floer_dim).sum();
    let sym_total = rows.iter().map(|r| r.sym_product_dim).sum();
    let g_two_to_g = u64::from(genus) << genus;
    Ok(ConjectureReport {
        genus,
        rows,
        floer_total,
        sym_total,
        floer_euler,
        sym_euler,
        g_two_to_g,
        g_two_to_g_matches: g_two_to_g == floer_total,
    })
}

/// Right-aligns each column to its widest cell.
fn write_aligned(f: &mut fmt::Formatter<'_>, rows: &[Vec<String>]) -> fmt::Result {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    for row in rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        writeln!(f, "{}", cells.join("  "))?;
    }
    Ok(())
}

impl fmt::Display for SpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "genus {}", self.genus)?;
        let mut rows = vec![vec!["k".into(), "primitive".into(), "quotient".into(), "product".into()]];
        for r in &self.rows {
            rows.push(vec![
                r.k.to_string(),
                r.primitive_dim.to_string(),
                r.quotient_dim.to_string(),
                r.product.to_string(),
            ]);
        }
        write_aligned(f, &rows)?;
        writeln!(f, "total {}", self.total_dim)?;
        write!(f, "euler {}", self.euler_char)
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "genus {}", self.genus)?;
        let mut rows = vec![vec!["j".into(), "floer".into(), "sym".into(), "match".into()]];
        for r in &self.rows {
            rows.push(vec![
                r.j.to_string(),
                r.floer_dim.to_string(),
                r.sym_product_dim.to_string(),
                if r.matches { "yes" } else { "no" }.into(),
            ]);
        }
        write_aligned(f, &rows)?;
        writeln!(f, "total {} vs {}", self.floer_total, self.sym_total)?;
        writeln!(f, "euler {} vs {}", self.floer_euler, self.sym_euler)?;
        let verdict = if self.g_two_to_g_matches { "agrees" } else { "differs" };
        write!(f, "g*2^g = {} ({verdict}, informational)", self.g_two_to_g)
    }
}
