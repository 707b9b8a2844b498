//! Euler characteristics of ordered configuration spaces.
//!
//! Every cell `σ` carries the weight `μ(σ) = 1 - χ(L_σ)` where `L_σ` is its
//! link. Two routes compute `χ_n(X) = χ(C_n(X))`:
//!
//! * [`gen_function`]: the exponential generating function
//!   `Σ χ_n t^n / n!` factors as `∏_σ (1 + (-1)^d (1 - v) t)^{(-1)^d}`
//!   with `d = dim σ`, `v = χ(L_σ)`.
//! * [`chi_n_recursive`]: `χ_n(X) = Σ_σ μ(σ) χ_{n-1}(X - ⟨σ⟩)`, where
//!   `X - ⟨σ⟩` is realized by [`SimplicialComplex::puncture`].

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::complex::{Cell, CofaceIndex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::par;
use crate::series::{Exponent, LinearFactor, LinearFactorProduct, TruncatedSeries};

/// Default cap on the size of any complex produced during recursion.
pub const DEFAULT_CELL_BUDGET: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellLocalData {
    pub cell: Cell,
    pub dim: usize,
    /// Euler characteristic of the link.
    pub link_chi: i64,
    /// `1 - link_chi`.
    pub measure: i64,
    /// `(-1)^dim * measure`, which equals `1 - χ(∂⟨σ⟩)`.
    pub boundary_weight: i64,
}

impl CellLocalData {
    fn new(cell: Cell, link_chi: i64) -> Self {
        let dim = cell.dim();
        let measure = 1 - link_chi;
        let boundary_weight = if dim.is_multiple_of(2) {
            measure
        } else {
            -measure
        };
        Self {
            cell,
            dim,
            link_chi,
            measure,
            boundary_weight,
        }
    }

    pub fn factor(&self) -> LinearFactor {
        LinearFactor::new(self.boundary_weight, Exponent::from_parity(self.dim))
    }
}

/// One record per cell, in canonical cell order.
pub fn local_data(x: &SimplicialComplex) -> Vec<CellLocalData> {
    let index = CofaceIndex::new(x);
    par::map(index.cells(), |c| {
        CellLocalData::new((*c).clone(), index.link_euler_char(c))
    })
}

pub fn total_measure(x: &SimplicialComplex) -> i64 {
    local_data(x).iter().map(|d| d.measure).sum()
}

/// One factor per cell, before any cancellation.
pub fn raw_factors(x: &SimplicialComplex) -> Vec<LinearFactor> {
    local_data(x).iter().map(CellLocalData::factor).collect()
}

/// The exponential generating function of `χ_n(X)` as a canonical product.
pub fn gen_function(x: &SimplicialComplex) -> LinearFactorProduct {
    LinearFactorProduct::from_factors(raw_factors(x))
}

/// `eu_X(t)` expanded through `t^order`.
pub fn eu_series(x: &SimplicialComplex, order: usize) -> TruncatedSeries {
    gen_function(x).expand(order)
}

pub fn chi_n(x: &SimplicialComplex, n: usize) -> BigInt {
    eu_series(x, n)
        .chi_values()
        .pop()
        .expect("order n series has n + 1 terms")
}

/// `χ_0 ..= χ_order`.
pub fn chi_sequence(x: &SimplicialComplex, order: usize) -> Vec<BigInt> {
    eu_series(x, order).chi_values()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecursionConfig {
    pub cell_budget: usize,
}

impl Default for RecursionConfig {
    fn default() -> Self {
        Self {
            cell_budget: DEFAULT_CELL_BUDGET,
        }
    }
}

/// `χ_n` by the cell-integral recursion over punctured complexes.
///
/// Cost grows roughly like `(cells)^n`; intended for `n <= 3` on small inputs.
pub fn chi_n_recursive(
    x: &SimplicialComplex,
    n: usize,
    config: &RecursionConfig,
) -> Result<BigInt> {
    let mut memo = HashMap::new();
    recurse(x, n, config, &mut memo)
}

type Memo = HashMap<(Vec<Vec<u32>>, usize), BigInt>;

fn recurse(
    x: &SimplicialComplex,
    n: usize,
    config: &RecursionConfig,
    memo: &mut Memo,
) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::one());
    }
    check_budget(x, config)?;
    let key = (x.facet_lists(), n);
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    let mut total = BigInt::zero();
    for d in local_data(x).into_iter().filter(|d| d.measure != 0) {
        // χ_0 of anything is 1, so the last level needs no puncture.
        let inner = if n == 1 {
            BigInt::one()
        } else {
            let punctured = x.puncture(&d.cell)?;
            check_budget(&punctured, config)?;
            recurse(&punctured, n - 1, config, memo)?
        };
        total += inner * d.measure;
    }
    memo.insert(key, total.clone());
    Ok(total)
}

fn check_budget(x: &SimplicialComplex, config: &RecursionConfig) -> Result<()> {
    if x.num_cells() > config.cell_budget {
        Err(Error::ResourceLimit {
            what: "recursion cell budget",
            limit: config.cell_budget as u64,
        })
    } else {
        Ok(())
    }
}

/// The single-edge complex `[0, 1]`.
pub fn interval() -> SimplicialComplex {
    SimplicialComplex::from_facets([[0u32, 1]]).expect("valid facet")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeIdentityReport {
    pub cone: TruncatedSeries,
    pub cylinder: TruncatedSeries,
    /// `1 + (1 - χ(X)) t`.
    pub ratio: TruncatedSeries,
    pub holds: bool,
}

/// Checks `eu_{CX} = eu_{X×I} · (1 + (1 - χX) t)` through `t^order`.
pub fn verify_cone_identity(x: &SimplicialComplex, order: usize) -> ConeIdentityReport {
    let cone = eu_series(&x.cone(), order);
    let cylinder = eu_series(&x.product(&interval()), order);
    let mut ratio = vec![BigInt::zero(); order + 1];
    ratio[0] = BigInt::one();
    if order > 0 {
        ratio[1] = BigInt::from(1 - x.euler_char());
    }
    let ratio = TruncatedSeries::from_coeffs(ratio);
    let holds = cylinder.multiply(&ratio) == cone;
    ConeIdentityReport {
        cone,
        cylinder,
        ratio,
        holds,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointUnionReport {
    pub union: TruncatedSeries,
    pub product: TruncatedSeries,
    pub holds: bool,
}

/// Checks `eu_{X⊔Y} = eu_X · eu_Y` through `t^order`.
pub fn verify_disjoint_union(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    order: usize,
) -> DisjointUnionReport {
    let union = eu_series(&x.disjoint_union(y), order);
    let product = eu_series(x, order).multiply(&eu_series(y, order));
    let holds = union == product;
    DisjointUnionReport {
        union,
        product,
        holds,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionReport {
    /// Per-cell factor lists at each level, level 0 being `X` itself.
    pub raw_factors: Vec<Vec<LinearFactor>>,
    /// Canonical form at each level.
    pub factored: Vec<LinearFactorProduct>,
    pub series: Vec<TruncatedSeries>,
    pub holds: bool,
}

/// Compares `X` with its barycentric subdivision.
pub fn verify_subdivision_invariance(x: &SimplicialComplex, order: usize) -> SubdivisionReport {
    verify_subdivision_invariance_to_depth(x, order, 1)
}

/// Compares `X`, `sd X`, ..., `sd^depth X`.
pub fn verify_subdivision_invariance_to_depth(
    x: &SimplicialComplex,
    order: usize,
    depth: usize,
) -> SubdivisionReport {
    let mut raw = Vec::with_capacity(depth + 1);
    let mut current = x.clone();
    for level in 0..=depth {
        if level > 0 {
            current = current.barycentric_subdivision();
        }
        raw.push(raw_factors(&current));
    }
    let factored: Vec<LinearFactorProduct> = raw
        .iter()
        .map(|fs| LinearFactorProduct::from_factors(fs.iter().copied()))
        .collect();
    let series: Vec<TruncatedSeries> = factored.iter().map(|p| p.expand(order)).collect();
    let holds = series.windows(2).all(|w| w[0] == w[1]);
    SubdivisionReport {
        raw_factors: raw,
        factored,
        series,
        holds,
    }
}
