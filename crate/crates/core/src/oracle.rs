//! Brute-force Euler characteristic of the simplicial deleted product.
//!
//! The `n`-fold deleted product of `X` is the union of the product cells
//! `σ_1 × ... × σ_n` whose closed simplices are pairwise vertex-disjoint.
//! Its Euler characteristic is the alternating count
//! `Σ (-1)^{dim σ_1 + ... + dim σ_n}` over those ordered tuples, so nothing
//! is materialized. After enough subdivision it agrees with `χ(C_n(X))`;
//! [`stabilized_chi`] subdivides until two consecutive levels agree.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::complex::{Cell, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::par;

/// Default cap on candidate extensions examined by one count.
pub const DEFAULT_TUPLE_BUDGET: u64 = 100_000_000;

/// Local work is published to the shared budget counter in chunks of this size.
const FLUSH_EVERY: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Worker threads; `None` uses the global pool, `Some(1)` runs inline.
    pub workers: Option<usize>,
    /// Maximum number of candidate extensions examined during enumeration.
    pub tuple_budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            workers: None,
            tuple_budget: DEFAULT_TUPLE_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeletedProductStats {
    pub chi: i64,
    /// Ordered tuples of pairwise disjoint cells.
    pub tuples: u64,
    /// Candidate extensions examined, the quantity bounded by the budget.
    pub examined: u64,
}

/// Cells flattened for enumeration, vertices relabelled densely and each cell
/// carrying a sparse bitmask `(word, bits)` over the vertex set.
struct Layout {
    parity: Vec<bool>,
    mask_start: Vec<usize>,
    masks: Vec<(u32, u64)>,
    words: usize,
}

impl Layout {
    fn new(x: &SimplicialComplex) -> Self {
        let vertices: Vec<VertexId> = x.vertices().collect();
        let rank = |v: &VertexId| vertices.binary_search(v).expect("vertex of the complex");
        let mut parity = Vec::with_capacity(x.num_cells());
        let mut mask_start = Vec::with_capacity(x.num_cells() + 1);
        let mut masks = Vec::new();
        // x.cells() is already sorted by (dimension, vertices).
        for c in x.cells() {
            parity.push(c.dim() % 2 == 1);
            mask_start.push(masks.len());
            let mut current: Option<(u32, u64)> = None;
            for v in c.vertices() {
                let r = rank(v);
                let (w, b) = ((r / 64) as u32, 1u64 << (r % 64));
                current = match current {
                    Some((cw, bits)) if cw == w => Some((cw, bits | b)),
                    Some(done) => {
                        masks.push(done);
                        Some((w, b))
                    }
                    None => Some((w, b)),
                };
            }
            masks.extend(current);
        }
        mask_start.push(masks.len());
        Self {
            parity,
            mask_start,
            masks,
            words: vertices.len().div_ceil(64),
        }
    }

    fn len(&self) -> usize {
        self.parity.len()
    }

    fn mask(&self, cell: usize) -> &[(u32, u64)] {
        &self.masks[self.mask_start[cell]..self.mask_start[cell + 1]]
    }

    fn is_free(&self, cell: usize, used: &[u64]) -> bool {
        self.mask(cell)
            .iter()
            .all(|&(w, b)| used[w as usize] & b == 0)
    }

    fn toggle(&self, cell: usize, used: &mut [u64]) {
        for &(w, b) in self.mask(cell) {
            used[w as usize] ^= b;
        }
    }
}

struct Budget<'a> {
    limit: u64,
    spent: &'a AtomicU64,
    exhausted: &'a AtomicBool,
}

#[derive(Default, Clone, Copy)]
struct Tally {
    chi: i64,
    tuples: u64,
    examined: u64,
    unflushed: u64,
}

impl Tally {
    fn merge(self, other: Tally) -> Tally {
        Tally {
            chi: self.chi + other.chi,
            tuples: self.tuples + other.tuples,
            examined: self.examined + other.examined,
            unflushed: 0,
        }
    }
}

struct Search<'a> {
    layout: &'a Layout,
    budget: &'a Budget<'a>,
    n: usize,
}

impl Search<'_> {
    /// Counts all tuples starting with `first`.
    fn tally_first(&self, first: usize) -> Option<Tally> {
        let mut used = vec![0u64; self.layout.words];
        self.layout.toggle(first, &mut used);
        let mut tally = Tally::default();
        let candidates: Vec<u32> = (0..self.layout.len() as u32).collect();
        self.extend(
            &candidates,
            &mut used,
            1,
            self.layout.parity[first],
            &mut tally,
        )?;
        self.flush(&mut tally)?;
        Some(tally)
    }

    /// `candidates` is a superset of the cells disjoint from every vertex in `used`.
    fn extend(
        &self,
        candidates: &[u32],
        used: &mut [u64],
        depth: usize,
        odd: bool,
        tally: &mut Tally,
    ) -> Option<()> {
        if depth == self.n {
            tally.chi += if odd { -1 } else { 1 };
            tally.tuples += 1;
            return Some(());
        }
        tally.examined += candidates.len() as u64;
        tally.unflushed += candidates.len() as u64;
        if tally.unflushed >= FLUSH_EVERY {
            self.flush(tally)?;
        }
        let free: Vec<u32> = candidates
            .iter()
            .copied()
            .filter(|&c| self.layout.is_free(c as usize, used))
            .collect();
        if depth + 1 == self.n {
            for &c in &free {
                tally.chi += if odd ^ self.layout.parity[c as usize] {
                    -1
                } else {
                    1
                };
            }
            tally.tuples += free.len() as u64;
            return Some(());
        }
        for &c in &free {
            let c = c as usize;
            self.layout.toggle(c, used);
            let r = self.extend(&free, used, depth + 1, odd ^ self.layout.parity[c], tally);
            self.layout.toggle(c, used);
            r?;
        }
        Some(())
    }

    fn flush(&self, tally: &mut Tally) -> Option<()> {
        let total = self
            .budget
            .spent
            .fetch_add(tally.unflushed, Ordering::Relaxed)
            + tally.unflushed;
        tally.unflushed = 0;
        if total > self.budget.limit {
            self.budget.exhausted.store(true, Ordering::Relaxed);
        }
        if self.budget.exhausted.load(Ordering::Relaxed) {
            None
        } else {
            Some(())
        }
    }
}

/// Alternating count over ordered `n`-tuples of pairwise disjoint cells.
pub fn deleted_product_chi(x: &SimplicialComplex, n: usize, config: &OracleConfig) -> Result<i64> {
    deleted_product_stats(x, n, config).map(|s| s.chi)
}

/// Same enumeration as [`deleted_product_chi`], also reporting its size.
///
/// Work is split by the first tuple entry. Integer sums make the result
/// independent of the worker count; exceeding the budget is an error for
/// every worker count since the total work is fixed.
pub fn deleted_product_stats(
    x: &SimplicialComplex,
    n: usize,
    config: &OracleConfig,
) -> Result<DeletedProductStats> {
    if n == 0 {
        return Err(Error::Malformed("the oracle needs n >= 1".into()));
    }
    let layout = Layout::new(x);
    let spent = AtomicU64::new(layout.len() as u64);
    let exhausted = AtomicBool::new(layout.len() as u64 > config.tuple_budget);
    let budget = Budget {
        limit: config.tuple_budget,
        spent: &spent,
        exhausted: &exhausted,
    };
    let search = Search {
        layout: &layout,
        budget: &budget,
        n,
    };
    let firsts: Vec<usize> = (0..layout.len()).collect();
    let partials: Vec<Option<Tally>> = if exhausted.load(Ordering::Relaxed) {
        vec![None]
    } else if par::is_parallel(config.workers) {
        par::with_workers(config.workers, || {
            par::map(&firsts, |&f| search.tally_first(f))
        })
    } else {
        firsts.iter().map(|&f| search.tally_first(f)).collect()
    };
    let total = partials
        .into_iter()
        .try_fold(Tally::default(), |acc, p| p.map(|t| acc.merge(t)));
    match total {
        Some(t) if !exhausted.load(Ordering::Relaxed) => Ok(DeletedProductStats {
            chi: t.chi,
            tuples: t.tuples,
            examined: t.examined + layout.len() as u64,
        }),
        _ => Err(Error::ResourceLimit {
            what: "oracle tuple budget",
            limit: config.tuple_budget,
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilized {
    /// The value shared by two consecutive subdivision levels.
    pub value: i64,
    /// The lower of the two agreeing levels (0 = the complex itself).
    pub level: usize,
    /// Value at every level computed, starting at level 0.
    pub values: Vec<i64>,
}

/// Runs [`deleted_product_chi`] on `X, sd X, sd² X, ...` up to `sd^{max_level} X`
/// and stops at the first two consecutive equal values.
///
/// Agreement of two levels is a heuristic signal, not a proof of convergence.
pub fn stabilized_chi(
    x: &SimplicialComplex,
    n: usize,
    max_level: usize,
    config: &OracleConfig,
) -> Result<Stabilized> {
    if max_level == 0 {
        return Err(Error::Malformed(
            "need at least one subdivision level".into(),
        ));
    }
    let mut values = Vec::new();
    let mut current = x.clone();
    for level in 0..=max_level {
        if level > 0 {
            current = current.barycentric_subdivision();
        }
        values.push(deleted_product_chi(&current, n, config)?);
        if level > 0 && values[level] == values[level - 1] {
            return Ok(Stabilized {
                value: values[level],
                level: level - 1,
                values,
            });
        }
    }
    Err(Error::NoStabilization { max_level, values })
}

/// Whether `tuple` is a valid deleted-product cell.
pub fn is_disjoint_tuple(tuple: &[Cell]) -> bool {
    tuple
        .iter()
        .enumerate()
        .all(|(i, a)| tuple[i + 1..].iter().all(|b| a.is_disjoint(b)))
}
