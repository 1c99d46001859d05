//! Generating polynomials by exhaustive tally, by recurrence, and the
//! reference sequences they are compared with.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bipoly::{q_number, BivariatePolynomial};
use crate::budget::{cayley_count, factorial, Budget};
use crate::combinat::{cosum, descents, excedances, park, tree_inversions, tree_leaves};
use crate::error::{Error, Result};
use crate::genspace::{all_parking_functions, all_permutations, all_trees, IndexShard};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectKind {
    Tree,
    ParkingFunction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QStatistic {
    /// `inv(T)` on trees.
    TreeInversions,
    /// `cosum(π)` on parking functions.
    Cosum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TStatistic {
    /// `lev(T) - 1` on trees.
    LeavesMinusOne,
    /// `exced(π)`.
    Excedances,
    /// `des(oc(π))`.
    OutcomeDescents,
    /// `des(oc(π)^-1)`.
    InverseOutcomeDescents,
}

impl QStatistic {
    fn object(self) -> ObjectKind {
        match self {
            QStatistic::TreeInversions => ObjectKind::Tree,
            QStatistic::Cosum => ObjectKind::ParkingFunction,
        }
    }

    fn name(self) -> &'static str {
        match self {
            QStatistic::TreeInversions => "tree inversions",
            QStatistic::Cosum => "cosum",
        }
    }
}

impl TStatistic {
    fn object(self) -> ObjectKind {
        match self {
            TStatistic::LeavesMinusOne => ObjectKind::Tree,
            _ => ObjectKind::ParkingFunction,
        }
    }

    fn name(self) -> &'static str {
        match self {
            TStatistic::LeavesMinusOne => "leaves - 1",
            TStatistic::Excedances => "excedances",
            TStatistic::OutcomeDescents => "des(outcome)",
            TStatistic::InverseOutcomeDescents => "des(outcome^-1)",
        }
    }
}

fn object_name(kind: ObjectKind) -> &'static str {
    match kind {
        ObjectKind::Tree => "trees",
        ObjectKind::ParkingFunction => "parking functions",
    }
}

/// Which objects to enumerate and which pair of statistics to record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DistributionSpec {
    object: ObjectKind,
    q_stat: QStatistic,
    t_stat: TStatistic,
    n: usize,
}

impl DistributionSpec {
    pub fn new(
        object: ObjectKind,
        q_stat: QStatistic,
        t_stat: TStatistic,
        n: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("distributions need n >= 1".into()));
        }
        if q_stat.object() != object {
            return Err(Error::IncompatibleSpec {
                object: object_name(object),
                statistic: q_stat.name(),
            });
        }
        if t_stat.object() != object {
            return Err(Error::IncompatibleSpec {
                object: object_name(object),
                statistic: t_stat.name(),
            });
        }
        Ok(DistributionSpec {
            object,
            q_stat,
            t_stat,
            n,
        })
    }

    /// `I_n(q,t)`: trees by inversions and leaves minus one.
    pub fn tree(n: usize) -> Result<Self> {
        Self::new(
            ObjectKind::Tree,
            QStatistic::TreeInversions,
            TStatistic::LeavesMinusOne,
            n,
        )
    }

    /// Parking functions by cosum and the given `t` statistic. With
    /// [`TStatistic::Excedances`] this is `Ĩ_n(q,t)`.
    pub fn parking(n: usize, t_stat: TStatistic) -> Result<Self> {
        Self::new(ObjectKind::ParkingFunction, QStatistic::Cosum, t_stat, n)
    }

    pub fn object(&self) -> ObjectKind {
        self.object
    }

    pub fn q_stat(&self) -> QStatistic {
        self.q_stat
    }

    pub fn t_stat(&self) -> TStatistic {
        self.t_stat
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn object_count(&self) -> u128 {
        cayley_count(self.n)
    }

    fn check_budget(&self, budget: &Budget) -> Result<()> {
        budget.check_objects(
            format!("{} of size {}", object_name(self.object), self.n),
            self.object_count(),
        )
    }
}

/// Machine-word coefficient grid used while tallying; the merge monoid for
/// parallel shards. Every count is bounded by `(n+1)^(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountGrid {
    cols: usize,
    counts: Vec<u64>,
}

impl CountGrid {
    fn for_size(n: usize) -> Self {
        let rows = n * (n - 1) / 2 + 1;
        CountGrid {
            cols: n,
            counts: vec![0; rows * n],
        }
    }

    #[inline]
    fn record(&mut self, q_exp: usize, t_exp: usize) {
        self.counts[q_exp * self.cols + t_exp] += 1;
    }

    fn merge(mut self, other: &CountGrid) -> CountGrid {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn to_polynomial(&self) -> BivariatePolynomial {
        BivariatePolynomial::from_grid(
            self.counts.len() / self.cols,
            self.cols,
            self.counts.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }
}

/// Tallies one shard of the object space.
pub fn tally_shard(spec: &DistributionSpec, shard: IndexShard, budget: &Budget) -> Result<CountGrid> {
    let n = spec.n;
    let mut grid = CountGrid::for_size(n);
    match spec.object {
        ObjectKind::Tree => {
            let mut trees = all_trees(n, shard, budget)?;
            while let Some(parents) = trees.next_parents() {
                grid.record(tree_inversions(parents), tree_leaves(parents) - 1);
            }
        }
        ObjectKind::ParkingFunction => {
            let mut pfs = all_parking_functions(n, shard, budget)?;
            let mut occupied = vec![false; n];
            let mut spots = vec![0; n];
            let mut cars = vec![0; n];
            while let Some(prefs) = pfs.next_prefs() {
                let t_exp = match spec.t_stat {
                    TStatistic::Excedances => excedances(prefs),
                    TStatistic::OutcomeDescents => {
                        occupied.fill(false);
                        park(prefs, &mut occupied, &mut spots);
                        descents(&spots)
                    }
                    TStatistic::InverseOutcomeDescents => {
                        occupied.fill(false);
                        park(prefs, &mut occupied, &mut spots);
                        for (car, &spot) in spots.iter().enumerate() {
                            cars[spot - 1] = car + 1;
                        }
                        descents(&cars)
                    }
                    TStatistic::LeavesMinusOne => unreachable!("validated spec"),
                };
                grid.record(cosum(prefs), t_exp);
            }
        }
    }
    Ok(grid)
}

/// Exact `Σ q^qstat t^tstat` over the whole object space, computed shard by
/// shard on the calling thread.
pub fn tally_sequential(
    spec: &DistributionSpec,
    shards: usize,
    budget: &Budget,
) -> Result<BivariatePolynomial> {
    spec.check_budget(budget)?;
    let mut acc = CountGrid::for_size(spec.n);
    for shard in IndexShard::split(shards)? {
        acc = acc.merge(&tally_shard(spec, shard, budget)?);
    }
    Ok(acc.to_polynomial())
}

/// Like [`tally_sequential`], with shards spread over the current rayon pool.
/// Grids are merged in shard order, so the result does not depend on
/// scheduling.
#[cfg(feature = "parallel")]
pub fn tally_parallel(
    spec: &DistributionSpec,
    shards: usize,
    budget: &Budget,
) -> Result<BivariatePolynomial> {
    use rayon::prelude::*;

    spec.check_budget(budget)?;
    let grids = IndexShard::split(shards)?
        .into_par_iter()
        .map(|shard| tally_shard(spec, shard, budget))
        .collect::<Result<Vec<_>>>()?;
    let total = grids
        .iter()
        .fold(CountGrid::for_size(spec.n), |acc, g| acc.merge(g));
    Ok(total.to_polynomial())
}

/// Tally using the parallel engine when the `parallel` feature is enabled.
pub fn tally(spec: &DistributionSpec, shards: usize, budget: &Budget) -> Result<BivariatePolynomial> {
    #[cfg(feature = "parallel")]
    {
        tally_parallel(spec, shards, budget)
    }
    #[cfg(not(feature = "parallel"))]
    {
        tally_sequential(spec, shards, budget)
    }
}

/// Row `n` of Pascal's triangle.
fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for pair in row.windows(2) {
            next.push(&pair[0] + &pair[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}

/// `I_0(q), ..., I_n(q)` from `I_n = Σ_i C(n-1,i) [i+1]_q I_i I_{n-1-i}`.
pub fn kreweras_sequence(n: usize, budget: &Budget) -> Result<Vec<BivariatePolynomial>> {
    budget.check_recurrence(n)?;
    let mut seq = vec![BivariatePolynomial::one()];
    for m in 1..=n {
        let binom = binomial_row(m - 1);
        let mut next = BivariatePolynomial::zero();
        for i in 0..m {
            let term = &(&q_number(i + 1) * &seq[i]) * &seq[m - 1 - i];
            next = &next + &term.scale(&binom[i]);
        }
        seq.push(next);
    }
    Ok(seq)
}

pub fn kreweras_recurrence(n: usize, budget: &Budget) -> Result<BivariatePolynomial> {
    Ok(kreweras_sequence(n, budget)?.pop().unwrap())
}

/// `I_0(q,t), ..., I_n(q,t)` from the `t`-deformed recurrence
/// `I_n = [n]_q I_{n-1} + t Σ_{i <= n-2} C(n-1,i) [i+1]_q I_i I_{n-1-i}`.
pub fn stanley_yin_sequence(n: usize, budget: &Budget) -> Result<Vec<BivariatePolynomial>> {
    budget.check_recurrence(n)?;
    let t = BivariatePolynomial::t();
    let mut seq = vec![BivariatePolynomial::one()];
    for m in 1..=n {
        let binom = binomial_row(m - 1);
        let mut branching = BivariatePolynomial::zero();
        for i in 0..m - 1 {
            let term = &(&q_number(i + 1) * &seq[i]) * &seq[m - 1 - i];
            branching = &branching + &term.scale(&binom[i]);
        }
        let next = &(&q_number(m) * &seq[m - 1]) + &(&t * &branching);
        seq.push(next);
    }
    Ok(seq)
}

pub fn stanley_yin_recurrence(n: usize, budget: &Budget) -> Result<BivariatePolynomial> {
    Ok(stanley_yin_sequence(n, budget)?.pop().unwrap())
}

/// `E_0, ..., E_max_n` via the Seidel–Entringer (boustrophedon) triangle.
pub fn zigzag_numbers(max_n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for m in 1..=max_n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(BigInt::zero());
        for k in 1..=m {
            let v = &next[k - 1] + &row[m - k];
            next.push(v);
        }
        out.push(next[m].clone());
        row = next;
    }
    out
}

/// Rows `1..=max_n`; entry `[n-1][k]` counts simsun permutations of
/// `S_{n-1}` with `k` descents. Trailing zeros are dropped.
pub fn simsun_descent_triangle(max_n: usize, budget: &Budget) -> Result<Vec<Vec<u64>>> {
    if max_n == 0 {
        return Err(Error::Domain("max_n must be at least 1".into()));
    }
    budget.check_objects(format!("S_{}", max_n - 1), factorial(max_n - 1))?;
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let m = n - 1;
        let mut row = vec![0u64; m.max(1)];
        let mut perms = all_permutations(m, budget)?;
        while let Some(word) = perms.next_word() {
            if is_simsun_word(word) {
                row[descents(word)] += 1;
            }
        }
        while row.len() > 1 && row.last() == Some(&0) {
            row.pop();
        }
        rows.push(row);
    }
    Ok(rows)
}

fn is_simsun_word(word: &[usize]) -> bool {
    // Letters are removed from largest down; each intermediate word must
    // avoid w_i > w_{i+1} > w_{i+2}.
    let mut w = word.to_vec();
    loop {
        if w.windows(3).any(|x| x[0] > x[1] && x[1] > x[2]) {
            return false;
        }
        if w.len() < 3 {
            return true;
        }
        let largest = w.len();
        w.retain(|&v| v != largest);
    }
}
