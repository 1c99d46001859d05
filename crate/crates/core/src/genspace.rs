//! Deterministic, shardable streams over `Tree(n+1)`, `PF(n)` and `S_n`.
//!
//! A shard `(index, count)` keeps the objects whose rank `r` in the full
//! stream satisfies `r % count == index`, in increasing rank order. Tree
//! ranks are Prüfer-code ranks; parking functions are ranked by their
//! position in lexicographic order.

use crate::budget::{cayley_count, factorial, Budget};
use crate::combinat::{DecodeScratch, ParkingFunction, Permutation, Tree};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexShard {
    index: usize,
    count: usize,
}

impl IndexShard {
    pub fn new(index: usize, count: usize) -> Result<Self> {
        if count == 0 || index >= count {
            return Err(Error::InvalidShard { index, count });
        }
        Ok(IndexShard { index, count })
    }

    /// The single shard covering everything.
    pub fn full() -> Self {
        IndexShard { index: 0, count: 1 }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// All shards of a `count`-way split.
    pub fn split(count: usize) -> Result<Vec<IndexShard>> {
        (0..count.max(1))
            .map(|i| IndexShard::new(i, count))
            .collect()
    }
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    Ok(())
}

/// Trees on `{0..n}` in this shard, by increasing Prüfer rank.
pub fn all_trees(n: usize, shard: IndexShard, budget: &Budget) -> Result<TreeStream> {
    require_positive(n)?;
    budget.check_objects(format!("Tree({})", n + 1), cayley_count(n))?;
    Ok(TreeStream::new(n, shard))
}

/// Parking functions of length `n` in this shard, in lexicographic order.
pub fn all_parking_functions(
    n: usize,
    shard: IndexShard,
    budget: &Budget,
) -> Result<ParkingStream> {
    require_positive(n)?;
    budget.check_objects(format!("PF({n})"), cayley_count(n))?;
    Ok(ParkingStream::new(n, shard))
}

/// All of `S_n` in lexicographic order; `n = 0` yields the empty permutation.
pub fn all_permutations(n: usize, budget: &Budget) -> Result<PermutationStream> {
    budget.check_objects(format!("S_{n}"), factorial(n))?;
    Ok(PermutationStream {
        word: (1..=n).collect(),
        started: false,
        done: false,
    })
}

#[derive(Debug)]
pub struct TreeStream {
    n: usize,
    step: usize,
    digits: Vec<usize>,
    parents: Vec<usize>,
    scratch: DecodeScratch,
    pending: bool,
}

impl TreeStream {
    fn new(n: usize, shard: IndexShard) -> Self {
        let mut digits = vec![0; n - 1];
        let base = n + 1;
        let mut carry = shard.index;
        for d in digits.iter_mut().rev() {
            *d = carry % base;
            carry /= base;
        }
        TreeStream {
            n,
            step: shard.count,
            digits,
            parents: vec![0; n],
            scratch: DecodeScratch::default(),
            pending: carry == 0,
        }
    }

    /// Lending form of `next`: the parent map of the next tree,
    /// `parents[i-1] = parent(i)`.
    pub fn next_parents(&mut self) -> Option<&[usize]> {
        if !self.pending {
            return None;
        }
        self.scratch
            .decode_into(self.n, &self.digits, &mut self.parents);
        self.advance();
        Some(&self.parents)
    }

    fn advance(&mut self) {
        let base = self.n + 1;
        let mut carry = self.step;
        for d in self.digits.iter_mut().rev() {
            let v = *d + carry;
            *d = v % base;
            carry = v / base;
            if carry == 0 {
                break;
            }
        }
        if carry != 0 {
            self.pending = false;
        }
    }
}

impl Iterator for TreeStream {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        self.next_parents()
            .map(|p| Tree::from_parents_unchecked(p.to_vec()))
    }
}

#[derive(Debug)]
pub struct ParkingStream {
    n: usize,
    shard: IndexShard,
    prefs: Vec<usize>,
    // hist[v] = number of entries equal to v
    hist: Vec<usize>,
    started: bool,
    exhausted: bool,
    rank: usize,
}

impl ParkingStream {
    fn new(n: usize, shard: IndexShard) -> Self {
        let mut hist = vec![0; n + 2];
        hist[1] = n;
        ParkingStream {
            n,
            shard,
            prefs: vec![1; n],
            hist,
            started: false,
            exhausted: false,
            rank: 0,
        }
    }

    /// Lending form of `next`.
    pub fn next_prefs(&mut self) -> Option<&[usize]> {
        loop {
            if self.started {
                if !self.step_lex() {
                    self.exhausted = true;
                }
            } else {
                self.started = true;
            }
            if self.exhausted {
                return None;
            }
            let rank = self.rank;
            self.rank += 1;
            if rank % self.shard.count == self.shard.index {
                return Some(&self.prefs);
            }
        }
    }

    /// Every prefix is kept only while it can still be completed: at most
    /// `n - j` entries may exceed `j`, for every `j`.
    fn feasible(&self) -> bool {
        let n = self.n;
        let mut above = 0;
        for j in (1..n).rev() {
            above += self.hist[j + 1];
            if above > n - j {
                return false;
            }
        }
        true
    }

    fn set(&mut self, pos: usize, value: usize) {
        self.hist[self.prefs[pos]] -= 1;
        self.prefs[pos] = value;
        self.hist[value] += 1;
    }

    /// Moves to the lexicographic successor; false when none exists.
    fn step_lex(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        for pos in (0..self.n).rev() {
            // Suffix after pos is all ones here, which never hurts feasibility.
            while self.prefs[pos] < self.n {
                let next = self.prefs[pos] + 1;
                self.set(pos, next);
                if self.feasible() {
                    return true;
                }
            }
            self.set(pos, 1);
        }
        false
    }
}

impl Iterator for ParkingStream {
    type Item = ParkingFunction;

    fn next(&mut self) -> Option<ParkingFunction> {
        self.next_prefs()
            .map(|p| ParkingFunction::from_prefs_unchecked(p.to_vec()))
    }
}

#[derive(Debug)]
pub struct PermutationStream {
    word: Vec<usize>,
    started: bool,
    done: bool,
}

impl PermutationStream {
    /// Lending form of `next`.
    pub fn next_word(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !next_permutation(&mut self.word) {
            self.done = true;
            return None;
        }
        Some(&self.word)
    }
}

impl Iterator for PermutationStream {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.next_word()
            .map(|w| Permutation::from_word_unchecked(w.to_vec()))
    }
}

/// Rearranges `word` into its lexicographic successor; false if it was the last.
fn next_permutation(word: &mut [usize]) -> bool {
    let len = word.len();
    if len < 2 {
        return false;
    }
    let Some(i) = (0..len - 1).rev().find(|&i| word[i] < word[i + 1]) else {
        return false;
    };
    let j = (i + 1..len).rev().find(|&j| word[j] > word[i]).unwrap();
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::is_parking_function;
    use std::collections::HashSet;

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn shard_validation() {
        assert!(IndexShard::new(0, 0).is_err());
        assert!(IndexShard::new(3, 3).is_err());
        assert!(IndexShard::new(2, 3).is_ok());
    }

    #[test]
    fn tree_counts() {
        assert_eq!(all_trees(3, IndexShard::full(), &budget()).unwrap().count(), 16);
        assert_eq!(all_trees(1, IndexShard::full(), &budget()).unwrap().count(), 1);
        let sizes: Vec<usize> = IndexShard::split(3)
            .unwrap()
            .into_iter()
            .map(|s| all_trees(4, s, &budget()).unwrap().count())
            .collect();
        assert_eq!(sizes, vec![42, 42, 41]);
        let mut all = HashSet::new();
        for s in IndexShard::split(3).unwrap() {
            for t in all_trees(4, s, &budget()).unwrap() {
                assert!(all.insert(t));
            }
        }
        assert_eq!(all.len(), 125);
    }

    #[test]
    fn tree_shard_larger_than_space() {
        let shard = IndexShard::new(5, 8).unwrap();
        assert_eq!(all_trees(1, shard, &budget()).unwrap().count(), 0);
        assert_eq!(all_trees(2, shard, &budget()).unwrap().count(), 0);
        let shard = IndexShard::new(2, 8).unwrap();
        assert_eq!(all_trees(2, shard, &budget()).unwrap().count(), 1);
    }

    #[test]
    fn parking_counts() {
        assert_eq!(
            all_parking_functions(3, IndexShard::full(), &budget()).unwrap().count(),
            16
        );
        let ones: Vec<_> = all_parking_functions(1, IndexShard::full(), &budget())
            .unwrap()
            .collect();
        assert_eq!(ones.len(), 1);
        assert_eq!(ones[0].prefs(), &[1]);
    }

    #[test]
    fn parking_matches_filtered_cube() {
        let n: usize = 4;
        let mut oracle = Vec::new();
        for idx in 0..n.pow(n as u32) {
            let mut r = idx;
            let seq: Vec<i64> = (0..n)
                .map(|_| {
                    let v = (r % n) as i64 + 1;
                    r /= n;
                    v
                })
                .rev()
                .collect();
            if is_parking_function(&seq) {
                oracle.push(seq.iter().map(|&v| v as usize).collect::<Vec<_>>());
            }
        }
        oracle.sort();
        let streamed: Vec<Vec<usize>> = all_parking_functions(n, IndexShard::full(), &budget())
            .unwrap()
            .map(|p| p.prefs().to_vec())
            .collect();
        assert_eq!(streamed.len(), 125);
        // lexicographic order, hence identical to the sorted oracle
        assert_eq!(streamed, oracle);
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(all_permutations(3, &budget()).unwrap().count(), 6);
        let empty: Vec<_> = all_permutations(0, &budget()).unwrap().collect();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());
        let five: HashSet<_> = all_permutations(5, &budget()).unwrap().collect();
        assert_eq!(five.len(), 120);
        let words: Vec<_> = all_permutations(3, &budget())
            .unwrap()
            .map(|p| p.into_word())
            .collect();
        assert_eq!(words[0], vec![1, 2, 3]);
        assert_eq!(words[5], vec![3, 2, 1]);
    }

    #[test]
    fn budget_refusal() {
        let tight = Budget {
            max_objects: 100,
            ..Budget::default()
        };
        assert!(matches!(
            all_trees(4, IndexShard::full(), &tight),
            Err(Error::Budget { requested: 125, .. })
        ));
        assert!(all_parking_functions(4, IndexShard::full(), &tight).is_err());
        assert!(all_permutations(5, &tight).is_err());
        assert!(all_trees(0, IndexShard::full(), &budget()).is_err());
    }
}
