//! Prüfer codes for trees on `{0..n}`.
//!
//! Convention: the unrooted tree on `n + 1` vertices is encoded by repeatedly
//! deleting the smallest-labeled leaf (vertex 0 included, when it has degree
//! one) and recording its neighbour, until two vertices remain. Decoding
//! rebuilds the unrooted tree and orients every edge toward 0. Codes are
//! ranked as base-`(n+1)` numerals, most significant entry first.

use crate::combinat::tree::Tree;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PruferCode {
    n: usize,
    code: Vec<usize>,
}

impl PruferCode {
    pub fn new(n: usize, code: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("Prüfer codes need n >= 1".into()));
        }
        if code.len() != n - 1 {
            return Err(Error::Domain(format!(
                "code length {} should be n - 1 = {}",
                code.len(),
                n - 1
            )));
        }
        if let Some(&bad) = code.iter().find(|&&x| x > n) {
            return Err(Error::Domain(format!("code entry {bad} is outside 0..={n}")));
        }
        Ok(PruferCode { n, code })
    }

    /// The code of lexicographic rank `rank` among all `(n+1)^(n-1)` codes.
    pub fn from_rank(n: usize, mut rank: u128) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("Prüfer codes need n >= 1".into()));
        }
        if rank >= crate::budget::cayley_count(n) {
            return Err(Error::Domain(format!("rank {rank} is out of range for n={n}")));
        }
        let base = n as u128 + 1;
        let mut code = vec![0; n - 1];
        for slot in code.iter_mut().rev() {
            *slot = (rank % base) as usize;
            rank /= base;
        }
        Ok(PruferCode { n, code })
    }

    pub fn rank(&self) -> u128 {
        let base = self.n as u128 + 1;
        self.code.iter().fold(0u128, |acc, &x| acc * base + x as u128)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> &[usize] {
        &self.code
    }

    pub fn decode(&self) -> Tree {
        let mut scratch = DecodeScratch::default();
        let mut parents = vec![0; self.n];
        scratch.decode_into(self.n, &self.code, &mut parents);
        Tree::from_parents_unchecked(parents)
    }

    pub fn encode(tree: &Tree) -> PruferCode {
        let n = tree.n();
        let size = n + 1;
        // Re-root at vertex n by reversing the path from n up to 0.
        let mut up = vec![usize::MAX; size];
        for (v, slot) in up.iter_mut().enumerate().skip(1) {
            *slot = tree.parent(v);
        }
        up[0] = usize::MAX;
        let mut prev = usize::MAX;
        let mut v = n;
        loop {
            let next = up[v];
            up[v] = prev;
            if v == 0 {
                break;
            }
            prev = v;
            v = next;
        }

        let mut degree = vec![0usize; size];
        for v in 1..=n {
            degree[v] += 1;
            degree[tree.parent(v)] += 1;
        }
        let mut code = Vec::with_capacity(n.saturating_sub(1));
        let mut ptr = first_leaf(&degree, 0);
        let mut leaf = ptr;
        for _ in 0..n.saturating_sub(1) {
            let next = up[leaf];
            code.push(next);
            degree[next] -= 1;
            if degree[next] == 1 && next < ptr {
                leaf = next;
            } else {
                ptr = first_leaf(&degree, ptr + 1);
                leaf = ptr;
            }
        }
        PruferCode { n, code }
    }
}

fn first_leaf(degree: &[usize], from: usize) -> usize {
    (from..degree.len())
        .find(|&v| degree[v] == 1)
        .expect("a tree with at least two vertices has a leaf")
}

/// Reusable buffers for decoding many codes of the same size.
#[derive(Debug, Default)]
pub(crate) struct DecodeScratch {
    degree: Vec<usize>,
    toward_n: Vec<usize>,
}

impl DecodeScratch {
    /// Writes `parents[i - 1] = parent(i)` of the tree rooted at 0.
    pub(crate) fn decode_into(&mut self, n: usize, code: &[usize], parents: &mut [usize]) {
        let size = n + 1;
        self.degree.clear();
        self.degree.resize(size, 1);
        for &x in code {
            self.degree[x] += 1;
        }
        self.toward_n.clear();
        self.toward_n.resize(size, usize::MAX);

        // Linear-time decode; each removed leaf points at its neighbour,
        // which orients the tree toward the last vertex n.
        let mut ptr = first_leaf(&self.degree, 0);
        let mut leaf = ptr;
        for &x in code {
            self.toward_n[leaf] = x;
            self.degree[x] -= 1;
            if self.degree[x] == 1 && x < ptr {
                leaf = x;
            } else {
                ptr = first_leaf(&self.degree, ptr + 1);
                leaf = ptr;
            }
        }
        self.toward_n[leaf] = n;

        parents[..n].copy_from_slice(&self.toward_n[1..=n]);
        // Reverse the path 0 -> n so every edge points toward 0.
        let mut child = 0;
        let mut v = self.toward_n[0];
        while v != usize::MAX {
            let next = self.toward_n[v];
            parents[v - 1] = child;
            child = v;
            v = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn code(n: usize, c: &[usize]) -> PruferCode {
        PruferCode::new(n, c.to_vec()).unwrap()
    }

    #[test]
    fn decode_examples() {
        assert_eq!(code(2, &[0]).decode().parents(), &[0, 0]);
        assert_eq!(code(1, &[]).decode().parents(), &[0]);
        // Leaves 0 and 1 go first (both recording 3), then edge 2-3.
        assert_eq!(code(3, &[3, 3]).decode().parents(), &[3, 3, 0]);
        // Eliminate 0 (record 2), then 1 (record 3), leaving edge 2-3.
        assert_eq!(code(3, &[2, 3]).decode().parents(), &[3, 0, 2]);
    }

    #[test]
    fn encode_examples() {
        let star = Tree::from_parents(vec![0, 0]).unwrap();
        assert_eq!(PruferCode::encode(&star).code(), &[0]);
        let single = Tree::from_parents(vec![0]).unwrap();
        assert!(PruferCode::encode(&single).code().is_empty());
    }

    #[test]
    fn validation() {
        assert!(PruferCode::new(3, vec![0]).is_err());
        assert!(PruferCode::new(3, vec![0, 4]).is_err());
        assert!(PruferCode::new(0, vec![]).is_err());
    }

    #[test]
    fn all_codes_decode_to_distinct_trees() {
        for n in 1..=6 {
            let total = crate::budget::cayley_count(n);
            let mut seen = HashSet::new();
            for r in 0..total {
                let c = PruferCode::from_rank(n, r).unwrap();
                assert_eq!(c.rank(), r);
                let tree = c.decode();
                assert!(Tree::from_parents(tree.parents().to_vec()).is_ok());
                assert_eq!(PruferCode::encode(&tree), c);
                assert!(seen.insert(tree));
            }
            assert_eq!(seen.len() as u128, total);
        }
    }
}
