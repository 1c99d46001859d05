use crate::combinat::perm::Permutation;
use crate::error::{Error, Result};

/// A labeled tree on `{0..n}` rooted at vertex 0, stored as a parent map.
///
/// `parent(i)` is defined for `i` in `1..=n`; the root has no parent and is
/// never counted as a leaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    // parents[i - 1] is the parent of vertex i.
    parents: Vec<usize>,
}

impl Tree {
    /// Validates a parent map given as `parents[i - 1] = parent(i)`.
    pub fn from_parents(parents: Vec<usize>) -> Result<Self> {
        let n = parents.len();
        if n == 0 {
            return Err(Error::Domain("a tree needs at least one non-root vertex".into()));
        }
        for (idx, &p) in parents.iter().enumerate() {
            let v = idx + 1;
            if p > n {
                return Err(Error::Domain(format!("parent({v}) = {p} is outside 0..={n}")));
            }
            if p == v {
                return Err(Error::Cycle { vertex: v });
            }
        }
        for start in 1..=n {
            let mut v = start;
            let mut steps = 0;
            while v != 0 {
                if steps == n {
                    return Err(Error::Cycle { vertex: start });
                }
                v = parents[v - 1];
                steps += 1;
            }
        }
        Ok(Tree { parents })
    }

    pub(crate) fn from_parents_unchecked(parents: Vec<usize>) -> Self {
        debug_assert!(Tree::from_parents(parents.clone()).is_ok());
        Tree { parents }
    }

    /// Number of non-root vertices.
    pub fn n(&self) -> usize {
        self.parents.len()
    }

    pub fn parent(&self, v: usize) -> usize {
        self.parents[v - 1]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parents
    }

    /// Children of every vertex `0..=n`, each list in increasing order.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.n() + 1];
        for (idx, &p) in self.parents.iter().enumerate() {
            children[p].push(idx + 1);
        }
        children
    }

    /// Pairs `i < j` of non-root vertices where `j` lies on the path from `i` to 0.
    pub fn inversions(&self) -> usize {
        inversions(&self.parents)
    }

    /// Childless vertices among `1..=n`.
    pub fn leaves(&self) -> usize {
        leaves(&self.parents)
    }

    /// No inversions; equivalently every vertex has a smaller parent.
    pub fn is_increasing(&self) -> bool {
        self.first_descending_edge().is_none()
    }

    fn first_descending_edge(&self) -> Option<(usize, usize)> {
        self.parents
            .iter()
            .enumerate()
            .map(|(idx, &p)| (idx + 1, p))
            .find(|&(v, p)| p > v)
    }

    /// Depth-first search from 0, always entering the largest unvisited
    /// child first. The visit order of `1..=n` is a permutation whose
    /// descent count is `leaves() - 1`; the map is a bijection from
    /// increasing trees onto `S_n`.
    pub fn increasing_to_permutation(&self) -> Result<Permutation> {
        if let Some((vertex, ancestor)) = self.first_descending_edge() {
            return Err(Error::NotIncreasing { vertex, ancestor });
        }
        let children = self.children();
        let mut order = Vec::with_capacity(self.n());
        // Children are pushed in increasing order, so the largest pops first.
        let mut stack: Vec<usize> = children[0].clone();
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend_from_slice(&children[v]);
        }
        Ok(Permutation::from_word_unchecked(order))
    }

    /// A tree with a single leaf is a path `0 - σ1 - σ2 - ... - σn`; returns
    /// `σ`, whose inversions are exactly the tree's inversions.
    pub fn path_to_permutation(&self) -> Result<Permutation> {
        let children = self.children();
        let mut word = Vec::with_capacity(self.n());
        let mut v = 0;
        loop {
            match children[v].as_slice() {
                [] => break,
                [only] => {
                    word.push(*only);
                    v = *only;
                }
                _ => {
                    return Err(Error::Domain(format!(
                        "vertex {v} has {} children; not a path",
                        children[v].len()
                    )))
                }
            }
        }
        Ok(Permutation::from_word_unchecked(word))
    }
}

pub(crate) fn inversions(parents: &[usize]) -> usize {
    let mut count = 0;
    for i in 1..=parents.len() {
        let mut a = parents[i - 1];
        while a != 0 {
            if a > i {
                count += 1;
            }
            a = parents[a - 1];
        }
    }
    count
}

pub(crate) fn leaves(parents: &[usize]) -> usize {
    let n = parents.len();
    let mut has_child = vec![false; n + 1];
    for &p in parents {
        has_child[p] = true;
    }
    has_child[1..].iter().filter(|&&c| !c).count()
}
