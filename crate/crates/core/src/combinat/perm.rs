use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotPermutation(word));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    pub fn descents(&self) -> usize {
        descents(&self.word)
    }

    pub fn inversions(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Up-down pattern `σ1 < σ2 > σ3 < ...`.
    pub fn is_alternating(&self) -> bool {
        self.word.windows(2).enumerate().all(|(i, pair)| {
            if i % 2 == 0 {
                pair[0] < pair[1]
            } else {
                pair[0] > pair[1]
            }
        })
    }

    /// True iff, for every `k`, the subword of letters `{1..k}` has no
    /// double descent `w_i > w_{i+1} > w_{i+2}`.
    pub fn is_simsun(&self) -> bool {
        let mut restricted = Vec::with_capacity(self.word.len());
        (1..=self.word.len()).all(|k| {
            restricted.clear();
            restricted.extend(self.word.iter().copied().filter(|&v| v <= k));
            !restricted
                .windows(3)
                .any(|w| w[0] > w[1] && w[1] > w[2])
        })
    }

    /// Decodes an inversion table: `code[i-1] = #{j < i : σ_j > σ_i}`,
    /// with `0 <= code[i-1] <= i-1`. The inversion count of the result is
    /// the sum of the table.
    pub fn from_inversion_table(code: &[usize]) -> Result<Self> {
        let n = code.len();
        for (i, &c) in code.iter().enumerate() {
            if c > i {
                return Err(Error::Domain(format!(
                    "inversion table entry {c} at position {} exceeds {i}",
                    i + 1
                )));
            }
        }
        let mut remaining: Vec<usize> = (1..=n).collect();
        let mut word = vec![0; n];
        // The last letter is preceded by every other letter, so it is the
        // (i - c_i)-th smallest of what is left.
        for i in (0..n).rev() {
            word[i] = remaining.remove(i - code[i]);
        }
        Ok(Permutation { word })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.word.len() > 9 { " " } else { "" };
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub(crate) fn descents(word: &[usize]) -> usize {
    word.windows(2).filter(|p| p[0] > p[1]).count()
}
