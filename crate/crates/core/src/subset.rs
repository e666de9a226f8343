//! Sorted index sets over `{1..m}` and the binomial bookkeeping that goes with them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A subset of `{1..m}` stored as a strictly increasing list of 1-based indices.
///
/// The derived ordering is lexicographic on the sorted lists. Restricted to
/// subsets of a fixed cardinality this is the order in which the first
/// differing entry decides, which is the order used for leading terms of
/// line diagram sums.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(Vec<usize>);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubsetParseError {
    #[error("subset must be written as {{i,j,...}}, got {0:?}")]
    Syntax(String),
    #[error("subset entry {0:?} is not a positive integer")]
    Entry(String),
}

impl Subset {
    pub fn empty() -> Self {
        Subset(Vec::new())
    }

    /// Builds a subset from arbitrary indices; duplicates are collapsed.
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Subset(indices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        while let (Some(&x), Some(&y)) = (a.peek(), b.peek()) {
            match x.cmp(y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Subset::new(v)
    }

    /// Applies `f` to every entry and re-sorts.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Subset {
        Subset::new(self.0.iter().map(|&i| f(i)).collect())
    }

    /// All `r`-element subsets of `{1..n}` in lexicographic order.
    pub fn all_of_size(n: usize, r: usize) -> Combinations {
        Combinations::new(n, r)
    }

    /// All subsets of `{1..n}`, grouped by size and lexicographic within a size.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..=n).flat_map(move |r| Combinations::new(n, r))
    }
}

impl From<Vec<usize>> for Subset {
    fn from(v: Vec<usize>) -> Self {
        Subset::new(v)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for Subset {
    type Err = SubsetParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| SubsetParseError::Syntax(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Subset::empty());
        }
        inner
            .split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(i) if i > 0 => Ok(i),
                _ => Err(SubsetParseError::Entry(t.trim().to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Subset::new)
    }
}

/// Lexicographic iterator over the `r`-subsets of `{1..n}`.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, r: usize) -> Self {
        let current = (r <= n).then(|| (1..=r).collect());
        Combinations { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.current.take()?;
        let out = Subset(cur.clone());
        let r = cur.len();
        let mut next = cur;
        // rightmost entry that can still be incremented
        let pos = (0..r).rev().find(|&p| next[p] < self.n - (r - 1 - p));
        if let Some(p) = pos {
            next[p] += 1;
            for q in p + 1..r {
                next[q] = next[q - 1] + 1;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Binomial coefficient; zero when `r > n`.
pub fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}
