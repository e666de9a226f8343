//! The type-C Weyl group as signed permutations, acting on the graded pieces
//! of the cohomology ring by permuting the generators `X_i` with signs.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_rational::BigRational;
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::subset::{binomial, Subset};

/// Default largest rank for full-group sums: `2^7·7! = 645120` elements.
pub const DEFAULT_BRUTE_BOUND: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("bad parameters m={m}, k={k}, l={l}: need k <= m and l <= m-k")]
    BadParameters { m: usize, k: usize, l: usize },
    #[error("index {0} outside 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("cannot parse group element {0:?}: {1}")]
    Parse(String, String),
    #[error("group of rank {m} exceeds brute-force bound {bound} (set EXOTIC_BRUTE_BOUND to raise it)")]
    GroupTooLarge { m: usize, bound: usize },
    #[error("elements of different rank: {0} vs {1}")]
    SizeMismatch(usize, usize),
}

/// A signed permutation `i ↦ eps_i·pi(i)` of `{±1..±m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pi: Vec<usize>,
    eps: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(m: usize) -> Self {
        SignedPermutation { pi: (1..=m).collect(), eps: vec![1; m] }
    }

    pub fn new(pi: Vec<usize>, eps: Vec<i8>) -> Result<Self, WeylError> {
        let m = pi.len();
        if eps.len() != m {
            return Err(WeylError::SizeMismatch(m, eps.len()));
        }
        let mut seen = vec![false; m + 1];
        for &p in &pi {
            if p == 0 || p > m || std::mem::replace(&mut seen[p], true) {
                return Err(WeylError::Parse(format!("{pi:?}"), "not a permutation".into()));
            }
        }
        if eps.iter().any(|&e| e != 1 && e != -1) {
            return Err(WeylError::Parse(format!("{eps:?}"), "signs must be ±1".into()));
        }
        Ok(SignedPermutation { pi, eps })
    }

    /// The generator `s_0` (negate 1) or `s_i` (swap `i`, `i+1`).
    pub fn generator(m: usize, i: usize) -> Result<Self, WeylError> {
        let mut w = Self::identity(m);
        match i {
            0 if m >= 1 => w.eps[0] = -1,
            i if i < m => w.pi.swap(i - 1, i),
            _ => return Err(WeylError::IndexOutOfRange(i, m.saturating_sub(1))),
        }
        Ok(w)
    }

    /// Product of generators read left to right, so `[0, 1]` is `s_0·s_1`.
    pub fn from_word(m: usize, word: &[usize]) -> Result<Self, WeylError> {
        word.iter().try_fold(Self::identity(m), |acc, &i| Ok(acc.compose(&Self::generator(m, i)?)))
    }

    /// Window notation: the `i`-th entry is the signed image of `i`.
    pub fn from_window(window: &[i64]) -> Result<Self, WeylError> {
        let pi = window.iter().map(|v| v.unsigned_abs() as usize).collect();
        let eps = window.iter().map(|&v| if v < 0 { -1 } else { 1 }).collect();
        Self::new(pi, eps)
    }

    /// Parses a generator word (`"s0 s1 s3"`, `"s0s1"`, `"e"`) or a window
    /// (`"2 -1 3 4"`).
    pub fn parse(m: usize, s: &str) -> Result<Self, WeylError> {
        let t = s.trim();
        let bad = |msg: &str| WeylError::Parse(s.to_string(), msg.to_string());
        if t.is_empty() || t == "e" {
            return Ok(Self::identity(m));
        }
        if t.starts_with('s') {
            let word = t
                .split(|c: char| c == 's' || c.is_whitespace() || c == '*' || c == '·')
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<usize>().map_err(|_| bad("generator names are s0..s{m-1}")))
                .collect::<Result<Vec<_>, _>>()?;
            return Self::from_word(m, &word);
        }
        let window = t
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<i64>().map_err(|_| bad("window entries must be signed integers")))
            .collect::<Result<Vec<_>, _>>()?;
        if window.len() != m {
            return Err(WeylError::SizeMismatch(m, window.len()));
        }
        Self::from_window(&window)
    }

    pub fn m(&self) -> usize {
        self.pi.len()
    }

    /// Underlying permutation `pi(i)`, 1-based.
    pub fn pi(&self, i: usize) -> usize {
        self.pi[i - 1]
    }

    pub fn eps(&self, i: usize) -> i8 {
        self.eps[i - 1]
    }

    pub fn window(&self) -> Vec<i64> {
        self.pi.iter().zip(&self.eps).map(|(&p, &e)| e as i64 * p as i64).collect()
    }

    /// `(self·other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let pi = other.pi.iter().map(|&j| self.pi[j - 1]).collect();
        let eps = other.pi.iter().zip(&other.eps).map(|(&j, &e)| e * self.eps[j - 1]).collect();
        SignedPermutation { pi, eps }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let m = self.m();
        let mut pi = vec![0; m];
        let mut eps = vec![1; m];
        for i in 0..m {
            pi[self.pi[i] - 1] = i + 1;
            eps[self.pi[i] - 1] = self.eps[i];
        }
        SignedPermutation { pi, eps }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.m())
    }

    pub fn random<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Self {
        let mut pi: Vec<usize> = (1..=m).collect();
        pi.shuffle(rng);
        let eps = (0..m).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
        SignedPermutation { pi, eps }
    }

    /// All `2^m·m!` elements.
    pub fn all(m: usize) -> impl Iterator<Item = SignedPermutation> {
        (1..=m).permutations(m).flat_map(move |pi| {
            (0u32..1 << m).map(move |mask| SignedPermutation {
                pi: pi.clone(),
                eps: (0..m).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect(),
            })
        })
    }

    /// `(length, sign product)` of each cycle of `pi`.
    pub fn signed_cycle_type(&self) -> Vec<(usize, i8)> {
        let m = self.m();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let (mut len, mut sign, mut i) = (0, 1i8, start);
            while !seen[i] {
                seen[i] = true;
                len += 1;
                sign *= self.eps[i];
                i = self.pi[i] - 1;
            }
            out.push((len, sign));
        }
        out.sort_unstable();
        out
    }

    /// `w·X_I = (Π_{i∈I} eps_i)·X_{pi(I)}`.
    pub fn act_on_monomial(&self, index: &Subset) -> Result<(i8, Subset), WeylError> {
        let m = self.m();
        if let Some(bad) = index.iter().find(|&i| i == 0 || i > m) {
            return Err(WeylError::IndexOutOfRange(bad, m));
        }
        let sign = index.iter().map(|i| self.eps[i - 1]).product();
        Ok((sign, index.map(|i| self.pi[i - 1])))
    }

    /// Matrix of the action on the monomial basis of `X_I`, `|I| = l`:
    /// column `I` holds the image of `X_I`.
    pub fn matrix(&self, l: usize) -> Vec<Vec<i64>> {
        let basis: Vec<Subset> = Subset::all_of_size(self.m(), l).collect();
        let pos = |s: &Subset| basis.binary_search(s).expect("image of a basis monomial");
        let mut a = vec![vec![0i64; basis.len()]; basis.len()];
        for (c, i) in basis.iter().enumerate() {
            let (sign, j) = self.act_on_monomial(i).expect("basis indices are in range");
            a[pos(&j)][c] = sign as i64;
        }
        a
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.window().iter().join(" "))
    }
}

impl FromStr for SignedPermutation {
    type Err = WeylError;

    /// Window notation only, since a word does not determine `m`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let n = s.split(|c: char| c.is_whitespace() || c == ',').filter(|p| !p.is_empty() && *p != "[" && *p != "]").count();
        Self::parse(n, s)
    }
}

fn check_params(m: usize, k: usize, l: usize) -> Result<(), WeylError> {
    if k > m || l > m - k {
        return Err(WeylError::BadParameters { m, k, l });
    }
    Ok(())
}

/// Trace of `w` on the degree-`2l` piece, summed directly over the
/// `w`-stable index sets.
pub fn character_value(m: usize, k: usize, l: usize, w: &SignedPermutation) -> Result<i64, WeylError> {
    check_params(m, k, l)?;
    if w.m() != m {
        return Err(WeylError::SizeMismatch(m, w.m()));
    }
    Ok(Subset::all_of_size(m, l)
        .filter(|i| i.map(|j| w.pi(j)) == *i)
        .map(|i| i.iter().map(|j| w.eps(j) as i64).product::<i64>())
        .sum())
}

/// All characters at once: entry `l` is the coefficient of `t^l` in
/// `Π_cycles (1 + sign·t^len)`, since a stable index set is a union of cycles.
pub fn character_polynomial(w: &SignedPermutation) -> Vec<i64> {
    let mut poly = vec![0i64; w.m() + 1];
    poly[0] = 1;
    for (len, sign) in w.signed_cycle_type() {
        for d in (len..poly.len()).rev() {
            poly[d] += sign as i64 * poly[d - len];
        }
    }
    poly
}

/// The degree-`2l` character of the `(m,k)` ring, evaluated lazily.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Character {
    pub m: usize,
    pub k: usize,
    pub l: usize,
}

impl Character {
    pub fn new(m: usize, k: usize, l: usize) -> Result<Self, WeylError> {
        check_params(m, k, l)?;
        Ok(Character { m, k, l })
    }

    pub fn degree(&self) -> usize {
        2 * self.l
    }

    pub fn dimension(&self) -> u64 {
        binomial(self.m, self.l)
    }

    pub fn value(&self, w: &SignedPermutation) -> Result<i64, WeylError> {
        character_value(self.m, self.k, self.l, w)
    }

    /// JSON-ready table over labelled elements.
    pub fn table(&self, elements: &[(String, SignedPermutation)]) -> Result<CharacterTable, WeylError> {
        let values = elements
            .iter()
            .map(|(label, w)| Ok(CharacterEntry { w: label.clone(), chi: self.value(w)? }))
            .collect::<Result<_, WeylError>>()?;
        Ok(CharacterTable { degree: self.degree(), values })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterEntry {
    pub w: String,
    pub chi: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub degree: usize,
    pub values: Vec<CharacterEntry>,
}

/// Largest rank allowed for full-group sums; `EXOTIC_BRUTE_BOUND` overrides.
pub fn brute_bound() -> usize {
    std::env::var("EXOTIC_BRUTE_BOUND").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_BRUTE_BOUND)
}

fn group_order(m: usize) -> BigInt {
    (1..=m).fold(BigInt::from(1u64) << m, |acc, i| acc * i)
}

/// Gram matrix `⟨χ_{2l}, χ_{2l'}⟩` for `0 ≤ l,l' ≤ m-k`, summed over the
/// whole group.
pub fn inner_product_matrix(m: usize, k: usize) -> Result<Vec<Vec<BigRational>>, WeylError> {
    check_params(m, k, 0)?;
    let bound = brute_bound();
    if m > bound {
        return Err(WeylError::GroupTooLarge { m, bound });
    }
    let top = m - k;
    let sums = (1..=m)
        .permutations(m)
        .par_bridge()
        .map(|pi| {
            let mut acc = vec![vec![0i64; top + 1]; top + 1];
            for mask in 0u32..1 << m {
                let eps = (0..m).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                let chi = character_polynomial(&SignedPermutation { pi: pi.clone(), eps });
                for a in 0..=top {
                    for b in a..=top {
                        acc[a][b] += chi[a] * chi[b];
                    }
                }
            }
            acc
        })
        .reduce(
            || vec![vec![0i64; top + 1]; top + 1],
            |mut x, y| {
                for (rx, ry) in x.iter_mut().zip(y) {
                    for (u, v) in rx.iter_mut().zip(ry) {
                        *u += v;
                    }
                }
                x
            },
        );
    let order = group_order(m);
    Ok((0..=top)
        .map(|a| {
            (0..=top)
                .map(|b| BigRational::new(BigInt::from(sums[a.min(b)][a.max(b)]), order.clone()))
                .collect()
        })
        .collect())
}

/// `⟨χ_{2l}, χ_{2l'}⟩ = (1/|W|) Σ_w χ_{2l}(w) χ_{2l'}(w)`.
pub fn inner_product(m: usize, k: usize, l: usize, l2: usize) -> Result<BigRational, WeylError> {
    check_params(m, k, l)?;
    check_params(m, k, l2)?;
    Ok(inner_product_matrix(m, k)?[l][l2].clone())
}

/// A Coxeter relation that failed, with where it failed.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("relation {relation} fails {context}")]
pub struct RelationFailure {
    pub relation: String,
    pub context: String,
}

/// The defining relations of type `C_m` as `(word, order)`: `(word)^order = e`.
pub fn coxeter_relations(m: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    for i in 0..m {
        out.push((vec![i], 2));
        for j in i + 1..m {
            let order = match (i, j) {
                (0, 1) => 4,
                _ if j == i + 1 => 3,
                _ => 2,
            };
            out.push((vec![i, j], order));
        }
    }
    out
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
}

fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// Checks every Coxeter relation in the group law and, entrywise, as
/// products of generator matrices on each graded piece; also checks that
/// the matrix of a product equals the product of matrices.
pub fn verify_generator_relations(m: usize) -> Result<(), RelationFailure> {
    let name = |word: &[usize], order: usize| {
        format!("({})^{order} = e", word.iter().map(|i| format!("s{i}")).join(" "))
    };
    for (word, order) in coxeter_relations(m) {
        let rep: Vec<usize> = word.iter().copied().cycle().take(word.len() * order).collect();
        let w = SignedPermutation::from_word(m, &rep).expect("generator indices are below m");
        if !w.is_identity() {
            return Err(RelationFailure { relation: name(&word, order), context: format!("in the group: got {w}") });
        }
        for l in 0..=m {
            let prod = rep.iter().fold(identity_matrix(binomial(m, l) as usize), |acc, &i| {
                mat_mul(&acc, &SignedPermutation::generator(m, i).unwrap().matrix(l))
            });
            if prod != identity_matrix(prod.len()) {
                return Err(RelationFailure { relation: name(&word, order), context: format!("on degree {}", 2 * l) });
            }
        }
    }
    for l in 0..=m {
        for i in 0..m {
            for j in 0..m {
                let g = SignedPermutation::generator(m, i).unwrap();
                let h = SignedPermutation::generator(m, j).unwrap();
                if g.compose(&h).matrix(l) != mat_mul(&g.matrix(l), &h.matrix(l)) {
                    return Err(RelationFailure {
                        relation: format!("rho(s{i} s{j}) = rho(s{i}) rho(s{j})"),
                        context: format!("on degree {}", 2 * l),
                    });
                }
            }
        }
    }
    Ok(())
}
