//! Line diagrams, enriched cup diagrams and the standard homology basis.
//!
//! The line diagram `l_U` stands for the cell of `(S²)^m` that is a 2-cell
//! exactly at the positions in `U`. An enriched cup diagram decorates cups
//! and half-cups with optional dots (rays always carry one) and names a cell
//! of a single component `S_a`; [`line_diagram_sum`] gives its image in the
//! homology of `(S²)^m`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{enumerate, Connection, CupDiagram, DiagramError};
use crate::linalg;
use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("bad parameters m={m}, k={k}: need 0 <= k <= m")]
    BadParameters { m: usize, k: usize },
    #[error("degree 2*{l} exceeds the top degree 2*{max}")]
    DegreeTooLarge { l: usize, max: usize },
    #[error("vertex {0} is not the defining vertex of a cup, ray or half-cup")]
    NotADefiningVertex(usize),
    #[error("misplaced dot at position {0}")]
    MisplacedDot(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// An element of the free abelian group on line diagrams `l_U`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LineDiagramVector {
    m: usize,
    terms: BTreeMap<Subset, BigInt>,
}

impl LineDiagramVector {
    pub fn zero(m: usize) -> Self {
        LineDiagramVector { m, terms: BTreeMap::new() }
    }

    pub fn basis(m: usize, u: Subset) -> Self {
        let mut v = Self::zero(m);
        v.add_term(u, BigInt::one());
        v
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn add_term(&mut self, u: Subset, c: BigInt) {
        assert!(u.largest().is_none_or(|x| x <= self.m), "index outside 1..={}", self.m);
        let e = self.terms.entry(u).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn coefficient(&self, u: &Subset) -> BigInt {
        self.terms.get(u).cloned().unwrap_or_default()
    }

    /// Terms in increasing order of `U`.
    pub fn terms(&self) -> impl Iterator<Item = (&Subset, &BigInt)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common `|U|` of all terms, if the vector is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Subset::len);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// Smallest `U` in the support, with its coefficient.
    pub fn leading_term(&self) -> Option<(&Subset, &BigInt)> {
        self.terms.iter().next()
    }
}

impl fmt::Display for LineDiagramVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (u, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "l_{u}")?;
        }
        Ok(())
    }
}

impl Serialize for LineDiagramVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            #[serde(rename = "U")]
            u: &'a Subset,
            c: serde_json::Value,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(u, c)| Term {
                u,
                c: c.to_i64().map_or_else(|| serde_json::Value::String(c.to_string()), Into::into),
            })
            .collect();
        let mut st = s.serialize_struct("LineDiagramVector", 2)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// A cup diagram whose cups and half-cups may carry a dot; rays always do.
///
/// Dots are recorded at the defining vertex of a component: the left end of
/// a cup, the ray vertex, or the half-cup vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EnrichedCupDiagram {
    base: CupDiagram,
    dotted: Subset,
}

impl EnrichedCupDiagram {
    pub fn new(base: CupDiagram, dotted: Subset) -> Result<Self, HomologyError> {
        for v in dotted.iter() {
            if v == 0 || v > base.m() || !(base.is_opener(v) || base.connection(v) == Connection::Ray) {
                return Err(HomologyError::NotADefiningVertex(v));
            }
        }
        let dotted = dotted.union(&Subset::new(base.rays()));
        Ok(EnrichedCupDiagram { base, dotted })
    }

    pub fn base(&self) -> &CupDiagram {
        &self.base
    }

    pub fn dotted(&self) -> &Subset {
        &self.dotted
    }

    pub fn is_dotted(&self, defining_vertex: usize) -> bool {
        self.dotted.contains(defining_vertex)
    }

    pub fn undotted_cups(&self) -> Vec<(usize, usize)> {
        self.base.cups().into_iter().filter(|&(i, _)| !self.dotted.contains(i)).collect()
    }

    pub fn undotted_half_cups(&self) -> Vec<usize> {
        self.base.half_cups().into_iter().filter(|&h| !self.dotted.contains(h)).collect()
    }

    /// Left ends of undotted cups together with undotted half-cup vertices.
    pub fn undotted_openers(&self) -> Subset {
        Subset::new(self.base.openers().iter().filter(|&v| !self.dotted.contains(v)).collect())
    }

    /// `l` such that the homological degree is `2l`.
    pub fn half_degree(&self) -> usize {
        self.undotted_openers().len()
    }

    pub fn degree(&self) -> usize {
        2 * self.half_degree()
    }
}

impl fmt::Display for EnrichedCupDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, ch) in self.base.word().chars().enumerate() {
            write!(f, "{ch}")?;
            if self.dotted.contains(i + 1) {
                f.write_str(".")?;
            }
        }
        Ok(())
    }
}

impl FromStr for EnrichedCupDiagram {
    type Err = HomologyError;

    /// Accepts the base word with a `.` after each dotted defining vertex;
    /// the dot after a ray may be omitted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut word = String::new();
        let mut dotted = Vec::new();
        for (pos, ch) in s.trim().chars().enumerate() {
            if ch == '.' {
                let v = word.chars().count();
                if v == 0 || word.ends_with(')') || dotted.last() == Some(&v) {
                    return Err(HomologyError::MisplacedDot(pos + 1));
                }
                dotted.push(v);
            } else {
                word.push(ch);
            }
        }
        let base: CupDiagram = word.parse()?;
        EnrichedCupDiagram::new(base, Subset::new(dotted))
    }
}

/// `L_M = Σ_U (−1)^{Λ_M(U)} l_U`: `U` picks one endpoint of every undotted
/// cup and contains every undotted half-cup; `Λ_M(U)` counts right cup ends in `U`.
pub fn line_diagram_sum(mdiag: &EnrichedCupDiagram) -> LineDiagramVector {
    let cups = mdiag.undotted_cups();
    let halves = Subset::new(mdiag.undotted_half_cups());
    let mut out = LineDiagramVector::zero(mdiag.base.m());
    for mask in 0u64..1 << cups.len() {
        let mut u: Vec<usize> = halves.iter().collect();
        let mut rights = 0;
        for (bit, &(i, j)) in cups.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                u.push(j);
                rights += 1;
            } else {
                u.push(i);
            }
        }
        let sign = if rights % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_term(Subset::new(u), sign);
    }
    out
}

/// The map β into enriched diagrams of type `((k),(m-k))`.
///
/// The `m-l-k` largest entries of the left row of `a`'s bitableau move to
/// the right row; the rebuilt diagram carries dots on all rays and on every
/// component touching a moved vertex.
pub fn beta_map(a: &CupDiagram, k: usize) -> Result<EnrichedCupDiagram, HomologyError> {
    let m = a.m();
    let l = a.cups_plus_half_cups();
    if k > m {
        return Err(HomologyError::BadParameters { m, k });
    }
    if l > m - k {
        return Err(HomologyError::DegreeTooLarge { l, max: m - k });
    }
    let t = a.to_bitableau();
    let shift = m - l - k;
    let left = t.left();
    let moved = &left[left.len() - shift..];
    let openers = a.openers().union(&Subset::new(moved.to_vec()));
    let base = CupDiagram::from_openers(m, &openers)?;
    let dotted: Vec<usize> = moved
        .iter()
        .map(|&v| match base.connection(v) {
            Connection::CupWith(j) => v.min(j),
            _ => v,
        })
        .collect();
    EnrichedCupDiagram::new(base, Subset::new(dotted))
}

/// The image of β: standard enriched diagrams, grouped by degree `2l`
/// (`l = 0..=m-k`) and in enumeration order within a degree.
pub fn standard_enriched(m: usize, k: usize) -> Result<Vec<EnrichedCupDiagram>, HomologyError> {
    if k > m {
        return Err(HomologyError::BadParameters { m, k });
    }
    let mut out = Vec::new();
    for l in 0..=m - k {
        out.extend(standard_enriched_of_degree(m, k, l)?);
    }
    Ok(out)
}

pub fn standard_enriched_of_degree(m: usize, k: usize, l: usize) -> Result<Vec<EnrichedCupDiagram>, HomologyError> {
    if k > m {
        return Err(HomologyError::BadParameters { m, k });
    }
    if l > m - k {
        return Err(HomologyError::DegreeTooLarge { l, max: m - k });
    }
    enumerate(m, m - l)?.iter().map(|a| beta_map(a, k)).collect()
}

/// Rank of the `L_M` of degree `2l` standard enriched diagrams, columns
/// indexed by the `l`-subsets in increasing order.
pub fn rank_check(m: usize, k: usize, l: usize) -> Result<usize, HomologyError> {
    Ok(linalg::rank(&line_sum_matrix(m, k, l)?))
}

pub fn line_sum_matrix(m: usize, k: usize, l: usize) -> Result<Vec<Vec<BigInt>>, HomologyError> {
    let columns: Vec<Subset> = Subset::all_of_size(m, l).collect();
    Ok(standard_enriched_of_degree(m, k, l)?
        .iter()
        .map(|md| {
            let v = line_diagram_sum(md);
            columns.iter().map(|u| v.coefficient(u)).collect()
        })
        .collect())
}

/// Even Betti numbers `b_0, b_2, …, b_{2(m-k)}`, each the rank of the span
/// of the degree-`2l` classes `L_M`; odd ones vanish.
pub fn betti_numbers(m: usize, k: usize) -> Result<Vec<u64>, HomologyError> {
    if k > m {
        return Err(HomologyError::BadParameters { m, k });
    }
    (0..=m - k).into_par_iter().map(|l| Ok(rank_check(m, k, l)? as u64)).collect()
}
