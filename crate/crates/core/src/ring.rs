//! The cohomology ring `ℚ[X_1..X_m] / ⟨X_i², X_I : |I| = m-k+1⟩`.
//!
//! The quotient is by a monomial ideal, so square-free monomials `X_I` with
//! `|I| ≤ m-k` form a basis and products reduce on the spot: `X_I·X_J` is
//! `X_{I∪J}` when the sets are disjoint and the union is small enough, and
//! zero otherwise.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::diagram::Weight;
use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("ring parameters differ: (m,k)=({0},{1}) vs ({2},{3})")]
    ParameterMismatch(usize, usize, usize, usize),
    #[error("bad parameters m={m}, k={k}: need 0 <= k <= m")]
    BadParameters { m: usize, k: usize },
    #[error("generator index {0} outside 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("cannot parse ring element at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// An element of the cohomology ring of type `((k),(m-k))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    m: usize,
    k: usize,
    terms: BTreeMap<Subset, BigRational>,
}

impl RingElement {
    pub fn zero(m: usize, k: usize) -> Result<Self, RingError> {
        if k > m {
            return Err(RingError::BadParameters { m, k });
        }
        Ok(RingElement { m, k, terms: BTreeMap::new() })
    }

    pub fn one(m: usize, k: usize) -> Result<Self, RingError> {
        Self::monomial(m, k, Subset::empty())
    }

    /// `X_I`; zero once `|I|` exceeds `m-k`.
    pub fn monomial(m: usize, k: usize, index: Subset) -> Result<Self, RingError> {
        let mut r = Self::zero(m, k)?;
        if let Some(big) = index.iter().find(|&i| i == 0 || i > m) {
            return Err(RingError::IndexOutOfRange(big, m));
        }
        r.add_term(index, BigRational::one());
        Ok(r)
    }

    pub fn generator(m: usize, k: usize, i: usize) -> Result<Self, RingError> {
        Self::monomial(m, k, Subset::new(vec![i]))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Largest surviving monomial size, `m-k`.
    pub fn cap(&self) -> usize {
        self.m - self.k
    }

    fn add_term(&mut self, index: Subset, c: BigRational) {
        if index.len() > self.cap() || c.is_zero() {
            return;
        }
        let e = self.terms.entry(index.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&index);
        }
    }

    /// Terms ordered by degree, then lexicographically.
    pub fn terms(&self) -> Vec<(&Subset, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        v
    }

    pub fn coefficient(&self, index: &Subset) -> BigRational {
        self.terms.get(index).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Cohomological degree `2|I|` if all terms share it.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|i| 2 * i.len());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    fn check(&self, other: &RingElement) -> Result<(), RingError> {
        if (self.m, self.k) != (other.m, other.k) {
            return Err(RingError::ParameterMismatch(self.m, self.k, other.m, other.k));
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check(other)?;
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> RingElement {
        let mut out = RingElement { m: self.m, k: self.k, terms: BTreeMap::new() };
        for (i, d) in &self.terms {
            out.add_term(i.clone(), d * c);
        }
        out
    }

    pub fn neg(&self) -> RingElement {
        self.scale(&-BigRational::one())
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.add(&other.neg())
    }

    pub fn multiply(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check(other)?;
        let mut out = RingElement { m: self.m, k: self.k, terms: BTreeMap::new() };
        for (i, c) in &self.terms {
            for (j, d) in &other.terms {
                if i.len() + j.len() <= self.cap() && i.is_disjoint(j) {
                    out.add_term(i.union(j), c * d);
                }
            }
        }
        Ok(out)
    }

    /// Parses `"3*X{1,3} - 1/2*X{2}"`; `X{}` is the unit and a bare
    /// rational is a multiple of it.
    pub fn parse(m: usize, k: usize, s: &str) -> Result<Self, RingError> {
        let mut out = Self::zero(m, k)?;
        let chars: Vec<char> = s.chars().collect();
        let mut p = Parser { chars: &chars, pos: 0 };
        p.skip_ws();
        if p.peek().is_none() {
            return Err(p.err("empty expression"));
        }
        let mut first = true;
        while p.peek().is_some() {
            let mut sign = BigRational::one();
            match p.peek() {
                Some('+') => {
                    p.pos += 1;
                }
                Some('-') => {
                    p.pos += 1;
                    sign = -sign;
                }
                _ if !first => return Err(p.err("expected '+' or '-'")),
                _ => {}
            }
            first = false;
            p.skip_ws();
            let (coef, index) = p.term()?;
            if let Some(big) = index.iter().find(|&i| i == 0 || i > m) {
                return Err(RingError::IndexOutOfRange(big, m));
            }
            out.add_term(index, sign * coef);
            p.skip_ws();
        }
        Ok(out)
    }
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> RingError {
        RingError::Parse { pos: self.pos + 1, msg: msg.to_string() }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect::<String>().parse().unwrap())
    }

    fn rational(&mut self) -> Result<Option<BigRational>, RingError> {
        let Some(n) = self.integer() else { return Ok(None) };
        self.skip_ws();
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let d = self.integer().ok_or_else(|| self.err("expected denominator"))?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            return Ok(Some(BigRational::new(n, d)));
        }
        Ok(Some(BigRational::from_integer(n)))
    }

    fn term(&mut self) -> Result<(BigRational, Subset), RingError> {
        let coef = self.rational()?;
        self.skip_ws();
        let has_mono = match (&coef, self.peek()) {
            (Some(_), Some('*')) => {
                self.pos += 1;
                self.skip_ws();
                true
            }
            (None, Some('X')) => true,
            (Some(_), _) => false,
            (None, _) => return Err(self.err("expected a coefficient or X{...}")),
        };
        let index = if has_mono { self.monomial()? } else { Subset::empty() };
        Ok((coef.unwrap_or_else(BigRational::one), index))
    }

    fn monomial(&mut self) -> Result<Subset, RingError> {
        if self.peek() != Some('X') {
            return Err(self.err("expected X{...}"));
        }
        self.pos += 1;
        let start = self.pos;
        while self.peek().is_some_and(|c| c != '}') {
            self.pos += 1;
        }
        if self.peek() != Some('}') {
            return Err(self.err("unterminated X{...}"));
        }
        self.pos += 1;
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<Subset>().map_err(|e| RingError::Parse { pos: start + 1, msg: e.to_string() })
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (i, c)) in self.terms().into_iter().enumerate() {
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
            write!(f, "X{i}")?;
        }
        Ok(())
    }
}

impl Serialize for RingElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            #[serde(rename = "I")]
            index: Vec<usize>,
            c: String,
        }
        #[derive(Serialize)]
        struct Json {
            m: usize,
            k: usize,
            expr: String,
            terms: Vec<Term>,
        }
        Json {
            m: self.m,
            k: self.k,
            expr: self.to_string(),
            terms: self
                .terms()
                .into_iter()
                .map(|(i, c)| Term { index: i.as_slice().to_vec(), c: format!("{}/{}", c.numer(), c.denom()) })
                .collect(),
        }
        .serialize(s)
    }
}

/// The monomial basis of the degree-`2l` piece, in increasing order.
pub fn monomial_basis(m: usize, k: usize, l: usize) -> Result<Vec<Subset>, RingError> {
    if k > m {
        return Err(RingError::BadParameters { m, k });
    }
    if l > m - k {
        return Ok(Vec::new());
    }
    Ok(Subset::all_of_size(m, l).collect())
}

/// Coefficients of `q^0, q^2, …, q^{2(m-k)}`: dimensions of the graded pieces.
pub fn poincare_polynomial(m: usize, k: usize) -> Result<Vec<u64>, RingError> {
    if k > m {
        return Err(RingError::BadParameters { m, k });
    }
    (0..=m - k).map(|l| Ok(monomial_basis(m, k, l)?.len() as u64)).collect()
}

/// `Σ_α q^{2·(cups + half-cups of C(α))}` over weights with at least `k` ∧'s:
/// the dimensions of the attracting cells.
pub fn cell_generating_function(m: usize, k: usize) -> Result<Vec<u64>, RingError> {
    if k > m {
        return Err(RingError::BadParameters { m, k });
    }
    let mut coeffs = vec![0u64; m - k + 1];
    for w in Weight::all(m).filter(|w| w.has_type(k)) {
        let d = w.cup_diagram().cups_plus_half_cups();
        coeffs[d] += 1;
    }
    Ok(coeffs)
}

/// Renders coefficients in `q²` as `1 + 4q^2 + 10q^4`.
pub fn format_polynomial(coeffs: &[u64]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(l, &c)| match (l, c) {
            (0, c) => c.to_string(),
            (l, 1) => format!("q^{}", 2 * l),
            (l, c) => format!("{c}q^{}", 2 * l),
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(m: usize, k: usize, i: usize) -> RingElement {
        RingElement::generator(m, k, i).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let p = x(4, 3, 1).multiply(&x(4, 3, 2)).unwrap();
        assert!(p.is_zero());
        assert!(x(4, 3, 1).multiply(&x(4, 3, 1)).unwrap().is_zero());
        let p = x(4, 2, 1).multiply(&x(4, 2, 3)).unwrap();
        assert_eq!(p.to_string(), "X{1,3}");
        assert_eq!(p.degree(), Some(4));
        assert_eq!(x(4, 2, 1).multiply(&x(4, 3, 1)), Err(RingError::ParameterMismatch(4, 2, 4, 3)));
    }

    #[test]
    fn relations_kill_large_monomials() {
        let m = RingElement::monomial(5, 3, Subset::new(vec![1, 2, 3])).unwrap();
        assert!(m.is_zero());
        assert_eq!(RingElement::generator(3, 1, 4), Err(RingError::IndexOutOfRange(4, 3)));
    }

    #[test]
    fn parse_round_trip() {
        let e = RingElement::parse(4, 2, "3*X{1,3} - 1/2*X{2}").unwrap();
        assert_eq!(e.to_string(), "-1/2*X{2} + 3*X{1,3}");
        assert_eq!(RingElement::parse(4, 2, &e.to_string()).unwrap(), e);
        assert_eq!(RingElement::parse(4, 2, "X{}").unwrap(), RingElement::one(4, 2).unwrap());
        assert_eq!(RingElement::parse(4, 2, "2 + X{1} - X{1}").unwrap().to_string(), "2*X{}");
        assert_eq!(RingElement::parse(4, 3, "X{1,2}").unwrap().to_string(), "0");
        assert!(RingElement::parse(4, 2, "X{1").is_err());
        assert!(RingElement::parse(4, 2, "").is_err());
        assert!(RingElement::parse(4, 2, "X{1} X{2}").is_err());
        assert!(RingElement::parse(4, 2, "1/0*X{1}").is_err());
        assert_eq!(RingElement::parse(4, 2, "X{9}"), Err(RingError::IndexOutOfRange(9, 4)));
    }

    #[test]
    fn polynomials() {
        assert_eq!(poincare_polynomial(4, 3).unwrap(), vec![1, 4]);
        assert_eq!(format_polynomial(&poincare_polynomial(4, 3).unwrap()), "1 + 4q^2");
        assert_eq!(poincare_polynomial(6, 6).unwrap(), vec![1]);
        assert_eq!(poincare_polynomial(5, 3).unwrap(), vec![1, 5, 10]);
        assert_eq!(cell_generating_function(4, 3).unwrap(), vec![1, 4]);
        assert_eq!(cell_generating_function(6, 6).unwrap(), vec![1]);
        assert_eq!(cell_generating_function(5, 2).unwrap(), vec![1, 5, 10, 10]);
        assert!(poincare_polynomial(2, 3).is_err());
    }

    #[test]
    fn json_mirror() {
        let e = RingElement::parse(4, 2, "3*X{1,3} - 1/2*X{2}").unwrap();
        let j = serde_json::to_value(&e).unwrap();
        assert_eq!(j["terms"][0]["I"], serde_json::json!([2]));
        assert_eq!(j["terms"][0]["c"], "-1/2");
        assert_eq!(j["expr"], "-1/2*X{2} + 3*X{1,3}");
    }
}
