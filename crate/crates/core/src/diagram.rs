//! One-boundary cup diagrams, weights and standard one-row bitableaux.
//!
//! A cup diagram on `m` vertices connects every vertex to exactly one cup,
//! ray or half-cup without crossings. Diagrams are written one character per
//! vertex: `(` left end of a cup, `)` right end, `|` ray, `>` half-cup.
//! Because the diagram is crossingless, bracket matching recovers the cups.
//!
//! The set of diagrams whose cups plus half-cups number `m - k` parametrizes
//! the irreducible components of the exotic Springer fiber of the one-row
//! bipartition `((k), (m-k))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("cups ({0},{1}) and ({2},{3}) cross")]
    Crossing(usize, usize, usize, usize),
    #[error("vertex {vertex} claims a cup to {partner} which does not point back")]
    DanglingCup { vertex: usize, partner: usize },
    #[error("ray at {ray} lies inside cup ({left},{right})")]
    RayInsideCup { ray: usize, left: usize, right: usize },
    #[error("half-cup at {half_cup} lies inside cup ({left},{right})")]
    HalfCupInsideCup { half_cup: usize, left: usize, right: usize },
    #[error("ray at {ray} lies right of half-cup at {half_cup}")]
    RayRightOfHalfCup { ray: usize, half_cup: usize },
    #[error("vertex {vertex} refers to index {index}, outside 1..={m}")]
    BadIndex { vertex: usize, index: usize, m: usize },
    #[error("unexpected character {found:?} at position {position}")]
    BadCharacter { position: usize, found: char },
    #[error("bad parameters m={m}, k={k}: need 0 <= k <= m")]
    BadParameters { m: usize, k: usize },
    #[error("bitableau is not standard: {0}")]
    NotStandard(String),
    #[error("bitableau has shape (({found}),({})) but (({expected}),(..)) was required", .m - .found)]
    ShapeMismatch { expected: usize, found: usize, m: usize },
    #[error("vertex {0} is not connected to a ray")]
    NotARay(usize),
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<i64>),
}

/// What a single vertex is attached to. Cup partners are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connection {
    CupWith(usize),
    Ray,
    HalfCup,
}

/// A validated one-boundary cup diagram.
///
/// Equality is equality of connection data.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CupDiagram {
    conn: Vec<Connection>,
}

impl CupDiagram {
    /// Checks a raw connection table (entry `i-1` describes vertex `i`).
    pub fn from_connections(conn: Vec<Connection>) -> Result<Self, DiagramError> {
        let m = conn.len();
        for (idx, c) in conn.iter().enumerate() {
            let v = idx + 1;
            if let Connection::CupWith(j) = *c {
                if j == 0 || j > m || j == v {
                    return Err(DiagramError::BadIndex { vertex: v, index: j, m });
                }
                if conn[j - 1] != Connection::CupWith(v) {
                    return Err(DiagramError::DanglingCup { vertex: v, partner: j });
                }
            }
        }
        let d = CupDiagram { conn };
        let cups = d.cups();
        for (n, &(i, j)) in cups.iter().enumerate() {
            for &(i2, j2) in &cups[n + 1..] {
                // cups are sorted by left end, so i < i2
                if i2 < j && j < j2 {
                    return Err(DiagramError::Crossing(i, j, i2, j2));
                }
            }
        }
        for v in 1..=m {
            let c = d.connection(v);
            if c == Connection::Ray || c == Connection::HalfCup {
                if let Some(&(left, right)) = cups.iter().find(|&&(i, j)| i < v && v < j) {
                    return Err(match c {
                        Connection::Ray => DiagramError::RayInsideCup { ray: v, left, right },
                        _ => DiagramError::HalfCupInsideCup { half_cup: v, left, right },
                    });
                }
            }
        }
        if let Some(h) = d.half_cups().first() {
            if let Some(&r) = d.rays().last() {
                if r > *h {
                    return Err(DiagramError::RayRightOfHalfCup { ray: r, half_cup: *h });
                }
            }
        }
        Ok(d)
    }

    /// Rebuilds the diagram whose openers (left cup ends and half-cup
    /// vertices) are exactly `openers`.
    ///
    /// Scanning left to right with a stack: an opener is pushed; any other
    /// vertex closes the top of the stack, or becomes a ray when the stack is
    /// empty. Openers left on the stack are half-cups.
    pub fn from_openers(m: usize, openers: &Subset) -> Result<Self, DiagramError> {
        if let Some(bad) = openers.iter().find(|&i| i == 0 || i > m) {
            return Err(DiagramError::BadIndex { vertex: bad, index: bad, m });
        }
        let mut conn = vec![Connection::Ray; m];
        let mut stack = Vec::new();
        for v in 1..=m {
            if openers.contains(v) {
                stack.push(v);
            } else if let Some(o) = stack.pop() {
                conn[o - 1] = Connection::CupWith(v);
                conn[v - 1] = Connection::CupWith(o);
            }
        }
        for o in stack {
            conn[o - 1] = Connection::HalfCup;
        }
        Ok(CupDiagram { conn })
    }

    /// The diagram consisting of `m` rays.
    pub fn all_rays(m: usize) -> Self {
        CupDiagram { conn: vec![Connection::Ray; m] }
    }

    pub fn m(&self) -> usize {
        self.conn.len()
    }

    /// Connection of the 1-based vertex `i`.
    pub fn connection(&self, i: usize) -> Connection {
        self.conn[i - 1]
    }

    pub fn connections(&self) -> &[Connection] {
        &self.conn
    }

    pub fn partner(&self, i: usize) -> Option<usize> {
        match self.connection(i) {
            Connection::CupWith(j) => Some(j),
            _ => None,
        }
    }

    /// Cups as `(left, right)` pairs, sorted by left end.
    pub fn cups(&self) -> Vec<(usize, usize)> {
        (1..=self.m())
            .filter_map(|i| match self.connection(i) {
                Connection::CupWith(j) if i < j => Some((i, j)),
                _ => None,
            })
            .collect()
    }

    pub fn rays(&self) -> Vec<usize> {
        (1..=self.m()).filter(|&i| self.connection(i) == Connection::Ray).collect()
    }

    pub fn half_cups(&self) -> Vec<usize> {
        (1..=self.m()).filter(|&i| self.connection(i) == Connection::HalfCup).collect()
    }

    /// Left cup endpoints together with half-cup vertices.
    pub fn openers(&self) -> Subset {
        Subset::new(
            (1..=self.m())
                .filter(|&i| match self.connection(i) {
                    Connection::CupWith(j) => i < j,
                    Connection::HalfCup => true,
                    Connection::Ray => false,
                })
                .collect(),
        )
    }

    pub fn is_opener(&self, i: usize) -> bool {
        match self.connection(i) {
            Connection::CupWith(j) => i < j,
            Connection::HalfCup => true,
            Connection::Ray => false,
        }
    }

    pub fn cups_plus_half_cups(&self) -> usize {
        self.openers().len()
    }

    /// The `k` of the bipartition `((k),(m-k))` this diagram belongs to.
    pub fn k(&self) -> usize {
        self.m() - self.cups_plus_half_cups()
    }

    pub fn word(&self) -> String {
        self.to_string()
    }

    /// ρ(i): the number of rays at positions `<= i`. Only defined at rays.
    pub fn ray_count(&self, i: usize) -> Result<usize, DiagramError> {
        if i == 0 || i > self.m() {
            return Err(DiagramError::BadIndex { vertex: i, index: i, m: self.m() });
        }
        if self.connection(i) != Connection::Ray {
            return Err(DiagramError::NotARay(i));
        }
        Ok((1..=i).filter(|&v| self.connection(v) == Connection::Ray).count())
    }

    /// The relations cut out by this diagram on the flag variety: one per cup
    /// and one per ray, none for half-cups.
    pub fn component_constraints(&self) -> Vec<FlagConstraint> {
        let mut out = Vec::new();
        let mut rays_seen = 0;
        for i in 1..=self.m() {
            match self.connection(i) {
                Connection::Ray => {
                    rays_seen += 1;
                    let twice = i + rays_seen;
                    assert!(twice % 2 == 0, "odd ray index at vertex {i}");
                    out.push(FlagConstraint::Ray { vertex: i, basis_index: twice / 2 });
                }
                Connection::CupWith(j) if i < j => {
                    let span = j - i + 1;
                    assert!(span % 2 == 0, "cup ({i},{j}) spans an odd number of vertices");
                    out.push(FlagConstraint::Cup { left: i, right: j, power: span / 2 });
                }
                _ => {}
            }
        }
        // report cups by right end so relations read in flag order
        out.sort_by_key(|c| match *c {
            FlagConstraint::Cup { right, .. } => right,
            FlagConstraint::Ray { vertex, .. } => vertex,
        });
        out
    }

    pub fn to_bitableau(&self) -> Bitableau {
        let right = self.openers();
        let left = (1..=self.m()).filter(|&i| !right.contains(i)).collect();
        Bitableau { left, right: right.as_slice().to_vec() }
    }

    pub fn from_bitableau(t: &Bitableau) -> Self {
        CupDiagram::from_openers(t.m(), &Subset::new(t.right.clone()))
            .expect("standard bitableau entries lie in 1..=m")
    }
}

impl fmt::Display for CupDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.m() {
            let ch = match self.connection(i) {
                Connection::CupWith(j) if i < j => '(',
                Connection::CupWith(_) => ')',
                Connection::Ray => '|',
                Connection::HalfCup => '>',
            };
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

impl FromStr for CupDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.trim().chars().collect();
        let m = chars.len();
        let mut conn = vec![Connection::Ray; m];
        let mut stack = Vec::new();
        for (idx, &c) in chars.iter().enumerate() {
            let v = idx + 1;
            match c {
                '(' => stack.push(v),
                ')' => {
                    let o = stack.pop().ok_or(DiagramError::DanglingCup { vertex: v, partner: 0 })?;
                    conn[o - 1] = Connection::CupWith(v);
                    conn[v - 1] = Connection::CupWith(o);
                }
                '|' => conn[v - 1] = Connection::Ray,
                '>' => conn[v - 1] = Connection::HalfCup,
                found => return Err(DiagramError::BadCharacter { position: v, found }),
            }
        }
        if let Some(&o) = stack.last() {
            return Err(DiagramError::DanglingCup { vertex: o, partner: 0 });
        }
        CupDiagram::from_connections(conn)
    }
}

/// JSON form: `{"m":4,"word":"()||","openers":[1],"cups":[[1,2]],"rays":[3,4],"halfcups":[]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub m: usize,
    pub word: String,
    pub openers: Vec<usize>,
    pub cups: Vec<[usize; 2]>,
    pub rays: Vec<usize>,
    pub halfcups: Vec<usize>,
}

impl From<&CupDiagram> for DiagramJson {
    fn from(d: &CupDiagram) -> Self {
        DiagramJson {
            m: d.m(),
            word: d.word(),
            openers: d.openers().as_slice().to_vec(),
            cups: d.cups().into_iter().map(|(i, j)| [i, j]).collect(),
            rays: d.rays(),
            halfcups: d.half_cups(),
        }
    }
}

impl TryFrom<DiagramJson> for CupDiagram {
    type Error = DiagramError;

    fn try_from(j: DiagramJson) -> Result<Self, DiagramError> {
        let d: CupDiagram = j.word.parse()?;
        if d.m() != j.m {
            return Err(DiagramError::BadParameters { m: j.m, k: d.k() });
        }
        Ok(d)
    }
}

impl Serialize for CupDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DiagramJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CupDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = DiagramJson::deserialize(d)?;
        CupDiagram::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// All diagrams of type `((k),(m-k))`, ordered lexicographically by opener set.
pub fn enumerate(m: usize, k: usize) -> Result<Vec<CupDiagram>, DiagramError> {
    if k > m {
        return Err(DiagramError::BadParameters { m, k });
    }
    Ok(Subset::all_of_size(m, m - k)
        .map(|s| CupDiagram::from_openers(m, &s).expect("subset of 1..=m"))
        .collect())
}

/// The diagrams of every type on `m` vertices, `k` running from `m` down to 0.
pub fn enumerate_all(m: usize) -> Vec<CupDiagram> {
    (0..=m).rev().flat_map(|k| enumerate(m, k).expect("k <= m")).collect()
}

/// ∧ or ∨.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Up,
    Down,
}

impl Symbol {
    pub fn flip(self) -> Symbol {
        match self {
            Symbol::Up => Symbol::Down,
            Symbol::Down => Symbol::Up,
        }
    }

    fn as_char(self) -> char {
        match self {
            Symbol::Up => '^',
            Symbol::Down => 'v',
        }
    }
}

/// A string over {∧, ∨}, written with `^` and `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Symbol>);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("weight symbol {found:?} at position {position} is not '^' or 'v'")]
pub struct WeightParseError {
    pub position: usize,
    pub found: char,
}

impl Weight {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Weight(symbols)
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// Symbol at the 1-based position `i`.
    pub fn at(&self, i: usize) -> Symbol {
        self.0[i - 1]
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn ups(&self) -> usize {
        self.0.iter().filter(|&&s| s == Symbol::Up).count()
    }

    /// Membership in the weights of type `((k),(m-k))`: at least `k` ∧'s.
    pub fn has_type(&self, k: usize) -> bool {
        self.ups() >= k
    }

    /// Positions carrying ∨.
    pub fn downs(&self) -> Subset {
        Subset::new((1..=self.m()).filter(|&i| self.at(i) == Symbol::Down).collect())
    }

    /// All `2^m` weights on `m` vertices in lexicographic order (∧ < ∨).
    pub fn all(m: usize) -> impl Iterator<Item = Weight> {
        (0u64..1 << m).map(move |mask| {
            Weight(
                (0..m)
                    .map(|i| if mask >> (m - 1 - i) & 1 == 1 { Symbol::Down } else { Symbol::Up })
                    .collect(),
            )
        })
    }

    /// The cup diagram C(α): neighbouring ∨∧ pairs are joined by cups
    /// repeatedly; leftover ∧'s become rays and leftover ∨'s half-cups.
    pub fn cup_diagram(&self) -> CupDiagram {
        let m = self.m();
        let mut conn = vec![Connection::Ray; m];
        let mut open: Vec<usize> = Vec::new();
        for i in 1..=m {
            match self.at(i) {
                Symbol::Down => open.push(i),
                Symbol::Up => {
                    if let Some(o) = open.pop() {
                        conn[o - 1] = Connection::CupWith(i);
                        conn[i - 1] = Connection::CupWith(o);
                    }
                }
            }
        }
        for o in open {
            conn[o - 1] = Connection::HalfCup;
        }
        CupDiagram::from_connections(conn).expect("C(α) is always a valid cup diagram")
    }

    /// Whether this weight orients `a`: alternating across every cup, ∧ at every ray.
    pub fn orients(&self, a: &CupDiagram) -> bool {
        assert_eq!(self.m(), a.m());
        (1..=a.m()).all(|i| match a.connection(i) {
            Connection::CupWith(j) => self.at(i) != self.at(j),
            Connection::Ray => self.at(i) == Symbol::Up,
            Connection::HalfCup => true,
        })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for Weight {
    type Err = WeightParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .enumerate()
            .map(|(n, c)| match c {
                '^' | '∧' => Ok(Symbol::Up),
                'v' | 'V' | '∨' => Ok(Symbol::Down),
                found => Err(WeightParseError { position: n + 1, found }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Weight)
    }
}

/// A standard one-row bitableau of shape `((left.len()), (right.len()))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bitableau {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Bitableau {
    pub fn new(left: Vec<usize>, right: Vec<usize>) -> Result<Self, DiagramError> {
        let increasing = |row: &[usize]| row.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&left) || !increasing(&right) {
            return Err(DiagramError::NotStandard("rows must be strictly increasing".into()));
        }
        let m = left.len() + right.len();
        let mut all: Vec<usize> = left.iter().chain(&right).copied().collect();
        all.sort_unstable();
        if all != (1..=m).collect::<Vec<_>>() {
            return Err(DiagramError::NotStandard(format!("entries must be exactly 1..={m}")));
        }
        Ok(Bitableau { left, right })
    }

    pub fn m(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    /// Fails unless the left row has exactly `k` entries.
    pub fn check_shape(&self, k: usize) -> Result<(), DiagramError> {
        if self.left.len() != k {
            return Err(DiagramError::ShapeMismatch { expected: k, found: self.left.len(), m: self.m() });
        }
        Ok(())
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| r.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "([{}], [{}])", row(&self.left), row(&self.right))
    }
}

/// A symbolic relation between the subspaces `F_i` of a flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FlagConstraint {
    /// `F_right = z^{-power} F_{left-1}`
    Cup { left: usize, right: usize, power: usize },
    /// `F_vertex = F_{vertex-1} + span(e_basis_index)`
    Ray { vertex: usize, basis_index: usize },
}

impl fmt::Display for FlagConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FlagConstraint::Cup { left, right, power } => {
                write!(f, "F_{right} = z^-{power} F_{}", left - 1)
            }
            FlagConstraint::Ray { vertex, basis_index } => {
                write!(f, "F_{vertex} = F_{} + span(e_{basis_index})", vertex - 1)
            }
        }
    }
}

/// Complex dimension `2·Σ_{i≥1}(i−1)(λ_i+μ_i) + |μ|` of the exotic Springer
/// fiber of the bipartition `(λ, μ)`. Trailing zeros are ignored.
pub fn springer_fiber_dimension(lambda: &[i64], mu: &[i64]) -> Result<u64, DiagramError> {
    for p in [lambda, mu] {
        if p.iter().any(|&x| x < 0) || p.windows(2).any(|w| w[0] < w[1]) {
            return Err(DiagramError::NotAPartition(p.to_vec()));
        }
    }
    let part = |p: &[i64], i: usize| p.get(i).copied().unwrap_or(0) as u64;
    let rows = lambda.len().max(mu.len());
    let weighted: u64 = (0..rows).map(|i| i as u64 * (part(lambda, i) + part(mu, i))).sum();
    let size_mu: u64 = mu.iter().map(|&x| x as u64).sum();
    Ok(2 * weighted + size_mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> CupDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn validate_examples() {
        let a = d("()||");
        assert_eq!(a.k(), 3);
        assert_eq!(a.cups(), vec![(1, 2)]);
        assert!(matches!("|>|>".parse::<CupDiagram>(), Err(DiagramError::RayRightOfHalfCup { ray: 3, half_cup: 2 })));
        assert!(matches!("(|)".parse::<CupDiagram>(), Err(DiagramError::RayInsideCup { ray: 2, left: 1, right: 3 })));
        assert!(matches!("(>)".parse::<CupDiagram>(), Err(DiagramError::HalfCupInsideCup { .. })));
        assert!(matches!("(()".parse::<CupDiagram>(), Err(DiagramError::DanglingCup { .. })));
        assert!(matches!("())".parse::<CupDiagram>(), Err(DiagramError::DanglingCup { .. })));
        assert!(matches!("(x)".parse::<CupDiagram>(), Err(DiagramError::BadCharacter { position: 2, .. })));
    }

    #[test]
    fn validate_raw_tables() {
        use Connection::*;
        let crossing = vec![CupWith(3), CupWith(4), CupWith(1), CupWith(2)];
        assert_eq!(CupDiagram::from_connections(crossing), Err(DiagramError::Crossing(1, 3, 2, 4)));
        let dangling = vec![CupWith(2), Ray];
        assert!(matches!(CupDiagram::from_connections(dangling), Err(DiagramError::DanglingCup { vertex: 1, partner: 2 })));
        let bad = vec![CupWith(5), Ray];
        assert!(matches!(CupDiagram::from_connections(bad), Err(DiagramError::BadIndex { index: 5, .. })));
        let selfloop = vec![CupWith(1)];
        assert!(matches!(CupDiagram::from_connections(selfloop), Err(DiagramError::BadIndex { .. })));
        let nested = vec![CupWith(4), CupWith(3), CupWith(2), CupWith(1), HalfCup];
        assert_eq!(CupDiagram::from_connections(nested).unwrap().to_string(), "(())>");
    }

    #[test]
    fn half_cup_may_pass_over_later_cups() {
        assert_eq!(d(">()").half_cups(), vec![1]);
        let a = d("()|()>()>");
        assert_eq!((a.k(), a.cups().len(), a.half_cups().len()), (4, 3, 2));
    }

    #[test]
    fn enumerate_small_cases() {
        let words: Vec<_> = enumerate(4, 3).unwrap().iter().map(|a| a.word()).collect();
        assert_eq!(words, ["()||", "|()|", "||()", "|||>"]);
        assert_eq!(enumerate(5, 5).unwrap(), vec![CupDiagram::all_rays(5)]);
        assert_eq!(enumerate(8, 4).unwrap().len(), 70);
        assert_eq!(enumerate(0, 0).unwrap().len(), 1);
        assert!(matches!(enumerate(3, 4), Err(DiagramError::BadParameters { .. })));
    }

    #[test]
    fn bitableau_bijection_examples() {
        let t = Bitableau::new(vec![1, 4], vec![2, 3]).unwrap();
        let a = CupDiagram::from_bitableau(&t);
        assert_eq!(a.word(), "|>()");
        assert_eq!(a.to_bitableau(), t);

        let t = Bitableau::new(vec![1, 2, 3, 4], vec![]).unwrap();
        assert_eq!(CupDiagram::from_bitableau(&t), CupDiagram::all_rays(4));

        let t = Bitableau::new(vec![3, 4, 5], vec![1, 2]).unwrap();
        let c = CupDiagram::from_bitableau(&t);
        assert_eq!(c.cups(), vec![(1, 4), (2, 3)]);
        assert_eq!(c.rays(), vec![5]);
        assert_eq!(c.word(), "(())|");
    }

    #[test]
    fn bitableau_errors() {
        assert!(matches!(Bitableau::new(vec![2, 1], vec![3]), Err(DiagramError::NotStandard(_))));
        assert!(matches!(Bitableau::new(vec![1, 2], vec![4]), Err(DiagramError::NotStandard(_))));
        let t = Bitableau::new(vec![1, 2], vec![3]).unwrap();
        assert!(t.check_shape(2).is_ok());
        assert!(matches!(t.check_shape(1), Err(DiagramError::ShapeMismatch { .. })));
    }

    #[test]
    fn cup_from_weight_examples() {
        assert_eq!("v^^^".parse::<Weight>().unwrap().cup_diagram().word(), "()||");
        assert_eq!("^^^v".parse::<Weight>().unwrap().cup_diagram().word(), "|||>");
        assert_eq!("^^^^^".parse::<Weight>().unwrap().cup_diagram(), CupDiagram::all_rays(5));
        assert_eq!("vv^^v".parse::<Weight>().unwrap().cup_diagram().word(), "(())>");
        assert_eq!("^v^vv".parse::<Weight>().unwrap().cup_diagram().word(), "|()>>");
    }

    #[test]
    fn ray_count_examples() {
        let a = d("()||");
        assert_eq!(a.ray_count(3), Ok(1));
        assert_eq!(a.ray_count(4), Ok(2));
        assert_eq!(a.ray_count(1), Err(DiagramError::NotARay(1)));
        let r = CupDiagram::all_rays(6);
        assert!((1..=6).all(|i| r.ray_count(i) == Ok(i)));
    }

    #[test]
    fn constraint_examples() {
        let c = d("||()").component_constraints();
        assert_eq!(
            c,
            vec![
                FlagConstraint::Ray { vertex: 1, basis_index: 1 },
                FlagConstraint::Ray { vertex: 2, basis_index: 2 },
                FlagConstraint::Cup { left: 3, right: 4, power: 1 },
            ]
        );
        assert_eq!(c[2].to_string(), "F_4 = z^-1 F_2");
        assert_eq!(c[0].to_string(), "F_1 = F_0 + span(e_1)");
        assert_eq!(
            d("(())").component_constraints(),
            vec![FlagConstraint::Cup { left: 2, right: 3, power: 1 }, FlagConstraint::Cup { left: 1, right: 4, power: 2 }]
        );
        assert!(d("|||>").component_constraints().len() == 3);
        // K_a for a = "()||": F_3 = F_2 + span(e_2), F_4 = F_3 + span(e_3)
        assert_eq!(
            d("()||").component_constraints()[1..],
            [FlagConstraint::Ray { vertex: 3, basis_index: 2 }, FlagConstraint::Ray { vertex: 4, basis_index: 3 }]
        );
    }

    #[test]
    fn springer_dimension_examples() {
        for m in 0..8i64 {
            for k in 0..=m {
                assert_eq!(springer_fiber_dimension(&[k], &[m - k]).unwrap(), (m - k) as u64);
            }
            assert_eq!(springer_fiber_dimension(&[m], &[]).unwrap(), 0);
        }
        assert_eq!(springer_fiber_dimension(&[2, 1], &[1, 1]).unwrap(), 6);
        assert_eq!(springer_fiber_dimension(&[2, 1, 0, 0], &[1, 1]).unwrap(), 6);
        assert!(matches!(springer_fiber_dimension(&[1, 2], &[]), Err(DiagramError::NotAPartition(_))));
        assert!(matches!(springer_fiber_dimension(&[1], &[-1]), Err(DiagramError::NotAPartition(_))));
    }

    #[test]
    fn json_shape() {
        let j = serde_json::to_string(&d("()||")).unwrap();
        assert_eq!(j, r#"{"m":4,"word":"()||","openers":[1],"cups":[[1,2]],"rays":[3,4],"halfcups":[]}"#);
        let back: CupDiagram = serde_json::from_str(&j).unwrap();
        assert_eq!(back, d("()||"));
    }
}
