//! Circle diagrams and intersections of irreducible components.
//!
//! Gluing the reflection of `a` on top of `b` produces a diagram whose
//! components are circles or lines. Two components `S_a`, `S_b` of the
//! topological model inside `(S²)^m` meet iff every line with two rays is
//! propagating; the intersection is then `(S²)^K` where `K` counts circles
//! and lines with two half-cups.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{enumerate, Connection, CupDiagram, DiagramError, Symbol, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircleError {
    #[error("diagrams have {0} and {1} vertices")]
    SizeMismatch(usize, usize),
    #[error("point {0} does not lie on the unit sphere")]
    BadPoint(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Top,
    Bottom,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LooseEnd {
    Ray,
    HalfCup,
}

/// A degree-one end of a line component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Endpoint {
    pub vertex: usize,
    pub side: Side,
    pub kind: LooseEnd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LineType {
    RayRay,
    RayHalfCup,
    HalfCupHalfCup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentKind {
    Circle,
    Line([Endpoint; 2]),
}

/// A connected component; `vertices` are listed in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
}

impl Component {
    pub fn leftmost(&self) -> usize {
        *self.vertices.iter().min().expect("components are nonempty")
    }

    pub fn sorted_vertices(&self) -> Vec<usize> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }

    pub fn is_circle(&self) -> bool {
        self.kind == ComponentKind::Circle
    }

    pub fn line_type(&self) -> Option<LineType> {
        match &self.kind {
            ComponentKind::Circle => None,
            ComponentKind::Line([e, f]) => Some(match (e.kind, f.kind) {
                (LooseEnd::Ray, LooseEnd::Ray) => LineType::RayRay,
                (LooseEnd::HalfCup, LooseEnd::HalfCup) => LineType::HalfCupHalfCup,
                _ => LineType::RayHalfCup,
            }),
        }
    }

    /// A line whose two ends lie on opposite sides of the vertex line.
    pub fn is_propagating(&self) -> bool {
        match &self.kind {
            ComponentKind::Circle => false,
            ComponentKind::Line([e, f]) => e.side != f.side,
        }
    }

    /// Components whose orientation is not forced by a ray.
    pub fn is_free(&self) -> bool {
        self.is_circle() || self.line_type() == Some(LineType::HalfCupHalfCup)
    }
}

/// The glued diagram `ā b`: `top` is reflected above the vertex line, `bottom` below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleDiagram {
    top: CupDiagram,
    bottom: CupDiagram,
    components: Vec<Component>,
}

impl CircleDiagram {
    pub fn top(&self) -> &CupDiagram {
        &self.top
    }

    pub fn bottom(&self) -> &CupDiagram {
        &self.bottom
    }

    pub fn m(&self) -> usize {
        self.top.m()
    }

    /// Components ordered by their leftmost vertex.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    fn connection(&self, v: usize, side: Side) -> Connection {
        match side {
            Side::Top => self.top.connection(v),
            Side::Bottom => self.bottom.connection(v),
        }
    }

    pub fn circles(&self) -> usize {
        self.components.iter().filter(|c| c.is_circle()).count()
    }

    pub fn lines_of_type(&self, t: LineType) -> usize {
        self.components.iter().filter(|c| c.line_type() == Some(t)).count()
    }

    /// Ray–ray lines whose rays sit on the same side.
    pub fn offending_lines(&self) -> Vec<&Component> {
        self.components
            .iter()
            .filter(|c| c.line_type() == Some(LineType::RayRay) && !c.is_propagating())
            .collect()
    }
}

fn check_sizes(a: &CupDiagram, b: &CupDiagram) -> Result<(), CircleError> {
    if a.m() != b.m() {
        return Err(CircleError::SizeMismatch(a.m(), b.m()));
    }
    Ok(())
}

/// Glues `a` (reflected, on top) to `b` (below) and classifies components.
///
/// Half-cup ends stay open at the right edge; they never join each other.
pub fn glue(a: &CupDiagram, b: &CupDiagram) -> Result<CircleDiagram, CircleError> {
    check_sizes(a, b)?;
    let m = a.m();
    let mut cd = CircleDiagram { top: a.clone(), bottom: b.clone(), components: Vec::new() };
    let mut visited = vec![false; m + 1];
    let loose = |c: Connection| match c {
        Connection::Ray => Some(LooseEnd::Ray),
        Connection::HalfCup => Some(LooseEnd::HalfCup),
        Connection::CupWith(_) => None,
    };

    // lines first: start at every unvisited loose end
    for v in 1..=m {
        if visited[v] {
            continue;
        }
        for side in [Side::Top, Side::Bottom] {
            let Some(kind) = loose(cd.connection(v, side)) else { continue };
            let start = Endpoint { vertex: v, side, kind };
            let mut path = vec![v];
            visited[v] = true;
            let (mut cur, mut leave) = (v, side.other());
            let end = loop {
                match cd.connection(cur, leave) {
                    Connection::CupWith(w) => {
                        cur = w;
                        visited[w] = true;
                        path.push(w);
                        leave = leave.other();
                    }
                    c => break Endpoint { vertex: cur, side: leave, kind: loose(c).unwrap() },
                }
            };
            cd.components.push(Component { vertices: path, kind: ComponentKind::Line([start, end]) });
            break;
        }
    }
    for v in 1..=m {
        if visited[v] {
            continue;
        }
        let mut path = vec![v];
        visited[v] = true;
        let (mut cur, mut leave) = (v, Side::Top);
        loop {
            let w = match cd.connection(cur, leave) {
                Connection::CupWith(w) => w,
                _ => unreachable!("vertex {cur} on a closed component has a loose end"),
            };
            leave = leave.other();
            if w == v {
                break;
            }
            visited[w] = true;
            path.push(w);
            cur = w;
        }
        assert!(path.len() % 2 == 0, "circle through {v} has odd length");
        cd.components.push(Component { vertices: path, kind: ComponentKind::Circle });
    }
    cd.components.sort_by_key(|c| c.leftmost());
    Ok(cd)
}

/// Census of `S_a ∩ S_b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionReport {
    pub nonempty: bool,
    pub circles: usize,
    #[serde(rename = "hhLines")]
    pub hh_lines: usize,
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "dim")]
    pub cohomology_dim: u64,
    pub offending: Vec<Vec<usize>>,
}

impl fmt::Display for IntersectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nonempty {
            write!(
                f,
                "nonempty: (S^2)^{} ({} circles, {} half-cup lines), cohomology dimension {}",
                self.k, self.circles, self.hh_lines, self.cohomology_dim
            )
        } else {
            let lines: Vec<String> = self
                .offending
                .iter()
                .map(|l| format!("{{{}}}", l.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
                .collect();
            write!(f, "empty: non-propagating ray-ray lines {}", lines.join(" "))
        }
    }
}

pub fn intersect(a: &CupDiagram, b: &CupDiagram) -> Result<IntersectionReport, CircleError> {
    let cd = glue(a, b)?;
    Ok(report(&cd))
}

pub fn report(cd: &CircleDiagram) -> IntersectionReport {
    let offending: Vec<Vec<usize>> = cd.offending_lines().iter().map(|c| c.sorted_vertices()).collect();
    let circles = cd.circles();
    let hh_lines = cd.lines_of_type(LineType::HalfCupHalfCup);
    let nonempty = offending.is_empty();
    let k = circles + hh_lines;
    IntersectionReport {
        nonempty,
        circles,
        hh_lines,
        k,
        cohomology_dim: if nonempty { 1u64 << k } else { 0 },
        offending,
    }
}

/// A weight orienting both halves of a circle diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub weight: Weight,
    /// Per component (in [`CircleDiagram::components`] order): leftmost vertex carries ∧.
    pub clockwise: Vec<bool>,
}

/// Every `γ` such that `ā γ b` is an oriented circle diagram, sorted with ∧ < ∨.
pub fn orientations(a: &CupDiagram, b: &CupDiagram) -> Result<Vec<Orientation>, CircleError> {
    let cd = glue(a, b)?;
    Ok(orientations_of(&cd))
}

pub fn orientations_of(cd: &CircleDiagram) -> Vec<Orientation> {
    let m = cd.m();
    // per component, the admissible symbol assignments along its traversal
    let mut choices: Vec<Vec<Vec<Symbol>>> = Vec::new();
    for comp in cd.components() {
        let alternate = |first: Symbol| {
            let mut s = first;
            comp.vertices
                .iter()
                .map(|_| {
                    let out = s;
                    s = s.flip();
                    out
                })
                .collect::<Vec<_>>()
        };
        let opts = match &comp.kind {
            ComponentKind::Line([e, f]) if e.kind == LooseEnd::Ray || f.kind == LooseEnd::Ray => {
                // the traversal starts at `e`; pin whichever ray end exists to ∧
                let first = if e.kind == LooseEnd::Ray || comp.vertices.len() % 2 == 1 {
                    Symbol::Up
                } else {
                    Symbol::Down
                };
                let assignment = alternate(first);
                let last_ok = f.kind != LooseEnd::Ray || *assignment.last().unwrap() == Symbol::Up;
                if last_ok {
                    vec![assignment]
                } else {
                    vec![]
                }
            }
            _ => vec![alternate(Symbol::Up), alternate(Symbol::Down)],
        };
        if opts.is_empty() {
            return Vec::new();
        }
        choices.push(opts);
    }

    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let mut symbols = vec![Symbol::Up; m];
        for (c, comp) in cd.components().iter().enumerate() {
            for (v, s) in comp.vertices.iter().zip(&choices[c][idx[c]]) {
                symbols[v - 1] = *s;
            }
        }
        let weight = Weight::new(symbols);
        let clockwise = cd.components().iter().map(|c| weight.at(c.leftmost()) == Symbol::Up).collect();
        out.push(Orientation { weight, clockwise });
        // odometer over the per-component choices
        let mut c = 0;
        while c < idx.len() {
            idx[c] += 1;
            if idx[c] < choices[c].len() {
                break;
            }
            idx[c] = 0;
            c += 1;
        }
        if c == idx.len() {
            break;
        }
    }
    out.sort_by(|x, y| x.weight.cmp(&y.weight));
    out
}

/// `Σ_{(a,b)} |orientations(a,b)|` over ordered pairs of type `((k),(m-k))`.
pub fn km_dimension(m: usize, k: usize) -> Result<u64, CircleError> {
    let diagrams = enumerate(m, k)?;
    Ok(diagrams
        .par_iter()
        .map(|a| {
            diagrams
                .iter()
                .map(|b| orientations(a, b).expect("same m").len() as u64)
                .sum::<u64>()
        })
        .sum())
}

/// A point of `S² ⊂ ℚ³` with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpherePoint {
    coords: [BigRational; 3],
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Formats as `num/den`, always with an explicit denominator.
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl SpherePoint {
    pub fn new(a: BigRational, b: BigRational, c: BigRational) -> Result<Self, CircleError> {
        let p = SpherePoint { coords: [a, b, c] };
        if !p.is_unit() {
            return Err(CircleError::BadPoint(p.to_string()));
        }
        Ok(p)
    }

    fn is_unit(&self) -> bool {
        let [a, b, c] = &self.coords;
        a * a + b * b + c * c == BigRational::one()
    }

    /// The north pole `p = (0,0,1)`.
    pub fn north() -> Self {
        SpherePoint { coords: [rat(0), rat(0), rat(1)] }
    }

    /// `q = (1,0,0)`, the seed for components not pinned by a ray.
    pub fn seed() -> Self {
        SpherePoint { coords: [rat(1), rat(0), rat(0)] }
    }

    /// Inverse stereographic projection `(2u, 2v, u²+v²−1)/(u²+v²+1)`.
    pub fn from_stereographic(u: &BigRational, v: &BigRational) -> Self {
        let s = u * u + v * v;
        let den = &s + rat(1);
        let p = SpherePoint { coords: [rat(2) * u / &den, rat(2) * v / &den, (&s - rat(1)) / &den] };
        debug_assert!(p.is_unit());
        p
    }

    /// A random point from small-height rational stereographic coordinates.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut r = || BigRational::new(BigInt::from(rng.gen_range(-12i64..=12)), BigInt::from(rng.gen_range(1i64..=7)));
        let (u, v) = (r(), r());
        SpherePoint::from_stereographic(&u, &v)
    }

    pub fn coords(&self) -> &[BigRational; 3] {
        &self.coords
    }

    pub fn to_strings(&self) -> [String; 3] {
        self.coords.clone().map(|c| rational_string(&c))
    }

    pub fn from_strings(parts: &[&str]) -> Result<Self, CircleError> {
        let bad = || CircleError::BadPoint(parts.join(","));
        if parts.len() != 3 {
            return Err(bad());
        }
        let c: Vec<BigRational> = parts.iter().map(|s| parse_rational(s).ok_or_else(bad)).collect::<Result<_, _>>()?;
        SpherePoint::new(c[0].clone(), c[1].clone(), c[2].clone())
    }
}

impl std::ops::Neg for &SpherePoint {
    type Output = SpherePoint;

    fn neg(self) -> SpherePoint {
        SpherePoint { coords: self.coords.clone().map(|c| -c) }
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coords;
        write!(f, "({a},{b},{c})")
    }
}

impl Serialize for SpherePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// Does `x` lie on `S_a`? Cup ends are antipodal, rays sit at the north pole,
/// half-cup coordinates are free.
pub fn member_of(x: &[SpherePoint], a: &CupDiagram) -> Result<bool, CircleError> {
    if x.len() != a.m() {
        return Err(CircleError::SizeMismatch(x.len(), a.m()));
    }
    if let Some(bad) = x.iter().find(|p| !p.is_unit()) {
        return Err(CircleError::BadPoint(bad.to_string()));
    }
    let north = SpherePoint::north();
    Ok((1..=a.m()).all(|i| match a.connection(i) {
        Connection::CupWith(j) => x[j - 1] == -&x[i - 1],
        Connection::Ray => x[i - 1] == north,
        Connection::HalfCup => true,
    }))
}

/// Result of trying to construct a point of `S_a ∩ S_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Point(Vec<SpherePoint>),
    /// The vertices of a cup-connected block whose relations contradict each other.
    Empty { offending: Vec<usize> },
}

impl Witness {
    pub fn is_point(&self) -> bool {
        matches!(self, Witness::Point(_))
    }
}

/// Builds an exact point of `S_a ∩ S_b`, seeding free blocks with `q = (1,0,0)`.
pub fn witness_point(a: &CupDiagram, b: &CupDiagram) -> Result<Witness, CircleError> {
    witness_with_seeds(a, b, &mut |_| SpherePoint::seed())
}

/// Like [`witness_point`], but the block whose leftmost vertex is `v` is
/// seeded with `seed(v)` when no ray pins it.
///
/// This works directly on the relation sets (cup edges of either diagram
/// negate, rays pin to `p`) without consulting the component census.
pub fn witness_with_seeds(
    a: &CupDiagram,
    b: &CupDiagram,
    seed: &mut dyn FnMut(usize) -> SpherePoint,
) -> Result<Witness, CircleError> {
    check_sizes(a, b)?;
    let m = a.m();
    let north = SpherePoint::north();
    let pinned = |v: usize| a.connection(v) == Connection::Ray || b.connection(v) == Connection::Ray;
    let mut x: Vec<Option<SpherePoint>> = vec![None; m + 1];
    let mut block_id = vec![0usize; m + 1];

    for start in 1..=m {
        if x[start].is_some() {
            continue;
        }
        // collect the block reachable through cups of either diagram
        let mut block = vec![start];
        block_id[start] = start;
        let mut i = 0;
        while i < block.len() {
            let v = block[i];
            for w in [a.partner(v), b.partner(v)].into_iter().flatten() {
                if block_id[w] != start {
                    block_id[w] = start;
                    block.push(w);
                }
            }
            i += 1;
        }
        let root = block.iter().copied().filter(|&v| pinned(v)).min();
        let (root, value) = match root {
            Some(r) => (r, north.clone()),
            None => (start, seed(start)),
        };
        x[root] = Some(value);
        let mut queue = vec![root];
        let mut consistent = true;
        while let Some(v) = queue.pop() {
            let xv = x[v].clone().unwrap();
            for w in [a.partner(v), b.partner(v)].into_iter().flatten() {
                let want = -&xv;
                match &x[w] {
                    None => {
                        x[w] = Some(want);
                        queue.push(w);
                    }
                    Some(have) => consistent &= *have == want,
                }
            }
        }
        consistent &= block.iter().filter(|&&v| pinned(v)).all(|&v| x[v].as_ref() == Some(&north));
        if !consistent {
            block.sort_unstable();
            return Ok(Witness::Empty { offending: block });
        }
    }
    let point: Vec<SpherePoint> = x.into_iter().skip(1).map(Option::unwrap).collect();
    assert!(member_of(&point, a)? && member_of(&point, b)?, "witness fails a relation");
    Ok(Witness::Point(point))
}

/// A random point of `S_a`: free coordinates at the openers, antipodes at
/// the right cup ends, `p` at rays.
pub fn sample_point<R: Rng + ?Sized>(a: &CupDiagram, rng: &mut R) -> Vec<SpherePoint> {
    let mut x: Vec<Option<SpherePoint>> = vec![None; a.m()];
    for i in 1..=a.m() {
        match a.connection(i) {
            Connection::Ray => x[i - 1] = Some(SpherePoint::north()),
            Connection::HalfCup => x[i - 1] = Some(SpherePoint::random(rng)),
            Connection::CupWith(j) if i < j => {
                let p = SpherePoint::random(rng);
                x[j - 1] = Some(-&p);
                x[i - 1] = Some(p);
            }
            Connection::CupWith(_) => {}
        }
    }
    x.into_iter().map(Option::unwrap).collect()
}

/// True if `p` is the north pole or its antipode; used when printing witnesses.
pub fn pole_name(p: &SpherePoint) -> Option<&'static str> {
    let n = SpherePoint::north();
    if *p == n {
        Some("p")
    } else if *p == -&n {
        Some("-p")
    } else {
        let [a, b, c] = p.coords();
        (a.is_positive() && b.is_zero() && c.is_zero()).then_some("q")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> CupDiagram {
        s.parse().unwrap()
    }

    fn census(cd: &CircleDiagram) -> Vec<(Vec<usize>, Option<LineType>, bool)> {
        cd.components().iter().map(|c| (c.sorted_vertices(), c.line_type(), c.is_propagating())).collect()
    }

    #[test]
    fn glue_four_component_example() {
        let a = d("()()|()>");
        let b = d("()|()|>>");
        let cd = glue(&a, &b).unwrap();
        assert_eq!(
            census(&cd),
            vec![
                (vec![1, 2], None, false),
                (vec![3, 4, 5], Some(LineType::RayRay), true),
                (vec![6, 7], Some(LineType::RayHalfCup), false),
                (vec![8], Some(LineType::HalfCupHalfCup), true),
            ]
        );
        let r = intersect(&a, &b).unwrap();
        assert!(r.nonempty);
        assert_eq!((r.circles, r.hh_lines, r.k, r.cohomology_dim), (1, 1, 2, 4));
        assert_eq!(orientations(&a, &b).unwrap().len(), 4);
    }

    #[test]
    fn self_gluing() {
        let a = d("()||");
        let cd = glue(&a, &a).unwrap();
        assert_eq!(
            census(&cd),
            vec![(vec![1, 2], None, false), (vec![3], Some(LineType::RayRay), true), (vec![4], Some(LineType::RayRay), true)]
        );
    }

    #[test]
    fn non_propagating_lines() {
        let cd = glue(&d("()||"), &d("||()")).unwrap();
        assert_eq!(
            census(&cd),
            vec![(vec![1, 2], Some(LineType::RayRay), false), (vec![3, 4], Some(LineType::RayRay), false)]
        );
        let r = report(&cd);
        assert!(!r.nonempty);
        assert_eq!(r.offending, vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(r.cohomology_dim, 0);
    }

    #[test]
    fn chain_of_spheres() {
        let a = d("()||");
        let r = intersect(&a, &d("|()|")).unwrap();
        assert!(r.nonempty);
        assert_eq!((r.k, r.cohomology_dim), (0, 1));
        assert!(!intersect(&a, &d("||()")).unwrap().nonempty);
        assert!(!intersect(&a, &d("|||>")).unwrap().nonempty);
        assert!(intersect(&d("||()"), &d("|||>")).unwrap().nonempty);
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(glue(&d("()"), &d("|||")).unwrap_err(), CircleError::SizeMismatch(2, 3));
        assert!(witness_point(&d("()"), &d("|")).is_err());
    }

    #[test]
    fn orientation_examples() {
        let a = d("()||");
        let ws: Vec<String> = orientations(&a, &a).unwrap().iter().map(|o| o.weight.to_string()).collect();
        assert_eq!(ws, ["^v^^", "v^^^"]);
        assert!(orientations(&a, &d("||()")).unwrap().is_empty());
        let o = orientations(&a, &a).unwrap();
        assert_eq!(o[0].clockwise, vec![true, true, true]);
        assert_eq!(o[1].clockwise, vec![false, true, true]);
    }

    #[test]
    fn ray_half_cup_line_starting_at_half_cup() {
        let a = d(">()");
        let b = d("()|");
        let cd = glue(&a, &b).unwrap();
        assert_eq!(cd.components()[0].vertices, vec![1, 2, 3]);
        let o = orientations(&a, &b).unwrap();
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].weight.to_string(), "^v^");
        assert_eq!(orientations(&b, &a).unwrap()[0].weight.to_string(), "^v^");
    }

    #[test]
    fn km_dimension_values() {
        assert_eq!(km_dimension(4, 3).unwrap(), 14);
        assert_eq!(km_dimension(2, 1).unwrap(), 6);
        for m in 0..6 {
            assert_eq!(km_dimension(m, m).unwrap(), 1);
        }
    }

    #[test]
    fn witness_examples() {
        let w = witness_point(&d("()||"), &d("|()|")).unwrap();
        let Witness::Point(x) = w else { panic!("expected a point") };
        let names: Vec<_> = x.iter().map(|p| pole_name(p).unwrap()).collect();
        assert_eq!(names, ["p", "-p", "p", "p"]);
        assert_eq!(x[1].to_strings(), ["0/1", "0/1", "-1/1"]);

        let r = CupDiagram::all_rays(3);
        let Witness::Point(x) = witness_point(&r, &r).unwrap() else { panic!() };
        assert!(x.iter().all(|p| *p == SpherePoint::north()));

        let w = witness_point(&d("()||"), &d("||()")).unwrap();
        assert_eq!(w, Witness::Empty { offending: vec![1, 2] });
    }

    #[test]
    fn membership_examples() {
        let q = SpherePoint::seed();
        let p = SpherePoint::north();
        let a = d("()||");
        assert!(member_of(&[q.clone(), -&q, p.clone(), p.clone()], &a).unwrap());
        assert!(!member_of(&[p.clone(), p.clone(), p.clone(), p.clone()], &a).unwrap());
        let dd = d("|||>");
        assert!(member_of(&[p.clone(), p.clone(), p.clone(), q.clone()], &dd).unwrap());
        assert!(!member_of(&[p.clone(), q.clone(), p.clone(), q.clone()], &dd).unwrap());
        assert!(member_of(std::slice::from_ref(&p), &a).is_err());
    }

    #[test]
    fn bad_points_rejected() {
        assert!(SpherePoint::new(rat(1), rat(1), rat(0)).is_err());
        assert!(SpherePoint::from_strings(&["3/5", "4/5", "0"]).is_ok());
        assert!(SpherePoint::from_strings(&["3/5", "4/5"]).is_err());
        assert!(SpherePoint::from_strings(&["1/0", "0", "0"]).is_err());
    }
}
