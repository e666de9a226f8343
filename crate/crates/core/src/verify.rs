//! Self-checks backing `exotic check`: each criterion recomputes a family of
//! results and compares them against a second route to the same numbers.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::circle::{intersect, member_of, orientations, pole_name, sample_point, witness_point, witness_with_seeds, SpherePoint, Witness, km_dimension};
use crate::diagram::{enumerate, enumerate_all, CupDiagram};
use crate::homology::{beta_map, betti_numbers, line_diagram_sum, rank_check, standard_enriched, EnrichedCupDiagram};
use crate::ring::{cell_generating_function, poincare_polynomial, RingElement};
use crate::subset::{binomial, Subset};
use crate::weyl::{inner_product_matrix, verify_generator_relations};

/// Size limits for the exhaustive sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub counts: usize,
    pub intersections: usize,
    pub paving: usize,
    pub ranks: usize,
    pub ring: usize,
    pub characters: usize,
    pub sampling: usize,
    pub samples: usize,
}

impl Bounds {
    /// The sizes the criteria are stated for.
    pub fn full() -> Self {
        Bounds { counts: 10, intersections: 6, paving: 10, ranks: 8, ring: 6, characters: 6, sampling: 5, samples: 500 }
    }

    /// [`Bounds::full`] with every rank bound capped at `m_max`.
    pub fn capped(m_max: usize) -> Self {
        let f = Self::full();
        Bounds {
            counts: f.counts.min(m_max),
            intersections: f.intersections.min(m_max),
            paving: f.paving.min(m_max),
            ranks: f.ranks.min(m_max),
            ring: f.ring.min(m_max),
            characters: f.characters.min(m_max),
            sampling: f.sampling.min(m_max),
            samples: f.samples,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(rename = "seconds", serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2} {:<28} {:>8.2}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type Check = fn(&Bounds) -> Result<String, String>;

pub const CRITERIA: [(&str, Check); 12] = [
    ("component counts", component_counts),
    ("enumerate(4,3) golden", enumerate_golden),
    ("intersection agreement", intersection_agreement),
    ("intersection golden", intersection_golden),
    ("orientation counts", orientation_counts),
    ("paving consistency", paving_consistency),
    ("L_M golden", line_sum_golden),
    ("beta-map golden", beta_golden),
    ("linear independence", linear_independence),
    ("ring axioms", ring_axioms),
    ("representation theory", representation_theory),
    ("randomized points", randomized_points),
];

/// Runs criterion `id` (1-based).
pub fn run(id: usize, bounds: &Bounds) -> Outcome {
    let (name, check) = CRITERIA[id - 1];
    let start = Instant::now();
    let result = check(bounds);
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id, name, passed, detail, elapsed }
}

pub fn run_all(bounds: &Bounds) -> Vec<Outcome> {
    (1..=CRITERIA.len()).map(|id| run(id, bounds)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn d(s: &str) -> CupDiagram {
    s.parse().expect("literal diagram")
}

pub fn component_counts(b: &Bounds) -> Result<String, String> {
    let mut total = 0;
    for m in 0..=b.counts {
        for k in 0..=m {
            let all = enumerate(m, k).map_err(|e| e.to_string())?;
            ensure(all.len() as u64 == binomial(m, m - k), || format!("|B(({k}),({}))| = {}", m - k, all.len()))?;
            for a in &all {
                let t = a.to_bitableau();
                ensure(CupDiagram::from_bitableau(&t) == *a, || format!("bitableau round trip fails on {a}"))?;
                ensure(a.word().parse::<CupDiagram>().as_ref() == Ok(a), || format!("word round trip fails on {a}"))?;
            }
            total += all.len();
        }
    }
    Ok(format!("{total} diagrams, m <= {}", b.counts))
}

pub fn enumerate_golden(_: &Bounds) -> Result<String, String> {
    let words: Vec<String> = enumerate(4, 3).unwrap().iter().map(CupDiagram::word).collect();
    ensure(words == ["()||", "|()|", "||()", "|||>"], || format!("got {words:?}"))?;
    Ok(words.join(" "))
}

pub fn intersection_agreement(b: &Bounds) -> Result<String, String> {
    let mut pairs = 0usize;
    let mut nonempty = 0usize;
    for m in 0..=b.intersections {
        let all = enumerate_all(m);
        let results: Vec<Result<bool, String>> = all
            .par_iter()
            .flat_map_iter(|a| all.iter().map(move |c| (a, c)))
            .map(|(a, c)| {
                let combinatorial = intersect(a, c).map_err(|e| e.to_string())?.nonempty;
                let oriented = !orientations(a, c).map_err(|e| e.to_string())?.is_empty();
                let witness = match witness_point(a, c).map_err(|e| e.to_string())? {
                    Witness::Point(x) => {
                        ensure(member_of(&x, a).unwrap() && member_of(&x, c).unwrap(), || {
                            format!("witness for ({a},{c}) fails membership")
                        })?;
                        true
                    }
                    Witness::Empty { .. } => false,
                };
                ensure(combinatorial == oriented && oriented == witness, || {
                    format!("({a},{c}): criterion {combinatorial}, orientations {oriented}, witness {witness}")
                })?;
                Ok(combinatorial)
            })
            .collect();
        for r in results {
            nonempty += usize::from(r?);
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs, {nonempty} nonempty, m <= {}", b.intersections))
}

pub fn intersection_golden(_: &Bounds) -> Result<String, String> {
    let Witness::Point(x) = witness_point(&d("()||"), &d("|()|")).unwrap() else {
        return Err("S_a ∩ S_b should be a point".into());
    };
    let names: Vec<_> = x.iter().map(|p| pole_name(p).unwrap_or("?")).collect();
    ensure(names == ["p", "-p", "p", "p"], || format!("witness {names:?}"))?;
    let r = intersect(&d("()||"), &d("|()|")).unwrap();
    ensure(r.nonempty && r.cohomology_dim == 1, || format!("report {r}"))?;
    let r = intersect(&d("()||"), &d("||()")).unwrap();
    ensure(!r.nonempty, || "S_a ∩ S_c should be empty".into())?;
    Ok("(p,-p,p,p); S_a ∩ S_c empty".into())
}

pub fn orientation_counts(b: &Bounds) -> Result<String, String> {
    for m in 0..=b.intersections {
        let all = enumerate_all(m);
        for a in &all {
            for c in &all {
                let r = intersect(a, c).unwrap();
                let n = orientations(a, c).unwrap().len() as u64;
                let want = if r.nonempty { 1u64 << r.k } else { 0 };
                ensure(n == want, || format!("({a},{c}): {n} orientations, expected {want}"))?;
            }
        }
    }
    let km = km_dimension(4, 3).unwrap();
    let by_pairs: u64 = enumerate(4, 3)
        .unwrap()
        .iter()
        .flat_map(|a| enumerate(4, 3).unwrap().into_iter().map(move |c| intersect(a, &c).unwrap()))
        .map(|r| r.cohomology_dim)
        .sum();
    ensure(km == 14 && by_pairs == 14, || format!("kmDimension(4,3) = {km}, pairwise sum {by_pairs}"))?;
    Ok(format!("counts in {{0, 2^K}} for m <= {}; kmDimension(4,3) = 14", b.intersections))
}

pub fn paving_consistency(b: &Bounds) -> Result<String, String> {
    for m in 0..=b.paving {
        for k in 0..=m {
            let cells = cell_generating_function(m, k).unwrap();
            let poincare = poincare_polynomial(m, k).unwrap();
            let betti = betti_numbers(m, k).unwrap();
            ensure(cells == poincare && poincare == betti, || {
                format!("(m,k)=({m},{k}): cells {cells:?}, Poincaré {poincare:?}, Betti {betti:?}")
            })?;
        }
    }
    ensure(poincare_polynomial(4, 3).unwrap() == [1, 4], || "(4,3) is not 1 + 4q^2".into())?;
    Ok(format!("all k, m <= {}", b.paving))
}

pub fn line_sum_golden(_: &Bounds) -> Result<String, String> {
    let md: EnrichedCupDiagram = "(.)|.()>()>.".parse().unwrap();
    let v = line_diagram_sum(&md).to_string();
    ensure(v == "l_{4,6,7} - l_{4,6,8} - l_{5,6,7} + l_{5,6,8}", || format!("got {v}"))?;
    Ok(v)
}

pub fn beta_golden(_: &Bounds) -> Result<String, String> {
    let cases = [("|||||", "|.|.|.>.>."), ("||()|", "|.|.()>."), ("(())|", "(())|.")];
    for (a, want) in cases {
        let got = beta_map(&d(a), 3).map_err(|e| e.to_string())?.to_string();
        ensure(got == want, || format!("beta({a}) = {got}, expected {want}"))?;
    }
    let set: Vec<String> = standard_enriched(4, 3).unwrap().iter().map(ToString::to_string).collect();
    ensure(set == ["|.|.|.>.", "()|.|.", "|.()|.", "|.|.()", "|.|.|.>"], || format!("sB(4,3) = {set:?}"))?;
    Ok("3 images and sB((3),(1)) match".into())
}

pub fn linear_independence(b: &Bounds) -> Result<String, String> {
    let jobs: Vec<(usize, usize, usize)> =
        (0..=b.ranks).flat_map(|m| (0..=m).flat_map(move |k| (0..=m - k).map(move |l| (m, k, l)))).collect();
    jobs.par_iter().try_for_each(|&(m, k, l)| {
        let r = rank_check(m, k, l).map_err(|e| e.to_string())?;
        ensure(r as u64 == binomial(m, l), || format!("rank({m},{k},{l}) = {r}, expected {}", binomial(m, l)))
    })?;
    Ok(format!("{} (m,k,l) triples, m <= {}", jobs.len(), b.ranks))
}

pub fn ring_axioms(b: &Bounds) -> Result<String, String> {
    for m in 0..=b.ring {
        for k in 0..=m {
            let monos: Vec<RingElement> =
                Subset::all(m).map(|i| RingElement::monomial(m, k, i).unwrap()).collect();
            for x in &monos {
                for y in &monos {
                    let xy = x.multiply(y).unwrap();
                    ensure(xy == y.multiply(x).unwrap(), || format!("({m},{k}): {x}·{y} not commutative"))?;
                    for z in &monos {
                        let l = xy.multiply(z).unwrap();
                        let r = x.multiply(&y.multiply(z).unwrap()).unwrap();
                        ensure(l == r, || format!("({m},{k}): ({x}·{y})·{z} = {l} but {x}·({y}·{z}) = {r}"))?;
                    }
                }
            }
            for i in 1..=m {
                let g = RingElement::generator(m, k, i).unwrap();
                ensure(g.multiply(&g).unwrap().is_zero(), || format!("X_{i}^2 != 0 in ({m},{k})"))?;
            }
            for top in Subset::all_of_size(m, m - k + 1) {
                let prod = top.iter().fold(RingElement::one(m, k).unwrap(), |acc, i| {
                    acc.multiply(&RingElement::generator(m, k, i).unwrap()).unwrap()
                });
                ensure(prod.is_zero(), || format!("X_{top} != 0 in ({m},{k})"))?;
            }
        }
    }
    Ok(format!("exhaustive on monomials, m <= {}", b.ring))
}

pub fn representation_theory(b: &Bounds) -> Result<String, String> {
    for m in 1..=b.characters {
        verify_generator_relations(m).map_err(|e| format!("m={m}: {e}"))?;
    }
    let mut checked = 0;
    for m in 0..=b.characters {
        // the Gram matrix for k is the top-left block of the one for k = 0
        let gram = inner_product_matrix(m, 0).map_err(|e| e.to_string())?;
        for (l, row) in gram.iter().enumerate() {
            for (l2, v) in row.iter().enumerate() {
                let want = if l == l2 { BigRational::one() } else { BigRational::zero() };
                ensure(*v == want, || format!("m={m}: <chi_{}, chi_{}> = {v}", 2 * l, 2 * l2))?;
            }
        }
        checked += (m + 1) * (m + 2) / 2;
    }
    Ok(format!("relations hold; {checked} (m,k) rings orthonormal, m <= {}", b.characters))
}

pub fn randomized_points(b: &Bounds) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut points = 0;
    for m in 1..=b.sampling {
        let all = enumerate_all(m);
        for a in &all {
            for _ in 0..b.samples {
                let x = sample_point(a, &mut rng);
                ensure(member_of(&x, a).unwrap(), || format!("sampled point misses S_{a}"))?;
                for c in &all {
                    if member_of(&x, c).unwrap() {
                        ensure(intersect(a, c).unwrap().nonempty, || {
                            format!("point in S_{a} ∩ S_{c} but the criterion says empty")
                        })?;
                    }
                }
                points += 1;
            }
            for c in &all {
                let mut seeds = |_| SpherePoint::random(&mut rng);
                if let Witness::Point(x) = witness_with_seeds(a, c, &mut seeds).unwrap() {
                    ensure(member_of(&x, a).unwrap() && member_of(&x, c).unwrap(), || {
                        format!("random witness for ({a},{c}) leaves the intersection")
                    })?;
                }
            }
        }
    }
    Ok(format!("{points} points, m <= {}", b.sampling))
}
