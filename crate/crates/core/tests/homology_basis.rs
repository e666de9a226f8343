use exotic_springer::diagram::enumerate;
use exotic_springer::homology::{beta_map, betti_numbers, line_diagram_sum, standard_enriched, standard_enriched_of_degree};
use num_bigint::BigInt;
use num_traits::One;

#[test]
fn leading_terms_are_undotted_openers() {
    for m in 0..=8 {
        for k in 0..=m {
            for md in standard_enriched(m, k).unwrap() {
                let v = line_diagram_sum(&md);
                let u_m = md.undotted_openers();
                assert_eq!(v.coefficient(&u_m), BigInt::one(), "{md}");
                // every other index set is bigger at the first entry where they differ
                for (u, _) in v.terms() {
                    assert!(*u >= u_m, "{md}: {u} precedes {u_m}");
                }
                assert_eq!(v.leading_term().map(|(u, _)| u.clone()), Some(u_m));
            }
        }
    }
}

#[test]
fn line_sums_have_unit_coefficients() {
    for m in 0..=8 {
        for k in 0..=m {
            for md in standard_enriched(m, k).unwrap() {
                let v = line_diagram_sum(&md);
                assert_eq!(v.support_len(), 1 << md.undotted_cups().len());
                assert!(v.terms().all(|(_, c)| c.magnitude().is_one()));
                assert_eq!(v.homogeneous_degree(), Some(md.half_degree()));
            }
        }
    }
}

#[test]
fn beta_keeps_openers_undotted() {
    for m in 0..=9 {
        for k in 0..=m {
            for l in 0..=m - k {
                for a in enumerate(m, m - l).unwrap() {
                    let b = beta_map(&a, k).unwrap();
                    assert_eq!(b.undotted_openers(), a.openers(), "{a} -> {b}");
                    assert_eq!(b.base().k(), k);
                    assert_eq!(b.degree(), 2 * l);
                }
            }
        }
    }
}

#[test]
fn standard_counts_match_betti() {
    for m in 0..=8 {
        for k in 0..=m {
            let counts: Vec<u64> =
                (0..=m - k).map(|l| standard_enriched_of_degree(m, k, l).unwrap().len() as u64).collect();
            assert_eq!(counts, betti_numbers(m, k).unwrap());
            let all = standard_enriched(m, k).unwrap();
            let distinct: std::collections::BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len(), "beta is injective");
        }
    }
}
