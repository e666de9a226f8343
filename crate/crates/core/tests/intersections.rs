use exotic_springer::circle::{glue, intersect, orientations, witness_point, ComponentKind, Witness};
use exotic_springer::diagram::{enumerate, enumerate_all};
use proptest::prelude::*;

#[test]
fn circles_have_even_length_and_counts_are_powers_of_two() {
    for m in 0..=6 {
        let all = enumerate_all(m);
        for a in &all {
            for b in &all {
                let cd = glue(a, b).unwrap();
                for c in cd.components() {
                    if c.kind == ComponentKind::Circle {
                        assert_eq!(c.vertices.len() % 2, 0, "circle {:?} in ({a},{b})", c.vertices);
                    }
                }
                let total: usize = cd.components().iter().map(|c| c.vertices.len()).sum();
                assert_eq!(total, m);
                let r = intersect(a, b).unwrap();
                let n = orientations(a, b).unwrap().len() as u64;
                assert!(n == 0 || n == 1 << r.k);
                assert_eq!(r.cohomology_dim, n);
            }
        }
    }
}

#[test]
fn self_intersection_is_the_component() {
    for m in 0..=8 {
        for a in enumerate_all(m) {
            let r = intersect(&a, &a).unwrap();
            assert!(r.nonempty);
            assert_eq!(r.k, a.cups_plus_half_cups(), "{a}");
        }
    }
}

#[test]
fn km_dimension_against_pair_sum() {
    for m in 0..=5 {
        for k in 0..=m {
            let ds = enumerate(m, k).unwrap();
            let sum: u64 = ds.iter().flat_map(|a| ds.iter().map(move |b| intersect(a, b).unwrap().cohomology_dim)).sum();
            assert_eq!(exotic_springer::circle::km_dimension(m, k).unwrap(), sum);
        }
    }
}

proptest! {
    #[test]
    fn symmetric(m in 0usize..=9, i in any::<usize>(), j in any::<usize>()) {
        let all = enumerate_all(m);
        let (a, b) = (&all[i % all.len()], &all[j % all.len()]);
        let (ab, ba) = (intersect(a, b).unwrap(), intersect(b, a).unwrap());
        prop_assert_eq!(ab.nonempty, ba.nonempty);
        prop_assert_eq!(ab.k, ba.k);
        prop_assert_eq!(witness_point(a, b).unwrap().is_point(), ab.nonempty);
        if let Witness::Point(x) = witness_point(a, b).unwrap() {
            prop_assert!(exotic_springer::circle::member_of(&x, a).unwrap());
            prop_assert!(exotic_springer::circle::member_of(&x, b).unwrap());
        }
    }
}
