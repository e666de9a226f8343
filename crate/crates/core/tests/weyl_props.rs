use exotic_springer::subset::{binomial, Subset};
use exotic_springer::weyl::{character_polynomial, character_value, SignedPermutation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn characters_are_class_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..1000 {
        let m = 1 + trial % 7;
        let w = SignedPermutation::random(m, &mut rng);
        let g = SignedPermutation::random(m, &mut rng);
        let conj = g.compose(&w).compose(&g.inverse());
        for l in 0..=m {
            assert_eq!(character_value(m, 0, l, &conj).unwrap(), character_value(m, 0, l, &w).unwrap());
        }
        assert_eq!(character_polynomial(&conj), character_polynomial(&w));
    }
}

fn act(w: &SignedPermutation, sign: i8, i: &Subset) -> (i8, Subset) {
    let (s, j) = w.act_on_monomial(i).unwrap();
    (sign * s, j)
}

#[test]
fn action_is_a_group_action() {
    for m in 0..=4 {
        let group: Vec<_> = SignedPermutation::all(m).collect();
        let subsets: Vec<Subset> = Subset::all(m).collect();
        for a in &group {
            for b in &group {
                let ab = a.compose(b);
                for i in &subsets {
                    let (s, j) = act(b, 1, i);
                    assert_eq!(act(a, s, &j), act(&ab, 1, i), "{a} · {b} on {i}");
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let m = 8;
        let (a, b) = (SignedPermutation::random(m, &mut rng), SignedPermutation::random(m, &mut rng));
        let i = Subset::new((1..=m).filter(|_| rand::Rng::gen::<bool>(&mut rng)).collect());
        let (s, j) = act(&b, 1, &i);
        assert_eq!(act(&a, s, &j), act(&a.compose(&b), 1, &i));
    }
}

#[test]
fn degree_zero_is_trivial_and_identity_gives_dimension() {
    for m in 0..=5 {
        for w in SignedPermutation::all(m) {
            assert_eq!(character_value(m, 0, 0, &w).unwrap(), 1);
        }
        for l in 0..=m {
            assert_eq!(character_value(m, 0, l, &SignedPermutation::identity(m)).unwrap() as u64, binomial(m, l));
        }
    }
}

#[test]
fn equal_dimensions_are_told_apart_by_s0() {
    for m in 1..=9 {
        let s0 = SignedPermutation::generator(m, 0).unwrap();
        for l in 0..=m {
            for l2 in l + 1..=m {
                if binomial(m, l) == binomial(m, l2) {
                    assert_ne!(character_value(m, 0, l, &s0).unwrap(), character_value(m, 0, l2, &s0).unwrap());
                }
            }
        }
    }
}
