use std::collections::BTreeSet;

use nakayama::invariants::rank_sequence;
use nakayama::{
    canonicalize, dimension_report, enumerate_kupisch, indecomposables, kupisch_from_relations,
    opposite, relations_from_kupisch, syzygy, validate_kupisch, Algebra, EnumerationSpec,
    RelationSystem, Syzygy,
};
use proptest::prelude::*;

fn admissible(c: &[usize]) -> bool {
    let n = c.len();
    c.iter().all(|&x| x >= 2) && (0..n).all(|i| c[(i + 1) % n] + 1 >= c[i])
}

fn kupisch() -> impl Strategy<Value = Algebra> {
    (1usize..=6, 2usize..=8)
        .prop_flat_map(|(n, first)| {
            prop::collection::vec(0usize..=3, n - 1).prop_map(move |steps| {
                let mut c = vec![first];
                for s in steps {
                    let prev = *c.last().unwrap();
                    // Lengths may drop by at most one and otherwise grow.
                    let next = if s == 0 {
                        prev.saturating_sub(1).max(2)
                    } else {
                        prev + s - 1
                    };
                    c.push(next.min(9));
                }
                c
            })
        })
        .prop_filter("cyclic condition", |c| admissible(c))
        .prop_map(|c| Algebra::new(c).unwrap())
}

proptest! {
    #[test]
    fn relations_round_trip(a in kupisch()) {
        let rels = relations_from_kupisch(&a);
        prop_assert_eq!(&kupisch_from_relations(&rels).unwrap(), &a);
        let text = rels.to_string();
        prop_assert_eq!(text.parse::<RelationSystem>().unwrap(), rels);
    }

    #[test]
    fn opposite_is_an_involution(a in kupisch()) {
        let op = opposite(&a);
        prop_assert_eq!(op.rank(), a.rank());
        prop_assert_eq!(op.total_length(), a.total_length());
        prop_assert_eq!(opposite(&op), a);
    }

    #[test]
    fn syzygy_bookkeeping(a in kupisch()) {
        for m in indecomposables(&a) {
            match syzygy(&a, &m) {
                Syzygy::Zero => prop_assert!(m.is_projective(&a)),
                Syzygy::Module(k) => {
                    prop_assert_eq!(k.len + m.len, a.proj_len(m.top));
                    prop_assert_eq!(k.socle(&a), a.proj_socle(m.top));
                }
            }
        }
    }

    #[test]
    fn rank_sequence_is_nonincreasing(a in kupisch()) {
        let r = rank_sequence(&a, &indecomposables(&a));
        prop_assert!(r.windows(2).all(|w| w[0] >= w[1]), "{:?}", r);
    }

    #[test]
    fn dimension_inequalities(a in kupisch()) {
        let d = dimension_report(&a);
        prop_assert!(d.del <= nakayama::Dim::Finite(d.phi_dim));
        prop_assert!(d.findim <= d.phi_dim);
        if let nakayama::Dim::Finite(g) = d.gldim {
            prop_assert_eq!(d.findim, g);
            prop_assert_eq!(d.phi_dim, g);
        }
    }

    #[test]
    fn canonical_form_is_a_least_rotation(a in kupisch()) {
        let c = canonicalize(&a);
        let n = a.rank();
        let rotations: BTreeSet<Vec<usize>> = (0..n)
            .map(|k| a.lengths()[k..].iter().chain(&a.lengths()[..k]).copied().collect())
            .collect();
        prop_assert_eq!(Some(&c.lengths().to_vec()), rotations.iter().next());
        prop_assert_eq!(canonicalize(&c), c);
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for dedupe in [false, true] {
        for n in 1..=4 {
            for max_len in 2..=5 {
                let mut want = BTreeSet::new();
                let mut stack = vec![vec![]];
                while let Some(c) = stack.pop() {
                    if c.len() == n {
                        if admissible(&c) {
                            let a = Algebra::new(c).unwrap();
                            want.insert(if dedupe { canonicalize(&a) } else { a });
                        }
                        continue;
                    }
                    for x in 2..=max_len {
                        let mut d: Vec<usize> = c.clone();
                        d.push(x);
                        stack.push(d);
                    }
                }
                let spec = EnumerationSpec::new(n, n, max_len, dedupe).unwrap();
                let got: Vec<Algebra> = enumerate_kupisch(&spec).collect();
                let got_set: BTreeSet<Algebra> = got.iter().cloned().collect();
                assert_eq!(got.len(), got_set.len(), "duplicates n={n} L={max_len}");
                assert_eq!(got_set, want, "n={n} L={max_len} dedupe={dedupe}");
            }
        }
    }
}

#[test]
fn validation_agrees_with_brute_force() {
    for n in 1..=3 {
        for c in (0..8usize.pow(n as u32)).map(|mut k| {
            (0..n)
                .map(|_| {
                    let x = k % 8;
                    k /= 8;
                    x
                })
                .collect::<Vec<_>>()
        }) {
            assert_eq!(validate_kupisch(n, &c).is_ok(), admissible(&c), "{c:?}");
        }
    }
}
