use std::collections::BTreeSet;

use discmath::finite::{compose, ClosureKind, FiniteFunction, FiniteSet, FunctionQuery, Relation};
use proptest::prelude::*;

fn relation() -> impl Strategy<Value = Relation<u8>> {
    (1u8..=7).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), (n as usize) * (n as usize)).prop_map(
            move |bits| {
                let domain: FiniteSet<u8> = (0..n).collect();
                let pairs = (0..n)
                    .flat_map(|a| (0..n).map(move |b| (a, b)))
                    .zip(bits)
                    .filter_map(|(p, keep)| keep.then_some(p))
                    .collect();
                Relation::new(domain, pairs).unwrap()
            },
        )
    })
}

/// Pairs joined by a path of length ≥ 1, by depth-first search from each node.
fn reachability(r: &Relation<u8>) -> BTreeSet<(u8, u8)> {
    let mut out = BTreeSet::new();
    for &start in r.domain() {
        let mut stack = vec![start];
        let mut seen = BTreeSet::new();
        while let Some(x) = stack.pop() {
            for &(a, b) in r.pairs() {
                if a == x && seen.insert(b) {
                    stack.push(b);
                }
            }
        }
        out.extend(seen.into_iter().map(|b| (start, b)));
    }
    out
}

fn pairs_of(r: &Relation<u8>) -> BTreeSet<(u8, u8)> {
    r.pairs().iter().copied().collect()
}

/// Equivalence relation from a random labelling: x ~ y iff same label.
fn equivalence() -> impl Strategy<Value = Relation<u8>> {
    (1u8..=7).prop_flat_map(|n| {
        proptest::collection::vec(0u8..4, n as usize).prop_map(move |labels| {
            Relation::from_predicate((0..n).collect(), |a, b| {
                labels[*a as usize] == labels[*b as usize]
            })
        })
    })
}

fn function(max_dom: u8, max_cod: u8) -> impl Strategy<Value = FiniteFunction<u8, u8>> {
    (1..=max_dom, 1..=max_cod).prop_flat_map(|(d, c)| {
        proptest::collection::vec(0..c, d as usize).prop_map(move |vals| {
            FiniteFunction::from_fn((0..d).collect(), (0..c).collect(), |x| vals[*x as usize])
                .unwrap()
        })
    })
}

/// Functions with codomain exactly `0..m`.
fn function_into(max_dom: u8, m: u8) -> impl Strategy<Value = FiniteFunction<u8, u8>> {
    (1..=max_dom).prop_flat_map(move |d| {
        proptest::collection::vec(0..m, d as usize).prop_map(move |vals| {
            FiniteFunction::from_fn((0..d).collect(), (0..m).collect(), |x| vals[*x as usize])
                .unwrap()
        })
    })
}

/// Functions with domain exactly `0..m`.
fn function_from(m: u8, max_cod: u8) -> impl Strategy<Value = FiniteFunction<u8, u8>> {
    (1..=max_cod).prop_flat_map(move |c| {
        proptest::collection::vec(0..c, m as usize).prop_map(move |vals| {
            FiniteFunction::from_fn((0..m).collect(), (0..c).collect(), |x| vals[*x as usize])
                .unwrap()
        })
    })
}

fn bijection() -> impl Strategy<Value = FiniteFunction<u8, u8>> {
    (1u8..=7)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<u8>>()).prop_shuffle())
        .prop_map(|perm| {
            let n = perm.len() as u8;
            FiniteFunction::from_fn((0..n).collect(), (0..n).map(|x| x + 100).collect(), |x| {
                perm[*x as usize] + 100
            })
            .unwrap()
        })
}

fn injection_oracle(f: &FiniteFunction<u8, u8>) -> bool {
    let d: Vec<u8> = f.domain().iter().copied().collect();
    d.iter()
        .all(|x| d.iter().all(|y| x == y || f.apply(x) != f.apply(y)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transitive_closure_is_reachability(r in relation()) {
        let c = r.closure(ClosureKind::Transitive);
        prop_assert!(r.pairs().is_subset(c.pairs()));
        prop_assert!(c.is_transitive());
        prop_assert_eq!(pairs_of(&c), reachability(&r));
        prop_assert_eq!(c.domain(), r.domain());
    }

    #[test]
    fn reflexive_and_symmetric_closures(r in relation()) {
        let refl = r.closure(ClosureKind::Reflexive);
        let mut want = pairs_of(&r);
        want.extend(r.domain().iter().map(|&x| (x, x)));
        prop_assert_eq!(pairs_of(&refl), want);
        prop_assert!(refl.is_reflexive());

        let sym = r.closure(ClosureKind::Symmetric);
        let mut want = pairs_of(&r);
        want.extend(r.pairs().iter().map(|&(a, b)| (b, a)));
        prop_assert_eq!(pairs_of(&sym), want);
        prop_assert!(sym.is_symmetric());
    }

    #[test]
    fn quotient_is_a_partition(r in equivalence()) {
        let classes = r.quotient().unwrap();
        let mut seen = BTreeSet::new();
        for class in &classes {
            prop_assert!(!class.is_empty());
            for x in class {
                prop_assert!(seen.insert(*x), "{} in two classes", x);
                for y in class {
                    prop_assert!(r.relates(x, y));
                }
            }
        }
        prop_assert_eq!(seen, r.domain().iter().copied().collect::<BTreeSet<_>>());
    }

    #[test]
    fn injectivity_matches_all_pairs(f in function(6, 6)) {
        prop_assert_eq!(f.query(FunctionQuery::Injective), injection_oracle(&f));
        prop_assert_eq!(f.query(FunctionQuery::Surjective), f.image() == *f.codomain());
    }

    #[test]
    fn bijections_invert(f in bijection()) {
        prop_assert!(f.is_bijective());
        let inv = f.invert().unwrap();
        prop_assert!(inv.is_left_inverse_of(&f));
        prop_assert_eq!(compose(&inv, &f).unwrap(), FiniteFunction::identity(f.domain().clone()));
    }

    #[test]
    fn non_bijections_refuse_inversion(f in function(5, 5)) {
        prop_assert_eq!(f.invert().is_ok(), f.is_bijective());
    }

    #[test]
    fn composition_preserves_injectivity(
        (f, g) in (1u8..=5).prop_flat_map(|m| (function_into(5, m), function_from(m, 6)))
    ) {
        let gf = compose(&g, &f).unwrap();
        if f.is_injective() && g.is_injective() {
            prop_assert!(gf.is_injective());
        }
        if f.is_surjective() && g.is_surjective() {
            prop_assert!(gf.is_surjective());
        }
    }
}
