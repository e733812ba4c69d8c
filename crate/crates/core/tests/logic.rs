use std::collections::BTreeMap;

use discmath::logic::{
    are_equivalent, is_contradiction, is_satisfiable, is_valid, parse_formula, truth_table, Formula,
};
use proptest::prelude::*;

const ATOMS: [&str; 4] = ["p", "q", "r", "s"];

fn formula(depth: u32) -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![
        8 => (0..ATOMS.len()).prop_map(|i| Formula::atom(ATOMS[i])),
        1 => any::<bool>().prop_map(Formula::Constant),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::implies(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Formula::iff(l, r)),
        ]
    })
    .boxed()
}

/// Independent evaluator over a map, written without the library's evaluator.
fn eval_oracle(f: &Formula, env: &BTreeMap<&str, bool>) -> bool {
    match f {
        Formula::Atom(a) => env[a.as_str()],
        Formula::Constant(b) => *b,
        Formula::Not(g) => !eval_oracle(g, env),
        Formula::And(l, r) => eval_oracle(l, env) && eval_oracle(r, env),
        Formula::Or(l, r) => eval_oracle(l, env) || eval_oracle(r, env),
        Formula::Implies(l, r) => !eval_oracle(l, env) || eval_oracle(r, env),
        Formula::Iff(l, r) => eval_oracle(l, env) == eval_oracle(r, env),
    }
}

fn all_envs() -> Vec<BTreeMap<&'static str, bool>> {
    (0..16u32)
        .map(|m| {
            ATOMS
                .iter()
                .enumerate()
                .map(|(i, a)| (*a, m >> i & 1 == 1))
                .collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn validity_dualities(f in formula(6)) {
        let nf = Formula::not(f.clone());
        prop_assert_eq!(is_valid(&f), is_contradiction(&nf));
        prop_assert_eq!(is_satisfiable(&f), !is_valid(&nf));
        prop_assert_eq!(is_valid(&f), all_envs().iter().all(|e| eval_oracle(&f, e)));
    }

    #[test]
    fn equivalence_is_validity_of_iff(f in formula(4), g in formula(4)) {
        prop_assert_eq!(are_equivalent(&f, &g), is_valid(&Formula::iff(f.clone(), g.clone())));
        prop_assert_eq!(
            are_equivalent(&f, &g),
            all_envs().iter().all(|e| eval_oracle(&f, e) == eval_oracle(&g, e))
        );
    }

    #[test]
    fn table_shape_and_order(f in formula(6)) {
        let t = truth_table(&f);
        let n = t.atoms.len();
        prop_assert_eq!(t.rows.len(), 1usize << n);
        prop_assert_eq!(&t.atoms, &f.atoms());
        for (i, row) in t.rows.iter().enumerate() {
            for (j, v) in row.values.iter().enumerate() {
                // first atom slowest, true before false
                let block = 1usize << (n - 1 - j);
                prop_assert_eq!(*v, (i / block) % 2 == 0);
            }
            let env: BTreeMap<&str, bool> =
                t.atoms.iter().map(|a| a.as_str()).zip(row.values.iter().copied()).collect();
            prop_assert_eq!(row.result, eval_oracle(&f, &env));
        }
    }

    #[test]
    fn render_parse_round_trip(f in formula(6)) {
        let text = f.to_string();
        prop_assert_eq!(parse_formula(&text).unwrap(), f, "rendered as {}", text);
    }
}

#[test]
fn classic_equivalences() {
    let eq =
        |a: &str, b: &str| are_equivalent(&parse_formula(a).unwrap(), &parse_formula(b).unwrap());
    assert!(eq("~(p & q)", "~p | ~q"));
    assert!(eq("~(p | q)", "~p & ~q"));
    assert!(eq("p -> q", "~q -> ~p"));
    assert!(eq("p -> q", "~p | q"));
    assert!(eq("p <-> q", "(p -> q) & (q -> p)"));
    assert!(!eq("p -> q", "q -> p"));
}
