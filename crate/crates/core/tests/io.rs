mod common;

use common::*;
use jumpomega::io::{
    automaton_from_json, automaton_to_json, masked_from_json, masked_to_json, semilinear_from_json,
    semilinear_to_json, to_dot,
};
use jumpomega::masked::masked_equivalent;
use jumpomega::Limits;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn automata_survive_json(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sigma = alphabet(if r.gen_bool(0.5) { "ab" } else { "abc" });
        let n = r.gen_range(1..=6);
        let a = random_buchi(&mut r, &sigma, n);
        let text = automaton_to_json(&a);
        let back = automaton_from_json(&text).unwrap();
        prop_assert_eq!(&back, a.automaton());
        prop_assert_eq!(automaton_to_json(&back), text);
        let dot = to_dot(&back);
        prop_assert!(dot.starts_with("digraph"));
        prop_assert_eq!(dot.matches("doublecircle").count(), back.states().filter(|&q| back.is_accepting(q)).count());
    }

    #[test]
    fn sets_survive_json(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sigma = alphabet(if r.gen_bool(0.5) { "ab" } else { "abc" });
        let m = random_masked(&mut r, &sigma);
        let back = masked_from_json(&masked_to_json(&m)).unwrap();
        prop_assert!(masked_equivalent(&back, &m, &Limits::default()).unwrap());
        prop_assert_eq!(masked_to_json(&back), masked_to_json(&m));

        let s = small_set(&mut r, sigma.len());
        let (alpha, t) = semilinear_from_json(&semilinear_to_json(&sigma, &s)).unwrap();
        prop_assert_eq!(alpha, sigma);
        prop_assert_eq!(t, s);
    }
}
