mod common;

use common::*;
use jumpomega::automata::fixtures::universal;
use jumpomega::automata::{buchi_accepts_up, BuchiAutomaton, Builder};
use jumpomega::jumping::jumping_parikh;
use jumpomega::oracle::brute_window_member;
use jumpomega::windows::{
    ewindow_construct, ewindow_member_bounded, kwindow_construct, kwindow_member_up, KWindow,
};
use jumpomega::Limits;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn construction_agrees_with_brute_force(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let sigma = alphabet("ab");
        let n = r.gen_range(1..=3);
        let a = random_buchi(&mut r, &sigma, n);
        let l = Limits::default();
        let bk = kwindow_construct(&a, k, &l).unwrap();
        prop_assert!(bk.num_states() <= k.pow(sigma.len() as u32) * n + n);
        let on_the_fly = KWindow::new(&a, k).unwrap();
        for w in up_suite(&sigma, 3, 3) {
            let explicit = buchi_accepts_up(&bk, &w);
            prop_assert_eq!(explicit, on_the_fly.accepts(&w), "{}", w.render(&sigma));
            prop_assert_eq!(explicit, brute_window_member(&a, k, &w, 1).unwrap(), "{}", w.render(&sigma));
        }
    }

    #[test]
    fn windows_refine_jumping(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sigma = alphabet(if r.gen_bool(0.5) { "ab" } else { "abc" });
        let n = r.gen_range(1..=4);
        let a = random_buchi(&mut r, &sigma, n);
        let l = Limits::default();
        let image = jumping_parikh(&a, &l).unwrap();
        for w in up_suite(&sigma, 2, 3) {
            let jumping = image_member(&image, &w);
            // a window of one letter allows no reordering
            prop_assert_eq!(kwindow_member_up(&a, 1, &w, &l).unwrap(), buchi_accepts_up(&a, &w));
            for k in 1..=3 {
                prop_assert!(!kwindow_member_up(&a, k, &w, &l).unwrap() || jumping);
            }
            prop_assert!(!ewindow_member_bounded(&a, &w, 4).unwrap().is_member() || jumping);
        }
    }

    #[test]
    fn existential_windows_recover_the_jumping_language(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sigma = alphabet("ab");
        let n = r.gen_range(1..=3);
        let a = random_buchi(&mut r, &sigma, n);
        let l = Limits::default();
        let b = ewindow_construct(&a, &l).unwrap();
        let image = jumping_parikh(&a, &l).unwrap();
        for w in up_suite(&sigma, 2, 2) {
            let found = ewindow_member_bounded(&b, &w, 6).unwrap().is_member();
            let jumping = image_member(&image, &w);
            prop_assert!(!found || jumping, "{}", w.render(&sigma));
        }
    }
}

/// Deterministic automaton for the words with infinitely many `a` and `b`:
/// it waits for an `a`, then for a `b`, and accepts on completing the round.
fn both_letters_recur() -> BuchiAutomaton {
    let mut b = Builder::new(alphabet("ab"));
    let (wait_a, wait_b, done) = (
        b.add_state("wait_a"),
        b.add_state("wait_b"),
        b.add_state("done"),
    );
    b.set_initial(wait_a);
    b.set_accepting(done);
    for q in [wait_a, done] {
        b.add_transition(q, 0, wait_b);
        b.add_transition(q, 1, wait_a);
    }
    b.add_transition(wait_b, 0, wait_b);
    b.add_transition(wait_b, 1, done);
    BuchiAutomaton::new(b.build())
}

#[test]
fn permutation_closed_languages_are_window_stable() {
    let sigma = alphabet("ab");
    let l = Limits::default();
    for a in [both_letters_recur(), universal("ab")] {
        assert!(a.is_deterministic());
        for k in 1..=3 {
            for w in up_suite(&sigma, 3, 4) {
                let expected = buchi_accepts_up(&a, &w);
                assert_eq!(
                    kwindow_member_up(&a, k, &w, &l).unwrap(),
                    expected,
                    "k={k} {}",
                    w.render(&sigma)
                );
            }
        }
    }
    let d = both_letters_recur();
    for w in up_suite(&sigma, 3, 4) {
        assert_eq!(
            buchi_accepts_up(&d, &w),
            w.period().contains(&0) && w.period().contains(&1)
        );
    }
}
